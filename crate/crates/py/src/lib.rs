//! Python bindings: `import zkmorse`.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use zk::cw_homology::{betti_moment_angle_with_budget, wedge_formula, CellModel, Prime, DEFAULT_CELL_BUDGET};
use zk::morse::{self, DEFAULT_ORDER_BUDGET};
use zk::vertex_decomp::{is_vertex_decomposable, shedding_sequence};

fn value_error(e: zk::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn prime(p: u32) -> PyResult<Prime> {
    Prime::new(p).map_err(value_error)
}

/// A simplicial complex on the ground set `[m]`, vertices numbered from 1.
#[pyclass(name = "SimplicialComplex", module = "zkmorse", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Complex {
    inner: zk::SimplicialComplex,
}

impl From<zk::SimplicialComplex> for Complex {
    fn from(inner: zk::SimplicialComplex) -> Self {
        Complex { inner }
    }
}

#[pymethods]
impl Complex {
    /// `facets` lists vertex sets; `[[]]` is `{∅}` and `void=True` the void complex.
    #[new]
    #[pyo3(signature = (m, facets, void = false))]
    fn new(m: usize, facets: Vec<Vec<usize>>, void: bool) -> PyResult<Self> {
        zk::SimplicialComplex::from_vertex_lists(m, &facets, void).map(Self::from).map_err(value_error)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        zk::SimplicialComplex::from_json_str(text).map(Self::from).map_err(value_error)
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn facets(&self) -> Vec<Vec<usize>> {
        self.inner.facets().iter().map(|f| f.to_vec()).collect()
    }

    fn is_void(&self) -> bool {
        self.inner.is_void()
    }

    fn has_all_singletons(&self) -> bool {
        self.inner.has_all_singletons()
    }

    fn alexander_dual(&self) -> Self {
        self.inner.alexander_dual().into()
    }

    fn link(&self, v: usize) -> PyResult<Self> {
        self.inner.link(v).map(Self::from).map_err(value_error)
    }

    fn deletion(&self, v: usize) -> PyResult<Self> {
        self.inner.deletion(v).map(Self::from).map_err(value_error)
    }

    /// Vertex `i` becomes `perm[i - 1]`.
    fn relabel(&self, perm: Vec<usize>) -> PyResult<Self> {
        self.inner.relabel(&perm).map(Self::from).map_err(value_error)
    }

    fn is_vertex_decomposable(&self) -> bool {
        is_vertex_decomposable(&self.inner)
    }

    /// `(v_1, ..., v_l)` with `v_l` shed first, or `None`.
    fn shedding_sequence(&self) -> Option<Vec<usize>> {
        shedding_sequence(&self.inner).map(|c| c.order)
    }

    /// Old labels in their new positions, for an order under which the
    /// matching is perfect; `None` if the search finds none.
    fn compatible_order(&self) -> PyResult<Option<Vec<usize>>> {
        morse::shedding_compatible_order(&self.inner, DEFAULT_ORDER_BUDGET).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!("SimplicialComplex(m={}, facets={:?})", self.inner.m(), self.facets())
    }
}

/// Critical sign vectors (`'-'`, `'+'`, `'*'`); `method` is `"recursive"`
/// or `"direct"`.
#[pyfunction]
#[pyo3(signature = (k, n = 2, method = "recursive"))]
fn critical_cells(k: PyRef<'_, Complex>, n: usize, method: &str) -> PyResult<Vec<String>> {
    let crit = match method {
        "recursive" => morse::critical_recursive(&k.inner),
        "direct" => morse::critical_direct(&k.inner, n).map_err(value_error)?,
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    };
    Ok(crit.iter().map(|c| c.to_string()).collect())
}

/// Critical cells per dimension.
#[pyfunction]
#[pyo3(signature = (k, n = 2))]
fn morse_betti(k: PyRef<'_, Complex>, n: usize) -> BTreeMap<usize, usize> {
    morse::morse_betti(&k.inner, n)
}

/// Unreduced Betti numbers of the cellular model over `GF(p)`.
#[pyfunction]
#[pyo3(signature = (k, n = 2, p = 2))]
fn betti(k: PyRef<'_, Complex>, n: usize, p: u32) -> PyResult<BTreeMap<i32, usize>> {
    let table = betti_moment_angle_with_budget(&k.inner, n, prime(p)?, DEFAULT_CELL_BUDGET).map_err(value_error)?;
    Ok(table.nonzero())
}

/// Sphere counts of the wedge formula, unreduced.
#[pyfunction]
#[pyo3(signature = (k, n = 2, p = 2))]
fn wedge(k: PyRef<'_, Complex>, n: usize, p: u32) -> PyResult<BTreeMap<usize, usize>> {
    let w = wedge_formula(&k.inner, n, prime(p)?).map_err(value_error)?;
    Ok(w.unreduced(!k.inner.is_void()))
}

/// The inductive matching on the explicit model has no directed cycle.
#[pyfunction]
#[pyo3(signature = (k, n = 2))]
fn matching_is_acyclic(k: PyRef<'_, Complex>, n: usize) -> PyResult<bool> {
    let model = CellModel::moment_angle(&k.inner, n).map_err(value_error)?;
    Ok(morse::verify_acyclic(&model, &morse::build_matching(&model)))
}

/// Morse counts, Betti numbers and wedge counts side by side, as a dict.
#[pyfunction]
#[pyo3(signature = (k, n = 2, p = 2))]
fn triangle<'py>(py: Python<'py>, k: PyRef<'_, Complex>, n: usize, p: u32) -> PyResult<Bound<'py, PyAny>> {
    let t = morse::triangle(&k.inner, n, prime(p)?, DEFAULT_CELL_BUDGET, DEFAULT_ORDER_BUDGET).map_err(value_error)?;
    let mut doc = serde_json::to_value(&t).expect("report serialises");
    doc["equal_compatible"] = t.equal_compatible().into();
    py.import("json")?.call_method1("loads", (doc.to_string(),))
}

#[pymodule]
#[pyo3(name = "zkmorse")]
fn zkmorse_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Complex>()?;
    m.add_function(wrap_pyfunction!(critical_cells, m)?)?;
    m.add_function(wrap_pyfunction!(morse_betti, m)?)?;
    m.add_function(wrap_pyfunction!(betti, m)?)?;
    m.add_function(wrap_pyfunction!(wedge, m)?)?;
    m.add_function(wrap_pyfunction!(matching_is_acyclic, m)?)?;
    m.add_function(wrap_pyfunction!(triangle, m)?)?;
    Ok(())
}
