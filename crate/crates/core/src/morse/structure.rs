//! Checks of the structure of the critical cells: the corollary on supports,
//! the `c ↦ c̃` closure, the restriction lemma, minimal non-face
//! certificates, the split at a shedding vertex and the contractible
//! subcomplex `Y`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::labeling::{order_to_relabeling, shedding_compatible_order};
use super::matching::{build_matching, verify_acyclic};
use super::recursive::{CritSet, CritSolver};
use super::sign::{Sign, SignVector};
use crate::cw_homology::{betti_moment_angle_with_budget, betti_of_model, wedge_formula, CellModel, Prime};
use crate::error::{Error, Result};
use crate::simplicial::{FaceSet, SimplicialComplex};
use crate::vertex_decomp::{decomposing_vertices, is_vertex_decomposable_with_budget, VdSolver};

/// Number of critical cells per dimension, `(-, ..., -)` in dimension 0.
pub fn morse_histogram(crit: &CritSet, n: usize) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for c in crit {
        *out.entry(c.dim(n)).or_default() += 1;
    }
    out
}

pub fn morse_betti(k: &SimplicialComplex, n: usize) -> BTreeMap<usize, usize> {
    morse_histogram(&CritSolver::new().crit(k), n)
}

/// `K°` is vertex decomposable, within the default node budget.
pub fn dual_is_vertex_decomposable(k: &SimplicialComplex) -> Result<bool> {
    is_vertex_decomposable_with_budget(&k.alexander_dual(), VdSolver::default_budget(k.m()))
}

/// Every singleton is a face of `K`, and `m` splits `K°`: `link_{K°}(m)` and
/// `K° ∖ m` are vertex decomposable with no common facet. When `m` is not a
/// vertex of `K°` the link is void and this reduces to `K°` being vertex
/// decomposable.
pub fn last_vertex_sheds_dual(k: &SimplicialComplex) -> bool {
    let m = k.m();
    if m == 0 || !k.has_all_singletons() {
        return false;
    }
    let dual = k.alexander_dual();
    if dual.has_vertex(m) {
        decomposing_vertices(&dual).contains(&m)
    } else {
        is_vertex_decomposable_with_budget(&dual, VdSolver::default_budget(m)).unwrap_or(false)
    }
}

fn check_length(k: &SimplicialComplex, c: &SignVector) -> Result<()> {
    if c.len() != k.m() {
        return Err(Error::Precondition(format!("sign vector {c} has length {}, expected {}", c.len(), k.m())));
    }
    Ok(())
}

/// Violations of the support corollary for one critical cell `c` of `K`,
/// as human-readable messages.
pub fn support_violations(solver: &mut CritSolver, k: &SimplicialComplex, c: &SignVector) -> Vec<String> {
    let m = k.m();
    let supp = c.supp();
    let mut out = Vec::new();
    for i in 1..=m {
        let a = FaceSet::from_vertices(supp.vertices().filter(|&v| v > i));
        let link = k.link_face(a);
        if !solver.is_critical(&link.prefix(i), &c.prefix(i)) {
            out.push(format!("{c}: prefix {i} not critical for link(A_{i})|[{i}]"));
        }
        if supp.contains(i) && solver.is_critical(&link.prefix(i - 1), &c.prefix(i - 1)) {
            out.push(format!("{c}: prefix {} critical for link(A_{i})|[{}]", i - 1, i - 1));
        }
    }
    let first_plus = c.sgn_min(Sign::Plus);
    if let Some(b) = c.sgn_min(Sign::Bullet) {
        if !first_plus.is_some_and(|p| p < b) {
            out.push(format!("{c}: c(•) present without an earlier +"));
        }
    }
    for i in supp.vertices() {
        let ok = (1..i).any(|j| {
            c.get(j) == Sign::Plus && !k.contains(supp.insert(j)) && k.contains(supp.remove(i).insert(j))
        });
        if !ok {
            out.push(format!("{c}: no witness + for the • at {i}"));
        }
    }
    if first_plus.is_none() && !c.is_bottom() {
        out.push(format!("{c}: no + but not the base point"));
    }
    for i in c.positions(Sign::Plus).vertices() {
        if k.contains(supp.insert(i)) {
            out.push(format!("{c}: supp ∪ {{{i}}} is a face"));
        }
    }
    out
}

/// Critical cells whose `c̃` is not critical.
pub fn tilde_violations(crit: &CritSet) -> Vec<SignVector> {
    crit.iter().filter(|c| !crit.contains(&c.tilde())).cloned().collect()
}

/// Both sides of the restriction lemma for a cell with exactly one `+`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplexTest {
    /// `I = {c(+)} ∪ supp(c)`.
    pub support: FaceSet,
    /// `c ∈ Crit(K)`.
    pub critical: bool,
    /// `K_I = 2^I ∖ {I}`.
    pub restriction_is_boundary: bool,
    /// `c_I ∈ Crit(K_I)`.
    pub restricted_critical: bool,
}

impl SimplexTest {
    pub fn holds(&self) -> bool {
        self.critical == (self.restriction_is_boundary && self.restricted_critical)
    }
}

pub fn simplex_boundary_test(solver: &mut CritSolver, k: &SimplicialComplex, c: &SignVector) -> Result<SimplexTest> {
    check_length(k, c)?;
    if c.count(Sign::Plus) != 1 {
        return Err(Error::Precondition(format!("{c} must have exactly one +")));
    }
    let plus = c.sgn_min(Sign::Plus).expect("one +");
    let support = c.supp().insert(plus);
    let restricted = SignVector::new(support.vertices().map(|i| c.get(i)).collect());
    let k_i = k.induced(support);
    Ok(SimplexTest {
        support,
        critical: solver.is_critical(k, c),
        restriction_is_boundary: k_i == SimplicialComplex::simplex_boundary(support.len()),
        restricted_critical: solver.is_critical(&k_i, &restricted),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonfaceCertificate {
    /// `{J(c)} ∪ supp(c)`.
    pub face: FaceSet,
    pub minimal_nonface: bool,
    /// `K°` is vertex decomposable and `c` is critical.
    pub hypothesis_met: bool,
}

/// `{J(c)} ∪ supp(c)`, which is a minimal non-face whenever `K°` is vertex
/// decomposable and `c` is a critical cell with a `•`. Evaluated on any
/// input; `hypothesis_met` says whether the guarantee applies.
pub fn nonface_certificate(solver: &mut CritSolver, k: &SimplicialComplex, c: &SignVector) -> Result<NonfaceCertificate> {
    check_length(k, c)?;
    if c.sgn_min(Sign::Bullet).is_none() {
        return Err(Error::Precondition(format!("{c} has no •")));
    }
    let j = c.j_index().ok_or_else(|| Error::Precondition(format!("{c} has no + before its first •")))?;
    let face = c.supp().insert(j);
    Ok(NonfaceCertificate {
        face,
        minimal_nonface: k.is_minimal_nonface(face),
        hypothesis_met: solver.is_critical(k, c) && dual_is_vertex_decomposable(k)?,
    })
}

/// The three pieces of `Crit(K)` when `m` sheds from `K°`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheddingSplit {
    /// `Crit_{m-1} × -`.
    pub minus: CritSet,
    /// `Crit_{m-1} × +`.
    pub plus: CritSet,
    /// `Crit(link_K(m)) × •`.
    pub bullet: CritSet,
    /// Union of the three minus `(-, ..., -, +)` and `(-, ..., -, •)`.
    pub formula: CritSet,
    pub recursive: CritSet,
}

impl SheddingSplit {
    pub fn holds(&self) -> bool {
        self.formula == self.recursive
    }
}

pub fn shedding_split(solver: &mut CritSolver, k: &SimplicialComplex) -> Result<SheddingSplit> {
    if !last_vertex_sheds_dual(k) {
        return Err(Error::HypothesisNotMet(format!(
            "vertex {} is not a shedding vertex of the dual, or a singleton is missing",
            k.m()
        )));
    }
    let m = k.m();
    let prev = solver.crit(&k.prefix(m - 1));
    let link = solver.crit(&k.link(m)?);
    let minus: CritSet = prev.iter().map(|c| c.with(Sign::Minus)).collect();
    let plus: CritSet = prev.iter().map(|c| c.with(Sign::Plus)).collect();
    let bullet: CritSet = link.iter().map(|c| c.with(Sign::Bullet)).collect();
    let base = SignVector::bottom(m - 1);
    let excluded = [base.with(Sign::Plus), base.with(Sign::Bullet)];
    let formula = minus.iter().chain(&plus).chain(&bullet).filter(|c| !excluded.contains(c)).cloned().collect();
    Ok(SheddingSplit { minus, plus, bullet, formula, recursive: solver.crit(k).as_ref().clone() })
}

/// The subcomplex `Y ⊆ Z_{K∖m}` obtained from `Z_{link_K(m)}` by adding
/// `c^•` (position `J(c)` turned into `•`) for each non-base critical cell
/// `c` of the link.
///
/// `closed` records whether these cells already form a subcomplex; all
/// remaining fields describe the closure, which is `Y` itself when `closed`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContractibleY {
    pub cells: usize,
    /// Every face of every listed cell is listed.
    pub closed: bool,
    pub closure_cells: usize,
    /// Every cell of the closure is a cell of `Z_{K∖m}`.
    pub inside_deletion: bool,
    /// The inductive matching on the closure pairs each `c^•` with `c`.
    pub bullet_edges_matched: bool,
    pub acyclic: bool,
    pub critical_cells: usize,
    /// Unreduced Betti numbers of the closure over `GF(2)`.
    pub betti: BTreeMap<i32, usize>,
}

impl ContractibleY {
    /// The closure lies in `Z_{K∖m}` and has the homology of a point.
    pub fn closure_is_acyclic_space(&self) -> bool {
        self.inside_deletion && self.betti == BTreeMap::from([(0, 1)])
    }

    /// `Y` is a subcomplex whose matching leaves exactly one critical cell.
    pub fn holds(&self) -> bool {
        self.closed
            && self.closure_is_acyclic_space()
            && self.bullet_edges_matched
            && self.acyclic
            && self.critical_cells == 1
    }
}

pub fn contractible_y(solver: &mut CritSolver, k: &SimplicialComplex, n: usize, budget: usize) -> Result<ContractibleY> {
    if !last_vertex_sheds_dual(k) {
        return Err(Error::HypothesisNotMet(format!("vertex {} is not a shedding vertex of the dual", k.m())));
    }
    let m = k.m();
    let link = k.link(m)?;
    let deletion = k.deletion(m)?;
    let mut cells = CellModel::moment_angle_with_budget(&link, n, budget)?.cells();
    let mut pairs = Vec::new();
    for c in solver.crit(&link).iter().filter(|c| !c.is_bottom()) {
        let j = c.j_index().ok_or_else(|| Error::Invariant(format!("critical cell {c} has no J")))?;
        let mut up = c.clone();
        up.set(j, Sign::Bullet);
        pairs.push((up.to_cell(n), c.to_cell(n)));
        cells.push(up.to_cell(n));
    }
    let listed = CellModel::from_cells(n, m - 1, &cells)?;
    let closed = listed.is_closed();
    let model = if closed { listed } else { listed.closure() };
    let matching = build_matching(&model);
    let bullet_edges_matched = pairs.iter().all(|(up, down)| {
        let (u, d) = (model.index_of(up), model.index_of(down));
        u.is_some() && d.is_some() && matching.partner(u.unwrap()) == d
    });
    Ok(ContractibleY {
        cells: cells.len(),
        closed,
        closure_cells: model.len(),
        inside_deletion: (0..model.len()).all(|i| deletion.contains(model.cell(i).supp())),
        bullet_edges_matched,
        acyclic: verify_acyclic(&model, &matching),
        critical_cells: matching.critical_indices().len(),
        betti: betti_of_model(&model, Prime::TWO)?.nonzero(),
    })
}

/// Reduced homology of the pair `Z_{link_K(m)} ⊆ Z_{K∖m}`. The inclusion is
/// zero on reduced homology exactly when every connecting map is onto, i.e.
/// `b_d(X, A) = b̃_d(X) + b̃_{d-1}(A)` for all `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkInclusion {
    pub link: BTreeMap<i32, usize>,
    pub deletion: BTreeMap<i32, usize>,
    pub relative: BTreeMap<i32, usize>,
    pub zero_on_homology: bool,
}

pub fn link_inclusion(k: &SimplicialComplex, n: usize, p: Prime, budget: usize) -> Result<LinkInclusion> {
    let m = k.m();
    if m == 0 || !k.has_vertex(m) {
        return Err(Error::Precondition(format!("vertex {m} is not a vertex of K")));
    }
    let sub = CellModel::moment_angle_with_budget(&k.link(m)?, n, budget)?;
    let ambient = CellModel::moment_angle_with_budget(&k.deletion(m)?, n, budget)?;
    let link = betti_of_model(&sub, p)?.to_reduced().nonzero();
    let deletion = betti_of_model(&ambient, p)?.to_reduced().nonzero();
    let ranks = ambient.relative_chain_complex(&sub)?.betti(p);
    let relative: BTreeMap<i32, usize> =
        ranks.iter().enumerate().filter(|(_, &r)| r > 0).map(|(d, &r)| (d as i32, r)).collect();
    let top = ranks.len() as i32 + 1;
    let get = |t: &BTreeMap<i32, usize>, d: i32| t.get(&d).copied().unwrap_or(0);
    let zero_on_homology = (0..=top).all(|d| get(&relative, d) == get(&deletion, d) + get(&link, d - 1));
    Ok(LinkInclusion { link, deletion, relative, zero_on_homology })
}

/// Morse counts, cellular Betti numbers and wedge counts of `Z_K(D^n, S^{n-1})`,
/// all unreduced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleReport {
    /// Morse counts with the vertices labelled as given.
    pub morse: BTreeMap<usize, usize>,
    pub oracle: BTreeMap<usize, usize>,
    pub wedge: BTreeMap<usize, usize>,
    /// All singletons are faces and `K°` is vertex decomposable.
    pub hypothesis_met: bool,
    /// `morse == oracle == wedge`.
    pub equal: bool,
    /// Morse counts dominate the Betti numbers in every dimension.
    pub morse_bounds_oracle: bool,
    /// A shedding-compatible order (old labels in their new positions), when
    /// the search finds one.
    pub compatible_order: Option<Vec<usize>>,
    /// Morse counts after relabelling by `compatible_order`.
    pub morse_compatible: Option<BTreeMap<usize, usize>>,
}

impl TriangleReport {
    /// `morse_compatible == oracle == wedge`.
    pub fn equal_compatible(&self) -> bool {
        self.morse_compatible.as_ref().is_some_and(|m| *m == self.oracle && self.oracle == self.wedge)
    }
}

/// [`shedding_compatible_order`] and the relabelled complex.
pub fn compatible_relabeling(k: &SimplicialComplex, node_budget: usize) -> Result<Option<(Vec<usize>, SimplicialComplex)>> {
    match shedding_compatible_order(k, node_budget)? {
        Some(order) => {
            let relabeled = k.relabel(&order_to_relabeling(&order))?;
            Ok(Some((order, relabeled)))
        }
        None => Ok(None),
    }
}

pub fn triangle(k: &SimplicialComplex, n: usize, p: Prime, cell_budget: usize, node_budget: usize) -> Result<TriangleReport> {
    let morse = morse_betti(k, n);
    let oracle: BTreeMap<usize, usize> =
        betti_moment_angle_with_budget(k, n, p, cell_budget)?.nonzero().into_iter().map(|(d, r)| (d as usize, r)).collect();
    let wedge = wedge_formula(k, n, p)?.unreduced(!k.is_void());
    let hypothesis_met = k.has_all_singletons() && dual_is_vertex_decomposable(k)?;
    let equal = morse == oracle && oracle == wedge;
    let morse_bounds_oracle = oracle.iter().all(|(d, &b)| morse.get(d).copied().unwrap_or(0) >= b);
    let (compatible_order, morse_compatible) = match compatible_relabeling(k, node_budget)? {
        Some((order, relabeled)) => (Some(order), Some(morse_betti(&relabeled, n))),
        None => (None, None),
    };
    Ok(TriangleReport { morse, oracle, wedge, hypothesis_met, equal, morse_bounds_oracle, compatible_order, morse_compatible })
}
