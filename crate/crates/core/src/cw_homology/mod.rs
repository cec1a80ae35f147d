//! The regular CW model of `Z_K(D^n, S^{n-1})` and homology over prime
//! fields.
//!
//! The model is the subcomplex of `(D^n)^m` made of the product cells whose
//! support (the coordinates carrying `e_•^n`) is a face of `K`. Its Betti
//! numbers, computed by plain elimination, are the ground truth the Morse
//! side is checked against.

mod cells;
mod chain;
mod field;

use std::collections::BTreeMap;

pub use cells::{disk_boundary, CellModel, DiskCell, ProductCell};
pub use chain::{ChainComplex, Column};
pub use field::Prime;

use crate::error::Result;
use crate::simplicial::{FaceSet, SimplicialComplex};

/// Largest ground set the explicit model is built for.
pub const MAX_MODEL_GROUND_SET: usize = 10;

/// Refuse to enumerate more cells than this unless asked to.
pub const DEFAULT_CELL_BUDGET: usize = 5_000_000;

/// Ranks of homology over `GF(p)`, graded from `min_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub prime: Prime,
    pub min_dim: i32,
    pub ranks: Vec<usize>,
    pub cells: Vec<usize>,
    /// True for reduced homology (simplicial tables include the empty face
    /// in degree -1).
    pub reduced: bool,
}

impl BettiTable {
    fn from_chain_complex(cx: &ChainComplex, prime: Prime, reduced: bool) -> Self {
        BettiTable {
            prime,
            min_dim: cx.min_dim(),
            ranks: cx.betti(prime),
            cells: cx.sizes().to_vec(),
            reduced,
        }
    }

    pub fn get(&self, d: i32) -> usize {
        usize::try_from(d - self.min_dim).ok().and_then(|k| self.ranks.get(k).copied()).unwrap_or(0)
    }

    /// Nonzero ranks only.
    pub fn nonzero(&self) -> BTreeMap<i32, usize> {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(k, &r)| (self.min_dim + k as i32, r))
            .collect()
    }

    /// `Σ (-1)^d #cells_d`.
    pub fn euler_from_cells(&self) -> i64 {
        alternating_sum(self.min_dim, &self.cells)
    }

    /// `Σ (-1)^d b_d`.
    pub fn euler_from_ranks(&self) -> i64 {
        alternating_sum(self.min_dim, &self.ranks)
    }

    /// Reduced ranks of an unreduced table of a nonempty space: `b_0 - 1`.
    pub fn to_reduced(&self) -> BettiTable {
        let mut t = self.clone();
        if !self.reduced && self.min_dim == 0 && t.ranks.first().is_some_and(|&b| b > 0) {
            t.ranks[0] -= 1;
        }
        t.reduced = true;
        t
    }
}

fn alternating_sum(min_dim: i32, values: &[usize]) -> i64 {
    values
        .iter()
        .enumerate()
        .map(|(k, &v)| if (min_dim + k as i32).rem_euclid(2) == 0 { v as i64 } else { -(v as i64) })
        .sum()
}

/// Unreduced Betti numbers of `Z_K(D^n, S^{n-1})` over `GF(p)`.
pub fn betti_moment_angle(k: &SimplicialComplex, n: usize, p: Prime) -> Result<BettiTable> {
    betti_moment_angle_with_budget(k, n, p, DEFAULT_CELL_BUDGET)
}

pub fn betti_moment_angle_with_budget(k: &SimplicialComplex, n: usize, p: Prime, budget: usize) -> Result<BettiTable> {
    let model = CellModel::moment_angle_with_budget(k, n, budget)?;
    betti_of_model(&model, p)
}

/// Unreduced Betti numbers of an arbitrary closed cell model.
pub fn betti_of_model(model: &CellModel, p: Prime) -> Result<BettiTable> {
    let cx = model.chain_complex()?;
    Ok(BettiTable::from_chain_complex(&cx, p, false))
}

/// Augmented simplicial chain complex of `K` (degree -1 holds `∅`).
pub fn simplicial_chain_complex(k: &SimplicialComplex) -> Result<ChainComplex> {
    let faces = k.all_faces();
    let top = faces.iter().map(|f| f.len()).max().map_or(0, |s| s + 1);
    let mut by_size: Vec<Vec<FaceSet>> = vec![Vec::new(); top];
    for f in faces {
        by_size[f.len()].push(f);
    }
    let index: Vec<std::collections::HashMap<FaceSet, u32>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, f)| (*f, i as u32)).collect())
        .collect();
    let mut boundaries = Vec::with_capacity(top);
    for (size, fs) in by_size.iter().enumerate() {
        let cols = fs
            .iter()
            .map(|f| {
                let mut col: Column = f
                    .vertices()
                    .enumerate()
                    .map(|(pos, v)| (index[size - 1][&f.remove(v)], if pos % 2 == 0 { 1 } else { -1 }))
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        boundaries.push(cols);
    }
    ChainComplex::new(-1, boundaries)
}

/// Reduced simplicial Betti numbers of the restriction `K_M` over `GF(p)`.
/// `{∅}` has `b̃_{-1} = 1`; the void complex has no homology at all.
pub fn simplicial_betti(k: &SimplicialComplex, subset: FaceSet, p: Prime) -> Result<BettiTable> {
    let cx = simplicial_chain_complex(&k.restriction(subset))?;
    Ok(BettiTable::from_chain_complex(&cx, p, true))
}

/// Sphere counts of the wedge decomposition, by dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeCounts {
    /// `i -> Σ_{M ∉ K} dim H̃_{i - (n-1)#M - 1}(K_M)`; zero entries omitted.
    pub counts: BTreeMap<usize, usize>,
    /// Every singleton is a face, as the wedge theorem assumes.
    pub singletons_present: bool,
}

impl WedgeCounts {
    /// Unreduced ranks of the wedge: one extra class in degree 0 for the
    /// base point of a nonempty space.
    pub fn unreduced(&self, nonempty: bool) -> BTreeMap<usize, usize> {
        let mut out = self.counts.clone();
        if nonempty {
            *out.entry(0).or_default() += 1;
        }
        out
    }
}

pub fn wedge_formula(k: &SimplicialComplex, n: usize, p: Prime) -> Result<WedgeCounts> {
    if n == 0 {
        return Err(crate::Error::InvalidSphereDimension);
    }
    let ind = k.indicator();
    let mut counts = BTreeMap::new();
    for mask in 0..ind.len() {
        if ind[mask] {
            continue;
        }
        let subset = FaceSet::from_bits(mask as u32);
        let table = simplicial_betti(k, subset, p)?;
        for (d, r) in table.nonzero() {
            let i = d + ((n - 1) * subset.len()) as i32 + 1;
            *counts.entry(i as usize).or_default() += r;
        }
    }
    Ok(WedgeCounts { counts, singletons_present: k.has_all_singletons() })
}

/// The set identity behind `Z_{K°}(X, A) = X^m \ Z_K(X, X \ A)`, checked on
/// the index sets `I ⊆ [m]` of coordinates lying in `A`: the three statements
/// "`[m] \ σ ⊆ I` for some `σ ∈ K°`", "`I` meets `[m] \ σ` for every
/// `σ ∈ K`" and "`I ∉ K`" agree for every `I`.
pub fn support_partition_check(k: &SimplicialComplex) -> bool {
    let m = k.m();
    let dual_faces = k.alexander_dual().all_faces();
    let faces = k.all_faces();
    (0u32..1 << m).map(FaceSet::from_bits).all(|i| {
        let in_dual_power = dual_faces.iter().any(|s| s.complement(m).is_subset(i));
        let outside_complement_power = faces.iter().all(|s| i.intersects(s.complement(m)));
        let nonface = !k.contains(i);
        in_dual_power == nonface && outside_complement_power == nonface
    })
}
