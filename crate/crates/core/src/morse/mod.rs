//! Discrete Morse theory on the CW model of `Z_K(D^n, S^{n-1})`.
//!
//! The disk `D^n` carries the acyclic matching `e_-^{i+1} → e_+^i`,
//! `e_•^n → e_+^{n-1}`, leaving `e_-^0` critical. On the product it is
//! applied one coordinate at a time, which leaves only cells with
//! coordinates in `{e_-^0, e_+^{n-1}, e_•^n}` unmatched. Those are written
//! as sign vectors over `-`, `+`, `*`.

mod labeling;
mod matching;
mod recursive;
mod sign;
mod structure;

pub use labeling::{
    is_shedding_compatible, may_come_last, order_to_relabeling, shedding_compatible_order, DEFAULT_ORDER_BUDGET,
};
pub use matching::{
    boundary_cycle_matching, build_matching, critical_sign_vectors, l_monotonicity_violations, l_value,
    matching_digraph_edges, verify_acyclic, MatchEdge, Matching,
};
pub use recursive::{critical_recursive, CritSet, CritSolver};
pub use sign::{Sign, SignVector};
pub use structure::{
    compatible_relabeling, contractible_y, dual_is_vertex_decomposable, last_vertex_sheds_dual, link_inclusion, morse_betti, morse_histogram,
    nonface_certificate, shedding_split, simplex_boundary_test, support_violations, tilde_violations, triangle,
    ContractibleY, LinkInclusion, NonfaceCertificate, SheddingSplit, SimplexTest, TriangleReport,
};

use crate::cw_homology::CellModel;
use crate::error::Result;
use crate::simplicial::SimplicialComplex;

/// Unmatched cells of the inductive matching on the explicit model.
pub fn critical_direct(k: &SimplicialComplex, n: usize) -> Result<CritSet> {
    critical_direct_with_budget(k, n, crate::cw_homology::DEFAULT_CELL_BUDGET)
}

pub fn critical_direct_with_budget(k: &SimplicialComplex, n: usize, budget: usize) -> Result<CritSet> {
    let model = CellModel::moment_angle_with_budget(k, n, budget)?;
    critical_sign_vectors(&model, &build_matching(&model))
}
