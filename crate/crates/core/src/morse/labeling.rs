//! Vertex orders under which the inductive matching is perfect for a complex
//! with vertex decomposable dual.
//!
//! The matching is built coordinate by coordinate, so its critical cells
//! depend on the labels. The count matches the Betti numbers when the last
//! vertex sheds from `K°` and the same holds, with one common order, for
//! every complex met in the prefix/link recursion.

use crate::error::{Error, Result};
use crate::simplicial::{renumbering_after_removal, FaceSet, SimplicialComplex};
use crate::vertex_decomp::satisfies_shedding_condition;

/// Default cap on search nodes for [`shedding_compatible_order`].
pub const DEFAULT_ORDER_BUDGET: usize = 1 << 20;

/// `v` may be the last coordinate of `K`: either `v` is not a vertex of `K°`
/// or `link_{K°}(v)` and `K° ∖ v` have no common facet.
pub fn may_come_last(k: &SimplicialComplex, v: usize) -> bool {
    let dual = k.alexander_dual();
    !dual.has_vertex(v) || satisfies_shedding_condition(&dual, v)
}

/// [`may_come_last`] after discarding the ghost vertices of `K` (those `i`
/// with `{i} ∉ K`). A ghost coordinate only contributes a factor `S^{n-1}`
/// and the matching treats it as such, so a ghost may always come last.
fn node_ok(k: &SimplicialComplex, v: usize) -> bool {
    if !k.has_vertex(v) {
        return true;
    }
    let verts = k.facets().iter().fold(FaceSet::EMPTY, |acc, f| acc.union(*f));
    let position = verts.vertices().filter(|&u| u <= v).count();
    may_come_last(&k.induced(verts), position)
}

/// Every complex in the recursion (`K|_[k]` and the links `link_{K|_[k+1]}(k+1)`,
/// recursively) admits its own last vertex, ghost vertices aside.
pub fn is_shedding_compatible(k: &SimplicialComplex) -> bool {
    let m = k.m();
    if m == 0 || k.is_void() {
        return true;
    }
    node_ok(k, m) && is_shedding_compatible(&k.prefix(m - 1)) && is_shedding_compatible(&k.link(m).expect("m is a vertex"))
}

/// A shedding-compatible order, as the list of old vertex labels in their new
/// positions (`order[j-1]` becomes vertex `j`). Candidates for the last
/// position are tried in increasing order; `budget` caps the search nodes.
pub fn shedding_compatible_order(k: &SimplicialComplex, budget: usize) -> Result<Option<Vec<usize>>> {
    let mut nodes = 0usize;
    search(&[k.clone()], k.m(), &mut nodes, budget)
}

/// The permutation for [`SimplicialComplex::relabel`] realising `order`.
pub fn order_to_relabeling(order: &[usize]) -> Vec<usize> {
    let mut perm = vec![0; order.len()];
    for (j, &old) in order.iter().enumerate() {
        perm[old - 1] = j + 1;
    }
    perm
}

fn search(family: &[SimplicialComplex], r: usize, nodes: &mut usize, budget: usize) -> Result<Option<Vec<usize>>> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::NodeBudget(budget));
    }
    if r == 0 {
        return Ok(Some(Vec::new()));
    }
    for v in 1..=r {
        if !family.iter().all(|k| node_ok(k, v)) {
            continue;
        }
        let mut next: Vec<SimplicialComplex> = Vec::with_capacity(2 * family.len());
        for k in family {
            for sub in [k.deletion(v)?, k.link(v)?] {
                if !sub.is_void() && !next.contains(&sub) {
                    next.push(sub);
                }
            }
        }
        if let Some(rest) = search(&next, r - 1, nodes, budget)? {
            let back = renumbering_after_removal(r, v);
            let mut order: Vec<usize> = rest.into_iter().map(|i| back[i - 1]).collect();
            order.push(v);
            return Ok(Some(order));
        }
    }
    Ok(None)
}
