//! Vertex decomposability in the non-pure sense, shedding vertices and
//! shedding sequences.
//!
//! Conventions: the void complex counts as vertex decomposable (it is the
//! dual of a full simplex), and shedding candidates are tried in increasing
//! vertex order so every certificate is reproducible.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::simplicial::{renumbering_after_removal, FaceSet, SimplicialComplex};

/// Facets of `link_K(v)` and `K \ v` share nothing, compared as subsets of
/// the ambient ground set. No simplex short-circuit.
pub fn satisfies_shedding_condition(k: &SimplicialComplex, v: usize) -> bool {
    if !k.has_vertex(v) {
        return false;
    }
    let link: Vec<FaceSet> = k.facets().iter().filter(|f| f.contains(v)).map(|f| f.remove(v)).collect();
    let deletion = SimplicialComplex::from_faces_unchecked(k.m(), k.facets().iter().map(|f| f.remove(v)));
    !link.iter().any(|f| deletion.facets().contains(f))
}

/// Whether `v` can be shed from `K`.
///
/// Returns false when `{v}` is not a face. A simplex is already decomposable
/// by the base case, so every one of its vertices is accepted; otherwise this
/// is [`satisfies_shedding_condition`].
pub fn is_shedding_vertex(k: &SimplicialComplex, v: usize) -> bool {
    if !k.has_vertex(v) {
        return false;
    }
    k.is_simplex() || satisfies_shedding_condition(k, v)
}

/// Recursive certificate: which vertex was shed at each node, in the local
/// numbering of that node (links and deletions are renumbered to `[m-1]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SheddingTree {
    /// A simplex, `{∅}` or the void complex.
    Base,
    Split { vertex: usize, deletion: Arc<SheddingTree>, link: Arc<SheddingTree> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheddingCertificate {
    /// `(v_1, ..., v_ℓ)` in the labels of the input complex: `v_ℓ` is shed
    /// first.
    pub order: Vec<usize>,
    pub tree: Arc<SheddingTree>,
}

impl SheddingCertificate {
    /// Re-derives vertex decomposability from the tree without any search.
    pub fn replay(&self, k: &SimplicialComplex) -> bool {
        replay_tree(k, &self.tree)
    }
}

fn replay_tree(k: &SimplicialComplex, tree: &SheddingTree) -> bool {
    match tree {
        SheddingTree::Base => k.is_void() || k.is_simplex(),
        SheddingTree::Split { vertex, deletion, link } => {
            !k.is_simplex()
                && satisfies_shedding_condition(k, *vertex)
                && replay_tree(&k.deletion(*vertex).expect("vertex checked"), deletion)
                && replay_tree(&k.link(*vertex).expect("vertex checked"), link)
        }
    }
}

/// Memoised search, keyed on the exact labelled complex. One solver per
/// thread; the table is not shared.
pub struct VdSolver {
    budget: usize,
    nodes: usize,
    memo: HashMap<SimplicialComplex, Option<Arc<SheddingTree>>>,
}

impl VdSolver {
    /// `budget` bounds the number of distinct complexes examined.
    pub fn new(budget: usize) -> Self {
        VdSolver { budget, nodes: 0, memo: HashMap::new() }
    }

    /// Budget large enough for any complex on `[m]`: links and deletions are
    /// indexed by disjoint (deleted, linked) vertex sets, at most `3^m`.
    pub fn default_budget(m: usize) -> usize {
        3usize.saturating_pow(m as u32).max(1)
    }

    pub fn nodes_visited(&self) -> usize {
        self.nodes
    }

    pub fn decompose(&mut self, k: &SimplicialComplex) -> Result<Option<Arc<SheddingTree>>> {
        if let Some(hit) = self.memo.get(k) {
            return Ok(hit.clone());
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::NodeBudget(self.budget));
        }
        let result = if k.is_void() || k.is_simplex() {
            Some(Arc::new(SheddingTree::Base))
        } else {
            let mut found = None;
            for v in 1..=k.m() {
                if !satisfies_shedding_condition(k, v) {
                    continue;
                }
                let Some(deletion) = self.decompose(&k.deletion(v)?)? else { continue };
                let Some(link) = self.decompose(&k.link(v)?)? else { continue };
                found = Some(Arc::new(SheddingTree::Split { vertex: v, deletion, link }));
                break;
            }
            found
        };
        self.memo.insert(k.clone(), result.clone());
        Ok(result)
    }
}

pub fn is_vertex_decomposable(k: &SimplicialComplex) -> bool {
    is_vertex_decomposable_with_budget(k, VdSolver::default_budget(k.m()))
        .expect("the default budget covers every reachable complex")
}

pub fn is_vertex_decomposable_with_budget(k: &SimplicialComplex, budget: usize) -> Result<bool> {
    Ok(VdSolver::new(budget).decompose(k)?.is_some())
}

/// A certificate for `K`, or `None` when `K` is not vertex decomposable.
pub fn shedding_sequence(k: &SimplicialComplex) -> Option<SheddingCertificate> {
    shedding_sequence_with_budget(k, VdSolver::default_budget(k.m()))
        .expect("the default budget covers every reachable complex")
}

pub fn shedding_sequence_with_budget(k: &SimplicialComplex, budget: usize) -> Result<Option<SheddingCertificate>> {
    let Some(tree) = VdSolver::new(budget).decompose(k)? else {
        return Ok(None);
    };
    // Follow the deletion branch, translating local labels back.
    let mut labels: Vec<usize> = (1..=k.m()).collect();
    let mut shed = Vec::new();
    let mut node = &tree;
    while let SheddingTree::Split { vertex, deletion, .. } = node.as_ref() {
        shed.push(labels[vertex - 1]);
        labels = renumbering_after_removal(labels.len(), *vertex).into_iter().map(|i| labels[i - 1]).collect();
        node = deletion;
    }
    shed.reverse();
    Ok(Some(SheddingCertificate { order: shed, tree }))
}

/// Checks `(v_1, ..., v_ℓ)`: each `v_k`, `k < ℓ`, is a shedding vertex of
/// `K \ v_ℓ \ ... \ v_{k+1}` and deleting all of them leaves a simplex.
/// `strict` additionally requires `v_ℓ` to be a shedding vertex of `K`.
pub fn verify_shedding_sequence(k: &SimplicialComplex, order: &[usize], strict: bool) -> bool {
    let mut seen = FaceSet::EMPTY;
    for &v in order {
        if v == 0 || v > k.m() || seen.contains(v) {
            return false;
        }
        seen = seen.insert(v);
    }
    let mut current = k.clone();
    for (idx, &v) in order.iter().enumerate().rev() {
        let last = idx + 1 == order.len();
        if (!last || strict) && !is_shedding_vertex(&current, v) {
            return false;
        }
        current = current.restriction(FaceSet::singleton(v).complement(k.m()));
    }
    current.is_void() || current.is_simplex()
}

/// Vertices `v` that witness decomposability: the shedding condition holds
/// and both `K \ v` and `link_K(v)` are vertex decomposable.
pub fn decomposing_vertices(k: &SimplicialComplex) -> Vec<usize> {
    let mut solver = VdSolver::new(usize::MAX);
    (1..=k.m())
        .filter(|&v| satisfies_shedding_condition(k, v))
        .filter(|&v| {
            let del = k.deletion(v).expect("in range");
            let lk = k.link(v).expect("in range");
            solver.decompose(&del).expect("unbounded").is_some() && solver.decompose(&lk).expect("unbounded").is_some()
        })
        .collect()
}
