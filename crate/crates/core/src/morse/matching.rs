use std::collections::BTreeSet;

use petgraph::algo::toposort;
use petgraph::graph::DiGraph;
use serde::Serialize;

use super::sign::SignVector;
use crate::cw_homology::{CellModel, DiskCell, ProductCell};
use crate::error::{Error, Result};

const UNMATCHED: u32 = u32::MAX;

/// `source → target`: `target` is a facet of `source` in the Hasse diagram,
/// differing only in `coordinate` (1-based). Indices refer to a
/// [`CellModel`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MatchEdge {
    pub source: usize,
    pub target: usize,
    pub coordinate: usize,
}

/// A partial matching on the cells of a [`CellModel`]; every cell is in at
/// most one edge.
#[derive(Clone, Debug)]
pub struct Matching {
    partner: Vec<u32>,
    edges: Vec<MatchEdge>,
}

impl Matching {
    pub fn empty(cells: usize) -> Self {
        Matching { partner: vec![UNMATCHED; cells], edges: Vec::new() }
    }

    /// An arbitrary matching given as `(source, target)` index pairs. Each
    /// pair must be a Hasse edge of `model` and no cell may repeat.
    pub fn from_pairs(model: &CellModel, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut out = Matching::empty(model.len());
        for &(s, t) in pairs {
            if s >= model.len() || t >= model.len() {
                return Err(Error::InvalidCell(format!("index pair ({s}, {t}) outside the model")));
            }
            let coordinate = hasse_coordinate(model, s, t)
                .ok_or_else(|| Error::InvalidCell(format!("{} is not a facet of {}", model.cell(t), model.cell(s))))?;
            if out.is_matched(s) || out.is_matched(t) {
                return Err(Error::InvalidCell(format!("cell repeated in ({}, {})", model.cell(s), model.cell(t))));
            }
            out.push(MatchEdge { source: s, target: t, coordinate });
        }
        Ok(out)
    }

    fn push(&mut self, e: MatchEdge) {
        self.partner[e.source] = e.target as u32;
        self.partner[e.target] = e.source as u32;
        self.edges.push(e);
    }

    pub fn edges(&self) -> &[MatchEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_matched(&self, i: usize) -> bool {
        self.partner[i] != UNMATCHED
    }

    pub fn partner(&self, i: usize) -> Option<usize> {
        (self.partner[i] != UNMATCHED).then_some(self.partner[i] as usize)
    }

    /// Indices of unmatched cells, in model order.
    pub fn critical_indices(&self) -> Vec<usize> {
        (0..self.partner.len()).filter(|&i| !self.is_matched(i)).collect()
    }

    /// Each edge is a Hasse edge, no cell is repeated and the partner table
    /// agrees with the edge list.
    pub fn is_valid(&self, model: &CellModel) -> bool {
        let mut seen = vec![false; model.len()];
        for e in &self.edges {
            if seen[e.source] || seen[e.target] {
                return false;
            }
            seen[e.source] = true;
            seen[e.target] = true;
            if hasse_coordinate(model, e.source, e.target) != Some(e.coordinate) {
                return false;
            }
        }
        (0..model.len()).all(|i| seen[i] == self.is_matched(i))
    }
}

/// Coordinate (1-based) in which `t` is a facet of `s`.
fn hasse_coordinate(model: &CellModel, s: usize, t: usize) -> Option<usize> {
    let target = model.codes(t);
    model.faces_of(s).into_iter().find(|(_, f, _)| f.as_slice() == target).map(|(k, _, _)| k + 1)
}

/// Disk code of the partner of `code` under `e_-^{i+1} → e_+^i`,
/// `e_•^n → e_+^{n-1}`, when `code` is a source.
fn disk_partner(code: u8, n: usize) -> Option<u8> {
    let n = n as u8;
    if (1..n).contains(&code) {
        Some(code + n - 1)
    } else if code == 2 * n {
        Some(2 * n - 1)
    } else {
        None
    }
}

/// The inductive matching: stage `k` pairs still-unmatched cells that differ
/// only in coordinate `k` by a disk-matching pair, for `k = 1, ..., m`.
pub fn build_matching(model: &CellModel) -> Matching {
    let n = model.n();
    let mut out = Matching::empty(model.len());
    let mut buf = vec![0u8; model.m()];
    for k in 0..model.m() {
        for i in 0..model.len() {
            if out.is_matched(i) {
                continue;
            }
            let codes = model.codes(i);
            let Some(p) = disk_partner(codes[k], n) else { continue };
            buf.copy_from_slice(codes);
            buf[k] = p;
            if let Some(j) = model.index_of_codes(&buf) {
                if !out.is_matched(j) {
                    out.push(MatchEdge { source: i, target: j, coordinate: k + 1 });
                }
            }
        }
    }
    out
}

/// Edges of `G^ℳ`: Hasse edges `c → c'` pointing down, with matched pairs
/// reversed. Faces missing from the model are skipped.
pub fn matching_digraph_edges(model: &CellModel, matching: &Matching) -> Vec<(u32, u32)> {
    let mut edges = Vec::new();
    for i in 0..model.len() {
        for (_, face, _) in model.faces_of(i) {
            let Some(j) = model.index_of_codes(&face) else { continue };
            if matching.partner(i) == Some(j) {
                edges.push((j as u32, i as u32));
            } else {
                edges.push((i as u32, j as u32));
            }
        }
    }
    edges
}

/// `G^ℳ` has no directed cycle.
pub fn verify_acyclic(model: &CellModel, matching: &Matching) -> bool {
    let mut g = DiGraph::<(), ()>::with_capacity(model.len(), 0);
    for _ in 0..model.len() {
        g.add_node(());
    }
    g.extend_with_edges(matching_digraph_edges(model, matching));
    toposort(&g, None).is_ok()
}

/// `Σ dim(c_i) + #{i : c_i is a plus-cell}`.
pub fn l_value(cell: &ProductCell, n: usize) -> usize {
    cell.coords.iter().map(|c| c.dim(n) + usize::from(c.is_plus())).sum()
}

/// Edges of `G^ℳ` on which `ℓ` misbehaves. A reversed matched edge must
/// keep `ℓ`; a Hasse edge may drop it by 0, 1 or 2 (0 exactly when a
/// minus-cell or `e_•^n` is replaced by a plus-cell).
pub fn l_monotonicity_violations(model: &CellModel, matching: &Matching) -> Vec<(usize, usize)> {
    let n = model.n();
    let l: Vec<usize> = (0..model.len()).map(|i| l_value(&model.cell(i), n)).collect();
    matching_digraph_edges(model, matching)
        .into_iter()
        .map(|(a, b)| (a as usize, b as usize))
        .filter(|&(a, b)| {
            let reversed = model.dim(a) < model.dim(b);
            if reversed {
                l[a] != l[b]
            } else {
                l[b] > l[a] || l[a] - l[b] > 2
            }
        })
        .collect()
}

/// Unmatched cells as sign vectors. Fails if an unmatched cell has a
/// coordinate outside `{e_-^0, e_+^{n-1}, e_•^n}`.
pub fn critical_sign_vectors(model: &CellModel, matching: &Matching) -> Result<BTreeSet<SignVector>> {
    matching
        .critical_indices()
        .into_iter()
        .map(|i| {
            let cell = model.cell(i);
            SignVector::from_cell(&cell, model.n())
                .ok_or_else(|| Error::Invariant(format!("critical cell {cell} is not a sign vector")))
        })
        .collect()
}

/// Disk cells of `D^1 × D^1` matched around the boundary square so that
/// `G^ℳ` contains the cycle through all eight boundary cells.
pub fn boundary_cycle_matching(model: &CellModel) -> Result<Matching> {
    use DiskCell::{Bullet, Minus, Plus};
    let pairs = [
        ([Bullet, Minus(0)], [Plus(0), Minus(0)]),
        ([Plus(0), Bullet], [Plus(0), Plus(0)]),
        ([Bullet, Plus(0)], [Minus(0), Plus(0)]),
        ([Minus(0), Bullet], [Minus(0), Minus(0)]),
    ];
    let idx = |c: [DiskCell; 2]| {
        let cell = ProductCell::new(c.to_vec());
        model.index_of(&cell).ok_or_else(|| Error::InvalidCell(cell.to_string()))
    };
    let pairs = pairs.iter().map(|&(s, t)| Ok((idx(s)?, idx(t)?))).collect::<Result<Vec<_>>>()?;
    Matching::from_pairs(model, &pairs)
}
