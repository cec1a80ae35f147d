use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use super::sign::{Sign, SignVector};
use crate::simplicial::SimplicialComplex;

pub type CritSet = BTreeSet<SignVector>;

/// Critical sign vectors from the prefix/link recursion, without building
/// any cells. The result does not depend on `n`.
///
/// With `C_k = Crit(K|_[k])` and `L_k = Crit(link_{K|_[k+1]}(k+1))`:
/// `C_{k+1} = C_k × - ∪ (C_k ∖ L_k) × + ∪ (L_k ∖ C_k) × •`.
#[derive(Default)]
pub struct CritSolver {
    memo: HashMap<SimplicialComplex, Arc<CritSet>>,
}

impl CritSolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn crit(&mut self, k: &SimplicialComplex) -> Arc<CritSet> {
        if let Some(hit) = self.memo.get(k) {
            return hit.clone();
        }
        let m = k.m();
        let out = if m == 0 {
            if k.is_void() {
                CritSet::new()
            } else {
                CritSet::from([SignVector::new(Vec::new())])
            }
        } else {
            let prev = self.crit(&k.prefix(m - 1));
            let link = self.crit(&k.link(m).expect("m is a vertex"));
            let mut out = CritSet::new();
            for c in prev.iter() {
                out.insert(c.with(Sign::Minus));
                if !link.contains(c) {
                    out.insert(c.with(Sign::Plus));
                }
            }
            for c in link.iter() {
                if !prev.contains(c) {
                    out.insert(c.with(Sign::Bullet));
                }
            }
            out
        };
        let out = Arc::new(out);
        self.memo.insert(k.clone(), out.clone());
        out
    }

    /// `c ∈ Crit(K)`.
    pub fn is_critical(&mut self, k: &SimplicialComplex, c: &SignVector) -> bool {
        if c.len() != k.m() {
            return false;
        }
        self.crit(k).contains(c)
    }
}

pub fn critical_recursive(k: &SimplicialComplex) -> CritSet {
    CritSolver::new().crit(k).as_ref().clone()
}
