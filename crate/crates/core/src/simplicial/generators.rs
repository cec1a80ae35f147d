//! Complex families and corpus generation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FaceSet, Graph, SimplicialComplex, MAX_GROUND_SET};
use crate::error::{Error, Result};

/// The `(k-1)`-skeleton of the simplex on `[m]`: facets are all `k`-subsets.
pub fn skeleton_complex(m: usize, k: usize) -> Result<SimplicialComplex> {
    if m == 0 || m > MAX_GROUND_SET {
        return Err(Error::GroundSetSize(m));
    }
    if k == 0 || k > m {
        return Err(Error::Precondition(format!("skeleton needs 1 <= k <= m, got k = {k}, m = {m}")));
    }
    let facets = (0u32..1 << m).filter(|s| s.count_ones() as usize == k).map(FaceSet::from_bits);
    Ok(SimplicialComplex::from_faces_unchecked(m, facets))
}

/// Clique complex of `g`.
pub fn flag_of_graph(g: &Graph) -> Result<SimplicialComplex> {
    let m = g.m();
    if m == 0 || m > MAX_GROUND_SET {
        return Err(Error::GroundSetSize(m));
    }
    let size = 1usize << m;
    let mut clique = vec![false; size];
    clique[0] = true;
    for mask in 1..size {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        clique[mask] = clique[rest] && (rest as u32) & !g.neighbourhood(v + 1) == 0;
    }
    Ok(SimplicialComplex::from_indicator(m, &clique))
}

fn downward_closure(m: usize, ind: &mut [bool]) {
    for bit in 0..m {
        let b = 1usize << bit;
        for mask in 0..ind.len() {
            if mask & b != 0 && ind[mask] {
                ind[mask ^ b] = true;
            }
        }
    }
}

/// A random complex on `[m]`: between one and `m + 2` random facets, each
/// vertex included with probability 1/2.
pub fn random_complex(m: usize, seed: u64) -> Result<SimplicialComplex> {
    if m == 0 || m > MAX_GROUND_SET {
        return Err(Error::GroundSetSize(m));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=m + 2);
    let facets: Vec<FaceSet> = (0..count).map(|_| FaceSet::from_bits(rng.gen::<u32>() & FaceSet::full(m).bits())).collect();
    Ok(SimplicialComplex::from_faces_unchecked(m, facets))
}

/// A random shifted complex: the shifting closure of a few random faces.
pub fn shifted_random(m: usize, seed: u64) -> Result<SimplicialComplex> {
    if m == 0 || m > 16 {
        return Err(Error::GroundSetSize(m));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = 1usize << m;
    let mut ind = vec![false; size];
    ind[0] = true;
    for _ in 0..rng.gen_range(1..=m) {
        ind[(rng.gen::<u32>() & FaceSet::full(m).bits()) as usize] = true;
    }
    // Shifting a face lowers its bitmask value, so one descending pass per
    // round reaches the fixpoint quickly.
    loop {
        downward_closure(m, &mut ind);
        let mut changed = false;
        for mask in (0..size).rev() {
            if !ind[mask] {
                continue;
            }
            for i in 0..m {
                if mask & (1 << i) == 0 {
                    continue;
                }
                for j in 0..i {
                    if mask & (1 << j) == 0 {
                        let shifted = (mask & !(1 << i)) | (1 << j);
                        if !ind[shifted] {
                            ind[shifted] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(SimplicialComplex::from_indicator(m, &ind))
}

/// Every simplicial complex on `[m]` (labelled, one per face family),
/// including the void complex. Practical for `m <= 5` (7581 complexes at
/// `m = 5`).
pub fn all_complexes(m: usize) -> Result<Vec<SimplicialComplex>> {
    if m == 0 || m > 6 {
        return Err(Error::GroundSetSize(m));
    }
    let mut order: Vec<usize> = (1..1usize << m).collect();
    order.sort_by_key(|s| (s.count_ones(), *s));
    let mut out = vec![SimplicialComplex::void(m)];
    let mut ind = vec![false; 1 << m];
    ind[0] = true;
    enumerate_down_sets(m, &order, 0, &mut ind, &mut out);
    Ok(out)
}

fn enumerate_down_sets(m: usize, order: &[usize], pos: usize, ind: &mut [bool], out: &mut Vec<SimplicialComplex>) {
    if pos == order.len() {
        out.push(SimplicialComplex::from_indicator(m, ind));
        return;
    }
    let s = order[pos];
    let allowed = (0..m).all(|b| s & (1 << b) == 0 || ind[s ^ (1 << b)]);
    if allowed {
        ind[s] = true;
        enumerate_down_sets(m, order, pos + 1, ind, out);
        ind[s] = false;
    }
    enumerate_down_sets(m, order, pos + 1, ind, out);
}
