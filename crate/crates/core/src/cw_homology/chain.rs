use super::field::{Field, Prime};
use crate::error::{Error, Result};

/// Sparse column of a boundary matrix: `(row, coefficient)` pairs with
/// strictly increasing rows and nonzero integer coefficients.
pub type Column = Vec<(u32, i8)>;

/// A finite chain complex with integer boundary matrices, graded from
/// `min_dim`. `boundaries[k]` holds the columns of `∂` on the cells of
/// dimension `min_dim + k`; rows index cells one dimension lower.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    min_dim: i32,
    sizes: Vec<usize>,
    boundaries: Vec<Vec<Column>>,
}

impl ChainComplex {
    /// Checks shapes and `∂∘∂ = 0` over the integers (hence over every
    /// `GF(p)`).
    pub fn new(min_dim: i32, boundaries: Vec<Vec<Column>>) -> Result<Self> {
        let sizes: Vec<usize> = boundaries.iter().map(Vec::len).collect();
        for (k, cols) in boundaries.iter().enumerate() {
            let rows = if k == 0 { 0 } else { sizes[k - 1] };
            for col in cols {
                if col.windows(2).any(|w| w[0].0 >= w[1].0) || col.iter().any(|&(r, c)| r as usize >= rows || c == 0) {
                    return Err(Error::Invariant(format!("malformed boundary column in degree {}", min_dim + k as i32)));
                }
            }
        }
        let cx = ChainComplex { min_dim, sizes, boundaries };
        cx.check_boundary_squared()?;
        Ok(cx)
    }

    fn check_boundary_squared(&self) -> Result<()> {
        for k in 2..self.boundaries.len() {
            let lower = &self.boundaries[k - 1];
            let mut acc = vec![0i64; self.sizes[k - 2]];
            let mut touched = Vec::new();
            for col in &self.boundaries[k] {
                for &(r, c) in col {
                    for &(r2, c2) in &lower[r as usize] {
                        if acc[r2 as usize] == 0 {
                            touched.push(r2 as usize);
                        }
                        acc[r2 as usize] += c as i64 * c2 as i64;
                    }
                }
                for &t in &touched {
                    if acc[t] != 0 {
                        return Err(Error::Invariant(format!(
                            "boundary of boundary is nonzero in degree {}",
                            self.min_dim + k as i32
                        )));
                    }
                }
                touched.clear();
            }
        }
        Ok(())
    }

    pub fn min_dim(&self) -> i32 {
        self.min_dim
    }

    /// Number of cells per degree, starting at `min_dim`.
    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Ranks of every boundary map over `GF(p)`: entry `k` is the rank of
    /// `∂` leaving degree `min_dim + k`.
    ///
    /// Column-by-column Gaussian elimination, top degree first. A column whose
    /// cell already appeared as a pivot row one degree up reduces to zero and
    /// is skipped.
    pub fn boundary_ranks(&self, p: Prime) -> Vec<usize> {
        let field = Field::new(p);
        let top = self.boundaries.len();
        let mut ranks = vec![0; top];
        let mut cleared: Vec<bool> = Vec::new();
        for k in (1..top).rev() {
            let rows = self.sizes[k - 1];
            let mut pivot_col: Vec<u32> = vec![u32::MAX; rows];
            let mut reduced: Vec<Vec<(u32, u32)>> = Vec::new();
            let mut next_cleared = vec![false; rows];
            for (j, col) in self.boundaries[k].iter().enumerate() {
                if cleared.get(j).copied().unwrap_or(false) || col.is_empty() {
                    continue;
                }
                let mut v: Vec<(u32, u32)> =
                    col.iter().map(|&(r, c)| (r, field.reduce(c as i64))).filter(|&(_, c)| c != 0).collect();
                while let Some(&(low, coef)) = v.last() {
                    let q = pivot_col[low as usize];
                    if q == u32::MAX {
                        break;
                    }
                    let other = &reduced[q as usize];
                    let other_low = other.last().expect("pivot columns are nonzero").1;
                    let scale = field.neg(field.mul(coef, field.inv(other_low)));
                    v = axpy(&field, &v, scale, other);
                }
                if let Some(&(low, _)) = v.last() {
                    pivot_col[low as usize] = reduced.len() as u32;
                    next_cleared[low as usize] = true;
                    reduced.push(v);
                    ranks[k] += 1;
                }
            }
            cleared = next_cleared;
        }
        ranks
    }

    /// Betti numbers `b_d = #cells_d - rank ∂_d - rank ∂_{d+1}` over `GF(p)`.
    pub fn betti(&self, p: Prime) -> Vec<usize> {
        let ranks = self.boundary_ranks(p);
        (0..self.sizes.len())
            .map(|k| self.sizes[k] - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
            .collect()
    }
}

/// `a + s * b` on sorted sparse vectors.
fn axpy(field: &Field, a: &[(u32, u32)], s: u32, b: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let c = field.mul(s, b[j].1);
            if c != 0 {
                out.push((b[j].0, c));
            }
            j += 1;
        } else {
            let c = field.add_scaled(a[i].1, s, b[j].1);
            if c != 0 {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Triangle boundary (a circle): 3 vertices, 3 edges.
    fn circle() -> ChainComplex {
        let d0 = vec![vec![]; 3];
        let d1 = vec![vec![(0, -1), (1, 1)], vec![(1, -1), (2, 1)], vec![(0, -1), (2, 1)]];
        ChainComplex::new(0, vec![d0, d1]).unwrap()
    }

    #[test]
    fn circle_homology() {
        for p in [2, 3, 5] {
            assert_eq!(circle().betti(Prime::new(p).unwrap()), vec![1, 1]);
        }
    }

    #[test]
    fn projective_plane_like_torsion_depends_on_field() {
        // one vertex, one loop a, one 2-cell with boundary 2a
        let d0 = vec![vec![]];
        let d1 = vec![vec![]];
        let d2 = vec![vec![(0, 2)]];
        let cx = ChainComplex::new(0, vec![d0, d1, d2]).unwrap();
        assert_eq!(cx.betti(Prime::TWO), vec![1, 1, 1]);
        assert_eq!(cx.betti(Prime::THREE), vec![1, 0, 0]);
    }

    #[test]
    fn rejects_nonzero_boundary_squared() {
        let d0 = vec![vec![]; 2];
        let d1 = vec![vec![(0, -1), (1, 1)]];
        let d2 = vec![vec![(0, 1)]];
        assert!(ChainComplex::new(0, vec![d0, d1, d2]).is_err());
    }
}
