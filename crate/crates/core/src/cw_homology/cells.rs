use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use super::chain::{ChainComplex, Column};
use super::{DEFAULT_CELL_BUDGET, MAX_MODEL_GROUND_SET};
use crate::error::{Error, Result};
use crate::simplicial::{FaceSet, SimplicialComplex};

/// A cell of the minimal regular CW structure on `D^n`: two cells
/// `e_-^i, e_+^i` of each dimension `0 <= i <= n-1` (the sphere) and the
/// top cell `e_•^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiskCell {
    Minus(u8),
    Plus(u8),
    Bullet,
}

impl DiskCell {
    pub fn dim(self, n: usize) -> usize {
        match self {
            DiskCell::Minus(i) | DiskCell::Plus(i) => i as usize,
            DiskCell::Bullet => n,
        }
    }

    pub fn is_plus(self) -> bool {
        matches!(self, DiskCell::Plus(_))
    }

    /// Position in the order `Minus(0..n) < Plus(0..n) < Bullet`.
    pub(crate) fn code(self, n: usize) -> u8 {
        match self {
            DiskCell::Minus(i) => i,
            DiskCell::Plus(i) => n as u8 + i,
            DiskCell::Bullet => 2 * n as u8,
        }
    }

    pub(crate) fn from_code(code: u8, n: usize) -> Self {
        let n8 = n as u8;
        if code < n8 {
            DiskCell::Minus(code)
        } else if code < 2 * n8 {
            DiskCell::Plus(code - n8)
        } else {
            DiskCell::Bullet
        }
    }

    fn valid(self, n: usize) -> bool {
        match self {
            DiskCell::Minus(i) | DiskCell::Plus(i) => (i as usize) < n,
            DiskCell::Bullet => true,
        }
    }

    /// All `2n + 1` cells in code order.
    pub fn all(n: usize) -> Vec<DiskCell> {
        (0..=2 * n as u8).map(|c| DiskCell::from_code(c, n)).collect()
    }
}

impl fmt::Display for DiskCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiskCell::Minus(i) => write!(f, "-{i}"),
            DiskCell::Plus(i) => write!(f, "+{i}"),
            DiskCell::Bullet => write!(f, "*"),
        }
    }
}

impl FromStr for DiskCell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidCell(s.to_string());
        if s == "*" {
            return Ok(DiskCell::Bullet);
        }
        let (sign, rest) = s.split_at(s.char_indices().nth(1).map(|(i, _)| i).ok_or_else(bad)?);
        let i: u8 = rest.parse().map_err(|_| bad())?;
        match sign {
            "-" => Ok(DiskCell::Minus(i)),
            "+" => Ok(DiskCell::Plus(i)),
            _ => Err(bad()),
        }
    }
}

/// Cellular boundary in `D^n`:
/// `∂e_±^i = e_+^{i-1} - e_-^{i-1}` for `i >= 1`, `∂e_±^0 = 0`,
/// `∂e_•^n = e_+^{n-1} - e_-^{n-1}`.
pub fn disk_boundary(c: DiskCell, n: usize) -> Vec<(DiskCell, i8)> {
    let below = match c {
        DiskCell::Minus(0) | DiskCell::Plus(0) => return Vec::new(),
        DiskCell::Minus(i) | DiskCell::Plus(i) => i - 1,
        DiskCell::Bullet => n as u8 - 1,
    };
    vec![(DiskCell::Plus(below), 1), (DiskCell::Minus(below), -1)]
}

/// A product cell `c_1 × ... × c_m` of `(D^n)^m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductCell {
    pub coords: Vec<DiskCell>,
}

impl ProductCell {
    pub fn new(coords: Vec<DiskCell>) -> Self {
        ProductCell { coords }
    }

    /// Coordinates carrying the top cell `e_•^n`.
    pub fn supp(&self) -> FaceSet {
        FaceSet::from_vertices(
            self.coords.iter().enumerate().filter(|(_, c)| **c == DiskCell::Bullet).map(|(i, _)| i + 1),
        )
    }

    pub fn dim(&self, n: usize) -> usize {
        self.coords.iter().map(|c| c.dim(n)).sum()
    }

    /// Leibniz rule with sign `(-1)^{dim c_1 + ... + dim c_{k-1}}` on the
    /// `k`-th factor.
    pub fn boundary(&self, n: usize) -> Vec<(ProductCell, i8)> {
        let mut out = Vec::new();
        let mut prefix = 0usize;
        for (k, &c) in self.coords.iter().enumerate() {
            let sign: i8 = if prefix % 2 == 0 { 1 } else { -1 };
            for (face, s) in disk_boundary(c, n) {
                let mut coords = self.coords.clone();
                coords[k] = face;
                out.push((ProductCell { coords }, s * sign));
            }
            prefix += c.dim(n);
        }
        out
    }
}

impl fmt::Display for ProductCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for ProductCell {
    type Err = Error;

    /// Comma-separated disk cells, e.g. `-0,+1,*`.
    fn from_str(s: &str) -> Result<Self> {
        let coords = s.split(',').map(str::parse).collect::<Result<Vec<_>>>()?;
        Ok(ProductCell { coords })
    }
}

enum Index {
    Dense(Vec<u32>),
    Sparse(HashMap<u64, u32>),
}

/// An explicit set of product cells of `(D^n)^m`, sorted by dimension and
/// then lexicographically on the coordinate tuple.
///
/// Cells are stored as flat disk-cell codes; `key` is the mixed-radix number
/// with coordinate 1 most significant.
pub struct CellModel {
    n: usize,
    m: usize,
    codes: Vec<u8>,
    dims: Vec<u32>,
    index: Index,
}

impl CellModel {
    /// The cells of `Z_K(D^n, S^{n-1})`: every `c` with `supp(c) ∈ K`.
    pub fn moment_angle(k: &SimplicialComplex, n: usize) -> Result<Self> {
        Self::moment_angle_with_budget(k, n, DEFAULT_CELL_BUDGET)
    }

    pub fn moment_angle_with_budget(k: &SimplicialComplex, n: usize, budget: usize) -> Result<Self> {
        let m = k.m();
        check_shape(n, m)?;
        let faces = k.all_faces();
        let sphere = 2 * n as u128;
        let needed: u128 = faces.iter().map(|f| sphere.pow((m - f.len()) as u32)).sum();
        if needed > budget as u128 {
            return Err(Error::CellBudget { needed, budget });
        }
        let bullet = 2 * n as u8;
        let mut codes = Vec::with_capacity(needed as usize * m);
        let mut buf = vec![0u8; m];
        let mut count = 0usize;
        for face in faces {
            let free: Vec<usize> = (0..m).filter(|&i| !face.contains(i + 1)).collect();
            for i in 0..m {
                buf[i] = if face.contains(i + 1) { bullet } else { 0 };
            }
            count += 1;
            codes.extend_from_slice(&buf);
            // odometer over the sphere cells on the free coordinates
            while let Some(pos) = free.iter().rposition(|&i| buf[i] + 1 < bullet) {
                buf[free[pos]] += 1;
                for &i in &free[pos + 1..] {
                    buf[i] = 0;
                }
                count += 1;
                codes.extend_from_slice(&buf);
            }
        }
        Ok(Self::from_codes(n, m, codes, count))
    }

    /// A model on an arbitrary cell set (duplicates removed). Use
    /// [`CellModel::is_closed`] to check it is a subcomplex.
    pub fn from_cells(n: usize, m: usize, cells: &[ProductCell]) -> Result<Self> {
        check_shape(n, m)?;
        let mut codes = Vec::with_capacity(cells.len() * m);
        for c in cells {
            if c.coords.len() != m || c.coords.iter().any(|d| !d.valid(n)) {
                return Err(Error::InvalidCell(c.to_string()));
            }
            codes.extend(c.coords.iter().map(|d| d.code(n)));
        }
        Ok(Self::from_codes(n, m, codes, cells.len()))
    }

    fn from_codes(n: usize, m: usize, codes: Vec<u8>, count: usize) -> Self {
        let radix = 2 * n as u64 + 1;
        let key_of = |c: &[u8]| c.iter().fold(0u64, |acc, &x| acc * radix + x as u64);
        let dim_of = |c: &[u8]| c.iter().map(|&x| DiskCell::from_code(x, n).dim(n) as u32).sum::<u32>();
        let mut order: Vec<(u32, u64, usize)> = (0..count)
            .map(|i| {
                let c = &codes[i * m..(i + 1) * m];
                (dim_of(c), key_of(c), i)
            })
            .collect();
        order.sort_unstable();
        order.dedup_by_key(|t| (t.0, t.1));
        let mut sorted = Vec::with_capacity(order.len() * m);
        let mut dims = Vec::with_capacity(order.len());
        for &(d, _, i) in &order {
            sorted.extend_from_slice(&codes[i * m..(i + 1) * m]);
            dims.push(d);
        }
        let space = (radix as u128).pow(m as u32);
        let index = if space <= 1 << 22 {
            let mut dense = vec![u32::MAX; space as usize];
            for (idx, &(_, key, _)) in order.iter().enumerate() {
                dense[key as usize] = idx as u32;
            }
            Index::Dense(dense)
        } else {
            Index::Sparse(order.iter().enumerate().map(|(idx, &(_, key, _))| (key, idx as u32)).collect())
        };
        CellModel { n, m, codes: sorted, dims, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims[i] as usize
    }

    pub(crate) fn codes(&self, i: usize) -> &[u8] {
        &self.codes[i * self.m..(i + 1) * self.m]
    }

    pub fn cell(&self, i: usize) -> ProductCell {
        ProductCell { coords: self.codes(i).iter().map(|&c| DiskCell::from_code(c, self.n)).collect() }
    }

    pub fn cells(&self) -> Vec<ProductCell> {
        (0..self.len()).map(|i| self.cell(i)).collect()
    }

    fn key(&self, codes: &[u8]) -> u64 {
        let radix = 2 * self.n as u64 + 1;
        codes.iter().fold(0u64, |acc, &x| acc * radix + x as u64)
    }

    pub(crate) fn index_of_codes(&self, codes: &[u8]) -> Option<usize> {
        let key = self.key(codes);
        let idx = match &self.index {
            Index::Dense(d) => *d.get(key as usize)?,
            Index::Sparse(h) => *h.get(&key)?,
        };
        (idx != u32::MAX).then_some(idx as usize)
    }

    pub fn index_of(&self, cell: &ProductCell) -> Option<usize> {
        if cell.coords.len() != self.m || cell.coords.iter().any(|d| !d.valid(self.n)) {
            return None;
        }
        let codes: Vec<u8> = cell.coords.iter().map(|d| d.code(self.n)).collect();
        self.index_of_codes(&codes)
    }

    /// Number of cells per dimension `0..=max`.
    pub fn cells_per_dim(&self) -> Vec<usize> {
        let top = self.dims.iter().copied().max().map_or(0, |d| d as usize + 1);
        let mut out = vec![0; top];
        for &d in &self.dims {
            out[d as usize] += 1;
        }
        out
    }

    /// Faces one dimension down, as `(coordinate, face codes, sign)`; the
    /// sign follows [`ProductCell::boundary`].
    pub(crate) fn faces_of(&self, i: usize) -> Vec<(usize, Vec<u8>, i8)> {
        self.faces_of_codes(self.codes(i))
    }

    fn faces_of_codes(&self, c: &[u8]) -> Vec<(usize, Vec<u8>, i8)> {
        let n = self.n;
        let mut out = Vec::with_capacity(2 * self.m);
        let mut prefix = 0usize;
        for k in 0..self.m {
            let cell = DiskCell::from_code(c[k], n);
            let sign: i8 = if prefix % 2 == 0 { 1 } else { -1 };
            for (face, s) in disk_boundary(cell, n) {
                let mut f = c.to_vec();
                f[k] = face.code(n);
                out.push((k, f, s * sign));
            }
            prefix += cell.dim(n);
        }
        out
    }

    /// Every face of every cell is in the model.
    pub fn is_closed(&self) -> bool {
        (0..self.len()).all(|i| self.faces_of(i).iter().all(|(_, f, _)| self.index_of_codes(f).is_some()))
    }

    /// The smallest closed model containing every cell of this one.
    pub fn closure(&self) -> CellModel {
        let mut seen: HashSet<Vec<u8>> = (0..self.len()).map(|i| self.codes(i).to_vec()).collect();
        let mut stack: Vec<Vec<u8>> = seen.iter().cloned().collect();
        while let Some(c) = stack.pop() {
            for (_, face, _) in self.faces_of_codes(&c) {
                if seen.insert(face.clone()) {
                    stack.push(face);
                }
            }
        }
        let count = seen.len();
        let codes: Vec<u8> = seen.into_iter().flatten().collect();
        Self::from_codes(self.n, self.m, codes, count)
    }

    /// Cellular chain complex, graded from 0.
    pub fn chain_complex(&self) -> Result<ChainComplex> {
        self.quotient_chain_complex(&vec![false; self.len()])
    }

    /// Chain complex of the pair `(self, sub)`: the cells of `self` outside
    /// `sub`, with faces in `sub` dropped. `sub` must be a closed model on the
    /// same `n` and `m` whose cells all lie in `self`.
    pub fn relative_chain_complex(&self, sub: &CellModel) -> Result<ChainComplex> {
        if sub.n != self.n || sub.m != self.m || !sub.is_closed() {
            return Err(Error::Precondition("relative chains need a closed subcomplex of the same shape".into()));
        }
        let mut dropped = vec![false; self.len()];
        for i in 0..sub.len() {
            let j = self
                .index_of_codes(sub.codes(i))
                .ok_or_else(|| Error::Precondition(format!("cell {} is not in the ambient model", sub.cell(i))))?;
            dropped[j] = true;
        }
        self.quotient_chain_complex(&dropped)
    }

    fn quotient_chain_complex(&self, dropped: &[bool]) -> Result<ChainComplex> {
        let top = self.dims.iter().copied().max().map_or(0, |d| d as usize + 1);
        let mut position = vec![0u32; self.len()];
        let mut per_dim = vec![0usize; top];
        for i in 0..self.len() {
            if !dropped[i] {
                position[i] = per_dim[self.dim(i)] as u32;
                per_dim[self.dim(i)] += 1;
            }
        }
        let mut boundaries: Vec<Vec<Column>> = per_dim.iter().map(|&s| Vec::with_capacity(s)).collect();
        for i in 0..self.len() {
            if dropped[i] {
                continue;
            }
            let d = self.dim(i);
            let mut col: Column = Vec::new();
            if d > 0 {
                for (_, face, sign) in self.faces_of(i) {
                    let j = self
                        .index_of_codes(&face)
                        .ok_or_else(|| Error::Invariant(format!("cell {} has a face outside the model", self.cell(i))))?;
                    if !dropped[j] {
                        col.push((position[j], sign));
                    }
                }
                col.sort_unstable_by_key(|e| e.0);
            }
            boundaries[d].push(col);
        }
        ChainComplex::new(0, boundaries)
    }
}

fn check_shape(n: usize, m: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidSphereDimension);
    }
    if m > MAX_MODEL_GROUND_SET {
        return Err(Error::ModelGroundSet { m });
    }
    if n * m > 64 || n > 100 {
        return Err(Error::DimensionBound(n * m));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_boundary_convention() {
        assert_eq!(disk_boundary(DiskCell::Bullet, 2), vec![(DiskCell::Plus(1), 1), (DiskCell::Minus(1), -1)]);
        assert!(disk_boundary(DiskCell::Minus(0), 2).is_empty());
        assert!(disk_boundary(DiskCell::Plus(0), 2).is_empty());
        // ∂∂ e_+^2 = 0 for n = 3
        let mut acc: HashMap<DiskCell, i32> = HashMap::new();
        for (f, s) in disk_boundary(DiskCell::Plus(2), 3) {
            for (g, t) in disk_boundary(f, 3) {
                *acc.entry(g).or_default() += (s * t) as i32;
            }
        }
        assert!(acc.values().all(|&v| v == 0));
    }

    #[test]
    fn product_boundary_leibniz() {
        let c = ProductCell::new(vec![DiskCell::Bullet, DiskCell::Minus(0)]);
        let b = c.boundary(1);
        assert_eq!(
            b,
            vec![
                (ProductCell::new(vec![DiskCell::Plus(0), DiskCell::Minus(0)]), 1),
                (ProductCell::new(vec![DiskCell::Minus(0), DiskCell::Minus(0)]), -1),
            ]
        );
        // second factor picks up (-1)^{dim of the first}
        let c = ProductCell::new(vec![DiskCell::Bullet, DiskCell::Bullet]);
        let signs: Vec<i8> = c.boundary(1).into_iter().map(|(_, s)| s).collect();
        assert_eq!(signs, vec![1, -1, -1, 1]);
        let zero_dim = ProductCell::new(vec![DiskCell::Plus(0), DiskCell::Minus(0)]);
        assert!(zero_dim.boundary(3).is_empty());
    }

    #[test]
    fn parse_cells() {
        let c: ProductCell = "-0,+1,*".parse().unwrap();
        assert_eq!(c.coords, vec![DiskCell::Minus(0), DiskCell::Plus(1), DiskCell::Bullet]);
        assert_eq!(c.to_string(), "-0,+1,*");
        assert!("x1".parse::<ProductCell>().is_err());
        assert!("".parse::<ProductCell>().is_err());
    }

    #[test]
    fn enumeration_small_cases() {
        let disk = SimplicialComplex::simplex(1);
        let cells = CellModel::moment_angle(&disk, 2).unwrap().cells();
        assert_eq!(cells.len(), 5);
        let sphere = SimplicialComplex::irrelevant(1);
        assert_eq!(CellModel::moment_angle(&sphere, 2).unwrap().len(), 4);
        assert_eq!(CellModel::moment_angle(&SimplicialComplex::void(3), 2).unwrap().len(), 0);
    }

    #[test]
    fn cells_are_sorted_and_indexed() {
        let k = SimplicialComplex::simplex_boundary(3);
        let model = CellModel::moment_angle(&k, 2).unwrap();
        for i in 1..model.len() {
            let (a, b) = (model.cell(i - 1), model.cell(i));
            assert!((model.dim(i - 1), &a) < (model.dim(i), &b));
        }
        for i in 0..model.len() {
            assert_eq!(model.index_of(&model.cell(i)), Some(i));
            assert!(k.contains(model.cell(i).supp()));
        }
        assert!(model.is_closed());
    }

    #[test]
    fn budget_and_shape_errors() {
        let k = SimplicialComplex::simplex(3);
        assert!(matches!(CellModel::moment_angle_with_budget(&k, 2, 10), Err(Error::CellBudget { .. })));
        assert_eq!(CellModel::moment_angle(&k, 0).err(), Some(Error::InvalidSphereDimension));
        let big = SimplicialComplex::irrelevant(11);
        assert_eq!(CellModel::moment_angle(&big, 1).err(), Some(Error::ModelGroundSet { m: 11 }));
    }

    #[test]
    fn relative_chains_of_disk_and_boundary() {
        let disk = CellModel::moment_angle(&SimplicialComplex::simplex(1), 2).unwrap();
        let sphere = CellModel::moment_angle(&SimplicialComplex::irrelevant(1), 2).unwrap();
        let rel = disk.relative_chain_complex(&sphere).unwrap();
        assert_eq!(rel.betti(crate::cw_homology::Prime::TWO), vec![0, 0, 1]);
        let wrong = CellModel::moment_angle(&SimplicialComplex::irrelevant(1), 1).unwrap();
        assert!(matches!(disk.relative_chain_complex(&wrong), Err(Error::Precondition(_))));
    }
}
