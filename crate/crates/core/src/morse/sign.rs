use std::fmt;
use std::str::FromStr;

use crate::cw_homology::{DiskCell, ProductCell};
use crate::error::{Error, Result};
use crate::simplicial::FaceSet;

/// Coordinate of a critical cell: `e_-^0`, `e_+^{n-1}` or `e_•^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
    Bullet,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
            Sign::Bullet => '*',
        }
    }

    pub fn from_char(ch: char) -> Option<Sign> {
        match ch {
            '-' => Some(Sign::Minus),
            '+' => Some(Sign::Plus),
            '*' | '•' => Some(Sign::Bullet),
            _ => None,
        }
    }

    pub fn to_disk_cell(self, n: usize) -> DiskCell {
        match self {
            Sign::Minus => DiskCell::Minus(0),
            Sign::Plus => DiskCell::Plus(n as u8 - 1),
            Sign::Bullet => DiskCell::Bullet,
        }
    }

    /// Inverse of [`Sign::to_disk_cell`]; `None` for any other disk cell.
    pub fn from_disk_cell(c: DiskCell, n: usize) -> Option<Sign> {
        match c {
            DiskCell::Minus(0) => Some(Sign::Minus),
            DiskCell::Plus(i) if i as usize + 1 == n => Some(Sign::Plus),
            DiskCell::Bullet => Some(Sign::Bullet),
            _ => None,
        }
    }
}

/// A product cell all of whose coordinates are `-`, `+` or `•`, written
/// coordinate 1 first (`"+*-*"`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignVector(signs)
    }

    /// `(-, ..., -)`, the base point.
    pub fn bottom(m: usize) -> Self {
        SignVector(vec![Sign::Minus; m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    /// Sign at the 1-based position `i`.
    pub fn get(&self, i: usize) -> Sign {
        self.0[i - 1]
    }

    pub fn set(&mut self, i: usize, s: Sign) {
        self.0[i - 1] = s;
    }

    pub fn is_bottom(&self) -> bool {
        self.0.iter().all(|&s| s == Sign::Minus)
    }

    /// `c × s`.
    pub fn with(&self, s: Sign) -> Self {
        let mut v = self.0.clone();
        v.push(s);
        SignVector(v)
    }

    /// `c_1 × ... × c_i`.
    pub fn prefix(&self, i: usize) -> Self {
        SignVector(self.0[..i].to_vec())
    }

    /// The `•` positions.
    pub fn supp(&self) -> FaceSet {
        self.positions(Sign::Bullet)
    }

    pub fn positions(&self, s: Sign) -> FaceSet {
        FaceSet::from_vertices(self.0.iter().enumerate().filter(|(_, &x)| x == s).map(|(i, _)| i + 1))
    }

    pub fn count(&self, s: Sign) -> usize {
        self.0.iter().filter(|&&x| x == s).count()
    }

    /// `(n-1)·#{+} + n·#{•}`.
    pub fn dim(&self, n: usize) -> usize {
        (n - 1) * self.count(Sign::Plus) + n * self.count(Sign::Bullet)
    }

    /// `c(sgn)`: first position carrying `s`.
    pub fn sgn_min(&self, s: Sign) -> Option<usize> {
        self.0.iter().position(|&x| x == s).map(|i| i + 1)
    }

    /// `J(c)`: absent without a `+`; the last `+` when there is no `•`;
    /// otherwise the last `+` before the first `•`.
    pub fn j_index(&self) -> Option<usize> {
        let limit = self.sgn_min(Sign::Bullet).map_or(self.len(), |b| b - 1);
        self.0[..limit].iter().rposition(|&x| x == Sign::Plus).map(|i| i + 1)
    }

    /// Keeps `-`, `•` and the `+` at `J(c)`; every other `+` becomes `-`.
    pub fn tilde(&self) -> Self {
        let j = self.j_index();
        SignVector(
            self.0
                .iter()
                .enumerate()
                .map(|(i, &s)| if s == Sign::Plus && Some(i + 1) != j { Sign::Minus } else { s })
                .collect(),
        )
    }

    pub fn to_cell(&self, n: usize) -> ProductCell {
        ProductCell::new(self.0.iter().map(|s| s.to_disk_cell(n)).collect())
    }

    pub fn from_cell(cell: &ProductCell, n: usize) -> Option<Self> {
        cell.coords.iter().map(|&c| Sign::from_disk_cell(c, n)).collect::<Option<Vec<_>>>().map(SignVector)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !matches!(c, ',' | ' ' | '(' | ')'))
            .map(Sign::from_char)
            .collect::<Option<Vec<_>>>()
            .map(SignVector)
            .ok_or_else(|| Error::InvalidSignVector(s.to_string()))
    }
}
