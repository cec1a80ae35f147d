use std::cmp::Ordering;
use std::fmt;

/// A subset of the ground set `[m]`, stored as a bitmask.
///
/// Vertex `v` (1-based) lives in bit `v - 1`. The ambient `m` is carried by
/// the surrounding complex, not by the set itself.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct FaceSet(u32);

impl FaceSet {
    pub const EMPTY: FaceSet = FaceSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        FaceSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The whole ground set `[m]`.
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= 32);
        if m >= 32 {
            FaceSet(u32::MAX)
        } else {
            FaceSet((1u32 << m) - 1)
        }
    }

    /// Builds a set from 1-based vertices. Vertices outside `1..=32` are a
    /// programming error; validated entry points go through
    /// [`SimplicialComplex::from_facets`](crate::SimplicialComplex::from_facets).
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut bits = 0u32;
        for v in vertices {
            assert!((1..=32).contains(&v), "vertex {v} out of range");
            bits |= 1 << (v - 1);
        }
        FaceSet(bits)
    }

    pub fn singleton(v: usize) -> Self {
        Self::from_vertices([v])
    }

    pub fn contains(self, v: usize) -> bool {
        v >= 1 && v <= 32 && self.0 & (1 << (v - 1)) != 0
    }

    pub fn insert(self, v: usize) -> Self {
        FaceSet(self.0 | FaceSet::singleton(v).0)
    }

    pub fn remove(self, v: usize) -> Self {
        FaceSet(self.0 & !FaceSet::singleton(v).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: FaceSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: FaceSet) -> Self {
        FaceSet(self.0 | other.0)
    }

    pub fn intersection(self, other: FaceSet) -> Self {
        FaceSet(self.0 & other.0)
    }

    pub fn difference(self, other: FaceSet) -> Self {
        FaceSet(self.0 & !other.0)
    }

    pub fn intersects(self, other: FaceSet) -> bool {
        self.0 & other.0 != 0
    }

    /// `[m] \ self`.
    pub fn complement(self, m: usize) -> Self {
        FaceSet(!self.0 & FaceSet::full(m).0)
    }

    /// Largest vertex in the set, if any.
    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Ascending 1-based vertices.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// Removes vertex `v` from the ground set, renumbering the vertices above
    /// it down by one. The inverse is [`FaceSet::expand`].
    pub fn compress(self, v: usize) -> Self {
        let below = (1u32 << (v - 1)) - 1;
        let low = self.0 & below;
        let high = if v >= 32 { 0 } else { (self.0 >> v) << (v - 1) };
        FaceSet(low | high)
    }

    /// Re-inserts an (absent) vertex `v` into the numbering.
    pub fn expand(self, v: usize) -> Self {
        let below = (1u32 << (v - 1)) - 1;
        let low = self.0 & below;
        let high = (self.0 & !below) << 1;
        FaceSet(low | high)
    }
}

pub struct Vertices(u32);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Lexicographic order on the ascending vertex lists, so `{1,2} < {1,2,4} <
/// {1,4} < {2,3}`.
impl Ord for FaceSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        let above = !((low << 1).wrapping_sub(1));
        if self.0 & low != 0 {
            // `self` holds the first differing vertex.
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for FaceSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as the ascending vertex list.
impl serde::Serialize for FaceSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.vertices())
    }
}

impl fmt::Display for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        let a = FaceSet::from_vertices([1, 2]);
        let b = FaceSet::from_vertices([1, 2, 4]);
        let c = FaceSet::from_vertices([1, 4]);
        let d = FaceSet::from_vertices([2, 3]);
        let mut v = vec![d, c, b, a, FaceSet::EMPTY];
        v.sort();
        assert_eq!(v, vec![FaceSet::EMPTY, a, b, c, d]);
    }

    #[test]
    fn compress_expand() {
        let s = FaceSet::from_vertices([1, 3, 5]);
        assert_eq!(s.compress(2), FaceSet::from_vertices([1, 2, 4]));
        assert_eq!(s.compress(2).expand(2), s);
        assert_eq!(FaceSet::from_vertices([2]).compress(1), FaceSet::from_vertices([1]));
    }

    #[test]
    fn complement_and_extremes() {
        let s = FaceSet::from_vertices([2, 4]);
        assert_eq!(s.complement(4), FaceSet::from_vertices([1, 3]));
        assert_eq!(s.max_vertex(), Some(4));
        assert_eq!(s.min_vertex(), Some(2));
        assert_eq!(FaceSet::EMPTY.max_vertex(), None);
        assert_eq!(s.to_string(), "{2,4}");
    }
}
