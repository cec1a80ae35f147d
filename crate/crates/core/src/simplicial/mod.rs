//! Finite simplicial complexes on the ground set `[m]`.
//!
//! A complex is stored as its antichain of facets. The void complex (no
//! faces at all) has an empty facet list; the irrelevant complex `{∅}` has
//! the single facet `∅`.

mod face;
pub mod generators;
mod graph;
mod io;

pub use face::{FaceSet, Vertices};
pub use graph::Graph;
pub use io::ComplexFile;

use crate::error::{Error, Result};

/// Largest ground set accepted by the exhaustive subset routines.
pub const MAX_GROUND_SET: usize = 24;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    m: usize,
    facets: Vec<FaceSet>,
}

impl SimplicialComplex {
    /// Validated constructor: `1 <= m <= 24`, every vertex in `[m]`.
    ///
    /// The facets are the inclusion-maximal members of `faces`. An empty
    /// `faces` list is only accepted together with `void = true`.
    pub fn from_facets(m: usize, faces: &[FaceSet], void: bool) -> Result<Self> {
        if m == 0 || m > MAX_GROUND_SET {
            return Err(Error::GroundSetSize(m));
        }
        let full = FaceSet::full(m);
        for f in faces {
            if !f.is_subset(full) {
                let vertex = f.difference(full).min_vertex().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, m });
            }
        }
        if void {
            if !faces.is_empty() {
                return Err(Error::Precondition("a void complex cannot list facets".into()));
            }
            return Ok(Self::void(m));
        }
        if faces.is_empty() {
            return Err(Error::AmbiguousEmpty);
        }
        Ok(Self::from_faces_unchecked(m, faces.iter().copied()))
    }

    /// Builds from vertex lists, as in the JSON format.
    pub fn from_vertex_lists(m: usize, faces: &[Vec<usize>], void: bool) -> Result<Self> {
        if m == 0 || m > MAX_GROUND_SET {
            return Err(Error::GroundSetSize(m));
        }
        let mut sets = Vec::with_capacity(faces.len());
        for f in faces {
            for &v in f {
                if v == 0 || v > m {
                    return Err(Error::VertexOutOfRange { vertex: v, m });
                }
            }
            sets.push(FaceSet::from_vertices(f.iter().copied()));
        }
        Self::from_facets(m, &sets, void)
    }

    /// Keeps the inclusion-maximal sets. `m` may be 0 here: links and
    /// deletions on a one-point ground set land on `[0]`.
    pub(crate) fn from_faces_unchecked<I: IntoIterator<Item = FaceSet>>(m: usize, faces: I) -> Self {
        let mut faces: Vec<FaceSet> = faces.into_iter().collect();
        // Larger sets first so that a single pass keeps exactly the maximal ones.
        faces.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        faces.dedup();
        let mut facets: Vec<FaceSet> = Vec::new();
        for f in faces {
            if !facets.iter().any(|g| f.is_subset(*g)) {
                facets.push(f);
            }
        }
        facets.sort();
        SimplicialComplex { m, facets }
    }

    pub fn void(m: usize) -> Self {
        SimplicialComplex { m, facets: Vec::new() }
    }

    /// The irrelevant complex `{∅}`.
    pub fn irrelevant(m: usize) -> Self {
        SimplicialComplex { m, facets: vec![FaceSet::EMPTY] }
    }

    /// The full simplex `2^[m]`.
    pub fn simplex(m: usize) -> Self {
        SimplicialComplex { m, facets: vec![FaceSet::full(m)] }
    }

    /// `2^[m] \ {[m]}`, the boundary of the simplex.
    pub fn simplex_boundary(m: usize) -> Self {
        let full = FaceSet::full(m);
        Self::from_faces_unchecked(m, (1..=m).map(|v| full.remove(v)))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[FaceSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [FaceSet::EMPTY]
    }

    /// A single facet, i.e. `2^σ` for some `σ` (including `{∅}`).
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets == [FaceSet::full(self.m)]
    }

    pub fn contains(&self, face: FaceSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        v >= 1 && v <= self.m && self.contains(FaceSet::singleton(v))
    }

    /// Every singleton `{i}`, `i in [m]`, is a face.
    pub fn has_all_singletons(&self) -> bool {
        (1..=self.m).all(|v| self.has_vertex(v))
    }

    /// Membership table indexed by the bitmask of each subset of `[m]`.
    pub fn indicator(&self) -> Vec<bool> {
        let size = 1usize << self.m;
        let mut ind = vec![false; size];
        for f in &self.facets {
            ind[f.bits() as usize] = true;
        }
        for bit in 0..self.m {
            let b = 1usize << bit;
            for mask in 0..size {
                if mask & b != 0 && ind[mask] {
                    ind[mask ^ b] = true;
                }
            }
        }
        ind
    }

    /// Complex whose faces are the marked entries of a downward-closed table.
    pub(crate) fn from_indicator(m: usize, ind: &[bool]) -> Self {
        debug_assert_eq!(ind.len(), 1 << m);
        let facets = (0..ind.len())
            .filter(|&mask| ind[mask] && (0..m).all(|bit| mask & (1 << bit) != 0 || !ind[mask | (1 << bit)]))
            .map(|mask| FaceSet::from_bits(mask as u32));
        Self::from_faces_unchecked(m, facets)
    }

    /// All faces, ordered by size and then lexicographically. Empty for the
    /// void complex.
    pub fn all_faces(&self) -> Vec<FaceSet> {
        let ind = self.indicator();
        let mut faces: Vec<FaceSet> = (0..ind.len())
            .filter(|&mask| ind[mask])
            .map(|mask| FaceSet::from_bits(mask as u32))
            .collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        faces
    }

    /// Faces with `k` vertices (dimension `k - 1`).
    pub fn faces_of_size(&self, k: usize) -> Vec<FaceSet> {
        self.all_faces().into_iter().filter(|f| f.len() == k).collect()
    }

    /// `K° = {σ ⊆ [m] : [m] \ σ ∉ K}` on the same ground set.
    pub fn alexander_dual(&self) -> Self {
        let ind = self.indicator();
        let full = (1usize << self.m) - 1;
        let dual: Vec<bool> = (0..ind.len()).map(|mask| !ind[full ^ mask]).collect();
        Self::from_indicator(self.m, &dual)
    }

    /// Inclusion-minimal subsets of `[m]` that are not faces. The void
    /// complex has `∅` as its only minimal non-face.
    pub fn minimal_nonfaces(&self) -> Vec<FaceSet> {
        let ind = self.indicator();
        let mut out: Vec<FaceSet> = (0..ind.len())
            .filter(|&mask| !ind[mask] && (0..self.m).all(|bit| mask & (1 << bit) == 0 || ind[mask ^ (1 << bit)]))
            .map(|mask| FaceSet::from_bits(mask as u32))
            .collect();
        out.sort();
        out
    }

    /// `N ∉ K` with every proper subset a face.
    pub fn is_minimal_nonface(&self, set: FaceSet) -> bool {
        !self.contains(set) && set.vertices().all(|v| self.contains(set.remove(v)))
    }

    /// `K_M = {σ ∈ K : σ ⊆ M}`, keeping the ambient ground set `[m]`.
    pub fn restriction(&self, subset: FaceSet) -> Self {
        if self.is_void() {
            return Self::void(self.m);
        }
        Self::from_faces_unchecked(self.m, self.facets.iter().map(|f| f.intersection(subset)))
    }

    /// `K_I` as a complex on `[#I]`, the elements of `I` renumbered in
    /// increasing order.
    pub fn induced(&self, subset: FaceSet) -> Self {
        let r = self.restriction(subset);
        let gone: Vec<usize> = subset.complement(self.m).vertices().collect();
        let squeeze = |f: FaceSet| gone.iter().rev().fold(f, |acc, &v| acc.compress(v));
        if r.is_void() {
            return Self::void(subset.len());
        }
        Self::from_faces_unchecked(subset.len(), r.facets.iter().map(|&f| squeeze(f)))
    }

    /// `K|_[k]` as a complex on the ground set `[k]`.
    pub fn prefix(&self, k: usize) -> Self {
        debug_assert!(k <= self.m);
        let mut r = self.restriction(FaceSet::full(k));
        r.m = k;
        r
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.m {
            Err(Error::VertexOutOfRange { vertex: v, m: self.m })
        } else {
            Ok(())
        }
    }

    /// `K \ v` on `[m] \ {v}`, renumbered order-preservingly to `[m-1]`
    /// (see [`renumbering_after_removal`]).
    pub fn deletion(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        if self.is_void() {
            return Ok(Self::void(self.m - 1));
        }
        Ok(Self::from_faces_unchecked(
            self.m - 1,
            self.facets.iter().map(|f| f.remove(v).compress(v)),
        ))
    }

    /// `link_K(v) = {σ : v ∉ σ, σ ∪ {v} ∈ K}` on `[m] \ {v}`, renumbered to
    /// `[m-1]`. Void when `{v}` is not a face.
    pub fn link(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        Ok(Self::from_faces_unchecked(
            self.m - 1,
            self.facets.iter().filter(|f| f.contains(v)).map(|f| f.remove(v).compress(v)),
        ))
    }

    /// `{σ : σ ∩ A = ∅, σ ∪ A ∈ K}` on the ambient ground set `[m]`. Void
    /// when `A ∉ K`.
    pub fn link_face(&self, face: FaceSet) -> Self {
        Self::from_faces_unchecked(
            self.m,
            self.facets.iter().filter(|f| face.is_subset(**f)).map(|f| f.difference(face)),
        )
    }

    /// Closed star `{σ ∈ K : σ ∪ {v} ∈ K}` on the ambient ground set.
    pub fn star(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        Ok(Self::from_faces_unchecked(self.m, self.facets.iter().filter(|f| f.contains(v)).copied()))
    }

    /// `K1 * K2` on `[m1 + m2]`, with the ground set of `other` shifted to
    /// `{m1+1, ..., m1+m2}`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let m = self.m + other.m;
        if m > MAX_GROUND_SET {
            return Err(Error::GroundSetSize(m));
        }
        let mut faces = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                faces.push(a.union(FaceSet::from_bits(b.bits() << self.m)));
            }
        }
        Ok(Self::from_faces_unchecked(m, faces))
    }

    /// Same faces viewed on a larger ground set `[m']`, `m' >= m`.
    pub fn with_ground_set(&self, m: usize) -> Result<Self> {
        if m < self.m || m > MAX_GROUND_SET {
            return Err(Error::GroundSetSize(m));
        }
        Ok(SimplicialComplex { m, facets: self.facets.clone() })
    }

    /// Relabels vertex `i` to `perm[i - 1]` (a permutation of `[m]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.m];
        if perm.len() != self.m {
            return Err(Error::Precondition(format!("permutation must have {} entries", self.m)));
        }
        for &p in perm {
            if p == 0 || p > self.m || std::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::Precondition(format!("{perm:?} is not a permutation of [{}]", self.m)));
            }
        }
        Ok(Self::from_faces_unchecked(
            self.m,
            self.facets.iter().map(|f| FaceSet::from_vertices(f.vertices().map(|v| perm[v - 1]))),
        ))
    }

    /// Moves vertex `v` to position `m`, shifting `v+1, ..., m` down by one.
    pub fn move_vertex_last(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let perm: Vec<usize> = (1..=self.m)
            .map(|i| match i.cmp(&v) {
                std::cmp::Ordering::Less => i,
                std::cmp::Ordering::Equal => self.m,
                std::cmp::Ordering::Greater => i - 1,
            })
            .collect();
        self.relabel(&perm)
    }

    pub fn one_skeleton(&self) -> Graph {
        let mut g = Graph::empty(self.m);
        for f in &self.facets {
            let vs = f.to_vec();
            for (i, &a) in vs.iter().enumerate() {
                for &b in &vs[i + 1..] {
                    g.add_edge_unchecked(a, b);
                }
            }
        }
        g
    }

    /// Every minimal non-face has exactly two elements.
    pub fn is_flag(&self) -> bool {
        self.minimal_nonfaces().iter().all(|n| n.len() == 2)
    }

    /// Closed under `σ ↦ σ \ {i} ∪ {j}` for `j < i`, `j ∉ σ`, in the natural
    /// order on `[m]`. Checking facets is enough.
    pub fn is_shifted(&self) -> bool {
        self.facets.iter().all(|f| {
            f.vertices().all(|i| (1..i).filter(|&j| !f.contains(j)).all(|j| self.contains(f.remove(i).insert(j))))
        })
    }

    /// Serialisable JSON form.
    pub fn to_file(&self) -> ComplexFile {
        ComplexFile::from(self)
    }
}

/// For `K \ v` and `link_K(v)`: entry `i - 1` is the old label of new vertex `i`.
pub fn renumbering_after_removal(m: usize, v: usize) -> Vec<usize> {
    (1..=m).filter(|&i| i != v).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m: usize, facets: &[&[usize]]) -> SimplicialComplex {
        let lists: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_vertex_lists(m, &lists, false).unwrap()
    }

    fn fs(v: &[usize]) -> FaceSet {
        FaceSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn induced_renumbers() {
        let sq = SimplicialComplex::from_vertex_lists(4, &[vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]], false).unwrap();
        let i = sq.induced(FaceSet::from_vertices([2, 4]));
        assert_eq!(i.m(), 2);
        assert_eq!(i.facets(), &[FaceSet::from_vertices([1, 2])]);
        let j = sq.induced(FaceSet::from_vertices([3, 4]));
        assert_eq!(j, SimplicialComplex::simplex_boundary(2));
        assert!(SimplicialComplex::void(3).induced(FaceSet::from_vertices([1])).is_void());
    }

    #[test]
    fn from_facets_keeps_maximal() {
        let c = k(3, &[&[1], &[1, 2], &[2]]);
        assert_eq!(c.facets(), &[fs(&[1, 2])]);
        let fig1 = k(4, &[&[1, 3], &[2, 4]]);
        assert_eq!(fig1.facets(), &[fs(&[1, 3]), fs(&[2, 4])]);
    }

    #[test]
    fn from_facets_errors() {
        assert_eq!(SimplicialComplex::from_facets(0, &[], true), Err(Error::GroundSetSize(0)));
        assert_eq!(SimplicialComplex::from_facets(25, &[], true), Err(Error::GroundSetSize(25)));
        assert_eq!(
            SimplicialComplex::from_vertex_lists(3, &[vec![1, 4]], false),
            Err(Error::VertexOutOfRange { vertex: 4, m: 3 })
        );
        assert_eq!(SimplicialComplex::from_facets(2, &[], false), Err(Error::AmbiguousEmpty));
        let void = SimplicialComplex::from_facets(2, &[], true).unwrap();
        assert!(void.is_void());
        assert_ne!(void, SimplicialComplex::irrelevant(2));
    }

    #[test]
    fn all_faces_examples() {
        assert_eq!(k(2, &[&[1, 2]]).all_faces(), vec![FaceSet::EMPTY, fs(&[1]), fs(&[2]), fs(&[1, 2])]);
        assert!(SimplicialComplex::void(3).all_faces().is_empty());
        // ∅, four vertices, four edges
        let square = k(4, &[&[1, 2], &[1, 4], &[2, 3], &[3, 4]]);
        assert_eq!(square.all_faces().len(), 9);
    }

    #[test]
    fn dual_of_figure_one() {
        let fig1 = k(4, &[&[1, 3], &[2, 4]]);
        let dual = fig1.alexander_dual();
        assert_eq!(dual.facets(), &[fs(&[1, 2]), fs(&[1, 4]), fs(&[2, 3]), fs(&[3, 4])]);
        assert_eq!(dual.alexander_dual(), fig1);
        assert_eq!(fig1.minimal_nonfaces(), vec![fs(&[1, 2]), fs(&[1, 4]), fs(&[2, 3]), fs(&[3, 4])]);
    }

    #[test]
    fn dual_of_full_simplex_is_void() {
        let full = SimplicialComplex::simplex(3);
        let dual = full.alexander_dual();
        assert!(dual.is_void());
        assert_eq!(dual.alexander_dual(), full);
        assert!(full.minimal_nonfaces().is_empty());
        assert_eq!(SimplicialComplex::void(3).minimal_nonfaces(), vec![FaceSet::EMPTY]);
    }

    #[test]
    fn dual_of_all_edges_on_four_vertices() {
        // brute force over every σ ⊆ [4]: σ ∈ K° iff [4] \ σ ∉ K
        let edges = generators::skeleton_complex(4, 2).unwrap();
        let mut expected = Vec::new();
        for mask in 0u32..16 {
            let s = FaceSet::from_bits(mask);
            if !edges.contains(s.complement(4)) {
                expected.push(s);
            }
        }
        let dual = edges.alexander_dual();
        let mut got = dual.all_faces();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
        assert_eq!(dual, SimplicialComplex::from_faces_unchecked(4, (1..=4).map(FaceSet::singleton)));
    }

    #[test]
    fn minimal_nonfaces_of_square() {
        let sq = k(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        assert_eq!(sq.minimal_nonfaces(), vec![fs(&[1, 2]), fs(&[3, 4])]);
        assert!(sq.is_flag());
    }

    #[test]
    fn link_deletion_star_join() {
        let sq = k(4, &[&[1, 2], &[1, 4], &[2, 3], &[3, 4]]);
        // link(4) = {1},{3}; deletion(4) = {12},{23}
        assert_eq!(sq.link(4).unwrap().facets(), &[fs(&[1]), fs(&[3])]);
        assert_eq!(sq.deletion(4).unwrap().facets(), &[fs(&[1, 2]), fs(&[2, 3])]);
        // link(1): neighbours 2 and 4, renumbered to 1 and 3
        assert_eq!(sq.link(1).unwrap().facets(), &[fs(&[1]), fs(&[3])]);
        assert_eq!(renumbering_after_removal(4, 1), vec![2, 3, 4]);
        assert!(sq.deletion(5).is_err());
        let lonely = k(3, &[&[1, 2]]);
        assert!(lonely.link(3).unwrap().is_void());
        assert!(lonely.link_face(fs(&[1, 3])).is_void());
        assert_eq!(lonely.link_face(fs(&[1])).facets(), &[fs(&[2])]);
        assert_eq!(sq.star(1).unwrap().facets(), &[fs(&[1, 2]), fs(&[1, 4])]);
        let j = k(1, &[&[1]]).join(&SimplicialComplex::irrelevant(2)).unwrap();
        assert_eq!(j.m(), 3);
        assert_eq!(j.facets(), &[fs(&[1])]);
    }

    #[test]
    fn star_is_cone_over_link() {
        let c = k(5, &[&[1, 2, 3], &[2, 4], &[3, 4, 5], &[1, 5]]);
        for v in 1..=5 {
            let cone = k(1, &[&[1]]);
            let link = c.link(v).unwrap();
            // {∅,{v}} * link, relabelled back onto [m]
            let joined = cone.join(&link).unwrap();
            let back: Vec<usize> = std::iter::once(v).chain(renumbering_after_removal(5, v)).collect();
            let mut perm = vec![0; 5];
            for (new, &old) in back.iter().enumerate() {
                perm[new] = old;
            }
            assert_eq!(joined.relabel(&perm).unwrap(), c.star(v).unwrap(), "v = {v}");
        }
    }

    #[test]
    fn link_of_example_vertex_six() {
        // K on [6] with link(6) = {125,134,145,234,235}
        let facets: &[&[usize]] = &[&[1, 2, 5, 6], &[1, 3, 4, 6], &[1, 4, 5, 6], &[2, 3, 4, 6], &[2, 3, 5, 6]];
        let c = k(6, facets);
        assert_eq!(
            c.link(6).unwrap().facets(),
            &[fs(&[1, 2, 5]), fs(&[1, 3, 4]), fs(&[1, 4, 5]), fs(&[2, 3, 4]), fs(&[2, 3, 5])]
        );
    }

    #[test]
    fn shifted_and_flag_predicates() {
        assert!(SimplicialComplex::simplex_boundary(4).is_shifted());
        assert!(k(3, &[&[1, 2], &[3]]).is_shifted());
        assert!(!k(3, &[&[2, 3], &[1]]).is_shifted());
        assert!(!SimplicialComplex::simplex_boundary(3).is_flag());
        assert!(!SimplicialComplex::void(2).is_flag());
    }

    #[test]
    fn move_vertex_last_relabels() {
        let c = k(3, &[&[1, 2], &[3]]);
        // 1 -> 3, 2 -> 1, 3 -> 2
        assert_eq!(c.move_vertex_last(1).unwrap().facets(), &[fs(&[1, 3]), fs(&[2])]);
    }
}
