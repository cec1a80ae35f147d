use crate::error::{Error, Result};

/// Simple undirected graph on the vertices `1..=m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    m: usize,
    adj: Vec<u32>,
}

impl Graph {
    pub fn empty(m: usize) -> Self {
        Graph { m, adj: vec![0; m] }
    }

    pub fn from_edges(m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if m > 32 {
            return Err(Error::GroundSetSize(m));
        }
        let mut g = Graph::empty(m);
        for &(a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > m {
                    return Err(Error::VertexOutOfRange { vertex: v, m });
                }
            }
            if a == b {
                return Err(Error::Precondition(format!("loop at vertex {a}")));
            }
            g.add_edge_unchecked(a, b);
        }
        Ok(g)
    }

    /// The cycle `1-2-...-m-1`.
    pub fn cycle(m: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..=m).map(|i| (i, i % m + 1)).collect();
        Graph::from_edges(m, &edges).expect("cycle edges are in range")
    }

    pub fn complete(m: usize) -> Self {
        let mut g = Graph::empty(m);
        for a in 1..=m {
            for b in a + 1..=m {
                g.add_edge_unchecked(a, b);
            }
        }
        g
    }

    pub(crate) fn add_edge_unchecked(&mut self, a: usize, b: usize) {
        self.adj[a - 1] |= 1 << (b - 1);
        self.adj[b - 1] |= 1 << (a - 1);
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a >= 1 && a <= self.m && self.adj[a - 1] & (1 << (b - 1)) != 0
    }

    /// Neighbours of `v` as a bitmask over `[m]`.
    pub fn neighbourhood(&self, v: usize) -> u32 {
        self.adj[v - 1]
    }

    /// Edges `(a, b)` with `a < b`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.m {
            for b in a + 1..=self.m {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn is_clique(&self, set: u32) -> bool {
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if set & !(1 << v) & !self.adj[v] != 0 {
                return false;
            }
        }
        true
    }

    /// A perfect elimination ordering found by repeatedly removing the
    /// smallest simplicial vertex, or `None` when the graph is not chordal.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        let mut alive: u32 = if self.m == 0 { 0 } else { u32::MAX >> (32 - self.m) };
        let mut order = Vec::with_capacity(self.m);
        while alive != 0 {
            let v = (0..self.m).find(|&v| alive & (1 << v) != 0 && self.is_clique(self.adj[v] & alive))?;
            order.push(v + 1);
            alive &= !(1 << v);
        }
        Some(order)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }
}
