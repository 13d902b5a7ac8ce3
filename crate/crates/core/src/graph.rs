//! Simple undirected graphs on at most 32 vertices, stored as one bit row
//! per vertex.

use std::fmt;

use crate::error::{check_order, Error, Result};
use crate::exact::ExactCount;

pub const MAX_ORDER: usize = 32;

/// A simple undirected graph of order 1..=32.
///
/// Row `v` holds the neighbourhood of `v` as a bit set. Rows are kept
/// symmetric and irreflexive, and bits at positions `>= order` are clear.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    order: usize,
    rows: [u32; MAX_ORDER],
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        check_order(order, 1, MAX_ORDER)?;
        Ok(Graph {
            order,
            rows: [0; MAX_ORDER],
        })
    }

    pub fn complete(order: usize) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        let all = g.vertex_mask();
        for v in 0..order {
            g.rows[v] = all & !(1 << v);
        }
        Ok(g)
    }

    /// K_{n-1}·K_2: a clique on `0..n-1` with the pendant vertex `n-1`
    /// hanging off the cut vertex `n-2`.
    pub fn extremal(order: usize) -> Result<Self> {
        check_order(order, 3, MAX_ORDER)?;
        let mut g = Graph::complete(order - 1)?;
        g.order = order;
        g.set_edge(order - 2, order - 1);
        Ok(g)
    }

    /// The path 0-1-...-(n-1).
    pub fn path(order: usize) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for v in 1..order {
            g.set_edge(v - 1, v);
        }
        Ok(g)
    }

    /// The cycle 0-1-...-(n-1)-0.
    pub fn cycle(order: usize) -> Result<Self> {
        check_order(order, 3, MAX_ORDER)?;
        let mut g = Graph::path(order)?;
        g.set_edge(order - 1, 0);
        Ok(g)
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from bit rows, validating symmetry and loop-freeness.
    pub fn from_rows(order: usize, rows: &[u32]) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        if rows.len() != order {
            return Err(Error::InvalidParameters(format!(
                "expected {order} rows, got {}",
                rows.len()
            )));
        }
        let mask = g.vertex_mask();
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 || row & (1 << v) != 0 {
                return Err(Error::InvalidParameters(format!("row {v} is not valid")));
            }
            g.rows[v] = row;
        }
        for u in 0..order {
            for v in 0..order {
                if g.has_edge(u, v) != g.has_edge(v, u) {
                    return Err(Error::InvalidParameters("rows are not symmetric".into()));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Bit set with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u32 {
        if self.order == 32 {
            u32::MAX
        } else {
            (1u32 << self.order) - 1
        }
    }

    #[inline]
    pub fn row(&self, v: usize) -> u32 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows[..self.order]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn num_edges(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edge_count(&self) -> ExactCount {
        ExactCount::from(self.num_edges())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    order: self.order,
                });
            }
        }
        if u == v {
            return Err(Error::InvalidParameters(format!("loop at vertex {u}")));
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    #[inline]
    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.set_edge(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.clear_edge(u, v);
        Ok(())
    }

    /// Copy of `self` with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = *self;
        g.add_edge(u, v)?;
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let mut g = *self;
        let all = self.vertex_mask();
        for v in 0..self.order {
            g.rows[v] = !self.rows[v] & all & !(1 << v);
        }
        g
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order {
            let mut higher = self.rows[u] & !((2u64 << u) - 1) as u32;
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        self.complement().edges()
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order;
        let mut seen = 0u64;
        if perm.len() != n {
            return Err(Error::InvalidParameters("permutation length mismatch".into()));
        }
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::InvalidParameters("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Whether the subgraph induced on `mask` is connected (empty counts as connected).
    pub(crate) fn is_connected_within(&self, mask: u32) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask & mask.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.rows[v] & mask & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == mask
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_mask())
    }

    /// Vertices whose removal disconnects a connected graph.
    pub fn cut_vertices(&self) -> Vec<usize> {
        if !self.is_connected() {
            return Vec::new();
        }
        (0..self.order)
            .filter(|&v| !self.is_connected_within(self.vertex_mask() & !(1 << v)))
            .collect()
    }

    /// Index of the pair `u < v` in graph6 (column-major upper triangle) order.
    #[inline]
    pub(crate) fn pair_index(u: usize, v: usize) -> usize {
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        j * (j - 1) / 2 + i
    }

    /// Edge set as a bit mask over pair indices; only for order <= 11.
    pub(crate) fn edge_bits(&self) -> u64 {
        debug_assert!(self.order <= 11);
        let mut bits = 0u64;
        for (u, v) in self.edges() {
            bits |= 1 << Graph::pair_index(u, v);
        }
        bits
    }

    /// Inverse of [`Graph::edge_bits`], given the pair table for this order.
    pub(crate) fn from_edge_bits(order: usize, pairs: &[(u8, u8)], mut bits: u64) -> Graph {
        let mut g = Graph {
            order,
            rows: [0; MAX_ORDER],
        };
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = pairs[b];
            g.set_edge(u as usize, v as usize);
        }
        g
    }
}

/// Vertex pairs `(i, j)`, `i < j`, listed in graph6 order.
pub(crate) fn pair_table(order: usize) -> Vec<(u8, u8)> {
    let mut out = Vec::with_capacity(order * order.saturating_sub(1) / 2);
    for j in 1..order {
        for i in 0..j {
            out.push((i as u8, j as u8));
        }
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges())
    }
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    Graph::complete(n)
}

pub fn extremal_graph(n: usize) -> Result<Graph> {
    Graph::extremal(n)
}

pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

pub fn edge_count(g: &Graph) -> ExactCount {
    g.edge_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn complete_graph_sizes() {
        assert_eq!(complete_graph(1).unwrap().num_edges(), 0);
        assert_eq!(complete_graph(4).unwrap().num_edges(), 6);
        assert_eq!(complete_graph(6).unwrap().num_edges(), 15);
        assert_eq!(complete_graph(32).unwrap().num_edges(), 496);
        assert!(complete_graph(0).is_err());
        assert!(complete_graph(33).is_err());
    }

    #[test]
    fn extremal_graph_shape() {
        let g = extremal_graph(6).unwrap();
        assert_eq!(g.num_edges(), 11);
        let mut d = g.degrees();
        d.sort();
        assert_eq!(d, vec![1, 4, 4, 4, 4, 5]);
        assert_eq!(g.degree(5), 1);
        assert!(g.has_edge(4, 5));
        assert_eq!(extremal_graph(7).unwrap().num_edges(), 16);
        assert_eq!(edge_count(&extremal_graph(8).unwrap()), ExactCount::from(22u64));
        assert!(extremal_graph(2).is_err());
    }

    #[test]
    fn extremal_graph_structure() {
        // At n = 3 the graph is a path with two pendant vertices.
        for n in 4..=32 {
            let g = extremal_graph(n).unwrap();
            assert!(g.is_connected());
            assert_eq!(g.cut_vertices(), vec![n - 2]);
            assert_eq!((0..n).filter(|&v| g.degree(v) == 1).count(), 1);
            assert_eq!(g.num_edges(), (n * n - 3 * n + 4) / 2);
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete_graph(4).unwrap().complement().num_edges(), 0);
        assert_eq!(
            Graph::empty(5).unwrap().complement(),
            complete_graph(5).unwrap()
        );
        let star = extremal_graph(6).unwrap().complement();
        assert_eq!(star.num_edges(), 4);
        assert_eq!(star.degree(5), 4);
        assert!((0..5).all(|v| star.degree(v) == if v == 4 { 0 } else { 1 }));
    }

    #[test]
    fn single_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(edge_count(&g), ExactCount::one());
    }

    #[test]
    fn rejects_loops_and_bad_vertices() {
        let mut g = Graph::empty(4).unwrap();
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 4).is_err());
        assert!(Graph::from_rows(2, &[0b10, 0b00]).is_err());
        assert!(Graph::from_rows(2, &[0b01, 0b00]).is_err());
    }

    #[test]
    fn edge_bits_roundtrip() {
        let g = extremal_graph(7).unwrap();
        let pairs = pair_table(7);
        assert_eq!(Graph::from_edge_bits(7, &pairs, g.edge_bits()), g);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=12).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = pair_table(n);
                let mut g = Graph::empty(n).unwrap();
                for (b, &(u, v)) in bits.iter().zip(&pairs) {
                    if *b {
                        g.set_edge(u as usize, v as usize);
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arb_graph()) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn edges_partition_pairs(g in arb_graph()) {
            let n = g.order();
            prop_assert_eq!(g.num_edges() + g.complement().num_edges(), n * (n - 1) / 2);
        }
    }
}
