//! Canonical forms by exhaustive relabeling.
//!
//! The canonical form of a graph is the lexicographically smallest
//! upper-triangle bit string (graph6 order) over all vertex relabelings.
//! Labels are assigned in increasing order, so after placing label `j` the
//! first `j(j+1)/2` bits are fixed; branches whose prefix already exceeds
//! the best found are cut. Worst case is still `n!` leaves.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_order, Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};

pub const MAX_CANONICAL_ORDER: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: usize,
    /// Upper-triangle bits, first pair in the most significant position.
    bits: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    fn len(&self) -> usize {
        self.order * (self.order - 1) / 2
    }

    /// The bit string packed MSB-first and zero-padded to whole bytes.
    pub fn bytes(&self) -> Vec<u8> {
        let len = self.len();
        let mut out = vec![0u8; len.div_ceil(8)];
        for pos in 0..len {
            if self.bits >> (len - 1 - pos) & 1 == 1 {
                out[pos / 8] |= 0x80 >> (pos % 8);
            }
        }
        out
    }

    /// The representative graph, labeled so that its bit string is this form.
    pub fn graph(&self) -> Graph {
        let n = self.order;
        let len = self.len();
        let mut g = Graph::empty(n).expect("order validated at construction");
        let mut pos = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (len - 1 - pos) & 1 == 1 {
                    g.set_edge(i, j);
                }
                pos += 1;
            }
        }
        g
    }

    pub fn to_graph6(&self) -> String {
        write_graph6(&self.graph())
    }

    /// Reads a form written by [`CanonicalForm::to_graph6`], re-canonicalizing
    /// so arbitrary graph6 input is accepted.
    pub fn from_graph6(text: &str) -> Result<Self> {
        canonical_form(&parse_graph6(text.as_bytes())?)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_graph6())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_graph6())
    }
}

impl<'de> Deserialize<'de> for CanonicalForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        CanonicalForm::from_graph6(&s).map_err(serde::de::Error::custom)
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    len: usize,
    /// label -> original vertex
    chosen: [usize; MAX_CANONICAL_ORDER],
    best: Option<u64>,
}

impl Search<'_> {
    fn descend(&mut self, label: usize, used: u32, prefix: u64) {
        if label == self.n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let fixed = (label + 1) * label / 2;
        let mut free = self.g.vertex_mask() & !used;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            // Column `label`: adjacency of v to the vertices holding labels 0..label.
            let mut next = prefix;
            for i in 0..label {
                next = (next << 1) | self.g.has_edge(self.chosen[i], v) as u64;
            }
            if let Some(best) = self.best {
                let best_prefix = best >> (self.len - fixed);
                if next > best_prefix {
                    continue;
                }
            }
            self.chosen[label] = v;
            self.descend(label + 1, used | 1 << v, next);
        }
    }
}

/// Canonical form of `g`; order must not exceed 10.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    check_order(n, 1, MAX_CANONICAL_ORDER).map_err(|_| {
        Error::InvalidParameters(format!(
            "canonical form supports order <= {MAX_CANONICAL_ORDER}, got {n}"
        ))
    })?;
    let mut search = Search {
        g,
        n,
        len: n * (n - 1) / 2,
        chosen: [0; MAX_CANONICAL_ORDER],
        best: None,
    };
    search.descend(0, 0, 0);
    Ok(CanonicalForm {
        order: n,
        bits: search.best.expect("at least one labeling exists"),
    })
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.num_edges() != b.num_edges() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{extremal_graph, pair_table};
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    /// Minimum over every permutation, no pruning.
    fn brute_force(g: &Graph) -> u64 {
        let n = g.order();
        let pairs = pair_table(n);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u64::MAX;
        loop {
            // perm[label] = original vertex
            let mut code = 0u64;
            for &(i, j) in &pairs {
                code = (code << 1) | g.has_edge(perm[i as usize], perm[j as usize]) as u64;
            }
            best = best.min(code);
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
        best
    }

    fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for (u, v) in pair_table(n) {
            if rng.gen_bool(0.5) {
                g.add_edge(u as usize, v as usize).unwrap();
            }
        }
        g
    }

    #[test]
    fn matches_unpruned_minimum() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=7);
            let g = random_graph(&mut rng, n);
            assert_eq!(canonical_form(&g).unwrap().bits, brute_force(&g));
        }
    }

    #[test]
    fn invariant_under_relabeling() {
        let mut rng = StdRng::seed_from_u64(11);
        let g = extremal_graph(6).unwrap();
        let base = canonical_form(&g).unwrap();
        for _ in 0..100 {
            let mut perm: Vec<usize> = (0..6).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.relabel(&perm).unwrap()).unwrap(), base);
        }
        for _ in 0..100 {
            let n = rng.gen_range(2..=9);
            let h = random_graph(&mut rng, n);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(
                canonical_form(&h).unwrap(),
                canonical_form(&h.relabel(&perm).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn path_and_triangle_differ() {
        let p3 = Graph::path(3).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert_ne!(canonical_form(&p3).unwrap(), canonical_form(&k3).unwrap());
    }

    #[test]
    fn the_two_order_five_extremal_graphs_differ() {
        let a = extremal_graph(5).unwrap();
        // K_2 joined to three independent vertices.
        let b = Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        )
        .unwrap();
        assert_eq!(a.num_edges(), b.num_edges());
        assert!(!is_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn form_graph_has_its_own_bits() {
        let g = extremal_graph(7).unwrap();
        let f = canonical_form(&g).unwrap();
        assert_eq!(canonical_form(&f.graph()).unwrap(), f);
        assert!(is_isomorphic(&f.graph(), &g).unwrap());
        assert_eq!(CanonicalForm::from_graph6(&f.to_graph6()).unwrap(), f);
        assert_eq!(f.bytes().len(), 3);
    }

    #[test]
    fn order_cap() {
        assert!(canonical_form(&Graph::empty(11).unwrap()).is_err());
        assert!(canonical_form(&extremal_graph(10).unwrap()).is_ok());
    }
}
