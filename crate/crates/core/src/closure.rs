//! Hamiltonicity decision, Bondy–Chvátal closure, maximal nonhamiltonian
//! completion and the complement degree-sum condition on maximal graphs.

use serde::Serialize;

use crate::error::{check_order, Error, Result};
use crate::graph::Graph;
use crate::paths::MAX_DP_ORDER;

/// Whether `g` has a Hamilton cycle. Subset DP over paths anchored at
/// vertex 0, tracking only which endpoints are reachable.
pub fn is_hamiltonian(g: &Graph) -> Result<bool> {
    check_order(g.order(), 3, MAX_DP_ORDER)?;
    Ok(hamiltonian_unchecked(g))
}

pub(crate) fn hamiltonian_unchecked(g: &Graph) -> bool {
    let n = g.order();
    if g.min_degree() < 2 {
        return false;
    }
    let full = g.vertex_mask() as usize;
    let mut reach = vec![0u32; full + 1];
    reach[1] = 1;
    for mask in (1..full).step_by(2) {
        let mut ends = reach[mask];
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut next = g.row(v) & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[mask | 1 << w] |= 1 << w;
            }
        }
    }
    debug_assert!(n >= 3);
    reach[full] & g.row(0) != 0
}

/// Edges added by the closure, in order, and the number of scan passes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureTrace {
    pub added_edges: Vec<(usize, usize)>,
    pub rounds: usize,
}

/// Order in which a closure pass visits non-adjacent pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanOrder {
    Lexicographic,
    Reverse,
}

/// The Bondy–Chvátal closure: repeatedly join non-adjacent `u, v` with
/// `deg(u) + deg(v) >= n` until no such pair remains.
pub fn bondy_chvatal_closure(g: &Graph) -> (Graph, ClosureTrace) {
    closure_with_order(g, ScanOrder::Lexicographic)
}

pub fn closure_with_order(g: &Graph, order: ScanOrder) -> (Graph, ClosureTrace) {
    let n = g.order();
    let mut h = *g;
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    if order == ScanOrder::Reverse {
        pairs.reverse();
    }
    let mut trace = ClosureTrace {
        added_edges: Vec::new(),
        rounds: 0,
    };
    loop {
        trace.rounds += 1;
        let mut changed = false;
        for &(u, v) in &pairs {
            if !h.has_edge(u, v) && h.degree(u) + h.degree(v) >= n {
                h.set_edge(u, v);
                trace.added_edges.push((u, v));
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    (h, trace)
}

/// Nonhamiltonian, and adding any single non-edge creates a Hamilton cycle.
pub fn is_maximally_nonhamiltonian(g: &Graph) -> Result<bool> {
    if is_hamiltonian(g)? {
        return Ok(false);
    }
    Ok(maximal_given_nonhamiltonian(g))
}

pub(crate) fn maximal_given_nonhamiltonian(g: &Graph) -> bool {
    g.non_edges().into_iter().all(|(u, v)| {
        let mut h = *g;
        h.set_edge(u, v);
        hamiltonian_unchecked(&h)
    })
}

/// Extends a nonhamiltonian graph to a maximally nonhamiltonian supergraph.
///
/// Non-edges are scanned lexicographically; each one whose addition keeps
/// the graph nonhamiltonian is added and the scan restarts.
pub fn maximal_nonhamiltonian_completion(g: &Graph) -> Result<Graph> {
    if is_hamiltonian(g)? {
        return Err(Error::AlreadyHamiltonian);
    }
    let mut h = *g;
    'scan: loop {
        for (u, v) in h.non_edges() {
            let mut candidate = h;
            candidate.set_edge(u, v);
            if !hamiltonian_unchecked(&candidate) {
                h = candidate;
                continue 'scan;
            }
        }
        return Ok(h);
    }
}

/// Result of checking the complement degree-sum bound on every non-edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Lemma5Outcome {
    Holds,
    Violation {
        u: usize,
        v: usize,
        complement_degree_sum: usize,
    },
}

impl Lemma5Outcome {
    pub fn holds(&self) -> bool {
        matches!(self, Lemma5Outcome::Holds)
    }
}

/// For a maximally nonhamiltonian `g`, every non-edge `uv` must satisfy
/// `deg_c(u) + deg_c(v) >= n - 1` in the complement. A failing pair is
/// returned as data rather than raised.
pub fn check_lemma5(g: &Graph) -> Result<Lemma5Outcome> {
    if !is_maximally_nonhamiltonian(g)? {
        return Err(Error::NotMaximallyNonhamiltonian);
    }
    Ok(lemma5_unchecked(g))
}

pub(crate) fn lemma5_unchecked(g: &Graph) -> Lemma5Outcome {
    let n = g.order();
    let comp = g.complement();
    for (u, v) in comp.edges() {
        let sum = comp.degree(u) + comp.degree(v);
        if sum + 1 < n {
            return Lemma5Outcome::Violation {
                u,
                v,
                complement_degree_sum: sum,
            };
        }
    }
    Lemma5Outcome::Holds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, extremal_graph};
    use crate::paths::count_hamilton_cycles;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn decision_examples() {
        assert!(is_hamiltonian(&complete_graph(5).unwrap()).unwrap());
        assert!(!is_hamiltonian(&extremal_graph(7).unwrap()).unwrap());
        assert!(is_hamiltonian(&Graph::cycle(6).unwrap()).unwrap());
        assert!(is_hamiltonian(&complete_graph(3).unwrap()).unwrap());
        assert!(is_hamiltonian(&complete_graph(2).unwrap()).is_err());
    }

    #[test]
    fn decision_agrees_with_cycle_count() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..2000 {
            let n = rng.gen_range(3..=7);
            let p = rng.gen_range(0.2..0.9);
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        g.set_edge(u, v);
                    }
                }
            }
            assert_eq!(
                is_hamiltonian(&g).unwrap(),
                !count_hamilton_cycles(&g).unwrap().is_zero(),
                "{g:?}"
            );
        }
    }

    #[test]
    fn closure_examples() {
        let e6 = extremal_graph(6).unwrap();
        let (c, trace) = bondy_chvatal_closure(&e6);
        assert_eq!(c, e6);
        assert!(trace.added_edges.is_empty());
        assert_eq!(trace.rounds, 1);

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(bondy_chvatal_closure(&c5).0, c5);

        let mut k6m = complete_graph(6).unwrap();
        k6m.remove_edge(0, 3).unwrap();
        let (c, trace) = bondy_chvatal_closure(&k6m);
        assert_eq!(c, complete_graph(6).unwrap());
        assert_eq!(trace.added_edges, vec![(0, 3)]);
    }

    #[test]
    fn closure_trace_respects_degree_condition() {
        // Two triangles sharing a vertex, plus a pendant: closure adds some edges.
        let g = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5), (1, 3)],
        )
        .unwrap();
        let (_, trace) = bondy_chvatal_closure(&g);
        let mut h = g;
        for &(u, v) in &trace.added_edges {
            assert!(!h.has_edge(u, v));
            assert!(h.degree(u) + h.degree(v) >= 6);
            h.set_edge(u, v);
        }
    }

    #[test]
    fn maximality_examples() {
        assert!(is_maximally_nonhamiltonian(&extremal_graph(6).unwrap()).unwrap());
        assert!(!is_maximally_nonhamiltonian(&Graph::empty(6).unwrap()).unwrap());
        assert!(!is_maximally_nonhamiltonian(&complete_graph(6).unwrap()).unwrap());
    }

    #[test]
    fn completion_examples() {
        let e6 = extremal_graph(6).unwrap();
        assert_eq!(maximal_nonhamiltonian_completion(&e6).unwrap(), e6);

        let h = maximal_nonhamiltonian_completion(&Graph::empty(6).unwrap()).unwrap();
        assert!(is_maximally_nonhamiltonian(&h).unwrap());
        assert!(h.num_edges() <= 11);

        let p6 = Graph::path(6).unwrap();
        let h = maximal_nonhamiltonian_completion(&p6).unwrap();
        assert!(is_maximally_nonhamiltonian(&h).unwrap());
        assert!(p6.edges().iter().all(|&(u, v)| h.has_edge(u, v)));

        assert_eq!(
            maximal_nonhamiltonian_completion(&complete_graph(5).unwrap()),
            Err(Error::AlreadyHamiltonian)
        );
    }

    #[test]
    fn lemma5_examples() {
        assert_eq!(check_lemma5(&extremal_graph(6).unwrap()).unwrap(), Lemma5Outcome::Holds);
        assert!(check_lemma5(&extremal_graph(8).unwrap()).unwrap().holds());
        assert_eq!(
            check_lemma5(&Graph::path(6).unwrap()),
            Err(Error::NotMaximallyNonhamiltonian)
        );
    }

    #[test]
    fn lemma5_reports_violations_as_data() {
        // K_6 minus an edge is hamiltonian, so bypass the precondition.
        let mut g = complete_graph(6).unwrap();
        g.remove_edge(0, 1).unwrap();
        assert_eq!(
            lemma5_unchecked(&g),
            Lemma5Outcome::Violation {
                u: 0,
                v: 1,
                complement_degree_sum: 2
            }
        );
    }
}
