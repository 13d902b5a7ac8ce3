//! Exact counts of paths, Hamilton paths and Hamilton cycles.
//!
//! Paths are counted as subgraphs: each path once, not once per direction.
//! General lengths use backtracking; full-length counts use a subset
//! dynamic program over (vertex set, endpoint) states.

use crate::error::{check_order, Error, Result};
use crate::exact::ExactCount;
use crate::graph::Graph;

/// Largest order accepted by the subset dynamic programs (2^n · n states).
pub const MAX_DP_ORDER: usize = 20;

/// Number of edges in a path, validated against a graph order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathLength(usize);

impl PathLength {
    /// `k` must lie in `1..=order-1`.
    pub fn new(k: usize, order: usize) -> Result<Self> {
        let max = order.saturating_sub(1);
        if k == 0 || k > max {
            return Err(Error::PathLengthOutOfRange { k, max });
        }
        Ok(PathLength(k))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Vertices on a path of this length.
    pub fn vertices(self) -> usize {
        self.0 + 1
    }
}

fn extend(g: &Graph, v: usize, visited: u32, remaining: usize) -> u128 {
    let next = g.row(v) & !visited;
    if remaining == 1 {
        return next.count_ones() as u128;
    }
    let mut total = 0;
    let mut rest = next;
    while rest != 0 {
        let w = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        total += extend(g, w, visited | 1 << w, remaining - 1);
    }
    total
}

/// Ordered (directed) traversals of length `k`; twice the path count.
pub(crate) fn count_walks_simple(g: &Graph, k: usize) -> u128 {
    (0..g.order()).map(|v| extend(g, v, 1 << v, k)).sum()
}

/// Number of paths with `k` edges in `g`, by backtracking.
pub fn count_paths(g: &Graph, k: usize) -> Result<ExactCount> {
    let k = PathLength::new(k, g.order())?;
    // Ordered traversals never exceed 32! < 2^128.
    Ok(ExactCount::from(count_walks_simple(g, k.get()) / 2))
}

fn walk_all(g: &Graph, v: usize, visited: u32, depth: usize, counts: &mut [u64; 32]) {
    let mut rest = g.row(v) & !visited;
    while rest != 0 {
        let w = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        counts[depth + 1] += 1;
        walk_all(g, w, visited | 1 << w, depth + 1, counts);
    }
}

/// p_k for every k at once: entry `k` holds the number of length-k paths.
/// Intended for the small orders used in sweeps (ordered counts must fit u64).
pub(crate) fn path_counts_all_lengths(g: &Graph) -> [u64; 32] {
    let mut counts = [0u64; 32];
    for v in 0..g.order() {
        walk_all(g, v, 1 << v, 0, &mut counts);
    }
    for c in counts.iter_mut() {
        *c /= 2;
    }
    counts
}

/// Number of Hamilton paths, by subset dynamic programming.
pub fn count_hamilton_paths(g: &Graph) -> Result<ExactCount> {
    let n = g.order();
    check_order(n, 2, MAX_DP_ORDER)?;
    let full = g.vertex_mask() as usize;
    // ways[mask * n + v]: directed paths covering exactly `mask`, ending at v.
    let mut ways = vec![0u64; (full + 1) * n];
    for v in 0..n {
        ways[(1 << v) * n + v] = 1;
    }
    for mask in 1..=full {
        let mut ends = mask as u32;
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let c = ways[mask * n + v];
            if c == 0 {
                continue;
            }
            let mut next = g.row(v) & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                ways[(mask | 1 << w) * n + w] += c;
            }
        }
    }
    // At most 20! directed paths, which fits in u64.
    let directed: u128 = (0..n).map(|v| ways[full * n + v] as u128).sum();
    Ok(ExactCount::from(directed / 2))
}

/// Number of Hamilton cycles as edge sets.
pub fn count_hamilton_cycles(g: &Graph) -> Result<ExactCount> {
    let n = g.order();
    check_order(n, 3, MAX_DP_ORDER)?;
    let full = g.vertex_mask() as usize;
    // Paths anchored at vertex 0; only masks containing 0 are reachable.
    let mut ways = vec![0u64; (full + 1) * n];
    ways[n] = 1;
    for mask in (1..=full).step_by(2) {
        let mut ends = mask as u32;
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let c = ways[mask * n + v];
            if c == 0 {
                continue;
            }
            let mut next = g.row(v) & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                ways[(mask | 1 << w) * n + w] += c;
            }
        }
    }
    let mut closing = g.row(0);
    let mut directed = 0u128;
    while closing != 0 {
        let v = closing.trailing_zeros() as usize;
        closing &= closing - 1;
        directed += ways[full * n + v] as u128;
    }
    // Each cycle is traversed once in each direction from the anchor.
    Ok(ExactCount::from(directed / 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::permutation_number;
    use crate::graph::{complete_graph, extremal_graph};

    fn c(v: u64) -> ExactCount {
        ExactCount::from(v)
    }

    #[test]
    fn path_length_range() {
        assert!(PathLength::new(0, 5).is_err());
        assert!(PathLength::new(5, 5).is_err());
        assert_eq!(PathLength::new(4, 5).unwrap().vertices(), 5);
        assert!(count_paths(&complete_graph(4).unwrap(), 0).is_err());
        assert!(count_paths(&complete_graph(4).unwrap(), 4).is_err());
    }

    #[test]
    fn small_examples() {
        assert_eq!(count_paths(&complete_graph(4).unwrap(), 1).unwrap(), c(6));
        assert_eq!(count_paths(&extremal_graph(6).unwrap(), 2).unwrap(), c(34));
        assert_eq!(count_hamilton_paths(&extremal_graph(6).unwrap()).unwrap(), c(24));
        assert_eq!(count_hamilton_paths(&complete_graph(5).unwrap()).unwrap(), c(60));
        assert_eq!(count_hamilton_paths(&Graph::path(4).unwrap()).unwrap(), c(1));
    }

    #[test]
    fn hamilton_cycles() {
        assert_eq!(count_hamilton_cycles(&complete_graph(6).unwrap()).unwrap(), c(60));
        assert_eq!(count_hamilton_cycles(&Graph::cycle(5).unwrap()).unwrap(), c(1));
        assert_eq!(count_hamilton_cycles(&complete_graph(3).unwrap()).unwrap(), c(1));
        for n in 5..=8 {
            assert!(count_hamilton_cycles(&extremal_graph(n).unwrap())
                .unwrap()
                .is_zero());
        }
        assert!(count_hamilton_cycles(&complete_graph(2).unwrap()).is_err());
    }

    #[test]
    fn complete_graph_closed_forms() {
        for n in 3..=9usize {
            let kn = complete_graph(n).unwrap();
            let cycles = crate::exact::factorial(n as u64 - 1).checked_div_exact(2).unwrap();
            assert_eq!(count_hamilton_cycles(&kn).unwrap(), cycles);
            for k in 1..n {
                let expected = permutation_number(n as i64, k as i64 + 1)
                    .unwrap()
                    .checked_div_exact(2)
                    .unwrap();
                assert_eq!(count_paths(&kn, k).unwrap(), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn all_lengths_match_single_length() {
        let g = extremal_graph(7).unwrap();
        let all = path_counts_all_lengths(&g);
        for k in 1..7 {
            assert_eq!(c(all[k]), count_paths(&g, k).unwrap());
        }
        assert_eq!(all[7], 0);
    }

    #[test]
    fn dp_order_cap() {
        assert!(count_hamilton_paths(&Graph::empty(21).unwrap()).is_err());
        assert!(count_hamilton_paths(&Graph::empty(1).unwrap()).is_err());
    }
}
