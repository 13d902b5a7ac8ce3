//! Hamilton cycles of K_n classified against a graph G.
//!
//! Every Hamilton cycle of the complete graph is tagged with the number `j`
//! of its edges that lie outside G. The resulting distribution and its
//! moments are checked against the double-counting identities, and cycles
//! with complement edges are cut into arcs of G-edges.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{check_order, Error, Result};
use crate::exact::{factorial, ExactCount};
use crate::graph::Graph;
use crate::paths::{count_hamilton_paths, count_paths, PathLength};

pub const MAX_CYCLE_ORDER: usize = 10;

/// A Hamilton cycle of K_n written as a vertex sequence starting at 0,
/// with `seq[1] < seq[n-1]` to fix the direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HamiltonCycle {
    order: usize,
    seq: [u8; MAX_CYCLE_ORDER],
}

impl HamiltonCycle {
    pub fn vertices(&self) -> &[u8] {
        &self.seq[..self.order]
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Edge `i` joins `seq[i]` and `seq[i+1]` (indices mod n).
    pub fn edge(&self, i: usize) -> (usize, usize) {
        let n = self.order;
        (self.seq[i % n] as usize, self.seq[(i + 1) % n] as usize)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).map(|i| self.edge(i))
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges().any(|(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    pub(crate) fn edge_bits(&self) -> u64 {
        self.edges()
            .fold(0, |acc, (u, v)| acc | 1 << Graph::pair_index(u, v))
    }
}

/// Cycles whose second vertex is `first`, in lexicographic order of the
/// remaining sequence.
#[derive(Debug, Clone)]
pub struct CyclesWithFirst {
    order: usize,
    /// seq[1..] as a permutation; only seq[2..] varies.
    seq: [u8; MAX_CYCLE_ORDER],
    done: bool,
}

impl CyclesWithFirst {
    fn new(order: usize, first: usize) -> Self {
        let mut seq = [0u8; MAX_CYCLE_ORDER];
        seq[1] = first as u8;
        let mut pos = 2;
        for v in 1..order {
            if v != first {
                seq[pos] = v as u8;
                pos += 1;
            }
        }
        CyclesWithFirst {
            order,
            seq,
            done: false,
        }
    }

    /// Advances seq[2..n] to the next permutation; false when exhausted.
    fn advance(&mut self) -> bool {
        let tail = &mut self.seq[2..self.order];
        let Some(i) = (0..tail.len().saturating_sub(1))
            .rev()
            .find(|&i| tail[i] < tail[i + 1])
        else {
            return false;
        };
        let j = (i + 1..tail.len()).rev().find(|&j| tail[j] > tail[i]).unwrap();
        tail.swap(i, j);
        tail[i + 1..].reverse();
        true
    }
}

impl Iterator for CyclesWithFirst {
    type Item = HamiltonCycle;

    fn next(&mut self) -> Option<HamiltonCycle> {
        while !self.done {
            let current = self.seq;
            if !self.advance() {
                self.done = true;
            }
            if current[1] < current[self.order - 1] {
                return Some(HamiltonCycle {
                    order: self.order,
                    seq: current,
                });
            }
        }
        None
    }
}

/// One partition of the cycle stream: cycles that leave vertex 0 towards
/// `first`. Partitions for `first = 1..n` concatenate to the full stream.
pub fn enumerate_hamilton_cycles_with_first(n: usize, first: usize) -> Result<CyclesWithFirst> {
    check_order(n, 3, MAX_CYCLE_ORDER)?;
    if first == 0 || first >= n {
        return Err(Error::VertexOutOfRange {
            vertex: first,
            order: n,
        });
    }
    Ok(CyclesWithFirst::new(n, first))
}

/// All (n-1)!/2 Hamilton cycles of K_n, each once, in lexicographic order
/// of the anchored vertex sequence.
pub fn enumerate_hamilton_cycles(n: usize) -> Result<impl Iterator<Item = HamiltonCycle>> {
    check_order(n, 3, MAX_CYCLE_ORDER)?;
    Ok((1..n).flat_map(move |f| CyclesWithFirst::new(n, f)))
}

/// The Hamilton cycles of K_n as edge bit masks, for repeated classification.
#[derive(Debug, Clone)]
pub struct CycleTable {
    order: usize,
    masks: Vec<u64>,
}

impl CycleTable {
    pub fn new(n: usize) -> Result<Self> {
        let masks = enumerate_hamilton_cycles(n)?.map(|c| c.edge_bits()).collect();
        Ok(CycleTable { order: n, masks })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// Histogram of complement-edge counts; entry `j` counts cycles with
    /// exactly `j` edges outside `g`.
    pub fn classify(&self, g: &Graph) -> Result<HamiltonCycleDistribution> {
        if g.order() != self.order {
            return Err(Error::InvalidParameters(format!(
                "graph order {} does not match table order {}",
                g.order(),
                self.order
            )));
        }
        let comp = g.complement();
        let comp_bits = comp.edge_bits();
        let mut hist = [0u64; MAX_CYCLE_ORDER + 1];
        for &mask in &self.masks {
            hist[(mask & comp_bits).count_ones() as usize] += 1;
        }
        Ok(HamiltonCycleDistribution {
            order: self.order,
            m: comp.num_edges(),
            x0: ExactCount::from(hist[0]),
            x: hist
                .iter()
                .enumerate()
                .skip(1)
                .filter(|(_, &c)| c > 0)
                .map(|(j, &c)| (j, ExactCount::from(c)))
                .collect(),
        })
    }
}

/// How the Hamilton cycles of K_n split by number of complement edges used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HamiltonCycleDistribution {
    pub order: usize,
    /// Edges of the complement.
    pub m: usize,
    /// Cycles lying entirely in G.
    pub x0: ExactCount,
    /// `j -> x_j` for every `j >= 1` with `x_j > 0`.
    pub x: BTreeMap<usize, ExactCount>,
}

impl HamiltonCycleDistribution {
    pub fn x_j(&self, j: usize) -> ExactCount {
        if j == 0 {
            return self.x0.clone();
        }
        self.x.get(&j).cloned().unwrap_or_default()
    }

    /// x0 + sum of x_j.
    pub fn total(&self) -> ExactCount {
        self.x.values().fold(self.x0.clone(), |acc, c| &acc + c)
    }

    /// Incidences between cycles and complement edges: sum of j·x_j.
    pub fn first_moment(&self) -> ExactCount {
        self.x.iter().map(|(&j, c)| c * j as u64).sum()
    }
}

pub fn xj_distribution(g: &Graph) -> Result<HamiltonCycleDistribution> {
    CycleTable::new(g.order())?.classify(g)
}

/// Moment quantities of a distribution alongside the complement pair counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MomentSummary {
    pub order: usize,
    pub m: usize,
    /// sum over j >= 1 of j·x_j
    pub omega: ExactCount,
    /// sum over j >= 2 of (j-1)·x_j
    pub beta: ExactCount,
    /// sum over j >= 2 of C(j,2)·x_j
    pub p: ExactCount,
    /// sum over j >= 2 of x_j
    pub t: ExactCount,
    /// Pairs of complement edges sharing a vertex.
    pub s: ExactCount,
    /// Pairs of disjoint complement edges.
    pub q: ExactCount,
}

impl MomentSummary {
    /// `t·(2p - beta) >= beta²`; vacuous when beta is zero.
    pub fn cauchy_schwarz_holds(&self) -> bool {
        if self.beta.is_zero() {
            return true;
        }
        let two_p = &self.p * 2;
        let Some(spread) = two_p.checked_sub(&self.beta) else {
            return false;
        };
        &self.t * &spread >= &self.beta * &self.beta
    }

    /// `2s >= m(n-3)`.
    pub fn degree_sum_bound_holds(&self) -> bool {
        let lhs = &self.s * 2;
        let rhs = ExactCount::from((self.m * self.order.saturating_sub(3)) as u64);
        lhs >= rhs
    }
}

fn identity(name: &'static str, lhs: &ExactCount, rhs: &ExactCount) -> Result<()> {
    if lhs != rhs {
        return Err(Error::IdentityViolation {
            identity: name,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    Ok(())
}

/// Computes the moments of `dist` and checks them against the closed-form
/// counts obtained from the complement of `g`.
pub fn moment_summary(g: &Graph, dist: &HamiltonCycleDistribution) -> Result<MomentSummary> {
    let n = g.order();
    let comp = g.complement();
    let m = comp.num_edges();
    if dist.order != n || dist.m != m {
        return Err(Error::InvalidParameters(
            "distribution was not computed from this graph".into(),
        ));
    }
    let mut beta = ExactCount::zero();
    let mut p = ExactCount::zero();
    let mut t = ExactCount::zero();
    let mut x_sum = ExactCount::zero();
    for (&j, c) in &dist.x {
        x_sum += c;
        if j >= 2 {
            beta += &(c * (j as u64 - 1));
            p += &(c * (j as u64 * (j as u64 - 1) / 2));
            t += c;
        }
    }
    let omega = dist.first_moment();

    let s: ExactCount = (0..n)
        .map(|v| {
            let d = comp.degree(v) as u64;
            ExactCount::from(d * d.saturating_sub(1) / 2)
        })
        .sum();
    let pairs = ExactCount::from((m * m.saturating_sub(1) / 2) as u64);
    let q = pairs.checked_sub(&s).ok_or(Error::IdentityViolation {
        identity: "s + q = C(m,2)",
        lhs: s.to_string(),
        rhs: pairs.to_string(),
    })?;

    let cycles = factorial(n as u64 - 1).checked_div_exact(2).expect("n >= 3");
    identity("x0 + sum x_j = (n-1)!/2", &dist.total(), &cycles)?;
    let omega_closed = &factorial(n as u64 - 2) * m as u64;
    identity("sum j x_j = m (n-2)!", &omega, &omega_closed)?;
    identity(
        "beta = sum j x_j - sum x_j",
        &beta,
        &omega.checked_sub(&x_sum).unwrap_or_default(),
    )?;
    if dist.x0.is_zero() {
        let closed = omega_closed.checked_sub(&cycles).ok_or(Error::IdentityViolation {
            identity: "beta = m (n-2)! - (n-1)!/2",
            lhs: beta.to_string(),
            rhs: "negative".into(),
        })?;
        identity("beta = m (n-2)! - (n-1)!/2", &beta, &closed)?;
    }
    let ordered_pairs = ExactCount::from((m * m.saturating_sub(1)) as u64);
    let p_closed = &ordered_pairs.checked_sub(&s).unwrap_or_default() * &factorial(n as u64 - 3);
    identity("p = (m(m-1) - s)(n-3)!", &p, &p_closed)?;

    Ok(MomentSummary {
        order: n,
        m,
        omega,
        beta,
        p,
        t,
        s,
        q,
    })
}

/// The upper bound m·(n-2)!/(2m-n+2) on Hamilton paths of a maximally
/// nonhamiltonian graph whose complement has `m` edges, as an exact rational.
pub fn lemma6_bound(n: usize, m: usize) -> Result<Ratio<BigUint>> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("order {n} too small")));
    }
    let denom = 2 * m as i64 - n as i64 + 2;
    if denom <= 0 {
        return Err(Error::InvalidParameters(format!(
            "2m - n + 2 = {denom} is not positive (n={n}, m={m})"
        )));
    }
    let numer = factorial(n as u64 - 2).into_inner() * BigUint::from(m);
    Ok(Ratio::new(numer, BigUint::from(denom as u64)))
}

/// Lengths of the maximal runs of G-edges around a Hamilton cycle of K_n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleArcProfile {
    pub arc_lengths: Vec<usize>,
}

impl CycleArcProfile {
    /// Number of complement edges on the cycle, which equals the number of arcs.
    pub fn j(&self) -> usize {
        self.arc_lengths.len()
    }

    pub fn order(&self) -> usize {
        self.arc_lengths.iter().sum::<usize>() + self.j()
    }
}

/// Cuts `cycle` at its complement edges. Arcs are listed in cycle order,
/// beginning with the run that follows the last complement edge of the
/// anchored sequence.
pub fn arc_profile(g: &Graph, cycle: &HamiltonCycle) -> Result<CycleArcProfile> {
    let n = cycle.order();
    if g.order() != n {
        return Err(Error::InvalidParameters("cycle and graph orders differ".into()));
    }
    let outside: Vec<bool> = cycle.edges().map(|(u, v)| !g.has_edge(u, v)).collect();
    let last = outside
        .iter()
        .rposition(|&c| c)
        .ok_or(Error::NoComplementEdge)?;
    let mut arcs = Vec::new();
    let mut run = 0;
    for step in 1..=n {
        if outside[(last + step) % n] {
            arcs.push(run);
            run = 0;
        } else {
            run += 1;
        }
    }
    Ok(CycleArcProfile { arc_lengths: arcs })
}

/// s_k(C) = sum over arcs of max(a_i - k + 1, 0).
pub fn s_k_of_cycle(profile: &CycleArcProfile, k: PathLength) -> ExactCount {
    let k = k.get();
    let total: usize = profile
        .arc_lengths
        .iter()
        .map(|&a| (a + 1).saturating_sub(k))
        .sum();
    ExactCount::from(total)
}

/// Length-k paths lying in both `g` and `cycle`, counted window by window
/// along the cycle.
pub fn common_paths(g: &Graph, cycle: &HamiltonCycle, k: usize) -> u64 {
    let n = cycle.order();
    (0..n)
        .filter(|&start| (0..k).all(|i| {
            let (u, v) = cycle.edge(start + i);
            g.has_edge(u, v)
        }))
        .count() as u64
}

/// Both sides of (n-k-1)!·p_k(G) = sum over cycles C of s_k(C), the right side
/// computed twice: by direct window counting and by the arc formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegmentIdentity {
    pub n: usize,
    pub k: usize,
    pub lhs: ExactCount,
    pub rhs_direct: ExactCount,
    pub rhs_arcs: ExactCount,
}

impl SegmentIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs_direct && self.lhs == self.rhs_arcs
    }
}

pub fn segment_identity(g: &Graph, k: usize) -> Result<SegmentIdentity> {
    let n = g.order();
    check_order(n, 4, 9)?;
    if k == 0 || k > n - 2 {
        return Err(Error::PathLengthOutOfRange { k, max: n - 2 });
    }
    let length = PathLength::new(k, n)?;
    let lhs = &factorial((n - k - 1) as u64) * &count_paths(g, k)?;
    let mut direct = 0u64;
    let mut arcs = ExactCount::zero();
    for cycle in enumerate_hamilton_cycles(n)? {
        direct += common_paths(g, &cycle, k);
        match arc_profile(g, &cycle) {
            Ok(profile) => arcs += &s_k_of_cycle(&profile, length),
            // A cycle inside G: every one of its n windows is a common path.
            Err(Error::NoComplementEdge) => arcs += &ExactCount::from(n),
            Err(e) => return Err(e),
        }
    }
    Ok(SegmentIdentity {
        n,
        k,
        lhs,
        rhs_direct: ExactCount::from(direct),
        rhs_arcs: arcs,
    })
}

pub fn segment_identity_check(g: &Graph, k: usize) -> Result<bool> {
    Ok(segment_identity(g, k)?.holds())
}

/// Which edges of K_n a filtered cycle count must pass through.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeConfig {
    /// The edge ab.
    OneEdge(usize, usize),
    /// The edges ab and bc.
    AdjacentPair(usize, usize, usize),
    /// The edges ab and cd.
    NonadjacentPair(usize, usize, usize, usize),
}

impl EdgeConfig {
    fn vertices(&self) -> Vec<usize> {
        match *self {
            EdgeConfig::OneEdge(a, b) => vec![a, b],
            EdgeConfig::AdjacentPair(a, b, c) => vec![a, b, c],
            EdgeConfig::NonadjacentPair(a, b, c, d) => vec![a, b, c, d],
        }
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        match *self {
            EdgeConfig::OneEdge(a, b) => vec![(a, b)],
            EdgeConfig::AdjacentPair(a, b, c) => vec![(a, b), (b, c)],
            EdgeConfig::NonadjacentPair(a, b, c, d) => vec![(a, b), (c, d)],
        }
    }

    /// (n-2)!, (n-3)! or 2(n-3)! respectively.
    pub fn closed_form(&self, n: usize) -> ExactCount {
        match self {
            EdgeConfig::OneEdge(..) => factorial(n as u64 - 2),
            EdgeConfig::AdjacentPair(..) => factorial(n as u64 - 3),
            EdgeConfig::NonadjacentPair(..) => &factorial(n as u64 - 3) * 2,
        }
    }
}

/// Hamilton cycles of K_n through the configured edges, by filtering the
/// full enumeration.
pub fn lemma4_count(n: usize, config: EdgeConfig) -> Result<ExactCount> {
    check_order(n, 4, MAX_CYCLE_ORDER)?;
    let vs = config.vertices();
    for (i, &v) in vs.iter().enumerate() {
        if v >= n {
            return Err(Error::InvalidEdgeConfig(format!("vertex {v} >= order {n}")));
        }
        if vs[..i].contains(&v) {
            return Err(Error::InvalidEdgeConfig(format!("vertex {v} repeated")));
        }
    }
    let edges = config.edges();
    let count = enumerate_hamilton_cycles(n)?
        .filter(|c| edges.iter().all(|&(u, v)| c.contains_edge(u, v)))
        .count();
    Ok(ExactCount::from(count))
}

/// x_1 equals the Hamilton path count for nonhamiltonian graphs.
pub fn x1_matches_hamilton_paths(g: &Graph, dist: &HamiltonCycleDistribution) -> Result<bool> {
    Ok(dist.x_j(1) == count_hamilton_paths(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, extremal_graph};
    use std::collections::HashSet;

    fn c(v: u64) -> ExactCount {
        ExactCount::from(v)
    }

    #[test]
    fn cycle_counts() {
        assert_eq!(enumerate_hamilton_cycles(4).unwrap().count(), 3);
        assert_eq!(enumerate_hamilton_cycles(6).unwrap().count(), 60);
        assert_eq!(enumerate_hamilton_cycles(3).unwrap().count(), 1);
        assert!(enumerate_hamilton_cycles(2).is_err());
        assert!(enumerate_hamilton_cycles(11).is_err());
    }

    #[test]
    fn order_five_cycles_distinct() {
        let sets: HashSet<u64> = enumerate_hamilton_cycles(5)
            .unwrap()
            .map(|c| c.edge_bits())
            .collect();
        assert_eq!(sets.len(), 12);
    }

    #[test]
    fn stream_is_lexicographic() {
        let seqs: Vec<Vec<u8>> = enumerate_hamilton_cycles(6)
            .unwrap()
            .map(|c| c.vertices().to_vec())
            .collect();
        assert!(seqs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(seqs[0], vec![0, 1, 2, 3, 4, 5]);
        assert!(seqs.iter().all(|s| s[0] == 0 && s[1] < s[5]));
    }

    #[test]
    fn partitions_concatenate() {
        let full: Vec<_> = enumerate_hamilton_cycles(7).unwrap().collect();
        let parts: Vec<_> = (1..7)
            .flat_map(|f| enumerate_hamilton_cycles_with_first(7, f).unwrap())
            .collect();
        assert_eq!(full, parts);
        assert!(enumerate_hamilton_cycles_with_first(7, 0).is_err());
    }

    #[test]
    fn lemma4_examples() {
        assert_eq!(lemma4_count(4, EdgeConfig::OneEdge(0, 1)).unwrap(), c(2));
        assert_eq!(lemma4_count(6, EdgeConfig::AdjacentPair(0, 1, 2)).unwrap(), c(6));
        assert_eq!(
            lemma4_count(6, EdgeConfig::NonadjacentPair(0, 1, 2, 3)).unwrap(),
            c(12)
        );
        assert!(lemma4_count(6, EdgeConfig::AdjacentPair(0, 1, 0)).is_err());
        assert!(lemma4_count(6, EdgeConfig::OneEdge(0, 6)).is_err());
        assert!(lemma4_count(3, EdgeConfig::OneEdge(0, 1)).is_err());
    }

    #[test]
    fn distribution_examples() {
        let d = xj_distribution(&extremal_graph(6).unwrap()).unwrap();
        assert_eq!(d.x0, c(0));
        assert_eq!(d.x, BTreeMap::from([(1, c(24)), (2, c(36))]));
        assert_eq!(d.m, 4);

        let d = xj_distribution(&complete_graph(6).unwrap()).unwrap();
        assert_eq!(d.x0, c(60));
        assert!(d.x.is_empty());

        let d = xj_distribution(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(d.total(), c(12));
        assert_eq!(d.x0, c(1));
    }

    #[test]
    fn moments_of_extremal_six() {
        let g = extremal_graph(6).unwrap();
        let d = xj_distribution(&g).unwrap();
        let ms = moment_summary(&g, &d).unwrap();
        assert_eq!(ms.m, 4);
        assert_eq!(ms.s, c(6));
        assert_eq!(ms.q, c(0));
        assert_eq!(ms.p, c(36));
        assert_eq!(ms.beta, c(36));
        assert_eq!(ms.t, c(36));
        assert!(ms.cauchy_schwarz_holds());
        assert!(ms.degree_sum_bound_holds());
        assert!(x1_matches_hamilton_paths(&g, &d).unwrap());
    }

    #[test]
    fn moments_with_perfect_matching_complement() {
        let mut g = complete_graph(6).unwrap();
        for (u, v) in [(0, 1), (2, 3), (4, 5)] {
            g.remove_edge(u, v).unwrap();
        }
        let ms = moment_summary(&g, &xj_distribution(&g).unwrap()).unwrap();
        assert_eq!(ms.s, c(0));
        assert_eq!(ms.q, c(3));
    }

    #[test]
    fn moments_vanish_without_complement() {
        let g = complete_graph(5).unwrap();
        let ms = moment_summary(&g, &xj_distribution(&g).unwrap()).unwrap();
        for v in [&ms.omega, &ms.beta, &ms.p, &ms.t, &ms.s, &ms.q] {
            assert!(v.is_zero());
        }
    }

    #[test]
    fn tampered_distribution_is_reported() {
        let g = extremal_graph(6).unwrap();
        let mut d = xj_distribution(&g).unwrap();
        d.x.insert(2, c(35));
        assert!(matches!(
            moment_summary(&g, &d),
            Err(Error::IdentityViolation { .. })
        ));
    }

    #[test]
    fn lemma6_bound_examples() {
        let r = |n, m| lemma6_bound(n, m).unwrap();
        assert_eq!(r(6, 4), Ratio::from_integer(BigUint::from(24u32)));
        assert_eq!(r(6, 5), Ratio::from_integer(BigUint::from(20u32)));
        assert_eq!(r(8, 6), Ratio::from_integer(BigUint::from(720u32)));
        assert_eq!(r(7, 6), Ratio::new(BigUint::from(720u32), BigUint::from(7u32)));
        assert!(lemma6_bound(6, 2).is_err());
    }

    #[test]
    fn arc_profile_examples() {
        let g = extremal_graph(6).unwrap();
        let through_pendant = enumerate_hamilton_cycles(6)
            .unwrap()
            .find(|c| c.vertices() == [0, 1, 2, 4, 3, 5])
            .unwrap();
        let prof = arc_profile(&g, &through_pendant).unwrap();
        assert_eq!(prof.arc_lengths, vec![4, 0]);
        assert_eq!(prof.order(), 6);

        let one = enumerate_hamilton_cycles(6)
            .unwrap()
            .find(|c| c.vertices() == [0, 1, 2, 3, 4, 5])
            .unwrap();
        assert_eq!(arc_profile(&g, &one).unwrap().arc_lengths, vec![5]);

        let k6 = complete_graph(6).unwrap();
        assert_eq!(arc_profile(&k6, &one), Err(Error::NoComplementEdge));
    }

    #[test]
    fn s_k_examples() {
        let k = |k, n| PathLength::new(k, n).unwrap();
        let p = CycleArcProfile {
            arc_lengths: vec![3, 1],
        };
        assert_eq!(s_k_of_cycle(&p, k(2, 6)), c(2));
        for n in 4..=9 {
            let single = CycleArcProfile {
                arc_lengths: vec![n - 1],
            };
            for kk in 1..n {
                assert_eq!(s_k_of_cycle(&single, k(kk, n)), c((n - kk) as u64));
            }
        }
        let p = CycleArcProfile {
            arc_lengths: vec![4, 0],
        };
        assert_eq!(s_k_of_cycle(&p, k(5, 7)), c(0));
    }

    #[test]
    fn segment_identity_examples() {
        let id = segment_identity(&extremal_graph(6).unwrap(), 2).unwrap();
        assert_eq!(id.lhs, c(204));
        assert!(id.holds());
        let id = segment_identity(&complete_graph(5).unwrap(), 2).unwrap();
        assert_eq!(id.lhs, c(60));
        assert!(id.holds());
        assert!(segment_identity(&complete_graph(6).unwrap(), 5).is_err());
        assert!(segment_identity(&complete_graph(10).unwrap(), 2).is_err());
    }
}
