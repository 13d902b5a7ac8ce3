//! Brute-force oracles shared by the integration tests. None of these use
//! the library's counting or enumeration code.

#![allow(dead_code)]

use nonham::Graph;
use rand::rngs::StdRng;
use rand::Rng;

/// Visits every injective sequence of `len` vertices out of `0..n`.
pub fn for_each_sequence(n: usize, len: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(n: usize, len: usize, seq: &mut Vec<usize>, used: &mut Vec<bool>, f: &mut dyn FnMut(&[usize])) {
        if seq.len() == len {
            f(seq);
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                seq.push(v);
                go(n, len, seq, used, f);
                seq.pop();
                used[v] = false;
            }
        }
    }
    go(n, len, &mut Vec::new(), &mut vec![false; n], f);
}

/// Length-k paths, from all ordered vertex sequences, halved.
pub fn brute_paths(g: &Graph, k: usize) -> u64 {
    let mut ordered = 0u64;
    for_each_sequence(g.order(), k + 1, &mut |s| {
        if s.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            ordered += 1;
        }
    });
    ordered / 2
}

/// Hamilton cycles of K_n as vertex sequences: anchored at 0, second vertex
/// smaller than the last.
pub fn brute_cycles(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_sequence(n, n, &mut |s| {
        if s[0] == 0 && s[1] < s[n - 1] {
            out.push(s.to_vec());
        }
    });
    out
}

pub fn cycle_edges(c: &[usize]) -> Vec<(usize, usize)> {
    let n = c.len();
    (0..n).map(|i| (c[i], c[(i + 1) % n])).collect()
}

pub fn brute_hamilton_cycles(g: &Graph) -> u64 {
    brute_cycles(g.order())
        .iter()
        .filter(|c| cycle_edges(c).iter().all(|&(u, v)| g.has_edge(u, v)))
        .count() as u64
}

/// `x[j]` = cycles of K_n with exactly `j` edges outside `g`.
pub fn brute_xj(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut x = vec![0u64; n + 1];
    for c in brute_cycles(n) {
        let j = cycle_edges(&c).iter().filter(|&&(u, v)| !g.has_edge(u, v)).count();
        x[j] += 1;
    }
    x
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Every labeled graph of order n (n <= 6 keeps this fast).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        let mut g = Graph::empty(n).unwrap();
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if bits >> b & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    })
}

pub fn fact(n: u64) -> u64 {
    (1..=n).product()
}
