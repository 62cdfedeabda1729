//! Brute-force oracles, written against the raw edge list only.
#![allow(dead_code)]

use qtorus_core::graph::Graph;
use qtorus_core::torus::{TorusGraph, TorusParams};

/// Edge sets as bit masks over edge ids; every graph here has < 64 edges.
pub type Mask = u64;

pub fn torus(n: usize, m: usize, r: usize) -> TorusGraph {
    TorusGraph::new(TorusParams::new(n, m, r).unwrap()).unwrap()
}

pub fn mask_of(edges: &[usize]) -> Mask {
    edges.iter().fold(0, |acc, &e| acc | (1 << e))
}

fn covers_each_vertex_once(g: &Graph, mask: Mask) -> bool {
    let mut seen = vec![false; g.order()];
    for e in 0..g.size() {
        if mask >> e & 1 == 1 {
            let (a, b) = g.edge(e);
            if seen[a] || seen[b] {
                return false;
            }
            seen[a] = true;
            seen[b] = true;
        }
    }
    seen.into_iter().all(|s| s)
}

/// Every perfect matching, found by filtering all edge subsets of size
/// `order / 2` (Gosper's hack over the edge count).
pub fn matchings_by_subsets(g: &Graph) -> Vec<Mask> {
    let (k, e) = (g.order() / 2, g.size());
    assert!(e < 64 && g.order().is_multiple_of(2));
    let mut out = Vec::new();
    if k == 0 {
        return vec![0];
    }
    let mut s: Mask = (1 << k) - 1;
    while s < 1 << e {
        if covers_each_vertex_once(g, s) {
            out.push(s);
        }
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    out
}

/// Every perfect matching, by matching the lowest free vertex recursively.
pub fn matchings_by_recursion(g: &Graph) -> Vec<Mask> {
    fn go(g: &Graph, used: &mut Vec<bool>, acc: Mask, out: &mut Vec<Mask>) {
        let Some(v) = used.iter().position(|&u| !u) else {
            out.push(acc);
            return;
        };
        used[v] = true;
        for e in 0..g.size() {
            let (a, b) = g.edge(e);
            let w = if a == v { b } else if b == v { a } else { continue };
            if !used[w] {
                used[w] = true;
                go(g, used, acc | 1 << e, out);
                used[w] = false;
            }
        }
        used[v] = false;
    }
    let mut out = Vec::new();
    go(g, &mut vec![false; g.order()], 0, &mut out);
    out.sort_unstable();
    out
}

/// `s` forces `m` iff `m` is the only perfect matching containing `s`.
pub fn forces(all: &[Mask], m: Mask, s: Mask) -> bool {
    all.iter().filter(|&&other| other & s == s).all(|&other| other == m)
}

/// Smallest forcing subset of `m`, by enumerating subsets in size order.
pub fn forcing_number_oracle(all: &[Mask], m: Mask) -> usize {
    let bits: Vec<usize> = (0..64).filter(|b| m >> b & 1 == 1).collect();
    let mut best = bits.len();
    for sub in 0u64..1 << bits.len() {
        let size = sub.count_ones() as usize;
        if size >= best {
            continue;
        }
        let s = bits
            .iter()
            .enumerate()
            .filter(|(i, _)| sub >> i & 1 == 1)
            .fold(0, |acc, (_, &b)| acc | 1 << b);
        if forces(all, m, s) {
            best = size;
        }
    }
    best
}

/// All non-degenerate tori of even order with at most `max` vertices.
pub fn small_tori(max: usize) -> Vec<TorusGraph> {
    let mut out = Vec::new();
    for n in 1..=max {
        for m in 2..=max / n {
            for r in 1..=m {
                if (n * m) % 2 == 0 {
                    if let Ok(t) = TorusGraph::new(TorusParams::new(n, m, r).unwrap()) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}
