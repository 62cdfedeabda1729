//! Edmonds' blossom search for a single augmenting path.

use std::collections::VecDeque;

use super::UNMATCHED;

const NONE: usize = usize::MAX;

/// Searches for an augmenting path that starts at the exposed vertex `root`.
/// Returns the path from its other (exposed) end back to `root`.
///
/// The search tree grown from one root finds an augmenting path from that
/// root whenever one exists.
pub(super) fn augmenting_path_from(adj: &[Vec<usize>], mate: &[usize], root: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    debug_assert_eq!(mate[root], UNMATCHED);
    let mut search = Search {
        adj,
        mate,
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        blossom: vec![false; n],
    };
    let end = search.grow(root)?;
    let mut path = Vec::new();
    let mut v = end;
    loop {
        let pv = search.parent[v];
        path.push(v);
        path.push(pv);
        if pv == root {
            break;
        }
        v = mate[pv];
    }
    Some(path)
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    mate: &'a [usize],
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
}

impl Search<'_> {
    fn grow(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        let mut queue = VecDeque::new();
        self.used[root] = true;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &to in &self.adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                let to_is_outer =
                    to == root || (self.mate[to] != UNMATCHED && self.parent[self.mate[to]] != NONE);
                if to_is_outer {
                    let cur = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == UNMATCHED {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == UNMATCHED {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_path(adj: &[Vec<usize>], mate: &[usize], path: &[usize]) {
        let mut seen = std::collections::HashSet::new();
        assert!(path.iter().all(|v| seen.insert(*v)), "path repeats a vertex");
        for k in 0..path.len() - 1 {
            assert!(adj[path[k]].contains(&path[k + 1]));
            let matched = mate[path[k]] == path[k + 1];
            assert_eq!(matched, k % 2 == 1);
        }
    }

    #[test]
    fn finds_path_through_a_blossom() {
        // 0 - 1 = 2, triangle 2 - 3 = 4 - 2, then 3 - 5; exposed 0 and 5.
        // The only augmenting path 0 1 2 4 3 5 goes around the blossom.
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 2), (3, 5)];
        let mut adj = vec![Vec::new(); 6];
        for (a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut mate = vec![UNMATCHED; 6];
        for (a, b) in [(1, 2), (3, 4)] {
            mate[a] = b;
            mate[b] = a;
        }
        let path = augmenting_path_from(&adj, &mate, 0).unwrap();
        assert_eq!(path, vec![5, 3, 4, 2, 1, 0]);
        check_path(&adj, &mate, &path);
    }

    #[test]
    fn single_edge_and_disconnected() {
        let adj = vec![vec![1], vec![0], vec![3], vec![2]];
        let mut mate = vec![UNMATCHED; 4];
        mate[2] = 3;
        mate[3] = 2;
        let p = augmenting_path_from(&adj, &mate, 0).unwrap();
        assert_eq!(p, vec![1, 0]);
        let adj = vec![vec![], vec![], vec![3], vec![2]];
        assert!(augmenting_path_from(&adj, &mate, 0).is_none());
    }
}
