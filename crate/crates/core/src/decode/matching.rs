//! Perfect matching of defects under a shortest-path metric.

use std::collections::VecDeque;

use mwmatching::{Matching, SENTINEL};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How defects are paired up.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MatchingStrategy {
    /// Minimum-weight perfect matching (blossom).
    #[default]
    Exact,
    /// Repeatedly pair the closest remaining defects; faster, not optimal.
    Greedy,
}

/// Undirected multigraph with BFS shortest-path trees from every node.
///
/// Neighbors are scanned in ascending edge index, so ties between equally
/// short paths always resolve the same way.
#[derive(Clone, Debug)]
pub struct PathGraph {
    dist: Vec<Vec<u32>>,
    // parent[s][t] = (previous node, edge) on the BFS tree rooted at s
    parent: Vec<Vec<(usize, usize)>>,
}

const UNREACHED: u32 = u32::MAX;

impl PathGraph {
    /// `links[e] = [a, b]`; self-loops are ignored.
    pub fn new(nodes: usize, links: &[[usize; 2]]) -> Self {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nodes];
        for (e, &[a, b]) in links.iter().enumerate() {
            if a != b {
                adj[a].push((b, e));
                adj[b].push((a, e));
            }
        }
        let mut dist = Vec::with_capacity(nodes);
        let mut parent = Vec::with_capacity(nodes);
        for s in 0..nodes {
            let mut d = vec![UNREACHED; nodes];
            let mut p = vec![(usize::MAX, usize::MAX); nodes];
            let mut queue = VecDeque::from([s]);
            d[s] = 0;
            while let Some(u) = queue.pop_front() {
                for &(v, e) in &adj[u] {
                    if d[v] == UNREACHED {
                        d[v] = d[u] + 1;
                        p[v] = (u, e);
                        queue.push_back(v);
                    }
                }
            }
            dist.push(d);
            parent.push(p);
        }
        Self { dist, parent }
    }

    pub fn num_nodes(&self) -> usize {
        self.dist.len()
    }

    pub fn distance(&self, a: usize, b: usize) -> Option<u32> {
        let d = self.dist[a][b];
        (d != UNREACHED).then_some(d)
    }

    /// Edges of the BFS path from `a` to `b`.
    pub fn path(&self, a: usize, b: usize) -> Result<Vec<usize>> {
        if self.distance(a, b).is_none() {
            return Err(Error::Internal(format!("nodes {a} and {b} are disconnected")));
        }
        let mut out = Vec::new();
        let mut t = b;
        while t != a {
            let (prev, e) = self.parent[a][t];
            out.push(e);
            t = prev;
        }
        Ok(out)
    }

    /// Pairs up `defects` (node ids, even count) and returns index pairs into `defects`.
    pub fn match_defects(
        &self,
        defects: &[usize],
        strategy: MatchingStrategy,
    ) -> Result<Vec<(usize, usize)>> {
        let k = defects.len();
        if k == 0 {
            return Ok(Vec::new());
        }
        let mut pairs = Vec::with_capacity(k * (k - 1) / 2);
        for i in 0..k {
            for j in i + 1..k {
                let d = self.distance(defects[i], defects[j]).ok_or_else(|| {
                    Error::Internal(format!("defects at {} and {} are disconnected", defects[i], defects[j]))
                })?;
                pairs.push((d, i, j));
            }
        }
        match strategy {
            MatchingStrategy::Exact => exact(k, &pairs),
            MatchingStrategy::Greedy => Ok(greedy(k, pairs)),
        }
    }
}

fn exact(k: usize, pairs: &[(u32, usize, usize)]) -> Result<Vec<(usize, usize)>> {
    // Maximum-weight maximum-cardinality matching with weight W − d is a
    // minimum-distance perfect matching of the complete defect graph.
    let top = pairs.iter().map(|p| p.0).max().unwrap_or(0) as i64 + 1;
    if top > i32::MAX as i64 {
        return Err(Error::Internal("path lengths overflow matching weights".into()));
    }
    let edges = pairs.iter().map(|&(d, i, j)| (i, j, (top - d as i64) as i32)).collect();
    let mate = Matching::new(edges).max_cardinality().solve();
    let mut out = Vec::with_capacity(k / 2);
    for i in 0..k {
        let j = mate.get(i).copied().unwrap_or(SENTINEL);
        if j == SENTINEL {
            return Err(Error::Internal(format!("defect {i} left unmatched")));
        }
        if i < j {
            out.push((i, j));
        }
    }
    Ok(out)
}

fn greedy(k: usize, mut pairs: Vec<(u32, usize, usize)>) -> Vec<(usize, usize)> {
    pairs.sort_unstable();
    let mut used = vec![false; k];
    let mut out = Vec::with_capacity(k / 2);
    for (_, i, j) in pairs {
        if !used[i] && !used[j] {
            used[i] = true;
            used[j] = true;
            out.push((i, j));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> PathGraph {
        let links: Vec<[usize; 2]> = (0..n).map(|i| [i, (i + 1) % n]).collect();
        PathGraph::new(n, &links)
    }

    #[test]
    fn paths_on_a_cycle() {
        let g = cycle(6);
        assert_eq!(g.distance(0, 3), Some(3));
        assert_eq!(g.distance(1, 5), Some(2));
        assert_eq!(g.path(0, 2).unwrap().len(), 2);
        assert!(g.path(4, 4).unwrap().is_empty());
    }

    #[test]
    fn exact_beats_greedy_on_a_path() {
        // Pairing the closest defects first forces a long leftover pair.
        let links = [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 6]];
        let g = PathGraph::new(7, &links);
        let defects = [0, 2, 3, 5];
        let cost = |m: &[(usize, usize)]| -> u32 {
            m.iter().map(|&(i, j)| g.distance(defects[i], defects[j]).unwrap()).sum()
        };
        let ex = g.match_defects(&defects, MatchingStrategy::Exact).unwrap();
        let gr = g.match_defects(&defects, MatchingStrategy::Greedy).unwrap();
        assert_eq!(cost(&ex), 4);
        assert_eq!(cost(&gr), 6);
    }

    #[test]
    fn disconnected_defects_are_an_error() {
        let g = PathGraph::new(4, &[[0, 1], [2, 3]]);
        assert!(g.match_defects(&[0, 2], MatchingStrategy::Exact).is_err());
    }
}
