//! Simple undirected graphs over dense vertex ids with bitset adjacency.

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Simple, loopless, undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self { n, m: 0, adj: (0..n).map(|_| VertexSet::new(n)).collect() }
    }

    /// Builds a graph from an edge list. Loops, out-of-range endpoints and
    /// repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!("edge ({u}, {v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidArgument(format!("repeated edge ({u}, {v})")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && !self.has_edge(u, v));
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Degree of `v` inside `G[set]`.
    #[inline]
    pub fn degree_in(&self, v: usize, set: &VertexSet) -> usize {
        self.adj[v].intersection_len(set)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// Open neighbourhood of a set: vertices outside `set` adjacent to it.
    pub fn set_neighbourhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for v in set {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(set);
        out
    }

    /// Whether some edge joins `a` and `b`.
    pub fn sets_adjacent(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().any(|v| self.adj[v].intersects(b))
    }

    /// Number of edges with one end in `a` and the other in `b` (disjoint sets).
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|v| self.adj[v].intersection_len(b)).sum()
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Connected components of `G[set]`, ordered by smallest vertex.
    pub fn components_within(&self, set: &VertexSet) -> Vec<VertexSet> {
        let mut unseen = set.clone();
        let mut out = Vec::new();
        while let Some(start) = unseen.first() {
            let comp = self.reach_within(start, set);
            unseen.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices of `set` reachable from `start` inside `G[set]`.
    pub fn reach_within(&self, start: usize, set: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(self.n, start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::new(self.n);
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(set);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    pub fn is_connected_within(&self, set: &VertexSet) -> bool {
        match set.first() {
            None => true,
            Some(s) => self.reach_within(s, set).len() == set.len(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(&self.vertices())
    }

    /// Length of a shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // no shorter cycle through root can be found past this depth
                    if 2 * dist[u] >= b {
                        break;
                    }
                }
                for w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Subdivides every edge once. The vertex for the `i`-th edge in
    /// lexicographic order is `n + i`.
    pub fn subdivide(&self) -> Graph {
        let edges = self.edges();
        let mut h = Graph::empty(self.n + edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            let w = self.n + i;
            h.insert_edge(u, w);
            h.insert_edge(v, w);
        }
        h
    }

    /// `G[set]` relabelled to `0..|set|`, with the map from new to old ids.
    pub fn induced(&self, set: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = set.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            index[v] = i;
        }
        let mut h = Graph::empty(old.len());
        for (i, &v) in old.iter().enumerate() {
            for w in self.adj[v].intersection(set).iter().filter(|&w| w > v) {
                h.insert_edge(i, index[w]);
            }
        }
        (h, old)
    }

    /// Disjoint union, `other` relabelled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Checks symmetry, irreflexivity and the edge count.
    pub fn validate(&self) -> Result<()> {
        let mut degree_sum = 0;
        for v in 0..self.n {
            if self.adj[v].universe() != self.n {
                return Err(Error::Internal(format!("row {v} has wrong universe")));
            }
            if self.adj[v].contains(v) {
                return Err(Error::Internal(format!("loop at {v}")));
            }
            for w in &self.adj[v] {
                if !self.adj[w].contains(v) {
                    return Err(Error::Internal(format!("asymmetric pair ({v}, {w})")));
                }
            }
            degree_sum += self.degree(v);
        }
        if degree_sum != 2 * self.m {
            return Err(Error::Internal("edge count mismatch".into()));
        }
        Ok(())
    }

    /// First connected component of odd order, if any.
    pub fn odd_component(&self) -> Option<VertexSet> {
        self.components().into_iter().find(|c| c.len() % 2 == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, subdivided_complete};

    #[test]
    fn girth_examples() {
        assert_eq!(cycle(5).unwrap().girth(), Some(5));
        assert_eq!(subdivided_complete(4).unwrap().girth(), Some(6));
        assert_eq!(path(4).unwrap().girth(), None);
        assert_eq!(complete(4).unwrap().girth(), Some(3));
    }

    #[test]
    fn components_examples() {
        let k2 = complete(2).unwrap();
        assert_eq!(k2.components().iter().map(|c| c.to_vec()).collect::<Vec<_>>(), vec![vec![0, 1]]);
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            two.components().iter().map(|c| c.to_vec()).collect::<Vec<_>>(),
            vec![vec![0, 1], vec![2, 3]]
        );
        assert!(Graph::empty(0).components().is_empty());
    }

    #[test]
    fn subdivide_examples() {
        let p3 = complete(2).unwrap().subdivide();
        assert_eq!(p3.edges(), vec![(0, 2), (1, 2)]);
        let s = complete(4).unwrap().subdivide();
        assert_eq!((s.n(), s.m(), s.girth()), (10, 12, Some(6)));
        let e = Graph::empty(3);
        assert_eq!(e.subdivide(), e);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
        assert!(Graph::from_edges(2, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn induced_relabels() {
        let c = cycle(6).unwrap();
        let (h, map) = c.induced(&VertexSet::from_iter(6, [0, 1, 2, 4]));
        assert_eq!(map, vec![0, 1, 2, 4]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }
}
