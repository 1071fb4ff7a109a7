//! Splitting a module partition into coarse parts, each of which carries a
//! star or colour-propagating tree as its module graph.
//!
//! The search works on the quotient: a state records how many vertices of
//! each module are still unassigned, and a move peels one coarse part made
//! of at most one piece per module. Pieces are always taken from the front
//! of what is left of a module, so a state is just a size vector.

use std::collections::HashMap;

use super::{build_module_graph, is_star_or_cp, quotient, ModuleGraph, ModulePartition};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

const NODE_LIMIT: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult {
    /// Refinement of the input partition, at most twice as many parts.
    pub refined: Vec<VertexSet>,
    /// Even-order coarse parts, each a union of at least two refined parts.
    pub coarse: Vec<VertexSet>,
    /// Indices into `refined` making up each coarse part.
    pub groups: Vec<Vec<usize>>,
}

pub fn decompose(g: &Graph, m: &ModulePartition) -> Result<DecompositionResult> {
    build_module_graph(g, m)?;
    decompose_pieces(g, &g.vertices(), m.parts().to_vec())
}

type Peel = Vec<(usize, usize)>;

struct Search {
    adj: Vec<Vec<bool>>,
    budget: usize,
    failed: HashMap<Vec<usize>, usize>,
    nodes: usize,
}

impl Search {
    fn shape_ok(&self, peel: &Peel) -> bool {
        let mut edges = Vec::new();
        for i in 0..peel.len() {
            for j in i + 1..peel.len() {
                if self.adj[peel[i].0][peel[j].0] {
                    edges.push((i, j));
                }
            }
        }
        let Ok(graph) = Graph::from_edges(peel.len(), edges) else {
            return false;
        };
        is_star_or_cp(&ModuleGraph { graph, sizes: peel.iter().map(|&(_, t)| t).collect() })
    }

    /// Active modules reachable from `start`.
    fn component(&self, rem: &[usize], start: usize) -> Vec<usize> {
        let mut seen = vec![false; rem.len()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut out = Vec::new();
        while let Some(x) = stack.pop() {
            out.push(x);
            for y in 0..rem.len() {
                if !seen[y] && rem[y] > 0 && self.adj[x][y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Side of `x` within `comp` once the edge `xy` is ignored; `None` if
    /// `y` is still reachable.
    fn bridge_side(&self, comp: &[usize], x: usize, y: usize) -> Option<Vec<usize>> {
        let mut seen = vec![false; self.adj.len()];
        seen[x] = true;
        let mut side = vec![x];
        let mut stack = vec![x];
        while let Some(a) = stack.pop() {
            for &b in comp {
                if self.adj[a][b] && !(a == x && b == y) && !seen[b] {
                    if b == y {
                        return None;
                    }
                    seen[b] = true;
                    side.push(b);
                    stack.push(b);
                }
            }
        }
        side.sort_unstable();
        Some(side)
    }

    fn piece_sizes(avail: usize, parity: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let least = if parity == 1 { 1 } else { 2 };
        if least <= avail {
            out.push(least);
        }
        if avail % 2 == parity && avail != least {
            out.push(avail);
        }
        out
    }

    fn candidates(&self, rem: &[usize], comp: &[usize]) -> Vec<Peel> {
        let mut out: Vec<Peel> = Vec::new();
        let edges: Vec<(usize, usize)> =
            comp.iter().flat_map(|&a| comp.iter().filter(move |&&b| a < b).map(move |&b| (a, b))).filter(|&(a, b)| self.adj[a][b]).collect();

        for &(a, b) in &edges {
            for (x, y) in [(a, b), (b, a)] {
                let Some(side) = self.bridge_side(comp, x, y) else { continue };
                let w: usize = side.iter().map(|&s| rem[s]).sum();
                let whole: Peel = side.iter().map(|&s| (s, rem[s])).collect();
                if w.is_multiple_of(2) && side.len() >= 2 {
                    out.push(whole.clone());
                }
                for t in Self::piece_sizes(rem[y], w % 2) {
                    let mut p = whole.clone();
                    p.push((y, t));
                    out.push(p);
                }
            }
        }

        let degree = |x: usize| comp.iter().filter(|&&y| self.adj[x][y]).count();
        for &c in comp {
            let leaves: Vec<usize> = comp.iter().copied().filter(|&l| self.adj[c][l] && degree(l) == 1).collect();
            if leaves.is_empty() {
                continue;
            }
            let w: usize = leaves.iter().map(|&l| rem[l]).sum();
            for t in Self::piece_sizes(rem[c], w % 2) {
                let mut p: Peel = leaves.iter().map(|&l| (l, rem[l])).collect();
                p.push((c, t));
                out.push(p);
            }
        }

        for &(a, b) in &edges {
            let opts = |r: usize| {
                let mut v = vec![1, 2, r];
                v.retain(|&t| t <= r);
                v.dedup();
                v
            };
            for ta in opts(rem[a]) {
                for tb in opts(rem[b]) {
                    if (ta + tb) % 2 == 0 {
                        out.push(vec![(a, ta), (b, tb)]);
                    }
                }
            }
        }

        for p in &mut out {
            p.sort_unstable();
        }
        let mut seen = Vec::new();
        out.retain(|p| {
            if seen.contains(p) {
                false
            } else {
                seen.push(p.clone());
                true
            }
        });
        out
    }

    fn run(&mut self, rem: &mut Vec<usize>, used: usize, peels: &mut Vec<Peel>) -> bool {
        let Some(start) = rem.iter().position(|&r| r > 0) else {
            return true;
        };
        let active = rem.iter().filter(|&&r| r > 0).count();
        if used + active > self.budget || self.nodes >= NODE_LIMIT {
            return false;
        }
        if self.failed.get(rem.as_slice()).is_some_and(|&u| used >= u) {
            return false;
        }
        self.nodes += 1;

        let comp = self.component(rem, start);
        let weight: usize = comp.iter().map(|&x| rem[x]).sum();
        let found = if weight % 2 == 1 || comp.len() < 2 {
            false
        } else {
            let whole: Peel = comp.iter().map(|&x| (x, rem[x])).collect();
            if self.shape_ok(&whole) {
                self.apply(rem, used, peels, whole)
            } else {
                let cands = self.candidates(rem, &comp);
                cands.into_iter().any(|p| self.shape_ok(&p) && self.apply(rem, used, peels, p))
            }
        };
        if !found {
            let entry = self.failed.entry(rem.clone()).or_insert(usize::MAX);
            *entry = (*entry).min(used);
        }
        found
    }

    fn apply(&mut self, rem: &mut Vec<usize>, used: usize, peels: &mut Vec<Peel>, peel: Peel) -> bool {
        for &(m, t) in &peel {
            rem[m] -= t;
        }
        let len = peel.len();
        peels.push(peel);
        if self.run(rem, used + len, peels) {
            return true;
        }
        let peel = peels.pop().expect("pushed above");
        for &(m, t) in &peel {
            rem[m] += t;
        }
        false
    }
}

/// Decomposes `G[set]` given a module partition `pieces` of it.
pub(crate) fn decompose_pieces(g: &Graph, set: &VertexSet, pieces: Vec<VertexSet>) -> Result<DecompositionResult> {
    if set.len() % 2 == 1 {
        return Err(Error::Precondition(format!("odd order {}", set.len())));
    }
    if !g.is_connected_within(set) {
        return Err(Error::Disconnected);
    }
    if pieces.len() < 2 {
        return Err(Error::InvalidModulePartition(format!("{} part(s), need at least two", pieces.len())));
    }
    let mg = quotient(g, &pieces)?;
    let k = pieces.len();
    if is_star_or_cp(&mg) {
        return Ok(DecompositionResult { refined: pieces, coarse: vec![set.clone()], groups: vec![(0..k).collect()] });
    }
    let adj: Vec<Vec<bool>> = (0..k).map(|i| (0..k).map(|j| mg.graph.has_edge(i, j)).collect()).collect();
    let mut search = Search { adj, budget: 2 * k, failed: HashMap::new(), nodes: 0 };
    let mut rem = mg.sizes.clone();
    let mut peels = Vec::new();
    if !search.run(&mut rem, 0, &mut peels) {
        return Err(if search.nodes >= NODE_LIMIT {
            Error::Internal(format!("decomposition search gave up after {NODE_LIMIT} states"))
        } else {
            Error::Internal("no decomposition found".into())
        });
    }

    let lists: Vec<Vec<usize>> = pieces.iter().map(VertexSet::to_vec).collect();
    let mut offset = vec![0; k];
    let mut result = DecompositionResult { refined: Vec::new(), coarse: Vec::new(), groups: Vec::new() };
    for peel in peels {
        let mut group = Vec::new();
        let mut union = VertexSet::new(g.n());
        for (m, t) in peel {
            let piece = VertexSet::from_iter(g.n(), lists[m][offset[m]..offset[m] + t].iter().copied());
            offset[m] += t;
            union.union_with(&piece);
            group.push(result.refined.len());
            result.refined.push(piece);
        }
        result.coarse.push(union);
        result.groups.push(group);
    }
    check(g, set, k, &result)?;
    Ok(result)
}

fn check(g: &Graph, set: &VertexSet, k: usize, r: &DecompositionResult) -> Result<()> {
    let fail = |msg: String| Err(Error::Internal(format!("decomposition check: {msg}")));
    if r.refined.len() > 2 * k {
        return fail(format!("{} refined parts from {k}", r.refined.len()));
    }
    let covered = r.coarse.iter().fold(VertexSet::new(g.n()), |acc, c| acc.union(c));
    if covered != *set || r.coarse.iter().map(VertexSet::len).sum::<usize>() != set.len() {
        return fail("coarse parts do not partition the vertex set".into());
    }
    for (i, group) in r.groups.iter().enumerate() {
        if r.coarse[i].len() % 2 == 1 || group.len() < 2 {
            return fail(format!("coarse part {i} is odd or too small"));
        }
        let parts: Vec<VertexSet> = group.iter().map(|&j| r.refined[j].clone()).collect();
        if !is_star_or_cp(&quotient(g, &parts)?) {
            return fail(format!("coarse part {i} is neither a star nor colour propagating"));
        }
    }
    Ok(())
}
