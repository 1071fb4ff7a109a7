//! Dominating induced paths in interval graphs.

use super::repr::IntervalRepresentation;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Search for a valid path by brute force only below this many vertices.
const EXHAUSTIVE_LIMIT: usize = 12;

/// Induced path `p_1..p_k` starting at a leftmost interval, in which every
/// `p_{i+1}` reaches at least as far right as any neighbour of `p_i`, and
/// every vertex lies on or next to the path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarPath {
    pub vertices: Vec<usize>,
    /// The greedy invariant that failed, when the exhaustive search was used.
    pub fallback: Option<String>,
}

impl StarPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

pub fn build_star_path(g: &Graph, rep: &IntervalRepresentation) -> Result<StarPath> {
    rep.validate(g)?;
    if g.n() == 0 {
        return Err(Error::InvalidArgument("empty graph has no path".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    star_path_within(g, rep, &g.vertices())
}

/// Path for the connected vertex set `comp`; the representation is assumed
/// consistent with `g`.
pub(crate) fn star_path_within(g: &Graph, rep: &IntervalRepresentation, comp: &VertexSet) -> Result<StarPath> {
    let path = greedy(g, rep, comp);
    match check(g, rep, comp, &path) {
        Ok(()) => Ok(StarPath { vertices: path, fallback: None }),
        Err(reason) => {
            let found = exhaustive(g, rep, comp).ok_or_else(|| {
                Error::Internal(format!("no dominating induced path ({reason}); the representation is not usable"))
            })?;
            Ok(StarPath { vertices: found, fallback: Some(reason) })
        }
    }
}

fn greedy(g: &Graph, rep: &IntervalRepresentation, comp: &VertexSet) -> Vec<usize> {
    let first = comp.iter().min_by_key(|&v| (rep.left(v), rep.right(v), v)).expect("non-empty component");
    let mut path = vec![first];
    let mut on_path = VertexSet::singleton(g.n(), first);
    loop {
        let last = *path.last().expect("non-empty");
        let mut cands = g.neighbours(last).intersection(comp).difference(&on_path);
        if path.len() >= 2 {
            let prev = path[path.len() - 2];
            cands.difference_with(g.neighbours(prev));
        }
        let next = cands
            .iter()
            .filter(|&v| rep.right(v) > rep.right(last))
            .max_by(|&a, &b| rep.right(a).cmp(&rep.right(b)).then(b.cmp(&a)));
        match next {
            Some(v) => {
                path.push(v);
                on_path.insert(v);
            }
            None => return path,
        }
    }
}

/// `Err` names the first failed invariant.
fn check(g: &Graph, rep: &IntervalRepresentation, comp: &VertexSet, path: &[usize]) -> std::result::Result<(), String> {
    if path.is_empty() {
        return Err("empty path".into());
    }
    for (i, &a) in path.iter().enumerate() {
        for (j, &b) in path.iter().enumerate().skip(i + 1) {
            if a == b || g.has_edge(a, b) != (j == i + 1) {
                return Err(format!("not an induced path at positions {i}, {j}"));
            }
        }
    }
    let min_left = comp.iter().map(|v| rep.left(v)).min().expect("non-empty");
    if rep.left(path[0]) != min_left {
        return Err("first vertex is not leftmost".into());
    }
    for i in 0..path.len() - 1 {
        let reach = rep.right(path[i + 1]);
        if let Some(v) = g.neighbours(path[i]).iter().find(|&v| comp.contains(v) && rep.right(v) > reach) {
            return Err(format!("neighbour {v} of position {i} reaches past position {}", i + 1));
        }
    }
    let mut covered = VertexSet::new(g.n());
    for &p in path {
        covered.insert(p);
        covered.union_with(g.neighbours(p));
    }
    if let Some(v) = comp.difference(&covered).first() {
        return Err(format!("vertex {v} is not dominated"));
    }
    Ok(())
}

fn exhaustive(g: &Graph, rep: &IntervalRepresentation, comp: &VertexSet) -> Option<Vec<usize>> {
    if comp.len() > EXHAUSTIVE_LIMIT {
        return None;
    }
    let min_left = comp.iter().map(|v| rep.left(v)).min()?;
    let mut layer: Vec<Vec<usize>> = comp.iter().filter(|&v| rep.left(v) == min_left).map(|v| vec![v]).collect();
    while !layer.is_empty() {
        if let Some(p) = layer.iter().find(|p| check(g, rep, comp, p).is_ok()) {
            return Some(p.clone());
        }
        let mut next = Vec::new();
        for p in &layer {
            let last = *p.last().expect("non-empty");
            for v in g.neighbours(last).intersection(comp).iter() {
                if !p.contains(&v) && p[..p.len() - 1].iter().all(|&q| !g.has_edge(q, v)) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        layer = next;
    }
    None
}

/// `i_v`: position of the first path neighbour of each off-path vertex of
/// `comp`; `None` on the path and outside `comp`.
pub fn first_path_neighbours(g: &Graph, comp: &VertexSet, path: &[usize]) -> Vec<Option<usize>> {
    let mut out = vec![None; g.n()];
    for v in comp.iter() {
        if path.contains(&v) {
            continue;
        }
        out[v] = path.iter().position(|&p| g.has_edge(p, v));
    }
    out
}
