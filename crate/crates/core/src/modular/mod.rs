//! Module partitions, module graphs, and the colourings they support: stars
//! (3 classes), colour-propagating trees (2 classes) and general module
//! partitions through a decomposition into such pieces.

mod decompose;

pub use decompose::{decompose, DecompositionResult};

use crate::bitset::VertexSet;
use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::exact::check_feasible;
use crate::gallai::{odd_even_even_partition_within, odd_even_partition_within};
use crate::graph::Graph;

/// A partition of `V(G)` into at least two non-empty parts. Whether every
/// part is a module is certified by [`build_module_graph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePartition {
    n: usize,
    parts: Vec<VertexSet>,
}

impl ModulePartition {
    pub fn new(n: usize, parts: Vec<VertexSet>) -> Result<Self> {
        check_partition(n, &parts)?;
        if parts.len() < 2 {
            return Err(Error::InvalidModulePartition(format!("{} part(s), need at least two", parts.len())));
        }
        Ok(Self { n, parts })
    }

    pub fn from_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut parts = Vec::with_capacity(lists.len());
        for l in lists {
            if let Some(&v) = l.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidModulePartition(format!("vertex {v} outside 0..{n}")));
            }
            parts.push(VertexSet::from_iter(n, l.iter().copied()));
        }
        Self::new(n, parts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(VertexSet::len).collect()
    }

    /// Non-empty intersections with `set`, in part order.
    pub fn restrict(&self, set: &VertexSet) -> Vec<VertexSet> {
        self.parts.iter().map(|p| p.intersection(set)).filter(|p| !p.is_empty()).collect()
    }
}

fn check_partition(n: usize, parts: &[VertexSet]) -> Result<()> {
    let mut seen = VertexSet::new(n);
    for (i, p) in parts.iter().enumerate() {
        if p.universe() != n {
            return Err(Error::InvalidModulePartition(format!("part {i} is over the wrong vertex range")));
        }
        if p.is_empty() {
            return Err(Error::InvalidModulePartition(format!("part {i} is empty")));
        }
        if let Some(v) = seen.intersection(p).first() {
            return Err(Error::InvalidModulePartition(format!("vertex {v} is in two parts")));
        }
        seen.union_with(p);
    }
    if let Some(v) = VertexSet::full(n).difference(&seen).first() {
        return Err(Error::InvalidModulePartition(format!("vertex {v} is in no part")));
    }
    Ok(())
}

/// Quotient graph on part indices, with the part sizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleGraph {
    pub graph: Graph,
    pub sizes: Vec<usize>,
}

impl ModuleGraph {
    pub fn is_tree(&self) -> bool {
        let g = &self.graph;
        g.n() >= 1 && g.m() + 1 == g.n() && g.is_connected()
    }

    pub fn is_star(&self) -> bool {
        let g = &self.graph;
        g.n() >= 2 && self.is_tree() && g.max_degree() + 1 == g.n()
    }

    /// Star centre: the vertex adjacent to all others; for two vertices the
    /// lower index.
    pub fn star_centre(&self) -> Option<usize> {
        if !self.is_star() {
            return None;
        }
        (0..self.graph.n()).find(|&v| self.graph.degree(v) + 1 == self.graph.n())
    }
}

/// Quotient of `G[∪ pieces]` over `pieces`; fails on a pair that is neither
/// complete nor anticomplete.
pub(crate) fn quotient(g: &Graph, pieces: &[VertexSet]) -> Result<ModuleGraph> {
    let k = pieces.len();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let e = g.edges_between(&pieces[i], &pieces[j]);
            if e == pieces[i].len() * pieces[j].len() {
                edges.push((i, j));
            } else if e != 0 {
                return Err(Error::NotModulePartition { first: i, second: j });
            }
        }
    }
    Ok(ModuleGraph { graph: Graph::from_edges(k, edges)?, sizes: pieces.iter().map(VertexSet::len).collect() })
}

pub fn build_module_graph(g: &Graph, m: &ModulePartition) -> Result<ModuleGraph> {
    if m.n() != g.n() {
        return Err(Error::InvalidModulePartition(format!(
            "partition over {} vertices for a graph on {}",
            m.n(),
            g.n()
        )));
    }
    quotient(g, m.parts())
}

/// Whether a tree-shaped module graph is colour propagating: some part is
/// not a leaf, every non-leaf part is a single vertex, and every edge between
/// two non-leaves splits the total size into two odd halves.
pub fn is_colour_propagating(tree: &Graph, sizes: &[usize]) -> Result<bool> {
    if sizes.len() != tree.n() {
        return Err(Error::InvalidArgument(format!("{} sizes for {} parts", sizes.len(), tree.n())));
    }
    if tree.n() == 0 || tree.m() + 1 != tree.n() || !tree.is_connected() {
        return Err(Error::InvalidArgument("module graph is not a tree".into()));
    }
    let inner: Vec<usize> = (0..tree.n()).filter(|&v| tree.degree(v) >= 2).collect();
    if inner.is_empty() || inner.iter().any(|&v| sizes[v] != 1) {
        return Ok(false);
    }
    for (a, b) in tree.edges() {
        if tree.degree(a) < 2 || tree.degree(b) < 2 {
            continue;
        }
        if side_weight(tree, sizes, a, b).is_multiple_of(2) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Total size of the component containing `a` once the edge `ab` is removed.
pub(crate) fn side_weight(tree: &Graph, sizes: &[usize], a: usize, b: usize) -> usize {
    let mut seen = vec![false; tree.n()];
    seen[a] = true;
    seen[b] = true;
    let mut stack = vec![a];
    let mut total = 0;
    while let Some(x) = stack.pop() {
        total += sizes[x];
        for y in tree.neighbours(x) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    total
}

pub(crate) fn is_star_or_cp(mg: &ModuleGraph) -> bool {
    mg.is_star() || (mg.is_tree() && is_colour_propagating(&mg.graph, &mg.sizes).unwrap_or(false))
}

fn union_all(n: usize, sets: &[VertexSet]) -> VertexSet {
    sets.iter().fold(VertexSet::new(n), |acc, s| acc.union(s))
}

fn check_even_connected(g: &Graph, set: &VertexSet) -> Result<()> {
    if set.len() % 2 == 1 {
        return Err(Error::Precondition(format!("odd order {}", set.len())));
    }
    if !g.is_connected_within(set) {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Star colouring of `G[∪ pieces]`, at most 3 classes (some may be empty).
pub(crate) fn colour_star_pieces(g: &Graph, pieces: &[VertexSet]) -> Result<Vec<VertexSet>> {
    let n = g.n();
    check_even_connected(g, &union_all(n, pieces))?;
    let mg = quotient(g, pieces)?;
    let centre = mg.star_centre().ok_or(Error::NotAStar)?;
    let leaves: Vec<usize> = (0..pieces.len()).filter(|&i| i != centre).collect();
    let mut v1 = VertexSet::new(n);
    let mut v2 = VertexSet::new(n);
    let mut v3 = VertexSet::new(n);
    let odd_leaf = leaves.iter().copied().find(|&i| pieces[i].len() % 2 == 1);

    if pieces[centre].len() % 2 == 1 {
        for p in pieces {
            let (w1, w2) = odd_even_partition_within(g, p)?;
            v1.union_with(&w1);
            v2.union_with(&w2);
        }
    } else if let Some(second) = odd_leaf {
        let (w1, w2, w3) = odd_even_even_partition_within(g, &pieces[centre])?;
        v1.union_with(&w1);
        v2.union_with(&w2);
        v3.union_with(&w3);
        for &i in &leaves {
            let (w1, w2) = odd_even_partition_within(g, &pieces[i])?;
            v1.union_with(&w1);
            if i == second {
                v3.union_with(&w2);
            } else {
                v2.union_with(&w2);
            }
        }
    } else {
        let second = leaves[0];
        for (i, p) in pieces.iter().enumerate() {
            if i == centre || i == second {
                let (w1, w2, w3) = odd_even_even_partition_within(g, p)?;
                v1.union_with(&w1);
                v2.union_with(&w2);
                v3.union_with(&w3);
            } else {
                let (w1, w2) = odd_even_partition_within(g, p)?;
                v1.union_with(&w1);
                v2.union_with(&w2);
            }
        }
    }
    Ok(vec![v1, v2, v3])
}

/// Colour-propagating tree colouring of `G[∪ pieces]`, 2 classes.
pub(crate) fn colour_cp_pieces(g: &Graph, pieces: &[VertexSet]) -> Result<Vec<VertexSet>> {
    let n = g.n();
    check_even_connected(g, &union_all(n, pieces))?;
    let mg = quotient(g, pieces)?;
    if !mg.is_tree() || !is_colour_propagating(&mg.graph, &mg.sizes)? {
        return Err(Error::NotColourPropagating);
    }
    let mut v1 = VertexSet::new(n);
    let mut v2 = VertexSet::new(n);
    for p in pieces {
        let (w1, w2) = odd_even_partition_within(g, p)?;
        v1.union_with(&w1);
        v2.union_with(&w2);
    }
    Ok(vec![v1, v2])
}

fn check_host(g: &Graph, m: &ModulePartition) -> Result<()> {
    if m.n() != g.n() {
        return Err(Error::InvalidModulePartition(format!(
            "partition over {} vertices for a graph on {}",
            m.n(),
            g.n()
        )));
    }
    Ok(())
}

/// At most 3 classes when the module graph is a star.
pub fn colour_star(g: &Graph, m: &ModulePartition) -> Result<Colouring> {
    check_host(g, m)?;
    Ok(Colouring::new(g.n(), colour_star_pieces(g, m.parts())?).compact())
}

/// 2 classes when the module graph is a colour-propagating tree.
pub fn colour_cp_tree(g: &Graph, m: &ModulePartition) -> Result<Colouring> {
    check_host(g, m)?;
    Ok(Colouring::new(g.n(), colour_cp_pieces(g, m.parts())?).compact())
}

/// Smallest module containing `seed`.
pub(crate) fn module_closure(g: &Graph, seed: &VertexSet, within: &VertexSet) -> VertexSet {
    let mut s = seed.clone();
    loop {
        let splitter = within.difference(&s).iter().find(|&w| {
            let c = g.neighbours(w).intersection_len(&s);
            c != 0 && c != s.len()
        });
        match splitter {
            Some(w) => s.insert(w),
            None => return s,
        }
    }
}

/// Maximal modules of a connected graph with a connected complement, by
/// repeatedly merging parts whose module closure is not everything.
fn maximal_modules(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let n = g.n();
    let mut parts: Vec<VertexSet> = within.iter().map(|v| VertexSet::singleton(n, v)).collect();
    'outer: loop {
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                let closure = module_closure(g, &parts[i].union(&parts[j]), within);
                if closure.len() == within.len() {
                    continue;
                }
                let (mut inside, outside): (Vec<VertexSet>, Vec<VertexSet>) =
                    parts.drain(..).partition(|p| p.intersects(&closure));
                let merged = inside.drain(..).fold(closure, |acc, p| acc.union(&p));
                parts = outside;
                parts.push(merged);
                parts.sort_by_key(|p| p.first());
                continue 'outer;
            }
        }
        return parts;
    }
}

fn complement_components(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let n = g.n();
    let mut unseen = within.clone();
    let mut out = Vec::new();
    while let Some(start) = unseen.first() {
        let mut comp = VertexSet::singleton(n, start);
        let mut frontier = vec![start];
        unseen.remove(start);
        while let Some(x) = frontier.pop() {
            let non_nbrs = unseen.difference(g.neighbours(x));
            for y in &non_nbrs {
                unseen.remove(y);
                comp.insert(y);
                frontier.push(y);
            }
        }
        out.push(comp);
    }
    out
}

/// A module partition of `G[set]`: components if disconnected, complement
/// components if the complement is disconnected, maximal modules otherwise.
pub(crate) fn naive_parts_within(g: &Graph, set: &VertexSet) -> Vec<VertexSet> {
    let comps = g.components_within(set);
    if comps.len() > 1 {
        return comps;
    }
    let co = complement_components(g, set);
    if co.len() > 1 {
        return co;
    }
    maximal_modules(g, set)
}

pub fn naive_module_partition(g: &Graph) -> Result<ModulePartition> {
    if g.n() < 2 {
        return Err(Error::InvalidArgument(format!("module partition needs at least 2 vertices, got {}", g.n())));
    }
    ModulePartition::new(g.n(), naive_parts_within(g, &g.vertices()))
}

/// Colours each component through [`decompose`]; coarse parts get disjoint
/// class ranges and components share them. At most `3 * |parts|` classes
/// when every component meets at least two parts.
pub fn colour_modular(g: &Graph, m: &ModulePartition) -> Result<Colouring> {
    check_host(g, m)?;
    check_feasible(g)?;
    build_module_graph(g, m)?;
    let n = g.n();
    let mut merged: Vec<VertexSet> = Vec::new();
    for comp in g.components() {
        let mut pieces = m.restrict(&comp);
        if pieces.len() < 2 {
            pieces = naive_parts_within(g, &comp);
        }
        let result = decompose::decompose_pieces(g, &comp, pieces)?;
        let mut classes: Vec<VertexSet> = Vec::new();
        for group in &result.groups {
            let parts: Vec<VertexSet> = group.iter().map(|&i| result.refined[i].clone()).collect();
            let mg = quotient(g, &parts)?;
            let cls = if mg.is_star() { colour_star_pieces(g, &parts)? } else { colour_cp_pieces(g, &parts)? };
            classes.extend(cls.into_iter().filter(|c| !c.is_empty()));
        }
        for (i, c) in classes.into_iter().enumerate() {
            if i == merged.len() {
                merged.push(VertexSet::new(n));
            }
            merged[i].union_with(&c);
        }
    }
    Ok(Colouring::new(n, merged))
}

/// `3 *` the largest number of parts met by one component, counting the
/// naive partition where a component meets only one part.
pub fn modular_bound(g: &Graph, m: &ModulePartition) -> usize {
    let widest = g
        .components()
        .iter()
        .map(|comp| match m.restrict(comp).len() {
            k if k >= 2 => k,
            _ => naive_parts_within(g, comp).len(),
        })
        .max()
        .unwrap_or(0);
    3 * widest
}
