//! Six classes for interval graphs with even components.
//!
//! Off-path vertices are grouped into blocks `Y_i` hanging off `p_i`, with at
//! most one vertex deferred to the next block to fix parity. Blocks are then
//! coloured left to right, each `{p_i} ∪ Y_i` split into an odd part and an
//! even part plus `p_i`, and the two parts put into classes that the
//! neighbourhood of the part does not reach.

use super::path::{first_path_neighbours, star_path_within};
use super::repr::IntervalRepresentation;
use crate::bitset::VertexSet;
use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::exact::check_feasible;
use crate::gallai::odd_even_partition_within;
use crate::graph::Graph;
use crate::verify::verify_colouring;

pub const CLASSES: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalStep {
    pub block: usize,
    pub block_size: usize,
    /// Classes receiving the odd part and the part holding `p_i`.
    pub classes: (usize, usize),
    /// `(from, to)` when part of the previous block changed class first.
    pub repair: Option<(usize, usize)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntervalTrace {
    pub checks: usize,
    pub violations: Vec<String>,
    pub deferrals: usize,
    /// Blocks holding a vertex deferred from two positions back.
    pub far_deferrals: usize,
    pub repairs: usize,
    pub path_fallbacks: usize,
    pub steps: Vec<IntervalStep>,
}

impl IntervalTrace {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(what());
        }
    }
}

pub fn interval_colouring(g: &Graph, rep: &IntervalRepresentation) -> Result<Colouring> {
    let (c, trace) = interval_colouring_traced(g, rep)?;
    if let Some(v) = trace.violations.first() {
        return Err(Error::Internal(format!("interval invariant violated: {v}")));
    }
    Ok(c)
}

/// Like [`interval_colouring`], also returning every invariant check made
/// on the way. Violations are recorded rather than raised.
pub fn interval_colouring_traced(g: &Graph, rep: &IntervalRepresentation) -> Result<(Colouring, IntervalTrace)> {
    rep.validate(g)?;
    check_feasible(g)?;
    let n = g.n();
    let mut trace = IntervalTrace::default();
    let mut classes = vec![VertexSet::new(n); CLASSES];
    for comp in g.components() {
        let parts = colour_component(g, rep, &comp, &mut trace)?;
        for (c, p) in classes.iter_mut().zip(parts) {
            c.union_with(&p);
        }
    }
    let colouring = Colouring::new(n, classes).compact();
    let report = verify_colouring(g, &colouring);
    trace.check(report.valid, || format!("final colouring invalid: {report}"));
    Ok((colouring, trace))
}

fn lowest_free(mask: u8) -> Option<usize> {
    (0..CLASSES).find(|&c| mask & (1 << c) == 0)
}

struct Blocks {
    path: Vec<usize>,
    firsts: Vec<Option<usize>>,
    ys: Vec<VertexSet>,
    /// `{p_i} ∪ Y_i`.
    full: Vec<VertexSet>,
}

fn build_blocks(g: &Graph, rep: &IntervalRepresentation, comp: &VertexSet, trace: &mut IntervalTrace) -> Result<Blocks> {
    let n = g.n();
    let sp = star_path_within(g, rep, comp)?;
    if sp.fallback.is_some() {
        trace.path_fallbacks += 1;
    }
    let path = sp.vertices;
    let k = path.len();
    let firsts = first_path_neighbours(g, comp, &path);

    for v in comp.iter().filter(|v| firsts[*v].is_some()) {
        let iv = firsts[v].expect("off path");
        for (i, &p) in path.iter().enumerate() {
            if !(iv..=iv + 2).contains(&i) {
                trace.check(!rep.get(v).intersects(rep.get(p)), || {
                    format!("vertex {v} with first path neighbour {iv} meets path position {i}")
                });
            }
        }
    }

    let mut groups = vec![VertexSet::new(n); k];
    for v in comp.iter() {
        if let Some(i) = firsts[v] {
            groups[i].insert(v);
        }
    }
    let mut ys = Vec::with_capacity(k);
    let mut carry = None;
    let mut prefix = 0;
    for i in 0..k {
        let mut y = groups[i].clone();
        if let Some(w) = carry.take() {
            y.insert(w);
        }
        prefix += 1 + groups[i].len();
        if prefix % 2 == 1 && i + 1 < k {
            let reach = y.intersection(g.neighbours(path[i + 1]));
            if let Some(w) = reach.iter().max_by(|&a, &b| firsts[a].cmp(&firsts[b]).then(b.cmp(&a))) {
                y.remove(w);
                carry = Some(w);
                trace.deferrals += 1;
            }
        }
        let p = path[i];
        trace.check(y.is_subset(g.neighbours(p)), || format!("block {i} has a vertex not adjacent to its path vertex"));
        ys.push(y);
    }
    trace.check(carry.is_none(), || "a deferred vertex was never placed".into());

    for (i, y) in ys.iter().enumerate() {
        let Some(lo) = y.iter().filter_map(|v| firsts[v]).min() else { continue };
        let nbrs = g.set_neighbourhood(y);
        for (j, yj) in ys.iter().enumerate().take((lo + 1).saturating_sub(2)) {
            trace.check(!nbrs.intersects(yj), || format!("block {i} sees block {j} below its reuse window"));
        }
    }

    let full = ys
        .iter()
        .zip(&path)
        .map(|(y, &p)| {
            let mut f = y.clone();
            f.insert(p);
            f
        })
        .collect();
    Ok(Blocks { path, firsts, ys, full })
}

fn colour_component(
    g: &Graph,
    rep: &IntervalRepresentation,
    comp: &VertexSet,
    trace: &mut IntervalTrace,
) -> Result<Vec<VertexSet>> {
    let n = g.n();
    let b = build_blocks(g, rep, comp, trace)?;
    let k = b.path.len();
    let mut v = vec![VertexSet::new(n); CLASSES];
    let mut processed = VertexSet::new(n);
    let none = || Error::Internal("no free class".into());

    for i in 0..k {
        let classes_of = |v: &[VertexSet], back: usize| -> u8 {
            if back > i {
                return 0;
            }
            let blk = &b.full[i - back];
            (0..CLASSES).filter(|&c| v[c].intersects(blk)).fold(0, |m, c| m | 1 << c)
        };
        let p = b.path[i];
        let (w1, mut w2) = if b.ys[i].is_empty() {
            (VertexSet::new(n), VertexSet::new(n))
        } else {
            odd_even_partition_within(g, &b.ys[i])?
        };
        w2.insert(p);

        let deferred = b.ys[i].iter().find(|&u| b.firsts[u].is_some_and(|f| f + 2 <= i));
        let mut repair = None;
        let (h1, h2) = match deferred {
            None => {
                let forbid = classes_of(&v, 2) | classes_of(&v, 1);
                let h1 = lowest_free(forbid).ok_or_else(none)?;
                let h2 = lowest_free(forbid | 1 << h1).ok_or_else(none)?;
                (h1, h2)
            }
            Some(w) => {
                trace.far_deferrals += 1;
                let jz = lowest_free(classes_of(&v, 3) | classes_of(&v, 2)).ok_or_else(none)?;
                let prev = classes_of(&v, 1);
                if prev & 1 << jz != 0 {
                    let moved = v[jz].intersection(&b.full[i - 1]);
                    let to = lowest_free(classes_of(&v, 2) | prev | 1 << jz).ok_or_else(none)?;
                    v[jz].difference_with(&moved);
                    v[to].union_with(&moved);
                    repair = Some((jz, to));
                    trace.repairs += 1;
                    check_classes(g, &b, &v, &processed, i - 1, trace);
                }
                let jx = lowest_free(classes_of(&v, 2) | classes_of(&v, 1) | 1 << jz).ok_or_else(none)?;
                if w2.contains(w) {
                    (jx, jz)
                } else {
                    (jz, jx)
                }
            }
        };
        trace.check(!g.set_neighbourhood(&w1).intersects(&v[h1]), || {
            format!("block {i}: odd part sees its class {h1}")
        });

        let (j1, j2) = if processed.len().is_multiple_of(2) {
            trace.check(!g.set_neighbourhood(&w2).intersects(&v[h2]), || {
                format!("block {i}: path part sees its class {h2}")
            });
            (h1, h2)
        } else {
            let prev = b.path[i - 1];
            let j2 = (0..CLASSES).find(|&c| v[c].contains(prev)).ok_or_else(none)?;
            (h1, j2)
        };
        trace.check(j1 != j2 || w1.is_empty(), || format!("block {i}: both parts in class {j1}"));
        v[j1].union_with(&w1);
        v[j2].union_with(&w2);
        processed.union_with(&b.full[i]);
        trace.steps.push(IntervalStep { block: i, block_size: b.full[i].len(), classes: (j1, j2), repair });
        check_classes(g, &b, &v, &processed, i, trace);
    }
    Ok(v)
}

/// Parity, two-classes-per-block and path-edge separation after block `i`.
fn check_classes(g: &Graph, b: &Blocks, v: &[VertexSet], processed: &VertexSet, i: usize, trace: &mut IntervalTrace) {
    let p = b.path[i];
    let even_prefix = processed.len().is_multiple_of(2);
    for (c, class) in v.iter().enumerate() {
        for u in class.iter() {
            let odd = g.degree_in(u, class) % 2 == 1;
            trace.check(odd || (!even_prefix && u == p), || {
                format!("after block {i}: vertex {u} has even degree in class {c}")
            });
        }
    }
    let spread = v.iter().filter(|c| c.intersects(&b.full[i])).count();
    trace.check(spread <= 2, || format!("block {i} spans {spread} classes"));

    let block_of = |u: usize| b.full.iter().position(|f| f.contains(u));
    let path_edge = |x: usize, y: usize| b.path.windows(2).any(|w| (w[0] == x && w[1] == y) || (w[0] == y && w[1] == x));
    for (c, class) in v.iter().enumerate() {
        let mut seen = VertexSet::new(g.n());
        for s in class.iter() {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let home = block_of(s);
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                trace.check(block_of(x) == home, || {
                    format!("after block {i}: class {c} joins blocks {home:?} and {:?} off the path", block_of(x))
                });
                for y in g.neighbours(x).intersection(class).iter() {
                    if !seen.contains(y) && !path_edge(x, y) {
                        seen.insert(y);
                        stack.push(y);
                    }
                }
            }
        }
    }
}
