//! Recursive colouring for hereditary classes in which every connected
//! member has pendant twins or a light edge, and its three instantiations
//! (bounded degree, girth at least 7, planar girth at least 11).
//!
//! A budget `k` allows `k - 1` classes. Internally every recursive call
//! returns exactly `k - 1` slots, some possibly empty, so slot arithmetic
//! can be done by index.

use crate::bitset::VertexSet;
use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::exact::check_feasible;
use crate::graph::Graph;
use crate::verify::is_odd_set;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionWitness {
    /// `u < v` are pendant with common neighbour `w`.
    PendantTwins { u: usize, v: usize, w: usize },
    /// `u < v` adjacent with degree sum within the budget.
    LightEdge { u: usize, v: usize },
}

/// Record of the disjointness conditions checked while merging classes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EngineTrace {
    pub checks: usize,
    pub violations: Vec<String>,
    pub twins: usize,
    pub connected_rest: usize,
    pub even_component: usize,
    pub single_sided: usize,
    pub double_sided: usize,
}

impl EngineTrace {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(what());
        }
    }
}

/// Pendant twins (lowest pair) or else the lexicographically smallest edge
/// with degree sum at most `k`, both measured in `G[set]`.
pub fn find_reduction_within(g: &Graph, set: &VertexSet, k: usize) -> Option<ReductionWitness> {
    let mut first_leaf: Vec<Option<usize>> = vec![None; g.n()];
    let mut best: Option<(usize, usize, usize)> = None;
    for x in set {
        let nb = g.neighbours(x).intersection(set);
        if nb.len() != 1 {
            continue;
        }
        let w = nb.first().expect("one neighbour");
        match first_leaf[w] {
            None => first_leaf[w] = Some(x),
            Some(u) => {
                if best.is_none_or(|(bu, bv, _)| (u, x) < (bu, bv)) {
                    best = Some((u, x, w));
                }
            }
        }
    }
    if let Some((u, v, w)) = best {
        return Some(ReductionWitness::PendantTwins { u, v, w });
    }
    for u in set {
        let du = g.degree_in(u, set);
        for v in g.neighbours(u).intersection(set).iter().filter(|&v| v > u) {
            if du + g.degree_in(v, set) <= k {
                return Some(ReductionWitness::LightEdge { u, v });
            }
        }
    }
    None
}

pub fn find_reduction(g: &Graph, k: usize) -> Option<ReductionWitness> {
    find_reduction_within(g, &g.vertices(), k)
}

struct Engine<'a> {
    g: &'a Graph,
    k: usize,
    trace: Option<&'a mut EngineTrace>,
}

fn slot_of(slots: &[VertexSet], x: usize) -> usize {
    slots.iter().position(|s| s.contains(x)).expect("vertex is coloured")
}

impl Engine<'_> {
    fn slots(&self) -> usize {
        self.k - 1
    }

    fn empty_slots(&self) -> Vec<VertexSet> {
        vec![VertexSet::new(self.g.n()); self.slots()]
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if let Some(t) = self.trace.as_deref_mut() {
            t.check(ok, what);
        }
    }

    fn count(&mut self, f: impl FnOnce(&mut EngineTrace)) {
        if let Some(t) = self.trace.as_deref_mut() {
            f(t);
        }
    }

    /// Colours the connected even set `s`.
    fn colour(&mut self, s: &VertexSet) -> Result<Vec<VertexSet>> {
        let g = self.g;
        if s.len() == 2 {
            let mut slots = self.empty_slots();
            slots[0] = s.clone();
            return Ok(slots);
        }
        match find_reduction_within(g, s, self.k) {
            None => Err(Error::ReductionNotFound { budget: self.k, subgraph: s.to_vec() }),
            Some(ReductionWitness::PendantTwins { u, v, w }) => {
                self.count(|t| t.twins += 1);
                let mut rest = s.clone();
                rest.remove(u);
                rest.remove(v);
                let mut slots = self.colour(&rest)?;
                let i = slot_of(&slots, w);
                slots[i].insert(u);
                slots[i].insert(v);
                Ok(slots)
            }
            Some(ReductionWitness::LightEdge { u, v }) => self.light_edge(s, u, v),
        }
    }

    fn light_edge(&mut self, s: &VertexSet, a: usize, b: usize) -> Result<Vec<VertexSet>> {
        let g = self.g;
        let n = g.n();
        let pair = VertexSet::from_iter(n, [a, b]);
        let rest = s.difference(&pair);
        let comps = g.components_within(&rest);
        let mut nbhd = g.neighbours(a).union(g.neighbours(b));
        nbhd.intersect_with(&rest);

        if comps.len() == 1 {
            self.count(|t| t.connected_rest += 1);
            let mut slots = self.colour(&rest)?;
            let Some(l) = slots.iter().position(|c| !c.intersects(&nbhd)) else {
                return Err(Error::Internal(format!("no class avoids the neighbours of {a} and {b}")));
            };
            self.check(!slots[l].intersects(&nbhd), || format!("class {l} meets N({{{a},{b}}})"));
            slots[l].union_with(&pair);
            return Ok(slots);
        }

        let top = self.slots() - 1;
        if let Some(u_set) = comps.iter().find(|c| c.len() % 2 == 0) {
            self.count(|t| t.even_component += 1);
            let other = s.difference(u_set);
            let mut vs = self.colour(&other)?;
            let mut us = self.colour(u_set)?;
            let cb = slot_of(&vs, b);
            vs.swap(cb, top);
            let ca = slot_of(&vs, a);
            if ca != top {
                vs.swap(ca, top - 1);
            }
            let free: Vec<usize> = (0..us.len()).filter(|&i| !us[i].intersects(&nbhd)).take(2).collect();
            if free.len() < 2 {
                return Err(Error::Internal("fewer than two classes of the even component avoid the edge".into()));
            }
            us.swap(free[1], top);
            us.swap(free[0], top - 1);
            for i in 0..vs.len() {
                let ok = !g.set_neighbourhood(&vs[i]).intersects(&us[i]);
                self.check(ok, || format!("N(V_{i}) meets U_{i} in the even-component branch"));
                let piece = std::mem::replace(&mut us[i], VertexSet::new(n));
                vs[i].union_with(&piece);
            }
            return Ok(vs);
        }

        // every component of the rest is odd
        let touches = |c: &VertexSet, x: usize| g.neighbours(x).intersects(c);
        let only_a: Vec<&VertexSet> = comps.iter().filter(|c| !touches(c, b)).collect();
        let only_b: Vec<&VertexSet> = comps.iter().filter(|c| !touches(c, a)).collect();
        let both: Vec<&VertexSet> = comps.iter().filter(|c| touches(c, a) && touches(c, b)).collect();

        if both.is_empty() {
            self.count(|t| t.single_sided += 1);
            return self.single_sided(s, a, b, &only_a, &only_b);
        }
        self.count(|t| t.double_sided += 1);
        let (x1, x2) = if only_a.len().is_multiple_of(2) { both.split_at(1) } else { both.split_at(0) };
        let side_a = union_with_vertex(n, only_a.iter().chain(x1).copied(), a);
        let side_b = union_with_vertex(n, only_b.iter().chain(x2).copied(), b);

        let mut ai = self.colour(&side_a)?;
        let mut bj = self.colour(&side_b)?;
        let ca = slot_of(&ai, a);
        ai.swap(ca, 0);
        let cb = slot_of(&bj, b);
        bj.swap(cb, top);
        let na = g.neighbours(a);
        let nb = g.neighbours(b);
        let Some(i0) = (0..top).find(|&i| !bj[i].intersects(na)) else {
            return Err(Error::Internal(format!("every low class of the {b}-side meets N({a})")));
        };
        bj.swap(i0, 0);
        let Some(j0) = (1..=top).find(|&j| !ai[j].intersects(nb)) else {
            return Err(Error::Internal(format!("every high class of the {a}-side meets N({b})")));
        };
        ai.swap(j0, top);
        self.check(!bj[0].intersects(na), || format!("N({a}) meets the first class of the {b}-side"));
        self.check(!ai[top].intersects(nb), || format!("N({b}) meets the last class of the {a}-side"));
        for i in 0..ai.len() {
            let left = ai[i].difference(&pair);
            let right = bj[i].difference(&pair);
            let ok = !g.sets_adjacent(&left, &right);
            self.check(ok, || format!("classes {i} of the two sides are adjacent"));
            let piece = std::mem::replace(&mut bj[i], VertexSet::new(n));
            ai[i].union_with(&piece);
        }
        Ok(ai)
    }

    /// All components of `S - {a, b}` odd, each attached to exactly one of
    /// `a`, `b`.
    fn single_sided(
        &mut self,
        s: &VertexSet,
        a: usize,
        b: usize,
        only_a: &[&VertexSet],
        only_b: &[&VertexSet],
    ) -> Result<Vec<VertexSet>> {
        let g = self.g;
        let n = g.n();
        let top = self.slots() - 1;
        let mut out = self.empty_slots();
        let pair = VertexSet::from_iter(n, [a, b]);
        let swap_roles = only_a.len().is_multiple_of(2);
        for (comps, w, home) in [(only_a, a, top - 1), (only_b, b, top)] {
            for c in comps {
                let mut part = (*c).clone();
                part.insert(w);
                let mut slots = self.colour(&part)?;
                let cw = slot_of(&slots, w);
                slots.swap(cw, home);
                if swap_roles && w == a {
                    slots.swap(top - 1, top);
                }
                for i in 0..slots.len() {
                    let ok = !g.sets_adjacent(&slots[i].difference(&pair), &out[i].difference(&pair));
                    self.check(ok, || format!("component pieces of class {i} are adjacent"));
                    out[i].union_with(&slots[i]);
                }
            }
        }
        if swap_roles {
            // a or b may have no component of its own: it then has degree one
            out[top].insert(a);
            out[top].insert(b);
        }
        for x in [a, b] {
            let c = slot_of(&out, x);
            let ok = g.degree_in(x, &out[c]) % 2 == 1;
            self.check(ok, || format!("vertex {x} has even degree in its merged class"));
        }
        let covered = out.iter().fold(VertexSet::new(n), |acc, c| acc.union(c));
        self.check(covered == *s, || "single-sided merge does not cover the subgraph".into());
        Ok(out)
    }
}

fn union_with_vertex<'a>(n: usize, sets: impl Iterator<Item = &'a VertexSet>, x: usize) -> VertexSet {
    let mut out = VertexSet::singleton(n, x);
    for s in sets {
        out.union_with(s);
    }
    out
}

fn run(g: &Graph, k: usize, mut trace: Option<&mut EngineTrace>) -> Result<Colouring> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("budget must be at least 2, got {k}")));
    }
    check_feasible(g)?;
    let mut merged = vec![VertexSet::new(g.n()); k - 1];
    for comp in g.components() {
        let mut engine = Engine { g, k, trace: trace.as_deref_mut() };
        let slots = engine.colour(&comp)?;
        for (m, s) in merged.iter_mut().zip(&slots) {
            m.union_with(s);
        }
    }
    if let Some(t) = trace {
        for (i, c) in merged.iter().enumerate() {
            t.check(is_odd_set(g, c), || format!("final class {i} is not odd"));
        }
    }
    Ok(Colouring::new(g.n(), merged).compact())
}

/// Odd colouring with at most `k - 1` classes. Each component is coloured
/// separately and classes are merged slot by slot.
pub fn colour_with_budget(g: &Graph, k: usize) -> Result<Colouring> {
    run(g, k, None)
}

/// As [`colour_with_budget`], also returning the merge-time checks.
pub fn colour_with_budget_traced(g: &Graph, k: usize) -> Result<(Colouring, EngineTrace)> {
    let mut trace = EngineTrace::default();
    let c = run(g, k, Some(&mut trace))?;
    Ok((c, trace))
}

pub fn bounded_degree_budget(g: &Graph) -> usize {
    (2 * g.max_degree()).max(2)
}

/// At most `2Δ - 1` classes.
pub fn bounded_degree_colouring(g: &Graph) -> Result<Colouring> {
    check_feasible(g)?;
    colour_with_budget(g, bounded_degree_budget(g))
}

/// `floor(3 sqrt(n) / 2)`, computed exactly.
pub fn three_halves_sqrt(n: usize) -> usize {
    (9 * n).isqrt() / 2
}

pub fn girth7_budget(g: &Graph) -> usize {
    three_halves_sqrt(g.n()) + 2
}

fn require_girth(g: &Graph, min: usize) -> Result<()> {
    match g.girth() {
        Some(girth) if girth < min => {
            Err(Error::ClassViolation(format!("girth {girth} is below the required {min}")))
        }
        _ => Ok(()),
    }
}

/// At most `floor(3 sqrt(n) / 2) + 1` classes for girth at least 7.
pub fn girth7_colouring(g: &Graph) -> Result<Colouring> {
    check_feasible(g)?;
    require_girth(g, 7)?;
    colour_with_budget(g, girth7_budget(g))
}

/// Euler-formula edge bound for planar graphs of girth at least 11.
pub fn planar_girth11_edge_bound_holds(g: &Graph) -> bool {
    let (n, m) = (g.n() as i64, g.m() as i64);
    9 * m <= (9 * (n - 1)).max(11 * (n - 2))
}

/// At most 3 classes for planar graphs of girth at least 11. Planarity is
/// not tested; a non-planar input may surface as a missing reduction.
pub fn planar_girth11_colouring(g: &Graph) -> Result<Colouring> {
    check_feasible(g)?;
    require_girth(g, 11)?;
    if !planar_girth11_edge_bound_holds(g) {
        return Err(Error::ClassViolation(format!(
            "{} edges on {} vertices exceed the planar girth-11 bound",
            g.m(),
            g.n()
        )));
    }
    colour_with_budget(g, 4)
}
