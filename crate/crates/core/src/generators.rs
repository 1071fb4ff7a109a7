//! Generators for the graph families used throughout the crate.
//!
//! All randomness is drawn from a ChaCha8 stream seeded with one explicit
//! 64-bit seed, so every generator is reproducible.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{Interval, IntervalRepresentation, Rational};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidArgument("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidArgument("complete graph needs n >= 1".into()));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Result<Graph> {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

/// `K_n` with every edge subdivided once.
pub fn subdivided_complete(n: usize) -> Result<Graph> {
    Ok(complete(n)?.subdivide())
}

/// Adds a private common neighbour `w_uv` for every pair `u < v` of the base
/// graph (pairs in lexicographic order, new ids after the base vertices).
/// The result must have even order.
pub fn family_b(base: &Graph) -> Result<Graph> {
    let n = base.n();
    let order = n + n * n.saturating_sub(1) / 2;
    if order % 2 == 1 {
        return Err(Error::InfeasibleOrder { order });
    }
    let mut g = Graph::empty(order);
    for (u, v) in base.edges() {
        g.insert_edge(u, v);
    }
    let mut w = n;
    for u in 0..n {
        for v in u + 1..n {
            g.insert_edge(u, w);
            g.insert_edge(v, w);
            w += 1;
        }
    }
    Ok(g)
}

/// `K_4` on `0..4` with pendant 4 attached to 0 and pendant 5 attached to 3.
pub fn k4_two_pendants() -> Graph {
    Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (3, 5)])
        .expect("static edge list")
}

/// A proper interval representation of [`k4_two_pendants`].
pub fn k4_two_pendants_intervals() -> IntervalRepresentation {
    IntervalRepresentation::from_ints(&[(1, 4), (2, 5), (3, 6), (4, 7), (0, 1), (7, 8)])
        .expect("static intervals")
}

/// `G(n, p)` followed by odd-component repair: while two odd components
/// exist, the two lowest-indexed ones are joined by an edge between their
/// lowest vertices.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidArgument("random_gnp needs n >= 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("edge probability {p} outside [0, 1]")));
    }
    if n % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "random_gnp with even-component repair needs even n, got {n}"
        )));
    }
    let mut rng = rng(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.insert_edge(u, v);
            }
        }
    }
    repair_odd_components(&mut g);
    Ok(g)
}

/// `G(n, p)` without repair; components may have any parity.
pub fn random_gnp_raw(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = rng(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

pub(crate) fn repair_odd_components(g: &mut Graph) {
    loop {
        let odd: Vec<VertexSet> = g.components().into_iter().filter(|c| c.len() % 2 == 1).collect();
        if odd.len() < 2 {
            return;
        }
        let a = odd[0].first().expect("non-empty component");
        let b = odd[1].first().expect("non-empty component");
        g.insert_edge(a, b);
    }
}

/// Uniform random labelled tree on `n` vertices (random attachment).
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidArgument("random_tree needs n >= 1".into()));
    }
    let mut rng = rng(seed);
    Graph::from_edges(n, (1..n).map(|v| (rng.gen_range(0..v), v)))
}

fn check_interval_args(n: usize) -> Result<()> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "interval generators need a positive even vertex count, got {n}"
        )));
    }
    Ok(())
}

/// Connected components of an interval representation as vertex lists,
/// ordered left to right.
fn interval_components(rep: &IntervalRepresentation) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..rep.len()).collect();
    order.sort_by(|&a, &b| rep.left(a).cmp(&rep.left(b)).then(a.cmp(&b)));
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut reach: Option<Rational> = None;
    for v in order {
        match reach {
            Some(r) if rep.left(v) <= r => {
                comps.last_mut().expect("open component").push(v);
                reach = Some(r.max(rep.right(v)));
            }
            _ => {
                comps.push(vec![v]);
                reach = Some(rep.right(v));
            }
        }
    }
    comps
}

/// Random interval graph with distinct integer endpoints in `0..=max_coord`.
///
/// Odd components are repaired left to right: the interval reaching
/// furthest right in an odd component is stretched half a unit past the
/// left end of the next component, merging the two.
pub fn random_interval(n: usize, max_coord: u64, seed: u64) -> Result<(Graph, IntervalRepresentation)> {
    check_interval_args(n)?;
    if max_coord + 1 < 2 * n as u64 || max_coord > i64::MAX as u64 / 4 {
        return Err(Error::InvalidArgument(format!(
            "max_coord {max_coord} cannot hold {} distinct endpoints",
            2 * n
        )));
    }
    let mut rng = rng(seed);
    let points = sample(&mut rng, max_coord as usize + 1, 2 * n).into_vec();
    let mut intervals: Vec<Interval> = points
        .chunks(2)
        .map(|c| {
            let (a, b) = (c[0].min(c[1]) as i64, c[0].max(c[1]) as i64);
            Interval::ints(a, b).expect("ordered endpoints")
        })
        .collect();
    loop {
        let rep = IntervalRepresentation::new(intervals.clone());
        let comps = interval_components(&rep);
        let Some(pos) = comps.iter().position(|c| c.len() % 2 == 1) else {
            return Ok((rep.to_graph(), rep));
        };
        let widest = *comps[pos]
            .iter()
            .max_by(|&&a, &&b| rep.right(a).cmp(&rep.right(b)).then(b.cmp(&a)))
            .expect("non-empty");
        let next_left = comps[pos + 1].iter().map(|&v| rep.left(v)).min().expect("non-empty");
        let stretched = Rational::new(2 * next_left.num() + next_left.den(), 2 * next_left.den())?;
        intervals[widest].right = stretched;
    }
}

/// Random proper interval graph: all intervals have length `len`, left ends
/// are distinct integers. Odd components are repaired by sliding everything
/// right of an odd component leftwards until it touches.
pub fn random_proper_interval(n: usize, len: i64, seed: u64) -> Result<(Graph, IntervalRepresentation)> {
    check_interval_args(n)?;
    if len < 1 {
        return Err(Error::InvalidArgument("interval length must be positive".into()));
    }
    let mut rng = rng(seed);
    let span = (n as i64) * (len + 1);
    let mut lefts: Vec<i64> = sample(&mut rng, span as usize, n).into_iter().map(|x| x as i64).collect();
    let mut intervals: Vec<Interval>;
    loop {
        intervals = lefts.iter().map(|&l| Interval::ints(l, l + len).expect("len >= 1")).collect();
        let rep = IntervalRepresentation::new(intervals.clone());
        let comps = interval_components(&rep);
        let Some(pos) = comps.iter().position(|c| c.len() % 2 == 1) else {
            return Ok((rep.to_graph(), rep));
        };
        let reach = comps[pos].iter().map(|&v| lefts[v] + len).max().expect("non-empty");
        let next_left = comps[pos + 1].iter().map(|&v| lefts[v]).min().expect("non-empty");
        let shift = next_left - reach;
        for l in lefts.iter_mut() {
            if *l > reach {
                *l -= shift;
            }
        }
    }
}
