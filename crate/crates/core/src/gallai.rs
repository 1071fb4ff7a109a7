//! Gallai partitions built from explicit GF(2) systems.
//!
//! Each function has a `_within` form working on `G[set]` for a vertex set of
//! a host graph; the plain form is the whole-graph case.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::gf2::{solve, BitMatrix, BitVector};
use crate::graph::Graph;

/// One equation per vertex of `set`. Row `i` has the neighbours of the
/// `i`-th vertex inside `set`, plus the diagonal when `diag(deg)` holds, and
/// right-hand side `rhs(deg)`.
fn parity_system(
    g: &Graph,
    set: &VertexSet,
    diag: impl Fn(usize) -> bool,
    rhs: impl Fn(usize) -> bool,
) -> (Vec<usize>, BitMatrix, BitVector) {
    let verts = set.to_vec();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in verts.iter().enumerate() {
        pos[v] = i;
    }
    let k = verts.len();
    let mut a = BitMatrix::zeros(k, k);
    let mut b = BitVector::zeros(k);
    for (i, &v) in verts.iter().enumerate() {
        let nbrs = g.neighbours(v).intersection(set);
        let deg = nbrs.len();
        for u in &nbrs {
            a.set(i, pos[u], true);
        }
        if diag(deg) {
            a.set(i, i, true);
        }
        b.set(i, rhs(deg));
    }
    (verts, a, b)
}

fn split(g: &Graph, verts: &[usize], x: &BitVector) -> (VertexSet, VertexSet) {
    let mut ones = VertexSet::new(g.n());
    let mut zeros = VertexSet::new(g.n());
    for (i, &v) in verts.iter().enumerate() {
        if x.get(i) {
            ones.insert(v);
        } else {
            zeros.insert(v);
        }
    }
    (ones, zeros)
}

fn solved(a: &BitMatrix, b: &BitVector, what: &str) -> Result<BitVector> {
    solve(a, b)?.ok_or_else(|| Error::Internal(format!("{what} system is inconsistent")))
}

/// `(V1, V2)` partitioning `set` with `G[V1]` and `G[V2]` both even.
///
/// With `x_v = [v ∈ V2]`: even-degree vertices need `Σ_{u∈N(v)} x_u = 0`,
/// odd-degree vertices need `x_v + Σ_{u∈N(v)} x_u = 1`.
pub fn even_even_partition_within(g: &Graph, set: &VertexSet) -> Result<(VertexSet, VertexSet)> {
    let (verts, a, b) = parity_system(g, set, |d| d % 2 == 1, |d| d % 2 == 1);
    let x = solved(&a, &b, "even/even")?;
    let (v2, v1) = split(g, &verts, &x);
    Ok((v1, v2))
}

/// `(V1, V2)` partitioning `set` with `G[V1]` odd and `G[V2]` even.
///
/// With `x_v = [v ∈ V1]`: even-degree vertices need `x_v + Σ x_u = 0`,
/// odd-degree vertices need `Σ x_u = 1`.
pub fn odd_even_partition_within(g: &Graph, set: &VertexSet) -> Result<(VertexSet, VertexSet)> {
    let (verts, a, b) = parity_system(g, set, |d| d % 2 == 0, |d| d % 2 == 1);
    let x = solved(&a, &b, "odd/even")?;
    Ok(split(g, &verts, &x))
}

/// `(V1, V2, V3)` partitioning an even-sized non-empty `set`, with `G[V1]`
/// odd, `G[V2]`, `G[V3]` even and `|V2|`, `|V3|` odd. `V3` is the lowest
/// vertex of `set`.
pub fn odd_even_even_partition_within(
    g: &Graph,
    set: &VertexSet,
) -> Result<(VertexSet, VertexSet, VertexSet)> {
    let Some(v) = set.first() else {
        return Err(Error::Precondition("odd/even/even partition of an empty set".into()));
    };
    if set.len() % 2 == 1 {
        return Err(Error::Precondition(format!("odd/even/even partition needs even order, got {}", set.len())));
    }
    let mut rest = set.clone();
    rest.remove(v);
    let (v1, v2) = odd_even_partition_within(g, &rest)?;
    Ok((v1, v2, VertexSet::singleton(g.n(), v)))
}

pub fn even_even_partition(g: &Graph) -> Result<(VertexSet, VertexSet)> {
    even_even_partition_within(g, &g.vertices())
}

pub fn odd_even_partition(g: &Graph) -> Result<(VertexSet, VertexSet)> {
    odd_even_partition_within(g, &g.vertices())
}

pub fn odd_even_even_partition(g: &Graph) -> Result<(VertexSet, VertexSet, VertexSet)> {
    odd_even_even_partition_within(g, &g.vertices())
}
