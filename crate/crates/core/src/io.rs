//! Text formats: edge lists, interval files and module files.
//!
//! Blank lines and lines starting with `#` are skipped everywhere.

use std::fmt::Write as _;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{Interval, IntervalRepresentation, Rational};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields<T: std::str::FromStr>(line: usize, text: &str, want: usize) -> Result<Vec<T>> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != want {
        return Err(Error::Parse { line, msg: format!("expected {want} fields, found {}", fields.len()) });
    }
    fields
        .iter()
        .map(|f| f.parse().map_err(|_| Error::Parse { line, msg: format!("bad number {f:?}") }))
        .collect()
}

/// Parses `n m` followed by `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let Some((ln, header)) = lines.next() else {
        return Err(Error::Parse { line: 0, msg: "missing \"n m\" header".into() });
    };
    let h: Vec<usize> = parse_fields(ln, header, 2)?;
    let (n, m) = (h[0], h[1]);
    let mut g = Graph::empty(n);
    let mut count = 0;
    for (ln, l) in lines {
        let e: Vec<usize> = parse_fields(ln, l, 2)?;
        let (u, v) = (e[0], e[1]);
        if u >= n || v >= n {
            return Err(Error::Parse { line: ln, msg: format!("vertex out of range 0..{n}") });
        }
        if u == v {
            return Err(Error::Parse { line: ln, msg: format!("loop at {u}") });
        }
        if g.has_edge(u, v) {
            return Err(Error::Parse { line: ln, msg: format!("repeated edge {u} {v}") });
        }
        g.insert_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(Error::Parse { line: ln, msg: format!("header announces {m} edges, found {count}") });
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses lines `v l_num l_den r_num r_den`; every vertex of `0..n` must
/// appear exactly once.
pub fn parse_intervals(text: &str, n: usize) -> Result<IntervalRepresentation> {
    let mut slots: Vec<Option<Interval>> = vec![None; n];
    for (ln, l) in content_lines(text) {
        let f: Vec<i64> = parse_fields(ln, l, 5)?;
        let v = usize::try_from(f[0])
            .ok()
            .filter(|&v| v < n)
            .ok_or_else(|| Error::Parse { line: ln, msg: format!("vertex {} out of range 0..{n}", f[0]) })?;
        if slots[v].is_some() {
            return Err(Error::Parse { line: ln, msg: format!("vertex {v} listed twice") });
        }
        let wrap = |e: Error| Error::Parse { line: ln, msg: e.to_string() };
        let left = Rational::new(f[1], f[2]).map_err(wrap)?;
        let right = Rational::new(f[3], f[4]).map_err(wrap)?;
        slots[v] = Some(Interval::new(left, right).map_err(wrap)?);
    }
    let intervals = slots
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| Error::Parse { line: 0, msg: format!("no interval for vertex {v}") }))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntervalRepresentation::new(intervals))
}

pub fn write_intervals(rep: &IntervalRepresentation) -> String {
    let mut out = String::new();
    for (v, iv) in rep.intervals().iter().enumerate() {
        let _ = writeln!(out, "{v} {} {} {} {}", iv.left.num(), iv.left.den(), iv.right.num(), iv.right.den());
    }
    out
}

/// One part per line, vertex ids separated by whitespace.
pub fn parse_modules(text: &str, n: usize) -> Result<Vec<VertexSet>> {
    let mut parts = Vec::new();
    for (ln, l) in content_lines(text) {
        let mut part = VertexSet::new(n);
        for f in l.split_whitespace() {
            let v: usize = f.parse().map_err(|_| Error::Parse { line: ln, msg: format!("bad vertex {f:?}") })?;
            if v >= n {
                return Err(Error::Parse { line: ln, msg: format!("vertex {v} out of range 0..{n}") });
            }
            part.insert(v);
        }
        parts.push(part);
    }
    Ok(parts)
}

pub fn write_modules(parts: &[VertexSet]) -> String {
    let mut out = String::new();
    for p in parts {
        let ids: Vec<String> = p.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", ids.join(" "));
    }
    out
}
