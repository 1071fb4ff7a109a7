use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact rational number with positive denominator, kept in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        let g = gcd(num, den).max(1);
        let sign = if den < 0 { -1 } else { 1 };
        Ok(Self { num: sign * num / g, den: sign * den / g })
    }

    pub const fn integer(v: i64) -> Self {
        Self { num: v, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Self::integer(v)
    }
}

/// Closed interval `[left, right]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Interval {
    pub left: Rational,
    pub right: Rational,
}

impl Interval {
    pub fn new(left: Rational, right: Rational) -> Result<Self> {
        if left > right {
            return Err(Error::InvalidArgument(format!("empty interval [{left:?}, {right:?}]")));
        }
        Ok(Self { left, right })
    }

    pub fn ints(left: i64, right: i64) -> Result<Self> {
        Self::new(left.into(), right.into())
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.left <= other.right && other.left <= self.right
    }

    /// `self` contains `other` and they differ.
    pub fn strictly_contains(&self, other: &Interval) -> bool {
        self.left <= other.left && other.right <= self.right && self != other
    }
}

/// One closed interval per vertex of a host graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntervalRepresentation {
    intervals: Vec<Interval>,
}

impl IntervalRepresentation {
    pub fn new(intervals: Vec<Interval>) -> Self {
        Self { intervals }
    }

    pub fn from_ints(pairs: &[(i64, i64)]) -> Result<Self> {
        pairs.iter().map(|&(l, r)| Interval::ints(l, r)).collect::<Result<Vec<_>>>().map(Self::new)
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> &Interval {
        &self.intervals[v]
    }

    #[inline]
    pub fn left(&self, v: usize) -> Rational {
        self.intervals[v].left
    }

    #[inline]
    pub fn right(&self, v: usize) -> Rational {
        self.intervals[v].right
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Intersection graph of the intervals.
    pub fn to_graph(&self) -> Graph {
        let n = self.intervals.len();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if self.intervals[u].intersects(&self.intervals[v]) {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    /// Checks `uv ∈ E ⇔ I_u ∩ I_v ≠ ∅` for every pair.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.intervals.len() != g.n() {
            return Err(Error::InvalidArgument(format!(
                "{} intervals for a graph on {} vertices",
                self.intervals.len(),
                g.n()
            )));
        }
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if self.intervals[u].intersects(&self.intervals[v]) != g.has_edge(u, v) {
                    return Err(Error::InconsistentRepresentation { u, v });
                }
            }
        }
        Ok(())
    }

    /// First pair `(outer, inner)` with strict containment, if any.
    pub fn nested_pair(&self) -> Option<(usize, usize)> {
        let n = self.intervals.len();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.intervals[a].strictly_contains(&self.intervals[b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_proper(&self) -> bool {
        self.nested_pair().is_none()
    }
}
