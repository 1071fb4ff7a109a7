use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// An ordered list of vertex classes over a host graph on `n` vertices.
///
/// Constructors do not check the partition property; that is the job of
/// [`crate::verify::verify_colouring`], which has to cope with bad input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    n: usize,
    classes: Vec<VertexSet>,
}

impl Colouring {
    pub fn new(n: usize, classes: Vec<VertexSet>) -> Self {
        debug_assert!(classes.iter().all(|c| c.universe() == n));
        Self { n, classes }
    }

    pub fn from_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut classes = Vec::with_capacity(lists.len());
        for list in lists {
            if let Some(&v) = list.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidArgument(format!("vertex {v} outside 0..{n}")));
            }
            classes.push(VertexSet::from_iter(n, list.iter().copied()));
        }
        Ok(Self { n, classes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn into_classes(self) -> Vec<VertexSet> {
        self.classes
    }

    /// Number of non-empty classes.
    pub fn num_classes(&self) -> usize {
        self.classes.iter().filter(|c| !c.is_empty()).count()
    }

    /// Drops empty classes.
    pub fn compact(mut self) -> Self {
        self.classes.retain(|c| !c.is_empty());
        self
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(VertexSet::to_vec).collect()
    }

    /// Class index of every vertex (last one wins on overlaps).
    pub fn class_of(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.n];
        for (i, c) in self.classes.iter().enumerate() {
            for v in c {
                out[v] = Some(i);
            }
        }
        out
    }
}

/// The JSON certificate exchanged by the command line tool.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub classes: Vec<Vec<usize>>,
    pub algorithm: String,
    pub bound: usize,
}

impl Certificate {
    pub fn new(colouring: &Colouring, algorithm: &str, bound: usize) -> Self {
        Self { n: colouring.n(), classes: colouring.to_lists(), algorithm: algorithm.to_owned(), bound }
    }

    pub fn colouring(&self) -> Result<Colouring> {
        Colouring::from_lists(self.n, &self.classes)
    }
}
