//! Certificate checking.

use std::fmt;

use crate::bitset::VertexSet;
use crate::colouring::Colouring;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeViolation {
    pub class: usize,
    pub vertex: usize,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionError {
    /// Vertex listed in more than one class.
    Overlap { vertex: usize, classes: Vec<usize> },
    /// Vertex in no class.
    Missing { vertex: usize },
    /// Vertex id beyond the host graph or a size mismatch.
    OutOfRange { vertex: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<DegreeViolation>,
    pub partition_errors: Vec<PartitionError>,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return writeln!(f, "valid");
        }
        writeln!(f, "invalid")?;
        for e in &self.partition_errors {
            match e {
                PartitionError::Overlap { vertex, classes } => {
                    writeln!(f, "  vertex {vertex} appears in classes {classes:?}")?
                }
                PartitionError::Missing { vertex } => writeln!(f, "  vertex {vertex} is in no class")?,
                PartitionError::OutOfRange { vertex } => writeln!(f, "  vertex {vertex} is not in the graph")?,
            }
        }
        for v in &self.violations {
            writeln!(f, "  class {}: vertex {} has even degree {}", v.class, v.vertex, v.degree)?;
        }
        Ok(())
    }
}

/// Vertices of `set` whose degree inside `G[set]` is even.
pub fn even_degree_vertices(g: &Graph, set: &VertexSet) -> Vec<usize> {
    set.iter().filter(|&v| g.degree_in(v, set).is_multiple_of(2)).collect()
}

pub fn is_odd_set(g: &Graph, set: &VertexSet) -> bool {
    set.iter().all(|v| g.degree_in(v, set) % 2 == 1)
}

pub fn is_even_set(g: &Graph, set: &VertexSet) -> bool {
    set.iter().all(|v| g.degree_in(v, set).is_multiple_of(2))
}

/// Checks that the classes partition `V(g)` and that each class induces an
/// odd subgraph. Never fails; problems are reported.
pub fn verify_colouring(g: &Graph, c: &Colouring) -> VerificationReport {
    verify_lists(g, &c.to_lists())
}

/// Same as [`verify_colouring`] but on raw class lists, so out-of-range ids
/// in a certificate can be reported instead of rejected.
pub fn verify_lists(g: &Graph, classes: &[Vec<usize>]) -> VerificationReport {
    let n = g.n();
    let mut report = VerificationReport::default();
    let mut owners: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut sets = Vec::with_capacity(classes.len());
    for (i, class) in classes.iter().enumerate() {
        let mut set = VertexSet::new(n);
        for &v in class {
            if v >= n {
                report.partition_errors.push(PartitionError::OutOfRange { vertex: v });
                continue;
            }
            if !set.contains(v) {
                owners[v].push(i);
            }
            set.insert(v);
        }
        sets.push(set);
    }
    for (v, own) in owners.iter().enumerate() {
        match own.len() {
            0 => report.partition_errors.push(PartitionError::Missing { vertex: v }),
            1 => {}
            _ => report.partition_errors.push(PartitionError::Overlap { vertex: v, classes: own.clone() }),
        }
    }
    for (i, set) in sets.iter().enumerate() {
        for v in set {
            let degree = g.degree_in(v, set);
            if degree.is_multiple_of(2) {
                report.violations.push(DegreeViolation { class: i, vertex: v, degree });
            }
        }
    }
    report.valid = report.violations.is_empty() && report.partition_errors.is_empty();
    report
}
