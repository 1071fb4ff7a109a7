//! Three classes for proper interval graphs with even components.

use super::path::{first_path_neighbours, star_path_within};
use super::repr::IntervalRepresentation;
use crate::bitset::VertexSet;
use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::exact::check_feasible;
use crate::graph::Graph;

/// Cuts the component into even cliques `Y_i` along the path and colours
/// `Y_i` with class `i mod 3`.
pub fn proper_interval_colouring(g: &Graph, rep: &IntervalRepresentation) -> Result<Colouring> {
    rep.validate(g)?;
    if let Some((outer, inner)) = rep.nested_pair() {
        return Err(Error::NotProper { outer, inner });
    }
    check_feasible(g)?;
    let n = g.n();
    let mut classes = vec![VertexSet::new(n); 3];
    for comp in g.components() {
        for (i, y) in blocks(g, rep, &comp)?.into_iter().enumerate() {
            let clique = y.iter().all(|u| g.degree_in(u, &y) + 1 == y.len());
            if y.len() % 2 == 1 || !clique {
                return Err(Error::Internal(format!("block {i} = {:?} is not an even clique", y.to_vec())));
            }
            classes[i % 3].union_with(&y);
        }
    }
    Ok(Colouring::new(n, classes).compact())
}

fn blocks(g: &Graph, rep: &IntervalRepresentation, comp: &VertexSet) -> Result<Vec<VertexSet>> {
    let n = g.n();
    let path = star_path_within(g, rep, comp)?.vertices;
    let firsts = first_path_neighbours(g, comp, &path);
    let k = path.len();
    let mut groups = vec![VertexSet::new(n); k];
    for v in comp.iter() {
        if let Some(i) = firsts[v] {
            groups[i].insert(v);
        }
    }
    let mut out = Vec::with_capacity(k);
    let mut before = 0;
    for i in 0..k {
        let mut y = groups[i].clone();
        if before % 2 == 0 {
            y.insert(path[i]);
        }
        let through = before + 1 + groups[i].len();
        if through % 2 == 1 {
            y.insert(path[i + 1]);
        }
        before = through;
        out.push(y);
    }
    Ok(out)
}
