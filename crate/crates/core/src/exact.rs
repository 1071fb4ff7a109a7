//! Exact optimum by subset dynamic programming, plus the feasibility test.

use crate::bitset::VertexSet;
use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_CAP: usize = 20;
/// Largest cap accepted; the memo table has `2^n` bytes.
pub const MAX_CAP: usize = 26;

/// Every component has even order.
pub fn is_odd_colourable(g: &Graph) -> bool {
    g.odd_component().is_none()
}

pub(crate) fn check_feasible(g: &Graph) -> Result<()> {
    match g.odd_component() {
        Some(c) => Err(Error::Infeasible { component: c.to_vec() }),
        None => Ok(()),
    }
}

/// Local adjacency masks of `G[set]`, relabelled to `0..|set|`.
fn local_masks(g: &Graph, set: &VertexSet) -> (Vec<usize>, Vec<u32>) {
    let (h, map) = g.induced(set);
    let masks = (0..h.n()).map(|v| h.neighbours(v).iter().fold(0u32, |m, u| m | 1 << u)).collect();
    (map, masks)
}

/// Minimum partition of `0..n` into candidate sets (grouped by lowest vertex),
/// each class anchored at the lowest remaining vertex. Returns the classes.
fn min_partition(n: usize, candidates: &[Vec<u32>]) -> Option<Vec<u32>> {
    let full: u32 = (1u32 << n) - 1;
    const UNKNOWN: u8 = u8::MAX;
    const NONE: u8 = u8::MAX - 1;
    let mut memo = vec![UNKNOWN; 1usize << n];
    memo[0] = 0;

    fn best(s: u32, candidates: &[Vec<u32>], memo: &mut [u8]) -> u8 {
        if memo[s as usize] != UNKNOWN {
            return memo[s as usize];
        }
        let low = s.trailing_zeros() as usize;
        let mut out = NONE;
        for &t in &candidates[low] {
            if t & !s != 0 {
                continue;
            }
            let r = best(s & !t, candidates, memo);
            if r < NONE && r + 1 < out {
                out = r + 1;
                if out == 1 {
                    break;
                }
            }
        }
        memo[s as usize] = out;
        out
    }

    if best(full, candidates, &mut memo) >= NONE {
        return None;
    }
    let mut classes = Vec::new();
    let mut s = full;
    while s != 0 {
        let low = s.trailing_zeros() as usize;
        let target = memo[s as usize] - 1;
        let t = *candidates[low]
            .iter()
            .find(|&&t| t & !s == 0 && memo[(s & !t) as usize] == target)
            .expect("memo is consistent");
        classes.push(t);
        s &= !t;
    }
    Some(classes)
}

/// Subsets of `0..n` with lowest vertex `low` satisfying `keep`, grouped by
/// lowest vertex.
fn anchored_subsets(n: usize, keep: impl Fn(u32) -> bool) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new(); n];
    for (low, group) in out.iter_mut().enumerate() {
        let above = n - low - 1;
        for rest in 0u32..(1u32 << above) {
            let t = (1u32 << low) | (rest << (low + 1));
            if keep(t) {
                group.push(t);
            }
        }
    }
    out
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap || n > MAX_CAP {
        return Err(Error::SizeLimit { n, cap: cap.min(MAX_CAP) });
    }
    Ok(())
}

fn odd_classes_of_component(g: &Graph, comp: &VertexSet) -> Vec<VertexSet> {
    let (map, masks) = local_masks(g, comp);
    let n = map.len();
    let odd = |t: u32| {
        let mut rest = t;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (masks[v] & t).count_ones().is_multiple_of(2) {
                return false;
            }
        }
        true
    };
    let candidates = anchored_subsets(n, odd);
    let classes = min_partition(n, &candidates).expect("even connected graphs are odd colourable");
    classes
        .into_iter()
        .map(|t| VertexSet::from_iter(g.n(), (0..n).filter(|&i| t >> i & 1 == 1).map(|i| map[i])))
        .collect()
}

/// Exact odd chromatic number with an optimal witness.
///
/// Each component is solved on its own; the optimum is the maximum over
/// components and the witness merges component classes slot by slot.
pub fn chi_odd_exact(g: &Graph) -> Result<(usize, Colouring)> {
    chi_odd_exact_with_cap(g, DEFAULT_CAP)
}

pub fn chi_odd_exact_with_cap(g: &Graph, cap: usize) -> Result<(usize, Colouring)> {
    check_feasible(g)?;
    check_cap(g.n(), cap)?;
    let mut merged: Vec<VertexSet> = Vec::new();
    for comp in g.components() {
        for (i, class) in odd_classes_of_component(g, &comp).into_iter().enumerate() {
            if i == merged.len() {
                merged.push(VertexSet::new(g.n()));
            }
            merged[i].union_with(&class);
        }
    }
    Ok((merged.len(), Colouring::new(g.n(), merged)))
}

/// Proper chromatic number by the same anchored subset DP over independent
/// sets. The empty graph has chromatic number 0.
pub fn chromatic_number_exact(g: &Graph) -> Result<usize> {
    chromatic_number_exact_with_cap(g, DEFAULT_CAP)
}

pub fn chromatic_number_exact_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    check_cap(g.n(), cap)?;
    let mut best = 0;
    for comp in g.components() {
        let (map, masks) = local_masks(g, &comp);
        let n = map.len();
        let independent = |t: u32| {
            let mut rest = t;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if masks[v] & t != 0 {
                    return false;
                }
            }
            true
        };
        let candidates = anchored_subsets(n, independent);
        let classes = min_partition(n, &candidates).expect("singletons are independent");
        best = best.max(classes.len());
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, k4_two_pendants, subdivided_complete};
    use crate::verify::verify_colouring;

    #[test]
    fn feasibility_examples() {
        assert!(is_odd_colourable(&complete(2).unwrap()));
        assert!(!is_odd_colourable(&complete(1).unwrap()));
        assert!(!is_odd_colourable(&complete(2).unwrap().disjoint_union(&complete(3).unwrap())));
    }

    #[test]
    fn chi_odd_examples() {
        let c4 = cycle(4).unwrap();
        let (k, w) = chi_odd_exact(&c4).unwrap();
        assert_eq!(k, 2);
        assert!(verify_colouring(&c4, &w).valid);
        assert_eq!(w.num_classes(), 2);

        assert_eq!(chi_odd_exact(&cycle(14).unwrap()).unwrap().0, 3);
        assert_eq!(chi_odd_exact(&subdivided_complete(4).unwrap()).unwrap().0, 4);
        assert_eq!(chi_odd_exact(&k4_two_pendants()).unwrap().0, 3);
        assert_eq!(chi_odd_exact(&cycle(12).unwrap()).unwrap().0, 2);
    }

    #[test]
    fn chi_odd_errors() {
        assert!(matches!(chi_odd_exact(&complete(3).unwrap()), Err(Error::Infeasible { .. })));
        assert!(matches!(chi_odd_exact(&cycle(22).unwrap()), Err(Error::SizeLimit { n: 22, cap: 20 })));
        assert_eq!(chi_odd_exact_with_cap(&cycle(22).unwrap(), 22).unwrap().0, 3);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number_exact(&complete(4).unwrap()).unwrap(), 4);
        assert_eq!(chromatic_number_exact(&cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(chromatic_number_exact(&Graph::empty(3)).unwrap(), 1);
    }

    #[test]
    fn empty_graph() {
        let (k, w) = chi_odd_exact(&Graph::empty(0)).unwrap();
        assert_eq!((k, w.num_classes()), (0, 0));
    }
}
