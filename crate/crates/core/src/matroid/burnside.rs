use std::collections::HashSet;

use num_bigint::BigUint;
use serde::Serialize;

use super::{MatroidError, Result};
use crate::algebra::Algebra;
use crate::constructions::generating_hypergraph;

/// Up to this order every subset of the group is checked; above it only
/// subsets of size at most `rank + 1`.
pub const BURNSIDE_ALL_SUBSETS_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BurnsideReport {
    pub p: usize,
    pub frattini: Vec<usize>,
    pub quotient_order: usize,
    /// Common size of the minimal generating sets of `G/Φ(G)`.
    pub rank: usize,
    pub quotient_edges: usize,
    pub edges: usize,
    /// `quotient_edges · |Φ|^rank`.
    pub predicted_edges: String,
    pub subsets_checked: u64,
    /// Subsets where "minimal generating set of G" and "injective image that
    /// is a minimal generating set of G/Φ(G)" disagree (first few only).
    pub mismatches: Vec<Vec<usize>>,
    pub passed: bool,
}

/// A subset of a p-group is a minimal generating set exactly when it maps
/// injectively onto a minimal generating set of `G/Φ(G)`.
pub fn burnside_correspondence(g: &Algebra) -> Result<BurnsideReport> {
    let (p, _) = g.prime_power_order().ok_or(MatroidError::NotAPGroup(g.order()))?;
    let n = g.order();
    let frattini = g.frattini_subgroup()?;
    let quotient = g.quotient(&frattini)?;
    let gen_g = generating_hypergraph(g)?;
    let gen_q = generating_hypergraph(&quotient.group)?;

    let q_edges: HashSet<Vec<usize>> = gen_q.edges().iter().cloned().collect();
    let g_edges: HashSet<Vec<usize>> = gen_g.edges().iter().cloned().collect();
    let rank = gen_q.uniform_size().unwrap_or(0);
    let image_is_basis = |s: &[usize]| {
        let mut image: Vec<usize> = s.iter().map(|&x| quotient.projection[x]).collect();
        image.sort_unstable();
        let before = image.len();
        image.dedup();
        image.len() == before && q_edges.contains(&image)
    };

    let mut mismatches = Vec::new();
    let mut checked = 0u64;
    let mut check = |s: &[usize]| {
        checked += 1;
        if g_edges.contains(s) != image_is_basis(s) && mismatches.len() < 8 {
            mismatches.push(s.to_vec());
        }
    };
    let max_size = if n <= BURNSIDE_ALL_SUBSETS_LIMIT { n } else { rank + 1 };
    for_each_subset(n, max_size, &mut Vec::new(), 0, &mut check);
    // Beyond the enumeration cap, no edge of Gen_H(G) may be larger than
    // `rank + 1`, and images of larger sets are never bases.
    if let Some(big) = gen_g.edges().iter().find(|e| e.len() > max_size) {
        mismatches.push(big.clone());
    }

    let predicted = BigUint::from(gen_q.edge_count()) * BigUint::from(frattini.len()).pow(rank as u32);
    let passed = mismatches.is_empty()
        && gen_q.uniform_size().is_some()
        && predicted == BigUint::from(gen_g.edge_count());
    Ok(BurnsideReport {
        p,
        quotient_order: quotient.group.order(),
        frattini,
        rank,
        quotient_edges: gen_q.edge_count(),
        edges: gen_g.edge_count(),
        predicted_edges: predicted.to_string(),
        subsets_checked: checked,
        mismatches,
        passed,
    })
}

fn for_each_subset(n: usize, max_size: usize, current: &mut Vec<usize>, from: usize, f: &mut impl FnMut(&[usize])) {
    f(current);
    if current.len() == max_size {
        return;
    }
    for x in from..n {
        current.push(x);
        for_each_subset(n, max_size, current, x + 1, f);
        current.pop();
    }
}
