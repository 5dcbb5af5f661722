use fixedbitset::FixedBitSet;

use super::{ConstructionError, HypergraphKind, Result};
use crate::algebra::Algebra;
use crate::hypergraph::Hypergraph;

pub const IDENTITY_LIMIT: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityMode {
    /// ⊆-maximal subsets whose product is the identity.
    Maximal,
    /// ⊆-minimal non-empty subsets whose product is the identity.
    Minimal,
}

/// Identity hypergraph of a finite abelian group. Edges are sets of
/// distinct elements.
///
/// Maximal mode uses complements: with `t` the product of all elements,
/// `X` has product `e` iff `G ∖ X` has product `t`, so the maximal edges
/// are the complements of the minimal sets with product `t` (or `G` alone
/// when `t = e`).
pub fn identity_hypergraph(g: &Algebra, mode: IdentityMode) -> Result<Hypergraph> {
    let kind = match mode {
        IdentityMode::Maximal => HypergraphKind::IdentityMax,
        IdentityMode::Minimal => HypergraphKind::IdentityMin,
    };
    let e = match (g.is_group(), g.identity()) {
        (true, Some(e)) => e,
        _ => return Err(ConstructionError::NotAGroup(kind)),
    };
    if !g.is_abelian() {
        return Err(ConstructionError::NotAbelian);
    }
    let n = g.order();
    if n > IDENTITY_LIMIT {
        return Err(ConstructionError::TooLarge { kind, order: n, limit: IDENTITY_LIMIT });
    }
    let edges = match mode {
        IdentityMode::Minimal => minimal_sets_with_product(g, e),
        IdentityMode::Maximal => {
            let total = (0..n).fold(e, |acc, x| g.mul(acc, x));
            if total == e {
                vec![(0..n).collect()]
            } else {
                minimal_sets_with_product(g, total)
                    .into_iter()
                    .map(|y| (0..n).filter(|x| y.binary_search(x).is_err()).collect())
                    .collect()
            }
        }
    };
    Ok(Hypergraph::new(g.labels().to_vec(), edges).expect("elements in range"))
}

/// Products of all non-empty subsets of `xs`.
fn subset_products(g: &Algebra, xs: &[usize]) -> FixedBitSet {
    let mut reachable = FixedBitSet::with_capacity(g.order());
    for &x in xs {
        reachable = extend_products(g, &reachable, x);
    }
    reachable
}

fn extend_products(g: &Algebra, reachable: &FixedBitSet, x: usize) -> FixedBitSet {
    let mut next = reachable.clone();
    next.insert(x);
    for r in reachable.ones() {
        next.insert(g.mul(r, x));
    }
    next
}

/// ⊆-minimal non-empty subsets with product `target`.
///
/// Every proper subset of a minimal set avoids `target`, so the search
/// walks `target`-free sets (no non-empty subset multiplies to `target`)
/// in increasing index order and closes each with one larger element.
fn minimal_sets_with_product(g: &Algebra, target: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    walk(g, target, &mut Vec::new(), &FixedBitSet::with_capacity(g.order()), 0, &mut out);
    out
}

fn walk(
    g: &Algebra,
    target: usize,
    current: &mut Vec<usize>,
    reachable: &FixedBitSet,
    from: usize,
    out: &mut Vec<Vec<usize>>,
) {
    for y in from..g.order() {
        let next = extend_products(g, reachable, y);
        current.push(y);
        if next.contains(target) {
            let product = current.iter().fold(g.identity().expect("group"), |acc, &x| g.mul(acc, x));
            let minimal = product == target
                && (0..current.len()).all(|i| {
                    let mut rest = current.clone();
                    rest.remove(i);
                    !subset_products(g, &rest).contains(target)
                });
            if minimal {
                out.push(current.clone());
            }
        } else {
            walk(g, target, current, &next, y + 1, out);
        }
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(spec: &str) -> Algebra {
        Algebra::from_spec(spec).unwrap()
    }

    /// Both families by scanning every subset.
    fn oracle(g: &Algebra) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let n = g.order();
        let e = g.identity().unwrap();
        let zero_sum: Vec<u32> = (1u32..1 << n)
            .filter(|&m| (0..n).filter(|&i| m >> i & 1 == 1).fold(e, |acc, x| g.mul(acc, x)) == e)
            .collect();
        let decode = |m: u32| (0..n).filter(|&i| m >> i & 1 == 1).collect::<Vec<usize>>();
        let mut maximal: Vec<Vec<usize>> = zero_sum
            .iter()
            .filter(|&&m| !zero_sum.iter().any(|&o| o != m && o & m == m))
            .map(|&m| decode(m))
            .collect();
        let mut minimal: Vec<Vec<usize>> = zero_sum
            .iter()
            .filter(|&&m| !zero_sum.iter().any(|&o| o != m && o & m == o))
            .map(|&m| decode(m))
            .collect();
        maximal.sort();
        minimal.sort();
        (maximal, minimal)
    }

    fn edges(sets: &[&[usize]]) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        v.sort();
        v
    }

    #[test]
    fn z8_fixtures() {
        let z8 = alg("cyclic:8");
        let max = identity_hypergraph(&z8, IdentityMode::Maximal).unwrap();
        assert_eq!(
            max.edges().to_vec(),
            edges(&[&[0, 1, 4, 5, 6], &[0, 2, 3, 4, 7], &[0, 1, 2, 3, 4, 6], &[0, 2, 4, 5, 6, 7], &[0, 1, 2, 3, 5, 6, 7]])
        );
        // 3 + 6 + 7 = 16 and no proper subset sums to 0 mod 8, so {3,6,7}
        // is minimal too, alongside the nine commonly listed edges.
        let min = identity_hypergraph(&z8, IdentityMode::Minimal).unwrap();
        assert_eq!(
            min.edges().to_vec(),
            edges(&[
                &[0],
                &[1, 7],
                &[2, 6],
                &[3, 5],
                &[1, 2, 5],
                &[1, 3, 4],
                &[3, 6, 7],
                &[4, 5, 7],
                &[1, 4, 5, 6],
                &[2, 3, 4, 7],
            ])
        );
    }

    #[test]
    fn odd_order_has_single_maximal_edge() {
        let z5 = alg("cyclic:5");
        let h = identity_hypergraph(&z5, IdentityMode::Maximal).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn rejects_non_abelian_and_non_groups() {
        assert_eq!(
            identity_hypergraph(&alg("sym:3"), IdentityMode::Minimal),
            Err(ConstructionError::NotAbelian)
        );
        assert!(matches!(
            identity_hypergraph(&alg("multmod:6"), IdentityMode::Maximal),
            Err(ConstructionError::NotAGroup(HypergraphKind::IdentityMax))
        ));
        assert!(ConstructionError::NotAbelian.to_string().contains("requires abelian group"));
    }

    #[test]
    fn agrees_with_subset_oracle() {
        for spec in [
            "cyclic:1",
            "cyclic:2",
            "cyclic:6",
            "cyclic:8",
            "cyclic:9",
            "cyclic:12",
            "klein",
            "elemab:2:3",
            "elemab:3:2",
            "product:(cyclic:2),(cyclic:4)",
            "product:(cyclic:2),(cyclic:6)",
            "cyclic:16",
            "product:(cyclic:4),(cyclic:4)",
        ] {
            let g = alg(spec);
            let (max, min) = oracle(&g);
            assert_eq!(identity_hypergraph(&g, IdentityMode::Maximal).unwrap().edges().to_vec(), max, "{spec}");
            assert_eq!(identity_hypergraph(&g, IdentityMode::Minimal).unwrap().edges().to_vec(), min, "{spec}");
        }
    }
}
