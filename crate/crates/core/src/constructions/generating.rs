use fixedbitset::FixedBitSet;

use super::{ConstructionError, HypergraphKind, Result};
use crate::algebra::Algebra;
use crate::hypergraph::Hypergraph;

pub const GENERATING_LIMIT: usize = 64;

/// All minimal generating sets.
///
/// A generating set is minimal exactly when it is irredundant (no member
/// lies in the substructure generated by the others), and irredundance is
/// inherited by subsets. So the search grows irredundant sets in increasing
/// index order and records each one that generates; generating sets are
/// never extended.
pub fn generating_hypergraph(s: &Algebra) -> Result<Hypergraph> {
    let n = s.order();
    if n > GENERATING_LIMIT {
        return Err(ConstructionError::TooLarge {
            kind: HypergraphKind::Generating,
            order: n,
            limit: GENERATING_LIMIT,
        });
    }
    let mut edges = Vec::new();
    let empty = s.closure_set(&[]);
    if empty.count_ones(..) == n {
        edges.push(Vec::new());
    } else {
        grow(s, &mut Vec::new(), &empty, 0, &mut edges);
    }
    Ok(Hypergraph::new(s.labels().to_vec(), edges).expect("elements in range"))
}

fn grow(s: &Algebra, current: &mut Vec<usize>, span: &FixedBitSet, from: usize, edges: &mut Vec<Vec<usize>>) {
    let n = s.order();
    for y in from..n {
        if span.contains(y) {
            continue;
        }
        current.push(y);
        let irredundant = (0..current.len() - 1).all(|i| {
            let others: Vec<usize> = current
                .iter()
                .enumerate()
                .filter_map(|(j, &x)| (j != i).then_some(x))
                .collect();
            !s.closure_set(&others).contains(current[i])
        });
        if irredundant {
            let next_span = s.closure_set(current);
            if next_span.count_ones(..) == n {
                edges.push(current.clone());
            } else {
                grow(s, current, &next_span, y + 1, edges);
            }
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

    /// Minimal generating sets by testing every subset.
    fn subset_oracle(s: &Algebra) -> Vec<Vec<usize>> {
        let n = s.order();
        let mut out = Vec::new();
        for mask in 0u32..1 << n {
            let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if !s.generates(&set) {
                continue;
            }
            let minimal = (0..set.len()).all(|i| {
                let mut smaller = set.clone();
                smaller.remove(i);
                !s.generates(&smaller)
            });
            if minimal {
                out.push(set);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn klein_edges_are_pairs_of_non_identity_elements() {
        let h = generating_hypergraph(&alg("klein")).unwrap();
        assert_eq!(h.edges(), &[vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn s3_has_nine_edges() {
        let s3 = alg("sym:3");
        let h = generating_hypergraph(&s3).unwrap();
        assert_eq!(h.edge_count(), 9);
        let three_cycles = [s3.element("(1 2 3)").unwrap(), s3.element("(1 3 2)").unwrap()];
        let mut excluded = three_cycles.to_vec();
        excluded.sort_unstable();
        assert!(!h.contains_edge(&excluded));
        assert!(h.edges().iter().all(|e| e.len() == 2 && !e.contains(&0)));
    }

    #[test]
    fn cyclic_six() {
        let h = generating_hypergraph(&alg("cyclic:6")).unwrap();
        assert_eq!(h.edges(), &[vec![1], vec![2, 3], vec![3, 4], vec![5]]);
    }

    #[test]
    fn trivial_group_is_generated_by_the_empty_set() {
        let h = generating_hypergraph(&alg("cyclic:1")).unwrap();
        assert_eq!(h.edges(), &[Vec::<usize>::new()]);
    }

    #[test]
    fn agrees_with_subset_oracle() {
        for spec in [
            "klein",
            "sym:3",
            "cyclic:6",
            "cyclic:12",
            "quaternion",
            "dihedral:4",
            "dihedral:5",
            "dihedral:6",
            "product:(cyclic:2),(cyclic:4)",
            "elemab:2:3",
            "elemab:3:2",
            "multmod:10",
            "multmod:12",
            "fulltrans:2",
        ] {
            let s = alg(spec);
            let h = generating_hypergraph(&s).unwrap();
            assert_eq!(h.edges().to_vec(), subset_oracle(&s), "{spec}");
            assert!(h.is_antichain(), "{spec}");
        }
    }

    #[test]
    fn size_limit() {
        assert!(matches!(
            generating_hypergraph(&alg("sym:5")),
            Err(ConstructionError::TooLarge { .. })
        ));
    }
}
