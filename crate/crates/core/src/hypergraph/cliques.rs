use fixedbitset::FixedBitSet;

use super::{Graph, Hypergraph};

/// The clique hypergraph of `g`: every inclusion-maximal clique, found by
/// Bron–Kerbosch with Tomita pivoting. Isolated vertices give singleton
/// edges; the empty graph gives no edges.
pub fn maximal_cliques(g: &Graph) -> Hypergraph {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n > 0 {
        let mut candidates = FixedBitSet::with_capacity(n);
        candidates.insert_range(..);
        expand(g, &mut Vec::new(), candidates, FixedBitSet::with_capacity(n), &mut out);
    }
    Hypergraph::new(g.labels().to_vec(), out).expect("clique vertices are in range")
}

fn expand(
    g: &Graph,
    clique: &mut Vec<usize>,
    mut candidates: FixedBitSet,
    mut excluded: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if candidates.is_clear() {
        if excluded.is_clear() {
            out.push(clique.clone());
        }
        return;
    }
    // pivot: the vertex of P ∪ X with most neighbors in P
    let pivot = candidates
        .ones()
        .chain(excluded.ones())
        .max_by_key(|&u| candidates.intersection_count(g.neighbors(u)))
        .expect("candidates non-empty");
    let branch: Vec<usize> = candidates.difference(g.neighbors(pivot)).collect();
    for v in branch {
        let nv = g.neighbors(v);
        let mut next_candidates = candidates.clone();
        next_candidates.intersect_with(nv);
        let mut next_excluded = excluded.clone();
        next_excluded.intersect_with(nv);
        clique.push(v);
        expand(g, clique, next_candidates, next_excluded, out);
        clique.pop();
        candidates.set(v, false);
        excluded.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::neighborhood_coincidence;
    use proptest::prelude::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::unlabeled(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// All maximal cliques by scanning every vertex subset.
    fn brute_force_cliques(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.vertex_count();
        let cliques: Vec<u32> = (1u32..1 << n)
            .filter(|&m| {
                let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
                g.is_clique(&vs)
            })
            .collect();
        let mut out: Vec<Vec<usize>> = cliques
            .iter()
            .filter(|&&m| !cliques.iter().any(|&o| o != m && o & m == m))
            .map(|&m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn small_cases() {
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(maximal_cliques(&k4).edges(), &[vec![0, 1, 2, 3]]);
        let path = graph(3, &[(0, 1), (1, 2)]);
        assert_eq!(maximal_cliques(&path).edges(), &[vec![0, 1], vec![1, 2]]);
        let isolated = graph(3, &[(0, 1)]);
        assert_eq!(maximal_cliques(&isolated).edges(), &[vec![0, 1], vec![2]]);
        assert_eq!(maximal_cliques(&Graph::unlabeled(0)).edge_count(), 0);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=10).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::unlabeled(n);
                let mut it = bits.into_iter();
                for a in 0..n {
                    for b in a + 1..n {
                        if it.next().unwrap() {
                            g.add_edge(a, b);
                        }
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn matches_subset_oracle(g in arb_graph()) {
            let h = maximal_cliques(&g);
            prop_assert_eq!(h.edges().to_vec(), brute_force_cliques(&g));
            prop_assert!(h.is_antichain());
            prop_assert!(h.degree_sequence().iter().all(|&d| d >= 1));
            for v in 0..g.vertex_count() {
                prop_assert!(neighborhood_coincidence(&g, &h, v).unwrap());
            }
        }
    }
}
