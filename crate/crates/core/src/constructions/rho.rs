//! The relation `a ρ b ⟺ a^m = b^m` for some `m ≥ 1`, and the
//! connectivity theorems of the power hypergraph that rest on it.

use serde::Serialize;

use super::{commuting_hypergraph, power_hypergraph};
use crate::algebra::Algebra;

/// Pairwise ρ checks are only run up to this order.
pub const DIRECT_RHO_LIMIT: usize = 64;

/// ρ-classes, keyed by the eventual idempotent of each element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhoPartition {
    pub class_of: Vec<usize>,
    /// The idempotent of each class, ascending.
    pub representatives: Vec<usize>,
}

impl RhoPartition {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.representatives.len()];
        for (a, &c) in self.class_of.iter().enumerate() {
            classes[c].push(a);
        }
        classes
    }
}

pub fn rho_partition(s: &Algebra) -> RhoPartition {
    let representatives = s.idempotents();
    let class_of = (0..s.order())
        .map(|a| {
            let e = s.eventual_idempotent(a);
            representatives.binary_search(&e).expect("eventual idempotent is idempotent")
        })
        .collect();
    RhoPartition { class_of, representatives }
}

/// `∃ m ≥ 1: a^m = b^m`, scanning `m ≤ 2|S|`. Both power sequences are
/// periodic by then and the common period of two elements sharing an
/// idempotent divides the exponent of its group, so the bound suffices.
pub fn rho_related_direct(s: &Algebra, a: usize, b: usize) -> bool {
    let (mut x, mut y) = (a, b);
    for _ in 0..2 * s.order() {
        if x == y {
            return true;
        }
        x = s.mul(x, a);
        y = s.mul(y, b);
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub passed: bool,
    pub component_count: usize,
    pub idempotent_count: usize,
    pub failures: Vec<String>,
}

/// Components of the power hypergraph are the ρ-classes, each holding one
/// idempotent; connected iff there is one idempotent; groups are
/// connected; every vertex co-occurs with exactly one idempotent.
pub fn verify_component_theorem(s: &Algebra) -> ComponentReport {
    let h = power_hypergraph(s);
    let components = h.connected_components();
    let rho = rho_partition(s);
    let idempotents = s.idempotents();
    let mut failures = Vec::new();

    let mut rho_classes = rho.classes();
    rho_classes.sort();
    let mut component_classes = components.classes();
    component_classes.sort();
    if component_classes != rho_classes {
        failures.push("power hypergraph components differ from the ρ-classes".to_string());
    }
    if h.is_connected() != (idempotents.len() == 1) {
        failures.push(format!(
            "connected = {} but there are {} idempotents",
            h.is_connected(),
            idempotents.len()
        ));
    }
    if s.is_group() && !h.is_connected() {
        failures.push("power hypergraph of a group is disconnected".to_string());
    }
    for v in 0..s.order() {
        let nbhd = h.closed_neighborhood(v).expect("vertex in range");
        let adjacent = nbhd.iter().filter(|u| idempotents.binary_search(u).is_ok()).count();
        if adjacent != 1 {
            failures.push(format!("{} is adjacent to {adjacent} idempotents", s.label(v)));
        }
    }
    if s.order() <= DIRECT_RHO_LIMIT {
        for a in 0..s.order() {
            for b in a + 1..s.order() {
                let same = rho.class_of[a] == rho.class_of[b];
                if same != rho_related_direct(s, a, b) {
                    failures.push(format!(
                        "ρ({}, {}) disagrees with the eventual-idempotent classes",
                        s.label(a),
                        s.label(b)
                    ));
                }
            }
        }
    }
    ComponentReport {
        passed: failures.is_empty(),
        component_count: components.count,
        idempotent_count: idempotents.len(),
        failures,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum DegreeReport {
    /// The algebra has a zero with zero divisors, so the theorem does not apply.
    Skipped { reason: String },
    Passed { max_degree: usize },
    Failed { vertex: usize, label: String },
}

/// No vertex of the commuting hypergraph has degree exactly 2, for
/// algebras without zero divisors. An algebra counts as free of zero
/// divisors when it has no two-sided zero, or its zero has no divisor pairs.
pub fn verify_degree_not_two(s: &Algebra) -> DegreeReport {
    if let Some(z) = s.zero_and_zero_divisors() {
        if let Some(&(a, b)) = z.pairs.first() {
            return DegreeReport::Skipped {
                reason: format!("{} · {} = {} is a zero divisor pair", s.label(a), s.label(b), s.label(z.zero)),
            };
        }
    }
    let degrees = commuting_hypergraph(s).degree_sequence();
    match degrees.iter().position(|&d| d == 2) {
        Some(v) => DegreeReport::Failed { vertex: v, label: s.label(v).to_string() },
        None => DegreeReport::Passed { max_degree: degrees.into_iter().max().unwrap_or(0) },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(spec: &str) -> Algebra {
        Algebra::from_spec(spec).unwrap()
    }

    #[test]
    fn rho_classes() {
        assert_eq!(rho_partition(&alg("sym:4")).class_count(), 1);
        let m = rho_partition(&alg("multmod:10"));
        assert_eq!(m.representatives, vec![0, 1, 5, 6]);
        assert_eq!(m.classes(), vec![vec![0], vec![1, 3, 7, 9], vec![5], vec![2, 4, 6, 8]]);
        for (c, &e) in m.representatives.iter().enumerate() {
            assert_eq!(m.class_of[e], c);
        }
    }

    #[test]
    fn multmod_ten_components() {
        let r = verify_component_theorem(&alg("multmod:10"));
        assert!(r.passed, "{:?}", r.failures);
        assert_eq!(r.component_count, 4);
        assert_eq!(r.idempotent_count, 4);
    }

    #[test]
    fn full_transformation_components() {
        let t3 = alg("fulltrans:3");
        let r = verify_component_theorem(&t3);
        assert!(r.passed, "{:?}", r.failures);
        assert_eq!(r.component_count, t3.idempotents().len());
        assert_eq!(r.component_count, 10);
    }

    #[test]
    fn groups_are_connected() {
        for spec in ["quaternion", "sym:3", "cyclic:12", "klein", "dihedral:5"] {
            let r = verify_component_theorem(&alg(spec));
            assert!(r.passed && r.component_count == 1, "{spec}");
        }
    }

    #[test]
    fn degree_theorem() {
        for spec in ["quaternion", "sym:3", "dihedral:4", "dihedral:6", "cyclic:9"] {
            assert!(matches!(verify_degree_not_two(&alg(spec)), DegreeReport::Passed { .. }), "{spec}");
        }
        assert_eq!(verify_degree_not_two(&alg("cyclic:7")), DegreeReport::Passed { max_degree: 1 });
        assert!(matches!(verify_degree_not_two(&alg("multmod:10")), DegreeReport::Skipped { .. }));
        assert!(matches!(verify_degree_not_two(&alg("multmod:7")), DegreeReport::Passed { .. }));
    }
}
