//! Basis-exchange checks for edge families, and the generating-set
//! matroid results for p-groups.

mod burnside;
mod model;

pub use burnside::{burnside_correspondence, BurnsideReport, BURNSIDE_ALL_SUBSETS_LIMIT};
pub use model::{
    match_model, match_s3_model, s3_reference_model, z6z6_counterexample, MatroidModel,
    S3ModelMatch, Z6Z6Report,
};

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::constructions::ConstructionError;
use crate::hypergraph::Hypergraph;

/// Largest family the exchange check accepts.
pub const MAX_FAMILY: usize = 10_000;
/// Ground elements must be below this index so sets fit in a `u128` mask.
pub const MAX_GROUND: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("a basis family needs at least one basis")]
    EmptyFamily,
    #[error("family of {0} sets exceeds the limit of {MAX_FAMILY}")]
    FamilyTooLarge(usize),
    #[error("element {0} exceeds the ground-set limit of {MAX_GROUND}")]
    GroundTooLarge(usize),
    #[error("order {0} is not a prime power")]
    NotAPGroup(usize),
    #[error("rank {k} exceeds ground size {m}")]
    RankTooLarge { k: usize, m: usize },
    #[error("element {element} is not in the uniform part of size {m}")]
    NoSuchElement { element: usize, m: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

pub type Result<T> = std::result::Result<T, MatroidError>;

/// `(A, B, b)` with `b ∈ B ∖ A` such that no `a ∈ A ∖ B` makes
/// `A ∖ {a} ∪ {b}` a member of the family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeWitness {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub element: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeReport {
    pub holds: bool,
    pub witness: Option<ExchangeWitness>,
    /// Ordered pairs `(A, B)` examined, counted in canonical order up to
    /// and including the witness pair.
    pub checked_pairs: u64,
}

fn mask(edge: &[usize]) -> Result<u128> {
    edge.iter().try_fold(0u128, |m, &x| {
        if x >= MAX_GROUND {
            Err(MatroidError::GroundTooLarge(x))
        } else {
            Ok(m | 1 << x)
        }
    })
}

fn unmask(m: u128) -> Vec<usize> {
    (0..MAX_GROUND).filter(|&i| m >> i & 1 == 1).collect()
}

/// Membership-based exchange test for a family of sets.
struct Family {
    masks: Vec<u128>,
    members: HashSet<u128>,
}

impl Family {
    fn new(family: &[Vec<usize>]) -> Result<Self> {
        if family.is_empty() {
            return Err(MatroidError::EmptyFamily);
        }
        if family.len() > MAX_FAMILY {
            return Err(MatroidError::FamilyTooLarge(family.len()));
        }
        let mut masks = family.iter().map(|e| mask(e)).collect::<Result<Vec<_>>>()?;
        masks.sort_by_key(|&m| unmask(m));
        masks.dedup();
        let members = masks.iter().copied().collect();
        Ok(Family { masks, members })
    }

    /// First `b ∈ B ∖ A` with no valid exchange partner.
    fn failing_element(&self, a: u128, b: u128) -> Option<usize> {
        let a_only = a & !b;
        let mut b_only = b & !a;
        while b_only != 0 {
            let y = b_only.trailing_zeros() as usize;
            b_only &= b_only - 1;
            let mut candidates = a_only;
            let mut exchanged = false;
            while candidates != 0 {
                let x = candidates.trailing_zeros();
                candidates &= candidates - 1;
                if self.members.contains(&(a & !(1 << x) | 1 << y)) {
                    exchanged = true;
                    break;
                }
            }
            if !exchanged {
                return Some(y);
            }
        }
        None
    }
}

/// Exhaustive check over all `(A, B, b)`; `A` and `B` range over the
/// family in lexicographic order of their sorted elements.
pub fn check_exchange_axiom(family: &[Vec<usize>]) -> Result<ExchangeReport> {
    let f = Family::new(family)?;
    let n = f.masks.len() as u64;
    let first = f.masks.par_iter().enumerate().find_map_first(|(i, &a)| {
        f.masks
            .iter()
            .enumerate()
            .find_map(|(j, &b)| f.failing_element(a, b).map(|y| (i, j, y)))
    });
    Ok(match first {
        None => ExchangeReport { holds: true, witness: None, checked_pairs: n * n },
        Some((i, j, y)) => ExchangeReport {
            holds: false,
            witness: Some(ExchangeWitness { a: unmask(f.masks[i]), b: unmask(f.masks[j]), element: y }),
            checked_pairs: i as u64 * n + j as u64 + 1,
        },
    })
}

/// Re-checks a witness from scratch against the family.
pub fn verify_witness(family: &[Vec<usize>], w: &ExchangeWitness) -> bool {
    let canon = |s: &[usize]| {
        let mut v = s.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    };
    let members: HashSet<Vec<usize>> = family.iter().map(|e| canon(e)).collect();
    let (a, b) = (canon(&w.a), canon(&w.b));
    if !members.contains(&a) || !members.contains(&b) {
        return false;
    }
    if !b.contains(&w.element) || a.contains(&w.element) {
        return false;
    }
    a.iter().filter(|x| !b.contains(x)).all(|&x| {
        let swapped: Vec<usize> = a.iter().copied().filter(|&y| y != x).chain([w.element]).collect();
        !members.contains(&canon(&swapped))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisVerdict {
    pub is_basis: bool,
    /// Common edge size, when all edges have one.
    pub uniform: Option<usize>,
    /// `None` only for the empty family.
    pub report: Option<ExchangeReport>,
}

impl BasisVerdict {
    /// A basis family must come out uniform; this is checked rather than
    /// assumed.
    pub fn is_consistent(&self) -> bool {
        !self.is_basis || self.uniform.is_some()
    }
}

pub fn is_basis_hypergraph(h: &Hypergraph) -> Result<BasisVerdict> {
    if h.edge_count() == 0 {
        return Ok(BasisVerdict { is_basis: false, uniform: None, report: None });
    }
    let report = check_exchange_axiom(h.edges())?;
    Ok(BasisVerdict { is_basis: report.holds, uniform: h.uniform_size(), report: Some(report) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::constructions::generating_hypergraph;
    use proptest::prelude::*;

    /// Exchange axiom straight from the definition on sorted vectors.
    fn oracle_holds(family: &[Vec<usize>]) -> bool {
        let set: HashSet<Vec<usize>> = family.iter().cloned().collect();
        family.iter().all(|a| {
            family.iter().all(|b| {
                b.iter().filter(|y| !a.contains(y)).all(|&y| {
                    a.iter().filter(|x| !b.contains(x)).any(|&x| {
                        let mut c: Vec<usize> = a.iter().copied().filter(|&z| z != x).collect();
                        c.push(y);
                        c.sort_unstable();
                        set.contains(&c)
                    })
                })
            })
        })
    }

    fn gen(spec: &str) -> Hypergraph {
        generating_hypergraph(&Algebra::from_spec(spec).unwrap()).unwrap()
    }

    #[test]
    fn empty_family_is_an_error() {
        assert_eq!(check_exchange_axiom(&[]), Err(MatroidError::EmptyFamily));
        let h = Hypergraph::unlabeled(3, vec![]).unwrap();
        assert!(!is_basis_hypergraph(&h).unwrap().is_basis);
    }

    #[test]
    fn single_edge_is_vacuous() {
        let r = check_exchange_axiom(&[vec![0, 2]]).unwrap();
        assert!(r.holds);
        assert_eq!(r.checked_pairs, 1);
    }

    #[test]
    fn generating_families() {
        assert!(check_exchange_axiom(gen("klein").edges()).unwrap().holds);
        assert!(check_exchange_axiom(gen("sym:3").edges()).unwrap().holds);
        let v = is_basis_hypergraph(&gen("product:(cyclic:4),(cyclic:2)")).unwrap();
        assert!(v.is_basis && v.is_consistent());
        assert_eq!(v.uniform, Some(2));

        let z6 = gen("cyclic:6");
        let v = is_basis_hypergraph(&z6).unwrap();
        assert!(!v.is_basis);
        let w = v.report.unwrap().witness.unwrap();
        assert_eq!(w, ExchangeWitness { a: vec![1], b: vec![2, 3], element: 2 });
        assert!(verify_witness(z6.edges(), &w));
    }

    #[test]
    fn witness_verification_rejects_bad_triples() {
        let family = vec![vec![1], vec![2, 3], vec![3, 4], vec![5]];
        let ok = ExchangeWitness { a: vec![1], b: vec![2, 3], element: 2 };
        assert!(verify_witness(&family, &ok));
        assert!(!verify_witness(&family, &ExchangeWitness { element: 1, ..ok.clone() }));
        assert!(!verify_witness(&family, &ExchangeWitness { a: vec![0], ..ok.clone() }));
        let uniform = vec![vec![0, 1], vec![0, 2], vec![1, 2]];
        assert!(!verify_witness(&uniform, &ExchangeWitness { a: vec![0, 1], b: vec![0, 2], element: 2 }));
    }

    #[test]
    fn ground_limit() {
        assert_eq!(check_exchange_axiom(&[vec![200]]), Err(MatroidError::GroundTooLarge(200)));
    }

    proptest! {
        #[test]
        fn agrees_with_definition(masks in proptest::collection::vec(1u8..64, 1..12)) {
            let family: Vec<Vec<usize>> = masks
                .iter()
                .map(|&m| (0..6).filter(|i| m >> i & 1 == 1).collect())
                .collect();
            let mut canon = family.clone();
            canon.sort();
            canon.dedup();
            let r = check_exchange_axiom(&family).unwrap();
            prop_assert_eq!(r.holds, oracle_holds(&canon));
            if let Some(w) = &r.witness {
                prop_assert!(verify_witness(&family, w));
            }
        }
    }
}
