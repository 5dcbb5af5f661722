//! Divisor-lattice machinery behind the power hypergraph of ℤₙ.
//!
//! A maximal chain `1 = n₀ | n₁ | … | n_r = n` steps up by one prime at a
//! time. In ℤₙ two elements share a power-hypergraph edge exactly when one
//! order divides the other, so each maximal chain gives one edge: the
//! elements whose order lies on the chain, `Σ φ(nᵢ)` of them.

mod factor;

pub use factor::{is_prime, Factorization};

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::Hypergraph;

/// Largest `n` accepted by [`maximal_chains`].
pub const MAX_CHAIN_INPUT: u64 = 1_000_000_000;
/// Chain lists longer than this are not materialized.
pub const CHAIN_MATERIALIZATION_LIMIT: u64 = 1_000_000;
/// Largest `n` for [`predicted_power_hypergraph`].
pub const MAX_PREDICTED_ORDER: u64 = 1_000_000;
/// Largest bound accepted by [`smallest_n_exceeding_chain_count`].
pub const MAX_SEARCH_BOUND: u64 = 1_000_000_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumTheoryError {
    #[error("argument must be at least 1")]
    Zero,
    #[error("{n} exceeds the limit of {limit}")]
    InputTooLarge { n: u64, limit: u64 },
    #[error("{count} maximal chains exceed the materialization limit of {CHAIN_MATERIALIZATION_LIMIT}")]
    TooManyChains { count: BigUint },
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("invalid divisor chain: {0}")]
    InvalidChain(String),
}

pub type Result<T> = std::result::Result<T, NumTheoryError>;

/// Euler's totient, from the factorization.
pub fn euler_phi(n: u64) -> Result<u64> {
    let f = Factorization::of(n)?;
    Ok(f.pairs().iter().fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

/// `1 = n₀ | n₁ | … | n_r = n` with every ratio `nᵢ₊₁ / nᵢ` prime.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DivisorChain(Vec<u64>);

impl DivisorChain {
    pub fn new(steps: Vec<u64>) -> Result<Self> {
        if steps.first() != Some(&1) {
            return Err(NumTheoryError::InvalidChain("must start at 1".into()));
        }
        for w in steps.windows(2) {
            if w[1] % w[0] != 0 || !is_prime(w[1] / w[0]) {
                return Err(NumTheoryError::InvalidChain(format!("{} -> {} is not a prime step", w[0], w[1])));
            }
        }
        Ok(DivisorChain(steps))
    }

    pub fn steps(&self) -> &[u64] {
        &self.0
    }

    pub fn top(&self) -> u64 {
        *self.0.last().expect("chain is non-empty")
    }

    /// Number of prime steps `r`.
    pub fn length(&self) -> usize {
        self.0.len() - 1
    }
}

/// Size of the power-hypergraph edge for `chain`: `Σ φ(nᵢ)`.
pub fn chain_edge_cardinality(chain: &DivisorChain) -> u64 {
    chain
        .steps()
        .iter()
        .map(|&d| euler_phi(d).expect("chain entries are positive"))
        .sum()
}

/// Every maximal chain of the divisor lattice of `n`, in lexicographic order.
pub fn maximal_chains(n: u64) -> Result<Vec<DivisorChain>> {
    if n == 0 {
        return Err(NumTheoryError::Zero);
    }
    if n > MAX_CHAIN_INPUT {
        return Err(NumTheoryError::InputTooLarge { n, limit: MAX_CHAIN_INPUT });
    }
    let f = Factorization::of(n)?;
    let count = count_chains_multinomial(&f);
    if count > BigUint::from(CHAIN_MATERIALIZATION_LIMIT) {
        return Err(NumTheoryError::TooManyChains { count });
    }
    let primes: Vec<u64> = f.primes().collect();
    let mut out = Vec::new();
    let mut chain = vec![1];
    fn walk(n: u64, primes: &[u64], chain: &mut Vec<u64>, out: &mut Vec<DivisorChain>) {
        let cur = *chain.last().expect("non-empty");
        if cur == n {
            out.push(DivisorChain(chain.clone()));
            return;
        }
        for &p in primes {
            if (n / cur).is_multiple_of(p) {
                chain.push(cur * p);
                walk(n, primes, chain, out);
                chain.pop();
            }
        }
    }
    walk(n, &primes, &mut chain, &mut out);
    Ok(out)
}

/// `N(1) = 1`, `N(n) = Σ_{p | n} N(n / p)`, memoized over the divisors of `n`.
pub fn count_chains_recurrence(n: u64) -> Result<BigUint> {
    let primes: Vec<u64> = Factorization::of(n)?.primes().collect();
    fn count(m: u64, primes: &[u64], memo: &mut HashMap<u64, BigUint>) -> BigUint {
        if m == 1 {
            return BigUint::one();
        }
        if let Some(v) = memo.get(&m) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for &p in primes {
            if m.is_multiple_of(p) {
                total += count(m / p, primes, memo);
            }
        }
        memo.insert(m, total.clone());
        total
    }
    Ok(count(n, &primes, &mut HashMap::new()))
}

/// The multinomial coefficient `(Σaᵢ)! / Π aᵢ!`.
pub fn count_chains_multinomial(f: &Factorization) -> BigUint {
    multinomial(&f.exponents())
}

pub(crate) fn multinomial(exponents: &[u32]) -> BigUint {
    let factorial = |k: u32| (1..=k).fold(BigUint::one(), |acc, i| acc * i);
    let total: u32 = exponents.iter().sum();
    exponents
        .iter()
        .fold(factorial(total), |acc, &a| acc / factorial(a))
}

/// The power hypergraph of ℤₙ predicted from the divisor lattice: one edge
/// per maximal chain, holding the elements whose order lies on the chain.
pub fn predicted_power_hypergraph(n: u64) -> Result<Hypergraph> {
    if n > MAX_PREDICTED_ORDER {
        return Err(NumTheoryError::InputTooLarge { n, limit: MAX_PREDICTED_ORDER });
    }
    let chains = maximal_chains(n)?;
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let orders: Vec<u64> = (0..n).map(|x| n / gcd(x, n)).collect();
    let edges = chains.iter().map(|c| {
        (0..n as usize)
            .filter(|&x| c.steps().binary_search(&orders[x]).is_ok())
            .collect::<Vec<usize>>()
    });
    let labels = (0..n).map(|x| x.to_string()).collect();
    Ok(Hypergraph::new(labels, edges).expect("elements are in range"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmallestN {
    pub n: u64,
    pub factorization: Factorization,
    #[serde(serialize_with = "serialize_big")]
    pub chain_count: BigUint,
}

fn serialize_big<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Least `n ≤ bound` whose divisor lattice has more than `n` maximal chains.
///
/// The chain count depends only on the exponent multiset, and for a fixed
/// multiset the smallest `n` puts the largest exponents on the smallest
/// primes. So only non-increasing exponent tuples on `2, 3, 5, …` are
/// visited, and any tuple whose value passes `bound` is cut.
pub fn smallest_n_exceeding_chain_count(bound: u64) -> Result<Option<SmallestN>> {
    if bound > MAX_SEARCH_BOUND {
        return Err(NumTheoryError::InputTooLarge { n: bound, limit: MAX_SEARCH_BOUND });
    }
    let primes: Vec<u64> = (2u64..).filter(|&p| is_prime(p)).take(16).collect();
    let mut best: Option<(u64, Vec<u32>)> = None;

    fn visit(
        primes: &[u64],
        idx: usize,
        max_exp: u32,
        n: u64,
        bound: u64,
        exps: &mut Vec<u32>,
        best: &mut Option<(u64, Vec<u32>)>,
    ) {
        let Some(&p) = primes.get(idx) else { return };
        let mut value = n;
        for e in 1..=max_exp {
            value = match value.checked_mul(p) {
                Some(v) if v <= bound => v,
                _ => break,
            };
            exps.push(e);
            if best.as_ref().is_none_or(|(b, _)| value < *b)
                && multinomial(exps) > BigUint::from(value)
            {
                *best = Some((value, exps.clone()));
            }
            visit(primes, idx + 1, e, value, bound, exps, best);
            exps.pop();
        }
    }

    visit(&primes, 0, u32::MAX, 1, bound, &mut Vec::new(), &mut best);
    Ok(best.map(|(n, exps)| {
        let factorization = Factorization::new(primes.iter().copied().zip(exps).collect())
            .expect("consecutive primes with positive exponents");
        let chain_count = count_chains_multinomial(&factorization);
        SmallestN { n, factorization, chain_count }
    }))
}

/// Convenience: `N(n)` as a `u64` when it fits.
pub fn chain_count_u64(n: u64) -> Result<Option<u64>> {
    Ok(count_chains_multinomial(&Factorization::of(n)?).to_u64())
}
