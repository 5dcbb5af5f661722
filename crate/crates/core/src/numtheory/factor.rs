use std::fmt;

use serde::Serialize;

use super::{NumTheoryError, Result};

const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

/// Prime factorization as `(prime, exponent)` pairs with strictly
/// increasing primes and positive exponents. The empty list is `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Factorization(Vec<(u64, u32)>);

impl Factorization {
    pub fn new(pairs: Vec<(u64, u32)>) -> Result<Self> {
        for (i, &(p, a)) in pairs.iter().enumerate() {
            if !is_prime(p) {
                return Err(NumTheoryError::InvalidFactorization(format!("{p} is not prime")));
            }
            if a == 0 {
                return Err(NumTheoryError::InvalidFactorization(format!("exponent of {p} is zero")));
            }
            if i > 0 && pairs[i - 1].0 >= p {
                return Err(NumTheoryError::InvalidFactorization("primes must increase".into()));
            }
        }
        Ok(Factorization(pairs))
    }

    /// Trial division up to 10⁶, then Pollard rho on any remaining cofactor.
    pub fn of(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(NumTheoryError::Zero);
        }
        let mut primes = Vec::new();
        let mut m = n;
        let mut d = 2;
        while d <= TRIAL_DIVISION_LIMIT && d * d <= m {
            while m.is_multiple_of(d) {
                primes.push(d);
                m /= d;
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if m > 1 {
            split(m, &mut primes);
        }
        primes.sort_unstable();
        let mut pairs: Vec<(u64, u32)> = Vec::new();
        for p in primes {
            match pairs.last_mut() {
                Some((q, a)) if *q == p => *a += 1,
                _ => pairs.push((p, 1)),
            }
        }
        Ok(Factorization(pairs))
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.0
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().map(|&(p, _)| p)
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.0.iter().map(|&(_, a)| a).collect()
    }

    pub fn total_exponent(&self) -> u32 {
        self.0.iter().map(|&(_, a)| a).sum()
    }

    pub fn value(&self) -> u128 {
        self.0.iter().map(|&(p, a)| u128::from(p).pow(a)).product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&(_, a)| a == 1)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(p, a)| if a == 1 { p.to_string() } else { format!("{p}^{a}") })
            .collect();
        f.write_str(&parts.join("·"))
    }
}

fn split(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    split(d, out);
    split(n / d, out);
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (u128::from(a) * u128::from(b) % u128::from(m)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of the odd composite `n` (Brent's variant).
fn pollard_rho(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2, 2, 1);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!("some constant yields a factor")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_small_and_large() {
        assert_eq!(Factorization::of(1).unwrap().pairs(), &[]);
        assert_eq!(Factorization::of(12).unwrap().pairs(), &[(2, 2), (3, 1)]);
        let big = 326_918_592_000;
        let f = Factorization::of(big).unwrap();
        assert_eq!(f.to_string(), "2^9·3^6·5^3·7^2·11·13");
        assert_eq!(f.value(), big as u128);
        // two primes above the trial-division limit
        let n = 1_000_003u64 * 1_000_033;
        assert_eq!(Factorization::of(n).unwrap().pairs(), &[(1_000_003, 1), (1_000_033, 1)]);
        assert!(Factorization::of(0).is_err());
    }

    #[test]
    fn validates_pairs() {
        assert!(Factorization::new(vec![(2, 1), (3, 2)]).is_ok());
        assert!(Factorization::new(vec![(4, 1)]).is_err());
        assert!(Factorization::new(vec![(3, 1), (2, 1)]).is_err());
        assert!(Factorization::new(vec![(2, 0)]).is_err());
    }

    #[test]
    fn primality_agrees_with_trial_division() {
        let naive = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..20_000 {
            assert_eq!(is_prime(n), naive(n), "{n}");
        }
    }
}
