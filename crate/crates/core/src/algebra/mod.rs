//! Finite semigroups, monoids and groups stored as full Cayley tables.
//!
//! Every algebra is materialized: elements are indices `0..order`, the
//! operation is a table lookup, and each element carries a display label.
//! The algebraic kind (semigroup, monoid or group) is always derived from
//! the table itself rather than trusted from the constructor.

mod named;
mod spec;

pub use named::{
    cyclic, dihedral, elementary_abelian, full_transformation, klein, multiplicative_mod,
    quaternion, symmetric,
};
pub use spec::{AlgebraSpec, SpecError};

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

/// Largest order any constructor will materialize.
pub const MAX_ORDER: usize = 1024;

/// Tables up to this order get an exhaustive associativity check; larger
/// tables are sampled with a fixed seed.
pub const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 64;
const ASSOCIATIVITY_SAMPLES: usize = 200_000;
const ASSOCIATIVITY_SEED: u64 = 0x5eed_ca11;

/// Subgroup lattices are only enumerated up to this order.
pub const SUBGROUP_ENUMERATION_LIMIT: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("an algebra needs at least one element")]
    Empty,
    #[error("order {order} exceeds the limit of {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("table has {found} entries, expected {expected}")]
    BadShape { expected: usize, found: usize },
    #[error("table entry {value} at ({row}, {col}) is not an element index")]
    EntryOutOfRange { row: usize, col: usize, value: usize },
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("operation is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element index {0} is out of range")]
    NoSuchElement(usize),
    #[error("{0} requires a group")]
    NotAGroup(&'static str),
    #[error("a^0 is undefined in a semigroup without identity")]
    ZeroPowerWithoutIdentity,
    #[error("subset is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("Frattini subgroup is only computed for p-groups above order {SUBGROUP_ENUMERATION_LIMIT} (order {0})")]
    FrattiniUnavailable(usize),
    #[error("maximal-subgroup and p-power/commutator Frattini computations disagree")]
    FrattiniMismatch,
    #[error(transparent)]
    Spec(#[from] SpecError),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

/// Weakest structure the table satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Semigroup,
    Monoid,
    Group,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tag::Semigroup => "semigroup",
            Tag::Monoid => "monoid",
            Tag::Group => "group",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraKind {
    pub tag: Tag,
    pub identity: Option<usize>,
    pub inverses: Option<Vec<usize>>,
}

/// An `order × order` multiplication table over element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<u32>,
    labels: Vec<String>,
}

impl CayleyTable {
    /// Validates shape, entry range, label distinctness and associativity.
    pub fn new(labels: Vec<String>, entries: Vec<usize>) -> Result<Self> {
        let table = Self::validated(labels, entries)?;
        table.check_associativity()?;
        Ok(table)
    }

    /// Shape, range and label checks only.
    fn validated(labels: Vec<String>, entries: Vec<usize>) -> Result<Self> {
        let order = labels.len();
        if order == 0 {
            return Err(AlgebraError::Empty);
        }
        if order > MAX_ORDER {
            return Err(AlgebraError::TooLarge { order, limit: MAX_ORDER });
        }
        if entries.len() != order * order {
            return Err(AlgebraError::BadShape {
                expected: order * order,
                found: entries.len(),
            });
        }
        if let Some(pos) = entries.iter().position(|&v| v >= order) {
            return Err(AlgebraError::EntryOutOfRange {
                row: pos / order,
                col: pos % order,
                value: entries[pos],
            });
        }
        let mut seen = HashSet::with_capacity(order);
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(AlgebraError::DuplicateLabel(label.clone()));
            }
        }
        let table = CayleyTable {
            order,
            entries: entries.into_iter().map(|v| v as u32).collect(),
            labels,
        };
        Ok(table)
    }

    pub fn from_fn(labels: Vec<String>, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = labels.len();
        let entries = (0..n * n).map(|i| op(i / n, i % n)).collect();
        Self::new(labels, entries)
    }

    /// For operations associative by construction (modular arithmetic,
    /// composition, products of associative tables); skips the check.
    pub(crate) fn from_fn_trusted(labels: Vec<String>, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = labels.len();
        let entries = (0..n * n).map(|i| op(i / n, i % n)).collect();
        Self::validated(labels, entries)
    }

    /// Exhaustive up to [`EXHAUSTIVE_ASSOCIATIVITY_LIMIT`], seeded sampling above.
    pub fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let check = |a: usize, b: usize, c: usize| {
            if self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)) {
                Ok(())
            } else {
                Err(AlgebraError::NotAssociative { a, b, c })
            }
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(ASSOCIATIVITY_SEED);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.order + b] as usize
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// A finite algebra: a Cayley table plus its derived kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    name: String,
    table: CayleyTable,
    kind: AlgebraKind,
}

/// A quotient group together with the projection onto cosets.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: Algebra,
    /// `projection[g]` is the coset index of `g`.
    pub projection: Vec<usize>,
}

/// Two-sided zero and the pairs of non-zero elements multiplying to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDivisors {
    pub zero: usize,
    pub pairs: Vec<(usize, usize)>,
}

impl Algebra {
    pub fn new(name: impl Into<String>, table: CayleyTable) -> Self {
        let kind = classify(&table);
        Algebra { name: name.into(), table, kind }
    }

    pub fn from_spec(spec: &str) -> Result<Self> {
        spec.parse::<AlgebraSpec>()?.build()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn tag(&self) -> Tag {
        self.kind.tag
    }

    pub fn is_group(&self) -> bool {
        self.kind.tag == Tag::Group
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.table.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.mul(a, b)
    }

    pub fn label(&self, a: usize) -> &str {
        self.table.label(a)
    }

    pub fn labels(&self) -> &[String] {
        self.table.labels()
    }

    pub fn element(&self, label: &str) -> Option<usize> {
        self.table.labels.iter().position(|l| l == label)
    }

    pub fn identity(&self) -> Option<usize> {
        self.kind.identity
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.kind.inverses.as_ref().map(|inv| inv[a])
    }

    fn require_group(&self, operation: &'static str) -> Result<usize> {
        match (self.kind.tag, self.kind.identity) {
            (Tag::Group, Some(e)) => Ok(e),
            _ => Err(AlgebraError::NotAGroup(operation)),
        }
    }

    fn check_element(&self, a: usize) -> Result<()> {
        if a < self.order() {
            Ok(())
        } else {
            Err(AlgebraError::NoSuchElement(a))
        }
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Componentwise product; labels are `(x,y)` and the index of
    /// `(x, y)` is `x * |b| + y`.
    pub fn direct_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
        let (na, nb) = (a.order(), b.order());
        let order = na * nb;
        if order > MAX_ORDER {
            return Err(AlgebraError::TooLarge { order, limit: MAX_ORDER });
        }
        let labels = (0..order)
            .map(|i| format!("({},{})", a.label(i / nb), b.label(i % nb)))
            .collect();
        let table = CayleyTable::from_fn_trusted(labels, |x, y| {
            a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)
        })?;
        Ok(Algebra::new(format!("product:({}),({})", a.name, b.name), table))
    }

    /// `a^m` for `m ≥ 1` by square-and-multiply; `m = 0` gives the identity
    /// when one exists.
    pub fn power(&self, a: usize, m: u64) -> Result<usize> {
        self.check_element(a)?;
        if m == 0 {
            return self.identity().ok_or(AlgebraError::ZeroPowerWithoutIdentity);
        }
        let mut result = None;
        let mut base = a;
        let mut exp = m;
        loop {
            if exp & 1 == 1 {
                result = Some(match result {
                    None => base,
                    Some(r) => self.mul(r, base),
                });
            }
            exp >>= 1;
            if exp == 0 {
                break;
            }
            base = self.mul(base, base);
        }
        Ok(result.expect("m >= 1"))
    }

    /// The distinct positive powers `a, a², a³, …` in order of first appearance.
    pub fn positive_powers(&self, a: usize) -> Vec<usize> {
        let mut seen = FixedBitSet::with_capacity(self.order());
        let mut out = Vec::new();
        let mut x = a;
        while !seen.contains(x) {
            seen.insert(x);
            out.push(x);
            x = self.mul(x, a);
        }
        out
    }

    /// Least `m ≥ 1` with `a^m = e`.
    pub fn element_order(&self, a: usize) -> Result<usize> {
        let e = self.require_group("element order")?;
        self.check_element(a)?;
        let mut x = a;
        let mut m = 1;
        while x != e {
            x = self.mul(x, a);
            m += 1;
        }
        Ok(m)
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order()).filter(|&x| self.mul(x, x) == x).collect()
    }

    /// The unique idempotent among the positive powers of `a`.
    pub fn eventual_idempotent(&self, a: usize) -> usize {
        let powers = self.positive_powers(a);
        let mut found = powers.iter().copied().filter(|&x| self.mul(x, x) == x);
        let e = found.next().expect("finite cyclic subsemigroup has an idempotent");
        debug_assert!(found.next().is_none(), "cyclic subsemigroup with two idempotents");
        e
    }

    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        (0..self.order())
            .filter(|&x| self.mul(x, a) == self.mul(a, x))
            .collect()
    }

    pub fn is_abelian_subset(&self, xs: &[usize]) -> bool {
        xs.iter()
            .enumerate()
            .all(|(i, &a)| xs[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Substructure generated by `gens`, as a bitset. The identity is
    /// included for monoids and groups, so the closure of `∅` is `{e}` there
    /// and `∅` for plain semigroups.
    pub fn closure_set(&self, gens: &[usize]) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.order());
        let mut queue = VecDeque::new();
        if let Some(e) = self.identity() {
            set.insert(e);
        }
        for &g in gens {
            if !set.contains(g) {
                set.insert(g);
                queue.push_back(g);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.contains(y) {
                    set.insert(y);
                    queue.push_back(y);
                }
            }
        }
        set
    }

    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        self.closure_set(gens).ones().collect()
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        self.closure_set(gens).count_ones(..) == self.order()
    }

    pub fn is_subgroup(&self, xs: &[usize]) -> bool {
        let Some(e) = self.identity() else {
            return false;
        };
        if !self.is_group() || xs.is_empty() {
            return false;
        }
        let mut set = FixedBitSet::with_capacity(self.order());
        set.extend(xs.iter().copied());
        set.contains(e)
            && xs.iter().all(|&a| {
                set.contains(self.inverse(a).expect("group"))
                    && xs.iter().all(|&b| set.contains(self.mul(a, b)))
            })
    }

    /// The ⊆-maximal cyclic subgroups, each sorted; the family is sorted.
    pub fn maximal_cyclic_subgroups(&self) -> Result<Vec<Vec<usize>>> {
        self.require_group("maximal cyclic subgroups")?;
        let cyclic: Vec<FixedBitSet> = (0..self.order())
            .map(|a| {
                let mut s = FixedBitSet::with_capacity(self.order());
                s.extend(self.positive_powers(a));
                s
            })
            .collect();
        Ok(maximal_members(cyclic))
    }

    /// Every subgroup, as bitsets. Only available up to
    /// [`SUBGROUP_ENUMERATION_LIMIT`].
    pub fn subgroups(&self) -> Result<Vec<FixedBitSet>> {
        let e = self.require_group("subgroup enumeration")?;
        let n = self.order();
        if n > SUBGROUP_ENUMERATION_LIMIT {
            return Err(AlgebraError::TooLarge { order: n, limit: SUBGROUP_ENUMERATION_LIMIT });
        }
        let mut trivial = FixedBitSet::with_capacity(n);
        trivial.insert(e);
        // Each subgroup remembers a small generating set so that joins stay cheap.
        let mut known: HashMap<FixedBitSet, Vec<usize>> = HashMap::new();
        known.insert(trivial.clone(), Vec::new());
        let mut frontier = vec![trivial];
        while let Some(h) = frontier.pop() {
            let gens = known[&h].clone();
            for g in 0..n {
                if h.contains(g) {
                    continue;
                }
                let mut next_gens = gens.clone();
                next_gens.push(g);
                let k = self.closure_set(&next_gens);
                if !known.contains_key(&k) {
                    known.insert(k.clone(), next_gens);
                    frontier.push(k);
                }
            }
        }
        let mut out: Vec<FixedBitSet> = known.into_keys().collect();
        out.sort_by(|a, b| {
            a.count_ones(..)
                .cmp(&b.count_ones(..))
                .then_with(|| a.ones().cmp(b.ones()))
        });
        Ok(out)
    }

    pub fn maximal_subgroups(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.order();
        let proper: Vec<FixedBitSet> = self
            .subgroups()?
            .into_iter()
            .filter(|s| s.count_ones(..) < n)
            .collect();
        Ok(maximal_members(proper))
    }

    /// `(p, k)` when the order is `p^k` with `k ≥ 1`.
    pub fn prime_power_order(&self) -> Option<(usize, u32)> {
        let n = self.order();
        if n < 2 {
            return None;
        }
        let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
        let mut m = n;
        let mut k = 0;
        while m.is_multiple_of(p) {
            m /= p;
            k += 1;
        }
        (m == 1).then_some((p, k))
    }

    /// Intersection of the maximal subgroups. For p-groups this is also
    /// computed as the subgroup generated by p-th powers and commutators,
    /// and the two are required to agree. The trivial group has no proper
    /// subgroups; its Frattini subgroup is `{e}`.
    pub fn frattini_subgroup(&self) -> Result<Vec<usize>> {
        let e = self.require_group("Frattini subgroup")?;
        let n = self.order();
        let by_intersection = if n <= SUBGROUP_ENUMERATION_LIMIT {
            let maximal = self.maximal_subgroups()?;
            Some(if maximal.is_empty() {
                vec![e]
            } else {
                (0..n)
                    .filter(|x| maximal.iter().all(|m| m.binary_search(x).is_ok()))
                    .collect()
            })
        } else {
            None
        };
        let by_formula = self.prime_power_order().map(|(p, _)| {
            let mut gens: Vec<usize> = (0..n)
                .map(|g| self.power(g, p as u64).expect("p >= 1"))
                .collect();
            for a in 0..n {
                for b in 0..n {
                    gens.push(self.commutator(a, b));
                }
            }
            gens.sort_unstable();
            gens.dedup();
            self.closure(&gens)
        });
        match (by_intersection, by_formula) {
            (Some(a), Some(b)) if a != b => Err(AlgebraError::FrattiniMismatch),
            (Some(a), _) => Ok(a),
            (None, Some(b)) => Ok(b),
            (None, None) => Err(AlgebraError::FrattiniUnavailable(n)),
        }
    }

    /// `a⁻¹ b⁻¹ a b`; groups only.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ai = self.inverse(a).expect("commutator requires a group");
        let bi = self.inverse(b).expect("commutator requires a group");
        self.mul(self.mul(ai, bi), self.mul(a, b))
    }

    pub fn is_normal_subgroup(&self, xs: &[usize]) -> bool {
        if !self.is_subgroup(xs) {
            return false;
        }
        let mut set = FixedBitSet::with_capacity(self.order());
        set.extend(xs.iter().copied());
        (0..self.order()).all(|g| {
            let gi = self.inverse(g).expect("group");
            xs.iter().all(|&h| set.contains(self.mul(self.mul(g, h), gi)))
        })
    }

    /// `G/N` with cosets numbered by their least element. Coset labels are
    /// `[rep]` where `rep` is that least element's label.
    pub fn quotient(&self, normal: &[usize]) -> Result<Quotient> {
        self.require_group("quotient")?;
        if !self.is_subgroup(normal) {
            return Err(AlgebraError::NotASubgroup);
        }
        if !self.is_normal_subgroup(normal) {
            return Err(AlgebraError::NotNormal);
        }
        let n = self.order();
        let mut projection = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if projection[g] != usize::MAX {
                continue;
            }
            for &h in normal {
                projection[self.mul(g, h)] = reps.len();
            }
            reps.push(g);
        }
        let labels = reps.iter().map(|&r| format!("[{}]", self.label(r))).collect();
        let table = CayleyTable::from_fn(labels, |x, y| projection[self.mul(reps[x], reps[y])])?;
        let group = Algebra::new(format!("{}/N", self.name), table);
        Ok(Quotient { group, projection })
    }

    /// Locates a two-sided zero and the pairs `(a, b)` of non-zero elements
    /// with `ab = 0`.
    pub fn zero_and_zero_divisors(&self) -> Option<ZeroDivisors> {
        let n = self.order();
        let zero = (0..n).find(|&z| (0..n).all(|a| self.mul(a, z) == z && self.mul(z, a) == z))?;
        if n == 1 {
            // The trivial algebra's only element is its identity, not a zero.
            return None;
        }
        let pairs = (0..n)
            .filter(|&a| a != zero)
            .flat_map(|a| (0..n).filter(move |&b| b != zero).map(move |b| (a, b)))
            .filter(|&(a, b)| self.mul(a, b) == zero)
            .collect();
        Some(ZeroDivisors { zero, pairs })
    }
}

fn classify(table: &CayleyTable) -> AlgebraKind {
    let n = table.order();
    let identity =
        (0..n).find(|&e| (0..n).all(|a| table.mul(e, a) == a && table.mul(a, e) == a));
    let Some(e) = identity else {
        return AlgebraKind { tag: Tag::Semigroup, identity: None, inverses: None };
    };
    let inverses: Option<Vec<usize>> = (0..n)
        .map(|a| (0..n).find(|&b| table.mul(a, b) == e && table.mul(b, a) == e))
        .collect();
    match inverses {
        Some(inv) => AlgebraKind { tag: Tag::Group, identity: Some(e), inverses: Some(inv) },
        None => AlgebraKind { tag: Tag::Monoid, identity: Some(e), inverses: None },
    }
}

/// Keeps the ⊆-maximal members of a family of sets, deduplicated and
/// returned as sorted index lists in lexicographic order.
pub(crate) fn maximal_members(mut sets: Vec<FixedBitSet>) -> Vec<Vec<usize>> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.count_ones(..)));
    let mut kept: Vec<FixedBitSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    let mut out: Vec<Vec<usize>> = kept.into_iter().map(|s| s.ones().collect()).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(spec: &str) -> Algebra {
        Algebra::from_spec(spec).unwrap()
    }

    fn labels_of(g: &Algebra, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| g.label(x).to_string()).collect()
    }

    fn elems(g: &Algebra, labels: &[&str]) -> Vec<usize> {
        let mut v: Vec<usize> = labels.iter().map(|l| g.element(l).unwrap()).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn cyclic_basics() {
        let z1 = alg("cyclic:1");
        assert_eq!(z1.order(), 1);
        assert!(z1.is_group());
        let z6 = alg("cyclic:6");
        assert_eq!(z6.element_order(2).unwrap(), 3);
        assert_eq!(z6.power(2, 3).unwrap(), 0);
        let z12 = alg("cyclic:12");
        assert_eq!(z12.element_order(8).unwrap(), 3);
        assert_eq!(z12.element_order(0).unwrap(), 1);
        let order_six = (0..12).filter(|&a| z12.element_order(a).unwrap() == 6).count();
        assert_eq!(order_six, 2);
    }

    #[test]
    fn power_matches_naive_product() {
        let m = alg("multmod:10");
        assert_eq!(m.power(2, 4).unwrap(), 6);
        for a in 0..10 {
            assert_eq!(m.power(a, 1).unwrap(), a);
            let mut naive = a;
            for k in 2..40u64 {
                naive = m.mul(naive, a);
                assert_eq!(m.power(a, k).unwrap(), naive);
            }
        }
    }

    #[test]
    fn zero_power_needs_identity() {
        let m = alg("multmod:10");
        assert_eq!(m.power(3, 0).unwrap(), 1);
        // Left-zero semigroup {a, b}: xy = x. No identity.
        let t = CayleyTable::from_fn(vec!["a".into(), "b".into()], |x, _| x).unwrap();
        let s = Algebra::new("leftzero", t);
        assert_eq!(s.tag(), Tag::Semigroup);
        assert_eq!(s.power(1, 0), Err(AlgebraError::ZeroPowerWithoutIdentity));
    }

    #[test]
    fn rejects_bad_tables() {
        let labels = vec!["a".to_string(), "b".to_string()];
        assert!(matches!(
            CayleyTable::new(labels.clone(), vec![0, 1, 1]),
            Err(AlgebraError::BadShape { .. })
        ));
        assert!(matches!(
            CayleyTable::new(labels.clone(), vec![0, 1, 1, 2]),
            Err(AlgebraError::EntryOutOfRange { value: 2, .. })
        ));
        assert!(matches!(
            CayleyTable::new(vec!["a".into(), "a".into()], vec![0, 1, 1, 0]),
            Err(AlgebraError::DuplicateLabel(_))
        ));
        // x*y = 1 - x is not associative.
        assert!(matches!(
            CayleyTable::from_fn(labels, |x, _| 1 - x),
            Err(AlgebraError::NotAssociative { .. })
        ));
    }

    #[test]
    fn idempotents_and_eventual_idempotents() {
        let m = alg("multmod:10");
        assert_eq!(m.idempotents(), vec![0, 1, 5, 6]);
        assert_eq!(m.eventual_idempotent(2), 6);
        for e in m.idempotents() {
            assert_eq!(m.eventual_idempotent(e), e);
        }
        let t2 = alg("fulltrans:2");
        assert_eq!(t2.idempotents().len(), 3);
        let q = alg("quaternion");
        assert_eq!(q.idempotents(), vec![q.identity().unwrap()]);
        for a in 0..8 {
            assert_eq!(q.eventual_idempotent(a), q.identity().unwrap());
        }
    }

    #[test]
    fn quaternion_centralizers() {
        let q = alg("quaternion");
        let i = q.element("i").unwrap();
        assert_eq!(labels_of(&q, &q.centralizer(i)), ["1", "-1", "i", "-i"]);
        assert_eq!(q.centralizer(q.element("-1").unwrap()).len(), 8);
        assert!(!q.is_abelian_subset(&elems(&q, &["i", "j"])));
        assert!(q.is_abelian_subset(&elems(&q, &["1", "-1", "i", "-i"])));
        assert!(q.is_abelian_subset(&[3]));
        let z5 = alg("cyclic:5");
        assert_eq!(z5.centralizer(2).len(), 5);
    }

    #[test]
    fn closures() {
        let s3 = alg("sym:3");
        assert!(s3.generates(&elems(&s3, &["(1 2)", "(1 2 3)"])));
        let z6 = alg("cyclic:6");
        assert_eq!(z6.closure(&[0]), vec![0]);
        assert_eq!(z6.closure(&[]), vec![0]);
        let g = alg("product:(cyclic:6),(cyclic:6)");
        let sub = g.closure(&elems(&g, &["(5,0)", "(2,3)"]));
        assert_eq!(sub.len(), 12);
        assert!(!sub.contains(&g.element("(0,2)").unwrap()));
        let t = CayleyTable::from_fn(vec!["a".into(), "b".into()], |x, _| x).unwrap();
        assert!(Algebra::new("leftzero", t).closure(&[]).is_empty());
    }

    #[test]
    fn maximal_cyclic_subgroup_examples() {
        let z9 = alg("cyclic:9");
        assert_eq!(z9.maximal_cyclic_subgroups().unwrap(), vec![(0..9).collect::<Vec<_>>()]);
        let q = alg("quaternion");
        let mc = q.maximal_cyclic_subgroups().unwrap();
        assert_eq!(mc.len(), 3);
        assert!(mc.iter().all(|c| c.len() == 4));
        let k = alg("klein");
        assert_eq!(k.maximal_cyclic_subgroups().unwrap(), vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
        assert!(alg("multmod:5").maximal_cyclic_subgroups().is_err());
    }

    #[test]
    fn frattini_examples() {
        let g = alg("product:(cyclic:4),(cyclic:2)");
        assert_eq!(labels_of(&g, &g.frattini_subgroup().unwrap()), ["(0,0)", "(2,0)"]);
        assert_eq!(g.maximal_subgroups().unwrap().len(), 3);
        let e = alg("elemab:2:3");
        assert_eq!(e.frattini_subgroup().unwrap(), vec![0]);
        let z9 = alg("cyclic:9");
        assert_eq!(z9.frattini_subgroup().unwrap(), vec![0, 3, 6]);
        let q = alg("quaternion");
        assert_eq!(labels_of(&q, &q.frattini_subgroup().unwrap()), ["1", "-1"]);
        assert_eq!(alg("cyclic:1").frattini_subgroup().unwrap(), vec![0]);
        // Φ(ℤ₆) is trivial; not a p-group, so only the intersection route runs.
        assert_eq!(alg("cyclic:6").frattini_subgroup().unwrap(), vec![0]);
    }

    #[test]
    fn quotients() {
        let g = alg("product:(cyclic:4),(cyclic:2)");
        let phi = g.frattini_subgroup().unwrap();
        let q = g.quotient(&phi).unwrap();
        assert_eq!(q.group.order(), 4);
        assert!(q.group.is_group());
        assert!((0..4).all(|x| q.group.power(x, 2).unwrap() == q.group.identity().unwrap()));
        let s3 = alg("sym:3");
        let same = s3.quotient(&[s3.identity().unwrap()]).unwrap();
        assert_eq!(same.group.order(), 6);
        assert!(!same.group.is_abelian());
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(s3.quotient(&all).unwrap().group.order(), 1);
        let transposition = elems(&s3, &["()", "(1 2)"]);
        assert_eq!(s3.quotient(&transposition).unwrap_err(), AlgebraError::NotNormal);
        assert_eq!(s3.quotient(&[1]).unwrap_err(), AlgebraError::NotASubgroup);
    }

    #[test]
    fn zero_divisor_scan() {
        assert!(alg("quaternion").zero_and_zero_divisors().is_none());
        let m10 = alg("multmod:10").zero_and_zero_divisors().unwrap();
        assert_eq!(m10.zero, 0);
        assert!(m10.pairs.contains(&(2, 5)));
        let m7 = alg("multmod:7").zero_and_zero_divisors().unwrap();
        assert_eq!(m7.zero, 0);
        assert!(m7.pairs.is_empty());
    }

    #[test]
    fn products() {
        let g = alg("product:(cyclic:2),(cyclic:3)");
        assert_eq!(g.order(), 6);
        assert_eq!(g.labels()[..3], ["(0,0)", "(0,1)", "(0,2)"]);
        let mut orders: Vec<usize> = (0..6).map(|a| g.element_order(a).unwrap()).collect();
        let mut z6: Vec<usize> = {
            let z = alg("cyclic:6");
            (0..6).map(|a| z.element_order(a).unwrap()).collect()
        };
        orders.sort_unstable();
        z6.sort_unstable();
        assert_eq!(orders, z6);
        assert_eq!(alg("product:(cyclic:6),(cyclic:6)").order(), 36);

        let s3 = alg("sym:3");
        let t = alg("product:(cyclic:1),(sym:3)");
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(t.mul(a, b), s3.mul(a, b));
            }
        }
        assert_eq!(alg("product:(multmod:4),(cyclic:2)").tag(), Tag::Monoid);
    }

    #[test]
    fn lagrange_and_single_idempotent_across_groups() {
        for spec in ["sym:4", "dihedral:6", "quaternion", "elemab:3:2", "product:(cyclic:4),(klein)"] {
            let g = alg(spec);
            let e = g.identity().unwrap();
            assert_eq!(g.idempotents(), vec![e]);
            for a in 0..g.order() {
                assert_eq!(g.order() % g.element_order(a).unwrap(), 0);
                assert_eq!(g.eventual_idempotent(a), e);
            }
        }
    }

    #[test]
    fn closure_is_idempotent_and_monotone() {
        let g = alg("sym:4");
        let x = vec![1, 7];
        let c = g.closure(&x);
        assert_eq!(g.closure(&c), c);
        let mut bigger = x.clone();
        bigger.push(13);
        let c2 = g.closure_set(&bigger);
        assert!(g.closure_set(&x).is_subset(&c2));
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(alg("cyclic:27").prime_power_order(), Some((3, 3)));
        assert_eq!(alg("cyclic:12").prime_power_order(), None);
        assert_eq!(alg("cyclic:1").prime_power_order(), None);
    }
}
