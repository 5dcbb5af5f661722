use std::collections::BTreeSet;

use serde::Serialize;

use super::{check_exchange_axiom, verify_witness, ExchangeReport, ExchangeWitness, MatroidError, Result};
use crate::algebra::Algebra;
use crate::constructions::generating_hypergraph;

/// Largest ground set [`match_model`] will search bijections over.
pub const MAX_MATCH_GROUND: usize = 9;

/// A uniform matroid `U_{k,m}` optionally extended by loops and by
/// replacing elements with parallel classes.
///
/// Ground layout: `0..m` are the uniform elements, then the extra members
/// of each parallel class in the order they were added, then the loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidModel {
    k: usize,
    m: usize,
    parallel: Vec<(usize, usize)>,
    loops: usize,
}

impl MatroidModel {
    pub fn uniform(k: usize, m: usize) -> Self {
        MatroidModel { k, m, parallel: Vec::new(), loops: 0 }
    }

    pub fn with_loops(mut self, loops: usize) -> Self {
        self.loops += loops;
        self
    }

    /// Replaces `element` by a parallel class of `class_size` elements.
    pub fn with_parallel(mut self, element: usize, class_size: usize) -> Self {
        self.parallel.push((element, class_size.saturating_sub(1)));
        self
    }

    pub fn ground_size(&self) -> usize {
        self.m + self.parallel.iter().map(|&(_, extra)| extra).sum::<usize>() + self.loops
    }

    pub fn loops(&self) -> Vec<usize> {
        (self.ground_size() - self.loops..self.ground_size()).collect()
    }

    /// Members of each uniform element's parallel class.
    fn classes(&self) -> Result<Vec<Vec<usize>>> {
        if self.k > self.m {
            return Err(MatroidError::RankTooLarge { k: self.k, m: self.m });
        }
        let mut classes: Vec<Vec<usize>> = (0..self.m).map(|x| vec![x]).collect();
        let mut next = self.m;
        for &(element, extra) in &self.parallel {
            let class = classes
                .get_mut(element)
                .ok_or(MatroidError::NoSuchElement { element, m: self.m })?;
            class.extend(next..next + extra);
            next += extra;
        }
        Ok(classes)
    }

    pub fn parallel_classes(&self) -> Result<Vec<Vec<usize>>> {
        Ok(self.classes()?.into_iter().filter(|c| c.len() > 1).collect())
    }

    /// The basis family, sorted.
    pub fn bases(&self) -> Result<Vec<Vec<usize>>> {
        let classes = self.classes()?;
        let mut out = BTreeSet::new();
        let mut pick = Vec::new();
        choose(&classes, self.k, 0, &mut pick, &mut out);
        Ok(out.into_iter().collect())
    }
}

fn choose(classes: &[Vec<usize>], k: usize, from: usize, pick: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
    if pick.len() == k {
        let mut b = pick.clone();
        b.sort_unstable();
        out.insert(b);
        return;
    }
    for c in from..classes.len() {
        for &x in &classes[c] {
            pick.push(x);
            choose(classes, k, c + 1, pick, out);
            pick.pop();
        }
    }
}

/// `U_{2,4}` with one loop added and one element doubled.
pub fn s3_reference_model() -> MatroidModel {
    MatroidModel::uniform(2, 4).with_parallel(0, 2).with_loops(1)
}

/// A bijection `π` on `0..n` with `{π(E) : E ∈ family} = target`, found by
/// trying permutations in lexicographic order.
pub fn match_model(family: &[Vec<usize>], target: &[Vec<usize>], n: usize) -> Result<Option<Vec<usize>>> {
    if n > MAX_MATCH_GROUND {
        return Err(MatroidError::GroundTooLarge(n));
    }
    let target: BTreeSet<Vec<usize>> = target.iter().cloned().collect();
    if family.len() != target.len() {
        return Ok(None);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mapped: BTreeSet<Vec<usize>> = family
            .iter()
            .map(|e| {
                let mut m: Vec<usize> = e.iter().map(|&x| perm[x]).collect();
                m.sort_unstable();
                m
            })
            .collect();
        if mapped == target {
            return Ok(Some(perm));
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct S3ModelMatch {
    pub matched: bool,
    pub edges: usize,
    pub model_bases: usize,
    pub model_exchange_holds: bool,
    /// Element index to model ground element.
    pub bijection: Option<Vec<usize>>,
    /// Under the bijection, the loop is the identity and the parallel pair
    /// is the set of elements of order 3.
    pub roles_respected: bool,
}

/// Matches the generating hypergraph of `g` against [`s3_reference_model`].
pub fn match_s3_model(g: &Algebra) -> Result<S3ModelMatch> {
    let model = s3_reference_model();
    let bases = model.bases()?;
    let model_exchange_holds = check_exchange_axiom(&bases)?.holds;
    let gen = generating_hypergraph(g)?;
    let bijection = if g.order() == model.ground_size() {
        match_model(gen.edges(), &bases, g.order())?
    } else {
        None
    };
    let roles_respected = bijection.as_ref().is_some_and(|pi| {
        let loops = model.loops();
        let parallel = &model.parallel_classes().expect("valid model")[0];
        let identity_ok = g.identity().is_some_and(|e| loops.contains(&pi[e]));
        let order_three: Vec<usize> = (0..g.order())
            .filter(|&x| g.element_order(x).ok() == Some(3))
            .map(|x| pi[x])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        identity_ok && &order_three == parallel
    });
    Ok(S3ModelMatch {
        matched: bijection.is_some(),
        edges: gen.edge_count(),
        model_bases: bases.len(),
        model_exchange_holds,
        bijection,
        roles_respected,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Z6Z6Report {
    pub edges: usize,
    pub report: ExchangeReport,
    /// `A = {(5,0),(0,5)}`, `B = {(2,3),(3,2)}`, `b = (2,3)`.
    pub known_witness: ExchangeWitness,
    pub known_witness_labels: [Vec<String>; 2],
    pub known_witness_valid: bool,
    pub min_size: usize,
    pub min_size_edges: usize,
    pub min_size_report: ExchangeReport,
    pub min_size_witness_valid: bool,
    /// Exchange fails on both families and the known witness checks out.
    pub counterexample_confirmed: bool,
}

pub fn z6z6_counterexample() -> Result<Z6Z6Report> {
    let g = Algebra::from_spec("product:(cyclic:6),(cyclic:6)")?;
    let gen = generating_hypergraph(&g)?;
    let report = check_exchange_axiom(gen.edges())?;
    let el = |l: &str| g.element(l).expect("label of ℤ₆×ℤ₆");
    let mut a = vec![el("(5,0)"), el("(0,5)")];
    let mut b = vec![el("(2,3)"), el("(3,2)")];
    a.sort_unstable();
    b.sort_unstable();
    let known_witness = ExchangeWitness { a, b, element: el("(2,3)") };
    let known_witness_valid = verify_witness(gen.edges(), &known_witness);

    let min_size = gen.edges().iter().map(Vec::len).min().unwrap_or(0);
    let small: Vec<Vec<usize>> = gen.edges().iter().filter(|e| e.len() == min_size).cloned().collect();
    let min_size_report = check_exchange_axiom(&small)?;
    let min_size_witness_valid = verify_witness(&small, &known_witness);
    let labels = |s: &[usize]| s.iter().map(|&x| g.label(x).to_string()).collect();
    Ok(Z6Z6Report {
        edges: gen.edge_count(),
        counterexample_confirmed: !report.holds
            && known_witness_valid
            && !min_size_report.holds
            && min_size_witness_valid,
        known_witness_labels: [labels(&known_witness.a), labels(&known_witness.b)],
        report,
        known_witness,
        known_witness_valid,
        min_size,
        min_size_edges: small.len(),
        min_size_report,
        min_size_witness_valid,
    })
}
