//! Mechanical checks of the hypergraph theorems over registries of
//! algebras, with per-case verdicts.

mod registry;
mod theorems;

pub use registry::{registry, resolve_registry, REGISTRY_NAMES};

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::hypergraph::SearchBudget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    ComMaximalAbelian,
    ComDegreeNotTwo,
    NbdCoincidence,
    EpowMaximalCyclic,
    PowChainCount,
    PowEdgeSizes,
    PowHamiltonianLoose,
    PowStrictEdgeBound,
    PowComponents,
    PowGroupConnected,
    GenPgroupMatroid,
    GenS3Model,
    GenZ6z6Counterexample,
    IdZ8Fixtures,
    IdInvolutionRemark,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        TheoremId::ComMaximalAbelian,
        TheoremId::ComDegreeNotTwo,
        TheoremId::NbdCoincidence,
        TheoremId::EpowMaximalCyclic,
        TheoremId::PowChainCount,
        TheoremId::PowEdgeSizes,
        TheoremId::PowHamiltonianLoose,
        TheoremId::PowStrictEdgeBound,
        TheoremId::PowComponents,
        TheoremId::PowGroupConnected,
        TheoremId::GenPgroupMatroid,
        TheoremId::GenS3Model,
        TheoremId::GenZ6z6Counterexample,
        TheoremId::IdZ8Fixtures,
        TheoremId::IdInvolutionRemark,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::ComMaximalAbelian => "com-maximal-abelian",
            TheoremId::ComDegreeNotTwo => "com-degree-not-two",
            TheoremId::NbdCoincidence => "nbd-coincidence",
            TheoremId::EpowMaximalCyclic => "epow-maximal-cyclic",
            TheoremId::PowChainCount => "pow-chain-count",
            TheoremId::PowEdgeSizes => "pow-edge-sizes",
            TheoremId::PowHamiltonianLoose => "pow-hamiltonian-loose",
            TheoremId::PowStrictEdgeBound => "pow-strict-edge-bound",
            TheoremId::PowComponents => "pow-components",
            TheoremId::PowGroupConnected => "pow-group-connected",
            TheoremId::GenPgroupMatroid => "gen-pgroup-matroid",
            TheoremId::GenS3Model => "gen-s3-model",
            TheoremId::GenZ6z6Counterexample => "gen-z6z6-counterexample",
            TheoremId::IdZ8Fixtures => "id-z8-fixtures",
            TheoremId::IdInvolutionRemark => "id-involution-remark",
        }
    }

    /// One-line statement of what is checked.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::ComMaximalAbelian => {
                "edges of the commuting hypergraph of a group are its maximal abelian subgroups, each equal to the intersection of its members' centralizers"
            }
            TheoremId::ComDegreeNotTwo => {
                "without zero divisors, no vertex of the commuting hypergraph has degree 2"
            }
            TheoremId::NbdCoincidence => {
                "in a clique hypergraph, every vertex has the same neighbors as in the graph"
            }
            TheoremId::EpowMaximalCyclic => {
                "edges of the enhanced power hypergraph are the maximal cyclic subgroups; one edge iff the group is cyclic"
            }
            TheoremId::PowChainCount => {
                "Pow_H(Z_n) has one edge per maximal divisor chain of n; enumeration, recurrence and multinomial counts agree"
            }
            TheoremId::PowEdgeSizes => {
                "the edge of chain n_0 | ... | n_r has size sum phi(n_i); N(n) = s! for squarefree n and C(a+b, a) for p^a q^b"
            }
            TheoremId::PowHamiltonianLoose => "Pow_H(Z_n) has a loose Hamiltonian cycle for n >= 3",
            TheoremId::PowStrictEdgeBound => {
                "a strict Hamiltonian cycle needs as many edges as vertices, so Pow_H(Z_n) has none when N(n) < n"
            }
            TheoremId::PowComponents => {
                "components of the power hypergraph are the rho-classes, one per idempotent"
            }
            TheoremId::PowGroupConnected => "the power hypergraph of a group is connected",
            TheoremId::GenPgroupMatroid => {
                "the generating hypergraph of a p-group is the basis family of a matroid, via G/Phi(G)"
            }
            TheoremId::GenS3Model => {
                "Gen_H(S_3) is U_{2,4} with a loop added and one element doubled"
            }
            TheoremId::GenZ6z6Counterexample => {
                "Gen_H(Z_6 x Z_6) violates the exchange axiom (expected failure)"
            }
            TheoremId::IdZ8Fixtures => "maximal and minimal identity hypergraphs of Z_8",
            TheoremId::IdInvolutionRemark => {
                "the maximal identity hypergraph is the single edge G unless G has exactly one involution"
            }
        }
    }

    /// Whether the procedure is expected to refute its claim.
    pub fn expectation(self) -> Expectation {
        match self {
            TheoremId::GenZ6z6Counterexample => Expectation::Refuted,
            _ => Expectation::Holds,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown theorem id `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    Holds,
    /// The claim is a counterexample: the check passes when the property
    /// fails with a verified witness.
    Refuted,
}

/// What a procedure found for one case, before the expectation is applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Holds(String),
    /// The property fails, with a witness that has been re-checked.
    Refuted(String),
    Inapplicable(String),
    /// The computation itself failed.
    Error(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "skip",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub subject: String,
    pub verdict: Verdict,
    pub detail: String,
}

impl CaseResult {
    fn judge(subject: impl Into<String>, expectation: Expectation, outcome: Outcome) -> Self {
        let (verdict, detail) = match (outcome, expectation) {
            (Outcome::Holds(d), Expectation::Holds) | (Outcome::Refuted(d), Expectation::Refuted) => {
                (Verdict::Pass, d)
            }
            (Outcome::Holds(d), Expectation::Refuted) => (Verdict::Fail, format!("property unexpectedly holds: {d}")),
            (Outcome::Refuted(d), Expectation::Holds) => (Verdict::Fail, d),
            (Outcome::Inapplicable(d), _) => (Verdict::Skip, d),
            (Outcome::Error(d), _) => (Verdict::Fail, format!("error: {d}")),
        };
        CaseResult { subject: subject.into(), verdict, detail }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub statement: &'static str,
    pub expectation: Expectation,
    pub cases: Vec<CaseResult>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.cases.iter().filter(|c| c.verdict == v).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Upper end of the `n` range for the cyclic-group theorems. Each
    /// theorem has its own default.
    pub max_n: Option<u64>,
    pub budget: SearchBudget,
    /// Algebra specs to run on instead of each theorem's default scope.
    pub registry: Option<Vec<String>>,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_n: None, budget: SearchBudget::default(), registry: None, seed: 0x5eed }
    }
}

pub fn verify(theorem: TheoremId, opts: &VerifyOptions) -> TheoremReport {
    let expectation = theorem.expectation();
    let cases = theorems::run(theorem, opts)
        .into_iter()
        .map(|(subject, outcome)| CaseResult::judge(subject, expectation, outcome))
        .collect();
    TheoremReport { theorem, statement: theorem.statement(), expectation, cases }
}

pub fn verify_all(opts: &VerifyOptions) -> Vec<TheoremReport> {
    TheoremId::ALL.iter().map(|&t| verify(t, opts)).collect()
}

/// Runs `check` on every spec in parallel; results keep the input order.
fn per_algebra(specs: &[String], check: impl Fn(&Algebra) -> Outcome + Sync) -> Vec<(String, Outcome)> {
    specs
        .par_iter()
        .map(|spec| {
            let outcome = match Algebra::from_spec(spec) {
                Ok(a) => check(&a),
                Err(e) => Outcome::Error(e.to_string()),
            };
            (spec.clone(), outcome)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
            assert_eq!(serde_json::to_string(&t).unwrap(), format!("\"{}\"", t.as_str()));
        }
        assert!("pow-nothing".parse::<TheoremId>().is_err());
    }

    #[test]
    fn expectation_inverts_explicitly() {
        let pass = CaseResult::judge("x", Expectation::Refuted, Outcome::Refuted("w".into()));
        assert_eq!(pass.verdict, Verdict::Pass);
        let fail = CaseResult::judge("x", Expectation::Refuted, Outcome::Holds("h".into()));
        assert_eq!(fail.verdict, Verdict::Fail);
        let err = CaseResult::judge("x", Expectation::Refuted, Outcome::Error("e".into()));
        assert_eq!(err.verdict, Verdict::Fail);
        let skip = CaseResult::judge("x", Expectation::Holds, Outcome::Inapplicable("n/a".into()));
        assert_eq!(skip.verdict, Verdict::Skip);
    }
}
