//! Hypergraphs of finite groups and semigroups given by Cayley tables:
//! commuting, power, enhanced power, generating and identity hypergraphs,
//! plus the number theory and matroid checks that go with them.

pub mod algebra;
pub mod constructions;
pub mod export;
pub mod hypergraph;
pub mod matroid;
pub mod numtheory;
pub mod verify;

pub use algebra::{Algebra, AlgebraError, AlgebraSpec, CayleyTable, SpecError, Tag};
pub use constructions::{build_hypergraph, ConstructionError, HypergraphKind};
pub use hypergraph::{Graph, HamiltonSearch, Hypergraph, SearchBudget};
pub use matroid::{ExchangeReport, ExchangeWitness, MatroidError};
pub use numtheory::{DivisorChain, Factorization, NumTheoryError};
pub use verify::{TheoremId, TheoremReport, Verdict, VerifyOptions};
