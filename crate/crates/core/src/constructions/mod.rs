//! Graphs and hypergraphs built from an algebra.

mod generating;
mod identity;
mod rho;

pub use generating::{generating_hypergraph, GENERATING_LIMIT};
pub use identity::{identity_hypergraph, IdentityMode, IDENTITY_LIMIT};
pub use rho::{
    rho_partition, rho_related_direct, verify_component_theorem, verify_degree_not_two,
    ComponentReport, DegreeReport, RhoPartition,
};

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::Algebra;
use crate::hypergraph::{maximal_cliques, Graph, Hypergraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{0} hypergraph requires a group")]
    NotAGroup(HypergraphKind),
    #[error(
        "identity hypergraph requires abelian group: otherwise the order in which elements are multiplied matters"
    )]
    NotAbelian,
    #[error("{kind} hypergraph is limited to order {limit} (got {order})")]
    TooLarge { kind: HypergraphKind, order: usize, limit: usize },
    #[error("independent computations disagree: {0}")]
    Disagreement(String),
}

pub type Result<T> = std::result::Result<T, ConstructionError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HypergraphKind {
    Commuting,
    Power,
    #[serde(rename = "epower")]
    EPower,
    Generating,
    IdentityMax,
    IdentityMin,
}

impl HypergraphKind {
    pub const ALL: [HypergraphKind; 6] = [
        HypergraphKind::Commuting,
        HypergraphKind::Power,
        HypergraphKind::EPower,
        HypergraphKind::Generating,
        HypergraphKind::IdentityMax,
        HypergraphKind::IdentityMin,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            HypergraphKind::Commuting => "commuting",
            HypergraphKind::Power => "power",
            HypergraphKind::EPower => "epower",
            HypergraphKind::Generating => "generating",
            HypergraphKind::IdentityMax => "identity_max",
            HypergraphKind::IdentityMin => "identity_min",
        }
    }
}

impl fmt::Display for HypergraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for HypergraphKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        HypergraphKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown hypergraph kind `{s}`"))
    }
}

/// Builds the hypergraph of the requested kind.
pub fn build_hypergraph(s: &Algebra, kind: HypergraphKind) -> Result<Hypergraph> {
    match kind {
        HypergraphKind::Commuting => Ok(commuting_hypergraph(s)),
        HypergraphKind::Power => Ok(power_hypergraph(s)),
        HypergraphKind::EPower => enhanced_power_hypergraph(s),
        HypergraphKind::Generating => generating_hypergraph(s),
        HypergraphKind::IdentityMax => identity_hypergraph(s, IdentityMode::Maximal),
        HypergraphKind::IdentityMin => identity_hypergraph(s, IdentityMode::Minimal),
    }
}

/// `x ~ y` iff `x ≠ y` and `xy = yx`.
pub fn commuting_graph(s: &Algebra) -> Graph {
    Graph::from_relation(s.labels().to_vec(), |x, y| s.mul(x, y) == s.mul(y, x))
}

/// Maximal pairwise-commuting subsets.
pub fn commuting_hypergraph(s: &Algebra) -> Hypergraph {
    maximal_cliques(&commuting_graph(s))
}

fn power_sets(s: &Algebra) -> Vec<FixedBitSet> {
    (0..s.order())
        .map(|a| {
            let mut set = FixedBitSet::with_capacity(s.order());
            set.extend(s.positive_powers(a));
            set
        })
        .collect()
}

/// `x ~ y` iff `x ≠ y` and one is a positive power of the other.
pub fn power_graph(s: &Algebra) -> Graph {
    let powers = power_sets(s);
    Graph::from_relation(s.labels().to_vec(), |x, y| powers[x].contains(y))
}

pub fn power_hypergraph(s: &Algebra) -> Hypergraph {
    maximal_cliques(&power_graph(s))
}

/// `x ~ y` iff `x ≠ y` and both are positive powers of a common element.
pub fn enhanced_power_graph(s: &Algebra) -> Graph {
    let n = s.order();
    let powers = power_sets(s);
    let mut g = Graph::new(s.labels().to_vec());
    for set in &powers {
        let members: Vec<usize> = set.ones().collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                g.add_edge(a, b);
            }
        }
    }
    debug_assert_eq!(g.vertex_count(), n);
    g
}

/// Maximal cyclic subgroups. Also enumerates maximal cliques of the
/// enhanced power graph and fails if the two families differ.
pub fn enhanced_power_hypergraph(g: &Algebra) -> Result<Hypergraph> {
    let subgroups = g
        .maximal_cyclic_subgroups()
        .map_err(|_| ConstructionError::NotAGroup(HypergraphKind::EPower))?;
    let by_subgroups = Hypergraph::new(g.labels().to_vec(), subgroups).expect("elements in range");
    let by_cliques = maximal_cliques(&enhanced_power_graph(g));
    if by_subgroups != by_cliques {
        return Err(ConstructionError::Disagreement(format!(
            "{}: maximal cyclic subgroups differ from enhanced power graph cliques",
            g.name()
        )));
    }
    Ok(by_subgroups)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpowerProbe {
    pub hypergraph: Hypergraph,
    /// Whether every edge is itself a cyclic subsemigroup `{c, c², …}`.
    pub all_edges_cyclic: bool,
}

/// Maximal sets in which every pair lies in a common cyclic subsemigroup,
/// with a flag recording whether each such set is itself cyclic.
pub fn epower_pairwise_probe(s: &Algebra) -> EpowerProbe {
    let hypergraph = maximal_cliques(&enhanced_power_graph(s));
    let all_edges_cyclic = hypergraph.edges().iter().all(|edge| {
        edge.iter().any(|&c| {
            let mut powers = s.positive_powers(c);
            powers.sort_unstable();
            &powers == edge
        })
    });
    EpowerProbe { hypergraph, all_edges_cyclic }
}
