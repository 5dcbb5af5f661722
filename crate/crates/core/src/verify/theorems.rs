use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{per_algebra, registry, Outcome, TheoremId, VerifyOptions};
use crate::algebra::Algebra;
use crate::constructions::{
    commuting_graph, commuting_hypergraph, enhanced_power_graph, enhanced_power_hypergraph,
    generating_hypergraph, identity_hypergraph, power_graph, power_hypergraph, verify_component_theorem,
    verify_degree_not_two, DegreeReport, IdentityMode,
};
use crate::hypergraph::{
    find_hamiltonian_cycle_loose, find_hamiltonian_cycle_strict, maximal_cliques, neighborhood_coincidence,
    Graph, HamiltonSearch, Hypergraph,
};
use crate::matroid::{burnside_correspondence, is_basis_hypergraph, match_s3_model, z6z6_counterexample};
use crate::numtheory::{
    chain_edge_cardinality, count_chains_multinomial, count_chains_recurrence, maximal_chains,
    predicted_power_hypergraph, Factorization,
};

/// Three-way chain counts are compared for every `n` up to this.
const CHAIN_COUNT_RANGE: u64 = 5000;
const CYCLIC_HYPERGRAPH_RANGE: u64 = 300;
const HAMILTON_RANGE: u64 = 60;
const BRUTE_FORCE_COMMUTING_LIMIT: usize = 16;
const IDENTITY_REMARK_LIMIT: usize = 32;
const RANDOM_GRAPHS: usize = 100;

type Cases = Vec<(String, Outcome)>;

pub(super) fn run(theorem: TheoremId, opts: &VerifyOptions) -> Cases {
    let scope = |default: &str| opts.registry.clone().unwrap_or_else(|| registry(default).expect("known registry"));
    match theorem {
        TheoremId::ComMaximalAbelian => per_algebra(&scope("default"), com_maximal_abelian),
        TheoremId::ComDegreeNotTwo => per_algebra(&scope("default"), com_degree_not_two),
        TheoremId::NbdCoincidence => {
            let mut cases = per_algebra(&scope("default"), nbd_coincidence);
            cases.push(random_graph_coincidence(opts.seed));
            cases
        }
        TheoremId::EpowMaximalCyclic => per_algebra(&scope("default"), epow_maximal_cyclic),
        TheoremId::PowChainCount => pow_chain_count(opts.max_n.unwrap_or(CYCLIC_HYPERGRAPH_RANGE)),
        TheoremId::PowEdgeSizes => pow_edge_sizes(opts.max_n.unwrap_or(CYCLIC_HYPERGRAPH_RANGE)),
        TheoremId::PowHamiltonianLoose => pow_hamiltonian_loose(opts.max_n.unwrap_or(HAMILTON_RANGE), opts),
        TheoremId::PowStrictEdgeBound => pow_strict_edge_bound(opts.max_n.unwrap_or(HAMILTON_RANGE), opts),
        TheoremId::PowComponents => per_algebra(&scope("default"), pow_components),
        TheoremId::PowGroupConnected => per_algebra(&scope("default"), pow_group_connected),
        TheoremId::GenPgroupMatroid => per_algebra(&scope("pgroups"), gen_pgroup_matroid),
        TheoremId::GenS3Model => gen_s3_model(),
        TheoremId::GenZ6z6Counterexample => gen_z6z6(),
        TheoremId::IdZ8Fixtures => id_z8_fixtures(),
        TheoremId::IdInvolutionRemark => per_algebra(&scope("default"), id_involution_remark),
    }
}

fn verdict(ok: bool, holds: impl Into<String>, refuted: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Holds(holds.into())
    } else {
        Outcome::Refuted(refuted())
    }
}

fn labels(g: &Algebra, xs: &[usize]) -> String {
    let inner: Vec<&str> = xs.iter().map(|&x| g.label(x)).collect();
    format!("{{{}}}", inner.join(","))
}

fn not_a_group(g: &Algebra) -> Option<Outcome> {
    (!g.is_group()).then(|| Outcome::Inapplicable(format!("{} is a {}", g.name(), g.tag())))
}

/// Maximal pairwise-commuting subsets by scanning all `2^n` subsets.
fn brute_force_maximal_commuting(g: &Algebra) -> Vec<Vec<usize>> {
    let n = g.order();
    let commute = |a: usize, b: usize| g.mul(a, b) == g.mul(b, a);
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let pairwise = set.iter().all(|&a| set.iter().all(|&b| commute(a, b)));
        let maximal = (0..n).all(|x| mask >> x & 1 == 1 || !set.iter().all(|&a| commute(a, x)));
        if pairwise && maximal {
            out.push(set);
        }
    }
    out.sort();
    out
}

fn com_maximal_abelian(g: &Algebra) -> Outcome {
    if let Some(o) = not_a_group(g) {
        return o;
    }
    let h = commuting_hypergraph(g);
    for edge in h.edges() {
        if !g.is_subgroup(edge) || !g.is_abelian_subset(edge) {
            return Outcome::Refuted(format!("{} is not an abelian subgroup", labels(g, edge)));
        }
        let meet: Vec<usize> = (0..g.order())
            .filter(|&x| edge.iter().all(|&v| g.mul(v, x) == g.mul(x, v)))
            .collect();
        if &meet != edge {
            return Outcome::Refuted(format!("{} differs from the meet of its centralizers", labels(g, edge)));
        }
    }
    let subgroups = match g.subgroups() {
        Ok(s) => s,
        Err(e) => return Outcome::Error(e.to_string()),
    };
    let abelian: Vec<_> = subgroups
        .into_iter()
        .filter(|s| g.is_abelian_subset(&s.ones().collect::<Vec<_>>()))
        .collect();
    let maximal_abelian = crate::algebra::maximal_members(abelian);
    if maximal_abelian != h.edges() {
        return Outcome::Refuted("edges differ from the maximal abelian subgroups".into());
    }
    let mut detail = format!("{} edges", h.edge_count());
    if g.order() <= BRUTE_FORCE_COMMUTING_LIMIT {
        if brute_force_maximal_commuting(g) != h.edges() {
            return Outcome::Refuted("edges differ from the brute-force maximal commuting sets".into());
        }
        detail.push_str(", brute-force oracle agrees");
    }
    Outcome::Holds(detail)
}

fn com_degree_not_two(g: &Algebra) -> Outcome {
    match verify_degree_not_two(g) {
        DegreeReport::Skipped { reason } => Outcome::Inapplicable(reason),
        DegreeReport::Passed { max_degree } => Outcome::Holds(format!("max degree {max_degree}")),
        DegreeReport::Failed { label, .. } => Outcome::Refuted(format!("vertex {label} has degree 2")),
    }
}

fn coincides(g: &Graph, h: &Hypergraph) -> Option<usize> {
    (0..g.vertex_count()).find(|&v| !neighborhood_coincidence(g, h, v).unwrap_or(false))
}

fn nbd_coincidence(a: &Algebra) -> Outcome {
    let mut graphs = vec![("commuting", commuting_graph(a)), ("power", power_graph(a))];
    if a.is_group() {
        graphs.push(("epower", enhanced_power_graph(a)));
    }
    for (kind, g) in &graphs {
        let h = maximal_cliques(g);
        if let Some(v) = coincides(g, &h) {
            return Outcome::Refuted(format!("{kind}: neighborhoods of {} differ", a.label(v)));
        }
    }
    Outcome::Holds(format!("{} constructions", graphs.len()))
}

fn random_graph_coincidence(seed: u64) -> (String, Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let subject = format!("{RANDOM_GRAPHS} random graphs (seed {seed:#x})");
    for i in 0..RANDOM_GRAPHS {
        let n = rng.gen_range(1..=10);
        let p: f64 = rng.gen_range(0.1..0.9);
        let mut g = Graph::unlabeled(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        if let Some(v) = coincides(&g, &maximal_cliques(&g)) {
            return (subject, Outcome::Refuted(format!("graph #{i}: vertex {v}")));
        }
    }
    (subject, Outcome::Holds("all vertices agree".into()))
}

fn epow_maximal_cyclic(g: &Algebra) -> Outcome {
    if let Some(o) = not_a_group(g) {
        return o;
    }
    let h = match enhanced_power_hypergraph(g) {
        Ok(h) => h,
        Err(e) => return Outcome::Refuted(e.to_string()),
    };
    for edge in h.edges() {
        let cyclic = edge.iter().any(|&c| {
            let mut span = g.positive_powers(c);
            span.sort_unstable();
            &span == edge
        });
        if !cyclic {
            return Outcome::Refuted(format!("{} is not cyclic", labels(g, edge)));
        }
    }
    let is_cyclic = (0..g.order()).any(|x| g.element_order(x).ok() == Some(g.order()));
    verdict(
        (h.edge_count() == 1) == is_cyclic,
        format!("{} maximal cyclic subgroups", h.edge_count()),
        || format!("{} edges but cyclic = {is_cyclic}", h.edge_count()),
    )
}

fn pow_chain_count(max_n: u64) -> Cases {
    let counts = (1..=CHAIN_COUNT_RANGE.max(max_n)).find_map(|n| {
        let by_enum = maximal_chains(n).map(|c| BigUint::from(c.len()));
        let by_rec = count_chains_recurrence(n);
        let by_formula = Factorization::of(n).map(|f| count_chains_multinomial(&f));
        match (by_enum, by_rec, by_formula) {
            (Ok(a), Ok(b), Ok(c)) if a == b && b == c => None,
            (Ok(a), Ok(b), Ok(c)) => Some(Outcome::Refuted(format!("n = {n}: {a} / {b} / {c}"))),
            _ => Some(Outcome::Error(format!("n = {n}: count failed"))),
        }
    });
    let hypergraphs = (1..=max_n).find_map(|n| {
        let actual = match Algebra::from_spec(&format!("cyclic:{n}")) {
            Ok(g) => power_hypergraph(&g),
            Err(e) => return Some(Outcome::Error(e.to_string())),
        };
        let chains = maximal_chains(n).ok()?;
        if actual.edge_count() != chains.len() {
            return Some(Outcome::Refuted(format!("n = {n}: {} edges, {} chains", actual.edge_count(), chains.len())));
        }
        match predicted_power_hypergraph(n) {
            Ok(p) if p.edges() == actual.edges() => None,
            Ok(_) => Some(Outcome::Refuted(format!("n = {n}: edges differ from the chain prediction"))),
            Err(e) => Some(Outcome::Error(e.to_string())),
        }
    });
    vec![
        (
            format!("n <= {}: enumeration = recurrence = multinomial", CHAIN_COUNT_RANGE.max(max_n)),
            counts.unwrap_or_else(|| Outcome::Holds("all agree".into())),
        ),
        (
            format!("n <= {max_n}: edges of Pow_H(Z_n) = chains"),
            hypergraphs.unwrap_or_else(|| Outcome::Holds("counts and edges match".into())),
        ),
    ]
}

fn binomial(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * i)
}

fn pow_edge_sizes(max_n: u64) -> Cases {
    let sizes = (1..=max_n).find_map(|n| {
        let g = Algebra::from_spec(&format!("cyclic:{n}")).ok()?;
        let actual = power_hypergraph(&g).edge_sizes();
        let mut predicted: Vec<usize> = maximal_chains(n)
            .ok()?
            .iter()
            .map(|c| chain_edge_cardinality(c) as usize)
            .collect();
        predicted.sort_unstable();
        (actual != predicted).then(|| Outcome::Refuted(format!("n = {n}: sizes {actual:?} vs {predicted:?}")))
    });
    let special = (2..=CHAIN_COUNT_RANGE).find_map(|n| {
        let f = Factorization::of(n).ok()?;
        let count = count_chains_multinomial(&f);
        let expected = match f.pairs() {
            _ if f.is_squarefree() => factorial(f.pairs().len() as u64),
            [(_, a), (_, b)] => binomial(u64::from(a + b), u64::from(*a)),
            [(_, _)] => BigUint::from(1u32),
            _ => return None,
        };
        (count != expected).then(|| Outcome::Refuted(format!("n = {n}: {count} vs {expected}")))
    });
    let example = Algebra::from_spec("product:(cyclic:2),(cyclic:3)").map(|g| {
        let h = power_hypergraph(&g);
        let expected: BTreeSet<BTreeSet<&str>> = [
            vec!["(0,0)", "(1,1)", "(1,2)", "(0,1)", "(0,2)"],
            vec!["(0,0)", "(1,1)", "(1,2)", "(1,0)"],
        ]
        .into_iter()
        .map(|e| e.into_iter().collect())
        .collect();
        let actual: BTreeSet<BTreeSet<&str>> =
            h.labeled_edges().into_iter().map(|e| e.into_iter().collect()).collect();
        verdict(actual == expected, "two edges, sizes 4 and 5", || format!("edges {actual:?}"))
    });
    vec![
        (
            format!("n <= {max_n}: edge sizes = sums of phi along chains"),
            sizes.unwrap_or_else(|| Outcome::Holds("all match".into())),
        ),
        (
            format!("n <= {CHAIN_COUNT_RANGE}: N = s! (squarefree), C(a+b,a) (two primes), 1 (prime power)"),
            special.unwrap_or_else(|| Outcome::Holds("all match".into())),
        ),
        (
            "Z_2 x Z_3 worked example".into(),
            example.unwrap_or_else(|e| Outcome::Error(e.to_string())),
        ),
    ]
}

fn cyclic_power_hypergraph(n: u64) -> Result<Hypergraph, String> {
    Algebra::from_spec(&format!("cyclic:{n}"))
        .map(|g| power_hypergraph(&g))
        .map_err(|e| e.to_string())
}

fn pow_hamiltonian_loose(max_n: u64, opts: &VerifyOptions) -> Cases {
    let ns: Vec<u64> = (3..=max_n).collect();
    use rayon::prelude::*;
    ns.par_iter()
        .map(|&n| {
            let outcome = match cyclic_power_hypergraph(n) {
                Err(e) => Outcome::Error(e),
                Ok(h) => match find_hamiltonian_cycle_loose(&h, opts.budget) {
                    HamiltonSearch::Found(w) if w.is_spanning_cycle(&h) => {
                        Outcome::Holds(format!("cycle through {} vertices", w.vertices.len()))
                    }
                    HamiltonSearch::Found(_) => Outcome::Error("returned walk is invalid".into()),
                    HamiltonSearch::Absent => Outcome::Refuted("no loose Hamiltonian cycle".into()),
                    HamiltonSearch::BudgetExhausted { .. } => Outcome::Error("search budget exhausted".into()),
                },
            };
            (format!("Z_{n}"), outcome)
        })
        .collect()
}

fn pow_strict_edge_bound(max_n: u64, opts: &VerifyOptions) -> Cases {
    let mut cases: Cases = (2..=max_n)
        .map(|n| {
            let outcome = match cyclic_power_hypergraph(n) {
                Err(e) => Outcome::Error(e),
                Ok(h) => {
                    let prime_power = Factorization::of(n).map(|f| f.pairs().len() == 1).unwrap_or(false);
                    match find_hamiltonian_cycle_strict(&h, opts.budget) {
                        HamiltonSearch::Found(w) if !w.is_spanning_cycle(&h) => {
                            Outcome::Error("returned walk is invalid".into())
                        }
                        HamiltonSearch::Found(_) if h.edge_count() < h.vertex_count() || prime_power => {
                            Outcome::Refuted(format!("strict cycle found with only {} edges", h.edge_count()))
                        }
                        HamiltonSearch::Found(_) => Outcome::Holds("strict cycle found".into()),
                        HamiltonSearch::Absent => Outcome::Holds(format!(
                            "absent ({} edges, {} vertices{})",
                            h.edge_count(),
                            h.vertex_count(),
                            if prime_power { ", prime power" } else { "" }
                        )),
                        HamiltonSearch::BudgetExhausted { .. } => Outcome::Error("search budget exhausted".into()),
                    }
                }
            };
            (format!("Z_{n}"), outcome)
        })
        .collect();
    let triangle = Hypergraph::unlabeled(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).expect("valid");
    let control = match find_hamiltonian_cycle_strict(&triangle, opts.budget) {
        HamiltonSearch::Found(w) if w.is_spanning_cycle(&triangle) => Outcome::Holds("strict cycle found".into()),
        other => Outcome::Refuted(format!("expected a strict cycle, got {other:?}")),
    };
    cases.push(("triangle (positive control)".into(), control));
    cases
}

fn pow_components(s: &Algebra) -> Outcome {
    let r = verify_component_theorem(s);
    verdict(
        r.passed,
        format!("{} components, {} idempotents", r.component_count, r.idempotent_count),
        || r.failures.join("; "),
    )
}

fn pow_group_connected(g: &Algebra) -> Outcome {
    if let Some(o) = not_a_group(g) {
        return o;
    }
    let h = power_hypergraph(g);
    let c = h.connected_components().count;
    verdict(c == 1, "connected", || format!("{c} components"))
}

fn gen_pgroup_matroid(g: &Algebra) -> Outcome {
    if !g.is_group() || g.prime_power_order().is_none() {
        return Outcome::Inapplicable("not a p-group".into());
    }
    let h = match generating_hypergraph(g) {
        Ok(h) => h,
        Err(e) => return Outcome::Error(e.to_string()),
    };
    let basis = match is_basis_hypergraph(&h) {
        Ok(v) => v,
        Err(e) => return Outcome::Error(e.to_string()),
    };
    if !basis.is_basis || !basis.is_consistent() || basis.uniform.is_none() {
        let w = basis.report.and_then(|r| r.witness);
        return Outcome::Refuted(format!("exchange fails: {w:?}"));
    }
    match burnside_correspondence(g) {
        Err(e) => Outcome::Error(e.to_string()),
        Ok(b) => verdict(
            b.passed,
            format!(
                "{} bases of size {}, |Phi| = {}, {} = {} x {}^{}",
                b.edges,
                b.rank,
                b.frattini.len(),
                b.predicted_edges,
                b.quotient_edges,
                b.frattini.len(),
                b.rank
            ),
            || format!("correspondence fails on {:?}", b.mismatches),
        ),
    }
}

fn gen_s3_model() -> Cases {
    let run = |spec: &str, expect_match: bool| {
        let outcome = match Algebra::from_spec(spec).map_err(|e| e.to_string()).and_then(|g| {
            match_s3_model(&g).map_err(|e| e.to_string())
        }) {
            Err(e) => Outcome::Error(e),
            Ok(m) => {
                let ok = if expect_match {
                    m.matched && m.roles_respected && m.model_exchange_holds && m.edges == 9
                } else {
                    !m.matched
                };
                verdict(ok, format!("{} edges vs {} model bases, bijection {:?}", m.edges, m.model_bases, m.bijection), || {
                    format!("{m:?}")
                })
            }
        };
        (spec.to_string(), outcome)
    };
    vec![run("sym:3", true), ("klein (negative control)".into(), run("klein", false).1)]
}

fn gen_z6z6() -> Cases {
    let r = match z6z6_counterexample() {
        Ok(r) => r,
        Err(e) => return vec![("product:(cyclic:6),(cyclic:6)".into(), Outcome::Error(e.to_string()))],
    };
    let witness = format!(
        "A = {{{}}}, B = {{{}}}, b = (2,3)",
        r.known_witness_labels[0].join(","),
        r.known_witness_labels[1].join(",")
    );
    let judge = |holds: bool, valid: bool, edges: usize| {
        if holds {
            Outcome::Holds(format!("exchange holds on {edges} edges"))
        } else if valid {
            Outcome::Refuted(format!("exchange fails on {edges} edges; verified witness {witness}"))
        } else {
            Outcome::Error(format!("exchange fails but the witness {witness} does not verify"))
        }
    };
    vec![
        (
            "product:(cyclic:6),(cyclic:6)".into(),
            judge(r.report.holds, r.known_witness_valid, r.edges),
        ),
        (
            format!("product:(cyclic:6),(cyclic:6), size-{} edges only", r.min_size),
            judge(r.min_size_report.holds, r.min_size_witness_valid, r.min_size_edges),
        ),
    ]
}

fn id_z8_fixtures() -> Cases {
    let canon = |sets: &[&[usize]]| -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        v.sort();
        v
    };
    let listed_max = canon(&[&[0, 1, 4, 5, 6], &[0, 2, 3, 4, 7], &[0, 1, 2, 3, 4, 6], &[0, 2, 4, 5, 6, 7], &[
        0, 1, 2, 3, 5, 6, 7,
    ]]);
    let listed_min = canon(&[&[0], &[1, 7], &[2, 6], &[3, 5], &[1, 2, 5], &[1, 3, 4], &[4, 5, 7], &[1, 4, 5, 6], &[
        2, 3, 4, 7,
    ]]);
    let z8 = match Algebra::from_spec("cyclic:8") {
        Ok(g) => g,
        Err(e) => return vec![("cyclic:8".into(), Outcome::Error(e.to_string()))],
    };
    let build = |mode| identity_hypergraph(&z8, mode).map(|h| h.edges().to_vec());
    let max = match build(IdentityMode::Maximal) {
        Ok(edges) => verdict(edges == listed_max, "5 edges, exact match", || format!("got {edges:?}")),
        Err(e) => Outcome::Error(e.to_string()),
    };
    // {3,6,7} is the negation of the listed {1,2,5}, and also sums to 0
    // with no zero-sum proper subset; it is the only addition allowed.
    let min = match build(IdentityMode::Minimal) {
        Ok(edges) => {
            let extra: Vec<&Vec<usize>> = edges.iter().filter(|e| !listed_min.contains(e)).collect();
            let missing = listed_min.iter().any(|e| !edges.contains(e));
            verdict(
                !missing && extra == [&vec![3, 6, 7]],
                format!("{} edges: the 9 listed plus {{3,6,7}}", edges.len()),
                || format!("got {edges:?}"),
            )
        }
        Err(e) => Outcome::Error(e.to_string()),
    };
    vec![("cyclic:8 identity_max".into(), max), ("cyclic:8 identity_min".into(), min)]
}

fn id_involution_remark(g: &Algebra) -> Outcome {
    if !g.is_group() || !g.is_abelian() || g.order() > IDENTITY_REMARK_LIMIT {
        return Outcome::Inapplicable(format!("needs an abelian group of order <= {IDENTITY_REMARK_LIMIT}"));
    }
    let e = g.identity().expect("group");
    let involutions = (0..g.order()).filter(|&x| x != e && g.mul(x, x) == e).count();
    let (max, min) = match (
        identity_hypergraph(g, IdentityMode::Maximal),
        identity_hypergraph(g, IdentityMode::Minimal),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(err), _) | (_, Err(err)) => return Outcome::Error(err.to_string()),
    };
    let whole: Vec<usize> = (0..g.order()).collect();
    let single_whole = max.edges() == [whole];
    if single_whole != (involutions != 1) {
        return Outcome::Refuted(format!("{involutions} involutions but {} maximal edges", max.edge_count()));
    }
    if !min.contains_edge(&[e]) {
        return Outcome::Refuted("{e} is not a minimal edge".into());
    }
    for x in 0..g.order() {
        let inv = g.inverse(x).expect("group");
        if x < inv && !min.contains_edge(&[x, inv]) {
            return Outcome::Refuted(format!("{} missing", labels(g, &[x, inv])));
        }
    }
    Outcome::Holds(format!("{involutions} involutions, {} maximal edges", max.edge_count()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify, Verdict};

    fn opts() -> VerifyOptions {
        VerifyOptions::default()
    }

    #[test]
    fn brute_force_commuting_oracle_matches_q8() {
        let q8 = Algebra::from_spec("quaternion").unwrap();
        assert_eq!(brute_force_maximal_commuting(&q8), vec![vec![0, 1, 2, 3], vec![0, 1, 4, 5], vec![0, 1, 6, 7]]);
    }

    #[test]
    fn small_scopes_pass() {
        let o = VerifyOptions {
            registry: Some(vec!["quaternion".into(), "sym:3".into(), "multmod:10".into(), "cyclic:12".into()]),
            max_n: Some(40),
            ..opts()
        };
        for t in TheoremId::ALL {
            let r = verify(t, &o);
            assert!(r.passed(), "{t}: {:?}", r.cases.iter().filter(|c| c.verdict == Verdict::Fail).collect::<Vec<_>>());
        }
    }

    #[test]
    fn skips_are_reported() {
        let o = VerifyOptions { registry: Some(vec!["multmod:6".into()]), ..opts() };
        let r = verify(TheoremId::PowGroupConnected, &o);
        assert_eq!(r.count(Verdict::Skip), 1);
        let r = verify(TheoremId::GenZ6z6Counterexample, &o);
        assert!(r.passed() && r.count(Verdict::Pass) == 2);
    }

    #[test]
    fn special_counts() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(factorial(4), BigUint::from(24u32));
    }
}
