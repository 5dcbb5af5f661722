use std::process::ExitCode;
use std::time::Instant;

use serde::Serialize;

use alghyper::constructions::generating_hypergraph;
use alghyper::export::{to_dot, to_json};
use alghyper::matroid::is_basis_hypergraph;
use alghyper::numtheory::{
    chain_edge_cardinality, count_chains_multinomial, count_chains_recurrence, maximal_chains,
    smallest_n_exceeding_chain_count, NumTheoryError,
};
use alghyper::verify::{resolve_registry, verify, verify_all, TheoremReport, Verdict};
use alghyper::{build_hypergraph, Algebra, Factorization, Hypergraph, HypergraphKind, SearchBudget, TheoremId};

use crate::error::CliError;
use crate::{Command, Format};

type Result<T> = std::result::Result<T, CliError>;

pub fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Build { spec, kind } => {
            let (a, kind, h) = construct(&spec, &kind)?;
            println!("{}", to_json(&h, kind.as_str(), a.name()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { spec, kind, json } => analyze(&spec, &kind, json),
        Command::Verify { theorem, group, max_n, budget, registry, json } => {
            if theorem == "matroid" {
                let group = group.ok_or_else(|| CliError::Usage("`verify matroid` needs --group <spec>".into()))?;
                return verify_matroid(&group);
            }
            let registry = registry.map(|r| resolve_registry(&r)).transpose().map_err(|e| CliError::Usage(e.to_string()))?;
            let opts = alghyper::VerifyOptions { max_n, budget: SearchBudget(budget), registry, ..Default::default() };
            let reports = if theorem == "all" {
                verify_all(&opts)
            } else {
                let id: TheoremId = theorem.parse().map_err(CliError::Usage)?;
                vec![verify(id, &opts)]
            };
            print_reports(&reports, json);
            Ok(if reports.iter().all(TheoremReport::passed) { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Chains { n, json } => chains(n, json),
        Command::SmallestN { bound, json } => smallest_n(bound, json),
        Command::Export { spec, kind, format, out } => {
            let (a, kind, h) = construct(&spec, &kind)?;
            let text = match format {
                Format::Json => to_json(&h, kind.as_str(), a.name()) + "\n",
                Format::Dot => to_dot(&h, kind.as_str(), a.name()),
            };
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn construct(spec: &str, kind: &str) -> Result<(Algebra, HypergraphKind, Hypergraph)> {
    let kind: HypergraphKind = kind.parse().map_err(CliError::Usage)?;
    let a = Algebra::from_spec(spec)?;
    let h = build_hypergraph(&a, kind)?;
    Ok((a, kind, h))
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

#[derive(Serialize)]
struct Analysis<'a> {
    algebra: &'a str,
    tag: alghyper::Tag,
    order: usize,
    kind: HypergraphKind,
    edges: usize,
    edge_sizes: Vec<usize>,
    uniform: Option<usize>,
    regular: bool,
    degrees: Vec<usize>,
    components: usize,
    connected: bool,
}

fn analyze(spec: &str, kind: &str, json: bool) -> Result<ExitCode> {
    let (a, kind, h) = construct(spec, kind)?;
    let r = Analysis {
        algebra: a.name(),
        tag: a.tag(),
        order: a.order(),
        kind,
        edges: h.edge_count(),
        edge_sizes: h.edge_sizes(),
        uniform: h.uniform_size(),
        regular: h.is_regular(),
        degrees: h.degree_sequence(),
        components: h.connected_components().count,
        connected: h.is_connected(),
    };
    if json {
        println!("{}", serde_json::to_string(&r).expect("serializable"));
        return Ok(ExitCode::SUCCESS);
    }
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    println!("algebra      {} ({}, order {})", r.algebra, r.tag, r.order);
    println!("kind         {}", r.kind);
    println!("edges        {}", r.edges);
    println!("edge sizes   {}", join(&r.edge_sizes));
    match r.uniform {
        Some(k) => println!("uniform      yes (k = {k})"),
        None => println!("uniform      no"),
    }
    println!("regular      {}", yes_no(r.regular));
    println!("degrees      {}", join(&r.degrees));
    println!("labels       {}", join(h.labels()));
    println!("components   {}", r.components);
    println!("connected    {}", yes_no(r.connected));
    Ok(ExitCode::SUCCESS)
}

fn print_reports(reports: &[TheoremReport], json: bool) {
    if json {
        let value = if reports.len() == 1 {
            serde_json::to_string(&reports[0])
        } else {
            serde_json::to_string(reports)
        };
        println!("{}", value.expect("serializable"));
        return;
    }
    for r in reports {
        println!("{}: {}", r.theorem, r.statement);
        let width = r.cases.iter().map(|c| c.subject.chars().count()).max().unwrap_or(0);
        for c in &r.cases {
            println!("  {:<4}  {:<width$}  {}", c.verdict.to_string(), c.subject, c.detail);
        }
        println!(
            "{}: {} ({} pass, {} fail, {} skip)\n",
            r.theorem,
            if r.passed() { "PASS" } else { "FAIL" },
            r.count(Verdict::Pass),
            r.count(Verdict::Fail),
            r.count(Verdict::Skip)
        );
    }
    if reports.len() > 1 {
        let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.theorem.to_string()).collect();
        if failed.is_empty() {
            println!("all {} theorems pass", reports.len());
        } else {
            println!("failed: {}", failed.join(", "));
        }
    }
}

/// Exits 0 when the generating hypergraph is a basis family, 1 otherwise.
fn verify_matroid(spec: &str) -> Result<ExitCode> {
    let g = Algebra::from_spec(spec)?;
    let h = generating_hypergraph(&g)?;
    let v = is_basis_hypergraph(&h)?;
    let witness_labels = v.report.as_ref().and_then(|r| r.witness.as_ref()).map(|w| {
        let names = |xs: &[usize]| xs.iter().map(|&x| g.label(x).to_string()).collect::<Vec<_>>();
        serde_json::json!({ "a": names(&w.a), "b": names(&w.b), "element": g.label(w.element) })
    });
    let out = serde_json::json!({
        "algebra": g.name(),
        "edges": h.edge_count(),
        "is_basis": v.is_basis,
        "uniform": v.uniform,
        "exchange": v.report,
        "witness_labels": witness_labels,
    });
    println!("{out}");
    Ok(if v.is_basis { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[derive(Serialize)]
struct ChainRow {
    chain: Vec<u64>,
    edge_size: u64,
}

fn chains(n: u64, json: bool) -> Result<ExitCode> {
    let f = Factorization::of(n)?;
    let multinomial = count_chains_multinomial(&f);
    let recurrence = count_chains_recurrence(n)?;
    let rows = match maximal_chains(n) {
        Ok(cs) => Some(
            cs.iter()
                .map(|c| ChainRow { chain: c.steps().to_vec(), edge_size: chain_edge_cardinality(c) })
                .collect::<Vec<_>>(),
        ),
        Err(NumTheoryError::TooManyChains { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    if recurrence != multinomial {
        return Err(CliError::Failure(format!("recurrence {recurrence} and multinomial {multinomial} disagree")));
    }
    if json {
        let out = serde_json::json!({
            "n": n,
            "factorization": f.to_string(),
            "count": multinomial.to_string(),
            "chains": rows,
        });
        println!("{out}");
        return Ok(ExitCode::SUCCESS);
    }
    println!("n = {n} = {f}");
    println!("N(n) = {multinomial} (recurrence {recurrence}, multinomial {multinomial})");
    match rows {
        Some(rows) => {
            for r in rows {
                let chain: Vec<String> = r.chain.iter().map(u64::to_string).collect();
                println!("  {}  size {}", chain.join(" | "), r.edge_size);
            }
        }
        None => println!("  (count only: too many chains to list)"),
    }
    Ok(ExitCode::SUCCESS)
}

fn smallest_n(bound: u64, json: bool) -> Result<ExitCode> {
    let start = Instant::now();
    let found = smallest_n_exceeding_chain_count(bound)?;
    let elapsed = start.elapsed();
    if json {
        let out = serde_json::json!({
            "bound": bound,
            "result": found,
            "factored": found.as_ref().map(|s| s.factorization.to_string()),
            "elapsed_ms": elapsed.as_secs_f64() * 1e3,
        });
        println!("{out}");
        return Ok(ExitCode::SUCCESS);
    }
    match found {
        Some(s) => println!("n = {} = {}, N(n) = {}", s.n, s.factorization, s.chain_count),
        None => println!("no n <= {bound} has more than n maximal divisor chains"),
    }
    println!("elapsed {:.3} ms", elapsed.as_secs_f64() * 1e3);
    Ok(ExitCode::SUCCESS)
}
