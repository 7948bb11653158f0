//! `bellgraph`: error-tolerating graph-state Bell inequalities from the command line.
//!
//! Vertices print 1-based, matching Pauli string labels (`X1 Z2`). Exit status
//! is 0 when every requested expectation matched, 1 on a mismatch and 2 on
//! errors.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use bellgraph::bell::BellOperator;
use bellgraph::search::{search_census_file, search_many, threads_from_env, CensusOptions};
use bellgraph::sim::verify_prop1;
use bellgraph::table::{reproduce_table1, TableOptions};
use bellgraph::{
    coverable_set, emit_graph6, enumerate_labeled, lhv_bound_with, named_graph, parse_graph_arg,
    Dedup, Dyadic, Engine, Graph, NamedFamily, SearchOptions, SearchReport, VertexSet,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "bellgraph", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArgs {
    /// graph6 literal or `family:<spec>`, e.g. `family:star_copies:2`.
    #[arg(long, short)]
    graph: String,
    /// Number of tolerated errors.
    #[arg(long, short, default_value_t = 0)]
    t: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List the t-coverable set C_t.
    Coverable(GraphArgs),
    /// Expand B_t in the stabilizer basis.
    BellOp(GraphArgs),
    /// Classical (LHV) bound of B_t.
    LhvBound {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        /// Expected bound as `p/q`; mismatch exits with status 1.
        #[arg(long)]
        expect: Option<Dyadic>,
    },
    /// Check that random weight-≤t channels keep ⟨B_t⟩ = 1.
    VerifyProp1 {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 20)]
        channels: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Minimum bound over all graphs of one order.
    Search(SearchArgs),
    /// Optimal-value grid for 3 <= n <= 10, t <= 2.
    ReproduceTable1 {
        /// Largest n searched exhaustively; larger cells are spot-checked.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Census file for order N, as `N=PATH`; repeatable.
        #[arg(long = "census", value_parser = parse_census_arg)]
        census: Vec<(usize, PathBuf)>,
        #[arg(long, value_enum, default_value_t = DedupArg::Lc)]
        dedup: DedupArg,
        #[arg(long)]
        json: bool,
    },
    /// Print a named family member as graph6.
    Named {
        /// e.g. `ring:5`, `star_copies:2`, `complete_join:3,3,4`.
        family: NamedFamily,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Enumerate all labeled graphs on n vertices (n <= 7).
    #[arg(long, conflicts_with = "census", required_unless_present = "census")]
    n: Option<usize>,
    /// graph6 census file, one graph per line.
    #[arg(long)]
    census: Option<PathBuf>,
    /// Error weights; comma separated.
    #[arg(long, short, value_delimiter = ',', default_value = "0")]
    t: Vec<usize>,
    #[arg(long, value_enum, default_value_t = DedupArg::Lc)]
    dedup: DedupArg,
    /// Skip unparsable census records instead of failing.
    #[arg(long)]
    lenient: bool,
    /// Resume file, written after every chunk (census mode, single t).
    #[arg(long, requires = "census")]
    checkpoint: Option<PathBuf>,
    #[arg(long, default_value_t = 1 << 16)]
    chunk_size: usize,
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    engine: EngineArg,
    /// Expected minima, one per t; comma separated.
    #[arg(long, value_delimiter = ',')]
    expect: Vec<Dyadic>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Auto,
    Direct,
    Transform,
    Full,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Auto => Engine::Auto,
            EngineArg::Direct => Engine::Direct,
            EngineArg::Transform => Engine::Transform,
            EngineArg::Full => Engine::Full,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DedupArg {
    None,
    Iso,
    Lc,
}

impl From<DedupArg> for Dedup {
    fn from(d: DedupArg) -> Dedup {
        match d {
            DedupArg::None => Dedup::None,
            DedupArg::Iso => Dedup::Isomorphism,
            DedupArg::Lc => Dedup::LocalComplement,
        }
    }
}

fn parse_census_arg(s: &str) -> Result<(usize, PathBuf), String> {
    let (n, path) = s.split_once('=').ok_or("expected N=PATH")?;
    let n = n.parse().map_err(|_| format!("bad vertex count `{n}`"))?;
    Ok((n, PathBuf::from(path)))
}

type CmdResult = Result<bool, Box<dyn std::error::Error>>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = threads_from_env() {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Coverable(a) => coverable(&a),
        Command::BellOp(a) => bell_op(&a),
        Command::LhvBound { graph, engine, expect } => lhv(&graph, engine.into(), expect),
        Command::VerifyProp1 { graph, channels, seed } => prop1(&graph, channels, seed),
        Command::Search(a) => search(&a),
        Command::ReproduceTable1 { max_n, census, dedup, json } => table(max_n, census, dedup, json),
        Command::Named { family, json } => named(&family, json),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn labels(s: VertexSet) -> Vec<usize> {
    s.iter().map(|v| v + 1).collect()
}

fn fmt_set(s: VertexSet) -> String {
    let parts: Vec<String> = labels(s).iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn print_json<T: Serialize>(v: &T) -> Result<(), Box<dyn std::error::Error>> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn load(a: &GraphArgs) -> Result<Graph, Box<dyn std::error::Error>> {
    Ok(parse_graph_arg(&a.graph)?)
}

fn coverable(a: &GraphArgs) -> CmdResult {
    let g = load(a)?;
    let cs = coverable_set(&g, a.t)?;
    if a.json {
        let members: Vec<Vec<usize>> = cs.members().iter().map(|&c| labels(c)).collect();
        print_json(&json!({
            "graph6": emit_graph6(&g),
            "n": g.n(),
            "t": a.t,
            "size": cs.len(),
            "full": cs.is_full(),
            "members": members,
        }))?;
    } else {
        println!("|C_{}| = {} of {}{}", a.t, cs.len(), 1u64 << g.n(), if cs.is_full() { " (full)" } else { "" });
        for &c in cs.members() {
            println!("  {}", fmt_set(c));
        }
    }
    Ok(true)
}

fn bell_op(a: &GraphArgs) -> CmdResult {
    let g = load(a)?;
    let op = BellOperator::new(&g, a.t)?;
    let terms = op.expansion();
    if a.json {
        let rows: Vec<_> = terms
            .iter()
            .map(|(k, p)| json!({ "k": k, "pauli": p.to_string() }))
            .collect();
        print_json(&json!({
            "graph6": emit_graph6(&g),
            "n": g.n(),
            "t": a.t,
            "scale_log2": g.n(),
            "coverable": op.coverable_len(),
            "terms": rows,
        }))?;
    } else {
        println!("2^{} B_{} = sum of {} terms", g.n(), a.t, terms.len());
        for (k, p) in &terms {
            println!("  {k:>6}  {p}");
        }
    }
    Ok(true)
}

fn lhv(a: &GraphArgs, engine: Engine, expect: Option<Dyadic>) -> CmdResult {
    let g = load(a)?;
    let r = lhv_bound_with(&g, a.t, engine)?;
    let matched = expect.is_none_or(|e| e == r.bound);
    if a.json {
        print_json(&json!({
            "graph6": emit_graph6(&g),
            "n": g.n(),
            "t": a.t,
            "bound": r.bound,
            "bound_text": r.bound.to_string(),
            "valid": r.valid,
            "argmax": {
                "x_neg": labels(r.argmax.x_neg),
                "y_neg": labels(r.argmax.y_neg),
                "z_neg": labels(r.argmax.z_neg),
            },
            "expected": expect,
            "matched": matched,
        }))?;
    } else {
        println!("D_{}(G) = {} ({})", a.t, r.bound, r.bound.to_f64());
        println!("valid inequality: {}", if r.valid { "yes" } else { "no" });
        println!(
            "attained by X=-1 on {}, Y=-1 on {}, Z=-1 on {}",
            fmt_set(r.argmax.x_neg),
            fmt_set(r.argmax.y_neg),
            fmt_set(r.argmax.z_neg)
        );
        if let Some(e) = expect {
            println!("expected {e}: {}", if matched { "match" } else { "MISMATCH" });
        }
    }
    Ok(matched)
}

fn prop1(a: &GraphArgs, channels: usize, seed: u64) -> CmdResult {
    let g = load(a)?;
    let rep = verify_prop1(&g, a.t, channels, seed)?;
    if a.json {
        print_json(&rep)?;
    } else {
        println!(
            "{} channels of weight <= {}: max |<B> - 1| = {:.3e} (seed {}){}",
            rep.channels,
            rep.t,
            rep.max_deviation,
            rep.worst_seed,
            if rep.trivial { ", C_t is full" } else { "" }
        );
        println!("assembly distance {:.3e}", rep.assembly_distance);
        println!("{}", if rep.passed { "ok" } else { "FAILED" });
    }
    Ok(rep.passed)
}

fn search(a: &SearchArgs) -> CmdResult {
    if !a.expect.is_empty() && a.expect.len() != a.t.len() {
        return Err(format!("--expect needs {} values, one per t", a.t.len()).into());
    }
    let opts = SearchOptions {
        dedup: a.dedup.into(),
        engine: a.engine.into(),
        chunk_size: a.chunk_size,
        ..Default::default()
    };
    let mut skipped = Vec::new();
    let reports: Vec<SearchReport> = match (&a.census, a.n) {
        (Some(path), _) => {
            if a.checkpoint.is_some() && a.t.len() > 1 {
                return Err("--checkpoint takes a single t".into());
            }
            let census = CensusOptions {
                lenient: a.lenient,
                checkpoint: a.checkpoint.clone(),
            };
            let mut out = Vec::new();
            for &t in &a.t {
                let o = search_census_file(path, t, &opts, &census)?;
                if skipped.is_empty() {
                    skipped = o.skipped.iter().map(|e| e.to_string()).collect();
                }
                out.push(o.report);
            }
            out
        }
        (None, Some(n)) => search_many(enumerate_labeled(n)?, &a.t, &opts)?,
        (None, None) => unreachable!("clap requires --n or --census"),
    };
    let mut all = true;
    let mut rows = Vec::new();
    for (i, r) in reports.iter().enumerate() {
        let expected = a.expect.get(i).copied();
        let matched = expected.is_none_or(|e| e == r.best_bound);
        all &= matched;
        rows.push((r, expected, matched));
    }
    if a.json {
        let out: Vec<_> = rows
            .iter()
            .map(|(r, e, m)| json!({ "report": r, "best_bound_text": r.best_bound.to_string(), "expected": e, "matched": m }))
            .collect();
        print_json(&json!({ "reports": out, "skipped": skipped }))?;
    } else {
        for e in &skipped {
            eprintln!("skipped: {e}");
        }
        for (r, e, m) in rows {
            println!(
                "n={} t={}: D = {}  ({} graphs, {} iso classes, {} evaluated, {:.2?})",
                r.n,
                r.t,
                r.best_bound,
                r.graphs_examined,
                r.isomorphism_classes,
                r.lc_classes_examined,
                r.wall_time
            );
            let bounds: Vec<String> = r.distinct_bounds.iter().map(|b| b.to_string()).collect();
            println!("  distinct bounds: {}", bounds.join(" "));
            for w in &r.witnesses {
                println!("  witness {}", w.graph6);
            }
            if let Some(e) = e {
                println!("  expected {e}: {}", if m { "match" } else { "MISMATCH" });
            }
        }
    }
    Ok(all)
}

fn table(max_n: usize, census: Vec<(usize, PathBuf)>, dedup: DedupArg, json_out: bool) -> CmdResult {
    let opts = TableOptions {
        max_n,
        census_files: census.into_iter().collect::<BTreeMap<_, _>>(),
        search: SearchOptions {
            dedup: dedup.into(),
            ..Default::default()
        },
    };
    let t = reproduce_table1(&opts)?;
    if json_out {
        print_json(&json!({ "cells": t.cells, "all_matched": t.all_matched() }))?;
    } else {
        print!("{}", t.render());
        println!("* spot check on a named graph (upper bound only), ! mismatch");
        println!("{}", if t.all_matched() { "all cells consistent" } else { "MISMATCH" });
    }
    Ok(t.all_matched())
}

fn named(f: &NamedFamily, json_out: bool) -> CmdResult {
    let g = named_graph(f)?;
    if json_out {
        let edges: Vec<[usize; 2]> = g.edges().map(|(a, b)| [a + 1, b + 1]).collect();
        print_json(&json!({ "family": f.to_string(), "n": g.n(), "graph6": emit_graph6(&g), "edges": edges }))?;
    } else {
        println!("{}", emit_graph6(&g));
    }
    Ok(true)
}
