//! Exhaustive search for the smallest LHV bound over a census of graphs.
//!
//! Graphs are canonicalized in parallel, deduplicated by isomorphism and
//! optionally by local complementation, and every surviving class is
//! evaluated once. A class is identified by the minimum canonical code in
//! its LC orbit, so reports do not depend on census order or thread count.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::bell::{lhv_bound_with, Engine};
use crate::canon::{canonicalize, lc_orbit_with_cap, CanonicalForm, DEFAULT_ORBIT_CAP};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6, Graph6Reader};

/// Largest `n` for built-in labeled enumeration (`2^21` graphs at `n = 7`).
pub const LABELED_CAP: usize = 7;

/// Environment variable overriding the worker count.
pub const THREADS_ENV: &str = "BELLGRAPH_THREADS";

pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&k| k > 0)
}

/// The labeled graph whose edge bits, in graph6 upper-triangle order, are `index`.
pub fn labeled_graph(n: usize, index: u64) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for b in 1..n {
        for a in 0..b {
            if (index >> k) & 1 == 1 {
                g.add_edge(a, b)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// All `2^{n(n-1)/2}` labeled graphs on `n <= 7` vertices.
pub fn enumerate_labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > LABELED_CAP {
        return Err(Error::EnumerationTooLarge { n, max: LABELED_CAP });
    }
    Graph::empty(n)?;
    let count = 1u64 << (n * (n - 1) / 2);
    Ok((0..count).map(move |i| labeled_graph(n, i).expect("n checked")))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dedup {
    /// Evaluate every graph in the census.
    None,
    Isomorphism,
    /// Isomorphism plus local complementation.
    #[default]
    LocalComplement,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub dedup: Dedup,
    /// Orbits larger than this fall back to per-class evaluation.
    pub orbit_cap: usize,
    pub engine: Engine,
    pub chunk_size: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            dedup: Dedup::LocalComplement,
            orbit_cap: DEFAULT_ORBIT_CAP,
            engine: Engine::Auto,
            chunk_size: 1 << 16,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip)]
    pub canonical: CanonicalForm,
    /// Canonical code as hexadecimal.
    pub code: String,
    pub graph6: String,
}

impl Witness {
    fn new(canonical: CanonicalForm) -> Self {
        Witness {
            canonical,
            code: format!("{:x}", canonical.code()),
            graph6: emit_graph6(&canonical.to_graph()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub t: usize,
    pub best_bound: Dyadic,
    /// Sorted by canonical code.
    pub witnesses: Vec<Witness>,
    pub graphs_examined: u64,
    pub isomorphism_classes: u64,
    pub lc_classes_examined: u64,
    pub distinct_bounds: BTreeSet<Dyadic>,
    pub dedup: Dedup,
    #[serde(serialize_with = "ser_secs")]
    pub wall_time: Duration,
}

fn ser_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SearchReport {
    /// Equality ignoring wall time.
    pub fn same_result(&self, other: &SearchReport) -> bool {
        self.n == other.n
            && self.t == other.t
            && self.best_bound == other.best_bound
            && self.witnesses == other.witnesses
            && self.graphs_examined == other.graphs_examined
            && self.isomorphism_classes == other.isomorphism_classes
            && self.lc_classes_examined == other.lc_classes_examined
            && self.distinct_bounds == other.distinct_bounds
    }
}

#[derive(Clone, Debug, Default)]
struct Running {
    best: Option<Dyadic>,
    witnesses: BTreeSet<CanonicalForm>,
    distinct: BTreeSet<Dyadic>,
}

impl Running {
    fn offer(&mut self, bound: Dyadic, class: CanonicalForm) {
        self.distinct.insert(bound);
        match self.best {
            Some(b) if bound > b => {}
            Some(b) if bound == b => {
                self.witnesses.insert(class);
            }
            _ => {
                self.best = Some(bound);
                self.witnesses = BTreeSet::from([class]);
            }
        }
    }
}

/// Incremental search state; feed census chunks, then [`finish`](Self::finish).
///
/// Evaluates every class for several error weights at once so a census
/// is canonicalized only one time.
pub struct Searcher {
    ts: Vec<usize>,
    opts: SearchOptions,
    n: Option<usize>,
    seen: HashSet<CanonicalForm>,
    runs: Vec<Running>,
    graphs: u64,
    iso_classes: u64,
    lc_classes: u64,
    started: Instant,
}

impl Searcher {
    pub fn new(ts: &[usize], opts: SearchOptions) -> Self {
        Searcher {
            ts: ts.to_vec(),
            opts,
            n: None,
            seen: HashSet::new(),
            runs: vec![Running::default(); ts.len()],
            graphs: 0,
            iso_classes: 0,
            lc_classes: 0,
            started: Instant::now(),
        }
    }

    pub fn graphs_examined(&self) -> u64 {
        self.graphs
    }

    pub fn process_chunk(&mut self, chunk: &[Graph]) -> Result<()> {
        for g in chunk {
            match self.n {
                None => self.n = Some(g.n()),
                Some(n) if n != g.n() => {
                    return Err(Error::MixedCensus {
                        expected: n,
                        got: g.n(),
                    })
                }
                _ => {}
            }
        }
        self.graphs += chunk.len() as u64;
        let classes: Vec<CanonicalForm> = match self.opts.dedup {
            Dedup::None => {
                let mut codes: Vec<CanonicalForm> = chunk.par_iter().map(canonicalize).collect();
                self.iso_classes += codes.iter().filter(|c| self.seen.insert(**c)).count() as u64;
                self.lc_classes += codes.len() as u64;
                let evaluated = self.evaluate(chunk)?;
                for (i, bounds) in evaluated.into_iter().enumerate() {
                    for (run, b) in self.runs.iter_mut().zip(bounds) {
                        run.offer(b, codes[i]);
                    }
                }
                codes.clear();
                return Ok(());
            }
            Dedup::Isomorphism => {
                let fresh = self.fresh_codes(chunk);
                self.iso_classes += fresh.len() as u64;
                self.seen.extend(fresh.iter().copied());
                fresh
            }
            Dedup::LocalComplement => {
                let fresh = self.fresh_codes(chunk);
                self.iso_classes += fresh.len() as u64;
                let cap = self.opts.orbit_cap;
                let orbits: Vec<_> = fresh
                    .par_iter()
                    .map(|c| lc_orbit_with_cap(&c.to_graph(), cap))
                    .collect();
                let mut reps = Vec::new();
                for (code, orbit) in fresh.iter().zip(orbits) {
                    if self.seen.contains(code) {
                        continue;
                    }
                    match orbit {
                        Ok(o) => {
                            self.seen.extend(o.members().iter().copied());
                            reps.push(o.representative());
                        }
                        Err(Error::OrbitTooLarge { .. }) => {
                            self.seen.insert(*code);
                            reps.push(*code);
                        }
                        Err(e) => return Err(e),
                    }
                }
                reps
            }
        };
        self.lc_classes += classes.len() as u64;
        let graphs: Vec<Graph> = classes.iter().map(|c| c.to_graph()).collect();
        let evaluated = self.evaluate(&graphs)?;
        for (class, bounds) in classes.iter().zip(evaluated) {
            for (run, b) in self.runs.iter_mut().zip(bounds) {
                run.offer(b, *class);
            }
        }
        Ok(())
    }

    /// Sorted canonical codes in `chunk` not yet seen.
    fn fresh_codes(&self, chunk: &[Graph]) -> Vec<CanonicalForm> {
        let mut codes: Vec<CanonicalForm> = chunk
            .par_iter()
            .map(canonicalize)
            .filter(|c| !self.seen.contains(c))
            .collect();
        codes.par_sort_unstable();
        codes.dedup();
        codes
    }

    fn evaluate(&self, graphs: &[Graph]) -> Result<Vec<Vec<Dyadic>>> {
        let engine = self.opts.engine;
        graphs
            .par_iter()
            .map(|g| {
                self.ts
                    .iter()
                    .map(|&t| lhv_bound_with(g, t, engine).map(|r| r.bound))
                    .collect::<Result<Vec<_>>>()
            })
            .collect()
    }

    /// Re-verifies every witness with the direct engine and builds one report per `t`.
    pub fn finish(self) -> Result<Vec<SearchReport>> {
        let n = self.n.unwrap_or(0);
        let wall_time = self.started.elapsed();
        let mut out = Vec::with_capacity(self.ts.len());
        for (&t, run) in self.ts.iter().zip(self.runs) {
            let best = run.best.unwrap_or(Dyadic::ONE);
            let witnesses: Vec<Witness> = run.witnesses.iter().map(|&c| Witness::new(c)).collect();
            witnesses.par_iter().try_for_each(|w| {
                let b = lhv_bound_with(&w.canonical.to_graph(), t, Engine::Direct)?.bound;
                if b == best {
                    Ok(())
                } else {
                    Err(Error::WitnessMismatch {
                        graph6: w.graph6.clone(),
                    })
                }
            })?;
            out.push(SearchReport {
                n,
                t,
                best_bound: best,
                witnesses,
                graphs_examined: self.graphs,
                isomorphism_classes: self.iso_classes,
                lc_classes_examined: self.lc_classes,
                distinct_bounds: run.distinct,
                dedup: self.opts.dedup,
                wall_time,
            });
        }
        Ok(out)
    }
}

/// Searches a stream of same-order graphs for the minimum `D_t`.
pub fn search<I>(census: I, t: usize, opts: &SearchOptions) -> Result<SearchReport>
where
    I: IntoIterator<Item = Graph>,
{
    Ok(search_many(census, &[t], opts)?.remove(0))
}

/// One pass over the census, one report per entry of `ts`.
pub fn search_many<I>(census: I, ts: &[usize], opts: &SearchOptions) -> Result<Vec<SearchReport>>
where
    I: IntoIterator<Item = Graph>,
{
    let mut searcher = Searcher::new(ts, opts.clone());
    let mut iter = census.into_iter();
    loop {
        let chunk: Vec<Graph> = iter.by_ref().take(opts.chunk_size.max(1)).collect();
        if chunk.is_empty() {
            break;
        }
        searcher.process_chunk(&chunk)?;
    }
    searcher.finish()
}

/// Resume state for long census runs.
///
/// Text format, one `key value` pair per line:
///
/// ```text
/// bellgraph-checkpoint 1
/// census <sha256 of the census path>
/// t <t>
/// chunk <index of the last completed chunk>
/// minimum <p/q or none>
/// examined <graph records consumed>
/// witness <graph6>        (zero or more)
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub census_hash: String,
    pub t: usize,
    pub chunk: u64,
    pub minimum: Option<Dyadic>,
    pub examined: u64,
    pub witnesses: Vec<String>,
}

const CHECKPOINT_MAGIC: &str = "bellgraph-checkpoint 1";

pub fn census_hash(path: &Path) -> String {
    let abs = std::fs::canonicalize(path).unwrap_or_else(|_| path.to_path_buf());
    Sha256::digest(abs.to_string_lossy().as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl Checkpoint {
    pub fn render(&self) -> String {
        let mut s = format!(
            "{CHECKPOINT_MAGIC}\ncensus {}\nt {}\nchunk {}\nminimum {}\nexamined {}\n",
            self.census_hash,
            self.t,
            self.chunk,
            self.minimum.map_or("none".to_string(), |m| m.to_string()),
            self.examined
        );
        for w in &self.witnesses {
            s.push_str("witness ");
            s.push_str(w);
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str, path: &Path) -> Result<Checkpoint> {
        let bad = |reason: &str| Error::Checkpoint {
            path: path.to_path_buf(),
            reason: reason.to_string(),
        };
        let mut lines = text.lines();
        if lines.next() != Some(CHECKPOINT_MAGIC) {
            return Err(bad("missing header"));
        }
        let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
        let mut witnesses = Vec::new();
        for line in lines {
            let (k, v) = line.split_once(' ').ok_or_else(|| bad("malformed line"))?;
            if k == "witness" {
                parse_graph6(v).map_err(|_| bad("bad witness graph6"))?;
                witnesses.push(v.to_string());
            } else {
                fields.insert(k, v);
            }
        }
        let get = |k: &str| fields.get(k).copied().ok_or_else(|| bad(&format!("missing {k}")));
        let num = |k: &str| -> Result<u64> { get(k)?.parse().map_err(|_| bad(&format!("bad {k}"))) };
        let minimum = match get("minimum")? {
            "none" => None,
            m => Some(m.parse().map_err(|_| bad("bad minimum"))?),
        };
        Ok(Checkpoint {
            census_hash: get("census")?.to_string(),
            t: num("t")? as usize,
            chunk: num("chunk")?,
            minimum,
            examined: num("examined")?,
            witnesses,
        })
    }

    pub fn load(path: &Path) -> Result<Checkpoint> {
        Checkpoint::parse(&std::fs::read_to_string(path)?, path)
    }

    /// Writes through a temporary file so an interrupted write never truncates the previous state.
    pub fn store(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        let mut f = File::create(&tmp)?;
        f.write_all(self.render().as_bytes())?;
        f.sync_all()?;
        std::fs::rename(tmp, path)?;
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct CensusOptions {
    /// Skip unparsable records instead of failing.
    pub lenient: bool,
    pub checkpoint: Option<PathBuf>,
}

#[derive(Debug)]
pub struct CensusOutcome {
    pub report: SearchReport,
    /// Records skipped under `lenient`, with line numbers.
    pub skipped: Vec<Error>,
    /// First chunk processed in this run (non-zero after a resume).
    pub resumed_from_chunk: u64,
}

/// Searches a graph6 census file, optionally checkpointing after every chunk.
///
/// After a resume the LC seen-set starts empty, so earlier classes may be
/// evaluated again; bounds and witnesses are unaffected but class counters
/// then cover only the resumed part.
pub fn search_census_file(
    path: &Path,
    t: usize,
    opts: &SearchOptions,
    census: &CensusOptions,
) -> Result<CensusOutcome> {
    let hash = census_hash(path);
    let chunk_size = opts.chunk_size.max(1);
    let mut searcher = Searcher::new(&[t], opts.clone());
    let mut start_chunk = 0u64;
    let mut prior: Option<Checkpoint> = None;
    if let Some(cp_path) = &census.checkpoint {
        if cp_path.exists() {
            let cp = Checkpoint::load(cp_path)?;
            if cp.census_hash != hash || cp.t != t {
                return Err(Error::Checkpoint {
                    path: cp_path.clone(),
                    reason: "checkpoint belongs to a different census or t".into(),
                });
            }
            start_chunk = cp.chunk + 1;
            prior = Some(cp);
        }
    }
    if let Some(cp) = &prior {
        let witnesses: Vec<CanonicalForm> = cp
            .witnesses
            .iter()
            .map(|w| parse_graph6(w).map(|g| canonicalize(&g)))
            .collect::<Result<_>>()?;
        if let Some(min) = cp.minimum {
            for w in witnesses {
                searcher.runs[0].offer(min, w);
            }
        }
        searcher.graphs = cp.examined;
    }

    let reader = Graph6Reader::new(BufReader::new(File::open(path)?));
    let mut skipped = Vec::new();
    let mut lines = reader.enumerate().peekable();
    let mut chunk_index = 0u64;
    while lines.peek().is_some() {
        let mut chunk = Vec::with_capacity(chunk_size);
        for (_, rec) in lines.by_ref().take(chunk_size) {
            if chunk_index < start_chunk {
                continue;
            }
            match rec {
                Ok(g) => chunk.push(g),
                Err(e @ Error::Census { .. }) if census.lenient => skipped.push(e),
                Err(e) => return Err(e),
            }
        }
        if chunk_index >= start_chunk {
            searcher.process_chunk(&chunk)?;
            if let Some(cp_path) = &census.checkpoint {
                let run = &searcher.runs[0];
                Checkpoint {
                    census_hash: hash.clone(),
                    t,
                    chunk: chunk_index,
                    minimum: run.best,
                    examined: searcher.graphs,
                    witnesses: run
                        .witnesses
                        .iter()
                        .map(|c| emit_graph6(&c.to_graph()))
                        .collect(),
                }
                .store(cp_path)?;
            }
        }
        chunk_index += 1;
    }
    let report = searcher.finish()?.remove(0);
    Ok(CensusOutcome {
        report,
        skipped,
        resumed_from_chunk: start_chunk,
    })
}

/// Reads every record of a graph6 file.
pub fn read_census(path: &Path) -> Result<Vec<Graph>> {
    let f = BufReader::new(File::open(path)?);
    Graph6Reader::new(f).collect()
}

/// Same as [`read_census`] for any buffered reader.
pub fn read_census_from<R: BufRead>(r: R) -> Result<Vec<Graph>> {
    Graph6Reader::new(r).collect()
}
