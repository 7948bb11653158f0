//! Reproduction of the optimal `D_t(n)` grid for `3 <= n <= 10`, `t <= 2`.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::Serialize;

use crate::bell::lhv_bound;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::family::{named_graph, NamedFamily};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::search::{enumerate_labeled, read_census, search_many, SearchOptions, LABELED_CAP};

pub const MIN_N: usize = 3;
pub const MAX_N: usize = 10;
pub const MAX_T: usize = 2;

/// Published optimal values as `(numerator, denominator)` in their
/// original, not necessarily reduced, form. Row `t`, column `n - 3`.
pub const REFERENCE: [[(i64, i64); 8]; 3] = [
    [(3, 4), (3, 4), (5, 8), (7, 16), (6, 16), (10, 32), (13, 64), (11, 64)],
    [(1, 1), (1, 1), (1, 1), (15, 16), (15, 16), (29, 32), (54, 64), (48, 64)],
    [(1, 1), (1, 1), (1, 1), (1, 1), (1, 1), (1, 1), (63, 64), (63, 64)],
];

fn reference_parts(t: usize, n: usize) -> Option<(i64, i64)> {
    if t > MAX_T || !(MIN_N..=MAX_N).contains(&n) {
        return None;
    }
    Some(REFERENCE[t][n - MIN_N])
}

pub fn reference_value(t: usize, n: usize) -> Option<Dyadic> {
    reference_parts(t, n).map(|(p, q)| Dyadic::new(p, q.trailing_zeros()))
}

/// Reference rendered as published, e.g. `6/16`.
pub fn reference_text(t: usize, n: usize) -> Option<String> {
    reference_parts(t, n).map(|(p, q)| if q == 1 { p.to_string() } else { format!("{p}/{q}") })
}

/// Named graph used when a cell is not searched exhaustively, and whether
/// that graph is known to attain the optimum.
pub fn spot_check_family(t: usize, n: usize) -> (NamedFamily, bool) {
    match (t, n) {
        (0, 3..=6) => (NamedFamily::Ring(n), true),
        (0, _) => (NamedFamily::Ring(n), false),
        (1, 6..=8) => (NamedFamily::CompleteJoin(vec![3, n - 3]), true),
        (1, 9) => (NamedFamily::CompleteJoin(vec![3, 3, 3]), true),
        (1, 10) => (NamedFamily::CompleteJoin(vec![3, 3, 4]), false),
        (2, 9..=10) => (NamedFamily::CompleteJoin(vec![3, 3, n - 6]), true),
        // the optimum is 1 here and complete graphs attain it
        _ => (NamedFamily::Complete(n), true),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CellMethod {
    Exhaustive {
        census: String,
        graphs: u64,
        lc_classes: u64,
    },
    /// Bound of one named graph: an upper bound on the optimum.
    SpotCheck {
        family: String,
        attains_reference: bool,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct TableCell {
    pub n: usize,
    pub t: usize,
    pub value: Dyadic,
    pub reference: Dyadic,
    pub reference_text: String,
    pub method: CellMethod,
    /// graph6 of one optimal (or spot-checked) graph.
    pub witness: String,
    /// Exhaustive or attaining cells: value equals the reference.
    /// Other spot checks: value is a consistent upper bound (>= reference).
    pub matched: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub cells: Vec<TableCell>,
}

impl Table {
    pub fn cell(&self, t: usize, n: usize) -> Option<&TableCell> {
        self.cells.iter().find(|c| c.t == t && c.n == n)
    }

    pub fn all_matched(&self) -> bool {
        self.cells.iter().all(|c| c.matched)
    }

    /// Plain-text grid; spot-checked cells are marked `*`, mismatches `!`.
    pub fn render(&self) -> String {
        let mut s = String::from("t\\n ");
        for n in MIN_N..=MAX_N {
            s.push_str(&format!("{n:>9}"));
        }
        s.push('\n');
        for t in 0..=MAX_T {
            s.push_str(&format!("{t:<4}"));
            for n in MIN_N..=MAX_N {
                let text = match self.cell(t, n) {
                    Some(c) => {
                        let log2 = c.reference.log2_denominator().max(
                            reference_parts(t, n).map_or(0, |(_, q)| q.trailing_zeros()),
                        );
                        let mut v = c.value.over(log2).unwrap_or_else(|| c.value.to_string());
                        if v == "1/1" {
                            v = "1".into();
                        }
                        if matches!(c.method, CellMethod::SpotCheck { .. }) {
                            v.push('*');
                        }
                        if !c.matched {
                            v.push('!');
                        }
                        v
                    }
                    None => "-".into(),
                };
                s.push_str(&format!("{text:>9}"));
            }
            s.push('\n');
        }
        s
    }
}

#[derive(Clone, Debug, Default)]
pub struct TableOptions {
    /// Cells with `n <= max_n` are searched exhaustively; the rest are spot-checked.
    pub max_n: usize,
    /// Census files by vertex count; required for exhaustive `n > 7`.
    pub census_files: BTreeMap<usize, PathBuf>,
    pub search: SearchOptions,
}

pub fn reproduce_table1(opts: &TableOptions) -> Result<Table> {
    let ts: Vec<usize> = (0..=MAX_T).collect();
    let mut cells = Vec::new();
    for n in MIN_N..=MAX_N {
        if n <= opts.max_n {
            let (reports, census) = match opts.census_files.get(&n) {
                Some(path) => (
                    search_many(read_census(path)?, &ts, &opts.search)?,
                    path.display().to_string(),
                ),
                None if n <= LABELED_CAP => (
                    search_many(enumerate_labeled(n)?, &ts, &opts.search)?,
                    "labeled".to_string(),
                ),
                None => return Err(Error::MissingCensus(n)),
            };
            for r in reports {
                let reference = reference_value(r.t, n).expect("in range");
                cells.push(TableCell {
                    n,
                    t: r.t,
                    value: r.best_bound,
                    reference,
                    reference_text: reference_text(r.t, n).expect("in range"),
                    method: CellMethod::Exhaustive {
                        census: census.clone(),
                        graphs: r.graphs_examined,
                        lc_classes: r.lc_classes_examined,
                    },
                    witness: r.witnesses.first().map(|w| w.graph6.clone()).unwrap_or_default(),
                    matched: r.best_bound == reference,
                });
            }
        } else {
            for &t in &ts {
                cells.push(spot_check(t, n)?);
            }
        }
    }
    cells.sort_by_key(|c| (c.t, c.n));
    Ok(Table { cells })
}

pub fn spot_check(t: usize, n: usize) -> Result<TableCell> {
    let (family, attains) = spot_check_family(t, n);
    let g: Graph = named_graph(&family)?;
    let value = lhv_bound(&g, t)?.bound;
    let reference = reference_value(t, n).ok_or(Error::VertexCount { n, max: MAX_N })?;
    Ok(TableCell {
        n,
        t,
        value,
        reference,
        reference_text: reference_text(t, n).expect("in range"),
        method: CellMethod::SpotCheck {
            family: family.to_string(),
            attains_reference: attains,
        },
        witness: emit_graph6(&g),
        matched: if attains { value == reference } else { value >= reference },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_lookup() {
        assert_eq!(reference_value(0, 7), Some(Dyadic::new(3, 3)));
        assert_eq!(reference_text(0, 7).as_deref(), Some("6/16"));
        assert_eq!(reference_value(1, 2), None);
        assert_eq!(reference_value(3, 5), None);
    }

    #[test]
    fn cheap_spot_checks() {
        for (t, n) in [(0, 3), (0, 6), (1, 6), (1, 8), (2, 5)] {
            let c = spot_check(t, n).unwrap();
            assert!(c.matched, "t={t} n={n}: {}", c.value);
        }
    }
}
