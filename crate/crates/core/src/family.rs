//! Named graph families and the `--graph` argument syntax.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::vertex_set::MAX_VERTICES;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum NamedFamily {
    /// Star with center vertex 0.
    Star(usize),
    Complete(usize),
    Ring(usize),
    Path(usize),
    Empty(usize),
    /// `m` disjoint 3-vertex stars, centers at `0, 3, 6, ..`.
    StarCopies(usize),
    /// Disjoint union of complete graphs of the given orders.
    CompleteJoin(Vec<usize>),
}

impl NamedFamily {
    pub fn vertex_count(&self) -> usize {
        match self {
            NamedFamily::Star(n)
            | NamedFamily::Complete(n)
            | NamedFamily::Ring(n)
            | NamedFamily::Path(n)
            | NamedFamily::Empty(n) => *n,
            NamedFamily::StarCopies(m) => 3 * m,
            NamedFamily::CompleteJoin(parts) => parts.iter().sum(),
        }
    }
}

/// Builds the family member; components are laid out in ascending blocks.
pub fn named_graph(f: &NamedFamily) -> Result<Graph> {
    let n = f.vertex_count();
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::FamilySpec {
            spec: f.to_string(),
            reason: format!("needs {n} vertices, supported range is 1..={MAX_VERTICES}"),
        });
    }
    match f {
        NamedFamily::Star(n) => Graph::star(*n),
        NamedFamily::Complete(n) => Graph::complete(*n),
        NamedFamily::Ring(n) => {
            if *n < 3 {
                return Err(Error::FamilySpec {
                    spec: f.to_string(),
                    reason: "a ring needs at least 3 vertices".into(),
                });
            }
            Graph::ring(*n)
        }
        NamedFamily::Path(n) => Graph::path(*n),
        NamedFamily::Empty(n) => Graph::empty(*n),
        NamedFamily::StarCopies(m) => {
            let star = Graph::star(3)?;
            let mut g = star;
            for _ in 1..*m {
                g = g.disjoint_union(&star)?;
            }
            Ok(g)
        }
        NamedFamily::CompleteJoin(parts) => {
            let mut iter = parts.iter();
            let mut g = Graph::complete(*iter.next().expect("nonempty"))?;
            for &k in iter {
                g = g.disjoint_union(&Graph::complete(k)?)?;
            }
            Ok(g)
        }
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedFamily::Star(n) => write!(f, "star:{n}"),
            NamedFamily::Complete(n) => write!(f, "complete:{n}"),
            NamedFamily::Ring(n) => write!(f, "ring:{n}"),
            NamedFamily::Path(n) => write!(f, "path:{n}"),
            NamedFamily::Empty(n) => write!(f, "empty:{n}"),
            NamedFamily::StarCopies(m) => write!(f, "star_copies:{m}"),
            NamedFamily::CompleteJoin(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "complete_join:{}", parts.join(","))
            }
        }
    }
}

/// `tag:args`, e.g. `ring:5`, `star_copies:2`, `complete_join:3,3,4`.
impl FromStr for NamedFamily {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let bad = |reason: &str| Error::FamilySpec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let (tag, args) = spec.split_once(':').ok_or_else(|| bad("expected tag:args"))?;
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad("arguments must be non-negative integers"))?;
        let single = || match nums.as_slice() {
            [k] => Ok(*k),
            _ => Err(bad("expected exactly one argument")),
        };
        let f = match tag.trim() {
            "star" => NamedFamily::Star(single()?),
            "complete" => NamedFamily::Complete(single()?),
            "ring" => NamedFamily::Ring(single()?),
            "path" => NamedFamily::Path(single()?),
            "empty" => NamedFamily::Empty(single()?),
            "star_copies" => NamedFamily::StarCopies(single()?),
            "complete_join" => {
                if nums.contains(&0) {
                    return Err(bad("component orders must be positive"));
                }
                NamedFamily::CompleteJoin(nums)
            }
            _ => return Err(bad("unknown family tag")),
        };
        Ok(f)
    }
}

/// A graph6 literal, or `family:<spec>` for a named family.
pub fn parse_graph_arg(arg: &str) -> Result<Graph> {
    match arg.strip_prefix("family:") {
        Some(spec) => named_graph(&spec.parse()?),
        None => parse_graph6(arg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_copies_layout() {
        let g = named_graph(&NamedFamily::StarCopies(2)).unwrap();
        assert_eq!(g.n(), 6);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (3, 4), (3, 5)]);
    }

    #[test]
    fn complete_join_and_ring() {
        let g = named_graph(&"complete_join:3,3".parse().unwrap()).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(g.rows().iter().all(|r| r.len() == 2));
        assert_eq!(g.components().len(), 2);
        let r = named_graph(&NamedFamily::Ring(5)).unwrap();
        assert!((0..5).all(|a| r.degree(a) == 2));
        assert_eq!(r.components().len(), 1);
    }

    #[test]
    fn spec_round_trip_and_errors() {
        for s in ["star:3", "complete:5", "ring:5", "star_copies:2", "complete_join:3,3,4", "path:4", "empty:2"] {
            assert_eq!(s.parse::<NamedFamily>().unwrap().to_string(), s);
        }
        assert!("ring".parse::<NamedFamily>().is_err());
        assert!("blob:3".parse::<NamedFamily>().is_err());
        assert!("ring:3,4".parse::<NamedFamily>().is_err());
        assert!(named_graph(&NamedFamily::StarCopies(6)).is_err());
        assert!(named_graph(&NamedFamily::Ring(2)).is_err());
    }

    #[test]
    fn graph_argument() {
        assert_eq!(parse_graph_arg("Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(parse_graph_arg("family:complete:3").unwrap(), Graph::complete(3).unwrap());
        assert!(parse_graph_arg("family:nope").is_err());
    }
}
