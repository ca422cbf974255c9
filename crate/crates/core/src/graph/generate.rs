use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};
use crate::limits::check_order;

/// Named graph families. The textual form is `kind:arg,arg,...`, e.g.
/// `complete:4`, `complete_bipartite:2,2`, `erdos_renyi:20,0.5`,
/// `circulant:8,1,3`.
#[derive(Clone, Debug, PartialEq)]
pub enum GraphKind {
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    /// Vertex `i` is joined to `i ± d (mod n)` for each offset `d`.
    Circulant { n: usize, offsets: Vec<usize> },
    ErdosRenyi { n: usize, p: f64 },
}

/// Builds a graph of the given kind. `seed` only affects `ErdosRenyi`.
pub fn generate(kind: &GraphKind, seed: u64) -> Result<Graph> {
    match *kind {
        GraphKind::Complete(n) => Ok(Graph::empty(n)?.complement()),
        GraphKind::Empty(n) => Graph::empty(n),
        GraphKind::Path(n) => Graph::from_edges(n, (1..n).map(|u| (u, u + 1))),
        GraphKind::Cycle(n) => {
            if n < 3 {
                return Err(Error::param("a cycle needs at least 3 vertices"));
            }
            Graph::from_edges(n, (1..=n).map(|u| (u, u % n + 1)))
        }
        GraphKind::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return Err(Error::param("both parts of K_{a,b} must be nonempty"));
            }
            let n = a.checked_add(b).ok_or(Error::param("part sizes overflow"))?;
            check_order(n)?;
            Graph::from_edges(n, (1..=a).flat_map(|u| (a + 1..=n).map(move |v| (u, v))))
        }
        GraphKind::Circulant { n, ref offsets } => {
            check_order(n)?;
            if offsets.iter().any(|&d| d == 0 || 2 * d > n) {
                return Err(Error::param("circulant offsets must lie in 1..=n/2"));
            }
            Graph::from_edges(
                n,
                offsets.iter().flat_map(|&d| (0..n).map(move |i| (i + 1, (i + d) % n + 1))),
            )
        }
        GraphKind::ErdosRenyi { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::param(format!("edge probability {p} outside [0, 1]")));
            }
            let mut g = Graph::empty(n)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(p) {
                        g.set(i, j, true);
                    }
                }
            }
            Ok(g)
        }
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let args: Vec<&str> = args.split(',').map(str::trim).filter(|a| !a.is_empty()).collect();
        let int = |i: usize| -> Result<usize> {
            let raw = args
                .get(i)
                .ok_or_else(|| Error::param(format!("generator `{name}` is missing argument {}", i + 1)))?;
            raw.parse()
                .map_err(|_| Error::param(format!("`{raw}` is not a non-negative integer")))
        };
        let arity = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                Err(Error::param(format!("generator `{name}` takes {k} argument(s), got {}", args.len())))
            }
        };
        let kind = match name.trim().to_ascii_lowercase().as_str() {
            "complete" | "k" => {
                arity(1)?;
                GraphKind::Complete(int(0)?)
            }
            "empty" => {
                arity(1)?;
                GraphKind::Empty(int(0)?)
            }
            "path" => {
                arity(1)?;
                GraphKind::Path(int(0)?)
            }
            "cycle" => {
                arity(1)?;
                GraphKind::Cycle(int(0)?)
            }
            "complete_bipartite" | "bipartite" => {
                arity(2)?;
                GraphKind::CompleteBipartite(int(0)?, int(1)?)
            }
            "circulant" => {
                if args.len() < 2 {
                    return Err(Error::param("circulant needs n and at least one offset"));
                }
                GraphKind::Circulant {
                    n: int(0)?,
                    offsets: (1..args.len()).map(int).collect::<Result<_>>()?,
                }
            }
            "erdos_renyi" | "gnp" => {
                arity(2)?;
                let p = args[1]
                    .parse()
                    .map_err(|_| Error::param(format!("`{}` is not a probability", args[1])))?;
                GraphKind::ErdosRenyi { n: int(0)?, p }
            }
            other => return Err(Error::param(format!("unknown generator `{other}`"))),
        };
        Ok(kind)
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Complete(n) => write!(f, "complete:{n}"),
            GraphKind::Empty(n) => write!(f, "empty:{n}"),
            GraphKind::Path(n) => write!(f, "path:{n}"),
            GraphKind::Cycle(n) => write!(f, "cycle:{n}"),
            GraphKind::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            GraphKind::Circulant { n, offsets } => {
                write!(f, "circulant:{n}")?;
                offsets.iter().try_for_each(|d| write!(f, ",{d}"))
            }
            GraphKind::ErdosRenyi { n, p } => write!(f, "erdos_renyi:{n},{p}"),
        }
    }
}
