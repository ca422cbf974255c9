//! Extremal values of `|mu_s(G)| + |mu_s(G')|` (top family, `f_s(n)`) and
//! `|mu_{n-s+1}(G)| + |mu_{n-s+1}(G')|` (bottom family, `f_{n-s}(n)`).

mod exhaustive;
mod local;
mod table;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use exhaustive::{exhaustive_f, EXHAUSTIVE_CAP, EXHAUSTIVE_HARD_CAP};
pub use local::{local_search_f, LocalSearchConfig};
pub use table::{ratio_table, RatioRow};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{adjacency_spectrum, EigenWorkspace};

/// Tolerance for treating two objective values as tied.
pub const TIE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `|mu_s(G)| + |mu_s(G')|`, `s >= 2`.
    Top,
    /// `|mu_{n-s+1}(G)| + |mu_{n-s+1}(G')|`, `s >= 1`.
    Bottom,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Top => "top",
            Family::Bottom => "bottom",
        }
    }

    /// 1-based eigenvalue index the objective reads.
    pub fn index(self, n: usize, s: usize) -> usize {
        match self {
            Family::Top => s,
            Family::Bottom => n + 1 - s,
        }
    }

    /// Conjectured limit of `f / n`: `1/sqrt(2(s-1))` (top) or `1/sqrt(2s)` (bottom).
    pub fn target_constant(self, s: usize) -> f64 {
        match self {
            Family::Top => 1.0 / (2.0 * (s as f64 - 1.0)).sqrt(),
            Family::Bottom => 1.0 / (2.0 * s as f64).sqrt(),
        }
    }

    pub(crate) fn validate(self, n: usize, s: usize) -> Result<()> {
        let min = match self {
            Family::Top => 2,
            Family::Bottom => 1,
        };
        if s < min || s > n {
            return Err(Error::param(format!(
                "{} family needs {min} <= s <= n, got s = {s}, n = {n}",
                self.as_str()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "top" => Ok(Family::Top),
            "bottom" => Ok(Family::Bottom),
            other => Err(Error::param(format!("unknown family `{other}`, expected top or bottom"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    LocalSearch,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exhaustive => "exhaustive",
            Method::LocalSearch => "local_search",
        }
    }
}

/// Best objective found for one `(n, s, family)`, with a witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalRecord {
    pub n: usize,
    pub s: usize,
    pub family: Family,
    pub value: f64,
    /// graph6 of a graph attaining `value`.
    pub witness: String,
    pub method: Method,
    pub exact: bool,
    /// Number of objective evaluations performed.
    pub evaluations: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl ExtremalRecord {
    pub fn witness_graph(&self) -> Result<Graph> {
        Graph::from_graph6(&self.witness)
    }
}

/// The objective for `g`, from freshly computed spectra.
pub fn objective(g: &Graph, s: usize, family: Family) -> Result<f64> {
    let n = g.order();
    family.validate(n, s)?;
    let i = family.index(n, s);
    let a = adjacency_spectrum(g)?.mu(i)?;
    let b = adjacency_spectrum(&g.complement())?.mu(i)?;
    Ok(a.abs() + b.abs())
}

/// Scores adjacency matrices held in dense buffers, reusing allocations.
pub(crate) struct Scorer {
    n: usize,
    index: usize,
    graph: Vec<f64>,
    complement: Vec<f64>,
    eigen: EigenWorkspace,
}

impl Scorer {
    pub(crate) fn new(n: usize, s: usize, family: Family) -> Self {
        Scorer {
            n,
            index: family.index(n, s),
            graph: vec![0.0; n * n],
            complement: vec![0.0; n * n],
            eigen: EigenWorkspace::new(),
        }
    }

    /// Loads `g` into the buffers.
    pub(crate) fn load(&mut self, g: &Graph) {
        g.fill_adjacency(&mut self.graph);
        self.sync_complement();
    }

    /// Loads the graph whose pair `p` is present iff bit `p` of `mask` is set.
    pub(crate) fn load_mask(&mut self, mask: u64) {
        let n = self.n;
        let mut p = 0;
        for j in 1..n {
            for i in 0..j {
                let x = (mask >> p & 1) as f64;
                self.graph[i * n + j] = x;
                self.graph[j * n + i] = x;
                p += 1;
            }
        }
        self.sync_complement();
    }

    fn sync_complement(&mut self) {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                self.complement[i * n + j] = if i == j { 0.0 } else { 1.0 - self.graph[i * n + j] };
            }
        }
    }

    /// Flips pair `{i, j}` (zero-based) in both buffers.
    pub(crate) fn flip(&mut self, i: usize, j: usize) {
        let n = self.n;
        let x = 1.0 - self.graph[i * n + j];
        self.graph[i * n + j] = x;
        self.graph[j * n + i] = x;
        self.complement[i * n + j] = 1.0 - x;
        self.complement[j * n + i] = 1.0 - x;
    }

    pub(crate) fn score(&mut self) -> Result<f64> {
        let i = self.index - 1;
        let a = self.eigen.eigenvalues(&self.graph, self.n)?[i];
        let b = self.eigen.eigenvalues(&self.complement, self.n)?[i];
        Ok(a.abs() + b.abs())
    }
}

/// Keeps the running maximum and every candidate within [`TIE_TOL`] of it.
/// Merging is order-independent once [`TieSet::finish`] prunes against the
/// final maximum.
#[derive(Clone, Debug)]
pub(crate) struct TieSet<T> {
    best: f64,
    items: Vec<(f64, T)>,
}

impl<T> TieSet<T> {
    pub(crate) fn new() -> Self {
        TieSet { best: f64::NEG_INFINITY, items: Vec::new() }
    }

    pub(crate) fn offer(&mut self, value: f64, item: T) {
        if value < self.best - TIE_TOL {
            return;
        }
        if value > self.best {
            self.best = value;
        }
        self.items.push((value, item));
        if self.items.len() > 4096 {
            self.prune();
        }
    }

    fn prune(&mut self) {
        let floor = self.best - TIE_TOL;
        self.items.retain(|(v, _)| *v >= floor);
    }

    pub(crate) fn merge(mut self, other: TieSet<T>) -> TieSet<T> {
        self.best = self.best.max(other.best);
        self.items.extend(other.items);
        self.prune();
        self
    }

    pub(crate) fn finish(mut self) -> (f64, Vec<T>) {
        self.prune();
        (self.best, self.items.into_iter().map(|(_, t)| t).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};

    #[test]
    fn family_parsing_and_targets() {
        assert_eq!("top".parse::<Family>().unwrap(), Family::Top);
        assert_eq!("Bottom".parse::<Family>().unwrap(), Family::Bottom);
        assert!("middle".parse::<Family>().is_err());
        assert!((Family::Top.target_constant(3) - 0.5).abs() < 1e-15);
        assert!((Family::Bottom.target_constant(1) - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        assert!((Family::Top.target_constant(2) - 1.0 / 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn objective_examples() {
        let k2 = generate(&GraphKind::Complete(2), 0).unwrap();
        assert!((objective(&k2, 2, Family::Top).unwrap() - 1.0).abs() < 1e-12);
        let k22 = generate(&GraphKind::CompleteBipartite(2, 2), 0).unwrap();
        assert!((objective(&k22, 1, Family::Bottom).unwrap() - 3.0).abs() < 1e-12);
        assert!(objective(&k22, 1, Family::Top).is_err());
        assert!(objective(&k22, 5, Family::Bottom).is_err());
    }

    #[test]
    fn scorer_matches_objective() {
        let g = generate(&GraphKind::ErdosRenyi { n: 9, p: 0.4 }, 3).unwrap();
        for (s, family) in [(2, Family::Top), (4, Family::Top), (1, Family::Bottom), (3, Family::Bottom)] {
            let mut scorer = Scorer::new(9, s, family);
            scorer.load(&g);
            let direct = objective(&g, s, family).unwrap();
            assert!((scorer.score().unwrap() - direct).abs() < 1e-12);
            let mut masked = Scorer::new(9, s, family);
            masked.load_mask(g.pair_mask().unwrap());
            assert!((masked.score().unwrap() - direct).abs() < 1e-12);
        }
    }

    #[test]
    fn tie_set_is_merge_order_independent() {
        let values = [1.0, 3.0, 3.0 + 5e-10, 2.0, 3.0 - 2e-9, 3.0];
        let mut whole = TieSet::new();
        for (i, &v) in values.iter().enumerate() {
            whole.offer(v, i);
        }
        let (best, mut items) = whole.finish();
        items.sort();
        let mut left = TieSet::new();
        let mut right = TieSet::new();
        for (i, &v) in values.iter().enumerate() {
            if i % 2 == 0 { left.offer(v, i) } else { right.offer(v, i) }
        }
        let (best2, mut items2) = right.merge(left).finish();
        items2.sort();
        assert_eq!(best, best2);
        assert_eq!(items, items2);
        assert_eq!(items, vec![1, 2, 5]);
    }
}
