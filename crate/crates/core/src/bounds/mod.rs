//! Checkers for the Nordhaus-Gaddum eigenvalue inequalities.
//!
//! Every checker reads a [`SpectralPair`] (the spectra of G and its
//! complement, computed once) and returns [`BoundReport`]s normalised to
//! `lhs <= rhs`. Applicability preconditions are encoded per statement exactly
//! as stated, even where neighbouring statements differ (`n > 4^s` for
//! [`check_pair_bottom`] versus `n >= 4^s` for [`check_fns_upper`]).

mod ramsey;
mod report;

use std::collections::BTreeSet;

pub use ramsey::{ramsey_certificate, RamseyCertificate, RamseyKind, MAX_RAMSEY_SET};
pub use report::{BoundId, BoundParams, BoundReport, Strictness};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::DEFAULT_TOL;
use crate::spectra::{adjacency_spectrum, Spectrum};

use Strictness::{NonStrict, Strict};

/// Spectra of a graph and of its complement, shared by all checkers.
#[derive(Clone, Debug)]
pub struct SpectralPair {
    n: usize,
    edges: usize,
    graph: Spectrum,
    complement: Spectrum,
    tol: f64,
}

impl SpectralPair {
    pub fn new(g: &Graph) -> Result<Self> {
        Self::with_tol(g, DEFAULT_TOL)
    }

    pub fn with_tol(g: &Graph, tol: f64) -> Result<Self> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::param("tolerance must be positive"));
        }
        Ok(SpectralPair {
            n: g.order(),
            edges: g.edge_count(),
            graph: adjacency_spectrum(g)?,
            complement: adjacency_spectrum(&g.complement())?,
            tol,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn graph(&self) -> &Spectrum {
        &self.graph
    }

    pub fn complement(&self) -> &Spectrum {
        &self.complement
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    fn report(&self, id: BoundId, params: BoundParams, applicable: bool, strictness: Strictness, lhs: f64, rhs: f64) -> BoundReport {
        BoundReport::new(id, params, applicable, strictness, lhs, rhs, self.tol)
    }

    fn require_index(&self, index: usize, min: usize) -> Result<()> {
        if index < min || index > self.n {
            return Err(Error::IndexOutOfRange { index, order: self.n });
        }
        Ok(())
    }

    /// `mu_i(G)^2 + mu_i(G')^2` style sums over a 1-based index range.
    fn sum_both(&self, indices: impl Iterator<Item = usize>, f: impl Fn(f64) -> f64) -> f64 {
        indices.map(|i| f(self.graph.at(i)) + f(self.complement.at(i))).sum()
    }
}

fn pow4(s: usize) -> Option<usize> {
    4usize.checked_pow(u32::try_from(s).ok()?)
}

fn square(x: f64) -> f64 {
    x * x
}

/// `n - 1 <= mu + mu'` and `mu + mu' < sqrt(2)(n - 1)`.
pub fn check_nosal(p: &SpectralPair) -> [BoundReport; 2] {
    let n = p.n as f64;
    let sum = p.graph.at(1) + p.complement.at(1);
    let params = BoundParams::n(p.n);
    [
        p.report(BoundId::NosalLower, params.clone(), true, NonStrict, n - 1.0, sum),
        // With n = 1 both sides are 0 and the strict form is false.
        p.report(BoundId::NosalUpper, params, p.n >= 2, Strict, sum, 2f64.sqrt() * (n - 1.0)),
    ]
}

/// `mu + mu' <= 4n/3 - 1`.
pub fn check_csikvari_terpai(p: &SpectralPair) -> BoundReport {
    let sum = p.graph.at(1) + p.complement.at(1);
    p.report(BoundId::CsikvariTerpai, BoundParams::n(p.n), true, NonStrict, sum, 4.0 * p.n as f64 / 3.0 - 1.0)
}

/// `sum_{i=2..s} (mu_i^2 + mu'_i^2) < n^2/4`; applicable iff `n >= 3s - 2`.
pub fn check_sum_squares_top(p: &SpectralPair, s: usize) -> Result<BoundReport> {
    p.require_index(s, 2)?;
    let n = p.n as f64;
    let lhs = p.sum_both(2..=s, square);
    Ok(p.report(BoundId::SumSquaresTop, BoundParams::n(p.n).with_s(s), p.n + 2 >= 3 * s, Strict, lhs, n * n / 4.0))
}

/// `sum_{i=2..s} (|mu_i| + |mu'_i|) < n sqrt((s-1)/2)`; applicable iff `n >= 3s - 2`.
pub fn check_abs_sum_top(p: &SpectralPair, s: usize) -> Result<BoundReport> {
    p.require_index(s, 2)?;
    let n = p.n as f64;
    let lhs = p.sum_both(2..=s, f64::abs);
    let rhs = n * ((s as f64 - 1.0) / 2.0).sqrt();
    Ok(p.report(BoundId::AbsSumTop, BoundParams::n(p.n).with_s(s), p.n + 2 >= 3 * s, Strict, lhs, rhs))
}

/// `mu_s^2 + mu'_s^2 < n^2 / (4(s-1))`; applicable iff `n >= 3s - 2`.
pub fn check_pair_top(p: &SpectralPair, s: usize) -> Result<BoundReport> {
    p.require_index(s, 2)?;
    let n = p.n as f64;
    let lhs = square(p.graph.at(s)) + square(p.complement.at(s));
    let rhs = n * n / (4.0 * (s as f64 - 1.0));
    Ok(p.report(BoundId::PairTop, BoundParams::n(p.n).with_s(s), p.n + 2 >= 3 * s, Strict, lhs, rhs))
}

/// `|mu_s| + |mu'_s| <= n / sqrt(2(s-1)) - 1`; applicable iff `n >= 15(s-1)`.
pub fn check_fs_upper(p: &SpectralPair, s: usize) -> Result<BoundReport> {
    p.require_index(s, 2)?;
    let n = p.n as f64;
    let lhs = p.graph.at(s).abs() + p.complement.at(s).abs();
    let rhs = n / (2.0 * (s as f64 - 1.0)).sqrt() - 1.0;
    Ok(p.report(BoundId::FsUpper, BoundParams::n(p.n).with_s(s), p.n >= 15 * (s - 1), NonStrict, lhs, rhs))
}

/// `sum_{i=1..s} (mu_{n-i+1}^2 + mu'_{n-i+1}^2) <= (n/2 + s)^2`; applicable iff `n > 2s`.
pub fn check_sum_squares_bottom(p: &SpectralPair, s: usize) -> Result<BoundReport> {
    p.require_index(s, 1)?;
    let n = p.n as f64;
    let lhs = p.sum_both((1..=s).map(|i| p.n - i + 1), square);
    let rhs = square(n / 2.0 + s as f64);
    Ok(p.report(BoundId::SumSquaresBottom, BoundParams::n(p.n).with_s(s), p.n > 2 * s, NonStrict, lhs, rhs))
}

/// `sum_{i=1..s} (|mu_{n-i+1}| + |mu'_{n-i+1}|) <= (n/2 + s) sqrt(2s)`; applicable iff `n > 2s`.
pub fn check_abs_sum_bottom(p: &SpectralPair, s: usize) -> Result<BoundReport> {
    p.require_index(s, 1)?;
    let n = p.n as f64;
    let lhs = p.sum_both((1..=s).map(|i| p.n - i + 1), f64::abs);
    let rhs = (n / 2.0 + s as f64) * (2.0 * s as f64).sqrt();
    Ok(p.report(BoundId::AbsSumBottom, BoundParams::n(p.n).with_s(s), p.n > 2 * s, NonStrict, lhs, rhs))
}

/// `mu_{n-s+1}^2 + mu'_{n-s+1}^2 <= (n/2 + s)^2 / s`; applicable iff `n > 4^s`.
pub fn check_pair_bottom(p: &SpectralPair, s: usize) -> Result<BoundReport> {
    p.require_index(s, 1)?;
    let n = p.n as f64;
    let idx = p.n - s + 1;
    let lhs = square(p.graph.at(idx)) + square(p.complement.at(idx));
    let rhs = square(n / 2.0 + s as f64) / s as f64;
    let threshold = pow4(s);
    let applicable = threshold.is_some_and(|q| p.n > q);
    let report = p.report(BoundId::PairBottom, BoundParams::n(p.n).with_s(s), applicable, NonStrict, lhs, rhs);
    Ok(if threshold == Some(p.n) {
        report.with_note("n = 4^s: the strict order condition n > 4^s is not met")
    } else {
        report
    })
}

/// `|mu_{n-s+1}| + |mu'_{n-s+1}| <= n / sqrt(2s) + 1`; applicable iff `n >= 4^s`.
pub fn check_fns_upper(p: &SpectralPair, s: usize) -> Result<BoundReport> {
    p.require_index(s, 1)?;
    let n = p.n as f64;
    let idx = p.n - s + 1;
    let lhs = p.graph.at(idx).abs() + p.complement.at(idx).abs();
    let rhs = n / (2.0 * s as f64).sqrt() + 1.0;
    let applicable = pow4(s).is_some_and(|q| p.n >= q);
    Ok(p.report(BoundId::FnsUpper, BoundParams::n(p.n).with_s(s), applicable, NonStrict, lhs, rhs))
}

/// `sum_{i in X} mu_i(G)^2 <= n^2/4` for any `X` within `{2..n}` (may be empty).
pub fn check_lemma_a1(p: &SpectralPair, x: &[usize]) -> Result<BoundReport> {
    let set: BTreeSet<usize> = x.iter().copied().collect();
    if let Some(&bad) = set.iter().find(|&&i| i < 2 || i > p.n) {
        return Err(Error::param(format!("index {bad} is outside 2..={}", p.n)));
    }
    let n = p.n as f64;
    let lhs = set.iter().map(|&i| square(p.graph.at(i))).sum();
    let params = BoundParams { x: Some(set.into_iter().collect()), ..BoundParams::n(p.n) };
    Ok(p.report(BoundId::LemmaA1, params, true, NonStrict, lhs, n * n / 4.0))
}

/// `|mu_s| <= n / (2 sqrt(n - s + 1))`; applicable iff `mu_s(G) <= 0` (within tol).
pub fn check_lemma_a2(p: &SpectralPair, s: usize) -> Result<BoundReport> {
    p.require_index(s, 2)?;
    let mu_s = p.graph.at(s);
    let rhs = p.n as f64 / (2.0 * ((p.n - s + 1) as f64).sqrt());
    Ok(p.report(BoundId::LemmaA2, BoundParams::n(p.n).with_s(s), mu_s <= p.tol, NonStrict, mu_s.abs(), rhs))
}

/// For `n >= 4^k`: either `mu_{n-k+1}(G) <= -1` and `mu_{n-k+1}(G') <= 0`, or
/// the same with G and G' swapped.
///
/// Reported as `0 <= margin`, where the margin is the larger of the two
/// disjuncts' slacks. `k = 0` would index `mu_{n+1}` and is reported as not
/// applicable.
pub fn check_ramsey_sign(p: &SpectralPair, k: usize) -> Result<BoundReport> {
    let params = BoundParams::n(p.n).with_k(k);
    if k == 0 {
        return Ok(p
            .report(BoundId::RamseySign, params, false, NonStrict, 0.0, 0.0)
            .with_note("k = 0 indexes mu_{n+1}, which does not exist"));
    }
    p.require_index(k, 1)?;
    let idx = p.n - k + 1;
    let (a, b) = (p.graph.at(idx), p.complement.at(idx));
    let first = (-1.0 - a).min(-b);
    let second = (-1.0 - b).min(-a);
    let applicable = pow4(k).is_some_and(|q| p.n >= q);
    Ok(p.report(BoundId::RamseySign, params, applicable, NonStrict, 0.0, first.max(second)))
}

/// `mu_k(G) + mu_{n-k+2}(G') <= -1` and `mu_k(G) + mu_{n-k+1}(G') >= -1`, `2 <= k <= n`.
pub fn check_weyl_pair(p: &SpectralPair, k: usize) -> Result<[BoundReport; 2]> {
    p.require_index(k, 2)?;
    let mu_k = p.graph.at(k);
    let params = BoundParams::n(p.n).with_k(k);
    Ok([
        p.report(BoundId::WeylUpper, params.clone(), true, NonStrict, mu_k + p.complement.at(p.n - k + 2), -1.0),
        p.report(BoundId::WeylLower, params, true, NonStrict, -1.0, mu_k + p.complement.at(p.n - k + 1)),
    ])
}

/// Runs every checker for all valid parameters up to `s_max` (Weyl pairs for
/// every `k`), sorted by `(bound_id, parameters)`.
pub fn run_battery(g: &Graph, s_max: usize) -> Result<Vec<BoundReport>> {
    run_battery_on(&SpectralPair::new(g)?, s_max)
}

pub fn run_battery_on(p: &SpectralPair, s_max: usize) -> Result<Vec<BoundReport>> {
    if s_max == 0 {
        return Err(Error::param("s_max must be at least 1"));
    }
    let n = p.n;
    let top = s_max.min(n);
    let mut out = Vec::new();
    out.extend(check_nosal(p));
    out.push(check_csikvari_terpai(p));
    for s in 2..=top {
        out.push(check_sum_squares_top(p, s)?);
        out.push(check_abs_sum_top(p, s)?);
        out.push(check_pair_top(p, s)?);
        out.push(check_fs_upper(p, s)?);
        out.push(check_lemma_a2(p, s)?);
    }
    for s in 1..=top {
        out.push(check_sum_squares_bottom(p, s)?);
        out.push(check_abs_sum_bottom(p, s)?);
        out.push(check_pair_bottom(p, s)?);
        out.push(check_fns_upper(p, s)?);
    }
    let mut sets: BTreeSet<Vec<usize>> = (2..=top).map(|s| (2..=s).collect()).collect();
    sets.insert((2..=n).collect());
    for x in &sets {
        out.push(check_lemma_a1(p, x)?);
    }
    for k in 1..=top {
        out.push(check_ramsey_sign(p, k)?);
    }
    for k in 2..=n {
        out.extend(check_weyl_pair(p, k)?);
    }
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(out)
}
