use std::fmt;

use serde::Serialize;

/// One identifier per checked inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundId {
    /// n - 1 <= mu(G) + mu(G')
    NosalLower,
    /// mu(G) + mu(G') < sqrt(2)(n - 1)
    NosalUpper,
    /// mu(G) + mu(G') <= 4n/3 - 1
    CsikvariTerpai,
    /// sum_{i=2..s} mu_i^2 + mu'_i^2 < n^2/4, for n >= 3s - 2
    SumSquaresTop,
    /// sum_{i=2..s} |mu_i| + |mu'_i| < n sqrt((s-1)/2), for n >= 3s - 2
    AbsSumTop,
    /// mu_s^2 + mu'_s^2 < n^2 / (4(s-1)), for n >= 3s - 2
    PairTop,
    /// |mu_s| + |mu'_s| <= n / sqrt(2(s-1)) - 1, for n >= 15(s-1)
    FsUpper,
    /// sum of the s smallest squared, both graphs, <= (n/2 + s)^2, for n > 2s
    SumSquaresBottom,
    /// sum of the s smallest in absolute value, both graphs, <= (n/2 + s) sqrt(2s), for n > 2s
    AbsSumBottom,
    /// mu_{n-s+1}^2 + mu'_{n-s+1}^2 <= (n/2 + s)^2 / s, for n > 4^s
    PairBottom,
    /// |mu_{n-s+1}| + |mu'_{n-s+1}| <= n / sqrt(2s) + 1, for n >= 4^s
    FnsUpper,
    /// sum_{i in X} mu_i^2 <= n^2/4 for X within {2..n}
    LemmaA1,
    /// |mu_s| <= n / (2 sqrt(n-s+1)) when mu_s <= 0
    LemmaA2,
    /// For n >= 4^k, one of G, G' has mu_{n-k+1} <= -1 while the other has it <= 0
    RamseySign,
    /// mu_k(G) + mu_{n-k+2}(G') <= -1
    WeylUpper,
    /// mu_k(G) + mu_{n-k+1}(G') >= -1
    WeylLower,
    /// mu_i(G) >= v/(2 sqrt(2(s-1))) - 1 on the blown-up A-matrix graph
    WitnessTop,
    /// mu_{n-i+2}(G) <= -v/(2 sqrt(2(s-1))) on the blown-up A-matrix graph
    WitnessBottom,
    WitnessTopComplement,
    WitnessBottomComplement,
}

impl BoundId {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::NosalLower => "nosal-lower",
            BoundId::NosalUpper => "nosal-upper",
            BoundId::CsikvariTerpai => "csikvari-terpai",
            BoundId::SumSquaresTop => "sum-squares-top",
            BoundId::AbsSumTop => "abs-sum-top",
            BoundId::PairTop => "pair-top",
            BoundId::FsUpper => "fs-upper",
            BoundId::SumSquaresBottom => "sum-squares-bottom",
            BoundId::AbsSumBottom => "abs-sum-bottom",
            BoundId::PairBottom => "pair-bottom",
            BoundId::FnsUpper => "fns-upper",
            BoundId::LemmaA1 => "lemma-a1",
            BoundId::LemmaA2 => "lemma-a2",
            BoundId::RamseySign => "ramsey-sign",
            BoundId::WeylUpper => "weyl-upper",
            BoundId::WeylLower => "weyl-lower",
            BoundId::WitnessTop => "witness-top",
            BoundId::WitnessBottom => "witness-bottom",
            BoundId::WitnessTopComplement => "witness-top-complement",
            BoundId::WitnessBottomComplement => "witness-bottom-complement",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strictness {
    Strict,
    NonStrict,
}

/// Parameters an inequality instance was evaluated at.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BoundParams {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Eigenvalue index `i` for per-index families.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    /// The index set X.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<usize>>,
}

impl BoundParams {
    pub fn n(n: usize) -> Self {
        BoundParams { n, ..Default::default() }
    }

    pub fn with_s(mut self, s: usize) -> Self {
        self.s = Some(s);
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    /// The value shown in the `s_or_k` CSV column.
    pub fn s_or_k(&self) -> Option<usize> {
        self.s.or(self.k)
    }
}

/// One inequality instance, always normalised to `lhs <= rhs` (or `<` when strict).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub bound_id: BoundId,
    pub params: BoundParams,
    pub applicable: bool,
    pub strictness: Strictness,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub satisfied: bool,
    pub tol: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

impl BoundReport {
    pub fn new(
        bound_id: BoundId,
        params: BoundParams,
        applicable: bool,
        strictness: Strictness,
        lhs: f64,
        rhs: f64,
        tol: f64,
    ) -> Self {
        let margin = rhs - lhs;
        BoundReport {
            bound_id,
            params,
            applicable,
            strictness,
            lhs,
            rhs,
            margin,
            satisfied: Self::verdict(margin, strictness, tol),
            tol,
            note: None,
        }
    }

    /// Strict inequalities cannot be certified in floating point; both kinds
    /// compare the margin against `-tol`.
    pub fn verdict(margin: f64, strictness: Strictness, tol: f64) -> bool {
        match strictness {
            Strictness::NonStrict => margin >= -tol,
            Strictness::Strict => margin > -tol,
        }
    }

    pub fn with_note(mut self, note: &'static str) -> Self {
        self.note = Some(note);
        self
    }

    pub fn is_strict(&self) -> bool {
        self.strictness == Strictness::Strict
    }

    /// Applicable and not satisfied.
    pub fn is_violation(&self) -> bool {
        self.applicable && !self.satisfied
    }

    pub(crate) fn sort_key(&self) -> (BoundId, &BoundParams) {
        (self.bound_id, &self.params)
    }
}
