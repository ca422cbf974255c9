//! Adjacency spectra and the closed forms that predict them.
//!
//! Eigenvalues are indexed the usual way for graphs: `mu(1) >= mu(2) >= ... >= mu(n)`,
//! and `mu_bottom(s) = mu(n - s + 1)` is the s-th smallest.

mod eigen;
mod matrix;

use serde::Serialize;

pub use eigen::{EigenWorkspace, ITERATIONS_PER_ORDER};
pub use matrix::SymMatrix;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Multiset of eigenvalues, sorted non-increasing.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
    tol: f64,
}

impl Spectrum {
    /// Per-eigenvalue accuracy the solver targets for an order-`n` matrix.
    pub fn accuracy_for(n: usize) -> f64 {
        1e-10 * n.max(1) as f64
    }

    /// Wraps a list of values, sorting it descending.
    pub fn from_values(mut values: Vec<f64>, tol: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values, tol }
    }

    pub(crate) fn from_sorted(values: Vec<f64>, tol: f64) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        Spectrum { values, tol }
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// The i-th largest eigenvalue, `1 <= i <= n`.
    pub fn mu(&self, i: usize) -> Result<f64> {
        if i == 0 || i > self.order() {
            return Err(Error::IndexOutOfRange { index: i, order: self.order() });
        }
        Ok(self.values[i - 1])
    }

    /// The s-th smallest eigenvalue, `mu(n - s + 1)`.
    pub fn mu_bottom(&self, s: usize) -> Result<f64> {
        if s == 0 || s > self.order() {
            return Err(Error::IndexOutOfRange { index: s, order: self.order() });
        }
        Ok(self.values[self.order() - s])
    }

    /// Unchecked 1-based access for callers that validated the index.
    #[inline]
    pub(crate) fn at(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn trace(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }

    /// Largest entrywise distance to another spectrum of the same order.
    pub fn max_abs_diff(&self, other: &Spectrum) -> Option<f64> {
        (self.order() == other.order()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }
}

/// All eigenvalues of the adjacency matrix of `g`.
pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    let n = g.order();
    let mut buf = vec![0.0; n * n];
    g.fill_adjacency(&mut buf);
    let values = EigenWorkspace::new().eigenvalues(&buf, n)?.to_vec();
    Ok(Spectrum::from_sorted(values, Spectrum::accuracy_for(n)))
}

/// Spectrum of `a*M + b*J_n` given the spectrum of a symmetric `M` whose rows
/// all sum to `r` (so `r` is the top eigenvalue, with the all-ones vector).
pub fn regular_shift_spectrum(spec: &Spectrum, r: f64, a: f64, b: f64, n: usize) -> Result<Spectrum> {
    if spec.order() != n || n == 0 {
        return Err(Error::param(format!(
            "spectrum has order {}, expected {n}",
            spec.order()
        )));
    }
    let top = spec.values[0];
    if (top - r).abs() > spec.tol.max(crate::limits::DEFAULT_TOL) {
        return Err(Error::RowSumMismatch { expected: r, found: top });
    }
    let mut values = Vec::with_capacity(n);
    values.push(a * r + b * n as f64);
    values.extend(spec.values[1..].iter().map(|&x| a * x));
    Ok(Spectrum::from_values(values, spec.tol))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlowupVariant {
    /// G^(t): blocks are independent sets.
    Independent,
    /// G^[t]: blocks are cliques.
    Clique,
}

/// Predicted spectrum of G^(t) or G^[t] from the spectrum of G.
///
/// G^(t) has `t·mu_i` plus `n(t-1)` zeros; G^[t] has `t·mu_i + t - 1` plus
/// `n(t-1)` copies of -1.
pub fn blowup_spectrum_closed_form(spec: &Spectrum, t: usize, variant: BlowupVariant) -> Result<Spectrum> {
    if t == 0 {
        return Err(Error::param("blow-up factor t must be at least 1"));
    }
    let n = spec.order();
    let tf = t as f64;
    let (shift, filler) = match variant {
        BlowupVariant::Independent => (0.0, 0.0),
        BlowupVariant::Clique => (tf - 1.0, -1.0),
    };
    let mut values: Vec<f64> = spec.values.iter().map(|&x| tf * x + shift).collect();
    values.extend(std::iter::repeat_n(filler, n * (t - 1)));
    Ok(Spectrum::from_values(values, spec.tol * tf))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};
    use proptest::prelude::*;

    fn spec_of(kind: GraphKind) -> Spectrum {
        adjacency_spectrum(&generate(&kind, 0).unwrap()).unwrap()
    }

    fn assert_close(actual: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len());
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() <= tol, "{actual:?} vs {expected:?}");
        }
    }

    #[test]
    fn named_spectra() {
        assert_close(spec_of(GraphKind::Complete(4)).values(), &[3.0, -1.0, -1.0, -1.0], 1e-12);
        assert_close(spec_of(GraphKind::CompleteBipartite(2, 2)).values(), &[2.0, 0.0, 0.0, -2.0], 1e-12);
        let s5 = 5f64.sqrt();
        assert_close(
            spec_of(GraphKind::Path(4)).values(),
            &[(1.0 + s5) / 2.0, (s5 - 1.0) / 2.0, -(s5 - 1.0) / 2.0, -(1.0 + s5) / 2.0],
            1e-12,
        );
    }

    #[test]
    fn indexing() {
        let k4 = spec_of(GraphKind::Complete(4));
        assert_eq!(k4.mu(1).unwrap().round(), 3.0);
        assert!((k4.mu_bottom(1).unwrap() + 1.0).abs() < 1e-12);
        let k22 = spec_of(GraphKind::CompleteBipartite(2, 2));
        assert!((k22.mu_bottom(1).unwrap() + 2.0).abs() < 1e-12);
        assert!(matches!(k4.mu(0), Err(Error::IndexOutOfRange { .. })));
        assert!(k4.mu(5).is_err());
        assert!(k4.mu_bottom(0).is_err());
        assert!(k4.mu_bottom(5).is_err());
        for s in 1..=4 {
            assert_eq!(k4.mu_bottom(s).unwrap(), k4.mu(4 - s + 1).unwrap());
        }
    }

    #[test]
    fn regular_shift_cases() {
        let c5 = spec_of(GraphKind::Cycle(5));
        let same = regular_shift_spectrum(&c5, 2.0, 1.0, 0.0, 5).unwrap();
        assert_close(same.values(), c5.values(), 1e-15);

        // J_3 - A(K_3) = I_3.
        let k3 = spec_of(GraphKind::Complete(3));
        let id = regular_shift_spectrum(&k3, 2.0, -1.0, 1.0, 3).unwrap();
        assert_close(id.values(), &[1.0, 1.0, 1.0], 1e-12);

        assert!(matches!(
            regular_shift_spectrum(&c5, 3.0, 1.0, 0.0, 5),
            Err(Error::RowSumMismatch { .. })
        ));
        assert!(regular_shift_spectrum(&c5, 2.0, 1.0, 0.0, 4).is_err());
    }

    #[test]
    fn blowup_closed_form_examples() {
        let k2 = Spectrum::from_values(vec![1.0, -1.0], 0.0);
        let ind = blowup_spectrum_closed_form(&k2, 2, BlowupVariant::Independent).unwrap();
        assert_eq!(ind.values(), &[2.0, 0.0, 0.0, -2.0]);
        let cl = blowup_spectrum_closed_form(&k2, 2, BlowupVariant::Clique).unwrap();
        assert_eq!(cl.values(), &[3.0, -1.0, -1.0, -1.0]);
        for v in [BlowupVariant::Independent, BlowupVariant::Clique] {
            assert_eq!(blowup_spectrum_closed_form(&k2, 1, v).unwrap().values(), k2.values());
            assert!(blowup_spectrum_closed_form(&k2, 0, v).is_err());
        }
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n, any::<u64>(), 0.0f64..=1.0)
            .prop_map(|(n, seed, p)| generate(&GraphKind::ErdosRenyi { n, p }, seed).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn trace_identities(g in arb_graph(40)) {
            let spec = adjacency_spectrum(&g).unwrap();
            let tol = spec.tol();
            prop_assert!(spec.values().windows(2).all(|w| w[0] >= w[1]));
            prop_assert!(spec.trace().abs() <= tol);
            prop_assert!((spec.sum_of_squares() - 2.0 * g.edge_count() as f64).abs() <= tol);
            let n = g.order() as f64;
            prop_assert!(spec.mu(1).unwrap() >= 2.0 * g.edge_count() as f64 / n - tol);
        }

        #[test]
        fn blowup_closed_form_matches_direct(g in arb_graph(12), t in 1usize..=4) {
            let spec = adjacency_spectrum(&g).unwrap();
            for (variant, blown) in [
                (BlowupVariant::Independent, g.blowup_independent(t).unwrap()),
                (BlowupVariant::Clique, g.blowup_clique(t).unwrap()),
            ] {
                let predicted = blowup_spectrum_closed_form(&spec, t, variant).unwrap();
                let direct = adjacency_spectrum(&blown).unwrap();
                prop_assert!(predicted.max_abs_diff(&direct).unwrap() <= 1e-8);
            }
        }

        #[test]
        fn cauchy_interlacing(g in arb_graph(20), keep in proptest::collection::vec(any::<bool>(), 20)) {
            let n = g.order();
            let subset: Vec<usize> = (1..=n).filter(|&v| keep[v - 1]).collect();
            prop_assume!(!subset.is_empty());
            let h = g.induced_subgraph(&subset).unwrap();
            let (sg, sh) = (adjacency_spectrum(&g).unwrap(), adjacency_spectrum(&h).unwrap());
            let m = subset.len();
            for i in 1..=m {
                prop_assert!(sh.mu(i).unwrap() <= sg.mu(i).unwrap() + 1e-8);
                prop_assert!(sh.mu(i).unwrap() >= sg.mu(n - m + i).unwrap() - 1e-8);
            }
        }

        #[test]
        fn weyl_pair_inequalities(g in arb_graph(24)) {
            let n = g.order();
            let sg = adjacency_spectrum(&g).unwrap();
            let sc = adjacency_spectrum(&g.complement()).unwrap();
            for k in 2..=n {
                prop_assert!(sg.mu(k).unwrap() + sc.mu(n - k + 2).unwrap() <= -1.0 + 1e-8);
                prop_assert!(sg.mu(k).unwrap() + sc.mu(n - k + 1).unwrap() >= -1.0 - 1e-8);
            }
        }

        #[test]
        fn weyl_matrix_sandwich(n in 1usize..12, entries in proptest::collection::vec(-3.0f64..3.0, 288)) {
            let p = SymMatrix::from_fn(n, |i, j| entries[i * 12 + j]);
            let q = SymMatrix::from_fn(n, |i, j| entries[144 + i * 12 + j]);
            let (sp, sq, sd) = (p.eigenvalues().unwrap(), q.eigenvalues().unwrap(), (&p - &q).eigenvalues().unwrap());
            for s in 1..=n {
                let gap = sp.mu(s).unwrap() - sq.mu(s).unwrap();
                prop_assert!(gap >= sd.mu(n).unwrap() - 1e-8);
                prop_assert!(gap <= sd.mu(1).unwrap() + 1e-8);
            }
        }
    }
}
