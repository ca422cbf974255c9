//! The recursive 0/1 matrices `A_k` and the graphs built from them.
//!
//! `A_1 = I_2`, `B = [[1, -1], [-1, -1]]`, and
//! `A_{k+1} = ((2A_k - J) ⊗ B + J) / 2`. The recursion runs in integers:
//! `2A_k - J` has entries ±1, so every entry of the Kronecker product is ±1
//! and the shifted half lands in {0, 1}. Each step asserts that.
//!
//! `A_{k+1}` has constant row sums `2^k` and spectrum
//! `2^k, (2^{k/2})^[2^{k-1}], 0^[2^k - 1], (-2^{k/2})^[2^{k-1}]`.

use std::fmt;

use crate::bounds::{BoundId, BoundParams, BoundReport, Strictness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::{check_order, max_order};
use crate::spectra::{adjacency_spectrum, Spectrum, SymMatrix};

const B: [[i8; 2]; 2] = [[1, -1], [-1, -1]];

/// Small dense symmetric 0/1 matrix. Unlike [`Graph`] it may carry ones on
/// the diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix01 {
    order: usize,
    entries: Vec<u8>,
}

impl Matrix01 {
    pub fn identity(order: usize) -> Self {
        let mut entries = vec![0; order * order];
        for i in 0..order {
            entries[i * order + i] = 1;
        }
        Matrix01 { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Zero-based entry access.
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i * self.order + j] == 1
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.entries
            .chunks(self.order)
            .map(|r| r.iter().map(|&x| x as usize).sum())
            .collect()
    }

    /// `J - self`.
    pub fn complement(&self) -> Matrix01 {
        Matrix01 {
            order: self.order,
            entries: self.entries.iter().map(|&x| 1 - x).collect(),
        }
    }

    pub fn to_sym(&self) -> SymMatrix {
        SymMatrix::from_fn(self.order, |i, j| self.entries[i * self.order + j] as f64)
    }

    /// Rows as `0`/`1` strings, one per line.
    pub fn to_grid(&self) -> String {
        let mut out = String::with_capacity(self.order * (self.order + 1));
        for row in self.entries.chunks(self.order) {
            out.extend(row.iter().map(|&x| if x == 1 { '1' } else { '0' }));
            out.push('\n');
        }
        out
    }

    fn is_symmetric(&self) -> bool {
        let m = self.order;
        (0..m).all(|i| (0..i).all(|j| self.entries[i * m + j] == self.entries[j * m + i]))
    }
}

impl fmt::Debug for Matrix01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix01({}):\n{}", self.order, self.to_grid())
    }
}

fn order_of(k: u32) -> Result<usize> {
    let cap = max_order();
    1usize
        .checked_shl(k)
        .filter(|&m| m <= cap)
        .ok_or(Error::OrderTooLarge { order: 1usize.checked_shl(k).unwrap_or(usize::MAX), cap })
}

/// `A_k`, of order `2^k`.
pub fn construct_a(k: usize) -> Result<Matrix01> {
    if k == 0 {
        return Err(Error::param("A_k is defined for k >= 1"));
    }
    let k32 = u32::try_from(k).map_err(|_| Error::param("k is too large"))?;
    order_of(k32)?;

    let mut a = Matrix01::identity(2);
    for _ in 1..k {
        a = recursion_step(&a)?;
    }
    Ok(a)
}

fn recursion_step(a: &Matrix01) -> Result<Matrix01> {
    let m = a.order;
    let big = 2 * m;
    let mut entries = vec![0u8; big * big];
    for i in 0..m {
        for j in 0..m {
            let sign: i8 = if a.get(i, j) { 1 } else { -1 };
            for (p, b_row) in B.iter().enumerate() {
                for (q, &b) in b_row.iter().enumerate() {
                    let shifted = sign * b + 1;
                    if shifted != 0 && shifted != 2 {
                        return Err(Error::Internal(format!("recursion produced entry {shifted}/2")));
                    }
                    entries[(2 * i + p) * big + 2 * j + q] = (shifted / 2) as u8;
                }
            }
        }
    }
    let next = Matrix01 { order: big, entries };
    if !next.is_symmetric() {
        return Err(Error::Internal("recursion produced an asymmetric matrix".into()));
    }
    Ok(next)
}

/// Spectrum of `A_{k+1}` (order `2^{k+1}`) in closed form.
pub fn a_spectrum_closed_form(k: usize) -> Result<Spectrum> {
    if k == 0 {
        return Err(Error::param("closed form is stated for k >= 1"));
    }
    let k32 = u32::try_from(k + 1).map_err(|_| Error::param("k is too large"))?;
    let order = order_of(k32)?;
    let half = 1usize << (k - 1);
    let root = 2f64.powf(k as f64 / 2.0);
    let mut values = Vec::with_capacity(order);
    values.push(2f64.powi(k as i32));
    values.extend(std::iter::repeat_n(root, half));
    values.extend(std::iter::repeat_n(0.0, (1 << k) - 1));
    values.extend(std::iter::repeat_n(-root, half));
    debug_assert_eq!(values.len(), order);
    Ok(Spectrum::from_values(values, 0.0))
}

/// The index `s = 2^{k-1} + 1` the construction `extremal_graph(k, t)` is tight for.
pub fn witness_s(k: usize) -> usize {
    (1 << (k - 1)) + 1
}

/// The graph with adjacency matrix `A_{k+1} ⊗ J_t` with the diagonal zeroed;
/// order `2^{k+1} t`. Vertex `(u, j)` of the blow-up is `(u-1)t + j`.
pub fn extremal_graph(k: usize, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::param("t must be at least 1"));
    }
    let a = construct_a(k + 1)?;
    let n = a.order().checked_mul(t).ok_or(Error::param("order overflows"))?;
    check_order(n)?;
    let mut g = Graph::empty(n)?;
    for x in 1..n {
        for y in 0..x {
            if a.get(x / t, y / t) {
                g.set(x, y, true);
            }
        }
    }
    Ok(g)
}

/// Checks the four lower-bound witness inequalities on `extremal_graph(k, t)`
/// numerically, for every `2 <= i <= s` with `s = 2^{k-1} + 1`:
/// `mu_i >= c - 1` and `mu_{n-i+2} <= -c` on the graph and on its complement,
/// where `c = n / (2 sqrt(2(s-1)))`.
pub fn witness_check(k: usize, t: usize, tol: f64) -> Result<Vec<BoundReport>> {
    let g = extremal_graph(k, t)?;
    let n = g.order();
    let s = witness_s(k);
    let c = n as f64 / (2.0 * (2.0 * (s as f64 - 1.0)).sqrt());
    let spectra = [adjacency_spectrum(&g)?, adjacency_spectrum(&g.complement())?];
    let ids = [
        (BoundId::WitnessTop, BoundId::WitnessBottom),
        (BoundId::WitnessTopComplement, BoundId::WitnessBottomComplement),
    ];

    let mut out = Vec::with_capacity(4 * (s - 1));
    for (spec, (top_id, bottom_id)) in spectra.iter().zip(ids) {
        for i in 2..=s {
            let params = BoundParams { n, s: Some(s), k: Some(k), i: Some(i), t: Some(t), x: None };
            out.push(BoundReport::new(top_id, params.clone(), true, Strictness::NonStrict, c - 1.0, spec.mu(i)?, tol));
            out.push(BoundReport::new(bottom_id, params, true, Strictness::NonStrict, spec.mu(n - i + 2)?, -c, tol));
        }
    }
    out.sort_by(|a, b| (a.bound_id, &a.params).cmp(&(b.bound_id, &b.params)));
    Ok(out)
}
