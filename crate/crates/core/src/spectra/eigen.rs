//! Eigenvalues of real symmetric matrices: Householder reduction to
//! tridiagonal form, then implicit-shift QL on the tridiagonal.
//!
//! Both stages follow the EISPACK `tred1`/`tql1` pair (values only). The
//! whole computation is sequential and allocation-free once the workspace is
//! sized, so identical input gives bit-identical output.

use crate::error::{Error, Result};

/// Iteration budget for the QL sweep, per unit of order.
pub const ITERATIONS_PER_ORDER: usize = 50;

/// Reusable buffers for repeated small eigensolves (enumeration, local search).
#[derive(Debug, Default, Clone)]
pub struct EigenWorkspace {
    a: Vec<f64>,
    d: Vec<f64>,
    e: Vec<f64>,
}

impl EigenWorkspace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Eigenvalues of the symmetric `n x n` row-major matrix `matrix`, sorted
    /// descending. Only the lower triangle is read.
    pub fn eigenvalues(&mut self, matrix: &[f64], n: usize) -> Result<&[f64]> {
        assert_eq!(matrix.len(), n * n, "matrix buffer does not match order");
        self.a.clear();
        self.a.extend_from_slice(matrix);
        self.d.resize(n, 0.0);
        self.e.resize(n, 0.0);
        if n == 0 {
            return Ok(&self.d[..0]);
        }
        tridiagonalize(&mut self.a, n, &mut self.d, &mut self.e);
        tridiagonal_ql(&mut self.d, &mut self.e)?;
        self.d.sort_unstable_by(|x, y| y.total_cmp(x));
        Ok(&self.d)
    }
}

/// Reduces the symmetric matrix `a` (lower triangle) to tridiagonal form.
/// On return `d` is the diagonal and `e[i]` couples rows `i-1` and `i`
/// (`e[0] = 0`). `a` is overwritten.
fn tridiagonalize(a: &mut [f64], n: usize, d: &mut [f64], e: &mut [f64]) {
    let at = |i: usize, j: usize| i * n + j;
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a[at(i, k)].abs()).sum();
            if scale == 0.0 {
                e[i] = a[at(i, l)];
            } else {
                for k in 0..=l {
                    a[at(i, k)] /= scale;
                    h += a[at(i, k)] * a[at(i, k)];
                }
                let f = a[at(i, l)];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[at(i, l)] = f - g;
                let mut f = 0.0;
                for j in 0..=l {
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[at(j, k)] * a[at(i, k)];
                    }
                    for k in j + 1..=l {
                        g += a[at(k, j)] * a[at(i, k)];
                    }
                    e[j] = g / h;
                    f += e[j] * a[at(i, j)];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[at(i, j)];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[at(j, k)] -= f * e[k] + g * a[at(i, k)];
                    }
                }
            }
        } else {
            e[i] = a[at(i, l)];
        }
        d[i] = h;
    }
    e[0] = 0.0;
    for i in 0..n {
        d[i] = a[at(i, i)];
    }
}

/// Implicit-shift QL on the tridiagonal `(d, e)`; eigenvalues land in `d`
/// (unsorted). `e` is destroyed.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    let budget = ITERATIONS_PER_ORDER * n;
    let mut spent = 0;
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    for l in 0..n {
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            spent += 1;
            if spent > budget {
                return Err(Error::NoConvergence { order: n, iterations: budget });
            }

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}
