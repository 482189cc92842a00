//! Cyclic Jacobi eigensolvers for small dense matrices.
//!
//! Real symmetric and complex Hermitian matrices are diagonalized
//! directly; quaternion Hermitian matrices go through the standard
//! complex 2n-by-2n embedding, whose spectrum carries every true
//! eigenvalue twice, and the duplicates are paired back afterwards.

use num_complex::Complex64;

use super::hermitian::HermitianMatrix;
use super::{Beta, Quaternion};
use crate::error::{Error, Result};

const SWEEP_LIMIT: usize = 60;
const OFF_DIAG_TOL: f64 = 1e-15;
/// Relative gap allowed when pairing duplicated eigenvalues of the
/// quaternion embedding.
const PAIR_TOL: f64 = 1e-8;

/// Diagonalize a real symmetric matrix in place.
///
/// Returns unsorted eigenvalues and the orthogonal frame as a flat
/// row-major matrix whose columns are eigenvectors.
pub(crate) fn jacobi_real(mut a: Vec<f64>, n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    if n <= 1 {
        return (a, v);
    }
    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    if frob == 0.0 {
        return (vec![0.0; n], v);
    }
    let stop = (OFF_DIAG_TOL * frob).powi(2);
    for _ in 0..SWEEP_LIMIT {
        let off: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q] * a[p * n + q])
            .sum();
        if 2.0 * off <= stop {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau == 0.0 {
                    1.0
                } else {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let vals = (0..n).map(|i| a[i * n + i]).collect();
    (vals, v)
}

/// Diagonalize a complex Hermitian matrix in place; same contract as
/// [`jacobi_real`] with a unitary frame.
pub(crate) fn jacobi_complex(mut a: Vec<Complex64>, n: usize) -> (Vec<f64>, Vec<Complex64>) {
    let mut v = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        v[i * n + i] = Complex64::new(1.0, 0.0);
    }
    if n <= 1 {
        return (a.iter().map(|z| z.re).collect(), v);
    }
    let frob: f64 = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if frob == 0.0 {
        return (vec![0.0; n], v);
    }
    let stop = (OFF_DIAG_TOL * frob).powi(2);
    for _ in 0..SWEEP_LIMIT {
        let off: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q].norm_sqr())
            .sum();
        if 2.0 * off <= stop {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let h = a[p * n + q];
                let hn = h.norm();
                if hn == 0.0 {
                    continue;
                }
                // Unitary pivot: a phase turning the entry real followed by
                // a real Givens rotation annihilating it. With u = conj(h)/|h|
                // the combined transform is
                //   U[p][p] = c, U[p][q] = s, U[q][p] = -u s, U[q][q] = u c.
                let u = h.conj() / hn;
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let tau = (aqq - app) / (2.0 * hn);
                let t = if tau == 0.0 {
                    1.0
                } else {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let us = u * s;
                let uc = u * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - us * akq;
                    a[k * n + q] = s * akp + uc * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - us.conj() * aqk;
                    a[q * n + k] = s * apk + uc.conj() * aqk;
                }
                a[p * n + q] = Complex64::new(0.0, 0.0);
                a[q * n + p] = Complex64::new(0.0, 0.0);
                a[p * n + p] = Complex64::new(app - t * hn, 0.0);
                a[q * n + q] = Complex64::new(aqq + t * hn, 0.0);
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - us * vkq;
                    v[k * n + q] = s * vkp + uc * vkq;
                }
            }
        }
    }
    let vals = (0..n).map(|i| a[i * n + i].re).collect();
    (vals, v)
}

/// Eigendecomposition of a Hermitian matrix in a form that supports
/// spectral transforms (clamp, simplex projection) and recomposition.
pub(crate) struct SpectralForm {
    beta: Beta,
    n: usize,
    frame: Frame,
    /// Raw eigenvalues aligned with frame columns (2n entries for beta=4).
    raw: Vec<f64>,
    /// Raw indices grouped per true eigenvalue, aligned with `values`.
    groups: Vec<Vec<usize>>,
    /// Deduplicated true eigenvalues, descending.
    values: Vec<f64>,
}

pub(crate) enum Frame {
    Real(Vec<f64>),
    Complex(Vec<Complex64>),
}

impl SpectralForm {
    pub fn compute(m: &HermitianMatrix) -> Result<SpectralForm> {
        let beta = m.beta();
        let n = m.n();
        match beta {
            Beta::One => {
                let flat: Vec<f64> = (0..n * n).map(|i| m.raw(i).w).collect();
                let (raw, v) = jacobi_real(flat, n);
                let order = descending_order(&raw);
                Ok(SpectralForm {
                    beta,
                    n,
                    frame: Frame::Real(v),
                    values: order.iter().map(|&i| raw[i]).collect(),
                    groups: order.iter().map(|&i| vec![i]).collect(),
                    raw,
                })
            }
            Beta::Two => {
                let flat: Vec<Complex64> = (0..n * n)
                    .map(|i| Complex64::new(m.raw(i).w, m.raw(i).x))
                    .collect();
                let (raw, v) = jacobi_complex(flat, n);
                let order = descending_order(&raw);
                Ok(SpectralForm {
                    beta,
                    n,
                    frame: Frame::Complex(v),
                    values: order.iter().map(|&i| raw[i]).collect(),
                    groups: order.iter().map(|&i| vec![i]).collect(),
                    raw,
                })
            }
            Beta::Four => {
                let emb = complex_embedding(m);
                let (raw, v) = jacobi_complex(emb, 2 * n);
                let mut order = descending_order(&raw);
                let scale = raw.iter().fold(1.0f64, |acc, x| acc.max(x.abs()));
                let mut groups = Vec::with_capacity(n);
                let mut values = Vec::with_capacity(n);
                while order.len() >= 2 {
                    let i = order[0];
                    let j = order[1];
                    let gap = (raw[i] - raw[j]).abs();
                    if gap > PAIR_TOL * scale {
                        return Err(Error::integrity(format!(
                            "quaternion embedding produced an unpaired eigenvalue \
                             (gap {gap:.3e} at value {:.6e})",
                            raw[i]
                        )));
                    }
                    values.push(0.5 * (raw[i] + raw[j]));
                    groups.push(vec![i, j]);
                    order.drain(0..2);
                }
                Ok(SpectralForm {
                    beta,
                    n,
                    frame: Frame::Complex(v),
                    values,
                    groups,
                    raw,
                })
            }
        }
    }

    /// True eigenvalues, descending.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Rebuild a Hermitian matrix with the spectrum replaced entrywise;
    /// `new_values` is aligned with [`Self::values`].
    pub fn recompose(&self, new_values: &[f64]) -> HermitianMatrix {
        assert_eq!(new_values.len(), self.values.len());
        let mut raw = self.raw.clone();
        for (group, &val) in self.groups.iter().zip(new_values) {
            for &i in group {
                raw[i] = val;
            }
        }
        match (&self.frame, self.beta) {
            (Frame::Real(v), _) => {
                let n = self.n;
                let mut out = HermitianMatrix::zero(self.beta, n);
                for i in 0..n {
                    for j in i..n {
                        let mut acc = 0.0;
                        for k in 0..n {
                            acc += v[i * n + k] * raw[k] * v[j * n + k];
                        }
                        out.write_pair(i, j, Quaternion::real(acc));
                    }
                }
                out
            }
            (Frame::Complex(v), Beta::Two) => {
                let n = self.n;
                let mut out = HermitianMatrix::zero(self.beta, n);
                for i in 0..n {
                    for j in i..n {
                        let mut acc = Complex64::new(0.0, 0.0);
                        for k in 0..n {
                            acc += v[i * n + k] * raw[k] * v[j * n + k].conj();
                        }
                        if i == j {
                            out.write_pair(i, j, Quaternion::real(acc.re));
                        } else {
                            out.write_pair(i, j, Quaternion::complex(acc.re, acc.im));
                        }
                    }
                }
                out
            }
            (Frame::Complex(v), Beta::Four) => {
                let n = self.n;
                let m = 2 * n;
                // P = V diag(raw) V^dagger on the embedding side.
                let mut p = vec![Complex64::new(0.0, 0.0); m * m];
                for i in 0..m {
                    for j in 0..m {
                        let mut acc = Complex64::new(0.0, 0.0);
                        for k in 0..m {
                            acc += v[i * m + k] * raw[k] * v[j * m + k].conj();
                        }
                        p[i * m + j] = acc;
                    }
                }
                quaternion_from_embedding(&p, n)
            }
            (Frame::Complex(_), Beta::One) => unreachable!("real matrices use a real frame"),
        }
    }
}

fn descending_order(vals: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..vals.len()).collect();
    idx.sort_by(|&a, &b| vals[b].partial_cmp(&vals[a]).unwrap());
    idx
}

/// Standard embedding of a quaternion matrix `A + Bj` (A, B complex) as
/// the complex matrix `[[A, B], [-conj(B), conj(A)]]`.
pub(crate) fn complex_embedding(m: &HermitianMatrix) -> Vec<Complex64> {
    let n = m.n();
    let size = 2 * n;
    let mut out = vec![Complex64::new(0.0, 0.0); size * size];
    for i in 0..n {
        for j in 0..n {
            let q = m.raw(i * n + j);
            let a = Complex64::new(q.w, q.x);
            let b = Complex64::new(q.y, q.z);
            out[i * size + j] = a;
            out[i * size + (n + j)] = b;
            out[(n + i) * size + j] = -b.conj();
            out[(n + i) * size + (n + j)] = a.conj();
        }
    }
    out
}

/// Inverse of [`complex_embedding`] with symmetrization of the numerical
/// block structure, followed by exact re-Hermitization.
fn quaternion_from_embedding(p: &[Complex64], n: usize) -> HermitianMatrix {
    let m = 2 * n;
    let mut out = HermitianMatrix::zero(Beta::Four, n);
    for i in 0..n {
        for j in i..n {
            let a = 0.5 * (p[i * m + j] + p[(n + i) * m + (n + j)].conj());
            let b = 0.5 * (p[i * m + (n + j)] - p[(n + i) * m + j].conj());
            let here = Quaternion::new(a.re, a.im, b.re, b.im);
            // Mirror entry, mapped through conjugate symmetry.
            let am = 0.5 * (p[j * m + i] + p[(n + j) * m + (n + i)].conj());
            let bm = 0.5 * (p[j * m + (n + i)] - p[(n + j) * m + i].conj());
            let mirror = Quaternion::new(am.re, am.im, bm.re, bm.im);
            let q = (here + mirror.conj()).scale(0.5);
            let q = if i == j { Quaternion::real(q.w) } else { q };
            out.write_pair(i, j, q);
        }
    }
    out
}
