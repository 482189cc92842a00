//! Vandermonde determinants, elementary symmetric functions and the
//! mixed coefficient family obtained by splitting a power of the
//! Vandermonde across two variable groups.

use crate::algebra::Beta;

/// Product of pairwise differences `prod_{i<j} (v_i - v_j)`.
/// Empty and singleton inputs give the empty product 1.
pub fn vandermonde(values: &[f64]) -> f64 {
    let mut p = 1.0;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            p *= values[i] - values[j];
        }
    }
    p
}

/// All elementary symmetric functions `(sigma_0, ..., sigma_N)` of the
/// input, by the stable one-factor-at-a-time recurrence.
pub fn elem_sym_all(values: &[f64]) -> Vec<f64> {
    let mut e = vec![0.0; values.len() + 1];
    e[0] = 1.0;
    for (m, &v) in values.iter().enumerate() {
        for k in (1..=m + 1).rev() {
            e[k] += v * e[k - 1];
        }
    }
    e
}

/// The coefficient family of the two-group Vandermonde split: entry `k`
/// holds the coefficient of `t^k` in `prod_{i,j} (t x_i + y_j)^beta`,
/// i.e. the part of `prod (x_i + y_j)^beta` that is homogeneous of degree
/// `k` in the `x` group.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVector {
    pub beta: Beta,
    /// Length of the x group.
    pub r: usize,
    /// Length of the y group.
    pub s: usize,
    /// `beta * r * s + 1` coefficients, index k holding the degree-k part.
    pub coeffs: Vec<f64>,
}

impl CoeffVector {
    pub fn degree(&self) -> usize {
        self.beta.value() * self.r * self.s
    }

    /// Total of all coefficients, i.e. the product evaluated at t = 1.
    pub fn sum(&self) -> f64 {
        self.coeffs.iter().sum()
    }
}

/// Expand `prod_{i,j} (t x_i + y_j)^beta` by convolving the linear
/// factors. Division-free, so zeros anywhere in `y` are legal. Factors
/// are multiplied in ascending |x_i| order to limit intermediate growth.
pub fn f_coeffs(x: &[f64], y: &[f64], beta: Beta) -> CoeffVector {
    let r = x.len();
    let s = y.len();
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&a, &b| x[a].abs().partial_cmp(&x[b].abs()).unwrap());
    let mut coeffs = Vec::with_capacity(beta.value() * r * s + 1);
    coeffs.push(1.0);
    for &i in &order {
        for &yj in y {
            for _ in 0..beta.value() {
                convolve_linear(&mut coeffs, x[i], yj);
            }
        }
    }
    CoeffVector { beta, r, s, coeffs }
}

/// Multiply the polynomial in place by `(a t + b)`.
pub(crate) fn convolve_linear(coeffs: &mut Vec<f64>, a: f64, b: f64) {
    coeffs.push(0.0);
    for k in (1..coeffs.len()).rev() {
        coeffs[k] = b * coeffs[k] + a * coeffs[k - 1];
    }
    coeffs[0] *= b;
}

/// Evaluate just the degree-k coefficient family member at the given
/// eigenvalue groups.
pub fn f_coeff(x: &[f64], y: &[f64], beta: Beta, k: usize) -> f64 {
    let c = f_coeffs(x, y, beta);
    c.coeffs.get(k).copied().unwrap_or(0.0)
}
