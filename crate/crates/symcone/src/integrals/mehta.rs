use statrs::function::gamma::gamma;

use crate::algebra::Beta;
use crate::error::{Error, Result};

/// Mehta's integral `F_n(beta/2)`: the Gaussian integral of
/// `|Delta(z)|^beta` over R^n, as a Gamma-function product.
///
/// Both closed forms are evaluated and must agree; disagreement marks a
/// broken Gamma implementation and is reported as an integrity error.
pub fn mehta_f(beta: Beta, n: usize) -> Result<f64> {
    if n == 0 {
        return Ok(1.0);
    }
    let b = beta.value() as f64;
    let mut prod_a = 1.0f64;
    let mut prod_b = 1.0f64;
    for j in 1..=n {
        prod_a *= gamma(1.0 + j as f64 * b / 2.0) / gamma(1.0 + b / 2.0);
        prod_b *= gamma(j as f64 * b / 2.0) / gamma(b / 2.0);
        if !prod_a.is_finite() || !prod_b.is_finite() {
            return Err(Error::range(format!(
                "Mehta product overflows f64 at beta={beta}, n={n}"
            )));
        }
    }
    let fact: f64 = (1..=n).map(|j| j as f64).product();
    if !fact.is_finite() || !(fact * prod_b).is_finite() {
        return Err(Error::range(format!(
            "Mehta product overflows f64 at beta={beta}, n={n}"
        )));
    }
    let alt = fact * prod_b;
    if (prod_a - alt).abs() > 1e-12 * prod_a.abs() {
        return Err(Error::integrity(format!(
            "Mehta product forms disagree: {prod_a} vs {alt}"
        )));
    }
    Ok(prod_a)
}

/// Gaussian half-line monomial moment
/// `M(p) = int_0^inf z^p e^{-z^2/2} dz = 2^((p-1)/2) Gamma((p+1)/2)`.
pub fn gaussian_halfline_moment(p: u32) -> f64 {
    2f64.powf((p as f64 - 1.0) / 2.0) * gamma((p as f64 + 1.0) / 2.0)
}
