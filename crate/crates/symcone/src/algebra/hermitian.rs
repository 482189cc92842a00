use rand::Rng;
use rand_distr::StandardNormal;

use super::eigen::SpectralForm;
use super::{Beta, Quaternion};
use crate::error::{Error, Result};

/// Default relative threshold for counting an eigenvalue as positive.
/// Eigenvalue-zero events have probability zero under the Gaussian
/// ensembles, so any tiny relative cutoff is statistically safe.
pub const DEFAULT_POSITIVE_EPS: f64 = 1e-10;

/// An element of the real vector space of n-by-n Hermitian matrices over
/// the ground field selected by `beta`.
///
/// Storage is a dense row-major grid of quaternions; entries below the
/// diagonal always hold the conjugate of their mirror and the diagonal is
/// real, so the struct represents exactly the Hermitian subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    beta: Beta,
    n: usize,
    data: Vec<Quaternion>,
}

impl HermitianMatrix {
    pub fn zero(beta: Beta, n: usize) -> Self {
        HermitianMatrix {
            beta,
            n,
            data: vec![Quaternion::ZERO; n * n],
        }
    }

    pub fn identity(beta: Beta, n: usize) -> Self {
        let mut m = Self::zero(beta, n);
        for i in 0..n {
            m.data[i * n + i] = Quaternion::ONE;
        }
        m
    }

    pub fn diagonal(beta: Beta, values: &[f64]) -> Self {
        let n = values.len();
        let mut m = Self::zero(beta, n);
        for (i, &v) in values.iter().enumerate() {
            m.data[i * n + i] = Quaternion::real(v);
        }
        m
    }

    /// Build from a full grid of entries, validating the Hermitian storage
    /// invariant and the ground-field constraint.
    pub fn from_entries(beta: Beta, n: usize, entries: Vec<Quaternion>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::parameter(format!(
                "expected {} entries for n = {n}, got {}",
                n * n,
                entries.len()
            )));
        }
        let m = HermitianMatrix {
            beta,
            n,
            data: entries,
        };
        m.check_integrity()?;
        Ok(m)
    }

    pub fn beta(&self) -> Beta {
        self.beta
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Real dimension of the ambient Hermitian space.
    pub fn ambient_dim(&self) -> usize {
        self.beta.ambient_dim(self.n)
    }

    pub fn entry(&self, i: usize, j: usize) -> Quaternion {
        self.data[i * self.n + j]
    }

    /// Set entry (i, j) and its conjugate mirror. Diagonal entries must be
    /// real and every entry must lie in the ground field.
    pub fn set_entry(&mut self, i: usize, j: usize, q: Quaternion) -> Result<()> {
        if !self.beta.admits(q) {
            return Err(Error::parameter(format!(
                "entry has components outside the beta={} ground field",
                self.beta
            )));
        }
        if i == j && !q.is_real() {
            return Err(Error::parameter("diagonal entries must be real"));
        }
        self.data[i * self.n + j] = q;
        self.data[j * self.n + i] = q.conj();
        Ok(())
    }

    pub(crate) fn raw(&self, idx: usize) -> Quaternion {
        self.data[idx]
    }

    /// Write (i, j) and its mirror without field validation; internal
    /// recomposition paths guarantee the invariant by construction.
    pub(crate) fn write_pair(&mut self, i: usize, j: usize, q: Quaternion) {
        let q = match (self.beta, i == j) {
            (_, true) => Quaternion::real(q.w),
            (Beta::One, false) => Quaternion::real(q.w),
            (Beta::Two, false) => Quaternion::complex(q.w, q.x),
            (Beta::Four, false) => q,
        };
        self.data[i * self.n + j] = q;
        self.data[j * self.n + i] = q.conj();
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.data[i * self.n + i].w).sum()
    }

    /// Verify the storage invariant; violations are integrity errors.
    pub fn check_integrity(&self) -> Result<()> {
        for i in 0..self.n {
            for j in 0..self.n {
                let q = self.data[i * self.n + j];
                if !self.beta.admits(q) {
                    return Err(Error::integrity(format!(
                        "entry ({i},{j}) leaves the beta={} ground field",
                        self.beta
                    )));
                }
                if (q - self.data[j * self.n + i].conj()).norm() != 0.0 {
                    return Err(Error::integrity(format!(
                        "entries ({i},{j}) and ({j},{i}) are not conjugate mirrors"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: f64) -> Self {
        HermitianMatrix {
            beta: self.beta,
            n: self.n,
            data: self.data.iter().map(|q| q.scale(c)).collect(),
        }
    }

    /// self += c * other (same shape assumed).
    pub fn axpy(&mut self, c: f64, other: &Self) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a = *a + b.scale(c);
        }
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
    }

    fn zip(&self, other: &Self, f: impl Fn(Quaternion, Quaternion) -> Quaternion) -> Self {
        debug_assert_eq!(self.n, other.n);
        debug_assert_eq!(self.beta, other.beta);
        HermitianMatrix {
            beta: self.beta,
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn eigenvalues(&self) -> Result<Spectrum> {
        eigenvalues(self)
    }
}

/// All real eigenvalues, sorted in non-increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub(crate) fn from_descending(values: Vec<f64>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Draw a matrix from the Gaussian ensemble GOE/GUE/GSE: the standard
/// normal distribution on Hermitian space under the trace inner product.
/// Diagonal entries are N(0, 1); every independent real coordinate of an
/// off-diagonal entry is N(0, 1/2).
pub fn sample_gbe<R: Rng + ?Sized>(beta: Beta, n: usize, rng: &mut R) -> HermitianMatrix {
    let mut m = HermitianMatrix::zero(beta, n);
    let off_sigma = 0.5f64.sqrt();
    for i in 0..n {
        let d: f64 = rng.sample(StandardNormal);
        m.data[i * n + i] = Quaternion::real(d);
        for j in i + 1..n {
            let mut q = Quaternion::ZERO;
            q.w = off_sigma * rng.sample::<f64, _>(StandardNormal);
            if beta.components() >= 2 {
                q.x = off_sigma * rng.sample::<f64, _>(StandardNormal);
            }
            if beta.components() == 4 {
                q.y = off_sigma * rng.sample::<f64, _>(StandardNormal);
                q.z = off_sigma * rng.sample::<f64, _>(StandardNormal);
            }
            m.data[i * n + j] = q;
            m.data[j * n + i] = q.conj();
        }
    }
    m
}

/// Trace inner product `Re tr(A^dagger B)`; symmetric and bilinear.
pub fn inner(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<f64> {
    if a.beta != b.beta || a.n != b.n {
        return Err(Error::parameter(format!(
            "shape mismatch: ({}, n={}) vs ({}, n={})",
            a.beta, a.n, b.beta, b.n
        )));
    }
    Ok(a.data.iter().zip(&b.data).map(|(&p, &q)| p.dot(q)).sum())
}

/// All eigenvalues of a Hermitian matrix, descending. For beta=4 the
/// complex embedding duplicates every eigenvalue; the pairs are collapsed
/// back to exactly n values.
pub fn eigenvalues(a: &HermitianMatrix) -> Result<Spectrum> {
    a.check_integrity()?;
    let form = SpectralForm::compute(a)?;
    Ok(Spectrum::from_descending(form.values().to_vec()))
}

/// Metric projection onto the PSD cone: clamp negative eigenvalues to 0.
pub fn project_psd(a: &HermitianMatrix) -> Result<HermitianMatrix> {
    let form = SpectralForm::compute(a)?;
    let clamped: Vec<f64> = form.values().iter().map(|&v| v.max(0.0)).collect();
    Ok(form.recompose(&clamped))
}

/// Metric projection onto the unit-trace spectrahedron {X PSD, tr X = 1}:
/// eigendecompose, project the spectrum onto the standard simplex,
/// recompose.
pub fn project_spectrahedron(a: &HermitianMatrix) -> Result<HermitianMatrix> {
    let form = SpectralForm::compute(a)?;
    let projected = simplex_project(form.values());
    Ok(form.recompose(&projected))
}

/// Number of eigenvalues strictly greater than `eps * max(1, |lambda|_max)`.
pub fn positive_index(a: &HermitianMatrix, eps: f64) -> Result<usize> {
    let spec = eigenvalues(a)?;
    let scale = spec
        .values()
        .iter()
        .fold(1.0f64, |acc, v| acc.max(v.abs()));
    Ok(spec.values().iter().filter(|&&v| v > eps * scale).count())
}

/// Euclidean projection of a descending vector onto the standard simplex
/// {p >= 0, sum p = 1} by the running-threshold rule.
fn simplex_project(desc: &[f64]) -> Vec<f64> {
    let n = desc.len();
    let mut cum = 0.0;
    let mut theta = 0.0;
    let mut support = 0;
    for (k, &v) in desc.iter().enumerate() {
        cum += v;
        let candidate = (cum - 1.0) / (k + 1) as f64;
        if v - candidate > 0.0 {
            theta = candidate;
            support = k + 1;
        }
    }
    debug_assert!(support > 0);
    desc.iter()
        .enumerate()
        .map(|(k, &v)| if k < support { v - theta } else { 0.0 })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn inner_identity_is_n() {
        for beta in Beta::ALL {
            let id = HermitianMatrix::identity(beta, 3);
            assert_relative_eq!(inner(&id, &id).unwrap(), 3.0);
        }
    }

    #[test]
    fn inner_symmetric_offdiag() {
        // A = B = E_12 + E_21 over the reals.
        let mut a = HermitianMatrix::zero(Beta::One, 2);
        a.set_entry(0, 1, Quaternion::real(1.0)).unwrap();
        assert_relative_eq!(inner(&a, &a).unwrap(), 2.0);
    }

    #[test]
    fn inner_diagonal_example() {
        let a = HermitianMatrix::diagonal(Beta::One, &[1.0, 2.0]);
        let b = HermitianMatrix::diagonal(Beta::One, &[3.0, -1.0]);
        assert_relative_eq!(inner(&a, &b).unwrap(), 1.0);
    }

    #[test]
    fn inner_rejects_mismatch() {
        let a = HermitianMatrix::identity(Beta::One, 2);
        let b = HermitianMatrix::identity(Beta::Two, 2);
        assert!(matches!(inner(&a, &b), Err(Error::Parameter(_))));
    }

    #[test]
    fn eigenvalues_2x2_real() {
        let mut a = HermitianMatrix::diagonal(Beta::One, &[2.0, 2.0]);
        a.set_entry(0, 1, Quaternion::real(1.0)).unwrap();
        let s = eigenvalues(&a).unwrap();
        assert_relative_eq!(s.values()[0], 3.0, epsilon = 1e-12);
        assert_relative_eq!(s.values()[1], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn eigenvalues_identity() {
        let s = eigenvalues(&HermitianMatrix::identity(Beta::One, 4)).unwrap();
        for &v in s.values() {
            assert_relative_eq!(v, 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn eigenvalues_quaternion_1x1() {
        let a = HermitianMatrix::diagonal(Beta::Four, &[5.0]);
        let s = eigenvalues(&a).unwrap();
        assert_eq!(s.len(), 1);
        assert_relative_eq!(s.values()[0], 5.0, epsilon = 1e-14);
    }

    #[test]
    fn eigen_reconstruction_random() {
        // Eigenvalue sums reproduce trace and squared norm.
        let mut r = rng(11);
        for beta in Beta::ALL {
            for n in 1..=4 {
                for _ in 0..20 {
                    let a = sample_gbe(beta, n, &mut r);
                    let s = eigenvalues(&a).unwrap();
                    let sum: f64 = s.values().iter().sum();
                    let sq: f64 = s.values().iter().map(|v| v * v).sum();
                    assert_relative_eq!(sum, a.trace(), epsilon = 1e-9);
                    assert_relative_eq!(sq, inner(&a, &a).unwrap(), epsilon = 1e-9);
                }
            }
        }
    }

    #[test]
    fn eigen_quaternion_against_known() {
        // Quaternion 2x2 with off-diagonal q: eigenvalues of
        // [[a, q], [conj(q), b]] are the roots of
        // t^2 - (a+b) t + ab - |q|^2.
        let mut a = HermitianMatrix::diagonal(Beta::Four, &[1.0, -2.0]);
        a.set_entry(0, 1, Quaternion::new(0.3, -0.4, 0.5, 0.1)).unwrap();
        let qn2 = a.entry(0, 1).norm_sqr();
        let disc = ((1.0f64 + 2.0) / 2.0).powi(2) + qn2;
        let mid = (1.0 - 2.0) / 2.0;
        let s = eigenvalues(&a).unwrap();
        assert_relative_eq!(s.values()[0], mid + disc.sqrt(), epsilon = 1e-12);
        assert_relative_eq!(s.values()[1], mid - disc.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn project_psd_examples() {
        let a = HermitianMatrix::diagonal(Beta::One, &[1.0, -1.0]);
        let p = project_psd(&a).unwrap();
        assert_relative_eq!(p.entry(0, 0).w, 1.0, epsilon = 1e-12);
        assert_relative_eq!(p.entry(1, 1).w, 0.0, epsilon = 1e-12);

        let mut r = rng(5);
        for beta in Beta::ALL {
            let a = sample_gbe(beta, 3, &mut r);
            let p = project_psd(&a).unwrap();
            // Projection fixes the cone.
            let pp = project_psd(&p).unwrap();
            assert!(pp.sub(&p).norm() <= 1e-10 * (1.0 + p.norm()));
            // Result is PSD.
            let s = eigenvalues(&p).unwrap();
            assert!(s.values().iter().all(|&v| v >= -1e-10));
        }
    }

    #[test]
    fn projection_variational_inequality() {
        // inner(A - P(A), B - P(A)) <= 0 for PSD B, up to tolerance.
        let mut r = rng(7);
        for beta in Beta::ALL {
            for _ in 0..25 {
                let a = sample_gbe(beta, 3, &mut r);
                let pa = project_psd(&a).unwrap();
                let b = project_psd(&sample_gbe(beta, 3, &mut r)).unwrap();
                let lhs = inner(&a.sub(&pa), &b.sub(&pa)).unwrap();
                assert!(lhs <= 1e-8, "variational inequality violated: {lhs}");
            }
        }
    }

    #[test]
    fn spectrahedron_examples() {
        let a = HermitianMatrix::diagonal(Beta::One, &[0.5, 0.8]);
        let p = project_spectrahedron(&a).unwrap();
        let mut vals = [p.entry(0, 0).w, p.entry(1, 1).w];
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_relative_eq!(vals[0], 0.35, epsilon = 1e-12);
        assert_relative_eq!(vals[1], 0.65, epsilon = 1e-12);

        let b = HermitianMatrix::diagonal(Beta::One, &[2.0, -1.0]);
        let pb = project_spectrahedron(&b).unwrap();
        assert_relative_eq!(pb.entry(0, 0).w, 1.0, epsilon = 1e-12);
        assert_relative_eq!(pb.entry(1, 1).w, 0.0, epsilon = 1e-12);

        // Fixed point on the spectrahedron.
        let mut r = rng(3);
        let x = project_spectrahedron(&sample_gbe(Beta::Two, 3, &mut r)).unwrap();
        let px = project_spectrahedron(&x).unwrap();
        assert!(px.sub(&x).norm() <= 1e-10);
        assert_relative_eq!(x.trace(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn simplex_projection_matches_enumeration_oracle() {
        // Brute-force oracle: try every support size, keep the feasible
        // candidate; this is the exact KKT enumeration for the simplex.
        fn oracle(desc: &[f64]) -> Vec<f64> {
            let n = desc.len();
            let mut best: Option<(f64, Vec<f64>)> = None;
            for support in 1..=n {
                let sum: f64 = desc[..support].iter().sum();
                let theta = (sum - 1.0) / support as f64;
                let cand: Vec<f64> = desc
                    .iter()
                    .enumerate()
                    .map(|(k, &v)| if k < support { v - theta } else { 0.0 })
                    .collect();
                if cand.iter().any(|&c| c < 0.0) {
                    continue;
                }
                let dist: f64 = cand
                    .iter()
                    .zip(desc)
                    .map(|(c, v)| (c - v) * (c - v))
                    .sum();
                if best.as_ref().map(|(d, _)| dist < *d).unwrap_or(true) {
                    best = Some((dist, cand));
                }
            }
            best.unwrap().1
        }
        let mut r = rng(13);
        for _ in 0..200 {
            let mut vals: Vec<f64> = (0..4)
                .map(|_| r.sample::<f64, _>(StandardNormal) * 2.0)
                .collect();
            vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
            let got = simplex_project(&vals);
            let want = oracle(&vals);
            for (g, w) in got.iter().zip(&want) {
                assert_relative_eq!(g, w, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn positive_index_examples() {
        let a = HermitianMatrix::diagonal(Beta::One, &[3.0, 0.0, -1.0]);
        assert_eq!(positive_index(&a, 1e-10).unwrap(), 1);
        assert_eq!(
            positive_index(&HermitianMatrix::identity(Beta::One, 3), DEFAULT_POSITIVE_EPS)
                .unwrap(),
            3
        );
        assert_eq!(
            positive_index(&HermitianMatrix::zero(Beta::Two, 2), DEFAULT_POSITIVE_EPS).unwrap(),
            0
        );
    }

    #[test]
    fn gbe_one_by_one_moments() {
        let mut r = rng(42);
        let samples = 100_000;
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for _ in 0..samples {
            let a = sample_gbe(Beta::One, 1, &mut r);
            let v = a.entry(0, 0).w;
            sum += v;
            sumsq += v * v;
        }
        let mean = sum / samples as f64;
        let var = sumsq / samples as f64 - mean * mean;
        assert!(mean.abs() < 0.02, "mean {mean}");
        assert!((var - 1.0).abs() < 0.02, "var {var}");
    }

    #[test]
    fn gbe_offdiagonal_variance() {
        let mut r = rng(43);
        let samples = 100_000;
        let mut sumsq = 0.0;
        for _ in 0..samples {
            let a = sample_gbe(Beta::One, 2, &mut r);
            let v = a.entry(0, 1).w;
            sumsq += v * v;
        }
        let var = sumsq / samples as f64;
        assert!((var - 0.5).abs() < 0.02, "off-diagonal variance {var}");
    }

    #[test]
    fn gbe_expected_squared_norm_is_ambient_dim() {
        let mut r = rng(44);
        for beta in Beta::ALL {
            let n = 3;
            let d = beta.ambient_dim(n) as f64;
            let samples = 100_000;
            let mut acc = 0.0;
            for _ in 0..samples {
                let a = sample_gbe(beta, n, &mut r);
                acc += inner(&a, &a).unwrap();
            }
            let mean = acc / samples as f64;
            assert!(
                (mean - d).abs() < 0.01 * d,
                "beta={beta}: E|A|^2 = {mean}, want {d}"
            );
        }
    }

    #[test]
    fn gbe_gap_distribution_matches_theory() {
        // The eigenvalue gap of the 2x2 real ensemble has the law of
        // sqrt(2) * Rayleigh(1); a two-sample KS test compares the sampler
        // (through the eigensolver) with direct draws from that law.
        let mut r = rng(45);
        let m = 100_000;
        let mut gaps: Vec<f64> = (0..m)
            .map(|_| {
                let a = sample_gbe(Beta::One, 2, &mut r);
                let s = eigenvalues(&a).unwrap();
                s.values()[0] - s.values()[1]
            })
            .collect();
        let mut oracle: Vec<f64> = (0..m)
            .map(|_| {
                let u: f64 = r.random::<f64>();
                (2.0f64).sqrt() * (-2.0 * (1.0 - u).ln()).sqrt()
            })
            .collect();
        gaps.sort_by(|a, b| a.partial_cmp(b).unwrap());
        oracle.sort_by(|a, b| a.partial_cmp(b).unwrap());
        // two-sample KS statistic
        let (mut i, mut j, mut d) = (0usize, 0usize, 0.0f64);
        while i < m && j < m {
            if gaps[i] <= oracle[j] {
                i += 1;
            } else {
                j += 1;
            }
            let f1 = i as f64 / m as f64;
            let f2 = j as f64 / m as f64;
            d = d.max((f1 - f2).abs());
        }
        // 1% critical value: 1.628 * sqrt((m + m) / (m * m))
        let crit = 1.628 * (2.0 / m as f64).sqrt();
        assert!(d < crit, "KS statistic {d} exceeds critical value {crit}");
    }
}
