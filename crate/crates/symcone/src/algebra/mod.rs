//! Hermitian matrices over the reals, complex numbers and quaternions:
//! arithmetic, Gaussian ensembles, eigendecomposition and the convex
//! projections used by the experiment drivers.

mod eigen;
mod hermitian;
mod quaternion;

pub use hermitian::{
    inner, positive_index, project_psd, project_spectrahedron, sample_gbe, HermitianMatrix,
    Spectrum,
};
pub use quaternion::Quaternion;

use crate::error::Error;

/// Ground (skew) field selector: 1 = reals, 2 = complex, 4 = quaternions.
///
/// The value doubles as the Dyson index of the matching Gaussian ensemble
/// (GOE / GUE / GSE).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Beta {
    One,
    Two,
    Four,
}

impl Beta {
    pub const ALL: [Beta; 3] = [Beta::One, Beta::Two, Beta::Four];

    pub fn value(self) -> usize {
        match self {
            Beta::One => 1,
            Beta::Two => 2,
            Beta::Four => 4,
        }
    }

    /// Real dimension of the space of n-by-n Hermitian matrices,
    /// `n + beta * n(n-1)/2`.
    pub fn ambient_dim(self, n: usize) -> usize {
        n + self.value() * n * (n - 1) / 2
    }

    /// Whether the entry lies in the ground field for this beta.
    pub fn admits(self, q: Quaternion) -> bool {
        match self {
            Beta::One => q.x == 0.0 && q.y == 0.0 && q.z == 0.0,
            Beta::Two => q.y == 0.0 && q.z == 0.0,
            Beta::Four => true,
        }
    }

    /// Number of independent real coordinates per off-diagonal entry.
    pub fn components(self) -> usize {
        self.value()
    }
}

impl TryFrom<u8> for Beta {
    type Error = Error;
    fn try_from(v: u8) -> Result<Self, Error> {
        match v {
            1 => Ok(Beta::One),
            2 => Ok(Beta::Two),
            4 => Ok(Beta::Four),
            other => Err(Error::Parameter(format!(
                "beta must be one of 1, 2, 4 (got {other})"
            ))),
        }
    }
}

impl From<Beta> for u8 {
    fn from(b: Beta) -> u8 {
        b.value() as u8
    }
}

impl std::fmt::Display for Beta {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ambient_dims() {
        assert_eq!(Beta::One.ambient_dim(3), 6);
        assert_eq!(Beta::Two.ambient_dim(3), 9);
        assert_eq!(Beta::Four.ambient_dim(3), 15);
        assert_eq!(Beta::Four.ambient_dim(1), 1);
    }

    #[test]
    fn beta_parsing() {
        assert!(Beta::try_from(3u8).is_err());
        assert_eq!(Beta::try_from(4u8).unwrap(), Beta::Four);
    }
}
