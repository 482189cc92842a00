//! Intrinsic volumes and curvature measures of symmetric cones.
//!
//! The crate computes the intrinsic-volume distribution of the cones of
//! positive semidefinite matrices over the reals, the complex numbers and
//! the quaternions, of Lorentz cones, orthants and finite products of
//! these, together with the curvature measures of the PSD rank strata.
//! From those tables it derives closed-form statistics of random
//! semidefinite programs (feasibility, unboundedness, solution rank) and
//! validates every prediction by Monte-Carlo experiments on random matrix
//! ensembles and random conic feasibility problems.
//!
//! Module map:
//! - [`algebra`]: quaternion arithmetic, Hermitian matrices, Gaussian
//!   ensembles, Jacobi eigensolvers and convex projections;
//! - [`symfun`]: Vandermonde determinants, elementary symmetric functions
//!   and the mixed coefficient family used by the moment integrals;
//! - [`integrals`]: Gaussian orthant integrals with four evaluation routes
//!   (exact termwise, ordered-cone quadrature, half-normal Monte Carlo,
//!   truncated-ensemble expectation);
//! - [`cones`]: curvature-measure tables, intrinsic-volume vectors and the
//!   product calculus;
//! - [`sdpstats`]: closed-form probabilities for random conic programs;
//! - [`mclab`]: reproducible Monte-Carlo experiments with statistical
//!   verdicts;
//! - [`reference`]: embedded closed-form reference values used by the
//!   self-check command and the test suites.

pub mod algebra;
pub mod cones;
pub mod error;
pub mod integrals;
pub mod mclab;
pub mod reference;
pub mod sdpstats;
pub mod symfun;

pub use error::{Error, Result};
