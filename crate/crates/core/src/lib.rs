//! Curves on a fibre surface, Dehn twists, and a rank-level Floer
//! derivation showing that a family of fibred knots `Kₙ` are not L-space
//! knots.
//!
//! Linear algebra is generic over [`Scalar`]; the aliases below fix the
//! scalar to arbitrary-precision integers.

pub mod certificate;
pub mod curve;
pub mod error;
pub mod expr;
pub mod floer;
pub mod homology;
mod intersection;
pub mod linalg;
pub mod mapping_class;
pub mod scalar;
pub mod standard;
pub mod surface;
mod twist;
pub mod word;

pub use certificate::{certify, cross_validate, replay, Certificate};
pub use curve::Curve;
pub use error::{Error, Result};
pub use floer::{RankInterval, Staircase, Verdict};
pub use homology::HomologyClass;
pub use mapping_class::{StandardCurveSystem, TwistWord};
pub use scalar::Scalar;
pub use surface::{Letter, SurfaceSpec};

pub use num_bigint::BigInt;

pub type IntMatrix = linalg::Matrix<BigInt>;
pub type HomologyMatrix = linalg::SymplecticMatrix<BigInt>;
pub type AlexanderPolynomial = linalg::LaurentPoly<BigInt>;
