//! Exact Poincaré polynomials and Betti numbers of moduli spaces of
//! parabolic stable bundles on a curve.
//!
//! The crate is layered bottom-up:
//!
//! * [`algebra`]: Laurent polynomials, factored rational functions and
//!   truncated Laurent series in one variable `t`, generic over an exact
//!   scalar.
//! * [`parabolic`]: quasi-parabolic data, partitions (intersection types)
//!   and the integer-valued functions attached to them.
//! * [`tilde`]: symbolic point counts over a finite field and the
//!   substitution that turns them into rational functions of `t`.
//! * [`engine`]: the closed formula, the closed form for the `Q` series,
//!   the Harder-Narasimhan recursion and the Siegel mass identity.
//! * [`rank2`]: an independent rank-2 formula used as an oracle.

pub mod algebra;
pub mod engine;
pub mod error;
pub mod parabolic;
pub mod rank2;
pub mod tilde;

pub use error::{Error, Result};

/// Exact rational scalar used by every formula in the crate.
pub type Rational = num_rational::BigRational;
/// Laurent polynomial in `t` over [`Rational`].
pub type Poly = algebra::LaurentPoly<Rational>;
/// Factored rational function in `t` over [`Rational`].
pub type RatFunc = algebra::FactoredRatFunc<Rational>;
/// Truncated Laurent series in `t` over [`Rational`].
pub type Series = algebra::LaurentSeries<Rational>;

pub use engine::{compare, compute, BettiResult, ComputeOptions, Method};
pub use parabolic::{Instance, ParabolicPoint, Partition, QuasiParabolicData};
pub use rank2::Rank2Profile;
