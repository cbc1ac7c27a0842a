//! Exact one-variable algebra in `t`.
//!
//! Every type here is generic over a [`Coeff`] scalar. The rest of the crate
//! instantiates them with [`crate::Rational`]; machine-sized exact fields
//! such as `Ratio<i64>` also work for quick experiments.

mod poly;
mod ratfunc;
pub mod rational;
mod series;

pub use poly::{divide_exact, LaurentPoly, NonDivisible};
pub use ratfunc::{evaluate, expand_series, FactoredRatFunc, MAX_TRUNCATION};
pub use series::LaurentSeries;

use num_traits::{FromPrimitive, Num};
use std::fmt::Debug;
use std::ops::Neg;

/// Scalar field for polynomial and series coefficients.
///
/// Division is only ever used for exact quotients, so the scalar must be a
/// field in which `a / b` is exact.
pub trait Coeff: Clone + PartialEq + Debug + Num + Neg<Output = Self> + FromPrimitive + Send + Sync {
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer fits the coefficient type")
    }
}

impl<T> Coeff for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> + FromPrimitive + Send + Sync {}
