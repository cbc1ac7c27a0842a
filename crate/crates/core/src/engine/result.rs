use super::Method;
use crate::algebra::rational::to_i64;
use crate::{Error, Poly, Result, Series};
use num_traits::ToPrimitive;

/// A Poincaré polynomial with its Betti numbers.
#[derive(Clone, Debug, PartialEq)]
pub struct BettiResult {
    /// Complex dimension of the moduli space.
    pub dim: i64,
    pub poly: Poly,
    /// `b_0 ..= b_(2 dim)`; empty when `dim < 0`.
    pub betti: Vec<u64>,
    pub empty: bool,
    pub ss_eq_stable: bool,
    pub method: Method,
}

impl BettiResult {
    /// Validates that `poly` lives in degrees `0..=2 dim` with non-negative
    /// integer coefficients.
    pub fn from_poly(poly: Poly, dim: i64, method: Method, ss_eq_stable: bool) -> Result<Self> {
        let len = if dim >= 0 { (2 * dim + 1) as usize } else { 0 };
        let mut betti = vec![0u64; len];
        for (e, c) in poly.terms() {
            if e < 0 || e > 2 * dim {
                return Err(Error::NonPolynomialResult(format!("term t^{e} outside 0..={}", 2 * dim)));
            }
            let v = to_i64(c).filter(|v| *v >= 0).and_then(|v| v.to_u64()).ok_or_else(|| {
                Error::NonPolynomialResult(format!("coefficient {c} of t^{e} is not a non-negative integer"))
            })?;
            betti[e as usize] = v;
        }
        let empty = poly.is_zero();
        Ok(Self { dim, poly, betti, empty, ss_eq_stable, method })
    }

    /// Builds a result from a series known through at least `2 dim`; every
    /// known coefficient outside `0..=2 dim` must vanish.
    pub fn from_series(series: &Series, dim: i64, method: Method, ss_eq_stable: bool) -> Result<Self> {
        let top = 2 * dim;
        if series.prec() < top {
            return Err(Error::TruncationTooSmall {
                truncation: series.prec(),
                exponent: top,
                value: series.coeff(series.prec()),
            });
        }
        let poly = series.to_poly();
        for (e, c) in poly.terms() {
            if e > top {
                return Err(Error::TruncationTooSmall { truncation: series.prec(), exponent: e, value: c.clone() });
            }
            if e < 0 {
                return Err(Error::NonPolynomialResult(format!("series has a term t^{e}")));
            }
        }
        Self::from_poly(poly, dim, method, ss_eq_stable)
    }

    /// Betti numbers up to the middle dimension, `b_0 ..= b_dim`.
    pub fn middle(&self) -> &[u64] {
        let k = if self.dim >= 0 { (self.dim + 1) as usize } else { 0 };
        &self.betti[..k]
    }

    /// Value at `t = 1`.
    pub fn euler_value(&self) -> u64 {
        self.betti.iter().sum()
    }
}
