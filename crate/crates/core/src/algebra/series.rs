use super::{Coeff, LaurentPoly};
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent series known exactly through `t^prec`.
///
/// `coeffs[i]` is the coefficient of `t^(start + i)`; every coefficient below
/// `start` is zero, and nothing above `prec` is ever reported.
#[derive(Clone, Debug)]
pub struct LaurentSeries<T> {
    start: i64,
    coeffs: Vec<T>,
    prec: i64,
}

/// Equal precision and equal known coefficients, however stored.
impl<T: Coeff> PartialEq for LaurentSeries<T> {
    fn eq(&self, other: &Self) -> bool {
        self.prec == other.prec && self.to_poly() == other.to_poly()
    }
}

impl<T: Coeff> LaurentSeries<T> {
    pub fn new(start: i64, mut coeffs: Vec<T>, prec: i64) -> Self {
        if start > prec {
            return Self::zero(prec);
        }
        let len = (prec - start + 1) as usize;
        coeffs.resize(len, T::zero());
        Self { start, coeffs, prec }
    }

    /// The zero series, known through `t^prec`.
    pub fn zero(prec: i64) -> Self {
        Self { start: prec + 1, coeffs: Vec::new(), prec }
    }

    pub fn from_poly(p: &LaurentPoly<T>, prec: i64) -> Self {
        match p.min_exp() {
            Some(lo) if lo <= prec => {
                let mut v = vec![T::zero(); (prec - lo + 1) as usize];
                for (e, c) in p.terms() {
                    if e <= prec {
                        v[(e - lo) as usize] = c.clone();
                    }
                }
                Self { start: lo, coeffs: v, prec }
            }
            _ => Self::zero(prec),
        }
    }

    pub fn prec(&self) -> i64 {
        self.prec
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|i| self.start + i as i64)
    }

    /// Valuation, or `prec + 1` for a series known to vanish through `prec`.
    fn valuation_bound(&self) -> i64 {
        self.valuation().unwrap_or(self.prec + 1)
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Coefficient of `t^e`; `e` must not exceed the precision.
    pub fn coeff(&self, e: i64) -> T {
        assert!(e <= self.prec, "coefficient t^{e} beyond precision {}", self.prec);
        if e < self.start {
            T::zero()
        } else {
            self.coeffs[(e - self.start) as usize].clone()
        }
    }

    /// Drops knowledge above `t^n` (no-op when `n >= prec`).
    pub fn truncate(&self, n: i64) -> Self {
        if n >= self.prec {
            return self.clone();
        }
        let v = if n >= self.start { self.coeffs[..(n - self.start + 1) as usize].to_vec() } else { Vec::new() };
        Self::new(self.start, v, n)
    }

    /// Known terms as a polynomial.
    pub fn to_poly(&self) -> LaurentPoly<T> {
        LaurentPoly::from_dense(self.start, self.coeffs.clone())
    }

    /// Multiplies by `t^m`.
    pub fn shift(&self, m: i64) -> Self {
        Self { start: self.start + m, coeffs: self.coeffs.clone(), prec: self.prec + m }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self { start: self.start, coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(), prec: self.prec }
    }

    /// Multiplies by `(1 - t^k)^e` for any integer `e`; precision is kept.
    pub fn mul_one_minus_t_pow(&self, k: i64, e: i64) -> Self {
        assert!(k > 0);
        let mut v = self.coeffs.clone();
        let k = k as usize;
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                for i in (k..v.len()).rev() {
                    let prev = v[i - k].clone();
                    if !prev.is_zero() {
                        v[i] = v[i].clone() - prev;
                    }
                }
            } else {
                for i in k..v.len() {
                    let prev = v[i - k].clone();
                    if !prev.is_zero() {
                        v[i] = v[i].clone() + prev;
                    }
                }
            }
        }
        Self { start: self.start, coeffs: v, prec: self.prec }
    }

    fn combine(&self, rhs: &Self, sign: bool) -> Self {
        let prec = self.prec.min(rhs.prec);
        let start = self.start.min(rhs.start);
        if start > prec {
            return Self::zero(prec);
        }
        let mut v = vec![T::zero(); (prec - start + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = self.start + i as i64;
            if e <= prec {
                v[(e - start) as usize] = c.clone();
            }
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            let e = rhs.start + i as i64;
            if e <= prec && !c.is_zero() {
                let slot = &mut v[(e - start) as usize];
                *slot = if sign { slot.clone() + c.clone() } else { slot.clone() - c.clone() };
            }
        }
        Self { start, coeffs: v, prec }
    }
}

impl<'a, T: Coeff> Add<&'a LaurentSeries<T>> for &'a LaurentSeries<T> {
    type Output = LaurentSeries<T>;
    fn add(self, rhs: &'a LaurentSeries<T>) -> LaurentSeries<T> {
        self.combine(rhs, true)
    }
}

impl<'a, T: Coeff> Sub<&'a LaurentSeries<T>> for &'a LaurentSeries<T> {
    type Output = LaurentSeries<T>;
    fn sub(self, rhs: &'a LaurentSeries<T>) -> LaurentSeries<T> {
        self.combine(rhs, false)
    }
}

impl<T: Coeff> Neg for &LaurentSeries<T> {
    type Output = LaurentSeries<T>;
    fn neg(self) -> LaurentSeries<T> {
        self.scale(&-T::one())
    }
}

/// Precision of a product is `min(val a + prec b, val b + prec a)`.
impl<'a, T: Coeff> Mul<&'a LaurentSeries<T>> for &'a LaurentSeries<T> {
    type Output = LaurentSeries<T>;
    fn mul(self, rhs: &'a LaurentSeries<T>) -> LaurentSeries<T> {
        let va = self.valuation_bound();
        let vb = rhs.valuation_bound();
        let prec = (va + rhs.prec).min(vb + self.prec);
        let start = va + vb;
        if start > prec {
            return LaurentSeries::zero(prec);
        }
        let mut v = vec![T::zero(); (prec - start + 1) as usize];
        for (i, x) in self.coeffs.iter().enumerate() {
            let ea = self.start + i as i64;
            if x.is_zero() || ea + vb > prec {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                let e = ea + rhs.start + j as i64;
                if e > prec {
                    break;
                }
                if !y.is_zero() {
                    let slot = &mut v[(e - start) as usize];
                    *slot = slot.clone() + x.clone() * y.clone();
                }
            }
        }
        LaurentSeries { start, coeffs: v, prec }
    }
}

#[cfg(test)]
mod tests {
    use crate::{Poly, Series};

    #[test]
    fn geometric_division_keeps_precision() {
        let s = Series::from_poly(&Poly::one(), 6).mul_one_minus_t_pow(2, -1);
        assert_eq!(s.to_poly(), Poly::from_ints(0, &[1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(s.mul_one_minus_t_pow(2, 1).to_poly(), Poly::one());
    }

    #[test]
    fn product_precision_accounts_for_negative_orders() {
        let a = Series::from_poly(&Poly::t_pow(-3), 10);
        let b = Series::from_poly(&Poly::from_ints(0, &[1, 1]), 10);
        let c = &a * &b;
        assert_eq!(c.prec(), 7);
        assert_eq!(c.valuation(), Some(-3));
    }

    #[test]
    fn sum_takes_minimum_precision() {
        let a = Series::from_poly(&Poly::one(), 3);
        let b = Series::from_poly(&Poly::t_pow(5), 8);
        let c = &a + &b;
        assert_eq!(c.prec(), 3);
        assert_eq!(c.to_poly(), Poly::one());
    }
}
