use super::Coeff;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Finitely supported Laurent polynomial `sum c_e t^e`.
///
/// Zero coefficients are never stored, so structural equality is value
/// equality.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentPoly<T> {
    terms: BTreeMap<i64, T>,
}

impl<T: Coeff> Default for LaurentPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Coeff> LaurentPoly<T> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: T, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `t^exp` with coefficient one.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(T::one(), exp)
    }

    /// `1 + t^k`.
    pub fn one_plus_t_pow(k: i64) -> Self {
        Self::one() + Self::t_pow(k)
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: i64) -> Self {
        Self::one() - Self::t_pow(k)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, T)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    /// Dense integer coefficients starting at `t^start`.
    pub fn from_ints(start: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (start + i as i64, T::from_int(c))))
    }

    pub fn add_term(&mut self, exp: i64, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(exp, s);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> T {
        self.terms.get(&exp).cloned().unwrap_or_else(T::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Single-term polynomial, as `(coefficient, exponent)`.
    pub fn as_monomial(&self) -> Option<(&T, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&e, c)| (c, e))
        } else {
            None
        }
    }

    /// Multiplies by `t^m`.
    pub fn shift(&self, m: i64) -> Self {
        Self { terms: self.terms.iter().map(|(&e, c)| (e + m, c.clone())).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&e, v)| (e, v.clone() * c.clone())).collect() }
    }

    /// Substitutes `t -> t^k` (`k` may be negative).
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitution t -> 1 is not supported");
        Self { terms: self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect() }
    }

    /// Integer power; negative exponents are allowed only for monomials.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            let (c, m) = self.as_monomial().ok_or(Error::UnsupportedPower)?;
            let inv = T::one() / c.clone();
            return Self::monomial(inv, -m).pow(-e);
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Non-negative power; never fails.
    pub fn powu(&self, e: u32) -> Self {
        self.pow(e as i64).expect("non-negative power")
    }

    /// Exact evaluation; fails on `t = 0` with negative exponents present.
    pub fn eval(&self, x: &T) -> Result<T> {
        let mut acc = T::zero();
        for (&e, c) in &self.terms {
            let xe = if e >= 0 {
                pow_scalar(x, e as u64)
            } else {
                if x.is_zero() {
                    return Err(Error::Internal("negative power of zero".into()));
                }
                T::one() / pow_scalar(x, (-e) as u64)
            };
            acc = acc + c.clone() * xe;
        }
        Ok(acc)
    }

    /// Dense coefficient vector starting at [`Self::min_exp`].
    pub(crate) fn dense(&self) -> (i64, Vec<T>) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![T::zero(); (hi - lo + 1) as usize];
                for (&e, c) in &self.terms {
                    v[(e - lo) as usize] = c.clone();
                }
                (lo, v)
            }
            _ => (0, Vec::new()),
        }
    }

    pub(crate) fn from_dense(start: i64, coeffs: Vec<T>) -> Self {
        let terms =
            coeffs.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (start + i as i64, c)).collect();
        Self { terms }
    }
}

fn pow_scalar<T: Coeff>(x: &T, mut e: u64) -> T {
    let mut result = T::one();
    let mut base = x.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = result * base.clone();
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * base;
        }
    }
    result
}

/// Remainder left by an inexact [`divide_exact`].
#[derive(Clone, Debug, PartialEq)]
pub struct NonDivisible<T> {
    pub remainder: LaurentPoly<T>,
}

impl From<NonDivisible<crate::Rational>> for Error {
    fn from(e: NonDivisible<crate::Rational>) -> Self {
        Error::NonDivisible { remainder: e.remainder }
    }
}

/// Exact quotient `num / den`.
///
/// Division runs from the low end: `den` is normalized to a nonzero
/// constant term, quotient coefficients are solved one at a time, and the
/// leftover must vanish.
pub fn divide_exact<T: Coeff>(
    num: &LaurentPoly<T>,
    den: &LaurentPoly<T>,
) -> std::result::Result<LaurentPoly<T>, NonDivisible<T>> {
    assert!(!den.is_zero(), "division by the zero polynomial");
    if num.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let (a, n) = num.dense();
    let (b, d) = den.dense();
    if n.len() < d.len() {
        return Err(NonDivisible { remainder: num.clone() });
    }
    let qlen = n.len() - d.len() + 1;
    let mut rem = n;
    let mut q = vec![T::zero(); qlen];
    let d0 = d[0].clone();
    for i in 0..qlen {
        if rem[i].is_zero() {
            continue;
        }
        let c = rem[i].clone() / d0.clone();
        for (j, dj) in d.iter().enumerate() {
            if !dj.is_zero() {
                rem[i + j] = rem[i + j].clone() - c.clone() * dj.clone();
            }
        }
        q[i] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(NonDivisible { remainder: LaurentPoly::from_dense(a, rem) });
    }
    Ok(LaurentPoly::from_dense(a - b, q))
}

fn mul_dense<T: Coeff>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
    }
    out
}

impl<'a, T: Coeff> Add<&'a LaurentPoly<T>> for &'a LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: &'a LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a, T: Coeff> Sub<&'a LaurentPoly<T>> for &'a LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: &'a LaurentPoly<T>) -> LaurentPoly<T> {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl<'a, T: Coeff> Mul<&'a LaurentPoly<T>> for &'a LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: &'a LaurentPoly<T>) -> LaurentPoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let (a0, a) = self.dense();
        let (b0, b) = rhs.dense();
        LaurentPoly::from_dense(a0 + b0, mul_dense(&a, &b))
    }
}

impl<T: Coeff> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr<LaurentPoly<T>> for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $m(self, rhs: LaurentPoly<T>) -> LaurentPoly<T> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, T: Coeff> $tr<&'a LaurentPoly<T>> for LaurentPoly<T> {
            type Output = LaurentPoly<T>;
            fn $m(self, rhs: &'a LaurentPoly<T>) -> LaurentPoly<T> {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coeff> Neg for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        -&self
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::Poly;

    fn p(start: i64, c: &[i64]) -> Poly {
        Poly::from_ints(start, c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(0, &[1, 1]) * &p(0, &[1, -1]), p(0, &[1, 0, -1]));
    }

    #[test]
    fn binomial_power() {
        let x = Poly::one_plus_t_pow(3).pow(4).unwrap();
        assert_eq!(x, p(0, &[1, 0, 0, 4, 0, 0, 6, 0, 0, 4, 0, 0, 1]));
    }

    #[test]
    fn laurent_shift() {
        assert_eq!(&Poly::t_pow(-2) * &p(0, &[1, 0, 1]), p(-2, &[1, 0, 1]));
    }

    #[test]
    fn negative_power_only_for_monomials() {
        assert_eq!(Poly::t_pow(2).pow(-3).unwrap(), Poly::t_pow(-6));
        assert!(matches!(p(0, &[1, 1]).pow(-1), Err(crate::Error::UnsupportedPower)));
    }

    #[test]
    fn exact_division() {
        use crate::algebra::divide_exact;
        assert_eq!(divide_exact(&p(0, &[1, 0, 0, 0, -1]), &p(0, &[1, 0, -1])).unwrap(), p(0, &[1, 0, 1]));
        let num = p(0, &[1, 0, 0, 4, -1, -4, 0, -4, -1, 4, 0, 0, 1]);
        let den = p(0, &[1, 0, -1]).pow(2).unwrap();
        assert_eq!(divide_exact(&num, &den).unwrap(), p(0, &[1, 0, 2, 4, 2, 4, 2, 0, 1]));
        let err = divide_exact(&p(0, &[1, 1]), &p(0, &[1, -1])).unwrap_err();
        assert!(!err.remainder.is_zero());
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let x = &p(0, &[1, 2]) - &p(0, &[1, 2]);
        assert!(x.is_zero());
        assert_eq!(x.len(), 0);
    }
}
