use super::{divide_exact, Coeff, LaurentPoly, LaurentSeries, NonDivisible};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Largest truncation bound accepted by [`expand_series`].
pub const MAX_TRUNCATION: i64 = 20_000;

/// `t^shift * numer * prod_k (1 - t^k)^(e_k)`.
///
/// Canonical form: `numer` has a nonzero constant term (any monomial factor
/// lives in `shift`), zero exponents are dropped, and the zero function has
/// no shift and no factors. Equality is decided by cross-multiplication, so
/// two canonical forms of the same function compare equal even when their
/// factor maps differ.
#[derive(Clone, Debug)]
pub struct FactoredRatFunc<T> {
    shift: i64,
    numer: LaurentPoly<T>,
    factors: BTreeMap<i64, i64>,
}

impl<T: Coeff> FactoredRatFunc<T> {
    pub fn new(shift: i64, numer: LaurentPoly<T>, factors: BTreeMap<i64, i64>) -> Self {
        let mut f = Self { shift, numer, factors };
        f.canonicalize();
        f
    }

    fn canonicalize(&mut self) {
        self.factors.retain(|k, e| {
            assert!(*k > 0, "factor (1 - t^{k}) needs k > 0");
            *e != 0
        });
        match self.numer.min_exp() {
            None => {
                self.shift = 0;
                self.factors.clear();
            }
            Some(lo) if lo != 0 => {
                self.shift += lo;
                self.numer = self.numer.shift(-lo);
            }
            Some(_) => {}
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly<T>) -> Self {
        Self::new(0, p, BTreeMap::new())
    }

    pub fn constant(c: T) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn t_pow(e: i64) -> Self {
        Self::new(e, LaurentPoly::one(), BTreeMap::new())
    }

    /// `(1 - t^k)^e`.
    pub fn one_minus_t_pow(k: i64, e: i64) -> Self {
        Self::new(0, LaurentPoly::one(), BTreeMap::from([(k, e)]))
    }

    /// `(1 + t^k)^e`, stored as `(1 - t^2k)^e (1 - t^k)^-e`.
    pub fn one_plus_t_pow(k: i64, e: i64) -> Self {
        Self::new(0, LaurentPoly::one(), BTreeMap::from([(2 * k, e), (k, -e)]))
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn numer(&self) -> &LaurentPoly<T> {
        &self.numer
    }

    pub fn factors(&self) -> &BTreeMap<i64, i64> {
        &self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// Multiplies by `t^m`.
    pub fn mul_t_pow(&self, m: i64) -> Self {
        let mut f = self.clone();
        if !f.is_zero() {
            f.shift += m;
        }
        f
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.shift, self.numer.scale(c), self.factors.clone())
    }

    /// Integer power; a negative power needs a monomial numerator.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let numer = self.numer.pow(e)?;
        let factors = self.factors.iter().map(|(&k, &x)| (k, x * e)).collect();
        Ok(Self::new(self.shift * e, numer, factors))
    }

    /// Lower bound for the order of the expansion in `t`.
    pub fn order(&self) -> i64 {
        self.shift
    }

    /// `(N, D)` with `self = N / D`, both polynomials, `D` the product of
    /// the negative-exponent factors.
    pub fn to_fraction(&self) -> (LaurentPoly<T>, LaurentPoly<T>) {
        let mut num = self.numer.shift(self.shift);
        let mut den = LaurentPoly::one();
        for (&k, &e) in &self.factors {
            let base = LaurentPoly::one_minus_t_pow(k);
            if e > 0 {
                num = &num * &base.powu(e as u32);
            } else {
                den = &den * &base.powu((-e) as u32);
            }
        }
        (num, den)
    }

    /// Exact polynomial value, failing when the denominator does not divide.
    pub fn to_poly(&self) -> std::result::Result<LaurentPoly<T>, NonDivisible<T>> {
        let (num, den) = self.to_fraction();
        divide_exact(&num, &den)
    }

    /// Sum of many terms over their least common factored denominator.
    pub fn sum<I: IntoIterator<Item = Self>>(terms: I) -> Self {
        let terms: Vec<Self> = terms.into_iter().filter(|f| !f.is_zero()).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let mut base: BTreeMap<i64, i64> = BTreeMap::new();
        let mut keys: Vec<i64> = terms.iter().flat_map(|f| f.factors.keys().copied()).collect();
        keys.sort_unstable();
        keys.dedup();
        for &k in &keys {
            let m = terms.iter().map(|f| f.factors.get(&k).copied().unwrap_or(0)).min().unwrap();
            base.insert(k, m);
        }
        let mut total = LaurentPoly::zero();
        for f in &terms {
            let mut p = f.numer.shift(f.shift);
            for (&k, &b) in &base {
                let extra = f.factors.get(&k).copied().unwrap_or(0) - b;
                if extra > 0 {
                    p = &p * &LaurentPoly::one_minus_t_pow(k).powu(extra as u32);
                }
            }
            total = &total + &p;
        }
        Self::new(0, total, base)
    }
}

impl<T: Coeff> PartialEq for FactoredRatFunc<T> {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl<'a, T: Coeff> Mul<&'a FactoredRatFunc<T>> for &'a FactoredRatFunc<T> {
    type Output = FactoredRatFunc<T>;
    fn mul(self, rhs: &'a FactoredRatFunc<T>) -> FactoredRatFunc<T> {
        let mut factors = self.factors.clone();
        for (&k, &e) in &rhs.factors {
            *factors.entry(k).or_insert(0) += e;
        }
        FactoredRatFunc::new(self.shift + rhs.shift, &self.numer * &rhs.numer, factors)
    }
}

impl<'a, T: Coeff> Add<&'a FactoredRatFunc<T>> for &'a FactoredRatFunc<T> {
    type Output = FactoredRatFunc<T>;
    fn add(self, rhs: &'a FactoredRatFunc<T>) -> FactoredRatFunc<T> {
        FactoredRatFunc::sum([self.clone(), rhs.clone()])
    }
}

impl<'a, T: Coeff> Sub<&'a FactoredRatFunc<T>> for &'a FactoredRatFunc<T> {
    type Output = FactoredRatFunc<T>;
    fn sub(self, rhs: &'a FactoredRatFunc<T>) -> FactoredRatFunc<T> {
        FactoredRatFunc::sum([self.clone(), -rhs])
    }
}

impl<T: Coeff> Neg for &FactoredRatFunc<T> {
    type Output = FactoredRatFunc<T>;
    fn neg(self) -> FactoredRatFunc<T> {
        FactoredRatFunc { shift: self.shift, numer: -&self.numer, factors: self.factors.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr<FactoredRatFunc<T>> for FactoredRatFunc<T> {
            type Output = FactoredRatFunc<T>;
            fn $m(self, rhs: FactoredRatFunc<T>) -> FactoredRatFunc<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coeff> Neg for FactoredRatFunc<T> {
    type Output = FactoredRatFunc<T>;
    fn neg(self) -> FactoredRatFunc<T> {
        -&self
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for FactoredRatFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{} * ({})", self.shift, self.numer)?;
        for (k, e) in &self.factors {
            write!(f, " * (1 - t^{k})^{e}")?;
        }
        Ok(())
    }
}

/// Expansion of `f` through `t^n`.
///
/// Positive factors are multiplied in; each `1/(1 - t^k)` is applied as the
/// geometric recurrence `c_i += c_(i-k)`, which is exact up to `t^n`.
pub fn expand_series<T: Coeff>(f: &FactoredRatFunc<T>, n: i64) -> Result<LaurentSeries<T>> {
    if n > MAX_TRUNCATION {
        return Err(Error::TruncationTooLarge { requested: n, max: MAX_TRUNCATION });
    }
    let mut s = LaurentSeries::from_poly(&f.numer.shift(f.shift), n);
    for (&k, &e) in &f.factors {
        s = s.mul_one_minus_t_pow(k, e);
    }
    Ok(s)
}

/// Exact value at `t = x0`.
pub fn evaluate<T: Coeff>(f: &FactoredRatFunc<T>, x0: &T) -> std::result::Result<T, T> {
    let mut value = f.numer.eval(x0).map_err(|_| x0.clone())?;
    if f.is_zero() {
        return Ok(value);
    }
    let mono = LaurentPoly::<T>::t_pow(f.shift).eval(x0).map_err(|_| x0.clone())?;
    value = value * mono;
    for (&k, &e) in &f.factors {
        let base = LaurentPoly::<T>::one_minus_t_pow(k).eval(x0).expect("polynomial");
        if e < 0 && base.is_zero() {
            return Err(x0.clone());
        }
        for _ in 0..e.unsigned_abs() {
            value = if e > 0 { value * base.clone() } else { value / base.clone() };
        }
    }
    Ok(value)
}
