//! Point counts over a finite field and their `t`-shadows.
//!
//! A [`CountExpr`] is a product of a polynomial in `q`, powers of `q` and
//! `q - 1`, zeta values `Z_X(q^-j)` of the curve and the order of its
//! Jacobian. Frobenius eigenvalues only enter through the last two atoms,
//! so [`tilde`] can replace `q -> t^-2` and every eigenvalue by `-t^-1`
//! without ever naming the eigenvalues:
//!
//! * `Z_X(q^-j) -> (1 + t^(2j-1))^(2g) / ((1 - t^(2j-2)) (1 - t^(2j)))`,
//! * `|J| -> (1 + t^-1)^(2g)`,
//! * `q - 1 -> t^-2 (1 - t^2)`.

use crate::algebra::{divide_exact, Coeff};
use crate::parabolic::QuasiParabolicData;
use crate::{Error, Poly, RatFunc, Rational, Result};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::ops::Mul;

#[derive(Clone, Debug, PartialEq)]
pub struct CountExpr {
    pub q_power: i64,
    pub qminus1_power: i64,
    pub zeta_atoms: BTreeMap<u32, i64>,
    pub jac_power: i64,
    /// Polynomial in `q` with integer coefficients.
    pub poly: Poly,
}

impl CountExpr {
    pub fn from_poly(poly: Poly) -> Self {
        let mut e = Self { q_power: 0, qminus1_power: 0, zeta_atoms: BTreeMap::new(), jac_power: 0, poly };
        e.canonicalize();
        e
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn q_pow(e: i64) -> Self {
        Self { q_power: e, ..Self::one() }
    }

    pub fn qminus1_pow(e: i64) -> Self {
        Self { qminus1_power: e, ..Self::one() }
    }

    /// `Z_X(q^-j)`.
    pub fn zeta(j: u32) -> Self {
        Self { zeta_atoms: BTreeMap::from([(j, 1)]), ..Self::one() }
    }

    /// `|J(F_q)|`.
    pub fn jacobian() -> Self {
        Self { jac_power: 1, ..Self::one() }
    }

    fn canonicalize(&mut self) {
        self.zeta_atoms.retain(|_, e| *e != 0);
        if let Some(lo) = self.poly.min_exp() {
            if lo != 0 {
                self.q_power += lo;
                self.poly = self.poly.shift(-lo);
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact value at `q = q0`; only defined without curve-dependent atoms.
    pub fn evaluate(&self, q0: &Rational) -> Result<Rational> {
        if !self.zeta_atoms.is_empty() || self.jac_power != 0 {
            return Err(Error::InvalidData("zeta and Jacobian atoms depend on the curve".into()));
        }
        let base = self.poly.eval(q0)?;
        let qp = Poly::t_pow(self.q_power).eval(q0)?;
        let qm1 = q0 - Rational::from_int(1);
        if self.qminus1_power < 0 && qm1.is_zero() {
            return Err(Error::PoleAtPoint(q0.clone()));
        }
        let m = Poly::t_pow(self.qminus1_power).eval(&qm1)?;
        Ok(base * qp * m)
    }
}

impl<'a> Mul<&'a CountExpr> for &'a CountExpr {
    type Output = CountExpr;
    fn mul(self, rhs: &'a CountExpr) -> CountExpr {
        let mut zeta = self.zeta_atoms.clone();
        for (&j, &e) in &rhs.zeta_atoms {
            *zeta.entry(j).or_insert(0) += e;
        }
        let mut out = CountExpr {
            q_power: self.q_power + rhs.q_power,
            qminus1_power: self.qminus1_power + rhs.qminus1_power,
            zeta_atoms: zeta,
            jac_power: self.jac_power + rhs.jac_power,
            poly: &self.poly * &rhs.poly,
        };
        out.canonicalize();
        out
    }
}

impl Mul for CountExpr {
    type Output = CountExpr;
    fn mul(self, rhs: CountExpr) -> CountExpr {
        &self * &rhs
    }
}

/// `prod_(i=1..k) (q^i - 1)` as a polynomial in `q`.
fn q_factorial(k: u32) -> Poly {
    (1..=k as i64).fold(Poly::one(), |acc, i| &acc * &(&Poly::t_pow(i) - &Poly::one()))
}

/// Number of flags of type `r_list` in `F_q^n`; `m` is the number of steps.
pub fn flag_count(n: u32, m: usize, r_list: &[u32]) -> Result<CountExpr> {
    if r_list.len() != m || r_list.iter().sum::<u32>() != n {
        return Err(Error::InvalidData(format!("flag type {r_list:?} does not split {n} into {m} parts")));
    }
    let den = r_list.iter().fold(Poly::one(), |acc, &r| &acc * &q_factorial(r));
    let poly = divide_exact(&q_factorial(n), &den)?;
    Ok(CountExpr::from_poly(poly))
}

/// Number of `p`-dimensional subspaces of `F_q^r`.
pub fn grassmann_count(r: u32, p: u32) -> Result<CountExpr> {
    if p > r {
        return Err(Error::InvalidData(format!("no {p}-planes in a {r}-dimensional space")));
    }
    flag_count(r, 2, &[p, r - p])
}

/// Points of the product of the partial flag varieties of `R`.
pub fn f_r(data: &QuasiParabolicData) -> CountExpr {
    let n = data.rank();
    data.points()
        .iter()
        .map(|p| flag_count(n, p.m(), p.multiplicities()).expect("multiplicities split the rank"))
        .fold(CountExpr::one(), |a, b| &a * &b)
}

/// `q^((n^2-1)(g-1)) (q-1)^-1 prod_(j=2..n) Z_X(q^-j)`.
pub fn tau(n: u32, genus: u32) -> CountExpr {
    let n2 = (n as i64) * (n as i64);
    let mut e = &CountExpr::q_pow((n2 - 1) * (genus as i64 - 1)) * &CountExpr::qminus1_pow(-1);
    for j in 2..=n {
        e = &e * &CountExpr::zeta(j);
    }
    e
}

/// The substitution `q -> t^-2`, eigenvalues `-> -t^-1`.
pub fn tilde(e: &CountExpr, genus: u32) -> Result<RatFunc> {
    let g2 = 2 * genus as i64;
    let mut f = RatFunc::from_poly(e.poly.substitute_power(-2));
    f = f.mul_t_pow(-2 * e.q_power);
    f = &f * &(&RatFunc::t_pow(-2 * e.qminus1_power) * &RatFunc::one_minus_t_pow(2, e.qminus1_power));
    for (&j, &x) in &e.zeta_atoms {
        if j <= 1 {
            return Err(Error::ZetaAtomPole);
        }
        let j = j as i64;
        let atom = &(&RatFunc::one_plus_t_pow(2 * j - 1, g2) * &RatFunc::one_minus_t_pow(2 * j - 2, -1))
            * &RatFunc::one_minus_t_pow(2 * j, -1);
        f = &f * &atom.pow(x)?;
    }
    if e.jac_power != 0 {
        let jac = &RatFunc::t_pow(-g2) * &RatFunc::one_plus_t_pow(1, g2);
        f = &f * &jac.pow(e.jac_power)?;
    }
    Ok(f)
}

/// Flag factor `prod_(i<=n) (1-t^2i)^|S| / prod_P prod_i prod_(l<=R_i) (1-t^2l)`.
fn flag_factor(data: &QuasiParabolicData) -> RatFunc {
    let n = data.rank() as i64;
    let mut factors: BTreeMap<i64, i64> = BTreeMap::new();
    for i in 1..=n {
        *factors.entry(2 * i).or_insert(0) += data.num_points() as i64;
    }
    for p in data.points() {
        for &m in p.multiplicities() {
            for l in 1..=m as i64 {
                *factors.entry(2 * l).or_insert(0) -= 1;
            }
        }
    }
    RatFunc::new(0, Poly::one(), factors)
}

/// `prod_(i<=n) (1 + t^(2i-1))^(2g) / ((1 - t^2n) prod_(i<n) (1 - t^2i)^2)`.
fn zeta_factor(n: u32, genus: u32) -> RatFunc {
    let n = n as i64;
    let mut f = RatFunc::one_minus_t_pow(2 * n, -1);
    for i in 1..=n {
        f = &f * &RatFunc::one_plus_t_pow(2 * i - 1, 2 * genus as i64);
    }
    for i in 1..n {
        f = &f * &RatFunc::one_minus_t_pow(2 * i, -2);
    }
    f
}

/// Closed form of `tilde(f_R)`: `t^(-2 dim F_R)` times the flag factor.
pub fn tilde_f(data: &QuasiParabolicData) -> RatFunc {
    flag_factor(data).mul_t_pow(-2 * data.flag_dim())
}

/// Closed form of `tilde(|J| tau_n)`: `t^(-2 n^2 (g-1))` times the zeta factor.
pub fn tilde_tau(n: u32, genus: u32) -> RatFunc {
    let n2 = (n as i64) * (n as i64);
    zeta_factor(n, genus).mul_t_pow(-2 * n2 * (genus as i64 - 1))
}

/// `P_R(t)`: flag factor times zeta factor.
pub fn p_r(data: &QuasiParabolicData, genus: u32) -> RatFunc {
    &flag_factor(data) * &zeta_factor(data.rank(), genus)
}

/// `Q_R = t^(n^2 (g-1)) tilde(f_R) tilde(|J| tau_n)`.
pub fn q_r(data: &QuasiParabolicData, genus: u32) -> RatFunc {
    let n = data.rank();
    let n2 = (n as i64) * (n as i64);
    (&tilde_f(data) * &tilde_tau(n, genus)).mul_t_pow(n2 * (genus as i64 - 1))
}

/// Lowest power of `t` in the expansion of [`q_r`].
pub fn q_r_order(data: &QuasiParabolicData, genus: u32) -> i64 {
    let n = data.rank() as i64;
    -n * n * (genus as i64 - 1) - 2 * data.flag_dim()
}

/// Poincaré polynomial of a smooth projective variety of dimension `dim`
/// from its point count: `T^(2 dim) h(T^-2, -T^-1, ...)`.
pub fn poincare_from_count(h: &CountExpr, dim: i64, genus: u32) -> Result<Poly> {
    let f = tilde(h, genus)?.mul_t_pow(2 * dim);
    let p = f.to_poly().map_err(|e| Error::NotPolynomial {
        bound: 2 * dim,
        detail: format!("inexact division, remainder {}", e.remainder),
    })?;
    if let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) {
        if lo < 0 || hi > 2 * dim {
            return Err(Error::NotPolynomial { bound: 2 * dim, detail: format!("exponents span {lo}..{hi}") });
        }
    }
    Ok(p)
}
