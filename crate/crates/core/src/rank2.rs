//! Rank two, where every partition of length two is a choice of subset
//! `T_I` of the points carrying a full flag.
//!
//! For such a choice `psi_I = sum_P chi_I(P) delta_P` with `chi_I = +1` on
//! `T_I` and `-1` off it, `delta_P = alpha_1 - alpha_2`, and `a_I = 1`
//! exactly when `d + [psi_I]` is even. The Poincaré polynomial is
//!
//! ```text
//! ((1+t^2)^|T| (1+t^3)^2g - sum_I t^(2(g + |T_I| + [psi_I] + a_I)) (1+t)^2g)
//!     / ((1 - t^4)(1 - t^2))
//! ```

use crate::algebra::rational::{floor_i64, int};
use crate::engine::{BettiResult, Method};
use crate::parabolic::Instance;
use crate::{Error, Poly, RatFunc, Rational, Result};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank2Profile {
    /// `delta_P = alpha_1 - alpha_2` for each point with a full flag.
    pub deltas: Vec<Rational>,
    pub degree: i64,
    pub genus: u32,
}

/// One length-two partition: membership in `T_I` per flagged point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank2Partition {
    pub in_t: Vec<bool>,
    pub psi: Rational,
}

impl Rank2Partition {
    pub fn t_size(&self) -> i64 {
        self.in_t.iter().filter(|&&b| b).count() as i64
    }
}

impl Rank2Profile {
    pub fn new(deltas: Vec<Rational>, degree: i64, genus: u32) -> Self {
        Self { deltas, degree, genus }
    }

    /// Points with multiplicities `(1,1)` join `T`; trivial flags `(2)` are
    /// dropped. Zero rows are ignored.
    pub fn from_instance(instance: &Instance) -> Result<Self> {
        if instance.data.rank() != 2 {
            return Err(Error::MethodInapplicable(format!("rank {} is not 2", instance.data.rank())));
        }
        let deltas = instance
            .data
            .normalize_seshadri()
            .points()
            .iter()
            .filter(|p| p.m() == 2)
            .map(|p| &p.weights()[0] - &p.weights()[1])
            .collect();
        Ok(Self::new(deltas, instance.degree, instance.genus))
    }

    pub fn moduli_dim(&self) -> i64 {
        self.deltas.len() as i64 + 3 * (self.genus as i64 - 1)
    }

    /// All `2^|T|` partitions, `T_I` read as a binary counter with the first
    /// point most significant.
    pub fn partitions(&self) -> Vec<Rank2Partition> {
        let t = self.deltas.len();
        (0..1u64 << t)
            .map(|mask| {
                let in_t: Vec<bool> = (0..t).map(|i| mask >> (t - 1 - i) & 1 == 1).collect();
                let psi =
                    in_t.iter().zip(&self.deltas).fold(int(0), |acc, (&b, dl)| if b { acc + dl } else { acc - dl });
                Rank2Partition { in_t, psi }
            })
            .collect()
    }

    /// `g + |T_I| + [psi_I] + a_I` for each partition.
    fn exponents(&self) -> Result<Vec<i64>> {
        self.partitions()
            .into_iter()
            .map(|p| {
                let fl = floor_i64(&p.psi);
                // An integral psi of the parity of d is a slope coincidence.
                if p.psi.is_integer() && (self.degree + fl).rem_euclid(2) == 0 {
                    return Err(Error::IntegralPsi(p.psi));
                }
                let a = i64::from((self.degree + fl).rem_euclid(2) == 0);
                Ok(self.genus as i64 + p.t_size() + fl + a)
            })
            .collect()
    }

    /// Elementary modification at the first flagged point: degree up by one
    /// and `delta -> -1 - delta` there. The moduli spaces are isomorphic.
    pub fn hecke_flip(&self) -> Self {
        let mut deltas = self.deltas.clone();
        if let Some(first) = deltas.first_mut() {
            *first = int(-1) - first.clone();
        }
        Self::new(deltas, self.degree + 1, self.genus)
    }
}

/// Closed rank-two Poincaré polynomial.
pub fn poincare_rank2(profile: &Rank2Profile) -> Result<BettiResult> {
    let g2 = 2 * profile.genus;
    let mut sum = Poly::zero();
    for e in profile.exponents()? {
        sum.add_term(2 * e, int(1));
    }
    let numer = &(&Poly::one_plus_t_pow(2).powu(profile.deltas.len() as u32) * &Poly::one_plus_t_pow(3).powu(g2))
        - &(&sum * &Poly::one_plus_t_pow(1).powu(g2));
    let f = &RatFunc::from_poly(numer) * &(&RatFunc::one_minus_t_pow(4, -1) * &RatFunc::one_minus_t_pow(2, -1));
    let poly = f
        .to_poly()
        .map_err(|e| Error::NonPolynomialResult(format!("rank-2 formula leaves remainder {}", e.remainder)))?;
    BettiResult::from_poly(poly, profile.moduli_dim(), Method::Rank2, true)
}

/// Non-emptiness: `g + |T_I| + [psi_I] + a_I > 0` for every partition.
pub fn exists_stable_rank2(profile: &Rank2Profile) -> Result<bool> {
    Ok(profile.exponents()?.into_iter().all(|e| e > 0))
}

/// The six weight regions for up to four flagged points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rank2Family {
    /// One point.
    A,
    /// Two points.
    B,
    /// Three points, outer region.
    C,
    /// Three points, inner region.
    D,
    /// Four points, outer region.
    E,
    /// Four points, inner region.
    F,
}

impl Rank2Family {
    pub const ALL: [Rank2Family; 6] =
        [Rank2Family::A, Rank2Family::B, Rank2Family::C, Rank2Family::D, Rank2Family::E, Rank2Family::F];

    pub fn num_points(self) -> usize {
        match self {
            Rank2Family::A => 1,
            Rank2Family::B => 2,
            Rank2Family::C | Rank2Family::D => 3,
            Rank2Family::E | Rank2Family::F => 4,
        }
    }
}

impl fmt::Display for Rank2Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Closed form of each family as a rational function.
pub fn family_formula(family: Rank2Family, genus: u32) -> RatFunc {
    let g2 = 2 * genus;
    let x = Poly::one_plus_t_pow(3).powu(g2);
    let y = Poly::one_plus_t_pow(1).powu(g2);
    let tg = Poly::t_pow(g2 as i64);
    let s = Poly::one_plus_t_pow(2);
    let base = &x - &(&tg * &y);
    let four = Poly::constant(int(4));
    let numer = match family {
        Rank2Family::A => base,
        Rank2Family::B => &s * &base,
        Rank2Family::C => &s.powu(2) * &base,
        Rank2Family::D => &(&s.powu(2) * &x) - &(&(&four * &Poly::t_pow(g2 as i64 + 2)) * &y),
        Rank2Family::E => &s.powu(3) * &base,
        Rank2Family::F => &(&s.powu(3) * &x) - &(&(&(&four * &Poly::t_pow(g2 as i64 + 2)) * &s) * &y),
    };
    &RatFunc::from_poly(numer) * &RatFunc::one_minus_t_pow(2, -2)
}

/// Region of a weight vector by the inequalities on the sorted `delta`s.
/// Boundary cases are rejected.
pub fn classify_region(deltas: &[Rational]) -> Result<Rank2Family> {
    let mut d = deltas.to_vec();
    d.sort();
    let boundary = || Error::InvalidData(format!("deltas {deltas:?} lie on a region boundary"));
    match d.len() {
        1 => Ok(Rank2Family::A),
        2 => Ok(Rank2Family::B),
        3 | 4 => {
            let four = d.len() == 4;
            let last = if four { -d[3].clone() } else { int(0) };
            let first = &d[0] + &d[1] + &d[2] + &last;
            let tail: Rational = d[1..].iter().fold(-d[0].clone(), |a, b| a + b);
            if first == int(-2) || tail.is_integer() && tail == int(0) {
                return Err(boundary());
            }
            let outer = first < int(-2) || tail > int(0);
            Ok(match (four, outer) {
                (false, true) => Rank2Family::C,
                (false, false) => Rank2Family::D,
                (true, true) => Rank2Family::E,
                (true, false) => Rank2Family::F,
            })
        }
        n => Err(Error::InvalidData(format!("no region table for {n} points"))),
    }
}

/// Region that governs degree `d`: even degrees use the weights as given,
/// odd degrees the weights after [`Rank2Profile::hecke_flip`].
pub fn classify_for_degree(deltas: &[Rational], degree: i64) -> Result<Rank2Family> {
    if degree.rem_euclid(2) == 0 {
        classify_region(deltas)
    } else {
        let flipped = Rank2Profile::new(deltas.to_vec(), degree - 1, 0).hecke_flip();
        classify_region(&flipped.deltas)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::expand_series;
    use crate::algebra::rational::rat;

    fn deltas(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(a, b)| rat(a, b)).collect()
    }

    #[test]
    fn one_point_genus_two() {
        for d in 0..4 {
            let r = poincare_rank2(&Rank2Profile::new(deltas(&[(-5, 24)]), d, 2)).unwrap();
            assert_eq!(r.betti, vec![1, 0, 2, 4, 2, 4, 2, 0, 1]);
        }
    }

    #[test]
    fn case_d_genus_zero_is_a_point() {
        let p = Rank2Profile::new(deltas(&[(-23, 24), (-5, 8), (-3, 8)]), 0, 0);
        assert_eq!(poincare_rank2(&p).unwrap().poly, Poly::one());
        assert!(exists_stable_rank2(&p).unwrap());
    }

    #[test]
    fn case_f_genus_one() {
        let p = Rank2Profile::new(deltas(&[(-7, 24), (-7, 12), (-1, 24), (-17, 24)]), 0, 1);
        assert_eq!(poincare_rank2(&p).unwrap().middle(), &[1, 0, 5, 2, 8]);
    }

    #[test]
    fn existence() {
        assert!(!exists_stable_rank2(&Rank2Profile::new(deltas(&[(-1, 3)]), 0, 0)).unwrap());
        for g in 1..4 {
            assert!(exists_stable_rank2(&Rank2Profile::new(deltas(&[(-1, 3)]), 1, g)).unwrap());
        }
        assert!(matches!(
            exists_stable_rank2(&Rank2Profile::new(deltas(&[(-1, 2), (-1, 2)]), 0, 0)),
            Err(Error::IntegralPsi(_))
        ));
    }

    #[test]
    fn family_examples() {
        let a = family_formula(Rank2Family::A, 2).to_poly().unwrap();
        assert_eq!(a, Poly::from_ints(0, &[1, 0, 2, 4, 2, 4, 2, 0, 1]));
        let b = expand_series(&family_formula(Rank2Family::B, 1), 4).unwrap().to_poly();
        assert_eq!(b, Poly::from_ints(0, &[1, 0, 2, 0, 1]));
        assert_eq!(family_formula(Rank2Family::D, 0).to_poly().unwrap(), Poly::one());
    }

    #[test]
    fn regions() {
        assert_eq!(classify_region(&deltas(&[(-3, 8), (-1, 6), (-2, 3)])).unwrap(), Rank2Family::C);
        assert_eq!(classify_region(&deltas(&[(-23, 24), (-5, 8), (-3, 8)])).unwrap(), Rank2Family::D);
        assert_eq!(classify_region(&deltas(&[(-3, 4), (-1, 24), (-13, 24), (-11, 12)])).unwrap(), Rank2Family::E);
        assert_eq!(classify_region(&deltas(&[(-7, 24), (-7, 12), (-1, 24), (-17, 24)])).unwrap(), Rank2Family::F);
    }
}
