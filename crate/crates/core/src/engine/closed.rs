use super::{check_stability, BettiResult, ComputeOptions, Method};
use crate::parabolic::{enumerate_partitions, Instance, Partition, QuasiParabolicData};
use crate::tilde::{p_r, q_r};
use crate::{Error, RatFunc, Result};
use rayon::prelude::*;

/// `(-1)^(r-1) / prod_(k<r) (1 - t^(2(n_k + n_(k+1))))`, i.e. the product of
/// `1 / (t^(2(n_k + n_(k+1))) - 1)`.
fn chain_denominator(partition: &Partition) -> RatFunc {
    let ranks = partition.ranks();
    let mut f = RatFunc::one();
    for w in ranks.windows(2) {
        f = &f * &RatFunc::one_minus_t_pow(2 * (w[0] + w[1]) as i64, -1);
    }
    if ranks.len().is_multiple_of(2) {
        f = -&f;
    }
    f
}

/// `(1 - t^2) / (1 + t)^(2g)`.
fn prefactor(genus: u32) -> RatFunc {
    &RatFunc::one_minus_t_pow(2, 1) * &RatFunc::one_plus_t_pow(1, -2 * genus as i64)
}

/// The closed-form sum over partitions as one rational function.
pub fn closed_ratfunc(instance: &Instance) -> RatFunc {
    let data = &instance.data;
    let g = instance.genus;
    let n = data.rank() as i64;
    let d = instance.degree;
    let lambda = instance.lambda();
    let terms: Vec<RatFunc> = enumerate_partitions(data)
        .par_iter()
        .map(|part| {
            let nr = *part.ranks().last().unwrap() as i64;
            let exp = 2 * (part.sigma_prime() - (n - nr) * d + part.m_g(data, &lambda, g));
            let mut term = chain_denominator(part).mul_t_pow(exp);
            for k in 0..part.len() {
                term = &term * &p_r(&part.block(data, k), g);
            }
            term
        })
        .collect();
    &prefactor(g) * &RatFunc::sum(terms)
}

fn certify(f: &RatFunc, instance: &Instance, method: Method, ss: bool) -> Result<BettiResult> {
    let poly = f
        .to_poly()
        .map_err(|e| Error::NonPolynomialResult(format!("denominator does not divide: remainder {}", e.remainder)))?;
    BettiResult::from_poly(poly, instance.moduli_dim(), method, ss)
}

/// Poincaré polynomial from the closed formula, certified by exact division.
pub fn poincare_closed(instance: &Instance, opts: &ComputeOptions) -> Result<BettiResult> {
    let ss = check_stability(instance, opts)?;
    certify(&closed_ratfunc(instance), instance, Method::Closed, ss)
}

/// Closed form of `Q_(R,d)` at slope `lambda = (d + alpha(R)) / n(R)`.
pub fn q_closed_ratfunc(data: &QuasiParabolicData, degree: i64, genus: u32) -> RatFunc {
    let instance = Instance::new(genus, degree, data.clone());
    let lambda = instance.lambda();
    let terms: Vec<RatFunc> = enumerate_partitions(data)
        .par_iter()
        .map(|part| {
            let exp = 2 * (part.m_prime(degree) + part.m_floor(data, &lambda));
            let mut term = chain_denominator(part).mul_t_pow(exp);
            for k in 0..part.len() {
                term = &term * &q_r(&part.block(data, k), genus);
            }
            term
        })
        .collect();
    RatFunc::sum(terms)
}

/// `t^(2 dim F + n^2 (g-1)) (1 - t^2) / (1 + t)^(2g)`, turning `Q_(R,d)` into `P_(R,d)`.
pub fn q_to_p_factor(data: &QuasiParabolicData, genus: u32) -> RatFunc {
    let n = data.rank() as i64;
    prefactor(genus).mul_t_pow(2 * data.flag_dim() + n * n * (genus as i64 - 1))
}

/// Poincaré polynomial through the closed `Q` form, checked against
/// [`poincare_closed`].
pub fn q_closed(instance: &Instance, opts: &ComputeOptions) -> Result<BettiResult> {
    let ss = check_stability(instance, opts)?;
    let q = q_closed_ratfunc(&instance.data, instance.degree, instance.genus);
    let p = &q_to_p_factor(&instance.data, instance.genus) * &q;
    let result = certify(&p, instance, Method::QClosed, ss)?;
    let reference = certify(&closed_ratfunc(instance), instance, Method::Closed, ss)?;
    if let Some((exponent, got, expected)) = super::first_difference(&result.poly, &reference.poly) {
        return Err(Error::MismatchAgainstClosed {
            method: "qclosed",
            exponent,
            got: Box::new(got),
            expected: Box::new(expected),
        });
    }
    Ok(result)
}
