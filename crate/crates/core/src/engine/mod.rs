//! Poincaré polynomials by three independent routes.
//!
//! * [`poincare_closed`] sums one closed-form rational function per
//!   partition and certifies the total is a polynomial.
//! * [`q_closed`] computes the `Q` series of every Harder-Narasimhan stratum
//!   in closed form and converts it into a Poincaré polynomial.
//! * [`recursion_beta`] inverts the Harder-Narasimhan stratification as a
//!   truncated series recursion over lower-rank data.
//!
//! [`siegel_identity_check`] ties the closed `Q` values back to the mass
//! formula. [`compute`] and [`compare`] dispatch between the routes.

mod closed;
mod recursion;
mod result;
mod siegel;
mod tuples;

pub use closed::{closed_ratfunc, poincare_closed, q_closed, q_closed_ratfunc, q_to_p_factor};
pub use recursion::{recursion_beta, RecursionSolver};
pub use result::BettiResult;
pub use siegel::{siegel_identity_check, SiegelReport};
pub use tuples::degree_tuples;

use crate::parabolic::{semistability_witness, Instance};
use crate::rank2::{poincare_rank2, Rank2Profile};
use crate::{Error, Rational, Result};
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Closed,
    QClosed,
    Recursion,
    Rank2,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Closed, Method::QClosed, Method::Recursion, Method::Rank2];

    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::QClosed => "qclosed",
            Method::Recursion => "recursion",
            Method::Rank2 => "rank2",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| {
            Error::InvalidData(format!("unknown method {s:?}; expected closed, qclosed, recursion or rank2"))
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComputeOptions {
    /// Truncation for the recursion; defaults to [`default_truncation`].
    pub truncation: Option<i64>,
    /// Compute even when semistable and stable loci differ.
    pub force: bool,
}

/// `2 dim + 2`, but never below 2 so that empty spaces are still probed.
pub fn default_truncation(dim: i64) -> i64 {
    (2 * dim + 2).max(2)
}

/// Refuses instances with strictly semistable points unless forced.
pub(crate) fn check_stability(instance: &Instance, opts: &ComputeOptions) -> Result<bool> {
    match semistability_witness(instance) {
        None => Ok(true),
        Some(_) if opts.force => Ok(false),
        Some(w) => Err(Error::StrictSemistable { witness: w.sub.to_string(), degree: w.degree }),
    }
}

/// Runs one method.
pub fn compute(instance: &Instance, method: Method, opts: &ComputeOptions) -> Result<BettiResult> {
    match method {
        Method::Closed => poincare_closed(instance, opts),
        Method::QClosed => q_closed(instance, opts),
        Method::Recursion => {
            let ss = check_stability(instance, opts)?;
            let dim = instance.moduli_dim();
            let n = opts.truncation.unwrap_or_else(|| default_truncation(dim));
            let series = recursion_beta(instance, n)?;
            BettiResult::from_series(&series, dim, Method::Recursion, ss)
        }
        Method::Rank2 => {
            if instance.data.rank() != 2 {
                return Err(Error::MethodInapplicable(format!("rank2 needs rank 2, got {}", instance.data.rank())));
            }
            let ss = check_stability(instance, opts)?;
            let mut r = poincare_rank2(&Rank2Profile::from_instance(instance)?)?;
            r.ss_eq_stable = ss;
            Ok(r)
        }
    }
}

/// First coefficient where two results differ.
#[derive(Clone, Debug, PartialEq)]
pub struct Disagreement {
    pub method: Method,
    pub reference: Method,
    pub exponent: i64,
    pub got: Rational,
    pub expected: Rational,
}

#[derive(Debug)]
pub struct CompareReport {
    pub results: Vec<(Method, Result<BettiResult>)>,
    pub disagreement: Option<Disagreement>,
}

impl CompareReport {
    /// Every applicable method succeeded and all polynomials coincide.
    pub fn agree(&self) -> bool {
        self.disagreement.is_none() && self.results.iter().all(|(_, r)| r.is_ok())
    }
}

/// Methods that make sense for this instance.
pub fn applicable_methods(instance: &Instance) -> Vec<Method> {
    let mut m = vec![Method::Closed, Method::QClosed, Method::Recursion];
    if instance.data.rank() == 2 {
        m.push(Method::Rank2);
    }
    m
}

/// Runs every applicable method in parallel and compares coefficientwise.
pub fn compare(instance: &Instance, opts: &ComputeOptions) -> CompareReport {
    let methods = applicable_methods(instance);
    let results: Vec<(Method, Result<BettiResult>)> =
        methods.par_iter().map(|&m| (m, compute(instance, m, opts))).collect();
    let mut disagreement = None;
    let reference = results.iter().find_map(|(m, r)| r.as_ref().ok().map(|r| (*m, r)));
    if let Some((ref_method, reference)) = reference {
        for (m, r) in &results {
            let Ok(r) = r else { continue };
            if let Some((exponent, got, expected)) = first_difference(&r.poly, &reference.poly) {
                disagreement = Some(Disagreement { method: *m, reference: ref_method, exponent, got, expected });
                break;
            }
        }
    }
    CompareReport { results, disagreement }
}

/// Lowest exponent where `a` and `b` differ.
pub fn first_difference(a: &crate::Poly, b: &crate::Poly) -> Option<(i64, Rational, Rational)> {
    let diff = a - b;
    diff.min_exp().map(|e| (e, a.coeff(e), b.coeff(e)))
}
