use super::closed::q_closed_ratfunc;
use super::recursion::hn_sum;
use crate::algebra::expand_series;
use crate::parabolic::QuasiParabolicData;
use crate::tilde::q_r;
use crate::{Rational, Result};
use std::collections::HashMap;

/// Outcome of [`siegel_identity_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct SiegelReport {
    pub holds: bool,
    /// `(exponent, Q_R coefficient, stratified sum coefficient)` at the
    /// first mismatch.
    pub first_difference: Option<(i64, Rational, Rational)>,
    pub truncation: i64,
}

/// Checks `Q_R = sum_(r>=1) sum_I sum_(tuples) t^(2N) prod Q_(R_k,d_k)`
/// through `t^n`, with every `Q_(R_k,d_k)` taken from the closed form.
pub fn siegel_identity_check(data: &QuasiParabolicData, genus: u32, degree: i64, n: i64) -> Result<SiegelReport> {
    let lhs = expand_series(&q_r(data, genus), n)?;
    let mut memo: HashMap<(QuasiParabolicData, i64), crate::RatFunc> = HashMap::new();
    let rhs = hn_sum(data, genus, degree, n, 1, &mut |b, d, p| {
        let key = (b.normalize_seshadri(), d);
        let f = memo.entry(key).or_insert_with_key(|(b, d)| q_closed_ratfunc(b, *d, genus));
        expand_series(f, p)
    })?;
    let diff = (&lhs - &rhs).to_poly();
    let first_difference = diff.min_exp().map(|e| (e, lhs.coeff(e), rhs.coeff(e)));
    Ok(SiegelReport { holds: first_difference.is_none(), first_difference, truncation: n })
}
