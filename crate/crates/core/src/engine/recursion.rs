use super::degree_tuples;
use crate::algebra::expand_series;
use crate::parabolic::{enumerate_partitions, Instance, QuasiParabolicData};
use crate::tilde::{q_r, q_r_order};
use crate::{Error, Poly, Result, Series};
use std::collections::HashMap;
use std::sync::RwLock;

/// `sum_I sum_(tuples) t^(2 N_R(I; d)) prod_k Q_(R_k, d_k)` through `t^prec`,
/// over partitions of length at least `min_len`, with the block series
/// supplied by `block`.
///
/// Each block series starts no lower than `ord Q_(R_k)`, so a stratum
/// contributes nothing below `2 (spread - sigma) + sum_k ord Q_(R_k)`;
/// tuples whose spread pushes that past `prec` are never generated.
pub(crate) fn hn_sum(
    data: &QuasiParabolicData,
    genus: u32,
    degree: i64,
    prec: i64,
    min_len: usize,
    block: &mut dyn FnMut(&QuasiParabolicData, i64, i64) -> Result<Series>,
) -> Result<Series> {
    let mut total = Series::zero(prec);
    for part in enumerate_partitions(data) {
        let r = part.len();
        if r < min_len {
            continue;
        }
        let blocks: Vec<QuasiParabolicData> = (0..r).map(|k| part.block(data, k)).collect();
        let lbs: Vec<i64> = blocks.iter().map(|b| q_r_order(b, genus)).collect();
        let sum_lb: i64 = lbs.iter().sum();
        let sigma = part.sigma();
        let max_spread = (prec - sum_lb).div_euclid(2) + sigma;
        for (ds, spread) in degree_tuples(data, &part, degree, max_spread) {
            let n_exp = spread - sigma;
            let mut acc = Series::from_poly(&Poly::t_pow(2 * n_exp), prec - sum_lb);
            for k in 0..r {
                let need = prec - 2 * n_exp - (sum_lb - lbs[k]);
                let q = block(&blocks[k], ds[k], need)?;
                if let Some(v) = q.valuation() {
                    if v < lbs[k] {
                        return Err(Error::Internal(format!(
                            "block series of {} in degree {} starts at t^{v}, below the bound t^{}",
                            blocks[k], ds[k], lbs[k]
                        )));
                    }
                }
                acc = &acc * &q;
                acc = acc.truncate(prec - lbs[k + 1..].iter().sum::<i64>());
            }
            if acc.prec() < prec {
                return Err(Error::Internal(format!("stratum term known only through t^{}", acc.prec())));
            }
            total = &total + &acc;
        }
    }
    Ok(total)
}

/// Memoized solver for `Q_(R,d)` series by the Harder-Narasimhan recursion
/// `Q_(R,d) = Q_R - (strata of length >= 2)`.
///
/// Entries are keyed by the Seshadri form of the data and `d mod n`; a
/// cached series is reused whenever it is known far enough.
pub struct RecursionSolver {
    genus: u32,
    cache: RwLock<HashMap<(QuasiParabolicData, i64), Series>>,
}

impl RecursionSolver {
    pub fn new(genus: u32) -> Self {
        Self { genus, cache: RwLock::new(HashMap::new()) }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Number of memoized `(data, degree class)` entries.
    pub fn cache_len(&self) -> usize {
        self.cache.read().expect("cache lock").len()
    }

    /// `Q_(R,d)` through `t^prec`.
    pub fn q_series(&self, data: &QuasiParabolicData, degree: i64, prec: i64) -> Result<Series> {
        let data = data.normalize_seshadri();
        let n = data.rank() as i64;
        let key = (data, degree.rem_euclid(n));
        if let Some(s) = self.cache.read().expect("cache lock").get(&key) {
            if s.prec() >= prec {
                return Ok(s.truncate(prec));
            }
        }
        let (data, d) = &key;
        let base = expand_series(&q_r(data, self.genus), prec)?;
        let strata = hn_sum(data, self.genus, *d, prec, 2, &mut |b, e, p| self.q_series(b, e, p))?;
        let q = &base - &strata;
        let mut cache = self.cache.write().expect("cache lock");
        let keep = cache.get(&key).is_none_or(|old| old.prec() < q.prec());
        if keep {
            cache.insert(key, q.clone());
        }
        Ok(q)
    }
}

/// `P_(R,d)` through `t^n` from the recursion.
pub fn recursion_beta(instance: &Instance, n: i64) -> Result<Series> {
    let data = &instance.data;
    let g = instance.genus;
    let rank = data.rank() as i64;
    let shift = 2 * data.flag_dim() + rank * rank * (g as i64 - 1);
    let solver = RecursionSolver::new(g);
    let q = solver.q_series(data, instance.degree, n - shift)?;
    let p = q.shift(shift).mul_one_minus_t_pow(2, 1 - 2 * g as i64).mul_one_minus_t_pow(1, 2 * g as i64);
    Ok(p)
}
