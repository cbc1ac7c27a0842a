use crate::algebra::rational::floor_i64;
use crate::parabolic::{spread, Partition, QuasiParabolicData};
use crate::Rational;

/// Degree tuples `(d_1, ..., d_r)` summing to `degree` whose parabolic
/// slopes `(d_k + alpha_k) / n_k` strictly decrease and whose spread
/// `sum_(k>l) (d_l n_k - d_k n_l)` is at most `max_spread`, together with
/// that spread.
///
/// Decreasing slopes bound every pair term from below:
/// `p_lk = d_l n_k - d_k n_l > alpha_k n_l - alpha_l n_k` for `l < k`.
/// The spread is the sum of all pair terms, and the prefix sums
/// `D_j = d_1 + ... + d_j` satisfy `n D_j - d N_j = sum_(l <= j < k) p_lk`.
/// So each `D_j` lies in a finite window: at least the bound of the pairs
/// cut at `j`, at most `max_spread` minus the bound of the pairs not cut.
/// Candidates in the window are then filtered exactly.
pub fn degree_tuples(
    data: &QuasiParabolicData,
    partition: &Partition,
    degree: i64,
    max_spread: i64,
) -> Vec<(Vec<i64>, i64)> {
    let r = partition.len();
    let ranks: Vec<i64> = partition.ranks().iter().map(|&x| x as i64).collect();
    let n = data.rank() as i64;
    let block_alpha: Vec<Rational> = (0..r).map(|k| partition.block(data, k).alpha()).collect();
    if r == 1 {
        return if max_spread >= 0 { vec![(vec![degree], 0)] } else { Vec::new() };
    }
    let q = |v: i64| Rational::from_integer(v.into());
    // pair_min[l][k]: smallest integer value of p_lk allowed by the slopes.
    let mut pair_min = vec![vec![0i64; r]; r];
    let mut total_min = 0i64;
    for k in 0..r {
        for l in 0..k {
            let bound = &block_alpha[k] * q(ranks[l]) - &block_alpha[l] * q(ranks[k]);
            pair_min[l][k] = floor_i64(&bound) + 1;
            total_min += pair_min[l][k];
        }
    }
    if total_min > max_spread {
        return Vec::new();
    }
    let mut windows = Vec::with_capacity(r - 1);
    let mut prefix_rank = 0i64;
    for (j, &nj) in ranks[..r - 1].iter().enumerate() {
        prefix_rank += nj;
        let cut: i64 = (0..=j).flat_map(|l| (j + 1..r).map(move |k| (l, k))).map(|(l, k)| pair_min[l][k]).sum();
        let dn = degree * prefix_rank;
        let lo = (cut + dn + n - 1).div_euclid(n);
        let hi = (max_spread - (total_min - cut) + dn).div_euclid(n);
        windows.push(lo..=hi);
    }
    let mut out = Vec::new();
    let mut prefix = vec![0i64; r - 1];
    let mut emit = |pre: &[i64]| {
        let mut ds = Vec::with_capacity(r);
        let mut last = 0;
        for &p in pre {
            ds.push(p - last);
            last = p;
        }
        ds.push(degree - last);
        let decreasing = (0..r - 1).all(|k| {
            (q(ds[k]) + &block_alpha[k]) * q(ranks[k + 1]) > (q(ds[k + 1]) + &block_alpha[k + 1]) * q(ranks[k])
        });
        if decreasing {
            let s = spread(partition.ranks(), &ds);
            if s <= max_spread {
                out.push((ds, s));
            }
        }
    };
    walk(0, &windows, &mut prefix, &mut emit);
    out
}

fn walk(j: usize, windows: &[std::ops::RangeInclusive<i64>], prefix: &mut Vec<i64>, emit: &mut dyn FnMut(&[i64])) {
    if j == windows.len() {
        emit(prefix);
        return;
    }
    for v in windows[j].clone() {
        prefix[j] = v;
        walk(j + 1, windows, prefix, emit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use crate::parabolic::{enumerate_partitions, ParabolicPoint};

    /// Brute force over a box of degree tuples.
    #[test]
    fn matches_brute_force_window() {
        let data =
            QuasiParabolicData::new(vec![ParabolicPoint::full_flag(vec![int(0), rat(1, 12), rat(1, 4)]).unwrap()])
                .unwrap();
        for part in enumerate_partitions(&data) {
            let r = part.len();
            let alphas: Vec<Rational> = (0..r).map(|k| part.block(&data, k).alpha()).collect();
            for d in -2..3 {
                for smax in [0, 3, 7] {
                    let got = degree_tuples(&data, &part, d, smax);
                    let mut want = Vec::new();
                    let span = -12..=12;
                    let mut stack = vec![Vec::<i64>::new()];
                    while let Some(v) = stack.pop() {
                        if v.len() == r - 1 {
                            let mut ds = v.clone();
                            ds.push(d - v.iter().sum::<i64>());
                            let ok = (0..r - 1).all(|k| {
                                (Rational::from_integer(ds[k].into()) + &alphas[k]) * int(part.ranks()[k + 1] as i64)
                                    > (Rational::from_integer(ds[k + 1].into()) + &alphas[k + 1])
                                        * int(part.ranks()[k] as i64)
                            });
                            let s = spread(part.ranks(), &ds);
                            if ok && s <= smax {
                                want.push((ds, s));
                            }
                            continue;
                        }
                        for x in span.clone() {
                            let mut w = v.clone();
                            w.push(x);
                            stack.push(w);
                        }
                    }
                    let mut got_sorted = got.clone();
                    got_sorted.sort();
                    want.sort();
                    assert_eq!(got_sorted, want, "partition {:?} d={d} smax={smax}", part.ranks());
                }
            }
        }
    }
}
