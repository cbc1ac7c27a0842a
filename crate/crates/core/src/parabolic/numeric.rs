use super::QuasiParabolicData;
use crate::Rational;

/// `sum_(k>l) (d_l n_k - d_k n_l)`, the spread of a degree tuple.
pub fn spread(ranks: &[u32], degrees: &[i64]) -> i64 {
    assert_eq!(ranks.len(), degrees.len(), "one degree per block");
    let mut s = 0i64;
    for k in 0..ranks.len() {
        for l in 0..k {
            s += degrees[l] * ranks[k] as i64 - degrees[k] * ranks[l] as i64;
        }
    }
    s
}

/// Euler characteristic of the `Hom` between the pieces of a filtration
/// with ranks `nu` and degrees `delta`:
/// `sum_(k>l) (delta_l nu_k - delta_k nu_l) - (g-1) sum_(k>l) nu_l nu_k`.
pub fn chi_dr(ranks: &[u32], degrees: &[i64], genus: u32) -> i64 {
    let mut pairs = 0i64;
    for k in 0..ranks.len() {
        for l in 0..k {
            pairs += ranks[l] as i64 * ranks[k] as i64;
        }
    }
    spread(ranks, degrees) - (genus as i64 - 1) * pairs
}

/// `delta_R(L) = sum_P sum_(i>t) (R-L)_i L_t`.
pub fn delta(data: &QuasiParabolicData, sub: &QuasiParabolicData) -> i64 {
    let mut s = 0i64;
    for (p, q) in data.points().iter().zip(sub.points()) {
        let r = p.multiplicities();
        let l = q.multiplicities();
        for i in 0..r.len() {
            for t in 0..i {
                s += (r[i] - l[i]) as i64 * l[t] as i64;
            }
        }
    }
    s
}

/// `d(lambda, L) = n(L) lambda - alpha(L)`.
pub fn d_lambda(sub: &QuasiParabolicData, lambda: &Rational) -> Rational {
    Rational::from_integer(sub.rank().into()) * lambda - sub.alpha()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use crate::parabolic::ParabolicPoint;

    fn data(m: &[u32]) -> QuasiParabolicData {
        QuasiParabolicData::new(vec![ParabolicPoint::new(vec![int(0), rat(1, 3)], m.to_vec()).unwrap()]).unwrap()
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_dr(&[3], &[4], 5), 0);
        // Riemann-Roch reading: 1 - (g-1) = 0 at g = 2.
        assert_eq!(chi_dr(&[1, 1], &[1, 0], 2), 0);
        assert_eq!(chi_dr(&[1, 1], &[0, 0], 1), 0);
    }

    #[test]
    fn delta_examples() {
        let r = data(&[1, 1]);
        assert_eq!(delta(&r, &data(&[1, 0])), 1);
        assert_eq!(delta(&r, &data(&[0, 1])), 0);
    }

    #[test]
    fn d_lambda_examples() {
        assert_eq!(d_lambda(&data(&[1, 0]), &rat(1, 2)), rat(1, 2));
        assert_eq!(d_lambda(&data(&[0, 1]), &rat(1, 3)), int(0));
        let l = data(&[1, 1]);
        assert_eq!(d_lambda(&l, &(l.alpha() / int(2))), int(0));
    }
}
