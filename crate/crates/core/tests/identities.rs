mod common;

use parbetti::algebra::rational::int;
use parbetti::parabolic::{chi_dr, d_lambda, delta, enumerate_partitions, spread};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn flag_dimension_defect_is_sigma_plus_sigma_prime(d in common::data(4)) {
        for part in enumerate_partitions(&d) {
            let blocks: i64 = (0..part.len()).map(|k| part.block(&d, k).flag_dim()).sum();
            prop_assert_eq!(d.flag_dim() - blocks, part.sigma() + part.sigma_prime());
        }
    }

    #[test]
    fn sigma_splits_with_the_delta_correction(d in common::data(4)) {
        for part in enumerate_partitions(&d) {
            for k in 1..part.len() {
                let split = part.induced_prefix(k).sigma() + part.induced_suffix(k).sigma() + part.prefix_delta(&d, k);
                prop_assert_eq!(part.sigma(), split);
            }
        }
    }

    #[test]
    fn c_exponent_is_sigma_minus_chi(d in common::data(4), ds in prop::collection::vec(-5i64..=5, 4), g in 0u32..4) {
        for part in enumerate_partitions(&d) {
            let ds = &ds[..part.len()];
            prop_assert_eq!(part.c_exp(ds, g), part.sigma() - chi_dr(part.ranks(), ds, g));
        }
    }

    #[test]
    fn chi_is_additive(ranks in prop::collection::vec(1u32..4, 2..5), ds in prop::collection::vec(-5i64..=5, 4), g in 0u32..4) {
        let ds = &ds[..ranks.len()];
        let head = chi_dr(&[ranks[0], ranks[1..].iter().sum()], &[ds[0], ds[1..].iter().sum()], g);
        prop_assert_eq!(head + chi_dr(&ranks[1..], &ds[1..], g), chi_dr(&ranks, ds, g));
    }

    #[test]
    fn n_exponent_peels_the_first_block(d in common::data(4), ds in prop::collection::vec(-5i64..=5, 4)) {
        let n = int(d.rank() as i64);
        for part in enumerate_partitions(&d).into_iter().filter(|p| p.len() >= 2) {
            let ds = &ds[..part.len()];
            let deg: i64 = ds.iter().sum();
            let first = part.block(&d, 0);
            let n1 = int(part.ranks()[0] as i64);
            let lambda = (int(ds[0]) + first.alpha()) / &n1;
            let lhs = part.n_exp(ds) - part.induced_suffix(1).n_exp(&ds[1..]);
            let rhs = &n1 * (&n * &lambda - int(deg)) - &n * first.alpha() - int(delta(&d, &first));
            prop_assert_eq!(int(lhs), rhs);
        }
    }

    #[test]
    fn m_prime_splits(d in common::data(4), deg in -5i64..=5, dk in -5i64..=5) {
        let n = d.rank() as i64;
        for part in enumerate_partitions(&d) {
            let r = part.len();
            let ranks: Vec<i64> = part.ranks().iter().map(|&x| x as i64).collect();
            for k in 1..r {
                let low = part.prefix(&d, k);
                let nl = low.rank() as i64;
                let lambda = (int(dk) + low.alpha()) / int(nl);
                prop_assert_eq!(d_lambda(&low, &lambda), int(dk));
                let lhs = part.induced_prefix(k).m_prime(dk) + part.induced_suffix(k).m_prime(deg - dk);
                let rhs = part.m_prime(deg) - (2 * nl - n - ranks[k - 1] + ranks[r - 1]) * dk - ranks[k - 1] - ranks[k]
                    + part.prefix_delta(&d, k)
                    + nl * deg;
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn spread_is_the_pairwise_sum(ranks in prop::collection::vec(1u32..4, 1..5), ds in prop::collection::vec(-5i64..=5, 4)) {
        let ds = &ds[..ranks.len()];
        let mut s = 0;
        for k in 0..ranks.len() {
            for l in 0..k {
                s += ds[l] * ranks[k] as i64 - ds[k] * ranks[l] as i64;
            }
        }
        prop_assert_eq!(spread(&ranks, ds), s);
    }
}
