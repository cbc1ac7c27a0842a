#![allow(dead_code)]

use parbetti::algebra::rational::rat;
use parbetti::{Instance, ParabolicPoint, Poly, QuasiParabolicData};
use proptest::prelude::*;

/// A composition of `n` from cut bits between consecutive units.
fn composition(n: u32, cuts: &[bool]) -> Vec<u32> {
    let mut out = Vec::new();
    let mut run = 1;
    for &c in cuts.iter().take(n as usize - 1) {
        if c {
            out.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    out.push(run);
    out
}

/// One marked point of rank `n`: random flag type, weights `k / den`.
pub fn point(n: u32) -> impl Strategy<Value = ParabolicPoint> {
    (prop::collection::vec(any::<bool>(), 3), prop::sample::select(vec![5i64, 7, 11, 13])).prop_flat_map(
        move |(cuts, den)| {
            let mults = composition(n, &cuts);
            let m = mults.len();
            prop::sample::subsequence((0..den).collect::<Vec<_>>(), m).prop_map(move |nums| {
                ParabolicPoint::new(nums.into_iter().map(|k| rat(k, den)).collect(), mults.clone()).unwrap()
            })
        },
    )
}

/// Data of rank `1..=max_rank` with one or two points.
pub fn data(max_rank: u32) -> impl Strategy<Value = QuasiParabolicData> {
    (1..=max_rank, 1..=2usize).prop_flat_map(|(n, k)| {
        prop::collection::vec(point(n), k).prop_map(|pts| QuasiParabolicData::new(pts).unwrap())
    })
}

pub fn instance(max_rank: u32, max_genus: u32) -> impl Strategy<Value = Instance> {
    (data(max_rank), 0..=max_genus, -4i64..=4).prop_map(|(d, g, deg)| Instance::new(g, deg, d))
}

pub fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    (-3i64..=3, prop::collection::vec(-5i64..=5, 0..=max_len)).prop_map(|(start, c)| Poly::from_ints(start, &c))
}
