//! Shared proptest configuration and generators.
#![allow(dead_code)]

use grothendieck::shape::{FlagPair, SkewShape};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, RngSeed};

/// Seed-pinned configuration with `cases` cases.
pub fn config(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_algorithm: RngAlgorithm::ChaCha,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        max_global_rejects: 1_000_000,
        ..Config::default()
    }
}

/// A partition with exactly `n` parts (trailing zeros allowed), parts at most `max`.
pub fn partition(n: usize, max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..=max, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

/// A partition `μ ⊆ λ`, drawn as fractions of each part.
pub fn sub_partition(lam: Vec<u32>) -> impl Strategy<Value = (Vec<u32>, Vec<u32>)> {
    let n = lam.len();
    prop::collection::vec(0u32..=100, n).prop_map(move |fr| {
        let mut mu: Vec<u32> = Vec::with_capacity(n);
        for (i, (&l, &f)) in lam.iter().zip(&fr).enumerate() {
            let cap = if i == 0 { l } else { l.min(mu[i - 1]) };
            mu.push(cap * f / 100);
        }
        (lam.clone(), mu)
    })
}

/// `(λ, μ)` with `μ ⊆ λ`, `1 <= n <= max_n`.
pub fn skew(max_n: usize, max_part: u32) -> impl Strategy<Value = SkewShape> {
    (1..=max_n)
        .prop_flat_map(move |n| partition(n, max_part))
        .prop_flat_map(sub_partition)
        .prop_map(|(lam, mu)| SkewShape::new(lam, mu))
}

/// Flags `r, s ∈ [lo, hi]^n`, optionally weakly increasing.
pub fn flags(n: usize, lo: u32, hi: u32, sorted: bool) -> impl Strategy<Value = FlagPair> {
    (prop::collection::vec(lo..=hi, n), prop::collection::vec(lo..=hi, n)).prop_map(move |(mut r, mut s)| {
        if sorted {
            r.sort_unstable();
            s.sort_unstable();
        }
        FlagPair::new(r, s).unwrap()
    })
}

/// A skew shape together with flags of matching length.
pub fn shape_flags(max_n: usize, max_part: u32, hi: u32, sorted: bool) -> impl Strategy<Value = (SkewShape, FlagPair)> {
    skew(max_n, max_part).prop_flat_map(move |sh| {
        let n = sh.n();
        (Just(sh), flags(n, 1, hi, sorted))
    })
}

/// A nonempty skew shape with flags satisfying `1 <= r_i <= s_i <= hi`.
pub fn live_shape_flags(max_n: usize, max_part: u32, hi: u32) -> impl Strategy<Value = (SkewShape, FlagPair)> {
    skew(max_n, max_part).prop_filter("nonempty", |sh| sh.size() > 0).prop_flat_map(move |sh| {
        let n = sh.n();
        let pair = (1..=hi).prop_flat_map(move |r| (Just(r), r..=hi));
        (Just(sh), prop::collection::vec(pair, n))
            .prop_map(|(sh, rs)| (sh, FlagPair::new(rs.iter().map(|p| p.0).collect(), rs.iter().map(|p| p.1).collect()).unwrap()))
    })
}
