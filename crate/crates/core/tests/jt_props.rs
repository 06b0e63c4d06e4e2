//! Determinant identities on generated instances: recurrences, block splitting, gating,
//! and agreement with the tableau sums.

mod common;

use common::{live_shape_flags, partition, sub_partition};
use grothendieck::crosscheck::lemmas::{
    check_block_split, check_chi, check_rec1, check_rec1_dual, check_rec2, check_rec2c, check_rec3, check_rec_main, Instance,
    Outcome,
};
use grothendieck::jt::{bialternant, det_ring, jt_eval, FlagKind, GFamily, JtSpec};
use grothendieck::shape::{row_hypothesis, valid_index_sets, DentedShape, FlagPair, Partition, SkewShape};
use grothendieck::tableau::{mmsvt_sum, mrpp_indexed_sum, mrpp_sum, FlagMode, Variant};
use grothendieck::{Int, ParamPoly, Var};
use proptest::prelude::*;

fn instance(max_n: usize, hi: u32, sorted: bool) -> impl Strategy<Value = Instance> {
    (1..=max_n)
        .prop_flat_map(|n| partition(n, 3))
        .prop_flat_map(sub_partition)
        .prop_flat_map(move |(lam, mu)| {
            let n = lam.len();
            (Just(lam), Just(mu), prop::collection::vec(1..=hi, n), prop::collection::vec(1..=hi, n))
        })
        .prop_map(move |(lam, mu, mut r, mut s)| {
            if sorted {
                r.sort_unstable();
                s.sort_unstable();
            }
            Instance { lam, mu, r, s }
        })
}

fn dented_instance() -> impl Strategy<Value = (Instance, usize)> {
    (1usize..=3)
        .prop_flat_map(|n| (partition(n, 4), 1..=n))
        .prop_map(|(mut lam, k)| {
            if k > 1 && lam[k - 1] >= 1 {
                let top = lam[k - 1];
                for p in lam.iter_mut().take(k - 1) {
                    *p = top - 1;
                }
            }
            lam
        })
        .prop_flat_map(|lam| {
            let n = lam.len();
            let cap: Vec<u32> = lam.iter().map(|v| v.saturating_sub(1)).collect();
            (Just(lam), sub_partition(cap), prop::collection::vec(1u32..=3, n), prop::collection::vec(1u32..=3, n), 0usize..8)
        })
        .prop_map(|(lam, (_, mu), mut r, mut s, pick)| {
            r.sort_unstable();
            s.sort_unstable();
            (Instance { lam, mu, r, s }, pick)
        })
}

fn holds(o: Outcome) -> Result<(), TestCaseError> {
    match o {
        Outcome::Skip => Err(TestCaseError::reject("preconditions")),
        Outcome::Pass => Ok(()),
        Outcome::Fail(msg) => Err(TestCaseError::fail(msg)),
    }
}

/// Leibniz expansion over all permutations.
fn leibniz(m: &[Vec<ParamPoly>]) -> ParamPoly {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for k in 0..=p.len() {
                let mut q = p.clone();
                q.insert(k, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = m.len();
    let mut acc = ParamPoly::zero(m.first().and_then(|r| r.first()).and_then(|p| p.trunc()));
    for p in perms(n) {
        let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut t = ParamPoly::one(acc.trunc());
        for (i, &j) in p.iter().enumerate() {
            t = t.checked_mul(&m[i][j]).unwrap();
        }
        if inv % 2 == 1 {
            t = t.neg();
        }
        acc = acc.checked_add(&t).unwrap();
    }
    acc
}

fn small_poly() -> impl Strategy<Value = ParamPoly> {
    let var = prop_oneof![(1u32..=2).prop_map(Var::x), (1u32..=2).prop_map(Var::a), (1u32..=2).prop_map(Var::b)];
    prop::collection::vec((var, -2i64..=2), 0..=3).prop_map(|v| {
        let mut p = ParamPoly::zero(None);
        for (x, c) in v {
            p = p.checked_add(&ParamPoly::var(x, None).scale(&Int::from(c))).unwrap();
        }
        p.checked_add(&ParamPoly::constant(1, None)).unwrap()
    })
}

proptest! {
    #![proptest_config(common::config(120, 0x5eed_0005))]

    #[test]
    fn det_ring_matches_leibniz(m in (0usize..=4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(small_poly(), n), n))) {
        prop_assert_eq!(det_ring(&m).unwrap(), leibniz(&m));
    }

    #[test]
    fn small_g_determinants_are_tableau_sums((sh, f) in live_shape_flags(3, 3, 4)) {
        prop_assume!(sh.inner_contained() && row_hypothesis(&sh, &f));
        let row = jt_eval(&JtSpec::new(GFamily::Small, FlagKind::Row, sh.clone(), f.clone())).unwrap();
        prop_assert_eq!(row, mrpp_sum(&sh, &f, FlagMode::Row, Variant::Left, None));
        let col = jt_eval(&JtSpec::new(GFamily::Small, FlagKind::Col, sh.clone(), f.clone())).unwrap();
        prop_assert_eq!(col, mrpp_sum(&sh.transpose().unwrap(), &f, FlagMode::Col, Variant::Left, None));
    }

    #[test]
    fn big_g_row_determinant_is_tableau_sum((sh, f) in live_shape_flags(3, 2, 3), d in 0u32..=4) {
        prop_assume!(sh.inner_contained() && row_hypothesis(&sh, &f));
        let det = jt_eval(&JtSpec::new(GFamily::Big, FlagKind::Row, sh.clone(), f.clone()).trunc(d)).unwrap();
        prop_assert_eq!(&det, &mmsvt_sum(&sh, &f, FlagMode::Row, d));
        let more = jt_eval(&JtSpec::new(GFamily::Big, FlagKind::Row, sh, f).trunc(d + 1)).unwrap();
        prop_assert_eq!(more.truncate(d), det);
    }

    #[test]
    fn indexed_determinants_are_indexed_sums((inst, pick) in dented_instance()) {
        let d = DentedShape::new(inst.lam.clone()).unwrap();
        let sets = valid_index_sets(&d);
        prop_assume!(!sets.is_empty() && inst.flags().r_le_s());
        let index = sets[pick % sets.len()].clone();
        let sh = inst.shape();
        let f = inst.flags();
        let row = jt_eval(&JtSpec::new(GFamily::Small, FlagKind::Row, sh.clone(), f.clone()).indexed(index.clone())).unwrap();
        prop_assert_eq!(row, mrpp_indexed_sum(&sh, &f, &index, Variant::Left));
        let col = jt_eval(&JtSpec::new(GFamily::Small, FlagKind::Col, sh.clone(), f.clone()).indexed(index.clone())).unwrap();
        prop_assert_eq!(col, mrpp_indexed_sum(&sh, &f, &index, Variant::Bottom));
    }

    #[test]
    fn rec1_factorizes(inst in instance(3, 3, false), t in 1usize..=2, col in any::<bool>()) {
        holds(check_rec1(&inst, t, col, 3))?;
    }

    #[test]
    fn rec2_clears_denominators(inst in instance(3, 4, true), k in 1usize..=3) {
        holds(check_rec2(&inst, k, 3))?;
    }

    #[test]
    fn rec2c_clears_denominators(inst in instance(3, 4, false), k in 1usize..=3) {
        holds(check_rec2c(&inst, k, 3))?;
    }

    #[test]
    fn rec3_drops_a_flag(inst in instance(3, 4, true), k in 1usize..=3, col in any::<bool>()) {
        holds(check_rec3(&inst, k, col, 3))?;
    }

    #[test]
    fn dual_recurrences((inst, pick) in dented_instance(), col in any::<bool>()) {
        let d = DentedShape::new(inst.lam.clone()).unwrap();
        let sets = valid_index_sets(&d);
        prop_assume!(!sets.is_empty());
        holds(check_rec_main(&inst, &sets[pick % sets.len()], col))?;
    }

    #[test]
    fn dual_factorization((inst, pick) in dented_instance(), t in 1usize..=2, col in any::<bool>()) {
        let d = DentedShape::new(inst.lam.clone()).unwrap();
        let sets = valid_index_sets(&d);
        prop_assume!(!sets.is_empty());
        holds(check_rec1_dual(&inst, &sets[pick % sets.len()], t, col))?;
    }

    #[test]
    fn blocks_split(mut inst in instance(3, 3, false), k in 1usize..=3, col in any::<bool>()) {
        let n = inst.lam.len();
        prop_assume!(k <= n);
        inst.mu[k - 1] = inst.lam[k - 1];
        for i in 0..k - 1 {
            inst.mu[i] = inst.mu[i].max(inst.mu[k - 1]).min(inst.lam[i]);
        }
        holds(check_block_split(&inst, k, col))?;
    }

    #[test]
    fn non_contained_determinants_vanish(lam in partition(3, 3), mu in partition(3, 3), f in common::flags(3, 1, 3, false), col in any::<bool>()) {
        let inst = Instance { lam, mu, r: f.r, s: f.s };
        prop_assume!(inst.mu.iter().zip(&inst.lam).any(|(m, l)| m > l));
        holds(check_block_split(&inst, 1, col))?;
    }

    #[test]
    fn gates_do_not_matter(inst in instance(3, 4, false), col in any::<bool>()) {
        holds(check_chi(&inst, col))?;
    }

    #[test]
    fn bialternant_is_unflagged_determinant(lam in (1usize..=3).prop_flat_map(|n| partition(n, 3)), d in 1u32..=4) {
        let n = lam.len();
        let p = Partition::new(lam.clone()).unwrap();
        let sh = SkewShape::straight(lam);
        let full = FlagPair::new(vec![1; n], vec![n as u32; n]).unwrap();
        let det = jt_eval(&JtSpec::new(GFamily::Small, FlagKind::Row, sh.clone(), full.clone())).unwrap();
        prop_assert_eq!(bialternant(GFamily::Small, &p, n, d).unwrap(), det);
        let det = jt_eval(&JtSpec::new(GFamily::Big, FlagKind::Row, sh, full).trunc(d)).unwrap();
        prop_assert_eq!(bialternant(GFamily::Big, &p, n, d).unwrap(), det);
    }
}
