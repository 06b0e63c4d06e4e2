//! Ring laws, exact division, parameter shifts and serialization.

mod common;

use grothendieck::{Family, Int, Monomial, ParamPoly, Var};
use proptest::prelude::*;

const FAMS: [Family; 3] = [Family::X, Family::Alpha, Family::Beta];

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((0usize..3, 1u32..=3, 0u32..=2), 0..4).prop_map(|v| {
        let exps: Vec<(Var, u32)> = v.iter().map(|&(f, i, e)| (Var { family: FAMS[f], index: i }, e)).collect();
        Monomial::from_exps(&exps)
    })
}

fn coeff() -> impl Strategy<Value = Int> {
    prop_oneof![4 => -6i64..=6, 1 => any::<i64>()].prop_map(Int::from)
}

fn poly(trunc: Option<u32>) -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec((monomial(), coeff()), 0..6).prop_map(move |t| ParamPoly::from_terms(t, trunc))
}

fn trunc() -> impl Strategy<Value = Option<u32>> {
    prop_oneof![Just(None), (0u32..=4).prop_map(Some)]
}

fn triple() -> impl Strategy<Value = (ParamPoly, ParamPoly, ParamPoly)> {
    trunc().prop_flat_map(|t| (poly(t), poly(t), poly(t)))
}

fn add(p: &ParamPoly, q: &ParamPoly) -> ParamPoly {
    p.checked_add(q).unwrap()
}

fn mul(p: &ParamPoly, q: &ParamPoly) -> ParamPoly {
    p.checked_mul(q).unwrap()
}

fn within_bound(p: &ParamPoly) -> bool {
    p.trunc().map_or(true, |t| p.terms().all(|(m, _)| m.x_degree() <= t))
}

/// `Π (x_i - x_j)` over the given pairs.
fn vandermonde_part(pairs: &[(u32, u32)]) -> ParamPoly {
    let mut den = ParamPoly::one(None);
    for &(i, j) in pairs {
        let f = ParamPoly::var(Var::x(i), None).checked_sub(&ParamPoly::var(Var::x(j), None)).unwrap();
        den = mul(&den, &f);
    }
    den
}

fn pairs() -> impl Strategy<Value = Vec<(u32, u32)>> {
    prop::collection::vec((1u32..=4, 1u32..=4).prop_filter("distinct", |(i, j)| i != j), 1..=3)
}

proptest! {
    #![proptest_config(common::config(500, 0x5eed_0001))]

    #[test]
    fn ring_laws((p, q, r) in triple()) {
        prop_assert_eq!(add(&p, &q), add(&q, &p));
        prop_assert_eq!(mul(&p, &q), mul(&q, &p));
        prop_assert_eq!(add(&add(&p, &q), &r), add(&p, &add(&q, &r)));
        prop_assert_eq!(mul(&mul(&p, &q), &r), mul(&p, &mul(&q, &r)));
        prop_assert_eq!(mul(&p, &add(&q, &r)), add(&mul(&p, &q), &mul(&p, &r)));
        prop_assert!(add(&p, &p.neg()).is_zero());
        let one = ParamPoly::one(p.trunc());
        prop_assert_eq!(mul(&p, &one), p.clone());
        for v in [add(&p, &q), mul(&p, &q), mul(&mul(&p, &q), &r)] {
            prop_assert!(within_bound(&v));
            prop_assert_eq!(v.trunc(), p.trunc());
        }
    }

    #[test]
    fn truncation_commutes_with_products((p, q, _) in triple().prop_filter("exact", |(p, _, _)| p.trunc().is_none()), d in 0u32..=4) {
        let lhs = mul(&p, &q).truncate(d);
        let rhs = mul(&p.truncate(d), &q.truncate(d));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_division_recovers_quotient(q in poly(None), pairs in pairs(), guard in 0u32..=4) {
        let den = vandermonde_part(&pairs);
        let deg = pairs.len() as u32;
        let num = q.mul_with_trunc(&den, Some(guard + deg));
        let back = num.divide_exact(&den, Some(guard)).unwrap();
        prop_assert_eq!(back, q.truncate(guard));
        let exact = mul(&q, &den).divide_exact(&den, None).unwrap();
        prop_assert_eq!(exact, q);
    }

    #[test]
    fn shift_is_a_homomorphism((p, q, _) in triple(), fam in prop_oneof![Just(Family::Alpha), Just(Family::Beta)], k in 0i64..=4) {
        let s = |x: &ParamPoly| x.shift_params(fam, k).unwrap();
        prop_assert_eq!(s(&mul(&p, &q)), mul(&s(&p), &s(&q)));
        prop_assert_eq!(s(&add(&p, &q)), add(&s(&p), &s(&q)));
        prop_assert_eq!(s(&p).shift_params(fam, -k).unwrap(), p);
    }

    #[test]
    fn json_round_trip((p, _, _) in triple()) {
        let v = p.to_json();
        prop_assert_eq!(ParamPoly::from_json(&v).unwrap(), p.clone());
        let text = serde_json::to_string(&v).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(ParamPoly::from_json(&parsed).unwrap(), p);
    }
}
