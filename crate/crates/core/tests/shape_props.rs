//! Conjugation, dented partitions, index sets and the flag conditions.

mod common;

use common::{flags, partition, shape_flags};
use grothendieck::shape::{
    col_hypothesis, row_hypothesis, valid_index_sets, DentedShape, FlagPair, IndexSet, Partition, SkewShape,
};
use proptest::prelude::*;
use std::collections::BTreeSet;

/// `k` with `λ_1 + 1 = ... = λ_{k-1} + 1 = λ_k >= λ_{k+1} >= ...`.
fn dent_row(parts: &[u32]) -> Option<usize> {
    (1..=parts.len()).find(|&k| {
        let lk = parts[k - 1];
        parts[..k - 1].iter().all(|&p| p + 1 == lk) && parts[k - 1..].windows(2).all(|w| w[0] >= w[1])
    })
}

fn dented() -> impl Strategy<Value = Vec<u32>> {
    (1usize..=4).prop_flat_map(|n| (partition(n, 4), 1..=n)).prop_map(|(mut lam, k)| {
        if k > 1 && lam[k - 1] >= 1 {
            let top = lam[k - 1];
            for p in lam.iter_mut().take(k - 1) {
                *p = top - 1;
            }
        }
        lam
    })
}

fn shift(f: &FlagPair, c: u32) -> FlagPair {
    FlagPair::new(f.r.clone(), f.s.iter().map(|s| s + c).collect()).unwrap()
}

proptest! {
    #![proptest_config(common::config(500, 0x5eed_0003))]

    #[test]
    fn transpose_is_an_involution(lam in (1usize..=5).prop_flat_map(|n| partition(n, 5))) {
        let p = Partition::new(lam.clone()).unwrap();
        let t = p.transpose();
        prop_assert_eq!(t.size(), p.size());
        prop_assert_eq!(t.transpose().padded(p.n()), p.clone());
        for (i, &l) in lam.iter().enumerate() {
            for j in 1..=6u32 {
                let inside = j <= l;
                prop_assert_eq!(inside, t.part(j as usize) > i as u32);
            }
        }
    }

    #[test]
    fn skew_transpose_is_an_involution(sh in common::skew(4, 4)) {
        let t = sh.transpose().unwrap();
        prop_assert_eq!(t.size(), sh.size());
        let back = t.transpose().unwrap();
        let cells: BTreeSet<(usize, u32)> = sh.cells().into_iter().collect();
        let back_cells: BTreeSet<(usize, u32)> = back.cells().into_iter().collect();
        prop_assert_eq!(back_cells, cells.clone());
        let flipped: BTreeSet<(usize, u32)> = t.cells().into_iter().map(|(i, j)| (j as usize, i as u32)).collect();
        prop_assert_eq!(flipped, cells);
    }

    #[test]
    fn dented_shapes_validate_by_definition(v in prop_oneof![dented(), prop::collection::vec(0u32..=4, 1..=4)]) {
        let want = dent_row(&v);
        match DentedShape::new(v.clone()) {
            Ok(d) => {
                let k = want.expect("accepted a non-dented shape");
                prop_assert_eq!(d.minimal_cell(), (k, v[k - 1]));
                prop_assert_eq!(d.is_partition(), Partition::new(v.clone()).is_ok());
            }
            Err(_) => prop_assert!(want.is_none()),
        }
        let k1 = DentedShape::new(v.clone()).map(|d| d.minimal_cell().0 == 1).unwrap_or(false);
        prop_assert_eq!(k1, Partition::new(v).is_ok());
    }

    #[test]
    fn index_sets_match_definition(v in dented(), mask in 0u32..32) {
        let d = DentedShape::new(v.clone()).unwrap();
        let n = v.len();
        let set: BTreeSet<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let idx = IndexSet(set.clone());
        let (k, lk) = d.minimal_cell();
        let len = v.iter().rposition(|&p| p > 0).map_or(0, |p| p + 1);
        let ok = (k..=len).any(|p| {
            let flat = v[k - 1..p].iter().all(|&x| x == lk);
            let full: BTreeSet<usize> = (1..=p).collect();
            let mut dent = full.clone();
            dent.remove(&k);
            flat && (set == full || set == dent)
        });
        prop_assert_eq!(idx.validate(&d).is_ok(), ok);
        prop_assert_eq!(valid_index_sets(&d).contains(&idx), ok);
    }

    #[test]
    fn row_hypothesis_survives_raising_s((sh, f) in shape_flags(4, 4, 4, false), c in 0u32..=3) {
        if row_hypothesis(&sh, &f) {
            prop_assert!(row_hypothesis(&sh, &shift(&f, c)));
        }
        if col_hypothesis(&sh, &f) {
            prop_assert!(col_hypothesis(&sh, &shift(&f, c)));
        }
    }

    #[test]
    fn sorted_flags_satisfy_row_hypothesis(sh in common::skew(4, 4), f in flags(4, 1, 4, true)) {
        let n = sh.n();
        let f = FlagPair::new(f.r[..n].to_vec(), f.s[..n].to_vec()).unwrap();
        prop_assert!(row_hypothesis(&sh, &f));
    }

    #[test]
    fn text_forms_parse_back(sh in common::skew(4, 4), f in flags(3, 0, 5, false)) {
        let back = SkewShape::parse(&sh.to_string()).unwrap();
        let cells = |s: &SkewShape| s.cells().into_iter().collect::<BTreeSet<_>>();
        prop_assert_eq!(cells(&back), cells(&sh));
        prop_assert_eq!(FlagPair::parse(&f.to_string()).unwrap(), f);
        let idx = IndexSet::from_slice(&[1, 3]);
        prop_assert_eq!(IndexSet::parse(&format!("I={}", idx.to_string().trim_matches(|c| c == '{' || c == '}'))).unwrap(), idx);
    }
}
