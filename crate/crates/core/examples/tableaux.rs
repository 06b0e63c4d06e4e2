//! Marked multiset-valued tableaux and marked reverse plane partitions.

use grothendieck::shape::{FlagPair, SkewShape};
use grothendieck::tableau::{enum_mmsvt, enum_mrpp, mmsvt_sum, mrpp_sum, FlagMode, Variant};

fn main() {
    let sh = SkewShape::parse("1").unwrap();
    let f = FlagPair::new(vec![1], vec![2]).unwrap();
    for t in enum_mmsvt(&sh, &f, FlagMode::Row, 2) {
        let (m, c) = t.weight();
        println!("{}  weight {c} * {m}", t.to_json());
    }
    println!("sum: {}", mmsvt_sum(&sh, &f, FlagMode::Row, 2));

    let sh = SkewShape::parse("1,1").unwrap();
    let f = FlagPair::new(vec![1, 1], vec![2, 2]).unwrap();
    for t in enum_mrpp(&sh, &f, FlagMode::Row, Variant::Left, None) {
        let (m, c) = t.weight();
        println!("{}  weight {c} * {m}", t.to_json());
    }
    println!("sum: {}", mrpp_sum(&sh, &f, FlagMode::Row, Variant::Left, None));
}
