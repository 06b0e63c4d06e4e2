//! Moving marks from the left-marked to the right-marked convention.

use grothendieck::shape::{FlagPair, SkewShape};
use grothendieck::tableau::{enum_mrpp, phi_left_to_right, FlagMode, Variant};

fn main() {
    let sh = SkewShape::parse("2,2").unwrap();
    let f = FlagPair::new(vec![1, 1], vec![2, 2]).unwrap();
    for t in enum_mrpp(&sh, &f, FlagMode::Row, Variant::Left, None).filter(|t| !t.marked.is_empty()) {
        let p = phi_left_to_right(&t);
        println!("{} -> {}  same weight: {}", t.to_json(), p.to_json(), t.weight() == p.weight());
    }
}
