//! Bialternant formulas against the unflagged determinants.

use grothendieck::jt::{bialternant, jt_eval, FlagKind, GFamily, JtSpec};
use grothendieck::shape::{FlagPair, Partition, SkewShape};

fn main() {
    let lam = Partition::new(vec![2, 1, 0]).unwrap();
    let sh = SkewShape::straight(lam.parts().to_vec());
    let full = FlagPair::full(3);
    let b = bialternant(GFamily::Big, &lam, 3, 4).unwrap();
    let d = jt_eval(&JtSpec::new(GFamily::Big, FlagKind::None, sh.clone(), full.clone()).trunc(4)).unwrap();
    println!("G_(2,1)(x1,x2,x3) to degree 4: {} terms, agrees: {}", b.len(), b == d);
    let b = bialternant(GFamily::Small, &lam, 3, 0).unwrap();
    let d = jt_eval(&JtSpec::new(GFamily::Small, FlagKind::None, sh, full)).unwrap();
    println!("g_(2,1)(x1,x2,x3): {b}\nagrees: {}", b == d);
}
