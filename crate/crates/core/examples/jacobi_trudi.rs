//! Flagged determinants against tableau sums, including the cases where the hypotheses fail.

use grothendieck::jt::{jt_eval, FlagKind, GFamily, JtSpec};
use grothendieck::shape::{FlagPair, SkewShape};
use grothendieck::tableau::{mmsvt_sum, mrpp_sum, FlagMode, Variant};

fn main() {
    let sh = SkewShape::parse("2,1/1").unwrap();
    let f = FlagPair::new(vec![1, 1], vec![2, 3]).unwrap();

    let det = jt_eval(&JtSpec::new(GFamily::Big, FlagKind::Row, sh.clone(), f.clone()).trunc(4)).unwrap();
    let tab = mmsvt_sum(&sh, &f, FlagMode::Row, 4);
    println!("G row: det {}\n       tab {}\n       equal {}", det, tab, det == tab);

    let det = jt_eval(&JtSpec::new(GFamily::Small, FlagKind::Col, sh.clone(), f.clone())).unwrap();
    let tab = mrpp_sum(&sh.transpose().unwrap(), &f, FlagMode::Col, Variant::Left, None);
    println!("g col: det {det}\n       tab {tab}\n       equal {}", det == tab);

    let bad = SkewShape::parse("1/2").unwrap();
    let one = FlagPair::new(vec![1], vec![1]).unwrap();
    let det = jt_eval(&JtSpec::new(GFamily::Big, FlagKind::Row, bad, one).trunc(4)).unwrap();
    println!("G row on 1/2: det {det}, tableaux 0");
}
