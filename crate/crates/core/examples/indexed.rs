//! Dented shapes with an index set: determinant against marked RPPs with row-end values.

use grothendieck::jt::{jt_eval, FlagKind, GFamily, JtSpec};
use grothendieck::shape::{valid_index_sets, DentedShape, FlagPair, SkewShape};
use grothendieck::tableau::{mrpp_indexed_sum, Variant};

fn main() {
    let lam = DentedShape::new(vec![1, 2]).unwrap();
    let sh = SkewShape::new(lam.parts().to_vec(), vec![0, 0]);
    let f = FlagPair::new(vec![1, 1], vec![2, 2]).unwrap();
    for i in valid_index_sets(&lam) {
        let row = jt_eval(&JtSpec::new(GFamily::Small, FlagKind::Row, sh.clone(), f.clone()).indexed(i.clone())).unwrap();
        let left = mrpp_indexed_sum(&sh, &f, &i, Variant::Left);
        let col = jt_eval(&JtSpec::new(GFamily::Small, FlagKind::Col, sh.clone(), f.clone()).indexed(i.clone())).unwrap();
        let bottom = mrpp_indexed_sum(&sh, &f, &i, Variant::Bottom);
        println!("I={i}: h-det {row}\n      left  {left}\n      e-det {col}\n      bottom {bottom}");
    }
}
