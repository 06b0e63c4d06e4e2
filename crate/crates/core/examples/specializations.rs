//! Classical families as parameter specializations of one refined polynomial.

use grothendieck::crosscheck::Preset;
use grothendieck::jt::{jt_eval, FlagKind, GFamily, JtSpec};
use grothendieck::shape::{FlagPair, SkewShape};

fn main() {
    let sh = SkewShape::parse("2,1").unwrap();
    let f = FlagPair::new(vec![1, 1], vec![2, 2]).unwrap();
    for preset in Preset::ALL {
        let mut spec = JtSpec::new(preset.family(), FlagKind::Row, sh.clone(), f.clone());
        if preset.family() == GFamily::Big {
            spec = spec.trunc(4);
        }
        let p = jt_eval(&spec).unwrap();
        println!("{preset}: {}", preset.apply(&p).unwrap());
    }
}
