//! Flagged set-valued tableaux against both forms of Matsumura's determinant.

use grothendieck::crosscheck::matsumura::{matsumura_det, matsumura_gpq, matsumura_gpq_laurent, MatsumuraForm};
use grothendieck::shape::SkewShape;
use grothendieck::tableau::fsvt_sum;

fn main() {
    let sh = SkewShape::parse("2,1").unwrap();
    let (f, g) = (vec![2, 3], vec![1, 1]);
    let t = fsvt_sum(&sh, &f, &g, 4);
    let b = matsumura_det(&sh, &f, &g, 4, MatsumuraForm::Binomial).unwrap();
    let o = matsumura_det(&sh, &f, &g, 4, MatsumuraForm::Ominus).unwrap();
    println!("tableaux {t}\nbinomial agrees {}, ominus agrees {}", t == b, t == o);
    let c = matsumura_gpq(1, 2, 1, 3).unwrap();
    println!("G^[2/1]_1 to degree 3: {c}\nseries oracle agrees {}", c == matsumura_gpq_laurent(1, 2, 1, 3));
}
