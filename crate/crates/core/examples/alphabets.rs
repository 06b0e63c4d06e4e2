//! Complete and elementary symmetric functions of signed alphabets.

use grothendieck::alphabet::{e_eval, h_eval, AlphabetExpr};

fn main() {
    for s in ["X[1,2]", "X[1,2] - A[1]", "x1 - b1 + b2", "-X[1,2]"] {
        let z = AlphabetExpr::parse(s).unwrap();
        for m in 0..=2 {
            println!("h_{m}[{s}] = {}", h_eval(m, &z, None).unwrap());
            println!("e_{m}[{s}] = {}", e_eval(m, &z, None).unwrap());
        }
    }
    let series = AlphabetExpr::parse("X[1,1] (-) A[1]").unwrap();
    println!("h_0[x1 ⊖ a1] to x-degree 3 = {}", h_eval(0, &series, Some(3)).unwrap());
}
