//! Exact polynomial arithmetic in `x`, `α`, `β` with truncation by x-degree.

use grothendieck::{Family, Int, ParamMap, ParamPoly, Target, Var};

fn main() {
    let x1 = ParamPoly::var(Var::x(1), None);
    let a1 = ParamPoly::var(Var::a(1), None);
    let b2 = ParamPoly::var(Var::b(2), None);

    let p = &(&x1 + &a1) * &(&x1 - &b2);
    println!("(x1 + a1)(x1 - b2) = {p}");
    println!("squared, x-degree <= 2: {}", p.mul_with_trunc(&p, Some(2)));

    println!("β shifted by 3: {}", p.shift_params(Family::Beta, 3).unwrap());
    let sub = p.substitute_params(&ParamMap::constant(Target::Int(Int::ZERO)), &ParamMap::constant(Target::Int(Int::ONE))).unwrap();
    println!("α -> 0, β -> 1: {sub}");

    let q = p.divide_exact(&(&x1 + &a1), None).unwrap();
    println!("divided back by x1 + a1: {q}");
    println!("json: {}", p.to_json());
}
