//! Matsumura's flagged Grothendieck polynomials `G_{λ/μ, f/g}` with a single scalar `β`.
//!
//! `β` is carried as `b1`; the plethystic letter `β̄ = -β` is the negated letter `~b1`.

use crate::alphabet::{h_eval, AlphabetExpr, Atom};
use crate::error::Result;
use crate::int::{binom, Int};
use crate::jt::det_ring;
use crate::poly::{Family, Monomial, ParamPoly, Var};
use crate::shape::SkewShape;
use std::collections::BTreeMap;

fn beta_pow(k: u32, sign: i64) -> ParamPoly {
    let c = if sign < 0 && k % 2 == 1 { -1 } else { 1 };
    ParamPoly::term(Monomial::var(Var::b(1), k), c, None)
}

fn one_plus_beta_x(l: u32) -> ParamPoly {
    ParamPoly::one(None) + ParamPoly::term(Monomial::var(Var::b(1), 1).mul(&Monomial::var(Var::x(l), 1)), 1, None)
}

/// `Π_{i=q}^p (1 + β x_i) Σ_{k>=0} (-β)^k h_{m+k}[X_{[q,p]}]`, truncated at x-degree `trunc`.
pub fn matsumura_gpq(m: i64, p: i64, q: i64, trunc: u32) -> Result<ParamPoly> {
    let t = Some(trunc);
    let x = AlphabetExpr::new().plus(Atom::XRange(q, p));
    let top = if p >= q.max(1) { trunc as i64 - m } else { -m };
    let mut sum = ParamPoly::zero(t);
    for k in (-m).max(0)..=top {
        let h = h_eval(m + k, &x, t)?;
        if !h.is_zero() {
            sum = &sum + &h.mul_with_trunc(&beta_pow(k as u32, -1), t);
        }
    }
    for l in q.max(1)..=p {
        sum = sum.mul_with_trunc(&one_plus_beta_x(l as u32), t);
    }
    Ok(sum)
}

/// Coefficient of `u^m` in `(1 + β u^{-1})^{-1} Π_{q<=i<=p} (1 + β x_i)/(1 - x_i u)`,
/// expanded as a Laurent series in `u` and truncated at x-degree `trunc`.
pub fn matsumura_gpq_laurent(m: i64, p: i64, q: i64, trunc: u32) -> ParamPoly {
    let t = Some(trunc);
    // Coefficients of u^0 ..= u^trunc; any higher power has x-degree above trunc.
    let mut series: BTreeMap<i64, ParamPoly> = BTreeMap::new();
    series.insert(0, ParamPoly::one(t));
    for i in q.max(1)..=p {
        let xi = Var::x(i as u32);
        let mut next: BTreeMap<i64, ParamPoly> = BTreeMap::new();
        for (&e, c) in &series {
            let c = c.mul_with_trunc(&one_plus_beta_x(i as u32), t);
            for l in 0..=(trunc as i64 - e) {
                let term = c.mul_monomial(&Monomial::var(xi, l as u32), &Int::ONE);
                if term.is_zero() {
                    break;
                }
                let slot = next.entry(e + l).or_insert_with(|| ParamPoly::zero(t));
                *slot = &*slot + &term;
            }
        }
        series = next;
    }
    let mut out = ParamPoly::zero(t);
    for (&e, c) in &series {
        let k = e - m;
        if k >= 0 {
            out = &out + &c.mul_with_trunc(&beta_pow(k as u32, -1), t);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatsumuraForm {
    Binomial,
    Ominus,
}

/// `g_i <= g_{i+1}` and `f_i <= f_{i+1}` whenever `μ_i < λ_{i+1}`.
pub fn matsumura_hypothesis(shape: &SkewShape, f: &[u32], g: &[u32]) -> bool {
    let at = |v: &[u32], i: usize| v.get(i - 1).copied().unwrap_or(0);
    (1..shape.n()).all(|i| shape.inner(i) >= shape.outer(i + 1) || (at(g, i) <= at(g, i + 1) && at(f, i) <= at(f, i + 1)))
}

/// `Σ_{s>=0} C(i-j, s) β^s G^{[f_i/g_j]}_{λ_i-μ_j-i+j+s}`.
pub fn binomial_entry(base: i64, i: i64, j: i64, fi: i64, gj: i64, trunc: u32) -> Result<ParamPoly> {
    let t = Some(trunc);
    let mut acc = ParamPoly::zero(t);
    for s in 0..=(trunc as i64 - base).max(0) {
        let c = binom(i - j, s as u32);
        if c.is_zero() {
            continue;
        }
        let g = matsumura_gpq(base + s, fi, gj, trunc)?;
        acc = &acc + &g.mul_with_trunc(&beta_pow(s as u32, 1).scale(&c), t);
    }
    Ok(acc)
}

/// `C_{i,j} h_{λ_i-μ_j-i+j}[X_{[g_j,f_i]} ⊖ (j-i+1)β̄]` with `C_{i,j} = Π_{l=g_j}^{f_i}(1+βx_l)`.
pub fn ominus_entry(base: i64, i: i64, j: i64, fi: i64, gj: i64, trunc: u32) -> Result<ParamPoly> {
    let t = Some(trunc);
    let h = h_eval(base, &ominus_alphabet(i, j, fi, gj), t)?;
    let mut c = ParamPoly::one(t);
    for l in gj.max(1)..=fi {
        c = c.mul_with_trunc(&one_plus_beta_x(l as u32), t);
    }
    Ok(c.mul_with_trunc(&h, t))
}

fn ominus_alphabet(i: i64, j: i64, fi: i64, gj: i64) -> AlphabetExpr {
    AlphabetExpr::new()
        .plus(Atom::XRange(gj, fi))
        .theta_plus(Atom::Repeat { family: Family::Beta, index: 1, count: j - i + 1, negated: true })
}

/// `h_m[(j-i+1)β̄]`.
pub fn h_beta_bar(m: i64, i: i64, j: i64) -> Result<ParamPoly> {
    h_eval(m, &AlphabetExpr::new().plus(Atom::Repeat { family: Family::Beta, index: 1, count: j - i + 1, negated: true }), None)
}

/// `β^m C(i-j-1, m)`.
pub fn beta_binom(m: u32, i: i64, j: i64) -> ParamPoly {
    beta_pow(m, 1).scale(&binom(i - j - 1, m))
}

/// Matsumura's determinant over `ℓ(λ)` rows in either form, truncated at x-degree `trunc`.
pub fn matsumura_det(shape: &SkewShape, f: &[u32], g: &[u32], trunc: u32, form: MatsumuraForm) -> Result<ParamPoly> {
    let t = Some(trunc);
    let n = (1..=shape.n()).filter(|&i| shape.outer(i) > 0).count();
    let at = |v: &[u32], i: usize| v.get(i - 1).copied().unwrap_or(0) as i64;
    let mut m = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            let base = shape.outer(i) as i64 - shape.inner(j) as i64 - i as i64 + j as i64;
            row.push(match form {
                MatsumuraForm::Binomial => binomial_entry(base, i as i64, j as i64, at(f, i), at(g, j), trunc)?,
                MatsumuraForm::Ominus => h_eval(base, &ominus_alphabet(i as i64, j as i64, at(f, i), at(g, j)), t)?,
            });
        }
        m.push(row);
    }
    let det = det_ring(&m)?.truncate(trunc);
    Ok(match form {
        MatsumuraForm::Binomial => det,
        MatsumuraForm::Ominus => {
            let mut acc = det;
            for i in 1..=n {
                for l in at(g, i).max(1)..=at(f, i) {
                    acc = acc.mul_with_trunc(&one_plus_beta_x(l as u32), t);
                }
            }
            acc
        }
    })
}
