//! Brute-force generating functions over set-valued tableaux and reverse plane partitions.
//!
//! These enumerate fillings row by row and share no code with the tableau streams.

use crate::int::Int;
use crate::poly::{Accumulator, Monomial, ParamPoly, Var};
use crate::shape::{FlagPair, SkewShape};

type Filling<T> = Vec<((usize, u32), T)>;

fn lookup<T>(f: &Filling<T>, i: usize, j: u32) -> Option<&T> {
    f.iter().find(|(c, _)| *c == (i, j)).map(|(_, v)| v)
}

fn svt_rec(
    cells: &[(usize, u32)],
    bounds: &dyn Fn(usize) -> (u32, u32),
    left: u32,
    cur: &mut Filling<Vec<u32>>,
    visit: &mut dyn FnMut(&Filling<Vec<u32>>),
) {
    let Some(&(i, j)) = cells.get(cur.len()) else {
        visit(cur);
        return;
    };
    let (lo, hi) = bounds(i);
    if lo > hi || left < (cells.len() - cur.len()) as u32 {
        return;
    }
    let width = hi - lo + 1;
    for mask in 1u32..(1 << width) {
        let set: Vec<u32> = (0..width).filter(|b| mask >> b & 1 == 1).map(|b| lo + b).collect();
        if set.len() as u32 > left {
            continue;
        }
        if let Some(l) = lookup(cur, i, j.wrapping_sub(1)) {
            if l.last().unwrap() > &set[0] {
                continue;
            }
        }
        if let Some(a) = lookup(cur, i.wrapping_sub(1), j) {
            if a.last().unwrap() >= &set[0] {
                continue;
            }
        }
        let k = set.len() as u32;
        cur.push(((i, j), set));
        svt_rec(cells, bounds, left - k, cur, visit);
        cur.pop();
    }
}

/// Visits every set-valued tableau with row `i` entries in `[r_i, s_i]` and at most `max_total` entries.
pub fn for_each_svt(shape: &SkewShape, flags: &FlagPair, max_total: u32, mut visit: impl FnMut(&Filling<Vec<u32>>)) {
    let cells = shape.cells();
    let bounds = |i: usize| (flags.r(i).max(1), flags.s(i));
    svt_rec(&cells, &bounds, max_total, &mut Vec::new(), &mut visit);
}

/// `Σ (-1)^{|T|-|λ/μ|} x^T` over set-valued tableaux with row `i` entries in `[r_i, s_i]`.
pub fn oracle_buch_svt_flagged(shape: &SkewShape, flags: &FlagPair, max_total: u32) -> ParamPoly {
    let mut acc = Accumulator::new();
    let size = shape.size();
    for_each_svt(shape, flags, max_total, |t| {
        let mut m = Monomial::one();
        let mut count = 0;
        for (_, set) in t {
            count += set.len();
            for &v in set {
                m = m.mul(&Monomial::var(Var::x(v), 1));
            }
        }
        acc.add(m, &Int::from(if (count - size) % 2 == 0 { 1 } else { -1 }));
    });
    acc.finish(Some(max_total))
}

/// Buch's `G_{λ/μ}(x_1, ..., x_n)` truncated at `max_total` entries.
pub fn oracle_buch_svt(shape: &SkewShape, n_vars: u32, max_total: u32) -> ParamPoly {
    let n = shape.n();
    oracle_buch_svt_flagged(shape, &FlagPair::new(vec![1; n], vec![n_vars; n]).unwrap(), max_total)
}

/// `Σ Π_{cells} (-β_i)^{|T(i,j)|-1} x^T` over flagged set-valued tableaux.
pub fn oracle_row_beta_svt(shape: &SkewShape, flags: &FlagPair, max_total: u32) -> ParamPoly {
    let mut acc = Accumulator::new();
    for_each_svt(shape, flags, max_total, |t| {
        let mut m = Monomial::one();
        let mut neg = false;
        for ((i, _), set) in t {
            let extra = set.len() as u32 - 1;
            m = m.mul(&Monomial::var(Var::b(*i as u32), extra));
            neg ^= extra % 2 == 1;
            for &v in set {
                m = m.mul(&Monomial::var(Var::x(v), 1));
            }
        }
        acc.add(m, &Int::from(if neg { -1 } else { 1 }));
    });
    acc.finish(Some(max_total))
}

fn rpp_rec(cells: &[(usize, u32)], bounds: &dyn Fn(usize) -> (u32, u32), cur: &mut Filling<u32>, visit: &mut dyn FnMut(&Filling<u32>)) {
    let Some(&(i, j)) = cells.get(cur.len()) else {
        visit(cur);
        return;
    };
    let (lo, hi) = bounds(i);
    for v in lo..=hi {
        if lookup(cur, i, j.wrapping_sub(1)).is_some_and(|&l| l > v) || lookup(cur, i.wrapping_sub(1), j).is_some_and(|&a| a > v) {
            continue;
        }
        cur.push(((i, j), v));
        rpp_rec(cells, bounds, cur, visit);
        cur.pop();
    }
}

/// Visits every reverse plane partition with row `i` entries in `[r_i, s_i]`.
pub fn for_each_rpp(shape: &SkewShape, flags: &FlagPair, mut visit: impl FnMut(&Filling<u32>)) {
    let cells = shape.cells();
    let bounds = |i: usize| (flags.r(i).max(1), flags.s(i));
    rpp_rec(&cells, &bounds, &mut Vec::new(), &mut visit);
}

/// `Σ Π wt` over flagged RPPs where a cell equal to the cell above weighs `β_{i-1}`, otherwise `x_T`.
pub fn oracle_row_beta_rpp(shape: &SkewShape, flags: &FlagPair) -> ParamPoly {
    let mut acc = Accumulator::new();
    for_each_rpp(shape, flags, |t| {
        let mut m = Monomial::one();
        for ((i, j), v) in t {
            let w = match lookup(t, i.wrapping_sub(1), *j) {
                Some(a) if a == v => Var::b(*i as u32 - 1),
                _ => Var::x(*v),
            };
            m = m.mul(&Monomial::var(w, 1));
        }
        acc.add(m, &Int::ONE);
    });
    acc.finish(None)
}

/// `Σ Π x_{T(i,j)}` over flagged RPPs, a factor only where `T(i,j) != T(i-1,j)`.
pub fn oracle_lp_rpp_flagged(shape: &SkewShape, flags: &FlagPair) -> ParamPoly {
    let mut acc = Accumulator::new();
    for_each_rpp(shape, flags, |t| {
        let mut m = Monomial::one();
        for ((i, j), v) in t {
            if lookup(t, i.wrapping_sub(1), *j) != Some(v) {
                m = m.mul(&Monomial::var(Var::x(*v), 1));
            }
        }
        acc.add(m, &Int::ONE);
    });
    acc.finish(None)
}

/// Lam–Pylyavskyy `g_{λ/μ}(x_1, ..., x_n)`.
pub fn oracle_lp_rpp(shape: &SkewShape, n_vars: u32) -> ParamPoly {
    let n = shape.n();
    oracle_lp_rpp_flagged(shape, &FlagPair::new(vec![1; n], vec![n_vars; n]).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_oracles() {
        let one = SkewShape::straight(vec![1]);
        assert_eq!(oracle_buch_svt(&one, 2, 2).to_string(), "-x1*x2 + x1 + x2");
        let col = SkewShape::straight(vec![1, 1]);
        assert_eq!(oracle_lp_rpp(&col, 2).to_string(), "x1*x2 + x1 + x2");
        let e = SkewShape::new(vec![2, 1], vec![2, 1]);
        assert_eq!(oracle_buch_svt(&e, 3, 4).to_string(), "1");
        assert_eq!(oracle_lp_rpp(&e, 3).to_string(), "1");
    }
}
