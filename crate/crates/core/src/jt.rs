//! Jacobi–Trudi-like determinants, their prefactors, and the bialternant definitions.

use crate::alphabet::{e_eval, h_eval, AlphabetExpr, Atom};
use crate::error::{Error, Result};
use crate::int::Int;
use crate::poly::{join_trunc, Monomial, ParamPoly, TermMap, Var};
use crate::shape::{DentedShape, FlagPair, IndexSet, Partition, SkewShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GFamily {
    /// Refined canonical Grothendieck `G` (series valued).
    Big,
    /// Refined dual Grothendieck `g` (polynomial).
    Small,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FlagKind {
    Row,
    Col,
    /// Unflagged in `n` variables: row flags `r = 1^n`, `s = n^n`.
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JtSpec {
    pub family: GFamily,
    pub flag: FlagKind,
    /// `λ/μ`; for column flags the tableaux live on the conjugate `λ'/μ'`.
    pub shape: SkewShape,
    pub flags: FlagPair,
    pub trunc: Option<u32>,
    pub indexed: Option<IndexSet>,
    pub chi_gated: bool,
}

impl JtSpec {
    pub fn new(family: GFamily, flag: FlagKind, shape: SkewShape, flags: FlagPair) -> JtSpec {
        JtSpec { family, flag, shape, flags, trunc: None, indexed: None, chi_gated: false }
    }

    pub fn trunc(mut self, t: u32) -> JtSpec {
        self.trunc = Some(t);
        self
    }

    pub fn indexed(mut self, i: IndexSet) -> JtSpec {
        self.indexed = Some(i);
        self
    }

    pub fn chi(mut self, on: bool) -> JtSpec {
        self.chi_gated = on;
        self
    }

    /// Flags in effect, replacing `None` by `r = 1^n`, `s = n^n`.
    pub fn effective_flags(&self) -> FlagPair {
        match self.flag {
            FlagKind::None => FlagPair::full(self.shape.n()),
            _ => self.flags.clone(),
        }
    }
}

/// Division-free determinant by expansion along rows with a memo over used column sets.
pub fn det_ring(m: &[Vec<ParamPoly>]) -> Result<ParamPoly> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(Error::NonSquare(n, row.len()));
    }
    if n == 0 {
        return Ok(ParamPoly::one(None));
    }
    assert!(n <= 20, "matrix too large");
    // dp[mask] = signed sum over injections of the first popcount(mask) rows into `mask`.
    let mut trunc = None;
    for e in m.iter().flatten() {
        trunc = join_trunc(trunc, e.trunc())?;
    }
    let mut dp: Vec<Option<ParamPoly>> = vec![None; 1 << n];
    dp[0] = Some(ParamPoly::one(trunc));
    for row in 0..n {
        let mut next: Vec<Option<TermMap>> = vec![None; 1 << n];
        for mask in 0usize..(1 << n) {
            let Some(cur) = dp[mask].take() else { continue };
            if cur.is_zero() {
                continue;
            }
            for col in 0..n {
                if mask >> col & 1 == 1 || m[row][col].is_zero() {
                    continue;
                }
                let passed = (mask >> (col + 1)).count_ones();
                let acc = next[mask | 1 << col].get_or_insert_with(TermMap::default);
                cur.mul_into(&m[row][col], passed % 2 == 1, trunc, acc);
            }
        }
        dp = next.into_iter().map(|a| a.map(|a| ParamPoly::from_map(a, trunc))).collect();
    }
    Ok(dp[(1 << n) - 1].take().unwrap_or_else(|| ParamPoly::zero(trunc)))
}

fn chi_index(spec: &JtSpec, i: usize) -> i64 {
    spec.indexed.as_ref().is_some_and(|s| s.contains(i)) as i64
}

/// Matrix entry `(i, j)`, 1-based.
pub fn jt_entry(spec: &JtSpec, i: usize, j: usize) -> Result<ParamPoly> {
    let f = spec.effective_flags();
    let sh = &spec.shape;
    let (li, mj) = (sh.outer(i) as i64, sh.inner(j) as i64);
    let (ii, jj) = (i as i64, j as i64);
    let m = li - mj - ii + jj;
    let (rj, si) = (f.r(j) as i64, f.s(i) as i64);
    let trunc = spec.trunc;
    let gated = spec.chi_gated || spec.indexed.is_some();
    if spec.family == GFamily::Small && gated && rj > si {
        return Ok(ParamPoly::zero(None));
    }
    let c = chi_index(spec, i);
    match (spec.family, spec.flag) {
        (GFamily::Big, FlagKind::Row | FlagKind::None) => {
            let e = AlphabetExpr::new()
                .plus(Atom::XRange(rj, si))
                .theta_plus(Atom::APrefix(li))
                .theta_minus(Atom::APrefix(mj))
                .theta_minus(Atom::BPrefix(ii - 1))
                .theta_plus(Atom::BPrefix(jj));
            h_eval(m, &e, trunc)
        }
        (GFamily::Big, FlagKind::Col) => {
            let e = AlphabetExpr::new()
                .plus(Atom::XRange(rj, si))
                .theta_plus(Atom::APrefix(ii - 1))
                .theta_minus(Atom::APrefix(jj))
                .theta_minus(Atom::BPrefix(li))
                .theta_plus(Atom::BPrefix(mj));
            e_eval(m, &e, trunc)
        }
        (GFamily::Small, FlagKind::Row | FlagKind::None) => {
            let e = AlphabetExpr::new()
                .plus(Atom::XRange(rj, si))
                .minus(Atom::APrefix(li - 1 + c))
                .plus(Atom::APrefix(mj))
                .plus(Atom::BPrefix(ii - 1))
                .minus(Atom::BPrefix(jj - 1));
            h_eval(m, &e, None)
        }
        (GFamily::Small, FlagKind::Col) => {
            let e = AlphabetExpr::new()
                .plus(Atom::XRange(rj, si - c))
                .minus(Atom::APrefix(ii - 1))
                .plus(Atom::APrefix(jj - 1))
                .plus(Atom::BPrefix(li - 1 + c))
                .minus(Atom::BPrefix(mj));
            e_eval(m, &e, None)
        }
    }
}

pub fn jt_matrix(spec: &JtSpec) -> Result<Vec<Vec<ParamPoly>>> {
    let n = spec.shape.n();
    (1..=n).map(|i| (1..=n).map(|j| jt_entry(spec, i, j)).collect()).collect()
}

fn check_indexed(spec: &JtSpec) -> Result<()> {
    if let Some(index) = &spec.indexed {
        if spec.family != GFamily::Small || spec.flag == FlagKind::None {
            return Err(Error::Invalid("indexed entries need family g with row or col flags".into()));
        }
        let d = DentedShape::new(spec.shape.outer.clone())?;
        index.validate(&d)?;
    }
    Ok(())
}

/// `C = Π_i Π_{l=r_i}^{s_i} (1 - β_i x_l)`.
pub fn prefactor_c(flags: &FlagPair, trunc: Option<u32>) -> ParamPoly {
    let mut c = ParamPoly::one(trunc);
    for i in 1..=flags.n() {
        for l in flags.r(i).max(1)..=flags.s(i) {
            let f = ParamPoly::one(None) - ParamPoly::term(Monomial::var(Var::b(i as u32), 1).mul(&Monomial::var(Var::x(l), 1)), 1, None);
            c = c.mul_with_trunc(&f, trunc);
        }
    }
    c
}

/// `D = Π_i Π_{l=r_i}^{s_i} (1 - α_i x_l)^{-1}`, each factor a geometric series cut at `trunc`.
pub fn prefactor_d(flags: &FlagPair, trunc: u32) -> ParamPoly {
    let mut d = ParamPoly::one(Some(trunc));
    for i in 1..=flags.n() {
        for l in flags.r(i).max(1)..=flags.s(i) {
            let step = Monomial::var(Var::a(i as u32), 1).mul(&Monomial::var(Var::x(l), 1));
            let mut m = Monomial::one();
            let mut g = Vec::new();
            for _ in 0..=trunc {
                g.push((m.clone(), Int::ONE));
                m = m.mul(&step);
            }
            d = d.mul_with_trunc(&ParamPoly::from_terms(g, Some(trunc)), Some(trunc));
        }
    }
    d
}

/// The determinant of `spec` without any prefactor.
pub fn jt_det(spec: &JtSpec) -> Result<ParamPoly> {
    check_indexed(spec)?;
    det_ring(&jt_matrix(spec)?)
}

/// `C · det(h[X ⊖ …])` for row flags, `D · det(e[X ⊖ …])` for column flags.
pub fn jt_big(spec: &JtSpec) -> Result<ParamPoly> {
    let t = spec.trunc.ok_or_else(|| Error::UnboundedSeries("G needs a truncation bound".into()))?;
    let mut acc = jt_det(spec)?.truncate(t);
    let f = spec.effective_flags();
    for i in 1..=f.n() {
        for l in f.r(i).max(1)..=f.s(i) {
            if acc.is_zero() {
                return Ok(acc);
            }
            let step = ParamPoly::term(
                Monomial::var(if spec.flag == FlagKind::Col { Var::a(i as u32) } else { Var::b(i as u32) }, 1).mul(&Monomial::var(Var::x(l), 1)),
                1,
                Some(t),
            );
            acc = if spec.flag == FlagKind::Col {
                // p / (1 - y) = p + y p + y^2 p + ...
                let mut out = acc.clone();
                let mut cur = acc;
                loop {
                    cur = cur.mul_with_trunc(&step, Some(t));
                    if cur.is_zero() {
                        break;
                    }
                    out = &out + &cur;
                }
                out
            } else {
                &acc - &acc.mul_with_trunc(&step, Some(t))
            };
        }
    }
    Ok(acc)
}

/// The polynomial determinant for `g`, optionally with `χ(r_j <= s_i)` gates or indexed entries.
pub fn jt_small(spec: &JtSpec) -> Result<ParamPoly> {
    jt_det(spec)
}

/// Dispatches on the family.
pub fn jt_eval(spec: &JtSpec) -> Result<ParamPoly> {
    match spec.family {
        GFamily::Big => jt_big(spec),
        GFamily::Small => jt_small(spec),
    }
}

fn vandermonde(n: usize) -> ParamPoly {
    let mut v = ParamPoly::one(None);
    for i in 1..=n {
        for j in i + 1..=n {
            v = &v * &(ParamPoly::var(Var::x(i as u32), None) - ParamPoly::var(Var::x(j as u32), None));
        }
    }
    v
}

/// The ratio of alternants defining `G_λ(x_1..x_n)` (exact to x-degree `trunc`) or `g_λ` (exact).
pub fn bialternant(family: GFamily, lam: &Partition, n: usize, trunc: u32) -> Result<ParamPoly> {
    if lam.length() > n {
        return Err(Error::BadShape(format!("{lam} has more than {n} parts")));
    }
    let lam = lam.padded(n);
    let d = (n * (n - 1) / 2) as u32;
    let mut m = Vec::with_capacity(n);
    for i in 1..=n {
        let li = lam.part(i) as i64;
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            let xj = Var::x(j as u32);
            row.push(match family {
                GFamily::Big => {
                    let t = Some(trunc + d);
                    let mut e = ParamPoly::term(Monomial::var(xj, (li + (n - i) as i64) as u32), 1, t);
                    for k in 1..i {
                        let f = ParamPoly::one(None) - ParamPoly::term(Monomial::var(Var::b(k as u32), 1).mul(&Monomial::var(xj, 1)), 1, None);
                        e = e.mul_with_trunc(&f, t);
                    }
                    for k in 1..=li {
                        let step = Monomial::var(Var::a(k as u32), 1).mul(&Monomial::var(xj, 1));
                        let g = (0..=trunc + d).map(|p| {
                            let mut mm = Monomial::one();
                            for _ in 0..p {
                                mm = mm.mul(&step);
                            }
                            (mm, Int::ONE)
                        });
                        e = e.mul_with_trunc(&ParamPoly::from_terms(g, t), t);
                    }
                    e
                }
                GFamily::Small => {
                    let e = AlphabetExpr::new()
                        .plus(Atom::Single(crate::poly::Family::X, j as u32))
                        .minus(Atom::APrefix(li - 1))
                        .plus(Atom::BPrefix(i as i64 - 1));
                    h_eval(li + (n - i) as i64, &e, None)?
                }
            });
        }
        m.push(row);
    }
    let num = det_ring(&m)?;
    match family {
        GFamily::Big => num.divide_exact(&vandermonde(n), Some(trunc)),
        GFamily::Small => num.divide_exact(&vandermonde(n), None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sk(s: &str) -> SkewShape {
        SkewShape::parse(s).unwrap()
    }

    fn fl(r: &[u32], s: &[u32]) -> FlagPair {
        FlagPair::new(r.to_vec(), s.to_vec()).unwrap()
    }

    #[test]
    fn determinants() {
        let one = ParamPoly::one(None);
        let z = ParamPoly::zero(None);
        let x = ParamPoly::var(Var::x(1), None);
        let id = vec![vec![one.clone(), z.clone(), z.clone()], vec![z.clone(), one.clone(), z.clone()], vec![z.clone(), z.clone(), one.clone()]];
        assert_eq!(det_ring(&id).unwrap(), one);
        assert!(det_ring(&[vec![x.clone(), one.clone()], vec![x.clone(), one.clone()]]).unwrap().is_zero());
        assert!(det_ring(&[vec![z.clone(), z.clone()], vec![x.clone(), one.clone()]]).unwrap().is_zero());
        assert_eq!(det_ring(&[]).unwrap(), one);
        assert!(matches!(det_ring(&[vec![one.clone(), one.clone()]]), Err(Error::NonSquare(1, 2))));
        let a = ParamPoly::var(Var::a(1), None);
        let m = vec![vec![x.clone(), a.clone()], vec![one.clone(), x.clone()]];
        assert_eq!(det_ring(&m).unwrap().to_string(), "x1^2 - a1");
    }

    #[test]
    fn remark_counterexamples() {
        let sh = SkewShape::new(vec![1], vec![2]);
        let f = fl(&[1], &[1]);
        let row = jt_big(&JtSpec::new(GFamily::Big, FlagKind::Row, sh.clone(), f.clone()).trunc(4)).unwrap();
        assert_eq!(row.to_string(), "b1 - a2");
        let col = jt_big(&JtSpec::new(GFamily::Big, FlagKind::Col, sh, f).trunc(4)).unwrap();
        assert_eq!(col.to_string(), "b2 - a1");
        let g = jt_small(&JtSpec::new(GFamily::Small, FlagKind::Col, sk("1,1"), fl(&[1, 1], &[2, 1]))).unwrap();
        assert_eq!(g.to_string(), "x1^2 - a1*x1 - a1*x2");
    }

    #[test]
    fn small_values() {
        let g = jt_small(&JtSpec::new(GFamily::Small, FlagKind::Row, sk("1,1"), fl(&[1, 1], &[2, 2]))).unwrap();
        assert_eq!(g.to_string(), "x1*x2 + b1*x1 + b1*x2");
        let big = jt_big(&JtSpec::new(GFamily::Big, FlagKind::Row, sk("1"), fl(&[1], &[2])).trunc(2)).unwrap();
        assert_eq!(big.to_string(), "-b1*x1*x2 + a1*x1*x2 + a1*x1^2 + a1*x2^2 + x1 + x2");
        let empty = jt_big(&JtSpec::new(GFamily::Big, FlagKind::Row, sk("2,1/2,1"), fl(&[1, 2], &[3, 3])).trunc(5)).unwrap();
        assert_eq!(empty.to_string(), "1");
        let not_contained = jt_small(&JtSpec::new(GFamily::Small, FlagKind::Row, SkewShape::new(vec![1, 1], vec![2, 0]), fl(&[1, 1], &[2, 2]))).unwrap();
        assert!(not_contained.is_zero());
    }

    #[test]
    fn indexed_trivial_and_invalid() {
        let sh = sk("2,1/2,1");
        let f = fl(&[1, 1], &[2, 3]);
        let d = jt_small(&JtSpec::new(GFamily::Small, FlagKind::Row, sh.clone(), f.clone()).indexed(IndexSet::from_slice(&[1]))).unwrap();
        assert_eq!(d.to_string(), "1");
        let bad = jt_small(&JtSpec::new(GFamily::Small, FlagKind::Row, sh, f).indexed(IndexSet::from_slice(&[2])));
        assert!(matches!(bad, Err(Error::BadIndexSet(_))));
    }

    #[test]
    fn bialternants() {
        let e = Partition::new(vec![]).unwrap();
        assert_eq!(bialternant(GFamily::Small, &e, 3, 4).unwrap().to_string(), "1");
        let one = Partition::new(vec![1]).unwrap();
        assert_eq!(bialternant(GFamily::Small, &one, 2, 4).unwrap().to_string(), "x1 + x2");
        assert_eq!(bialternant(GFamily::Big, &one, 1, 3).unwrap().to_string(), "a1^2*x1^3 + a1*x1^2 + x1");
    }
}
