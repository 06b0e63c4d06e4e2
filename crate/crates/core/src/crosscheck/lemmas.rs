//! Checks of the recurrences and determinant identities behind the Jacobi–Trudi-like formulas.
//!
//! Each check takes one instance and reports whether its preconditions hold and,
//! if so, whether the identity holds exactly.

use super::sweep::Tally;
use crate::alphabet::{e_eval, h_eval, AlphabetExpr, Atom};
use crate::jt::{det_ring, jt_big, jt_matrix, FlagKind, GFamily, JtSpec};
use crate::poly::{Family, ParamPoly, Var};
use crate::shape::{minimal_cell, row_hypothesis, valid_index_sets, DentedShape, FlagPair, IndexSet, SkewShape};
use crate::tableau::{mmsvt_sum, mrpp_indexed_sum, FlagMode, Variant};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Skip,
    Pass,
    Fail(String),
}

impl Outcome {
    fn of(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(msg())
        }
    }
}

/// `λ`, `μ`, `r`, `s` of one instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub lam: Vec<u32>,
    pub mu: Vec<u32>,
    pub r: Vec<u32>,
    pub s: Vec<u32>,
}

impl Instance {
    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.lam.clone(), self.mu.clone())
    }

    pub fn flags(&self) -> FlagPair {
        FlagPair::new(self.r.clone(), self.s.clone()).unwrap()
    }

    fn n(&self) -> usize {
        self.lam.len()
    }

    fn l(&self, i: usize) -> i64 {
        if i >= 1 && i <= self.n() { self.lam[i - 1] as i64 } else { 0 }
    }

    fn m(&self, i: usize) -> i64 {
        if i >= 1 && i <= self.n() { self.mu[i - 1] as i64 } else { 0 }
    }

    fn rr(&self, i: usize) -> i64 {
        self.r[i - 1] as i64
    }

    fn ss(&self, i: usize) -> i64 {
        if i == 0 { 0 } else { self.s[i - 1] as i64 }
    }

    fn contained(&self) -> bool {
        self.mu.iter().zip(&self.lam).all(|(m, l)| m <= l)
    }

    fn is_partition(v: &[u32]) -> bool {
        v.windows(2).all(|w| w[0] >= w[1])
    }

    fn weakly_increasing(v: &[u32]) -> bool {
        v.iter().all(|&x| x >= 1) && v.windows(2).all(|w| w[0] <= w[1])
    }

    fn with_s(&self, s: Vec<u32>) -> Instance {
        Instance { s, ..self.clone() }
    }

    fn dec_lam(&self, k: usize) -> Instance {
        let mut lam = self.lam.clone();
        lam[k - 1] -= 1;
        Instance { lam, ..self.clone() }
    }

    fn dec_s(&self, k: usize) -> Instance {
        let mut s = self.s.clone();
        s[k - 1] -= 1;
        self.with_s(s)
    }

    fn split(&self, t: usize) -> (Instance, Instance) {
        let part = |v: &Vec<u32>, a: usize, b: usize| v[a..b].to_vec();
        let n = self.n();
        (
            Instance { lam: part(&self.lam, 0, t), mu: part(&self.mu, 0, t), r: part(&self.r, 0, t), s: part(&self.s, 0, t) },
            Instance { lam: part(&self.lam, t, n), mu: part(&self.mu, t, n), r: part(&self.r, t, n), s: part(&self.s, t, n) },
        )
    }
}

impl std::fmt::Display for Instance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "λ={:?} μ={:?} r={:?} s={:?}", self.lam, self.mu, self.r, self.s)
    }
}

fn xv(i: i64) -> ParamPoly {
    ParamPoly::var(Var::x(i as u32), None)
}

fn av(i: i64) -> ParamPoly {
    if i < 1 { ParamPoly::zero(None) } else { ParamPoly::var(Var::a(i as u32), None) }
}

fn bv(i: i64) -> ParamPoly {
    if i < 1 { ParamPoly::zero(None) } else { ParamPoly::var(Var::b(i as u32), None) }
}

fn one() -> ParamPoly {
    ParamPoly::one(None)
}

/// Tableau and determinant values of the row- (or column-) flagged `G`.
fn big(inst: &Instance, col: bool, trunc: u32) -> (ParamPoly, ParamPoly) {
    let sh = inst.shape();
    let f = inst.flags();
    if col {
        let tab = mmsvt_sum(&sh.transpose().unwrap(), &f, FlagMode::Col, trunc);
        let det = jt_big(&JtSpec::new(GFamily::Big, FlagKind::Col, sh, f).trunc(trunc)).unwrap();
        (tab, det)
    } else {
        let tab = mmsvt_sum(&sh, &f, FlagMode::Row, trunc);
        let det = jt_big(&JtSpec::new(GFamily::Big, FlagKind::Row, sh, f).trunc(trunc)).unwrap();
        (tab, det)
    }
}

/// `h_m[Z] = h_m[Z - cz] + c z h_{m-1}[Z]`.
pub fn check_h_recurrence(z: &AlphabetExpr, v: Var, c: bool, m: i64) -> Outcome {
    let zm = if c { z.clone().minus(Atom::Single(v.family, v.index)) } else { z.clone() };
    let zp = if c { ParamPoly::var(v, None) } else { ParamPoly::zero(None) };
    let lhs = h_eval(m, z, None).unwrap();
    let rhs = h_eval(m, &zm, None).unwrap() + &zp * &h_eval(m - 1, z, None).unwrap();
    Outcome::of(lhs == rhs, || format!("h_{m}[{z}] with {v}, c={c}: {lhs} != {rhs}"))
}

/// `e_m[Z] = e_m[Z - cz] + c z e_{m-1}[Z - cz]` and `e_m[Z] = e_m[Z + cz] - c z e_{m-1}[Z]`.
pub fn check_e_recurrence(z: &AlphabetExpr, v: Var, c: bool, m: i64) -> Outcome {
    let (zm, zp, zv) = if c {
        (z.clone().minus(Atom::Single(v.family, v.index)), z.clone().plus(Atom::Single(v.family, v.index)), ParamPoly::var(v, None))
    } else {
        (z.clone(), z.clone(), ParamPoly::zero(None))
    };
    let lhs = e_eval(m, z, None).unwrap();
    let first = e_eval(m, &zm, None).unwrap() + &zv * &e_eval(m - 1, &zm, None).unwrap();
    let second = e_eval(m, &zp, None).unwrap() - &zv * &e_eval(m - 1, z, None).unwrap();
    Outcome::of(lhs == first && lhs == second, || format!("e_{m}[{z}] with {v}, c={c}: {lhs}, {first}, {second}"))
}

/// `h_m[-Y] = (-1)^m e_m[Y]` and `e_m[-Y] = (-1)^m h_m[Y]`.
pub fn check_sign_duality(y: &AlphabetExpr, m: i64) -> Outcome {
    let neg = y.negate_main();
    let sign = if m.rem_euclid(2) == 1 { -1 } else { 1 };
    let a = h_eval(m, &neg, None).unwrap();
    let b = e_eval(m, y, None).unwrap().scale(&sign.into());
    let c = e_eval(m, &neg, None).unwrap();
    let d = h_eval(m, y, None).unwrap().scale(&sign.into());
    Outcome::of(a == b && c == d, || format!("m={m} Y={y}: {a} vs {b}; {c} vs {d}"))
}

/// Factorization across a row `t` with `μ_t >= λ_{t+1}`, shifting `β` (rows) or `α` (columns) by `t`.
pub fn check_rec1(inst: &Instance, t: usize, col: bool, trunc: u32) -> Outcome {
    let n = inst.n();
    if t == 0 || t >= n || !inst.contained() || inst.m(t) < inst.l(t + 1) {
        return Outcome::Skip;
    }
    let (p, q) = inst.split(t);
    let fam = if col { Family::Alpha } else { Family::Beta };
    let (lt, ld) = big(inst, col, trunc);
    let (pt, pd) = big(&p, col, trunc);
    let (qt, qd) = big(&q, col, trunc);
    let rt = pt.mul_with_trunc(&qt.shift_params(fam, t as i64).unwrap(), Some(trunc));
    let rd = pd.mul_with_trunc(&qd.shift_params(fam, t as i64).unwrap(), Some(trunc));
    Outcome::of(lt == rt && ld == rd, || format!("{inst} t={t}: tableaux {lt} vs {rt}; det {ld} vs {rd}"))
}

/// `(1 - x_{s_k}α_{λ_k}) F = (1 - x_{s_k}β_k) F(s - ε_k) + x_{s_k} F(λ - ε_k)` for both routes.
pub fn check_rec2(inst: &Instance, k: usize, trunc: u32) -> Outcome {
    let n = inst.n();
    if k == 0
        || k > n
        || !inst.contained()
        || !Instance::weakly_increasing(&inst.r)
        || !Instance::weakly_increasing(&inst.s)
        || !(inst.m(k) < inst.l(k) && inst.rr(k) <= inst.ss(k) && inst.ss(k - 1) < inst.ss(k) && inst.l(k) > inst.l(k + 1))
    {
        return Outcome::Skip;
    }
    let sk = inst.ss(k);
    let t = Some(trunc);
    let (ft, fd) = big(inst, false, trunc);
    let (st, sd) = big(&inst.dec_s(k), false, trunc);
    let (lt, ld) = big(&inst.dec_lam(k), false, trunc);
    let left = one() - &xv(sk) * &av(inst.l(k));
    let right = one() - &xv(sk) * &bv(k as i64);
    let side = |f: &ParamPoly, s: &ParamPoly, l: &ParamPoly| {
        (left.mul_with_trunc(f, t), &right.mul_with_trunc(s, t) + &xv(sk).mul_with_trunc(l, t))
    };
    let (a, b) = side(&ft, &st, &lt);
    let (c, d) = side(&fd, &sd, &ld);
    let vanish = sk != 1 || (st.is_zero() && sd.is_zero());
    Outcome::of(a == b && c == d && vanish, || format!("{inst} k={k}: tableaux {a} vs {b}; det {c} vs {d}"))
}

/// Column version: `(1 - x_{s_k}α_k) F = (1 - x_{s_k}β_{λ_k}) F(s - ε_k) + x_{s_k} F(λ - ε_k, s - ε_k)`.
pub fn check_rec2c(inst: &Instance, k: usize, trunc: u32) -> Outcome {
    let n = inst.n();
    let pos = inst.r.iter().chain(&inst.s).all(|&v| v >= 1);
    if k == 0 || k > n || !inst.contained() || !pos || !Instance::is_partition(&inst.lam) || !Instance::is_partition(&inst.mu) {
        return Outcome::Skip;
    }
    let r_ok = (1..n).all(|i| inst.rr(i) - inst.m(i) <= inst.rr(i + 1) - inst.m(i + 1));
    let ok = r_ok
        && inst.m(k) < inst.l(k)
        && inst.rr(k) - inst.m(k) <= inst.ss(k) - inst.l(k) + 1
        && (k == 1 || inst.ss(k - 1) - inst.l(k - 1) <= inst.ss(k) - inst.l(k))
        && inst.l(k) > inst.l(k + 1);
    if !ok {
        return Outcome::Skip;
    }
    let sk = inst.ss(k);
    let t = Some(trunc);
    let (ft, fd) = big(inst, true, trunc);
    let (st, sd) = big(&inst.dec_s(k), true, trunc);
    let (lt, ld) = big(&inst.dec_s(k).dec_lam(k), true, trunc);
    let left = one() - &xv(sk) * &av(k as i64);
    let right = one() - &xv(sk) * &bv(inst.l(k));
    let side = |f: &ParamPoly, s: &ParamPoly, l: &ParamPoly| {
        (left.mul_with_trunc(f, t), &right.mul_with_trunc(s, t) + &xv(sk).mul_with_trunc(l, t))
    };
    let (a, b) = side(&ft, &st, &lt);
    let (c, d) = side(&fd, &sd, &ld);
    Outcome::of(a == b && c == d, || format!("{inst} k={k}: tableaux {a} vs {b}; det {c} vs {d}"))
}

/// `F(s) = F(s - ε_k)` when `s_k = s_{k+1}` and `λ_k = λ_{k+1}` (rows), or
/// `s_k - 1 = s_{k+1}` and `λ_k = λ_{k+1}` (columns).
pub fn check_rec3(inst: &Instance, k: usize, col: bool, trunc: u32) -> Outcome {
    let n = inst.n();
    if k == 0 || k >= n || !inst.contained() || !Instance::is_partition(&inst.lam) || !Instance::is_partition(&inst.mu) {
        return Outcome::Skip;
    }
    let ok = if col {
        inst.r.iter().chain(&inst.s).all(|&v| v >= 1)
            && (1..n).all(|i| inst.rr(i) - inst.m(i) <= inst.rr(i + 1) - inst.m(i + 1))
            && inst.m(k) < inst.l(k)
            && inst.rr(k) - inst.m(k) <= inst.ss(k) - inst.l(k) + 1
            && inst.ss(k) - 1 == inst.ss(k + 1)
            && inst.l(k) == inst.l(k + 1)
    } else {
        Instance::weakly_increasing(&inst.r)
            && Instance::weakly_increasing(&inst.s)
            && inst.m(k) < inst.l(k)
            && inst.rr(k) <= inst.ss(k)
            && inst.ss(k) == inst.ss(k + 1)
            && inst.l(k) == inst.l(k + 1)
    };
    if !ok {
        return Outcome::Skip;
    }
    let (ft, fd) = big(inst, col, trunc);
    let (st, sd) = big(&inst.dec_s(k), col, trunc);
    let vanish = inst.ss(k) != 1 || (st.is_zero() && sd.is_zero());
    Outcome::of(ft == st && fd == sd && vanish, || format!("{inst} k={k} col={col}: {ft} vs {st}; {fd} vs {sd}"))
}

/// Indexed tableau sum and indexed determinant; `col` selects bottom-marked tableaux and `e` entries.
fn indexed(inst: &Instance, index: &IndexSet, col: bool) -> (ParamPoly, ParamPoly) {
    let sh = inst.shape();
    let f = inst.flags();
    let variant = if col { Variant::Bottom } else { Variant::Left };
    let kind = if col { FlagKind::Col } else { FlagKind::Row };
    let tab = mrpp_indexed_sum(&sh, &f, index, variant);
    let spec = JtSpec::new(GFamily::Small, kind, sh, f).indexed(index.clone());
    let det = det_ring(&jt_matrix(&spec).unwrap()).unwrap();
    (tab, det)
}

/// The dual recurrences on dented shapes, for `M` (tableaux) and `D` (determinant) separately.
pub fn check_rec_main(inst: &Instance, index: &IndexSet, col: bool) -> Outcome {
    let Some((k, lk)) = minimal_cell(&inst.lam) else { return Outcome::Skip };
    let Ok(dented) = DentedShape::new(inst.lam.clone()) else { return Outcome::Skip };
    let flags = inst.flags();
    let mu_ok = Instance::is_partition(&inst.mu) && inst.contained() && inst.m(k) < lk as i64;
    if !mu_ok
        || !Instance::weakly_increasing(&inst.r)
        || !Instance::weakly_increasing(&inst.s)
        || !flags.r_le_s()
        || !valid_index_sets(&dented).contains(index)
    {
        return Outcome::Skip;
    }
    let lk = lk as i64;
    let chi = index.contains(k);
    let sk = inst.ss(k);
    let shrunk = inst.dec_lam(k);
    let (ft, fd) = indexed(inst, index, col);
    let (gt, gd) = indexed(&shrunk, &index.with(k), col);
    let partition = dented.is_partition();
    let chi_poly = |p: ParamPoly| if chi { p } else { ParamPoly::zero(None) };
    let (rt, rd) = if !partition && inst.ss(k - 1) == sk {
        let coef = if col {
            xv(sk) - av(k as i64 - 1) + chi_poly(bv(lk) - xv(sk))
        } else {
            bv(k as i64 - 1) - chi_poly(av(lk))
        };
        (&coef * &gt, &coef * &gd)
    } else {
        let coef = if col { xv(sk) + chi_poly(bv(lk) - xv(sk)) } else { xv(sk) - chi_poly(av(lk)) };
        let (ht, hd) = indexed(&inst.dec_s(k), &index.without(k), col);
        (&(&coef * &gt) + &ht, &(&coef * &gd) + &hd)
    };
    Outcome::of(ft == rt && fd == rd, || format!("{inst} I={index} col={col}: M {ft} vs {rt}; D {fd} vs {rd}"))
}

/// Indexed factorization across `t` with `μ_t >= λ_{t+1}`, shifting `β` (h entries) or `α` (e entries).
pub fn check_rec1_dual(inst: &Instance, index: &IndexSet, t: usize, col: bool) -> Outcome {
    let n = inst.n();
    let Ok(dented) = DentedShape::new(inst.lam.clone()) else { return Outcome::Skip };
    if t == 0 || t >= n || !inst.contained() || !Instance::is_partition(&inst.mu) || inst.m(t) < inst.l(t + 1) {
        return Outcome::Skip;
    }
    if !inst.r.iter().chain(&inst.s).all(|&v| v >= 1) || !valid_index_sets(&dented).contains(index) {
        return Outcome::Skip;
    }
    let (p, q) = inst.split(t);
    let ip = IndexSet(index.0.iter().copied().filter(|&i| i <= t).collect());
    let iq = IndexSet(index.0.iter().copied().filter(|&i| i > t).map(|i| i - t).collect());
    let fam = if col { Family::Alpha } else { Family::Beta };
    let (ft, fd) = indexed(inst, index, col);
    let (pt, pd) = indexed(&p, &ip, col);
    let (qt, qd) = indexed(&q, &iq, col);
    let rt = &pt * &qt.shift_params(fam, t as i64).unwrap();
    let rd = &pd * &qd.shift_params(fam, t as i64).unwrap();
    Outcome::of(ft == rt && fd == rd, || format!("{inst} I={index} t={t} col={col}: M {ft} vs {rt}; D {fd} vs {rd}"))
}

fn sub_det(m: &[Vec<ParamPoly>], rows: std::ops::Range<usize>) -> ParamPoly {
    let sub: Vec<Vec<ParamPoly>> = rows.clone().map(|i| rows.clone().map(|j| m[i][j].clone()).collect()).collect();
    det_ring(&sub).unwrap()
}

/// With `λ_k = μ_k` the determinant splits into the blocks before and after `k`.
/// With `μ ⊄ λ` the determinant vanishes.
/// Only the `g` entries are plain `h_m[Z]`/`e_m[Z]`; the `G` entries use `⊖` and are excluded.
pub fn check_block_split(inst: &Instance, k: usize, col: bool) -> Outcome {
    let n = inst.n();
    if k == 0 || k > n || !Instance::is_partition(&inst.lam) || !Instance::is_partition(&inst.mu) {
        return Outcome::Skip;
    }
    let kind = if col { FlagKind::Col } else { FlagKind::Row };
    let spec = JtSpec::new(GFamily::Small, kind, inst.shape(), inst.flags());
    let m = jt_matrix(&spec).unwrap();
    let full = det_ring(&m).unwrap();
    if !inst.contained() {
        return Outcome::of(full.is_zero(), || format!("{inst}: det {full} with μ not inside λ"));
    }
    if inst.l(k) != inst.m(k) {
        return Outcome::Skip;
    }
    let split = sub_det(&m, 0..k - 1).mul_with_trunc(&sub_det(&m, k..n), full.trunc());
    Outcome::of(full == split, || format!("{inst} k={k}: {full} vs {split}"))
}

/// The `χ(r_j <= s_i)` gates do not change the `g` determinants.
pub fn check_chi(inst: &Instance, col: bool) -> Outcome {
    let sh = inst.shape();
    let f = inst.flags();
    if !Instance::is_partition(&inst.lam) || !Instance::is_partition(&inst.mu) || !inst.contained() || !f.r_le_s() || !f.positive() {
        return Outcome::Skip;
    }
    if !row_hypothesis(&sh, &f) {
        return Outcome::Skip;
    }
    let kind = if col { FlagKind::Col } else { FlagKind::Row };
    let plain = JtSpec::new(GFamily::Small, kind, sh, f);
    let gated = plain.clone().chi(true);
    let a = det_ring(&jt_matrix(&plain).unwrap()).unwrap();
    let b = det_ring(&jt_matrix(&gated).unwrap()).unwrap();
    Outcome::of(a == b, || format!("{inst} col={col}: {a} vs {b}"))
}

/// Random small instances.
pub struct Sampler {
    pub rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn partition(&mut self, n: usize, max: u32) -> Vec<u32> {
        let mut v: Vec<u32> = (0..n).map(|_| self.rng.gen_range(0..=max)).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn sub(&mut self, lam: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = Vec::with_capacity(lam.len());
        for (i, &l) in lam.iter().enumerate() {
            let cap = if i == 0 { l } else { l.min(out[i - 1]) };
            out.push(self.rng.gen_range(0..=cap));
        }
        out
    }

    pub fn vector(&mut self, n: usize, lo: u32, hi: u32, sorted: bool) -> Vec<u32> {
        let mut v: Vec<u32> = (0..n).map(|_| self.rng.gen_range(lo..=hi)).collect();
        if sorted {
            v.sort_unstable();
        }
        v
    }

    pub fn instance(&mut self, max_n: usize, max_part: u32, hi: u32, sorted_flags: bool) -> Instance {
        let n = self.rng.gen_range(1..=max_n);
        let lam = self.partition(n, max_part);
        let mu = self.sub(&lam);
        let r = self.vector(n, 1, hi, sorted_flags);
        let s = self.vector(n, 1, hi, sorted_flags);
        Instance { lam, mu, r, s }
    }

    /// A dented partition with `n` parts, each at most `max`.
    pub fn dented(&mut self, n: usize, max: u32) -> Vec<u32> {
        let mut lam = self.partition(n, max);
        let k = self.rng.gen_range(1..=n);
        if k > 1 && lam[k - 1] >= 1 {
            let top = lam[k - 1];
            for p in lam.iter_mut().take(k - 1) {
                *p = top - 1;
            }
        }
        lam
    }

    pub fn index_set(&mut self, lam: &[u32]) -> Option<IndexSet> {
        let d = DentedShape::new(lam.to_vec()).ok()?;
        let sets = valid_index_sets(&d);
        if sets.is_empty() {
            return None;
        }
        Some(sets[self.rng.gen_range(0..sets.len())].clone())
    }

    pub fn alphabet(&mut self) -> (AlphabetExpr, Var) {
        let mut e = AlphabetExpr::new();
        let fams = [Family::X, Family::Alpha, Family::Beta];
        for _ in 0..self.rng.gen_range(0..=4) {
            let fam = fams[self.rng.gen_range(0..3)];
            let a = Atom::Single(fam, self.rng.gen_range(1..=3));
            e = if self.rng.gen_bool(0.6) { e.plus(a) } else { e.minus(a) };
        }
        let v = Var { family: fams[self.rng.gen_range(0..3)], index: self.rng.gen_range(1..=3) };
        (e, v)
    }
}

/// Runs `check` on fresh samples until `cases` instances met their preconditions.
pub fn run_suite(name: &str, seed: u64, cases: usize, mut check: impl FnMut(&mut Sampler) -> Outcome) -> Tally {
    let mut sampler = Sampler::new(seed);
    let mut tally = Tally { name: name.to_string(), cases: 0, failed: 0, examples: Vec::new(), diagnostic: false };
    let mut attempts = 0usize;
    while tally.cases < cases && attempts < cases * 400 {
        attempts += 1;
        match check(&mut sampler) {
            Outcome::Skip => {}
            Outcome::Pass => tally.check(true, String::new),
            Outcome::Fail(msg) => tally.check(false, || msg),
        }
    }
    tally
}

/// Every lemma suite at `cases` instances each.
pub fn all_suites(seed: u64, cases: usize, trunc: u32) -> Vec<Tally> {
    let mut out = Vec::new();
    out.push(run_suite("h_recurrence", seed, cases, |s| {
        let (z, v) = s.alphabet();
        let c = s.rng.gen_bool(0.7);
        let m = s.rng.gen_range(-1..=5);
        check_h_recurrence(&z, v, c, m)
    }));
    out.push(run_suite("e_recurrence", seed + 1, cases, |s| {
        let (z, v) = s.alphabet();
        let c = s.rng.gen_bool(0.7);
        let m = s.rng.gen_range(-1..=5);
        check_e_recurrence(&z, v, c, m)
    }));
    out.push(run_suite("sign_duality", seed + 2, cases, |s| {
        let (y, _) = s.alphabet();
        let m = s.rng.gen_range(-1..=5);
        check_sign_duality(&y, m)
    }));
    out.push(run_suite("rec1", seed + 3, cases, |s| {
        let inst = s.instance(3, 3, 3, false);
        let t = s.rng.gen_range(1..=3);
        check_rec1(&inst, t, false, trunc)
    }));
    out.push(run_suite("rec1c", seed + 4, cases, |s| {
        let inst = s.instance(3, 3, 3, false);
        let t = s.rng.gen_range(1..=3);
        check_rec1(&inst, t, true, trunc)
    }));
    out.push(run_suite("rec2", seed + 5, cases, |s| {
        let inst = s.instance(3, 3, 4, true);
        let k = s.rng.gen_range(1..=inst.n());
        check_rec2(&inst, k, trunc)
    }));
    out.push(run_suite("rec2c", seed + 6, cases, |s| {
        let inst = s.instance(3, 3, 4, false);
        let k = s.rng.gen_range(1..=inst.n());
        check_rec2c(&inst, k, trunc)
    }));
    out.push(run_suite("rec3", seed + 7, cases, |s| {
        let inst = s.instance(3, 3, 4, true);
        let k = s.rng.gen_range(1..=3);
        check_rec3(&inst, k, false, trunc)
    }));
    out.push(run_suite("rec3c", seed + 8, cases, |s| {
        let inst = s.instance(3, 3, 4, false);
        let k = s.rng.gen_range(1..=3);
        check_rec3(&inst, k, true, trunc)
    }));
    for (name, col, off) in [("rec_main1", false, 9), ("mrpp_rec_e", true, 10)] {
        out.push(run_suite(name, seed + off, cases, |s| {
            let n = s.rng.gen_range(1..=3);
            let lam = s.dented(n, 4);
            let Some(index) = s.index_set(&lam) else { return Outcome::Skip };
            let mu = s.sub(&lam.iter().map(|&v| v.saturating_sub(1)).collect::<Vec<_>>());
            let r = s.vector(n, 1, 3, true);
            let sv = s.vector(n, 1, 3, true);
            check_rec_main(&Instance { lam, mu, r, s: sv }, &index, col)
        }));
    }
    for (name, col, off) in [("rec1_dual", false, 11), ("rec1_dual_e", true, 12)] {
        out.push(run_suite(name, seed + off, cases, |s| {
            let n = s.rng.gen_range(2..=3);
            let lam = s.dented(n, 4);
            let Some(index) = s.index_set(&lam) else { return Outcome::Skip };
            let mu = s.sub(&lam);
            let r = s.vector(n, 1, 3, false);
            let sv = s.vector(n, 1, 3, false);
            let t = s.rng.gen_range(1..n);
            check_rec1_dual(&Instance { lam, mu, r, s: sv }, &index, t, col)
        }));
    }
    out.push(run_suite("block_split", seed + 13, cases, |s| {
        let mut inst = s.instance(3, 3, 3, false);
        let n = inst.n();
        let k = s.rng.gen_range(1..=n);
        let col = s.rng.gen_bool(0.5);
        if s.rng.gen_bool(0.2) {
            inst.mu = s.partition(n, 3);
        } else {
            inst.mu[k - 1] = inst.lam[k - 1];
            for i in 0..k - 1 {
                inst.mu[i] = inst.mu[i].max(inst.mu[k - 1]).min(inst.lam[i]);
            }
        }
        check_block_split(&inst, k, col)
    }));
    out.push(run_suite("chi_no_chi", seed + 14, cases, |s| {
        let inst = s.instance(3, 3, 4, false);
        check_chi(&inst, false)
    }));
    out.push(run_suite("chi_no_chi_e", seed + 15, cases, |s| {
        let inst = s.instance(3, 3, 4, false);
        check_chi(&inst, true)
    }));
    out
}
