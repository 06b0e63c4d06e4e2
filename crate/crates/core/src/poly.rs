//! Exact polynomials in the variables `x_i` and the parameters `α_i`, `β_i`,
//! optionally truncated in total x-degree.
//!
//! A polynomial with `trunc = Some(d)` is exact on every term of x-degree at most `d`
//! and carries no terms beyond.

use crate::error::{Error, Result};
use crate::int::Int;
use rustc_hash::FxHashMap;
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    X = 0,
    Alpha = 1,
    Beta = 2,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::X => 'x',
            Family::Alpha => 'a',
            Family::Beta => 'b',
        }
    }

    fn from_code(c: u64) -> Family {
        match c {
            0 => Family::X,
            1 => Family::Alpha,
            _ => Family::Beta,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var {
    pub family: Family,
    pub index: u32,
}

impl Var {
    pub fn x(i: u32) -> Var {
        Var { family: Family::X, index: i }
    }
    pub fn a(i: u32) -> Var {
        Var { family: Family::Alpha, index: i }
    }
    pub fn b(i: u32) -> Var {
        Var { family: Family::Beta, index: i }
    }

    fn key(self) -> u64 {
        assert!(self.index >= 1 && self.index < (1 << 28), "variable index out of range");
        ((self.family as u64) << 28) | self.index as u64
    }

    fn from_key(k: u64) -> Var {
        Var { family: Family::from_code(k >> 28), index: (k & ((1 << 28) - 1)) as u32 }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.index)
    }
}

/// Sorted list of `(variable, exponent)` pairs packed as `key << 32 | exp`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(SmallVec<[u64; 8]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        let mut s = SmallVec::new();
        s.push((v.key() << 32) | e as u64);
        Monomial(s)
    }

    pub fn from_exps(exps: &[(Var, u32)]) -> Monomial {
        let mut m = Monomial::one();
        for &(v, e) in exps {
            m = m.mul(&Monomial::var(v, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exps(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().map(|&p| (Var::from_key(p >> 32), (p & 0xffff_ffff) as u32))
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps().find(|(w, _)| *w == v).map(|(_, e)| e).unwrap_or(0)
    }

    pub fn x_degree(&self) -> u32 {
        let mut d = 0;
        for &p in &self.0 {
            if p >> 60 != 0 {
                break;
            }
            d += (p & 0xffff_ffff) as u32;
        }
        d
    }

    pub fn degree_in(&self, fam: Family) -> u32 {
        self.exps().filter(|(v, _)| v.family == fam).map(|(_, e)| e).sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        if o.0.is_empty() {
            return self.clone();
        }
        if self.0.is_empty() {
            return o.clone();
        }
        let (a, b) = (&self.0, &o.0);
        let mut buf = [0u64; 32];
        if a.len() + b.len() > buf.len() {
            let mut out = SmallVec::with_capacity(a.len() + b.len());
            merge_into(a, b, |p| out.push(p));
            return Monomial(out);
        }
        let mut k = 0;
        merge_into(a, b, |p| {
            buf[k] = p;
            k += 1;
        });
        Monomial(SmallVec::from_slice(&buf[..k]))
    }

    /// `self / o` when `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut out: SmallVec<[u64; 8]> = SmallVec::new();
        let mut j = 0;
        for &p in &self.0 {
            if j < o.0.len() && o.0[j] >> 32 == p >> 32 {
                let (e, f) = (p & 0xffff_ffff, o.0[j] & 0xffff_ffff);
                if f > e {
                    return None;
                }
                if e > f {
                    out.push(p - f);
                }
                j += 1;
            } else if j < o.0.len() && o.0[j] >> 32 < p >> 32 {
                return None;
            } else {
                out.push(p);
            }
        }
        if j < o.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    fn map_vars(&self, mut f: impl FnMut(Var) -> Var) -> Monomial {
        let mut m = Monomial::one();
        for (v, e) in self.exps() {
            m = m.mul(&Monomial::var(f(v), e));
        }
        m
    }

    fn flat(&self, fam: Family) -> impl Iterator<Item = u32> + '_ {
        self.exps().filter(move |(v, _)| v.family == fam).flat_map(|(v, e)| [v.index, e])
    }

    /// Canonical order used for output: higher total x-degree first, then the
    /// x, α and β exponent lists compared as flat `[index, exp, ...]` sequences.
    pub fn canonical_cmp(&self, o: &Monomial) -> Ordering {
        o.x_degree()
            .cmp(&self.x_degree())
            .then_with(|| self.flat(Family::X).cmp(o.flat(Family::X)))
            .then_with(|| self.flat(Family::Alpha).cmp(o.flat(Family::Alpha)))
            .then_with(|| self.flat(Family::Beta).cmp(o.flat(Family::Beta)))
    }

    /// Pure lexicographic monomial order with x1 > x2 > ... > α1 > ... > β1 > ...
    pub fn lex_cmp(&self, o: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &o.0);
        for t in 0..a.len().min(b.len()) {
            let (ka, kb) = (a[t] >> 32, b[t] >> 32);
            if ka != kb {
                return kb.cmp(&ka);
            }
            let (ea, eb) = (a[t] & 0xffff_ffff, b[t] & 0xffff_ffff);
            if ea != eb {
                return ea.cmp(&eb);
            }
        }
        a.len().cmp(&b.len())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for fam in [Family::Alpha, Family::Beta, Family::X] {
            for (v, e) in self.exps().filter(|(v, _)| v.family == fam) {
                if e == 1 {
                    parts.push(v.to_string());
                } else {
                    parts.push(format!("{v}^{e}"));
                }
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Merges two packed exponent lists, adding exponents of shared variables.
#[inline]
fn merge_into(a: &[u64], b: &[u64], mut push: impl FnMut(u64)) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (ka, kb) = (a[i] >> 32, b[j] >> 32);
        match ka.cmp(&kb) {
            Ordering::Less => {
                push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                push(a[i] + (b[j] & 0xffff_ffff));
                i += 1;
                j += 1;
            }
        }
    }
    a[i..].iter().chain(&b[j..]).for_each(|&p| push(p));
}

pub(crate) type TermMap = FxHashMap<Monomial, Int>;

pub(crate) fn join_trunc(a: Option<u32>, b: Option<u32>) -> Result<Option<u32>> {
    match (a, b) {
        (Some(x), Some(y)) if x != y => Err(Error::TruncMismatch(x, y)),
        (Some(x), _) | (_, Some(x)) => Ok(Some(x)),
        _ => Ok(None),
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ParamPoly {
    terms: Vec<(Monomial, Int)>,
    trunc: Option<u32>,
}

impl ParamPoly {
    pub fn zero(trunc: Option<u32>) -> ParamPoly {
        ParamPoly { terms: Vec::new(), trunc }
    }

    pub fn one(trunc: Option<u32>) -> ParamPoly {
        ParamPoly::constant(1, trunc)
    }

    pub fn constant(c: impl Into<Int>, trunc: Option<u32>) -> ParamPoly {
        ParamPoly::term(Monomial::one(), c, trunc)
    }

    pub fn var(v: Var, trunc: Option<u32>) -> ParamPoly {
        ParamPoly::term(Monomial::var(v, 1), 1, trunc)
    }

    pub fn term(m: Monomial, c: impl Into<Int>, trunc: Option<u32>) -> ParamPoly {
        let c = c.into();
        if c.is_zero() || trunc.is_some_and(|t| m.x_degree() > t) {
            return ParamPoly::zero(trunc);
        }
        ParamPoly { terms: vec![(m, c)], trunc }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Int)>, trunc: Option<u32>) -> ParamPoly {
        let mut v: Vec<(Monomial, Int)> = it
            .into_iter()
            .filter(|(m, _)| trunc.map_or(true, |t| m.x_degree() <= t))
            .collect();
        ParamPoly { terms: normalize(&mut v), trunc }
    }

    pub fn trunc(&self) -> Option<u32> {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in internal storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Int)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    /// Terms in canonical output order.
    pub fn canonical_terms(&self) -> Vec<(&Monomial, &Int)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| a.0.canonical_cmp(b.0));
        v
    }

    pub fn coeff(&self, m: &Monomial) -> Int {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Int::ZERO,
        }
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.x_degree()).max()
    }

    /// Largest variable index of a family, 0 if absent.
    pub fn max_index(&self, fam: Family) -> u32 {
        self.terms
            .iter()
            .flat_map(|(m, _)| m.exps().filter(|(v, _)| v.family == fam).map(|(v, _)| v.index).collect::<Vec<_>>())
            .max()
            .unwrap_or(0)
    }

    /// Drops terms of x-degree above `d` and records the bound.
    pub fn truncate(&self, d: u32) -> ParamPoly {
        let d = self.trunc.map_or(d, |t| t.min(d));
        ParamPoly {
            terms: self.terms.iter().filter(|(m, _)| m.x_degree() <= d).cloned().collect(),
            trunc: Some(d),
        }
    }

    /// Forgets the truncation bound; only sound when the value is known to be exact.
    pub fn assume_exact(mut self) -> ParamPoly {
        self.trunc = None;
        self
    }

    pub fn checked_add(&self, o: &ParamPoly) -> Result<ParamPoly> {
        let trunc = join_trunc(self.trunc, o.trunc)?;
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (a, b) = (&self.terms, &o.terms);
        let (mut i, mut j) = (0, 0);
        let keep = |m: &Monomial| trunc.map_or(true, |t| m.x_degree() <= t);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Greater
            } else if j == b.len() {
                Ordering::Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                Ordering::Less => {
                    if keep(&a[i].0) {
                        out.push(a[i].clone());
                    }
                    i += 1;
                }
                Ordering::Greater => {
                    if keep(&b[j].0) {
                        out.push(b[j].clone());
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1.add(&b[j].1);
                    if !c.is_zero() && keep(&a[i].0) {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(ParamPoly { terms: out, trunc })
    }

    pub fn checked_sub(&self, o: &ParamPoly) -> Result<ParamPoly> {
        self.checked_add(&o.neg())
    }

    pub fn checked_mul(&self, o: &ParamPoly) -> Result<ParamPoly> {
        let trunc = join_trunc(self.trunc, o.trunc)?;
        Ok(self.mul_with_trunc(o, trunc))
    }

    /// Product truncated at `trunc`, ignoring the operands' own bounds.
    /// The result is exact up to `min(trunc, operand bounds)`.
    pub fn mul_with_trunc(&self, o: &ParamPoly, trunc: Option<u32>) -> ParamPoly {
        if self.is_zero() || o.is_zero() {
            return ParamPoly::zero(trunc);
        }
        let mut acc = TermMap::default();
        self.mul_into(o, false, trunc, &mut acc);
        ParamPoly::from_map(acc, trunc)
    }

    /// Adds `±self·o`, cut at x-degree `trunc`, into `acc`.
    pub(crate) fn mul_into(&self, o: &ParamPoly, negate: bool, trunc: Option<u32>, acc: &mut TermMap) {
        let xb: Vec<u32> = o.terms.iter().map(|(m, _)| m.x_degree()).collect();
        acc.reserve(self.terms.len().max(o.terms.len()) * 4);
        for (ma, ca) in &self.terms {
            let da = ma.x_degree();
            let ca = if negate { ca.neg() } else { ca.clone() };
            for (k, (mb, cb)) in o.terms.iter().enumerate() {
                if trunc.is_some_and(|t| da + xb[k] > t) {
                    continue;
                }
                let c = ca.mul(cb);
                match acc.entry(ma.mul(mb)) {
                    Entry::Occupied(mut e) => {
                        let s = e.get().add(&c);
                        *e.get_mut() = s;
                    }
                    Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
    }

    pub(crate) fn from_map(acc: TermMap, trunc: Option<u32>) -> ParamPoly {
        let mut terms: Vec<(Monomial, Int)> =
            acc.into_iter().filter(|(m, c)| !c.is_zero() && trunc.map_or(true, |t| m.x_degree() <= t)).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        ParamPoly { terms, trunc }
    }

    pub fn neg(&self) -> ParamPoly {
        ParamPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(), trunc: self.trunc }
    }

    pub fn scale(&self, k: &Int) -> ParamPoly {
        if k.is_zero() {
            return ParamPoly::zero(self.trunc);
        }
        ParamPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul(k))).collect(), trunc: self.trunc }
    }

    pub fn mul_monomial(&self, mono: &Monomial, k: &Int) -> ParamPoly {
        let d = mono.x_degree();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| self.trunc.map_or(true, |t| m.x_degree() + d <= t))
            .map(|(m, c)| (m.mul(mono), c.mul(k)))
            .filter(|(_, c)| !c.is_zero())
            .collect::<Vec<_>>();
        let mut terms = terms;
        ParamPoly { terms: normalize(&mut terms), trunc: self.trunc }
    }

    pub fn pow(&self, e: u32) -> ParamPoly {
        let mut acc = ParamPoly::one(self.trunc);
        for _ in 0..e {
            acc = acc.mul_with_trunc(self, self.trunc);
        }
        acc
    }

    /// Reindexes one parameter family: `v_i -> v_{i+offset}`.
    pub fn shift_params(&self, fam: Family, offset: i64) -> Result<ParamPoly> {
        if fam == Family::X {
            return Err(Error::Invalid("shift applies to parameter families only".into()));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut bad = None;
            let nm = m.map_vars(|v| {
                if v.family != fam {
                    return v;
                }
                let ni = v.index as i64 + offset;
                if ni < 1 {
                    bad = Some(v);
                    return v;
                }
                Var { family: fam, index: ni as u32 }
            });
            if let Some(v) = bad {
                return Err(Error::Invalid(format!("shift moves {v} below index 1")));
            }
            terms.push((nm, c.clone()));
        }
        Ok(ParamPoly { terms: normalize(&mut terms), trunc: self.trunc })
    }

    /// Substitutes every α and β by an integer or a multiple of a single fresh
    /// symbol. The fresh symbols print as `a1` and `b1`.
    pub fn substitute_params(&self, a_map: &ParamMap, b_map: &ParamMap) -> Result<ParamPoly> {
        let mut acc: Vec<(Monomial, Int)> = Vec::new();
        for (m, c) in &self.terms {
            let mut part = ParamPoly::term(Monomial::one(), c.clone(), None);
            for (v, e) in m.exps() {
                let factor = match v.family {
                    Family::X => ParamPoly::var(v, None),
                    Family::Alpha => a_map.image(v)?,
                    Family::Beta => b_map.image(v)?,
                };
                part = part.mul_with_trunc(&factor.pow(e), None);
                if part.is_zero() {
                    break;
                }
            }
            acc.extend(part.terms);
        }
        Ok(ParamPoly { terms: normalize(&mut acc), trunc: self.trunc })
    }

    /// Exact quotient `self / den`. The denominator must be exact and homogeneous
    /// in x when `self` is truncated; the quotient is truncated at `guard`.
    pub fn divide_exact(&self, den: &ParamPoly, guard: Option<u32>) -> Result<ParamPoly> {
        if den.trunc.is_some() {
            return Err(Error::Invalid("denominator must be exact".into()));
        }
        if den.is_zero() {
            return Err(Error::NotDivisible("division by zero".into()));
        }
        let degs: Vec<u32> = den.terms.iter().map(|(m, _)| m.x_degree()).collect();
        let d = degs[0];
        let homogeneous = degs.iter().all(|&e| e == d);
        let guard = match (self.trunc, guard) {
            (None, g) => g,
            (Some(t), g) => {
                if !homogeneous {
                    return Err(Error::Invalid("truncated division needs an x-homogeneous denominator".into()));
                }
                if t < d {
                    return Ok(ParamPoly::zero(Some(g.unwrap_or(0))));
                }
                let g = g.unwrap_or(t - d);
                if g + d > t {
                    return Err(Error::Invalid(format!("guard {g} exceeds known degree {t} minus {d}")));
                }
                Some(g)
            }
        };
        let q = if self.trunc.is_none() {
            long_divide(&self.terms, &den.terms)?
        } else {
            let g = guard.unwrap();
            let mut by_deg: BTreeMap<u32, Vec<(Monomial, Int)>> = BTreeMap::new();
            for (m, c) in &self.terms {
                let e = m.x_degree();
                if e < d {
                    return Err(Error::NotDivisible(format!("term {m} below denominator degree")));
                }
                if e <= g + d {
                    by_deg.entry(e).or_default().push((m.clone(), c.clone()));
                }
            }
            let mut q = Vec::new();
            for (_, comp) in by_deg {
                q.extend(long_divide(&comp, &den.terms)?);
            }
            q
        };
        let mut q = q;
        let mut out = ParamPoly { terms: normalize(&mut q), trunc: None };
        if let Some(g) = guard {
            out = out.truncate(g);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        let terms: Vec<serde_json::Value> = self
            .canonical_terms()
            .into_iter()
            .map(|(m, c)| {
                let fam = |f: Family| -> Vec<[u32; 2]> {
                    m.exps().filter(|(v, _)| v.family == f).map(|(v, e)| [v.index, e]).collect()
                };
                json!({"c": c.to_string(), "x": fam(Family::X), "a": fam(Family::Alpha), "b": fam(Family::Beta)})
            })
            .collect();
        json!({"trunc": self.trunc, "terms": terms})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<ParamPoly> {
        let bad = |s: &str| Error::Parse(format!("polynomial json: {s}"));
        let trunc = match v.get("trunc") {
            None | Some(serde_json::Value::Null) => None,
            Some(t) => Some(t.as_u64().ok_or_else(|| bad("trunc"))? as u32),
        };
        let mut terms = Vec::new();
        for t in v.get("terms").and_then(|t| t.as_array()).ok_or_else(|| bad("terms"))? {
            let c: Int = t
                .get("c")
                .and_then(|c| c.as_str())
                .ok_or_else(|| bad("c"))?
                .parse()
                .map_err(|_| bad("coefficient"))?;
            let mut m = Monomial::one();
            for (key, fam) in [("x", Family::X), ("a", Family::Alpha), ("b", Family::Beta)] {
                for pair in t.get(key).and_then(|p| p.as_array()).ok_or_else(|| bad(key))? {
                    let p = pair.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("pair"))?;
                    let i = p[0].as_u64().filter(|&i| i >= 1).ok_or_else(|| bad("index"))? as u32;
                    let e = p[1].as_u64().ok_or_else(|| bad("exponent"))? as u32;
                    m = m.mul(&Monomial::var(Var { family: fam, index: i }, e));
                }
            }
            terms.push((m, c));
        }
        Ok(ParamPoly::from_terms(terms, trunc))
    }
}

fn normalize(v: &mut Vec<(Monomial, Int)>) -> Vec<(Monomial, Int)> {
    v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut out: Vec<(Monomial, Int)> = Vec::with_capacity(v.len());
    for (m, c) in v.drain(..) {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 = last.1.add(&c),
            _ => out.push((m, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

#[derive(Clone, PartialEq, Eq, Debug)]
struct LexKey(Monomial);

impl PartialOrd for LexKey {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for LexKey {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.lex_cmp(&o.0)
    }
}

fn long_divide(num: &[(Monomial, Int)], den: &[(Monomial, Int)]) -> Result<Vec<(Monomial, Int)>> {
    let (lm, lc) = den.iter().max_by(|a, b| a.0.lex_cmp(&b.0)).unwrap().clone();
    let mut rem: BTreeMap<LexKey, Int> = num.iter().map(|(m, c)| (LexKey(m.clone()), c.clone())).collect();
    let mut q = Vec::new();
    while let Some((LexKey(m), c)) = rem.pop_last() {
        if c.is_zero() {
            continue;
        }
        let qm = m.div(&lm).ok_or_else(|| Error::NotDivisible(format!("leading term {m} not divisible by {lm}")))?;
        let qc = c.div_exact(&lc).ok_or_else(|| Error::NotDivisible(format!("coefficient {c} not divisible by {lc}")))?;
        for (dm, dc) in den {
            if *dm == lm {
                continue;
            }
            let key = LexKey(dm.mul(&qm));
            let delta = dc.mul(&qc).neg();
            let entry = rem.entry(key).or_insert(Int::ZERO);
            *entry = entry.add(&delta);
        }
        rem.retain(|_, c| !c.is_zero());
        q.push((qm, qc));
    }
    Ok(q)
}

/// Image of one parameter under a substitution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Int(Int),
    /// `k` times the family's fresh scalar symbol.
    Symbol(i64),
    /// Leaves the parameter unchanged.
    Keep,
}

/// Substitution for the indices of one parameter family.
#[derive(Clone, Debug, Default)]
pub struct ParamMap {
    pub default: Option<Target>,
    pub explicit: BTreeMap<u32, Target>,
}

impl ParamMap {
    pub fn constant(t: Target) -> ParamMap {
        ParamMap { default: Some(t), explicit: BTreeMap::new() }
    }

    pub fn identity_free() -> ParamMap {
        ParamMap::default()
    }

    pub fn with(mut self, i: u32, t: Target) -> ParamMap {
        self.explicit.insert(i, t);
        self
    }

    fn image(&self, v: Var) -> Result<ParamPoly> {
        let t = self
            .explicit
            .get(&v.index)
            .or(self.default.as_ref())
            .ok_or_else(|| Error::UnmappedParameter(v.to_string()))?;
        Ok(match t {
            Target::Int(k) => ParamPoly::constant(k.clone(), None),
            Target::Symbol(k) => ParamPoly::term(Monomial::var(Var { family: v.family, index: 1 }, 1), *k, None),
            Target::Keep => ParamPoly::var(v, None),
        })
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.canonical_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $method:ident) => {
        impl std::ops::$tr<&ParamPoly> for &ParamPoly {
            type Output = ParamPoly;
            fn $f(self, o: &ParamPoly) -> ParamPoly {
                self.$method(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl std::ops::$tr<ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $f(self, o: ParamPoly) -> ParamPoly {
                (&self).$f(&o)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl std::ops::Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly::neg(&self)
    }
}

/// Accumulates weighted monomials; cheaper than repeated polynomial additions.
#[derive(Default)]
pub struct Accumulator {
    map: HashMap<Monomial, Int>,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, m: Monomial, c: &Int) {
        let e = self.map.entry(m).or_insert(Int::ZERO);
        *e = e.add(c);
    }

    pub fn finish(self, trunc: Option<u32>) -> ParamPoly {
        ParamPoly::from_terms(self.map.into_iter().filter(|(_, c)| !c.is_zero()), trunc)
    }
}
