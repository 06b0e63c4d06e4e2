//! Plethystic alphabets and the complete/elementary symmetric functions evaluated on them.
//!
//! An alphabet is a signed formal sum of letters. `h_m[Y ⊖ Z]` is the series
//! `Σ_{a-b=m} h_a[Y] h_b[Z]`, and similarly for `e`.

use crate::error::{Error, Result};
use crate::int::{binom, multichoose};
use crate::poly::{Family, Monomial, ParamPoly, Var};
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    /// `x_r + ... + x_s`; empty when `r > s`. Indices below 1 contribute nothing.
    XRange(i64, i64),
    /// `x_1 + ... + x_n`.
    XPrefix(i64),
    /// `α_1 + ... + α_n`.
    APrefix(i64),
    /// `β_1 + ... + β_n`.
    BPrefix(i64),
    Single(Family, u32),
    /// `count` copies of a letter; `negated` uses the letter `-v` in place of `v`.
    Repeat { family: Family, index: u32, count: i64, negated: bool },
}

/// A letter of an alphabet: a variable, possibly negated as a letter.
pub type Letter = (Var, bool);

/// Net multiplicities of letters, sorted and without zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Letters(Vec<(Letter, i64)>);

impl Letters {
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Letter, i64)> {
        self.0.iter()
    }

    fn all_x(&self) -> bool {
        self.0.iter().all(|((v, _), _)| v.family == Family::X)
    }

    /// Total count when all multiplicities have the given sign.
    fn signed_size(&self, positive: bool) -> Option<i64> {
        if self.0.iter().all(|(_, c)| (*c > 0) == positive) {
            Some(self.0.iter().map(|(_, c)| c.abs()).sum())
        } else {
            None
        }
    }
}

impl Atom {
    fn push_letters(&self, sign: i64, acc: &mut BTreeMap<Letter, i64>) {
        let mut add = |v: Var, neg: bool, c: i64| *acc.entry((v, neg)).or_insert(0) += sign * c;
        match *self {
            Atom::XRange(r, s) => {
                for l in r.max(1)..=s {
                    add(Var::x(l as u32), false, 1);
                }
            }
            Atom::XPrefix(n) => {
                for l in 1..=n {
                    add(Var::x(l as u32), false, 1);
                }
            }
            Atom::APrefix(n) => {
                for l in 1..=n {
                    add(Var::a(l as u32), false, 1);
                }
            }
            Atom::BPrefix(n) => {
                for l in 1..=n {
                    add(Var::b(l as u32), false, 1);
                }
            }
            Atom::Single(f, i) => add(Var { family: f, index: i }, false, 1),
            Atom::Repeat { family, index, count, negated } => add(Var { family, index }, negated, count),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::XRange(r, s) => write!(f, "X[{r},{s}]"),
            Atom::XPrefix(n) => write!(f, "X[{n}]"),
            Atom::APrefix(n) => write!(f, "A[{n}]"),
            Atom::BPrefix(n) => write!(f, "B[{n}]"),
            Atom::Single(fam, i) => write!(f, "{}{i}", fam.letter()),
            Atom::Repeat { family, index, count, negated } => {
                write!(f, "{count}*{}{}{index}", if *negated { "~" } else { "" }, family.letter())
            }
        }
    }
}

/// `plus - minus ⊖ (theta_plus - theta_minus)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AlphabetExpr {
    pub plus: Vec<Atom>,
    pub minus: Vec<Atom>,
    pub theta_plus: Vec<Atom>,
    pub theta_minus: Vec<Atom>,
}

impl AlphabetExpr {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn plus(mut self, a: Atom) -> Self {
        self.plus.push(a);
        self
    }

    pub fn minus(mut self, a: Atom) -> Self {
        self.minus.push(a);
        self
    }

    pub fn theta_plus(mut self, a: Atom) -> Self {
        self.theta_plus.push(a);
        self
    }

    pub fn theta_minus(mut self, a: Atom) -> Self {
        self.theta_minus.push(a);
        self
    }

    pub fn has_theta(&self) -> bool {
        !(self.theta_plus.is_empty() && self.theta_minus.is_empty())
    }

    /// The alphabet with plus and minus parts exchanged.
    pub fn negate_main(&self) -> Self {
        AlphabetExpr {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
            theta_plus: self.theta_plus.clone(),
            theta_minus: self.theta_minus.clone(),
        }
    }

    pub fn main_letters(&self) -> Letters {
        letters_of(&self.plus, &self.minus)
    }

    pub fn theta_letters(&self) -> Letters {
        letters_of(&self.theta_plus, &self.theta_minus)
    }

    pub fn parse(s: &str) -> Result<AlphabetExpr> {
        let (main, theta) = match s.split_once("(-)") {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let mut e = AlphabetExpr::new();
        parse_side(main, &mut e.plus, &mut e.minus)?;
        if let Some(t) = theta {
            parse_side(t, &mut e.theta_plus, &mut e.theta_minus)?;
        }
        Ok(e)
    }
}

fn letters_of(plus: &[Atom], minus: &[Atom]) -> Letters {
    let mut acc = BTreeMap::new();
    for a in plus {
        a.push_letters(1, &mut acc);
    }
    for a in minus {
        a.push_letters(-1, &mut acc);
    }
    Letters(acc.into_iter().filter(|(_, c)| *c != 0).collect())
}

fn parse_side(s: &str, plus: &mut Vec<Atom>, minus: &mut Vec<Atom>) -> Result<()> {
    let err = |m: String| Error::Parse(format!("alphabet: {m}"));
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() || chars == ['0'] {
        return Ok(());
    }
    let mut i = 0;
    let num = |i: &mut usize| -> Result<i64> {
        let st = *i;
        if *i < chars.len() && chars[*i] == '-' {
            *i += 1;
        }
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[st..*i].iter().collect::<String>().parse().map_err(|_| err(format!("expected integer at {st}")))
    };
    let mut first = true;
    while i < chars.len() {
        let mut sign = 1i64;
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -1;
            }
            i += 1;
        } else if !first {
            return Err(err(format!("expected + or - at {i}")));
        }
        first = false;
        let mut mult = 1i64;
        if i < chars.len() && chars[i].is_ascii_digit() {
            mult = num(&mut i)?;
            if i >= chars.len() || chars[i] != '*' {
                return Err(err("expected * after multiplier".into()));
            }
            i += 1;
        }
        let negated = i < chars.len() && chars[i] == '~';
        if negated {
            i += 1;
        }
        let c = *chars.get(i).ok_or_else(|| err("missing atom".into()))?;
        i += 1;
        let atom = match c {
            'X' | 'A' | 'B' => {
                if chars.get(i) != Some(&'[') {
                    return Err(err("expected [".into()));
                }
                i += 1;
                let a = num(&mut i)?;
                let atom = if chars.get(i) == Some(&',') {
                    i += 1;
                    let b = num(&mut i)?;
                    if c != 'X' {
                        return Err(err("ranges are only defined for X".into()));
                    }
                    Atom::XRange(a, b)
                } else {
                    match c {
                        'X' => Atom::XPrefix(a),
                        'A' => Atom::APrefix(a),
                        _ => Atom::BPrefix(a),
                    }
                };
                if chars.get(i) != Some(&']') {
                    return Err(err("expected ]".into()));
                }
                i += 1;
                if negated {
                    return Err(err("~ applies to single letters".into()));
                }
                atom
            }
            'x' | 'a' | 'b' => {
                let fam = match c {
                    'x' => Family::X,
                    'a' => Family::Alpha,
                    _ => Family::Beta,
                };
                let idx = num(&mut i)?;
                if idx < 1 {
                    return Err(err("letter index must be positive".into()));
                }
                if mult == 1 && !negated {
                    Atom::Single(fam, idx as u32)
                } else {
                    let a = Atom::Repeat { family: fam, index: idx as u32, count: mult, negated };
                    mult = 1;
                    a
                }
            }
            other => return Err(err(format!("unexpected '{other}'"))),
        };
        let target = if sign > 0 { &mut *plus } else { &mut *minus };
        for _ in 0..mult.max(0) {
            target.push(atom.clone());
        }
        if mult < 0 {
            let other = if sign > 0 { &mut *minus } else { &mut *plus };
            for _ in 0..(-mult) {
                other.push(atom.clone());
            }
        }
    }
    Ok(())
}

impl fmt::Display for AlphabetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn side(f: &mut fmt::Formatter<'_>, p: &[Atom], m: &[Atom]) -> fmt::Result {
            if p.is_empty() && m.is_empty() {
                return write!(f, "0");
            }
            let mut first = true;
            for a in p {
                write!(f, "{}{a}", if first { "" } else { " + " })?;
                first = false;
            }
            for a in m {
                write!(f, "{}{a}", if first { "-" } else { " - " })?;
                first = false;
            }
            Ok(())
        }
        side(f, &self.plus, &self.minus)?;
        if self.has_theta() {
            write!(f, " (-) ")?;
            side(f, &self.theta_plus, &self.theta_minus)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    H,
    E,
}

type SeriesKey = (Kind, Letters, Option<u32>, u32);
type EvalKey = (Kind, i64, Letters, Letters, Option<u32>);

thread_local! {
    static SERIES: RefCell<HashMap<SeriesKey, Rc<Vec<ParamPoly>>>> = RefCell::new(HashMap::new());
    static EVALS: RefCell<HashMap<EvalKey, ParamPoly>> = RefCell::new(HashMap::new());
}

/// Drops the per-thread memo tables.
pub fn clear_cache() {
    SERIES.with(|c| c.borrow_mut().clear());
    EVALS.with(|c| c.borrow_mut().clear());
}

/// Coefficients of `t^0..=t^upto` in `Σ_m h_m[L] t^m` (or `e_m`).
fn series(kind: Kind, l: &Letters, upto: u32, trunc: Option<u32>) -> Rc<Vec<ParamPoly>> {
    let key = (kind, l.clone(), trunc, upto);
    if let Some(v) = SERIES.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    let mut cur = vec![ParamPoly::zero(trunc); upto as usize + 1];
    cur[0] = ParamPoly::one(trunc);
    for &((v, neg), c) in l.iter() {
        let mut next = vec![ParamPoly::zero(trunc); upto as usize + 1];
        for k in 0..=upto {
            let coef = match kind {
                Kind::H => multichoose(c, k),
                Kind::E => binom(c, k),
            };
            if coef.is_zero() {
                if k > 0 {
                    break;
                }
                continue;
            }
            if v.family == Family::X && trunc.is_some_and(|t| k > t) {
                break;
            }
            let coef = if neg && k % 2 == 1 { coef.neg() } else { coef };
            let mono = Monomial::var(v, k);
            for m in k..=upto {
                let src = &cur[(m - k) as usize];
                if src.is_zero() {
                    continue;
                }
                let add = src.mul_monomial(&mono, &coef);
                next[m as usize] = &next[m as usize] + &add;
            }
        }
        cur = next;
    }
    let rc = Rc::new(cur);
    SERIES.with(|c| c.borrow_mut().insert(key, rc.clone()));
    rc
}

fn eval(kind: Kind, m: i64, expr: &AlphabetExpr, trunc: Option<u32>) -> Result<ParamPoly> {
    let y = expr.main_letters();
    let z = expr.theta_letters();
    let key = (kind, m, y.clone(), z.clone(), trunc);
    if let Some(p) = EVALS.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(p);
    }
    let out = if z.is_empty() {
        if m < 0 {
            ParamPoly::zero(trunc)
        } else {
            series(kind, &y, m as u32, trunc)[m as usize].clone()
        }
    } else {
        let lo = (-m).max(0);
        let mut hi: Option<i64> = None;
        let mut tighten = |b: i64| hi = Some(hi.map_or(b, |h: i64| h.min(b)));
        if y.is_empty() {
            tighten(-m);
        } else if y.all_x() {
            if let Some(t) = trunc {
                tighten(t as i64 - m);
            }
        }
        let vanishing = match kind {
            Kind::H => y.signed_size(false),
            Kind::E => y.signed_size(true),
        };
        if let Some(sz) = vanishing {
            tighten(sz - m);
        }
        let hi = hi.ok_or_else(|| Error::UnboundedSeries(format!("{kind:?}_{m}[{expr}] needs a truncation bound")))?;
        let mut acc = ParamPoly::zero(trunc);
        if hi >= lo {
            let ys = series(kind, &y, (m + hi) as u32, trunc);
            let zs = series(kind, &z, hi as u32, trunc);
            for l in lo..=hi {
                let a = &ys[(m + l) as usize];
                let b = &zs[l as usize];
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = &acc + &a.mul_with_trunc(b, trunc);
            }
        }
        acc
    };
    EVALS.with(|c| c.borrow_mut().insert(key, out.clone()));
    Ok(out)
}

/// `h_m[expr]`, truncated at x-degree `trunc` when given.
pub fn h_eval(m: i64, expr: &AlphabetExpr, trunc: Option<u32>) -> Result<ParamPoly> {
    eval(Kind::H, m, expr, trunc)
}

/// `e_m[expr]`, truncated at x-degree `trunc` when given.
pub fn e_eval(m: i64, expr: &AlphabetExpr, trunc: Option<u32>) -> Result<ParamPoly> {
    eval(Kind::E, m, expr, trunc)
}
