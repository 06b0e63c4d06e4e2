//! Tableau families and their weight generating functions.
//!
//! Cells are filled column by column from right to left, each column top to bottom,
//! so every stream has a fixed deterministic order.

use crate::int::Int;
use crate::poly::{Accumulator, Monomial, ParamPoly, Var};
use crate::shape::{FlagPair, IndexSet, SkewShape};
use serde_json::{json, Value};
use std::collections::{BTreeSet, HashMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FlagMode {
    Row,
    Col,
}

fn flag_bounds(flags: &FlagPair, mode: FlagMode, i: usize, j: u32) -> (u32, u32) {
    let t = match mode {
        FlagMode::Row => i,
        FlagMode::Col => j as usize,
    };
    (flags.r(t).max(1), flags.s(t))
}

/// Depth-first odometer over per-position candidate lists.
struct Odometer<C> {
    stack: Vec<(Vec<C>, usize)>,
    started: bool,
    done: bool,
}

impl<C> Odometer<C> {
    /// An odometer with nothing to yield, for skew shapes with `μ ⊄ λ`.
    fn for_shape(shape: &SkewShape) -> Self {
        Odometer { stack: Vec::new(), started: false, done: !shape.inner_contained() }
    }

    fn bump(&mut self) -> bool {
        while let Some((v, i)) = self.stack.last_mut() {
            *i += 1;
            if *i < v.len() {
                return true;
            }
            self.stack.pop();
        }
        false
    }

    fn advance(&mut self, depth: usize, mut gen: impl FnMut(usize, &[&C]) -> Vec<C>) -> bool {
        if self.done {
            return false;
        }
        if self.started {
            if !self.bump() {
                self.done = true;
                return false;
            }
        } else {
            self.started = true;
        }
        while self.stack.len() < depth {
            let chosen: Vec<&C> = self.stack.iter().map(|(v, i)| &v[*i]).collect();
            let c = gen(self.stack.len(), &chosen);
            if c.is_empty() {
                if !self.bump() {
                    self.done = true;
                    return false;
                }
            } else {
                self.stack.push((c, 0));
            }
        }
        true
    }

    fn current(&self) -> Vec<&C> {
        self.stack.iter().map(|(v, i)| &v[*i]).collect()
    }
}

/// Copies of one value in a cell of a marked multiset-valued tableau.
/// When `marked`, the first copy carries the mark.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Group {
    pub value: u32,
    pub mult: u32,
    pub marked: bool,
}

#[derive(Clone, Debug)]
struct CellCand {
    groups: Vec<Group>,
    min: u32,
    max: u32,
    count: u32,
    mono: Monomial,
    neg: bool,
}

fn cell_weight(groups: &[Group], i: usize, j: u32) -> (Monomial, bool) {
    let total: u32 = groups.iter().map(|g| g.mult).sum();
    let marked = groups.iter().filter(|g| g.marked).count() as u32;
    let mut m = Monomial::var(Var::a(j), total - marked - 1);
    if marked > 0 {
        m = m.mul(&Monomial::var(Var::b(i as u32), marked));
    }
    for g in groups {
        m = m.mul(&Monomial::var(Var::x(g.value), g.mult));
    }
    (m, marked % 2 == 1)
}

/// All cell contents with values in `[lo, hi]` and at most `budget` copies.
fn cell_contents(lo: u32, hi: u32, budget: u32, i: usize, j: u32) -> Vec<CellCand> {
    fn rec(v: u32, hi: u32, left: u32, cur: &mut Vec<Group>, out: &mut Vec<Vec<Group>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for val in v..=hi {
            for mult in 1..=left {
                let marks: &[bool] = if cur.is_empty() { &[false] } else { &[false, true] };
                for &marked in marks {
                    cur.push(Group { value: val, mult, marked });
                    rec(val + 1, hi, left - mult, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut raw = Vec::new();
    if lo <= hi && budget > 0 {
        rec(lo, hi, budget, &mut Vec::new(), &mut raw);
    }
    raw.into_iter()
        .map(|groups| {
            let (mono, neg) = cell_weight(&groups, i, j);
            CellCand {
                min: groups[0].value,
                max: groups.last().unwrap().value,
                count: groups.iter().map(|g| g.mult).sum(),
                groups,
                mono,
                neg,
            }
        })
        .collect()
}

/// A marked multiset-valued tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mmsvt {
    pub shape: SkewShape,
    /// Cell contents in row-major order.
    pub cells: Vec<((usize, u32), Vec<Group>)>,
}

impl Mmsvt {
    /// `x^T · Π α_j^{unmarked-1} (-β_i)^{marked}`.
    pub fn weight(&self) -> (Monomial, Int) {
        let mut m = Monomial::one();
        let mut sign = 1i64;
        for ((i, j), g) in &self.cells {
            let (w, neg) = cell_weight(g, *i, *j);
            m = m.mul(&w);
            if neg {
                sign = -sign;
            }
        }
        (m, Int::from(sign))
    }

    pub fn entries(&self) -> u32 {
        self.cells.iter().flat_map(|(_, g)| g.iter().map(|g| g.mult)).sum()
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<Value> = self
            .cells
            .iter()
            .map(|((i, j), gs)| {
                let groups: Vec<Value> =
                    gs.iter().map(|g| json!({"v": g.value, "mult": g.mult, "marked": g.marked})).collect();
                json!([i, j, groups])
            })
            .collect();
        Value::Array(cells)
    }
}

/// Stream of marked multiset-valued tableaux with at most `max_entries` integers in total.
pub struct MmsvtIter {
    shape: SkewShape,
    order: Vec<(usize, u32)>,
    pos: HashMap<(usize, u32), usize>,
    flags: FlagPair,
    mode: FlagMode,
    max_entries: u32,
    odo: Odometer<CellCand>,
}

pub fn enum_mmsvt(shape: &SkewShape, flags: &FlagPair, mode: FlagMode, max_entries: u32) -> MmsvtIter {
    let order = shape.fill_order();
    let pos = order.iter().enumerate().map(|(k, c)| (*c, k)).collect();
    MmsvtIter { shape: shape.clone(), order, pos, flags: flags.clone(), mode, max_entries, odo: Odometer::for_shape(shape) }
}

impl MmsvtIter {
    fn step(&mut self) -> bool {
        let (order, pos, flags, mode, cap) = (&self.order, &self.pos, &self.flags, self.mode, self.max_entries);
        let depth = order.len();
        self.odo.advance(depth, |p, chosen| {
            let (i, j) = order[p];
            let (mut lo, mut hi) = flag_bounds(flags, mode, i, j);
            if let Some(&q) = pos.get(&(i, j + 1)) {
                hi = hi.min(chosen[q].min);
            }
            if i > 1 {
                if let Some(&q) = pos.get(&(i - 1, j)) {
                    lo = lo.max(chosen[q].max + 1);
                }
            }
            let used: u32 = chosen.iter().map(|c| c.count).sum();
            let reserve = (depth - p - 1) as u32;
            if used + reserve >= cap {
                return Vec::new();
            }
            cell_contents(lo, hi, cap - used - reserve, i, j)
        })
    }

    fn current_weight(&self) -> (Monomial, bool) {
        let mut m = Monomial::one();
        let mut neg = false;
        for c in self.odo.current() {
            m = m.mul(&c.mono);
            neg ^= c.neg;
        }
        (m, neg)
    }

    /// Sum of weights of the remaining stream, truncated at `max_entries`.
    pub fn weight_sum(mut self) -> ParamPoly {
        let mut acc = Accumulator::new();
        let (one, minus) = (Int::ONE, Int::from(-1));
        while self.step() {
            let (m, neg) = self.current_weight();
            acc.add(m, if neg { &minus } else { &one });
        }
        acc.finish(Some(self.max_entries))
    }
}

impl Iterator for MmsvtIter {
    type Item = Mmsvt;
    fn next(&mut self) -> Option<Mmsvt> {
        if !self.step() {
            return None;
        }
        let mut cells: Vec<((usize, u32), Vec<Group>)> =
            self.order.iter().zip(self.odo.current()).map(|(c, cand)| (*c, cand.groups.clone())).collect();
        cells.sort_by_key(|(c, _)| *c);
        Some(Mmsvt { shape: self.shape.clone(), cells })
    }
}

/// Σ wt(T) over marked multiset-valued tableaux, truncated at `max_entries` integers.
pub fn mmsvt_sum(shape: &SkewShape, flags: &FlagPair, mode: FlagMode, max_entries: u32) -> ParamPoly {
    enum_mmsvt(shape, flags, mode, max_entries).weight_sum()
}

/// Which neighbour an entry must equal to be markable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Markable when equal to its right neighbour; weight `-α_j`.
    Left,
    /// Markable when equal to its left neighbour; weight `-α_{j-1}`.
    Right,
    /// Markable when equal to the entry above; weight `-α_{i-1}`.
    Bottom,
}

/// Row-end values `T(i, λ_i + 1)`: `s_i` for `i ∈ I`, otherwise `∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Boundary {
    pub index: IndexSet,
    pub s: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Nb {
    Val(u32),
    Inf,
    Missing,
}

/// A reverse plane partition with marks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedRpp {
    pub shape: SkewShape,
    pub variant: Variant,
    pub boundary: Option<Boundary>,
    /// Entries in row-major order.
    pub values: Vec<((usize, u32), u32)>,
    pub marked: BTreeSet<(usize, u32)>,
}

fn neighbour(
    shape: &SkewShape,
    boundary: Option<&Boundary>,
    get: impl Fn(usize, u32) -> Option<u32>,
    i: usize,
    j: u32,
) -> Nb {
    if shape.contains_cell(i, j) {
        return get(i, j).map_or(Nb::Missing, Nb::Val);
    }
    if let Some(b) = boundary {
        if i >= 1 && i <= shape.n() && j == shape.outer(i) + 1 {
            return if b.index.contains(i) { Nb::Val(b.s[i - 1]) } else { Nb::Inf };
        }
    }
    Nb::Missing
}

fn markable(shape: &SkewShape, variant: Variant, boundary: Option<&Boundary>, get: &dyn Fn(usize, u32) -> Option<u32>, i: usize, j: u32) -> bool {
    let v = get(i, j).unwrap();
    let nb = match variant {
        Variant::Left => neighbour(shape, boundary, get, i, j + 1),
        Variant::Right => {
            if j > 1 {
                neighbour(shape, boundary, get, i, j - 1)
            } else {
                Nb::Missing
            }
        }
        Variant::Bottom => {
            if i > 1 {
                neighbour(shape, boundary, get, i - 1, j)
            } else {
                Nb::Missing
            }
        }
    };
    nb == Nb::Val(v)
}

impl MarkedRpp {
    pub fn value(&self, i: usize, j: u32) -> Option<u32> {
        self.values.binary_search_by_key(&(i, j), |(c, _)| *c).ok().map(|k| self.values[k].1)
    }

    pub fn is_markable(&self, i: usize, j: u32) -> bool {
        markable(&self.shape, self.variant, self.boundary.as_ref(), &|a, b| self.value(a, b), i, j)
    }

    fn cell_weight(&self, i: usize, j: u32) -> (Var, bool) {
        self.cell_weight_as(i, j, self.marked.contains(&(i, j)))
    }

    fn cell_weight_as(&self, i: usize, j: u32, marked: bool) -> (Var, bool) {
        let v = self.value(i, j).unwrap();
        let b = self.boundary.as_ref();
        let get = |a, c| self.value(a, c);
        match self.variant {
            Variant::Left => {
                if marked {
                    (Var::a(j), true)
                } else if i > 1 && neighbour(&self.shape, b, get, i - 1, j) == Nb::Val(v) {
                    (Var::b(i as u32 - 1), false)
                } else {
                    (Var::x(v), false)
                }
            }
            Variant::Right => {
                if marked {
                    (Var::a(j - 1), true)
                } else if neighbour(&self.shape, b, get, i + 1, j) == Nb::Val(v) {
                    (Var::b(i as u32), false)
                } else {
                    (Var::x(v), false)
                }
            }
            Variant::Bottom => {
                if marked {
                    (Var::a(i as u32 - 1), true)
                } else if neighbour(&self.shape, b, get, i, j + 1) == Nb::Val(v) {
                    (Var::b(j), false)
                } else {
                    (Var::x(v), false)
                }
            }
        }
    }

    pub fn weight(&self) -> (Monomial, Int) {
        let mut m = Monomial::one();
        let mut sign = 1i64;
        for ((i, j), _) in &self.values {
            let (v, neg) = self.cell_weight(*i, *j);
            m = m.mul(&Monomial::var(v, 1));
            if neg {
                sign = -sign;
            }
        }
        (m, Int::from(sign))
    }

    /// The same entries and marks on the conjugate shape.
    pub fn transpose(&self, variant: Variant) -> MarkedRpp {
        let shape = self.shape.transpose().expect("partition shape");
        let mut values: Vec<((usize, u32), u32)> =
            self.values.iter().map(|((i, j), v)| ((*j as usize, *i as u32), *v)).collect();
        values.sort();
        let marked = self.marked.iter().map(|(i, j)| (*j as usize, *i as u32)).collect();
        MarkedRpp { shape, variant, boundary: None, values, marked }
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<Value> = self
            .values
            .iter()
            .map(|((i, j), v)| json!([i, j, v, self.marked.contains(&(*i, *j))]))
            .collect();
        Value::Array(cells)
    }
}

/// Stream of marked reverse plane partitions.
pub struct MrppIter {
    shape: SkewShape,
    order: Vec<(usize, u32)>,
    pos: HashMap<(usize, u32), usize>,
    bounds: Vec<(u32, u32)>,
    variant: Variant,
    boundary: Option<Boundary>,
    empty: bool,
    odo: Odometer<u32>,
    current: Option<(MarkedRpp, Vec<(usize, u32)>, u64)>,
}

/// Marked RPPs of `shape` with flag bounds. `boundary` supplies the row-end values of the
/// indexed variant; an indexed family is empty unless `r <= s`.
pub fn enum_mrpp(
    shape: &SkewShape,
    flags: &FlagPair,
    mode: FlagMode,
    variant: Variant,
    boundary: Option<Boundary>,
) -> MrppIter {
    let order = shape.fill_order();
    let pos = order.iter().enumerate().map(|(k, c)| (*c, k)).collect();
    let bounds = order.iter().map(|&(i, j)| flag_bounds(flags, mode, i, j)).collect();
    let empty = boundary.is_some() && !flags.r_le_s();
    MrppIter {
        shape: shape.clone(),
        order,
        pos,
        bounds,
        variant,
        boundary,
        empty,
        odo: Odometer::for_shape(shape),
        current: None,
    }
}

impl MrppIter {
    fn next_rpp(&mut self) -> bool {
        if self.empty {
            return false;
        }
        let (order, pos, bounds, shape, boundary) = (&self.order, &self.pos, &self.bounds, &self.shape, self.boundary.as_ref());
        self.odo.advance(order.len(), |p, chosen| {
            let (i, j) = order[p];
            let (mut lo, mut hi) = bounds[p];
            let get = |a: usize, b: u32| pos.get(&(a, b)).filter(|&&q| q < chosen.len()).map(|&q| *chosen[q]);
            if let Nb::Val(v) = neighbour(shape, boundary, get, i, j + 1) {
                hi = hi.min(v);
            }
            if i > 1 {
                match neighbour(shape, boundary, get, i - 1, j) {
                    Nb::Val(v) => lo = lo.max(v),
                    Nb::Inf => return Vec::new(),
                    Nb::Missing => {}
                }
            }
            if !shape.contains_cell(i + 1, j) {
                if let Nb::Val(v) = neighbour(shape, boundary, get, i + 1, j) {
                    hi = hi.min(v);
                }
            }
            (lo..=hi).collect()
        })
    }
}

impl MrppIter {
    /// The next plane partition, unmarked, with its markable cells.
    fn advance_rpp(&mut self) -> Option<(MarkedRpp, Vec<(usize, u32)>)> {
        if !self.next_rpp() {
            return None;
        }
        let mut values: Vec<((usize, u32), u32)> = self.order.iter().zip(self.odo.current()).map(|(c, v)| (*c, *v)).collect();
        values.sort();
        let t = MarkedRpp { shape: self.shape.clone(), variant: self.variant, boundary: self.boundary.clone(), values, marked: BTreeSet::new() };
        let cells: Vec<(usize, u32)> = t.values.iter().map(|(c, _)| *c).filter(|&(i, j)| t.is_markable(i, j)).collect();
        Some((t, cells))
    }
}

impl Iterator for MrppIter {
    type Item = MarkedRpp;
    fn next(&mut self) -> Option<MarkedRpp> {
        loop {
            if let Some((t, cells, mask)) = &mut self.current {
                if *mask < (1u64 << cells.len()) {
                    let mut out = t.clone();
                    out.marked = cells.iter().enumerate().filter(|(k, _)| *mask >> k & 1 == 1).map(|(_, c)| *c).collect();
                    *mask += 1;
                    return Some(out);
                }
                self.current = None;
            }
            let (t, cells) = self.advance_rpp()?;
            self.current = Some((t, cells, 0));
        }
    }
}

impl MrppIter {
    /// Sum of weights, expanding the marks of each plane partition without listing the tableaux.
    pub fn weight_sum(mut self) -> ParamPoly {
        let mut acc = Accumulator::new();
        while let Some((t, cells)) = self.advance_rpp() {
            let mut base = Monomial::one();
            let mut choices = Vec::new();
            for ((i, j), _) in &t.values {
                let (u, _) = t.cell_weight_as(*i, *j, false);
                if cells.contains(&(*i, *j)) {
                    let (m, _) = t.cell_weight_as(*i, *j, true);
                    choices.push((Monomial::var(u, 1), Monomial::var(m, 1)));
                } else {
                    base = base.mul(&Monomial::var(u, 1));
                }
            }
            expand_marks(&base, 1, &choices, &mut acc);
        }
        acc.finish(None)
    }
}

fn expand_marks(m: &Monomial, sign: i64, choices: &[(Monomial, Monomial)], acc: &mut Accumulator) {
    match choices.split_first() {
        None => acc.add(m.clone(), &Int::from(sign)),
        Some(((u, k), rest)) => {
            expand_marks(&m.mul(u), sign, rest, acc);
            expand_marks(&m.mul(k), -sign, rest, acc);
        }
    }
}

pub fn mrpp_sum(shape: &SkewShape, flags: &FlagPair, mode: FlagMode, variant: Variant, boundary: Option<Boundary>) -> ParamPoly {
    enum_mrpp(shape, flags, mode, variant, boundary).weight_sum()
}

/// Left-marked RPPs of a dented shape with the row-end values of `I` (row flags).
pub fn enum_mrpp_indexed(shape: &SkewShape, flags: &FlagPair, index: &IndexSet, variant: Variant) -> MrppIter {
    let boundary = Boundary { index: index.clone(), s: flags.s.clone() };
    enum_mrpp(shape, flags, FlagMode::Row, variant, Some(boundary))
}

pub fn mrpp_indexed_sum(shape: &SkewShape, flags: &FlagPair, index: &IndexSet, variant: Variant) -> ParamPoly {
    enum_mrpp_indexed(shape, flags, index, variant).weight_sum()
}

/// Moves every mark of a left-marked RPP to a right-marked one of the same entries.
///
/// Within each value class, the marks of column `j-1` are moved up one cell, the top
/// cell wrapping to the bottom of the rows shared with column `j`, then moved right.
pub fn phi_left_to_right(t: &MarkedRpp) -> MarkedRpp {
    assert_eq!(t.variant, Variant::Left);
    let mut marked = BTreeSet::new();
    let values: HashMap<(usize, u32), u32> = t.values.iter().copied().collect();
    let rows = |col: u32, k: u32| -> Vec<usize> {
        let mut r: Vec<usize> = t.values.iter().filter(|((_, j), v)| *j == col && *v == k).map(|((i, _), _)| *i).collect();
        r.sort();
        r
    };
    let classes: BTreeSet<u32> = values.values().copied().collect();
    let maxcol = t.shape.outer.iter().copied().max().unwrap_or(0);
    for k in classes {
        for j in 2..=maxcol {
            let (left, right) = (rows(j - 1, k), rows(j, k));
            let shared: Vec<usize> = left.iter().copied().filter(|i| right.contains(i)).collect();
            if shared.is_empty() {
                continue;
            }
            let m = shared.len();
            for (idx, &target) in shared.iter().enumerate() {
                let source = shared[(idx + 1) % m];
                if t.marked.contains(&(source, j - 1)) {
                    marked.insert((target, j));
                }
            }
        }
    }
    MarkedRpp { shape: t.shape.clone(), variant: Variant::Right, boundary: None, values: t.values.clone(), marked }
}

/// A set-valued tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fsvt {
    pub shape: SkewShape,
    pub cells: Vec<((usize, u32), Vec<u32>)>,
}

impl Fsvt {
    /// `β^{|T| - |λ/μ|} x^T`, with `β` printed as `b1`.
    pub fn weight(&self) -> Monomial {
        let mut m = Monomial::one();
        for (_, set) in &self.cells {
            m = m.mul(&Monomial::var(Var::b(1), set.len() as u32 - 1));
            for &v in set {
                m = m.mul(&Monomial::var(Var::x(v), 1));
            }
        }
        m
    }
}

/// Set-valued tableaux whose row `i` entries lie in `[g_i, f_i]`, at most `max_entries` integers.
pub fn enum_fsvt(shape: &SkewShape, f: &[u32], g: &[u32], max_entries: u32) -> impl Iterator<Item = Fsvt> {
    let order = shape.fill_order();
    let pos: HashMap<(usize, u32), usize> = order.iter().enumerate().map(|(k, c)| (*c, k)).collect();
    let mut odo: Odometer<Vec<u32>> = Odometer::for_shape(shape);
    let shape = shape.clone();
    let (f, g) = (f.to_vec(), g.to_vec());
    std::iter::from_fn(move || {
        let depth = order.len();
        let ok = odo.advance(depth, |p, chosen| {
            let (i, j) = order[p];
            let get = |v: &[u32], i: usize| if i >= 1 && i <= v.len() { v[i - 1] } else { 0 };
            let mut lo = get(&g, i).max(1);
            let mut hi = get(&f, i);
            if let Some(&q) = pos.get(&(i, j + 1)) {
                hi = hi.min(chosen[q][0]);
            }
            if i > 1 {
                if let Some(&q) = pos.get(&(i - 1, j)) {
                    lo = lo.max(*chosen[q].last().unwrap() + 1);
                }
            }
            let used: u32 = chosen.iter().map(|c| c.len() as u32).sum();
            let reserve = (depth - p - 1) as u32;
            if lo > hi || used + reserve >= max_entries {
                return Vec::new();
            }
            let budget = (max_entries - used - reserve) as usize;
            let vals: Vec<u32> = (lo..=hi).collect();
            let mut out = Vec::new();
            for mask in 1u64..(1 << vals.len()) {
                let set: Vec<u32> = vals.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, v)| *v).collect();
                if set.len() <= budget {
                    out.push(set);
                }
            }
            out
        });
        if !ok {
            return None;
        }
        let mut cells: Vec<((usize, u32), Vec<u32>)> =
            order.iter().zip(odo.current()).map(|(c, s)| (*c, s.clone())).collect();
        cells.sort_by_key(|(c, _)| *c);
        Some(Fsvt { shape: shape.clone(), cells })
    })
}

pub fn fsvt_sum(shape: &SkewShape, f: &[u32], g: &[u32], max_entries: u32) -> ParamPoly {
    let mut acc = Accumulator::new();
    for t in enum_fsvt(shape, f, g, max_entries) {
        acc.add(t.weight(), &Int::ONE);
    }
    acc.finish(Some(max_entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::FlagPair;

    fn rpp(shape: &SkewShape, variant: Variant, rows: &[&[(u32, bool)]]) -> MarkedRpp {
        let mut values = Vec::new();
        let mut marked = BTreeSet::new();
        for (r, row) in rows.iter().enumerate() {
            let i = r + 1;
            for (k, &(v, m)) in row.iter().enumerate() {
                let j = shape.inner(i) + 1 + k as u32;
                values.push(((i, j), v));
                if m {
                    marked.insert((i, j));
                }
            }
        }
        MarkedRpp { shape: shape.clone(), variant, boundary: None, values, marked }
    }

    #[test]
    fn single_cell_two_entries() {
        let sh = SkewShape::straight(vec![1]);
        let fl = FlagPair::new(vec![1], vec![2]).unwrap();
        let all: Vec<Mmsvt> = enum_mmsvt(&sh, &fl, FlagMode::Row, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(
            mmsvt_sum(&sh, &fl, FlagMode::Row, 2).to_string(),
            "-b1*x1*x2 + a1*x1*x2 + a1*x1^2 + a1*x2^2 + x1 + x2"
        );
    }

    #[test]
    fn mmsvt_figure_weight() {
        let sh = SkewShape::new(vec![3, 2], vec![1]);
        let g = |v, m, k| Group { value: v, mult: m, marked: k };
        let t = Mmsvt {
            shape: sh,
            cells: vec![
                ((1, 2), vec![g(1, 1, false), g(2, 2, true)]),
                ((1, 3), vec![g(2, 2, false), g(4, 1, true)]),
                ((2, 1), vec![g(1, 1, false)]),
                ((2, 2), vec![g(3, 2, false)]),
            ],
        };
        let (m, c) = t.weight();
        assert_eq!(c, Int::ONE);
        let want = Monomial::from_exps(&[
            (Var::x(1), 2),
            (Var::x(2), 4),
            (Var::x(3), 2),
            (Var::x(4), 1),
            (Var::a(2), 2),
            (Var::a(3), 1),
            (Var::b(1), 2),
        ]);
        assert_eq!(m, want);
    }

    #[test]
    fn left_and_right_marked_figures() {
        let sh = SkewShape::new(vec![6, 5, 3, 3], vec![2, 1, 1]);
        let f = |v| (v, false);
        let m = |v| (v, true);
        let left = rpp(&sh, Variant::Left, &[&[f(1), f(2), m(4), f(4)], &[m(1), f(1), f(3), f(5)], &[f(1), f(1)], &[m(3), m(3), f(3)]]);
        let (w, c) = left.weight();
        assert_eq!(c, Int::ONE);
        assert_eq!(
            w,
            Monomial::from_exps(&[
                (Var::x(1), 1),
                (Var::x(2), 1),
                (Var::x(3), 2),
                (Var::x(4), 1),
                (Var::x(5), 1),
                (Var::a(1), 1),
                (Var::a(2), 2),
                (Var::a(5), 1),
                (Var::b(1), 1),
                (Var::b(2), 2),
            ])
        );
        let right = rpp(&sh, Variant::Right, &[&[f(1), f(2), f(4), m(4)], &[f(1), m(1), f(3), f(5)], &[f(1), f(1)], &[f(3), m(3), m(3)]]);
        let (w, _) = right.weight();
        assert_eq!(
            w,
            Monomial::from_exps(&[
                (Var::x(1), 2),
                (Var::x(2), 1),
                (Var::x(3), 2),
                (Var::x(4), 1),
                (Var::x(5), 1),
                (Var::a(1), 1),
                (Var::a(2), 2),
                (Var::a(5), 1),
                (Var::b(1), 1),
                (Var::b(2), 1),
            ])
        );
    }

    #[test]
    fn indexed_figure() {
        let sh = SkewShape::new(vec![3, 4, 4, 1], vec![1, 1]);
        let flags = FlagPair::new(vec![1, 1, 2, 2], vec![3, 3, 4, 5]).unwrap();
        let f = |v| (v, false);
        let m = |v| (v, true);
        let mut t = rpp(&sh, Variant::Left, &[&[f(1), f(2)], &[f(1), m(3), f(3)], &[f(2), f(2), f(3), m(4)], &[f(4)]]);
        t.boundary = Some(Boundary { index: IndexSet::from_slice(&[1, 3]), s: flags.s.clone() });
        assert!(!t.is_markable(2, 4));
        assert!(t.is_markable(3, 4));
        let (w, c) = t.weight();
        assert_eq!(c, Int::ONE);
        assert_eq!(
            w,
            Monomial::from_exps(&[(Var::x(1), 1), (Var::x(2), 3), (Var::x(4), 1), (Var::a(3), 1), (Var::a(4), 1), (Var::b(1), 2), (Var::b(2), 1)])
        );
        let all: Vec<MarkedRpp> = enum_mrpp_indexed(&sh, &flags, &IndexSet::from_slice(&[1, 3]), Variant::Left).collect();
        assert!(all.contains(&t));
    }

    #[test]
    fn column_flagged_pair() {
        let sh = SkewShape::straight(vec![2]);
        let fl = FlagPair::new(vec![1, 1], vec![2, 1]).unwrap();
        let s = mrpp_sum(&sh, &fl, FlagMode::Col, Variant::Left, None);
        assert_eq!(s.to_string(), "x1^2 - a1*x1");
    }

    #[test]
    fn phi_example() {
        let sh = SkewShape::new(vec![5, 5, 4, 4, 4, 3], vec![3, 2, 2, 1, 1]);
        let f = |_| (1, false);
        let m = |_| (1, true);
        let left = rpp(
            &sh,
            Variant::Left,
            &[&[m(0), f(0)], &[m(0), m(0), f(0)], &[f(0), f(0)], &[m(0), m(0), f(0)], &[f(0), m(0), f(0)], &[m(0), f(0), f(0)]],
        );
        let right = rpp(
            &sh,
            Variant::Right,
            &[&[f(0), m(0)], &[f(0), f(0), m(0)], &[f(0), m(0)], &[f(0), f(0), m(0)], &[f(0), f(0), m(0)], &[f(0), m(0), m(0)]],
        );
        assert_eq!(phi_left_to_right(&left), right);
        assert_eq!(left.weight(), right.weight());
    }

    #[test]
    fn empty_shapes() {
        let sh = SkewShape::new(vec![1], vec![1]);
        let fl = FlagPair::new(vec![2], vec![1]).unwrap();
        assert_eq!(enum_mmsvt(&sh, &fl, FlagMode::Row, 3).count(), 1);
        assert_eq!(enum_mrpp(&sh, &fl, FlagMode::Row, Variant::Left, None).count(), 1);
        assert_eq!(enum_mrpp_indexed(&sh, &fl, &IndexSet::default(), Variant::Left).count(), 0);
        let bad = SkewShape::new(vec![1], vec![2]);
        let one = FlagPair::new(vec![1], vec![1]).unwrap();
        assert!(mmsvt_sum(&bad, &one, FlagMode::Row, 4).is_zero());
        assert!(mrpp_sum(&bad, &one, FlagMode::Row, Variant::Left, None).is_zero());
        assert!(fsvt_sum(&bad, &[1], &[1], 4).is_zero());
    }

    #[test]
    fn fsvt_single_cell() {
        let sh = SkewShape::straight(vec![1]);
        let s = fsvt_sum(&sh, &[2], &[1], 3);
        assert_eq!(s.to_string(), "b1*x1*x2 + x1 + x2");
    }
}
