//! Partitions, skew and dented shapes, flags, index sets and the sweep generators.

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// Weakly decreasing sequence of nonnegative parts, padded with zeros to a fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty(n: usize) -> Partition {
        Partition(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of stored parts, zeros included.
    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// 1-based part, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        part(&self.0, i)
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn padded(&self, n: usize) -> Partition {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        Partition(v)
    }

    /// Conjugate partition, with `self.part(1)` parts.
    pub fn transpose(&self) -> Partition {
        let m = self.part(1);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    pub fn contains(&self, o: &Partition) -> bool {
        (1..=self.n().max(o.n())).all(|i| o.part(i) <= self.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join(&self.0))
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
}

fn part(v: &[u32], i: usize) -> u32 {
    if i >= 1 && i <= v.len() {
        v[i - 1]
    } else {
        0
    }
}

/// Cells `(i, j)` with `inner_i < j <= outer_i`. The outer row lengths need not be
/// weakly decreasing (dented shapes), and containment is not enforced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    pub outer: Vec<u32>,
    pub inner: Vec<u32>,
}

impl SkewShape {
    pub fn new(outer: Vec<u32>, inner: Vec<u32>) -> SkewShape {
        let n = outer.len().max(inner.len());
        let (mut outer, mut inner) = (outer, inner);
        outer.resize(n, 0);
        inner.resize(n, 0);
        SkewShape { outer, inner }
    }

    pub fn straight(outer: Vec<u32>) -> SkewShape {
        let n = outer.len();
        SkewShape::new(outer, vec![0; n])
    }

    pub fn from_partitions(lam: &Partition, mu: &Partition) -> SkewShape {
        SkewShape::new(lam.parts().to_vec(), mu.parts().to_vec())
    }

    pub fn n(&self) -> usize {
        self.outer.len()
    }

    pub fn outer(&self, i: usize) -> u32 {
        part(&self.outer, i)
    }

    pub fn inner(&self, i: usize) -> u32 {
        part(&self.inner, i)
    }

    pub fn contains_cell(&self, i: usize, j: u32) -> bool {
        i >= 1 && i <= self.n() && j > self.inner(i) && j <= self.outer(i)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, u32)> {
        let mut v = Vec::new();
        for i in 1..=self.n() {
            for j in self.inner(i) + 1..=self.outer(i) {
                v.push((i, j));
            }
        }
        v
    }

    /// Cells in the filling order: columns right to left, each column top to bottom.
    pub fn fill_order(&self) -> Vec<(usize, u32)> {
        let mut v = self.cells();
        v.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        v
    }

    pub fn size(&self) -> usize {
        self.cells().len()
    }

    pub fn inner_contained(&self) -> bool {
        (1..=self.n()).all(|i| self.inner(i) <= self.outer(i))
    }

    pub fn is_partition_pair(&self) -> bool {
        Partition::new(self.outer.clone()).is_ok() && Partition::new(self.inner.clone()).is_ok()
    }

    /// Conjugate shape `λ'/μ'`; both boundaries must be partitions.
    pub fn transpose(&self) -> Result<SkewShape> {
        let lam = Partition::new(self.outer.clone())?;
        let mu = Partition::new(self.inner.clone())?;
        let (lt, mt) = (lam.transpose(), mu.transpose());
        let n = lt.n().max(mt.n());
        Ok(SkewShape::new(lt.padded(n).parts().to_vec(), mt.padded(n).parts().to_vec()))
    }

    pub fn parse(s: &str) -> Result<SkewShape> {
        let (o, i) = match s.split_once('/') {
            Some((o, i)) => (o, i),
            None => (s, ""),
        };
        Ok(SkewShape::new(parse_list(o)?, parse_list(i)?))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let trim = |v: &[u32]| {
            let k = v.iter().rposition(|&p| p > 0).map_or(0, |k| k + 1);
            join(&v[..k])
        };
        write!(f, "{}", trim(&self.outer))?;
        if self.inner.iter().any(|&p| p > 0) {
            write!(f, "/{}", trim(&self.inner))?;
        }
        Ok(())
    }
}

pub fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad integer '{t}' in '{s}'"))))
        .collect()
}

/// Row index `k` of the minimal cell `(k, λ_k)` when `parts` is a dented partition.
pub fn minimal_cell(parts: &[u32]) -> Option<(usize, u32)> {
    let n = parts.len();
    if n == 0 {
        return None;
    }
    let first = parts[0];
    let k = match parts.iter().position(|&p| p != first) {
        Some(pos) if parts[pos] == first + 1 => pos + 1,
        _ => 1,
    };
    if parts[k - 1..].windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Some((k, parts[k - 1]))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DentedShape(Vec<u32>);

impl DentedShape {
    pub fn new(parts: Vec<u32>) -> Result<DentedShape> {
        if minimal_cell(&parts).is_none() {
            return Err(Error::BadShape(format!("{parts:?} is not a dented partition")));
        }
        Ok(DentedShape(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn minimal_cell(&self) -> (usize, u32) {
        minimal_cell(&self.0).unwrap()
    }

    pub fn is_partition(&self) -> bool {
        self.minimal_cell().0 == 1
    }

    /// Index of the last positive part.
    pub fn length(&self) -> usize {
        self.0.iter().rposition(|&p| p > 0).map_or(0, |k| k + 1)
    }
}

/// Lower and upper flags `r`, `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagPair {
    pub r: Vec<u32>,
    pub s: Vec<u32>,
}

impl FlagPair {
    pub fn new(r: Vec<u32>, s: Vec<u32>) -> Result<FlagPair> {
        if r.len() != s.len() {
            return Err(Error::Invalid(format!("flag lengths differ: {} vs {}", r.len(), s.len())));
        }
        Ok(FlagPair { r, s })
    }

    /// `r = 1^n`, `s = n^n`.
    pub fn full(n: usize) -> FlagPair {
        FlagPair { r: vec![1; n], s: vec![n as u32; n] }
    }

    pub fn n(&self) -> usize {
        self.r.len()
    }

    pub fn r(&self, i: usize) -> u32 {
        part(&self.r, i)
    }

    pub fn s(&self, i: usize) -> u32 {
        part(&self.s, i)
    }

    pub fn r_le_s(&self) -> bool {
        self.r.iter().zip(&self.s).all(|(a, b)| a <= b)
    }

    pub fn positive(&self) -> bool {
        self.r.iter().chain(&self.s).all(|&v| v >= 1)
    }

    pub fn parse(s: &str) -> Result<FlagPair> {
        let mut r = None;
        let mut t = None;
        for tok in s.split_whitespace() {
            match tok.split_once('=') {
                Some(("r", v)) => r = Some(parse_list(v)?),
                Some(("s", v)) => t = Some(parse_list(v)?),
                _ => return Err(Error::Parse(format!("bad flag token '{tok}'"))),
            }
        }
        match (r, t) {
            (Some(r), Some(t)) => FlagPair::new(r, t),
            _ => Err(Error::Parse("flags need r=... and s=...".into())),
        }
    }

    pub fn decrement_s(&self, k: usize) -> FlagPair {
        let mut f = self.clone();
        f.s[k - 1] -= 1;
        f
    }
}

impl fmt::Display for FlagPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={} s={}", join(&self.r), join(&self.s))
    }
}

/// Rows whose end carries the boundary value `s_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(pub BTreeSet<usize>);

impl IndexSet {
    pub fn from_slice(v: &[usize]) -> IndexSet {
        IndexSet(v.iter().copied().collect())
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn with(&self, i: usize) -> IndexSet {
        let mut s = self.clone();
        s.0.insert(i);
        s
    }

    pub fn without(&self, i: usize) -> IndexSet {
        let mut s = self.clone();
        s.0.remove(&i);
        s
    }

    /// Checks that the set is `{1..p}` or `{1..p} \ {k}` with `k <= p <= ℓ(λ)` and
    /// `λ_1 + 1 = ... = λ_{k-1} + 1 = λ_k = ... = λ_p`.
    pub fn validate(&self, lam: &DentedShape) -> Result<()> {
        if valid_index_sets(lam).contains(self) {
            Ok(())
        } else {
            Err(Error::BadIndexSet(format!("{self} for shape {:?}", lam.parts())))
        }
    }

    pub fn parse(s: &str) -> Result<IndexSet> {
        let s = s.trim();
        let s = s.strip_prefix("I=").unwrap_or(s);
        let v = parse_list(s)?;
        Ok(IndexSet(v.into_iter().map(|i| i as usize).collect()))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

pub fn valid_index_sets(lam: &DentedShape) -> Vec<IndexSet> {
    let parts = lam.parts();
    let (k, lk) = lam.minimal_cell();
    let mut out = Vec::new();
    for p in k..=lam.length() {
        if parts[k - 1..p].iter().any(|&v| v != lk) {
            break;
        }
        let full: BTreeSet<usize> = (1..=p).collect();
        let mut dent = full.clone();
        dent.remove(&k);
        out.push(IndexSet(full));
        out.push(IndexSet(dent));
    }
    out
}

fn pairs(n: usize) -> impl Iterator<Item = usize> {
    1..n
}

/// `r_i <= r_{i+1}` and `s_i <= s_{i+1}` whenever `μ_i < λ_{i+1}`.
pub fn row_hypothesis(sh: &SkewShape, f: &FlagPair) -> bool {
    pairs(sh.n()).all(|i| {
        sh.inner(i) >= sh.outer(i + 1) || (f.r(i) <= f.r(i + 1) && f.s(i) <= f.s(i + 1))
    })
}

/// `r_i - μ_i <= r_{i+1} - μ_{i+1}` and `s_i - λ_i <= s_{i+1} - λ_{i+1} + 1` whenever `μ_i < λ_{i+1}`.
pub fn col_hypothesis(sh: &SkewShape, f: &FlagPair) -> bool {
    pairs(sh.n()).all(|i| {
        let (r0, r1, s0, s1) = (f.r(i) as i64, f.r(i + 1) as i64, f.s(i) as i64, f.s(i + 1) as i64);
        let (m0, m1, l0, l1) = (sh.inner(i) as i64, sh.inner(i + 1) as i64, sh.outer(i) as i64, sh.outer(i + 1) as i64);
        m0 >= l1 || (r0 - m0 <= r1 - m1 && s0 - l0 <= s1 - l1 + 1)
    })
}

/// The column condition with `r_i - μ_i <= r_{i+1} - μ_{i+1} + 1` in place of the `r` inequality.
pub fn col_hypothesis_weak(sh: &SkewShape, f: &FlagPair) -> bool {
    pairs(sh.n()).all(|i| {
        let (r0, r1, s0, s1) = (f.r(i) as i64, f.r(i + 1) as i64, f.s(i) as i64, f.s(i + 1) as i64);
        let (m0, m1, l0, l1) = (sh.inner(i) as i64, sh.inner(i + 1) as i64, sh.outer(i) as i64, sh.outer(i + 1) as i64);
        m0 >= l1 || (r0 - m0 <= r1 - m1 + 1 && s0 - l0 <= s1 - l1 + 1)
    })
}

/// All partitions with at most `rows` parts, each at most `cols`, padded to `rows`.
pub fn partitions_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    fn rec(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if cur.len() == rows {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (0..=max).rev() {
            cur.push(p);
            rec(rows, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// All partitions `μ ⊆ λ` padded to the length of `λ`.
pub fn subpartitions(lam: &[u32]) -> Vec<Partition> {
    fn rec(lam: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        let i = cur.len();
        if i == lam.len() {
            out.push(Partition(cur.clone()));
            return;
        }
        let cap = if i == 0 { lam[0] } else { lam[i].min(cur[i - 1]) };
        for p in 0..=cap {
            cur.push(p);
            rec(lam, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lam.is_empty() {
        return vec![Partition(Vec::new())];
    }
    rec(lam, &mut Vec::new(), &mut out);
    out
}

/// All vectors in `[lo, hi]^n` in lexicographic order.
pub fn vectors(n: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// All flag pairs with `r ∈ [rlo, hi]^n` and `s ∈ [slo, hi]^n`.
pub fn flag_pairs(n: usize, rlo: u32, slo: u32, hi: u32) -> Vec<FlagPair> {
    let rs = vectors(n, rlo, hi);
    let ss = vectors(n, slo, hi);
    let mut out = Vec::with_capacity(rs.len() * ss.len());
    for r in &rs {
        for s in &ss {
            out.push(FlagPair { r: r.clone(), s: s.clone() });
        }
    }
    out
}

/// All dented partitions with `rows` parts, each at most `cols`.
pub fn dented_in_box(rows: usize, cols: u32) -> Vec<DentedShape> {
    vectors(rows, 0, cols)
        .into_iter()
        .filter(|v| minimal_cell(v).is_some())
        .map(DentedShape)
        .collect()
}
