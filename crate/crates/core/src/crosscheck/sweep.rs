//! Exhaustive and sampled sweeps comparing determinant, tableau and oracle routes.

use super::matsumura::{
    beta_binom, binomial_entry, h_beta_bar, matsumura_det, matsumura_gpq, matsumura_gpq_laurent, matsumura_hypothesis, ominus_entry,
    MatsumuraForm,
};
use super::oracle::{oracle_buch_svt_flagged, oracle_lp_rpp_flagged, oracle_row_beta_rpp, oracle_row_beta_svt};
use super::{single_symbol_nonnegative, Preset};
use crate::jt::{bialternant, jt_big, jt_small, FlagKind, GFamily, JtSpec};
use crate::poly::ParamPoly;
use crate::shape::{
    col_hypothesis, col_hypothesis_weak, dented_in_box, flag_pairs, partitions_in_box, row_hypothesis, subpartitions, FlagPair,
    SkewShape, valid_index_sets,
};
use crate::tableau::{
    enum_mrpp, fsvt_sum, mmsvt_sum, mrpp_indexed_sum, mrpp_sum, phi_left_to_right, FlagMode, MarkedRpp, Variant,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::fmt::Write;

const MAX_EXAMPLES: usize = 8;

/// Outcome counts for one identity.
#[derive(Clone, Debug)]
pub struct Tally {
    pub name: String,
    pub cases: usize,
    pub failed: usize,
    pub examples: Vec<String>,
    /// Recorded for information; failures here do not fail the sweep.
    pub diagnostic: bool,
}

impl Tally {
    pub fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(msg());
            }
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub tallies: Vec<Tally>,
}

impl SweepReport {
    pub fn tally(&mut self, name: &str, diagnostic: bool) -> &mut Tally {
        if let Some(k) = self.tallies.iter().position(|t| t.name == name) {
            return &mut self.tallies[k];
        }
        self.tallies.push(Tally { name: name.to_string(), cases: 0, failed: 0, examples: Vec::new(), diagnostic });
        self.tallies.last_mut().unwrap()
    }

    pub fn get(&self, name: &str) -> Option<&Tally> {
        self.tallies.iter().find(|t| t.name == name)
    }

    /// No failures outside diagnostic tallies, and every listed tally saw at least one case.
    pub fn passed(&self, names: &[&str]) -> bool {
        names.iter().all(|n| self.get(n).is_some_and(|t| t.cases > 0 && t.failed == 0))
            && self.tallies.iter().all(|t| t.diagnostic || t.failed == 0)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for t in &self.tallies {
            let tag = if t.diagnostic { " (diagnostic)" } else { "" };
            let _ = writeln!(s, "{}: {} cases, {} failures{tag}", t.name, t.cases, t.failed);
            for e in &t.examples {
                let _ = writeln!(s, "  {e}");
            }
        }
        s
    }
}

fn differ(what: &str, sh: &SkewShape, f: &FlagPair, a: &ParamPoly, b: &ParamPoly) -> String {
    format!("{what} {sh} {f}: {a} != {b}")
}

/// Ranges for the flagged theorem sweep.
#[derive(Clone, Debug)]
pub struct TheoremSweep {
    pub rows: usize,
    pub cols: u32,
    pub flag_lo: u32,
    pub flag_hi: u32,
    /// x-degree to which `G` identities are compared.
    pub trunc: u32,
    /// Also compare the presets against brute-force references.
    pub specializations: bool,
    /// Random subset of `(shape, flags)` cases instead of all of them.
    pub sample: Option<(u64, usize)>,
}

impl Default for TheoremSweep {
    fn default() -> Self {
        TheoremSweep { rows: 3, cols: 3, flag_lo: 1, flag_hi: 3, trunc: 6, specializations: true, sample: None }
    }
}

fn cases(rows: usize, cols: u32, flag_lo: u32, flag_hi: u32, sample: Option<(u64, usize)>) -> Vec<(SkewShape, FlagPair)> {
    let flags = flag_pairs(rows, flag_lo, flag_lo, flag_hi);
    let mut out = Vec::new();
    for lam in partitions_in_box(rows, cols) {
        for mu in subpartitions(lam.parts()) {
            let sh = SkewShape::from_partitions(&lam, &mu);
            for f in &flags {
                out.push((sh.clone(), f.clone()));
            }
        }
    }
    if let Some((seed, k)) = sample {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        out.shuffle(&mut rng);
        out.truncate(k);
    }
    out
}

/// Determinant versus tableau sum for the row and column flagged `g` and `G`.
pub fn sweep_theorems(cfg: &TheoremSweep, report: &mut SweepReport) {
    for (sh, f) in cases(cfg.rows, cfg.cols, cfg.flag_lo, cfg.flag_hi, cfg.sample) {
        let tsh = sh.transpose().expect("partition pair");
        let pos = f.positive();
        let name = |base: &str| if pos { base.to_string() } else { format!("{base}_nonpositive") };
        if row_hypothesis(&sh, &f) {
            let d = jt_small(&JtSpec::new(GFamily::Small, FlagKind::Row, sh.clone(), f.clone())).unwrap();
            let t = mrpp_sum(&sh, &f, FlagMode::Row, Variant::Left, None);
            report.tally(&name("g_row"), !pos).check(d == t, || differ("det/tableaux", &sh, &f, &d, &t));
            if cfg.specializations && pos {
                specialize_small(&sh, &f, &d, &t, report);
            }

            let d = jt_small(&JtSpec::new(GFamily::Small, FlagKind::Col, sh.clone(), f.clone())).unwrap();
            let t = mrpp_sum(&tsh, &f, FlagMode::Col, Variant::Left, None);
            report.tally(&name("g_col"), !pos).check(d == t, || differ("det/tableaux", &sh, &f, &d, &t));

            let d = jt_big(&JtSpec::new(GFamily::Big, FlagKind::Row, sh.clone(), f.clone()).trunc(cfg.trunc)).unwrap();
            let t = mmsvt_sum(&sh, &f, FlagMode::Row, cfg.trunc);
            report.tally(&name("G_row"), !pos).check(d == t, || differ("det/tableaux", &sh, &f, &d, &t));
            if cfg.specializations && pos {
                specialize_big(&sh, &f, &d, &t, cfg.trunc, report);
            }
        }
        let strong = col_hypothesis(&sh, &f);
        if strong || col_hypothesis_weak(&sh, &f) {
            let d = jt_big(&JtSpec::new(GFamily::Big, FlagKind::Col, sh.clone(), f.clone()).trunc(cfg.trunc)).unwrap();
            let t = mmsvt_sum(&tsh, &f, FlagMode::Col, cfg.trunc);
            let label = if strong { name("G_col") } else { name("G_col_weak") };
            report.tally(&label, !pos || !strong).check(d == t, || differ("det/tableaux", &sh, &f, &d, &t));
        }
    }
}

fn specialize_small(sh: &SkewShape, f: &FlagPair, d: &ParamPoly, t: &ParamPoly, report: &mut SweepReport) {
    let lp = Preset::LpG.apply(t).unwrap();
    let oracle = oracle_lp_rpp_flagged(sh, f);
    report.tally("lp_g", false).check(lp == oracle, || differ("preset/oracle", sh, f, &lp, &oracle));
    let gk = Preset::GrinbergKim.apply(t).unwrap();
    let oracle = oracle_row_beta_rpp(sh, f);
    report.tally("grinberg_kim", false).check(gk == oracle, || differ("preset/oracle", sh, f, &gk, &oracle));
    if *f == FlagPair::full(sh.n()) {
        let ggl = Preset::Ggl.apply(t).unwrap();
        report.tally("ggl_dual", false).check(ggl == oracle, || differ("preset/oracle", sh, f, &ggl, &oracle));
    }
    let yt = Preset::YeliussizovSmallG.apply(t).unwrap();
    let yd = Preset::YeliussizovSmallG.apply(d).unwrap();
    report
        .tally("yeliussizov_g", false)
        .check(yt == yd && single_symbol_nonnegative(&yt), || differ("collapse", sh, f, &yt, &yd));
}

fn specialize_big(sh: &SkewShape, f: &FlagPair, d: &ParamPoly, t: &ParamPoly, trunc: u32, report: &mut SweepReport) {
    let buch = Preset::BuchG.apply(t).unwrap();
    let oracle = oracle_buch_svt_flagged(sh, f, trunc);
    report.tally("buch_G", false).check(buch == oracle, || differ("preset/oracle", sh, f, &buch, &oracle));
    let cp = Preset::ChanPflueger.apply(t).unwrap();
    let oracle = oracle_row_beta_svt(sh, f, trunc);
    report.tally("chan_pflueger", false).check(cp == oracle, || differ("preset/oracle", sh, f, &cp, &oracle));
    let m = Preset::Matsumura.apply(t).unwrap();
    let fsvt = fsvt_sum(sh, &f.s, &f.r, trunc);
    report.tally("matsumura_preset", false).check(m == fsvt, || differ("preset/fsvt", sh, f, &m, &fsvt));
    let yt = Preset::YeliussizovG.apply(t).unwrap();
    let yd = Preset::YeliussizovG.apply(d).unwrap();
    report
        .tally("yeliussizov_G", false)
        .check(yt == yd && single_symbol_nonnegative(&yt), || differ("collapse", sh, f, &yt, &yd));
}

/// Indexed determinants versus left- and bottom-marked indexed tableau sums over dented shapes.
pub fn sweep_indexed(rows: usize, cols: u32, flag_hi: u32, report: &mut SweepReport) {
    let flags = flag_pairs(rows, 1, 1, flag_hi);
    for lam in dented_in_box(rows, cols) {
        let sets = valid_index_sets(&lam);
        for mu in subpartitions(lam.parts()) {
            let sh = SkewShape::new(lam.parts().to_vec(), mu.parts().to_vec());
            for f in &flags {
                if !row_hypothesis(&sh, f) {
                    continue;
                }
                for i in &sets {
                    for (kind, variant, name) in [(FlagKind::Row, Variant::Left, "indexed_row"), (FlagKind::Col, Variant::Bottom, "indexed_col")] {
                        let d = jt_small(&JtSpec::new(GFamily::Small, kind, sh.clone(), f.clone()).indexed(i.clone())).unwrap();
                        let t = mrpp_indexed_sum(&sh, f, i, variant);
                        report.tally(name, false).check(d == t, || format!("{sh} {f} I={i}: {d} != {t}"));
                    }
                }
            }
        }
    }
}

/// Bialternants against the unflagged determinants and the direct tableau sums.
pub fn sweep_bialternant(outer: &[u32], n: usize, trunc: u32, report: &mut SweepReport) {
    for lam in subpartitions(outer) {
        let lam = lam.padded(n);
        let sh = SkewShape::straight(lam.parts().to_vec());
        let full = FlagPair::full(n);
        let bg = bialternant(GFamily::Big, &lam, n, trunc).unwrap();
        let jg = jt_big(&JtSpec::new(GFamily::Big, FlagKind::None, sh.clone(), full.clone()).trunc(trunc)).unwrap();
        report.tally("bialternant_G", false).check(bg == jg, || format!("{lam}: {bg} != {jg}"));
        let tg = mmsvt_sum(&sh, &full, FlagMode::Row, trunc);
        report.tally("corollary_G", false).check(bg == tg, || format!("{lam}: {bg} != {tg}"));
        let bs = bialternant(GFamily::Small, &lam, n, trunc).unwrap();
        let js = jt_small(&JtSpec::new(GFamily::Small, FlagKind::None, sh.clone(), full.clone())).unwrap();
        report.tally("bialternant_g", false).check(bs == js, || format!("{lam}: {bs} != {js}"));
        let ts = mrpp_sum(&sh, &full, FlagMode::Row, Variant::Left, None);
        report.tally("corollary_g", false).check(bs == ts, || format!("{lam}: {bs} != {ts}"));
    }
}

fn right_markable(t: &MarkedRpp, i: usize, j: u32) -> bool {
    j > 1 && t.value(i, j - 1).is_some_and(|v| Some(v) == t.value(i, j))
}

/// φ on every left-marked RPP of every skew shape in the box with entries at most `max_entry`.
pub fn sweep_phi(rows: usize, cols: u32, max_entry: u32, report: &mut SweepReport) {
    let flags = FlagPair::new(vec![1; rows], vec![max_entry; rows]).unwrap();
    for lam in partitions_in_box(rows, cols) {
        for mu in subpartitions(lam.parts()) {
            let sh = SkewShape::from_partitions(&lam, &mu);
            let mut lefts: Vec<MarkedRpp> = enum_mrpp(&sh, &flags, FlagMode::Row, Variant::Left, None).collect();
            let mut rights: Vec<MarkedRpp> = enum_mrpp(&sh, &flags, FlagMode::Row, Variant::Right, None).collect();
            lefts.sort_by(|a, b| a.values.cmp(&b.values));
            rights.sort_by(|a, b| a.values.cmp(&b.values));
            let mut k = 0;
            for group in lefts.chunk_by(|a, b| a.values == b.values) {
                let images: Vec<MarkedRpp> = group.iter().map(phi_left_to_right).collect();
                let mut ok = true;
                for (t, p) in group.iter().zip(&images) {
                    ok &= p.values == t.values && p.weight() == t.weight();
                    ok &= p.marked.iter().all(|&(i, j)| right_markable(p, i, j));
                }
                let distinct: BTreeSet<Vec<(usize, u32)>> = images.iter().map(|p| p.marked.iter().copied().collect()).collect();
                ok &= distinct.len() == group.len();
                while k < rights.len() && rights[k].values < group[0].values {
                    k += 1;
                }
                let start = k;
                while k < rights.len() && rights[k].values == group[0].values {
                    k += 1;
                }
                let target: BTreeSet<Vec<(usize, u32)>> = rights[start..k].iter().map(|p| p.marked.iter().copied().collect()).collect();
                ok &= target == distinct;
                report.tally("phi", false).check(ok, || format!("{sh} {:?}", group[0].values));
            }
            for t in &rights {
                let b = t.transpose(Variant::Bottom);
                report.tally("transpose_duality", false).check(b.weight() == t.weight(), || format!("{sh} {:?}", t.values));
            }
        }
    }
}

/// Set-valued tableaux against both forms of Matsumura's determinant.
pub fn sweep_matsumura(rows: usize, cols: u32, flag_hi: u32, trunc: u32, report: &mut SweepReport) {
    let flags = flag_pairs(rows, 1, 1, flag_hi);
    for lam in partitions_in_box(rows, cols) {
        for mu in subpartitions(lam.parts()) {
            let sh = SkewShape::from_partitions(&lam, &mu);
            for fl in &flags {
                let (g, f) = (&fl.r, &fl.s);
                if !matsumura_hypothesis(&sh, f, g) {
                    continue;
                }
                let t = fsvt_sum(&sh, f, g, trunc);
                let b = matsumura_det(&sh, f, g, trunc, MatsumuraForm::Binomial).unwrap();
                let o = matsumura_det(&sh, f, g, trunc, MatsumuraForm::Ominus).unwrap();
                report
                    .tally("matsumura", false)
                    .check(t == b && b == o, || format!("{sh} f={f:?} g={g:?}: fsvt {t}, binomial {b}, ominus {o}"));
            }
        }
    }
}

/// The series identities behind Matsumura's entries.
pub fn sweep_gpq(report: &mut SweepReport) {
    for trunc in 0..=5 {
        for m in -3..=4 {
            for p in 1..=3 {
                for q in 1..=3 {
                    let a = matsumura_gpq(m, p, q, trunc).unwrap();
                    let b = matsumura_gpq_laurent(m, p, q, trunc);
                    report.tally("gpq", false).check(a == b, || format!("m={m} p={p} q={q} trunc={trunc}: {a} != {b}"));
                }
            }
        }
    }
    for trunc in 0..=4 {
        for i in 1..=4 {
            for j in 1..=4 {
                for fi in 1..=3 {
                    for gj in 1..=3 {
                        for base in -3..=4 {
                            let a = binomial_entry(base, i, j, fi, gj, trunc).unwrap();
                            let b = ominus_entry(base, i, j, fi, gj, trunc).unwrap();
                            report
                                .tally("mat_ominus_entry", false)
                                .check(a == b, || format!("base={base} i={i} j={j} f={fi} g={gj} trunc={trunc}: {a} != {b}"));
                        }
                    }
                }
            }
        }
    }
    for m in 0..=5u32 {
        for i in 1..=5i64 {
            for j in 1..=5i64 {
                if (i - j).abs() > 4 {
                    continue;
                }
                let a = beta_binom(m, i, j);
                let b = h_beta_bar(m as i64, i, j).unwrap();
                report.tally("h_beta_bar", false).check(a == b, || format!("m={m} i={i} j={j}: {a} != {b}"));
            }
        }
    }
}
