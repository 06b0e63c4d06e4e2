//! Acceptance criteria 1 to 10, one PASS/FAIL line each.

use grothendieck::crosscheck::lemmas::all_suites;
use grothendieck::crosscheck::sweep::{
    sweep_bialternant, sweep_gpq, sweep_indexed, sweep_matsumura, sweep_phi, sweep_theorems, SweepReport, Tally, TheoremSweep,
};
use grothendieck::jt::{jt_eval, FlagKind, GFamily, JtSpec};
use grothendieck::shape::{FlagPair, IndexSet, SkewShape};
use grothendieck::tableau::{mrpp_sum, Boundary, FlagMode, Group, MarkedRpp, Mmsvt, Variant};
use grothendieck::{Int, Monomial, Var};
use std::collections::BTreeSet;
use std::time::Instant;

struct Outcome {
    ok: bool,
    detail: String,
}

fn mono(x: &[(u32, u32)], a: &[(u32, u32)], b: &[(u32, u32)]) -> Monomial {
    let mut v: Vec<(Var, u32)> = x.iter().map(|&(i, e)| (Var::x(i), e)).collect();
    v.extend(a.iter().map(|&(i, e)| (Var::a(i), e)));
    v.extend(b.iter().map(|&(i, e)| (Var::b(i), e)));
    Monomial::from_exps(&v)
}

/// Rows of `(value, marked)` laid out from the inner boundary of each row.
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

fn figures() -> Outcome {
    let mut fails = Vec::new();
    let g = |value, mult, marked| Group { value, mult, marked };
    let t = Mmsvt {
        shape: SkewShape::new(vec![3, 2], vec![1]),
        cells: vec![
            ((1, 2), vec![g(1, 1, false), g(2, 2, true)]),
            ((1, 3), vec![g(2, 2, false), g(4, 1, true)]),
            ((2, 1), vec![g(1, 1, false)]),
            ((2, 2), vec![g(3, 2, false)]),
        ],
    };
    let want = (mono(&[(1, 2), (2, 4), (3, 2), (4, 1)], &[(2, 2), (3, 1)], &[(1, 2)]), Int::ONE);
    if t.weight() != want {
        fails.push(format!("mmsvt {:?}", t.weight()));
    }

    let sh = SkewShape::new(vec![6, 5, 3, 3], vec![2, 1, 1]);
    let f = |v| (v, false);
    let m = |v| (v, true);
    let left = rpp(&sh, Variant::Left, &[&[f(1), f(2), m(4), f(4)], &[m(1), f(1), f(3), f(5)], &[f(1), f(1)], &[m(3), m(3), f(3)]]);
    let want = (mono(&[(1, 1), (2, 1), (3, 2), (4, 1), (5, 1)], &[(1, 1), (2, 2), (5, 1)], &[(1, 1), (2, 2)]), Int::ONE);
    if left.weight() != want {
        fails.push(format!("left-marked {:?}", left.weight()));
    }
    let right = rpp(&sh, Variant::Right, &[&[f(1), f(2), f(4), m(4)], &[f(1), m(1), f(3), f(5)], &[f(1), f(1)], &[f(3), m(3), m(3)]]);
    let want = (mono(&[(1, 2), (2, 1), (3, 2), (4, 1), (5, 1)], &[(1, 1), (2, 2), (5, 1)], &[(1, 1), (2, 1)]), Int::ONE);
    if right.weight() != want {
        fails.push(format!("right-marked {:?}", right.weight()));
    }

    let sh = SkewShape::new(vec![3, 4, 4, 1], vec![1, 1]);
    let flags = FlagPair::new(vec![1, 1, 2, 2], vec![3, 3, 4, 5]).unwrap();
    let mut t = rpp(&sh, Variant::Left, &[&[f(1), f(2)], &[f(1), m(3), f(3)], &[f(2), f(2), f(3), m(4)], &[f(4)]]);
    t.boundary = Some(Boundary { index: IndexSet::from_slice(&[1, 3]), s: flags.s.clone() });
    let want = (mono(&[(1, 1), (2, 3), (4, 1)], &[(3, 1), (4, 1)], &[(1, 2), (2, 1)]), Int::ONE);
    if t.weight() != want {
        fails.push(format!("indexed {:?}", t.weight()));
    }
    Outcome { ok: fails.is_empty(), detail: if fails.is_empty() { "4 figure weights".into() } else { fails.join("; ") } }
}

fn counterexamples() -> Outcome {
    let sh = SkewShape::new(vec![1], vec![2]);
    let one = FlagPair::new(vec![1], vec![1]).unwrap();
    let row = jt_eval(&JtSpec::new(GFamily::Big, FlagKind::Row, sh.clone(), one.clone()).trunc(6)).unwrap().to_string();
    let col = jt_eval(&JtSpec::new(GFamily::Big, FlagKind::Col, sh, one).trunc(6)).unwrap().to_string();
    let sh = SkewShape::straight(vec![1, 1]);
    let f = FlagPair::new(vec![1, 1], vec![2, 1]).unwrap();
    let det = jt_eval(&JtSpec::new(GFamily::Small, FlagKind::Col, sh.clone(), f.clone())).unwrap().to_string();
    let tab = mrpp_sum(&sh.transpose().unwrap(), &f, FlagMode::Col, Variant::Left, None).to_string();
    let ok = row == "b1 - a2" && col == "b2 - a1" && det == "x1^2 - a1*x1 - a1*x2" && tab == "x1^2 - a1*x1";
    Outcome { ok, detail: format!("G row {row}; G col {col}; g col det {det} vs tableaux {tab}") }
}

fn from_report(report: &SweepReport, names: &[&str]) -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for n in names {
        match report.get(n) {
            Some(t) => {
                ok &= t.cases > 0 && t.failed == 0;
                parts.push(format!("{n} {}/{}", t.cases - t.failed, t.cases));
                if let Some(e) = t.examples.first() {
                    parts.push(format!("e.g. {e}"));
                }
            }
            None => {
                ok = false;
                parts.push(format!("{n} missing"));
            }
        }
    }
    Outcome { ok, detail: parts.join(", ") }
}

fn lemma_suites(min_cases: usize) -> Outcome {
    let tallies: Vec<Tally> = all_suites(2024, min_cases, 4);
    let ok = tallies.iter().all(|t| t.cases >= min_cases && t.failed == 0);
    let detail = tallies
        .iter()
        .map(|t| {
            let e = t.examples.first().map(|e| format!(" e.g. {e}")).unwrap_or_default();
            format!("{} {}/{}{e}", t.name, t.cases - t.failed, t.cases)
        })
        .collect::<Vec<_>>()
        .join(", ");
    Outcome { ok, detail }
}

fn main() {
    let mut all_ok = true;
    let mut report = |n: u32, title: &str, run: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let o = run();
        all_ok &= o.ok;
        let verdict = if o.ok { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} {verdict}: {title} ({:.1}s) {}", start.elapsed().as_secs_f64(), o.detail);
    };

    report(1, "figure weights", &mut figures);
    report(2, "remark counterexamples", &mut counterexamples);

    let mut theorems = SweepReport::default();
    report(3, "flagged determinants equal tableau sums", &mut || {
        sweep_theorems(&TheoremSweep::default(), &mut theorems);
        from_report(&theorems, &["g_row", "g_col", "G_row", "G_col"])
    });
    report(4, "indexed determinants equal indexed tableau sums", &mut || {
        let mut r = SweepReport::default();
        sweep_indexed(3, 4, 3, &mut r);
        from_report(&r, &["indexed_row", "indexed_col"])
    });
    let mut bialt = SweepReport::default();
    report(5, "bialternants equal unflagged determinants", &mut || {
        sweep_bialternant(&[3, 2, 1], 3, 5, &mut bialt);
        from_report(&bialt, &["bialternant_G", "bialternant_g"])
    });
    report(6, "bialternants equal tableau sums", &mut || from_report(&bialt, &["corollary_G", "corollary_g"]));
    report(7, "lemma property suites", &mut || lemma_suites(500));
    report(8, "mark-moving bijection", &mut || {
        let mut r = SweepReport::default();
        sweep_phi(3, 3, 2, &mut r);
        from_report(&r, &["phi", "transpose_duality"])
    });
    report(9, "Matsumura determinants and series identities", &mut || {
        let mut r = SweepReport::default();
        sweep_matsumura(3, 3, 3, 5, &mut r);
        sweep_gpq(&mut r);
        from_report(&r, &["matsumura", "gpq", "mat_ominus_entry", "h_beta_bar"])
    });
    report(10, "specialization presets", &mut || {
        from_report(
            &theorems,
            &["buch_G", "lp_g", "chan_pflueger", "ggl_dual", "grinberg_kim", "matsumura_preset", "yeliussizov_G", "yeliussizov_g"],
        )
    });

    for t in theorems.tallies.iter().filter(|t| t.diagnostic) {
        println!("diagnostic: {} {}/{} agree", t.name, t.cases - t.failed, t.cases);
    }
    if !all_ok {
        std::process::exit(1);
    }
}
