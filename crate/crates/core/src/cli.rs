//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a comparison or sweep finds a difference,
//! 2 for unusable input, 3 for an internal failure.

use crate::crosscheck::lemmas::all_suites;
use crate::crosscheck::matsumura::{matsumura_det, matsumura_hypothesis, MatsumuraForm};
use crate::crosscheck::sweep::{
    sweep_bialternant, sweep_gpq, sweep_indexed, sweep_matsumura, sweep_phi, sweep_theorems, SweepReport, Tally, TheoremSweep,
};
use crate::crosscheck::Preset;
use crate::error::Error;
use crate::jt::{bialternant, jt_eval, FlagKind, GFamily, JtSpec};
use crate::poly::ParamPoly;
use crate::shape::{col_hypothesis, parse_list, row_hypothesis, DentedShape, FlagPair, IndexSet, Partition, SkewShape};
use crate::tableau::{enum_mmsvt, enum_mrpp, enum_mrpp_indexed, fsvt_sum, mmsvt_sum, mrpp_indexed_sum, mrpp_sum, FlagMode, Variant};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::io::Write as _;

#[derive(Parser, Debug)]
#[command(name = "groth", about = "Refined flagged Grothendieck polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one polynomial.
    Compute(SpecArgs),
    /// Evaluate two routes and report EQUAL or DIFFER.
    Compare {
        #[command(flatten)]
        spec: SpecArgs,
        /// Second route; the first is `--method`.
        #[arg(long, value_enum, default_value_t = Method::Determinant)]
        against: Method,
    },
    /// List the tableaux behind a tableau sum.
    Enumerate {
        #[command(flatten)]
        spec: SpecArgs,
        /// Marking rule for `g` tableaux.
        #[arg(long, value_enum, default_value_t = VariantArg::Left)]
        variant: VariantArg,
    },
    /// Run one of the built-in sweeps.
    Sweep {
        #[arg(long, value_enum, default_value_t = SweepKind::Theorems)]
        kind: SweepKind,
        /// Seed for sampled sweeps and lemma suites.
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Sample this many cases instead of the full theorem sweep; lemma suite size otherwise.
        #[arg(long)]
        cases: Option<usize>,
        #[arg(long, default_value_t = 6)]
        trunc: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
    /// Apply a preset parameter specialization to a computed polynomial.
    Specialize {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        preset: String,
    },
    /// Matsumura's flagged set-valued tableaux or determinant.
    Matsumura {
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
        /// Upper flags.
        #[arg(long, default_value = "")]
        f: String,
        /// Lower flags.
        #[arg(long, default_value = "")]
        g: String,
        #[arg(long)]
        trunc: Option<u32>,
        #[arg(long, value_enum, default_value_t = FormArg::Binomial)]
        form: FormArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct SpecArgs {
    #[arg(long, value_enum, default_value_t = FamilyArg::Small)]
    pub family: FamilyArg,
    /// `λ/μ`, e.g. "3,2/1"; the determinant shape in every flag mode.
    #[arg(long, allow_hyphen_values = true)]
    pub shape: String,
    #[arg(long, value_enum, default_value_t = FlagArg::None)]
    pub flag: FlagArg,
    #[arg(long)]
    pub r: Option<String>,
    #[arg(long)]
    pub s: Option<String>,
    /// x-degree bound, required for `G`.
    #[arg(long)]
    pub trunc: Option<u32>,
    /// Total number of entries for `G` tableaux; defaults to `--trunc`.
    #[arg(long)]
    pub max_entries: Option<u32>,
    #[arg(long, value_enum, default_value_t = Method::Tableaux)]
    pub method: Method,
    /// Index set for the dented-shape variants, e.g. "I=1,3".
    #[arg(long)]
    pub indexed: Option<String>,
    /// Multiply in the `χ(r_j <= s_i)` gates of the `g` determinant.
    #[arg(long)]
    pub chi: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyArg {
    #[value(name = "G")]
    Big,
    #[value(name = "g")]
    Small,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlagArg {
    Row,
    Col,
    None,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Tableaux,
    Determinant,
    Bialternant,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VariantArg {
    Left,
    Right,
    Bottom,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormArg {
    Binomial,
    Ominus,
    Tableaux,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepKind {
    Theorems,
    Indexed,
    Bialternant,
    Phi,
    Matsumura,
    Lemmas,
    All,
}

/// Failure of a command, mapped to an exit status.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Internal(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::BadShape(_) | Error::BadIndexSet(_) | Error::UnboundedSeries(_) | Error::UnmappedParameter(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Internal(e.to_string()),
        }
    }
}

/// Result of a command: text for stdout, warnings for stderr, and the exit status.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub code: i32,
}

/// A fully parsed polynomial request.
#[derive(Clone, Debug)]
pub struct Request {
    pub family: GFamily,
    pub flag: FlagKind,
    pub shape: SkewShape,
    pub flags: FlagPair,
    pub trunc: Option<u32>,
    pub max_entries: Option<u32>,
    pub index: Option<IndexSet>,
    pub chi: bool,
}

impl Request {
    pub fn from_args(a: &SpecArgs) -> Result<Request, CliError> {
        let shape = SkewShape::parse(&a.shape)?;
        let n = shape.n();
        let family = match a.family {
            FamilyArg::Big => GFamily::Big,
            FamilyArg::Small => GFamily::Small,
        };
        let flag = match a.flag {
            FlagArg::Row => FlagKind::Row,
            FlagArg::Col => FlagKind::Col,
            FlagArg::None => FlagKind::None,
        };
        let flags = match (flag, &a.r, &a.s) {
            (FlagKind::None, None, None) => FlagPair::full(n),
            (FlagKind::None, _, _) => return Err(CliError::Usage("--r/--s need --flag row or col".into())),
            (_, Some(r), Some(s)) => FlagPair::new(parse_list(r)?, parse_list(s)?)?,
            _ if n == 0 => FlagPair::full(0),
            _ => return Err(CliError::Usage("flagged shapes need --r and --s".into())),
        };
        if flags.r.len() != n {
            return Err(CliError::Usage(format!("flags have length {} but the shape has {n} rows", flags.r.len())));
        }
        let index = a.indexed.as_deref().map(IndexSet::parse).transpose()?;
        if let Some(i) = &index {
            if family != GFamily::Small || flag == FlagKind::None {
                return Err(CliError::Usage("--indexed needs --family g and --flag row or col".into()));
            }
            i.validate(&DentedShape::new(shape.outer.clone())?)?;
        }
        let (trunc, max_entries) = (a.trunc.or(a.max_entries), a.max_entries.or(a.trunc));
        if family == GFamily::Big && trunc.is_none() {
            return Err(CliError::Usage("G needs --trunc".into()));
        }
        Ok(Request { family, flag, shape, flags, trunc, max_entries, index, chi: a.chi })
    }

    fn jt_spec(&self) -> JtSpec {
        let mut spec = JtSpec::new(self.family, self.flag, self.shape.clone(), self.flags.clone()).chi(self.chi);
        if let Some(t) = self.trunc {
            spec = spec.trunc(t);
        }
        if let Some(i) = &self.index {
            spec = spec.indexed(i.clone());
        }
        spec
    }

    fn is_partition_pair(&self) -> bool {
        Partition::new(self.shape.outer.clone()).is_ok() && Partition::new(self.shape.inner.clone()).is_ok()
    }

    /// Hypotheses under which the determinant and tableau routes are known to agree.
    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        let sh = &self.shape;
        if !(1..=sh.n()).all(|i| sh.inner(i) <= sh.outer(i)) {
            w.push(format!("warning: inner shape not contained in outer shape ({sh})"));
        }
        if self.index.is_none() && !self.is_partition_pair() {
            w.push(format!("warning: {sh} is not a pair of partitions"));
            return w;
        }
        if !self.flags.positive() {
            w.push("warning: flags are not all positive".into());
        }
        let ok = match self.flag {
            FlagKind::Row => row_hypothesis(sh, &self.flags),
            FlagKind::Col if self.family == GFamily::Small => row_hypothesis(sh, &self.flags),
            FlagKind::Col => col_hypothesis(sh, &self.flags),
            FlagKind::None => true,
        };
        if !ok {
            w.push(format!("warning: flags {} violate the {:?} flag hypothesis", self.flags, self.flag));
        }
        w
    }

    fn tableau_bound(&self) -> Result<u32, CliError> {
        self.max_entries.ok_or_else(|| CliError::Usage("G tableaux need --max-entries or --trunc".into()))
    }

    /// The polynomial by one route.
    pub fn evaluate(&self, method: Method) -> Result<ParamPoly, CliError> {
        match method {
            Method::Determinant => Ok(jt_eval(&self.jt_spec())?),
            Method::Bialternant => {
                if self.flag != FlagKind::None || self.index.is_some() {
                    return Err(CliError::Usage("the bialternant needs --flag none".into()));
                }
                if self.shape.inner.iter().any(|&m| m > 0) {
                    return Err(CliError::Usage("the bialternant needs a straight shape".into()));
                }
                let lam = Partition::new(self.shape.outer.clone())?;
                Ok(bialternant(self.family, &lam, self.shape.n(), self.trunc.unwrap_or(0))?)
            }
            Method::Tableaux => self.tableau_sum(),
        }
    }

    fn tableau_sum(&self) -> Result<ParamPoly, CliError> {
        let sh = &self.shape;
        let f = &self.flags;
        if let Some(i) = &self.index {
            if self.family == GFamily::Big || self.flag == FlagKind::None {
                return Err(CliError::Usage("--indexed needs family g and a row or column flag".into()));
            }
            let variant = if self.flag == FlagKind::Col { Variant::Bottom } else { Variant::Left };
            return Ok(mrpp_indexed_sum(sh, f, i, variant));
        }
        let (shape, mode) = self.tableau_shape()?;
        Ok(match self.family {
            GFamily::Big => mmsvt_sum(&shape, f, mode, self.tableau_bound()?),
            GFamily::Small => mrpp_sum(&shape, f, mode, Variant::Left, None),
        })
    }

    fn tableau_shape(&self) -> Result<(SkewShape, FlagMode), CliError> {
        if self.flag == FlagKind::Col {
            let t = self.shape.transpose().map_err(|e| CliError::Usage(format!("column flags need partitions: {e}")))?;
            Ok((t, FlagMode::Col))
        } else {
            Ok((self.shape.clone(), FlagMode::Row))
        }
    }

    fn provenance(&self, method: &str) -> Value {
        json!({
            "method": method,
            "spec": {
                "family": if self.family == GFamily::Big { "G" } else { "g" },
                "flag": format!("{:?}", self.flag).to_lowercase(),
                "outer": self.shape.outer,
                "inner": self.shape.inner,
                "r": self.flags.r,
                "s": self.flags.s,
                "indexed": self.index.as_ref().map(|i| i.0.clone()),
                "chi": self.chi,
            },
            "trunc": self.trunc,
        })
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Tableaux => "tableaux",
        Method::Determinant => "determinant",
        Method::Bialternant => "bialternant",
    }
}

fn json_line(v: &Value) -> String {
    format!("{}\n", serde_json::to_string(v).expect("serializable"))
}

/// First term, in output order, on which `a` and `b` disagree.
pub fn first_difference(a: &ParamPoly, b: &ParamPoly) -> Option<String> {
    let d = a - b;
    let (m, _) = d.canonical_terms().first().copied()?;
    let pick = |p: &ParamPoly| ParamPoly::term(m.clone(), p.coeff(m), None).to_string();
    Some(format!("{} vs {}", pick(a), pick(b)))
}

fn compute(a: &SpecArgs, preset: Option<Preset>) -> Result<Output, CliError> {
    let req = Request::from_args(a)?;
    let mut out = Output { warnings: req.warnings(), ..Output::default() };
    let mut p = req.evaluate(a.method)?;
    let mut prov = req.provenance(method_name(a.method));
    if let Some(preset) = preset {
        if preset.family() != req.family {
            out.warnings.push(format!("warning: preset {preset} is stated for the other family"));
        }
        p = preset.apply(&p)?;
        prov["preset"] = json!(preset.name());
    }
    out.stdout = match a.format {
        Format::Text => format!("{p}\n"),
        Format::Json => json_line(&json!({"provenance": prov, "poly": p.to_json()})),
    };
    Ok(out)
}

fn compare(a: &SpecArgs, against: Method) -> Result<Output, CliError> {
    let req = Request::from_args(a)?;
    let mut out = Output { warnings: req.warnings(), ..Output::default() };
    let methods = [a.method, against];
    let mut values = Vec::new();
    for m in methods {
        values.push(req.evaluate(m)?);
    }
    let diff = first_difference(&values[0], &values[1]);
    let verdict = if diff.is_none() { "EQUAL" } else { "DIFFER" };
    out.code = if diff.is_none() { 0 } else { 1 };
    out.stdout = match a.format {
        Format::Text => {
            let mut s = String::new();
            for (m, v) in methods.iter().zip(&values) {
                let _ = writeln!(s, "{}: {v}", method_name(*m));
            }
            match &diff {
                Some(d) => {
                    let _ = writeln!(s, "verdict: {verdict} (first difference: {d})");
                }
                None => {
                    let _ = writeln!(s, "verdict: {verdict}");
                }
            }
            s
        }
        Format::Json => {
            let results: Vec<Value> =
                methods.iter().zip(&values).map(|(m, v)| json!({"method": method_name(*m), "poly": v.to_json()})).collect();
            json_line(&json!({
                "provenance": req.provenance("compare"),
                "results": results,
                "verdict": verdict,
                "first_difference": diff,
            }))
        }
    };
    Ok(out)
}

fn enumerate(a: &SpecArgs, variant: VariantArg) -> Result<Output, CliError> {
    let req = Request::from_args(a)?;
    let mut out = Output { warnings: req.warnings(), ..Output::default() };
    let f = &req.flags;
    let rows: Vec<(Value, ParamPoly)> = match (&req.index, req.family) {
        (Some(i), GFamily::Small) => {
            let v = if req.flag == FlagKind::Col { Variant::Bottom } else { Variant::Left };
            enum_mrpp_indexed(&req.shape, f, i, v).map(|t| (t.to_json(), weight_poly(t.weight()))).collect()
        }
        (Some(_), GFamily::Big) => return Err(CliError::Usage("--indexed needs family g".into())),
        (None, GFamily::Big) => {
            let (sh, mode) = req.tableau_shape()?;
            enum_mmsvt(&sh, f, mode, req.tableau_bound()?).map(|t| (t.to_json(), weight_poly(t.weight()))).collect()
        }
        (None, GFamily::Small) => {
            let (sh, mode) = req.tableau_shape()?;
            let v = match variant {
                VariantArg::Left => Variant::Left,
                VariantArg::Right => Variant::Right,
                VariantArg::Bottom => Variant::Bottom,
            };
            enum_mrpp(&sh, f, mode, v, None).map(|t| (t.to_json(), weight_poly(t.weight()))).collect()
        }
    };
    out.stdout = match a.format {
        Format::Text => {
            let mut s = String::new();
            for (t, w) in &rows {
                let _ = writeln!(s, "{}\t{w}", serde_json::to_string(t).expect("serializable"));
            }
            let _ = writeln!(s, "count: {}", rows.len());
            s
        }
        Format::Json => {
            let items: Vec<Value> = rows.iter().map(|(t, w)| json!({"cells": t, "weight": w.to_json()})).collect();
            json_line(&json!({"provenance": req.provenance("enumerate"), "tableaux": items}))
        }
    };
    Ok(out)
}

fn weight_poly((m, c): (crate::poly::Monomial, crate::int::Int)) -> ParamPoly {
    ParamPoly::term(m, c, None)
}

fn sweep(kind: SweepKind, seed: u64, cases: Option<usize>, trunc: u32, format: Format) -> Output {
    let mut report = SweepReport::default();
    let all = kind == SweepKind::All;
    if all || kind == SweepKind::Theorems {
        let cfg = TheoremSweep { trunc, sample: cases.map(|k| (seed, k)), ..TheoremSweep::default() };
        sweep_theorems(&cfg, &mut report);
    }
    if all || kind == SweepKind::Indexed {
        sweep_indexed(3, 4, 3, &mut report);
    }
    if all || kind == SweepKind::Bialternant {
        sweep_bialternant(&[3, 2, 1], 3, trunc.min(5), &mut report);
    }
    if all || kind == SweepKind::Phi {
        sweep_phi(3, 3, 2, &mut report);
    }
    if all || kind == SweepKind::Matsumura {
        sweep_matsumura(3, 3, 3, trunc.min(5), &mut report);
        sweep_gpq(&mut report);
    }
    if all || kind == SweepKind::Lemmas {
        report.tallies.extend(all_suites(seed, cases.unwrap_or(500), 4));
    }
    let ok = report.tallies.iter().all(|t: &Tally| t.diagnostic || t.failed == 0);
    let verdict = if ok { "PASS" } else { "FAIL" };
    let stdout = match format {
        Format::Text => format!("{}verdict: {verdict}\n", report.render()),
        Format::Json => {
            let ts: Vec<Value> = report
                .tallies
                .iter()
                .map(|t| json!({"name": t.name, "cases": t.cases, "failed": t.failed, "diagnostic": t.diagnostic, "examples": t.examples}))
                .collect();
            json_line(&json!({"seed": seed, "trunc": trunc, "tallies": ts, "verdict": verdict}))
        }
    };
    Output { stdout, warnings: Vec::new(), code: if ok { 0 } else { 1 } }
}

fn matsumura(shape: &str, f: &str, g: &str, trunc: Option<u32>, form: FormArg, format: Format) -> Result<Output, CliError> {
    let sh = SkewShape::parse(shape)?;
    let (f, g) = (parse_list(f)?, parse_list(g)?);
    let n = sh.n();
    if f.len() != n || g.len() != n {
        return Err(CliError::Usage(format!("--f and --g need {n} entries")));
    }
    let trunc = trunc.ok_or_else(|| CliError::Usage("matsumura needs --trunc".into()))?;
    let mut out = Output::default();
    if !matsumura_hypothesis(&sh, &f, &g) {
        out.warnings.push("warning: flags violate the hypothesis of Matsumura's determinant".into());
    }
    let (p, name) = match form {
        FormArg::Binomial => (matsumura_det(&sh, &f, &g, trunc, MatsumuraForm::Binomial)?, "binomial"),
        FormArg::Ominus => (matsumura_det(&sh, &f, &g, trunc, MatsumuraForm::Ominus)?, "ominus"),
        FormArg::Tableaux => (fsvt_sum(&sh, &f, &g, trunc), "tableaux"),
    };
    out.stdout = match format {
        Format::Text => format!("{p}\n"),
        Format::Json => {
            let prov = json!({"method": name, "spec": {"outer": sh.outer, "inner": sh.inner, "f": f, "g": g}, "trunc": trunc});
            json_line(&json!({"provenance": prov, "poly": p.to_json()}))
        }
    };
    Ok(out)
}

/// Runs a parsed command.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Compute(a) => compute(a, None),
        Command::Compare { spec, against } => compare(spec, *against),
        Command::Enumerate { spec, variant } => enumerate(spec, *variant),
        Command::Sweep { kind, seed, cases, trunc, format, .. } => Ok(sweep(*kind, *seed, *cases, *trunc, *format)),
        Command::Specialize { spec, preset } => compute(spec, Some(Preset::parse(preset)?)),
        Command::Matsumura { shape, f, g, trunc, form, format, .. } => matsumura(shape, f, g, *trunc, *form, *format),
    }
}

fn out_path(cli: &Cli) -> Option<&str> {
    match &cli.command {
        Command::Compute(a) | Command::Specialize { spec: a, .. } | Command::Compare { spec: a, .. } | Command::Enumerate { spec: a, .. } => {
            a.out.as_deref()
        }
        Command::Sweep { out, .. } | Command::Matsumura { out, .. } => out.as_deref(),
    }
}

/// Parses `args`, runs the command, writes its output and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("{w}");
            }
            if let Some(path) = out_path(&cli) {
                if let Err(e) = std::fs::write(path, &out.stdout) {
                    eprintln!("error: cannot write {path}: {e}");
                    return 2;
                }
            } else {
                let _ = std::io::stdout().write_all(out.stdout.as_bytes());
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Result<Output, CliError> {
        run(&Cli::try_parse_from(std::iter::once("groth").chain(args.iter().copied())).unwrap())
    }

    #[test]
    fn first_difference_reports_leading_term() {
        let a = ParamPoly::var(crate::poly::Var::x(1), None);
        assert_eq!(first_difference(&a, &a), None);
        let b = ParamPoly::zero(None);
        assert_eq!(first_difference(&a, &b).as_deref(), Some("x1 vs 0"));
    }

    #[test]
    fn index_sets_are_validated() {
        let base = ["compute", "--shape", "2,1", "--flag", "row", "--r", "1,1", "--s", "2,2", "--indexed"];
        let ok = go(&[&base[..], &["I=1"]].concat()).unwrap();
        assert_eq!(ok.code, 0);
        let bad = go(&[&base[..], &["I=2,3"]].concat()).unwrap_err();
        assert_eq!(bad.code(), 2);
        let big = go(&["compute", "--family", "G", "--trunc", "2", "--shape", "1", "--flag", "row", "--r", "1", "--s", "1", "--indexed", "I=1"]);
        assert_eq!(big.unwrap_err().code(), 2);
    }

    #[test]
    fn warnings_follow_hypotheses() {
        let out = go(&["compare", "--shape", "1,1", "--flag", "col", "--r", "1,1", "--s", "2,1"]).unwrap();
        assert_eq!(out.code, 1);
        assert_eq!(out.warnings.len(), 1);
        let out = go(&["compare", "--shape", "1,1", "--flag", "row", "--r", "1,1", "--s", "2,2"]).unwrap();
        assert_eq!((out.code, out.warnings.len()), (0, 0));
    }
}
