//! The `lieforge` command line: argument parsing, input resolution,
//! reports and certificates.
//!
//! Every subcommand produces a JSON value; the text form is rendered from
//! the same value, so `--json` and the default output carry the same
//! content. Exit codes: 0 success, 2 property absent, 1 user error,
//! 70 internal alarm.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::catalog::{self, CatalogRef, Vectorial};
use crate::error::{Category, Error, Result};
use crate::ffield::{ff_make, Field};
use crate::format::{AlgebraFile, CertKind, Certificate};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::prolong::{self, ProlongResult};
use crate::restrict::{self, StructureWitness, TwoFourOutcome, Variant};
use crate::superalg::{self, IdealMode, SimplicityOptions, SimplicityVerdict, Split, SuperAlgebra};
use crate::superize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ABSENT: i32 = 2;
pub const EXIT_USER: i32 = 1;
pub const EXIT_ALARM: i32 = 70;

#[derive(Parser, Debug, Clone)]
#[command(name = "lieforge", version, about = "Exact computations with modular Lie (super)algebras")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Write a certificate to this path.
    #[arg(long, global = true, value_name = "OUT")]
    cert: Option<PathBuf>,
    /// Replace the input algebra by its quotient modulo the center.
    #[arg(long = "mod-center", global = true)]
    mod_center: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug, Clone)]
enum Cmd {
    /// Check the (super) Jacobi identity and the square axioms.
    Verify { input: String },
    /// Derived series, or the i-th derived algebra.
    Derived {
        input: String,
        #[arg(long)]
        i: Option<usize>,
    },
    Center { input: String },
    /// Simplicity test with certificate.
    Simple { input: String },
    /// Search for a p-structure (or one of its variants).
    PStructure {
        input: String,
        #[arg(long)]
        variant: Option<String>,
        #[arg(long)]
        split: Option<String>,
    },
    /// Restricted closure inside gl(g).
    Closure {
        input: String,
        #[arg(long, conflicts_with = "graded")]
        one_step: bool,
        #[arg(long, value_name = "SPLIT")]
        graded: Option<String>,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// q(g) for a restricted Lie algebra.
    Queerify {
        input: String,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// The partial queerification of a simple Lie algebra.
    PartialQueerify {
        input: String,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Superization by declaring g_- odd.
    Method2 {
        input: String,
        #[arg(long)]
        split: String,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    ClassifyOrigin { input: String },
    /// Cartan prolong of a non-positive part.
    Prolong {
        #[arg(long)]
        family: String,
        #[arg(long = "N", value_name = "VEC")]
        shear: Option<String>,
    },
    /// Compare q(g) with the prolong of the queerified non-positive part.
    QgEqGq {
        #[arg(long)]
        g0: String,
        #[arg(long)]
        module: String,
    },
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
    /// Re-derive the claim of a certificate.
    Recheck { cert: PathBuf, input: String },
}

#[derive(Subcommand, Debug, Clone)]
enum CatalogCmd {
    List,
    Emit {
        name: String,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    value: Value,
    code: i32,
    kind: Option<CertKind>,
    /// Extra certificate payload (e.g. the raw witness).
    evidence: Option<Value>,
}

impl Report {
    fn new(value: Value) -> Report {
        Report { value, code: EXIT_OK, kind: None, evidence: None }
    }
}

struct Input {
    file: AlgebraFile,
    bytes: Vec<u8>,
    vectorial: Option<Vectorial>,
    label: String,
}

struct Ctx {
    seed: u64,
    mod_center: bool,
}

impl Ctx {
    fn opts(&self) -> SimplicityOptions {
        SimplicityOptions { seed: self.seed, ..Default::default() }
    }
}

fn seed_from_env() -> Result<u64> {
    match std::env::var("LIEFORGE_SEED") {
        Err(_) => Ok(0),
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("LIEFORGE_SEED={s:?} is not an unsigned integer"))),
    }
}

/// Runs one command line (`argv[0]` is the program name).
pub fn run_command<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USER } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let json = cli.json;
    match execute(&cli, &argv) {
        Ok(o) => o,
        Err(e) => error_outcome(&e, json),
    }
}

fn error_outcome(e: &Error, json: bool) -> Outcome {
    let cat = e.category();
    let msg = format!("error[{}]: {e}\n", cat.as_str());
    let stdout = if json {
        pretty(&json!({"error": {"category": cat.as_str(), "message": e.to_string()}}))
    } else {
        String::new()
    };
    Outcome { code: cat.exit_code(), stdout, stderr: msg }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn execute(cli: &Cli, argv: &[String]) -> Result<Outcome> {
    let ctx = Ctx { seed: seed_from_env()?, mod_center: cli.mod_center };
    if let Cmd::Catalog { action } = &cli.cmd {
        return catalog_cmd(action, cli.json);
    }
    if let Cmd::Recheck { cert, input } = &cli.cmd {
        let report = recheck(cert, input)?;
        return Ok(finish(cli, report, None));
    }
    let (report, digest_input) = dispatch(&cli.cmd, &ctx)?;
    let mut cert_err = None;
    if let Some(path) = &cli.cert {
        match &report.kind {
            None => return Err(Error::BadParams("this subcommand issues no certificate".into())),
            Some(kind) => {
                let mut payload = Map::new();
                payload.insert("argv".into(), json!(certified_argv(argv)));
                payload.insert("report".into(), report.value.clone());
                payload.insert("seed".into(), json!(ctx.seed));
                if let Some(ev) = &report.evidence {
                    payload.insert("evidence".into(), ev.clone());
                }
                let c = Certificate::new(*kind, &digest_input, &Value::Object(payload));
                if let Err(e) = std::fs::write(path, c.to_json()) {
                    cert_err = Some(format!("cannot write certificate {}: {e}", path.display()));
                }
            }
        }
    }
    let mut out = finish(cli, report, cert_err.clone());
    if cert_err.is_some() {
        out.code = EXIT_USER;
    }
    Ok(out)
}

fn finish(cli: &Cli, report: Report, note: Option<String>) -> Outcome {
    let stdout = if cli.json { pretty(&report.value) } else { render_text(&report.value) };
    Outcome { code: report.code, stdout, stderr: note.map(|n| n + "\n").unwrap_or_default() }
}

/// The argument vector a certificate records: no program name, no output
/// options.
fn certified_argv(argv: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in argv.iter().skip(1) {
        if skip {
            skip = false;
            continue;
        }
        match a.as_str() {
            "--json" => {}
            "--cert" | "-o" | "--out" => skip = true,
            s if s.starts_with("--cert=") || s.starts_with("--out=") => {}
            _ => out.push(a.clone()),
        }
    }
    out
}

fn dispatch(cmd: &Cmd, ctx: &Ctx) -> Result<(Report, Vec<u8>)> {
    Ok(match cmd {
        Cmd::Verify { input } => {
            let text = load_text(input)?;
            (verify(&text.0)?, text.1)
        }
        Cmd::Derived { input, i } => {
            let inp = load_input(input, ctx)?;
            (derived_cmd(&inp, *i), inp.bytes)
        }
        Cmd::Center { input } => {
            let inp = load_input(input, ctx)?;
            (center_cmd(&inp), inp.bytes)
        }
        Cmd::Simple { input } => {
            let inp = load_input(input, ctx)?;
            (simple_cmd(&inp, ctx), inp.bytes)
        }
        Cmd::PStructure { input, variant, split } => {
            let inp = load_input(input, ctx)?;
            (p_structure(&inp, variant.as_deref(), split.as_deref())?, inp.bytes)
        }
        Cmd::Closure { input, one_step, graded, out } => {
            let inp = load_input(input, ctx)?;
            (closure_cmd(&inp, *one_step, graded.as_deref(), out.as_deref())?, inp.bytes)
        }
        Cmd::Queerify { input, out } => {
            let inp = load_input(input, ctx)?;
            (queerify_cmd(&inp, ctx, out.as_deref())?, inp.bytes)
        }
        Cmd::PartialQueerify { input, out } => {
            let inp = load_input(input, ctx)?;
            let q = superize::partial_queerify(&inp.file.algebra, &ctx.opts())?;
            (construction_report("partial-queerify", &inp, &q.algebra, q.simplicity.as_ref(), out.as_deref())?, inp.bytes)
        }
        Cmd::Method2 { input, split, out } => {
            let inp = load_input(input, ctx)?;
            let s = parse_split(&inp.file.algebra, split)?;
            let m = superize::method2(&inp.file.algebra, &s, &ctx.opts())?;
            let mut r = construction_report("method2", &inp, &m.algebra, Some(&m.simplicity), out.as_deref())?;
            if let Some(d) = m.algebra.degrees() {
                r.value["graded_dims"] = graded_dims_value(&m.algebra, d);
            }
            (r, inp.bytes)
        }
        Cmd::ClassifyOrigin { input } => {
            let inp = load_input(input, ctx)?;
            (classify_cmd(&inp, ctx)?, inp.bytes)
        }
        Cmd::Prolong { family, shear } => {
            let key = format!("prolong --family {family} --N {}", shear.as_deref().unwrap_or("-"));
            (prolong_cmd(family, shear.as_deref())?, key.into_bytes())
        }
        Cmd::QgEqGq { g0, module } => {
            let key = format!("qg-eq-gq --g0 {g0} --module {module}");
            (qg_cmd(g0, module)?, key.into_bytes())
        }
        Cmd::Catalog { .. } | Cmd::Recheck { .. } => unreachable!("handled before dispatch"),
    })
}

// ---------------------------------------------------------------- inputs

fn load_text(input: &str) -> Result<(String, Vec<u8>)> {
    let path = Path::new(input);
    if path.exists() {
        let text = crate::format::read_text(path)?;
        let bytes = text.clone().into_bytes();
        return Ok((text, bytes));
    }
    let built = catalog::build(input).map_err(|e| not_found(input, e))?;
    let text = AlgebraFile::new(built.algebra).to_canonical();
    let bytes = text.clone().into_bytes();
    Ok((text, bytes))
}

fn not_found(input: &str, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{input:?} is neither a file nor a catalog reference ({m})")),
        other => other,
    }
}

/// A file path if it exists, otherwise a catalog reference.
fn load_input(input: &str, ctx: &Ctx) -> Result<Input> {
    let path = Path::new(input);
    let (file, bytes, vectorial) = if path.exists() {
        let text = crate::format::read_text(path)?;
        let file = AlgebraFile::parse(&text)?;
        (file, text.into_bytes(), None)
    } else {
        let built = catalog::build(input).map_err(|e| not_found(input, e))?;
        let file = AlgebraFile::new(built.algebra);
        let bytes = file.to_canonical().into_bytes();
        (file, bytes, built.vectorial)
    };
    let mut inp = Input { file, bytes, vectorial, label: input.to_string() };
    if ctx.mod_center {
        let g = &inp.file.algebra;
        let c = superalg::center(g);
        if !c.is_zero() {
            let q = superalg::quotient(g, &c, IdealMode::WithSquares)?;
            inp.file = AlgebraFile::new(q.algebra);
            inp.vectorial = None;
        }
    }
    Ok(inp)
}

/// `deg-mod-2`, or a comma-separated list of the basis vectors in `g_-`.
pub fn parse_split(g: &SuperAlgebra, spec: &str) -> Result<Split> {
    let spec = spec.trim();
    if spec == "deg-mod-2" {
        return g.grade_mod2();
    }
    let list = spec.strip_prefix("minus:").unwrap_or(spec);
    let mut minus = vec![false; g.dim()];
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let i = g
            .index_of(name)
            .ok_or_else(|| Error::Parse(format!("split names unknown basis vector {name:?}")))?;
        minus[i] = true;
    }
    let s = Split::new(minus);
    s.validate(g)?;
    Ok(s)
}

fn sdim(g: &SuperAlgebra) -> String {
    format!("{}|{}", g.dim_even(), g.dim_odd())
}

fn header(cmd: &str, inp: &Input) -> Map<String, Value> {
    let g = &inp.file.algebra;
    let mut m = Map::new();
    m.insert("command".into(), json!(cmd));
    m.insert("input".into(), json!(inp.label));
    m.insert("dim".into(), json!(sdim(g)));
    m.insert("field".into(), json!(field_label(g.field())));
    m
}

fn field_label(f: &Field) -> String {
    if f.k() == 1 {
        format!("GF({})", f.p())
    } else {
        format!("GF({}^{}) mod {:?}", f.p(), f.k(), f.modulus())
    }
}

fn graded_dims_value(g: &SuperAlgebra, d: &[i64]) -> Value {
    let mut by: BTreeMap<i64, (usize, usize)> = BTreeMap::new();
    for (i, &deg) in d.iter().enumerate() {
        let e = by.entry(deg).or_default();
        if g.parity()[i].is_odd() {
            e.1 += 1;
        } else {
            e.0 += 1;
        }
    }
    dims_value(&by)
}

fn dims_value(by: &BTreeMap<i64, (usize, usize)>) -> Value {
    Value::Array(by.iter().map(|(d, (e, o))| json!(format!("{d}: {e}|{o}"))).collect())
}

// --------------------------------------------------------------- commands

fn verify(text: &str) -> Result<Report> {
    let f = AlgebraFile::parse_unchecked(text)?;
    let g = &f.algebra;
    let rep = g.check_axioms();
    let mut m = Map::new();
    m.insert("command".into(), json!("verify"));
    m.insert("dim".into(), json!(sdim(g)));
    m.insert("field".into(), json!(field_label(g.field())));
    m.insert("violations".into(), json!(rep.violations.len()));
    m.insert("passed".into(), json!(rep.passed()));
    let mut code = EXIT_OK;
    if let Some(v) = rep.violations.first() {
        let names: Vec<&str> = v.basis.iter().map(|&i| g.names()[i].as_str()).collect();
        m.insert(
            "first_violation".into(),
            json!({
                "kind": serde_json::to_value(v.kind).unwrap(),
                "basis": names,
                "residual": g.render_vector(&v.residual),
            }),
        );
        code = Category::Axiom.exit_code();
    }
    Ok(Report { value: Value::Object(m), code, kind: None, evidence: None })
}

fn derived_cmd(inp: &Input, i: Option<usize>) -> Report {
    let g = &inp.file.algebra;
    let mut m = header("derived", inp);
    match i {
        Some(i) => {
            let d = superalg::derived(g, Some(i));
            m.insert("i".into(), json!(i));
            m.insert("derived_dim".into(), json!(d.dim()));
        }
        None => {
            let series = superalg::derived_series(g);
            let dims: Vec<usize> = series.iter().map(|s| s.dim()).collect();
            m.insert("series".into(), json!(dims));
            m.insert("stable_from".into(), json!(dims.len().saturating_sub(1)));
            m.insert("perfect".into(), json!(dims.len() == 1));
        }
    }
    Report::new(Value::Object(m))
}

fn center_cmd(inp: &Input) -> Report {
    let g = &inp.file.algebra;
    let c = superalg::center(g);
    let mut m = header("center", inp);
    m.insert("center_dim".into(), json!(c.dim()));
    m.insert("basis".into(), json!(c.vectors().iter().map(|v| g.render_vector(v)).collect::<Vec<_>>()));
    Report::new(Value::Object(m))
}

fn verdict_value(g: &SuperAlgebra, v: &SimplicityVerdict) -> Value {
    let mut m = Map::new();
    m.insert("simple".into(), json!(if v.simple { "yes" } else { "no" }));
    m.insert("certain".into(), json!(v.certain));
    m.insert("method".into(), json!(v.method));
    m.insert("rng_seed".into(), json!(v.rng_seed));
    m.insert("random_elements".into(), json!(v.random_elements));
    m.insert("seeds_checked".into(), json!(v.seeds_checked));
    if let Some(x) = &v.generator {
        m.insert("spin_generator".into(), json!(g.render_vector(x)));
    }
    if let Some(x) = &v.nilpotent_element {
        m.insert("nilpotent_element".into(), json!(g.render_vector(x)));
    }
    if let Some(ideal) = &v.proper_ideal {
        m.insert("proper_ideal_dim".into(), json!(ideal.len()));
        m.insert("proper_ideal".into(), json!(ideal.iter().map(|x| g.render_vector(x)).collect::<Vec<_>>()));
    }
    Value::Object(m)
}

fn simple_cmd(inp: &Input, ctx: &Ctx) -> Report {
    let g = &inp.file.algebra;
    let v = superalg::is_simple(g, &ctx.opts());
    let mut m = header("simple", inp);
    if let Value::Object(vm) = verdict_value(g, &v) {
        m.extend(vm);
    }
    Report {
        value: Value::Object(m),
        code: if v.simple { EXIT_OK } else { EXIT_ABSENT },
        kind: Some(CertKind::Simplicity),
        evidence: Some(serde_json::to_value(&v).unwrap()),
    }
}

fn witness_lines(g: &SuperAlgebra, w: &StructureWitness) -> Vec<String> {
    let (e1, e2) = w.exponents(g.p());
    let mut out = Vec::new();
    for (table, e) in [(&w.table_p, e1), (&w.table_2p_or_4, e2)] {
        for entry in table {
            let name = &g.names()[entry.basis];
            let name = if name.chars().all(|c| c.is_alphanumeric() || c == '_') { name.clone() } else { format!("({name})") };
            out.push(format!("{name}^[{e}] = {}", g.render_vector(&entry.value)));
        }
    }
    out
}

fn default_variant(g: &SuperAlgebra) -> Variant {
    if g.dim_odd() == 0 {
        Variant::P
    } else {
        Variant::P2p
    }
}

fn p_structure(inp: &Input, variant: Option<&str>, split: Option<&str>) -> Result<Report> {
    let g = &inp.file.algebra;
    let variant = match variant {
        Some(v) => Variant::parse(v)?,
        None => default_variant(g),
    };
    let mut m = header("p-structure", inp);
    m.insert("variant".into(), json!(variant.label()));
    let (witness, extra): (Option<StructureWitness>, Map<String, Value>) = match variant {
        Variant::P | Variant::P2p => {
            let s = if variant == Variant::P { restrict::find_p_structure(g)? } else { restrict::find_p2p_structure(g)? };
            let mut e = Map::new();
            e.insert("free_center_dim".into(), json!(s.freedom));
            if !s.failed.is_empty() {
                let names: Vec<&str> = s.failed.iter().map(|&i| g.names()[i].as_str()).collect();
                e.insert("no_value_for".into(), json!(names));
            }
            (s.witness, e)
        }
        Variant::TwoTwo => {
            let base = restrict::find_p2p_structure(g)?;
            let w = base.witness.ok_or_else(|| Error::MissingWitness("no p|2p structure to extend".into()));
            match w {
                Ok(w) => {
                    let t = restrict::derive_22_structure(g, Some(&w))?;
                    (Some(t.as_witness()), Map::new())
                }
                Err(_) => (None, Map::new()),
            }
        }
        Variant::TwoFour => {
            let spec = split.ok_or_else(|| Error::BadParams("the (2,4) variant needs --split".into()))?;
            let s = parse_split(g, spec)?;
            let r = restrict::find_24_structure(g, &s)?;
            let mut e = Map::new();
            e.insert("outcome".into(), serde_json::to_value(r.outcome).unwrap());
            let names = |v: &[usize]| -> Vec<String> { v.iter().map(|&i| g.names()[i].clone()).collect() };
            if !r.no_square.is_empty() {
                e.insert("no_square_for".into(), json!(names(&r.no_square)));
            }
            let w = match r.outcome {
                TwoFourOutcome::TwoFour | TwoFourOutcome::Full2 => r.witness,
                _ => None,
            };
            (w, e)
        }
        Variant::TwoFourFour => {
            let spec = split.ok_or_else(|| Error::BadParams("the (2,4)|4 variant needs --split".into()))?;
            let s = parse_split(g, spec)?;
            let r = restrict::find_244_structure(g, &s)?;
            (r.witness, Map::new())
        }
    };
    m.extend(extra);
    m.insert("found".into(), json!(witness.is_some()));
    if let Some(w) = &witness {
        m.insert("witness".into(), json!(witness_lines(g, w)));
        let bad = restrict::verify_witness(g, w)?;
        if !bad.is_empty() {
            return Err(Error::TheoremCheckFailed(format!("solver witness fails re-verification at {} places", bad.len())));
        }
    }
    if let Some(exp) = &inp.file.witness {
        let bad = restrict::verify_witness(g, exp)?;
        let mut e = Map::new();
        e.insert("variant".into(), json!(exp.variant.label()));
        e.insert("holds".into(), json!(bad.is_empty()));
        e.insert("violations".into(), json!(bad.len()));
        if let Some(w) = &witness {
            e.insert("equals_found".into(), json!(w.table_p == exp.table_p && w.table_2p_or_4 == exp.table_2p_or_4));
        }
        m.insert("expected_witness".into(), Value::Object(e));
    }
    Ok(Report {
        value: Value::Object(m),
        code: if witness.is_some() { EXIT_OK } else { EXIT_ABSENT },
        kind: Some(CertKind::Witness),
        evidence: witness.map(|w| serde_json::to_value(w).unwrap()),
    })
}

fn write_algebra(out: Option<&Path>, g: &SuperAlgebra) -> Result<()> {
    if let Some(path) = out {
        std::fs::write(path, AlgebraFile::new(g.clone()).to_canonical())
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn closure_cmd(inp: &Input, one_step: bool, graded: Option<&str>, out: Option<&Path>) -> Result<Report> {
    let g = &inp.file.algebra;
    let (kind, c) = match (one_step, graded) {
        (true, _) => ("one-step", restrict::one_step_closure(g)?),
        (false, Some(spec)) => ("graded", restrict::minimal_graded_closure(g, &parse_split(g, spec)?)?),
        (false, None) => ("restricted", restrict::restricted_closure(g)?),
    };
    write_algebra(out, &c.algebra)?;
    let mut m = header("closure", inp);
    m.insert("closure".into(), json!(kind));
    m.insert("closure_dim".into(), json!(sdim(&c.algebra)));
    m.insert("added".into(), json!(c.algebra.dim() - c.base));
    m.insert("rounds".into(), json!(c.rounds));
    Ok(Report::new(Value::Object(m)))
}

fn queerify_cmd(inp: &Input, ctx: &Ctx, out: Option<&Path>) -> Result<Report> {
    let q = superize::queerify(&inp.file.algebra)?;
    let v = superalg::is_simple(&q.algebra, &ctx.opts());
    construction_report("queerify", inp, &q.algebra, Some(&v), out)
}

fn construction_report(
    cmd: &str,
    inp: &Input,
    out_alg: &SuperAlgebra,
    verdict: Option<&SimplicityVerdict>,
    out: Option<&Path>,
) -> Result<Report> {
    write_algebra(out, out_alg)?;
    let mut m = header(cmd, inp);
    m.insert("result_dim".into(), json!(sdim(out_alg)));
    m.insert("result_axioms".into(), json!(out_alg.check_axioms().passed()));
    let mut code = EXIT_OK;
    if let Some(v) = verdict {
        m.insert("result_simple".into(), verdict_value(out_alg, v));
        if !v.simple {
            code = EXIT_ABSENT;
        }
    }
    Ok(Report {
        value: Value::Object(m),
        code,
        kind: Some(CertKind::Simplicity),
        evidence: verdict.map(|v| serde_json::to_value(v).unwrap()),
    })
}

fn classify_cmd(inp: &Input, ctx: &Ctx) -> Result<Report> {
    let g = &inp.file.algebra;
    let c = superize::classify_origin(g, &ctx.opts())?;
    let mut m = header("classify-origin", inp);
    m.insert("verdict".into(), serde_json::to_value(c.verdict).unwrap());
    m.insert("h_dim".into(), json!(format!("{}|{}", c.h_dims.0, c.h_dims.1)));
    m.insert("intertwiner_dim".into(), json!(c.intertwiner_dim));
    m.insert("candidates_checked".into(), json!(c.candidates_checked));
    m.insert("solutions_found".into(), json!(c.solutions_found));
    m.insert("bounded_search".into(), json!(c.bounded_search));
    Ok(Report {
        value: Value::Object(m),
        code: EXIT_OK,
        kind: Some(CertKind::Origin),
        evidence: Some(serde_json::to_value(&c).unwrap()),
    })
}

// ---------------------------------------------------------------- prolong

fn parse_shear(s: &str) -> Result<Vec<u32>> {
    s.split([',', ':'])
        .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad shearing entry {x:?}"))))
        .collect()
}

fn matrix_family(r: &CatalogRef) -> Result<Option<(Field, usize, Vec<Matrix>)>> {
    if !matches!(r.family.as_str(), "gl" | "sl" | "o_I" | "osl_I" | "ZD" | "o_Pi") || r.inner.is_some() {
        return Ok(None);
    }
    let p = r.params.get("p").map_or(Ok(2), |v| v.parse::<u32>()).map_err(|_| Error::Parse("bad p".into()))?;
    let k = r.params.get("k").map_or(Ok(1), |v| v.parse::<u32>()).map_err(|_| Error::Parse("bad k".into()))?;
    let n: usize = r
        .params
        .get("n")
        .ok_or_else(|| Error::BadParams(format!("{} needs n", r.family)))?
        .parse()
        .map_err(|_| Error::Parse("bad n".into()))?;
    let f = ff_make(p, k, None)?;
    let basis = catalog::matrix::linear_basis(&f, &r.family, n)?;
    let mats = basis.iter().map(|v| Matrix::unflatten(&f, n, v)).collect();
    Ok(Some((f, n, mats)))
}

fn prolong_value(r: &ProlongResult) -> Map<String, Value> {
    let mut m = Map::new();
    let dims = r.graded_dims();
    let (e, o) = dims.values().fold((0, 0), |(a, b), &(x, y)| (a + x, b + y));
    m.insert("graded_dims".into(), dims_value(&dims));
    m.insert("total_dim".into(), json!(format!("{e}|{o}")));
    m.insert("stabilized_at".into(), json!(r.stabilized_at));
    m.insert("transitivity_defects".into(), json!(prolong::transitivity_defects(r).len()));
    m
}

fn prolong_cmd(family: &str, shear: Option<&str>) -> Result<Report> {
    let r = CatalogRef::parse(family)?;
    let shear = shear.map(parse_shear).transpose()?;
    let mut m = Map::new();
    m.insert("command".into(), json!("prolong"));
    m.insert("family".into(), json!(family));
    let run = |shear: Option<&[u32]>| -> Result<(ProlongResult, Option<bool>)> {
        if r.family == "phi" {
            if shear.is_some() {
                return Err(Error::BadParams("phi lives in vect(n; N_s | n); --N is not accepted".into()));
            }
            let p = r.params.get("p").map_or("2", String::as_str).parse::<u32>().map_err(|_| Error::Parse("bad p".into()))?;
            let n = r.params.get("n").ok_or_else(|| Error::BadParams("phi needs n".into()))?;
            let n: usize = n.parse().map_err(|_| Error::Parse("bad n".into()))?;
            let with_j = r.params.get("J").is_some_and(|v| v == "1");
            let f = ff_make(p, 1, None)?;
            let e = prolong::embed_phi(&f, n)?;
            let res = prolong::cartan_prolong(&e.nonpositive(with_j)?)?;
            // compare with phi(q(n+1)) degree by degree
            let mut same = true;
            for d in -1..=1 {
                let img = Subspace::from_vectors(&f, e.ambient.dim(), &e.image_of_degree(d));
                same &= res.span(d) == img;
            }
            same &= res.components.range(2..).all(|(_, vs)| vs.is_empty());
            return Ok((res, Some(same)));
        }
        if let Some((f, n, mats)) = matrix_family(&r)? {
            let sh = shear.map(<[u32]>::to_vec).unwrap_or_else(|| vec![1; n]);
            if sh.len() != n {
                return Err(Error::BadParams(format!("--N needs {n} entries")));
            }
            let emb = prolong::linear_embedding(&f, &sh, &mats)?;
            return Ok((prolong::cartan_prolong(&emb)?, None));
        }
        let mut rr = r.clone();
        if let Some(sh) = shear {
            rr.params.insert("N".into(), sh.iter().map(u32::to_string).collect::<Vec<_>>().join(":"));
            rr.params.remove("n");
        }
        let built = catalog::build_ref(&rr)?;
        let v = built.vectorial.ok_or(Error::NotVectorial)?;
        let emb = prolong::nonpositive_part(&v.space, &v.fields)?;
        let res = prolong::cartan_prolong(&emb)?;
        let f = v.space.field().clone();
        let mut same = true;
        for (&d, vs) in &res.components {
            let mine: Vec<Vector> = v.fields.iter().filter(|x| v.space.degree_of(x) == Some(d)).cloned().collect();
            same &= Subspace::from_vectors(&f, v.space.dim(), &mine) == Subspace::from_vectors(&f, v.space.dim(), vs);
        }
        Ok((res, Some(same)))
    };
    let (res, equals) = run(shear.as_deref())?;
    m.extend(prolong_value(&res));
    if let Some(eq) = equals {
        let key = if r.family == "phi" { "equals_phi_image" } else { "equals_input" };
        m.insert(key.into(), json!(eq));
    }
    if r.family != "phi" {
        // re-run with every coordinate of N raised by one
        let base: Vec<u32> = match &shear {
            Some(s) => s.clone(),
            None => match matrix_family(&r)? {
                Some((_, n, _)) => vec![1; n],
                None => {
                    let built = catalog::build_ref(&r)?;
                    built.vectorial.ok_or(Error::NotVectorial)?.space.dp.shear().to_vec()
                }
            },
        };
        let bigger: Vec<u32> = base.iter().map(|x| x + 1).collect();
        let (res2, _) = run(Some(&bigger))?;
        let small = res.graded_dims();
        let large = res2.graded_dims();
        let differs = small.iter().any(|(d, v)| large.get(d) != Some(v));
        m.insert("shear".into(), json!(base));
        m.insert(
            "rerun".into(),
            json!({"shear": bigger, "graded_dims": dims_value(&large), "differs": differs}),
        );
    }
    Ok(Report { value: Value::Object(m), code: EXIT_OK, kind: Some(CertKind::ProlongEquality), evidence: None })
}

fn qg_cmd(g0: &str, module: &str) -> Result<Report> {
    let (field, mats, n) = if g0.trim() == "0" {
        let n = module
            .strip_prefix('K')
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| Error::BadParams("with g0 = 0 the module must be K<n>".into()))?;
        (ff_make(2, 1, None)?, Vec::new(), n)
    } else {
        let r = CatalogRef::parse(g0)?;
        let (f, n, mats) = matrix_family(&r)?
            .ok_or_else(|| Error::BadParams(format!("{g0:?} is not a matrix family (gl, sl, o_I, osl_I, ZD, o_Pi)")))?;
        match module {
            "id" => {}
            m if m.strip_prefix('K').and_then(|s| s.parse::<usize>().ok()) == Some(n) => {}
            m => return Err(Error::BadParams(format!("module {m:?} does not fit {n}x{n} matrices"))),
        }
        (f, mats, n)
    };
    let rep = prolong::check_qg_eq_gq(&field, n, &mats)?;
    let mut m = Map::new();
    m.insert("command".into(), json!("qg-eq-gq"));
    m.insert("g0".into(), json!(g0));
    m.insert("module".into(), json!(module));
    m.insert("equal".into(), json!(rep.equal));
    m.insert("dims_qg".into(), dims_value(&rep.dims_qg));
    m.insert("dims_gq".into(), dims_value(&rep.dims_gq));
    m.insert("dims_g".into(), json!(rep.dims_g.iter().map(|(d, k)| format!("{d}: {k}")).collect::<Vec<_>>()));
    if let Some(d) = rep.first_mismatch {
        m.insert("first_mismatch_degree".into(), json!(d));
    }
    Ok(Report {
        value: Value::Object(m),
        code: if rep.equal { EXIT_OK } else { EXIT_ABSENT },
        kind: Some(CertKind::ProlongEquality),
        evidence: None,
    })
}

// ---------------------------------------------------------------- catalog

fn catalog_cmd(action: &CatalogCmd, json_out: bool) -> Result<Outcome> {
    match action {
        CatalogCmd::List => {
            let entries: Vec<Value> = catalog::FAMILIES
                .iter()
                .map(|(n, d)| json!({"name": n, "params": d}))
                .collect();
            let stdout = if json_out {
                pretty(&json!({"families": entries}))
            } else {
                catalog::FAMILIES.iter().map(|(n, d)| format!("{n:<10} {d}\n")).collect()
            };
            Ok(Outcome { code: EXIT_OK, stdout, stderr: String::new() })
        }
        CatalogCmd::Emit { name, out } => {
            let built = catalog::build(name)?;
            let mut file = AlgebraFile::new(built.algebra);
            file.metadata.insert("source".into(), format!("catalog {name}"));
            let text = file.to_canonical();
            match out {
                Some(p) if p.as_os_str() != "-" => {
                    std::fs::write(p, &text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
                    Ok(Outcome { code: EXIT_OK, stdout: String::new(), stderr: String::new() })
                }
                _ => Ok(Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }),
            }
        }
    }
}

// ---------------------------------------------------------------- recheck

fn recheck(cert_path: &Path, input: &str) -> Result<Report> {
    let cert = Certificate::from_json(&crate::format::read_text(cert_path)?)?;
    let payload = cert.payload.as_object().ok_or_else(|| Error::Parse("certificate payload is not an object".into()))?;
    let argv: Vec<String> = serde_json::from_value(payload.get("argv").cloned().unwrap_or(Value::Null))
        .map_err(|_| Error::Parse("certificate has no argv".into()))?;
    let seed = payload.get("seed").and_then(Value::as_u64).unwrap_or(0);
    let stored = payload.get("report").cloned().unwrap_or(Value::Null);

    let mut full = vec!["lieforge".to_string()];
    full.extend(argv.iter().cloned());
    let cli = Cli::try_parse_from(&full).map_err(|e| Error::Parse(format!("certificate argv: {e}")))?;
    let cmd = substitute_input(&cli.cmd, input);
    let ctx2 = Ctx { seed, mod_center: cli.mod_center };
    if let Some(i) = command_input(&cmd) {
        if !cert.matches_input(&load_input(&i, &ctx2)?.bytes) {
            return Err(Error::CertificateMismatch(format!("input digest differs from {}", cert.input_digest)));
        }
    }
    let (report, digest_input) = dispatch(&cmd, &ctx2)?;
    if !cert.matches_input(&digest_input) {
        return Err(Error::CertificateMismatch(format!("input digest differs from {}", cert.input_digest)));
    }
    if Some(cert.kind) != report.kind {
        return Err(Error::CertificateMismatch("certificate kind does not match the command".into()));
    }
    // the input may be named differently this time
    let strip = |v: &Value| {
        let mut v = v.clone();
        if let Value::Object(m) = &mut v {
            m.remove("input");
        }
        v
    };
    if strip(&report.value) != strip(&stored) {
        return Err(Error::CertificateMismatch("re-derived report differs from the certified one".into()));
    }
    let mut checks = vec!["input digest", "report re-derived"];
    if let Some(ev) = payload.get("evidence") {
        independent_check(cert.kind, ev, &cmd, &ctx2)?;
        checks.push("evidence re-verified");
    }
    let mut m = Map::new();
    m.insert("command".into(), json!("recheck"));
    m.insert("kind".into(), serde_json::to_value(cert.kind).unwrap());
    m.insert("checks".into(), json!(checks));
    m.insert("status".into(), json!("pass"));
    Ok(Report::new(Value::Object(m)))
}

fn command_input(cmd: &Cmd) -> Option<String> {
    match cmd {
        Cmd::Verify { .. } | Cmd::Prolong { .. } | Cmd::QgEqGq { .. } | Cmd::Catalog { .. } | Cmd::Recheck { .. } => None,
        Cmd::Derived { input, .. }
        | Cmd::Center { input }
        | Cmd::Simple { input }
        | Cmd::PStructure { input, .. }
        | Cmd::Closure { input, .. }
        | Cmd::Queerify { input, .. }
        | Cmd::PartialQueerify { input, .. }
        | Cmd::Method2 { input, .. }
        | Cmd::ClassifyOrigin { input } => Some(input.clone()),
    }
}

fn substitute_input(cmd: &Cmd, input: &str) -> Cmd {
    let mut c = cmd.clone();
    match &mut c {
        Cmd::Verify { input: i }
        | Cmd::Derived { input: i, .. }
        | Cmd::Center { input: i }
        | Cmd::Simple { input: i }
        | Cmd::PStructure { input: i, .. }
        | Cmd::Closure { input: i, .. }
        | Cmd::Queerify { input: i, .. }
        | Cmd::PartialQueerify { input: i, .. }
        | Cmd::Method2 { input: i, .. }
        | Cmd::ClassifyOrigin { input: i } => *i = input.to_string(),
        _ => {}
    }
    // outputs are never rewritten during a recheck
    match &mut c {
        Cmd::Closure { out, .. } | Cmd::Queerify { out, .. } | Cmd::PartialQueerify { out, .. } | Cmd::Method2 { out, .. } => {
            *out = None
        }
        _ => {}
    }
    c
}

/// Checks the evidence directly, without trusting the search that found it.
fn independent_check(kind: CertKind, ev: &Value, cmd: &Cmd, ctx: &Ctx) -> Result<()> {
    let input = match cmd {
        Cmd::Simple { .. } | Cmd::PStructure { .. } | Cmd::ClassifyOrigin { .. } => command_input(cmd).unwrap(),
        _ => return Ok(()),
    };
    let inp = load_input(&input, ctx)?;
    let g = &inp.file.algebra;
    match kind {
        CertKind::Witness => {
            let w: StructureWitness =
                serde_json::from_value(ev.clone()).map_err(|e| Error::Parse(format!("witness evidence: {e}")))?;
            let bad = restrict::verify_witness(g, &w)?;
            if !bad.is_empty() {
                return Err(Error::CertificateMismatch(format!("witness fails at {} places", bad.len())));
            }
        }
        CertKind::Simplicity => {
            let ideal = ev.get("proper_ideal").cloned().unwrap_or(Value::Null);
            if !ideal.is_null() {
                let vs: Vec<Vector> = serde_json::from_value(ideal).map_err(|e| Error::Parse(e.to_string()))?;
                let s = Subspace::from_vectors(g.field(), g.dim(), &vs);
                if s.is_zero() || s.is_full() || !superalg::is_ideal(g, &s, IdealMode::WithSquares) {
                    return Err(Error::CertificateMismatch("recorded ideal is not a proper ideal".into()));
                }
            }
        }
        CertKind::Origin => {
            let h: Vec<Vector> = serde_json::from_value(ev.get("h_even").cloned().unwrap_or(Value::Null))
                .map_err(|e| Error::Parse(format!("origin evidence: {e}")))?;
            let s = Subspace::from_vectors(g.field(), g.dim(), &h);
            let odd = g.odd_indices();
            let mut span = Vec::new();
            for &a in &odd {
                for &b in &odd {
                    span.push(g.bracket(&g.unit(a), &g.unit(b)));
                }
            }
            if s != Subspace::from_vectors(g.field(), g.dim(), &span) {
                return Err(Error::CertificateMismatch("recorded h_ev is not [g_od, g_od]".into()));
            }
        }
        CertKind::ProlongEquality => {}
    }
    Ok(())
}

// ---------------------------------------------------------------- text

/// Line-oriented rendering of a report value; object keys come out sorted.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(if *b { "yes".into() } else { "no".into() }),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn render_into(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Array(items) if items.iter().all(|i| scalar(i).is_some()) => {
                        if items.len() <= 8 && items.iter().all(|i| !matches!(i, Value::String(_))) {
                            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
                            out.push_str(&format!("{pad}{k}: [{}]\n", parts.join(", ")));
                        } else {
                            out.push_str(&format!("{pad}{k}:\n"));
                            for i in items {
                                out.push_str(&format!("{pad}  {}\n", scalar(i).unwrap()));
                            }
                        }
                    }
                    Value::Array(_) | Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(out, x, depth + 1);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x).unwrap())),
                }
            }
        }
        Value::Array(items) => {
            for i in items {
                match scalar(i) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_into(out, i, depth + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap())),
    }
}
