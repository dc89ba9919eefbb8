//! The `hopftrace` command line: load or build a spec, run a verification
//! suite, print integrals or a trace table.
//!
//! Exit codes: 0 when every check passes, 1 when some check fails, 2 on a
//! parse or spec error.

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{root_of_unity, Cyclo};
use crate::graded::{
    build_borel, check_g_integral, check_graded_axioms, check_graded_radford, check_phi_psi, check_rintrel,
    g_integral_at, graded_comodulus, graded_modulus, symmetrised_g_integral_at, BorelFamily, GradedHopf, GroupElem,
};
use crate::hopfcore::{
    build_cyclic_group_algebra, build_taft, check_hopf_axioms, check_mu_ab, check_radford_s4, comodulus,
    left_cointegral, left_integrals, modulus, right_cointegral, right_integrals, symmetrised_integral, Functional,
    HopfJson, HopfSpec, SpecFile,
};
use crate::report::Report;
use crate::rep::{check_duality_maps, duality_maps, hom_space, trivial_module};
use crate::trace::{
    builtin_projectives, check_cyclicity, check_duality_compat, check_hh0_round_trips,
    check_left_partial_trace_property, check_nondegeneracy, check_partial_trace_property,
    graded_trace_space_dimension, standard_generator, trace_space, ModuleTrace, ProjModule, TraceFamily,
};

#[derive(Parser, Debug)]
#[command(name = "hopftrace", version, about = "Exact integrals and module traces of pivotal Hopf algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a verification suite; exit 1 if any check fails.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[command(flatten)]
        output: Output,
    },
    /// Print integrals, cointegrals, modulus and comodulus.
    Integrals {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Print trace values on the standard generators of Hom(P, ΣP).
    TraceTable {
        #[command(flatten)]
        source: Source,
        /// `modulus`, `counit`, or a JSON list of values on the basis.
        #[arg(long, default_value = "modulus")]
        nu: String,
        #[command(flatten)]
        output: Output,
    },
    /// Print the spec file of the selected algebra.
    Emit {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    #[arg(long, value_enum, conflicts_with = "spec")]
    pub builder: Option<Builder>,
    #[arg(long, default_value_t = 2)]
    pub r: usize,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub n_pivot: i64,
    /// JSON list of grades, `[{"w": .., "x": ..}]` or `[[w, x]]`.
    #[arg(long)]
    pub grades: Option<String>,
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Add decimal renderings next to exact values.
    #[arg(long)]
    pub approx: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builder {
    Taft,
    Cyclic,
    Borel,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Radford,
    PhiPsi,
    Trace,
    Duality,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

/// A loaded algebra: an ordinary Hopf algebra or a Borel family with its
/// grade sample.
#[derive(Clone)]
pub enum Loaded {
    Plain(Arc<HopfSpec>),
    Borel { family: Arc<BorelFamily>, grades: Vec<GroupElem> },
}

impl Loaded {
    pub fn graded(&self) -> Arc<dyn GradedHopf> {
        match self {
            Loaded::Plain(h) => h.clone(),
            Loaded::Borel { family, .. } => family.clone(),
        }
    }

    pub fn grades(&self) -> Vec<GroupElem> {
        match self {
            Loaded::Plain(_) => vec![GroupElem::unit()],
            Loaded::Borel { grades, .. } => grades.clone(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Loaded::Plain(h) => h.name(),
            Loaded::Borel { family, .. } => format!("borel(r={}, n={})", family.r, family.n_pivot),
        }
    }

    /// The spec file this algebra is emitted as.
    pub fn to_spec_file(&self) -> SpecFile {
        match self {
            Loaded::Plain(h) => SpecFile::Spec(Box::new(HopfJson::from(&**h))),
            Loaded::Borel { family, grades } => SpecFile::Builder(crate::hopfcore::BuilderDirective {
                builder: "borel".into(),
                r: family.r,
                n_pivot: family.n_pivot,
                grades: Some(grades.clone()),
            }),
        }
    }
}

/// `(1, 0)`, `(q, 0)` and `(1, 1)` with `q = ζ_{2r}`.
pub fn default_borel_grades(r: usize) -> Vec<GroupElem> {
    vec![
        GroupElem::unit(),
        GroupElem::new(root_of_unity(2 * r as u32, 1), Cyclo::zero()),
        GroupElem::new(Cyclo::one(), Cyclo::one()),
    ]
}

pub fn parse_grades(s: &str) -> Result<Vec<GroupElem>> {
    if let Ok(g) = serde_json::from_str::<Vec<GroupElem>>(s) {
        return check_grades(g);
    }
    let pairs: Vec<(Cyclo, Cyclo)> = serde_json::from_str(s).map_err(|e| Error::Parse(format!("grades: {e}")))?;
    check_grades(pairs.into_iter().map(|(w, x)| GroupElem { w, x }).collect())
}

fn check_grades(g: Vec<GroupElem>) -> Result<Vec<GroupElem>> {
    if g.is_empty() {
        return Err(Error::Parse("grades: empty list".into()));
    }
    if g.iter().any(|e| e.w.is_zero()) {
        return Err(Error::Parse("grades: w must be nonzero".into()));
    }
    Ok(g)
}

fn build(builder: Builder, r: usize, n_pivot: i64, grades: Option<Vec<GroupElem>>) -> Result<Loaded> {
    if r < 2 {
        return Err(Error::Malformed(format!("r must be at least 2, got {r}")));
    }
    Ok(match builder {
        Builder::Taft => Loaded::Plain(Arc::new(build_taft(r))),
        Builder::Cyclic => Loaded::Plain(Arc::new(build_cyclic_group_algebra(r))),
        Builder::Borel => Loaded::Borel {
            family: Arc::new(build_borel(r, n_pivot)),
            grades: grades.unwrap_or_else(|| default_borel_grades(r)),
        },
    })
}

fn parse_builder(name: &str) -> Result<Builder> {
    Builder::from_str(name, true).map_err(|_| Error::Parse(format!("unknown builder {name:?}")))
}

/// Reads a spec file's contents.
pub fn load_spec_str(s: &str, grades: Option<Vec<GroupElem>>) -> Result<Loaded> {
    let file: SpecFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    match file {
        SpecFile::Builder(d) => build(parse_builder(&d.builder)?, d.r, d.n_pivot, grades.or(d.grades)),
        SpecFile::Spec(j) => Ok(Loaded::Plain(Arc::new(HopfSpec::try_from(*j)?))),
    }
}

pub fn load(src: &Source) -> Result<Loaded> {
    let grades = src.grades.as_deref().map(parse_grades).transpose()?;
    match (&src.spec, src.builder) {
        (Some(path), _) => {
            let s = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            load_spec_str(&s, grades)
        }
        (None, Some(b)) => build(b, src.r, src.n_pivot, grades),
        (None, None) => Err(Error::Parse("one of --builder or --spec is required".into())),
    }
}

/// Structural axioms, checked before anything else runs.
pub fn axioms_report(l: &Loaded) -> Result<Report> {
    match l {
        Loaded::Plain(h) => Ok(check_hopf_axioms(h)),
        Loaded::Borel { family, grades } => check_graded_axioms(&**family, grades),
    }
}

fn radford_report(l: &Loaded) -> Result<Report> {
    let mut rep = Report::new();
    match l {
        Loaded::Plain(h) => {
            rep.extend(check_radford_s4(h)?);
            rep.extend(check_mu_ab(h)?);
        }
        Loaded::Borel { family, grades } => {
            rep.extend(check_graded_radford(&**family, grades)?);
            rep.extend(check_g_integral(&**family, grades)?);
            rep.extend(check_rintrel(&**family, grades)?);
        }
    }
    Ok(rep)
}

fn phi_psi_report(l: &Loaded) -> Result<Report> {
    let h = l.graded();
    let grades = l.grades();
    let pairs: Vec<(usize, usize)> = (0..grades.len()).flat_map(|i| (0..grades.len()).map(move |j| (i, j))).collect();
    let parts = pairs
        .par_iter()
        .map(|&(i, j)| check_phi_psi(&*h, &grades[i], &grades[j]).map(|r| (i, j, r)))
        .collect::<Result<Vec<_>>>()?;
    let mut rep = Report::new();
    for (i, j, r) in parts {
        rep.extend_prefixed(&format!("[{i},{j}]"), r);
    }
    Ok(rep)
}

/// Built-in projective covers, or the regular module when the spec carries
/// no family.
fn projectives(h: &dyn GradedHopf, x: &GroupElem) -> Result<Vec<ProjModule>> {
    match builtin_projectives(h, x) {
        Ok(v) => Ok(v),
        Err(Error::Unsupported(_)) => Ok(vec![ProjModule::regular(h, x)?]),
        Err(e) => Err(e),
    }
}

fn trace_report(l: &Loaded) -> Result<Report> {
    let h = l.graded();
    h.piece(&GroupElem::unit())?.pivot()?;
    let t = TraceFamily::canonical(h.clone())?;
    let unit_mods = projectives(&*h, &GroupElem::unit())?;
    let triv = trivial_module(&*h)?;
    let grades = l.grades();
    let parts = grades
        .par_iter()
        .enumerate()
        .map(|(gi, x)| -> Result<Report> {
            let mods = projectives(&*h, x)?;
            let mut rep = Report::new();
            rep.extend(check_cyclicity(&*h, &t, &mods)?);
            for p in &mods {
                rep.extend(check_partial_trace_property(&*h, &t, p, &triv, "1")?);
                for v in &unit_mods {
                    rep.extend(check_partial_trace_property(&*h, &t, p, &v.module, &v.label)?);
                }
                for q in &mods {
                    rep.extend(check_nondegeneracy(&t, p, q)?);
                }
            }
            let mut out = Report::new();
            out.extend_prefixed(&format!("grade{gi}"), rep);
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rep = Report::new();
    for p in parts {
        rep.extend(p);
    }
    let dim = graded_trace_space_dimension(&*h, &t.nu, &grades)?;
    rep.record("trace-space-dimension", dim == 1, format!("dimension {dim}"));
    Ok(rep)
}

fn duality_report(l: &Loaded) -> Result<Report> {
    let h = l.graded();
    h.piece(&GroupElem::unit())?.pivot()?;
    let t = TraceFamily::canonical(h.clone())?;
    let one = GroupElem::unit();
    let mods = projectives(&*h, &one)?;
    let left = match l {
        Loaded::Plain(spec) => Some(TraceFamily::left_canonical(spec)?),
        Loaded::Borel { .. } => None,
    };
    let items: Vec<(usize, usize)> = (0..mods.len()).flat_map(|i| (0..mods.len()).map(move |j| (i, j))).collect();
    let parts = items
        .par_iter()
        .map(|&(i, j)| -> Result<Report> {
            let (u, v) = (&mods[i], &mods[j]);
            let mut rep = Report::new();
            rep.extend(check_duality_compat(&*h, &t, u, &v.module, &v.label, &u.module)?);
            if let Some(left) = &left {
                rep.extend(check_left_partial_trace_property(&*h, left, &v.module, &v.label, u)?);
            }
            Ok(rep)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rep = Report::new();
    for v in &mods {
        let maps = duality_maps(&*h, &v.module)?;
        rep.extend_prefixed(&v.label, check_duality_maps(&*h, &v.module, &maps)?);
    }
    for p in parts {
        rep.extend(p);
    }
    if let Loaded::Plain(_) = l {
        let phi = t.twist_matrix(&one)?;
        rep.extend(check_hh0_round_trips(&*h, &phi, &mods, 1)?);
    }
    Ok(rep)
}

pub fn run_suite(l: &Loaded, suite: Suite) -> Result<Report> {
    let mut rep = Report::new();
    let wanted = |s: Suite| suite == Suite::All || suite == s;
    if wanted(Suite::Axioms) {
        rep.extend_prefixed("axioms", axioms_report(l)?);
    }
    if wanted(Suite::Radford) {
        rep.extend_prefixed("radford", radford_report(l)?);
    }
    if wanted(Suite::PhiPsi) {
        rep.extend_prefixed("phi-psi", phi_psi_report(l)?);
    }
    if wanted(Suite::Trace) {
        rep.extend_prefixed("trace", trace_report(l)?);
    }
    if wanted(Suite::Duality) {
        rep.extend_prefixed("duality", duality_report(l)?);
    }
    Ok(rep)
}

fn value_json(c: &Cyclo, approx: bool) -> Value {
    if approx {
        json!({"exact": c.to_string(), "approx": c.approx_string()})
    } else {
        json!(c.to_string())
    }
}

fn tsv_value(c: &Cyclo, approx: bool) -> String {
    if approx {
        format!("{c}\t{}", c.approx_string())
    } else {
        c.to_string()
    }
}

/// A named vector or functional, as its nonzero coordinates keyed by basis
/// label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quantity {
    pub grade: Option<GroupElem>,
    pub name: String,
    pub values: Vec<(String, Cyclo)>,
}

fn quantity(grade: Option<&GroupElem>, name: &str, labels: &[String], v: &[Cyclo]) -> Quantity {
    Quantity {
        grade: grade.cloned(),
        name: name.into(),
        values: labels.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(l, c)| (l.clone(), c.clone())).collect(),
    }
}

pub fn integrals_table(l: &Loaded) -> Result<Vec<Quantity>> {
    let mut qs = Vec::new();
    match l {
        Loaded::Plain(h) => {
            let labels = h.alg.labels();
            let first = |mut v: Vec<Functional>| v.remove(0).coeffs;
            qs.push(quantity(None, "right-integral", labels, &first(right_integrals(h)?)));
            qs.push(quantity(None, "left-integral", labels, &first(left_integrals(h)?)));
            qs.push(quantity(None, "left-cointegral", labels, &left_cointegral(h)?));
            qs.push(quantity(None, "right-cointegral", labels, &right_cointegral(h)?));
            qs.push(quantity(None, "modulus", labels, &modulus(h)?.coeffs));
            qs.push(quantity(None, "comodulus", labels, &comodulus(h)?));
            if h.pivot.is_some() {
                qs.push(quantity(None, "symmetrised-integral", labels, &symmetrised_integral(h)?.coeffs));
            }
        }
        Loaded::Borel { family, grades } => {
            let h: &dyn GradedHopf = &**family;
            let unit_labels = h.piece(&GroupElem::unit())?.alg.labels().to_vec();
            qs.push(quantity(None, "modulus", &unit_labels, &graded_modulus(h)?.coeffs));
            let como = graded_comodulus(h, grades)?;
            for x in grades {
                let labels = h.piece(x)?.alg.labels().to_vec();
                qs.push(quantity(Some(x), "g-integral", &labels, &g_integral_at(h, x)?.coeffs));
                qs.push(quantity(Some(x), "symmetrised-g-integral", &labels, &symmetrised_g_integral_at(h, x)?.coeffs));
                if let Some((_, a)) = como.iter().find(|(g, _)| g == x) {
                    qs.push(quantity(Some(x), "comodulus", &labels, a));
                }
            }
        }
    }
    Ok(qs)
}

/// One row of a trace table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceRow {
    pub grade: String,
    pub s: usize,
    pub generator: String,
    pub value: Cyclo,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceTable {
    pub nu: Functional,
    pub dimension: usize,
    pub rows: Vec<TraceRow>,
}

pub fn parse_nu(l: &Loaded, nu: &str) -> Result<Functional> {
    let h = l.graded();
    match nu.trim() {
        "modulus" | "alpha" | "α" => graded_modulus(&*h),
        "counit" | "eps" | "ε" => Ok(h.counit()),
        s => {
            let v: Vec<Cyclo> = serde_json::from_str(s).map_err(|e| Error::Parse(format!("nu: {e}")))?;
            if v.len() != h.counit().dim() {
                return Err(Error::Parse(format!("nu has {} values, expected {}", v.len(), h.counit().dim())));
            }
            Ok(Functional::new(v))
        }
    }
}

pub fn trace_table(l: &Loaded, nu: &Functional) -> Result<TraceTable> {
    let h = l.graded();
    h.piece(&GroupElem::unit())?.pivot()?;
    let grades = l.grades();
    let dimension = graded_trace_space_dimension(&*h, nu, &grades)?;
    if dimension == 0 {
        return Ok(TraceTable { nu: nu.clone(), dimension, rows: Vec::new() });
    }
    let t = if *nu == graded_modulus(&*h)? {
        TraceFamily::canonical(h.clone())?
    } else if let Loaded::Plain(_) = l {
        let form = trace_space(&*h, nu)?.remove(0);
        TraceFamily::with_forms(h.clone(), nu.clone(), vec![(GroupElem::unit(), form)])
    } else {
        return Err(Error::Unsupported("explicit twist on a graded family".into()));
    };
    let per_grade = grades
        .par_iter()
        .map(|x| -> Result<Vec<TraceRow>> {
            let mut rows = Vec::new();
            for (s, p) in projectives(&*h, x)?.iter().enumerate() {
                let sp = t.sigma(&p.module)?;
                let homs = hom_space(&p.module, &sp);
                if homs.len() == 1 {
                    let f = standard_generator(&homs).expect("nonempty");
                    rows.push(TraceRow { grade: x.to_string(), s, generator: format!("R^{s}"), value: t.trace(p, &f)? });
                } else {
                    for (i, f) in homs.iter().enumerate() {
                        rows.push(TraceRow { grade: x.to_string(), s, generator: format!("f{i}"), value: t.trace(p, f)? });
                    }
                }
            }
            Ok(rows)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TraceTable { nu: nu.clone(), dimension, rows: per_grade.into_iter().flatten().collect() })
}

fn render_report(l: &Loaded, rep: &Report, output: &Output) -> String {
    match output.format {
        Format::Json => {
            let v = json!({"spec": l.name(), "passed": rep.passed(), "checks": rep.checks});
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        Format::Tsv => {
            let mut s = String::from("check\tpassed\tcounterexample\tcontext\n");
            for c in &rep.checks {
                let ce = c.counterexample.as_ref().map(|v| format!("{v:?}")).unwrap_or_default();
                s += &format!("{}\t{}\t{}\t{}\n", c.name, c.passed, ce, c.context);
            }
            s
        }
    }
}

fn render_integrals(l: &Loaded, output: &Output) -> Result<String> {
    let table = integrals_table(l)?;
    let grade = |q: &Quantity| q.grade.as_ref().map(|g| g.to_string()).unwrap_or_else(|| "1".into());
    Ok(match output.format {
        Format::Json => {
            let qs: Vec<Value> = table
                .iter()
                .map(|q| {
                    let vals: serde_json::Map<String, Value> =
                        q.values.iter().map(|(k, c)| (k.clone(), value_json(c, output.approx))).collect();
                    json!({"grade": grade(q), "name": q.name, "values": vals})
                })
                .collect();
            serde_json::to_string_pretty(&json!({"spec": l.name(), "quantities": qs})).expect("serializable") + "\n"
        }
        Format::Tsv => {
            let mut s = String::from("grade\tquantity\tbasis\tvalue");
            s += if output.approx { "\tapprox\n" } else { "\n" };
            for q in &table {
                for (label, c) in &q.values {
                    s += &format!("{}\t{}\t{label}\t{}\n", grade(q), q.name, tsv_value(c, output.approx));
                }
            }
            s
        }
    })
}

fn render_trace_table(l: &Loaded, t: &TraceTable, output: &Output) -> String {
    let note = (t.dimension == 0).then(|| format!("trace space dimension {}", t.dimension));
    match output.format {
        Format::Json => {
            let rows: Vec<Value> = t
                .rows
                .iter()
                .map(|r| json!({"grade": r.grade, "s": r.s, "generator": r.generator, "value": value_json(&r.value, output.approx)}))
                .collect();
            let mut v = json!({"spec": l.name(), "nu": t.nu.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "trace_space_dimension": t.dimension, "rows": rows});
            if let Some(n) = note {
                v["note"] = json!(n);
            }
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        Format::Tsv => {
            let mut s = String::new();
            if let Some(n) = note {
                s += &format!("# {n}\n");
            }
            s += if output.approx { "grade\ts\tgenerator\tvalue\tapprox\n" } else { "grade\ts\tgenerator\tvalue\n" };
            for r in &t.rows {
                s += &format!("{}\t{}\t{}\t{}\n", r.grade, r.s, r.generator, tsv_value(&r.value, output.approx));
            }
            s
        }
    }
}

fn emit_to(out: &Option<PathBuf>, stdout: &mut dyn Write, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Parse(format!("{}: {e}", p.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Error::Parse(e.to_string())),
    }
}

fn execute(cli: Cli, stdout: &mut Vec<u8>) -> Result<i32> {
    match cli.command {
        Command::Emit { source, out } => {
            let l = load(&source)?;
            let text = serde_json::to_string_pretty(&l.to_spec_file()).expect("serializable") + "\n";
            emit_to(&out, stdout, &text)?;
            Ok(0)
        }
        Command::Verify { source, suite, output } => {
            let l = load(&source)?;
            let axioms = axioms_report(&l)?;
            let rep = if !axioms.passed() {
                let mut r = Report::new();
                r.extend_prefixed("axioms", axioms);
                r
            } else {
                run_suite(&l, suite)?
            };
            emit_to(&output.out, stdout, &render_report(&l, &rep, &output))?;
            Ok(if rep.passed() { 0 } else { 1 })
        }
        Command::Integrals { source, output } => {
            let l = load(&source)?;
            if let Some(code) = reject_invalid(&l, &output, stdout)? {
                return Ok(code);
            }
            emit_to(&output.out, stdout, &render_integrals(&l, &output)?)?;
            Ok(0)
        }
        Command::TraceTable { source, nu, output } => {
            let l = load(&source)?;
            if let Some(code) = reject_invalid(&l, &output, stdout)? {
                return Ok(code);
            }
            let nu = parse_nu(&l, &nu)?;
            let t = trace_table(&l, &nu)?;
            emit_to(&output.out, stdout, &render_trace_table(&l, &t, &output))?;
            Ok(0)
        }
    }
}

/// Prints the failed axiom report and returns exit code 1.
fn reject_invalid(l: &Loaded, output: &Output, stdout: &mut dyn Write) -> Result<Option<i32>> {
    let axioms = axioms_report(l)?;
    if axioms.passed() {
        return Ok(None);
    }
    let mut r = Report::new();
    r.extend_prefixed("axioms", axioms);
    emit_to(&output.out, stdout, &render_report(l, &r, output))?;
    Ok(Some(1))
}

/// Thread pool capped by `HOPFTRACE_THREADS` when set.
fn pool() -> Option<rayon::ThreadPool> {
    let n: usize = std::env::var("HOPFTRACE_THREADS").ok()?.trim().parse().ok()?;
    rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build().ok()
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(stderr, "{}", e.render());
            return code;
        }
    };
    let mut buf = Vec::new();
    let result = match pool() {
        Some(p) => p.install(|| execute(cli, &mut buf)),
        None => execute(cli, &mut buf),
    };
    let _ = stdout.write_all(&buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["hopftrace"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn grades_in_both_shapes() {
        let a = parse_grades(r#"[{"w":"ζ4","x":1}]"#).unwrap();
        let b = parse_grades(r#"[["z4", 1]]"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(a[0].w, root_of_unity(4, 1));
        assert!(parse_grades("[]").is_err());
        assert!(parse_grades(r#"[[0, 1]]"#).is_err());
    }

    #[test]
    fn taft_modulus_is_printed_exactly() {
        let (code, out, _) = call(&["integrals", "--builder", "taft", "--r", "3", "--format", "tsv"]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l == "1\tmodulus\tK\tζ3"), "{out}");
    }

    #[test]
    fn trace_table_under_counit_is_empty() {
        let (code, out, _) = call(&["trace-table", "--builder", "taft", "--r", "2", "--nu", "counit", "--format", "tsv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "# trace space dimension 0\ngrade\ts\tgenerator\tvalue\n");
    }

    #[test]
    fn missing_builder_is_a_usage_error() {
        let (code, _, err) = call(&["verify"]);
        assert_eq!(code, 2);
        assert!(err.contains("--builder"));
        let (code, _, _) = call(&["verify", "--builder", "nope"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn emitted_builders_reload() {
        for b in ["taft", "cyclic", "borel"] {
            let (code, out, _) = call(&["emit", "--builder", b, "--r", "3"]);
            assert_eq!(code, 0);
            let l = load_spec_str(&out, None).unwrap();
            let again = serde_json::to_string_pretty(&l.to_spec_file()).unwrap() + "\n";
            assert_eq!(again, out);
        }
    }
}
