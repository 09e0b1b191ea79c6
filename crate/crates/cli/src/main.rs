//! `lieorb`: classify nilpotent orbits, analyse one orbit, verify a whole type
//! against the reference tables, or print the tables from live computation.

use clap::{Args, Parser, Subcommand, ValueEnum};
use lieorb::liealg::LieAlgebra;
use lieorb::orbits::{self, Characteristic, NilpotentOrbit, WeightedDynkinDiagram};
use lieorb::reach::{self, GradedDims, OrbitAnalysis};
use lieorb::refdata::{Discrepancy, RefData};
use lieorb::{Element, TypeRank, Q};
use serde::Serialize;
use serde_json::Value;
use std::fmt::Write as _;
use std::process::ExitCode;

const SCHEMA_VERSION: u32 = 1;

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "lieorb", version, about = "Nilpotent orbits of the exceptional simple Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every nonzero nilpotent orbit with its diagram and dimensions.
    Classify {
        #[arg(value_name = "TYPE", value_parser = parse_type)]
        type_rank: TypeRank,
        #[command(flatten)]
        common: Common,
    },
    /// Full report for a single orbit.
    Analyze {
        #[arg(value_name = "TYPE", value_parser = parse_type)]
        type_rank: TypeRank,
        /// Diagram in Bourbaki order ("0,0,0,1,0,1,0") or an orbit label ("A3+A2").
        #[arg(long)]
        orbit: String,
        #[command(flatten)]
        common: Common,
    },
    /// Recompute everything for a type (or `all`) and compare with the reference tables.
    Verify {
        #[arg(value_name = "TYPE")]
        target: String,
        #[command(flatten)]
        common: Common,
    },
    /// Print a table from live computation.
    Table {
        #[arg(value_name = "TYPE", value_parser = parse_type)]
        type_rank: TypeRank,
        #[arg(long, value_enum, default_value_t = TableKind::Ce)]
        kind: TableKind,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Random trials per diagram in the classification test.
    #[arg(long, default_value_t = orbits::DEFAULT_TRIALS as u64, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TableKind {
    /// Reachable orbits with the strong and rigid columns.
    Reachable,
    /// `dim c_e` and the `ad h` weights for every orbit.
    Ce,
}

fn parse_type(s: &str) -> Result<TypeRank, String> {
    s.parse().map_err(|e: lieorb::Error| e.to_string())
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: msg.into() }
    }
}

impl From<lieorb::Error> for Failure {
    fn from(e: lieorb::Error) -> Self {
        Failure { code: EXIT_INTERNAL, message: e.to_string() }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure { code: EXIT_INTERNAL, message: e.to_string() }
    }
}

struct Outcome {
    output: String,
    code: u8,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.output);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("lieorb: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> Result<Outcome, Failure> {
    let refdata = RefData::load()?;
    match cmd {
        Command::Classify { type_rank, common } => classify(type_rank, &common, &refdata),
        Command::Analyze { type_rank, orbit, common } => analyze(type_rank, &orbit, &common, &refdata),
        Command::Verify { target, common } => {
            let types: Vec<TypeRank> = if target.eq_ignore_ascii_case("all") {
                TypeRank::exceptional().to_vec()
            } else {
                vec![parse_type(&target).map_err(Failure::usage)?]
            };
            verify(&types, &common, &refdata)
        }
        Command::Table { type_rank, kind, common } => table(type_rank, kind, &common, &refdata),
    }
}

fn label_of(refdata: &RefData, t: TypeRank, d: &WeightedDynkinDiagram) -> Option<String> {
    refdata.lookup(t, d.labels()).ok().map(|r| r.label.clone())
}

fn require_table(refdata: &RefData, t: TypeRank) -> Result<(), Failure> {
    refdata.records(t).map(|_| ()).map_err(|_| Failure::usage(format!("no reference table for type {t}; use one of G2, F4, E6, E7, E8")))
}

/// `x1 + 2*x5 - 1/2*h3`; coefficients exact.
fn format_element(l: &LieAlgebra, e: &Element<Q>) -> String {
    let mut s = String::new();
    for i in e.support() {
        let c = &e.coeffs[i];
        let neg = *c < Q::ZERO;
        let mag = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if mag != Q::ONE {
            let _ = write!(s, "{mag}*");
        }
        s.push_str(&l.basis_label(i));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn canonical_json<T: Serialize>(doc: &T) -> Result<String, Failure> {
    // through Value: object keys come out sorted
    let v: Value = serde_json::to_value(doc).map_err(|e| Failure { code: EXIT_INTERNAL, message: e.to_string() })?;
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| Failure { code: EXIT_INTERNAL, message: e.to_string() })?;
    s.push('\n');
    Ok(s)
}

fn csv_string(header: &[&str], rows: &[Vec<String>]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure { code: EXIT_INTERNAL, message: e.to_string() })?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// Plain aligned columns.
fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header.to_vec());
    out.push_str(&line(width.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(|s| s.as_str()).collect()));
    for r in rows {
        out.push_str(&line(r.iter().map(|s| s.as_str()).collect()));
    }
    out
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct ClassifiedOrbit {
    label: Option<String>,
    diagram: String,
    orbit_dim: usize,
    dim_ge: usize,
    representative: String,
}

#[derive(Serialize)]
struct ClassifyDoc {
    schema_version: u32,
    command: &'static str,
    #[serde(rename = "type")]
    type_name: String,
    seed: u64,
    trials: u64,
    orbits: Vec<ClassifiedOrbit>,
}

fn classify(t: TypeRank, c: &Common, refdata: &RefData) -> Result<Outcome, Failure> {
    let l = LieAlgebra::new(t);
    let found = orbits::enumerate_orbits_with(&l, c.seed, c.trials as usize)?;
    let rows: Vec<ClassifiedOrbit> = found
        .iter()
        .map(|o| {
            let dim = orbits::orbit_dimension(&l, o)?;
            Ok(ClassifiedOrbit {
                label: label_of(refdata, t, &o.diagram),
                diagram: o.diagram.to_string(),
                orbit_dim: dim,
                dim_ge: l.dim() - dim,
                representative: format_element(&l, &o.triple.e),
            })
        })
        .collect::<Result<_, lieorb::Error>>()?;
    let output = match c.format {
        Format::Json => canonical_json(&ClassifyDoc {
            schema_version: SCHEMA_VERSION,
            command: "classify",
            type_name: t.to_string(),
            seed: c.seed,
            trials: c.trials,
            orbits: rows,
        })?,
        fmt => {
            let header = ["label", "diagram", "orbit_dim", "dim_ge", "representative"];
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.label.clone().unwrap_or_default(),
                        r.diagram.clone(),
                        r.orbit_dim.to_string(),
                        r.dim_ge.to_string(),
                        r.representative.clone(),
                    ]
                })
                .collect();
            if fmt == Format::Csv {
                csv_string(&header, &cells)?
            } else {
                format!("{t}: {} nonzero nilpotent orbits\n\n{}", rows.len(), text_table(&header, &cells))
            }
        }
    };
    Ok(Outcome { output, code: 0 })
}

#[derive(Serialize)]
struct AnalysisJson {
    label: Option<String>,
    diagram: String,
    orbit_dim: usize,
    dim_ge: usize,
    dim_derived: usize,
    reachable: bool,
    strongly_reachable: bool,
    panyushev_generated: bool,
    dim_ce: usize,
    ce_weights: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graded: Option<Vec<GradedDims>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    representative: Option<String>,
}

fn analysis_json(l: &LieAlgebra, refdata: &RefData, a: &OrbitAnalysis, detail: bool) -> AnalysisJson {
    AnalysisJson {
        label: label_of(refdata, l.type_rank(), &a.orbit.diagram),
        diagram: a.orbit.diagram.to_string(),
        orbit_dim: a.orbit_dim,
        dim_ge: a.dim_ge,
        dim_derived: a.dim_derived,
        reachable: a.reachable,
        strongly_reachable: a.strongly_reachable,
        panyushev_generated: a.panyushev_generated,
        dim_ce: a.dim_ce,
        ce_weights: a.ce_weights.clone(),
        graded: detail.then(|| a.graded.clone()),
        representative: detail.then(|| format_element(l, &a.orbit.triple.e)),
    }
}

#[derive(Serialize)]
struct AnalyzeDoc {
    schema_version: u32,
    command: &'static str,
    #[serde(rename = "type")]
    type_name: String,
    seed: u64,
    trials: u64,
    orbit: AnalysisJson,
}

fn select_orbit(l: &LieAlgebra, sel: &str, c: &Common, refdata: &RefData) -> Result<NilpotentOrbit, Failure> {
    let t = l.type_rank();
    let looks_like_diagram = sel.chars().all(|ch| ch.is_ascii_digit() || ch == ',' || ch.is_whitespace());
    let diagram = if looks_like_diagram {
        WeightedDynkinDiagram::parse(l.rank(), sel).map_err(|e| Failure::usage(e.to_string()))?
    } else {
        let r = refdata.lookup_label(t, sel).map_err(|e| Failure::usage(e.to_string()))?;
        let labels: Vec<i64> = r.diagram.iter().map(|&v| v as i64).collect();
        WeightedDynkinDiagram::new(l.rank(), &labels)?
    };
    if diagram.is_zero() || !orbits::dynkin_test(l, &diagram, c.trials as usize, c.seed)? {
        return Err(Failure::usage(format!("{diagram} is not the diagram of a nonzero nilpotent orbit in {t}")));
    }
    let e = orbits::find_representative(l, &diagram, c.seed)?;
    let h = Characteristic::new(l, &diagram)?.h;
    let triple = orbits::complete_triple(l, &h, &e)?;
    Ok(NilpotentOrbit { label: label_of(refdata, t, &diagram), diagram, triple })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analyze(t: TypeRank, sel: &str, c: &Common, refdata: &RefData) -> Result<Outcome, Failure> {
    let l = LieAlgebra::new(t);
    let o = select_orbit(&l, sel, c, refdata)?;
    let a = reach::analyze(&l, &o)?;
    let j = analysis_json(&l, refdata, &a, true);
    let output = match c.format {
        Format::Json => canonical_json(&AnalyzeDoc {
            schema_version: SCHEMA_VERSION,
            command: "analyze",
            type_name: t.to_string(),
            seed: c.seed,
            trials: c.trials,
            orbit: j,
        })?,
        Format::Csv => {
            let header = ["degree", "dim_g", "dim_ge", "dim_derived"];
            let rows: Vec<Vec<String>> = a
                .graded
                .iter()
                .map(|g| vec![g.degree.to_string(), g.dim_g.to_string(), g.dim_ge.to_string(), g.dim_derived.to_string()])
                .collect();
            csv_string(&header, &rows)?
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "type                 {t}");
            let _ = writeln!(s, "orbit                {}", j.label.as_deref().unwrap_or("-"));
            let _ = writeln!(s, "diagram              {}", j.diagram);
            let _ = writeln!(s, "orbit dimension      {}", a.orbit_dim);
            let _ = writeln!(s, "dim g_e              {}", a.dim_ge);
            let _ = writeln!(s, "dim [g_e,g_e]        {}", a.dim_derived);
            let _ = writeln!(s, "reachable            {}", yes_no(a.reachable));
            let _ = writeln!(s, "strongly reachable   {}", yes_no(a.strongly_reachable));
            let _ = writeln!(s, "generated by g(1)_e  {}", yes_no(a.panyushev_generated));
            let _ = writeln!(s, "dim c_e              {}", a.dim_ce);
            let _ = writeln!(s, "c_e weights          {}", join(&a.ce_weights));
            let _ = writeln!(s, "e                    {}", j.representative.as_deref().unwrap_or(""));
            let _ = writeln!(s);
            let rows: Vec<Vec<String>> = a
                .graded
                .iter()
                .map(|g| vec![g.degree.to_string(), g.dim_g.to_string(), g.dim_ge.to_string(), g.dim_derived.to_string()])
                .collect();
            s.push_str(&text_table(&["k", "dim g(k)", "dim g_e(k)", "dim [g_e,g_e](k)"], &rows));
            s
        }
    };
    Ok(Outcome { output, code: 0 })
}

#[derive(Serialize)]
struct TypeReport {
    #[serde(rename = "type")]
    type_name: String,
    orbits_checked: usize,
    discrepancies: Vec<Discrepancy>,
    orbits: Vec<AnalysisJson>,
}

#[derive(Serialize)]
struct VerifyDoc {
    schema_version: u32,
    command: &'static str,
    seed: u64,
    trials: u64,
    ok: bool,
    types: Vec<TypeReport>,
}

fn verify(types: &[TypeRank], c: &Common, refdata: &RefData) -> Result<Outcome, Failure> {
    let mut reports = Vec::new();
    for &t in types {
        require_table(refdata, t)?;
        let l = LieAlgebra::new(t);
        let analyses = reach::analyze_all_with(&l, c.seed, c.trials as usize)?;
        let discrepancies = refdata.diff(t, &analyses)?;
        reports.push(TypeReport {
            type_name: t.to_string(),
            orbits_checked: analyses.len(),
            discrepancies,
            orbits: analyses.iter().map(|a| analysis_json(&l, refdata, a, false)).collect(),
        });
    }
    let ok = reports.iter().all(|r| r.discrepancies.is_empty());
    let output = match c.format {
        Format::Json => canonical_json(&VerifyDoc {
            schema_version: SCHEMA_VERSION,
            command: "verify",
            seed: c.seed,
            trials: c.trials,
            ok,
            types: reports,
        })?,
        Format::Csv => {
            let header = ["type", "diagram", "label", "field", "computed", "expected"];
            let rows: Vec<Vec<String>> = reports
                .iter()
                .flat_map(|r| r.discrepancies.iter())
                .map(|d| {
                    vec![
                        d.type_name.clone(),
                        d.diagram.clone(),
                        d.label.clone().unwrap_or_default(),
                        d.field.clone(),
                        d.computed.clone(),
                        d.expected.clone(),
                    ]
                })
                .collect();
            csv_string(&header, &rows)?
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let _ = writeln!(s, "{}: {} orbits checked, {} discrepancies", r.type_name, r.orbits_checked, r.discrepancies.len());
                for d in &r.discrepancies {
                    let _ = writeln!(
                        s,
                        "  {} ({}): {}: computed {}, expected {}",
                        d.diagram,
                        d.label.as_deref().unwrap_or("-"),
                        d.field,
                        d.computed,
                        d.expected
                    );
                }
            }
            let _ = writeln!(s, "{}", if ok { "OK" } else { "MISMATCH" });
            s
        }
    };
    Ok(Outcome { output, code: if ok { 0 } else { EXIT_MISMATCH } })
}

#[derive(Serialize)]
struct TableRow {
    label: Option<String>,
    diagram: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    strongly_reachable: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rigid: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dim_ce: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ce_weights: Option<Vec<i64>>,
}

#[derive(Serialize)]
struct TableDoc {
    schema_version: u32,
    command: &'static str,
    kind: &'static str,
    #[serde(rename = "type")]
    type_name: String,
    seed: u64,
    trials: u64,
    rows: Vec<TableRow>,
}

fn table(t: TypeRank, kind: TableKind, c: &Common, refdata: &RefData) -> Result<Outcome, Failure> {
    require_table(refdata, t)?;
    let l = LieAlgebra::new(t);
    let analyses = reach::analyze_all_with(&l, c.seed, c.trials as usize)?;
    let rows: Vec<TableRow> = match kind {
        TableKind::Reachable => analyses
            .iter()
            .filter(|a| a.reachable)
            .map(|a| TableRow {
                label: label_of(refdata, t, &a.orbit.diagram),
                diagram: a.orbit.diagram.to_string(),
                strongly_reachable: Some(a.strongly_reachable),
                rigid: refdata.lookup(t, a.orbit.diagram.labels()).ok().map(|r| r.rigid),
                dim_ce: None,
                ce_weights: None,
            })
            .collect(),
        TableKind::Ce => analyses
            .iter()
            .map(|a| TableRow {
                label: label_of(refdata, t, &a.orbit.diagram),
                diagram: a.orbit.diagram.to_string(),
                strongly_reachable: None,
                rigid: None,
                dim_ce: Some(a.dim_ce),
                ce_weights: Some(a.ce_weights.clone()),
            })
            .collect(),
    };
    let kind_name = match kind {
        TableKind::Reachable => "reachable",
        TableKind::Ce => "ce",
    };
    let output = match c.format {
        Format::Json => canonical_json(&TableDoc {
            schema_version: SCHEMA_VERSION,
            command: "table",
            kind: kind_name,
            type_name: t.to_string(),
            seed: c.seed,
            trials: c.trials,
            rows,
        })?,
        fmt => {
            let mark = |b: Option<bool>| if b == Some(true) { "x".to_string() } else { String::new() };
            let (header, cells): (Vec<&str>, Vec<Vec<String>>) = match kind {
                TableKind::Reachable => (
                    vec!["label", "diagram", "reachable", "strong", "rigid"],
                    rows.iter()
                        .map(|r| {
                            vec![
                                r.label.clone().unwrap_or_default(),
                                r.diagram.clone(),
                                "x".to_string(),
                                mark(r.strongly_reachable),
                                mark(r.rigid),
                            ]
                        })
                        .collect(),
                ),
                TableKind::Ce => (
                    vec!["label", "diagram", "dim_ce", "weights"],
                    rows.iter()
                        .map(|r| {
                            vec![
                                r.label.clone().unwrap_or_default(),
                                r.diagram.clone(),
                                r.dim_ce.unwrap_or(0).to_string(),
                                join(r.ce_weights.as_deref().unwrap_or(&[])),
                            ]
                        })
                        .collect(),
                ),
            };
            if fmt == Format::Csv {
                csv_string(&header, &cells)?
            } else {
                let title = match kind {
                    TableKind::Reachable => format!("Reachable nilpotent orbits in {t}"),
                    TableKind::Ce => format!("Nilpotent orbits in {t}: dim c_e and ad h weights"),
                };
                format!("{title}\n\n{}", text_table(&header, &cells))
            }
        }
    };
    Ok(Outcome { output, code: 0 })
}
