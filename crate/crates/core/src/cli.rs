//! Command-line front end.
//!
//! `run` parses arguments, writes results to `out` and diagnostics to
//! `err`, and returns the process exit code: 0 on success, 1 when a
//! verification fails, 2 on a usage error.

use std::collections::HashMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::expr::{parse_grid, parse_substitution, IndexedAssignment};
use crate::family::{
    builtin_family, family_goncarov, hand_enumerator, type_enumerator, type_sequence, DeckSpec, BUILTIN_FAMILIES,
};
use crate::goncarov::{goncarov_constant_ordered_partitions, goncarov_sequence, Grid};
use crate::lattice::{mobius_enumerator, zeta_enumerator};
use crate::operator::PolySequence;
use crate::poly::{FactorialKind, MultiPoly, VarId};
use crate::tables::{a030019, paper_goldens};
use crate::verify::{run_suite, Params, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "goncarov", version, about = "Generalized Goncarov polynomials and parking-function enumerators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute an enumerator or a Goncarov polynomial.
    Compute(ComputeArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Emit a reference table.
    Tables(TablesArgs),
    /// List the builtin exponential families.
    ListFamilies,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Zeta,
    Mobius,
    Hand,
    Type,
    Goncarov,
    GoncarovConstant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Basic {
    Monomials,
    Falling,
    Rising,
    Zeta,
    Mobius,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    kind: Kind,
    /// Index of a single polynomial.
    #[arg(long)]
    n: Option<usize>,
    /// Emit the whole sequence `0..=n_max`.
    #[arg(long)]
    n_max: Option<usize>,
    /// `z` for symbolic nodes, comma-separated expressions, or a JSON list.
    #[arg(long)]
    grid: Option<String>,
    /// Builtin family name or `@file.json`.
    #[arg(long)]
    family: Option<String>,
    /// Basic sequence when no family is given.
    #[arg(long, value_enum)]
    basic: Option<Basic>,
    /// Deck weights, e.g. `all=1` or `y3=2`.
    #[arg(long)]
    y: Option<String>,
    /// Lattice weights, e.g. `all=1` or `w2=0`.
    #[arg(long)]
    w: Option<String>,
    /// Final substitution, e.g. `x=0` or `x=2,a=1/2`.
    #[arg(long)]
    at: Option<String>,
    /// Use `-Z` in place of the grid.
    #[arg(long)]
    negate_grid: bool,
    /// Conventional notation instead of JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Algebra,
    Lattice,
    Operator,
    Goncarov,
    Parking,
    Family,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Algebra => Suite::Algebra,
            SuiteArg::Lattice => Suite::Lattice,
            SuiteArg::Operator => Suite::Operator,
            SuiteArg::Goncarov => Suite::Goncarov,
            SuiteArg::Parking => Suite::Parking,
            SuiteArg::Family => Suite::Family,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    suite: SuiteArg,
    #[arg(long)]
    n_max: Option<usize>,
    /// Nondecreasing positive integers, comma-separated.
    #[arg(long, value_delimiter = ',')]
    grid: Option<Vec<u64>>,
    /// Label bound for the decomposition checks.
    #[arg(long)]
    x: Option<u64>,
    #[arg(long)]
    quick: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    A030019,
    PaperGoldens,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct TablesArgs {
    which: Which,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Golden section: a_n, b_n, example, set_partitions, two_regular.
    #[arg(long)]
    section: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Compute(args) => compute(&args).map(|s| (s, EXIT_OK)),
        Command::Verify(args) => Ok(verify(&args)),
        Command::Tables(args) => tables(&args).map(|s| (s, EXIT_OK)),
        Command::ListFamilies => Ok((list_families(), EXIT_OK)),
    };
    match outcome {
        Ok((text, code)) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InternalCrossCheckFailure(_) => EXIT_FAILURE,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

fn load_family(spec: &str) -> Result<DeckSpec> {
    match spec.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?;
            DeckSpec::from_json(&text)
        }
        None => builtin_family(spec),
    }
}

fn basic_sequence(basic: Basic, n_max: usize) -> Result<PolySequence> {
    match basic {
        Basic::Monomials => Ok(PolySequence::monomials(n_max)),
        Basic::Falling => Ok(PolySequence::factorials(FactorialKind::Falling, n_max)),
        Basic::Rising => Ok(PolySequence::factorials(FactorialKind::Rising, n_max)),
        Basic::Zeta => PolySequence::try_from_fn(n_max, zeta_enumerator),
        Basic::Mobius => PolySequence::try_from_fn(n_max, mobius_enumerator),
    }
}

impl ComputeArgs {
    fn index(&self) -> Result<(usize, bool)> {
        match (self.n, self.n_max) {
            (Some(n), None) => Ok((n, false)),
            (None, Some(m)) => Ok((m, true)),
            (Some(_), Some(_)) => Err(usage("give either --n or --n-max, not both")),
            (None, None) => Err(usage("--n or --n-max is required")),
        }
    }

    fn family(&self) -> Result<Option<DeckSpec>> {
        self.family.as_deref().map(load_family).transpose()
    }

    fn assignment(&self, top: usize) -> Result<HashMap<VarId, MultiPoly>> {
        let top = top.max(1) as u32;
        let mut sub = HashMap::new();
        if let Some(y) = &self.y {
            sub.extend(IndexedAssignment::parse(y, 'y')?.resolve('y', 1, top));
        }
        if let Some(w) = &self.w {
            sub.extend(IndexedAssignment::parse(w, 'w')?.resolve('w', 2, top));
        }
        Ok(sub)
    }

    fn grid(&self, len: usize) -> Result<Grid> {
        let text = self.grid.as_deref().ok_or_else(|| usage("--grid is required"))?;
        let grid = parse_grid(text, len)?;
        Ok(if self.negate_grid { grid.negate() } else { grid })
    }

    fn sequence(&self, n_max: usize) -> Result<PolySequence> {
        match (self.family()?, self.basic) {
            (Some(_), Some(_)) => Err(usage("give either --family or --basic, not both")),
            (Some(f), None) => type_sequence(&f, n_max),
            (None, basic) => basic_sequence(basic.unwrap_or(Basic::Zeta), n_max),
        }
    }
}

fn compute(args: &ComputeArgs) -> Result<String> {
    let (n, whole) = args.index()?;
    let range = if whole { 0..=n } else { n..=n };
    let polys: Vec<MultiPoly> = match args.kind {
        Kind::Zeta => range.map(zeta_enumerator).collect::<Result<_>>()?,
        Kind::Mobius => range.map(mobius_enumerator).collect::<Result<_>>()?,
        Kind::Hand | Kind::Type => {
            let f = args.family()?.ok_or_else(|| usage("--family is required"))?;
            let one = if args.kind == Kind::Hand { hand_enumerator } else { type_enumerator };
            range.map(|k| one(&f, k)).collect::<Result<_>>()?
        }
        Kind::Goncarov => {
            let grid = args.grid(n)?;
            let t = match args.family()? {
                Some(f) if args.basic.is_none() => family_goncarov(&f, &grid, n)?,
                _ => goncarov_sequence(&args.sequence(n)?, &grid, n)?,
            };
            t.entries()[*range.start()..].to_vec()
        }
        Kind::GoncarovConstant => {
            if args.negate_grid {
                return Err(usage("goncarov-constant already evaluates on -Z; drop --negate-grid"));
            }
            let grid = args.grid(n)?;
            let p = args.sequence(n)?;
            range.map(|k| goncarov_constant_ordered_partitions(&p, &grid, k)).collect::<Result<_>>()?
        }
    };
    let mut sub = args.assignment(n)?;
    if let Some(at) = &args.at {
        sub.extend(parse_substitution(at)?);
    }
    let polys: Vec<MultiPoly> =
        polys.into_iter().map(|p| if sub.is_empty() { p } else { p.substitute(&sub) }).collect();
    Ok(match (args.pretty, whole) {
        (true, false) => polys[0].pretty(),
        (true, true) => {
            polys.iter().enumerate().map(|(k, p)| format!("{k}: {}", p.pretty())).collect::<Vec<_>>().join("\n")
        }
        (false, false) => serde_json::to_string(&polys[0]).expect("serializable"),
        (false, true) => serde_json::to_string(&polys).expect("serializable"),
    })
}

fn verify(args: &VerifyArgs) -> (String, i32) {
    let params = Params { n_max: args.n_max, grid: args.grid.clone(), x: args.x, quick: args.quick };
    let report = run_suite(args.suite.into(), &params);
    let mut text = report.to_string();
    if let Some(first) = report.first_failure() {
        text.push_str(&format!(
            "\nfirst failure: {} {}: {}",
            first.suite,
            first.name,
            first.failure.as_deref().unwrap_or("")
        ));
        return (text, EXIT_FAILURE);
    }
    (text, EXIT_OK)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn tables(args: &TablesArgs) -> Result<String> {
    match args.which {
        Which::A030019 => {
            let rows = a030019(args.n_max, args.n_max.min(5))?;
            Ok(match args.format {
                Format::Csv => std::iter::once("n,value,provenance".to_string())
                    .chain(rows.iter().map(|r| format!("{},{},{}", r.n, r.value, r.provenance)))
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Json => {
                    let rows: Vec<_> = rows
                        .iter()
                        .map(|r| json!({"n": r.n, "value": r.value.to_string(), "provenance": r.provenance}))
                        .collect();
                    serde_json::to_string(&rows).expect("serializable")
                }
            })
        }
        Which::PaperGoldens => {
            let rows = paper_goldens(args.section.as_deref())?;
            Ok(match args.format {
                Format::Csv => std::iter::once("section,label,printed,computed,status".to_string())
                    .chain(rows.iter().map(|r| {
                        [r.section, &r.label, &r.printed.pretty(), &r.computed.pretty(), r.status()]
                            .map(csv_field)
                            .join(",")
                    }))
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Json => {
                    let rows: Vec<_> = rows
                        .iter()
                        .map(|r| {
                            json!({
                                "section": r.section,
                                "label": r.label,
                                "printed": r.printed,
                                "computed": r.computed,
                                "status": r.status(),
                            })
                        })
                        .collect();
                    serde_json::to_string(&rows).expect("serializable")
                }
            })
        }
    }
}

fn list_families() -> String {
    BUILTIN_FAMILIES
        .iter()
        .map(|name| {
            let f = builtin_family(name).expect("builtin");
            let d: Vec<String> = (1..=7).map(|n| f.d(n).to_string()).collect();
            format!("{name}\td_1.. = {}", d.join(", "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}
