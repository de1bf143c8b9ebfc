use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lcdmds::{
    applicable_constructions, construct, construct_auto, render_table, sweep, verify_report,
    CodeFile, Construction, Elem, Error, Field, LinearCode, Overrides, RowStatus, SweepOptions,
};

/// Exit statuses.
mod status {
    pub const OK: u8 = 0;
    /// `verify`: the code is not LCD or not MDS.
    pub const NOT_LCD_MDS: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const HYPOTHESIS: u8 = 3;
    pub const VIOLATION: u8 = 4;
    pub const BUDGET: u8 = 5;
}

#[derive(Parser)]
#[command(name = "lcdmds", version, about = "Construct and verify LCD MDS codes from GRS codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an [n, k] LCD MDS code and (by default) verify it.
    Construct(ConstructArgs),
    /// Compute hull dimension and MDS verdict of a code file.
    Verify(VerifyArgs),
    /// Run every admissible [n, k] for one field.
    Sweep(SweepArgs),
    /// Describe a field and, given n and k, the constructions that apply.
    Info(InfoArgs),
}

#[derive(Args, Clone)]
struct FieldArgs {
    /// Field order q = p^e.
    #[arg(long, conflicts_with_all = ["p", "e"])]
    q: Option<u32>,
    /// Characteristic, used with --e.
    #[arg(long, requires = "e")]
    p: Option<u32>,
    /// Extension degree, used with --p.
    #[arg(long, requires = "p")]
    e: Option<u32>,
}

impl FieldArgs {
    fn field(&self) -> anyhow::Result<Option<Field>> {
        Ok(match (self.q, self.p, self.e) {
            (Some(q), _, _) => Some(Field::from_order(q)?),
            (None, Some(p), Some(e)) => Some(Field::new(p, e)?),
            _ => None,
        })
    }

    fn required(&self) -> anyhow::Result<Field> {
        self.field()?.context("give the field as --q or as --p and --e")
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Force one construction (tag, short alias or condition number 1-5).
    #[arg(long)]
    theorem: Option<Construction>,
    /// Override γ by canonical index.
    #[arg(long)]
    gamma: Option<u32>,
    /// Tail multipliers by canonical index, comma separated.
    #[arg(long, value_delimiter = ',')]
    multipliers: Option<Vec<u32>>,
    /// Labeling of all q field elements, comma separated.
    #[arg(long, value_delimiter = ',')]
    permutation: Option<Vec<u32>>,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
    /// Enumeration budget for the MDS check.
    #[arg(long, env = "LCDMDS_BUDGET", default_value_t = 1_000_000)]
    budget: u64,
    /// Skip the hull and MDS check.
    #[arg(long)]
    no_verify: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Code file ({"field": ..., "generator": ...}) or `-` for stdin. A bare
    /// matrix is accepted when the field is given on the command line.
    file: PathBuf,
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, env = "LCDMDS_BUDGET", default_value_t = 1_000_000)]
    budget: u64,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    /// Defaults to q + 1.
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, env = "LCDMDS_BUDGET", default_value_t = 1_000_000)]
    budget: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Write the JSON result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the table here instead of stderr.
    #[arg(long)]
    table: Option<PathBuf>,
    /// Include per-row wall time (makes output run-dependent).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct InfoArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, requires = "k")]
    n: Option<usize>,
    #[arg(long, requires = "n")]
    k: Option<usize>,
}

fn elems(field: &Field, ix: &[u32]) -> anyhow::Result<Vec<Elem>> {
    Ok(ix.iter().map(|&i| field.elem(i)).collect::<Result<_, _>>()?)
}

fn print_json(value: &impl serde::Serialize) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn cmd_construct(args: ConstructArgs) -> anyhow::Result<u8> {
    let field = args.field.required()?;
    let overrides = Overrides {
        gamma: args.gamma.map(|g| field.elem(g)).transpose()?,
        tail_multipliers: args.multipliers.as_deref().map(|m| elems(&field, m)).transpose()?,
        labeling: args.permutation.as_deref().map(|m| elems(&field, m)).transpose()?,
    };
    let mut report = match args.theorem {
        Some(c) => construct(c, &field, args.n, args.k, &overrides)?,
        None => construct_auto(&field, args.n, args.k, &overrides)?,
    };
    if !args.no_verify {
        report = verify_report(&report, args.budget)?;
    }
    match args.output {
        Output::Json => print_json(&report)?,
        Output::Text => {
            println!(
                "{} [{}, {}] over GF({})",
                report.construction,
                report.n,
                report.k,
                field.order()
            );
            print!("{}", report.spec.generator().generator());
            if let Some(v) = &report.verified {
                let d = v.min_distance.map_or("-".to_string(), |d| d.to_string());
                println!(
                    "hull {}  lcd {}  mds {} ({:?}, d = {d})",
                    v.hull_dimension, v.is_lcd, v.is_mds, v.mds_route
                );
            }
        }
    }
    Ok(status::OK)
}

fn read_input(path: &PathBuf) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_code(text: &str, field: Option<Field>) -> anyhow::Result<LinearCode> {
    let value: serde_json::Value = serde_json::from_str(text).context("malformed JSON")?;
    if value.is_array() {
        let Some(field) = field else {
            bail!("a bare matrix needs --q or --p/--e");
        };
        let rows: Vec<Vec<u32>> = serde_json::from_value(value).context("malformed matrix")?;
        return Ok(LinearCode::from_indices(&field, &rows)?);
    }
    let file: CodeFile = serde_json::from_value(value).context("malformed code file")?;
    Ok(file.to_code()?)
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<u8> {
    let text = read_input(&args.file)?;
    let code = load_code(&text, args.field.field()?)?;
    let verdict = code.verdict(args.budget)?;
    match args.output {
        Output::Json => print_json(&verdict)?,
        Output::Text => println!(
            "[{}, {}] hull {} lcd {} mds {} ({:?}, d = {})",
            verdict.n,
            verdict.k,
            verdict.hull_dimension,
            verdict.is_lcd,
            verdict.is_mds,
            verdict.mds_route,
            verdict.min_distance.map_or("-".into(), |d| d.to_string())
        ),
    }
    Ok(if verdict.is_lcd && verdict.is_mds { status::OK } else { status::NOT_LCD_MDS })
}

fn cmd_sweep(args: SweepArgs) -> anyhow::Result<u8> {
    let field = args.field.required()?;
    let opts = SweepOptions {
        n_min: args.n_min,
        n_max: args.n_max,
        budget: args.budget,
        threads: args.threads,
        timings: args.timings,
    };
    let result = sweep(&field, &opts)?;
    let json = serde_json::to_string_pretty(&result)? + "\n";
    match &args.out {
        Some(path) => {
            fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?
        }
        None => io::stdout().write_all(json.as_bytes())?,
    }
    let table = render_table(&result);
    match &args.table {
        Some(path) => {
            fs::write(path, &table).with_context(|| format!("writing {}", path.display()))?
        }
        None => eprint!("{table}"),
    }
    let worst = result
        .rows
        .iter()
        .map(|r| match r.status {
            RowStatus::Verified | RowStatus::NoConstruction => status::OK,
            RowStatus::BudgetExceeded => status::BUDGET,
            RowStatus::TheoremViolation => status::VIOLATION,
            RowStatus::Error => status::USAGE,
        })
        .max()
        .unwrap_or(status::OK);
    Ok(worst)
}

fn cmd_info(args: InfoArgs) -> anyhow::Result<u8> {
    let field = args.field.required()?;
    let mut info = serde_json::json!({
        "q": field.order(),
        "field": field.record(),
        "primitive_element": field.primitive_element(),
        "minus_one": field.neg(Elem::ONE),
    });
    if let (Some(n), Some(k)) = (args.n, args.k) {
        let tags: Vec<&str> =
            applicable_constructions(&field, n, k).iter().map(|c| c.tag()).collect();
        info["n"] = n.into();
        info["k"] = k.into();
        info["applicable"] = tags.into();
    }
    print_json(&info)?;
    Ok(status::OK)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    let Some(e) = err.downcast_ref::<Error>() else {
        return status::USAGE;
    };
    match e {
        Error::NoConstructionApplies { .. }
        | Error::HypothesisViolated(_)
        | Error::KOutOfRange { .. }
        | Error::NotADivisor { .. }
        | Error::BadSubgroupDegree { .. }
        | Error::NoValidMultiplier(_) => status::HYPOTHESIS,
        Error::TheoremViolation(_) | Error::OracleDisagreement(_) => status::VIOLATION,
        Error::BudgetExceeded { .. } => status::BUDGET,
        _ => status::USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(a) => cmd_construct(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Info(a) => cmd_info(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
