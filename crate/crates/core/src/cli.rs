//! The `mckay` command line.
//!
//! Exit status: 0 on success, 1 on a failed covering check or an invalid
//! character table, 2 on usage and parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::abelian::{AbRep, FinAbGroup};
use crate::chartab::{builtin_table, load_table, mckay_quiver_table, validate_table, RepSpec, BUILTIN_TABLES};
use crate::covering::{build_instance, check_regular_covering};
use crate::diagrams::{find_preset, presets, LabelScheme};
use crate::emit::{emit, report_json, report_text, EmitOptions, Format, Labels, MultiplicityStyle};
use crate::mckay::{mckay_quiver_abelian, returning_arrow_quiver};

#[derive(Debug, Parser)]
#[command(name = "mckay", version, about = "Exact McKay quivers, returning arrows and covering checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormatArg {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StyleArg {
    Parallel,
    Label,
}

#[derive(Debug, clap::Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "dot")]
    format: FormatArg,
    /// auto, exponents, or a scheme: yinyang, sixiang, trigram, hexagram, wuxing
    #[arg(long, default_value = "auto")]
    labels: String,
    /// Parallel edges (default) or one edge per pair labeled with its multiplicity
    #[arg(long, value_enum, default_value = "parallel")]
    multiplicity: StyleArg,
    /// Write to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit one of the named diagram presets
    Preset {
        name: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// McKay quiver of an abelian group
    Quiver {
        /// Cyclic factor orders, e.g. "2,2,2"
        #[arg(long)]
        group: String,
        /// Summand exponent tuples, e.g. "1,0,0;0,1,0;0,0,1"
        #[arg(long, allow_hyphen_values = true)]
        rep: String,
        /// Embed into SL(n+1) and add returning arrows
        #[arg(long)]
        sl: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check that Q_V(G) regularly covers Q_V(G ∩ SL(V))
    Covering {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        rep: String,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormatArg,
    },
    /// McKay quiver from a character table
    Table {
        /// Character table file
        #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
        file: Option<PathBuf>,
        /// Built-in table: c1..c12, c2xc2, q8
        #[arg(long)]
        builtin: Option<String>,
        /// Row indices of the summands of V, e.g. "4" or "1,3"
        #[arg(long, allow_hyphen_values = true)]
        rep: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List the registered presets
    ListPresets,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Check(_) => 1,
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn emit_options(o: &OutputArgs) -> Result<EmitOptions, Failure> {
    let labels = match o.labels.as_str() {
        "auto" => Labels::Auto,
        "exponents" => Labels::Exponents,
        other => Labels::Scheme(other.parse::<LabelScheme>().map_err(usage)?),
    };
    Ok(EmitOptions {
        format: match o.format {
            FormatArg::Dot => Format::Dot,
            FormatArg::Json => Format::Json,
        },
        labels,
        multiplicity_style: match o.multiplicity {
            StyleArg::Parallel => MultiplicityStyle::ParallelEdges,
            StyleArg::Label => MultiplicityStyle::EdgeLabel,
        },
    })
}

fn write_output(text: &str, out: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(usage),
    }
}

fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::ListPresets => {
            let mut text = String::new();
            for p in presets() {
                text.push_str(&format!(
                    "{:<16} {:<16} {:<14} {}\n",
                    p.name,
                    p.construction.to_string(),
                    p.layout_hint.to_string(),
                    p.description
                ));
            }
            write_output(&text, None, stdout)
        }
        Command::Preset { name, output } => {
            let q = find_preset(&name).map_err(usage)?.build();
            let text = emit(&q, &emit_options(&output)?).map_err(usage)?;
            write_output(&text, output.out.as_ref(), stdout)
        }
        Command::Quiver { group, rep, sl, output } => {
            let g: FinAbGroup = group.parse().map_err(usage)?;
            let v = AbRep::parse(&g, &rep).map_err(usage)?;
            let opts = emit_options(&output)?;
            let q = if sl { returning_arrow_quiver(&g, &v) } else { mckay_quiver_abelian(&g, &v) };
            let text = emit(&q, &opts).map_err(usage)?;
            write_output(&text, output.out.as_ref(), stdout)
        }
        Command::Covering { group, rep, format } => {
            let g: FinAbGroup = group.parse().map_err(usage)?;
            let v = AbRep::parse(&g, &rep).map_err(usage)?;
            let report = check_regular_covering(&build_instance(&g, &v));
            let text = match format {
                ReportFormatArg::Text => report_text(&report),
                ReportFormatArg::Json => report_json(&report),
            };
            write_output(&text, None, stdout)?;
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Check("covering check failed".into()))
            }
        }
        Command::Table { file, builtin, rep, output } => {
            let table = match (file, builtin) {
                (Some(path), _) => load_table(&path).map_err(|e| usage(format!("{}: {e}", path.display())))?,
                (None, Some(name)) => builtin_table(&name).ok_or_else(|| {
                    usage(format!("unknown built-in table '{name}' (known: {})", BUILTIN_TABLES.join(", ")))
                })?,
                (None, None) => return Err(usage("one of --file or --builtin is required")),
            };
            if let Err(errs) = validate_table(&table) {
                let msg = errs.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; ");
                return Err(Failure::Check(format!("invalid character table: {msg}")));
            }
            let v = RepSpec::parse(&rep).map_err(usage)?;
            let opts = emit_options(&output)?;
            let q = mckay_quiver_table(&table, &v).map_err(usage)?;
            let text = emit(&q, &opts).map_err(usage)?;
            write_output(&text, output.out.as_ref(), stdout)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit status.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => 0,
        Err(f) => {
            let msg = match &f {
                Failure::Usage(m) | Failure::Check(m) => m,
            };
            eprintln!("error: {msg}");
            f.code()
        }
    }
}
