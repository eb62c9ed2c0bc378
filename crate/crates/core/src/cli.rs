//! The `mvlf` command-line front end.
//!
//! Exit codes: 0 on success (including an empty solution set for the
//! argument-recovery task), 2 for usage or input errors, 3 when recovering the
//! transforming function hits contradictory requirements.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::composer::compose_tables;
use crate::error::Error;
use crate::inverse::{solve_for_f, solve_for_g, Cell};
use crate::mvcore::{count_functions, tuple_from_address, Alphabet, TruthTable};
use crate::tablestore::{
    decode_table, detect_format, emit_text, emit_vector_line, load_table, parse_vector_line,
    to_binary_bytes, Format, StoredTable, VectorOrder,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "mvlf",
    version,
    about = "Evaluate, compose and invert many-valued logic functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a table at an argument tuple
    Eval {
        table: PathBuf,
        /// Argument symbols, one per variable
        #[arg(allow_hyphen_values = true)]
        symbols: Vec<String>,
        /// Read only the addressed byte of a binary table
        #[arg(long)]
        stored: bool,
    },
    /// Compose y(x) = g(f_1(x), ..., f_m(x))
    Compose {
        g: PathBuf,
        #[arg(required = true)]
        args: Vec<PathBuf>,
        /// Output path (standard output when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Recover the transforming function g from f_1..f_m and y (last path is y)
    SolveG {
        #[arg(required = true, num_args = 2..)]
        paths: Vec<PathBuf>,
        #[command(flatten)]
        mode: Mode,
        #[command(flatten)]
        output: EnumerationOutput,
    },
    /// Recover unknown argument functions from g, y and the known arguments
    SolveF {
        g: PathBuf,
        y: PathBuf,
        /// Known argument as POSITION=PATH, positions counted from 1
        #[arg(long = "known", value_name = "K=PATH")]
        known: Vec<String>,
        /// Unknown argument position, counted from 1 (defaults to all positions not known)
        #[arg(long = "unknown", value_name = "K")]
        unknown: Vec<usize>,
        #[command(flatten)]
        mode: Mode,
        #[command(flatten)]
        output: EnumerationOutput,
    },
    /// Print the number of r-valued functions of n variables, r^(r^n)
    Count { radix: usize, arity: usize },
    /// Convert between text, binary and vector-line forms
    Convert {
        input: PathBuf,
        /// Output path, `-` for standard output
        output: PathBuf,
        #[arg(long, value_enum)]
        to: ConvertTarget,
        /// Write vector lines from the highest address down
        #[arg(long)]
        paper_order: bool,
        /// Alphabet of a bare vector-line input, comma or space separated
        #[arg(long)]
        alphabet: Option<String>,
        /// Order of a vector-line input
        #[arg(long, value_enum, default_value_t = InputOrder::Table)]
        input_order: InputOrder,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Mode {
    /// Print the exact number of solutions
    #[arg(long)]
    count: bool,
    /// Write up to N solutions to numbered files
    #[arg(long, value_name = "N")]
    enumerate: Option<usize>,
    /// Print the per-cell constraint map
    #[arg(long)]
    partial: bool,
}

#[derive(Debug, Args)]
pub struct EnumerationOutput {
    /// Directory for enumerated solutions
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Text,
    Binary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConvertTarget {
    Text,
    Binary,
    Vector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputOrder {
    Table,
    Paper,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Inconsistent { .. } => EXIT_INCONSISTENT,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(e.to_string())
    }
}

type CliResult<T = ()> = std::result::Result<T, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return e.exit_code();
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "mvlf: {}", f.message);
            f.code
        }
    }
}

fn read_table(path: &Path) -> CliResult<TruthTable> {
    load_table(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn encode(table: &TruthTable, format: TableFormat) -> CliResult<Vec<u8>> {
    Ok(match format {
        TableFormat::Text => emit_text(table).into_bytes(),
        TableFormat::Binary => to_binary_bytes(table)?,
    })
}

fn write_output(path: Option<&Path>, bytes: &[u8], out: &mut dyn Write) -> CliResult {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::write(p, bytes).map_err(|e| Failure::input(format!("{}: {e}", p.display())))
        }
        _ => Ok(out.write_all(bytes)?),
    }
}

fn execute(command: Command, out: &mut dyn Write) -> CliResult {
    match command {
        Command::Eval {
            table,
            symbols,
            stored,
        } => {
            let value = if stored {
                let s = StoredTable::open_path(&table)
                    .map_err(|e| Failure::input(format!("{}: {e}", table.display())))?;
                s.evaluate_symbols(&symbols)?.to_owned()
            } else {
                read_table(&table)?.evaluate_symbols(&symbols)?.to_owned()
            };
            writeln!(out, "{value}")?;
        }
        Command::Compose {
            g,
            args,
            output,
            format,
        } => {
            let g = read_table(&g)?;
            let args = args
                .iter()
                .map(|p| read_table(p))
                .collect::<CliResult<Vec<_>>>()?;
            let y = compose_tables(&g, &args)?;
            write_output(output.as_deref(), &encode(&y, format)?, out)?;
        }
        Command::SolveG {
            mut paths,
            mode,
            output,
        } => {
            let y = read_table(&paths.pop().expect("clap requires two paths"))?;
            let args = paths
                .iter()
                .map(|p| read_table(p))
                .collect::<CliResult<Vec<_>>>()?;
            solve_g(&args, &y, &mode, &output, out)?;
        }
        Command::SolveF {
            g,
            y,
            known,
            unknown,
            mode,
            output,
        } => {
            let g = read_table(&g)?;
            let y = read_table(&y)?;
            let known = parse_known(&known, &unknown, g.arity())?;
            solve_f(&g, &y, &known, &mode, &output, out)?;
        }
        Command::Count { radix, arity } => {
            writeln!(out, "{}", count_functions(radix, arity)?)?;
        }
        Command::Convert {
            input,
            output,
            to,
            paper_order,
            alphabet,
            input_order,
        } => {
            let bytes = fs::read(&input)
                .map_err(|e| Failure::input(format!("{}: {e}", input.display())))?;
            let table = match detect_format(&bytes) {
                Some(Format::Vector) => {
                    let spec = alphabet.ok_or_else(|| {
                        Failure::input("converting from a vector line requires --alphabet")
                    })?;
                    let alphabet = Alphabet::new(
                        spec.split(|c: char| c == ',' || c.is_whitespace())
                            .filter(|s| !s.is_empty()),
                    )?;
                    let order = match input_order {
                        InputOrder::Table => VectorOrder::Table,
                        InputOrder::Paper => VectorOrder::Paper,
                    };
                    let line = std::str::from_utf8(&bytes)
                        .map_err(|_| Failure::input("vector line is not UTF-8"))?;
                    parse_vector_line(line, &alphabet, order)?
                }
                Some(_) => decode_table(&bytes)?,
                None => {
                    return Err(Failure::input(format!(
                        "{}: unrecognized table format",
                        input.display()
                    )))
                }
            };
            let encoded = match to {
                ConvertTarget::Text => emit_text(&table).into_bytes(),
                ConvertTarget::Binary => to_binary_bytes(&table)?,
                ConvertTarget::Vector => {
                    let order = if paper_order {
                        VectorOrder::Paper
                    } else {
                        VectorOrder::Table
                    };
                    format!("{}\n", emit_vector_line(&table, order)).into_bytes()
                }
            };
            write_output(Some(&output), &encoded, out)?;
        }
    }
    Ok(())
}

/// Turns `K=PATH` options into 0-based positions, checking that known and
/// unknown positions together cover `1..=m` exactly once.
fn parse_known(
    known: &[String],
    unknown: &[usize],
    m: usize,
) -> CliResult<BTreeMap<usize, TruthTable>> {
    let mut seen = vec![false; m];
    let mut claim = |k: usize| -> CliResult<usize> {
        if k == 0 || k > m {
            return Err(Failure::input(format!("position {k} is outside 1..={m}")));
        }
        if std::mem::replace(&mut seen[k - 1], true) {
            return Err(Failure::input(format!("position {k} given more than once")));
        }
        Ok(k - 1)
    };

    let mut tables = BTreeMap::new();
    for item in known {
        let (k, path) = item
            .split_once('=')
            .ok_or_else(|| Failure::input(format!("--known expects K=PATH, got `{item}`")))?;
        let k: usize = k
            .trim()
            .parse()
            .map_err(|_| Failure::input(format!("invalid position `{k}`")))?;
        let position = claim(k)?;
        tables.insert(position, read_table(Path::new(path))?);
    }
    for &k in unknown {
        claim(k)?;
    }
    if !unknown.is_empty() {
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Failure::input(format!(
                "position {} is neither known nor unknown",
                missing + 1
            )));
        }
    }
    Ok(tables)
}

fn solution_path(dir: &Path, index: usize, suffix: Option<usize>) -> PathBuf {
    match suffix {
        None => dir.join(format!("sol-{index:06}.mvlf")),
        Some(k) => dir.join(format!("sol-{index:06}-f{k}.mvlf")),
    }
}

fn solve_g(
    args: &[TruthTable],
    y: &TruthTable,
    mode: &Mode,
    output: &EnumerationOutput,
    out: &mut dyn Write,
) -> CliResult {
    let sol = solve_for_g(args, y)?;
    if mode.count {
        writeln!(out, "{}", sol.solution_count())?;
    } else if mode.partial {
        let partial = sol.partial();
        let alphabet = partial.alphabet();
        writeln!(
            out,
            "bound {} free {} solutions {}",
            sol.bound_count(),
            sol.free_count(),
            sol.solution_count()
        )?;
        for (address, cell) in partial.cells().iter().enumerate() {
            let tuple = partial.tuple_at(address)?;
            let value = match cell {
                Cell::Bound(v) => alphabet.symbol(*v)?,
                Cell::Free => "*",
            };
            writeln!(out, "{address}\t{}\t{value}", tuple.display(alphabet))?;
        }
    } else if let Some(limit) = mode.enumerate {
        fs::create_dir_all(&output.out_dir)?;
        for (i, g) in sol.solutions().take(limit).enumerate() {
            let path = solution_path(&output.out_dir, i + 1, None);
            write_output(Some(&path), &encode(&g, output.format)?, out)?;
            writeln!(out, "{}", path.display())?;
        }
    }
    Ok(())
}

fn solve_f(
    g: &TruthTable,
    y: &TruthTable,
    known: &BTreeMap<usize, TruthTable>,
    mode: &Mode,
    output: &EnumerationOutput,
    out: &mut dyn Write,
) -> CliResult {
    let space = solve_for_f(g, y, known)?;
    if !space.has_solution() {
        writeln!(out, "no solution")?;
        return Ok(());
    }
    let alphabet = space.alphabet();
    if mode.count {
        writeln!(out, "{}", space.solution_count())?;
    } else if mode.partial {
        let names: Vec<String> = space
            .unknown_positions()
            .iter()
            .map(|p| format!("f{}", p + 1))
            .collect();
        writeln!(
            out,
            "unknown [{}] solutions {}",
            names.join(" "),
            space.solution_count()
        )?;
        for address in 0..y.len() {
            let tuple = tuple_from_address(address, y.radix(), y.arity())?;
            let choices = space
                .admissible_at(address)?
                .iter()
                .map(|t| t.display(alphabet).to_string())
                .collect::<Vec<_>>();
            writeln!(
                out,
                "{address}\t{}\t{}",
                tuple.display(alphabet),
                choices.join(" ")
            )?;
        }
    } else if let Some(limit) = mode.enumerate {
        fs::create_dir_all(&output.out_dir)?;
        let positions = space.unknown_positions();
        for (i, tables) in space.solutions().take(limit).enumerate() {
            if tables.is_empty() {
                writeln!(out, "empty assignment")?;
                continue;
            }
            for (table, &position) in tables.iter().zip(positions) {
                let suffix = (positions.len() > 1).then_some(position + 1);
                let path = solution_path(&output.out_dir, i + 1, suffix);
                write_output(Some(&path), &encode(table, output.format)?, out)?;
                writeln!(out, "{}", path.display())?;
            }
        }
    }
    Ok(())
}
