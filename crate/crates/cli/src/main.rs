//! `witnesslab`: build witness automata, apply operations, verify
//! state-complexity bounds and export automata.
//!
//! Exit status: 0 on success, 1 when a verification case fails, 2 on usage
//! or input errors.

use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use witnesslab::automaton::DEFAULT_SUBSET_CAP;
use witnesslab::complexity::report::{to_csv, to_table};
use witnesslab::complexity::{construct, BoundTable, OperationKind, VerificationReport, Verifier};
use witnesslab::dot::to_dot;
use witnesslab::json::{from_json, to_json};
use witnesslab::minimize::minimize_refine;
use witnesslab::witness::{build_witness, transition_monoid_size, WitnessSpec};
use witnesslab::{Automaton, Dfa};

const SPEC_HELP: &str = "\
Witness specs:
  U[n=5;letters=abc;finals=4]      U_5(a,b,c), final state 4
  U[n=6;letters=ab]                binary U_6(a,b), final state defaults to n-1
  V[n=5;letters=dcba]              V_5(d,c,b,a)
  U[n=4;letters=bac;finals=1,3]    U_{1,3},4(b,a,c)

  letters are positional: cycle, transposition, singular map, identity.
  Optional dialect fields: swap=p,q (transposed pair), send=r,s (r -> s).
  Defaults: U swaps 0,1 and sends n-1 -> 0; V swaps n-2,n-1 and sends n-1 -> n-2.

Operands may also be JSON automaton files, or '-' for standard input.
The environment variable WITNESSLAB_MAX_N lowers the subset-construction cap (at most 24).";

#[derive(Parser)]
#[command(name = "witnesslab", version, about = "State complexity of operations on universal witness languages", after_help = SPEC_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a witness DFA and print it as JSON.
    Build {
        spec: String,
        /// Print Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Apply an operation to one or two operands and print the result.
    Apply {
        /// Operation kind, e.g. union, symdiff_r_right, cat_r_left, star_r, rev.
        op: String,
        left: String,
        right: Option<String>,
        /// Determinize (if needed) and minimize the result.
        #[arg(long)]
        minimize: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Check measured state complexities against the bound catalogue.
    Verify {
        /// Kinds, groups (bool, bool_r_right, bool_r_both, ...) or `all`.
        #[arg(default_value = "all")]
        kinds: Vec<String>,
        /// Range of m, e.g. 3..5 (inclusive).
        #[arg(long)]
        m_range: Option<String>,
        /// Range of n, e.g. 3..8 (inclusive).
        #[arg(long)]
        n_range: Option<String>,
        /// Also write the report as CSV to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Add the unmodified-witness rows at m = n = 4, expecting 202 and 116.
        #[arg(long)]
        lemma_exception: bool,
        /// TOML file overriding entries of the bound catalogue.
        #[arg(long)]
        bounds: Option<PathBuf>,
        /// Print the bound catalogue as TOML and exit.
        #[arg(long)]
        print_bounds: bool,
    },
    /// Size of the transition monoid of an automaton.
    Monoid {
        spec: String,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Re-emit an automaton as canonical JSON or DOT.
    Export {
        input: String,
        #[arg(long)]
        dot: bool,
    },
}

/// An error reported on stderr with exit status 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = Result<T, UsageError>;

fn subset_cap() -> CliResult<usize> {
    match std::env::var("WITNESSLAB_MAX_N") {
        Ok(value) => {
            let cap: usize = value.trim().parse().map_err(|_| {
                UsageError(format!(
                    "WITNESSLAB_MAX_N must be an integer, found '{value}'"
                ))
            })?;
            Ok(cap.min(DEFAULT_SUBSET_CAP))
        }
        Err(_) => Ok(DEFAULT_SUBSET_CAP),
    }
}

fn read_input(source: &str) -> CliResult<String> {
    if source == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(source).map_err(|e| UsageError(format!("{source}: {e}")))
    }
}

fn is_spec(text: &str) -> bool {
    text.starts_with("U[") || text.starts_with("V[")
}

fn parse_spec(text: &str) -> CliResult<WitnessSpec> {
    let spec: WitnessSpec = text
        .parse()
        .map_err(|e| UsageError(format!("invalid witness spec '{text}' {e}")))?;
    spec.validate()?;
    Ok(spec)
}

fn load(source: &str) -> CliResult<Automaton> {
    if is_spec(source) {
        Ok(build_witness(&parse_spec(source)?)?.into())
    } else {
        Ok(from_json(&read_input(source)?)?)
    }
}

fn load_dfa(source: &str) -> CliResult<Dfa> {
    match load(source)? {
        Automaton::Dfa(d) => Ok(d),
        Automaton::Nfa(_) => Err(UsageError(format!(
            "{source}: operands must be DFAs, found an NFA"
        ))),
    }
}

fn render(a: &Automaton, dot: bool) -> String {
    if dot {
        to_dot(a)
    } else {
        format!("{}\n", to_json(a))
    }
}

fn parse_range(text: &str) -> CliResult<RangeInclusive<usize>> {
    let (lo, hi) = if let Some((lo, hi)) = text.split_once("..=") {
        (lo, hi)
    } else if let Some((lo, hi)) = text.split_once("..") {
        (lo, hi)
    } else {
        (text, text)
    };
    let parse = |s: &str| -> CliResult<usize> {
        s.trim()
            .parse()
            .map_err(|_| UsageError(format!("invalid range '{text}': expected e.g. 3..6")))
    };
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo < 3 || lo > hi {
        return Err(UsageError(format!(
            "invalid range '{text}': bounds must satisfy 3 <= low <= high"
        )));
    }
    if hi > DEFAULT_SUBSET_CAP {
        return Err(UsageError(format!(
            "invalid range '{text}': sizes above {DEFAULT_SUBSET_CAP} are not supported"
        )));
    }
    Ok(lo..=hi)
}

fn default_range(kind: OperationKind) -> RangeInclusive<usize> {
    if kind.is_doubly_exponential_in_size() {
        3..=6
    } else {
        3..=7
    }
}

fn emit(text: &str) -> CliResult<()> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify(
    kinds: &[String],
    m_range: Option<String>,
    n_range: Option<String>,
    csv: Option<PathBuf>,
    lemma_exception: bool,
    bounds: Option<PathBuf>,
    print_bounds: bool,
) -> CliResult<ExitCode> {
    let table = match bounds {
        Some(path) => BoundTable::from_toml(
            &fs::read_to_string(&path)
                .map_err(|e| UsageError(format!("{}: {e}", path.display())))?,
        )?,
        None => BoundTable::builtin(),
    };
    if print_bounds {
        emit(&table.to_toml())?;
        return Ok(ExitCode::SUCCESS);
    }
    let mut selected = Vec::new();
    for item in kinds {
        selected.extend(OperationKind::parse_list(item).map_err(UsageError)?);
    }
    selected.sort();
    selected.dedup();
    let m_range = m_range.as_deref().map(parse_range).transpose()?;
    let n_range = n_range.as_deref().map(parse_range).transpose()?;

    let verifier = Verifier {
        bounds: table,
        subset_cap: subset_cap()?,
    };
    let mut report = VerificationReport::default();
    for kind in &selected {
        let m = m_range.clone().unwrap_or_else(|| default_range(*kind));
        let n = n_range.clone().unwrap_or_else(|| default_range(*kind));
        report.extend(verifier.verify_sweep(&[*kind], m, n));
    }
    if lemma_exception {
        report.extend(verifier.verify_lemma_witnesses(4..=4, 4..=4));
    }

    emit(&to_table(&report))?;
    if let Some(path) = csv {
        fs::write(&path, to_csv(&report))
            .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Build { spec, dot } => {
            let d = build_witness(&parse_spec(&spec)?)?;
            emit(&render(&d.into(), dot))?;
        }
        Command::Apply {
            op,
            left,
            right,
            minimize,
            dot,
        } => {
            let kind: OperationKind = op.parse().map_err(UsageError)?;
            match (kind.is_unary(), right.is_some()) {
                (true, true) => {
                    return Err(UsageError(format!("'{op}' takes one operand")));
                }
                (false, false) => {
                    return Err(UsageError(format!("'{op}' takes two operands")));
                }
                _ => {}
            }
            let cap = subset_cap()?;
            let left = load_dfa(&left)?;
            let right = right.as_deref().map(load_dfa).transpose()?;
            let built = construct(kind, &left, right.as_ref(), cap)?;
            eprintln!("constructed: {} states", built.n());
            let result = if minimize {
                let min = minimize_refine(&built.into_dfa(cap)?);
                eprintln!("minimal: {} states", min.n());
                min.into()
            } else {
                built
            };
            emit(&render(&result, dot))?;
        }
        Command::Verify {
            kinds,
            m_range,
            n_range,
            csv,
            lemma_exception,
            bounds,
            print_bounds,
        } => {
            return verify(
                &kinds,
                m_range,
                n_range,
                csv,
                lemma_exception,
                bounds,
                print_bounds,
            )
        }
        Command::Monoid { spec, cap } => {
            let d = match load(&spec)? {
                Automaton::Dfa(d) => d,
                Automaton::Nfa(_) => return Err(UsageError("monoid needs a DFA".into())),
            };
            match transition_monoid_size(&d, cap) {
                Ok(size) => emit(&format!("{size}\n"))?,
                Err(witnesslab::Error::MonoidCapExceeded { cap }) => {
                    emit(&format!("exceeded cap ({cap})\n"))?
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Export { input, dot } => {
            emit(&render(&load(&input)?, dot))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
