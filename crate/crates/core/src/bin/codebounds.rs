use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use codebounds::bounds::{best_upper_k, bound_a_check, parse_bound_list, BoundId, BoundQuery};
use codebounds::oracle::{
    best_linear_d, is_prime, refutation_crosscheck, Crosscheck, DEFAULT_BUDGET,
};
use codebounds::report::{
    diff_rows, golden_rows, parse_block_list, parse_range, parse_table_rows, render_comparison,
    sweep, Block, Format,
};
use codebounds::{Error, RhsVariant};

#[derive(Parser)]
#[command(
    name = "codebounds",
    version,
    about = "Exact upper bounds on the dimension of q-ary codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the selected bounds for one (q, n, d).
    Eval(EvalArgs),
    /// Sweep the selected bounds over ranges of n and d.
    Table(TableArgs),
    /// Recompute the golden comparison table and diff it.
    Table1(Table1Args),
    /// Exhaustive searches over small codes.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Clone)]
struct BoundList(Vec<BoundId>);

#[derive(Clone)]
struct BlockList(Vec<Block>);

#[derive(Args)]
struct BoundSelection {
    /// Comma list from a, griesmer, singleton, hamming, plotkin, elias, levenshtein, all.
    #[arg(long, default_value = "all", value_parser = |s: &str| parse_bound_list(s).map(BoundList))]
    bounds: BoundList,
    /// Right-hand side of Bound A.
    #[arg(long = "variant-a", default_value_t = RhsVariant::Weight)]
    variant_a: RhsVariant,
    #[arg(long, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    q: u32,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    d: u32,
    #[command(flatten)]
    selection: BoundSelection,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    q: u32,
    #[arg(long, conflicts_with = "n_range", required_unless_present = "n_range")]
    n: Option<u32>,
    /// Inclusive range LO..HI.
    #[arg(long = "n-range", value_parser = parse_range)]
    n_range: Option<RangeInclusive<u32>>,
    #[arg(long, conflicts_with = "d_range", required_unless_present = "d_range")]
    d: Option<u32>,
    /// Inclusive range LO..HI.
    #[arg(long = "d-range", value_parser = parse_range)]
    d_range: Option<RangeInclusive<u32>>,
    #[command(flatten)]
    selection: BoundSelection,
}

#[derive(Args)]
struct Table1Args {
    /// Comma list from g, h, l, e, all.
    #[arg(long, default_value = "all", value_parser = |s: &str| parse_block_list(s).map(BlockList))]
    block: BlockList,
    /// Do not fail on the documented cells.
    #[arg(long = "allow-documented")]
    allow_documented: bool,
    /// Read the expected values from this file instead of the embedded copy.
    #[arg(long)]
    data: Option<PathBuf>,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Largest minimum distance over all systematic linear (n, k) codes.
    BestD {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Confirm every Bound A refutation in range by exhaustive search.
    RefuteCheck {
        #[arg(long)]
        q: u32,
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long = "k-max")]
        k_max: usize,
        #[arg(long = "d-max")]
        d_max: usize,
        #[arg(long = "variant-a", default_value_t = RhsVariant::Weight)]
        variant_a: RhsVariant,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

/// Exit status: 0 success, 1 mismatch or contradiction, 2 usage or resource error.
enum Failure {
    Mismatch,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Eval(args) => eval(args),
        Command::Table(args) => table(args),
        Command::Table1(args) => table1(args),
        Command::Oracle(cmd) => oracle(cmd),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn eval(args: EvalArgs) -> Outcome {
    let sel = args.selection;
    let query = BoundQuery::new(args.n, args.d, args.q)?.with_variant(sel.variant_a);
    let cmp = best_upper_k(&query, &sel.bounds.0)?;
    print!("{}", render_comparison(&cmp, sel.format));
    Ok(())
}

fn table(args: TableArgs) -> Outcome {
    let n = args.n_range.unwrap_or_else(|| {
        let n = args.n.expect("clap enforces --n or --n-range");
        n..=n
    });
    let d = args.d_range.unwrap_or_else(|| {
        let d = args.d.expect("clap enforces --d or --d-range");
        d..=d
    });
    let sel = args.selection;
    let table = sweep(args.q, n, d, &sel.bounds.0, sel.variant_a)?;
    print!("{}", table.render(sel.format));
    Ok(())
}

fn table1(args: Table1Args) -> Outcome {
    let rows = match &args.data {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            parse_table_rows(&text)?
        }
        None => golden_rows(),
    };
    let report = diff_rows(&rows, &args.block.0, args.allow_documented)?;
    println!("{report}");
    if report.is_success() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn oracle_alphabet(q: u32) -> Result<u8, Failure> {
    if q < 2 {
        return Err(Error::InvalidAlphabet(q).into());
    }
    match u8::try_from(q) {
        Ok(small) if is_prime(q) => Ok(small),
        _ => Err(Error::UnsupportedAlphabet(q).into()),
    }
}

fn oracle(cmd: OracleCommand) -> Outcome {
    match cmd {
        OracleCommand::BestD { q, n, k, budget } => {
            let best = best_linear_d(n, k, oracle_alphabet(q)?, budget)?;
            println!("best d = {}", best.d);
            println!("codes searched: {}", best.codes_searched);
            println!("witness generator [I | T]:");
            println!("{}", best.generator);
            Ok(())
        }
        OracleCommand::RefuteCheck {
            q,
            n_max,
            k_max,
            d_max,
            variant_a,
            budget,
        } => {
            let qb = oracle_alphabet(q)?;
            let (mut checked, mut contradictions) = (0u64, 0u64);
            for n in 4..=n_max {
                for k in 3..=k_max.min(n - 1) {
                    for d in 3..=d_max.min(n) {
                        let verdict = bound_a_check(n as u32, k as u32, d as u32, q, variant_a)?;
                        if !verdict.is_refuted() {
                            continue;
                        }
                        checked += 1;
                        match refutation_crosscheck(n, k, d, qb, variant_a, budget)? {
                            Crosscheck::Confirmed {
                                linear_codes,
                                systematic_codes,
                            } => {
                                let systematic = systematic_codes
                                    .map_or("skipped".to_string(), |c| c.to_string());
                                println!(
                                    "n={n} k={k} d={d} confirmed linear={linear_codes} systematic={systematic}"
                                );
                            }
                            Crosscheck::Contradiction(code) => {
                                contradictions += 1;
                                let words: Vec<String> =
                                    code.words().iter().map(|w| w.to_string()).collect();
                                println!(
                                    "n={n} k={k} d={d} contradiction code={}",
                                    words.join(",")
                                );
                            }
                        }
                    }
                }
            }
            println!("refutations checked: {checked}, contradictions: {contradictions}");
            if contradictions == 0 {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
    }
}
