//! Argument parsing and dispatch for the `snakes` binary.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use snakes_core::duality::{branch_snakes, dual_monomial, gap, verify_branching};
use snakes_core::lattice::fold_char;
use snakes_core::paths::{enum_paths_a, enum_paths_b};
use snakes_core::segments::{MultiSegment, NopSetSpec, Side};
use snakes_core::snakes::{char_snake, for_each_nop_tuple, qchar_snake, twisted_char_snake, Snake};
use snakes_core::{Limits, SnakeA, SnakeB};

use crate::error::CliError;
use crate::grammar::{parse_ints, parse_segments, parse_selection, parse_snake};
use crate::json;
use crate::render::{b_path_header, b_path_row, character_table, Doc, Format, Table};
use crate::report;
use crate::suite::{criteria, run_criterion, Criterion, CriterionResult};

const AFTER_HELP: &str = "\
Grammars (one argument per flag, no spaces needed):
  snake       i:k,i:k,...     points of a snake, e.g. \"1:4,1:8\"
  segments    l-r,l-r,...     a multisegment, e.g. \"0-1,2-3\"; negative ends as \"-2--1\"
  integers    a,b,...         e.g. \"0,4,8\"
  criteria    1,3-5,...       suite criteria to run

Type A ranks are Lie ranks: --type A --rank r works on A_r (paths with r+1 columns).

Environment:
  SNAKES_MAX_TUPLES   default for --max-tuples

Exit status: 0 success, 2 a verification failed, 1 usage or resource error.";

#[derive(Debug, Parser)]
#[command(name = "snakes", version, about = "Path combinatorics and Langlands duality checks for snake modules", after_help = AFTER_HELP)]
pub struct Cli {
    /// Worker threads, or "auto".
    #[arg(long, global = true, default_value = "auto", value_parser = parse_threads)]
    pub threads: Threads,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Cap on enumerated tuples per computation.
    #[arg(long, global = true, env = "SNAKES_MAX_TUPLES", default_value_t = Limits::DEFAULT_MAX_TUPLES,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_tuples: u64,

    /// Seed for the randomized suite specifications.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threads {
    Auto,
    Fixed(usize),
}

fn parse_threads(s: &str) -> Result<Threads, String> {
    match s {
        "auto" => Ok(Threads::Auto),
        _ => match s.parse::<usize>() {
            Ok(0) | Err(_) => Err(format!("expected a positive integer or 'auto', got '{s}'")),
            Ok(t) => Ok(Threads::Fixed(t)),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Debug, Args)]
pub struct TypedSnake {
    #[arg(long = "type", value_enum)]
    pub kind: Kind,
    /// Lie rank: r for A_r, n for B_n.
    #[arg(long)]
    pub rank: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub snake: String,
}

#[derive(Debug, Args)]
pub struct BSnake {
    #[arg(long)]
    pub n: usize,
    /// Type B snake, i:k,...
    #[arg(long, allow_hyphen_values = true)]
    pub snake: String,
}

#[derive(Debug, Args)]
pub struct Segments {
    /// The A_{n-1} multisegment lives on n+1... columns; n is the segment bound.
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub segments: String,
}

#[derive(Debug, Args)]
pub struct Point {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub i: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub k: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the paths of one path set.
    Paths {
        #[arg(long = "type", value_enum)]
        kind: Kind,
        /// Columns of a type A path (A_{m-1}).
        #[arg(long)]
        m: Option<usize>,
        /// Rank of a type B path.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        i: usize,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// The q-character of a snake module.
    Qchar(TypedSnake),
    /// The usual character of a snake module.
    Char(TypedSnake),
    /// The folded (twisted) character of an A_{2n-1} snake module; --rank is 2n-1.
    Fold {
        #[arg(long)]
        rank: usize,
        #[arg(long, allow_hyphen_values = true)]
        snake: String,
    },
    /// The Langlands dual monomial of a type B snake and its twisted character.
    Dual(BSnake),
    /// Gap histogram of the NOP tuples of a snake, or gaps of single paths with --i/--k.
    Gap {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["i", "k"])]
        snake: Option<String>,
        #[arg(long, requires = "k")]
        i: Option<usize>,
        #[arg(long, allow_negative_numbers = true, requires = "i")]
        k: Option<i64>,
    },
    /// The branching summands of a type B snake.
    Branch(BSnake),
    /// Check a theorem and print a report.
    Verify {
        #[command(subcommand)]
        theorem: Theorem,
    },
    /// Time the suite criteria; timings go to stderr.
    Bench {
        #[arg(long)]
        criteria: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Theorem {
    /// Pi(chi(L(m))) dominates the twisted character of the dual module.
    Dominance(BSnake),
    /// Pi(chi(L(m))) equals the sum of the branching summands.
    Branching(BSnake),
    /// Fiberwise match of type B tuples with glued A_{2n-1} tuples.
    Decomposition(BSnake),
    /// Pi(chi(L(m))) equals the folded character of the moving-endpoint A_{2n-1} tuples.
    Bijection(BSnake),
    /// Gap-0 tuples are exactly the image of F.
    Gap0(BSnake),
    /// chi(L(m)) is dominated by the image of the twisted tensor square.
    Tensor(BSnake),
    /// The type A identity for shift total M.
    Identity {
        #[command(flatten)]
        segs: Segments,
        #[arg(long = "M")]
        m: u64,
    },
    /// Determinant formula against the path character.
    Det(Segments),
    /// G preserves weight and is injective on one type B path set.
    GWeight(Point),
    /// Generalized Kirillov-Reshetikhin dominance (k is the type A shift).
    Gkr {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Corner transport of F on the type A paths with 2n columns.
    Corners(Point),
    /// Sets A and B share their weight and half-character statistics.
    Ab {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        x0: String,
        #[arg(long, allow_hyphen_values = true)]
        xn: String,
        #[arg(long = "M")]
        m: u64,
    },
    /// Run the acceptance sweeps.
    Suite {
        #[arg(long)]
        criteria: Option<String>,
    },
}

/// Parses `argv`, runs the command and writes its output; returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    match execute(&cli, err) {
        Ok(doc) => emit(&doc, cli.format, out, err),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Writes `doc` and maps its verdict to an exit code.
fn emit(doc: &Doc, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match doc
        .render(format, out)
        .and_then(|_| out.flush().map_err(CliError::from))
    {
        Ok(()) if doc.verified() => 0,
        Ok(()) => 2,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(cli: &Cli, err: &mut dyn Write) -> Result<Doc, CliError> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Threads::Fixed(t) = cli.threads {
        pool = pool.num_threads(t);
    }
    let pool = pool.build()?;
    let limits = Limits::new(cli.max_tuples);
    let mut notes = Vec::new();
    let doc = pool.install(|| dispatch(cli, &limits, &mut notes));
    for line in notes {
        writeln!(err, "{line}")?;
    }
    doc
}

fn snake_b(n: usize, text: &str) -> Result<SnakeB, CliError> {
    Ok(SnakeB::new(n, parse_snake(text)?)?)
}

fn multisegment(segs: &Segments) -> Result<MultiSegment, CliError> {
    Ok(MultiSegment::from_pairs(
        segs.n,
        &parse_segments(&segs.segments)?,
    )?)
}

fn selected(cli: &Cli, text: Option<&str>) -> Result<Vec<Criterion>, CliError> {
    let all = criteria(cli.seed);
    let Some(text) = text else { return Ok(all) };
    let ids = parse_selection(text)?;
    if let Some(bad) = ids.iter().find(|&&id| !all.iter().any(|c| c.id == id)) {
        return Err(CliError::Usage(format!("unknown criterion {bad}")));
    }
    Ok(all.into_iter().filter(|c| ids.contains(&c.id)).collect())
}

/// Runs the command; `notes` collects lines destined for stderr.
fn dispatch(cli: &Cli, limits: &Limits, notes: &mut Vec<String>) -> Result<Doc, CliError> {
    Ok(match &cli.command {
        Command::Paths { kind, m, n, i, k } => match kind {
            Kind::A => {
                let m = m.ok_or_else(|| CliError::Usage("type A paths need --m".into()))?;
                Doc::PathsA(enum_paths_a(m, *i, *k)?)
            }
            Kind::B => {
                let n = n.ok_or_else(|| CliError::Usage("type B paths need --n".into()))?;
                Doc::PathsB(enum_paths_b(n, *i, *k)?)
            }
        },
        Command::Qchar(s) => {
            let points = parse_snake(&s.snake)?;
            let json = match s.kind {
                Kind::A => json::y_qchar(
                    "A",
                    s.rank,
                    &qchar_snake(&SnakeA::new(s.rank + 1, points)?, limits)?,
                ),
                Kind::B => json::y_qchar(
                    "B",
                    s.rank,
                    &qchar_snake(&SnakeB::new(s.rank, points)?, limits)?,
                ),
            };
            let mut table = Table::new(["monomial", "mult"]);
            for term in json["terms"].as_array().expect("terms array") {
                table.push([term[0].to_string(), term[1].to_string()]);
            }
            Doc::Other {
                json,
                table,
                holds: true,
            }
        }
        Command::Char(s) => {
            let points = parse_snake(&s.snake)?;
            Doc::Character(match s.kind {
                Kind::A => char_snake(&SnakeA::new(s.rank + 1, points)?, limits)?,
                Kind::B => char_snake(&SnakeB::new(s.rank, points)?, limits)?,
            })
        }
        Command::Fold { rank, snake } => {
            if rank % 2 == 0 {
                return Err(CliError::Usage(format!(
                    "fold needs an odd rank 2n-1, got {rank}"
                )));
            }
            let s = SnakeA::new(rank + 1, parse_snake(snake)?)?;
            Doc::Character(fold_char(&char_snake(&s, limits)?)?)
        }
        Command::Dual(b) => {
            let s = snake_b(b.n, &b.snake)?;
            let halved = s.halved();
            let character = twisted_char_snake(&halved, limits)?;
            let json = json!({
                "n": s.n(),
                "snake": json::points(s.points()),
                "dual_monomial": json::z_monomial(&dual_monomial(&s)),
                "halved": json::points(halved.points()),
                "character": json::character(&character),
            });
            Doc::Other {
                json,
                table: character_table(&character),
                holds: true,
            }
        }
        Command::Gap { n, snake, i, k } => match (snake, i, k) {
            (Some(text), None, None) => {
                let s = snake_b(*n, text)?;
                let sets = s.path_sets()?;
                let mut hist = std::collections::BTreeMap::<u64, u64>::new();
                let total = for_each_nop_tuple(&sets, limits, |tuple| {
                    let g = tuple
                        .iter()
                        .enumerate()
                        .map(|(t, &idx)| gap(&sets[t][idx]))
                        .sum::<u64>();
                    *hist.entry(g).or_insert(0) += 1;
                })?;
                let mut table = Table::new(["gap", "tuples"]);
                for (g, c) in &hist {
                    table.push([g, c]);
                }
                let pairs: Vec<_> = hist.iter().map(|(g, c)| json!([g, c])).collect();
                let json = json!({ "n": n, "snake": json::points(s.points()), "tuples": total, "histogram": pairs });
                Doc::Other {
                    json,
                    table,
                    holds: true,
                }
            }
            (None, Some(i), Some(k)) => {
                let paths = enum_paths_b(*n, *i, *k)?;
                let mut table =
                    Table::new(std::iter::once("gap".to_string()).chain(b_path_header(*n)));
                let mut rows = Vec::new();
                for p in &paths {
                    let mut row = vec![gap(p).to_string()];
                    row.extend(b_path_row(p));
                    table.rows.push(row);
                    rows.push(json!({ "gap": gap(p), "path": json::path_b(p) }));
                }
                Doc::Other {
                    json: serde_json::Value::Array(rows),
                    table,
                    holds: true,
                }
            }
            _ => {
                return Err(CliError::Usage(
                    "gap needs either --snake or both --i and --k".into(),
                ))
            }
        },
        Command::Branch(b) => {
            let s = snake_b(b.n, &b.snake)?;
            let snakes = branch_snakes(&s)?;
            let r = verify_branching(&s, limits)?;
            let mut table = Table::new(["shifts", "monomial", "mass"]);
            let mut summands = Vec::new();
            for (summand, snake) in r.summands.iter().zip(&snakes) {
                let shifts: Vec<String> = summand.shifts.iter().map(ToString::to_string).collect();
                table.push([
                    shifts.join(" "),
                    summand.monomial.to_string(),
                    summand.mass.to_string(),
                ]);
                summands.push(json!({
                    "shifts": summand.shifts,
                    "monomial": json::z_monomial(&summand.monomial),
                    "snake": snake.as_ref().map(|a| json::points(a.points())),
                    "mass": json::big(&summand.mass),
                }));
            }
            let json =
                json!({ "n": s.n(), "snake": json::points(s.points()), "summands": summands });
            Doc::Other {
                json,
                table,
                holds: true,
            }
        }
        Command::Verify { theorem } => match theorem {
            Theorem::Dominance(b) => Doc::Report(Box::new(report::dominance(
                &snake_b(b.n, &b.snake)?,
                limits,
            )?)),
            Theorem::Branching(b) => Doc::Report(Box::new(report::branching(
                &snake_b(b.n, &b.snake)?,
                limits,
            )?)),
            Theorem::Decomposition(b) => Doc::Report(Box::new(report::decomposition(
                &snake_b(b.n, &b.snake)?,
                limits,
            )?)),
            Theorem::Bijection(b) => Doc::Report(Box::new(report::bijection(
                &snake_b(b.n, &b.snake)?,
                limits,
            )?)),
            Theorem::Gap0(b) => {
                Doc::Report(Box::new(report::gap0(&snake_b(b.n, &b.snake)?, limits)?))
            }
            Theorem::Tensor(b) => {
                Doc::Report(Box::new(report::tensor(&snake_b(b.n, &b.snake)?, limits)?))
            }
            Theorem::Identity { segs, m } => Doc::Report(Box::new(report::identity(
                &multisegment(segs)?,
                *m,
                limits,
            )?)),
            Theorem::Det(segs) => Doc::Report(Box::new(report::det(&multisegment(segs)?, limits)?)),
            Theorem::GWeight(p) => Doc::Report(Box::new(report::g_weight(p.n, p.i, p.k)?)),
            Theorem::Gkr { n, i, t, k } => {
                Doc::Report(Box::new(report::gkr(*n, *i, *t, *k, limits)?))
            }
            Theorem::Corners(p) => Doc::Report(Box::new(report::corners(p.n, p.i, p.k)?)),
            Theorem::Ab { n, x0, xn, m } => {
                let spec = NopSetSpec::new(*n, parse_ints(x0)?, parse_ints(xn)?, *m, Side::A)?;
                Doc::Report(Box::new(report::ab(&spec, limits)?))
            }
            Theorem::Suite { criteria } => {
                let chosen = selected(cli, criteria.as_deref())?;
                let results: Result<Vec<CriterionResult>, _> =
                    chosen.iter().map(|c| run_criterion(c, limits)).collect();
                Doc::Suite(results?)
            }
        },
        Command::Bench { criteria } => {
            let chosen = selected(cli, criteria.as_deref())?;
            let mut table = Table::new(["criterion", "checks", "passed"]);
            let mut rows = Vec::new();
            let mut all_hold = true;
            for c in &chosen {
                let start = Instant::now();
                let r = run_criterion(c, limits)?;
                notes.push(format!(
                    "criterion {:>2}: {:>10.3} ms  {} checks",
                    c.id,
                    start.elapsed().as_secs_f64() * 1e3,
                    r.checks
                ));
                all_hold &= r.holds;
                table.push([r.id as usize, r.checks, r.passed]);
                rows.push(json!({ "id": r.id, "checks": r.checks, "passed": r.passed }));
            }
            let json = json!({ "criteria": rows, "holds": all_hold });
            Doc::Other {
                json,
                table,
                holds: all_hold,
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_reports_exit_with_two() {
        let mut r = report::path_count(3, 1, 0).unwrap();
        let mut out = Vec::new();
        assert_eq!(
            emit(
                &Doc::Report(Box::new(r.clone())),
                Format::Json,
                &mut out,
                &mut Vec::new()
            ),
            0
        );
        r.holds = false;
        for format in [Format::Json, Format::Csv, Format::Pretty] {
            let mut out = Vec::new();
            assert_eq!(
                emit(
                    &Doc::Report(Box::new(r.clone())),
                    format,
                    &mut out,
                    &mut Vec::new()
                ),
                2
            );
            assert!(!out.is_empty());
        }
    }

    #[test]
    fn threads_flag() {
        assert_eq!(parse_threads("auto"), Ok(Threads::Auto));
        assert_eq!(parse_threads("3"), Ok(Threads::Fixed(3)));
        assert!(parse_threads("0").is_err());
        assert!(parse_threads("many").is_err());
    }
}
