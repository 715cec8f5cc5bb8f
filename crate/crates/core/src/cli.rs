//! Command-line front end: full solves to CSV, per-hand advice, exact
//! distribution statistics, and chart verification.
//!
//! Exit codes: 0 success (or verified), 1 verification failure, 2 usage or
//! configuration error.

use crate::canonical::EquivClass;
use crate::deck::{builtin_paytable, Hand, PayTable, BUILTIN_PAYTABLE_NAMES};
use crate::distribution::{
    self, build_distribution, class_count_checks, distinct_value_counts, expected_return,
    format_ce_decimal, format_exact, garbage_hand_count, garbage_probability, median_ce,
};
use crate::expect::{ce_naive, solve_all, BackendKind, HoldMask, HoldResult};
use crate::strategy::{classify_with_row, verify_table, RankTable, BUILTIN_CHART_NAMES};
use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "vpoker",
    about = "Exact video poker solver and strategy-chart verifier",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Fast,
    Naive,
}

#[derive(Subcommand)]
enum Command {
    /// Solve every equivalence class and write one CSV row per class.
    Solve {
        /// Built-in pay table name or path to a pay-table file.
        #[arg(long, default_value = "job-9-6")]
        paytable: String,
        /// Evaluation backend; `naive` is the slow oracle.
        #[arg(long, value_enum, default_value = "fast")]
        backend: BackendArg,
        /// With the naive backend, solve only the first N classes.
        #[arg(long)]
        sample: Option<usize>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Print all 32 holds of a dealt hand with exact values.
    Advise {
        /// Five card tokens such as `8c Tc Jc Qc Kc`.
        cards: Vec<String>,
        #[arg(long, default_value = "job-9-6")]
        paytable: String,
    },
    /// Print exact distribution statistics for a pay table.
    Stats {
        #[arg(long, default_value = "job-9-6")]
        paytable: String,
        /// Write the full per-value distribution as CSV to this path.
        #[arg(long)]
        distribution: Option<PathBuf>,
        /// Print the full per-value distribution as an aligned table.
        #[arg(long)]
        print_distribution: bool,
    },
    /// Verify a hand-rank chart against the solver by exhaustion.
    Verify {
        /// Built-in chart name (`chart-optimal`, `chart-preliminary`) or a
        /// path to a chart file.
        #[arg(long, default_value = "chart-optimal")]
        chart: String,
        #[arg(long, default_value = "job-9-6")]
        paytable: String,
        /// Print at most this many violations.
        #[arg(long, default_value_t = 20)]
        max_print: usize,
    },
}

/// One CSV row of a full solve, in the 19-column layout: class number,
/// class size, five denominations, five suit labels, five hold flags, the
/// scaled optimal CE, and a u/n uniqueness flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveRow {
    pub class_index: u32,
    pub orbit_size: u32,
    pub denoms: [u8; 5],
    pub suit_labels: [u8; 5],
    pub hold_flags: [bool; 5],
    pub scaled_ce: u64,
    pub unique: bool,
}

impl SolveRow {
    pub fn from_result(r: &HoldResult) -> SolveRow {
        let class: &EquivClass = &r.class;
        let cards = class.canonical.hand().cards();
        SolveRow {
            class_index: class.class_index,
            orbit_size: class.orbit_size,
            denoms: std::array::from_fn(|i| cards[i].denom()),
            suit_labels: class.canonical.pattern(),
            hold_flags: r.best_mask.flags(),
            scaled_ce: r.best_ce(),
            unique: r.unique,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut line = format!("{},{}", self.class_index, self.orbit_size);
        for d in self.denoms {
            write!(line, ",{d}").unwrap();
        }
        for s in self.suit_labels {
            write!(line, ",{s}").unwrap();
        }
        for f in self.hold_flags {
            write!(line, ",{}", u8::from(f)).unwrap();
        }
        write!(
            line,
            ",{},{}",
            self.scaled_ce,
            if self.unique { 'u' } else { 'n' }
        )
        .unwrap();
        line
    }

    pub fn parse_csv(line: &str) -> Result<SolveRow> {
        let fields: Vec<&str> = line.trim_end().split(',').collect();
        if fields.len() != 19 {
            return Err(anyhow!("expected 19 fields, found {}", fields.len()));
        }
        let num = |i: usize| -> Result<u32> {
            fields[i]
                .parse()
                .with_context(|| format!("field {}", i + 1))
        };
        let flag = |i: usize| -> Result<bool> {
            match fields[i] {
                "1" => Ok(true),
                "0" => Ok(false),
                other => Err(anyhow!("bad hold flag {other:?} in field {}", i + 1)),
            }
        };
        let unique = match fields[18] {
            "u" => true,
            "n" => false,
            other => return Err(anyhow!("bad uniqueness flag {other:?}")),
        };
        let mut denoms = [0u8; 5];
        let mut suit_labels = [0u8; 5];
        let mut hold_flags = [false; 5];
        for i in 0..5 {
            denoms[i] = u8::try_from(num(2 + i)?).context("denomination")?;
            suit_labels[i] = u8::try_from(num(7 + i)?).context("suit label")?;
            hold_flags[i] = flag(12 + i)?;
        }
        Ok(SolveRow {
            class_index: num(0)?,
            orbit_size: num(1)?,
            denoms,
            suit_labels,
            hold_flags,
            scaled_ce: fields[17].parse().context("scaled CE")?,
            unique,
        })
    }
}

/// Renders the full solve as CSV text with LF line endings, in class order.
pub fn render_solve_csv(results: &[HoldResult]) -> String {
    let mut out = String::with_capacity(results.len() * 48);
    for r in results {
        out.push_str(&SolveRow::from_result(r).to_csv());
        out.push('\n');
    }
    out
}

/// Loads a pay table from a built-in name or a file path.
pub fn load_paytable(spec: &str) -> Result<PayTable> {
    if let Some(t) = builtin_paytable(spec) {
        return Ok(t);
    }
    let text = std::fs::read_to_string(spec).with_context(|| {
        format!(
            "pay table {spec:?} is neither a built-in ({}) nor a readable file",
            BUILTIN_PAYTABLE_NAMES.join(", ")
        )
    })?;
    PayTable::parse(&text).with_context(|| format!("parsing pay table {spec:?}"))
}

/// Loads a chart from a built-in name or a file path.
pub fn load_chart(spec: &str) -> Result<RankTable> {
    if let Ok(t) = RankTable::builtin(spec) {
        return Ok(t);
    }
    let text = std::fs::read_to_string(spec).with_context(|| {
        format!(
            "chart {spec:?} is neither a built-in ({}) nor a readable file",
            BUILTIN_CHART_NAMES.join(", ")
        )
    })?;
    RankTable::parse(&text).map_err(|e| anyhow!("parsing chart {spec:?}: {e}"))
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .context("building thread pool")?;
            Ok(pool.install(f))
        }
    }
}

fn cmd_solve(
    paytable: &str,
    backend: BackendArg,
    sample: Option<usize>,
    threads: Option<usize>,
    out: &PathBuf,
) -> Result<i32> {
    let table = load_paytable(paytable)?;
    let results = with_threads(threads, || match backend {
        BackendArg::Fast => solve_all(&table, BackendKind::Fast),
        BackendArg::Naive => {
            use crate::expect::{solve_class, Backend};
            use rayon::prelude::*;
            let classes = crate::canonical::enumerate_classes();
            let limit = sample.unwrap_or(classes.len()).min(classes.len());
            classes[..limit]
                .par_iter()
                .map(|c| solve_class(c, &table, Backend::Naive).expect("naive cannot fail"))
                .collect()
        }
    })?;
    let csv = render_solve_csv(&results);
    std::fs::write(out, csv).with_context(|| format!("writing {}", out.display()))?;
    println!(
        "{}: {} classes solved, output written to {}",
        table.name(),
        results.len(),
        out.display()
    );
    Ok(0)
}

fn cmd_advise(cards: &[String], paytable: &str) -> Result<i32> {
    if cards.len() != 5 {
        return Err(anyhow!("expected five card tokens, found {}", cards.len()));
    }
    let hand = Hand::parse(&cards.join(" "))?;
    let table = load_paytable(paytable)?;

    // One hand is cheap enough to evaluate by direct enumeration.
    let mut values: Vec<(HoldMask, u64)> = HoldMask::iter_all()
        .map(|m| (m, ce_naive(&hand, m, &table)))
        .collect();
    let best = values
        .iter()
        .map(|&(m, v)| (v, m.tiebreak_rank()))
        .max()
        .unwrap();
    values.sort_by(|a, b| (b.1, a.0.tiebreak_rank()).cmp(&(a.1, b.0.tiebreak_rank())));

    println!("hand: {hand}   pay table: {}", table.name());
    println!("{:>12} {:>14} {:>10}", "hold", "scaled CE", "CE");
    for (mask, value) in &values {
        let held: String = hand
            .cards()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask.contains(*i))
            .map(|(_, c)| c.to_string() + " ")
            .collect();
        let held = if held.is_empty() {
            "(none)".to_string()
        } else {
            held.trim_end().to_string()
        };
        let marker = if (*value, mask.tiebreak_rank()) == best {
            "  <- optimal"
        } else {
            ""
        };
        println!(
            "{:>12} {:>14} {:>10}{}",
            held,
            value,
            format_ce_decimal(*value),
            marker
        );
    }

    let chart = RankTable::builtin("chart-optimal").expect("built-in chart");
    let (chart_mask, row) = classify_with_row(&hand, &chart);
    let held: Vec<String> = hand
        .cards()
        .iter()
        .enumerate()
        .filter(|(i, _)| chart_mask.contains(*i))
        .map(|(_, c)| c.to_string())
        .collect();
    println!(
        "chart row {} ({}) holds: {}",
        row.rank,
        row.kind.token(),
        if held.is_empty() {
            "nothing".to_string()
        } else {
            held.join(" ")
        }
    );
    Ok(0)
}

fn cmd_stats(
    paytable: &str,
    distribution: Option<&PathBuf>,
    print_distribution: bool,
) -> Result<i32> {
    let table = load_paytable(paytable)?;
    let results = solve_all(&table, BackendKind::Fast);
    let dist = build_distribution(&results);
    let (total, with_hold, garbage_values) = distinct_value_counts(&results);
    let er = expected_return(&dist);
    let median = median_ce(&dist);
    let garbage = garbage_probability(&results);

    println!("pay table: {}", table.name());
    println!("equivalence classes: {}", results.len());
    println!("distinct optimal conditional expected returns: {total}");
    println!("  with at least one card held: {with_hold}");
    println!("  garbage (draw five): {garbage_values}");
    println!(
        "expected return: {}/{} = {}",
        er.numer(),
        er.denom(),
        format_exact(&er, 12)
    );
    println!(
        "median conditional expected return: {}/{} = {}",
        median.numer(),
        median.denom(),
        format_exact(&median, 6)
    );
    println!(
        "garbage probability: {}/{} = {} ({} hands)",
        garbage.numer(),
        garbage.denom(),
        format_exact(&garbage, 7),
        garbage_hand_count(&results)
    );
    if table == builtin_paytable("job-9-6").expect("built-in") {
        match class_count_checks(&dist) {
            Ok(report) => println!(
                "class-count checks: rank 32 = {} classes (weight {}), rank 80 = {}, rank 83 = {}",
                report.rank32_classes,
                report.rank32_weight,
                report.rank80_classes,
                report.rank83_classes
            ),
            Err(e) => println!("class-count checks FAILED: {e}"),
        }
    }
    if let Some(path) = distribution {
        std::fs::write(path, distribution::render_report_csv(&dist))
            .with_context(|| format!("writing {}", path.display()))?;
        println!("distribution written to {}", path.display());
    }
    if print_distribution {
        print!("{}", distribution::render_report(&dist));
    }
    Ok(0)
}

fn cmd_verify(chart: &str, paytable: &str, max_print: usize) -> Result<i32> {
    let chart_table = load_chart(chart)?;
    let table = load_paytable(paytable)?;
    let results = solve_all(&table, BackendKind::Fast);
    let violations = verify_table(&chart_table, &results);
    if violations.is_empty() {
        println!(
            "chart {:?} reproduces optimal play for {} on all {} classes",
            chart_table.name,
            table.name(),
            results.len()
        );
        return Ok(0);
    }
    println!(
        "chart {:?} fails on {} of {} classes under {}:",
        chart_table.name,
        violations.len(),
        results.len(),
        table.name()
    );
    for v in violations.iter().take(max_print) {
        let r = &results[(v.class_index - 1) as usize];
        let hand = r.class.canonical.hand();
        let describe = |mask: HoldMask| -> String {
            let cards: Vec<String> = hand
                .cards()
                .iter()
                .enumerate()
                .filter(|(i, _)| mask.contains(*i))
                .map(|(_, c)| c.to_string())
                .collect();
            if cards.is_empty() {
                "nothing".to_string()
            } else {
                cards.join(" ")
            }
        };
        println!(
            "  class {:>6} {}: row {} holds {} (scaled {}), optimal holds {} (scaled {})",
            v.class_index,
            hand,
            v.chart_rank,
            describe(v.chart_mask),
            v.chart_ce,
            describe(v.best_mask),
            v.best_ce
        );
    }
    if violations.len() > max_print {
        println!("  ... and {} more", violations.len() - max_print);
    }
    Ok(1)
}

/// Parses arguments and runs; returns the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; true usage errors
            // exit with code 2.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match &cli.command {
        Command::Solve {
            paytable,
            backend,
            sample,
            threads,
            out,
        } => cmd_solve(paytable, *backend, *sample, *threads, out),
        Command::Advise { cards, paytable } => cmd_advise(cards, paytable),
        Command::Stats {
            paytable,
            distribution,
            print_distribution,
        } => cmd_stats(paytable, distribution.as_ref(), *print_distribution),
        Command::Verify {
            chart,
            paytable,
            max_print,
        } => cmd_verify(chart, paytable, *max_print),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

pub fn run() -> i32 {
    run_from(std::env::args_os())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{canonicalize, orbit_size};
    use crate::expect::{solve_class, Backend};

    #[test]
    fn solve_row_round_trip() {
        let row = SolveRow {
            class_index: 7,
            orbit_size: 12,
            denoms: [2, 3, 4, 5, 6],
            suit_labels: [1, 1, 1, 2, 1],
            hold_flags: [true, false, true, true, false],
            scaled_ce: 30_678_780,
            unique: false,
        };
        let line = row.to_csv();
        assert_eq!(SolveRow::parse_csv(&line).unwrap(), row);
        assert_eq!(line, "7,12,2,3,4,5,6,1,1,1,2,1,1,0,1,1,0,30678780,n");
    }

    #[test]
    fn advise_agrees_with_solver() {
        let table = builtin_paytable("job-9-6").unwrap();
        let hand = Hand::parse("8c Tc Jc Qc Kc").unwrap();
        let canonical = canonicalize(&hand);
        let class = EquivClass {
            canonical,
            orbit_size: orbit_size(&canonical),
            class_index: 0,
        };
        let solved = solve_class(&class, &table, Backend::Naive).unwrap();
        // The advice path evaluates the dealt hand directly; its optimum
        // must match the class solve.
        let best = HoldMask::iter_all()
            .map(|m| (ce_naive(&hand, m, &table), m.tiebreak_rank()))
            .max()
            .unwrap();
        assert_eq!(best.0, solved.best_ce());
    }

    #[test]
    fn paytable_loading_errors() {
        assert!(load_paytable("job-9-6").is_ok());
        assert!(load_paytable("/nonexistent/path.txt").is_err());
        assert!(load_chart("chart-optimal").is_ok());
        assert!(load_chart("/nonexistent/chart.txt").is_err());
    }
}
