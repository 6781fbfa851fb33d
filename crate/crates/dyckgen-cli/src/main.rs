//! Command-line front end: generate listings, dump trees, cross-check the
//! generator, and measure its amortized cost.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage error (bad flags or size
//! caps), 3 verification failure, 4 benchmark bound violation.

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use dyckgen::engine;
use dyckgen::{label, oracle, tree};

#[derive(Parser)]
#[command(name = "dyckgen", version)]
#[command(about = "Generate, inspect, and verify exhaustive Dyck path listings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every path of semilength n, one per line, in generation order
    Gen {
        /// Semilength (number of up-steps)
        #[arg(short, long)]
        n: usize,
        /// Output rendering for each path
        #[arg(long, value_enum, default_value_t = Format::Bits)]
        format: Format,
        /// Write to this file instead of standard output
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print how many paths the generator emits
    Count {
        #[arg(short, long)]
        n: usize,
    },
    /// Emit the generating tree as a DOT graph
    Tree {
        #[arg(short, long)]
        n: usize,
        /// DOT output (the default and only format)
        #[arg(long)]
        dot: bool,
        /// Size guard for materializing the tree
        #[arg(long, default_value_t = tree::DEFAULT_TREE_CAP)]
        cap: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the label tree with per-level counts
    Labels {
        #[arg(short, long)]
        n: usize,
        /// DOT output instead of indented text
        #[arg(long)]
        dot: bool,
        /// Size guard for materializing the tree
        #[arg(long, default_value_t = tree::DEFAULT_TREE_CAP)]
        cap: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cross-check the generator against the oracle and the tree
    Verify {
        #[arg(short, long)]
        n: usize,
    },
    /// Measure elementary actions per generated path, one JSON record per n
    Bench {
        /// Single size to measure
        #[arg(short, long, conflicts_with = "range")]
        n: Option<usize>,
        /// Inclusive size range, e.g. 8..16
        #[arg(long)]
        range: Option<String>,
        /// Fail (exit 4) when actions per path exceed this bound
        #[arg(long, default_value_t = 12.0)]
        bound: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// '1' for up-steps, '0' for down-steps
    Bits,
    /// 'U' for up-steps, 'D' for down-steps
    Updown,
    /// JSON array of [x,y] lattice points
    Coords,
}

#[derive(Debug)]
enum CliError {
    Io(io::Error),
    Usage(String),
    Verification(String),
    BenchBound(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Verification(_) => 3,
            CliError::BenchBound(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Usage(msg) | CliError::Verification(msg) | CliError::BenchBound(msg) => {
                f.write_str(msg)
            }
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> CliError {
        CliError::Io(e)
    }
}

impl From<dyckgen::Error> for CliError {
    fn from(e: dyckgen::Error) -> CliError {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dyckgen: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Gen { n, format, output } => with_output(output, |out| gen(n, format, out)),
        Command::Count { n } => {
            println!("{}", engine::summarize(n)?.count);
            Ok(())
        }
        Command::Tree {
            n,
            dot: _,
            cap,
            output,
        } => with_output(output, |out| {
            let t = tree::PathTree::build_with_cap(n, cap)?;
            out.write_all(t.to_dot().as_bytes())?;
            Ok(())
        }),
        Command::Labels {
            n,
            dot,
            cap,
            output,
        } => with_output(output, |out| {
            let t = label::LabelTree::build_with_cap(n, cap)?;
            let text = if dot { t.to_dot() } else { t.to_text() };
            out.write_all(text.as_bytes())?;
            Ok(())
        }),
        Command::Verify { n } => verify(n),
        Command::Bench { n, range, bound } => bench(n, range, bound),
    }
}

fn with_output<F>(path: Option<PathBuf>, f: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> Result<(), CliError>,
{
    let mut out: BufWriter<Box<dyn Write>> = match path {
        Some(p) => BufWriter::new(Box::new(File::create(p)?)),
        None => BufWriter::new(Box::new(io::stdout().lock())),
    };
    f(&mut out)?;
    out.flush()?;
    Ok(())
}

fn gen(n: usize, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let mut line = Vec::with_capacity(2 * n + 1);
    engine::run_all::<CliError, _>(n, |w| {
        line.clear();
        match format {
            Format::Bits => w.push_ascii(&mut line),
            Format::Updown => {
                for j in 0..w.len() {
                    line.push(if w.bit(j) == 1 { b'U' } else { b'D' });
                }
            }
            Format::Coords => {
                line.push(b'[');
                let mut x = 0usize;
                let mut y = 0usize;
                line.extend_from_slice(b"[0,0]");
                for j in 0..w.len() {
                    x += 1;
                    if w.bit(j) == 1 {
                        y += 1;
                    } else {
                        y -= 1;
                    }
                    line.push(b',');
                    line.extend_from_slice(format!("[{x},{y}]").as_bytes());
                }
                line.push(b']');
            }
        }
        line.push(b'\n');
        out.write_all(&line)?;
        Ok(())
    })?;
    Ok(())
}

fn verify(n: usize) -> Result<(), CliError> {
    if n > oracle::ENUMERATION_CAP {
        return Err(CliError::Usage(format!(
            "verify requires n <= {} (got {n})",
            oracle::ENUMERATION_CAP
        )));
    }
    let mut failures: Vec<String> = Vec::new();
    let mut report = |name: &str, outcome: Result<String, String>| match outcome {
        Ok(detail) => println!("check {name}: pass ({detail})"),
        Err(detail) => {
            println!("check {name}: FAIL ({detail})");
            failures.push(format!("{name}: {detail}"));
        }
    };

    let reference = oracle::enumerate(n)?;
    let mut words = Vec::with_capacity(reference.len());
    let summary = engine::run_all::<CliError, _>(n, |w| {
        words.push(w.to_word());
        Ok(())
    })?;

    let diff = oracle::compare(&reference, &words);
    report(
        "engine-vs-oracle",
        if diff.is_empty() {
            Ok(format!("{} paths", words.len()))
        } else {
            Err(diff.excerpt())
        },
    );

    let mut order_ok = true;
    let mut index = 0usize;
    tree::walk_preorder(n, tree::DEFAULT_TREE_CAP, &mut |w, _| {
        if order_ok && (index >= words.len() || words[index] != *w) {
            order_ok = false;
        }
        index += 1;
    })?;
    order_ok &= index == words.len();
    report(
        "engine-vs-preorder",
        if order_ok {
            Ok("orders identical".to_string())
        } else {
            Err("stream diverges from tree preorder".to_string())
        },
    );

    let correspondence = label::check_correspondence_streaming(n, tree::DEFAULT_TREE_CAP)?;
    report(
        "label-correspondence",
        if correspondence.is_success() {
            Ok(format!("{} nodes", correspondence.nodes_checked))
        } else {
            Err(correspondence.to_string())
        },
    );

    let run_bound_ok = summary.max_op3_run <= 2 && (n < 4 || summary.max_op3_run == 2);
    report(
        "parent-jump-runs",
        if run_bound_ok {
            Ok(format!("max run {}", summary.max_op3_run))
        } else {
            Err(format!("max run {}", summary.max_op3_run))
        },
    );

    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(failures.join("; ")))
    }
}

fn bench(n: Option<usize>, range: Option<String>, bound: f64) -> Result<(), CliError> {
    let sizes: Vec<usize> = match (n, range) {
        (Some(n), None) => vec![n],
        (None, Some(text)) => parse_range(&text)?,
        (None, None) => {
            return Err(CliError::Usage(
                "bench requires either --n or --range".to_string(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap rejects conflicting flags"),
    };

    let mut worst: Option<(usize, f64)> = None;
    for n in sizes {
        let start = Instant::now();
        let summary = engine::summarize(n)?;
        let wall = start.elapsed().as_secs_f64();
        let c = summary.counters;
        let actions_per_path = c.total() as f64 / summary.count as f64;
        println!(
            "{{\"n\":{n},\"paths\":{},\"swaps\":{},\"cursor_moves\":{},\"stack_ops\":{},\
             \"label_updates\":{},\"dispatch_tests\":{},\"total_actions\":{},\
             \"actions_per_path\":{actions_per_path:.6},\"wall_time\":{wall:.6}}}",
            summary.count,
            c.bit_swaps,
            c.cursor_moves,
            c.stack_ops(),
            c.label_updates,
            c.dispatch_tests,
            c.total(),
        );
        if actions_per_path > bound && worst.is_none() {
            worst = Some((n, actions_per_path));
        }
    }
    match worst {
        None => Ok(()),
        Some((n, app)) => Err(CliError::BenchBound(format!(
            "actions per path {app:.4} at n={n} exceeds bound {bound}"
        ))),
    }
}

fn parse_range(text: &str) -> Result<Vec<usize>, CliError> {
    let usage = || {
        CliError::Usage(format!(
            "range must look like START..END (inclusive), got {text:?}"
        ))
    };
    let (lo, hi) = text.split_once("..").ok_or_else(usage)?;
    let lo: usize = lo.trim().parse().map_err(|_| usage())?;
    let hi: usize = hi.trim().trim_start_matches('=').parse().map_err(|_| usage())?;
    if lo == 0 || hi < lo {
        return Err(usage());
    }
    Ok((lo..=hi).collect())
}
