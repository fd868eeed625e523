//! Command-line front end: solve positions, dump SG tables, run the
//! verification suites, and classify whole games over a box.
//!
//! Exit codes: 0 on success (and all checks passing), 1 on domain or
//! verification failure, 2 on usage errors. Data output is byte-stable
//! across runs; timings go to stderr.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use knim::verify::{run_suite, Overrides, SuiteRun};
use knim::{
    best_move, classify_game, sg_value, Family, GameSpec, Position, SgTable, Version,
};

#[derive(Parser)]
#[command(
    name = "knim",
    about = "Exact solvers and verified closed forms for Nim variants",
    long_about = "Solves positions of classic Nim, Moore's k-Nim, exact k-Nim, their slow\n\
                  variants, and Exco-Nim, under normal and misere play. Tables are exact\n\
                  over downward-closed boxes. The verify subcommand sweeps every closed\n\
                  form against the brute-force solver.\n\n\
                  The environment variable KNIM_MEMORY_BUDGET (bytes, default 1 GiB)\n\
                  bounds the memory used by table construction."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the SG value of one position (optionally a winning move).
    Solve(SolveArgs),
    /// Dump the SG table of a box as CSV or JSON.
    Table(TableArgs),
    /// Run a verification suite (see --help for the list).
    Verify(VerifyArgs),
    /// Report tame / pet / domestic / miserable over a box.
    Classify(ClassifyArgs),
}

#[derive(Args)]
struct GameArgs {
    /// Game family: classic, moore, exact, slow-moore, slow-exact, exco.
    #[arg(long, value_parser = parse_family)]
    family: Family,
    /// Number of ordinary piles (exco positions carry one extra pile).
    #[arg(long)]
    n: usize,
    /// Move-width bound; required for moore/exact/slow-moore/slow-exact.
    #[arg(long)]
    k: Option<usize>,
}

impl GameArgs {
    fn spec(&self) -> knim::Result<GameSpec> {
        match self.family {
            Family::Classic => GameSpec::classic(self.n),
            Family::Exco => GameSpec::exco(self.n),
            family => {
                let k = self.k.ok_or_else(|| {
                    knim::Error::InvalidSpec(format!("--k is required for {family}"))
                })?;
                GameSpec::new(family, self.n, k)
            }
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    game: GameArgs,
    /// Comma-separated pile sizes; for exco the first entry is the
    /// distinguished pile, followed by the n ordinary piles.
    #[arg(long)]
    pos: String,
    #[arg(long, value_enum, default_value_t = VersionArg::Normal)]
    version: VersionArg,
    /// Also print a winning move (a successor of value 0), if any.
    #[arg(long)]
    best_move: bool,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    game: GameArgs,
    /// Per-pile bound of the box (applies to the exco extra pile too).
    #[arg(long)]
    cap: u32,
    #[arg(long, value_enum, default_value_t = VersionsArg::Both)]
    versions: VersionsArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or "all".
    #[arg(
        long_help = "Suite name, or \"all\". Suites: nim-sum, moore-function, exco-formula,\n\
                     tetris, exact-formula, exact-pet, moore-swaps, exact-swaps,\n\
                     slow-moore-sg, slow-moore-p, slow-moore-misere-swaps, slow-exact-sg,\n\
                     slow-trivial, regression."
    )]
    suite: String,
    /// Replace every box cap in the suite.
    #[arg(long)]
    cap: Option<u32>,
    /// Replace the suite's games with one (n, k) instance.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    game: GameArgs,
    #[arg(long)]
    cap: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum VersionArg {
    Normal,
    Misere,
}

impl From<VersionArg> for Version {
    fn from(v: VersionArg) -> Version {
        match v {
            VersionArg::Normal => Version::Normal,
            VersionArg::Misere => Version::Misere,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum VersionsArg {
    Normal,
    Misere,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| {
        format!("unknown family '{s}' (classic, moore, exact, slow-moore, slow-exact, exco)")
    })
}

fn parse_position(spec: &GameSpec, raw: &str) -> knim::Result<Position> {
    let entries: Result<Vec<u32>, _> = raw.split(',').map(|t| t.trim().parse()).collect();
    let entries =
        entries.map_err(|_| knim::Error::Shape(format!("cannot parse pile list '{raw}'")))?;
    if spec.uses_distinguished() {
        if entries.len() != spec.n() + 1 {
            return Err(knim::Error::Shape(format!(
                "{spec} takes {} entries (distinguished pile first), got {}",
                spec.n() + 1,
                entries.len()
            )));
        }
        Ok(Position::exco(entries[0], entries[1..].to_vec()))
    } else {
        Ok(Position::new(entries))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Solve(args) => cmd_solve(args),
        Cmd::Table(args) => cmd_table(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Classify(args) => cmd_classify(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

fn cmd_solve(args: SolveArgs) -> knim::Result<ExitCode> {
    let spec = args.game.spec()?;
    let pos = parse_position(&spec, &args.pos)?;
    let version: Version = args.version.into();
    let value = sg_value(&spec, &pos, version)?;
    match version {
        Version::Normal => println!("g = {value}"),
        Version::Misere => println!("g- = {value}"),
    }
    if args.best_move {
        match best_move(&spec, &pos, version)? {
            Some(succ) => println!("best move: {succ}"),
            None => println!("best move: none (P-position)"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct OutputRecord {
    pos: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    g_misere: Option<u32>,
}

fn cmd_table(args: TableArgs) -> knim::Result<ExitCode> {
    let spec = args.game.spec()?;
    let started = Instant::now();
    let normal = (args.versions != VersionsArg::Misere)
        .then(|| SgTable::build(&spec, args.cap, Version::Normal))
        .transpose()?;
    let misere = (args.versions != VersionsArg::Normal)
        .then(|| SgTable::build(&spec, args.cap, Version::Misere))
        .transpose()?;
    let any = normal.as_ref().or(misere.as_ref()).expect("one version");

    let records: Vec<OutputRecord> = (0..any.len())
        .map(|idx| {
            let pos = any.position_at(idx);
            let mut flat: Vec<u32> = Vec::with_capacity(pos.piles().len() + 1);
            if let Some(x0) = pos.distinguished() {
                flat.push(x0);
            }
            flat.extend_from_slice(pos.piles());
            OutputRecord {
                pos: flat,
                g: normal.as_ref().map(|t| t.get(&pos).expect("in box")),
                g_misere: misere.as_ref().map(|t| t.get(&pos).expect("in box")),
            }
        })
        .collect();

    let payload = match args.format {
        FormatArg::Csv => {
            let mut header = String::from("pos");
            if normal.is_some() {
                header.push_str(",g");
            }
            if misere.is_some() {
                header.push_str(",g_misere");
            }
            let mut text = header;
            text.push('\n');
            for r in &records {
                let piles: Vec<String> = r.pos.iter().map(|x| x.to_string()).collect();
                write!(text, "\"{}\"", piles.join(",")).unwrap();
                if let Some(g) = r.g {
                    write!(text, ",{g}").unwrap();
                }
                if let Some(gm) = r.g_misere {
                    write!(text, ",{gm}").unwrap();
                }
                text.push('\n');
            }
            text
        }
        FormatArg::Json => {
            let mut text = serde_json::to_string(&records).expect("serializable records");
            text.push('\n');
            text
        }
    };

    match &args.out {
        Some(path) => fs::write(path, payload).map_err(|e| {
            knim::Error::Domain(format!("cannot write {}: {e}", path.display()))
        })?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(payload.as_bytes())
                .map_err(|e| knim::Error::Domain(format!("cannot write to stdout: {e}")))?;
        }
    }
    eprintln!(
        "table {spec} cap={} ({} records) in {} ms",
        args.cap,
        records.len(),
        started.elapsed().as_millis()
    );
    Ok(ExitCode::SUCCESS)
}

fn print_suite(run: &SuiteRun) {
    for r in &run.reports {
        if r.passed() {
            println!("{}: PASS ({} positions)", r.subject(), r.positions_checked);
        } else {
            println!(
                "{}: FAIL ({} mismatches over {} positions)",
                r.subject(),
                r.mismatch_total,
                r.positions_checked
            );
            for m in r.mismatches.iter().take(5) {
                println!(
                    "  at {}: formula {} vs solver {}",
                    m.pos, m.formula_value, m.solver_value
                );
            }
        }
        eprintln!("{}: {} ms", r.subject(), r.elapsed.as_millis());
    }
    for c in &run.claims {
        if c.passed {
            println!("claim {}: PASS", c.id);
        } else {
            println!("claim {}: FAIL (expected {}, got {})", c.id, c.expected, c.actual);
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> knim::Result<ExitCode> {
    let overrides = Overrides {
        cap: args.cap,
        n: args.n,
        k: args.k,
    };
    let run = match run_suite(&args.suite, &overrides) {
        Ok(run) => run,
        Err(knim::Error::Domain(msg)) if msg.starts_with("unknown suite") => {
            // Unknown suite names are usage errors.
            eprintln!("error: {msg}");
            return Ok(ExitCode::from(2));
        }
        Err(e) => return Err(e),
    };
    print_suite(&run);
    let (total, failed) = (
        run.reports.len() + run.claims.len(),
        run.reports.iter().filter(|r| !r.passed()).count()
            + run.claims.iter().filter(|c| !c.passed).count(),
    );
    if failed == 0 {
        println!("suite {}: all {total} checks pass", run.suite);
        Ok(ExitCode::SUCCESS)
    } else {
        println!("suite {}: {failed} of {total} checks FAILED", run.suite);
        Ok(ExitCode::from(1))
    }
}

fn cmd_classify(args: ClassifyArgs) -> knim::Result<ExitCode> {
    let spec = args.game.spec()?;
    let started = Instant::now();
    let report = classify_game(&spec, args.cap)?;
    println!("{spec}, box cap {} ({} positions)", report.cap, report.positions);
    let lines = [
        ("tame", report.tame, &report.tame_witness),
        ("pet", report.pet, &report.pet_witness),
        ("domestic", report.domestic, &report.domestic_witness),
        ("miserable", report.miserable, &report.miserable_witness),
    ];
    for (name, flag, witness) in lines {
        match (flag, witness) {
            (true, _) => println!("{name}: true"),
            (false, Some(w)) => println!("{name}: false, witness {w}"),
            (false, None) => println!("{name}: false"),
        }
    }
    eprintln!("classified in {} ms", started.elapsed().as_millis());
    Ok(ExitCode::SUCCESS)
}
