use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use orbitcount::Runner;
use orbitcount_cli::{
    cmd_asymptotics, cmd_bp, cmd_extremal, cmd_logconcavity, cmd_oracle, cmd_table, CliError,
    CliResult, Format, Outcome,
};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

/// Orbit counts of commuting permutation tuples, with log-concavity and
/// extremal scans.
#[derive(Debug, Parser)]
#[command(name = "orbitcount", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: FormatArg,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads; 1 runs sequentially.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// A(p, n, k) for all 1 <= k <= n <= nmax.
    Table {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        nmax: usize,
    },
    /// Log-concavity of every row of the table.
    Logconcavity {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        nmax: usize,
    },
    /// Log-concavity of E, the large-p case analysis and supporting lemmas.
    Extremal {
        #[arg(long)]
        nmax: usize,
    },
    /// A(p, n, k) / (F(n, k) E(n, k)^p) for p = step, 2 step, ..., pmax.
    Asymptotics {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        pmax: u32,
        #[arg(long, default_value_t = 1)]
        step: u32,
    },
    /// Brute-force enumeration against the table (n <= 6, p <= 3).
    Oracle {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        pmax: u32,
    },
    /// B(p, n), the number of index-n subgroups of Z^p.
    Bp {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u64,
        /// Sum over divisor chains instead of the closed form.
        #[arg(long)]
        flags_oracle: bool,
    },
}

fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<Outcome> {
    let runner = Runner::new(cli.jobs)?;
    let format = cli.format.into();
    match cli.command {
        Command::Table { p, nmax } => cmd_table(p, nmax, format, &runner, out),
        Command::Logconcavity { p, nmax } => cmd_logconcavity(p, nmax, format, &runner, out),
        Command::Extremal { nmax } => cmd_extremal(nmax, format, &runner, out),
        Command::Asymptotics { n, k, pmax, step } => {
            cmd_asymptotics(n, k, pmax, step, format, &runner, out)
        }
        Command::Oracle { nmax, pmax } => cmd_oracle(nmax, pmax, format, &runner, out),
        Command::Bp { p, n, flags_oracle } => cmd_bp(p, n, flags_oracle, format, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let start = Instant::now();
    let result = match &cli.out {
        Some(path) => File::create(path)
            .map_err(CliError::from)
            .and_then(|f| run(&cli, &mut BufWriter::new(f))),
        None => run(&cli, &mut BufWriter::new(io::stdout().lock())),
    };
    let elapsed = start.elapsed().as_secs_f64();
    match result {
        Ok(outcome) => {
            eprintln!("{} ({elapsed:.3}s, jobs={})", outcome.summary, cli.jobs);
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("orbitcount: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
