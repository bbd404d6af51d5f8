//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification or bijection check finds
//! a mismatch, 2 on bad arguments.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bijection::{default_case, round_trip, transport, MapId, Restriction};
use crate::class::AvoidanceSpec;
use crate::enumerate::{
    count_class, enumerate_class, partition_by_two, sequence, split_plus_minus, PlusMinusSplit,
    PositionPartition, NAIVE_CAP, PRUNED_CAP,
};
use crate::error::Error;
use crate::output::{write_sequence, SequenceFormat};
use crate::pattern::Pattern;
use crate::sequences::SequenceFamily;
use crate::verify::{lookup, verify, Claim, Quantity};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cycavoid",
    version,
    about = "Count and enumerate cyclic permutations avoiding patterns in one-line and cycle form"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the size of a class.
    Count {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: usize,
    },
    /// List the members of a class, one cycle word per line.
    Enum {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: usize,
    },
    /// Class sizes over a range of n.
    Seq {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, default_value = "csv")]
        format: SequenceFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare brute-force counts with a closed form.
    Verify {
        /// Registry id, e.g. C3.6 or T4.8-mirror.
        #[arg(long, required_unless_present = "family")]
        theorem: Option<String>,
        /// Pattern for the parametric Fibonacci family (T3.4).
        #[arg(long)]
        tau: Option<Pattern>,
        /// Ad hoc claim: class of this spec against --family.
        #[arg(long, requires = "family", conflicts_with = "theorem")]
        spec: Option<AvoidanceSpec>,
        /// Closed form for an ad hoc claim, e.g. FIB_2N_MINUS_3.
        #[arg(long, requires = "spec")]
        family: Option<SequenceFamily>,
        #[arg(long)]
        from: Option<usize>,
        #[arg(long, default_value_t = 10)]
        to: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Round-trip and transport checks for one map, one JSON line per size.
    Bijection {
        #[arg(long)]
        map: MapId,
        /// Input class; defaults to the first registered case for the map.
        #[arg(long)]
        spec: Option<AvoidanceSpec>,
        /// Target class; defaults to the registered target for --spec.
        #[arg(long)]
        spec_out: Option<AvoidanceSpec>,
        /// Only check domain words with 2 at this cycle position or later.
        #[arg(long)]
        two_from: Option<usize>,
        #[arg(long)]
        n: usize,
    },
    /// Counts by the cycle position of 2, and the plus/minus split.
    Partition {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

#[derive(Debug, Args)]
struct SpecArgs {
    /// Full spec, e.g. "3421,4321;213".
    #[arg(long, conflicts_with_all = ["one_line", "cycle"])]
    spec: Option<AvoidanceSpec>,
    /// Comma-separated one-line patterns.
    #[arg(long = "one-line", value_delimiter = ',')]
    one_line: Vec<Pattern>,
    /// Cycle-form pattern.
    #[arg(long)]
    cycle: Option<Pattern>,
}

impl SpecArgs {
    fn resolve(self) -> Result<AvoidanceSpec, Error> {
        match (self.spec, self.cycle) {
            (Some(spec), _) => Ok(spec),
            (None, Some(cycle)) => AvoidanceSpec::new(self.one_line, cycle),
            (None, None) => Err(Error::Parse("give --spec or --cycle".into())),
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn with_output<F>(path: Option<PathBuf>, out: &mut dyn Write, f: F) -> Result<(), Failure>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match path {
        Some(p) => {
            let mut file = BufWriter::new(File::create(p)?);
            f(&mut file)?;
            file.flush()?;
        }
        None => f(out)?,
    }
    Ok(())
}

fn capped(n: usize, cap: usize) -> Result<(), Error> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    if n == 0 {
        return Err(Error::Empty);
    }
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Count { spec, n } => {
            let spec = spec.resolve()?;
            capped(n, PRUNED_CAP)?;
            writeln!(out, "{}", count_class(n, &spec))?;
            Ok(EXIT_OK)
        }
        Command::Enum { spec, n } => {
            let spec = spec.resolve()?;
            capped(n, PRUNED_CAP)?;
            for w in enumerate_class(n, &spec) {
                writeln!(out, "{w}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Seq {
            spec,
            from,
            to,
            format,
            output,
        } => {
            let rows = sequence(&spec.resolve()?, from, to)?;
            with_output(output, out, |w| write_sequence(&rows, format, w))?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            theorem,
            tau,
            spec,
            family,
            from,
            to,
            format,
            output,
        } => {
            let claim = match (theorem, spec, family) {
                (Some(id), _, _) => lookup(&id, tau.as_ref())?,
                (None, Some(spec), Some(family)) => Claim {
                    id: format!("custom:{family}"),
                    spec,
                    quantity: Quantity::ClassSize,
                    family,
                    default_from: family.valid_n_min(),
                },
                _ => {
                    return Err(Failure::Usage(
                        "give --theorem, or --spec with --family".into(),
                    ))
                }
            };
            let report = verify(&claim, from.unwrap_or(claim.default_from), to)?;
            with_output(output, out, |w| match format {
                ReportFormat::Table => write!(w, "{report}"),
                ReportFormat::Json => {
                    serde_json::to_writer_pretty(&mut *w, &report)?;
                    writeln!(w)
                }
            })?;
            Ok(if report.all_match {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            })
        }
        Command::Bijection {
            map,
            spec,
            spec_out,
            two_from,
            n,
        } => {
            capped(n, NAIVE_CAP)?;
            let case = match spec {
                Some(spec) => default_case(map, &spec),
                None => crate::bijection::transport_cases()
                    .into_iter()
                    .find(|c| c.map == map)
                    .ok_or_else(|| Error::Parse(format!("no registered spec for {map}")))?,
            };
            let spec_out = spec_out.unwrap_or(case.spec_out);
            let restriction = two_from.map_or(case.restriction, Restriction::TwoAtOrAfter);
            let mut all_pass = true;
            for size in 1..=n {
                let rt = round_trip(map, size);
                let tr = transport(map, &case.spec_in, &spec_out, restriction, size);
                let pass = rt.holds && tr.holds;
                all_pass &= pass;
                let line = BijectionLine {
                    map,
                    spec_in: &case.spec_in,
                    spec_out: &spec_out,
                    restriction,
                    n: size,
                    domain_size: rt.domain_size,
                    round_trip: rt.holds,
                    transport_domain: tr.domain_size,
                    transport_mismatches: tr.mismatches,
                    transport: tr.holds,
                    pass,
                };
                serde_json::to_writer(&mut *out, &line).map_err(io::Error::from)?;
                writeln!(out)?;
            }
            Ok(if all_pass { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Partition { spec, n, format } => {
            let spec = spec.resolve()?;
            capped(n, PRUNED_CAP)?;
            let partition = partition_by_two(n, &spec)?;
            let splits = (4..=n)
                .map(|r| split_plus_minus(n, &spec, r))
                .collect::<Result<Vec<_>, _>>()?;
            match format {
                ReportFormat::Table => write_partition_table(&partition, &splits, out)?,
                ReportFormat::Json => {
                    serde_json::to_writer_pretty(
                        &mut *out,
                        &PartitionReport {
                            partition: &partition,
                            total: partition.total(),
                            splits: &splits,
                        },
                    )
                    .map_err(io::Error::from)?;
                    writeln!(out)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

#[derive(Serialize)]
struct BijectionLine<'a> {
    map: MapId,
    spec_in: &'a AvoidanceSpec,
    spec_out: &'a AvoidanceSpec,
    restriction: Restriction,
    n: usize,
    domain_size: usize,
    round_trip: bool,
    transport_domain: usize,
    transport_mismatches: usize,
    transport: bool,
    pass: bool,
}

#[derive(Serialize)]
struct PartitionReport<'a> {
    #[serde(flatten)]
    partition: &'a PositionPartition,
    total: u64,
    splits: &'a [PlusMinusSplit],
}

fn write_partition_table(
    p: &PositionPartition,
    splits: &[PlusMinusSplit],
    out: &mut dyn Write,
) -> io::Result<()> {
    writeln!(out, "n {}  spec {}  total {}", p.n, p.spec, p.total())?;
    writeln!(out, "{:>4}  {:>10}", "j", "count")?;
    for (j, c) in &p.counts_by_j {
        writeln!(out, "{j:>4}  {c:>10}")?;
    }
    if !splits.is_empty() {
        writeln!(out, "{:>4}  {:>10}  {:>10}", "r", "plus", "minus")?;
        for s in splits {
            writeln!(
                out,
                "{:>4}  {:>10}  {:>10}",
                s.r, s.plus_count, s.minus_count
            )?;
        }
    }
    Ok(())
}
