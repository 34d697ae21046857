//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eqmeas_core::edge::{verify_swap_quotient, w_jack, w_mnop};
use eqmeas_core::partitions::{enumerate_partitions, enumerate_plane_partitions, partition_count};
use eqmeas_core::vertex::{verify_vertex, w_vertex};
use eqmeas_core::{macmahon_series, FactoredForm, Partition, PlanePartition, VerificationReport};
use serde_json::{json, Value as Json};

use crate::format::{self, document, report_document, report_json, report_text, to_pretty};
use crate::sweep;

/// Exit status when every check held.
pub const EXIT_OK: i32 = 0;
/// Exit status when some report contains a failure.
pub const EXIT_FAILED: i32 = 1;
/// Exit status for bad arguments or environment.
pub const EXIT_USAGE: i32 = 2;
/// Exit status for an unexpected arithmetic error.
pub const EXIT_ERROR: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "eqmeas", version, about = "Exact equivariant edge and vertex measures")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Output::Text)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a verification sweep.
    #[command(subcommand)]
    Verify(Verify),
    /// Print a measure as a factored form.
    #[command(subcommand)]
    Measure(Measure),
    /// Print power series coefficients.
    #[command(subcommand)]
    Series(Series),
    /// List partitions or plane partitions of a given size.
    #[command(subcommand)]
    Enumerate(Enumerate),
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// w_Jack(λ) = -w_MNOP(λ) for every nonempty λ up to the size bound.
    Edge(EdgeArgs),
    /// Corner-removal ratio formulas against direct quotients.
    Ratios(RatioArgs),
    /// Corner polynomial identity and the swap quotient rule.
    Lemmas(Lemmas),
    /// Vertex partition function against the MacMahon closed form.
    Vertex(VertexArgs),
}

#[derive(Args, Debug)]
pub struct EdgeArgs {
    #[arg(long, default_value_t = 12)]
    pub max_size: usize,
}

#[derive(Args, Debug)]
pub struct RatioArgs {
    #[arg(long, default_value_t = 10)]
    pub max_size: usize,
}

#[derive(Args, Debug)]
pub struct Lemmas {
    #[arg(long, default_value_t = 10)]
    pub max_size: usize,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct VertexArgs {
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    pub order: u64,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    pub points: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Measure {
    /// Jack-Plancherel weight of a partition such as `3,2`.
    Jack { partition: Partition },
    /// Equivariant edge weight of a partition.
    Mnop { partition: Partition },
    /// Equivariant vertex weight of a plane partition such as `2,1;1`.
    Vertex { plane_partition: PlanePartition },
}

#[derive(Subcommand, Debug)]
pub enum Series {
    /// Coefficients of ∏ (1 - q^i)^-i.
    Macmahon {
        #[arg(long)]
        order: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum Enumerate {
    /// Partitions of n, in reverse lexicographic order.
    Partitions(Size),
    /// Plane partitions of n.
    PlanePartitions(Size),
}

#[derive(Args, Debug)]
pub struct Size {
    #[arg(long)]
    pub size: usize,
    #[arg(long)]
    pub count_only: bool,
}

struct Outcome {
    text: String,
    json: Json,
    failed: bool,
}

fn any_failed(reports: &[&VerificationReport]) -> bool {
    reports.iter().any(|r| !r.failures.is_empty())
}

fn measure_outcome(name: &str, subject: String, w: FactoredForm) -> Outcome {
    let mut json = document(vec![("measure", json!(name)), ("input", json!(subject))]);
    if let Json::Object(body) = format::factored_json(&w) {
        json.as_object_mut().expect("object").extend(body);
    }
    Outcome {
        text: format!("{w}\n"),
        json,
        failed: false,
    }
}

fn list_outcome(kind: &str, size: usize, items: Option<Vec<String>>, count: usize) -> Outcome {
    let mut fields = vec![("kind", json!(kind)), ("size", json!(size)), ("count", json!(count))];
    let text = match &items {
        Some(items) => items.iter().map(|s| format!("{s}\n")).collect(),
        None => format!("{count}\n"),
    };
    if let Some(items) = items {
        fields.push(("items", json!(items)));
    }
    Outcome {
        text,
        json: document(fields),
        failed: false,
    }
}

fn execute(command: Command) -> eqmeas_core::Result<Outcome> {
    Ok(match command {
        Command::Verify(Verify::Edge(a)) => {
            let (stated, signed) = sweep::edge(a.max_size);
            Outcome {
                text: report_text("edge", &stated) + &report_text("parity_signed", &signed),
                json: report_document(
                    vec![("command", json!("verify edge")), ("max_size", json!(a.max_size))],
                    &stated,
                    vec![("parity_signed", report_json(&signed))],
                ),
                failed: any_failed(&[&stated, &signed]),
            }
        }
        Command::Verify(Verify::Ratios(a)) => {
            let r = sweep::ratios(a.max_size);
            let mut fields = vec![("command", json!("verify ratios")), ("max_size", json!(a.max_size))];
            fields.extend(format::ratio_reports_json(&r));
            Outcome {
                text: report_text("jack", &r.jack)
                    + &report_text("mnop", &r.mnop)
                    + &report_text("equal", &r.equal)
                    + &report_text("negated", &r.negated),
                json: document(fields),
                failed: any_failed(&[&r.jack, &r.mnop, &r.equal, &r.negated]),
            }
        }
        Command::Verify(Verify::Lemmas(a)) => {
            let corner = sweep::lemma1(a.max_size);
            let swap = verify_swap_quotient(a.trials, a.seed);
            Outcome {
                text: report_text("corner_polynomial", &corner) + &report_text("swap_quotient", &swap),
                json: document(vec![
                    ("command", json!("verify lemmas")),
                    ("max_size", json!(a.max_size)),
                    ("trials", json!(a.trials)),
                    ("seed", json!(a.seed)),
                    ("corner_polynomial", report_json(&corner)),
                    ("swap_quotient", report_json(&swap)),
                ]),
                failed: any_failed(&[&corner, &swap]),
            }
        }
        Command::Verify(Verify::Vertex(a)) => {
            let z = verify_vertex(a.order as usize, a.points as usize, a.seed)?;
            let mut fields = vec![("command", json!("verify vertex")), ("seed", json!(a.seed))];
            fields.extend(format::zreport_fields(&z));
            Outcome {
                text: format::zreport_text(&z),
                json: document(fields),
                failed: !z.passed(),
            }
        }
        Command::Measure(Measure::Jack { partition }) => {
            measure_outcome("jack", partition.to_string(), w_jack(&partition))
        }
        Command::Measure(Measure::Mnop { partition }) => {
            measure_outcome("mnop", partition.to_string(), w_mnop(&partition)?)
        }
        Command::Measure(Measure::Vertex { plane_partition }) => {
            measure_outcome("vertex", plane_partition.to_string(), w_vertex(&plane_partition)?)
        }
        Command::Series(Series::Macmahon { order }) => {
            let coeffs: Vec<String> = macmahon_series(order).coeffs().iter().map(ToString::to_string).collect();
            let as_json: Vec<Json> = macmahon_series(order)
                .coeffs()
                .iter()
                .map(|c| format::int_json(c.numer()))
                .collect();
            Outcome {
                text: coeffs.join(" ") + "\n",
                json: document(vec![
                    ("series", json!("macmahon")),
                    ("order", json!(order)),
                    ("coefficients", Json::Array(as_json)),
                ]),
                failed: false,
            }
        }
        Command::Enumerate(Enumerate::Partitions(s)) => {
            if s.count_only {
                list_outcome("partitions", s.size, None, partition_count(s.size) as usize)
            } else {
                let items: Vec<String> = enumerate_partitions(s.size).iter().map(ToString::to_string).collect();
                let n = items.len();
                list_outcome("partitions", s.size, Some(items), n)
            }
        }
        Command::Enumerate(Enumerate::PlanePartitions(s)) => {
            let all = enumerate_plane_partitions(s.size);
            let items = (!s.count_only).then(|| all.iter().map(ToString::to_string).collect());
            list_outcome("plane-partitions", s.size, items, all.len())
        }
    })
}

/// Parses `args` (including the program name), runs the command, writes the
/// report to `out` and diagnostics to `err`, and returns the exit status.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let threads = match sweep::threads_from_env() {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let output = cli.output;
    match sweep::pool(threads).install(|| execute(cli.command)) {
        Ok(o) => {
            let body = match output {
                Output::Text => o.text,
                Output::Json => to_pretty(&o.json),
            };
            let _ = out.write_all(body.as_bytes());
            if o.failed {
                EXIT_FAILED
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
