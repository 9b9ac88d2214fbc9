//! The `fdlab` command line.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use crate::armstrong::{attribute_closure, FdSet};
use crate::error::{FdError, Result};
use crate::fd::FunctionalDependency;
use crate::index::PfdIndex;
use crate::io::{
    model_from_extension, parse_3dm, parse_fds, parse_table_as, resolve_fds, serialize_fds, serialize_table,
    serialize_world,
};
use crate::model::{Schema, Table, Tuple};
use crate::semantics::{check, CheckOptions, Report, Semantics, DEFAULT_VALUATION_CAP};
use crate::valuation::{generate_3dm_reduction, seamless_valuation_with, ValuationOptions, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Environment variable overriding the valuation cap.
pub const WORLD_CAP_ENV: &str = "FDLAB_WORLD_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "fdlab",
    version,
    about = "Functional dependencies over vague and disjunctive tables"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check FDs against a table under one semantics.
    Check {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        fds: PathBuf,
        #[arg(long, default_value = "pfd")]
        semantics: Semantics,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build a world of a vague table satisfying PFD-satisfied FDs.
    Valuate {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        fds: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// List the possible worlds of a table.
    Worlds {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Attribute closure of a set under an FD list.
    Closure {
        #[arg(long)]
        fds: PathBuf,
        /// Attribute names.
        #[arg(required = true)]
        attrs: Vec<String>,
    },
    /// Encode a 3DM instance as a vague table plus FDs.
    Gen3dm {
        #[arg(long)]
        instance: PathBuf,
        /// Write `<prefix>.vtab` and `<prefix>.fds` instead of printing.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Insert a table's tuples into a PFD index, timing each insert.
    Bench {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        fds: PathBuf,
    },
}

/// Parses arguments and runs a command; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(out, "{e}");
            } else {
                let _ = write!(err, "{e}");
            }
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "fdlab: {e}");
            EXIT_ERROR
        }
    }
}

fn valuation_cap() -> Result<u64> {
    match std::env::var(WORLD_CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| FdError::Parse {
            line: 0,
            column: 0,
            message: format!("{WORLD_CAP_ENV} must be a non-negative integer, got `{v}`"),
        }),
        Err(_) => Ok(DEFAULT_VALUATION_CAP),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| FdError::Parse {
        line: 0,
        column: 0,
        message: format!("{}: {e}", path.display()),
    })
}

fn with_path<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        FdError::Parse { line, column, message } => FdError::Parse {
            line,
            column,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

pub fn load_table(path: &Path) -> Result<Table> {
    let text = read(path)?;
    let hint = model_from_extension(&path.to_string_lossy());
    with_path(path, parse_table_as(&text, hint))
}

pub fn load_fds(path: &Path, schema: &Schema) -> Result<Vec<FunctionalDependency>> {
    let specs = with_path(path, parse_fds(&read(path)?))?;
    resolve_fds(&specs, schema)
}

fn execute(cmd: &Command) -> Result<(String, i32)> {
    match cmd {
        Command::Check {
            table,
            fds,
            semantics,
            format,
        } => {
            let table = load_table(table)?;
            let fds = load_fds(fds, table.schema())?;
            let opts = CheckOptions {
                budget: valuation_cap()?,
                ..Default::default()
            };
            let report = check(&table, &fds, *semantics, opts)?;
            let code = if report.satisfied { EXIT_OK } else { EXIT_VIOLATED };
            let text = match format {
                Format::Text => render_report(&report),
                Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
            };
            Ok((text, code))
        }
        Command::Valuate { table, fds, seed } => {
            let table = load_table(table)?;
            let fds = FdSet::new(load_fds(fds, table.schema())?);
            let opts = ValuationOptions {
                seed: *seed,
                ..Default::default()
            };
            match seamless_valuation_with(&table, &fds, opts) {
                Ok(w) => Ok((serialize_world(&w), EXIT_OK)),
                Err(FdError::PfdViolated { fd }) => Ok((format!("violated: {fd}\n"), EXIT_VIOLATED)),
                Err(e) => Err(e),
            }
        }
        Command::Worlds { table, limit } => {
            let table = load_table(table)?;
            let worlds = crate::model::enumerate_worlds(&table, *limit)?;
            let mut text = String::new();
            for (k, w) in worlds.iter().enumerate() {
                if k > 0 {
                    text.push('\n');
                }
                writeln!(text, "# world {}", k + 1).unwrap();
                text.push_str(&serialize_world(w));
            }
            Ok((text, EXIT_OK))
        }
        Command::Closure { fds, attrs } => {
            let specs = with_path(fds, parse_fds(&read(fds)?))?;
            // The schema is every attribute the FDs and the query mention.
            let mut names: Vec<&str> = Vec::new();
            for n in specs.iter().flat_map(|s| s.lhs.iter().chain(&s.rhs)).chain(attrs) {
                if !names.contains(&n.as_str()) {
                    names.push(n);
                }
            }
            let schema = Schema::new(names)?;
            let set = FdSet::new(resolve_fds(&specs, &schema)?);
            let closure = attribute_closure(&set, &schema.attrs(attrs)?);
            Ok((format!("{}\n", schema.display(&closure)), EXIT_OK))
        }
        Command::Gen3dm { instance, out } => {
            let inst = with_path(instance, parse_3dm(&read(instance)?))?;
            let red = generate_3dm_reduction(&inst)?;
            let fds: Vec<_> = red.fds.iter().cloned().collect();
            let table_text = serialize_table(&red.table);
            let fd_text = serialize_fds(&fds, red.table.schema());
            match out {
                Some(prefix) => {
                    let write = |ext: &str, body: &str| {
                        let p = prefix.with_extension(ext);
                        std::fs::write(&p, body).map_err(|e| FdError::Parse {
                            line: 0,
                            column: 0,
                            message: format!("{}: {e}", p.display()),
                        })
                    };
                    write("vtab", &table_text)?;
                    write("fds", &fd_text)?;
                    Ok((String::new(), EXIT_OK))
                }
                None => Ok((format!("{table_text}\n# fds\n{fd_text}"), EXIT_OK)),
            }
        }
        Command::Bench { table, fds } => {
            let table = load_table(table)?;
            let fds = load_fds(fds, table.schema())?;
            let fd = fds.into_iter().next().ok_or_else(|| FdError::Parse {
                line: 0,
                column: 0,
                message: "the FD file is empty".into(),
            })?;
            let stats = bench_inserts(table.tuples(), &fd)?;
            Ok((render_bench(&stats), EXIT_OK))
        }
    }
}

/// Per-insert timing of a PFD index fed one table's tuples.
#[derive(Clone, Debug)]
pub struct BenchStats {
    pub inserts: usize,
    pub accepted: usize,
    pub rejected: usize,
    pub latencies: Vec<Duration>,
}

impl BenchStats {
    pub fn quantile(&self, q: f64) -> Duration {
        let mut v = self.latencies.clone();
        v.sort();
        if v.is_empty() {
            return Duration::ZERO;
        }
        v[((v.len() - 1) as f64 * q).round() as usize]
    }
}

pub fn bench_inserts(tuples: &[Tuple], fd: &FunctionalDependency) -> Result<BenchStats> {
    let mut idx = PfdIndex::new(fd.clone());
    let mut stats = BenchStats {
        inserts: tuples.len(),
        accepted: 0,
        rejected: 0,
        latencies: Vec::with_capacity(tuples.len()),
    };
    for t in tuples {
        let start = Instant::now();
        let verdict = idx.insert(t)?;
        stats.latencies.push(start.elapsed());
        match verdict {
            None => stats.accepted += 1,
            Some(_) => stats.rejected += 1,
        }
    }
    Ok(stats)
}

fn render_bench(s: &BenchStats) -> String {
    let us = |d: Duration| d.as_secs_f64() * 1e6;
    format!(
        "inserts: {}\naccepted: {}\nrejected: {}\nlatency_min_us: {:.3}\nlatency_median_us: {:.3}\nlatency_p90_us: {:.3}\nlatency_max_us: {:.3}\n",
        s.inserts,
        s.accepted,
        s.rejected,
        us(s.quantile(0.0)),
        us(s.quantile(0.5)),
        us(s.quantile(0.9)),
        us(s.quantile(1.0)),
    )
}

/// Line-oriented `key: value` rendering of a report.
pub fn render_report(r: &Report) -> String {
    let mut s = String::new();
    writeln!(s, "semantics: {}", r.semantics).unwrap();
    writeln!(s, "model: {}", r.model).unwrap();
    for v in &r.verdicts {
        let verdict = if v.holds { "holds" } else { "violated" };
        write!(s, "fd: {} {verdict}", v.fd).unwrap();
        if let Some(x) = &v.violation {
            write!(s, " t1={} t2={}", x.t1, x.t2).unwrap();
            if let Some(b) = &x.binding {
                write!(s, " binding={b:?}").unwrap();
            }
            write!(s, " detail={}", x.detail).unwrap();
        }
        s.push('\n');
    }
    if r.semantics == Semantics::Seamless {
        match &r.witness {
            Some(w) => {
                writeln!(s, "witness:").unwrap();
                for t in w.tuples() {
                    writeln!(s, "  {t:?}").unwrap();
                }
            }
            None => writeln!(s, "witness: none").unwrap(),
        }
    }
    writeln!(s, "satisfied: {}", r.satisfied).unwrap();
    s
}
