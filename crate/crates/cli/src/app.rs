//! Argument parsing and dispatch for the `grassline` binary.
//!
//! Exit codes: 0 success, 1 a check failed, 2 malformed arguments or a
//! precondition error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grassline::cones;
use grassline::coniveau::{self, MultiDegree};
use grassline::verify::{self, Check, Status, CLASSICAL_ANCHORS};
use grassline::{chern, flagpush, GrassmannContext, SchurClass};
use serde_json::{json, Value};

use crate::sweep::{self, Grid};
use crate::{json, runner, FormatError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "grassline",
    version,
    about = "Exact intersection theory on the Grassmannian of lines G(1,n)"
)]
pub struct Cli {
    /// Output format. Defaults to text.
    #[arg(long, global = true, value_enum, env = "GRASSLINE_FORMAT")]
    format: Option<Format>,
    /// Shorthand for `--format json`.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Shorthand for `--format csv` (sweeps only).
    #[arg(long, global = true)]
    csv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Hypersurfaces {
    /// Ambient projective space P^n.
    #[arg(long)]
    n: u32,
    /// Comma-separated degrees d_1,...,d_r.
    #[arg(long, value_delimiter = ',', required = true)]
    degrees: Vec<u32>,
}

impl Hypersurfaces {
    fn multidegree(&self) -> Result<MultiDegree, FormatError> {
        Ok(MultiDegree::new(self.n, self.degrees.clone())?)
    }
}

#[derive(Debug, Args)]
struct ClassSource {
    /// Use [F_G] for these degrees on G(1,n) (needs --n).
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["class", "q"])]
    degrees: Option<Vec<u32>>,
    /// Use Q_m, the cofactor in c_{m+1}(S^m E) = m²·c2·Q_m (needs --n).
    #[arg(long, conflicts_with = "class")]
    q: Option<u32>,
    /// Read a Schur class from a JSON file (`-` for stdin).
    #[arg(long)]
    class: Option<PathBuf>,
    /// Grassmannian G(1,n); required unless --class is given.
    #[arg(long)]
    n: Option<u32>,
    /// Codimension to analyze; defaults to the class's own.
    #[arg(long)]
    codim: Option<u32>,
}

impl ClassSource {
    fn resolve(&self) -> Result<(SchurClass, u32), FormatError> {
        let class = if let Some(path) = &self.class {
            let text = if path.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin())?
            } else {
                std::fs::read_to_string(path)?
            };
            json::parse_schur_class(&serde_json::from_str(&text)?)?
        } else {
            let n = self.n.ok_or_else(|| {
                FormatError::Schema("--n is required with --degrees or --q".into())
            })?;
            let ctx = GrassmannContext::new(n)?;
            let poly = match (&self.degrees, self.q) {
                (Some(ds), None) => chern::class_fg(&MultiDegree::new(n, ds.clone())?)?,
                (None, Some(m)) => chern::q_class(m)?,
                _ => {
                    return Err(FormatError::Schema(
                        "give one of --degrees, --q or --class".into(),
                    ))
                }
            };
            SchurClass::from_lc2(&poly, ctx)
        };
        let codim = match (self.codim, class.homogeneous_codim()) {
            (Some(c), _) => c,
            (None, Some(c)) => c,
            (None, None) => {
                return Err(FormatError::Schema(
                    "class is zero or inhomogeneous; pass --codim".into(),
                ))
            }
        };
        Ok((class, codim))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coniveau criterion: is the coniveau of the complete intersection >= c?
    ///
    /// Check: coniveau criterion (n >= Σd_i + (c-1)·max d_i).
    Coniveau {
        #[command(flatten)]
        x: Hypersurfaces,
        /// Coniveau to test (>= 1).
        #[arg(long)]
        c: u32,
    },
    /// Dimension numerology of X, F and F_G.
    ///
    /// Check: numerology report (dimensions, plane bound, equality case).
    Dims {
        #[command(flatten)]
        x: Hypersurfaces,
    },
    /// Class [F_G] = c_{n-D}(S^{n-D-1}E) on G(1,n), D = Σd_i.
    ///
    /// Check: exceptional-schubert (its unique zero Schubert coefficient).
    FgClass {
        #[command(flatten)]
        x: Hypersurfaces,
    },
    /// Pushforward class [Z'] of the incidence variety for a degree-d hypersurface.
    ///
    /// Check: leok-pipeline (sign of the pure-l coefficient).
    Zprime {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// Intersection numbers against complementary Schubert cycles.
    ///
    /// Check: exceptional-schubert (pairing vector of a class).
    Pair {
        #[command(flatten)]
        source: ClassSource,
    },
    /// Effective-cone certificate: big, effective-boundary or not-effective.
    ///
    /// Check: remark-not-big and leok-pipeline (cone verdicts).
    Cone {
        #[command(flatten)]
        source: ClassSource,
    },
    /// Run named verification checks and emit a report array.
    ///
    /// Check: the full suite with --all, or one of leok-pipeline,
    /// exceptional-schubert, mprime-identity, factorization-erratum,
    /// remark-not-big, beta-shape, enumerative-anchor.
    Verify(VerifyArgs),
    /// Stream numerology for every multidegree in a grid.
    ///
    /// Check: numerology report over a sweep grid (CSV with --csv).
    Sweep {
        #[arg(long, default_value_t = 3)]
        min_n: u32,
        #[arg(long)]
        max_n: u32,
        #[arg(long, default_value_t = 2)]
        min_d: u32,
        #[arg(long)]
        max_d: u32,
        #[arg(long, default_value_t = 1)]
        max_r: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckName {
    LeokPipeline,
    ExceptionalSchubert,
    MprimeIdentity,
    FactorizationErratum,
    RemarkNotBig,
    BetaShape,
    EnumerativeAnchor,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Run the full suite over the grid given by --max-d and --max-n.
    #[arg(long, conflicts_with = "check")]
    all: bool,
    #[arg(long, default_value_t = 5)]
    max_d: u32,
    #[arg(long, default_value_t = 12)]
    max_n: u32,
    /// Run a single check.
    #[arg(long, value_enum, required_unless_present = "all")]
    check: Option<CheckName>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    /// Σd_i for the exceptional-schubert and factorization-erratum checks.
    #[arg(long)]
    degree_sum: Option<u32>,
    /// Include wall-clock time per check (output is then not reproducible).
    #[arg(long)]
    timings: bool,
}

impl VerifyArgs {
    fn checks(&self) -> Result<Vec<Check>, FormatError> {
        let Some(name) = self.check else {
            return Ok(verify::suite(self.max_d, self.max_n));
        };
        let need = |v: Option<u32>, flag: &str| {
            v.ok_or_else(|| FormatError::Schema(format!("--check {name:?} needs --{flag}")))
        };
        Ok(match name {
            CheckName::LeokPipeline => vec![Check::LeokPipeline {
                n: need(self.n, "n")?,
                d: need(self.d, "d")?,
            }],
            CheckName::ExceptionalSchubert => vec![Check::ExceptionalSchubert {
                n: need(self.n, "n")?,
                degree_sum: need(self.degree_sum, "degree-sum")?,
            }],
            CheckName::MprimeIdentity => vec![Check::MPrimeIdentity {
                d: need(self.d, "d")?,
            }],
            CheckName::FactorizationErratum => vec![Check::FactorizationErratum {
                n: need(self.n, "n")?,
                degree_sum: need(self.degree_sum, "degree-sum")?,
            }],
            CheckName::RemarkNotBig => vec![Check::RemarkNotBig {
                n: need(self.n, "n")?,
                d: need(self.d, "d")?,
            }],
            CheckName::BetaShape => vec![Check::BetaShape {
                d: need(self.d, "d")?,
            }],
            CheckName::EnumerativeAnchor => CLASSICAL_ANCHORS
                .iter()
                .copied()
                .map(Check::EnumerativeAnchor)
                .collect(),
        })
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

impl Cli {
    fn output_format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else {
            self.format.unwrap_or(Format::Text)
        }
    }
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<(), FormatError> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, FormatError> {
    let format = cli.output_format();
    if format == Format::Csv && !matches!(cli.command, Command::Sweep { .. }) {
        return Err(FormatError::Schema(
            "--csv is only supported by sweep".into(),
        ));
    }
    let as_json = format == Format::Json;
    match &cli.command {
        Command::Coniveau { x, c } => {
            let md = x.multidegree()?;
            let satisfied = coniveau::coniveau_at_least(&md, *c)?;
            if as_json {
                emit_json(out, &json!({ "satisfied": satisfied }))?;
            } else {
                writeln!(out, "{{\"satisfied\": {satisfied}}}")?;
            }
        }
        Command::Dims { x } => {
            let report = coniveau::dimensions(&x.multidegree()?);
            if as_json {
                emit_json(out, &json::numerology(&report))?;
            } else {
                let v = json::numerology(&report);
                for (k, val) in v.as_object().expect("object") {
                    writeln!(out, "{k}: {val}")?;
                }
            }
        }
        Command::FgClass { x } => {
            let md = x.multidegree()?;
            let poly = chern::class_fg(&md)?;
            let ctx = GrassmannContext::new(md.n())?;
            let schur = SchurClass::from_lc2(&poly, ctx);
            let codim = poly.homogeneous_degree();
            if as_json {
                emit_json(
                    out,
                    &json!({
                        "n": md.n(),
                        "degrees": md.degrees(),
                        "codim": codim,
                        "lc2": json::lc2(&poly),
                        "schur": json::schur_class(&schur),
                    }),
                )?;
            } else {
                writeln!(out, "[F_G] = {poly}")?;
                writeln!(out, "      = {schur}  on G(1,{})", md.n())?;
            }
        }
        Command::Zprime { n, d } => {
            let z = flagpush::z_prime_class(*n, *d)?;
            if as_json {
                emit_json(out, &json::zprime(&z))?;
            } else {
                writeln!(out, "[Z'] = {}", z.class)?;
                writeln!(out, "pure-l coefficient: {}", z.pure_l_coefficient())?;
                writeln!(out, "c2 cofactor: {}", z.c2_cofactor())?;
                if z.degenerate {
                    writeln!(out, "degenerate: pushforward vanishes in this degree")?;
                }
            }
        }
        Command::Pair { source } => {
            let (class, codim) = source.resolve()?;
            let pv = cones::pairing_vector(&class, codim)?;
            if as_json {
                let pairings: Vec<Value> = pv
                    .iter()
                    .map(|(p, v)| json!({ "a": p.a(), "b": p.b(), "value": json::rational(v) }))
                    .collect();
                emit_json(
                    out,
                    &json!({
                        "n": class.context().n(),
                        "codim": codim,
                        "pairings": pairings,
                    }),
                )?;
            } else {
                for (p, v) in &pv {
                    writeln!(out, "<u, s{p}> = {v}")?;
                }
            }
        }
        Command::Cone { source } => {
            let (class, codim) = source.resolve()?;
            let cert = cones::analyze(&class, codim)?;
            if as_json {
                emit_json(out, &json::cone_certificate(&cert))?;
            } else {
                writeln!(out, "class: {}", cert.class)?;
                writeln!(out, "verdict: {}", cert.verdict)?;
                for w in &cert.witnesses {
                    writeln!(
                        out,
                        "witness: s{} has coefficient {}",
                        w.partition, w.coefficient
                    )?;
                }
                writeln!(out, "epsilon: {}", cert.epsilon)?;
            }
        }
        Command::Verify(args) => {
            let checks = args.checks()?;
            // a single check reports precondition errors as usage errors
            let results = if args.check.is_some() {
                runner::try_run_checks(&checks)?
            } else {
                runner::run_checks(&checks)
            };
            let reports: Vec<_> = results.iter().map(|t| t.report.clone()).collect();
            if as_json || format == Format::Text && args.all {
                let arr: Vec<Value> = results
                    .iter()
                    .map(|t| json::report(&t.report, args.timings.then_some(t.elapsed)))
                    .collect();
                emit_json(out, &Value::Array(arr))?;
            } else {
                for t in &results {
                    write!(
                        out,
                        "{:<13} {}",
                        t.report.status.as_str(),
                        t.report.check_id
                    )?;
                    if !t.report.note.is_empty() {
                        write!(out, "  ({})", t.report.note)?;
                    }
                    if args.timings {
                        write!(out, "  {:.3} ms", t.elapsed.as_secs_f64() * 1e3)?;
                    }
                    writeln!(out)?;
                }
            }
            if verify::aggregate_status(&reports) == Status::Fail {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
        Command::Sweep {
            min_n,
            max_n,
            min_d,
            max_d,
            max_r,
        } => {
            let grid = Grid {
                min_n: *min_n,
                max_n: *max_n,
                min_d: *min_d,
                max_d: *max_d,
                max_r: *max_r,
            };
            match format {
                Format::Csv => sweep::write_csv(&grid, &mut *out)?,
                Format::Json => sweep::write_json(&grid, &mut *out)?,
                Format::Text => sweep::write_text(&grid, &mut *out)?,
            };
        }
    }
    out.flush()?;
    Ok(EXIT_OK)
}
