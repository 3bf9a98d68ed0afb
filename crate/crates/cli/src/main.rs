mod report;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use triangle_verify::conditions::{check_cor22, check_thm21, check_thm34};
use triangle_verify::oeis::{fetch_bfile, reshape_truncating, resolve_cache_dir, OeisId};
use triangle_verify::properties::{
    is_strongly_q_log_concave, is_strongly_q_log_convex, is_tp_r, PolySeq,
};
use triangle_verify::transforms::{check_preservation, Direction};
use triangle_verify::triangles::{
    gen_const, gen_penta, preset, row_gen_fns, rows_log_concave, triangle_matrix, ConstParams,
    PentaSchemes, Triangle,
};
use triangle_verify::{Error, Result};

use report::{Entry, RunReport};

#[derive(Parser)]
#[command(
    name = "tverify",
    version,
    about = "Generate triangular arrays and check their properties exactly"
)]
struct Cli {
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// OEIS b-file cache directory.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Never touch the network; fail on a cache miss.
    #[arg(long, global = true)]
    offline: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct Source {
    /// Named preset.
    #[arg(long)]
    preset: Option<String>,
    /// Constant parameters `alpha,beta,gamma,e,f,g,h`.
    #[arg(long)]
    params: Option<String>,
    /// JSON file with per-index `gamma, e, f, g, h` schemes.
    #[arg(long)]
    schemes: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a triangle file.
    Generate {
        #[command(flatten)]
        source: Source,
        /// Row index s for the s_pascal preset.
        #[arg(long)]
        s: Option<usize>,
        /// Last row index.
        #[arg(long)]
        n: usize,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run property checks on a triangle.
    Check {
        #[arg(long, conflicts_with_all = ["oeis", "preset", "params"])]
        file: Option<PathBuf>,
        #[arg(long, requires = "arity", conflicts_with_all = ["preset", "params"])]
        oeis: Option<String>,
        /// Row width step for an OEIS triangle (row n has arity*n+1 entries).
        #[arg(long)]
        arity: Option<usize>,
        #[arg(long, requires = "n", conflicts_with = "params")]
        preset: Option<String>,
        #[arg(long, requires = "n")]
        params: Option<String>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Minor order for `tp`.
        #[arg(long, default_value_t = 2)]
        order: usize,
        #[arg(required = true, value_enum)]
        checks: Vec<CheckKind>,
    },
    /// Evaluate a sufficient-condition list.
    Conditions {
        /// thm21 takes per-index schemes; cor22 and thm34 take constants.
        #[arg(value_enum)]
        set: ConditionSet,
        /// Constant parameters `alpha,beta,gamma,e,f,g,h`.
        #[arg(long)]
        params: Option<String>,
        /// JSON file with per-index `gamma, e, f, g, h` schemes.
        #[arg(long)]
        schemes: Option<PathBuf>,
        /// Largest k for index-dependent conditions.
        #[arg(long, default_value_t = 20)]
        k_max: i64,
    },
    /// Apply the bi^s-nomial transform and check preservation.
    Transform {
        /// One polynomial per line, coefficients lowest degree first.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        direction: DirectionArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    RowsLogConcave,
    RowgenStrongQlcx,
    RowgenStrongQlcv,
    Tp,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConditionSet {
    Thm21,
    Cor22,
    Thm34,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Convex,
    Concave,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Self {
        match d {
            DirectionArg::Convex => Direction::Convex,
            DirectionArg::Concave => Direction::Concave,
        }
    }
}

fn name_of<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))
}

fn load_schemes(path: &Path) -> Result<PentaSchemes> {
    serde_json::from_str(&read(path)?)
        .map_err(|e| Error::Config(format!("bad scheme file {}: {e}", path.display())))
}

fn require<T>(v: Option<T>, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::Config(format!("missing {what}")))
}

struct Run {
    inputs: BTreeMap<String, Value>,
    reports: Vec<Entry>,
    artifact: Option<String>,
    /// Raw text for standard output instead of the JSON report.
    raw: Option<String>,
}

impl Run {
    fn new() -> Self {
        Run {
            inputs: BTreeMap::new(),
            reports: Vec::new(),
            artifact: None,
            raw: None,
        }
    }

    fn input(&mut self, key: &str, v: impl Into<Value>) {
        self.inputs.insert(key.to_string(), v.into());
    }
}

fn generate(run: &mut Run, source: &Source, s: Option<usize>, n: usize) -> Result<Triangle> {
    if let Some(name) = &source.preset {
        run.input("preset", name.as_str());
        if let Some(s) = s {
            run.input("s", s);
        }
        preset(name, s)?.generate(n)
    } else if let Some(p) = &source.params {
        run.input("params", p.as_str());
        Ok(gen_const(&ConstParams::parse(p)?, n))
    } else {
        let path = require(source.schemes.as_ref(), "--preset, --params or --schemes")?;
        run.input("schemes", path.display().to_string());
        gen_penta(&load_schemes(path)?, n)
    }
}

fn execute(cli: &Cli, run: &mut Run) -> Result<()> {
    match &cli.command {
        Command::Generate { source, s, n, out } => {
            run.input("n", *n);
            let t = generate(run, source, *s, *n)?;
            match out {
                Some(path) => {
                    std::fs::write(path, t.to_text())?;
                    run.artifact = Some(path.display().to_string());
                }
                None => run.raw = Some(t.to_text()),
            }
        }
        Command::Check {
            file,
            oeis,
            arity,
            preset,
            params,
            s,
            n,
            order,
            checks,
        } => {
            let t = if let Some(path) = file {
                run.input("file", path.display().to_string());
                Triangle::from_text(&read(path)?)?
            } else if let Some(id) = oeis {
                let id: OeisId = id.parse()?;
                let arity = require(*arity, "--arity")?;
                run.input("oeis", id.as_str());
                run.input("arity", arity);
                let dir = resolve_cache_dir(cli.cache_dir.as_deref())?;
                let (t, dropped) =
                    reshape_truncating(&fetch_bfile(&id, &dir, cli.offline)?, arity)?;
                run.input("dropped_entries", dropped);
                match n {
                    Some(n) if *n < t.n_max() => t.truncate(*n),
                    _ => t,
                }
            } else {
                let source = Source {
                    preset: preset.clone(),
                    params: params.clone(),
                    schemes: None,
                };
                let n = require(*n, "--n")?;
                run.input("n", n);
                generate(run, &source, *s, n)?
            };
            run.input("rows", t.n_max() + 1);
            for check in checks {
                let name = name_of(check);
                let r = match check {
                    CheckKind::RowsLogConcave => rows_log_concave(&t),
                    CheckKind::RowgenStrongQlcx => is_strongly_q_log_convex(&row_gen_fns(&t)),
                    CheckKind::RowgenStrongQlcv => is_strongly_q_log_concave(&row_gen_fns(&t)),
                    CheckKind::Tp => {
                        run.input("order", *order);
                        let size = t.n_max() + 1;
                        is_tp_r(&triangle_matrix(&t, size, size), *order)?
                    }
                };
                run.reports.push(Entry::property(name, &r));
            }
        }
        Command::Conditions {
            set,
            params,
            schemes,
            k_max,
        } => {
            let name = name_of(set);
            let r = match set {
                ConditionSet::Thm21 => {
                    let path = require(schemes.as_ref(), "--schemes")?;
                    run.input("schemes", path.display().to_string());
                    run.input("k_max", *k_max);
                    check_thm21(&load_schemes(path)?, *k_max)?
                }
                ConditionSet::Cor22 | ConditionSet::Thm34 => {
                    let p = require(params.as_ref(), "--params")?;
                    run.input("params", p.as_str());
                    let p = ConstParams::parse(p)?;
                    if matches!(set, ConditionSet::Cor22) {
                        check_cor22(&p)
                    } else {
                        check_thm34(&p)
                    }
                }
            };
            run.reports.push(Entry::conditions(name, &r));
        }
        Command::Transform {
            input,
            s,
            n,
            direction,
        } => {
            run.input("input", input.display().to_string());
            run.input("s", *s);
            run.input("n", *n);
            run.input("direction", name_of(direction));
            let ps = PolySeq::from_text(&read(input)?)?;
            let r = check_preservation(&ps, *s, *n, (*direction).into())?;
            run.reports.push(Entry::preservation("preservation", &r));
        }
    }
    Ok(())
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Generate { .. } => "generate",
        Command::Check { .. } => "check",
        Command::Conditions { .. } => "conditions",
        Command::Transform { .. } => "transform",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut run = Run::new();
    if let Err(e) = execute(&cli, &mut run) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let report = RunReport {
        command: command_name(&cli.command).to_string(),
        inputs: run.inputs,
        reports: run.reports,
        artifact: run.artifact,
        timing_ms: start.elapsed().as_millis(),
        version: report::VERSION,
    };
    eprintln!("{}", report.summary());
    let json = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    let written = match (&cli.json, run.raw) {
        (Some(path), raw) => {
            if let Some(raw) = raw {
                print!("{raw}");
            }
            std::fs::write(path, &json)
        }
        (None, Some(raw)) => {
            print!("{raw}");
            Ok(())
        }
        (None, None) => {
            print!("{json}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(report.exit_code() as u8)
}
