mod config;
mod error;
mod experiments;
mod output;

use clap::Parser;
use config::{parse_set, read_config_file, Format, Overrides, Params, RunConfig};
use error::{CliError, EXIT_NUMERICAL, EXIT_OK};
use experiments::{Ctx, FamilyUse};
use output::{config_value, render_csv, render_json, Table};
use std::collections::BTreeMap;
use std::path::PathBuf;

/// Numerical experiments on quantum hydrodynamic flows.
#[derive(Parser, Debug)]
#[command(name = "qhydro", version)]
struct Cli {
    /// Experiment to run; `--list` prints the names.
    name: Option<String>,
    /// Variant for `residuals` (equation) and `identity-checks` (identity).
    variant: Option<String>,
    #[arg(long)]
    experiment: Option<String>,
    /// Family key, e.g. hydrogen:n=2:l=1:mu=1
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv or json; each experiment has its own default.
    #[arg(long)]
    format: Option<String>,
    /// natural or si
    #[arg(long)]
    constants: Option<String>,
    #[arg(long, env = "QHYDRO_THREADS")]
    threads: Option<usize>,
    /// Experiment parameter; repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    /// File of `key = value` lines; command-line flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    list: bool,
}

struct Outcome {
    config: serde_json::Value,
    format: Format,
    out: Option<PathBuf>,
    body: Result<output::Artifact, CliError>,
}

fn resolve(cli: Cli) -> Result<(RunConfig, &'static experiments::Experiment), CliError> {
    let file = match &cli.config {
        Some(p) => read_config_file(p)?,
        None => BTreeMap::new(),
    };
    let experiment = match (cli.name, cli.experiment) {
        (Some(a), Some(b)) if a != b => return Err(CliError::Config(format!("experiment given twice: '{a}' and '{b}'"))),
        (a, b) => a.or(b),
    };
    let overrides = Overrides {
        experiment,
        family: cli.family,
        out: cli.out,
        format: cli.format,
        constants: cli.constants,
        threads: cli.threads,
        set: parse_set(&cli.set)?,
    };
    let mut rc = RunConfig::resolve(file, overrides)?;
    let exp = experiments::find(&rc.experiment)
        .ok_or_else(|| CliError::Config(format!("unknown experiment '{}' (known: {})", rc.experiment, experiments::names().join(", "))))?;
    match (cli.variant, exp.variant_key) {
        (Some(v), Some(k)) => {
            if let Some(old) = rc.params.insert(k.to_string(), v.clone()) {
                if old != v {
                    return Err(CliError::Config(format!("{k} given twice: '{old}' and '{v}'")));
                }
            }
        }
        (Some(v), None) => return Err(CliError::Config(format!("{} takes no variant, got '{v}'", exp.name))),
        _ => {}
    }
    Ok((rc, exp))
}

fn execute(rc: RunConfig, exp: &experiments::Experiment) -> Outcome {
    let threads = rc.threads.unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1));
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    let params = Params::new(rc.params.clone());
    let family = match exp.family {
        FamilyUse::Default(f) => Some(rc.family.clone().unwrap_or_else(|| f(&params).to_string())),
        _ => rc.family.clone(),
    };
    let consts = rc.constants.build();
    let body = pool
        .map_err(|e| CliError::Config(format!("thread pool: {e}")))
        .and_then(|_| {
            if matches!(exp.family, FamilyUse::None) && family.is_some() {
                return Err(CliError::Config(format!("{} takes no --family", exp.name)));
            }
            params.check_keys(exp.keys)?;
            (exp.run)(&Ctx { params: &params, family: family.as_deref(), consts })
        });
    let format = rc.format.or_else(|| body.as_ref().ok().map(|a| a.default_format)).unwrap_or(Format::Json);
    let mut shown = rc.params.clone();
    shown.extend(params.resolved());
    let config = config_value(exp.name, family.as_deref(), format, rc.constants.name(), threads, &shown);
    Outcome { config, format, out: rc.out, body }
}

fn emit(o: Outcome) -> i32 {
    let (text, code) = match &o.body {
        Ok(a) => {
            let status = if a.failures > 0 { "failed" } else { "ok" };
            let text = match o.format {
                Format::Json => render_json(&o.config, status, Some(&a.result), None),
                Format::Csv => render_csv(&o.config, &a.table, None),
            };
            if a.failures > 0 {
                eprintln!("qhydro: {} row(s) failed", a.failures);
            }
            (text, if a.failures > 0 { EXIT_NUMERICAL } else { EXIT_OK })
        }
        Err(e) => {
            eprintln!("qhydro: {e}");
            let (kind, msg) = (e.kind(), e.to_string());
            let text = match o.format {
                Format::Json => render_json(&o.config, "error", None, Some((&kind, &msg))),
                Format::Csv => render_csv(&o.config, &Table::default(), Some((&kind, &msg))),
            };
            (text, e.exit_code())
        }
    };
    let written = match &o.out {
        Some(p) => std::fs::write(p, text).map_err(CliError::from),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    match written {
        Ok(()) => code,
        Err(e) => {
            eprintln!("qhydro: {e}");
            e.exit_code()
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if cli.list {
        for e in experiments::EXPERIMENTS {
            println!("{}", e.name);
        }
        return;
    }
    let code = match resolve(cli) {
        Ok((rc, exp)) => emit(execute(rc, exp)),
        Err(e) => {
            eprintln!("qhydro: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
