use crate::error::CliError;
use std::cell::RefCell;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            o => Err(CliError::Config(format!("format must be csv or json, got '{o}'"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstantsChoice {
    Natural,
    Si,
}

impl ConstantsChoice {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "natural" => Ok(ConstantsChoice::Natural),
            "si" => Ok(ConstantsChoice::Si),
            o => Err(CliError::Config(format!("constants must be natural or si, got '{o}'"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ConstantsChoice::Natural => "natural",
            ConstantsChoice::Si => "si",
        }
    }

    pub fn build(self) -> qhydro::Constants {
        match self {
            ConstantsChoice::Natural => qhydro::Constants::natural(),
            ConstantsChoice::Si => qhydro::Constants::si(),
        }
    }
}

/// Flat `key = value` lines; `#` starts a comment.
pub fn parse_config_text(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| CliError::Config(format!("line {}: expected key = value", i + 1)))?;
        let (k, v) = (k.trim(), v.trim());
        if k.is_empty() {
            return Err(CliError::Config(format!("line {}: empty key", i + 1)));
        }
        if out.insert(k.to_string(), v.to_string()).is_some() {
            return Err(CliError::Config(format!("line {}: duplicate key '{k}'", i + 1)));
        }
    }
    Ok(out)
}

pub fn read_config_file(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    parse_config_text(&text)
}

pub fn parse_set(items: &[String]) -> Result<BTreeMap<String, String>, CliError> {
    let mut out = BTreeMap::new();
    for s in items {
        let (k, v) = s.split_once('=').ok_or_else(|| CliError::Config(format!("--set expects key=value, got '{s}'")))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

/// Fully resolved run settings.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub experiment: String,
    pub family: Option<String>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub constants: ConstantsChoice,
    pub threads: Option<usize>,
    pub params: BTreeMap<String, String>,
}

/// Command-line values, each overriding the config file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub experiment: Option<String>,
    pub family: Option<String>,
    pub out: Option<PathBuf>,
    pub format: Option<String>,
    pub constants: Option<String>,
    pub threads: Option<usize>,
    pub set: BTreeMap<String, String>,
}

impl RunConfig {
    pub fn resolve(mut file: BTreeMap<String, String>, cli: Overrides) -> Result<Self, CliError> {
        let mut take = |k: &str| file.remove(k);
        let experiment = cli.experiment.or_else(|| take("experiment")).ok_or_else(|| CliError::Config("no experiment given".into()))?;
        let family = cli.family.or_else(|| take("family"));
        let out = cli.out.or_else(|| take("out").map(PathBuf::from));
        let format = cli.format.or_else(|| take("format")).map(|s| Format::parse(&s)).transpose()?;
        let constants = ConstantsChoice::parse(&cli.constants.or_else(|| take("constants")).unwrap_or_else(|| "natural".into()))?;
        let threads = match cli.threads {
            Some(t) => Some(t),
            None => take("threads").map(|s| s.parse::<usize>().map_err(|_| CliError::Config(format!("threads must be a count, got '{s}'")))).transpose()?,
        };
        if threads == Some(0) {
            return Err(CliError::Config("threads must be at least 1".into()));
        }
        let mut params = file;
        params.extend(cli.set);
        Ok(RunConfig { experiment, family, out, format, constants, threads, params })
    }
}

/// Experiment parameters with typed lookups. Every lookup records the value
/// used, defaults included, so reports can embed the resolved set.
pub struct Params {
    given: BTreeMap<String, String>,
    resolved: RefCell<BTreeMap<String, String>>,
}

impl Params {
    pub fn new(given: BTreeMap<String, String>) -> Self {
        Params { given, resolved: RefCell::new(BTreeMap::new()) }
    }

    pub fn check_keys(&self, allowed: &[&str]) -> Result<(), CliError> {
        for k in self.given.keys() {
            if !allowed.contains(&k.as_str()) {
                let list = if allowed.is_empty() { "none".to_string() } else { allowed.join(", ") };
                return Err(CliError::Config(format!("unknown key '{k}' (accepted: {list})")));
            }
        }
        Ok(())
    }

    pub fn resolved(&self) -> BTreeMap<String, String> {
        self.resolved.borrow().clone()
    }

    fn record(&self, k: &str, v: String) {
        self.resolved.borrow_mut().insert(k.to_string(), v);
    }

    pub fn f64(&self, k: &str, default: f64) -> Result<f64, CliError> {
        let v = match self.given.get(k) {
            Some(s) => parse_f64(k, s)?,
            None => default,
        };
        self.record(k, format!("{v:?}"));
        Ok(v)
    }

    pub fn opt_f64(&self, k: &str) -> Result<Option<f64>, CliError> {
        match self.given.get(k) {
            Some(s) => {
                let v = parse_f64(k, s)?;
                self.record(k, format!("{v:?}"));
                Ok(Some(v))
            }
            None => Ok(None),
        }
    }

    pub fn usize(&self, k: &str, default: usize) -> Result<usize, CliError> {
        let v = match self.given.get(k) {
            Some(s) => s.parse().map_err(|_| CliError::Config(format!("{k} must be a non-negative integer, got '{s}'")))?,
            None => default,
        };
        self.record(k, v.to_string());
        Ok(v)
    }

    pub fn choice(&self, k: &str, default: &str, allowed: &[&str]) -> Result<String, CliError> {
        let v = self.given.get(k).map(String::as_str).unwrap_or(default);
        if !allowed.contains(&v) {
            return Err(CliError::Config(format!("{k} must be one of {}, got '{v}'", allowed.join("|"))));
        }
        self.record(k, v.to_string());
        Ok(v.to_string())
    }

    pub fn f64_list(&self, k: &str, default: &[f64]) -> Result<Vec<f64>, CliError> {
        let v = match self.given.get(k) {
            Some(s) => s.split(',').map(|x| parse_f64(k, x.trim())).collect::<Result<Vec<_>, _>>()?,
            None => default.to_vec(),
        };
        if v.is_empty() {
            return Err(CliError::Config(format!("{k} must not be empty")));
        }
        self.record(k, v.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>().join(","));
        Ok(v)
    }

    pub fn choice_list(&self, k: &str, default: &[&str], allowed: &[&str]) -> Result<Vec<String>, CliError> {
        let v: Vec<String> = match self.given.get(k) {
            Some(s) => s.split(',').map(|x| x.trim().to_string()).collect(),
            None => default.iter().map(|s| s.to_string()).collect(),
        };
        if let Some(bad) = v.iter().find(|x| !allowed.contains(&x.as_str())) {
            return Err(CliError::Config(format!("{k}: '{bad}' is not one of {}", allowed.join("|"))));
        }
        self.record(k, v.join(","));
        Ok(v)
    }
}

fn parse_f64(k: &str, s: &str) -> Result<f64, CliError> {
    let v: f64 = s.parse().map_err(|_| CliError::Config(format!("{k} must be a number, got '{s}'")))?;
    if !v.is_finite() {
        return Err(CliError::Config(format!("{k} must be finite, got '{s}'")));
    }
    Ok(v)
}
