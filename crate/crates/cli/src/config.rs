//! Run configuration. Command-line flags are layered over an optional JSON
//! file that uses the same field names.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use clap::Args;
use pvka_core::verify::SamplerConfig;
use pvka_core::{DeletionSpec, GridSpec, IndexSet, ParamVec, SystemId};
use serde::Deserialize;

/// A configuration problem; the process exits with status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl From<pvka_core::Error> for UsageError {
    fn from(e: pvka_core::Error) -> Self {
        Self(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

/// Flags shared by every subcommand.
#[derive(Args, Debug, Clone, Default, PartialEq)]
pub struct Flags {
    /// JSON file with the same field names; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// System name: H, L, J, M, s, hst, hDPT, C, K, RM or Kh.
    #[arg(long)]
    pub system: Option<String>,
    /// Comma-separated system names, or `all`.
    #[arg(long)]
    pub systems: Option<String>,
    /// Parameters as `g=9/2,h=3`.
    #[arg(long)]
    pub params: Option<String>,
    /// Deleted pseudo virtual indices, e.g. `1,2`.
    #[arg(long = "D", value_name = "LIST")]
    pub d: Option<String>,
    #[arg(long = "N")]
    pub n: Option<i64>,
    /// Sample grid as `lo:hi:count`.
    #[arg(long, allow_hyphen_values = true, value_name = "LO:HI:COUNT")]
    pub grid: Option<String>,
    /// Overrides every numeric tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub trials: Option<u64>,
    /// Worker threads for scans.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// JSON destination; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// CSV destination for the potential grid.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long = "max-M")]
    pub max_m: Option<usize>,
    #[arg(long = "max-N")]
    pub max_n: Option<u32>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Text {
    One(String),
    Many(Vec<String>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Indices {
    Text(String),
    List(Vec<u32>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Params {
    Text(String),
    Map(BTreeMap<String, String>),
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    system: Option<String>,
    systems: Option<Text>,
    params: Option<Params>,
    #[serde(rename = "D")]
    d: Option<Indices>,
    #[serde(rename = "N")]
    n: Option<i64>,
    grid: Option<String>,
    tol: Option<f64>,
    seed: Option<u64>,
    trials: Option<u64>,
    jobs: Option<usize>,
    out: Option<PathBuf>,
    csv: Option<PathBuf>,
    #[serde(rename = "max-M", alias = "max_M")]
    max_m: Option<usize>,
    #[serde(rename = "max-N", alias = "max_N")]
    max_n: Option<u32>,
}

impl FileConfig {
    fn into_flags(self) -> Flags {
        let join = |v: Vec<String>| v.join(",");
        Flags {
            config: None,
            system: self.system,
            systems: self.systems.map(|s| match s {
                Text::One(s) => s,
                Text::Many(v) => join(v),
            }),
            params: self.params.map(|p| match p {
                Params::Text(s) => s,
                Params::Map(m) => join(m.into_iter().map(|(k, v)| format!("{k}={v}")).collect()),
            }),
            d: self.d.map(|d| match d {
                Indices::Text(s) => s,
                Indices::List(v) => join(v.iter().map(u32::to_string).collect()),
            }),
            n: self.n,
            grid: self.grid,
            tol: self.tol,
            seed: self.seed,
            trials: self.trials,
            jobs: self.jobs,
            out: self.out,
            csv: self.csv,
            max_m: self.max_m,
            max_n: self.max_n,
        }
    }
}

impl Flags {
    /// Fills every unset flag from `base`.
    pub fn over(self, base: Flags) -> Flags {
        Flags {
            config: self.config.or(base.config),
            system: self.system.or(base.system),
            systems: self.systems.or(base.systems),
            params: self.params.or(base.params),
            d: self.d.or(base.d),
            n: self.n.or(base.n),
            grid: self.grid.or(base.grid),
            tol: self.tol.or(base.tol),
            seed: self.seed.or(base.seed),
            trials: self.trials.or(base.trials),
            jobs: self.jobs.or(base.jobs),
            out: self.out.or(base.out),
            csv: self.csv.or(base.csv),
            max_m: self.max_m.or(base.max_m),
            max_n: self.max_n.or(base.max_n),
        }
    }

    /// Merges the file named by `--config`, if any.
    pub fn with_file(self) -> Result<Flags, UsageError> {
        match self.config.clone() {
            None => Ok(self),
            Some(path) => Ok(self.over(read_file(&path)?)),
        }
    }
}

fn read_file(path: &Path) -> Result<Flags, UsageError> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let file: FileConfig =
        serde_json::from_str(&text).map_err(|e| usage(format!("bad config {}: {e}", path.display())))?;
    Ok(file.into_flags())
}

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_TRIALS: u64 = 50;
pub const DEFAULT_GRID_COUNT: usize = 201;

/// A validated configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub flags: Flags,
    pub systems: Vec<SystemId>,
    pub seed: u64,
    pub trials: u64,
    pub jobs: usize,
    pub sampler: SamplerConfig,
}

fn parse_system(s: &str) -> Result<SystemId, UsageError> {
    s.trim().parse().map_err(UsageError::from)
}

fn parse_indices(s: &str) -> Result<IndexSet, UsageError> {
    let v = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<u32>().map_err(|_| usage(format!("`{p}` is not a nonnegative integer"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IndexSet::new(v)?)
}

impl RunConfig {
    pub fn resolve(flags: Flags) -> Result<Self, UsageError> {
        let flags = flags.with_file()?;
        let mut systems = match flags.systems.as_deref().map(str::trim) {
            None | Some("all") => SystemId::ALL.to_vec(),
            Some(list) => list.split(',').map(parse_system).collect::<Result<Vec<_>, _>>()?,
        };
        let mut seen = std::collections::HashSet::new();
        systems.retain(|id| seen.insert(*id));
        if systems.is_empty() {
            return Err(usage("no systems selected"));
        }
        let trials = flags.trials.unwrap_or(DEFAULT_TRIALS);
        if trials == 0 {
            return Err(usage("--trials must be at least 1"));
        }
        let jobs = flags.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        if jobs == 0 {
            return Err(usage("--jobs must be at least 1"));
        }
        let mut sampler = SamplerConfig::EXACT;
        if let Some(m) = flags.max_m {
            sampler.max_m = m;
        }
        if let Some(n) = flags.max_n {
            sampler.max_n = n;
            sampler.max_entry = sampler.max_entry.min(n);
        }
        if sampler.max_m == 0 {
            return Err(usage("--max-M must be at least 1"));
        }
        if let Some(t) = flags.tol {
            if !(t > 0.0 && t.is_finite()) {
                return Err(usage("--tol must be positive"));
            }
        }
        Ok(Self { seed: flags.seed.unwrap_or(DEFAULT_SEED), flags, systems, trials, jobs, sampler })
    }

    pub fn system(&self) -> Result<SystemId, UsageError> {
        parse_system(self.flags.system.as_deref().ok_or_else(|| usage("--system is required"))?)
    }

    /// The single deletion named by --system, --params, --D and --N.
    pub fn spec(&self) -> Result<DeletionSpec, UsageError> {
        let id = self.system()?;
        let lambda = match &self.flags.params {
            Some(p) => ParamVec::parse(id, p)?,
            None => ParamVec::parse(id, "")?,
        };
        let d = parse_indices(self.flags.d.as_deref().ok_or_else(|| usage("--D is required"))?)?;
        let n = self.flags.n.ok_or_else(|| usage("--N is required"))?;
        Ok(DeletionSpec::new(id, lambda, d, n)?)
    }

    pub fn grid(&self, id: SystemId) -> Result<GridSpec, UsageError> {
        match &self.flags.grid {
            Some(g) => Ok(GridSpec::parse(g)?),
            None => Ok(GridSpec::default_for(id, DEFAULT_GRID_COUNT)),
        }
    }

    pub fn tol(&self, default: f64) -> f64 {
        self.flags.tol.unwrap_or(default)
    }
}
