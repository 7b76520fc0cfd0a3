//! Runtime configuration: built-in defaults, overridden by an optional
//! TOML file named through `DYNAMIAL_CONFIG`, overridden again by flags.

use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputMode {
    Json,
    Text,
}

#[derive(Debug, Clone)]
pub struct Config {
    pub default_field: String,
    pub pell_bound: u64,
    pub norm_budget: u64,
    pub output: OutputMode,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            default_field: "Q(sqrt,-1)".into(),
            pell_bound: 1_000_000,
            norm_budget: 100_000,
            output: OutputMode::Json,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    default_field: Option<String>,
    pell_bound: Option<u64>,
    norm_budget: Option<u64>,
    output: Option<OutputMode>,
}

/// Loads the config file named by `DYNAMIAL_CONFIG`, if any.
pub fn load() -> Result<Config, String> {
    let mut cfg = Config::default();
    let Some(path) = std::env::var_os("DYNAMIAL_CONFIG") else {
        return Ok(cfg);
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| format!("cannot read config {}: {e}", path.to_string_lossy()))?;
    let file: FileConfig = toml::from_str(&text)
        .map_err(|e| format!("invalid config {}: {e}", path.to_string_lossy()))?;
    if let Some(f) = file.default_field {
        cfg.default_field = f;
    }
    if let Some(b) = file.pell_bound {
        cfg.pell_bound = b;
    }
    if let Some(b) = file.norm_budget {
        cfg.norm_budget = b;
    }
    if let Some(o) = file.output {
        cfg.output = o;
    }
    if cfg.pell_bound == 0 || cfg.norm_budget == 0 {
        return Err("search bounds must be positive".into());
    }
    Ok(cfg)
}
