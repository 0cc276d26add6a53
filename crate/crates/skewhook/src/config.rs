//! Run-time configuration: brute-force caps, truncation order, seed, output.
//!
//! A config can be loaded from a simple `key=value` file and overridden by
//! flags; `SKEWHOOK_SEED` in the environment overrides the file but loses to
//! an explicit `--seed`.

use crate::error::{Error, Result};

/// Output format for CLI commands.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Caps and knobs shared by enumerators and the verification battery.
#[derive(Clone, Debug)]
pub struct Config {
    /// Cap on cells for brute-force standard-tableau enumeration.
    pub brute_cap: usize,
    /// Cap on `|outer|` for the 2^cells pleasant-diagram scan.
    pub pleasant_cap: usize,
    /// Cap on `n` for alternating-permutation enumeration.
    pub alt_cap: usize,
    /// Default q-series truncation order.
    pub trunc_order: usize,
    /// Seed recorded in every emitted report.
    pub seed: u64,
    /// Output format.
    pub format: OutputFormat,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            brute_cap: 12,
            pleasant_cap: 16,
            alt_cap: 12,
            trunc_order: 20,
            seed: 1,
            format: OutputFormat::Text,
        }
    }
}

impl Config {
    /// Parse a `key=value` config file body. Unknown keys are rejected so a
    /// typo cannot silently fall back to a default.
    pub fn parse(body: &str) -> Result<Self> {
        let mut cfg = Config::default();
        for (lineno, raw) in body.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::Parse(format!("config line {}: expected key=value", lineno + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            let as_usize = || -> Result<usize> {
                let v: usize = value
                    .parse()
                    .map_err(|_| Error::Parse(format!("config key `{}`: bad number `{}`", key, value)))?;
                if v == 0 {
                    return Err(Error::Parse(format!("config key `{}` must be positive", key)));
                }
                Ok(v)
            };
            match key {
                "brute_cap" => cfg.brute_cap = as_usize()?,
                "pleasant_cap" => cfg.pleasant_cap = as_usize()?,
                "alt_cap" => cfg.alt_cap = as_usize()?,
                "trunc_order" => cfg.trunc_order = as_usize()?,
                "seed" => {
                    cfg.seed = value
                        .parse()
                        .map_err(|_| Error::Parse(format!("config key `seed`: bad number `{}`", value)))?
                }
                "format" => {
                    cfg.format = match value {
                        "text" => OutputFormat::Text,
                        "json" => OutputFormat::Json,
                        _ => {
                            return Err(Error::Parse(format!(
                                "config key `format`: expected text|json, got `{}`",
                                value
                            )))
                        }
                    }
                }
                _ => return Err(Error::Parse(format!("unknown config key `{}`", key))),
            }
        }
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_validates() {
        let cfg = Config::parse("seed=42\nbrute_cap=10\n# comment\nformat=json\n").unwrap();
        assert_eq!(cfg.seed, 42);
        assert_eq!(cfg.brute_cap, 10);
        assert_eq!(cfg.format, OutputFormat::Json);
        assert!(Config::parse("brute_cap=0").is_err());
        assert!(Config::parse("no_such_key=1").is_err());
        assert!(Config::parse("seed").is_err());
    }
}
