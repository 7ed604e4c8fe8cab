//! `key = value` configuration files.
//!
//! Recognised keys: `series_order`, `threads`, `enforce_n_gt_2`. Blank lines
//! and lines starting with `#` are ignored. Command-line flags override the
//! file, which overrides the built-in defaults.

use anyhow::{bail, Context, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Number of series coefficients printed by `series`.
    pub series_order: u32,
    /// Worker threads for the verification suites.
    pub threads: usize,
    /// Reject `n ≤ 2`, where the affine Cartan matrix degenerates.
    pub enforce_n_gt_2: bool,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            series_order: 6,
            threads: 1,
            enforce_n_gt_2: true,
        }
    }
}

fn parse_bool(v: &str) -> Option<bool> {
    match v {
        "true" | "yes" | "1" | "on" => Some(true),
        "false" | "no" | "0" | "off" => Some(false),
        _ => None,
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Config> {
        let mut c = Config::default();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                bail!("line {}: expected key = value", no + 1);
            };
            let (k, v) = (k.trim(), v.trim());
            match k {
                "series_order" => {
                    c.series_order = v
                        .parse()
                        .with_context(|| format!("line {}: series_order", no + 1))?
                }
                "threads" => {
                    c.threads = v
                        .parse()
                        .with_context(|| format!("line {}: threads", no + 1))?;
                    if c.threads == 0 {
                        bail!("line {}: threads must be positive", no + 1);
                    }
                }
                "enforce_n_gt_2" => {
                    c.enforce_n_gt_2 = match parse_bool(v) {
                        Some(b) => b,
                        None => bail!("line {}: enforce_n_gt_2 expects a boolean", no + 1),
                    }
                }
                other => bail!("line {}: unknown key {:?}", no + 1, other),
            }
        }
        Ok(c)
    }

    pub fn load(path: &str) -> Result<Config> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path))?;
        Config::parse(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        let c = Config::parse("# defaults\nseries_order = 4\n\nthreads=2\nenforce_n_gt_2 = no\n")
            .unwrap();
        assert_eq!(
            c,
            Config {
                series_order: 4,
                threads: 2,
                enforce_n_gt_2: false
            }
        );
        assert_eq!(Config::parse("").unwrap(), Config::default());
        assert!(Config::parse("threads = 0").is_err());
        assert!(Config::parse("colour = red").is_err());
        assert!(Config::parse("series_order 3").is_err());
    }
}
