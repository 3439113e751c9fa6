//! Enumeration cap resolution: `--max-n` beats `PAVSTAT_MAX_N` beats the
//! built-in default (12, or 15 with `--extended`).

use anyhow::{bail, Context};

pub const DEFAULT_CAP: usize = 12;
pub const EXTENDED_CAP: usize = 15;
pub const ENV_MAX_N: &str = "PAVSTAT_MAX_N";

/// Enumerating `Av_n(321)` for larger `n` is refused outright even when
/// requested explicitly; `C_18` is already past 477 million.
pub const HARD_LIMIT: usize = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CapSource {
    Flag,
    Env,
    Default,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub cap: usize,
    pub source: CapSource,
    pub extended: bool,
}

impl Config {
    pub fn resolve(flag: Option<usize>, env: Option<&str>, extended: bool) -> anyhow::Result<Self> {
        let (cap, source) = match (flag, env) {
            (Some(n), _) => (n, CapSource::Flag),
            (None, Some(raw)) => {
                let n = raw
                    .trim()
                    .parse()
                    .with_context(|| format!("{ENV_MAX_N}={raw:?} is not a nonnegative integer"))?;
                (n, CapSource::Env)
            }
            (None, None) => (
                if extended { EXTENDED_CAP } else { DEFAULT_CAP },
                CapSource::Default,
            ),
        };
        if cap > HARD_LIMIT {
            bail!("a cap of {cap} is above the hard limit of {HARD_LIMIT}");
        }
        Ok(Config {
            cap,
            source,
            extended,
        })
    }

    /// Reads `PAVSTAT_MAX_N` from the process environment.
    pub fn from_env(flag: Option<usize>, extended: bool) -> anyhow::Result<Self> {
        let env = std::env::var(ENV_MAX_N).ok();
        Config::resolve(flag, env.as_deref(), extended)
    }

    /// Refuses an enumeration of length `n` above the cap.
    pub fn admit(&self, n: usize) -> anyhow::Result<()> {
        if n > self.cap {
            bail!(
                "n = {n} exceeds the configured cap of {} (raise it with --max-n or {ENV_MAX_N})",
                self.cap
            );
        }
        Ok(())
    }

    /// Largest parameter a suite should reach. An explicit `--max-n` is
    /// taken literally; otherwise the suite's own default, clamped to the cap.
    pub fn limit(&self, suite_default: usize) -> usize {
        match self.source {
            CapSource::Flag => self.cap,
            _ => suite_default.min(self.cap),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let c = Config::resolve(Some(9), Some("11"), true).unwrap();
        assert_eq!((c.cap, c.source), (9, CapSource::Flag));
        let c = Config::resolve(None, Some("11"), true).unwrap();
        assert_eq!((c.cap, c.source), (11, CapSource::Env));
        assert_eq!(Config::resolve(None, None, false).unwrap().cap, 12);
        assert_eq!(Config::resolve(None, None, true).unwrap().cap, 15);
    }

    #[test]
    fn bad_values() {
        assert!(Config::resolve(None, Some("twelve"), false).is_err());
        assert!(Config::resolve(Some(40), None, false).is_err());
    }

    #[test]
    fn limits() {
        let default = Config::resolve(None, None, false).unwrap();
        assert_eq!(default.limit(8), 8);
        assert_eq!(default.limit(20), 12);
        let flag = Config::resolve(Some(6), None, false).unwrap();
        assert_eq!(flag.limit(8), 6);
        assert!(flag.admit(6).is_ok());
        let err = flag.admit(7).unwrap_err().to_string();
        assert!(err.contains("cap of 6"), "{err}");
    }
}
