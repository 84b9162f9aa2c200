use std::path::Path;
use std::time::Duration;

use serde::Deserialize;

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub search_bound: u32,
    pub displacement_retry_budget: usize,
    pub oracle_command: Option<String>,
    pub oracle_timeout_seconds: u64,
    pub parallel: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            search_bound: 4,
            displacement_retry_budget: 64,
            oracle_command: None,
            oracle_timeout_seconds: 60,
            parallel: true,
        }
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Config, String> {
        toml::from_str(text).map_err(|e| e.to_string())
    }

    pub fn load(path: &Path) -> Result<Config, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn oracle_timeout(&self) -> Duration {
        Duration::from_secs(self.oracle_timeout_seconds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_files_keep_defaults() {
        let c = Config::parse("search_bound = 6\nparallel = false\n").unwrap();
        assert_eq!(c.search_bound, 6);
        assert!(!c.parallel);
        assert_eq!(c.displacement_retry_budget, 64);
        assert_eq!(c.oracle_command, None);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(Config::parse("serch_bound = 6\n").is_err());
        assert!(Config::parse("search_bound = \"six\"\n").is_err());
    }
}
