//! Run configuration: TOML with the group type, grading, optional real-Weyl
//! fixtures, dotted-edge annotations, and search bounds.

use serde::Deserialize;
use std::collections::BTreeMap;
use strataforge_core::orbits::{EnumerationOptions, RealWeylFixtures};

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    #[serde(rename = "type")]
    pub group_type: String,
    pub grading: Vec<u8>,
    #[serde(default = "default_height")]
    pub search_height: i64,
    #[serde(default)]
    pub certified_search: bool,
    #[serde(default)]
    pub real_weyl_fixtures: Vec<Fixture>,
    /// Pairs of orbit labels rendered as dotted annotation edges.
    #[serde(default)]
    pub dotted_edges: Vec<(String, String)>,
}

fn default_height() -> i64 {
    3
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub frame: usize,
    #[serde(default)]
    pub generators: Vec<String>,
    #[serde(default)]
    pub expected_cosets: Option<usize>,
}

#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "config error: {}", self.0)
    }
}

impl std::error::Error for ConfigError {}

impl RunConfig {
    pub fn load(path: &std::path::Path) -> Result<RunConfig, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
        let cfg: RunConfig =
            toml::from_str(&text).map_err(|e| ConfigError(format!("{e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let rank = match self.group_type.as_str() {
            "A1" => 1,
            "A2" | "B2" | "C2" | "G2" => 2,
            "C3" => 3,
            other => return Err(ConfigError(format!("unknown type '{other}'"))),
        };
        if self.grading.len() != rank {
            return Err(ConfigError(format!(
                "grading length {} does not match rank {rank} of {}",
                self.grading.len(),
                self.group_type
            )));
        }
        if self.grading.iter().any(|&g| g > 1) {
            return Err(ConfigError("grading entries must be 0 or 1".into()));
        }
        if self.grading.iter().all(|&g| g == 0) {
            return Err(ConfigError("at least one simple root must be graded 1".into()));
        }
        if self.search_height < 1 {
            return Err(ConfigError("search_height must be >= 1".into()));
        }
        Ok(())
    }

    pub fn enumeration_options(&self) -> EnumerationOptions {
        let mut generators = BTreeMap::new();
        let mut expected = BTreeMap::new();
        for f in &self.real_weyl_fixtures {
            if !f.generators.is_empty() {
                generators.insert(f.frame, f.generators.clone());
            }
            if let Some(n) = f.expected_cosets {
                expected.insert(f.frame, n);
            }
        }
        EnumerationOptions {
            fixtures: RealWeylFixtures { generators, expected_cosets: expected },
            certified_search: self.certified_search,
        }
    }
}
