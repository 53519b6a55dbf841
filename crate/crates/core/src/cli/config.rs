use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CliError, GlobalOpts};
use crate::algebra::Rational;
use crate::braid::GroupKind;
use crate::checker::Limits;
use crate::representation::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
}

/// Settings file, same fields as the global flags:
/// `{"group": "VB", "n": 2, "base": "1,2,2,1", "seed": 0,
///   "max_symbolic_n": 6, "max_symbolic_len": 12, "format": "json"}`.
/// Every field is optional.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub group: Option<GroupKind>,
    pub n: Option<usize>,
    pub base: Option<String>,
    pub seed: Option<u64>,
    pub max_symbolic_n: Option<usize>,
    pub max_symbolic_len: Option<usize>,
    pub format: Option<OutputFormat>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))
    }
}

/// Flags merged over the config file over defaults.
#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub group: Option<GroupKind>,
    pub n: Option<usize>,
    pub base: Option<Point<Rational>>,
    pub seed: u64,
    pub limits: Limits,
    pub format: OutputFormat,
}

impl Settings {
    pub fn resolve(opts: &GlobalOpts) -> Result<Self, CliError> {
        let file = match &opts.config {
            Some(p) => RunConfig::load(p)?,
            None => RunConfig::default(),
        };
        let base = match opts.base.as_ref().or(file.base.as_ref()) {
            Some(text) => Some(
                text.parse::<Point<Rational>>()
                    .map_err(|e| CliError::invalid(format!("bad base point {text:?}: {e}")))?,
            ),
            None => None,
        };
        let defaults = Limits::default();
        Ok(Settings {
            group: opts.group.or(file.group),
            n: opts.strands.or(file.n),
            base,
            seed: opts.seed.or(file.seed).unwrap_or(0),
            limits: Limits {
                max_n: opts.max_symbolic_n.or(file.max_symbolic_n).unwrap_or(defaults.max_n),
                max_len: opts
                    .max_symbolic_len
                    .or(file.max_symbolic_len)
                    .unwrap_or(defaults.max_len),
            },
            format: if opts.json {
                OutputFormat::Json
            } else {
                file.format.unwrap_or_default()
            },
        })
    }

    pub fn json(&self) -> bool {
        self.format == OutputFormat::Json
    }

    /// Group and strand count, both of which the command needs.
    pub fn space(&self) -> Result<(GroupKind, usize), CliError> {
        match (self.group, self.n) {
            (Some(g), Some(n)) => Ok((g, n)),
            (None, _) => Err(CliError::invalid("--group is required")),
            (_, None) => Err(CliError::invalid("-n/--strands is required")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let dir = std::env::temp_dir().join(format!("bc-config-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.json");
        std::fs::write(&path, r#"{"group": "FVB", "n": 3, "seed": 9, "format": "json"}"#).unwrap();
        let opts = GlobalOpts {
            config: Some(path.clone()),
            strands: Some(4),
            ..GlobalOpts::default()
        };
        let s = Settings::resolve(&opts).unwrap();
        assert_eq!(s.space().unwrap(), (GroupKind::FlatVirtual, 4));
        assert_eq!(s.seed, 9);
        assert!(s.json());
        assert_eq!(s.limits, Limits::default());

        std::fs::write(&path, r#"{"colour": "red"}"#).unwrap();
        assert_eq!(Settings::resolve(&opts).unwrap_err().code, 1);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn missing_space_is_reported() {
        let s = Settings::resolve(&GlobalOpts::default()).unwrap();
        assert!(s.space().unwrap_err().message.contains("--group"));
        assert_eq!(s.seed, 0);
    }
}
