//! Input files: JSON documents or plain whitespace matrices.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use toricnf_core::{Error as CoreError, Rat, SemigroupPresentation};

use crate::error::{CliError, Result};
use crate::fixture::Check;

/// Environment variable holding the default search bound.
pub const BOUND_VAR: &str = "TORICNF_BOUND";
pub const DEFAULT_BOUND: i64 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum TiebreakName {
    Grevlex,
    Revlex,
}

impl From<TiebreakName> for toricnf_core::Tiebreak {
    fn from(t: TiebreakName) -> Self {
        match t {
            TiebreakName::Grevlex => toricnf_core::Tiebreak::Grevlex,
            TiebreakName::Revlex => toricnf_core::Tiebreak::Revlex,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_bound: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tiebreak: Option<TiebreakName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    #[serde(default)]
    pub name: String,
    /// Each inner array is one generator, a column of `A`.
    pub generators: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub options: Options,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
}

impl InputSpec {
    /// Parses JSON if the text starts with `{`, a whitespace matrix
    /// otherwise. In the matrix format every nonempty line is a generator and
    /// `#` starts a comment.
    pub fn parse(text: &str, name: &str) -> Result<Self> {
        let mut spec = if text.trim_start().starts_with('{') {
            serde_json::from_str::<InputSpec>(text)?
        } else {
            let mut generators = Vec::new();
            for (k, line) in text.lines().enumerate() {
                let line = line.split('#').next().unwrap_or("").trim();
                if line.is_empty() {
                    continue;
                }
                let row = line
                    .split_whitespace()
                    .map(i64::from_str)
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| CliError::Parse(format!("line {}: {e}", k + 1)))?;
                generators.push(row);
            }
            InputSpec { name: String::new(), generators, labels: None, options: Options::default(), checks: Vec::new() }
        };
        if spec.name.is_empty() {
            spec.name = name.to_string();
        }
        Ok(spec)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let (text, name) = if path.as_os_str() == "-" {
            (std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::io("<stdin>", e))?, "stdin".to_string())
        } else {
            let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
            let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            (text, name)
        };
        Self::parse(&text, &name)
    }

    pub fn presentation(&self) -> Result<SemigroupPresentation> {
        let p = SemigroupPresentation::from_i64_columns(&self.generators).map_err(|e| match e {
            CoreError::NotPositive => CliError::from(e),
            e => CliError::Parse(format!("{}: {e}", self.name)),
        })?;
        match &self.labels {
            Some(l) => p.with_labels(l.clone()).map_err(|e| CliError::Parse(format!("{}: labels: {e}", self.name))),
            None => Ok(p),
        }
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    Rat::from_str(s.trim()).map_err(|_| CliError::Parse(format!("not a rational number: {s:?}")))
}

pub fn parse_rats(items: &[String]) -> Result<Vec<Rat>> {
    items.iter().map(|s| parse_rat(s)).collect()
}

/// Splits `1,2/3, 4` or `1 2/3 4`.
pub fn split_list(s: &str) -> Vec<String> {
    s.split(|c: char| c == ',' || c.is_whitespace()).filter(|x| !x.is_empty()).map(str::to_string).collect()
}

pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    split_list(s)
        .iter()
        .map(|x| i64::from_str(x).map_err(|_| CliError::Parse(format!("not an integer: {x:?}"))))
        .collect()
}

/// Resolves a bound: explicit value, then the input file, then
/// [`BOUND_VAR`], then [`DEFAULT_BOUND`].
pub fn resolve_bound(explicit: Option<&str>, from_file: Option<&str>) -> Result<Rat> {
    if let Some(s) = explicit.or(from_file) {
        return parse_rat(s);
    }
    match std::env::var(BOUND_VAR) {
        Ok(s) => parse_rat(&s),
        Err(_) => Ok(Rat::from_integer(DEFAULT_BOUND.into())),
    }
}
