//! Flat `key=value` config files mirroring the CLI flags.

use std::collections::HashMap;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use anyhow::{bail, Context, Result};

/// Keys accepted in a config file; identical to the CLI flag names.
pub const KEYS: [&str; 10] = [
    "m",
    "n",
    "length",
    "dmin",
    "paths",
    "trials",
    "seed",
    "out",
    "schemes",
    "wavelength",
];

/// Parses `key=value` lines. Blank lines and `#` comments are ignored;
/// unknown keys are rejected; a repeated key keeps its last value.
pub fn parse(text: &str) -> Result<HashMap<String, String>> {
    let mut map = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("line {}: expected key=value, got `{line}`", lineno + 1);
        };
        let key = key.trim();
        let value = value.trim();
        if !KEYS.contains(&key) {
            bail!("line {}: unknown key `{key}`", lineno + 1);
        }
        map.insert(key.to_string(), value.to_string());
    }
    Ok(map)
}

pub fn load(path: &Path) -> Result<HashMap<String, String>> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading config file {}", path.display()))?;
    parse(&text)
}

/// Typed lookup of a config value.
pub fn get<T: FromStr>(map: &HashMap<String, String>, key: &str) -> Result<Option<T>>
where
    T::Err: std::fmt::Display,
{
    match map.get(key) {
        None => Ok(None),
        Some(raw) => match raw.parse::<T>() {
            Ok(value) => Ok(Some(value)),
            Err(err) => bail!("config key `{key}`: {err}"),
        },
    }
}
