use serde::de::DeserializeOwned;
use std::path::Path;

use crate::error::CliError;
use mcg_core::Sl2Matrix;

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    Ok(serde_json::from_str(text)?)
}

pub fn matrix(text: &str) -> Result<Sl2Matrix, CliError> {
    Ok(Sl2Matrix::from_json(&serde_json::from_str(text)?)?)
}

/// Splits `name:<n>`.
pub fn family(text: &str) -> Result<(&str, u64), CliError> {
    let (name, n) = text
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("`{text}` must have the form <name>:<n>")))?;
    let n = n.trim().parse().map_err(|_| CliError::Usage(format!("bad number in `{text}`")))?;
    Ok((name.trim(), n))
}

/// Exactly one of the given sources must be present.
pub fn one_of<'a, T>(sources: [(&'a str, Option<T>); 3]) -> Result<(&'a str, T), CliError> {
    let names: Vec<&str> = sources.iter().map(|(n, _)| *n).collect();
    let mut present = sources.into_iter().filter_map(|(n, v)| v.map(|v| (n, v)));
    match (present.next(), present.next()) {
        (Some(x), None) => Ok(x),
        _ => Err(CliError::Usage(format!("give exactly one of --{}", names.join(", --")))),
    }
}
