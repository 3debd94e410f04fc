use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::args::Format;

/// What a subcommand produced: the JSON report, a text rendering and, for
/// tables, CSV. `pass` decides the exit status.
#[derive(Debug)]
pub struct Outcome {
    pub pass: bool,
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
    pub default_format: Format,
}

impl Outcome {
    pub fn render(&self, format: Option<Format>) -> Result<String, CliError> {
        match format.unwrap_or(self.default_format) {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("reports serialize");
                s.push('\n');
                Ok(s)
            }
            Format::Text => Ok(self.text.clone()),
            Format::Csv => self.csv.clone().ok_or_else(|| CliError::Usage("this subcommand has no csv output".into())),
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io { path: PathBuf, source: std::io::Error },
    Core(weylzeta::Error),
}

impl From<weylzeta::Error> for CliError {
    fn from(e: weylzeta::Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    /// Identity failures are failed verifications (1); everything else is a
    /// usage or input problem (2).
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(weylzeta::Error::Identity(_)) => 1,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Core(weylzeta::Error::Identity(_)) => "identity",
            CliError::Core(weylzeta::Error::Representation(_)) => "representation",
            CliError::Core(_) => "input",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "pass": false, "error": self.kind(), "message": self.to_string() });
        if let CliError::Core(weylzeta::Error::Representation(violation)) = self {
            v["violation"] = serde_json::to_value(violation).expect("violations serialize");
        }
        v
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn write_output(out: Option<&Path>, body: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, body).map_err(|source| CliError::Io { path: path.to_path_buf(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io { path: PathBuf::from("<stdout>"), source })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Core(weylzeta::Error::Identity("x".into())).exit_code(), 1);
        assert_eq!(CliError::Core(weylzeta::Error::Parse("x".into())).exit_code(), 2);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
    }

    #[test]
    fn csv_only_where_offered() {
        let o = Outcome { pass: true, json: json!({}), text: "t\n".into(), csv: None, default_format: Format::Text };
        assert_eq!(o.render(None).unwrap(), "t\n");
        assert_eq!(o.render(Some(Format::Json)).unwrap(), "{}\n");
        assert!(o.render(Some(Format::Csv)).is_err());
    }
}
