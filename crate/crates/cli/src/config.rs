//! `key = value` configuration files. Keys are long flag names of the
//! subcommand (`f`, `g`, `certificate`, `max-B`, ...); `#` starts a comment.
//! Repeating a key repeats the flag.

use std::fmt;

#[derive(Debug)]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "config line {}: {}", self.line, self.message)
    }
}

pub fn parse(text: &str) -> Result<Vec<(String, String)>, ConfigError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(ConfigError {
                line: i + 1,
                message: format!("expected key = value, found {line:?}"),
            });
        };
        let key = key.trim();
        if key.is_empty() || key.contains(char::is_whitespace) {
            return Err(ConfigError {
                line: i + 1,
                message: format!("bad key {key:?}"),
            });
        }
        out.push((key.to_string(), value.trim().to_string()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pairs_and_comments() {
        let c = parse("# census\nf = x\ng=y^2   # square\n\nmax-B = 1000\n").unwrap();
        assert_eq!(
            c,
            vec![
                ("f".into(), "x".into()),
                ("g".into(), "y^2".into()),
                ("max-B".into(), "1000".into())
            ]
        );
        let err = parse("f = x\nnonsense\n").unwrap_err();
        assert_eq!(err.line, 2);
    }
}
