//! Formula JSON (`{"num_vars": 4, "clauses": [[0,1,2], ...]}`) and the
//! monotone DIMACS-like text format:
//!
//! ```text
//! c optional comments
//! p mcnf 4 2
//! 1 2 3 0
//! 1 2 4 0
//! ```
//!
//! Variables are 1-based in the text format and 0-based everywhere else.

use std::fmt::Write as _;

use super::PositiveFormula;
use crate::error::{Error, Result};

impl PositiveFormula {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("formula serializes")
    }

    pub fn from_mcnf(text: &str) -> Result<Self> {
        let mut header = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let (["mcnf", v, c] | [v, c]) = parts[..] else {
                    return Err(Error::Parse(format!("bad header `{line}`")));
                };
                let parse = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad count `{t}`")));
                header = Some((parse(v)?, parse(c)?));
                continue;
            }
            if header.is_none() {
                return Err(Error::Parse("clause before header".into()));
            }
            for tok in line.split_whitespace() {
                let lit: i64 = tok.parse().map_err(|_| Error::Parse(format!("bad literal `{tok}`")))?;
                match lit {
                    0 => clauses.push(std::mem::take(&mut current)),
                    l if l < 0 => return Err(Error::Parse(format!("negated literal {l} in monotone formula"))),
                    l => current.push(l as usize - 1),
                }
            }
        }
        let (num_vars, num_clauses) = header.ok_or_else(|| Error::Parse("missing header".into()))?;
        if !current.is_empty() {
            return Err(Error::Parse("last clause not terminated by 0".into()));
        }
        if clauses.len() != num_clauses {
            return Err(Error::LengthMismatch { expected: num_clauses, actual: clauses.len() });
        }
        PositiveFormula::new(num_vars, clauses)
    }

    pub fn to_mcnf(&self) -> String {
        let mut out = format!("p mcnf {} {}\n", self.num_vars(), self.num_clauses());
        for clause in self.clauses() {
            for &x in clause {
                let _ = write!(out, "{} ", x + 1);
            }
            out.push_str("0\n");
        }
        out
    }
}
