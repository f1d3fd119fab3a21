//! The `.dg` text format.
//!
//! ```text
//! # comment
//! n 3
//! 0 1
//! 1 2
//! 2 0
//! ```
//!
//! The header `n <N>` comes first, then one arc `<u> <v>` per line. Writers
//! emit arcs in lexicographic order, so `write_dg(parse_dg(s))` is stable.

use thiserror::Error;

use super::{Digraph, GraphError};

#[derive(Debug, Error)]
pub enum DgError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `n <N>` header")]
    MissingHeader,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, msg: impl Into<String>) -> DgError {
    DgError::Syntax {
        line,
        msg: msg.into(),
    }
}

pub fn parse_dg(text: &str) -> Result<Digraph, DgError> {
    let mut n = None;
    let mut arcs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match (n, fields.as_slice()) {
            (None, ["n", count]) => {
                n = Some(count.parse::<usize>().map_err(|e| syntax(line, e.to_string()))?);
            }
            (None, _) => return Err(DgError::MissingHeader),
            (Some(_), [u, v]) => {
                let u = u.parse().map_err(|_| syntax(line, format!("bad vertex `{u}`")))?;
                let v = v.parse().map_err(|_| syntax(line, format!("bad vertex `{v}`")))?;
                arcs.push((u, v));
            }
            (Some(_), _) => return Err(syntax(line, "expected `<u> <v>`")),
        }
    }
    let n = n.ok_or(DgError::MissingHeader)?;
    Ok(Digraph::from_arc_list(n, arcs)?)
}

pub fn write_dg(d: &Digraph) -> String {
    let mut out = format!("n {}\n", d.order());
    for (u, v) in d.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
