//! Textual descriptions of forbidden families and patterns.

use std::fmt;
use std::path::Path;

use satlab_core::constructions::{family_f, family_f_r, RangeMode};
use satlab_core::{Family, Pattern};

use crate::graph6;

#[derive(Debug)]
pub struct SpecError(pub String);

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for SpecError {}

fn err(msg: impl Into<String>) -> SpecError {
    SpecError(msg.into())
}

fn num(s: &str) -> Result<usize, SpecError> {
    s.parse().map_err(|_| err(format!("expected a number, found {s:?}")))
}

/// Parses `F m`, `Fr m r` or `custom <file>`. `Fr` uses the permissive
/// range check so small cases can be explored.
pub fn parse_family(words: &[String]) -> Result<Family, SpecError> {
    match words {
        [kind, m] if kind == "F" => family_f(num(m)?).map_err(|e| err(e.to_string())),
        [kind, m, r] if kind == "Fr" => {
            family_f_r(num(m)?, num(r)?, RangeMode::Permissive).map_err(|e| err(e.to_string()))
        }
        [kind, path] if kind == "custom" => read_family_file(Path::new(path)),
        _ => Err(err("family must be `F m`, `Fr m r` or `custom <file>`")),
    }
}

/// One graph6 member per non-empty line; `#` starts a comment.
pub fn read_family_file(path: &Path) -> Result<Family, SpecError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| err(format!("cannot read {}: {e}", path.display())))?;
    parse_family_text(&text, &path.display().to_string())
}

pub fn parse_family_text(text: &str, name: &str) -> Result<Family, SpecError> {
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let g = graph6::decode(line).map_err(|e| err(format!("line {}: {e}", i + 1)))?;
        graphs.push(g);
    }
    Family::from_graphs(name, graphs).map_err(|e| err(e.to_string()))
}

/// Exactly one of the three pattern options, if any.
pub fn pattern_from_flags(
    clique: Option<usize>,
    cycle: Option<usize>,
    pattern: Option<&str>,
) -> Result<Option<Pattern>, SpecError> {
    let given = clique.is_some() as u8 + cycle.is_some() as u8 + pattern.is_some() as u8;
    if given > 1 {
        return Err(err("give at most one of --clique, --cycle, --pattern"));
    }
    if let Some(r) = clique {
        return Pattern::clique(r).map(Some).map_err(|e| err(e.to_string()));
    }
    if let Some(r) = cycle {
        return Pattern::cycle(r).map(Some).map_err(|e| err(e.to_string()));
    }
    if let Some(p) = pattern {
        let g = graph6::decode(p).map_err(|e| err(format!("--pattern: {e}")))?;
        return Pattern::general(g).map(Some).map_err(|e| err(e.to_string()));
    }
    Ok(None)
}
