//! Plain-text filtration files.
//!
//! One simplex per line, `v0 v1 ... vk : value`, vertices ascending, value a
//! decimal or rational literal. `#` starts a comment; blank lines are ignored.
//! The listed simplices must form a closed complex.

use std::path::Path;

use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::rational::{fmt_rational, parse_rational, Rational};
use crate::simplex::Simplex;

pub fn parse_filtration(text: &str) -> Result<Filtration> {
    let mut pairs: Vec<(Simplex, Rational)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse { line, message };
        let (lhs, rhs) = body
            .split_once(':')
            .ok_or_else(|| parse_err("expected `vertices : value`".into()))?;
        let vertices = lhs
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| parse_err(format!("bad vertex `{t}`")))
            })
            .collect::<Result<Vec<u32>>>()?;
        let simplex = Simplex::new(vertices).map_err(|e| parse_err(e.to_string()))?;
        let value = parse_rational(rhs.trim()).map_err(|e| parse_err(e.to_string()))?;
        pairs.push((simplex, value));
    }
    if pairs.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "no simplices".into(),
        });
    }
    Filtration::from_pairs(&pairs)
}

/// Renders `f` in canonical simplex order; [`parse_filtration`] reads it
/// back exactly.
pub fn write_filtration(f: &Filtration) -> String {
    let mut out = String::new();
    for (s, v) in f.complex().simplices().iter().zip(f.values()) {
        let vs: Vec<String> = s.vertices().iter().map(u32::to_string).collect();
        out.push_str(&vs.join(" "));
        out.push_str(" : ");
        out.push_str(&fmt_rational(v));
        out.push('\n');
    }
    out
}

pub fn read_filtration_file(path: impl AsRef<Path>) -> Result<Filtration> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_filtration(&text)
}
