//! Text and JSON rendering of results. Every number is an exact rational.

use serde_json::{json, Value};

use rigidph::rational::fmt_rational;
use rigidph::{Bar, Chain, Extended, Rational, Simplex, SimplexOrder, SimplicialComplex};

/// A report rendered either as text lines or as one JSON object.
pub struct Report {
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

/// Accumulates `key: value` text lines.
#[derive(Default)]
pub struct Lines(String);

impl Lines {
    pub fn kv(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        self.0.push_str(&format!("{key}: {value}\n"));
        self
    }

    pub fn line(&mut self, line: impl std::fmt::Display) -> &mut Self {
        self.0.push_str(&format!("{line}\n"));
        self
    }

    pub fn finish(&mut self) -> String {
        std::mem::take(&mut self.0)
    }
}

pub fn q(x: &Rational) -> String {
    fmt_rational(x)
}

pub fn jq(x: &Rational) -> Value {
    Value::String(fmt_rational(x))
}

pub fn jext(x: &Extended) -> Value {
    Value::String(x.to_string())
}

pub fn jsimplex(s: &Simplex) -> Value {
    json!(s.vertices())
}

pub fn jsimplices(v: &[Simplex]) -> Value {
    Value::Array(v.iter().map(jsimplex).collect())
}

pub fn simplices(v: &[Simplex]) -> String {
    if v.is_empty() {
        return "none".into();
    }
    v.iter()
        .map(Simplex::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn opt_simplex(s: &Option<Simplex>) -> String {
    s.as_ref().map_or_else(|| "none".into(), Simplex::to_string)
}

pub fn jopt_simplex(s: &Option<Simplex>) -> Value {
    s.as_ref().map_or(Value::Null, jsimplex)
}

pub fn order(o: &SimplexOrder, k: &SimplicialComplex) -> String {
    o.display(k)
}

pub fn jorder(o: &SimplexOrder, k: &SimplicialComplex) -> Value {
    jsimplices(&o.simplices(k))
}

pub fn chain(c: &Chain) -> String {
    c.to_string()
}

pub fn bar_text(bar: &Bar) -> String {
    match &bar.terminal_simplex {
        Some(t) => format!("{bar}  birth {}  terminal {t}", bar.birth_simplex),
        None => format!("{bar}  birth {}", bar.birth_simplex),
    }
}

pub fn jbar(bar: &Bar) -> Value {
    json!({
        "dim": bar.dim,
        "a": jq(&bar.a),
        "b": jext(&bar.b),
        "birth_simplex": jsimplex(&bar.birth_simplex),
        "terminal_simplex": jopt_simplex(&bar.terminal_simplex),
    })
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
