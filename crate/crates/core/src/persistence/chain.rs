use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::persistence::field::FieldSpec;
use crate::simplex::Simplex;

/// A homogeneous chain with nonzero coefficients in a prime field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    dim: usize,
    terms: BTreeMap<Simplex, u32>,
}

impl Chain {
    pub fn zero(dim: usize) -> Self {
        Chain {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// Collects `(simplex, coefficient)` terms, combining repeats and dropping
    /// zeros. All simplices must share one dimension.
    pub fn from_terms(
        field: FieldSpec,
        terms: impl IntoIterator<Item = (Simplex, i64)>,
    ) -> Result<Self> {
        let mut dim = None;
        let mut map: BTreeMap<Simplex, u32> = BTreeMap::new();
        for (s, c) in terms {
            match dim {
                None => dim = Some(s.dim()),
                Some(d) if d != s.dim() => return Err(Error::MixedDimensions(d, s.dim())),
                _ => {}
            }
            let e = map.entry(s).or_insert(0);
            *e = field.add(*e, field.reduce(c));
        }
        map.retain(|_, c| *c != 0);
        Ok(Chain {
            dim: dim.unwrap_or(0),
            terms: map,
        })
    }

    /// Parses `c1*[v..] + c2*[v..] - [v..]`; the `*` is optional and
    /// coefficients default to 1. Vertex lists are comma or space separated
    /// and must be strictly increasing.
    pub fn parse(literal: &str, field: FieldSpec) -> Result<Self> {
        let bad = |msg: &str| Error::Literal(format!("{msg} in cycle literal {literal:?}"));
        let mut terms = Vec::new();
        let mut rest = literal.trim();
        if rest.is_empty() {
            return Err(bad("empty"));
        }
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = 1i64;
            if let Some(r) = rest.strip_prefix('+') {
                rest = r.trim_start();
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r.trim_start();
            } else if !first {
                return Err(bad("expected '+' or '-'"));
            }
            first = false;
            let digits = rest.chars().take_while(char::is_ascii_digit).count();
            let coeff = if digits > 0 {
                let c: i64 = rest[..digits]
                    .parse()
                    .map_err(|_| bad("coefficient too large"))?;
                rest = rest[digits..].trim_start();
                if let Some(r) = rest.strip_prefix('*') {
                    rest = r.trim_start();
                }
                c
            } else {
                1
            };
            let r = rest.strip_prefix('[').ok_or_else(|| bad("expected '['"))?;
            let close = r.find(']').ok_or_else(|| bad("missing ']'"))?;
            let vertices = r[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| bad("bad vertex")))
                .collect::<Result<Vec<_>>>()?;
            terms.push((Simplex::new(vertices)?, sign * coeff));
            rest = r[close + 1..].trim_start();
        }
        Chain::from_terms(field, terms)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Simplex, u32> {
        &self.terms
    }

    pub fn coefficient(&self, s: &Simplex) -> u32 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    pub fn boundary(&self, field: FieldSpec) -> Chain {
        let mut out: BTreeMap<Simplex, u32> = BTreeMap::new();
        for (s, &c) in &self.terms {
            for (face, fc) in boundary_chain(s, field).terms {
                let e = out.entry(face).or_insert(0);
                *e = field.add(*e, field.mul(c, fc));
            }
        }
        out.retain(|_, c| *c != 0);
        Chain {
            dim: self.dim.saturating_sub(1),
            terms: out,
        }
    }

    pub fn is_cycle(&self, field: FieldSpec) -> bool {
        self.dim == 0 || self.boundary(field).is_zero()
    }
}

/// `Σ (−1)^i · (σ without its i-th vertex)`; zero for a vertex.
pub fn boundary_chain(sigma: &Simplex, field: FieldSpec) -> Chain {
    let terms = sigma
        .facets()
        .into_iter()
        .enumerate()
        .map(|(i, face)| (face, field.sign(i)))
        .filter(|(_, c)| *c != 0)
        .collect();
    Chain {
        dim: sigma.dim().saturating_sub(1),
        terms,
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            match (i, *c) {
                (0, 1) => write!(f, "{s}")?,
                (0, c) => write!(f, "{c}*{s}")?,
                (_, 1) => write!(f, " + {s}")?,
                (_, c) => write!(f, " + {c}*{s}")?,
            }
        }
        Ok(())
    }
}
