//! Sufficient rigidity radii and the thresholds where Σ_ε can change.

use std::fmt;

use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::persistence::{Chain, FieldSpec, ReducedFiltration, SimplexRole};
use crate::rational::{half, Extended, Rational};
use crate::rigidity::sigma::finite_lifespan;
use crate::simplex::Simplex;

/// The sorted set `{|f(σ) − f(τ)|/2 : σ ≠ τ}`.
pub fn rigidity_thresholds(f: &Filtration) -> Vec<Rational> {
    let mut out: Vec<Rational> = f.pairwise_gaps().iter().map(half).collect();
    out.sort();
    out.dedup();
    out
}

/// Distances from `b` to the nearest `(n+1)`-simplex born above `b` (`R_u`)
/// and to the nearest `(n+1)`-simplex terminating below `b` (`R_l`).
pub fn r_bounds(
    f: &Filtration,
    r: &ReducedFiltration,
    b: &Extended,
    n: usize,
) -> Result<(Extended, Extended)> {
    let b = b.finite().ok_or(Error::InfiniteTerminationScale)?;
    let mut r_u = Extended::Infinite;
    let mut r_l = Extended::Infinite;
    for (i, s) in f.complex().simplices().iter().enumerate() {
        if s.dim() != n + 1 {
            continue;
        }
        let v = f.value_at(i);
        let role = r.role_at(r.position_of(i));
        if role == SimplexRole::Birth && v > b {
            r_u = r_u.min(Extended::Finite(v - b));
        } else if role == SimplexRole::Terminal && v < b {
            r_l = r_l.min(Extended::Finite(b - v));
        }
    }
    Ok((r_u, r_l))
}

/// Which quantity attains the minimum in a rigidity radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Limit {
    Lifespan,
    Ru,
    Rl,
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Limit::Lifespan => "lifespan",
            Limit::Ru => "R_u",
            Limit::Rl => "R_l",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityCertificate {
    pub cycle: Chain,
    pub a: Rational,
    pub b: Rational,
    pub terminal_simplex: Simplex,
    pub r_u: Extended,
    pub r_l: Extended,
    /// `min{b − a, R_u, R_l}/2`; the class is terminally rigid up to and
    /// including this radius.
    pub epsilon_star: Rational,
    pub limiting: Vec<Limit>,
}

/// Radius below which every perturbation keeps the terminal simplex of `[α]`.
pub fn rigidity_radius(
    f: &Filtration,
    alpha: &Chain,
    field: FieldSpec,
) -> Result<RigidityCertificate> {
    let life = finite_lifespan(f, alpha, field)?;
    let r = crate::persistence::reduce(f.complex_arc(), &f.order(), field)?;
    let (r_u, r_l) = r_bounds(f, &r, &life.b, alpha.dim())?;
    let b = life.b.finite().expect("finite").clone();
    let lifespan = Extended::Finite(&b - &life.a);
    let min = lifespan.clone().min(r_u.clone()).min(r_l.clone());
    let limiting = [
        (Limit::Lifespan, &lifespan),
        (Limit::Ru, &r_u),
        (Limit::Rl, &r_l),
    ]
    .into_iter()
    .filter(|(_, v)| **v == min)
    .map(|(l, _)| l)
    .collect();
    Ok(RigidityCertificate {
        cycle: alpha.clone(),
        a: life.a,
        b,
        terminal_simplex: life.terminal_simplex.expect("finite"),
        r_u,
        r_l,
        epsilon_star: half(min.finite().expect("lifespan is finite")),
        limiting,
    })
}
