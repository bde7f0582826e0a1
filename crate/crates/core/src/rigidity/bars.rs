//! Rigidity of whole bars, and following a bar into a perturbed filtration.

use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::persistence::{barcode, class_lifespan, reduce, Bar, Chain, FieldSpec};
use crate::rational::{abs_diff, fmt_rational, int, Extended, Rational};
use crate::rigidity::certificate::r_bounds;

/// Outcome of checking the bar rigidity hypotheses, condition by condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarRigidityVerdict {
    pub bar: Bar,
    pub epsilon: Rational,
    /// `ε < (b − a)/4`.
    pub short_enough: bool,
    /// Other bars of the same dimension with `a_i ≤ a + 2ε` and
    /// `b_i ≥ b − 2ε`.
    pub separation_violations: Vec<Bar>,
    pub r_u: Extended,
    pub r_l: Extended,
    /// `ε ≤ min{R_u, R_l}/2`.
    pub within_bounds: bool,
    /// The first two conditions: the bar's class ends within `ε` of `b`
    /// under every `ε`-perturbation.
    pub hypotheses_ok: bool,
    /// All three conditions: additionally the terminal simplex is unchanged.
    pub rigid: bool,
}

impl BarRigidityVerdict {
    /// Human-readable reasons for every failed condition.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.short_enough {
            out.push(format!(
                "epsilon {} is not below (b-a)/4",
                fmt_rational(&self.epsilon)
            ));
        }
        for bar in &self.separation_violations {
            out.push(format!("bar {bar} is not separated"));
        }
        if !self.within_bounds {
            out.push(format!(
                "epsilon {} exceeds min(R_u, R_l)/2 with R_u = {}, R_l = {}",
                fmt_rational(&self.epsilon),
                self.r_u,
                self.r_l
            ));
        }
        out
    }
}

/// Looks up the dimension-`n` bar `[a, b)` of `f`.
pub fn find_bar(
    f: &Filtration,
    n: usize,
    a: &Rational,
    b: &Extended,
    field: FieldSpec,
) -> Result<Bar> {
    let r = reduce(f.complex_arc(), &f.order(), field)?;
    barcode(&r, f, n)?
        .find(a, b)
        .cloned()
        .ok_or_else(|| Error::NoSuchBar(fmt_rational(a), b.to_string(), n))
}

pub fn bar_rigidity_check(
    f: &Filtration,
    bar: &Bar,
    epsilon: &Rational,
    field: FieldSpec,
) -> Result<BarRigidityVerdict> {
    if *epsilon <= int(0) {
        return Err(Error::NonPositiveEpsilon);
    }
    let b = bar.b.finite().ok_or(Error::InfiniteBar)?;
    let r = reduce(f.complex_arc(), &f.order(), field)?;
    let bars = barcode(&r, f, bar.dim)?;
    if !bars.bars.contains(bar) {
        return Err(Error::NoSuchBar(
            fmt_rational(&bar.a),
            bar.b.to_string(),
            bar.dim,
        ));
    }
    let two_eps = epsilon * int(2);
    let short_enough = epsilon * int(4) < b - &bar.a;
    let lo = &bar.a + &two_eps;
    let hi = Extended::Finite(b - &two_eps);
    let separation_violations: Vec<Bar> = bars
        .bars
        .iter()
        .filter(|other| *other != bar)
        .filter(|other| other.a <= lo && other.b >= hi)
        .cloned()
        .collect();
    let (r_u, r_l) = r_bounds(f, &r, &bar.b, bar.dim)?;
    let within_bounds = Extended::Finite(two_eps) <= r_u.clone().min(r_l.clone());
    let hypotheses_ok = short_enough && separation_violations.is_empty();
    Ok(BarRigidityVerdict {
        bar: bar.clone(),
        epsilon: epsilon.clone(),
        short_enough,
        separation_violations,
        r_u,
        r_l,
        within_bounds,
        hypotheses_ok,
        rigid: hypotheses_ok && within_bounds,
    })
}

/// Representative cycle of a finite bar: the reduced boundary of its
/// terminal simplex.
pub fn bar_representative(f: &Filtration, bar: &Bar, field: FieldSpec) -> Result<Chain> {
    let terminal = bar.terminal_simplex.as_ref().ok_or(Error::InfiniteBar)?;
    let r = reduce(f.complex_arc(), &f.order(), field)?;
    r.reduced_column(terminal)
}

/// The bar of `g` carrying the class of `bar`, for `g` within `ε` of `f`.
pub fn matched_bar(
    f: &Filtration,
    g: &Filtration,
    bar: &Bar,
    epsilon: &Rational,
    field: FieldSpec,
) -> Result<Bar> {
    let distance = f.sup_distance(g)?;
    if distance > *epsilon {
        return Err(Error::PerturbationTooLarge {
            distance: fmt_rational(&distance),
            epsilon: fmt_rational(epsilon),
        });
    }
    let verdict = bar_rigidity_check(f, bar, epsilon, field)?;
    if !verdict.hypotheses_ok {
        return Err(Error::HypothesesNotSatisfied(verdict.failures().join("; ")));
    }
    let alpha = bar_representative(f, bar, field)?;
    let rg = reduce(g.complex_arc(), &g.order(), field)?;
    let life = class_lifespan(&rg, g, &alpha)?;
    let b = bar.b.finite().expect("checked finite");
    let b_new = life
        .b
        .finite()
        .ok_or_else(|| Error::NoMatchingBar("class no longer terminates".into()))?;
    if abs_diff(b_new, b) > *epsilon {
        return Err(Error::NoMatchingBar(format!(
            "termination moved to {}",
            fmt_rational(b_new)
        )));
    }
    barcode(&rg, g, bar.dim)?
        .bars
        .into_iter()
        .find(|candidate| candidate.b == life.b)
        .ok_or_else(|| Error::NoMatchingBar(format!("no bar ends at {}", fmt_rational(b_new))))
}
