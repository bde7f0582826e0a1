//! Where and how terminal rigidity first breaks.

use std::fmt;

use crate::error::Result;
use crate::filtration::Filtration;
use crate::persistence::{reduce, Chain, ClassLifespan, SimplexRole};
use crate::rational::{abs_diff, int, midpoint, Rational};
use crate::rigidity::certificate::rigidity_thresholds;
use crate::rigidity::sigma::{domain_upper, finite_lifespan, sigma_epsilon, SigmaOptions};
use crate::simplex::Simplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    /// The partner precedes Δ1 and terminates another class.
    Sequential,
    /// The partner follows Δ1 and creates a class one dimension up.
    Independent,
    Inconclusive,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Sequential => "sequential",
            Classification::Independent => "independent",
            Classification::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BreakingReport {
    pub lifespan: ClassLifespan,
    /// Largest `ε` in the domain with `|Σ_ε| = 1`; `None` if rigid on the
    /// whole domain.
    pub t0: Option<Rational>,
    /// The terminal simplex under `f`, the only member of Σ up to `t0`.
    pub delta1: Simplex,
    /// Where Σ was sampled just above `t0`.
    pub epsilon_above: Option<Rational>,
    /// Σ just above `t0`, without Δ1.
    pub new_terminals: Vec<Simplex>,
    /// Same-dimension simplices valued `f(Δ1) ± 2t0`.
    pub partner_candidates: Vec<Simplex>,
    /// The candidate, when there is exactly one.
    pub partner_prediction: Option<Simplex>,
    pub classification: Option<Classification>,
}

impl BreakingReport {
    /// Whether the predicted partner was observed in Σ just above `t0`.
    pub fn prediction_observed(&self) -> Option<bool> {
        self.partner_prediction
            .as_ref()
            .map(|p| self.new_terminals.contains(p))
    }
}

/// Scans the thresholds in the domain for the first one past which Σ grows,
/// then classifies the break.
pub fn breaking_analysis(
    f: &Filtration,
    alpha: &Chain,
    opts: &SigmaOptions,
) -> Result<BreakingReport> {
    let life = finite_lifespan(f, alpha, opts.field)?;
    let upper = domain_upper(&life);
    let delta1 = life.terminal_simplex.clone().expect("finite");
    let thresholds = rigidity_thresholds(f);
    let mut report = BreakingReport {
        lifespan: life,
        t0: None,
        delta1,
        epsilon_above: None,
        new_terminals: Vec::new(),
        partner_candidates: Vec::new(),
        partner_prediction: None,
        classification: None,
    };
    for (k, t) in thresholds.iter().enumerate() {
        if *t > upper {
            break;
        }
        // Σ is constant strictly between consecutive thresholds.
        let above = match thresholds.get(k + 1) {
            Some(next) => midpoint(t, next),
            None => t + int(1),
        };
        let sigma = sigma_epsilon(f, alpha, &above, opts)?;
        if sigma.len() > 1 {
            report.t0 = Some(t.clone());
            report.epsilon_above = Some(above);
            report.new_terminals = sigma
                .terminal_simplices
                .into_iter()
                .filter(|s| *s != report.delta1)
                .collect();
            classify(f, opts, &mut report)?;
            break;
        }
    }
    Ok(report)
}

fn classify(f: &Filtration, opts: &SigmaOptions, report: &mut BreakingReport) -> Result<()> {
    let t0 = report.t0.as_ref().expect("set");
    let d1 = &report.delta1;
    let v1 = f.value(d1)?;
    let gap = t0 * int(2);
    report.partner_candidates = f
        .complex()
        .simplices()
        .iter()
        .filter(|s| *s != d1 && s.dim() == d1.dim())
        .filter(|s| abs_diff(f.value(s).expect("member"), v1) == gap)
        .cloned()
        .collect();
    let [partner] = report.partner_candidates.as_slice() else {
        report.classification = Some(Classification::Inconclusive);
        return Ok(());
    };
    let r = reduce(f.complex_arc(), &f.order(), opts.field)?;
    let role = r.classify_simplex(partner)?;
    let below = f.value(partner)? < v1;
    report.partner_prediction = Some(partner.clone());
    report.classification = Some(match (below, role) {
        (true, SimplexRole::Terminal) => Classification::Sequential,
        (false, SimplexRole::Birth) => Classification::Independent,
        _ => Classification::Inconclusive,
    });
    Ok(())
}
