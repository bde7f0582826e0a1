//! Explicit ε-perturbations that reorder chosen simplices of one dimension.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::order::{realize_order, SimplexOrder};
use crate::rational::{fmt_rational, half, int, Rational};
use crate::simplex::Simplex;

fn require_positive(epsilon: &Rational) -> Result<()> {
    if *epsilon <= int(0) {
        return Err(Error::NonPositiveEpsilon);
    }
    Ok(())
}

/// Returns `g` with `‖f − g‖∞ ≤ ε` and `g(σ2) < g(σ1)`, for same-dimension
/// simplices with `f(σ1) < f(σ2) < f(σ1) + 2ε`.
///
/// Every coface of `σ1` (itself included) is raised by `ε'` and every face
/// of `σ2` lowered by `ε'`. `ε'` is the largest candidate of
/// `ε − room·j/(m+2)` (`room = ε − gap/2`, `m` = number of forbidden shift
/// values) that keeps the result injective; some candidate always works
/// because collisions happen only at `ε' = d` or `2ε' = d` for a pairwise
/// value difference `d`.
pub fn switch_pair(
    f: &Filtration,
    sigma1: &Simplex,
    sigma2: &Simplex,
    epsilon: &Rational,
) -> Result<Filtration> {
    require_positive(epsilon)?;
    let k = f.complex();
    let i1 = k.require(sigma1)?;
    let i2 = k.require(sigma2)?;
    if i1 == i2 {
        return Err(Error::SameSimplex(sigma1.clone()));
    }
    if sigma1.dim() != sigma2.dim() {
        return Err(Error::DimensionMismatch(sigma1.clone(), sigma2.clone()));
    }
    let (v1, v2) = (f.value_at(i1), f.value_at(i2));
    if v1 > v2 {
        return Err(Error::BlockNotSorted);
    }
    let gap = v2 - v1;
    if gap >= epsilon * int(2) {
        return Err(Error::PreconditionGapTooLarge {
            gap: fmt_rational(&gap),
        });
    }
    let upper = k.upper_indices(i1);
    let lower = k.lower_indices(i2);
    debug_assert!(upper.iter().all(|u| !lower.contains(u)));

    let forbidden: BTreeSet<Rational> = f
        .pairwise_gaps()
        .into_iter()
        .flat_map(|d| [half(&d), d])
        .collect();
    let room = epsilon - half(&gap);
    let steps = forbidden.len() as i64 + 2;
    for j in 0..steps {
        let shift = epsilon - &room * Rational::new(j.into(), steps.into());
        let mut values = f.values().to_vec();
        for &u in &upper {
            values[u] += &shift;
        }
        for &l in &lower {
            values[l] -= &shift;
        }
        if let Ok(g) = f.with_values(values) {
            return Ok(g);
        }
    }
    unreachable!("one of {steps} candidate shifts avoids every forbidden value")
}

/// Returns `g` with `‖f − g‖∞ ≤ ε` placing `block[perm[0]] < block[perm[1]]
/// < …` for a value-sorted block of same-dimension simplices spanning less
/// than `2ε`.
///
/// The block is spread evenly over `(f(σ_k) − ε, f(σ_1) + ε]` in the
/// requested order; cofaces of raised members move up by the largest raise,
/// faces of lowered members move down by the largest drop. Remaining ties are
/// broken by re-placing the resulting order with [`realize_order`].
pub fn permute_block(
    f: &Filtration,
    block: &[Simplex],
    perm: &[usize],
    epsilon: &Rational,
) -> Result<Filtration> {
    require_positive(epsilon)?;
    let cx = f.complex();
    let idx = block
        .iter()
        .map(|s| cx.require(s))
        .collect::<Result<Vec<_>>>()?;
    let k = idx.len();
    if k == 0 || idx.iter().collect::<BTreeSet<_>>().len() != k {
        return Err(Error::InvalidBlock);
    }
    if let Some(s) = block.iter().find(|s| s.dim() != block[0].dim()) {
        return Err(Error::DimensionMismatch(block[0].clone(), s.clone()));
    }
    if idx.windows(2).any(|w| f.value_at(w[0]) >= f.value_at(w[1])) {
        return Err(Error::BlockNotSorted);
    }
    let mut seen = vec![false; k];
    if perm.len() != k
        || perm
            .iter()
            .any(|&p| p >= k || std::mem::replace(&mut seen[p], true))
    {
        return Err(Error::NotAPermutation(format!(
            "{perm:?} is not a permutation of 0..{k}"
        )));
    }
    let first = f.value_at(idx[0]);
    let last = f.value_at(idx[k - 1]);
    let span = last - first;
    if span >= epsilon * int(2) {
        return Err(Error::BlockSpanTooLarge {
            span: fmt_rational(&span),
        });
    }

    let lo = last - epsilon;
    let width = (first + epsilon) - &lo;
    let step = width / int(k as i64 + 1);
    let mut values = f.values().to_vec();
    let mut raise = int(0);
    let mut drop = int(0);
    let mut raised = Vec::new();
    let mut lowered = Vec::new();
    for (slot, &p) in perm.iter().enumerate() {
        let i = idx[p];
        let target = &lo + &step * int(slot as i64 + 1);
        let delta = &target - f.value_at(i);
        if delta > int(0) {
            raise = raise.max(delta.clone());
            raised.push(i);
        } else if delta < int(0) {
            drop = drop.max(-delta.clone());
            lowered.push(i);
        }
        values[i] = target;
    }
    let in_block = |j: &usize| idx.contains(j);
    let mut up = BTreeSet::new();
    for &i in &raised {
        up.extend(cx.upper_indices(i).into_iter().filter(|j| !in_block(j)));
    }
    let mut down = BTreeSet::new();
    for &i in &lowered {
        down.extend(cx.lower_indices(i).into_iter().filter(|j| !in_block(j)));
    }
    for &j in &up {
        values[j] += &raise;
    }
    for &j in &down {
        values[j] -= &drop;
    }

    match f.with_values(values.clone()) {
        Ok(g) => Ok(g),
        Err(Error::DuplicateValue(..)) => {
            let mut seq: Vec<usize> = (0..values.len()).collect();
            seq.sort_by(|&a, &b| {
                values[a]
                    .cmp(&values[b])
                    .then(f.value_at(a).cmp(f.value_at(b)))
            });
            realize_order(f, &SimplexOrder::from_indices(cx, seq)?, epsilon)
        }
        Err(e) => Err(e),
    }
}
