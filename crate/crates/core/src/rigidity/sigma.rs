//! The set of terminal simplices reachable by ε-perturbations.

use std::collections::{BTreeMap, BTreeSet};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::order::{realizable_orders, realizable_prefixes, OrderRules, SimplexOrder};
use crate::persistence::reduction::{axpy, cancel_scale, pivot, Column};
use crate::persistence::{class_lifespan, reduce, Chain, ClassLifespan, FieldSpec};
use crate::rational::{half, int, Rational};
use crate::simplex::Simplex;

/// Knobs for [`sigma_epsilon`].
#[derive(Clone, Debug)]
pub struct SigmaOptions {
    pub field: FieldSpec,
    /// Maximum number of orders (or pruned order families) examined.
    pub cap: usize,
    /// Worker threads; `1` runs on the calling thread.
    pub threads: usize,
    /// Reduce every realizable order separately and keep all of them,
    /// instead of pruning once the terminal simplex is known.
    pub exhaustive: bool,
}

impl Default for SigmaOptions {
    fn default() -> Self {
        SigmaOptions {
            field: FieldSpec::default(),
            cap: 1_000_000,
            threads: 1,
            exhaustive: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaResult {
    pub epsilon: Rational,
    /// Lifespan of the class under the unperturbed filtration.
    pub lifespan: ClassLifespan,
    /// Whether `ε ≤ (b − a)/2`.
    pub in_domain: bool,
    /// The members, in canonical simplex order.
    pub terminal_simplices: Vec<Simplex>,
    /// First realizable order (in enumeration order) producing each member.
    pub witnesses: BTreeMap<Simplex, SimplexOrder>,
    /// Complete orders examined, counting a pruned family as one.
    pub orders_examined: usize,
    /// Every realizable order with its terminal simplex; exhaustive mode only.
    pub all_orders: Vec<(SimplexOrder, Simplex)>,
}

impl SigmaResult {
    pub fn len(&self) -> usize {
        self.terminal_simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terminal_simplices.is_empty()
    }

    pub fn is_rigid(&self) -> bool {
        self.terminal_simplices.len() == 1
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.witnesses.contains_key(s)
    }
}

/// Lifespan of `alpha` under `f`, failing for classes that never die.
pub(crate) fn finite_lifespan(
    f: &Filtration,
    alpha: &Chain,
    field: FieldSpec,
) -> Result<ClassLifespan> {
    let r = reduce(f.complex_arc(), &f.order(), field)?;
    let life = class_lifespan(&r, f, alpha)?;
    if !life.b.is_finite() {
        return Err(Error::InfiniteTerminationScale);
    }
    Ok(life)
}

/// Upper end `(b − a)/2` of the domain of `ε` for a class.
pub fn domain_upper(life: &ClassLifespan) -> Rational {
    half(&(life.b.finite().expect("finite lifespan") - &life.a))
}

/// Σ_ε: every simplex that terminates `[α]` under some injective `g` with
/// `‖f − g‖∞ ≤ ε`, each with a witness order.
///
/// Any `ε > 0` is accepted; `in_domain` records whether it lies in the range
/// where the class is guaranteed to survive the perturbation.
pub fn sigma_epsilon(
    f: &Filtration,
    alpha: &Chain,
    epsilon: &Rational,
    opts: &SigmaOptions,
) -> Result<SigmaResult> {
    let life = finite_lifespan(f, alpha, opts.field)?;
    let upper = domain_upper(&life);
    if *epsilon <= int(0) {
        return Err(Error::EpsilonOutOfDomain {
            epsilon: crate::rational::fmt_rational(epsilon),
            upper: crate::rational::fmt_rational(&upper),
        });
    }
    let in_domain = *epsilon <= upper;
    let mut out = SigmaResult {
        epsilon: epsilon.clone(),
        lifespan: life,
        in_domain,
        terminal_simplices: Vec::new(),
        witnesses: BTreeMap::new(),
        orders_examined: 0,
        all_orders: Vec::new(),
    };
    if opts.exhaustive {
        exhaustive(f, alpha, epsilon, opts, &mut out)?;
    } else if opts.threads > 1 {
        pruned_parallel(f, alpha, epsilon, opts, &mut out)?;
    } else {
        let mut search = Search::new(f, alpha, epsilon, opts.field)?;
        let part = search.run(&[], opts.cap)?;
        out.orders_examined = part.leaves;
        out.witnesses = part.witnesses;
    }
    out.terminal_simplices = out.witnesses.keys().cloned().collect();
    Ok(out)
}

fn exhaustive(
    f: &Filtration,
    alpha: &Chain,
    epsilon: &Rational,
    opts: &SigmaOptions,
    out: &mut SigmaResult,
) -> Result<()> {
    for order in realizable_orders(f, epsilon, opts.cap)? {
        let order = order?;
        let r = reduce(f.complex_arc(), &order, opts.field)?;
        let delta = r
            .terminal_simplex(alpha)?
            .ok_or_else(|| Error::NoMatchingBar("class survives in a perturbed order".into()))?;
        out.witnesses
            .entry(delta.clone())
            .or_insert_with(|| order.clone());
        out.all_orders.push((order, delta));
        out.orders_examined += 1;
    }
    Ok(())
}

fn pruned_parallel(
    f: &Filtration,
    alpha: &Chain,
    epsilon: &Rational,
    opts: &SigmaOptions,
    out: &mut SigmaResult,
) -> Result<()> {
    let mut depth = 1;
    let mut prefixes = realizable_prefixes(f, epsilon, depth)?;
    while prefixes.len() < opts.threads * 4 && depth < f.len() {
        depth += 1;
        prefixes = realizable_prefixes(f, epsilon, depth)?;
    }
    let chunk = prefixes.len().div_ceil(opts.threads).max(1);
    let results: Vec<Result<Vec<Partial>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = prefixes
            .chunks(chunk)
            .map(|group| {
                scope.spawn(move || {
                    let mut search = Search::new(f, alpha, epsilon, opts.field)?;
                    group
                        .iter()
                        .map(|p| search.run(p, opts.cap))
                        .collect::<Result<Vec<_>>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    // A family pruned inside its prefix is shared by several prefixes; count
    // it once, as the sequential search does.
    let mut seen_early: BTreeSet<Vec<usize>> = BTreeSet::new();
    for group in results {
        for part in group? {
            if let Some(key) = part.early {
                if !seen_early.insert(key) {
                    continue;
                }
            }
            out.orders_examined += part.leaves;
            if out.orders_examined > opts.cap {
                return Err(Error::EnumerationCapExceeded(opts.cap));
            }
            for (s, w) in part.witnesses {
                out.witnesses.entry(s).or_insert(w);
            }
        }
    }
    Ok(())
}

/// Result of searching one prefix subtree.
struct Partial {
    leaves: usize,
    witnesses: BTreeMap<Simplex, SimplexOrder>,
    /// Set when the class already died inside the prefix: the prefix up to
    /// and including the terminal simplex.
    early: Option<Vec<usize>>,
}

#[derive(Clone)]
enum AlphaState {
    /// Number of simplices of α still to be placed.
    Pending(usize),
    /// α reduced so far, with an unowned pivot.
    Live(Column),
    Dead,
}

/// Depth-first search over realizable orders that reduces the boundary
/// matrix incrementally and stops descending as soon as the class dies.
struct Search<'a> {
    f: &'a Filtration,
    rules: OrderRules,
    field: FieldSpec,
    signed_facets: Vec<Vec<(usize, u32)>>,
    alpha_coef: Vec<Option<u32>>,
    alpha_support: Vec<usize>,
    placed: FixedBitSet,
    seq: Vec<usize>,
    pos: Vec<usize>,
    columns: Vec<Column>,
    owner: Vec<Option<usize>>,
    alpha: Vec<AlphaState>,
}

impl<'a> Search<'a> {
    fn new(f: &'a Filtration, alpha: &Chain, epsilon: &Rational, field: FieldSpec) -> Result<Self> {
        let complex = f.complex();
        let n = f.len();
        let signed_facets = (0..n)
            .map(|i| {
                complex
                    .simplex(i)
                    .facets()
                    .iter()
                    .enumerate()
                    .map(|(k, face)| (complex.index_of(face).expect("closed"), field.sign(k)))
                    .collect()
            })
            .collect();
        let mut alpha_coef = vec![None; n];
        let mut alpha_support = Vec::new();
        for (s, &c) in alpha.terms() {
            let i = complex.require(s)?;
            alpha_coef[i] = Some(c);
            alpha_support.push(i);
        }
        Ok(Search {
            f,
            rules: OrderRules::new(f, epsilon),
            field,
            signed_facets,
            alpha_coef,
            alpha: vec![AlphaState::Pending(alpha_support.len())],
            alpha_support,
            placed: FixedBitSet::with_capacity(n),
            seq: Vec::with_capacity(n),
            pos: vec![usize::MAX; n],
            columns: Vec::with_capacity(n),
            owner: vec![None; n],
        })
    }

    fn reduce_pivot(&self, col: &mut Column) {
        while let Some((row, coef)) = pivot(col) {
            let Some(k) = self.owner[row] else { break };
            let (_, kc) = pivot(&self.columns[k]).expect("owner columns are nonzero");
            axpy(
                col,
                &self.columns[k],
                cancel_scale(coef, kc, self.field),
                self.field,
            );
        }
    }

    /// Places `c` next; returns whether the class dies at `c`.
    fn push(&mut self, c: usize) -> bool {
        let j = self.seq.len();
        self.pos[c] = j;
        self.seq.push(c);
        self.placed.insert(c);
        let mut col: Column = self.signed_facets[c]
            .iter()
            .map(|&(i, s)| (self.pos[i], s))
            .collect();
        col.sort_unstable_by_key(|&(r, _)| r);
        self.reduce_pivot(&mut col);
        let new_pivot = pivot(&col).map(|(r, _)| r);
        if let Some(r) = new_pivot {
            self.owner[r] = Some(j);
        }
        self.columns.push(col);

        let state = match self.alpha.last().expect("initial state") {
            AlphaState::Pending(k) => {
                let k = if self.alpha_coef[c].is_some() {
                    k - 1
                } else {
                    *k
                };
                if k > 0 {
                    AlphaState::Pending(k)
                } else {
                    let mut a: Column = self
                        .alpha_support
                        .iter()
                        .map(|&i| (self.pos[i], self.alpha_coef[i].expect("support")))
                        .collect();
                    a.sort_unstable_by_key(|&(r, _)| r);
                    self.reduce_pivot(&mut a);
                    if a.is_empty() {
                        AlphaState::Dead
                    } else {
                        AlphaState::Live(a)
                    }
                }
            }
            AlphaState::Live(a) => {
                if new_pivot.is_some() && pivot(a).map(|(r, _)| r) == new_pivot {
                    let mut a = a.clone();
                    self.reduce_pivot(&mut a);
                    if a.is_empty() {
                        AlphaState::Dead
                    } else {
                        AlphaState::Live(a)
                    }
                } else {
                    AlphaState::Live(a.clone())
                }
            }
            AlphaState::Dead => unreachable!("dead branches are not extended"),
        };
        let dead = matches!(state, AlphaState::Dead);
        self.alpha.push(state);
        dead
    }

    fn pop(&mut self) {
        let c = self.seq.pop().expect("nonempty");
        let j = self.seq.len();
        self.placed.set(c, false);
        self.pos[c] = usize::MAX;
        if let Some((r, _)) = pivot(&self.columns.pop().expect("nonempty")) {
            self.owner[r] = None;
        }
        debug_assert!(self.owner.iter().all(|o| o.is_none_or(|k| k < j)));
        self.alpha.pop();
    }

    fn reset(&mut self) {
        while !self.seq.is_empty() {
            self.pop();
        }
    }

    /// The first order of the current subtree.
    fn witness(&self) -> SimplexOrder {
        let mut seq = self.seq.clone();
        self.rules.complete_greedily(&self.placed, &mut seq);
        SimplexOrder::from_indices_unchecked(seq)
    }

    fn record(&self, part: &mut Partial, cap: usize) -> Result<()> {
        part.leaves += 1;
        if part.leaves > cap {
            return Err(Error::EnumerationCapExceeded(cap));
        }
        let delta = self
            .f
            .complex()
            .simplex(*self.seq.last().expect("nonempty"))
            .clone();
        part.witnesses
            .entry(delta)
            .or_insert_with(|| self.witness());
        Ok(())
    }

    /// Searches every realizable order beginning with `prefix`.
    fn run(&mut self, prefix: &[usize], cap: usize) -> Result<Partial> {
        self.reset();
        let mut part = Partial {
            leaves: 0,
            witnesses: BTreeMap::new(),
            early: None,
        };
        for &c in prefix {
            if !self.rules.can_place(&self.placed, c) {
                return Ok(part);
            }
            if self.push(c) {
                self.record(&mut part, cap)?;
                part.early = Some(self.seq.clone());
                return Ok(part);
            }
        }
        let floor = self.seq.len();
        let n = self.rules.len();
        let mut cursors = vec![0usize];
        loop {
            let depth = cursors.len() - 1;
            let next = if self.seq.len() < n {
                self.rules.next_candidate(&self.placed, cursors[depth])
            } else {
                None
            };
            match next {
                Some(k) => {
                    cursors[depth] = k + 1;
                    if self.push(self.rules.by_value[k]) {
                        self.record(&mut part, cap)?;
                        self.pop();
                    } else {
                        cursors.push(0);
                    }
                }
                None => {
                    if self.seq.len() <= floor {
                        return Ok(part);
                    }
                    self.pop();
                    cursors.pop();
                }
            }
        }
    }
}
