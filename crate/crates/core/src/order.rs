//! Simplex orders, the ε-realizability predicate, witness placement and
//! enumeration of every order an ε-perturbation can induce.

use fixedbitset::FixedBitSet;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::rational::{int, Rational};
use crate::simplex::Simplex;

/// A permutation of the simplex indices of a complex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexOrder {
    seq: Vec<usize>,
}

impl SimplexOrder {
    pub fn from_indices(complex: &SimplicialComplex, seq: Vec<usize>) -> Result<Self> {
        let n = complex.len();
        let mut seen = vec![false; n];
        for &i in &seq {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotAPermutation(format!(
                    "index {i} invalid or repeated"
                )));
            }
        }
        if seq.len() != n {
            return Err(Error::NotAPermutation(format!(
                "{} of {} simplices listed",
                seq.len(),
                n
            )));
        }
        Ok(SimplexOrder { seq })
    }

    pub fn from_simplices(complex: &SimplicialComplex, simplices: &[Simplex]) -> Result<Self> {
        let seq = simplices
            .iter()
            .map(|s| {
                complex
                    .index_of(s)
                    .ok_or_else(|| Error::NotAPermutation(format!("{s} is not in the complex")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(complex, seq)
    }

    pub(crate) fn from_indices_unchecked(seq: Vec<usize>) -> Self {
        SimplexOrder { seq }
    }

    pub fn indices(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// `positions()[i]` is where simplex index `i` sits in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.seq.len()];
        for (p, &i) in self.seq.iter().enumerate() {
            pos[i] = p;
        }
        pos
    }

    pub fn simplices(&self, complex: &SimplicialComplex) -> Vec<Simplex> {
        complex.to_simplices(&self.seq)
    }

    /// Comma-separated simplex list, e.g. `[0],[1],[0,1]`.
    pub fn display(&self, complex: &SimplicialComplex) -> String {
        self.seq
            .iter()
            .map(|&i| complex.simplex(i).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Errors with the first face/coface pair found out of order.
    pub fn check_linear_extension(&self, complex: &SimplicialComplex) -> Result<()> {
        let pos = self.positions();
        for (p, &i) in self.seq.iter().enumerate() {
            for &face in complex.facets_of(i) {
                if pos[face] > p {
                    return Err(Error::OrderNotLinearExtension {
                        face: complex.simplex(face).clone(),
                        coface: complex.simplex(i).clone(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_linear_extension(&self, complex: &SimplicialComplex) -> bool {
        self.check_linear_extension(complex).is_ok()
    }
}

fn check_epsilon(epsilon: &Rational) -> Result<()> {
    if *epsilon < int(0) {
        return Err(Error::NegativeEpsilon);
    }
    Ok(())
}

fn check_same_size(f: &Filtration, order: &SimplexOrder) -> Result<()> {
    if order.len() != f.len() {
        return Err(Error::NotAPermutation(format!(
            "order has {} entries, complex has {}",
            order.len(),
            f.len()
        )));
    }
    SimplexOrder::from_indices(f.complex(), order.seq.clone()).map(|_| ())
}

/// Whether some injective `g` with `‖f − g‖∞ ≤ ε` induces `order`.
///
/// Holds iff `order` is a linear extension and every pair it inverts
/// relative to `f` has value gap strictly below `2ε`.
pub fn is_order_realizable(
    f: &Filtration,
    order: &SimplexOrder,
    epsilon: &Rational,
) -> Result<bool> {
    check_epsilon(epsilon)?;
    check_same_size(f, order)?;
    if !order.is_linear_extension(f.complex()) {
        return Ok(false);
    }
    let two_eps = epsilon * int(2);
    let v = f.values();
    let seq = order.indices();
    for (p, &i) in seq.iter().enumerate() {
        for &j in &seq[p + 1..] {
            if v[i] > v[j] && &v[i] - &v[j] >= two_eps {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Constructs an injective filtration within `ε` of `f` inducing `order`.
///
/// Greedy placement: `g(ω_k) = max(g(ω_{k-1}) + η, f(ω_k) − ε)`, where `η`
/// is the smallest slack `2ε − (f(ω_i) − f(ω_j))` over `i < j`, divided by
/// `n + 1`.
pub fn realize_order(
    f: &Filtration,
    order: &SimplexOrder,
    epsilon: &Rational,
) -> Result<Filtration> {
    if !is_order_realizable(f, order, epsilon)? {
        return Err(Error::NotRealizable);
    }
    let v = f.values();
    let seq = order.indices();
    let n = seq.len();
    let two_eps = epsilon * int(2);
    let mut slack: Option<Rational> = None;
    for (p, &i) in seq.iter().enumerate() {
        for &j in &seq[p + 1..] {
            let s = &two_eps - (&v[i] - &v[j]);
            if slack.as_ref().is_none_or(|m| s < *m) {
                slack = Some(s);
            }
        }
    }
    let eta = slack.map_or_else(|| int(1), |s| s / int(n as i64 + 1));
    let mut g = vec![Rational::default(); n];
    let mut prev: Option<Rational> = None;
    for &i in seq {
        let floor = &v[i] - epsilon;
        let value = match prev {
            Some(p) => std::cmp::max(p + &eta, floor),
            None => floor,
        };
        g[i] = value.clone();
        prev = Some(value);
    }
    f.with_values(g)
}

/// Precomputed placement constraints for one `(f, ε)`.
///
/// `must_precede[c]` holds the facets of `c` and every `r` with
/// `f(c) − f(r) ≥ 2ε`; `c` may be placed next iff all of them are placed.
#[derive(Clone, Debug)]
pub(crate) struct OrderRules {
    pub(crate) by_value: Vec<usize>,
    must_precede: Vec<FixedBitSet>,
}

impl OrderRules {
    pub(crate) fn new(f: &Filtration, epsilon: &Rational) -> Self {
        let n = f.len();
        let two_eps = epsilon * int(2);
        let v = f.values();
        let by_value = f.sorted_indices();
        let must_precede = (0..n)
            .map(|c| {
                let mut set = FixedBitSet::with_capacity(n);
                for &face in f.complex().facets_of(c) {
                    set.insert(face);
                }
                for r in 0..n {
                    if v[c] > v[r] && &v[c] - &v[r] >= two_eps {
                        set.insert(r);
                    }
                }
                set
            })
            .collect();
        OrderRules {
            by_value,
            must_precede,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.by_value.len()
    }

    #[inline]
    pub(crate) fn can_place(&self, placed: &FixedBitSet, c: usize) -> bool {
        !placed.contains(c) && self.must_precede[c].is_subset(placed)
    }

    /// Next placeable simplex scanning `by_value` from `cursor`; returns its
    /// cursor slot.
    pub(crate) fn next_candidate(&self, placed: &FixedBitSet, cursor: usize) -> Option<usize> {
        (cursor..self.by_value.len()).find(|&k| self.can_place(placed, self.by_value[k]))
    }

    /// Lowest-valued completion of a valid prefix; always exists.
    pub(crate) fn complete_greedily(&self, placed: &FixedBitSet, seq: &mut Vec<usize>) {
        let mut placed = placed.clone();
        for &c in &self.by_value {
            if !placed.contains(c) {
                debug_assert!(self.can_place(&placed, c));
                placed.insert(c);
                seq.push(c);
            }
        }
    }

    pub(crate) fn valid_prefix(&self, prefix: &[usize]) -> Option<FixedBitSet> {
        let mut placed = FixedBitSet::with_capacity(self.len());
        for &c in prefix {
            if c >= self.len() || !self.can_place(&placed, c) {
                return None;
            }
            placed.insert(c);
        }
        Some(placed)
    }
}

/// Lazily enumerates every ε-realizable order of `f` in a fixed order: a
/// depth-first search trying remaining simplices by increasing value, so the
/// first order emitted is always the order of `f` itself.
///
/// Yields `Err(EnumerationCapExceeded)` once, instead of the `cap + 1`-th
/// order, and then stops.
pub struct RealizableOrders {
    rules: OrderRules,
    placed: FixedBitSet,
    seq: Vec<usize>,
    cursors: Vec<usize>,
    floor: usize,
    cap: usize,
    emitted: usize,
    done: bool,
}

/// All ε-realizable orders of `f`; see [`RealizableOrders`].
pub fn realizable_orders(
    f: &Filtration,
    epsilon: &Rational,
    cap: usize,
) -> Result<RealizableOrders> {
    RealizableOrders::with_prefix(f, epsilon, cap, &[])
}

impl RealizableOrders {
    /// Restricts the enumeration to orders starting with `prefix`. Distinct
    /// prefixes of equal length give disjoint streams. An invalid prefix
    /// yields nothing.
    pub fn with_prefix(
        f: &Filtration,
        epsilon: &Rational,
        cap: usize,
        prefix: &[usize],
    ) -> Result<Self> {
        check_epsilon(epsilon)?;
        let rules = OrderRules::new(f, epsilon);
        let (placed, done) = match rules.valid_prefix(prefix) {
            Some(p) => (p, false),
            None => (FixedBitSet::with_capacity(rules.len()), true),
        };
        Ok(RealizableOrders {
            placed,
            seq: prefix.to_vec(),
            cursors: vec![0],
            floor: prefix.len(),
            cap,
            emitted: 0,
            done,
            rules,
        })
    }

    pub fn emitted(&self) -> usize {
        self.emitted
    }

    /// Pops the last placed simplex; false once the prefix floor is reached.
    fn backtrack(&mut self) -> bool {
        if self.seq.len() <= self.floor {
            return false;
        }
        let c = self.seq.pop().expect("nonempty");
        self.placed.set(c, false);
        self.cursors.pop();
        true
    }
}

impl Iterator for RealizableOrders {
    type Item = Result<SimplexOrder>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let n = self.rules.len();
        loop {
            if self.seq.len() == n {
                if self.emitted == self.cap {
                    self.done = true;
                    return Some(Err(Error::EnumerationCapExceeded(self.cap)));
                }
                self.emitted += 1;
                let out = SimplexOrder::from_indices_unchecked(self.seq.clone());
                if !self.backtrack() {
                    self.done = true;
                }
                return Some(Ok(out));
            }
            let depth = self.cursors.len() - 1;
            match self.rules.next_candidate(&self.placed, self.cursors[depth]) {
                Some(k) => {
                    self.cursors[depth] = k + 1;
                    let c = self.rules.by_value[k];
                    self.placed.insert(c);
                    self.seq.push(c);
                    self.cursors.push(0);
                }
                None => {
                    if !self.backtrack() {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

/// Every valid prefix of length `min(depth, n)`, in enumeration order.
/// Their streams partition the full enumeration.
pub fn realizable_prefixes(
    f: &Filtration,
    epsilon: &Rational,
    depth: usize,
) -> Result<Vec<Vec<usize>>> {
    check_epsilon(epsilon)?;
    let rules = OrderRules::new(f, epsilon);
    let depth = depth.min(rules.len());
    let mut out = Vec::new();
    let mut placed = FixedBitSet::with_capacity(rules.len());
    let mut seq = Vec::new();
    fn go(
        rules: &OrderRules,
        depth: usize,
        placed: &mut FixedBitSet,
        seq: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if seq.len() == depth {
            out.push(seq.clone());
            return;
        }
        let mut cursor = 0;
        while let Some(k) = rules.next_candidate(placed, cursor) {
            cursor = k + 1;
            let c = rules.by_value[k];
            placed.insert(c);
            seq.push(c);
            go(rules, depth, placed, seq, out);
            seq.pop();
            placed.set(c, false);
        }
    }
    go(&rules, depth, &mut placed, &mut seq, &mut out);
    Ok(out)
}
