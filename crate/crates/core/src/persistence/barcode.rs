//! Barcodes with simplex attribution, and lifespans of individual cycles.

use std::fmt;

use crate::error::{Error, Result};
use crate::filtration::Filtration;
use crate::persistence::chain::Chain;
use crate::persistence::reduction::ReducedFiltration;
use crate::rational::{Extended, Rational};
use crate::simplex::Simplex;

/// One interval `[a, b)` of a barcode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bar {
    pub dim: usize,
    pub a: Rational,
    pub b: Extended,
    pub birth_simplex: Simplex,
    pub terminal_simplex: Option<Simplex>,
}

impl Bar {
    pub fn is_finite(&self) -> bool {
        self.b.is_finite()
    }

    /// `b − a`, infinite for essential bars.
    pub fn length(&self) -> Extended {
        self.b.sub(&self.a)
    }
}

impl fmt::Display for Bar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", Extended::Finite(self.a.clone()), self.b)
    }
}

/// The bars of one dimension, sorted by `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Barcode {
    pub dim: usize,
    pub bars: Vec<Bar>,
}

impl Barcode {
    pub fn new(dim: usize, mut bars: Vec<Bar>) -> Self {
        bars.sort_by(|x, y| (&x.a, &x.b).cmp(&(&y.a, &y.b)));
        Barcode { dim, bars }
    }

    pub fn len(&self) -> usize {
        self.bars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    /// Number of bars containing the level `r`.
    pub fn alive_at(&self, r: &Rational) -> usize {
        self.bars
            .iter()
            .filter(|bar| bar.a <= *r && Extended::Finite(r.clone()) < bar.b)
            .count()
    }

    /// Finds the bar with the given endpoints.
    pub fn find(&self, a: &Rational, b: &Extended) -> Option<&Bar> {
        self.bars.iter().find(|bar| bar.a == *a && bar.b == *b)
    }
}

fn check_order(r: &ReducedFiltration, f: &Filtration) -> Result<()> {
    if r.complex() != f.complex() {
        return Err(Error::ComplexMismatch);
    }
    if r.order() != &f.order() {
        return Err(Error::OrderMismatch);
    }
    Ok(())
}

/// Dimension-`n` barcode of `f`, read off a reduction in the order of `f`.
pub fn barcode(r: &ReducedFiltration, f: &Filtration, n: usize) -> Result<Barcode> {
    check_order(r, f)?;
    if n > f.complex().max_dim() {
        return Err(Error::DimensionOutOfRange(n));
    }
    let value = |p: usize| f.value(r.simplex_at(p)).expect("same complex").clone();
    let mut bars = Vec::new();
    for (birth, death) in r.pair_positions() {
        let s = r.simplex_at(birth);
        if s.dim() == n {
            bars.push(Bar {
                dim: n,
                a: value(birth),
                b: Extended::Finite(value(death)),
                birth_simplex: s.clone(),
                terminal_simplex: Some(r.simplex_at(death).clone()),
            });
        }
    }
    for p in r.essential_positions() {
        let s = r.simplex_at(p);
        if s.dim() == n {
            bars.push(Bar {
                dim: n,
                a: value(p),
                b: Extended::Infinite,
                birth_simplex: s.clone(),
                terminal_simplex: None,
            });
        }
    }
    Ok(Barcode::new(n, bars))
}

/// Barcodes of every dimension `0..=max_dim`.
pub fn barcodes(r: &ReducedFiltration, f: &Filtration) -> Result<Vec<Barcode>> {
    (0..=f.complex().max_dim())
        .map(|n| barcode(r, f, n))
        .collect()
}

/// Birth, termination scale and terminal simplex of the class of a cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassLifespan {
    pub cycle: Chain,
    pub a: Rational,
    pub b: Extended,
    pub terminal_simplex: Option<Simplex>,
}

/// Lifespan of `[α]` in the filtration `f`; `r` must be a reduction in the
/// order of `f`.
pub fn class_lifespan(
    r: &ReducedFiltration,
    f: &Filtration,
    alpha: &Chain,
) -> Result<ClassLifespan> {
    check_order(r, f)?;
    let col = r.cycle_column(alpha)?;
    let level = col.last().expect("nonzero").0;
    let low = r.lowest_pivot(col.clone(), level);
    let a = f.value(r.simplex_at(low))?.clone();
    let (b, terminal_simplex) = match r.termination_position(col) {
        Some(p) => {
            let s = r.simplex_at(p).clone();
            (Extended::Finite(f.value(&s)?.clone()), Some(s))
        }
        None => (Extended::Infinite, None),
    };
    Ok(ClassLifespan {
        cycle: alpha.clone(),
        a,
        b,
        terminal_simplex,
    })
}
