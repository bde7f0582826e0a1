//! Left-to-right column reduction of the boundary matrix over `Z/p`.

use std::sync::Arc;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::order::SimplexOrder;
use crate::persistence::chain::Chain;
use crate::persistence::field::FieldSpec;
use crate::simplex::Simplex;

/// Sparse column: `(row position, nonzero coefficient)`, rows ascending.
pub(crate) type Column = Vec<(usize, u32)>;

#[inline]
pub(crate) fn pivot(col: &Column) -> Option<(usize, u32)> {
    col.last().copied()
}

/// `target += scale * source`.
pub(crate) fn axpy(target: &mut Column, source: &Column, scale: u32, field: FieldSpec) {
    let mut out = Vec::with_capacity(target.len() + source.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < source.len() {
        match (target.get(i), source.get(j)) {
            (Some(&(r, a)), Some(&(s, b))) if r == s => {
                let c = field.add(a, field.mul(scale, b));
                if c != 0 {
                    out.push((r, c));
                }
                i += 1;
                j += 1;
            }
            (Some(&(r, a)), Some(&(s, _))) if r < s => {
                out.push((r, a));
                i += 1;
            }
            (Some(&(r, a)), None) => {
                out.push((r, a));
                i += 1;
            }
            (_, Some(&(s, b))) => {
                out.push((s, field.mul(scale, b)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    *target = out;
}

/// Scale that cancels `target`'s pivot coefficient against `source`'s.
#[inline]
pub(crate) fn cancel_scale(target_coef: u32, source_coef: u32, field: FieldSpec) -> u32 {
    field.neg(field.mul(target_coef, field.inv(source_coef)))
}

/// Whether a simplex creates or kills a class in the filtration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimplexRole {
    Birth,
    Terminal,
}

/// Reduced boundary matrix for one simplex order.
#[derive(Clone, Debug)]
pub struct ReducedFiltration {
    complex: Arc<SimplicialComplex>,
    order: SimplexOrder,
    positions: Vec<usize>,
    field: FieldSpec,
    columns: Vec<Column>,
    /// `owner[r]` = position of the column whose pivot is row `r`.
    owner: Vec<Option<usize>>,
}

/// Reduces the boundary matrix of `complex` with columns arranged by `order`.
pub fn reduce(
    complex: &Arc<SimplicialComplex>,
    order: &SimplexOrder,
    field: FieldSpec,
) -> Result<ReducedFiltration> {
    if order.len() != complex.len() {
        return Err(Error::NotAPermutation(format!(
            "order has {} entries, complex has {}",
            order.len(),
            complex.len()
        )));
    }
    order.check_linear_extension(complex)?;
    let positions = order.positions();
    let n = complex.len();
    let mut columns: Vec<Column> = Vec::with_capacity(n);
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (j, &s) in order.indices().iter().enumerate() {
        let mut col = boundary_column(complex, &positions, s, field);
        while let Some((row, coef)) = pivot(&col) {
            match owner[row] {
                Some(k) => {
                    let (_, kc) = pivot(&columns[k]).expect("owner columns are nonzero");
                    let scale = cancel_scale(coef, kc, field);
                    axpy(&mut col, &columns[k], scale, field);
                }
                None => {
                    owner[row] = Some(j);
                    break;
                }
            }
        }
        columns.push(col);
    }
    Ok(ReducedFiltration {
        complex: complex.clone(),
        order: order.clone(),
        positions,
        field,
        columns,
        owner,
    })
}

pub(crate) fn boundary_column(
    complex: &SimplicialComplex,
    positions: &[usize],
    simplex: usize,
    field: FieldSpec,
) -> Column {
    // facets_of is sorted by index; the signs follow Simplex::facets order.
    let s = complex.simplex(simplex);
    let mut col: Column = s
        .facets()
        .iter()
        .enumerate()
        .map(|(i, face)| {
            (
                positions[complex.index_of(face).expect("closed")],
                field.sign(i),
            )
        })
        .collect();
    col.sort_unstable_by_key(|&(r, _)| r);
    col
}

impl ReducedFiltration {
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn order(&self) -> &SimplexOrder {
        &self.order
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn position_of(&self, index: usize) -> usize {
        self.positions[index]
    }

    pub fn simplex_at(&self, position: usize) -> &Simplex {
        self.complex.simplex(self.order.indices()[position])
    }

    fn to_chain(&self, col: &Column, dim: usize) -> Chain {
        Chain::from_terms(
            self.field,
            col.iter()
                .map(|&(r, c)| (self.simplex_at(r).clone(), c as i64)),
        )
        .map(|c| if c.is_zero() { Chain::zero(dim) } else { c })
        .expect("reduced columns are homogeneous")
    }

    /// Reduced boundary column of `sigma`, as a chain.
    pub fn reduced_column(&self, sigma: &Simplex) -> Result<Chain> {
        let i = self.complex.require(sigma)?;
        Ok(self.to_chain(
            &self.columns[self.positions[i]],
            sigma.dim().saturating_sub(1),
        ))
    }

    pub fn classify_simplex(&self, sigma: &Simplex) -> Result<SimplexRole> {
        let i = self.complex.require(sigma)?;
        Ok(self.role_at(self.positions[i]))
    }

    pub fn role_at(&self, position: usize) -> SimplexRole {
        if self.columns[position].is_empty() {
            SimplexRole::Birth
        } else {
            SimplexRole::Terminal
        }
    }

    /// `(birth, death)` position pairs, by increasing death position.
    pub fn pair_positions(&self) -> Vec<(usize, usize)> {
        self.columns
            .iter()
            .enumerate()
            .filter_map(|(j, col)| pivot(col).map(|(r, _)| (r, j)))
            .collect()
    }

    /// Positions of births never killed, increasing.
    pub fn essential_positions(&self) -> Vec<usize> {
        (0..self.columns.len())
            .filter(|&j| self.columns[j].is_empty() && self.owner[j].is_none())
            .collect()
    }

    /// `(birth simplex, death simplex)` pairs, by increasing death position.
    pub fn pairs(&self) -> Vec<(Simplex, Simplex)> {
        self.pair_positions()
            .into_iter()
            .map(|(b, d)| (self.simplex_at(b).clone(), self.simplex_at(d).clone()))
            .collect()
    }

    pub fn essential(&self) -> Vec<Simplex> {
        self.essential_positions()
            .into_iter()
            .map(|p| self.simplex_at(p).clone())
            .collect()
    }

    /// Converts a chain to a position-indexed column, validating that it is
    /// a nonzero cycle of this complex.
    pub(crate) fn cycle_column(&self, alpha: &Chain) -> Result<Column> {
        if alpha.is_zero() {
            return Err(Error::ZeroChain);
        }
        let mut col = Column::with_capacity(alpha.terms().len());
        for (s, &c) in alpha.terms() {
            let i = self.complex.require(s)?;
            col.push((self.positions[i], self.field.reduce(c as i64)));
        }
        if !alpha.is_cycle(self.field) {
            return Err(Error::NotACycle);
        }
        col.retain(|&(_, c)| c != 0);
        if col.is_empty() {
            return Err(Error::ZeroChain);
        }
        col.sort_unstable_by_key(|&(r, _)| r);
        Ok(col)
    }

    /// Position of the simplex at which `col` becomes a boundary, or `None`
    /// if it never does. Expresses `col` in the basis of reduced negative
    /// columns; the latest column used is the terminal one.
    pub(crate) fn termination_position(&self, mut col: Column) -> Option<usize> {
        let mut latest = 0;
        while let Some((row, coef)) = pivot(&col) {
            let k = self.owner[row]?;
            let (_, kc) = pivot(&self.columns[k]).expect("owner columns are nonzero");
            axpy(
                &mut col,
                &self.columns[k],
                cancel_scale(coef, kc, self.field),
                self.field,
            );
            latest = latest.max(k);
        }
        Some(latest)
    }

    /// Lowest pivot reachable by adding boundaries present at position
    /// `level` (inclusive).
    pub(crate) fn lowest_pivot(&self, mut col: Column, level: usize) -> usize {
        loop {
            let (row, coef) = pivot(&col).expect("a class alive at its creation is not a boundary");
            match self.owner[row] {
                Some(k) if k <= level => {
                    let (_, kc) = pivot(&self.columns[k]).expect("nonzero");
                    axpy(
                        &mut col,
                        &self.columns[k],
                        cancel_scale(coef, kc, self.field),
                        self.field,
                    );
                }
                _ => return row,
            }
        }
    }

    /// The simplex terminating the class of the cycle `alpha` in this order.
    pub fn terminal_simplex(&self, alpha: &Chain) -> Result<Option<Simplex>> {
        let col = self.cycle_column(alpha)?;
        Ok(self
            .termination_position(col)
            .map(|p| self.simplex_at(p).clone()))
    }
}
