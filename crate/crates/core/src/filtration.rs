use std::collections::HashMap;
use std::sync::Arc;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::order::SimplexOrder;
use crate::rational::{abs_diff, Rational};
use crate::simplex::Simplex;

/// An injective, face-monotone assignment of exact values to a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    complex: Arc<SimplicialComplex>,
    values: Vec<Rational>,
}

/// Checks a value map against `complex`: defined on exactly its simplices,
/// injective and strictly increasing along faces.
pub fn validate_filtration(
    complex: Arc<SimplicialComplex>,
    values: &HashMap<Simplex, Rational>,
) -> Result<Filtration> {
    let mut by_index = Vec::with_capacity(complex.len());
    for s in complex.simplices() {
        match values.get(s) {
            Some(v) => by_index.push(v.clone()),
            None => return Err(Error::MissingValue(s.clone())),
        }
    }
    let mut extra: Vec<&Simplex> = values.keys().filter(|s| !complex.contains(s)).collect();
    extra.sort();
    if let Some(s) = extra.first() {
        return Err(Error::SimplexNotInComplex((*s).clone()));
    }
    Filtration::new(complex, by_index)
}

impl Filtration {
    /// `values[i]` is the value of `complex.simplex(i)`.
    pub fn new(complex: Arc<SimplicialComplex>, values: Vec<Rational>) -> Result<Self> {
        assert_eq!(complex.len(), values.len(), "one value per simplex");
        let mut sorted: Vec<usize> = (0..values.len()).collect();
        sorted.sort_by(|&i, &j| values[i].cmp(&values[j]).then(i.cmp(&j)));
        for w in sorted.windows(2) {
            if values[w[0]] == values[w[1]] {
                let (i, j) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(Error::DuplicateValue(
                    complex.simplex(i).clone(),
                    complex.simplex(j).clone(),
                ));
            }
        }
        for i in 0..complex.len() {
            for &face in complex.facets_of(i) {
                if values[face] > values[i] {
                    return Err(Error::MonotonicityViolation {
                        face: complex.simplex(face).clone(),
                        coface: complex.simplex(i).clone(),
                    });
                }
            }
        }
        Ok(Filtration { complex, values })
    }

    /// Builds from `(simplex, value)` pairs over the closed complex they list.
    pub fn from_pairs(pairs: &[(Simplex, Rational)]) -> Result<Self> {
        let simplices: Vec<Simplex> = pairs.iter().map(|(s, _)| s.clone()).collect();
        let complex = Arc::new(SimplicialComplex::from_closed(&simplices)?);
        let map: HashMap<Simplex, Rational> = pairs.iter().cloned().collect();
        validate_filtration(complex, &map)
    }

    /// Same complex, new values.
    pub fn with_values(&self, values: Vec<Rational>) -> Result<Self> {
        Filtration::new(self.complex.clone(), values)
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn complex_arc(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value_at(&self, index: usize) -> &Rational {
        &self.values[index]
    }

    pub fn value(&self, s: &Simplex) -> Result<&Rational> {
        Ok(&self.values[self.complex.require(s)?])
    }

    /// Simplex indices in increasing value.
    pub fn sorted_indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.values.len()).collect();
        idx.sort_by(|&i, &j| self.values[i].cmp(&self.values[j]));
        idx
    }

    /// The simplex order induced by the values.
    pub fn order(&self) -> SimplexOrder {
        SimplexOrder::from_indices_unchecked(self.sorted_indices())
    }

    /// Smallest gap between two distinct values.
    pub fn injectivity_radius(&self) -> Result<Rational> {
        if self.values.len() < 2 {
            return Err(Error::SingleSimplex);
        }
        let sorted = self.sorted_indices();
        Ok(sorted
            .windows(2)
            .map(|w| &self.values[w[1]] - &self.values[w[0]])
            .min()
            .expect("at least one gap"))
    }

    /// All pairwise absolute differences, with multiplicity, sorted.
    pub fn pairwise_gaps(&self) -> Vec<Rational> {
        let n = self.values.len();
        let mut gaps = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                gaps.push(abs_diff(&self.values[i], &self.values[j]));
            }
        }
        gaps.sort();
        gaps
    }

    /// True iff every pairwise difference is realized by exactly one pair.
    pub fn is_generic(&self) -> bool {
        self.pairwise_gaps().windows(2).all(|w| w[0] != w[1])
    }

    /// `max_σ |f(σ) − g(σ)|`.
    pub fn sup_distance(&self, other: &Filtration) -> Result<Rational> {
        if self.complex.simplices() != other.complex.simplices() {
            return Err(Error::ComplexMismatch);
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| abs_diff(a, b))
            .max()
            .unwrap_or_default())
    }

    pub fn same_complex(&self, other: &Filtration) -> bool {
        Arc::ptr_eq(&self.complex, &other.complex)
            || self.complex.simplices() == other.complex.simplices()
    }
}
