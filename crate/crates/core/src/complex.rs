use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::simplex::Simplex;

/// A finite simplicial complex with facet/cofacet adjacency.
///
/// Simplices are stored in canonical order (dimension, then lexicographic);
/// the position in that order is the simplex's *index*, used by every
/// index-based API in the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    simplices: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
    facets: Vec<Vec<usize>>,
    cofacets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Downward closure of `generators`.
    pub fn build(generators: &[Simplex]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        let mut seen = BTreeSet::new();
        let mut all = BTreeSet::new();
        for g in generators {
            if !seen.insert(g.clone()) {
                return Err(Error::DuplicateGenerator(g.clone()));
            }
            all.extend(g.faces());
        }
        Ok(Self::from_sorted(all.into_iter().collect()))
    }

    /// Accepts exactly the listed simplices, which must already be closed
    /// under taking faces.
    pub fn from_closed(simplices: &[Simplex]) -> Result<Self> {
        if simplices.is_empty() {
            return Err(Error::NoGenerators);
        }
        let mut set = BTreeSet::new();
        for s in simplices {
            if !set.insert(s.clone()) {
                return Err(Error::DuplicateSimplex(s.clone()));
            }
        }
        for s in &set {
            if let Some(face) = s.facets().into_iter().find(|f| !set.contains(f)) {
                return Err(Error::NotClosed {
                    simplex: s.clone(),
                    face,
                });
            }
        }
        Ok(Self::from_sorted(set.into_iter().collect()))
    }

    fn from_sorted(simplices: Vec<Simplex>) -> Self {
        let index: HashMap<Simplex, usize> = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let mut facets = vec![Vec::new(); simplices.len()];
        let mut cofacets = vec![Vec::new(); simplices.len()];
        for (i, s) in simplices.iter().enumerate() {
            for face in s.facets() {
                let j = index[&face];
                facets[i].push(j);
                cofacets[j].push(i);
            }
            facets[i].sort_unstable();
        }
        SimplicialComplex {
            simplices,
            index,
            facets,
            cofacets,
        }
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn simplex(&self, index: usize) -> &Simplex {
        &self.simplices[index]
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn require(&self, s: &Simplex) -> Result<usize> {
        self.index_of(s)
            .ok_or_else(|| Error::SimplexNotInComplex(s.clone()))
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    pub fn facets_of(&self, index: usize) -> &[usize] {
        &self.facets[index]
    }

    pub fn cofacets_of(&self, index: usize) -> &[usize] {
        &self.cofacets[index]
    }

    pub fn dim_of(&self, index: usize) -> usize {
        self.simplices[index].dim()
    }

    pub fn max_dim(&self) -> usize {
        self.simplices.last().map_or(0, Simplex::dim)
    }

    /// Indices of simplices having `index` as a face, itself included. Sorted.
    pub fn upper_indices(&self, index: usize) -> Vec<usize> {
        self.closure(index, &self.cofacets)
    }

    /// Indices of faces of `index`, itself included. Sorted.
    pub fn lower_indices(&self, index: usize) -> Vec<usize> {
        self.closure(index, &self.facets)
    }

    fn closure(&self, start: usize, adjacency: &[Vec<usize>]) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            for &j in &adjacency[i] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        (0..self.len()).filter(|&i| seen[i]).collect()
    }

    /// `{τ ∈ K : σ ⊆ τ}`.
    pub fn upper_set(&self, sigma: &Simplex) -> Result<Vec<Simplex>> {
        let i = self.require(sigma)?;
        Ok(self.to_simplices(&self.upper_indices(i)))
    }

    /// `{τ ∈ K : τ ⊆ σ}`.
    pub fn lower_set(&self, sigma: &Simplex) -> Result<Vec<Simplex>> {
        let i = self.require(sigma)?;
        Ok(self.to_simplices(&self.lower_indices(i)))
    }

    pub fn to_simplices(&self, indices: &[usize]) -> Vec<Simplex> {
        indices.iter().map(|&i| self.simplices[i].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;

    #[test]
    fn closure_of_one_edge() {
        let k = SimplicialComplex::build(&[simplex![0, 1]]).unwrap();
        assert_eq!(k.simplices(), &[simplex![0], simplex![1], simplex![0, 1]]);
    }

    #[test]
    fn closure_of_hollow_triangle() {
        let k =
            SimplicialComplex::build(&[simplex![0, 1], simplex![1, 2], simplex![0, 2]]).unwrap();
        assert_eq!(k.len(), 6);
        assert_eq!(k.simplices().iter().filter(|s| s.dim() == 0).count(), 3);
        assert_eq!(k.simplices().iter().filter(|s| s.dim() == 1).count(), 3);
    }

    #[test]
    fn closure_of_full_triangle() {
        let k = SimplicialComplex::build(&[simplex![0, 1, 2]]).unwrap();
        assert_eq!(k.len(), 7);
        assert_eq!(k.max_dim(), 2);
    }

    #[test]
    fn duplicate_generator_rejected() {
        let err = SimplicialComplex::build(&[simplex![0, 1], simplex![0, 1]]).unwrap_err();
        assert_eq!(err, Error::DuplicateGenerator(simplex![0, 1]));
        assert_eq!(
            SimplicialComplex::build(&[]).unwrap_err(),
            Error::NoGenerators
        );
    }

    #[test]
    fn from_closed_detects_missing_faces() {
        let err = SimplicialComplex::from_closed(&[simplex![0], simplex![0, 1]]).unwrap_err();
        assert_eq!(
            err,
            Error::NotClosed {
                simplex: simplex![0, 1],
                face: simplex![1]
            }
        );
    }

    #[test]
    fn adjacency_matches_subset_relation() {
        let k = SimplicialComplex::build(&[simplex![0, 1, 2], simplex![2, 3]]).unwrap();
        for i in 0..k.len() {
            for &j in k.facets_of(i) {
                assert!(k.simplex(j).is_face_of(k.simplex(i)));
                assert_eq!(k.simplex(j).dim() + 1, k.simplex(i).dim());
                assert!(k.cofacets_of(j).contains(&i));
            }
        }
    }

    #[test]
    fn upper_and_lower_sets() {
        let tri =
            SimplicialComplex::build(&[simplex![0, 1], simplex![1, 2], simplex![0, 2]]).unwrap();
        assert_eq!(
            tri.upper_set(&simplex![0, 1]).unwrap(),
            vec![simplex![0, 1]]
        );
        assert_eq!(
            tri.upper_set(&simplex![0]).unwrap(),
            vec![simplex![0], simplex![0, 1], simplex![0, 2]]
        );
        assert_eq!(
            tri.lower_set(&simplex![1, 2]).unwrap(),
            vec![simplex![1], simplex![2], simplex![1, 2]]
        );
        assert_eq!(tri.lower_set(&simplex![0]).unwrap(), vec![simplex![0]]);
        assert_eq!(
            tri.upper_set(&simplex![0, 3]).unwrap_err(),
            Error::SimplexNotInComplex(simplex![0, 3])
        );

        let trif = SimplicialComplex::build(&[simplex![0, 1, 2]]).unwrap();
        assert_eq!(
            trif.upper_set(&simplex![0, 1]).unwrap(),
            vec![simplex![0, 1], simplex![0, 1, 2]]
        );
        assert_eq!(trif.lower_set(&simplex![0, 1, 2]).unwrap().len(), 7);
    }
}
