use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = u32;

/// An abstract simplex stored as its strictly increasing vertex list.
///
/// Simplices order by dimension first and lexicographically within a
/// dimension, which is the canonical iteration order used everywhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Simplex {
    vertices: Vec<Vertex>,
}

impl Simplex {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptySimplex);
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NonCanonicalSimplex(vertices));
        }
        Ok(Simplex { vertices })
    }

    /// Sorts and deduplicates before validating. Still rejects an empty list.
    pub fn from_unsorted(mut vertices: Vec<Vertex>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex::new(vertices)
    }

    pub fn vertex(v: Vertex) -> Self {
        Simplex { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Codimension-one faces, `i`-th entry omits the `i`-th vertex.
    pub fn facets(&self) -> Vec<Simplex> {
        if self.vertices.len() == 1 {
            return Vec::new();
        }
        (0..self.vertices.len())
            .map(|i| {
                let mut v = self.vertices.clone();
                v.remove(i);
                Simplex { vertices: v }
            })
            .collect()
    }

    /// All nonempty faces including `self`.
    pub fn faces(&self) -> Vec<Simplex> {
        let k = self.vertices.len();
        let mut out = Vec::with_capacity((1usize << k) - 1);
        for mask in 1u64..(1u64 << k) {
            let v: Vec<Vertex> = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.vertices[i])
                .collect();
            out.push(Simplex { vertices: v });
        }
        out.sort();
        out
    }

    /// Whether `self` is a (not necessarily proper) face of `other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.vertices.len() > other.vertices.len() {
            return false;
        }
        let mut it = other.vertices.iter();
        self.vertices.iter().all(|v| it.any(|w| w == v))
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices
            .len()
            .cmp(&other.vertices.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Shorthand for tests and fixtures; panics on non-canonical input.
#[macro_export]
macro_rules! simplex {
    ($($v:expr),+ $(,)?) => {
        $crate::Simplex::new(vec![$($v),+]).expect("canonical simplex")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_canonical() {
        assert_eq!(Simplex::new(vec![]), Err(Error::EmptySimplex));
        assert!(matches!(
            Simplex::new(vec![1, 0]),
            Err(Error::NonCanonicalSimplex(_))
        ));
        assert!(Simplex::new(vec![1, 1]).is_err());
    }

    #[test]
    fn ordering_is_dimension_then_lex() {
        let mut v = vec![simplex![0, 1], simplex![2], simplex![0], simplex![0, 2]];
        v.sort();
        assert_eq!(
            v,
            vec![simplex![0], simplex![2], simplex![0, 1], simplex![0, 2]]
        );
    }

    #[test]
    fn facets_and_faces() {
        let t = simplex![0, 1, 2];
        assert_eq!(
            t.facets(),
            vec![simplex![1, 2], simplex![0, 2], simplex![0, 1]]
        );
        assert_eq!(t.faces().len(), 7);
        assert!(simplex![0, 2].is_face_of(&t));
        assert!(!simplex![0, 3].is_face_of(&t));
        assert!(simplex![0].facets().is_empty());
    }
}
