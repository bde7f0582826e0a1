//! Benchmark inputs shared by the criterion benches.

use rigidph::rational::{int, Rational};
use rigidph::{Filtration, Simplex};

/// Full 2-skeleton of the simplex on `n` vertices. Vertices come first, then
/// edges and triangles in lexicographic order, each level valued by its
/// position, so values increase with dimension.
pub fn skeleton2(n: u32) -> Filtration {
    let mut pairs: Vec<(Simplex, Rational)> = Vec::new();
    let mut next = 0i64;
    let mut push = |v: Vec<u32>| {
        pairs.push((Simplex::new(v).unwrap(), int(next)));
        next += 1;
    };
    for a in 0..n {
        push(vec![a]);
    }
    for a in 0..n {
        for b in a + 1..n {
            push(vec![a, b]);
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                push(vec![a, b, c]);
            }
        }
    }
    Filtration::from_pairs(&pairs).unwrap()
}
