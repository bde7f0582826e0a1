//! Small named filtrations used by tests, benches and documentation.
//!
//! Vertex `0` plays `A`, `1` plays `B`, `2` plays `C`.

use crate::filtration::Filtration;
use crate::rational::{int, rat, Rational};
use crate::simplex::Simplex;

fn build(pairs: Vec<(Vec<u32>, Rational)>) -> Filtration {
    let pairs: Vec<(Simplex, Rational)> = pairs
        .into_iter()
        .map(|(v, q)| (Simplex::new(v).expect("canonical"), q))
        .collect();
    Filtration::from_pairs(&pairs).expect("fixture is a valid filtration")
}

/// A=0, B=1, AB=2.
pub fn edge() -> Filtration {
    build(vec![
        (vec![0], int(0)),
        (vec![1], int(1)),
        (vec![0, 1], int(2)),
    ])
}

/// A=0, B=1, C=2, AB=3, BC=4.
pub fn path3() -> Filtration {
    build(vec![
        (vec![0], int(0)),
        (vec![1], int(1)),
        (vec![2], int(2)),
        (vec![0, 1], int(3)),
        (vec![1, 2], int(4)),
    ])
}

/// Generic variant of [`path3`]: A=0, B=1, C=11/5, AB=7/2, BC=49/10.
pub fn path3g() -> Filtration {
    build(vec![
        (vec![0], int(0)),
        (vec![1], int(1)),
        (vec![2], rat(22, 10)),
        (vec![0, 1], rat(35, 10)),
        (vec![1, 2], rat(49, 10)),
    ])
}

/// Hollow triangle in the order A, B, C, AB, BC, AC with values 0..=5.
pub fn tri() -> Filtration {
    cycle_graph(3)
}

/// [`tri`] with the 2-simplex ABC at 6.
pub fn trif() -> Filtration {
    build(vec![
        (vec![0], int(0)),
        (vec![1], int(1)),
        (vec![2], int(2)),
        (vec![0, 1], int(3)),
        (vec![1, 2], int(4)),
        (vec![0, 2], int(5)),
        (vec![0, 1, 2], int(6)),
    ])
}

/// Cycle graph on `m >= 3` vertices with consecutive integer values: the
/// vertices `0..m` first, then the edges `[0,1], [1,2], …, [m-2,m-1]`, and
/// the closing edge `[0,m-1]` last.
pub fn cycle_graph(m: u32) -> Filtration {
    assert!(m >= 3, "a cycle graph needs at least three vertices");
    let mut pairs = Vec::new();
    for v in 0..m {
        pairs.push((vec![v], int(v as i64)));
    }
    let mut next = m as i64;
    for v in 0..m - 1 {
        pairs.push((vec![v, v + 1], int(next)));
        next += 1;
    }
    pairs.push((vec![0, m - 1], int(next)));
    build(pairs)
}
