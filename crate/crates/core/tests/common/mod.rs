//! Random instances and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rigidph::rational::{abs_diff, int, rat};
use rigidph::{Chain, FieldSpec, Filtration, Rational, Simplex, SimplexOrder, SimplicialComplex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random closed complex with at most `max` simplices: a few vertices,
/// random edges, and some of the triangles whose edges are all present.
pub fn random_complex(rng: &mut impl Rng, max: usize) -> SimplicialComplex {
    let nv: u32 = rng.gen_range(2..=4);
    let mut simplices: Vec<Simplex> = (0..nv).map(|v| Simplex::new(vec![v]).unwrap()).collect();
    let mut edges: Vec<(u32, u32)> = (0..nv)
        .flat_map(|a| (a + 1..nv).map(move |b| (a, b)))
        .collect();
    edges.shuffle(rng);
    let n_edges = rng.gen_range(1..=edges.len());
    let mut present = Vec::new();
    for &(a, b) in edges.iter().take(n_edges) {
        if simplices.len() >= max {
            break;
        }
        simplices.push(Simplex::new(vec![a, b]).unwrap());
        present.push((a, b));
    }
    for a in 0..nv {
        for b in a + 1..nv {
            for c in b + 1..nv {
                let all = [(a, b), (b, c), (a, c)].iter().all(|e| present.contains(e));
                if all && simplices.len() < max && rng.gen_bool(0.5) {
                    simplices.push(Simplex::new(vec![a, b, c]).unwrap());
                }
            }
        }
    }
    SimplicialComplex::from_closed(&simplices).unwrap()
}

/// A uniformly random choice at each step among simplices whose facets are
/// already placed.
pub fn random_linear_extension(rng: &mut impl Rng, k: &SimplicialComplex) -> Vec<usize> {
    let mut placed = vec![false; k.len()];
    let mut seq = Vec::with_capacity(k.len());
    while seq.len() < k.len() {
        let ready: Vec<usize> = (0..k.len())
            .filter(|&i| !placed[i] && k.facets_of(i).iter().all(|&j| placed[j]))
            .collect();
        let c = *ready.choose(rng).unwrap();
        placed[c] = true;
        seq.push(c);
    }
    seq
}

/// Random injective filtration: a random linear extension with random
/// positive rational gaps.
pub fn random_filtration(rng: &mut impl Rng, max: usize) -> Filtration {
    let k = random_complex(rng, max);
    let seq = random_linear_extension(rng, &k);
    let mut values = vec![int(0); k.len()];
    let mut current = rat(rng.gen_range(-10..=10), 1);
    for &i in &seq {
        let den = *[1i64, 2, 4, 5, 10].choose(rng).unwrap();
        current += rat(rng.gen_range(1..=30), den);
        values[i] = current.clone();
    }
    let pairs: Vec<(Simplex, Rational)> = k.simplices().iter().cloned().zip(values).collect();
    Filtration::from_pairs(&pairs).unwrap()
}

/// A random injective `g` with `‖f − g‖∞ ≤ ε`: rejection sampling on a
/// grid, falling back to a realized random order.
pub fn random_perturbation(rng: &mut impl Rng, f: &Filtration, eps: &Rational) -> Filtration {
    const STEPS: i64 = 97;
    for _ in 0..200 {
        let values: Vec<Rational> = f
            .values()
            .iter()
            .map(|v| v + eps * rat(rng.gen_range(-STEPS..=STEPS), STEPS))
            .collect();
        if let Ok(g) = f.with_values(values) {
            return g;
        }
    }
    let orders: Vec<SimplexOrder> = rigidph::realizable_orders(f, eps, 10_000)
        .unwrap()
        .map_while(|o| o.ok())
        .collect();
    let order = orders.choose(rng).unwrap();
    rigidph::realize_order(f, order, eps).unwrap()
}

// ---------------------------------------------------------------------------
// Dense linear algebra over Z/p.

pub fn rank_mod(mut rows: Vec<Vec<u32>>, field: FieldSpec) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = field.inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let factor = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(factor, y));
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Boundary of `s` as a dense vector over `basis`.
fn boundary_vector(
    s: &Simplex,
    basis: &HashMap<Simplex, usize>,
    len: usize,
    field: FieldSpec,
) -> Vec<u32> {
    let mut v = vec![0; len];
    for (i, face) in s.facets().iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { field.modulus() - 1 };
        v[basis[face]] = field.add(v[basis[face]], sign % field.modulus());
    }
    v
}

/// Rank of the boundary map from the `n`-simplices of `subset` to the
/// `(n-1)`-simplices.
fn boundary_rank(subset: &[&Simplex], n: usize, field: FieldSpec) -> usize {
    if n == 0 {
        return 0;
    }
    let lower: Vec<&Simplex> = subset
        .iter()
        .copied()
        .filter(|s| s.dim() == n - 1)
        .collect();
    let basis: HashMap<Simplex, usize> = lower
        .iter()
        .enumerate()
        .map(|(i, s)| ((*s).clone(), i))
        .collect();
    let rows: Vec<Vec<u32>> = subset
        .iter()
        .filter(|s| s.dim() == n)
        .map(|s| boundary_vector(s, &basis, lower.len(), field))
        .collect();
    if lower.is_empty() {
        return 0;
    }
    rank_mod(rows, field)
}

/// Betti number of the sublevel complex of `f` at `r`.
pub fn betti_at(f: &Filtration, r: &Rational, n: usize, field: FieldSpec) -> usize {
    let subset: Vec<&Simplex> = f
        .complex()
        .simplices()
        .iter()
        .zip(f.values())
        .filter(|(_, v)| *v <= r)
        .map(|(s, _)| s)
        .collect();
    let cn = subset.iter().filter(|s| s.dim() == n).count();
    cn - boundary_rank(&subset, n, field) - boundary_rank(&subset, n + 1, field)
}

/// Terminal simplex of `[α]` in `order` by rank tests: the first prefix
/// whose `(n+1)`-simplices have boundaries spanning `α`.
pub fn terminal_by_rank(
    k: &SimplicialComplex,
    order: &[usize],
    alpha: &Chain,
    field: FieldSpec,
) -> Option<Simplex> {
    let n = alpha.dim();
    let lower: Vec<&Simplex> = k.simplices().iter().filter(|s| s.dim() == n).collect();
    let basis: HashMap<Simplex, usize> = lower
        .iter()
        .enumerate()
        .map(|(i, s)| ((*s).clone(), i))
        .collect();
    let mut alpha_row = vec![0; lower.len()];
    for (s, &c) in alpha.terms() {
        alpha_row[basis[s]] = c;
    }
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &i in order {
        let s = k.simplex(i);
        if s.dim() != n + 1 {
            continue;
        }
        rows.push(boundary_vector(s, &basis, lower.len(), field));
        let r = rank_mod(rows.clone(), field);
        let mut with = rows.clone();
        with.push(alpha_row.clone());
        if rank_mod(with, field) == r {
            return Some(s.clone());
        }
    }
    None
}

/// Every permutation of `0..n` satisfying the realizability predicate,
/// checked pair by pair on the definition.
pub fn realizable_by_brute_force(f: &Filtration, eps: &Rational) -> Vec<Vec<usize>> {
    let n = f.len();
    let k = f.complex();
    let v = f.values();
    let two_eps = eps * int(2);
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let pos: Vec<usize> = {
            let mut pos = vec![0; n];
            for (j, &i) in p.iter().enumerate() {
                pos[i] = j;
            }
            pos
        };
        for i in 0..n {
            for j in 0..n {
                if k.simplex(i).is_face_of(k.simplex(j)) && i != j && pos[i] > pos[j] {
                    return;
                }
                if pos[i] < pos[j] && v[i] > v[j] && &v[i] - &v[j] >= two_eps {
                    return;
                }
            }
        }
        out.push(p.to_vec());
    });
    out.sort();
    out
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// Bottleneck distance by trying every partial matching.
pub fn bottleneck_brute(x: &[(Rational, Rational)], y: &[(Rational, Rational)]) -> Rational {
    fn go(
        i: usize,
        x: &[(Rational, Rational)],
        y: &[(Rational, Rational)],
        used: &mut Vec<bool>,
        worst: Rational,
        best: &mut Option<Rational>,
    ) {
        if i == x.len() {
            let mut w = worst;
            for (j, q) in y.iter().enumerate() {
                if !used[j] {
                    w = w.max((&q.1 - &q.0) / int(2));
                }
            }
            if best.as_ref().is_none_or(|b| w < *b) {
                *best = Some(w);
            }
            return;
        }
        let p = &x[i];
        go(
            i + 1,
            x,
            y,
            used,
            worst.clone().max((&p.1 - &p.0) / int(2)),
            best,
        );
        for j in 0..y.len() {
            if !used[j] {
                used[j] = true;
                let q = &y[j];
                let c = abs_diff(&p.0, &q.0).max(abs_diff(&p.1, &q.1));
                go(i + 1, x, y, used, worst.clone().max(c), best);
                used[j] = false;
            }
        }
    }
    let mut best = None;
    go(0, x, y, &mut vec![false; y.len()], int(0), &mut best);
    best.unwrap()
}

/// Reduced column of every terminal simplex of `f`: one representative
/// cycle per finite bar.
pub fn death_cycles(f: &Filtration, field: FieldSpec) -> Vec<Chain> {
    let r = rigidph::reduce(f.complex_arc(), &f.order(), field).unwrap();
    r.pairs()
        .iter()
        .map(|(_, d)| r.reduced_column(d).unwrap())
        .collect()
}
