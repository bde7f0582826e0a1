//! Bottleneck distance between barcodes.

use crate::error::{Error, Result};
use crate::persistence::barcode::Barcode;
use crate::rational::{abs_diff, half, int, Rational};

/// Bottleneck distance between two barcodes. Infinite bars are matched only
/// with each other; finite bars may be left unmatched at the cost of half
/// their length.
pub fn bottleneck_distance(x: &Barcode, y: &Barcode) -> Result<Rational> {
    let mut inf_x: Vec<&Rational> = x
        .bars
        .iter()
        .filter(|b| !b.is_finite())
        .map(|b| &b.a)
        .collect();
    let mut inf_y: Vec<&Rational> = y
        .bars
        .iter()
        .filter(|b| !b.is_finite())
        .map(|b| &b.a)
        .collect();
    if inf_x.len() != inf_y.len() {
        return Err(Error::InfiniteBarMismatch(inf_x.len(), inf_y.len()));
    }
    inf_x.sort();
    inf_y.sort();
    let mut best = int(0);
    for (p, q) in inf_x.iter().zip(&inf_y) {
        best = best.max(abs_diff(p, q));
    }

    let fin = |bc: &Barcode| -> Vec<(Rational, Rational)> {
        bc.bars
            .iter()
            .filter_map(|b| b.b.finite().map(|end| (b.a.clone(), end.clone())))
            .collect()
    };
    let (fx, fy) = (fin(x), fin(y));
    let half_len = |(a, b): &(Rational, Rational)| half(&(b - a));
    let pair_cost = |p: &(Rational, Rational), q: &(Rational, Rational)| {
        abs_diff(&p.0, &q.0).max(abs_diff(&p.1, &q.1))
    };

    let mut candidates = vec![int(0)];
    candidates.extend(fx.iter().map(half_len));
    candidates.extend(fy.iter().map(half_len));
    for p in &fx {
        for q in &fy {
            candidates.push(pair_cost(p, q));
        }
    }
    candidates.sort();
    candidates.dedup();

    let hx: Vec<Rational> = fx.iter().map(half_len).collect();
    let hy: Vec<Rational> = fy.iter().map(half_len).collect();
    let costs: Vec<Vec<Rational>> = fx
        .iter()
        .map(|p| fy.iter().map(|q| pair_cost(p, q)).collect())
        .collect();
    let feasible = |t: &Rational| -> bool {
        // Left: bars of x, then diagonal copies of bars of y.
        // Right: bars of y, then diagonal copies of bars of x.
        let (n, m) = (fx.len(), fy.len());
        let adj: Vec<Vec<usize>> = (0..n + m)
            .map(|i| {
                if i < n {
                    let mut out: Vec<usize> = (0..m).filter(|&j| costs[i][j] <= *t).collect();
                    if hx[i] <= *t {
                        out.push(m + i);
                    }
                    out
                } else {
                    let j = i - n;
                    let mut out = Vec::new();
                    if hy[j] <= *t {
                        out.push(j);
                    }
                    out.extend(m..m + n);
                    out
                }
            })
            .collect();
        perfect_matching(&adj, n + m)
    };
    // The largest candidate always admits the all-diagonal matching.
    let (mut lo, mut hi) = (0, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(&candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(best.max(candidates[lo].clone()))
}

/// Whether the bipartite graph with left adjacency `adj` has a perfect
/// matching onto `right` vertices (Kuhn's augmenting paths).
fn perfect_matching(adj: &[Vec<usize>], right: usize) -> bool {
    fn augment(
        u: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if owner[v].is_none_or(|w| augment(w, adj, seen, owner)) {
                owner[v] = Some(u);
                return true;
            }
        }
        false
    }
    if adj.len() != right {
        return false;
    }
    let mut owner = vec![None; right];
    (0..adj.len()).all(|u| augment(u, adj, &mut vec![false; right], &mut owner))
}
