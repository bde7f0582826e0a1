//! Cross-checks of the fast algorithms against brute-force oracles.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::Rng;

use common::*;
use rigidph::rational::{half, int, midpoint, rat};
use rigidph::rigidity::SigmaOptions;
use rigidph::{
    barcode, bottleneck_distance, class_lifespan, is_order_realizable, realizable_orders,
    realize_order, reduce, rigidity_thresholds, sigma_epsilon, Chain, Extended, FieldSpec,
    Filtration, Rational, SimplexOrder,
};

fn field(p: u32) -> FieldSpec {
    FieldSpec::new(p).unwrap()
}

/// A few interesting epsilons for `f`: thresholds, points between them and
/// zero.
fn sample_epsilons(f: &Filtration) -> Vec<Rational> {
    let t = rigidity_thresholds(f);
    let mut out = vec![int(0)];
    for w in t.windows(2) {
        out.push(w[0].clone());
        out.push(midpoint(&w[0], &w[1]));
    }
    out.truncate(7);
    out
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn enumeration_matches_permutation_scan(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_filtration(&mut rng, 7);
        for eps in sample_epsilons(&f) {
            let fast: Vec<Vec<usize>> = realizable_orders(&f, &eps, 100_000)
                .unwrap()
                .map(|o| o.unwrap().indices().to_vec())
                .collect();
            let mut sorted = fast.clone();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(sorted.len(), fast.len(), "duplicates emitted");
            prop_assert_eq!(sorted, realizable_by_brute_force(&f, &eps));
            for order in &fast {
                let o = SimplexOrder::from_indices(f.complex(), order.clone()).unwrap();
                prop_assert!(is_order_realizable(&f, &o, &eps).unwrap());
            }
        }
    }

    #[test]
    fn witnesses_are_sound(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_filtration(&mut rng, 9);
        let t = rigidity_thresholds(&f);
        let eps = t[rng.gen_range(0..t.len())].clone();
        for order in realizable_orders(&f, &eps, 2_000).unwrap().map_while(|o| o.ok()) {
            let g = realize_order(&f, &order, &eps).unwrap();
            prop_assert!(f.sup_distance(&g).unwrap() <= eps);
            prop_assert_eq!(g.order(), order);
        }
    }

    #[test]
    fn sampled_perturbations_are_enumerated(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_filtration(&mut rng, 8);
        let t = rigidity_thresholds(&f);
        let eps = t[rng.gen_range(0..t.len().min(4))].clone();
        let all: BTreeSet<SimplexOrder> = realizable_orders(&f, &eps, 100_000)
            .unwrap()
            .map(|o| o.unwrap())
            .collect();
        for _ in 0..10 {
            let g = random_perturbation(&mut rng, &f, &eps);
            prop_assert!(f.sup_distance(&g).unwrap() <= eps);
            prop_assert!(all.contains(&g.order()));
        }
    }

    #[test]
    fn realizability_is_monotone_in_epsilon(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_filtration(&mut rng, 7);
        let seq = random_linear_extension(&mut rng, f.complex());
        let order = SimplexOrder::from_indices(f.complex(), seq).unwrap();
        let eps = sample_epsilons(&f);
        let verdicts: Vec<bool> = eps.iter().map(|e| is_order_realizable(&f, &order, e).unwrap()).collect();
        for w in verdicts.windows(2) {
            prop_assert!(!w[0] || w[1]);
        }
    }

    #[test]
    fn below_half_radius_only_the_identity(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_filtration(&mut rng, 9);
        let rho = f.injectivity_radius().unwrap();
        let eps = half(&rho) * rat(rng.gen_range(0..100), 100);
        let orders: Vec<_> = realizable_orders(&f, &eps, 10).unwrap().collect();
        prop_assert_eq!(orders.len(), 1);
        prop_assert_eq!(orders[0].clone().unwrap(), f.order());
    }

    #[test]
    fn barcodes_match_homology_ranks(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3, 5])) {
        let mut rng = rng(seed);
        let f = random_filtration(&mut rng, 9);
        let fld = field(p);
        let r = reduce(f.complex_arc(), &f.order(), fld).unwrap();
        for n in 0..=f.complex().max_dim() {
            let bars = barcode(&r, &f, n).unwrap();
            for v in f.values() {
                prop_assert_eq!(bars.alive_at(v), betti_at(&f, v, n, fld));
            }
        }
    }

    #[test]
    fn death_cycles_recover_their_bars(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3, 5])) {
        let mut rng = rng(seed);
        let f = random_filtration(&mut rng, 9);
        let fld = field(p);
        let r = reduce(f.complex_arc(), &f.order(), fld).unwrap();
        for (birth, death) in r.pairs() {
            let alpha = r.reduced_column(&death).unwrap();
            let life = class_lifespan(&r, &f, &alpha).unwrap();
            prop_assert_eq!(&life.a, f.value(&birth).unwrap());
            prop_assert_eq!(life.b, Extended::Finite(f.value(&death).unwrap().clone()));
            prop_assert_eq!(life.terminal_simplex, Some(death));
        }
    }

    #[test]
    fn terminal_simplex_matches_rank_oracle(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3, 5])) {
        let mut rng = rng(seed);
        let f = random_filtration(&mut rng, 9);
        let fld = field(p);
        let cycles = death_cycles(&f, fld);
        for _ in 0..5 {
            let seq = random_linear_extension(&mut rng, f.complex());
            let order = SimplexOrder::from_indices(f.complex(), seq.clone()).unwrap();
            let r = reduce(f.complex_arc(), &order, fld).unwrap();
            for alpha in &cycles {
                prop_assert_eq!(r.terminal_simplex(alpha).unwrap(), terminal_by_rank(f.complex(), &seq, alpha, fld));
            }
        }
    }

    #[test]
    fn sigma_matches_brute_force(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_filtration(&mut rng, 7);
        let fld = FieldSpec::default();
        for alpha in death_cycles(&f, fld) {
            for eps in sample_epsilons(&f).into_iter().skip(1) {
                let got = sigma_epsilon(&f, &alpha, &eps, &SigmaOptions::default()).unwrap();
                let expected: BTreeSet<_> = realizable_by_brute_force(&f, &eps)
                    .iter()
                    .map(|o| terminal_by_rank(f.complex(), o, &alpha, fld).unwrap())
                    .collect();
                let got_set: BTreeSet<_> = got.terminal_simplices.iter().cloned().collect();
                prop_assert_eq!(got_set, expected);
                for (s, w) in &got.witnesses {
                    prop_assert!(is_order_realizable(&f, w, &eps).unwrap());
                    prop_assert_eq!(terminal_by_rank(f.complex(), w.indices(), &alpha, fld), Some(s.clone()));
                }
            }
        }
    }

    #[test]
    fn sigma_is_monotone(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_filtration(&mut rng, 8);
        for alpha in death_cycles(&f, FieldSpec::default()) {
            let mut prev: BTreeSet<rigidph::Simplex> = BTreeSet::new();
            for eps in sample_epsilons(&f).into_iter().skip(1) {
                let got = sigma_epsilon(&f, &alpha, &eps, &SigmaOptions::default()).unwrap();
                let set: BTreeSet<_> = got.terminal_simplices.into_iter().collect();
                prop_assert!(prev.is_subset(&set));
                prev = set;
            }
        }
    }

    #[test]
    fn sigma_strategies_agree(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_filtration(&mut rng, 9);
        let t = rigidity_thresholds(&f);
        let eps = t[rng.gen_range(0..t.len())].clone() + rat(1, 1000);
        for alpha in death_cycles(&f, FieldSpec::default()) {
            let base = SigmaOptions { cap: 50_000, ..SigmaOptions::default() };
            let pruned = sigma_epsilon(&f, &alpha, &eps, &base);
            let full = sigma_epsilon(&f, &alpha, &eps, &SigmaOptions { exhaustive: true, ..base.clone() });
            let par = sigma_epsilon(&f, &alpha, &eps, &SigmaOptions { threads: 4, ..base.clone() });
            if let (Ok(pruned), Ok(full), Ok(par)) = (pruned, full, par) {
                prop_assert_eq!(&pruned.witnesses, &full.witnesses);
                prop_assert_eq!(&pruned.witnesses, &par.witnesses);
                prop_assert_eq!(pruned.orders_examined, par.orders_examined);
            }
        }
    }

    #[test]
    fn bottleneck_matches_brute_force(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let bars = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<(Rational, Rational)> {
            (0..rng.gen_range(0..=4))
                .map(|_| {
                    let a = rat(rng.gen_range(0..20), 2);
                    let b = &a + rat(rng.gen_range(1..20), 2);
                    (a, b)
                })
                .collect()
        };
        let x = bars(&mut rng);
        let y = bars(&mut rng);
        let code = |v: &[(Rational, Rational)]| rigidph::Barcode::new(0, v.iter().map(|(a, b)| rigidph::Bar {
            dim: 0,
            a: a.clone(),
            b: Extended::Finite(b.clone()),
            birth_simplex: rigidph::Simplex::new(vec![0]).unwrap(),
            terminal_simplex: Some(rigidph::Simplex::new(vec![0, 1]).unwrap()),
        }).collect());
        prop_assert_eq!(bottleneck_distance(&code(&x), &code(&y)).unwrap(), bottleneck_brute(&x, &y));
    }

    #[test]
    fn upper_and_lower_sets_are_disjoint(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_filtration(&mut rng, 9);
        let k = f.complex();
        for s1 in k.simplices() {
            let up = k.upper_set(s1).unwrap();
            prop_assert!(up.contains(s1) && k.lower_set(s1).unwrap().contains(s1));
            for s2 in k.simplices() {
                if s1 != s2 && s1.dim() == s2.dim() {
                    let low = k.lower_set(s2).unwrap();
                    prop_assert!(up.iter().all(|s| !low.contains(s)));
                }
            }
        }
    }

    #[test]
    fn switch_pair_swaps_within_epsilon(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_filtration(&mut rng, 9);
        let k = f.complex();
        for i in 0..k.len() {
            for j in 0..k.len() {
                let (s1, s2) = (k.simplex(i), k.simplex(j));
                if s1.dim() != s2.dim() || f.value_at(i) >= f.value_at(j) {
                    continue;
                }
                let gap = f.value_at(j) - f.value_at(i);
                let eps = half(&gap) + rat(rng.gen_range(1..10), 10);
                let g = rigidph::switch_pair(&f, s1, s2, &eps).unwrap();
                prop_assert!(f.sup_distance(&g).unwrap() <= eps);
                prop_assert!(g.value_at(j) < g.value_at(i));
            }
        }
    }

    #[test]
    fn permute_block_realizes_the_permutation(seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut rng = rng(seed);
        let f = random_filtration(&mut rng, 9);
        let k = f.complex();
        let d = rng.gen_range(0..=k.max_dim());
        let mut block: Vec<_> = (0..k.len()).filter(|&i| k.dim_of(i) == d).collect();
        block.sort_by(|&a, &b| f.value_at(a).cmp(f.value_at(b)));
        let span = f.value_at(*block.last().unwrap()) - f.value_at(block[0]);
        let eps = half(&span) + rat(1, 7);
        let mut perm: Vec<usize> = (0..block.len()).collect();
        perm.shuffle(&mut rng);
        let simplices: Vec<_> = block.iter().map(|&i| k.simplex(i).clone()).collect();
        let g = rigidph::permute_block(&f, &simplices, &perm, &eps).unwrap();
        prop_assert!(f.sup_distance(&g).unwrap() <= eps);
        for w in perm.windows(2) {
            prop_assert!(g.value_at(block[w[0]]) < g.value_at(block[w[1]]));
        }
    }

    #[test]
    fn stability_of_barcodes(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let f = random_filtration(&mut rng, 9);
        let t = rigidity_thresholds(&f);
        let eps = t[rng.gen_range(0..t.len())].clone();
        let g = random_perturbation(&mut rng, &f, &eps);
        let fld = FieldSpec::default();
        let rf = reduce(f.complex_arc(), &f.order(), fld).unwrap();
        let rg = reduce(g.complex_arc(), &g.order(), fld).unwrap();
        for n in 0..=f.complex().max_dim() {
            let d = bottleneck_distance(&barcode(&rf, &f, n).unwrap(), &barcode(&rg, &g, n).unwrap()).unwrap();
            prop_assert!(d <= eps);
        }
    }
}

#[test]
fn fixture_barcodes_do_not_depend_on_the_field() {
    use rigidph::fixtures::*;
    for f in [
        edge(),
        path3(),
        path3g(),
        tri(),
        trif(),
        cycle_graph(4),
        cycle_graph(5),
    ] {
        let codes: Vec<_> = [2, 3, 5]
            .iter()
            .map(|&p| {
                let r = reduce(f.complex_arc(), &f.order(), field(p)).unwrap();
                rigidph::barcodes(&r, &f).unwrap()
            })
            .collect();
        assert_eq!(codes[0], codes[1]);
        assert_eq!(codes[0], codes[2]);
    }
}

#[test]
fn termination_scale_only_drops_as_the_prefix_grows() {
    // Among orders sharing a prefix, a cycle already dead inside the prefix
    // dies at the same simplex regardless of the rest.
    let mut rng = rng(7);
    for _ in 0..30 {
        let f = random_filtration(&mut rng, 9);
        let fld = FieldSpec::default();
        for alpha in death_cycles(&f, fld) {
            let seq = random_linear_extension(&mut rng, f.complex());
            let Some(dead_at) = terminal_by_rank(f.complex(), &seq, &alpha, fld) else {
                continue;
            };
            let cut = seq
                .iter()
                .position(|&i| f.complex().simplex(i) == &dead_at)
                .unwrap();
            for _ in 0..5 {
                let other = random_linear_extension(&mut rng, f.complex());
                let mut merged: Vec<usize> = seq[..=cut].to_vec();
                merged.extend(other.into_iter().filter(|i| !seq[..=cut].contains(i)));
                let order = SimplexOrder::from_indices(f.complex(), merged).unwrap();
                let r = reduce(f.complex_arc(), &order, fld).unwrap();
                assert_eq!(r.terminal_simplex(&alpha).unwrap(), Some(dead_at.clone()));
            }
        }
    }
}

#[test]
fn chain_parse_rejects_mixed_dimensions() {
    assert!(Chain::parse("[0] + [0,1]", FieldSpec::default()).is_err());
}
