mod common;

use std::collections::BTreeSet;

use burning::exact::exact_burning_number;
use burning::graph::validate_schedule;
use burning::ptas::{
    forest_covers, fits, ptas_burning, rounded_multiset, CoverVector, DpOptions, Granularity,
    RadiusClasses, Subscript,
};
use burning::{Graph, RootedForest};
use common::{arb_forest, arb_tree, floyd, INF};
use proptest::prelude::*;

/// Every way of cutting the forest into connected pieces, each piece given
/// the smallest class whose radius reaches its eccentricity-minimizing center.
/// Returns the fit-minimal vectors.
fn partition_oracle(g: &Graph, classes: &RadiusClasses) -> BTreeSet<Vec<u32>> {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let k = classes.class_count();
    let mut all = BTreeSet::new();
    'cuts: for mask in 0u32..1 << edges.len() {
        let kept = edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let sub = Graph::from_edges(n, kept.collect::<Vec<_>>()).unwrap();
        let d = floyd(&sub);
        let mut counts = vec![0u32; k];
        let mut seen = vec![false; n];
        for v in 0..n {
            if seen[v] {
                continue;
            }
            let comp: Vec<usize> = (0..n).filter(|&u| d[v][u] != INF).collect();
            for &u in &comp {
                seen[u] = true;
            }
            let radius = comp
                .iter()
                .map(|&c| comp.iter().map(|&u| d[c][u]).max().unwrap())
                .min()
                .unwrap();
            match (0..k).find(|&j| classes.radius(j) >= radius) {
                Some(j) => counts[j] += 1,
                None => continue 'cuts,
            }
        }
        all.insert(counts);
    }
    let vecs: Vec<CoverVector> = all.into_iter().map(CoverVector::from_counts).collect();
    vecs.iter()
        .filter(|v| !vecs.iter().any(|w| w != *v && w.fits_within(v)))
        .map(|v| v.counts().to_vec())
        .collect()
}

fn dp_vectors(g: &Graph, classes: RadiusClasses, opts: DpOptions) -> BTreeSet<Vec<u32>> {
    let forest = RootedForest::new(g).unwrap();
    let (set, _) = forest_covers(&forest, classes, opts).unwrap();
    set.vectors().map(|v| v.counts().to_vec()).collect()
}

fn exact(g: &Graph) -> usize {
    exact_burning_number(g, g.vertex_count()).unwrap().value
}

fn unpruned() -> DpOptions {
    DpOptions { prune: false, bounded: false, ..Default::default() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn pareto_front_matches_partition_oracle(g in arb_forest(9), a in 1usize..=2, k in 1usize..=4) {
        let classes = RadiusClasses::new(a, k).unwrap();
        let opts = DpOptions { bounded: false, ..Default::default() };
        prop_assert_eq!(dp_vectors(&g, classes, opts), partition_oracle(&g, &classes));
    }

    #[test]
    fn unpruned_traces_are_covers(g in arb_forest(7), a in 1usize..=2, k in 1usize..=3) {
        let classes = RadiusClasses::new(a, k).unwrap();
        let forest = RootedForest::new(&g).unwrap();
        let (set, _) = forest_covers(&forest, classes, unpruned()).unwrap();
        let d = floyd(&g);
        for (v, trace) in set.iter() {
            let balls = trace.balls();
            let mut counts = vec![0u32; k];
            for &(_, class) in &balls {
                counts[class] += 1;
            }
            prop_assert_eq!(&counts[..], v.counts());
            for u in 0..g.vertex_count() {
                prop_assert!(balls.iter().any(|&(c, class)| d[c][u] <= classes.radius(class)));
            }
        }
    }

    #[test]
    fn pruning_does_not_change_the_answer(g in arb_forest(10), a in 1usize..=3) {
        let base = ptas_burning(&g, Granularity::Explicit(a), unpruned()).unwrap();
        for (prune, bounded) in [(true, false), (false, true), (true, true)] {
            let opts = DpOptions { prune, bounded, ..Default::default() };
            let res = ptas_burning(&g, Granularity::Explicit(a), opts).unwrap();
            prop_assert_eq!(res.b_star, base.b_star);
        }
    }

    #[test]
    fn unit_granularity_is_exact(g in arb_forest(12)) {
        let res = ptas_burning(&g, Granularity::Explicit(1), DpOptions::default()).unwrap();
        prop_assert_eq!(res.interval(), (exact(&g), exact(&g)));
        prop_assert!(validate_schedule(&g, &res.schedule).unwrap().is_valid());
    }

    #[test]
    fn coarse_granularity_brackets(g in arb_tree(1, 14), a in 2usize..=4) {
        let res = ptas_burning(&g, Granularity::Explicit(a), DpOptions::default()).unwrap();
        let b = exact(&g);
        prop_assert!(res.b_star <= b && b <= res.upper, "{} <= {} <= {}", res.b_star, b, res.upper);
        prop_assert_eq!(res.schedule.horizon(), res.upper);
        prop_assert!(validate_schedule(&g, &res.schedule).unwrap().is_valid());
    }

    #[test]
    fn shallow_reading_never_undershoots(g in arb_forest(10)) {
        let opts = DpOptions { subscript: Subscript::Shallow, ..Default::default() };
        if let Ok(res) = ptas_burning(&g, Granularity::Explicit(1), opts) {
            prop_assert!(res.b_star >= exact(&g));
            prop_assert!(validate_schedule(&g, &res.schedule).unwrap().is_valid());
        }
    }

    #[test]
    fn fit_is_monotone_in_the_budget(a in 1usize..=3, b in 1usize..=12, counts in proptest::collection::vec(0u32..3, 5)) {
        let classes = RadiusClasses::new(a, 5).unwrap();
        let b = b.min(classes.max_radius() + 1);
        let v = CoverVector::from_counts(counts);
        let small = rounded_multiset(&classes, b - 1).unwrap();
        let large = rounded_multiset(&classes, b).unwrap();
        prop_assert!(small.fits_within(&large));
        if fits(&v, &small).unwrap() {
            prop_assert!(fits(&v, &large).unwrap());
        }
    }
}

#[test]
fn epsilon_choice_on_long_paths() {
    for (n, eps) in [(64, 1.0), (81, 1.5)] {
        let g = Graph::path(n);
        let res = ptas_burning(&g, Granularity::Epsilon(eps), DpOptions::default()).unwrap();
        let b = common::ceil_sqrt(n);
        assert!(res.b_star <= b && b <= res.upper);
        assert!((res.upper as f64) <= (1.0 + eps) * b as f64);
        assert!(validate_schedule(&g, &res.schedule).unwrap().is_valid());
    }
}
