use boxturan::geometry::{depth_naive, depth_with, find_induced_k2m, intersection_graph_with};
use boxturan::oracle::{general_position, normalize_family};
use boxturan::sample::{chain_rng, random_family, random_generic_family, random_slab_mix};
use boxturan::{intersection_graph, parse_family, serialize_family, BoxFamily, BoxNd, Interval, Mode};
use proptest::prelude::*;

fn family_strategy(max_n: usize, max_d: usize, grid: i64) -> impl Strategy<Value = BoxFamily> {
    (1..=max_d, 1..=max_n).prop_flat_map(move |(d, n)| {
        prop::collection::vec(prop::collection::vec((0..=grid, 0..=grid), d), n).prop_map(move |boxes| {
            let boxes = boxes
                .into_iter()
                .map(|b| BoxNd::new(b.into_iter().map(|(a, c)| Interval::new(a.min(c), a.max(c)).unwrap()).collect()))
                .collect();
            BoxFamily::new(d, boxes).unwrap()
        })
    })
}

/// Largest pairwise-intersecting subset, by trying every subset.
fn brute_clique(f: &BoxFamily) -> usize {
    let n = f.len();
    let meets = |i: usize, j: usize| {
        f.get(i)
            .intervals()
            .iter()
            .zip(f.get(j).intervals())
            .all(|(a, b)| a.lo() <= b.hi() && b.lo() <= a.hi())
    };
    (0u32..1 << n)
        .filter(|&mask| {
            (0..n).all(|i| mask >> i & 1 == 0 || (i + 1..n).all(|j| mask >> j & 1 == 0 || meets(i, j)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn depth_matches_full_grid_scan(f in family_strategy(12, 4, 8)) {
        let (fast, cert) = depth_with(&f, Mode::Sequential).unwrap();
        let (naive, _) = depth_naive(&f).unwrap();
        prop_assert_eq!(fast, naive);
        prop_assert!(cert.verify(&f));
        prop_assert_eq!(cert.depth(), fast);
        prop_assert_eq!(depth_with(&f, Mode::Parallel).unwrap(), (fast, cert));
    }

    #[test]
    fn monotone_relabeling_keeps_graph_and_depth(f in family_strategy(10, 3, 6), scale in 1i64..5, shift in -20i64..20) {
        let g = |v: i64| v * v * v + scale * v + shift;
        let boxes = f.boxes().iter().map(|b| BoxNd::new(
            b.intervals().iter().map(|iv| Interval::new(g(iv.lo()), g(iv.hi())).unwrap()).collect(),
        )).collect();
        let relabeled = BoxFamily::new(f.dim(), boxes).unwrap();
        prop_assert_eq!(intersection_graph(&f), intersection_graph(&relabeled));
        prop_assert_eq!(depth_with(&f, Mode::Sequential).unwrap().0, depth_with(&relabeled, Mode::Sequential).unwrap().0);
    }

    #[test]
    fn general_position_keeps_graph_and_depth(f in family_strategy(10, 3, 4)) {
        let g = general_position(&f);
        prop_assert_eq!(intersection_graph(&f), intersection_graph(&g));
        prop_assert_eq!(depth_with(&f, Mode::Sequential).unwrap().0, depth_with(&g, Mode::Sequential).unwrap().0);
        for axis in 0..g.dim() {
            prop_assert_eq!(g.axis_values(axis).len(), 2 * g.len());
        }
    }

    #[test]
    fn serialization_round_trips(f in family_strategy(8, 4, 100)) {
        prop_assert_eq!(parse_family(&serialize_family(&f)).unwrap(), f);
    }

    #[test]
    fn graph_modes_agree(f in family_strategy(70, 3, 30)) {
        prop_assert_eq!(intersection_graph_with(&f, Mode::Sequential), intersection_graph_with(&f, Mode::Parallel));
    }
}

#[test]
fn depth_equals_brute_force_clique() {
    for i in 0..500 {
        let mut rng = chain_rng(11, i);
        let n = 1 + (i as usize % 10);
        let d = 1 + (i as usize % 4);
        let f = match i % 3 {
            0 => random_family(&mut rng, n, d, 5),
            1 => random_slab_mix(&mut rng, n, d, 4),
            _ => random_generic_family(&mut rng, n, d),
        };
        assert_eq!(depth_with(&f, Mode::Sequential).unwrap().0, brute_clique(&f), "family {i}");
    }
}

#[test]
fn normalization_keeps_graph_and_depth() {
    for i in 0..200 {
        let mut rng = chain_rng(12, i);
        let d = 1 + (i as usize % 3);
        let f = random_slab_mix(&mut rng, 12, d, 1_000);
        let g = normalize_family(&f);
        assert_eq!(intersection_graph(&f), intersection_graph(&g));
        assert_eq!(depth_with(&f, Mode::Sequential).unwrap().0, depth_with(&g, Mode::Sequential).unwrap().0);
        for axis in 0..d {
            let values = g.axis_values(axis);
            assert_eq!(values, (1..=values.len() as i64).collect::<Vec<_>>());
        }
    }
}

#[test]
fn boxes_never_induce_k2_d_plus_1() {
    for d in 1..=3usize {
        for i in 0..150 {
            let mut rng = chain_rng(13 + d as u64, i);
            let f = random_slab_mix(&mut rng, 2 * d + 2 + (i as usize % 4), d, 3);
            let g = intersection_graph(&f);
            assert_eq!(find_induced_k2m(&g, d + 1).unwrap(), None, "d = {d}, family {i}");
        }
    }
}

#[test]
fn construction_round_trips_through_json() {
    let e = boxturan::extremal::construct_extremal(6, 4, 2).unwrap();
    let text = serialize_family(&e.family);
    let back = parse_family(&text).unwrap();
    assert_eq!(back, e.family);
    assert_eq!(intersection_graph(&back).edge_count(), 13);
}
