use boxturan::extremal::{construct_extremal, decompose_certificate};
use boxturan::geometry::depth_with;
use boxturan::oracle::{exact_t_1d_with, general_position, search_t_with};
use boxturan::sample::{chain_rng, random_generic_family, random_slab_mix};
use boxturan::turan::{extremal_pairs, interval_extremal};
use boxturan::{intersection_graph, Error, Mode};

#[test]
fn exact_oracle_agrees_with_formula_and_across_modes() {
    for n in 1..=5 {
        for k in 1..=n {
            let seq = exact_t_1d_with(n, k, Mode::Sequential).unwrap();
            let par = exact_t_1d_with(n, k, Mode::Parallel).unwrap();
            assert_eq!(seq, par);
            assert_eq!(seq.best_edges, interval_extremal(n, k).unwrap());
            assert!(depth_with(&seq.witness, Mode::Sequential).unwrap().0 as u64 <= k);
        }
    }
}

#[test]
fn search_witnesses_are_sound() {
    for (i, &(n, k, d)) in [(6, 3, 2), (7, 2, 2), (8, 4, 3), (5, 5, 2), (9, 3, 1)].iter().enumerate() {
        let r = search_t_with(n, k, d, 5_000, i as u64, Mode::Sequential).unwrap();
        assert_eq!(r.best_edges, intersection_graph(&r.witness).edge_count() as u64);
        assert!(depth_with(&r.witness, Mode::Sequential).unwrap().0 as u64 <= k);
        assert!(r.best_edges <= extremal_pairs(n, k, d).unwrap());
        assert_eq!(r, search_t_with(n, k, d, 5_000, i as u64, Mode::Parallel).unwrap());
    }
}

#[test]
fn certificate_holds_on_random_families() {
    for i in 0..300 {
        let mut rng = chain_rng(21, i);
        let d = 1 + (i as usize % 3);
        let f = if i % 2 == 0 {
            random_generic_family(&mut rng, 14, d)
        } else {
            general_position(&random_slab_mix(&mut rng, 14, d, 5))
        };
        let k = depth_with(&f, Mode::Sequential).unwrap().0 as u64;
        let trace = decompose_certificate(&f, k).unwrap();
        assert!(trace.holds, "family {i}");
        assert!(trace.edges as u64 <= trace.formula);
        let counted: usize = trace.steps.iter().map(|s| s.s).sum::<usize>() + trace.base.edges;
        assert_eq!(counted, trace.edges);
    }
}

#[test]
fn certificate_refuses_deep_or_tied_families() {
    let e = construct_extremal(8, 5, 2).unwrap();
    match decompose_certificate(&e.family, 4) {
        Err(Error::DepthExceeded { k, witness }) => {
            assert_eq!(k, 4);
            assert!(witness.verify(&e.family) && witness.depth() == 5);
        }
        other => panic!("expected DepthExceeded, got {other:?}"),
    }
    let tied = boxturan::parse_family(r#"{"dim": 1, "boxes": [[[0, 2]], [[1, 2]]]}"#).unwrap();
    assert!(matches!(decompose_certificate(&tied, 2), Err(Error::DuplicateUpperEndpoint { .. })));
}
