use central_domination::classify::{
    check_bounds, check_complement_central, check_equivalence_corollary, classify, formula_gamma_central,
    h2_characterization, ClassTag, ClassifyError, FamilySpec, GammaSource,
};
use central_domination::generators::*;
use central_domination::solvers::{self, GoodCover};
use central_domination::{central, central_complement, Graph, SolverConfig, VertexSet};

fn vs(n: usize, vertices: &[usize]) -> VertexSet {
    VertexSet::from_vertices(n, vertices.iter().copied())
}

#[test]
fn generator_examples() {
    assert_eq!(complete(6).edge_count(), 15);
    assert_eq!(cycle(3).unwrap(), complete(3));
    assert_eq!(wheel(3).unwrap(), complete(4));
    assert_eq!(wheel(7).unwrap().degree(7), 7);
    assert_eq!(wheel(5).unwrap().edge_count(), 10);
    assert_eq!(friendship(1).unwrap(), complete(3));
    assert_eq!(friendship(4).unwrap().n(), 9);
    assert_eq!(friendship(3).unwrap().edge_count(), 9);
    assert_eq!(double_star(3, 5).unwrap().diameter(), Some(3));
    assert_eq!(double_star(2, 2).unwrap().n(), 6);
    assert_eq!(clique_plus_isolates(5, 5).unwrap(), complete(5));
    assert_eq!(clique_plus_isolates(4, 7).unwrap().is_clique_plus_isolates(), Some(4));
    assert_eq!(clique_plus_isolates(0, 3).unwrap(), empty(3));
    assert_eq!(corona(&cycle(3).unwrap(), 1).unwrap().n(), 6);
    assert_eq!(corona(&path(3), 2).unwrap().edge_count(), 8);
    let c4 = corona(&cycle(4).unwrap(), 1).unwrap();
    assert_eq!((0..c4.n()).map(|v| c4.degree(v)).min(), Some(1));
}

#[test]
fn central_graph_examples() {
    let p3 = central(&path(3));
    assert_eq!((p3.graph().n(), p3.graph().edge_count()), (5, 5));
    assert_eq!(central(&empty(4)).into_graph(), complete(4));
    let k3 = central(&complete(3));
    assert_eq!((k3.graph().n(), k3.graph().edge_count()), (6, 6));
    assert!((0..3).all(|v| k3.graph().degree(v) == 2));
    assert_eq!(central_complement(&empty(3)), empty(3));
    let cc = central_complement(&path(4));
    for a in 4..7 {
        for b in a + 1..7 {
            assert!(cc.has_edge(a, b));
        }
    }
}

#[test]
fn solver_examples() {
    let c5 = cycle(5).unwrap();
    assert_eq!(solvers::domination_number(&c5).value, 2);
    assert_eq!(solvers::vertex_cover_number(&c5).value, 3);
    assert_eq!(solvers::domination_number(&complete(7)).value, 1);
    assert_eq!(solvers::domination_number(&empty(5)).value, 5);
    assert_eq!(solvers::independence_number(&complete(6)).value, 1);
    assert_eq!(
        solvers::vertex_cover_number(&complete_bipartite(1, 6).unwrap()).witness,
        vs(7, &[0])
    );

    assert_eq!(solvers::h_value(&empty(5)).unwrap().value, 1);
    assert_eq!(solvers::h_value(&clique_plus_isolates(4, 6).unwrap()).unwrap().value, 3);
    assert_eq!(solvers::h_value(&path(5)).unwrap().value, 3);
    assert_eq!(solvers::f_value(&clique_plus_isolates(4, 6).unwrap()).unwrap().value, 4);
    assert_eq!(solvers::f_value(&path(4)).unwrap().witness, vs(4, &[1, 2]));

    assert_eq!(solvers::good_cover(&path(4)).witness().unwrap().witness, vs(4, &[1, 2]));
    assert_eq!(
        solvers::good_cover(&complete_bipartite(1, 3).unwrap()),
        GoodCover::NoneExists
    );
    assert_eq!(
        solvers::good_cover(&clique_plus_isolates(3, 6).unwrap()),
        GoodCover::NoneExists
    );

    let cfg = SolverConfig::default();
    assert!(solvers::exists_gamma_set_within_originals(&central(&path(4)), &cfg).unwrap());
    assert!(!solvers::exists_gamma_set_within_originals(&central(&complete(4)), &cfg).unwrap());
    assert!(solvers::exists_gamma_set_within_originals(&central(&empty(3)), &cfg).unwrap());
}

#[test]
fn classification_examples() {
    let k5 = classify(&complete(5)).unwrap();
    assert_eq!(
        (k5.class, k5.tau, k5.gamma_central.unwrap().value),
        (ClassTag::Type1CliquePlusIsolates, 4, 4)
    );
    let p4 = classify(&path(4)).unwrap();
    assert_eq!((p4.class, p4.tau), (ClassTag::Type2GoodCover, 2));
    assert!(p4.witnesses.good_cover.is_some());
    let star = classify(&complete_bipartite(1, 3).unwrap()).unwrap();
    assert_eq!(star.class, ClassTag::Type3NoGoodCover);
    let gamma = star.gamma_central.unwrap();
    assert_eq!((gamma.value, gamma.source), (2, GammaSource::Exact));
    let p6 = classify(&path(6)).unwrap();
    assert_eq!(
        (p6.class, p6.tau, p6.gamma_central.unwrap().value),
        (ClassTag::Type2GoodCover, 3, 3)
    );
    assert_eq!(classify(&complete(2)).unwrap().class, ClassTag::Unsupported);
}

#[test]
fn k4_with_pendant_contradicts_the_trichotomy() {
    let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]).unwrap();
    assert_eq!(g.is_clique_plus_isolates(), None);
    assert_eq!(solvers::good_cover(&g), GoodCover::NoneExists);
    let gamma = solvers::central_domination_number(&g, &SolverConfig::default()).unwrap();
    assert_eq!(gamma.value, 3);
    // two originals plus the subdivision vertex of edge 23
    let cg = central(&g);
    let k = cg.subdivision_edges().iter().position(|&e| e == (2, 3)).unwrap();
    assert!(solvers::is_dominating(cg.graph(), &vs(12, &[0, 1, 5 + k])));
    assert!(matches!(classify(&g), Err(ClassifyError::TheoremViolation { .. })));
}

#[test]
fn formula_examples() {
    let cases = [
        (FamilySpec::Path { n: 5 }, 3),
        (FamilySpec::Path { n: 6 }, 3),
        (FamilySpec::Path { n: 7 }, 3),
        (FamilySpec::Cycle { n: 4 }, 3),
        (FamilySpec::Cycle { n: 7 }, 4),
        (FamilySpec::Wheel { n: 4 }, 4),
        (FamilySpec::Wheel { n: 7 }, 5),
        (FamilySpec::CompleteBipartite { m: 2, n: 3 }, 3),
        (FamilySpec::Friendship { n: 2 }, 3),
    ];
    for (spec, value) in cases {
        assert_eq!(formula_gamma_central(&spec).unwrap(), value, "{spec}");
    }
}

#[test]
fn bound_and_characterization_examples() {
    for k in 2..=4 {
        let r = check_bounds(&complete_bipartite(k, k).unwrap()).unwrap();
        assert_eq!(r.alpha_upper.gamma_central, Some(k + 1));
        assert_eq!(r.bipartite.equality_condition, Some(true));
    }
    let p6 = check_bounds(&path(6)).unwrap();
    assert_eq!((p6.tau_lower.lower, p6.alpha_upper.upper), (Some(3), Some(4)));
    let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    let r = check_bounds(&two_triangles).unwrap();
    assert_eq!((r.disconnected.lower, r.disconnected.upper), (Some(4), Some(4)));

    let h2 = |g: &Graph| {
        let c = h2_characterization(g).unwrap();
        (c.h_is_two, c.characterized)
    };
    assert_eq!(h2(&clique_plus_isolates(3, 5).unwrap()), (true, true));
    assert_eq!(h2(&path(4)), (true, true));
    assert_eq!(h2(&cycle(5).unwrap()), (false, false));

    let cfg = SolverConfig::default();
    for g in [path(4), complete_bipartite(1, 5).unwrap(), cycle(6).unwrap()] {
        assert!(check_complement_central(&g, &cfg).unwrap().holds);
    }
    for g in [
        double_star(2, 2).unwrap(),
        cycle(5).unwrap(),
        complete_bipartite(1, 4).unwrap(),
    ] {
        assert!(check_equivalence_corollary(&g, &cfg).unwrap().agree());
    }
}
