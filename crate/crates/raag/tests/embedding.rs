//! End-to-end verification of the Heisenberg embedding on every witness
//! pair of the standard test graphs, plus negative controls showing each
//! hypothesis clause is doing real work.

use std::sync::Arc;

use raag::embed::check_relation_triple;
use raag::{
    analyze, CertificateBounds, Classification, Embedding, HeisElement, HypothesisError, RaagAut,
    RaagElement, SimplicialGraph,
};

fn p4() -> Arc<SimplicialGraph> {
    Arc::new(
        SimplicialGraph::build(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")])
            .unwrap(),
    )
}

fn pendant_star() -> Arc<SimplicialGraph> {
    Arc::new(
        SimplicialGraph::build(
            &["c", "x", "y", "z", "w"],
            &[("c", "x"), ("c", "y"), ("c", "z"), ("z", "w")],
        )
        .unwrap(),
    )
}

#[test]
fn full_battery_on_every_witness() {
    for g in [p4(), pendant_star()] {
        let witnesses = g.heisenberg_witnesses();
        assert!(!witnesses.is_empty());
        for (v, w) in witnesses {
            let e = Embedding::build(&g, v, w).unwrap();

            let relations = e.check_relations().unwrap();
            assert!(relations.all_hold(), "relations on ({}, {})", g.name(v), g.name(w));

            let hom = e.verify_homomorphism(2).unwrap();
            assert!(hom.ok());
            assert_eq!(hom.pairs_checked, 125 * 125);

            let inj = e.verify_injectivity(2).unwrap();
            assert!(inj.ok());
            assert_eq!(inj.triples_checked, 124);

            let cert = e.certify(CertificateBounds::default()).unwrap();
            assert!(cert.passed());
            assert_eq!(cert.injectivity.triples_checked, 342);
            assert_eq!(cert.conjugation_powers.cases_checked, 16);
            assert_eq!(cert.power_subgroup.cases_checked, 3);
        }
    }
}

#[test]
fn iota_is_multiplicative_beyond_the_grid() {
    let g = p4();
    let e = Embedding::build(&g, g.vertex("a").unwrap(), g.vertex("b").unwrap()).unwrap();
    let pairs = [
        (HeisElement::new(3, -2, 5), HeisElement::new(-1, 4, 2)),
        (HeisElement::new(0, 6, -3), HeisElement::new(5, 0, 1)),
        (HeisElement::new(-4, -4, -4), HeisElement::new(4, 4, 4)),
    ];
    for (x, y) in pairs {
        let product = x.multiply(&y).unwrap();
        assert_eq!(
            e.iota(&x).unwrap().compose(&e.iota(&y).unwrap()).unwrap(),
            e.iota(&product).unwrap()
        );
    }
}

#[test]
fn transvection_powers_push_the_dominated_generator() {
    for g in [p4(), pendant_star()] {
        for (v, w) in g.heisenberg_witnesses() {
            let e = Embedding::build(&g, v, w).unwrap();
            let gen_v = RaagElement::generator(&g, v).unwrap();
            let gen_w = RaagElement::generator(&g, w).unwrap();
            for n in -6i64..=6 {
                assert_eq!(
                    e.t().pow(n).apply(&gen_v).unwrap(),
                    gen_v.multiply(&gen_w.pow(n)).unwrap()
                );
            }
        }
    }
}

#[test]
fn certificate_counts_at_default_bounds() {
    let g = p4();
    let e = Embedding::build(&g, g.vertex("a").unwrap(), g.vertex("b").unwrap()).unwrap();
    let cert = e.certify(CertificateBounds::default()).unwrap();
    let text = cert.to_string();
    assert!(text.contains("342/342 nonzero coordinate triples"));
    assert!(text.contains("agreed in 342/342 cases"));
    assert!(text.contains("(16/16 ok)"));
    assert!(text.contains("(3/3 ok)"));
    assert!(text.contains("RESULT: PASS"));
}

#[test]
fn triangle_has_no_witness_and_trivial_conjugations() {
    let k3 = Arc::new(
        SimplicialGraph::build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap(),
    );
    assert_eq!(
        analyze(&k3).classification,
        Classification::AdjacentTransvectionsButNoWitness
    );
    // Every conjugation collapses, so the would-be central image dies.
    for v in k3.vertices() {
        let gen = RaagElement::generator(&k3, v).unwrap();
        assert!(RaagAut::inner(&gen).is_identity());
    }
    let a = k3.vertex("a").unwrap();
    let b = k3.vertex("b").unwrap();
    assert!(matches!(
        Embedding::build(&k3, a, b),
        Err(HypothesisError::DominatorCentral { .. })
    ));
}

#[test]
fn star_center_blocks_every_witness() {
    let star = Arc::new(
        SimplicialGraph::build(&["c", "x", "y", "z"], &[("c", "x"), ("c", "y"), ("c", "z")])
            .unwrap(),
    );
    let report = analyze(&star);
    assert_eq!(
        report.classification,
        Classification::AdjacentTransvectionsButNoWitness
    );
    assert!(!report.adjacent_transvection_pairs.is_empty());
    for (v, w) in report.adjacent_transvection_pairs {
        assert!(matches!(
            Embedding::build(&star, v, w),
            Err(HypothesisError::DominatorCentral { .. })
        ));
    }
}

#[test]
fn adjacency_is_essential_for_the_relations() {
    // In a free group the same three maps exist, but conjugations by the
    // two generators no longer commute, so the first relation fails.
    let free = Arc::new(SimplicialGraph::build(&["a", "b"], &[]).unwrap());
    let a = free.vertex("a").unwrap();
    let b = free.vertex("b").unwrap();
    assert!(matches!(
        Embedding::build(&free, a, b),
        Err(HypothesisError::NotAdjacent { .. })
    ));
    let c_a = RaagAut::inner(&RaagElement::generator(&free, a).unwrap());
    let c_b = RaagAut::inner(&RaagElement::generator(&free, b).unwrap());
    let t = RaagAut::transvection(&free, a, b).unwrap();
    let checks = check_relation_triple(&c_a, &t, &c_b, "a", "b").unwrap();
    assert!(!checks.checks[0].holds);
    assert!(!checks.all_hold());
}

#[test]
fn domination_is_essential_for_the_transvection() {
    let g = p4();
    let b = g.vertex("b").unwrap();
    let a = g.vertex("a").unwrap();
    assert!(RaagAut::transvection(&g, b, a).is_err());
    assert!(matches!(
        Embedding::build(&g, b, a),
        Err(HypothesisError::NotDominated { .. })
    ));
}
