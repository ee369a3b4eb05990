//! The combinatorial rules on the worked examples and across the catalog.

use std::collections::BTreeSet;

use reconquiver::catalog::{self, GroupId};
use reconquiver::graph::{DualGraph, STAR};
use reconquiver::quiver;
use reconquiver::rules::{self, ZfKind};

fn set(ids: &[&str]) -> BTreeSet<String> {
    ids.iter().map(|s| s.to_string()).collect()
}

fn check_mixed(g: &DualGraph, middle: &str, d_sub: &[&str], c: &str) {
    let class = rules::classify_zf(g).unwrap();
    assert_eq!(class.kind, ZfKind::Mixed);
    assert_eq!(class.middle_vertex.as_deref(), Some(middle));
    let found: BTreeSet<String> = class.d_subdiagram.unwrap().into_iter().collect();
    assert_eq!(found, set(d_sub));
    assert_eq!(class.c_vertex.as_deref(), Some(c));
    let (q, trace) = rules::apply_rules_traced(g).unwrap();
    assert_eq!(trace.rule, 3);
    assert!(q.same_arrows(&quiver::build_quiver(g).unwrap()));
}

#[test]
fn dihedral_mixed_example() {
    let g = DualGraph::new(
        [
            ("a", -2),
            ("b", -2),
            ("t", -2),
            ("c", -2),
            ("d", -5),
            ("e", -2),
            ("f", -3),
        ],
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("b", "t")],
    )
    .unwrap();
    check_mixed(&g, "b", &["a", "b", "t", "c", "d"], "d");
    let q = rules::apply_rules(&g).unwrap();
    // alpha_C - 3 extra arrows at the -5 curve, alpha - 2 at the -3 end.
    assert_eq!(q.arrows("d", STAR), Some(2));
    assert_eq!(q.arrows("f", STAR), Some(2));
}

#[test]
fn icosahedral_thirteen_example() {
    let g = DualGraph::new(
        [("a", -2), ("b", -2), ("t", -2), ("c", -2), ("d", -3), ("e", -2)],
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("c", "t")],
    )
    .unwrap();
    check_mixed(&g, "c", &["a", "b", "c", "t", "d"], "d");
}

#[test]
fn icosahedral_twenty_three_picks_the_curve_next_to_the_d_subdiagram() {
    let g = catalog::dual_graph(&GroupId::I(23)).unwrap();
    let class = rules::classify_zf(&g).unwrap();
    assert_eq!(class.kind, ZfKind::Mixed);
    assert_eq!(class.c_vertex.as_deref(), Some("E3"));
}

#[test]
fn rule_matches_cycle_kind_on_every_star_graph() {
    let mut ids = catalog::dihedral_groups(40);
    ids.extend(catalog::star_groups(2..=6));
    for id in ids {
        let g = catalog::dual_graph(&id).unwrap();
        let (q, trace) = rules::apply_rules_traced(&g).unwrap();
        let expected_rule = match trace.class.kind {
            ZfKind::Maximal => 1,
            ZfKind::ReducedNotMaximal => 2,
            ZfKind::Mixed => 3,
        };
        assert_eq!(trace.rule, expected_rule, "{id}");
        let traced: u64 = trace.steps.iter().map(|s| s.count).sum();
        assert_eq!(traced, q.arrow_total(), "{id}");
        assert!(rules::verify_against_geometric(&g).unwrap(), "{id}");
    }
}

#[test]
fn base_cases_agree_with_the_geometric_quiver() {
    for id in catalog::star_groups([2]) {
        let g = catalog::dual_graph(&id).unwrap();
        let expected = catalog::expected_quiver(&id).unwrap();
        assert!(rules::apply_rules(&g).unwrap().same_arrows(&expected), "{id}");
    }
}

#[test]
fn rule_three_refuses_other_shapes() {
    // E7 shape with a -3 next to the middle on the long arm: Z_f is mixed, and
    // rule (3) only covers type D and E6 shapes.
    let g = DualGraph::new(
        [
            ("m", -2),
            ("t", -2),
            ("a1", -2),
            ("a2", -2),
            ("b1", -3),
            ("b2", -2),
            ("b3", -2),
        ],
        [
            ("m", "t"),
            ("m", "a1"),
            ("a1", "a2"),
            ("m", "b1"),
            ("b1", "b2"),
            ("b2", "b3"),
        ],
    )
    .unwrap();
    assert_eq!(rules::classify_zf(&g).unwrap().kind, ZfKind::Mixed);
    assert!(matches!(
        rules::apply_rules(&g),
        Err(reconquiver::Error::RuleThreePrecondition(_))
    ));
}
