mod common;

use common::Model;
use ctrlab_core::cycle::{cycle_ctr_verdict, cycle_system, in_all_minimal_primes, non_ctr_witness};
use ctrlab_core::hibi::{a_invariant, b_invariant, generator_degrees, hibi_ctr_scan, order_polytope_system};
use ctrlab_core::lattice::{decompose_with, decomposition_bounds, Engine};
use ctrlab_core::perfect::{comparability_graph, maximal_cliques, necessary_condition, perfect_system};
use ctrlab_core::verdict::RadicalEvidence;
use ctrlab_core::{
    check_membership, decompose, enumerate_points, radical_power_search, Basis, LatticePoint, Poset, ScanBounds,
    VerdictKind, Witness,
};

/// Three chains from `a1` (top) down to `a5`: through `a2`, `a4`; through
/// `b1`, `b2` to `a3`; through `c1`, `c2` to `a5`.
fn p1() -> Poset {
    Poset::new(
        ["a1", "a2", "a3", "a4", "a5", "b1", "b2", "c1", "c2"],
        [
            ("a2", "a1"),
            ("a3", "a2"),
            ("a4", "a3"),
            ("a5", "a4"),
            ("b1", "a1"),
            ("b2", "b1"),
            ("a3", "b2"),
            ("c1", "a3"),
            ("c2", "c1"),
            ("a5", "c2"),
        ],
    )
    .unwrap()
}

/// The `ζ` assigned to a radical member `ν` of `P_1`'s trace.
fn p1_zeta(nu: &LatticePoint) -> LatticePoint {
    let v = |id: &str| nu.get(id).unwrap();
    let mut values = Vec::new();
    for i in 1..=5i64 {
        values.push((format!("a{i}"), -i));
    }
    for i in 1..=2i64 {
        let (b, c) = (format!("b{i}"), format!("c{i}"));
        values.push((b.clone(), -i - 1 + i64::from(v(&b) > v("a1"))));
        values.push((c.clone(), -i - 3 + i64::from(v(&c) > v("a3"))));
    }
    LatticePoint::from_pairs(values, -6)
}

#[test]
fn p1_invariants() {
    let p = p1();
    assert_eq!(p.height(), 7);
    assert_eq!((a_invariant(&p), b_invariant(&p)), (-8, -6));
    assert_eq!(a_invariant(&Poset::chain("x", 5)), -6);
    assert_eq!(a_invariant(&Poset::chain("x", 7)), -8);
    let g = generator_degrees(&p, 1, 3).unwrap();
    assert_eq!(g.degrees.into_iter().collect::<Vec<_>>(), [8]);
    let g = generator_degrees(&p, -1, 3).unwrap();
    assert_eq!(g.degrees.into_iter().collect::<Vec<_>>(), [-6]);
}

#[test]
fn p1_explicit_zeta_decomposes_radical_members() {
    let p = p1();
    let s = order_polytope_system(&p);
    let mut used = 0;
    for degree in 1..=3 {
        for nu in enumerate_points(&s, 0, degree).unwrap() {
            let v = |id: &str| nu.get(id).unwrap();
            if !(v("a1") < v("a3") && v("a3") < v("a5")) {
                continue;
            }
            let zeta = p1_zeta(&nu);
            let eta = nu.checked_sub(&zeta).unwrap();
            assert!(check_membership(&s, -1, &zeta).unwrap(), "{nu:?}");
            assert!(check_membership(&s, 1, &eta).unwrap(), "{nu:?}");
            assert!(decompose(&s, &nu).unwrap().is_some());
            used += 1;
        }
    }
    assert!(used > 0);
}

#[test]
fn p1_scan_finds_no_radical_non_trace_member() {
    let v = hibi_ctr_scan(&p1(), ScanBounds { degree_bound: 2, power_bound: 11 }).unwrap();
    assert_eq!(v.kind, VerdictKind::CtrNotGorenstein);
    assert!(matches!(v.basis, Basis::AtBound(_)));
}

#[test]
fn union_of_chains_is_not_ctr() {
    let u = Poset::chain("x", 5).disjoint_union(&Poset::chain("y", 7));
    let s = order_polytope_system(&u);
    let deg1 = enumerate_points(&s, 0, 1).unwrap();
    assert_eq!(deg1.len(), 48);
    assert!(deg1.iter().all(|mu| decompose(&s, mu).unwrap().is_none()));
    let deg2 = enumerate_points(&s, 0, 2).unwrap();
    assert_eq!(deg2.len(), 21 * 36);
    assert!(deg2.iter().all(|mu| decompose(&s, mu).unwrap().is_some()));
    let w = radical_power_search(&s, &deg1[0], 4).unwrap().unwrap();
    assert_eq!(w.power, 2);
    let v = hibi_ctr_scan(&u, ScanBounds::default()).unwrap();
    assert_eq!(v.kind, VerdictKind::NotCtr);
}

fn example_graph_poset() -> Poset {
    Poset::new(
        ["x1", "x2", "x3", "y1", "y2", "y3", "y4"],
        [("x1", "y1"), ("x1", "y2"), ("y2", "x2"), ("x3", "x2"), ("x3", "y3"), ("y3", "y4")],
    )
    .unwrap()
}

#[test]
fn example_graph_radical_member() {
    let g = comparability_graph(&example_graph_poset());
    let stats = maximal_cliques(&g);
    assert_eq!((stats.k, stats.k_prime), (3, 2));
    let s = perfect_system(&g);
    let mu = LatticePoint::from_pairs([("x1", 1), ("x2", 1), ("x3", 1), ("y1", 0), ("y2", 0), ("y3", 0), ("y4", 0)], 2);
    assert!(check_membership(&s, 0, &mu).unwrap());
    assert_eq!(decompose(&s, &mu).unwrap(), None);
    assert_eq!(decompose_with(&s, &mu, Engine::Exhaustive).unwrap(), None);
    let model = Model::graph(&g);
    assert_eq!(model.decompose(&model.dense(&mu)), None);
    assert!(decompose(&s, &mu.scaled(2).unwrap()).unwrap().is_some());

    let eta =
        LatticePoint::from_pairs([("x1", 2), ("x2", 2), ("x3", 3), ("y1", 1), ("y2", 1), ("y3", 1), ("y4", 1)], 6);
    let zeta = LatticePoint::from_pairs(
        [("x1", 0), ("x2", 0), ("x3", -1), ("y1", -1), ("y2", -1), ("y3", -1), ("y4", -1)],
        -2,
    );
    assert!(check_membership(&s, 1, &eta).unwrap());
    assert!(check_membership(&s, -1, &zeta).unwrap());
    assert_eq!(eta.checked_add(&zeta).unwrap(), mu.scaled(2).unwrap());

    let v = necessary_condition(&g, ScanBounds::default()).unwrap();
    assert_eq!(v.kind, VerdictKind::InconclusiveAtBound);
    let deep = ctrlab_core::perfect::deep_scan(&g, ScanBounds { degree_bound: 2, power_bound: 7 }).unwrap();
    assert_eq!(deep.kind, VerdictKind::NotCtr);
}

#[test]
fn forced_unit_split_on_zero_coordinates() {
    let g = comparability_graph(&example_graph_poset());
    let s = perfect_system(&g);
    for mu in enumerate_points(&s, 0, 2).unwrap() {
        let out = decomposition_bounds(&s, &mu).unwrap();
        for (id, &m) in mu.values() {
            if m == 0 {
                assert_eq!((out.values[id].lo, out.values[id].hi), (1, 1));
            }
        }
    }
}

#[test]
fn chain_plus_point_power_witness() {
    let g = comparability_graph(&Poset::chain("c", 3).disjoint_union(&Poset::chain("p", 1)));
    let v = necessary_condition(&g, ScanBounds::default()).unwrap();
    assert_eq!(v.kind, VerdictKind::NotCtr);
    let Witness::NonRadicalMonomial { mu, evidence: RadicalEvidence::Power(w) } = v.witness else { panic!() };
    assert_eq!(mu, LatticePoint::constant(&["c1", "c2", "c3", "p1"], 0, 1));
    assert_eq!(w.power, 2);
    assert_eq!(w.eta, LatticePoint::constant(&["c1", "c2", "c3", "p1"], 1, 4));
    assert_eq!(w.zeta, LatticePoint::constant(&["c1", "c2", "c3", "p1"], -1, -2));
    let s = perfect_system(&g);
    assert_eq!(radical_power_search(&s, &mu, 4).unwrap(), Some(w));
}

#[test]
fn cycle_theorem_at_bound() {
    for n in [3, 4, 5, 6, 8] {
        let v = cycle_ctr_verdict(n, ScanBounds::default()).unwrap();
        assert_eq!(v.kind, VerdictKind::Gorenstein);
        let Witness::UnitDecomposes(w) = v.witness else { panic!() };
        let s = cycle_system(n).unwrap();
        assert!(w.validate(&s, &s.origin()).unwrap());
    }
    let v = cycle_ctr_verdict(7, ScanBounds::default()).unwrap();
    assert_eq!(v.kind, VerdictKind::CtrNotGorenstein);
    let Witness::MemberScan { candidates, radical_members, decomposed, .. } = v.witness else { panic!() };
    assert_eq!(radical_members, decomposed);
    assert!(candidates > radical_members && radical_members > 0);

    let s9 = cycle_system(9).unwrap();
    let mu = non_ctr_witness(4).unwrap();
    assert_eq!(decompose_with(&s9, &mu, Engine::Exhaustive).unwrap(), None);
    let model = Model::cycle(9);
    assert_eq!(model.decompose(&model.dense(&mu)), None);
    assert_eq!(radical_power_search(&s9, &mu, 4).unwrap().unwrap().power, 2);
    assert_eq!(cycle_ctr_verdict(9, ScanBounds::default()).unwrap().kind, VerdictKind::NotCtr);
}

#[test]
fn odd_cycle_trace_lies_in_minimal_primes() {
    for n in [7, 9, 11] {
        let s = cycle_system(n).unwrap();
        for degree in 1..=2 {
            for mu in enumerate_points(&s, 0, degree).unwrap() {
                if decompose(&s, &mu).unwrap().is_some() {
                    assert!(in_all_minimal_primes(n, &mu).unwrap(), "n={n} {mu:?}");
                }
            }
        }
    }
}

#[test]
fn witnesses_for_longer_cycles() {
    let s = cycle_system(11).unwrap();
    let mu = non_ctr_witness(5).unwrap();
    assert!(check_membership(&s, 0, &mu).unwrap());
    assert!(in_all_minimal_primes(11, &mu).unwrap());
    assert_eq!(decompose(&s, &mu).unwrap(), None);
    let model = Model::cycle(11);
    assert_eq!(model.decompose(&model.dense(&mu)), None);
}
