use ctrlab_core::schubert::{
    block_decomposition, join_meet, schubert_verdict, witness_pair, SchubertError, SchubertIndex,
};
use ctrlab_core::VerdictKind;
use proptest::prelude::*;

fn every_index(max_n: usize) -> Vec<SchubertIndex> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for m in 1..n.min(4) {
            out.extend(SchubertIndex::all(m, n).unwrap());
        }
    }
    out
}

#[test]
fn kappa_matches_column_count() {
    // Σ_{j≤i}|β_j| is the number of entries up to k(i+1); Σ_{j≥i}|χ_j| is
    // the number of columns after a_{k(i+1)} not in γ.
    for g in every_index(8).into_iter().filter(|g| !g.is_degenerate()) {
        let d = block_decomposition(&g).unwrap();
        let (m, n) = (g.m() as i64, g.n() as i64);
        let expected: Vec<i64> = (0..=d.t())
            .map(|i| {
                let k = d.k(i + 1) as i64;
                let a = g.a(d.k(i + 1)) as i64;
                k + (n - a) - (m - k)
            })
            .collect();
        assert_eq!(d.kappa(), expected, "{g}");
    }
}

#[test]
fn blocks_and_gaps_cover_columns_from_a1() {
    for g in every_index(8).into_iter().filter(|g| !g.is_degenerate()) {
        let d = block_decomposition(&g).unwrap();
        let total: usize = d.blocks().iter().chain(d.gaps()).map(Vec::len).sum();
        assert_eq!(total, g.n() - g.a(1) + 1, "{g}");
        let mut cols: Vec<usize> = d.blocks().iter().chain(d.gaps()).flatten().copied().collect();
        cols.sort_unstable();
        assert_eq!(cols, (g.a(1)..=g.n()).collect::<Vec<_>>(), "{g}");
        assert_eq!(d.blocks().last().unwrap().is_empty(), g.a(g.m()) < g.n(), "{g}");
        for w in d.blocks()[..=d.t()].windows(2) {
            assert!(w[1][0] - w[0].last().unwrap() >= 2);
        }
    }
}

#[test]
fn membership_clauses_match_definitions() {
    for g in every_index(7).into_iter().filter(|g| !g.is_degenerate()) {
        let d = block_decomposition(&g).unwrap();
        let up = g.upper_set();
        for delta in &up {
            for i in 0..=d.t() {
                assert_eq!(d.in_omega(i, delta), !d.zeta(i).leq(delta), "{g} {delta} Ω_{i}");
            }
            for i in 1..=d.t() {
                assert_eq!(d.in_theta(i, delta), !d.sigma(i).leq(delta), "{g} {delta} Θ_{i}");
                assert!(d.zeta(i - 1).leq(&d.sigma(i)) && d.zeta(i).leq(&d.sigma(i)));
            }
        }
        // Ω_i and Θ_i are order ideals of Γ(m×n; γ).
        for lo in &up {
            for hi in up.iter().filter(|hi| lo.leq(hi)) {
                for i in 0..=d.t() {
                    assert!(!d.in_omega(i, hi) || d.in_omega(i, lo));
                }
                for i in 1..=d.t() {
                    assert!(!d.in_theta(i, hi) || d.in_theta(i, lo));
                }
            }
        }
    }
}

#[test]
fn witness_pairs_split_every_admissible_beta() {
    let mut checked = 0;
    for g in every_index(7).into_iter().filter(|g| !g.is_degenerate()) {
        let d = block_decomposition(&g).unwrap();
        if d.kappa_max() - d.kappa_min() != 1 {
            continue;
        }
        let sets = d.index_sets();
        let thetas: Vec<usize> = sets.i_prime.iter().chain(&sets.i_dprime).copied().collect();
        for beta in g.upper_set() {
            let admissible = thetas.iter().all(|&i| !d.sigma(i).leq(&beta));
            match witness_pair(&g, &beta) {
                Ok((xi, xi_p)) => {
                    assert!(admissible, "{g} {beta}");
                    let (join, meet) = join_meet(&xi, &xi_p).unwrap();
                    assert_eq!((meet, join), (g.clone(), beta.clone()), "{g} {beta}");
                    assert!(sets.i1.iter().all(|&i| d.in_omega(i, &xi)));
                    assert!(sets.i2.iter().all(|&i| d.in_omega(i, &xi_p)));
                    checked += 1;
                }
                Err(SchubertError::NotInTheta { i }) => {
                    assert!(!admissible && thetas.contains(&i) && !d.in_theta(i, &beta), "{g} {beta}");
                }
                Err(e) => panic!("{g} {beta}: {e}"),
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn verdict_follows_kappa_gap() {
    for g in every_index(8) {
        let v = schubert_verdict(&g);
        let expected = match block_decomposition(&g) {
            Err(_) => VerdictKind::Gorenstein,
            Ok(d) => match d.kappa_max() - d.kappa_min() {
                0 => VerdictKind::Gorenstein,
                1 => VerdictKind::CtrNotGorenstein,
                _ => VerdictKind::NotCtr,
            },
        };
        assert_eq!(v.kind, expected, "{g}");
    }
}

fn triple() -> impl Strategy<Value = (SchubertIndex, SchubertIndex, SchubertIndex)> {
    (2usize..=8)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_flat_map(|(n, m)| {
            let all = SchubertIndex::all(m, n).unwrap();
            let len = all.len();
            (Just(all), 0..len, 0..len, 0..len)
        })
        .prop_map(|(all, a, b, c)| (all[a].clone(), all[b].clone(), all[c].clone()))
}

proptest! {
    #[test]
    fn join_and_meet_form_a_distributive_lattice((x, y, z) in triple()) {
        let j = |a: &SchubertIndex, b: &SchubertIndex| join_meet(a, b).unwrap().0;
        let m = |a: &SchubertIndex, b: &SchubertIndex| join_meet(a, b).unwrap().1;
        prop_assert_eq!(j(&j(&x, &y), &z), j(&x, &j(&y, &z)));
        prop_assert_eq!(m(&m(&x, &y), &z), m(&x, &m(&y, &z)));
        prop_assert_eq!(j(&x, &m(&x, &y)), x.clone());
        prop_assert_eq!(m(&x, &j(&x, &y)), x.clone());
        prop_assert_eq!(m(&x, &j(&y, &z)), j(&m(&x, &y), &m(&x, &z)));
        prop_assert!(m(&x, &y).leq(&x) && x.leq(&j(&x, &y)));
    }
}
