use std::collections::BTreeMap;

use brauerpar_core::group::{named_group, GroupSpec, NamedGroup, Subgroup};
use brauerpar_core::linalg::{int, QMatrix, Rational};
use brauerpar_core::local::{c_ratio_ord, predict_parity, splitting, tamagawa_ord, LocalPrimeData, ReductionModel};
use brauerpar_core::presets::{default_relation, standard_reps};
use brauerpar_core::regconst::{regulator_constant, regulator_constant_perm};
use brauerpar_core::relation::{find_relations, BrauerRelation};
use brauerpar_core::rep::{
    character_inner_product, fixed_dimension_from_character, hom_basis, perm_rep, PairedRepresentation, Pairing,
    Representation,
};
use brauerpar_core::Error;
use num_traits::Zero;
use proptest::prelude::*;

fn group(spec: GroupSpec) -> NamedGroup {
    named_group(&spec).unwrap()
}

fn sub<'a>(g: &'a NamedGroup, name: &str) -> &'a Subgroup {
    g.subgroup(name).unwrap()
}

fn suite() -> Vec<NamedGroup> {
    vec![
        group(GroupSpec::Dihedral(6)),
        group(GroupSpec::Dihedral(10)),
        group(GroupSpec::Dihedral(12)),
        group(GroupSpec::BorelQuotient(5)),
        group(GroupSpec::Gl2(3)),
    ]
}

#[test]
fn class_sizes_partition_and_divide() {
    for g in suite() {
        let classes = g.group.conjugacy_classes();
        assert_eq!(classes.iter().map(|c| c.size()).sum::<usize>(), g.group.order());
        assert!(classes.iter().all(|c| g.group.order() % c.size() == 0));
        for (_, h) in &g.subgroups {
            assert_eq!(g.group.order() % h.order(), 0, "{}", g.spec);
        }
    }
}

#[test]
fn double_coset_sizes() {
    for g in suite() {
        for (_, n) in &g.subgroups {
            for (_, h) in &g.subgroups {
                let dc = g.group.double_cosets(n, h).unwrap();
                assert_eq!(dc.sizes().iter().sum::<usize>(), g.group.order());
                for c in &dc.cosets {
                    let conj = h.conjugate_by(c.representative);
                    assert_eq!(c.size, n.order() * h.order() / n.intersection_order(&conj));
                }
            }
        }
    }
}

#[test]
fn permutation_character_pairing_counts_double_cosets() {
    let g = group(GroupSpec::Gl2(3));
    for (_, a) in &g.subgroups {
        let ca = g.group.fixed_points_character(a).unwrap();
        for (_, b) in &g.subgroups {
            let cb = g.group.fixed_points_character(b).unwrap();
            let count = g.group.double_cosets(a, b).unwrap().len();
            assert_eq!(ca.inner_product(&cb, &g.group), int(count as i64));
        }
    }
}

#[test]
fn fixed_dimension_matches_character() {
    for g in suite() {
        let mut reps: Vec<PairedRepresentation> = standard_reps(&g).unwrap().into_iter().map(|(_, r)| r).collect();
        reps.push(perm_rep(&g.group, sub(&g, "1")).unwrap());
        for v in &reps {
            for (name, h) in &g.subgroups {
                let dim = v.rep.fixed_subspace(h).unwrap().cols();
                assert_eq!(int(dim as i64), fixed_dimension_from_character(&v.rep, h), "{} {name}", g.spec);
            }
        }
    }
}

#[test]
fn hom_dimension_matches_character_pairing() {
    let g = group(GroupSpec::Gl2(3));
    let perms: Vec<PairedRepresentation> =
        ["B", "U1", "U2", "D"].iter().map(|n| perm_rep(&g.group, sub(&g, n)).unwrap()).collect();
    for a in &perms {
        for b in &perms {
            let dim = hom_basis(&a.rep, &b.rep).unwrap().len();
            assert_eq!(int(dim as i64), character_inner_product(&a.rep, &b.rep));
        }
    }
}

#[test]
fn relations_cancel_fixed_dimensions() {
    for g in suite() {
        let subs = g.group.subgroups_up_to_conjugacy().unwrap();
        let reps = standard_reps(&g).unwrap();
        for theta in find_relations(&g.group, Some(&subs)).unwrap() {
            assert!(theta.verify().holds());
            for (label, v) in &reps {
                let total: i64 =
                    theta.terms().iter().map(|(h, n)| n * v.rep.fixed_subspace(h).unwrap().cols() as i64).sum();
                assert_eq!(total, 0, "{} {label}", g.spec);
            }
        }
    }
}

#[test]
fn permutation_constant_decomposes() {
    // Ind_{U1} 1 = 1 ⊕ σ ⊕ ρ: the double coset route agrees with the
    // product over constituents
    for p in [3, 5] {
        let g = group(GroupSpec::Gl2(p));
        let theta = default_relation(&g).unwrap().unwrap();
        let reps = standard_reps(&g).unwrap();
        let product = reps.iter().fold(brauerpar_core::linalg::SquareClass::one(), |acc, (_, v)| {
            &acc * &regulator_constant(&theta, &v.rep, Some(&v.pairing)).unwrap().value
        });
        let perm = regulator_constant_perm(&theta, sub(&g, "U1")).unwrap().value;
        assert_eq!(perm, product, "p={p}");
        let direct = perm_rep(&g.group, sub(&g, "U1")).unwrap();
        assert_eq!(regulator_constant(&theta, &direct.rep, Some(&direct.pairing)).unwrap().value, perm);
    }
}

fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> QMatrix {
    let mut u = QMatrix::identity(n);
    for &(i, j, k) in ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            continue;
        }
        // add k·(column j) to column i
        let mut e = QMatrix::identity(n);
        e.set(j, i, int(k));
        u = &u * &e;
    }
    u
}

fn change_basis(v: &PairedRepresentation, u: &QMatrix) -> (Representation, Pairing) {
    let inv = u.inverse().unwrap();
    let images = v.rep.images().iter().map(|m| &(&inv * m) * u).collect();
    let rep = Representation::new(v.rep.group(), images).unwrap();
    let pairing = Pairing::new(&rep, u.congruence(v.pairing.gram())).unwrap();
    (rep, pairing)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn basis_independence(ops in prop::collection::vec((0usize..8, 0usize..8, -3i64..=3), 0..6), which in 0usize..3) {
        let g = group(GroupSpec::Gl2(3));
        let theta = default_relation(&g).unwrap().unwrap();
        let (_, v) = &standard_reps(&g).unwrap()[which];
        let u = unimodular(v.dim(), &ops);
        let (rep, pairing) = change_basis(v, &u);
        let before = regulator_constant(&theta, &v.rep, Some(&v.pairing)).unwrap();
        let after = regulator_constant(&theta, &rep, Some(&pairing)).unwrap();
        prop_assert_eq!(before.value, after.value);
    }

    #[test]
    fn splitting_is_conjugation_invariant(x in 0usize..48, h in 0usize..7) {
        let g = group(GroupSpec::Gl2(3));
        let (d, i) = (sub(&g, "D"), sub(&g, "I"));
        let h = &g.subgroups[h].1;
        let base = splitting(&g.group, h, d, i).unwrap();
        let moved = splitting(&g.group, h, &d.conjugate_by(x), &i.conjugate_by(x)).unwrap();
        prop_assert_eq!(base.degree(), h.index() as u64);
        prop_assert_eq!(base, moved);
    }

    #[test]
    fn dihedral_parity_reduces_to_two_terms(c in 1u64..30, pick in 0usize..64) {
        // with coefficients (1, −2, −1, 2) only the {1} and C_p terms matter mod 2
        let p = 5u64;
        let g = group(GroupSpec::Dihedral(10));
        let theta = default_relation(&g).unwrap().unwrap();
        let subs = g.group.subgroups_up_to_conjugacy().unwrap();
        let pairs: Vec<(Subgroup, Subgroup)> = subs
            .iter()
            .flat_map(|d| subs.iter().map(move |i| (d.clone(), i.clone())))
            .filter(|(d, i)| LocalPrimeData::new("x", d.clone(), i.clone(), ReductionModel::Good).is_ok())
            .collect();
        let (d, i) = pairs[pick % pairs.len()].clone();
        let model = ReductionModel::SplitMultiplicative { c };
        let prime = LocalPrimeData::new("x", d.clone(), i.clone(), model.clone()).unwrap();
        let total = c_ratio_ord(&theta, &[prime], p).unwrap();
        let t = |name: &str| tamagawa_ord(&model, &splitting(&g.group, sub(&g, name), &d, &i).unwrap(), p).unwrap();
        prop_assert_eq!(total.rem_euclid(2), (t("1") - t("C5")).rem_euclid(2));
    }
}

#[test]
fn good_reduction_contributes_nothing() {
    for g in suite() {
        let Some(theta) = default_relation(&g).unwrap() else { continue };
        let subs = g.group.subgroups_up_to_conjugacy().unwrap();
        let primes: Vec<LocalPrimeData> = subs
            .iter()
            .flat_map(|d| subs.iter().map(move |i| (d, i)))
            .filter_map(|(d, i)| LocalPrimeData::new("x", d.clone(), i.clone(), ReductionModel::Good).ok())
            .collect();
        assert!(!primes.is_empty());
        assert_eq!(c_ratio_ord(&theta, &primes, 3).unwrap(), 0);
        assert_eq!(c_ratio_ord(&theta, &[], 3).unwrap(), 0);
    }
}

#[test]
fn totally_split_prime_cancels() {
    let g = group(GroupSpec::Gl2(3));
    let theta = default_relation(&g).unwrap().unwrap();
    let trivial = sub(&g, "1").clone();
    let prime =
        LocalPrimeData::new("l=7", trivial.clone(), trivial, ReductionModel::SplitMultiplicative { c: 3 }).unwrap();
    assert_eq!(c_ratio_ord(&theta, &[prime], 3).unwrap(), 0);
}

fn dihedral_report(primes: &[LocalPrimeData], p: u64) -> brauerpar_core::local::ParityReport {
    let g = group(GroupSpec::Dihedral(2 * p as usize));
    let theta = default_relation(&g).unwrap().unwrap();
    let reps = standard_reps(&g).unwrap();
    let refs: Vec<(&str, &Representation)> = reps.iter().map(|(l, r)| (l.as_str(), &r.rep)).collect();
    predict_parity(&theta, &refs, primes, p).unwrap()
}

#[test]
fn dihedral_parity_without_local_data() {
    let report = dihedral_report(&[], 3);
    assert_eq!(report.conclusion, "m_1 + m_eps + m_rho is even");
    assert_eq!(report.c_ratio_ord_mod2(), 0);
    assert!(report.s_theta.exhaustive);
}

#[test]
fn dihedral_parity_with_ramified_prime() {
    // D = G, I = C_p: totally ramified in F/M, inert in M/K
    let p = 3;
    let g = group(GroupSpec::Dihedral(6));
    let report = {
        let theta = default_relation(&g).unwrap().unwrap();
        let reps = standard_reps(&g).unwrap();
        let refs: Vec<(&str, &Representation)> = reps.iter().map(|(l, r)| (l.as_str(), &r.rep)).collect();
        let prime = LocalPrimeData::new(
            "l=7",
            sub(&g, "G").clone(),
            sub(&g, "C3").clone(),
            ReductionModel::SplitMultiplicative { c: 1 },
        )
        .unwrap();
        assert_eq!(splitting(&g.group, sub(&g, "1"), sub(&g, "G"), sub(&g, "C3")).unwrap().0, vec![(3, 2)]);
        predict_parity(&theta, &refs, &[prime], p).unwrap()
    };
    assert_eq!(report.conclusion, "m_1 + m_eps + m_rho is odd");
    assert!(report.odd);
}

#[test]
fn custom_model_gap_is_reported() {
    let g = group(GroupSpec::Gl2(3));
    let theta = default_relation(&g).unwrap().unwrap();
    let mut table = BTreeMap::new();
    table.insert((1, 2), 3);
    table.insert((3, 1), 3);
    let prime = LocalPrimeData::new("l=11", sub(&g, "D").clone(), sub(&g, "I").clone(), ReductionModel::Custom(table))
        .unwrap();
    assert_eq!(c_ratio_ord(&theta, &[prime], 3).unwrap_err(), Error::MissingTamagawaEntry { e: 1, f: 1 });
}

#[test]
fn incomplete_constituents_are_flagged() {
    let g = group(GroupSpec::Gl2(3));
    let theta = default_relation(&g).unwrap().unwrap();
    let reps = standard_reps(&g).unwrap();
    let refs: Vec<(&str, &Representation)> = reps.iter().take(2).map(|(l, r)| (l.as_str(), &r.rep)).collect();
    let report = predict_parity(&theta, &refs, &[], 3).unwrap();
    assert!(!report.s_theta.exhaustive);
    assert!(!report.warnings.is_empty());
    assert!(report.members.is_empty());
    assert!(!report.odd);
}

#[test]
fn zero_relation_gives_trivial_constants() {
    let g = group(GroupSpec::Dihedral(6));
    let theta = BrauerRelation::empty(&g.group);
    for (_, v) in standard_reps(&g).unwrap() {
        let c = regulator_constant(&theta, &v.rep, None).unwrap();
        assert!(c.value.is_trivial());
        assert!(c.terms.is_empty());
        assert!(!c.exact.is_zero());
        assert_eq!(c.exact, Rational::from_integer(1.into()));
    }
}

#[test]
fn trivial_inertia_is_unramified() {
    for g in suite() {
        let trivial = sub(&g, "1");
        for d in g.group.subgroups_up_to_conjugacy().unwrap() {
            if LocalPrimeData::new("x", d.clone(), trivial.clone(), ReductionModel::Good).is_err() {
                continue;
            }
            for (_, h) in &g.subgroups {
                let s = splitting(&g.group, h, &d, trivial).unwrap();
                assert!(s.parts().iter().all(|&(e, _)| e == 1), "{}", g.spec);
                assert_eq!(s.degree(), h.index() as u64);
            }
        }
    }
}
