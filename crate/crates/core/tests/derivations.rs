mod common;

use common::*;
use hom_nambu::derivations::{
    check_derivation, check_derivation_closure, check_generalized_derivation, check_quasi_derivation, inner_derivation,
    solve_derivation_space, DerivationCandidate, GeneralizedTuple, QuasiPair,
};
use hom_nambu::error::Error;
use hom_nambu::map::GradedLinearMap;
use hom_nambu::report::CheckOptions;
use hom_nambu::space::{Element, Parity};
use proptest::prelude::*;

fn opts() -> CheckOptions {
    CheckOptions::default()
}

fn algebra_strategy() -> impl Strategy<Value = hom_nambu::algebra::HomSuperAlgebra> {
    (2usize..4).prop_flat_map(|d| {
        (
            proptest::collection::vec(any::<bool>(), d),
            proptest::collection::vec(prop_oneof![3 => Just(0i64), 1 => -2i64..=2], d * d * d),
            proptest::collection::vec(prop_oneof![Just(1i64), Just(2), Just(-1)], d),
        )
            .prop_map(|(p, c, a)| random_binary(&p, &c, &a))
    })
}

fn as_matrices(maps: &[GradedLinearMap]) -> Vec<Vec<Vec<hom_nambu::scalar::Scalar>>> {
    maps.iter().map(|m| m.matrix()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn solver_is_sound_and_complete(alg in algebra_strategy(), k in 0u32..3, odd in any::<bool>()) {
        let parity = if odd { Parity::Odd } else { Parity::Even };
        let basis = solve_derivation_space(&alg, k, parity).unwrap();
        for d in &basis {
            prop_assert_eq!(d.parity(), parity);
            let r = check_derivation(&DerivationCandidate::new(d.clone(), k), &alg, &opts()).unwrap();
            prop_assert!(r.passed, "{}", r.render_text());
        }
        let oracle = derivation_oracle(&alg, k, parity);
        prop_assert_eq!(basis.len(), oracle.len());
        prop_assert!(same_span(&as_matrices(&basis), &oracle));
    }

    #[test]
    fn solver_is_deterministic(alg in algebra_strategy()) {
        let a = solve_derivation_space(&alg, 0, Parity::Even).unwrap();
        let b = solve_derivation_space(&alg, 0, Parity::Even).unwrap();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn catalog_derivation_spaces_match_oracle() {
    for (name, p) in [
        ("g1_0_2", "a=2"),
        ("g2_1_1", "a=3"),
        ("g3_1_1", "a=2"),
        ("g4_1_1", "a=2"),
        ("g5_1_1", "a=2"),
        ("osp12", "lambda=2"),
        ("osp12", "lambda=1"),
        ("L1", "a=2,b=3"),
    ] {
        let f = fixture(name, p);
        for k in 0..=2 {
            for parity in [Parity::Even, Parity::Odd] {
                let basis = solve_derivation_space(&f.algebra, k, parity).unwrap();
                let oracle = derivation_oracle(&f.algebra, k, parity);
                assert!(same_span(&as_matrices(&basis), &oracle), "{name} {p} k={k} {parity}");
                assert_eq!(basis.len(), oracle.len(), "{name} {p} k={k} {parity}");
            }
        }
    }
}

#[test]
fn golden_solutions() {
    let f = fixture("g5_1_1", "a=2");
    let sol = solve_derivation_space(&f.algebra, 0, Parity::Even).unwrap();
    assert_eq!(sol, vec![diag(&f.algebra, &[s(2), s(1)])]);
    let f = fixture("g3_1_1", "a=2");
    let sol = solve_derivation_space(&f.algebra, 0, Parity::Even).unwrap();
    assert_eq!(sol, vec![diag(&f.algebra, &[s(0), s(1)])]);
    // osp(1,2) at lambda = 1 is the untwisted algebra: 3 even, 2 odd derivations
    let f = fixture("osp12", "lambda=1");
    assert_eq!(solve_derivation_space(&f.algebra, 0, Parity::Even).unwrap().len(), 3);
    assert_eq!(solve_derivation_space(&f.algebra, 0, Parity::Odd).unwrap().len(), 2);
}

#[test]
fn closure_adds_parities_and_powers() {
    let f = fixture("osp12", "lambda=1");
    let even = solve_derivation_space(&f.algebra, 0, Parity::Even).unwrap();
    let odd = solve_derivation_space(&f.algebra, 0, Parity::Odd).unwrap();
    let all: Vec<_> = even.iter().chain(&odd).collect();
    for a in &all {
        for b in &all {
            let (c1, c2) = (
                DerivationCandidate::new((*a).clone(), 0),
                DerivationCandidate::new((*b).clone(), 0),
            );
            let r = check_derivation_closure(&c1, &c2, &f.algebra, &opts()).unwrap();
            assert!(r.passed, "{}", r.render_text());
            let comm = a.supercommutator(b).unwrap();
            assert_eq!(comm.parity(), a.parity() + b.parity());
        }
    }
    let f = fixture("g5_1_1", "a=2");
    let d0 = DerivationCandidate::new(
        solve_derivation_space(&f.algebra, 0, Parity::Even).unwrap()[0].clone(),
        0,
    );
    for k in 1..=2 {
        for d in solve_derivation_space(&f.algebra, k, Parity::Even).unwrap() {
            let dk = DerivationCandidate::new(d, k);
            let r = check_derivation_closure(&d0, &dk, &f.algebra, &opts()).unwrap();
            assert!(r.passed);
            assert!(r.notes.iter().any(|n| n.contains(&format!("power {k}"))));
        }
    }
    let not = DerivationCandidate::new(GradedLinearMap::identity(2), 0);
    assert!(matches!(
        check_derivation_closure(&d0, &not, &f.algebra, &opts()),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn inner_derivations_raise_the_power() {
    let f = fixture("g3_1_1", "a=2");
    // alpha = diag(1, a) fixes e0
    let e0 = Element::basis(0);
    for k in 0..3 {
        let c = inner_derivation(&f.algebra, std::slice::from_ref(&e0), k).unwrap();
        assert_eq!(c.power, k + 1);
        assert_eq!(c.parity(), Parity::Even);
        assert!(check_derivation(&c, &f.algebra, &opts()).unwrap().passed);
    }
    let err = inner_derivation(&f.algebra, &[Element::basis(1)], 0).unwrap_err();
    assert!(matches!(err, Error::FixedPointViolation { index: 1, .. }));

    // an odd inner derivation on the untwisted osp(1,2)
    let f = fixture("osp12", "lambda=1");
    let c = inner_derivation(&f.algebra, &[Element::basis(3)], 0).unwrap();
    assert_eq!(c.parity(), Parity::Odd);
    assert!(check_derivation(&c, &f.algebra, &opts()).unwrap().passed);
}

#[test]
fn quasi_and_generalized_derivations() {
    let f = fixture("g5_1_1", "a=1");
    let id = GradedLinearMap::identity(2);
    let two = id.scaled(&s(2));
    assert!(
        check_quasi_derivation(
            &QuasiPair::new(id.clone(), two.clone(), 0).unwrap(),
            &f.algebra,
            &opts()
        )
        .unwrap()
        .passed
    );
    assert!(
        !check_quasi_derivation(&QuasiPair::new(id.clone(), id.clone(), 0).unwrap(), &f.algebra, &opts())
            .unwrap()
            .passed
    );
    let t = GeneralizedTuple::new(vec![id.clone(), id.clone(), two], 0).unwrap();
    assert!(check_generalized_derivation(&t, &f.algebra, &opts()).unwrap().passed);
    let t = GeneralizedTuple::new(vec![id.clone(), id], 0).unwrap();
    assert!(matches!(
        check_generalized_derivation(&t, &f.algebra, &opts()),
        Err(Error::ArityMismatch { .. })
    ));

    let odd = GradedLinearMap::from_columns(f.algebra.space(), Parity::Odd, vec![Element::basis(1), Element::zero()])
        .unwrap();
    assert!(QuasiPair::new(GradedLinearMap::identity(2), odd.clone(), 0).is_err());
    assert!(GeneralizedTuple::new(vec![GradedLinearMap::identity(2), odd], 0).is_err());
}
