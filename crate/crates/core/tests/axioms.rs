mod common;

use common::*;
use hom_nambu::axioms::{
    check_hom_jacobi, check_identities, check_identity, check_multiplicative, check_nambu_identity, check_super_skew,
    Identity,
};
use hom_nambu::bracket::NaryBracket;
use hom_nambu::cochains::phi_induced_bracket;
use hom_nambu::error::Error;
use hom_nambu::map::GradedLinearMap;
use hom_nambu::report::CheckOptions;
use hom_nambu::tuples::tuples;
use proptest::prelude::*;

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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hom_jacobi_matches_oracle(alg in algebra_strategy()) {
        let r = check_hom_jacobi(&alg, &CheckOptions::default()).unwrap();
        let bad = tuples(alg.dim(), 3).filter(|t| !jacobi_oracle(&alg, [t[0], t[1], t[2]]).is_zero()).count();
        prop_assert_eq!(r.failures as usize, bad);
        prop_assert_eq!(r.tuples_checked as usize, alg.dim().pow(3));
    }

    #[test]
    fn binary_nambu_agrees_with_jacobi(alg in algebra_strategy()) {
        let opts = CheckOptions::with_cap(1);
        let j = check_hom_jacobi(&alg, &opts).unwrap();
        let n = check_nambu_identity(&alg, &opts);
        prop_assert_eq!(j.passed, n.passed);
    }

    #[test]
    fn multiplicative_matches_oracle(alg in algebra_strategy()) {
        let alpha = &alg.twists()[0];
        let want = tuples(alg.dim(), 2).all(|t| {
            let lhs = alpha.apply(alg.bracket().get(&t));
            let rhs = bracket2(&alg, alpha.column(t[0]), alpha.column(t[1]));
            lhs == rhs
        });
        prop_assert_eq!(check_multiplicative(&alg, &CheckOptions::default()).unwrap().passed, want);
    }

    #[test]
    fn generated_brackets_are_skew(alg in algebra_strategy()) {
        prop_assert!(check_super_skew(&alg, &CheckOptions::default()).passed);
    }

    #[test]
    fn all_even_parity_gives_classical_signs(
        coeffs in proptest::collection::vec(-2i64..=2, 27),
        alpha in proptest::collection::vec(1i64..=2, 3),
    ) {
        // with no odd vectors the super signs collapse to the ordinary ones
        let alg = random_binary(&[false; 3], &coeffs, &alpha);
        let a = &alg.twists()[0];
        let classical = tuples(3, 3).all(|t| {
            let mut sum = hom_nambu::space::Element::zero();
            for r in 0..3 {
                let (x, y, z) = (t[r], t[(r + 1) % 3], t[(r + 2) % 3]);
                sum = sum.plus(&bracket2(&alg, a.column(x), alg.bracket().get(&[y, z])));
            }
            sum.is_zero()
        });
        prop_assert_eq!(check_hom_jacobi(&alg, &CheckOptions::default()).unwrap().passed, classical);
    }
}

#[test]
fn counterexample_cap_keeps_the_count() {
    let f = fixture("osp12", "lambda=2");
    let id = f.algebra.with_twists(vec![GradedLinearMap::identity(5)]).unwrap();
    let full = check_hom_jacobi(&id, &CheckOptions::with_cap(1000)).unwrap();
    let capped = check_hom_jacobi(&id, &CheckOptions::with_cap(2)).unwrap();
    assert!(!full.passed && !capped.passed);
    assert_eq!(full.failures, capped.failures);
    assert_eq!(capped.counterexamples.len(), 2);
    assert_eq!(full.counterexamples.len() as u64, full.failures);
    // a cap of zero still keeps one witness
    assert_eq!(
        check_hom_jacobi(&id, &CheckOptions::with_cap(0))
            .unwrap()
            .counterexamples
            .len(),
        1
    );
}

#[test]
fn reports_are_deterministic() {
    let f = fixture("L1", "a=1,b=3");
    let ids = Identity::applicable(&f.algebra);
    let a = check_identities(&f.algebra, &ids, &CheckOptions::default()).unwrap();
    let b = check_identities(&f.algebra, &ids, &CheckOptions::default()).unwrap();
    assert_eq!(a.render_json(), b.render_json());
    assert_eq!(a.render_text(), b.render_text());
    assert!(!a.passed);
}

#[test]
fn non_uniform_twists() {
    let f = fixture("L1", "a=2,b=5");
    let g = phi_induced_bracket(f.cochain("phi").unwrap(), &f.algebra, 3).unwrap();
    let alpha = g.twists()[0].clone();
    let mixed = g
        .with_twists(vec![alpha.clone(), GradedLinearMap::identity(3)])
        .unwrap();
    assert!(matches!(
        check_identity(&mixed, Identity::Multiplicative, &CheckOptions::default()),
        Err(Error::NonUniformTwists)
    ));
    assert!(!Identity::applicable(&mixed).contains(&Identity::Multiplicative));
    // the Nambu identity accepts a twist per slot
    let same = g.with_twists(vec![alpha.clone(), alpha]).unwrap();
    let a = check_nambu_identity(&mixed, &CheckOptions::default());
    let b = check_nambu_identity(&same, &CheckOptions::default());
    assert!(b.passed);
    assert_eq!(a.tuples_checked, b.tuples_checked);
}

#[test]
fn jacobi_needs_a_binary_bracket() {
    let f = fixture("a4", "");
    assert!(matches!(
        check_hom_jacobi(&f.algebra, &CheckOptions::default()),
        Err(Error::ArityMismatch { expected: 2, found: 3 })
    ));
    assert!(!Identity::applicable(&f.algebra).contains(&Identity::HomJacobi));
}

#[test]
fn unchecked_algebra_reports_grading_and_skew() {
    let f = fixture("g3_1_1", "a=2");
    let v = f.algebra.space().clone();
    // [e0, e1] = e0 breaks the grading; [e1, e0] = e0 breaks the skew symmetry
    let b = NaryBracket::from_entries_unchecked(
        2,
        2,
        [
            (vec![0, 1], hom_nambu::space::Element::basis(0)),
            (vec![1, 0], hom_nambu::space::Element::basis(0)),
        ],
    )
    .unwrap();
    let alg = hom_nambu::algebra::HomSuperAlgebra::new_unchecked("broken", v, b, f.algebra.twists().to_vec());
    let r = check_identities(
        &alg,
        &[Identity::Grading, Identity::SuperSkew],
        &CheckOptions::default(),
    )
    .unwrap();
    assert!(!r.section("grading").unwrap().passed);
    assert!(!r.section("super-skew").unwrap().passed);
    assert_eq!(r.section("grading").unwrap().failures, 2);
}

#[test]
fn identity_names_parse() {
    for id in Identity::ALL {
        assert_eq!(id.name().parse::<Identity>().unwrap(), id);
    }
    assert!("associativity".parse::<Identity>().is_err());
}
