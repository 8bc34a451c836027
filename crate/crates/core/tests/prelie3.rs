mod common;

use common::*;
use hom_nambu::axioms::{check_identities, Identity};
use hom_nambu::bracket::NaryBracket;
use hom_nambu::cochains::phi_induced_bracket;
use hom_nambu::error::Error;
use hom_nambu::map::GradedLinearMap;
use hom_nambu::prelie3::{
    check_3_pre_lie, check_corollary_identities, rb_image_prelie, rb_induced_prelie, sub_adjacent, supercommutator3,
    TriProduct,
};
use hom_nambu::report::CheckOptions;
use hom_nambu::rotabaxter::RotaBaxterOperator;
use hom_nambu::space::{Element, Parity, SuperSpace};
use hom_nambu::tuples::tuples;
use proptest::prelude::*;

fn opts() -> CheckOptions {
    CheckOptions::default()
}

fn space(bits: &[bool]) -> SuperSpace {
    SuperSpace::new(
        bits.iter()
            .enumerate()
            .map(|(i, &b)| (format!("e{i}"), if b { Parity::Odd } else { Parity::Even })),
    )
    .unwrap()
}

/// A product skew in its first two arguments, filled from random generators.
fn random_d1(bits: &[bool], coeffs: &[i64]) -> TriProduct {
    let v = space(bits);
    let d = bits.len();
    let mut k = coeffs.iter().cycle();
    let mut gens = Vec::new();
    for t in tuples(d, 3).filter(|t| t[0] <= t[1]) {
        let want = v.parity(t[0]) + v.parity(t[1]) + v.parity(t[2]);
        let mut val = Element::zero();
        for m in 0..d {
            let c = *k.next().unwrap();
            if v.parity(m) == want && (t[0] != t[1] || bits[t[0]]) && c != 0 {
                val.add_term(m, &s(c));
            }
        }
        gens.push((t, val));
    }
    TriProduct::from_generators("random", v, gens, GradedLinearMap::identity(d)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn commutator_of_a_d1_product_is_skew(
        (bits, coeffs) in (2usize..4).prop_flat_map(|d| (
            proptest::collection::vec(any::<bool>(), d),
            proptest::collection::vec(prop_oneof![2 => Just(0i64), 1 => -2i64..=2], 81),
        ))
    ) {
        let t = random_d1(&bits, &coeffs);
        let c = supercommutator3(&t).unwrap();
        let p = |i: usize| t.space().parity(i);
        for u in tuples(t.dim(), 3) {
            for perm in [[1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]] {
                let w: Vec<usize> = perm.iter().map(|&i| u[i]).collect();
                let parities: Vec<Parity> = u.iter().map(|&i| p(i)).collect();
                let sign = inversion_sign(&parities, &perm);
                prop_assert_eq!(c.bracket().get(&w), &c.bracket().get(&u).scaled(&sign));
            }
        }
    }

    #[test]
    fn scaling_r_scales_the_product(mu in prop_oneof![Just(2i64), Just(-1), Just(3)]) {
        let f = fixture("a4", "");
        let op = RotaBaxterOperator::zero_weight(f.operator("R").unwrap().map.clone()).unwrap();
        let (base, _) = rb_induced_prelie(&f.algebra, &op, &opts()).unwrap();
        let (scaled, r) = rb_induced_prelie(&f.algebra, &op.scaled(&s(mu)), &opts()).unwrap();
        prop_assert!(r.passed);
        prop_assert_eq!(scaled.product(), &base.product().map_values(|e| e.scaled(&s(mu * mu))));
    }
}

#[test]
fn zero_product_is_pre_lie() {
    let t = TriProduct::new(
        "zero",
        space(&[false, true, true]),
        NaryBracket::zero(3, 3),
        GradedLinearMap::identity(3),
    )
    .unwrap();
    assert!(check_3_pre_lie(&t, &opts()).passed);
    assert!(check_corollary_identities(&t, &opts()).passed);
    let (c, r) = sub_adjacent(&t, &opts()).unwrap();
    assert!(r.passed && c.bracket().is_zero());
}

#[test]
fn d1_failure_has_a_witness() {
    let v = space(&[false, false]);
    let product = NaryBracket::from_entries(&v, 3, [(vec![0, 1, 0], Element::basis(0))]).unwrap();
    let t = TriProduct::new("lopsided", v, product, GradedLinearMap::identity(2)).unwrap();
    let r = check_3_pre_lie(&t, &opts());
    let d1 = r.section("d1").unwrap();
    assert!(!d1.passed);
    assert_eq!(d1.witness_tuples(), vec![vec![0, 1, 0], vec![1, 0, 0]]);
    assert!(matches!(supercommutator3(&t), Err(Error::Precondition(_))));
}

#[test]
fn fully_skew_product_triples() {
    let f = fixture("a4", "");
    let t = TriProduct::new(
        "a4",
        f.algebra.space().clone(),
        f.algebra.bracket().clone(),
        f.algebra.twists()[0].clone(),
    )
    .unwrap();
    let c = supercommutator3(&t).unwrap();
    assert_eq!(c.bracket(), &f.algebra.bracket().map_values(|e| e.scaled(&s(3))));
}

#[test]
fn projection_onto_e1_gives_the_zero_product() {
    let f = fixture("L1", "a=1,b=3");
    let g = phi_induced_bracket(f.cochain("phi").unwrap(), &f.algebra, 3).unwrap();
    let op = RotaBaxterOperator::zero_weight(f.operator("P1").unwrap().map.clone()).unwrap();
    let (t, r) = rb_induced_prelie(&g, &op, &opts()).unwrap();
    assert!(r.passed);
    assert!(t.product().is_zero());
}

#[test]
fn a4_end_to_end() {
    let f = fixture("a4", "");
    let r = f.operator("R").unwrap().map.clone();
    let op = RotaBaxterOperator::zero_weight(r.clone()).unwrap();
    let (t, report) = rb_induced_prelie(&f.algebra, &op, &opts()).unwrap();
    assert!(report.passed, "{}", report.render_text());
    assert!(!t.product().is_zero());
    assert!(check_corollary_identities(&t, &opts()).passed);
    let (c, sub) = sub_adjacent(&t, &opts()).unwrap();
    assert!(sub.passed);
    let ids = [Identity::Grading, Identity::SuperSkew, Identity::Nambu];
    assert!(check_identities(&c, &ids, &opts()).unwrap().passed);
    // R intertwines the sub-adjacent bracket with the original one
    for u in tuples(4, 3) {
        let rr: Vec<Element> = u.iter().map(|&i| r.apply(&Element::basis(i))).collect();
        let refs: Vec<&Element> = rr.iter().collect();
        assert_eq!(r.apply(c.bracket().get(&u)), f.algebra.bracket().eval(&refs));
    }
    // R = -J is invertible: the image construction recovers the bracket
    let (a, compat) = rb_image_prelie(&f.algebra, &r, &opts()).unwrap();
    assert!(compat.passed);
    assert!(check_3_pre_lie(&a, &opts()).passed);
}

#[test]
fn corollary_identities_on_induced_products() {
    let mut checked = 0;
    for (name, p) in [("L1", "a=2,b=5"), ("osp12_t", "lambda=2")] {
        let f = fixture(name, p);
        let g = phi_induced_bracket(f.cochain("phi").unwrap(), &f.algebra, 3).unwrap();
        for o in &f.operators {
            if o.target.as_deref() != Some("phi:3") {
                continue;
            }
            let op = RotaBaxterOperator::zero_weight(o.map.clone()).unwrap();
            let Ok((t, r)) = rb_induced_prelie(&g, &op, &opts()) else {
                continue;
            };
            assert!(r.passed, "{name} {}", o.name);
            assert!(check_corollary_identities(&t, &opts()).passed, "{name} {}", o.name);
            checked += 1;
        }
    }
    assert!(checked >= 4, "only {checked} operators checked");
}

#[test]
fn preconditions() {
    let f = fixture("g5_1_1", "a=2");
    let op = RotaBaxterOperator::zero_weight(f.operator("R").unwrap().map.clone()).unwrap();
    assert!(rb_induced_prelie(&f.algebra, &op, &opts()).is_err());
    let a4 = fixture("a4", "");
    let id = RotaBaxterOperator::zero_weight(GradedLinearMap::identity(4)).unwrap();
    assert!(matches!(
        rb_induced_prelie(&a4.algebra, &id, &opts()),
        Err(Error::Precondition(_))
    ));
    let singular = GradedLinearMap::zero(4, Parity::Even);
    assert!(matches!(
        rb_image_prelie(&a4.algebra, &singular, &opts()),
        Err(Error::Singular)
    ));
    let v = space(&[false, false]);
    assert!(matches!(
        TriProduct::new("bad", v, NaryBracket::zero(2, 2), GradedLinearMap::identity(2)),
        Err(Error::ArityMismatch { expected: 3, found: 2 })
    ));
}
