//! 3-Hom-pre-Lie superalgebras and the ternary brackets they produce.

use crate::algebra::HomSuperAlgebra;
use crate::axioms::{check_identities, Identity};
use crate::bracket::NaryBracket;
use crate::error::{Error, Result};
use crate::map::GradedLinearMap;
use crate::report::{self, CheckOptions, CheckReport};
use crate::rotabaxter::{check_rb_nary, RotaBaxterOperator};
use crate::scalar::Scalar;
use crate::sign::to_scalar;
use crate::space::{Element, Parity, SuperSpace};
use crate::tuples::tuples;

/// A ternary product `{x, y, z}` with twist `α`. Only the swap of the first
/// two arguments carries a symmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriProduct {
    name: String,
    space: SuperSpace,
    product: NaryBracket,
    twist: GradedLinearMap,
}

impl TriProduct {
    pub fn new(
        name: impl Into<String>,
        space: SuperSpace,
        product: NaryBracket,
        twist: GradedLinearMap,
    ) -> Result<Self> {
        if product.arity() != 3 {
            return Err(Error::ArityMismatch {
                expected: 3,
                found: product.arity(),
            });
        }
        for d in [product.dim(), twist.dim()] {
            if d != space.dim() {
                return Err(Error::DimensionMismatch {
                    expected: space.dim(),
                    found: d,
                });
            }
        }
        if !twist.is_even() {
            return Err(Error::NotEven("twist"));
        }
        if let Some(t) = product.grading_violations(&space).first() {
            return Err(Error::GradingViolation {
                tuple: space.labels_of(t),
                detail: format!(
                    "value {} is not of the expected parity",
                    space.format_element(product.get(t))
                ),
            });
        }
        Ok(TriProduct {
            name: name.into(),
            space,
            product,
            twist,
        })
    }

    /// Fills in `{y, x, z} = -(-1)^{|x||y|}{x, y, z}` from the listed entries.
    pub fn from_generators(
        name: impl Into<String>,
        space: SuperSpace,
        generators: impl IntoIterator<Item = (Vec<usize>, Element)>,
        twist: GradedLinearMap,
    ) -> Result<Self> {
        let generators: Vec<_> = generators.into_iter().collect();
        for (t, v) in &generators {
            if t.len() != 3 {
                return Err(Error::ArityMismatch {
                    expected: 3,
                    found: t.len(),
                });
            }
            if let Some(&i) = t.iter().find(|&&i| i >= space.dim()) {
                return Err(Error::BasisIndexOutOfRange {
                    index: i,
                    dim: space.dim(),
                });
            }
            space.check_element(v)?;
        }
        let product = NaryBracket::from_orbits(&space, 3, generators, &[0])?;
        Self::new(name, space, product, twist)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn product(&self) -> &NaryBracket {
        &self.product
    }

    pub fn twist(&self) -> &GradedLinearMap {
        &self.twist
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    fn p(&self, i: usize) -> Parity {
        self.space.parity(i)
    }
}

/// `table[t with slot pos replaced by v]`, extended linearly in `v`.
fn plug(table: &NaryBracket, t: [usize; 3], pos: usize, v: &Element) -> Element {
    let mut u = t;
    let mut out = Element::zero();
    for (c, coeff) in v.terms() {
        u[pos] = c;
        out.add_scaled(table.get(&u), coeff);
    }
    out
}

fn sign(p: Parity) -> Scalar {
    to_scalar(p.is_odd())
}

/// Precomputed tables shared by the 5-argument identities.
struct Tables {
    /// `{x, y, z}`
    p: NaryBracket,
    /// `[x, y, z]_C`
    c: NaryBracket,
    /// `{αx, αy, z}`
    a: NaryBracket,
    /// `{x, αy, αz}`
    q: NaryBracket,
    /// `{αx, y, αz}`
    m: NaryBracket,
}

impl Tables {
    fn new(t: &TriProduct) -> Self {
        let al = Some(&t.twist);
        Tables {
            p: t.product.clone(),
            c: commutator_table(t),
            a: t.product.precompose(&[al, al, None]),
            q: t.product.precompose(&[None, al, al]),
            m: t.product.precompose(&[al, None, al]),
        }
    }

    /// `{αa, αb, {c, d, e}}`
    fn outer_inner(&self, a: usize, b: usize, c: usize, d: usize, e: usize) -> Element {
        plug(&self.a, [a, b, 0], 2, self.p.get(&[c, d, e]))
    }

    /// `{[a, b, c]_C, αd, αe}`
    fn comm_first(&self, a: usize, b: usize, c: usize, d: usize, e: usize) -> Element {
        plug(&self.q, [0, d, e], 0, self.c.get(&[a, b, c]))
    }
}

fn commutator_table(t: &TriProduct) -> NaryBracket {
    let pr = &t.product;
    NaryBracket::from_fn(t.dim(), 3, |u| {
        let (x, y, z) = (u[0], u[1], u[2]);
        let (px, py, pz) = (t.p(x), t.p(y), t.p(z));
        let mut out = pr.get(&[x, y, z]).clone();
        out.add_scaled(pr.get(&[y, z, x]), &sign(px * (py + pz)));
        out.add_scaled(pr.get(&[z, x, y]), &sign(pz * (px + py)));
        out
    })
}

fn check_d1(t: &TriProduct, opts: &CheckOptions) -> CheckReport {
    let items: Vec<Vec<usize>> = tuples(t.dim(), 3).collect();
    report::run("d1", &t.space, opts, items, |u, tally| {
        let rhs = t.product.get(&[u[1], u[0], u[2]]).scaled(&-sign(t.p(u[0]) * t.p(u[1])));
        tally.check(u, None, t.product.get(u).clone(), rhs);
    })
}

/// The three defining identities of a 3-Hom-pre-Lie superalgebra:
///
/// - d1: `{x, y, z} = -(-1)^{|x||y|}{y, x, z}`
/// - d2: `{αx1, αx2, {x3, x4, x5}} = {[x1, x2, x3]_C, αx4, αx5}
///   + (-1)^{|x3|(|x1|+|x2|)}{αx3, [x1, x2, x4]_C, αx5}
///   + (-1)^{(|x1|+|x2|)(|x3|+|x4|)}{αx3, αx4, {x1, x2, x5}}`
/// - d3: `{[x1, x2, x3]_C, αx4, αx5} = {αx1, αx2, {x3, x4, x5}}
///   + (-1)^{|x1|(|x2|+|x3|)}{αx2, αx3, {x1, x4, x5}}
///   + (-1)^{|x3|(|x1|+|x2|)}{αx3, αx1, {x2, x4, x5}}`
pub fn check_3_pre_lie(t: &TriProduct, opts: &CheckOptions) -> CheckReport {
    let tb = Tables::new(t);
    let items: Vec<Vec<usize>> = tuples(t.dim(), 5).collect();
    let d1 = check_d1(t, opts);
    let d2 = report::run("d2", &t.space, opts, items.clone(), |u, tally| {
        let [x1, x2, x3, x4, x5] = [u[0], u[1], u[2], u[3], u[4]];
        let (p1, p2, p3, p4) = (t.p(x1), t.p(x2), t.p(x3), t.p(x4));
        let lhs = tb.outer_inner(x1, x2, x3, x4, x5);
        let mut rhs = tb.comm_first(x1, x2, x3, x4, x5);
        rhs.add_scaled(
            &plug(&tb.m, [x3, 0, x5], 1, tb.c.get(&[x1, x2, x4])),
            &sign(p3 * (p1 + p2)),
        );
        rhs.add_scaled(&tb.outer_inner(x3, x4, x1, x2, x5), &sign((p1 + p2) * (p3 + p4)));
        tally.check(u, None, lhs, rhs);
    });
    let d3 = report::run("d3", &t.space, opts, items, |u, tally| {
        let [x1, x2, x3, x4, x5] = [u[0], u[1], u[2], u[3], u[4]];
        let (p1, p2, p3) = (t.p(x1), t.p(x2), t.p(x3));
        let lhs = tb.comm_first(x1, x2, x3, x4, x5);
        let mut rhs = tb.outer_inner(x1, x2, x3, x4, x5);
        rhs.add_scaled(&tb.outer_inner(x2, x3, x1, x4, x5), &sign(p1 * (p2 + p3)));
        rhs.add_scaled(&tb.outer_inner(x3, x1, x2, x4, x5), &sign(p3 * (p1 + p2)));
        tally.check(u, None, lhs, rhs);
    });
    CheckReport::composite(format!("3-hom-pre-lie {}", t.name), vec![d1, d2, d3])
}

/// `[x, y, z]_C = {x, y, z} + (-1)^{|x|(|y|+|z|)}{y, z, x} + (-1)^{|z|(|x|+|y|)}{z, x, y}`
/// with twists `(α, α)`. Requires d1.
pub fn supercommutator3(t: &TriProduct) -> Result<HomSuperAlgebra> {
    if !check_d1(t, &CheckOptions::with_cap(1)).passed {
        return Err(Error::Precondition(
            "product is not super-skew in its first two arguments".into(),
        ));
    }
    HomSuperAlgebra::with_alpha(
        format!("{}_C", t.name),
        t.space.clone(),
        commutator_table(t),
        t.twist.clone(),
    )
}

/// The 3-supercommutator of a 3-Hom-pre-Lie superalgebra together with its
/// verification as a 3-Hom-Lie superalgebra.
pub fn sub_adjacent(t: &TriProduct, opts: &CheckOptions) -> Result<(HomSuperAlgebra, CheckReport)> {
    if !check_3_pre_lie(t, &CheckOptions::with_cap(1)).passed {
        return Err(Error::Precondition("product is not 3-Hom-pre-Lie".into()));
    }
    let alg = supercommutator3(t)?;
    let r = check_identities(&alg, &[Identity::Grading, Identity::SuperSkew, Identity::Nambu], opts)?;
    Ok((alg, r))
}

/// The two 5-argument identities every 3-Hom-pre-Lie superalgebra satisfies:
///
/// 1. `{[x1,x2,x3]_C, αx4, αx5} - (-1)^{|x3||x4|}{[x1,x2,x4]_C, αx3, αx5}
///    + (-1)^{|x2|(|x3|+|x4|)}{[x1,x3,x4]_C, αx2, αx5}
///    - (-1)^{|x1|(|x2|+|x3|+|x4|)}{[x2,x3,x4]_C, αx1, αx5} = 0`
/// 2. `{αx1,αx2,{x3,x4,x5}} + (-1)^{(|x1|+|x2|)(|x3|+|x4|)}{αx3,αx4,{x1,x2,x5}}
///    + (-1)^{|x1|(|x2|+|x3|+|x4|)+|x3||x4|}{αx2,αx4,{x3,x1,x5}}
///    + (-1)^{|x3|(|x1|+|x2|)}{αx3,αx1,{x2,x4,x5}}
///    + (-1)^{|x1|(|x2|+|x3|)}{αx2,αx3,{x1,x4,x5}}
///    + (-1)^{|x4|(|x2|+|x3|)}{αx1,αx4,{x2,x3,x5}} = 0`
pub fn check_corollary_identities(t: &TriProduct, opts: &CheckOptions) -> CheckReport {
    let tb = Tables::new(t);
    let items: Vec<Vec<usize>> = tuples(t.dim(), 5).collect();
    let first = report::run("identity-1", &t.space, opts, items.clone(), |u, tally| {
        let [x1, x2, x3, x4, x5] = [u[0], u[1], u[2], u[3], u[4]];
        let (p1, p2, p3, p4) = (t.p(x1), t.p(x2), t.p(x3), t.p(x4));
        let mut sum = tb.comm_first(x1, x2, x3, x4, x5);
        sum.add_scaled(&tb.comm_first(x1, x2, x4, x3, x5), &-sign(p3 * p4));
        sum.add_scaled(&tb.comm_first(x1, x3, x4, x2, x5), &sign(p2 * (p3 + p4)));
        sum.add_scaled(&tb.comm_first(x2, x3, x4, x1, x5), &-sign(p1 * (p2 + p3 + p4)));
        tally.check(u, None, sum, Element::zero());
    });
    let second = report::run("identity-2", &t.space, opts, items, |u, tally| {
        let [x1, x2, x3, x4, x5] = [u[0], u[1], u[2], u[3], u[4]];
        let (p1, p2, p3, p4) = (t.p(x1), t.p(x2), t.p(x3), t.p(x4));
        let mut sum = tb.outer_inner(x1, x2, x3, x4, x5);
        sum.add_scaled(&tb.outer_inner(x3, x4, x1, x2, x5), &sign((p1 + p2) * (p3 + p4)));
        sum.add_scaled(
            &tb.outer_inner(x2, x4, x3, x1, x5),
            &sign(p1 * (p2 + p3 + p4) + p3 * p4),
        );
        sum.add_scaled(&tb.outer_inner(x3, x1, x2, x4, x5), &sign(p3 * (p1 + p2)));
        sum.add_scaled(&tb.outer_inner(x2, x3, x1, x4, x5), &sign(p1 * (p2 + p3)));
        sum.add_scaled(&tb.outer_inner(x1, x4, x2, x3, x5), &sign(p4 * (p2 + p3)));
        tally.check(u, None, sum, Element::zero());
    });
    CheckReport::composite("corollary-identities", vec![first, second])
}

fn require_3_hom_lie(alg: &HomSuperAlgebra) -> Result<&GradedLinearMap> {
    if alg.arity() != 3 {
        return Err(Error::ArityMismatch {
            expected: 3,
            found: alg.arity(),
        });
    }
    let alpha = alg.alpha()?;
    let r = check_identities(alg, &[Identity::SuperSkew, Identity::Nambu], &CheckOptions::with_cap(1))?;
    if !r.passed {
        return Err(Error::Precondition(format!(
            "{} is not a 3-Hom-Lie superalgebra",
            alg.name()
        )));
    }
    Ok(alpha)
}

fn require_rb0(op: &RotaBaxterOperator, alg: &HomSuperAlgebra) -> Result<()> {
    if !op.weight.is_zero() {
        return Err(Error::Precondition("Rota-Baxter operator must have weight 0".into()));
    }
    if !check_rb_nary(op, alg, &CheckOptions::with_cap(1))?.passed {
        return Err(Error::Precondition(
            "map is not a Rota-Baxter operator of weight 0".into(),
        ));
    }
    Ok(())
}

/// `{x, y, z} = [R x, R y, z]` for a weight-0 Rota-Baxter operator `R` on a
/// 3-Hom-Lie superalgebra. The report covers the pre-Lie axioms and
/// `R([x, y, z]_C) = [R x, R y, R z]`.
pub fn rb_induced_prelie(
    alg: &HomSuperAlgebra,
    op: &RotaBaxterOperator,
    opts: &CheckOptions,
) -> Result<(TriProduct, CheckReport)> {
    let alpha = require_3_hom_lie(alg)?.clone();
    require_rb0(op, alg)?;
    let r = &op.map;
    let product = alg.bracket().precompose(&[Some(r), Some(r), None]);
    let t = TriProduct::new(format!("{}_R", alg.name()), alg.space().clone(), product, alpha)?;
    let axioms = check_3_pre_lie(&t, opts);
    let comm = commutator_table(&t);
    let all_r = alg.bracket().precompose(&[Some(r), Some(r), Some(r)]);
    let items: Vec<Vec<usize>> = tuples(alg.dim(), 3).collect();
    let morphism = report::run("morphism", alg.space(), opts, items, |u, tally| {
        tally.check(u, None, r.apply(comm.get(u)), all_r.get(u).clone());
    });
    Ok((
        t,
        CheckReport::composite("rota-baxter-induced pre-Lie", vec![axioms, morphism]),
    ))
}

/// `{x, y, z}_A = R([x, y, R^{-1} z])` for an invertible weight-0
/// Rota-Baxter operator. The report checks that its 3-supercommutator is the
/// original bracket.
pub fn rb_image_prelie(
    alg: &HomSuperAlgebra,
    r: &GradedLinearMap,
    opts: &CheckOptions,
) -> Result<(TriProduct, CheckReport)> {
    let alpha = require_3_hom_lie(alg)?.clone();
    let inv = r.inverse()?;
    let op = RotaBaxterOperator::zero_weight(r.clone())?;
    require_rb0(&op, alg)?;
    let product = alg.bracket().precompose(&[None, None, Some(&inv)]).postcompose(r);
    let t = TriProduct::new(format!("{}_A", alg.name()), alg.space().clone(), product, alpha)?;
    let comm = commutator_table(&t);
    let items: Vec<Vec<usize>> = tuples(alg.dim(), 3).collect();
    let compat = report::run("compatibility", alg.space(), opts, items, |u, tally| {
        tally.check(u, None, comm.get(u).clone(), alg.bracket().get(u).clone());
    });
    Ok((t, compat))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_product_is_pre_lie() {
        let v = SuperSpace::new([("a", Parity::Even), ("b", Parity::Odd)]).unwrap();
        let t = TriProduct::new("zero", v, NaryBracket::zero(2, 3), GradedLinearMap::identity(2)).unwrap();
        let opts = CheckOptions::default();
        assert!(check_3_pre_lie(&t, &opts).passed);
        assert!(check_corollary_identities(&t, &opts).passed);
        let (alg, r) = sub_adjacent(&t, &opts).unwrap();
        assert!(r.passed);
        assert!(alg.bracket().is_zero());
    }

    #[test]
    fn symmetric_even_pair_breaks_d1() {
        let v = SuperSpace::new([("a", Parity::Even), ("b", Parity::Even)]).unwrap();
        let p = NaryBracket::from_entries(
            &v,
            3,
            [(vec![0, 1, 0], Element::basis(0)), (vec![1, 0, 0], Element::basis(0))],
        )
        .unwrap();
        let t = TriProduct::new("sym", v, p, GradedLinearMap::identity(2)).unwrap();
        let r = check_3_pre_lie(&t, &CheckOptions::default());
        assert!(!r.section("d1").unwrap().passed);
        assert_eq!(r.section("d1").unwrap().witness_tuples()[0], vec![0, 1, 0]);
        assert!(supercommutator3(&t).is_err());
    }
}
