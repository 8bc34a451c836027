//! Rota-Baxter operators of weight λ on binary and n-ary Hom-superalgebras.

use crate::algebra::HomSuperAlgebra;
use crate::bracket::NaryBracket;
use crate::cochains::{check_induction_conditions, phi_induced_bracket, SuperCochain};
use crate::derivations::{check_derivation_with_alpha, DerivationCandidate};
use crate::error::{Error, Result};
use crate::iterated::{iterated_bracket, TWIST_NOTE};
use crate::map::GradedLinearMap;
use crate::report::{self, CheckOptions, CheckReport, Equivalence, Implication};
use crate::scalar::Scalar;
use crate::sign::{gamma_exponent, to_scalar};
use crate::space::Element;
use crate::tuples::tuples;

/// An even map `R` with weight `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotaBaxterOperator {
    pub map: GradedLinearMap,
    pub weight: Scalar,
}

impl RotaBaxterOperator {
    pub fn new(map: GradedLinearMap, weight: Scalar) -> Result<Self> {
        if !map.is_even() {
            return Err(Error::NotEven("Rota-Baxter operator"));
        }
        Ok(RotaBaxterOperator { map, weight })
    }

    /// Weight zero.
    pub fn zero_weight(map: GradedLinearMap) -> Result<Self> {
        Self::new(map, Scalar::zero())
    }

    pub fn scaled(&self, mu: &Scalar) -> Self {
        RotaBaxterOperator {
            map: self.map.scaled(mu),
            weight: &self.weight * mu,
        }
    }
}

fn check_dim(alg: &HomSuperAlgebra, m: &GradedLinearMap) -> Result<()> {
    if m.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: m.dim(),
        });
    }
    Ok(())
}

/// `λ^{|I|-1}` for each nonempty subset `I` (bit `i` set when slot `i` is in
/// `I`), with `0^0 = 1`. Subsets of zero weight are dropped.
fn weighted_subsets(n: usize, weight: &Scalar) -> Vec<(u32, Scalar)> {
    (1u32..1 << n)
        .filter_map(|mask| {
            let c = weight.pow(mask.count_ones() as i32 - 1);
            (!c.is_zero()).then_some((mask, c))
        })
        .collect()
}

/// Tables `[R̂ x_1, .., R̂ x_n]` for every weighted subset.
fn subset_tables(bracket: &NaryBracket, r: &GradedLinearMap, weight: &Scalar) -> Vec<(NaryBracket, Scalar)> {
    let n = bracket.arity();
    weighted_subsets(n, weight)
        .into_iter()
        .map(|(mask, c)| {
            let maps: Vec<_> = (0..n).map(|i| (mask & (1 << i) == 0).then_some(r)).collect();
            (bracket.precompose(&maps), c)
        })
        .collect()
}

/// `Σ_{∅≠I⊆[n]} λ^{|I|-1} [R̂ x_1, .., R̂ x_n]` for arbitrary arguments,
/// where `R̂` is the identity on slots in `I` and `R` elsewhere.
pub fn rb_subset_sum(op: &RotaBaxterOperator, alg: &HomSuperAlgebra, args: &[&Element]) -> Result<Element> {
    let n = alg.arity();
    if args.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: args.len(),
        });
    }
    let images: Vec<Element> = args.iter().map(|a| op.map.apply(a)).collect();
    let mut out = Element::zero();
    for (mask, c) in weighted_subsets(n, &op.weight) {
        let slot: Vec<&Element> = (0..n)
            .map(|i| if mask & (1 << i) != 0 { args[i] } else { &images[i] })
            .collect();
        out.add_scaled(&alg.bracket().eval(&slot), &c);
    }
    Ok(out)
}

/// The ternary identity written out term by term:
/// `[Rx,Ry,z] + [Rx,y,Rz] + [x,Ry,Rz] + λ([Rx,y,z] + [x,Ry,z] + [x,y,Rz]) + λ²[x,y,z]`.
pub fn rb_ternary_expansion(
    op: &RotaBaxterOperator,
    alg: &HomSuperAlgebra,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Element> {
    if alg.arity() != 3 {
        return Err(Error::ArityMismatch {
            expected: 3,
            found: alg.arity(),
        });
    }
    let (rx, ry, rz) = (op.map.apply(x), op.map.apply(y), op.map.apply(z));
    let b = |a: &Element, c: &Element, d: &Element| alg.bracket().eval(&[a, c, d]);
    let l = &op.weight;
    let mut out = b(&rx, &ry, z);
    out.add_scaled(&b(&rx, y, &rz), &Scalar::one());
    out.add_scaled(&b(x, &ry, &rz), &Scalar::one());
    out.add_scaled(&b(&rx, y, z), l);
    out.add_scaled(&b(x, &ry, z), l);
    out.add_scaled(&b(x, y, &rz), l);
    out.add_scaled(&b(x, y, z), &(l * l));
    Ok(out)
}

fn check_commutes_with_twists(op: &RotaBaxterOperator, alg: &HomSuperAlgebra, opts: &CheckOptions) -> CheckReport {
    let mut twists: Vec<&GradedLinearMap> = Vec::new();
    for t in alg.twists() {
        if !twists.contains(&t) {
            twists.push(t);
        }
    }
    let items: Vec<usize> = (0..alg.dim()).collect();
    report::run("commutes-with-alpha", alg.space(), opts, items, |&c, tally| {
        for (i, a) in twists.iter().enumerate() {
            let ctx = (twists.len() > 1).then(|| format!("twist {}", i + 1));
            tally.check(&[c], ctx, op.map.apply(a.column(c)), a.apply(op.map.column(c)));
        }
    })
}

/// `Rα = αR` and `[R x_1, .., R x_n] = R(Σ_{∅≠I⊆[n]} λ^{|I|-1} [R̂ x_1, .., R̂ x_n])`.
pub fn check_rb_nary(op: &RotaBaxterOperator, alg: &HomSuperAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    check_dim(alg, &op.map)?;
    let n = alg.arity();
    let commute = check_commutes_with_twists(op, alg, opts);
    let all_r = alg.bracket().precompose(&vec![Some(&op.map); n]);
    let tables = subset_tables(alg.bracket(), &op.map, &op.weight);
    let items: Vec<Vec<usize>> = tuples(alg.dim(), n).collect();
    let identity = report::run("rota-baxter-identity", alg.space(), opts, items, |t, tally| {
        let mut inner = Element::zero();
        for (table, c) in &tables {
            inner.add_scaled(table.get(t), c);
        }
        tally.check(t, None, all_r.get(t).clone(), op.map.apply(&inner));
    });
    Ok(CheckReport::composite(
        format!("rota-baxter weight {}", op.weight),
        vec![commute, identity],
    ))
}

/// The binary case `R(x)R(y) = R(R(x)y + xR(y) + λxy)`.
pub fn check_rb_binary(op: &RotaBaxterOperator, alg: &HomSuperAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    if alg.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: alg.arity(),
        });
    }
    check_rb_nary(op, alg, opts)
}

/// An invertible even `R` is Rota-Baxter of weight 0 exactly when `R^{-1}` is
/// an even derivation (`k = 0`).
pub fn check_inverse_derivation_equiv(
    r: &GradedLinearMap,
    alg: &HomSuperAlgebra,
    opts: &CheckOptions,
) -> Result<Equivalence> {
    check_dim(alg, r)?;
    let alpha = alg.alpha()?;
    let op = RotaBaxterOperator::zero_weight(r.clone())?;
    let inv = r.inverse()?;
    let left = check_rb_nary(&op, alg, opts)?;
    let right = check_derivation_with_alpha(&DerivationCandidate::new(inv, 0), alg, alpha, opts)?;
    Ok(Equivalence {
        statement: "R is Rota-Baxter of weight 0 iff R^-1 is an even derivation".into(),
        left,
        right,
        notes: Vec::new(),
    })
}

/// Compares two readings of "R is Rota-Baxter of weight 0 on `[·,..,·]_φ`":
/// the kernel condition
/// `Σ_{k<l} (-1)^{k+l+1}(-1)^{γ_kl} (Σ_{i≠k,l} φ(R x_1, .., x_i, .., R x_n)) [R x_k, R x_l] ∈ ker R`
/// (hats on `k, l`), and a direct check on the induced `n`-bracket.
///
/// `(alg, φ)` must satisfy the induction conditions. Whether `R` is
/// Rota-Baxter of weight 0 on `alg` itself is recorded as a note.
pub fn check_phi_rb_kernel_condition(
    r: &GradedLinearMap,
    phi: &SuperCochain,
    alg: &HomSuperAlgebra,
    opts: &CheckOptions,
) -> Result<Equivalence> {
    check_dim(alg, r)?;
    let op = RotaBaxterOperator::zero_weight(r.clone())?;
    if !check_induction_conditions(phi, alg, opts)?.passed {
        return Err(Error::Precondition(
            "cochain does not satisfy the induction conditions".into(),
        ));
    }
    let n = phi.degree() + 2;
    let space = alg.space();
    let rr = alg.bracket().precompose(&[Some(r), Some(r)]);
    let items: Vec<Vec<usize>> = tuples(alg.dim(), n).collect();
    let kernel = report::run("kernel-condition", space, opts, items, |t, tally| {
        let p = space.tuple_parities(t);
        let basis: Vec<Element> = t.iter().map(|&j| Element::basis(j)).collect();
        let mut sum = Element::zero();
        for k in 0..n {
            for l in k + 1..n {
                let br = rr.get(&[t[k], t[l]]);
                if br.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = (0..n).filter(|&j| j != k && j != l).collect();
                let mut weight = Scalar::zero();
                for &i in &rest {
                    let args: Vec<&Element> = rest
                        .iter()
                        .map(|&j| if j == i { &basis[j] } else { r.column(t[j]) })
                        .collect();
                    weight += &phi.eval(&args);
                }
                if weight.is_zero() {
                    continue;
                }
                let negative = (k + l + 3) % 2 == 1;
                let sign = to_scalar(negative ^ gamma_exponent(&p, k + 1, l + 1).is_odd());
                sum.add_scaled(br, &(sign * weight));
            }
        }
        tally.count(1);
        if !r.kernel_contains(&sum) {
            tally.fail(t, None, r.apply(&sum).into(), Element::zero().into());
        }
    });
    let induced = phi_induced_bracket(phi, alg, n)?;
    let direct = check_rb_nary(&op, &induced, opts)?;
    let binary = check_rb_binary(&op, alg, opts)?;
    let note = if binary.passed {
        "R is Rota-Baxter of weight 0 on the base algebra"
    } else {
        "R is not Rota-Baxter of weight 0 on the base algebra"
    };
    Ok(Equivalence {
        statement: format!("kernel condition iff R is Rota-Baxter of weight 0 on the induced {n}-bracket"),
        left: kernel,
        right: direct,
        notes: vec![note.into()],
    })
}

/// A weight-0 Rota-Baxter operator of `alg` stays one on the iterated
/// `n`-bracket.
pub fn check_rb_iterated_transfer(
    r: &GradedLinearMap,
    alg: &HomSuperAlgebra,
    n: usize,
    opts: &CheckOptions,
) -> Result<Implication> {
    let op = RotaBaxterOperator::zero_weight(r.clone())?;
    let hypothesis = check_rb_binary(&op, alg, opts)?;
    let conclusion = if hypothesis.passed {
        let g = iterated_bracket(alg, n)?;
        Some(check_rb_nary(&op, &g, opts)?.with_note(TWIST_NOTE))
    } else {
        None
    };
    Ok(Implication {
        statement: format!("Rota-Baxter operator transfers to the iterated {n}-bracket"),
        hypothesis,
        conclusion,
    })
}
