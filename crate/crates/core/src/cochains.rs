//! Scalar cochains on a binary Hom-Lie superalgebra and the n-brackets they induce.

use crate::algebra::HomSuperAlgebra;
use crate::axioms::{check_hom_jacobi, check_multiplicative};
use crate::bracket::NaryBracket;
use crate::derivations::{check_derivation, DerivationCandidate};
use crate::error::{Error, Result};
use crate::map::GradedLinearMap;
use crate::orbit;
use crate::report::{self, CheckOptions, CheckReport, Implication};
use crate::scalar::Scalar;
use crate::sign::gamma_exponent;
use crate::space::{Element, Parity, SuperSpace};
use crate::tuples::{flat_index, tuples, unflatten};

/// An even, super-skew `k`-linear form, stored densely on basis tuples.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperCochain {
    degree: usize,
    dim: usize,
    values: Vec<Scalar>,
}

impl std::fmt::Debug for SuperCochain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.entries()).finish()
    }
}

impl SuperCochain {
    pub fn zero(dim: usize, degree: usize) -> Self {
        SuperCochain {
            degree,
            dim,
            values: vec![Scalar::zero(); dim.pow(degree as u32)],
        }
    }

    /// Fills the skew orbits of the listed values. A nonzero value on an odd
    /// total degree is rejected.
    pub fn from_generators(
        space: &SuperSpace,
        degree: usize,
        generators: impl IntoIterator<Item = (Vec<usize>, Scalar)>,
    ) -> Result<Self> {
        let generators: Vec<_> = generators.into_iter().collect();
        for (t, v) in &generators {
            if t.len() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: t.len(),
                });
            }
            if let Some(&i) = t.iter().find(|&&i| i >= space.dim()) {
                return Err(Error::BasisIndexOutOfRange {
                    index: i,
                    dim: space.dim(),
                });
            }
            let p = Parity::sum(t.iter().map(|&i| space.parity(i)));
            if p.is_odd() && !v.is_zero() {
                return Err(Error::GradingViolation {
                    tuple: space.labels_of(t),
                    detail: format!("cochain must be even, got value {v} on an odd tuple"),
                });
            }
        }
        let swaps: Vec<usize> = (0..degree.saturating_sub(1)).collect();
        let filled = orbit::complete(space, generators, &swaps)?;
        let mut c = Self::zero(space.dim(), degree);
        for (t, v) in filled {
            c.values[flat_index(c.dim, &t)] = v;
        }
        Ok(c)
    }

    /// Builds the cochain by evaluating `f` on every basis tuple; no symmetry
    /// is imposed.
    pub fn from_fn(dim: usize, degree: usize, f: impl Fn(&[usize]) -> Scalar) -> Self {
        let values = (0..dim.pow(degree as u32))
            .map(|i| f(&unflatten(dim, degree, i)))
            .collect();
        SuperCochain { degree, dim, values }
    }

    /// A degree-one form given by its values on the basis.
    pub fn linear_form(space: &SuperSpace, values: &[Scalar]) -> Result<Self> {
        if values.len() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                found: values.len(),
            });
        }
        Self::from_generators(space, 1, values.iter().enumerate().map(|(i, v)| (vec![i], v.clone())))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    pub fn get(&self, tuple: &[usize]) -> &Scalar {
        debug_assert_eq!(tuple.len(), self.degree);
        &self.values[flat_index(self.dim, tuple)]
    }

    /// Nonzero values in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &Scalar)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (unflatten(self.dim, self.degree, i), v))
    }

    /// Multilinear evaluation.
    pub fn eval(&self, args: &[&Element]) -> Scalar {
        debug_assert_eq!(args.len(), self.degree);
        let mut out = Scalar::zero();
        let mut idx = vec![0; self.degree];
        self.eval_rec(args, 0, &Scalar::one(), &mut idx, &mut out);
        out
    }

    fn eval_rec(&self, args: &[&Element], k: usize, coeff: &Scalar, idx: &mut Vec<usize>, out: &mut Scalar) {
        if k == args.len() {
            *out += &(coeff * self.get(idx));
            return;
        }
        for (i, c) in args[k].terms() {
            idx[k] = i;
            self.eval_rec(args, k + 1, &(coeff * c), idx, out);
        }
    }

    /// Values on tuples of odd total degree.
    pub fn parity_violations(&self, space: &SuperSpace) -> Vec<Vec<usize>> {
        self.entries()
            .filter(|(t, _)| Parity::sum(t.iter().map(|&i| space.parity(i))).is_odd())
            .map(|(t, _)| t)
            .collect()
    }

    /// Entries on nondecreasing tuples; for a super-skew cochain these generate
    /// everything else.
    pub fn generators(&self) -> Vec<(Vec<usize>, Scalar)> {
        self.entries()
            .filter(|(t, _)| t.windows(2).all(|w| w[0] <= w[1]))
            .map(|(t, v)| (t, v.clone()))
            .collect()
    }
}

fn check_binary(alg: &HomSuperAlgebra) -> Result<&GradedLinearMap> {
    if alg.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: alg.arity(),
        });
    }
    Ok(&alg.twists()[0])
}

fn check_cochain_dim(f: &SuperCochain, alg: &HomSuperAlgebra) -> Result<()> {
    if f.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: f.dim(),
        });
    }
    Ok(())
}

fn sign_of(negative: bool) -> Scalar {
    if negative {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

/// `(-1)^{i+j+1} (-1)^{γ_ij}` for 1-based `i < j` over `parities`.
fn pair_sign(parities: &[Parity], i: usize, j: usize, extra: usize) -> Scalar {
    let negative = (i + j + extra) % 2 == 1;
    sign_of(negative ^ gamma_exponent(parities, i, j).is_odd())
}

fn without(t: &[usize], i: usize, j: usize) -> Vec<usize> {
    t.iter()
        .enumerate()
        .filter(|&(p, _)| p != i && p != j)
        .map(|(_, &v)| v)
        .collect()
}

/// `δf(x_1..x_{k+1}) = Σ_{i<j} (-1)^{i+j+1}(-1)^{γ_ij} f([x_i,x_j], α x_1, .., x̂_i, .., x̂_j, .., α x_{k+1})`.
pub fn coboundary(f: &SuperCochain, alg: &HomSuperAlgebra) -> Result<SuperCochain> {
    let alpha = check_binary(alg)?;
    check_cochain_dim(f, alg)?;
    let space = alg.space();
    let k = f.degree();
    Ok(SuperCochain::from_fn(alg.dim(), k + 1, |t| {
        let p = space.tuple_parities(t);
        let mut acc = Scalar::zero();
        for i in 0..=k {
            for j in i + 1..=k {
                let br = alg.bracket().get(&[t[i], t[j]]);
                if br.is_zero() {
                    continue;
                }
                let rest = without(t, i, j);
                let mut args: Vec<&Element> = vec![br];
                args.extend(rest.iter().map(|&r| alpha.column(r)));
                let v = f.eval(&args);
                if !v.is_zero() {
                    acc += &(pair_sign(&p, i + 1, j + 1, 1) * v);
                }
            }
        }
        acc
    }))
}

/// `φ∧δφ_X(Y) = Σ_{i<j} (-1)^{i+j}(-1)^{γ^Y_ij} φ(Y without y_i, y_j) φ(X, [y_i, y_j])`,
/// with `|X| = n - 3` and `|Y| = n` where `n = deg φ + 2`.
pub fn wedge_obstruction(phi: &SuperCochain, x: &[usize], y: &[usize], alg: &HomSuperAlgebra) -> Result<Scalar> {
    check_binary(alg)?;
    check_cochain_dim(phi, alg)?;
    let n = phi.degree() + 2;
    if x.len() + 3 != n {
        return Err(Error::ArityMismatch {
            expected: n - 3,
            found: x.len(),
        });
    }
    if y.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: y.len(),
        });
    }
    Ok(wedge_value(phi, x, y, alg))
}

fn wedge_value(phi: &SuperCochain, x: &[usize], y: &[usize], alg: &HomSuperAlgebra) -> Scalar {
    let n = y.len();
    let p = alg.space().tuple_parities(y);
    let xs: Vec<Element> = x.iter().map(|&i| Element::basis(i)).collect();
    let mut acc = Scalar::zero();
    for i in 0..n {
        for j in i + 1..n {
            let br = alg.bracket().get(&[y[i], y[j]]);
            if br.is_zero() {
                continue;
            }
            let first = phi.get(&without(y, i, j));
            if first.is_zero() {
                continue;
            }
            let mut args: Vec<&Element> = xs.iter().collect();
            args.push(br);
            let second = phi.eval(&args);
            acc += &(pair_sign(&p, i + 1, j + 1, 0) * first * second);
        }
    }
    acc
}

/// The two conditions under which `[·,..,·]_φ` is an n-Hom-Lie bracket:
/// `φ∧δφ_X = 0` for every `X`, and `φ(α x_1, x_2, ..) = φ(x_1, x_2, ..)`.
///
/// The algebra must be binary and multiplicative. Whether it satisfies the
/// Hom-Jacobi identity is reported as a note.
pub fn check_induction_conditions(
    phi: &SuperCochain,
    alg: &HomSuperAlgebra,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let alpha = check_binary(alg)?;
    check_cochain_dim(phi, alg)?;
    if !check_multiplicative(alg, opts)?.passed {
        return Err(Error::NotMultiplicative);
    }
    let n = phi.degree() + 2;
    let d = alg.dim();
    let space = alg.space();

    let items: Vec<Vec<usize>> = tuples(d, n - 3).collect();
    let ys: Vec<Vec<usize>> = tuples(d, n).collect();
    let wedge = report::run("wedge-condition", space, opts, items, |x, tally| {
        let mut full = x.clone();
        full.extend(std::iter::repeat_n(0, n));
        for y in &ys {
            full[n - 3..].copy_from_slice(y);
            tally.check(&full, None, wedge_value(phi, x, y, alg), Scalar::zero());
        }
    });
    let twist = check_twist_invariance(phi, alpha, space, opts);

    let jacobi = check_hom_jacobi(alg, opts)?;
    let note = if jacobi.passed {
        "base algebra satisfies the Hom-Jacobi identity".to_string()
    } else {
        format!(
            "base algebra fails the Hom-Jacobi identity on {} triples",
            jacobi.failures
        )
    };
    Ok(CheckReport::composite("induction-conditions", vec![wedge, twist]).with_note(note))
}

fn check_twist_invariance(
    phi: &SuperCochain,
    alpha: &GradedLinearMap,
    space: &SuperSpace,
    opts: &CheckOptions,
) -> CheckReport {
    let items: Vec<Vec<usize>> = tuples(phi.dim(), phi.degree()).collect();
    report::run("twist-invariance", space, opts, items, |t, tally| {
        let mut args: Vec<Element> = t.iter().map(|&i| Element::basis(i)).collect();
        args[0] = alpha.column(t[0]).clone();
        let refs: Vec<&Element> = args.iter().collect();
        tally.check(t, None, phi.eval(&refs), phi.get(t).clone());
    })
}

/// `[x,y,z] = φ(x)[y,z] + (-1)^{|x|(|y|+|z|)} φ(y)[z,x] + (-1)^{|z|(|x|+|y|)} φ(z)[x,y]`
/// with twists `(α, α)`.
pub fn triple_product(phi: &SuperCochain, alg: &HomSuperAlgebra) -> Result<HomSuperAlgebra> {
    let alpha = check_binary(alg)?.clone();
    check_cochain_dim(phi, alg)?;
    if phi.degree() != 1 {
        return Err(Error::DegreeMismatch {
            expected: 1,
            found: phi.degree(),
        });
    }
    let space = alg.space();
    let b = alg.bracket();
    let bracket = NaryBracket::from_fn(alg.dim(), 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let (px, py, pz) = (space.parity(x), space.parity(y), space.parity(z));
        let mut out = b.get(&[y, z]).scaled(phi.get(&[x]));
        out.add_scaled(b.get(&[z, x]), &(sign_of((px * (py + pz)).is_odd()) * phi.get(&[y])));
        out.add_scaled(b.get(&[x, y]), &(sign_of((pz * (px + py)).is_odd()) * phi.get(&[z])));
        out
    });
    HomSuperAlgebra::with_alpha(format!("{}_phi3", alg.name()), space.clone(), bracket, alpha)
}

/// `[x_1..x_n]_φ = Σ_{i<j} (-1)^{i+j+1}(-1)^{γ_ij} φ(x_1, .., x̂_i, .., x̂_j, .., x_n)[x_i, x_j]`
/// with twists `(α, .., α)`; `φ` has degree `n - 2`.
pub fn phi_induced_bracket(phi: &SuperCochain, alg: &HomSuperAlgebra, n: usize) -> Result<HomSuperAlgebra> {
    let alpha = check_binary(alg)?.clone();
    check_cochain_dim(phi, alg)?;
    if n < 3 {
        return Err(Error::Precondition(format!(
            "induced arity must be at least 3, got {n}"
        )));
    }
    if phi.degree() + 2 != n {
        return Err(Error::DegreeMismatch {
            expected: n - 2,
            found: phi.degree(),
        });
    }
    let space = alg.space();
    let b = alg.bracket();
    let bracket = NaryBracket::from_fn(alg.dim(), n, |t| {
        let p = space.tuple_parities(t);
        let mut out = Element::zero();
        for i in 0..n {
            for j in i + 1..n {
                let br = b.get(&[t[i], t[j]]);
                if br.is_zero() {
                    continue;
                }
                let v = phi.get(&without(t, i, j));
                if v.is_zero() {
                    continue;
                }
                out.add_scaled(br, &(pair_sign(&p, i + 1, j + 1, 1) * v));
            }
        }
        out
    });
    HomSuperAlgebra::with_alpha(format!("{}_phi{n}", alg.name()), space.clone(), bracket, alpha)
}

/// `φ([x_1, x_2], x_3, ..) = 0` and `φ(α x_1, x_2, ..) = φ`.
pub fn check_supertrace(phi: &SuperCochain, alg: &HomSuperAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    let alpha = check_binary(alg)?;
    check_cochain_dim(phi, alg)?;
    let space = alg.space();
    let k = phi.degree();
    let items: Vec<Vec<usize>> = tuples(alg.dim(), k + 1).collect();
    let kills = report::run("vanishes-on-brackets", space, opts, items, |t, tally| {
        let mut args: Vec<&Element> = vec![alg.bracket().get(&t[..2])];
        let rest: Vec<Element> = t[2..].iter().map(|&i| Element::basis(i)).collect();
        args.extend(rest.iter());
        tally.check(t, None, phi.eval(&args), Scalar::zero());
    });
    let twist = check_twist_invariance(phi, alpha, space, opts);
    Ok(CheckReport::composite("supertrace", vec![kills, twist]))
}

pub fn is_supertrace(phi: &SuperCochain, alg: &HomSuperAlgebra) -> Result<bool> {
    Ok(check_supertrace(phi, alg, &CheckOptions::with_cap(1))?.passed)
}

/// If `D` is an `α^k`-derivation of `alg` and
/// `Σ_i (-1)^{|D||X|^{i-1}} φ(x_1, .., D x_i, .., x_{n-2}) = 0`,
/// then `D` is an `α^k`-derivation of `[·,..,·]_φ`.
pub fn phi_transfer_derivation(
    d: &DerivationCandidate,
    phi: &SuperCochain,
    alg: &HomSuperAlgebra,
    opts: &CheckOptions,
) -> Result<Implication> {
    if !check_derivation(d, alg, opts)?.passed {
        return Err(Error::Precondition(format!(
            "map is not an alpha^{}-derivation of the base algebra",
            d.power
        )));
    }
    let n = phi.degree() + 2;
    let space = alg.space();
    let items: Vec<Vec<usize>> = tuples(alg.dim(), phi.degree()).collect();
    let hypothesis = report::run("phi-annihilates-derivation", space, opts, items, |t, tally| {
        let mut acc = Scalar::zero();
        let mut prefix = Parity::Even;
        for i in 0..t.len() {
            let mut args: Vec<Element> = t.iter().map(|&j| Element::basis(j)).collect();
            args[i] = d.map.column(t[i]).clone();
            let refs: Vec<&Element> = args.iter().collect();
            let v = phi.eval(&refs);
            acc += &(sign_of((d.parity() * prefix).is_odd()) * v);
            prefix = prefix + space.parity(t[i]);
        }
        tally.check(t, None, acc, Scalar::zero());
    });
    let conclusion = if hypothesis.passed {
        let induced = phi_induced_bracket(phi, alg, n)?;
        Some(check_derivation(d, &induced, opts)?)
    } else {
        None
    };
    Ok(Implication {
        statement: format!("derivation transfers to the {n}-bracket"),
        hypothesis,
        conclusion,
    })
}
