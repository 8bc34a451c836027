//! The n-ary bracket `[x_1..x_n]_n = [[x_1..x_{n-1}]_{n-1}, α^{n-2} x_n]` built
//! from a multiplicative Hom-Lie superalgebra.

use crate::algebra::HomSuperAlgebra;
use crate::axioms::check_multiplicative;
use crate::derivations::{
    check_derivation, check_derivation_with_alpha, check_generalized_derivation_with_alpha, check_quasi_derivation,
    DerivationCandidate, GeneralizedTuple, LeibnizTables, QuasiPair,
};
use crate::error::{Error, Result};
use crate::map::GradedLinearMap;
use crate::report::{self, CheckOptions, CheckReport};
use crate::space::Element;
use crate::tuples::tuples;

/// Note attached to reports on iterated algebras.
pub const TWIST_NOTE: &str = "iterated algebra carries twist alpha^(n-1); some statements about it name alpha^(n-2)";

fn binary_alpha(alg: &HomSuperAlgebra) -> Result<&GradedLinearMap> {
    if alg.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: alg.arity(),
        });
    }
    Ok(&alg.twists()[0])
}

/// Builds `[·,..,·]_n` with twists `(α^{n-1}, .., α^{n-1})`.
pub fn iterated_bracket(alg: &HomSuperAlgebra, n: usize) -> Result<HomSuperAlgebra> {
    let alpha = binary_alpha(alg)?;
    if n < 2 {
        return Err(Error::Precondition(format!("arity must be at least 2, got {n}")));
    }
    if !check_multiplicative(alg, &CheckOptions::with_cap(1))?.passed {
        return Err(Error::NotMultiplicative);
    }
    let d = alg.dim();
    let base = alg.bracket();
    let mut current = base.clone();
    for k in 3..=n {
        // [e_r, α^{k-2} e_c]
        let power = alpha.power(k as u32 - 2);
        let last = base.precompose(&[None, Some(&power)]);
        let prev = current;
        current = crate::bracket::NaryBracket::from_fn(d, k, |t| {
            let mut out = Element::zero();
            for (r, coeff) in prev.get(&t[..k - 1]).terms() {
                out.add_scaled(last.get(&[r, t[k - 1]]), coeff);
            }
            out
        });
    }
    HomSuperAlgebra::with_alpha(
        format!("{}_{n}", alg.name()),
        alg.space().clone(),
        current,
        alpha.power(n as u32 - 1),
    )
}

/// `[α^{n-1} x, [y_1..y_n]_n] = Σ_k (-1)^{|x||Y|^{k-1}} [α y_1, .., [x, y_k], .., α y_n]_n`
/// for one homogeneous `x` and one basis tuple `y`.
pub fn check_ad2_expansion(
    alg: &HomSuperAlgebra,
    x: &Element,
    y: &[usize],
    n: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let alpha = binary_alpha(alg)?;
    if y.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: y.len(),
        });
    }
    alg.space().check_element(x)?;
    let ad = alg.adjoint_map(std::slice::from_ref(x))?;
    let g = iterated_bracket(alg, n)?;
    let tables = LeibnizTables::new(g.bracket(), alpha);
    let lift = alpha.power(n as u32 - 1).apply(x);
    let items = vec![y.to_vec()];
    Ok(report::run("ad2-expansion", alg.space(), opts, items, |t, tally| {
        let lhs = alg.bracket().eval(&[&lift, g.bracket().get(t)]);
        let rhs = tables.sum(alg.space(), t, &vec![&ad; n]);
        tally.check(t, None, lhs, rhs);
    }))
}

/// [`check_ad2_expansion`] over every basis `x` and every basis `n`-tuple.
/// Tuples in the report list `x` followed by `y_1..y_n`.
pub fn check_ad2_expansion_exhaustive(alg: &HomSuperAlgebra, n: usize, opts: &CheckOptions) -> Result<CheckReport> {
    let alpha = binary_alpha(alg)?;
    let g = iterated_bracket(alg, n)?;
    let tables = LeibnizTables::new(g.bracket(), alpha);
    let lift = alpha.power(n as u32 - 1);
    let d = alg.dim();
    let ys: Vec<Vec<usize>> = tuples(d, n).collect();
    let xs: Vec<usize> = (0..d).collect();
    let r = report::run("ad2-expansion", alg.space(), opts, xs, |&x, tally| {
        let ad = alg.adjoint_basis(&[x]);
        let maps = vec![&ad; n];
        let lx = lift.column(x);
        let mut full = vec![x];
        full.extend(std::iter::repeat_n(0, n));
        for y in &ys {
            full[1..].copy_from_slice(y);
            let lhs = alg.bracket().eval(&[lx, g.bracket().get(y)]);
            let rhs = tables.sum(alg.space(), y, &maps);
            tally.check(&full, None, lhs, rhs);
        }
    });
    Ok(r)
}

/// An `α^k`-derivation of `alg` is an `α^k`-derivation of the iterated
/// `n`-bracket, with `α` the base twist.
pub fn iterated_transfer_derivation(
    d: &DerivationCandidate,
    alg: &HomSuperAlgebra,
    n: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let alpha = binary_alpha(alg)?.clone();
    if !check_derivation(d, alg, opts)?.passed {
        return Err(Error::Precondition(format!(
            "map is not an alpha^{}-derivation of the base algebra",
            d.power
        )));
    }
    let g = iterated_bracket(alg, n)?;
    let r = check_derivation_with_alpha(d, &g, &alpha, opts)?;
    Ok(CheckReport::composite(format!("derivation of {}", g.name()), vec![r]).with_note(TWIST_NOTE))
}

/// Given `D^{(0)}, .., D^{(n-1)}` with each `(D^{(i)}, D^{(i+1)})` an
/// `α^k`-quasi-derivation pair of `alg`, checks that
/// `(D, D, D', .., D^{(n-1)})` is an `(n+1)`-ary `α^k`-derivation of the
/// iterated `n`-bracket.
pub fn iterated_generalized_tuple(
    chain: &[GradedLinearMap],
    alg: &HomSuperAlgebra,
    k: u32,
    n: usize,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let alpha = binary_alpha(alg)?.clone();
    if chain.len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: chain.len(),
        });
    }
    for (i, w) in chain.windows(2).enumerate() {
        let pair = QuasiPair::new(w[0].clone(), w[1].clone(), k)?;
        if !check_quasi_derivation(&pair, alg, opts)?.passed {
            return Err(Error::Precondition(format!(
                "chain entries {i} and {} do not form a quasi-derivation pair",
                i + 1
            )));
        }
    }
    let mut maps = vec![chain[0].clone()];
    maps.extend(chain.iter().cloned());
    let tuple = GeneralizedTuple::new(maps, k)?;
    let g = iterated_bracket(alg, n)?;
    check_generalized_derivation_with_alpha(&tuple, &g, &alpha, opts)
}
