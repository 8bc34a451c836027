//! Exhaustive checks of the defining identities on basis tuples.

use std::fmt;
use std::str::FromStr;

use crate::algebra::HomSuperAlgebra;
use crate::error::{Error, Result};
use crate::report::{self, CheckOptions, CheckReport};
use crate::scalar::Scalar;
use crate::sign::skew_swap_negative;
use crate::space::{Element, Parity};
use crate::tuples::tuples;

/// The identities a profile can ask for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    Grading,
    SuperSkew,
    HomJacobi,
    Nambu,
    Multiplicative,
}

impl Identity {
    pub const ALL: [Identity; 5] = [
        Identity::Grading,
        Identity::SuperSkew,
        Identity::HomJacobi,
        Identity::Nambu,
        Identity::Multiplicative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Grading => "grading",
            Identity::SuperSkew => "super-skew",
            Identity::HomJacobi => "hom-jacobi",
            Identity::Nambu => "nambu",
            Identity::Multiplicative => "multiplicative",
        }
    }

    /// Identities that make sense for the arity of `alg`.
    pub fn applicable(alg: &HomSuperAlgebra) -> Vec<Identity> {
        Self::ALL
            .into_iter()
            .filter(|i| *i != Identity::HomJacobi || alg.arity() == 2)
            .filter(|i| *i != Identity::Multiplicative || alg.multiplicative_flag())
            .collect()
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Ok(match norm.as_str() {
            "grading" => Identity::Grading,
            "skew" | "super-skew" => Identity::SuperSkew,
            "jacobi" | "hom-jacobi" => Identity::HomJacobi,
            "nambu" => Identity::Nambu,
            "multiplicative" | "mult" => Identity::Multiplicative,
            _ => return Err(Error::Parse(format!("unknown identity {s:?}"))),
        })
    }
}

/// Runs one identity.
pub fn check_identity(alg: &HomSuperAlgebra, identity: Identity, opts: &CheckOptions) -> Result<CheckReport> {
    match identity {
        Identity::Grading => Ok(check_grading(alg, opts)),
        Identity::SuperSkew => Ok(check_super_skew(alg, opts)),
        Identity::HomJacobi => check_hom_jacobi(alg, opts),
        Identity::Nambu => Ok(check_nambu_identity(alg, opts)),
        Identity::Multiplicative => check_multiplicative(alg, opts),
    }
}

/// Runs a list of identities and groups the results under one report.
pub fn check_identities(alg: &HomSuperAlgebra, identities: &[Identity], opts: &CheckOptions) -> Result<CheckReport> {
    let sections = identities
        .iter()
        .map(|&i| check_identity(alg, i, opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::composite(alg.name().to_string(), sections))
}

/// Entries whose value leaves the parity class of the inputs.
pub fn check_grading(alg: &HomSuperAlgebra, opts: &CheckOptions) -> CheckReport {
    let space = alg.space();
    let items: Vec<Vec<usize>> = tuples(alg.dim(), alg.arity()).collect();
    report::run("grading", space, opts, items, |t, tally| {
        let v = alg.bracket().get(t);
        let want = Parity::sum(t.iter().map(|&i| space.parity(i)));
        let graded = Element::from_terms(
            v.terms()
                .filter(|(r, _)| space.parity(*r) == want)
                .map(|(r, c)| (r, c.clone())),
        );
        tally.check(t, None, v.clone(), graded);
    })
}

/// `[.., x_i, x_{i+1}, ..] = -(-1)^{|x_i||x_{i+1}|}[.., x_{i+1}, x_i, ..]` for every
/// adjacent pair.
pub fn check_super_skew(alg: &HomSuperAlgebra, opts: &CheckOptions) -> CheckReport {
    let space = alg.space();
    let n = alg.arity();
    let items: Vec<Vec<usize>> = tuples(alg.dim(), n).collect();
    report::run("super-skew", space, opts, items, |t, tally| {
        for i in 0..n - 1 {
            let mut u = t.clone();
            u.swap(i, i + 1);
            let mut rhs = alg.bracket().get(&u).clone();
            if skew_swap_negative(space.parity(t[i]), space.parity(t[i + 1])) {
                rhs = rhs.negated();
            }
            tally.check(
                t,
                Some(format!("positions {},{}", i + 1, i + 2)),
                alg.bracket().get(t).clone(),
                rhs,
            );
        }
    })
}

/// `↺ (-1)^{|x||z|}[α(x), [y, z]] = 0` on all basis triples. Binary only.
pub fn check_hom_jacobi(alg: &HomSuperAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    if alg.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: alg.arity(),
        });
    }
    let space = alg.space();
    let alpha = &alg.twists()[0];
    let b = alg.bracket();
    let items: Vec<Vec<usize>> = tuples(alg.dim(), 3).collect();
    Ok(report::run("hom-jacobi", space, opts, items, |t, tally| {
        let mut sum = Element::zero();
        for r in 0..3 {
            let (x, y, z) = (t[r], t[(r + 1) % 3], t[(r + 2) % 3]);
            let inner = b.get(&[y, z]);
            if inner.is_zero() {
                continue;
            }
            let term = b.eval(&[alpha.column(x), inner]);
            let sign = if (space.parity(x) * space.parity(z)).is_odd() {
                -Scalar::one()
            } else {
                Scalar::one()
            };
            sum.add_scaled(&term, &sign);
        }
        tally.check(t, None, sum, Element::zero());
    }))
}

/// The super-Hom-Nambu identity
///
/// `[α_1 x_1, .., α_{n-1} x_{n-1}, [y_1, .., y_n]]
///   = Σ_i (-1)^{|X||Y|^{i-1}} [α_1 y_1, .., α_{i-1} y_{i-1}, [x_1, .., x_{n-1}, y_i], α_i y_{i+1}, .., α_{n-1} y_n]`
///
/// for all basis tuples. Counterexample tuples list `x_1..x_{n-1}` followed by
/// `y_1..y_n`.
pub fn check_nambu_identity(alg: &HomSuperAlgebra, opts: &CheckOptions) -> CheckReport {
    let space = alg.space();
    let n = alg.arity();
    let d = alg.dim();
    let b = alg.bracket();
    let tw = alg.twists();

    // left[x.., c] = [α_1 x_1, .., α_{n-1} x_{n-1}, e_c]
    let left_maps: Vec<_> = (0..n).map(|p| if p < n - 1 { Some(&tw[p]) } else { None }).collect();
    let left = b.precompose(&left_maps);
    // slot[i][y.., c at i, ..]: α_p before slot i, α_{p-1} after it (1-based p)
    let slot: Vec<_> = (0..n)
        .map(|i| {
            let maps: Vec<_> = (0..n)
                .map(|p| match p.cmp(&i) {
                    std::cmp::Ordering::Less => Some(&tw[p]),
                    std::cmp::Ordering::Equal => None,
                    std::cmp::Ordering::Greater => Some(&tw[p - 1]),
                })
                .collect();
            b.precompose(&maps)
        })
        .collect();

    let ys: Vec<Vec<usize>> = tuples(d, n).collect();
    let xs: Vec<Vec<usize>> = tuples(d, n - 1).collect();
    let per_x = ys.len() as u64;
    report::run("nambu", space, opts, xs, |x, tally| {
        let ad = alg.adjoint_basis(x);
        let mut xt = x.clone();
        xt.push(0);
        let left_row: Vec<Element> = (0..d)
            .map(|c| {
                xt[n - 1] = c;
                left.get(&xt).clone()
            })
            .collect();
        if ad.is_zero() && left_row.iter().all(Element::is_zero) {
            tally.count(per_x);
            return;
        }
        let px = Parity::sum(x.iter().map(|&i| space.parity(i)));
        let mut full = x.clone();
        full.extend(std::iter::repeat_n(0, n));
        for y in &ys {
            let mut lhs = Element::zero();
            for (c, coeff) in b.get(y).terms() {
                lhs.add_scaled(&left_row[c], coeff);
            }
            let mut rhs = Element::zero();
            let mut prefix = Parity::Even;
            let mut u = y.clone();
            for i in 0..n {
                let img = ad.column(y[i]);
                if !img.is_zero() {
                    let negative = (px * prefix).is_odd();
                    for (c, coeff) in img.terms() {
                        u[i] = c;
                        let coeff = if negative { -coeff } else { coeff.clone() };
                        rhs.add_scaled(slot[i].get(&u), &coeff);
                    }
                    u[i] = y[i];
                }
                prefix = prefix + space.parity(y[i]);
            }
            full[n - 1..].copy_from_slice(y);
            tally.check(&full, None, lhs, rhs);
        }
    })
}

/// `α([x_1, .., x_n]) = [α x_1, .., α x_n]`; needs a single shared twist.
pub fn check_multiplicative(alg: &HomSuperAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    let alpha = alg.alpha()?;
    let n = alg.arity();
    let twisted = alg.bracket().precompose(&vec![Some(alpha); n]);
    let items: Vec<Vec<usize>> = tuples(alg.dim(), n).collect();
    Ok(report::run("multiplicative", alg.space(), opts, items, |t, tally| {
        tally.check(t, None, alpha.apply(alg.bracket().get(t)), twisted.get(t).clone());
    }))
}
