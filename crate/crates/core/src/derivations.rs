//! α^k-derivations, quasi-derivations and generalized derivations.

use crate::algebra::HomSuperAlgebra;
use crate::bracket::NaryBracket;
use crate::error::{Error, Result};
use crate::linalg;
use crate::map::GradedLinearMap;
use crate::report::{self, CheckOptions, CheckReport};
use crate::scalar::Scalar;
use crate::space::{Element, Parity, SuperSpace};
use crate::tuples::tuples;

/// A homogeneous map `D` together with the power `k` of `α^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationCandidate {
    pub map: GradedLinearMap,
    pub power: u32,
}

impl DerivationCandidate {
    pub fn new(map: GradedLinearMap, power: u32) -> Self {
        DerivationCandidate { map, power }
    }

    pub fn parity(&self) -> Parity {
        self.map.parity()
    }
}

/// `D` with its associated endomorphism `D'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPair {
    pub d: GradedLinearMap,
    pub d_prime: GradedLinearMap,
    pub power: u32,
}

impl QuasiPair {
    pub fn new(d: GradedLinearMap, d_prime: GradedLinearMap, power: u32) -> Result<Self> {
        if d.parity() != d_prime.parity() {
            return Err(Error::Precondition("D and D' must have the same parity".into()));
        }
        Ok(QuasiPair { d, d_prime, power })
    }
}

/// `(D, D', .., D^{(n)})`: one map per argument slot plus one for the output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedTuple {
    pub maps: Vec<GradedLinearMap>,
    pub power: u32,
}

impl GeneralizedTuple {
    pub fn new(maps: Vec<GradedLinearMap>, power: u32) -> Result<Self> {
        if let Some(first) = maps.first() {
            if maps.iter().any(|m| m.parity() != first.parity()) {
                return Err(Error::Precondition(
                    "all maps of a generalized derivation must share one parity".into(),
                ));
            }
        }
        Ok(GeneralizedTuple { maps, power })
    }
}

/// Per-slot tables `[β x_1, .., e_c, .., β x_n]` with `e_c` in slot `i` and
/// `β` everywhere else.
pub(crate) struct LeibnizTables {
    slots: Vec<NaryBracket>,
}

impl LeibnizTables {
    pub(crate) fn new(bracket: &NaryBracket, beta: &GradedLinearMap) -> Self {
        let n = bracket.arity();
        let slots = (0..n)
            .map(|i| {
                let maps: Vec<_> = (0..n).map(|p| (p != i).then_some(beta)).collect();
                bracket.precompose(&maps)
            })
            .collect();
        LeibnizTables { slots }
    }

    /// `[β x_1, .., z, .., β x_n]` with `z` in slot `i`.
    pub(crate) fn slot_value(&self, t: &[usize], i: usize, z: &Element) -> Element {
        let mut u = t.to_vec();
        let mut out = Element::zero();
        for (c, coeff) in z.terms() {
            u[i] = c;
            out.add_scaled(self.slots[i].get(&u), coeff);
        }
        out
    }

    /// `Σ_i (-1)^{|D_i||X|^{i-1}} [β x_1, .., D_i x_i, .., β x_n]`.
    pub(crate) fn sum(&self, space: &SuperSpace, t: &[usize], maps: &[&GradedLinearMap]) -> Element {
        let mut out = Element::zero();
        let mut prefix = Parity::Even;
        for (i, &ti) in t.iter().enumerate() {
            let m = maps[i];
            let img = m.column(ti);
            if !img.is_zero() {
                let v = self.slot_value(t, i, img);
                if (m.parity() * prefix).is_odd() {
                    out.add_scaled(&v, &-Scalar::one());
                } else {
                    out.add_scaled(&v, &Scalar::one());
                }
            }
            prefix = prefix + space.parity(ti);
        }
        out
    }
}

/// Checks `Dα = αD` and the graded Leibniz rule
/// `D[x_1..x_n] = Σ_i (-1)^{|D||X|^{i-1}} [α^k x_1, .., D x_i, .., α^k x_n]`.
pub fn check_derivation(c: &DerivationCandidate, alg: &HomSuperAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    let alpha = alg.alpha()?.clone();
    check_derivation_with_alpha(c, alg, &alpha, opts)
}

/// Same as [`check_derivation`] with an explicit `α`, for brackets whose twist
/// is a power of the map the derivation is defined against.
pub fn check_derivation_with_alpha(
    c: &DerivationCandidate,
    alg: &HomSuperAlgebra,
    alpha: &GradedLinearMap,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    check_dims(alg, &c.map)?;
    check_dims(alg, alpha)?;
    let commute = check_commutes(alg, &c.map, alpha, opts);
    let beta = alpha.power(c.power);
    let tables = LeibnizTables::new(alg.bracket(), &beta);
    let n = alg.arity();
    let maps = vec![&c.map; n];
    let items: Vec<Vec<usize>> = tuples(alg.dim(), n).collect();
    let leibniz = report::run("leibniz", alg.space(), opts, items, |t, tally| {
        let lhs = c.map.apply(alg.bracket().get(t));
        let rhs = tables.sum(alg.space(), t, &maps);
        tally.check(t, None, lhs, rhs);
    });
    Ok(CheckReport::composite(
        format!("alpha^{}-derivation", c.power),
        vec![commute, leibniz],
    ))
}

fn check_dims(alg: &HomSuperAlgebra, m: &GradedLinearMap) -> Result<()> {
    if m.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: m.dim(),
        });
    }
    Ok(())
}

pub(crate) fn check_commutes(
    alg: &HomSuperAlgebra,
    d: &GradedLinearMap,
    alpha: &GradedLinearMap,
    opts: &CheckOptions,
) -> CheckReport {
    let items: Vec<usize> = (0..alg.dim()).collect();
    report::run("commutes-with-alpha", alg.space(), opts, items, |&c, tally| {
        let lhs = d.apply(alpha.column(c));
        let rhs = alpha.apply(d.column(c));
        tally.check(&[c], None, lhs, rhs);
    })
}

/// `Σ_i (-1)^{|D||X|^{i-1}} [α^k x_1, .., D x_i, .., α^k x_n] = D'([x_1..x_n])`.
pub fn check_quasi_derivation(p: &QuasiPair, alg: &HomSuperAlgebra, opts: &CheckOptions) -> Result<CheckReport> {
    check_dims(alg, &p.d)?;
    check_dims(alg, &p.d_prime)?;
    let beta = alg.alpha()?.power(p.power);
    let tables = LeibnizTables::new(alg.bracket(), &beta);
    let n = alg.arity();
    let maps = vec![&p.d; n];
    let items: Vec<Vec<usize>> = tuples(alg.dim(), n).collect();
    Ok(report::run(
        format!("alpha^{}-quasi-derivation", p.power),
        alg.space(),
        opts,
        items,
        |t, tally| {
            let lhs = tables.sum(alg.space(), t, &maps);
            let rhs = p.d_prime.apply(alg.bracket().get(t));
            tally.check(t, None, lhs, rhs);
        },
    ))
}

/// `D^{(n)}([x_1..x_n]) = Σ_i (-1)^{|D^{(i-1)}||X|^{i-1}} [α^k x_1, .., D^{(i-1)} x_i, .., α^k x_n]`.
pub fn check_generalized_derivation(
    t: &GeneralizedTuple,
    alg: &HomSuperAlgebra,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let alpha = alg.alpha()?.clone();
    check_generalized_derivation_with_alpha(t, alg, &alpha, opts)
}

pub fn check_generalized_derivation_with_alpha(
    t: &GeneralizedTuple,
    alg: &HomSuperAlgebra,
    alpha: &GradedLinearMap,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    let n = alg.arity();
    if t.maps.len() != n + 1 {
        return Err(Error::ArityMismatch {
            expected: n + 1,
            found: t.maps.len(),
        });
    }
    for m in &t.maps {
        check_dims(alg, m)?;
    }
    let beta = alpha.power(t.power);
    let tables = LeibnizTables::new(alg.bracket(), &beta);
    let slots: Vec<&GradedLinearMap> = t.maps[..n].iter().collect();
    let out = &t.maps[n];
    let items: Vec<Vec<usize>> = tuples(alg.dim(), n).collect();
    Ok(report::run(
        format!("{}-ary alpha^{}-derivation", n + 1, t.power),
        alg.space(),
        opts,
        items,
        |tu, tally| {
            let lhs = out.apply(alg.bracket().get(tu));
            let rhs = tables.sum(alg.space(), tu, &slots);
            tally.check(tu, None, lhs, rhs);
        },
    ))
}

/// Unknown matrix entries `(row, col)` allowed for a map of parity `p`,
/// in column-major order.
fn unknowns(space: &SuperSpace, p: Parity) -> Vec<(usize, usize)> {
    let d = space.dim();
    let mut out = Vec::new();
    for c in 0..d {
        for r in 0..d {
            if space.parity(r) == space.parity(c) + p {
                out.push((r, c));
            }
        }
    }
    out
}

/// Basis of the space of `α^k`-derivations of the given parity.
///
/// Unknowns are the matrix entries allowed by the parity, ordered column by
/// column. The basis is the nullspace basis of the constraint system: one map
/// per free unknown, that unknown set to 1 and the other free unknowns to 0.
pub fn solve_derivation_space(alg: &HomSuperAlgebra, k: u32, parity: Parity) -> Result<Vec<GradedLinearMap>> {
    let alpha = alg.alpha()?;
    let space = alg.space();
    let d = alg.dim();
    let vars = unknowns(space, parity);
    let m = vars.len();
    let index: std::collections::HashMap<(usize, usize), usize> =
        vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    let mut system: Vec<Vec<Scalar>> = Vec::new();
    let push = |rows: Vec<Vec<Scalar>>, system: &mut Vec<Vec<Scalar>>| {
        system.extend(rows.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
        if system.len() > 2 * m.max(1) {
            linalg::rref(system, m);
        }
    };

    // Dα - αD = 0, entry (r, c)
    for c in 0..d {
        let mut rows = vec![vec![Scalar::zero(); m]; d];
        for (r, row) in rows.iter_mut().enumerate() {
            for (mi, a) in alpha.column(c).terms() {
                if let Some(&v) = index.get(&(r, mi)) {
                    row[v] += a;
                }
            }
            for mi in 0..d {
                let a = alpha.entry(r, mi);
                if a.is_zero() {
                    continue;
                }
                if let Some(&v) = index.get(&(mi, c)) {
                    row[v] -= &a;
                }
            }
        }
        push(rows, &mut system);
    }

    // D[t] - Σ_i s_i [.., D e_{t_i}, ..] = 0, one row per output component
    let beta = alpha.power(k);
    let tables = LeibnizTables::new(alg.bracket(), &beta);
    let n = alg.arity();
    for t in tuples(d, n) {
        let mut rows = vec![vec![Scalar::zero(); m]; d];
        for (b, coeff) in alg.bracket().get(&t).terms() {
            for (r, row) in rows.iter_mut().enumerate() {
                if let Some(&v) = index.get(&(r, b)) {
                    row[v] += coeff;
                }
            }
        }
        let mut prefix = Parity::Even;
        for i in 0..n {
            let negative = (parity * prefix).is_odd();
            for a in 0..d {
                let Some(&v) = index.get(&(a, t[i])) else { continue };
                let val = tables.slot_value(&t, i, &Element::basis(a));
                for (r, coeff) in val.terms() {
                    if negative {
                        rows[r][v] += coeff;
                    } else {
                        rows[r][v] -= coeff;
                    }
                }
            }
            prefix = prefix + space.parity(t[i]);
        }
        push(rows, &mut system);
    }

    let basis = linalg::nullspace(&system, m);
    Ok(basis
        .into_iter()
        .map(|v| {
            let mut cols = vec![Element::zero(); d];
            for (x, &(r, c)) in v.iter().zip(&vars) {
                cols[c].add_term(r, x);
            }
            GradedLinearMap::from_columns_unchecked(parity, cols)
        })
        .collect())
}

/// `ad^k_X : y ↦ [x_1, .., x_{n-1}, α^k(y)]`, an `α^{k+1}`-derivation of parity
/// `|X|`. Every `x_i` must be fixed by `α`.
pub fn inner_derivation(alg: &HomSuperAlgebra, xs: &[Element], k: u32) -> Result<DerivationCandidate> {
    let alpha = alg.alpha()?;
    for (i, x) in xs.iter().enumerate() {
        alg.space().check_element(x)?;
        if alpha.apply(x) != *x {
            return Err(Error::FixedPointViolation {
                index: i + 1,
                label: alg.space().format_element(x),
            });
        }
    }
    let ad = alg.adjoint_map(xs)?;
    let map = ad.compose(&alpha.power(k))?;
    Ok(DerivationCandidate::new(map, k + 1))
}

/// Checks that `[D_1, D_2]` is an `α^{k_1+k_2}`-derivation. Both inputs must
/// already be derivations.
pub fn check_derivation_closure(
    c1: &DerivationCandidate,
    c2: &DerivationCandidate,
    alg: &HomSuperAlgebra,
    opts: &CheckOptions,
) -> Result<CheckReport> {
    for (name, c) in [("first", c1), ("second", c2)] {
        if !check_derivation(c, alg, opts)?.passed {
            return Err(Error::Precondition(format!(
                "{name} map is not an alpha^{}-derivation",
                c.power
            )));
        }
    }
    let comm = c1.map.supercommutator(&c2.map)?;
    let c = DerivationCandidate::new(comm, c1.power + c2.power);
    let r = check_derivation(&c, alg, opts)?;
    Ok(CheckReport::composite("derivation-closure", vec![r]).with_note(format!(
        "supercommutator has parity {} and power {}",
        c.parity(),
        c.power
    )))
}
