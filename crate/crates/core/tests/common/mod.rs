//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's checkers or solvers; only structure constants are read.

#![allow(dead_code)]

use hom_nambu::algebra::HomSuperAlgebra;
use hom_nambu::catalog::{self, Fixture, Params};
use hom_nambu::map::GradedLinearMap;
use hom_nambu::scalar::Scalar;
use hom_nambu::space::{Element, Parity};

pub fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

pub fn params(text: &str) -> Params {
    Params::parse(text).unwrap()
}

pub fn fixture(name: &str, p: &str) -> Fixture {
    catalog::build(name, &params(p)).unwrap()
}

pub fn diag(alg: &HomSuperAlgebra, d: &[Scalar]) -> GradedLinearMap {
    GradedLinearMap::diagonal(alg.space(), d).unwrap()
}

/// Sign of a super-skew permutation by counting inversions: every inverted
/// pair contributes `-(-1)^{|a||b|}`.
pub fn inversion_sign(parities: &[Parity], perm: &[usize]) -> Scalar {
    let mut negative = false;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                let both_odd = parities[perm[i]].is_odd() && parities[perm[j]].is_odd();
                negative ^= !both_odd;
            }
        }
    }
    if negative {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

/// Binary bracket on arbitrary elements from structure constants.
pub fn bracket2(alg: &HomSuperAlgebra, x: &Element, y: &Element) -> Element {
    let mut out = Element::zero();
    for (i, a) in x.terms() {
        for (j, b) in y.terms() {
            let v = alg.bracket().get(&[i, j]);
            out.add_scaled(v, &(a * b));
        }
    }
    out
}

pub fn apply_power(alpha: &GradedLinearMap, k: u32, x: &Element) -> Element {
    (0..k).fold(x.clone(), |acc, _| alpha.apply(&acc))
}

/// `[x_1..x_n]_n` by the recursion, evaluated element by element.
pub fn iterated_oracle(alg: &HomSuperAlgebra, args: &[usize]) -> Element {
    let alpha = &alg.twists()[0];
    let n = args.len();
    if n == 2 {
        return alg.bracket().get(args).clone();
    }
    let head = iterated_oracle(alg, &args[..n - 1]);
    let last = apply_power(alpha, n as u32 - 2, &Element::basis(args[n - 1]));
    bracket2(alg, &head, &last)
}

/// Row reduction over the rationals; returns the rank and the reduced rows.
pub fn reduce(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> (usize, Vec<Vec<Scalar>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().unwrap();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (r, rows, pivots)
}

pub fn rank(rows: Vec<Vec<Scalar>>, ncols: usize) -> usize {
    reduce(rows, ncols).0
}

/// Nullspace basis, one vector per free column.
pub fn nullspace(rows: Vec<Vec<Scalar>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let (_, red, pivots) = reduce(rows, ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Scalar::zero(); ncols];
            v[free] = Scalar::one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = -&row[free];
            }
            v
        })
        .collect()
}

/// Dense elimination for binary `α^k`-derivations of one parity. Unknowns are
/// all `d²` matrix entries `D[r][c]` (row-major); parity, commutation with α
/// and the Leibniz rule are each written out as linear equations.
pub fn derivation_oracle(alg: &HomSuperAlgebra, k: u32, parity: Parity) -> Vec<Vec<Vec<Scalar>>> {
    let d = alg.dim();
    let space = alg.space();
    let alpha = alg.twists()[0].matrix();
    let ak = {
        let mut m: Vec<Vec<Scalar>> = (0..d)
            .map(|i| (0..d).map(|j| if i == j { s(1) } else { s(0) }).collect())
            .collect();
        for _ in 0..k {
            m = (0..d)
                .map(|i| (0..d).map(|j| (0..d).map(|l| &alpha[i][l] * &m[l][j]).sum()).collect())
                .collect();
        }
        m
    };
    let var = |r: usize, c: usize| r * d + c;
    let n = d * d;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for r in 0..d {
        for c in 0..d {
            if space.parity(r) != space.parity(c) + parity {
                let mut row = vec![s(0); n];
                row[var(r, c)] = s(1);
                rows.push(row);
            }
        }
    }
    // (Dα - αD)[r][c] = 0
    for r in 0..d {
        for c in 0..d {
            let mut row = vec![s(0); n];
            for l in 0..d {
                row[var(r, l)] += &alpha[l][c];
                row[var(l, c)] -= &alpha[r][l];
            }
            rows.push(row);
        }
    }
    // D[e_i, e_j] = [D e_i, α^k e_j] + (-1)^{|D||e_i|} [α^k e_i, D e_j], component m
    let coeff = |e: &Element, m: usize| e.coeff(m);
    for i in 0..d {
        for j in 0..d {
            let sign = if (parity * space.parity(i)).is_odd() {
                s(-1)
            } else {
                s(1)
            };
            let aj = Element::from_terms((0..d).map(|l| (l, ak[l][j].clone())));
            let ai = Element::from_terms((0..d).map(|l| (l, ak[l][i].clone())));
            let bij = alg.bracket().get(&[i, j]).clone();
            for m in 0..d {
                let mut row = vec![s(0); n];
                for l in 0..d {
                    row[var(m, l)] += &coeff(&bij, l);
                }
                for l in 0..d {
                    // D e_i = Σ_l D[l][i] e_l
                    let t1 = coeff(&bracket2(alg, &Element::basis(l), &aj), m);
                    row[var(l, i)] -= &t1;
                    let t2 = coeff(&bracket2(alg, &ai, &Element::basis(l)), m);
                    row[var(l, j)] -= &(&sign * &t2);
                }
                rows.push(row);
            }
        }
    }
    nullspace(rows, n)
        .into_iter()
        .map(|v| (0..d).map(|r| v[r * d..(r + 1) * d].to_vec()).collect())
        .collect()
}

pub fn flatten(m: &[Vec<Scalar>]) -> Vec<Scalar> {
    m.iter().flatten().cloned().collect()
}

/// Whether two families of matrices span the same space.
pub fn same_span(a: &[Vec<Vec<Scalar>>], b: &[Vec<Vec<Scalar>>]) -> bool {
    let Some(first) = a.first().or(b.first()) else {
        return true;
    };
    let n = first.len() * first.len();
    let fa: Vec<_> = a.iter().map(|m| flatten(m)).collect();
    let fb: Vec<_> = b.iter().map(|m| flatten(m)).collect();
    let ra = rank(fa.clone(), n);
    let rb = rank(fb.clone(), n);
    let rab = rank(fa.into_iter().chain(fb).collect(), n);
    ra == rb && ra == rab
}

/// A binary super-skew bracket on a space with the given parities. `coeffs`
/// is read in order for each generator `i <= j` and output index `m`; entries
/// that would break the grading or the skew symmetry are dropped.
pub fn random_binary(parities: &[bool], coeffs: &[i64], alpha: &[i64]) -> HomSuperAlgebra {
    use hom_nambu::bracket::NaryBracket;
    use hom_nambu::space::SuperSpace;
    let d = parities.len();
    let par = |b: bool| if b { Parity::Odd } else { Parity::Even };
    let space = SuperSpace::new(parities.iter().enumerate().map(|(i, &b)| (format!("e{i}"), par(b)))).unwrap();
    let mut k = coeffs.iter().cycle();
    let mut gens = Vec::new();
    for i in 0..d {
        for j in i..d {
            let mut v = Element::zero();
            for m in 0..d {
                let c = *k.next().unwrap();
                let graded = space.parity(m) == space.parity(i) + space.parity(j);
                let allowed = i != j || space.parity(i).is_odd();
                if graded && allowed && c != 0 {
                    v.add_term(m, &s(c));
                }
            }
            gens.push((vec![i, j], v));
        }
    }
    let b = NaryBracket::skew_from_generators(&space, 2, gens).unwrap();
    let a: Vec<Scalar> = alpha.iter().map(|&x| s(x)).collect();
    let alpha = GradedLinearMap::diagonal(&space, &a).unwrap();
    HomSuperAlgebra::with_alpha("random", space, b, alpha).unwrap()
}

/// `↺ (-1)^{|x||z|}[α x, [y, z]]` on one basis triple.
pub fn jacobi_oracle(alg: &HomSuperAlgebra, t: [usize; 3]) -> Element {
    let alpha = &alg.twists()[0];
    let p = |i: usize| alg.space().parity(i).is_odd();
    let mut out = Element::zero();
    for r in 0..3 {
        let (x, y, z) = (t[r], t[(r + 1) % 3], t[(r + 2) % 3]);
        let inner = alg.bracket().get(&[y, z]).clone();
        let term = bracket2(alg, &alpha.apply(&Element::basis(x)), &inner);
        let sign = if p(x) && p(z) { s(-1) } else { s(1) };
        out.add_scaled(&term, &sign);
    }
    out
}
