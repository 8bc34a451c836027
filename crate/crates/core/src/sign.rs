//! Koszul sign bookkeeping.
//!
//! Positions in the public functions are 1-based, matching the way the
//! identities are usually written. Internally signs are carried as a `bool`
//! meaning "negative".

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::space::Parity;

pub(crate) fn to_scalar(negative: bool) -> Scalar {
    if negative {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

/// `true` when `-(-1)^{p q}` is `-1`, i.e. unless both are odd.
pub(crate) fn skew_swap_negative(p: Parity, q: Parity) -> bool {
    !(p.is_odd() && q.is_odd())
}

/// Sign picked up by a super-skew bracket when positions `i` and `i + 1`
/// (1-based) are exchanged: `-(-1)^{p_i p_{i+1}}`.
pub fn koszul_adjacent_sign(parities: &[Parity], i: usize) -> Result<Scalar> {
    if i == 0 || i >= parities.len() {
        return Err(Error::PositionOutOfRange {
            position: i,
            len: parities.len(),
        });
    }
    Ok(to_scalar(skew_swap_negative(parities[i - 1], parities[i])))
}

/// `|X|^i`: sum of the first `i` parities.
pub fn prefix_degree(parities: &[Parity], i: usize) -> Result<Parity> {
    if i > parities.len() {
        return Err(Error::PositionOutOfRange {
            position: i,
            len: parities.len(),
        });
    }
    Ok(Parity::sum(parities[..i].iter().copied()))
}

/// Sum of parities over the 1-based closed range `from..=to`; empty when `from > to`.
pub(crate) fn range_degree(parities: &[Parity], from: usize, to: usize) -> Parity {
    if from > to {
        return Parity::Even;
    }
    Parity::sum(parities[from - 1..to].iter().copied())
}

/// Exponent `γ_ij = |X|_{j+1}^n (|x_i| + |x_j|) + |x_i| |X|_{i+1}^{j-1}`, 1-based `i < j`.
pub(crate) fn gamma_exponent(parities: &[Parity], i: usize, j: usize) -> Parity {
    let n = parities.len();
    let (pi, pj) = (parities[i - 1], parities[j - 1]);
    range_degree(parities, j + 1, n) * (pi + pj) + pi * range_degree(parities, i + 1, j - 1)
}

/// `(-1)^{γ_ij}` for 1-based positions `1 <= i < j <= n`.
pub fn gamma_sign(parities: &[Parity], i: usize, j: usize) -> Result<Scalar> {
    if i == 0 || i >= j || j > parities.len() {
        return Err(Error::InvalidPair {
            i,
            j,
            len: parities.len(),
        });
    }
    Ok(to_scalar(gamma_exponent(parities, i, j).is_odd()))
}

/// Sign relating `[x_1, ..., x_n]` to `[x_{σ(1)}, ..., x_{σ(n)}]` for a super-skew
/// bracket, i.e. `[x_1..x_n] = s · [x_{σ(1)}..x_{σ(n)}]`.
///
/// `perm` lists the original positions (0-based) in their new order.
/// Computed by bubble-sorting with adjacent transpositions.
pub fn skew_permutation_sign(parities: &[Parity], perm: &[usize]) -> Result<Scalar> {
    if perm.len() != parities.len() {
        return Err(Error::ArityMismatch {
            expected: parities.len(),
            found: perm.len(),
        });
    }
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
            return Err(Error::Precondition(format!("{perm:?} is not a permutation")));
        }
    }
    let mut current: Vec<usize> = perm.to_vec();
    let mut negative = false;
    let mut swapped = true;
    while swapped {
        swapped = false;
        for k in 0..current.len().saturating_sub(1) {
            if current[k] > current[k + 1] {
                negative ^= skew_swap_negative(parities[current[k]], parities[current[k + 1]]);
                current.swap(k, k + 1);
                swapped = true;
            }
        }
    }
    Ok(to_scalar(negative))
}
