//! Graded spaces and their elements.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Element of Z/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Option<Parity> {
        match bit {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Mod-2 sum of a sequence of parities.
    pub fn sum<I: IntoIterator<Item = Parity>>(it: I) -> Parity {
        it.into_iter().fold(Parity::Even, |a, b| a + b)
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        if self.is_odd() && rhs.is_odd() {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl From<Parity> for u8 {
    fn from(p: Parity) -> u8 {
        p.bit()
    }
}

impl TryFrom<u8> for Parity {
    type Error = String;
    fn try_from(v: u8) -> std::result::Result<Self, String> {
        Parity::from_bit(v).ok_or_else(|| format!("parity must be 0 or 1, got {v}"))
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisVector {
    pub label: String,
    pub parity: Parity,
}

/// A finite ordered homogeneous basis `V = V_0 + V_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperSpace {
    basis: Vec<BasisVector>,
}

impl SuperSpace {
    pub fn new<S: Into<String>>(basis: impl IntoIterator<Item = (S, Parity)>) -> Result<Self> {
        let basis: Vec<BasisVector> = basis
            .into_iter()
            .map(|(label, parity)| BasisVector {
                label: label.into(),
                parity,
            })
            .collect();
        for (i, b) in basis.iter().enumerate() {
            if basis[..i].iter().any(|c| c.label == b.label) {
                return Err(Error::DuplicateLabel(b.label.clone()));
            }
        }
        Ok(SuperSpace { basis })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn dim0(&self) -> usize {
        self.basis.iter().filter(|b| b.parity == Parity::Even).count()
    }

    pub fn dim1(&self) -> usize {
        self.dim() - self.dim0()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn parity(&self, index: usize) -> Parity {
        self.basis[index].parity
    }

    pub fn parities(&self) -> Vec<Parity> {
        self.basis.iter().map(|b| b.parity).collect()
    }

    pub fn label(&self, index: usize) -> &str {
        &self.basis[index].label
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.basis
            .iter()
            .position(|b| b.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn labels_of(&self, tuple: &[usize]) -> Vec<String> {
        tuple.iter().map(|&i| self.label(i).to_string()).collect()
    }

    pub fn tuple_parities(&self, tuple: &[usize]) -> Vec<Parity> {
        tuple.iter().map(|&i| self.parity(i)).collect()
    }

    /// Basis element `e_index`.
    pub fn basis_element(&self, index: usize) -> Element {
        Element::basis(index)
    }

    pub fn check_element(&self, x: &Element) -> Result<()> {
        match x.max_index() {
            Some(i) if i >= self.dim() => Err(Error::BasisIndexOutOfRange {
                index: i,
                dim: self.dim(),
            }),
            _ => Ok(()),
        }
    }

    /// Degree of a homogeneous element; `None` for mixed support. Zero is even.
    pub fn degree(&self, x: &Element) -> Option<Parity> {
        let mut it = x.support().map(|i| self.parity(i));
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    pub fn homogeneous_degree(&self, x: &Element) -> Result<Parity> {
        self.degree(x).ok_or(Error::NonHomogeneous)
    }

    pub fn format_element(&self, x: &Element) -> String {
        x.format_with(|i| self.label(i).to_string())
    }
}

/// Sparse vector: basis index -> nonzero coefficient.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    terms: BTreeMap<usize, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn basis(index: usize) -> Self {
        Element::term(index, Scalar::one())
    }

    pub fn term(index: usize, coeff: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(index, &coeff);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut e = Element::zero();
        for (i, c) in terms {
            e.add_term(i, &c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: usize) -> Scalar {
        self.terms.get(&index).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn max_index(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    /// `self += coeff * e_index`, dropping cancelled terms.
    pub fn add_term(&mut self, index: usize, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(index).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&index);
        }
    }

    /// `self += coeff * other`.
    pub fn add_scaled(&mut self, other: &Element, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        for (i, c) in other.terms() {
            self.add_term(i, &(c * coeff));
        }
    }

    pub fn scaled(&self, coeff: &Scalar) -> Element {
        if coeff.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(&i, c)| (i, c * coeff)).collect(),
        }
    }

    pub fn negated(&self) -> Element {
        Element {
            terms: self.terms.iter().map(|(&i, c)| (i, -c)).collect(),
        }
    }

    pub fn plus(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn minus(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    pub fn format_with(&self, label: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (i, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(&label(i));
        }
        out
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(|i| format!("e[{i}]")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_arithmetic() {
        use Parity::*;
        assert_eq!(Odd + Odd, Even);
        assert_eq!(Odd * Odd, Odd);
        assert_eq!(Odd * Even, Even);
        assert_eq!(Parity::sum([Odd, Odd, Odd]), Odd);
    }

    #[test]
    fn labels_must_be_unique() {
        let err = SuperSpace::new([("a", Parity::Even), ("a", Parity::Odd)]).unwrap_err();
        assert!(matches!(err, Error::DuplicateLabel(_)));
    }

    #[test]
    fn elements_never_store_zeros() {
        let mut x = Element::term(0, Scalar::from_int(2));
        x.add_term(0, &Scalar::from_int(-2));
        assert!(x.is_zero());
        let y = Element::from_terms([(1, Scalar::zero()), (2, Scalar::one())]);
        assert_eq!(y.len(), 1);
    }

    #[test]
    fn degree_of_mixed_support() {
        let v = SuperSpace::new([("x", Parity::Even), ("t", Parity::Odd)]).unwrap();
        assert_eq!(v.degree(&Element::basis(1)), Some(Parity::Odd));
        assert_eq!(v.degree(&Element::zero()), Some(Parity::Even));
        let mixed = Element::basis(0).plus(&Element::basis(1));
        assert_eq!(v.degree(&mixed), None);
        assert_eq!(v.format_element(&mixed.scaled(&Scalar::ratio(-1, 2))), "-1/2*x - 1/2*t");
    }
}
