//! Homogeneous linear maps `V -> V`.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;
use crate::space::{Element, Parity, SuperSpace};

/// A linear endomorphism stored by the images of the basis vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedLinearMap {
    parity: Parity,
    columns: Vec<Element>,
}

impl GradedLinearMap {
    /// Validates that every column lands in the parity class `|e_c| + parity`.
    pub fn from_columns(space: &SuperSpace, parity: Parity, columns: Vec<Element>) -> Result<Self> {
        if columns.len() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                found: columns.len(),
            });
        }
        for (c, col) in columns.iter().enumerate() {
            space.check_element(col)?;
            let want = space.parity(c) + parity;
            if col.support().any(|r| space.parity(r) != want) {
                return Err(Error::ParityViolation {
                    parity: parity.bit(),
                    column: space.label(c).to_string(),
                });
            }
        }
        Ok(GradedLinearMap { parity, columns })
    }

    /// Row-major matrix, `rows[r][c]` = coefficient of `e_r` in the image of `e_c`.
    pub fn from_matrix(space: &SuperSpace, parity: Parity, rows: &[Vec<Scalar>]) -> Result<Self> {
        let n = space.dim();
        if rows.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rows.len(),
            });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        let columns = (0..n)
            .map(|c| Element::from_terms((0..n).map(|r| (r, rows[r][c].clone()))))
            .collect();
        Self::from_columns(space, parity, columns)
    }

    /// Even diagonal map.
    pub fn diagonal(space: &SuperSpace, diag: &[Scalar]) -> Result<Self> {
        if diag.len() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                found: diag.len(),
            });
        }
        let columns = diag
            .iter()
            .enumerate()
            .map(|(i, d)| Element::term(i, d.clone()))
            .collect();
        Ok(GradedLinearMap {
            parity: Parity::Even,
            columns,
        })
    }

    /// Builds a map whose grading is already known to be correct.
    pub(crate) fn from_columns_unchecked(parity: Parity, columns: Vec<Element>) -> Self {
        GradedLinearMap { parity, columns }
    }

    pub fn identity(dim: usize) -> Self {
        GradedLinearMap {
            parity: Parity::Even,
            columns: (0..dim).map(Element::basis).collect(),
        }
    }

    pub fn zero(dim: usize, parity: Parity) -> Self {
        GradedLinearMap {
            parity,
            columns: vec![Element::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_even(&self) -> bool {
        self.parity == Parity::Even
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Element::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim())
    }

    /// Image of `e_c`.
    pub fn column(&self, c: usize) -> &Element {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[Element] {
        &self.columns
    }

    pub fn entry(&self, r: usize, c: usize) -> Scalar {
        self.columns[c].coeff(r)
    }

    pub fn matrix(&self) -> Vec<Vec<Scalar>> {
        let n = self.dim();
        (0..n).map(|r| (0..n).map(|c| self.entry(r, c)).collect()).collect()
    }

    pub fn apply(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for (c, coeff) in x.terms() {
            out.add_scaled(&self.columns[c], coeff);
        }
        out
    }

    fn check_dim(&self, other: &GradedLinearMap) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &GradedLinearMap) -> Result<GradedLinearMap> {
        self.check_dim(g)?;
        Ok(GradedLinearMap {
            parity: self.parity + g.parity,
            columns: g.columns.iter().map(|col| self.apply(col)).collect(),
        })
    }

    /// `self^k`, with `self^0 = Id`.
    pub fn power(&self, k: u32) -> GradedLinearMap {
        let mut acc = GradedLinearMap::identity(self.dim());
        for _ in 0..k {
            acc = self.compose(&acc).expect("same dimension");
        }
        acc
    }

    /// `D ∘ D' - (-1)^{|D||D'|} D' ∘ D`.
    pub fn supercommutator(&self, other: &GradedLinearMap) -> Result<GradedLinearMap> {
        let ab = self.compose(other)?;
        let ba = other.compose(self)?;
        let sign = if (self.parity * other.parity).is_odd() {
            Scalar::one()
        } else {
            -Scalar::one()
        };
        Ok(ab.add_scaled(&ba, &sign))
    }

    fn add_scaled(&self, other: &GradedLinearMap, coeff: &Scalar) -> GradedLinearMap {
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                let mut c = a.clone();
                c.add_scaled(b, coeff);
                c
            })
            .collect();
        GradedLinearMap {
            parity: self.parity,
            columns,
        }
    }

    pub fn scaled(&self, coeff: &Scalar) -> GradedLinearMap {
        GradedLinearMap {
            parity: self.parity,
            columns: self.columns.iter().map(|c| c.scaled(coeff)).collect(),
        }
    }

    /// Sum of two maps of the same parity.
    pub fn plus(&self, other: &GradedLinearMap) -> Result<GradedLinearMap> {
        self.check_dim(other)?;
        if self.parity != other.parity {
            return Err(Error::Precondition("adding maps of different parity".into()));
        }
        Ok(self.add_scaled(other, &Scalar::one()))
    }

    pub fn commutes_with(&self, other: &GradedLinearMap) -> bool {
        match (self.compose(other), other.compose(self)) {
            (Ok(a), Ok(b)) => a.columns == b.columns,
            _ => false,
        }
    }

    pub fn is_invertible(&self) -> bool {
        linalg::rank(&self.matrix()) == self.dim()
    }

    pub fn inverse(&self) -> Result<GradedLinearMap> {
        let inv = linalg::inverse(&self.matrix()).ok_or(Error::Singular)?;
        let n = self.dim();
        let columns = (0..n)
            .map(|c| Element::from_terms((0..n).map(|r| (r, inv[r][c].clone()))))
            .collect();
        Ok(GradedLinearMap {
            parity: self.parity,
            columns,
        })
    }

    /// Nullspace of the map, as a list of basis vectors.
    pub fn kernel_basis(&self) -> Vec<Element> {
        linalg::nullspace(&self.matrix(), self.dim())
            .into_iter()
            .map(|v| Element::from_terms(v.into_iter().enumerate()))
            .collect()
    }

    /// `true` when `x` lies in the kernel, decided by comparing the rank of the
    /// kernel basis with and without `x` appended.
    pub fn kernel_contains(&self, x: &Element) -> bool {
        let n = self.dim();
        let mut rows: Vec<Vec<Scalar>> = self
            .kernel_basis()
            .iter()
            .map(|v| (0..n).map(|i| v.coeff(i)).collect())
            .collect();
        let before = linalg::rank(&rows);
        rows.push((0..n).map(|i| x.coeff(i)).collect());
        linalg::rank(&rows) == before
    }

    pub fn format_with(&self, space: &SuperSpace) -> String {
        let parts: Vec<String> = (0..self.dim())
            .map(|c| format!("{} -> {}", space.label(c), space.format_element(&self.columns[c])))
            .collect();
        parts.join(", ")
    }
}

impl fmt::Debug for GradedLinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedLinearMap(parity {}, {:?})", self.parity, self.matrix())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space11() -> SuperSpace {
        SuperSpace::new([("e0", Parity::Even), ("e1", Parity::Odd)]).unwrap()
    }

    fn s(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    #[test]
    fn from_matrix_checks_parity() {
        let v = space11();
        let ok = GradedLinearMap::from_matrix(&v, Parity::Odd, &[vec![s(0, 1), s(1, 1)], vec![s(2, 1), s(0, 1)]]);
        assert!(ok.is_ok());
        let bad = GradedLinearMap::from_matrix(&v, Parity::Even, &[vec![s(0, 1), s(1, 1)], vec![s(0, 1), s(0, 1)]]);
        assert!(matches!(bad, Err(Error::ParityViolation { .. })));
    }

    #[test]
    fn powers_and_composition() {
        let v = space11();
        let alpha = GradedLinearMap::diagonal(&v, &[s(1, 1), s(1, 2)]).unwrap();
        assert!(alpha.power(0).is_identity());
        assert_eq!(
            alpha.power(2),
            GradedLinearMap::diagonal(&v, &[s(1, 1), s(1, 4)]).unwrap()
        );
        let odd =
            GradedLinearMap::from_matrix(&v, Parity::Odd, &[vec![s(0, 1), s(1, 1)], vec![s(1, 1), s(0, 1)]]).unwrap();
        assert_eq!(alpha.compose(&odd).unwrap().parity(), Parity::Odd);
        // [D, D] = 2 D∘D for odd D
        let sq = odd.compose(&odd).unwrap();
        assert_eq!(odd.supercommutator(&odd).unwrap(), sq.scaled(&s(2, 1)));
        assert!(GradedLinearMap::identity(2).supercommutator(&odd).unwrap().is_zero());
    }

    #[test]
    fn inverse_and_kernel() {
        let v = space11();
        let r = GradedLinearMap::diagonal(&v, &[s(1, 2), s(1, 1)]).unwrap();
        assert_eq!(
            r.inverse().unwrap(),
            GradedLinearMap::diagonal(&v, &[s(2, 1), s(1, 1)]).unwrap()
        );
        let p = GradedLinearMap::diagonal(&v, &[s(1, 1), s(0, 1)]).unwrap();
        assert!(matches!(p.inverse(), Err(Error::Singular)));
        assert!(p.kernel_contains(&Element::basis(1)));
        assert!(!p.kernel_contains(&Element::basis(0)));
        assert!(p.kernel_contains(&Element::zero()));
    }
}
