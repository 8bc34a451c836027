//! Structure-constant tensors for n-ary brackets.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::map::GradedLinearMap;
use crate::orbit;
use crate::space::{Element, Parity, SuperSpace};
use crate::tuples::{flat_index, tuples, unflatten};

/// Dense table of bracket values on all basis tuples.
///
/// Tuples are stored in lexicographic order; evaluation on basis tuples is a
/// single index computation.
#[derive(Clone, PartialEq, Eq)]
pub struct NaryBracket {
    arity: usize,
    dim: usize,
    values: Vec<Element>,
}

impl std::fmt::Debug for NaryBracket {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.entries()).finish()
    }
}

impl NaryBracket {
    pub fn zero(dim: usize, arity: usize) -> Self {
        NaryBracket {
            arity,
            dim,
            values: vec![Element::zero(); dim.pow(arity as u32)],
        }
    }

    /// Builds the table by evaluating `f` on every basis tuple (in parallel).
    pub fn from_fn<F>(dim: usize, arity: usize, f: F) -> Self
    where
        F: Fn(&[usize]) -> Element + Sync + Send,
    {
        let len = dim.pow(arity as u32);
        let values = (0..len).into_par_iter().map(|i| f(&unflatten(dim, arity, i))).collect();
        NaryBracket { arity, dim, values }
    }

    /// Takes the listed entries verbatim; unlisted tuples are zero. Checks the
    /// grading of every entry.
    pub fn from_entries(
        space: &SuperSpace,
        arity: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, Element)>,
    ) -> Result<Self> {
        let b = Self::from_entries_unchecked(space.dim(), arity, entries)?;
        for t in tuples(space.dim(), arity) {
            b.check_entry(space, &t)?;
        }
        Ok(b)
    }

    /// Like [`from_entries`](Self::from_entries) but without the grading check,
    /// for deliberately malformed inputs.
    pub fn from_entries_unchecked(
        dim: usize,
        arity: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, Element)>,
    ) -> Result<Self> {
        let mut b = Self::zero(dim, arity);
        for (t, v) in entries {
            b.check_tuple(&t)?;
            if let Some(i) = v.support().find(|&i| i >= dim) {
                return Err(Error::BasisIndexOutOfRange { index: i, dim });
            }
            let slot = &mut b.values[flat_index(dim, &t)];
            *slot = slot.plus(&v);
        }
        Ok(b)
    }

    /// Builds a super-skew bracket from generating entries by orbit completion.
    pub fn skew_from_generators(
        space: &SuperSpace,
        arity: usize,
        generators: impl IntoIterator<Item = (Vec<usize>, Element)>,
    ) -> Result<Self> {
        let generators: Vec<_> = generators.into_iter().collect();
        for (t, v) in &generators {
            if t.len() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
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
            check_grading(space, t, v)?;
        }
        let swaps: Vec<usize> = (0..arity - 1).collect();
        Self::from_orbits(space, arity, generators, &swaps)
    }

    pub(crate) fn from_orbits(
        space: &SuperSpace,
        arity: usize,
        generators: Vec<(Vec<usize>, Element)>,
        swaps: &[usize],
    ) -> Result<Self> {
        let filled = orbit::complete(space, generators, swaps)?;
        Self::from_entries_unchecked(space.dim(), arity, filled)
    }

    /// Treats the nonzero entries as generators and fills their skew orbits.
    pub fn complete_skew_orbit(&self, space: &SuperSpace) -> Result<Self> {
        let generators: Vec<_> = self.entries().map(|(t, v)| (t, v.clone())).collect();
        Self::skew_from_generators(space, self.arity, generators)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check_tuple(&self, t: &[usize]) -> Result<()> {
        if t.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: t.len(),
            });
        }
        if let Some(&i) = t.iter().find(|&&i| i >= self.dim) {
            return Err(Error::BasisIndexOutOfRange {
                index: i,
                dim: self.dim,
            });
        }
        Ok(())
    }

    /// Value on a basis tuple. Panics on a malformed tuple.
    pub fn get(&self, tuple: &[usize]) -> &Element {
        debug_assert_eq!(tuple.len(), self.arity);
        &self.values[flat_index(self.dim, tuple)]
    }

    pub fn try_get(&self, tuple: &[usize]) -> Result<&Element> {
        self.check_tuple(tuple)?;
        Ok(self.get(tuple))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Element::is_zero)
    }

    /// Nonzero entries in lexicographic tuple order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, &Element)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (unflatten(self.dim, self.arity, i), v))
    }

    /// Multilinear extension to arbitrary elements.
    pub fn eval(&self, args: &[&Element]) -> Element {
        debug_assert_eq!(args.len(), self.arity);
        let mut out = Element::zero();
        let mut idx = vec![0usize; self.arity];
        self.eval_rec(args, 0, &crate::scalar::Scalar::one(), &mut idx, &mut out);
        out
    }

    fn eval_rec(
        &self,
        args: &[&Element],
        k: usize,
        coeff: &crate::scalar::Scalar,
        idx: &mut Vec<usize>,
        out: &mut Element,
    ) {
        if k == args.len() {
            out.add_scaled(self.get(idx), coeff);
            return;
        }
        for (i, c) in args[k].terms() {
            idx[k] = i;
            self.eval_rec(args, k + 1, &(coeff * c), idx, out);
        }
    }

    fn check_entry(&self, space: &SuperSpace, t: &[usize]) -> Result<()> {
        check_grading(space, t, self.get(t))
    }

    /// Tuples whose value leaves the parity class `Σ|e_{t_k}|`.
    pub fn grading_violations(&self, space: &SuperSpace) -> Vec<Vec<usize>> {
        self.entries()
            .filter(|(t, v)| check_grading(space, t, v).is_err())
            .map(|(t, _)| t)
            .collect()
    }

    /// Table of `t ↦ [m_1 e_{t_1}, ..., m_n e_{t_n}]`, where a `None` slot leaves
    /// the argument untouched.
    pub fn precompose(&self, maps: &[Option<&GradedLinearMap>]) -> Self {
        debug_assert_eq!(maps.len(), self.arity);
        if maps.iter().all(|m| m.is_none_or(|m| m.is_identity())) {
            return self.clone();
        }
        Self::from_fn(self.dim, self.arity, |t| {
            let args: Vec<Element> = t
                .iter()
                .zip(maps)
                .map(|(&i, m)| match m {
                    Some(m) => m.column(i).clone(),
                    None => Element::basis(i),
                })
                .collect();
            let refs: Vec<&Element> = args.iter().collect();
            self.eval(&refs)
        })
    }

    /// `f` applied to every value.
    pub fn postcompose(&self, f: &GradedLinearMap) -> Self {
        self.map_values(|v| f.apply(v))
    }

    /// New table with `f` applied to every value.
    pub fn map_values(&self, f: impl Fn(&Element) -> Element + Sync + Send) -> Self {
        NaryBracket {
            arity: self.arity,
            dim: self.dim,
            values: self.values.par_iter().map(f).collect(),
        }
    }
}

fn check_grading(space: &SuperSpace, t: &[usize], v: &Element) -> Result<()> {
    let want = Parity::sum(t.iter().map(|&i| space.parity(i)));
    if let Some(bad) = v.support().find(|&r| space.parity(r) != want) {
        return Err(Error::GradingViolation {
            tuple: space.labels_of(t),
            detail: format!(
                "value {} has component {} of parity {}, expected parity {}",
                space.format_element(v),
                space.label(bad),
                space.parity(bad),
                want
            ),
        });
    }
    Ok(())
}
