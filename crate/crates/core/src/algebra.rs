use crate::bracket::NaryBracket;
use crate::error::{Error, Result};
use crate::map::GradedLinearMap;
use crate::space::{Element, Parity, SuperSpace};

/// An n-ary bracket on a graded space together with its twist family
/// `(α_1, ..., α_{n-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSuperAlgebra {
    name: String,
    space: SuperSpace,
    bracket: NaryBracket,
    twists: Vec<GradedLinearMap>,
}

impl HomSuperAlgebra {
    pub fn new(
        name: impl Into<String>,
        space: SuperSpace,
        bracket: NaryBracket,
        twists: Vec<GradedLinearMap>,
    ) -> Result<Self> {
        let n = bracket.arity();
        if n < 2 {
            return Err(Error::Precondition(format!("arity must be at least 2, got {n}")));
        }
        if bracket.dim() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                found: bracket.dim(),
            });
        }
        if twists.len() != n - 1 {
            return Err(Error::ArityMismatch {
                expected: n - 1,
                found: twists.len(),
            });
        }
        for t in &twists {
            if t.dim() != space.dim() {
                return Err(Error::DimensionMismatch {
                    expected: space.dim(),
                    found: t.dim(),
                });
            }
            if !t.is_even() {
                return Err(Error::NotEven("twist"));
            }
            // re-validate the grading of the columns against this space
            GradedLinearMap::from_columns(&space, Parity::Even, t.columns().to_vec())?;
        }
        if let Some(t) = bracket.grading_violations(&space).first() {
            let v = bracket.get(t);
            return Err(Error::GradingViolation {
                tuple: space.labels_of(t),
                detail: format!("value {} is not of the expected parity", space.format_element(v)),
            });
        }
        Ok(HomSuperAlgebra {
            name: name.into(),
            space,
            bracket,
            twists,
        })
    }

    /// Same twist `alpha` in every slot.
    pub fn with_alpha(
        name: impl Into<String>,
        space: SuperSpace,
        bracket: NaryBracket,
        alpha: GradedLinearMap,
    ) -> Result<Self> {
        let n = bracket.arity().max(2);
        Self::new(name, space, bracket, vec![alpha; n - 1])
    }

    /// No validation at all; for building deliberately broken inputs.
    pub fn new_unchecked(
        name: impl Into<String>,
        space: SuperSpace,
        bracket: NaryBracket,
        twists: Vec<GradedLinearMap>,
    ) -> Self {
        HomSuperAlgebra {
            name: name.into(),
            space,
            bracket,
            twists,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn bracket(&self) -> &NaryBracket {
        &self.bracket
    }

    pub fn twists(&self) -> &[GradedLinearMap] {
        &self.twists
    }

    pub fn arity(&self) -> usize {
        self.bracket.arity()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `true` when all twists are one shared map.
    pub fn multiplicative_flag(&self) -> bool {
        self.twists.windows(2).all(|w| w[0] == w[1])
    }

    /// The shared twist `α`; an error when the family is not uniform.
    pub fn alpha(&self) -> Result<&GradedLinearMap> {
        if !self.multiplicative_flag() {
            return Err(Error::NonUniformTwists);
        }
        Ok(&self.twists[0])
    }

    /// Same bracket with another twist family.
    pub fn with_twists(&self, twists: Vec<GradedLinearMap>) -> Result<Self> {
        Self::new(self.name.clone(), self.space.clone(), self.bracket.clone(), twists)
    }

    /// Checked multilinear evaluation.
    pub fn eval(&self, args: &[Element]) -> Result<Element> {
        if args.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: args.len(),
            });
        }
        for a in args {
            self.space.check_element(a)?;
        }
        let refs: Vec<&Element> = args.iter().collect();
        Ok(self.bracket.eval(&refs))
    }

    pub fn eval_labels(&self, labels: &[&str]) -> Result<Element> {
        let args = labels
            .iter()
            .map(|l| self.space.index_of(l).map(Element::basis))
            .collect::<Result<Vec<_>>>()?;
        self.eval(&args)
    }

    /// `y ↦ [x_1, ..., x_{n-1}, y]`, of parity `Σ|x_i|`.
    pub fn adjoint_map(&self, xs: &[Element]) -> Result<GradedLinearMap> {
        let n = self.arity();
        if xs.len() != n - 1 {
            return Err(Error::ArityMismatch {
                expected: n - 1,
                found: xs.len(),
            });
        }
        let mut parity = Parity::Even;
        for x in xs {
            self.space.check_element(x)?;
            parity = parity + self.space.homogeneous_degree(x)?;
        }
        let columns: Vec<Element> = (0..self.dim())
            .map(|c| {
                let e = Element::basis(c);
                let mut refs: Vec<&Element> = xs.iter().collect();
                refs.push(&e);
                self.bracket.eval(&refs)
            })
            .collect();
        Ok(GradedLinearMap::from_columns_unchecked(parity, columns))
    }

    /// Adjoint map for a tuple of basis vectors.
    pub(crate) fn adjoint_basis(&self, xs: &[usize]) -> GradedLinearMap {
        let parity = Parity::sum(xs.iter().map(|&i| self.space.parity(i)));
        let mut t = xs.to_vec();
        t.push(0);
        let last = t.len() - 1;
        let columns = (0..self.dim())
            .map(|c| {
                t[last] = c;
                self.bracket.get(&t).clone()
            })
            .collect();
        GradedLinearMap::from_columns_unchecked(parity, columns)
    }
}
