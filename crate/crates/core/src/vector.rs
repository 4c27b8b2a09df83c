//! Vectors of the graded free module: finitely supported maps from module
//! terms to rational coefficients.

use std::sync::Arc;

use crate::coeff::Coefficient;
use crate::error::AlgebraError;
use crate::grading::{Homogeneity, MultiDegree, RingContext};
use crate::term::{ModuleTerm, Term};

/// An element of the free module `F`. The support is kept sorted by the
/// structural order on module terms (component, then exponents), with no
/// zero coefficients, so equal vectors compare equal componentwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleVector {
    ctx: Arc<RingContext>,
    terms: Vec<(ModuleTerm, Coefficient)>,
}

impl ModuleVector {
    pub fn zero(ctx: Arc<RingContext>) -> Self {
        ModuleVector { ctx, terms: vec![] }
    }

    /// Builds a vector from arbitrary (term, coefficient) pairs; repeated
    /// terms are combined and zeros dropped.
    pub fn from_terms(
        ctx: Arc<RingContext>,
        terms: Vec<(ModuleTerm, Coefficient)>,
    ) -> Result<Self, AlgebraError> {
        for (mt, _) in &terms {
            if mt.term.nvars() != ctx.nvars() {
                return Err(AlgebraError::DimensionMismatch {
                    what: "term length vs ring context",
                    expected: ctx.nvars(),
                    got: mt.term.nvars(),
                });
            }
            if mt.component >= ctx.rank() {
                return Err(AlgebraError::ComponentOutOfRange {
                    component: mt.component,
                    rank: ctx.rank(),
                });
            }
        }
        let mut terms = terms;
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(ModuleTerm, Coefficient)> = Vec::with_capacity(terms.len());
        for (mt, c) in terms {
            match out.last_mut() {
                Some((last, acc)) if *last == mt => {
                    *acc += &c;
                    if acc.is_zero() {
                        out.pop();
                    }
                }
                _ => {
                    if !c.is_zero() {
                        out.push((mt, c));
                    }
                }
            }
        }
        Ok(ModuleVector { ctx, terms: out })
    }

    /// Convenience constructor for a polynomial (rank-1 vector) from
    /// (coefficient, exponents) pairs.
    pub fn poly(ctx: Arc<RingContext>, terms: &[(i64, &[u32])]) -> Self {
        let list = terms
            .iter()
            .map(|(c, e)| {
                (
                    ModuleTerm::new(Term::new(e.to_vec()), 0),
                    Coefficient::from_int(*c),
                )
            })
            .collect();
        ModuleVector::from_terms(ctx, list).expect("well-formed polynomial literal")
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// Support in structural order.
    pub fn terms(&self) -> &[(ModuleTerm, Coefficient)] {
        &self.terms
    }

    pub fn coefficient_of(&self, mt: &ModuleTerm) -> Option<&Coefficient> {
        self.terms
            .binary_search_by(|(t, _)| t.cmp(mt))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    fn same_context(&self, other: &ModuleVector) -> Result<(), AlgebraError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch)
        }
    }

    pub fn add(&self, other: &ModuleVector) -> Result<ModuleVector, AlgebraError> {
        self.same_context(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &ModuleVector) -> Result<ModuleVector, AlgebraError> {
        self.same_context(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &ModuleVector, negate: bool) -> ModuleVector {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut left = self.terms.iter().peekable();
        let mut right = other.terms.iter().peekable();
        loop {
            match (left.peek(), right.peek()) {
                (Some((lt, lc)), Some((rt, rc))) => match lt.cmp(rt) {
                    std::cmp::Ordering::Less => {
                        out.push((lt.clone(), lc.clone()));
                        left.next();
                    }
                    std::cmp::Ordering::Greater => {
                        let c = if negate { -rc } else { rc.clone() };
                        out.push((rt.clone(), c));
                        right.next();
                    }
                    std::cmp::Ordering::Equal => {
                        let c = if negate { lc - rc } else { lc + rc };
                        if !c.is_zero() {
                            out.push((lt.clone(), c));
                        }
                        left.next();
                        right.next();
                    }
                },
                (Some(_), None) => {
                    out.extend(left.cloned());
                    break;
                }
                (None, Some(_)) => {
                    if negate {
                        out.extend(right.map(|(t, c)| (t.clone(), -c)));
                    } else {
                        out.extend(right.cloned());
                    }
                    break;
                }
                (None, None) => break,
            }
        }
        ModuleVector {
            ctx: self.ctx.clone(),
            terms: out,
        }
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: &Coefficient) -> ModuleVector {
        if c.is_zero() {
            return ModuleVector::zero(self.ctx.clone());
        }
        ModuleVector {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.clone(), a * c))
                .collect(),
        }
    }

    /// Multiply by `c * t`. Multiplication by a fixed term preserves the
    /// structural order of the support, so no re-sort is needed.
    pub fn scale_term(&self, c: &Coefficient, t: &Term) -> ModuleVector {
        if c.is_zero() {
            return ModuleVector::zero(self.ctx.clone());
        }
        ModuleVector {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mt, a)| (mt.mul_term(t), a * c))
                .collect(),
        }
    }

    pub fn neg(&self) -> ModuleVector {
        ModuleVector {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }

    /// The common degree of all support terms, if any.
    pub fn homogeneity(&self) -> Result<Homogeneity, AlgebraError> {
        let mut iter = self.terms.iter();
        let first = match iter.next() {
            None => return Ok(Homogeneity::AnyDegree),
            Some((mt, _)) => self.ctx.module_term_degree(mt)?,
        };
        for (mt, _) in iter {
            if self.ctx.module_term_degree(mt)? != first {
                return Ok(Homogeneity::NotHomogeneous);
            }
        }
        Ok(Homogeneity::Homogeneous(first))
    }

    /// Degree of a vector known to be homogeneous and non-zero.
    pub fn degree(&self) -> Result<Option<MultiDegree>, AlgebraError> {
        match self.homogeneity()? {
            Homogeneity::Homogeneous(d) => Ok(Some(d)),
            _ => Ok(None),
        }
    }
}

/// `is_homogeneous` as a free function on the spec surface.
pub fn is_homogeneous(v: &ModuleVector) -> Result<Homogeneity, AlgebraError> {
    v.homogeneity()
}
