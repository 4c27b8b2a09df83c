//! Terms (power products) and module terms.

use crate::error::AlgebraError;

/// A power product `x_1^{a_1} ... x_n^{a_n}`, stored as a dense exponent
/// vector of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    exponents: Vec<u32>,
}

impl Term {
    pub fn new(exponents: Vec<u32>) -> Self {
        Term { exponents }
    }

    /// The constant term `1` in `n` indeterminates.
    pub fn one(n: usize) -> Self {
        Term {
            exponents: vec![0; n],
        }
    }

    /// The single indeterminate `x_var^exp`.
    pub fn var(n: usize, var: usize, exp: u32) -> Self {
        let mut exponents = vec![0; n];
        exponents[var] = exp;
        Term { exponents }
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Total degree (sum of exponents).
    pub fn total_degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    /// Product of two terms. Panics on exponent overflow; inputs validated at
    /// parse time keep this unreachable for realistic data.
    pub fn mul(&self, other: &Term) -> Term {
        debug_assert_eq!(self.nvars(), other.nvars());
        Term {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        }
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Term) -> Term {
        debug_assert_eq!(self.nvars(), other.nvars());
        Term {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Term) -> Term {
        debug_assert_eq!(self.nvars(), other.nvars());
        Term {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Term) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a <= b)
    }

    /// True iff `self` divides `other` and `self != other`.
    pub fn properly_divides(&self, other: &Term) -> bool {
        self.divides(other) && self != other
    }

    /// True iff `gcd(self, other) = 1`.
    pub fn coprime(&self, other: &Term) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// `self / other`. Errors when `other` does not divide `self`.
    pub fn quotient(&self, other: &Term) -> Result<Term, AlgebraError> {
        if !other.divides(self) {
            return Err(AlgebraError::NonDivisor(
                self.exponents.clone(),
                other.exponents.clone(),
            ));
        }
        Ok(Term {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a - b)
                .collect(),
        })
    }
}

/// A term of a free module: a power product tagged with a component index
/// `gamma` (0-based; component `k` stands for the basis vector `e_{k+1}`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModuleTerm {
    pub term: Term,
    pub component: usize,
}

impl ModuleTerm {
    pub fn new(term: Term, component: usize) -> Self {
        ModuleTerm { term, component }
    }

    /// Multiply the ring-term part by `t`, keeping the component.
    pub fn mul_term(&self, t: &Term) -> ModuleTerm {
        ModuleTerm {
            term: self.term.mul(t),
            component: self.component,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(e: &[u32]) -> Term {
        Term::new(e.to_vec())
    }

    #[test]
    fn lcm_of_leading_terms() {
        // lcm(x^3 z^2, x^3 y^4) = x^3 y^4 z^2
        assert_eq!(t(&[3, 0, 2]).lcm(&t(&[3, 4, 0])), t(&[3, 4, 2]));
    }

    #[test]
    fn divides_and_quotient_identity() {
        let a = t(&[2, 1, 3]);
        assert!(a.divides(&a));
        assert_eq!(a.quotient(&a).unwrap(), Term::one(3));
    }

    #[test]
    fn coprime_on_disjoint_supports() {
        // coprime(x^3, y z)
        assert!(t(&[3, 0, 0]).coprime(&t(&[0, 1, 1])));
        assert!(!t(&[3, 1, 0]).coprime(&t(&[0, 1, 1])));
    }

    #[test]
    fn quotient_of_non_divisor_is_error() {
        assert!(matches!(
            t(&[1, 0]).quotient(&t(&[0, 1])),
            Err(AlgebraError::NonDivisor(..))
        ));
    }

    #[test]
    fn proper_division_is_strict() {
        let a = t(&[1, 2]);
        assert!(!a.properly_divides(&a));
        assert!(a.properly_divides(&t(&[1, 3])));
    }
}
