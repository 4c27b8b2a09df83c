//! Exact rational coefficients, backed by GMP.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::{Integer, Rational};

/// An exact rational number with arbitrary-precision numerator and
/// denominator.
///
/// Always kept in lowest terms with a positive denominator; a zero
/// coefficient is never stored inside a vector's support map.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coefficient(Rational);

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient(Rational::new())
    }

    pub fn one() -> Self {
        Coefficient(Rational::from(1))
    }

    /// Builds `num/den`. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Coefficient(Rational::from((num, den)))
    }

    pub fn from_int(n: i64) -> Self {
        Coefficient(Rational::from(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        Coefficient(r)
    }

    pub fn from_bigint(n: Integer) -> Self {
        Coefficient(Rational::from(n))
    }

    pub fn is_zero(&self) -> bool {
        self.0.cmp0() == Ordering::Equal
    }

    pub fn is_one(&self) -> bool {
        self.0 == 1
    }

    pub fn is_negative(&self) -> bool {
        self.0.cmp0() == Ordering::Less
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Coefficient(Rational::from(self.0.recip_ref()))
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn as_rational(&self) -> &Rational {
        &self.0
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from_int(n)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: Coefficient) -> Coefficient {
                Coefficient((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Coefficient> for &Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: &'a Coefficient) -> Coefficient {
                Coefficient(Rational::from((&self.0).$method(&rhs.0)))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Coefficient {
    type Output = Coefficient;
    fn div(self, rhs: Coefficient) -> Coefficient {
        assert!(!rhs.is_zero(), "division by zero");
        Coefficient(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Coefficient> for &Coefficient {
    type Output = Coefficient;
    fn div(self, rhs: &'a Coefficient) -> Coefficient {
        assert!(!rhs.is_zero(), "division by zero");
        Coefficient(Rational::from(&self.0 / &rhs.0))
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient(-self.0)
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient(Rational::from(-&self.0))
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Coefficient> for Coefficient {
    fn sub_assign(&mut self, rhs: &Coefficient) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Coefficient> for Coefficient {
    fn mul_assign(&mut self, rhs: &Coefficient) {
        self.0 *= &rhs.0;
    }
}
