//! Exact arithmetic kernel.
//!
//! Everything above this module works over one of three coefficient fields:
//! the rationals, the one-parameter field `ℚ(a)` (a [`RationalFunction`] over
//! ℚ), and residue fields `ℚ[t]/(p)` for an irreducible `p`.  Polynomials are
//! dense and carry a variable name for printing only.

mod factor;
mod parse;
mod place;
mod poly;
mod ratfunc;
mod residue;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use factor::{factor_disc, rational_roots, squarefree_decomposition, Factorization};
pub use parse::{parse_expr, parse_poly, parse_qa_poly, parse_ratfunc, Expr, ParseError};
pub use place::{residue_at, valuation, Place, INFINITE_VALUATION};
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use residue::{Residue, ResidueField};

pub type Rational = num_rational::BigRational;

/// The field `ℚ(a)` of the formal parameter.
pub type Qa = RationalFunction<Rational>;

/// Commutative ring with unit containing ℚ.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn is_one(&self) -> bool {
        self.minus(&Self::one()).is_zero()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }

    /// Whether the printed form needs parentheses when used as a factor.
    fn is_compound(&self) -> bool {
        let s = self.to_string();
        let body = s.strip_prefix('-').unwrap_or(&s);
        body.contains(" + ") || body.contains(" - ")
    }

    /// Whether the printed form starts with a minus sign.
    fn is_negative_display(&self) -> bool {
        !self.is_compound() && self.to_string().starts_with('-')
    }
}

pub trait Field: Ring {
    /// Multiplicative inverse; `None` only for zero.
    fn inverse(&self) -> Option<Self>;

    fn divide(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.times(&inv))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn is_compound(&self) -> bool {
        false
    }
    fn is_negative_display(&self) -> bool {
        self.is_negative()
    }
}

impl Field for Rational {
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Shorthand for the rational `n/d`.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer `n` as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `p/q`, `p`, or a decimal-free signed integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
