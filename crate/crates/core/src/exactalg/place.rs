use std::fmt;

use serde::{Serialize, Serializer};

use super::{Field, Polynomial, Rational, RationalFunction, Residue, ResidueField, Ring};

/// A closed point of `ℙ¹` over ℚ: a monic irreducible polynomial or ∞.
#[derive(Clone, Debug, PartialEq)]
pub enum Place {
    Finite(Polynomial<Rational>),
    Infinity,
}

/// Sentinel returned as the valuation of zero.
pub const INFINITE_VALUATION: i64 = i64::MAX;

impl Place {
    /// The place of a monic irreducible polynomial (normalized to monic).
    pub fn finite(p: Polynomial<Rational>) -> Place {
        assert!(p.degree().unwrap_or(0) >= 1, "a place needs a non-constant polynomial");
        Place::Finite(p.monic())
    }

    /// The rational point `var = c`.
    pub fn point(c: Rational, var: char) -> Place {
        Place::Finite(Polynomial::new(vec![-c, Rational::one()], var))
    }

    /// Number of geometric points, i.e. the degree of the residue field.
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree().unwrap(),
            Place::Infinity => 1,
        }
    }

    /// The rational coordinate of a degree-one finite place.
    pub fn rational_point(&self) -> Option<Rational> {
        match self {
            Place::Finite(p) if p.degree() == Some(1) => Some(-p.coeff(0)),
            _ => None,
        }
    }

    pub fn residue_field(&self) -> Option<ResidueField> {
        match self {
            Place::Finite(p) => Some(ResidueField::new(p.clone())),
            Place::Infinity => None,
        }
    }

    /// A uniformizer as a rational function in `var`.
    pub fn uniformizer(&self, var: char) -> RationalFunction<Rational> {
        match self {
            Place::Finite(p) => RationalFunction::from_poly(p.clone().with_var(var)),
            Place::Infinity => RationalFunction::var(var).inverse().unwrap(),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn poly_valuation(f: &Polynomial<Rational>, p: &Polynomial<Rational>) -> i64 {
    if f.is_zero() {
        return INFINITE_VALUATION;
    }
    let mut f = f.clone();
    let mut v = 0;
    while let Some(q) = f.exact_div(p) {
        f = q;
        v += 1;
    }
    v
}

/// Order of vanishing of `f` at `place`; `INFINITE_VALUATION` for `f = 0`.
pub fn valuation(f: &RationalFunction<Rational>, place: &Place) -> i64 {
    if f.is_zero() {
        return INFINITE_VALUATION;
    }
    match place {
        Place::Finite(p) => poly_valuation(f.num(), p) - poly_valuation(f.den(), p),
        Place::Infinity => f.den().degree().unwrap() as i64 - f.num().degree().unwrap() as i64,
    }
}

/// Image of `f` in the residue field; `None` if `f` has a pole there.
///
/// At ∞ the residue field is ℚ and the result carries no modulus.
pub fn residue_at(f: &RationalFunction<Rational>, place: &Place) -> Option<Residue> {
    let v = valuation(f, place);
    if v < 0 {
        return None;
    }
    if v > 0 {
        return Some(Residue::zero());
    }
    match place {
        Place::Finite(p) => {
            let k = ResidueField::new(p.clone());
            let n = k.reduce(f.num());
            let d = k.reduce(f.den());
            Some(n.times(&d.inverse().unwrap()))
        }
        Place::Infinity => {
            let c = f.num().leading() / f.den().leading();
            Some(Residue::from_rational(&c))
        }
    }
}
