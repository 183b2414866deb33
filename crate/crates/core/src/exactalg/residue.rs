use std::fmt;
use std::sync::Arc;

use super::{Field, Polynomial, Rational, Ring};

/// The field `ℚ[t]/(p)` for a monic irreducible `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueField {
    modulus: Arc<Polynomial<Rational>>,
}

/// Element of a residue field, stored as its reduced representative.
///
/// Constants built through [`Ring::from_rational`] carry no modulus and adopt
/// the modulus of whatever they are combined with.
#[derive(Clone, Debug)]
pub struct Residue {
    value: Polynomial<Rational>,
    modulus: Option<Arc<Polynomial<Rational>>>,
}

impl ResidueField {
    /// The caller is responsible for irreducibility (see `factor_disc`).
    pub fn new(modulus: Polynomial<Rational>) -> Self {
        assert!(modulus.degree().unwrap_or(0) >= 1, "modulus must be non-constant");
        ResidueField { modulus: Arc::new(modulus.monic()) }
    }

    pub fn modulus(&self) -> &Polynomial<Rational> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn reduce(&self, f: &Polynomial<Rational>) -> Residue {
        Residue { value: f.rem(&self.modulus), modulus: Some(self.modulus.clone()) }
    }

    pub fn constant(&self, c: &Rational) -> Residue {
        self.reduce(&Polynomial::constant(c.clone(), self.modulus.variable()))
    }

    /// The class of the variable, i.e. a root of the modulus.
    pub fn generator(&self) -> Residue {
        self.reduce(&Polynomial::var(self.modulus.variable()))
    }
}

impl Residue {
    /// The reduced polynomial representative; it is also a lift to `ℚ[t]`.
    pub fn lift(&self) -> &Polynomial<Rational> {
        &self.value
    }

    fn modulus_of(&self, other: &Residue) -> Option<Arc<Polynomial<Rational>>> {
        match (&self.modulus, &other.modulus) {
            (Some(a), Some(b)) => {
                debug_assert!(a == b, "mixing residue fields");
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    fn build(value: Polynomial<Rational>, modulus: Option<Arc<Polynomial<Rational>>>) -> Residue {
        let value = match &modulus {
            Some(m) => value.rem(m),
            None => value,
        };
        Residue { value, modulus }
    }
}

impl PartialEq for Residue {
    fn eq(&self, other: &Self) -> bool {
        let m = self.modulus_of(other);
        let diff = Residue::build(&self.value - &other.value, m);
        diff.value.is_zero()
    }
}

impl Ring for Residue {
    fn zero() -> Self {
        Residue { value: Polynomial::zero(), modulus: None }
    }
    fn one() -> Self {
        Residue { value: Polynomial::one(), modulus: None }
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        Residue::build(&self.value + &other.value, self.modulus_of(other))
    }
    fn minus(&self, other: &Self) -> Self {
        Residue::build(&self.value - &other.value, self.modulus_of(other))
    }
    fn times(&self, other: &Self) -> Self {
        Residue::build(&self.value * &other.value, self.modulus_of(other))
    }
    fn negate(&self) -> Self {
        Residue { value: -&self.value, modulus: self.modulus.clone() }
    }
    fn from_rational(q: &Rational) -> Self {
        Residue { value: Polynomial::from_rational(q), modulus: None }
    }
    fn is_compound(&self) -> bool {
        self.value.is_compound()
    }
    fn is_negative_display(&self) -> bool {
        self.value.is_negative_display()
    }
}

impl Field for Residue {
    fn inverse(&self) -> Option<Self> {
        if self.value.is_zero() {
            return None;
        }
        match &self.modulus {
            None => {
                let c = self.value.coeff(0).inverse()?;
                Some(Residue::from_rational(&c))
            }
            Some(m) => {
                let (g, s, _) = self.value.ext_gcd(m);
                assert!(g.is_constant(), "modulus is not irreducible");
                Some(Residue::build(s, Some(m.clone())))
            }
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qi;

    #[test]
    fn zeta3_arithmetic() {
        let k = ResidueField::new(Polynomial::from_ints(&[1, 1, 1], 't'));
        let z = k.generator();
        assert!(z.pow(3).is_one());
        assert!(!z.is_one());
        assert!(z.plus(&z.times(&z)).plus(&Residue::one()).is_zero());
        let inv = z.inverse().unwrap();
        assert_eq!(inv, z.times(&z));
        assert_eq!(k.constant(&qi(3)).times(&Residue::from_i64(2)), k.constant(&qi(6)));
    }

    #[test]
    fn inverse_of_constant_without_modulus() {
        let two = Residue::from_i64(2);
        assert_eq!(two.inverse().unwrap().times(&two), Residue::one());
    }
}
