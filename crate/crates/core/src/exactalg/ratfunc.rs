use std::fmt;

use super::{Field, Polynomial, Rational, Ring};

/// Quotient of polynomials in lowest terms with monic denominator.
#[derive(Clone, Debug)]
pub struct RationalFunction<F> {
    num: Polynomial<F>,
    den: Polynomial<F>,
}

impl<F: Field> PartialEq for RationalFunction<F> {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl<F: Field> RationalFunction<F> {
    /// `num/den` reduced; panics if `den` is zero.
    pub fn new(num: Polynomial<F>, den: Polynomial<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let var = den.variable();
        if num.is_zero() {
            return RationalFunction { num, den: Polynomial::constant(F::one(), var) };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap());
        let lc = den.leading().inverse().unwrap();
        num = num.scale(&lc);
        den = den.scale(&lc);
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Polynomial<F>) -> Self {
        let var = p.variable();
        RationalFunction { num: p, den: Polynomial::constant(F::one(), var) }
    }

    pub fn constant(c: F, var: char) -> Self {
        Self::from_poly(Polynomial::constant(c, var))
    }

    /// The field generator `var`.
    pub fn var(var: char) -> Self {
        Self::from_poly(Polynomial::var(var))
    }

    pub fn num(&self) -> &Polynomial<F> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<F> {
        &self.den
    }

    pub fn variable(&self) -> char {
        self.num.variable()
    }

    pub fn with_var(self, var: char) -> Self {
        RationalFunction { num: self.num.with_var(var), den: self.den.with_var(var) }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_polynomial(&self) -> Option<Polynomial<F>> {
        self.is_polynomial().then(|| self.num.scale(&self.den.leading().inverse().unwrap()))
    }

    pub fn as_constant(&self) -> Option<F> {
        (self.is_polynomial() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// The degree as a map `ℙ¹ → ℙ¹`: max of numerator and denominator degrees.
    pub fn map_degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    /// Value at `x`, `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        self.num.eval(x).divide(&self.den.eval(x))
    }

    /// `self(φ)` for a rational function `φ` in another (or the same) variable.
    pub fn compose(&self, phi: &RationalFunction<F>) -> RationalFunction<F> {
        let var = phi.variable();
        let embed = |c: &F| RationalFunction::constant(c.clone(), var);
        let n = self.num.eval_in(phi, embed);
        let d = self.den.eval_in(phi, embed);
        n.divide(&d).expect("composition lands on a pole identically")
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RationalFunction::new(n, &self.den * &self.den)
    }

    /// Apply a coefficient map to numerator and denominator.
    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> RationalFunction<G> {
        RationalFunction::new(self.num.map(&f), self.den.map(&f))
    }
}

impl<F: Field> Ring for RationalFunction<F> {
    fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }
    fn one() -> Self {
        RationalFunction { num: Polynomial::one(), den: Polynomial::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RationalFunction::new(&self.num + &other.num, self.den.clone());
        }
        RationalFunction::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }
    fn times(&self, other: &Self) -> Self {
        RationalFunction::new(&self.num * &other.num, &self.den * &other.den)
    }
    fn negate(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
    fn from_rational(q: &Rational) -> Self {
        RationalFunction { num: Polynomial::from_rational(q), den: Polynomial::one() }
    }
    fn is_compound(&self) -> bool {
        if self.is_polynomial() {
            self.num.is_compound()
        } else {
            true
        }
    }
    fn is_negative_display(&self) -> bool {
        self.is_polynomial() && self.num.is_negative_display()
    }
}

impl<F: Field> Field for RationalFunction<F> {
    fn inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RationalFunction::new(self.den.clone(), self.num.clone()))
        }
    }
}

impl<F: Field> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Polynomial<F>| {
            let s = p.to_string();
            if s.contains([' ', '*', '^']) {
                format!("({s})")
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qi;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction<Rational> {
        RationalFunction::new(Polynomial::from_ints(n, 't'), Polynomial::from_ints(d, 't'))
    }

    #[test]
    fn lowest_terms() {
        let f = rf(&[-1, 0, 1], &[-2, 2]);
        assert_eq!(f, rf(&[1, 1], &[2]));
        assert!(f.den().is_monic());
    }

    #[test]
    fn field_ops() {
        let f = rf(&[1, 1], &[0, 1]);
        let g = f.inverse().unwrap();
        assert!(f.times(&g).is_one());
        assert_eq!(f.minus(&f), RationalFunction::zero());
    }

    #[test]
    fn compose_and_degree() {
        let f = rf(&[0, 1], &[-1, 1]);
        let u2 = RationalFunction::from_poly(Polynomial::from_ints(&[0, 0, 1], 'u'));
        let c = f.compose(&u2);
        assert_eq!(c.num(), &Polynomial::from_ints(&[0, 0, 1], 'u'));
        assert_eq!(c.map_degree(), 2);
        assert_eq!(f.eval(&qi(1)), None);
        assert_eq!(f.eval(&qi(2)), Some(qi(2)));
    }

    #[test]
    fn display() {
        assert_eq!(rf(&[0, 1], &[-1, 1]).to_string(), "t/(t - 1)");
        assert_eq!(rf(&[1], &[0, 0, 1]).to_string(), "1/(t^2)");
    }
}
