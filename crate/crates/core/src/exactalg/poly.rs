use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Rational, Ring};

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
///
/// The variable name only matters for printing; arithmetic keeps whichever
/// operand has one.
#[derive(Clone, Debug)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
    var: Option<char>,
}

impl<R: Ring> PartialEq for Polynomial<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: Ring> Polynomial<R> {
    pub fn new(mut coeffs: Vec<R>, var: char) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs, var: Some(var) }
    }

    fn raw(mut coeffs: Vec<R>, var: Option<char>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs, var }
    }

    pub fn zero_in(var: char) -> Self {
        Polynomial { coeffs: Vec::new(), var: Some(var) }
    }

    pub fn constant(c: R, var: char) -> Self {
        Self::new(vec![c], var)
    }

    /// The polynomial `var`.
    pub fn var(var: char) -> Self {
        Self::new(vec![R::zero(), R::one()], var)
    }

    pub fn monomial(c: R, k: usize, var: char) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs, var)
    }

    pub fn from_ints(coeffs: &[i64], var: char) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_i64(c)).collect(), var)
    }

    pub fn variable(&self) -> char {
        self.var.unwrap_or('x')
    }

    pub fn with_var(mut self, var: char) -> Self {
        self.var = Some(var);
        self
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::raw(self.coeffs.iter().map(|x| x.times(c)).collect(), self.var)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Polynomial<S> {
        Polynomial::raw(self.coeffs.iter().map(f).collect(), self.var)
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(x).plus(c);
        }
        acc
    }

    /// Evaluate in an algebra over the coefficient ring.
    pub fn eval_in<S: Ring>(&self, x: &S, embed: impl Fn(&R) -> S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(x).plus(&embed(c));
        }
        acc
    }

    /// `self(g)`.
    pub fn compose(&self, g: &Polynomial<R>) -> Polynomial<R> {
        let mut acc = Polynomial::raw(Vec::new(), g.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Polynomial::raw(vec![c.clone()], g.var);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.times(&R::from_i64(i as i64)))
            .collect();
        Self::raw(coeffs, self.var)
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::raw(coeffs, self.var)
    }

    /// `x^n f(1/x)` for `n ≥ deg f`.
    pub fn reverse(&self, n: usize) -> Self {
        let mut coeffs = vec![R::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[n - i] = c.clone();
        }
        Self::raw(coeffs, self.var)
    }

    /// Lowest power of the variable dividing `self`; `None` for zero.
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn pick_var(&self, other: &Self) -> Option<char> {
        self.var.or(other.var)
    }
}

impl<F: Field> Polynomial<F> {
    pub fn monic(&self) -> Self {
        match self.leading().inverse() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.leading().inverse().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return (Self::raw(Vec::new(), self.pick_var(d)), self.clone());
        }
        let mut quo = vec![F::zero(); n - dd];
        for i in (0..n - dd).rev() {
            let c = rem[i + dd].times(&inv);
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] = rem[i + j].minus(&c.times(dc));
                }
            }
            quo[i] = c;
        }
        rem.truncate(dd);
        (Self::raw(quo, self.pick_var(d)), Self::raw(rem, self.pick_var(d)))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, f: &Self) -> bool {
        f.rem(self).is_zero()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s·self + t·other = g` and `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let var = self.pick_var(other);
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::raw(vec![F::one()], var), Self::raw(Vec::new(), var));
        let (mut t0, mut t1) = (Self::raw(Vec::new(), var), Self::raw(vec![F::one()], var));
        while !r1.is_zero() {
            let (qt, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&qt * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&qt * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().inverse() {
            Some(inv) => (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)),
            None => (r0, s0, t0),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }
}

impl Polynomial<Rational> {
    /// Clear denominators and content: primitive integer polynomial with
    /// positive leading coefficient, as rationals.
    pub fn primitive(&self) -> Self {
        use num_integer::Integer;
        use num_traits::{Signed, Zero};
        if self.is_zero() {
            return self.clone();
        }
        let mut den = num_bigint::BigInt::from(1);
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<num_bigint::BigInt> =
            self.coeffs.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
        let mut g = num_bigint::BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if self.leading().is_negative() {
            g = -g;
        }
        self.map(|c| c * Rational::from_integer(den.clone()) / Rational::from_integer(g.clone()))
    }
}

impl<R: Ring> Ring for Polynomial<R> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new(), var: None }
    }
    fn one() -> Self {
        Polynomial { coeffs: vec![R::one()], var: None }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
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
        Self::raw(vec![R::from_rational(q)], None)
    }
}

impl<'a, R: Ring> Add<&'a Polynomial<R>> for &'a Polynomial<R> {
    type Output = Polynomial<R>;
    fn add(self, rhs: &Polynomial<R>) -> Polynomial<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Polynomial::raw(coeffs, self.pick_var(rhs))
    }
}

impl<'a, R: Ring> Sub<&'a Polynomial<R>> for &'a Polynomial<R> {
    type Output = Polynomial<R>;
    fn sub(self, rhs: &Polynomial<R>) -> Polynomial<R> {
        self + &(-rhs)
    }
}

impl<'a, R: Ring> Mul<&'a Polynomial<R>> for &'a Polynomial<R> {
    type Output = Polynomial<R>;
    fn mul(self, rhs: &Polynomial<R>) -> Polynomial<R> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial::raw(Vec::new(), self.pick_var(rhs));
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
            }
        }
        Polynomial::raw(coeffs, self.pick_var(rhs))
    }
}

impl<R: Ring> Neg for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn neg(self) -> Polynomial<R> {
        Polynomial::raw(self.coeffs.iter().map(|c| c.negate()).collect(), self.var)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<R: Ring> $tr for Polynomial<R> {
            type Output = Polynomial<R>;
            fn $m(self, rhs: Polynomial<R>) -> Polynomial<R> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<R: Ring> Neg for Polynomial<R> {
    type Output = Polynomial<R>;
    fn neg(self) -> Polynomial<R> {
        -&self
    }
}

impl<R: Ring> fmt::Display for Polynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let v = self.variable();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative_display();
            let mag = if neg { c.negate() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{k}"),
            };
            if k == 0 {
                if mag.is_compound() && !self.coeffs[1..].iter().all(|c| c.is_zero()) {
                    write!(f, "({mag})")?;
                } else {
                    write!(f, "{mag}")?;
                }
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else if mag.is_compound() {
                write!(f, "({mag})*{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}
