//! Parser for the ASCII polynomial syntax, e.g. `t^3 - 1`, `(a^2-a)*z^2 + 3*a*z`.

use num_bigint::BigInt;
use thiserror::Error;

use super::{Field, Polynomial, Qa, Rational, RationalFunction, Ring};

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("unexpected character {0:?} at {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("trailing input at {0}")]
    Trailing(usize),
    #[error("unknown variable {0:?}")]
    UnknownVariable(char),
    #[error("division by a non-constant or zero expression")]
    BadDivision,
    #[error("exponent too large")]
    BadExponent,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigInt),
    Var(char),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                b'-' => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                b'/' => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return match self.src.get(self.pos) {
                    Some(&c) => Err(ParseError::UnexpectedChar(c as char, self.pos)),
                    None => Err(ParseError::UnexpectedEnd),
                };
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| ParseError::BadExponent)?;
            if e > 1000 {
                return Err(ParseError::BadExponent);
            }
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            None => Err(ParseError::UnexpectedEnd),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return match self.peek() {
                        Some(c) => Err(ParseError::UnexpectedChar(c as char, self.pos)),
                        None => Err(ParseError::UnexpectedEnd),
                    };
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap();
                Ok(Expr::Num(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                Ok(Expr::Var(c as char))
            }
            Some(c) => Err(ParseError::UnexpectedChar(c as char, self.pos)),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(ParseError::Trailing(p.pos));
    }
    Ok(e)
}

impl Expr {
    /// Value as a rational constant, if the expression has no variables.
    pub fn constant(&self) -> Option<Rational> {
        self.eval_field::<Rational>(&|_| None).ok()
    }

    /// Evaluate in a ring; division is allowed only by nonzero constants.
    pub fn eval_ring<T: Ring>(&self, var: &dyn Fn(char) -> Option<T>) -> Result<T, ParseError> {
        Ok(match self {
            Expr::Num(n) => T::from_rational(&Rational::from_integer(n.clone())),
            Expr::Var(c) => var(*c).ok_or(ParseError::UnknownVariable(*c))?,
            Expr::Neg(e) => e.eval_ring(var)?.negate(),
            Expr::Add(a, b) => a.eval_ring(var)?.plus(&b.eval_ring(var)?),
            Expr::Sub(a, b) => a.eval_ring(var)?.minus(&b.eval_ring(var)?),
            Expr::Mul(a, b) => a.eval_ring(var)?.times(&b.eval_ring(var)?),
            Expr::Div(a, b) => {
                let d = b.constant().ok_or(ParseError::BadDivision)?;
                let inv = d.inverse().ok_or(ParseError::BadDivision)?;
                a.eval_ring(var)?.times(&T::from_rational(&inv))
            }
            Expr::Pow(e, k) => e.eval_ring(var)?.pow(*k),
        })
    }

    /// Evaluate in a field; any nonzero divisor is allowed.
    pub fn eval_field<T: Field>(&self, var: &dyn Fn(char) -> Option<T>) -> Result<T, ParseError> {
        Ok(match self {
            Expr::Num(n) => T::from_rational(&Rational::from_integer(n.clone())),
            Expr::Var(c) => var(*c).ok_or(ParseError::UnknownVariable(*c))?,
            Expr::Neg(e) => e.eval_field(var)?.negate(),
            Expr::Add(a, b) => a.eval_field(var)?.plus(&b.eval_field(var)?),
            Expr::Sub(a, b) => a.eval_field(var)?.minus(&b.eval_field(var)?),
            Expr::Mul(a, b) => a.eval_field(var)?.times(&b.eval_field(var)?),
            Expr::Div(a, b) => a.eval_field(var)?.divide(&b.eval_field(var)?).ok_or(ParseError::BadDivision)?,
            Expr::Pow(e, k) => e.eval_field(var)?.pow(*k),
        })
    }
}

/// Parse a polynomial over ℚ in the single variable `var`.
pub fn parse_poly(s: &str, var: char) -> Result<Polynomial<Rational>, ParseError> {
    let e = parse_expr(s)?;
    let p = e.eval_ring(&|c| (c == var).then(|| Polynomial::var(var)))?;
    Ok(p.with_var(var))
}

/// Parse a rational function over ℚ in `var`.
pub fn parse_ratfunc(s: &str, var: char) -> Result<RationalFunction<Rational>, ParseError> {
    let e = parse_expr(s)?;
    let f = e.eval_field(&|c| (c == var).then(|| RationalFunction::var(var)))?;
    Ok(f.with_var(var))
}

/// Parse a polynomial in `outer` with coefficients in `ℚ(param)`.
pub fn parse_qa_poly(s: &str, outer: char, param: char) -> Result<Polynomial<Qa>, ParseError> {
    let e = parse_expr(s)?;
    let p = e.eval_ring(&|c| {
        if c == outer {
            Some(Polynomial::var(outer))
        } else if c == param {
            Some(Polynomial::constant(RationalFunction::var(param), outer))
        } else {
            None
        }
    })?;
    Ok(p.with_var(outer))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{q, qi};

    #[test]
    fn round_trip_canonical() {
        for s in ["t^3 - 1", "3*t", "-t^2 + 1/2", "t^6 - 16*t^3 + 36"] {
            assert_eq!(parse_poly(s, 't').unwrap().to_string(), s);
        }
        let p = parse_qa_poly("(a^2-a)*z^2 + 3*a*z", 'z', 'a').unwrap();
        assert_eq!(p.to_string(), "(a^2 - a)*z^2 + 3*a*z");
    }

    #[test]
    fn arithmetic() {
        let p = parse_poly("(t-1)*(t+1) - t^2", 't').unwrap();
        assert_eq!(p, Polynomial::constant(qi(-1), 't'));
        let p = parse_poly("t/2 + 1/3", 't').unwrap();
        assert_eq!(p.coeff(1), q(1, 2));
        let f = parse_ratfunc("27*t^3*(t^3+8)^3/(t^3-1)^3", 't').unwrap();
        assert_eq!(f.map_degree(), 12);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_poly("t +", 't'), Err(ParseError::UnexpectedEnd));
        assert_eq!(parse_poly("x", 't'), Err(ParseError::UnknownVariable('x')));
        assert_eq!(parse_poly("1/t", 't'), Err(ParseError::BadDivision));
        assert!(matches!(parse_poly("t)", 't'), Err(ParseError::Trailing(_))));
    }
}
