//! Factorization of the discriminants that occur in practice.
//!
//! This is not a general factorizer.  After a squarefree decomposition and
//! extraction of rational roots, a remaining factor is accepted as irreducible
//! only with a certificate: degree at most 3, a cyclotomic polynomial, a
//! binomial `t^k - c` passing Capelli's test, or an Eisenstein prime.  Anything
//! else is reported as unfactored.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::{Polynomial, Rational, Ring};

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub unit: Rational,
    /// Monic irreducible factors with multiplicities.
    pub factors: Vec<(Polynomial<Rational>, u32)>,
    /// Monic squarefree pieces without an irreducibility certificate.
    pub unfactored: Vec<(Polynomial<Rational>, u32)>,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.unfactored.is_empty()
    }

    pub fn reconstruct(&self, var: char) -> Polynomial<Rational> {
        let mut acc = Polynomial::constant(self.unit.clone(), var);
        for (f, m) in self.factors.iter().chain(self.unfactored.iter()) {
            acc = &acc * &f.pow(*m);
        }
        acc
    }
}

/// Yun's algorithm: monic squarefree `g_i` with `f = lc · Π g_i^i`.
pub fn squarefree_decomposition(f: &Polynomial<Rational>) -> Vec<(Polynomial<Rational>, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let f = f.monic();
    let df = f.derivative();
    let mut a = f.gcd(&df);
    let mut b = f.exact_div(&a).unwrap();
    let mut c = df.exact_div(&a).unwrap();
    let mut d = &c - &b.derivative();
    let mut i = 1;
    loop {
        a = b.gcd(&d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).unwrap();
        if b.is_constant() {
            break;
        }
        c = d.exact_div(&a).unwrap();
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = big(1);
    while &d * &d <= n {
        if &n % &d == big(0) {
            small.push(d.clone());
            if &d * &d != n {
                large.push(&n / &d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn integer_coeffs(f: &Polynomial<Rational>) -> Vec<BigInt> {
    f.primitive().coeffs().iter().map(|c| c.to_integer()).collect()
}

/// Distinct rational roots.
pub fn rational_roots(f: &Polynomial<Rational>) -> Vec<Rational> {
    let mut roots = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let mut g = f.clone();
    if g.low_order().unwrap_or(0) > 0 {
        roots.push(Rational::zero());
        let k = g.low_order().unwrap();
        g = Polynomial::new(g.coeffs()[k..].to_vec(), g.variable());
        if g.is_constant() {
            return roots;
        }
    }
    let ints = integer_coeffs(&g);
    let ps = divisors(&ints[0]);
    let qs = divisors(ints.last().unwrap());
    let mut cand = Vec::new();
    for p in &ps {
        for qq in &qs {
            for s in [1, -1] {
                let r = Rational::new(p * BigInt::from(s), qq.clone());
                if !cand.contains(&r) {
                    cand.push(r);
                }
            }
        }
    }
    for r in cand {
        if g.eval(&r).is_zero() {
            roots.push(r);
        }
    }
    roots.sort();
    roots
}

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn mobius(mut n: u64) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// The cyclotomic polynomial `Φ_m = Π_{d|m} (t^d - 1)^{μ(m/d)}`.
pub fn cyclotomic(m: u64, var: char) -> Polynomial<Rational> {
    let one = Polynomial::constant(Rational::one(), var);
    let mut num = one.clone();
    let mut den = one.clone();
    for d in 1..=m {
        if !m.is_multiple_of(d) {
            continue;
        }
        let f = &Polynomial::monomial(Rational::one(), d as usize, var) - &one;
        match mobius(m / d) {
            1 => num = &num * &f,
            -1 => den = &den * &f,
            _ => {}
        }
    }
    num.exact_div(&den).unwrap()
}

fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return exact_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    (r.pow(k) == *n).then_some(r)
}

fn is_rational_power(c: &Rational, k: u32) -> bool {
    exact_root(c.numer(), k).is_some() && exact_root(c.denom(), k).is_some()
}

/// `Some(c)` when `f = t^k - c` with `k ≥ 2`.
fn binomial_constant(f: &Polynomial<Rational>) -> Option<(u32, Rational)> {
    let k = f.degree()?;
    if k < 2 || !f.is_monic() {
        return None;
    }
    if f.coeffs()[1..k].iter().any(|c| !c.is_zero()) || f.coeff(0).is_zero() {
        return None;
    }
    Some((k as u32, -f.coeff(0)))
}

/// Capelli: `t^k - c` is irreducible over ℚ iff `c ∉ ℚ^p` for every prime
/// `p | k`, and `c ∉ -4ℚ^4` when `4 | k`.
fn capelli_irreducible(k: u32, c: &Rational) -> bool {
    for p in prime_factors(k as u64) {
        if is_rational_power(c, p as u32) {
            return false;
        }
    }
    if k.is_multiple_of(4) && is_rational_power(&(-c / Rational::from_integer(BigInt::from(4))), 4) {
        return false;
    }
    true
}

fn eisenstein(f: &Polynomial<Rational>) -> bool {
    let ints = integer_coeffs(f);
    let n = ints.len() - 1;
    let mut g = big(0);
    for c in &ints[..n] {
        g = g.gcd(c);
    }
    if g == big(0) {
        return false;
    }
    let mut p = BigInt::from(2);
    let mut rest = g.clone();
    while rest > big(1) {
        if &rest % &p == big(0) {
            while &rest % &p == big(0) {
                rest /= &p;
            }
            let lead_ok = &ints[n] % &p != big(0);
            let const_ok = &ints[0] % (&p * &p) != big(0);
            if lead_ok && const_ok {
                return true;
            }
        }
        p += 1;
    }
    false
}

fn certified_irreducible(f: &Polynomial<Rational>) -> bool {
    let d = f.degree().unwrap_or(0);
    if d <= 3 {
        return true;
    }
    if let Some((k, c)) = binomial_constant(f) {
        if capelli_irreducible(k, &c) {
            return true;
        }
    }
    eisenstein(f)
}

/// Split a squarefree factor without rational roots.
fn split_rootless(f: Polynomial<Rational>, irreducible: &mut Vec<Polynomial<Rational>>, rest: &mut Vec<Polynomial<Rational>>) {
    let mut f = f;
    let var = f.variable();
    let mut m = 1u64;
    while f.degree().unwrap_or(0) >= 2 && m <= 4 * f.degree().unwrap() as u64 * f.degree().unwrap() as u64 + 6 {
        if euler_phi(m) as usize <= f.degree().unwrap() {
            let phi = cyclotomic(m, var);
            if let Some(qt) = f.exact_div(&phi) {
                irreducible.push(phi);
                f = qt;
                continue;
            }
        }
        m += 1;
    }
    if f.degree().unwrap_or(0) == 0 {
        return;
    }
    if certified_irreducible(&f) {
        irreducible.push(f);
        return;
    }
    if let Some(pieces) = split_binomial(&f) {
        for piece in pieces {
            split_squarefree(piece, irreducible, rest);
        }
        return;
    }
    rest.push(f);
}

/// A reducible binomial `t^k - c` as a product of two or more pieces.
fn split_binomial(f: &Polynomial<Rational>) -> Option<Vec<Polynomial<Rational>>> {
    let (k, c) = binomial_constant(f)?;
    let var = f.variable();
    for p in prime_factors(k as u64) {
        let p = p as u32;
        if let (Some(n), Some(dn)) = (exact_root(c.numer(), p), exact_root(c.denom(), p)) {
            // s^p - b^p = (s - b)(s^{p-1} + s^{p-2} b + ... + b^{p-1}), s = t^{k/p}
            let b = Rational::new(n, dn);
            let j = (k / p) as usize;
            let lin = &Polynomial::monomial(Rational::one(), j, var) - &Polynomial::constant(b.clone(), var);
            let mut other = Polynomial::zero_in(var);
            for i in 0..p {
                other = &other + &Polynomial::monomial(Ring::pow(&b, p - 1 - i), j * i as usize, var);
            }
            return Some(vec![lin, other]);
        }
    }
    if k % 4 == 0 {
        let b4 = -c / Rational::from_integer(BigInt::from(4));
        if let (Some(n), Some(dn)) = (exact_root(b4.numer(), 4), exact_root(b4.denom(), 4)) {
            // s^4 + 4b^4 = (s^2 + 2bs + 2b^2)(s^2 - 2bs + 2b^2), s = t^{k/4}
            let b = Rational::new(n, dn);
            let j = (k / 4) as usize;
            let two = Rational::from_integer(BigInt::from(2));
            let piece = |sign: Rational| {
                let mut g = Polynomial::monomial(Rational::one(), 2 * j, var);
                g = &g + &Polynomial::monomial(&two * &b * sign, j, var);
                &g + &Polynomial::constant(&two * &b * &b, var)
            };
            return Some(vec![piece(Rational::one()), piece(-Rational::one())]);
        }
    }
    None
}

fn split_squarefree(g: Polynomial<Rational>, irreducible: &mut Vec<Polynomial<Rational>>, rest: &mut Vec<Polynomial<Rational>>) {
    let var = g.variable();
    let mut g = g.monic();
    for r in rational_roots(&g) {
        let lin = Polynomial::new(vec![-r.clone(), Rational::one()], var);
        g = g.exact_div(&lin).unwrap();
        irreducible.push(lin);
    }
    split_rootless(g, irreducible, rest);
}

/// Factor `f ∈ ℚ[t]` as far as certificates allow.
pub fn factor_disc(f: &Polynomial<Rational>) -> Factorization {
    assert!(!f.is_zero(), "factor_disc of zero");
    let unit = f.leading();
    let mut factors = Vec::new();
    let mut unfactored = Vec::new();
    for (g, mult) in squarefree_decomposition(f) {
        let mut irr = Vec::new();
        let mut rest = Vec::new();
        split_squarefree(g, &mut irr, &mut rest);
        factors.extend(irr.into_iter().map(|p| (p, mult)));
        unfactored.extend(rest.into_iter().map(|p| (p, mult)));
    }
    factors.sort_by(|a, b| {
        (a.0.degree(), a.0.coeffs().to_vec()).partial_cmp(&(b.0.degree(), b.0.coeffs().to_vec())).unwrap()
    });
    Factorization { unit, factors, unfactored }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qi;

    fn p(c: &[i64]) -> Polynomial<Rational> {
        Polynomial::from_ints(c, 't')
    }

    #[test]
    fn cyclotomic_split() {
        let f = factor_disc(&p(&[-1, 0, 0, 1]));
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1, 1]), 1)]);
        assert!(f.is_complete());
    }

    #[test]
    fn multiplicities() {
        let f = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        let fa = factor_disc(&f);
        assert_eq!(fa.factors, vec![(p(&[-1, 1]), 2), (p(&[2, 1]), 1)]);
        assert_eq!(fa.reconstruct('t'), f);
    }

    #[test]
    fn quartic_cyclotomic_product() {
        // u^4 + u^2 + 1 = Φ3 Φ6
        let fa = factor_disc(&p(&[1, 0, 1, 0, 1]));
        assert_eq!(fa.factors, vec![(p(&[1, -1, 1]), 1), (p(&[1, 1, 1]), 1)]);
    }

    #[test]
    fn binomials() {
        let fa = factor_disc(&p(&[-9, 0, 0, 1]));
        assert_eq!(fa.factors, vec![(p(&[-9, 0, 0, 1]), 1)]);
        let fa = factor_disc(&p(&[-36, 0, 0, 0, 0, 0, 1]));
        assert!(fa.is_complete());
        assert_eq!(fa.reconstruct('t'), p(&[-36, 0, 0, 0, 0, 0, 1]));
        let fa = factor_disc(&p(&[4, 0, 0, 0, 1]));
        assert_eq!(fa.factors.len(), 2);
        assert_eq!(fa.reconstruct('t'), p(&[4, 0, 0, 0, 1]));
    }

    #[test]
    fn unfactored_is_explicit() {
        // (t^2 - 2)(t^2 - 3) has no rational roots and no certificate
        let f = &p(&[-2, 0, 1]) * &p(&[-3, 0, 1]);
        let fa = factor_disc(&f);
        assert!(!fa.is_complete());
        assert_eq!(fa.reconstruct('t'), f);
    }

    #[test]
    fn eisenstein_certificate() {
        let fa = factor_disc(&p(&[2, 2, 0, 0, 1]));
        assert!(fa.is_complete());
        assert_eq!(fa.factors[0].0.degree(), Some(4));
    }

    #[test]
    fn roots_and_squarefree() {
        assert_eq!(rational_roots(&p(&[9, -10, 1])), vec![qi(1), qi(9)]);
        let f = &p(&[0, 1]).pow(8) * &p(&[-1, 1]).pow(3);
        let sq = squarefree_decomposition(&f);
        assert_eq!(sq, vec![(p(&[-1, 1]), 3), (p(&[0, 1]), 8)]);
    }
}
