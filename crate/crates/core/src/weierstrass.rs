//! Long Weierstrass models `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6` over
//! `ℚ(t)`, their invariants, coordinate changes, the chart at infinity, and the
//! named models used throughout the crate.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{
    parse_ratfunc, qi, Field, ParseError, Polynomial, Qa, Rational, RationalFunction, Ring,
};

pub type Rf = RationalFunction<Rational>;

#[derive(Debug, Error, PartialEq)]
pub enum WeierstrassError {
    #[error("discriminant vanishes identically")]
    Degenerate,
    #[error("deg a{index} exceeds {index}·d")]
    DegreeViolation { index: u32 },
    #[error("model text: {0}")]
    Format(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Indices of the five coefficients.
pub const A_INDEX: [u32; 5] = [1, 2, 3, 4, 6];

#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassModel {
    /// `[a1, a2, a3, a4, a6]`.
    pub a: [Rf; 5],
    /// The fibration variable.
    pub var: char,
    /// Degree of the fundamental line bundle used by the chart at ∞.
    pub degree_bound: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StdInvariants {
    pub b2: Rf,
    pub b4: Rf,
    pub b6: Rf,
    pub b8: Rf,
    pub c4: Rf,
    pub c6: Rf,
    pub disc: Rf,
    pub j: Rf,
}

/// `(b2, b4, b6, b8)` over any ring.
pub fn b_invariants<T: Ring>(a: &[T; 5]) -> [T; 4] {
    let [a1, a2, a3, a4, a6] = a;
    let four = T::from_i64(4);
    let b2 = a1.times(a1).plus(&four.times(a2));
    let b4 = T::from_i64(2).times(a4).plus(&a1.times(a3));
    let b6 = a3.times(a3).plus(&four.times(a6));
    let b8 = a1
        .times(a1)
        .times(a6)
        .plus(&four.times(a2).times(a6))
        .minus(&a1.times(a3).times(a4))
        .plus(&a2.times(a3).times(a3))
        .minus(&a4.times(a4));
    [b2, b4, b6, b8]
}

/// `(c4, c6, Δ)` over any ring.
pub fn c_invariants<T: Ring>(a: &[T; 5]) -> [T; 3] {
    let [b2, b4, b6, b8] = b_invariants(a);
    let n = |k: i64| T::from_i64(k);
    let c4 = b2.times(&b2).minus(&n(24).times(&b4));
    let c6 = b2
        .pow(3)
        .negate()
        .plus(&n(36).times(&b2).times(&b4))
        .minus(&n(216).times(&b6));
    let disc = b2
        .times(&b2)
        .times(&b8)
        .negate()
        .minus(&n(8).times(&b4.pow(3)))
        .minus(&n(27).times(&b6).times(&b6))
        .plus(&n(9).times(&b2).times(&b4).times(&b6));
    [c4, c6, disc]
}

/// Apply `x = u²x' + r, y = u³y' + u²s·x' + t`.
pub fn urst<T: Field>(a: &[T; 5], u: &T, r: &T, s: &T, t: &T) -> [T; 5] {
    let [a1, a2, a3, a4, a6] = a;
    let n = |k: i64| T::from_i64(k);
    let ui = u.inverse().expect("coordinate change needs a unit u");
    let na1 = a1.plus(&n(2).times(s));
    let na2 = a2.minus(&s.times(a1)).plus(&n(3).times(r)).minus(&s.times(s));
    let na3 = a3.plus(&r.times(a1)).plus(&n(2).times(t));
    let na4 = a4
        .minus(&s.times(a3))
        .plus(&n(2).times(r).times(a2))
        .minus(&t.plus(&r.times(s)).times(a1))
        .plus(&n(3).times(r).times(r))
        .minus(&n(2).times(s).times(t));
    let na6 = a6
        .plus(&r.times(a4))
        .plus(&r.times(r).times(a2))
        .plus(&r.pow(3))
        .minus(&t.times(a3))
        .minus(&t.times(t))
        .minus(&r.times(t).times(a1));
    [
        na1.times(&ui),
        na2.times(&ui.pow(2)),
        na3.times(&ui.pow(3)),
        na4.times(&ui.pow(4)),
        na6.times(&ui.pow(6)),
    ]
}

impl WeierstrassModel {
    pub fn new(a: [Rf; 5], var: char, degree_bound: u32) -> Result<Self, WeierstrassError> {
        let a = a.map(|c| c.with_var(var));
        let m = WeierstrassModel { a, var, degree_bound };
        if c_invariants(&m.a)[2].is_zero() {
            return Err(WeierstrassError::Degenerate);
        }
        Ok(m)
    }

    /// Model with polynomial coefficients given by integer coefficient lists.
    pub fn from_int_polys(a: [&[i64]; 5], var: char, degree_bound: u32) -> Result<Self, WeierstrassError> {
        let a = a.map(|c| RationalFunction::from_poly(Polynomial::from_ints(c, var)));
        Self::new(a, var, degree_bound)
    }

    pub fn a1(&self) -> &Rf {
        &self.a[0]
    }
    pub fn a2(&self) -> &Rf {
        &self.a[1]
    }
    pub fn a3(&self) -> &Rf {
        &self.a[2]
    }
    pub fn a4(&self) -> &Rf {
        &self.a[3]
    }
    pub fn a6(&self) -> &Rf {
        &self.a[4]
    }

    pub fn discriminant(&self) -> Rf {
        c_invariants(&self.a)[2].clone()
    }

    /// Coordinate change by `(u, r, s, t)`; `u` must be nonzero.
    pub fn transform(&self, u: &Rf, r: &Rf, s: &Rf, t: &Rf) -> WeierstrassModel {
        WeierstrassModel { a: urst(&self.a, u, r, s, t).map(|c| c.with_var(self.var)), ..self.clone() }
    }

    /// Whether every coefficient is constant in the fibration variable.
    pub fn is_constant(&self) -> bool {
        self.a.iter().all(|c| c.as_constant().is_some())
    }

    /// Substitute a value for the fibration variable, giving a constant model.
    pub fn specialize(&self, value: &Rational) -> Result<WeierstrassModel, WeierstrassError> {
        let mut out = Vec::with_capacity(5);
        for c in &self.a {
            let v = c.eval(value).ok_or(WeierstrassError::Degenerate)?;
            out.push(RationalFunction::constant(v, 't'));
        }
        let a: [Rf; 5] = out.try_into().unwrap();
        WeierstrassModel::new(a, 't', 0)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, c) in A_INDEX.iter().zip(&self.a) {
            s.push_str(&format!("a{i} = {c}\n"));
        }
        s.push_str(&format!("var = {}\nd = {}\n", self.var, self.degree_bound));
        s
    }

    pub fn from_text(text: &str) -> Result<WeierstrassModel, WeierstrassError> {
        let mut fields: std::collections::BTreeMap<String, String> = Default::default();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| WeierstrassError::Format(format!("missing '=' in {line:?}")))?;
            fields.insert(k.trim().to_string(), v.trim().to_string());
        }
        let get = |k: &str| fields.get(k).ok_or_else(|| WeierstrassError::Format(format!("missing {k}")));
        let var = get("var")?.chars().next().ok_or_else(|| WeierstrassError::Format("empty var".into()))?;
        let d: u32 = get("d")?.parse().map_err(|_| WeierstrassError::Format("bad d".into()))?;
        let mut a = Vec::new();
        for i in A_INDEX {
            a.push(parse_ratfunc(get(&format!("a{i}"))?, var)?);
        }
        WeierstrassModel::new(a.try_into().unwrap(), var, d)
    }
}

impl fmt::Display for WeierstrassModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4, a6] = &self.a;
        let term = |c: &Rf, mono: &str| -> Option<String> {
            if c.is_zero() {
                None
            } else if c.is_one() {
                Some(mono.to_string())
            } else if mono.is_empty() {
                Some(format!("{c}"))
            } else {
                Some(format!("({c})*{mono}"))
            }
        };
        let lhs: Vec<String> = [Some("y^2".to_string()), term(a1, "x*y"), term(a3, "y")].into_iter().flatten().collect();
        let rhs: Vec<String> =
            [Some("x^3".to_string()), term(a2, "x^2"), term(a4, "x"), term(a6, "")].into_iter().flatten().collect();
        write!(f, "{} = {}", lhs.join(" + "), rhs.join(" + "))
    }
}

pub fn std_invariants(m: &WeierstrassModel) -> Result<StdInvariants, WeierstrassError> {
    let [b2, b4, b6, b8] = b_invariants(&m.a);
    let [c4, c6, disc] = c_invariants(&m.a);
    let j = c4.pow(3).divide(&disc).ok_or(WeierstrassError::Degenerate)?;
    Ok(StdInvariants { b2, b4, b6, b8, c4, c6, disc, j })
}

/// The Hesse pencil `y² + (3tx + t³ − 1)y = x³`.
pub fn hesse_model() -> WeierstrassModel {
    WeierstrassModel::from_int_polys([&[0, 3], &[], &[-1, 0, 0, 1], &[], &[]], 't', 1).unwrap()
}

/// The model in the coordinate `s = 1/t`: `a_i'(s) = s^{i·d} a_i(1/s)`.
pub fn chart_at_infinity(m: &WeierstrassModel) -> Result<WeierstrassModel, WeierstrassError> {
    use crate::exactalg::{valuation, Place};
    let new_var = match m.var {
        't' => 's',
        's' => 't',
        v => v,
    };
    let inv = RationalFunction::var(new_var).inverse().unwrap();
    let mut out = Vec::with_capacity(5);
    for (i, c) in A_INDEX.iter().zip(&m.a) {
        let bound = (i * m.degree_bound) as i64;
        if !c.is_zero() && valuation(c, &Place::Infinity) < -bound {
            return Err(WeierstrassError::DegreeViolation { index: *i });
        }
        let scale = RationalFunction::from_poly(Polynomial::monomial(qi(1), bound as usize, new_var));
        out.push(c.compose(&inv).times(&scale));
    }
    WeierstrassModel::new(out.try_into().unwrap(), new_var, m.degree_bound)
}

/// Polynomials in three variables, nested as `ℚ[x][y][z]`.
pub(crate) mod tri {
    use crate::exactalg::{Polynomial, Rational, Ring};

    pub type P3 = Polynomial<Polynomial<Polynomial<Rational>>>;

    pub fn c(n: i64) -> P3 {
        P3::from_i64(n)
    }

    /// Innermost variable.
    pub fn x(name: char, y_name: char, z_name: char) -> P3 {
        Polynomial::constant(Polynomial::constant(Polynomial::var(name), y_name), z_name)
    }

    /// Middle variable.
    pub fn y(y_name: char, z_name: char) -> P3 {
        Polynomial::constant(Polynomial::var(y_name), z_name)
    }

    /// Outermost variable.
    pub fn z(z_name: char) -> P3 {
        Polynomial::var(z_name)
    }
}

/// Certificate that `xprime_model` is the Weierstrass form of the quotient
/// equation `(y + v + 3w − 1)·y·v = w³`.
#[derive(Clone, Debug, Serialize)]
pub struct XPrimeCertificate {
    pub substitution: String,
    pub factor: String,
    pub holds: bool,
}

/// `Y² + (3vX + v³ − v²)Y = X³` together with its certificate.
pub fn xprime_model_certified() -> (WeierstrassModel, XPrimeCertificate) {
    use tri::*;
    let (w, yv, v) = (x('w', 'y', 'v'), y('y', 'v'), z('v'));
    let big_x = &v * &w;
    let big_y = &(&v * &v) * &yv;
    // W(X, Y) = Y² + (3vX + v³ − v²)Y − X³
    let a1 = &c(3) * &v;
    let a3 = &v.pow(3) - &v.pow(2);
    let lhs = &(&(&big_y * &big_y) + &(&(&a1 * &big_x) * &big_y)) + &(&(&a3 * &big_y) - &big_x.pow(3));
    let quotient_eq = &(&(&(&yv + &v) + &(&c(3) * &w)) - &c(1));
    let quotient_eq = &(&(quotient_eq * &yv) * &v) - &w.pow(3);
    let holds = lhs == &v.pow(3) * &quotient_eq;
    let model = WeierstrassModel::from_int_polys([&[0, 3], &[], &[0, 0, -1, 1], &[], &[]], 'v', 1).unwrap();
    let cert = XPrimeCertificate {
        substitution: "X = v*w, Y = v^2*y".into(),
        factor: "v^3".into(),
        holds,
    };
    (model, cert)
}

pub fn xprime_model() -> WeierstrassModel {
    let (m, cert) = xprime_model_certified();
    assert!(cert.holds, "quotient substitution identity failed");
    m
}

/// The base curve family `E_a` in Weierstrass form over `ℚ(a)`, with the
/// transform from the plane cubic `(a²−a)z² + 3a·x'z + a·z = x'³`.
#[derive(Clone, Debug)]
pub struct EaModel {
    pub model: WeierstrassModel,
    pub transform: String,
    /// `W(c·x', c²·z) = c³·cubic` with `c = a² − a`, checked in `ℚ(a)[x'][z]`.
    pub certified: bool,
}

pub fn ea_model() -> EaModel {
    let qa = |c: &[i64]| -> Qa { RationalFunction::from_poly(Polynomial::from_ints(c, 'a')) };
    // bivariate over ℚ(a): inner x', outer z
    type P2 = Polynomial<Polynomial<Qa>>;
    let k = |c: Qa| -> P2 { Polynomial::constant(Polynomial::constant(c, 'x'), 'z') };
    let xp: P2 = Polynomial::constant(Polynomial::var('x'), 'z');
    let z: P2 = Polynomial::var('z');
    let cc = qa(&[0, -1, 1]);
    let cubic = &(&(&(&k(cc.clone()) * &z.pow(2)) + &(&(&k(qa(&[0, 3])) * &xp) * &z)) + &(&k(qa(&[0, 1])) * &z)) - &xp.pow(3);
    let bx = &k(cc.clone()) * &xp;
    let by = &k(cc.times(&cc)) * &z;
    let a1 = k(qa(&[0, 3]));
    let a3 = k(qa(&[0, 0, -1, 1]));
    let w = &(&(&(&by * &by) + &(&(&a1 * &bx) * &by)) + &(&a3 * &by)) - &bx.pow(3);
    let certified = w == &k(cc.pow(3)) * &cubic;
    let model = WeierstrassModel::from_int_polys([&[0, 3], &[], &[0, 0, -1, 1], &[], &[]], 'a', 1).unwrap();
    EaModel { model, transform: "X = (a^2 - a)*x', Y = (a^2 - a)^2*z".into(), certified }
}

/// Certificate of `(y + t³ + k·xt − 1)·y·t³ − (xt)³ = t³·(y² + (3tx + t³ − 1)y − x³)`
/// for a given coefficient `k`; the true identity has `k = 3`.
pub fn quotient_identity_holds(k: i64) -> bool {
    use tri::*;
    let (x, y, t) = (x('x', 'y', 't'), y('y', 't'), z('t'));
    let t3 = t.pow(3);
    let xt = &x * &t;
    let lhs = &(&(&(&(&(&y + &t3) + &(&c(k) * &xt)) - &c(1)) * &y) * &t3) - &xt.pow(3);
    let hesse = &(&(&y * &y) + &(&(&(&(&c(3) * &t) * &x) + &(&t3 - &c(1))) * &y)) - &x.pow(3);
    lhs == &t3 * &hesse
}

pub fn quotient_identity_check() -> bool {
    quotient_identity_holds(3)
}

/// Both sides of the quotient identity at a rational point, for spot checks.
pub fn quotient_identity_sides(x: &Rational, y: &Rational, t: &Rational) -> (Rational, Rational) {
    let t3 = t * t * t;
    let xt = x * t;
    let lhs = (y + &t3 + qi(3) * &xt - qi(1)) * y * &t3 - &xt * &xt * &xt;
    let rhs = &t3 * (y * y + (qi(3) * t * x + &t3 - qi(1)) * y - x * x * x);
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{factor_disc, parse_ratfunc, valuation, Place};

    fn rf(s: &str, v: char) -> Rf {
        parse_ratfunc(s, v).unwrap()
    }

    #[test]
    fn hesse_invariants() {
        let m = hesse_model();
        assert_eq!(m.a1(), &rf("3*t", 't'));
        assert!(m.a2().is_zero() && m.a4().is_zero());
        let inv = std_invariants(&m).unwrap();
        assert_eq!(inv.disc, rf("27*(t^3-1)^3", 't'));
        assert_eq!(inv.c4, rf("9*t*(t^3+8)", 't'));
        assert_eq!(inv.j.map_degree(), 12);
        let fa = factor_disc(&inv.disc.as_polynomial().unwrap());
        let supp: Vec<String> = fa.factors.iter().map(|(p, _)| p.to_string()).collect();
        assert_eq!(supp, vec!["t - 1", "t^2 + t + 1"]);
    }

    #[test]
    fn invariant_identities() {
        for m in [hesse_model(), xprime_model(), ea_model().model] {
            let i = std_invariants(&m).unwrap();
            assert_eq!(i.c4.pow(3).minus(&i.c6.pow(2)), Rf::from_i64(1728).times(&i.disc));
            assert_eq!(Rf::from_i64(4).times(&i.b8), i.b2.times(&i.b6).minus(&i.b4.pow(2)));
        }
    }

    #[test]
    fn constant_model_has_j_zero() {
        let m = WeierstrassModel::from_int_polys([&[], &[], &[-1], &[], &[]], 't', 0).unwrap();
        let i = std_invariants(&m).unwrap();
        assert!(i.c4.is_zero() && i.j.is_zero());
        assert_eq!(chart_at_infinity(&m).unwrap().a, m.a);
    }

    #[test]
    fn chart_of_hesse() {
        let c = chart_at_infinity(&hesse_model()).unwrap();
        assert_eq!(c.a1(), &rf("3", 's'));
        assert_eq!(c.a3(), &rf("1 - s^3", 's'));
        assert_eq!(chart_at_infinity(&c).unwrap(), hesse_model());
        let bad = WeierstrassModel::from_int_polys([&[0, 0, 1], &[], &[-1], &[], &[]], 't', 1).unwrap();
        assert_eq!(chart_at_infinity(&bad), Err(WeierstrassError::DegreeViolation { index: 1 }));
    }

    #[test]
    fn xprime() {
        let (m, cert) = xprime_model_certified();
        assert!(cert.holds);
        assert_eq!(m.a3(), &rf("v^3 - v^2", 'v'));
        let i = std_invariants(&m).unwrap();
        assert_eq!(i.j.map_degree(), 4);
        assert_eq!(valuation(&i.disc, &Place::point(qi(0), 'v')), 8);
        assert_eq!(i.disc, rf("27*v^8*(v-1)^3", 'v'));
    }

    #[test]
    fn ea_j_invariant() {
        let e = ea_model();
        assert!(e.certified);
        let j = std_invariants(&e.model).unwrap().j;
        assert_eq!(j, rf("27*a*(a+8)^3/(a-1)^3", 'a'));
        let e4 = e.model.specialize(&qi(4)).unwrap();
        assert_eq!(std_invariants(&e4).unwrap().j.as_constant(), Some(qi(4 * 1728)));
        assert_eq!(j.eval(&qi(0)), Some(qi(0)));
        assert_eq!(e.model.specialize(&qi(1)), Err(WeierstrassError::Degenerate));
        assert_eq!(e.model.specialize(&qi(0)), Err(WeierstrassError::Degenerate));
    }

    #[test]
    fn quotient_identity() {
        assert!(quotient_identity_check());
        assert!(!quotient_identity_holds(2));
    }

    #[test]
    fn text_round_trip() {
        let m = hesse_model();
        assert_eq!(WeierstrassModel::from_text(&m.to_text()).unwrap(), m);
        assert_eq!(m.to_string(), "y^2 + (3*t)*x*y + (t^3 - 1)*y = x^3");
    }
}
