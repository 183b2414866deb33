//! The trisection `y = a` of the Hesse pencil: its cubic `x³ + A x + B`,
//! discriminant factorization, tangency, and genus bookkeeping for the curve
//! and its plane image.

use serde::Serialize;
use thiserror::Error;

use crate::basechange::{rh_genus, BranchProfile, Locus};
use crate::exactalg::{
    factor_disc, qi, rational_roots, Polynomial, Qa, Rational, RationalFunction, Ring,
};
use crate::weierstrass::hesse_model;

#[derive(Debug, Error, PartialEq)]
pub enum TrisectionError {
    #[error("mu + r = {0} is even")]
    Parity(i64),
    #[error("parameter a = 0 is excluded")]
    ZeroParameter,
}

/// Polynomials in `t` over `ℚ(a)`.
type Pt = Polynomial<Qa>;

fn a_var() -> Qa {
    Qa::var('a')
}

/// `A(a, t) = −3at`, `B(a, t) = −at³ + a − a²`.
#[derive(Clone, Debug, PartialEq)]
pub struct TrisectionCurve {
    pub a: Pt,
    pub b: Pt,
}

/// The trisection at a rational parameter.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpecializedTrisection {
    pub param: String,
    pub a: String,
    pub b: String,
    /// `a ∈ {0, 1}`.
    pub degenerate: bool,
    #[serde(skip)]
    pub a_poly: Polynomial<Rational>,
    #[serde(skip)]
    pub b_poly: Polynomial<Rational>,
}

impl TrisectionCurve {
    pub fn specialize(&self, a: &Rational) -> SpecializedTrisection {
        let ev = |p: &Pt| p.map(|c| c.eval(a).unwrap()).with_var('t');
        let (ap, bp) = (ev(&self.a), ev(&self.b));
        SpecializedTrisection {
            param: a.to_string(),
            a: ap.to_string(),
            b: bp.to_string(),
            degenerate: *a == qi(0) || *a == qi(1),
            a_poly: ap,
            b_poly: bp,
        }
    }
}

pub fn extract_trisection() -> TrisectionCurve {
    let a = a_var();
    let c = |x: Qa| Polynomial::constant(x, 't');
    let t = Polynomial::<Qa>::var('t');
    let big_a = &c(a.times(&Qa::from_i64(-3))) * &t;
    let big_b = &(&c(a.negate()) * &t.pow(3)) + &c(a.minus(&a.times(&a)));
    TrisectionCurve { a: big_a, b: big_b }
}

/// Whether `y = a` in the Hesse equation, read as a cubic in `x` over
/// `ℚ(a)(t)`, equals `−(x³ + A x + B)`.
pub fn substitution_identity_holds(curve: &TrisectionCurve) -> bool {
    type K = RationalFunction<Qa>;
    let embed = |f: &RationalFunction<Rational>| -> K {
        let up = |p: &Polynomial<Rational>| p.map(|c| Qa::constant(c.clone(), 'a')).with_var('t');
        RationalFunction::new(up(f.num()), up(f.den()))
    };
    let m = hesse_model();
    let [a1, a2, a3, a4, a6] = m.a.each_ref().map(embed);
    let y = K::constant(a_var(), 't');
    // y² + a1 x y + a3 y − x³ − a2 x² − a4 x − a6 as a polynomial in x
    let lhs = Polynomial::new(
        vec![y.times(&y).plus(&a3.times(&y)).minus(&a6), a1.times(&y).minus(&a4), a2.negate(), K::from_i64(-1)],
        'x',
    );
    let lift = |p: &Pt| K::from_poly(p.clone());
    let rhs = Polynomial::new(vec![lift(&curve.b), lift(&curve.a), K::zero(), K::one()], 'x');
    lhs == -rhs
}

/// Numeric version of the substitution identity at rational `(a, t, x)`.
pub fn substitution_sides(a: &Rational, t: &Rational, x: &Rational) -> (Rational, Rational) {
    let m = hesse_model();
    let ev = |i: usize| m.a[i].eval(t).unwrap();
    let y = a;
    let hesse = y * y + ev(0) * x * y + ev(2) * y - x * x * x - ev(1) * x * x - ev(3) * x - ev(4);
    let big_a = qi(-3) * a * t;
    let big_b = -(a * t * t * t) + a - a * a;
    (hesse, -(x * x * x + big_a * x + big_b))
}

/// `4A³ + 27B² = 27a²·Q(t³)` with `Q(u) = u² − 2(a+1)u + (a−1)²`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscFactorization {
    pub quadratic: Polynomial<Qa>,
    pub holds: bool,
}

impl DiscFactorization {
    pub fn root_sum(&self) -> Qa {
        self.quadratic.coeff(1).negate()
    }

    pub fn root_product(&self) -> Qa {
        self.quadratic.coeff(0)
    }

    pub fn at(&self, a: &Rational) -> Polynomial<Rational> {
        self.quadratic.map(|c| c.eval(a).unwrap()).with_var('u')
    }
}

pub fn disc_quadratic() -> Polynomial<Qa> {
    let a = a_var();
    let one = Qa::one();
    Polynomial::new(vec![a.minus(&one).pow(2), a.plus(&one).times(&Qa::from_i64(-2)), one], 'u')
}

pub fn disc_factorization(curve: &TrisectionCurve) -> DiscFactorization {
    let quad = disc_quadratic();
    let lhs = &(&curve.a.pow(3) * &Polynomial::constant(Qa::from_i64(4), 't'))
        + &(&curve.b.pow(2) * &Polynomial::constant(Qa::from_i64(27), 't'));
    let t3 = Polynomial::<Qa>::monomial(Qa::one(), 3, 't');
    let rhs = &quad.clone().with_var('t').compose(&t3) * &Polynomial::constant(Qa::from_i64(27).times(&a_var().pow(2)), 't');
    DiscFactorization { holds: lhs == rhs, quadratic: quad }
}

/// `Q(1)` as a polynomial in `a`: the condition for tangency to the fibers
/// over `t³ = 1`.
pub fn tangency_condition() -> Polynomial<Rational> {
    let v = disc_quadratic().eval(&Qa::one());
    v.as_polynomial().expect("Q(1) is polynomial in a").with_var('a')
}

/// Nonzero rational `a` with `u = 1` a root of the quadratic.
pub fn tangency_parameters() -> Vec<Rational> {
    rational_roots(&tangency_condition()).into_iter().filter(|a| *a != qi(0)).collect()
}

/// `δ = (μ + r − 1)/2`.
pub fn delta_invariant(mu: i64, r: i64) -> Result<i64, TrisectionError> {
    if (mu + r) % 2 == 0 {
        return Err(TrisectionError::Parity(mu + r));
    }
    Ok((mu + r - 1) / 2)
}

/// Class `α C0 + β F + Σ e_i E_i` with `C0² = −1`, `C0·F = 1`, `F² = 0` and
/// an orthogonal block of eight `(−2)`-classes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveClass {
    pub alpha: i64,
    pub beta: i64,
    pub exceptional: [i64; 8],
}

impl CurveClass {
    pub fn new(alpha: i64, beta: i64) -> Self {
        CurveClass { alpha, beta, exceptional: [0; 8] }
    }

    pub fn dot(&self, o: &CurveClass) -> i64 {
        let base = -self.alpha * o.alpha + self.alpha * o.beta + self.beta * o.alpha;
        base - 2 * self.exceptional.iter().zip(&o.exceptional).map(|(x, y)| x * y).sum::<i64>()
    }

    /// `K = −F`.
    pub fn canonical() -> Self {
        CurveClass::new(0, -1)
    }

    pub fn c0() -> Self {
        CurveClass::new(1, 0)
    }

    pub fn fiber() -> Self {
        CurveClass::new(0, 1)
    }

    /// Pairing with a curve known only through `X·C0` and `X·F` and orthogonal
    /// to the exceptional block.
    pub fn dot_numbers(&self, x_dot_c0: i64, x_dot_f: i64) -> i64 {
        self.alpha * x_dot_c0 + self.beta * x_dot_f
    }

    pub fn arithmetic_genus(&self) -> i64 {
        (self.dot(self) + Self::canonical().dot(self)) / 2 + 1
    }
}

impl std::fmt::Display for CurveClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}C0 + {}F", self.alpha, self.beta)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenusTable {
    pub class: String,
    pub self_intersection: i64,
    pub k_dot_d: i64,
    pub p_a: i64,
    pub triple_point_delta: i64,
    pub genus: i64,
    /// `D·C_i` for the eight nonzero torsion sections.
    pub d_dot_torsion: i64,
    pub plane_degree: i64,
    pub plane_p_a: i64,
    pub plane_delta_triple: i64,
    pub plane_delta_tacnode: i64,
    pub plane_genus: i64,
    /// The alternate formula `p_a − 7δ + δ′` (evaluates to 13).
    pub plane_genus_alt_formula: i64,
    pub rh_genus: u32,
}

/// Solve `D·F = 3`, `D·C0 = 0` for `D = αC0 + βF`.
pub fn class_and_genus() -> (CurveClass, i64, i64, i64) {
    let (f, c0) = (CurveClass::fiber(), CurveClass::c0());
    // D·F = α, D·C0 = β − α
    let alpha = 3;
    let beta = alpha;
    let d = CurveClass::new(alpha, beta);
    assert_eq!((d.dot(&f), d.dot(&c0)), (3, 0));
    let p_a = d.arithmetic_genus();
    let g = p_a - delta_invariant(4, 3).unwrap();
    (d.clone(), p_a, g, d.dot(&d))
}

/// Degree, arithmetic genus and geometric genus of the plane image: the
/// degree solves `K·D = −3·deg + 3·8`.
pub fn plane_image() -> (i64, i64, i64) {
    let k_dot_d = CurveClass::canonical().dot(&class_and_genus().0);
    // −3 = −3·deg + 24
    let deg = (24 - k_dot_d) / 3;
    let p_a = (deg - 1) * (deg - 2) / 2;
    let g = p_a - 7 * delta_invariant(4, 3).unwrap() - delta_invariant(10, 3).unwrap();
    (deg, p_a, g)
}

/// Genus of the trisection from its triple cover of the `t`-line, branched
/// simply over the six roots of `Q(t³)`.
pub fn trisection_rh_genus(a: &Rational) -> Option<u32> {
    let quad = disc_factorization(&extract_trisection()).at(a).with_var('t');
    let t3 = Polynomial::monomial(qi(1), 3, 't');
    let sextic = quad.compose(&t3);
    if !sextic.is_squarefree() || sextic.eval(&qi(0)) == qi(0) {
        return None;
    }
    let profile = BranchProfile::new(3, vec![(Locus::Roots(sextic), vec![2, 1])]).ok()?;
    rh_genus(&profile, 0).ok()
}

pub fn genus_table(a: &Rational) -> GenusTable {
    let (d, p_a, g, d2) = class_and_genus();
    let (deg, pp, pg) = plane_image();
    let (delta, delta2) = (delta_invariant(4, 3).unwrap(), delta_invariant(10, 3).unwrap());
    GenusTable {
        class: d.to_string(),
        self_intersection: d2,
        k_dot_d: CurveClass::canonical().dot(&d),
        p_a,
        triple_point_delta: delta,
        genus: g,
        d_dot_torsion: d.dot_numbers(0, 1),
        plane_degree: deg,
        plane_p_a: pp,
        plane_delta_triple: delta,
        plane_delta_tacnode: delta2,
        plane_genus: pg,
        plane_genus_alt_formula: pp - 7 * delta + delta2,
        rh_genus: trisection_rh_genus(a).unwrap_or(0),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrisectionReport {
    pub curve: SpecializedTrisection,
    pub identity_holds: bool,
    pub disc_identity_holds: bool,
    pub quadratic: String,
    pub root_sum: String,
    pub root_product: String,
    pub rational_roots: Vec<String>,
    pub factorization: String,
    pub tangent_to_i3: bool,
    pub genus: GenusTable,
}

pub fn trisection_report(a: &Rational) -> Result<TrisectionReport, TrisectionError> {
    if *a == qi(0) {
        return Err(TrisectionError::ZeroParameter);
    }
    let curve = extract_trisection();
    let df = disc_factorization(&curve);
    let quad = df.at(a);
    let fa = factor_disc(&quad);
    let mut factors: Vec<String> = fa.factors.iter().map(|(f, _)| format!("({f})")).collect();
    factors.extend(fa.unfactored.iter().map(|(f, _)| format!("({f})")));
    let roots = rational_roots(&quad);
    Ok(TrisectionReport {
        curve: curve.specialize(a),
        identity_holds: substitution_identity_holds(&curve),
        disc_identity_holds: df.holds,
        quadratic: quad.to_string(),
        root_sum: df.root_sum().eval(a).unwrap().to_string(),
        root_product: df.root_product().eval(a).unwrap().to_string(),
        tangent_to_i3: roots.contains(&qi(1)),
        rational_roots: roots.iter().map(|r| r.to_string()).collect(),
        factorization: factors.join(""),
        genus: genus_table(a),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basechange::branch_points_of_ea;
    use crate::exactalg::{parse_poly, q};

    #[test]
    fn coefficients() {
        let c = extract_trisection();
        assert_eq!(c.a.to_string(), "-3*a*t");
        let s4 = c.specialize(&qi(4));
        assert_eq!(s4.b_poly, parse_poly("-4*t^3 - 12", 't').unwrap());
        assert!(!s4.degenerate);
        let s1 = c.specialize(&qi(1));
        assert_eq!(s1.b_poly, parse_poly("-t^3", 't').unwrap());
        assert!(s1.degenerate);
        assert!(substitution_identity_holds(&c));
        let mut broken = c.clone();
        broken.b = &broken.b + &Polynomial::constant(Qa::one(), 't');
        assert!(!substitution_identity_holds(&broken));
    }

    #[test]
    fn discriminant() {
        let df = disc_factorization(&extract_trisection());
        assert!(df.holds);
        assert_eq!(df.at(&qi(4)), parse_poly("u^2 - 10*u + 9", 'u').unwrap());
        assert_eq!(rational_roots(&df.at(&qi(1))), vec![qi(0), qi(4)]);
        // same quadratic as the branch points of E_a → ℙ¹
        assert_eq!(df.quadratic.clone().with_var('r'), branch_points_of_ea().poly);
        let mut broken = extract_trisection();
        broken.a = &broken.a + &Polynomial::constant(Qa::one(), 't');
        assert!(!disc_factorization(&broken).holds);
    }

    #[test]
    fn tangency() {
        assert_eq!(tangency_condition(), parse_poly("a^2 - 4*a", 'a').unwrap());
        assert_eq!(tangency_parameters(), vec![qi(4)]);
        assert!(trisection_report(&qi(4)).unwrap().tangent_to_i3);
        assert!(!trisection_report(&qi(2)).unwrap().tangent_to_i3);
        assert_eq!(trisection_report(&qi(0)), Err(TrisectionError::ZeroParameter));
    }

    #[test]
    fn genus_chain() {
        assert_eq!(delta_invariant(4, 3), Ok(3));
        assert_eq!(delta_invariant(10, 3), Ok(6));
        assert_eq!(delta_invariant(1, 2), Ok(1));
        assert_eq!(delta_invariant(2, 2), Err(TrisectionError::Parity(4)));
        let (d, p_a, g, d2) = class_and_genus();
        assert_eq!((d.alpha, d.beta, p_a, g, d2), (3, 3, 4, 1, 9));
        assert_eq!(plane_image(), (9, 28, 1));
        let t = genus_table(&qi(2));
        assert_eq!((t.k_dot_d, t.d_dot_torsion, t.plane_genus_alt_formula, t.rh_genus), (-3, 3, 13, 1));
        assert_eq!(trisection_rh_genus(&q(7, 3)), Some(1));
    }
}
