//! Kodaira fiber types, Tate's algorithm at a place of `ℙ¹_ℚ`, fiber
//! configurations and the numerology of the resulting surface.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exactalg::{
    factor_disc, q, qi, residue_at, valuation, Field, Place, Polynomial, Rational, RationalFunction, Residue,
    Ring,
};
use crate::weierstrass::{b_invariants, c_invariants, chart_at_infinity, urst, Rf, WeierstrassError, WeierstrassModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KodairaType {
    I0,
    I(u32),
    II,
    III,
    IV,
    I0Star,
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonodromyOrder {
    Finite(u32),
    Infinite,
}

impl fmt::Display for MonodromyOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonodromyOrder::Finite(n) => write!(f, "{n}"),
            MonodromyOrder::Infinite => write!(f, "infinite"),
        }
    }
}

pub type Mat2 = [[i64; 2]; 2];

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

pub const IDENTITY: Mat2 = [[1, 0], [0, 1]];

impl KodairaType {
    /// `In` for `n ≥ 1`, `I0` for `n = 0`.
    pub fn i_n(n: u32) -> KodairaType {
        if n == 0 {
            KodairaType::I0
        } else {
            KodairaType::I(n)
        }
    }

    /// `In*` for `n ≥ 1`, `I0*` for `n = 0`.
    pub fn i_n_star(n: u32) -> KodairaType {
        if n == 0 {
            KodairaType::I0Star
        } else {
            KodairaType::IStar(n)
        }
    }

    pub fn euler(&self) -> u32 {
        use KodairaType::*;
        match *self {
            I0 => 0,
            I(n) => n,
            II => 2,
            III => 3,
            IV => 4,
            I0Star => 6,
            IStar(n) => n + 6,
            IVStar => 8,
            IIIStar => 9,
            IIStar => 10,
        }
    }

    /// Number of irreducible components.
    pub fn components(&self) -> u32 {
        use KodairaType::*;
        match *self {
            I0 | II => 1,
            I(n) => n,
            III => 2,
            IV => 3,
            I0Star => 5,
            IStar(n) => n + 5,
            IVStar => 7,
            IIIStar => 8,
            IIStar => 9,
        }
    }

    pub fn monodromy(&self) -> Mat2 {
        use KodairaType::*;
        match *self {
            I0 => IDENTITY,
            I(n) => [[1, n as i64], [0, 1]],
            II => [[1, 1], [-1, 0]],
            III => [[0, 1], [-1, 0]],
            IV => [[0, 1], [-1, -1]],
            I0Star => [[-1, 0], [0, -1]],
            IStar(n) => [[-1, -(n as i64)], [0, -1]],
            IVStar => [[-1, -1], [1, 0]],
            IIIStar => [[0, -1], [1, 0]],
            IIStar => [[0, -1], [1, 1]],
        }
    }

    pub fn monodromy_order(&self) -> MonodromyOrder {
        use KodairaType::*;
        match *self {
            I(_) | IStar(_) => MonodromyOrder::Infinite,
            I0 => MonodromyOrder::Finite(1),
            I0Star => MonodromyOrder::Finite(2),
            II | IIStar => MonodromyOrder::Finite(6),
            III | IIIStar => MonodromyOrder::Finite(4),
            IV | IVStar => MonodromyOrder::Finite(3),
        }
    }

    /// Whether the fiber is semistable (`In`, `n ≥ 0`).
    pub fn is_semistable(&self) -> bool {
        matches!(self, KodairaType::I0 | KodairaType::I(_))
    }

    /// Local height-pairing correction `contr(i, j)` between non-identity
    /// components; `None` for an invalid index.  Index 0 is the identity
    /// component and contributes 0.
    pub fn contr(&self, i: u32, j: u32) -> Option<Rational> {
        use KodairaType::*;
        let (i, j) = (i.min(j), i.max(j));
        let comps = match self {
            I(n) => *n,
            IV => 3,
            IVStar => 3,
            III | IIIStar => 2,
            I0Star | IStar(_) => 4,
            I0 | II | IIStar => 1,
        };
        if j >= comps {
            return None;
        }
        if i == 0 {
            return Some(qi(0));
        }
        Some(match *self {
            I(n) => q((i * (n - j)) as i64, n as i64),
            IV => {
                if i == j {
                    q(2, 3)
                } else {
                    q(1, 3)
                }
            }
            IVStar => {
                if i == j {
                    q(4, 3)
                } else {
                    q(2, 3)
                }
            }
            III => q(1, 2),
            IIIStar => q(3, 2),
            I0Star | IStar(_) => {
                let n = match *self {
                    IStar(n) => n as i64,
                    _ => 0,
                };
                match (i, j) {
                    (1, 1) => qi(1),
                    (1, _) => q(1, 2),
                    (a, b) if a == b => qi(1) + q(n, 4),
                    _ => q(1, 2) + q(n, 4),
                }
            }
            I0 | II | IIStar => unreachable!(),
        })
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use KodairaType::*;
        match self {
            I0 => write!(f, "I0"),
            I(n) => write!(f, "I{n}"),
            II => write!(f, "II"),
            III => write!(f, "III"),
            IV => write!(f, "IV"),
            I0Star => write!(f, "I0*"),
            IStar(n) => write!(f, "I{n}*"),
            IVStar => write!(f, "IV*"),
            IIIStar => write!(f, "III*"),
            IIStar => write!(f, "II*"),
        }
    }
}

impl FromStr for KodairaType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        use KodairaType::*;
        Ok(match s {
            "I0" => I0,
            "II" => II,
            "III" => III,
            "IV" => IV,
            "I0*" => I0Star,
            "IV*" => IVStar,
            "III*" => IIIStar,
            "II*" => IIStar,
            _ => {
                let body = s.strip_prefix('I').ok_or_else(|| format!("unknown fiber type {s:?}"))?;
                let (digits, star) = match body.strip_suffix('*') {
                    Some(d) => (d, true),
                    None => (body, false),
                };
                let n: u32 = digits.parse().map_err(|_| format!("unknown fiber type {s:?}"))?;
                if star {
                    KodairaType::i_n_star(n)
                } else {
                    KodairaType::i_n(n)
                }
            }
        })
    }
}

impl Serialize for KodairaType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum KodairaError {
    #[error("no irreducibility certificate for {0}")]
    Unfactored(String),
    #[error(transparent)]
    Model(#[from] WeierstrassError),
    #[error("euler number {0} is not a positive multiple of 12")]
    NotRelativelyMinimal(u32),
    #[error("Tate's algorithm invariant broken: {0}")]
    Internal(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct TateResult {
    pub kodaira: KodairaType,
    /// Locally minimal model at the place (in the chart coordinate at ∞).
    pub minimal: WeierstrassModel,
    pub v_disc: i64,
}

struct Local {
    place: Place,
    pi: Rf,
}

impl Local {
    fn v(&self, f: &Rf) -> i64 {
        valuation(f, &self.place)
    }

    fn res(&self, f: &Rf) -> Result<Residue, KodairaError> {
        residue_at(f, &self.place).ok_or_else(|| KodairaError::Internal(format!("non-integral {f}")))
    }

    fn lift(&self, r: &Residue) -> Rf {
        RationalFunction::from_poly(r.lift().clone())
    }

    fn div_pi(&self, f: &Rf, k: u32) -> Rf {
        f.divide(&self.pi.pow(k)).unwrap()
    }

    fn pi_pow(&self, k: u32) -> Rf {
        self.pi.pow(k)
    }

    fn residue_poly(&self, coeffs: &[Residue]) -> Polynomial<Residue> {
        Polynomial::new(coeffs.to_vec(), 'X')
    }

    fn require(&self, a: &[Rf; 5], mins: [i64; 5], step: &str) -> Result<(), KodairaError> {
        for (c, m) in a.iter().zip(mins) {
            if self.v(c) < m {
                return Err(KodairaError::Internal(format!("{step}: v({c}) < {m}")));
            }
        }
        Ok(())
    }
}

fn half() -> Residue {
    Residue::from_rational(&q(1, 2))
}

fn zero() -> Rf {
    Rf::zero()
}

fn one() -> Rf {
    Rf::one()
}

/// Tate's algorithm (residue characteristic 0) at a finite place.
fn tate_finite(m: &WeierstrassModel, place: &Place) -> Result<TateResult, KodairaError> {
    let var = m.var;
    let loc = Local { place: place.clone(), pi: place.uniformizer(var) };
    let mut a = m.a.clone();

    // integral model: scale by u = π^{-k}
    let mut k = 0i64;
    for (c, i) in a.iter().zip([1i64, 2, 3, 4, 6]) {
        if !c.is_zero() {
            let v = loc.v(c);
            if v < 0 {
                k = k.max((-v + i - 1) / i);
            }
        }
    }
    if k > 0 {
        let u = loc.pi_pow(k as u32).inverse().unwrap();
        a = urst(&a, &u, &zero(), &zero(), &zero());
    }

    let finish = |a: [Rf; 5], kod: KodairaType| -> Result<TateResult, KodairaError> {
        let minimal = WeierstrassModel { a: a.map(|c| c.with_var(var)), var, degree_bound: m.degree_bound };
        let v_disc = valuation(&minimal.discriminant(), place);
        Ok(TateResult { kodaira: kod, minimal, v_disc })
    };

    loop {
        let disc = c_invariants(&a)[2].clone();
        let vd = loc.v(&disc);
        if vd == 0 {
            return finish(a, KodairaType::I0);
        }

        // move the singular point of the reduction to (0, 0)
        let [b2, b4, b6, _] = b_invariants(&a);
        let two = Residue::from_i64(2);
        let f = loc.residue_poly(&[loc.res(&b6)?, two.times(&loc.res(&b4)?), loc.res(&b2)?, Residue::from_i64(4)]);
        let g = f.gcd(&f.derivative());
        let x0 = match g.degree() {
            Some(1) => g.coeff(0).negate(),
            Some(2) => loc.res(&b2)?.times(&Residue::from_rational(&q(-1, 12))),
            _ => return Err(KodairaError::Internal("reduction is not singular".into())),
        };
        a = urst(&a, &one(), &loc.lift(&x0), &zero(), &zero());
        let y0 = loc.res(&a[2])?.negate().times(&half());
        a = urst(&a, &one(), &zero(), &zero(), &loc.lift(&y0));
        loc.require(&a, [0, 0, 1, 1, 1], "singular point")?;

        let [b2, _, b6, b8] = b_invariants(&a);
        if loc.v(&b2) == 0 {
            return finish(a, KodairaType::I(vd as u32));
        }
        if loc.v(&a[4]) < 2 {
            return finish(a, KodairaType::II);
        }
        if loc.v(&b8) < 3 {
            return finish(a, KodairaType::III);
        }
        if loc.v(&b6) < 3 {
            return finish(a, KodairaType::IV);
        }

        let s = loc.res(&a[0])?.negate().times(&half());
        let t = loc.res(&loc.div_pi(&a[2], 1))?.negate().times(&half());
        a = urst(&a, &one(), &zero(), &loc.lift(&s), &loc.lift(&t).times(&loc.pi));
        loc.require(&a, [1, 1, 2, 2, 3], "step 6")?;

        let b = loc.res(&loc.div_pi(&a[1], 1))?;
        let c = loc.res(&loc.div_pi(&a[3], 2))?;
        let d = loc.res(&loc.div_pi(&a[4], 3))?;
        let cubic = loc.residue_poly(&[d, c, b.clone(), Residue::one()]);
        let g = cubic.gcd(&cubic.derivative());
        match g.degree() {
            Some(0) => return finish(a, KodairaType::I0Star),
            Some(1) => {
                let root = g.coeff(0).negate();
                a = urst(&a, &one(), &loc.lift(&root).times(&loc.pi), &zero(), &zero());
                let mut ix = 3u32;
                let mut iy = 3u32;
                loop {
                    let a3t = loc.res(&loc.div_pi(&a[2], iy - 1))?;
                    let a6t = loc.res(&loc.div_pi(&a[4], ix + iy - 2))?;
                    if !a3t.times(&a3t).plus(&Residue::from_i64(4).times(&a6t)).is_zero() {
                        break;
                    }
                    let t = a3t.negate().times(&half());
                    a = urst(&a, &one(), &zero(), &zero(), &loc.lift(&t).times(&loc.pi_pow(iy - 1)));
                    iy += 1;
                    let a2t = loc.res(&loc.div_pi(&a[1], 1))?;
                    let a4t = loc.res(&loc.div_pi(&a[3], ix))?;
                    let a6t = loc.res(&loc.div_pi(&a[4], ix + iy - 2))?;
                    if !a4t.times(&a4t).minus(&Residue::from_i64(4).times(&a6t).times(&a2t)).is_zero() {
                        break;
                    }
                    let r = a4t.negate().divide(&two.times(&a2t)).unwrap();
                    a = urst(&a, &one(), &loc.lift(&r).times(&loc.pi_pow(ix - 1)), &zero(), &zero());
                    ix += 1;
                }
                return finish(a, KodairaType::IStar(ix + iy - 5));
            }
            _ => {}
        }

        // triple root
        let root = b.negate().times(&Residue::from_rational(&q(1, 3)));
        a = urst(&a, &one(), &loc.lift(&root).times(&loc.pi), &zero(), &zero());
        let a32 = loc.res(&loc.div_pi(&a[2], 2))?;
        let a64 = loc.res(&loc.div_pi(&a[4], 4))?;
        if !a32.times(&a32).plus(&Residue::from_i64(4).times(&a64)).is_zero() {
            return finish(a, KodairaType::IVStar);
        }
        let t = a32.negate().times(&half());
        a = urst(&a, &one(), &zero(), &zero(), &loc.lift(&t).times(&loc.pi_pow(2)));
        if loc.v(&a[3]) < 4 {
            return finish(a, KodairaType::IIIStar);
        }
        if loc.v(&a[4]) < 6 {
            return finish(a, KodairaType::IIStar);
        }
        // not minimal: divide by π^i
        loc.require(&a, [1, 2, 3, 4, 6], "non-minimal")?;
        a = urst(&a, &loc.pi, &zero(), &zero(), &zero());
    }
}

/// Kodaira type and local minimal model of `m` at `place`.
pub fn tate_local(m: &WeierstrassModel, place: &Place) -> Result<TateResult, KodairaError> {
    match place {
        Place::Finite(_) => tate_finite(m, place),
        Place::Infinity => {
            let chart = chart_at_infinity(m)?;
            tate_finite(&chart, &Place::point(qi(0), chart.var))
        }
    }
}

/// Where a fiber sits: a place of the base `ℙ¹`, or a labelled point on a
/// cover curve that has no chosen coordinate.
#[derive(Clone, Debug, PartialEq)]
pub enum Site {
    Place(Place),
    Label(String),
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Site::Place(p) => write!(f, "{p}"),
            Site::Label(s) => write!(f, "{s}"),
        }
    }
}

impl Serialize for Site {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiberEntry {
    pub place: Site,
    #[serde(rename = "type")]
    pub kodaira: KodairaType,
    /// Number of geometric fibers (degree of the place).
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiberConfig {
    pub fibers: Vec<FiberEntry>,
    pub base_genus: u32,
}

impl FiberConfig {
    pub fn new(fibers: Vec<FiberEntry>, base_genus: u32) -> Self {
        FiberConfig { fibers, base_genus }
    }

    pub fn euler_total(&self) -> u32 {
        self.fibers.iter().map(|f| f.mult * f.kodaira.euler()).sum()
    }

    /// Geometric fiber counts per singular type.
    pub fn type_counts(&self) -> BTreeMap<KodairaType, u32> {
        let mut out = BTreeMap::new();
        for f in &self.fibers {
            if f.kodaira != KodairaType::I0 {
                *out.entry(f.kodaira).or_insert(0) += f.mult;
            }
        }
        out
    }

    /// Summary such as `2I3 + I6`, sorted by Euler number.
    pub fn summary(&self) -> String {
        let mut items: Vec<(KodairaType, u32)> = self.type_counts().into_iter().collect();
        items.sort_by_key(|(k, _)| (k.euler(), k.to_string()));
        if items.is_empty() {
            return "smooth".into();
        }
        items
            .iter()
            .map(|(k, n)| if *n == 1 { k.to_string() } else { format!("{n}{k}") })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Find the entry at a base place.
    pub fn at(&self, place: &Place) -> Option<&FiberEntry> {
        self.fibers.iter().find(|f| f.place == Site::Place(place.clone()))
    }

    /// Sum of `(m_v − 1)` over singular fibers, counted geometrically.
    pub fn extra_components(&self) -> u32 {
        self.fibers.iter().map(|f| f.mult * (f.kodaira.components() - 1)).sum()
    }
}

/// Places that can carry a singular fiber: factors of the discriminant's
/// numerator and denominator and of the coefficient denominators.
fn candidate_places(m: &WeierstrassModel) -> Result<Vec<Place>, KodairaError> {
    let disc = m.discriminant();
    let mut polys = vec![disc.num().clone(), disc.den().clone()];
    polys.extend(m.a.iter().map(|c| c.den().clone()));
    let mut places: Vec<Place> = Vec::new();
    for p in polys {
        if p.degree().unwrap_or(0) == 0 {
            continue;
        }
        let fa = factor_disc(&p);
        if let Some((u, _)) = fa.unfactored.first() {
            return Err(KodairaError::Unfactored(u.to_string()));
        }
        for (f, _) in fa.factors {
            let pl = Place::finite(f.with_var(m.var));
            if !places.contains(&pl) {
                places.push(pl);
            }
        }
    }
    places.push(Place::Infinity);
    Ok(places)
}

/// All singular fibers of a model over `ℙ¹`.
pub fn full_config(m: &WeierstrassModel) -> Result<FiberConfig, KodairaError> {
    let mut fibers = Vec::new();
    for place in candidate_places(m)? {
        let r = tate_local(m, &place)?;
        if r.kodaira != KodairaType::I0 {
            let mult = place.degree() as u32;
            fibers.push(FiberEntry { place: Site::Place(place), kodaira: r.kodaira, mult });
        }
    }
    Ok(FiberConfig::new(fibers, 0))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurfaceInvariants {
    pub chi_top: u32,
    pub deg_l: u32,
    pub p_g: i64,
    pub q: u32,
    pub h11: u32,
    pub classification: String,
}

pub fn surface_invariants(config: &FiberConfig) -> Result<SurfaceInvariants, KodairaError> {
    let chi = config.euler_total();
    if chi == 0 || !chi.is_multiple_of(12) {
        return Err(KodairaError::NotRelativelyMinimal(chi));
    }
    let d = chi / 12;
    let g = config.base_genus;
    let classification = match (g, d) {
        (0, 1) => "rational".to_string(),
        (0, 2) => "K3".to_string(),
        (1, 1) => "elliptic-elliptic".to_string(),
        _ => format!("({g},{d})"),
    };
    Ok(SurfaceInvariants {
        chi_top: chi,
        deg_l: d,
        p_g: d as i64 + g as i64 - 1,
        q: g,
        h11: 10 * d + 2 * g,
        classification,
    })
}

/// Dimension `10d + 2g − 2` of the moduli of such surfaces.
pub fn moduli_dimension(d: u32, g: u32) -> i64 {
    10 * d as i64 + 2 * g as i64 - 2
}

pub fn monodromy_order(t: KodairaType) -> MonodromyOrder {
    t.monodromy_order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weierstrass::{hesse_model, xprime_model};
    use KodairaType::*;

    fn model(a: [&[i64]; 5]) -> WeierstrassModel {
        WeierstrassModel::from_int_polys(a, 't', 1).unwrap()
    }

    #[test]
    fn table_values() {
        assert_eq!(IVStar.euler(), 8);
        assert_eq!(IV.euler(), 4);
        assert_eq!(IStar(2).euler(), 8);
        assert_eq!(IVStar.components(), 7);
        assert_eq!(I(6).components(), 6);
        assert_eq!(IVStar.monodromy_order(), MonodromyOrder::Finite(3));
        assert_eq!(I(3).monodromy_order(), MonodromyOrder::Infinite);
        assert_eq!(I0.monodromy_order(), MonodromyOrder::Finite(1));
        assert_eq!("I6".parse::<KodairaType>().unwrap(), I(6));
        assert_eq!("I2*".parse::<KodairaType>().unwrap(), IStar(2));
        assert_eq!(I(6).contr(2, 2), Some(q(4, 3)));
        assert_eq!(I(6).contr(0, 0), Some(qi(0)));
        assert_eq!(I(6).contr(6, 1), None);
    }

    #[test]
    fn hesse_places() {
        let m = hesse_model();
        assert_eq!(tate_local(&m, &Place::point(qi(1), 't')).unwrap().kodaira, I(3));
        let zeta = Place::finite(Polynomial::from_ints(&[1, 1, 1], 't'));
        assert_eq!(tate_local(&m, &zeta).unwrap().kodaira, I(3));
        assert_eq!(tate_local(&m, &Place::Infinity).unwrap().kodaira, I(3));
        let c = full_config(&m).unwrap();
        assert_eq!(c.summary(), "4I3");
        assert_eq!(c.euler_total(), 12);
    }

    #[test]
    fn xprime_places() {
        let m = xprime_model();
        let r = tate_local(&m, &Place::point(qi(0), 'v')).unwrap();
        assert_eq!(r.kodaira, IVStar);
        assert_eq!(r.v_disc, 8);
        assert_eq!(tate_local(&m, &Place::point(qi(1), 'v')).unwrap().kodaira, I(3));
        assert_eq!(tate_local(&m, &Place::Infinity).unwrap().kodaira, I(1));
        assert_eq!(full_config(&m).unwrap().euler_total(), 12);
    }

    #[test]
    fn additive_types_by_hand() {
        let t0 = Place::point(qi(0), 't');
        // y² = x³ + t^k: II, IV, I0*, IV*, II* for k = 1, 2, 3, 4, 5
        let cases = [(1, II), (2, IV), (3, I0Star), (4, IVStar), (5, IIStar)];
        for (k, expect) in cases {
            let mut a6 = vec![0; k + 1];
            a6[k] = 1;
            let m = model([&[], &[], &[], &[], &a6]);
            assert_eq!(tate_local(&m, &t0).unwrap().kodaira, expect, "t^{k}");
        }
        // y² = x³ + t^k x: III, I0*, III*
        for (k, expect) in [(1, III), (2, I0Star), (3, IIIStar)] {
            let mut a4 = vec![0; k + 1];
            a4[k] = 1;
            let m = model([&[], &[], &[], &a4, &[]]);
            assert_eq!(tate_local(&m, &t0).unwrap().kodaira, expect, "x t^{k}");
        }
        // y² = x³ + t x² + t^{n+2}... gives In*: y² = x³ + t x² + t^4 x -> I2*
        let m = model([&[], &[0, 1], &[], &[0, 0, 0, 0, 1], &[]]);
        let r = tate_local(&m, &t0).unwrap();
        assert_eq!(r.kodaira, IStar(r.v_disc as u32 - 6));
        // non-minimal: y² = x³ + t^7 reduces to II
        let m = model([&[], &[], &[], &[], &[0, 0, 0, 0, 0, 0, 0, 1]]);
        let r = tate_local(&m, &t0).unwrap();
        assert_eq!(r.kodaira, II);
        assert_eq!(r.v_disc, 2);
    }

    #[test]
    fn numerology() {
        let four_i3 = FiberConfig::new(
            (0..4).map(|i| FiberEntry { place: Site::Label(format!("p{i}")), kodaira: I(3), mult: 1 }).collect(),
            1,
        );
        let s = surface_invariants(&four_i3).unwrap();
        assert_eq!((s.chi_top, s.deg_l, s.p_g, s.q, s.h11), (12, 1, 1, 1, 12));
        assert_eq!(s.classification, "elliptic-elliptic");
        let mut z = four_i3.clone();
        z.fibers.push(FiberEntry { place: Site::Label("q".into()), kodaira: IVStar, mult: 1 });
        z.fibers.push(FiberEntry { place: Site::Label("r".into()), kodaira: IV, mult: 1 });
        let s = surface_invariants(&z).unwrap();
        assert_eq!((s.chi_top, s.deg_l), (24, 2));
        assert_eq!(s.classification, "(1,2)");
        z.base_genus = 0;
        assert_eq!(surface_invariants(&z).unwrap().classification, "K3");
        assert_eq!(moduli_dimension(1, 1), 10);
        let empty = FiberConfig::new(vec![], 0);
        assert_eq!(surface_invariants(&empty), Err(KodairaError::NotRelativelyMinimal(0)));
    }

    #[test]
    fn constant_model_is_smooth() {
        let m = WeierstrassModel::from_int_polys([&[], &[], &[-1], &[], &[]], 't', 0).unwrap();
        let c = full_config(&m).unwrap();
        assert!(c.fibers.is_empty());
        assert_eq!(c.euler_total(), 0);
    }
}
