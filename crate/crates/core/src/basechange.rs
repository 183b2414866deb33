//! Base change of elliptic fibrations: symbolic pullback along a rational
//! map, and the combinatorial transport of a fiber configuration along a
//! branch profile.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{
    factor_disc, parse_expr, qi, squarefree_decomposition, valuation, Expr, Field, Place, Polynomial, Qa, Rational,
    RationalFunction, Ring,
};
use crate::kodaira::{full_config, FiberConfig, FiberEntry, KodairaError, KodairaType, Site};
use crate::weierstrass::{urst, Rf, WeierstrassError, WeierstrassModel};

#[derive(Debug, Error, PartialEq)]
pub enum BaseChangeError {
    #[error("cannot parse branch profile: {0}")]
    Parse(String),
    #[error("partition {parts:?} does not sum to {degree}")]
    BadPartition { parts: Vec<u32>, degree: u32 },
    #[error("place {0} appears twice in the profile")]
    DuplicatePlace(String),
    #[error("Riemann-Hurwitz gives 2g-2 = {0}, not an even number >= -2")]
    NonIntegral(i64),
    #[error("no transition rule for {kodaira} with ramification {e}")]
    UnsupportedTransition { kodaira: KodairaType, e: u32 },
    #[error("degenerate parameter: {0}")]
    Degenerate(String),
    #[error("map does not realize the profile: {0}")]
    NotRealized(String),
    #[error("symbolic and combinatorial configurations differ: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Kodaira(#[from] KodairaError),
    #[error(transparent)]
    Model(#[from] WeierstrassError),
}

/// A branch locus: a place of the base, or the roots of a squarefree
/// polynomial that has no certified factorization (all its roots share the
/// same ramification data).
#[derive(Clone, Debug, PartialEq)]
pub enum Locus {
    Place(Place),
    Roots(Polynomial<Rational>),
}

impl Locus {
    pub fn geometric_count(&self) -> u32 {
        match self {
            Locus::Place(p) => p.degree() as u32,
            Locus::Roots(p) => p.degree().unwrap() as u32,
        }
    }
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Locus::Place(Place::Infinity) => write!(f, "inf"),
            Locus::Place(Place::Finite(p)) if p.degree() == Some(1) => write!(f, "{}", -p.coeff(0)),
            Locus::Place(Place::Finite(p)) | Locus::Roots(p) => write!(f, "[{p}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BranchProfile {
    pub degree: u32,
    /// Loci with the partition of `degree` above each geometric point.
    pub loci: Vec<(Locus, Vec<u32>)>,
}

fn expr_vars(e: &Expr, out: &mut Vec<char>) {
    match e {
        Expr::Num(_) => {}
        Expr::Var(c) => {
            if !out.contains(c) {
                out.push(*c)
            }
        }
        Expr::Neg(a) | Expr::Pow(a, _) => expr_vars(a, out),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            expr_vars(a, out);
            expr_vars(b, out);
        }
    }
}

fn parse_locus_poly(s: &str, var: char) -> Result<Polynomial<Rational>, BaseChangeError> {
    let e = parse_expr(s).map_err(|e| BaseChangeError::Parse(e.to_string()))?;
    let mut vars = Vec::new();
    expr_vars(&e, &mut vars);
    if vars.len() > 1 {
        return Err(BaseChangeError::Parse(format!("locus {s:?} uses several variables")));
    }
    let v = vars.first().copied().unwrap_or(var);
    let p = e
        .eval_ring(&|c| (c == v).then(|| Polynomial::<Rational>::var(v)))
        .map_err(|e| BaseChangeError::Parse(e.to_string()))?;
    if p.degree().unwrap_or(0) == 0 {
        return Err(BaseChangeError::Parse(format!("locus {s:?} is constant")));
    }
    Ok(p.with_var(var))
}

impl BranchProfile {
    /// Build a profile, splitting polynomial loci along certified factors and
    /// validating partitions and disjointness.
    pub fn new(degree: u32, loci: Vec<(Locus, Vec<u32>)>) -> Result<Self, BaseChangeError> {
        let mut out: Vec<(Locus, Vec<u32>)> = Vec::new();
        for (locus, mut parts) in loci {
            if parts.iter().sum::<u32>() != degree || parts.contains(&0) {
                return Err(BaseChangeError::BadPartition { parts, degree });
            }
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let pieces = match locus {
                Locus::Roots(p) => {
                    if !p.is_squarefree() {
                        return Err(BaseChangeError::Parse(format!("locus [{p}] is not squarefree")));
                    }
                    let fa = factor_disc(&p);
                    let mut v: Vec<Locus> = fa.factors.into_iter().map(|(f, _)| Locus::Place(Place::finite(f))).collect();
                    v.extend(fa.unfactored.into_iter().map(|(f, _)| Locus::Roots(f)));
                    v
                }
                l => vec![l],
            };
            for l in pieces {
                for (seen, _) in &out {
                    let clash = match (seen, &l) {
                        (Locus::Place(a), Locus::Place(b)) => a == b,
                        (Locus::Place(Place::Infinity), _) | (_, Locus::Place(Place::Infinity)) => false,
                        (Locus::Place(Place::Finite(a)) | Locus::Roots(a), Locus::Place(Place::Finite(b)) | Locus::Roots(b)) => {
                            a.gcd(b).degree().unwrap_or(0) > 0
                        }
                    };
                    if clash {
                        return Err(BaseChangeError::DuplicatePlace(l.to_string()));
                    }
                }
                out.push((l, parts.clone()));
            }
        }
        Ok(BranchProfile { degree, loci: out })
    }

    /// The identity cover.
    pub fn trivial() -> Self {
        BranchProfile { degree: 1, loci: vec![] }
    }

    /// Parse `d=3; 0:3; inf:3; 9:2+1; [r^2-16*r+36]:2+1` with loci in `var`.
    pub fn parse(s: &str, var: char) -> Result<Self, BaseChangeError> {
        let mut items = s.split(';').map(str::trim).filter(|x| !x.is_empty());
        let head = items.next().ok_or_else(|| BaseChangeError::Parse("empty profile".into()))?;
        let degree: u32 = head
            .strip_prefix("d=")
            .and_then(|d| d.trim().parse().ok())
            .filter(|d| *d >= 1)
            .ok_or_else(|| BaseChangeError::Parse(format!("expected d=<degree>, got {head:?}")))?;
        let mut loci = Vec::new();
        for item in items {
            let (loc, parts) =
                item.rsplit_once(':').ok_or_else(|| BaseChangeError::Parse(format!("missing ':' in {item:?}")))?;
            let parts: Vec<u32> = parts
                .split('+')
                .map(|p| p.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| BaseChangeError::Parse(format!("bad partition in {item:?}")))?;
            let loc = loc.trim();
            let locus = if loc == "inf" {
                Locus::Place(Place::Infinity)
            } else if let Some(inner) = loc.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                Locus::Roots(parse_locus_poly(inner, var)?)
            } else {
                let c = crate::exactalg::parse_rational(loc)
                    .ok_or_else(|| BaseChangeError::Parse(format!("bad point {loc:?}")))?;
                Locus::Place(Place::point(c, var))
            };
            loci.push((locus, parts));
        }
        BranchProfile::new(degree, loci)
    }

    /// Partition above a given place (unramified if absent).
    pub fn partition_at(&self, place: &Place) -> Vec<u32> {
        for (l, parts) in &self.loci {
            if let Locus::Place(p) = l {
                if p == place {
                    return parts.clone();
                }
            }
        }
        vec![1; self.degree as usize]
    }

    /// Total ramification `Σ (e − 1)` over geometric branch points.
    pub fn total_ramification(&self) -> u32 {
        self.loci.iter().map(|(l, parts)| l.geometric_count() * parts.iter().map(|e| e - 1).sum::<u32>()).sum()
    }
}

impl fmt::Display for BranchProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={}", self.degree)?;
        for (l, parts) in &self.loci {
            let p: Vec<String> = parts.iter().map(|e| e.to_string()).collect();
            write!(f, "; {l}:{}", p.join("+"))?;
        }
        Ok(())
    }
}

/// Genus of the source of a cover with this profile over a base of genus `g_base`.
pub fn rh_genus(profile: &BranchProfile, g_base: u32) -> Result<u32, BaseChangeError> {
    let two_g_minus_2 = profile.degree as i64 * (2 * g_base as i64 - 2) + profile.total_ramification() as i64;
    if two_g_minus_2 % 2 != 0 || two_g_minus_2 < -2 {
        return Err(BaseChangeError::NonIntegral(two_g_minus_2));
    }
    Ok((two_g_minus_2 / 2 + 1) as u32)
}

/// Fiber type above a point with ramification index `e`.
pub fn transition(kodaira: KodairaType, e: u32) -> Result<KodairaType, BaseChangeError> {
    use KodairaType::*;
    Ok(match (kodaira, e) {
        (_, 1) => kodaira,
        (I0, _) => I0,
        (I(n), _) => I(n * e),
        (IVStar, 2) => IV,
        (IVStar, 3) => I0,
        _ => return Err(BaseChangeError::UnsupportedTransition { kodaira, e }),
    })
}

/// Transport a configuration along a branch profile.
pub fn transported_config(config: &FiberConfig, profile: &BranchProfile) -> Result<FiberConfig, BaseChangeError> {
    if profile.degree == 1 {
        return Ok(config.clone());
    }
    let mut fibers = Vec::new();
    for f in &config.fibers {
        let parts = match &f.place {
            Site::Place(p) => {
                for (l, _) in &profile.loci {
                    if let (Locus::Roots(r), Place::Finite(fp)) = (l, p) {
                        if r.gcd(fp).degree().unwrap_or(0) > 0 {
                            return Err(BaseChangeError::NotRealized(format!(
                                "locus [{r}] meets the singular fiber at {p}"
                            )));
                        }
                    }
                }
                profile.partition_at(p)
            }
            Site::Label(_) => vec![1; profile.degree as usize],
        };
        for (i, e) in parts.iter().enumerate() {
            let k = transition(f.kodaira, *e)?;
            if k != KodairaType::I0 {
                let label = if parts.len() == 1 {
                    format!("over {} (e={e})", f.place)
                } else {
                    format!("over {} #{} (e={e})", f.place, i + 1)
                };
                fibers.push(FiberEntry { place: Site::Label(label), kodaira: k, mult: f.mult });
            }
        }
    }
    let genus = rh_genus(profile, config.base_genus)?;
    Ok(FiberConfig::new(fibers, genus))
}

/// `a_i(φ(u))`, rescaled so every coefficient is a polynomial in `u`.
pub fn pullback_model(m: &WeierstrassModel, phi: &RationalFunction<Rational>) -> Result<WeierstrassModel, BaseChangeError> {
    if phi.as_constant().is_some() {
        return Err(BaseChangeError::Degenerate("constant map".into()));
    }
    let var = phi.variable();
    let a: Vec<Rf> = m.a.iter().map(|c| c.compose(phi)).collect();
    let a: [Rf; 5] = a.try_into().unwrap();
    let mut den = Polynomial::constant(qi(1), var);
    for c in &a {
        let g = den.gcd(c.den());
        den = (&den * c.den()).exact_div(&g).unwrap();
    }
    let u = RationalFunction::from_poly(den).inverse().unwrap();
    let z = Rf::zero();
    let a = urst(&a, &u, &z, &z, &z);
    let mut d = 0u32;
    for (c, i) in a.iter().zip([1i64, 2, 3, 4, 6]) {
        if !c.is_zero() {
            let v = -valuation(c, &Place::Infinity);
            d = d.max(((v.max(0) + i - 1) / i) as u32);
        }
    }
    Ok(WeierstrassModel::new(a, var, d)?)
}

/// Partition above one geometric point of `place` under `φ`.
pub fn fiber_partition(phi: &RationalFunction<Rational>, place: &Place) -> Vec<u32> {
    let var = phi.variable();
    let mut parts = Vec::new();
    let k = place.degree() as u32;
    let (finite, value_at_inf) = match place {
        Place::Infinity => (phi.den().clone(), None),
        Place::Finite(p) => {
            let f = RationalFunction::from_poly(p.clone()).compose(phi);
            let c = match (phi.num().degree(), phi.den().degree(), p.degree()) {
                (Some(n), Some(dd), Some(1)) if n < dd => Some(qi(0)),
                (Some(n), Some(dd), Some(1)) if n == dd => Some(phi.num().leading() / phi.den().leading()),
                _ => None,
            };
            (f.num().clone(), c.filter(|c| p.eval(c) == qi(0)))
        }
    };
    for (f, e) in squarefree_decomposition(&finite) {
        if let Some(m) = f.degree() {
            for _ in 0..(m as u32 / k) {
                parts.push(e);
            }
        }
    }
    let n = phi.num().degree().unwrap_or(0) as i64;
    let dd = phi.den().degree().unwrap_or(0) as i64;
    match place {
        Place::Infinity if n > dd => parts.push((n - dd) as u32),
        Place::Finite(_) => {
            if let Some(c) = value_at_inf {
                let shifted = phi.minus(&RationalFunction::constant(c, var));
                parts.push(valuation(&shifted, &Place::Infinity) as u32);
            }
        }
        _ => {}
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Check that `φ: ℙ¹ → ℙ¹` has exactly the given ramification.
pub fn check_realizes(phi: &RationalFunction<Rational>, profile: &BranchProfile) -> Result<(), BaseChangeError> {
    let d = phi.map_degree() as u32;
    if d != profile.degree {
        return Err(BaseChangeError::NotRealized(format!("map degree {d}, profile degree {}", profile.degree)));
    }
    for (l, parts) in &profile.loci {
        let Locus::Place(p) = l else {
            return Err(BaseChangeError::NotRealized(format!("cannot test the unfactored locus {l}")));
        };
        let got = fiber_partition(phi, p);
        if &got != parts {
            return Err(BaseChangeError::NotRealized(format!("above {l}: map gives {got:?}, profile says {parts:?}")));
        }
    }
    if profile.total_ramification() != 2 * d - 2 {
        return Err(BaseChangeError::NotRealized("the map is branched outside the profile".into()));
    }
    Ok(())
}

/// The profile of a map whose branching happens at the given places only.
pub fn profile_of_map(phi: &RationalFunction<Rational>, places: &[Place]) -> Result<BranchProfile, BaseChangeError> {
    let loci = places.iter().map(|p| (Locus::Place(p.clone()), fiber_partition(phi, p))).collect();
    let profile = BranchProfile::new(phi.map_degree() as u32, loci)?;
    check_realizes(phi, &profile)?;
    Ok(profile)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossValidation {
    pub profile: String,
    pub symbolic: String,
    pub combinatorial: String,
    pub euler: u32,
}

fn counts_diff(a: &BTreeMap<KodairaType, u32>, b: &BTreeMap<KodairaType, u32>) -> String {
    let mut keys: Vec<&KodairaType> = a.keys().chain(b.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter(|k| a.get(k) != b.get(k))
        .map(|k| format!("{k}: {} vs {}", a.get(k).unwrap_or(&0), b.get(k).unwrap_or(&0)))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Run both base-change modes and compare the fiber multisets.
pub fn cross_validate(
    m: &WeierstrassModel,
    phi: &RationalFunction<Rational>,
    profile: &BranchProfile,
) -> Result<CrossValidation, BaseChangeError> {
    check_realizes(phi, profile)?;
    let symbolic = full_config(&pullback_model(m, phi)?)?;
    let combinatorial = transported_config(&full_config(m)?, profile)?;
    let (a, b) = (symbolic.type_counts(), combinatorial.type_counts());
    if a != b {
        return Err(BaseChangeError::Mismatch(counts_diff(&a, &b)));
    }
    Ok(CrossValidation {
        profile: profile.to_string(),
        symbolic: symbolic.summary(),
        combinatorial: combinatorial.summary(),
        euler: symbolic.euler_total(),
    })
}

/// The branch quadratic `r² − (2a+2)r + (a−1)²` of the cover `E_a → ℙ¹`,
/// with roots `(1 ± √a)²` kept implicit.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchQuadratic {
    pub poly: Polynomial<Qa>,
}

impl BranchQuadratic {
    pub fn root_sum(&self) -> Qa {
        self.poly.coeff(1).negate()
    }

    pub fn root_product(&self) -> Qa {
        self.poly.coeff(0)
    }

    /// `(r1 − r2)² = 16a`.
    pub fn root_discriminant(&self) -> Qa {
        let s = self.root_sum();
        s.times(&s).minus(&Qa::from_i64(4).times(&self.root_product()))
    }

    pub fn eval(&self, r: &Qa) -> Qa {
        self.poly.eval(r)
    }

    /// Specialize the parameter to a rational value.
    pub fn at(&self, a: &Rational) -> Polynomial<Rational> {
        self.poly.map(|c| c.eval(a).expect("coefficients are polynomial in a")).with_var('r')
    }
}

pub fn branch_points_of_ea() -> BranchQuadratic {
    let a = Qa::var('a');
    let one = Qa::one();
    let coeffs = vec![a.minus(&one).pow(2), a.plus(&one).times(&Qa::from_i64(-2)), one];
    BranchQuadratic { poly: Polynomial::new(coeffs, 'r') }
}

/// Singular fibers of the quotient surface, in the coordinate `v`.
pub fn xprime_config() -> Result<FiberConfig, BaseChangeError> {
    Ok(full_config(&crate::weierstrass::xprime_model())?)
}

fn point(c: i64) -> Locus {
    Locus::Place(Place::point(qi(c), 'v'))
}

fn inf() -> Locus {
    Locus::Place(Place::Infinity)
}

/// Profile of `E_a → ℙ¹`: total branching at 0 and ∞, simple branching at
/// the two roots of the branch quadratic.
pub fn ya_profile(a: &Rational) -> Result<BranchProfile, BaseChangeError> {
    if *a == qi(0) || *a == qi(1) {
        return Err(BaseChangeError::Degenerate(format!("a = {a} collides branch points")));
    }
    let quad = branch_points_of_ea().at(a).with_var('v');
    BranchProfile::new(3, vec![(point(0), vec![3]), (inf(), vec![3]), (Locus::Roots(quad), vec![2, 1])])
}

/// The Galois triple cover branched totally at 0, 1, ∞.
pub fn y0_profile() -> BranchProfile {
    BranchProfile::new(3, vec![(point(0), vec![3]), (point(1), vec![3]), (inf(), vec![3])]).unwrap()
}

/// The triple cover `{∞:3, 0:2+1, 4:2+1}`.
pub fn zprime_profile() -> BranchProfile {
    BranchProfile::new(3, vec![(inf(), vec![3]), (point(0), vec![2, 1]), (point(4), vec![2, 1])]).unwrap()
}

/// Named surfaces obtained by transporting the quotient configuration.
pub fn named_surface(name: &str) -> Result<FiberConfig, BaseChangeError> {
    let profile = match name {
        "Y" => ya_profile(&qi(2))?,
        "Y_p" | "Y4" => ya_profile(&qi(4))?,
        "Y_0" | "Y0" => y0_profile(),
        "Z'" | "Zprime" => zprime_profile(),
        _ => return Err(BaseChangeError::Parse(format!("unknown surface {name:?}"))),
    };
    transported_config(&xprime_config()?, &profile)
}

/// Fibers of `Y_a` for a rational parameter.
pub fn ya_config(a: &Rational) -> Result<FiberConfig, BaseChangeError> {
    transported_config(&xprime_config()?, &ya_profile(a)?)
}

/// `φ = 1 + u²`, a convenient non-Galois-at-infinity check.
pub fn one_plus_u_squared() -> RationalFunction<Rational> {
    RationalFunction::from_poly(Polynomial::from_ints(&[1, 0, 1], 'u'))
}

/// `u^k` in the variable `u`.
pub fn power_map(k: usize) -> RationalFunction<Rational> {
    RationalFunction::from_poly(Polynomial::monomial(qi(1), k, 'u'))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kodaira::surface_invariants;
    use crate::weierstrass::{hesse_model, xprime_model};
    use KodairaType::*;

    #[test]
    fn parse_profiles() {
        let p = BranchProfile::parse("d=3; 0:3; inf:3; 9:2+1; 1:2+1", 'v').unwrap();
        assert_eq!(p.loci.len(), 4);
        assert_eq!(p.to_string(), "d=3; 0:3; inf:3; 9:2+1; 1:2+1");
        assert_eq!(rh_genus(&p, 0), Ok(1));
        // a = 7: irreducible quadratic stays one locus of two points
        let p = BranchProfile::parse("d=3; 0:3; inf:3; [r^2-16*r+36]:2+1", 'v').unwrap();
        assert_eq!(p.loci.len(), 3);
        assert_eq!(p.loci[2].0.geometric_count(), 2);
        assert_eq!(rh_genus(&p, 0), Ok(1));
        // a = 4: the quadratic splits into the points 1 and 9
        let p = BranchProfile::parse("d=3; [r^2-10*r+9]:2+1", 'v').unwrap();
        assert_eq!(p.loci.len(), 2);
        assert!(matches!(BranchProfile::parse("d=3; 0:2", 'v'), Err(BaseChangeError::BadPartition { .. })));
        assert!(matches!(BranchProfile::parse("d=3; 0:3; 0:3", 'v'), Err(BaseChangeError::DuplicatePlace(_))));
        assert!(matches!(BranchProfile::parse("3; 0:3", 'v'), Err(BaseChangeError::Parse(_))));
    }

    #[test]
    fn riemann_hurwitz() {
        assert_eq!(rh_genus(&y0_profile(), 0), Ok(1));
        assert_eq!(rh_genus(&BranchProfile::trivial(), 1), Ok(1));
        assert_eq!(rh_genus(&zprime_profile(), 0), Ok(0));
        let odd = BranchProfile::parse("d=3; 0:3; inf:2+1", 'v').unwrap();
        assert_eq!(rh_genus(&odd, 0), Err(BaseChangeError::NonIntegral(-3)));
    }

    #[test]
    fn transition_table() {
        assert_eq!(transition(I(3), 2), Ok(I(6)));
        assert_eq!(transition(IVStar, 2), Ok(IV));
        assert_eq!(transition(IVStar, 3), Ok(I0));
        assert_eq!(transition(III, 1), Ok(III));
        assert!(transition(II, 2).is_err());
        assert!(transition(IVStar, 4).is_err());
    }

    #[test]
    fn named_configs() {
        let y = named_surface("Y").unwrap();
        assert_eq!(y.summary(), "4I3");
        assert_eq!(y.base_genus, 1);
        assert_eq!(named_surface("Y_p").unwrap().summary(), "2I3 + I6");
        assert_eq!(named_surface("Y_0").unwrap().summary(), "I3 + I9");
        let z = named_surface("Z'").unwrap();
        let s = surface_invariants(&z).unwrap();
        assert_eq!((s.chi_top, s.deg_l), (24, 2));
        assert!(ya_config(&qi(0)).is_err());
        assert_eq!(ya_config(&qi(9)).unwrap().summary(), "4I3");
    }

    #[test]
    fn branch_quadratic() {
        let bq = branch_points_of_ea();
        assert_eq!(bq.root_sum(), crate::exactalg::parse_ratfunc("2*a+2", 'a').unwrap());
        assert_eq!(bq.root_discriminant(), crate::exactalg::parse_ratfunc("16*a", 'a').unwrap());
        let at1 = bq.eval(&Qa::one());
        assert_eq!(at1, crate::exactalg::parse_ratfunc("a^2-4*a", 'a').unwrap());
        assert_eq!(bq.at(&qi(4)), Polynomial::from_ints(&[9, -10, 1], 'r'));
    }

    #[test]
    fn partitions_of_maps() {
        let cube = power_map(3);
        assert_eq!(fiber_partition(&cube, &Place::point(qi(0), 'v')), vec![3]);
        assert_eq!(fiber_partition(&cube, &Place::Infinity), vec![3]);
        assert_eq!(fiber_partition(&cube, &Place::point(qi(1), 'v')), vec![1, 1, 1]);
        let m = RationalFunction::new(Polynomial::from_ints(&[0, 0, 1], 'u'), Polynomial::from_ints(&[1, 0, 1], 'u'));
        // u²/(u²+1) takes the value 1 at u = ∞ with index 2
        assert_eq!(fiber_partition(&m, &Place::point(qi(1), 'v')), vec![2]);
        let p = profile_of_map(&one_plus_u_squared(), &[Place::point(qi(1), 'v'), Place::Infinity]).unwrap();
        assert_eq!(p.to_string(), "d=2; 1:2; inf:2");
        assert!(check_realizes(&cube, &BranchProfile::parse("d=3; 0:3", 'v').unwrap()).is_err());
    }

    #[test]
    fn symbolic_matches_combinatorial() {
        let v0 = Place::point(qi(0), 'v');
        let r = cross_validate(&xprime_model(), &power_map(3), &profile_of_map(&power_map(3), &[v0.clone(), Place::Infinity]).unwrap()).unwrap();
        assert_eq!(r.symbolic, "4I3");
        let t0 = Place::point(qi(0), 't');
        let r = cross_validate(&hesse_model(), &power_map(2), &profile_of_map(&power_map(2), &[t0, Place::Infinity]).unwrap()).unwrap();
        assert_eq!(r.symbolic, "6I3 + I6");
        let v1 = Place::point(qi(1), 'v');
        let r = cross_validate(&xprime_model(), &one_plus_u_squared(), &profile_of_map(&one_plus_u_squared(), &[v1, Place::Infinity]).unwrap()).unwrap();
        assert_eq!(r.euler, 24);
        let id = RationalFunction::var('u');
        let r = cross_validate(&xprime_model(), &id, &BranchProfile::trivial()).unwrap();
        assert_eq!(r.symbolic, r.combinatorial);
    }
}
