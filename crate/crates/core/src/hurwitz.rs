//! Monodromy tuples of triple covers of the line branched at four points,
//! their classes under simultaneous conjugation, and braid moves.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exactalg::{qi, Polynomial, Qa, Rational, Ring};

#[derive(Debug, Error, PartialEq)]
pub enum HurwitzError {
    #[error("not a permutation: {0:?}")]
    NotBijective(Vec<usize>),
    #[error("degree {0} out of range 1..=8")]
    Degree(usize),
    #[error("invalid tuple: {0}")]
    InvalidTuple(String),
    #[error("braid index {0} out of range 1..=3")]
    BraidIndex(usize),
    #[error("parameter a = {0} is excluded (a must avoid 0 and 1)")]
    ExcludedParameter(Rational),
}

/// Permutation of `{1..n}`; `images[i]` is the image of `i+1`, 0-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Perm, HurwitzError> {
        let n = images.len();
        if n == 0 || n > 8 {
            return Err(HurwitzError::Degree(n));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(HurwitzError::NotBijective(images));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Perm {
        Perm { images: (0..n).collect() }
    }

    /// From 1-based cycles, e.g. `&[&[1, 2, 3]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm, HurwitzError> {
        let mut images: Vec<usize> = (0..n).collect();
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                let y = c[(k + 1) % c.len()];
                if x == 0 || x > n || y == 0 || y > n {
                    return Err(HurwitzError::NotBijective(c.to_vec()));
                }
                images[x - 1] = y - 1;
            }
        }
        Perm::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `(self ∘ o)(x) = self(o(x))`.
    pub fn compose(&self, o: &Perm) -> Perm {
        Perm { images: o.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.compose(self).compose(&g.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.images[s];
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.images[x];
            }
            out.push(c);
        }
        out
    }

    /// Cycle lengths, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn is_transposition(&self) -> bool {
        self.cycle_type().first() == Some(&2) && self.cycle_type().get(1).is_none_or(|&l| l == 1)
    }

    pub fn is_full_cycle(&self) -> bool {
        self.cycle_type() == vec![self.degree()]
    }

    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        permutations(&mut cur, 0, &mut out);
        out.sort_by_key(|p| p.to_string());
        out
    }
}

fn permutations(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Perm>) {
    if k == cur.len() {
        out.push(Perm { images: cur.clone() });
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permutations(cur, k + 1, out);
        cur.swap(k, i);
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cs.is_empty() {
            return write!(f, "()");
        }
        for c in cs {
            write!(f, "(")?;
            for x in c {
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub type Tuple = [Perm; 4];

fn product(t: &[Perm]) -> Perm {
    t.iter().fold(Perm::identity(t[0].degree()), |acc, g| acc.compose(g))
}

fn is_transitive(gens: &[Perm]) -> bool {
    let n = gens[0].degree();
    let mut seen = BTreeSet::from([0]);
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = g.apply(x);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.len() == n
}

/// `(σ0, τ1, τ2, σ∞)`: full cycles at the ends, transpositions in the
/// middle, product one, transitive.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct HurwitzTuple(pub Tuple);

impl HurwitzTuple {
    pub fn new(t: Tuple) -> Result<Self, HurwitzError> {
        check_tuple(&t, true).map_err(HurwitzError::InvalidTuple)?;
        Ok(HurwitzTuple(t))
    }

    pub fn parse(s: &str) -> Result<Self, HurwitzError> {
        let parts: Vec<_> = s.split(',').map(|p| parse_cycles(3, p.trim())).collect::<Result<_, _>>()?;
        let t: Tuple = parts.try_into().map_err(|_| HurwitzError::InvalidTuple(format!("expected 4 entries in {s}")))?;
        HurwitzTuple::new(t)
    }

    pub fn conjugate_by(&self, g: &Perm) -> HurwitzTuple {
        HurwitzTuple(self.0.clone().map(|p| p.conjugate_by(g)))
    }

    pub fn key(&self) -> Vec<String> {
        self.0.iter().map(|p| p.to_string()).collect()
    }

    /// Lexicographically minimal (on cycle notation) conjugate.
    pub fn canonical(&self) -> HurwitzTuple {
        let n = self.0[0].degree();
        Perm::all(n).iter().map(|g| self.conjugate_by(g)).min_by_key(|t| t.key()).unwrap()
    }

    pub fn collide_transpositions(&self) -> Collision {
        let p = self.0[1].compose(&self.0[2]);
        if p.is_identity() {
            Collision::NodalLimit
        } else {
            Collision::SmoothLimit
        }
    }
}

impl fmt::Display for HurwitzTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.key().join(","))
    }
}

fn check_tuple(t: &[Perm], pattern: bool) -> Result<(), String> {
    let n = t[0].degree();
    if t.iter().any(|p| p.degree() != n) {
        return Err("degrees differ".into());
    }
    if pattern {
        if !t[0].is_full_cycle() || !t[3].is_full_cycle() {
            return Err("outer entries must be full cycles".into());
        }
        if !t[1].is_transposition() || !t[2].is_transposition() {
            return Err("inner entries must be transpositions".into());
        }
    }
    if !product(t).is_identity() {
        return Err("product is not the identity".into());
    }
    if !is_transitive(t) {
        return Err("not transitive".into());
    }
    Ok(())
}

/// Cycle notation like `(123)` or `(12)(34)`; `()` is the identity.
pub fn parse_cycles(n: usize, s: &str) -> Result<Perm, HurwitzError> {
    let bad = || HurwitzError::InvalidTuple(format!("bad cycle notation {s:?}"));
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(bad)?;
        let end = body.find(')').ok_or_else(bad)?;
        let c: Vec<usize> = body[..end].chars().filter(|c| !c.is_whitespace()).map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_, _>>()?;
        if !c.is_empty() {
            cycles.push(c);
        }
        rest = body[end + 1..].trim_start();
    }
    let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
    Perm::from_cycles(n, &refs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Collision {
    /// `τ1τ2` is a 3-cycle: the limit cover is Galois with smooth source.
    SmoothLimit,
    /// `τ1τ2 = 1`: the limit source is nodal rational.
    NodalLimit,
}

/// `σ_i` (or its inverse) on positions `i, i+1` (1-based).
pub fn braid_move(t: &[Perm], i: usize, inverse: bool) -> Result<Vec<Perm>, HurwitzError> {
    if i == 0 || i >= t.len() {
        return Err(HurwitzError::BraidIndex(i));
    }
    let (a, b) = (&t[i - 1], &t[i]);
    let mut out = t.to_vec();
    if inverse {
        out[i - 1] = b.clone();
        out[i] = b.inverse().compose(a).compose(b);
    } else {
        out[i - 1] = a.compose(b).compose(&a.inverse());
        out[i] = a.clone();
    }
    Ok(out)
}

/// `σ_i²`, which keeps the cycle-type pattern.
pub fn full_twist(t: &HurwitzTuple, i: usize) -> Result<HurwitzTuple, HurwitzError> {
    let once = braid_move(&t.0, i, false)?;
    let twice = braid_move(&once, i, false)?;
    HurwitzTuple::new(twice.try_into().unwrap())
}

#[derive(Clone, Debug, Serialize)]
pub struct Enumeration {
    pub raw: Vec<HurwitzTuple>,
    pub classes: Vec<Vec<HurwitzTuple>>,
    pub representatives: Vec<HurwitzTuple>,
    /// Raw count with the transitivity filter dropped.
    pub raw_without_transitivity: usize,
}

pub fn enumerate_classes() -> Enumeration {
    let all = Perm::all(3);
    let mut raw = Vec::new();
    let mut loose = 0;
    for a in &all {
        for b in &all {
            for c in &all {
                for d in &all {
                    let t = [a.clone(), b.clone(), c.clone(), d.clone()];
                    let shape = a.is_full_cycle() && d.is_full_cycle() && b.is_transposition() && c.is_transposition();
                    if shape && product(&t).is_identity() {
                        loose += 1;
                        if is_transitive(&t) {
                            raw.push(HurwitzTuple(t));
                        }
                    }
                }
            }
        }
    }
    raw.sort_by_key(|t| t.key());
    let mut by_rep: BTreeMap<Vec<String>, Vec<HurwitzTuple>> = BTreeMap::new();
    for t in &raw {
        by_rep.entry(t.canonical().key()).or_default().push(t.clone());
    }
    // smooth-limit class first, then by canonical key
    let mut classes: Vec<Vec<HurwitzTuple>> = by_rep.into_values().collect();
    classes.sort_by_key(|c| (c[0].collide_transpositions(), c[0].canonical().key()));
    let representatives = classes.iter().map(|c| c[0].canonical()).collect();
    Enumeration { raw, classes, representatives, raw_without_transitivity: loose }
}

/// Action of one pattern-preserving move on the classes.
#[derive(Clone, Debug, Serialize)]
pub struct MoveAction {
    pub name: String,
    /// `images[k]` is the class index reached from class `k`.
    pub images: Vec<usize>,
    pub trivial: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub representatives: Vec<HurwitzTuple>,
    pub moves: Vec<MoveAction>,
    /// Orbits of classes under the group generated by all listed moves.
    pub orbits: Vec<Vec<usize>>,
    pub preserves_invariants: bool,
}

/// Classes under the pure moves `σ_1²`, `σ_2²`, `σ_3²`. `σ_2²` twists the two
/// transpositions around each other; the outer ones pass a 3-cycle around a
/// transposition.
pub fn orbit_report() -> OrbitReport {
    let e = enumerate_classes();
    let class_of = |t: &HurwitzTuple| e.representatives.iter().position(|r| *r == t.canonical()).unwrap();
    let mut moves = Vec::new();
    let mut ok = true;
    for i in 1..=3 {
        let mut images = Vec::new();
        for class in &e.classes {
            let targets: BTreeSet<usize> = class
                .iter()
                .map(|t| match full_twist(t, i) {
                    Ok(u) => class_of(&u),
                    Err(_) => {
                        ok = false;
                        usize::MAX
                    }
                })
                .collect();
            ok &= targets.len() == 1;
            images.push(*targets.iter().next().unwrap());
        }
        let trivial = images.iter().enumerate().all(|(k, &j)| k == j);
        moves.push(MoveAction { name: format!("sigma{i}^2"), images, trivial });
    }
    // connected components of the class graph
    let n = e.representatives.len();
    let mut comp: Vec<usize> = (0..n).collect();
    fn root(c: &mut Vec<usize>, x: usize) -> usize {
        if c[x] != x {
            let r = root(c, c[x]);
            c[x] = r;
        }
        c[x]
    }
    for m in &moves {
        for (k, &j) in m.images.iter().enumerate() {
            if j < n {
                let (a, b) = (root(&mut comp, k), root(&mut comp, j));
                comp[a.max(b)] = a.min(b);
            }
        }
    }
    let mut orbits: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for k in 0..n {
        let r = root(&mut comp, k);
        orbits.entry(r).or_default().push(k);
    }
    OrbitReport { representatives: e.representatives, moves, orbits: orbits.into_values().collect(), preserves_invariants: ok }
}

/// `a ↦ (u, v) = ((1−a)², 2+2a)`, the unordered branch pair `{r1, r2}` with
/// `u = r1 r2`, `v = r1 + r2`.
pub fn phi_map(a: &Rational) -> Result<(Rational, Rational), HurwitzError> {
    if a.is_zero() || *a == qi(1) {
        return Err(HurwitzError::ExcludedParameter(a.clone()));
    }
    Ok(phi_polynomial(a))
}

/// `phi` without the exclusion, for limits such as `a → 0`.
pub fn phi_polynomial(a: &Rational) -> (Rational, Rational) {
    let one = qi(1);
    let u = (&one - a) * (&one - a);
    let v = qi(2) + qi(2) * a;
    (u, v)
}

/// `r² − v r + u` over `ℚ(a)`.
pub fn phi_quadratic() -> Polynomial<Qa> {
    let a = Qa::var('a');
    let one = Qa::one();
    let u = one.minus(&a).pow(2);
    let v = Qa::from_i64(2).plus(&Qa::from_i64(2).times(&a));
    Polynomial::new(vec![u, v.negate(), one], 'r')
}

pub fn phi_quadratic_at(a: &Rational) -> Polynomial<Rational> {
    let (u, v) = phi_polynomial(a);
    Polynomial::new(vec![u, -v, qi(1)], 'r')
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational_roots;

    fn p(s: &str) -> Perm {
        parse_cycles(3, s).unwrap()
    }

    fn rep1() -> HurwitzTuple {
        HurwitzTuple::parse("(123),(12),(23),(123)").unwrap()
    }

    fn rep2() -> HurwitzTuple {
        HurwitzTuple::parse("(123),(12),(12),(132)").unwrap()
    }

    #[test]
    fn perms() {
        assert_eq!(p("(12)").compose(&p("(23)")), p("(123)"));
        assert_eq!(p("(123)").inverse(), p("(132)"));
        assert_eq!(Perm::all(4).len(), 24);
        assert_eq!(p("(123)").to_string(), "(123)");
        assert_eq!(Perm::identity(3).to_string(), "()");
        assert!(Perm::new(vec![0, 0, 1]).is_err());
        assert!(HurwitzTuple::parse("(123),(12),(23),(132)").is_err());
    }

    #[test]
    fn classes() {
        let e = enumerate_classes();
        assert_eq!(e.raw.len(), 12);
        assert_eq!(e.raw_without_transitivity, 12);
        assert_eq!(e.classes.iter().map(|c| c.len()).collect::<Vec<_>>(), vec![6, 6]);
        assert_eq!(e.representatives, vec![rep1(), rep2()]);
    }

    // Independent count: σ0 free among full cycles, (τ1, τ2) free among
    // transpositions, σ∞ forced; keep those with σ∞ a 3-cycle.
    #[test]
    fn raw_count_oracle() {
        let cyc = [p("(123)"), p("(132)")];
        let tr = [p("(12)"), p("(13)"), p("(23)")];
        let mut count = 0;
        for s in &cyc {
            for a in &tr {
                for b in &tr {
                    if s.compose(a).compose(b).inverse().is_full_cycle() {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(count, 12);
    }

    #[test]
    fn moves() {
        let t = rep1();
        for i in 1..=3 {
            let m = braid_move(&t.0, i, false).unwrap();
            assert_eq!(product(&m), Perm::identity(3));
            assert_eq!(braid_move(&m, i, true).unwrap(), t.0.to_vec());
        }
        assert!(braid_move(&t.0, 4, false).is_err());
        assert_eq!(full_twist(&rep1(), 2).unwrap().canonical(), rep1());
        assert_eq!(full_twist(&rep2(), 2).unwrap().canonical(), rep2());
        assert_eq!(full_twist(&rep1(), 1).unwrap().canonical(), rep2());
        let r = orbit_report();
        assert!(r.preserves_invariants);
        assert!(r.moves[1].trivial);
        assert!(!r.moves[0].trivial && !r.moves[2].trivial);
        assert_eq!(r.orbits, vec![vec![0, 1]]);
    }

    #[test]
    fn collisions() {
        assert_eq!(rep1().collide_transpositions(), Collision::SmoothLimit);
        assert_eq!(rep2().collide_transpositions(), Collision::NodalLimit);
        for class in enumerate_classes().classes {
            let c: BTreeSet<_> = class.iter().map(|t| t.collide_transpositions() as u8).collect();
            assert_eq!(c.len(), 1);
        }
    }

    #[test]
    fn phi() {
        assert_eq!(phi_map(&qi(4)).unwrap(), (qi(9), qi(10)));
        assert_eq!(rational_roots(&phi_quadratic_at(&qi(4))), vec![qi(1), qi(9)]);
        assert!(phi_map(&qi(0)).is_err() && phi_map(&qi(1)).is_err());
        assert_eq!(phi_polynomial(&qi(0)), (qi(1), qi(2)));
        assert_eq!(rational_roots(&phi_quadratic_at(&qi(0))), vec![qi(1)]);
        let b = crate::basechange::branch_points_of_ea();
        assert_eq!(phi_quadratic(), b.poly);
        let q = phi_quadratic();
        let disc = q.coeff(1).times(&q.coeff(1)).minus(&Qa::from_i64(4).times(&q.coeff(0)));
        assert_eq!(disc, Qa::from_i64(16).times(&Qa::var('a')));
    }
}
