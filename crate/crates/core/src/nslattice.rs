//! Néron-Severi bookkeeping: Shioda-Tate, trivial-lattice discriminants,
//! discriminant forms and their isotropic quotients, Mordell-Weil heights and
//! the primitivity search for the tautological section.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{q, qi, Field, Rational, Ring};
use crate::kodaira::{surface_invariants, FiberConfig, KodairaError, KodairaType};

#[derive(Debug, Error, PartialEq)]
pub enum LatticeError {
    #[error("rho = {rho} exceeds h11 = {h11}")]
    ExceedsH11 { rho: u32, h11: u32 },
    #[error("discriminant {0} is not an integer")]
    NonIntegral(Rational),
    #[error("component {index} is not a valid component of {kodaira}")]
    BadComponent { kodaira: KodairaType, index: u32 },
    #[error("no root lattice recorded for {0}")]
    Unsupported(KodairaType),
    #[error("{0} does not divide the group order")]
    BadPrime(u64),
    #[error(transparent)]
    Kodaira(#[from] KodairaError),
}

/// A summand of the trivial lattice (negative definite root lattices and
/// the hyperbolic plane).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RootBlock {
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
    U,
}

impl fmt::Display for RootBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootBlock::A(n) => write!(f, "A{n}"),
            RootBlock::D(n) => write!(f, "D{n}"),
            RootBlock::E6 => write!(f, "E6"),
            RootBlock::E7 => write!(f, "E7"),
            RootBlock::E8 => write!(f, "E8"),
            RootBlock::U => write!(f, "U"),
        }
    }
}

impl RootBlock {
    pub fn rank(&self) -> u32 {
        match *self {
            RootBlock::A(n) | RootBlock::D(n) => n,
            RootBlock::E6 => 6,
            RootBlock::E7 => 7,
            RootBlock::E8 => 8,
            RootBlock::U => 2,
        }
    }

    pub fn discriminant(&self) -> u64 {
        match *self {
            RootBlock::A(n) => n as u64 + 1,
            RootBlock::D(_) => 4,
            RootBlock::E6 => 3,
            RootBlock::E7 => 2,
            RootBlock::E8 | RootBlock::U => 1,
        }
    }

    /// Discriminant form as orthogonal cyclic summands, sign convention
    /// "minus" (negative definite blocks).
    pub fn disc_form(&self) -> FiniteQuadForm {
        let gens = match *self {
            RootBlock::A(n) => vec![(n as u64 + 1, q(-(n as i64), n as i64 + 1))],
            RootBlock::D(n) if n % 2 == 1 => vec![(4, q(-(n as i64), 4))],
            RootBlock::D(n) => vec![(2, q(-(n as i64), 4)), (2, qi(-1))],
            RootBlock::E6 => vec![(3, q(-4, 3))],
            RootBlock::E7 => vec![(2, q(-3, 2))],
            RootBlock::E8 | RootBlock::U => vec![],
        };
        FiniteQuadForm::new(gens)
    }

    /// Root lattice spanned by the non-identity components of a fiber.
    pub fn of_fiber(k: KodairaType) -> Result<Option<RootBlock>, LatticeError> {
        use KodairaType::*;
        Ok(match k {
            I0 | I(1) | II => None,
            I(n) => Some(RootBlock::A(n - 1)),
            III => Some(RootBlock::A(1)),
            IV => Some(RootBlock::A(2)),
            I0Star => Some(RootBlock::D(4)),
            IStar(n) => Some(RootBlock::D(n + 4)),
            IVStar => Some(RootBlock::E6),
            IIIStar => Some(RootBlock::E7),
            IIStar => Some(RootBlock::E8),
        })
    }
}

/// `2 + r + Σ (m_v − 1)`, checked against `h11`.
pub fn shioda_tate_rho(config: &FiberConfig, r: u32) -> Result<u32, LatticeError> {
    let rho = 2 + r + config.extra_components();
    let h11 = surface_invariants(config)?.h11;
    if rho > h11 {
        return Err(LatticeError::ExceedsH11 { rho, h11 });
    }
    Ok(rho)
}

/// Root blocks of all reducible fibers (geometric count).
pub fn trivial_lattice_blocks(config: &FiberConfig) -> Result<Vec<RootBlock>, LatticeError> {
    let mut out = vec![RootBlock::U];
    for f in &config.fibers {
        if let Some(b) = RootBlock::of_fiber(f.kodaira)? {
            out.extend(std::iter::repeat_n(b, f.mult as usize));
        }
    }
    Ok(out)
}

/// `Π disc(root blocks) / torsion²`.
pub fn ns_discriminant(config: &FiberConfig, torsion_order: u64) -> Result<Rational, LatticeError> {
    ns_discriminant_with_mw(config, torsion_order, &qi(1))
}

/// As [`ns_discriminant`], times the determinant of the free Mordell-Weil
/// lattice.
pub fn ns_discriminant_with_mw(config: &FiberConfig, torsion_order: u64, mw_det: &Rational) -> Result<Rational, LatticeError> {
    let prod: u64 = trivial_lattice_blocks(config)?.iter().map(RootBlock::discriminant).product();
    let d = Rational::from_integer(prod.into()).times(mw_det) / Rational::from_integer((torsion_order * torsion_order).into());
    if !d.is_integer() {
        return Err(LatticeError::NonIntegral(d));
    }
    Ok(d)
}

/// Orthogonal sum of cyclic quadratic forms `(ℤ/k, q)`, `q` taken mod 2.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteQuadForm {
    pub gens: Vec<(u64, Rational)>,
}

fn mod_n(x: &Rational, n: i64) -> Rational {
    let n = Rational::from_integer(n.into());
    let k = (x / &n).floor();
    x - k * n
}

impl FiniteQuadForm {
    pub fn new(gens: Vec<(u64, Rational)>) -> Self {
        let gens = gens.into_iter().filter(|(k, _)| *k > 1).map(|(k, v)| (k, mod_n(&v, 2))).collect();
        FiniteQuadForm { gens }
    }

    pub fn direct_sum(blocks: &[RootBlock]) -> Self {
        FiniteQuadForm::new(blocks.iter().flat_map(|b| b.disc_form().gens).collect())
    }

    pub fn order(&self) -> u64 {
        self.gens.iter().map(|(k, _)| k).product()
    }

    pub fn orders(&self) -> Vec<u64> {
        self.gens.iter().map(|(k, _)| *k).collect()
    }

    /// `q(x) mod 2`.
    pub fn q(&self, x: &[u64]) -> Rational {
        let s = self.gens.iter().zip(x).fold(qi(0), |acc, ((_, v), xi)| acc + v * Rational::from_integer((xi * xi).into()));
        mod_n(&s, 2)
    }

    /// `b(x, y) mod 1`.
    pub fn b(&self, x: &[u64], y: &[u64]) -> Rational {
        let s = self.gens.iter().zip(x.iter().zip(y)).fold(qi(0), |acc, ((_, v), (a, b))| {
            acc + v * Rational::from_integer((a * b).into())
        });
        mod_n(&s, 1)
    }

    pub fn elements(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for (k, _) in &self.gens {
            out = out.into_iter().flat_map(|v| (0..*k).map(move |i| [v.clone(), vec![i]].concat())).collect();
        }
        out
    }

    fn scale(&self, x: &[u64], m: u64) -> Vec<u64> {
        self.gens.iter().zip(x).map(|((k, _), xi)| (xi * m) % k).collect()
    }
}

/// One isotropic subgroup of prime order and the structure of `K⊥/K`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsotropicQuotient {
    pub generator: Vec<u64>,
    pub quotient: Vec<u64>,
}

/// All isotropic subgroups of order `ℓ` and the invariant factors of `K⊥/K`.
pub fn isotropic_quotients(f: &FiniteQuadForm, ell: u64) -> Result<Vec<IsotropicQuotient>, LatticeError> {
    if !f.order().is_multiple_of(ell) {
        return Err(LatticeError::BadPrime(ell));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in f.elements() {
        if x.iter().all(|c| *c == 0) || f.scale(&x, ell).iter().any(|c| *c != 0) {
            continue;
        }
        let canon = (1..ell).map(|m| f.scale(&x, m)).min().unwrap();
        if !seen.insert(canon.clone()) || !f.q(&canon).is_zero() {
            continue;
        }
        out.push(IsotropicQuotient { quotient: perp_quotient(f, &canon), generator: canon });
    }
    Ok(out)
}

/// Invariant factors (> 1) of `K⊥/K` for `K = ⟨x⟩`.
fn perp_quotient(f: &FiniteQuadForm, x: &[u64]) -> Vec<u64> {
    let r = f.gens.len();
    // b(e_i, x) = W_i / N mod 1
    let ws: Vec<Rational> = f.gens.iter().zip(x).map(|((_, v), xi)| v * Rational::from_integer((*xi).into())).collect();
    let n = ws.iter().fold(num_bigint::BigInt::from(1), |acc, w| acc.lcm(w.denom()));
    let n_i = n.to_i128().unwrap();
    let row: Vec<i128> = ws
        .iter()
        .map(|w| (w * Rational::from_integer(n.clone())).to_integer().to_i128().unwrap())
        .chain(std::iter::once(n_i))
        .collect();
    // kernel of y ↦ Σ W_i y_i + N z, projected to y, is the lattice L over K⊥
    let snf = smith_normal_form(&[row]);
    let basis: Vec<Vec<i128>> = (1..=r).map(|j| (0..r).map(|i| snf.v[i][j]).collect()).collect();
    // relations: k_i e_i and x, written in the basis of L
    let mut rels: Vec<Vec<i128>> = f
        .gens
        .iter()
        .enumerate()
        .map(|(i, (k, _))| {
            let mut e = vec![0i128; r];
            e[i] = *k as i128;
            e
        })
        .collect();
    rels.push(x.iter().map(|c| *c as i128).collect());
    let coords: Vec<Vec<i128>> = rels.iter().map(|g| solve_integral(&basis, g)).collect();
    // matrix with the relation coordinates as columns
    let m: Vec<Vec<i128>> = (0..r).map(|i| coords.iter().map(|c| c[i]).collect()).collect();
    let d = smith_normal_form(&m).diag;
    let mut out: Vec<u64> = d.iter().map(|x| x.unsigned_abs() as u64).filter(|x| *x != 1).collect();
    if out.contains(&0) {
        panic!("relations do not have full rank");
    }
    out.sort_unstable();
    out
}

/// Coordinates of `g` in the lattice basis `basis` (columns), which must exist.
fn solve_integral(basis: &[Vec<i128>], g: &[i128]) -> Vec<i128> {
    let r = g.len();
    let mut a: Vec<Vec<Rational>> = (0..r)
        .map(|i| {
            let mut row: Vec<Rational> = basis.iter().map(|b| Rational::from_integer(b[i].into())).collect();
            row.push(Rational::from_integer(g[i].into()));
            row
        })
        .collect();
    for c in 0..r {
        let p = (c..r).find(|&i| !a[i][c].is_zero()).expect("basis is singular");
        a.swap(c, p);
        let inv = a[c][c].inverse().unwrap();
        for j in 0..=r {
            a[c][j] = &a[c][j] * &inv;
        }
        for i in 0..r {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=r {
                    let t = &a[c][j] * &f;
                    a[i][j] = &a[i][j] - t;
                }
            }
        }
    }
    a.iter()
        .map(|row| {
            let v = &row[r];
            assert!(v.is_integer(), "relation outside the lattice");
            v.to_integer().to_i128().unwrap()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Smith {
    /// Diagonal entries, non-negative, each dividing the next.
    pub diag: Vec<i128>,
    pub u: Vec<Vec<i128>>,
    pub v: Vec<Vec<i128>>,
}

/// Smith normal form `U·A·V = D` over ℤ.
pub fn smith_normal_form(a: &[Vec<i128>]) -> Smith {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<i128>> = a.to_vec();
    let ident = |n: usize| -> Vec<Vec<i128>> { (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect() };
    let mut u = ident(rows);
    let mut v = ident(cols);

    let n = rows.min(cols);
    for t in 0..n {
        // pivot of smallest absolute value in the remaining block
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            m.swap(t, pi);
            u.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                let f = m[i][t] / m[t][t];
                if f != 0 {
                    for j in 0..cols {
                        m[i][j] -= f * m[t][j];
                    }
                    for j in 0..rows {
                        u[i][j] -= f * u[t][j];
                    }
                }
                clean &= m[i][t] == 0;
            }
            for j in t + 1..cols {
                let f = m[t][j] / m[t][t];
                if f != 0 {
                    for i in 0..rows {
                        m[i][j] -= f * m[i][t];
                    }
                    for i in 0..cols {
                        v[i][j] -= f * v[i][t];
                    }
                }
                clean &= m[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold a non-divisible entry into row t
            let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| m[i][j] % m[t][t] != 0);
            match bad {
                Some((i, _)) => {
                    for j in 0..cols {
                        m[t][j] += m[i][j];
                    }
                    for j in 0..rows {
                        u[t][j] += u[i][j];
                    }
                }
                None => break,
            }
        }
        if m[t][t] < 0 {
            for j in 0..cols {
                m[t][j] = -m[t][j];
            }
            for j in 0..rows {
                u[t][j] = -u[t][j];
            }
        }
    }
    Smith { diag: (0..n).map(|i| m[i][i]).collect(), u, v }
}

/// Height `2χ + 2·P·O − Σ contr_v(P)`.
pub fn mw_height(chi: i64, p_dot_o: i64, contribs: &[(KodairaType, u32)]) -> Result<Rational, LatticeError> {
    let mut h = qi(2 * chi + 2 * p_dot_o);
    for (k, i) in contribs {
        h -= k.contr(*i, *i).ok_or(LatticeError::BadComponent { kodaira: *k, index: *i })?;
    }
    Ok(h)
}

/// Height pairing `χ + P·O + Q·O − P·Q − Σ contr_v(P, Q)`.
pub fn mw_pairing(
    chi: i64,
    p_dot_o: i64,
    q_dot_o: i64,
    p_dot_q: i64,
    contribs: &[(KodairaType, u32, u32)],
) -> Result<Rational, LatticeError> {
    let mut h = qi(chi + p_dot_o + q_dot_o - p_dot_q);
    for (k, i, j) in contribs {
        h -= k.contr(*i, *j).ok_or(LatticeError::BadComponent { kodaira: *k, index: (*i).max(*j) })?;
    }
    Ok(h)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MwData {
    pub rank: u32,
    pub torsion: u32,
}

impl MwData {
    pub fn rho(&self, config: &FiberConfig) -> Result<u32, LatticeError> {
        shioda_tate_rho(config, self.rank)
    }
}

/// Blocks of the search lattice: Gram matrices of `A2⁴ ⊕ A1`.
fn search_blocks() -> Vec<Vec<Vec<i64>>> {
    let a2 = vec![vec![-2, 1], vec![1, -2]];
    vec![a2.clone(), a2.clone(), a2.clone(), a2, vec![vec![-2]]]
}

fn quad(g: &[Vec<i64>], c: &[i64]) -> i64 {
    (0..c.len()).map(|i| (0..c.len()).map(|j| c[i] * g[i][j] * c[j]).sum::<i64>()).sum()
}

fn box_vectors(dim: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out.into_iter().flat_map(|v| (-bound..=bound).map(move |c| [v.clone(), vec![c]].concat())).collect();
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrimitivitySolution {
    pub n: i64,
    pub h: i64,
    pub r_dot_r: i64,
    pub sigma0_dot_r: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrimitivityCertificate {
    pub n_max: i64,
    pub h_max: i64,
    pub coeff_bound: i64,
    pub lattice: String,
    /// Component-incidence patterns of the nonzero section.
    pub patterns: usize,
    /// Coefficient vectors in the box (product over blocks).
    pub box_size: u64,
    /// (n, pattern, R) triples meeting the identity-component constraint.
    pub admissible: u64,
    /// `3 | n`: excluded by reduction mod 3 without enumeration.
    pub mod3_excluded: Vec<i64>,
    pub solutions: Vec<PrimitivitySolution>,
    /// Diagnostic: (n, h, R·R, Σ0·R) solutions when the constraint is dropped.
    pub unconstrained_hits: usize,
}

/// Search for `2n²(h+1) − 2 = R·R + 2n Σ0·R` in a coefficient box.
///
/// `R` ranges over combinations of the `A2⁴ ⊕ A1` root basis with
/// `|coeff| ≤ coeff_bound`, subject to `R·Θ = −n Σ0·Θ` for every root `Θ`
/// (the power of the section meets the identity components). The incidence
/// pattern of `Σ0` runs over all choices of one component per block.
pub fn primitivity_search(n_max: i64, h_max: i64, coeff_bound: i64) -> PrimitivityCertificate {
    assert!(n_max >= 2, "n = 1 is the tautological case");
    let blocks = search_blocks();
    // per block: (hit component or None, R·R, Σ0·R) for every box vector
    let per_block: Vec<Vec<(Option<usize>, Vec<i64>, i64, i64)>> = blocks
        .iter()
        .map(|g| {
            let dim = g.len();
            let mut v = Vec::new();
            for hit in std::iter::once(None).chain((0..dim).map(Some)) {
                for c in box_vectors(dim, coeff_bound) {
                    let rr = quad(g, &c);
                    let sr = hit.map_or(0, |k| c[k]);
                    v.push((hit, c, rr, sr));
                }
            }
            v
        })
        .collect();
    let patterns: usize = blocks.iter().map(|g| g.len() + 1).product();
    let box_size: u64 = blocks.iter().map(|g| ((2 * coeff_bound + 1) as u64).pow(g.len() as u32)).product();

    let mut admissible = 0u64;
    let mut solutions = Vec::new();
    let mut mod3_excluded = Vec::new();
    for n in 2..=n_max {
        if n % 3 == 0 {
            mod3_excluded.push(n);
        }
        // admissible (R·R + 2n Σ0·R) values per block under the constraint
        let mut sums: BTreeSet<(i64, i64)> = [(0, 0)].into();
        for (g, entries) in blocks.iter().zip(&per_block) {
            let mut vals = BTreeSet::new();
            for (hit, c, rr, sr) in entries {
                let ok = (0..g.len()).all(|j| {
                    let r_theta: i64 = (0..g.len()).map(|i| c[i] * g[i][j]).sum();
                    r_theta == if *hit == Some(j) { -n } else { 0 }
                });
                if ok {
                    admissible += 1;
                    vals.insert((*rr, *sr));
                }
            }
            sums = sums.iter().flat_map(|(a, b)| vals.iter().map(move |(c, d)| (a + c, b + d))).collect();
        }
        for h in 0..=h_max {
            let lhs = 2 * n * n * (h + 1) - 2;
            for (rr, sr) in &sums {
                if rr + 2 * n * sr == lhs {
                    solutions.push(PrimitivitySolution { n, h, r_dot_r: *rr, sigma0_dot_r: *sr });
                }
            }
        }
    }

    // same equation without the identity-component constraint
    let mut free: BTreeSet<(i64, i64)> = [(0, 0)].into();
    for entries in &per_block {
        let vals: BTreeSet<(i64, i64)> = entries.iter().map(|(_, _, rr, sr)| (*rr, *sr)).collect();
        free = free.iter().flat_map(|(a, b)| vals.iter().map(move |(c, d)| (a + c, b + d))).collect();
    }
    let mut unconstrained_hits = 0;
    for n in 2..=n_max {
        for h in 0..=h_max {
            let lhs = 2 * n * n * (h + 1) - 2;
            unconstrained_hits += free.iter().filter(|(rr, sr)| rr + 2 * n * sr == lhs).count();
        }
    }

    PrimitivityCertificate {
        n_max,
        h_max,
        coeff_bound,
        lattice: "A2^4 + A1".into(),
        patterns,
        box_size,
        admissible,
        mod3_excluded,
        solutions,
        unconstrained_hits,
    }
}

/// `2n²(h+1) − 2 mod 3`.
pub fn primitivity_lhs_mod3(n: i64, h: i64) -> i64 {
    (2 * n * n * (h + 1) - 2).rem_euclid(3)
}

/// Group order of a list of invariant factors.
pub fn group_order(factors: &[u64]) -> u64 {
    factors.iter().product()
}

/// Canonical invariant factors of `⊕ ℤ/k_i` (via Smith normal form).
pub fn invariant_factors(orders: &[u64]) -> Vec<u64> {
    let n = orders.len();
    let m: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| if i == j { orders[i] as i128 } else { 0 }).collect()).collect();
    let mut d: Vec<u64> = smith_normal_form(&m).diag.iter().map(|x| x.unsigned_abs() as u64).filter(|x| *x != 1).collect();
    d.sort_unstable();
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kodaira::{FiberEntry, Site};
    use KodairaType::*;

    fn config(types: &[(KodairaType, u32)], g: u32) -> FiberConfig {
        FiberConfig::new(
            types
                .iter()
                .enumerate()
                .map(|(i, (k, m))| FiberEntry { place: Site::Label(format!("p{i}")), kodaira: *k, mult: *m })
                .collect(),
            g,
        )
    }

    /// Invariant factors of a finite abelian group from its `p^j`-torsion
    /// counts, an oracle independent of Smith normal form.
    fn factors_by_counting(total: u64, torsion_count: impl Fn(u64) -> u64) -> Vec<u64> {
        let mut per_prime: Vec<Vec<u64>> = Vec::new();
        let mut rest = total;
        for p in 2..=total {
            if !rest.is_multiple_of(p) {
                continue;
            }
            let mut full = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                full += 1;
            }
            let log = |c: u64| (0..=full).find(|e| p.pow(*e) == c).unwrap();
            // ge[j] = number of cyclic factors of order ≥ p^(j+1)
            let mut logs = vec![0];
            while *logs.last().unwrap() < full {
                logs.push(log(torsion_count(p.pow(logs.len() as u32))));
            }
            let ge: Vec<u32> = logs.windows(2).map(|w| w[1] - w[0]).collect();
            let mut orders = Vec::new();
            for j in 0..ge.len() {
                for _ in 0..ge[j] - ge.get(j + 1).copied().unwrap_or(0) {
                    orders.push(p.pow(j as u32 + 1));
                }
            }
            orders.sort_unstable_by(|a, b| b.cmp(a));
            per_prime.push(orders);
        }
        let len = per_prime.iter().map(Vec::len).max().unwrap_or(0);
        let mut out: Vec<u64> = (0..len).map(|i| per_prime.iter().map(|v| v.get(i).copied().unwrap_or(1)).product()).collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn shioda_tate_values() {
        assert_eq!(shioda_tate_rho(&config(&[(I(3), 4)], 1), 1), Ok(11));
        assert_eq!(shioda_tate_rho(&config(&[(I(3), 2), (I(6), 1)], 1), 1), Ok(12));
        assert_eq!(shioda_tate_rho(&config(&[(I(3), 1), (I(9), 1)], 1), 0), Ok(12));
        assert_eq!(
            shioda_tate_rho(&config(&[(I(3), 1), (I(9), 1)], 1), 1),
            Err(LatticeError::ExceedsH11 { rho: 13, h11: 12 })
        );
    }

    #[test]
    fn discriminants() {
        let y0 = config(&[(I(3), 1), (I(9), 1)], 1);
        assert_eq!(ns_discriminant(&y0, 3), Ok(qi(3)));
        assert_eq!(ns_discriminant(&y0, 1), Ok(qi(27)));
        assert_eq!(ns_discriminant(&config(&[(I(3), 4)], 1), 3), Ok(qi(9)));
        assert!(matches!(ns_discriminant(&y0, 9), Err(LatticeError::NonIntegral(_))));
        assert_eq!(RootBlock::of_fiber(IVStar).unwrap(), Some(RootBlock::E6));
        assert_eq!(RootBlock::E6.disc_form().gens, vec![(3, q(2, 3))]);
    }

    #[test]
    fn smith_form_examples() {
        let s = smith_normal_form(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(s.diag, vec![2, 6, 12]);
        assert_eq!(invariant_factors(&[2, 3]), vec![6]);
        assert_eq!(invariant_factors(&[6, 4]), vec![2, 12]);
        let s = smith_normal_form(&[vec![3, 6, 9]]);
        assert_eq!(s.diag, vec![3]);
    }

    #[test]
    fn smith_transforms_are_consistent() {
        let a = vec![vec![4i128, 6, 2], vec![2, 8, 10]];
        let s = smith_normal_form(&a);
        let mul = |x: &Vec<Vec<i128>>, y: &Vec<Vec<i128>>| -> Vec<Vec<i128>> {
            (0..x.len()).map(|i| (0..y[0].len()).map(|j| (0..y.len()).map(|k| x[i][k] * y[k][j]).sum()).collect()).collect()
        };
        let d = mul(&mul(&s.u, &a), &s.v);
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(d[i][j], if i == j { s.diag[i] } else { 0 });
            }
        }
    }

    fn quotient_sets(blocks: &[RootBlock]) -> BTreeSet<Vec<u64>> {
        let f = FiniteQuadForm::direct_sum(blocks);
        isotropic_quotients(&f, 3).unwrap().into_iter().map(|k| k.quotient).collect()
    }

    #[test]
    fn nested_families() {
        use RootBlock::*;
        let a = quotient_sets(&[U, A(2), A(2), A(2), A(2)]);
        assert_eq!(a, [vec![3, 3]].into());
        let b = quotient_sets(&[U, A(2), A(2), A(2), A(2), A(1)]);
        assert_eq!(b, [vec![3, 6]].into());
        let c = quotient_sets(&[U, A(2), A(2), A(5), A(1)]);
        assert!(c.contains(&vec![2, 6]));
        // |K⊥/K| = |F| / ℓ²
        for blocks in [vec![A(2), A(2), A(5), A(1)], vec![A(2); 4]] {
            let f = FiniteQuadForm::direct_sum(&blocks);
            for k in isotropic_quotients(&f, 3).unwrap() {
                assert_eq!(group_order(&k.quotient) * 9, f.order());
            }
        }
    }

    #[test]
    fn quotients_match_counting_oracle() {
        use RootBlock::*;
        let f = FiniteQuadForm::direct_sum(&[A(2), A(2), A(5), A(1)]);
        let elems = f.elements();
        for k in isotropic_quotients(&f, 3).unwrap() {
            let x = k.generator.clone();
            let kset: Vec<Vec<u64>> = (0..3).map(|m| f.scale(&x, m)).collect();
            let in_perp = |y: &[u64]| f.b(y, &x).is_zero();
            // coset representatives: one element per coset of K in K⊥
            let mut reps: Vec<Vec<u64>> = Vec::new();
            let add = |a: &[u64], b: &[u64]| -> Vec<u64> { f.gens.iter().zip(a.iter().zip(b)).map(|((o, _), (p, q))| (p + q) % o).collect() };
            for y in elems.iter().filter(|y| in_perp(y)) {
                let coset: Vec<Vec<u64>> = kset.iter().map(|kk| add(y, kk)).collect();
                if !reps.iter().any(|r| coset.contains(r)) {
                    reps.push(y.clone());
                }
            }
            let in_k = |y: &[u64]| kset.iter().any(|kk| kk.as_slice() == y);
            let oracle = factors_by_counting(reps.len() as u64, |m| reps.iter().filter(|y| in_k(&f.scale(y, m))).count() as u64);
            assert_eq!(oracle, k.quotient);
        }
    }

    #[test]
    fn heights() {
        assert_eq!(mw_height(1, 0, &[]), Ok(qi(2)));
        assert_eq!(I(6).contr(2, 2), Some(q(4, 3)));
        assert_eq!(mw_height(1, 0, &[(I(3), 0)]), Ok(qi(2)));
        assert_eq!(mw_height(1, 0, &[(I(6), 2)]), Ok(q(2, 3)));
        assert!(matches!(mw_height(1, 0, &[(I(3), 3)]), Err(LatticeError::BadComponent { .. })));
        assert_eq!(mw_pairing(1, 0, 0, 0, &[]), Ok(qi(1)));
    }

    #[test]
    fn primitivity_box() {
        let c = primitivity_search(5, 4, 4);
        assert!(c.solutions.is_empty());
        assert_eq!(c.mod3_excluded, vec![3]);
        assert_eq!(c.patterns, 162);
        assert_eq!(c.box_size, 9u64.pow(9));
        assert!(c.admissible > 0);
        assert!(c.unconstrained_hits > 0);
        for n in [3, 6, 9] {
            for h in 0..5 {
                assert_eq!(primitivity_lhs_mod3(n, h), 1);
            }
        }
    }
}
