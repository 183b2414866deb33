//! Semistable reduction of the `IV*` fiber on dual graphs: cyclic base
//! covers, resolution of the cone points, blow-downs, and the section's
//! self-intersection.
//!
//! A graph records curves with genus, self-intersection and multiplicity in
//! the fiber, and intersection points explicitly (three concurrent lines and
//! a triangle have the same weighted dual graph). The section, if present,
//! is a vertex of multiplicity 0.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{q, qi, Rational};
use crate::kodaira::KodairaType;

#[derive(Debug, Error, PartialEq)]
pub enum ReductionError {
    #[error("only covers of degree 2 and 3 of IV* are supported, got {0}")]
    UnsupportedDegree(u32),
    #[error("preimage of {0} may be disconnected")]
    Disconnected(String),
    #[error("unsupported singular point on {0} and {1}")]
    UnsupportedSingularity(String, String),
    #[error("terminal graph is not a Kodaira fiber")]
    Unrecognized,
    #[error("graph inconsistency: {0}")]
    Inconsistent(String),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Vertex {
    pub label: String,
    pub genus: u32,
    #[serde(serialize_with = "ser_rational")]
    pub self_int: Rational,
    /// Multiplicity in the fiber; 0 marks the section.
    pub mult: u32,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// An intersection point with the local intersection number of each pair
/// of curves through it.
#[derive(Clone, Debug, PartialEq)]
pub struct Point {
    pub pairs: BTreeMap<(usize, usize), Rational>,
    /// Surface singularity (cone over the twisted cubic).
    pub cone: bool,
}

impl Point {
    fn crossing(a: usize, b: usize, local: Rational) -> Point {
        Point { pairs: [((a.min(b), a.max(b)), local)].into(), cone: false }
    }

    pub fn members(&self) -> BTreeSet<usize> {
        self.pairs.keys().flat_map(|(a, b)| [*a, *b]).collect()
    }

    fn contains(&self, v: usize) -> bool {
        self.pairs.keys().any(|(a, b)| *a == v || *b == v)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiberGraph {
    pub vertices: Vec<Vertex>,
    pub points: Vec<Point>,
}

#[derive(Serialize)]
struct PointJson {
    curves: Vec<String>,
    local: Vec<String>,
    cone: bool,
}

#[derive(Serialize)]
struct GraphJson<'a> {
    vertices: &'a [Vertex],
    points: Vec<PointJson>,
}

impl Serialize for FiberGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let points = self
            .points
            .iter()
            .map(|p| PointJson {
                curves: p.members().iter().map(|v| self.vertices[*v].label.clone()).collect(),
                local: p
                    .pairs
                    .iter()
                    .map(|((a, b), r)| format!("{}.{}={r}", self.vertices[*a].label, self.vertices[*b].label))
                    .collect(),
                cone: p.cone,
            })
            .collect();
        GraphJson { vertices: &self.vertices, points }.serialize(s)
    }
}

impl FiberGraph {
    pub fn index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    pub fn vertex(&self, label: &str) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.label == label)
    }

    pub fn dot(&self, a: usize, b: usize) -> Rational {
        if a == b {
            return self.vertices[a].self_int.clone();
        }
        let key = (a.min(b), a.max(b));
        self.points.iter().filter_map(|p| p.pairs.get(&key)).fold(qi(0), |s, r| s + r)
    }

    pub fn dot_labels(&self, a: &str, b: &str) -> Option<Rational> {
        Some(self.dot(self.index(a)?, self.index(b)?))
    }

    pub fn fiber_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|i| self.vertices[*i].mult > 0).collect()
    }

    pub fn section(&self) -> Option<usize> {
        self.vertices.iter().position(|v| v.mult == 0)
    }

    pub fn section_self_int(&self) -> Option<Rational> {
        self.section().map(|s| self.vertices[s].self_int.clone())
    }

    pub fn cone_points(&self) -> usize {
        self.points.iter().filter(|p| p.cone).count()
    }

    /// `F·X = 0` for every fiber component and `F·σ = 1`.
    pub fn check_fiber_relation(&self) -> Result<(), ReductionError> {
        let fiber = self.fiber_vertices();
        let f_dot = |x: usize| fiber.iter().fold(qi(0), |s, j| s + qi(self.vertices[*j].mult as i64) * self.dot(*j, x));
        for x in &fiber {
            if f_dot(*x) != qi(0) {
                return Err(ReductionError::Inconsistent(format!("F.{} = {}", self.vertices[*x].label, f_dot(*x))));
            }
        }
        if let Some(s) = self.section() {
            if f_dot(s) != qi(1) {
                return Err(ReductionError::Inconsistent(format!("F.section = {}", f_dot(s))));
            }
        }
        Ok(())
    }

    /// Euler number of the fiber as a curve configuration (smooth surface,
    /// normal crossings or concurrent lines).
    pub fn euler_number(&self) -> i64 {
        let fiber: BTreeSet<usize> = self.fiber_vertices().into_iter().collect();
        let mut e: i64 = fiber.iter().map(|v| 2 - 2 * self.vertices[*v].genus as i64).sum();
        for p in &self.points {
            let m: Vec<usize> = p.members().into_iter().filter(|v| fiber.contains(v)).collect();
            if m.len() >= 2 {
                e -= m.len() as i64 - 1;
            }
        }
        e
    }

    /// Blow down the genus-0 `(−1)`-curve `c`.
    pub fn blow_down(&mut self, c: usize) -> Result<(), ReductionError> {
        let v = &self.vertices[c];
        if v.genus != 0 || v.self_int != qi(-1) {
            return Err(ReductionError::Inconsistent(format!("{} is not a (-1)-curve", v.label)));
        }
        let n = self.vertices.len();
        let m: Vec<Rational> = (0..n).map(|x| if x == c { qi(0) } else { self.dot(x, c) }).collect();
        for x in 0..n {
            if x != c {
                self.vertices[x].self_int = &self.vertices[x].self_int + &m[x] * &m[x];
            }
        }
        let (on_c, rest): (Vec<Point>, Vec<Point>) = self.points.drain(..).partition(|p| p.contains(c));
        if on_c.iter().any(|p| p.cone) {
            return Err(ReductionError::Inconsistent("blow-down through a singular point".into()));
        }
        let mut pairs: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for p in &on_c {
            for (k, r) in &p.pairs {
                if k.0 != c && k.1 != c {
                    *pairs.entry(*k).or_insert(qi(0)) += r;
                }
            }
        }
        let meet: Vec<usize> = (0..n).filter(|x| m[*x] != qi(0)).collect();
        for (i, a) in meet.iter().enumerate() {
            for b in &meet[i + 1..] {
                *pairs.entry((*a, *b)).or_insert(qi(0)) += &m[*a] * &m[*b];
            }
        }
        self.points = rest;
        if !pairs.is_empty() {
            self.points.push(Point { pairs, cone: false });
        }
        self.remove_vertex(c);
        Ok(())
    }

    fn remove_vertex(&mut self, c: usize) {
        self.vertices.remove(c);
        let shift = |x: usize| if x > c { x - 1 } else { x };
        for p in &mut self.points {
            p.pairs = p.pairs.iter().map(|((a, b), r)| ((shift(*a), shift(*b)), r.clone())).collect();
        }
    }

    /// DOT rendering; points through three or more curves become nodes.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph fiber {\n");
        for v in &self.vertices {
            let shape = if v.mult == 0 { ", shape=box" } else { "" };
            let _ = writeln!(s, "  \"{}\" [label=\"{} g={} ({}) m={}\"{shape}];", v.label, v.label, v.genus, v.self_int, v.mult);
        }
        for (i, p) in self.points.iter().enumerate() {
            let members = p.members();
            if members.len() == 2 && !p.cone {
                let ((a, b), r) = p.pairs.iter().next().unwrap();
                let _ = writeln!(s, "  \"{}\" -- \"{}\" [label=\"{r}\"];", self.vertices[*a].label, self.vertices[*b].label);
            } else {
                let style = if p.cone { "shape=diamond" } else { "shape=point" };
                let _ = writeln!(s, "  \"p{i}\" [{style}];");
                for v in members {
                    let _ = writeln!(s, "  \"p{i}\" -- \"{}\";", self.vertices[v].label);
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

/// The `IV*` fiber (`Ẽ6`: center `E`, arms `D_i`–`C_i`) with a section of
/// self-intersection −1 through `C1`.
pub fn iv_star_graph() -> FiberGraph {
    let mut vertices = vec![Vertex { label: "E".into(), genus: 0, self_int: qi(-2), mult: 3 }];
    for i in 1..=3 {
        vertices.push(Vertex { label: format!("D{i}"), genus: 0, self_int: qi(-2), mult: 2 });
    }
    for i in 1..=3 {
        vertices.push(Vertex { label: format!("C{i}"), genus: 0, self_int: qi(-2), mult: 1 });
    }
    vertices.push(Vertex { label: "S".into(), genus: 0, self_int: qi(-1), mult: 0 });
    let mut points = Vec::new();
    for i in 1..=3 {
        points.push(Point::crossing(0, i, qi(1)));
        points.push(Point::crossing(i, i + 3, qi(1)));
    }
    points.push(Point::crossing(4, 7, qi(1)));
    FiberGraph { vertices, points }
}

/// Normalized `d`-fold cover branched along the fiber, from the local form
/// `z^d = x^a y^b`.
fn cyclic_cover(g: &FiberGraph, d: u32) -> Result<FiberGraph, ReductionError> {
    let d64 = d as u64;
    let m = |v: usize| g.vertices[v].mult as u64;
    let k = |v: usize| d64.gcd(&m(v));
    let mut vertices = Vec::new();
    for (i, v) in g.vertices.iter().enumerate() {
        let ki = k(i);
        // points of the preimage over each crossing, for Riemann-Hurwitz
        let mut ram = 0u64;
        let mut branched = false;
        for p in &g.points {
            for (a, b) in p.pairs.keys() {
                let other = if *a == i { *b } else if *b == i { *a } else { continue };
                let n = d64.gcd(&m(i)).gcd(&m(other));
                ram += ki - n;
                branched |= n < ki;
            }
        }
        if ki > 1 && !branched {
            return Err(ReductionError::Disconnected(v.label.clone()));
        }
        // the section's other branch points lie outside this fiber
        let genus = if v.mult == 0 { v.genus } else { ((ki as i64 * (2 * v.genus as i64 - 2) + ram as i64) / 2 + 1) as u32 };
        let ki_r = qi(ki as i64);
        vertices.push(Vertex {
            label: format!("{}'", v.label),
            genus,
            self_int: &ki_r * &ki_r * &v.self_int / qi(d as i64),
            mult: (m(i) / ki) as u32,
        });
    }
    let mut points = Vec::new();
    for p in &g.points {
        if p.pairs.len() != 1 {
            return Err(ReductionError::Inconsistent("cover over a non-normal-crossing point".into()));
        }
        let ((a, b), local) = p.pairs.iter().next().unwrap();
        if *local != qi(1) {
            return Err(ReductionError::Inconsistent("cover over a non-transverse crossing".into()));
        }
        let n = d64.gcd(&m(*a)).gcd(&m(*b));
        let pa = d64.gcd(&m(*a));
        let pb = d64.gcd(&m(*b));
        let singular = d64 * n / (pa * pb) > 1;
        let up = q((k(*a) * k(*b)) as i64, (d64 * n) as i64);
        for _ in 0..n {
            let mut pt = Point::crossing(*a, *b, up.clone());
            pt.cone = singular;
            points.push(pt);
        }
    }
    Ok(FiberGraph { vertices, points })
}

/// The cover of degree 2 or 3 of the `IV*` fiber, before resolution.
pub fn cyclic_cover_ivstar(d: u32) -> Result<FiberGraph, ReductionError> {
    if d != 2 && d != 3 {
        return Err(ReductionError::UnsupportedDegree(d));
    }
    cyclic_cover(&iv_star_graph(), d)
}

/// Replace each cone point by a `(−3)`-curve.
pub fn resolve_cone(g: &FiberGraph) -> Result<FiberGraph, ReductionError> {
    let mut out = g.clone();
    let mut count = 0;
    let cones: Vec<usize> = (0..g.points.len()).filter(|i| g.points[*i].cone).collect();
    let mut new_points = Vec::new();
    for i in &cones {
        let p = &g.points[*i];
        let ((a, b), local) = p.pairs.iter().next().unwrap();
        if p.pairs.len() != 1 || *local != q(1, 3) {
            return Err(ReductionError::UnsupportedSingularity(g.vertices[*a].label.clone(), g.vertices[*b].label.clone()));
        }
        count += 1;
        let (ma, mb) = (g.vertices[*a].mult, g.vertices[*b].mult);
        if (ma + mb) % 3 != 0 {
            return Err(ReductionError::Inconsistent("exceptional multiplicity is not integral".into()));
        }
        let e = out.vertices.len();
        out.vertices.push(Vertex { label: format!("E{count}"), genus: 0, self_int: qi(-3), mult: (ma + mb) / 3 });
        for v in [*a, *b] {
            out.vertices[v].self_int = &out.vertices[v].self_int - q(1, 3);
            new_points.push(Point::crossing(v, e, qi(1)));
        }
    }
    out.points = out.points.into_iter().filter(|p| !p.cone).chain(new_points).collect();
    Ok(out)
}

/// The order in which `(−1)`-curves are picked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContractionOrder {
    LowestLabel,
    HighestLabel,
}

/// Contract fiber `(−1)`-curves until none remain, then classify.
pub fn contract_all(g: &FiberGraph, order: ContractionOrder) -> Result<(FiberGraph, KodairaType, Vec<String>), ReductionError> {
    let mut g = g.clone();
    let mut done = Vec::new();
    loop {
        let mut cands: Vec<usize> = g
            .fiber_vertices()
            .into_iter()
            .filter(|v| g.vertices[*v].genus == 0 && g.vertices[*v].self_int == qi(-1))
            .collect();
        if g.fiber_vertices().len() == 1 {
            cands.clear();
        }
        cands.sort_by(|a, b| g.vertices[*a].label.cmp(&g.vertices[*b].label));
        let pick = match order {
            ContractionOrder::LowestLabel => cands.first(),
            ContractionOrder::HighestLabel => cands.last(),
        };
        let Some(&c) = pick else { break };
        done.push(g.vertices[c].label.clone());
        g.blow_down(c)?;
        g.check_fiber_relation()?;
    }
    let k = classify(&g)?;
    Ok((g, k, done))
}

/// Kodaira type of a relatively minimal fiber graph.
pub fn classify(g: &FiberGraph) -> Result<KodairaType, ReductionError> {
    use KodairaType::*;
    let fib = g.fiber_vertices();
    let n = fib.len();
    let vs = |i: usize| &g.vertices[fib[i]];
    if n == 1 {
        let v = vs(0);
        return if v.genus == 1 && v.self_int == qi(0) && v.mult == 1 { Ok(I0) } else { Err(ReductionError::Unrecognized) };
    }
    if fib.iter().any(|v| g.vertices[*v].genus != 0 || g.vertices[*v].self_int != qi(-2)) {
        return Err(ReductionError::Unrecognized);
    }
    let fset: BTreeSet<usize> = fib.iter().copied().collect();
    let fpoints: Vec<Vec<usize>> = g
        .points
        .iter()
        .map(|p| p.members().into_iter().filter(|v| fset.contains(v)).collect::<Vec<_>>())
        .filter(|m: &Vec<usize>| m.len() >= 2)
        .collect();
    let pair = |a: usize, b: usize| g.dot(a, b);
    if n == 2 {
        let p = pair(fib[0], fib[1]);
        return match (fpoints.len(), p == qi(2)) {
            (1, true) => Ok(III),
            (2, true) => Ok(I(2)),
            _ => Err(ReductionError::Unrecognized),
        };
    }
    if fpoints.len() == 1 && fpoints[0].len() == 3 && n == 3 {
        return Ok(IV);
    }
    if fpoints.iter().any(|p| p.len() != 2) {
        return Err(ReductionError::Unrecognized);
    }
    // simple graph with unit edges
    let mut adj: BTreeMap<usize, Vec<usize>> = fib.iter().map(|v| (*v, vec![])).collect();
    for p in &fpoints {
        if pair(p[0], p[1]) != qi(1) {
            return Err(ReductionError::Unrecognized);
        }
        adj.get_mut(&p[0]).unwrap().push(p[1]);
        adj.get_mut(&p[1]).unwrap().push(p[0]);
    }
    let edges = fpoints.len();
    let degrees: Vec<usize> = adj.values().map(Vec::len).collect();
    if edges == n && degrees.iter().all(|d| *d == 2) {
        return Ok(I(n as u32));
    }
    if edges != n - 1 {
        return Err(ReductionError::Unrecognized);
    }
    let branch: Vec<usize> = adj.iter().filter(|(_, a)| a.len() >= 3).map(|(v, _)| *v).collect();
    let arms = |center: usize| -> Vec<usize> {
        let mut lens: Vec<usize> = adj[&center]
            .iter()
            .map(|start| {
                let (mut prev, mut cur, mut len) = (center, *start, 1);
                while adj[&cur].len() == 2 {
                    let next = *adj[&cur].iter().find(|x| **x != prev).unwrap();
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                len
            })
            .collect();
        lens.sort_unstable();
        lens
    };
    match branch.as_slice() {
        [c] if adj[c].len() == 4 && n == 5 => Ok(I0Star),
        [c] if adj[c].len() == 3 => match arms(*c).as_slice() {
            [2, 2, 2] => Ok(IVStar),
            [1, 3, 3] => Ok(IIIStar),
            [1, 2, 5] => Ok(IIStar),
            _ => Err(ReductionError::Unrecognized),
        },
        [a, b] if adj[a].len() == 3 && adj[b].len() == 3 && n >= 6 => Ok(IStar(n as u32 - 5)),
        _ => Err(ReductionError::Unrecognized),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Step {
    CyclicCover(u32),
    NormalizeResolve,
    BlowDown(String),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceEntry {
    pub step: Step,
    pub graph: FiberGraph,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReductionTrace {
    pub degree: u32,
    pub steps: Vec<TraceEntry>,
    pub terminal: KodairaType,
}

/// Full pipeline for `IV*` under a cover of degree `d ∈ {1, 2, 3}`.
pub fn reduction_trace(d: u32, order: ContractionOrder) -> Result<ReductionTrace, ReductionError> {
    let mut steps = Vec::new();
    let mut g = iv_star_graph();
    if d != 1 {
        g = cyclic_cover_ivstar(d)?;
        steps.push(TraceEntry { step: Step::CyclicCover(d), graph: g.clone() });
        if g.cone_points() > 0 {
            g = resolve_cone(&g)?;
            steps.push(TraceEntry { step: Step::NormalizeResolve, graph: g.clone() });
        }
    }
    g.check_fiber_relation()?;
    let (_, _, order_done) = contract_all(&g, order)?;
    for label in order_done {
        let c = g.index(&label).unwrap();
        g.blow_down(c)?;
        steps.push(TraceEntry { step: Step::BlowDown(label), graph: g.clone() });
    }
    let terminal = classify(&g)?;
    Ok(ReductionTrace { degree: d, steps, terminal })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SectionTrack {
    #[serde(serialize_with = "ser_rational")]
    pub after_cover: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub terminal: Rational,
    pub blow_downs_meeting_section: u32,
    pub deg_l: i64,
}

/// Self-intersection of the section along the pipeline; `deg L = −σ²`.
pub fn track_section_deg_l(d: u32) -> Result<SectionTrack, ReductionError> {
    let trace = reduction_trace(d, ContractionOrder::LowestLabel)?;
    let first = trace.steps.first().map(|s| &s.graph).cloned().unwrap_or_else(iv_star_graph);
    let after_cover = first.section_self_int().unwrap();
    let mut prev = after_cover.clone();
    let mut meeting = 0;
    for s in &trace.steps {
        let cur = s.graph.section_self_int().unwrap();
        if matches!(s.step, Step::BlowDown(_)) && cur != prev {
            meeting += 1;
        }
        prev = cur;
    }
    let deg = -prev.clone();
    if !deg.is_integer() {
        return Err(ReductionError::Inconsistent(format!("section self-intersection {prev}")));
    }
    Ok(SectionTrack { after_cover, terminal: prev, blow_downs_meeting_section: meeting, deg_l: deg.to_integer().try_into().unwrap() })
}

/// A monomial in `x, y, t, u` as an exponent vector.
pub type Monomial = [u32; 4];

/// The three relations `ut = xy`, `u² = yt`, `t² = xu`.
pub fn normalization_relations() -> [(Monomial, Monomial); 3] {
    [([0, 0, 1, 1], [1, 1, 0, 0]), ([0, 0, 0, 2], [0, 1, 1, 0]), ([0, 0, 2, 0], [1, 0, 0, 1])]
}

/// Whether each step of `chain` rewrites one factor by a relation (either
/// direction).
pub fn check_rewriting_chain(chain: &[Monomial]) -> bool {
    let rels = normalization_relations();
    chain.windows(2).all(|w| {
        rels.iter().any(|(l, r)| {
            [(l, r), (r, l)].iter().any(|(from, to)| {
                (0..4).all(|i| w[0][i] >= from[i]) && (0..4).all(|i| w[0][i] - from[i] + to[i] == w[1][i])
            })
        })
    })
}

/// `t·t² = t·xu = x·ut = x·xy`, hence `t³ = x²y`.
pub fn normalization_certificate() -> (Vec<Monomial>, bool) {
    let chain = vec![[0, 0, 3, 0], [1, 0, 1, 1], [2, 1, 0, 0]];
    let ok = check_rewriting_chain(&chain);
    (chain, ok)
}

/// The parametrization `(x, y, t, u) = (a³, b³, a²b, ab²)` satisfies the
/// relations.
pub fn parametrization_holds() -> bool {
    let param: [[u32; 2]; 4] = [[3, 0], [0, 3], [2, 1], [1, 2]];
    let ev = |m: &Monomial| -> [u32; 2] {
        let mut e = [0, 0];
        for i in 0..4 {
            e[0] += m[i] * param[i][0];
            e[1] += m[i] * param[i][1];
        }
        e
    };
    normalization_relations().iter().all(|(l, r)| ev(l) == ev(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basechange::transition;

    #[test]
    fn iv_star_shape() {
        let g = iv_star_graph();
        assert_eq!(g.fiber_vertices().len(), 7);
        let mut mults: Vec<u32> = g.fiber_vertices().iter().map(|v| g.vertices[*v].mult).collect();
        mults.sort_unstable();
        assert_eq!(mults, vec![1, 1, 1, 2, 2, 2, 3]);
        assert_eq!(g.euler_number(), 8);
        assert_eq!(g.euler_number(), KodairaType::IVStar.euler() as i64);
        g.check_fiber_relation().unwrap();
        assert_eq!(classify(&g), Ok(KodairaType::IVStar));
        let (h, k, done) = contract_all(&g, ContractionOrder::LowestLabel).unwrap();
        assert_eq!((h, k, done.len()), (g, KodairaType::IVStar, 0));
    }

    #[test]
    fn cubic_cover() {
        let g = cyclic_cover_ivstar(3).unwrap();
        let e = g.vertex("E'").unwrap();
        assert_eq!((e.genus, e.self_int.clone(), e.mult), (1, qi(-6), 1));
        assert_eq!(g.vertex("D1'").unwrap().mult, 2);
        assert_eq!(g.vertex("C1'").unwrap().mult, 1);
        assert_eq!(g.cone_points(), 3);
        assert_eq!(g.section_self_int(), Some(qi(-3)));
        g.check_fiber_relation().unwrap();
        let r = resolve_cone(&g).unwrap();
        for i in 1..=3 {
            assert_eq!(r.vertex(&format!("D{i}'")).unwrap().self_int, qi(-1));
            assert_eq!(r.vertex(&format!("C{i}'")).unwrap().self_int, qi(-1));
            let ei = r.vertex(&format!("E{i}")).unwrap();
            assert_eq!((ei.self_int.clone(), ei.mult), (qi(-3), 1));
        }
        r.check_fiber_relation().unwrap();
        let (fin, k, _) = contract_all(&r, ContractionOrder::LowestLabel).unwrap();
        assert_eq!(k, KodairaType::I0);
        assert_eq!(fin.vertex("E'").unwrap().self_int, qi(0));
        assert_eq!(Ok(k), transition(KodairaType::IVStar, 3).map_err(|_| ReductionError::Unrecognized));
    }

    #[test]
    fn quadratic_cover() {
        let g = cyclic_cover_ivstar(2).unwrap();
        assert_eq!(g.vertex("E'").unwrap().self_int, qi(-1));
        assert_eq!(g.vertex("E'").unwrap().mult, 3);
        for i in 1..=3 {
            assert_eq!(g.vertex(&format!("C{i}'")).unwrap().self_int, qi(-1));
            let d = g.vertex(&format!("D{i}'")).unwrap();
            assert_eq!((d.self_int.clone(), d.genus, d.mult), (qi(-4), 0, 1));
        }
        assert_eq!(g.cone_points(), 0);
        let (fin, k, _) = contract_all(&g, ContractionOrder::LowestLabel).unwrap();
        assert_eq!(k, KodairaType::IV);
        // three concurrent lines, not a triangle
        assert_eq!(fin.points.iter().filter(|p| p.members().len() >= 3).count(), 1);
        assert_eq!(fin.euler_number(), 4);
        assert!(cyclic_cover_ivstar(4).is_err());
    }

    #[test]
    fn order_independence() {
        for d in [2, 3] {
            let a = reduction_trace(d, ContractionOrder::LowestLabel).unwrap();
            let b = reduction_trace(d, ContractionOrder::HighestLabel).unwrap();
            assert_eq!(a.terminal, b.terminal);
            let last = |t: &ReductionTrace| t.steps.last().unwrap().graph.section_self_int();
            assert_eq!(last(&a), last(&b));
        }
    }

    #[test]
    fn section_degree() {
        let s = track_section_deg_l(3).unwrap();
        assert_eq!((s.after_cover, s.terminal, s.blow_downs_meeting_section, s.deg_l), (qi(-3), qi(-1), 2, 1));
        let s = track_section_deg_l(1).unwrap();
        assert_eq!((s.terminal, s.deg_l), (qi(-1), 1));
        assert_eq!(track_section_deg_l(2).unwrap().deg_l, 1);
    }

    #[test]
    fn blow_down_updates() {
        // a (−1)-curve meeting two (−2)-curves: they become (−1)-curves meeting once
        let mut g = FiberGraph {
            vertices: vec![
                Vertex { label: "A".into(), genus: 0, self_int: qi(-2), mult: 1 },
                Vertex { label: "C".into(), genus: 0, self_int: qi(-1), mult: 2 },
                Vertex { label: "B".into(), genus: 0, self_int: qi(-2), mult: 1 },
            ],
            points: vec![Point::crossing(0, 1, qi(1)), Point::crossing(1, 2, qi(1))],
        };
        g.blow_down(1).unwrap();
        assert_eq!(g.dot_labels("A", "B"), Some(qi(1)));
        assert_eq!(g.vertex("A").unwrap().self_int, qi(-1));
        assert!(g.blow_down(0).is_ok());
        assert_eq!(g.vertex("B").unwrap().self_int, qi(0));
    }

    #[test]
    fn certificates() {
        let (chain, ok) = normalization_certificate();
        assert!(ok);
        assert_eq!(chain.last(), Some(&[2, 1, 0, 0]));
        assert!(!check_rewriting_chain(&[[0, 0, 3, 0], [2, 1, 0, 0]]));
        assert!(parametrization_holds());
    }

    #[test]
    fn dot_output() {
        let s = iv_star_graph().to_dot();
        assert!(s.starts_with("graph fiber {"));
        assert!(s.contains("\"E\" -- \"D1\""));
        let s = cyclic_cover_ivstar(3).unwrap().to_dot();
        assert!(s.contains("shape=diamond"));
    }
}
