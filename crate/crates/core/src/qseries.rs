//! Truncated q-series: theta series of binary quadratic forms, eta
//! products, Laurent quotients and numerical evaluation on the upper half
//! plane.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{qi, rational_to_f64, Field, Rational, Ring};

#[derive(Debug, Error, PartialEq)]
pub enum QSeriesError {
    #[error("form {0}x^2 + {1}xy + {2}y^2 is not positive definite")]
    NotDefinite(i64, i64, i64),
    #[error("|q| = {0} >= 1: the series does not converge")]
    DivergentTail(f64),
    #[error("Im(tau) must be positive")]
    NotInUpperHalfPlane,
    #[error("eta product has non-integral leading exponent {0}/24")]
    FractionalExponent(i64),
    #[error("division by the zero series")]
    ZeroDivisor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BinaryQF {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl BinaryQF {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self, QSeriesError> {
        if a <= 0 || 4 * a * c - b * b <= 0 {
            return Err(QSeriesError::NotDefinite(a, b, c));
        }
        Ok(BinaryQF { a, b, c })
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.a * x * x + self.b * x * y + self.c * y * y
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }
}

/// `Σ c_k q^{val+k} + O(q^prec)`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntSeries {
    pub val: i64,
    pub coeffs: Vec<Rational>,
    /// Absolute precision: terms from `q^prec` on are unknown.
    pub prec: i64,
}

impl IntSeries {
    pub fn new(val: i64, coeffs: Vec<Rational>, prec: i64) -> Self {
        let mut s = IntSeries { val, coeffs, prec };
        s.normalize();
        s
    }

    pub fn from_ints(val: i64, coeffs: &[i64], prec: i64) -> Self {
        IntSeries::new(val, coeffs.iter().map(|c| qi(*c)).collect(), prec)
    }

    pub fn one(prec: i64) -> Self {
        IntSeries::from_ints(0, &[1], prec)
    }

    fn normalize(&mut self) {
        let keep = (self.prec - self.val).max(0) as usize;
        self.coeffs.truncate(keep);
        let lead = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.coeffs.len());
        self.coeffs.drain(..lead);
        self.val += lead as i64;
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.val = self.prec;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^n` (zero below the valuation; panics past precision).
    pub fn coeff(&self, n: i64) -> Rational {
        assert!(n < self.prec, "q^{n} is beyond the precision O(q^{})", self.prec);
        if n < self.val {
            return qi(0);
        }
        self.coeffs.get((n - self.val) as usize).cloned().unwrap_or_else(|| qi(0))
    }

    pub fn leading_exponent(&self) -> i64 {
        self.val
    }

    pub fn add(&self, o: &IntSeries) -> IntSeries {
        let prec = self.prec.min(o.prec);
        let lo = self.val.min(o.val);
        let coeffs = (lo..prec).map(|n| self.coeff(n) + o.coeff(n)).collect();
        IntSeries::new(lo, coeffs, prec)
    }

    pub fn scale(&self, c: &Rational) -> IntSeries {
        IntSeries::new(self.val, self.coeffs.iter().map(|x| x * c).collect(), self.prec)
    }

    pub fn sub(&self, o: &IntSeries) -> IntSeries {
        self.add(&o.scale(&qi(-1)))
    }

    pub fn mul(&self, o: &IntSeries) -> IntSeries {
        if self.is_zero() || o.is_zero() {
            return IntSeries::new(0, vec![], (self.prec + o.val.min(0)).min(o.prec + self.val.min(0)));
        }
        let prec = (self.prec + o.val).min(o.prec + self.val);
        let val = self.val + o.val;
        let len = (prec - val).max(0) as usize;
        let mut c = vec![qi(0); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                c[i + j] += a * b;
            }
        }
        IntSeries::new(val, c, prec)
    }

    pub fn pow(&self, k: u32) -> IntSeries {
        let mut r = IntSeries::one(self.prec - self.val);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Multiplicative inverse (Laurent if the valuation is positive).
    pub fn inverse(&self) -> Result<IntSeries, QSeriesError> {
        if self.is_zero() {
            return Err(QSeriesError::ZeroDivisor);
        }
        let rel = (self.prec - self.val) as usize;
        let inv0 = self.coeffs[0].inverse().unwrap();
        let mut b = vec![qi(0); rel];
        b[0] = inv0.clone();
        for n in 1..rel {
            let mut s = qi(0);
            for k in 1..=n.min(self.coeffs.len() - 1) {
                s += &self.coeffs[k] * &b[n - k];
            }
            b[n] = -(s * &inv0);
        }
        Ok(IntSeries::new(-self.val, b, rel as i64 - self.val))
    }

    /// `n·c_n` termwise (`q d/dq`).
    pub fn q_derivative(&self) -> IntSeries {
        let c = self.coeffs.iter().enumerate().map(|(k, c)| c * qi(self.val + k as i64)).collect();
        IntSeries::new(self.val, c, self.prec)
    }

    pub fn int_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| if c.is_integer() { i64::try_from(c.to_integer()).ok() } else { None }).collect()
    }
}

pub fn laurent_quotient(num: &IntSeries, den: &IntSeries) -> Result<IntSeries, QSeriesError> {
    Ok(num.mul(&den.inverse()?))
}

/// `θ_Q(q) = Σ r_Q(n) qⁿ` for `n ≤ N`.
pub fn theta_qf(form: &BinaryQF, n_max: i64) -> IntSeries {
    let d = (4 * form.a * form.c - form.b * form.b) as f64;
    let ybound = ((4 * form.a) as f64 * n_max as f64 / d).sqrt().floor() as i64 + 1;
    let xbound = ((4 * form.c) as f64 * n_max as f64 / d).sqrt().floor() as i64 + 1;
    let mut r = vec![0i64; n_max as usize + 1];
    for x in -xbound..=xbound {
        for y in -ybound..=ybound {
            let v = form.eval(x, y);
            if v <= n_max {
                r[v as usize] += 1;
            }
        }
    }
    IntSeries::from_ints(0, &r, n_max + 1)
}

/// `Π_m η(mτ)^{e_m}` as a q-series to `O(q^{N+1})`.
pub fn eta_product(factors: &[(i64, i64)], n_max: i64) -> Result<IntSeries, QSeriesError> {
    let weight24: i64 = factors.iter().map(|(m, e)| m * e).sum();
    if weight24 % 24 != 0 {
        return Err(QSeriesError::FractionalExponent(weight24));
    }
    let lead = weight24 / 24;
    let rel = n_max + 1 - lead;
    let mut prod = IntSeries::one(rel);
    for (m, e) in factors {
        // Π_n (1 − q^{mn}) to relative precision rel
        let mut f = IntSeries::one(rel);
        let mut n = 1;
        while m * n < rel {
            let mut c = vec![qi(0); (m * n) as usize + 1];
            c[0] = qi(1);
            c[(m * n) as usize] = qi(-1);
            f = f.mul(&IntSeries::new(0, c, rel));
            n += 1;
        }
        let g = if *e >= 0 { f.pow(*e as u32) } else { f.inverse()?.pow((-e) as u32) };
        prod = prod.mul(&g);
    }
    let coeffs = prod.coeffs.clone();
    Ok(IntSeries::new(lead, coeffs, n_max + 1))
}

/// `h(q) = q Π (1 − qⁿ)² (1 − q^{11n})²`.
pub fn h_series(n_max: i64) -> IntSeries {
    eta_product(&[(1, 2), (11, 2)], n_max).unwrap()
}

/// The form `x² + xy + 3y²`.
pub fn level11_form() -> BinaryQF {
    BinaryQF::new(1, 1, 3).unwrap()
}

/// `F = θ² / h`.
pub fn f_series(n_max: i64) -> IntSeries {
    let th = theta_qf(&level11_form(), n_max);
    laurent_quotient(&th.pow(2), &h_series(n_max + 1)).unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Evaluation {
    pub re: f64,
    pub im: f64,
    pub abs: f64,
    /// Heuristic tail bound `Σ_{n>N} (R|q|)ⁿ` with `R` from the computed
    /// coefficients.
    pub tail: f64,
    pub terms: i64,
}

impl Evaluation {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

pub fn q_of_tau(tau: Complex64) -> Complex64 {
    (Complex64::new(0.0, 2.0 * PI) * tau).exp()
}

/// `Σ c_n qⁿ` at `q = e^{2πiτ}` using the known coefficients.
pub fn eval_upper_half(s: &IntSeries, tau: Complex64) -> Result<Evaluation, QSeriesError> {
    if tau.im <= 0.0 {
        return Err(QSeriesError::NotInUpperHalfPlane);
    }
    let q = q_of_tau(tau);
    let aq = q.norm();
    if aq >= 1.0 {
        return Err(QSeriesError::DivergentTail(aq));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for (k, c) in s.coeffs.iter().enumerate() {
        let n = s.val + k as i64;
        sum += q.powi(n as i32) * rational_to_f64(c);
    }
    let top = s.prec - 1;
    let mut r: f64 = 0.0;
    for n in (top / 2).max(1)..=top {
        let c = rational_to_f64(&s.coeff(n)).abs();
        if c > 0.0 {
            r = r.max(c.powf(1.0 / n as f64));
        }
    }
    let rq = r.max(1.0) * aq;
    let tail = if rq < 1.0 { rq.powi(top as i32 + 1) / (1.0 - rq) } else { f64::INFINITY };
    Ok(Evaluation { re: sum.re, im: sum.im, abs: sum.norm(), tail, terms: s.prec - s.val })
}

/// `w(τ) = −1/(11τ)`.
pub fn atkin_lehner(tau: Complex64) -> Complex64 {
    -Complex64::new(1.0, 0.0) / (tau * 11.0)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AtkinLehnerReport {
    pub samples: Vec<(f64, f64)>,
    pub deviations: Vec<f64>,
    pub max_deviation: f64,
}

/// Max over samples of `|f(w(τ)) − f(τ)|`.
pub fn atkin_lehner_check(s: &IntSeries, samples: &[Complex64]) -> Result<AtkinLehnerReport, QSeriesError> {
    let mut deviations = Vec::new();
    for tau in samples {
        let a = eval_upper_half(s, *tau)?.value();
        let b = eval_upper_half(s, atkin_lehner(*tau))?.value();
        deviations.push((a - b).norm());
    }
    let max_deviation = deviations.iter().cloned().fold(0.0, f64::max);
    Ok(AtkinLehnerReport { samples: samples.iter().map(|t| (t.re, t.im)).collect(), deviations, max_deviation })
}

/// `τ = i·s` for `s ∈ {0.4, 0.5, 0.7, 1.0}`.
pub fn default_samples() -> Vec<Complex64> {
    [0.4, 0.5, 0.7, 1.0].iter().map(|s| Complex64::new(0.0, *s)).collect()
}

/// Fixed point `i/√11` of `w`.
pub fn fricke_fixed_point() -> Complex64 {
    Complex64::new(0.0, 1.0 / 11f64.sqrt())
}

/// Fixed point `(1 + i/√11)/2` of `τ ↦ (11τ − 6)/(22τ − 11)`.
pub fn shifted_fixed_point() -> Complex64 {
    Complex64::new(0.5, 0.5 / 11f64.sqrt())
}

/// Newton iteration for a zero of the series near `tau0`.
pub fn newton_zero(s: &IntSeries, tau0: Complex64, steps: usize) -> Result<Complex64, QSeriesError> {
    let ds = s.q_derivative();
    let mut tau = tau0;
    for _ in 0..steps {
        let f = eval_upper_half(s, tau)?.value();
        // d/dτ = 2πi · q d/dq
        let df = eval_upper_half(&ds, tau)?.value() * Complex64::new(0.0, 2.0 * PI);
        if df.norm() == 0.0 {
            break;
        }
        tau -= f / df;
    }
    Ok(tau)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThetaZeroReport {
    pub at_fricke_point: f64,
    pub at_shifted_point: f64,
    pub newton_zero: (f64, f64),
    pub newton_residual: f64,
}

pub fn theta_zero_report(n_max: i64) -> Result<ThetaZeroReport, QSeriesError> {
    let th = theta_qf(&level11_form(), n_max);
    let z = newton_zero(&th, shifted_fixed_point() + Complex64::new(0.01, 0.01), 30)?;
    Ok(ThetaZeroReport {
        at_fricke_point: eval_upper_half(&th, fricke_fixed_point())?.abs,
        at_shifted_point: eval_upper_half(&th, shifted_fixed_point())?.abs,
        newton_zero: (z.re, z.im),
        newton_residual: eval_upper_half(&th, z)?.abs,
    })
}
