//! Fourier coefficients of functions on [0,1], Gram matrices, and the
//! truncated determinantal coefficient-sum identity with convergence
//! reporting.
//!
//! Functions come either as analytic presets with closed-form coefficients
//! (complex exponentials, t, t^2, finite trigonometric polynomials) or as
//! uniform samples transformed with a radix-2 FFT. The preset families also
//! carry exact pairwise integrals, so identity error can be separated from
//! quadrature error.

use crate::combinatorics::SubsetFamily;
use crate::error::{Error, Result};
use crate::exterior::square_det;
use crate::matrix::Matrix;
use crate::reduce::{reduce_terms, Reduction};
use crate::report::{Deviation, IdentityReport};
use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Clone, Debug)]
enum Kind {
    /// e_m(t) = exp(i 2 pi m t)
    Basis { m: i64 },
    /// t or t^2
    PolyT { degree: u8 },
    /// finite combination sum_k c_k e_k
    Trig { coeffs: Vec<(i64, Complex64)> },
    /// uniform samples at t_j = j/T, with the precomputed forward DFT
    Sampled {
        samples: Vec<Complex64>,
        spectrum: Vec<Complex64>,
    },
}

/// A complex-valued function on the unit interval.
#[derive(Clone, Debug)]
pub struct FunctionOnUnitInterval {
    kind: Kind,
    label: String,
}

impl FunctionOnUnitInterval {
    pub fn basis(m: i64) -> Self {
        FunctionOnUnitInterval {
            kind: Kind::Basis { m },
            label: format!("e_{m}"),
        }
    }

    pub fn poly_t(degree: u8) -> Result<Self> {
        if degree != 1 && degree != 2 {
            return Err(Error::Parse(format!(
                "poly_t degree must be 1 or 2, got {degree}"
            )));
        }
        Ok(FunctionOnUnitInterval {
            kind: Kind::PolyT { degree },
            label: if degree == 1 { "t".into() } else { "t^2".into() },
        })
    }

    pub fn trig(mut coeffs: Vec<(i64, Complex64)>) -> Self {
        coeffs.sort_by_key(|&(k, _)| k);
        coeffs.dedup_by(|a, b| {
            if a.0 == b.0 {
                b.1 += a.1;
                true
            } else {
                false
            }
        });
        coeffs.retain(|&(_, c)| c != C_ZERO);
        FunctionOnUnitInterval {
            kind: Kind::Trig { coeffs },
            label: "trig".into(),
        }
    }

    pub fn zero() -> Self {
        Self::trig(Vec::new())
    }

    /// Uniform samples at t_j = j/T; T must be a power of two, at least 2.
    /// The forward transform is taken once up front.
    pub fn sampled(samples: Vec<Complex64>) -> Result<Self> {
        let t = samples.len();
        if t < 2 || !t.is_power_of_two() {
            return Err(Error::BadSampleCount(t));
        }
        let mut spectrum = samples.clone();
        FftPlanner::new()
            .plan_fft_forward(t)
            .process(&mut spectrum);
        Ok(FunctionOnUnitInterval {
            kind: Kind::Sampled { samples, spectrum },
            label: format!("sampled[{t}]"),
        })
    }

    /// Sample an analytic function on a power-of-two grid.
    pub fn sampled_from(f: impl Fn(f64) -> Complex64, t: usize) -> Result<Self> {
        Self::sampled((0..t).map(|j| f(j as f64 / t as f64)).collect())
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn is_sampled(&self) -> bool {
        matches!(self.kind, Kind::Sampled { .. })
    }

    pub fn sample_count(&self) -> Option<usize> {
        match &self.kind {
            Kind::Sampled { samples, .. } => Some(samples.len()),
            _ => None,
        }
    }

    /// Largest |k| carrying a nonzero coefficient, when finite.
    pub fn finite_support_radius(&self) -> Option<i64> {
        match &self.kind {
            Kind::Basis { m } => Some(m.abs()),
            Kind::Trig { coeffs } => {
                Some(coeffs.iter().map(|&(k, _)| k.abs()).max().unwrap_or(0))
            }
            _ => None,
        }
    }

    /// The k-th Fourier coefficient: the integral of the function against
    /// exp(-i 2 pi k t). Closed form for analytic kinds; DFT bin over T for
    /// sampled kinds, valid only in the alias-safe range |k| <= T/2 - 1.
    pub fn fourier_coeff(&self, k: i64) -> Result<Complex64> {
        match &self.kind {
            Kind::Basis { m } => Ok(if k == *m { C_ONE } else { C_ZERO }),
            Kind::PolyT { degree: 1 } => Ok(if k == 0 {
                Complex64::new(0.5, 0.0)
            } else {
                Complex64::new(0.0, 1.0 / (2.0 * PI * k as f64))
            }),
            Kind::PolyT { .. } => Ok(if k == 0 {
                Complex64::new(1.0 / 3.0, 0.0)
            } else {
                let kf = k as f64;
                Complex64::new(1.0 / (2.0 * PI * PI * kf * kf), 1.0 / (2.0 * PI * kf))
            }),
            Kind::Trig { coeffs } => Ok(coeffs
                .iter()
                .find(|&&(kk, _)| kk == k)
                .map_or(C_ZERO, |&(_, c)| c)),
            Kind::Sampled { spectrum, .. } => {
                let t = spectrum.len();
                let max = t as i64 / 2 - 1;
                if k.abs() > max {
                    return Err(Error::AliasingRange {
                        k,
                        max,
                        samples: t,
                    });
                }
                let bin = k.rem_euclid(t as i64) as usize;
                Ok(spectrum[bin] / t as f64)
            }
        }
    }

    /// Pointwise value; analytic kinds only.
    fn eval_analytic(&self, t: f64) -> Complex64 {
        match &self.kind {
            Kind::Basis { m } => Complex64::from_polar(1.0, 2.0 * PI * *m as f64 * t),
            Kind::PolyT { degree: 1 } => Complex64::new(t, 0.0),
            Kind::PolyT { .. } => Complex64::new(t * t, 0.0),
            Kind::Trig { coeffs } => coeffs
                .iter()
                .map(|&(k, c)| c * Complex64::from_polar(1.0, 2.0 * PI * k as f64 * t))
                .sum(),
            Kind::Sampled { .. } => unreachable!("sampled kinds read their grid directly"),
        }
    }

    fn value_on_grid(&self, j: usize, t: usize) -> Complex64 {
        match &self.kind {
            Kind::Sampled { samples, .. } => samples[j],
            _ => self.eval_analytic(j as f64 / t as f64),
        }
    }
}

/// Exact integral of conj(a) * b over [0,1] when both sides have closed
/// forms; `None` when quadrature is needed.
pub fn exact_inner(a: &FunctionOnUnitInterval, b: &FunctionOnUnitInterval) -> Option<Complex64> {
    fn finite_coeffs(f: &FunctionOnUnitInterval) -> Option<Vec<(i64, Complex64)>> {
        match &f.kind {
            Kind::Basis { m } => Some(vec![(*m, C_ONE)]),
            Kind::Trig { coeffs } => Some(coeffs.clone()),
            _ => None,
        }
    }
    if let Some(coeffs) = finite_coeffs(a) {
        // integral = sum_k conj(a_k) * b^(k); exact for every analytic b
        if b.is_sampled() {
            return None;
        }
        return Some(
            coeffs
                .iter()
                .map(|&(k, c)| c.conj() * b.fourier_coeff(k).expect("analytic coefficients"))
                .sum(),
        );
    }
    if finite_coeffs(b).is_some() && !a.is_sampled() {
        return exact_inner(b, a).map(|v| v.conj());
    }
    match (&a.kind, &b.kind) {
        (Kind::PolyT { degree: p }, Kind::PolyT { degree: q }) => {
            // integral of t^(p+q)
            Some(Complex64::new(1.0 / (*p as f64 + *q as f64 + 1.0), 0.0))
        }
        _ => None,
    }
}

/// Inner product, exact when possible, otherwise by the uniform-grid rule
/// with `fallback_samples` points (or the functions' own grids).
pub fn inner_product(
    a: &FunctionOnUnitInterval,
    b: &FunctionOnUnitInterval,
    fallback_samples: usize,
) -> Result<Complex64> {
    if let Some(v) = exact_inner(a, b) {
        return Ok(v);
    }
    let t = match (a.sample_count(), b.sample_count()) {
        (Some(x), Some(y)) if x != y => return Err(Error::SampleCountMismatch(x, y)),
        (Some(x), _) | (_, Some(x)) => x,
        (None, None) => fallback_samples,
    };
    if t < 2 || !t.is_power_of_two() {
        return Err(Error::BadSampleCount(t));
    }
    let mut acc = C_ZERO;
    for j in 0..t {
        acc += a.value_on_grid(j, t).conj() * b.value_on_grid(j, t);
    }
    Ok(acc / t as f64)
}

/// Symmetric truncation of the integer frequencies to {-M, ..., M}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationWindow {
    pub m: i64,
}

impl TruncationWindow {
    pub fn new(m: i64) -> Self {
        TruncationWindow { m }
    }

    pub fn size(&self) -> usize {
        (2 * self.m + 1).max(0) as usize
    }

    pub fn frequencies(&self) -> impl Iterator<Item = i64> + '_ {
        -self.m..=self.m
    }
}

/// Two families of n functions, a truncation window, and a quadrature grid
/// size for non-preset inner products.
#[derive(Clone, Debug)]
pub struct ParsevalInstance {
    a: Vec<FunctionOnUnitInterval>,
    b: Vec<FunctionOnUnitInterval>,
    n: usize,
    window: TruncationWindow,
    samples: usize,
}

impl ParsevalInstance {
    pub fn new(
        a: Vec<FunctionOnUnitInterval>,
        b: Vec<FunctionOnUnitInterval>,
        window: TruncationWindow,
        samples: usize,
    ) -> Result<Self> {
        let n = a.len();
        if n == 0 || b.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "need equally many a and b functions, at least one; got {} and {}",
                n,
                b.len()
            )));
        }
        if window.size() < n {
            return Err(Error::WindowTooSmall {
                window: window.size(),
                n,
            });
        }
        Ok(ParsevalInstance {
            a,
            b,
            n,
            window,
            samples,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> TruncationWindow {
        self.window
    }

    pub fn a(&self) -> &[FunctionOnUnitInterval] {
        &self.a
    }

    pub fn b(&self) -> &[FunctionOnUnitInterval] {
        &self.b
    }

    pub fn with_window(&self, window: TruncationWindow) -> Result<Self> {
        Self::new(self.a.clone(), self.b.clone(), window, self.samples)
    }

    /// Swap the two families; conjugates both sides of the identity.
    pub fn swapped(&self) -> Self {
        ParsevalInstance {
            a: self.b.clone(),
            b: self.a.clone(),
            n: self.n,
            window: self.window,
            samples: self.samples,
        }
    }

    /// Entry (j, k) is the inner product of b_k against a_j: the integral of
    /// conj(a_j) b_k.
    pub fn gram_matrix(&self) -> Result<Matrix<Complex64>> {
        let mut g = Matrix::zeros(self.n, self.n);
        for j in 0..self.n {
            for k in 0..self.n {
                g.set(j, k, inner_product(&self.a[j], &self.b[k], self.samples)?);
            }
        }
        Ok(g)
    }

    pub fn gram_det(&self) -> Result<Complex64> {
        Ok(square_det(&self.gram_matrix()?))
    }

    fn coeff_table(&self, f: &FunctionOnUnitInterval) -> Result<Vec<Complex64>> {
        self.window.frequencies().map(|k| f.fourier_coeff(k)).collect()
    }

    /// One determinant-product term for the ordered frequencies `freqs`
    /// (window offsets into the coefficient tables).
    fn term(
        &self,
        a_coeffs: &[Vec<Complex64>],
        b_coeffs: &[Vec<Complex64>],
        offsets: &[usize],
    ) -> Complex64 {
        let n = self.n;
        let mut am = Matrix::zeros(n, n);
        let mut bm = Matrix::zeros(n, n);
        for j in 0..n {
            for (k, &off) in offsets.iter().enumerate() {
                am.set(j, k, a_coeffs[j][off].conj());
                bm.set(j, k, b_coeffs[j][off]);
            }
        }
        square_det(&am) * square_det(&bm)
    }

    /// Sum over strictly increasing frequency tuples in the window of
    /// det[conj(a-hat)] times det[b-hat].
    pub fn truncated_sum(&self) -> Result<Complex64> {
        self.truncated_sum_with(Reduction::Sequential)
    }

    pub fn truncated_sum_with(&self, mode: Reduction) -> Result<Complex64> {
        let a_coeffs: Vec<_> = self
            .a
            .iter()
            .map(|f| self.coeff_table(f))
            .collect::<Result<_>>()?;
        let b_coeffs: Vec<_> = self
            .b
            .iter()
            .map(|f| self.coeff_table(f))
            .collect::<Result<_>>()?;
        let terms: Vec<Complex64> = SubsetFamily::new(self.window.size(), self.n)
            .iter()
            .map(|sigma| self.term(&a_coeffs, &b_coeffs, sigma.indices()))
            .collect();
        Ok(reduce_terms(terms, mode))
    }

    /// Brute-force unordered form: 1/n! times the sum over all frequency
    /// tuples (with repeats) of the same determinant product. Compared against
    /// the ordered sum to 1e-12 absolute. Guarded to small instances.
    pub fn unordered_sum_check(&self) -> Result<IdentityReport> {
        if self.n > 3 || self.window.m > 8 {
            return Err(Error::InstanceTooLarge {
                n: self.n,
                m: self.window.m,
            });
        }
        let a_coeffs: Vec<_> = self
            .a
            .iter()
            .map(|f| self.coeff_table(f))
            .collect::<Result<_>>()?;
        let b_coeffs: Vec<_> = self
            .b
            .iter()
            .map(|f| self.coeff_table(f))
            .collect::<Result<_>>()?;
        let width = self.window.size();
        let mut offsets = vec![0usize; self.n];
        let mut acc = C_ZERO;
        loop {
            acc += self.term(&a_coeffs, &b_coeffs, &offsets);
            let mut pos = self.n;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                offsets[pos] += 1;
                if offsets[pos] < width {
                    break;
                }
                offsets[pos] = 0;
            }
            if offsets.iter().all(|&o| o == 0) {
                break;
            }
        }
        let factorial: f64 = (1..=self.n).map(|i| i as f64).product();
        let unordered = acc / factorial;
        let ordered = self.truncated_sum()?;
        let err = (unordered - ordered).norm();
        let tol = 1e-12;
        Ok(IdentityReport::new::<Complex64>(
            "unordered_vs_ordered",
            format!("n {}, M {}", self.n, self.window.m),
            None,
            Some(tol),
            Deviation {
                value: err,
                display: format!("{err:e}"),
                passed: err <= tol,
            },
        ))
    }

    /// Analytic tail bound on the truncation error at window M, when one is
    /// known for this family of inputs.
    pub fn tail_bound(&self, m: i64) -> Option<f64> {
        if let Some(radius) = self
            .a
            .iter()
            .chain(&self.b)
            .map(FunctionOnUnitInterval::finite_support_radius)
            .collect::<Option<Vec<_>>>()
            .map(|r| r.into_iter().max().unwrap_or(0))
        {
            return if m >= radius { Some(0.0) } else { None };
        }
        // order-1 t against t: dropped terms are 1/(4 pi^2 k^2) for |k| > M
        if self.n == 1
            && matches!(self.a[0].kind, Kind::PolyT { degree: 1 })
            && matches!(self.b[0].kind, Kind::PolyT { degree: 1 })
            && m > 0
        {
            return Some(1.0 / (2.0 * PI * PI * m as f64));
        }
        None
    }
}

/// Truncated sums along an increasing window schedule, with per-window error
/// against the Gram determinant.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub schedule: Vec<i64>,
    pub gram_det: [f64; 2],
    pub truncated_sums: Vec<[f64; 2]>,
    pub abs_errors: Vec<f64>,
    pub tail_bounds: Vec<Option<f64>>,
}

impl ConvergenceReport {
    pub fn final_error(&self) -> f64 {
        *self.abs_errors.last().expect("non-empty schedule")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("M,re_sum,im_sum,abs_error,tail_bound\n");
        for (i, &m) in self.schedule.iter().enumerate() {
            let [re, im] = self.truncated_sums[i];
            let tail = self.tail_bounds[i]
                .map(|b| format!("{b:e}"))
                .unwrap_or_default();
            out.push_str(&format!(
                "{m},{re:e},{im:e},{:e},{tail}\n",
                self.abs_errors[i]
            ));
        }
        out
    }
}

pub fn convergence_study(
    template: &ParsevalInstance,
    schedule: &[i64],
) -> Result<ConvergenceReport> {
    let gram = square_det(&template.gram_matrix()?);
    let mut sums = Vec::with_capacity(schedule.len());
    let mut errors = Vec::with_capacity(schedule.len());
    let mut tails = Vec::with_capacity(schedule.len());
    for &m in schedule {
        let inst = template.with_window(TruncationWindow::new(m))?;
        let sum = inst.truncated_sum()?;
        sums.push([sum.re, sum.im]);
        errors.push((gram - sum).norm());
        tails.push(template.tail_bound(m));
    }
    Ok(ConvergenceReport {
        schedule: schedule.to_vec(),
        gram_det: [gram.re, gram.im],
        truncated_sums: sums,
        abs_errors: errors,
        tail_bounds: tails,
    })
}
