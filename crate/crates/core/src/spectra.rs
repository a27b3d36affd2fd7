//! Spectra and characteristic polynomials of represented adjacency matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::gain_graph::GainGraph;
use crate::group_algebra::ClassFunction;
use crate::representations::{represented_adjacency, Representation};
use crate::{CMatrix, C64};

/// Largest `‖M - M*‖_max` accepted as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-9;

/// Relative tolerance for comparing sorted spectra.
pub const SPECTRUM_TOL: f64 = 1e-7;

/// Coefficients this close to an integer render as that integer.
pub const INTEGER_TOL: f64 = 1e-6;

const MAX_SWEEPS: usize = 100;

/// A real spectrum, sorted ascending, with multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn from_sorted(values: Vec<f64>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] <= w[1]));
        Spectrum { values }
    }

    pub fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest absolute eigenvalue.
    pub fn radius(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).fold(0.0, f64::max)
    }

    /// Largest pairwise difference of the sorted values; `None` on a size
    /// mismatch.
    pub fn max_diff(&self, other: &Spectrum) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }

    /// Sorted values agree within `tol · max(1, radius)`.
    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        let scale = 1f64.max(self.radius()).max(other.radius());
        self.max_diff(other).is_some_and(|d| d <= tol * scale)
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|&x| format!("{:.10}", if x.abs() < 5e-11 { 0.0 } else { x })).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Monic characteristic polynomial, coefficients by descending power.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly {
    coeffs: Vec<f64>,
}

impl CharPoly {
    /// From coefficients by descending power, leading coefficient first.
    pub fn from_descending(coeffs: Vec<f64>) -> Self {
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients by descending power.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `x^power`.
    pub fn coeff(&self, power: usize) -> f64 {
        self.coeffs[self.degree() - power]
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, c| acc * x + c)
    }

    /// Coefficients rounded to integers, if all lie within [`INTEGER_TOL`].
    pub fn integer_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                let r = c.round();
                ((c - r).abs() <= INTEGER_TOL).then_some(r as i64)
            })
            .collect()
    }

    /// Largest coefficient difference; `None` when degrees differ.
    pub fn max_diff(&self, other: &CharPoly) -> Option<f64> {
        (self.coeffs.len() == other.coeffs.len()).then(|| {
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }

    /// Descending powers; near-integers are rounded, zero terms omitted.
    pub fn render(&self) -> String {
        let d = self.degree();
        let mut out = String::new();
        for (idx, &c) in self.coeffs.iter().enumerate() {
            let power = d - idx;
            let r = c.round();
            let (value, is_int) = if (c - r).abs() <= INTEGER_TOL { (r, true) } else { (c, false) };
            if value == 0.0 {
                continue;
            }
            let neg = value < 0.0;
            let mag = value.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag_str = if is_int { format!("{}", mag as i64) } else { format!("{mag}") };
            let var = match power {
                0 => String::new(),
                1 => "x".to_string(),
                p => format!("x^{p}"),
            };
            if var.is_empty() {
                out.push_str(&mag_str);
            } else if is_int && mag == 1.0 {
                out.push_str(&var);
            } else {
                out.push_str(&mag_str);
                out.push_str(&var);
            }
        }
        if out.is_empty() {
            "0".to_string()
        } else {
            out
        }
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `‖M - M*‖_max`.
pub fn hermitian_deviation(m: &CMatrix) -> f64 {
    crate::max_abs_diff(m, &m.adjoint())
}

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
/// iterated until the off-diagonal Frobenius norm is below `1e-12 ‖M‖_F`.
pub fn hermitian_eigs(m: &CMatrix) -> Result<Spectrum> {
    if !m.is_square() {
        return Err(Error::Shape(format!("{}x{} matrix has no spectrum", m.nrows(), m.ncols())));
    }
    let dev = hermitian_deviation(m);
    if dev > HERMITIAN_TOL {
        return Err(Error::NotHermitian(dev));
    }
    let n = m.nrows();
    let mut a = (m + m.adjoint()) * C64::new(0.5, 0.0);
    let total = a.norm();
    let target = 1e-12 * total;
    let off = |a: &CMatrix| {
        let mut s = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    s += a[(p, q)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off(&a) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Numerical(format!(
                "Jacobi iteration did not converge in {MAX_SWEEPS} sweeps"
            )));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }
    Ok(Spectrum::from_unsorted((0..n).map(|i| a[(i, i)].re).collect()))
}

/// One Jacobi rotation annihilating `a[(p,q)]`.
fn rotate(a: &mut CMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let theta = (aqq - app) / (2.0 * mag);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    // U = D·P with D = diag(1, conj(phase)) on (p, q) and P the real rotation
    let upp = C64::new(c, 0.0);
    let upq = C64::new(s, 0.0);
    let uqp = -phase.conj() * s;
    let uqq = phase.conj() * c;
    let n = a.nrows();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * upp + akq * uqp;
        a[(k, q)] = akp * upq + akq * uqq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = upp.conj() * apk + uqp.conj() * aqk;
        a[(q, k)] = upq.conj() * apk + uqq.conj() * aqk;
    }
    a[(p, q)] = C64::default();
    a[(q, p)] = C64::default();
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
}

/// Characteristic polynomial `det(xI - M)` by Faddeev–LeVerrier.
///
/// Fails when a coefficient keeps an imaginary part above
/// `1e-6 · max(1, |c|)`, or when the Cayley–Hamilton residual
/// `‖A·M_n + c_0 I‖` exceeds `1e-6 · max(1, |c_0|)`: the recurrence runs in
/// doubles and loses precision on large matrices with repeated eigenvalues.
pub fn char_poly(m: &CMatrix) -> Result<CharPoly> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "{}x{} matrix has no characteristic polynomial",
            m.nrows(),
            m.ncols()
        )));
    }
    let n = m.nrows();
    let id = CMatrix::identity(n, n);
    let mut coeffs = vec![C64::new(1.0, 0.0)];
    let mut am = CMatrix::zeros(n, n);
    for k in 1..=n {
        am = m * (am + &id * *coeffs.last().expect("nonempty"));
        coeffs.push(-am.trace() / k as f64);
    }
    let last = *coeffs.last().expect("nonempty");
    let residual = (am + &id * last).iter().map(|z| z.norm()).fold(0.0, f64::max);
    if residual > INTEGER_TOL * 1f64.max(last.norm()) {
        return Err(Error::Numerical(format!(
            "characteristic polynomial lost precision (Cayley-Hamilton residual {residual:e})"
        )));
    }
    let mut real = Vec::with_capacity(n + 1);
    for (idx, c) in coeffs.iter().enumerate() {
        if c.im.abs() > INTEGER_TOL * 1f64.max(c.norm()) {
            return Err(Error::Numerical(format!(
                "coefficient of x^{} has imaginary part {:e}",
                n - idx,
                c.im
            )));
        }
        real.push(c.re);
    }
    Ok(CharPoly::from_descending(real))
}

/// `π`-cospectrality: sorted spectra of the represented adjacency matrices
/// agree within `1e-7 · max(1, ‖A‖)`.
pub fn pi_cospectral(g1: &GainGraph, g2: &GainGraph, rep: &Representation) -> Result<bool> {
    if g1.group() != g2.group() {
        return Err(Error::GroupMismatch(g1.group(), g2.group()));
    }
    let s1 = pi_spectrum(g1, rep)?;
    let s2 = pi_spectrum(g2, rep)?;
    Ok(s1.approx_eq(&s2, SPECTRUM_TOL))
}

/// Spectrum of the represented adjacency matrix.
pub fn pi_spectrum(g: &GainGraph, rep: &Representation) -> Result<Spectrum> {
    hermitian_eigs(&represented_adjacency(g, rep)?)
}

/// How [`g_cospectral`] decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GMode {
    /// Cospectrality under the left regular representation and under every
    /// irreducible of the group's complete system. The regular spectrum is
    /// only the union of the irreducible spectra, so on its own it can match
    /// for pairs that are not `G`-cospectral. Groups without a hand-coded
    /// complete system fall back to the full trace comparison.
    Regular,
    /// Agreement of `μ(Tr(A^h))` for `h = 1..=H`; `None` means
    /// `H = |V| · |G|`.
    Traces(Option<usize>),
}

/// `G`-cospectrality over a finite group.
pub fn g_cospectral(g1: &GainGraph, g2: &GainGraph, mode: GMode) -> Result<bool> {
    if g1.group() != g2.group() {
        return Err(Error::GroupMismatch(g1.group(), g2.group()));
    }
    let order = g1.group().require_finite()?;
    match mode {
        GMode::Regular => {
            if !pi_cospectral(g1, g2, &Representation::regular(g1.group())?)? {
                return Ok(false);
            }
            match Representation::complete_system(g1.group()) {
                Ok(system) => {
                    for rep in &system {
                        if !pi_cospectral(g1, g2, rep)? {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                }
                Err(Error::Unsupported(_)) => g_cospectral(g1, g2, GMode::Traces(None)),
                Err(e) => Err(e),
            }
        }
        GMode::Traces(h) => {
            if g1.order() != g2.order() {
                return Ok(false);
            }
            let hmax = h.unwrap_or(g1.order().max(1) * order);
            let t1 = trace_profile(g1, hmax)?;
            let t2 = trace_profile(g2, hmax)?;
            Ok(t1.iter().zip(&t2).all(|(a, b)| class_functions_agree(a, b)))
        }
    }
}

/// `μ(Tr(A^h))` for `h = 1..=hmax`.
pub fn trace_profile(g: &GainGraph, hmax: usize) -> Result<Vec<ClassFunction>> {
    let a = g.adjacency()?;
    let mut power = a.clone();
    let mut out = Vec::with_capacity(hmax);
    for h in 1..=hmax {
        if h > 1 {
            power = power.mul(&a)?;
        }
        out.push(power.trace()?.mu()?);
    }
    Ok(out)
}

/// Class values agree up to a relative `1e-9` (walk counts grow
/// geometrically and leave exact double range for long walks).
fn class_functions_agree(a: &ClassFunction, b: &ClassFunction) -> bool {
    let scale = 1f64.max(a.max_abs()).max(b.max_abs());
    a.max_diff(b) <= 1e-9 * scale
}
