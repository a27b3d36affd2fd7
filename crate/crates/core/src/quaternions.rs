//! Real quaternions, quaternionic matrices and the complex adjoint.
//!
//! A quaternion `q = a + bi + cj + dk` is split as `q = (a + bi) + (c + di)j`;
//! the complex adjoint of `A = A1 + A2 j` is the `2n x 2n` matrix
//! `[[A1, A2], [-conj(A2), conj(A1)]]`. Hermitian quaternionic matrices have
//! a real right spectrum, and the spectrum of the adjoint is that multiset
//! taken twice.

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gain_graph::{GainGraph, Partition};
use crate::groups::{Group, GroupElement};
use crate::spectra::{hermitian_eigs, Spectrum};
use crate::switching::{self, CellAction, CellPlan, Violation, ViolationValue};
use crate::{CMatrix, C64};

/// Tolerance for zero tests and equality of quaternionic sums.
pub const QUAT_TOL: f64 = 1e-9;

/// Pairing tolerance when halving the adjoint spectrum.
pub const PAIRING_TOL: f64 = 1e-7;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Quaternion {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn real(a: f64) -> Self {
        Quaternion::new(a, 0.0, 0.0, 0.0)
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.a, -self.b, -self.c, -self.d)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `conj(q) / |q|^2`.
    pub fn inv(&self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(Error::ZeroQuaternion(self.to_string()));
        }
        let c = self.conj();
        Ok(Quaternion::new(c.a / n2, c.b / n2, c.c / n2, c.d / n2))
    }

    /// Norm of the imaginary part.
    pub fn im_norm(&self) -> f64 {
        (self.b * self.b + self.c * self.c + self.d * self.d).sqrt()
    }

    /// The unique complex number with nonnegative imaginary part similar to `q`:
    /// `Re(q) + |Im(q)| i`.
    pub fn canonical_class(&self) -> C64 {
        C64::new(self.a, self.im_norm())
    }

    /// Componentwise max distance.
    pub fn dist(&self, other: &Quaternion) -> f64 {
        (self.a - other.a)
            .abs()
            .max((self.b - other.b).abs())
            .max((self.c - other.c).abs())
            .max((self.d - other.d).abs())
    }

    pub fn approx_eq(&self, other: &Quaternion, tol: f64) -> bool {
        self.dist(other) <= tol
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.dist(&Quaternion::ZERO) <= tol
    }

    /// Split as `z1 + z2 j` with `z1 = a + bi`, `z2 = c + di`.
    pub fn complex_parts(&self) -> (C64, C64) {
        (C64::new(self.a, self.b), C64::new(self.c, self.d))
    }

    pub fn from_complex_parts(z1: C64, z2: C64) -> Self {
        Quaternion::new(z1.re, z1.im, z2.re, z2.im)
    }

    /// The 2x2 complex block `[[z1, z2], [-conj(z2), conj(z1)]]`; on unit
    /// quaternions this is the degree-2 unitary representation.
    pub fn complex_block(&self) -> CMatrix {
        let (z1, z2) = self.complex_parts();
        CMatrix::from_row_slice(2, 2, &[z1, z2, -z2.conj(), z1.conj()])
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, o: Quaternion) {
        *self = *self + o;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        Quaternion::new(
            self.a * o.a - self.b * o.b - self.c * o.c - self.d * o.d,
            self.a * o.b + self.b * o.a + self.c * o.d - self.d * o.c,
            self.a * o.c - self.b * o.d + self.c * o.a + self.d * o.b,
            self.a * o.d + self.b * o.c - self.c * o.b + self.d * o.a,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }
}

impl fmt::Display for Quaternion {
    /// `[a,b,c,d]` with shortest round-trip float rendering.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?},{:?},{:?},{:?}]", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for Quaternion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let alias = match t {
            "1" => Some(Quaternion::ONE),
            "-1" => Some(-Quaternion::ONE),
            "i" => Some(Quaternion::I),
            "-i" => Some(-Quaternion::I),
            "j" => Some(Quaternion::J),
            "-j" => Some(-Quaternion::J),
            "k" => Some(Quaternion::K),
            "-k" => Some(-Quaternion::K),
            _ => None,
        };
        if let Some(q) = alias {
            return Ok(q);
        }
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("quaternion `{t}`: expected [a,b,c,d]")))?;
        let parts: Vec<f64> = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::Parse(format!("quaternion `{t}`: {e}")))
            })
            .collect::<Result<_>>()?;
        if parts.len() != 4 {
            return Err(Error::Parse(format!(
                "quaternion `{t}`: expected 4 components, got {}",
                parts.len()
            )));
        }
        Ok(Quaternion::new(parts[0], parts[1], parts[2], parts[3]))
    }
}

/// Square quaternionic matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct QuatMatrix {
    n: usize,
    data: Vec<Quaternion>,
}

impl QuatMatrix {
    pub fn zeros(n: usize) -> Self {
        QuatMatrix {
            n,
            data: vec![Quaternion::ZERO; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Quaternion::ONE;
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        let mut m = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |r, c| self[(c, r)].conj())
    }

    pub fn add(&self, other: &QuatMatrix) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::from_fn(self.n, |r, c| self[(r, c)] + other[(r, c)]))
    }

    pub fn mul(&self, other: &QuatMatrix) -> Result<Self> {
        self.check_same(other)?;
        let n = self.n;
        Ok(Self::from_fn(n, |r, c| {
            let mut acc = Quaternion::ZERO;
            for k in 0..n {
                acc += self[(r, k)] * other[(k, c)];
            }
            acc
        }))
    }

    fn check_same(&self, other: &QuatMatrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Shape(format!("{0}x{0} vs {1}x{1}", self.n, other.n)));
        }
        Ok(())
    }

    /// Max componentwise deviation from being Hermitian.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for r in 0..self.n {
            for c in 0..self.n {
                dev = dev.max(self[(r, c)].dist(&self[(c, r)].conj()));
            }
        }
        dev
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian_deviation() <= QUAT_TOL
    }

    pub fn max_dist(&self, other: &QuatMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| x.dist(y))
            .fold(0.0, f64::max)
    }

    /// Gauss-Jordan inverse with partial pivoting on the norm.
    ///
    /// Row operations multiply on the left, so the result `B` satisfies
    /// `B A = I`; for square matrices this is the two-sided inverse.
    pub fn try_inverse(&self) -> Option<QuatMatrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = QuatMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).max_by(|&x, &y| {
                a[(x, col)]
                    .norm()
                    .partial_cmp(&a[(y, col)].norm())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })?;
            if a[(pivot, col)].norm() < 1e-13 {
                return None;
            }
            a.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let p_inv = a[(col, col)].inv().ok()?;
            for c in 0..n {
                a[(col, c)] = p_inv * a[(col, c)];
                inv[(col, c)] = p_inv * inv[(col, c)];
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[(r, col)];
                if factor.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..n {
                    let (ac, ic) = (a[(col, c)], inv[(col, c)]);
                    a[(r, c)] = a[(r, c)] - factor * ac;
                    inv[(r, c)] = inv[(r, c)] - factor * ic;
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for c in 0..self.n {
            self.data.swap(r1 * self.n + c, r2 * self.n + c);
        }
    }

    /// The complex adjoint `f(A) = [[A1, A2], [-conj(A2), conj(A1)]]`.
    pub fn complex_adjoint(&self) -> CMatrix {
        let n = self.n;
        let mut f = CMatrix::zeros(2 * n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                let (z1, z2) = self[(r, c)].complex_parts();
                f[(r, c)] = z1;
                f[(r, n + c)] = z2;
                f[(n + r, c)] = -z2.conj();
                f[(n + r, n + c)] = z1.conj();
            }
        }
        f
    }

    /// Blockwise image: each entry replaced by its 2x2 complex block.
    pub fn pi_h_matrix(&self) -> CMatrix {
        let n = self.n;
        let mut m = CMatrix::zeros(2 * n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                let b = self[(r, c)].complex_block();
                m.view_mut((2 * r, 2 * c), (2, 2)).copy_from(&b);
            }
        }
        m
    }

    /// Checks `f(A) = R_τ π_H(A) C_τ` with the explicit shuffle permutation.
    pub fn shuffle_identity(&self) -> bool {
        let n = self.n;
        let c_tau = shuffle_matrix(n);
        let r_tau = c_tau.transpose();
        let lhs = self.complex_adjoint();
        let rhs = &r_tau * self.pi_h_matrix() * &c_tau;
        crate::max_abs_diff(&lhs, &rhs) <= 1e-12
    }

    /// Right spectrum of a Hermitian matrix: the adjoint spectrum halved.
    pub fn right_spectrum(&self) -> Result<Spectrum> {
        let dev = self.hermitian_deviation();
        if dev > QUAT_TOL {
            return Err(Error::NotHermitian(dev));
        }
        let doubled = hermitian_eigs(&self.complex_adjoint())?;
        halve_spectrum(&doubled)
    }
}

impl Index<(usize, usize)> for QuatMatrix {
    type Output = Quaternion;
    fn index(&self, (r, c): (usize, usize)) -> &Quaternion {
        &self.data[r * self.n + c]
    }
}

impl IndexMut<(usize, usize)> for QuatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Quaternion {
        &mut self.data[r * self.n + c]
    }
}

/// The shuffle `τ` on `{1..2n}`: `τ(2k) = n + k`, `τ(2k+1) = k + 1`.
pub fn shuffle_tau(n: usize) -> Vec<usize> {
    (1..=2 * n)
        .map(|r| if r % 2 == 0 { n + r / 2 } else { (r - 1) / 2 + 1 })
        .collect()
}

/// `C_τ`: the permutation matrix whose `b`-th column is `e_{τ^{-1}(b)}`.
pub fn shuffle_matrix(n: usize) -> CMatrix {
    let tau = shuffle_tau(n);
    let mut c = CMatrix::zeros(2 * n, 2 * n);
    for (r0, &t) in tau.iter().enumerate() {
        // column b = τ(r) holds e_r
        c[(r0, t - 1)] = C64::new(1.0, 0.0);
    }
    c
}

/// Groups a sorted doubled spectrum into equal adjacent pairs.
pub fn halve_spectrum(doubled: &Spectrum) -> Result<Spectrum> {
    let v = doubled.values();
    if !v.len().is_multiple_of(2) {
        return Err(Error::Numerical(format!(
            "odd spectrum length {} cannot be halved",
            v.len()
        )));
    }
    let scale = v.iter().fold(1.0_f64, |m, x| m.max(x.abs()));
    let mut half = Vec::with_capacity(v.len() / 2);
    for pair in v.chunks(2) {
        let gap = (pair[0] - pair[1]).abs();
        if gap > PAIRING_TOL * scale {
            return Err(Error::Numerical(format!(
                "eigenvalues {} and {} do not pair (gap {gap:e})",
                pair[0], pair[1]
            )));
        }
        half.push(0.5 * (pair[0] + pair[1]));
    }
    Ok(Spectrum::from_sorted(half))
}

/// Adjacency matrix of a unit-quaternion gain graph as a quaternionic matrix.
pub fn quaternion_adjacency(g: &GainGraph) -> Result<QuatMatrix> {
    if g.group() != Group::UnitQuaternion {
        return Err(Error::Unsupported(format!(
            "quaternionic adjacency needs UnitQuaternion gains, graph is over {}",
            g.group()
        )));
    }
    let mut m = QuatMatrix::zeros(g.order());
    for (u, v, gain) in g.oriented_edges() {
        let q = gain.as_quaternion().expect("unit quaternion gain");
        m[(u, v)] = q;
        m[(v, u)] = q.conj();
    }
    Ok(m)
}

/// Sum of the gains from `v` into `cell`, computed in the quaternions.
pub fn psi_sum_h(g: &GainGraph, v: usize, cell: &[usize]) -> Quaternion {
    let mut acc = Quaternion::ZERO;
    for &w in cell {
        if let Some(q) = g.gain(v, w).and_then(|e| e.as_quaternion()) {
            acc += q;
        }
    }
    acc
}

/// Quaternionic GM predicate.
///
/// Cell regularity is tested on quaternionic sums within [`QUAT_TOL`]; a `C0`
/// row is a `Swap` under the half/half gain rule, otherwise a
/// `CentralMultiply(-1)` when its sum vanishes. `Swap` wins when both apply.
pub fn check_quat_gm(
    g: &GainGraph,
    alpha: &Partition,
) -> std::result::Result<CellPlan, Violation> {
    if g.group() != Group::UnitQuaternion {
        return Err(Violation::Unsupported(format!(
            "quaternionic GM needs UnitQuaternion gains, graph is over {}",
            g.group()
        )));
    }
    let cells = alpha.cells();
    for (i, ci) in cells.iter().enumerate().skip(1) {
        for (j, cj) in cells.iter().enumerate().skip(1) {
            let Some((&first, rest)) = ci.split_first() else {
                continue;
            };
            let reference = psi_sum_h(g, first, cj);
            for &v in rest {
                let value = psi_sum_h(g, v, cj);
                if !value.approx_eq(&reference, QUAT_TOL) {
                    return Err(Violation::CellRegularity {
                        cell: i,
                        target: j,
                        vertex: g.label(v).to_string(),
                        reference_vertex: g.label(first).to_string(),
                        value: ViolationValue::Quaternion(value),
                        reference: ViolationValue::Quaternion(reference),
                    });
                }
            }
        }
    }
    let minus_one = GroupElement::Quat(-Quaternion::ONE);
    let mut plan = CellPlan::default();
    for &v in cells[0].iter() {
        for (i, ci) in cells.iter().enumerate().skip(1) {
            match switching::half_half_rule(g, v, ci) {
                Ok(action) => {
                    if let CellAction::Swap(..) = action {
                        if psi_sum_h(g, v, ci).is_zero(QUAT_TOL) {
                            plan.notices.push(format!(
                                "{}: both half/half and vanishing-sum cases hold into C{i}; Swap applied",
                                g.label(v)
                            ));
                        }
                    }
                    plan.push(v, i, action);
                }
                Err(reason) => {
                    let sum = psi_sum_h(g, v, ci);
                    if sum.is_zero(QUAT_TOL) {
                        plan.push(v, i, CellAction::CentralMultiply(minus_one));
                    } else {
                        return Err(Violation::ZeroCondition {
                            cell: i,
                            vertex: g.label(v).to_string(),
                            reason: format!("{reason}; quaternionic sum {sum} is nonzero"),
                        });
                    }
                }
            }
        }
    }
    Ok(plan)
}

/// Applies a plan from [`check_quat_gm`]; `CentralMultiply` negates gains.
pub fn apply_quat_switch(g: &GainGraph, alpha: &Partition, plan: &CellPlan) -> Result<GainGraph> {
    if g.group() != Group::UnitQuaternion {
        return Err(Error::Unsupported(format!(
            "quaternionic switching needs UnitQuaternion gains, graph is over {}",
            g.group()
        )));
    }
    for entry in plan.entries() {
        if let CellAction::CentralMultiply(s) = entry.action {
            let minus_one = GroupElement::Quat(-Quaternion::ONE);
            if s != minus_one {
                return Err(Error::InconsistentPlan(format!(
                    "quaternionic central multiplier must be -1, got {s}"
                )));
            }
        }
    }
    switching::apply_switch(g, alpha, plan)
}
