//! The complex group algebra of a finite group.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::groups::{Group, GroupElement};
use crate::C64;

/// Coefficient tolerance for [`GAElement`] equality.
pub const GA_EQ_TOL: f64 = 1e-12;

/// A finitely supported complex combination `Σ c_x x`.
///
/// Coefficients that are exactly zero are pruned. Equality compares the union
/// of supports coefficientwise within [`GA_EQ_TOL`].
#[derive(Clone, Debug)]
pub struct GAElement {
    group: Group,
    coeffs: BTreeMap<GroupElement, C64>,
}

impl GAElement {
    pub fn zero(group: Group) -> Result<Self> {
        group.require_finite()?;
        Ok(GAElement {
            group,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn one(group: Group) -> Result<Self> {
        Self::from_element(&group.identity())
    }

    /// The basis element `x` with coefficient 1.
    pub fn from_element(x: &GroupElement) -> Result<Self> {
        Self::term(C64::new(1.0, 0.0), x)
    }

    /// `c · x`.
    pub fn term(c: C64, x: &GroupElement) -> Result<Self> {
        let mut out = Self::zero(x.group())?;
        out.add_term(c, x)?;
        Ok(out)
    }

    /// `c · 1_G`.
    pub fn scalar(group: Group, c: C64) -> Result<Self> {
        Self::term(c, &group.identity())
    }

    pub fn from_terms(group: Group, terms: &[(C64, GroupElement)]) -> Result<Self> {
        let mut out = Self::zero(group)?;
        for (c, x) in terms {
            out.add_term(*c, x)?;
        }
        Ok(out)
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn coeff(&self, x: &GroupElement) -> C64 {
        self.coeffs.get(x).copied().unwrap_or_default()
    }

    /// Nonzero terms in canonical element order.
    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &C64)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// In-place `self += c · x`.
    pub fn add_term(&mut self, c: C64, x: &GroupElement) -> Result<()> {
        if x.group() != self.group {
            return Err(Error::GroupMismatch(self.group, x.group()));
        }
        let slot = self.coeffs.entry(*x).or_default();
        *slot += c;
        if *slot == C64::default() {
            self.coeffs.remove(x);
        }
        Ok(())
    }

    fn same_group(&self, other: &GAElement) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(self.group, other.group));
        }
        Ok(())
    }

    pub fn add(&self, other: &GAElement) -> Result<GAElement> {
        self.same_group(other)?;
        let mut out = self.clone();
        for (x, c) in &other.coeffs {
            out.add_term(*c, x)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GAElement) -> Result<GAElement> {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, c: C64) -> GAElement {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(x, v)| (*x, v * c))
            .filter(|(_, v)| *v != C64::default())
            .collect();
        GAElement {
            group: self.group,
            coeffs,
        }
    }

    /// Convolution `(Σ f_x x)(Σ h_y y) = Σ f_x h_y xy`.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &GAElement) -> Result<GAElement> {
        self.same_group(other)?;
        let mut out = GAElement {
            group: self.group,
            coeffs: BTreeMap::new(),
        };
        for (x, a) in &self.coeffs {
            for (y, b) in &other.coeffs {
                out.add_term(a * b, &x.compose(y))?;
            }
        }
        Ok(out)
    }

    /// `f* = Σ conj(f_{x⁻¹}) x`.
    pub fn star(&self) -> GAElement {
        GAElement {
            group: self.group,
            coeffs: self.coeffs.iter().map(|(x, c)| (x.inv(), c.conj())).collect(),
        }
    }

    /// Left multiplication of every basis element: `Σ c_x (g x)`.
    pub fn left_mul_element(&self, g: &GroupElement) -> Result<GAElement> {
        GAElement::from_element(g)?.mul(self)
    }

    /// Class sums of coefficients.
    pub fn mu(&self) -> Result<ClassFunction> {
        let classes = self.group.conjugacy_classes()?;
        let values = classes
            .iter()
            .map(|class| {
                let sum = class.iter().map(|x| self.coeff(x)).sum();
                (class[0], sum)
            })
            .collect();
        Ok(ClassFunction {
            group: self.group,
            values,
        })
    }

    /// Largest coefficient difference over the union of supports.
    pub fn max_diff(&self, other: &GAElement) -> f64 {
        let mut worst: f64 = 0.0;
        for (x, c) in &self.coeffs {
            worst = worst.max((c - other.coeff(x)).norm());
        }
        for (x, c) in &other.coeffs {
            if !self.coeffs.contains_key(x) {
                worst = worst.max(c.norm());
            }
        }
        worst
    }

    /// Element grammar rendering, `c1*g1 + c2*g2 + ...`.
    pub fn render(&self, pretty: bool) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (x, c)) in self.coeffs.iter().enumerate() {
            let (neg, mag) = split_sign(*c);
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let name = if pretty { x.pretty() } else { x.to_string() };
            out.push_str(&format!("{}*{}", format_coeff(mag), name));
        }
        out
    }
}

impl PartialEq for GAElement {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.max_diff(other) <= GA_EQ_TOL
    }
}

impl fmt::Display for GAElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

fn split_sign(c: C64) -> (bool, C64) {
    if c.im == 0.0 && c.re < 0.0 {
        (true, -c)
    } else {
        (false, c)
    }
}

/// Renders a coefficient: integers and reals plainly, complex values in
/// parentheses.
pub fn format_coeff(c: C64) -> String {
    let real = |x: f64| {
        if x.fract() == 0.0 && x.abs() < 1e15 {
            format!("{}", x as i64)
        } else {
            format!("{x}")
        }
    };
    if c.im == 0.0 {
        real(c.re)
    } else if c.re == 0.0 {
        format!("({}i)", real(c.im))
    } else {
        let sign = if c.im < 0.0 { '-' } else { '+' };
        format!("({}{}{}i)", real(c.re), sign, real(c.im.abs()))
    }
}

/// A function on conjugacy classes, keyed by each class's minimal element.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Group,
    values: BTreeMap<GroupElement, C64>,
}

impl ClassFunction {
    pub fn group(&self) -> Group {
        self.group
    }

    /// Value on the class represented by `rep` (its minimal element).
    pub fn get(&self, rep: &GroupElement) -> Option<C64> {
        self.values.get(rep).copied()
    }

    /// Value on the class containing `x`.
    pub fn value_at(&self, x: &GroupElement) -> Result<C64> {
        for class in self.group.conjugacy_classes()? {
            if class.contains(x) {
                return Ok(self.values[&class[0]]);
            }
        }
        Err(Error::GroupMismatch(self.group, x.group()))
    }

    pub fn values(&self) -> impl Iterator<Item = (&GroupElement, &C64)> {
        self.values.iter()
    }

    pub fn max_diff(&self, other: &ClassFunction) -> f64 {
        self.values
            .iter()
            .map(|(k, v)| (v - other.get(k).unwrap_or_default()).norm())
            .fold(0.0, f64::max)
    }

    /// Largest absolute value.
    pub fn max_abs(&self) -> f64 {
        self.values.values().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.max_diff(other) <= GA_EQ_TOL
    }
}
