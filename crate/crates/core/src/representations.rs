//! Unitary representations and the Fourier transform of group-algebra
//! matrices.
//!
//! Built-in names, by group:
//!
//! | name | groups | degree |
//! |------|--------|--------|
//! | `trivial` | all | 1 |
//! | `identical` | roots of unity, cyclic | 1 |
//! | `char:<t>` | roots of unity, cyclic | 1 |
//! | `sign`, `permutation` | symmetric | 1, n |
//! | `standard`, `standard_x_sign` | symmetric (n ≥ 2) | n - 1 |
//! | `pairing2` | symmetric (n = 4) | 2 |
//! | `dihedral2`, `dihedral2:<h>` | dihedral | 2 |
//! | `dlin:<ea><eb>` | dihedral | 1 |
//! | `quaternion` | unit quaternions | 2 |
//! | `regular` | finite | \|G\| |
//! | `sum:<name>+<name>+...` | as the summands | sum |
//!
//! `dlin:<ea><eb>` with bits `ea, eb ∈ {0,1}` sends `a ↦ (-1)^ea`,
//! `b ↦ (-1)^eb`; `ea = 1` needs an even number of rotations.

use std::fmt;

use crate::error::{Error, Result};
use crate::gain_graph::GainGraph;
use crate::gg_matrix::GAMatrix;
use crate::group_algebra::GAElement;
use crate::groups::{root_of_unity, Group, GroupElement, Permutation};
use crate::{CMatrix, C64};

/// Tolerance for representation-level matrix comparisons.
pub const REP_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
enum Kind {
    Trivial,
    Character(u32),
    Sign,
    Permutation,
    Standard { twist: bool },
    Pairing2,
    DihedralLinear { ea: bool, eb: bool },
    Dihedral2(u32),
    Regular,
    QuaternionH,
    Sum(Vec<Representation>),
}

/// A unitary representation `π: G → U_k(ℂ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    group: Group,
    degree: usize,
    name: String,
    kind: Kind,
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.name, self.group)
    }
}

impl Representation {
    pub fn group(&self) -> Group {
        self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    fn new(group: Group, degree: usize, name: impl Into<String>, kind: Kind) -> Self {
        Representation {
            group,
            degree,
            name: name.into(),
            kind,
        }
    }

    pub fn trivial(group: Group) -> Self {
        Self::new(group, 1, "trivial", Kind::Trivial)
    }

    /// The left regular representation on `ℂG`, in the canonical element
    /// order.
    pub fn regular(group: Group) -> Result<Self> {
        let order = group.require_finite()?;
        Ok(Self::new(group, order, "regular", Kind::Regular))
    }

    /// `blockdiag(π1(g), π2(g))`.
    pub fn direct_sum(a: &Representation, b: &Representation) -> Result<Self> {
        if a.group != b.group {
            return Err(Error::GroupMismatch(a.group, b.group));
        }
        let mut parts = Vec::new();
        for r in [a, b] {
            match &r.kind {
                Kind::Sum(inner) => parts.extend(inner.iter().cloned()),
                _ => parts.push(r.clone()),
            }
        }
        let name = format!(
            "sum:{}",
            parts.iter().map(|p| p.name.as_str()).collect::<Vec<_>>().join("+")
        );
        Ok(Self::new(a.group, a.degree + b.degree, name, Kind::Sum(parts)))
    }

    /// Looks up a built-in representation by name (see the module table).
    pub fn builtin(group: Group, name: &str) -> Result<Self> {
        let unknown = || Error::UnknownRepresentation {
            name: name.to_string(),
            group,
        };
        let name = name.trim();
        if let Some(rest) = name.strip_prefix("sum:") {
            let mut parts = rest.split('+').map(|p| Self::builtin(group, p));
            let first = parts.next().ok_or_else(unknown)??;
            let mut acc = first;
            for p in parts {
                acc = Self::direct_sum(&acc, &p?)?;
            }
            return Ok(acc);
        }
        match (group, name) {
            (_, "trivial") => Ok(Self::trivial(group)),
            (_, "regular") => Self::regular(group),
            (Group::Cyclic(_) | Group::RootsOfUnity(_), "identical") => {
                Ok(Self::new(group, 1, "identical", Kind::Character(1)))
            }
            (Group::Cyclic(n) | Group::RootsOfUnity(n), _) if name.starts_with("char:") => {
                let t: i64 = name[5..].trim().parse().map_err(|_| unknown())?;
                let t = t.rem_euclid(n as i64) as u32;
                Ok(Self::new(group, 1, format!("char:{t}"), Kind::Character(t)))
            }
            (Group::Symmetric(_), "sign") => Ok(Self::new(group, 1, "sign", Kind::Sign)),
            (Group::Symmetric(n), "permutation") => {
                Ok(Self::new(group, n as usize, "permutation", Kind::Permutation))
            }
            (Group::Symmetric(n), "standard") if n >= 2 => Ok(Self::new(
                group,
                n as usize - 1,
                "standard",
                Kind::Standard { twist: false },
            )),
            (Group::Symmetric(n), "standard_x_sign") if n >= 2 => Ok(Self::new(
                group,
                n as usize - 1,
                "standard_x_sign",
                Kind::Standard { twist: true },
            )),
            (Group::Symmetric(4), "pairing2") => Ok(Self::new(group, 2, "pairing2", Kind::Pairing2)),
            (Group::Dihedral(n), "dihedral2") if n >= 3 => {
                Ok(Self::new(group, 2, "dihedral2", Kind::Dihedral2(1)))
            }
            (Group::Dihedral(n), _) if name.starts_with("dihedral2:") => {
                let h: u32 = name[10..].trim().parse().map_err(|_| unknown())?;
                if h == 0 || 2 * h >= n {
                    return Err(unknown());
                }
                Ok(Self::new(group, 2, format!("dihedral2:{h}"), Kind::Dihedral2(h)))
            }
            (Group::Dihedral(n), _) if name.starts_with("dlin:") => {
                let bits = name[5..].as_bytes();
                let bit = |c: u8| match c {
                    b'0' => Some(false),
                    b'1' => Some(true),
                    _ => None,
                };
                if bits.len() != 2 {
                    return Err(unknown());
                }
                let (ea, eb) = (bit(bits[0]).ok_or_else(unknown)?, bit(bits[1]).ok_or_else(unknown)?);
                if ea && n % 2 == 1 {
                    return Err(unknown());
                }
                Ok(Self::new(group, 1, name, Kind::DihedralLinear { ea, eb }))
            }
            (Group::UnitQuaternion, "quaternion") => {
                Ok(Self::new(group, 2, "quaternion", Kind::QuaternionH))
            }
            _ => Err(unknown()),
        }
    }

    /// A complete system of irreducible unitary representations, available
    /// for cyclic groups, roots of unity, dihedral groups, `S3` and `S4`.
    pub fn complete_system(group: Group) -> Result<Vec<Representation>> {
        let names: Vec<String> = match group {
            Group::Cyclic(n) | Group::RootsOfUnity(n) => (0..n).map(|t| format!("char:{t}")).collect(),
            Group::Dihedral(n) => {
                let mut v = vec!["dlin:00".to_string(), "dlin:01".to_string()];
                if n % 2 == 0 {
                    v.push("dlin:10".into());
                    v.push("dlin:11".into());
                }
                v.extend((1..n.div_ceil(2)).filter(|h| 2 * h < n).map(|h| format!("dihedral2:{h}")));
                v
            }
            Group::Symmetric(1) => vec!["trivial".into()],
            Group::Symmetric(2) => vec!["trivial".into(), "sign".into()],
            Group::Symmetric(3) => vec!["trivial".into(), "sign".into(), "standard".into()],
            Group::Symmetric(4) => vec![
                "trivial".into(),
                "sign".into(),
                "pairing2".into(),
                "standard".into(),
                "standard_x_sign".into(),
            ],
            _ => {
                return Err(Error::Unsupported(format!(
                    "no hand-coded irreducible system for {group}"
                )))
            }
        };
        names.iter().map(|n| Self::builtin(group, n)).collect()
    }

    /// `π(g)`.
    pub fn image(&self, g: &GroupElement) -> Result<CMatrix> {
        if g.group() != self.group {
            return Err(Error::GroupMismatch(self.group, g.group()));
        }
        let one = C64::new(1.0, 0.0);
        let scalar = |z: C64| CMatrix::from_element(1, 1, z);
        let sign = |neg: bool| if neg { -one } else { one };
        Ok(match (&self.kind, g) {
            (Kind::Trivial, _) => scalar(one),
            (Kind::Character(t), GroupElement::Cyclic { n, k } | GroupElement::Root { n, k }) => {
                scalar(root_of_unity(*n, *t as u64 * *k as u64))
            }
            (Kind::Sign, GroupElement::Perm(p)) => scalar(sign(p.sign() < 0)),
            (Kind::Permutation, GroupElement::Perm(p)) => permutation_matrix(p),
            (Kind::Standard { twist }, GroupElement::Perm(p)) => {
                let b = helmert_basis(p.degree() as usize);
                let m = b.adjoint() * permutation_matrix(p) * &b;
                if *twist && p.sign() < 0 {
                    -m
                } else {
                    m
                }
            }
            (Kind::Pairing2, GroupElement::Perm(p)) => {
                let q = pairing_action(p);
                let b = helmert_basis(3);
                b.adjoint() * permutation_matrix(&q) * &b
            }
            (Kind::DihedralLinear { ea, eb }, GroupElement::Dihedral { rot, flip, .. }) => {
                scalar(sign((*ea && rot % 2 == 1) ^ (*eb && *flip)))
            }
            (Kind::Dihedral2(h), GroupElement::Dihedral { n, rot, flip }) => {
                let z = root_of_unity(*n, *h as u64 * *rot as u64);
                let (c, s) = (C64::new(z.re, 0.0), C64::new(z.im, 0.0));
                let r = CMatrix::from_row_slice(2, 2, &[c, -s, s, c]);
                if *flip {
                    r * CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![one, -one]))
                } else {
                    r
                }
            }
            (Kind::Regular, x) => {
                let elems = self.group.elements()?;
                let mut m = CMatrix::zeros(elems.len(), elems.len());
                for (col, y) in elems.iter().enumerate() {
                    let row = self.group.index_of(&x.compose(y))?;
                    m[(row, col)] = one;
                }
                m
            }
            (Kind::QuaternionH, GroupElement::Quat(q)) => q.complex_block(),
            (Kind::Sum(parts), x) => {
                let mut m = CMatrix::zeros(self.degree, self.degree);
                let mut off = 0;
                for p in parts {
                    let block = p.image(x)?;
                    m.view_mut((off, off), (p.degree, p.degree)).copy_from(&block);
                    off += p.degree;
                }
                m
            }
            _ => {
                return Err(Error::UnknownRepresentation {
                    name: self.name.clone(),
                    group: self.group,
                })
            }
        })
    }

    /// Images of all elements, in canonical order.
    pub fn image_table(&self) -> Result<Vec<CMatrix>> {
        self.group.elements()?.iter().map(|g| self.image(g)).collect()
    }

    /// Extension to the group algebra: `Σ f_x x ↦ Σ f_x π(x)`.
    pub fn apply_cg(&self, f: &GAElement) -> Result<CMatrix> {
        if f.group() != self.group {
            return Err(Error::GroupMismatch(self.group, f.group()));
        }
        let mut m = CMatrix::zeros(self.degree, self.degree);
        for (x, c) in f.terms() {
            m += self.image(x)? * *c;
        }
        Ok(m)
    }

    /// Fourier transform: every entry replaced by its `k × k` image block.
    pub fn fourier(&self, m: &GAMatrix) -> Result<CMatrix> {
        if m.group() != self.group {
            return Err(Error::GroupMismatch(self.group, m.group()));
        }
        let table = self.image_table()?;
        let k = self.degree;
        let mut out = CMatrix::zeros(m.rows() * k, m.cols() * k);
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let mut block = out.view_mut((r * k, c * k), (k, k));
                for (x, coeff) in m[(r, c)].terms() {
                    let img = &table[self.group.index_of(x)?];
                    block += img * *coeff;
                }
            }
        }
        Ok(out)
    }

    /// `ker π = {g : π(g) = I}` within [`REP_TOL`].
    pub fn kernel_elements(&self) -> Result<Vec<GroupElement>> {
        let id = CMatrix::identity(self.degree, self.degree);
        let mut out = Vec::new();
        for g in self.group.elements()? {
            if crate::max_abs_diff(&self.image(&g)?, &id) <= REP_TOL {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// Largest deviation from `π(gh) = π(g)π(h)` and `π(1) = I` over all
    /// pairs of elements.
    pub fn homomorphism_defect(&self) -> Result<f64> {
        let elems = self.group.elements()?;
        let table = self.image_table()?;
        let mut worst = crate::max_abs_diff(&table[0], &CMatrix::identity(self.degree, self.degree));
        for (i, g) in elems.iter().enumerate() {
            for (j, h) in elems.iter().enumerate() {
                let gh = self.group.index_of(&g.compose(h))?;
                worst = worst.max(crate::max_abs_diff(&(&table[i] * &table[j]), &table[gh]));
            }
        }
        Ok(worst)
    }

    /// Largest deviation from `π(g)π(g)* = I`.
    pub fn unitarity_defect(&self) -> Result<f64> {
        let id = CMatrix::identity(self.degree, self.degree);
        let mut worst: f64 = 0.0;
        for m in self.image_table()? {
            worst = worst.max(crate::max_abs_diff(&(&m * m.adjoint()), &id));
        }
        Ok(worst)
    }
}

/// Represented adjacency matrix: each gain replaced by its `π`-image block.
/// Works for infinite gain groups as well.
pub fn represented_adjacency(g: &GainGraph, rep: &Representation) -> Result<CMatrix> {
    if g.group() != rep.group() {
        return Err(Error::GroupMismatch(g.group(), rep.group()));
    }
    let k = rep.degree();
    let n = g.order();
    let mut out = CMatrix::zeros(n * k, n * k);
    for (u, v, gain) in g.oriented_edges() {
        let img = rep.image(&gain)?;
        out.view_mut((u * k, v * k), (k, k)).copy_from(&img);
        out.view_mut((v * k, u * k), (k, k)).copy_from(&img.adjoint());
    }
    Ok(out)
}

/// `P e_j = e_{p(j)}`.
fn permutation_matrix(p: &Permutation) -> CMatrix {
    let n = p.degree() as usize;
    let mut m = CMatrix::zeros(n, n);
    for j in 0..n {
        m[(p.apply(j), j)] = C64::new(1.0, 0.0);
    }
    m
}

/// Orthonormal basis (as columns) of the sum-zero subspace of `ℂ^n`.
fn helmert_basis(n: usize) -> CMatrix {
    let mut b = CMatrix::zeros(n, n - 1);
    for k in 1..n {
        let s = 1.0 / ((k * (k + 1)) as f64).sqrt();
        for r in 0..k {
            b[(r, k - 1)] = C64::new(s, 0.0);
        }
        b[(k, k - 1)] = C64::new(-(k as f64) * s, 0.0);
    }
    b
}

/// Action of `S4` on the three pairings `{12|34}, {13|24}, {14|23}`.
fn pairing_action(p: &Permutation) -> Permutation {
    const PAIRINGS: [[(usize, usize); 2]; 3] = [[(0, 1), (2, 3)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];
    let normalize = |(a, b): (usize, usize)| if a < b { (a, b) } else { (b, a) };
    let find = |x: usize, y: usize| {
        let e = normalize((x, y));
        PAIRINGS
            .iter()
            .position(|pr| pr[0] == e || pr[1] == e)
            .expect("every pair lies in a pairing")
    };
    let mut img = [0u8; 3];
    for (i, pr) in PAIRINGS.iter().enumerate() {
        let (a, b) = pr[0];
        img[i] = find(p.apply(a), p.apply(b)) as u8;
    }
    Permutation::from_images(&img).expect("pairings are permuted")
}
