//! Gain groups: cyclic groups, roots of unity, dihedral groups, symmetric
//! groups and the unit quaternions.
//!
//! Finite kinds have exact element arithmetic and a deterministic element
//! order (identity first), so every matrix built from an enumeration is
//! reproducible. Unit-quaternion elements compare within [`QUAT_EQ_TOL`].

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quaternions::Quaternion;
use crate::representations::Representation;
use crate::C64;

/// Largest supported symmetric degree.
pub const MAX_SYM: usize = 8;

/// Componentwise equality tolerance for unit quaternions.
pub const QUAT_EQ_TOL: f64 = 1e-9;

/// Inputs whose norm is this close to 1 are normalized; others are rejected.
pub const QUAT_NORMALIZE_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n", rename_all = "snake_case")]
pub enum Group {
    /// Abstract cyclic group of order `n`.
    Cyclic(u32),
    /// The `n`-th roots of unity inside the unit circle.
    RootsOfUnity(u32),
    /// Dihedral group of order `2n`, generated by a rotation `a` and a flip `b`.
    Dihedral(u32),
    /// Symmetric group on `{1..n}`.
    Symmetric(u8),
    UnitQuaternion,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Cyclic(n) => write!(f, "Cyclic({n})"),
            Group::RootsOfUnity(n) => write!(f, "RootsOfUnity({n})"),
            Group::Dihedral(n) => write!(f, "Dihedral(order {})", 2 * n),
            Group::Symmetric(n) => write!(f, "Symmetric({n})"),
            Group::UnitQuaternion => write!(f, "UnitQuaternion"),
        }
    }
}

impl Group {
    /// Checks the size parameter.
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            Group::Cyclic(n) | Group::RootsOfUnity(n) | Group::Dihedral(n) => n >= 1,
            Group::Symmetric(n) => (1..=MAX_SYM as u8).contains(&n),
            Group::UnitQuaternion => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::Parse(format!("unsupported group parameter: {self:?}")))
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, Group::UnitQuaternion)
    }

    pub fn order(&self) -> Option<usize> {
        match *self {
            Group::Cyclic(n) | Group::RootsOfUnity(n) => Some(n as usize),
            Group::Dihedral(n) => Some(2 * n as usize),
            Group::Symmetric(n) => Some((1..=n as usize).product()),
            Group::UnitQuaternion => None,
        }
    }

    pub fn is_abelian(&self) -> bool {
        match *self {
            Group::Cyclic(_) | Group::RootsOfUnity(_) => true,
            Group::Dihedral(n) => n <= 2,
            Group::Symmetric(n) => n <= 2,
            Group::UnitQuaternion => false,
        }
    }

    pub fn identity(&self) -> GroupElement {
        match *self {
            Group::Cyclic(n) => GroupElement::Cyclic { n, k: 0 },
            Group::RootsOfUnity(n) => GroupElement::Root { n, k: 0 },
            Group::Dihedral(n) => GroupElement::Dihedral { n, rot: 0, flip: false },
            Group::Symmetric(n) => GroupElement::Perm(Permutation::identity(n)),
            Group::UnitQuaternion => GroupElement::Quat(Quaternion::ONE),
        }
    }

    pub fn require_finite(&self) -> Result<usize> {
        self.order().ok_or(Error::InfiniteGroup(*self))
    }

    /// All elements, identity first, in the canonical order used by `Ord`.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        self.require_finite()?;
        Ok(match *self {
            Group::Cyclic(n) => (0..n).map(|k| GroupElement::Cyclic { n, k }).collect(),
            Group::RootsOfUnity(n) => (0..n).map(|k| GroupElement::Root { n, k }).collect(),
            Group::Dihedral(n) => [false, true]
                .into_iter()
                .flat_map(|flip| (0..n).map(move |rot| GroupElement::Dihedral { n, rot, flip }))
                .collect(),
            Group::Symmetric(n) => Permutation::all(n)
                .into_iter()
                .map(GroupElement::Perm)
                .collect(),
            Group::UnitQuaternion => unreachable!(),
        })
    }

    /// Conjugacy classes by brute-force conjugation. Each class is sorted, and
    /// classes are ordered by their minimal element.
    pub fn conjugacy_classes(&self) -> Result<Vec<Vec<GroupElement>>> {
        let elems = self.elements()?;
        let mut assigned = vec![false; elems.len()];
        let mut classes = Vec::new();
        for (idx, g) in elems.iter().enumerate() {
            if assigned[idx] {
                continue;
            }
            let mut class: Vec<GroupElement> = elems
                .iter()
                .map(|h| h.compose(g).compose(&h.inv()))
                .collect();
            class.sort();
            class.dedup();
            for c in &class {
                let pos = elems.binary_search(c).expect("conjugate lies in the group");
                assigned[pos] = true;
            }
            classes.push(class);
        }
        Ok(classes)
    }

    /// Whether `g` is an element of this group.
    pub fn contains(&self, g: &GroupElement) -> bool {
        g.group() == *self
    }

    /// Position of `g` in [`Group::elements`].
    pub fn index_of(&self, g: &GroupElement) -> Result<usize> {
        if !self.contains(g) {
            return Err(Error::GroupMismatch(*self, g.group()));
        }
        Ok(match *g {
            GroupElement::Cyclic { k, .. } | GroupElement::Root { k, .. } => k as usize,
            GroupElement::Dihedral { n, rot, flip } => (flip as usize) * n as usize + rot as usize,
            GroupElement::Perm(p) => p.lex_rank(),
            GroupElement::Quat(_) => return Err(Error::InfiniteGroup(*self)),
        })
    }

    /// Parses an element in this group's grammar.
    ///
    /// * cyclic / roots of unity: an integer exponent; `i` for the generator
    ///   when `n = 4`;
    /// * dihedral: `e`, `a`, `a^p`, `b`, `a b`, `a^p b`;
    /// * symmetric: cycle notation such as `(1 2)(3 4)`, or `e`;
    /// * unit quaternion: `[a,b,c,d]` or one of `1 -1 i j k` (with signs).
    pub fn parse_element(&self, s: &str) -> Result<GroupElement> {
        let t = s.trim();
        let bad = |why: &str| Error::Parse(format!("element `{t}` of {self}: {why}"));
        match *self {
            Group::Cyclic(n) | Group::RootsOfUnity(n) => {
                let k: i64 = if n == 4 && t == "i" {
                    1
                } else {
                    t.parse().map_err(|_| bad("expected an integer exponent"))?
                };
                let k = k.rem_euclid(n as i64) as u32;
                Ok(match self {
                    Group::Cyclic(_) => GroupElement::Cyclic { n, k },
                    _ => GroupElement::Root { n, k },
                })
            }
            Group::Dihedral(n) => {
                if t == "e" || t == "1" {
                    return Ok(self.identity());
                }
                let compact: String = t.chars().filter(|c| !c.is_whitespace()).collect();
                let (rot_part, flip) = match compact.strip_suffix('b') {
                    Some(r) => (r, true),
                    None => (compact.as_str(), false),
                };
                let rot: i64 = if rot_part.is_empty() {
                    0
                } else if rot_part == "a" {
                    1
                } else if let Some(p) = rot_part.strip_prefix("a^") {
                    p.parse().map_err(|_| bad("bad rotation exponent"))?
                } else {
                    return Err(bad("expected a^p or a^p b"));
                };
                Ok(GroupElement::Dihedral {
                    n,
                    rot: rot.rem_euclid(n as i64) as u32,
                    flip,
                })
            }
            Group::Symmetric(n) => Ok(GroupElement::Perm(Permutation::parse_cycles(n, t)?)),
            Group::UnitQuaternion => {
                let q: Quaternion = t.parse()?;
                GroupElement::unit_quaternion(q)
            }
        }
    }

    /// Scans for an element whose image under `rep` is `-I` (max-norm 1e-9).
    ///
    /// On the unit quaternions only the central element `-1` is tested.
    pub fn find_minus_identity(&self, rep: &Representation) -> Result<Option<GroupElement>> {
        if rep.group() != *self {
            return Err(Error::GroupMismatch(*self, rep.group()));
        }
        let candidates = match self {
            Group::UnitQuaternion => vec![GroupElement::Quat(-Quaternion::ONE)],
            _ => self.elements()?,
        };
        let minus = -crate::CMatrix::identity(rep.degree(), rep.degree());
        for s in candidates {
            if crate::max_abs_diff(&rep.image(&s)?, &minus) <= 1e-9 {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }
}

/// A permutation of `{0..n-1}` stored by images; printed 1-based in cycle
/// notation. Composition is right-to-left: `(p * q)(x) = p(q(x))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    n: u8,
    img: [u8; MAX_SYM],
}

impl Permutation {
    pub fn identity(n: u8) -> Self {
        let mut img = [0u8; MAX_SYM];
        for (i, slot) in img.iter_mut().enumerate().take(n as usize) {
            *slot = i as u8;
        }
        Permutation { n, img }
    }

    /// From zero-based images.
    pub fn from_images(images: &[u8]) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_SYM {
            return Err(Error::Parse(format!("permutation degree {n} out of range")));
        }
        let mut seen = [false; MAX_SYM];
        let mut img = [0u8; MAX_SYM];
        for (i, &x) in images.iter().enumerate() {
            if x as usize >= n || seen[x as usize] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[x as usize] = true;
            img[i] = x;
        }
        Ok(Permutation { n: n as u8, img })
    }

    pub fn degree(&self) -> u8 {
        self.n
    }

    pub fn images(&self) -> &[u8] {
        &self.img[..self.n as usize]
    }

    pub fn apply(&self, x: usize) -> usize {
        self.img[x] as usize
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        let mut img = [0u8; MAX_SYM];
        for (i, slot) in img.iter_mut().enumerate().take(self.n as usize) {
            *slot = self.img[other.img[i] as usize];
        }
        Permutation { n: self.n, img }
    }

    pub fn inverse(&self) -> Permutation {
        let mut img = [0u8; MAX_SYM];
        for i in 0..self.n as usize {
            img[self.img[i] as usize] = i as u8;
        }
        Permutation { n: self.n, img }
    }

    /// +1 for even, -1 for odd permutations.
    pub fn sign(&self) -> i32 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by it.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n as usize;
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// All permutations in lexicographic order of their image arrays.
    pub fn all(n: u8) -> Vec<Permutation> {
        let mut cur: Vec<u8> = (0..n).collect();
        let mut out = vec![Permutation::from_images(&cur).expect("valid")];
        // next_permutation
        loop {
            let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).expect("exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
            out.push(Permutation::from_images(&cur).expect("valid"));
        }
        out
    }

    /// Rank in lexicographic order (Lehmer code).
    pub fn lex_rank(&self) -> usize {
        let n = self.n as usize;
        let mut rank = 0;
        for i in 0..n {
            let smaller = (i + 1..n).filter(|&j| self.img[j] < self.img[i]).count();
            rank = rank * (n - i) + smaller;
        }
        rank
    }

    /// Parses `e` or a product of 1-based cycles such as `(1 2)(3 4)`.
    /// Cycles compose right-to-left.
    pub fn parse_cycles(n: u8, s: &str) -> Result<Permutation> {
        let t = s.trim();
        let mut acc = Permutation::identity(n);
        if t == "e" || t == "1" || t == "()" {
            return Ok(acc);
        }
        let bad = |why: String| Error::Parse(format!("permutation `{t}`: {why}"));
        let mut rest = t;
        let mut cycles = Vec::new();
        while !rest.is_empty() {
            let body_start = rest
                .strip_prefix('(')
                .ok_or_else(|| bad("expected `(`".into()))?;
            let close = body_start.find(')').ok_or_else(|| bad("missing `)`".into()))?;
            let body = &body_start[..close];
            let points: Vec<usize> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|p| !p.is_empty())
                .map(|p| p.parse::<usize>().map_err(|e| bad(e.to_string())))
                .collect::<Result<_>>()?;
            let mut seen = std::collections::BTreeSet::new();
            for &p in &points {
                if p == 0 || p > n as usize {
                    return Err(bad(format!("point {p} outside 1..={n}")));
                }
                if !seen.insert(p) {
                    return Err(bad(format!("point {p} repeated in a cycle")));
                }
            }
            cycles.push(points);
            rest = body_start[close + 1..].trim_start();
        }
        for points in cycles.iter().rev() {
            let mut img: Vec<u8> = (0..n).collect();
            for (idx, &p) in points.iter().enumerate() {
                let next = points[(idx + 1) % points.len()];
                img[p - 1] = (next - 1) as u8;
            }
            let c = Permutation::from_images(&img)?;
            // rightmost cycle acts first
            acc = c.compose(&acc);
        }
        Ok(acc)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// An element of one of the supported groups. Each variant carries enough of
/// its group's parameters to detect mixing elements of different groups.
#[derive(Clone, Copy, Debug)]
pub enum GroupElement {
    Cyclic { n: u32, k: u32 },
    Root { n: u32, k: u32 },
    /// `a^rot b^flip`.
    Dihedral { n: u32, rot: u32, flip: bool },
    Perm(Permutation),
    Quat(Quaternion),
}

impl GroupElement {
    pub fn group(&self) -> Group {
        match *self {
            GroupElement::Cyclic { n, .. } => Group::Cyclic(n),
            GroupElement::Root { n, .. } => Group::RootsOfUnity(n),
            GroupElement::Dihedral { n, .. } => Group::Dihedral(n),
            GroupElement::Perm(p) => Group::Symmetric(p.degree()),
            GroupElement::Quat(_) => Group::UnitQuaternion,
        }
    }

    /// Unit quaternion element. Norms within 1e-6 of 1 are normalized.
    pub fn unit_quaternion(q: Quaternion) -> Result<GroupElement> {
        let norm = q.norm();
        if (norm - 1.0).abs() > QUAT_NORMALIZE_TOL {
            return Err(Error::Parse(format!("quaternion {q} has norm {norm}, not a unit")));
        }
        // leave already-normalized inputs bit-identical
        let q = if (norm - 1.0).abs() > 4.0 * f64::EPSILON {
            q * (1.0 / norm)
        } else {
            q
        };
        Ok(GroupElement::Quat(q))
    }

    /// `a^rot b^flip` in the dihedral group of order `2n`.
    pub fn dihedral(n: u32, rot: i64, flip: bool) -> GroupElement {
        GroupElement::Dihedral {
            n,
            rot: rot.rem_euclid(n as i64) as u32,
            flip,
        }
    }

    /// Parses cycle notation in `Symmetric(n)`; panics on malformed input.
    pub fn perm(n: u8, cycles: &str) -> GroupElement {
        GroupElement::Perm(Permutation::parse_cycles(n, cycles).expect("valid cycle notation"))
    }

    pub fn root(n: u32, k: i64) -> GroupElement {
        GroupElement::Root {
            n,
            k: k.rem_euclid(n as i64) as u32,
        }
    }

    pub fn cyclic(n: u32, k: i64) -> GroupElement {
        GroupElement::Cyclic {
            n,
            k: k.rem_euclid(n as i64) as u32,
        }
    }

    pub fn as_quaternion(&self) -> Option<Quaternion> {
        match self {
            GroupElement::Quat(q) => Some(*q),
            _ => None,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == self.group().identity()
    }

    /// Group product; errors when the operands live in different groups.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.group() != other.group() {
            return Err(Error::GroupMismatch(self.group(), other.group()));
        }
        Ok(self.compose(other))
    }

    /// Product of two elements known to share a group.
    ///
    /// # Panics
    /// If the groups differ.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        use GroupElement::*;
        match (*self, *other) {
            (Cyclic { n, k }, Cyclic { n: m, k: l }) if n == m => Cyclic { n, k: (k + l) % n },
            (Root { n, k }, Root { n: m, k: l }) if n == m => Root { n, k: (k + l) % n },
            (Dihedral { n, rot, flip }, Dihedral { n: m, rot: r2, flip: f2 }) if n == m => {
                // b a^s = a^{-s} b
                let r2 = if flip { (n - r2) % n } else { r2 };
                Dihedral {
                    n,
                    rot: (rot + r2) % n,
                    flip: flip ^ f2,
                }
            }
            (Perm(p), Perm(q)) if p.degree() == q.degree() => Perm(p.compose(&q)),
            (Quat(p), Quat(q)) => Quat(p * q),
            (a, b) => panic!("cannot multiply {} by {}", a.group(), b.group()),
        }
    }

    pub fn inv(&self) -> GroupElement {
        use GroupElement::*;
        match *self {
            Cyclic { n, k } => Cyclic { n, k: (n - k) % n },
            Root { n, k } => Root { n, k: (n - k) % n },
            Dihedral { n, rot, flip: false } => Dihedral {
                n,
                rot: (n - rot) % n,
                flip: false,
            },
            // reflections are involutions
            d @ Dihedral { flip: true, .. } => d,
            Perm(p) => Perm(p.inverse()),
            // unit quaternion: the conjugate, exactly
            Quat(q) => Quat(q.conj()),
        }
    }

    /// `g^e` for any integer exponent.
    pub fn pow(&self, e: i64) -> GroupElement {
        let base = if e < 0 { self.inv() } else { *self };
        let mut acc = self.group().identity();
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    /// Image in the unit circle for roots of unity; exact for quarter turns.
    pub fn root_value(&self) -> Option<C64> {
        match *self {
            GroupElement::Root { n, k } => Some(root_of_unity(n, k as u64)),
            _ => None,
        }
    }

    fn kind_rank(&self) -> u8 {
        match self {
            GroupElement::Cyclic { .. } => 0,
            GroupElement::Root { .. } => 1,
            GroupElement::Dihedral { .. } => 2,
            GroupElement::Perm(_) => 3,
            GroupElement::Quat(_) => 4,
        }
    }

    /// Short rendering: roots of unity as `1`, `i`, `-1`, `-i` where that is
    /// exact, unit quaternions `±1, ±i, ±j, ±k` by name, otherwise the element
    /// grammar.
    pub fn pretty(&self) -> String {
        match *self {
            GroupElement::Root { n, k } if (4 * k) % n == 0 => {
                return ["1", "i", "-1", "-i"][((4 * k / n) % 4) as usize].to_string();
            }
            GroupElement::Quat(q) => {
                let named = [
                    (Quaternion::ONE, "1"),
                    (Quaternion::I, "i"),
                    (Quaternion::J, "j"),
                    (Quaternion::K, "k"),
                ];
                for (unit, name) in named {
                    if q.approx_eq(&unit, QUAT_EQ_TOL) {
                        return name.to_string();
                    }
                    if q.approx_eq(&-unit, QUAT_EQ_TOL) {
                        return format!("-{name}");
                    }
                }
            }
            _ => {}
        }
        self.to_string()
    }
}

/// `exp(2πi k / n)`, with exact values when `4k/n` is an integer.
pub fn root_of_unity(n: u32, k: u64) -> C64 {
    let n = n as u64;
    let k = k % n;
    if (4 * k).is_multiple_of(n) {
        return match (4 * k / n) % 4 {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, 1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, -1.0),
        };
    }
    C64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64)
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

// Quaternion equality is tolerance based; exact everywhere else.
impl Eq for GroupElement {}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    /// Canonical order: matches [`Group::elements`] within each group.
    fn cmp(&self, other: &Self) -> Ordering {
        use GroupElement::*;
        match (self, other) {
            (Cyclic { n, k }, Cyclic { n: m, k: l }) | (Root { n, k }, Root { n: m, k: l }) => {
                (n, k).cmp(&(m, l))
            }
            (Dihedral { n, rot, flip }, Dihedral { n: m, rot: r2, flip: f2 }) => {
                (n, flip, rot).cmp(&(m, f2, r2))
            }
            (Perm(p), Perm(q)) => (p.degree(), p.images()).cmp(&(q.degree(), q.images())),
            (Quat(p), Quat(q)) => {
                if p.approx_eq(q, QUAT_EQ_TOL) {
                    Ordering::Equal
                } else {
                    p.a.total_cmp(&q.a)
                        .then(p.b.total_cmp(&q.b))
                        .then(p.c.total_cmp(&q.c))
                        .then(p.d.total_cmp(&q.d))
                }
            }
            _ => self.kind_rank().cmp(&other.kind_rank()),
        }
    }
}

impl fmt::Display for GroupElement {
    /// Element grammar accepted by [`Group::parse_element`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupElement::Cyclic { k, .. } | GroupElement::Root { k, .. } => write!(f, "{k}"),
            GroupElement::Dihedral { rot, flip, .. } => match (rot, flip) {
                (0, false) => write!(f, "e"),
                (0, true) => write!(f, "b"),
                (1, false) => write!(f, "a"),
                (1, true) => write!(f, "a b"),
                (r, false) => write!(f, "a^{r}"),
                (r, true) => write!(f, "a^{r} b"),
            },
            GroupElement::Perm(p) => write!(f, "{p}"),
            GroupElement::Quat(q) => write!(f, "{q}"),
        }
    }
}
