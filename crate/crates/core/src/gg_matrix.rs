//! Dense matrices with group-algebra entries.

use crate::error::{Error, Result};
use crate::gain_graph::Partition;
use crate::group_algebra::GAElement;
use crate::groups::Group;
use crate::C64;

#[derive(Clone, Debug, PartialEq)]
pub struct GAMatrix {
    group: Group,
    rows: usize,
    cols: usize,
    entries: Vec<GAElement>,
}

impl GAMatrix {
    pub fn zeros(group: Group, rows: usize, cols: usize) -> Result<Self> {
        let zero = GAElement::zero(group)?;
        Ok(GAMatrix {
            group,
            rows,
            cols,
            entries: vec![zero; rows * cols],
        })
    }

    pub fn identity(group: Group, n: usize) -> Result<Self> {
        Self::scalar_diag(group, &vec![1.0; n])
    }

    /// Diagonal matrix with real multiples of `1_G`.
    pub fn scalar_diag(group: Group, diag: &[f64]) -> Result<Self> {
        let n = diag.len();
        let mut m = Self::zeros(group, n, n)?;
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = GAElement::scalar(group, C64::new(d, 0.0))?;
        }
        Ok(m)
    }

    pub fn from_fn(
        group: Group,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Result<GAElement>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let e = f(r, c)?;
                if e.group() != group {
                    return Err(Error::GroupMismatch(group, e.group()));
                }
                entries.push(e);
            }
        }
        Ok(GAMatrix {
            group,
            rows,
            cols,
            entries,
        })
    }

    /// `Q_n = (2/n) J - I`.
    pub fn qn(n: usize, group: Group) -> Result<Self> {
        let off = 2.0 / n as f64;
        Self::from_fn(group, n, n, |r, c| {
            let v = if r == c { off - 1.0 } else { off };
            GAElement::scalar(group, C64::new(v, 0.0))
        })
    }

    /// `blockdiag(I_{n0}, Q_{n1}, ..., Q_{nk})` in the partition's cell order.
    pub fn qalpha(alpha: &Partition, group: Group) -> Result<Self> {
        let sizes: Vec<usize> = alpha.cells().iter().map(Vec::len).collect();
        let n: usize = sizes.iter().sum();
        let mut m = Self::zeros(group, n, n)?;
        let mut start = 0;
        for (i, &size) in sizes.iter().enumerate() {
            let block = if i == 0 {
                Self::identity(group, size)?
            } else {
                Self::qn(size, group)?
            };
            for r in 0..size {
                for c in 0..size {
                    m[(start + r, start + c)] = block[(r, c)].clone();
                }
            }
            start += size;
        }
        Ok(m)
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn same_shape(&self, other: &GAMatrix) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(self.group, other.group));
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &GAMatrix) -> Result<GAMatrix> {
        self.same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(GAMatrix {
            entries,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &GAMatrix) -> Result<GAMatrix> {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, c: C64) -> GAMatrix {
        GAMatrix {
            group: self.group,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &GAMatrix) -> Result<GAMatrix> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(self.group, other.group));
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Self::from_fn(self.group, self.rows, other.cols, |r, c| {
            let mut acc = GAElement::zero(self.group)?;
            for k in 0..self.cols {
                let a = &self[(r, k)];
                let b = &other[(k, c)];
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b)?)?;
            }
            Ok(acc)
        })
    }

    /// Conjugate transpose with the algebra star on entries.
    pub fn star(&self) -> GAMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for r in 0..self.cols {
            for c in 0..self.rows {
                entries.push(self[(c, r)].star());
            }
        }
        GAMatrix {
            group: self.group,
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn pow(&self, h: u32) -> Result<GAMatrix> {
        self.require_square()?;
        let mut acc = Self::identity(self.group, self.rows)?;
        for _ in 0..h {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<GAElement> {
        self.require_square()?;
        let mut acc = GAElement::zero(self.group)?;
        for i in 0..self.rows {
            acc = acc.add(&self[(i, i)])?;
        }
        Ok(acc)
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// `P M Pᵀ` for the reordering where new index `i` is old index `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Result<GAMatrix> {
        self.require_square()?;
        if order.len() != self.rows {
            return Err(Error::Shape(format!(
                "ordering of length {} for a {}x{} matrix",
                order.len(),
                self.rows,
                self.cols
            )));
        }
        Self::from_fn(self.group, self.rows, self.cols, |r, c| {
            Ok(self[(order[r], order[c])].clone())
        })
    }

    /// Largest coefficient difference over all entries.
    pub fn max_diff(&self, other: &GAMatrix) -> Result<f64> {
        self.same_shape(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.max_diff(b))
            .fold(0.0, f64::max))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GAElement::is_zero)
    }

    pub fn entries(&self) -> &[GAElement] {
        &self.entries
    }
}

impl std::ops::Index<(usize, usize)> for GAMatrix {
    type Output = GAElement;

    fn index(&self, (r, c): (usize, usize)) -> &GAElement {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for GAMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GAElement {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        &mut self.entries[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupElement;

    fn d8() -> Group {
        Group::Dihedral(4)
    }

    fn one(g: Group) -> GAElement {
        GAElement::one(g).unwrap()
    }

    #[test]
    fn qn_small_cases() {
        let g = Group::Cyclic(2);
        let q1 = GAMatrix::qn(1, g).unwrap();
        assert_eq!(q1, GAMatrix::identity(g, 1).unwrap());
        let q2 = GAMatrix::qn(2, g).unwrap();
        assert!(q2[(0, 0)].is_zero());
        assert_eq!(q2[(0, 1)], one(g));
        let q4 = GAMatrix::qn(4, g).unwrap();
        assert_eq!(q4[(0, 0)], one(g).scale(C64::new(-0.5, 0.0)));
        assert_eq!(q4[(2, 1)], one(g).scale(C64::new(0.5, 0.0)));
    }

    #[test]
    fn qn_is_involution() {
        for n in 1..=10 {
            let q = GAMatrix::qn(n, d8()).unwrap();
            assert_eq!(q.mul(&q).unwrap(), GAMatrix::identity(d8(), n).unwrap());
            assert_eq!(q.star(), q);
        }
    }

    #[test]
    fn qalpha_blocks() {
        let alpha = Partition::from_indices(8, vec![vec![6, 7], vec![0, 1, 2, 3], vec![4, 5]]).unwrap();
        let q = GAMatrix::qalpha(&alpha, d8()).unwrap();
        assert_eq!(q.mul(&q).unwrap(), GAMatrix::identity(d8(), 8).unwrap());
        assert_eq!(q[(0, 0)], one(d8()));
        assert!(q[(0, 1)].is_zero());
        assert!(q[(6, 6)].is_zero());
        assert_eq!(q[(6, 7)], one(d8()));
        let singletons = Partition::from_indices(3, vec![vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(
            GAMatrix::qalpha(&singletons, d8()).unwrap(),
            GAMatrix::identity(d8(), 3).unwrap()
        );
    }

    #[test]
    fn trace_and_power() {
        let g = d8();
        let a = GroupElement::dihedral(4, 1, false);
        let m = GAMatrix::from_fn(g, 2, 2, |r, c| match (r, c) {
            (0, 1) => GAElement::from_element(&a),
            (1, 0) => GAElement::from_element(&a.inv()),
            _ => GAElement::zero(g),
        })
        .unwrap();
        assert!(m.trace().unwrap().is_zero());
        let m2 = m.pow(2).unwrap();
        assert_eq!(m2.trace().unwrap(), one(g).scale(C64::new(2.0, 0.0)));
        assert_eq!(m.pow(0).unwrap(), GAMatrix::identity(g, 2).unwrap());
        assert_eq!(GAMatrix::identity(g, 3).unwrap().trace().unwrap(), one(g).scale(C64::new(3.0, 0.0)));
        assert_eq!(m.star(), m);
    }

    #[test]
    fn shape_errors() {
        let g = Group::Cyclic(3);
        let a = GAMatrix::zeros(g, 2, 3).unwrap();
        assert!(a.mul(&a).is_err());
        assert!(a.trace().is_err());
        assert!(a.pow(2).is_err());
        let b = GAMatrix::zeros(Group::Cyclic(4), 2, 3).unwrap();
        assert!(a.add(&b).is_err());
    }
}
