//! Godsil-McKay style switchings for gain graphs.
//!
//! A gain graph carries a group element on every oriented edge, with the
//! reverse orientation carrying the inverse. This crate builds the switched
//! graphs obtained from a vertex partition `{C0, C1, ..., Ck}` and certifies
//! the resulting cospectrality at three levels:
//!
//! * **G-cospectral**: the switching identity `A' = Q A Q` holds in the
//!   group algebra itself ([`switching::check_g_gm`]).
//! * **π-cospectral**: the identity holds after applying a unitary
//!   representation, optionally using an element `s` with `π(s) = -I`
//!   ([`switching::check_pi_gm`]).
//! * **right cospectral**: unit-quaternion gains, through the complex
//!   adjoint ([`quaternions::check_quat_gm`]).
//!
//! Supported gain groups are cyclic groups, roots of unity, dihedral groups,
//! symmetric groups and the unit quaternions.

pub mod catalog;
pub mod error;
pub mod gain_graph;
pub mod gg_matrix;
pub mod group_algebra;
pub mod groups;
pub mod io;
pub mod quaternions;
pub mod representations;
pub mod spectra;
pub mod switching;

pub use error::{Error, Result};
pub use gain_graph::{GainGraph, Partition};
pub use gg_matrix::GAMatrix;
pub use group_algebra::{ClassFunction, GAElement};
pub use groups::{Group, GroupElement, Permutation};
pub use quaternions::{QuatMatrix, Quaternion};
pub use representations::Representation;
pub use spectra::{CharPoly, Spectrum};
pub use switching::{CellAction, CellPlan, Violation};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;

/// Dense complex matrix used for represented (Fourier-transformed) matrices.
pub type CMatrix = nalgebra::DMatrix<C64>;

/// Entrywise max-norm of `a - b`. Panics on shape mismatch.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Entrywise max-norm of a complex matrix.
pub fn max_abs(a: &CMatrix) -> f64 {
    a.iter().map(|x| x.norm()).fold(0.0, f64::max)
}
