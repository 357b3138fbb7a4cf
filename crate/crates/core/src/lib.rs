//! Amoebas, Ronkin functions and the Ronkin (Monge–Ampère) measure of the
//! affine linear polynomial `f = 1 + z + w + t`.
//!
//! Every quantity is available through two independent routes where one
//! exists: direct quadrature of the defining torus integrals, and closed
//! forms in complete elliptic integrals, hypergeometric series and
//! polylogarithms. The routes are cross-checked throughout the test suite.
//!
//! Module map:
//!
//! * [`elliptic`]: Carlson symmetric integrals, `K`, `E`, `Π` and the
//!   reduction of quartic integrals to Legendre normal form.
//! * [`hyperseries`]: `2F1`, Appell `F1`, the two GKZ lattice series,
//!   polylogarithms, Bloch–Wigner and `L(χ₋₃, s)`.
//! * [`amoeba`]: membership, contour and chamber geometry, compactification.
//! * [`ronkin`]: Ronkin function values, gradients and Hessians.
//! * [`measure`]: density of the Ronkin measure, grids and total mass.
//! * [`quad`]: adaptive Gauss–Kronrod quadrature shared by the above.
//! * [`serial`]: 17-digit float formatting for JSON and CSV output.

pub mod amoeba;
pub mod elliptic;
mod error;
pub mod hyperseries;
pub mod measure;
pub mod quad;
pub mod ronkin;
pub mod serial;

pub use error::{Error, Result};
