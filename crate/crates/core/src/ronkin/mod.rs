//! Ronkin functions of affine linear polynomials, their gradients and
//! Hessians.
//!
//! For `f = 1 + z + w + t` every quantity has a quadrature route built from
//! the torus-average definition, and the second derivatives also have closed
//! forms in complete elliptic integrals of the first and third kind.
//! Derivatives in `y` and `u` are never derived separately: `f` is symmetric,
//! so `N(x, y, u)` is invariant under permutations of its arguments and e.g.
//! `∂N/∂y (x, y, u) = ∂₁N(y, x, u)`.

mod gradient;
mod hessian;
mod identities;
mod value;

use serde::{Deserialize, Serialize};

use crate::amoeba::{Chamber, ChamberLabel};

pub use gradient::{grad_2var, grad_in_chamber, grad_ronkin, grad_ronkin_with, GRAD_TOL};
pub use hessian::{
    hessian_2var, hessian_closed, hessian_closed_in, hessian_quadrature, hessian_quadrature_in,
    normal_form_params, normal_form_params_in, SINGULAR_LOCUS_TOL,
};
pub use identities::{
    dilog_integral_identity, elliptic_zero_identity, smyth_2var, smyth_3var, ZeroIdentity,
};
pub use value::{
    circle_mean_log_max, ronkin_1var, ronkin_2var_closed, ronkin_2var_quadrature,
    ronkin_3var_quadrature, value_options, VALUE_TOL,
};

/// Coordinate permutations giving the `y` and `u` partials from the `x` one:
/// `∂_y N(p) = ∂_x N(p ∘ PERM_Y)`, `∂_u N(p) = ∂_x N(p ∘ PERM_U)`.
pub(crate) const PERM_X: [usize; 3] = [0, 1, 2];
pub(crate) const PERM_Y: [usize; 3] = [1, 0, 2];
pub(crate) const PERM_U: [usize; 3] = [2, 1, 0];

/// Parameters of the closed form for `∂²N/∂x²` and `∂²N/∂x∂y` in one chamber:
///
/// ```text
/// ∂²N/∂x²  = (2 g e^{2x} / π²) K(k)
/// ∂²N/∂x∂y = -(g / 2π²) (Q1 K(k) + Q2 Π(α1², k) + Q3 Π(α2², k))
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalFormParams {
    pub g: f64,
    pub k2: f64,
    pub alpha1_2: f64,
    pub alpha2_2: f64,
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
    pub chamber: Chamber,
    /// Set near `e^x = 1` or `e^y = e^u`, where the chamber block has a
    /// removable singularity. The fields then hold the limiting values
    /// (`Q3 = 0`).
    pub limit_form: bool,
}

/// Symmetric 3×3 Hessian of `N` in `(x, y, u)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hessian3 {
    m: [[f64; 3]; 3],
}

impl Hessian3 {
    pub fn from_entries(xx: f64, yy: f64, uu: f64, xy: f64, xu: f64, yu: f64) -> Self {
        Self { m: [[xx, xy, xu], [xy, yy, yu], [xu, yu, uu]] }
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.m[i][j]
    }

    pub fn matrix(&self) -> [[f64; 3]; 3] {
        self.m
    }

    pub fn det(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Largest entrywise relative difference `|a - b| / max(|a|, |b|, floor)`.
    pub fn max_rel_diff(&self, other: &Hessian3, floor: f64) -> f64 {
        let mut worst = 0f64;
        for i in 0..3 {
            for j in 0..3 {
                let (a, b) = (self.m[i][j], other.m[i][j]);
                worst = worst.max((a - b).abs() / a.abs().max(b.abs()).max(floor));
            }
        }
        worst
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GradResult {
    pub grad: [f64; 3],
    pub location: ChamberLabel,
}
