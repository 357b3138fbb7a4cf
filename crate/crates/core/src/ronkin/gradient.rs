use std::f64::consts::{FRAC_PI_2, PI};

use crate::amoeba::{membership, Chamber, Component, LabelKind, LogPoint, RadialLimit, CONTOUR_TOL};
use crate::quad::{integrate, QuadOptions};
use crate::{Error, Result};

use super::value::triangle_angles;
use super::{GradResult, PERM_U, PERM_X, PERM_Y};

/// Default absolute tolerance of the radial integrals.
pub const GRAD_TOL: f64 = 1e-12;

/// `∂N/∂x` at `p` using the radial integral of `chamber`.
///
/// In `s = r²` the integral is
/// `(1/π²) ∫_{r0²}^{r1²} φ(√s) ds / sqrt((B - s)(s - D))` with
/// `B = (e^y + e^u)²`, `D = (e^y - e^u)²` and
/// `φ(r) = arccos((1 + r² - e^{2x}) / 2r)`. When the lower limit is
/// `e^x - 1` the disc `r < e^x - 1` lies entirely in the region where
/// `|1 + r e^{iδ}| < e^x`, which contributes `π (π - ψ(r0))`.
fn dx_in_chamber(p: &LogPoint, chamber: Chamber, opts: &QuadOptions) -> Result<f64> {
    let [xx, yy, uu] = p.exps();
    let (lo, hi) = chamber.r_limit_exprs();
    let r0 = lo.eval(xx, yy, uu).abs();
    let r1 = hi.eval(xx, yy, uu);
    let (s0, s1) = (r0 * r0, r1 * r1);
    let w = s1 - s0;
    let b = (yy + uu) * (yy + uu);
    let d = (yy - uu) * (yy - uu);
    // Distances from the ends of the interval to the square-root zeros.
    let b_gap = (b - s1).max(0.0);
    let d_gap = (s0 - d).max(0.0);
    let phi = |s: f64| {
        let r = s.sqrt();
        ((1.0 + s - xx * xx) / (2.0 * r)).clamp(-1.0, 1.0).acos()
    };
    let mut total = 0.0;
    if w > 0.0 {
        let f = |t: f64| {
            let (sn, cs) = t.sin_cos();
            let s = s0 + w * sn * sn;
            let den = ((b_gap + w * cs * cs) * (d_gap + w * sn * sn)).sqrt();
            if den == 0.0 {
                return 0.0;
            }
            2.0 * w * sn * cs * phi(s) / den
        };
        total = integrate(f, 0.0, FRAC_PI_2, opts)?.value;
    }
    if lo == RadialLimit::XMinusOne {
        let c = (s0 - yy * yy - uu * uu) / (2.0 * yy * uu);
        total += PI * (PI - c.clamp(-1.0, 1.0).acos());
    }
    Ok(total / (PI * PI))
}

/// Full gradient at `p` using the radial integrals of `chamber`, which
/// need not be the chamber containing `p` (one-sided contour limits).
pub fn grad_in_chamber(p: &LogPoint, chamber: Chamber, opts: &QuadOptions) -> Result<[f64; 3]> {
    let mut g = [0.0; 3];
    for (i, perm) in [PERM_X, PERM_Y, PERM_U].into_iter().enumerate() {
        g[i] = dx_in_chamber(&p.permuted(perm), chamber.permuted(perm), opts)?;
    }
    Ok(g)
}

pub fn grad_ronkin(p: &LogPoint) -> Result<GradResult> {
    grad_ronkin_with(p, &QuadOptions::with_tol(GRAD_TOL, 0.0))
}

/// Gradient of the Ronkin function of `1 + z + w + t`.
///
/// Outside the amoeba it is the lattice point of the complement component.
/// On the contour the gradient is continuous, so the chamber given by the
/// raw residual signs supplies the value.
pub fn grad_ronkin_with(p: &LogPoint, opts: &QuadOptions) -> Result<GradResult> {
    if !p.is_finite() {
        return Err(Error::InvalidInput(format!("non-finite point {p}")));
    }
    let location = membership(p, CONTOUR_TOL);
    let exact = membership(p, 0.0);
    let grad = match exact.kind {
        LabelKind::OutsideAmoeba(c) => c.lattice_gradient(),
        LabelKind::Chamber(c) | LabelKind::OnContour { adjacent: Some(c), .. } => {
            grad_in_chamber(p, c, opts)?
        }
        LabelKind::OnContour { adjacent: None, .. } => Component::Constant.lattice_gradient(),
    };
    Ok(GradResult { grad, location })
}

/// Gradient of the Ronkin function of `1 + z + w`: `(α/π, β/π)` inside the
/// amoeba, a lattice point outside.
pub fn grad_2var(x: f64, y: f64) -> [f64; 2] {
    let (xx, yy) = (x.exp(), y.exp());
    if xx >= 1.0 + yy {
        [1.0, 0.0]
    } else if yy >= 1.0 + xx {
        [0.0, 1.0]
    } else if 1.0 >= xx + yy {
        [0.0, 0.0]
    } else {
        let (a, b) = triangle_angles(x, y);
        [a / PI, b / PI]
    }
}
