use std::f64::consts::PI;

use num_complex::Complex64;

use crate::amoeba::{in_amoeba_2var, LogPoint};
use crate::hyperseries::{bloch_wigner, li2};
use crate::quad::{integrate_pieces, QuadOptions};
use crate::{Error, Result};

/// Default absolute tolerance for Ronkin function values.
pub const VALUE_TOL: f64 = 1e-7;

pub fn value_options(tol: f64) -> QuadOptions {
    QuadOptions { abs_tol: tol, rel_tol: 0.0, max_subdivisions: 4000 }
}

/// Ronkin function of `a_n Π (z - b_k)` by Jensen's formula:
/// `N(x) = log|a_n| + Σ_k max(log|b_k|, x)`.
pub fn ronkin_1var(roots: &[Complex64], lead: Complex64, x: f64) -> Result<f64> {
    if lead.norm() == 0.0 {
        return Err(Error::BadCoefficients("leading coefficient is zero"));
    }
    Ok(lead.norm().ln() + roots.iter().map(|b| b.norm().ln().max(x)).sum::<f64>())
}

/// `(1/2π) ∫_0^{2π} max(log|1 + r e^{iδ}|, x) dδ`, in closed form.
///
/// The integrand exceeds `x` for `|δ| < δ₀` with
/// `cos δ₀ = (e^{2x} - 1 - r²) / 2r`, and on that arc
/// `∫ log|1 + r e^{iδ}| dδ = -2 Im Li₂(-r e^{iδ₀})` for `r ≤ 1`
/// (expand the logarithm in powers of `r e^{iδ}`), with the analogous
/// expansion in `1/r` for `r > 1`.
pub fn circle_mean_log_max(r: f64, x: f64) -> f64 {
    if r < 1e-300 {
        return x.max(0.0);
    }
    let cos0 = ((2.0 * x).exp() - 1.0 - r * r) / (2.0 * r);
    let d0 = cos0.clamp(-1.0, 1.0).acos();
    let arc = if r <= 1.0 {
        -2.0 * li2(Complex64::from_polar(-r, d0)).im
    } else {
        2.0 * d0 * r.ln() - 2.0 * li2(Complex64::from_polar(-1.0 / r, d0)).im
    };
    (arc + (2.0 * PI - 2.0 * d0) * x) / (2.0 * PI)
}

/// Ronkin function of `1 + z + w` by the closed form
/// `N = (α x + β y + D(e^{x + iβ})) / π` inside the amoeba, where `α` and
/// `β` are the angles opposite the sides `e^x` and `e^y` of the triangle with
/// sides `1, e^x, e^y`; `max(0, x, y)` outside.
pub fn ronkin_2var_closed(x: f64, y: f64) -> f64 {
    if !in_amoeba_2var(x, y) {
        return 0f64.max(x).max(y);
    }
    let (alpha, beta) = triangle_angles(x, y);
    let d = bloch_wigner(Complex64::from_polar(x.exp(), beta)).unwrap_or(0.0);
    (alpha * x + beta * y + d) / PI
}

/// Angles `(α, β)` opposite `e^x` and `e^y` in the triangle `1, e^x, e^y`.
pub(crate) fn triangle_angles(x: f64, y: f64) -> (f64, f64) {
    let (xx, yy) = (x.exp(), y.exp());
    let alpha = ((1.0 + yy * yy - xx * xx) / (2.0 * yy)).clamp(-1.0, 1.0).acos();
    let beta = ((1.0 + xx * xx - yy * yy) / (2.0 * xx)).clamp(-1.0, 1.0).acos();
    (alpha, beta)
}

/// `(1/π) ∫_0^π max(log|1 + e^{y + iθ}|, x) dθ`, the one-dimensional form
/// left after integrating out the `z` circle with Jensen's formula.
pub fn ronkin_2var_quadrature(x: f64, y: f64, opts: &QuadOptions) -> Result<f64> {
    let yy = y.exp();
    let level = (2.0 * x).exp();
    let f = |t: f64| (0.5 * (1.0 + yy * yy + 2.0 * yy * t.cos()).ln()).max(x);
    let mut pts = vec![0.0];
    // Kink where |1 + Y e^{iθ}| = X.
    let c = (level - 1.0 - yy * yy) / (2.0 * yy);
    if c.abs() < 1.0 {
        pts.push(c.acos());
    }
    pts.push(PI);
    Ok(integrate_pieces(f, &pts, opts)?.value / PI)
}

/// Ronkin function of `1 + z + w + t` at `p` by quadrature.
///
/// Jensen's formula in `z` and the closed-form circle average
/// [`circle_mean_log_max`] in the relative angle leave
/// `N = (1/π) ∫_0^π G(|e^y + e^{u + iγ}|, x) dγ`, integrated adaptively with
/// breakpoints where `|e^y + e^{u+iγ}| = |1 ± e^x|` (the kinks of `G`).
pub fn ronkin_3var_quadrature(p: &LogPoint, opts: &QuadOptions) -> Result<f64> {
    if !p.is_finite() {
        return Err(Error::InvalidInput(format!("non-finite point {p}")));
    }
    let [xx, yy, uu] = p.exps();
    let x = p.x;
    let radius = |g: f64| (yy * yy + uu * uu + 2.0 * yy * uu * g.cos()).max(0.0).sqrt();
    let f = |g: f64| circle_mean_log_max(radius(g), x);
    let mut pts = vec![0.0, PI];
    for rr in [(1.0 - xx).abs(), 1.0 + xx] {
        let c = (rr * rr - yy * yy - uu * uu) / (2.0 * yy * uu);
        if c.abs() < 1.0 {
            pts.push(c.acos());
        }
    }
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup();
    Ok(integrate_pieces(f, &pts, opts)?.value / PI)
}
