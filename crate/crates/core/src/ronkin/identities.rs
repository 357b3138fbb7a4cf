use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::elliptic::{ellip_k, ellip_pi};
use crate::hyperseries::{dilog, l_chi3, trilog};
use crate::quad::{integrate, QuadOptions};
use crate::{Error, Result};

/// Both sides of
/// `Li₂(-e^x) - Li₂(e^x) = ∫_{1-e^x}^{1+e^x} φ(r) ψ'(r) dr` with
/// `φ(r) = arccos((1 + r² - e^{2x}) / 2r)` and
/// `ψ(r) = arccos((r² - 1 - e^{2x}) / 2e^x)`.
///
/// In `s = r²` and then `s = s0 + (s1 - s0) sin²θ` the right side becomes
/// `-2 ∫_0^{π/2} φ(√s) dθ`.
pub fn dilog_integral_identity(x: f64) -> Result<(f64, f64)> {
    let xx = x.exp();
    if !(xx < 1.0) {
        return Err(Error::OutOfRange(format!("identity needs e^x < 1, got e^x = {xx}")));
    }
    let lhs = dilog(-xx)? - dilog(xx)?;
    let (s0, s1) = ((1.0 - xx) * (1.0 - xx), (1.0 + xx) * (1.0 + xx));
    let w = s1 - s0;
    let phi = |t: f64| {
        let sn = t.sin();
        let s = s0 + w * sn * sn;
        ((1.0 + s - xx * xx) / (2.0 * s.sqrt())).clamp(-1.0, 1.0).acos()
    };
    let opts = QuadOptions::with_tol(1e-15, 1e-13);
    let rhs = -2.0 * integrate(phi, 0.0, FRAC_PI_2, &opts)?.value;
    Ok((lhs, rhs))
}

/// The five terms of an identity between complete integrals that holds for
/// `a, b, c > 0` satisfying the three triangle-type inequalities
/// `1+a > b+c`, `1+b > a+c`, `1+c > a+b`, and their sum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroIdentity {
    pub terms: [f64; 5],
    pub sum: f64,
    /// Largest term magnitude, the natural scale for `sum`.
    pub scale: f64,
}

/// Evaluates
///
/// ```text
/// 2(1+a+b-c)(a-b)c / ((a-c)(c-b)) K(k)
///   + (1-a+b-c) Π(α1²) - (1+a-b-c) Π(α2²)
///   + (1+a)(b+c)(1-a+b-c) / ((1-a)(b-c)) Π(α3²)
///   - (1+b)(a+c)(1+a-b-c) / ((1-b)(a-c)) Π(α4²)
/// ```
///
/// with `k² = ξ / (16abc)`, `α1² = (1-a+b+c)(-1+a+b+c)/(4bc)`,
/// `α2² = (1+a-b+c)(-1+a+b+c)/(4ac)`, `α3² = α1² (b-c)²/(1-a)²` and
/// `α4² = α2² (a-c)²/(1-b)²`, which sums to zero.
pub fn elliptic_zero_identity(a: f64, b: f64, c: f64) -> Result<ZeroIdentity> {
    if !(a > 0.0 && b > 0.0 && c > 0.0) {
        return Err(Error::OutOfRange(format!("need a, b, c > 0, got ({a}, {b}, {c})")));
    }
    if !(1.0 + a > b + c && 1.0 + b > a + c && 1.0 + c > a + b) {
        return Err(Error::OutOfRange(format!("({a}, {b}, {c}) violates the inequalities")));
    }
    if a == 1.0 || b == 1.0 || a == c || b == c {
        return Err(Error::UnsupportedCase("degenerate coefficients"));
    }
    let xi = (1.0 + a + b - c) * (1.0 + a - b + c) * (1.0 - a + b + c) * (-1.0 + a + b + c);
    let k2 = xi / (16.0 * a * b * c);
    let a1 = (1.0 - a + b + c) * (-1.0 + a + b + c) / (4.0 * b * c);
    let a2 = (1.0 + a - b + c) * (-1.0 + a + b + c) / (4.0 * a * c);
    let a3 = a1 * (b - c) * (b - c) / ((1.0 - a) * (1.0 - a));
    let a4 = a2 * (a - c) * (a - c) / ((1.0 - b) * (1.0 - b));
    let terms = [
        2.0 * (1.0 + a + b - c) * (a - b) * c / ((a - c) * (c - b)) * ellip_k(k2)?,
        (1.0 - a + b - c) * ellip_pi(a1, k2)?,
        -(1.0 + a - b - c) * ellip_pi(a2, k2)?,
        (1.0 + a) * (b + c) * (1.0 - a + b - c) / ((1.0 - a) * (b - c)) * ellip_pi(a3, k2)?,
        -(1.0 + b) * (a + c) * (1.0 + a - b - c) / ((1.0 - b) * (a - c)) * ellip_pi(a4, k2)?,
    ];
    Ok(ZeroIdentity {
        terms,
        sum: terms.iter().sum(),
        scale: terms.iter().fold(0f64, |m, t| m.max(t.abs())),
    })
}

/// Mahler measure of `1 + z + w`: `(3√3 / 4π) L(χ₋₃, 2)`.
pub fn smyth_2var() -> Result<f64> {
    Ok(3.0 * 3f64.sqrt() / (4.0 * PI) * l_chi3(2.0)?)
}

/// Mahler measure of `1 + z + a w + a t` for `a > 0`:
/// `(2/π²)(Li₃(a) - Li₃(-a))` when `a ≤ 1`, and
/// `log a + (2/π²)(Li₃(1/a) - Li₃(-1/a))` when `a ≥ 1`.
pub fn smyth_3var(a: f64) -> Result<f64> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::BadParameter(format!("need a > 0, got {a}")));
    }
    let odd = |t: f64| -> Result<f64> { Ok(2.0 / (PI * PI) * (trilog(t)? - trilog(-t)?)) };
    if a <= 1.0 {
        odd(a)
    } else {
        Ok(a.ln() + odd(1.0 / a)?)
    }
}
