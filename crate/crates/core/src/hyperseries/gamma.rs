use std::f64::consts::PI;

use statrs::function::gamma::ln_gamma;

fn is_pole(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

/// `sin(πx)` with exact zeros at integers and exact `±1` at half-integers.
pub fn sin_pi(x: f64) -> f64 {
    // Reduce to r in [-1, 1] with sin(πx) = sin(πr).
    let mut r = x - 2.0 * (x / 2.0).round();
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    (PI * r).sin()
}

/// `Γ(x)` by the exact recurrence from `Γ(1) = 1` or `Γ(1/2) = √π` when
/// `x > 0` is an integer or half-integer small enough not to overflow.
fn gamma_half_integer(x: f64) -> Option<f64> {
    if !(x > 0.0 && x <= 171.0 && (2.0 * x).fract() == 0.0) {
        return None;
    }
    let (mut g, mut t) = if x.fract() == 0.0 { (1.0, 1.0) } else { (PI.sqrt(), 0.5) };
    while t < x {
        g *= t;
        t += 1.0;
    }
    Some(g)
}

/// `(ln|Γ(x)|, sign Γ(x))` for real `x` that is not a non-positive integer.
pub fn gamma_signed_ln(x: f64) -> Option<(f64, f64)> {
    if is_pole(x) || x.is_nan() {
        return None;
    }
    if x >= 0.5 {
        if let Some(g) = gamma_half_integer(x) {
            return Some((g.ln(), 1.0));
        }
        return Some((ln_gamma(x), 1.0));
    }
    // Γ(x) = π / (sin(πx) Γ(1-x))
    let s = sin_pi(x);
    let (l, _) = gamma_signed_ln(1.0 - x)?;
    Some((PI.ln() - s.abs().ln() - l, s.signum()))
}

/// `1/Γ(x)`, which is entire: zero at the poles of `Γ`.
pub fn rgamma(x: f64) -> f64 {
    match gamma_signed_ln(x) {
        Some((l, s)) => s * (-l).exp(),
        None => 0.0,
    }
}
