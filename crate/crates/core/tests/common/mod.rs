//! Reference implementations used only by tests. None of these call into
//! `ronkin_core`; they trade speed for directness.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on `P_n`.
pub fn gl_rule(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// Composite 20-point Gauss-Legendre rule with `panels` equal panels.
pub fn composite<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    let rule = RULE.get_or_init(|| gl_rule(20));
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let lo = a + h * p as f64;
        let mid = lo + h / 2.0;
        total += rule.iter().map(|(x, w)| w * f(mid + h / 2.0 * x)).sum::<f64>() * h / 2.0;
    }
    total
}

/// Composite rule with extra breakpoints inside `[a, b]`.
pub fn composite_breaks<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, breaks: &[f64], panels: usize) -> f64 {
    let mut pts = vec![a];
    pts.extend(breaks.iter().copied().filter(|t| *t > a && *t < b));
    pts.push(b);
    pts.sort_by(|x, y| x.total_cmp(y));
    pts.windows(2).map(|w| composite(&f, w[0], w[1], panels)).sum()
}

/// `K(m)` with `m = k²` through the arithmetic-geometric mean.
pub fn agm_k(m: f64) -> f64 {
    let (mut a, mut b) = (1.0f64, (1.0 - m).sqrt());
    for _ in 0..64 {
        if (a - b).abs() <= 2.0 * f64::EPSILON * a {
            break;
        }
        let t = (a + b) / 2.0;
        b = (a * b).sqrt();
        a = t;
    }
    PI / (2.0 * a)
}

/// `E(m)` by direct quadrature.
pub fn quad_e(m: f64) -> f64 {
    composite(|t| (1.0 - m * t.sin().powi(2)).sqrt(), 0.0, FRAC_PI_2, 200)
}

/// `Π(n, m)` by direct quadrature; needs `n < 1`, `m < 1`.
pub fn quad_pi(n: f64, m: f64) -> f64 {
    composite(
        |t| {
            let s2 = t.sin().powi(2);
            1.0 / ((1.0 - n * s2) * (1.0 - m * s2).sqrt())
        },
        0.0,
        FRAC_PI_2,
        400,
    )
}

/// `∫_c^b s^j ds / sqrt(|(s-a)(s-b)(s-c)(s-d)|)` after `s = c + (b-c) sin²θ`.
pub fn quad_quartic(a: f64, b: f64, c: f64, d: f64, j: i32) -> f64 {
    let w = b - c;
    composite(
        |t| {
            let s = c + w * t.sin().powi(2);
            2.0 * s.powi(j) / ((a - s) * (s - d)).sqrt()
        },
        0.0,
        FRAC_PI_2,
        200,
    )
}

/// `Li_s(x)` for `s ≥ 2`, `x ≤ 1` from `x/Γ(s) ∫_0^∞ t^{s-1} e^{-t} / (1 - x e^{-t}) dt`.
pub fn polylog(s: i32, x: f64) -> f64 {
    let gamma: f64 = (1..s).map(|k| k as f64).product();
    let f = |t: f64| {
        if t == 0.0 {
            return if s == 2 && x == 1.0 { 1.0 } else { 0.0 };
        }
        let e = (-t).exp();
        let den = if x == 1.0 { -(-t).exp_m1() } else { 1.0 - x * e };
        t.powi(s - 1) * e / den
    };
    x / gamma * composite_breaks(f, 0.0, 60.0, &[1.0, 5.0], 60)
}

/// `ζ(3) = (5/2) Σ (-1)^{n+1} / (n³ C(2n, n))`.
pub fn zeta3() -> f64 {
    let mut sum = 0.0;
    let mut binom = 1.0;
    for n in 1..40 {
        let nf = n as f64;
        binom *= (2.0 * nf) * (2.0 * nf - 1.0) / (nf * nf);
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        sum += sign / (nf * nf * nf * binom);
    }
    2.5 * sum
}

/// `L(χ₋₃, 2) = ∫_0^∞ v e^{-v} / (1 + e^{-v} + e^{-2v}) dv`.
pub fn l_chi3_2() -> f64 {
    composite(
        |v| {
            let e = (-v).exp();
            v * e / (1.0 + e + e * e)
        },
        0.0,
        60.0,
        120,
    )
}

/// Ronkin function of `1 + z + w` from
/// `(1/π) ∫_0^π log max(|1 + Y e^{iφ}|, X) dφ`.
pub fn ronkin2(x: f64, y: f64) -> f64 {
    let (xx, yy) = (x.exp(), y.exp());
    let f = |p: f64| {
        let m = (1.0 + 2.0 * yy * p.cos() + yy * yy).sqrt();
        m.max(xx).ln()
    };
    let c = (xx * xx - 1.0 - yy * yy) / (2.0 * yy);
    let breaks: Vec<f64> = if c.abs() < 1.0 { vec![c.acos()] } else { vec![] };
    composite_breaks(f, 0.0, PI, &breaks, 40) / PI
}

/// Ronkin function of `1 + z + w + t` from the two-dimensional integral of
/// `log max(|1 + Y e^{iφ} + U e^{iψ}|, X)` over `[0, π] × [0, 2π]`.
pub fn ronkin3(x: f64, y: f64, u: f64) -> f64 {
    let (xx, yy, uu) = (x.exp(), y.exp(), u.exp());
    let inner = |p: f64| {
        let (wr, wi) = (1.0 + yy * p.cos(), yy * p.sin());
        let w = (wr * wr + wi * wi).sqrt();
        let arg = wi.atan2(wr);
        let f = |q: f64| {
            let m2 = w * w + uu * uu + 2.0 * w * uu * (q - arg).cos();
            (0.5 * m2.ln()).max(x)
        };
        let c = (xx * xx - w * w - uu * uu) / (2.0 * w * uu);
        let mut breaks = vec![];
        if c.abs() < 1.0 {
            let t = c.acos();
            for b in [arg + t, arg - t] {
                breaks.push(b.rem_euclid(2.0 * PI));
            }
        }
        composite_breaks(f, 0.0, 2.0 * PI, &breaks, 8) / (2.0 * PI)
    };
    // The inner integral has kinks in φ where the level set touches the
    // circle; a fine outer grid keeps their effect small.
    composite(inner, 0.0, PI, 400) / PI
}

/// Clausen function `Cl₂(θ) = -∫_0^θ log(2 sin(t/2)) dt`. The `log t` part is
/// integrated exactly; the remainder `log(2 sin(t/2) / t)` is smooth.
pub fn clausen2(theta: f64) -> f64 {
    let smooth = composite(
        |t| if t == 0.0 { 0.0 } else { (2.0 * (t / 2.0).sin() / t).ln() },
        0.0,
        theta,
        50,
    );
    -(theta * theta.ln() - theta + smooth)
}
