use std::f64::consts::PI;

use num_complex::Complex64;

use crate::{Error, Result};

pub const ZETA2: f64 = PI * PI / 6.0;
pub const ZETA3: f64 = 1.202_056_903_159_594_3;

/// Even-index Bernoulli numbers `B_2, B_4, …, B_30`.
const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// `Li₂(z) = Σ_{n≥1} B_n u^{n+1}/(n+1)!` with `u = -ln(1-z)`, valid for
/// `|u| < 2π`; callers keep `|z| ≤ 1`, `Re z ≤ 1/2`, so `|u| < 1.8`.
fn li2_bernoulli(z: Complex64) -> Complex64 {
    let u = -(Complex64::new(1.0, 0.0) - z).ln();
    let u2 = u * u;
    let mut sum = u - u2 / 4.0;
    let mut pow = u;
    for (k, b) in BERNOULLI_EVEN.iter().enumerate() {
        let n = 2 * k + 2;
        pow *= u2;
        let term = pow * (*b / factorial(n + 1));
        sum += term;
        if term.norm() < 1e-17 * sum.norm() {
            break;
        }
    }
    sum
}

/// Complex dilogarithm on the principal branch (cut `[1, ∞)`).
pub fn li2(z: Complex64) -> Complex64 {
    if z == Complex64::new(0.0, 0.0) {
        return z;
    }
    if z == Complex64::new(1.0, 0.0) {
        return Complex64::new(ZETA2, 0.0);
    }
    if z.norm() > 1.0 {
        // Li₂(z) = -ζ(2) - ln²(-z)/2 - Li₂(1/z)
        let l = (-z).ln();
        return -li2(z.inv()) - l * l / 2.0 - ZETA2;
    }
    if z.re > 0.5 {
        // Li₂(z) = ζ(2) - ln z ln(1-z) - Li₂(1-z)
        let w = Complex64::new(1.0, 0.0) - z;
        return -li2_bernoulli(w) - z.ln() * w.ln() + ZETA2;
    }
    li2_bernoulli(z)
}

/// Real dilogarithm on `[-1, 1]`.
pub fn dilog(x: f64) -> Result<f64> {
    if !(x.abs() <= 1.0) {
        return Err(Error::OutOfConvergenceRegion(x));
    }
    Ok(li2(Complex64::new(x, 0.0)).re)
}

/// Real trilogarithm on `[-1, 1]`.
pub fn trilog(x: f64) -> Result<f64> {
    if !(x.abs() <= 1.0) {
        return Err(Error::OutOfConvergenceRegion(x));
    }
    Ok(trilog_unchecked(x))
}

fn trilog_unchecked(x: f64) -> f64 {
    if x.abs() <= 0.5 {
        let mut pow = x;
        let mut sum = 0.0;
        for k in 1..200 {
            let kf = k as f64;
            let term = pow / (kf * kf * kf);
            sum += term;
            if term.abs() < 1e-18 * sum.abs().max(f64::MIN_POSITIVE) {
                break;
            }
            pow *= x;
        }
        return sum;
    }
    if x < 0.0 {
        // Li₃(x) + Li₃(-x) = Li₃(x²)/4
        return 0.25 * trilog_unchecked(x * x) - trilog_unchecked(-x);
    }
    // x in (1/2, 1]: expansion in μ = ln x around μ = 0,
    // Li₃(e^μ) = ζ(3) + ζ(2)μ + (3/2 - ln(-μ))μ²/2 - μ³/12 + Σ_{k≥4} ζ(3-k) μ^k/k!
    let mu = x.ln();
    if mu == 0.0 {
        return ZETA3;
    }
    let mut sum = ZETA3 + ZETA2 * mu + (1.5 - (-mu).ln()) * mu * mu / 2.0 - mu.powi(3) / 12.0;
    // ζ(3-k) vanishes for odd k ≥ 5; for even k, ζ(3-k) = -B_{k-2}/(k-2).
    for (i, b) in BERNOULLI_EVEN.iter().enumerate() {
        let k = 2 * i + 4;
        let zeta = -b / (k - 2) as f64;
        let term = zeta * mu.powi(k as i32) / factorial(k);
        sum += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    sum
}

/// Bloch–Wigner dilogarithm `D(z) = Im Li₂(z) + arg(1-z) ln|z|`.
pub fn bloch_wigner(z: Complex64) -> Result<f64> {
    if z == Complex64::new(0.0, 0.0) || z == Complex64::new(1.0, 0.0) {
        return Err(Error::UndefinedAt(format!("{z}")));
    }
    if z.im == 0.0 {
        return Ok(0.0);
    }
    if z.norm() > 1.0 {
        return Ok(-bloch_wigner(z.inv())?);
    }
    let one_minus = Complex64::new(1.0, 0.0) - z;
    Ok(li2(z).im + one_minus.arg() * z.norm().ln())
}

/// Hurwitz zeta `ζ(s, a) = Σ_{n≥0} (n+a)^{-s}` for `s > 1`, `a > 0`, by
/// Euler–Maclaurin summation.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(Error::OutOfConvergenceRegion(s));
    }
    if !(a > 0.0) {
        return Err(Error::BadParameter(format!("Hurwitz zeta with a = {a}")));
    }
    const N: usize = 16;
    let mut sum = 0.0;
    for n in 0..N {
        sum += (n as f64 + a).powf(-s);
    }
    let w = N as f64 + a;
    sum += w.powf(1.0 - s) / (s - 1.0) + 0.5 * w.powf(-s);
    // Σ B_{2k}/(2k)! · s(s+1)…(s+2k-2) · w^{-s-2k+1}
    let mut rising = s;
    let mut wpow = w.powf(-s - 1.0);
    for (i, b) in BERNOULLI_EVEN.iter().enumerate() {
        let k = i + 1;
        let term = b / factorial(2 * k) * rising * wpow;
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
        rising *= (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        wpow /= w * w;
    }
    Ok(sum)
}

/// Dirichlet L-function of the character mod 3 with `χ(1) = 1`, `χ(2) = -1`:
/// `L(χ₋₃, s) = 3^{-s} (ζ(s, 1/3) - ζ(s, 2/3))`.
pub fn l_chi3(s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(Error::OutOfConvergenceRegion(s));
    }
    Ok(3f64.powf(-s) * (hurwitz_zeta(s, 1.0 / 3.0)? - hurwitz_zeta(s, 2.0 / 3.0)?))
}
