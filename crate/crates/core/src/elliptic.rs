//! Complete elliptic integrals through Carlson's symmetric forms, and the
//! reduction of `∫ s^j ds / sqrt(|(s-a)(s-b)(s-c)(s-d)|)` over `[c, b]` to
//! Legendre normal form.
//!
//! Conventions: `k2` is the squared modulus (`m` in some libraries) and
//! `alpha2` the characteristic of the third kind, so that
//!
//! ```text
//! K(k)     = ∫_0^{π/2} dθ / sqrt(1 - k² sin²θ)
//! E(k)     = ∫_0^{π/2} sqrt(1 - k² sin²θ) dθ
//! Π(α², k) = ∫_0^{π/2} dθ / ((1 - α² sin²θ) sqrt(1 - k² sin²θ))
//! ```

use crate::{Error, Result};

/// Relative tolerance of the duplication stopping rule.
const DUPLICATION_TOL: f64 = 1e-15;
const MAX_DUPLICATIONS: usize = 200;

/// `E(k)` at `k² = 1`. Kept as a boundary constant; [`complete_e`] itself
/// rejects `k² = 1`.
pub const E_AT_UNIT_MODULUS: f64 = 1.0;

/// Squared modulus `k²` of a complete integral; valid in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticModulus {
    k2: f64,
}

impl EllipticModulus {
    pub fn new(k2: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&k2) {
            return Err(Error::ModulusOutOfRange(k2));
        }
        Ok(Self { k2 })
    }

    pub fn k2(&self) -> f64 {
        self.k2
    }

    /// Complementary parameter `1 - k²`.
    pub fn complement(&self) -> f64 {
        1.0 - self.k2
    }
}

/// Parameters of `Π(α², k)`. Only the circular case `α² < 1` is supported.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThirdKindParams {
    alpha2: f64,
    modulus: EllipticModulus,
}

impl ThirdKindParams {
    pub fn new(alpha2: f64, k2: f64) -> Result<Self> {
        let modulus = EllipticModulus::new(k2)?;
        if !(alpha2 < 1.0) {
            return Err(Error::UnsupportedCase(
                "characteristic alpha^2 >= 1 (hyperbolic case)",
            ));
        }
        Ok(Self { alpha2, modulus })
    }

    pub fn alpha2(&self) -> f64 {
        self.alpha2
    }

    pub fn modulus(&self) -> EllipticModulus {
        self.modulus
    }
}

/// `R_C(x, y) = R_F(x, y, y)` for `x ≥ 0`, `y > 0`.
pub fn carlson_rc(x: f64, y: f64) -> Result<f64> {
    if x < 0.0 || y <= 0.0 || !x.is_finite() || !y.is_finite() {
        return Err(Error::InvalidInput(format!("R_C({x}, {y})")));
    }
    // R_C(x, y) = R_C(1, 1 + e) / sqrt(x) with e = y/x - 1 when x > 0.
    if x == 0.0 {
        return Ok(std::f64::consts::FRAC_PI_2 / y.sqrt());
    }
    let e = y / x - 1.0;
    Ok(rc_unit(e) / x.sqrt())
}

/// `R_C(1, 1 + e)` for `e > -1`.
fn rc_unit(e: f64) -> f64 {
    if e.abs() < 1e-3 {
        // Series in e; the e^6 term is below 1e-18.
        1.0 - e / 3.0 + e * e / 5.0 - e.powi(3) / 7.0 + e.powi(4) / 9.0 - e.powi(5) / 11.0
    } else if e > 0.0 {
        let r = e.sqrt();
        r.atan() / r
    } else {
        // atanh(r) = ln(1+r) - ln(1+e)/2 avoids forming 1 - r.
        let r = (-e).sqrt();
        (r.ln_1p() - 0.5 * e.ln_1p()) / r
    }
}

/// Carlson's symmetric integral of the first kind
/// `R_F(x, y, z) = ½ ∫_0^∞ dt / sqrt((t+x)(t+y)(t+z))`.
pub fn carlson_rf(x: f64, y: f64, z: f64) -> Result<f64> {
    for v in [x, y, z] {
        if v < 0.0 || !v.is_finite() {
            return Err(Error::InvalidInput(format!("R_F({x}, {y}, {z})")));
        }
    }
    if [x, y, z].iter().filter(|v| **v == 0.0).count() >= 2 {
        return Err(Error::DivergentIntegral("R_F with two or more zero arguments"));
    }
    let (x0, y0) = (x, y);
    let (mut x, mut y, mut z) = (x, y, z);
    let a0 = (x + y + z) / 3.0;
    let q = (3.0 * DUPLICATION_TOL).powf(-1.0 / 6.0)
        * (a0 - x).abs().max((a0 - y).abs()).max((a0 - z).abs());
    let mut a = a0;
    let mut pow4 = 1.0;
    for _ in 0..MAX_DUPLICATIONS {
        if pow4 * q < a.abs() {
            break;
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * sy + sx * sz + sy * sz;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        a = 0.25 * (a + lambda);
        pow4 *= 0.25;
    }
    let dx = (a0 - x0) * pow4 / a;
    let dy = (a0 - y0) * pow4 / a;
    let dz = -dx - dy;
    let e2 = dx * dy - dz * dz;
    let e3 = dx * dy * dz;
    let series = 1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0;
    Ok(series / a.sqrt())
}

/// Carlson's symmetric integral of the third kind
/// `R_J(x, y, z, p) = 3/2 ∫_0^∞ dt / ((t+p) sqrt((t+x)(t+y)(t+z)))`
/// for `p > 0`.
pub fn carlson_rj(x: f64, y: f64, z: f64, p: f64) -> Result<f64> {
    for v in [x, y, z] {
        if v < 0.0 || !v.is_finite() {
            return Err(Error::InvalidInput(format!("R_J({x}, {y}, {z}, {p})")));
        }
    }
    if !(p > 0.0) || !p.is_finite() {
        return Err(Error::UnsupportedCase("R_J with p <= 0 (Cauchy principal value)"));
    }
    if [x, y, z].iter().filter(|v| **v == 0.0).count() >= 2 {
        return Err(Error::DivergentIntegral("R_J with two or more zero arguments"));
    }
    let (x0, y0, z0) = (x, y, z);
    let (mut x, mut y, mut z, mut p) = (x, y, z, p);
    let a0 = (x + y + z + 2.0 * p) / 5.0;
    let delta = (p - x) * (p - y) * (p - z);
    let q = (0.25 * DUPLICATION_TOL).powf(-1.0 / 6.0)
        * (a0 - x)
            .abs()
            .max((a0 - y).abs())
            .max((a0 - z).abs())
            .max((a0 - p).abs());
    let mut a = a0;
    let mut pow4 = 1.0;
    let mut sum = 0.0;
    for _ in 0..MAX_DUPLICATIONS {
        if pow4 * q < a.abs() {
            break;
        }
        let (sx, sy, sz, sp) = (x.sqrt(), y.sqrt(), z.sqrt(), p.sqrt());
        let lambda = sx * sy + sx * sz + sy * sz;
        let d = (sp + sx) * (sp + sy) * (sp + sz);
        let e = pow4 * pow4 * pow4 * delta / (d * d);
        sum += pow4 * rc_unit(e) / d;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        p = 0.25 * (p + lambda);
        a = 0.25 * (a + lambda);
        pow4 *= 0.25;
    }
    let dx = (a0 - x0) * pow4 / a;
    let dy = (a0 - y0) * pow4 / a;
    let dz = (a0 - z0) * pow4 / a;
    let dp = -(dx + dy + dz) / 2.0;
    let e2 = dx * dy + dx * dz + dy * dz - 3.0 * dp * dp;
    let e3 = dx * dy * dz + 2.0 * e2 * dp + 4.0 * dp.powi(3);
    let e4 = (2.0 * dx * dy * dz + e2 * dp + 3.0 * dp.powi(3)) * dp;
    let e5 = dx * dy * dz * dp * dp;
    let series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0;
    Ok(pow4 * series / (a * a.sqrt()) + 6.0 * sum)
}

/// `R_D(x, y, z) = R_J(x, y, z, z)`.
pub fn carlson_rd(x: f64, y: f64, z: f64) -> Result<f64> {
    carlson_rj(x, y, z, z)
}

pub fn complete_k(m: EllipticModulus) -> f64 {
    carlson_rf(0.0, m.complement(), 1.0).expect("1 - k^2 > 0 for a valid modulus")
}

pub fn complete_e(m: EllipticModulus) -> f64 {
    let kc2 = m.complement();
    let rf = carlson_rf(0.0, kc2, 1.0).expect("valid modulus");
    let rd = carlson_rd(0.0, kc2, 1.0).expect("valid modulus");
    rf - m.k2() * rd / 3.0
}

#[allow(non_snake_case)]
pub fn complete_Pi(p: ThirdKindParams) -> f64 {
    let kc2 = p.modulus().complement();
    let rf = carlson_rf(0.0, kc2, 1.0).expect("valid modulus");
    if p.alpha2() == 0.0 {
        return rf;
    }
    let rj = carlson_rj(0.0, kc2, 1.0, 1.0 - p.alpha2()).expect("alpha^2 < 1");
    rf + p.alpha2() * rj / 3.0
}

/// Checked convenience wrappers taking raw `k²`.
pub fn ellip_k(k2: f64) -> Result<f64> {
    Ok(complete_k(EllipticModulus::new(k2)?))
}

pub fn ellip_e(k2: f64) -> Result<f64> {
    Ok(complete_e(EllipticModulus::new(k2)?))
}

pub fn ellip_pi(alpha2: f64, k2: f64) -> Result<f64> {
    Ok(complete_Pi(ThirdKindParams::new(alpha2, k2)?))
}

/// `Π(β, k) - K(k) = (β/3) R_J(0, 1-k², 1, 1-β)`, without cancellation.
pub(crate) fn pi_minus_k_over_beta(beta: f64, m: EllipticModulus) -> Result<f64> {
    if !(beta < 1.0) {
        return Err(Error::UnsupportedCase("characteristic >= 1"));
    }
    Ok(carlson_rj(0.0, m.complement(), 1.0, 1.0 - beta)? / 3.0)
}

/// The exponent `j` of `s^j` in a reduced quartic integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuarticPower {
    Inverse,
    Zero,
    One,
}

impl QuarticPower {
    pub fn exponent(self) -> i32 {
        match self {
            QuarticPower::Inverse => -1,
            QuarticPower::Zero => 0,
            QuarticPower::One => 1,
        }
    }
}

impl TryFrom<i32> for QuarticPower {
    type Error = Error;

    fn try_from(j: i32) -> Result<Self> {
        match j {
            -1 => Ok(QuarticPower::Inverse),
            0 => Ok(QuarticPower::Zero),
            1 => Ok(QuarticPower::One),
            _ => Err(Error::BadParameter(format!("power j = {j} not in {{-1, 0, 1}}"))),
        }
    }
}

/// `coeff_k · K(k) + coeff_pi · Π(α², k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedIntegral {
    pub coeff_k: f64,
    pub coeff_pi: f64,
    pub modulus: EllipticModulus,
    pub pi_params: Option<ThirdKindParams>,
    pub power: QuarticPower,
}

impl ReducedIntegral {
    pub fn evaluate(&self) -> f64 {
        let k = complete_k(self.modulus);
        match self.pi_params {
            Some(p) => self.coeff_k * k + self.coeff_pi * complete_Pi(p),
            None => self.coeff_k * k,
        }
    }
}

/// Reduces `∫_c^b s^j ds / sqrt(|(s-a)(s-b)(s-c)(s-d)|)` with `a > b > c > d`
/// to complete integrals on normal form:
///
/// ```text
/// j =  0:  g K(k)
/// j =  1:  d g K(k) + g (c - d) Π(α², k)
/// j = -1:  (g/d) K(k) + g (1/c - 1/d) Π(α² d/c, k)
/// ```
///
/// with `k² = (b-c)(a-d) / ((a-c)(b-d))`, `α² = (b-c)/(b-d)` and
/// `g = 2 / sqrt((a-c)(b-d))`. The quartic is positive on `(c, b)`.
pub fn legendre_reduce(a: f64, b: f64, c: f64, d: f64, j: i32) -> Result<ReducedIntegral> {
    let power = QuarticPower::try_from(j)?;
    if !(a > b && b > c && c > d) || ![a, b, c, d].iter().all(|v| v.is_finite()) {
        return Err(Error::BadOrdering { a, b, c, d });
    }
    let k2 = (b - c) * (a - d) / ((a - c) * (b - d));
    let alpha2 = (b - c) / (b - d);
    let g = 2.0 / ((a - c) * (b - d)).sqrt();
    let modulus = EllipticModulus::new(k2)?;
    let reduced = match power {
        QuarticPower::Zero => ReducedIntegral {
            coeff_k: g,
            coeff_pi: 0.0,
            modulus,
            pi_params: None,
            power,
        },
        QuarticPower::One => ReducedIntegral {
            coeff_k: d * g,
            coeff_pi: g * (c - d),
            modulus,
            pi_params: Some(ThirdKindParams::new(alpha2, k2)?),
            power,
        },
        QuarticPower::Inverse => {
            if c <= 0.0 || d == 0.0 {
                return Err(Error::PoleOnInterval);
            }
            ReducedIntegral {
                coeff_k: g / d,
                coeff_pi: g * (1.0 / c - 1.0 / d),
                modulus,
                pi_params: Some(ThirdKindParams::new(alpha2 * d / c, k2)?),
                power,
            }
        }
    };
    Ok(reduced)
}
