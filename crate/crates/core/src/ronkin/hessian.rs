use std::f64::consts::{FRAC_PI_2, PI};

use crate::amoeba::{membership, quartic_params, Chamber, LabelKind, LogPoint, CONTOUR_TOL};
use crate::elliptic::{
    complete_Pi, complete_k, pi_minus_k_over_beta, EllipticModulus, ThirdKindParams,
};
use crate::quad::{integrate, QuadOptions};
use crate::{Error, Result};

use super::{Hessian3, NormalFormParams};

/// Relative distance to `e^x = 1` or `e^y = e^u` below which the chamber
/// blocks are replaced by their limit.
pub const SINGULAR_LOCUS_TOL: f64 = 1e-7;

const PERM_XU: [usize; 3] = [0, 2, 1];
const PERM_YU: [usize; 3] = [1, 2, 0];
const PERM_Y: [usize; 3] = [1, 0, 2];
const PERM_U: [usize; 3] = [2, 1, 0];

fn chamber_of(p: &LogPoint) -> Result<Chamber> {
    match membership(p, CONTOUR_TOL).kind {
        LabelKind::Chamber(c) => Ok(c),
        _ => Err(Error::NotInChamber),
    }
}

/// `(∂²N/∂x², ∂²N/∂x∂y)` by quadrature over the interval between the third
/// and second largest quartic roots.
///
/// With `s = s0 + (s1 - s0) sin²θ` the factor `(s - s0)(s1 - s)` of the
/// quartic cancels against `ds`, leaving `ds / sqrt|Q| = 2 dθ / sqrt(...)`
/// where the remaining factors stay away from zero.
fn xx_xy_quadrature(p: &LogPoint, chamber: Chamber, opts: &QuadOptions) -> Result<(f64, f64)> {
    let q = quartic_params(p);
    let order = chamber.quartic_order();
    let [a, s1, s0, d] = order.map(|r| q.root(r));
    let w = s1 - s0;
    let (a_gap, d_gap) = ((a - s1).max(0.0), (s0 - d).max(0.0));
    if w <= 0.0 {
        return Err(Error::NotInChamber);
    }
    let weight = |t: f64| {
        let (sn, cs) = t.sin_cos();
        let s = s0 + w * sn * sn;
        (s, 2.0 / ((a_gap + w * cs * cs) * (d_gap + w * sn * sn)).sqrt())
    };
    let xx = p.x.exp();
    let i0 = integrate(|t| weight(t).1, 0.0, FRAC_PI_2, opts)?.value;
    let (p1, p2) = (q.p1, q.p2);
    let num = integrate(
        |t| {
            let (s, wt) = weight(t);
            let inv = if p2 == 0.0 { 0.0 } else { p2 / s };
            (s + p1 + inv) * wt
        },
        0.0,
        FRAC_PI_2,
        opts,
    )?
    .value;
    Ok((2.0 * xx * xx * i0 / (PI * PI), -num / (2.0 * PI * PI)))
}

fn assemble<F: FnMut(&LogPoint, Chamber) -> Result<(f64, f64)>>(
    p: &LogPoint,
    chamber: Chamber,
    mut entries: F,
) -> Result<Hessian3> {
    let at = |perm: [usize; 3]| (p.permuted(perm), chamber.permuted(perm));
    let (xx, xy) = entries(p, chamber)?;
    let (q, c) = at(PERM_Y);
    let (yy, _) = entries(&q, c)?;
    let (q, c) = at(PERM_U);
    let (uu, _) = entries(&q, c)?;
    let (q, c) = at(PERM_XU);
    let (_, xu) = entries(&q, c)?;
    let (q, c) = at(PERM_YU);
    let (_, yu) = entries(&q, c)?;
    Ok(Hessian3::from_entries(xx, yy, uu, xy, xu, yu))
}

pub fn hessian_quadrature(p: &LogPoint) -> Result<Hessian3> {
    hessian_quadrature_in(p, chamber_of(p)?, &QuadOptions::with_tol(1e-15, 1e-12))
}

/// Hessian by quadrature using the root ordering of `chamber`. Entries other
/// than `xx` and `xy` come from the same two integrals at permuted points.
pub fn hessian_quadrature_in(p: &LogPoint, chamber: Chamber, opts: &QuadOptions) -> Result<Hessian3> {
    assemble(p, chamber, |q, c| xx_xy_quadrature(q, c, opts))
}

fn near_singular_locus(p: &LogPoint) -> bool {
    let [xx, yy, uu] = p.exps();
    let scale = 1f64.max(xx).max(yy).max(uu);
    (1.0 - xx).abs() < SINGULAR_LOCUS_TOL * scale || (yy - uu).abs() < SINGULAR_LOCUS_TOL * scale
}

/// The chamber block of `(g, k², α1², α2², Q1, Q2, Q3)`.
fn chamber_block(p: &LogPoint, chamber: Chamber) -> NormalFormParams {
    let [x, y, u] = p.exps();
    let xi = (1.0 + x + y - u) * (1.0 + x - y + u) * (1.0 - x + y + u) * (-1.0 + x + y + u);
    let e = x * y * u;
    let q2 = (1.0 - x + y - u) * (1.0 - x - y + u);
    let q3 = (u + y) * (1.0 - x + y - u) * (1.0 + x) * (1.0 - x - y + u) / ((u - y) * (x - 1.0));
    let ratio = (y - u) * (y - u) / ((1.0 - x) * (1.0 - x));
    let (g, k2, alpha1_2, alpha2_2, q1, q2, q3) = match chamber.0 {
        [true, true, true] | [true, false, false] => {
            let a1 = (1.0 - x + y + u) * (-1.0 + x + y + u) / (4.0 * y * u);
            let q1 = 2.0 * y * (x * x + y * y + u * u - 1.0 - 2.0 * y * u) / (y - u);
            (0.5 / e.sqrt(), xi / (16.0 * e), a1, a1 * ratio, q1, q2, q3)
        }
        [false, true, true] | [false, false, false] => {
            let a1 = 4.0 * x / ((1.0 + x + y - u) * (1.0 + x - y + u));
            let q1 = 2.0 * y * (x * x + y * y + u * u - 1.0 - 2.0 * y * u) / (y - u);
            (2.0 / xi.sqrt(), 16.0 * e / xi, a1, a1 * ratio, q1, q2, q3)
        }
        [false, false, true] | [false, true, false] => {
            let a1 = (1.0 + x - y + u) * (1.0 + x + y - u) / (4.0 * x);
            let q1 = 2.0 * x * (x * x + y * y - u * u + 1.0 - 2.0 * x) / (x - 1.0);
            (0.5 / e.sqrt(), xi / (16.0 * e), a1, a1 / ratio, q1, -q2, -q3)
        }
        [true, false, true] | [true, true, false] => {
            let a1 = 4.0 * y * u / ((1.0 - x + y + u) * (-1.0 + x + y + u));
            let q1 = -2.0 * x * (x * x + y * y - u * u + 1.0 - 2.0 * x) / (1.0 - x);
            (2.0 / xi.sqrt(), 16.0 * e / xi, a1, a1 / ratio, q1, -q2, -q3)
        }
    };
    NormalFormParams { g, k2, alpha1_2, alpha2_2, q1, q2, q3, chamber, limit_form: false }
}

/// Generic reduction of the quadrature integrals with the roots
/// `a > b > c > d` in chamber order: `g`, `k²`, `α² = (b-c)/(b-d)` and
/// `β = α² d / c`.
struct Generic {
    g: f64,
    m: EllipticModulus,
    alpha2: f64,
    beta: f64,
    c: f64,
    d: f64,
    p1: f64,
    p2: f64,
}

fn generic(p: &LogPoint, chamber: Chamber) -> Result<Generic> {
    let q = quartic_params(p);
    let [a, b, c, d] = chamber.quartic_order().map(|r| q.root(r));
    let k2 = (b - c) * (a - d) / ((a - c) * (b - d));
    let alpha2 = (b - c) / (b - d);
    Ok(Generic {
        g: 2.0 / ((a - c) * (b - d)).sqrt(),
        m: EllipticModulus::new(k2)?,
        alpha2,
        beta: if c > 0.0 { alpha2 * d / c } else { 0.0 },
        c,
        d,
        p1: q.p1,
        p2: q.p2,
    })
}

/// Mixed entry from the generic reduction, written without the `1/d` of
/// the `s⁻¹` integral:
/// `∫ ds / (s sqrt|Q|) = g (Π(β)/c - α² (Π(β) - K)/(β c))`.
fn xy_generic(gen: &Generic) -> Result<f64> {
    let k = complete_k(gen.m);
    let pi_a = complete_Pi(ThirdKindParams::new(gen.alpha2, gen.m.k2())?);
    let mut sum = (gen.d + gen.p1) * k + (gen.c - gen.d) * pi_a;
    if gen.p2 != 0.0 {
        let pi_b = complete_Pi(ThirdKindParams::new(gen.beta, gen.m.k2())?);
        let rj = pi_minus_k_over_beta(gen.beta, gen.m)?;
        sum += gen.p2 * (pi_b - gen.alpha2 * rj) / gen.c;
    }
    Ok(-gen.g * sum / (2.0 * PI * PI))
}

pub fn normal_form_params(p: &LogPoint) -> Result<NormalFormParams> {
    normal_form_params_in(p, chamber_of(p)?)
}

/// Closed-form parameters for the `x` entries at `p`, using the block of
/// `chamber`. Near `e^x = 1` or `e^y = e^u` the limit form is returned:
/// `Q3 = 0`, `Q1 = d + P1`, `Q2 = c - d`, `α1² = (b-c)/(b-d)` and
/// `α2² = α1² d/c` from the generic reduction.
pub fn normal_form_params_in(p: &LogPoint, chamber: Chamber) -> Result<NormalFormParams> {
    if !p.is_finite() {
        return Err(Error::InvalidInput(format!("non-finite point {p}")));
    }
    if near_singular_locus(p) {
        let gen = generic(p, chamber)?;
        return Ok(NormalFormParams {
            g: gen.g,
            k2: gen.m.k2(),
            alpha1_2: gen.alpha2,
            alpha2_2: gen.beta,
            q1: gen.d + gen.p1,
            q2: gen.c - gen.d,
            q3: 0.0,
            chamber,
            limit_form: true,
        });
    }
    Ok(chamber_block(p, chamber))
}

fn xx_xy_closed(p: &LogPoint, chamber: Chamber) -> Result<(f64, f64)> {
    let xx = p.x.exp();
    if near_singular_locus(p) {
        let gen = generic(p, chamber)?;
        let hxx = 2.0 * gen.g * xx * xx * complete_k(gen.m) / (PI * PI);
        return Ok((hxx, xy_generic(&gen)?));
    }
    let nf = chamber_block(p, chamber);
    let m = EllipticModulus::new(nf.k2)?;
    let k = complete_k(m);
    let hxx = 2.0 * nf.g * xx * xx * k / (PI * PI);
    let pi1 = complete_Pi(ThirdKindParams::new(nf.alpha1_2, nf.k2)?);
    let pi2 = complete_Pi(ThirdKindParams::new(nf.alpha2_2, nf.k2)?);
    let hxy = -nf.g * (nf.q1 * k + nf.q2 * pi1 + nf.q3 * pi2) / (2.0 * PI * PI);
    Ok((hxx, hxy))
}

pub fn hessian_closed(p: &LogPoint) -> Result<Hessian3> {
    hessian_closed_in(p, chamber_of(p)?)
}

/// Hessian from the closed chamber blocks of `chamber`.
pub fn hessian_closed_in(p: &LogPoint, chamber: Chamber) -> Result<Hessian3> {
    if !p.is_finite() {
        return Err(Error::InvalidInput(format!("non-finite point {p}")));
    }
    assemble(p, chamber, xx_xy_closed)
}

/// Hessian of the Ronkin function of `1 + z + w`. Inside the amoeba, with
/// `Δ` the area of the triangle with sides `1, e^x, e^y`,
///
/// ```text
/// H = (1/π) [[ e^{2x}/(2Δ),               -(e^{2x}+e^{2y}-1)/(4Δ) ],
///            [ -(e^{2x}+e^{2y}-1)/(4Δ),   e^{2y}/(2Δ)             ]]
/// ```
///
/// and zero outside.
pub fn hessian_2var(x: f64, y: f64) -> [[f64; 2]; 2] {
    let (xx, yy) = (x.exp(), y.exp());
    let q = 4.0 * xx * xx * yy * yy - (xx * xx + yy * yy - 1.0).powi(2);
    if q <= 0.0 || !(xx < 1.0 + yy && yy < 1.0 + xx && 1.0 < xx + yy) {
        return [[0.0; 2]; 2];
    }
    let area = 0.25 * q.sqrt();
    let off = -(xx * xx + yy * yy - 1.0) / (4.0 * area * PI);
    [[xx * xx / (2.0 * area * PI), off], [off, yy * yy / (2.0 * area * PI)]]
}
