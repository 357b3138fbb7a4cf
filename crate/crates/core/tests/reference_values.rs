//! Frozen reference values. Each literal was produced by an oracle in
//! `common` and is checked against that oracle here as well as against the
//! library.

mod common;

use common::*;
use num_complex::Complex64;
use ronkin_core::amoeba::LogPoint;
use ronkin_core::elliptic::{carlson_rd, carlson_rj, ellip_e, ellip_k, ellip_pi, legendre_reduce};
use ronkin_core::hyperseries::{bloch_wigner, gauss_2f1, gkz_phi, l_chi3, trilog, GkzSystem, ZETA3};
use ronkin_core::measure::{density, density_2var};
use ronkin_core::ronkin::*;
use std::f64::consts::PI;

const K_HALF: f64 = 1.8540746773013719;
const E_HALF: f64 = 1.3506438810476729;
const PI_QUARTER_HALF: f64 = 2.1676193607665528;
const K_SYMMETRIC: f64 = 2.3701853442961052;
const RJ_SAMPLE: f64 = 3.7625362015822033;
const L_CHI3_2: f64 = 0.78130241289648506;
const CLAUSEN_PI_3: f64 = 1.0149416064096521;
const MAHLER_2: f64 = 0.32306594721945003;
const MAHLER_3_ONE: f64 = 0.42627839881750573;
const MAHLER_3_HALF: f64 = 0.20463049930460789;
const DILOG_HALF: f64 = -1.0306547333886571;
const QUARTIC_4321: [f64; 3] = [0.88065839506670907, 2.1565156474996390, 5.3912891187491017];
const RONKIN2_SAMPLE: f64 = 0.42861637459544466;
const HXX_SYMMETRIC: f64 = 0.16981168256711102;

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

#[test]
fn literals_match_oracles() {
    assert!(close(K_HALF, agm_k(0.5), 1e-15));
    assert!(close(E_HALF, quad_e(0.5), 1e-14));
    assert!(close(PI_QUARTER_HALF, quad_pi(0.25, 0.5), 1e-14));
    assert!(close(K_SYMMETRIC, agm_k(0.84375), 1e-14));
    assert!(close(L_CHI3_2, l_chi3_2(), 1e-15));
    assert!(close(CLAUSEN_PI_3, clausen2(PI / 3.0), 1e-12));
    assert!(close(MAHLER_2, 3.0 * 3f64.sqrt() / (4.0 * PI) * l_chi3_2(), 1e-15));
    assert!(close(MAHLER_3_ONE, 7.0 * zeta3() / (2.0 * PI * PI), 1e-15));
    assert!(close(MAHLER_3_HALF, 2.0 / (PI * PI) * (polylog(3, 0.5) - polylog(3, -0.5)), 1e-14));
    assert!(close(DILOG_HALF, polylog(2, -0.5) - polylog(2, 0.5), 1e-14));
    for (j, v) in [-1, 0, 1].into_iter().zip(QUARTIC_4321) {
        assert!(close(v, quad_quartic(4.0, 3.0, 2.0, 1.0, j), 1e-13), "j={j}");
    }
    assert!(close(RONKIN2_SAMPLE, ronkin2(0.1, 0.2), 1e-13));
    assert!(close(HXX_SYMMETRIC, 2.0 * 2f64.sqrt() * 0.25 / (PI * PI) * agm_k(0.84375), 1e-14));
}

#[test]
fn elliptic_values() {
    assert!(close(ellip_k(0.5).unwrap(), K_HALF, 1e-14));
    assert!(close(ellip_e(0.5).unwrap(), E_HALF, 1e-14));
    assert!(close(ellip_pi(0.25, 0.5).unwrap(), PI_QUARTER_HALF, 1e-13));
    assert!(close(ellip_k(0.84375).unwrap(), K_SYMMETRIC, 1e-14));
    assert!(close(carlson_rd(0.0, 1.0, 1.0).unwrap(), 3.0 * PI / 4.0, 1e-14));
    assert!(close(carlson_rj(0.0, 0.5, 1.0, 0.75).unwrap(), RJ_SAMPLE, 1e-13));
    for (j, v) in [-1, 0, 1].into_iter().zip(QUARTIC_4321) {
        let r = legendre_reduce(4.0, 3.0, 2.0, 1.0, j).unwrap();
        assert!(close(r.evaluate(), v, 1e-12), "j={j}");
        assert!((r.modulus.k2() - 0.75).abs() < 1e-15);
    }
}

#[test]
fn series_values() {
    assert!(close(gauss_2f1(0.5, 0.5, 1.0, 0.5).unwrap().value, 2.0 / PI * K_HALF, 1e-14));
    assert!(close(gkz_phi(&GkzSystem::phi_k(), 0.5).unwrap().value, 2.0 / (PI * PI) * K_HALF, 1e-14));
    assert!(close(trilog(1.0).unwrap(), ZETA3, 1e-15));
    assert!(close(trilog(-1.0).unwrap(), -0.75 * ZETA3, 1e-15));
    assert!(close(l_chi3(2.0).unwrap(), L_CHI3_2, 1e-14));
    let l4 = l_chi3(4.0).unwrap();
    assert!(l4 > 0.0 && l4 < 1.0);
    assert!(close(bloch_wigner(Complex64::from_polar(1.0, PI / 3.0)).unwrap(), CLAUSEN_PI_3, 1e-14));
}

#[test]
fn ronkin_values() {
    assert!(close(ronkin_2var_closed(0.0, 0.0), MAHLER_2, 1e-14));
    assert!(close(smyth_2var().unwrap(), MAHLER_2, 1e-14));
    assert!(close(ronkin_2var_closed(0.1, 0.2), RONKIN2_SAMPLE, 1e-13));
    assert!(close(smyth_3var(1.0).unwrap(), MAHLER_3_ONE, 1e-14));
    assert!(close(smyth_3var(0.5).unwrap(), MAHLER_3_HALF, 1e-14));
    let opts = value_options(1e-10);
    let h = 0.5f64.ln();
    assert!((ronkin_3var_quadrature(&LogPoint::new(0.0, 0.0, 0.0), &opts).unwrap() - MAHLER_3_ONE).abs() < 1e-9);
    assert!((ronkin_3var_quadrature(&LogPoint::new(0.0, h, h), &opts).unwrap() - MAHLER_3_HALF).abs() < 1e-9);
    let (l, r) = dilog_integral_identity(h).unwrap();
    assert!(close(l, DILOG_HALF, 1e-14) && close(r, DILOG_HALF, 1e-10));
    // (z - 1)(z - 3) at |z| = 2: Jensen gives log 2 + log 3.
    let v = ronkin_1var(&[Complex64::new(1.0, 0.0), Complex64::new(3.0, 0.0)], Complex64::new(1.0, 0.0), 2f64.ln()).unwrap();
    assert!(close(v, 6f64.ln(), 1e-15));
}

#[test]
fn symmetric_point_hessian() {
    let h = 0.5f64.ln();
    let p = LogPoint::new(h, h, h);
    let c = hessian_closed(&p).unwrap();
    let q = hessian_quadrature(&p).unwrap();
    assert!(close(c.get(0, 0), HXX_SYMMETRIC, 1e-13));
    assert!(c.max_rel_diff(&q, 1e-12) < 1e-9);
    assert!((density(&p).unwrap() - q.det()).abs() < 1e-9 * q.det());
    assert!(close(density_2var(0.1, 0.2), 1.0 / (PI * PI), 1e-15));
}
