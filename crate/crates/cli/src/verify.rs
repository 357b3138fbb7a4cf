//! Randomized invariant suites behind `ronkin verify`.
//!
//! Every suite draws from a ChaCha stream seeded by `--seed` and the suite
//! index, so a run is reproducible regardless of thread count.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use ronkin_core::amoeba::{contour_residuals, membership, Chamber, LabelKind, LogPoint, CONTOUR_TOL};
use ronkin_core::elliptic::{ellip_k, ellip_pi, legendre_reduce};
use ronkin_core::hyperseries::{gkz_phi, gkz_phi_tilde, GkzSystem};
use ronkin_core::quad::{integrate, QuadOptions};
use ronkin_core::ronkin::{
    dilog_integral_identity, elliptic_zero_identity, grad_in_chamber, hessian_closed, hessian_quadrature,
    GRAD_TOL,
};
use ronkin_core::serial::{f17, fmt17};

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub failures: usize,
    /// Largest error relative to the suite's threshold scale.
    #[serde(with = "f17")]
    pub worst: f64,
    #[serde(with = "f17")]
    pub threshold: f64,
    /// First failing case, if any.
    pub example: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChamberRow {
    pub chamber: String,
    pub points: usize,
    #[serde(with = "f17")]
    pub max_rel_diff: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
    pub chamber_table: Vec<ChamberRow>,
}

impl VerifyReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "seed {}", self.seed);
        for r in &self.suites {
            let _ = writeln!(
                s,
                "{:<5} {:<20} cases {:>4}  failures {:>3}  worst {}  threshold {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.name,
                r.cases,
                r.failures,
                fmt17(r.worst),
                fmt17(r.threshold)
            );
            if let Some(e) = &r.example {
                let _ = writeln!(s, "      first failure: {e}");
            }
        }
        let _ = writeln!(s, "closed vs quadrature Hessian by chamber:");
        for row in &self.chamber_table {
            let _ = writeln!(s, "  {:<8} points {:>3}  max rel diff {}", row.chamber, row.points, fmt17(row.max_rel_diff));
        }
        let _ = writeln!(s, "{}", if self.passed { "all suites passed" } else { "some suites failed" });
        s
    }
}

/// Per-case outcome: relative error, threshold and a description.
struct Case {
    err: f64,
    ok: bool,
    what: String,
}

fn summarize(name: &'static str, threshold: f64, cases: Vec<Result<Case, String>>) -> SuiteResult {
    let mut worst = 0f64;
    let mut failures = 0;
    let mut example = None;
    let n = cases.len();
    for c in cases {
        match c {
            Ok(c) => {
                worst = worst.max(c.err);
                if !c.ok {
                    failures += 1;
                    example.get_or_insert(c.what);
                }
            }
            Err(e) => {
                failures += 1;
                example.get_or_insert(e);
            }
        }
    }
    SuiteResult { name, passed: failures == 0, cases: n, failures, worst, threshold, example }
}

fn rng(seed: u64, suite: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(suite);
    r
}

/// A point in `chamber` with every contour residual at least `margin`.
pub fn sample_in_chamber(r: &mut impl Rng, chamber: Chamber, margin: f64) -> LogPoint {
    loop {
        let p = LogPoint::new(r.random_range(-1.5..1.5), r.random_range(-1.5..1.5), r.random_range(-1.5..1.5));
        let l = membership(&p, CONTOUR_TOL);
        if l.kind == LabelKind::Chamber(chamber) && l.contour_distance > margin {
            return p;
        }
    }
}

/// A point on the interior contour `1 + X_i = X_j + X_k` for `i = which`,
/// away from the other equalities.
pub fn sample_on_contour(r: &mut impl Rng, which: usize) -> LogPoint {
    loop {
        let (a, b): (f64, f64) = (r.random_range(-1.5..1.5), r.random_range(-1.5..1.5));
        let (ea, eb) = (a.exp(), b.exp());
        let rest = ea + eb - 1.0;
        if rest <= 0.0 {
            continue;
        }
        let mut v = [a, b, 0.0];
        v[2] = rest.ln();
        // Put the solved coordinate at position `which`.
        v.swap(2, which);
        let p = LogPoint::from_array(v);
        let (inner, boundary, _) = contour_residuals(&p);
        let scale = p.exps().iter().fold(1f64, |m, e| m.max(*e));
        let others = (0..3).filter(|&k| k != which).map(|k| inner[k].abs()).fold(f64::INFINITY, f64::min);
        let bmin = boundary.iter().map(|b| b.abs()).fold(f64::INFINITY, f64::min);
        if others > 0.05 * scale && bmin > 0.05 * scale {
            return p;
        }
    }
}

fn elliptic_identity(seed: u64, n: usize) -> SuiteResult {
    let mut r = rng(seed, 1);
    let mut triples = Vec::new();
    while triples.len() < n {
        let (a, b, c): (f64, f64, f64) = (r.random_range(0.2..1.8), r.random_range(0.2..1.8), r.random_range(0.2..1.8));
        // a + b + c > 1 keeps the modulus real.
        let ok = 1.0 + a > b + c && 1.0 + b > a + c && 1.0 + c > a + b && a + b + c > 1.0;
        let sep = [(a - c).abs(), (b - c).abs(), (1.0 - a).abs(), (1.0 - b).abs()];
        if ok && sep.iter().all(|s| *s > 0.02) {
            triples.push((a, b, c));
        }
    }
    let tol = 1e-8;
    let cases = triples
        .par_iter()
        .map(|&(a, b, c)| {
            let z = elliptic_zero_identity(a, b, c).map_err(|e| format!("({a}, {b}, {c}): {e}"))?;
            let err = z.sum.abs() / z.scale;
            Ok(Case { err, ok: err <= tol, what: format!("({a}, {b}, {c}) sum {}", z.sum) })
        })
        .collect();
    summarize("elliptic_identity", tol, cases)
}

fn phi_k(seed: u64, n: usize) -> SuiteResult {
    let mut r = rng(seed, 2);
    let zs: Vec<f64> = (0..n).map(|_| r.random_range(0.0..0.95)).collect();
    let tol = 1e-12;
    let sys = GkzSystem::phi_k();
    let cases = zs
        .iter()
        .map(|&z| {
            let s = gkz_phi(&sys, z).map_err(|e| format!("z={z}: {e}"))?.value;
            let k = ellip_k(z).map_err(|e| format!("z={z}: {e}"))?;
            let err = (PI * PI / 2.0 * s - k).abs() / k;
            Ok(Case { err, ok: err <= tol, what: format!("z={z}") })
        })
        .collect();
    summarize("phi_k", tol, cases)
}

fn phi_tilde_pi(seed: u64, n: usize) -> SuiteResult {
    let mut r = rng(seed, 3);
    let pts: Vec<(f64, f64)> = (0..n).map(|_| (r.random_range(0.0..0.95), r.random_range(0.0..0.95))).collect();
    let tol = 1e-11;
    let sys = GkzSystem::phi_tilde_pi();
    let cases = pts
        .par_iter()
        .map(|&(al, k2)| {
            let s = gkz_phi_tilde(&sys, al, k2).map_err(|e| format!("({al}, {k2}): {e}"))?.value;
            let p = ellip_pi(al, k2).map_err(|e| format!("({al}, {k2}): {e}"))?;
            let err = (PI * PI / 2.0 * s - p).abs() / p.abs();
            Ok(Case { err, ok: err <= tol, what: format!("alpha2={al} k2={k2}") })
        })
        .collect();
    summarize("phi_tilde_pi", tol, cases)
}

fn legendre(seed: u64, n: usize) -> SuiteResult {
    let mut r = rng(seed, 4);
    let mut quads = Vec::new();
    while quads.len() < n {
        let mut v: [f64; 4] = std::array::from_fn(|_| r.random_range(0.05..4.0));
        v.sort_by(|a, b| b.total_cmp(a));
        if v.windows(2).all(|w| w[0] - w[1] > 0.05) {
            quads.push(v);
        }
    }
    let tol = 1e-9;
    let opts = QuadOptions::with_tol(1e-14, 1e-13);
    let cases = quads
        .par_iter()
        .flat_map(|&[a, b, c, d]| {
            [-1, 0, 1].into_par_iter().map(move |j| {
                let closed = legendre_reduce(a, b, c, d, j).map_err(|e| e.to_string())?.evaluate();
                // s = c + (b - c) sin²θ removes both endpoint singularities.
                let w = b - c;
                let f = |t: f64| {
                    let (sn, _) = t.sin_cos();
                    let s = c + w * sn * sn;
                    2.0 * s.powi(j) / ((a - s) * (s - d)).sqrt()
                };
                let q = integrate(f, 0.0, FRAC_PI_2, &opts).map_err(|e| e.to_string())?.value;
                let err = (closed - q).abs() / q.abs();
                Ok(Case { err, ok: err <= tol, what: format!("({a}, {b}, {c}, {d}) j={j}") })
            })
        })
        .collect();
    summarize("legendre", tol, cases)
}

fn hessian_symmetry(seed: u64, per_chamber: usize) -> SuiteResult {
    let mut r = rng(seed, 5);
    let pts: Vec<LogPoint> = Chamber::ALL
        .iter()
        .flat_map(|&c| (0..per_chamber).map(|_| sample_in_chamber(&mut r, c, 1e-3)).collect::<Vec<_>>())
        .collect();
    let tol = 1e-10;
    let cases = pts
        .par_iter()
        .map(|p| {
            let h = hessian_closed(p).map_err(|e| format!("{p}: {e}"))?;
            let m = h.matrix();
            let mut err = 0f64;
            for i in 0..3 {
                for j in 0..3 {
                    let s = m[i][j].abs().max(m[j][i].abs()).max(1e-12);
                    err = err.max((m[i][j] - m[j][i]).abs() / s);
                }
            }
            // Permuting coordinates permutes the Hessian.
            let swapped = hessian_closed(&p.permuted([1, 0, 2])).map_err(|e| format!("{p}: {e}"))?;
            let s = m[0][2].abs().max(1e-12);
            err = err.max((swapped.get(1, 2) - m[0][2]).abs() / s);
            Ok(Case { err, ok: err <= tol, what: format!("{p}") })
        })
        .collect();
    summarize("hessian_symmetry", tol, cases)
}

fn chamber_table(seed: u64, per_chamber: usize) -> (SuiteResult, Vec<ChamberRow>) {
    let mut r = rng(seed, 6);
    let tol = 1e-8;
    let mut rows = Vec::new();
    let mut all = Vec::new();
    for c in Chamber::ALL {
        let pts: Vec<LogPoint> = (0..per_chamber).map(|_| sample_in_chamber(&mut r, c, 1e-2)).collect();
        let cases: Vec<Result<Case, String>> = pts
            .par_iter()
            .map(|p| {
                let a = hessian_closed(p).map_err(|e| format!("{p}: {e}"))?;
                let b = hessian_quadrature(p).map_err(|e| format!("{p}: {e}"))?;
                let err = a.max_rel_diff(&b, 1e-12);
                Ok(Case { err, ok: err <= tol, what: format!("{p}") })
            })
            .collect();
        let worst = cases.iter().filter_map(|c| c.as_ref().ok()).fold(0f64, |m, c| m.max(c.err));
        rows.push(ChamberRow { chamber: c.to_string(), points: per_chamber, max_rel_diff: worst });
        all.extend(cases);
    }
    (summarize("hessian_closed_quad", tol, all), rows)
}

fn continuity(seed: u64, per_contour: usize) -> SuiteResult {
    let mut r = rng(seed, 7);
    let pts: Vec<(usize, LogPoint)> =
        (0..3).flat_map(|i| (0..per_contour).map(|_| (i, sample_on_contour(&mut r, i))).collect::<Vec<_>>()).collect();
    let tol = 1e-5;
    let opts = QuadOptions::with_tol(GRAD_TOL, 0.0);
    let cases = pts
        .par_iter()
        .map(|&(i, p)| {
            // The two chambers meeting along contour `i` differ only in sign `i`.
            let (inner, _, _) = contour_residuals(&p);
            let mut signs = inner.map(|v| v > 0.0);
            signs[i] = true;
            let plus = Chamber(signs);
            signs[i] = false;
            let minus = Chamber(signs);
            let a = grad_in_chamber(&p, plus, &opts).map_err(|e| format!("{p}: {e}"))?;
            let b = grad_in_chamber(&p, minus, &opts).map_err(|e| format!("{p}: {e}"))?;
            let err = (0..3).map(|k| (a[k] - b[k]).abs()).fold(0f64, f64::max);
            Ok(Case { err, ok: err <= tol, what: format!("{p} contour {i}") })
        })
        .collect();
    summarize("gradient_continuity", tol, cases)
}

fn dilog_identity(seed: u64, n: usize) -> SuiteResult {
    let mut r = rng(seed, 8);
    let xs: Vec<f64> = (0..n).map(|_| r.random_range(-6.0..-0.01)).collect();
    let tol = 1e-8;
    let cases = xs
        .iter()
        .map(|&x| {
            let (l, rr) = dilog_integral_identity(x).map_err(|e| format!("x={x}: {e}"))?;
            let err = (l - rr).abs();
            Ok(Case { err, ok: err <= tol, what: format!("x={x}") })
        })
        .collect();
    summarize("dilog_identity", tol, cases)
}

/// Runs every suite. `quick` shrinks the case counts.
pub fn run_suites(seed: u64, quick: bool) -> VerifyReport {
    let k = |full: usize, small: usize| if quick { small } else { full };
    let (table_suite, chamber_table) = chamber_table(seed, k(5, 2));
    let suites = vec![
        elliptic_identity(seed, k(100, 20)),
        phi_k(seed, k(50, 10)),
        phi_tilde_pi(seed, k(50, 10)),
        legendre(seed, k(200, 20)),
        hessian_symmetry(seed, k(5, 2)),
        table_suite,
        continuity(seed, k(10, 3)),
        dilog_identity(seed, k(50, 10)),
    ];
    let passed = suites.iter().all(|s| s.passed);
    VerifyReport { seed, passed, suites, chamber_table }
}
