use super::SeriesResult;
use crate::{Error, Result};

const MAX_TERMS: usize = 10_000_000;
const DEFAULT_REL_2F1: f64 = 1e-15;
const DEFAULT_REL_F1: f64 = 1e-13;

fn nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

/// Gauss hypergeometric series `2F1(a, b; c; z)`.
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64) -> Result<SeriesResult> {
    gauss_2f1_with(a, b, c, z, DEFAULT_REL_2F1)
}

/// As [`gauss_2f1`], stopping once the tail bound drops below
/// `rel_tol · |partial sum|`.
pub fn gauss_2f1_with(a: f64, b: f64, c: f64, z: f64, rel_tol: f64) -> Result<SeriesResult> {
    if nonpositive_integer(c) {
        return Err(Error::BadParameter(format!("c = {c} is a non-positive integer")));
    }
    let terminating = nonpositive_integer(a) || nonpositive_integer(b);
    if !terminating && !(z.abs() < 1.0) {
        return Err(Error::OutOfConvergenceRegion(z));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let next = term * (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        if next == 0.0 && terminating {
            return Ok(SeriesResult { value: sum, terms_used: n + 1, truncation_bound: 0.0 });
        }
        // For m ≥ n: |t_{m+1}/t_m| ≤ |z| (1 + |a-1|/(n+1)) (1 + |b-c|/(n+c)).
        if !terminating && nf + c > 0.0 {
            let rho = z.abs() * (1.0 + (a - 1.0).abs() / (nf + 1.0))
                * (1.0 + (b - c).abs() / (nf + c));
            if rho < 1.0 {
                let tail = term.abs() * rho / (1.0 - rho);
                if tail <= rel_tol * sum.abs() {
                    return Ok(SeriesResult {
                        value: sum,
                        terms_used: n + 1,
                        truncation_bound: tail,
                    });
                }
            }
        }
        term = next;
        sum += term;
    }
    Err(Error::ToleranceNotMet { requested: rel_tol, achieved: f64::NAN })
}

/// Appell's double series
/// `F1(a; b1, b2; c; x, y) = Σ (a)_{m+n} (b1)_m (b2)_n / ((c)_{m+n} m! n!) x^m y^n`.
pub fn appell_f1(a: f64, b1: f64, b2: f64, c: f64, x: f64, y: f64) -> Result<SeriesResult> {
    appell_f1_with(a, b1, b2, c, x, y, DEFAULT_REL_F1)
}

pub fn appell_f1_with(
    a: f64,
    b1: f64,
    b2: f64,
    c: f64,
    x: f64,
    y: f64,
    rel_tol: f64,
) -> Result<SeriesResult> {
    if nonpositive_integer(c) {
        return Err(Error::BadParameter(format!("c = {c} is a non-positive integer")));
    }
    if !(x.abs() < 1.0) {
        return Err(Error::OutOfConvergenceRegion(x));
    }
    if !(y.abs() < 1.0) {
        return Err(Error::OutOfConvergenceRegion(y));
    }
    let inner_rel = rel_tol * 1e-3;
    let mut total = 0.0;
    let mut terms = 0usize;
    // Leading term of row m: (a)_m (b1)_m / ((c)_m m!) x^m.
    let mut lead = 1.0;
    for m in 0..MAX_TERMS {
        let mf = m as f64;
        let (row, row_abs, row_tail, used) = f1_row(a + mf, b2, c + mf, y, lead, inner_rel)?;
        total += row;
        terms += used;
        // Termwise |T(m+1,n)/T(m,n)| ≤ |x| (1 + |a-c|/(m+c)) (1 + |b1-1|/(m+1)).
        if mf + c > 0.0 {
            let rho = x.abs() * (1.0 + (a - c).abs() / (mf + c)) * (1.0 + (b1 - 1.0).abs() / (mf + 1.0));
            if rho < 1.0 {
                let tail = (row_abs + row_tail) * rho / (1.0 - rho);
                if tail <= rel_tol * total.abs() || lead == 0.0 {
                    return Ok(SeriesResult {
                        value: total,
                        terms_used: terms,
                        truncation_bound: tail + row_tail * (m + 1) as f64,
                    });
                }
            }
        }
        lead *= (a + mf) * (b1 + mf) / ((c + mf) * (mf + 1.0)) * x;
    }
    Err(Error::ToleranceNotMet { requested: rel_tol, achieved: f64::NAN })
}

/// `lead · 2F1(a, b; c; y)` summed by terms; returns (sum, Σ|terms|, tail bound, terms).
fn f1_row(a: f64, b: f64, c: f64, y: f64, lead: f64, rel_tol: f64) -> Result<(f64, f64, f64, usize)> {
    if lead == 0.0 {
        return Ok((0.0, 0.0, 0.0, 1));
    }
    let mut term = lead;
    let mut sum = lead;
    let mut abs_sum = lead.abs();
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        if nf + c > 0.0 {
            let rho = y.abs() * (1.0 + (a - c).abs() / (nf + c)) * (1.0 + (b - 1.0).abs() / (nf + 1.0));
            if rho < 1.0 {
                let tail = term.abs() * rho / (1.0 - rho);
                if tail <= rel_tol * abs_sum {
                    return Ok((sum, abs_sum, tail, n + 1));
                }
            }
        }
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * y;
        if term == 0.0 {
            return Ok((sum, abs_sum, 0.0, n + 1));
        }
        sum += term;
        abs_sum += term.abs();
    }
    Err(Error::ToleranceNotMet { requested: rel_tol, achieved: f64::NAN })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_values() {
        assert_eq!(gauss_2f1(0.5, 0.5, 1.0, 0.0).unwrap().value, 1.0);
        let r = gauss_2f1(-2.0, 1.0, 1.0, 0.3).unwrap();
        assert!((r.value - 0.49).abs() < 1e-15);
        assert_eq!(r.truncation_bound, 0.0);
        // Terminating series converge for any z.
        let r = gauss_2f1(-3.0, 1.0, 1.0, 5.0).unwrap();
        assert!((r.value - (1.0f64 - 5.0).powi(3)).abs() < 1e-12);
        assert_eq!(appell_f1(0.5, 1.0, 0.5, 1.0, 0.0, 0.0).unwrap().value, 1.0);
    }

    #[test]
    fn log_and_arctanh_forms() {
        // 2F1(1,1;2;z) = -ln(1-z)/z
        for z in [-0.9, -0.3, 0.2, 0.7, 0.95] {
            let v = gauss_2f1(1.0, 1.0, 2.0, z).unwrap().value;
            let exact = -(-z as f64).ln_1p() / z;
            assert!((v - exact).abs() < 1e-13 * exact.abs(), "z={z}");
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(gauss_2f1(0.5, 0.5, -1.0, 0.2), Err(Error::BadParameter(_))));
        assert!(matches!(gauss_2f1(0.5, 0.5, 1.0, 1.0), Err(Error::OutOfConvergenceRegion(_))));
        assert!(matches!(
            appell_f1(0.5, 1.0, 0.5, 1.0, 0.2, -1.0),
            Err(Error::OutOfConvergenceRegion(_))
        ));
        assert!(matches!(
            appell_f1(0.5, 1.0, 0.5, 0.0, 0.2, 0.2),
            Err(Error::BadParameter(_))
        ));
    }

    #[test]
    fn f1_diagonal_reduces_to_2f1() {
        for (a, b1, b2, c, z) in [(0.5, 1.0, 0.5, 1.0, 0.4), (1.3, 0.2, 0.7, 2.1, -0.6), (0.5, 1.0, 0.5, 1.0, 0.9)] {
            let f1 = appell_f1(a, b1, b2, c, z, z).unwrap();
            let g = gauss_2f1(a, b1 + b2, c, z).unwrap();
            assert!((f1.value - g.value).abs() <= 1e-10 * g.value.abs());
            assert!(f1.truncation_bound <= 1e-10 * f1.value.abs());
        }
    }

    #[test]
    fn bound_covers_true_tail() {
        let z = 0.99;
        let exact = -(-z as f64).ln_1p() / z;
        let r = gauss_2f1_with(1.0, 1.0, 2.0, z, 1e-6).unwrap();
        assert!((r.value - exact).abs() <= r.truncation_bound);
    }
}
