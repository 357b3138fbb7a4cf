//! Two A-hypergeometric (GKZ) lattice series.
//!
//! For a parameter vector `γ` and an integer `N × (N-n)` matrix `B` whose
//! last `N-n` rows are the identity, the formal solution is
//!
//! ```text
//! Φ(a) = Σ_{k ∈ Z^{N-n}}  a^{γ + Bk} / ( Π_{j≤n} Γ(γ_j + <B_j,k> + 1) · k! )
//! ```
//!
//! with `γ_j = 0` for `j > n`. [`GkzKind::PhiTildePi`] uses the variant in
//! which the first gamma factor is moved to the numerator:
//!
//! ```text
//! Φ̃(a) = Σ (-1)^{<B_1,k>} Γ(-γ_1 - <B_1,k>) a^{γ + Bk} / ( Π_{2≤j≤n} Γ(γ_j + <B_j,k> + 1) · k! )
//! ```
//!
//! Terms whose denominator contains `Γ` at a non-positive integer are zero.
//! In both instances that removes every `k` with a negative component, and
//! the numerator pole `Γ(1 + k_1)` of `Φ̃` is cancelled by `k_1!`.

use super::gamma::{gamma_signed_ln, rgamma};
use super::SeriesResult;
use crate::{Error, Result};

/// Terms below this fraction of the running sum end a lattice direction.
const TERM_FLOOR: f64 = 1e-18;
const MAX_TERMS_PER_AXIS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GkzKind {
    /// `γ = (-1/2, -1/2, 0)`, `B = (-1, -1, 1, 1)ᵀ`; `(π²/2) Φ(1,1,1,z) = K(k² = z)`.
    PhiK,
    /// `γ = (-1, 0, -1/2, -1/2)` with a `6 × 2` matrix `B`;
    /// `(π²/2) Φ̃(1,1,1,1,α²,k²) = Π(α², k)`.
    PhiTildePi,
}

/// One of the two supported GKZ instances.
#[derive(Debug, Clone, PartialEq)]
pub struct GkzSystem {
    gamma: Vec<f64>,
    b: Vec<Vec<i64>>,
    which: GkzKind,
}

impl GkzSystem {
    pub fn phi_k() -> Self {
        Self {
            gamma: vec![-0.5, -0.5, 0.0],
            b: vec![vec![-1], vec![-1], vec![1], vec![1]],
            which: GkzKind::PhiK,
        }
    }

    pub fn phi_tilde_pi() -> Self {
        Self {
            gamma: vec![-1.0, 0.0, -0.5, -0.5],
            b: vec![
                vec![-1, 0],
                vec![1, 1],
                vec![0, -1],
                vec![-1, -1],
                vec![1, 0],
                vec![0, 1],
            ],
            which: GkzKind::PhiTildePi,
        }
    }

    pub fn new(which: GkzKind) -> Self {
        match which {
            GkzKind::PhiK => Self::phi_k(),
            GkzKind::PhiTildePi => Self::phi_tilde_pi(),
        }
    }

    pub fn kind(&self) -> GkzKind {
        self.which
    }

    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }

    pub fn b(&self) -> &[Vec<i64>] {
        &self.b
    }

    /// Lattice rank `N - n`.
    pub fn rank(&self) -> usize {
        self.b[0].len()
    }

    fn gamma_full(&self, j: usize) -> f64 {
        self.gamma.get(j).copied().unwrap_or(0.0)
    }

    fn row_dot(&self, j: usize, k: &[i64]) -> i64 {
        self.b[j].iter().zip(k).map(|(b, k)| b * k).sum()
    }

    /// One lattice term at `a` (length `N`). Factors are combined as
    /// `(ln|·|, sign)` pairs because individual gamma values overflow long
    /// before the term itself becomes negligible.
    pub fn term(&self, a: &[f64], k: &[i64]) -> f64 {
        assert_eq!(a.len(), self.b.len());
        assert_eq!(k.len(), self.rank());
        let mut ln = 0.0;
        let mut sign = 1.0;
        // a^{γ + Bk}; entries equal to 1 contribute 1 whatever the exponent.
        for (j, &aj) in a.iter().enumerate() {
            if aj == 1.0 {
                continue;
            }
            let e = self.gamma_full(j) + self.row_dot(j, k) as f64;
            if aj == 0.0 {
                if e == 0.0 {
                    continue;
                }
                return 0.0;
            }
            debug_assert_eq!(e.fract(), 0.0);
            ln += e * aj.abs().ln();
            if aj < 0.0 && (e as i64) % 2 != 0 {
                sign = -sign;
            }
        }
        let first_denominator = match self.which {
            GkzKind::PhiK => 0,
            GkzKind::PhiTildePi => 1,
        };
        for j in first_denominator..self.b.len() {
            match gamma_signed_ln(self.gamma_full(j) + self.row_dot(j, k) as f64 + 1.0) {
                Some((l, s)) => {
                    ln -= l;
                    sign *= s;
                }
                None => return 0.0,
            }
        }
        if self.which == GkzKind::PhiTildePi {
            // All denominators are finite here, so k ≥ 0 and the numerator
            // Γ(-γ_1 - <B_1,k>) = Γ(1 + k_1) is finite as well.
            let b1 = self.row_dot(0, k);
            match gamma_signed_ln(-self.gamma_full(0) - b1 as f64) {
                Some((l, s)) => {
                    ln += l;
                    sign *= s;
                }
                None => return 0.0,
            }
            if b1 % 2 != 0 {
                sign = -sign;
            }
        }
        sign * ln.exp()
    }

    /// Magnitude bound on the ratio of consecutive terms along lattice axis
    /// `axis`, valid for all `k ≥ 0`.
    ///
    /// `Φ`:  `t_{k+1}/t_k = z (1/2+k)² / (k+1)²`, bounded by `|z|`.
    /// `Φ̃`: the ratios along `k_1` and `k_2` are
    /// `α² (1/2+k_1+k_2)/(k_1+k_2+1)` and
    /// `k² (1/2+k_1+k_2)(1/2+k_2)/((k_1+k_2+1)(k_2+1))`, bounded by `|α²|`
    /// and `|k²|`.
    fn ratio_bound(&self, vars: &[f64], axis: usize) -> f64 {
        vars[axis].abs()
    }
}

fn expect_kind(sys: &GkzSystem, kind: GkzKind) -> Result<()> {
    if sys.which != kind {
        return Err(Error::BadParameter(format!("expected a {kind:?} system, got {:?}", sys.which)));
    }
    Ok(())
}

/// `Φ(1, 1, 1, z)` for the first-kind system.
pub fn gkz_phi(sys: &GkzSystem, z: f64) -> Result<SeriesResult> {
    expect_kind(sys, GkzKind::PhiK)?;
    if !(z.abs() < 1.0) {
        return Err(Error::OutOfConvergenceRegion(z));
    }
    let a = [1.0, 1.0, 1.0, z];
    let rho = sys.ratio_bound(&[z], 0);
    let mut sum = 0.0;
    for k in 0..MAX_TERMS_PER_AXIS {
        let t = sys.term(&a, &[k as i64]);
        sum += t;
        if t.abs() <= TERM_FLOOR * sum.abs() {
            let tail = t.abs() * rho / (1.0 - rho);
            return Ok(SeriesResult { value: sum, terms_used: k + 1, truncation_bound: tail });
        }
    }
    Err(Error::ToleranceNotMet { requested: TERM_FLOOR, achieved: f64::NAN })
}

/// `Φ̃(1, 1, 1, 1, α², k²)` for the third-kind system.
pub fn gkz_phi_tilde(sys: &GkzSystem, alpha2: f64, k2: f64) -> Result<SeriesResult> {
    expect_kind(sys, GkzKind::PhiTildePi)?;
    if !(alpha2.abs() < 1.0) {
        return Err(Error::OutOfConvergenceRegion(alpha2));
    }
    if !(k2.abs() < 1.0) {
        return Err(Error::OutOfConvergenceRegion(k2));
    }
    let a = [1.0, 1.0, 1.0, 1.0, alpha2, k2];
    let vars = [alpha2, k2];
    let rho1 = sys.ratio_bound(&vars, 0);
    let rho2 = sys.ratio_bound(&vars, 1);
    let mut sum = 0.0;
    let mut terms = 0usize;
    let mut row_tails = 0.0;
    for k2i in 0..MAX_TERMS_PER_AXIS {
        // Row k_2 = const, summed along k_1.
        let mut row_abs = 0.0;
        let mut row_tail = 0.0;
        for k1i in 0..MAX_TERMS_PER_AXIS {
            let t = sys.term(&a, &[k1i as i64, k2i as i64]);
            terms += 1;
            sum += t;
            row_abs += t.abs();
            if t.abs() <= TERM_FLOOR * sum.abs().max(row_abs) {
                row_tail = t.abs() * rho1 / (1.0 - rho1);
                break;
            }
        }
        row_tails += row_tail;
        // Every term of row k_2 + 1 is at most |k²| times its neighbour in row k_2.
        let outer = (row_abs + row_tail) * rho2 / (1.0 - rho2);
        if outer <= TERM_FLOOR * sum.abs() {
            return Ok(SeriesResult {
                value: sum,
                terms_used: terms,
                truncation_bound: outer + row_tails,
            });
        }
    }
    Err(Error::ToleranceNotMet { requested: TERM_FLOOR, achieved: f64::NAN })
}

/// Φ lattice term with every gamma factor in the denominator, for generic
/// `γ` and the `B = (-1, -1, 1, 1)ᵀ` lattice at `a = (1, 1, 1, z)`.
pub fn phi_term_denominator_form(gamma: [f64; 3], z: f64, k: i64) -> f64 {
    let kf = k as f64;
    z.powi(k as i32)
        * rgamma(gamma[0] - kf + 1.0)
        * rgamma(gamma[1] - kf + 1.0)
        * rgamma(gamma[2] + kf + 1.0)
        * rgamma(kf + 1.0)
}

/// The same term after moving the first two gamma factors to the numerator
/// with `Γ(s+n)/Γ(s) = (-1)^n Γ(1-s)/Γ(1-n-s)`, i.e.
/// `1/Γ(1+γ-k) = (-1)^k Γ(k-γ) / (Γ(-γ) Γ(1+γ))`. Requires non-integer `γ_1, γ_2`.
pub fn phi_term_numerator_form(gamma: [f64; 3], z: f64, k: i64) -> f64 {
    let kf = k as f64;
    let moved = |g: f64| -> f64 {
        let (ln_num, s_num) = gamma_signed_ln(kf - g).expect("generic parameter");
        let (ln_a, s_a) = gamma_signed_ln(-g).expect("generic parameter");
        let (ln_b, s_b) = gamma_signed_ln(1.0 + g).expect("generic parameter");
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sign * s_num * s_a * s_b * (ln_num - ln_a - ln_b).exp()
    };
    z.powi(k as i32) * moved(gamma[0]) * moved(gamma[1]) * rgamma(gamma[2] + kf + 1.0) * rgamma(kf + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn origin_values() {
        let phi = gkz_phi(&GkzSystem::phi_k(), 0.0).unwrap();
        assert!((phi.value - 1.0 / PI).abs() < 1e-16);
        let pt = gkz_phi_tilde(&GkzSystem::phi_tilde_pi(), 0.0, 0.0).unwrap();
        assert!((pt.value - 1.0 / PI).abs() < 1e-16);
    }

    #[test]
    fn negative_lattice_points_vanish() {
        let s = GkzSystem::phi_k();
        assert_eq!(s.term(&[1.0, 1.0, 1.0, 0.3], &[-2]), 0.0);
        let t = GkzSystem::phi_tilde_pi();
        let a = [1.0, 1.0, 1.0, 1.0, 0.3, 0.4];
        assert_eq!(t.term(&a, &[-1, 3]), 0.0);
        assert_eq!(t.term(&a, &[2, -1]), 0.0);
    }

    #[test]
    fn wrong_kind_rejected() {
        assert!(matches!(
            gkz_phi(&GkzSystem::phi_tilde_pi(), 0.1),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            gkz_phi_tilde(&GkzSystem::phi_k(), 0.1, 0.1),
            Err(Error::BadParameter(_))
        ));
        assert!(matches!(
            gkz_phi(&GkzSystem::phi_k(), 1.0),
            Err(Error::OutOfConvergenceRegion(_))
        ));
    }

    #[test]
    fn numerator_and_denominator_forms_agree() {
        let gamma = [-0.5 + 0.0137, -0.5 - 0.021, 0.013];
        for k in 0..10 {
            let d = phi_term_denominator_form(gamma, 0.6, k);
            let n = phi_term_numerator_form(gamma, 0.6, k);
            assert!((d - n).abs() <= 1e-12 * d.abs(), "k={k} {d} {n}");
        }
    }

    #[test]
    fn phi_tilde_matches_explicit_term() {
        // (π²) T(k1,k2) = (1/2)_{k2}... written with gamma functions directly.
        let t = GkzSystem::phi_tilde_pi();
        let (al, m) = (0.3f64, -0.45f64);
        let a = [1.0, 1.0, 1.0, 1.0, al, m];
        for (k1, k2) in [(0i64, 0i64), (1, 0), (0, 1), (3, 2), (5, 7)] {
            let (k1f, k2f) = (k1 as f64, k2 as f64);
            let expect = al.powi(k1 as i32) * m.powi(k2 as i32)
                * statrs::function::gamma::gamma(0.5 + k2f)
                * statrs::function::gamma::gamma(0.5 + k1f + k2f)
                / (PI * PI
                    * statrs::function::gamma::gamma(k1f + k2f + 1.0)
                    * statrs::function::gamma::gamma(k2f + 1.0));
            let got = t.term(&a, &[k1, k2]);
            assert!((got - expect).abs() <= 1e-13 * expect.abs(), "({k1},{k2}) {got} {expect}");
        }
    }
}
