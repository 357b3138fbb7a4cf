//! Hypergeometric and polylogarithmic series.
//!
//! Every series routine returns a [`SeriesResult`] whose `truncation_bound`
//! is a rigorous bound on the neglected tail, derived from a geometric
//! majorant of the term ratios (rounding error is not included).

mod gamma;
mod gauss;
mod gkz;
mod polylog;

pub use gamma::{gamma_signed_ln, rgamma, sin_pi};
pub use gauss::{appell_f1, appell_f1_with, gauss_2f1, gauss_2f1_with};
pub use gkz::{
    gkz_phi, gkz_phi_tilde, phi_term_denominator_form, phi_term_numerator_form, GkzKind, GkzSystem,
};
pub use polylog::{
    bloch_wigner, dilog, hurwitz_zeta, l_chi3, li2, trilog, ZETA2, ZETA3,
};

/// Value of a truncated series together with a bound on what was dropped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: usize,
    pub truncation_bound: f64,
}
