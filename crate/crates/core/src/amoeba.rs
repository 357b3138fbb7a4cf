//! Geometry of the amoeba of `f = 1 + z + w + t` in log coordinates
//! `(x, y, u) = (log|z|, log|w|, log|t|)`.
//!
//! Write `X = e^x`, `Y = e^y`, `U = e^u`. A point lies in the amoeba iff the
//! largest of `1, X, Y, U` is at most the sum of the other three. The contour
//! consists of the seven equalities
//!
//! ```text
//! 1 + X = Y + U,   1 + Y = X + U,   1 + U = X + Y        (interior squares)
//! X = 1 + Y + U,   Y = 1 + X + U,   U = 1 + X + Y,   1 = X + Y + U   (boundary)
//! ```
//!
//! and the three interior ones cut the amoeba into eight chambers labelled
//! by the signs of `1+X-(Y+U)`, `1+Y-(X+U)`, `1+U-(X+Y)`.

use std::fmt;

use num_complex::Complex64;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Default relative tolerance for contour detection.
pub const CONTOUR_TOL: f64 = 1e-9;

/// A point of `R³` in log coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogPoint {
    pub x: f64,
    pub y: f64,
    pub u: f64,
}

impl LogPoint {
    pub fn new(x: f64, y: f64, u: f64) -> Self {
        Self { x, y, u }
    }

    pub fn from_array(v: [f64; 3]) -> Self {
        Self::new(v[0], v[1], v[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.u]
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.u.is_finite()
    }

    /// `(e^x, e^y, e^u)`.
    pub fn exps(&self) -> [f64; 3] {
        [self.x.exp(), self.y.exp(), self.u.exp()]
    }

    /// The point whose `i`-th coordinate is coordinate `perm[i]` of `self`.
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        let a = self.to_array();
        Self::new(a[perm[0]], a[perm[1]], a[perm[2]])
    }
}

impl fmt::Display for LogPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.u)
    }
}

/// Sign triple of a chamber; `true` is `+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chamber(pub [bool; 3]);

impl Chamber {
    pub const ALL: [Chamber; 8] = [
        Chamber([true, true, true]),
        Chamber([false, true, true]),
        Chamber([false, false, true]),
        Chamber([true, false, true]),
        Chamber([true, false, false]),
        Chamber([true, true, false]),
        Chamber([false, true, false]),
        Chamber([false, false, false]),
    ];

    /// Parses `"(+,-,-)"`, `"+--"` and similar.
    pub fn parse(s: &str) -> Option<Self> {
        let signs: Vec<bool> = s
            .chars()
            .filter_map(|c| match c {
                '+' => Some(true),
                '-' | '−' => Some(false),
                _ => None,
            })
            .collect();
        (signs.len() == 3).then(|| Chamber([signs[0], signs[1], signs[2]]))
    }

    /// Sign triple after permuting the coordinates as in [`LogPoint::permuted`].
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        Chamber([self.0[perm[0]], self.0[perm[1]], self.0[perm[2]]])
    }

    /// Descending order of the quartic roots `A, B, C, D` in this chamber.
    pub fn quartic_order(&self) -> [QuarticRoot; 4] {
        use QuarticRoot::*;
        match self.0 {
            [true, true, true] | [true, false, false] => [A, B, C, D],
            [false, true, true] | [false, false, false] => [B, A, C, D],
            [false, false, true] | [false, true, false] => [B, A, D, C],
            [true, false, true] | [true, true, false] => [A, B, D, C],
        }
    }

    /// The table row `(r0, r1)` expressions for this chamber.
    pub fn r_limit_exprs(&self) -> (RadialLimit, RadialLimit) {
        let row = R_LIMIT_TABLE
            .iter()
            .find(|row| row.0 == *self)
            .expect("table covers all eight sign triples");
        (row.1, row.2)
    }

    /// Limits `(r0, r1)` of the radial integral for `∂N/∂x` at `p`.
    ///
    /// The chamber inequalities force the sign of the lower limit, so `r0 ≥ 0`
    /// holds at every point of the chamber's closure; a negative value means
    /// `p` is not where the caller believes and is logged and reflected.
    pub fn r_limits(&self, p: &LogPoint) -> (f64, f64) {
        let [xx, yy, uu] = p.exps();
        let (lo, hi) = self.r_limit_exprs();
        let r0 = lo.eval(xx, yy, uu);
        let r1 = hi.eval(xx, yy, uu);
        if r0 < 0.0 {
            log::warn!("negative lower radial limit {r0} in chamber {self} at {p}; using |r0|");
        }
        (r0.abs(), r1)
    }
}

impl fmt::Display for Chamber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |b: bool| if b { '+' } else { '-' };
        write!(f, "({},{},{})", s(self.0[0]), s(self.0[1]), s(self.0[2]))
    }
}

/// Radial limit expressions appearing in the chamber table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialLimit {
    OneMinusX,
    XMinusOne,
    UMinusY,
    YMinusU,
    YPlusU,
    OnePlusX,
}

impl RadialLimit {
    pub fn eval(self, xx: f64, yy: f64, uu: f64) -> f64 {
        match self {
            RadialLimit::OneMinusX => 1.0 - xx,
            RadialLimit::XMinusOne => xx - 1.0,
            RadialLimit::UMinusY => uu - yy,
            RadialLimit::YMinusU => yy - uu,
            RadialLimit::YPlusU => yy + uu,
            RadialLimit::OnePlusX => 1.0 + xx,
        }
    }
}

/// Chamber → `(r0, r1)` for the `x`-derivative.
pub const R_LIMIT_TABLE: [(Chamber, RadialLimit, RadialLimit); 8] = {
    use RadialLimit::*;
    [
        (Chamber([true, true, true]), OneMinusX, YPlusU),
        (Chamber([false, true, true]), OneMinusX, OnePlusX),
        (Chamber([false, false, true]), UMinusY, OnePlusX),
        (Chamber([true, false, true]), UMinusY, YPlusU),
        (Chamber([true, false, false]), XMinusOne, YPlusU),
        (Chamber([true, true, false]), YMinusU, YPlusU),
        (Chamber([false, true, false]), YMinusU, OnePlusX),
        (Chamber([false, false, false]), XMinusOne, OnePlusX),
    ]
};

/// Complement component of the amoeba, identified by its dominant term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Component {
    /// `1 > X + Y + U`
    Constant,
    /// `X > 1 + Y + U`
    X,
    /// `Y > 1 + X + U`
    Y,
    /// `U > 1 + X + Y`
    U,
}

impl Component {
    /// Gradient of the Ronkin function on this component.
    pub fn lattice_gradient(&self) -> [f64; 3] {
        match self {
            Component::Constant => [0.0, 0.0, 0.0],
            Component::X => [1.0, 0.0, 0.0],
            Component::Y => [0.0, 1.0, 0.0],
            Component::U => [0.0, 0.0, 1.0],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum LabelKind {
    Chamber(Chamber),
    /// Within tolerance of a contour equality. `adjacent` is the chamber given
    /// by the raw signs when the point is not outside the amoeba; `boundary`
    /// tells whether the nearest equality is one of the four boundary ones.
    OnContour { adjacent: Option<Chamber>, boundary: bool },
    OutsideAmoeba(Component),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChamberLabel {
    pub kind: LabelKind,
    /// `min_i |residual_i| / max(1, X, Y, U)` over the seven equalities.
    pub contour_distance: f64,
}

impl ChamberLabel {
    pub fn chamber(&self) -> Option<Chamber> {
        match self.kind {
            LabelKind::Chamber(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_outside(&self) -> bool {
        matches!(self.kind, LabelKind::OutsideAmoeba(_))
    }

    pub fn is_on_contour(&self) -> bool {
        matches!(self.kind, LabelKind::OnContour { .. })
    }

    /// Short text tag: `(+,-,+)`, `contour`, `boundary`, `outside:x`, ...
    pub fn tag(&self) -> String {
        match self.kind {
            LabelKind::Chamber(c) => c.to_string(),
            LabelKind::OnContour { boundary: true, .. } => "boundary".into(),
            LabelKind::OnContour { .. } => "contour".into(),
            LabelKind::OutsideAmoeba(Component::Constant) => "outside:1".into(),
            LabelKind::OutsideAmoeba(Component::X) => "outside:x".into(),
            LabelKind::OutsideAmoeba(Component::Y) => "outside:y".into(),
            LabelKind::OutsideAmoeba(Component::U) => "outside:u".into(),
        }
    }
}

/// Residuals of the seven contour equalities at `p`: three interior ones
/// (`1+X-Y-U`, `1+Y-X-U`, `1+U-X-Y`) then four boundary ones
/// (`1-X-Y-U`, `X-1-Y-U`, `Y-1-X-U`, `U-1-X-Y`), and the scale `max(1,X,Y,U)`.
pub fn contour_residuals(p: &LogPoint) -> ([f64; 3], [f64; 4], f64) {
    let [xx, yy, uu] = p.exps();
    let interior = [1.0 + xx - yy - uu, 1.0 + yy - xx - uu, 1.0 + uu - xx - yy];
    let boundary = [1.0 - xx - yy - uu, xx - 1.0 - yy - uu, yy - 1.0 - xx - uu, uu - 1.0 - xx - yy];
    let scale = 1f64.max(xx).max(yy).max(uu);
    (interior, boundary, scale)
}

/// Classifies `p` as outside the amoeba, on the contour, or inside a chamber.
pub fn membership(p: &LogPoint, tol: f64) -> ChamberLabel {
    let (interior, boundary, scale) = contour_residuals(p);
    let dist_int = interior.iter().fold(f64::INFINITY, |m, r| m.min(r.abs()));
    let dist_bdy = boundary.iter().fold(f64::INFINITY, |m, r| m.min(r.abs()));
    let contour_distance = dist_int.min(dist_bdy) / scale;
    let outside = boundary
        .iter()
        .position(|&r| r > 0.0)
        .map(|i| [Component::Constant, Component::X, Component::Y, Component::U][i]);
    let raw = Chamber([interior[0] >= 0.0, interior[1] >= 0.0, interior[2] >= 0.0]);
    let kind = if contour_distance <= tol {
        LabelKind::OnContour {
            adjacent: if outside.is_none() { Some(raw) } else { None },
            boundary: dist_bdy <= dist_int,
        }
    } else if let Some(c) = outside {
        LabelKind::OutsideAmoeba(c)
    } else {
        LabelKind::Chamber(raw)
    };
    ChamberLabel { kind, contour_distance }
}

/// `(r0, r1)` from the frozen chamber table.
pub fn chamber_r_limits(p: &LogPoint, label: &ChamberLabel) -> Result<(f64, f64)> {
    match label.kind {
        LabelKind::Chamber(c) => Ok(c.r_limits(p)),
        _ => Err(Error::NotInChamber),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuarticRoot {
    A,
    B,
    C,
    D,
}

/// The quartic `(s-A)(s-B)(s-C)(s-D)` in `s = r²` and the numerator
/// coefficients of the mixed second derivative at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticParams {
    /// `(1+X)²`
    pub a: f64,
    /// `(Y+U)²`
    pub b: f64,
    /// `(1-X)²`
    pub c: f64,
    /// `(Y-U)²`
    pub d: f64,
    /// `X² + Y² - 1 - U²`
    pub p1: f64,
    /// `(1+X)(1-X)(Y+U)(U-Y)`
    pub p2: f64,
    /// Root names in descending order of value (ties broken by name).
    pub order: [QuarticRoot; 4],
}

impl QuarticParams {
    pub fn root(&self, r: QuarticRoot) -> f64 {
        match r {
            QuarticRoot::A => self.a,
            QuarticRoot::B => self.b,
            QuarticRoot::C => self.c,
            QuarticRoot::D => self.d,
        }
    }

    /// Roots in descending order.
    pub fn sorted(&self) -> [f64; 4] {
        self.order.map(|r| self.root(r))
    }

    /// `|(s-A)(s-B)(s-C)(s-D)|`.
    pub fn abs_quartic(&self, s: f64) -> f64 {
        ((s - self.a) * (s - self.b) * (s - self.c) * (s - self.d)).abs()
    }
}

pub fn quartic_params(p: &LogPoint) -> QuarticParams {
    let [xx, yy, uu] = p.exps();
    let a = (1.0 + xx).powi(2);
    let b = (yy + uu).powi(2);
    let c = (1.0 - xx).powi(2);
    let d = (yy - uu).powi(2);
    let mut order = [QuarticRoot::A, QuarticRoot::B, QuarticRoot::C, QuarticRoot::D];
    let vals = [a, b, c, d];
    order.sort_by(|l, r| {
        vals[*r as usize]
            .partial_cmp(&vals[*l as usize])
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    QuarticParams {
        a,
        b,
        c,
        d,
        p1: xx * xx + yy * yy - 1.0 - uu * uu,
        p2: (1.0 + xx) * (1.0 - xx) * (yy + uu) * (uu - yy),
        order,
    }
}

/// A point of the closed unit 3-simplex (the Newton polytope of `f`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimplexPoint {
    pub t: [f64; 3],
}

/// `(X, Y, U) / (1 + X + Y + U)`, evaluated without overflow.
pub fn compactify(p: &LogPoint) -> SimplexPoint {
    let m = 0f64.max(p.x).max(p.y).max(p.u);
    let w = [(p.x - m).exp(), (p.y - m).exp(), (p.u - m).exp()];
    let total = (-m).exp() + w[0] + w[1] + w[2];
    SimplexPoint { t: w.map(|v| v / total) }
}

/// Vertices of the compactified amoeba of `a_0 + a_1 z_1 + … + a_n z_n`, one
/// per unordered pair `{j, k}` of indices in `0..=n`:
///
/// * `{0, j}`: `t_j = |a_0| / (|a_j| + |a_0|)`, other coordinates zero;
/// * `{j, k}`, `j, k ≥ 1`: `t_j = |a_k| / (|a_j| + |a_k|)`,
///   `t_k = |a_j| / (|a_j| + |a_k|)`, other coordinates zero.
///
/// Generic over the scalar so exact rational arithmetic can be used.
pub fn compactified_vertices<T: Signed + Clone>(coeffs: &[T]) -> Result<Vec<Vec<T>>> {
    if coeffs.len() < 2 {
        return Err(Error::BadCoefficients("need at least a constant and one variable"));
    }
    let n = coeffs.len() - 1;
    let abs: Vec<T> = coeffs.iter().map(|a| a.abs()).collect();
    let mut out = Vec::new();
    for j in 0..=n {
        for k in (j + 1)..=n {
            let denom = abs[j].clone() + abs[k].clone();
            if denom.is_zero() {
                return Err(Error::BadCoefficients("|a_j| + |a_k| = 0 for some j, k"));
            }
            let mut v = vec![T::zero(); n];
            if j == 0 {
                v[k - 1] = abs[0].clone() / denom;
            } else {
                v[j - 1] = abs[k].clone() / denom.clone();
                v[k - 1] = abs[j].clone() / denom;
            }
            out.push(v);
        }
    }
    Ok(out)
}

/// `(x + log|a_1|, y + log|a_2|, u + log|a_3|)`: the Ronkin function of
/// `1 + a_1 z + a_2 w + a_3 t` at `p` equals that of `1 + z + w + t` here.
pub fn translate_coeffs(p: &LogPoint, coeffs: [Complex64; 3]) -> Result<LogPoint> {
    if coeffs.iter().any(|a| a.norm() == 0.0) {
        return Err(Error::BadCoefficients("zero coefficient"));
    }
    Ok(LogPoint::new(
        p.x + coeffs[0].norm().ln(),
        p.y + coeffs[1].norm().ln(),
        p.u + coeffs[2].norm().ln(),
    ))
}

/// Two-variable amoeba of `1 + z + w`: the triangle inequalities on `1, X, Y`.
pub fn in_amoeba_2var(x: f64, y: f64) -> bool {
    let (xx, yy) = (x.exp(), y.exp());
    1.0 <= xx + yy && xx <= 1.0 + yy && yy <= 1.0 + xx
}

#[cfg(test)]
mod tests {
    use super::*;

    const HALF: f64 = -std::f64::consts::LN_2;

    #[test]
    fn membership_examples() {
        let out = membership(&LogPoint::new(-10.0, -10.0, -10.0), CONTOUR_TOL);
        assert_eq!(out.kind, LabelKind::OutsideAmoeba(Component::Constant));
        let l = membership(&LogPoint::new(2f64.ln(), 0.0, 0.0), CONTOUR_TOL);
        assert_eq!(l.kind, LabelKind::Chamber(Chamber([true, false, false])));
        let l = membership(&LogPoint::new(HALF, HALF, HALF), CONTOUR_TOL);
        assert_eq!(l.kind, LabelKind::Chamber(Chamber([true, true, true])));
        let l = membership(&LogPoint::new(40.0, 0.0, 0.0), CONTOUR_TOL);
        assert_eq!(l.kind, LabelKind::OutsideAmoeba(Component::X));
    }

    #[test]
    fn contour_points_detected() {
        // 1 + X = Y + U with X = 1/2, Y = U = 3/4
        let p = LogPoint::new(HALF, 0.75f64.ln(), 0.75f64.ln());
        let l = membership(&p, CONTOUR_TOL);
        assert!(matches!(l.kind, LabelKind::OnContour { boundary: false, adjacent: Some(_) }));
        // 1 = X + Y + U
        let third = (1.0f64 / 3.0).ln();
        let l = membership(&LogPoint::new(third, third, third), 1e-12);
        assert!(matches!(l.kind, LabelKind::OnContour { boundary: true, .. }));
    }

    #[test]
    fn r_limit_examples() {
        let p = LogPoint::new(HALF, HALF, HALF);
        let l = membership(&p, CONTOUR_TOL);
        let (r0, r1) = chamber_r_limits(&p, &l).unwrap();
        assert!((r0 - 0.5).abs() < 1e-15 && (r1 - 1.0).abs() < 1e-15);
        let p = LogPoint::new(2f64.ln(), 0.0, 0.0);
        let l = membership(&p, CONTOUR_TOL);
        let (r0, r1) = chamber_r_limits(&p, &l).unwrap();
        assert!((r0 - 1.0).abs() < 1e-15 && (r1 - 2.0).abs() < 1e-15);
        let out = membership(&LogPoint::new(-9.0, -9.0, -9.0), CONTOUR_TOL);
        assert!(matches!(chamber_r_limits(&p, &out), Err(Error::NotInChamber)));
    }

    #[test]
    fn quartic_example() {
        let q = quartic_params(&LogPoint::new(HALF, HALF, HALF));
        assert!((q.a - 2.25).abs() < 1e-15);
        assert!((q.b - 1.0).abs() < 1e-15);
        assert!((q.c - 0.25).abs() < 1e-15);
        assert_eq!(q.d, 0.0);
        assert!((q.p1 + 0.75).abs() < 1e-15);
        assert_eq!(q.p2, 0.0);
        let q = quartic_params(&LogPoint::new(0.0, 0.3, -0.2));
        assert_eq!(q.c, 0.0);
        assert_eq!(q.p2, 0.0);
    }

    #[test]
    fn compactify_examples() {
        let s = compactify(&LogPoint::new(0.0, 0.0, 0.0));
        assert_eq!(s.t, [0.25; 3]);
        let s = compactify(&LogPoint::new(-40.0, -40.0, -40.0));
        assert!(s.t.iter().all(|v| v.abs() < 1e-15));
        let s = compactify(&LogPoint::new(800.0, 0.0, 0.0));
        assert!((s.t[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn compactified_vertices_float() {
        let v = compactified_vertices(&[2.0, 1.0, 3.0]).unwrap();
        assert_eq!(v.len(), 3);
        assert!((v[0][0] - 2.0 / 3.0).abs() < 1e-15);
        assert!((v[1][1] - 0.4).abs() < 1e-15);
        assert_eq!(v[2], vec![0.75, 0.25]);
        assert!(matches!(
            compactified_vertices(&[0.0, 0.0, 1.0]),
            Err(Error::BadCoefficients(_))
        ));
    }

    #[test]
    fn translate_examples() {
        let one = Complex64::new(1.0, 0.0);
        let p = LogPoint::new(0.3, -0.1, 2.0);
        assert_eq!(translate_coeffs(&p, [one; 3]).unwrap(), p);
        let e = Complex64::new(std::f64::consts::E, 0.0);
        let q = translate_coeffs(&LogPoint::new(0.0, 0.0, 0.0), [e, one, one]).unwrap();
        assert!((q.x - 1.0).abs() < 1e-15 && q.y == 0.0 && q.u == 0.0);
        assert!(matches!(
            translate_coeffs(&p, [one, Complex64::new(0.0, 0.0), one]),
            Err(Error::BadCoefficients(_))
        ));
    }

    #[test]
    fn chamber_parse_roundtrip() {
        for c in Chamber::ALL {
            assert_eq!(Chamber::parse(&c.to_string()), Some(c));
        }
    }
}
