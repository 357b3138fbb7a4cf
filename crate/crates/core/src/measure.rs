//! The Ronkin measure `μ = det Hess(N)` of `1 + z + w + t` (and of
//! `1 + z + w` for comparison): pointwise density, density grids, total
//! mass and density statistics.
//!
//! Off the contour the density is the determinant of the closed-form
//! Hessian. On an interior contour square the density has a logarithmic
//! singularity and is reported as `+∞` with a flag; on the boundary of the
//! amoeba it tends to zero.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::amoeba::{membership, Chamber, ChamberLabel, LabelKind, LogPoint, CONTOUR_TOL};
use crate::quad::gauss_legendre;
use crate::ronkin::{hessian_2var, hessian_closed_in, hessian_quadrature_in};
use crate::serial::{f17, f17_array, f17_vec, fmt17};
use crate::{Error, Result};

/// Volume of the Newton polytope of `1 + z + w + t` (unit 3-simplex).
pub const NEWTON_VOLUME_3: f64 = 1.0 / 6.0;
/// Area of the Newton polygon of `1 + z + w`.
pub const NEWTON_VOLUME_2: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DensityFlag {
    /// On an interior contour square: the density diverges there.
    InteriorContour,
    /// On the boundary of the amoeba: the limit 0 is reported.
    BoundaryContour,
    /// The closed form failed and the quadrature Hessian was used.
    QuadratureFallback,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityPoint {
    pub density: f64,
    pub label: ChamberLabel,
    pub flag: Option<DensityFlag>,
}

fn chamber_density(p: &LogPoint, c: Chamber) -> Result<(f64, Option<DensityFlag>)> {
    let (h, flag) = match hessian_closed_in(p, c) {
        Ok(h) => (h, None),
        Err(e) => {
            log::debug!("closed Hessian failed at {p} ({e}); using quadrature");
            let opts = crate::quad::QuadOptions::with_tol(1e-15, 1e-12);
            (hessian_quadrature_in(p, c, &opts)?, Some(DensityFlag::QuadratureFallback))
        }
    };
    let det = h.det();
    if det < -1e-10 {
        log::warn!("negative Hessian determinant {det} at {p}");
    }
    Ok((det.max(0.0), flag))
}

/// Density with its location label and any flag.
pub fn density_at(p: &LogPoint) -> Result<DensityPoint> {
    if !p.is_finite() {
        return Err(Error::InvalidInput(format!("non-finite point {p}")));
    }
    let label = membership(p, CONTOUR_TOL);
    let (density, flag) = match label.kind {
        LabelKind::OutsideAmoeba(_) => (0.0, None),
        LabelKind::OnContour { boundary: true, .. } => (0.0, Some(DensityFlag::BoundaryContour)),
        LabelKind::OnContour { boundary: false, .. } => {
            (f64::INFINITY, Some(DensityFlag::InteriorContour))
        }
        LabelKind::Chamber(c) => chamber_density(p, c)?,
    };
    Ok(DensityPoint { density, label, flag })
}

pub fn density(p: &LogPoint) -> Result<f64> {
    density_at(p).map(|d| d.density)
}

/// Density of the Ronkin measure of `1 + z + w`.
pub fn density_2var(x: f64, y: f64) -> f64 {
    let h = hessian_2var(x, y);
    h[0][0] * h[1][1] - h[0][1] * h[1][0]
}

/// Integrand used by the mass integrator: contour points (a null set) get 0
/// and failures are logged and counted as 0.
fn mass_integrand(p: &LogPoint) -> f64 {
    let label = membership(p, CONTOUR_TOL);
    match label.kind {
        LabelKind::Chamber(c) => chamber_density(p, c).map(|d| d.0).unwrap_or_else(|e| {
            log::warn!("density failed at {p}: {e}");
            0.0
        }),
        _ => 0.0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridBox {
    #[serde(with = "f17_array")]
    pub min: [f64; 3],
    #[serde(with = "f17_array")]
    pub max: [f64; 3],
}

impl GridBox {
    pub fn new(min: [f64; 3], max: [f64; 3]) -> Result<Self> {
        let b = Self { min, max };
        b.validate()?;
        Ok(b)
    }

    pub fn cube(lo: f64, hi: f64) -> Result<Self> {
        Self::new([lo; 3], [hi; 3])
    }

    fn validate(&self) -> Result<()> {
        for i in 0..3 {
            if !(self.min[i].is_finite() && self.max[i].is_finite() && self.min[i] < self.max[i]) {
                return Err(Error::InvalidInput(format!(
                    "bad box axis {i}: [{}, {}]",
                    self.min[i], self.max[i]
                )));
            }
        }
        Ok(())
    }

    fn axis(&self, i: usize, n: usize) -> Vec<f64> {
        let step = (self.max[i] - self.min[i]) / (n - 1) as f64;
        (0..n)
            .map(|k| if k == n - 1 { self.max[i] } else { self.min[i] + k as f64 * step })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridMetadata {
    pub polynomial: String,
    #[serde(rename = "box")]
    pub bbox: GridBox,
    pub resolution: [usize; 3],
    #[serde(with = "f17")]
    pub contour_tol: f64,
    /// Left empty unless the caller sets it, so output is reproducible.
    pub timestamp: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridCell {
    #[serde(with = "f17_array")]
    pub point: [f64; 3],
    /// Non-finite values (contour) are `null` in JSON.
    #[serde(with = "f17")]
    pub density: f64,
    pub label: String,
    pub flag: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityGrid {
    pub metadata: GridMetadata,
    pub axes: [Axis; 3],
    pub values: Vec<GridCell>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Axis(#[serde(with = "f17_vec")] pub Vec<f64>);

/// Density over the lattice of `resolution[i]` equispaced points per axis,
/// `x` varying slowest. Failures at single points are recorded in the cell.
pub fn density_grid(bbox: &GridBox, resolution: [usize; 3]) -> Result<DensityGrid> {
    bbox.validate()?;
    if resolution.iter().any(|&n| n < 2) {
        return Err(Error::InvalidInput(format!("resolution must be >= 2 per axis, got {resolution:?}")));
    }
    let axes = [0, 1, 2].map(|i| bbox.axis(i, resolution[i]));
    let [nx, ny, nu] = resolution;
    let values: Vec<GridCell> = (0..nx * ny * nu)
        .into_par_iter()
        .map(|idx| {
            let (i, j, k) = (idx / (ny * nu), (idx / nu) % ny, idx % nu);
            let point = [axes[0][i], axes[1][j], axes[2][k]];
            let p = LogPoint::from_array(point);
            match density_at(&p) {
                Ok(d) => GridCell {
                    point,
                    density: d.density,
                    label: d.label.tag(),
                    flag: d.flag.map(|f| {
                        serde_json::to_value(f).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default()
                    }),
                },
                Err(e) => GridCell {
                    point,
                    density: f64::NAN,
                    label: membership(&p, CONTOUR_TOL).tag(),
                    flag: Some(format!("error: {e}")),
                },
            }
        })
        .collect();
    Ok(DensityGrid {
        metadata: GridMetadata {
            polynomial: "1+z+w+t".into(),
            bbox: *bbox,
            resolution,
            contour_tol: CONTOUR_TOL,
            timestamp: None,
        },
        axes: axes.map(Axis),
        values,
    })
}

impl DensityGrid {
    /// CSV with header `x,y,u,density,chamber`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,u,density,chamber\n");
        for c in &self.values {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                fmt17(c.point[0]),
                fmt17(c.point[1]),
                fmt17(c.point[2]),
                fmt17(c.density),
                c.label
            ));
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::InvalidInput(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidInput(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassOptions {
    /// Target error relative to the Newton volume.
    pub rel_tol: f64,
    /// Cap on the number of leaf cells of the adaptive cubature.
    pub max_cells: usize,
    /// `BoxTooSmall` is returned below this coverage.
    pub min_coverage: f64,
    /// Initial cells per unit length.
    pub cells_per_unit: f64,
    /// Cells crossing the contour are split until their width is below this.
    pub contour_cell_width: f64,
}

impl Default for MassOptions {
    fn default() -> Self {
        Self {
            rel_tol: 2e-3,
            max_cells: 400_000,
            min_coverage: 0.99,
            cells_per_unit: 1.0,
            contour_cell_width: 0.25,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MassReport {
    #[serde(with = "f17")]
    pub mass: f64,
    #[serde(with = "f17")]
    pub newton_volume: f64,
    /// `mass(box) / mass(box doubled about its centre)`.
    #[serde(with = "f17")]
    pub coverage_estimate: f64,
    #[serde(with = "f17")]
    pub mass_expanded: f64,
    #[serde(with = "f17")]
    pub error_estimate: f64,
    #[serde(with = "f17_vec")]
    pub box_min: Vec<f64>,
    #[serde(with = "f17_vec")]
    pub box_max: Vec<f64>,
    pub cells: usize,
}

#[derive(Debug, Clone, Copy)]
struct Cell<const D: usize> {
    lo: [f64; D],
    hi: [f64; D],
    value: f64,
    error: f64,
}

/// Tensor Gauss–Legendre rules of 3 and 2 points per axis on one cell; the
/// difference is the error estimate.
fn cell_rule<const D: usize, F: Fn(&[f64; D]) -> f64>(
    lo: [f64; D],
    hi: [f64; D],
    f: &F,
    g3: &[(f64, f64)],
    g2: &[(f64, f64)],
) -> (f64, f64) {
    let tensor = |rule: &[(f64, f64)]| {
        let n = rule.len();
        let mut total = 0.0;
        for idx in 0..n.pow(D as u32) {
            let mut p = [0.0; D];
            let mut w = 1.0;
            let mut r = idx;
            for a in 0..D {
                let (t, wt) = rule[r % n];
                r /= n;
                let half = 0.5 * (hi[a] - lo[a]);
                p[a] = lo[a] + half * (1.0 + t);
                w *= wt * half;
            }
            total += w * f(&p);
        }
        total
    };
    let v3 = tensor(g3);
    let v2 = tensor(g2);
    (v3, (v3 - v2).abs())
}

struct Geometry<'a, const D: usize> {
    /// Shrinks a cell to a box containing its intersection with the
    /// amoeba, or `None` when the intersection is empty. The density
    /// vanishes off the amoeba, so integrating over the shrunken box is
    /// exact, and thin tentacles are resolved without refinement.
    contract: &'a (dyn Fn([f64; D], [f64; D]) -> Option<([f64; D], [f64; D])> + Sync),
    /// True when a non-smooth locus may cross the cell.
    crosses: &'a (dyn Fn(&[f64; D], &[f64; D]) -> bool + Sync),
    /// True when the density may jump inside the cell. Both tensor rules
    /// can miss a jump together, so such cells get an error of half their
    /// value.
    jumps: Option<&'a (dyn Fn(&[f64; D], &[f64; D]) -> bool + Sync)>,
}

/// Adaptive cubature of `f` over the box doubled about its centre, with
/// cell faces aligned to the original box so both masses come out of one
/// run. Splitting proceeds in deterministic batches, so the result does not
/// depend on the number of worker threads.
fn adaptive_mass<const D: usize, F: Fn(&[f64; D]) -> f64 + Sync>(
    min: [f64; D],
    max: [f64; D],
    f: F,
    geom: Geometry<'_, D>,
    newton_volume: f64,
    opts: &MassOptions,
) -> Result<MassReport> {
    for a in 0..D {
        if !(min[a].is_finite() && max[a].is_finite() && min[a] < max[a]) {
            return Err(Error::InvalidInput(format!("bad box axis {a}: [{}, {}]", min[a], max[a])));
        }
    }
    let g3 = gauss_legendre(3);
    let g2 = gauss_legendre(2);
    let mut emin = [0.0; D];
    let mut emax = [0.0; D];
    let mut counts = [0usize; D];
    for a in 0..D {
        let half = max[a] - min[a];
        emin[a] = min[a] - 0.5 * half;
        emax[a] = max[a] + 0.5 * half;
        // A multiple of 4 keeps the original faces on cell boundaries.
        let per_quarter = ((half * opts.cells_per_unit * 0.5).ceil() as usize).max(1);
        counts[a] = 4 * per_quarter;
    }
    let total_initial: usize = counts.iter().product();
    let eval = |lo: [f64; D], hi: [f64; D]| -> Cell<D> {
        let Some((clo, chi)) = (geom.contract)(lo, hi) else {
            return Cell { lo, hi, value: 0.0, error: 0.0 };
        };
        let (value, mut error) = cell_rule(clo, chi, &f, &g3, &g2);
        let width = (0..D).fold(0f64, |m, a| m.max(chi[a] - clo[a]));
        if let Some(jumps) = geom.jumps {
            if jumps(&clo, &chi) {
                error = error.max(0.5 * value.abs());
            }
        }
        if width > opts.contour_cell_width && (geom.crosses)(&clo, &chi) {
            error = error.max(f64::MAX / 1e10);
        }
        Cell { lo, hi, value, error }
    };
    let mut cells: Vec<Cell<D>> = (0..total_initial)
        .into_par_iter()
        .map(|idx| {
            let mut lo = [0.0; D];
            let mut hi = [0.0; D];
            let mut r = idx;
            for a in 0..D {
                let k = r % counts[a];
                r /= counts[a];
                let step = (emax[a] - emin[a]) / counts[a] as f64;
                lo[a] = emin[a] + k as f64 * step;
                hi[a] = if k + 1 == counts[a] { emax[a] } else { emin[a] + (k + 1) as f64 * step };
            }
            eval(lo, hi)
        })
        .collect();
    let target = opts.rel_tol * newton_volume;
    let children = 1usize << D;
    loop {
        let total_err: f64 = cells.iter().map(|c| c.error).sum();
        if total_err <= target || cells.len() + children > opts.max_cells {
            break;
        }
        // Split the cells carrying the largest errors, at most a fixed
        // fraction of the total per round.
        let mut order: Vec<usize> = (0..cells.len()).filter(|&i| cells[i].error > 0.0).collect();
        order.sort_by(|&i, &j| cells[j].error.total_cmp(&cells[i].error).then(i.cmp(&j)));
        let mut chosen = Vec::new();
        let mut removed = 0.0;
        let budget = (opts.max_cells - cells.len()) / (children - 1);
        for &i in &order {
            if chosen.len() >= budget.max(1) || (removed >= 0.5 * total_err && chosen.len() >= 64) {
                break;
            }
            removed += cells[i].error;
            chosen.push(i);
        }
        if chosen.is_empty() {
            break;
        }
        let parents: Vec<Cell<D>> = chosen.iter().map(|&i| cells[i]).collect();
        let new: Vec<Cell<D>> = parents
            .par_iter()
            .flat_map_iter(|c| {
                let mid: [f64; D] = std::array::from_fn(|a| 0.5 * (c.lo[a] + c.hi[a]));
                (0..children).map(move |m| {
                    let lo = std::array::from_fn(|a| if m >> a & 1 == 0 { c.lo[a] } else { mid[a] });
                    let hi = std::array::from_fn(|a| if m >> a & 1 == 0 { mid[a] } else { c.hi[a] });
                    (lo, hi)
                })
            })
            .map(|(lo, hi)| eval(lo, hi))
            .collect();
        chosen.sort_unstable();
        for &i in chosen.iter().rev() {
            cells.swap_remove(i);
        }
        cells.extend(new);
    }
    let inside = |c: &Cell<D>| (0..D).all(|a| c.lo[a] >= min[a] && c.hi[a] <= max[a]);
    // Sum in a canonical cell order so the value is independent of the
    // order cells were produced in.
    cells.sort_by(|a, b| {
        a.lo.iter()
            .zip(b.lo.iter())
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let mass: f64 = cells.iter().filter(|c| inside(c)).map(|c| c.value).sum();
    let mass_expanded: f64 = cells.iter().map(|c| c.value).sum();
    let error_estimate: f64 = cells.iter().map(|c| c.error.min(c.value.abs().max(1.0))).sum();
    let coverage_estimate = if mass_expanded > 0.0 { (mass / mass_expanded).min(1.0) } else { 0.0 };
    let report = MassReport {
        mass,
        newton_volume,
        coverage_estimate,
        mass_expanded,
        error_estimate,
        box_min: min.to_vec(),
        box_max: max.to_vec(),
        cells: cells.len(),
    };
    if coverage_estimate < opts.min_coverage {
        return Err(Error::BoxTooSmall { coverage: coverage_estimate, required: opts.min_coverage });
    }
    Ok(report)
}

/// Interval contraction of a log-space box against the amoeba of
/// `1 + Σ z_i`, which in exponential coordinates `E_i = e^{x_i}` is
/// `Σ E_i ≥ 1` and `E_i ≤ 1 + Σ_{j≠i} E_j` for every `i`. Each constraint
/// bounds one coordinate by the others; a few sweeps reach a fixed point
/// closely enough.
fn contract_to_amoeba<const D: usize>(lo: [f64; D], hi: [f64; D]) -> Option<([f64; D], [f64; D])> {
    let mut e0: [f64; D] = lo.map(f64::exp);
    let mut e1: [f64; D] = hi.map(f64::exp);
    for _ in 0..4 {
        for i in 0..D {
            let others_hi: f64 = (0..D).filter(|&j| j != i).map(|j| e1[j]).sum();
            // Σ E ≥ 1 and E_i ≤ 1 + Σ others
            e0[i] = e0[i].max(1.0 - others_hi);
            e1[i] = e1[i].min(1.0 + others_hi);
            // E_j ≤ 1 + Σ_{k≠j} E_k gives E_i ≥ E_j - 1 - Σ_{k≠i,j} E_k
            for j in (0..D).filter(|&j| j != i) {
                let rest: f64 = (0..D).filter(|&k| k != i && k != j).map(|k| e1[k]).sum();
                e0[i] = e0[i].max(e0[j] - 1.0 - rest);
            }
            if e0[i] > e1[i] {
                return None;
            }
        }
    }
    let clo = std::array::from_fn(|i| lo[i].max(e0[i].ln()));
    let chi = std::array::from_fn(|i| hi[i].min(e1[i].ln()));
    (0..D).all(|i| clo[i] < chi[i]).then_some((clo, chi))
}

fn exp_range(lo: f64, hi: f64) -> (f64, f64) {
    (lo.exp(), hi.exp())
}

/// Total mass of the Ronkin measure of `1 + z + w + t` over `bbox`.
///
/// Cells on which an exact interval test puts every point in one
/// complement component contribute 0 without evaluation; cells that may
/// meet an interior contour square are split down to
/// `opts.contour_cell_width` before the error estimate takes over.
pub fn total_mass(bbox: &GridBox, opts: &MassOptions) -> Result<MassReport> {
    bbox.validate()?;
    let contract = |lo: [f64; 3], hi: [f64; 3]| contract_to_amoeba(lo, hi);
    let crosses = |lo: &[f64; 3], hi: &[f64; 3]| {
        let (x0, x1) = exp_range(lo[0], hi[0]);
        let (y0, y1) = exp_range(lo[1], hi[1]);
        let (u0, u1) = exp_range(lo[2], hi[2]);
        let straddles = |lo: f64, hi: f64| lo <= 0.0 && hi >= 0.0;
        straddles(1.0 + x0 - y1 - u1, 1.0 + x1 - y0 - u0)
            || straddles(1.0 + y0 - x1 - u1, 1.0 + y1 - x0 - u0)
            || straddles(1.0 + u0 - x1 - y1, 1.0 + u1 - x0 - y0)
    };
    adaptive_mass(
        bbox.min,
        bbox.max,
        |p: &[f64; 3]| mass_integrand(&LogPoint::from_array(*p)),
        Geometry { contract: &contract, crosses: &crosses, jumps: None },
        NEWTON_VOLUME_3,
        opts,
    )
}

/// Total mass of the Ronkin measure of `1 + z + w` over a rectangle. The
/// density jumps from `1/π²` to 0 across the boundary of the amoeba, so
/// cells meeting the boundary are refined.
pub fn total_mass_2var(min: [f64; 2], max: [f64; 2], opts: &MassOptions) -> Result<MassReport> {
    let contract = |lo: [f64; 2], hi: [f64; 2]| contract_to_amoeba(lo, hi);
    let crosses = |lo: &[f64; 2], hi: &[f64; 2]| {
        let (x0, x1) = exp_range(lo[0], hi[0]);
        let (y0, y1) = exp_range(lo[1], hi[1]);
        let straddles = |lo: f64, hi: f64| lo <= 0.0 && hi >= 0.0;
        straddles(x0 + y0 - 1.0, x1 + y1 - 1.0)
            || straddles(x0 - 1.0 - y1, x1 - 1.0 - y0)
            || straddles(y0 - 1.0 - x1, y1 - 1.0 - x0)
    };
    adaptive_mass(
        min,
        max,
        |p: &[f64; 2]| density_2var(p[0], p[1]),
        Geometry { contract: &contract, crosses: &crosses, jumps: Some(&crosses) },
        NEWTON_VOLUME_2,
        opts,
    )
}

/// Summary statistics of the density over amoeba-interior lattice points
/// off the contour.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FloorStats {
    pub count: usize,
    pub min: Option<f64>,
    pub max: Option<f64>,
    pub q05: Option<f64>,
    pub median: Option<f64>,
    pub q95: Option<f64>,
}

impl FloorStats {
    fn from_values(mut v: Vec<f64>) -> Self {
        v.sort_by(f64::total_cmp);
        let q = |t: f64| v.get(((v.len() - 1) as f64 * t).round() as usize).copied();
        if v.is_empty() {
            return Self { count: 0, min: None, max: None, q05: None, median: None, q95: None };
        }
        Self {
            count: v.len(),
            min: v.first().copied(),
            max: v.last().copied(),
            q05: q(0.05),
            median: q(0.5),
            q95: q(0.95),
        }
    }
}

/// Density statistics of `1 + z + w + t` over a lattice in `bbox`, skipping
/// points outside the amoeba, on the contour, or where evaluation fails.
pub fn density_floor_scan(bbox: &GridBox, resolution: [usize; 3]) -> Result<FloorStats> {
    let grid = density_grid(bbox, resolution)?;
    let vals = grid
        .values
        .iter()
        .filter(|c| c.flag.is_none() && !c.label.starts_with("outside") && c.density.is_finite())
        .map(|c| c.density)
        .collect();
    Ok(FloorStats::from_values(vals))
}

/// The same statistics for `1 + z + w` over a rectangle.
pub fn density_floor_scan_2var(min: [f64; 2], max: [f64; 2], resolution: [usize; 2]) -> Result<FloorStats> {
    if resolution.iter().any(|&n| n < 2) {
        return Err(Error::InvalidInput("resolution must be >= 2 per axis".into()));
    }
    let mut vals = Vec::new();
    for i in 0..resolution[0] {
        for j in 0..resolution[1] {
            let x = min[0] + (max[0] - min[0]) * i as f64 / (resolution[0] - 1) as f64;
            let y = min[1] + (max[1] - min[1]) * j as f64 / (resolution[1] - 1) as f64;
            let (xx, yy) = (x.exp(), y.exp());
            let margin = (xx + yy - 1.0).min(1.0 + yy - xx).min(1.0 + xx - yy);
            if margin > CONTOUR_TOL * 1f64.max(xx).max(yy) {
                vals.push(density_2var(x, y));
            }
        }
    }
    Ok(FloorStats::from_values(vals))
}

/// `1/π²`, the constant density of the Ronkin measure of `1 + z + w`.
pub const DENSITY_2VAR: f64 = 1.0 / (PI * PI);
