//! Entanglement entropy, mutual information and correlators for two disjoint
//! boundary intervals.
//!
//! Mutual information follows the minimal-curve competition: the union
//! entropy is the smaller of the disconnected candidate (one geodesic per
//! interval) and the connected candidate (geodesics joining the outer and
//! inner endpoints), so
//!
//! ```text
//! I(A:B) = max(0, [L(u1,v1) + L(u2,v2) − L(u1,v2) − L(v1,u2)] / 4G)
//! ```
//!
//! The UV cutoff cancels identically between the two candidates.  On pure
//! AdS this reduces to the piecewise law [`mi_pure_ads`]: zero below
//! cross-ratio 1/2, (c/3)·log(x/(1−x)) above.
//!
//! Finite-size (torus) mutual information replaces each thermal sinh by the
//! free-fermion torus correlator, giving [`mi_torus`] (non-rotating) and
//! [`mi_torus_rotating`] (near-extremal): a cross-ratio term plus the theta
//! correction f_ν.  Both return the *unclamped* value — the transition
//! solver [`transition_point`] needs the sign change, which a clamped MI
//! does not expose.

use std::f64::consts::PI;

use thiserror::Error;

use crate::geometry::{log_sinh, BulkGeometry, GeometryError, GeometryKind};
use crate::theta::{self, Sector, ThetaContext, ThetaError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ObservableError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Theta(#[from] ThetaError),
    #[error("invalid interval pair: {0}")]
    InvalidIntervals(&'static str),
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("mutual information does not change sign over the scan range")]
    NoBracket,
    #[error("pure AdS has no horizon")]
    NoHorizon,
}

/// Two disjoint equal-size boundary intervals A = `[u1, v1]`, B = `[u2, v2]`.
///
/// Strict ordering u1 < v1 < u2 < v2 and equal sizes (relative 1e−9) are
/// enforced on construction; every downstream formula assumes both.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalPair {
    u1: f64,
    v1: f64,
    u2: f64,
    v2: f64,
}

impl IntervalPair {
    pub fn new(u1: f64, v1: f64, u2: f64, v2: f64) -> Result<Self, ObservableError> {
        if ![u1, v1, u2, v2].iter().all(|x| x.is_finite()) {
            return Err(ObservableError::InvalidIntervals(
                "positions must be finite",
            ));
        }
        if !(u1 < v1 && v1 < u2 && u2 < v2) {
            return Err(ObservableError::InvalidIntervals(
                "need strict ordering u1 < v1 < u2 < v2",
            ));
        }
        let (la, lb) = (v1 - u1, v2 - u2);
        if (la - lb).abs() > 1e-9 * la.max(lb) {
            return Err(ObservableError::InvalidIntervals(
                "intervals must have equal size",
            ));
        }
        Ok(IntervalPair { u1, v1, u2, v2 })
    }

    pub fn endpoints(&self) -> (f64, f64, f64, f64) {
        (self.u1, self.v1, self.u2, self.v2)
    }

    /// Common interval size ℓ.
    pub fn size(&self) -> f64 {
        self.v1 - self.u1
    }

    /// Separation d = |v1 − u2|.
    pub fn separation(&self) -> f64 {
        self.u2 - self.v1
    }

    /// Conformal four-point ratio x = (|u1−v1||u2−v2|)/(|u1−u2||v1−v2|)
    /// = ℓ²/(ℓ+d)² ∈ (0,1).
    pub fn cross_ratio(&self) -> f64 {
        ((self.v1 - self.u1) * (self.v2 - self.u2))
            / ((self.u2 - self.u1) * (self.v2 - self.v1))
    }

    /// Shifts both intervals by a constant.
    pub fn translated(&self, shift: f64) -> Result<Self, ObservableError> {
        IntervalPair::new(
            self.u1 + shift,
            self.v1 + shift,
            self.u2 + shift,
            self.v2 + shift,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MiPhase {
    Connected,
    Disconnected,
}

/// Outcome of the RT saddle competition for one interval pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MiResult {
    /// Clamped mutual information, max(0, (L_dis − L_con)/4G).
    pub value: f64,
    pub phase: MiPhase,
    pub length_connected: f64,
    pub length_disconnected: f64,
}

impl MiResult {
    /// Unclamped (L_dis − L_con)/(4G); negative in the disconnected phase.
    pub fn unclamped(&self, newton_constant: f64) -> f64 {
        (self.length_disconnected - self.length_connected) / (4.0 * newton_constant)
    }
}

/// Entanglement entropy of the single interval [a, b]: geodesic length over
/// 4G_N.
pub fn interval_entropy(
    geometry: &BulkGeometry,
    a: f64,
    b: f64,
) -> Result<f64, ObservableError> {
    if !(a < b) {
        return Err(ObservableError::Domain("interval needs a < b"));
    }
    Ok(geometry.geodesic_length(a, b)? / (4.0 * geometry.newton_constant()))
}

/// Mutual information between the two intervals from the minimum over the
/// connected and disconnected geodesic pairings.
pub fn mutual_information(
    geometry: &BulkGeometry,
    pair: &IntervalPair,
) -> Result<MiResult, ObservableError> {
    let (u1, v1, u2, v2) = pair.endpoints();
    let length_disconnected =
        geometry.geodesic_length(u1, v1)? + geometry.geodesic_length(u2, v2)?;
    let length_connected =
        geometry.geodesic_length(u1, v2)? + geometry.geodesic_length(v1, u2)?;
    let unclamped =
        (length_disconnected - length_connected) / (4.0 * geometry.newton_constant());
    let connected = length_connected < length_disconnected;
    Ok(MiResult {
        value: if connected { unclamped } else { 0.0 },
        phase: if connected {
            MiPhase::Connected
        } else {
            MiPhase::Disconnected
        },
        length_connected,
        length_disconnected,
    })
}

/// Piecewise pure-AdS mutual information: 0 for x < 1/2,
/// (c/3)·log(x/(1−x)) for x ≥ 1/2.  Continuous at x = 1/2 with a
/// first-derivative jump of 4c/3.
pub fn mi_pure_ads(x: f64, c: f64) -> Result<f64, ObservableError> {
    if !(x > 0.0 && x < 1.0) {
        return Err(ObservableError::Domain("cross ratio must lie in (0,1)"));
    }
    if !(c > 0.0) || !c.is_finite() {
        return Err(ObservableError::Domain("central charge must be > 0"));
    }
    Ok(if x < 0.5 {
        0.0
    } else {
        c / 3.0 * (x / (1.0 - x)).ln()
    })
}

/// Theta correction f_ν of the finite-size MI: the log of the sector-theta
/// ratio over the four pairwise separations, arguments iπsT at τ = iLT.
fn theta_correction(
    pair: &IntervalPair,
    temperature: f64,
    length: f64,
    sector: Sector,
    tol: f64,
) -> Result<f64, ObservableError> {
    if !matches!(sector, Sector::Three | Sector::Four) {
        return Err(ThetaError::SectorUnsupported(sector.index()).into());
    }
    let ctx = ThetaContext::new(sector, length * temperature)?.with_tol(tol)?;
    let (u1, v1, u2, v2) = pair.endpoints();
    let log_theta = |sep: f64| -> Result<f64, ObservableError> {
        Ok(theta::theta(&ctx, PI * sep * temperature)?.ln())
    };
    Ok(log_theta(v2 - u1)? + log_theta(u2 - v1)? - log_theta(v1 - u1)? - log_theta(v2 - u2)?)
}

fn check_torus_pair(
    pair: &IntervalPair,
    temperature: f64,
    length: f64,
) -> Result<(), ObservableError> {
    if !(temperature > 0.0) || !temperature.is_finite() {
        return Err(ObservableError::Domain("temperature must be > 0"));
    }
    let (u1, _, _, v2) = pair.endpoints();
    if !(u1 >= 0.0 && v2 < length) {
        return Err(ObservableError::Domain(
            "all four points must lie inside [0, L)",
        ));
    }
    Ok(())
}

/// Finite-size mutual information on the torus (non-rotating):
/// (c/3)·[log(x/(1−x)) + f_ν(x, τ=iLT)].  Returned unclamped.
pub fn mi_torus(
    pair: &IntervalPair,
    temperature: f64,
    length: f64,
    sector: Sector,
    c: f64,
) -> Result<f64, ObservableError> {
    mi_torus_with_tol(pair, temperature, length, sector, c, theta::DEFAULT_TOL)
}

pub fn mi_torus_with_tol(
    pair: &IntervalPair,
    temperature: f64,
    length: f64,
    sector: Sector,
    c: f64,
    tol: f64,
) -> Result<f64, ObservableError> {
    check_torus_pair(pair, temperature, length)?;
    let x = pair.cross_ratio();
    let f = theta_correction(pair, temperature, length, sector, tol)?;
    Ok(c / 3.0 * ((x / (1.0 - x)).ln() + f))
}

/// Finite-size mutual information for the near-extremal rotating background:
/// the pure-AdS right-mover term doubles the cross-ratio part while the
/// thermal left movers contribute the theta correction at τ = iLT_L.
/// Returned unclamped.
pub fn mi_torus_rotating(
    pair: &IntervalPair,
    t_left: f64,
    length: f64,
    sector: Sector,
    c: f64,
) -> Result<f64, ObservableError> {
    mi_torus_rotating_with_tol(pair, t_left, length, sector, c, theta::DEFAULT_TOL)
}

pub fn mi_torus_rotating_with_tol(
    pair: &IntervalPair,
    t_left: f64,
    length: f64,
    sector: Sector,
    c: f64,
    tol: f64,
) -> Result<f64, ObservableError> {
    check_torus_pair(pair, t_left, length)?;
    let x = pair.cross_ratio();
    let f = theta_correction(pair, t_left, length, sector, tol)?;
    Ok(2.0 * c / 3.0 * (x / (1.0 - x)).ln() + c / 3.0 * f)
}

/// Which finite-size MI model the transition solver roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransitionModel {
    NonRotatingTorus,
    RotatingTorus,
}

/// Cross-ratio x₀ at which the unclamped finite-size MI changes sign.
///
/// Scan geometry: system length L = 1, temperature T = tau_abs (so
/// |τ| = LT = tau_abs), interval size l = l_over_l, separation d varied.
/// The solver expands d geometrically from 1e−4·l until the sign flips,
/// then bisects until the bracket is below 1e−13 in x (well inside the
/// 1e−6 contract).
pub fn transition_point(
    model: TransitionModel,
    tau_abs: f64,
    sector: Sector,
    c: f64,
    l_over_l: f64,
) -> Result<f64, ObservableError> {
    transition_point_with_tol(model, tau_abs, sector, c, l_over_l, theta::DEFAULT_TOL)
}

pub fn transition_point_with_tol(
    model: TransitionModel,
    tau_abs: f64,
    sector: Sector,
    c: f64,
    l_over_l: f64,
    tol: f64,
) -> Result<f64, ObservableError> {
    if !(tau_abs > 0.0) || !tau_abs.is_finite() {
        return Err(ObservableError::Domain("tau_abs must be > 0"));
    }
    if !(l_over_l > 0.0 && l_over_l < 0.5) {
        return Err(ObservableError::Domain(
            "l_over_l must lie in (0, 1/2) so both intervals fit in the system",
        ));
    }
    let (length, temperature, l) = (1.0, tau_abs, l_over_l);
    let eval = |d: f64| -> Result<f64, ObservableError> {
        let pair = IntervalPair::new(0.0, l, l + d, 2.0 * l + d)?;
        match model {
            TransitionModel::NonRotatingTorus => {
                mi_torus_with_tol(&pair, temperature, length, sector, c, tol)
            }
            TransitionModel::RotatingTorus => {
                mi_torus_rotating_with_tol(&pair, temperature, length, sector, c, tol)
            }
        }
    };
    let cross = |d: f64| (l / (l + d)).powi(2);

    let d_max = (100.0 * l).min((length - 2.0 * l) * (1.0 - 1e-12));
    let mut lo = 1e-4 * l;
    if d_max <= lo {
        return Err(ObservableError::NoBracket);
    }
    if !(eval(lo)? > 0.0) {
        return Err(ObservableError::NoBracket);
    }
    let mut hi = None;
    let mut d = lo;
    while d < d_max {
        let next = (d * 1.5).min(d_max);
        let v = eval(next)?;
        if !v.is_finite() {
            // theta4 can cross zero at large separations; past that point the
            // finite-size formula no longer applies
            break;
        }
        if v <= 0.0 {
            lo = d;
            hi = Some(next);
            break;
        }
        d = next;
    }
    let mut hi = hi.ok_or(ObservableError::NoBracket)?;
    for _ in 0..300 {
        if cross(lo) - cross(hi) < 1e-13 || hi - lo <= f64::EPSILON * hi {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let v = eval(mid)?;
        if v.is_finite() && v > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(cross(0.5 * (lo + hi)))
}

/// log of the holographic two-point function of a dimension-Δ primary.
///
/// Normalization: unit coefficient in the short-distance limit
/// (|Δx|^{−2Δ} for pure AdS and non-rotating BTZ; the rotating background
/// uses the two-sector product form, whose own short-distance power is
/// |Δx|^{−4Δ}).  The log form stays finite deep in the exponential tail
/// where the correlator itself underflows.
pub fn two_point_correlator_log(
    geometry: &BulkGeometry,
    delta: f64,
    x_a: f64,
    x_b: f64,
) -> Result<f64, ObservableError> {
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(ObservableError::Domain("scaling dimension must be > 0"));
    }
    let s = (x_a - x_b).abs();
    if s == 0.0 {
        return Err(GeometryError::CoincidentPoints.into());
    }
    let scales = geometry.thermal_scales();
    // ln[(beta/pi) sinh(pi s/beta)], -> ln(s) for infinite beta
    let sector_log = |beta: f64| {
        if beta.is_infinite() {
            s.ln()
        } else {
            (beta / PI).ln() + log_sinh(PI * s / beta)
        }
    };
    Ok(match geometry.kind() {
        GeometryKind::PureAds => -2.0 * delta * s.ln(),
        GeometryKind::NonRotatingBtz => -2.0 * delta * sector_log(scales.beta),
        GeometryKind::RotatingBtz => {
            -2.0 * delta * (sector_log(scales.beta_left) + sector_log(scales.beta_right))
        }
    })
}

/// Holographic two-point function; see [`two_point_correlator_log`] for the
/// normalization convention.
pub fn two_point_correlator(
    geometry: &BulkGeometry,
    delta: f64,
    x_a: f64,
    x_b: f64,
) -> Result<f64, ObservableError> {
    Ok(two_point_correlator_log(geometry, delta, x_a, x_b)?.exp())
}

/// Separation at which the correlator crosses from algebraic to exponential
/// decay: 2πT|Δx| = 1, i.e. |Δx| = ℓ²/r₊ (= z₊ in units ℓ = 1).
pub fn crossover_separation(geometry: &BulkGeometry) -> Result<f64, ObservableError> {
    if geometry.kind() == GeometryKind::PureAds {
        return Err(ObservableError::NoHorizon);
    }
    Ok(geometry.ads_radius() * geometry.ads_radius() / geometry.r_plus())
}

/// Both sides of the correlation bound I ≥ ⟨O_A O_B⟩²/(2|O_A|²|O_B|²)
/// (connected correlator, ⟨O_A⟩ = ⟨O_B⟩ = 0 assumed).
///
/// A diagnostic, not an asserted invariant: the holographic correlator
/// normalization is conventional.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WolfBoundReport {
    pub lhs: f64,
    pub rhs: f64,
    pub satisfied: bool,
}

pub fn wolf_bound_report(
    mi_value: f64,
    connected_correlator: f64,
    op_a_norm: f64,
    op_b_norm: f64,
) -> Result<WolfBoundReport, ObservableError> {
    if !(op_a_norm > 0.0 && op_b_norm > 0.0) {
        return Err(ObservableError::Domain("operator norms must be > 0"));
    }
    if !(mi_value >= 0.0) {
        return Err(ObservableError::Domain(
            "mutual information must be >= 0 (clamped)",
        ));
    }
    let rhs = connected_correlator * connected_correlator
        / (2.0 * op_a_norm * op_a_norm * op_b_norm * op_b_norm);
    Ok(WolfBoundReport {
        lhs: mi_value,
        rhs,
        satisfied: mi_value >= rhs,
    })
}
