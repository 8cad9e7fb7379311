//! Bulk backgrounds and closed-form boundary geodesic lengths.
//!
//! Three backgrounds are supported: pure AdS₃, the non-rotating BTZ black
//! hole (outer horizon r₊) and the rotating BTZ black hole (horizons
//! r₊ ≥ r₋).  All geodesic lengths between boundary points are known in
//! closed form; no metric integration happens anywhere in this crate.
//!
//! Infinite thermal scales (pure AdS, the extremal right-moving sector) are
//! represented as `f64::INFINITY` and every formula takes the corresponding
//! analytic limit instead of overflowing.

use std::f64::consts::{LN_2, PI};

use thiserror::Error;

/// Which dual bulk background.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometryKind {
    PureAds,
    NonRotatingBtz,
    RotatingBtz,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("black hole mass must be positive (got {0})")]
    NonPositiveMass(f64),
    #[error("|J| = {j} exceeds M*l = {ml}: over-extremal spin")]
    OverExtremal { j: f64, ml: f64 },
    #[error("geodesic endpoints coincide")]
    CoincidentPoints,
    #[error("invalid geometry parameter: {0}")]
    InvalidParameter(&'static str),
}

/// A bulk background together with its AdS radius, UV cutoff and Newton
/// constant.
///
/// Defaults: `ads_radius = 1`, `uv_cutoff = 1e-3`, `newton_constant = 1/2`
/// (central charge 3).  All boundary positions and the cutoff are measured
/// in units of the AdS radius; the observables depend only on ratios.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BulkGeometry {
    kind: GeometryKind,
    ads_radius: f64,
    r_plus: f64,
    r_minus: f64,
    uv_cutoff: f64,
    newton_constant: f64,
}

/// Inverse temperatures and horizon depths of a background.
///
/// `beta = 2πℓ²/r₊`, `beta_left/right = 2πℓ²/(r₊ ± r₋)`; the `z` fields are
/// the inverse horizon positions `1/r₊`, `1/(r₊+r₋)`, `1/(r₊−r₋)` with
/// `z_left ≤ z_plus ≤ z_right`.  `beta_right` is infinite exactly in the
/// extremal case r₊ = r₋; for pure AdS every field is infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalScales {
    pub beta: f64,
    pub beta_left: f64,
    pub beta_right: f64,
    pub z_plus: f64,
    pub z_left: f64,
    pub z_right: f64,
}

pub const DEFAULT_UV_CUTOFF: f64 = 1e-3;
pub const DEFAULT_NEWTON_CONSTANT: f64 = 0.5;

impl BulkGeometry {
    /// Pure AdS₃ (no horizon), default parameters.
    pub fn pure_ads() -> Self {
        BulkGeometry {
            kind: GeometryKind::PureAds,
            ads_radius: 1.0,
            r_plus: 0.0,
            r_minus: 0.0,
            uv_cutoff: DEFAULT_UV_CUTOFF,
            newton_constant: DEFAULT_NEWTON_CONSTANT,
        }
    }

    /// Non-rotating BTZ black hole with outer horizon `r_plus > 0`.
    pub fn non_rotating(r_plus: f64) -> Result<Self, GeometryError> {
        if !(r_plus > 0.0) || !r_plus.is_finite() {
            return Err(GeometryError::InvalidParameter(
                "non-rotating BTZ requires r_plus > 0",
            ));
        }
        Ok(BulkGeometry {
            kind: GeometryKind::NonRotatingBtz,
            r_plus,
            ..Self::pure_ads()
        })
    }

    /// Rotating BTZ black hole with horizons `r_plus >= r_minus >= 0`.
    pub fn rotating(r_plus: f64, r_minus: f64) -> Result<Self, GeometryError> {
        if !(r_plus > 0.0) || !r_plus.is_finite() {
            return Err(GeometryError::InvalidParameter(
                "rotating BTZ requires r_plus > 0",
            ));
        }
        if !(r_minus >= 0.0) || !r_minus.is_finite() || r_minus > r_plus {
            return Err(GeometryError::InvalidParameter(
                "rotating BTZ requires 0 <= r_minus <= r_plus",
            ));
        }
        Ok(BulkGeometry {
            kind: GeometryKind::RotatingBtz,
            r_plus,
            r_minus,
            ..Self::pure_ads()
        })
    }

    pub fn with_ads_radius(mut self, ads_radius: f64) -> Result<Self, GeometryError> {
        if !(ads_radius > 0.0) || !ads_radius.is_finite() {
            return Err(GeometryError::InvalidParameter("ads_radius must be > 0"));
        }
        self.ads_radius = ads_radius;
        Ok(self)
    }

    pub fn with_uv_cutoff(mut self, uv_cutoff: f64) -> Result<Self, GeometryError> {
        if !(uv_cutoff > 0.0) || !uv_cutoff.is_finite() {
            return Err(GeometryError::InvalidParameter("uv_cutoff must be > 0"));
        }
        self.uv_cutoff = uv_cutoff;
        Ok(self)
    }

    pub fn with_newton_constant(mut self, newton_constant: f64) -> Result<Self, GeometryError> {
        if !(newton_constant > 0.0) || !newton_constant.is_finite() {
            return Err(GeometryError::InvalidParameter(
                "newton_constant must be > 0",
            ));
        }
        self.newton_constant = newton_constant;
        Ok(self)
    }

    /// Fixes the Brown–Henneaux central charge by adjusting the Newton
    /// constant: G_N = 3ℓ/(2c).
    pub fn with_central_charge(self, c: f64) -> Result<Self, GeometryError> {
        if !(c > 0.0) || !c.is_finite() {
            return Err(GeometryError::InvalidParameter(
                "central charge must be > 0",
            ));
        }
        let g = 1.5 * self.ads_radius / c;
        self.with_newton_constant(g)
    }

    pub fn kind(&self) -> GeometryKind {
        self.kind
    }
    pub fn ads_radius(&self) -> f64 {
        self.ads_radius
    }
    pub fn r_plus(&self) -> f64 {
        self.r_plus
    }
    pub fn r_minus(&self) -> f64 {
        self.r_minus
    }
    pub fn uv_cutoff(&self) -> f64 {
        self.uv_cutoff
    }
    pub fn newton_constant(&self) -> f64 {
        self.newton_constant
    }

    /// Brown–Henneaux central charge c = 3ℓ/(2G_N).
    pub fn central_charge(&self) -> f64 {
        1.5 * self.ads_radius / self.newton_constant
    }

    /// Inverse temperatures and horizon depths; all infinite for pure AdS.
    pub fn thermal_scales(&self) -> ThermalScales {
        let l2 = self.ads_radius * self.ads_radius;
        let two_pi_l2 = 2.0 * PI * l2;
        let inv = |denom: f64, num: f64| {
            if denom > 0.0 {
                num / denom
            } else {
                f64::INFINITY
            }
        };
        ThermalScales {
            beta: inv(self.r_plus, two_pi_l2),
            beta_left: inv(self.r_plus + self.r_minus, two_pi_l2),
            beta_right: inv(self.r_plus - self.r_minus, two_pi_l2),
            z_plus: inv(self.r_plus, 1.0),
            z_left: inv(self.r_plus + self.r_minus, 1.0),
            z_right: inv(self.r_plus - self.r_minus, 1.0),
        }
    }

    /// Shifted Virasoro charges (L₀ − c/24, L̄₀ − c/24) of the dual CFT.
    ///
    /// Pure AdS gives (0, 0); otherwise (Mℓ ± J)/(16G) with M and J
    /// reconstructed from the horizons.
    pub fn virasoro_charges(&self) -> (f64, f64) {
        if self.kind == GeometryKind::PureAds {
            return (0.0, 0.0);
        }
        let l = self.ads_radius;
        let mass = (self.r_plus * self.r_plus + self.r_minus * self.r_minus) / (l * l);
        let spin = 2.0 * self.r_plus * self.r_minus / l;
        let denom = 16.0 * self.newton_constant;
        ((mass * l + spin) / denom, (mass * l - spin) / denom)
    }

    /// Geodesic length between the boundary points `x_i` and `x_j`.
    ///
    /// Pure AdS: 2ℓ·log(|Δx|/ε).  Non-rotating BTZ:
    /// 2ℓ·log[(β/πε)·sinh(π|Δx|/β)].  Rotating BTZ: the left/right-moving
    /// sectors decouple and each contributes half a thermal length at its
    /// own β, so the r₋ → 0 limit reproduces the non-rotating value exactly.
    pub fn geodesic_length(&self, x_i: f64, x_j: f64) -> Result<f64, GeometryError> {
        let dx = (x_i - x_j).abs();
        if dx == 0.0 {
            return Err(GeometryError::CoincidentPoints);
        }
        if !dx.is_finite() {
            return Err(GeometryError::InvalidParameter(
                "boundary positions must be finite",
            ));
        }
        let scales = self.thermal_scales();
        let l = self.ads_radius;
        let eps = self.uv_cutoff;
        Ok(match self.kind {
            GeometryKind::PureAds => 2.0 * l * (dx / eps).ln(),
            GeometryKind::NonRotatingBtz => 2.0 * l * log_thermal_factor(scales.beta, dx, eps),
            GeometryKind::RotatingBtz => {
                l * (log_thermal_factor(scales.beta_left, dx, eps)
                    + log_thermal_factor(scales.beta_right, dx, eps))
            }
        })
    }
}

/// Horizon radii (r₊, r₋) of the BTZ black hole of mass `M` and angular
/// momentum `J`: r_± = ℓ·[(M/2)(1 ± √(1−(J/Mℓ)²))]^{1/2}.
///
/// The subtracted branch is evaluated through 1−s = x²/(1+s) so that the
/// round trip M = (r₊²+r₋²)/ℓ², |J| = 2r₊r₋/ℓ holds to machine precision
/// even for small spins.
pub fn btz_from_mass_spin(
    mass: f64,
    spin: f64,
    ads_radius: f64,
) -> Result<(f64, f64), GeometryError> {
    if !(ads_radius > 0.0) || !ads_radius.is_finite() {
        return Err(GeometryError::InvalidParameter("ads_radius must be > 0"));
    }
    if !(mass > 0.0) {
        return Err(GeometryError::NonPositiveMass(mass));
    }
    let ml = mass * ads_radius;
    if spin.abs() > ml {
        return Err(GeometryError::OverExtremal { j: spin, ml });
    }
    let x = spin / ml;
    let s = (1.0 - x * x).sqrt();
    let r_plus = ads_radius * (0.5 * mass * (1.0 + s)).sqrt();
    // 1 - s = x^2/(1+s), exact where the naive difference cancels
    let r_minus = ads_radius * x.abs() * (0.5 * mass / (1.0 + s)).sqrt();
    Ok((r_plus, r_minus))
}

/// log[(β/πε)·sinh(π·dx/β)], taking the β → ∞ limit log(dx/ε) analytically.
///
/// The log∘sinh part is evaluated as y + log(1−e^{−2y}) − log 2 so that
/// β → 0 (large y) never overflows.
pub(crate) fn log_thermal_factor(beta: f64, dx: f64, eps: f64) -> f64 {
    if beta.is_infinite() {
        return (dx / eps).ln();
    }
    (beta / (PI * eps)).ln() + log_sinh(PI * dx / beta)
}

/// log(sinh(y)) for y > 0 without overflow: y + ln(1 − e^{−2y}) − ln 2.
pub(crate) fn log_sinh(y: f64) -> f64 {
    y + (-(-2.0 * y).exp_m1()).ln() - LN_2
}
