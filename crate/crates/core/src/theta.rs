//! Jacobi theta functions on the imaginary axis and the free-fermion torus
//! correlator.
//!
//! The engine is restricted to what the torus observables need: purely
//! imaginary modular parameter τ = i·t (t > 0) and purely imaginary argument
//! ω = i·y.  Convention: nome q = e^{iπτ} = e^{−πt} ∈ (0,1), and
//!
//! ```text
//! θ₁(ω|τ) = 2 Σ (−1)^n q^{(n+1/2)²} sin((2n+1)ω)
//! θ₂(ω|τ) = 2 Σ q^{(n+1/2)²} cos((2n+1)ω)
//! θ₃(ω|τ) = 1 + 2 Σ q^{n²} cos(2nω)
//! θ₄(ω|τ) = 1 + 2 Σ (−1)^n q^{n²} cos(2nω)
//! ```
//!
//! At ω = iy the cosines become cosh and the series stay real; θ₁ picks up a
//! single factor i (sin(ix) = i·sinh x) which is factored out: [`theta`]
//! returns the real cofactor θ₁(iy|τ)/i.  Every term is evaluated in
//! exponent space, q^{e}·cosh(a) = (e^{−πte+a} + e^{−πte−a})/2, so large
//! arguments neither overflow nor lose the underflowing wing.
//!
//! The torus observables ([`fermion_correlator_torus`], [`upsilon`]) measure
//! separations in units of the thermal period: a boundary separation s at
//! temperature T enters as ω = iπsT with τ = iLT, and the ω-derivative
//! series [`theta1_prime_at_zero`] picks up the matching factor π.  With
//! this mapping the large-LT expansion of the correlator reproduces
//! πT/(4 sinh(πT s))·[1 ± 2e^{−πLT} cosh(2πT s)] exactly.

use std::f64::consts::PI;

use thiserror::Error;

/// Theta-function sector ν ∈ {1,2,3,4}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sector {
    One = 1,
    Two = 2,
    Three = 3,
    Four = 4,
}

impl Sector {
    pub fn index(self) -> u8 {
        self as u8
    }
}

impl TryFrom<u8> for Sector {
    type Error = ThetaError;
    fn try_from(v: u8) -> Result<Self, ThetaError> {
        match v {
            1 => Ok(Sector::One),
            2 => Ok(Sector::Two),
            3 => Ok(Sector::Three),
            4 => Ok(Sector::Four),
            _ => Err(ThetaError::SectorUnsupported(v)),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ThetaError {
    #[error("q-series did not converge within {MAX_TERMS} terms (tau too close to 0)")]
    NonConvergent,
    #[error("correlator diverges at coincident points")]
    CoincidentPoints,
    #[error("sector nu={0} not supported here (finite-temperature sectors are 3 and 4)")]
    SectorUnsupported(u8),
    #[error("invalid theta parameter: {0}")]
    InvalidParameter(&'static str),
}

/// Hard cap on q-series terms; exceeding it signals an out-of-domain τ.
pub const MAX_TERMS: usize = 1_000_000;

/// Default series truncation tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Evaluation context: sector, |τ| for τ = i·|τ|, truncation tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaContext {
    sector: Sector,
    tau_im: f64,
    tol: f64,
}

impl ThetaContext {
    pub fn new(sector: Sector, tau_im: f64) -> Result<Self, ThetaError> {
        if !(tau_im > 0.0) || !tau_im.is_finite() {
            return Err(ThetaError::InvalidParameter("tau_im must be > 0"));
        }
        Ok(ThetaContext {
            sector,
            tau_im,
            tol: DEFAULT_TOL,
        })
    }

    pub fn with_tol(mut self, tol: f64) -> Result<Self, ThetaError> {
        if !(tol > 0.0) || !tol.is_finite() {
            return Err(ThetaError::InvalidParameter("tol must be > 0"));
        }
        self.tol = tol;
        Ok(self)
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }
    pub fn tau_im(&self) -> f64 {
        self.tau_im
    }
    pub fn tol(&self) -> f64 {
        self.tol
    }
}

/// exp(a)·cosh(b) without overflow in cosh and without losing the small wing.
fn exp_cosh(a: f64, b: f64) -> f64 {
    if b.abs() < 1.0 {
        a.exp() * b.cosh()
    } else {
        0.5 * ((a + b).exp() + (a - b).exp())
    }
}

/// exp(a)·sinh(b); the |b| < 1 branch avoids the cancellation of the
/// exponent-space form at small arguments.
fn exp_sinh(a: f64, b: f64) -> f64 {
    if b.abs() < 1.0 {
        a.exp() * b.sinh()
    } else {
        0.5 * ((a + b).exp() - (a - b).exp())
    }
}

/// Adaptive q-series. Returns (sum, terms actually summed).
///
/// Terms of the ν = 3,4 series peak near n ≈ y/(πt); truncation is only
/// tested past the peak, when the next term falls below tol·(1 + |sum|).
/// `force_terms` overrides the adaptive stop (used by the truncation tests).
fn q_series(
    sector: Sector,
    tau_im: f64,
    y: f64,
    tol: f64,
    force_terms: Option<usize>,
) -> Result<(f64, usize), ThetaError> {
    let pt = PI * tau_im;
    let n_min = (y.abs() / pt).ceil() as usize + 1;
    let mut sum = match sector {
        Sector::Three | Sector::Four => 1.0,
        _ => 0.0,
    };
    let mut n = match sector {
        Sector::Three | Sector::Four => 1usize,
        _ => 0usize,
    };
    let mut used = 0usize;
    loop {
        let term = match sector {
            Sector::Three => 2.0 * exp_cosh(-pt * (n * n) as f64, 2.0 * n as f64 * y),
            Sector::Four => {
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                2.0 * sign * exp_cosh(-pt * (n * n) as f64, 2.0 * n as f64 * y)
            }
            Sector::Two => {
                let half = n as f64 + 0.5;
                2.0 * exp_cosh(-pt * half * half, (2 * n + 1) as f64 * y)
            }
            Sector::One => {
                let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                let half = n as f64 + 0.5;
                2.0 * sign * exp_sinh(-pt * half * half, (2 * n + 1) as f64 * y)
            }
        };
        if let Some(k) = force_terms {
            if used >= k {
                return Ok((sum, used));
            }
        }
        sum += term;
        used += 1;
        n += 1;
        if force_terms.is_none() && n > n_min && term.abs() < tol * (1.0 + sum.abs()) {
            return Ok((sum, used));
        }
        if used > MAX_TERMS {
            return Err(ThetaError::NonConvergent);
        }
    }
}

/// θ_ν(iy|τ) for τ = i·tau_im.  For ν = 1 the overall factor i is factored
/// out and the real cofactor is returned (θ₁(iy|τ) = i·theta(ctx, y)).
pub fn theta(ctx: &ThetaContext, y: f64) -> Result<f64, ThetaError> {
    if !y.is_finite() {
        return Err(ThetaError::InvalidParameter("argument must be finite"));
    }
    q_series(ctx.sector, ctx.tau_im, y, ctx.tol, None).map(|(s, _)| s)
}

/// ∂_ω θ₁(ω|τ) at ω = 0: the term-by-term derivative 2Σ(−1)ⁿ(2n+1)q^{(n+1/2)²}.
pub fn theta1_prime_at_zero(ctx: &ThetaContext) -> Result<f64, ThetaError> {
    let pt = PI * ctx.tau_im;
    let mut sum = 0.0_f64;
    for n in 0..=MAX_TERMS {
        let half = n as f64 + 0.5;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let term = 2.0 * sign * (2 * n + 1) as f64 * (-pt * half * half).exp();
        sum += term;
        if term.abs() < ctx.tol * (1.0 + sum.abs()) {
            return Ok(sum);
        }
    }
    Err(ThetaError::NonConvergent)
}

fn check_torus_args(u: f64, v: f64, temperature: f64, length: f64) -> Result<f64, ThetaError> {
    if !(temperature > 0.0) || !temperature.is_finite() {
        return Err(ThetaError::InvalidParameter("temperature must be > 0"));
    }
    if !(length > 0.0) || !length.is_finite() {
        return Err(ThetaError::InvalidParameter("system length must be > 0"));
    }
    let s = (u - v).abs();
    if s == 0.0 {
        return Err(ThetaError::CoincidentPoints);
    }
    if !(s < length) {
        return Err(ThetaError::InvalidParameter(
            "separation must be smaller than the system length",
        ));
    }
    Ok(s)
}

/// Two-point function of free fermions on the torus with τ = iLT:
/// (T/4)·[θ_ν(iπsT|τ)/θ_ν(0|τ)]·[π·θ₁′(0|τ)/θ₁(iπsT|τ)], s = |u−v|.
///
/// Only the finite-temperature spin structures ν = 3, 4 are admitted.
pub fn fermion_correlator_torus(
    u: f64,
    v: f64,
    temperature: f64,
    length: f64,
    sector: Sector,
) -> Result<f64, ThetaError> {
    fermion_correlator_torus_with_tol(u, v, temperature, length, sector, DEFAULT_TOL)
}

pub fn fermion_correlator_torus_with_tol(
    u: f64,
    v: f64,
    temperature: f64,
    length: f64,
    sector: Sector,
    tol: f64,
) -> Result<f64, ThetaError> {
    if !matches!(sector, Sector::Three | Sector::Four) {
        return Err(ThetaError::SectorUnsupported(sector.index()));
    }
    let s = check_torus_args(u, v, temperature, length)?;
    let tau_im = length * temperature;
    let y = PI * s * temperature;
    let ctx_nu = ThetaContext::new(sector, tau_im)?.with_tol(tol)?;
    let ctx_1 = ThetaContext::new(Sector::One, tau_im)?.with_tol(tol)?;
    let ratio_nu = theta(&ctx_nu, y)? / theta(&ctx_nu, 0.0)?;
    let ratio_1 = PI * theta1_prime_at_zero(&ctx_1)? / theta(&ctx_1, y)?;
    Ok(0.25 * temperature * ratio_nu * ratio_1)
}

/// Υ(u,v) = log[π·θ₁′(0|τ)/θ₁(iπsT|τ)] with τ = iLT; the real logarithm of
/// the modulus of the ratio (the factor i of θ₁ at imaginary argument is
/// already factored out by [`theta`]).
///
/// For L ≫ s this approaches log(1/(sT)).
pub fn upsilon(u: f64, v: f64, temperature: f64, length: f64) -> Result<f64, ThetaError> {
    upsilon_with_tol(u, v, temperature, length, DEFAULT_TOL)
}

pub fn upsilon_with_tol(
    u: f64,
    v: f64,
    temperature: f64,
    length: f64,
    tol: f64,
) -> Result<f64, ThetaError> {
    let s = check_torus_args(u, v, temperature, length)?;
    let tau_im = length * temperature;
    let y = PI * s * temperature;
    let ctx = ThetaContext::new(Sector::One, tau_im)?.with_tol(tol)?;
    let ratio = PI * theta1_prime_at_zero(&ctx)? / theta(&ctx, y)?;
    Ok(ratio.abs().ln())
}
