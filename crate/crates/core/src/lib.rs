//! Holographic entanglement observables on AdS₃ backgrounds.
//!
//! The crate computes, in closed form, the quantities that probe how
//! correlations between boundary regions reorganize when a black hole
//! horizon appears in the dual bulk:
//!
//! - [`geometry`] — the three bulk backgrounds (pure AdS₃, non-rotating and
//!   rotating BTZ), their thermal scales, Virasoro charges, and boundary
//!   geodesic lengths;
//! - [`theta`] — a from-scratch Jacobi theta-function engine for purely
//!   imaginary modular parameter, plus the free-fermion torus correlator
//!   built on it;
//! - [`observables`] — entanglement entropy, mutual information between two
//!   disjoint intervals (infinite and finite size), two-point correlators,
//!   and the transition-point solvers;
//! - [`mera`] — a discrete simulator of MERA causal-cone geometry: cone
//!   propagation, overlap detection, minimal cuts, and the
//!   connected/disconnected regime classifier.
//!
//! Everything is pure and stateless; values are freely shareable across
//! threads.
//!
//! # Example
//!
//! Mutual information of two unit intervals with the horizon tied to the
//! interval size (β = 2πl), on either side of its transition:
//!
//! ```
//! use holoent::observables::{mutual_information, IntervalPair, MiPhase};
//! use holoent::BulkGeometry;
//!
//! let geometry = BulkGeometry::non_rotating(1.0)?; // beta = 2*pi
//!
//! let close = IntervalPair::new(0.0, 1.0, 1.3, 2.3)?;
//! assert_eq!(mutual_information(&geometry, &close)?.phase, MiPhase::Connected);
//!
//! let apart = IntervalPair::new(0.0, 1.0, 1.5, 2.5)?;
//! let mi = mutual_information(&geometry, &apart)?;
//! assert_eq!(mi.phase, MiPhase::Disconnected);
//! assert_eq!(mi.value, 0.0);
//! # Ok::<(), holoent::ObservableError>(())
//! ```

// Parameter validation uses negated comparisons (`!(x > 0.0)`) so that NaN
// inputs fail closed.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod geometry;
pub mod mera;
pub mod observables;
pub mod theta;

pub use geometry::{BulkGeometry, GeometryError, GeometryKind, ThermalScales};
pub use mera::{CausalCone, CutResult, MeraError, MeraNetwork, Regime, SiteInterval};
pub use observables::{
    IntervalPair, MiPhase, MiResult, ObservableError, TransitionModel, WolfBoundReport,
};
pub use theta::{Sector, ThetaContext, ThetaError};
