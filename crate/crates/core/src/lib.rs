//! Analysis of a coherently driven atomic ensemble in a single-mode optical
//! cavity used as a passive frequency reference.
//!
//! The crate computes, from a handful of physical rates:
//!
//! * mean-field steady states of the driven system, their stability, the
//!   optical-bistability window and the dark point ([`meanfield`]),
//! * the linearized fluctuation dynamics around a steady state: decay
//!   constants, the detuning-to-output transfer function, output-quadrature
//!   noise spectra and frequency-estimator statistics ([`response`]),
//! * closed-loop quantities for a feedback-stabilized drive laser: residual
//!   frequency-noise spectral density, effective linewidth, corner
//!   frequencies and a stabilizing loop filter ([`feedback`]).
//!
//! All rates are angular (rad/s) throughout. Quadrature noise spectra are
//! normalized so that shot noise is 1; the residual frequency-noise density
//! `S_Delta(0)` equals `2*pi*delta_f` with `delta_f` the effective linewidth
//! in Hz.
//!
//! The crate is `no_std` (it requires only `alloc`), so the analysis can be
//! embedded anywhere; IO, simulation oracles and the command line live in the
//! companion `cavref` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod feedback;
mod math;
pub mod meanfield;
pub mod params;
pub mod response;

pub use num_complex::Complex64;

pub use feedback::{CornerFrequencies, LinewidthReport, LoopFilter, LoopMargins, Regime};
pub use meanfield::{BistabilityWindow, DarkPoint, IdealState, MeanFieldState, Stability};
pub use params::{DerivedParams, SystemParams, ValidationReport};
pub use response::{DecayRates, EstimatorStats, FrequencyResponse, SteadyState};
