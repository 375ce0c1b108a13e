//! Excitation transfer in bias-controlled spin-1/2 rings.
//!
//! This crate simulates single-excitation dynamics on an XX ring steered by a
//! static diagonal bias field, and quantifies how robust a given bias
//! controller is against two families of structured parameter uncertainty:
//! a perturbed coupling on one ring edge, and spillage of the bias intended
//! for one spin onto its neighbours.
//!
//! Robustness is measured two ways:
//!
//! * [`sensitivity`] — the closed-form derivative of the (window-averaged)
//!   transfer probability with respect to the perturbation magnitude, and the
//!   logarithmic sensitivity built from it.
//! * [`mu`] — a certified lower bound on the structured singular value of the
//!   plant/controller interconnection with the uncertainty pulled out.
//!
//! [`synthesis`] regenerates ensembles of locally optimal controllers from
//! random restarts, and [`pipeline`] + [`stats`] run the Kendall-τ /
//! Stouffer trend tests between transfer probability and either robustness
//! metric across such an ensemble.
//!
//! The crate is `no_std` (with `alloc`); all floating-point transcendentals
//! go through `libm`, so results are reproducible across platforms. File
//! formats and the command-line front end live in the companion
//! `spinring-cli` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod fidelity;
pub mod linalg;
pub mod mu;
pub mod optim;
pub mod pipeline;
pub mod ring;
pub mod sensitivity;
pub mod spectral;
pub mod stats;
pub mod synthesis;

pub use ring::{BiasController, PerturbationKind, PerturbationSpec, RingSpec, SpinIndex};
pub use spectral::SpectralDecomposition;
