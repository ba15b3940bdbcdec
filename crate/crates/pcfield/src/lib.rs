//! Periodically correlated (PC) random fields over integer lattices.
//!
//! A field `X` over `Z^n` is *K-periodically correlated* for a subgroup
//! `K ⊂ Z^n` when its covariance kernel is invariant under simultaneous
//! shifts by elements of `K`. This crate provides, at desk scale and in
//! exact or tolerance-certified arithmetic:
//!
//! * [`lattice`] — exact integer-lattice algebra: subgroups, Smith normal
//!   form, quotient structure, cross-sections, and the dual annihilator
//!   `Λ_K` with character evaluation;
//! * [`model`] — finite-dimensional generative models `X(t) = U^t P(t)`
//!   built from an atomic unitary representation `U` and a `K`-periodic
//!   field `P`, synthesis recipes, and Gaussian path sampling;
//! * [`spectra`] — cyclic (spectral) covariances `a_λ(t)`, the lifted
//!   `Z^λ` fields, second-order spectral measures `γ_λ` and the
//!   SO-spectrum on hyperplanes, positive-definiteness checks, and an
//!   empirical estimator;
//! * [`structure`] — the constructive inverse: from a `K`-PC kernel on a
//!   window, recover the `K`-shift, lift it to a full unitary
//!   representation, split off the periodic part, and form stationary
//!   components;
//! * [`wpc2`] — the complete weakly PC `Z^2` worked example with period
//!   `(T, S)`: Bezout change of basis, the `d` spectral lines, the
//!   `a_{k,t}` double sum, and plot data emission.
//!
//! All operations are pure functions of immutable inputs; anything
//! stochastic takes an explicit seed.

pub mod error;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod model;
pub mod spectra;
pub mod structure;
pub mod wpc2;

pub use error::{Error, Result};
