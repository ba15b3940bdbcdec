//! Finite-dimensional Hilbert-space models of PC fields.
//!
//! A model is a pair `(U, P)`: an atomic unitary representation of `Z^n`
//! on `C^D` and a `K`-periodic vector field, evaluated as
//! `X(t) = U^t P(t)`. Such a field is `K`-PC by construction, and every
//! `K`-PC field arises this way (see [`crate::structure`] for the
//! constructive converse).

mod pcmodel;
mod periodic;
pub mod presets;
mod sampling;
mod unitary;

pub use pcmodel::{amplitude_modulated, time_deformed, PcFieldModel, SquareIntegrability};
pub use periodic::{PeriodicDeformation, PeriodicField, PeriodicScalar, SupportSpec};
pub use sampling::{sample_paths, SamplePaths, Window};
pub use unitary::{Atom, UnitaryRep};
