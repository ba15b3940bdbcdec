//! Cyclic/spectral covariances, the lifted `Z^λ` fields, second-order
//! spectral measures, the SO-spectrum on hyperplanes, and estimators.
//!
//! Normalization: the Haar measure on a finite quotient has total mass 1,
//! the Haar measure on an infinite discrete quotient is counting measure
//! on the free part times mass-1 on the torsion part; every sum below
//! carries the resulting `1/∏d_i` factor explicitly. On the dual side a
//! finite `Λ_K` carries counting measure.

mod cyclic;
mod estimate;
mod measure;
mod posdef;
mod sospectrum;
mod zfield;

pub use cyclic::{spectral_covariance, SpectralValue};
pub use estimate::{estimate_spectral_covariance, estimator_terms, EstimatorTerm};
pub use measure::{gamma_lambda, gamma_pair, p_hat, AtomicMeasure};
pub use posdef::posdef_check;
pub use sospectrum::{so_spectrum, SoAtom, SoSpectrum};
pub use zfield::{scorr_check, z_field, z_inner, ScorrCheck, ZVector};
