//! Exact integer-lattice algebra: subgroups `K ⊂ Z^n`, Smith normal form,
//! quotient structure with canonical cross-sections, the dual annihilator
//! `Λ_K ⊂ [0,2π)^n`, character evaluation, and Weil's summation identity.
//!
//! Everything here is exact integer arithmetic; overflow is reported as an
//! error, never wrapped.

mod annihilator;
mod bezout;
mod frequency;
mod intmat;
mod quotient;
mod snf;
mod subgroup;
mod weil;

pub use annihilator::{AffineFamily, Annihilator};
pub use bezout::{bezout_phi, BezoutPhi};
pub use frequency::{Frequency, EPS_FREQ, TAU};
pub use intmat::IntMat;
pub use quotient::{QuotientCoord, QuotientStructure};
pub use snf::{smith_normal_form, SmithNormalForm};
pub use subgroup::LatticeSubgroup;
pub use weil::weil_check;
