//! Superpotentials, partner potentials, wave functions in canonical form and
//! the exact Schrödinger residual.

mod catalog;
mod potential;
mod superpotential;
mod wavefunction;

pub use catalog::{
    catalog_superpotential, oscillator_offset, shape_invariance_shift, shifted_ell,
};
pub use potential::{EnergyLevel, Potential};
pub use superpotential::{is_normalizable, LogTerm, Superpotential, SuperpotentialParts};
pub use wavefunction::{apply_intertwiner, schrodinger_residual, WaveFunction};
