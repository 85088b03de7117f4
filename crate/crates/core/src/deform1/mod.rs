//! First isospectral deformation of the radial oscillator.

mod eop;
mod family;
mod pequation;

pub use eop::{l1_ode_residual, xm_eop, xm_eop_with_alpha, EopKind, XmEop};
pub use family::{gen1_alpha, gen1_r1, Gen1Family};
pub use pequation::{polynomial_eigensolution, solve_p_equation};
