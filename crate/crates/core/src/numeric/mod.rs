//! Double-precision machinery: Taylor jets for analytic derivatives, exact
//! polynomial evaluation at floating-point points, log-gamma and adaptive
//! quadrature.

mod gamma;
mod jet;
mod polyeval;
mod quad;

pub use gamma::{gamma_sign, ln_gamma, ln_gamma_abs};
pub use jet::Jet;
pub use polyeval::{PolyEvaluator, ScaledSeries};
pub use quad::{integrate, integrate_log};
