//! Double-precision evaluation of zeta values, multiple polylogarithms and
//! directional regularized sums, each reported with an absolute error
//! bound; exact Laurent-series checks.
//!
//! Arithmetic is IEEE binary64 throughout, so a [`PrecisionContext`]
//! asking for more than 16 significant digits is rejected.

mod bernoulli;
mod checks;
mod context;
mod eval;
mod laurent;
mod nested;
mod zeta;

pub use bernoulli::{bernoulli_plus, zeta_nonpos};
pub use checks::{fd_derivative_check, gen0_laurent, gen0_series_check};
pub use context::{Estimate, PrecisionContext};
pub use eval::{regpoly_eval, zeta_expr_eval, MzvCache};
pub use laurent::{pole_project, LaurentPoly};
pub use nested::{li_eval, mzv_eval, mzv_eval_with_cutoff, z_directional};
pub use zeta::{power_tail, zeta_pos};
