//! Exact arithmetic kernel shared by every product in the crate.

mod lincomb;
pub mod linalg;
mod mixable;
mod rational;
pub mod series;
mod tpoly;

pub use lincomb::{bilinear_extend, lincomb_combine, try_bilinear_extend, LinComb};
pub use mixable::{mixable_shuffle, shuffle};
pub use rational::{format_ratio, format_short, int, parse_rational, rat, to_f64, Rational};
pub use tpoly::{Ring, TPoly};
