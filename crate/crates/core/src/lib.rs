//! Exact shuffle and quasi-shuffle algebra for multiple zeta values.
//!
//! The crate is organised around the free commutative nonunitary
//! Rota-Baxter algebra of weight 0 on one generator and its concrete
//! realisations:
//!
//! - [`words`]: the shuffle algebra of words in `x0`, `x1` with the
//!   operator `I0(w) = x0 w`;
//! - [`compositions`]: integer sequences with the shuffle product
//!   extended to entries `>= 0`, the operator `I`, the stuffle product and
//!   the two-row quasi-shuffle algebra used by directional regularization;
//! - [`free_rba`]: the tensor model `x^{n1} (x) ... (x) x^{nk}` with its
//!   product, operator `P_x` and the isomorphisms onto the two algebras above;
//! - [`regularization`]: shuffle and stuffle regularized MZVs as
//!   polynomials in `T`, double shuffle relation tables and the `rho`/`beta`
//!   maps;
//! - [`numerics`]: double-precision evaluation of zeta values, multiple
//!   polylogarithms and regularized sums with explicit error bounds;
//! - [`cli`]: the expression language and the command-line front end.
//!
//! All symbolic computation is exact over the rationals.

pub mod algebra;
pub mod cli;
pub mod compositions;
pub mod error;
pub mod free_rba;
pub mod numerics;
pub mod regularization;
pub mod verify;
pub mod words;

pub use algebra::{bilinear_extend, mixable_shuffle, LinComb, Rational, TPoly};
pub use compositions::{bistuffle, comp_shuffle, i_op, stuffle, BiComposition, Composition};
pub use error::{Error, Result};
pub use free_rba::{f_hom, graded_basis, p_x, phi_hom, rba_product, universal_eval, TensorWord};
pub use words::{eta, eta_inv, i0, word_degree, word_shuffle, Letter, Word};
