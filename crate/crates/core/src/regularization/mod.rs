//! Regularization of divergent multiple zeta values as polynomials in `T`,
//! double shuffle relations, and the maps `ρ`, `β` comparing the shuffle
//! and stuffle regularizations.

mod reduce;
mod relations;
mod rho;
mod zeta_expr;

pub use reduce::{reduce_leading_ones, zsh_reduce, zst_reduce};
pub use relations::{dsh_relations, eds_relations, relation_rank, relations_csv, Relation};
pub use rho::{beta_apply, build_rho, corollary_check, rho_apply, RhoMap};
pub use zeta_expr::{regpoly_json, MzvSymbol, RegPoly, RegPolyDisplay, ZetaExpr};
