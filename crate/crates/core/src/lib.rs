//! Involutive (Janet, Pommaret) and Gröbner bases for polynomial ideals,
//! polynomial modules and linear PDE systems with constant coefficients.

pub mod cli;
pub mod coeff;
pub mod diffsys;
pub mod error;
pub mod groebner;
pub mod involutive;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod problem;
pub mod reduce;

pub use coeff::{Coeff, Field};
pub use error::{Error, Result};
pub use monomial::{Monomial, MonomialOrdering, OrderKind, PositionRule, VarContext, VarSet};
pub use poly::{Polynomial, Ring, Term};
