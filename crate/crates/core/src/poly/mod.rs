//! Exact rational arithmetic and sparse multivariate polynomials.

mod monomial;
mod multipoly;
mod parse;
mod rational;
mod var;

pub use monomial::Monomial;
pub use multipoly::MultiPoly;
pub use parse::PolyParseError;
pub use rational::{frac, int, Rational};
pub use var::VarId;
