//! Exact symbolic computation with trace invariants of two 3×3 matrices.
//!
//! The crate provides, bottom up:
//!
//! * [`poly`] — arbitrary-precision rationals and sparse multivariate
//!   polynomials with differentiation, substitution and a canonical text
//!   form (which is also the parser's input grammar);
//! * [`matrix`] — generic and traceless 3×3 matrices over polynomials,
//!   traces of words, Newton's formulas and the Cayley–Hamilton check;
//! * [`words`] — formal trace words over the alphabet `{X, Y}`: cyclic
//!   canonicalization, necklace enumeration, partial linearization and the
//!   highest-weight-vector search;
//! * [`invariants`] — the concrete invariants `u`, `v`, `w`, `w1..w7` of a
//!   pair of traceless matrices, the derivation that sends `y` to `x`, and
//!   the quadratic relation satisfied by `w`;
//! * [`gl2`] — GL₂ characters: Schur functions, truncated bivariate power
//!   series, multiplicity extraction and the Littlewood–Richardson rule;
//! * [`solver`] — exact fraction-free linear algebra over the rationals and
//!   the evaluation pipeline that recovers the eight coefficients of the
//!   defining relation.
//!
//! All arithmetic is exact; every verification is a zero-polynomial or
//! exact-equality check, never a floating-point comparison.

pub mod gl2;
pub mod invariants;
pub mod matrix;
pub mod poly;
pub mod solver;
pub mod words;

pub use poly::{MultiPoly, Monomial, Rational, VarId};
