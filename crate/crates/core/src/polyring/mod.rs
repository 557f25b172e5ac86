//! Exact coefficients, graded polynomial rings, monomial orders and the
//! polynomial text format.

mod monomial;
mod parse;
mod poly;
mod ring;
mod scalar;

pub use monomial::{monomials_of_weight, Monomial, MAX_VARS};
pub use parse::{parse_generators, parse_polynomial};
pub use poly::Polynomial;
pub use ring::{DegreeVector, GradedRing, MonomialOrder};
pub use scalar::{CoefficientField, FieldScalar};
