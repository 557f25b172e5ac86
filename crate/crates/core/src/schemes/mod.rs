//! Ideal constructors for geometric configurations: points and fat points,
//! points of P^1 x P^1, lines in P^3, determinantal scrolls, random complete
//! intersections and linkage. Constructors attach structural tags.

mod determinantal;
mod fermat;
mod linkage;
mod lines;
mod p1p1;
mod points;

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polyring::{monomials_of_weight, FieldScalar, GradedRing, Polynomial};

pub use determinantal::{generic_matrix_minors, scroll_ideal};
pub use fermat::{fermat_components, fermat_ideal, plane_ring};
pub use linkage::{
    linkage_residual, linked_residual, random_ci, random_ci_inside, LinkedResidual, RESIDUAL_HILBERT,
};
pub use lines::{general_lines_p3, line_ideal, lines_p3_ideal};
pub use p1p1::{
    aci_presentation, aci_presentation_for, classify_p1p1, ferrers_config, general_p1p1_points,
    triple_point_twists, AlphaTuple, P1P1Classification, P1P1Kind, PointConfigP1P1, PointP1P1,
};
pub use points::{fat_points_ideal, point_ideal, same_projective_point, scalars};

/// Integer range for random coefficients and coordinates.
pub const COEFFICIENT_RANGE: RangeInclusive<i64> = -20..=20;
/// Attempts (seeds `s, s + 1, ...`) before a genericity check gives up.
pub const MAX_ATTEMPTS: usize = 10;

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn random_coefficient(ring: &GradedRing, r: &mut ChaCha8Rng) -> FieldScalar {
    ring.field().from_i64(r.gen_range(COEFFICIENT_RANGE))
}

/// A form of degree `d` with every monomial coefficient random.
pub(crate) fn random_form(ring: &GradedRing, d: u32, r: &mut ChaCha8Rng) -> Polynomial {
    let mut terms = Vec::new();
    for m in monomials_of_weight(ring.weights(), d) {
        terms.push((random_coefficient(ring, r), m));
    }
    Polynomial::from_terms(ring, terms)
}
