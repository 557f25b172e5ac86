use crate::error::{Error, Result};
use crate::ideals::{Certainty, Component, Ideal, IdealTags};
use crate::polyring::{CoefficientField, GradedRing};

use super::points::reduced_ci_tags;

pub fn plane_ring() -> GradedRing {
    GradedRing::standard(&["x", "y", "z"], CoefficientField::Rational).expect("valid ring")
}

/// `(x(y^m - z^m), y(z^m - x^m), z(x^m - y^m))`, the ideal of `m^2 + 3`
/// points of P^2. For `m = 3` the point components are attached.
pub fn fermat_ideal(m: u32) -> Result<Ideal> {
    if m < 3 {
        return Err(Error::InvalidArgument("the Fermat configuration needs m >= 3".into()));
    }
    let ring = plane_ring();
    let text = format!("x*(y^{m} - z^{m}), y*(z^{m} - x^{m}), z*(x^{m} - y^{m})");
    let ideal = Ideal::parse(&ring, &text)?.with_tags(IdealTags {
        radical: Certainty::Asserted,
        lci: Certainty::Asserted,
        unmixed: Certainty::True,
        complete_intersection: false,
        provenance: format!("Fermat configuration, m = {m}"),
    });
    if m == 3 {
        let comps = fermat_components()?.into_iter().map(|ideal| Component { ideal, mult: 1 }).collect();
        return Ok(ideal.with_components(comps));
    }
    Ok(ideal)
}

/// The twelve points of the `m = 3` configuration grouped into orbits under
/// conjugation, each a reduced complete intersection defined over Q: the
/// three coordinate points, `[1:1:1]`, and four conjugate pairs
/// `[1:a:b]` with `a, b` cube roots of unity.
pub fn fermat_components() -> Result<Vec<Ideal>> {
    let ring = plane_ring();
    let orbits = [
        ("y, z", 1),
        ("x, z", 1),
        ("x, y", 1),
        ("x - y, y - z", 1),
        ("z - x, x^2 + x*y + y^2", 2),
        ("y - x, x^2 + x*z + z^2", 2),
        ("y - z, x^2 + x*y + y^2", 2),
        ("x + y + z, x^2 + x*y + y^2", 2),
    ];
    orbits
        .iter()
        .map(|(text, n)| {
            Ok(Ideal::parse(&ring, text)?.with_tags(reduced_ci_tags(format!("{n} point(s): ({text})"))))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_count_twelve_points() {
        let comps = fermat_components().unwrap();
        let total: i64 = comps.iter().map(|c| c.hilbert_function(5)).sum();
        assert_eq!(total, 12);
        let i = fermat_ideal(3).unwrap();
        for c in &comps {
            assert!(i.is_subset(c).unwrap());
        }
        assert_eq!(i.hilbert_function(6), 12);
    }
}
