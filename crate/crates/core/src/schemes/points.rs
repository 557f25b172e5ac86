use crate::error::{Error, Result};
use crate::ideals::{Certainty, Component, Ideal, IdealTags};
use crate::polyring::{CoefficientField, FieldScalar, GradedRing, Polynomial};

pub fn scalars(field: CoefficientField, values: &[i64]) -> Vec<FieldScalar> {
    values.iter().map(|&v| field.from_i64(v)).collect()
}

/// Projective equality: all 2x2 cross products vanish.
pub fn same_projective_point(a: &[FieldScalar], b: &[FieldScalar]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i].mul(&b[j]) != a[j].mul(&b[i]) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn reduced_ci_tags(provenance: String) -> IdealTags {
    IdealTags {
        radical: Certainty::True,
        lci: Certainty::True,
        unmixed: Certainty::True,
        complete_intersection: true,
        provenance,
    }
}

fn format_coords(coords: &[FieldScalar]) -> String {
    let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(":"))
}

/// The ideal of a point: `c_p x_i - c_i x_p` for `i != p`, `p` the first
/// nonzero coordinate.
pub fn point_ideal(ring: &GradedRing, coords: &[FieldScalar]) -> Result<Ideal> {
    if ring.arity() != 1 {
        return Err(Error::InvalidArgument("points need a standard-graded ring".into()));
    }
    if coords.len() != ring.nvars() {
        return Err(Error::InvalidArgument(format!(
            "point has {} coordinates, ring has {} variables",
            coords.len(),
            ring.nvars()
        )));
    }
    let p = coords
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::InvalidArgument("the zero vector is not a point".into()))?;
    let xp = Polynomial::var(ring, p);
    let gens = (0..ring.nvars())
        .filter(|&i| i != p)
        .map(|i| Polynomial::var(ring, i).scale(&coords[p]).sub(&xp.scale(&coords[i])))
        .collect();
    let ideal = Ideal::new(ring, gens)?.with_tags(reduced_ci_tags(format!("point {}", format_coords(coords))));
    let comp = Component { ideal: ideal.clone(), mult: 1 };
    Ok(ideal.with_components(vec![comp]))
}

/// `∩ I(P_k)^{m_k}`.
pub fn fat_points_ideal(ring: &GradedRing, points: &[(Vec<FieldScalar>, u32)]) -> Result<Ideal> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    for (k, (a, m)) in points.iter().enumerate() {
        if *m == 0 {
            return Err(Error::InvalidArgument("multiplicities must be positive".into()));
        }
        if points[..k].iter().any(|(b, _)| same_projective_point(a, b)) {
            return Err(Error::InvalidArgument(format!("repeated point {}", format_coords(a))));
        }
    }
    let mut comps = Vec::with_capacity(points.len());
    let mut powers = Vec::with_capacity(points.len());
    for (coords, m) in points {
        let p = point_ideal(ring, coords)?;
        powers.push(p.power(*m)?);
        comps.push(Component { ideal: p, mult: *m });
    }
    let reduced = points.iter().all(|(_, m)| *m == 1);
    let flag = if reduced { Certainty::True } else { Certainty::False };
    let tags = IdealTags {
        radical: flag,
        lci: flag,
        unmixed: Certainty::True,
        complete_intersection: false,
        provenance: format!("{} fat points", points.len()),
    };
    Ok(Ideal::intersect_all(&powers)?.with_tags(tags).with_components(comps))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinate_point() {
        let r = GradedRing::standard(&["x0", "x1", "x2"], CoefficientField::Rational).unwrap();
        let p = point_ideal(&r, &scalars(r.field(), &[1, 0, 0])).unwrap();
        assert!(p.equals(&Ideal::parse(&r, "x1, x2").unwrap()).unwrap());
        let fat = fat_points_ideal(&r, &[(scalars(r.field(), &[1, 0, 0]), 2)]).unwrap();
        assert!(fat.equals(&Ideal::parse(&r, "x1^2, x1*x2, x2^2").unwrap()).unwrap());
        assert_eq!(fat.tags().radical, Certainty::False);
    }

    #[test]
    fn rejects_bad_points() {
        let r = GradedRing::projective(3);
        assert!(point_ideal(&r, &scalars(r.field(), &[0, 0, 0])).is_err());
        let a = scalars(r.field(), &[1, 2, 3]);
        let b = scalars(r.field(), &[-2, -4, -6]);
        assert!(same_projective_point(&a, &b));
        assert!(fat_points_ideal(&r, &[(a, 1), (b, 1)]).is_err());
    }

    #[test]
    fn three_points_have_expected_hilbert_function() {
        let r = GradedRing::projective(3);
        let pts: Vec<_> = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
            .iter()
            .map(|c| (scalars(r.field(), c), 1))
            .collect();
        let i = fat_points_ideal(&r, &pts).unwrap();
        assert_eq!((0..4).map(|d| i.hilbert_function(d)).collect::<Vec<_>>(), vec![1, 3, 3, 3]);
        assert!(i.is_saturated().unwrap());
    }
}
