use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{random_coefficient, random_form, rng, MAX_ATTEMPTS};
use crate::error::{Error, Result};
use crate::ideals::{Certainty, Ideal, IdealTags};
use crate::polyring::{DegreeVector, GradedRing, Polynomial};
use crate::resolve::is_acm;

fn ci_tags(provenance: String) -> IdealTags {
    IdealTags {
        radical: Certainty::Unknown,
        lci: Certainty::True,
        unmixed: Certainty::True,
        complete_intersection: true,
        provenance,
    }
}

fn check_standard(ring: &GradedRing) -> Result<()> {
    if ring.arity() != 1 || ring.var_degrees().iter().any(|d| d.total() != 1) {
        return Err(Error::InvalidArgument("random forms need a standard-graded ring".into()));
    }
    Ok(())
}

/// Random forms of the given degrees with coefficients uniform in
/// `[-20, 20]`, accepted once they cut out the expected codimension.
pub fn random_ci(ring: &GradedRing, degrees: &[u32], seed: u64) -> Result<Ideal> {
    check_standard(ring)?;
    if degrees.is_empty() || degrees.len() > ring.nvars() || degrees.contains(&0) {
        return Err(Error::InvalidArgument("degrees must be positive, at most one per variable".into()));
    }
    let mut tried = Vec::new();
    for attempt in 0..MAX_ATTEMPTS as u64 {
        let s = seed.wrapping_add(attempt);
        tried.push(s);
        let mut r = rng(s);
        let gens = degrees.iter().map(|&d| random_form(ring, d, &mut r)).collect();
        let ideal = Ideal::new(ring, gens)?;
        if ideal.codimension()? == degrees.len() {
            return Ok(ideal.with_tags(ci_tags(format!("random CI {degrees:?}, seed {s}"))));
        }
    }
    Err(Error::GenericityFailed { seeds: tried })
}

fn random_element(ideal: &Ideal, d: u32, r: &mut ChaCha8Rng) -> Polynomial {
    let mut acc = Polynomial::zero(ideal.ring());
    for b in ideal.degree_part_basis(DegreeVector::single(d as i64)) {
        acc = acc.add(&b.scale(&random_coefficient(ideal.ring(), r)));
    }
    acc
}

/// A random complete intersection of the given degrees inside `ideal`,
/// drawn from random combinations of a basis of each graded piece.
pub fn random_ci_inside(ideal: &Ideal, degrees: &[u32], seed: u64) -> Result<Ideal> {
    check_standard(ideal.ring())?;
    let mut tried = Vec::new();
    for attempt in 0..MAX_ATTEMPTS as u64 {
        let s = seed.wrapping_add(attempt);
        tried.push(s);
        let mut r = rng(s);
        let gens = degrees.iter().map(|&d| random_element(ideal, d, &mut r)).collect();
        let ci = Ideal::new(ideal.ring(), gens)?;
        if ci.generators().len() == degrees.len() && ci.codimension()? == degrees.len() {
            return Ok(ci.with_tags(ci_tags(format!("random CI {degrees:?} inside an ideal, seed {s}"))));
        }
    }
    Err(Error::GenericityFailed { seeds: tried })
}

/// `ci : inside`.
pub fn linkage_residual(ci: &Ideal, inside: &Ideal) -> Result<Ideal> {
    let mut out = ci.colon(inside)?;
    out.tags_mut().provenance = "linkage residual".into();
    Ok(out)
}

/// A codimension-three residual in P^3 or P^4: a general complete
/// intersection of type (1,1,2) linked through a general one of type (2,2,2)
/// containing it.
#[derive(Clone, Debug, Serialize)]
pub struct LinkedResidual {
    #[serde(skip)]
    pub start: Ideal,
    #[serde(skip)]
    pub link: Ideal,
    #[serde(skip)]
    pub residual: Ideal,
    pub seed: u64,
    pub seeds_tried: Vec<u64>,
}

/// Hilbert function values of the residual in degrees `0..=4` (P^3), or its
/// first differences (P^4, where the residual is a curve).
pub const RESIDUAL_HILBERT: [i64; 5] = [1, 4, 6, 6, 6];

/// Build the residual in `P^{nvars-1}` for `nvars` 4 or 5, validating
/// codimension 3, four minimal generators, the Hilbert function and ACM.
pub fn linked_residual(nvars: usize, seed: u64) -> Result<LinkedResidual> {
    if nvars != 4 && nvars != 5 {
        return Err(Error::InvalidArgument("the residual is built in P^3 or P^4".into()));
    }
    let ring = GradedRing::projective(nvars);
    let mut tried = Vec::new();
    for attempt in 0..MAX_ATTEMPTS as u64 {
        let s = seed.wrapping_add(attempt);
        tried.push(s);
        let start = match random_ci(&ring, &[1, 1, 2], s) {
            Ok(i) => i,
            Err(Error::GenericityFailed { .. }) => continue,
            Err(e) => return Err(e),
        };
        let link = match random_ci_inside(&start, &[2, 2, 2], s) {
            Ok(i) => i,
            Err(Error::GenericityFailed { .. }) => continue,
            Err(e) => return Err(e),
        };
        let residual = linkage_residual(&link, &start)?;
        if !residual_is_expected(&residual, nvars)? {
            continue;
        }
        let residual = residual.with_tags(IdealTags {
            radical: Certainty::Asserted,
            lci: Certainty::Asserted,
            unmixed: Certainty::True,
            complete_intersection: false,
            provenance: format!("residual of CI(1,1,2) in CI(2,2,2), P{}, seed {s}", nvars - 1),
        });
        return Ok(LinkedResidual { start, link, residual, seed: s, seeds_tried: tried });
    }
    Err(Error::GenericityFailed { seeds: tried })
}

fn residual_is_expected(residual: &Ideal, nvars: usize) -> Result<bool> {
    if residual.codimension()? != 3 || residual.mu()? != 4 {
        return Ok(false);
    }
    let h = |d: i64| residual.hilbert_function(d);
    let values: Vec<i64> = if nvars == 4 {
        (0..5).map(h).collect()
    } else {
        (0..5).map(|d| h(d) - if d > 0 { h(d - 1) } else { 0 }).collect()
    };
    if values != RESIDUAL_HILBERT {
        return Ok(false);
    }
    is_acm(residual)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_ci_is_deterministic() {
        let r = GradedRing::projective(4);
        let a = random_ci(&r, &[2, 3], 11).unwrap();
        let b = random_ci(&r, &[2, 3], 11).unwrap();
        assert_eq!(a.generators(), b.generators());
        assert_eq!(a.codimension().unwrap(), 2);
        assert_eq!(a.hilbert_series().totalized().numerator().len(), 4);
    }

    #[test]
    fn colon_of_ci_by_itself_is_unit() {
        let r = GradedRing::projective(3);
        let ci = random_ci(&r, &[2, 2], 3).unwrap();
        assert!(linkage_residual(&ci, &ci).unwrap().is_unit());
    }

    #[test]
    fn ci_inside_an_ideal() {
        let r = GradedRing::projective(4);
        let start = Ideal::parse(&r, "x0, x1, x2^2 + x3^2").unwrap();
        let link = random_ci_inside(&start, &[2, 2, 2], 5).unwrap();
        assert!(link.is_subset(&start).unwrap());
        assert_eq!(link.codimension().unwrap(), 3);
    }
}
