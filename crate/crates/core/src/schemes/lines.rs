use super::{random_form, rng, MAX_ATTEMPTS};
use crate::error::{Error, Result};
use crate::ideals::{Certainty, Component, Ideal, IdealTags};
use crate::polyring::{GradedRing, Polynomial};

/// The line cut out by two independent linear forms.
pub fn line_ideal(ring: &GradedRing, l1: &Polynomial, l2: &Polynomial) -> Result<Ideal> {
    for l in [l1, l2] {
        if l.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if l.is_zero() || l.total_degree() != Some(1) || !l.is_homogeneous() {
            return Err(Error::InvalidArgument(format!("{l} is not a linear form")));
        }
    }
    let ideal = Ideal::new(ring, vec![l1.clone(), l2.clone()])?;
    if ideal.mu()? != 2 {
        return Err(Error::InvalidArgument(format!("{l1} and {l2} are dependent")));
    }
    Ok(ideal.with_tags(super::points::reduced_ci_tags(format!("line ({l1}, {l2})"))))
}

/// Union of lines in P^3. Distinct lines are required; the LCI tag is set
/// when no three lines share a point.
pub fn lines_p3_ideal(ring: &GradedRing, lines: &[(Polynomial, Polynomial)]) -> Result<Ideal> {
    if ring.nvars() != 4 || ring.arity() != 1 {
        return Err(Error::InvalidArgument("lines live in a standard-graded P^3".into()));
    }
    if lines.is_empty() {
        return Err(Error::EmptyInput);
    }
    let ideals: Vec<Ideal> =
        lines.iter().map(|(a, b)| line_ideal(ring, a, b)).collect::<Result<_>>()?;
    for i in 0..ideals.len() {
        for j in 0..i {
            if ideals[i].equals(&ideals[j])? {
                return Err(Error::InvalidArgument(format!("lines {j} and {i} coincide")));
            }
        }
    }
    let mut concurrent = false;
    'outer: for i in 0..ideals.len() {
        for j in i + 1..ideals.len() {
            let ij = ideals[i].sum(&ideals[j])?;
            if ij.codimension()? == 4 {
                continue;
            }
            for k in j + 1..ideals.len() {
                if ij.sum(&ideals[k])?.codimension()? < 4 {
                    concurrent = true;
                    break 'outer;
                }
            }
        }
    }
    let tags = IdealTags {
        radical: Certainty::True,
        lci: if concurrent { Certainty::Unknown } else { Certainty::True },
        unmixed: Certainty::True,
        complete_intersection: false,
        provenance: format!("{} lines in P3", lines.len()),
    };
    let comps = ideals.iter().map(|i| Component { ideal: i.clone(), mult: 1 }).collect();
    Ok(Ideal::intersect_all(&ideals)?.with_tags(tags).with_components(comps))
}

/// `count` pairwise skew lines with random integer coefficients; reseeds
/// (seed, seed + 1, ...) until the lines are pairwise disjoint.
pub fn general_lines_p3(count: usize, seed: u64) -> Result<Ideal> {
    let ring = GradedRing::projective(4);
    let mut tried = Vec::new();
    for attempt in 0..MAX_ATTEMPTS as u64 {
        let s = seed.wrapping_add(attempt);
        tried.push(s);
        let mut r = rng(s);
        let lines: Vec<(Polynomial, Polynomial)> =
            (0..count).map(|_| (random_form(&ring, 1, &mut r), random_form(&ring, 1, &mut r))).collect();
        let mut ok = true;
        let ideals: Vec<Ideal> = match lines.iter().map(|(a, b)| line_ideal(&ring, a, b)).collect() {
            Ok(v) => v,
            Err(_) => continue,
        };
        'pairs: for i in 0..ideals.len() {
            for j in 0..i {
                if ideals[i].sum(&ideals[j])?.codimension()? != 4 {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            let mut out = lines_p3_ideal(&ring, &lines)?;
            out.tags_mut().provenance = format!("{count} general lines in P3, seed {s}");
            return Ok(out);
        }
    }
    Err(Error::GenericityFailed { seeds: tried })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    #[test]
    fn two_skew_lines() {
        let r = GradedRing::projective(4);
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        let i = lines_p3_ideal(&r, &[(p("x0"), p("x1")), (p("x2"), p("x3"))]).unwrap();
        let expected = Ideal::parse(&r, "x0*x2, x0*x3, x1*x2, x1*x3").unwrap();
        assert!(i.equals(&expected).unwrap());
        assert_eq!(i.tags().lci, Certainty::True);
    }

    #[test]
    fn concurrent_lines_lose_the_tag() {
        let r = GradedRing::projective(4);
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        let i = lines_p3_ideal(&r, &[(p("x0"), p("x1")), (p("x0"), p("x2")), (p("x1"), p("x2"))]).unwrap();
        assert_eq!(i.tags().lci, Certainty::Unknown);
        assert!(lines_p3_ideal(&r, &[(p("x0"), p("x1")), (p("x0 + x1"), p("x1"))]).is_err());
        assert!(line_ideal(&r, &p("x0"), &p("2*x0")).is_err());
    }

    #[test]
    fn general_lines_are_skew() {
        let i = general_lines_p3(3, 1).unwrap();
        assert_eq!(i.tags().lci, Certainty::True);
        assert_eq!(i.codimension().unwrap(), 2);
    }
}
