use std::fmt;

use rand::Rng;
use serde::Serialize;

use super::points::same_projective_point;
use super::{rng, COEFFICIENT_RANGE, MAX_ATTEMPTS};
use crate::error::{Error, Result};
use crate::ideals::{Certainty, Component, Ideal, IdealTags};
use crate::polyring::{CoefficientField, DegreeVector, FieldScalar, GradedRing, Polynomial};
use crate::resolve::{is_acm, FreeModule, ModuleMap, Presentation};

/// A point `[a0:a1] x [b0:b1]` of P^1 x P^1 with a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointP1P1 {
    pub a: [FieldScalar; 2],
    pub b: [FieldScalar; 2],
    pub mult: u32,
}

impl PointP1P1 {
    pub fn new(a: [FieldScalar; 2], b: [FieldScalar; 2], mult: u32) -> Result<Self> {
        if a.iter().all(|c| c.is_zero()) || b.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidArgument("a coordinate pair is zero".into()));
        }
        if mult == 0 {
            return Err(Error::InvalidArgument("multiplicities must be positive".into()));
        }
        Ok(PointP1P1 { a, b, mult })
    }

    pub fn from_ints(field: CoefficientField, a: [i64; 2], b: [i64; 2], mult: u32) -> Result<Self> {
        Self::new(a.map(|v| field.from_i64(v)), b.map(|v| field.from_i64(v)), mult)
    }

    pub fn same_point(&self, other: &PointP1P1) -> bool {
        same_projective_point(&self.a, &other.a) && same_projective_point(&self.b, &other.b)
    }

    pub fn same_first(&self, other: &PointP1P1) -> bool {
        same_projective_point(&self.a, &other.a)
    }

    /// `(a1 x0 - a0 x1, b1 x2 - b0 x3)` in the bigraded ring.
    pub fn ideal(&self, ring: &GradedRing) -> Result<Ideal> {
        if ring.nvars() != 4 {
            return Err(Error::InvalidArgument("P^1 x P^1 needs four variables".into()));
        }
        let v = |i| Polynomial::var(ring, i);
        let f = v(0).scale(&self.a[1]).sub(&v(1).scale(&self.a[0]));
        let g = v(2).scale(&self.b[1]).sub(&v(3).scale(&self.b[0]));
        Ok(Ideal::new(ring, vec![f, g])?.with_tags(super::points::reduced_ci_tags(self.to_string())))
    }
}

impl fmt::Display for PointP1P1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]x[{}:{}]", self.a[0], self.a[1], self.b[0], self.b[1])?;
        if self.mult != 1 {
            write!(f, " mult {}", self.mult)?;
        }
        Ok(())
    }
}

/// A finite set of distinct points of P^1 x P^1 and its bihomogeneous ideal.
#[derive(Clone, Debug)]
pub struct PointConfigP1P1 {
    ring: GradedRing,
    points: Vec<PointP1P1>,
    ideal: Ideal,
}

impl PointConfigP1P1 {
    pub fn new(field: CoefficientField, points: Vec<PointP1P1>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (k, p) in points.iter().enumerate() {
            if points[..k].iter().any(|q| q.same_point(p)) {
                return Err(Error::InvalidArgument(format!("repeated point {p}")));
            }
        }
        let ring = GradedRing::p1p1(field);
        let mut comps = Vec::with_capacity(points.len());
        let mut powers = Vec::with_capacity(points.len());
        for p in &points {
            let ip = p.ideal(&ring)?;
            powers.push(ip.power(p.mult)?);
            comps.push(Component { ideal: ip, mult: p.mult });
        }
        let reduced = points.iter().all(|p| p.mult == 1);
        // Reduced configurations are local complete intersections as unions of lines.
        let flag = if reduced { Certainty::True } else { Certainty::False };
        let tags = IdealTags {
            radical: flag,
            lci: flag,
            unmixed: Certainty::True,
            complete_intersection: false,
            provenance: format!("{} points in P1xP1", points.len()),
        };
        let ideal = Ideal::intersect_all(&powers)?.with_tags(tags).with_components(comps);
        Ok(PointConfigP1P1 { ring, points, ideal })
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn points(&self) -> &[PointP1P1] {
        &self.points
    }

    /// The bigraded ideal.
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn is_reduced(&self) -> bool {
        self.points.iter().all(|p| p.mult == 1)
    }

    /// The same points with every multiplicity set to `mult`.
    pub fn with_multiplicity(&self, mult: u32) -> Result<Self> {
        let pts = self.points.iter().map(|p| PointP1P1 { mult, ..p.clone() }).collect();
        Self::new(self.ring.field(), pts)
    }

    pub fn alpha(&self) -> AlphaTuple {
        let mut firsts: Vec<(&PointP1P1, usize)> = Vec::new();
        for p in &self.points {
            match firsts.iter_mut().find(|(q, _)| q.same_first(p)) {
                Some((_, n)) => *n += 1,
                None => firsts.push((p, 1)),
            }
        }
        let mut v: Vec<usize> = firsts.into_iter().map(|(_, n)| n).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        AlphaTuple(v)
    }
}

/// Fiber sizes over the first factor, nonincreasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaTuple(Vec<usize>);

impl AlphaTuple {
    pub fn new(mut v: Vec<usize>) -> Result<Self> {
        if v.is_empty() || v.contains(&0) {
            return Err(Error::InvalidArgument("alpha entries must be positive".into()));
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        Ok(AlphaTuple(v))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn points(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn distinct_values(&self) -> usize {
        let mut v = self.0.clone();
        v.dedup();
        v.len()
    }

    /// `(a^c, b^d)` when there are exactly two distinct values.
    pub fn two_valued(&self) -> Option<(usize, usize, usize, usize)> {
        if self.distinct_values() != 2 {
            return None;
        }
        let a = self.0[0];
        let c = self.0.iter().filter(|&&x| x == a).count();
        let b = self.0[c];
        Some((a, b, c, self.0.len() - c))
    }
}

impl fmt::Display for AlphaTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Points `[1:i] x [1:j]` for `j < alpha_i`.
pub fn ferrers_config(alpha: &[usize], mult: u32) -> Result<PointConfigP1P1> {
    let alpha = AlphaTuple::new(alpha.to_vec())?;
    let field = CoefficientField::Rational;
    let mut pts = Vec::with_capacity(alpha.points());
    for (i, &n) in alpha.values().iter().enumerate() {
        for j in 0..n {
            pts.push(PointP1P1::from_ints(field, [1, i as i64], [1, j as i64], mult)?);
        }
    }
    PointConfigP1P1::new(field, pts)
}

/// `count` points with pairwise distinct first and second coordinates, drawn
/// from integers in `[-20, 20]`.
pub fn general_p1p1_points(count: usize, seed: u64) -> Result<PointConfigP1P1> {
    let field = CoefficientField::Rational;
    let mut r = rng(seed);
    let mut draw_pair = || loop {
        let p = [r.gen_range(COEFFICIENT_RANGE), r.gen_range(COEFFICIENT_RANGE)];
        if p != [0, 0] {
            return p;
        }
    };
    let mut pts: Vec<PointP1P1> = Vec::with_capacity(count);
    let mut draws = 0;
    while pts.len() < count {
        draws += 1;
        if draws > 1000 * MAX_ATTEMPTS {
            return Err(Error::GenericityFailed { seeds: vec![seed] });
        }
        let p = PointP1P1::from_ints(field, draw_pair(), draw_pair(), 1)?;
        if pts
            .iter()
            .any(|q| q.same_first(&p) || same_projective_point(&q.b, &p.b))
        {
            continue;
        }
        pts.push(p);
    }
    PointConfigP1P1::new(field, pts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum P1P1Kind {
    CompleteIntersection,
    AlmostCompleteIntersection,
    Other,
    NotAcm,
}

impl fmt::Display for P1P1Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            P1P1Kind::CompleteIntersection => "CI",
            P1P1Kind::AlmostCompleteIntersection => "ACI",
            P1P1Kind::Other => "other",
            P1P1Kind::NotAcm => "not ACM",
        })
    }
}

/// Classification of a reduced configuration by its alpha tuple, with the
/// predicted behavior of its symbolic powers (viewed as lines in P^3).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P1P1Classification {
    pub alpha: AlphaTuple,
    pub kind: P1P1Kind,
    pub acm: bool,
    pub mu: usize,
    /// `I^(m) = I^m` for all `m`; `None` when not ACM.
    pub all_powers_symbolic: Option<bool>,
    /// The square always agrees with the symbolic square in the ACM case.
    pub square_symbolic: Option<bool>,
    /// `I^3` saturated and defining an ACM scheme.
    pub cube_acm: Option<bool>,
}

pub fn classify_p1p1(config: &PointConfigP1P1) -> Result<P1P1Classification> {
    if !config.is_reduced() {
        return Err(Error::InvalidArgument("classification needs reduced points".into()));
    }
    let alpha = config.alpha();
    let flat = config.ideal().totalized();
    let acm = is_acm(&flat)?;
    let mu = config.ideal().mu()?;
    if !acm {
        return Ok(P1P1Classification {
            alpha,
            kind: P1P1Kind::NotAcm,
            acm,
            mu,
            all_powers_symbolic: None,
            square_symbolic: None,
            cube_acm: None,
        });
    }
    let kind = match alpha.distinct_values() {
        1 => P1P1Kind::CompleteIntersection,
        2 => P1P1Kind::AlmostCompleteIntersection,
        _ => P1P1Kind::Other,
    };
    let consistent = match kind {
        P1P1Kind::CompleteIntersection => mu == 2,
        P1P1Kind::AlmostCompleteIntersection => mu == 3,
        _ => mu >= 4,
    };
    if !consistent {
        return Err(Error::TheoremViolation(format!(
            "alpha {alpha} classified as {kind} but the ideal has {mu} minimal generators"
        )));
    }
    Ok(P1P1Classification {
        alpha,
        kind,
        acm,
        mu,
        all_powers_symbolic: Some(mu <= 3),
        square_symbolic: Some(true),
        cube_acm: Some(kind == P1P1Kind::CompleteIntersection),
    })
}

/// Hilbert-Burch presentation of the configuration with
/// `alpha = (a^c, b^d)`, rows and columns ordered as
/// `G = R(-c-d,0) + R(-c,-b) + R(0,-a)` and `F = R(-c-d,-b) + R(-c,-a)`.
pub fn aci_presentation(a: usize, b: usize, c: usize, d: usize) -> Result<Presentation> {
    if !(a > b && b >= 1 && c >= 1 && d >= 1) {
        return Err(Error::InvalidArgument("need a > b >= 1 and c, d >= 1".into()));
    }
    let mut alpha = vec![a; c];
    alpha.extend(std::iter::repeat(b).take(d));
    let config = ferrers_config(&alpha, 1)?;
    let p = Presentation::from_ideal(config.ideal())?;
    let (a, b, c, d) = (a as i64, b as i64, c as i64, d as i64);
    let pair = DegreeVector::pair;
    let g_want = [pair(c + d, 0), pair(c, b), pair(0, a)];
    let f_want = [pair(c + d, b), pair(c, a)];
    let row_perm = match_twists(p.g_twists(), &g_want)?;
    let col_perm = match_twists(p.f_twists(), &f_want)?;
    let entries = row_perm
        .iter()
        .map(|&i| col_perm.iter().map(|&j| p.phi().entry(i, j).clone()).collect())
        .collect();
    let phi = ModuleMap::new(
        p.ring(),
        FreeModule::new(f_want.to_vec()),
        FreeModule::new(g_want.to_vec()),
        entries,
    )?;
    let gens = row_perm.iter().map(|&i| p.generators()[i].clone()).collect();
    Presentation::new(phi, gens)
}

/// The presentation of a two-valued alpha tuple; other shapes are refused.
pub fn aci_presentation_for(alpha: &AlphaTuple) -> Result<Presentation> {
    let (a, b, c, d) = alpha.two_valued().ok_or_else(|| {
        Error::InvalidArgument(format!("alpha {alpha} is not of the form (a^c, b^d) with a > b"))
    })?;
    aci_presentation(a, b, c, d)
}

/// Index `k` of `have` matching `want[k]`, as a permutation.
fn match_twists(have: &[DegreeVector], want: &[DegreeVector]) -> Result<Vec<usize>> {
    let mut used = vec![false; have.len()];
    let mut perm = Vec::with_capacity(want.len());
    if have.len() != want.len() {
        return Err(Error::InvariantViolation(format!(
            "twist mismatch: computed {have:?}, closed form {want:?}"
        )));
    }
    for w in want {
        let k = (0..have.len())
            .find(|&k| !used[k] && have[k] == *w)
            .ok_or_else(|| {
                Error::InvariantViolation(format!("twist mismatch: computed {have:?}, closed form {want:?}"))
            })?;
        used[k] = true;
        perm.push(k);
    }
    Ok(perm)
}

/// The twists of the three free modules resolving the ideal of triple points
/// supported on `alpha = (a^c, b^d)`, as positive pairs.
pub fn triple_point_twists(a: i64, b: i64, c: i64, d: i64) -> [Vec<DegreeVector>; 3] {
    let p = DegreeVector::pair;
    let f0 = vec![
        p(3 * c + 3 * d, 0),
        p(3 * c + 2 * d, b),
        p(2 * c + 2 * d, a),
        p(3 * c + d, 2 * b),
        p(2 * c + d, b + a),
        p(c + d, 2 * a),
        p(3 * c, 3 * b),
        p(2 * c, 2 * b + a),
        p(c, b + 2 * a),
        p(0, 3 * a),
    ];
    let f1 = vec![
        p(c, 3 * a),
        p(2 * c, 2 * a + b),
        p(3 * c, a + 2 * b),
        p(c + d, 2 * a + b),
        p(2 * c + d, a + 2 * b),
        p(3 * c + d, 3 * b),
        p(2 * c + d, 2 * a),
        p(3 * c + d, a + b),
        p(2 * c + 2 * d, a + b),
        p(3 * c + 2 * d, 2 * b),
        p(3 * c + 2 * d, a),
        p(3 * c + 3 * d, b),
    ];
    let f2 = vec![p(3 * c + 2 * d, b + a), p(3 * c + d, a + 2 * b), p(2 * c + d, 2 * a + b)];
    [f0, f1, f2]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_of_small_configs() {
        let q = CoefficientField::Rational;
        let pts = vec![
            PointP1P1::from_ints(q, [1, 0], [1, 0], 1).unwrap(),
            PointP1P1::from_ints(q, [2, 0], [1, 1], 1).unwrap(),
            PointP1P1::from_ints(q, [1, 1], [1, 0], 1).unwrap(),
        ];
        let c = PointConfigP1P1::new(q, pts).unwrap();
        assert_eq!(c.alpha().values(), &[2, 1]);
        assert_eq!(ferrers_config(&[2, 2, 2], 1).unwrap().alpha().values(), &[2, 2, 2]);
    }

    #[test]
    fn repeated_points_are_rejected() {
        let q = CoefficientField::Rational;
        let p = PointP1P1::from_ints(q, [1, 2], [3, 4], 1).unwrap();
        let p2 = PointP1P1::from_ints(q, [2, 4], [-3, -4], 1).unwrap();
        assert!(PointConfigP1P1::new(q, vec![p, p2]).is_err());
        assert!(PointP1P1::from_ints(q, [0, 0], [1, 1], 1).is_err());
    }

    #[test]
    fn general_points_have_distinct_fibers() {
        let c = general_p1p1_points(5, 7).unwrap();
        assert_eq!(c.alpha().values(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn classification_of_small_tuples() {
        let ci = classify_p1p1(&ferrers_config(&[2, 2], 1).unwrap()).unwrap();
        assert_eq!(ci.kind, P1P1Kind::CompleteIntersection);
        assert_eq!(ci.mu, 2);
        let aci = classify_p1p1(&ferrers_config(&[2, 1], 1).unwrap()).unwrap();
        assert_eq!(aci.kind, P1P1Kind::AlmostCompleteIntersection);
        assert_eq!(aci.all_powers_symbolic, Some(true));
        let other = classify_p1p1(&ferrers_config(&[3, 2, 1], 1).unwrap()).unwrap();
        assert_eq!(other.kind, P1P1Kind::Other);
        assert_eq!(other.mu, 4);
        assert_eq!(other.all_powers_symbolic, Some(false));
    }

    #[test]
    fn aci_twists_follow_closed_form() {
        let p = aci_presentation(2, 1, 1, 1).unwrap();
        assert_eq!(p.g_twists(), &[DegreeVector::pair(2, 0), DegreeVector::pair(1, 1), DegreeVector::pair(0, 2)]);
        let p = aci_presentation(3, 1, 1, 1).unwrap();
        assert_eq!(p.g_twists()[2], DegreeVector::pair(0, 3));
        assert!(aci_presentation_for(&AlphaTuple::new(vec![2, 2]).unwrap()).is_err());
    }

    #[test]
    fn triple_point_list_sizes() {
        let [f0, f1, f2] = triple_point_twists(2, 1, 1, 1);
        assert_eq!((f0.len(), f1.len(), f2.len()), (10, 12, 3));
        let p = DegreeVector::pair;
        assert_eq!(f2, vec![p(5, 3), p(4, 4), p(3, 5)]);
    }
}
