use std::cmp::Ordering;
use std::fmt;

use super::monomial::Monomial;
use super::ring::{DegreeVector, GradedRing};
use super::scalar::FieldScalar;
use crate::error::{Error, Result};

/// A polynomial: nonzero terms sorted strictly descending in the ring's order.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: GradedRing,
    terms: Vec<(FieldScalar, Monomial)>,
}

impl Polynomial {
    pub fn zero(ring: &GradedRing) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &GradedRing, c: FieldScalar) -> Self {
        Self::term(ring, c, Monomial::ONE)
    }

    pub fn one(ring: &GradedRing) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn var(ring: &GradedRing, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Self::term(ring, ring.field().one(), Monomial::var(i))
    }

    pub fn term(ring: &GradedRing, c: FieldScalar, m: Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(c, m)] }
    }

    /// Build from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &GradedRing, mut terms: Vec<(FieldScalar, Monomial)>) -> Self {
        terms.sort_by(|a, b| ring.compare(&b.1, &a.1));
        let mut out: Vec<(FieldScalar, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = last.0.add(&c),
                _ => {
                    if out.last().is_some_and(|l| l.0.is_zero()) {
                        out.pop();
                    }
                    out.push((c, m));
                }
            }
        }
        if out.last().is_some_and(|l| l.0.is_zero()) {
            out.pop();
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Trusted constructor for terms already in canonical order.
    pub(crate) fn from_sorted(ring: &GradedRing, terms: Vec<(FieldScalar, Monomial)>) -> Self {
        debug_assert!(terms.iter().all(|t| !t.0.is_zero()));
        debug_assert!(terms.windows(2).all(|w| ring.compare(&w[0].1, &w[1].1) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(FieldScalar, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(FieldScalar, Monomial)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coefficient(&self) -> Option<&FieldScalar> {
        self.terms.first().map(|t| &t.0)
    }

    /// A nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn check_ring(&self, other: &Self) {
        assert!(self.ring == other.ring, "polynomial ring mismatch");
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, m)| (c.neg(), *m)).collect(),
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        self.check_ring(other);
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.ring.compare(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { b[j].0.neg() } else { b[j].0.clone() };
                    out.push((c, b[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { a[i].0.sub(&b[j].0) } else { a[i].0.add(&b[j].0) };
                    if !c.is_zero() {
                        out.push((c, a[i].1));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { t.0.neg() } else { t.0.clone() };
            out.push((c, t.1));
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn scale(&self, c: &FieldScalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, m)| (a.mul(c), *m)).collect(),
        }
    }

    /// `c * m * self`; the order is multiplicative so sorting is preserved.
    pub fn mul_term(&self, c: &FieldScalar, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, n)| (a.mul(c), n.mul(m))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        let (small, large) =
            if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Self::zero(&self.ring);
        for (c, m) in &small.terms {
            acc = acc.add(&large.mul_term(c, m));
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Divide by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    /// `self / d` when `d` divides `self` exactly, `None` otherwise.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        self.check_ring(d);
        let (dc, dm) = d.terms.first()?;
        let dinv = dc.inv();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((c, m)) = rem.terms.first().cloned() {
            let q = m.div(dm)?;
            let qc = c.mul(&dinv);
            rem = rem.sub(&d.mul_term(&qc, &q));
            quot.push((qc, q));
        }
        Some(Polynomial::from_sorted(&self.ring, quot))
    }

    /// The common multidegree of all terms.
    pub fn multidegree(&self) -> Result<DegreeVector> {
        let mut it = self.terms.iter();
        let first = it.next().ok_or(Error::ZeroPolynomial)?;
        let d = self.ring.monomial_degree(&first.1);
        for (_, m) in it {
            let e = self.ring.monomial_degree(m);
            if e != d {
                return Err(Error::Inhomogeneous(d, e));
            }
        }
        Ok(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.multidegree().is_ok()
    }

    /// Largest weighted total degree of a term.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| self.ring.weighted_degree(&t.1)).max()
    }

    /// Reinterpret in `target`, sending variable `i` to variable `map[i]`.
    pub fn map_to(&self, target: &GradedRing, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.ring.nvars(), "variable map has the wrong length");
        let terms = self.terms.iter().map(|(c, m)| (c.clone(), m.remap(map))).collect();
        Self::from_terms(target, terms)
    }

    /// Reinterpret in a ring with the same variables and a different order.
    pub fn reorder(&self, target: &GradedRing) -> Self {
        assert_eq!(self.ring.nvars(), target.nvars());
        Self::from_terms(target, self.terms.clone())
    }

    /// Substitute polynomials (all in one target ring) for the variables.
    pub fn substitute(&self, images: &[Polynomial]) -> Self {
        assert_eq!(images.len(), self.ring.nvars());
        let target = images[0].ring();
        let mut acc = Self::zero(target);
        for (c, m) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, img) in images.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    t = t.mul(&img.pow(e as u32));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", self.ring.format_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::CoefficientField;

    fn ring() -> GradedRing {
        GradedRing::standard(&["x", "y", "z"], CoefficientField::Rational).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let s = x.add(&y);
        let d = x.sub(&y);
        assert_eq!(s.mul(&d), x.pow(2).sub(&y.pow(2)));
        assert!(x.sub(&x).is_zero());
        assert_eq!(s.pow(3).div_exact(&s).unwrap(), s.pow(2));
        assert!(x.pow(2).add(&y).div_exact(&x).is_none());
    }

    #[test]
    fn display_form() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let z = Polynomial::var(&r, 2);
        let two = Polynomial::constant(&r, r.field().from_i64(2));
        let f = x.pow(2).sub(&two.mul(&y).mul(&z));
        assert_eq!(f.to_string(), "x^2 - 2*y*z");
        assert_eq!(f.neg().to_string(), "-x^2 + 2*y*z");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }

    #[test]
    fn multidegree_errors() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        assert!(matches!(Polynomial::zero(&r).multidegree(), Err(Error::ZeroPolynomial)));
        assert!(matches!(x.add(&x.pow(2)).multidegree(), Err(Error::Inhomogeneous(..))));
        assert_eq!(x.pow(3).multidegree().unwrap(), DegreeVector::single(3));
    }
}
