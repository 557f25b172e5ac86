use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Sub};
use std::sync::Arc;

use serde::{Serialize, Serializer};

use super::monomial::{Monomial, MAX_VARS};
use super::scalar::CoefficientField;
use crate::error::{Error, Result};

/// A degree in `Z^r` for `r` in {1, 2}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeVector {
    arity: u8,
    v: [i64; 2],
}

impl DegreeVector {
    pub fn single(d: i64) -> Self {
        DegreeVector { arity: 1, v: [d, 0] }
    }

    pub fn pair(a: i64, b: i64) -> Self {
        DegreeVector { arity: 2, v: [a, b] }
    }

    pub fn zero(arity: usize) -> Self {
        assert!(arity == 1 || arity == 2, "grading arity must be 1 or 2");
        DegreeVector { arity: arity as u8, v: [0, 0] }
    }

    pub fn from_slice(v: &[i64]) -> Result<Self> {
        match v {
            [a] => Ok(Self::single(*a)),
            [a, b] => Ok(Self::pair(*a, *b)),
            _ => Err(Error::InvalidArgument(format!(
                "degree vectors have 1 or 2 entries, got {}",
                v.len()
            ))),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn components(&self) -> &[i64] {
        &self.v[..self.arity as usize]
    }

    pub fn total(&self) -> i64 {
        self.v[0] + self.v[1]
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity(), other.arity()));
        }
        Ok(DegreeVector { arity: self.arity, v: [self.v[0] + other.v[0], self.v[1] + other.v[1]] })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity(), other.arity()));
        }
        Ok(DegreeVector { arity: self.arity, v: [self.v[0] - other.v[0], self.v[1] - other.v[1]] })
    }

    pub fn scale(&self, k: i64) -> Self {
        DegreeVector { arity: self.arity, v: [self.v[0] * k, self.v[1] * k] }
    }

    /// Componentwise `self <= other`.
    pub fn le_componentwise(&self, other: &Self) -> Result<bool> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch(self.arity(), other.arity()));
        }
        Ok(self.v[0] <= other.v[0] && self.v[1] <= other.v[1])
    }

    pub fn is_nonnegative(&self) -> bool {
        self.v[0] >= 0 && self.v[1] >= 0
    }

    /// The same degree seen in the standard grading.
    pub fn totalized(&self) -> Self {
        Self::single(self.total())
    }
}

impl Add for DegreeVector {
    type Output = DegreeVector;
    /// Panics when the arities differ; use `checked_add` for untrusted input.
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("degree arity mismatch")
    }
}

impl Sub for DegreeVector {
    type Output = DegreeVector;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs).expect("degree arity mismatch")
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arity == 1 {
            write!(f, "{}", self.v[0])
        } else {
            write!(f, "({},{})", self.v[0], self.v[1])
        }
    }
}

impl fmt::Debug for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for DegreeVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.components().serialize(s)
    }
}

/// Monomial orders. `Block(k)` eliminates the first `k` variables: it compares
/// the plain degree in those variables first and breaks ties by grevlex on
/// all variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    Block(usize),
}

struct RingData {
    names: Vec<String>,
    degrees: Vec<DegreeVector>,
    arity: usize,
    field: CoefficientField,
    order: MonomialOrder,
    weights: Vec<u32>,
    unit_weights: bool,
}

/// `k[x_0, ..., x_n]` with a `Z^r` grading and a fixed ambient monomial order.
/// Cheap to clone; equality is structural.
#[derive(Clone)]
pub struct GradedRing(Arc<RingData>);

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.names == other.0.names
                && self.0.degrees == other.0.degrees
                && self.0.field == other.0.field
                && self.0.order == other.0.order)
    }
}

impl Eq for GradedRing {}

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.field, self.0.names.join(","))?;
        if self.0.arity == 2 || !self.0.unit_weights {
            let ds: Vec<String> = self.0.degrees.iter().map(|d| d.to_string()).collect();
            write!(f, " grading {}", ds.join(","))?;
        }
        Ok(())
    }
}

impl GradedRing {
    pub fn new(
        names: Vec<String>,
        degrees: Vec<DegreeVector>,
        field: CoefficientField,
    ) -> Result<Self> {
        Self::build(names, degrees, field, MonomialOrder::Grevlex, false)
    }

    /// Standard grading, every variable of degree 1.
    pub fn standard<S: AsRef<str>>(names: &[S], field: CoefficientField) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let degrees = vec![DegreeVector::single(1); names.len()];
        Self::new(names, degrees, field)
    }

    /// `k[x0, ..., x{count-1}]` standard graded over the rationals.
    pub fn projective(count: usize) -> Self {
        let names: Vec<String> = (0..count).map(|i| format!("x{i}")).collect();
        Self::standard(&names, CoefficientField::Rational).expect("valid ring")
    }

    /// The bigraded coordinate ring `k[x0,x1,x2,x3]` of P^1 x P^1.
    pub fn p1p1(field: CoefficientField) -> Self {
        let names: Vec<String> = (0..4).map(|i| format!("x{i}")).collect();
        let degrees = vec![
            DegreeVector::pair(1, 0),
            DegreeVector::pair(1, 0),
            DegreeVector::pair(0, 1),
            DegreeVector::pair(0, 1),
        ];
        Self::new(names, degrees, field).expect("valid ring")
    }

    fn build(
        names: Vec<String>,
        degrees: Vec<DegreeVector>,
        field: CoefficientField,
        order: MonomialOrder,
        allow_weightless: bool,
    ) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidArgument("a ring needs at least one variable".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::InvalidArgument(format!(
                "at most {MAX_VARS} variables are supported"
            )));
        }
        if names.len() != degrees.len() {
            return Err(Error::InvalidArgument("one degree per variable is required".into()));
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate variable `{n}`")));
            }
            let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::InvalidArgument(format!("invalid variable name `{n}`")));
            }
        }
        let arity = degrees[0].arity();
        for d in &degrees {
            if d.arity() != arity {
                return Err(Error::ArityMismatch(arity, d.arity()));
            }
            if !d.is_nonnegative() || (d.total() == 0 && !allow_weightless) {
                return Err(Error::InvalidArgument(format!(
                    "variable degree {d} must be nonnegative with positive total"
                )));
            }
        }
        if let MonomialOrder::Block(k) = order {
            if k > names.len() {
                return Err(Error::InvalidArgument("block larger than the ring".into()));
            }
        }
        let weights: Vec<u32> = degrees.iter().map(|d| d.total() as u32).collect();
        let unit_weights = weights.iter().all(|&w| w == 1);
        Ok(GradedRing(Arc::new(RingData {
            names,
            degrees,
            arity,
            field,
            order,
            weights,
            unit_weights,
        })))
    }

    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn var_degree(&self, i: usize) -> DegreeVector {
        self.0.degrees[i]
    }

    pub fn var_degrees(&self) -> &[DegreeVector] {
        &self.0.degrees
    }

    pub fn arity(&self) -> usize {
        self.0.arity
    }

    pub fn field(&self) -> CoefficientField {
        self.0.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    /// Total degree of each variable, the weights used by grevlex.
    pub fn weights(&self) -> &[u32] {
        &self.0.weights
    }

    /// The same variables and grading under another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        Self::build(self.0.names.clone(), self.0.degrees.clone(), self.0.field, order, true)
    }

    /// The same ring with every variable degree replaced by its total.
    pub fn totalized(&self) -> Self {
        let degrees = self.0.degrees.iter().map(|d| d.totalized()).collect();
        Self::build(self.0.names.clone(), degrees, self.0.field, self.0.order, true)
            .expect("totalizing keeps the ring valid")
    }

    /// Variables permuted: variable `i` of `self` becomes variable `perm[i]`.
    pub fn permuted(&self, perm: &[usize], order: MonomialOrder) -> Self {
        let n = self.nvars();
        let mut names = vec![String::new(); n];
        let mut degrees = vec![DegreeVector::zero(self.arity()); n];
        for (i, &p) in perm.iter().enumerate() {
            names[p] = self.0.names[i].clone();
            degrees[p] = self.0.degrees[i];
        }
        Self::build(names, degrees, self.0.field, order, true).expect("permutation of a valid ring")
    }

    /// Adjoin `count` auxiliary variables of degree zero in front, ordered by
    /// the elimination order for that block. The names never collide with
    /// existing variables.
    pub(crate) fn with_aux_front(&self, count: usize) -> Result<Self> {
        let mut names = Vec::with_capacity(self.nvars() + count);
        for k in 0..count {
            let mut name = format!("_t{k}");
            while self.var_index(&name).is_some() {
                name.insert(0, '_');
            }
            names.push(name);
        }
        names.extend(self.0.names.iter().cloned());
        let mut degrees = vec![DegreeVector::zero(self.arity()); count];
        degrees.extend(self.0.degrees.iter().copied());
        Self::build(names, degrees, self.0.field, MonomialOrder::Block(count), true)
    }

    /// Multidegree of a monomial.
    pub fn monomial_degree(&self, m: &Monomial) -> DegreeVector {
        let mut d = DegreeVector::zero(self.arity());
        for (i, deg) in self.0.degrees.iter().enumerate() {
            let e = m.exponent(i) as i64;
            if e != 0 {
                d.v[0] += e * deg.v[0];
                d.v[1] += e * deg.v[1];
            }
        }
        d
    }

    /// Weighted total degree of a monomial.
    #[inline]
    pub fn weighted_degree(&self, m: &Monomial) -> u32 {
        if self.0.unit_weights {
            m.total_degree()
        } else {
            self.0
                .weights
                .iter()
                .enumerate()
                .map(|(i, w)| w * m.exponent(i) as u32)
                .sum()
        }
    }

    /// Compare two monomials in the ambient order.
    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = self.nvars();
        match self.0.order {
            MonomialOrder::Grevlex => self.grevlex(a, b, n),
            MonomialOrder::Lex => {
                for i in 0..n {
                    match a.exponent(i).cmp(&b.exponent(i)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block(k) => {
                let da: u32 = (0..k).map(|i| a.exponent(i) as u32).sum();
                let db: u32 = (0..k).map(|i| b.exponent(i) as u32).sum();
                da.cmp(&db).then_with(|| self.grevlex(a, b, n))
            }
        }
    }

    #[inline]
    fn grevlex(&self, a: &Monomial, b: &Monomial, n: usize) -> Ordering {
        match self.weighted_degree(a).cmp(&self.weighted_degree(b)) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..n).rev() {
            match a.exponent(i).cmp(&b.exponent(i)) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }

    /// Render a monomial with this ring's variable names ("1" for the unit).
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for i in 0..self.nvars() {
            match m.exponent(i) {
                0 => {}
                1 => parts.push(self.0.names[i].clone()),
                e => parts.push(format!("{}^{}", self.0.names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn ring_validation() {
        let f = CoefficientField::Rational;
        assert!(GradedRing::standard(&["x", "x"], f).is_err());
        assert!(GradedRing::standard::<&str>(&[], f).is_err());
        assert!(GradedRing::new(
            vec!["a".into(), "b".into()],
            vec![DegreeVector::single(1), DegreeVector::pair(0, 1)],
            f
        )
        .is_err());
        assert!(GradedRing::new(vec!["a".into()], vec![DegreeVector::single(0)], f).is_err());
    }

    #[test]
    fn grevlex_degree_two_by_brute_force() {
        // Textbook grevlex: higher degree wins; otherwise the last variable
        // where the exponents differ decides, smaller exponent wins.
        let r = GradedRing::standard(&["x", "y", "z"], CoefficientField::Rational).unwrap();
        let mut all = Vec::new();
        for a in 0..=2u32 {
            for b in 0..=(2 - a) {
                all.push(mono(&[a, b, 2 - a - b]));
            }
        }
        for p in &all {
            for q in &all {
                let mut expected = Ordering::Equal;
                for i in (0..3).rev() {
                    if p.exponent(i) != q.exponent(i) {
                        expected = q.exponent(i).cmp(&p.exponent(i));
                        break;
                    }
                }
                assert_eq!(r.compare(p, q), expected, "{p:?} vs {q:?}");
            }
        }
        // y^2 > x*z
        assert_eq!(r.compare(&mono(&[0, 2, 0]), &mono(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let r = GradedRing::standard(&["x", "y"], CoefficientField::Rational)
            .unwrap()
            .with_order(MonomialOrder::Lex)
            .unwrap();
        assert_eq!(r.compare(&mono(&[1, 0]), &mono(&[0, 100])), Ordering::Greater);
        assert_eq!(r.compare(&mono(&[3, 1]), &mono(&[3, 1])), Ordering::Equal);
    }

    #[test]
    fn block_order_eliminates() {
        let r = GradedRing::projective(3).with_order(MonomialOrder::Block(1)).unwrap();
        assert_eq!(r.compare(&mono(&[1, 0, 0]), &mono(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(r.compare(&mono(&[0, 2, 0]), &mono(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn bigraded_degrees() {
        let r = GradedRing::p1p1(CoefficientField::Rational);
        assert_eq!(r.monomial_degree(&mono(&[1, 0, 1, 0])), DegreeVector::pair(1, 1));
        assert_eq!(r.totalized().monomial_degree(&mono(&[1, 0, 1, 0])), DegreeVector::single(2));
        assert!(DegreeVector::single(1).checked_add(&DegreeVector::pair(1, 0)).is_err());
    }
}
