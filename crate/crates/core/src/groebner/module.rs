use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::{DegreeVector, FieldScalar, GradedRing, Monomial, Polynomial};

/// One term `coef * mono * e_comp` of a free-module element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModTerm {
    pub coef: FieldScalar,
    pub mono: Monomial,
    pub comp: usize,
}

enum OrderKind {
    TermOverPosition,
    /// Induced by `e_i -> leads[i]` in `base`.
    Schreyer { leads: Vec<(Monomial, usize)>, base: ModuleOrder },
}

struct OrderData {
    ring: GradedRing,
    twists: Vec<DegreeVector>,
    total_twists: Vec<i64>,
    kind: OrderKind,
}

/// A graded free module `⊕ R(-twist_i)` together with a module monomial order.
///
/// Term-over-position compares monomials in the ring order first; at equal
/// monomials the lower component index is larger. The Schreyer order compares
/// `x^a e_i` through `x^a * lead_i` in the base order, lower index larger on ties.
#[derive(Clone)]
pub struct ModuleOrder(Arc<OrderData>);

impl ModuleOrder {
    pub fn term_over_position(ring: &GradedRing, twists: Vec<DegreeVector>) -> Result<Self> {
        for t in &twists {
            if t.arity() != ring.arity() {
                return Err(Error::ArityMismatch(ring.arity(), t.arity()));
            }
        }
        Ok(Self::build(ring, twists, OrderKind::TermOverPosition))
    }

    /// The rank-one module `R` itself.
    pub fn ideal(ring: &GradedRing) -> Self {
        Self::build(ring, vec![DegreeVector::zero(ring.arity())], OrderKind::TermOverPosition)
    }

    /// The Schreyer order induced by the leading terms of `basis` in `base`.
    pub fn schreyer(base: &ModuleOrder, basis: &[FreeModuleElement]) -> Result<Self> {
        let mut leads = Vec::with_capacity(basis.len());
        let mut twists = Vec::with_capacity(basis.len());
        for g in basis {
            let t = g.lead().ok_or(Error::ZeroPolynomial)?;
            leads.push((t.mono, t.comp));
            twists.push(base.term_degree(&t.mono, t.comp));
        }
        Ok(Self::build(base.ring(), twists, OrderKind::Schreyer { leads, base: base.clone() }))
    }

    fn build(ring: &GradedRing, twists: Vec<DegreeVector>, kind: OrderKind) -> Self {
        let total_twists = twists.iter().map(|t| t.total()).collect();
        ModuleOrder(Arc::new(OrderData { ring: ring.clone(), twists, total_twists, kind }))
    }

    pub fn ring(&self) -> &GradedRing {
        &self.0.ring
    }

    pub fn rank(&self) -> usize {
        self.0.twists.len()
    }

    pub fn twists(&self) -> &[DegreeVector] {
        &self.0.twists
    }

    pub fn is_schreyer(&self) -> bool {
        matches!(self.0.kind, OrderKind::Schreyer { .. })
    }

    /// Same module and order kind test, used to reject mixing.
    pub fn same_as(&self, other: &ModuleOrder) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.ring == other.0.ring
                && self.0.twists == other.0.twists
                && matches!(
                    (&self.0.kind, &other.0.kind),
                    (OrderKind::TermOverPosition, OrderKind::TermOverPosition)
                ))
    }

    /// Multidegree of `mono * e_comp`.
    pub fn term_degree(&self, mono: &Monomial, comp: usize) -> DegreeVector {
        self.0.ring.monomial_degree(mono) + self.0.twists[comp]
    }

    /// Weighted total degree of `mono * e_comp`, the engine's sugar.
    #[inline]
    pub fn term_weight(&self, mono: &Monomial, comp: usize) -> i64 {
        self.0.ring.weighted_degree(mono) as i64 + self.0.total_twists[comp]
    }

    #[inline]
    pub fn compare(&self, am: &Monomial, ac: usize, bm: &Monomial, bc: usize) -> Ordering {
        match &self.0.kind {
            OrderKind::TermOverPosition => {
                self.0.ring.compare(am, bm).then_with(|| bc.cmp(&ac))
            }
            OrderKind::Schreyer { leads, base } => {
                let (la, ca) = &leads[ac];
                let (lb, cb) = &leads[bc];
                base.compare(&am.mul(la), *ca, &bm.mul(lb), *cb).then_with(|| bc.cmp(&ac))
            }
        }
    }

    #[inline]
    pub fn compare_terms(&self, a: &ModTerm, b: &ModTerm) -> Ordering {
        self.compare(&a.mono, a.comp, &b.mono, b.comp)
    }
}

impl fmt::Debug for ModuleOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.is_schreyer() { "schreyer" } else { "top" };
        write!(f, "ModuleOrder({kind}, {:?})", self.0.twists)
    }
}

/// A sparse element of a free module, terms strictly descending in the order
/// it was built with. Rank-one elements are polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FreeModuleElement {
    terms: Vec<ModTerm>,
}

impl FreeModuleElement {
    pub fn zero() -> Self {
        FreeModuleElement { terms: Vec::new() }
    }

    pub fn from_terms(order: &ModuleOrder, mut terms: Vec<ModTerm>) -> Self {
        terms.sort_by(|a, b| order.compare_terms(b, a));
        let mut out: Vec<ModTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono && last.comp == t.comp => {
                    last.coef = last.coef.add(&t.coef)
                }
                _ => {
                    if out.last().is_some_and(|l| l.coef.is_zero()) {
                        out.pop();
                    }
                    out.push(t);
                }
            }
        }
        if out.last().is_some_and(|l| l.coef.is_zero()) {
            out.pop();
        }
        FreeModuleElement { terms: out }
    }

    pub(crate) fn from_sorted(terms: Vec<ModTerm>) -> Self {
        FreeModuleElement { terms }
    }

    pub fn from_polynomial(order: &ModuleOrder, p: &Polynomial, comp: usize) -> Self {
        let terms = p
            .terms()
            .iter()
            .map(|(c, m)| ModTerm { coef: c.clone(), mono: *m, comp })
            .collect();
        Self::from_terms(order, terms)
    }

    /// From a dense vector of polynomials, one per component.
    pub fn from_dense(order: &ModuleOrder, entries: &[Polynomial]) -> Self {
        let mut terms = Vec::new();
        for (comp, p) in entries.iter().enumerate() {
            terms.extend(p.terms().iter().map(|(c, m)| ModTerm { coef: c.clone(), mono: *m, comp }));
        }
        Self::from_terms(order, terms)
    }

    pub fn basis_vector(order: &ModuleOrder, comp: usize) -> Self {
        let one = order.ring().field().one();
        FreeModuleElement { terms: vec![ModTerm { coef: one, mono: Monomial::ONE, comp }] }
    }

    pub fn terms(&self) -> &[ModTerm] {
        &self.terms
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

    pub fn lead(&self) -> Option<&ModTerm> {
        self.terms.first()
    }

    /// Entry `comp` as a polynomial.
    pub fn component(&self, ring: &GradedRing, comp: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.comp == comp)
            .map(|t| (t.coef.clone(), t.mono))
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    pub fn to_dense(&self, ring: &GradedRing, rank: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(FieldScalar, Monomial)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.comp].push((t.coef.clone(), t.mono));
        }
        buckets.into_iter().map(|b| Polynomial::from_terms(ring, b)).collect()
    }

    pub fn to_polynomial(&self, ring: &GradedRing) -> Polynomial {
        self.component(ring, 0)
    }

    fn merge(&self, order: &ModuleOrder, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let flip = |c: &FieldScalar| if negate { c.neg() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.compare_terms(&a[i], &b[j]) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(ModTerm { coef: flip(&b[j].coef), ..b[j].clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { a[i].coef.sub(&b[j].coef) } else { a[i].coef.add(&b[j].coef) };
                    if !c.is_zero() {
                        out.push(ModTerm { coef: c, mono: a[i].mono, comp: a[i].comp });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            out.push(ModTerm { coef: flip(&t.coef), ..t.clone() });
        }
        FreeModuleElement { terms: out }
    }

    pub fn add(&self, order: &ModuleOrder, other: &Self) -> Self {
        self.merge(order, other, false)
    }

    pub fn sub(&self, order: &ModuleOrder, other: &Self) -> Self {
        self.merge(order, other, true)
    }

    pub fn neg(&self) -> Self {
        FreeModuleElement {
            terms: self.terms.iter().map(|t| ModTerm { coef: t.coef.neg(), ..t.clone() }).collect(),
        }
    }

    pub fn scale(&self, c: &FieldScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FreeModuleElement {
            terms: self.terms.iter().map(|t| ModTerm { coef: t.coef.mul(c), ..t.clone() }).collect(),
        }
    }

    /// `c * m * self`. Module orders are multiplicative, so no re-sorting.
    pub fn mul_term(&self, c: &FieldScalar, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FreeModuleElement {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm { coef: t.coef.mul(c), mono: t.mono.mul(m), comp: t.comp })
                .collect(),
        }
    }

    pub fn mul_poly(&self, order: &ModuleOrder, p: &Polynomial) -> Self {
        let mut acc = Self::zero();
        for (c, m) in p.terms() {
            acc = acc.add(order, &self.mul_term(c, m));
        }
        acc
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(t) if t.coef.is_one() => self.clone(),
            Some(t) => self.scale(&t.coef.inv()),
        }
    }

    /// The common multidegree of all terms, twists included.
    pub fn degree(&self, order: &ModuleOrder) -> Result<DegreeVector> {
        let mut it = self.terms.iter();
        let first = it.next().ok_or(Error::ZeroPolynomial)?;
        let d = order.term_degree(&first.mono, first.comp);
        for t in it {
            let e = order.term_degree(&t.mono, t.comp);
            if e != d {
                return Err(Error::Inhomogeneous(d, e));
            }
        }
        Ok(d)
    }

    pub fn is_homogeneous(&self, order: &ModuleOrder) -> bool {
        self.is_zero() || self.degree(order).is_ok()
    }

    /// Largest weighted degree of a term.
    pub fn sugar(&self, order: &ModuleOrder) -> i64 {
        self.terms.iter().map(|t| order.term_weight(&t.mono, t.comp)).max().unwrap_or(0)
    }

    /// Re-sort under another order on the same module.
    pub fn reorder(&self, order: &ModuleOrder) -> Self {
        Self::from_terms(order, self.terms.clone())
    }

    /// Human-readable form: the polynomial for rank one, a bracketed vector otherwise.
    pub fn format(&self, ring: &GradedRing, rank: usize) -> String {
        if rank == 1 {
            return self.to_polynomial(ring).to_string();
        }
        let parts: Vec<String> = self.to_dense(ring, rank).iter().map(|p| p.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    #[test]
    fn top_order_breaks_ties_by_lower_index() {
        let r = GradedRing::projective(2);
        let o = ModuleOrder::term_over_position(&r, vec![DegreeVector::single(0); 2]).unwrap();
        let x = Monomial::var(0);
        assert_eq!(o.compare(&x, 0, &x, 1), Ordering::Greater);
        assert_eq!(o.compare(&x.mul(&x), 1, &x, 0), Ordering::Greater);
    }

    #[test]
    fn dense_round_trip_and_degree() {
        let r = GradedRing::projective(2);
        let o = ModuleOrder::term_over_position(
            &r,
            vec![DegreeVector::single(1), DegreeVector::single(2)],
        )
        .unwrap();
        let v = vec![
            parse_polynomial("x0^2 + x1^2", &r).unwrap(),
            parse_polynomial("x0 - x1", &r).unwrap(),
        ];
        let e = FreeModuleElement::from_dense(&o, &v);
        assert_eq!(e.to_dense(&r, 2), v);
        assert_eq!(e.degree(&o).unwrap(), DegreeVector::single(3));
        assert!(e.sub(&o, &e).is_zero());
    }
}
