use std::cmp::Ordering;

use super::module::{FreeModuleElement, ModTerm, ModuleOrder};
use crate::error::{Error, Result};
use crate::polyring::{FieldScalar, Monomial, Polynomial};

/// One division step: `coef * mono * basis[k]` was subtracted.
#[derive(Clone, Debug)]
pub(crate) struct Step {
    pub k: usize,
    pub coef: FieldScalar,
    pub mono: Monomial,
}

struct Lead {
    mono: Monomial,
    comp: usize,
    mask: u64,
    inv: FieldScalar,
    active: bool,
}

/// Leading-term index over a list of basis elements; divisors are tried in
/// list order.
#[derive(Default)]
pub(crate) struct Reducers {
    leads: Vec<Lead>,
}

impl Reducers {
    pub fn new(basis: &[FreeModuleElement]) -> Self {
        let mut r = Reducers::default();
        for g in basis {
            r.push(g);
        }
        r
    }

    pub fn push(&mut self, g: &FreeModuleElement) {
        let t = g.lead().expect("zero basis element");
        self.leads.push(Lead {
            mono: t.mono,
            comp: t.comp,
            mask: t.mono.divmask(),
            inv: t.coef.inv(),
            active: true,
        });
    }

    pub fn set_active(&mut self, k: usize, active: bool) {
        self.leads[k].active = active;
    }

    #[inline]
    fn find(&self, t: &ModTerm) -> Option<usize> {
        let mask = !t.mono.divmask();
        self.leads.iter().position(|l| {
            l.active && l.comp == t.comp && l.mask & mask == 0 && l.mono.divides(&t.mono)
        })
    }
}

/// `a - c * q * b`, both slices sorted descending.
fn sub_mul(
    order: &ModuleOrder,
    a: &[ModTerm],
    c: &FieldScalar,
    q: &Monomial,
    b: &[ModTerm],
) -> Vec<ModTerm> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj: Option<Monomial> = b.first().map(|t| t.mono.mul(q));
    while i < a.len() {
        let Some(bm) = bj else { break };
        match order.compare(&a[i].mono, a[i].comp, &bm, b[j].comp) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(ModTerm { coef: b[j].coef.mul(c).neg(), mono: bm, comp: b[j].comp });
                j += 1;
                bj = b.get(j).map(|t| t.mono.mul(q));
            }
            Ordering::Equal => {
                let v = a[i].coef.sub_mul(c, &b[j].coef);
                if !v.is_zero() {
                    out.push(ModTerm { coef: v, mono: bm, comp: b[j].comp });
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|t| t.mono.mul(q));
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        out.push(ModTerm { coef: t.coef.mul(c).neg(), mono: t.mono.mul(q), comp: t.comp });
    }
    out
}

/// Full reduction of `f` by the active reducers. Division steps are appended
/// to `steps` when given.
pub(crate) fn reduce(
    f: &FreeModuleElement,
    order: &ModuleOrder,
    basis: &[FreeModuleElement],
    reducers: &Reducers,
    mut steps: Option<&mut Vec<Step>>,
) -> FreeModuleElement {
    let mut p: Vec<ModTerm> = f.terms().to_vec();
    let mut rem: Vec<ModTerm> = Vec::new();
    let mut pos = 0;
    while pos < p.len() {
        match reducers.find(&p[pos]) {
            Some(k) => {
                let lead = &reducers.leads[k];
                let q = p[pos].mono.div(&lead.mono).expect("divisor");
                let c = p[pos].coef.mul(&lead.inv);
                p = sub_mul(order, &p[pos + 1..], &c, &q, &basis[k].terms()[1..]);
                pos = 0;
                if let Some(s) = steps.as_deref_mut() {
                    s.push(Step { k, coef: c, mono: q });
                }
            }
            None => {
                rem.push(p[pos].clone());
                pos += 1;
            }
        }
    }
    FreeModuleElement::from_sorted(rem)
}

/// A Groebner basis of a submodule of a free module (an ideal when the rank is one).
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: ModuleOrder,
    elements: Vec<FreeModuleElement>,
    reduced: bool,
}

impl GroebnerBasis {
    pub(crate) fn new(order: ModuleOrder, elements: Vec<FreeModuleElement>, reduced: bool) -> Self {
        GroebnerBasis { order, elements, reduced }
    }

    /// Wrap elements the caller asserts to be a Groebner basis.
    pub fn from_elements(order: &ModuleOrder, elements: Vec<FreeModuleElement>) -> Self {
        let elements = elements.into_iter().filter(|e| !e.is_zero()).collect();
        GroebnerBasis { order: order.clone(), elements, reduced: false }
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn elements(&self) -> &[FreeModuleElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Rank-one view.
    pub fn polynomials(&self) -> Vec<Polynomial> {
        let ring = self.order.ring();
        self.elements.iter().map(|e| e.to_polynomial(ring)).collect()
    }

    pub fn lead_terms(&self) -> Vec<(Monomial, usize)> {
        self.elements.iter().map(|e| e.lead().map(|t| (t.mono, t.comp)).expect("nonzero")).collect()
    }

    /// The unit ideal or the whole free module.
    pub fn is_everything(&self) -> bool {
        let mut comps: Vec<usize> = self
            .elements
            .iter()
            .filter_map(|e| e.lead())
            .filter(|t| t.mono.is_one())
            .map(|t| t.comp)
            .collect();
        comps.sort_unstable();
        comps.dedup();
        comps.len() == self.order.rank()
    }
}

/// Remainder of `f` on division by `gb`; divisors are tried in basis order.
pub fn normal_form(f: &FreeModuleElement, gb: &GroebnerBasis) -> Result<FreeModuleElement> {
    if let Some(t) = f.terms().iter().find(|t| t.comp >= gb.order.rank()) {
        return Err(Error::ModuleMismatch(format!(
            "component {} outside a module of rank {}",
            t.comp,
            gb.order.rank()
        )));
    }
    let f = f.reorder(&gb.order);
    let reducers = Reducers::new(&gb.elements);
    Ok(reduce(&f, &gb.order, &gb.elements, &reducers, None))
}

/// Remainder of a polynomial on division by a rank-one basis.
pub fn normal_form_poly(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if gb.order.rank() != 1 {
        return Err(Error::ModuleMismatch("expected a rank-one basis".into()));
    }
    if f.ring() != gb.order.ring() {
        return Err(Error::RingMismatch);
    }
    let e = FreeModuleElement::from_polynomial(&gb.order, f, 0);
    Ok(normal_form(&e, gb)?.to_polynomial(gb.order.ring()))
}
