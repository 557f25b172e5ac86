//! Buchberger's algorithm with the sugar strategy and the Gebauer-Moeller
//! criteria, optionally tracking how every basis element is built from the
//! inputs.

use super::module::{FreeModuleElement, ModTerm, ModuleOrder};
use super::reduce::{reduce, GroebnerBasis, Reducers, Step};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial};

#[derive(Clone, Copy, Debug, Default)]
pub struct EngineOptions {
    /// Express every basis element in terms of the inputs.
    pub track_cofactors: bool,
    /// Minimalize, tail-reduce and sort the result.
    pub interreduce: bool,
    /// Stop before any pair or input of larger sugar.
    pub degree_bound: Option<i64>,
}

pub struct EngineOutput {
    pub basis: Vec<FreeModuleElement>,
    /// Row `k` writes `basis[k]` as a combination of the inputs, as an element
    /// of a free module with one component per input.
    pub cofactors: Vec<FreeModuleElement>,
    pub cofactor_order: ModuleOrder,
    /// Inputs whose normal form was nonzero when they were reached. For
    /// homogeneous input these form a minimal generating set.
    pub minimal_inputs: Vec<usize>,
    pub homogeneous: bool,
    /// False when the degree bound cut the run short.
    pub complete: bool,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: usize,
    sugar: i64,
}

struct State<'a> {
    order: &'a ModuleOrder,
    cof_order: ModuleOrder,
    track: bool,
    basis: Vec<FreeModuleElement>,
    sugars: Vec<i64>,
    redundant: Vec<bool>,
    reducers: Reducers,
    cofs: Vec<FreeModuleElement>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn lead(&self, k: usize) -> &ModTerm {
        self.basis[k].lead().expect("nonzero")
    }

    /// `base - sum coef * mono * cofs[k]` over the recorded steps.
    fn combine_cofactor(&self, base: Vec<ModTerm>, steps: &[Step]) -> FreeModuleElement {
        let mut terms = base;
        for s in steps {
            let neg = s.coef.neg();
            for t in self.cofs[s.k].terms() {
                terms.push(ModTerm { coef: t.coef.mul(&neg), mono: t.mono.mul(&s.mono), comp: t.comp });
            }
        }
        FreeModuleElement::from_terms(&self.cof_order, terms)
    }

    fn insert(&mut self, h: FreeModuleElement, sugar: i64, cof: FreeModuleElement) {
        let inv = h.lead().expect("nonzero").coef.inv();
        let h = h.scale(&inv);
        let cof = if self.track { cof.scale(&inv) } else { cof };
        let t = self.basis.len();
        let (m, comp) = {
            let l = h.lead().expect("nonzero");
            (l.mono, l.comp)
        };
        let rank_one = self.order.rank() == 1;

        // Old pairs made superfluous by the new lead term.
        let lead_lcm = |s: &Self, k: usize| s.lead(k).mono.lcm(&m);
        let mut keep = Vec::with_capacity(self.pairs.len());
        for p in self.pairs.drain(..).collect::<Vec<_>>() {
            let drop = p.comp == comp
                && m.divides(&p.lcm)
                && lead_lcm(self, p.i) != p.lcm
                && lead_lcm(self, p.j) != p.lcm;
            if !drop {
                keep.push(p);
            }
        }
        self.pairs = keep;

        // Candidate pairs with the new element.
        let mut cand: Vec<(usize, Monomial, bool)> = Vec::new();
        for i in 0..t {
            if self.redundant[i] {
                continue;
            }
            let li = self.lead(i);
            if li.comp != comp {
                continue;
            }
            cand.push((i, li.mono.lcm(&m), rank_one && li.mono.is_coprime(&m)));
        }
        // Chain criterion among the new pairs.
        let survivors: Vec<(usize, Monomial, bool)> = cand
            .iter()
            .filter(|(_, l, _)| !cand.iter().any(|(_, k, _)| k != l && k.divides(l)))
            .cloned()
            .collect();
        // One pair per lcm; a coprime pair in the group discards the group.
        let mut groups: Vec<(Monomial, usize, bool)> = Vec::new();
        for (i, l, coprime) in survivors {
            match groups.iter_mut().find(|g| g.0 == l) {
                Some(g) => g.2 |= coprime,
                None => groups.push((l, i, coprime)),
            }
        }
        for (l, i, coprime) in groups {
            if coprime {
                continue;
            }
            let si = self.sugars[i] + self.weight_of_quotient(&l, i);
            let st = sugar + self.weight_of(&l.div(&m).expect("lcm"));
            self.pairs.push(Pair { i, j: t, lcm: l, comp, sugar: si.max(st) });
        }

        for i in 0..t {
            let li = self.lead(i);
            if li.comp == comp && m.divides(&li.mono) {
                self.redundant[i] = true;
            }
        }

        self.reducers.push(&h);
        self.basis.push(h);
        self.sugars.push(sugar);
        self.redundant.push(false);
        if self.track {
            self.cofs.push(cof);
        }
    }

    fn weight_of(&self, m: &Monomial) -> i64 {
        self.order.ring().weighted_degree(m) as i64
    }

    fn weight_of_quotient(&self, l: &Monomial, i: usize) -> i64 {
        self.weight_of(&l.div(&self.lead(i).mono).expect("lcm"))
    }

    fn spoly(&self, p: &Pair) -> (FreeModuleElement, Vec<ModTerm>) {
        let qi = p.lcm.div(&self.lead(p.i).mono).expect("lcm");
        let qj = p.lcm.div(&self.lead(p.j).mono).expect("lcm");
        let one = self.order.ring().field().one();
        let a = self.basis[p.i].mul_term(&one, &qi);
        let b = self.basis[p.j].mul_term(&one, &qj);
        let s = a.sub(self.order, &b);
        let mut cof = Vec::new();
        if self.track {
            let mone = one.neg();
            for t in self.cofs[p.i].terms() {
                cof.push(ModTerm { coef: t.coef.clone(), mono: t.mono.mul(&qi), comp: t.comp });
            }
            for t in self.cofs[p.j].terms() {
                cof.push(ModTerm { coef: t.coef.mul(&mone), mono: t.mono.mul(&qj), comp: t.comp });
            }
        }
        (s, cof)
    }
}

pub(crate) fn run(
    inputs: &[FreeModuleElement],
    order: &ModuleOrder,
    opts: EngineOptions,
) -> Result<EngineOutput> {
    let ring = order.ring();
    let cof_twists = inputs
        .iter()
        .map(|f| f.degree(order).unwrap_or_else(|_| crate::polyring::DegreeVector::zero(ring.arity())))
        .collect();
    let cof_order = ModuleOrder::term_over_position(ring, cof_twists)?;
    let homogeneous = inputs.iter().all(|f| f.is_homogeneous(order));

    let mut queue: Vec<(i64, usize)> = inputs
        .iter()
        .enumerate()
        .filter(|(_, f)| !f.is_zero())
        .map(|(k, f)| (f.sugar(order), k))
        .collect();
    queue.sort();

    let mut st = State {
        order,
        cof_order: cof_order.clone(),
        track: opts.track_cofactors,
        basis: Vec::new(),
        sugars: Vec::new(),
        redundant: Vec::new(),
        reducers: Reducers::default(),
        cofs: Vec::new(),
        pairs: Vec::new(),
    };
    let mut minimal_inputs = Vec::new();
    let mut next_input = 0;
    let mut complete = true;
    let mut steps: Vec<Step> = Vec::new();

    loop {
        let best_pair = st
            .pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.sugar, p.j, p.i))
            .map(|(k, p)| (k, p.sugar));
        let input = queue.get(next_input).copied();
        let take_pair = match (best_pair, input) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some((_, ps)), Some((is, _))) => ps <= is,
        };
        let sugar = if take_pair { best_pair.expect("pair").1 } else { input.expect("input").0 };
        if opts.degree_bound.is_some_and(|b| sugar > b) {
            complete = false;
            break;
        }
        steps.clear();
        let track = opts.track_cofactors.then_some(&mut steps);
        if take_pair {
            let pair = st.pairs.swap_remove(best_pair.expect("pair").0);
            let (s, cof_base) = st.spoly(&pair);
            let h = reduce(&s, order, &st.basis, &st.reducers, track);
            if !h.is_zero() {
                let cof = if st.track {
                    st.combine_cofactor(cof_base, &steps)
                } else {
                    FreeModuleElement::zero()
                };
                st.insert(h, pair.sugar, cof);
            }
        } else {
            let (sugar, k) = input.expect("input");
            next_input += 1;
            let h = reduce(&inputs[k], order, &st.basis, &st.reducers, track);
            if !h.is_zero() {
                minimal_inputs.push(k);
                let cof = if st.track {
                    let base = FreeModuleElement::basis_vector(&cof_order, k).terms().to_vec();
                    st.combine_cofactor(base, &steps)
                } else {
                    FreeModuleElement::zero()
                };
                st.insert(h, sugar, cof);
            }
        }
    }

    let (basis, cofactors) = if opts.interreduce {
        interreduce(&st)
    } else {
        (st.basis, st.cofs)
    };
    minimal_inputs.sort_unstable();
    Ok(EngineOutput { basis, cofactors, cofactor_order: cof_order, minimal_inputs, homogeneous, complete })
}

fn interreduce(st: &State) -> (Vec<FreeModuleElement>, Vec<FreeModuleElement>) {
    let n = st.basis.len();
    let leads: Vec<&ModTerm> = (0..n).map(|k| st.lead(k)).collect();
    let alive: Vec<bool> = (0..n)
        .map(|i| {
            !(0..n).any(|j| {
                j != i
                    && leads[j].comp == leads[i].comp
                    && leads[j].mono.divides(&leads[i].mono)
                    && (leads[j].mono != leads[i].mono || j < i)
            })
        })
        .collect();
    let mut reducers = Reducers::new(&st.basis);
    for (k, &a) in alive.iter().enumerate() {
        reducers.set_active(k, a);
    }
    let mut out: Vec<(FreeModuleElement, FreeModuleElement)> = Vec::new();
    let mut steps = Vec::new();
    for i in (0..n).filter(|&i| alive[i]) {
        reducers.set_active(i, false);
        steps.clear();
        let track = st.track.then_some(&mut steps);
        let g = reduce(&st.basis[i], st.order, &st.basis, &reducers, track);
        reducers.set_active(i, true);
        let inv = g.lead().expect("lead survives").coef.inv();
        let cof = if st.track {
            st.combine_cofactor(st.cofs[i].terms().to_vec(), &steps).scale(&inv)
        } else {
            FreeModuleElement::zero()
        };
        out.push((g.scale(&inv), cof));
    }
    out.sort_by(|a, b| st.order.compare_terms(a.0.lead().expect("nonzero"), b.0.lead().expect("nonzero")));
    out.into_iter().unzip()
}

fn validate(gens: &[FreeModuleElement], order: &ModuleOrder) -> Result<Vec<FreeModuleElement>> {
    gens.iter()
        .map(|g| {
            if let Some(t) = g.terms().iter().find(|t| t.comp >= order.rank()) {
                return Err(Error::ModuleMismatch(format!(
                    "component {} outside a module of rank {}",
                    t.comp,
                    order.rank()
                )));
            }
            Ok(g.reorder(order))
        })
        .collect()
}

/// The reduced Groebner basis of the submodule generated by `gens`.
pub fn buchberger(gens: &[FreeModuleElement], order: &ModuleOrder) -> Result<GroebnerBasis> {
    let gens = validate(gens, order)?;
    let out = run(&gens, order, EngineOptions { interreduce: true, ..Default::default() })?;
    Ok(GroebnerBasis::new(order.clone(), out.basis, true))
}

/// Engine run with explicit options, for callers that need cofactors or
/// minimal-input detection.
pub fn buchberger_with(
    gens: &[FreeModuleElement],
    order: &ModuleOrder,
    opts: EngineOptions,
) -> Result<EngineOutput> {
    let gens = validate(gens, order)?;
    run(&gens, order, opts)
}

/// Reduced Groebner basis of the ideal generated by `polys` under the ring's order.
pub fn groebner_basis(polys: &[Polynomial]) -> Result<GroebnerBasis> {
    let ring = polys.first().ok_or(Error::EmptyInput)?.ring();
    if polys.iter().any(|p| p.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    let order = ModuleOrder::ideal(ring);
    let gens: Vec<FreeModuleElement> =
        polys.iter().map(|p| FreeModuleElement::from_polynomial(&order, p, 0)).collect();
    buchberger(&gens, &order)
}
