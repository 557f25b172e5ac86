use super::engine::{run, EngineOptions};
use super::module::{FreeModuleElement, ModTerm, ModuleOrder};
use super::reduce::{reduce, GroebnerBasis, Reducers, Step};
use crate::error::{Error, Result};
use crate::polyring::{DegreeVector, Monomial};

/// Schreyer syzygies of a Groebner basis.
///
/// For `i < j` with leading terms in the same component, the S-pair relation
/// `(L/LT_i) e_i - (L/LT_j) e_j - sum q_k e_k` is emitted for those `j` whose
/// quotient `L/LT_i` is a minimal generator among all such quotients at `i`.
/// The result is a Groebner basis of the syzygy module for the returned
/// Schreyer order.
pub fn syzygies(gb: &GroebnerBasis) -> Result<(ModuleOrder, Vec<FreeModuleElement>)> {
    let order = gb.order();
    let elems = gb.elements();
    let schreyer = ModuleOrder::schreyer(order, elems)?;
    let reducers = Reducers::new(elems);
    let leads: Vec<&ModTerm> = elems.iter().map(|e| e.lead().expect("nonzero")).collect();
    let mut out = Vec::new();
    let mut steps: Vec<Step> = Vec::new();
    for i in 0..elems.len() {
        let cand: Vec<(usize, Monomial, Monomial)> = (i + 1..elems.len())
            .filter(|&j| leads[j].comp == leads[i].comp)
            .map(|j| {
                let l = leads[i].mono.lcm(&leads[j].mono);
                (j, l, l.div(&leads[i].mono).expect("lcm"))
            })
            .collect();
        for (a, (j, l, q)) in cand.iter().enumerate() {
            let dominated = cand.iter().enumerate().any(|(b, (_, _, r))| {
                b != a && r.divides(q) && (r != q || b < a)
            });
            if dominated {
                continue;
            }
            let qj = l.div(&leads[*j].mono).expect("lcm");
            let ci = leads[i].coef.inv();
            let cj = leads[*j].coef.inv();
            let s = elems[i].mul_term(&ci, q).sub(order, &elems[*j].mul_term(&cj, &qj));
            steps.clear();
            let r = reduce(&s, order, elems, &reducers, Some(&mut steps));
            if !r.is_zero() {
                return Err(Error::NotGroebnerBasis(i, *j));
            }
            let mut terms = vec![
                ModTerm { coef: ci, mono: *q, comp: i },
                ModTerm { coef: cj.neg(), mono: qj, comp: *j },
            ];
            for st in &steps {
                terms.push(ModTerm { coef: st.coef.neg(), mono: st.mono, comp: st.k });
            }
            out.push(FreeModuleElement::from_terms(&schreyer, terms));
        }
    }
    Ok((schreyer, out))
}

/// Minimal generators of a homogeneous submodule and the relations among them.
pub struct GeneratorSyzygies {
    /// Indices of the inputs kept as a minimal generating set, ascending.
    pub kept: Vec<usize>,
    /// Degrees of the kept inputs.
    pub kept_degrees: Vec<DegreeVector>,
    /// Generators of the relation module, in a free module with one component
    /// per kept input (ordered as `kept`).
    pub relations: Vec<FreeModuleElement>,
    /// Term-over-position order on that free module.
    pub relation_order: ModuleOrder,
    /// A Groebner basis of the submodule.
    pub basis: GroebnerBasis,
}

/// Pick a minimal generating subset of homogeneous `inputs` and compute a
/// generating set of the syzygies among the chosen generators.
///
/// With `g = h C` the basis in terms of the kept inputs and `h = g D` the
/// division of each kept input by the basis, the syzygies of `h` are generated
/// by `C syz(g)` together with the columns of `1 - C D`.
pub fn generator_syzygies(
    inputs: &[FreeModuleElement],
    order: &ModuleOrder,
) -> Result<GeneratorSyzygies> {
    for f in inputs {
        f.degree(order)?;
    }
    let out = run(
        inputs,
        order,
        EngineOptions { track_cofactors: true, interreduce: false, degree_bound: None },
    )?;
    let kept = out.minimal_inputs.clone();
    let mut slot = vec![usize::MAX; inputs.len()];
    for (s, &k) in kept.iter().enumerate() {
        slot[k] = s;
    }
    let kept_degrees: Vec<DegreeVector> =
        kept.iter().map(|&k| inputs[k].degree(order).expect("homogeneous")).collect();
    let rel_order = ModuleOrder::term_over_position(order.ring(), kept_degrees.clone())?;

    // Cofactor rows, re-indexed onto the kept inputs.
    let cof: Vec<Vec<ModTerm>> = out
        .cofactors
        .iter()
        .map(|c| {
            c.terms()
                .iter()
                .map(|t| {
                    debug_assert!(slot[t.comp] != usize::MAX, "cofactor uses a dropped input");
                    ModTerm { comp: slot[t.comp], ..t.clone() }
                })
                .collect()
        })
        .collect();
    let expand = |pieces: &[(usize, crate::polyring::FieldScalar, Monomial)], base: Vec<ModTerm>| {
        let mut terms = base;
        for (k, c, m) in pieces {
            for t in &cof[*k] {
                terms.push(ModTerm { coef: t.coef.mul(c), mono: t.mono.mul(m), comp: t.comp });
            }
        }
        FreeModuleElement::from_terms(&rel_order, terms)
    };

    let gb = GroebnerBasis::new(order.clone(), out.basis, false);
    let (_, syz) = syzygies(&gb)?;
    let mut relations = Vec::new();
    for s in &syz {
        let pieces: Vec<_> = s.terms().iter().map(|t| (t.comp, t.coef.clone(), t.mono)).collect();
        let v = expand(&pieces, Vec::new());
        if !v.is_zero() {
            relations.push(v);
        }
    }
    let reducers = Reducers::new(gb.elements());
    let mut steps = Vec::new();
    let one = order.ring().field().one();
    for (s, &k) in kept.iter().enumerate() {
        steps.clear();
        let r = reduce(&inputs[k], order, gb.elements(), &reducers, Some(&mut steps));
        if !r.is_zero() {
            return Err(Error::InvariantViolation("input not in its own submodule".into()));
        }
        let pieces: Vec<_> = steps.iter().map(|st| (st.k, st.coef.neg(), st.mono)).collect();
        let base = vec![ModTerm { coef: one.clone(), mono: Monomial::ONE, comp: s }];
        let v = expand(&pieces, base);
        if !v.is_zero() {
            relations.push(v);
        }
    }
    Ok(GeneratorSyzygies { kept, kept_degrees, relations, relation_order: rel_order, basis: gb })
}
