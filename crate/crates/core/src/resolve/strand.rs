use std::collections::HashMap;

use serde::Serialize;

use super::complex::ChainComplex;
use super::free::{FreeModule, ModuleMap};
use super::resolution::is_acm;
use crate::error::{Error, Result};
use crate::groebner::{generator_syzygies, FreeModuleElement, ModuleOrder};
use crate::ideals::{Certainty, Ideal};
use crate::polyring::{DegreeVector, GradedRing, Polynomial};

/// A presentation `φ: F -> G` of an ideal: the columns of `φ` are syzygies of
/// the generators matched to the basis of `G`.
#[derive(Clone, Debug)]
pub struct Presentation {
    phi: ModuleMap,
    generators: Vec<Polynomial>,
}

impl Presentation {
    pub fn new(phi: ModuleMap, generators: Vec<Polynomial>) -> Result<Self> {
        if phi.rows() != generators.len() {
            return Err(Error::ModuleMismatch("one row per generator is required".into()));
        }
        for (i, f) in generators.iter().enumerate() {
            if f.multidegree()? != phi.target().twists()[i] {
                return Err(Error::ModuleMismatch(format!(
                    "generator {i} does not match its twist"
                )));
            }
        }
        let ring = phi.ring().clone();
        for j in 0..phi.cols() {
            let mut acc = Polynomial::zero(&ring);
            for (i, f) in generators.iter().enumerate() {
                acc = acc.add(&phi.entry(i, j).mul(f));
            }
            if !acc.is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "column {j} is not a syzygy of the generators"
                )));
            }
        }
        Ok(Presentation { phi, generators })
    }

    /// Minimal generators and minimal first syzygies of `ideal`.
    pub fn from_ideal(ideal: &Ideal) -> Result<Self> {
        let ring = ideal.ring();
        let order = ModuleOrder::ideal(ring);
        let inputs: Vec<FreeModuleElement> = ideal
            .generators()
            .iter()
            .map(|g| FreeModuleElement::from_polynomial(&order, g, 0))
            .collect();
        let s0 = generator_syzygies(&inputs, &order)?;
        let gens: Vec<Polynomial> = s0.kept.iter().map(|&k| ideal.generators()[k].clone()).collect();
        let s1 = generator_syzygies(&s0.relations, &s0.relation_order)?;
        let cols: Vec<Vec<Polynomial>> =
            s1.kept.iter().map(|&k| s0.relations[k].to_dense(ring, gens.len())).collect();
        let entries = (0..gens.len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        let phi = ModuleMap::new(
            ring,
            FreeModule::new(s1.kept_degrees.clone()),
            FreeModule::new(s0.kept_degrees.clone()),
            entries,
        )?;
        Presentation::new(phi, gens)
    }

    pub fn phi(&self) -> &ModuleMap {
        &self.phi
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn ring(&self) -> &GradedRing {
        self.phi.ring()
    }

    /// Twists of `G`, one per generator.
    pub fn g_twists(&self) -> &[DegreeVector] {
        self.phi.target().twists()
    }

    /// Twists of `F`, one per relation.
    pub fn f_twists(&self) -> &[DegreeVector] {
        self.phi.source().twists()
    }

    pub fn ideal(&self) -> Result<Ideal> {
        Ideal::new(self.ring(), self.generators.clone())
    }
}

/// Increasing `a`-subsets of `0..s` in lexicographic order.
fn subsets(s: usize, a: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, s: usize, a: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == a {
            out.push(cur.clone());
            return;
        }
        for j in start..s {
            cur.push(j);
            rec(j + 1, s, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, s, a, &mut Vec::new(), &mut out);
    out
}

/// Exponent vectors of degree `b` in `d` variables, lexicographically
/// descending (`g_1^b` first).
fn sym_monomials(d: usize, b: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, d: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == d {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(i + 1, d, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        rec(0, d, b, &mut Vec::new(), &mut out);
    }
    out
}

/// The strand complex `0 -> Λ^a F ⊗ Sym^{m-a} G -> ... -> Sym^m G -> R`,
/// augmented to `I^m` by `g^β -> Π f_i^{β_i}`. Index `i >= 1` holds
/// `Λ^{i-1} F ⊗ Sym^{m-i+1} G`.
pub fn power_complex(p: &Presentation, m: u32) -> Result<ChainComplex> {
    if m == 0 {
        return Err(Error::InvalidArgument("power exponent must be positive".into()));
    }
    if let Some((i, j)) = p.phi.first_unit() {
        return Err(Error::InvalidArgument(format!(
            "presentation is not minimal: entry ({i},{j}) is a unit"
        )));
    }
    let ring = p.ring().clone();
    let d = p.generators.len();
    let s = p.phi.cols();
    let top = (m as usize).min(s);
    let tf = p.f_twists();
    let tg = p.g_twists();

    type Basis = Vec<(Vec<usize>, Vec<u32>)>;
    let mut bases: Vec<Basis> = Vec::new();
    let mut modules: Vec<FreeModule> = Vec::new();
    for a in 0..=top {
        let mut basis = Vec::new();
        let mut twists = Vec::new();
        for j in subsets(s, a) {
            for beta in sym_monomials(d, m - a as u32) {
                let mut t = DegreeVector::zero(ring.arity());
                for &k in &j {
                    t = t + tf[k];
                }
                for (i, &e) in beta.iter().enumerate() {
                    t = t + tg[i].scale(e as i64);
                }
                twists.push(t);
                basis.push((j.clone(), beta));
            }
        }
        bases.push(basis);
        modules.push(FreeModule::new(twists));
    }

    let mut maps = Vec::with_capacity(top + 1);
    let aug_row: Vec<Polynomial> = bases[0]
        .iter()
        .map(|(_, beta)| {
            let mut prod = Polynomial::one(&ring);
            for (i, &e) in beta.iter().enumerate() {
                if e > 0 {
                    prod = prod.mul(&p.generators[i].pow(e));
                }
            }
            prod
        })
        .collect();
    let target_ideal = Ideal::new(&ring, aug_row.clone())?;
    maps.push(ModuleMap::new(
        &ring,
        modules[0].clone(),
        FreeModule::ring_module(&ring),
        vec![aug_row],
    )?);

    let field = ring.field();
    for a in 1..=top {
        let index: HashMap<&(Vec<usize>, Vec<u32>), usize> =
            bases[a - 1].iter().enumerate().map(|(k, b)| (b, k)).collect();
        let zero = Polynomial::zero(&ring);
        let mut entries = vec![vec![zero; bases[a].len()]; bases[a - 1].len()];
        for (col, (j, beta)) in bases[a].iter().enumerate() {
            for (k, &jk) in j.iter().enumerate() {
                let sign = if k % 2 == 0 { field.one() } else { field.one().neg() };
                let mut rest = j.clone();
                rest.remove(k);
                for i in 0..d {
                    let phi = p.phi.entry(i, jk);
                    if phi.is_zero() {
                        continue;
                    }
                    let mut b2 = beta.clone();
                    b2[i] += 1;
                    let row = index[&(rest.clone(), b2)];
                    entries[row][col] = entries[row][col].add(&phi.scale(&sign));
                }
            }
        }
        maps.push(ModuleMap::new(&ring, modules[a].clone(), modules[a - 1].clone(), entries)?);
    }
    let complex = ChainComplex::new(&ring, maps, Some(target_ideal))?;
    if !complex.d_squared_zero()? {
        return Err(Error::InvariantViolation("strand complex has d∘d ≠ 0".into()));
    }
    if !complex.is_minimal() {
        return Err(Error::InvariantViolation("strand complex is not minimal".into()));
    }
    Ok(complex)
}

/// Hypotheses under which the strand complex resolves `I^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerHypotheses {
    /// Projective dimension of the ambient space.
    pub n: usize,
    pub m: u32,
    pub mu: usize,
    pub codimension: usize,
    pub codim_two: bool,
    pub acm: bool,
    pub lci: Certainty,
    /// Caller-asserted generic complete intersection (only relevant for `m = 2`).
    pub generic_ci_asserted: bool,
    pub inequality: bool,
}

impl PowerHypotheses {
    pub fn passes(&self) -> bool {
        let local = self.lci.holds() || (self.m == 2 && self.generic_ci_asserted);
        self.codim_two && self.acm && local && self.inequality
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.codim_two {
            out.push("codimension is not 2");
        }
        if !self.acm {
            out.push("not ACM");
        }
        if !(self.lci.holds() || (self.m == 2 && self.generic_ci_asserted)) {
            out.push("LCI not established");
        }
        if !self.inequality {
            out.push("min(mu - 1, m) > n");
        }
        out
    }
}

/// Check codimension two, ACM, the LCI tag and `min(μ - 1, m) ≤ n`.
pub fn power_resolution_hypotheses(ideal: &Ideal, m: u32, generic_ci_asserted: bool) -> Result<PowerHypotheses> {
    let n = ideal.ring().nvars() - 1;
    let codimension = ideal.codimension()?;
    let mu = ideal.mu()?;
    let acm = codimension == 2 && is_acm(ideal)?;
    Ok(PowerHypotheses {
        n,
        m,
        mu,
        codimension,
        codim_two: codimension == 2,
        acm,
        lci: ideal.tags().lci,
        generic_ci_asserted,
        inequality: (mu.saturating_sub(1)).min(m as usize) <= n,
    })
}

/// The strand complex of `I^m` after checking the hypotheses that make it a
/// minimal resolution; refuses otherwise.
pub fn strand_resolution(ideal: &Ideal, m: u32, generic_ci_asserted: bool) -> Result<ChainComplex> {
    let report = power_resolution_hypotheses(ideal, m, generic_ci_asserted)?;
    if !report.passes() {
        return Err(Error::Refused(format!(
            "strand complex is not a resolution here: {}",
            report.failures().join(", ")
        )));
    }
    power_complex(&Presentation::from_ideal(ideal)?, m)
}

/// `C(d-1, i-1) * C(d+m-i, d-1)`, the rank at index `i` of the strand complex.
pub fn predicted_power_betti(d: u64, m: u64, i: u64) -> u64 {
    if i == 0 || d == 0 || i > d || i > m + 1 {
        return 0;
    }
    binomial(d - 1, i - 1) * binomial(d + m - i, d - 1)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for j in 0..k {
        r = r * (n - j) / (j + 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_orders() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(
            sym_monomials(2, 2),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        assert_eq!(sym_monomials(3, 2).len(), 6);
    }

    #[test]
    fn binomial_ranks() {
        assert_eq!((1..=3).map(|i| predicted_power_betti(3, 2, i)).collect::<Vec<_>>(), vec![6, 6, 1]);
        for d in 2..6 {
            assert_eq!(predicted_power_betti(d, 1, 1), d);
            assert_eq!(predicted_power_betti(d, 1, 2), d - 1);
        }
    }
}
