use std::collections::BTreeMap;

use super::{Echelon, Ideal};
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger_with, normal_form, EngineOptions, FreeModuleElement, GroebnerBasis, ModuleOrder,
};
use crate::polyring::{monomials_of_weight, DegreeVector, Polynomial};

/// Minimal generator counts per degree and one minimal generating subset of
/// the given generators.
#[derive(Clone, Debug)]
pub struct MinGenerators {
    pub by_degree: Vec<(DegreeVector, usize)>,
    pub generators: Vec<Polynomial>,
}

impl MinGenerators {
    pub fn count(&self) -> usize {
        self.by_degree.iter().map(|(_, c)| c).sum()
    }
}

impl Ideal {
    /// Minimal generators. Counts come from linear algebra on
    /// `(I / mI)_d = I_d / (gens of lower degree)_d`; the subset comes from the
    /// engine's minimal-input detection, and the two must agree.
    pub fn min_generators(&self) -> Result<MinGenerators> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("the zero ideal has no generators".into()));
        }
        let mo = ModuleOrder::ideal(&self.ring);
        let elems: Vec<FreeModuleElement> =
            self.gens.iter().map(|g| FreeModuleElement::from_polynomial(&mo, g, 0)).collect();
        let out = buchberger_with(&elems, &mo, EngineOptions::default())?;
        let generators: Vec<Polynomial> =
            out.minimal_inputs.iter().map(|&k| self.gens[k].clone()).collect();

        let degs: Vec<DegreeVector> =
            self.gens.iter().map(|g| g.multidegree()).collect::<Result<_>>()?;
        let mut counts: BTreeMap<DegreeVector, usize> = BTreeMap::new();
        let mut distinct = degs.clone();
        distinct.sort_by_key(|d| (d.total(), *d));
        distinct.dedup();
        for d in distinct {
            let lower: Vec<FreeModuleElement> = elems
                .iter()
                .zip(&degs)
                .filter(|(_, e)| e.total() < d.total())
                .map(|(f, _)| f.clone())
                .collect();
            let opts = EngineOptions { degree_bound: Some(d.total()), ..Default::default() };
            let trunc = buchberger_with(&lower, &mo, opts)?;
            let gb = GroebnerBasis::from_elements(&mo, trunc.basis);
            let mut ech = Echelon::new();
            for (f, e) in elems.iter().zip(&degs) {
                if *e == d {
                    ech.insert(normal_form(f, &gb)?.to_polynomial(&self.ring));
                }
            }
            if ech.rank() > 0 {
                counts.insert(d, ech.rank());
            }
        }

        let mut subset_counts: BTreeMap<DegreeVector, usize> = BTreeMap::new();
        for g in &generators {
            *subset_counts.entry(g.multidegree()?).or_insert(0) += 1;
        }
        if subset_counts != counts {
            return Err(Error::InvariantViolation(format!(
                "minimal generator counts disagree: {counts:?} vs {subset_counts:?}"
            )));
        }
        let mut by_degree: Vec<(DegreeVector, usize)> = counts.into_iter().collect();
        by_degree.sort_by_key(|(d, _)| (d.total(), *d));
        Ok(MinGenerators { by_degree, generators })
    }

    /// Number of minimal generators.
    pub fn mu(&self) -> Result<usize> {
        Ok(self.min_generators()?.count())
    }

    /// A basis of `I_d`: for each monomial of degree `d` in the lead ideal,
    /// the monomial multiple of the first basis element dividing it.
    pub fn degree_part_basis(&self, d: DegreeVector) -> Vec<Polynomial> {
        let gb = self.gb_polys();
        let weights = self.ring.weights();
        let mut out = Vec::new();
        if d.total() < 0 {
            return out;
        }
        for m in monomials_of_weight(weights, d.total() as u32) {
            if self.ring.monomial_degree(&m) != d {
                continue;
            }
            if let Some(g) = gb.iter().find(|g| g.leading_monomial().expect("nonzero").divides(&m)) {
                let q = m.div(g.leading_monomial().expect("nonzero")).expect("divides");
                out.push(g.mul_term(&self.ring.field().one(), &q));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::GradedRing;

    #[test]
    fn redundant_generator_dropped() {
        let r = GradedRing::projective(2);
        let i = Ideal::parse(&r, "x0^2, x0*x1, x1^2, x0^2 + x1^2").unwrap();
        let mg = i.min_generators().unwrap();
        assert_eq!(mg.by_degree, vec![(DegreeVector::single(2), 3)]);
        assert_eq!(mg.generators.len(), 3);
    }

    #[test]
    fn lower_degree_multiples_are_not_generators() {
        let r = GradedRing::projective(3);
        let i = Ideal::parse(&r, "x0*x1, x0^2*x2, x1^3, x0*x1*x2 + x1^3").unwrap();
        let mg = i.min_generators().unwrap();
        assert_eq!(mg.count(), 3);
        assert_eq!(
            mg.by_degree,
            vec![(DegreeVector::single(2), 1), (DegreeVector::single(3), 2)]
        );
    }

    #[test]
    fn degree_part_dimensions_match_hilbert_series() {
        let r = GradedRing::projective(3);
        let i = Ideal::parse(&r, "x0^2 - x1*x2, x1^3").unwrap();
        let h = i.hilbert_series();
        for d in 0..7 {
            let dv = DegreeVector::single(d);
            let total = crate::ideals::count_monomials(r.var_degrees(), dv);
            let basis = i.degree_part_basis(dv);
            let mut ech = Echelon::new();
            for b in &basis {
                ech.insert(b.clone());
            }
            assert_eq!(ech.rank() as i64, total - h.value(dv));
        }
    }
}
