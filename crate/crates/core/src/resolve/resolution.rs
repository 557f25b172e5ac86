use super::betti::BettiTable;
use super::complex::ChainComplex;
use super::free::{FreeModule, ModuleMap};
use crate::error::{Error, Result};
use crate::groebner::{generator_syzygies, syzygies, FreeModuleElement, GroebnerBasis, ModuleOrder};
use crate::ideals::Ideal;

/// Minimal graded free resolution of `R/I`.
///
/// Builds the Schreyer frame on the reduced Groebner basis (each level of
/// S-pair syzygies is a Groebner basis for the induced order, so no further
/// completion is needed) and prunes it with `ChainComplex::minimize`.
pub fn minimal_resolution(ideal: &Ideal) -> Result<(ChainComplex, BettiTable)> {
    let mut complex = schreyer_frame(ideal)?;
    complex.minimize();
    let betti = complex.betti();
    Ok((complex, betti))
}

/// The (usually non-minimal) Schreyer resolution of `R/I`.
pub fn schreyer_frame(ideal: &Ideal) -> Result<ChainComplex> {
    let ring = ideal.ring();
    if ideal.is_unit() {
        return Err(Error::InvalidArgument("the unit ideal has no resolution".into()));
    }
    let mut maps: Vec<ModuleMap> = Vec::new();
    let mut gb = ideal.gb();
    let mut target = FreeModule::ring_module(ring);
    while !gb.is_empty() {
        let order = gb.order().clone();
        let twists = gb
            .elements()
            .iter()
            .map(|e| e.degree(&order))
            .collect::<Result<Vec<_>>>()?;
        let source = FreeModule::new(twists);
        let cols: Vec<Vec<_>> = gb.elements().iter().map(|e| e.to_dense(ring, target.rank())).collect();
        let entries = (0..target.rank()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        maps.push(ModuleMap::new(ring, source.clone(), target, entries)?);
        target = source;
        let (next_order, syz) = syzygies(&gb)?;
        gb = GroebnerBasis::from_elements(&next_order, syz);
    }
    ChainComplex::new(ring, maps, Some(ideal.clone()))
}

/// Independent route: at every stage keep a minimal generating set of the
/// kernel and compute the relations among exactly those generators.
pub fn resolution_by_minimal_generators(ideal: &Ideal) -> Result<(ChainComplex, BettiTable)> {
    let ring = ideal.ring();
    if ideal.is_unit() {
        return Err(Error::InvalidArgument("the unit ideal has no resolution".into()));
    }
    let mut maps: Vec<ModuleMap> = Vec::new();
    let mut target = FreeModule::ring_module(ring);
    let mut order = ModuleOrder::ideal(ring);
    let mut inputs: Vec<FreeModuleElement> = ideal
        .generators()
        .iter()
        .map(|g| FreeModuleElement::from_polynomial(&order, g, 0))
        .collect();
    while !inputs.is_empty() {
        let stage = generator_syzygies(&inputs, &order)?;
        let source = FreeModule::new(stage.kept_degrees.clone());
        let cols: Vec<Vec<_>> =
            stage.kept.iter().map(|&k| inputs[k].to_dense(ring, target.rank())).collect();
        let entries = (0..target.rank())
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        maps.push(ModuleMap::new(ring, source.clone(), target, entries)?);
        target = source;
        order = stage.relation_order;
        inputs = stage.relations;
    }
    let mut complex = ChainComplex::new(ring, maps, Some(ideal.clone()))?;
    complex.minimize();
    let betti = complex.betti();
    Ok((complex, betti))
}

/// Projective dimension of `R/I`.
pub fn projective_dimension(ideal: &Ideal) -> Result<usize> {
    Ok(minimal_resolution(ideal)?.1.pdim())
}

/// `R/I` is Cohen-Macaulay: projective dimension equals codimension.
pub fn is_acm(ideal: &Ideal) -> Result<bool> {
    Ok(projective_dimension(ideal)? == ideal.codimension()?)
}

/// `I : m = I`.
pub fn is_saturated(ideal: &Ideal) -> Result<bool> {
    ideal.is_saturated()
}
