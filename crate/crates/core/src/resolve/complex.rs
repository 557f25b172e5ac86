use std::collections::BTreeMap;

use serde::Serialize;

use super::betti::BettiTable;
use super::free::{FreeModule, ModuleMap};
use super::resolution::minimal_resolution;
use crate::error::{Error, Result};
use crate::ideals::{HilbertSeries, Ideal};
use crate::polyring::{DegreeVector, GradedRing, Polynomial};

/// `... -> F_2 -> F_1 -> F_0 = R`, with `maps[i]: F_{i+1} -> F_i`. The first
/// map sends the basis of `F_1` to ideal generators.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ring: GradedRing,
    modules: Vec<FreeModule>,
    maps: Vec<ModuleMap>,
    augmentation: Option<Ideal>,
}

impl ChainComplex {
    pub fn new(ring: &GradedRing, maps: Vec<ModuleMap>, augmentation: Option<Ideal>) -> Result<Self> {
        let mut modules = vec![FreeModule::ring_module(ring)];
        for (i, m) in maps.iter().enumerate() {
            if m.target() != &modules[i] {
                return Err(Error::ModuleMismatch(format!(
                    "map {i} does not land in module {i}"
                )));
            }
            modules.push(m.source().clone());
        }
        Ok(ChainComplex { ring: ring.clone(), modules, maps, augmentation })
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    pub fn maps(&self) -> &[ModuleMap] {
        &self.maps
    }

    #[cfg(test)]
    pub(crate) fn maps_mut(&mut self) -> &mut Vec<ModuleMap> {
        &mut self.maps
    }

    pub fn augmentation(&self) -> Option<&Ideal> {
        self.augmentation.as_ref()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// Length: the largest index with a nonzero module.
    pub fn length(&self) -> usize {
        self.modules.iter().rposition(|m| m.rank() > 0).unwrap_or(0)
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable::from_complex(self)
    }

    /// Every composite of consecutive maps vanishes.
    pub fn d_squared_zero(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            if !w[0].compose(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_minimal(&self) -> bool {
        self.maps.iter().skip(1).all(|m| m.is_minimal())
    }

    /// The image ideal of the first map.
    pub fn image_ideal(&self) -> Result<Ideal> {
        match self.maps.first() {
            None => Ok(Ideal::zero(&self.ring)),
            Some(m) => Ideal::new(&self.ring, m.entries()[0].clone()),
        }
    }

    /// Cancel unit entries until every map past the augmentation is minimal.
    /// Pivots: lowest map index, then row, then column.
    pub fn minimize(&mut self) {
        loop {
            let pivot = self
                .maps
                .iter()
                .enumerate()
                .skip(1)
                .find_map(|(k, m)| m.first_unit().map(|(r, c)| (k, r, c)));
            let Some((k, r, c)) = pivot else { return };
            self.cancel(k, r, c);
        }
    }

    /// Split off the unit `maps[k][r][c]`: Schur complement in `maps[k]`,
    /// drop column `r` of `maps[k-1]` and row `c` of `maps[k+1]`.
    fn cancel(&mut self, k: usize, r: usize, c: usize) {
        {
            let a = self.maps[k].entries_mut();
            let pivot_inv = a[r][c].leading_coefficient().expect("unit").inv();
            let pivot_col: Vec<Polynomial> = a.iter().map(|row| row[c].clone()).collect();
            let pivot_row = a[r].clone();
            for (s, row) in a.iter_mut().enumerate() {
                if s == r || pivot_col[s].is_zero() {
                    continue;
                }
                let factor = pivot_col[s].scale(&pivot_inv);
                for (j, e) in row.iter_mut().enumerate() {
                    if j != c && !pivot_row[j].is_zero() {
                        *e = e.sub(&factor.mul(&pivot_row[j]));
                    }
                }
            }
            a.remove(r);
            for row in a.iter_mut() {
                row.remove(c);
            }
        }
        self.maps[k].target_mut().remove(r);
        self.maps[k].source_mut().remove(c);
        self.modules[k].remove(r);
        self.modules[k + 1].remove(c);
        {
            let prev = &mut self.maps[k - 1];
            for row in prev.entries_mut().iter_mut() {
                row.remove(r);
            }
            prev.source_mut().remove(r);
        }
        if k + 1 < self.maps.len() {
            let next = &mut self.maps[k + 1];
            next.entries_mut().remove(c);
            next.target_mut().remove(c);
        }
        while self.maps.last().is_some_and(|m| m.cols() == 0) {
            self.maps.pop();
            self.modules.pop();
        }
    }

    /// `Σ_i (-1)^i Σ_twists t^twist`, the numerator of the alternating sum of
    /// the modules' Hilbert series.
    pub fn euler_numerator(&self) -> BTreeMap<DegreeVector, i64> {
        let mut num = BTreeMap::new();
        for (i, m) in self.modules.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for t in m.twists() {
                *num.entry(*t).or_insert(0) += sign;
            }
        }
        num.retain(|_, c| *c != 0);
        num
    }

    /// Cross-check against `target`: `d∘d = 0`, the first map generates the
    /// target, the Hilbert series identity, and Betti equality with the
    /// minimal resolution of the target.
    pub fn verify(&self, target: &Ideal) -> Result<VerifyReport> {
        let d_squared_zero = self.d_squared_zero()?;
        let augmentation_onto = self.image_ideal()?.equals(target)?;
        let expected = target.hilbert_series();
        let got = HilbertSeries::from_numerator(&self.ring, self.euler_numerator());
        let hilbert_identity = got.numerator() == expected.numerator();
        let (_, oracle) = minimal_resolution(target)?;
        let betti_match = oracle == self.betti();
        Ok(VerifyReport { d_squared_zero, augmentation_onto, hilbert_identity, betti_match })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub d_squared_zero: bool,
    pub augmentation_onto: bool,
    pub hilbert_identity: bool,
    pub betti_match: bool,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.d_squared_zero && self.augmentation_onto && self.hilbert_identity && self.betti_match
    }
}
