use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::{DegreeVector, GradedRing, Polynomial};

/// `⊕_i R(-twist_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeModule {
    twists: Vec<DegreeVector>,
}

impl FreeModule {
    pub fn new(twists: Vec<DegreeVector>) -> Self {
        FreeModule { twists }
    }

    /// `R` itself.
    pub fn ring_module(ring: &GradedRing) -> Self {
        FreeModule { twists: vec![DegreeVector::zero(ring.arity())] }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[DegreeVector] {
        &self.twists
    }

    pub(crate) fn remove(&mut self, k: usize) {
        self.twists.remove(k);
    }

    /// Sorted copy of the twists, for multiset comparison.
    pub fn sorted_twists(&self) -> Vec<DegreeVector> {
        let mut t = self.twists.clone();
        t.sort();
        t
    }
}

/// A graded map between free modules: `target.rank()` rows, `source.rank()`
/// columns.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleMap {
    ring: GradedRing,
    source: FreeModule,
    target: FreeModule,
    entries: Vec<Vec<Polynomial>>,
}

impl ModuleMap {
    /// Checks shape and that entry `(i, j)` is zero or homogeneous of degree
    /// `source[j] - target[i]`.
    pub fn new(
        ring: &GradedRing,
        source: FreeModule,
        target: FreeModule,
        entries: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        if entries.len() != target.rank() || entries.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::ModuleMismatch(format!(
                "matrix shape does not match a map R^{} -> R^{}",
                source.rank(),
                target.rank()
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.ring() != ring {
                    return Err(Error::RingMismatch);
                }
                if e.is_zero() {
                    continue;
                }
                let want = source.twists[j].checked_sub(&target.twists[i])?;
                let got = e.multidegree()?;
                if got != want {
                    return Err(Error::ModuleMismatch(format!(
                        "entry ({i},{j}) has degree {got}, expected {want}"
                    )));
                }
            }
        }
        Ok(ModuleMap { ring: ring.clone(), source, target, entries })
    }

    pub(crate) fn new_unchecked(
        ring: &GradedRing,
        source: FreeModule,
        target: FreeModule,
        entries: Vec<Vec<Polynomial>>,
    ) -> Self {
        ModuleMap { ring: ring.clone(), source, target, entries }
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> usize {
        self.target.rank()
    }

    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        self.entries.iter().map(|r| r[j].clone()).collect()
    }

    pub(crate) fn entries_mut(&mut self) -> &mut Vec<Vec<Polynomial>> {
        &mut self.entries
    }

    pub(crate) fn source_mut(&mut self) -> &mut FreeModule {
        &mut self.source
    }

    pub(crate) fn target_mut(&mut self) -> &mut FreeModule {
        &mut self.target
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.source.rank() != other.target.rank() {
            return Err(Error::ModuleMismatch("maps are not composable".into()));
        }
        let zero = Polynomial::zero(&self.ring);
        let mut entries = vec![vec![zero; other.cols()]; self.rows()];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols() {
                    let a = &self.entries[i][k];
                    let b = &other.entries[k][j];
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                *e = acc;
            }
        }
        Ok(ModuleMap::new_unchecked(&self.ring, other.source.clone(), self.target.clone(), entries))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(|e| e.is_zero()))
    }

    /// No entry is a nonzero constant.
    pub fn is_minimal(&self) -> bool {
        self.first_unit().is_none()
    }

    /// The first unit entry by row, then column.
    pub fn first_unit(&self) -> Option<(usize, usize)> {
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.is_unit() {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

impl fmt::Display for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleMap({}x{})\n{self}", self.rows(), self.cols())
    }
}
