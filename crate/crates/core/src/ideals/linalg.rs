use std::collections::HashMap;

use crate::polyring::{Monomial, Polynomial};

/// Incremental row echelon form over polynomials viewed as coefficient
/// vectors indexed by monomials. Pivots are leading monomials.
#[derive(Default)]
pub(crate) struct Echelon {
    rows: HashMap<Monomial, Polynomial>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduce `v` against the current rows; insert and return true when it is
    /// independent.
    pub fn insert(&mut self, v: Polynomial) -> bool {
        let mut v = v;
        while let Some(m) = v.leading_monomial().copied() {
            match self.rows.get(&m) {
                Some(row) => {
                    let c = v.leading_coefficient().expect("nonzero").clone();
                    v = v.sub(&row.scale(&c));
                }
                None => {
                    self.rows.insert(m, v.monic());
                    return true;
                }
            }
        }
        false
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}
