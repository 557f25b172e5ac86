use malachite_nz::natural::Natural;
use malachite_q::Rational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::resolve::BettiTable;

/// One index of the bound `β_i ≤ Π_{j≠i} M_j / ((i-1)! (p-i)!)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RomerRow {
    pub i: usize,
    pub beta: usize,
    pub bound: Rational,
    /// `bound - β_i`.
    pub margin: Rational,
}

impl RomerRow {
    pub fn holds(&self) -> bool {
        self.margin >= 0u32
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RomerReport {
    pub p: usize,
    pub maxima: Vec<i64>,
    pub rows: Vec<RomerRow>,
    pub warnings: Vec<String>,
}

impl RomerReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(RomerRow::holds)
    }

    pub fn violations(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| !r.holds()).map(|r| r.i).collect()
    }

    pub fn to_json(&self) -> Value {
        #[derive(Serialize)]
        struct Row {
            i: usize,
            beta: usize,
            bound: String,
            margin: String,
            holds: bool,
        }
        let rows: Vec<Row> = self
            .rows
            .iter()
            .map(|r| Row {
                i: r.i,
                beta: r.beta,
                bound: r.bound.to_string(),
                margin: r.margin.to_string(),
                holds: r.holds(),
            })
            .collect();
        json!({
            "p": self.p,
            "M": self.maxima,
            "rows": rows,
            "holds": self.holds(),
            "warnings": self.warnings,
        })
    }
}

fn factorial(k: usize) -> Natural {
    (1..=k as u64).fold(Natural::from(1u32), |acc, j| acc * Natural::from(j))
}

/// Evaluate the bound at every `1 ≤ i ≤ p` in exact rationals. `M_j` is the
/// largest total shift at index `j`.
pub fn romer_check(table: &BettiTable) -> Result<RomerReport> {
    let p = table.pdim();
    let totals = table.totals();
    let mut maxima = Vec::with_capacity(p);
    for (j, m) in table.maxima().into_iter().enumerate().skip(1) {
        maxima.push(m.ok_or_else(|| {
            Error::InvalidArgument(format!("index {j} is empty below the projective dimension"))
        })?);
    }
    let mut warnings = Vec::new();
    if table.arity() == 1 && maxima.windows(2).any(|w| w[0] >= w[1]) {
        warnings.push(format!("M = {maxima:?} is not strictly increasing; the table may not be minimal"));
    }
    let mut rows = Vec::with_capacity(p);
    for i in 1..=p {
        let mut product = Rational::from(1u32);
        for (j, m) in maxima.iter().enumerate() {
            if j + 1 != i {
                product *= Rational::from(*m);
            }
        }
        let denom = Rational::from(factorial(i - 1) * factorial(p - i));
        let bound = product / denom;
        let margin = &bound - Rational::from(totals[i]);
        rows.push(RomerRow { i, beta: totals[i], bound, margin });
    }
    Ok(RomerReport { p, maxima, rows, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::DegreeVector;

    fn table(rows: &[(usize, i64, usize)]) -> BettiTable {
        let mut t = BettiTable::new(1);
        for &(i, j, c) in rows {
            t.add(i, DegreeVector::single(j), c);
        }
        t
    }

    #[test]
    fn twisted_cubic_bound() {
        // M = (2, 3): β_1 ≤ 3, β_2 ≤ 2.
        let r = romer_check(&table(&[(0, 0, 1), (1, 2, 3), (2, 3, 2)])).unwrap();
        assert_eq!(r.rows[0].bound, Rational::from(3u32));
        assert_eq!(r.rows[1].bound, Rational::from(2u32));
        assert!(r.holds());
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn fractional_bound_and_violation() {
        // p = 3, M = (2, 3, 4): bounds 12/2, 8/1, 6/2.
        let r = romer_check(&table(&[(0, 0, 1), (1, 2, 7), (2, 3, 8), (3, 4, 4)])).unwrap();
        assert_eq!(r.rows[0].bound, Rational::from(6u32));
        assert_eq!(r.rows[2].bound, Rational::from(3u32));
        assert_eq!(r.violations(), vec![1, 3]);
        assert_eq!(r.rows[0].margin, Rational::from(-1i32));
    }

    #[test]
    fn non_increasing_maxima_warn() {
        let r = romer_check(&table(&[(0, 0, 1), (1, 3, 1), (2, 3, 1)])).unwrap();
        assert_eq!(r.warnings.len(), 1);
    }
}
