use std::collections::BTreeMap;
use std::fmt::Write;

use serde_json::{json, Value};

use super::complex::ChainComplex;
use crate::polyring::DegreeVector;

/// Graded Betti numbers `β_{i,j}` of an `R/I`-style complex (index 0 is `R`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    arity: usize,
    entries: BTreeMap<(usize, DegreeVector), usize>,
}

impl BettiTable {
    pub fn new(arity: usize) -> Self {
        BettiTable { arity, entries: BTreeMap::new() }
    }

    pub fn from_complex(c: &ChainComplex) -> Self {
        let mut t = BettiTable::new(c.ring().arity());
        for (i, m) in c.modules().iter().enumerate() {
            for d in m.twists() {
                t.add(i, *d, 1);
            }
        }
        t
    }

    pub fn add(&mut self, i: usize, j: DegreeVector, count: usize) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, i: usize, j: DegreeVector) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, DegreeVector), usize> {
        &self.entries
    }

    /// Projective dimension: the largest index with a nonzero entry.
    pub fn pdim(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// `β_i` for `i = 0..=pdim`.
    pub fn totals(&self) -> Vec<usize> {
        let mut t = vec![0; self.pdim() + 1];
        for ((i, _), c) in &self.entries {
            t[*i] += c;
        }
        t
    }

    /// `M_i`, the largest total degree at index `i` (`None` where `β_i = 0`).
    pub fn maxima(&self) -> Vec<Option<i64>> {
        let mut m: Vec<Option<i64>> = vec![None; self.pdim() + 1];
        for (i, j) in self.entries.keys() {
            let t = j.total();
            m[*i] = Some(m[*i].map_or(t, |x| x.max(t)));
        }
        m
    }

    /// The same table in the totalized grading.
    pub fn totalized(&self) -> BettiTable {
        let mut t = BettiTable::new(1);
        for ((i, j), c) in &self.entries {
            t.add(*i, j.totalized(), *c);
        }
        t
    }

    /// Twists at index `i` with multiplicity, sorted.
    pub fn twists_at(&self, i: usize) -> Vec<DegreeVector> {
        let mut out = Vec::new();
        for ((k, j), c) in &self.entries {
            if *k == i {
                out.extend(std::iter::repeat(*j).take(*c));
            }
        }
        out
    }

    /// Diagram with rows indexed by `j - i` and a trailing `Tot:` row;
    /// bigraded tables print their twist lists instead.
    pub fn format(&self) -> String {
        if self.arity == 2 {
            return self.format_twists();
        }
        let p = self.pdim();
        let rows: Vec<i64> = self.entries.keys().map(|(i, j)| j.total() - *i as i64).collect();
        let (lo, hi) = match (rows.iter().min(), rows.iter().max()) {
            (Some(a), Some(b)) => (*a, *b),
            _ => (0, 0),
        };
        let totals = self.totals();
        let mut cells: Vec<Vec<String>> = Vec::new();
        cells.push((0..=p).map(|i| i.to_string()).collect());
        for r in lo..=hi {
            cells.push(
                (0..=p)
                    .map(|i| match self.get(i, DegreeVector::single(r + i as i64)) {
                        0 => "-".to_string(),
                        c => c.to_string(),
                    })
                    .collect(),
            );
        }
        cells.push(totals.iter().map(|c| c.to_string()).collect());
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        let mut labels = vec![String::new()];
        labels.extend((lo..=hi).map(|r| format!("{r}:")));
        labels.push("Tot:".into());
        let lw = labels.iter().map(|l| l.len()).max().unwrap_or(4);
        let mut out = String::new();
        for (label, row) in labels.iter().zip(&cells) {
            write!(out, "{label:>lw$}").expect("string write");
            for c in row {
                write!(out, "  {c:>width$}").expect("string write");
            }
            out.push('\n');
        }
        out
    }

    fn format_twists(&self) -> String {
        let mut out = String::new();
        for i in 0..=self.pdim() {
            let mut counts: BTreeMap<DegreeVector, usize> = BTreeMap::new();
            for j in self.twists_at(i) {
                *counts.entry(j).or_insert(0) += 1;
            }
            let parts: Vec<String> = counts
                .iter()
                .map(|(j, c)| {
                    let neg: Vec<String> = j.components().iter().map(|v| (-v).to_string()).collect();
                    let base = format!("R({})", neg.join(","));
                    if *c == 1 {
                        base
                    } else {
                        format!("{base}^{c}")
                    }
                })
                .collect();
            let body = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
            writeln!(out, "{i}: {body}").expect("string write");
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let betti: Vec<Value> = self
            .entries
            .iter()
            .map(|((i, j), c)| json!([i, j.components(), c]))
            .collect();
        let m: Vec<Value> = self.maxima().iter().map(|x| json!(x)).collect();
        json!({ "betti": betti, "pdim": self.pdim(), "M": m })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(rows: &[(usize, i64, usize)]) -> BettiTable {
        let mut t = BettiTable::new(1);
        for &(i, j, c) in rows {
            t.add(i, DegreeVector::single(j), c);
        }
        t
    }

    #[test]
    fn diagram_layout() {
        let t = table(&[(0, 0, 1), (1, 2, 4), (2, 3, 2), (2, 4, 3), (3, 5, 2)]);
        let expected = "      0  1  2  3\n  0:  1  -  -  -\n  1:  -  4  2  -\n  2:  -  -  3  2\nTot:  1  4  5  2\n";
        assert_eq!(t.format(), expected);
        assert_eq!(t.totals(), vec![1, 4, 5, 2]);
        assert_eq!(t.maxima(), vec![Some(0), Some(2), Some(4), Some(5)]);
    }

    #[test]
    fn ring_alone() {
        let t = table(&[(0, 0, 1)]);
        assert_eq!(t.format(), "      0\n  0:  1\nTot:  1\n");
        assert_eq!(t.to_json()["pdim"], 0);
    }
}
