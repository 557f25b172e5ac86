use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use super::Ideal;
use crate::error::{Error, Result};
use crate::polyring::{monomials_of_weight, DegreeVector, GradedRing, Monomial};

type Numerator = BTreeMap<DegreeVector, i64>;

/// `N(t) / prod_i (1 - t^{deg x_i})`, the Hilbert series of `R/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    #[serde(skip)]
    var_degrees: Vec<DegreeVector>,
    #[serde(serialize_with = "serialize_numerator")]
    numerator: Numerator,
}

fn serialize_numerator<S: serde::Serializer>(
    n: &Numerator,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let v: Vec<(&DegreeVector, &i64)> = n.iter().collect();
    v.serialize(s)
}

fn add_shifted(acc: &mut Numerator, other: &Numerator, shift: DegreeVector, sign: i64) {
    for (d, c) in other {
        let e = acc.entry(*d + shift).or_insert(0);
        *e += sign * c;
    }
    acc.retain(|_, c| *c != 0);
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.total_degree(), *m.exponents()));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|k| k.divides(&m)) {
            out.push(m);
        }
    }
    out
}

struct Recursion<'a> {
    degrees: &'a [DegreeVector],
    arity: usize,
    memo: HashMap<Vec<Monomial>, Numerator>,
}

impl Recursion<'_> {
    fn degree(&self, m: &Monomial) -> DegreeVector {
        let mut d = DegreeVector::zero(self.arity);
        for (i, deg) in self.degrees.iter().enumerate() {
            let e = m.exponent(i) as i64;
            if e != 0 {
                d = d + deg.scale(e);
            }
        }
        d
    }

    /// `N(m_1..m_k) = N(m_1..m_{k-1}) - t^{deg m_k} N((m_1..m_{k-1}) : m_k)`.
    fn numerator(&mut self, gens: Vec<Monomial>) -> Numerator {
        let gens = minimalize(gens);
        if let Some(n) = self.memo.get(&gens) {
            return n.clone();
        }
        let mut result = Numerator::new();
        result.insert(DegreeVector::zero(self.arity), 1);
        let coprime = gens
            .iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
        if coprime {
            for m in &gens {
                let mut next = result.clone();
                add_shifted(&mut next, &result, self.degree(m), -1);
                result = next;
            }
        } else {
            let (last, rest) = gens.split_last().expect("nonempty");
            let colon: Vec<Monomial> = rest
                .iter()
                .map(|m| m.div(&m.gcd(last)).expect("gcd divides"))
                .collect();
            let a = self.numerator(rest.to_vec());
            let b = self.numerator(colon);
            result = a;
            add_shifted(&mut result, &b, self.degree(last), -1);
        }
        self.memo.insert(gens, result.clone());
        result
    }
}

/// Number of monomials of multidegree `d`.
pub fn count_monomials(var_degrees: &[DegreeVector], d: DegreeVector) -> i64 {
    if d.total() < 0 || !d.is_nonnegative() {
        return 0;
    }
    let weights: Vec<u32> = var_degrees.iter().map(|v| v.total() as u32).collect();
    if d.arity() == 1 {
        return count_weighted(&weights, d.total() as u32) as i64;
    }
    monomials_of_weight(&weights, d.total() as u32)
        .iter()
        .filter(|m| {
            let mut e = DegreeVector::zero(d.arity());
            for (i, v) in var_degrees.iter().enumerate() {
                e = e + v.scale(m.exponent(i) as i64);
            }
            e == d
        })
        .count() as i64
}

fn count_weighted(weights: &[u32], target: u32) -> u64 {
    let mut ways = vec![0u64; target as usize + 1];
    ways[0] = 1;
    for &w in weights {
        let w = w as usize;
        for s in w..=target as usize {
            ways[s] += ways[s - w];
        }
    }
    ways[target as usize]
}

impl HilbertSeries {
    /// Series of `R / (monomials)`.
    pub fn of_monomial_ideal(ring: &GradedRing, gens: &[Monomial]) -> Self {
        let mut rec = Recursion { degrees: ring.var_degrees(), arity: ring.arity(), memo: HashMap::new() };
        let numerator = rec.numerator(gens.to_vec());
        HilbertSeries { var_degrees: ring.var_degrees().to_vec(), numerator }
    }

    /// Series with an explicit numerator over the ring's denominator.
    pub fn from_numerator(ring: &GradedRing, numerator: BTreeMap<DegreeVector, i64>) -> Self {
        let mut numerator = numerator;
        numerator.retain(|_, c| *c != 0);
        HilbertSeries { var_degrees: ring.var_degrees().to_vec(), numerator }
    }

    pub fn numerator(&self) -> &BTreeMap<DegreeVector, i64> {
        &self.numerator
    }

    pub fn arity(&self) -> usize {
        self.var_degrees[0].arity()
    }

    /// Dimension of the degree-`d` part.
    pub fn value(&self, d: DegreeVector) -> i64 {
        self.numerator
            .iter()
            .map(|(k, c)| c * count_monomials(&self.var_degrees, d - *k))
            .sum()
    }

    /// Standard-graded value at `d`.
    pub fn value_at(&self, d: i64) -> i64 {
        self.totalized().value(DegreeVector::single(d))
    }

    /// Substitute `t_1 = t_2 = t`.
    pub fn totalized(&self) -> HilbertSeries {
        let mut numerator = Numerator::new();
        for (d, c) in &self.numerator {
            *numerator.entry(d.totalized()).or_insert(0) += c;
        }
        numerator.retain(|_, c| *c != 0);
        HilbertSeries {
            var_degrees: self.var_degrees.iter().map(|d| d.totalized()).collect(),
            numerator,
        }
    }

    /// Multiplicity of `t = 1` as a root of the totalized numerator.
    pub fn root_multiplicity_at_one(&self) -> Option<usize> {
        let tot = self.totalized();
        let max = tot.numerator.keys().map(|d| d.total()).max()?;
        let min = tot.numerator.keys().map(|d| d.total()).min()?;
        if min < 0 {
            return None;
        }
        let mut coeffs = vec![0i64; max as usize + 1];
        for (d, c) in &tot.numerator {
            coeffs[d.total() as usize] = *c;
        }
        let mut mult = 0;
        while coeffs.iter().sum::<i64>() == 0 {
            if coeffs.iter().all(|&c| c == 0) {
                return None;
            }
            // c(t) = (1 - t) q(t): q_k = c_k + q_{k-1}
            let mut q = Vec::with_capacity(coeffs.len());
            let mut run = 0;
            for &c in &coeffs[..coeffs.len() - 1] {
                run += c;
                q.push(run);
            }
            coeffs = q;
            mult += 1;
        }
        Some(mult)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = |d: &DegreeVector| -> String {
            let c = d.components();
            let mut parts = Vec::new();
            if c.len() == 1 {
                match c[0] {
                    0 => {}
                    1 => parts.push("t".to_string()),
                    e => parts.push(format!("t^{e}")),
                }
            } else {
                for (k, &e) in c.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => parts.push(format!("t{}", k + 1)),
                        e => parts.push(format!("t{}^{e}", k + 1)),
                    }
                }
            }
            parts.join("*")
        };
        let mut first = true;
        if self.numerator.is_empty() {
            write!(f, "0")?;
        }
        for (d, &c) in &self.numerator {
            let m = var(d);
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (m.is_empty(), a) {
                (true, _) => write!(f, "{a}")?,
                (false, 1) => write!(f, "{m}")?,
                (false, _) => write!(f, "{a}*{m}")?,
            }
        }
        let dens: Vec<String> =
            self.var_degrees.iter().map(|d| format!("(1 - {})", var(d))).collect();
        write!(f, " / {}", dens.join("*"))
    }
}

impl Ideal {
    pub fn hilbert_series(&self) -> HilbertSeries {
        let leads: Vec<Monomial> =
            self.gb_polys().iter().map(|g| *g.leading_monomial().expect("nonzero")).collect();
        HilbertSeries::of_monomial_ideal(&self.ring, &leads)
    }

    /// `dim_k (R/I)_d` in the totalized grading.
    pub fn hilbert_function(&self, d: i64) -> i64 {
        self.hilbert_series().value_at(d)
    }

    pub fn codimension(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::InvalidArgument("the unit ideal has no codimension".into()));
        }
        self.hilbert_series()
            .root_multiplicity_at_one()
            .ok_or_else(|| Error::InvariantViolation("degenerate Hilbert numerator".into()))
    }

    /// Krull dimension of `R/I`.
    pub fn dimension(&self) -> Result<usize> {
        Ok(self.ring.nvars() - self.codimension()?)
    }

    /// Least total degree of a nonzero element.
    pub fn initial_degree(&self) -> Result<i64> {
        self.gens
            .iter()
            .map(|g| g.multidegree().map(|d| d.total()))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .min()
            .ok_or_else(|| Error::InvalidArgument("the zero ideal has no initial degree".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::CoefficientField;

    /// Degree-`d` monomials outside the monomial ideal, counted directly.
    fn brute(ring: &GradedRing, gens: &[Monomial], d: u32) -> i64 {
        monomials_of_weight(ring.weights(), d)
            .iter()
            .filter(|m| !gens.iter().any(|g| g.divides(m)))
            .count() as i64
    }

    #[test]
    fn skew_lines_hilbert_function() {
        let r = GradedRing::projective(4);
        let i = Ideal::parse(&r, "x0*x2, x0*x3, x1*x2, x1*x3").unwrap();
        let h = i.hilbert_series();
        let vals: Vec<i64> = (0..=6).map(|d| h.value_at(d)).collect();
        assert_eq!(vals, vec![1, 4, 6, 8, 10, 12, 14]);
        let leads: Vec<Monomial> =
            i.gb_polys().iter().map(|g| *g.leading_monomial().unwrap()).collect();
        for d in 0..=6 {
            assert_eq!(vals[d as usize], brute(&r, &leads, d));
        }
        assert_eq!(i.codimension().unwrap(), 2);
        assert_eq!(i.dimension().unwrap(), 2);
    }

    #[test]
    fn zero_ideal_series() {
        let r = GradedRing::projective(4);
        let h = Ideal::zero(&r).hilbert_series();
        assert_eq!(h.numerator().len(), 1);
        assert_eq!(h.value_at(3), 20);
        assert_eq!(Ideal::zero(&r).codimension().unwrap(), 0);
    }

    #[test]
    fn bigraded_series() {
        let r = GradedRing::p1p1(CoefficientField::Rational);
        let i = Ideal::parse(&r, "x1, x3").unwrap();
        let h = i.hilbert_series();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(h.value(DegreeVector::pair(a, b)), 1);
            }
        }
        assert_eq!(i.codimension().unwrap(), 2);
        assert_eq!(count_monomials(r.var_degrees(), DegreeVector::pair(2, 1)), 6);
    }
}
