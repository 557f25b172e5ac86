//! Test-side oracles, independent of the library's Hilbert series and
//! minimal-generator code.
#![allow(dead_code)]

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symbpow::ideals::Ideal;
use symbpow::polyring::{monomials_of_weight, FieldScalar, GradedRing, Monomial, Polynomial};

/// Rank of a set of polynomials as vectors of coefficients, by plain
/// Gaussian elimination.
pub fn rank(polys: &[Polynomial]) -> usize {
    let mut pivots: Vec<(Monomial, HashMap<Monomial, FieldScalar>)> = Vec::new();
    for p in polys {
        let mut row: HashMap<Monomial, FieldScalar> = p.terms().iter().map(|(c, m)| (*m, c.clone())).collect();
        for (pm, prow) in &pivots {
            if let Some(c) = row.get(pm).cloned() {
                for (m, v) in prow {
                    let e = row.entry(*m).or_insert_with(|| v.field().zero());
                    *e = e.sub(&c.mul(v));
                }
                row.retain(|_, v| !v.is_zero());
            }
        }
        if let Some((m, c)) = row.iter().next().map(|(m, c)| (*m, c.clone())) {
            let inv = c.inv();
            let row: HashMap<Monomial, FieldScalar> = row.into_iter().map(|(k, v)| (k, v.mul(&inv))).collect();
            pivots.push((m, row));
        }
    }
    pivots.len()
}

pub fn monomials(ring: &GradedRing, d: u32) -> Vec<Monomial> {
    monomials_of_weight(&vec![1; ring.nvars()], d)
}

/// `dim R_d - dim I_d` with `I_d` spanned by monomial multiples of the
/// generators (standard grading).
pub fn hilbert_by_rank(ideal: &Ideal, d: u32) -> i64 {
    let ring = ideal.ring();
    let one = ring.field().one();
    let mut span = Vec::new();
    for g in ideal.generators() {
        let e = g.total_degree().unwrap();
        if e <= d {
            for m in monomials(ring, d - e) {
                span.push(g.mul_term(&one, &m));
            }
        }
    }
    monomials(ring, d).len() as i64 - rank(&span) as i64
}

/// Monomials of degree `d` outside the initial ideal of the reduced basis.
pub fn standard_monomial_count(ideal: &Ideal, d: u32) -> i64 {
    let leads: Vec<Monomial> = ideal.gb_polys().iter().map(|g| *g.leading_monomial().unwrap()).collect();
    monomials(ideal.ring(), d).iter().filter(|m| !leads.iter().any(|l| l.divides(m))).count() as i64
}

/// Random form of degree `d` with coefficients in `-3..=3`.
pub fn random_form(ring: &GradedRing, d: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    let field = ring.field();
    let terms = monomials(ring, d)
        .into_iter()
        .map(|m| (field.from_i64(rng.gen_range(-3..=3)), m))
        .filter(|(c, _)| !c.is_zero())
        .collect();
    Polynomial::from_terms(ring, terms)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}
