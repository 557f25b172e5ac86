mod common;

use std::cmp::Ordering;

use proptest::prelude::*;
use rand::Rng;
use symbpow::groebner::{groebner_basis, syzygies};
use symbpow::ideals::Ideal;
use symbpow::polyring::{
    parse_polynomial, CoefficientField, GradedRing, Monomial, MonomialOrder, Polynomial,
};
use symbpow::resolve::{is_saturated, minimal_resolution, resolution_by_minimal_generators};
use symbpow::schemes::{
    fat_points_ideal, general_lines_p3, same_projective_point, scalars, PointConfigP1P1, PointP1P1,
};
use symbpow::symbolic::{symbolic_power_components, symbolic_power_saturation};

use common::{hilbert_by_rank, random_form, rng, standard_monomial_count};

fn ring3() -> GradedRing {
    GradedRing::projective(3)
}

/// A polynomial from `(coefficient, exponents)` pairs.
fn poly_strategy(nvars: usize) -> impl Strategy<Value = Polynomial> {
    let ring = GradedRing::projective(nvars);
    prop::collection::vec((-9i64..=9, prop::collection::vec(0u32..4, nvars)), 0..6).prop_map(move |terms| {
        let field = ring.field();
        let terms = terms.into_iter().map(|(c, e)| (field.from_i64(c), Monomial::from_exponents(&e))).collect();
        Polynomial::from_terms(&ring, terms)
    })
}

fn monomial_strategy() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..4, 4).prop_map(|e| Monomial::from_exponents(&e))
}

/// Two or three random forms of degree 1 to 3 in three variables.
fn ideal_from_seed(seed: u64) -> Ideal {
    let ring = ring3();
    let mut r = rng(seed);
    let count = 2 + (seed % 2) as usize;
    let mut gens = Vec::new();
    for k in 0..count {
        let d = 1 + ((seed >> (2 * k)) % 3) as u32;
        let f = random_form(&ring, d, &mut r);
        if !f.is_zero() {
            gens.push(f);
        }
    }
    if gens.is_empty() {
        gens.push(Polynomial::var(&ring, 0));
    }
    Ideal::new(&ring, gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn print_parse_round_trip(f in poly_strategy(3)) {
        let s = f.to_string();
        let g = parse_polynomial(&s, f.ring()).unwrap();
        prop_assert_eq!(&g, &f);
        prop_assert_eq!(g.to_string(), s);
    }

    #[test]
    fn distributivity(f in poly_strategy(3), g in poly_strategy(3), h in poly_strategy(3)) {
        prop_assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
    }

    #[test]
    fn monomial_orders_are_admissible(a in monomial_strategy(), b in monomial_strategy(), c in monomial_strategy()) {
        let base = GradedRing::projective(4);
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Block(1), MonomialOrder::Block(2)] {
            let r = base.with_order(order).unwrap();
            let ab = r.compare(&a, &b);
            prop_assert_eq!(ab, r.compare(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab == Ordering::Less {
                prop_assert_eq!(r.compare(&a.mul(&c), &b.mul(&c)), Ordering::Less);
            }
            prop_assert_ne!(r.compare(&Monomial::from_exponents(&[0, 0, 0, 0]), &a), Ordering::Greater);
        }
    }

    #[test]
    fn multidegree_is_additive(s in any::<u64>(), d1 in 0i64..3, e1 in 0i64..3, d2 in 0i64..3, e2 in 0i64..3) {
        let ring = GradedRing::p1p1(CoefficientField::Rational);
        let mut r = rng(s);
        let form = |d: i64, e: i64, r: &mut _| {
            let f = random_form(&ring.totalized(), (d + e) as u32, r);
            let terms = f.terms().iter().filter(|(_, m)| {
                (m.exponent(0) + m.exponent(1)) as i64 == d
            }).cloned().collect();
            Polynomial::from_terms(&ring, terms)
        };
        let f = form(d1, e1, &mut r);
        let g = form(d2, e2, &mut r);
        prop_assume!(!f.is_zero() && !g.is_zero());
        let sum = f.multidegree().unwrap().checked_add(&g.multidegree().unwrap()).unwrap();
        prop_assert_eq!(f.mul(&g).multidegree().unwrap(), sum);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn combinations_reduce_to_zero(seed in any::<u64>()) {
        let i = ideal_from_seed(seed);
        let mut r = rng(seed ^ 0x5eed);
        let top = i.generators().iter().map(|g| g.total_degree().unwrap()).max().unwrap() + 1;
        let mut f = Polynomial::zero(i.ring());
        for g in i.generators() {
            f = f.add(&random_form(i.ring(), top - g.total_degree().unwrap(), &mut r).mul(g));
        }
        prop_assert!(i.contains(&f).unwrap());
        prop_assert!(i.normal_form(&f).unwrap().is_zero());
    }

    #[test]
    fn reduced_basis_is_idempotent(seed in any::<u64>()) {
        let i = ideal_from_seed(seed);
        let gb = i.gb_polys();
        let again = groebner_basis(&gb).unwrap().polynomials();
        prop_assert_eq!(&again, &gb);
        let mut shuffled: Vec<Polynomial> = i.generators().iter().rev().cloned().collect();
        shuffled.push(i.generators()[0].mul(&Polynomial::var(i.ring(), 1)));
        prop_assert_eq!(Ideal::new(i.ring(), shuffled).unwrap().gb_polys(), gb);
    }

    #[test]
    fn syzygies_vanish(seed in any::<u64>()) {
        let i = ideal_from_seed(seed);
        let gb = i.gb();
        let ring = i.ring();
        let polys: Vec<Polynomial> = gb.elements().iter().map(|e| e.to_polynomial(ring)).collect();
        let (_, syz) = syzygies(&gb).unwrap();
        for s in syz {
            let coeffs = s.to_dense(ring, polys.len());
            let total = coeffs.iter().zip(&polys).fold(Polynomial::zero(ring), |acc, (c, g)| acc.add(&c.mul(g)));
            prop_assert!(total.is_zero());
        }
    }

    #[test]
    fn saturation_laws(seed in any::<u64>()) {
        let i = ideal_from_seed(seed);
        let s = i.saturate().unwrap();
        prop_assert!(i.is_subset(&s).unwrap());
        prop_assert!(s.saturate().unwrap().equals(&s).unwrap());
        let other = Ideal::new(i.ring(), i.gb_polys()).unwrap();
        prop_assert!(other.saturate().unwrap().equals(&s).unwrap());
    }

    #[test]
    fn powers_multiply(seed in any::<u64>(), a in 1u32..3, b in 1u32..3) {
        let i = ideal_from_seed(seed);
        prop_assume!(i.generators().iter().map(|g| g.total_degree().unwrap()).sum::<u32>() <= 4);
        let lhs = i.power(a).unwrap().product(&i.power(b).unwrap()).unwrap();
        prop_assert!(lhs.equals(&i.power(a + b).unwrap()).unwrap());
    }

    #[test]
    fn intersection_and_product(s1 in any::<u64>(), s2 in any::<u64>()) {
        let i = ideal_from_seed(s1);
        let j = ideal_from_seed(s2);
        let meet = i.intersect(&j).unwrap();
        prop_assert!(meet.is_subset(&i).unwrap());
        prop_assert!(meet.is_subset(&j).unwrap());
        prop_assert!(i.product(&j).unwrap().is_subset(&meet).unwrap());
    }

    #[test]
    fn hilbert_function_by_brute_force(seed in any::<u64>()) {
        let i = ideal_from_seed(seed);
        for d in 0..=8u32 {
            let v = i.hilbert_function(d as i64);
            prop_assert_eq!(v, standard_monomial_count(&i, d));
            prop_assert_eq!(v, hilbert_by_rank(&i, d));
        }
    }

    #[test]
    fn resolutions_are_complexes(seed in any::<u64>()) {
        let i = ideal_from_seed(seed);
        let (c, b) = minimal_resolution(&i).unwrap();
        prop_assert!(c.d_squared_zero().unwrap());
        prop_assert!(c.is_minimal());
        prop_assert!(c.verify(&i).unwrap().all_pass());
        let (_, b2) = resolution_by_minimal_generators(&i).unwrap();
        prop_assert_eq!(&b, &b2);
        prop_assert_eq!(b.totals()[1], i.mu().unwrap());
        // Auslander-Buchsbaum: saturated iff depth of R/I is positive.
        prop_assert_eq!(is_saturated(&i).unwrap(), b.pdim() <= 2);
    }
}

/// A reduced configuration of points, lines or P^1 x P^1 points with both
/// symbolic-power routes applicable.
fn configuration(kind: u8, seed: u64) -> Ideal {
    let mut r = rng(seed);
    match kind % 3 {
        0 => {
            let ring = ring3();
            let mut pts: Vec<Vec<_>> = Vec::new();
            for _ in 0..(2 + seed % 4) {
                let c: Vec<i64> = (0..3).map(|_| r.gen_range(-2..=2)).collect();
                let c = scalars(ring.field(), &c);
                if c.iter().all(|x| x.is_zero()) || pts.iter().any(|p| same_projective_point(p, &c)) {
                    continue;
                }
                pts.push(c);
            }
            if pts.is_empty() {
                pts.push(scalars(ring.field(), &[1, 0, 0]));
            }
            let pts: Vec<_> = pts.into_iter().map(|p| (p, 1)).collect();
            fat_points_ideal(&ring, &pts).unwrap()
        }
        1 => {
            let q = CoefficientField::Rational;
            let mut pts: Vec<PointP1P1> = Vec::new();
            for _ in 0..(2 + seed % 4) {
                let mut pair = || loop {
                    let v = [r.gen_range(0..=2), r.gen_range(0..=2)];
                    if v != [0, 0] {
                        return v;
                    }
                };
                let p = PointP1P1::from_ints(q, pair(), pair(), 1).unwrap();
                if !pts.iter().any(|o| o.same_point(&p)) {
                    pts.push(p);
                }
            }
            PointConfigP1P1::new(q, pts).unwrap().ideal().totalized()
        }
        _ => general_lines_p3(1 + (seed % 3) as usize, seed).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn symbolic_routes_agree(kind in 0u8..3, seed in 0u64..1000) {
        let i = configuration(kind, seed);
        prop_assert!(i.is_saturated().unwrap());
        let a = symbolic_power_components(&i, 2).unwrap();
        let b = symbolic_power_saturation(&i, 2).unwrap();
        prop_assert!(a.equals(&b).unwrap());
        prop_assert!(i.power(2).unwrap().is_subset(&a).unwrap());
    }

    #[test]
    fn alpha_ignores_order_and_scaling(seed in 0u64..1000) {
        let q = CoefficientField::Rational;
        let mut r = rng(seed);
        let mut pts: Vec<([i64; 2], [i64; 2])> = Vec::new();
        for _ in 0..5 {
            let a = [r.gen_range(0..=2), 1];
            let b = [1, r.gen_range(0..=2)];
            if !pts.contains(&(a, b)) {
                pts.push((a, b));
            }
        }
        let build = |ps: &[([i64; 2], [i64; 2])], k: i64| {
            let ps = ps.iter().map(|(a, b)| PointP1P1::from_ints(q, [a[0] * k, a[1] * k], [b[0] * -k, b[1] * -k], 1).unwrap()).collect();
            PointConfigP1P1::new(q, ps).unwrap()
        };
        let c1 = build(&pts, 1);
        pts.reverse();
        let c2 = build(&pts, 3);
        prop_assert_eq!(c1.alpha(), c2.alpha());
        prop_assert!(c1.ideal().equals(&c2.ideal().clone()).unwrap());
        prop_assert_eq!(c1.ideal().totalized().codimension().unwrap(), 2);
    }
}
