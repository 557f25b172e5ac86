//! Normal forms, Groebner bases and syzygies for submodules of graded free
//! modules. Ideals are the rank-one case.

mod engine;
mod module;
mod reduce;
mod syzygy;

pub use engine::{buchberger, buchberger_with, groebner_basis, EngineOptions, EngineOutput};
pub use module::{FreeModuleElement, ModTerm, ModuleOrder};
pub use reduce::{normal_form, normal_form_poly, GroebnerBasis};
pub use syzygy::{generator_syzygies, syzygies, GeneratorSyzygies};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_generators, parse_polynomial, CoefficientField, GradedRing, Polynomial};

    fn ring(names: &[&str]) -> GradedRing {
        GradedRing::standard(names, CoefficientField::Rational).unwrap()
    }

    fn strings(gb: &GroebnerBasis) -> Vec<String> {
        gb.polynomials().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn one_step_division() {
        let r = ring(&["x", "y"]);
        let gb = groebner_basis(&parse_generators("x^2 - y", &r).unwrap()).unwrap();
        let f = parse_polynomial("x^2*y", &r).unwrap();
        assert_eq!(normal_form_poly(&f, &gb).unwrap().to_string(), "y^2");
        assert!(normal_form_poly(&Polynomial::zero(&r), &gb).unwrap().is_zero());
        let g = parse_polynomial("x^2 - y", &r).unwrap();
        assert!(normal_form_poly(&g, &gb).unwrap().is_zero());
    }

    #[test]
    fn monomial_and_variable_ideals_are_reduced() {
        let r = ring(&["x0", "x1", "x2", "x3"]);
        let gens = parse_generators("x0*x2, x0*x3, x1*x2, x1*x3", &r).unwrap();
        let gb = groebner_basis(&gens).unwrap();
        assert_eq!(gb.len(), 4);
        let gb2 = groebner_basis(&parse_generators("x1, x0", &r).unwrap()).unwrap();
        assert_eq!(strings(&gb2), vec!["x1", "x0"]);
    }

    #[test]
    fn scroll_minors_gb() {
        let r = ring(&["x0", "x1", "x2", "x3", "x4", "x5"]);
        // rows (x0 x1 x2 | x3 x4 x5)
        let gens =
            parse_generators("x0*x4 - x1*x3, x0*x5 - x2*x3, x1*x5 - x2*x4", &r).unwrap();
        let gb = groebner_basis(&gens).unwrap();
        assert_eq!(gb.len(), 3);
        for p in gb.polynomials() {
            assert_eq!(p.total_degree(), Some(2));
        }
        // every S-polynomial reduces to zero
        let (_, syz) = syzygies(&gb).unwrap();
        assert!(!syz.is_empty());
    }

    #[test]
    fn idempotence_and_generator_independence() {
        let r = ring(&["x", "y", "z"]);
        let gens = parse_generators("x^2 + y*z, x*y - z^2, y^3 - x*z^2", &r).unwrap();
        let gb = groebner_basis(&gens).unwrap();
        let again = groebner_basis(&gb.polynomials()).unwrap();
        assert_eq!(gb.polynomials(), again.polynomials());
        let mut rev = gens.clone();
        rev.reverse();
        assert_eq!(groebner_basis(&rev).unwrap().polynomials(), gb.polynomials());
    }

    fn check_syzygies(gb: &GroebnerBasis, syz: &[FreeModuleElement]) {
        let ring = gb.order().ring();
        let g = gb.polynomials();
        for s in syz {
            let v = s.to_dense(ring, g.len());
            let mut acc = Polynomial::zero(ring);
            for (a, b) in v.iter().zip(&g) {
                acc = acc.add(&a.mul(b));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn koszul_and_skew_line_syzygies() {
        let r = ring(&["x0", "x1", "x2", "x3"]);
        let gb = groebner_basis(&parse_generators("x0, x1", &r).unwrap()).unwrap();
        let (_, syz) = syzygies(&gb).unwrap();
        assert_eq!(syz.len(), 1);
        check_syzygies(&gb, &syz);

        let gb = groebner_basis(&parse_generators("x0*x2, x0*x3, x1*x2, x1*x3", &r).unwrap())
            .unwrap();
        let (schreyer, syz) = syzygies(&gb).unwrap();
        check_syzygies(&gb, &syz);
        assert_eq!(syz.len(), 4);
        for s in &syz {
            assert_eq!(s.degree(&schreyer).unwrap().total(), 3);
        }
        // the four relations are a Groebner basis for the Schreyer order
        let sgb = GroebnerBasis::from_elements(&schreyer, syz.clone());
        let (_, second) = syzygies(&sgb).unwrap();
        assert_eq!(second.len(), 1);
    }

    #[test]
    fn non_groebner_input_is_reported() {
        let r = ring(&["x", "y"]);
        let o = ModuleOrder::ideal(&r);
        let gens: Vec<_> = parse_generators("x^2 - y, x*y", &r)
            .unwrap()
            .iter()
            .map(|p| FreeModuleElement::from_polynomial(&o, p, 0))
            .collect();
        let fake = GroebnerBasis::from_elements(&o, gens);
        assert!(matches!(syzygies(&fake), Err(crate::Error::NotGroebnerBasis(..))));
    }

    #[test]
    fn minimal_generators_and_relations() {
        let r = ring(&["x0", "x1"]);
        let o = ModuleOrder::ideal(&r);
        let gens: Vec<_> = parse_generators("x0^2, x0*x1, x1^2, x0^2 + x1^2", &r)
            .unwrap()
            .iter()
            .map(|p| FreeModuleElement::from_polynomial(&o, p, 0))
            .collect();
        let gs = generator_syzygies(&gens, &o).unwrap();
        assert_eq!(gs.kept, vec![0, 1, 2]);
        let kept: Vec<Polynomial> = gs.kept.iter().map(|&k| gens[k].to_polynomial(&r)).collect();
        for s in &gs.relations {
            let v = s.to_dense(&r, 3);
            let mut acc = Polynomial::zero(&r);
            for (a, b) in v.iter().zip(&kept) {
                acc = acc.add(&a.mul(b));
            }
            assert!(acc.is_zero());
        }
        let rgb = buchberger(&gs.relations, &gs.relation_order).unwrap();
        assert_eq!(rgb.len(), 2);
    }
}
