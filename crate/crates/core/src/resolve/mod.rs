//! Free modules, chain complexes, minimal resolutions and Betti tables, plus
//! the strand complexes built from a Hilbert-Burch presentation.

mod betti;
mod complex;
mod free;
mod resolution;
mod strand;

pub use betti::BettiTable;
pub use complex::{ChainComplex, VerifyReport};
pub use free::{FreeModule, ModuleMap};
pub use resolution::{
    is_acm, is_saturated, minimal_resolution, projective_dimension, resolution_by_minimal_generators,
    schreyer_frame,
};
pub use strand::{
    binomial, power_complex, predicted_power_betti, power_resolution_hypotheses, strand_resolution, Presentation,
    PowerHypotheses,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{Certainty, Ideal};
    use crate::polyring::{DegreeVector, GradedRing, Polynomial};

    fn ideal(n: usize, text: &str) -> Ideal {
        Ideal::parse(&GradedRing::projective(n), text).unwrap()
    }

    #[test]
    fn koszul_complex_of_two_variables() {
        let i = ideal(3, "x0, x1");
        let (c, b) = minimal_resolution(&i).unwrap();
        assert_eq!(b.totals(), vec![1, 2, 1]);
        assert_eq!(b.get(2, DegreeVector::single(2)), 1);
        assert!(c.d_squared_zero().unwrap());
        assert!(is_acm(&i).unwrap());
    }

    #[test]
    fn twisted_cubic() {
        let i = ideal(4, "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2");
        let (c, b) = minimal_resolution(&i).unwrap();
        assert_eq!(b.totals(), vec![1, 3, 2]);
        assert_eq!(b.get(2, DegreeVector::single(3)), 2);
        assert!(c.is_minimal());
        assert!(c.verify(&i).unwrap().all_pass());
        assert!(is_acm(&i).unwrap());
    }

    #[test]
    fn non_minimal_generators_are_pruned() {
        let i = ideal(3, "x0^2, x0*x1, x0^2 + x0*x1, x1^3");
        let (_, b) = minimal_resolution(&i).unwrap();
        assert_eq!(b.totals(), vec![1, 3, 2]);
    }

    #[test]
    fn minimize_cancels_a_unit() {
        let r = GradedRing::projective(2);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let one = Polynomial::one(&r);
        let zero = Polynomial::zero(&r);
        let d = |v: &[i64]| v.iter().map(|&k| DegreeVector::single(k)).collect::<Vec<_>>();
        // (x, y, y) with the redundant relation e2 - e3 and the Koszul relation.
        let f1 = FreeModule::new(d(&[1, 1, 1]));
        let f2 = FreeModule::new(d(&[1, 2]));
        let m0 = ModuleMap::new(&r, f1.clone(), FreeModule::ring_module(&r), vec![vec![x.clone(), y.clone(), y.clone()]]).unwrap();
        let m1 = ModuleMap::new(
            &r,
            f2,
            f1,
            vec![vec![zero.clone(), y.clone()], vec![one.clone(), x.neg()], vec![one.neg(), zero.clone()]],
        )
        .unwrap();
        let mut c = ChainComplex::new(&r, vec![m0, m1], None).unwrap();
        assert!(c.d_squared_zero().unwrap());
        assert!(!c.is_minimal());
        c.minimize();
        assert!(c.is_minimal());
        assert_eq!(c.ranks(), vec![1, 2, 1]);
        assert!(c.d_squared_zero().unwrap());
    }

    #[test]
    fn corrupted_sign_breaks_d_squared() {
        let i = ideal(3, "x0, x1, x2");
        let (mut c, _) = minimal_resolution(&i).unwrap();
        assert!(c.d_squared_zero().unwrap());
        let e = c.maps_mut()[1].entries_mut();
        let (r, col) = (0..e.len())
            .flat_map(|r| (0..e[0].len()).map(move |j| (r, j)))
            .find(|&(r, j)| !e[r][j].is_zero())
            .unwrap();
        e[r][col] = e[r][col].neg();
        assert!(!c.d_squared_zero().unwrap());
    }

    #[test]
    fn strand_complex_of_twisted_cubic_square() {
        let i = ideal(4, "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2");
        let p = Presentation::from_ideal(&i).unwrap();
        assert_eq!(p.generators().len(), 3);
        assert_eq!(p.phi().cols(), 2);
        let c = power_complex(&p, 2).unwrap();
        assert_eq!(c.ranks(), vec![1, 6, 6, 1]);
        assert_eq!(c.ranks()[1..], [6, 6, 1].map(|k| k as usize));
        let sq = i.power(2).unwrap();
        let report = c.verify(&sq).unwrap();
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn strand_complex_rejects_non_minimal_presentation() {
        let r = GradedRing::projective(2);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let one = Polynomial::one(&r);
        let dv = DegreeVector::single;
        let phi = ModuleMap::new(
            &r,
            FreeModule::new(vec![dv(1)]),
            FreeModule::new(vec![dv(1), dv(1)]),
            vec![vec![one.clone()], vec![one.neg()]],
        )
        .unwrap();
        let p = Presentation::new(phi, vec![x.clone(), x.clone()]).unwrap();
        assert!(power_complex(&p, 2).is_err());
        let bad = ModuleMap::new(
            &r,
            FreeModule::new(vec![dv(2)]),
            FreeModule::new(vec![dv(1), dv(1)]),
            vec![vec![x.clone()], vec![y.clone()]],
        )
        .unwrap();
        assert!(Presentation::new(bad, vec![x, y]).is_err());
    }

    #[test]
    fn hypotheses_for_points() {
        let mut i = ideal(4, "x0*x2 - x1^2, x0*x3 - x1*x2, x1*x3 - x2^2");
        i.tags_mut().lci = Certainty::Asserted;
        let r = power_resolution_hypotheses(&i, 2, false).unwrap();
        assert!(r.passes(), "{:?}", r.failures());
        let mut fat = ideal(3, "x0^3, x0^2*x1, x0*x1^2, x1^3");
        fat.tags_mut().lci = Certainty::Asserted;
        let r = power_resolution_hypotheses(&fat, 3, false).unwrap();
        assert!(r.codim_two && r.acm);
        assert!(!r.inequality);
        assert!(!r.passes());
        let j = ideal(4, "x0, x1, x2");
        assert!(!power_resolution_hypotheses(&j, 2, false).unwrap().codim_two);
    }
}
