//! Scripted re-derivations of worked examples, checked against fixtures.

use std::fmt::Write;

use serde_json::{json, Value};
use symbpow::ideals::Ideal;
use symbpow::polyring::{DegreeVector, GradedRing};
use symbpow::resolve::{minimal_resolution, power_complex, predicted_power_betti, BettiTable, Presentation};
use symbpow::schemes::{
    aci_presentation, classify_p1p1, fermat_components, fermat_ideal, ferrers_config, general_lines_p3,
    general_p1p1_points, line_ideal, linked_residual, scroll_ideal, triple_point_twists, P1P1Kind,
};
use symbpow::symbolic::{
    classify_all_powers, powers_equal, romer_check, symbolic_power_components, symbolic_power_saturation, Route,
    RouteHint,
};
use symbpow::{Error, Result};

/// Registered targets with a one-line description.
pub const TARGETS: &[(&str, &str)] = &[
    ("example-3.4", "linked residual in P^3: Betti diagrams of I and I^2, I^2 unsaturated"),
    ("example-3.4-p4", "linked residual in P^4: same diagram, I^2 saturated"),
    ("fermat-3", "Fermat configuration of 12 points: I^(2) differs from I^2"),
    ("skew-lines", "two skew lines in P^3: product equals intersection, powers symbolic"),
    ("scroll-2", "rational normal scroll: J^(2) = J^2"),
    ("triple-points-2-1", "triple points on alpha = (2,1): twist lists of the cube"),
    ("triple-points-2-2-1", "triple points on alpha = (2,2,1): twist lists of the cube"),
    ("triple-points-3-1-1", "triple points on alpha = (3,1,1): twist lists of the cube"),
    ("p1p1-classification", "CI / ACI / other verdicts for Ferrers configurations in P^1 x P^1"),
    ("strand-complexes", "strand complexes against minimal resolutions of I^m"),
    ("romer", "the Betti bound on tables of I^m"),
    ("five-lines", "stretch: 5 general lines, initial degrees 7 and 8"),
    ("five-p1p1-points", "stretch: 5 general points of P^1 x P^1, mu = 6 and I^(2) = I^2"),
];

#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    /// Shown on failure.
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct ReproReport {
    pub name: String,
    pub text: String,
    pub checks: Vec<Check>,
}

impl ReproReport {
    fn new(name: &str) -> Self {
        ReproReport { name: name.into(), text: String::new(), checks: Vec::new() }
    }

    fn check(&mut self, label: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { label: label.into(), pass, detail: detail.into() });
    }

    fn equal<T: PartialEq + std::fmt::Debug>(&mut self, label: impl Into<String>, got: T, expected: T) {
        let detail = format!("expected {expected:?}\n     got {got:?}");
        self.check(label, got == expected, detail);
    }

    fn table(&mut self, label: &str, got: &BettiTable, expected: &BettiTable) {
        let detail = format!("expected:\n{}got:\n{}", expected.format(), got.format());
        self.check(label, got == expected, detail);
    }

    fn say(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        if !self.text.ends_with('\n') {
            self.text.push('\n');
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut out = format!("== {} ==\n{}", self.name, self.text);
        for c in &self.checks {
            writeln!(out, "[{}] {}", if c.pass { "ok" } else { "FAIL" }, c.label).expect("string write");
            if !c.pass {
                for l in c.detail.lines() {
                    writeln!(out, "    {l}").expect("string write");
                }
            }
        }
        writeln!(out, "{}", if self.passed() { "PASS" } else { "FAIL" }).expect("string write");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "pass": self.passed(),
            "checks": self.checks.iter().map(|c| json!({"label": c.label, "pass": c.pass})).collect::<Vec<_>>(),
            "text": self.text,
        })
    }
}

pub fn run(name: &str, seed: u64) -> Result<ReproReport> {
    match name {
        "example-3.4" => example_34(seed),
        "example-3.4-p4" => example_34_p4(seed),
        "fermat-3" => fermat_3(),
        "skew-lines" => skew_lines(),
        "scroll-2" => scroll_2(),
        "triple-points-2-1" => triple_points(name, 2, 1, 1, 1),
        "triple-points-2-2-1" => triple_points(name, 2, 1, 2, 1),
        "triple-points-3-1-1" => triple_points(name, 3, 1, 1, 2),
        "p1p1-classification" => p1p1_classification(),
        "strand-complexes" => strand_complexes(),
        "romer" => romer(seed),
        "five-lines" => five_lines(seed),
        "five-p1p1-points" => five_p1p1_points(seed),
        other => Err(Error::InvalidArgument(format!(
            "unknown repro target `{other}`; known: {}",
            TARGETS.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", ")
        ))),
    }
}

fn fixture(rows: &[(usize, i64, usize)]) -> BettiTable {
    let mut t = BettiTable::new(1);
    for &(i, j, c) in rows {
        t.add(i, DegreeVector::single(j), c);
    }
    t
}

/// Betti diagram of the linked residual.
pub fn residual_table() -> BettiTable {
    fixture(&[(0, 0, 1), (1, 2, 4), (2, 3, 2), (2, 4, 3), (3, 5, 2)])
}

/// Betti diagram of the square of the residual in P^3.
pub fn residual_square_table() -> BettiTable {
    fixture(&[(0, 0, 1), (1, 4, 10), (2, 5, 8), (2, 6, 9), (3, 6, 1), (3, 7, 8), (4, 8, 1)])
}

fn example_34(seed: u64) -> Result<ReproReport> {
    let mut r = ReproReport::new("example-3.4");
    let lr = linked_residual(4, seed)?;
    let i = &lr.residual;
    r.say(format!("seed {} (tried {:?})", lr.seed, lr.seeds_tried));
    let hf: Vec<i64> = (0..5).map(|d| i.hilbert_function(d)).collect();
    r.equal("Hilbert function in degrees 0..4", hf, vec![1, 4, 6, 6, 6]);
    r.equal("four minimal generators", i.mu()?, 4);
    let (_, b1) = minimal_resolution(i)?;
    r.say(format!("Betti diagram of R/I:\n{}", b1.format()));
    r.table("Betti diagram of R/I", &b1, &residual_table());
    let sq = i.power(2)?;
    let (_, b2) = minimal_resolution(&sq)?;
    r.say(format!("Betti diagram of R/I^2:\n{}", b2.format()));
    r.table("Betti diagram of R/I^2", &b2, &residual_square_table());
    r.equal("I^2 is not saturated", !sq.is_saturated()?, true);
    Ok(r)
}

fn example_34_p4(seed: u64) -> Result<ReproReport> {
    let mut r = ReproReport::new("example-3.4-p4");
    let lr = linked_residual(5, seed)?;
    let i = &lr.residual;
    r.say(format!("seed {} (tried {:?})", lr.seed, lr.seeds_tried));
    let hf: Vec<i64> = (0..5).map(|d| i.hilbert_function(d) - if d > 0 { i.hilbert_function(d - 1) } else { 0 }).collect();
    r.equal("first differences of the Hilbert function", hf, vec![1, 4, 6, 6, 6]);
    let (_, b1) = minimal_resolution(i)?;
    r.say(format!("Betti diagram of R/I:\n{}", b1.format()));
    r.table("Betti diagram of R/I", &b1, &residual_table());
    let sq = i.power(2)?;
    let sat = symbolic_power_saturation(i, 2)?;
    r.equal("I^2 saturated", sq.is_saturated()?, true);
    r.equal("sat(I^2) = I^2", sat.equals(&sq)?, true);
    Ok(r)
}

fn fermat_3() -> Result<ReproReport> {
    let mut r = ReproReport::new("fermat-3");
    let i = fermat_ideal(3)?;
    r.say(format!("I = {i}"));
    r.equal("three minimal generators", i.mu()?, 3);
    let comps = fermat_components()?;
    let meet = Ideal::intersect_all(&comps)?;
    r.equal("intersection of the components is I", meet.equals(&i)?, true);
    r.equal("12 points", i.hilbert_function(20), 12);
    let sat = symbolic_power_saturation(&i, 2)?;
    let comp = symbolic_power_components(&i, 2)?;
    r.equal("routes agree on I^(2)", sat.equals(&comp)?, true);
    let c = powers_equal(&i, 2, RouteHint::All)?;
    r.equal("I^(2) = I^2", c.equal, false);
    match &c.witness {
        Some(w) => r.say(format!("witness of degree {}: {w}", w.total_degree().unwrap_or(0))),
        None => r.check("witness produced", false, "no witness"),
    }
    Ok(r)
}

fn skew_lines() -> Result<ReproReport> {
    let mut r = ReproReport::new("skew-lines");
    let ring = GradedRing::projective(4);
    let x = |k| symbpow::polyring::Polynomial::var(&ring, k);
    let l1 = line_ideal(&ring, &x(0), &x(1))?;
    let l2 = line_ideal(&ring, &x(2), &x(3))?;
    let i = symbpow::schemes::lines_p3_ideal(&ring, &[(x(0), x(1)), (x(2), x(3))])?;
    r.say(format!("I = {i}"));
    r.equal("product = intersection", l1.product(&l2)?.equals(&l1.intersect(&l2)?)?, true);
    r.equal("constructed ideal = intersection", i.equals(&l1.intersect(&l2)?)?, true);
    for m in 2..=3 {
        let c = powers_equal(&i, m, RouteHint::All)?;
        r.equal(format!("I^({m}) = I^{m} by both routes"), (c.equal, c.routes.len()), (true, 2));
    }
    Ok(r)
}

fn scroll_2() -> Result<ReproReport> {
    let mut r = ReproReport::new("scroll-2");
    let j = scroll_ideal(2)?;
    r.say(format!("J = {j}"));
    let c = powers_equal(&j, 2, RouteHint::Only(Route::Saturation))?;
    r.equal("J^(2) = J^2", c.equal, true);
    Ok(r)
}

fn triple_points(name: &str, a: usize, b: usize, c: usize, d: usize) -> Result<ReproReport> {
    let mut r = ReproReport::new(name);
    let p = aci_presentation(a, b, c, d)?;
    r.say(format!("(a,b,c,d) = ({a},{b},{c},{d}); I = {}", p.ideal()?));
    let complex = power_complex(&p, 3)?;
    let expected = triple_point_twists(a as i64, b as i64, c as i64, d as i64);
    for (k, exp) in expected.into_iter().enumerate() {
        let mut exp = exp;
        exp.sort();
        let got = complex.modules()[k + 1].sorted_twists();
        r.say(format!("F{k}: {}", got.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")));
        r.equal(format!("F{k} twists"), got, exp);
    }
    Ok(r)
}

fn p1p1_classification() -> Result<ReproReport> {
    let mut r = ReproReport::new("p1p1-classification");
    let cases: &[(&[usize], P1P1Kind)] = &[
        (&[2, 2], P1P1Kind::CompleteIntersection),
        (&[3, 3, 3], P1P1Kind::CompleteIntersection),
        (&[2, 1], P1P1Kind::AlmostCompleteIntersection),
        (&[3, 1], P1P1Kind::AlmostCompleteIntersection),
        (&[2, 2, 1], P1P1Kind::AlmostCompleteIntersection),
        (&[3, 2, 1], P1P1Kind::Other),
    ];
    for (alpha, kind) in cases {
        let config = ferrers_config(alpha, 1)?;
        let cls = classify_p1p1(&config)?;
        let report = classify_all_powers(config.ideal(), Some(3))?;
        let observed: Vec<bool> = report.verdicts.iter().map(|v| v.observed == Some(true)).collect();
        r.say(format!("alpha {}: {} mu {} powers equal {observed:?}", cls.alpha, cls.kind, cls.mu));
        r.equal(format!("alpha {:?} kind", alpha), cls.kind, *kind);
        let all = *kind != P1P1Kind::Other;
        r.equal(format!("alpha {:?} equality pattern for m = 1, 2, 3", alpha), observed, vec![true, true, all]);
        if *kind == P1P1Kind::AlmostCompleteIntersection {
            let cube = config.ideal().totalized().power(3)?;
            let (_, b) = minimal_resolution(&cube)?;
            r.equal(format!("alpha {:?} I^3 saturated, resolution length 3", alpha), (cube.is_saturated()?, b.pdim()), (true, 3));
        }
        if !all {
            r.check(format!("alpha {:?} witness", alpha), report.witness().is_some(), "no witness");
        }
    }
    Ok(r)
}

/// `(label, ideal, m)` instances where the strand complex resolves `I^m`.
pub fn strand_instances() -> Result<Vec<(String, Ideal, u32)>> {
    let mut out = vec![
        ("Fermat".to_string(), fermat_ideal(3)?, 2),
        ("scroll(2)".to_string(), scroll_ideal(2)?, 2),
    ];
    for alpha in [vec![2, 1], vec![2, 2], vec![3, 1]] {
        let i = ferrers_config(&alpha, 1)?.ideal().totalized();
        for m in [2, 3] {
            out.push((format!("alpha {alpha:?}"), i.clone(), m));
        }
    }
    Ok(out)
}

fn strand_complexes() -> Result<ReproReport> {
    let mut r = ReproReport::new("strand-complexes");
    for (label, i, m) in strand_instances()? {
        let p = Presentation::from_ideal(&i)?;
        let complex = power_complex(&p, m)?;
        let v = complex.verify(&i.power(m)?)?;
        let d = p.generators().len() as u64;
        let ranks: Vec<u64> = complex.ranks().iter().skip(1).map(|&k| k as u64).collect();
        let formula: Vec<u64> =
            (1..=ranks.len() as u64).map(|k| predicted_power_betti(d, m as u64, k)).collect();
        r.say(format!("{label}, m = {m}: ranks {ranks:?}"));
        r.check(format!("{label} m = {m} verifies"), v.all_pass(), format!("{v:?}"));
        r.equal(format!("{label} m = {m} ranks"), ranks, formula);
    }
    Ok(r)
}

fn romer(seed: u64) -> Result<ReproReport> {
    let mut r = ReproReport::new("romer");
    let mut tables: Vec<(String, BettiTable)> = Vec::new();
    let lr = linked_residual(4, seed)?;
    for m in 1..=2 {
        tables.push((format!("residual, m = {m}"), minimal_resolution(&lr.residual.power(m)?)?.1));
    }
    for (label, i, m) in strand_instances()? {
        if m == 2 {
            tables.push((format!("{label}, m = 1"), minimal_resolution(&i)?.1));
        }
        tables.push((format!("{label}, m = {m}"), minimal_resolution(&i.power(m)?)?.1));
    }
    for (label, t) in tables {
        let rep = romer_check(&t)?;
        let margins: Vec<String> = rep.rows.iter().map(|row| row.margin.to_string()).collect();
        r.say(format!("{label}: M = {:?}, margins {margins:?}", rep.maxima));
        r.check(format!("{label} bound holds"), rep.holds(), format!("violations at {:?}", rep.violations()));
    }
    Ok(r)
}

fn five_lines(seed: u64) -> Result<ReproReport> {
    let mut r = ReproReport::new("five-lines");
    let i = general_lines_p3(5, seed)?;
    let sym = symbolic_power_components(&i, 2)?;
    let sq = i.power(2)?;
    r.equal("initial degree of I^(2)", sym.initial_degree()?, 7);
    r.equal("initial degree of I^2", sq.initial_degree()?, 8);
    Ok(r)
}

fn five_p1p1_points(seed: u64) -> Result<ReproReport> {
    let mut r = ReproReport::new("five-p1p1-points");
    let config = general_p1p1_points(5, seed)?;
    let i = config.ideal().totalized();
    r.equal("six minimal generators", i.mu()?, 6);
    let cls = classify_p1p1(&config)?;
    r.equal("not ACM", cls.kind, P1P1Kind::NotAcm);
    let c = powers_equal(&i, 2, RouteHint::All)?;
    r.equal("I^(2) = I^2", c.equal, true);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_expected_totals() {
        assert_eq!(residual_table().totals(), vec![1, 4, 5, 2]);
        assert_eq!(residual_square_table().totals(), vec![1, 10, 17, 9, 1]);
    }

    #[test]
    fn unknown_target() {
        assert!(matches!(run("nope", 1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn quick_targets_pass() {
        for name in ["fermat-3", "skew-lines", "scroll-2", "triple-points-2-1"] {
            let rep = run(name, 1).unwrap();
            assert!(rep.passed(), "{}", rep.render());
        }
    }
}
