use serde::Serialize;
use serde_json::{json, Value};

use super::powers::{applicable_routes, powers_equal, Route, RouteHint};
use crate::error::{Error, Result};
use crate::ideals::{Certainty, Ideal};
use crate::polyring::Polynomial;
use crate::resolve::{is_acm, power_complex, Presentation};

/// Hypotheses of the classification: codimension two, ACM, LCI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationHypotheses {
    /// Projective dimension of the ambient space.
    pub n: usize,
    pub codimension: usize,
    pub acm: bool,
    pub lci: Certainty,
    pub unmixed: Certainty,
    pub failures: Vec<String>,
}

impl ClassificationHypotheses {
    pub fn hold(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Result for one exponent.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub m: u32,
    pub predicted: Option<bool>,
    pub observed: Option<bool>,
    pub routes: Vec<Route>,
    pub witness: Option<Polynomial>,
}

impl Verdict {
    /// Observed if computed, otherwise predicted.
    pub fn equal(&self) -> Option<bool> {
        self.observed.or(self.predicted)
    }

    pub fn status(&self) -> &'static str {
        match (self.observed, self.predicted) {
            (Some(true), _) => "equal",
            (Some(false), _) => "unequal",
            (None, Some(_)) => "predicted-only",
            (None, None) => "undetermined",
        }
    }

    fn to_json(&self) -> Value {
        let mut v = json!({
            "m": self.m,
            "equal": self.equal(),
            "status": self.status(),
            "predicted": self.predicted,
            "observed": self.observed,
            "routes": self.routes,
        });
        if let Some(w) = &self.witness {
            v["witness"] = json!(w.to_string());
            v["witness_degree"] = json!(w.total_degree());
        }
        v
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub hypotheses: ClassificationHypotheses,
    pub mu: usize,
    pub verdicts: Vec<Verdict>,
    /// Length of the strand complex at `m = n`, checked when the prediction
    /// says `I^(n) ≠ I^n`.
    pub unsaturated_signature: Option<usize>,
}

impl ClassificationReport {
    /// Predicted to agree with ordinary powers for every `m`.
    pub fn predicts_all_equal(&self) -> bool {
        self.hypotheses.hold() && self.mu <= self.hypotheses.n
    }

    /// The first witness, by increasing `m`.
    pub fn witness(&self) -> Option<&Polynomial> {
        self.verdicts.iter().find_map(|v| v.witness.as_ref())
    }

    pub fn verdict(&self, m: u32) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.m == m)
    }

    pub fn all_observed_equal(&self) -> bool {
        self.verdicts.iter().all(|v| v.observed == Some(true))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "hypotheses": self.hypotheses,
            "mu": self.mu,
            "predicts_all_equal": self.predicts_all_equal(),
            "verdicts": self.verdicts.iter().map(Verdict::to_json).collect::<Vec<_>>(),
            "witness": self.witness().map(|w| w.to_string()),
            "unsaturated_signature": self.unsaturated_signature,
        })
    }
}

/// What the classification predicts for `I^(m) = I^m`, or `None` when it is
/// silent.
pub fn predicted_equality(hypotheses_hold: bool, mu: usize, n: usize, m: u32) -> Option<bool> {
    if !hypotheses_hold {
        return None;
    }
    let m = m as usize;
    if mu <= n || m < n {
        Some(true)
    } else if m == n {
        Some(false)
    } else {
        None
    }
}

pub fn classification_hypotheses(ideal: &Ideal) -> Result<ClassificationHypotheses> {
    let n = ideal.ring().nvars() - 1;
    let codimension = ideal.codimension()?;
    let acm = is_acm(ideal)?;
    let tags = ideal.tags();
    let mut failures = Vec::new();
    if codimension != 2 {
        failures.push(format!("codimension is {codimension}, not 2"));
    }
    if !acm {
        failures.push("not ACM".into());
    }
    if !tags.lci.holds() {
        failures.push(format!("LCI is {}", tags.lci));
    }
    Ok(ClassificationHypotheses { n, codimension, acm, lci: tags.lci, unmixed: tags.unmixed, failures })
}

/// Evaluate the hypotheses, predict, and observe `I^(m)` against `I^m` for
/// `m = 1..=max_m` (default `min(n, 3)`). Bigraded input is totalized first.
pub fn classify_all_powers(ideal: &Ideal, max_m: Option<u32>) -> Result<ClassificationReport> {
    let ideal = ideal.totalized();
    if !ideal.is_saturated()? {
        return Err(Error::InvalidArgument("classification needs a saturated ideal".into()));
    }
    let hypotheses = classification_hypotheses(&ideal)?;
    let n = hypotheses.n;
    let max_m = max_m.unwrap_or(n.min(3) as u32);
    if max_m == 0 {
        return Err(Error::InvalidArgument("max_m must be positive".into()));
    }
    let mu = ideal.mu()?;
    let observable = !applicable_routes(&ideal).is_empty();
    let mut verdicts = Vec::new();
    for m in 1..=max_m {
        let predicted = predicted_equality(hypotheses.hold(), mu, n, m);
        let (observed, routes, witness) = if observable {
            let c = powers_equal(&ideal, m, RouteHint::All)?;
            (Some(c.equal), c.routes, c.witness)
        } else {
            (None, Vec::new(), None)
        };
        if let (Some(p), Some(o)) = (predicted, observed) {
            if p != o {
                return Err(Error::TheoremViolation(format!(
                    "m = {m}: predicted {} but observed {}",
                    if p { "equal" } else { "unequal" },
                    if o { "equal" } else { "unequal" }
                )));
            }
        }
        verdicts.push(Verdict { m, predicted, observed, routes, witness });
    }
    let unsaturated_signature = unsaturated_signature(&ideal, &hypotheses, mu, &verdicts)?;
    Ok(ClassificationReport { hypotheses, mu, verdicts, unsaturated_signature })
}

/// When `I^(n) ≠ I^n` is observed under the hypotheses, the strand complex of
/// `I^n` must have length `n + 1`, so `I^n` has depth zero.
fn unsaturated_signature(
    ideal: &Ideal,
    h: &ClassificationHypotheses,
    mu: usize,
    verdicts: &[Verdict],
) -> Result<Option<usize>> {
    let n = h.n as u32;
    let Some(v) = verdicts.iter().find(|v| v.m == n) else { return Ok(None) };
    if !h.hold() || mu <= h.n || v.observed != Some(false) {
        return Ok(None);
    }
    let complex = power_complex(&Presentation::from_ideal(ideal)?, n)?;
    let length = complex.length();
    if length != h.n + 1 {
        return Err(Error::TheoremViolation(format!(
            "I^{n} differs from its symbolic power but its resolution has length {length}"
        )));
    }
    Ok(Some(length))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schemes::fermat_ideal;

    #[test]
    fn predictions() {
        assert_eq!(predicted_equality(true, 3, 3, 3), Some(true));
        assert_eq!(predicted_equality(true, 4, 3, 2), Some(true));
        assert_eq!(predicted_equality(true, 4, 3, 3), Some(false));
        assert_eq!(predicted_equality(true, 4, 3, 4), None);
        assert_eq!(predicted_equality(false, 2, 3, 1), None);
    }

    #[test]
    fn fermat_classification() {
        let r = classify_all_powers(&fermat_ideal(3).unwrap(), None).unwrap();
        assert!(r.hypotheses.hold());
        assert_eq!(r.mu, 3);
        assert_eq!(r.verdicts.len(), 2);
        assert_eq!(r.verdict(1).unwrap().observed, Some(true));
        assert_eq!(r.verdict(2).unwrap().observed, Some(false));
        assert!(r.witness().is_some());
        assert_eq!(r.unsaturated_signature, Some(3));
        let j = r.to_json();
        assert_eq!(j["mu"], 3);
        assert_eq!(j["verdicts"][1]["equal"], false);
    }
}
