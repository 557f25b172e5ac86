use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::polyring::Polynomial;

/// A way to compute a symbolic power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// Intersection of powers of complete-intersection components.
    Components,
    /// Saturation of the ordinary power (reduced, locally complete intersection, unmixed).
    Saturation,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Components => "components",
            Route::Saturation => "saturation",
        })
    }
}

/// Which routes `symbolic_power` may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RouteHint {
    /// Every applicable route, cross-checked.
    #[default]
    All,
    Only(Route),
}

/// `sat(I^m)`. Requires the LCI and unmixed tags.
pub fn symbolic_power_saturation(ideal: &Ideal, m: u32) -> Result<Ideal> {
    if !saturation_applies(ideal) {
        return Err(Error::Refused(
            "the saturation route needs LCI and unmixed tags; use the component route".into(),
        ));
    }
    let mut out = ideal.power(m)?.saturate()?;
    out.tags_mut().provenance = format!("symbolic power {m} (saturation)");
    Ok(out)
}

/// `∩ P^{m e}` over the attached components `P` of multiplicity `e`; every
/// component must be a complete intersection.
pub fn symbolic_power_components(ideal: &Ideal, m: u32) -> Result<Ideal> {
    if m == 0 {
        return Err(Error::InvalidArgument("power exponent must be positive".into()));
    }
    let comps = ideal
        .components()
        .ok_or_else(|| Error::Refused("no component structure attached".into()))?;
    let mut powers = Vec::with_capacity(comps.len());
    for c in comps {
        if !c.ideal.tags().complete_intersection {
            return Err(Error::Refused(format!("component {} is not tagged CI", c.ideal)));
        }
        if c.ideal.ring() != ideal.ring() {
            return Err(Error::RingMismatch);
        }
        powers.push(c.ideal.power(m * c.mult)?);
    }
    let mut out = Ideal::intersect_all(&powers)?;
    out.tags_mut().provenance = format!("symbolic power {m} (components)");
    Ok(out)
}

fn saturation_applies(ideal: &Ideal) -> bool {
    ideal.tags().lci.holds() && ideal.tags().unmixed.holds()
}

fn components_apply(ideal: &Ideal) -> bool {
    ideal
        .components()
        .is_some_and(|cs| cs.iter().all(|c| c.ideal.tags().complete_intersection))
}

pub fn applicable_routes(ideal: &Ideal) -> Vec<Route> {
    let mut out = Vec::new();
    if components_apply(ideal) {
        out.push(Route::Components);
    }
    if saturation_applies(ideal) {
        out.push(Route::Saturation);
    }
    out
}

/// `I^(m)` by every permitted route; routes that disagree abort with a
/// theorem violation.
pub fn symbolic_power(ideal: &Ideal, m: u32, hint: RouteHint) -> Result<(Ideal, Vec<Route>)> {
    let routes: Vec<Route> = applicable_routes(ideal)
        .into_iter()
        .filter(|r| hint == RouteHint::All || hint == RouteHint::Only(*r))
        .collect();
    if routes.is_empty() {
        return Err(Error::Refused(format!(
            "no symbolic-power route applies to {}",
            ideal.tags().provenance
        )));
    }
    let mut result: Option<Ideal> = None;
    for r in &routes {
        let s = match r {
            Route::Components => symbolic_power_components(ideal, m)?,
            Route::Saturation => symbolic_power_saturation(ideal, m)?,
        };
        match &result {
            None => result = Some(s),
            Some(prev) => {
                if !prev.equals(&s)? {
                    return Err(Error::TheoremViolation(format!(
                        "symbolic power {m}: routes {routes:?} disagree"
                    )));
                }
            }
        }
    }
    Ok((result.expect("at least one route"), routes))
}

/// Outcome of comparing `I^(m)` with `I^m`.
#[derive(Clone, Debug)]
pub struct PowerComparison {
    pub m: u32,
    pub equal: bool,
    pub routes: Vec<Route>,
    pub symbolic: Ideal,
    pub power: Ideal,
    /// A lowest-degree element of the reduced basis of `I^(m)` outside `I^m`.
    pub witness: Option<Polynomial>,
}

impl PowerComparison {
    pub fn witness_degree(&self) -> Option<u32> {
        self.witness.as_ref().and_then(|w| w.total_degree())
    }
}

pub fn powers_equal(ideal: &Ideal, m: u32, hint: RouteHint) -> Result<PowerComparison> {
    let (symbolic, routes) = symbolic_power(ideal, m, hint)?;
    let power = ideal.power(m)?;
    if !power.is_subset(&symbolic)? {
        return Err(Error::TheoremViolation(format!(
            "power {m} is not contained in the symbolic power"
        )));
    }
    let witness = symbolic.witness_outside(&power)?;
    Ok(PowerComparison { m, equal: witness.is_none(), routes, symbolic, power, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::GradedRing;
    use crate::schemes::{fermat_ideal, point_ideal, scalars, scroll_ideal};

    #[test]
    fn complete_intersection_square() {
        let r = GradedRing::projective(4);
        let i = point_ideal(&r, &scalars(r.field(), &[0, 0, 1, 0])).unwrap();
        let c = powers_equal(&i, 2, RouteHint::All).unwrap();
        assert!(c.equal);
        assert_eq!(c.routes, vec![Route::Components, Route::Saturation]);
    }

    #[test]
    fn fermat_square_is_not_symbolic() {
        let i = fermat_ideal(3).unwrap();
        let c = powers_equal(&i, 2, RouteHint::All).unwrap();
        assert!(!c.equal);
        assert_eq!(c.routes.len(), 2);
        let w = c.witness.unwrap();
        assert!(c.symbolic.contains(&w).unwrap());
        assert!(!c.power.contains(&w).unwrap());
    }

    #[test]
    fn untagged_ideal_is_refused() {
        let r = GradedRing::projective(3);
        let i = Ideal::parse(&r, "x0*x1, x1*x2").unwrap();
        assert!(matches!(powers_equal(&i, 2, RouteHint::All), Err(Error::Refused(_))));
        let s = scroll_ideal(2).unwrap();
        assert!(symbolic_power_components(&s, 2).is_err());
    }
}
