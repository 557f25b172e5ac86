//! Homogeneous ideals: arithmetic, intersections, colons, saturation,
//! elimination, Hilbert series and minimal generators.

mod hilbert;
mod linalg;
mod mingens;
mod ops;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{
    buchberger, normal_form_poly, FreeModuleElement, GroebnerBasis, ModuleOrder,
};
use crate::polyring::{parse_generators, GradedRing, MonomialOrder, Polynomial};

pub use hilbert::{count_monomials, HilbertSeries};
pub(crate) use linalg::Echelon;
pub use mingens::MinGenerators;

/// How much is known about a structural property.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Certainty {
    /// Guaranteed by construction.
    True,
    /// Claimed by the caller or by a cited geometric fact, not recomputed.
    Asserted,
    Unknown,
    False,
}

impl Certainty {
    /// True or asserted.
    pub fn holds(self) -> bool {
        matches!(self, Certainty::True | Certainty::Asserted)
    }
}

impl fmt::Display for Certainty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Certainty::True => "true",
            Certainty::Asserted => "asserted",
            Certainty::Unknown => "unknown",
            Certainty::False => "false",
        };
        f.write_str(s)
    }
}

/// Metadata set by constructors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealTags {
    pub radical: Certainty,
    pub lci: Certainty,
    pub unmixed: Certainty,
    /// Generated by a regular sequence.
    pub complete_intersection: bool,
    pub provenance: String,
}

impl Default for IdealTags {
    fn default() -> Self {
        IdealTags {
            radical: Certainty::Unknown,
            lci: Certainty::Unknown,
            unmixed: Certainty::Unknown,
            complete_intersection: false,
            provenance: "user".into(),
        }
    }
}

/// A primary component `P^mult` of a configuration, with `P` a complete
/// intersection.
#[derive(Clone, Debug)]
pub struct Component {
    pub ideal: Ideal,
    pub mult: u32,
}

/// A homogeneous ideal. Generators are nonzero and homogeneous; reduced
/// Groebner bases are cached per monomial order and shared between clones.
#[derive(Clone)]
pub struct Ideal {
    ring: GradedRing,
    gens: Vec<Polynomial>,
    tags: IdealTags,
    components: Option<Arc<Vec<Component>>>,
    cache: Arc<RwLock<HashMap<MonomialOrder, GroebnerBasis>>>,
}

impl Ideal {
    pub fn new(ring: &GradedRing, gens: Vec<Polynomial>) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            g.multidegree()?;
            kept.push(g);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: kept,
            tags: IdealTags::default(),
            components: None,
            cache: Arc::default(),
        })
    }

    pub fn parse(ring: &GradedRing, text: &str) -> Result<Self> {
        Self::new(ring, parse_generators(text, ring)?)
    }

    pub fn zero(ring: &GradedRing) -> Self {
        Self::new(ring, Vec::new()).expect("empty ideal")
    }

    pub fn unit(ring: &GradedRing) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)]).expect("unit ideal")
    }

    /// The irrelevant ideal generated by all variables.
    pub fn irrelevant(ring: &GradedRing) -> Self {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        let mut i = Self::new(ring, gens).expect("variables are homogeneous");
        i.tags.complete_intersection = true;
        i.tags.provenance = "irrelevant ideal".into();
        i
    }

    /// A fresh ideal with the same ring and the given generators, no tags.
    pub(crate) fn derived(&self, gens: Vec<Polynomial>) -> Result<Self> {
        Self::new(&self.ring, gens)
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn tags(&self) -> &IdealTags {
        &self.tags
    }

    pub fn with_tags(mut self, tags: IdealTags) -> Self {
        self.tags = tags;
        self
    }

    pub fn tags_mut(&mut self) -> &mut IdealTags {
        &mut self.tags
    }

    pub fn components(&self) -> Option<&[Component]> {
        self.components.as_deref().map(|v| v.as_slice())
    }

    pub fn with_components(mut self, comps: Vec<Component>) -> Self {
        self.components = Some(Arc::new(comps));
        self
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The same ideal in the standard grading; tags and components carry over.
    pub fn totalized(&self) -> Ideal {
        let ring = self.ring.totalized();
        if ring == self.ring {
            return self.clone();
        }
        let gens = self.gens.iter().map(|g| g.reorder(&ring)).collect();
        let mut out = Ideal::new(&ring, gens).expect("totalizing keeps generators homogeneous");
        out.tags = self.tags.clone();
        out.components = self.components.as_ref().map(|cs| {
            Arc::new(cs.iter().map(|c| Component { ideal: c.ideal.totalized(), mult: c.mult }).collect())
        });
        out
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Reduced Groebner basis under the ring's own order.
    pub fn gb(&self) -> GroebnerBasis {
        self.gb_for(self.ring.order())
    }

    /// Reduced Groebner basis under `order`; the basis lives in the ring with
    /// that order.
    pub fn gb_for(&self, order: MonomialOrder) -> GroebnerBasis {
        if let Some(gb) = self.cache.read().expect("cache lock").get(&order) {
            return gb.clone();
        }
        let ring = if order == self.ring.order() {
            self.ring.clone()
        } else {
            self.ring.with_order(order).expect("valid order")
        };
        let mo = ModuleOrder::ideal(&ring);
        let gens: Vec<FreeModuleElement> = self
            .gens
            .iter()
            .map(|g| FreeModuleElement::from_polynomial(&mo, &g.reorder(&ring), 0))
            .collect();
        let gb = buchberger(&gens, &mo).expect("rank-one input is valid");
        self.cache.write().expect("cache lock").insert(order, gb.clone());
        gb
    }

    /// Record a basis known to be the reduced basis under the ambient order.
    pub(crate) fn seed_gb(&self, polys: Vec<Polynomial>) {
        let mo = ModuleOrder::ideal(&self.ring);
        let mut elems: Vec<FreeModuleElement> =
            polys.iter().map(|p| FreeModuleElement::from_polynomial(&mo, &p.monic(), 0)).collect();
        elems.sort_by(|a, b| mo.compare_terms(a.lead().expect("nonzero"), b.lead().expect("nonzero")));
        let gb = GroebnerBasis::from_elements(&mo, elems);
        self.cache.write().expect("cache lock").insert(self.ring.order(), gb);
    }

    /// The reduced basis as polynomials in this ring.
    pub fn gb_polys(&self) -> Vec<Polynomial> {
        self.gb().polynomials()
    }

    /// Ideal membership.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(normal_form_poly(f, &self.gb())?.is_zero())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form_poly(f, &self.gb())
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of reduced Groebner bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.gb_polys() == other.gb_polys())
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_everything()
    }

    /// The first element of the reduced basis of `self` outside `other`, by
    /// increasing degree then increasing leading term.
    pub fn witness_outside(&self, other: &Ideal) -> Result<Option<Polynomial>> {
        self.check_ring(other)?;
        let mut gb = self.gb_polys();
        gb.sort_by_key(|p| p.total_degree().unwrap_or(0));
        for g in gb {
            if !other.contains(&g)? {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}
