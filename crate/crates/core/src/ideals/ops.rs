use super::Ideal;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, FreeModuleElement, ModuleOrder};
use crate::polyring::{GradedRing, MonomialOrder, Polynomial};

/// Iteration cap for general saturation fixpoints.
pub const SATURATION_CAP: usize = 50;

/// Reduced basis in `ring` (whatever its order) of the ideal generated by `gens`.
fn gb_in(ring: &GradedRing, gens: &[Polynomial]) -> Vec<Polynomial> {
    let mo = ModuleOrder::ideal(ring);
    let elems: Vec<FreeModuleElement> =
        gens.iter().map(|g| FreeModuleElement::from_polynomial(&mo, g, 0)).collect();
    buchberger(&elems, &mo).expect("rank-one input is valid").polynomials()
}

impl Ideal {
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        self.derived(gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        self.derived(gens)
    }

    /// `I^m`, formed from a minimal generating set.
    pub fn power(&self, m: u32) -> Result<Ideal> {
        if m == 0 {
            return Err(Error::InvalidArgument("power exponent must be positive".into()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let base = self.min_generators()?.generators;
        let mut prods: Vec<(usize, Polynomial)> =
            base.iter().enumerate().map(|(k, g)| (k, g.clone())).collect();
        for _ in 1..m {
            let mut next = Vec::with_capacity(prods.len() * base.len());
            for (last, p) in &prods {
                for (k, g) in base.iter().enumerate().skip(*last) {
                    next.push((k, p.mul(g)));
                }
            }
            prods = next;
        }
        let mut out = self.derived(prods.into_iter().map(|(_, p)| p).collect())?;
        out.tags.provenance = format!("power {m}");
        Ok(out)
    }

    /// Intersection of a nonempty list of ideals over one ring, folded left.
    pub fn intersect_all(ideals: &[Ideal]) -> Result<Ideal> {
        let (first, rest) = ideals
            .split_first()
            .ok_or_else(|| Error::InvalidArgument("nothing to intersect".into()))?;
        let mut acc = first.clone();
        for i in rest {
            acc = acc.intersect(i)?;
        }
        Ok(acc)
    }

    /// `I ∩ J` by eliminating `t` from `t I + (1 - t) J`. The auxiliary
    /// variable has degree zero so the computation stays homogeneous.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let aux = self.ring.with_aux_front(1)?;
        let n = self.ring.nvars();
        let shift: Vec<usize> = (1..=n).collect();
        let t = Polynomial::var(&aux, 0);
        let one_minus_t = Polynomial::one(&aux).sub(&t);
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for g in &self.gens {
            gens.push(g.map_to(&aux, &shift).mul(&t));
        }
        for g in &other.gens {
            gens.push(g.map_to(&aux, &shift).mul(&one_minus_t));
        }
        let back: Vec<usize> = std::iter::once(usize::MAX).chain(0..n).collect();
        let mut out = Vec::new();
        for g in gb_in(&aux, &gens) {
            let lead = g.leading_monomial().expect("nonzero");
            if lead.exponent(0) == 0 {
                out.push(unshift(&g, &self.ring, &back)?);
            }
        }
        let result = self.derived(out.clone())?;
        if self.ring.order() == MonomialOrder::Grevlex {
            result.seed_gb(out);
        }
        Ok(result)
    }

    /// `I : x_i` and `I : x_i^∞` through a grevlex basis with `x_i` last.
    fn colon_variable(&self, i: usize, saturate: bool) -> Result<Ideal> {
        let n = self.ring.nvars();
        let perm: Vec<usize> = (0..n)
            .map(|k| match k.cmp(&i) {
                std::cmp::Ordering::Less => k,
                std::cmp::Ordering::Equal => n - 1,
                std::cmp::Ordering::Greater => k - 1,
            })
            .collect();
        let pring = self.ring.permuted(&perm, MonomialOrder::Grevlex);
        let mut inv = vec![0; n];
        for (k, &p) in perm.iter().enumerate() {
            inv[p] = k;
        }
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.map_to(&pring, &perm)).collect();
        let mut out = Vec::new();
        for g in gb_in(&pring, &gens) {
            let e = g.terms().iter().map(|(_, m)| m.exponent(n - 1)).min().unwrap_or(0);
            let e = if saturate { e } else { e.min(1) };
            let d = Polynomial::var(&pring, n - 1).pow(e as u32);
            let q = g.div_exact(&d).expect("variable power divides");
            out.push(q.map_to(&self.ring, &inv));
        }
        self.derived(out)
    }

    /// `I : g` for a single nonzero polynomial.
    pub fn colon_poly(&self, g: &Polynomial) -> Result<Ideal> {
        if g.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::InvalidArgument("colon by the zero polynomial".into()));
        }
        if g.is_unit() {
            return Ok(self.clone());
        }
        if g.is_monomial() {
            let m = *g.leading_monomial().expect("nonzero");
            let mut cur = self.clone();
            for i in 0..self.ring.nvars() {
                for _ in 0..m.exponent(i) {
                    cur = cur.colon_variable(i, false)?;
                }
            }
            return Ok(cur);
        }
        let principal = self.derived(vec![g.clone()])?;
        let meet = self.intersect(&principal)?;
        let mut out = Vec::new();
        for h in meet.gb_polys() {
            out.push(h.div_exact(g).ok_or_else(|| {
                Error::InvariantViolation("intersection element not divisible by g".into())
            })?);
        }
        self.derived(out)
    }

    /// `I : J`, the intersection of `I : g` over the generators of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if other.is_zero() {
            return Err(Error::InvalidArgument("colon by the zero ideal".into()));
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let q = self.colon_poly(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => {
                    if a.is_subset(&q)? {
                        a
                    } else if q.is_subset(&a)? {
                        q
                    } else {
                        a.intersect(&q)?
                    }
                }
            });
        }
        Ok(acc.expect("nonempty"))
    }

    /// `I : x_i^∞`.
    pub fn saturate_variable(&self, i: usize) -> Result<Ideal> {
        self.colon_variable(i, true)
    }

    /// Saturation by the irrelevant ideal, `∩_i (I : x_i^∞)`.
    pub fn saturate(&self) -> Result<Ideal> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let mut parts = Vec::with_capacity(self.ring.nvars());
        for i in 0..self.ring.nvars() {
            let s = self.saturate_variable(i)?;
            if s.equals(self)? {
                return Ok(self.clone());
            }
            parts.push(s);
        }
        let mut acc = parts[0].clone();
        for p in &parts[1..] {
            if !acc.is_subset(p)? {
                acc = acc.intersect(p)?;
            }
        }
        Ok(acc)
    }

    /// `I : J^∞` by iterating colons until the reduced basis is stable.
    pub fn saturate_by(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if other.equals(&Ideal::irrelevant(&self.ring))? {
            return self.saturate();
        }
        let mut cur = self.clone();
        for _ in 0..SATURATION_CAP {
            let next = cur.colon(other)?;
            if next.equals(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
        Err(Error::IterationCap(SATURATION_CAP))
    }

    pub fn is_saturated(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(true);
        }
        self.colon(&Ideal::irrelevant(&self.ring))?.equals(self)
    }

    /// `I ∩ k[other variables]`, the generators free of `vars`.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        if vars.iter().any(|&v| v >= n) {
            return Err(Error::InvalidArgument("variable index out of range".into()));
        }
        let mut front: Vec<usize> = vars.to_vec();
        front.sort_unstable();
        front.dedup();
        let k = front.len();
        let mut perm = vec![0; n];
        let mut next = k;
        for i in 0..n {
            perm[i] = match front.iter().position(|&v| v == i) {
                Some(p) => p,
                None => {
                    next += 1;
                    next - 1
                }
            };
        }
        let pring = self.ring.permuted(&perm, MonomialOrder::Block(k));
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.map_to(&pring, &perm)).collect();
        let out = gb_in(&pring, &gens)
            .into_iter()
            .filter(|g| (0..k).all(|v| g.leading_monomial().expect("nonzero").exponent(v) == 0))
            .map(|g| g.map_to(&self.ring, &inv))
            .collect();
        self.derived(out)
    }
}

/// Map out of the auxiliary ring; fails if the auxiliary variable survives.
fn unshift(g: &Polynomial, ring: &GradedRing, back: &[usize]) -> Result<Polynomial> {
    if g.terms().iter().any(|(_, m)| m.exponent(0) != 0) {
        return Err(Error::InvariantViolation("auxiliary variable leaked".into()));
    }
    let map: Vec<usize> = back.iter().map(|&b| if b == usize::MAX { 0 } else { b }).collect();
    Ok(g.map_to(ring, &map))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> GradedRing {
        GradedRing::projective(4)
    }

    fn id(r: &GradedRing, s: &str) -> Ideal {
        Ideal::parse(r, s).unwrap()
    }

    #[test]
    fn power_and_product() {
        let r = p3();
        let i = id(&r, "x0, x1");
        assert!(i.power(2).unwrap().equals(&id(&r, "x0^2, x0*x1, x1^2")).unwrap());
        assert!(i.power(1).unwrap().equals(&i).unwrap());
        assert!(i.power(0).is_err());
        let skew = i.product(&id(&r, "x2, x3")).unwrap();
        let meet = i.intersect(&id(&r, "x2, x3")).unwrap();
        assert!(skew.equals(&meet).unwrap());
        assert!(meet.equals(&id(&r, "x0*x2, x0*x3, x1*x2, x1*x3")).unwrap());
    }

    #[test]
    fn intersections() {
        let r = p3();
        let a = id(&r, "x0");
        let b = id(&r, "x1");
        assert!(a.intersect(&b).unwrap().equals(&id(&r, "x0*x1")).unwrap());
        let c = id(&r, "x0^2 + x1*x2, x3");
        assert!(c.intersect(&c).unwrap().equals(&c).unwrap());
    }

    #[test]
    fn colons_and_saturation() {
        let r = GradedRing::projective(2);
        let i = id(&r, "x0^2, x0*x1");
        assert!(i.colon(&id(&r, "x0")).unwrap().equals(&id(&r, "x0, x1")).unwrap());
        assert!(i.saturate().unwrap().equals(&id(&r, "x0")).unwrap());
        assert!(i.colon(&i).unwrap().is_unit());
        assert!(i.saturate_by(&Ideal::irrelevant(&r)).unwrap().equals(&id(&r, "x0")).unwrap());
        let q = id(&r, "x0 + x1");
        assert!(i.colon(&q).unwrap().equals(&id(&r, "x0")).unwrap());
        assert!(!i.is_saturated().unwrap());
    }

    #[test]
    fn elimination() {
        let r = GradedRing::projective(3);
        let i = id(&r, "x0 - x1, x1 - x2");
        let e = i.eliminate(&[1]).unwrap();
        assert!(e.equals(&id(&r, "x0 - x2")).unwrap());
    }
}
