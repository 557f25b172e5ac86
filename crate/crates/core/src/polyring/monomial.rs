use std::fmt;

/// Largest number of variables a ring may have, auxiliary variables included.
pub const MAX_VARS: usize = 16;

/// An exponent vector. Unused slots beyond the ring's variable count are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS], deg: 0 };

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u16) -> Self {
        let mut m = Self::ONE;
        m.exps[i] = e;
        m.deg = e as u32;
        m
    }

    /// Panics if more than `MAX_VARS` exponents are given or one overflows `u16`.
    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Self::ONE;
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
            m.deg += e;
        }
        m
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    /// Plain sum of exponents.
    #[inline]
    pub fn total_degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Self) -> Self {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = m.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        m.deg += other.deg;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] -= other.exps[i];
        }
        m.deg -= other.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut m = Self::ONE;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut m = Self::ONE;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].min(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Quotient by the largest power of `x_i` dividing the monomial.
    pub fn strip_var(&self, i: usize) -> (Self, u16) {
        let mut m = *self;
        let e = m.exps[i];
        m.exps[i] = 0;
        m.deg -= e as u32;
        (m, e)
    }

    /// A 64-bit signature such that `a | b` implies `mask(a) & !mask(b) == 0`.
    #[inline]
    pub fn divmask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            let bits = match e {
                0 => 0u64,
                1 => 0b0001,
                2..=3 => 0b0011,
                4..=7 => 0b0111,
                _ => 0b1111,
            };
            mask |= bits << (4 * i);
        }
        mask
    }

    /// Exponents reindexed by `map[i]` = target slot of source variable `i`.
    pub fn remap(&self, map: &[usize]) -> Self {
        let mut m = Self::ONE;
        for (i, &t) in map.iter().enumerate() {
            m.exps[t] = self.exps[i];
        }
        m.deg = self.deg;
        debug_assert_eq!(m.exps.iter().map(|&e| e as u32).sum::<u32>(), m.deg);
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// All monomials in `nvars` variables whose weighted degree is exactly `target`,
/// in no particular order.
pub fn monomials_of_weight(weights: &[u32], target: u32) -> Vec<Monomial> {
    fn rec(weights: &[u32], i: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if i == weights.len() {
            if left == 0 {
                out.push(*cur);
            }
            return;
        }
        let w = weights[i];
        if i + 1 == weights.len() {
            if w == 0 {
                if left == 0 {
                    out.push(*cur);
                }
            } else if left % w == 0 {
                let e = left / w;
                cur.exps[i] = e as u16;
                cur.deg += e;
                out.push(*cur);
                cur.deg -= e;
                cur.exps[i] = 0;
            }
            return;
        }
        let max = if w == 0 { 0 } else { left / w };
        for e in 0..=max {
            cur.exps[i] = e as u16;
            cur.deg += e;
            rec(weights, i + 1, left - e * w, cur, out);
            cur.deg -= e;
        }
        cur.exps[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = Monomial::ONE;
    rec(weights, 0, target, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(&[2, 1, 0]);
        let b = Monomial::from_exponents(&[3, 1, 4]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.div(&a), Some(Monomial::from_exponents(&[1, 0, 4])));
        assert_eq!(a.lcm(&Monomial::from_exponents(&[0, 2, 1])), Monomial::from_exponents(&[2, 2, 1]));
        assert_eq!(a.gcd(&b), a);
        assert!(Monomial::var(0).is_coprime(&Monomial::var(1)));
    }

    #[test]
    fn divmask_is_necessary_condition() {
        let ms: Vec<Monomial> = (0..60)
            .map(|k| Monomial::from_exponents(&[k % 5, (k / 5) % 3, k % 9, k / 20]))
            .collect();
        for a in &ms {
            for b in &ms {
                if a.divides(b) {
                    assert_eq!(a.divmask() & !b.divmask(), 0);
                }
            }
        }
    }

    #[test]
    fn monomial_enumeration_counts() {
        // C(d + n - 1, n - 1) monomials of degree d in n variables
        assert_eq!(monomials_of_weight(&[1, 1, 1, 1], 3).len(), 20);
        assert_eq!(monomials_of_weight(&[1, 1, 1], 0).len(), 1);
        assert_eq!(monomials_of_weight(&[2, 1], 4).len(), 3);
    }
}
