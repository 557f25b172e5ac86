use std::fmt;

use malachite_base::num::arithmetic::traits::{Mod, Reciprocal};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_base::num::conversion::traits::ExactFrom;
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;
use malachite_q::Rational;

use crate::error::{Error, Result};

/// Coefficient field of a ring: exact rationals or a prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    Rational,
    Prime(u32),
}

impl CoefficientField {
    /// GF(p) for an odd prime `p < 2^31`.
    pub fn prime(p: u32) -> Result<Self> {
        if p < 3 || p >= 1 << 31 || p % 2 == 0 || !is_prime(p) {
            return Err(Error::InvalidArgument(format!(
                "{p} is not an odd prime below 2^31"
            )));
        }
        Ok(CoefficientField::Prime(p))
    }

    pub fn zero(self) -> FieldScalar {
        match self {
            CoefficientField::Rational => FieldScalar::Rational(Rational::ZERO),
            CoefficientField::Prime(p) => FieldScalar::Prime { value: 0, modulus: p },
        }
    }

    pub fn one(self) -> FieldScalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> FieldScalar {
        match self {
            CoefficientField::Rational => FieldScalar::Rational(Rational::from(v)),
            CoefficientField::Prime(p) => FieldScalar::Prime {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// The image of `num / den` in this field.
    pub fn from_ratio(self, num: &Integer, den: &Natural) -> Result<FieldScalar> {
        if *den == Natural::ZERO {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        match self {
            CoefficientField::Rational => Ok(FieldScalar::Rational(Rational::from_integers_ref(
                num,
                &Integer::from(den.clone()),
            ))),
            CoefficientField::Prime(p) => {
                let modulus = Natural::from(p);
                let n_abs = num.unsigned_abs_ref().mod_op(&modulus);
                let mut n = u32::exact_from(&n_abs);
                if *num < 0 && n != 0 {
                    n = p - n;
                }
                let d = u32::exact_from(&den.mod_op(&modulus));
                if d == 0 {
                    return Err(Error::InvalidArgument(format!(
                        "denominator vanishes in GF({p})"
                    )));
                }
                let num = FieldScalar::Prime { value: n, modulus: p };
                let den = FieldScalar::Prime { value: d, modulus: p };
                Ok(num.div(&den))
            }
        }
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rational => write!(f, "QQ"),
            CoefficientField::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if p as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of the coefficient field. Rationals are kept in lowest terms
/// with positive denominator (malachite's canonical form); prime field
/// values live in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldScalar {
    Rational(Rational),
    Prime { value: u32, modulus: u32 },
}

impl FieldScalar {
    pub fn field(&self) -> CoefficientField {
        match self {
            FieldScalar::Rational(_) => CoefficientField::Rational,
            FieldScalar::Prime { modulus, .. } => CoefficientField::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => *r == Rational::ZERO,
            FieldScalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => *r == Rational::ONE,
            FieldScalar::Prime { value, .. } => *value == 1,
        }
    }

    /// True for rationals below zero. Prime field elements are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldScalar::Rational(r) => *r < Rational::ZERO,
            FieldScalar::Prime { .. } => false,
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(-r),
            FieldScalar::Prime { value, modulus } => FieldScalar::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a + b),
            (FieldScalar::Prime { value: a, modulus: p }, FieldScalar::Prime { value: b, .. }) => {
                FieldScalar::Prime {
                    value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a - b),
            _ => self.add(&other.neg()),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => FieldScalar::Rational(a * b),
            (FieldScalar::Prime { value: a, modulus: p }, FieldScalar::Prime { value: b, .. }) => {
                FieldScalar::Prime {
                    value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                    modulus: *p,
                }
            }
            _ => panic!("coefficient field mismatch"),
        }
    }

    /// `self - a * b`, the inner step of every reduction.
    pub fn sub_mul(&self, a: &Self, b: &Self) -> Self {
        match (self, a, b) {
            (FieldScalar::Rational(s), FieldScalar::Rational(a), FieldScalar::Rational(b)) => {
                FieldScalar::Rational(s - a * b)
            }
            _ => self.sub(&a.mul(b)),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            FieldScalar::Rational(r) => FieldScalar::Rational(r.reciprocal()),
            FieldScalar::Prime { value, modulus } => {
                let p = *modulus as u64;
                let mut result = 1u64;
                let mut base = *value as u64;
                let mut e = p - 2;
                while e > 0 {
                    if e & 1 == 1 {
                        result = result * base % p;
                    }
                    base = base * base % p;
                    e >>= 1;
                }
                FieldScalar::Prime { value: result as u32, modulus: *modulus }
            }
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        match (self, other) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => {
                assert!(*b != Rational::ZERO, "division by zero");
                FieldScalar::Rational(a / b)
            }
            _ => self.mul(&other.inv()),
        }
    }

    /// Integer value when the scalar is an integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            FieldScalar::Rational(r) => {
                if *r.denominator_ref() != Natural::ONE {
                    return None;
                }
                let n = i64::try_from(r.numerator_ref()).ok()?;
                Some(if *r < Rational::ZERO { -n } else { n })
            }
            FieldScalar::Prime { value, .. } => Some(*value as i64),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            FieldScalar::Rational(r) => Some(r),
            FieldScalar::Prime { .. } => None,
        }
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(r) => write!(f, "{r}"),
            FieldScalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}
