//! The base-field scalar: a rational, or an element of a cyclotomic field.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::cyclotomic::Cyclotomic;
use super::rational::Rational;

/// Exact field element. Values with no irrational part are always stored as
/// [`Scalar::Rat`], so the rational fast path is taken whenever possible.
#[derive(Clone)]
pub enum Scalar {
    Rat(Rational),
    Cyc(Cyclotomic),
}

impl Scalar {
    pub const ZERO: Scalar = Scalar::Rat(Rational::ZERO);
    pub const ONE: Scalar = Scalar::Rat(Rational::ONE);

    pub fn zero() -> Self {
        Self::ZERO
    }

    pub fn one() -> Self {
        Self::ONE
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(Rational::from_int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rat(Rational::new(n, d))
    }

    fn normalize(c: Cyclotomic) -> Self {
        match c.as_rational() {
            Some(r) => Scalar::Rat(r),
            None => Scalar::Cyc(c),
        }
    }

    pub fn from_cyclotomic(c: Cyclotomic) -> Self {
        Self::normalize(c)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Cyc(_) => false,
        }
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Cyc(_) => false,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Cyc(_) => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    /// Conductor of the smallest cyclotomic field this value is stored in (1 for rationals).
    pub fn conductor(&self) -> u32 {
        match self {
            Scalar::Rat(_) => 1,
            Scalar::Cyc(c) => c.conductor(),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Rat(r) => r.inv().map(Scalar::Rat),
            Scalar::Cyc(c) => c.inv().map(Self::normalize),
        }
    }

    fn to_cyc_like(&self, like: &Cyclotomic) -> Cyclotomic {
        match self {
            Scalar::Rat(r) => Cyclotomic::from_rational(like.field().clone(), r.clone()),
            Scalar::Cyc(c) => c.clone(),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[inline]
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Cyc(a), b) => Scalar::normalize(a.add(&b.to_cyc_like(a))),
            (a, Scalar::Cyc(b)) => Scalar::normalize(a.to_cyc_like(b).add(b)),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[inline]
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => self + &(-rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[inline]
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Cyc(a), Scalar::Rat(b)) | (Scalar::Rat(b), Scalar::Cyc(a)) => {
                if b.is_zero() {
                    Scalar::ZERO
                } else {
                    Scalar::normalize(a.scale(b))
                }
            }
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::normalize(a.mul(b)),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a / b),
            _ => self * &rhs.inv().expect("division by zero"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Cyc(c) => Scalar::Cyc(c.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Cyc(a), Scalar::Cyc(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Scalar::Rat(r) => r.hash(state),
            // equal cyclotomic values may live in different conductors
            Scalar::Cyc(_) => 0xC1C1u16.hash(state),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A total order used only for deterministic tie-breaking: rationals in
/// numeric order, before all irrational values, which compare by their
/// coefficient vectors in a common field.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Rat(_), Scalar::Cyc(_)) => Ordering::Less,
            (Scalar::Cyc(_), Scalar::Rat(_)) => Ordering::Greater,
            (Scalar::Cyc(a), Scalar::Cyc(b)) => {
                let (a, b) = Cyclotomic::unify(a, b);
                a.coeffs().cmp(b.coeffs())
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => fmt::Display::fmt(r, f),
            Scalar::Cyc(c) => fmt::Display::fmt(c, f),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
