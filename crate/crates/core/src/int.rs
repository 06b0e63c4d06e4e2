//! Integer coefficients with an `i64` fast path that promotes to `BigInt` on overflow.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    fn norm(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(v) => *v < 0,
            Int::Big(b) => b.sign() == num_bigint::Sign::Minus,
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Int::Small(v) => Some(*v),
            Int::Big(_) => None,
        }
    }

    pub fn add(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(c) = a.checked_add(*b) {
                return Int::Small(c);
            }
        }
        Int::norm(self.to_bigint() + o.to_bigint())
    }

    pub fn sub(&self, o: &Int) -> Int {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let Some(c) = a.checked_mul(*b) {
                return Int::Small(c);
            }
        }
        Int::norm(self.to_bigint() * o.to_bigint())
    }

    pub fn neg(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::Big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::norm(-b),
        }
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Exact quotient, `None` when `o` does not divide `self`.
    pub fn div_exact(&self, o: &Int) -> Option<Int> {
        if o.is_zero() {
            return None;
        }
        if let (Int::Small(a), Int::Small(b)) = (self, o) {
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                return if r == 0 { Some(Int::Small(q)) } else { None };
            }
        }
        let (a, b) = (self.to_bigint(), o.to_bigint());
        let r = &a % &b;
        if r.is_zero() {
            Some(Int::norm(a / b))
        } else {
            None
        }
    }

    pub fn pow(&self, e: u32) -> Int {
        let mut acc = Int::ONE;
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Self {
        Int::norm(b)
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Int {
    fn cmp(&self, o: &Self) -> Ordering {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_bigint().cmp(&o.to_bigint()),
        }
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl FromStr for Int {
    type Err = num_bigint::ParseBigIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Int::norm(BigInt::from_str(s)?))
    }
}

/// Generalized binomial coefficient `C(c, k)` for integer `c` and `k >= 0`.
pub fn binom(c: i64, k: u32) -> Int {
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for t in 0..k as i64 {
        num *= c - t;
        den *= t + 1;
    }
    Int::norm(num / den)
}

/// `C(c + k - 1, k)`, the number of size-k multisets from c letters; negative `c` is allowed.
pub fn multichoose(c: i64, k: u32) -> Int {
    binom(c + k as i64 - 1, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes() {
        let a = Int::Small(i64::MAX);
        let b = a.add(&Int::ONE);
        assert!(matches!(b, Int::Big(_)));
        assert_eq!(b.sub(&Int::ONE), a);
        let sq = a.mul(&a);
        assert_eq!(sq.div_exact(&a), Some(a.clone()));
        assert_eq!(Int::Small(i64::MIN).neg().to_string(), "9223372036854775808");
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), Int::Small(10));
        assert_eq!(binom(-2, 3), Int::Small(-4));
        assert_eq!(binom(2, 3), Int::Small(0));
        assert_eq!(multichoose(3, 2), Int::Small(6));
        assert_eq!(multichoose(-2, 2), Int::Small(1));
        assert_eq!(multichoose(0, 0), Int::Small(1));
    }
}
