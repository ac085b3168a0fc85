//! Exact scalar rings used as matrix entries.
//!
//! Two kinds exist: the rationals (arbitrary precision, always reduced with a
//! positive denominator) and residues modulo `n`. Residues modulo a prime form
//! a field; composite moduli are only ever used for ring arithmetic, never for
//! elimination.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub trait ScalarRing: Copy + Debug + PartialEq + Eq + Hash + Send + Sync {
    type Value: Clone + Debug + PartialEq + Eq + Hash + Ord + Send + Sync;

    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    fn from_i64(&self, v: i64) -> Self::Value;
    fn add(&self, x: &Self::Value, y: &Self::Value) -> Self::Value;
    fn neg(&self, x: &Self::Value) -> Self::Value;
    fn mul(&self, x: &Self::Value, y: &Self::Value) -> Self::Value;
    /// Multiplicative inverse, `None` for zero and zero divisors.
    fn inv(&self, x: &Self::Value) -> Option<Self::Value>;
    fn is_zero(&self, x: &Self::Value) -> bool;

    fn sub(&self, x: &Self::Value, y: &Self::Value) -> Self::Value {
        self.add(x, &self.neg(y))
    }

    /// Number of scalars, `None` when infinite.
    fn cardinality(&self) -> Option<u64>;
    /// The `i`-th scalar in canonical order; only meaningful for finite rings.
    fn nth(&self, i: u64) -> Self::Value;
    /// Canonical position of a scalar of a finite ring.
    fn position(&self, x: &Self::Value) -> u64;

    fn render(&self, x: &Self::Value) -> String;
    fn parse(&self, s: &str) -> Result<Self::Value>;
}

/// A rational number. Values that fit in machine words stay there; anything
/// that overflows is promoted to arbitrary precision. The representation is
/// canonical (small whenever possible) so derived equality and hashing agree
/// with numeric equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Rational {
    fn from_big(x: BigRational) -> Self {
        match (x.numer().to_i64(), x.denom().to_i64()) {
            (Some(n), Some(d)) => Rational::Small(Ratio::new_raw(n, d)),
            _ => Rational::Big(x),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rational::Big(b) => b.clone(),
        }
    }

    fn op(
        x: &Self,
        y: &Self,
        small: impl Fn(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Self {
        if let (Rational::Small(a), Rational::Small(b)) = (x, y) {
            if let Some(r) = small(a, b) {
                return Rational::Small(r);
            }
        }
        Rational::from_big(big(x.to_big(), y.to_big()))
    }

    fn is_zero(&self) -> bool {
        match self {
            Rational::Small(r) => r.is_zero(),
            Rational::Big(b) => b.is_zero(),
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Rational::Small(a), Rational::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl ScalarRing for Rationals {
    type Value = Rational;

    fn zero(&self) -> Rational {
        Rational::Small(Ratio::zero())
    }

    fn one(&self) -> Rational {
        Rational::Small(Ratio::one())
    }

    fn from_i64(&self, v: i64) -> Rational {
        Rational::Small(Ratio::from_integer(v))
    }

    fn add(&self, x: &Rational, y: &Rational) -> Rational {
        Rational::op(x, y, |a, b| a.checked_add(b), |a, b| a + b)
    }

    fn neg(&self, x: &Rational) -> Rational {
        match x {
            Rational::Small(r) if *r.numer() != i64::MIN => Rational::Small(-r),
            _ => Rational::from_big(-x.to_big()),
        }
    }

    fn mul(&self, x: &Rational, y: &Rational) -> Rational {
        Rational::op(x, y, |a, b| a.checked_mul(b), |a, b| a * b)
    }

    fn inv(&self, x: &Rational) -> Option<Rational> {
        if x.is_zero() {
            return None;
        }
        Some(match x {
            Rational::Small(r) if *r.numer() != i64::MIN => Rational::Small(r.recip()),
            _ => Rational::from_big(x.to_big().recip()),
        })
    }

    fn is_zero(&self, x: &Rational) -> bool {
        x.is_zero()
    }

    fn sub(&self, x: &Rational, y: &Rational) -> Rational {
        Rational::op(x, y, |a, b| a.checked_sub(b), |a, b| a - b)
    }

    fn cardinality(&self) -> Option<u64> {
        None
    }

    fn nth(&self, _i: u64) -> Rational {
        unreachable!("the rationals cannot be enumerated")
    }

    fn position(&self, _x: &Rational) -> u64 {
        unreachable!("the rationals cannot be enumerated")
    }

    fn render(&self, x: &Rational) -> String {
        match x {
            Rational::Small(r) if r.is_integer() => r.numer().to_string(),
            Rational::Small(r) => format!("{}/{}", r.numer(), r.denom()),
            Rational::Big(b) if b.is_integer() => b.numer().to_string(),
            Rational::Big(b) => format!("{}/{}", b.numer(), b.denom()),
        }
    }

    fn parse(&self, s: &str) -> Result<Rational> {
        let bad = || Error::InvalidElement(format!("not a rational: {s:?}"));
        let s = s.trim();
        let value = match s.split_once('/') {
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                BigRational::from_integer(n)
            }
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(Error::InvalidElement(format!("zero denominator in {s:?}")));
                }
                BigRational::new(n, d)
            }
        };
        Ok(Rational::from_big(value))
    }
}

/// Residues modulo `n`, stored in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zmod {
    modulus: u64,
}

impl Zmod {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidRing(format!("modulus must be at least 2, got {modulus}")));
        }
        if modulus > u32::MAX as u64 {
            return Err(Error::InvalidRing(format!("modulus {modulus} too large")));
        }
        Ok(Zmod { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_field(&self) -> bool {
        is_prime(self.modulus)
    }
}

impl ScalarRing for Zmod {
    type Value = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.modulus as i64) as u64
    }

    fn add(&self, x: &u64, y: &u64) -> u64 {
        (x + y) % self.modulus
    }

    fn neg(&self, x: &u64) -> u64 {
        (self.modulus - x) % self.modulus
    }

    fn mul(&self, x: &u64, y: &u64) -> u64 {
        (x * y) % self.modulus
    }

    fn inv(&self, x: &u64) -> Option<u64> {
        let e = (*x as i64).extended_gcd(&(self.modulus as i64));
        (e.gcd == 1).then(|| e.x.rem_euclid(self.modulus as i64) as u64)
    }

    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }

    fn cardinality(&self) -> Option<u64> {
        Some(self.modulus)
    }

    fn nth(&self, i: u64) -> u64 {
        i
    }

    fn position(&self, x: &u64) -> u64 {
        *x
    }

    fn render(&self, x: &u64) -> String {
        x.to_string()
    }

    fn parse(&self, s: &str) -> Result<u64> {
        let v: u64 = s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidElement(format!("not a residue: {s:?}")))?;
        if v >= self.modulus {
            return Err(Error::InvalidElement(format!(
                "residue {v} out of range [0, {})",
                self.modulus
            )));
        }
        Ok(v)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_inverse() {
        let z6 = Zmod::new(6).unwrap();
        assert_eq!(z6.inv(&5), Some(5));
        assert_eq!(z6.inv(&2), None);
        let z7 = Zmod::new(7).unwrap();
        for x in 1..7 {
            let y = z7.inv(&x).unwrap();
            assert_eq!(z7.mul(&x, &y), 1);
        }
    }

    #[test]
    fn rational_parsing_reduces() {
        let q = Rationals;
        let v = q.parse("4/-6").unwrap();
        assert_eq!(q.render(&v), "-2/3");
        assert_eq!(q.render(&q.parse("10/5").unwrap()), "2");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn rational_overflow_promotes_and_demotes() {
        let q = Rationals;
        let big = q.from_i64(i64::MAX);
        let sq = q.mul(&big, &big);
        assert!(matches!(sq, Rational::Big(_)));
        assert_eq!(q.render(&sq), "85070591730234615847396907784232501249");
        let back = q.mul(&sq, &q.inv(&big).unwrap());
        assert_eq!(back, big);
        assert!(matches!(back, Rational::Small(_)));
        let min = q.from_i64(i64::MIN);
        assert_eq!(q.render(&q.neg(&min)), "9223372036854775808");
        assert_eq!(q.add(&q.neg(&min), &min), q.zero());
        assert!(q.parse("1/3").unwrap() < q.parse("1/2").unwrap());
        assert!(sq > big);
    }

    #[test]
    fn residues_out_of_range_rejected() {
        let z6 = Zmod::new(6).unwrap();
        assert!(z6.parse("6").is_err());
        assert!(z6.parse("-1").is_err());
        assert_eq!(z6.parse("5").unwrap(), 5);
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
