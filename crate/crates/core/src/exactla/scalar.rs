//! Exact field elements: arbitrary-precision rationals and residues modulo an odd prime.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Field {
    Rational,
    Prime { p: u64 },
}

impl Field {
    /// The prime field `F_p`. Characteristic 2 is rejected: every construction
    /// in this crate divides by 2 somewhere.
    pub fn prime(p: u64) -> Result<Field> {
        if p < 3 || !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::InvalidField(format!(
                "{p} is not an odd prime below 2^32"
            )));
        }
        Ok(Field::Prime { p })
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime { p } => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime { p } => Scalar::Mod {
                r: n.rem_euclid(p as i64) as u64,
                p,
            },
        }
    }

    /// `num / den` in this field; fails when `den` vanishes in the field.
    pub fn ratio(self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(num)
            .checked_div(&self.from_i64(den))
            .ok_or_else(|| Error::Parse(format!("{num}/{den}: zero denominator in {self}")))
    }

    fn ratio_of_bigints(self, num: BigInt, den: BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        match self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime { p } => {
                let pb = BigInt::from(p);
                let n = num.mod_floor(&pb).to_u64().unwrap();
                let d = den.mod_floor(&pb).to_u64().unwrap();
                if d == 0 {
                    return Err(Error::Parse(format!("denominator divisible by {p}")));
                }
                Ok(Scalar::Mod { r: n, p }.mul(&Scalar::Mod { r: d, p }.inv().unwrap()))
            }
        }
    }

    /// Parses a scalar literal: optional `-`, digits, optional `/digits`.
    /// Prime-field literals are reduced mod p; `"r mod p"` is accepted when `p`
    /// matches the field.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let t = text.trim();
        if let Some((lhs, rhs)) = t.split_once(" mod ") {
            let modulus: u64 = rhs
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad modulus in {text:?}")))?;
            if self != (Field::Prime { p: modulus }) {
                return Err(Error::InvalidField(format!(
                    "literal {text:?} does not belong to {self}"
                )));
            }
            return self.parse(lhs);
        }
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n, d),
            None => (t, "1"),
        };
        let valid_int = |s: &str, allow_sign: bool| {
            let digits = if allow_sign {
                s.strip_prefix('-').unwrap_or(s)
            } else {
                s
            };
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid_int(num, true) || !valid_int(den, false) {
            return Err(Error::Parse(format!("malformed scalar {text:?}")));
        }
        let num = BigInt::from_str(num).map_err(|e| Error::Parse(e.to_string()))?;
        let den = BigInt::from_str(den).map_err(|e| Error::Parse(e.to_string()))?;
        self.ratio_of_bigints(num, den)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime { p } => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`Field`].
///
/// Rationals are kept reduced with positive denominator (guaranteed by
/// `BigRational`), residues are kept in `[0, p)`. Arithmetic between elements
/// of different fields is a programming error and panics; every public
/// container validates field homogeneity on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { r: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Mod { p, .. } => Field::Prime { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Mod { r, .. } => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Mod { r, .. } => *r == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Mod { r, p } => Scalar::Mod {
                r: pow_mod(*r, *p - 2, *p),
                p: *p,
            },
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|i| self * &i)
    }

    /// Serialized form used in JSON files: `"p/q"` (or `"n"`) for rationals,
    /// the bare residue for prime fields (the field is declared alongside).
    pub fn to_literal(&self) -> String {
        match self {
            Scalar::Rational(q) => q.to_string(),
            Scalar::Mod { r, .. } => r.to_string(),
        }
    }

    fn same_field(&self, other: &Scalar) {
        assert_eq!(
            self.field(),
            other.field(),
            "arithmetic between scalars of different fields"
        );
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Mod { r, p } => write!(f, "{r} mod {p}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { r: a, p }, Scalar::Mod { r: b, .. }) => Scalar::Mod {
                r: (a + b) % p,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Mod { r: a, p }, Scalar::Mod { r: b, .. }) => Scalar::Mod {
                r: (a + p - b) % p,
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { r: a, p }, Scalar::Mod { r: b, .. }) => Scalar::Mod {
                r: mul_mod(*a, *b, *p),
                p: *p,
            },
            _ => unreachable!(),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero, like `BigRational`.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { r, p } => Scalar::Mod {
                r: (p - r) % p,
                p: *p,
            },
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
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Scalar {
    /// Sign of a rational (`None` for prime-field elements).
    pub fn signum(&self) -> Option<i8> {
        match self {
            Scalar::Rational(q) if q.is_zero() => Some(0),
            Scalar::Rational(q) if q.is_positive() => Some(1),
            Scalar::Rational(_) => Some(-1),
            Scalar::Mod { .. } => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_literals_reduce() {
        let q = Field::Rational;
        assert_eq!(q.parse("2/4").unwrap(), q.ratio(1, 2).unwrap());
        assert_eq!(q.parse("-6/3").unwrap().to_literal(), "-2");
        assert_eq!(q.parse("13/256").unwrap().to_literal(), "13/256");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("1.5").is_err());
        assert!(q.parse("").is_err());
        assert!(q.parse("1/-2").is_err());
    }

    #[test]
    fn prime_literals_reduce_mod_p() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.parse("10").unwrap(), f7.from_i64(3));
        assert_eq!(f7.parse("-1").unwrap(), f7.from_i64(6));
        // 1/2 = 4 in GF(7)
        assert_eq!(f7.parse("1/2").unwrap(), f7.from_i64(4));
        assert_eq!(f7.parse("4 mod 7").unwrap(), f7.from_i64(4));
        assert!(f7.parse("4 mod 5").is_err());
        assert!(f7.parse("1/7").is_err());
    }

    #[test]
    fn prime_field_rejects_two_and_composites() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(31).is_ok());
    }

    #[test]
    fn inverses() {
        let f = Field::prime(31).unwrap();
        for n in 1..31 {
            let x = f.from_i64(n);
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        assert!(f.zero().inv().is_none());
        let q = Field::Rational.parse("-3/5").unwrap();
        assert_eq!(q.inv().unwrap(), Field::Rational.parse("-5/3").unwrap());
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixed_fields_panic() {
        let _ = Field::Rational.one() + Field::prime(5).unwrap().one();
    }

    proptest::proptest! {
        #[test]
        fn literal_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
            let q = Field::Rational.ratio(n, d).unwrap();
            proptest::prop_assert_eq!(Field::Rational.parse(&q.to_literal()).unwrap(), q.clone());
            proptest::prop_assert_eq!(Field::Rational.parse(&q.to_string()).unwrap(), q);
            let f = Field::prime(101).unwrap();
            if d % 101 != 0 {
                let x = f.ratio(n, d).unwrap();
                proptest::prop_assert_eq!(f.parse(&x.to_literal()).unwrap(), x.clone());
                proptest::prop_assert_eq!(f.parse(&x.to_string()).unwrap(), x);
            }
        }
    }
}
