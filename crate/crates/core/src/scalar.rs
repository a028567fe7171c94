//! Exact rational scalars.
//!
//! Values that fit in a pair of `i64` stay on a small fast path; anything
//! larger is promoted to a boxed [`BigRational`]. The representation is
//! canonical (reduced, positive denominator, small whenever it fits), so
//! derived equality and hashing are value equality.

use alloc::boxed::Box;
use alloc::string::ToString;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced, `den > 0`, and neither part equals `i64::MIN`.
    Small(i64, i64),
    Big(Box<BigRational>),
}

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

fn fits(x: i128) -> Option<i64> {
    if x > i64::MIN as i128 && x <= i64::MAX as i128 {
        Some(x as i64)
    } else {
        None
    }
}

impl Scalar {
    pub const fn zero() -> Self {
        Scalar(Repr::Small(0, 1))
    }

    pub const fn one() -> Self {
        Scalar(Repr::Small(1, 1))
    }

    pub fn half() -> Self {
        Scalar(Repr::Small(1, 2))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_i128(n as i128, 1)
    }

    /// `num / den`, rejecting a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::InvalidScalar(alloc::format!("{num}/{den}")));
        }
        Ok(Self::from_i128(num as i128, den as i128))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (fits(n), fits(d)) {
            (Some(n), Some(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            )))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational arithmetic keeps values reduced with positive denominator.
        if let (Some(n), Some(d)) = (r.numer().to_i128(), r.denom().to_i128()) {
            if let (Some(n), Some(d)) = (fits(n), fits(d)) {
                return Scalar(Repr::Small(n, d));
            }
        }
        Scalar(Repr::Big(Box::new(r)))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Repr::Big(b) => Self::from_big(b.recip()),
        })
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from_int(n as i64)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_big(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Scalar::from_i128(a + c, b)
                } else {
                    Scalar::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Scalar::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Scalar::from_i128(a - c, b)
                } else {
                    Scalar::from_i128(a * d - c * b, b * d)
                }
            }
            _ => Scalar::from_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Small(0, _), _) | (_, Repr::Small(0, _)) => Scalar::zero(),
            (Repr::Small(1, 1), _) => rhs.clone(),
            (_, Repr::Small(1, 1)) => self.clone(),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Scalar::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Scalar::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: &Scalar) -> Scalar {
        let inv = rhs.recip().expect("division by zero scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) => Scalar(Repr::Small(-*n, *d)),
            Repr::Big(b) => Scalar::from_big(-(**b).clone()),
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

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses `"p"` or `"p/q"` with arbitrary-precision integers.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidScalar(s.to_string());
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Scalar::from_big(BigRational::new(n, d)))
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::new(n, d).unwrap()
    }

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(format!("{}", q(-4, 2)), "-2");
        assert_eq!(format!("{}", q(6, 4)), "3/2");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(Scalar::new(1, 0).is_err());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }

    #[test]
    fn overflow_promotes_to_big_and_back() {
        let big = Scalar::from_int(i64::MAX);
        let sq = &big * &big;
        assert!(!sq.is_integer() || sq.to_string().len() > 20);
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
        let min = Scalar::from_int(i64::MIN);
        assert_eq!((-&min).to_string(), "9223372036854775808");
    }

    #[test]
    fn parses_big_values() {
        let s: Scalar = "123456789012345678901234567891/7".parse().unwrap();
        assert_eq!(s.to_string(), "123456789012345678901234567891/7");
        let t = &s * &q(7, 1);
        assert_eq!(t.to_string(), "123456789012345678901234567891");
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (any::<i64>(), 1i64..=i64::MAX).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms_hold(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a.clone());
            }
        }

        #[test]
        fn display_parse_roundtrip(a in arb_scalar(), b in arb_scalar()) {
            let x = &a * &b;
            let parsed: Scalar = x.to_string().parse().unwrap();
            prop_assert_eq!(parsed, x);
        }
    }
}
