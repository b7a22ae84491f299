//! Exact rationals in canonical lowest terms, with per-prime valuations.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// The p-adic valuation of a rational: an integer for nonzero values, the
/// distinguished top element for zero. `|x|_p = p^(-v_p(x))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_finite(&self) -> bool {
        matches!(self, Valuation::Finite(_))
    }

    /// The finite value; panics on the valuation of zero.
    pub fn finite(&self) -> i64 {
        match self {
            Valuation::Finite(v) => *v,
            Valuation::Infinite => panic!("valuation of zero has no finite value"),
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use Valuation::*;
        match (self, other) {
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        use Valuation::*;
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a + b),
            _ => Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => serializer.serialize_i64(*v),
            Valuation::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Valuation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = Valuation;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or the string \"inf\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Valuation, E> {
                Ok(Valuation::Finite(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Valuation, E> {
                Ok(Valuation::Finite(v as i64))
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<Valuation, E> {
                if s == "inf" {
                    Ok(Valuation::Infinite)
                } else {
                    s.parse::<i64>().map(Valuation::Finite).map_err(E::custom)
                }
            }
        }
        deserializer.deserialize_any(V)
    }
}

/// An exact rational in canonical lowest terms with positive denominator.
/// Serialized as `"num/den"`, with the denominator omitted when it is 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// `num/den` in lowest terms; panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        Rational(BigRational::new(num, den))
    }

    /// `p^k` for any integer `k`.
    pub fn p_pow(p: u64, k: i64) -> Self {
        let base = BigInt::from(p);
        if k >= 0 {
            Rational(BigRational::from_integer(base.pow(k as u32)))
        } else {
            Rational(BigRational::new(BigInt::one(), base.pow((-k) as u32)))
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_bigint(&self) -> Option<BigInt> {
        self.0.is_integer().then(|| self.0.to_integer())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero rational");
        Rational(self.0.recip())
    }

    pub fn pow(&self, k: i64) -> Self {
        if k == 0 {
            return Rational::one();
        }
        if self.is_zero() {
            assert!(k > 0, "zero to a negative power");
            return Rational::zero();
        }
        let e = i32::try_from(k).expect("rational power exponent out of range");
        Rational(self.0.pow(e))
    }

    /// The p-adic valuation `v_p(n) - v_p(d)`, or `Infinite` for zero.
    pub fn valuation(&self, p: u64) -> Valuation {
        if self.is_zero() {
            return Valuation::Infinite;
        }
        let v = int_valuation(self.numer(), p) - int_valuation(self.denom(), p);
        Valuation::Finite(v)
    }

    /// Whether the value lies in `Z_p`, i.e. has valuation >= 0.
    pub fn is_p_integral(&self, p: u64) -> bool {
        self.valuation(p) >= Valuation::Finite(0)
    }
}

/// Exact multiplicity of `p` in a nonzero integer.
pub(crate) fn int_valuation(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut v = 0i64;
    let mut cur = n.clone();
    loop {
        let (q, r) = cur.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        cur = q;
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| format!("invalid numerator in rational {s:?}"))?;
        let den: BigInt = match den {
            Some(d) => d
                .parse()
                .map_err(|_| format!("invalid denominator in rational {s:?}"))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(format!("zero denominator in rational {s:?}"));
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl de::Visitor<'_> for V {
            type Value = Rational;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational as \"num/den\" or an integer")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> Result<Rational, E> {
                s.parse().map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
                Ok(Rational::from_int(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
                Ok(Rational::from_bigint(BigInt::from(v)))
            }
        }
        deserializer.deserialize_any(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn valuation_examples() {
        // v_2(8) = 3
        assert_eq!(Rational::from_int(8).valuation(2), Valuation::Finite(3));
        // v_p(0) = inf
        assert_eq!(Rational::zero().valuation(7), Valuation::Infinite);
        // q/p at p has valuation -1 for distinct primes
        assert_eq!(Rational::new(3, 2).valuation(2), Valuation::Finite(-1));
        assert_eq!(Rational::new(3, 2).valuation(3), Valuation::Finite(1));
    }

    #[test]
    fn display_and_parse() {
        let x = Rational::new(-4, 6);
        assert_eq!(x.to_string(), "-2/3");
        assert_eq!("-2/3".parse::<Rational>().unwrap(), x);
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from_int(7));
        assert_eq!(Rational::from_int(7).to_string(), "7");
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    fn serde_round_trip() {
        let x = Rational::new(5, 27);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "\"5/27\"");
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        let from_int: Rational = serde_json::from_str("12").unwrap();
        assert_eq!(from_int, Rational::from_int(12));
    }

    #[test]
    fn valuation_serde() {
        assert_eq!(
            serde_json::to_string(&Valuation::Infinite).unwrap(),
            "\"inf\""
        );
        assert_eq!(serde_json::to_string(&Valuation::Finite(-3)).unwrap(), "-3");
        let v: Valuation = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(v, Valuation::Infinite);
    }

    fn arb_nonzero() -> impl Strategy<Value = Rational> {
        (-2000i64..2000, 1i64..2000, prop::bool::ANY).prop_filter_map("nonzero", |(n, d, neg)| {
            if n == 0 {
                None
            } else {
                Some(Rational::new(n, if neg { -d } else { d }))
            }
        })
    }

    proptest! {
        #[test]
        fn valuation_is_additive(x in arb_nonzero(), y in arb_nonzero()) {
            for p in [2u64, 3, 5] {
                let vx = x.valuation(p).finite();
                let vy = y.valuation(p).finite();
                prop_assert_eq!((&x * &y).valuation(p), Valuation::Finite(vx + vy));
            }
        }

        #[test]
        fn ultrametric_inequality(x in arb_nonzero(), y in arb_nonzero()) {
            for p in [2u64, 3, 5] {
                let vx = x.valuation(p);
                let vy = y.valuation(p);
                let vsum = (&x + &y).valuation(p);
                prop_assert!(vsum >= vx.min(vy));
                if vx != vy {
                    prop_assert_eq!(vsum, vx.min(vy));
                }
            }
        }
    }
}
