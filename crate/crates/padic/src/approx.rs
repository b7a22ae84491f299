//! Capped-precision p-adic representatives.
//!
//! A nonzero value is `p^valuation * (unit digit expansion)`, with the unit
//! part kept to a finite number of base-p digits and a nonzero lowest digit.
//! These appear only inside Hensel lifting; everything else in the workspace
//! stays exact. Arithmetic tracks the number of valid digits and refuses to
//! continue below the floor of [`crate::prime::PRECISION_FLOOR`] digits.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::PadicError;
use crate::prime::{PrimeContext, PRECISION_FLOOR};
use crate::rational::{int_valuation, Rational, Valuation};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Zero,
    Unit {
        valuation: i64,
        /// Base-p digits of the unit part, lowest first; `digits[0] != 0`.
        digits: Vec<u64>,
    },
}

/// A p-adic number known modulo `p^(valuation + digits.len())`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicApprox {
    repr: Repr,
}

impl PadicApprox {
    pub fn zero() -> Self {
        PadicApprox { repr: Repr::Zero }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero)
    }

    pub fn valuation(&self) -> Valuation {
        match &self.repr {
            Repr::Zero => Valuation::Infinite,
            Repr::Unit { valuation, .. } => Valuation::Finite(*valuation),
        }
    }

    /// Number of known digits of the unit part.
    pub fn precision(&self) -> u32 {
        match &self.repr {
            Repr::Zero => u32::MAX,
            Repr::Unit { digits, .. } => digits.len() as u32,
        }
    }

    pub fn digits(&self) -> &[u64] {
        match &self.repr {
            Repr::Zero => &[],
            Repr::Unit { digits, .. } => digits,
        }
    }

    /// Embed an exact rational, keeping `ctx.precision()` digits of the unit
    /// part. The denominator is inverted modulo `p^K`, so the embedding is
    /// defined for every rational.
    pub fn from_rational(x: &Rational, ctx: &PrimeContext) -> Self {
        if x.is_zero() {
            return PadicApprox::zero();
        }
        let p = ctx.prime();
        let k = ctx.precision();
        let v_num = int_valuation(x.numer(), p);
        let v_den = int_valuation(x.denom(), p);
        let valuation = v_num - v_den;
        let pk = BigInt::from(p).pow(k);
        let num_unit = x.numer() / BigInt::from(p).pow(v_num as u32);
        let den_unit = x.denom() / BigInt::from(p).pow(v_den as u32);
        let unit = (num_unit * inv_mod(&den_unit, &pk)).mod_floor(&pk);
        PadicApprox {
            repr: Repr::Unit {
                valuation,
                digits: residue_to_digits(&unit, p, k as usize),
            },
        }
    }

    /// The exact rational represented by the retained digits.
    pub fn to_rational(&self, ctx: &PrimeContext) -> Rational {
        match &self.repr {
            Repr::Zero => Rational::zero(),
            Repr::Unit { valuation, digits } => {
                let unit = digits_to_residue(digits, ctx.prime());
                &Rational::from_bigint(unit) * &Rational::p_pow(ctx.prime(), *valuation)
            }
        }
    }

    /// The unit part as a residue modulo `p^precision`.
    pub fn unit_residue(&self, ctx: &PrimeContext) -> Option<BigInt> {
        match &self.repr {
            Repr::Zero => None,
            Repr::Unit { digits, .. } => Some(digits_to_residue(digits, ctx.prime())),
        }
    }

    pub fn mul(&self, other: &Self, ctx: &PrimeContext) -> Result<Self, PadicError> {
        let (v1, d1) = match &self.repr {
            Repr::Zero => return Ok(PadicApprox::zero()),
            Repr::Unit { valuation, digits } => (*valuation, digits),
        };
        let (v2, d2) = match &other.repr {
            Repr::Zero => return Ok(PadicApprox::zero()),
            Repr::Unit { valuation, digits } => (*valuation, digits),
        };
        let prec = d1.len().min(d2.len());
        check_floor(prec)?;
        let p = ctx.prime();
        let modulus = BigInt::from(p).pow(prec as u32);
        let unit = (digits_to_residue(d1, p) * digits_to_residue(d2, p)).mod_floor(&modulus);
        Ok(PadicApprox {
            repr: Repr::Unit {
                valuation: v1 + v2,
                digits: residue_to_digits(&unit, p, prec),
            },
        })
    }

    pub fn add(&self, other: &Self, ctx: &PrimeContext) -> Result<Self, PadicError> {
        let (v1, d1) = match &self.repr {
            Repr::Zero => return Ok(other.clone()),
            Repr::Unit { valuation, digits } => (*valuation, digits),
        };
        let (v2, d2) = match &other.repr {
            Repr::Zero => return Ok(self.clone()),
            Repr::Unit { valuation, digits } => (*valuation, digits),
        };
        let p = ctx.prime();
        // Align on the smaller valuation.
        let (v, da, db, shift) = if v1 <= v2 {
            (v1, d1, d2, (v2 - v1) as usize)
        } else {
            (v2, d2, d1, (v1 - v2) as usize)
        };
        // Known digits of the shifted summand reach shift + len(db).
        let prec = da.len().min(shift.saturating_add(db.len()));
        check_floor(prec)?;
        let modulus = BigInt::from(p).pow(prec as u32);
        let sum = (digits_to_residue(da, p)
            + digits_to_residue(db, p) * BigInt::from(p).pow(shift as u32))
        .mod_floor(&modulus);
        if sum.is_zero() {
            // All retained digits cancelled: cannot certify the value.
            return Err(PadicError::PrecisionExhausted(format!(
                "cancellation consumed all {prec} digits in addition"
            )));
        }
        let cancel = int_valuation(&sum, p) as usize;
        let remaining = prec - cancel;
        check_floor(remaining)?;
        let unit = sum / BigInt::from(p).pow(cancel as u32);
        Ok(PadicApprox {
            repr: Repr::Unit {
                valuation: v + cancel as i64,
                digits: residue_to_digits(&unit, p, remaining),
            },
        })
    }

    pub fn neg(&self, ctx: &PrimeContext) -> Self {
        match &self.repr {
            Repr::Zero => PadicApprox::zero(),
            Repr::Unit { valuation, digits } => {
                let p = ctx.prime();
                let modulus = BigInt::from(p).pow(digits.len() as u32);
                let unit = (&modulus - digits_to_residue(digits, p)).mod_floor(&modulus);
                PadicApprox {
                    repr: Repr::Unit {
                        valuation: *valuation,
                        digits: residue_to_digits(&unit, p, digits.len()),
                    },
                }
            }
        }
    }
}

fn check_floor(prec: usize) -> Result<(), PadicError> {
    if prec < PRECISION_FLOOR as usize {
        Err(PadicError::PrecisionExhausted(format!(
            "only {prec} digits remain, floor is {PRECISION_FLOOR}"
        )))
    } else {
        Ok(())
    }
}

fn digits_to_residue(digits: &[u64], p: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for &d in digits.iter().rev() {
        acc = acc * BigInt::from(p) + BigInt::from(d);
    }
    acc
}

fn residue_to_digits(r: &BigInt, p: u64, len: usize) -> Vec<u64> {
    debug_assert!(!r.is_negative());
    let p_big = BigInt::from(p);
    let mut digits = Vec::with_capacity(len);
    let mut cur = r.clone();
    for _ in 0..len {
        let (q, d) = cur.div_rem(&p_big);
        digits.push(u64::try_from(d).expect("digit fits in u64"));
        cur = q;
    }
    digits
}

/// Inverse of `a` modulo `m` for `gcd(a, m) = 1`.
pub(crate) fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "inverse of a non-unit modulo {m}");
    e.x.mod_floor(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64) -> PrimeContext {
        PrimeContext::new(p, 8).unwrap()
    }

    #[test]
    fn embed_and_read_back() {
        let c = ctx(5);
        let x = Rational::new(7, 3); // 3 is a 5-adic unit
        let a = PadicApprox::from_rational(&x, &c);
        assert_eq!(a.valuation(), Valuation::Finite(0));
        assert_eq!(a.precision(), 8);
        // 7/3 - (digit value) must be divisible by 5^8
        let diff = &x - &a.to_rational(&c);
        assert!(diff.valuation(5) >= Valuation::Finite(8));
    }

    #[test]
    fn round_trip_is_idempotent() {
        let c = ctx(3);
        for x in [
            Rational::new(22, 7),
            Rational::new(-5, 9),
            Rational::p_pow(3, -2),
            Rational::from_int(81),
        ] {
            let a = PadicApprox::from_rational(&x, &c);
            let b = PadicApprox::from_rational(&a.to_rational(&c), &c);
            assert_eq!(a, b, "re-embedding the truncation changed digits");
        }
    }

    #[test]
    fn zero_marker() {
        let c = ctx(5);
        let z = PadicApprox::from_rational(&Rational::zero(), &c);
        assert!(z.is_zero());
        assert_eq!(z.valuation(), Valuation::Infinite);
        assert_eq!(z.to_rational(&c), Rational::zero());
    }

    #[test]
    fn multiplication_adds_valuations() {
        let c = ctx(5);
        let a = PadicApprox::from_rational(&Rational::new(10, 1), &c);
        let b = PadicApprox::from_rational(&Rational::new(1, 5), &c);
        let prod = a.mul(&b, &c).unwrap();
        assert_eq!(prod.valuation(), Valuation::Finite(0));
        assert_eq!(prod.to_rational(&c), Rational::from_int(2));
    }

    #[test]
    fn addition_tracks_cancellation() {
        let c = ctx(5);
        let a = PadicApprox::from_rational(&Rational::from_int(30), &c);
        let b = PadicApprox::from_rational(&Rational::from_int(-5), &c);
        let s = a.add(&b, &c).unwrap();
        assert_eq!(s.to_rational(&c), Rational::from_int(25));
        assert_eq!(s.valuation(), Valuation::Finite(2));
        // 25 = 5^2, two digits of cancellation against 8 retained.
        assert_eq!(s.precision(), 7);
    }

    #[test]
    fn full_cancellation_is_refused() {
        let c = ctx(5);
        let a = PadicApprox::from_rational(&Rational::from_int(7), &c);
        let b = a.neg(&c);
        let err = a.add(&b, &c).unwrap_err();
        assert!(matches!(err, PadicError::PrecisionExhausted(_)));
    }
}
