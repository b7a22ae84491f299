//! Prime contexts: a checked prime together with a working precision.

use crate::error::PadicError;

/// Digits of p-adic expansion below which lifted data is never trusted.
pub const PRECISION_FLOOR: u32 = 4;

/// Digits reserved as a guard band: a comparison decided within the guard
/// band is accepted, anything closer to the truncation point raises
/// [`PadicError::PrecisionExhausted`].
pub const GUARD_BAND: u32 = 8;

/// Default working precision (digits of p-adic expansion retained).
pub const DEFAULT_PRECISION: u32 = 64;

/// A prime `p` and the number of base-`p` digits retained by lifted
/// factorizations. Primality is certified on construction; primes are
/// restricted to `u64` so that a fixed Miller-Rabin base set is a proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeContext {
    p: u64,
    precision: u32,
}

impl PrimeContext {
    pub fn new(p: u64, precision: u32) -> Result<Self, PadicError> {
        if !is_prime_u64(p) {
            return Err(PadicError::NotPrime(p));
        }
        if precision < PRECISION_FLOOR {
            return Err(PadicError::PrecisionTooSmall(precision));
        }
        Ok(PrimeContext { p, precision })
    }

    /// Context with the default precision of 64 digits.
    pub fn with_default_precision(p: u64) -> Result<Self, PadicError> {
        Self::new(p, DEFAULT_PRECISION)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }
}

/// Deterministic Miller-Rabin for `u64`. The base set
/// {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} decides primality for all
/// integers below 3.3e24, which covers the whole `u64` range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &small in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == small {
            return true;
        }
        if n % small == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'bases: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes_and_composites() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(is_prime_u64(5));
        assert!(is_prime_u64(97));
        assert!(!is_prime_u64(0));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(91)); // 7 * 13
        assert!(!is_prime_u64(561)); // Carmichael
    }

    #[test]
    fn large_prime() {
        // 2^61 - 1 is a Mersenne prime.
        assert!(is_prime_u64((1u64 << 61) - 1));
        assert!(!is_prime_u64((1u64 << 61) - 3));
    }

    #[test]
    fn context_validation() {
        assert!(PrimeContext::new(4, 64).is_err());
        assert!(PrimeContext::new(5, 3).is_err());
        let ctx = PrimeContext::new(5, 64).unwrap();
        assert_eq!(ctx.prime(), 5);
        assert_eq!(ctx.precision(), 64);
    }
}
