//! Quadratic Hensel lifting of a coprime factorization modulo p to a
//! factorization modulo p^K.
//!
//! The inputs are exact rational polynomials with p-integral coefficients;
//! the lift itself runs on capped-precision residues (the one place in the
//! workspace where finite precision appears). Returned factors carry
//! symmetric representatives modulo p^K as exact rationals, so that
//! `g * h - f` has every coefficient of valuation at least K.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::approx::{inv_mod, PadicApprox};
use crate::cancel::CancelToken;
use crate::error::PadicError;
use crate::poly::Polynomial;
use crate::prime::PrimeContext;
use crate::rational::{Rational, Valuation};

/// Lift `f = g0 * h0 (mod p)` with `g0, h0` coprime mod p to
/// `f = g * h (mod p^K)` with `g` monic of the same degree as `g0`.
pub fn hensel_lift(
    f: &Polynomial,
    g0: &Polynomial,
    h0: &Polynomial,
    ctx: &PrimeContext,
) -> Result<(Polynomial, Polynomial), PadicError> {
    hensel_lift_cancellable(f, g0, h0, ctx, None)
}

/// As [`hensel_lift`], polling the token between lifting rounds.
pub fn hensel_lift_cancellable(
    f: &Polynomial,
    g0: &Polynomial,
    h0: &Polynomial,
    ctx: &PrimeContext,
    token: Option<&CancelToken>,
) -> Result<(Polynomial, Polynomial), PadicError> {
    let p = ctx.prime();
    let target = ctx.precision();

    for (name, poly) in [("f", f), ("g0", g0), ("h0", h0)] {
        if poly.is_zero() {
            return Err(PadicError::BadInput(format!("{name} is zero")));
        }
        for c in poly.coeffs() {
            if !c.is_p_integral(p) {
                return Err(PadicError::BadInput(format!(
                    "{name} has a coefficient of negative valuation at p={p}"
                )));
            }
        }
    }
    let lead_val = f.leading().unwrap().valuation(p);
    if lead_val != Valuation::Finite(0) {
        return Err(PadicError::BadInput(
            "leading coefficient of f is not a p-adic unit".into(),
        ));
    }

    // Normalized monic copies: unit leading coefficients are divided out
    // exactly; the h side absorbs the combined unit.
    let f = f.scale(&f.leading().unwrap().recip());
    let p_big = BigInt::from(p);

    let mut g = to_residues(g0, &p_big, ctx)?;
    let mut h = to_residues(h0, &p_big, ctx)?;
    reduce_in_place(&mut g, &p_big);
    reduce_in_place(&mut h, &p_big);
    make_monic(&mut g, &p_big).ok_or_else(|| {
        PadicError::BadInput("leading coefficient of g0 is not a p-adic unit".into())
    })?;
    make_monic(&mut h, &p_big).ok_or_else(|| {
        PadicError::BadInput("leading coefficient of h0 is not a p-adic unit".into())
    })?;

    let f_mod_p = {
        let mut v = to_residues(&f, &p_big, ctx)?;
        reduce_in_place(&mut v, &p_big);
        v
    };
    if sub(&mul(&g, &h, &p_big), &f_mod_p, &p_big) != vec![] {
        return Err(PadicError::BadInput("f != g0 * h0 modulo p".into()));
    }

    // Coprimality mod p: a nonconstant gcd means the resultant of g0, h0
    // has positive valuation.
    let gcd = gcd_mod_p(&g, &h, &p_big);
    if gcd.len() > 1 {
        return Err(PadicError::NotCoprime);
    }

    // Bezout cofactors mod p: s*g + t*h = 1.
    let (mut s, mut t) = bezout_mod_p(&g, &h, &p_big)?;

    let mut reached: u32 = 1;
    let mut modulus = p_big.clone();
    while reached < target {
        if let Some(tok) = token {
            if tok.is_cancelled() {
                return Err(PadicError::Cancelled);
            }
        }
        let next = (reached * 2).min(target);
        let next_modulus = p_big.pow(next);

        let f_res = to_residues_mod(&f, &p_big, next, ctx)?;
        // Factor step.
        let e = sub(&f_res, &mul(&g, &h, &next_modulus), &next_modulus);
        let se = mul(&s, &e, &next_modulus);
        let (q, r) = divmod(&se, &h, &next_modulus);
        let te = mul(&t, &e, &next_modulus);
        let qg = mul(&q, &g, &next_modulus);
        let g_new = add(&add(&g, &te, &next_modulus), &qg, &next_modulus);
        let h_new = add(&h, &r, &next_modulus);
        if g_new.len() != g.len() || g_new.last() != Some(&BigInt::one()) {
            return Err(PadicError::PrecisionExhausted(
                "lift lost monicity of g".into(),
            ));
        }
        // Bezout step.
        let b = {
            let mut v = add(
                &mul(&s, &g_new, &next_modulus),
                &mul(&t, &h_new, &next_modulus),
                &next_modulus,
            );
            if v.is_empty() {
                v.push(BigInt::zero());
            }
            v[0] -= BigInt::one();
            normalize(v, &next_modulus)
        };
        let sb = mul(&s, &b, &next_modulus);
        let (c, d) = divmod(&sb, &h_new, &next_modulus);
        let s_new = sub(&s, &d, &next_modulus);
        let tb = mul(&t, &b, &next_modulus);
        let cg = mul(&c, &g_new, &next_modulus);
        let t_new = sub(&sub(&t, &tb, &next_modulus), &cg, &next_modulus);

        g = g_new;
        h = h_new;
        s = s_new;
        t = t_new;
        reached = next;
        modulus = next_modulus;
    }

    let g_out = from_residues(&g, &modulus);
    let h_out = from_residues(&h, &modulus);

    // Digit-exact verification of the congruence g*h = f mod p^K.
    let diff = &(&g_out * &h_out) - &f;
    for c in diff.coeffs() {
        if c.valuation(p) < Valuation::Finite(target as i64) {
            return Err(PadicError::PrecisionExhausted(format!(
                "lift failed to reach {target} digits"
            )));
        }
    }
    Ok((g_out, h_out))
}

// --- residue polynomials: Vec<BigInt> low-to-high, trailing zeros trimmed ---

fn normalize(mut v: Vec<BigInt>, m: &BigInt) -> Vec<BigInt> {
    for c in v.iter_mut() {
        *c = c.mod_floor(m);
    }
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn reduce_in_place(v: &mut Vec<BigInt>, m: &BigInt) {
    *v = normalize(std::mem::take(v), m);
}

fn add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, slot) in out.iter_mut().enumerate() {
        if let Some(x) = a.get(i) {
            *slot += x;
        }
        if let Some(x) = b.get(i) {
            *slot += x;
        }
    }
    normalize(out, m)
}

fn sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, slot) in out.iter_mut().enumerate() {
        if let Some(x) = a.get(i) {
            *slot += x;
        }
        if let Some(x) = b.get(i) {
            *slot -= x;
        }
    }
    normalize(out, m)
}

fn mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    normalize(out, m)
}

/// Division with remainder by a polynomial whose leading coefficient is
/// invertible modulo `m` (in practice monic).
fn divmod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    assert!(!b.is_empty(), "division by zero residue polynomial");
    if a.len() < b.len() {
        return (vec![], a.to_vec());
    }
    let lead_inv = inv_mod(b.last().unwrap(), m);
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    for i in (0..quot.len()).rev() {
        let c = (&rem[i + b.len() - 1] * &lead_inv).mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, d) in b.iter().enumerate() {
            let delta = (&c * d).mod_floor(m);
            rem[i + j] = (&rem[i + j] - delta).mod_floor(m);
        }
        quot[i] = c;
    }
    (normalize(quot, m), normalize(rem, m))
}

fn make_monic(v: &mut Vec<BigInt>, m: &BigInt) -> Option<()> {
    let lead = v.last()?.clone();
    if lead.is_one() {
        return Some(());
    }
    if !lead.gcd(m).is_one() {
        return None;
    }
    let inv = inv_mod(&lead, m);
    for c in v.iter_mut() {
        *c = (&*c * &inv).mod_floor(m);
    }
    Some(())
}

fn gcd_mod_p(a: &[BigInt], b: &[BigInt], p: &BigInt) -> Vec<BigInt> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let (_, r) = divmod(&x, &y, p);
        x = y;
        y = r;
    }
    if !x.is_empty() {
        make_monic(&mut x, p);
    }
    x
}

fn bezout_mod_p(
    g: &[BigInt],
    h: &[BigInt],
    p: &BigInt,
) -> Result<(Vec<BigInt>, Vec<BigInt>), PadicError> {
    let mut r0 = g.to_vec();
    let mut r1 = h.to_vec();
    let mut s0 = vec![BigInt::one()];
    let mut s1 = vec![];
    let mut t0 = vec![];
    let mut t1 = vec![BigInt::one()];
    while !r1.is_empty() {
        let (q, r) = divmod(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if r0.len() != 1 {
        return Err(PadicError::NotCoprime);
    }
    let inv = inv_mod(&r0[0], p);
    let s = mul(&s0, &[inv.clone()], p);
    let t = mul(&t0, &[inv], p);
    Ok((s, t))
}

/// Rational coefficients into residues modulo `p^K`, via their capped
/// p-adic representatives.
fn to_residues(
    poly: &Polynomial,
    p: &BigInt,
    ctx: &PrimeContext,
) -> Result<Vec<BigInt>, PadicError> {
    to_residues_mod(poly, p, ctx.precision(), ctx)
}

fn to_residues_mod(
    poly: &Polynomial,
    p: &BigInt,
    digits: u32,
    ctx: &PrimeContext,
) -> Result<Vec<BigInt>, PadicError> {
    let wide = PrimeContext::new(ctx.prime(), digits.max(crate::prime::PRECISION_FLOOR))
        .expect("context prime already validated");
    let modulus = p.pow(digits);
    let mut out = Vec::with_capacity(poly.coeffs().len());
    for c in poly.coeffs() {
        let approx = PadicApprox::from_rational(c, &wide);
        let residue = match approx.valuation() {
            Valuation::Infinite => BigInt::zero(),
            Valuation::Finite(v) => {
                debug_assert!(v >= 0, "caller guarantees p-integral coefficients");
                (approx.unit_residue(&wide).unwrap() * p.pow(v as u32)).mod_floor(&modulus)
            }
        };
        out.push(residue);
    }
    Ok(normalize(out, &modulus))
}

/// Residues back to rationals, choosing symmetric representatives so that
/// factors which are exact already (like x - 1) come back verbatim.
fn from_residues(v: &[BigInt], m: &BigInt) -> Polynomial {
    let half = m / BigInt::from(2);
    Polynomial::new(
        v.iter()
            .map(|c| {
                let c = c.mod_floor(m);
                let sym = if c > half { c - m } else { c };
                Rational::from_bigint(sym)
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, k: u32) -> PrimeContext {
        PrimeContext::new(p, k).unwrap()
    }

    #[test]
    fn exact_factorization_comes_back_verbatim() {
        // x^2 - 1 = (x - 1)(x + 1) over p = 3: already exact.
        let f = Polynomial::from_ints(&[-1, 0, 1]);
        let g0 = Polynomial::from_ints(&[-1, 1]);
        let h0 = Polynomial::from_ints(&[1, 1]);
        let (g, h) = hensel_lift(&f, &g0, &h0, &ctx(3, 16)).unwrap();
        assert_eq!(g, g0);
        assert_eq!(h, h0);
    }

    #[test]
    fn sqrt_two_mod_seven() {
        // x^2 - 2 factors over Z_7 since 3^2 = 2 mod 7.
        let f = Polynomial::from_ints(&[-2, 0, 1]);
        let g0 = Polynomial::from_ints(&[-3, 1]);
        let h0 = Polynomial::from_ints(&[3, 1]);
        let c = ctx(7, 24);
        let (g, h) = hensel_lift(&f, &g0, &h0, &c).unwrap();
        // Multiply back and reduce: every coefficient of g*h - f has
        // valuation >= 24.
        let diff = &(&g * &h) - &f;
        for coeff in diff.coeffs() {
            assert!(coeff.valuation(7) >= Valuation::Finite(24));
        }
        // g = x - r with r^2 = 2 mod 7^24 and r = 3 mod 7.
        let root = -g.coeff(0);
        assert_eq!(
            (&(&root * &root) - &Rational::from_int(2)).valuation(7) >= Valuation::Finite(24),
            true
        );
        assert_eq!((&root - &Rational::from_int(3)).valuation(7) >= Valuation::Finite(1), true);
        assert!(g.is_monic());
        assert_eq!(g.degree(), Some(1));
    }

    #[test]
    fn repeated_factor_is_rejected() {
        let f = Polynomial::from_ints(&[0, 0, 1]); // x^2
        let g0 = Polynomial::from_ints(&[0, 1]);
        let h0 = Polynomial::from_ints(&[0, 1]);
        assert_eq!(
            hensel_lift(&f, &g0, &h0, &ctx(5, 8)),
            Err(PadicError::NotCoprime)
        );
    }

    #[test]
    fn mismatched_factors_are_rejected() {
        let f = Polynomial::from_ints(&[-2, 0, 1]);
        let g0 = Polynomial::from_ints(&[-1, 1]);
        let h0 = Polynomial::from_ints(&[1, 1]);
        assert!(matches!(
            hensel_lift(&f, &g0, &h0, &ctx(7, 8)),
            Err(PadicError::BadInput(_))
        ));
    }

    #[test]
    fn cancellation_is_observed() {
        let f = Polynomial::from_ints(&[-2, 0, 1]);
        let g0 = Polynomial::from_ints(&[-3, 1]);
        let h0 = Polynomial::from_ints(&[3, 1]);
        let token = CancelToken::new();
        token.cancel();
        assert_eq!(
            hensel_lift_cancellable(&f, &g0, &h0, &ctx(7, 64), Some(&token)),
            Err(PadicError::Cancelled)
        );
    }

    #[test]
    fn higher_degree_split() {
        // f = (x^2 + 1)(x - 3) over p = 7; x^2 + 1 is irreducible mod 7
        // (-1 is not a QR mod 7) and coprime to x - 3.
        let quad = Polynomial::from_ints(&[1, 0, 1]);
        let lin = Polynomial::from_ints(&[-3, 1]);
        let f = &quad * &lin;
        let c = ctx(7, 20);
        let (g, h) = hensel_lift(&f, &quad, &lin, &c).unwrap();
        assert_eq!(g, quad);
        assert_eq!(h, lin);
    }
}
