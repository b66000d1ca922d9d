//! Legendre and Hilbert symbols at the places of ℚ.
//!
//! At an odd prime the Hilbert symbol reduces to Legendre symbols of the
//! unit parts; at the dyadic place the standard closed form in terms of the
//! residues mod 8 is used; at the real place it is a sign check.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::traits::{One, Signed, ToPrimitive, Zero};
use num::Integer;

use crate::arith::{self, Rat};
use crate::error::{Error, Result};

/// A place of ℚ: the real place or a finite prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Real,
    Finite(u64),
}

impl Place {
    /// Builds a finite place, certifying primality by trial division.
    pub fn finite(p: u64) -> Result<Place> {
        if arith::is_prime_u64(p) {
            Ok(Place::Finite(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "inf"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;

    fn from_str(s: &str) -> Result<Place> {
        if s == "inf" {
            return Ok(Place::Real);
        }
        let p: u64 = s
            .parse()
            .map_err(|_| Error::Parse(format!("invalid place `{s}`")))?;
        Place::finite(p)
    }
}

/// The Legendre symbol (a/p) by Euler's criterion: 0 if p | a, else
/// a^((p-1)/2) mod p mapped to ±1.
pub fn legendre(a: &BigInt, p: u64) -> Result<i32> {
    if p == 2 || !arith::is_prime_u64(p) {
        return Err(Error::EvenOrCompositeModulus(p));
    }
    let pb = BigInt::from(p);
    let a = a.mod_floor(&pb);
    if a.is_zero() {
        return Ok(0);
    }
    let r = a.modpow(&((&pb - 1u8) >> 1), &pb);
    if r.is_one() {
        Ok(1)
    } else {
        debug_assert_eq!(r, &pb - 1u8);
        Ok(-1)
    }
}

/// Legendre symbol of a rational p-adic unit.
pub(crate) fn legendre_unit_rat(r: &Rat, p: u64) -> Result<i32> {
    Ok(legendre(r.numer(), p)? * legendre(r.denom(), p)?)
}

pub(crate) fn sign_pow(s: i32, e: i64) -> i32 {
    if e % 2 == 0 {
        1
    } else {
        s
    }
}

/// Hilbert symbol over ℝ: −1 iff both arguments are negative.
pub fn hilbert_real(alpha: &Rat, beta: &Rat) -> Result<i32> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(if alpha.is_negative() && beta.is_negative() {
        -1
    } else {
        1
    })
}

/// Hilbert symbol over ℚ_p.
///
/// For odd p with a = v_p(α), b = v_p(β) and unit parts u, v this is the
/// Legendre symbol of (−1)^{ab} u^b v^{−a}; for p = 2 the closed dyadic
/// formula (−1)^{ε(u)ε(v) + aω(v) + bω(u)}.
pub fn hilbert_p(alpha: &Rat, beta: &Rat, p: u64) -> Result<i32> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::ZeroInput);
    }
    if p == 2 {
        return hilbert_dyadic(alpha, beta);
    }
    if !arith::is_prime_u64(p) {
        return Err(Error::EvenOrCompositeModulus(p));
    }
    let a = arith::valuation(alpha, p)?;
    let b = arith::valuation(beta, p)?;
    let u = arith::unit_part(alpha, p)?;
    let v = arith::unit_part(beta, p)?;
    let lm1 = legendre(&BigInt::from(-1), p)?;
    Ok(sign_pow(lm1, a * b)
        * sign_pow(legendre_unit_rat(&u, p)?, b)
        * sign_pow(legendre_unit_rat(&v, p)?, a))
}

/// Reduces an odd-adic unit to its residue in {1,3,5,7} mod 8.
fn odd_unit_mod8(r: &Rat) -> u64 {
    let eight = BigInt::from(8);
    let m = r.numer().mod_floor(&eight).to_u64().unwrap();
    let n = r.denom().mod_floor(&eight).to_u64().unwrap();
    // odd residues mod 8 square to 1, so 1/n = n
    (m * n) % 8
}

fn hilbert_dyadic(alpha: &Rat, beta: &Rat) -> Result<i32> {
    let a = arith::valuation(alpha, 2)?.rem_euclid(2) as u64;
    let b = arith::valuation(beta, 2)?.rem_euclid(2) as u64;
    let u = odd_unit_mod8(&arith::unit_part(alpha, 2)?);
    let v = odd_unit_mod8(&arith::unit_part(beta, 2)?);
    let eps = |x: u64| ((x - 1) / 2) % 2;
    let omega = |x: u64| ((x * x - 1) / 8) % 2;
    let exp = eps(u) * eps(v) + a * omega(v) + b * omega(u);
    Ok(if exp % 2 == 0 { 1 } else { -1 })
}

/// Hilbert symbol at an arbitrary place.
pub fn hilbert(alpha: &Rat, beta: &Rat, v: Place) -> Result<i32> {
    match v {
        Place::Real => hilbert_real(alpha, beta),
        Place::Finite(p) => hilbert_p(alpha, beta, p),
    }
}

/// The real place, the dyadic place, and every odd prime at which some
/// coefficient has nonzero valuation. Hilbert symbols of the coefficients
/// are +1 everywhere else.
pub fn relevant_places(coeffs: &[Rat]) -> Result<BTreeSet<Place>> {
    let mut out = BTreeSet::from([Place::Real, Place::Finite(2)]);
    for c in coeffs {
        for &(p, _) in &arith::factor(c)?.factors {
            if p != 2 {
                out.insert(Place::Finite(p));
            }
        }
    }
    Ok(out)
}

/// Is `r` a square in the completion at `v`?
pub fn is_local_square(r: &Rat, v: Place) -> Result<bool> {
    if r.is_zero() {
        return Err(Error::ZeroInput);
    }
    match v {
        Place::Real => Ok(r.is_positive()),
        Place::Finite(2) => {
            let val = arith::valuation(r, 2)?;
            Ok(val % 2 == 0 && odd_unit_mod8(&arith::unit_part(r, 2)?) == 1)
        }
        Place::Finite(p) => {
            let val = arith::valuation(r, p)?;
            Ok(val % 2 == 0 && legendre_unit_rat(&arith::unit_part(r, p)?, p)? == 1)
        }
    }
}
