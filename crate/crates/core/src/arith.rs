//! Exact rational arithmetic: factorization, p-adic valuations, squarefree
//! parts, and membership in the subgroup of nonzero sums of two squares.

use std::collections::BTreeMap;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{Signed, ToPrimitive, Zero};
use num::Integer;

use crate::error::{Error, Result};

/// The scalar type of the whole crate: an arbitrary-precision rational,
/// always stored reduced with positive denominator.
pub type Rat = BigRational;

/// Default ceiling on |numerator| and denominator accepted by [`factor`].
pub const DEFAULT_FACTOR_BOUND: u64 = 1 << 63;

/// Builds `n/d` as a reduced rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn rat_i(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Parses a rational literal: optional sign, integer, optional `/` integer.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal `{s}`"));
    let (num_str, den_str) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let digits = |t: &str, signed: bool| -> bool {
        let t = if signed {
            t.strip_prefix(['+', '-']).unwrap_or(t)
        } else {
            t
        };
        !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(num_str, true) {
        return Err(bad());
    }
    let num = BigInt::from_str(num_str).map_err(|_| bad())?;
    let den = match den_str {
        None => BigInt::from(1),
        Some(d) => {
            if !digits(d, false) {
                return Err(bad());
            }
            BigInt::from_str(d).map_err(|_| bad())?
        }
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rat::new(num, den))
}

/// Deterministic trial-division primality test.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut p = 3u64;
    while (p as u128) * (p as u128) <= n as u128 {
        if n % p == 0 {
            return false;
        }
        p += 2;
    }
    true
}

/// `sign * prod p^e` with distinct primes in increasing order and nonzero
/// exponents; exponents of denominator primes are negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub factors: Vec<(u64, i64)>,
}

impl Factorization {
    /// Multiplies the factorization back into a rational.
    pub fn value(&self) -> Rat {
        let mut v = Rat::from(BigInt::from(self.sign));
        for &(p, e) in &self.factors {
            let pw = Rat::from(BigInt::from(p)).pow(e as i32);
            v *= pw;
        }
        v
    }
}

fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut e = 0u32;
    while n % 2 == 0 {
        n /= 2;
        e += 1;
    }
    if e > 0 {
        out.push((2, e));
    }
    let mut p = 3u64;
    while (p as u128) * (p as u128) <= n as u128 {
        let mut e = 0u32;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn bounded_u64(n: &BigInt, bound: u64) -> Result<u64> {
    match n.to_u64() {
        Some(v) if v <= bound => Ok(v),
        _ => Err(Error::BoundExceeded(n.clone(), bound)),
    }
}

/// Factors a nonzero rational by trial division, with the default bound.
pub fn factor(r: &Rat) -> Result<Factorization> {
    factor_bounded(r, DEFAULT_FACTOR_BOUND)
}

/// Factors a nonzero rational whose |numerator| and denominator are at most
/// `bound`.
pub fn factor_bounded(r: &Rat, bound: u64) -> Result<Factorization> {
    if r.is_zero() {
        return Err(Error::ZeroInput);
    }
    let num = bounded_u64(&r.numer().abs(), bound)?;
    let den = bounded_u64(r.denom(), bound)?;
    let mut map: BTreeMap<u64, i64> = BTreeMap::new();
    for (p, e) in factor_u64(num) {
        map.insert(p, e as i64);
    }
    for (p, e) in factor_u64(den) {
        *map.entry(p).or_insert(0) -= e as i64;
    }
    Ok(Factorization {
        sign: if r.is_negative() { -1 } else { 1 },
        factors: map.into_iter().filter(|&(_, e)| e != 0).collect(),
    })
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0i64;
    loop {
        let (q, r) = n.div_rem(p);
        if r.is_zero() {
            n = q;
            v += 1;
        } else {
            return v;
        }
    }
}

/// The exponent of the prime `p` in a nonzero rational.
pub fn valuation(r: &Rat, p: u64) -> Result<i64> {
    if r.is_zero() {
        return Err(Error::ZeroInput);
    }
    debug_assert!(is_prime_u64(p), "valuation at non-prime {p}");
    let pb = BigInt::from(p);
    Ok(int_valuation(r.numer(), &pb) - int_valuation(r.denom(), &pb))
}

/// `r / p^{valuation(r,p)}`: the p-free part, a p-adic unit.
pub fn unit_part(r: &Rat, p: u64) -> Result<Rat> {
    let v = valuation(r, p)?;
    let pw = Rat::from(BigInt::from(p)).pow(v as i32);
    Ok(r / pw)
}

/// The unique squarefree integer `s` with `r/s` a square; sign preserved.
pub fn squarefree_part(r: &Rat) -> Result<Rat> {
    let f = factor(r)?;
    let mut s = BigInt::from(f.sign);
    for &(p, e) in &f.factors {
        if e.rem_euclid(2) == 1 {
            s *= BigInt::from(p);
        }
    }
    Ok(Rat::from(s))
}

/// Is `r` a square in ℚ? (0 counts as a square.)
pub fn is_square(r: &Rat) -> bool {
    if r.is_negative() {
        return false;
    }
    let exact = |n: &BigInt| {
        let s = n.sqrt();
        &s * &s == *n
    };
    exact(r.numer()) && exact(r.denom())
}

/// Membership in ℚ*₋₁, the multiplicative group of nonzero sums of two
/// squares: `r > 0` and every prime `p ≡ 3 (mod 4)` has even exponent in `r`.
pub fn is_sum_two_squares(r: &Rat) -> Result<bool> {
    if r.is_zero() {
        return Err(Error::ZeroInput);
    }
    if r.is_negative() {
        return Ok(false);
    }
    let f = factor(r)?;
    Ok(f.factors.iter().all(|&(p, e)| p % 4 != 3 || e % 2 == 0))
}

/// Bounded search for `x² + y² = r` with `x = u/w`, `y = v/w`, `w ≤ max_den`.
/// Independent of [`is_sum_two_squares`]; kept as an oracle and for witness
/// output.
pub fn two_squares_witness(r: &Rat, max_den: u64) -> Option<(Rat, Rat)> {
    if !r.is_positive() {
        return None;
    }
    for w in 1..=max_den {
        let wb = BigInt::from(w);
        let t = r * Rat::from(&wb * &wb);
        if !t.is_integer() {
            continue;
        }
        let t = t.to_integer();
        let mut u = BigInt::zero();
        while &u * &u <= t {
            let rem = &t - &u * &u;
            let s = rem.sqrt();
            if &s * &s == rem {
                return Some((Rat::new(u, wb.clone()), Rat::new(s, wb)));
            }
            u += 1;
        }
    }
    None
}
