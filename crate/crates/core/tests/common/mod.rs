#![allow(dead_code)]

//! Brute-force oracles, independent of the library's symbol and isotropy
//! routines: exhaustive primitive-solution searches modulo prime powers
//! with a Hensel-safe exponent margin.

use lie3q::arith::Rat;
use num::traits::ToPrimitive;

/// Does ⟨c₁,…,cₙ⟩ (integer coefficients, rank 2 or 3) have a primitive zero
/// mod p^m? A primitive solution has some unit coordinate, which can be
/// scaled to 1, so the search fixes each coordinate to 1 in turn and scans
/// one free coordinate against the precomputed value set of the other.
pub fn primitive_zero_mod_diag(coeffs: &[i64], p: u64, m: u32) -> bool {
    let modulus128 = (p as u128).pow(m);
    assert!(modulus128 < (1u128 << 32), "oracle modulus too large");
    let modulus = modulus128 as u64;
    let cs: Vec<u64> = coeffs
        .iter()
        .map(|&c| c.rem_euclid(modulus as i64) as u64)
        .collect();
    let mulm = |a: u64, b: u64| ((a as u128 * b as u128) % modulus as u128) as u64;
    let value_set = |c: u64| -> Vec<bool> {
        let mut set = vec![false; modulus as usize];
        for s in 0..modulus {
            set[mulm(c, mulm(s, s)) as usize] = true;
        }
        set
    };
    match cs.len() {
        2 => {
            for i in 0..2 {
                let j = 1 - i;
                let need = (modulus - cs[i]) % modulus;
                let set = value_set(cs[j]);
                if set[need as usize] {
                    return true;
                }
            }
            false
        }
        3 => {
            let mut sets: [Option<Vec<bool>>; 3] = [None, None, None];
            for i in 0..3 {
                let (j, k) = match i {
                    0 => (1, 2),
                    1 => (0, 2),
                    _ => (0, 1),
                };
                if sets[k].is_none() {
                    sets[k] = Some(value_set(cs[k]));
                }
                let bk = sets[k].as_ref().unwrap();
                for t in 0..modulus {
                    let partial = (cs[i] + mulm(cs[j], mulm(t, t))) % modulus;
                    let need = (modulus - partial) % modulus;
                    if bk[need as usize] {
                        return true;
                    }
                }
            }
            false
        }
        n => panic!("oracle supports rank 2 and 3, got {n}"),
    }
}

fn int_valuation(mut n: i64, p: u64) -> u32 {
    assert!(n != 0);
    n = n.abs();
    let mut v = 0;
    while n % p as i64 == 0 {
        n /= p as i64;
        v += 1;
    }
    v
}

/// Clears a rational to an integer by a square factor, which leaves every
/// Hilbert symbol and isotropy verdict unchanged.
pub fn clear_to_int(r: &Rat) -> i64 {
    (r.numer() * r.denom())
        .to_i64()
        .expect("oracle inputs stay small")
}

/// Decides (α,β)_p = +1 by exhaustive search for a primitive solution of
/// z² = αx² + βy², i.e. a zero of ⟨α,β,−1⟩, mod p^{3+v} (mod 2^{6+v} for
/// p = 2) where v bounds the coefficient valuations.
pub fn hilbert_oracle(alpha: &Rat, beta: &Rat, p: u64) -> bool {
    let a = clear_to_int(alpha);
    let b = clear_to_int(beta);
    let margin = if p == 2 { 6 } else { 3 };
    let m = margin + int_valuation(a, p).max(int_valuation(b, p));
    primitive_zero_mod_diag(&[a, b, -1], p, m)
}

/// Local isotropy of a diagonal form with rational coefficients by the
/// same exhaustive search.
pub fn isotropy_oracle(coeffs: &[Rat], p: u64) -> bool {
    let cs: Vec<i64> = coeffs.iter().map(clear_to_int).collect();
    let margin = if p == 2 { 6 } else { 3 };
    let m = margin + cs.iter().map(|&c| int_valuation(c, p)).max().unwrap();
    primitive_zero_mod_diag(&cs, p, m)
}

/// The least positive non-residue mod an odd prime, by exhaustive squaring.
pub fn least_nonresidue(p: u64) -> u64 {
    let squares: std::collections::BTreeSet<u64> = (1..p).map(|x| x * x % p).collect();
    (2..p)
        .find(|n| !squares.contains(n))
        .expect("odd primes have non-residues")
}
