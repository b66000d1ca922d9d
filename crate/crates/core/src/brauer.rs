//! The group ℚ*/ℚ*₋₁ with canonical representatives, its realization as
//! the subgroup H(ℚ) of the Brauer group, and the correspondence
//! round-trips between involutions, obtainable algebras and classes.

use num::bigint::BigInt;
use num::traits::One;

use crate::arith::{self, rat_i, Rat};
use crate::cartan::{self, CartanReflection};
use crate::error::{Error, Result};
use crate::lie3::{self, LParams};
use crate::quat::{self, QuatAlg};
use crate::symbols::Place;

/// An element of ℚ*/ℚ*₋₁ by its canonical representative:
/// sign · ∏ of the primes p ≡ 3 (mod 4) with odd valuation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrauerClass {
    rep: Rat,
}

impl BrauerClass {
    pub fn rep(&self) -> &Rat {
        &self.rep
    }

    pub fn is_trivial(&self) -> bool {
        self.rep.is_one()
    }
}

/// The quotient map ℚ* → ℚ*/ℚ*₋₁.
pub fn class_of(r: &Rat) -> Result<BrauerClass> {
    let f = arith::factor(r)?;
    let mut rep = BigInt::from(f.sign);
    for &(p, e) in &f.factors {
        if p % 4 == 3 && e.rem_euclid(2) == 1 {
            rep *= BigInt::from(p);
        }
    }
    Ok(BrauerClass {
        rep: Rat::from(rep),
    })
}

/// The group law, matching the tensor relation
/// [(−1,Δ|ℚ)]·[(−1,Δ′|ℚ)] = [(−1,ΔΔ′|ℚ)].
pub fn group_mul(c: &BrauerClass, c2: &BrauerClass) -> BrauerClass {
    class_of(&(&c.rep * &c2.rep)).expect("representatives are nonzero")
}

/// The class computed from the ramification set of the associated
/// quaternion algebra: Δ < 0 iff ramified at ∞, and the odd ramified primes
/// (all ≡ 3 mod 4 for obtainable algebras) are the prime support.
fn class_from_ramification(p: &LParams) -> Result<BrauerClass> {
    let ram = lie3::ramification(p)?;
    let mut rep = BigInt::one();
    if ram.contains(&Place::Real) {
        rep = -rep;
    }
    for v in &ram {
        if let Place::Finite(q) = v {
            if *q == 2 {
                continue;
            }
            assert_eq!(
                q % 4,
                3,
                "obtainable algebras ramify only at primes ≡ 3 (mod 4)"
            );
            rep *= BigInt::from(*q);
        }
    }
    Ok(BrauerClass {
        rep: Rat::from(rep),
    })
}

/// The class `[Δ]` of an obtainable non-split algebra, with
/// L(α,β) ≅ L(−Δ,1).
///
/// The explicit δ of a ⟨−2,δ,δ⟩ diagonalization is used when the
/// deterministic search finds one, and the result is checked against the
/// ramification route; otherwise the ramification route alone decides.
pub fn class_from_obtainable(p: &LParams) -> Result<BrauerClass> {
    let report = cartan::obtain_report(p)?;
    if report.split || !report.obtainable() {
        return Err(Error::NotObtainable);
    }
    let by_ram = class_from_ramification(p)?;
    if let Some(delta) = report.delta_witness {
        let by_delta = class_of(&(delta / rat_i(2)))?;
        assert_eq!(
            by_delta, by_ram,
            "delta-witness and ramification classes must agree"
        );
    }
    Ok(by_ram)
}

/// The full correspondence round-trip for one nontrivial class `[Δ]`:
/// the reflection with a = Δ/8 is of Cartan type, its constructed algebra
/// is obtainable non-split with class `[Δ]`, and the quaternion algebra
/// (−1,Δ|ℚ) has the same ramification as H(𝔰′).
pub fn correspondence_roundtrip(delta: &Rat) -> Result<bool> {
    let cls = class_of(delta)?;
    if cls.is_trivial() {
        return Err(Error::TrivialClass);
    }
    let refl = CartanReflection::new(delta / rat_i(8))?;
    if !cartan::is_cartan_type(&refl)? {
        return Ok(false);
    }
    let obt = cartan::construct(&refl)?;
    let report = cartan::obtain_report(&obt.params)?;
    if report.split || !report.obtainable() {
        return Ok(false);
    }
    if class_from_obtainable(&obt.params)? != cls {
        return Ok(false);
    }
    let reference = QuatAlg::new(rat_i(-1), delta.clone())?;
    let h = quat::from_lie(&obt.sc)?;
    Ok(quat::ramification_set(&reference)? == quat::ramification_set(h.algebra())?)
}
