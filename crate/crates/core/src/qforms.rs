//! Diagonal quadratic forms over ℚ: discriminant class, Hasse invariants,
//! isotropy at each place and globally via Hasse–Minkowski, value
//! representation, and ternary isometry testing.

use std::collections::BTreeSet;

use num::traits::{Signed, Zero};

use crate::arith::{self, Rat};
use crate::error::{Error, Result};
use crate::symbols::{self, Place};

/// The nondegenerate diagonal form ⟨a₁,…,aₙ⟩.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagForm {
    coeffs: Vec<Rat>,
}

impl DiagForm {
    pub fn new(coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::UnsupportedRank(0));
        }
        if coeffs.iter().any(Rat::is_zero) {
            return Err(Error::ZeroInput);
        }
        Ok(DiagForm { coeffs })
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// The orthogonal sum q ⊥ ⟨c⟩.
    pub fn extend(&self, c: Rat) -> Result<DiagForm> {
        let mut coeffs = self.coeffs.clone();
        coeffs.push(c);
        DiagForm::new(coeffs)
    }

    /// Number of positive and negative coefficients.
    pub fn signature(&self) -> (usize, usize) {
        let pos = self.coeffs.iter().filter(|c| c.is_positive()).count();
        (pos, self.coeffs.len() - pos)
    }

    fn product(&self) -> Rat {
        self.coeffs.iter().product()
    }
}

/// The discriminant class: the squarefree part of the coefficient product.
pub fn disc_class(q: &DiagForm) -> Result<Rat> {
    arith::squarefree_part(&q.product())
}

/// Hasse invariant ∏_{i<j} (aᵢ,aⱼ)_v with the strict upper-triangular
/// convention.
pub fn hasse_invariant(q: &DiagForm, v: Place) -> Result<i32> {
    let c = q.coeffs();
    let mut s = 1;
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            s *= symbols::hilbert(&c[i], &c[j], v)?;
        }
    }
    Ok(s)
}

/// Isotropy of `q` over the completion at `v`.
pub fn is_isotropic_local(q: &DiagForm, v: Place) -> Result<bool> {
    if let Place::Real = v {
        let (pos, neg) = q.signature();
        return Ok(pos > 0 && neg > 0);
    }
    let c = q.coeffs();
    match c.len() {
        1 => Ok(false),
        2 => symbols::is_local_square(&(-&c[0] * &c[1]), v),
        3 => {
            let ab = -(&c[0] * &c[1]);
            let ac = -(&c[0] * &c[2]);
            Ok(symbols::hilbert(&ab, &ac, v)? == 1)
        }
        4 => {
            let disc_square = symbols::is_local_square(&q.product(), v)?;
            let minus_one = Rat::from_integer((-1).into());
            let anisotropic = disc_square
                && hasse_invariant(q, v)? == -symbols::hilbert(&minus_one, &minus_one, v)?;
            Ok(!anisotropic)
        }
        // u-invariant of a p-adic field is 4
        _ => Ok(true),
    }
}

/// Isotropy over ℚ by Hasse–Minkowski: isotropic at every relevant place.
/// Ranks up to 4 are supported; outside the relevant places a form of rank
/// at least 2 is automatically isotropic.
pub fn is_isotropic_global(q: &DiagForm) -> Result<bool> {
    match q.rank() {
        1 => Ok(false),
        2..=4 => {
            for v in symbols::relevant_places(q.coeffs())? {
                if !is_isotropic_local(q, v)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        r => Err(Error::UnsupportedRank(r)),
    }
}

/// Relevant places at which `q` fails to be locally isotropic.
pub fn local_isotropy_failures(q: &DiagForm) -> Result<Vec<Place>> {
    let mut out = Vec::new();
    for v in symbols::relevant_places(q.coeffs())? {
        if !is_isotropic_local(q, v)? {
            out.push(v);
        }
    }
    Ok(out)
}

/// Does `q` represent the nonzero value `c` over ℚ?
pub fn represents(q: &DiagForm, c: &Rat) -> Result<bool> {
    if c.is_zero() {
        return Err(Error::ZeroInput);
    }
    // isotropic forms are universal
    if is_isotropic_global(q)? {
        return Ok(true);
    }
    is_isotropic_global(&q.extend(-c)?)
}

/// Are the rank-3 forms locally isometric at `v`? Complete invariants over a
/// completion: discriminant square class and Hasse invariant (signature at ∞).
pub fn locally_isometric_ternary(q: &DiagForm, q2: &DiagForm, v: Place) -> Result<bool> {
    if q.rank() != 3 || q2.rank() != 3 {
        return Err(Error::UnsupportedRank(q.rank().max(q2.rank())));
    }
    if let Place::Real = v {
        return Ok(q.signature() == q2.signature());
    }
    let same_disc = symbols::is_local_square(&(q.product() * q2.product()), v)?;
    Ok(same_disc && hasse_invariant(q, v)? == hasse_invariant(q2, v)?)
}

/// Global isometry of ternary forms: equal discriminant class, equal real
/// signature, and equal Hasse invariant at every relevant place.
pub fn isometric_ternary(q: &DiagForm, q2: &DiagForm) -> Result<bool> {
    if q.rank() != 3 || q2.rank() != 3 {
        return Err(Error::UnsupportedRank(q.rank().max(q2.rank())));
    }
    if disc_class(q)? != disc_class(q2)? {
        return Ok(false);
    }
    if q.signature() != q2.signature() {
        return Ok(false);
    }
    let mut places = symbols::relevant_places(q.coeffs())?;
    places.extend(symbols::relevant_places(q2.coeffs())?);
    for v in places {
        if hasse_invariant(q, v)? != hasse_invariant(q2, v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Places (including ∞) where the two ternary forms fail to be locally
/// isometric.
pub fn ternary_isometry_failures(q: &DiagForm, q2: &DiagForm) -> Result<Vec<Place>> {
    let mut places: BTreeSet<Place> = symbols::relevant_places(q.coeffs())?;
    places.extend(symbols::relevant_places(q2.coeffs())?);
    let mut out = Vec::new();
    for v in places {
        if !locally_isometric_ternary(q, q2, v)? {
            out.push(v);
        }
    }
    Ok(out)
}
