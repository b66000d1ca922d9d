//! Quaternion algebras (α,β | ℚ): element arithmetic, conjugation, norms,
//! the construction of H(𝔰) = ℚ ⊕ 𝔰 from a simple Lie algebra and its
//! inverse, and ramification sets.

use std::collections::BTreeSet;

use num::traits::Zero;

use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::lie3::{self, LParams, Lie3, LieVec, Mat3};
use crate::symbols::{self, Place};

/// The algebra on generators i, j with i² = α, j² = β, ij = −ji.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuatAlg {
    pub alpha: Rat,
    pub beta: Rat,
}

impl QuatAlg {
    pub fn new(alpha: Rat, beta: Rat) -> Result<Self> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(QuatAlg { alpha, beta })
    }
}

/// The element a + b·i + c·j + d·ij.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuatElt {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

impl QuatElt {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        QuatElt { a, b, c, d }
    }

    pub fn zero() -> Self {
        Self::new(Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        let mut x = Self::zero();
        x.a = Rat::from_integer(1.into());
        x
    }

    /// The basis element 1, i, j or ij.
    pub fn basis(idx: usize) -> Self {
        let mut x = Self::zero();
        let one = Rat::from_integer(1.into());
        match idx {
            0 => x.a = one,
            1 => x.b = one,
            2 => x.c = one,
            3 => x.d = one,
            _ => panic!("quaternion basis index out of range"),
        }
        x
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            &self.a + &o.a,
            &self.b + &o.b,
            &self.c + &o.c,
            &self.d + &o.d,
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(
            &self.a - &o.a,
            &self.b - &o.b,
            &self.c - &o.c,
            &self.d - &o.d,
        )
    }

    pub fn scale(&self, t: &Rat) -> Self {
        Self::new(&self.a * t, &self.b * t, &self.c * t, &self.d * t)
    }
}

/// The associative product determined by i² = α, j² = β, ij = −ji.
pub fn mul(alg: &QuatAlg, x: &QuatElt, y: &QuatElt) -> QuatElt {
    let (al, be) = (&alg.alpha, &alg.beta);
    let ab = al * be;
    QuatElt::new(
        &x.a * &y.a + al * (&x.b * &y.b) + be * (&x.c * &y.c) - &ab * (&x.d * &y.d),
        &x.a * &y.b + &x.b * &y.a - be * (&x.c * &y.d) + be * (&x.d * &y.c),
        &x.a * &y.c + &x.c * &y.a + al * (&x.b * &y.d) - al * (&x.d * &y.b),
        &x.a * &y.d + &x.d * &y.a + &x.b * &y.c - &x.c * &y.b,
    )
}

/// Quaternion conjugation a − (bi + cj + dij).
pub fn conj(x: &QuatElt) -> QuatElt {
    QuatElt::new(x.a.clone(), -&x.b, -&x.c, -&x.d)
}

/// The norm N(x) = x·x̄, a scalar: a² − αb² − βc² + αβd².
pub fn norm(alg: &QuatAlg, x: &QuatElt) -> Rat {
    let p = mul(alg, x, &conj(x));
    debug_assert!(p.b.is_zero() && p.c.is_zero() && p.d.is_zero());
    p.a
}

/// Places where (α,β | ℚ) is a division algebra; always of even size.
pub fn ramification_set(alg: &QuatAlg) -> Result<BTreeSet<Place>> {
    let mut out = BTreeSet::new();
    for v in symbols::relevant_places(&[alg.alpha.clone(), alg.beta.clone()])? {
        if symbols::hilbert(&alg.alpha, &alg.beta, v)? == -1 {
            out.insert(v);
        }
    }
    Ok(out)
}

/// The imaginary part of (α,β | ℚ) under the halved commutator bracket is
/// L(−β,−α).
pub fn im_to_lie(alg: &QuatAlg) -> LParams {
    LParams::new(-&alg.beta, -&alg.alpha).expect("quaternion parameters are nonzero")
}

/// An element a·1 + v of H(𝔰) = ℚ ⊕ 𝔰.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HElt {
    pub scalar: Rat,
    pub vec: LieVec,
}

impl HElt {
    pub fn new(scalar: Rat, vec: LieVec) -> Self {
        HElt { scalar, vec }
    }

    pub fn one() -> Self {
        HElt::new(Rat::from_integer(1.into()), LieVec::zero())
    }

    /// Basis element: index 0 is 1, indices 1..=3 are the Lie basis vectors.
    pub fn basis(idx: usize) -> Self {
        if idx == 0 {
            Self::one()
        } else {
            HElt::new(Rat::zero(), LieVec::basis(idx - 1))
        }
    }
}

/// H(𝔰) = ℚ ⊕ 𝔰 with v·w = K(v,w)/8 + `[v,w]`/2, together with the
/// identification H(𝔰) ≅ (−β,−α | ℚ) through a standardized basis of 𝔰.
#[derive(Debug, Clone)]
pub struct HAlgebra {
    lie: Lie3,
    gram: Mat3,
    params: LParams,
    basis_inv: Mat3,
    alg: QuatAlg,
}

/// Builds H(𝔰) from a simple algebra.
pub fn from_lie(l: &Lie3) -> Result<HAlgebra> {
    if !lie3::is_simple(l) {
        return Err(Error::NotSimple);
    }
    let gram = lie3::killing(l);
    let (params, basis) = lie3::standardize(l)?;
    let basis_inv = basis.inverse().expect("standardized basis is invertible");
    let alg = QuatAlg::new(-&params.beta, -&params.alpha)?;
    Ok(HAlgebra {
        lie: l.clone(),
        gram,
        params,
        basis_inv,
        alg,
    })
}

impl HAlgebra {
    /// The quaternion algebra (−β,−α | ℚ) this H(𝔰) is identified with.
    pub fn algebra(&self) -> &QuatAlg {
        &self.alg
    }

    /// The recognized L(α,β) parameters of the underlying Lie algebra.
    pub fn params(&self) -> &LParams {
        &self.params
    }

    /// The intrinsic product on ℚ ⊕ 𝔰.
    pub fn mul(&self, x: &HElt, y: &HElt) -> HElt {
        let eighth = Rat::new(1.into(), 8.into());
        let half = Rat::new(1.into(), 2.into());
        let scalar = &x.scalar * &y.scalar + self.gram.bilinear(&x.vec, &y.vec) * eighth;
        let vec = y
            .vec
            .scale(&x.scalar)
            .add(&x.vec.scale(&y.scalar))
            .add(&self.lie.bracket(&x.vec, &y.vec).scale(&half));
        HElt::new(scalar, vec)
    }

    pub fn conj(&self, x: &HElt) -> HElt {
        HElt::new(
            x.scalar.clone(),
            x.vec.scale(&Rat::from_integer((-1).into())),
        )
    }

    /// N(a + v) = a² − K(v,v)/8.
    pub fn norm(&self, x: &HElt) -> Rat {
        let p = self.mul(x, &self.conj(x));
        debug_assert!(p.vec.is_zero());
        p.scalar
    }

    /// The isomorphism onto (−β,−α | ℚ): the standardized basis (x,y,z)
    /// of 𝔰 maps to (i/2, j/2, ij/2).
    pub fn to_quat(&self, x: &HElt) -> QuatElt {
        let w = self.basis_inv.apply(&x.vec);
        let half = Rat::new(1.into(), 2.into());
        QuatElt::new(
            x.scalar.clone(),
            &w.0[0] * &half,
            &w.0[1] * &half,
            &w.0[2] * &half,
        )
    }
}
