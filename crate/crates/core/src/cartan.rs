//! Cartan-type involutions of sl(2,ℚ), the 𝔩 ⊕ λ𝔭 construction of a new
//! algebra from an involution, and the obtainability classifiers over ℚ
//! and over the p-adic completions.

use num::traits::Zero;

use crate::arith::{self, rat_i, Rat};
use crate::error::{Error, Result};
use crate::lie3::{self, LParams, Lie3, LieVec, Mat3};
use crate::qforms;
use crate::symbols::{self, Place};

/// sl(2,ℚ) in the standard basis {h,e,f}: [h,e]=2e, [e,f]=h, [f,h]=2f.
fn sl2() -> Lie3 {
    let e01 = LieVec::from_rats(Rat::zero(), rat_i(2), Rat::zero());
    let e12 = LieVec::from_rats(rat_i(1), Rat::zero(), Rat::zero());
    let e20 = LieVec::from_rats(Rat::zero(), Rat::zero(), rat_i(2));
    Lie3::from_brackets(e01, e12, e20).expect("sl2 is a Lie algebra")
}

/// The Killing Gram matrix of sl(2,ℚ) in the standard basis.
fn sl2_gram() -> Mat3 {
    lie3::killing(&sl2())
}

/// The involution σ(h) = −h, σ(e) = a·f, σ(f) = (1/a)·e of sl(2,ℚ).
///
/// Every non-trivial involutive automorphism is of this shape in a suitable
/// standard basis; the fixed space is the line through x = e + a·f, with
/// K(x,x) = 8a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanReflection {
    a: Rat,
}

impl CartanReflection {
    pub fn new(a: Rat) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(CartanReflection { a })
    }

    pub fn parameter(&self) -> &Rat {
        &self.a
    }

    /// The matrix of σ in the basis {h,e,f}.
    pub fn matrix(&self) -> Mat3 {
        let mut m = Mat3::zero();
        m.0[0][0] = rat_i(-1);
        m.0[2][1] = self.a.clone();
        m.0[1][2] = rat_i(1) / &self.a;
        m
    }

    /// A spanning fixed vector x = e + a·f.
    pub fn fixed_vector(&self) -> LieVec {
        LieVec::from_rats(Rat::zero(), rat_i(1), self.a.clone())
    }

    /// K(x,x) = 8a for the fixed vector above.
    pub fn fixed_norm(&self) -> Rat {
        rat_i(8) * &self.a
    }

    /// Accepts an arbitrary involutive automorphism of sl(2,ℚ) in the
    /// standard basis and reduces it to reflection form by solving for the
    /// fixed line.
    pub fn from_matrix(m: &Mat3) -> Result<Self> {
        let id = Mat3::identity();
        if *m == id || m.mul(m) != id {
            return Err(Error::NotInvolutiveAutomorphism);
        }
        let l = sl2();
        for i in 0..3 {
            for j in i + 1..3 {
                let lhs = m.apply(l.basis_bracket(i, j));
                let rhs = l.bracket(&m.column(i), &m.column(j));
                if lhs != rhs {
                    return Err(Error::NotInvolutiveAutomorphism);
                }
            }
        }
        // fixed line: kernel of m − id, which must have rank 2
        let mut diff = m.clone();
        for i in 0..3 {
            diff.0[i][i] = &diff.0[i][i] - rat_i(1);
        }
        let row = |i: usize| LieVec(std::array::from_fn(|j| diff.0[i][j].clone()));
        let cross = |u: &LieVec, v: &LieVec| {
            LieVec([
                &u.0[1] * &v.0[2] - &u.0[2] * &v.0[1],
                &u.0[2] * &v.0[0] - &u.0[0] * &v.0[2],
                &u.0[0] * &v.0[1] - &u.0[1] * &v.0[0],
            ])
        };
        let (r0, r1, r2) = (row(0), row(1), row(2));
        let kernel = [cross(&r0, &r1), cross(&r0, &r2), cross(&r1, &r2)]
            .into_iter()
            .find(|v| !v.is_zero())
            .ok_or(Error::NotInvolutiveAutomorphism)?;
        // normalize the generator so the reduction is deterministic
        let lead = kernel.0.iter().find(|c| !c.is_zero()).unwrap().clone();
        let x = kernel.scale(&(rat_i(1) / lead));
        if m.apply(&x) != x {
            return Err(Error::NotInvolutiveAutomorphism);
        }
        let norm = sl2_gram().bilinear(&x, &x);
        debug_assert!(
            !norm.is_zero(),
            "fixed lines of involutions are anisotropic"
        );
        CartanReflection::new(norm / rat_i(8))
    }
}

/// Is σ of Cartan type? Exactly when K(x,x) = 8a is not a sum of two
/// squares, i.e. [K(x,x)] ≠ 1 in ℚ*/ℚ*₋₁.
pub fn is_cartan_type(s: &CartanReflection) -> Result<bool> {
    Ok(!arith::is_sum_two_squares(&s.fixed_norm())?)
}

/// Equivalence of Cartan-type involutions: equal fixed-vector norm classes
/// in ℚ*/ℚ*₋₁.
pub fn equivalent_involutions(s: &CartanReflection, s2: &CartanReflection) -> Result<bool> {
    if !is_cartan_type(s)? || !is_cartan_type(s2)? {
        return Err(Error::NotCartanType);
    }
    arith::is_sum_two_squares(&(&s.a / &s2.a))
}

/// An element E + λ·O of 𝔩 ⊕ λ𝔭, kept as a ℤ/2-graded pair over ℚ;
/// λ is never adjoined, the substitution λ² → Λ implements the bracket.
struct Graded {
    even: LieVec,
    odd: LieVec,
}

fn graded_bracket(l: &Lie3, lambda_sq: &Rat, x: &Graded, y: &Graded) -> Graded {
    Graded {
        even: l
            .bracket(&x.even, &y.even)
            .add(&l.bracket(&x.odd, &y.odd).scale(lambda_sq)),
        odd: l.bracket(&x.odd, &y.even).add(&l.bracket(&x.even, &y.odd)),
    }
}

/// The algebra 𝔰′ of the construction, in the basis
/// u₁ = (e+af)/2, u₂ = λh/2, u₃ = λ(e−af)/2, together with Λ = 4a.
///
/// The bracket is computed by the graded extension with λ² → Λ and checked
/// against the closed-form table [u₂,u₁]=u₃, [u₁,u₃]=−a·u₂, [u₃,u₂]=−Λ·u₁.
fn build_s_prime(a: &Rat) -> (Lie3, Rat) {
    let l = sl2();
    let lambda = rat_i(4) * a; // Λ = K(x,x)/2
    let half = Rat::new(1.into(), 2.into());
    let zero = LieVec::zero();
    let basis = [
        Graded {
            even: LieVec::from_rats(Rat::zero(), half.clone(), a * &half),
            odd: zero.clone(),
        },
        Graded {
            even: zero.clone(),
            odd: LieVec::from_rats(half.clone(), Rat::zero(), Rat::zero()),
        },
        Graded {
            even: zero,
            odd: LieVec::from_rats(Rat::zero(), half.clone(), -(a * &half)),
        },
    ];
    // decompose a graded element in the u-basis
    let decompose = |g: &Graded| -> LieVec {
        let c1 = rat_i(2) * &g.even.0[1];
        assert!(g.even.0[0].is_zero() && g.even.0[2] == a * &g.even.0[1]);
        let c2 = rat_i(2) * &g.odd.0[0];
        let c3 = rat_i(2) * &g.odd.0[1];
        assert!(g.odd.0[2] == -(a * &g.odd.0[1]));
        LieVec([c1, c2, c3])
    };
    let table: [[LieVec; 3]; 3] = std::array::from_fn(|i| {
        std::array::from_fn(|j| decompose(&graded_bracket(&l, &lambda, &basis[i], &basis[j])))
    });
    let sc = Lie3::new(table).expect("the graded extension is a Lie algebra");
    let expected = Lie3::from_brackets(
        LieVec::from_rats(Rat::zero(), Rat::zero(), rat_i(-1)),
        LieVec::from_rats(lambda.clone(), Rat::zero(), Rat::zero()),
        LieVec::from_rats(Rat::zero(), a.clone(), Rat::zero()),
    )
    .unwrap();
    assert_eq!(
        sc, expected,
        "structure constants must match the closed form"
    );
    (sc, lambda)
}

/// The constructed algebra: Λ, the structure constants in the u-basis,
/// and the recognized standard parameters.
#[derive(Debug, Clone)]
pub struct ObtainedAlgebra {
    pub lambda: Rat,
    pub sc: Lie3,
    pub params: LParams,
}

/// Runs the 𝔰′ = 𝔩 ⊕ λ𝔭 construction for a Cartan-type involution.
pub fn construct(s: &CartanReflection) -> Result<ObtainedAlgebra> {
    if !is_cartan_type(s)? {
        return Err(Error::NotCartanType);
    }
    let (sc, lambda) = build_s_prime(&s.a);
    let (params, _) = lie3::standardize(&sc)?;
    let minus = LParams::new(-&lambda, -&lambda)?;
    assert!(
        lie3::is_isomorphic(&params, &minus)?,
        "the constructed algebra is isomorphic to L(-Lambda,-Lambda)"
    );
    Ok(ObtainedAlgebra { lambda, sc, params })
}

/// Both sides of the splitness criterion for the constructed algebra:
/// returns whether 𝔰′ is split, which must equal 8a ∈ ℚ*₋₁.
pub fn splitness_verdict(s: &CartanReflection) -> Result<bool> {
    let half_norm = rat_i(4) * &s.a;
    if arith::is_square(&half_norm) {
        return Err(Error::HypothesisViolated);
    }
    let (sc, _) = build_s_prime(&s.a);
    let (params, _) = lie3::standardize(&sc)?;
    let split = lie3::is_split(&params)?;
    let two_squares = arith::is_sum_two_squares(&s.fixed_norm())?;
    assert_eq!(
        split, two_squares,
        "splitness of the construction must match the two-squares class"
    );
    Ok(split)
}

/// Deterministic search for δ exhibiting K(L(α,β)) ≅ ⟨−2, δ, δ⟩: a small
/// grid of rational vectors w with K(w,w) = −2; δ is the norm of an
/// anisotropic vector in the orthogonal complement of w.
pub fn delta_witness(p: &LParams) -> Option<Rat> {
    let k = lie3::killing_form(p);
    let d = k.coeffs();
    let kq = |w: &[Rat; 3]| -> Rat { (0..3).map(|i| &d[i] * &w[i] * &w[i]).sum() };
    let target = rat_i(-2);
    for den in 1i64..=3 {
        for n1 in -3i64..=3 {
            for n2 in -3i64..=3 {
                for n3 in -3i64..=3 {
                    if n1 == 0 && n2 == 0 && n3 == 0 {
                        continue;
                    }
                    let w = [
                        arith::rat(n1, den),
                        arith::rat(n2, den),
                        arith::rat(n3, den),
                    ];
                    if kq(&w) != target {
                        continue;
                    }
                    // K-orthogonal complement of w; K restricted there is
                    // nondegenerate, so one of the candidates is anisotropic
                    let wv = LieVec(w.clone());
                    let gram = lie3::killing(&lie3::from_params(p));
                    let nw = gram.bilinear(&wv, &wv);
                    let mut complement: Vec<LieVec> = Vec::new();
                    for i in 0..3 {
                        let e = LieVec::basis(i);
                        let proj = e.sub(&wv.scale(&(gram.bilinear(&e, &wv) / &nw)));
                        if proj.is_zero() {
                            continue;
                        }
                        if complement.iter().all(|u| proj.ratio_to(u).is_none()) {
                            complement.push(proj);
                        }
                        if complement.len() == 2 {
                            break;
                        }
                    }
                    let (c0, c1) = (&complement[0], &complement[1]);
                    for cand in [c0.clone(), c1.clone(), c0.add(c1)] {
                        let delta = gram.bilinear(&cand, &cand);
                        if !delta.is_zero() {
                            return Some(delta);
                        }
                    }
                }
            }
        }
    }
    None
}

/// The obtainability report: splitness, the two equivalent algebraic
/// conditions, and the prime-congruence route.
#[derive(Debug, Clone)]
pub struct ObtainReport {
    /// Is L(α,β) split?
    pub split: bool,
    /// Is the algebra isomorphic to some L(−Δ,−Δ)? Equivalent to
    /// `represents_minus_two`, which certifies it.
    pub delta_pair: bool,
    /// Does the Killing form represent −2?
    pub represents_minus_two: bool,
    /// The Legendre criterion: symbol +1 at every prime q ≡ 1 (mod 4)
    /// with v_q(α) or v_q(β) nonzero.
    pub legendre_route: bool,
    /// The primes q ≡ 1 (mod 4) examined, with their symbol, ascending.
    pub witnesses: Vec<(u64, i32)>,
    /// An explicit δ with K ≅ ⟨−2,δ,δ⟩ when the deterministic search finds
    /// one; `None` means the witness is implied by `represents_minus_two`.
    pub delta_witness: Option<Rat>,
}

impl ObtainReport {
    /// Obtainable: non-split with a Killing form representing −2.
    pub fn obtainable(&self) -> bool {
        !self.split && self.represents_minus_two
    }
}

/// Classifies L(α,β): splitness, the represents(−2) route, and the
/// Legendre route, which must agree on non-split inputs.
pub fn obtain_report(p: &LParams) -> Result<ObtainReport> {
    let split = lie3::is_split(p)?;
    let kf = lie3::killing_form(p);
    let represents_minus_two = qforms::represents(&kf, &rat_i(-2))?;
    let mut witnesses = Vec::new();
    let mut legendre_route = true;
    for v in symbols::relevant_places(&[p.alpha.clone(), p.beta.clone()])? {
        let q = match v {
            Place::Finite(q) if q % 4 == 1 => q,
            _ => continue,
        };
        let a = arith::valuation(&p.alpha, q)?;
        let b = arith::valuation(&p.beta, q)?;
        if a == 0 && b == 0 {
            continue;
        }
        // Legendre symbol of the q-unit α^b / β^a
        let u = arith::unit_part(&p.alpha, q)?;
        let w = arith::unit_part(&p.beta, q)?;
        let val = symbols::sign_pow(symbols::legendre_unit_rat(&u, q)?, b)
            * symbols::sign_pow(symbols::legendre_unit_rat(&w, q)?, a);
        witnesses.push((q, val));
        if val == -1 {
            legendre_route = false;
        }
    }
    let delta = if represents_minus_two {
        delta_witness(p)
    } else {
        None
    };
    Ok(ObtainReport {
        split,
        delta_pair: represents_minus_two,
        represents_minus_two,
        legendre_route,
        witnesses,
        delta_witness: delta,
    })
}

/// The local criterion: a non-split algebra over ℚ_q (q odd) is obtainable
/// exactly when q ≡ 3 (mod 4). Cross-checked against the local isotropy of
/// K ⊥ ⟨2⟩ at q.
pub fn obtainable_over_qp(p: &LParams, q: u64) -> Result<bool> {
    if q == 2 {
        return Err(Error::EvenPrime);
    }
    let sym = symbols::hilbert_p(&-&p.alpha, &-&p.beta, q)?;
    if sym == 1 {
        return Err(Error::SplitLocally);
    }
    let by_congruence = q % 4 == 3;
    let extended = lie3::killing_form(p).extend(rat_i(2))?;
    let by_form = qforms::is_isotropic_local(&extended, Place::Finite(q))?;
    assert_eq!(
        by_congruence, by_form,
        "residue congruence and local representation of -2 must agree"
    );
    Ok(by_congruence)
}

/// −1 is a square in ℚ_q (q an odd prime) exactly when q ≡ 1 (mod 4);
/// computed as legendre(−1, q) = +1. The dyadic case is out of scope.
pub fn minus_one_square_qp(q: u64) -> Result<bool> {
    if q == 2 {
        return Err(Error::EvenPrime);
    }
    let by_euler = symbols::legendre(&(-1).into(), q)? == 1;
    debug_assert_eq!(by_euler, q % 4 == 1);
    Ok(by_euler)
}
