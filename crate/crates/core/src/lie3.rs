//! Three-dimensional Lie algebras by exact structure constants: the
//! L(α,β) family, Killing forms, adjoint characteristic polynomials,
//! simplicity, splitness, standardization and isomorphism tests.

use std::array;
use std::collections::BTreeSet;

use num::traits::Zero;

use crate::arith::{self, Rat};
use crate::error::{Error, Result};
use crate::qforms::{self, DiagForm};
use crate::symbols::{self, Place};

/// A vector in the algebra's basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieVec(pub [Rat; 3]);

impl LieVec {
    pub fn zero() -> Self {
        LieVec(array::from_fn(|_| Rat::zero()))
    }

    pub fn basis(i: usize) -> Self {
        let mut v = Self::zero();
        v.0[i] = Rat::from_integer(1.into());
        v
    }

    pub fn from_rats(a: Rat, b: Rat, c: Rat) -> Self {
        LieVec([a, b, c])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        LieVec(array::from_fn(|i| &self.0[i] + &o.0[i]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        LieVec(array::from_fn(|i| &self.0[i] - &o.0[i]))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        LieVec(array::from_fn(|i| &self.0[i] * c))
    }

    /// The scalar c with `self = c·w`, if the vectors are proportional and
    /// `w` is nonzero.
    pub fn ratio_to(&self, w: &Self) -> Option<Rat> {
        let i = (0..3).find(|&i| !w.0[i].is_zero())?;
        let c = &self.0[i] / &w.0[i];
        if *self == w.scale(&c) {
            Some(c)
        } else {
            None
        }
    }
}

/// A 3×3 matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat3(pub [[Rat; 3]; 3]);

impl Mat3 {
    pub fn zero() -> Self {
        Mat3(array::from_fn(|_| array::from_fn(|_| Rat::zero())))
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.0[i][i] = Rat::from_integer(1.into());
        }
        m
    }

    pub fn from_columns(c0: &LieVec, c1: &LieVec, c2: &LieVec) -> Self {
        let cols = [c0, c1, c2];
        Mat3(array::from_fn(|i| array::from_fn(|j| cols[j].0[i].clone())))
    }

    pub fn column(&self, j: usize) -> LieVec {
        LieVec(array::from_fn(|i| self.0[i][j].clone()))
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &LieVec) -> LieVec {
        LieVec(array::from_fn(|i| {
            (0..3).map(|j| &self.0[i][j] * &v.0[j]).sum()
        }))
    }

    pub fn mul(&self, o: &Mat3) -> Mat3 {
        Mat3(array::from_fn(|i| {
            array::from_fn(|j| (0..3).map(|k| &self.0[i][k] * &o.0[k][j]).sum())
        }))
    }

    pub fn trace(&self) -> Rat {
        &self.0[0][0] + &self.0[1][1] + &self.0[2][2]
    }

    pub fn det(&self) -> Rat {
        let m = &self.0;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    pub fn inverse(&self) -> Option<Mat3> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let m = &self.0;
        // cyclic-index cofactor: rows r+1, r+2 and columns c+1, c+2 (mod 3)
        // carry the sign of (-1)^{r+c} automatically
        let cof = |r: usize, c: usize| -> Rat {
            let (r1, r2) = ((r + 1) % 3, (r + 2) % 3);
            let (c1, c2) = ((c + 1) % 3, (c + 2) % 3);
            &m[r1][c1] * &m[r2][c2] - &m[r1][c2] * &m[r2][c1]
        };
        Some(Mat3(array::from_fn(|i| array::from_fn(|j| cof(j, i) / &d))))
    }

    /// The symmetric bilinear value vᵀ M w.
    pub fn bilinear(&self, v: &LieVec, w: &LieVec) -> Rat {
        (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| &self.0[i][j] * &v.0[i] * &w.0[j])
            .sum()
    }

    /// The diagonal form when all off-diagonal entries vanish.
    pub fn diagonal_form(&self) -> Option<DiagForm> {
        for i in 0..3 {
            for j in 0..3 {
                if i != j && !self.0[i][j].is_zero() {
                    return None;
                }
            }
        }
        DiagForm::new((0..3).map(|i| self.0[i][i].clone()).collect()).ok()
    }
}

/// The nonzero parameter pair of L(α,β).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LParams {
    pub alpha: Rat,
    pub beta: Rat,
}

impl LParams {
    pub fn new(alpha: Rat, beta: Rat) -> Result<Self> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(LParams { alpha, beta })
    }

    pub fn of(alpha: i64, beta: i64) -> Result<Self> {
        Self::new(arith::rat_i(alpha), arith::rat_i(beta))
    }
}

/// A three-dimensional algebra by structure constants: `table[i][j]` is
/// the coordinate vector of `[eᵢ,eⱼ]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lie3 {
    table: [[LieVec; 3]; 3],
}

impl Lie3 {
    /// Validates antisymmetry and the Jacobi identity.
    pub fn new(table: [[LieVec; 3]; 3]) -> Result<Self> {
        for (i, row) in table.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if *entry != table[j][i].scale(&Rat::from_integer((-1).into())) {
                    return Err(Error::NotAntisymmetric);
                }
            }
        }
        let l = Lie3 { table };
        // in dimension 3 the Jacobi identity reduces to one basis triple
        let e = [LieVec::basis(0), LieVec::basis(1), LieVec::basis(2)];
        let jac = l
            .bracket(&l.bracket(&e[0], &e[1]), &e[2])
            .add(&l.bracket(&l.bracket(&e[1], &e[2]), &e[0]))
            .add(&l.bracket(&l.bracket(&e[2], &e[0]), &e[1]));
        if !jac.is_zero() {
            return Err(Error::JacobiFailed);
        }
        Ok(l)
    }

    /// Builds a table from the three independent brackets `[e₀,e₁]`,
    /// `[e₁,e₂]`, `[e₂,e₀]`; the rest is forced by antisymmetry.
    pub fn from_brackets(e01: LieVec, e12: LieVec, e20: LieVec) -> Result<Self> {
        let neg = |v: &LieVec| v.scale(&Rat::from_integer((-1).into()));
        let table = [
            [LieVec::zero(), e01.clone(), neg(&e20)],
            [neg(&e01), LieVec::zero(), e12.clone()],
            [e20.clone(), neg(&e12), LieVec::zero()],
        ];
        Self::new(table)
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &LieVec {
        &self.table[i][j]
    }

    /// The bilinear extension of the basis brackets.
    pub fn bracket(&self, u: &LieVec, v: &LieVec) -> LieVec {
        let mut out = LieVec::zero();
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                let c = &u.0[i] * &v.0[j];
                if !c.is_zero() {
                    out = out.add(&self.table[i][j].scale(&c));
                }
            }
        }
        out
    }

    /// The matrix of ad(h): column j is `[h, eⱼ]`.
    pub fn ad(&self, h: &LieVec) -> Mat3 {
        let cols: [LieVec; 3] = array::from_fn(|j| self.bracket(h, &LieVec::basis(j)));
        Mat3::from_columns(&cols[0], &cols[1], &cols[2])
    }

    /// The same algebra expressed in the basis given by the columns of `p`.
    pub fn conjugate(&self, p: &Mat3) -> Result<Lie3> {
        let pinv = p.inverse().ok_or(Error::SingularMatrix)?;
        let cols: [LieVec; 3] = array::from_fn(|j| p.column(j));
        let table: [[LieVec; 3]; 3] =
            array::from_fn(|i| array::from_fn(|j| pinv.apply(&self.bracket(&cols[i], &cols[j]))));
        Lie3::new(table)
    }
}

/// The algebra L(α,β): `[x,y]` = z, `[y,z]` = αx, `[z,x]` = βy.
pub fn from_params(p: &LParams) -> Lie3 {
    let z = LieVec::basis(2);
    let ax = LieVec::basis(0).scale(&p.alpha);
    let by = LieVec::basis(1).scale(&p.beta);
    Lie3::from_brackets(z, ax, by).expect("L(alpha,beta) is a Lie algebra")
}

/// The Killing Gram matrix K(eᵢ,eⱼ) = tr(ad eᵢ ∘ ad eⱼ).
pub fn killing(l: &Lie3) -> Mat3 {
    let ads: [Mat3; 3] = array::from_fn(|i| l.ad(&LieVec::basis(i)));
    Mat3(array::from_fn(|i| {
        array::from_fn(|j| ads[i].mul(&ads[j]).trace())
    }))
}

/// The diagonal Killing form of L(α,β); equals ⟨−2β,−2α,−2αβ⟩.
pub fn killing_form(p: &LParams) -> DiagForm {
    killing(&from_params(p))
        .diagonal_form()
        .expect("the Killing form of L(alpha,beta) is diagonal")
}

/// Coefficients c₀..c₃ of det(ad(h) − X·Id) = c₃X³ + c₂X² + c₁X + c₀.
pub fn ad_char_poly(l: &Lie3, h: &LieVec) -> [Rat; 4] {
    let m = l.ad(h);
    let e = &m.0;
    // principal 2x2 minors
    let minors = (&e[0][0] * &e[1][1] - &e[0][1] * &e[1][0])
        + (&e[0][0] * &e[2][2] - &e[0][2] * &e[2][0])
        + (&e[1][1] * &e[2][2] - &e[1][2] * &e[2][1]);
    [m.det(), -minors, m.trace(), Rat::from_integer((-1).into())]
}

/// Is ad(h) diagonalisable? Exactly when K(h,h)/2 is a nonzero square.
pub fn ad_diagonalisable(l: &Lie3, h: &LieVec) -> bool {
    let half = killing(l).bilinear(h, h) / Rat::from_integer(2.into());
    !half.is_zero() && arith::is_square(&half)
}

/// Simplicity test: in dimension 3 over ℚ, nondegenerate Killing form is
/// equivalent to simplicity.
pub fn is_simple(l: &Lie3) -> bool {
    !killing(l).det().is_zero()
}

/// Finds a K-anisotropic vector among the seven candidates: basis vectors,
/// pairwise sums, and the full sum.
fn anisotropic_vector(k: &Mat3, basis: &[LieVec]) -> Option<LieVec> {
    let mut candidates: Vec<LieVec> = basis.to_vec();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            candidates.push(basis[i].add(&basis[j]));
        }
    }
    if basis.len() == 3 {
        candidates.push(basis[0].add(&basis[1]).add(&basis[2]));
    }
    candidates.into_iter().find(|v| !k.bilinear(v, v).is_zero())
}

/// Brings a simple algebra to exact L(α,β) form.
///
/// K-orthogonalizes a basis (brackets of K-orthogonal vectors are
/// K-orthogonal to both factors), then reads the parameters off
/// x = v₁, y = v₂, z = `[v₁,v₂]`. Returns the parameters and the basis
/// change (columns x, y, z in the original coordinates).
pub fn standardize(l: &Lie3) -> Result<(LParams, Mat3)> {
    if !is_simple(l) {
        return Err(Error::NotSimple);
    }
    let k = killing(l);
    let basis = [LieVec::basis(0), LieVec::basis(1), LieVec::basis(2)];
    let v1 = anisotropic_vector(&k, &basis)
        .expect("a nondegenerate ternary form is anisotropic on one of the seven candidates");
    let n1 = k.bilinear(&v1, &v1);
    // project the basis onto the K-orthogonal complement of v1
    let proj: Vec<LieVec> = basis
        .iter()
        .map(|e| e.sub(&v1.scale(&(k.bilinear(e, &v1) / &n1))))
        .collect();
    let mut complement: Vec<LieVec> = Vec::new();
    for w in proj {
        if w.is_zero() {
            continue;
        }
        if complement.iter().all(|u| w.ratio_to(u).is_none()) {
            complement.push(w);
        }
        if complement.len() == 2 {
            break;
        }
    }
    assert_eq!(
        complement.len(),
        2,
        "complement of an anisotropic line is a plane"
    );
    let v2 = anisotropic_vector(&k, &complement)
        .expect("the restriction of K to the complement is nondegenerate");
    // v3 spans the kernel of the two linear conditions K(v1,·) = K(v2,·) = 0
    let row = |v: &LieVec| LieVec(array::from_fn(|j| k.bilinear(v, &LieVec::basis(j))));
    let r1 = row(&v1);
    let r2 = row(&v2);
    let v3 = LieVec([
        &r1.0[1] * &r2.0[2] - &r1.0[2] * &r2.0[1],
        &r1.0[2] * &r2.0[0] - &r1.0[0] * &r2.0[2],
        &r1.0[0] * &r2.0[1] - &r1.0[1] * &r2.0[0],
    ]);
    assert!(!v3.is_zero());
    let z = l.bracket(&v1, &v2);
    assert!(
        z.ratio_to(&v3).is_some(),
        "[v1,v2] lies on the K-orthogonal line"
    );
    let alpha = l
        .bracket(&v2, &z)
        .ratio_to(&v1)
        .expect("[y,z] is proportional to x");
    let beta = l
        .bracket(&z, &v1)
        .ratio_to(&v2)
        .expect("[z,x] is proportional to y");
    let params = LParams::new(alpha, beta).expect("simple algebras have nonzero parameters");
    let p = Mat3::from_columns(&v1, &v2, &z);
    // recompute the structure constants in the new basis as verification
    assert_eq!(l.conjugate(&p).unwrap(), from_params(&params));
    Ok((params, p))
}

/// The places at which L(α,β) is locally non-split, i.e. the ramification
/// set of the associated quaternion algebra.
pub fn ramification(p: &LParams) -> Result<BTreeSet<Place>> {
    let a = -&p.alpha;
    let b = -&p.beta;
    let mut out = BTreeSet::new();
    for v in symbols::relevant_places(&[a.clone(), b.clone()])? {
        if symbols::hilbert(&a, &b, v)? == -1 {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Splitness of L(α,β): the global Hilbert symbol (−α,−β) is +1 everywhere.
/// The Killing-isotropy route is computed as well; the two must agree.
pub fn is_split(p: &LParams) -> Result<bool> {
    let by_symbols = ramification(p)?.is_empty();
    let by_form = qforms::is_isotropic_global(&killing_form(p))?;
    assert_eq!(
        by_symbols, by_form,
        "Hilbert-symbol and Killing-isotropy splitness must agree"
    );
    Ok(by_symbols)
}

/// Isomorphism of L(α,β) and L(α′,β′): Killing forms isometric,
/// equivalently equal ramification sets. Both routes are computed.
pub fn is_isomorphic(p: &LParams, p2: &LParams) -> Result<bool> {
    let by_forms = qforms::isometric_ternary(&killing_form(p), &killing_form(p2))?;
    let by_ram = ramification(p)? == ramification(p2)?;
    assert_eq!(
        by_forms, by_ram,
        "isometry and ramification isomorphism tests must agree"
    );
    Ok(by_forms)
}

/// Isomorphism over the completion at `v`: the local Hilbert symbols agree.
pub fn is_isomorphic_local(p: &LParams, p2: &LParams, v: Place) -> Result<bool> {
    let s1 = symbols::hilbert(&-&p.alpha, &-&p.beta, v)?;
    let s2 = symbols::hilbert(&-&p2.alpha, &-&p2.beta, v)?;
    Ok(s1 == s2)
}
