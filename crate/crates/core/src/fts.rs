//! The graded space `N_D = F + J_D + J_D* + F`.
//!
//! A vector `(a, y, z, b)` carries grading-torus weights `(−3, −1, 1, 3)`.
//! The unipotent radical `U_D ≅ J_D` acts by
//!
//! ```text
//! a' = a
//! y' = y + a·u
//! z' = z + 2·u×y + a·u#
//! b' = b + tr(u∘z) + 3·(u,u,y) + a·det u
//! ```
//!
//! and the opposite radical by the mirror image under `(a,y,z,b) ↦ (b,z,y,a)`.
//! Both preserve the alternating pairing
//! `⟨v,w⟩ = a·b' − b·a' − tr(y∘z') + tr(z∘y')`.
//!
//! For `dim D ∈ {1, 2}` the Jordan algebra is identified with symmetric
//! 3×3 matrices or with `M₃(F)`, and the Levi acts through 3×3 matrices.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::jordan::{JordanAlgebra, JordanElement};
use crate::linalg::{mat3_det, mat3_identity, mat3_inv, mat3_mul, mat3_transpose, Mat3};
pub use crate::orbit::{nn_membership, omega_bfs, qd_orbit_partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FtsVector<E> {
    pub a: E,
    pub y: JordanElement<E>,
    pub z: JordanElement<E>,
    pub b: E,
}

/// A Levi element acting by
/// `(a, y, z, b) ↦ (ca·a, cy·ya·y·yb, cz·za·z·zb, cb·b)` on matrix models.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviElement<E> {
    pub ya: Mat3<E>,
    pub yb: Mat3<E>,
    pub za: Mat3<E>,
    pub zb: Mat3<E>,
    pub ca: E,
    pub cy: E,
    pub cz: E,
    pub cb: E,
}

#[derive(Clone, Debug)]
pub struct Fts<F: Field> {
    j: JordanAlgebra<F>,
}

type JE<E> = JordanElement<E>;

impl<F: Field> Fts<F> {
    pub fn new(field: F, comp_dim: usize) -> Result<Self> {
        Ok(Self {
            j: JordanAlgebra::new(field, comp_dim)?,
        })
    }

    pub fn jordan(&self) -> &JordanAlgebra<F> {
        &self.j
    }

    pub fn field(&self) -> &F {
        self.j.field()
    }

    /// Number of coordinates, `2 + 2·dim J_D`.
    pub fn width(&self) -> usize {
        2 + 2 * self.j.dim()
    }

    pub fn zero(&self) -> FtsVector<F::Elem> {
        let k = self.field();
        FtsVector {
            a: k.zero(),
            y: self.j.zero(),
            z: self.j.zero(),
            b: k.zero(),
        }
    }

    pub fn vector(
        &self,
        a: F::Elem,
        y: JE<F::Elem>,
        z: JE<F::Elem>,
        b: F::Elem,
    ) -> FtsVector<F::Elem> {
        FtsVector { a, y, z, b }
    }

    /// Coordinates `(a, y.., z.., b)`.
    pub fn coords(&self, v: &FtsVector<F::Elem>) -> Vec<F::Elem> {
        let mut out = Vec::with_capacity(self.width());
        out.push(v.a.clone());
        out.extend(self.j.coords(&v.y));
        out.extend(self.j.coords(&v.z));
        out.push(v.b.clone());
        out
    }

    pub fn from_coords(&self, c: &[F::Elem]) -> Result<FtsVector<F::Elem>> {
        let n = self.j.dim();
        if c.len() != self.width() {
            return Err(Error::InvalidArgument(format!(
                "expected {} coordinates, got {}",
                self.width(),
                c.len()
            )));
        }
        Ok(FtsVector {
            a: c[0].clone(),
            y: self.j.from_coords(&c[1..1 + n])?,
            z: self.j.from_coords(&c[1 + n..1 + 2 * n])?,
            b: c[1 + 2 * n].clone(),
        })
    }

    pub fn add(&self, v: &FtsVector<F::Elem>, w: &FtsVector<F::Elem>) -> FtsVector<F::Elem> {
        let k = self.field();
        FtsVector {
            a: k.add(&v.a, &w.a),
            y: self.j.add(&v.y, &w.y),
            z: self.j.add(&v.z, &w.z),
            b: k.add(&v.b, &w.b),
        }
    }

    pub fn scale(&self, s: &F::Elem, v: &FtsVector<F::Elem>) -> FtsVector<F::Elem> {
        let k = self.field();
        FtsVector {
            a: k.mul(s, &v.a),
            y: self.j.scale(s, &v.y),
            z: self.j.scale(s, &v.z),
            b: k.mul(s, &v.b),
        }
    }

    /// `(a,y,z,b) ↦ (b,z,y,a)`.
    pub fn flip(&self, v: &FtsVector<F::Elem>) -> FtsVector<F::Elem> {
        FtsVector {
            a: v.b.clone(),
            y: v.z.clone(),
            z: v.y.clone(),
            b: v.a.clone(),
        }
    }

    pub fn u_plus(&self, u: &JE<F::Elem>, v: &FtsVector<F::Elem>) -> Result<FtsVector<F::Elem>> {
        let (k, j) = (self.field(), &self.j);
        let sharp = j.adjoint_sharp(u)?;
        let y = j.add(&v.y, &j.scale(&v.a, u));
        let two_cross = j.scale(&k.from_i64(2), &j.cross(u, &v.y)?);
        let z = j.add(&j.add(&v.z, &two_cross), &j.scale(&v.a, &sharp));
        let mut b = k.add(&v.b, &j.trace_form(u, &v.z));
        b = k.add(&b, &k.scale_int(3, &j.trilinear(u, u, &v.y)?));
        b = k.add(&b, &k.mul(&v.a, &j.jdet(u)?));
        Ok(FtsVector {
            a: v.a.clone(),
            y,
            z,
            b,
        })
    }

    pub fn u_minus(&self, u: &JE<F::Elem>, v: &FtsVector<F::Elem>) -> Result<FtsVector<F::Elem>> {
        Ok(self.flip(&self.u_plus(u, &self.flip(v))?))
    }

    pub fn pairing(&self, v: &FtsVector<F::Elem>, w: &FtsVector<F::Elem>) -> F::Elem {
        let (k, j) = (self.field(), &self.j);
        let s = k.sub(&k.mul(&v.a, &w.b), &k.mul(&v.b, &w.a));
        k.add(
            &k.sub(&s, &j.trace_form(&v.y, &w.z)),
            &j.trace_form(&v.z, &w.y),
        )
    }

    fn require_matrix_model(&self) -> Result<()> {
        match self.j.comp_dim().get() {
            1 | 2 => Ok(()),
            d => Err(Error::UnsupportedAlgebraDim(d)),
        }
    }

    /// `g ∈ GL₃` for `dim D = 1`:
    /// `(det⁻¹·a, det⁻¹·g y gᵀ, det·g⁻ᵀ z g⁻¹, det·b)`.
    pub fn levi_gl3(&self, g: &Mat3<F::Elem>) -> Result<LeviElement<F::Elem>> {
        if self.j.comp_dim().get() != 1 {
            return Err(Error::UnsupportedAlgebraDim(self.j.comp_dim().get()));
        }
        let k = self.field();
        let d = mat3_det(k, g);
        let dinv = k.inv(&d)?;
        let gi = mat3_inv(k, g)?;
        Ok(LeviElement {
            ya: g.clone(),
            yb: mat3_transpose(g),
            za: mat3_transpose(&gi),
            zb: gi,
            ca: dinv.clone(),
            cy: dinv,
            cz: d.clone(),
            cb: d,
        })
    }

    /// `(g, h) ∈ GL₃ × GL₃` for `dim D = 2`, with `ν = det g / det h`:
    /// `(ν·a, g y h⁻¹, h z g⁻¹, ν⁻¹·b)`.
    pub fn levi_pair(&self, g: &Mat3<F::Elem>, h: &Mat3<F::Elem>) -> Result<LeviElement<F::Elem>> {
        if self.j.comp_dim().get() != 2 {
            return Err(Error::UnsupportedAlgebraDim(self.j.comp_dim().get()));
        }
        let k = self.field();
        let nu = k.div(&mat3_det(k, g), &mat3_det(k, h))?;
        Ok(LeviElement {
            ya: g.clone(),
            yb: mat3_inv(k, h)?,
            za: h.clone(),
            zb: mat3_inv(k, g)?,
            cb: k.inv(&nu)?,
            ca: nu,
            cy: k.one(),
            cz: k.one(),
        })
    }

    /// Grading torus: weights `(−3, −1, 1, 3)`.
    pub fn levi_torus(&self, lambda: &F::Elem) -> Result<LeviElement<F::Elem>> {
        self.require_matrix_model()?;
        let k = self.field();
        let li = k.inv(lambda)?;
        let id = mat3_identity(k);
        Ok(LeviElement {
            ya: id.clone(),
            yb: id.clone(),
            za: id.clone(),
            zb: id,
            ca: k.pow(&li, 3),
            cy: li,
            cz: lambda.clone(),
            cb: k.pow(lambda, 3),
        })
    }

    pub fn levi_inverse(&self, l: &LeviElement<F::Elem>) -> Result<LeviElement<F::Elem>> {
        let k = self.field();
        Ok(LeviElement {
            ya: mat3_inv(k, &l.ya)?,
            yb: mat3_inv(k, &l.yb)?,
            za: mat3_inv(k, &l.za)?,
            zb: mat3_inv(k, &l.zb)?,
            ca: k.inv(&l.ca)?,
            cy: k.inv(&l.cy)?,
            cz: k.inv(&l.cz)?,
            cb: k.inv(&l.cb)?,
        })
    }

    fn sandwich(
        &self,
        s: &F::Elem,
        l: &Mat3<F::Elem>,
        x: &JE<F::Elem>,
        r: &Mat3<F::Elem>,
    ) -> Result<JE<F::Elem>> {
        let k = self.field();
        let m = mat3_mul(k, &mat3_mul(k, l, &self.j.to_matrix(x)?), r);
        let m = m.map(|row| row.map(|e| k.mul(s, &e)));
        self.j.from_matrix(&m)
    }

    pub fn levi_action(
        &self,
        l: &LeviElement<F::Elem>,
        v: &FtsVector<F::Elem>,
    ) -> Result<FtsVector<F::Elem>> {
        self.require_matrix_model()?;
        let k = self.field();
        Ok(FtsVector {
            a: k.mul(&l.ca, &v.a),
            y: self.sandwich(&l.cy, &l.ya, &v.y, &l.yb)?,
            z: self.sandwich(&l.cz, &l.za, &v.z, &l.zb)?,
            b: k.mul(&l.cb, &v.b),
        })
    }

    /// The `u'` with `l ∘ u_plus(u) ∘ l⁻¹ = u_plus(u')`.
    pub fn levi_conjugate_u(
        &self,
        l: &LeviElement<F::Elem>,
        u: &JE<F::Elem>,
    ) -> Result<JE<F::Elem>> {
        let k = self.field();
        let s = k.div(&l.cy, &l.ca)?;
        self.sandwich(&s, &l.ya, u, &l.yb)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::linalg::{mat3_diag, mat3_elementary};

    fn fts(d: usize) -> Fts<PrimeField> {
        Fts::new(PrimeField::new(7).unwrap(), d).unwrap()
    }

    fn sample(f: &Fts<PrimeField>, seed: u32) -> FtsVector<u32> {
        let c: Vec<u32> = (0..f.width() as u32)
            .map(|i| (i * i + 3 * seed + 1) % 7)
            .collect();
        f.from_coords(&c).unwrap()
    }

    #[test]
    fn u_plus_examples() {
        let f = fts(2);
        let j = f.jordan();
        let v = sample(&f, 1);
        assert_eq!(f.u_plus(&j.zero(), &v).unwrap(), v);
        let u = j.from_coords(&[1, 2, 3, 0, 1, 5, 4, 2, 6]).unwrap();
        let e1 = f.vector(1, j.zero(), j.zero(), 0);
        let out = f.u_plus(&u, &e1).unwrap();
        assert_eq!(
            out,
            f.vector(
                1,
                u.clone(),
                j.adjoint_sharp(&u).unwrap(),
                j.jdet(&u).unwrap()
            )
        );
        let e4 = f.vector(0, j.zero(), j.zero(), 1);
        let out = f.u_minus(&u, &e4).unwrap();
        assert_eq!(
            out,
            f.vector(j.jdet(&u).unwrap(), j.adjoint_sharp(&u).unwrap(), u, 1)
        );
    }

    #[test]
    fn pairing_examples() {
        let f = fts(1);
        let j = f.jordan();
        let e1 = f.vector(1, j.zero(), j.zero(), 0);
        let e4 = f.vector(0, j.zero(), j.zero(), 1);
        assert_eq!(f.pairing(&e1, &e4), 1);
        let v = sample(&f, 2);
        assert_eq!(f.pairing(&v, &v), 0);
    }

    #[test]
    fn levi_examples() {
        let f = fts(1);
        let k = f.field();
        let v = sample(&f, 3);
        assert_eq!(
            f.levi_action(&f.levi_gl3(&mat3_identity(k)).unwrap(), &v)
                .unwrap(),
            v
        );
        let t = f.levi_torus(&3).unwrap();
        let e1 = f.vector(1, f.jordan().zero(), f.jordan().zero(), 0);
        let out = f.levi_action(&t, &e1).unwrap();
        assert_eq!(out.a, k.inv(&27).unwrap());
        let g = mat3_elementary(k, 0, 2, &4);
        let l = f.levi_gl3(&g).unwrap();
        let li = f.levi_inverse(&l).unwrap();
        assert_eq!(
            f.levi_action(&li, &f.levi_action(&l, &v).unwrap()).unwrap(),
            v
        );
        assert_eq!(fts(8).levi_torus(&2), Err(Error::UnsupportedAlgebraDim(8)));
        let p = fts(2);
        let l = p
            .levi_pair(&mat3_diag(k, [1, 3, 3]), &mat3_diag(k, [3, 1, 1]))
            .unwrap();
        assert_eq!(l.ca, 3);
    }
}
