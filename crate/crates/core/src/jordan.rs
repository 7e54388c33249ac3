//! Rank-3 Jordan algebras `J_D` of Hermitian 3×3 matrices over a split
//! composition algebra `D`.
//!
//! An element with diagonal `(a, b, c)` and off-diagonal `(x, y, z)` is the
//! matrix
//!
//! ```text
//! [ a   x   y ]
//! [ x̄   b   z ]
//! [ ȳ   z̄   c ]
//! ```
//!
//! Squares and doubled Jordan products are division-free and work in every
//! characteristic. The Dickson form, determinant, adjoint and cross product
//! divide by 2 and 3 and need characteristic 0 or at least 5.

use crate::composition::{CompDim, CompositionAlgebra, CompositionElement};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Echelon;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JordanElement<E> {
    pub diag: [E; 3],
    /// `[x, y, z]` at positions (1,2), (1,3), (2,3).
    pub off: [CompositionElement<E>; 3],
}

/// A subspace of `J_D` given by one or two independent elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanSpan<E> {
    basis: Vec<JordanElement<E>>,
}

impl<E> JordanSpan<E> {
    pub fn basis(&self) -> &[JordanElement<E>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Which association a matrix-product triple trace uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Assoc {
    Left,
    Right,
}

type Cell<E> = CompositionElement<E>;

#[derive(Clone, Debug)]
pub struct JordanAlgebra<F: Field> {
    comp: CompositionAlgebra<F>,
    half: Option<F::Elem>,
    third: Option<F::Elem>,
}

impl<F: Field> JordanAlgebra<F> {
    pub fn new(field: F, comp_dim: usize) -> Result<Self> {
        let comp = CompositionAlgebra::new(field, comp_dim)?;
        let half = comp.field().inv_int(2);
        let third = comp.field().inv_int(3);
        Ok(Self { comp, half, third })
    }

    #[inline]
    pub fn field(&self) -> &F {
        self.comp.field()
    }

    #[inline]
    pub fn comp(&self) -> &CompositionAlgebra<F> {
        &self.comp
    }

    pub fn comp_dim(&self) -> CompDim {
        self.comp.dim()
    }

    /// Dimension of `J_D` over the base field.
    pub fn dim(&self) -> usize {
        3 + 3 * self.comp.dim().get()
    }

    fn half(&self) -> Result<&F::Elem> {
        self.half.as_ref().ok_or(Error::CharTwo)
    }

    fn require_char_ge5(&self) -> Result<()> {
        match (self.half.is_some(), self.third.is_some()) {
            (true, true) => Ok(()),
            _ => Err(Error::BadCharacteristic(self.field().characteristic())),
        }
    }

    pub fn zero(&self) -> JordanElement<F::Elem> {
        let k = self.field();
        JordanElement {
            diag: [k.zero(), k.zero(), k.zero()],
            off: std::array::from_fn(|_| self.comp.zero()),
        }
    }

    pub fn diagonal(&self, a: F::Elem, b: F::Elem, c: F::Elem) -> JordanElement<F::Elem> {
        JordanElement {
            diag: [a, b, c],
            off: std::array::from_fn(|_| self.comp.zero()),
        }
    }

    pub fn identity(&self) -> JordanElement<F::Elem> {
        let k = self.field();
        self.diagonal(k.one(), k.one(), k.one())
    }

    pub fn from_parts(
        &self,
        diag: [F::Elem; 3],
        off: [Cell<F::Elem>; 3],
    ) -> Result<JordanElement<F::Elem>> {
        if off.iter().any(|c| c.dim() != self.comp.dim()) {
            return Err(Error::MixedAlgebras);
        }
        Ok(JordanElement { diag, off })
    }

    /// Coordinates `(a, b, c, x.., y.., z..)`.
    pub fn coords(&self, x: &JordanElement<F::Elem>) -> Vec<F::Elem> {
        let mut v = Vec::with_capacity(self.dim());
        v.extend(x.diag.iter().cloned());
        for o in &x.off {
            v.extend(o.coords().iter().cloned());
        }
        v
    }

    pub fn from_coords(&self, v: &[F::Elem]) -> Result<JordanElement<F::Elem>> {
        let d = self.comp.dim().get();
        if v.len() != self.dim() {
            return Err(Error::InvalidArgument(format!(
                "expected {} coordinates, got {}",
                self.dim(),
                v.len()
            )));
        }
        let off = [
            self.comp.from_coords(&v[3..3 + d])?,
            self.comp.from_coords(&v[3 + d..3 + 2 * d])?,
            self.comp.from_coords(&v[3 + 2 * d..])?,
        ];
        Ok(JordanElement {
            diag: [v[0].clone(), v[1].clone(), v[2].clone()],
            off,
        })
    }

    pub fn basis(&self, i: usize) -> JordanElement<F::Elem> {
        let k = self.field();
        let v: Vec<_> = (0..self.dim())
            .map(|j| if i == j { k.one() } else { k.zero() })
            .collect();
        self.from_coords(&v).expect("basis index in range")
    }

    pub fn add(
        &self,
        x: &JordanElement<F::Elem>,
        y: &JordanElement<F::Elem>,
    ) -> JordanElement<F::Elem> {
        let k = self.field();
        JordanElement {
            diag: std::array::from_fn(|i| k.add(&x.diag[i], &y.diag[i])),
            off: std::array::from_fn(|i| self.comp.add(&x.off[i], &y.off[i])),
        }
    }

    pub fn sub(
        &self,
        x: &JordanElement<F::Elem>,
        y: &JordanElement<F::Elem>,
    ) -> JordanElement<F::Elem> {
        let k = self.field();
        JordanElement {
            diag: std::array::from_fn(|i| k.sub(&x.diag[i], &y.diag[i])),
            off: std::array::from_fn(|i| self.comp.sub(&x.off[i], &y.off[i])),
        }
    }

    pub fn neg(&self, x: &JordanElement<F::Elem>) -> JordanElement<F::Elem> {
        let k = self.field();
        JordanElement {
            diag: std::array::from_fn(|i| k.neg(&x.diag[i])),
            off: std::array::from_fn(|i| self.comp.neg(&x.off[i])),
        }
    }

    pub fn scale(&self, s: &F::Elem, x: &JordanElement<F::Elem>) -> JordanElement<F::Elem> {
        let k = self.field();
        JordanElement {
            diag: std::array::from_fn(|i| k.mul(s, &x.diag[i])),
            off: std::array::from_fn(|i| self.comp.scale(s, &x.off[i])),
        }
    }

    pub fn is_zero(&self, x: &JordanElement<F::Elem>) -> bool {
        let k = self.field();
        x.diag.iter().all(|d| k.is_zero(d)) && x.off.iter().all(|o| self.comp.is_zero(o))
    }

    /// `XY + YX`, computed entrywise without division.
    pub fn doubled_product(
        &self,
        p: &JordanElement<F::Elem>,
        q: &JordanElement<F::Elem>,
    ) -> JordanElement<F::Elem> {
        let (k, c) = (self.field(), &self.comp);
        let [a, b, cc] = &p.diag;
        let [x, y, z] = &p.off;
        let [a2, b2, c2] = &q.diag;
        let [x2, y2, z2] = &q.off;
        let two = |v: F::Elem| k.add(&v, &v);
        let d1 = k.add(
            &two(k.mul(a, a2)),
            &k.add(&c.bilinear(x, x2), &c.bilinear(y, y2)),
        );
        let d2 = k.add(
            &two(k.mul(b, b2)),
            &k.add(&c.bilinear(x, x2), &c.bilinear(z, z2)),
        );
        let d3 = k.add(
            &two(k.mul(cc, c2)),
            &k.add(&c.bilinear(y, y2), &c.bilinear(z, z2)),
        );
        // (1,2): a x' + x b' + y z̄'  +  a' x + x' b + y' z̄
        let o12 = {
            let s1 = c.scale(&k.add(a, b), x2);
            let s2 = c.scale(&k.add(a2, b2), x);
            let m = c.add(&c.mul(y, &c.conj(z2)), &c.mul(y2, &c.conj(z)));
            c.add(&c.add(&s1, &s2), &m)
        };
        // (1,3): a y' + x z' + y c'  +  a' y + x' z + y' c
        let o13 = {
            let s1 = c.scale(&k.add(a, cc), y2);
            let s2 = c.scale(&k.add(a2, c2), y);
            let m = c.add(&c.mul(x, z2), &c.mul(x2, z));
            c.add(&c.add(&s1, &s2), &m)
        };
        // (2,3): x̄ y' + b z' + z c'  +  x̄' y + b' z + z' c
        let o23 = {
            let s1 = c.scale(&k.add(b, cc), z2);
            let s2 = c.scale(&k.add(b2, c2), z);
            let m = c.add(&c.mul(&c.conj(x), y2), &c.mul(&c.conj(x2), y));
            c.add(&c.add(&s1, &s2), &m)
        };
        JordanElement {
            diag: [d1, d2, d3],
            off: [o12, o13, o23],
        }
    }

    /// Entrywise matrix square `X·X`; characteristic-free.
    pub fn jmatrix_square(&self, p: &JordanElement<F::Elem>) -> JordanElement<F::Elem> {
        let (k, c) = (self.field(), &self.comp);
        let [a, b, cc] = &p.diag;
        let [x, y, z] = &p.off;
        let (nx, ny, nz) = (c.norm(x), c.norm(y), c.norm(z));
        let d1 = k.add(&k.mul(a, a), &k.add(&nx, &ny));
        let d2 = k.add(&k.mul(b, b), &k.add(&nx, &nz));
        let d3 = k.add(&k.mul(cc, cc), &k.add(&ny, &nz));
        let o12 = c.add(&c.scale(&k.add(a, b), x), &c.mul(y, &c.conj(z)));
        let o13 = c.add(&c.scale(&k.add(a, cc), y), &c.mul(x, z));
        let o23 = c.add(&c.scale(&k.add(b, cc), z), &c.mul(&c.conj(x), y));
        JordanElement {
            diag: [d1, d2, d3],
            off: [o12, o13, o23],
        }
    }

    /// `X∘Y = (XY + YX)/2`.
    pub fn jordan_product(
        &self,
        p: &JordanElement<F::Elem>,
        q: &JordanElement<F::Elem>,
    ) -> Result<JordanElement<F::Elem>> {
        let half = self.half()?.clone();
        Ok(self.scale(&half, &self.doubled_product(p, q)))
    }

    pub fn jtrace(&self, x: &JordanElement<F::Elem>) -> F::Elem {
        let k = self.field();
        k.add(&k.add(&x.diag[0], &x.diag[1]), &x.diag[2])
    }

    /// Trace form `tr(X∘Y)`; division-free.
    pub fn trace_form(&self, p: &JordanElement<F::Elem>, q: &JordanElement<F::Elem>) -> F::Elem {
        let (k, c) = (self.field(), &self.comp);
        let diag = (0..3).fold(k.zero(), |acc, i| {
            k.add(&acc, &k.mul(&p.diag[i], &q.diag[i]))
        });
        (0..3).fold(diag, |acc, i| {
            k.add(&acc, &c.bilinear(&p.off[i], &q.off[i]))
        })
    }

    /// Symmetric triple trace `tr((X∘Y)∘Z)`.
    pub fn triple_trace(
        &self,
        x: &JordanElement<F::Elem>,
        y: &JordanElement<F::Elem>,
        z: &JordanElement<F::Elem>,
    ) -> Result<F::Elem> {
        Ok(self.trace_form(&self.jordan_product(x, y)?, z))
    }

    /// Dickson trilinear form, normalized so that `(X,X,X) = det X`.
    pub fn trilinear(
        &self,
        x: &JordanElement<F::Elem>,
        y: &JordanElement<F::Elem>,
        z: &JordanElement<F::Elem>,
    ) -> Result<F::Elem> {
        self.require_char_ge5()?;
        let k = self.field();
        let (tx, ty, tz) = (self.jtrace(x), self.jtrace(y), self.jtrace(z));
        let t3 = self.triple_trace(x, y, z)?;
        let mut six = k.scale_int(2, &t3);
        six = k.sub(&six, &k.mul(&tx, &self.trace_form(y, z)));
        six = k.sub(&six, &k.mul(&ty, &self.trace_form(z, x)));
        six = k.sub(&six, &k.mul(&tz, &self.trace_form(x, y)));
        six = k.add(&six, &k.mul(&k.mul(&tx, &ty), &tz));
        let sixth = k.mul(self.half()?, self.third.as_ref().expect("checked above"));
        Ok(k.mul(&six, &sixth))
    }

    pub fn jdet(&self, x: &JordanElement<F::Elem>) -> Result<F::Elem> {
        self.trilinear(x, x, x)
    }

    /// `X# = X² − tr(X)·X + σ(X)·I`, `σ(X) = (tr(X)² − tr(X²))/2`.
    pub fn adjoint_sharp(&self, x: &JordanElement<F::Elem>) -> Result<JordanElement<F::Elem>> {
        self.require_char_ge5()?;
        let k = self.field();
        let sq = self.jmatrix_square(x);
        let t = self.jtrace(x);
        let sigma = k.mul(self.half()?, &k.sub(&k.mul(&t, &t), &self.jtrace(&sq)));
        let mut out = self.sub(&sq, &self.scale(&t, x));
        for d in out.diag.iter_mut() {
            *d = k.add(d, &sigma);
        }
        Ok(out)
    }

    /// `X × Y = ((X+Y)# − X# − Y#)/2`.
    pub fn cross(
        &self,
        x: &JordanElement<F::Elem>,
        y: &JordanElement<F::Elem>,
    ) -> Result<JordanElement<F::Elem>> {
        let s = self.adjoint_sharp(&self.add(x, y))?;
        let d = self.sub(
            &self.sub(&s, &self.adjoint_sharp(x)?),
            &self.adjoint_sharp(y)?,
        );
        Ok(self.scale(self.half()?, &d))
    }

    /// Traceless element with vanishing square.
    pub fn is_singular(&self, x: &JordanElement<F::Elem>) -> Result<bool> {
        if !self.field().is_zero(&self.jtrace(x)) {
            return Err(Error::NotTraceless);
        }
        Ok(self.is_zero(&self.jmatrix_square(x)))
    }

    /// Row-reduced basis of the image of `Y ↦ X∘Y`.
    pub fn mult_image(&self, x: &JordanElement<F::Elem>) -> Result<Echelon<F::Elem>> {
        let k = self.field();
        let mut ech = Echelon::new(k, self.dim(), std::iter::empty());
        for i in 0..self.dim() {
            let img = self.jordan_product(x, &self.basis(i))?;
            ech.insert(k, self.coords(&img));
        }
        Ok(ech)
    }

    /// Span of the nonzero, independent members of `elems` (at most two kept).
    pub fn span(&self, elems: &[JordanElement<F::Elem>]) -> Result<JordanSpan<F::Elem>> {
        let k = self.field();
        let mut ech = Echelon::new(k, self.dim(), std::iter::empty());
        let mut basis = Vec::new();
        for e in elems {
            if ech.insert(k, self.coords(e)) {
                basis.push(e.clone());
            }
        }
        if basis.is_empty() || basis.len() > 2 {
            return Err(Error::InvalidArgument(format!(
                "span must have dimension 1 or 2, got {}",
                basis.len()
            )));
        }
        Ok(JordanSpan { basis })
    }

    /// Every element singular, products vanish, and `S ⊆ x∘J` for each
    /// spanning element `x`.
    pub fn is_amber(&self, s: &JordanSpan<F::Elem>) -> Result<bool> {
        self.half()?;
        if s.basis
            .iter()
            .any(|x| !self.field().is_zero(&self.jtrace(x)))
        {
            return Err(Error::NotTraceless);
        }
        for x in &s.basis {
            if !self.is_singular(x)? {
                return Ok(false);
            }
        }
        if let [y, z] = s.basis.as_slice() {
            if !self.is_zero(&self.doubled_product(y, z)) {
                return Ok(false);
            }
        }
        for x in &s.basis {
            let img = self.mult_image(x)?;
            if !s
                .basis
                .iter()
                .all(|v| img.contains(self.field(), self.coords(v)))
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Trace of a product of three matrices with composition-algebra entries,
    /// associated as requested. Each diagonal entry contributes its
    /// composition trace, so the result is twice the real trace.
    pub fn matrix_trace_triple(
        &self,
        x: &JordanElement<F::Elem>,
        y: &JordanElement<F::Elem>,
        z: &JordanElement<F::Elem>,
        assoc: Assoc,
    ) -> F::Elem {
        let (mx, my, mz) = (
            self.to_cell_matrix(x),
            self.to_cell_matrix(y),
            self.to_cell_matrix(z),
        );
        let prod = match assoc {
            Assoc::Left => self.cell_matmul(&self.cell_matmul(&mx, &my), &mz),
            Assoc::Right => self.cell_matmul(&mx, &self.cell_matmul(&my, &mz)),
        };
        let k = self.field();
        (0..3).fold(k.zero(), |acc, i| {
            k.add(&acc, &self.comp.trace(&prod[i][i]))
        })
    }

    fn to_cell_matrix(&self, x: &JordanElement<F::Elem>) -> [[Cell<F::Elem>; 3]; 3] {
        let c = &self.comp;
        let [xx, y, z] = &x.off;
        [
            [c.scalar(&x.diag[0]), xx.clone(), y.clone()],
            [c.conj(xx), c.scalar(&x.diag[1]), z.clone()],
            [c.conj(y), c.conj(z), c.scalar(&x.diag[2])],
        ]
    }

    fn cell_matmul(
        &self,
        p: &[[Cell<F::Elem>; 3]; 3],
        q: &[[Cell<F::Elem>; 3]; 3],
    ) -> [[Cell<F::Elem>; 3]; 3] {
        let c = &self.comp;
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(c.zero(), |acc, t| c.add(&acc, &c.mul(&p[i][t], &q[t][j])))
            })
        })
    }

    /// For `dim D ∈ {1, 2}`: the element as an ordinary 3×3 matrix
    /// (symmetric for `D = F`; `J_{F+F} ≅ M₃(F)` with the first component of
    /// each off-diagonal pair above the diagonal, the second below).
    pub fn to_matrix(&self, x: &JordanElement<F::Elem>) -> Result<[[F::Elem; 3]; 3]> {
        let pos = [(0, 1), (0, 2), (1, 2)];
        let mut m: [[F::Elem; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| self.field().zero()));
        for i in 0..3 {
            m[i][i] = x.diag[i].clone();
        }
        match self.comp.dim() {
            CompDim::One => {
                for (o, &(i, j)) in x.off.iter().zip(&pos) {
                    m[i][j] = o.coords()[0].clone();
                    m[j][i] = o.coords()[0].clone();
                }
            }
            CompDim::Two => {
                for (o, &(i, j)) in x.off.iter().zip(&pos) {
                    m[i][j] = o.coords()[0].clone();
                    m[j][i] = o.coords()[1].clone();
                }
            }
            d => return Err(Error::UnsupportedAlgebraDim(d.get())),
        }
        Ok(m)
    }

    /// Inverse of [`Self::to_matrix`]; for `D = F` the input must be symmetric.
    pub fn from_matrix(&self, m: &[[F::Elem; 3]; 3]) -> Result<JordanElement<F::Elem>> {
        let pos = [(0, 1), (0, 2), (1, 2)];
        let diag = [m[0][0].clone(), m[1][1].clone(), m[2][2].clone()];
        let off = match self.comp.dim() {
            CompDim::One => {
                if pos.iter().any(|&(i, j)| m[i][j] != m[j][i]) {
                    return Err(Error::InvalidArgument("matrix is not symmetric".into()));
                }
                pos.map(|(i, j)| {
                    self.comp
                        .from_coords(&[m[i][j].clone()])
                        .expect("one coordinate")
                })
            }
            CompDim::Two => pos.map(|(i, j)| {
                self.comp
                    .from_coords(&[m[i][j].clone(), m[j][i].clone()])
                    .expect("two coordinates")
            }),
            d => return Err(Error::UnsupportedAlgebraDim(d.get())),
        };
        Ok(JordanElement { diag, off })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn m3(p: u64) -> JordanAlgebra<PrimeField> {
        JordanAlgebra::new(PrimeField::new(p).unwrap(), 2).unwrap()
    }

    fn unit(j: &JordanAlgebra<PrimeField>, i: usize, k: usize) -> JordanElement<u32> {
        let mut m = [[0u32; 3]; 3];
        m[i][k] = 1;
        j.from_matrix(&m).unwrap()
    }

    #[test]
    fn squares() {
        let j = m3(7);
        let x = j.diagonal(1, 6, 0);
        assert_eq!(j.jmatrix_square(&x), j.diagonal(1, 1, 0));
        assert_eq!(j.jmatrix_square(&j.identity()), j.identity());
        let o = JordanAlgebra::new(PrimeField::new(7).unwrap(), 8).unwrap();
        let y = o.comp().basis(1);
        let mut e = o.zero();
        e.off[1] = y;
        assert!(o.is_zero(&o.jmatrix_square(&e)));
    }

    #[test]
    fn jordan_product_examples() {
        let j = m3(5);
        let x = j.from_coords(&[1, 2, 3, 4, 0, 1, 2, 3, 4]).unwrap();
        assert_eq!(j.jordan_product(&x, &j.identity()).unwrap(), x);
        let e12 = unit(&j, 0, 1);
        assert!(j.is_zero(&j.jordan_product(&e12, &e12).unwrap()));
        assert_eq!(j.jordan_product(&x, &x).unwrap(), j.jmatrix_square(&x));
        let j2 = m3(2);
        assert_eq!(
            j2.jordan_product(&j2.identity(), &j2.identity()),
            Err(Error::CharTwo)
        );
    }

    #[test]
    fn traces_and_determinants() {
        let j = m3(101);
        assert_eq!(j.jtrace(&j.identity()), 3);
        assert_eq!(j.jtrace(&j.diagonal(1, 100, 0)), 0);
        assert_eq!(
            j.trilinear(&j.identity(), &j.identity(), &j.identity())
                .unwrap(),
            1
        );
        assert_eq!(j.jdet(&j.diagonal(2, 3, 5)).unwrap(), 30);
        assert_eq!(
            j.adjoint_sharp(&j.diagonal(2, 3, 5)).unwrap(),
            j.diagonal(15, 10, 6)
        );
        assert!(matches!(
            m3(3).jdet(&m3(3).identity()),
            Err(Error::BadCharacteristic(3))
        ));
    }

    #[test]
    fn singular_predicate() {
        let j = m3(5);
        assert!(!j.is_singular(&j.diagonal(1, 4, 0)).unwrap());
        assert!(j.is_singular(&unit(&j, 0, 1)).unwrap());
        assert_eq!(j.is_singular(&j.identity()), Err(Error::NotTraceless));
    }

    #[test]
    fn mult_image_examples() {
        let j = m3(5);
        assert_eq!(j.mult_image(&j.zero()).unwrap().rank(), 0);
        assert_eq!(j.mult_image(&j.identity()).unwrap().rank(), 9);
        let img = j.mult_image(&unit(&j, 0, 2)).unwrap();
        assert!(img.contains(j.field(), j.coords(&unit(&j, 1, 2))));
    }

    #[test]
    fn amber_examples() {
        let j = m3(5);
        let s = j.span(&[unit(&j, 0, 2), unit(&j, 1, 2)]).unwrap();
        assert!(j.is_amber(&s).unwrap());
        let s = j.span(&[unit(&j, 0, 1), unit(&j, 0, 2)]).unwrap();
        assert!(j.is_amber(&s).unwrap());
        let s = j.span(&[j.diagonal(1, 4, 0)]).unwrap();
        assert!(!j.is_amber(&s).unwrap());
        let s = j.span(&[unit(&j, 0, 1), unit(&j, 1, 0)]).unwrap();
        assert!(!j.is_amber(&s).unwrap());
        let s = j.span(&[j.identity()]).unwrap();
        assert_eq!(j.is_amber(&s), Err(Error::NotTraceless));
    }

    #[test]
    fn rational_determinant_matches_cofactor_expansion() {
        let j = JordanAlgebra::new(Rationals, 2).unwrap();
        let q = |v: i64| Rationals.from_i64(v);
        let m = [[q(2), q(-1), q(3)], [q(0), q(4), q(1)], [q(5), q(2), q(-2)]];
        let x = j.from_matrix(&m).unwrap();
        // 2(-8-2) + 1(0-5) + 3(0-20) = -85
        assert_eq!(j.jdet(&x).unwrap(), q(-85));
    }
}
