//! Split composition algebras of dimension 1, 2, 4 and 8.
//!
//! Coordinates are stored in a fixed `[E; 8]` array so elements never
//! allocate; only the first `dim` slots are meaningful and the rest stay zero.
//!
//! | dim | algebra   | coordinates                                   |
//! |-----|-----------|-----------------------------------------------|
//! | 1   | F         | `[x]`                                         |
//! | 2   | F ⊕ F     | `[a, b]`, conjugation swaps                   |
//! | 4   | M₂(F)     | `[m11, m12, m21, m22]`, conjugation = adjugate|
//! | 8   | Zorn      | `[a, v1, v2, v3, w1, w2, w3, b]` for ((a,v),(w,b)) |

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CompDim {
    One,
    Two,
    Four,
    Eight,
}

impl CompDim {
    pub fn new(dim: usize) -> Result<Self> {
        match dim {
            1 => Ok(Self::One),
            2 => Ok(Self::Two),
            4 => Ok(Self::Four),
            8 => Ok(Self::Eight),
            d => Err(Error::BadCompositionDim(d)),
        }
    }

    #[inline]
    pub fn get(self) -> usize {
        match self {
            Self::One => 1,
            Self::Two => 2,
            Self::Four => 4,
            Self::Eight => 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompositionElement<E> {
    dim: CompDim,
    c: [E; 8],
}

impl<E> CompositionElement<E> {
    #[inline]
    pub fn dim(&self) -> CompDim {
        self.dim
    }

    #[inline]
    pub fn coords(&self) -> &[E] {
        &self.c[..self.dim.get()]
    }
}

#[derive(Clone, Debug)]
pub struct CompositionAlgebra<F: Field> {
    field: F,
    dim: CompDim,
}

impl<F: Field> CompositionAlgebra<F> {
    pub fn new(field: F, dim: usize) -> Result<Self> {
        Ok(Self {
            field,
            dim: CompDim::new(dim)?,
        })
    }

    #[inline]
    pub fn field(&self) -> &F {
        &self.field
    }

    #[inline]
    pub fn dim(&self) -> CompDim {
        self.dim
    }

    fn raw(&self, f: impl FnMut(usize) -> F::Elem) -> CompositionElement<F::Elem> {
        CompositionElement {
            dim: self.dim,
            c: std::array::from_fn(f),
        }
    }

    pub fn zero(&self) -> CompositionElement<F::Elem> {
        self.raw(|_| self.field.zero())
    }

    /// `s · 1`.
    pub fn scalar(&self, s: &F::Elem) -> CompositionElement<F::Elem> {
        let k = &self.field;
        let unit_slots: &[usize] = match self.dim {
            CompDim::One => &[0],
            CompDim::Two => &[0, 1],
            CompDim::Four => &[0, 3],
            CompDim::Eight => &[0, 7],
        };
        self.raw(|i| {
            if unit_slots.contains(&i) {
                s.clone()
            } else {
                k.zero()
            }
        })
    }

    pub fn one(&self) -> CompositionElement<F::Elem> {
        self.scalar(&self.field.one())
    }

    pub fn from_coords(&self, coords: &[F::Elem]) -> Result<CompositionElement<F::Elem>> {
        if coords.len() != self.dim.get() {
            return Err(Error::InvalidArgument(format!(
                "expected {} coordinates, got {}",
                self.dim.get(),
                coords.len()
            )));
        }
        Ok(self.raw(|i| coords.get(i).cloned().unwrap_or_else(|| self.field.zero())))
    }

    /// Coordinate basis vector `i` (`i < dim`).
    pub fn basis(&self, i: usize) -> CompositionElement<F::Elem> {
        assert!(i < self.dim.get());
        self.raw(|j| {
            if i == j {
                self.field.one()
            } else {
                self.field.zero()
            }
        })
    }

    pub fn add(
        &self,
        x: &CompositionElement<F::Elem>,
        y: &CompositionElement<F::Elem>,
    ) -> CompositionElement<F::Elem> {
        self.raw(|i| self.field.add(&x.c[i], &y.c[i]))
    }

    pub fn sub(
        &self,
        x: &CompositionElement<F::Elem>,
        y: &CompositionElement<F::Elem>,
    ) -> CompositionElement<F::Elem> {
        self.raw(|i| self.field.sub(&x.c[i], &y.c[i]))
    }

    pub fn neg(&self, x: &CompositionElement<F::Elem>) -> CompositionElement<F::Elem> {
        self.raw(|i| self.field.neg(&x.c[i]))
    }

    pub fn scale(
        &self,
        s: &F::Elem,
        x: &CompositionElement<F::Elem>,
    ) -> CompositionElement<F::Elem> {
        self.raw(|i| self.field.mul(s, &x.c[i]))
    }

    pub fn is_zero(&self, x: &CompositionElement<F::Elem>) -> bool {
        x.coords().iter().all(|c| self.field.is_zero(c))
    }

    /// Product with an algebra-membership check.
    pub fn checked_mul(
        &self,
        x: &CompositionElement<F::Elem>,
        y: &CompositionElement<F::Elem>,
    ) -> Result<CompositionElement<F::Elem>> {
        if x.dim != self.dim || y.dim != self.dim {
            return Err(Error::MixedAlgebras);
        }
        Ok(self.mul(x, y))
    }

    /// Product; both operands must belong to this algebra.
    pub fn mul(
        &self,
        x: &CompositionElement<F::Elem>,
        y: &CompositionElement<F::Elem>,
    ) -> CompositionElement<F::Elem> {
        debug_assert!(x.dim == self.dim && y.dim == self.dim);
        let k = &self.field;
        let m = |a: &F::Elem, b: &F::Elem| k.mul(a, b);
        let (x, y) = (&x.c, &y.c);
        match self.dim {
            CompDim::One => self.raw(|i| if i == 0 { m(&x[0], &y[0]) } else { k.zero() }),
            CompDim::Two => self.raw(|i| if i < 2 { m(&x[i], &y[i]) } else { k.zero() }),
            CompDim::Four => {
                let e =
                    |r: usize, s: usize| k.add(&m(&x[2 * r], &y[s]), &m(&x[2 * r + 1], &y[2 + s]));
                let out = [e(0, 0), e(0, 1), e(1, 0), e(1, 1)];
                self.raw(|i| out.get(i).cloned().unwrap_or_else(|| k.zero()))
            }
            CompDim::Eight => {
                let (a, v, w, b) = (&x[0], &x[1..4], &x[4..7], &x[7]);
                let (a2, v2, w2, b2) = (&y[0], &y[1..4], &y[4..7], &y[7]);
                let dot = |p: &[F::Elem], q: &[F::Elem]| {
                    k.add(&k.add(&m(&p[0], &q[0]), &m(&p[1], &q[1])), &m(&p[2], &q[2]))
                };
                let cross = |p: &[F::Elem], q: &[F::Elem], i: usize| {
                    let (j, l) = ((i + 1) % 3, (i + 2) % 3);
                    k.sub(&m(&p[j], &q[l]), &m(&p[l], &q[j]))
                };
                let mut out: [F::Elem; 8] = std::array::from_fn(|_| k.zero());
                out[0] = k.add(&m(a, a2), &dot(v, w2));
                out[7] = k.add(&m(b, b2), &dot(w, v2));
                for i in 0..3 {
                    // a v' + b' v - w × w'
                    out[1 + i] = k.sub(&k.add(&m(a, &v2[i]), &m(b2, &v[i])), &cross(w, w2, i));
                    // a' w + b w' + v × v'
                    out[4 + i] = k.add(&k.add(&m(a2, &w[i]), &m(b, &w2[i])), &cross(v, v2, i));
                }
                CompositionElement {
                    dim: self.dim,
                    c: out,
                }
            }
        }
    }

    pub fn conj(&self, x: &CompositionElement<F::Elem>) -> CompositionElement<F::Elem> {
        let k = &self.field;
        let c = &x.c;
        match self.dim {
            CompDim::One => x.clone(),
            CompDim::Two => self.raw(|i| match i {
                0 => c[1].clone(),
                1 => c[0].clone(),
                _ => k.zero(),
            }),
            CompDim::Four => self.raw(|i| match i {
                0 => c[3].clone(),
                1 => k.neg(&c[1]),
                2 => k.neg(&c[2]),
                3 => c[0].clone(),
                _ => k.zero(),
            }),
            CompDim::Eight => self.raw(|i| match i {
                0 => c[7].clone(),
                7 => c[0].clone(),
                _ => k.neg(&c[i]),
            }),
        }
    }

    /// `x + conj(x)` read as a scalar.
    pub fn trace(&self, x: &CompositionElement<F::Elem>) -> F::Elem {
        let k = &self.field;
        let c = &x.c;
        match self.dim {
            CompDim::One => k.add(&c[0], &c[0]),
            CompDim::Two => k.add(&c[0], &c[1]),
            CompDim::Four => k.add(&c[0], &c[3]),
            CompDim::Eight => k.add(&c[0], &c[7]),
        }
    }

    /// `x · conj(x)` read as a scalar.
    pub fn norm(&self, x: &CompositionElement<F::Elem>) -> F::Elem {
        let k = &self.field;
        let c = &x.c;
        match self.dim {
            CompDim::One => k.mul(&c[0], &c[0]),
            CompDim::Two => k.mul(&c[0], &c[1]),
            CompDim::Four => k.sub(&k.mul(&c[0], &c[3]), &k.mul(&c[1], &c[2])),
            CompDim::Eight => {
                let vw = (0..3).fold(k.zero(), |acc, i| k.add(&acc, &k.mul(&c[1 + i], &c[4 + i])));
                k.sub(&k.mul(&c[0], &c[7]), &vw)
            }
        }
    }

    /// Polar form `N(x+y) - N(x) - N(y) = T(x conj(y))`.
    pub fn bilinear(
        &self,
        x: &CompositionElement<F::Elem>,
        y: &CompositionElement<F::Elem>,
    ) -> F::Elem {
        let k = &self.field;
        let c = &x.c;
        let d = &y.c;
        match self.dim {
            CompDim::One => k.scale_int(2, &k.mul(&c[0], &d[0])),
            CompDim::Two => k.add(&k.mul(&c[0], &d[1]), &k.mul(&c[1], &d[0])),
            CompDim::Four => {
                let t = k.add(&k.mul(&c[0], &d[3]), &k.mul(&c[3], &d[0]));
                k.sub(&t, &k.add(&k.mul(&c[1], &d[2]), &k.mul(&c[2], &d[1])))
            }
            CompDim::Eight => {
                let t = k.add(&k.mul(&c[0], &d[7]), &k.mul(&c[7], &d[0]));
                let vw = (0..3).fold(k.zero(), |acc, i| {
                    k.add(
                        &acc,
                        &k.add(&k.mul(&c[1 + i], &d[4 + i]), &k.mul(&c[4 + i], &d[1 + i])),
                    )
                });
                k.sub(&t, &vw)
            }
        }
    }

    /// `Some(s)` when `x = s · 1`.
    pub fn scalar_part(&self, x: &CompositionElement<F::Elem>) -> Option<F::Elem> {
        let s = x.c[0].clone();
        (self.scalar(&s) == *x).then_some(s)
    }

    /// Traceless with vanishing square (equivalently traceless and null).
    pub fn is_null_traceless(&self, x: &CompositionElement<F::Elem>) -> bool {
        let k = &self.field;
        k.is_zero(&self.trace(x)) && self.is_zero(&self.mul(x, x))
    }
}
