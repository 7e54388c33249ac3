//! Row reduction over an exact field.

use crate::error::Result;
use crate::field::Field;

/// Reduced row-echelon form of a list of row vectors. Zero rows are dropped,
/// so the result is a basis of the row space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon<E> {
    rows: Vec<Vec<E>>,
    pivots: Vec<usize>,
    width: usize,
}

impl<E: Clone + PartialEq> Echelon<E> {
    pub fn new<F: Field<Elem = E>>(
        field: &F,
        width: usize,
        vectors: impl IntoIterator<Item = Vec<E>>,
    ) -> Self {
        let mut ech = Self {
            rows: Vec::new(),
            pivots: Vec::new(),
            width,
        };
        for v in vectors {
            ech.insert(field, v);
        }
        ech
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the current rows; the remainder is zero iff `v` is
    /// in the span.
    pub fn reduce<F: Field<Elem = E>>(&self, field: &F, mut v: Vec<E>) -> Vec<E> {
        debug_assert_eq!(v.len(), self.width);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !field.is_zero(&v[p]) {
                let c = v[p].clone();
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi = field.sub(vi, &field.mul(&c, ri));
                }
            }
        }
        v
    }

    pub fn contains<F: Field<Elem = E>>(&self, field: &F, v: Vec<E>) -> bool {
        self.reduce(field, v).iter().all(|x| field.is_zero(x))
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert<F: Field<Elem = E>>(&mut self, field: &F, v: Vec<E>) -> bool {
        let mut v = self.reduce(field, v);
        let Some(p) = v.iter().position(|x| !field.is_zero(x)) else {
            return false;
        };
        let inv = field.inv(&v[p]).expect("pivot is nonzero");
        for x in v.iter_mut() {
            *x = field.mul(x, &inv);
        }
        // Clear the new pivot column from the existing rows.
        for row in self.rows.iter_mut() {
            if !field.is_zero(&row[p]) {
                let c = row[p].clone();
                for (ri, vi) in row.iter_mut().zip(&v) {
                    *ri = field.sub(ri, &field.mul(&c, vi));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }
}

/// Rank of a list of vectors of common length `width`.
pub fn rank<F: Field>(
    field: &F,
    width: usize,
    vectors: impl IntoIterator<Item = Vec<F::Elem>>,
) -> usize {
    Echelon::new(field, width, vectors).rank()
}

/// A 3×3 matrix over a field, row-major.
pub type Mat3<E> = [[E; 3]; 3];

pub fn mat3_identity<F: Field>(k: &F) -> Mat3<F::Elem> {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { k.one() } else { k.zero() }))
}

/// `I + c·E_ij`.
pub fn mat3_elementary<F: Field>(k: &F, i: usize, j: usize, c: &F::Elem) -> Mat3<F::Elem> {
    let mut m = mat3_identity(k);
    m[i][j] = k.add(&m[i][j], c);
    m
}

pub fn mat3_diag<F: Field>(k: &F, d: [F::Elem; 3]) -> Mat3<F::Elem> {
    let [a, b, c] = d;
    let z = || k.zero();
    [[a, z(), z()], [z(), b, z()], [z(), z(), c]]
}

pub fn mat3_mul<F: Field>(k: &F, a: &Mat3<F::Elem>, b: &Mat3<F::Elem>) -> Mat3<F::Elem> {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).fold(k.zero(), |s, t| k.add(&s, &k.mul(&a[i][t], &b[t][j]))))
    })
}

pub fn mat3_transpose<E: Clone>(a: &Mat3<E>) -> Mat3<E> {
    std::array::from_fn(|i| std::array::from_fn(|j| a[j][i].clone()))
}

pub fn mat3_det<F: Field>(k: &F, a: &Mat3<F::Elem>) -> F::Elem {
    let minor =
        |c0: usize, c1: usize| k.sub(&k.mul(&a[1][c0], &a[2][c1]), &k.mul(&a[1][c1], &a[2][c0]));
    let t0 = k.mul(&a[0][0], &minor(1, 2));
    let t1 = k.mul(&a[0][1], &minor(0, 2));
    let t2 = k.mul(&a[0][2], &minor(0, 1));
    k.add(&k.sub(&t0, &t1), &t2)
}

/// Classical adjugate: `A·adj(A) = det(A)·I`.
pub fn mat3_adj<F: Field>(k: &F, a: &Mat3<F::Elem>) -> Mat3<F::Elem> {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let (r, c) = (j, i);
            let rs: Vec<usize> = (0..3).filter(|&t| t != r).collect();
            let cs: Vec<usize> = (0..3).filter(|&t| t != c).collect();
            let m = k.sub(
                &k.mul(&a[rs[0]][cs[0]], &a[rs[1]][cs[1]]),
                &k.mul(&a[rs[0]][cs[1]], &a[rs[1]][cs[0]]),
            );
            if (r + c) % 2 == 0 {
                m
            } else {
                k.neg(&m)
            }
        })
    })
}

pub fn mat3_inv<F: Field>(k: &F, a: &Mat3<F::Elem>) -> Result<Mat3<F::Elem>> {
    let d = k.inv(&mat3_det(k, a))?;
    let adj = mat3_adj(k, a);
    Ok(std::array::from_fn(|i| {
        std::array::from_fn(|j| k.mul(&d, &adj[i][j]))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn rank_and_membership() {
        let f = PrimeField::new(5).unwrap();
        let e = Echelon::new(&f, 3, [vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 2]]);
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&f, vec![0, 0, 0]));
        assert!(e.contains(&f, vec![2, 3, 0]));
        assert!(!e.contains(&f, vec![0, 0, 1]));
        assert_eq!(rank(&f, 2, [vec![0, 0], vec![0, 0]]), 0);
    }

    #[test]
    fn mat3_inverse_and_adjugate() {
        let f = PrimeField::new(101).unwrap();
        let a = [[2, 7, 1], [0, 3, 5], [4, 1, 1]];
        assert_eq!(
            mat3_det(&f, &a),
            f.from_i64(2 * (3 - 5) - 7 * (0 - 20) + (0 - 12))
        );
        let inv = mat3_inv(&f, &a).unwrap();
        assert_eq!(mat3_mul(&f, &a, &inv), mat3_identity(&f));
        assert_eq!(
            mat3_mul(&f, &mat3_adj(&f, &a), &a),
            mat3_diag(&f, [mat3_det(&f, &a); 3])
        );
        assert!(mat3_inv(&f, &[[1, 2, 3], [2, 4, 6], [0, 0, 1]]).is_err());
    }

    #[test]
    fn rref_rows_have_unit_pivots() {
        let f = PrimeField::new(7).unwrap();
        let e = Echelon::new(&f, 3, [vec![0, 3, 1], vec![2, 1, 0]]);
        assert_eq!(e.pivots(), &[0, 1]);
        for (row, &p) in e.rows().iter().zip(e.pivots()) {
            assert_eq!(row[p], 1);
        }
    }
}
