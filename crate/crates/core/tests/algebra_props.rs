use exceptional::composition::{CompositionAlgebra, CompositionElement};
use exceptional::field::{Field, PrimeField, Rationals};
use exceptional::jordan::{Assoc, JordanAlgebra, JordanElement};
use proptest::prelude::*;

const PRIMES: [u64; 4] = [2, 3, 5, 101];
const DIMS: [usize; 4] = [1, 2, 4, 8];

fn comp_elem<F: Field>(a: &CompositionAlgebra<F>, raw: &[i64]) -> CompositionElement<F::Elem> {
    let d = a.dim().get();
    let v: Vec<_> = raw[..d].iter().map(|&r| a.field().from_i64(r)).collect();
    a.from_coords(&v).unwrap()
}

fn jordan_elem<F: Field>(j: &JordanAlgebra<F>, raw: &[i64]) -> JordanElement<F::Elem> {
    let v: Vec<_> = raw[..j.dim()]
        .iter()
        .map(|&r| j.field().from_i64(r))
        .collect();
    j.from_coords(&v).unwrap()
}

fn raw(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-50i64..50, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn prime_field_axioms(p in prop::sample::select(PRIMES.to_vec()), a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
        let f = PrimeField::new(p).unwrap();
        let (a, b, c) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        if !f.is_zero(&a) {
            prop_assert!(f.is_one(&f.mul(&a, &f.inv(&a).unwrap())));
        }
    }

    #[test]
    fn rational_field_axioms(n in prop::collection::vec(-1000i64..1000, 3), d in prop::collection::vec(1i64..1000, 3)) {
        let q = Rationals;
        let e: Vec<_> = n.iter().zip(&d).map(|(&n, &d)| q.div(&q.from_i64(n), &q.from_i64(d)).unwrap()).collect();
        let (a, b, c) = (&e[0], &e[1], &e[2]);
        prop_assert_eq!(q.mul(&q.mul(a, b), c), q.mul(a, &q.mul(b, c)));
        prop_assert_eq!(q.mul(a, &q.add(b, c)), q.add(&q.mul(a, b), &q.mul(a, c)));
        if !q.is_zero(a) {
            prop_assert!(q.is_one(&q.mul(a, &q.inv(a).unwrap())));
        }
    }

    #[test]
    fn composition_law_and_cayley_hamilton(
        p in prop::sample::select(PRIMES.to_vec()),
        d in prop::sample::select(DIMS.to_vec()),
        x in raw(8), y in raw(8),
    ) {
        let a = CompositionAlgebra::new(PrimeField::new(p).unwrap(), d).unwrap();
        let k = a.field();
        let (x, y) = (comp_elem(&a, &x), comp_elem(&a, &y));
        prop_assert_eq!(a.norm(&a.mul(&x, &y)), k.mul(&a.norm(&x), &a.norm(&y)));
        let ch = a.add(&a.sub(&a.mul(&x, &x), &a.scale(&a.trace(&x), &x)), &a.scalar(&a.norm(&x)));
        prop_assert!(a.is_zero(&ch));
        prop_assert_eq!(a.add(&x, &a.conj(&x)), a.scalar(&a.trace(&x)));
        prop_assert_eq!(a.mul(&x, &a.conj(&x)), a.scalar(&a.norm(&x)));
    }

    #[test]
    fn octonions_are_alternative(p in prop::sample::select(vec![3u64, 5, 101]), x in raw(8), y in raw(8)) {
        let a = CompositionAlgebra::new(PrimeField::new(p).unwrap(), 8).unwrap();
        let (x, y) = (comp_elem(&a, &x), comp_elem(&a, &y));
        let xx = a.mul(&x, &x);
        prop_assert_eq!(a.mul(&xx, &y), a.mul(&x, &a.mul(&x, &y)));
        prop_assert_eq!(a.mul(&y, &xx), a.mul(&a.mul(&y, &x), &x));
    }

    #[test]
    fn jordan_square_is_hermitian_and_product_commutes(
        d in prop::sample::select(DIMS.to_vec()), x in raw(27), y in raw(27),
    ) {
        let j = JordanAlgebra::new(PrimeField::new(101).unwrap(), d).unwrap();
        let (x, y) = (jordan_elem(&j, &x), jordan_elem(&j, &y));
        prop_assert_eq!(j.jordan_product(&x, &y).unwrap(), j.jordan_product(&y, &x).unwrap());
        prop_assert_eq!(j.jordan_product(&x, &x).unwrap(), j.jmatrix_square(&x));
    }

    #[test]
    fn trace_associativity(d in prop::sample::select(DIMS.to_vec()), x in raw(27), y in raw(27), z in raw(27)) {
        let j = JordanAlgebra::new(PrimeField::new(101).unwrap(), d).unwrap();
        let k = j.field();
        let (x, y, z) = (jordan_elem(&j, &x), jordan_elem(&j, &y), jordan_elem(&j, &z));
        let l = j.matrix_trace_triple(&x, &y, &z, Assoc::Left);
        prop_assert_eq!(&l, &j.matrix_trace_triple(&x, &y, &z, Assoc::Right));
        // Composition traces double the scalar trace, hence the factor 4.
        let r = j.matrix_trace_triple(&y, &x, &z, Assoc::Left);
        let t = j.triple_trace(&x, &y, &z).unwrap();
        prop_assert_eq!(k.add(&l, &r), k.scale_int(4, &t));
    }

    #[test]
    fn trilinear_symmetry_and_duality(
        p in prop::sample::select(vec![5u64, 101]),
        d in prop::sample::select(DIMS.to_vec()),
        x in raw(27), y in raw(27), u in raw(27),
    ) {
        let j = JordanAlgebra::new(PrimeField::new(p).unwrap(), d).unwrap();
        let k = j.field();
        let (x, y, u) = (jordan_elem(&j, &x), jordan_elem(&j, &y), jordan_elem(&j, &u));
        let t = j.trilinear(&x, &y, &u).unwrap();
        prop_assert_eq!(&t, &j.trilinear(&u, &x, &y).unwrap());
        prop_assert_eq!(&t, &j.trilinear(&y, &x, &u).unwrap());
        let lhs = j.trace_form(&j.cross(&u, &y).unwrap(), &x);
        prop_assert_eq!(lhs, k.scale_int(3, &t));
        prop_assert_eq!(j.cross(&x, &x).unwrap(), j.adjoint_sharp(&x).unwrap());
        prop_assert_eq!(j.trace_form(&j.adjoint_sharp(&x).unwrap(), &y), k.scale_int(3, &j.trilinear(&x, &x, &y).unwrap()));
    }

    #[test]
    fn rational_jdet_matches_cofactor_expansion(m in prop::collection::vec(-20i64..20, 9)) {
        let j = JordanAlgebra::new(Rationals, 2).unwrap();
        let q = Rationals;
        let a: [[_; 3]; 3] = std::array::from_fn(|r| std::array::from_fn(|c| q.from_i64(m[3 * r + c])));
        let x = j.from_matrix(&a).unwrap();
        prop_assert_eq!(j.jdet(&x).unwrap(), classical_det(&q, &a));
        prop_assert_eq!(j.to_matrix(&j.adjoint_sharp(&x).unwrap()).unwrap(), classical_adj(&q, &a));
    }

    #[test]
    fn sharp_identity(d in prop::sample::select(DIMS.to_vec()), x in raw(27)) {
        // X#·# = det(X)·X
        let j = JordanAlgebra::new(PrimeField::new(101).unwrap(), d).unwrap();
        let x = jordan_elem(&j, &x);
        let ss = j.adjoint_sharp(&j.adjoint_sharp(&x).unwrap()).unwrap();
        prop_assert_eq!(ss, j.scale(&j.jdet(&x).unwrap(), &x));
    }
}

fn classical_det<F: Field>(k: &F, a: &[[F::Elem; 3]; 3]) -> F::Elem {
    let mut s = k.zero();
    for (p, sign) in [
        ([0, 1, 2], 1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([0, 2, 1], -1),
        ([2, 1, 0], -1),
        ([1, 0, 2], -1),
    ] {
        let t = k.mul(&k.mul(&a[0][p[0]], &a[1][p[1]]), &a[2][p[2]]);
        s = if sign > 0 {
            k.add(&s, &t)
        } else {
            k.sub(&s, &t)
        };
    }
    s
}

fn classical_adj<F: Field>(k: &F, a: &[[F::Elem; 3]; 3]) -> [[F::Elem; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|jj| {
            // adj[i][j] = cofactor[j][i]
            let (r, c) = (jj, i);
            let rows: Vec<usize> = (0..3).filter(|&t| t != r).collect();
            let cols: Vec<usize> = (0..3).filter(|&t| t != c).collect();
            let m = k.sub(
                &k.mul(&a[rows[0]][cols[0]], &a[rows[1]][cols[1]]),
                &k.mul(&a[rows[0]][cols[1]], &a[rows[1]][cols[0]]),
            );
            if (r + c) % 2 == 0 {
                m
            } else {
                k.neg(&m)
            }
        })
    })
}

#[test]
fn composition_law_exhaustive_p2() {
    let f = PrimeField::new(2).unwrap();
    for d in [1usize, 2, 4] {
        let a = CompositionAlgebra::new(f, d).unwrap();
        let elems: Vec<_> = (0..1u32 << d)
            .map(|m| {
                a.from_coords(&(0..d).map(|i| (m >> i) & 1).collect::<Vec<_>>())
                    .unwrap()
            })
            .collect();
        for x in &elems {
            for y in &elems {
                assert_eq!(a.norm(&a.mul(x, y)), f.mul(&a.norm(x), &a.norm(y)));
            }
        }
    }
}

#[test]
fn jordan_square_matches_matrix_square_p2() {
    let f = PrimeField::new(2).unwrap();
    let j = JordanAlgebra::new(f, 2).unwrap();
    for m in 0u32..512 {
        let a: [[u32; 3]; 3] =
            std::array::from_fn(|r| std::array::from_fn(|c| (m >> (3 * r + c)) & 1));
        let x = j.from_matrix(&a).unwrap();
        let sq = j.to_matrix(&j.jmatrix_square(&x)).unwrap();
        let direct: [[u32; 3]; 3] = std::array::from_fn(|r| {
            std::array::from_fn(|c| (0..3).map(|t| a[r][t] * a[t][c]).sum::<u32>() % 2)
        });
        assert_eq!(sq, direct);
    }
}
