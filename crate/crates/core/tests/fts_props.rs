use exceptional::field::{Field, PrimeField, Rationals};
use exceptional::fts::{Fts, FtsVector};
use exceptional::jordan::JordanElement;
use exceptional::linalg::{mat3_diag, mat3_elementary, Mat3};
use proptest::prelude::*;

fn jel<F: Field>(f: &Fts<F>, raw: &[i64]) -> JordanElement<F::Elem> {
    let j = f.jordan();
    j.from_coords(
        &raw[..j.dim()]
            .iter()
            .map(|&r| f.field().from_i64(r))
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

fn vec_of<F: Field>(f: &Fts<F>, raw: &[i64]) -> FtsVector<F::Elem> {
    f.from_coords(
        &raw[..f.width()]
            .iter()
            .map(|&r| f.field().from_i64(r))
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

fn raw(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-30i64..30, n)
}

fn mat(k: &PrimeField, raw: &[i64]) -> Mat3<u32> {
    std::array::from_fn(|i| std::array::from_fn(|j| k.from_i64(raw[3 * i + j])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn u_actions_are_additive(d in prop::sample::select(vec![1usize, 2, 4, 8]), u in raw(27), w in raw(27), v in raw(56)) {
        let f = Fts::new(PrimeField::new(101).unwrap(), d).unwrap();
        let (u, w, v) = (jel(&f, &u), jel(&f, &w), vec_of(&f, &v));
        let uw = f.jordan().add(&u, &w);
        prop_assert_eq!(f.u_plus(&u, &f.u_plus(&w, &v).unwrap()).unwrap(), f.u_plus(&uw, &v).unwrap());
        prop_assert_eq!(f.u_minus(&u, &f.u_minus(&w, &v).unwrap()).unwrap(), f.u_minus(&uw, &v).unwrap());
    }

    #[test]
    fn rational_additivity(d in prop::sample::select(vec![1usize, 2, 4, 8]), u in raw(27), w in raw(27), v in raw(56)) {
        let f = Fts::new(Rationals, d).unwrap();
        let (u, w, v) = (jel(&f, &u), jel(&f, &w), vec_of(&f, &v));
        let uw = f.jordan().add(&u, &w);
        prop_assert_eq!(f.u_plus(&u, &f.u_plus(&w, &v).unwrap()).unwrap(), f.u_plus(&uw, &v).unwrap());
    }

    #[test]
    fn pairing_is_invariant(d in prop::sample::select(vec![1usize, 2, 4, 8]), u in raw(27), v in raw(56), w in raw(56)) {
        let f = Fts::new(PrimeField::new(101).unwrap(), d).unwrap();
        let (u, v, w) = (jel(&f, &u), vec_of(&f, &v), vec_of(&f, &w));
        let p = f.pairing(&v, &w);
        prop_assert_eq!(f.pairing(&f.u_plus(&u, &v).unwrap(), &f.u_plus(&u, &w).unwrap()), p);
        prop_assert_eq!(f.pairing(&f.u_minus(&u, &v).unwrap(), &f.u_minus(&u, &w).unwrap()), p);
    }

    #[test]
    fn levi_normalizes_u_plus(d in prop::sample::select(vec![1usize, 2]), g in raw(9), h in raw(9), u in raw(9), v in raw(20), lam in 1i64..100) {
        let f = Fts::new(PrimeField::new(101).unwrap(), d).unwrap();
        let k = *f.field();
        let (g, h) = (mat(&k, &g), mat(&k, &h));
        let levis = if d == 1 {
            vec![f.levi_gl3(&g), f.levi_torus(&k.from_i64(lam))]
        } else {
            vec![f.levi_pair(&g, &h), f.levi_torus(&k.from_i64(lam))]
        };
        let (u, v) = (jel(&f, &u), vec_of(&f, &v));
        for l in levis.into_iter().filter_map(|l| l.ok()) {
            let li = f.levi_inverse(&l).unwrap();
            let lhs = f.levi_action(&l, &f.u_plus(&u, &f.levi_action(&li, &v).unwrap()).unwrap()).unwrap();
            let rhs = f.u_plus(&f.levi_conjugate_u(&l, &u).unwrap(), &v).unwrap();
            prop_assert_eq!(lhs, rhs);
            let w = f.levi_action(&l, &f.flip(&v)).unwrap();
            prop_assert_eq!(f.pairing(&f.levi_action(&l, &v).unwrap(), &w), f.pairing(&v, &f.flip(&v)));
        }
    }
}

#[test]
fn torus_rescales_u_with_weight_two() {
    let f = Fts::new(PrimeField::new(11).unwrap(), 2).unwrap();
    let k = *f.field();
    let t = f.levi_torus(&3).unwrap();
    let u = jel(&f, &[1, 2, 0, 5, 1, 0, 3, 7, 2]);
    assert_eq!(
        f.levi_conjugate_u(&t, &u).unwrap(),
        f.jordan().scale(&9, &u)
    );
    let g = mat3_elementary(&k, 1, 0, &2);
    let l = f.levi_pair(&g, &mat3_diag(&k, [1, 1, 1])).unwrap();
    let v = vec_of(&f, &(0..20).collect::<Vec<_>>());
    let li = f.levi_inverse(&l).unwrap();
    let lhs = f
        .levi_action(&l, &f.u_plus(&u, &f.levi_action(&li, &v).unwrap()).unwrap())
        .unwrap();
    assert_eq!(
        lhs,
        f.u_plus(&f.levi_conjugate_u(&l, &u).unwrap(), &v).unwrap()
    );
}
