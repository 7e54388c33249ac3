//! Randomized and exhaustive identity checks on the algebra modules, packaged
//! as reports for the command-line `check` subcommand.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::composition::CompositionAlgebra;
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::fts::{Fts, FtsVector};
use crate::jordan::JordanAlgebra;
use crate::linalg::mat3_det;
use crate::report::CensusReport;
use crate::satake::{
    class_eq, phi_a2_g2, phi_g2_b3, psi_g2a1_f4, so3_class, t1_t2_scalars, trivial_so3_param,
    values_eq, ExactValue, UnramifiedValue,
};

pub const CHECK_SEED: u64 = 0xc0ffee;

pub const SUITES: [&str; 4] = ["composition", "jordan", "fts", "satake"];

fn random_coords<F: Field>(k: &F, rng: &mut ChaCha8Rng, n: usize) -> Vec<F::Elem> {
    (0..n)
        .map(|_| k.from_i64(rng.gen_range(-1000..1000)))
        .collect()
}

/// Norm multiplicativity and Cayley–Hamilton on random samples, plus the
/// norm law exhaustively over `F_2` for `dim ≤ 4`.
pub fn composition_check(samples: usize, timed: bool) -> Result<CensusReport> {
    let t0 = timed.then(Instant::now);
    let mut rep = CensusReport::new("composition")
        .param("samples", samples)
        .param("seed", CHECK_SEED);
    let mut rng = ChaCha8Rng::seed_from_u64(CHECK_SEED);
    for p in [2u64, 3, 5, 101] {
        let k = PrimeField::new(p)?;
        for d in [1usize, 2, 4, 8] {
            let a = CompositionAlgebra::new(k, d)?;
            let mut fails = 0;
            for _ in 0..samples {
                let x = a.from_coords(&random_coords(&k, &mut rng, d))?;
                let y = a.from_coords(&random_coords(&k, &mut rng, d))?;
                let law = a.norm(&a.mul(&x, &y)) == k.mul(&a.norm(&x), &a.norm(&y));
                let ch = a.add(
                    &a.sub(&a.mul(&x, &x), &a.scale(&a.trace(&x), &x)),
                    &a.scalar(&a.norm(&x)),
                );
                fails += usize::from(!law || !a.is_zero(&ch));
            }
            rep.check_eq(
                &format!("p={p} dim={d} failures"),
                0,
                "N(xy) = N(x)N(y), x^2 - T(x)x + N(x) = 0",
                fails,
            );
        }
    }
    let k = PrimeField::new(2)?;
    for d in [1usize, 2, 4] {
        let a = CompositionAlgebra::new(k, d)?;
        let all: Vec<_> = (0..1u32 << d)
            .map(|m| a.from_coords(&(0..d).map(|i| (m >> i) & 1).collect::<Vec<_>>()))
            .collect::<Result<_>>()?;
        let fails = all
            .iter()
            .flat_map(|x| all.iter().map(move |y| (x, y)))
            .filter(|(x, y)| a.norm(&a.mul(x, y)) != k.mul(&a.norm(x), &a.norm(y)))
            .count();
        rep.check_eq(
            &format!("p=2 dim={d} exhaustive failures"),
            0,
            "N(xy) = N(x)N(y)",
            fails,
        );
    }
    Ok(rep.timed(t0))
}

/// Dickson form against the determinant on `M₃`, and the cross-product
/// duality `tr((u×y)∘x) = 3(x, y, u)`.
pub fn jordan_check(samples: usize, exhaustive_p5: bool, timed: bool) -> Result<CensusReport> {
    let t0 = timed.then(Instant::now);
    let mut rep = CensusReport::new("jordan")
        .param("samples", samples)
        .param("seed", CHECK_SEED);
    let mut rng = ChaCha8Rng::seed_from_u64(CHECK_SEED ^ 1);
    if exhaustive_p5 {
        let k = PrimeField::new(5)?;
        let j = JordanAlgebra::new(k, 2)?;
        let mut fails = 0u64;
        let mut m = [[0u32; 3]; 3];
        for code in 0..5u32.pow(9) {
            let mut c = code;
            for e in m.iter_mut().flatten() {
                *e = c % 5;
                c /= 5;
            }
            let x = j.from_matrix(&m)?;
            fails += u64::from(j.trilinear(&x, &x, &x)? != mat3_det(&k, &m));
        }
        rep.check_eq(
            "p=5 all 5^9 matrices: (X,X,X) != det X",
            0,
            "(x,x,x) = det(x)",
            fails,
        );
    }
    let q = Rationals;
    let j = JordanAlgebra::new(q, 2)?;
    let mut fails = 0;
    for _ in 0..samples.min(1000) {
        let m: [[BigRational; 3]; 3] = std::array::from_fn(|_| {
            std::array::from_fn(|_| {
                BigRational::new(
                    BigInt::from(rng.gen_range(-50..50)),
                    BigInt::from(rng.gen_range(1..20)),
                )
            })
        });
        let x = j.from_matrix(&m)?;
        fails += usize::from(j.trilinear(&x, &x, &x)? != mat3_det(&q, &m));
    }
    rep.check_eq(
        "rational matrices: (X,X,X) != det X",
        0,
        "(x,x,x) = det(x)",
        fails,
    );
    for p in [5u64, 101] {
        let k = PrimeField::new(p)?;
        for d in [1usize, 2, 4, 8] {
            let j = JordanAlgebra::new(k, d)?;
            let mut fails = 0;
            for _ in 0..samples {
                let x = j.from_coords(&random_coords(&k, &mut rng, j.dim()))?;
                let y = j.from_coords(&random_coords(&k, &mut rng, j.dim()))?;
                let u = j.from_coords(&random_coords(&k, &mut rng, j.dim()))?;
                let lhs = j.trace_form(&j.cross(&u, &y)?, &x);
                fails += usize::from(lhs != k.scale_int(3, &j.trilinear(&x, &y, &u)?));
            }
            rep.check_eq(
                &format!("p={p} dim={d} duality failures"),
                0,
                "tr((u x y) x) = 3(x,y,u)",
                fails,
            );
        }
    }
    Ok(rep.timed(t0))
}

/// `u(c)u(c') = u(c + c')` and pairing invariance for every pair of basis
/// multiples `c = s·e_i`, applied to every basis vector of `N`.
pub fn fts_check(p: u64, timed: bool) -> Result<CensusReport> {
    let t0 = timed.then(Instant::now);
    let mut rep = CensusReport::new("fts").param("p", p);
    let k = PrimeField::new(p)?;
    for d in [1usize, 2] {
        let fts = Fts::new(k, d)?;
        let j = fts.jordan();
        let width = fts.width();
        let basis: Vec<FtsVector<u32>> = (0..width)
            .map(|i| fts.from_coords(&(0..width).map(|t| u32::from(t == i)).collect::<Vec<_>>()))
            .collect::<Result<_>>()?;
        let mut multiples = vec![j.zero()];
        for i in 0..j.dim() {
            for s in 1..p as u32 {
                multiples.push(j.scale(&s, &j.basis(i)));
            }
        }
        let (mut add_fail, mut pair_fail) = (0u64, 0u64);
        for u in &multiples {
            for u2 in &multiples {
                let sum = j.add(u, u2);
                for v in &basis {
                    add_fail +=
                        u64::from(fts.u_plus(u, &fts.u_plus(u2, v)?)? != fts.u_plus(&sum, v)?);
                    add_fail +=
                        u64::from(fts.u_minus(u, &fts.u_minus(u2, v)?)? != fts.u_minus(&sum, v)?);
                }
            }
            let images: Vec<_> = basis
                .iter()
                .map(|v| fts.u_plus(u, v))
                .collect::<Result<_>>()?;
            let images_minus: Vec<_> = basis
                .iter()
                .map(|v| fts.u_minus(u, v))
                .collect::<Result<_>>()?;
            for (a, v) in basis.iter().enumerate() {
                for (b, w) in basis.iter().enumerate() {
                    let base = fts.pairing(v, w);
                    pair_fail += u64::from(fts.pairing(&images[a], &images[b]) != base);
                    pair_fail += u64::from(fts.pairing(&images_minus[a], &images_minus[b]) != base);
                }
            }
        }
        rep.count(&format!("dim{d}_multiples"), multiples.len() as u64);
        rep.check_eq(
            &format!("dim={d} additivity failures"),
            0,
            "u(c)u(c') = u(c+c')",
            add_fail,
        );
        rep.check_eq(
            &format!("dim={d} pairing failures"),
            0,
            "U_D preserves the symplectic form",
            pair_fail,
        );
    }
    Ok(rep.timed(t0))
}

fn random_exact(rng: &mut ChaCha8Rng) -> ExactValue {
    let r = |rng: &mut ChaCha8Rng| {
        BigRational::new(
            BigInt::from(rng.gen_range(-12..=12)),
            BigInt::from(rng.gen_range(1..=12)),
        )
    };
    ExactValue::new(r(rng), r(rng))
}

fn random_sl3(rng: &mut ChaCha8Rng) -> [UnramifiedValue; 3] {
    let (a, b) = (random_exact(rng), random_exact(rng));
    let c = a.mul(&b).inv();
    [
        UnramifiedValue::Exact(a),
        UnramifiedValue::Exact(b),
        UnramifiedValue::Exact(c),
    ]
}

/// The lift maps on random exact classes and the Hecke-scalar verdicts on
/// random unitary parameters.
pub fn satake_check(classes: usize, unitary_samples: usize, timed: bool) -> Result<CensusReport> {
    let t0 = timed.then(Instant::now);
    let mut rep = CensusReport::new("satake")
        .param("classes", classes)
        .param("unitary_samples", unitary_samples)
        .param("seed", CHECK_SEED);
    let mut rng = ChaCha8Rng::seed_from_u64(CHECK_SEED ^ 2);
    let q = 5.0;
    let (mut dual, mut spin, mut closed, mut weyl) = (0, 0, 0, 0);
    for _ in 0..classes {
        let t = random_sl3(&mut rng);
        let s = phi_a2_g2(t.clone(), q)?;
        let dual_t = t.clone().map(|x| x.inv());
        dual += usize::from(!class_eq(&s, &phi_a2_g2(dual_t, q)?, 0.0)?);
        let b3 = phi_g2_b3(&s)?;
        spin += usize::from(
            !b3.without_one(0.0)
                .is_some_and(|rest| values_eq(&rest, s.values(), q, 0.0)),
        );
        let r = so3_class(UnramifiedValue::Exact(random_exact(&mut rng)), q);
        let f4 = psi_g2a1_f4(&s, &r)?;
        closed += usize::from(!(f4.len() == 26 && f4.is_inversion_closed(0.0)));
        let [a, b, c] = t;
        let swapped = psi_g2a1_f4(&phi_a2_g2([c, a, b], q)?, &r)?;
        weyl += usize::from(!class_eq(&f4, &swapped, 0.0)?);
    }
    rep.check_eq("Phi(s) != Phi(s*)", 0, "Phi(s) = Phi(s*)", dual);
    rep.check_eq(
        "spin multiset != {1} + 7-dim multiset",
        0,
        "G2 fixes a non-zero vector in the spin representation",
        spin,
    );
    rep.check_eq(
        "Psi not inversion-closed",
        0,
        "Weyl group contains -1",
        closed,
    );
    rep.check_eq("Psi changes under permutation", 0, "Weyl invariance", weyl);
    let one = UnramifiedValue::one();
    let g = phi_a2_g2([one.clone(), one.clone(), one.clone()], q)?;
    let id = psi_g2a1_f4(&g, &so3_class(one.clone(), q))?;
    rep.check_eq(
        "Psi(1, 1) all ones",
        true,
        "identity-preserving",
        id.values().iter().all(|v| *v == one),
    );
    let triv = psi_g2a1_f4(&g, &trivial_so3_param(q))?;
    rep.check_eq(
        "Psi(1, trivial) inversion-closed",
        true,
        "Weyl group contains -1",
        triv.is_inversion_closed(0.0),
    );

    for qq in [2.0f64, 3.0, 5.0, 9.0] {
        let (mut fails, mut real) = (0, 0u64);
        for i in 0..unitary_samples {
            let x = ExactValue::unit(BigRational::new(
                BigInt::from(rng.gen_range(0..360)),
                BigInt::from(360),
            ));
            // Every other sample uses a conjugate pair, where T1 is real.
            let y = if i % 2 == 0 {
                x.inv()
            } else {
                ExactValue::unit(BigRational::new(
                    BigInt::from(rng.gen_range(0..360)),
                    BigInt::from(360),
                ))
            };
            let s = t1_t2_scalars(&UnramifiedValue::Exact(x), &UnramifiedValue::Exact(y), qq);
            real += u64::from(s.t1_is_real);
            fails += usize::from(!s.all_hold() || s.reference != qq.powi(3));
        }
        rep.count(&format!("q{qq}_real_t1"), real);
        rep.check_eq(
            &format!("q={qq} T1/T2 verdict failures"),
            0,
            "T1 < 2q^2 when real, T1 != q^3, T2 not in {q^-2, q^-4}",
            fails,
        );
    }
    Ok(rep.timed(t0))
}

/// Runs one suite by name, or all of them for `"all"`.
pub fn run_check(name: &str, timed: bool) -> Result<Vec<CensusReport>> {
    match name {
        "composition" => Ok(vec![composition_check(10_000, timed)?]),
        "jordan" => Ok(vec![jordan_check(10_000, true, timed)?]),
        "fts" => Ok(vec![fts_check(5, timed)?]),
        "satake" => Ok(vec![satake_check(1000, 10_000, timed)?]),
        "all" => SUITES
            .iter()
            .map(|s| run_check(s, timed).map(|mut v| v.remove(0)))
            .collect(),
        other => Err(Error::InvalidArgument(format!(
            "unknown check suite {other:?}; expected one of {SUITES:?} or all"
        ))),
    }
}
