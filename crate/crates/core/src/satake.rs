//! Satake parameters as eigenvalue multisets and the torus-level lift maps
//! between them.
//!
//! A value `q^r·e(θ)` with `e(θ) = exp(2πiθ)` is stored exactly as the pair
//! `(r, θ mod 1)`; `|ϖ| = q⁻¹` throughout. Each class also keeps one torus
//! representative in fixed coordinates:
//!
//! | group | torus coordinates |
//! |-------|-------------------|
//! | SL3, G2 | `(t₁, t₂)`, with `t₃ = (t₁t₂)⁻¹` |
//! | Spin7, F4 | simple coroots, Bourbaki order |
//! | SO3 | `c`, the class of `diag(c, 1, c⁻¹)` |
//! | GL2 | `(x, y)` |
//!
//! The maps G2 → Spin7 and G2 × SO3 → F4 are integer matrices sending those
//! coordinates to coroot coordinates; [`solve_g2_spin7_maps`] and
//! [`solve_g2_so3_f4_maps`] recover them from weight data.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{rational_to_string, subregular_marking, RootDatum};

/// Default tolerance for numeric comparisons.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactValue {
    exp: BigRational,
    phase: BigRational,
}

fn frac_part(x: &BigRational) -> BigRational {
    x - x.floor()
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl ExactValue {
    pub fn new(exp: BigRational, phase: BigRational) -> Self {
        Self {
            exp,
            phase: frac_part(&phase),
        }
    }

    pub fn one() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn q_power(exp: BigRational) -> Self {
        Self::new(exp, BigRational::zero())
    }

    pub fn unit(phase: BigRational) -> Self {
        Self::new(BigRational::zero(), phase)
    }

    pub fn exp(&self) -> &BigRational {
        &self.exp
    }

    pub fn phase(&self) -> &BigRational {
        &self.phase
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.exp + &o.exp, &self.phase + &o.phase)
    }

    pub fn inv(&self) -> Self {
        Self::new(-&self.exp, -&self.phase)
    }

    pub fn pow(&self, n: i64) -> Self {
        Self::new(&self.exp * rat(n), &self.phase * rat(n))
    }

    pub fn is_one(&self) -> bool {
        self.exp.is_zero() && self.phase.is_zero()
    }

    pub fn is_unitary(&self) -> bool {
        self.exp.is_zero()
    }

    pub fn to_complex(&self, q: f64) -> Complex64 {
        let r = q.powf(self.exp.to_f64().unwrap_or(f64::NAN));
        Complex64::from_polar(
            r,
            std::f64::consts::TAU * self.phase.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^({})", rational_to_string(&self.exp))?;
        if !self.phase.is_zero() {
            write!(f, "·e({})", rational_to_string(&self.phase))?;
        }
        Ok(())
    }
}

impl Serialize for ExactValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ExactValue", 2)?;
        st.serialize_field("q_exp", &rational_to_string(&self.exp))?;
        st.serialize_field("phase", &rational_to_string(&self.phase))?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum UnramifiedValue {
    Exact(ExactValue),
    Numeric(Complex64),
}

impl UnramifiedValue {
    pub fn one() -> Self {
        Self::Exact(ExactValue::one())
    }

    pub fn q_power(exp: BigRational) -> Self {
        Self::Exact(ExactValue::q_power(exp))
    }

    pub fn to_complex(&self, q: f64) -> Complex64 {
        match self {
            Self::Exact(e) => e.to_complex(q),
            Self::Numeric(z) => *z,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Self::Exact(_))
    }

    pub fn inv(&self) -> Self {
        match self {
            Self::Exact(e) => Self::Exact(e.inv()),
            Self::Numeric(z) => Self::Numeric(z.inv()),
        }
    }

    pub fn mul(&self, o: &Self, q: f64) -> Self {
        match (self, o) {
            (Self::Exact(a), Self::Exact(b)) => Self::Exact(a.mul(b)),
            _ => Self::Numeric(self.to_complex(q) * o.to_complex(q)),
        }
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        match self {
            Self::Exact(e) => e.is_unitary(),
            Self::Numeric(z) => (z.norm() - 1.0).abs() <= tol,
        }
    }

    fn approx_eq(&self, o: &Self, q: f64, tol: f64) -> bool {
        match (self, o) {
            (Self::Exact(a), Self::Exact(b)) => a == b,
            _ => {
                let (a, b) = (self.to_complex(q), o.to_complex(q));
                (a - b).norm() <= tol * (1.0 + a.norm().max(b.norm()))
            }
        }
    }
}

impl Serialize for UnramifiedValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Self::Exact(e) => e.serialize(s),
            Self::Numeric(z) => {
                let mut st = s.serialize_struct("Numeric", 2)?;
                st.serialize_field("re", &z.re)?;
                st.serialize_field("im", &z.im)?;
                st.end()
            }
        }
    }
}

/// `Π torus_i^{exps_i}`.
fn monomial(torus: &[UnramifiedValue], exps: &[i64], q: f64) -> UnramifiedValue {
    if torus.iter().all(UnramifiedValue::is_exact) {
        let mut acc = ExactValue::one();
        for (t, &e) in torus.iter().zip(exps) {
            if let UnramifiedValue::Exact(x) = t {
                acc = acc.mul(&x.pow(e));
            }
        }
        UnramifiedValue::Exact(acc)
    } else {
        let z = torus
            .iter()
            .zip(exps)
            .fold(Complex64::new(1.0, 0.0), |acc, (t, &e)| {
                acc * t.to_complex(q).powi(e as i32)
            });
        UnramifiedValue::Numeric(z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Group {
    SL3,
    GL2,
    G2,
    Spin7,
    F4,
    SO3,
}

#[derive(Clone, Debug, Serialize)]
pub struct SatakeClass {
    group: Group,
    q: f64,
    torus: Vec<UnramifiedValue>,
    /// Sorted eigenvalues in the reference representation.
    values: Vec<UnramifiedValue>,
}

fn canonical(mut values: Vec<UnramifiedValue>, q: f64) -> Vec<UnramifiedValue> {
    if values.iter().all(UnramifiedValue::is_exact) {
        values.sort_by(|a, b| match (a, b) {
            (UnramifiedValue::Exact(x), UnramifiedValue::Exact(y)) => x.cmp(y),
            _ => Ordering::Equal,
        });
        values
    } else {
        let mut z: Vec<Complex64> = values.iter().map(|v| v.to_complex(q)).collect();
        z.sort_by(|a, b| {
            a.norm()
                .total_cmp(&b.norm())
                .then(a.arg().total_cmp(&b.arg()))
        });
        z.into_iter().map(UnramifiedValue::Numeric).collect()
    }
}

impl SatakeClass {
    fn from_weights(
        group: Group,
        q: f64,
        torus: Vec<UnramifiedValue>,
        weights: &[Vec<i64>],
    ) -> Self {
        let values = weights.iter().map(|w| monomial(&torus, w, q)).collect();
        Self {
            group,
            q,
            values: canonical(values, q),
            torus,
        }
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn torus(&self) -> &[UnramifiedValue] {
        &self.torus
    }

    pub fn values(&self) -> &[UnramifiedValue] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.values.iter().all(UnramifiedValue::is_exact)
    }

    pub fn to_numeric(&self) -> Self {
        let num = |v: &[UnramifiedValue]| {
            v.iter()
                .map(|x| UnramifiedValue::Numeric(x.to_complex(self.q)))
                .collect()
        };
        Self {
            group: self.group,
            q: self.q,
            torus: num(&self.torus),
            values: canonical(num(&self.values), self.q),
        }
    }

    /// The multiset with every eigenvalue inverted, compared as a multiset.
    pub fn is_inversion_closed(&self, tol: f64) -> bool {
        let inv = Self {
            values: canonical(
                self.values.iter().map(UnramifiedValue::inv).collect(),
                self.q,
            ),
            ..self.clone()
        };
        multiset_eq(&self.values, &inv.values, self.q, tol)
    }

    /// Removes one eigenvalue equal to 1, if present.
    pub fn without_one(&self, tol: f64) -> Option<Vec<UnramifiedValue>> {
        let one = UnramifiedValue::one();
        let i = self
            .values
            .iter()
            .position(|v| v.approx_eq(&one, self.q, tol))?;
        let mut v = self.values.clone();
        v.remove(i);
        Some(v)
    }
}

fn multiset_eq(a: &[UnramifiedValue], b: &[UnramifiedValue], q: f64, tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.iter().chain(b).all(UnramifiedValue::is_exact) {
        return a == b;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(
        |x| match (0..b.len()).find(|&j| !used[j] && x.approx_eq(&b[j], q, tol)) {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        },
    )
}

/// Multiset equality of two classes of the same group: exact when both are
/// exact, within `tol` otherwise.
pub fn class_eq(a: &SatakeClass, b: &SatakeClass, tol: f64) -> Result<bool> {
    if a.group != b.group {
        return Err(Error::MixedGroups);
    }
    Ok(a.q == b.q && multiset_eq(&a.values, &b.values, a.q, tol))
}

/// Equality of two lists of values up to order.
pub fn values_eq(a: &[UnramifiedValue], b: &[UnramifiedValue], q: f64, tol: f64) -> bool {
    multiset_eq(&canonical(a.to_vec(), q), &canonical(b.to_vec(), q), q, tol)
}

/// Weights of the 7-dimensional representation of G2 in `(t₁, t₂)` exponents:
/// `0, ±e₁, ±e₂, ±e₃` with `e₃ = −e₁ − e₂`.
pub const G2_WEIGHTS: [[i64; 2]; 7] = [[0, 0], [1, 0], [-1, 0], [0, 1], [0, -1], [-1, -1], [1, 1]];

/// Spin7 coroot coordinates as monomials in `(t₁, t₂)`; row `k` holds the
/// exponents of the `k`-th coordinate.
pub const G2_SPIN7_MAP: [[i64; 2]; 3] = [[-1, -1], [-2, -1], [-1, -1]];

/// F4 coroot coordinates as monomials in `(t₁, t₂, c)`.
pub const G2_SO3_F4_MAP: [[i64; 3]; 4] = [[-2, -1, 0], [-3, -3, 0], [-2, -2, 1], [-1, -1, 1]];

fn sl3_params(t: &[UnramifiedValue; 3], q: f64) -> Result<Vec<UnramifiedValue>> {
    let prod = t[0].mul(&t[1], q).mul(&t[2], q);
    let ok = match &prod {
        UnramifiedValue::Exact(e) => e.is_one(),
        UnramifiedValue::Numeric(z) => (z - Complex64::new(1.0, 0.0)).norm() <= TOLERANCE,
    };
    if !ok {
        return Err(Error::ProductNotOne);
    }
    Ok(vec![t[0].clone(), t[1].clone()])
}

/// Class of `diag(t₁, t₂, t₃)` in SL3.
pub fn sl3_class(t: [UnramifiedValue; 3], q: f64) -> Result<SatakeClass> {
    let torus = sl3_params(&t, q)?;
    Ok(SatakeClass::from_weights(
        Group::SL3,
        q,
        torus,
        &[vec![1, 0], vec![0, 1], vec![-1, -1]],
    ))
}

/// SL3 → G2 through the long-root subgroup: `{1, t_i^{±1}}`.
pub fn phi_a2_g2(t: [UnramifiedValue; 3], q: f64) -> Result<SatakeClass> {
    let torus = sl3_params(&t, q)?;
    let w: Vec<Vec<i64>> = G2_WEIGHTS.iter().map(|w| w.to_vec()).collect();
    Ok(SatakeClass::from_weights(Group::G2, q, torus, &w))
}

fn pullback(labels: &[i64], map: &[Vec<i64>]) -> Vec<i64> {
    let cols = map.first().map_or(0, Vec::len);
    (0..cols)
        .map(|c| labels.iter().zip(map).map(|(l, row)| l * row[c]).sum())
        .collect()
}

fn spin7_weights() -> Vec<Vec<i64>> {
    let b3 = RootDatum::build("B3").expect("B3");
    b3.weight_orbit(&[0, 0, 1])
}

/// The 26 weights of F4 (short roots and zero twice), as Dynkin labels.
fn f4_weights() -> Vec<Vec<i64>> {
    let f4 = RootDatum::build("F4").expect("F4");
    let mut out = vec![vec![0; 4], vec![0; 4]];
    for r in f4.positive_roots() {
        if f4.norm2(r) == 2 {
            let l = f4.to_labels(r);
            out.push(l.iter().map(|x| -x).collect());
            out.push(l);
        }
    }
    out
}

fn apply_map(
    src: &SatakeClass,
    map: &[Vec<i64>],
    group: Group,
    weights: &[Vec<i64>],
) -> SatakeClass {
    let torus: Vec<UnramifiedValue> = map
        .iter()
        .map(|row| monomial(&src.torus, row, src.q))
        .collect();
    SatakeClass::from_weights(group, src.q, torus, weights)
}

/// G2 → Spin7; the spin multiset is `{1} ⊎` the 7-dimensional one.
pub fn phi_g2_b3(c: &SatakeClass) -> Result<SatakeClass> {
    if c.group != Group::G2 {
        return Err(Error::MixedGroups);
    }
    let map: Vec<Vec<i64>> = G2_SPIN7_MAP.iter().map(|r| r.to_vec()).collect();
    Ok(apply_map(c, &map, Group::Spin7, &spin7_weights()))
}

/// G2 × SO3 → F4 on the 26-dimensional representation.
pub fn psi_g2a1_f4(c: &SatakeClass, r: &SatakeClass) -> Result<SatakeClass> {
    if c.group != Group::G2 || r.group != Group::SO3 || c.q != r.q {
        return Err(Error::MixedGroups);
    }
    let joint = SatakeClass {
        group: Group::G2,
        q: c.q,
        torus: c.torus.iter().chain(&r.torus).cloned().collect(),
        values: Vec::new(),
    };
    let map: Vec<Vec<i64>> = G2_SO3_F4_MAP.iter().map(|r| r.to_vec()).collect();
    Ok(apply_map(&joint, &map, Group::F4, &f4_weights()))
}

fn sorted(mut v: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    v.sort();
    v
}

/// Every `3×2` matrix with entries in `[−2, 2]` pulling the spin weights
/// back to `{0} ⊎ {7-dimensional G2 weights}`, in lexicographic order.
pub fn solve_g2_spin7_maps() -> Vec<[[i64; 2]; 3]> {
    let spin = spin7_weights();
    let mut target: Vec<Vec<i64>> = G2_WEIGHTS.iter().map(|w| w.to_vec()).collect();
    target.push(vec![0, 0]);
    let target = sorted(target);
    let mut out = Vec::new();
    let range = -2i64..=2;
    for code in 0..5usize.pow(6) {
        let mut m = [[0i64; 2]; 3];
        let mut c = code;
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                *x = (c % 5) as i64 + range.start();
                c /= 5;
            }
        }
        let rows: Vec<Vec<i64>> = m.iter().map(|r| r.to_vec()).collect();
        if sorted(spin.iter().map(|w| pullback(w, &rows)).collect()) == target {
            out.push(m);
        }
    }
    out.sort();
    out
}

/// Images of a `(t₁, t₂)` exponent vector under `W(G2)`: permutations of
/// `(e₁, e₂, e₃)` and negation.
fn g2_weyl_images(w: &[i64]) -> Vec<Vec<i64>> {
    let x = [w[0], w[1], 0];
    let perms = [
        [0, 1, 2],
        [1, 0, 2],
        [2, 1, 0],
        [0, 2, 1],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let mut out = Vec::new();
    for p in perms {
        let y = [x[p[0]], x[p[1]], x[p[2]]];
        out.push(vec![y[0] - y[2], y[1] - y[2]]);
        out.push(vec![y[2] - y[0], y[2] - y[1]]);
    }
    out
}

/// Every F4 map whose `(t₁, t₂)` columns lie in the coroot span of the long
/// `A2 = {−θ, α₁}` (coefficients in `[−2, 2]`) and whose `c` column is the
/// principal coroot `α₃^∨ + α₄^∨` of the short `A2`, such that the long `A2`
/// roots pull back to the SL3 roots, `c` centralizes them, and the 26
/// weights are stable under `W(G2)` and `c ↦ c⁻¹`.
pub fn solve_g2_so3_f4_maps() -> Vec<[[i64; 3]; 4]> {
    let f4 = RootDatum::build("F4").expect("F4");
    let weights = f4_weights();
    let neg_theta_co = [-2i64, -3, -2, -1];
    let alpha1_co = [1i64, 0, 0, 0];
    let c_col = [0i64, 0, 1, 1];
    let theta = f4.highest_root().to_vec();
    let long_a2: Vec<Vec<i64>> = {
        let b1: Vec<i64> = theta.iter().map(|x| -x).collect();
        let b2 = vec![1, 0, 0, 0];
        let b12: Vec<i64> = b1.iter().zip(&b2).map(|(a, b)| a + b).collect();
        [b1, b2, b12]
            .into_iter()
            .flat_map(|r| [r.iter().map(|x| -x).collect(), r])
            .map(|r| f4.to_labels(&r))
            .collect()
    };
    let sl3_roots = sorted(vec![
        vec![1, -1],
        vec![-1, 1],
        vec![2, 1],
        vec![-2, -1],
        vec![1, 2],
        vec![-1, -2],
    ]);
    let mut out = Vec::new();
    for code in 0..625usize {
        let (i, j, k, l) = (
            (code % 5) as i64 - 2,
            (code / 5 % 5) as i64 - 2,
            (code / 25 % 5) as i64 - 2,
            (code / 125) as i64 - 2,
        );
        let col_a: Vec<i64> = (0..4)
            .map(|r| i * neg_theta_co[r] + j * alpha1_co[r])
            .collect();
        let col_b: Vec<i64> = (0..4)
            .map(|r| k * neg_theta_co[r] + l * alpha1_co[r])
            .collect();
        let rows: Vec<Vec<i64>> = (0..4).map(|r| vec![col_a[r], col_b[r], c_col[r]]).collect();
        let roots: Vec<Vec<i64>> = long_a2.iter().map(|w| pullback(w, &rows)).collect();
        if roots.iter().any(|r| r[2] != 0) {
            continue;
        }
        if sorted(roots.iter().map(|r| r[..2].to_vec()).collect()) != sl3_roots {
            continue;
        }
        let pulled = sorted(weights.iter().map(|w| pullback(w, &rows)).collect());
        let stable = (0..12).all(|g| {
            sorted(
                pulled
                    .iter()
                    .map(|w| {
                        let mut v = g2_weyl_images(&w[..2])[g].clone();
                        v.push(w[2]);
                        v
                    })
                    .collect(),
            ) == pulled
        }) && sorted(pulled.iter().map(|w| vec![w[0], w[1], -w[2]]).collect())
            == pulled;
        if stable {
            out.push(std::array::from_fn(|r| {
                [rows[r][0], rows[r][1], rows[r][2]]
            }));
        }
    }
    out.sort();
    out
}

/// `(t₁, t₂, c)` exponents of the 26 weights under the frozen F4 map.
pub fn f4_branching() -> Vec<Vec<i64>> {
    let map: Vec<Vec<i64>> = G2_SO3_F4_MAP.iter().map(|r| r.to_vec()).collect();
    sorted(f4_weights().iter().map(|w| pullback(w, &map)).collect())
}

/// Parameter of the trivial representation of `PGL2`: `diag(q, 1, q⁻¹)`.
pub fn trivial_so3_param(q: f64) -> SatakeClass {
    so3_class(UnramifiedValue::q_power(BigRational::one()), q)
}

pub fn so3_class(c: UnramifiedValue, q: f64) -> SatakeClass {
    SatakeClass::from_weights(Group::SO3, q, vec![c], &[vec![1], vec![0], vec![-1]])
}

/// `α_i(s) = q^{m_i/2}` for the subregular marking `m`.
pub fn subregular_param(d: &RootDatum) -> Result<Vec<ExactValue>> {
    Ok(subregular_marking(d)?
        .into_iter()
        .map(|m| ExactValue::q_power(BigRational::new(BigInt::from(m), BigInt::from(2))))
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct Thm44Map {
    pub input: [UnramifiedValue; 2],
    pub output: [UnramifiedValue; 2],
}

/// `(χ|·|^{1/2}, μ|·|^{1/2}) ↦ (χ⁻¹|·|^{3/2}, μ⁻¹|·|^{3/2})` evaluated at `ϖ`.
pub fn thm44_param_map(
    chi: &UnramifiedValue,
    mu: &UnramifiedValue,
    q: f64,
    force: bool,
) -> Result<Thm44Map> {
    if !force && !(chi.is_unitary(TOLERANCE) && mu.is_unitary(TOLERANCE)) {
        return Err(Error::NotUnitary);
    }
    let half = UnramifiedValue::q_power(BigRational::new((-1).into(), 2.into()));
    let three_halves = UnramifiedValue::q_power(BigRational::new((-3).into(), 2.into()));
    Ok(Thm44Map {
        input: [chi.mul(&half, q), mu.mul(&half, q)],
        output: [
            chi.inv().mul(&three_halves, q),
            mu.inv().mul(&three_halves, q),
        ],
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct T12Scalars {
    pub q: f64,
    #[serde(serialize_with = "serialize_complex")]
    pub t1: Complex64,
    pub t2: UnramifiedValue,
    /// Scalar by which the Hecke operator acts on the reference module: `q³`.
    pub reference: f64,
    pub t1_is_real: bool,
    /// `T1 < 2q²` when `T1` is real; vacuously true otherwise.
    pub t1_below_2q2: bool,
    pub t1_differs_from_reference: bool,
    pub t2_avoids_q2_q4: bool,
}

impl T12Scalars {
    pub fn all_hold(&self) -> bool {
        self.t1_below_2q2 && self.t1_differs_from_reference && self.t2_avoids_q2_q4
    }
}

fn serialize_complex<S: Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    UnramifiedValue::Numeric(*z).serialize(s)
}

/// `T1 = q²(χ⁻¹ + μ⁻¹) − q·χ⁻¹μ⁻¹` and `T2 = q⁻¹χμ` on the tempered parameter.
pub fn t1_t2_scalars(chi: &UnramifiedValue, mu: &UnramifiedValue, q: f64) -> T12Scalars {
    let (x, y) = (chi.to_complex(q), mu.to_complex(q));
    let t1 = (x.inv() + y.inv()) * (q * q) - (x * y).inv() * q;
    let t2 = UnramifiedValue::q_power(rat(-1)).mul(&chi.mul(mu, q), q);
    let scale = q * q * q;
    let t1_is_real = t1.im.abs() <= TOLERANCE * scale;
    let avoids = [-2i64, -4]
        .iter()
        .all(|&e| !t2.approx_eq(&UnramifiedValue::q_power(rat(e)), q, TOLERANCE));
    T12Scalars {
        q,
        t1,
        t2,
        reference: scale,
        t1_is_real,
        t1_below_2q2: !t1_is_real || t1.re < 2.0 * q * q - TOLERANCE * scale,
        t1_differs_from_reference: (t1 - Complex64::new(scale, 0.0)).norm() > TOLERANCE * scale,
        t2_avoids_q2_q4: avoids,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct So3Record {
    pub n: u32,
    /// Exponent of `|a/b|` inducing `τ_χ`.
    pub tau_exponent: String,
    /// `3/2 − n` in `f(cx) = χ(c)|c|^{3/2−n} f(x)`.
    pub sigma_exponent: String,
    pub jacquet_exponents: [u32; 2],
    /// `Some("sigma_chi")` when `χ` is unitary.
    pub lift: Option<String>,
}

pub fn so3_bookkeeping(n: u32, chi_unitary: bool) -> Result<So3Record> {
    if n < 2 {
        return Err(Error::InvalidArgument("n must be at least 2".into()));
    }
    let sigma = BigRational::new(3.into(), 2.into()) - rat(i64::from(n));
    Ok(So3Record {
        n,
        tau_exponent: "1/2".into(),
        sigma_exponent: rational_to_string(&sigma),
        jacquet_exponents: [1, n - 1],
        lift: chi_unitary.then(|| "sigma_chi".into()),
    })
}

/// Parses `"1/2"` or `"-3"` as an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<BigInt>().map_err(|_| bad())?,
            d.trim().parse::<BigInt>().map_err(|_| bad())?,
        ),
        None => (s.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let g = n.gcd(&d);
    let (n, d) = (n / &g, d / &g);
    Ok(if d.is_negative() {
        BigRational::new(-n, -d)
    } else {
        BigRational::new(n, d)
    })
}
