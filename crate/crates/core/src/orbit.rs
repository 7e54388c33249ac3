//! Breadth-first orbit enumeration on `N_D` over a prime field.
//!
//! Generators are stored as sparse matrices `M − I` acting on coordinate
//! digit vectors, so applying one touches only the coordinates it changes.
//! States are packed into `u64` keys (base-`q` digits, first coordinate most
//! significant, so numeric order is lexicographic order) when `q^width`
//! fits, and into byte strings otherwise. Each level expands the frontier in
//! chunks, sorts and deduplicates the candidates, and merge-joins them
//! against the sorted visited set; the result does not depend on the worker
//! count or on generator order.

use std::fmt::Debug;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::fts::{Fts, FtsVector};
use crate::jordan::JordanElement;
use crate::linalg::{mat3_diag, mat3_elementary, mat3_identity, Echelon};
use crate::par::Workers;

pub trait StateKey: Ord + Clone + Send + Sync + Debug + 'static {
    fn pack(digits: &[u32], q: u32) -> Self;
    fn unpack(&self, q: u32, out: &mut [u32]);

    /// Key of `digits` after replacing the listed coordinates.
    fn with_changes(
        &self,
        digits: &[u32],
        changes: &[(usize, u32)],
        q: u32,
        _pows: &[u64],
    ) -> Self {
        let mut d = digits.to_vec();
        for &(i, v) in changes {
            d[i] = v;
        }
        Self::pack(&d, q)
    }

    fn sort_dedup(v: &mut Vec<Self>) {
        v.sort_unstable();
        v.dedup();
    }
}

impl StateKey for u64 {
    fn pack(digits: &[u32], q: u32) -> Self {
        digits.iter().fold(0u64, |k, &d| k * q as u64 + d as u64)
    }

    fn unpack(&self, q: u32, out: &mut [u32]) {
        let mut k = *self;
        for d in out.iter_mut().rev() {
            *d = (k % q as u64) as u32;
            k /= q as u64;
        }
    }

    fn with_changes(
        &self,
        digits: &[u32],
        changes: &[(usize, u32)],
        _q: u32,
        pows: &[u64],
    ) -> Self {
        changes.iter().fold(*self, |k, &(i, v)| {
            k - digits[i] as u64 * pows[i] + v as u64 * pows[i]
        })
    }

    fn sort_dedup(v: &mut Vec<Self>) {
        radsort::sort(v);
        v.dedup();
    }
}

/// Four big-endian bytes per coordinate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ByteKey(Box<[u8]>);

impl StateKey for ByteKey {
    fn pack(digits: &[u32], _q: u32) -> Self {
        ByteKey(digits.iter().flat_map(|d| d.to_be_bytes()).collect())
    }

    fn unpack(&self, _q: u32, out: &mut [u32]) {
        for (d, b) in out.iter_mut().zip(self.0.chunks_exact(4)) {
            *d = u32::from_be_bytes([b[0], b[1], b[2], b[3]]);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorLabel {
    UPlus { basis: usize, c: u32 },
    UMinus { basis: usize, c: u32 },
    Levi(String),
}

/// A linear map `v ↦ v + N·v` with `N` stored row by row.
#[derive(Clone, Debug)]
pub struct LinearGenerator {
    pub label: GeneratorLabel,
    rows: Vec<(usize, Vec<(usize, u32)>)>,
}

impl LinearGenerator {
    pub fn nonzeros(&self) -> usize {
        self.rows.iter().map(|(_, r)| r.len()).sum()
    }
}

#[derive(Clone, Debug)]
pub struct GeneratorSet {
    q: u32,
    width: usize,
    gens: Vec<LinearGenerator>,
}

type VecMap<'a> = Box<dyn Fn(&FtsVector<u32>) -> Result<FtsVector<u32>> + 'a>;

impl GeneratorSet {
    /// Tabulates each map on the coordinate basis and checks that it is
    /// invertible and preserves the pairing.
    pub fn from_maps(
        fts: &Fts<PrimeField>,
        maps: Vec<(GeneratorLabel, VecMap<'_>)>,
    ) -> Result<Self> {
        let k = fts.field();
        let w = fts.width();
        let basis: Vec<FtsVector<u32>> = (0..w)
            .map(|i| fts.from_coords(&(0..w).map(|j| u32::from(i == j)).collect::<Vec<_>>()))
            .collect::<Result<_>>()?;
        let gram: Vec<Vec<u32>> = basis
            .iter()
            .map(|x| basis.iter().map(|y| fts.pairing(x, y)).collect())
            .collect();
        let mut gens = Vec::with_capacity(maps.len());
        for (label, f) in maps {
            // cols[j] = coordinates of f(e_j)
            let cols: Vec<Vec<u32>> = basis
                .iter()
                .map(|e| f(e).map(|v| fts.coords(&v)))
                .collect::<Result<_>>()?;
            if Echelon::new(k, w, cols.iter().cloned()).rank() != w {
                return Err(Error::InvalidArgument(format!(
                    "generator {label:?} is not invertible"
                )));
            }
            for i in 0..w {
                for j in 0..w {
                    let mut s = 0u32;
                    for (a, ca) in cols[i].iter().enumerate() {
                        if *ca == 0 {
                            continue;
                        }
                        for (b, cb) in cols[j].iter().enumerate() {
                            s = k.add(&s, &k.mul(&k.mul(ca, cb), &gram[a][b]));
                        }
                    }
                    if s != gram[i][j] {
                        return Err(Error::InvalidArgument(format!(
                            "generator {label:?} does not preserve the pairing"
                        )));
                    }
                }
            }
            let mut rows = Vec::new();
            for out in 0..w {
                let row: Vec<(usize, u32)> = (0..w)
                    .filter_map(|j| {
                        let m = if out == j {
                            k.sub(&cols[j][out], &1)
                        } else {
                            cols[j][out]
                        };
                        (m != 0).then_some((j, m))
                    })
                    .collect();
                if !row.is_empty() {
                    rows.push((out, row));
                }
            }
            gens.push(LinearGenerator { label, rows });
        }
        Ok(Self {
            q: k.modulus() as u32,
            width: w,
            gens,
        })
    }

    /// `u_plus(c·eᵢ)` and `u_minus(c·eᵢ)` for every Jordan basis element.
    /// With `full_root_subgroups = false` only `c = 1` is used; since
    /// `u(c·eᵢ) = u(eᵢ)^c` the generated group is the same.
    pub fn unipotent(fts: &Fts<PrimeField>, full_root_subgroups: bool) -> Result<Self> {
        let mut maps: Vec<(GeneratorLabel, VecMap<'_>)> = Vec::new();
        for (basis, c, u) in root_elements(fts, full_root_subgroups) {
            let u2 = u.clone();
            maps.push((
                GeneratorLabel::UPlus { basis, c },
                Box::new(move |v| fts.u_plus(&u, v)),
            ));
            maps.push((
                GeneratorLabel::UMinus { basis, c },
                Box::new(move |v| fts.u_minus(&u2, v)),
            ));
        }
        Self::from_maps(fts, maps)
    }

    /// `u_plus(eᵢ)` together with Levi generators of the parabolic `Q_D`.
    pub fn parabolic(fts: &Fts<PrimeField>) -> Result<Self> {
        let k = *fts.field();
        let gamma = primitive_root(&k);
        let mut maps: Vec<(GeneratorLabel, VecMap<'_>)> = Vec::new();
        for (basis, c, u) in root_elements(fts, false) {
            maps.push((
                GeneratorLabel::UPlus { basis, c },
                Box::new(move |v| fts.u_plus(&u, v)),
            ));
        }
        let id = mat3_identity(&k);
        let mut levis = Vec::new();
        let elementary: Vec<_> = (0..3)
            .flat_map(|i| (0..3).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| {
                (
                    format!("E{}{}", i + 1, j + 1),
                    mat3_elementary(&k, i, j, &1),
                )
            })
            .collect();
        match fts.jordan().comp_dim().get() {
            1 => {
                for (name, g) in &elementary {
                    levis.push((format!("gl3 {name}"), fts.levi_gl3(g)?));
                }
                levis.push((
                    format!("gl3 diag({gamma},1,1)"),
                    fts.levi_gl3(&mat3_diag(&k, [gamma, 1, 1]))?,
                ));
            }
            2 => {
                for (name, g) in &elementary {
                    levis.push((format!("left {name}"), fts.levi_pair(g, &id)?));
                    levis.push((format!("right {name}"), fts.levi_pair(&id, g)?));
                }
                let g = mat3_diag(&k, [1, gamma, gamma]);
                let h = mat3_diag(&k, [gamma, 1, 1]);
                levis.push((format!("det twist {gamma}"), fts.levi_pair(&g, &h)?));
            }
            d => return Err(Error::UnsupportedAlgebraDim(d)),
        }
        levis.push((format!("torus {gamma}"), fts.levi_torus(&gamma)?));
        for (name, l) in levis {
            maps.push((
                GeneratorLabel::Levi(name),
                Box::new(move |v| fts.levi_action(&l, v)),
            ));
        }
        Self::from_maps(fts, maps)
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[LinearGenerator] {
        &self.gens
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// The same generators in a seeded random order.
    pub fn shuffled(&self, seed: u64) -> Self {
        let mut gens = self.gens.clone();
        gens.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        Self {
            gens,
            ..self.clone()
        }
    }

    pub fn apply(&self, g: usize, digits: &[u32]) -> Vec<u32> {
        let mut out = digits.to_vec();
        let mut changes = Vec::new();
        self.changes(&self.gens[g], digits, &mut changes);
        for (i, v) in changes {
            out[i] = v;
        }
        out
    }

    #[inline]
    fn changes(&self, g: &LinearGenerator, d: &[u32], out: &mut Vec<(usize, u32)>) {
        let q = self.q as u64;
        out.clear();
        for (row, terms) in &g.rows {
            let mut s = d[*row] as u64;
            if q < 1 << 16 {
                for &(j, c) in terms {
                    s += c as u64 * d[j] as u64;
                }
                s %= q;
            } else {
                for &(j, c) in terms {
                    s = (s + c as u64 * d[j] as u64) % q;
                }
            }
            if s as u32 != d[*row] {
                out.push((*row, s as u32));
            }
        }
    }
}

fn root_elements(
    fts: &Fts<PrimeField>,
    all_scalars: bool,
) -> Vec<(usize, u32, JordanElement<u32>)> {
    let j = fts.jordan();
    let q = fts.field().modulus() as u32;
    let scalars: Vec<u32> = if all_scalars {
        (1..q).collect()
    } else {
        vec![1]
    };
    (0..j.dim())
        .flat_map(|i| {
            scalars
                .iter()
                .map(move |&c| (i, c, j.scale(&c, &j.basis(i))))
        })
        .collect()
}

/// Smallest generator of `F_q^*`.
pub fn primitive_root(k: &PrimeField) -> u32 {
    let q = k.modulus();
    let n = q - 1;
    let mut factors = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            factors.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (1..q as u32)
        .find(|&g| factors.iter().all(|f| k.pow(&g, n / f) != 1))
        .expect("prime fields have primitive roots")
}

#[derive(Clone, Debug)]
pub struct BfsOptions {
    /// Maximum number of visited states.
    pub cap: usize,
    /// Frontier states expanded per batch.
    pub chunk: usize,
    pub workers: Workers,
}

impl Default for BfsOptions {
    fn default() -> Self {
        Self {
            cap: 50_000_000,
            chunk: 1 << 18,
            workers: Workers::sequential(),
        }
    }
}

/// Sorted elements of `a` not in `b`; both inputs sorted and deduplicated.
/// Gallops through `b`, so the cost is `O(|a| log(|b| / |a|))` when `a` is small.
fn difference<K: Ord + Clone>(a: Vec<K>, b: &[K]) -> Vec<K> {
    let mut out = Vec::with_capacity(a.len());
    let mut rest = b;
    for x in a {
        let mut step = 1;
        while step < rest.len() && rest[step] < x {
            step *= 2;
        }
        let end = (step + 1).min(rest.len());
        match rest[..end].binary_search(&x) {
            Ok(i) => rest = &rest[i + 1..],
            Err(i) => {
                rest = &rest[i..];
                out.push(x);
            }
        }
    }
    out
}

fn merge<K: Ord + Clone>(a: &[K], b: &[K]) -> Vec<K> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i].clone());
            i += 1;
        } else {
            out.push(b[j].clone());
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Orbit of `seeds` under the generators, as sorted keys.
pub fn bfs<K: StateKey>(
    gens: &GeneratorSet,
    seeds: &[Vec<u32>],
    opts: &BfsOptions,
) -> Result<Vec<K>> {
    let (q, w) = (gens.q, gens.width);
    let pows: Vec<u64> = (0..w)
        .map(|i| (q as u64).wrapping_pow((w - 1 - i) as u32))
        .collect();
    let mut frontier: Vec<K> = seeds.iter().map(|s| K::pack(s, q)).collect();
    K::sort_dedup(&mut frontier);
    let mut visited = frontier.clone();
    let sub = match opts.workers.count() {
        1 => opts.chunk.max(1),
        n => (opts.chunk / n / 4).max(256),
    };
    while !frontier.is_empty() {
        let mut fresh: Vec<K> = Vec::new();
        let mut found = 0usize;
        for batch in frontier.chunks(opts.chunk.max(1)) {
            let parts = opts.workers.map_chunks(batch, sub, |states| {
                let mut d = vec![0u32; w];
                let mut ch = Vec::new();
                let mut out = Vec::with_capacity(states.len() * gens.gens.len());
                for s in states {
                    s.unpack(q, &mut d);
                    for g in &gens.gens {
                        gens.changes(g, &d, &mut ch);
                        if !ch.is_empty() {
                            out.push(s.with_changes(&d, &ch, q, &pows));
                        }
                    }
                }
                K::sort_dedup(&mut out);
                out
            });
            let cand: Vec<K> = if parts.len() == 1 {
                parts.into_iter().next().unwrap_or_default()
            } else {
                let mut c: Vec<K> = parts.into_iter().flatten().collect();
                K::sort_dedup(&mut c);
                c
            };
            let cand = difference(cand, &visited);
            found += cand.len();
            fresh.extend(cand);
            if found > 4 * opts.cap {
                return Err(Error::FrontierOverflow { cap: opts.cap });
            }
        }
        K::sort_dedup(&mut fresh);
        if visited.len() + fresh.len() > opts.cap {
            return Err(Error::FrontierOverflow { cap: opts.cap });
        }
        visited = merge(&visited, &fresh);
        frontier = fresh;
    }
    Ok(visited)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitKeys {
    Packed(Vec<u64>),
    Bytes(Vec<ByteKey>),
}

/// A set of vectors in `N_D(F_q)`, sorted by packed coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSet {
    pub q: u32,
    pub width: usize,
    pub keys: OrbitKeys,
}

pub fn fits_u64(q: u32, width: usize) -> bool {
    (q as u64).checked_pow(width as u32).is_some()
}

impl OrbitSet {
    pub fn generate(gens: &GeneratorSet, seeds: &[Vec<u32>], opts: &BfsOptions) -> Result<Self> {
        let keys = if fits_u64(gens.q, gens.width) {
            OrbitKeys::Packed(bfs::<u64>(gens, seeds, opts)?)
        } else {
            OrbitKeys::Bytes(bfs::<ByteKey>(gens, seeds, opts)?)
        };
        Ok(Self {
            q: gens.q,
            width: gens.width,
            keys,
        })
    }

    pub fn len(&self) -> usize {
        match &self.keys {
            OrbitKeys::Packed(v) => v.len(),
            OrbitKeys::Bytes(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, digits: &[u32]) -> bool {
        match &self.keys {
            OrbitKeys::Packed(v) => v.binary_search(&u64::pack(digits, self.q)).is_ok(),
            OrbitKeys::Bytes(v) => v.binary_search(&ByteKey::pack(digits, self.q)).is_ok(),
        }
    }

    /// Coordinate vectors in key order.
    pub fn digits(&self) -> Vec<Vec<u32>> {
        let mut d = vec![0u32; self.width];
        let mut unpack = |k: &dyn Fn(&mut [u32])| {
            k(&mut d);
            d.clone()
        };
        match &self.keys {
            OrbitKeys::Packed(v) => v.iter().map(|k| unpack(&|o| k.unpack(self.q, o))).collect(),
            OrbitKeys::Bytes(v) => v.iter().map(|k| unpack(&|o| k.unpack(self.q, o))).collect(),
        }
    }

    fn is_subset_of(&self, other: &OrbitSet) -> bool {
        match (&self.keys, &other.keys) {
            (OrbitKeys::Packed(a), OrbitKeys::Packed(b)) => difference(a.clone(), b).is_empty(),
            (OrbitKeys::Bytes(a), OrbitKeys::Bytes(b)) => difference(a.clone(), b).is_empty(),
            _ => false,
        }
    }

    fn intersects(&self, other: &OrbitSet) -> bool {
        match (&self.keys, &other.keys) {
            (OrbitKeys::Packed(a), OrbitKeys::Packed(b)) => {
                difference(a.clone(), b).len() != a.len()
            }
            (OrbitKeys::Bytes(a), OrbitKeys::Bytes(b)) => difference(a.clone(), b).len() != a.len(),
            _ => true,
        }
    }
}

fn prime_fts(dim_d: usize, q: u64) -> Result<Fts<PrimeField>> {
    if !matches!(dim_d, 1 | 2) {
        return Err(Error::UnsupportedAlgebraDim(dim_d));
    }
    let k = PrimeField::new(q)?;
    if q < 5 {
        return Err(Error::BadCharacteristic(q));
    }
    Fts::new(k, dim_d)
}

/// `Ω`: the orbit of `v₁ = (1,0,0,0)` under the group generated by both
/// unipotent radicals.
pub fn omega_bfs(dim_d: usize, q: u64, opts: &BfsOptions) -> Result<OrbitSet> {
    let fts = prime_fts(dim_d, q)?;
    let gens = GeneratorSet::unipotent(&fts, false)?;
    let mut v1 = vec![0u32; fts.width()];
    v1[0] = 1;
    OrbitSet::generate(&gens, &[v1], opts)
}

/// First nonzero traceless singular element in lexicographic coordinate order.
pub fn first_singular(fts: &Fts<PrimeField>) -> Option<JordanElement<u32>> {
    let j = fts.jordan();
    let q = fts.field().modulus() as u32;
    let n = j.dim();
    let total = (q as u64).checked_pow(n as u32)?;
    (1..total).find_map(|i| {
        let mut d = vec![0u32; n];
        i.unpack(q, &mut d);
        let x = j.from_coords(&d).ok()?;
        (fts.field().is_zero(&j.jtrace(&x)) && j.is_zero(&j.jmatrix_square(&x))).then_some(x)
    })
}

/// Representatives `v₁ = (1,0,0,0)`, `v₂ = (0,x,0,0)`, `v₃ = (0,0,x,0)`,
/// `v₄ = (0,0,0,1)`.
pub fn qd_representatives(fts: &Fts<PrimeField>) -> Result<[FtsVector<u32>; 4]> {
    let j = fts.jordan();
    let x =
        first_singular(fts).ok_or_else(|| Error::InvalidArgument("no singular element".into()))?;
    Ok([
        fts.vector(1, j.zero(), j.zero(), 0),
        fts.vector(0, x.clone(), j.zero(), 0),
        fts.vector(0, j.zero(), x, 0),
        fts.vector(0, j.zero(), j.zero(), 1),
    ])
}

/// Splits `Ω` into the `Q_D`-orbits of the four representatives.
pub fn qd_orbit_partition(
    omega: &OrbitSet,
    dim_d: usize,
    q: u64,
    opts: &BfsOptions,
) -> Result<Vec<OrbitSet>> {
    let fts = prime_fts(dim_d, q)?;
    let gens = GeneratorSet::parabolic(&fts)?;
    let reps = qd_representatives(&fts)?;
    let classes: Vec<OrbitSet> = reps
        .iter()
        .map(|r| OrbitSet::generate(&gens, &[fts.coords(r)], opts))
        .collect::<Result<_>>()?;
    for (i, c) in classes.iter().enumerate() {
        if !c.is_subset_of(omega) {
            return Err(Error::PartitionMismatch(format!(
                "class of v{} leaves Ω",
                i + 1
            )));
        }
        for (j, d) in classes.iter().enumerate().skip(i + 1) {
            if c.intersects(d) {
                return Err(Error::PartitionMismatch(format!(
                    "classes of v{} and v{} overlap",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let total: usize = classes.iter().map(OrbitSet::len).sum();
    if total != omega.len() {
        return Err(Error::PartitionMismatch(format!(
            "classes cover {total} of {} points",
            omega.len()
        )));
    }
    Ok(classes)
}

/// Whether `(0, y, z, 0)` lies in `Ω`.
pub fn nn_membership(
    fts: &Fts<PrimeField>,
    y: &JordanElement<u32>,
    z: &JordanElement<u32>,
    omega: &OrbitSet,
) -> bool {
    omega.contains(&fts.coords(&fts.vector(0, y.clone(), z.clone(), 0)))
}

/// `(q−1)(q+1)(q²+1)(q³+1)`: nonzero points on the cone over the Lagrangian
/// Grassmannian of a 6-dimensional symplectic space.
pub fn omega_size_dim1(q: u64) -> u64 {
    (q - 1) * (q + 1) * (q * q + 1) * (q * q * q + 1)
}

/// `(q−1)·[6 choose 3]_q`: nonzero decomposable trivectors in `∧³F⁶`.
pub fn omega_size_dim2(q: u64) -> u64 {
    (q - 1) * gaussian_binomial(6, 3, q)
}

pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> u64 {
    let num: u64 = (0..k).map(|i| q.pow(n - i) - 1).product();
    let den: u64 = (1..=k).map(|i| q.pow(i) - 1).product();
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_round_trip_in_lexicographic_order() {
        let d = [3u32, 0, 4, 1];
        let k = u64::pack(&d, 5);
        let mut out = [0u32; 4];
        k.unpack(5, &mut out);
        assert_eq!(out, d);
        assert!(u64::pack(&[1, 0, 0, 0], 5) > u64::pack(&[0, 4, 4, 4], 5));
        let b = ByteKey::pack(&d, 5);
        b.unpack(5, &mut out);
        assert_eq!(out, d);
        assert!(ByteKey::pack(&[1, 0], 300) > ByteKey::pack(&[0, 299], 300));
        let pows = [125, 25, 5, 1];
        assert_eq!(
            k.with_changes(&d, &[(1, 2), (3, 0)], 5, &pows),
            u64::pack(&[3, 2, 4, 0], 5)
        );
    }

    #[test]
    fn closed_forms() {
        assert_eq!(omega_size_dim1(5), 4 * 6 * 26 * 126);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(omega_size_dim2(2), 1395);
        assert!(fits_u64(5, 20) && !fits_u64(11, 20));
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(&PrimeField::new(5).unwrap()), 2);
        assert_eq!(primitive_root(&PrimeField::new(7).unwrap()), 3);
        assert_eq!(primitive_root(&PrimeField::new(2).unwrap()), 1);
    }

    #[test]
    fn merge_and_difference() {
        assert_eq!(difference(vec![1, 3, 5, 7], &[3, 4, 7]), vec![1, 5]);
        assert_eq!(merge(&[1, 4], &[2, 3, 9]), vec![1, 2, 3, 4, 9]);
        assert_eq!(
            difference(vec![0, 50, 999], &(1..1000).collect::<Vec<_>>()),
            vec![0]
        );
        assert_eq!(difference(vec![5u32], &[]), vec![5]);
    }

    proptest::proptest! {
        #[test]
        fn difference_matches_filter(mut a in proptest::collection::vec(0u16..300, 0..60), mut b in proptest::collection::vec(0u16..300, 0..200)) {
            a.sort_unstable();
            a.dedup();
            b.sort_unstable();
            b.dedup();
            let naive: Vec<u16> = a.iter().copied().filter(|x| !b.contains(x)).collect();
            proptest::prop_assert_eq!(difference(a, &b), naive);
        }
    }

    #[test]
    fn v4_class_is_the_top_line() {
        let opts = BfsOptions::default();
        let omega = omega_bfs(1, 5, &opts).unwrap();
        let classes = qd_orbit_partition(&omega, 1, 5, &opts).unwrap();
        let top: Vec<Vec<u32>> = (1..5)
            .map(|c| {
                let mut v = vec![0; 14];
                v[13] = c;
                v
            })
            .collect();
        assert_eq!(classes[3].digits(), top);
    }
}
