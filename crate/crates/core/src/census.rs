//! Exhaustive finite-field censuses.
//!
//! Every suite enumerates states in lexicographic order of their coordinate
//! digits, splits the index range into chunks for [`Workers`] and sums the
//! per-chunk counts in chunk order, so results do not depend on the worker
//! count. Predicates use only squares and products, never division, except
//! in the amber suite which needs characteristic at least 5.

use std::ops::AddAssign;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::composition::{CompositionAlgebra, CompositionElement};
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::fts::Fts;
use crate::jordan::{JordanAlgebra, JordanElement};
use crate::linalg::rank;
use crate::orbit::{
    omega_bfs, omega_size_dim1, omega_size_dim2, qd_orbit_partition, BfsOptions, OrbitKeys,
    OrbitSet, StateKey,
};
use crate::par::Workers;
use crate::report::CensusReport;

/// Largest state space enumerated exhaustively.
pub const STATE_LIMIT: u64 = 1 << 32;
/// Seed for every sampled suite.
pub const SAMPLE_SEED: u64 = 0x5eed_0c7a;

const CHUNK: u64 = 1 << 10;

#[derive(Clone, Debug, Default)]
pub struct CensusConfig {
    /// Also run the suites with runtimes in minutes.
    pub slow: bool,
    pub workers: Workers,
    /// Record wall-clock time in reports.
    pub timed: bool,
}

fn start(cfg_timed: bool) -> Option<Instant> {
    cfg_timed.then(Instant::now)
}

fn states(q: u64, n: usize) -> Result<u64> {
    q.checked_pow(n as u32)
        .filter(|&s| s <= STATE_LIMIT)
        .ok_or_else(|| Error::TooLarge(format!("{q}^{n} states")))
}

/// Big-endian base-`q` digits of `i`.
fn digits(mut i: u64, q: u64, out: &mut [u32]) {
    for d in out.iter_mut().rev() {
        *d = (i % q) as u32;
        i /= q;
    }
}

/// Split quadratic form of rank `m`: hyperbolic pairs, plus `x²` when `m` is odd.
fn split_form(k: &PrimeField, x: &[u32]) -> u32 {
    let mut s = 0;
    for pair in x.chunks(2) {
        let t = if let [a, b] = pair {
            k.mul(a, b)
        } else {
            k.mul(&pair[0], &pair[0])
        };
        s = k.add(&s, &t);
    }
    s
}

/// `q^{2k−1} + q^k − q^{k−1} − 1` for `m = 2k`, `q^{2k} − 1` for `m = 2k+1`.
pub fn quadric_null_closed_form(m: u32, q: u64) -> u64 {
    let k = m / 2;
    if m == 0 {
        0
    } else if m.is_multiple_of(2) {
        q.pow(2 * k - 1) + q.pow(k) - q.pow(k - 1) - 1
    } else {
        q.pow(2 * k) - 1
    }
}

/// Nonzero null vectors of the split form of rank `m` over `F_q`, by
/// enumeration.
pub fn quadric_null_count(m: usize, q: u64, workers: &Workers) -> Result<u64> {
    let k = PrimeField::new(q)?;
    if m == 0 {
        return Err(Error::InvalidArgument("rank must be positive".into()));
    }
    let total = states(q, m)?;
    let parts = workers.map_ranges(total, CHUNK * 64, |r| {
        let mut x = vec![0u32; m];
        r.filter(|&i| {
            digits(i, q, &mut x);
            i != 0 && split_form(&k, &x) == 0
        })
        .count() as u64
    });
    Ok(parts.into_iter().sum())
}

pub fn quadric_census(
    q: u64,
    max_rank: usize,
    workers: &Workers,
    timed: bool,
) -> Result<CensusReport> {
    let t0 = start(timed);
    let mut rep = CensusReport::new("quadric")
        .param("q", q)
        .param("max_rank", max_rank);
    for m in 1..=max_rank {
        let n = quadric_null_count(m, q, workers)?;
        rep.count(&format!("rank_{m}"), n);
        rep.check_eq(
            &format!("null vectors, rank {m}"),
            quadric_null_closed_form(m as u32, q),
            "split quadric closed form",
            n,
        );
    }
    let k = PrimeField::new(q)?;
    let o = CompositionAlgebra::new(k, 8)?;
    let table = octonion_table(&o)?;
    let traceless_null = table
        .iter()
        .filter(|e| e.anti && e.sq_zero && !o.is_zero(&e.e))
        .count();
    rep.check_eq(
        "traceless octonions with zero norm",
        quadric_null_closed_form(7, q),
        "null cone of the norm on traceless octonions (split rank 7)",
        traceless_null,
    );
    Ok(rep.timed(t0))
}

struct Oct {
    e: CompositionElement<u32>,
    /// `x̄ = −x`.
    anti: bool,
    sq_zero: bool,
}

fn octonion_table(o: &CompositionAlgebra<PrimeField>) -> Result<Vec<Oct>> {
    let q = o.field().modulus();
    let n = states(q, 8)?;
    let mut d = [0u32; 8];
    (0..n)
        .map(|i| {
            digits(i, q, &mut d);
            let e = o.from_coords(&d)?;
            let anti = o.conj(&e) == o.neg(&e);
            let sq_zero = o.is_zero(&o.mul(&e, &e));
            Ok(Oct { e, anti, sq_zero })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Tally {
    states: u64,
    anti_states: u64,
    solutions: u64,
    aa: u64,
    bb: u64,
    span3: u64,
    zero: u64,
    counterexamples: u64,
}

impl AddAssign for Tally {
    fn add_assign(&mut self, o: Self) {
        self.states += o.states;
        self.anti_states += o.anti_states;
        self.solutions += o.solutions;
        self.aa += o.aa;
        self.bb += o.bb;
        self.span3 += o.span3;
        self.zero += o.zero;
        self.counterexamples += o.counterexamples;
    }
}

impl Tally {
    fn record(&mut self, matrix: bool, components: bool, span: usize) {
        self.anti_states += 1;
        if matrix != components {
            self.counterexamples += 1;
        }
        if matrix && components {
            match span {
                0 => self.zero += 1,
                1 => self.bb += 1,
                2 => self.aa += 1,
                _ => self.span3 += 1,
            }
            if span > 0 {
                self.solutions += 1;
            }
        }
    }
}

fn sum_tallies(parts: Vec<Tally>) -> Tally {
    let mut t = Tally::default();
    for p in parts {
        t += p;
    }
    t
}

fn off_diagonal_matrix(
    x: &CompositionElement<u32>,
    y: &CompositionElement<u32>,
    z: &CompositionElement<u32>,
) -> JordanElement<u32> {
    JordanElement {
        diag: [0, 0, 0],
        off: [x.clone(), y.clone(), z.clone()],
    }
}

fn span_dim(k: &PrimeField, elems: &[&CompositionElement<u32>]) -> usize {
    rank(k, 8, elems.iter().map(|e| e.coords().to_vec()))
}

const PAIR_QUOTE: &str = "y^2 = z^2 = yz = 0 for traceless y, z, equivalent to n^2 = 0";
const ORBIT_COUNT: &str =
    "single G2 x GL orbits; |G2(F_q)/P| = (q^6-1)/(q-1) null lines and null planes";

/// Pairs of octonions: `n² = 0` for the matrix with `y` at (1,3) and `z` at
/// (2,3) against the component equations, over all `q^16` pairs.
pub fn pair_census(q: u64, workers: &Workers, timed: bool) -> Result<CensusReport> {
    if q > 3 {
        return Err(Error::TooLarge(format!("pair census at q = {q}")));
    }
    let t0 = start(timed);
    let k = PrimeField::new(q)?;
    let o = CompositionAlgebra::new(k, 8)?;
    let j = JordanAlgebra::new(k, 8)?;
    let table = octonion_table(&o)?;
    let n = table.len() as u64;
    let anti: Vec<usize> = (0..table.len()).filter(|&i| table[i].anti).collect();
    let zero = o.zero();
    let parts = workers.map_ranges(n, 8, |r| {
        let mut t = Tally::default();
        for iy in r {
            let y = &table[iy as usize];
            t.states += n;
            if !y.anti {
                continue;
            }
            for &iz in &anti {
                let z = &table[iz];
                let m = j.jmatrix_square(&off_diagonal_matrix(&zero, &y.e, &z.e));
                let matrix = j.is_zero(&m);
                let comp = y.sq_zero && z.sq_zero && o.is_zero(&o.mul(&y.e, &z.e));
                let span = if matrix && comp {
                    span_dim(&k, &[&y.e, &z.e])
                } else {
                    3
                };
                t.record(matrix, comp, span);
            }
        }
        t
    });
    let full = sum_tallies(parts);

    // Null traceless singletons first, then pairs among them.
    let nulls: Vec<&Oct> = table.iter().filter(|e| e.anti && e.sq_zero).collect();
    let mut pruned = Tally::default();
    for y in &nulls {
        for z in &nulls {
            if o.is_zero(&o.mul(&y.e, &z.e)) {
                pruned.record(true, true, span_dim(&k, &[&y.e, &z.e]));
            }
        }
    }

    let mut rep = CensusReport::new("pairs").param("q", q).param("dimD", 8);
    rep.count("pairs", full.states);
    rep.count("traceless_pairs", full.anti_states);
    rep.count("solutions", full.solutions);
    rep.count("AA", full.aa);
    rep.count("BB", full.bb);
    rep.check_eq("pairs enumerated", q.pow(16), "q^16", full.states);
    rep.check_eq("counterexamples", 0, PAIR_QUOTE, full.counterexamples);
    rep.check_eq(
        "AA + BB",
        full.solutions,
        "strata partition the nonzero solutions",
        full.aa + full.bb,
    );
    rep.check_eq("span > 2", 0, "spans of pairs", full.span3);
    rep.check_eq(
        "pruned solutions",
        full.solutions,
        "direct enumeration",
        pruned.solutions,
    );
    rep.check_eq("pruned AA", full.aa, "direct enumeration", pruned.aa);
    let lines = (q.pow(6) - 1) / (q - 1);
    rep.check_eq("BB", lines * (q * q - 1), ORBIT_COUNT, full.bb);
    rep.check_eq(
        "AA",
        lines * (q * q - 1) * (q * q - q),
        ORBIT_COUNT,
        full.aa,
    );
    Ok(rep.timed(t0))
}

/// Triples of octonions: `n² = 0` for the matrix with `x, y, z` above the
/// diagonal against the six component equations, and the span of every
/// solution. Exhaustive for `q = 2`; for larger `q`, `samples` random triples
/// (half drawn from null traceless elements).
pub fn triple_census(
    q: u64,
    samples: Option<u64>,
    workers: &Workers,
    timed: bool,
) -> Result<CensusReport> {
    if samples.is_none() && q > 2 {
        return Err(Error::TooLarge(format!(
            "exhaustive triple census at q = {q}"
        )));
    }
    let t0 = start(timed);
    let k = PrimeField::new(q)?;
    let o = CompositionAlgebra::new(k, 8)?;
    let j = JordanAlgebra::new(k, 8)?;
    let table = octonion_table(&o)?;
    let n = table.len() as u64;
    let anti: Vec<usize> = (0..table.len()).filter(|&i| table[i].anti).collect();
    let nulls: Vec<usize> = anti.iter().copied().filter(|&i| table[i].sq_zero).collect();
    let eval = |t: &mut Tally, ix: usize, iy: usize, iz: usize| {
        let (x, y, z) = (&table[ix], &table[iy], &table[iz]);
        if !(x.anti && y.anti && z.anti) {
            return;
        }
        let m = j.jmatrix_square(&off_diagonal_matrix(&x.e, &y.e, &z.e));
        let matrix = j.is_zero(&m);
        let comp = x.sq_zero
            && y.sq_zero
            && z.sq_zero
            && [(&x.e, &y.e), (&x.e, &z.e), (&y.e, &z.e)]
                .iter()
                .all(|(a, b)| o.is_zero(&o.mul(a, b)));
        let span = if matrix && comp {
            span_dim(&k, &[&x.e, &y.e, &z.e])
        } else {
            4
        };
        t.record(matrix, comp, span);
    };
    let tally = match samples {
        None => sum_tallies(workers.map_ranges(n, 4, |r| {
            let mut t = Tally::default();
            for ix in r {
                t.states += n * n;
                if !table[ix as usize].anti {
                    continue;
                }
                for &iy in &anti {
                    for &iz in &anti {
                        eval(&mut t, ix as usize, iy, iz);
                    }
                }
            }
            t
        })),
        Some(s) => sum_tallies(workers.map_ranges(s, CHUNK * 16, |r| {
            let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ r.start);
            let mut t = Tally::default();
            for i in r {
                let pool = if i % 2 == 0 { &anti } else { &nulls };
                let mut pick = || pool[rng.gen_range(0..pool.len())];
                let (a, b, c) = (pick(), pick(), pick());
                t.states += 1;
                eval(&mut t, a, b, c);
            }
            t
        })),
    };
    let mut rep = CensusReport::new("triples").param("q", q).param("dimD", 8);
    if let Some(s) = samples {
        rep = rep.param("samples", s).param("seed", SAMPLE_SEED);
        rep.exhaustive = false;
    }
    rep.count("triples", tally.states);
    rep.count("traceless_triples", tally.anti_states);
    rep.count("solutions", tally.solutions);
    rep.count("AA", tally.aa);
    rep.count("BB", tally.bb);
    rep.count("span3", tally.span3);
    rep.check_eq(
        "counterexamples",
        0,
        "x^2 = y^2 = z^2 = xy = xz = yz = 0 for traceless x, y, z, equivalent to n^2 = 0",
        tally.counterexamples,
    );
    rep.check_eq(
        "solutions with span 3",
        0,
        "x, y and z are linearly dependent",
        tally.span3,
    );
    rep.check_eq(
        "AA + BB",
        tally.solutions,
        "AA and BB cover the solutions",
        tally.aa + tally.bb,
    );
    rep.check(
        "solutions found",
        "> 0",
        "null traceless triples exist",
        tally.solutions,
        tally.solutions > 0,
    );
    if samples.is_none() {
        let lines = (q.pow(6) - 1) / (q - 1);
        let q3 = q.pow(3);
        rep.check_eq("triples enumerated", q.pow(24), "q^24", tally.states);
        rep.check_eq("BB", lines * (q3 - 1), ORBIT_COUNT, tally.bb);
        rep.check_eq("AA", lines * (q3 - 1) * (q3 - q), ORBIT_COUNT, tally.aa);
    }
    Ok(rep.timed(t0))
}

fn traceless_elements(j: &JordanAlgebra<PrimeField>) -> Result<Vec<JordanElement<u32>>> {
    let q = j.field().modulus();
    let n = j.dim();
    let total = states(q, n)?;
    let mut d = vec![0u32; n];
    let mut out = Vec::new();
    for i in 0..total {
        digits(i, q, &mut d);
        if j.field().add(&j.field().add(&d[0], &d[1]), &d[2]) == 0 {
            out.push(j.from_coords(&d)?);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Image,
    Kernel,
    Neither,
}

fn normalized_line(k: &PrimeField, v: [u32; 3]) -> Option<[u32; 3]> {
    let lead = v.iter().find(|x| **x != 0)?;
    let inv = k.inv(lead).ok()?;
    Some(v.map(|x| k.mul(&x, &inv)))
}

/// Common image (column space) or common kernel (row space) of two
/// rank-one matrices.
fn family(k: &PrimeField, a: &[[u32; 3]; 3], b: &[[u32; 3]; 3]) -> Family {
    let col =
        |m: &[[u32; 3]; 3]| (0..3).find_map(|c| normalized_line(k, [m[0][c], m[1][c], m[2][c]]));
    let row = |m: &[[u32; 3]; 3]| (0..3).find_map(|r| normalized_line(k, m[r]));
    if col(a) == col(b) {
        Family::Image
    } else if row(a) == row(b) {
        Family::Kernel
    } else {
        Family::Neither
    }
}

fn unit_matrix(j: &JordanAlgebra<PrimeField>, r: usize, c: usize) -> Result<JordanElement<u32>> {
    let mut m = [[0u32; 3]; 3];
    m[r][c] = 1;
    j.from_matrix(&m)
}

/// Two-dimensional singular subspaces of traceless `M₃(F_q)`, sorted into
/// the common-image and common-kernel families.
pub fn singular_family_census(q: u64, workers: &Workers, timed: bool) -> Result<CensusReport> {
    if q > 5 {
        return Err(Error::TooLarge(format!(
            "singular-family census at q = {q}"
        )));
    }
    let t0 = start(timed);
    let k = PrimeField::new(q)?;
    let j = JordanAlgebra::new(k, 2)?;
    let singular: Vec<(JordanElement<u32>, [[u32; 3]; 3])> = traceless_elements(&j)?
        .into_iter()
        .filter(|x| !j.is_zero(x) && j.is_zero(&j.jmatrix_square(x)))
        .map(|x| {
            let m = j.to_matrix(&x).expect("dim 2");
            (x, m)
        })
        .collect();
    let s = singular.len() as u64;
    let parts = workers.map_ranges(s, 16, |r| {
        let mut c = [0u64; 3];
        for a in r {
            let (y, my) = &singular[a as usize];
            for (z, mz) in &singular {
                let indep = rank(&k, j.dim(), [j.coords(y), j.coords(z)]) == 2;
                if indep && j.is_zero(&j.doubled_product(y, z)) {
                    c[family(&k, my, mz) as usize] += 1;
                }
            }
        }
        c
    });
    let mut c = [0u64; 3];
    for p in parts {
        for i in 0..3 {
            c[i] += p[i];
        }
    }
    let gl2 = (q * q - 1) * (q * q - q);
    let mut rep = CensusReport::new("singular-family")
        .param("q", q)
        .param("dimD", 2);
    rep.count("singular_elements", s);
    rep.count("image_pairs", c[0]);
    rep.count("kernel_pairs", c[1]);
    rep.count("neither_pairs", c[2]);
    rep.check_eq(
        "singular elements",
        (q.pow(3) - 1) * (q + 1),
        "nilpotent rank-one 3x3 matrices",
        s,
    );
    rep.check_eq(
        "neither",
        0,
        "either the images or the kernels of y and z coincide",
        c[2],
    );
    rep.check_eq(
        "common-image planes",
        q * q + q + 1,
        "one plane per image line",
        c[0] / gl2,
    );
    rep.check_eq(
        "common-kernel planes",
        q * q + q + 1,
        "one plane per kernel plane",
        c[1] / gl2,
    );
    rep.check_eq(
        "pair counts divisible by |GL2|",
        0,
        "ordered bases of planes",
        (c[0] % gl2) + (c[1] % gl2),
    );
    let classify = |a: (usize, usize), b: (usize, usize)| -> Result<Family> {
        let (y, z) = (unit_matrix(&j, a.0, a.1)?, unit_matrix(&j, b.0, b.1)?);
        Ok(family(&k, &j.to_matrix(&y)?, &j.to_matrix(&z)?))
    };
    rep.check_eq(
        "span(E12, E13)",
        "Image",
        "images both span e1",
        format!("{:?}", classify((0, 1), (0, 2))?),
    );
    rep.check_eq(
        "span(E13, E23)",
        "Kernel",
        "kernels both <e1, e2>",
        format!("{:?}", classify((0, 2), (1, 2))?),
    );
    Ok(rep.timed(t0))
}

fn bfs_opts(workers: &Workers) -> BfsOptions {
    BfsOptions {
        workers: workers.clone(),
        ..BfsOptions::default()
    }
}

fn push_orbit_checks(
    rep: &mut CensusReport,
    omega: &OrbitSet,
    dim_d: usize,
    q: u64,
    opts: &BfsOptions,
) -> Result<()> {
    let (expected, formula) = if dim_d == 1 {
        (omega_size_dim1(q), "(q-1)(q+1)(q^2+1)(q^3+1)")
    } else {
        (omega_size_dim2(q), "(q-1)[6 choose 3]_q")
    };
    rep.count("omega", omega.len() as u64);
    rep.check_eq("|Omega|", expected, formula, omega.len());
    let classes = qd_orbit_partition(omega, dim_d, q, opts)?;
    for (i, c) in classes.iter().enumerate() {
        rep.count(&format!("class_v{}", i + 1), c.len() as u64);
    }
    rep.check_eq(
        "Q_D orbits on Omega",
        4,
        "Q_D has 4 orbits on Omega",
        classes.len(),
    );
    Ok(())
}

/// `|Ω|` and its partition into `Q_D`-orbits.
pub fn orbit_census(dim_d: usize, q: u64, workers: &Workers, timed: bool) -> Result<CensusReport> {
    let t0 = start(timed);
    let opts = bfs_opts(workers);
    let omega = omega_bfs(dim_d, q, &opts)?;
    let mut rep = CensusReport::new("orbit")
        .param("q", q)
        .param("dimD", dim_d);
    push_orbit_checks(&mut rep, &omega, dim_d, q, &opts)?;
    Ok(rep.timed(t0))
}

#[derive(Clone, Copy, Debug, Default)]
struct AmberTally {
    pairs: u64,
    members: u64,
    amber: u64,
    mismatches: u64,
    member_aa: u64,
    member_bb: u64,
    singular_not_amber: u64,
    singular_planes_not_amber: u64,
}

impl AddAssign for AmberTally {
    fn add_assign(&mut self, o: Self) {
        self.pairs += o.pairs;
        self.members += o.members;
        self.amber += o.amber;
        self.mismatches += o.mismatches;
        self.member_aa += o.member_aa;
        self.member_bb += o.member_bb;
        self.singular_not_amber += o.singular_not_amber;
        self.singular_planes_not_amber += o.singular_planes_not_amber;
    }
}

struct AmberContext<'a> {
    fts: &'a Fts<PrimeField>,
    omega: &'a OrbitSet,
}

impl AmberContext<'_> {
    fn key_digits(&self, y: &[u32], z: &[u32], buf: &mut Vec<u32>) {
        buf.clear();
        buf.push(0);
        buf.extend_from_slice(y);
        buf.extend_from_slice(z);
        buf.push(0);
    }

    /// Amber verdict for `span(y, z)`, where `sy`, `sz` say whether each is
    /// singular or zero.
    fn amber(
        &self,
        y: &JordanElement<u32>,
        z: &JordanElement<u32>,
        sy: bool,
        sz: bool,
    ) -> Result<bool> {
        if !(sy && sz) {
            return Ok(false);
        }
        let j = self.fts.jordan();
        j.is_amber(&j.span(&[y.clone(), z.clone()])?)
    }

    fn visit(
        &self,
        t: &mut AmberTally,
        y: (&JordanElement<u32>, &[u32], bool),
        z: (&JordanElement<u32>, &[u32], bool),
        buf: &mut Vec<u32>,
    ) -> Result<()> {
        let j = self.fts.jordan();
        if j.is_zero(y.0) && j.is_zero(z.0) {
            return Ok(());
        }
        t.pairs += 1;
        self.key_digits(y.1, z.1, buf);
        let member = self.omega.contains(buf);
        let amber = self.amber(y.0, z.0, y.2, z.2)?;
        t.members += u64::from(member);
        t.amber += u64::from(amber);
        t.mismatches += u64::from(member != amber);
        let dim = rank(j.field(), j.dim(), [y.1.to_vec(), z.1.to_vec()]);
        if member {
            if dim == 2 {
                t.member_aa += 1;
            } else {
                t.member_bb += 1;
            }
        }
        if y.2 && z.2 && dim == 2 && !amber {
            t.singular_not_amber += 1;
            if j.is_zero(&j.doubled_product(y.0, z.0)) {
                t.singular_planes_not_amber += 1;
            }
        }
        Ok(())
    }
}

const AMBER_QUOTE: &str =
    "Omega meets NN in the pairs (y, z) != 0 of traceless elements spanning an amber space";

/// `(0, y, z, 0) ∈ Ω` against amberness of `Fy + Fz` for traceless `y, z`.
///
/// For `dim D = 1` every pair is visited. For `dim D = 2` the pairs of
/// singular-or-zero elements are visited, and every point of `Ω` with
/// `a = b = 0` is checked to have singular `y, z`; together these cover all
/// pairs, since a non-amber span is exactly one containing a non-singular
/// element or failing the containment.
pub fn amber_census(dim_d: usize, q: u64, workers: &Workers, timed: bool) -> Result<CensusReport> {
    let t0 = start(timed);
    let opts = bfs_opts(workers);
    let omega = omega_bfs(dim_d, q, &opts)?;
    let k = PrimeField::new(q)?;
    let fts = Fts::new(k, dim_d)?;
    let j = fts.jordan();
    let traceless = traceless_elements(j)?;
    let coords: Vec<Vec<u32>> = traceless.iter().map(|x| j.coords(x)).collect();
    let singular: Vec<bool> = traceless
        .iter()
        .map(|x| j.is_zero(&j.jmatrix_square(x)))
        .collect();
    let ctx = AmberContext {
        fts: &fts,
        omega: &omega,
    };
    let mut rep = CensusReport::new("amber")
        .param("q", q)
        .param("dimD", dim_d);
    push_orbit_checks(&mut rep, &omega, dim_d, q, &opts)?;

    let pool: Vec<usize> = if dim_d == 1 {
        (0..traceless.len()).collect()
    } else {
        (0..traceless.len()).filter(|&i| singular[i]).collect()
    };
    let parts = workers.map_ranges(pool.len() as u64, 16, |r| -> Result<AmberTally> {
        let mut t = AmberTally::default();
        let mut buf = Vec::new();
        for a in r {
            let ia = pool[a as usize];
            for &ib in &pool {
                ctx.visit(
                    &mut t,
                    (&traceless[ia], &coords[ia], singular[ia]),
                    (&traceless[ib], &coords[ib], singular[ib]),
                    &mut buf,
                )?;
            }
        }
        Ok(t)
    });
    let mut t = AmberTally::default();
    for p in parts {
        t += p?;
    }

    rep.count("pairs_visited", t.pairs);
    rep.count("members", t.members);
    rep.count("amber", t.amber);
    rep.count("AA", t.member_aa);
    rep.count("BB", t.member_bb);
    rep.count("singular_pairs_not_amber", t.singular_not_amber);
    rep.count("singular_planes_not_amber", t.singular_planes_not_amber);
    rep.check_eq(
        "membership vs amber mismatches",
        0,
        AMBER_QUOTE,
        t.mismatches,
    );
    if dim_d == 1 {
        rep.check_eq(
            "pairs visited",
            (q.pow(5)).pow(2) - 1,
            "all nonzero pairs of traceless elements",
            t.pairs,
        );
    } else {
        let lookup = ElementLookup::new(j, &traceless, &singular);
        let nn = members_with_ab_zero(&fts, &omega, &lookup, workers)?;
        rep.count("omega_points_in_NN", nn.0);
        rep.check_eq(
            "Omega points in NN with non-singular y or z",
            0,
            AMBER_QUOTE,
            nn.1,
        );
        rep.check_eq(
            "Omega points in NN",
            t.members,
            "visited singular pairs",
            nn.0,
        );
        let gl2 = (q * q - 1) * (q * q - q);
        let lines = (q.pow(3) - 1) * (q + 1) / (q - 1);
        rep.check_eq(
            "BB",
            lines * (q - 1) * (q + 1),
            "singular lines times |F^2 - 0|",
            t.member_bb,
        );
        rep.check_eq(
            "AA",
            2 * (q * q + q + 1) * gl2,
            "common-image and common-kernel planes times |GL2|",
            t.member_aa,
        );
        rep.check(
            "singular pair that is not amber",
            "> 0",
            "pairs of singular elements whose span is not amber lie outside Omega",
            t.singular_not_amber,
            t.singular_not_amber > 0,
        );
        let (e12, e21) = (unit_matrix(j, 0, 1)?, unit_matrix(j, 1, 0)?);
        let mut buf = Vec::new();
        ctx.key_digits(&j.coords(&e12), &j.coords(&e21), &mut buf);
        let amber = ctx.amber(&e12, &e21, true, true)?;
        rep.check_eq(
            "span(E12, E21) amber",
            false,
            "E12 E21 + E21 E12 != 0",
            amber,
        );
        rep.check_eq(
            "(0, E12, E21, 0) in Omega",
            false,
            AMBER_QUOTE,
            omega.contains(&buf),
        );
    }
    if dim_d == 1 {
        rep.check_eq(
            "AA",
            0,
            "rank-one traceless symmetric matrices span no singular plane",
            t.member_aa,
        );
    } else {
        rep.check(
            "AA nonempty",
            "> 0",
            "two-dimensional amber spaces exist",
            t.member_aa,
            t.member_aa > 0,
        );
    }
    rep.check(
        "BB nonempty",
        "> 0",
        "singular lines are amber",
        t.member_bb,
        t.member_bb > 0,
    );
    Ok(rep.timed(t0))
}

/// Sorted coordinates of the traceless elements and of the singular ones among them.
struct ElementLookup {
    traceless: Vec<Vec<u32>>,
    singular: Vec<Vec<u32>>,
}

impl ElementLookup {
    fn new(
        j: &JordanAlgebra<PrimeField>,
        traceless: &[JordanElement<u32>],
        singular: &[bool],
    ) -> Self {
        let mut t: Vec<Vec<u32>> = traceless.iter().map(|x| j.coords(x)).collect();
        let mut s: Vec<Vec<u32>> = t
            .iter()
            .zip(singular)
            .filter(|(_, s)| **s)
            .map(|(x, _)| x.clone())
            .collect();
        t.sort();
        s.sort();
        Self {
            traceless: t,
            singular: s,
        }
    }

    fn find(set: &[Vec<u32>], v: &[u32]) -> bool {
        set.binary_search_by(|s| s.as_slice().cmp(v)).is_ok()
    }
}

/// Points of `Ω` in `NN` (`a = b = 0`, `y` and `z` traceless), and how many
/// of them have a `y` or `z` that is not singular-or-zero.
fn members_with_ab_zero(
    fts: &Fts<PrimeField>,
    omega: &OrbitSet,
    lookup: &ElementLookup,
    workers: &Workers,
) -> Result<(u64, u64)> {
    let n = fts.jordan().dim();
    let width = fts.width();
    let q = omega.q;
    let zero = vec![0u32; n];
    let ok = |v: &[u32]| v == zero.as_slice() || ElementLookup::find(&lookup.singular, v);
    let traceless = |v: &[u32]| ElementLookup::find(&lookup.traceless, v);
    let check = |d: &[u32]| -> (u64, u64) {
        if d[0] != 0 || d[width - 1] != 0 {
            return (0, 0);
        }
        let (y, z) = (&d[1..1 + n], &d[1 + n..1 + 2 * n]);
        if !(traceless(y) && traceless(z)) {
            return (0, 0);
        }
        (1, u64::from(!(ok(y) && ok(z))))
    };
    let parts: Vec<(u64, u64)> = match &omega.keys {
        OrbitKeys::Packed(keys) => workers.map_chunks(keys, 1 << 16, |c| {
            let mut d = vec![0u32; width];
            c.iter().fold((0, 0), |acc, k| {
                k.unpack(q, &mut d);
                let (a, b) = check(&d);
                (acc.0 + a, acc.1 + b)
            })
        }),
        OrbitKeys::Bytes(keys) => workers.map_chunks(keys, 1 << 16, |c| {
            let mut d = vec![0u32; width];
            c.iter().fold((0, 0), |acc, k| {
                k.unpack(q, &mut d);
                let (a, b) = check(&d);
                (acc.0 + a, acc.1 + b)
            })
        }),
    };
    Ok(parts
        .into_iter()
        .fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1)))
}

/// Fast suites, plus the slow ones when `cfg.slow` is set.
pub fn run_all(cfg: &CensusConfig) -> Result<Vec<CensusReport>> {
    let w = &cfg.workers;
    let t = cfg.timed;
    let mut out = vec![
        quadric_census(2, 8, w, t)?,
        quadric_census(3, 8, w, t)?,
        pair_census(2, w, t)?,
        triple_census(2, None, w, t)?,
    ];
    for q in [2, 3, 5] {
        out.push(singular_family_census(q, w, t)?);
    }
    out.push(amber_census(1, 5, w, t)?);
    if cfg.slow {
        out.push(pair_census(3, w, t)?);
        out.push(triple_census(3, Some(1 << 20), w, t)?);
        out.push(amber_census(2, 5, w, t)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadric_examples() {
        let w = Workers::sequential();
        assert_eq!(quadric_null_count(2, 3, &w).unwrap(), 4);
        assert_eq!(quadric_null_count(7, 2, &w).unwrap(), 63);
        assert_eq!(quadric_null_count(1, 7, &w).unwrap(), 0);
        for m in 1..=6 {
            assert_eq!(
                quadric_null_count(m, 3, &w).unwrap(),
                quadric_null_closed_form(m as u32, 3)
            );
        }
        assert!(matches!(
            quadric_null_count(40, 3, &w),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn families_of_unit_planes() {
        let k = PrimeField::new(3).unwrap();
        let j = JordanAlgebra::new(k, 2).unwrap();
        let m = |r, c| j.to_matrix(&unit_matrix(&j, r, c).unwrap()).unwrap();
        assert_eq!(family(&k, &m(0, 1), &m(0, 2)), Family::Image);
        assert_eq!(family(&k, &m(0, 2), &m(1, 2)), Family::Kernel);
        assert_eq!(family(&k, &m(0, 1), &m(1, 2)), Family::Neither);
    }

    #[test]
    fn small_suites_pass() {
        let w = Workers::sequential();
        for r in [
            pair_census(2, &w, false).unwrap(),
            singular_family_census(3, &w, false).unwrap(),
        ] {
            assert!(r.pass(), "{r:#?}");
        }
    }
}
