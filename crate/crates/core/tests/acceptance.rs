//! Acceptance criteria. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion with its wall time and limit.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use exceptional::census::{
    amber_census, orbit_census, pair_census, singular_family_census, triple_census,
};
use exceptional::checks::{composition_check, fts_check, jordan_check, satake_check};
use exceptional::field::{PrimeField, Rationals};
use exceptional::fts::Fts;
use exceptional::jordan::JordanAlgebra;
use exceptional::orbit::{nn_membership, omega_bfs, qd_orbit_partition, BfsOptions, OrbitSet};
use exceptional::par::Workers;
use exceptional::report::CensusReport;
use exceptional::rootdata::{double_coset_count, paper_constant_tables, rho_cases};
use exceptional::Result;

/// Tolerance for the numeric side of the Satake checks; exact values use equality.
const SATAKE_TOL: f64 = 1e-9;
const SEED: u64 = 20_261_015;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        pass,
        detail: detail.into(),
    })
}

fn failed_checks(reports: &[CensusReport]) -> Vec<String> {
    reports
        .iter()
        .flat_map(|r| {
            r.results
                .iter()
                .filter(|c| !c.pass)
                .map(move |c| format!("{}/{}: {} != {}", r.suite, c.name, c.actual, c.expected))
        })
        .collect()
}

fn reports_outcome(reports: &[CensusReport], extra: &str) -> Result<Outcome> {
    let failed = failed_checks(reports);
    let checks: usize = reports.iter().map(|r| r.results.len()).sum();
    if failed.is_empty() {
        outcome(true, format!("{checks} checks{extra}"))
    } else {
        outcome(false, failed.join("; "))
    }
}

// Oracles written independently of the library.

fn det3_i64(m: &[[i64; 3]; 3], p: i64) -> i64 {
    let d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    d.rem_euclid(p)
}

fn det3_rat(m: &[[BigRational; 3]; 3]) -> BigRational {
    let t = |a: usize, b: usize, c: usize| &m[0][a] * &m[1][b] * &m[2][c];
    t(0, 1, 2) + t(1, 2, 0) + t(2, 0, 1) - t(2, 1, 0) - t(0, 2, 1) - t(1, 0, 2)
}

fn gaussian_binomial(n: u32, k: u32, q: u64) -> u64 {
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..k {
        num *= (q as u128).pow(n - i) - 1;
        den *= (q as u128).pow(i + 1) - 1;
    }
    (num / den) as u64
}

/// Sum of the nilradical roots divided by `det`, both in the same coordinates.
/// `coefficient` picks out the removed simple root's coefficient of a root;
/// `positive` is a generic functional that is positive on positive roots.
fn rho_full_exponent(
    roots: &[Vec<i64>],
    positive: &[i64],
    coefficient: &[i64],
    det: &[i64],
) -> BigRational {
    let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
    let mut sum = vec![0i64; det.len()];
    for r in roots
        .iter()
        .filter(|r| dot(r, positive) > 0 && dot(r, coefficient) > 0)
    {
        for (s, x) in sum.iter_mut().zip(r) {
            *s += x;
        }
    }
    let i = det.iter().position(|&x| x != 0).unwrap();
    let e = BigRational::new(BigInt::from(sum[i]), BigInt::from(det[i]));
    assert!(sum
        .iter()
        .zip(det)
        .all(|(s, d)| BigRational::from_integer(BigInt::from(*s)) == &e * BigInt::from(*d)));
    e
}

fn sign_vectors(n: usize) -> impl Iterator<Item = Vec<i64>> {
    (0..1u32 << n).map(move |m| {
        (0..n)
            .map(|i| if m >> i & 1 == 1 { -1 } else { 1 })
            .collect()
    })
}

/// Roots of C3 in the epsilon basis.
fn c3_roots() -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i < j {
                for s in sign_vectors(2) {
                    let mut r = vec![0; 3];
                    r[i] = s[0];
                    r[j] = s[1];
                    out.push(r);
                }
            }
        }
        for s in [-2, 2] {
            let mut r = vec![0; 3];
            r[i] = s;
            out.push(r);
        }
    }
    out
}

/// Roots of F4 in the epsilon basis, doubled so that every coordinate is integral.
fn f4_roots_doubled() -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i < j {
                for s in sign_vectors(2) {
                    let mut r = vec![0; 4];
                    r[i] = 2 * s[0];
                    r[j] = 2 * s[1];
                    out.push(r);
                }
            }
        }
        for s in [-2, 2] {
            let mut r = vec![0; 4];
            r[i] = s;
            out.push(r);
        }
    }
    out.extend(sign_vectors(4));
    out
}

/// G2 roots in simple-root coordinates (short α, long β).
fn g2_roots() -> Vec<Vec<i64>> {
    let pos = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]];
    pos.iter()
        .flat_map(|r| [r.to_vec(), vec![-r[0], -r[1]]])
        .collect()
}

// Criteria.

fn c1_composition() -> Result<Outcome> {
    reports_outcome(&[composition_check(10_000, false)?], "")
}

fn c2_dickson() -> Result<Outcome> {
    let k = PrimeField::new(5)?;
    let j = JordanAlgebra::new(k, 2)?;
    let mut bad = 0u64;
    let mut m = [[0u32; 3]; 3];
    for code in 0..5u32.pow(9) {
        let mut c = code;
        for e in m.iter_mut().flatten() {
            *e = c % 5;
            c /= 5;
        }
        let x = j.from_matrix(&m)?;
        let mi = m.map(|r| r.map(i64::from));
        bad += u64::from(i64::from(j.trilinear(&x, &x, &x)?) != det3_i64(&mi, 5));
    }
    let q = Rationals;
    let jq = JordanAlgebra::new(q, 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..1000 {
        let m: [[BigRational; 3]; 3] = std::array::from_fn(|_| {
            std::array::from_fn(|_| {
                BigRational::new(
                    BigInt::from(rng.gen_range(-40..=40)),
                    BigInt::from(rng.gen_range(1..=9)),
                )
            })
        });
        let x = jq.from_matrix(&m)?;
        bad += u64::from(jq.trilinear(&x, &x, &x)? != det3_rat(&m));
    }
    outcome(
        bad == 0,
        format!("5^9 matrices at p=5 and 1000 rational matrices, {bad} mismatches"),
    )
}

fn c3_duality() -> Result<Outcome> {
    let rep = jordan_check(10_000, false, false)?;
    let duality: Vec<_> = rep
        .results
        .iter()
        .filter(|r| r.name.contains("duality"))
        .collect();
    let bad: Vec<_> = duality
        .iter()
        .filter(|r| !r.pass)
        .map(|r| r.name.clone())
        .collect();
    outcome(
        duality.len() == 8 && bad.is_empty(),
        format!("{} field/dimension cases, failing: {bad:?}", duality.len()),
    )
}

fn c4_u_action() -> Result<Outcome> {
    reports_outcome(&[fts_check(5, false)?], "")
}

fn c5_tables() -> Result<Outcome> {
    let entries = paper_constant_tables()?;
    let find = |table: &str, row: &str, key: &str| {
        entries
            .iter()
            .find(|e| e.table == table && e.row == row && e.key == key)
            .map(|e| e.stored.clone())
    };
    let mut wrong = Vec::new();
    let mut expect = |table: &str, row: &str, key: &str, value: &str| {
        if find(table, row, key).as_deref() != Some(value) {
            wrong.push(format!("{table}/{row}/{key}"));
        }
    };
    for (row, s, t, d) in [
        ("D_{n+1}", "n-1", "1", "2n"),
        ("E6", "4", "2", "16"),
        ("E7", "6", "3", "27"),
    ] {
        expect("favorable", row, "s", s);
        expect("favorable", row, "t", t);
        expect("favorable", row, "d", d);
    }
    for (row, s, t, d) in [
        ("E6", "4", "3", "20"),
        ("E7", "6", "4", "32"),
        ("E8", "10", "6", "56"),
    ] {
        expect("heisenberg", row, "s", s);
        expect("heisenberg", row, "t", t);
        expect("heisenberg", row, "d", d);
    }
    for (row, s, t) in [("E6", "2", "3/2"), ("E7", "3", "2"), ("E8", "5", "3")] {
        expect("amber", row, "s", s);
        expect("amber", row, "t", t);
    }
    expect("so3_jacquet", "SO(n+1)", "exponents", "1, n-1");
    expect("g2_pairs", "G2 x GL2", "AA twist", "2");
    expect("g2_triples", "G2 x GL3", "AA twist", "4");
    expect("g2_triples_action", "PGL2 x GL3", "exponents", "6, 4");
    // Heisenberg grading: dim g1 = 2 dim J + 2 with dim J = 3D + 3.
    for (row, dim_d) in [("E6", 2usize), ("E7", 4), ("E8", 8)] {
        let computed = entries
            .iter()
            .find(|e| e.table == "heisenberg" && e.row == row && e.key == "d")
            .and_then(|e| e.computed.clone());
        if computed != Some((2 * (3 * dim_d + 3) + 2).to_string()) {
            wrong.push(format!("heisenberg/{row}/d computed"));
        }
    }
    let disagreeing: Vec<String> = entries
        .iter()
        .filter(|e| !e.agrees())
        .map(|e| format!("{}/{}/{}", e.table, e.row, e.key))
        .collect();
    let unexplained: Vec<&String> = disagreeing
        .iter()
        .zip(entries.iter().filter(|e| !e.agrees()))
        .filter(|(_, e)| e.erratum.is_none())
        .map(|(s, _)| s)
        .collect();
    let derived = entries.iter().filter(|e| e.computed.is_some()).count();
    outcome(
        wrong.is_empty() && unexplained.is_empty(),
        format!(
            "{} entries, {derived} derived; wrong {wrong:?}; documented errata {disagreeing:?}; unexplained {unexplained:?}",
            entries.len()
        ),
    )
}

fn c6_rho() -> Result<Outcome> {
    let c3 = rho_full_exponent(&c3_roots(), &[3, 2, 1], &[1, 1, 1], &[1, 1, 1]) / BigInt::from(2);
    let g2 = rho_full_exponent(&g2_roots(), &[1, 10], &[0, 1], &[3, 2]);
    // Coweight of alpha_3 is (3,1,1,1); omega_3 doubled is (3,1,1,1).
    let f4 = rho_full_exponent(
        &f4_roots_doubled(),
        &[8, 3, 2, 1],
        &[3, 1, 1, 1],
        &[3, 1, 1, 1],
    );
    let oracle: Vec<String> = [c3, g2, f4].iter().map(|r| r.to_string()).collect();
    let library: Vec<String> = rho_cases()?.into_iter().map(|c| c.3).collect();
    let pass = oracle == ["2", "3", "7"] && library == oracle;
    outcome(
        pass,
        format!("oracle {oracle:?}, library {library:?}, stated [2, 3, 7]"),
    )
}

fn c7_double_cosets() -> Result<Outcome> {
    let cases = [("C3", "A2"), ("A5", "A2+A2"), ("D6", "A5"), ("E7", "E6")];
    let counts: Vec<usize> = cases
        .iter()
        .map(|(g, l)| double_coset_count(g, l))
        .collect::<Result<_>>()?;
    outcome(
        counts.iter().all(|&c| c == 4),
        format!("{cases:?} -> {counts:?}"),
    )
}

fn c8_orbits(shared: &mut Option<OrbitSet>) -> Result<Outcome> {
    let opts = BfsOptions::default();
    let q = 5u64;
    let d1 = omega_bfs(1, q, &opts)?;
    let d2 = omega_bfs(2, q, &opts)?;
    let want1 = (q - 1) * (q + 1) * (q * q + 1) * (q * q * q + 1);
    let want2 = (q - 1) * gaussian_binomial(6, 3, q);
    let c1 = qd_orbit_partition(&d1, 1, q, &opts)?;
    let c2 = qd_orbit_partition(&d2, 2, q, &opts)?;
    let covers = |c: &[OrbitSet], total: usize| c.iter().map(OrbitSet::len).sum::<usize>() == total;
    let pass = d1.len() as u64 == want1
        && d2.len() as u64 == want2
        && c1.len() == 4
        && c2.len() == 4
        && covers(&c1, d1.len())
        && covers(&c2, d2.len());
    let detail = format!(
        "|Omega| {} (want {want1}), {} (want {want2}); classes {:?} / {:?}",
        d1.len(),
        d2.len(),
        c1.iter().map(OrbitSet::len).collect::<Vec<_>>(),
        c2.iter().map(OrbitSet::len).collect::<Vec<_>>()
    );
    *shared = Some(d2);
    outcome(pass, detail)
}

fn null_lines(q: u64) -> u64 {
    (q.pow(6) - 1) / (q - 1)
}

fn c9_pairs() -> Result<Outcome> {
    let w = Workers::sequential();
    let t = Instant::now();
    let r2 = pair_census(2, &w, false)?;
    let fast = t.elapsed();
    let r3 = pair_census(3, &w, false)?;
    let mut ok = fast < Duration::from_secs(10);
    for (q, r) in [(2u64, &r2), (3, &r3)] {
        ok &= r.counts["BB"] == null_lines(q) * (q * q - 1);
        ok &= r.counts["AA"] == null_lines(q) * (q * q - 1) * (q * q - q);
    }
    let base = reports_outcome(&[r2.clone(), r3.clone()], "")?;
    outcome(
        ok && base.pass,
        format!(
            "q=2 in {fast:.1?}: AA {} BB {}; q=3: AA {} BB {}; {}",
            r2.counts["AA"], r2.counts["BB"], r3.counts["AA"], r3.counts["BB"], base.detail
        ),
    )
}

fn c10_triples() -> Result<Outcome> {
    let r = triple_census(2, None, &Workers::sequential(), false)?;
    let q = 2u64;
    let ok = r.counts["BB"] == null_lines(q) * (q.pow(3) - 1)
        && r.counts["AA"] == null_lines(q) * (q.pow(3) - 1) * (q.pow(3) - q);
    let base = reports_outcome(
        std::slice::from_ref(&r),
        &format!(", 2^24 triples, {} solutions", r.counts["solutions"]),
    )?;
    outcome(ok && base.pass, base.detail)
}

fn c11_amber(omega_d2: Option<&OrbitSet>) -> Result<Outcome> {
    let w = Workers::sequential();
    let d1 = amber_census(1, 5, &w, false)?;
    let mut reports = vec![d1.clone()];
    // E12 and E21 square to zero, span a non-amber plane, and (0, E12, E21, 0) is not in Omega.
    let k = PrimeField::new(5)?;
    let fts = Fts::new(k, 2)?;
    let j = fts.jordan();
    let unit = |r: usize, c: usize| {
        let mut m = [[0u32; 3]; 3];
        m[r][c] = 1;
        j.from_matrix(&m)
    };
    let (e12, e21) = (unit(0, 1)?, unit(1, 0)?);
    let singular = j.is_zero(&j.jmatrix_square(&e12)) && j.is_zero(&j.jmatrix_square(&e21));
    let amber = j.is_amber(&j.span(&[e12.clone(), e21.clone()])?)?;
    let owned;
    let omega = match omega_d2 {
        Some(o) => o,
        None => {
            owned = omega_bfs(2, 5, &BfsOptions::default())?;
            &owned
        }
    };
    let member = nn_membership(&fts, &e12, &e21, omega);
    let exhibit = singular && !amber && !member;
    let mut extra = format!(
        ", dim 1 pairs {}; (E12, E21) singular {singular} amber {amber} in Omega {member}",
        d1.counts["pairs_visited"]
    );
    let d2 = amber_census(2, 5, &w, false)?;
    extra.push_str(&format!(
        ", dim 2: Omega in NN {}, AA {}, BB {}, singular pairs not amber {}",
        d2.counts["omega_points_in_NN"],
        d2.counts["AA"],
        d2.counts["BB"],
        d2.counts["singular_pairs_not_amber"]
    ));
    reports.push(d2);
    let base = reports_outcome(&reports, &extra)?;
    outcome(base.pass && exhibit, base.detail)
}

/// Traceless nilpotent rank-one 3x3 matrices over F_q, counted directly.
fn singular_count(q: i64) -> u64 {
    let mut n = 0;
    for code in 0..q.pow(8) {
        let mut c = code;
        let mut m = [[0i64; 3]; 3];
        for e in m.iter_mut().flatten().take(8) {
            *e = c % q;
            c /= q;
        }
        m[2][2] = (-(m[0][0] + m[1][1])).rem_euclid(q);
        let zero = m.iter().flatten().all(|&x| x == 0);
        let sq_zero = (0..3).all(|r| {
            (0..3).all(|s| (0..3).map(|t| m[r][t] * m[t][s]).sum::<i64>().rem_euclid(q) == 0)
        });
        n += u64::from(!zero && sq_zero);
    }
    n
}

fn c12_singular_families() -> Result<Outcome> {
    let w = Workers::sequential();
    let mut details = Vec::new();
    let mut ok = true;
    let mut reports = Vec::new();
    for q in [2u64, 3] {
        let r = singular_family_census(q, &w, false)?;
        let direct = singular_count(q as i64);
        ok &= r.counts["neither_pairs"] == 0
            && r.counts["image_pairs"] > 0
            && r.counts["kernel_pairs"] > 0
            && r.counts["singular_elements"] == direct;
        details.push(format!(
            "q={q}: singular {} (direct {direct}), image {} kernel {} neither {}",
            r.counts["singular_elements"],
            r.counts["image_pairs"],
            r.counts["kernel_pairs"],
            r.counts["neither_pairs"]
        ));
        reports.push(r);
    }
    let base = reports_outcome(&reports, "")?;
    outcome(
        ok && base.pass,
        format!("{}; {}", details.join("; "), base.detail),
    )
}

fn c13_satake() -> Result<Outcome> {
    let base = reports_outcome(&[satake_check(1000, 10_000, false)?], "")?;
    let pinned = exceptional::satake::TOLERANCE == SATAKE_TOL;
    outcome(
        base.pass && pinned,
        format!("{}, tolerance {SATAKE_TOL:e} pinned {pinned}", base.detail),
    )
}

fn c14_determinism() -> Result<Outcome> {
    let seq = Workers::sequential();
    let par = Workers::new(4)?;
    let run = |w: &Workers| -> Result<Vec<CensusReport>> {
        Ok(vec![
            pair_census(2, w, false)?,
            triple_census(2, None, w, false)?,
            triple_census(3, Some(1 << 16), w, false)?,
            singular_family_census(3, w, false)?,
            orbit_census(1, 5, w, false)?,
            amber_census(1, 5, w, false)?,
        ])
    };
    let (a, b) = (run(&seq)?, run(&par)?);
    let same_reports = a == b;
    let bfs = |w: &Workers| {
        omega_bfs(
            1,
            7,
            &BfsOptions {
                workers: w.clone(),
                chunk: 1 << 10,
                ..BfsOptions::default()
            },
        )
    };
    let same_bfs = bfs(&seq)? == bfs(&par)?;
    let json_same = exceptional::report::to_json(&a)? == exceptional::report::to_json(&b)?;
    outcome(
        same_reports && same_bfs && json_same,
        format!("1 vs {} workers: reports equal {same_reports}, JSON equal {json_same}, BFS dim 1 q 7 equal {same_bfs}", par.count()),
    )
}

fn main() {
    let mut omega_d2 = None;
    let mut all = true;
    let mut line =
        |n: u32, title: &str, limit: Duration, f: &mut dyn FnMut() -> Result<Outcome>| {
            let t = Instant::now();
            let r = f();
            let el = t.elapsed();
            let (pass, detail) = match r {
                Ok(o) => (o.pass && el <= limit, o.detail),
                Err(e) => (false, format!("error: {e}")),
            };
            all &= pass;
            println!(
                "{} {n:>2} {title} [{:.2?} / limit {:?}] {detail}",
                if pass { "PASS" } else { "FAIL" },
                el,
                limit
            );
        };
    let s = Duration::from_secs;
    line(1, "composition laws", s(10), &mut c1_composition);
    line(2, "Dickson form equals det", s(60), &mut c2_dickson);
    line(3, "cross-product duality", s(60), &mut c3_duality);
    line(
        4,
        "U-action additivity and pairing",
        s(60),
        &mut c4_u_action,
    );
    line(5, "table reproduction", s(1), &mut c5_tables);
    line(6, "rho exponents", s(1), &mut c6_rho);
    line(7, "double cosets", s(5), &mut c7_double_cosets);
    line(8, "orbit goldens", s(60), &mut || c8_orbits(&mut omega_d2));
    line(9, "pair census q=2 (and q=3)", s(30 * 60), &mut c9_pairs);
    line(10, "triple census q=2", s(5 * 60), &mut c10_triples);
    line(11, "amber census", s(30 * 60), &mut || {
        c11_amber(omega_d2.as_ref())
    });
    line(12, "singular families", s(60), &mut c12_singular_families);
    line(13, "Satake suite", s(10), &mut c13_satake);
    line(
        14,
        "determinism across worker counts",
        s(10 * 60),
        &mut c14_determinism,
    );
    if !all {
        eprintln!("acceptance: at least one criterion failed");
        std::process::exit(1);
    }
}
