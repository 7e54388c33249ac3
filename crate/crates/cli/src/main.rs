//! `exceptional`: runs the census and check suites, reproduces the constant
//! tables and evaluates lift maps.
//!
//! Exit status: 0 when every check passes, 1 on a verification failure or a
//! runtime error, 2 on a usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

use exceptional::census::{
    amber_census, orbit_census, pair_census, quadric_census, run_all, singular_family_census,
    triple_census, CensusConfig,
};
use exceptional::checks::run_check;
use exceptional::par::Workers;
use exceptional::report::{emit_report, CensusReport, Format, REPORT_SCHEMA, SCHEMA_VERSION};
use exceptional::rootdata::{
    double_coset_count, heisenberg_parabolic, nilradical_char_exponent, paper_constant_tables,
    rational_to_string, ParabolicSpec, RootDatum,
};
use exceptional::satake::{
    parse_rational, phi_a2_g2, phi_g2_b3, psi_g2a1_f4, so3_bookkeeping, so3_class,
    subregular_param, t1_t2_scalars, thm44_param_map, trivial_so3_param, ExactValue, SatakeClass,
    UnramifiedValue,
};
use exceptional::Error;

#[derive(Parser, Debug)]
#[command(
    name = "exceptional",
    version,
    about = "Exact checks for exceptional-group constructions"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Report format.
    #[arg(long, value_enum, default_value_t = OutFormat::Json, global = true)]
    format: OutFormat,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Omit elapsed times so identical runs give identical output.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Worker threads for the census suites; 1 runs sequentially.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Tolerance for numeric Satake comparisons.
    #[arg(long, global = true, default_value_t = exceptional::satake::TOLERANCE)]
    tolerance: f64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stored table constants next to the values derived from root data.
    Tables,
    /// Exponent of the modulus character of a maximal parabolic.
    Rho {
        #[arg(long)]
        group: String,
        /// heisenberg, siegel, amber, or the 1-based removed node.
        #[arg(long)]
        parabolic: String,
    },
    /// Number of W_L double cosets in W for a maximal Levi.
    Doublecosets {
        #[arg(long)]
        group: String,
        /// A Levi type such as A2+A2, or 1-based kept nodes such as 1,2.
        #[arg(long)]
        levi: String,
    },
    /// Finite-field census suites.
    Census {
        /// quadric, pairs (prop42), triples (prop52), singular-family,
        /// amber (prop72), orbit or all.
        suite: String,
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Allow suites that take minutes.
        #[arg(long)]
        slow: bool,
        /// Algebra dimension for the orbit and amber suites.
        #[arg(long, default_value_t = 1)]
        dimd: usize,
        /// Sample count for sampled triple censuses.
        #[arg(long)]
        samples: Option<u64>,
        /// Largest quadric rank.
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Orbit of the highest-weight line and its four-class partition.
    Orbit {
        #[arg(long)]
        dimd: usize,
        #[arg(long)]
        q: u64,
    },
    /// Lift maps on Satake parameters; prints JSON.
    Lift {
        #[arg(value_enum)]
        map: LiftMap,
        /// Comma-separated exact rationals: q-exponents (a2g2, g2c3, g2f4,
        /// gl2), a group label (subregular) or n (so3).
        params: String,
        /// Comma-separated phases in [0, 1), one per parameter.
        #[arg(long)]
        phases: Option<String>,
        #[arg(long, default_value_t = 5.0)]
        q: f64,
        /// q-exponent of the SO3 parameter for g2f4; the trivial parameter when absent.
        #[arg(long, allow_hyphen_values = true)]
        so3: Option<String>,
        /// Report eigenvalues as complex numbers.
        #[arg(long)]
        numeric: bool,
    },
    /// Identity checks on the algebra modules: composition, jordan, fts, satake or all.
    Check { suite: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LiftMap {
    A2g2,
    G2c3,
    G2f4,
    Subregular,
    So3,
    Gl2,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownLabel(_)
            | Error::InvalidArgument(_)
            | Error::TooLarge(_)
            | Error::BadCharacteristic(_)
            | Error::UnsupportedAlgebraDim(_)
            | Error::InvalidModulus(_)
            | Error::BadCompositionDim(_)
            | Error::NoBranchVertex(_)
            | Error::NotUnitary
            | Error::ProductNotOne
            | Error::DivisionByZero => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            eprintln!("\nreport schema (version {SCHEMA_VERSION}):\n{REPORT_SCHEMA}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}\n\nreport schema (version {SCHEMA_VERSION}):\n{REPORT_SCHEMA}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

fn usage(m: impl Into<String>) -> Failure {
    Failure::Usage(m.into())
}

fn run(cli: Cli) -> Outcome {
    let g = cli.global;
    let timed = !g.no_timing;
    let workers = match g.workers {
        Some(n) => Workers::new(n)?,
        None => Workers::new(std::thread::available_parallelism().map_or(1, |n| n.get()))?,
    };
    let reports = match cli.command {
        Command::Tables => vec![tables_report()?],
        Command::Rho { group, parabolic } => vec![rho_report(&group, &parabolic)?],
        Command::Doublecosets { group, levi } => vec![doublecoset_report(&group, &levi)?],
        Command::Census {
            suite,
            q,
            slow,
            dimd,
            samples,
            max_rank,
        } => census_reports(&suite, q, slow, dimd, samples, max_rank, &workers, timed)?,
        Command::Orbit { dimd, q } => vec![orbit_census(dimd, q, &workers, timed)?],
        Command::Lift {
            map,
            params,
            phases,
            q,
            so3,
            numeric,
        } => {
            return lift(
                map,
                &params,
                phases.as_deref(),
                q,
                so3.as_deref(),
                numeric,
                g.tolerance,
                g.out.as_deref(),
            );
        }
        Command::Check { suite } => run_check(&suite, timed)?,
    };
    let format = match g.format {
        OutFormat::Json => Format::Json,
        OutFormat::Tsv => Format::Tsv,
    };
    emit_report(&reports, format, g.out.as_deref())?;
    Ok(reports.iter().all(CensusReport::pass))
}

fn tables_report() -> Result<CensusReport, Failure> {
    let mut rep = CensusReport::new("tables");
    let entries = paper_constant_tables()?;
    let mut errata = 0;
    for e in &entries {
        let provenance = match &e.erratum {
            Some(note) if !e.agrees() => {
                errata += 1;
                format!("{} [erratum: {note}]", e.anchor)
            }
            _ => e.anchor.clone(),
        };
        let actual = e.computed.clone().unwrap_or_else(|| e.stored.clone());
        rep.check(
            &format!("{}/{}/{}", e.table, e.row, e.key),
            &e.stored,
            &provenance,
            actual,
            e.accepted(),
        );
    }
    rep.count("entries", entries.len() as u64);
    rep.count(
        "derived",
        entries.iter().filter(|e| e.computed.is_some()).count() as u64,
    );
    rep.count("errata", errata);
    Ok(rep)
}

fn rho_report(group: &str, parabolic: &str) -> Result<CensusReport, Failure> {
    let d = RootDatum::build(group)?;
    let rat = |v: &[i64]| -> Vec<BigRational> {
        v.iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect()
    };
    let (spec, det, det_name, expected): (
        ParabolicSpec,
        Vec<BigRational>,
        String,
        Option<(&str, &str)>,
    ) = match parabolic.to_ascii_lowercase().as_str() {
        "heisenberg" => {
            let h = heisenberg_parabolic(&d)?;
            let exp = (d.label() == "G2").then_some(("full-sum", "3"));
            (
                h.parabolic,
                rat(d.highest_root()),
                "highest root".into(),
                exp,
            )
        }
        "siegel" => {
            if !d.label().starts_with('C') {
                return Err(usage(format!(
                    "siegel parabolic needs type C, got {}",
                    d.label()
                )));
            }
            let k = d.rank() - 1;
            let exp = (d.label() == "C3").then_some(("half-sum", "2"));
            (
                ParabolicSpec::maximal(&d, k),
                d.fundamental_weight(k),
                format!("omega_{}", k + 1),
                exp,
            )
        }
        "amber" => {
            if d.label() != "F4" {
                return Err(usage(format!(
                    "the amber parabolic is defined for F4, got {}",
                    d.label()
                )));
            }
            (
                ParabolicSpec::maximal(&d, 2),
                d.fundamental_weight(2),
                "omega_3".into(),
                Some(("full-sum", "7")),
            )
        }
        other => {
            let k: usize = other
                .parse()
                .ok()
                .filter(|k| (1..=d.rank()).contains(k))
                .ok_or_else(|| {
                    usage(format!(
                        "parabolic must be heisenberg, siegel, amber or a node 1..={}",
                        d.rank()
                    ))
                })?;
            (
                ParabolicSpec::maximal(&d, k - 1),
                d.fundamental_weight(k - 1),
                format!("omega_{k}"),
                None,
            )
        }
    };
    let (full, half) = nilradical_char_exponent(&d, &spec, &det)?;
    let removed: Vec<String> = spec.removed.iter().map(usize::to_string).collect();
    let mut rep = CensusReport::new("rho")
        .param("group", d.label())
        .param("parabolic", parabolic)
        .param("removed_node", removed.join(","))
        .param("det", det_name);
    let (full, half) = (rational_to_string(&full), rational_to_string(&half));
    match expected {
        Some((conv, value)) => {
            let actual = if conv == "full-sum" { &full } else { &half };
            rep.check_eq(conv, value, "stated modulus-character exponent", actual);
            let other = if conv == "full-sum" {
                ("half-sum", &half)
            } else {
                ("full-sum", &full)
            };
            rep.check(other.0, "-", "derived", other.1, true);
        }
        None => {
            rep.check("full-sum", "-", "derived", &full, true);
            rep.check("half-sum", "-", "derived", &half, true);
        }
    }
    Ok(rep)
}

fn doublecoset_report(group: &str, levi: &str) -> Result<CensusReport, Failure> {
    let n = double_coset_count(group, levi)?;
    let d = RootDatum::build(group)?;
    let known = [("C3", "A2"), ("A5", "A2+A2"), ("D6", "A5"), ("E7", "E6")];
    let norm = |s: &str| s.replace(' ', "").to_ascii_uppercase();
    let mut rep = CensusReport::new("doublecosets")
        .param("group", d.label())
        .param("levi", levi);
    rep.count("double_cosets", n as u64);
    if known
        .iter()
        .any(|(g, l)| norm(g) == norm(&d.label()) && norm(l) == norm(levi))
    {
        rep.check_eq("W_L double cosets", 4, "the Levi has 4 orbits", n);
    } else {
        rep.check("W_L double cosets", "-", "derived", n, true);
    }
    Ok(rep)
}

#[allow(clippy::too_many_arguments)]
fn census_reports(
    suite: &str,
    q: u64,
    slow: bool,
    dimd: usize,
    samples: Option<u64>,
    max_rank: usize,
    workers: &Workers,
    timed: bool,
) -> Result<Vec<CensusReport>, Failure> {
    let need_slow = |what: &str| -> Result<(), Failure> {
        if slow {
            Ok(())
        } else {
            Err(usage(format!("{what} takes minutes; pass --slow")))
        }
    };
    let rep = match suite {
        "quadric" => quadric_census(q, max_rank, workers, timed)?,
        "pairs" | "prop42" => {
            if q >= 3 {
                need_slow("the pair census at q >= 3")?;
            }
            pair_census(q, workers, timed)?
        }
        "triples" | "prop52" => {
            if q >= 3 {
                need_slow("the triple census at q >= 3")?;
            }
            let samples = if q >= 3 { Some(samples.unwrap_or(1 << 20)) } else { samples };
            triple_census(q, samples, workers, timed)?
        }
        "singular-family" => singular_family_census(q, workers, timed)?,
        "amber" | "prop72" => {
            if dimd >= 2 {
                need_slow("the amber census at dim 2")?;
            }
            amber_census(dimd, q, workers, timed)?
        }
        "orbit" => orbit_census(dimd, q, workers, timed)?,
        "all" => {
            let cfg = CensusConfig { slow, workers: workers.clone(), timed };
            return Ok(run_all(&cfg)?);
        }
        other => {
            return Err(usage(format!(
                "unknown census suite {other:?}; expected quadric, pairs, triples, singular-family, amber, orbit or all"
            )))
        }
    };
    Ok(vec![rep])
}

fn split(s: &str) -> Vec<&str> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .collect()
}

fn exact_params(params: &str, phases: Option<&str>) -> Result<Vec<ExactValue>, Failure> {
    let exps: Vec<BigRational> = split(params)
        .into_iter()
        .map(parse_rational)
        .collect::<Result<_, _>>()?;
    let phases: Vec<BigRational> = match phases {
        Some(p) => split(p)
            .into_iter()
            .map(parse_rational)
            .collect::<Result<_, _>>()?,
        None => vec![BigRational::from_integer(0.into()); exps.len()],
    };
    if phases.len() != exps.len() {
        return Err(usage(format!(
            "{} exponents but {} phases",
            exps.len(),
            phases.len()
        )));
    }
    Ok(exps
        .into_iter()
        .zip(phases)
        .map(|(e, p)| ExactValue::new(e, p))
        .collect())
}

fn sl3_triple(params: &str, phases: Option<&str>) -> Result<[UnramifiedValue; 3], Failure> {
    let v = exact_params(params, phases)?;
    let [a, b, c]: [ExactValue; 3] = v
        .try_into()
        .map_err(|_| usage("expected three SL3 parameters"))?;
    Ok([a, b, c].map(UnramifiedValue::Exact))
}

fn class_json(c: &SatakeClass, numeric: bool, tol: f64) -> serde_json::Value {
    let c = if numeric { c.to_numeric() } else { c.clone() };
    json!({
        "group": c.group(),
        "q": c.q(),
        "exact": c.is_exact(),
        "dimension": c.len(),
        "inversion_closed": c.is_inversion_closed(tol),
        "torus": c.torus(),
        "values": c.values(),
    })
}

#[allow(clippy::too_many_arguments)]
fn lift(
    map: LiftMap,
    params: &str,
    phases: Option<&str>,
    q: f64,
    so3: Option<&str>,
    numeric: bool,
    tol: f64,
    out: Option<&std::path::Path>,
) -> Outcome {
    if q.is_nan() || q <= 1.0 {
        return Err(usage("q must exceed 1"));
    }
    let (value, ok) = match map {
        LiftMap::A2g2 => {
            let c = phi_a2_g2(sl3_triple(params, phases)?, q)?;
            (
                json!({ "map": "SL3 -> G2", "output": class_json(&c, numeric, tol) }),
                true,
            )
        }
        LiftMap::G2c3 => {
            let g = phi_a2_g2(sl3_triple(params, phases)?, q)?;
            let s = phi_g2_b3(&g)?;
            let contains = s.without_one(tol).is_some();
            (
                json!({ "map": "G2 -> Spin7", "input": class_json(&g, numeric, tol), "output": class_json(&s, numeric, tol), "contains_one": contains }),
                contains,
            )
        }
        LiftMap::G2f4 => {
            let g = phi_a2_g2(sl3_triple(params, phases)?, q)?;
            let r = match so3 {
                Some(e) => so3_class(UnramifiedValue::q_power(parse_rational(e)?), q),
                None => trivial_so3_param(q),
            };
            let f = psi_g2a1_f4(&g, &r)?;
            let closed = f.is_inversion_closed(tol);
            (
                json!({ "map": "G2 x SO3 -> F4", "g2": class_json(&g, numeric, tol), "so3": class_json(&r, numeric, tol), "output": class_json(&f, numeric, tol) }),
                closed,
            )
        }
        LiftMap::Subregular => {
            let d = RootDatum::build(params.trim())?;
            let s = subregular_param(&d)?;
            (
                json!({ "map": "subregular", "group": d.label(), "simple_root_values": s }),
                true,
            )
        }
        LiftMap::So3 => {
            let n: u32 = params
                .trim()
                .parse()
                .map_err(|_| usage("so3 expects n, an integer at least 2"))?;
            let unitary = so3
                .map(parse_rational)
                .transpose()?
                .is_none_or(|e| e == BigRational::from_integer(0.into()));
            let rec = so3_bookkeeping(n, unitary)?;
            (json!({ "map": "SO3 -> SO(n+1)", "record": rec }), true)
        }
        LiftMap::Gl2 => {
            let v = exact_params(params, phases)?;
            let [chi, mu]: [ExactValue; 2] = v
                .try_into()
                .map_err(|_| usage("gl2 expects two parameters"))?;
            let (chi, mu) = (UnramifiedValue::Exact(chi), UnramifiedValue::Exact(mu));
            let m = thm44_param_map(&chi, &mu, q, false)?;
            let t = t1_t2_scalars(&chi, &mu, q);
            let ok = t.all_hold();
            (
                json!({ "map": "GL2 parameter", "parameters": m, "hecke": t }),
                ok,
            )
        }
    };
    let text = serde_json::to_string_pretty(&value).map_err(|e| Failure::Runtime(e.to_string()))?;
    match out {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Failure::Runtime(format!("{}: {e}", p.display())))?,
        None => println!("{text}"),
    }
    Ok(ok)
}
