//! `altruns`: compute alternating-run polynomials of signed permutation
//! classes, inspect sign-flip orbits, and run the verification suites.
//!
//! Exit status: 0 success, 1 a verification check failed, 2 usage error,
//! 3 resource cap exceeded.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use altruns_core::enumerate::{enumerate_transversal, merge};
use altruns_core::verify::{self, VerificationReport};
use altruns_core::{
    generator_set, orbit_min_runs, Backend, BigInt, ClassSelector, EngineError, EnumerationJob,
    Family, IntPolynomial, RunOutcome, ShardSpec, SignedPermutation, VerifyError, VerifyOptions,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

/// Random elements per sampled lemma check.
const LEMMA_SAMPLES: u64 = 100_000;

#[derive(Parser, Debug)]
#[command(
    name = "altruns",
    version,
    about = "Alternating runs of signed permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run polynomial of one class.
    Poly(PolyArgs),
    /// List the sign-flip orbits of a class with their generating functions.
    Orbits(OrbitsArgs),
    /// Run verification checks.
    Verify(VerifyArgs),
    /// Time the brute-force and orbit backends against each other.
    Bench(BenchArgs),
    /// Statistics of a single signed permutation.
    Stat(StatArgs),
}

#[derive(Args, Debug)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Worker threads.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    /// Replace the default resource cap on n.
    #[arg(long)]
    cap_override: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[arg(long)]
    n: usize,
    /// Selector token such as `D:pos:even`, or `A` for unsigned permutations.
    #[arg(long = "class", default_value = "B:any:any")]
    family: Family,
    #[arg(long, default_value = "brute")]
    backend: Backend,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct OrbitsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long = "class", default_value = "B:pos:any")]
    selector: ClassSelector,
    /// Print at most this many orbits.
    #[arg(long)]
    limit: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    Lemmas,
    Parity,
    OrbitGf,
    Divisibility,
    Moments,
    Symmetries,
    Bona,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Run every check for n = 1..=n-max.
    #[arg(long, conflicts_with = "check")]
    all: bool,
    /// Check to run; may be repeated.
    #[arg(long, value_enum)]
    check: Vec<Check>,
    /// A single n (instead of the range 1..=n-max).
    #[arg(long, conflicts_with = "n_max")]
    n: Option<usize>,
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    /// Moment exponent; required by the moments check.
    #[arg(long)]
    k: Option<u32>,
    /// Restrict divisibility and moments to one family.
    #[arg(long = "class")]
    family: Option<Family>,
    /// Seed for sampled lemma checks beyond the brute-force cap.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long = "class", default_value = "B:pos:any")]
    selector: ClassSelector,
    /// Shard counts to time; each is merged and compared.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    shards: Vec<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct StatArgs {
    /// Window such as `5,1,4,-3,-6,2`.
    #[arg(allow_hyphen_values = true)]
    window: SignedPermutation,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

/// Errors that end the program with a non-zero status.
enum Failure {
    Usage(String),
    Cap(String),
    ChecksFailed,
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::ResourceCap { .. } => Failure::Cap(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Engine(inner) => inner.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Poly(a) => cmd_poly(a),
        Command::Orbits(a) => cmd_orbits(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Stat(a) => cmd_stat(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::ChecksFailed) => ExitCode::from(EXIT_FAILED),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_CAP)
        }
    }
}

fn job(n: usize, family: impl Into<Family>, backend: Backend, common: &Common) -> EnumerationJob {
    let job = EnumerationJob::new(n, family, backend);
    match common.cap_override {
        Some(cap) => job.with_cap(cap),
        None => job,
    }
}

fn order_json(p: &IntPolynomial) -> Value {
    match p.one_plus_t_order() {
        Ok(order) => json!(order),
        Err(_) => Value::Null,
    }
}

fn order_text(p: &IntPolynomial) -> String {
    p.one_plus_t_order()
        .map_or_else(|_| "infinite (empty class)".to_string(), |o| o.to_string())
}

fn coeff_list(p: &IntPolynomial) -> String {
    let items: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn csv_rows(p: &IntPolynomial) -> String {
    let mut out = String::from("exponent,coefficient\n");
    for (e, c) in p.coeffs().iter().enumerate() {
        out.push_str(&format!("{e},{c}\n"));
    }
    out
}

fn millis(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn cmd_poly(a: PolyArgs) -> Result<(), Failure> {
    let start = Instant::now();
    let outcome: RunOutcome<BigInt> =
        job(a.n, a.family, a.backend, &a.common).run_parallel(a.common.jobs as usize)?;
    let elapsed = start.elapsed();
    let p = &outcome.polynomial;
    match a.common.format {
        Format::Plain => {
            println!("class        {}", a.family);
            println!("n            {}", a.n);
            println!("backend      {}", a.backend);
            println!("coeffs       {}", coeff_list(p));
            println!("polynomial   {p}");
            println!("cardinality  {}", p.total());
            println!("order        {}", order_text(p));
            println!("visited      {}", outcome.visited);
            println!("elapsed_ms   {:.3}", millis(elapsed));
        }
        Format::Json => {
            let doc = json!({
                "backend": a.backend.to_string(),
                "cardinality": p.total().to_string(),
                "class": a.family.to_string(),
                "elapsed_ms": millis(elapsed),
                "n": a.n,
                "one_plus_t_order": order_json(p),
                "polynomial": p,
                "visited": outcome.visited.to_string(),
            });
            println!("{doc}");
        }
        Format::Csv => print!("{}", csv_rows(p)),
    }
    Ok(())
}

fn cmd_orbits(a: OrbitsArgs) -> Result<(), Failure> {
    // Same admissibility rules as the orbit backend.
    job(a.n, a.selector, Backend::Orbit, &a.common)
        .run::<i64>()
        .map(|_| ())?;
    let gens = generator_set(a.n);
    let reps = enumerate_transversal(&a.selector, &gens).take(a.limit.unwrap_or(usize::MAX));
    let summaries: Vec<_> = reps
        .map(|r| orbit_min_runs(&r, &gens).expect("transversal elements are canonical"))
        .collect();
    match a.common.format {
        Format::Plain => {
            println!(
                "class {}  n = {}  generators {:?}  orbit size {}",
                a.selector,
                a.n,
                gens.positions(),
                gens.orbit_size()
            );
            for s in &summaries {
                let poly: IntPolynomial = s.polynomial();
                println!(
                    "{:<24} a = {:<3} minimizer {:<24} {poly}",
                    s.representative.to_string(),
                    s.min_runs,
                    s.minimizer().to_string()
                );
            }
            println!("{} orbits", summaries.len());
        }
        Format::Json => {
            let orbits: Vec<Value> = summaries
                .iter()
                .map(|s| {
                    json!({
                        "min_runs": s.min_runs,
                        "minimizer": s.minimizer(),
                        "polynomial": s.polynomial::<BigInt>(),
                        "representative": s.representative,
                    })
                })
                .collect();
            let doc = json!({
                "class": a.selector.to_string(),
                "generators": gens.positions(),
                "m": gens.m(),
                "n": a.n,
                "orbits": orbits,
            });
            println!("{doc}");
        }
        Format::Csv => {
            println!("representative,min_runs,m,minimizer");
            for s in &summaries {
                println!(
                    "\"{}\",{},{},\"{}\"",
                    s.representative,
                    s.min_runs,
                    s.m,
                    s.minimizer()
                );
            }
        }
    }
    Ok(())
}

fn selected_checks(a: &VerifyArgs) -> Result<Vec<Check>, Failure> {
    if a.all {
        return Ok(Vec::new());
    }
    if a.check.is_empty() {
        return Err(Failure::Usage("pass --all or at least one --check".into()));
    }
    Ok(a.check.clone())
}

fn families(selected: Option<Family>) -> Vec<Family> {
    match selected {
        Some(f) => vec![f],
        None => std::iter::once(Family::TypeA)
            .chain(ClassSelector::standard().into_iter().map(Family::Signed))
            .collect(),
    }
}

fn moment_selectors(selected: Option<Family>) -> Result<Vec<ClassSelector>, Failure> {
    match selected {
        None => Ok(ClassSelector::standard()),
        Some(Family::Signed(s)) => Ok(vec![s]),
        Some(Family::TypeA) => Err(Failure::Usage(
            "moments are checked on signed classes only".into(),
        )),
    }
}

fn run_check(
    check: Check,
    ns: &[usize],
    a: &VerifyArgs,
    opts: &VerifyOptions,
) -> Result<Vec<VerificationReport>, Failure> {
    let mut out = Vec::new();
    match check {
        Check::Bona => out.push(verify::check_bona_remark()),
        Check::Moments => {
            let k =
                a.k.ok_or_else(|| Failure::Usage("the moments check needs --k".into()))?;
            let selectors = moment_selectors(a.family)?;
            // With an explicit n the precondition is enforced; over a range,
            // only the admissible n are visited.
            let admissible: Vec<usize> = if a.n.is_some() {
                ns.to_vec()
            } else {
                ns.iter()
                    .copied()
                    .filter(|&n| n >= 2 * k as usize + 3)
                    .collect()
            };
            for n in admissible {
                for s in &selectors {
                    out.push(verify::check_moments(n, k, s, opts)?);
                }
            }
        }
        _ => {
            for &n in ns {
                match check {
                    Check::Lemmas if n > opts.brute_cap => out.push(
                        verify::check_lemmas_action_sampled(n, LEMMA_SAMPLES, a.seed),
                    ),
                    Check::Lemmas => out.push(verify::check_lemmas_action(n, opts)?),
                    Check::Parity => out.push(verify::check_parity_lemmas(n, opts)?),
                    Check::OrbitGf => out.push(verify::check_orbit_gf(n, opts)?),
                    Check::Divisibility => {
                        for f in families(a.family) {
                            out.push(verify::check_divisibility(n, f, opts)?);
                        }
                    }
                    Check::Symmetries => out.push(verify::check_symmetries(n, opts)?),
                    Check::Bona | Check::Moments => unreachable!(),
                }
            }
        }
    }
    Ok(out)
}

fn cmd_verify(a: VerifyArgs) -> Result<(), Failure> {
    let checks = selected_checks(&a)?;
    let mut opts = VerifyOptions {
        jobs: a.common.jobs as usize,
        ..VerifyOptions::default()
    };
    if let Some(cap) = a.common.cap_override {
        opts.brute_cap = cap;
        opts.orbit_cap = cap;
    }
    let ns: Vec<usize> = match a.n {
        Some(0) => return Err(Failure::Usage("n must be at least 1".into())),
        Some(n) => vec![n],
        None => (1..=a.n_max).collect(),
    };
    let reports = if a.all {
        verify::run_all(a.n_max, &opts)?
    } else {
        let mut reports = Vec::new();
        for check in checks {
            reports.extend(run_check(check, &ns, &a, &opts)?);
        }
        reports
    };
    match a.common.format {
        Format::Plain => {
            print!("{}", verify::render_table(&reports));
            for r in reports.iter().filter(|r| r.witness.is_some()) {
                let w: Vec<String> = r
                    .witness
                    .iter()
                    .flatten()
                    .map(ToString::to_string)
                    .collect();
                println!(
                    "witness [{}] {}: {}",
                    r.check_name,
                    r.parameter_summary(),
                    w.join(" | ")
                );
            }
        }
        Format::Json => {
            for r in &reports {
                println!("{}", r.to_json());
            }
        }
        Format::Csv => {
            println!("status,check,parameters,summary");
            for r in &reports {
                println!(
                    "{},{},\"{}\",\"{}\"",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.check_name,
                    r.parameter_summary(),
                    verify::summarize(r).replace('"', "\"\"")
                );
            }
        }
    }
    if verify::all_passed(&reports) {
        Ok(())
    } else {
        Err(Failure::ChecksFailed)
    }
}

struct BenchRow {
    shards: usize,
    brute_ms: f64,
    orbit_ms: f64,
    brute_visits: u128,
    orbit_visits: u128,
    equal: bool,
}

fn timed_sharded(
    n: usize,
    selector: ClassSelector,
    backend: Backend,
    shards: usize,
    common: &Common,
) -> Result<(RunOutcome<BigInt>, f64), Failure> {
    let start = Instant::now();
    let mut parts = Vec::with_capacity(shards);
    for i in 0..shards {
        let j = job(n, selector, backend, common).with_shard(ShardSpec::new(i, shards)?);
        parts.push(j.run_parallel::<BigInt>(common.jobs as usize)?);
    }
    Ok((merge(parts), millis(start.elapsed())))
}

fn cmd_bench(a: BenchArgs) -> Result<(), Failure> {
    if a.shards.contains(&0) {
        return Err(Failure::Usage("shard counts must be at least 1".into()));
    }
    let m = generator_set(a.n.max(1)).m();
    let mut rows = Vec::new();
    let mut reference: Option<IntPolynomial> = None;
    for &shards in &a.shards {
        let (brute, brute_ms) = timed_sharded(a.n, a.selector, Backend::Brute, shards, &a.common)?;
        let (orbit, orbit_ms) = timed_sharded(a.n, a.selector, Backend::Orbit, shards, &a.common)?;
        let reference = reference.get_or_insert_with(|| brute.polynomial.clone());
        rows.push(BenchRow {
            shards,
            brute_ms,
            orbit_ms,
            brute_visits: brute.visited,
            orbit_visits: orbit.visited,
            equal: brute.polynomial == orbit.polynomial && &brute.polynomial == reference,
        });
    }
    let ratio = 1u128 << m;
    match a.common.format {
        Format::Plain => {
            println!(
                "class {}  n = {}  m = {}  expected visit ratio {}",
                a.selector, a.n, m, ratio
            );
            println!(
                "{:>6}  {:>12}  {:>12}  {:>12}  {:>12}  {:>8}  equal",
                "shards", "brute_ms", "orbit_ms", "brute_visits", "orbit_visits", "ratio"
            );
            for r in &rows {
                println!(
                    "{:>6}  {:>12.3}  {:>12.3}  {:>12}  {:>12}  {:>8}  {}",
                    r.shards,
                    r.brute_ms,
                    r.orbit_ms,
                    r.brute_visits,
                    r.orbit_visits,
                    visit_ratio(r),
                    r.equal
                );
            }
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "brute_ms": r.brute_ms,
                        "brute_visits": r.brute_visits.to_string(),
                        "equal": r.equal,
                        "orbit_ms": r.orbit_ms,
                        "orbit_visits": r.orbit_visits.to_string(),
                        "shards": r.shards,
                        "visit_ratio": visit_ratio(r),
                    })
                })
                .collect();
            let doc = json!({
                "class": a.selector.to_string(),
                "expected_visit_ratio": ratio.to_string(),
                "m": m,
                "n": a.n,
                "rows": rows,
            });
            println!("{doc}");
        }
        Format::Csv => {
            println!("shards,brute_ms,orbit_ms,brute_visits,orbit_visits,visit_ratio,equal");
            for r in &rows {
                println!(
                    "{},{:.3},{:.3},{},{},{},{}",
                    r.shards,
                    r.brute_ms,
                    r.orbit_ms,
                    r.brute_visits,
                    r.orbit_visits,
                    visit_ratio(r),
                    r.equal
                );
            }
        }
    }
    if rows.iter().all(|r| r.equal) {
        Ok(())
    } else {
        Err(Failure::ChecksFailed)
    }
}

/// Brute visits over orbit visits, or `-` for an empty class.
fn visit_ratio(r: &BenchRow) -> String {
    if r.orbit_visits == 0 {
        "-".to_string()
    } else if r.brute_visits.is_multiple_of(r.orbit_visits) {
        (r.brute_visits / r.orbit_visits).to_string()
    } else {
        format!("{:.3}", r.brute_visits as f64 / r.orbit_visits as f64)
    }
}

fn cmd_stat(a: StatArgs) -> Result<(), Failure> {
    let pi = &a.window;
    let altruns_a = pi.altruns_a().ok();
    let classes: Vec<String> = ClassSelector::all()
        .into_iter()
        .filter(|s| s.contains(pi))
        .map(|s| s.to_string())
        .collect();
    match a.format {
        Format::Plain => {
            println!("window    {pi}");
            println!("altruns_B {}", pi.altruns_b());
            match altruns_a {
                Some(r) => println!("altruns_A {r}"),
                None => println!("altruns_A - (window has negative entries)"),
            }
            println!("inv_A     {}", pi.inv_a());
            println!("inv_B     {}", pi.inv_b());
            println!("inv_D     {}", pi.inv_d());
            println!("negs      {}", pi.negs_count());
            println!("classes   {}", classes.join(" "));
        }
        Format::Json => {
            let doc = json!({
                "altruns_a": altruns_a,
                "altruns_b": pi.altruns_b(),
                "classes": classes,
                "inv_a": pi.inv_a(),
                "inv_b": pi.inv_b(),
                "inv_d": pi.inv_d(),
                "negs": pi.negs_count(),
                "window": pi,
            });
            println!("{doc}");
        }
        Format::Csv => {
            println!("window,altruns_B,altruns_A,inv_A,inv_B,inv_D,negs,classes");
            println!(
                "\"{pi}\",{},{},{},{},{},{},\"{}\"",
                pi.altruns_b(),
                altruns_a.map_or_else(String::new, |r| r.to_string()),
                pi.inv_a(),
                pi.inv_b(),
                pi.inv_d(),
                pi.negs_count(),
                classes.join(" ")
            );
        }
    }
    Ok(())
}
