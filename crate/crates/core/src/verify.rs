//! Named, exhaustive checks of the sign-flip lemmas, the orbit generating
//! function, the `(1+t)^m` divisibility results, the moment identities, the
//! first-sign symmetries and the complementation counterexample.
//!
//! Every check returns a [`VerificationReport`]. A failed report always
//! carries either a witness (one or two windows) or a numeric discrepancy in
//! its details.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::action::{
    bona_complement, flip_suffix, generator_set, orbit, orbit_min_runs, sgn_flip, ActionError,
    GeneratorSet,
};
use crate::class::{ClassSelector, FirstSign, Group, LengthParity};
use crate::enumerate::{
    enumerate_class, enumerate_transversal, Backend, EngineError, EnumerationJob, Family,
    DEFAULT_BRUTE_CAP, DEFAULT_ORBIT_CAP,
};
use crate::perm::{negs_count, SignedPermutation};
use crate::poly::Polynomial;
use crate::stats::{altruns_b, inv_b, inv_d};
use crate::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Worker threads for class enumeration.
    pub jobs: usize,
    pub brute_cap: usize,
    pub orbit_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            jobs: 1,
            brute_cap: DEFAULT_BRUTE_CAP,
            orbit_cap: DEFAULT_ORBIT_CAP,
        }
    }
}

impl VerifyOptions {
    fn polynomial(
        &self,
        n: usize,
        family: impl Into<Family>,
        backend: Backend,
    ) -> Result<(IntPolynomial, u128), VerifyError> {
        let cap = match backend {
            Backend::Brute => self.brute_cap,
            Backend::Orbit => self.orbit_cap,
        };
        let outcome = EnumerationJob::new(n, family, backend)
            .with_cap(cap)
            .run_parallel(self.jobs)?;
        Ok((outcome.polynomial, outcome.visited))
    }

    fn exhaustive_guard(&self, n: usize) -> Result<(), VerifyError> {
        if n > self.brute_cap {
            return Err(EngineError::ResourceCap {
                n,
                cap: self.brute_cap,
            }
            .into());
        }
        Ok(())
    }
}

/// Outcome of one named check. Fields are declared in sorted order and the
/// maps are ordered, so the JSON form is diff-stable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub details: BTreeMap<String, Value>,
    pub parameters: BTreeMap<String, String>,
    pub passed: bool,
    pub witness: Option<Vec<SignedPermutation>>,
}

impl VerificationReport {
    fn new(check_name: &str) -> Self {
        Self {
            check_name: check_name.to_string(),
            details: BTreeMap::new(),
            parameters: BTreeMap::new(),
            passed: true,
            witness: None,
        }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    /// Records a failure; the first witness seen is kept.
    fn fail(&mut self, witness: Option<Vec<SignedPermutation>>) {
        self.passed = false;
        if self.witness.is_none() {
            self.witness = witness;
        }
    }

    /// One-line summary of the parameters, e.g. `class=D:pos:even n=6`.
    pub fn parameter_summary(&self) -> String {
        self.parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn big_json(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

fn poly_json(p: &IntPolynomial) -> Value {
    serde_json::to_value(p).expect("polynomial serializes")
}

/// Counts checks and violations for one property.
#[derive(Default)]
struct Tracker {
    checked: u64,
    violations: u64,
}

impl Tracker {
    fn observe(&mut self, ok: bool) -> bool {
        self.checked += 1;
        if !ok {
            self.violations += 1;
        }
        ok
    }

    fn json(&self) -> Value {
        json!({ "checked": self.checked, "violations": self.violations })
    }
}

fn window(values: &[i32]) -> SignedPermutation {
    SignedPermutation::from_trusted(values.to_vec())
}

/// The four sign-flip properties on one window, recorded into the trackers.
/// Returns a witness pair for the first violated property.
struct ActionLemmas {
    involution: Tracker,
    commutation: Tracker,
    run_change: Tracker,
    consistency: Tracker,
}

impl ActionLemmas {
    fn new() -> Self {
        Self {
            involution: Tracker::default(),
            commutation: Tracker::default(),
            run_change: Tracker::default(),
            consistency: Tracker::default(),
        }
    }

    fn visit(&mut self, values: &[i32], gens: &GeneratorSet) -> Option<Vec<SignedPermutation>> {
        let n = values.len();
        let mut witness = None;
        let mut note = |w: Option<Vec<SignedPermutation>>| {
            if witness.is_none() {
                witness = w;
            }
        };
        let mut a = values.to_vec();
        let mut b = values.to_vec();
        for k in 1..=n {
            flip_suffix(&mut a, k);
            flip_suffix(&mut a, k);
            if !self.involution.observe(a == values) {
                note(Some(vec![window(values), window(&a)]));
                a.copy_from_slice(values);
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                a.copy_from_slice(values);
                b.copy_from_slice(values);
                flip_suffix(&mut a, j);
                flip_suffix(&mut a, i);
                flip_suffix(&mut b, i);
                flip_suffix(&mut b, j);
                if !self.commutation.observe(a == b) {
                    note(Some(vec![window(values), window(&a), window(&b)]));
                }
            }
        }
        let runs = altruns_b(values);
        for i in 2..n {
            a.copy_from_slice(values);
            flip_suffix(&mut a, i);
            let flipped = altruns_b(&a);
            if !self.run_change.observe(flipped.abs_diff(runs) == 1) {
                note(Some(vec![window(values), window(&a)]));
            }
        }
        for &i in gens.positions() {
            a.copy_from_slice(values);
            flip_suffix(&mut a, i);
            if altruns_b(&a) != runs + 1 {
                continue;
            }
            for &j in gens.positions() {
                if j == i {
                    continue;
                }
                a.copy_from_slice(values);
                flip_suffix(&mut a, j);
                let base = altruns_b(&a);
                flip_suffix(&mut a, i);
                if !self.consistency.observe(altruns_b(&a) == base + 1) {
                    note(Some(vec![window(values), window(&a)]));
                }
            }
        }
        witness
    }

    fn finish(self, report: &mut VerificationReport) {
        report.detail("involution", self.involution.json());
        report.detail("commutation", self.commutation.json());
        report.detail("run_change", self.run_change.json());
        report.detail("consistency", self.consistency.json());
    }
}

/// Involution, commutation, `|Δ runs| = 1` and consistency over all of
/// `B_n`.
pub fn check_lemmas_action(
    n: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    opts.exhaustive_guard(n)?;
    let mut report = VerificationReport::new("action_lemmas")
        .param("n", n)
        .param("mode", "exhaustive");
    let gens = generator_set(n);
    let mut lemmas = ActionLemmas::new();
    let mut elements = 0u64;
    for pi in enumerate_class(n, &ClassSelector::all_of_b()) {
        elements += 1;
        if let Some(w) = lemmas.visit(pi.values(), &gens) {
            report.fail(Some(w));
        }
    }
    report.detail("elements", elements);
    lemmas.finish(&mut report);
    Ok(report)
}

/// The same four properties on `samples` uniformly random elements of
/// `B_n`, for `n` beyond exhaustive reach.
pub fn check_lemmas_action_sampled(n: usize, samples: u64, seed: u64) -> VerificationReport {
    let mut report = VerificationReport::new("action_lemmas")
        .param("n", n)
        .param("mode", "sampled")
        .param("samples", samples)
        .param("seed", seed);
    let gens = generator_set(n);
    let mut lemmas = ActionLemmas::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values: Vec<i32> = (1..=n as i32).collect();
    for _ in 0..samples {
        values.shuffle(&mut rng);
        for v in values.iter_mut() {
            if rng.gen::<bool>() {
                *v = -*v;
            }
        }
        if let Some(w) = lemmas.visit(&values, &gens) {
            report.fail(Some(w));
        }
    }
    report.detail("elements", samples);
    lemmas.finish(&mut report);
    report
}

/// Parity preservation of `inv_B`, `inv_D` and `|Negs|` under the
/// generators, parity change of `inv_B` under a single-entry sign change,
/// and `inv_B = inv_D + |Negs|`, over all of `B_n`.
pub fn check_parity_lemmas(
    n: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    opts.exhaustive_guard(n)?;
    let mut report = VerificationReport::new("parity_lemmas").param("n", n);
    let gens = generator_set(n);
    let mut inv_b_preserved = Tracker::default();
    let mut inv_d_preserved = Tracker::default();
    let mut negs_preserved = Tracker::default();
    let mut single_flip = Tracker::default();
    let mut relation = Tracker::default();
    for pi in enumerate_class(n, &ClassSelector::all_of_b()) {
        let values = pi.values();
        let (ib, id, ng) = (inv_b(values), inv_d(values), negs_count(values));
        if !relation.observe(ib == id + ng) {
            report.fail(Some(vec![pi.clone()]));
        }
        let mut a = values.to_vec();
        for &p in gens.positions() {
            flip_suffix(&mut a, p);
            let ok_b = inv_b_preserved.observe(inv_b(&a) % 2 == ib % 2);
            let ok_d = inv_d_preserved.observe(inv_d(&a) % 2 == id % 2);
            let ok_n = negs_preserved.observe(negs_count(&a) % 2 == ng % 2);
            if !(ok_b && ok_d && ok_n) {
                report.fail(Some(vec![pi.clone(), window(&a)]));
            }
            flip_suffix(&mut a, p);
        }
        for i in 0..n {
            a[i] = -a[i];
            if !single_flip.observe(inv_b(&a) % 2 != ib % 2) {
                report.fail(Some(vec![pi.clone(), window(&a)]));
            }
            a[i] = -a[i];
        }
    }
    report.detail("inv_b_parity_preserved", inv_b_preserved.json());
    report.detail("inv_d_parity_preserved", inv_d_preserved.json());
    report.detail("negs_parity_preserved", negs_preserved.json());
    report.detail("single_flip_changes_inv_b_parity", single_flip.json());
    report.detail("inv_b_equals_inv_d_plus_negs", relation.json());
    Ok(report)
}

/// Walks every orbit of `B_n^>` and compares its exact polynomial with
/// `t^a (1+t)^m`; also checks that the minimum is attained exactly once and
/// that the orbit has `2^m` distinct elements.
pub fn check_orbit_gf(n: usize, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    opts.exhaustive_guard(n)?;
    let gens = generator_set(n);
    let mut report = VerificationReport::new("orbit_gf")
        .param("n", n)
        .param("class", "B:pos:any");
    let selector = ClassSelector::new(Group::B, FirstSign::Positive, LengthParity::Any);
    let mut orbits = 0u64;
    let mut gf = Tracker::default();
    let mut unique_min = Tracker::default();
    let mut free = Tracker::default();
    let mut within_class = Tracker::default();
    for rep in enumerate_transversal(&selector, &gens) {
        orbits += 1;
        let summary = orbit_min_runs(&rep, &gens)?;
        let elements = orbit(&rep, &gens)?;
        let mut walked = IntPolynomial::zero();
        let mut at_min = 0;
        for e in &elements {
            let runs = e.altruns_b();
            walked.add_term(runs, BigInt::from(1));
            if runs == summary.min_runs {
                at_min += 1;
            }
        }
        if !gf.observe(walked == summary.polynomial()) {
            report.fail(Some(vec![rep.clone()]));
        }
        let minimizer_ok = summary.minimizer().altruns_b() == summary.min_runs;
        if !unique_min.observe(at_min == 1 && minimizer_ok) {
            report.fail(Some(vec![rep.clone(), summary.minimizer()]));
        }
        let mut sorted = elements.clone();
        sorted.sort();
        sorted.dedup();
        if !free.observe(sorted.len() == 1 << gens.m()) {
            report.fail(Some(vec![rep.clone()]));
        }
        if !within_class.observe(elements.iter().all(|e| selector.contains(e))) {
            report.fail(Some(vec![rep.clone()]));
        }
    }
    report.detail("orbits", orbits);
    report.detail("orbit_size", 1u64 << gens.m());
    report.detail("m", gens.m());
    report.detail("generating_function", gf.json());
    report.detail("unique_minimum", unique_min.json());
    report.detail("free_action", free.json());
    report.detail("orbit_within_class", within_class.json());
    Ok(report)
}

/// Lower bound on the `(1+t)`-order guaranteed for the family at `n`.
pub fn expected_order(n: usize, family: &Family) -> usize {
    match family {
        Family::TypeA => n.saturating_sub(2) / 2,
        Family::Signed(_) => n.saturating_sub(1) / 2,
    }
}

/// Computes the run polynomial (both backends where available, asserting
/// equality) and checks `(1+t)^m | R`. The exact order is recorded.
pub fn check_divisibility(
    n: usize,
    family: Family,
    opts: &VerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    let expected = expected_order(n, &family);
    let mut report = VerificationReport::new("divisibility")
        .param("n", n)
        .param("class", family);
    let run_brute = n <= opts.brute_cap;
    let run_orbit = matches!(family, Family::Signed(_)) && n <= opts.orbit_cap;
    if !run_brute && !run_orbit {
        return Err(EngineError::ResourceCap {
            n,
            cap: opts.brute_cap.max(opts.orbit_cap),
        }
        .into());
    }
    let brute = run_brute
        .then(|| opts.polynomial(n, family, Backend::Brute))
        .transpose()?;
    let orbit = run_orbit
        .then(|| opts.polynomial(n, family, Backend::Orbit))
        .transpose()?;
    let backends: Vec<&str> = [run_brute.then_some("brute"), run_orbit.then_some("orbit")]
        .into_iter()
        .flatten()
        .collect();
    report = report.param("backend", backends.join("+"));
    if let Some((_, visits)) = &brute {
        report.detail("visits_brute", visits.to_string());
    }
    if let Some((_, visits)) = &orbit {
        report.detail("visits_orbit", visits.to_string());
    }
    let poly = match (&brute, &orbit) {
        (Some((b, _)), Some((o, _))) => {
            let agree = b == o;
            report.detail("backends_agree", agree);
            if !agree {
                report.detail("polynomial_orbit", poly_json(o));
                report.fail(None);
            }
            b.clone()
        }
        (Some((p, _)), None) | (None, Some((p, _))) => p.clone(),
        (None, None) => unreachable!(),
    };
    report.detail("polynomial", poly_json(&poly));
    report.detail("cardinality", big_json(&poly.total()));
    report.detail("expected_min_order", expected);
    match poly.one_plus_t_order() {
        Ok(order) => {
            report.detail("order", order);
            if order < expected {
                report.fail(None);
            }
        }
        // An empty class is divisible by everything.
        Err(_) => {
            report.detail("order", "infinite");
        }
    }
    Ok(report)
}

/// Moment identity for the class polynomial, gated on `n ≥ 2k + 3`.
pub fn check_moments(
    n: usize,
    k: u32,
    selector: &ClassSelector,
    opts: &VerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    if k == 0 || n < 2 * k as usize + 3 {
        return Err(VerifyError::PreconditionViolated(format!(
            "moment identity needs k >= 1 and n >= 2k+3, got n = {n}, k = {k}"
        )));
    }
    let backend = if n <= opts.orbit_cap {
        Backend::Orbit
    } else {
        Backend::Brute
    };
    let (poly, _) = opts.polynomial(n, *selector, backend)?;
    let report = check_moments_on(&poly, k)
        .param("n", n)
        .param("class", selector)
        .param("backend", backend);
    Ok(report)
}

/// Moment identity applied to an explicit polynomial.
pub fn check_moments_on(poly: &IntPolynomial, k: u32) -> VerificationReport {
    let mut report = VerificationReport::new("moments").param("k", k);
    let sums = poly.moment_sums(k);
    report.detail("odd_sum", big_json(&sums.odd));
    report.detail("even_sum", big_json(&sums.even));
    report.detail("polynomial", poly_json(poly));
    if !sums.holds() {
        report.detail("difference", big_json(&(&sums.odd - &sums.even)));
        report.fail(None);
    }
    report
}

/// First-sign symmetries realized by `sgn_flip` at position 1, checked as
/// polynomial equalities and element by element, plus the resulting
/// divisibility of `R_n^D` by `2(1+t)^m` (even `n`) or `(1+t)^m` (odd `n`).
pub fn check_symmetries(n: usize, opts: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    opts.exhaustive_guard(n)?;
    let mut report = VerificationReport::new("symmetries").param("n", n);
    let s = |g, f| ClassSelector::new(g, f, LengthParity::Any);
    use FirstSign::{Negative, Positive};
    use Group::{BMinusD, D};
    let pairs = if n.is_multiple_of(2) {
        [
            (s(D, Negative), s(D, Positive)),
            (s(BMinusD, Negative), s(BMinusD, Positive)),
        ]
    } else {
        [
            (s(D, Negative), s(BMinusD, Positive)),
            (s(D, Positive), s(BMinusD, Negative)),
        ]
    };
    let mut equalities = Vec::new();
    for (source, target) in pairs {
        let (ps, _) = opts.polynomial(n, source, Backend::Brute)?;
        let (pt, _) = opts.polynomial(n, target, Backend::Brute)?;
        let mut bijection = Tracker::default();
        let mut image_count = 0u64;
        for pi in enumerate_class(n, &source) {
            let image = sgn_flip(&pi, 1)?;
            image_count += 1;
            if !bijection.observe(target.contains(&image) && image.altruns_b() == pi.altruns_b()) {
                report.fail(Some(vec![pi.clone(), image]));
            }
        }
        let target_size = enumerate_class(n, &target).count() as u64;
        let onto = image_count == target_size;
        let equal = ps == pt;
        if !equal || !onto {
            report.fail(None);
        }
        equalities.push(json!({
            "source": source.token(),
            "target": target.token(),
            "polynomials_equal": equal,
            "source_polynomial": poly_json(&ps),
            "target_polynomial": poly_json(&pt),
            "element_map": bijection.json(),
            "sizes_match": onto,
        }));
    }
    report.detail("equalities", equalities);

    let m = n.saturating_sub(1) / 2;
    let (rd, _) = opts.polynomial(n, s(D, FirstSign::Any), Backend::Brute)?;
    let order = rd.one_plus_t_order().unwrap_or(usize::MAX);
    let content = rd
        .coeffs()
        .iter()
        .fold(BigInt::zero(), |g, c| g.gcd(c))
        .abs();
    let content_ok = n % 2 == 1 || content.is_even();
    report.detail("d_polynomial", poly_json(&rd));
    report.detail("d_order", order);
    report.detail("d_content", big_json(&content));
    report.detail("expected_min_order", m);
    if order < m || !content_ok {
        report.fail(None);
    }
    Ok(report)
}

/// The complementation map `c_3` on `1,2,-3,-4` changes `inv_B` parity,
/// while every generator of `T_4` preserves it on all of `B_4`.
pub fn check_bona_remark() -> VerificationReport {
    let mut report = VerificationReport::new("bona");
    let pi = SignedPermutation::make_checked(vec![1, 2, -3, -4]).expect("fixed witness");
    let expected = SignedPermutation::make_checked(vec![1, 2, -4, -3]).expect("fixed witness");
    let image = bona_complement(&pi, 3).expect("index in range");
    let (before, after) = (pi.inv_b(), image.inv_b());
    report.detail("inv_b", json!([before, after]));
    report.detail("image_matches", image == expected);
    let mismatch = before % 2 != after % 2;
    report.detail("parity_mismatch", mismatch);
    if image != expected || !mismatch {
        report.fail(Some(vec![pi.clone(), image.clone()]));
    }
    let flipped = sgn_flip(&pi, 3).expect("index in range");
    report.detail("sgn_flip_3_inv_b", flipped.inv_b());

    let gens = generator_set(4);
    let mut contrast = Tracker::default();
    for sigma in enumerate_class(4, &ClassSelector::all_of_b()) {
        for &p in gens.positions() {
            let image = sgn_flip(&sigma, p).expect("generator in range");
            if !contrast.observe(image.inv_b() % 2 == sigma.inv_b() % 2) {
                report.fail(Some(vec![sigma.clone(), image]));
            }
        }
    }
    report.detail("sgn_flip_contrast", contrast.json());
    report.witness.get_or_insert_with(|| vec![pi, image]);
    report
}

/// Every check for every applicable `n ≤ n_max`: action and parity lemmas,
/// orbit generating functions, divisibility for type A and the 18 standard
/// selectors, moments for every `k` with `2k + 3 ≤ n`, symmetries, and the
/// complementation remark once `n_max ≥ 4`.
pub fn run_all(n_max: usize, opts: &VerifyOptions) -> Result<Vec<VerificationReport>, VerifyError> {
    let mut reports = Vec::new();
    for n in 1..=n_max {
        reports.push(check_lemmas_action(n, opts)?);
        reports.push(check_parity_lemmas(n, opts)?);
        reports.push(check_orbit_gf(n, opts)?);
        reports.push(check_divisibility(n, Family::TypeA, opts)?);
        for selector in ClassSelector::standard() {
            reports.push(check_divisibility(n, Family::Signed(selector), opts)?);
        }
        let mut k = 1;
        while 2 * k as usize + 3 <= n {
            for selector in ClassSelector::standard() {
                reports.push(check_moments(n, k, &selector, opts)?);
            }
            k += 1;
        }
        reports.push(check_symmetries(n, opts)?);
    }
    if n_max >= 4 {
        reports.push(check_bona_remark());
    }
    Ok(reports)
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

/// Plain-text table, one row per report.
pub fn render_table(reports: &[VerificationReport]) -> String {
    let rows: Vec<[String; 4]> = reports
        .iter()
        .map(|r| {
            [
                if r.passed { "PASS" } else { "FAIL" }.to_string(),
                r.check_name.clone(),
                r.parameter_summary(),
                summarize(r),
            ]
        })
        .collect();
    let header = [
        "status".to_string(),
        "check".to_string(),
        "parameters".to_string(),
        "summary".to_string(),
    ];
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let line = row
            .iter()
            .zip(widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        let _ = writeln!(out, "{}", line.trim_end());
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let _ = writeln!(out, "{} checks, {} failed", reports.len(), failed);
    out
}

/// Short human-readable digest of a report's key details.
pub fn summarize(r: &VerificationReport) -> String {
    let get = |k: &str| {
        r.details.get(k).map(|v| match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        })
    };
    let mut parts = Vec::new();
    match r.check_name.as_str() {
        "divisibility" => {
            if let (Some(o), Some(e)) = (get("order"), get("expected_min_order")) {
                parts.push(format!("order {o} >= {e}"));
            }
            if let Some(a) = get("backends_agree") {
                parts.push(format!("backends agree: {a}"));
            }
        }
        "moments" => {
            if let (Some(o), Some(e)) = (get("odd_sum"), get("even_sum")) {
                parts.push(format!("odd {o} vs even {e}"));
            }
        }
        "orbit_gf" => {
            if let (Some(o), Some(s)) = (get("orbits"), get("orbit_size")) {
                parts.push(format!("{o} orbits of size {s}"));
            }
        }
        "bona" => {
            if let Some(v) = get("inv_b") {
                parts.push(format!("inv_B {v}"));
            }
        }
        _ => {
            if let Some(e) = get("elements") {
                parts.push(format!("{e} elements"));
            }
        }
    }
    if let Some(w) = &r.witness {
        if !r.passed {
            let w: Vec<String> = w.iter().map(|p| format!("[{p}]")).collect();
            parts.push(format!("witness {}", w.join(" -> ")));
        }
    }
    parts.join("; ")
}

/// Exact class polynomial from a direct scan, bypassing the engine. Used
/// to cross-check the engine in tests.
pub fn naive_class_polynomial(n: usize, selector: &ClassSelector) -> IntPolynomial {
    let mut poly = Polynomial::zero();
    for pi in enumerate_class(n, selector) {
        poly.add_term(pi.altruns_b(), BigInt::from(1));
    }
    poly
}
