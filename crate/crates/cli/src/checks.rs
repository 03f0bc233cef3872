//! The audit check registry.
//!
//! Each check states one law about the ideal machinery and verifies it by
//! brute force over every corpus instance it applies to. The registry is the
//! single source of truth for the audit runner: a check must match at least
//! one instance of every profile, must be deterministic, and must report
//! failures as human-readable one-liners.
//!
//! Checks whose very point is a known counterexample ("expected-witness"
//! checks) PASS when the counterexample is found and verified, and FAIL when
//! it is absent — an unexpected refutation elsewhere is always a failure.

use std::collections::BTreeSet;

use semiprimary_core::bits::BitSet;
use semiprimary_core::check::{
    bounded_check, exponent_profile, integral_closure, replay_witness, CheckBounds, Property,
    Verdict, WitnessElem,
};
use semiprimary_core::classify::{
    classify_ring, delta, is_n_absorbing, is_n_divided_prime, is_n_primary, is_n_semiprimary,
    is_strongly_n_semiprimary, AbsorbingVerdict,
};
use semiprimary_core::gf::mk_gf;
use semiprimary_core::ideal::{
    enumerate_ideals, generating_set, ideal_from_gens, ideal_from_strs, ideal_power,
    ideal_product, is_prime, is_proper, nilradical, quotient_ring, radical, zero_ideal,
    IdealHandle,
};
use semiprimary_core::monomial::{
    certify_n_semiprimary, mono_counterexample_search, mono_primary_counterexample,
    MonoCertificate, MonomialIdeal, SearchBounds,
};
use semiprimary_core::pid::{int_ideal, pid_delta, poly_ideal, PidBase};
use semiprimary_core::ring::FiniteRing;
use semiprimary_core::series::{
    colon_ring, maximal_ideal, series_ideal, SeriesIdealSpec, SeriesRingSpec,
};
use semiprimary_core::valuation::{vd_example_table, vd_is_n_semiprimary, vd_least_semiprimary_n,
    vd_power, vd_sqrt, vd_subset};
use semiprimary_core::{Error, Result};

use crate::corpus::{series_bounds, Instance, Shape};
use crate::format::build_finite;

/// Outcome of one (check, instance) task.
#[derive(Clone, Debug, Default)]
pub struct CaseReport {
    /// Number of individual law assertions exercised.
    pub cases: u64,
    /// Human-readable failure lines (empty on success).
    pub failures: Vec<String>,
}

const FAILURE_CAP: usize = 8;

impl CaseReport {
    fn fail(&mut self, msg: String) {
        if self.failures.len() < FAILURE_CAP {
            self.failures.push(msg);
        } else if self.failures.len() == FAILURE_CAP {
            self.failures.push("... further failures suppressed".to_string());
        }
    }
}

/// One registered law.
pub struct Check {
    pub id: &'static str,
    /// Self-contained statement of the law being audited.
    pub law: &'static str,
    pub applies: fn(&Instance) -> bool,
    pub run: fn(&Instance) -> Result<CaseReport>,
}

// ---------------------------------------------------------------------------
// shared helpers

fn is_finite(inst: &Instance) -> bool {
    matches!(inst.shape, Shape::Finite { .. })
}

fn is_series(inst: &Instance) -> bool {
    matches!(inst.shape, Shape::Series { .. })
}

fn is_group(inst: &Instance) -> bool {
    matches!(inst.shape, Shape::Group { .. })
}

fn is_monomial(inst: &Instance) -> bool {
    matches!(inst.shape, Shape::Monomial { .. })
}

fn is_pid(inst: &Instance) -> bool {
    matches!(inst.shape, Shape::Pid)
}

fn is_idealization(inst: &Instance) -> bool {
    matches!(&inst.shape, Shape::Finite { construct } if construct.starts_with("idealization:"))
}

fn named(name: &'static str) -> impl Fn(&Instance) -> bool {
    move |inst: &Instance| inst.name == name
}

/// How complete an ideal pool is; the strongly-semiprimary checks need the
/// full lattice to draw sound conclusions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PoolKind {
    /// Every ideal of the ring.
    Complete,
    /// Every principal ideal plus the zero ideal and the nilradical.
    Principal,
    /// Principal ideals of a deterministic element sample.
    Sampled,
}

/// Deterministic pool of proper ideals for a ring, sized to its order.
pub fn ideal_pool(r: &FiniteRing) -> Result<(Vec<IdealHandle>, PoolKind)> {
    let order = r.order();
    if order <= 729 {
        let cap = if order <= 64 { 512 } else { 96 };
        match enumerate_ideals(r, cap) {
            Ok(all) => {
                let pool = tidy_pool(r, all, usize::MAX);
                return Ok((pool, PoolKind::Complete));
            }
            Err(Error::Budget(_)) => {} // fall through to the principal pool
            Err(e) => return Err(e),
        }
        let pool = principal_pool(r, r.elems().collect::<Vec<_>>(), 32)?;
        return Ok((pool, PoolKind::Principal));
    }
    // Large rings: principal ideals of a fixed stride sample.
    let step = (order / 24).max(1);
    let mut sample: Vec<u32> = (0..order).step_by(step as usize).collect();
    sample.push(r.one());
    let pool = principal_pool(r, sample, 16)?;
    Ok((pool, PoolKind::Sampled))
}

fn principal_pool(r: &FiniteRing, gens: Vec<u32>, cap: usize) -> Result<Vec<IdealHandle>> {
    let mut pool = vec![zero_ideal(r), nilradical(r)];
    for x in gens {
        pool.push(ideal_from_gens(r, &[x])?);
    }
    Ok(tidy_pool(r, pool, cap))
}

/// Sorts by (size, members), removes duplicates and the unit ideal, caps.
fn tidy_pool(r: &FiniteRing, pool: Vec<IdealHandle>, cap: usize) -> Vec<IdealHandle> {
    let mut sorted = pool;
    sorted.sort_by(|a, b| (a.size(), a.members()).cmp(&(b.size(), b.members())));
    let mut seen: BTreeSet<BitSet> = BTreeSet::new();
    let mut out = Vec::new();
    for i in sorted {
        if i.size() == r.order() {
            continue;
        }
        if seen.insert(i.members().clone()) {
            out.push(i);
        }
        if out.len() >= cap {
            break;
        }
    }
    out
}

fn sp(r: &FiniteRing, i: &IdealHandle, n: u32) -> Result<bool> {
    Ok(is_n_semiprimary(r, i, n)?.is_none())
}

fn ideal_tag(r: &FiniteRing, i: &IdealHandle) -> String {
    match generating_set(r, i) {
        Ok(gens) => {
            let names: Vec<String> = gens.iter().map(|&g| r.elem_name(g)).collect();
            format!("({})", names.join(", "))
        }
        Err(_) => format!("ideal of size {}", i.size()),
    }
}

fn with_pool(inst: &Instance) -> Result<(FiniteRing, Vec<IdealHandle>, PoolKind)> {
    let r = inst.build_ring()?;
    let (pool, kind) = ideal_pool(&r)?;
    Ok((r, pool, kind))
}

/// Parses "idealization:base=zn:N;module=c1,c2,..." into (N, cyclic orders).
fn idealization_parts(construct: &str) -> Result<(u32, Vec<u32>)> {
    let rest = construct
        .strip_prefix("idealization:")
        .ok_or_else(|| Error::Parse(format!("not an idealization construct: {construct}")))?;
    let mut base_n: Option<u32> = None;
    let mut module: Option<Vec<u32>> = None;
    for part in rest.split(';') {
        if let Some(b) = part.strip_prefix("base=zn:") {
            base_n = Some(
                b.trim().parse().map_err(|_| Error::Parse(format!("bad base in {construct}")))?,
            );
        } else if let Some(m) = part.strip_prefix("module=") {
            let orders: std::result::Result<Vec<u32>, _> =
                m.split(',').map(|c| c.trim().parse::<u32>()).collect();
            module =
                Some(orders.map_err(|_| Error::Parse(format!("bad module in {construct}")))?);
        }
    }
    match (base_n, module) {
        (Some(n), Some(m)) => Ok((n, m)),
        _ => Err(Error::Parse(format!("incomplete idealization construct: {construct}"))),
    }
}

/// Decomposes an ideal of an idealization into (base-projection,
/// zero-fiber-size) and reports whether it splits as projection x fiber.
fn split_extension_ideal(
    j: &IdealHandle,
    msize: u32,
) -> (Vec<u32>, u32, bool) {
    let mut proj: BTreeSet<u32> = BTreeSet::new();
    let mut fiber = 0u32;
    for m in j.members().iter() {
        proj.insert(m / msize);
        if m / msize == 0 {
            fiber += 1;
        }
    }
    let split = (proj.len() as u64) * (fiber as u64) == j.size() as u64;
    (proj.into_iter().collect(), fiber, split)
}

fn series_with_bounds(inst: &Instance) -> Result<(SeriesRingSpec, CheckBounds)> {
    let r = inst.build_series()?;
    let q = match &inst.shape {
        Shape::Series { q, .. } => *q,
        _ => unreachable!("guarded by applies"),
    };
    Ok((r, series_bounds(q)))
}

/// The ideal of all ring elements with order at least `k` ("tail ideal").
fn tail_ideal(r: &SeriesRingSpec, k: i64) -> Result<SeriesIdealSpec> {
    let len = r.conductor().max(k).max(1);
    let slots: Vec<u128> =
        (0..len).map(|e| if e < k { 1 } else { r.slot(e) }).collect();
    series_ideal(r, &slots)
}

/// Runs one property for exponents 1..=n_max against an expected refuted
/// set, replaying every refutation witness.
fn expect_refuted_profile(
    rep: &mut CaseReport,
    label: &str,
    bounds: &CheckBounds,
    n_max: u32,
    refuted_ns: &[u32],
    mk: impl Fn(u32) -> Result<(Verdict, Option<Vec<WitnessElem>>)>,
    replay: impl Fn(u32, &[WitnessElem]) -> Result<bool>,
) -> Result<()> {
    let _ = bounds;
    for n in 1..=n_max {
        let (verdict, witness) = mk(n)?;
        let expect_refuted = refuted_ns.contains(&n);
        rep.cases += 1;
        if verdict.is_refuted() != expect_refuted {
            rep.fail(format!(
                "{label} n={n}: expected {}, got: {verdict}",
                if expect_refuted { "a refutation" } else { "the property to hold" }
            ));
            continue;
        }
        if let Some(w) = witness {
            rep.cases += 1;
            if !replay(n, &w)? {
                rep.fail(format!("{label} n={n}: witness failed to replay"));
            }
        }
    }
    Ok(())
}

fn run_verdict(prop: &Property<'_>, bounds: &CheckBounds) -> Result<(Verdict, Option<Vec<WitnessElem>>)> {
    let v = bounded_check(prop, bounds)?;
    let w = match &v {
        Verdict::Refuted { witness } => Some(witness.clone()),
        _ => None,
    };
    Ok((v, w))
}

// ---------------------------------------------------------------------------
// finite-ring laws

fn c_semiprimary_radical_prime(inst: &Instance) -> Result<CaseReport> {
    let (r, pool, _) = with_pool(inst)?;
    let mut rep = CaseReport::default();
    for i in &pool {
        for n in 1..=6u32 {
            if !sp(&r, i, n)? {
                continue;
            }
            rep.cases += 1;
            let rad = radical(&r, i)?;
            if !is_prime(&r, &rad)? {
                rep.fail(format!(
                    "{} passes at n={n} but its radical is not prime",
                    ideal_tag(&r, i)
                ));
                continue;
            }
            for x in r.elems() {
                let xn = r.pow(x, n as u64);
                if rad.contains(x) != i.contains(xn) {
                    rep.fail(format!(
                        "{} at n={n}: radical membership of {} disagrees with x^n membership",
                        ideal_tag(&r, i),
                        r.elem_name(x)
                    ));
                    break;
                }
            }
        }
    }
    Ok(rep)
}

fn c_semiprimary_upward_monotone(inst: &Instance) -> Result<CaseReport> {
    let (r, pool, _) = with_pool(inst)?;
    let mut rep = CaseReport::default();
    for i in &pool {
        let mut holds_before = false;
        for n in 1..=6u32 {
            let h = sp(&r, i, n)?;
            rep.cases += 1;
            if holds_before && !h {
                rep.fail(format!(
                    "{} passes at n={} but fails at n={n}",
                    ideal_tag(&r, i),
                    n - 1
                ));
            }
            holds_before = h;
        }
    }
    Ok(rep)
}

fn c_exponent_set_upward_closed(inst: &Instance) -> Result<CaseReport> {
    let (r, pool, _) = with_pool(inst)?;
    let mut rep = CaseReport::default();
    for i in &pool {
        let d = delta(&r, i)?;
        rep.cases += 1;
        if d.delta.is_some() != d.radical_prime {
            rep.fail(format!(
                "{}: least-exponent finiteness disagrees with radical primality",
                ideal_tag(&r, i)
            ));
        }
        for n in 1..=6u32 {
            let expect = d.delta.map_or(false, |k| n >= k);
            rep.cases += 1;
            if sp(&r, i, n)? != expect {
                rep.fail(format!(
                    "{}: passing set at n={n} disagrees with least exponent {:?}",
                    ideal_tag(&r, i),
                    d.delta
                ));
            }
        }
    }
    Ok(rep)
}

fn c_prime_radical_power_sufficient(inst: &Instance) -> Result<CaseReport> {
    let (r, pool, _) = with_pool(inst)?;
    let mut rep = CaseReport::default();
    for i in &pool {
        let rad = radical(&r, i)?;
        if !is_prime(&r, &rad)? {
            continue;
        }
        let mut least_k = None;
        for k in 1..=8u32 {
            if ideal_power(&r, &rad, k)?.members().is_subset(i.members()) {
                least_k = Some(k);
                break;
            }
        }
        if let Some(k) = least_k {
            for n in k..=6 {
                rep.cases += 1;
                if !sp(&r, i, n)? {
                    rep.fail(format!(
                        "{}: prime radical with power {k} inside, yet fails at n={n}",
                        ideal_tag(&r, i)
                    ));
                }
            }
        }
    }
    Ok(rep)
}

fn c_primary_implies_semiprimary(inst: &Instance) -> Result<CaseReport> {
    let (r, pool, _) = with_pool(inst)?;
    let mut rep = CaseReport::default();
    for i in &pool {
        for n in 1..=6u32 {
            if is_n_primary(&r, i, n)?.is_none() {
                rep.cases += 1;
                if !sp(&r, i, n)? {
                    rep.fail(format!(
                        "{}: passes the one-sided power test at n={n} but not the two-sided one",
                        ideal_tag(&r, i)
                    ));
                }
            }
        }
    }
    Ok(rep)
}

fn c_absorbing_prime_radical(inst: &Instance) -> Result<CaseReport> {
    let (r, pool, _) = with_pool(inst)?;
    let mut rep = CaseReport::default();
    if r.order() > 64 {
        return Ok(rep);
    }
    for i in &pool {
        let rad_prime = is_prime(&r, &radical(&r, i)?)?;
        for n in 1..=3u32 {
            match is_n_absorbing(&r, i, n, 2_000_000) {
                AbsorbingVerdict::Holds => {
                    if rad_prime {
                        for m in n..=6 {
                            rep.cases += 1;
                            if !sp(&r, i, m)? {
                                rep.fail(format!(
                                    "{}: {n}-absorbing with prime radical, fails at n={m}",
                                    ideal_tag(&r, i)
                                ));
                            }
                        }
                    }
                }
                AbsorbingVerdict::Fails(w) => {
                    rep.cases += 1;
                    let mut all = r.one();
                    for &x in &w {
                        all = r.mul(all, x);
                    }
                    let mut ok = i.contains(all);
                    for skip in 0..w.len() {
                        let mut partial = r.one();
                        for (k, &x) in w.iter().enumerate() {
                            if k != skip {
                                partial = r.mul(partial, x);
                            }
                        }
                        ok = ok && !i.contains(partial);
                    }
                    if !ok {
                        rep.fail(format!(
                            "{}: absorbing counterexample at n={n} does not verify",
                            ideal_tag(&r, i)
                        ));
                    }
                }
                AbsorbingVerdict::Unknown => {}
            }
        }
    }
    Ok(rep)
}

fn c_prime_power_semiprimary(inst: &Instance) -> Result<CaseReport> {
    let (r, pool, _) = with_pool(inst)?;
    let mut rep = CaseReport::default();
    for q in &pool {
        if !is_prime(&r, q)? {
            continue;
        }
        for n in 1..=3u32 {
            let qn = ideal_power(&r, q, n)?;
            if !is_proper(&r, &qn)? {
                continue;
            }
            for m in n..=6 {
                rep.cases += 1;
                if !sp(&r, &qn, m)? {
                    rep.fail(format!(
                        "power {n} of prime {} fails at n={m}",
                        ideal_tag(&r, q)
                    ));
                }
            }
        }
    }
    Ok(rep)
}

fn c_nil_contained_forces_prime(inst: &Instance) -> Result<CaseReport> {
    let (r, pool, _) = with_pool(inst)?;
    let mut rep = CaseReport::default();
    let nil = nilradical(&r);
    for i in &pool {
        if !nil.members().is_subset(i.members()) {
            continue;
        }
        rep.cases += 1;
        let some_n = delta(&r, i)?.delta.is_some();
        if some_n != is_prime(&r, i)? {
            rep.fail(format!(
                "{} contains every nilpotent; passing some degree must equal primality",
                ideal_tag(&r, i)
            ));
        }
    }
    Ok(rep)
}

fn c_vnr_semiprimary_is_prime(inst: &Instance) -> Result<CaseReport> {
    let (r, pool, _) = with_pool(inst)?;
    let mut rep = CaseReport::default();
    let ring_rep = classify_ring(&r);
    rep.cases += 1;
    if ring_rep.n_semiprimary_implies_prime != nilradical(&r).size().eq(&1) {
        rep.fail("collapse flag disagrees with nilradical triviality".to_string());
    }
    if !ring_rep.vnr {
        return Ok(rep);
    }
    for i in &pool {
        rep.cases += 1;
        if delta(&r, i)?.delta.is_some() != is_prime(&r, i)? {
            rep.fail(format!(
                "{}: in a ring where every element is a multiple of its square, \
                 a passing degree must mean prime",
                ideal_tag(&r, i)
            ));
        }
    }
    Ok(rep)
}

fn c_delta_report_consistent(inst: &Instance) -> Result<CaseReport> {
    let (r, pool, _) = with_pool(inst)?;
    let mut rep = CaseReport::default();
    for i in &pool {
        let d = delta(&r, i)?;
        rep.cases += 1;
        if d.delta.is_some() != d.radical_prime {
            rep.fail(format!("{}: finiteness vs radical primality", ideal_tag(&r, i)));
        }
        if let (Some(dd), Some(k)) = (d.delta, d.containment_exponent) {
            if dd > k {
                rep.fail(format!(
                    "{}: least exponent {dd} exceeds containment exponent {k}",
                    ideal_tag(&r, i)
                ));
            }
        }
        if let Some(dd) = d.delta {
            if !sp(&r, i, dd)? || (dd > 1 && sp(&r, i, dd - 1)?) {
                rep.fail(format!("{}: {dd} is not the least passing degree", ideal_tag(&r, i)));
            }
        }
    }
    Ok(rep)
}

fn c_quotient_transport(inst: &Instance) -> Result<CaseReport> {
    let (r, pool, _) = with_pool(inst)?;
    let mut rep = CaseReport::default();
    if r.order() > 64 {
        return Ok(rep);
    }
    for i in &pool {
        let j = ideal_product(&r, i, i)?;
        if j.size() == i.size() {
            continue; // need a strictly smaller kernel to change the ring
        }
        let (q, proj) = quotient_ring(&r, &j)?;
        let gens = generating_set(&r, i)?;
        let image: Vec<u32> = gens.iter().map(|&g| proj[g as usize]).collect();
        let qi = ideal_from_gens(&q, &image)?;
        for n in 1..=6u32 {
            rep.cases += 1;
            if sp(&r, i, n)? != sp(&q, &qi, n)? {
                rep.fail(format!(
                    "{}: degree {n} verdict changes after killing its square",
                    ideal_tag(&r, i)
                ));
            }
        }
    }
    Ok(rep)
}

fn c_strongly_implies_plain(inst: &Instance) -> Result<CaseReport> {
    let (r, pool, kind) = with_pool(inst)?;
    let mut rep = CaseReport::default();
    if kind != PoolKind::Complete {
        return Ok(rep);
    }
    for i in &pool {
        for n in 1..=4u32 {
            if is_strongly_n_semiprimary(&r, i, n, &pool)?.is_none() {
                rep.cases += 1;
                if !sp(&r, i, n)? {
                    rep.fail(format!(
                        "{}: ideal-pair law holds at n={n} but element law fails",
                        ideal_tag(&r, i)
                    ));
                }
            }
        }
    }
    Ok(rep)
}

fn c_strongly_scaling(inst: &Instance) -> Result<CaseReport> {
    let (r, pool, kind) = with_pool(inst)?;
    let mut rep = CaseReport::default();
    if kind != PoolKind::Complete {
        return Ok(rep);
    }
    let scalings: &[(u32, &[u32])] = &[(1, &[2, 3, 4, 5, 6]), (2, &[4, 6]), (3, &[6])];
    for i in &pool {
        for &(n, multiples) in scalings {
            if is_strongly_n_semiprimary(&r, i, n, &pool)?.is_some() {
                continue;
            }
            for &m in multiples {
                rep.cases += 1;
                if is_strongly_n_semiprimary(&r, i, m, &pool)?.is_some() {
                    rep.fail(format!(
                        "{}: ideal-pair law holds at n={n} but fails at multiple {m}",
                        ideal_tag(&r, i)
                    ));
                }
            }
        }
    }
    Ok(rep)
}

fn c_strongly_one_is_prime(inst: &Instance) -> Result<CaseReport> {
    let (r, pool, kind) = with_pool(inst)?;
    let mut rep = CaseReport::default();
    if kind != PoolKind::Complete {
        return Ok(rep);
    }
    for i in &pool {
        rep.cases += 1;
        let strongly1 = is_strongly_n_semiprimary(&r, i, 1, &pool)?.is_none();
        if strongly1 != is_prime(&r, i)? {
            rep.fail(format!(
                "{}: degree-one ideal-pair law disagrees with primality",
                ideal_tag(&r, i)
            ));
        }
    }
    Ok(rep)
}

fn c_mixed_power_collapse(inst: &Instance) -> Result<CaseReport> {
    let (r, pool, _) = with_pool(inst)?;
    let mut rep = CaseReport::default();
    if r.order() > 64 {
        return Ok(rep);
    }
    for i in &pool {
        let d = delta(&r, i)?;
        let Some(n) = d.delta else { continue };
        rep.cases += 1;
        'outer: for x in r.elems() {
            let xn_in = i.contains(r.pow(x, n as u64));
            for m in 1..=4u64 {
                let xm = r.pow(x, m);
                if i.contains(xm) && !xn_in {
                    rep.fail(format!(
                        "{}: x^{m} inside for {} but x^{n} is not",
                        ideal_tag(&r, i),
                        r.elem_name(x)
                    ));
                    break 'outer;
                }
                for y in r.elems() {
                    let yn_in = i.contains(r.pow(y, n as u64));
                    if xn_in || yn_in {
                        continue;
                    }
                    for k in 1..=4u64 {
                        if i.contains(r.mul(xm, r.pow(y, k))) {
                            rep.fail(format!(
                                "{}: x^{m} y^{k} inside with neither {}^{n} nor {}^{n} inside",
                                ideal_tag(&r, i),
                                r.elem_name(x),
                                r.elem_name(y)
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}

fn c_divided_primes_linearly_ordered(inst: &Instance) -> Result<CaseReport> {
    let (r, pool, kind) = with_pool(inst)?;
    let mut rep = CaseReport::default();
    if kind != PoolKind::Complete {
        return Ok(rep);
    }
    let mut primes = Vec::new();
    for i in &pool {
        if is_prime(&r, i)? {
            primes.push(i.clone());
        }
    }
    for n in 1..=4u32 {
        let mut all_divided = true;
        for p in &primes {
            if is_n_divided_prime(&r, p, n)?.is_some() {
                all_divided = false;
                break;
            }
        }
        rep.cases += 1;
        if all_divided && primes.len() > 1 {
            rep.fail(format!(
                "every prime is {n}-divided yet the ring has {} incomparable primes",
                primes.len()
            ));
        }
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// idealization laws

fn c_extension_exponent_shift(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let Shape::Finite { construct } = &inst.shape else { unreachable!() };
    let (base_n, _module) = idealization_parts(construct)?;
    let a = inst.build_ring()?;
    let base = build_finite(&format!("zn:{base_n}"))?;
    let msize = a.order() / base.order();
    let (base_pool, _) = ideal_pool(&base)?;
    for i in &base_pool {
        let gens = generating_set(&base, i)?;
        let lifted: Vec<u32> = gens.iter().map(|&g| g * msize).collect();
        let j = ideal_from_gens(&a, &lifted)?;
        for n in 1..=4u32 {
            if sp(&base, i, n)? {
                rep.cases += 1;
                if !sp(&a, &j, n + 1)? {
                    rep.fail(format!(
                        "base ideal {} passes at n={n} but its lift fails at n={}",
                        ideal_tag(&base, i),
                        n + 1
                    ));
                }
            }
        }
    }
    Ok(rep)
}

fn c_extension_projection(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let Shape::Finite { construct } = &inst.shape else { unreachable!() };
    let (base_n, _) = idealization_parts(construct)?;
    let a = inst.build_ring()?;
    let base = build_finite(&format!("zn:{base_n}"))?;
    let msize = a.order() / base.order();
    let (a_pool, _) = ideal_pool(&a)?;
    for j in &a_pool {
        let (proj, _fiber, splits) = split_extension_ideal(j, msize);
        if !splits {
            continue;
        }
        let i = ideal_from_gens(&base, &proj)?;
        for n in 1..=4u32 {
            if sp(&a, j, n)? {
                rep.cases += 1;
                if !sp(&base, &i, n)? {
                    rep.fail(format!(
                        "split ideal of size {} passes at n={n} but its projection fails",
                        j.size()
                    ));
                }
            }
        }
    }
    Ok(rep)
}

fn c_extension_characteristic_equivalence(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let Shape::Finite { construct } = &inst.shape else { unreachable!() };
    let (base_n, _) = idealization_parts(construct)?;
    if base_n < 2 {
        return Ok(rep);
    }
    let a = inst.build_ring()?;
    let base = build_finite(&format!("zn:{base_n}"))?;
    let msize = a.order() / base.order();
    let (a_pool, _) = ideal_pool(&a)?;
    for j in &a_pool {
        let (proj, _, splits) = split_extension_ideal(j, msize);
        if !splits {
            continue;
        }
        let i = ideal_from_gens(&base, &proj)?;
        rep.cases += 1;
        if sp(&a, j, base_n)? != sp(&base, &i, base_n)? {
            rep.fail(format!(
                "at the characteristic degree {base_n}, split ideal of size {} and its \
                 projection disagree",
                j.size()
            ));
        }
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// principal-ideal-domain laws (with independent oracles)

fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        if m % d == 0 {
            let mut k = 0;
            while m % d == 0 {
                m /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

fn c_integer_exponents(_inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    for m in 2..=200u64 {
        let d = pid_delta(&int_ideal(m)?);
        let facts = factorize(m);
        let expected = if facts.len() == 1 {
            (Some(facts[0].1), Some(PidBase::Int(facts[0].0)))
        } else {
            (None, None)
        };
        rep.cases += 1;
        if (d.delta, d.base) != expected {
            rep.fail(format!("modulus {m}: least-exponent report disagrees with factorization"));
        }
    }
    Ok(rep)
}

// Polynomial arithmetic over a prime field, coefficients ascending mod q.
fn pmul(q: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % q;
        }
    }
    out
}

fn ppow(q: u32, a: &[u32], k: u32) -> Vec<u32> {
    let mut out = vec![1u32];
    for _ in 0..k {
        out = pmul(q, &out, a);
    }
    out
}

/// All monic polynomials of exact degree d over F_q, ascending coefficients.
fn monics(q: u32, d: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let count = (q as u64).pow(d as u32);
    for code in 0..count {
        let mut f = Vec::with_capacity(d + 1);
        let mut c = code;
        for _ in 0..d {
            f.push((c % q as u64) as u32);
            c /= q as u64;
        }
        f.push(1);
        out.push(f);
    }
    out
}

fn divides(q: u32, g: &[u32], f: &[u32]) -> bool {
    // Polynomial long division by monic g; remainder must vanish.
    let mut rem: Vec<u32> = f.to_vec();
    let dg = g.len() - 1;
    while rem.len() > dg {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - 1 - dg;
        if lead != 0 {
            for (i, &gc) in g.iter().enumerate() {
                let idx = shift + i;
                rem[idx] = (rem[idx] + q * q - (lead * gc) % q) % q;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

fn is_irreducible(q: u32, f: &[u32]) -> bool {
    let df = f.len() - 1;
    if df == 0 {
        return false;
    }
    for d in 1..=df / 2 {
        for g in monics(q, d) {
            if divides(q, &g, f) {
                return false;
            }
        }
    }
    true
}

/// Brute-force prime-power decomposition of a monic polynomial: returns
/// (k, g) with f = g^k and g monic irreducible, if one exists.
fn poly_prime_power(q: u32, f: &[u32]) -> Option<(u32, Vec<u32>)> {
    let df = (f.len() - 1) as u32;
    for d in 1..=df as usize {
        if df as usize % d != 0 {
            continue;
        }
        let k = df / d as u32;
        for g in monics(q, d) {
            if is_irreducible(q, &g) && ppow(q, &g, k) == *f {
                return Some((k, g));
            }
        }
    }
    None
}

fn c_polynomial_exponents(_inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    for q in [2u32, 3] {
        for deg in 1..=4usize {
            for f in monics(q, deg) {
                let d = pid_delta(&poly_ideal(q, &f)?);
                let expected = poly_prime_power(q, &f);
                rep.cases += 1;
                match (&expected, d.delta, &d.base) {
                    (Some((k, g)), Some(dk), Some(PidBase::Poly(db))) => {
                        if *k != dk || g != db {
                            rep.fail(format!(
                                "F{q}, degree {deg}: reported power disagrees with the \
                                 brute-force decomposition"
                            ));
                        }
                    }
                    (None, None, None) => {}
                    _ => {
                        rep.fail(format!(
                            "F{q}, degree {deg}: prime-power detection disagrees \
                             (oracle {:?} vs report {:?}/{:?})",
                            expected.as_ref().map(|(k, _)| *k),
                            d.delta,
                            d.base
                        ));
                    }
                }
            }
        }
    }
    Ok(rep)
}

fn c_exponent_two_is_prime_square(_inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    for m in 2..=200u64 {
        let d = pid_delta(&int_ideal(m)?);
        let facts = factorize(m);
        let is_p2 = facts.len() == 1 && facts[0].1 == 2;
        rep.cases += 1;
        if (d.delta == Some(2)) != is_p2 {
            rep.fail(format!("modulus {m}: least exponent 2 must mean a squared prime"));
        }
    }
    for q in [2u32, 3] {
        for deg in 1..=4usize {
            for f in monics(q, deg) {
                let d = pid_delta(&poly_ideal(q, &f)?);
                let is_g2 = matches!(poly_prime_power(q, &f), Some((2, _)));
                rep.cases += 1;
                if (d.delta == Some(2)) != is_g2 {
                    rep.fail(format!(
                        "F{q}, degree {deg}: least exponent 2 must mean a squared irreducible"
                    ));
                }
            }
        }
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// monomial-ideal laws

fn build_monomial(inst: &Instance) -> Result<(u32, MonomialIdeal)> {
    let Shape::Monomial { p, nvars, gens } = &inst.shape else {
        return Err(Error::Invalid(format!("{} is not a monomial instance", inst.name)));
    };
    let gen_refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
    Ok((*p, MonomialIdeal::parse(*nvars, &gen_refs)?))
}

fn c_monomial_certificate_sound(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (p, ideal) = build_monomial(inst)?;
    let bounds = SearchBounds::default();
    for n in 1..=4u32 {
        match certify_n_semiprimary(&ideal, n) {
            MonoCertificate::CertifiedTrue { radical_vars } => {
                rep.cases += 1;
                if ideal.prime_variable_set() != Some(radical_vars) {
                    rep.fail(format!("n={n}: certificate variables disagree with the radical"));
                }
                if mono_counterexample_search(&ideal, n, p, &bounds)?.is_some() {
                    rep.fail(format!("n={n}: certified true but a counterexample was found"));
                }
            }
            MonoCertificate::CertifiedFalse { witness_x, witness_y } => {
                rep.cases += 1;
                let sum: Vec<u32> = witness_x
                    .iter()
                    .zip(&witness_y)
                    .map(|(a, b)| a + b)
                    .collect();
                for m in 1..=4u32 {
                    let scale = |v: &[u32]| -> Vec<u32> { v.iter().map(|e| e * m).collect() };
                    if !ideal.contains_monomial(&scale(&sum))
                        || ideal.contains_monomial(&scale(&witness_x))
                        || ideal.contains_monomial(&scale(&witness_y))
                    {
                        rep.fail(format!("n={n}: certified-false witness fails at power {m}"));
                        break;
                    }
                }
            }
            MonoCertificate::Unknown => {}
        }
    }
    Ok(rep)
}

fn c_monomial_matches_quotient(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (_p, ideal) = build_monomial(inst)?;
    // Two finite models of F2[X,Y] relative to (X^2, Y^2): the quotient by
    // the ideal itself (image is the zero ideal) and the quotient by the
    // strictly smaller (X^3, Y^3, X^2 Y^2) (image stays proper). Both
    // quotients identify membership questions exactly.
    let models: [(&str, &[&str]); 2] = [
        ("poly:p=2;caps=2,2", &[]),
        ("poly:p=2;caps=3,3;extra=X^2*Y^2", &["X^2", "Y^2"]),
    ];
    for (construct, gens) in models {
        let r = build_finite(construct)?;
        let image = if gens.is_empty() { zero_ideal(&r) } else { ideal_from_strs(&r, gens)? };
        for n in 1..=4u32 {
            let certified = matches!(
                certify_n_semiprimary(&ideal, n),
                MonoCertificate::CertifiedTrue { .. }
            );
            let finite = sp(&r, &image, n)?;
            rep.cases += 1;
            if certified && !finite {
                rep.fail(format!(
                    "n={n}: certificate says true but the finite model of order {} refutes it",
                    r.order()
                ));
            }
            if !certified && finite != (n >= 2) {
                // Only n=1 is expected uncertified-false here; record
                // unexpected shapes rather than asserting blindly.
                rep.fail(format!(
                    "n={n}: unexpected certificate/finite-model combination in order {}",
                    r.order()
                ));
            }
        }
    }
    Ok(rep)
}

fn c_square_powers_not_absorbing(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let r = inst.build_ring()?;
    let i = zero_ideal(&r); // the image of (X^2, Y^2) in F2[X,Y]/(X^2, Y^2)
    rep.cases += 1;
    if !sp(&r, &i, 2)? {
        rep.fail("the squares ideal must pass at n=2".to_string());
    }
    let p = ideal_from_strs(&r, &["X", "Y"])?;
    let p2 = ideal_power(&r, &p, 2)?;
    let xy = r.parse_elem("X*Y")?;
    rep.cases += 1;
    if !p2.contains(xy) || i.contains(xy) {
        rep.fail("the square of the variable prime must escape via the cross term".to_string());
    }
    rep.cases += 1;
    match is_n_absorbing(&r, &i, 2, 10_000_000) {
        AbsorbingVerdict::Fails(w) => {
            let mut all = r.one();
            for &x in &w {
                all = r.mul(all, x);
            }
            let mut ok = i.contains(all);
            for skip in 0..w.len() {
                let mut partial = r.one();
                for (k, &x) in w.iter().enumerate() {
                    if k != skip {
                        partial = r.mul(partial, x);
                    }
                }
                ok = ok && !i.contains(partial);
            }
            if !ok {
                rep.fail("the absorbing counterexample does not verify".to_string());
            }
        }
        other => {
            rep.fail(format!(
                "expected a 2-absorbing counterexample, got {:?}",
                std::mem::discriminant(&other)
            ));
        }
    }
    Ok(rep)
}

fn c_semiprimary_not_primary_family(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (p, ideal) = build_monomial(inst)?;
    let n = ideal.gens()[1][1]; // the pure-Y generator exponent
    rep.cases += 1;
    if !matches!(certify_n_semiprimary(&ideal, n), MonoCertificate::CertifiedTrue { .. }) {
        rep.fail(format!("expected a degree-{n} certificate"));
    }
    // The fixed counterexample to primariness: Y * X inside, Y outside,
    // and no power of X ever inside.
    rep.cases += 1;
    let y_in = ideal.contains_monomial(&[0, 1]);
    let xy_in = ideal.contains_monomial(&[1, 1]);
    let x_powers_out = (1..=8u32).all(|m| !ideal.contains_monomial(&[m, 0]));
    if y_in || !xy_in || !x_powers_out {
        rep.fail("the product/escape pattern of the two variables is wrong".to_string());
    }
    rep.cases += 1;
    match mono_primary_counterexample(&ideal, n, p, &SearchBounds::default())? {
        Some((f, g)) => {
            let ok = ideal.contains_poly(&f.mul(&g))
                && !ideal.contains_poly(&f)
                && !ideal.contains_poly(&g.pow(n));
            if !ok {
                rep.fail("the primary counterexample does not verify".to_string());
            }
        }
        None => rep.fail("expected a counterexample to primariness".to_string()),
    }
    Ok(rep)
}

fn c_squares_ideal_strong_gap(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let r = inst.build_ring()?;
    let (pool, kind) = ideal_pool(&r)?;
    if kind != PoolKind::Complete {
        return Err(Error::Invalid("expected a complete ideal pool".to_string()));
    }
    let i = zero_ideal(&r);
    rep.cases += 1;
    if !sp(&r, &i, 2)? {
        rep.fail("the squares ideal must pass at n=2".to_string());
    }
    rep.cases += 1;
    match is_strongly_n_semiprimary(&r, &i, 2, &pool)? {
        Some((j, k)) => {
            let j2 = ideal_power(&r, &j, 2)?;
            let k2 = ideal_power(&r, &k, 2)?;
            let prod = ideal_product(&r, &j2, &k2)?;
            let ok = prod.members().is_subset(i.members())
                && !j2.members().is_subset(i.members())
                && !k2.members().is_subset(i.members());
            if !ok {
                rep.fail("the ideal-pair counterexample does not verify".to_string());
            }
        }
        None => rep.fail("expected an ideal-pair counterexample at n=2".to_string()),
    }
    for n in 3..=4u32 {
        rep.cases += 1;
        if is_strongly_n_semiprimary(&r, &i, n, &pool)?.is_some() {
            rep.fail(format!("the ideal-pair law must hold at n={n}"));
        }
    }
    Ok(rep)
}

fn c_product_nil_escape(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let r = inst.build_ring()?;
    let i = ideal_from_strs(&r, &["(0,1)"])?;
    rep.cases += 1;
    if !sp(&r, &i, 2)? {
        rep.fail("the second-factor ideal must pass at n=2".to_string());
    }
    rep.cases += 1;
    if delta(&r, &i)?.delta != Some(2) {
        rep.fail("the least passing degree must be exactly 2".to_string());
    }
    rep.cases += 1;
    if is_prime(&r, &i)? {
        rep.fail("the ideal must not be prime".to_string());
    }
    rep.cases += 1;
    if nilradical(&r).members().is_subset(i.members()) {
        rep.fail("the nilradical must escape the ideal".to_string());
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// ordered-value-group laws

fn group_rows(inst: &Instance) -> Result<Vec<semiprimary_core::valuation::FamilyRow>> {
    let Shape::Group { tag } = &inst.shape else {
        return Err(Error::Invalid(format!("{} is not a group instance", inst.name)));
    };
    vd_example_table(*tag)
}

fn c_group_catalog_profile(inst: &Instance) -> Result<CaseReport> {
    use semiprimary_core::valuation::GroupTag;
    let mut rep = CaseReport::default();
    let Shape::Group { tag } = &inst.shape else { unreachable!() };
    let rows = group_rows(inst)?;
    // Expected (family, passes-for-some-degree, least passing degree).
    type Row = (&'static str, bool, Option<u32>);
    const ZERO: &str = "the zero ideal";
    const CLOSED: &str = "closed-cut ideals inside the maximal ideal";
    const OPEN: &str = "open-cut ideals inside the maximal ideal";
    const POINT: &str = "point-cut ideals with radical the height-one prime";
    const ROW: &str = "full-row ideals strictly inside the height-one prime";
    const H1: &str = "the height-one prime";
    const BETWEEN: &str =
        "point-cut ideals strictly between the height-one prime and the maximal ideal";
    const MAX: &str = "the maximal ideal";
    let expected: Vec<Row> = match tag {
        GroupTag::Z => vec![
            (ZERO, true, Some(1)),
            (CLOSED, true, Some(3)),
            (MAX, true, Some(1)),
        ],
        GroupTag::Q => vec![
            (ZERO, true, Some(1)),
            (CLOSED, false, None),
            (OPEN, false, None),
            (MAX, true, Some(1)),
        ],
        GroupTag::ZZ => vec![
            (ZERO, true, Some(1)),
            (POINT, true, Some(3)),
            (ROW, true, Some(2)),
            (H1, true, Some(1)),
            (BETWEEN, true, Some(2)),
            (MAX, true, Some(1)),
        ],
        GroupTag::QQ => vec![
            (ZERO, true, Some(1)),
            (POINT, false, None),
            (ROW, false, None),
            (H1, true, Some(1)),
            (BETWEEN, false, None),
            (MAX, true, Some(1)),
        ],
        GroupTag::ZQ => vec![
            (ZERO, true, Some(1)),
            (POINT, true, Some(3)),
            (ROW, true, Some(2)),
            (H1, true, Some(1)),
            (BETWEEN, false, None),
            (MAX, true, Some(1)),
        ],
        GroupTag::QZ => vec![
            (ZERO, true, Some(1)),
            (POINT, false, None),
            (ROW, false, None),
            (H1, true, Some(1)),
            (BETWEEN, true, Some(2)),
            (MAX, true, Some(1)),
        ],
    };
    rep.cases += 1;
    if rows.len() != expected.len() {
        rep.fail(format!("expected {} rows, got {}", expected.len(), rows.len()));
        return Ok(rep);
    }
    for (row, (family, some_n, least)) in rows.iter().zip(&expected) {
        rep.cases += 1;
        if row.family != *family {
            rep.fail(format!("row family {:?} where {:?} was expected", row.family, family));
            continue;
        }
        if row.semiprimary_for_some_n != *some_n
            || row.least_n != *least
            || row.powerful_semiprimary_for_some_n != *some_n
        {
            rep.fail(format!(
                "family {:?}: got (pass={}, least={:?}), expected (pass={}, least={:?})",
                row.family, row.semiprimary_for_some_n, row.least_n, some_n, least
            ));
        }
    }
    Ok(rep)
}

fn c_group_power_containment(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    for row in group_rows(inst)? {
        let d = &row.representative;
        for n in 1..=6u32 {
            rep.cases += 1;
            let direct = vd_is_n_semiprimary(d, n)?;
            let via_power = vd_subset(&vd_power(&vd_sqrt(d)?, n)?, d)?;
            if direct != via_power {
                rep.fail(format!(
                    "family {:?} at n={n}: direct test and radical-power containment disagree",
                    row.family
                ));
            }
        }
    }
    Ok(rep)
}

fn c_group_idempotent_collapse(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    for row in group_rows(inst)? {
        if !row.radical_idempotent {
            continue;
        }
        rep.cases += 1;
        let is_radical = vd_subset(&row.representative, &row.radical)?
            && vd_subset(&row.radical, &row.representative)?;
        if row.semiprimary_for_some_n != is_radical {
            rep.fail(format!(
                "family {:?}: with an idempotent radical, passing must mean equaling it",
                row.family
            ));
        }
    }
    Ok(rep)
}

fn c_group_non_idempotent_eventually(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    for row in group_rows(inst)? {
        if row.radical_idempotent {
            continue;
        }
        rep.cases += 1;
        let least = vd_least_semiprimary_n(&row.representative, 64)?;
        if !row.semiprimary_for_some_n || least.is_none() || least != row.least_n {
            rep.fail(format!(
                "family {:?}: a non-idempotent radical must give a finite least degree",
                row.family
            ));
        }
    }
    Ok(rep)
}

fn c_group_monotone(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    for row in group_rows(inst)? {
        let mut prev = false;
        for n in 1..=8u32 {
            let h = vd_is_n_semiprimary(&row.representative, n)?;
            rep.cases += 1;
            if prev && !h {
                rep.fail(format!("family {:?}: passes at n={} but not n={n}", row.family, n - 1));
            }
            prev = h;
        }
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// series-ring laws

fn c_series_implication_chain(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    for n in 1..=4u32 {
        let nvd = bounded_check(&Property::Nvd(&r, n), &b)?;
        let pnvd = bounded_check(&Property::Pnvd(&r, n), &b)?;
        let npvd = bounded_check(&Property::Npvd(&r, n), &b)?;
        rep.cases += 2;
        if nvd.holds() && !pnvd.holds() {
            rep.fail(format!("n={n}: divisibility holds but the pseudo law fails ({pnvd})"));
        }
        if pnvd.holds() && !npvd.holds() {
            rep.fail(format!("n={n}: pseudo law holds but the power-division law fails ({npvd})"));
        }
    }
    Ok(rep)
}

fn c_series_maximal_field_law(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    let m = maximal_ideal(&r);
    for n in 1..=4u32 {
        let ring_law = bounded_check(&Property::Npvd(&r, n), &b)?;
        let field_law = bounded_check(&Property::NPowerfulSemiprimary(&m, n), &b)?;
        rep.cases += 1;
        if ring_law.holds() != field_law.holds() {
            rep.fail(format!(
                "n={n}: ring-level law ({ring_law}) and maximal-ideal pair law ({field_law}) \
                 disagree"
            ));
        }
    }
    Ok(rep)
}

fn c_field_law_implies_ring_law(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    let mut ideals = vec![maximal_ideal(&r)];
    if r.conductor() > 0 {
        ideals.push(tail_ideal(&r, r.conductor())?);
    }
    for i in &ideals {
        for n in 1..=4u32 {
            let field_law = bounded_check(&Property::NPowerfulSemiprimary(i, n), &b)?;
            if field_law.holds() {
                rep.cases += 1;
                let ring_law = bounded_check(&Property::NSemiprimary(i, n), &b)?;
                if !ring_law.holds() {
                    rep.fail(format!(
                        "n={n}: field-quantified pair law holds but the ring-quantified one \
                         fails ({ring_law})"
                    ));
                }
            }
        }
    }
    Ok(rep)
}

fn c_powerful_exponent_doubling(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    let m = maximal_ideal(&r);
    for n in 1..=4u32 {
        let at_n = bounded_check(&Property::NPowerfulSemiprimary(&m, n), &b)?;
        if at_n.holds() {
            rep.cases += 1;
            let at_2n = bounded_check(&Property::NPowerfulSemiprimary(&m, 2 * n), &b)?;
            if !at_2n.holds() {
                rep.fail(format!("pair law holds at n={n} but fails at {}", 2 * n));
            }
        }
    }
    Ok(rep)
}

fn c_pseudo_implies_powerful(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    let m = maximal_ideal(&r);
    for n in 1..=4u32 {
        let pseudo = bounded_check(&Property::PseudoNStronglyPrime(&m, n), &b)?;
        if pseudo.holds() {
            rep.cases += 1;
            let powerful = bounded_check(&Property::NPowerfulSemiprimary(&m, n), &b)?;
            if !powerful.holds() {
                rep.fail(format!(
                    "n={n}: the escape law holds but the pair law fails ({powerful})"
                ));
            }
        }
    }
    Ok(rep)
}

fn c_root_closed_collapse(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    for n in 2..=4u32 {
        let closed = bounded_check(&Property::NRootClosed(&r, n), &b)?;
        if !closed.holds() {
            continue;
        }
        let npvd_n = bounded_check(&Property::Npvd(&r, n), &b)?;
        if npvd_n.holds() {
            rep.cases += 1;
            let npvd_1 = bounded_check(&Property::Npvd(&r, 1), &b)?;
            if !npvd_1.holds() {
                rep.fail(format!("root-closed at n={n} with the law, but degree 1 fails"));
            }
        }
        let nvd_n = bounded_check(&Property::Nvd(&r, n), &b)?;
        if nvd_n.holds() {
            rep.cases += 1;
            let nvd_1 = bounded_check(&Property::Nvd(&r, 1), &b)?;
            if !nvd_1.holds() {
                rep.fail(format!(
                    "root-closed at n={n} with divisibility, but degree 1 fails"
                ));
            }
        }
    }
    Ok(rep)
}

fn c_closure_root_extension(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    for n in 1..=4u32 {
        let nvd = bounded_check(&Property::Nvd(&r, n), &b)?;
        if !nvd.holds() {
            continue;
        }
        rep.cases += 1;
        let closure = integral_closure(&r, n, &b)?;
        if !closure.radical_match.holds() {
            rep.fail(format!(
                "n={n}: divisibility holds but the closure maximal-ideal match fails"
            ));
        }
        let ext = bounded_check(&Property::NRootExtension(&r, &closure.closure, n), &b)?;
        rep.cases += 1;
        if !ext.holds() {
            rep.fail(format!(
                "n={n}: divisibility holds but closure powers escape the ring ({ext})"
            ));
        }
    }
    Ok(rep)
}

fn c_closure_radical_correlation(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    for n in 1..=4u32 {
        let law = bounded_check(&Property::Npvd(&r, n), &b)?;
        let closure = integral_closure(&r, n, &b)?;
        rep.cases += 1;
        if law.holds() != closure.radical_match.holds() {
            rep.fail(format!(
                "n={n}: power-division law ({law}) and closure radical match disagree"
            ));
        }
    }
    Ok(rep)
}

fn c_pullback_profile(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    let q = match &inst.shape {
        Shape::Series { q, .. } => *q,
        _ => unreachable!(),
    };
    let nvd_refuted: &[u32] = if q == 4 { &[1, 2, 4] } else { &[1, 2, 3] };
    expect_refuted_profile(
        &mut rep,
        "divisibility",
        &b,
        4,
        nvd_refuted,
        |n| run_verdict(&Property::Nvd(&r, n), &b),
        |n, w| replay_witness(&Property::Nvd(&r, n), w, &b),
    )?;
    expect_refuted_profile(
        &mut rep,
        "pseudo law",
        &b,
        4,
        &[],
        |n| run_verdict(&Property::Pnvd(&r, n), &b),
        |n, w| replay_witness(&Property::Pnvd(&r, n), w, &b),
    )?;
    expect_refuted_profile(
        &mut rep,
        "power-division law",
        &b,
        4,
        &[],
        |n| run_verdict(&Property::Npvd(&r, n), &b),
        |n, w| replay_witness(&Property::Npvd(&r, n), w, &b),
    )?;
    Ok(rep)
}

fn c_tower_profile(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    let q = match &inst.shape {
        Shape::Series { q, .. } => *q,
        _ => unreachable!(),
    };
    let pnvd_refuted: &[u32] = if q == 4 { &[1, 2, 4] } else { &[1, 2, 3] };
    expect_refuted_profile(
        &mut rep,
        "pseudo law",
        &b,
        4,
        pnvd_refuted,
        |n| run_verdict(&Property::Pnvd(&r, n), &b),
        |n, w| replay_witness(&Property::Pnvd(&r, n), w, &b),
    )?;
    expect_refuted_profile(
        &mut rep,
        "power-division law",
        &b,
        4,
        &[1],
        |n| run_verdict(&Property::Npvd(&r, n), &b),
        |n, w| replay_witness(&Property::Npvd(&r, n), w, &b),
    )?;
    expect_refuted_profile(
        &mut rep,
        "divisibility",
        &b,
        4,
        &[1, 2, 3, 4],
        |n| run_verdict(&Property::Nvd(&r, n), &b),
        |n, w| replay_witness(&Property::Nvd(&r, n), w, &b),
    )?;
    Ok(rep)
}

fn c_gapped_profile(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let r = inst.build_series()?;
    let b = CheckBounds::default();
    let m = maximal_ideal(&r);
    // The passing set of the maximal ideal under the field-quantified pair
    // law has a hole: degrees 1 and 3 fail, everything else up to 8 holds.
    let profile = exponent_profile(&m, 8, &b)?;
    for (n, verdict) in &profile {
        let expect_refuted = *n == 1 || *n == 3;
        rep.cases += 1;
        if verdict.is_refuted() != expect_refuted {
            rep.fail(format!("pair law at n={n}: unexpected verdict {verdict}"));
        }
        if let Verdict::Refuted { witness } = verdict {
            rep.cases += 1;
            if !replay_witness(&Property::NPowerfulSemiprimary(&m, *n), witness, &b)? {
                rep.fail(format!("pair-law witness at n={n} failed to replay"));
            }
        }
    }
    // Divisibility has the same hole pattern on 1..=4.
    expect_refuted_profile(
        &mut rep,
        "divisibility",
        &b,
        4,
        &[1, 3],
        |n| run_verdict(&Property::Nvd(&r, n), &b),
        |n, w| replay_witness(&Property::Nvd(&r, n), w, &b),
    )?;
    // The conductor tail is 2-semiprimary but not 2-powerful-semiprimary:
    // passing the pair law does not pass to smaller ideals.
    let tail = tail_ideal(&r, r.conductor())?;
    rep.cases += 1;
    let tail_sp = bounded_check(&Property::NSemiprimary(&tail, 2), &b)?;
    if !tail_sp.holds() {
        rep.fail(format!("conductor tail must pass the ring pair law at n=2 ({tail_sp})"));
    }
    rep.cases += 1;
    let tail_pow = bounded_check(&Property::NPowerfulSemiprimary(&tail, 2), &b)?;
    match &tail_pow {
        Verdict::Refuted { witness } => {
            if !replay_witness(&Property::NPowerfulSemiprimary(&tail, 2), witness, &b)? {
                rep.fail("conductor-tail witness failed to replay".to_string());
            }
        }
        other => rep.fail(format!("conductor tail must fail the field pair law at n=2 ({other})")),
    }
    rep.cases += 1;
    let m_pow = bounded_check(&Property::NPowerfulSemiprimary(&m, 2), &b)?;
    if !m_pow.holds() {
        rep.fail(format!("maximal ideal must pass the field pair law at n=2 ({m_pow})"));
    }
    Ok(rep)
}

fn c_cusp_profile(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    let q = match &inst.shape {
        Shape::Series { q, .. } => *q,
        _ => unreachable!(),
    };
    let nvd_refuted: &[u32] = if q == 2 { &[1, 3] } else { &[1, 2, 4] };
    expect_refuted_profile(
        &mut rep,
        "divisibility",
        &b,
        4,
        nvd_refuted,
        |n| run_verdict(&Property::Nvd(&r, n), &b),
        |n, w| replay_witness(&Property::Nvd(&r, n), w, &b),
    )?;
    expect_refuted_profile(
        &mut rep,
        "power-division law",
        &b,
        4,
        &[1],
        |n| run_verdict(&Property::Npvd(&r, n), &b),
        |n, w| replay_witness(&Property::Npvd(&r, n), w, &b),
    )?;
    Ok(rep)
}

fn c_depth_threshold_profile(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    let depth = r.conductor() as u32; // F2 + X^N F2[[X]] has conductor N
    let npvd_refuted: Vec<u32> = (1..depth).collect();
    expect_refuted_profile(
        &mut rep,
        "power-division law",
        &b,
        4,
        &npvd_refuted,
        |n| run_verdict(&Property::Npvd(&r, n), &b),
        |n, w| replay_witness(&Property::Npvd(&r, n), w, &b),
    )?;
    expect_refuted_profile(
        &mut rep,
        "divisibility",
        &b,
        4,
        &[1, 2, 3],
        |n| run_verdict(&Property::Nvd(&r, n), &b),
        |n, w| replay_witness(&Property::Nvd(&r, n), w, &b),
    )?;
    // The integral closure is the full power-series ring, certified.
    rep.cases += 1;
    let closure = integral_closure(&r, depth, &b)?;
    if !closure.closure.is_full_power_series() {
        rep.fail("integral closure must be the full power-series ring".to_string());
    }
    let closure_nvd = bounded_check(&Property::Nvd(&closure.closure, 1), &b)?;
    rep.cases += 1;
    if !matches!(closure_nvd, Verdict::CertifiedTrue { .. }) {
        rep.fail(format!("closure divisibility must be certified, got: {closure_nvd}"));
    }
    Ok(rep)
}

fn c_deep_ring_profile(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let r = inst.build_series()?;
    let tight = CheckBounds::new(-4, 4, 3)?;
    let m = maximal_ideal(&r);

    // The multiplier ring of the maximal ideal is F3 + X^3 F3[[X]].
    let colon = colon_ring(&m)?;
    rep.cases += 1;
    if colon.conductor() != 3 || colon.slot(1) != 1 || colon.slot(2) != 1 {
        rep.fail(format!(
            "multiplier ring must have conductor 3 with empty inner slots, got conductor {}",
            colon.conductor()
        ));
    }
    rep.cases += 1;
    let colon_nvd = bounded_check(&Property::Nvd(&colon, 3), &tight)?;
    if !colon_nvd.holds() {
        rep.fail(format!("multiplier ring must pass divisibility at n=3 ({colon_nvd})"));
    }

    // X^3 is not in the maximal ideal: slot 3 holds only zero.
    rep.cases += 1;
    if m.slot(3) != 1 {
        rep.fail("slot 3 of the maximal ideal must be empty".to_string());
    }

    // The field pair law fails at n=3, with the cube-of-squares witness.
    rep.cases += 1;
    let pow3 = bounded_check(&Property::NPowerfulSemiprimary(&m, 3), &tight)?;
    match &pow3 {
        Verdict::Refuted { witness } => {
            if !replay_witness(&Property::NPowerfulSemiprimary(&m, 3), witness, &tight)? {
                rep.fail("pair-law witness failed to replay".to_string());
            }
        }
        other => rep.fail(format!("pair law at n=3 must be refuted, got: {other}")),
    }
    rep.cases += 1;
    let hand = vec![
        WitnessElem { role: "x", order: 2, coeffs: vec![1], rendered: "X^2".to_string() },
        WitnessElem { role: "y", order: 2, coeffs: vec![1], rendered: "X^2".to_string() },
    ];
    if !replay_witness(&Property::NPowerfulSemiprimary(&m, 3), &hand, &tight)? {
        rep.fail("the squared-element pair must refute the pair law at n=3".to_string());
    }

    // Both escape-style laws fail at n=3; their witnesses replay.
    for (label, prop) in
        [("power-division law", Property::Npvd(&r, 3)), ("pseudo law", Property::Pnvd(&r, 3))]
    {
        rep.cases += 1;
        let v = bounded_check(&prop, &tight)?;
        match &v {
            Verdict::Refuted { witness } => {
                if !replay_witness(&prop, witness, &tight)? {
                    rep.fail(format!("{label} witness failed to replay"));
                }
            }
            other => rep.fail(format!("{label} at n=3 must be refuted, got: {other}")),
        }
    }
    Ok(rep)
}

fn c_plateau_profile(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    let q = match &inst.shape {
        Shape::Series { q, .. } => *q,
        _ => unreachable!(),
    };
    // Over F4 the characteristic-2 power maps empty the odd slots, so the
    // law also holds at n=2; over F9 only the threshold degree passes.
    let npvd_refuted: &[u32] = if q == 4 { &[1, 3] } else { &[1, 2, 3] };
    expect_refuted_profile(
        &mut rep,
        "power-division law",
        &b,
        4,
        npvd_refuted,
        |n| run_verdict(&Property::Npvd(&r, n), &b),
        |n, w| replay_witness(&Property::Npvd(&r, n), w, &b),
    )?;
    let pnvd4_refuted: &[u32] = if q == 4 { &[] } else { &[4] };
    for n in [4u32] {
        let v = bounded_check(&Property::Pnvd(&r, n), &b)?;
        rep.cases += 1;
        if v.is_refuted() != pnvd4_refuted.contains(&n) {
            rep.fail(format!("pseudo law at n={n}: unexpected verdict {v}"));
        }
        if let Verdict::Refuted { witness } = &v {
            rep.cases += 1;
            if !replay_witness(&Property::Pnvd(&r, n), witness, &b)? {
                rep.fail(format!("pseudo-law witness at n={n} failed to replay"));
            }
        }
    }
    Ok(rep)
}

fn c_staircase_profile(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    let q = match &inst.shape {
        Shape::Series { q, .. } => *q,
        _ => unreachable!(),
    };
    expect_refuted_profile(
        &mut rep,
        "power-division law",
        &b,
        4,
        &[1, 2],
        |n| run_verdict(&Property::Npvd(&r, n), &b),
        |n, w| replay_witness(&Property::Npvd(&r, n), w, &b),
    )?;
    // The pseudo law fails exactly when a constant of the big field has its
    // n-th power outside the small field: away from multiples of 3 (F4) or
    // 4 (F9).
    let pnvd_refuted: &[u32] = if q == 4 { &[1, 2, 4] } else { &[1, 2, 3] };
    expect_refuted_profile(
        &mut rep,
        "pseudo law",
        &b,
        4,
        pnvd_refuted,
        |n| run_verdict(&Property::Pnvd(&r, n), &b),
        |n, w| replay_witness(&Property::Pnvd(&r, n), w, &b),
    )?;
    Ok(rep)
}

fn c_witness_replay(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    let m = maximal_ideal(&r);
    for n in 1..=3u32 {
        let props = [
            Property::Nvd(&r, n),
            Property::Npvd(&r, n),
            Property::Pnvd(&r, n),
            Property::NPowerfulSemiprimary(&m, n),
            Property::PseudoNStronglyPrime(&m, n),
        ];
        for prop in &props {
            if let Verdict::Refuted { witness } = bounded_check(prop, &b)? {
                rep.cases += 1;
                if !replay_witness(prop, &witness, &b)? {
                    rep.fail(format!("a refutation witness at n={n} failed to replay"));
                }
            }
        }
    }
    Ok(rep)
}

fn c_colon_ring_growth(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    let m = maximal_ideal(&r);
    let colon = colon_ring(&m)?;
    rep.cases += 1;
    let max_cond = r.conductor().max(colon.conductor());
    for e in 0..max_cond {
        if r.slot(e) & !colon.slot(e) != 0 {
            rep.fail(format!("multiplier ring loses part of slot {e}"));
            break;
        }
    }
    for n in 1..=4u32 {
        let pseudo = bounded_check(&Property::Pnvd(&r, n), &b)?;
        if pseudo.holds() {
            rep.cases += 1;
            let colon_nvd = bounded_check(&Property::Nvd(&colon, n), &b)?;
            if !colon_nvd.holds() {
                rep.fail(format!(
                    "n={n}: pseudo law holds but the multiplier ring fails divisibility \
                     ({colon_nvd})"
                ));
            }
        }
    }
    Ok(rep)
}

fn c_series_maximal_semiprimary(inst: &Instance) -> Result<CaseReport> {
    let mut rep = CaseReport::default();
    let (r, b) = series_with_bounds(inst)?;
    let m = maximal_ideal(&r);
    for n in 1..=4u32 {
        rep.cases += 1;
        let v = bounded_check(&Property::NSemiprimary(&m, n), &b)?;
        if !v.holds() {
            rep.fail(format!("maximal ideal fails the ring pair law at n={n}: {v}"));
        }
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// the registry

/// All registered checks, in report order.
pub fn all_checks() -> Vec<Check> {
    fn series_named(inst: &Instance) -> bool {
        is_series(inst)
    }
    vec![
        Check {
            id: "semiprimary-radical-prime",
            law: "an ideal passing at degree n has a prime radical, and radical membership \
                  coincides with the n-th power landing in the ideal",
            applies: is_finite,
            run: c_semiprimary_radical_prime,
        },
        Check {
            id: "semiprimary-upward-monotone",
            law: "if an ideal passes at degree n it passes at every larger degree",
            applies: is_finite,
            run: c_semiprimary_upward_monotone,
        },
        Check {
            id: "exponent-set-upward-closed",
            law: "the set of passing degrees is exactly the ray from the least exponent, \
                  which is finite exactly when the radical is prime",
            applies: is_finite,
            run: c_exponent_set_upward_closed,
        },
        Check {
            id: "prime-radical-power-sufficient",
            law: "a prime radical with its k-th power inside the ideal forces passing at \
                  every degree from k on",
            applies: is_finite,
            run: c_prime_radical_power_sufficient,
        },
        Check {
            id: "primary-implies-semiprimary",
            law: "the one-sided power law (xy in I forces x in I or y^n in I) implies the \
                  two-sided one at the same degree",
            applies: is_finite,
            run: c_primary_implies_semiprimary,
        },
        Check {
            id: "absorbing-prime-radical-semiprimary",
            law: "an n-absorbing ideal with prime radical passes at every degree from n on; \
                  counterexamples returned by the absorbing scan verify",
            applies: is_finite,
            run: c_absorbing_prime_radical,
        },
        Check {
            id: "prime-power-semiprimary",
            law: "a proper power q^n of a prime ideal passes at every degree from n on",
            applies: is_finite,
            run: c_prime_power_semiprimary,
        },
        Check {
            id: "nil-contained-forces-prime",
            law: "for ideals containing every nilpotent, passing at some degree is the same \
                  as being prime",
            applies: is_finite,
            run: c_nil_contained_forces_prime,
        },
        Check {
            id: "vnr-semiprimary-is-prime",
            law: "when every element is a multiple of its own square, passing at some degree \
                  equals primality",
            applies: is_finite,
            run: c_vnr_semiprimary_is_prime,
        },
        Check {
            id: "delta-report-consistent",
            law: "the least-exponent report is internally consistent: finiteness tracks the \
                  radical, the containment exponent bounds it, and it is genuinely least",
            applies: is_finite,
            run: c_delta_report_consistent,
        },
        Check {
            id: "quotient-transport",
            law: "killing the square of an ideal changes no passing degree of that ideal",
            applies: is_finite,
            run: c_quotient_transport,
        },
        Check {
            id: "strongly-implies-plain",
            law: "the ideal-pair power law implies the element-pair power law at the same \
                  degree",
            applies: is_finite,
            run: c_strongly_implies_plain,
        },
        Check {
            id: "strongly-scaling",
            law: "the ideal-pair power law at degree n implies it at every multiple of n",
            applies: is_finite,
            run: c_strongly_scaling,
        },
        Check {
            id: "strongly-one-is-prime",
            law: "the degree-one ideal-pair law holds exactly for prime ideals",
            applies: is_finite,
            run: c_strongly_one_is_prime,
        },
        Check {
            id: "mixed-power-collapse",
            law: "at the least passing degree n, any relation x^m y^k in I forces x^n or y^n \
                  into I, and any pure power x^m in I forces x^n in",
            applies: is_finite,
            run: c_mixed_power_collapse,
        },
        Check {
            id: "divided-primes-linearly-ordered",
            law: "if every prime divides the powers of everything outside it, the primes are \
                  linearly ordered — in a finite ring, unique",
            applies: is_finite,
            run: c_divided_primes_linearly_ordered,
        },
        Check {
            id: "extension-exponent-shift",
            law: "a base ideal passing at degree n lifts (with its multiples of the module) \
                  to an ideal of the square-zero extension passing at n+1",
            applies: is_idealization,
            run: c_extension_exponent_shift,
        },
        Check {
            id: "extension-projection",
            law: "an ideal of the square-zero extension that splits as base times submodule \
                  passes only if its base projection passes at the same degree",
            applies: is_idealization,
            run: c_extension_projection,
        },
        Check {
            id: "extension-characteristic-equivalence",
            law: "at the characteristic of the base, a split ideal of the square-zero \
                  extension passes exactly when its projection does",
            applies: is_idealization,
            run: c_extension_characteristic_equivalence,
        },
        Check {
            id: "integer-exponents",
            law: "over the integers, the least exponent of (m) is k exactly when m is a k-th \
                  prime power, verified against trial division",
            applies: is_pid,
            run: c_integer_exponents,
        },
        Check {
            id: "polynomial-exponents",
            law: "over F2[t] and F3[t], the least exponent of (f) matches a brute-force \
                  prime-power decomposition for every monic f of degree at most 4",
            applies: is_pid,
            run: c_polynomial_exponents,
        },
        Check {
            id: "exponent-two-is-prime-square",
            law: "least exponent two happens exactly for squares of primes, in both \
                  principal-ideal domains",
            applies: is_pid,
            run: c_exponent_two_is_prime_square,
        },
        Check {
            id: "monomial-certificate-sound",
            law: "syntactic certificates are sound: certified-true survives a polynomial \
                  counterexample search, certified-false witnesses verify at every power",
            applies: is_monomial,
            run: c_monomial_certificate_sound,
        },
        Check {
            id: "monomial-matches-quotient",
            law: "certificates for the two-variable squares ideal agree with exhaustive \
                  checks in two finite quotient models",
            applies: named("mono-x2y2"),
            run: c_monomial_matches_quotient,
        },
        Check {
            id: "square-powers-not-absorbing",
            law: "the squares ideal passes at degree 2 while the square of the variable \
                  prime escapes it and the 2-absorbing property fails",
            applies: named("quot-f2-2x2"),
            run: c_square_powers_not_absorbing,
        },
        Check {
            id: "semiprimary-not-primary-family",
            law: "the (cross-term, pure-power) ideals pass at their generator degree yet \
                  admit a counterexample to the one-sided law at every power",
            applies: |inst| {
                inst.name == "mono-xy-y2" || inst.name == "mono-xy-y3" || inst.name == "mono-xy-y4"
            },
            run: c_semiprimary_not_primary_family,
        },
        Check {
            id: "squares-ideal-strong-gap",
            law: "the squares ideal passes the element law at degree 2 but fails the \
                  ideal-pair law there, while passing it from degree 3 on",
            applies: named("quot-f2-2x2"),
            run: c_squares_ideal_strong_gap,
        },
        Check {
            id: "product-nil-escape",
            law: "in the order-8 product ring, the second-factor ideal passes exactly from \
                  degree 2 on without being prime or containing the nilradical",
            applies: named("prod-4x2"),
            run: c_product_nil_escape,
        },
        Check {
            id: "group-catalog-profile",
            law: "the per-family passing flags and least degrees of the six standard value \
                  groups match the hand-computed table",
            applies: is_group,
            run: c_group_catalog_profile,
        },
        Check {
            id: "group-power-containment",
            law: "an ideal of a valuation domain passes at degree n exactly when the n-th \
                  power of its radical lies inside it",
            applies: is_group,
            run: c_group_power_containment,
        },
        Check {
            id: "group-idempotent-collapse",
            law: "with an idempotent radical, passing at some degree forces the ideal to \
                  equal its radical",
            applies: is_group,
            run: c_group_idempotent_collapse,
        },
        Check {
            id: "group-non-idempotent-eventually",
            law: "with a non-idempotent radical some degree always passes, and the reported \
                  least degree is consistent",
            applies: is_group,
            run: c_group_non_idempotent_eventually,
        },
        Check {
            id: "group-monotone",
            law: "per family, the passing set of degrees is upward closed",
            applies: is_group,
            run: c_group_monotone,
        },
        Check {
            id: "series-implication-chain",
            law: "divisibility implies the pseudo law implies the power-division law, degree \
                  by degree",
            applies: series_named,
            run: c_series_implication_chain,
        },
        Check {
            id: "series-maximal-field-law",
            law: "the ring-level power-division law agrees with the field-quantified pair \
                  law on the maximal ideal",
            applies: series_named,
            run: c_series_maximal_field_law,
        },
        Check {
            id: "field-law-implies-ring-law",
            law: "the field-quantified pair law on an ideal implies the ring-quantified one",
            applies: series_named,
            run: c_field_law_implies_ring_law,
        },
        Check {
            id: "powerful-exponent-doubling",
            law: "the field-quantified pair law at degree n implies it at degree 2n",
            applies: series_named,
            run: c_powerful_exponent_doubling,
        },
        Check {
            id: "pseudo-implies-powerful",
            law: "the escape law on the maximal ideal implies the field-quantified pair law",
            applies: series_named,
            run: c_pseudo_implies_powerful,
        },
        Check {
            id: "root-closed-collapse",
            law: "in an n-root-closed ring, passing at degree n collapses to degree 1, for \
                  both the power-division law and divisibility",
            applies: series_named,
            run: c_root_closed_collapse,
        },
        Check {
            id: "closure-root-extension",
            law: "when divisibility holds at degree n, the integral closure matches the \
                  radical description and its elements power back into the ring",
            applies: series_named,
            run: c_closure_root_extension,
        },
        Check {
            id: "closure-radical-correlation",
            law: "the power-division law holds at degree n exactly when the closure's \
                  maximal ideal is the n-th-power radical of the ring's",
            applies: series_named,
            run: c_closure_radical_correlation,
        },
        Check {
            id: "pullback-profile",
            law: "prime-field constants over a full tail: the pseudo and power-division \
                  laws hold at every degree, divisibility exactly when the constant \
                  subgroup index divides the degree",
            applies: |i| i.name == "pullback-f4" || i.name == "pullback-f9",
            run: c_pullback_profile,
        },
        Check {
            id: "tower-profile",
            law: "prime-field constants and linear slot: the pseudo law fails exactly away \
                  from the unit-group threshold, the power-division law from degree 2 on, \
                  divisibility never",
            applies: |i| i.name == "tower-f4" || i.name == "tower-f9",
            run: c_tower_profile,
        },
        Check {
            id: "gapped-profile",
            law: "even-slot ring: the pair law has a hole at degrees 1 and 3, and the \
                  conductor tail separates the ring law from the field law at degree 2",
            applies: named("gapped-f2"),
            run: c_gapped_profile,
        },
        Check {
            id: "cusp-profile",
            law: "one missing slot: divisibility holds exactly at multiples of the \
                  characteristic, the power-division law from degree 2 on",
            applies: |i| i.name == "cusp-f2" || i.name == "cusp-f3",
            run: c_cusp_profile,
        },
        Check {
            id: "depth-threshold-profile",
            law: "deep-gap rings pass the power-division law exactly from their conductor \
                  on, and their integral closure is the certified full ring",
            applies: |i| i.name == "depth3-f2" || i.name == "depth4-f2",
            run: c_depth_threshold_profile,
        },
        Check {
            id: "deep-ring-profile",
            law: "the conductor-12 ring with an island at 9: the multiplier ring is the \
                  conductor-3 ring passing divisibility at 3, while every degree-3 escape \
                  law fails with replaying witnesses",
            applies: named("deep-f3"),
            run: c_deep_ring_profile,
        },
        Check {
            id: "plateau-profile",
            law: "full middle slot between prime-field constants and the tail: the \
                  power-division law passes exactly at the threshold degrees for the field",
            applies: |i| i.name == "plateau-f4" || i.name == "plateau-f9",
            run: c_plateau_profile,
        },
        Check {
            id: "staircase-profile",
            law: "partial slot below the conductor: the power-division law passes from the \
                  conductor on, the pseudo law only at unit-group thresholds",
            applies: |i| i.name == "staircase-f4" || i.name == "staircase-f9",
            run: c_staircase_profile,
        },
        Check {
            id: "witness-replay",
            law: "every refutation witness produced by the bounded checks replays to a \
                  genuine counterexample",
            applies: series_named,
            run: c_witness_replay,
        },
        Check {
            id: "colon-ring-growth",
            law: "the multiplier ring of the maximal ideal contains the ring slot-by-slot, \
                  and the pseudo law forces divisibility on it at the same degree",
            applies: series_named,
            run: c_colon_ring_growth,
        },
        Check {
            id: "series-maximal-semiprimary",
            law: "the maximal ideal of every truncated series ring passes the ring pair law \
                  at every degree",
            applies: series_named,
            run: c_series_maximal_semiprimary,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{corpus, Profile};

    #[test]
    fn registry_ids_unique_and_covered() {
        let checks = all_checks();
        assert!(checks.len() >= 50, "{} checks registered", checks.len());
        let mut ids: Vec<&str> = checks.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len(), "duplicate check ids");
        // Every check matches at least one instance in every profile.
        for profile in [Profile::Small, Profile::Default, Profile::Large] {
            let instances = corpus(profile);
            for check in &checks {
                assert!(
                    instances.iter().any(|i| (check.applies)(i)),
                    "check {} matches nothing in {:?}",
                    check.id,
                    profile
                );
            }
        }
    }

    #[test]
    fn pool_shapes() {
        let r = build_finite("zn:12").unwrap();
        let (pool, kind) = ideal_pool(&r).unwrap();
        assert_eq!(kind, PoolKind::Complete);
        // Ideals of Z/12 are the divisor subgroups: (1) excluded as unit
        // ideal leaves (0),(2),(3),(4),(6),(12)=(0)... i.e. 5 proper ones.
        assert_eq!(pool.len(), 5);
        let big = build_finite("poly:p=2;caps=3,3;extra=X^2*Y^2").unwrap();
        let (pool2, _) = ideal_pool(&big).unwrap();
        assert!(!pool2.is_empty());
    }

    #[test]
    fn oracle_helpers() {
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(125), vec![(5, 3)]);
        // (t+1)^2 = t^2 + 1 over F2.
        assert_eq!(pmul(2, &[1, 1], &[1, 1]), vec![1, 0, 1]);
        assert!(is_irreducible(2, &[1, 1, 1])); // t^2 + t + 1
        assert!(!is_irreducible(2, &[1, 0, 1])); // t^2 + 1 = (t+1)^2
        let pp = poly_prime_power(2, &[1, 0, 1]);
        assert_eq!(pp, Some((2, vec![1, 1])));
        assert_eq!(poly_prime_power(2, &[0, 1, 1]), None); // t(t+1)
    }
}
