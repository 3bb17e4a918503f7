//! Verification sweeps, enumeration commands, and machine-readable reports.
//!
//! This module is the engine behind the `ainfty` binary.  Each command runs
//! a sweep — a relation check, a census, or an enumeration — and produces a
//! [`Report`]: the echoed command, the effective parameters, counters,
//! census tables, an optional listing, and the list of failures.  The exit
//! code contract is simple: success iff the failure list is empty.
//!
//! Reports are reproducible.  The JSON rendering is canonical (sorted maps,
//! no timestamps), so identical configurations — including the seed —
//! produce byte-identical reports.  Randomized sweeps draw from a
//! counter-based generator keyed by `(seed, sample index)`
//! ([`CounterRng`]), so the sample set is independent of thread count and
//! scheduling; parallel aggregation only ever merges commutatively.

use crate::algebra_a::{
    a_mul, a_recognize, a_relation_sum, ABody, AInputSequence, ATerm, Classification,
};
use crate::algebra_b::{all_words, b_homology, b_op, b_relation_sum, b_render, BBody, BTerm};
use crate::bimodules::{
    box_delta_xy, box_delta_yx, dd_relation_check, extract_phi, verify_phi_vanishing,
    xy_operations, DDClass, YGen, YQuery,
};
use crate::diagonal::{build_diagonal, verify_diagonal, weights_of_total};
use crate::ring::{Combo, Params, VMonomial, WeightVector};
use crate::tree::RightMovingConfig;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Version of the JSON report schema.
pub const SCHEMA_VERSION: u32 = 1;

/// Sweep caps: every command interprets the subset it needs.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Caps {
    /// Maximum number of operation inputs to sweep.
    pub max_inputs: usize,
    /// Maximum total weight `|w|`.
    pub max_weight: u32,
    /// Maximum word length (for `B` and homology sweeps).
    pub max_len: u32,
    /// Number of random samples in randomized sweeps.
    pub samples: u64,
    /// Seed for the counter-based generator.
    pub seed: u64,
}

/// A fully resolved run configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    /// The spoke count `N >= 2`.
    pub n: usize,
    /// Sweep caps.
    pub caps: Caps,
    /// Corrupt the multiplication table before verifying (mutation test).
    pub mutate: bool,
    /// Wrapping number for `enumerate algebra-a`.
    pub j: u32,
}

impl RunConfig {
    /// A configuration with the default caps for the given `N`: inputs up
    /// to `2N`, weight up to 1, words up to `2N + 2` letters, `1000`
    /// samples at seed `0`.
    pub fn defaults(n: usize) -> Self {
        RunConfig {
            n,
            caps: Caps {
                max_inputs: 2 * n,
                max_weight: 1,
                max_len: 2 * n as u32 + 2,
                samples: 1000,
                seed: 0,
            },
            mutate: false,
            j: 1,
        }
    }
}

/// Verification targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyTarget {
    /// Multiplication table laws plus randomized weighted relations of `A`.
    AlgebraA,
    /// `∂² = 0` and the cut relations of `B`.
    AlgebraB,
    /// The A-infinity bimodule relations of `Y`.
    BimoduleY,
    /// The structure relation and term census of `X`.
    BimoduleDd,
    /// The axioms of the weighted diagonal.
    Diagonal,
    /// The box-product and homomorphism checks behind the duality.
    Duality,
}

impl fmt::Display for VerifyTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifyTarget::AlgebraA => "algebra-a",
            VerifyTarget::AlgebraB => "algebra-b",
            VerifyTarget::BimoduleY => "bimodule-y",
            VerifyTarget::BimoduleDd => "bimodule-dd",
            VerifyTarget::Diagonal => "diagonal",
            VerifyTarget::Duality => "duality",
        })
    }
}

/// Enumeration targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerateTarget {
    /// Accepted centered operations of `A` at a given wrapping number.
    AlgebraA,
    /// The unweighted diagonal components as tree-pair chains.
    Diagonal,
    /// Homology classes of `B` up to a word length.
    HomologyB,
}

impl fmt::Display for EnumerateTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnumerateTarget::AlgebraA => "algebra-a",
            EnumerateTarget::Diagonal => "diagonal",
            EnumerateTarget::HomologyB => "homology-b",
        })
    }
}

/// Aggregated counters of a sweep.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct Counts {
    /// Sequences or objects inspected.
    pub checked: u64,
    /// Operations accepted / objects found.
    pub accepted: u64,
    /// Relation or census failures.
    pub failures: u64,
}

/// The outcome of a command.
///
/// The serialized form is canonical: maps are ordered, and nothing
/// time- or host-dependent is included, so equal configurations yield
/// byte-identical reports.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    /// JSON schema version.
    pub schema_version: u32,
    /// The command that produced this report.
    pub command: String,
    /// The spoke count.
    pub n: usize,
    /// The effective caps.
    pub caps: Caps,
    /// Aggregated counters.
    pub counts: Counts,
    /// Census tables, keyed by a human-readable class label.
    pub census: BTreeMap<String, usize>,
    /// Enumeration listing (empty for verification commands).
    pub listing: Vec<String>,
    /// Failure descriptions; empty iff the run succeeded.
    pub failures: Vec<String>,
}

impl Report {
    fn new(command: String, cfg: &RunConfig) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            n: cfg.n,
            caps: cfg.caps,
            counts: Counts::default(),
            census: BTreeMap::new(),
            listing: Vec::new(),
            failures: Vec::new(),
        }
    }

    /// Did the run succeed?  (The exit-code contract.)
    pub fn is_success(&self) -> bool {
        self.failures.is_empty()
    }

    /// Canonical JSON rendering.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human-oriented text rendering (not a stable format).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!(
            "n: {}  max-inputs: {}  max-weight: {}  max-len: {}  samples: {}  seed: {}\n",
            self.n,
            self.caps.max_inputs,
            self.caps.max_weight,
            self.caps.max_len,
            self.caps.samples,
            self.caps.seed
        ));
        out.push_str(&format!(
            "checked: {}  accepted: {}  failures: {}\n",
            self.counts.checked, self.counts.accepted, self.counts.failures
        ));
        if !self.census.is_empty() {
            out.push_str("census:\n");
            for (k, v) in &self.census {
                out.push_str(&format!("  {k}: {v}\n"));
            }
        }
        if !self.listing.is_empty() {
            out.push_str("listing:\n");
            for l in &self.listing {
                out.push_str(&format!("  {l}\n"));
            }
        }
        for f in &self.failures {
            out.push_str(&format!("FAIL: {f}\n"));
        }
        out.push_str(if self.is_success() { "ok\n" } else { "FAILED\n" });
        out
    }
}

/// A counter-based random generator keyed by `(seed, sample index)`.
///
/// Every draw is a pure function of the key and a draw counter
/// (a splitmix64-style bit finalizer), so sample `i` of a sweep is the
/// same whether it runs first, last, or on another thread.
#[derive(Clone, Copy, Debug)]
pub struct CounterRng {
    key: u64,
    counter: u64,
}

fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

impl CounterRng {
    /// The generator for sample `index` of a sweep with the given seed.
    pub fn new(seed: u64, index: u64) -> Self {
        CounterRng {
            key: mix(seed ^ mix(index)),
            counter: 0,
        }
    }

    /// The next 64 draw bits.
    pub fn next_u64(&mut self) -> u64 {
        self.counter += 1;
        mix(self.key ^ self.counter.wrapping_mul(0xd1342543de82ef95))
    }

    /// A draw uniform in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Runs a verification command.
pub fn cmd_verify(target: VerifyTarget, cfg: &RunConfig) -> Report {
    let params = Params::new(cfg.n);
    let mut report = Report::new(format!("verify {target}"), cfg);
    match target {
        VerifyTarget::AlgebraA => verify_algebra_a(&params, cfg, &mut report),
        VerifyTarget::AlgebraB => verify_algebra_b(&params, cfg, &mut report),
        VerifyTarget::BimoduleY => verify_bimodule_y(&params, cfg, &mut report),
        VerifyTarget::BimoduleDd => verify_bimodule_dd(&params, &mut report),
        VerifyTarget::Diagonal => verify_diagonal_cmd(&params, cfg, &mut report),
        VerifyTarget::Duality => verify_duality(&params, &mut report),
    }
    report.counts.failures = report.failures.len() as u64;
    report
}

/// Runs an enumeration command.
pub fn cmd_enumerate(target: EnumerateTarget, cfg: &RunConfig) -> Report {
    let params = Params::new(cfg.n);
    let mut report = Report::new(format!("enumerate {target}"), cfg);
    match target {
        EnumerateTarget::AlgebraA => enumerate_algebra_a(&params, cfg, &mut report),
        EnumerateTarget::Diagonal => enumerate_diagonal(&params, cfg, &mut report),
        EnumerateTarget::HomologyB => enumerate_homology_b(&params, cfg, &mut report),
    }
    report.counts.failures = report.failures.len() as u64;
    report
}

/// Basic and composite bodies with at most `max_letters` letters, for
/// table checks and random draws.
fn a_bodies(params: &Params, max_letters: u32) -> Vec<ABody> {
    let mut out: Vec<ABody> = (1..=params.n).map(ABody::IdempotentUnit).collect();
    for i in 1..=params.n {
        for p in 1..=max_letters {
            out.push(ABody::UPower { spoke: i, pow: p });
        }
        for steps in 1..=max_letters.min(params.n as u32) {
            out.push(ABody::Chord { start: i, steps });
        }
    }
    out
}

fn verify_algebra_a(params: &Params, cfg: &RunConfig, report: &mut Report) {
    // Multiplication-table laws.  The table is rebuilt from `a_mul`; the
    // mutation flag deletes one unit-law entry, which the law check must
    // catch (this is the self-test of the verifier).
    let bodies = a_bodies(params, params.n as u32);
    let mul = |x: &ATerm, y: &ATerm| -> Option<ATerm> {
        if cfg.mutate
            && x.body == ABody::IdempotentUnit(1)
            && y.body == (ABody::UPower { spoke: 1, pow: 1 })
        {
            return None;
        }
        a_mul(params, x, y)
    };
    for x in &bodies {
        let x = ATerm::bare(params, x.clone());
        for y in &bodies {
            let y = ATerm::bare(params, y.clone());
            report.counts.checked += 1;
            // Unit laws.
            if let Some(i) = x.body.initial() {
                let unit = ATerm::bare(params, ABody::IdempotentUnit(i));
                if mul(&unit, &x) != Some(x.clone()) {
                    report.failures.push(format!("unit law fails at iota_{i} * {x}"));
                }
            }
            // Associativity over all table triples.
            for z in &bodies {
                let z = ATerm::bare(params, z.clone());
                let lhs = mul(&x, &y).and_then(|xy| mul(&xy, &z));
                let rhs = mul(&y, &z).and_then(|yz| mul(&x, &yz));
                if lhs != rhs {
                    report
                        .failures
                        .push(format!("associativity fails at ({x}) ({y}) ({z})"));
                }
            }
        }
    }
    // Randomized weighted relation sweep, fanned out over the worker pool.
    let caps = cfg.caps;
    let outcomes: Vec<(u64, u64, Option<String>)> = (0..caps.samples)
        .into_par_iter()
        .map(|idx| {
            let mut rng = CounterRng::new(caps.seed, idx);
            let (w, items) = random_a_sequence(params, &caps, &mut rng);
            let sum = a_relation_sum(params, &w, &items);
            let accepted = count_accepted_a(params, &w, &items);
            if sum.is_zero() {
                (1, accepted, None)
            } else {
                (
                    1,
                    accepted,
                    Some(format!(
                        "relation sum nonzero at weight {w} on sample {idx}"
                    )),
                )
            }
        })
        .collect();
    for (checked, accepted, failure) in outcomes {
        report.counts.checked += checked;
        report.counts.accepted += accepted;
        report.failures.extend(failure);
    }
}

/// Draws a random weighted input sequence for the `A` relation sweep.
fn random_a_sequence(
    params: &Params,
    caps: &Caps,
    rng: &mut CounterRng,
) -> (WeightVector, Vec<ATerm>) {
    // Petal-only weight of bounded total.
    let mut w = WeightVector::zero(params);
    let total = rng.below(caps.max_weight as u64 + 1);
    for _ in 0..total {
        let r = 1 + rng.below(params.n as u64 + 1) as usize;
        w.0[r] += 1;
    }
    let n = 1 + rng.below(caps.max_inputs as u64) as usize;
    let mut items = Vec::with_capacity(n);
    for _ in 0..n {
        let body = match rng.below(8) {
            0 => ABody::IdempotentUnit(1 + rng.below(params.n as u64) as usize),
            1..=4 => ABody::UPower {
                spoke: 1 + rng.below(params.n as u64) as usize,
                pow: 1 + rng.below(2) as u32,
            },
            _ => ABody::Chord {
                start: 1 + rng.below(params.n as u64) as usize,
                steps: 1 + rng.below(params.n as u64) as u32,
            },
        };
        let coeff = if rng.below(4) == 0 {
            VMonomial::var(params, rng.below(params.num_regions() as u64) as usize)
        } else {
            VMonomial::one(params)
        };
        items.push(ATerm { coeff, body });
    }
    (w, items)
}

/// Number of accepted operations among the inner blocks of a sequence
/// (a cheap census proxy; exact recognition censuses live in
/// `cmd_enumerate`).
fn count_accepted_a(params: &Params, w: &WeightVector, items: &[ATerm]) -> u64 {
    let seq = AInputSequence {
        w: w.clone(),
        items: items.to_vec(),
    };
    if a_recognize(params, &seq).is_zero() {
        0
    } else {
        1
    }
}

fn verify_algebra_b(params: &Params, cfg: &RunConfig, report: &mut Report) {
    let words = all_words(params, cfg.caps.max_len);
    // d^2 = 0 on every word.
    let zero = WeightVector::zero(params);
    for w in &words {
        report.counts.checked += 1;
        let d = b_op(params, &zero, &[Combo::singleton(BTerm::word(params, w.clone()))]);
        let mut dd = Combo::zero();
        for t in d.iter() {
            dd.add(b_op(params, &zero, &[Combo::singleton(t.clone())]));
        }
        if !dd.is_zero() {
            report
                .failures
                .push(format!("d^2 nonzero on {}", b_render(params, &BTerm::word(params, w.clone()))));
        }
    }
    // Exhaustive relations on short sequences, random beyond.
    let short: Vec<&crate::algebra_b::BWord> =
        words.iter().filter(|w| w.letters() <= 3).collect();
    let mut weights = vec![WeightVector::zero(params)];
    for t in 1..=cfg.caps.max_weight {
        weights.extend(weights_of_total(params, t));
    }
    for x in &short {
        for y in &short {
            for w in &weights {
                report.counts.checked += 1;
                let items = [
                    BTerm::word(params, (*x).clone()),
                    BTerm::word(params, (*y).clone()),
                ];
                if !b_relation_sum(params, w, &items).is_zero() {
                    report.failures.push(format!(
                        "relation sum nonzero at weight {w} on ({}, {})",
                        b_render(params, &items[0]),
                        b_render(params, &items[1])
                    ));
                }
            }
        }
    }
    let caps = cfg.caps;
    let words_owned = words.clone();
    let outcomes: Vec<Option<String>> = (0..caps.samples)
        .into_par_iter()
        .map(|idx| {
            let mut rng = CounterRng::new(caps.seed, idx);
            let k = 1 + rng.below(caps.max_inputs.min(5) as u64) as usize;
            let items: Vec<BTerm> = (0..k)
                .map(|_| {
                    let w = &words_owned[rng.below(words_owned.len() as u64) as usize];
                    BTerm::word(params, w.clone())
                })
                .collect();
            let mut w = WeightVector::zero(params);
            for _ in 0..rng.below(caps.max_weight as u64 + 1) {
                let r = rng.below(params.num_regions() as u64) as usize;
                w.0[r] += 1;
            }
            if b_relation_sum(params, &w, &items).is_zero() {
                None
            } else {
                Some(format!("relation sum nonzero on random sample {idx}"))
            }
        })
        .collect();
    report.counts.checked += caps.samples;
    report.failures.extend(outcomes.into_iter().flatten());
}

fn verify_bimodule_y(params: &Params, cfg: &RunConfig, report: &mut Report) {
    // Exhaustive sweep over short basic-letter queries.
    let mut b_letters = Vec::new();
    let mut a_letters = Vec::new();
    for i in 1..=params.n {
        b_letters.push(BTerm::rho(params, i));
        b_letters.push(BTerm::sigma(params, i));
        a_letters.push(ATerm::u(params, i));
        a_letters.push(ATerm::s(params, i));
    }
    let mut weights = vec![WeightVector::zero(params)];
    for t in 1..=cfg.caps.max_weight {
        weights.extend(weights_of_total(params, t));
    }
    for k in 0..=2usize {
        for n in 0..=(3 - k) {
            for bs in sequences(&b_letters, k) {
                for aas in sequences(&a_letters, n) {
                    for w in &weights {
                        for x in 1..=params.n {
                            report.counts.checked += 1;
                            let q = YQuery {
                                w: w.clone(),
                                bs: bs.clone(),
                                x: YGen { i: x },
                                aas: aas.clone(),
                            };
                            if !crate::bimodules::y_relation_sum(params, &q).is_zero() {
                                report.failures.push(format!(
                                    "bimodule relation nonzero at weight {w}, generator {x}"
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    // Random longer queries.
    let caps = cfg.caps;
    let outcomes: Vec<Option<String>> = (0..caps.samples)
        .into_par_iter()
        .map(|idx| {
            let mut rng = CounterRng::new(caps.seed, idx);
            let k = rng.below(3) as usize;
            let n = rng.below(3) as usize;
            let bs: Vec<BTerm> = (0..k)
                .map(|_| b_letters[rng.below(b_letters.len() as u64) as usize].clone())
                .collect();
            let aas: Vec<ATerm> = (0..n)
                .map(|_| {
                    let mut t = a_letters[rng.below(a_letters.len() as u64) as usize].clone();
                    if rng.below(4) == 0 {
                        t.coeff = VMonomial::var(
                            params,
                            rng.below(params.num_regions() as u64) as usize,
                        );
                    }
                    t
                })
                .collect();
            let mut w = WeightVector::zero(params);
            for _ in 0..rng.below(caps.max_weight as u64 + 1) {
                w.0[rng.below(params.num_regions() as u64) as usize] += 1;
            }
            let q = YQuery {
                w,
                bs,
                x: YGen {
                    i: 1 + rng.below(params.n as u64) as usize,
                },
                aas,
            };
            if crate::bimodules::y_relation_sum(params, &q).is_zero() {
                None
            } else {
                Some(format!("bimodule relation nonzero on random sample {idx}"))
            }
        })
        .collect();
    report.counts.checked += caps.samples;
    report.failures.extend(outcomes.into_iter().flatten());
}

/// All sequences of the given length over a slice of terms.
fn sequences<T: Clone>(pool: &[T], len: usize) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .iter()
            .flat_map(|pfx| {
                pool.iter().map(move |t| {
                    let mut v = pfx.clone();
                    v.push(t.clone());
                    v
                })
            })
            .collect();
    }
    out
}

fn verify_bimodule_dd(params: &Params, report: &mut Report) {
    let config = RightMovingConfig::default();
    let diag = build_diagonal(params, 2 * params.n, 1, &config);
    let dd = dd_relation_check(params, &diag);
    report.counts.checked = dd.terms as u64;
    for (class, count) in &dd.census {
        let label = match class {
            DDClass::UV(i) => format!("U{i} (x) V{i}"),
            DDClass::OuterPair => format!("U{} (x) V{}", params.outer(), params.outer()),
            DDClass::CentralPair => "V0 (x) U0".to_string(),
            DDClass::Other(s) => format!("unexpected: {s}"),
        };
        *report.census.entry(label).or_insert(0) += count;
    }
    if !dd.relations_hold {
        report.failures.push("structure relation sum nonzero".into());
    }
    if !dd.census_matches(params) {
        report.failures.push("term census does not match".into());
    }
}

fn verify_diagonal_cmd(params: &Params, cfg: &RunConfig, report: &mut Report) {
    let config = RightMovingConfig::default();
    let diag = build_diagonal(params, cfg.caps.max_inputs, cfg.caps.max_weight, &config);
    match verify_diagonal(params, &diag, &config) {
        Ok(pairs) => {
            report.counts.checked = pairs as u64;
            report.counts.accepted = pairs as u64;
        }
        Err(e) => report.failures.push(e),
    }
    for ((n, w), chain) in &diag.components {
        report
            .census
            .insert(format!("component n={n} w={w}"), chain.len());
    }
}

fn verify_duality(params: &Params, report: &mut Report) {
    // delta^1_1 = 0 for both box products at all small weights.
    let mut weights = vec![WeightVector::zero(params)];
    weights.extend(weights_of_total(params, 1));
    for w in &weights {
        for g in 1..=params.n {
            report.counts.checked += 2;
            if !box_delta_xy(params, w, g, &[]).is_zero() {
                report
                    .failures
                    .push(format!("X><Y delta^1_1 nonzero at weight {w}, generator {g}"));
            }
            if !box_delta_yx(params, w, g, &[]).is_zero() {
                report
                    .failures
                    .push(format!("Y><X delta^1_1 nonzero at weight {w}, generator {g}"));
            }
        }
    }
    // delta^1_2 acts as the identity on the basic letters.
    let zero = WeightVector::zero(params);
    for i in 1..=params.n {
        report.counts.checked += 4;
        let u = ATerm::u(params, i);
        if box_delta_xy(params, &zero, i, std::slice::from_ref(&u))
            != Combo::singleton((u.clone(), i))
        {
            report.failures.push(format!("X><Y delta^1_2 not identity on U{i}"));
        }
        let s = ATerm::s(params, i);
        if box_delta_xy(params, &zero, i, std::slice::from_ref(&s))
            != Combo::singleton((s.clone(), params.next_spoke(i)))
        {
            report.failures.push(format!("X><Y delta^1_2 not identity on s{i}"));
        }
        let rho = BTerm::rho(params, i);
        if box_delta_yx(params, &zero, i, std::slice::from_ref(&rho))
            != Combo::singleton((rho.clone(), i))
        {
            report.failures.push(format!("Y><X delta^1_2 not identity on rho{i}"));
        }
        let sigma = BTerm::sigma(params, i);
        if box_delta_yx(params, &zero, i, std::slice::from_ref(&sigma))
            != Combo::singleton((sigma.clone(), params.next_spoke(i)))
        {
            report.failures.push(format!("Y><X delta^1_2 not identity on sigma{i}"));
        }
    }
    // The extracted homomorphism is the identity.
    let ops = xy_operations(params, 2 * params.n as u32);
    match extract_phi(&ops) {
        Ok(phi) => {
            report.counts.checked += phi.phi1.len() as u64;
            if !phi.is_identity() {
                report.failures.push("phi_1 is not the identity".into());
            }
        }
        Err(e) => report.failures.push(e),
    }
    // Higher terms vanish by the grading argument.
    match verify_phi_vanishing(params, 4, 2 * params.n as u32) {
        Ok(v) => report.counts.checked += v.b_side_classes as u64,
        Err(e) => report.failures.push(e),
    }
}

fn enumerate_algebra_a(params: &Params, cfg: &RunConfig, report: &mut Report) {
    // All idempotent-consistent basic-letter sequences of the arity pinned
    // by the wrapping number, classified by recognition.
    let j = cfg.j;
    let arity = (j as usize) * (2 * params.n - 2) + 2;
    let mut stack: Vec<Vec<ATerm>> = vec![Vec::new()];
    for _ in 0..arity {
        let mut next = Vec::new();
        for pfx in &stack {
            let from = pfx
                .last()
                .and_then(|t| t.body.final_idem(params));
            for i in 1..=params.n {
                if from.is_some_and(|f| f != i) {
                    continue;
                }
                let mut a = pfx.clone();
                a.push(ATerm::u(params, i));
                next.push(a);
                let mut a = pfx.clone();
                a.push(ATerm::s(params, i));
                next.push(a);
            }
        }
        stack = next;
    }
    let zero = WeightVector::zero(params);
    for items in stack {
        report.counts.checked += 1;
        let seq = AInputSequence {
            w: zero.clone(),
            items: items.clone(),
        };
        if let Classification::Centered { .. } = crate::algebra_a::classify_sequence(params, &seq)
        {
            let out = a_recognize(params, &seq);
            if !out.is_zero() {
                report.counts.accepted += 1;
                let inputs: Vec<String> = items.iter().map(|t| t.to_string()).collect();
                let outputs: Vec<String> = out.iter().map(|t| t.to_string()).collect();
                report
                    .listing
                    .push(format!("({}) -> {}", inputs.join(", "), outputs.join(" + ")));
            }
        }
    }
    report
        .census
        .insert(format!("accepted at j={j}"), report.counts.accepted as usize);
}

fn enumerate_diagonal(params: &Params, cfg: &RunConfig, report: &mut Report) {
    let config = RightMovingConfig::default();
    let diag = build_diagonal(params, cfg.caps.max_inputs, 0, &config);
    let zero = WeightVector::zero(params);
    for n in 2..=cfg.caps.max_inputs {
        let chain = diag.component(n, &zero);
        report.census.insert(format!("pairs at n={n}"), chain.len());
        report.counts.checked += chain.len() as u64;
        for pair in chain.iter() {
            report.listing.push(format!("n={n}: {} (x) {}", pair.left, pair.right));
        }
    }
}

fn enumerate_homology_b(params: &Params, cfg: &RunConfig, report: &mut Report) {
    let classes = b_homology(params, cfg.caps.max_len);
    report.counts.checked = all_words(params, cfg.caps.max_len).len() as u64;
    report.counts.accepted = classes.len() as u64;
    for (m, rep) in &classes {
        let terms: Vec<String> = rep.iter().map(|t| b_render(params, t)).collect();
        report.listing.push(format!("m={m}: {}", terms.join(" + ")));
        *report
            .census
            .entry(format!("classes at maslov {m}"))
            .or_insert(0) += 1;
    }
    // The ground variables V_1..V_N are boundaries within this range: each
    // V_i * unit is the differential of the bare rho_i.
    let zero = WeightVector::zero(params);
    for i in 1..=params.n {
        let d = b_op(params, &zero, &[Combo::singleton(BTerm::rho(params, i))]);
        let expected = Combo::singleton(BTerm {
            coeff: VMonomial::var(params, i),
            body: BBody::Unit(i),
        });
        if d == expected {
            report.census.insert(format!("V{i} is a boundary"), 1);
        } else {
            report.failures.push(format!("V{i} is not a boundary"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_cfg() -> RunConfig {
        let mut cfg = RunConfig::defaults(3);
        cfg.caps.samples = 50;
        cfg.caps.max_inputs = 4;
        cfg.caps.max_len = 4;
        cfg
    }

    #[test]
    fn counter_rng_is_a_pure_function() {
        let a: Vec<u64> = {
            let mut r = CounterRng::new(7, 3);
            (0..5).map(|_| r.next_u64()).collect()
        };
        let b: Vec<u64> = {
            let mut r = CounterRng::new(7, 3);
            (0..5).map(|_| r.next_u64()).collect()
        };
        assert_eq!(a, b);
        let c: Vec<u64> = {
            let mut r = CounterRng::new(7, 4);
            (0..5).map(|_| r.next_u64()).collect()
        };
        assert_ne!(a, c);
    }

    #[test]
    fn verify_algebra_a_passes_and_mutation_fails() {
        let cfg = small_cfg();
        let report = cmd_verify(VerifyTarget::AlgebraA, &cfg);
        assert!(report.is_success(), "failures: {:?}", report.failures);
        let mut bad = cfg;
        bad.mutate = true;
        let report = cmd_verify(VerifyTarget::AlgebraA, &bad);
        assert!(!report.is_success());
    }

    #[test]
    fn reports_are_byte_identical_for_equal_configs() {
        let cfg = small_cfg();
        let a = cmd_verify(VerifyTarget::AlgebraA, &cfg).to_json();
        let b = cmd_verify(VerifyTarget::AlgebraA, &cfg).to_json();
        assert_eq!(a, b);
        let mut other = small_cfg();
        other.caps.seed = 1;
        let c = cmd_verify(VerifyTarget::AlgebraA, &other).to_json();
        assert_ne!(a, c);
    }

    #[test]
    fn enumerate_algebra_a_census_at_n3() {
        let mut cfg = small_cfg();
        cfg.j = 1;
        let report = cmd_enumerate(EnumerateTarget::AlgebraA, &cfg);
        assert!(report.is_success());
        assert_eq!(report.counts.accepted, 6);
        for line in &report.listing {
            assert!(line.contains("-> V0*iota"), "unexpected output in {line}");
        }
    }

    #[test]
    fn enumerate_homology_b_finds_six_classes() {
        let mut cfg = small_cfg();
        cfg.caps.max_len = 2;
        let report = cmd_enumerate(EnumerateTarget::HomologyB, &cfg);
        assert!(report.is_success(), "failures: {:?}", report.failures);
        assert_eq!(report.counts.accepted, 6);
    }

    #[test]
    fn verify_small_targets_succeed() {
        let mut cfg = small_cfg();
        cfg.caps.samples = 20;
        for target in [
            VerifyTarget::AlgebraB,
            VerifyTarget::BimoduleY,
            VerifyTarget::Diagonal,
            VerifyTarget::Duality,
        ] {
            let report = cmd_verify(target, &cfg);
            assert!(
                report.is_success(),
                "{target} failed: {:?}",
                report.failures
            );
        }
    }
}
