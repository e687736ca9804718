//! Seeded theorem audits on generated finite instances.
//!
//! Each trial draws an instance satisfying a statement's hypotheses from a
//! generator seeded by `(seed, trial index)`, checks the conclusion with the
//! checkers of this crate, and records either a verification or a
//! counterexample. A counterexample is re-validated by serializing its
//! instance to a space file, parsing it back, and evaluating it again.
//!
//! Two of the audited statements are exact identities or finite-model truths
//! (the FIP characterization, and compactness of continuous surjective
//! images), so any counterexample there is a defect. The others rely on
//! point-set reasoning that need not carry over to fuzzy soft sets; their
//! outcomes are findings, not predictions.
//!
//! Trials may run on several threads. Each trial depends only on its own
//! index, and results are merged in index order, so the report is identical
//! for any thread count.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::compactness::certificate::{compactness_certificate, covering_subfamilies, DEFAULT_ENUMERATION_CAP};
use crate::compactness::cover::{min_subcover, CoverFamily, SubcoverMode};
use crate::compactness::fip::{audit_complement_disjointness, fip_duality_check, has_fip};
use crate::compactness::generator::{self, GeneratorSettings};
use crate::compactness::separation::{is_hausdorff, MembershipRule};
use crate::error::Error;
use crate::fss::{intersection_all, union_all, FuzzySoftSet};
use crate::io::{self, MappingDecl, MappingTarget, Space, SpaceFile};
use crate::mapping::SoftMapping;
use crate::topology::Topology;

/// The audited statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// A closed set in a compact space is compact.
    ClosedSubsetCompact,
    /// A compact set in a Hausdorff space is closed.
    CompactSubsetClosed,
    /// A continuous surjective image of a compact space is compact.
    ContinuousImageCompact,
    /// A continuous map into a Hausdorff space is closed.
    ContinuousClosedMap,
    /// Compact iff every closed family with the FIP has non-null intersection.
    FipCharacterization,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] = [
        TheoremId::ClosedSubsetCompact,
        TheoremId::CompactSubsetClosed,
        TheoremId::ContinuousImageCompact,
        TheoremId::ContinuousClosedMap,
        TheoremId::FipCharacterization,
    ];

    /// Short numbered alias, accepted on the command line next to the slug.
    pub fn alias(self) -> &'static str {
        match self {
            TheoremId::ClosedSubsetCompact => "prop3.5",
            TheoremId::CompactSubsetClosed => "prop3.7",
            TheoremId::ContinuousImageCompact => "thm3.8",
            TheoremId::ContinuousClosedMap => "thm3.10",
            TheoremId::FipCharacterization => "thm3.12",
        }
    }

    /// Name used in reports and on the command line.
    pub fn slug(self) -> &'static str {
        match self {
            TheoremId::ClosedSubsetCompact => "closed-subset-compact",
            TheoremId::CompactSubsetClosed => "compact-subset-closed",
            TheoremId::ContinuousImageCompact => "continuous-image-compact",
            TheoremId::ContinuousClosedMap => "continuous-closed-map",
            TheoremId::FipCharacterization => "fip-characterization",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::ClosedSubsetCompact => "a closed set in a compact space is compact",
            TheoremId::CompactSubsetClosed => "a compact set in a Hausdorff space is closed",
            TheoremId::ContinuousImageCompact => "a continuous surjective image of a compact space is compact",
            TheoremId::ContinuousClosedMap => "a continuous map into a Hausdorff space is closed",
            TheoremId::FipCharacterization => {
                "a space is compact iff every closed family with the FIP has non-null intersection"
            }
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.slug() == s || t.alias() == s)
            .ok_or_else(|| {
                let ids: Vec<&str> = TheoremId::ALL.iter().map(|t| t.slug()).collect();
                format!("unknown theorem `{s}` (expected one of {})", ids.join(", "))
            })
    }
}

/// A generated instance: a source space, optionally a set in it, and
/// optionally a mapping into a second space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditInstance {
    pub topology: Topology,
    pub set: Option<FuzzySoftSet>,
    pub mapping: Option<SoftMapping>,
    pub codomain: Option<Topology>,
    pub rule: MembershipRule,
}

const TOPOLOGY: &str = "tau";
const CODOMAIN: &str = "sigma";
const SET: &str = "g";
const MAPPING: &str = "m";
const TARGET_SPACE: &str = "Y";

impl AuditInstance {
    /// Space-file form: topology `tau`, set `g`, mapping `m` into space `Y`
    /// carrying topology `sigma`.
    pub fn to_space_file(&self) -> SpaceFile {
        let mut main = Space::new(self.topology.context());
        if let Some(g) = &self.set {
            main.sets.insert(SET.to_string(), g.clone());
        }
        main.add_topology(TOPOLOGY, &self.topology, "u");
        let mut file = SpaceFile::new(main);
        file.rule = Some(self.rule);
        if let (Some(m), Some(sigma)) = (&self.mapping, &self.codomain) {
            let mut y = Space::new(sigma.context());
            y.add_topology(CODOMAIN, sigma, "v");
            file.spaces.insert(TARGET_SPACE.to_string(), y);
            file.mappings.insert(
                MAPPING.to_string(),
                MappingDecl {
                    to: MappingTarget::Named(TARGET_SPACE.to_string()),
                    mapping: m.clone(),
                },
            );
        }
        file
    }

    /// Reads the layout written by [`AuditInstance::to_space_file`]. The
    /// topologies may also be the sole topology of their space.
    pub fn from_space_file(file: &SpaceFile) -> Result<AuditInstance, String> {
        fn pick(space: &Space, name: &str) -> Result<Topology, String> {
            let decl = match space.topologies.get(name) {
                Some(d) => d,
                None if space.topologies.len() == 1 => space.topologies.values().next().expect("one entry"),
                None => return Err(format!("no topology named `{name}`")),
            };
            decl.topology
                .clone()
                .ok_or_else(|| format!("topology `{name}` violates the axioms"))
        }
        let topology = pick(&file.main, TOPOLOGY)?;
        let set = file.main.sets.get(SET).cloned();
        let (mapping, codomain) = match file.mappings.get(MAPPING) {
            Some(decl) => {
                let space = file
                    .target_space(decl)
                    .ok_or_else(|| format!("mapping `{MAPPING}` has no target space"))?;
                (Some(decl.mapping.clone()), Some(pick(space, CODOMAIN)?))
            }
            None => (None, None),
        };
        Ok(AuditInstance {
            topology,
            set,
            mapping,
            codomain,
            rule: file.rule.unwrap_or_default(),
        })
    }
}

/// Result of evaluating a statement on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evaluation {
    /// A hypothesis fails, so there is nothing to check.
    Vacuous(String),
    Holds,
    Violated(String),
}

fn require<T>(v: Option<T>, what: &str) -> Result<T, Error> {
    v.ok_or_else(|| Error::InvalidGeneratorSettings(format!("instance lacks {what}")))
}

fn is_compact(t: &Topology, target: &FuzzySoftSet) -> Result<bool, Error> {
    Ok(compactness_certificate(t, target, DEFAULT_ENUMERATION_CAP)?.compact)
}

/// Subfamilies of an `n`-member family examined by the FIP audit: all of them
/// for small families; otherwise those of size at most two, their
/// complements, and the whole family.
fn tested_subfamilies(n: usize) -> Vec<Vec<usize>> {
    if n <= 8 {
        return (1u32..1 << n)
            .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
            .collect();
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        out.push(vec![i]);
        for j in i + 1..n {
            out.push(vec![i, j]);
        }
    }
    let small = out.len();
    for k in 0..small {
        let rest: Vec<usize> = (0..n).filter(|i| !out[k].contains(i)).collect();
        if !rest.is_empty() {
            out.push(rest);
        }
    }
    out.push((0..n).collect());
    out.sort();
    out.dedup();
    out
}

fn pick<T: Clone>(items: &[T], idx: &[usize]) -> Vec<T> {
    idx.iter().map(|&i| items[i].clone()).collect()
}

fn evaluate_closed_subset_compact(inst: &AuditInstance) -> Result<Evaluation, Error> {
    let t = &inst.topology;
    let g = require(inst.set.as_ref(), "a set")?;
    if !t.is_closed(g)? {
        return Ok(Evaluation::Vacuous("the set is not closed".into()));
    }
    if !is_compact(t, &FuzzySoftSet::universal(t.context()))? {
        return Ok(Evaluation::Vacuous("the space is not compact".into()));
    }
    match compactness_certificate(t, g, DEFAULT_ENUMERATION_CAP) {
        Ok(c) if c.compact => Ok(Evaluation::Holds),
        Ok(_) => Ok(Evaluation::Violated(format!("closed set {g} is not compact"))),
        Err(e) => Ok(Evaluation::Violated(format!("no compactness certificate for {g}: {e}"))),
    }
}

fn evaluate_compact_subset_closed(inst: &AuditInstance) -> Result<Evaluation, Error> {
    let t = &inst.topology;
    let g = require(inst.set.as_ref(), "a set")?;
    let h = is_hausdorff(t, inst.rule);
    if let Some((x, y)) = h.witness {
        let u = t.context().universe();
        return Ok(Evaluation::Vacuous(format!("not Hausdorff: {} and {} cannot be separated", u[x], u[y])));
    }
    if !is_compact(t, g)? {
        return Ok(Evaluation::Vacuous("the set is not compact".into()));
    }
    if t.is_closed(g)? {
        Ok(Evaluation::Holds)
    } else {
        Ok(Evaluation::Violated(format!(
            "compact set {g} is not closed: its complement {} is not open",
            g.complement()
        )))
    }
}

fn evaluate_continuous_image_compact(inst: &AuditInstance) -> Result<Evaluation, Error> {
    let tau = &inst.topology;
    let m = require(inst.mapping.as_ref(), "a mapping")?;
    let sigma = require(inst.codomain.as_ref(), "a codomain topology")?;
    if !m.is_surjective() {
        return Ok(Evaluation::Vacuous("the mapping is not onto".into()));
    }
    if let Some(w) = m.is_continuous(tau, sigma)?.witness {
        return Ok(Evaluation::Vacuous(format!("not continuous at open {w}")));
    }
    let one_x = FuzzySoftSet::universal(m.source());
    let one_y = FuzzySoftSet::universal(m.target());
    if !is_compact(tau, &one_x)? {
        return Ok(Evaluation::Vacuous("the source space is not compact".into()));
    }
    if !m.preimage(&one_y)?.is_universal() {
        return Ok(Evaluation::Violated("preimage of the universal set is not universal".into()));
    }
    if m.image(&one_x)? != one_y {
        return Ok(Evaluation::Violated("image of the universal set is not universal".into()));
    }
    let opens = sigma.opens();
    let preimages: Vec<FuzzySoftSet> = opens.iter().map(|g| m.preimage(g)).collect::<Result<_, _>>()?;
    let round_trips: Vec<FuzzySoftSet> = preimages.iter().map(|p| m.image(p)).collect::<Result<_, _>>()?;
    for (i, (g, back)) in opens.iter().zip(&round_trips).enumerate() {
        if back != g {
            return Ok(Evaluation::Violated(format!(
                "image of the preimage of open #{i} {g} is {back}"
            )));
        }
        if !tau.is_open(&preimages[i])? {
            return Ok(Evaluation::Violated(format!("preimage of open #{i} is not open")));
        }
    }
    let sigma_family = CoverFamily::new(m.target(), opens.to_vec())?;
    let covers = covering_subfamilies(&sigma_family, &one_y, DEFAULT_ENUMERATION_CAP)?;
    for cover in &covers {
        let members = pick(opens, cover);
        let pulled = pick(&preimages, cover);
        let union_pulled = union_all(m.source(), &pulled)?;
        if m.preimage(&union_all(m.target(), &members)?)? != union_pulled {
            return Ok(Evaluation::Violated(format!("cover {cover:?}: preimage does not preserve the union")));
        }
        if !union_pulled.is_universal() {
            return Ok(Evaluation::Violated(format!(
                "cover {cover:?}: preimages do not cover the source"
            )));
        }
        let pulled_family = CoverFamily::new(m.source(), pulled.clone())?;
        let finite = min_subcover(&pulled_family, &one_x, SubcoverMode::Greedy)?;
        let chosen: Vec<usize> = finite.iter().map(|&j| cover[j]).collect();
        let pushed = m.image(&union_all(m.source(), &pick(&preimages, &chosen))?)?;
        let pushed_parts = union_all(m.target(), &pick(&round_trips, &chosen))?;
        if pushed != pushed_parts {
            return Ok(Evaluation::Violated(format!(
                "cover {cover:?}: image does not distribute over the subcover union"
            )));
        }
        if !one_y.is_subset(&union_all(m.target(), &pick(opens, &chosen))?)? {
            return Ok(Evaluation::Violated(format!(
                "cover {cover:?}: pushed-forward subcover {chosen:?} misses part of the target"
            )));
        }
    }
    if !is_compact(sigma, &one_y)? {
        return Ok(Evaluation::Violated("the image space is not compact".into()));
    }
    Ok(Evaluation::Holds)
}

fn evaluate_continuous_closed_map(inst: &AuditInstance) -> Result<Evaluation, Error> {
    let tau = &inst.topology;
    let m = require(inst.mapping.as_ref(), "a mapping")?;
    let sigma = require(inst.codomain.as_ref(), "a codomain topology")?;
    if let Some(w) = m.is_continuous(tau, sigma)?.witness {
        return Ok(Evaluation::Vacuous(format!("not continuous at open {w}")));
    }
    if let Some((x, y)) = is_hausdorff(sigma, inst.rule).witness {
        let u = sigma.context().universe();
        return Ok(Evaluation::Vacuous(format!(
            "codomain not Hausdorff: {} and {} cannot be separated",
            u[x], u[y]
        )));
    }
    match m.is_closed_map(tau, sigma)?.witness {
        None => Ok(Evaluation::Holds),
        Some(w) => Ok(Evaluation::Violated(format!(
            "closed set {w} has image {} which is not closed",
            m.image(&w)?
        ))),
    }
}

fn evaluate_fip_characterization(inst: &AuditInstance) -> Result<Evaluation, Error> {
    let t = &inst.topology;
    let ctx = t.context();
    let one = FuzzySoftSet::universal(ctx);
    let compact = is_compact(t, &one)?;
    let closed = t.closed_family();

    // forward: compact => closed families with the FIP meet non-trivially
    let mut premise = true;
    for idx in tested_subfamilies(closed.len()) {
        let fam = pick(&closed, &idx);
        if !fip_duality_check(&fam)? {
            return Ok(Evaluation::Violated(format!("De Morgan duality fails on closed family {idx:?}")));
        }
        let fip = has_fip(&fam)?.holds;
        let meet = intersection_all(ctx, &fam)?;
        if fip && meet.is_null() {
            premise = false;
            if compact {
                return Ok(Evaluation::Violated(format!(
                    "closed family {idx:?} has the FIP but a null intersection"
                )));
            }
        }
    }
    // backward: the premise forces compactness
    if premise && !compact {
        return Ok(Evaluation::Violated(
            "every closed FIP family meets non-trivially, yet the space is not compact".into(),
        ));
    }
    // complements of an open cover of the universal set lack the FIP
    for idx in tested_subfamilies(t.len()) {
        let cover = pick(t.opens(), &idx);
        if !union_all(ctx, &cover)?.is_universal() {
            continue;
        }
        let dual: Vec<FuzzySoftSet> = cover.iter().map(FuzzySoftSet::complement).collect();
        if !intersection_all(ctx, &dual)?.is_null() {
            return Ok(Evaluation::Violated(format!(
                "complements of open cover {idx:?} have a non-null intersection"
            )));
        }
        if has_fip(&dual)?.holds {
            return Ok(Evaluation::Violated(format!(
                "complements of open cover {idx:?} have the FIP"
            )));
        }
    }
    Ok(Evaluation::Holds)
}

/// Evaluates a statement on an instance: hypotheses first, then conclusion.
pub fn evaluate(theorem: TheoremId, inst: &AuditInstance) -> Result<Evaluation, Error> {
    match theorem {
        TheoremId::ClosedSubsetCompact => evaluate_closed_subset_compact(inst),
        TheoremId::CompactSubsetClosed => evaluate_compact_subset_closed(inst),
        TheoremId::ContinuousImageCompact => evaluate_continuous_image_compact(inst),
        TheoremId::ContinuousClosedMap => evaluate_continuous_closed_map(inst),
        TheoremId::FipCharacterization => evaluate_fip_characterization(inst),
    }
}

/// Draws an instance satisfying the hypotheses of `theorem`.
pub fn generate_instance(theorem: TheoremId, s: &GeneratorSettings, rng: &mut impl Rng) -> AuditInstance {
    let plain = |topology: Topology, set: Option<FuzzySoftSet>| AuditInstance {
        topology,
        set,
        mapping: None,
        codomain: None,
        rule: s.rule,
    };
    match theorem {
        TheoremId::ClosedSubsetCompact => {
            let ctx = generator::random_context(rng, s, "x", "e");
            let t = generator::random_topology(rng, &ctx, s);
            let closed = t.closed_family();
            let g = closed[rng.gen_range(0..closed.len())].clone();
            plain(t, Some(g))
        }
        TheoremId::CompactSubsetClosed => {
            let ctx = generator::random_context(rng, s, "x", "e");
            let t = generator::hausdorff_topology(rng, &ctx, s);
            let g = generator::random_set(rng, &ctx, s.denominator);
            plain(t, Some(g))
        }
        TheoremId::ContinuousImageCompact => {
            let m = generator::surjective_mapping(rng, s);
            let sigma = generator::random_topology(rng, m.target(), s);
            let tau = generator::continuous_source(rng, &m, &sigma, s);
            AuditInstance {
                topology: tau,
                set: None,
                mapping: Some(m),
                codomain: Some(sigma),
                rule: s.rule,
            }
        }
        TheoremId::ContinuousClosedMap => {
            let m = generator::arbitrary_mapping(rng, s);
            let sigma = generator::hausdorff_topology(rng, m.target(), s);
            let tau = generator::continuous_source(rng, &m, &sigma, s);
            AuditInstance {
                topology: tau,
                set: None,
                mapping: Some(m),
                codomain: Some(sigma),
                rule: s.rule,
            }
        }
        TheoremId::FipCharacterization => {
            let ctx = generator::random_context(rng, s, "x", "e");
            plain(generator::random_topology(rng, &ctx, s), None)
        }
    }
}

/// Re-runs a serialized instance from scratch; true when the violation
/// reappears.
pub fn revalidate(theorem: TheoremId, space_file: &str) -> bool {
    let Ok(file) = io::parse_space_file(space_file) else {
        return false;
    };
    let Ok(inst) = AuditInstance::from_space_file(&file) else {
        return false;
    };
    matches!(evaluate(theorem, &inst), Ok(Evaluation::Violated(_)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub trial: usize,
    pub instance: AuditInstance,
    pub violation: String,
    /// The serialized instance reproduced the violation when re-run.
    pub revalidated: bool,
    /// The instance in space-file form.
    pub space_file: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub theorem: TheoremId,
    pub seed: u64,
    pub settings: GeneratorSettings,
    pub trials: usize,
    pub verified: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Per-trial observations that are not verdicts.
    pub notes: Vec<String>,
}

impl AuditReport {
    pub fn all_revalidated(&self) -> bool {
        self.counterexamples.iter().all(|c| c.revalidated)
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.settings;
        writeln!(f, "audit {}", self.theorem.slug())?;
        writeln!(f, "statement: {}", self.theorem.statement())?;
        writeln!(f, "rule: {}", s.rule)?;
        writeln!(f, "seed: {}", self.seed)?;
        writeln!(
            f,
            "generator: points<={} parameters<={} denominator={} topology-cap={} generators<={}",
            s.max_points, s.max_params, s.denominator, s.topology_cap, s.max_generators
        )?;
        writeln!(f, "trials: {}", self.trials)?;
        writeln!(f, "verified: {}", self.verified)?;
        writeln!(f, "counterexamples: {}", self.counterexamples.len())?;
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        for (i, c) in self.counterexamples.iter().enumerate() {
            writeln!(f, "--- counterexample {} (trial {}) revalidated={}", i + 1, c.trial, c.revalidated)?;
            writeln!(f, "violation: {}", c.violation)?;
            write!(f, "{}", c.space_file)?;
        }
        Ok(())
    }
}

enum TrialOutcome {
    Verified(Option<String>),
    Counterexample(Box<Counterexample>, Option<String>),
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

fn run_trial(theorem: TheoremId, s: &GeneratorSettings, seed: u64, trial: usize) -> Result<TrialOutcome, Error> {
    let mut rng = trial_rng(seed, trial);
    let inst = generate_instance(theorem, s, &mut rng);
    let note = match (theorem, &inst.set) {
        (TheoremId::ClosedSubsetCompact, Some(g)) => {
            let rec = audit_complement_disjointness(g);
            (!rec.disjoint).then(|| {
                format!(
                    "trial {trial}: closed set {g} meets its complement (crisp={}, disjoint={}); \
                     the disjointness step of the classical argument does not apply",
                    rec.crisp, rec.disjoint
                )
            })
        }
        _ => None,
    };
    match evaluate(theorem, &inst)? {
        Evaluation::Holds => Ok(TrialOutcome::Verified(note)),
        Evaluation::Vacuous(why) => Err(Error::InvalidGeneratorSettings(format!(
            "generated instance for trial {trial} misses a hypothesis: {why}"
        ))),
        Evaluation::Violated(violation) => {
            let space_file = io::serialize(&inst.to_space_file());
            let revalidated = revalidate(theorem, &space_file);
            Ok(TrialOutcome::Counterexample(
                Box::new(Counterexample {
                    trial,
                    instance: inst,
                    violation,
                    revalidated,
                    space_file,
                }),
                note,
            ))
        }
    }
}

/// Runs `trials` seeded trials on all available cores.
pub fn audit_theorem(
    theorem: TheoremId,
    settings: &GeneratorSettings,
    seed: u64,
    trials: usize,
) -> Result<AuditReport, Error> {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    audit_theorem_with_threads(theorem, settings, seed, trials, threads)
}

pub fn audit_theorem_with_threads(
    theorem: TheoremId,
    settings: &GeneratorSettings,
    seed: u64,
    trials: usize,
    threads: usize,
) -> Result<AuditReport, Error> {
    settings.validate()?;
    let threads = threads.clamp(1, trials.max(1));
    let chunk = trials.div_ceil(threads).max(1);
    let outcomes: Vec<TrialOutcome> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..trials)
            .step_by(chunk)
            .map(|start| {
                let end = (start + chunk).min(trials);
                scope.spawn(move || {
                    (start..end)
                        .map(|i| run_trial(theorem, settings, seed, i))
                        .collect::<Result<Vec<_>, _>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("audit worker panicked"))
            .collect::<Result<Vec<Vec<_>>, _>>()
            .map(|v| v.into_iter().flatten().collect())
    })?;
    let mut report = AuditReport {
        theorem,
        seed,
        settings: *settings,
        trials,
        verified: 0,
        counterexamples: Vec::new(),
        notes: Vec::new(),
    };
    for outcome in outcomes {
        let note = match outcome {
            TrialOutcome::Verified(note) => {
                report.verified += 1;
                note
            }
            TrialOutcome::Counterexample(c, note) => {
                report.counterexamples.push(*c);
                note
            }
        };
        report.notes.extend(note);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_parse() {
        for t in TheoremId::ALL {
            assert_eq!(t.alias().parse::<TheoremId>().unwrap(), t);
            assert_eq!(t.slug().parse::<TheoremId>().unwrap(), t);
        }
        assert!("thm9.9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn tested_subfamilies_shapes() {
        assert_eq!(tested_subfamilies(3).len(), 7);
        let big = tested_subfamilies(10);
        assert!(big.contains(&(0..10).collect::<Vec<_>>()));
        assert!(big.contains(&vec![3, 7]));
        assert!(big.iter().all(|f| !f.is_empty()));
    }

    #[test]
    fn instances_round_trip_through_space_files() {
        let s = GeneratorSettings::default();
        for theorem in TheoremId::ALL {
            for trial in 0..10 {
                let inst = generate_instance(theorem, &s, &mut trial_rng(3, trial));
                let text = io::serialize(&inst.to_space_file());
                let back = AuditInstance::from_space_file(&io::parse_space_file(&text).unwrap()).unwrap();
                assert_eq!(back, inst, "{theorem} trial {trial}");
            }
        }
    }

    #[test]
    fn serial_and_parallel_reports_agree() {
        let s = GeneratorSettings::default();
        for theorem in [TheoremId::CompactSubsetClosed, TheoremId::ContinuousClosedMap] {
            let serial = audit_theorem_with_threads(theorem, &s, 5, 24, 1).unwrap();
            let parallel = audit_theorem_with_threads(theorem, &s, 5, 24, 4).unwrap();
            assert_eq!(serial, parallel);
            assert_eq!(serial.verified + serial.counterexamples.len(), 24);
        }
    }

    #[test]
    fn closed_subset_audit_verifies_and_logs_the_disjointness_gap() {
        let r = audit_theorem(TheoremId::ClosedSubsetCompact, &GeneratorSettings::default(), 1, 30).unwrap();
        assert_eq!(r.verified, 30);
        assert!(r.notes.iter().all(|n| n.contains("crisp=false, disjoint=false")));
    }

    #[test]
    fn invalid_settings_are_rejected() {
        let s = GeneratorSettings {
            max_points: 9,
            ..Default::default()
        };
        assert!(matches!(
            audit_theorem(TheoremId::FipCharacterization, &s, 1, 1),
            Err(Error::InvalidGeneratorSettings(_))
        ));
    }

    #[test]
    fn hand_built_counterexample_revalidates() {
        // Hausdorff two-point space where the set [[1/2, 0]] is not closed
        let ctx = crate::fss::Context::new(["x1", "x2"], ["e1"]).unwrap();
        let p1 = FuzzySoftSet::from_text_rows(&ctx, &[&["1", "0"]]).unwrap();
        let p2 = FuzzySoftSet::from_text_rows(&ctx, &[&["0", "1"]]).unwrap();
        let t = crate::topology::generate_topology(&ctx, &[p1, p2], 16).unwrap();
        let g = FuzzySoftSet::from_text_rows(&ctx, &[&["1/2", "0"]]).unwrap();
        let inst = AuditInstance {
            topology: t,
            set: Some(g),
            mapping: None,
            codomain: None,
            rule: MembershipRule::SomePositive,
        };
        assert!(matches!(
            evaluate(TheoremId::CompactSubsetClosed, &inst).unwrap(),
            Evaluation::Violated(_)
        ));
        assert!(revalidate(TheoremId::CompactSubsetClosed, &io::serialize(&inst.to_space_file())));
    }
}
