//! The `fuzzysoft` command line.
//!
//! Exit codes: 0 when the checked property holds (or an audit finds no
//! counterexample), 1 when it fails (the report names a witness), 2 on usage
//! or file errors. [`run`] does all the work and returns the report instead
//! of printing it, so the binary is a thin wrapper.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::compactness::{
    audit_theorem, compactness_certificate, evaluate, fip_duality_check, has_fip,
    is_cover, is_hausdorff, min_subcover_with_budget, AuditInstance, CoverFamily, Evaluation, GeneratorSettings,
    MembershipRule, SubcoverMode, TheoremId, DEFAULT_ENUMERATION_CAP, DEFAULT_NODE_BUDGET,
};
use crate::error::Error;
use crate::fss::FuzzySoftSet;
use crate::io::{parse_space_file_with, ParseOptions, Space, SpaceFile, UNIV_NAME};
use crate::mapping::{MapCheck, SoftMapping};
use crate::topology::{generate_topology, validate_topology, Topology, ValidationReport, DEFAULT_CAP};

#[derive(Debug, Parser)]
#[command(name = "fuzzysoft", version, about = "Check fuzzy soft topological spaces described in space files")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the topology axioms for every topology in a file (or one of them).
    Validate(ValidateArgs),
    /// Generate the smallest topology containing the given sets.
    Generate(GenerateArgs),
    /// Produce a compactness certificate for a set.
    Compact(CompactArgs),
    /// Find a minimum subcover of a target drawn from the given sets.
    Subcover(SubcoverArgs),
    /// Check the Hausdorff separation property.
    Hausdorff(HausdorffArgs),
    /// Check that a mapping pulls opens back to opens.
    Continuous(MapArgs),
    /// Check that a mapping sends opens to opens.
    Openmap(MapArgs),
    /// Check that a mapping sends closed sets to closed sets.
    Closedmap(MapArgs),
    /// Check the finite intersection property of a family.
    Fip(FipArgs),
    /// Audit a statement on seeded random instances, or re-check a stored instance.
    Audit(AuditArgs),
}

#[derive(Debug, Args)]
struct FileArg {
    /// Space file to load.
    #[arg(long, value_name = "PATH")]
    file: PathBuf,
    /// Load topologies without checking the axioms.
    #[arg(long)]
    no_validate: bool,
}

#[derive(Debug, Args)]
struct ValidateArgs {
    #[command(flatten)]
    input: FileArg,
    /// Only check this topology.
    #[arg(long, value_name = "NAME")]
    topology: Option<String>,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[command(flatten)]
    input: FileArg,
    /// Generating sets.
    #[arg(long, value_name = "NAME,...", value_delimiter = ',', required = true)]
    sets: Vec<String>,
    /// Largest topology to build.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Debug, Args)]
struct CompactArgs {
    #[command(flatten)]
    input: FileArg,
    #[arg(long, value_name = "NAME")]
    topology: Option<String>,
    /// Set to certify.
    #[arg(long, value_name = "NAME", default_value = UNIV_NAME)]
    target: String,
    /// Largest number of subfamilies to enumerate.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: u64,
}

#[derive(Debug, Args)]
struct SubcoverArgs {
    #[command(flatten)]
    input: FileArg,
    #[arg(long, value_name = "NAME", default_value = UNIV_NAME)]
    target: String,
    /// Candidate members, in tie-breaking order.
    #[arg(long, value_name = "NAME,...", value_delimiter = ',', required = true)]
    sets: Vec<String>,
    #[arg(long, default_value_t = SubcoverMode::Exact)]
    mode: SubcoverMode,
    /// Node budget for the exact search.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
}

#[derive(Debug, Args)]
struct HausdorffArgs {
    #[command(flatten)]
    input: FileArg,
    #[arg(long, value_name = "NAME")]
    topology: Option<String>,
    /// Point membership rule; defaults to the file's rule, then some-positive.
    #[arg(long)]
    rule: Option<MembershipRule>,
}

#[derive(Debug, Args)]
struct MapArgs {
    #[command(flatten)]
    input: FileArg,
    /// Mapping to check; may be omitted when the file declares one.
    #[arg(long, value_name = "NAME")]
    map: Option<String>,
    /// Topology on the source space.
    #[arg(long, value_name = "NAME")]
    topology: Option<String>,
    /// Topology on the target space.
    #[arg(long, value_name = "NAME")]
    codomain_topology: Option<String>,
}

#[derive(Debug, Args)]
struct FipArgs {
    #[command(flatten)]
    input: FileArg,
    #[arg(long, value_name = "NAME,...", value_delimiter = ',', required = true)]
    sets: Vec<String>,
}

#[derive(Debug, Args)]
struct AuditArgs {
    /// Statement to audit: closed-subset-compact, compact-subset-closed,
    /// continuous-image-compact, continuous-closed-map or fip-characterization.
    theorem: TheoremId,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long)]
    rule: Option<MembershipRule>,
    /// Largest generated topology (8 to 16).
    #[arg(long)]
    cap: Option<usize>,
    /// Re-check the instance stored in this space file instead of sampling.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

/// Exit status and report text of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    /// The report (codes 0 and 1) or the error message (code 2).
    pub text: String,
}

struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type Report = Result<(bool, String), Failure>;

fn verdict(holds: bool, text: String) -> Report {
    Ok((holds, text))
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Output {
                code,
                text: e.render().to_string(),
            };
        }
    };
    let result = match cli.command {
        Command::Validate(a) => validate(a),
        Command::Generate(a) => generate(a),
        Command::Compact(a) => compact(a),
        Command::Subcover(a) => subcover(a),
        Command::Hausdorff(a) => hausdorff(a),
        Command::Continuous(a) => map_check(a, MapProperty::Continuous),
        Command::Openmap(a) => map_check(a, MapProperty::Open),
        Command::Closedmap(a) => map_check(a, MapProperty::Closed),
        Command::Fip(a) => fip(a),
        Command::Audit(a) => audit(a),
    };
    match result {
        Ok((holds, text)) => Output {
            code: if holds { 0 } else { 1 },
            text,
        },
        Err(Failure(message)) => Output {
            code: 2,
            text: format!("error: {message}\n"),
        },
    }
}

fn load_path(path: &PathBuf, validate: bool) -> Result<SpaceFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_space_file_with(
        &text,
        ParseOptions {
            validate_topologies: validate,
        },
    )
    .map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load(input: &FileArg) -> Result<SpaceFile, Failure> {
    load_path(&input.file, !input.no_validate)
}

fn lookup(space: &Space, name: &str, flag: &str) -> Result<FuzzySoftSet, Failure> {
    space
        .set(name)
        .ok_or_else(|| Failure(format!("{flag}: no set named `{name}`")))
}

fn lookup_all(space: &Space, names: &[String], flag: &str) -> Result<Vec<FuzzySoftSet>, Failure> {
    names.iter().map(|n| lookup(space, n, flag)).collect()
}

fn topology<'a>(space: &'a Space, name: Option<&str>, flag: &str) -> Result<(&'a str, Topology), Failure> {
    let (key, decl) = match name {
        Some(n) => space
            .topologies
            .get_key_value(n)
            .ok_or_else(|| Failure(format!("{flag}: no topology named `{n}`")))?,
        None => {
            let mut it = space.topologies.iter();
            match (it.next(), it.next()) {
                (Some(only), None) => only,
                (None, _) => return Err(Failure(format!("{flag}: the space declares no topology"))),
                _ => return Err(Failure(format!("{flag}: the space declares several topologies; pick one"))),
            }
        }
    };
    let t = decl
        .topology
        .clone()
        .ok_or_else(|| Failure(format!("{flag}: `{key}` violates the topology axioms")))?;
    Ok((key.as_str(), t))
}

fn names(space: &Space, sets: &[FuzzySoftSet]) -> String {
    sets.iter().map(|s| space.name_of(s)).collect::<Vec<_>>().join(", ")
}

fn validate(a: ValidateArgs) -> Report {
    let file = load(&a.input)?;
    let space = &file.main;
    let selected: Vec<&String> = match &a.topology {
        Some(n) if space.topologies.contains_key(n) => vec![n],
        Some(n) => return Err(Failure(format!("--topology: no topology named `{n}`"))),
        None => space.topologies.keys().collect(),
    };
    let mut out = String::new();
    let mut all_valid = true;
    for name in selected {
        let decl = &space.topologies[name];
        let report = validate_topology(&space.context, &space.family(decl))?;
        match report {
            ValidationReport::Valid(t) => {
                writeln!(out, "{name}: valid topology with {} opens", t.len()).unwrap();
            }
            ValidationReport::Invalid(violations) => {
                all_valid = false;
                writeln!(out, "{name}: not a topology").unwrap();
                for v in violations {
                    writeln!(out, "  {v}").unwrap();
                }
            }
        }
    }
    if out.is_empty() {
        out.push_str("no topologies declared\n");
    }
    verdict(all_valid, out)
}

fn generate(a: GenerateArgs) -> Report {
    let file = load(&a.input)?;
    let space = &file.main;
    let gens = lookup_all(space, &a.sets, "--sets")?;
    match generate_topology(&space.context, &gens, a.cap) {
        Ok(t) => {
            let mut out = format!("generated topology with {} opens\n", t.len());
            for open in t.opens() {
                writeln!(out, "  {}: {open}", space.name_of(open)).unwrap();
            }
            verdict(true, out)
        }
        Err(Error::CapExceeded { cap }) => verdict(false, format!("closure exceeds the cap of {cap} opens\n")),
        Err(e) => Err(e.into()),
    }
}

fn compact(a: CompactArgs) -> Report {
    let file = load(&a.input)?;
    let space = &file.main;
    let (name, t) = topology(space, a.topology.as_deref(), "--topology")?;
    let target = lookup(space, &a.target, "--target")?;
    match compactness_certificate(&t, &target, a.cap) {
        Ok(c) => {
            let mut out = format!("{} is compact in {name}\n", a.target);
            write!(out, "{c}").unwrap();
            if !out.ends_with('\n') {
                out.push('\n');
            }
            let subcover: Vec<FuzzySoftSet> = c.minimum_subcover.iter().map(|&i| t.opens()[i].clone()).collect();
            writeln!(out, "minimum subcover: [{}]", names(space, &subcover)).unwrap();
            verdict(c.compact, out)
        }
        Err(Error::CapExceeded { cap }) => verdict(
            false,
            format!("undetermined: {} subfamilies exceed the enumeration cap of {cap}\n", a.target),
        ),
        Err(e) => Err(e.into()),
    }
}

fn subcover(a: SubcoverArgs) -> Report {
    let file = load(&a.input)?;
    let space = &file.main;
    let target = lookup(space, &a.target, "--target")?;
    let members = lookup_all(space, &a.sets, "--sets")?;
    let fam = CoverFamily::new(&space.context, members)?;
    let check = is_cover(&fam, &target)?;
    if !check.covered {
        let mut out = format!("{} is not covered by [{}]\n", a.target, a.sets.join(", "));
        if let Some(d) = &check.deficiency {
            let (param, point) = d.labels(&space.context);
            writeln!(
                out,
                "deficient cell ({param}, {point}): union grade {} < target grade {}",
                d.union_grade, d.target_grade
            )
            .unwrap();
        }
        return verdict(false, out);
    }
    let budget = if a.mode == SubcoverMode::Exact { a.budget } else { DEFAULT_NODE_BUDGET };
    match min_subcover_with_budget(&fam, &target, a.mode, budget) {
        Ok(idx) => {
            let chosen: Vec<&str> = idx.iter().map(|&i| a.sets[i].as_str()).collect();
            let out = format!(
                "{} subcover of {} ({} of {} members): [{}]\n",
                a.mode,
                a.target,
                idx.len(),
                a.sets.len(),
                chosen.join(", ")
            );
            verdict(true, out)
        }
        Err(Error::SearchBudgetExceeded { budget }) => verdict(
            false,
            format!("undetermined: exact search exceeded its budget of {budget} nodes\n"),
        ),
        Err(e) => Err(e.into()),
    }
}

fn rule_for(flag: Option<MembershipRule>, file: &SpaceFile) -> MembershipRule {
    flag.or(file.rule).unwrap_or_default()
}

fn hausdorff(a: HausdorffArgs) -> Report {
    let file = load(&a.input)?;
    let rule = rule_for(a.rule, &file);
    let space = &file.main;
    let (name, t) = topology(space, a.topology.as_deref(), "--topology")?;
    let check = is_hausdorff(&t, rule);
    let u = space.context.universe();
    let mut out = String::new();
    match check.witness {
        None => {
            writeln!(out, "{name} is Hausdorff under {rule}").unwrap();
            for s in &check.separations {
                let (x, y) = s.points;
                let (i, j) = s.opens;
                writeln!(
                    out,
                    "  ({}, {}) separated by {} and {}",
                    u[x],
                    u[y],
                    space.name_of(&t.opens()[i]),
                    space.name_of(&t.opens()[j])
                )
                .unwrap();
            }
        }
        Some((x, y)) => {
            writeln!(out, "{name} is not Hausdorff under {rule}").unwrap();
            writeln!(out, "witness: ({}, {}) have no disjoint open neighbourhoods", u[x], u[y]).unwrap();
        }
    }
    verdict(check.holds, out)
}

#[derive(Clone, Copy)]
enum MapProperty {
    Continuous,
    Open,
    Closed,
}

fn map_check(a: MapArgs, property: MapProperty) -> Report {
    let file = load(&a.input)?;
    let (map_name, decl) = match &a.map {
        Some(n) => file
            .mappings
            .get_key_value(n)
            .ok_or_else(|| Failure(format!("--map: no mapping named `{n}`")))?,
        None => {
            let mut it = file.mappings.iter();
            match (it.next(), it.next()) {
                (Some(only), None) => only,
                (None, _) => return Err(Failure("--map: the file declares no mapping".into())),
                _ => return Err(Failure("--map: the file declares several mappings; pick one".into())),
            }
        }
    };
    let target_space = file
        .target_space(decl)
        .ok_or_else(|| Failure(format!("--map: target space of `{map_name}` is not declared")))?;
    let (src_name, tau) = topology(&file.main, a.topology.as_deref(), "--topology")?;
    let (dst_name, sigma) = topology(target_space, a.codomain_topology.as_deref(), "--codomain-topology")?;
    let m: &SoftMapping = &decl.mapping;
    let (check, what, witness_space): (MapCheck, &str, &Space) = match property {
        MapProperty::Continuous => (m.is_continuous(&tau, &sigma)?, "continuous", target_space),
        MapProperty::Open => (m.is_open_map(&tau, &sigma)?, "an open map", &file.main),
        MapProperty::Closed => (m.is_closed_map(&tau, &sigma)?, "a closed map", &file.main),
    };
    let mut out = String::new();
    let negation = if check.holds { "" } else { "not " };
    writeln!(out, "{map_name} is {negation}{what} from {src_name} to {dst_name}").unwrap();
    if let Some(w) = &check.witness {
        let name = witness_space.name_of(w);
        match property {
            MapProperty::Continuous => {
                let p = m.preimage(w)?;
                writeln!(out, "witness: open {name} has preimage {p}, which is not open").unwrap();
            }
            MapProperty::Open => {
                let img = m.image(w)?;
                writeln!(out, "witness: open {name} has image {img}, which is not open").unwrap();
            }
            MapProperty::Closed => {
                let img = m.image(w)?;
                writeln!(out, "witness: closed {name} has image {img}, which is not closed").unwrap();
            }
        }
    }
    verdict(check.holds, out)
}

fn fip(a: FipArgs) -> Report {
    let file = load(&a.input)?;
    let family = lookup_all(&file.main, &a.sets, "--sets")?;
    let check = has_fip(&family)?;
    let dual = fip_duality_check(&family)?;
    let mut out = String::new();
    if check.holds {
        writeln!(out, "[{}] has the finite intersection property", a.sets.join(", ")).unwrap();
    } else {
        let w: Vec<&str> = check.witness.iter().flatten().map(|&i| a.sets[i].as_str()).collect();
        writeln!(out, "[{}] lacks the finite intersection property", a.sets.join(", ")).unwrap();
        writeln!(out, "witness: [{}] has a null intersection", w.join(", ")).unwrap();
    }
    writeln!(out, "intersection equals complement of union of complements: {dual}").unwrap();
    verdict(check.holds, out)
}

fn audit(a: AuditArgs) -> Report {
    if let Some(path) = &a.file {
        let file = load_path(path, true)?;
        let mut inst = AuditInstance::from_space_file(&file).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        if let Some(rule) = a.rule {
            inst.rule = rule;
        }
        let mut out = format!("re-check {} under {}\n", a.theorem, inst.rule);
        let holds = match evaluate(a.theorem, &inst)? {
            Evaluation::Holds => {
                out.push_str("verdict: holds\n");
                true
            }
            Evaluation::Vacuous(why) => {
                writeln!(out, "verdict: hypothesis fails ({why})").unwrap();
                true
            }
            Evaluation::Violated(why) => {
                writeln!(out, "verdict: violated\nviolation: {why}").unwrap();
                false
            }
        };
        return verdict(holds, out);
    }
    let mut settings = GeneratorSettings::default();
    if let Some(rule) = a.rule {
        settings.rule = rule;
    }
    if let Some(cap) = a.cap {
        settings.topology_cap = cap;
    }
    let report = audit_theorem(a.theorem, &settings, a.seed, a.trials)?;
    verdict(report.counterexamples.is_empty(), report.to_string())
}
