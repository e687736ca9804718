//! The space file: a JSON document describing contexts, fuzzy soft sets,
//! topologies and mappings.
//!
//! ```json
//! {
//!   "universe": ["x1", "x2"],
//!   "parameters": ["e1"],
//!   "sets": { "f": { "e1": { "x1": "1/2", "x2": "1" } } },
//!   "topologies": { "tau": ["NULL", "UNIV", "f"] },
//!   "spaces": { "Y": { "universe": ["y1"], "parameters": ["k1"] } },
//!   "mappings": { "m": { "to": "Y", "point_map": { "x1": "y1", "x2": "y1" },
//!                        "param_map": { "e1": "k1" } } },
//!   "rule": "some-positive"
//! }
//! ```
//!
//! Grades are strings (`"0"`, `"1"` or `"p/q"`), never JSON numbers. Unlisted
//! cells are 0. Topologies list set names; `NULL` and `UNIV` are reserved for
//! the null and universal sets. A mapping's `to` names an entry of `spaces`,
//! the main space (`"self"`), or gives an inline space object.
//!
//! Serialization is canonical: object keys sorted, fractions reduced, zero
//! cells and all-zero rows omitted, topology member lists deduplicated with
//! `NULL` and `UNIV` first and the remaining names sorted.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::compactness::MembershipRule;
use crate::error::Error;
use crate::fss::{Context, FuzzySoftSet};
use crate::grade::Grade;
use crate::mapping::SoftMapping;
use crate::topology::{validate_topology, Topology, ValidationReport};

pub const NULL_NAME: &str = "NULL";
pub const UNIV_NAME: &str = "UNIV";
pub const SELF_SPACE: &str = "self";

/// Parse failures, each naming the offending field by its JSON path.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceFileError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: unknown label `{label}`")]
    UnknownLabel { field: String, label: String },
    #[error("{field}: bad grade `{text}`: {reason}")]
    BadGrade {
        field: String,
        text: String,
        reason: String,
    },
    #[error("{field}: topology axiom violated: {witness}")]
    TopologyAxiomViolation { field: String, witness: String },
    #[error("{field}: mapping is not total: no image for `{label}`")]
    NonTotalMapping { field: String, label: String },
    #[error("{field}: {message}")]
    Invalid { field: String, message: String },
}

impl SpaceFileError {
    /// The JSON path of the offending field, or `line:column` for syntax errors.
    pub fn location(&self) -> String {
        match self {
            SpaceFileError::Syntax { line, column, .. } => format!("{line}:{column}"),
            SpaceFileError::UnknownLabel { field, .. }
            | SpaceFileError::BadGrade { field, .. }
            | SpaceFileError::TopologyAxiomViolation { field, .. }
            | SpaceFileError::NonTotalMapping { field, .. }
            | SpaceFileError::Invalid { field, .. } => field.clone(),
        }
    }
}

type Rows = BTreeMap<String, BTreeMap<String, String>>;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpace {
    universe: Vec<String>,
    parameters: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    sets: BTreeMap<String, Rows>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    topologies: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum RawTarget {
    Named(String),
    Inline(RawSpace),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMapping {
    to: RawTarget,
    point_map: BTreeMap<String, String>,
    param_map: BTreeMap<String, String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    universe: Vec<String>,
    parameters: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    sets: BTreeMap<String, Rows>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    topologies: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    spaces: BTreeMap<String, RawSpace>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    mappings: BTreeMap<String, RawMapping>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rule: Option<String>,
}

/// A named topology as declared in a file. `topology` is `None` only when
/// the file was loaded without validation and the family is not a topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyDecl {
    pub members: Vec<String>,
    pub topology: Option<Topology>,
}

/// A context with its named sets and topologies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Space {
    pub context: Arc<Context>,
    pub sets: BTreeMap<String, FuzzySoftSet>,
    pub topologies: BTreeMap<String, TopologyDecl>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MappingTarget {
    /// `"self"` or a key of [`SpaceFile::spaces`].
    Named(String),
    Inline(Box<Space>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingDecl {
    pub to: MappingTarget,
    pub mapping: SoftMapping,
}

/// A fully resolved space file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceFile {
    pub main: Space,
    pub spaces: BTreeMap<String, Space>,
    pub mappings: BTreeMap<String, MappingDecl>,
    pub rule: Option<MembershipRule>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseOptions {
    /// Reject files whose topologies violate the axioms.
    pub validate_topologies: bool,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            validate_topologies: true,
        }
    }
}

impl Space {
    pub fn new(context: &Arc<Context>) -> Space {
        Space {
            context: Arc::clone(context),
            sets: BTreeMap::new(),
            topologies: BTreeMap::new(),
        }
    }

    /// Resolves a set name, including `NULL` and `UNIV`.
    pub fn set(&self, name: &str) -> Option<FuzzySoftSet> {
        match name {
            NULL_NAME => Some(FuzzySoftSet::null(&self.context)),
            UNIV_NAME => Some(FuzzySoftSet::universal(&self.context)),
            _ => self.sets.get(name).cloned(),
        }
    }

    /// The reserved name of `a`, or the first declared set equal to it.
    pub fn find_name(&self, a: &FuzzySoftSet) -> Option<String> {
        if a.is_null() {
            return Some(NULL_NAME.to_string());
        }
        if a.is_universal() {
            return Some(UNIV_NAME.to_string());
        }
        self.sets.iter().find(|(_, s)| *s == a).map(|(n, _)| n.clone())
    }

    /// [`Space::find_name`], falling back to the matrix text.
    pub fn name_of(&self, a: &FuzzySoftSet) -> String {
        self.find_name(a).unwrap_or_else(|| a.to_string())
    }

    /// The sets a topology declaration lists, in member order.
    pub fn family(&self, decl: &TopologyDecl) -> Vec<FuzzySoftSet> {
        decl.members.iter().filter_map(|m| self.set(m)).collect()
    }

    /// Adds a topology under `name`, declaring each non-constant open as a set
    /// named `{prefix}{i}` unless an equal set is already declared.
    pub fn add_topology(&mut self, name: &str, t: &Topology, prefix: &str) {
        let mut members = Vec::new();
        for (i, open) in t.opens().iter().enumerate() {
            let member = self.find_name(open).unwrap_or_else(|| {
                let n = format!("{prefix}{i}");
                self.sets.insert(n.clone(), open.clone());
                n
            });
            members.push(member);
        }
        self.topologies.insert(
            name.to_string(),
            TopologyDecl {
                members: canonical_members(members),
                topology: Some(t.clone()),
            },
        );
    }
}

impl SpaceFile {
    pub fn new(main: Space) -> SpaceFile {
        SpaceFile {
            main,
            spaces: BTreeMap::new(),
            mappings: BTreeMap::new(),
            rule: None,
        }
    }

    /// The space a mapping lands in.
    pub fn target_space<'a>(&'a self, decl: &'a MappingDecl) -> Option<&'a Space> {
        match &decl.to {
            MappingTarget::Named(n) if n == SELF_SPACE => Some(&self.main),
            MappingTarget::Named(n) => self.spaces.get(n),
            MappingTarget::Inline(s) => Some(s),
        }
    }
}

fn canonical_members(mut names: Vec<String>) -> Vec<String> {
    names.sort_by(|a, b| {
        let rank = |n: &str| match n {
            NULL_NAME => 0,
            UNIV_NAME => 1,
            _ => 2,
        };
        rank(a).cmp(&rank(b)).then_with(|| a.cmp(b))
    });
    names.dedup();
    names
}

fn syntax(e: serde_json::Error) -> SpaceFileError {
    SpaceFileError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn context_error(field: &str, e: Error) -> SpaceFileError {
    SpaceFileError::Invalid {
        field: field.to_string(),
        message: e.to_string(),
    }
}

fn build_space(raw: &RawSpace, path: &str, opts: ParseOptions) -> Result<Space, SpaceFileError> {
    let context = Context::new(raw.universe.iter().cloned(), raw.parameters.iter().cloned())
        .map_err(|e| context_error(if path.is_empty() { "universe" } else { path }, e))?;
    let prefix = if path.is_empty() { String::new() } else { format!("{path}.") };
    let mut space = Space::new(&context);
    for (name, rows) in &raw.sets {
        let field = format!("{prefix}sets.{name}");
        if name == NULL_NAME || name == UNIV_NAME {
            return Err(SpaceFileError::Invalid {
                field,
                message: format!("`{name}` is a reserved set name"),
            });
        }
        let mut set = FuzzySoftSet::null(&context);
        for (param, row) in rows {
            let e = context.param_index(param).map_err(|_| SpaceFileError::UnknownLabel {
                field: field.clone(),
                label: param.clone(),
            })?;
            for (point, text) in row {
                let cell = format!("{field}.{param}.{point}");
                let x = context.point_index(point).map_err(|_| SpaceFileError::UnknownLabel {
                    field: format!("{field}.{param}"),
                    label: point.clone(),
                })?;
                let grade: Grade = text.parse().map_err(|e: Error| SpaceFileError::BadGrade {
                    field: cell,
                    text: text.clone(),
                    reason: e.to_string(),
                })?;
                set.grades_mut()[e * context.points() + x] = grade;
            }
        }
        space.sets.insert(name.clone(), set);
    }
    for (name, members) in &raw.topologies {
        let field = format!("{prefix}topologies.{name}");
        let members = canonical_members(members.clone());
        let family = members
            .iter()
            .map(|m| {
                space.set(m).ok_or_else(|| SpaceFileError::UnknownLabel {
                    field: field.clone(),
                    label: m.clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let report = validate_topology(&context, &family).expect("members share the space context");
        let topology = match report {
            ValidationReport::Valid(t) => Some(t),
            ValidationReport::Invalid(violations) if opts.validate_topologies => {
                return Err(SpaceFileError::TopologyAxiomViolation {
                    field,
                    witness: violations[0].to_string(),
                });
            }
            ValidationReport::Invalid(_) => None,
        };
        space.topologies.insert(
            name.clone(),
            TopologyDecl { members, topology },
        );
    }
    Ok(space)
}

/// Parses and validates a space file.
pub fn parse_space_file(text: &str) -> Result<SpaceFile, SpaceFileError> {
    parse_space_file_with(text, ParseOptions::default())
}

pub fn parse_space_file_with(text: &str, opts: ParseOptions) -> Result<SpaceFile, SpaceFileError> {
    let raw: RawFile = serde_json::from_str(text).map_err(syntax)?;
    let main_raw = RawSpace {
        universe: raw.universe,
        parameters: raw.parameters,
        sets: raw.sets,
        topologies: raw.topologies,
    };
    let main = build_space(&main_raw, "", opts)?;
    let mut spaces = BTreeMap::new();
    for (name, s) in &raw.spaces {
        if name == SELF_SPACE {
            return Err(SpaceFileError::Invalid {
                field: format!("spaces.{name}"),
                message: format!("`{SELF_SPACE}` is a reserved space name"),
            });
        }
        spaces.insert(name.clone(), build_space(s, &format!("spaces.{name}"), opts)?);
    }
    let mut file = SpaceFile {
        main,
        spaces,
        mappings: BTreeMap::new(),
        rule: None,
    };
    if let Some(rule) = &raw.rule {
        file.rule = Some(rule.parse().map_err(|message| SpaceFileError::Invalid {
            field: "rule".into(),
            message,
        })?);
    }
    for (name, m) in &raw.mappings {
        let field = format!("mappings.{name}");
        let to = match &m.to {
            RawTarget::Named(n) => {
                if n != SELF_SPACE && !file.spaces.contains_key(n) {
                    return Err(SpaceFileError::UnknownLabel {
                        field: format!("{field}.to"),
                        label: n.clone(),
                    });
                }
                MappingTarget::Named(n.clone())
            }
            RawTarget::Inline(s) => MappingTarget::Inline(Box::new(build_space(s, &format!("{field}.to"), opts)?)),
        };
        let target_ctx = match &to {
            MappingTarget::Named(n) if n == SELF_SPACE => Arc::clone(&file.main.context),
            MappingTarget::Named(n) => Arc::clone(&file.spaces[n].context),
            MappingTarget::Inline(s) => Arc::clone(&s.context),
        };
        let source = &file.main.context;
        let mapping = SoftMapping::new(source, &target_ctx, &m.point_map, &m.param_map).map_err(|e| match e {
            Error::NonTotalMapping(label) => {
                let kind = if source.universe().contains(&label) { "point_map" } else { "param_map" };
                SpaceFileError::NonTotalMapping {
                    field: format!("{field}.{kind}"),
                    label,
                }
            }
            Error::UnknownLabel(label) => SpaceFileError::UnknownLabel { field: field.clone(), label },
            other => context_error(&field, other),
        })?;
        file.mappings.insert(name.clone(), MappingDecl { to, mapping });
    }
    Ok(file)
}

fn raw_space(space: &Space) -> RawSpace {
    let ctx = &space.context;
    let sets = space
        .sets
        .iter()
        .map(|(name, set)| {
            let mut rows = Rows::new();
            for e in 0..ctx.params() {
                let row: BTreeMap<String, String> = (0..ctx.points())
                    .filter(|&x| !set.grade(e, x).is_zero())
                    .map(|x| (ctx.universe()[x].clone(), set.grade(e, x).to_string()))
                    .collect();
                if !row.is_empty() {
                    rows.insert(ctx.parameters()[e].clone(), row);
                }
            }
            (name.clone(), rows)
        })
        .collect();
    let topologies = space
        .topologies
        .iter()
        .map(|(name, decl)| (name.clone(), canonical_members(decl.members.clone())))
        .collect();
    RawSpace {
        universe: ctx.universe().to_vec(),
        parameters: ctx.parameters().to_vec(),
        sets,
        topologies,
    }
}

fn label_map(from: &[String], to: &[String], table: &[usize]) -> BTreeMap<String, String> {
    from.iter().zip(table).map(|(a, &b)| (a.clone(), to[b].clone())).collect()
}

/// Canonical text of a space file, ending in a newline.
pub fn serialize(file: &SpaceFile) -> String {
    let main = raw_space(&file.main);
    let mappings = file
        .mappings
        .iter()
        .map(|(name, decl)| {
            let m = &decl.mapping;
            let (src, dst) = (m.source(), m.target());
            let to = match &decl.to {
                MappingTarget::Named(n) => RawTarget::Named(n.clone()),
                MappingTarget::Inline(s) => RawTarget::Inline(raw_space(s)),
            };
            let raw = RawMapping {
                to,
                point_map: label_map(src.universe(), dst.universe(), m.point_map()),
                param_map: label_map(src.parameters(), dst.parameters(), m.param_map()),
            };
            (name.clone(), raw)
        })
        .collect();
    let raw = RawFile {
        universe: main.universe,
        parameters: main.parameters,
        sets: main.sets,
        topologies: main.topologies,
        spaces: file.spaces.iter().map(|(n, s)| (n.clone(), raw_space(s))).collect(),
        mappings,
        rule: file.rule.map(|r| r.to_string()),
    };
    let mut text = serde_json::to_string_pretty(&raw).expect("plain data serializes");
    text.push('\n');
    text
}
