//! Finite fuzzy soft topologies.
//!
//! A topology is an explicit finite family of fuzzy soft sets containing the
//! null and universal sets and closed under pairwise union and intersection.
//! For a finite family, closure under pairwise unions is the same as closure
//! under arbitrary unions, so every topology representable here is the whole
//! story. One consequence worth keeping in mind: every such space is compact,
//! since any open cover is already a finite family.
//!
//! Members are kept sorted by the row-major lexicographic order on grade
//! matrices, so equal topologies are structurally identical.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::fss::{same_context, Context, FuzzySoftSet};

/// Default bound on the size of a generated topology.
pub const DEFAULT_CAP: usize = 4096;

/// A validated finite fuzzy soft topology.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Topology {
    ctx: Arc<Context>,
    opens: Vec<FuzzySoftSet>,
}

/// One failed axiom, with the set that should have been present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MissingNull,
    MissingUniversal,
    /// `left ∩ right = result`, and `result` is not in the family.
    Intersection {
        left: FuzzySoftSet,
        right: FuzzySoftSet,
        result: FuzzySoftSet,
    },
    /// `left ∪ right = result`, and `result` is not in the family.
    Union {
        left: FuzzySoftSet,
        right: FuzzySoftSet,
        result: FuzzySoftSet,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingNull => write!(f, "null set missing"),
            Violation::MissingUniversal => write!(f, "universal set missing"),
            Violation::Intersection {
                left,
                right,
                result,
            } => write!(f, "not closed under intersection: {left} ∩ {right} = {result} is absent"),
            Violation::Union {
                left,
                right,
                result,
            } => write!(f, "not closed under union: {left} ∪ {right} = {result} is absent"),
        }
    }
}

/// Outcome of [`validate_topology`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationReport {
    Valid(Topology),
    Invalid(Vec<Violation>),
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        matches!(self, ValidationReport::Valid(_))
    }

    pub fn topology(self) -> Option<Topology> {
        match self {
            ValidationReport::Valid(t) => Some(t),
            ValidationReport::Invalid(_) => None,
        }
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            ValidationReport::Valid(_) => &[],
            ValidationReport::Invalid(v) => v,
        }
    }
}

fn canonical(mut family: Vec<FuzzySoftSet>) -> Vec<FuzzySoftSet> {
    family.sort();
    family.dedup();
    family
}

fn check_family(ctx: &Arc<Context>, family: &[FuzzySoftSet]) -> Result<(), Error> {
    if family.iter().all(|s| same_context(ctx, s.context())) {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

/// Checks the topology axioms on `family`, reporting every violation.
pub fn validate_topology(ctx: &Arc<Context>, family: &[FuzzySoftSet]) -> Result<ValidationReport, Error> {
    check_family(ctx, family)?;
    let opens = canonical(family.to_vec());
    let present: HashSet<&FuzzySoftSet> = opens.iter().collect();
    let mut violations = Vec::new();
    let (zero, one) = FuzzySoftSet::constants(ctx);
    if !present.contains(&zero) {
        violations.push(Violation::MissingNull);
    }
    if !present.contains(&one) {
        violations.push(Violation::MissingUniversal);
    }
    for (i, a) in opens.iter().enumerate() {
        for b in &opens[i + 1..] {
            let meet = a.intersection(b)?;
            if !present.contains(&meet) {
                violations.push(Violation::Intersection {
                    left: a.clone(),
                    right: b.clone(),
                    result: meet,
                });
            }
            let join = a.union(b)?;
            if !present.contains(&join) {
                violations.push(Violation::Union {
                    left: a.clone(),
                    right: b.clone(),
                    result: join,
                });
            }
        }
    }
    if violations.is_empty() {
        Ok(ValidationReport::Valid(Topology {
            ctx: Arc::clone(ctx),
            opens,
        }))
    } else {
        Ok(ValidationReport::Invalid(violations))
    }
}

/// The smallest topology containing `generators`, by fixpoint closure under
/// pairwise union and intersection.
pub fn generate_topology(
    ctx: &Arc<Context>,
    generators: &[FuzzySoftSet],
    cap: usize,
) -> Result<Topology, Error> {
    check_family(ctx, generators)?;
    let (zero, one) = FuzzySoftSet::constants(ctx);
    let mut members: Vec<FuzzySoftSet> = Vec::new();
    let mut seen: HashSet<FuzzySoftSet> = HashSet::new();
    let mut pending: Vec<FuzzySoftSet> = Vec::new();
    for s in [zero, one].into_iter().chain(generators.iter().cloned()) {
        if seen.insert(s.clone()) {
            pending.push(s);
        }
    }
    if seen.len() > cap {
        return Err(Error::CapExceeded { cap });
    }
    // each pending set is combined with every set accepted before it
    while let Some(next) = pending.pop() {
        let mut fresh = Vec::new();
        for m in &members {
            for c in [next.union(m)?, next.intersection(m)?] {
                if !seen.contains(&c) {
                    seen.insert(c.clone());
                    fresh.push(c);
                }
            }
        }
        if seen.len() > cap {
            return Err(Error::CapExceeded { cap });
        }
        members.push(next);
        pending.extend(fresh);
    }
    Ok(Topology {
        ctx: Arc::clone(ctx),
        opens: canonical(members),
    })
}

impl Topology {
    /// `{null, universal}`.
    pub fn indiscrete(ctx: &Arc<Context>) -> Topology {
        let (zero, one) = FuzzySoftSet::constants(ctx);
        Topology {
            ctx: Arc::clone(ctx),
            opens: vec![zero, one],
        }
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    /// Open sets in canonical order.
    pub fn opens(&self) -> &[FuzzySoftSet] {
        &self.opens
    }

    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opens.is_empty()
    }

    fn check(&self, a: &FuzzySoftSet) -> Result<(), Error> {
        if same_context(&self.ctx, a.context()) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Position of `a` among the opens, if it is open.
    pub fn position(&self, a: &FuzzySoftSet) -> Option<usize> {
        self.opens.binary_search(a).ok()
    }

    pub fn is_open(&self, a: &FuzzySoftSet) -> Result<bool, Error> {
        self.check(a)?;
        Ok(self.position(a).is_some())
    }

    /// `a` is closed when its complement is open.
    pub fn is_closed(&self, a: &FuzzySoftSet) -> Result<bool, Error> {
        self.check(a)?;
        Ok(self.position(&a.complement()).is_some())
    }

    /// True when every open of `coarser` is open here.
    pub fn is_finer(&self, coarser: &Topology) -> Result<bool, Error> {
        if !same_context(&self.ctx, &coarser.ctx) {
            return Err(Error::ContextMismatch);
        }
        Ok(coarser.opens.iter().all(|a| self.position(a).is_some()))
    }

    /// Complements of all opens, canonically ordered.
    pub fn closed_family(&self) -> Vec<FuzzySoftSet> {
        canonical(self.opens.iter().map(FuzzySoftSet::complement).collect())
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.opens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
