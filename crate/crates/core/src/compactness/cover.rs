//! Covers, subcovers and the subcover minimization problem.
//!
//! Because union is a pointwise maximum over a finite family, a family covers
//! a target exactly when every cell with a positive target grade is reached
//! by at least one member whose grade there is at least as large. That turns
//! subcover minimization into set cover over the target's positive cells,
//! which is what [`min_subcover`] solves.

use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::fss::{same_context, union_all, Context, FuzzySoftSet};
use crate::grade::Grade;

/// Default node budget for the exact subcover search.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

/// An ordered family of fuzzy soft sets over one context. Member order is the
/// tie-breaking order for subcover search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverFamily {
    ctx: Arc<Context>,
    members: Vec<FuzzySoftSet>,
}

impl CoverFamily {
    pub fn new(ctx: &Arc<Context>, members: Vec<FuzzySoftSet>) -> Result<CoverFamily, Error> {
        if members.iter().any(|m| !same_context(ctx, m.context())) {
            return Err(Error::ContextMismatch);
        }
        Ok(CoverFamily {
            ctx: Arc::clone(ctx),
            members,
        })
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn members(&self) -> &[FuzzySoftSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The subfamily at `indices`, in the given order.
    pub fn subfamily(&self, indices: &[usize]) -> CoverFamily {
        CoverFamily {
            ctx: Arc::clone(&self.ctx),
            members: indices.iter().map(|&i| self.members[i].clone()).collect(),
        }
    }

    /// Union of the members (null for the empty family).
    pub fn union(&self) -> FuzzySoftSet {
        union_all(&self.ctx, &self.members).expect("members share the family context")
    }

    /// Complements of the members, in member order.
    pub fn complements(&self) -> CoverFamily {
        CoverFamily {
            ctx: Arc::clone(&self.ctx),
            members: self.members.iter().map(FuzzySoftSet::complement).collect(),
        }
    }
}

/// A cell where the union of a family falls below the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deficiency {
    pub parameter: usize,
    pub point: usize,
    pub union_grade: Grade,
    pub target_grade: Grade,
}

impl Deficiency {
    pub fn labels<'a>(&self, ctx: &'a Context) -> (&'a str, &'a str) {
        (&ctx.parameters()[self.parameter], &ctx.universe()[self.point])
    }
}

/// Result of [`is_cover`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCheck {
    pub covered: bool,
    /// First deficient cell in row-major order.
    pub deficiency: Option<Deficiency>,
}

impl fmt::Display for CoverCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.deficiency {
            None => write!(f, "covered"),
            Some(d) => write!(
                f,
                "not covered: cell (#{}, #{}) has union grade {} < target grade {}",
                d.parameter, d.point, d.union_grade, d.target_grade
            ),
        }
    }
}

/// Does the union of `fam` dominate `target`?
pub fn is_cover(fam: &CoverFamily, target: &FuzzySoftSet) -> Result<CoverCheck, Error> {
    if !same_context(&fam.ctx, target.context()) {
        return Err(Error::ContextMismatch);
    }
    let union = fam.union();
    let width = fam.ctx.points();
    let deficiency = union
        .grades()
        .iter()
        .zip(target.grades())
        .position(|(u, t)| u < t)
        .map(|i| Deficiency {
            parameter: i / width,
            point: i % width,
            union_grade: union.grades()[i],
            target_grade: target.grades()[i],
        });
    Ok(CoverCheck {
        covered: deficiency.is_none(),
        deficiency,
    })
}

/// Subcover search strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SubcoverMode {
    /// Minimum cardinality, lexicographically smallest index set among ties.
    #[default]
    Exact,
    /// Greedy by number of newly resolved cells; valid but not always minimum.
    Greedy,
}

impl std::str::FromStr for SubcoverMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(SubcoverMode::Exact),
            "greedy" => Ok(SubcoverMode::Greedy),
            other => Err(format!("unknown subcover mode `{other}` (expected exact or greedy)")),
        }
    }
}

impl fmt::Display for SubcoverMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubcoverMode::Exact => "exact",
            SubcoverMode::Greedy => "greedy",
        })
    }
}

/// Fixed-width bitset over the cells of a context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct CellSet {
    words: Vec<u64>,
}

impl CellSet {
    pub(crate) fn empty(cells: usize) -> CellSet {
        CellSet {
            words: vec![0; cells.div_ceil(64)],
        }
    }

    pub(crate) fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn empty_like(&self) -> CellSet {
        CellSet {
            words: vec![0; self.words.len()],
        }
    }

    /// `self \ other`
    pub(crate) fn difference(&self, other: &CellSet) -> CellSet {
        CellSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    pub(crate) fn union(&self, other: &CellSet) -> CellSet {
        CellSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub(crate) fn is_superset(&self, other: &CellSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| b & !a == 0)
    }

    /// `|self ∩ other|`
    pub(crate) fn count_within(&self, other: &CellSet) -> u32 {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum()
    }

    pub(crate) fn len(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }
}

/// The cells a target needs covered, and the cells each member resolves.
pub(crate) struct CoverProblem {
    pub(crate) required: CellSet,
    pub(crate) resolves: Vec<CellSet>,
}

impl CoverProblem {
    pub(crate) fn new(members: &[FuzzySoftSet], target: &FuzzySoftSet) -> CoverProblem {
        let cells = target.grades().len();
        let mut required = CellSet::empty(cells);
        for (i, g) in target.grades().iter().enumerate() {
            if !g.is_zero() {
                required.insert(i);
            }
        }
        let resolves = members
            .iter()
            .map(|m| {
                let mut s = CellSet::empty(cells);
                for (i, (a, t)) in m.grades().iter().zip(target.grades()).enumerate() {
                    if !t.is_zero() && a >= t {
                        s.insert(i);
                    }
                }
                s
            })
            .collect();
        CoverProblem { required, resolves }
    }

    pub(crate) fn covers(&self, indices: &[usize]) -> bool {
        let mut acc = self.required.empty_like();
        for &i in indices {
            acc = acc.union(&self.resolves[i]);
        }
        acc.is_superset(&self.required)
    }

    pub(crate) fn greedy(&self) -> Vec<usize> {
        let mut covered = self.required.empty_like();
        let mut picked = Vec::new();
        while !covered.is_superset(&self.required) {
            let missing = self.required.difference(&covered);
            let best = self
                .resolves
                .iter()
                .enumerate()
                .map(|(i, s)| (s.count_within(&missing), i))
                .filter(|&(gain, _)| gain > 0)
                // largest gain, then lowest index
                .min_by_key(|&(gain, i)| (std::cmp::Reverse(gain), i));
            match best {
                Some((_, i)) => {
                    covered = covered.union(&self.resolves[i]);
                    picked.push(i);
                }
                None => break,
            }
        }
        picked.sort_unstable();
        picked
    }

    /// Iterative deepening over the subcover size; within a size, candidates
    /// are tried in increasing index order, so the first hit is the
    /// lexicographically smallest minimum subcover.
    pub(crate) fn exact(&self, budget: u64) -> Result<Vec<usize>, Error> {
        if self.required.len() == 0 {
            return Ok(Vec::new());
        }
        let mut nodes = 0u64;
        let mut chosen = Vec::new();
        let empty = self.required.empty_like();
        for size in 1..=self.resolves.len() {
            if self.search(0, size, &empty, &mut chosen, &mut nodes, budget)? {
                return Ok(chosen);
            }
        }
        // unreachable when the family covers the target
        Ok(self.greedy())
    }

    fn search(
        &self,
        start: usize,
        slots: usize,
        covered: &CellSet,
        chosen: &mut Vec<usize>,
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool, Error> {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::SearchBudgetExceeded { budget });
        }
        if covered.is_superset(&self.required) {
            return Ok(true);
        }
        if slots == 0 || start >= self.resolves.len() {
            return Ok(false);
        }
        let missing = self.required.difference(covered);
        // bound: the best `slots` remaining members must be able to fill the gap
        let mut gains: Vec<u32> = self.resolves[start..].iter().map(|s| s.count_within(&missing)).collect();
        gains.sort_unstable_by(|a, b| b.cmp(a));
        let reachable: u32 = gains.iter().take(slots).sum();
        if reachable < missing.len() {
            return Ok(false);
        }
        // every missing cell must still be reachable by some remaining member
        let mut remaining = self.required.empty_like();
        for s in &self.resolves[start..] {
            remaining = remaining.union(s);
        }
        if remaining.count_within(&missing) < missing.len() {
            return Ok(false);
        }
        for i in start..self.resolves.len() {
            // a member adding nothing never belongs to a minimum subcover
            if self.resolves[i].count_within(&missing) == 0 {
                continue;
            }
            chosen.push(i);
            let next = covered.union(&self.resolves[i]);
            if self.search(i + 1, slots - 1, &next, chosen, nodes, budget)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
}

/// Indices of a subfamily of `fam` that still covers `target`.
pub fn min_subcover(fam: &CoverFamily, target: &FuzzySoftSet, mode: SubcoverMode) -> Result<Vec<usize>, Error> {
    min_subcover_with_budget(fam, target, mode, DEFAULT_NODE_BUDGET)
}

/// [`min_subcover`] with an explicit node budget for exact mode.
pub fn min_subcover_with_budget(
    fam: &CoverFamily,
    target: &FuzzySoftSet,
    mode: SubcoverMode,
    budget: u64,
) -> Result<Vec<usize>, Error> {
    let check = is_cover(fam, target)?;
    if let Some(d) = check.deficiency {
        let (parameter, point) = d.labels(&fam.ctx);
        return Err(Error::NotACover {
            parameter: parameter.to_string(),
            point: point.to_string(),
        });
    }
    let problem = CoverProblem::new(&fam.members, target);
    match mode {
        SubcoverMode::Exact => problem.exact(budget),
        SubcoverMode::Greedy => Ok(problem.greedy()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Fx {
        ctx: Arc<Context>,
        f: FuzzySoftSet,
        g: FuzzySoftSet,
        p1: FuzzySoftSet,
        p2: FuzzySoftSet,
    }

    fn fx() -> Fx {
        let ctx = Context::new(["x1", "x2"], ["e1"]).unwrap();
        let s = |r: &[&str]| FuzzySoftSet::from_text_rows(&ctx, &[r]).unwrap();
        Fx {
            f: s(&["1/2", "1"]),
            g: s(&["1/2", "0"]),
            p1: s(&["1", "0"]),
            p2: s(&["0", "1"]),
            ctx,
        }
    }

    #[test]
    fn cover_examples() {
        let x = fx();
        let one = FuzzySoftSet::universal(&x.ctx);
        let top = CoverFamily::new(&x.ctx, vec![one.clone()]).unwrap();
        assert!(is_cover(&top, &x.f).unwrap().covered);

        let pair = CoverFamily::new(&x.ctx, vec![x.p1.clone(), x.p2.clone()]).unwrap();
        assert!(is_cover(&pair, &one).unwrap().covered);

        let lone = CoverFamily::new(&x.ctx, vec![x.g.clone()]).unwrap();
        let check = is_cover(&lone, &x.f).unwrap();
        assert!(!check.covered);
        let d = check.deficiency.unwrap();
        assert_eq!(d.labels(&x.ctx), ("e1", "x2"));
        assert_eq!((d.union_grade, d.target_grade), (Grade::ZERO, Grade::ONE));
    }

    #[test]
    fn empty_family_covers_only_null() {
        let x = fx();
        let empty = CoverFamily::new(&x.ctx, vec![]).unwrap();
        assert!(is_cover(&empty, &FuzzySoftSet::null(&x.ctx)).unwrap().covered);
        assert!(!is_cover(&empty, &x.g).unwrap().covered);
        assert_eq!(
            min_subcover(&empty, &FuzzySoftSet::null(&x.ctx), SubcoverMode::Exact).unwrap(),
            Vec::<usize>::new()
        );
    }

    #[test]
    fn subcover_examples() {
        let x = fx();
        let one = FuzzySoftSet::universal(&x.ctx);
        let with_top = CoverFamily::new(&x.ctx, vec![x.f.clone(), x.p1.clone(), one.clone()]).unwrap();
        assert_eq!(min_subcover(&with_top, &one, SubcoverMode::Exact).unwrap(), vec![2]);

        let fam = CoverFamily::new(&x.ctx, vec![x.f.clone(), x.p1.clone(), x.p2.clone(), x.g.clone()]).unwrap();
        assert_eq!(min_subcover(&fam, &one, SubcoverMode::Exact).unwrap(), vec![0, 1]);
        let greedy = min_subcover(&fam, &one, SubcoverMode::Greedy).unwrap();
        assert_eq!(greedy.len(), 2);
        assert!(is_cover(&fam.subfamily(&greedy), &one).unwrap().covered);
    }

    #[test]
    fn subcover_errors() {
        let x = fx();
        let fam = CoverFamily::new(&x.ctx, vec![x.g.clone()]).unwrap();
        assert_eq!(
            min_subcover(&fam, &x.f, SubcoverMode::Exact),
            Err(Error::NotACover {
                parameter: "e1".into(),
                point: "x2".into()
            })
        );
        let fam = CoverFamily::new(&x.ctx, vec![x.p1.clone(), x.p2.clone()]).unwrap();
        let one = FuzzySoftSet::universal(&x.ctx);
        assert_eq!(
            min_subcover_with_budget(&fam, &one, SubcoverMode::Exact, 1),
            Err(Error::SearchBudgetExceeded { budget: 1 })
        );
    }

    #[test]
    fn greedy_can_be_suboptimal() {
        // cells a..f; greedy takes the 4-cell middle set first and then needs two more
        let ctx = Context::new(["a", "b", "c", "d", "e", "f"], ["p"]).unwrap();
        let s = |r: &[&str]| FuzzySoftSet::from_text_rows(&ctx, &[r]).unwrap();
        let left = s(&["1", "1", "1", "0", "0", "0"]);
        let right = s(&["0", "0", "0", "1", "1", "1"]);
        let middle = s(&["0", "1", "1", "1", "1", "0"]);
        let fam = CoverFamily::new(&ctx, vec![middle, left, right]).unwrap();
        let one = FuzzySoftSet::universal(&ctx);
        assert_eq!(min_subcover(&fam, &one, SubcoverMode::Exact).unwrap(), vec![1, 2]);
        assert_eq!(min_subcover(&fam, &one, SubcoverMode::Greedy).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn cover_monotonicity() {
        let x = fx();
        let one = FuzzySoftSet::universal(&x.ctx);
        let small = CoverFamily::new(&x.ctx, vec![x.p1.clone(), x.p2.clone()]).unwrap();
        let big = CoverFamily::new(&x.ctx, vec![x.g.clone(), x.p1.clone(), x.p2.clone()]).unwrap();
        assert!(is_cover(&small, &one).unwrap().covered);
        assert!(is_cover(&big, &one).unwrap().covered);
        assert!(is_cover(&small, &x.f).unwrap().covered);
    }
}
