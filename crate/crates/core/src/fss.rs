//! Fuzzy soft sets over a fixed finite context.
//!
//! A fuzzy soft set assigns a fuzzy set on the universe to every parameter,
//! and is zero on parameters outside its support. Here it is stored as the
//! full `|E| x |X|` grade matrix; the support is derived from the matrix
//! rather than carried separately, which makes "zero off the support" an
//! invariant instead of a convention.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::Error;
use crate::grade::Grade;

/// The universe `X` and parameter set `E`, both ordered and duplicate-free.
///
/// Label order fixes the matrix layout of every set over the context.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Context {
    universe: Vec<String>,
    parameters: Vec<String>,
}

fn check_labels(kind: &str, labels: &[String]) -> Result<(), Error> {
    if labels.is_empty() {
        return Err(Error::InvalidContext(format!("{kind} is empty")));
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::InvalidContext(format!("duplicate {kind} label `{l}`")));
        }
    }
    Ok(())
}

impl Context {
    pub fn new<U, P>(universe: U, parameters: P) -> Result<Arc<Context>, Error>
    where
        U: IntoIterator,
        U::Item: Into<String>,
        P: IntoIterator,
        P::Item: Into<String>,
    {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        let parameters: Vec<String> = parameters.into_iter().map(Into::into).collect();
        check_labels("universe", &universe)?;
        check_labels("parameter set", &parameters)?;
        Ok(Arc::new(Context {
            universe,
            parameters,
        }))
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn points(&self) -> usize {
        self.universe.len()
    }

    pub fn params(&self) -> usize {
        self.parameters.len()
    }

    /// Number of (parameter, point) cells in a grade matrix.
    pub fn cells(&self) -> usize {
        self.universe.len() * self.parameters.len()
    }

    pub fn point_index(&self, label: &str) -> Result<usize, Error> {
        self.universe
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn param_index(&self, label: &str) -> Result<usize, Error> {
        self.parameters
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }
}

pub(crate) fn same_context(a: &Arc<Context>, b: &Arc<Context>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A fuzzy soft set: a grade for every (parameter, point) cell of a context.
#[derive(Clone)]
pub struct FuzzySoftSet {
    ctx: Arc<Context>,
    // row-major: grades[e * |X| + x]
    grades: Vec<Grade>,
}

impl FuzzySoftSet {
    fn filled(ctx: &Arc<Context>, g: Grade) -> FuzzySoftSet {
        FuzzySoftSet {
            ctx: Arc::clone(ctx),
            grades: vec![g; ctx.cells()],
        }
    }

    /// The null set: every grade is 0.
    pub fn null(ctx: &Arc<Context>) -> FuzzySoftSet {
        FuzzySoftSet::filled(ctx, Grade::ZERO)
    }

    /// The universal set: every grade is 1.
    pub fn universal(ctx: &Arc<Context>) -> FuzzySoftSet {
        FuzzySoftSet::filled(ctx, Grade::ONE)
    }

    /// `(null, universal)` over `ctx`.
    pub fn constants(ctx: &Arc<Context>) -> (FuzzySoftSet, FuzzySoftSet) {
        (FuzzySoftSet::null(ctx), FuzzySoftSet::universal(ctx))
    }

    /// Builds a set from a grade function over (parameter index, point index).
    pub fn from_fn(ctx: &Arc<Context>, mut f: impl FnMut(usize, usize) -> Grade) -> FuzzySoftSet {
        let mut grades = Vec::with_capacity(ctx.cells());
        for e in 0..ctx.params() {
            for x in 0..ctx.points() {
                grades.push(f(e, x));
            }
        }
        FuzzySoftSet {
            ctx: Arc::clone(ctx),
            grades,
        }
    }

    /// Builds a set from a dense matrix, one row per parameter.
    pub fn from_matrix(ctx: &Arc<Context>, rows: &[Vec<Grade>]) -> Result<FuzzySoftSet, Error> {
        if rows.len() != ctx.params() || rows.iter().any(|r| r.len() != ctx.points()) {
            return Err(Error::InvalidContext(format!(
                "matrix shape does not match {} parameters x {} points",
                ctx.params(),
                ctx.points()
            )));
        }
        Ok(FuzzySoftSet {
            ctx: Arc::clone(ctx),
            grades: rows.iter().flatten().copied().collect(),
        })
    }

    /// Dense matrix in text form, e.g. `&[&["1/2", "1"]]`.
    pub fn from_text_rows(ctx: &Arc<Context>, rows: &[&[&str]]) -> Result<FuzzySoftSet, Error> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| s.parse()).collect::<Result<Vec<Grade>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        FuzzySoftSet::from_matrix(ctx, &rows)
    }

    /// Builds a set from sparse labelled rows; unlisted cells are 0.
    pub fn from_rows<R, P, C, Q>(ctx: &Arc<Context>, rows: R) -> Result<FuzzySoftSet, Error>
    where
        R: IntoIterator<Item = (P, C)>,
        P: AsRef<str>,
        C: IntoIterator<Item = (Q, Grade)>,
        Q: AsRef<str>,
    {
        let mut set = FuzzySoftSet::null(ctx);
        for (param, row) in rows {
            let e = ctx.param_index(param.as_ref())?;
            for (point, grade) in row {
                let x = ctx.point_index(point.as_ref())?;
                set.grades[e * ctx.points() + x] = grade;
            }
        }
        Ok(set)
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn grade(&self, param: usize, point: usize) -> Grade {
        self.grades[param * self.ctx.points() + point]
    }

    /// Grade by labels.
    pub fn grade_of(&self, param: &str, point: &str) -> Result<Grade, Error> {
        Ok(self.grade(self.ctx.param_index(param)?, self.ctx.point_index(point)?))
    }

    /// Row-major grades, indexed `param * |X| + point`.
    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn row(&self, param: usize) -> &[Grade] {
        let w = self.ctx.points();
        &self.grades[param * w..(param + 1) * w]
    }

    /// Indices of the parameters whose row is not identically zero.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ctx.params())
            .filter(|&e| self.row(e).iter().any(|g| !g.is_zero()))
            .collect()
    }

    pub fn support_labels(&self) -> Vec<&str> {
        self.support()
            .into_iter()
            .map(|e| self.ctx.parameters[e].as_str())
            .collect()
    }

    pub fn is_null(&self) -> bool {
        self.grades.iter().all(|g| g.is_zero())
    }

    pub fn is_universal(&self) -> bool {
        self.grades.iter().all(|g| g.is_one())
    }

    /// True when every grade is 0 or 1.
    pub fn is_crisp(&self) -> bool {
        self.grades.iter().all(|g| g.is_crisp())
    }

    fn check_context(&self, other: &FuzzySoftSet) -> Result<(), Error> {
        if same_context(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Pointwise `<=`.
    pub fn is_subset(&self, other: &FuzzySoftSet) -> Result<bool, Error> {
        self.check_context(other)?;
        Ok(self.grades.iter().zip(&other.grades).all(|(a, b)| a <= b))
    }

    /// Mutual inclusion.
    pub fn set_eq(&self, other: &FuzzySoftSet) -> Result<bool, Error> {
        Ok(self.is_subset(other)? && other.is_subset(self)?)
    }

    fn zip_with(&self, other: &FuzzySoftSet, f: impl Fn(Grade, Grade) -> Grade) -> Result<FuzzySoftSet, Error> {
        self.check_context(other)?;
        Ok(FuzzySoftSet {
            ctx: Arc::clone(&self.ctx),
            grades: self.grades.iter().zip(&other.grades).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    /// Pointwise `max`.
    pub fn union(&self, other: &FuzzySoftSet) -> Result<FuzzySoftSet, Error> {
        self.zip_with(other, Grade::join)
    }

    /// Pointwise `min`.
    pub fn intersection(&self, other: &FuzzySoftSet) -> Result<FuzzySoftSet, Error> {
        self.zip_with(other, Grade::meet)
    }

    /// Pointwise `1 - g`.
    pub fn complement(&self) -> FuzzySoftSet {
        FuzzySoftSet {
            ctx: Arc::clone(&self.ctx),
            grades: self.grades.iter().map(|g| g.complement()).collect(),
        }
    }

    pub(crate) fn grades_mut(&mut self) -> &mut [Grade] {
        &mut self.grades
    }
}

/// Union of a non-empty family, or the null set over `ctx` when empty.
pub fn union_all<'a>(
    ctx: &Arc<Context>,
    family: impl IntoIterator<Item = &'a FuzzySoftSet>,
) -> Result<FuzzySoftSet, Error> {
    family
        .into_iter()
        .try_fold(FuzzySoftSet::null(ctx), |acc, s| acc.union(s))
}

/// Intersection of a family, or the universal set over `ctx` when empty.
pub fn intersection_all<'a>(
    ctx: &Arc<Context>,
    family: impl IntoIterator<Item = &'a FuzzySoftSet>,
) -> Result<FuzzySoftSet, Error> {
    family
        .into_iter()
        .try_fold(FuzzySoftSet::universal(ctx), |acc, s| acc.intersection(s))
}

impl PartialEq for FuzzySoftSet {
    fn eq(&self, other: &Self) -> bool {
        self.grades == other.grades && same_context(&self.ctx, &other.ctx)
    }
}

impl Eq for FuzzySoftSet {}

impl Hash for FuzzySoftSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.grades.hash(state);
    }
}

impl Ord for FuzzySoftSet {
    /// Row-major lexicographic on grades, then by context.
    fn cmp(&self, other: &Self) -> Ordering {
        self.grades.cmp(&other.grades).then_with(|| {
            if Arc::ptr_eq(&self.ctx, &other.ctx) {
                Ordering::Equal
            } else {
                self.ctx.cmp(&other.ctx)
            }
        })
    }
}

impl PartialOrd for FuzzySoftSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FuzzySoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for e in 0..self.ctx.params() {
            if e > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (i, g) in self.row(e).iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{g}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for FuzzySoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
