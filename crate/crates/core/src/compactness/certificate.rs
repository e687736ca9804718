//! Compactness certificates for finite topologies.
//!
//! Every open cover of a set drawn from a finite topology is a subfamily of
//! the finite family of opens, so it is already a finite subcover of itself.
//! A certificate makes that argument concrete: it enumerates every subfamily
//! of the opens, counts the ones covering the target, and records the minimum
//! subcover of the full open family.

use std::fmt;

use crate::compactness::cover::{CellSet, CoverFamily, CoverProblem};
use crate::compactness::cover::{min_subcover, SubcoverMode};
use crate::error::Error;
use crate::fss::{same_context, FuzzySoftSet};
use crate::topology::Topology;

/// Default bound on the number of subfamilies a certificate may enumerate.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 16;

const REASONING: &str = "the topology is a finite family, so every open cover of the target \
is a finite subfamily of the opens and is its own finite subcover";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactnessCertificate {
    /// Always true for a certificate that was produced.
    pub compact: bool,
    pub opens: usize,
    pub subfamilies_examined: u64,
    pub covering_subfamilies: u64,
    /// Lexicographically smallest minimum subcover drawn from all opens.
    pub minimum_subcover: Vec<usize>,
    pub reasoning: &'static str,
}

impl fmt::Display for CompactnessCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "compact: {}", self.compact)?;
        writeln!(f, "opens: {}", self.opens)?;
        writeln!(f, "subfamilies examined: {}", self.subfamilies_examined)?;
        writeln!(f, "open covers of the target: {}", self.covering_subfamilies)?;
        writeln!(f, "minimum subcover size: {}", self.minimum_subcover.len())?;
        write!(f, "reason: {}", self.reasoning)
    }
}

fn check_cap(n: usize, cap: u64) -> Result<(), Error> {
    if n >= 64 || (1u64 << n) > cap {
        return Err(Error::CapExceeded {
            cap: cap.min(usize::MAX as u64) as usize,
        });
    }
    Ok(())
}

/// Calls `visit` with every subfamily (as sorted indices) whose union covers
/// the target, in lexicographic order of index sequences.
fn for_each_cover(problem: &CoverProblem, mut visit: impl FnMut(&[usize])) -> u64 {
    fn go(
        p: &CoverProblem,
        start: usize,
        covered: &CellSet,
        chosen: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) -> u64 {
        let mut examined = 1;
        if covered.is_superset(&p.required) {
            visit(chosen);
        }
        for i in start..p.resolves.len() {
            chosen.push(i);
            examined += go(p, i + 1, &covered.union(&p.resolves[i]), chosen, visit);
            chosen.pop();
        }
        examined
    }
    let empty = problem.required.empty_like();
    go(problem, 0, &empty, &mut Vec::new(), &mut visit)
}

/// Every subfamily of `fam` covering `target`, as index lists.
pub fn covering_subfamilies(fam: &CoverFamily, target: &FuzzySoftSet, cap: u64) -> Result<Vec<Vec<usize>>, Error> {
    if !same_context(fam.context(), target.context()) {
        return Err(Error::ContextMismatch);
    }
    check_cap(fam.len(), cap)?;
    let problem = CoverProblem::new(fam.members(), target);
    let mut out = Vec::new();
    for_each_cover(&problem, |c| out.push(c.to_vec()));
    Ok(out)
}

/// Certifies that `target` is compact in `t` by exhaustive enumeration of the
/// open subfamilies.
pub fn compactness_certificate(t: &Topology, target: &FuzzySoftSet, cap: u64) -> Result<CompactnessCertificate, Error> {
    if !same_context(t.context(), target.context()) {
        return Err(Error::ContextMismatch);
    }
    check_cap(t.len(), cap)?;
    let problem = CoverProblem::new(t.opens(), target);
    let mut covering = 0u64;
    let mut all_finite = true;
    let examined = for_each_cover(&problem, |c| {
        covering += 1;
        // a cover with finitely many members is a finite subcover of itself
        all_finite &= problem.covers(c);
    });
    // the universal set is open, so the full family always covers
    let fam = CoverFamily::new(t.context(), t.opens().to_vec())?;
    let minimum_subcover = min_subcover(&fam, target, SubcoverMode::Exact)?;
    Ok(CompactnessCertificate {
        compact: all_finite && covering > 0,
        opens: t.len(),
        subfamilies_examined: examined,
        covering_subfamilies: covering,
        minimum_subcover,
        reasoning: REASONING,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fss::Context;
    use crate::topology::{generate_topology, DEFAULT_CAP};

    #[test]
    fn indiscrete_universal_target() {
        let ctx = Context::new(["x1", "x2"], ["e1"]).unwrap();
        let t = Topology::indiscrete(&ctx);
        let one = FuzzySoftSet::universal(&ctx);
        let cert = compactness_certificate(&t, &one, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(cert.compact);
        assert_eq!(cert.subfamilies_examined, 4);
        assert_eq!(cert.covering_subfamilies, 2);
        let fam = CoverFamily::new(&ctx, t.opens().to_vec()).unwrap();
        let covers = covering_subfamilies(&fam, &one, DEFAULT_ENUMERATION_CAP).unwrap();
        // opens are [0̃, 1̃]; covers are exactly those containing 1̃
        assert_eq!(covers, vec![vec![0, 1], vec![1]]);
    }

    #[test]
    fn null_target_needs_nothing() {
        let ctx = Context::new(["x1", "x2"], ["e1"]).unwrap();
        let f = FuzzySoftSet::from_text_rows(&ctx, &[&["1/2", "1"]]).unwrap();
        let t = generate_topology(&ctx, &[f], DEFAULT_CAP).unwrap();
        let zero = FuzzySoftSet::null(&ctx);
        let cert = compactness_certificate(&t, &zero, DEFAULT_ENUMERATION_CAP).unwrap();
        assert!(cert.compact);
        assert!(cert.minimum_subcover.is_empty());
        assert_eq!(cert.covering_subfamilies, 8);
    }

    #[test]
    fn cap_is_enforced() {
        let ctx = Context::new(["x1", "x2"], ["e1"]).unwrap();
        let t = Topology::indiscrete(&ctx);
        let one = FuzzySoftSet::universal(&ctx);
        assert_eq!(
            compactness_certificate(&t, &one, 3),
            Err(Error::CapExceeded { cap: 3 })
        );
    }
}
