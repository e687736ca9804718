//! Point membership and Hausdorff separation.
//!
//! What it means for a crisp point to lie in a fuzzy soft set is not fixed by
//! the surrounding theory, so the reading is a parameter. Three readings are
//! offered; audits can be run under each and compared.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::fss::FuzzySoftSet;
use crate::topology::Topology;

/// How `x ∈ (f, A)` is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum MembershipRule {
    /// Some parameter gives `x` a positive grade.
    #[default]
    SomePositive,
    /// Every parameter gives `x` a positive grade.
    AllPositive,
    /// Every parameter gives `x` grade 1.
    AllOne,
}

impl MembershipRule {
    pub const ALL: [MembershipRule; 3] = [
        MembershipRule::SomePositive,
        MembershipRule::AllPositive,
        MembershipRule::AllOne,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MembershipRule::SomePositive => "some-positive",
            MembershipRule::AllPositive => "all-positive",
            MembershipRule::AllOne => "all-one",
        }
    }
}

impl fmt::Display for MembershipRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MembershipRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MembershipRule::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| format!("unknown membership rule `{s}` (expected some-positive, all-positive or all-one)"))
    }
}

/// Membership of the point at index `x`.
pub fn contains_point(a: &FuzzySoftSet, x: usize, rule: MembershipRule) -> bool {
    let mut column = (0..a.context().params()).map(|e| a.grade(e, x));
    match rule {
        MembershipRule::SomePositive => column.any(|g| !g.is_zero()),
        MembershipRule::AllPositive => column.all(|g| !g.is_zero()),
        MembershipRule::AllOne => column.all(|g| g.is_one()),
    }
}

/// Membership of the point labelled `x`.
pub fn member_point(x: &str, a: &FuzzySoftSet, rule: MembershipRule) -> Result<bool, Error> {
    let i = a.context().point_index(x)?;
    Ok(contains_point(a, i, rule))
}

/// Disjoint opens separating a pair of points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub points: (usize, usize),
    /// Indices into the topology's opens.
    pub opens: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HausdorffCheck {
    pub holds: bool,
    /// First non-separable pair `(x, y)` with `x < y`.
    pub witness: Option<(usize, usize)>,
    pub separations: Vec<Separation>,
}

fn separate(t: &Topology, x: usize, y: usize, rule: MembershipRule) -> Option<(usize, usize)> {
    let opens = t.opens();
    for (i, u) in opens.iter().enumerate() {
        if !contains_point(u, x, rule) {
            continue;
        }
        for (j, v) in opens.iter().enumerate() {
            if contains_point(v, y, rule) && u.intersection(v).expect("opens share a context").is_null() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Every pair of distinct points lies in a pair of disjoint opens.
pub fn is_hausdorff(t: &Topology, rule: MembershipRule) -> HausdorffCheck {
    let n = t.context().points();
    let mut separations = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            match separate(t, x, y, rule) {
                Some(opens) => separations.push(Separation { points: (x, y), opens }),
                None => {
                    return HausdorffCheck {
                        holds: false,
                        witness: Some((x, y)),
                        separations,
                    }
                }
            }
        }
    }
    HausdorffCheck {
        holds: true,
        witness: None,
        separations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fss::Context;
    use crate::topology::{generate_topology, DEFAULT_CAP};

    #[test]
    fn membership_examples() {
        let ctx = Context::new(["x1", "x2"], ["e1"]).unwrap();
        let f = FuzzySoftSet::from_text_rows(&ctx, &[&["1/2", "1"]]).unwrap();
        let g = FuzzySoftSet::from_text_rows(&ctx, &[&["1/2", "0"]]).unwrap();
        assert!(member_point("x1", &f, MembershipRule::SomePositive).unwrap());
        assert!(!member_point("x2", &g, MembershipRule::SomePositive).unwrap());
        assert!(!member_point("x1", &f, MembershipRule::AllOne).unwrap());
        assert!(member_point("x2", &f, MembershipRule::AllOne).unwrap());
        assert_eq!(
            member_point("x9", &f, MembershipRule::SomePositive),
            Err(Error::UnknownLabel("x9".into()))
        );
    }

    #[test]
    fn rules_differ_across_parameters() {
        let ctx = Context::new(["x1"], ["e1", "e2"]).unwrap();
        let a = FuzzySoftSet::from_text_rows(&ctx, &[&["1"], &["0"]]).unwrap();
        assert!(contains_point(&a, 0, MembershipRule::SomePositive));
        assert!(!contains_point(&a, 0, MembershipRule::AllPositive));
        assert!(!contains_point(&a, 0, MembershipRule::AllOne));
    }

    #[test]
    fn hausdorff_examples() {
        let single = Context::new(["x1"], ["e1"]).unwrap();
        assert!(is_hausdorff(&Topology::indiscrete(&single), MembershipRule::SomePositive).holds);

        let ctx = Context::new(["x1", "x2"], ["e1"]).unwrap();
        let p1 = FuzzySoftSet::from_text_rows(&ctx, &[&["1", "0"]]).unwrap();
        let p2 = FuzzySoftSet::from_text_rows(&ctx, &[&["0", "1"]]).unwrap();
        let t = generate_topology(&ctx, &[p1.clone(), p2.clone()], DEFAULT_CAP).unwrap();
        let check = is_hausdorff(&t, MembershipRule::SomePositive);
        assert!(check.holds);
        let s = &check.separations[0];
        assert_eq!(t.opens()[s.opens.0], p1);
        assert_eq!(t.opens()[s.opens.1], p2);

        let ind = is_hausdorff(&Topology::indiscrete(&ctx), MembershipRule::SomePositive);
        assert!(!ind.holds);
        assert_eq!(ind.witness, Some((0, 1)));
    }

    #[test]
    fn rule_text() {
        for r in MembershipRule::ALL {
            assert_eq!(r.to_string().parse::<MembershipRule>().unwrap(), r);
        }
        assert!("sometimes".parse::<MembershipRule>().is_err());
    }
}
