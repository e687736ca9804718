//! The finite intersection property, its De Morgan dual, and the
//! complement-disjointness check.

use std::sync::Arc;

use crate::error::Error;
use crate::fss::{intersection_all, same_context, union_all, Context, FuzzySoftSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FipCheck {
    pub holds: bool,
    /// A minimum-cardinality subfamily (sorted indices) with null intersection.
    pub witness: Option<Vec<usize>>,
}

fn shared_context(family: &[FuzzySoftSet]) -> Result<Option<&Arc<Context>>, Error> {
    let Some(first) = family.first() else {
        return Ok(None);
    };
    if family.iter().all(|s| same_context(first.context(), s.context())) {
        Ok(Some(first.context()))
    } else {
        Err(Error::ContextMismatch)
    }
}

/// Size-`k` subfamilies in lexicographic order with incremental intersection;
/// returns the first one whose intersection is null.
fn null_subfamily(
    family: &[FuzzySoftSet],
    start: usize,
    k: usize,
    acc: &FuzzySoftSet,
    chosen: &mut Vec<usize>,
) -> bool {
    if k == 0 {
        return acc.is_null();
    }
    for i in start..=family.len() - k {
        chosen.push(i);
        let next = acc.intersection(&family[i]).expect("shared context");
        if null_subfamily(family, i + 1, k - 1, &next, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Every non-empty subfamily has a non-null intersection.
///
/// All non-empty subfamilies are examined, smallest first, so the cost is
/// exponential in the family size.
pub fn has_fip(family: &[FuzzySoftSet]) -> Result<FipCheck, Error> {
    let Some(ctx) = shared_context(family)? else {
        return Ok(FipCheck {
            holds: true,
            witness: None,
        });
    };
    let top = FuzzySoftSet::universal(ctx);
    for k in 1..=family.len() {
        let mut chosen = Vec::with_capacity(k);
        if null_subfamily(family, 0, k, &top, &mut chosen) {
            return Ok(FipCheck {
                holds: false,
                witness: Some(chosen),
            });
        }
    }
    Ok(FipCheck {
        holds: true,
        witness: None,
    })
}

/// Checks `⋂ fᵢ = 1̃ − ⋃ fᵢᶜ` exactly.
pub fn fip_duality_check(family: &[FuzzySoftSet]) -> Result<bool, Error> {
    let Some(ctx) = shared_context(family)? else {
        return Ok(true);
    };
    let meet = intersection_all(ctx, family)?;
    let complements: Vec<FuzzySoftSet> = family.iter().map(FuzzySoftSet::complement).collect();
    let dual = union_all(ctx, &complements)?.complement();
    Ok(meet == dual)
}

/// Whether `a ∩ aᶜ` is null, next to whether `a` is crisp. The two always agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DisjointnessRecord {
    pub disjoint: bool,
    pub crisp: bool,
}

impl DisjointnessRecord {
    pub fn consistent(&self) -> bool {
        self.disjoint == self.crisp
    }
}

pub fn audit_complement_disjointness(a: &FuzzySoftSet) -> DisjointnessRecord {
    DisjointnessRecord {
        disjoint: a.intersection(&a.complement()).expect("same context").is_null(),
        crisp: a.is_crisp(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use crate::grade::Grade;

    fn row(ctx: &Arc<Context>, r: &[&str]) -> FuzzySoftSet {
        FuzzySoftSet::from_text_rows(ctx, &[r]).unwrap()
    }

    #[test]
    fn fip_examples() {
        let ctx = Context::new(["x1", "x2"], ["e1"]).unwrap();
        let f = row(&ctx, &["1/2", "1"]);
        let g = row(&ctx, &["1/2", "0"]);
        let p1 = row(&ctx, &["1", "0"]);
        let p2 = row(&ctx, &["0", "1"]);
        assert!(has_fip(&[f.clone(), g.clone()]).unwrap().holds);
        assert_eq!(
            has_fip(&[p1, p2]).unwrap(),
            FipCheck {
                holds: false,
                witness: Some(vec![0, 1])
            }
        );
        assert!(has_fip(std::slice::from_ref(&f)).unwrap().holds);
        assert!(has_fip(&[]).unwrap().holds);
    }

    #[test]
    fn fip_witness_is_minimal() {
        let ctx = Context::new(["x1", "x2", "x3"], ["e1"]).unwrap();
        let a = row(&ctx, &["1", "1", "0"]);
        let b = row(&ctx, &["0", "1", "1"]);
        let c = row(&ctx, &["1", "0", "1"]);
        let z = FuzzySoftSet::null(&ctx);
        // pairwise intersections are non-null; the triple is null
        assert_eq!(has_fip(&[a.clone(), b.clone(), c.clone()]).unwrap().witness, Some(vec![0, 1, 2]));
        assert_eq!(has_fip(&[a, b, c, z]).unwrap().witness, Some(vec![3]));
    }

    #[test]
    fn duality_examples() {
        let ctx = Context::new(["x1", "x2"], ["e1"]).unwrap();
        let f = row(&ctx, &["1/2", "1"]);
        let g = row(&ctx, &["1/2", "0"]);
        assert!(fip_duality_check(&[f, g]).unwrap());
        assert!(fip_duality_check(&[FuzzySoftSet::null(&ctx)]).unwrap());
    }

    #[test]
    fn context_mismatch() {
        let a = FuzzySoftSet::null(&Context::new(["x"], ["e"]).unwrap());
        let b = FuzzySoftSet::null(&Context::new(["y"], ["e"]).unwrap());
        assert_eq!(has_fip(&[a.clone(), b.clone()]), Err(Error::ContextMismatch));
        assert_eq!(fip_duality_check(&[a, b]), Err(Error::ContextMismatch));
    }

    #[test]
    fn disjointness_examples() {
        let ctx = Context::new(["x1", "x2"], ["e1"]).unwrap();
        let rec = audit_complement_disjointness(&row(&ctx, &["1", "0"]));
        assert!(rec.disjoint && rec.crisp);
        let rec = audit_complement_disjointness(&row(&ctx, &["1/2", "1"]));
        assert!(!rec.disjoint && !rec.crisp);
        let rec = audit_complement_disjointness(&FuzzySoftSet::null(&ctx));
        assert!(rec.disjoint && rec.crisp);
    }

    fn family() -> impl Strategy<Value = Vec<FuzzySoftSet>> {
        (1usize..=3, 1usize..=2, 1usize..=5).prop_flat_map(|(nx, ne, n)| {
            let ctx = Context::new((0..nx).map(|i| format!("x{i}")), (0..ne).map(|i| format!("e{i}"))).unwrap();
            proptest::collection::vec(
                proptest::collection::vec((1u64..=12).prop_flat_map(|d| (0..=d, Just(d))), nx * ne),
                n,
            )
            .prop_map(move |sets| {
                sets.into_iter()
                    .map(|cells| {
                        let mut it = cells.into_iter();
                        FuzzySoftSet::from_fn(&ctx, |_, _| {
                            let (n, d) = it.next().unwrap();
                            Grade::from_ratio(n, d).unwrap()
                        })
                    })
                    .collect()
            })
        })
    }

    proptest! {
        #[test]
        fn duality_always_holds(fam in family()) {
            prop_assert!(fip_duality_check(&fam).unwrap());
        }

        #[test]
        fn fip_matches_full_intersection_for_finite_families(fam in family()) {
            // intersections only shrink, so the full family decides FIP
            let ctx = fam[0].context().clone();
            let full = intersection_all(&ctx, &fam).unwrap();
            prop_assert_eq!(has_fip(&fam).unwrap().holds, !full.is_null());
        }
    }
}
