//! Random finite instances for the audits.
//!
//! Grades are drawn uniformly from the `k`-level lattice `{0, 1/k, ..., 1}`.
//! Topologies are generated by closure from one to a few random generators,
//! so the axioms hold by construction. Hausdorff topologies are seeded with
//! one "column" set per point, positive only at that point; these are
//! pairwise disjoint and contain their point under the chosen membership rule.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::compactness::separation::{is_hausdorff, MembershipRule};
use crate::error::Error;
use crate::fss::{Context, FuzzySoftSet};
use crate::grade::Grade;
use crate::mapping::SoftMapping;
use crate::topology::{generate_topology, Topology};

/// Bounds on generated instances. The defaults are the largest supported
/// sizes except for the topology cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorSettings {
    /// `|X|` is drawn from `1..=max_points` (at most 3).
    pub max_points: usize,
    /// `|E|` is drawn from `1..=max_params` (at most 2).
    pub max_params: usize,
    /// Grades come from the `denominator`-level lattice (at most 4).
    pub denominator: u64,
    /// Largest topology generated (8 to 16).
    pub topology_cap: usize,
    /// Number of random generators is drawn from `1..=max_generators` (at most 3).
    pub max_generators: usize,
    pub rule: MembershipRule,
}

impl Default for GeneratorSettings {
    fn default() -> Self {
        GeneratorSettings {
            max_points: 3,
            max_params: 2,
            denominator: 4,
            topology_cap: 12,
            max_generators: 3,
            rule: MembershipRule::SomePositive,
        }
    }
}

impl GeneratorSettings {
    pub fn with_rule(self, rule: MembershipRule) -> Self {
        GeneratorSettings { rule, ..self }
    }

    pub fn validate(&self) -> Result<(), Error> {
        let bad = |msg: String| Err(Error::InvalidGeneratorSettings(msg));
        if !(1..=3).contains(&self.max_points) {
            return bad(format!("max points must lie in 1..=3, got {}", self.max_points));
        }
        if !(1..=2).contains(&self.max_params) {
            return bad(format!("max parameters must lie in 1..=2, got {}", self.max_params));
        }
        if !(1..=4).contains(&self.denominator) {
            return bad(format!("denominator must lie in 1..=4, got {}", self.denominator));
        }
        if !(8..=16).contains(&self.topology_cap) {
            return bad(format!("topology cap must lie in 8..=16, got {}", self.topology_cap));
        }
        if !(1..=3).contains(&self.max_generators) {
            return bad(format!("max generators must lie in 1..=3, got {}", self.max_generators));
        }
        Ok(())
    }
}

pub(crate) fn context(points: usize, params: usize, point_tag: &str, param_tag: &str) -> Arc<Context> {
    Context::new(
        (1..=points).map(|i| format!("{point_tag}{i}")),
        (1..=params).map(|i| format!("{param_tag}{i}")),
    )
    .expect("generated labels are distinct")
}

pub(crate) fn random_context(rng: &mut impl Rng, s: &GeneratorSettings, point_tag: &str, param_tag: &str) -> Arc<Context> {
    let points = rng.gen_range(1..=s.max_points);
    let params = rng.gen_range(1..=s.max_params);
    context(points, params, point_tag, param_tag)
}

fn grade(rng: &mut impl Rng, k: u64) -> Grade {
    Grade::from_ratio(rng.gen_range(0..=k), k).expect("level within range")
}

fn positive_grade(rng: &mut impl Rng, k: u64) -> Grade {
    Grade::from_ratio(rng.gen_range(1..=k), k).expect("level within range")
}

pub(crate) fn random_set(rng: &mut impl Rng, ctx: &Arc<Context>, k: u64) -> FuzzySoftSet {
    FuzzySoftSet::from_fn(ctx, |_, _| grade(rng, k))
}

fn random_sets(rng: &mut impl Rng, ctx: &Arc<Context>, k: u64, n: usize) -> Vec<FuzzySoftSet> {
    (0..n).map(|_| random_set(rng, ctx, k)).collect()
}

/// A topology generated by `1..=max_generators` random sets, shrinking the
/// generator count when the closure outgrows the cap.
pub(crate) fn random_topology(rng: &mut impl Rng, ctx: &Arc<Context>, s: &GeneratorSettings) -> Topology {
    let mut n = rng.gen_range(1..=s.max_generators);
    loop {
        for _ in 0..8 {
            let gens = random_sets(rng, ctx, s.denominator, n);
            if let Ok(t) = generate_topology(ctx, &gens, s.topology_cap) {
                return t;
            }
        }
        if n == 1 {
            // one generator closes to at most three sets
            return Topology::indiscrete(ctx);
        }
        n -= 1;
    }
}

/// A set positive only in column `x`, containing `x` under `rule`.
fn column_set(rng: &mut impl Rng, ctx: &Arc<Context>, x: usize, rule: MembershipRule, k: u64) -> FuzzySoftSet {
    let forced = rng.gen_range(0..ctx.params());
    let mut column: Vec<Grade> = (0..ctx.params())
        .map(|e| match rule {
            MembershipRule::AllOne => Grade::ONE,
            MembershipRule::AllPositive => positive_grade(rng, k),
            MembershipRule::SomePositive if e == forced => positive_grade(rng, k),
            MembershipRule::SomePositive => grade(rng, k),
        })
        .collect();
    FuzzySoftSet::from_fn(ctx, |e, p| if p == x { std::mem::take(&mut column[e]) } else { Grade::ZERO })
}

/// A topology that is Hausdorff under `s.rule`.
pub(crate) fn hausdorff_topology(rng: &mut impl Rng, ctx: &Arc<Context>, s: &GeneratorSettings) -> Topology {
    if rng.gen_ratio(1, 4) {
        let t = random_topology(rng, ctx, s);
        if is_hausdorff(&t, s.rule).holds {
            return t;
        }
    }
    for attempt in 0.. {
        let mut gens: Vec<FuzzySoftSet> = (0..ctx.points())
            .map(|x| column_set(rng, ctx, x, s.rule, s.denominator))
            .collect();
        if attempt < 8 {
            let extra = rng.gen_range(0..=1);
            gens.extend(random_sets(rng, ctx, s.denominator, extra));
        }
        if let Ok(t) = generate_topology(ctx, &gens, s.topology_cap) {
            if is_hausdorff(&t, s.rule).holds {
                return t;
            }
        }
    }
    unreachable!("column generators close within a cap of 8")
}

fn onto(rng: &mut impl Rng, from: usize, to: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..from).collect();
    order.shuffle(rng);
    let mut table = vec![0; from];
    for (rank, &i) in order.iter().enumerate() {
        table[i] = if rank < to { rank } else { rng.gen_range(0..to) };
    }
    table
}

fn any_map(rng: &mut impl Rng, from: usize, to: usize) -> Vec<usize> {
    (0..from).map(|_| rng.gen_range(0..to)).collect()
}

pub(crate) fn surjective_mapping(rng: &mut impl Rng, s: &GeneratorSettings) -> SoftMapping {
    let src = random_context(rng, s, "x", "e");
    let ny = rng.gen_range(1..=src.points());
    let nk = rng.gen_range(1..=src.params());
    let dst = context(ny, nk, "y", "k");
    let points = onto(rng, src.points(), ny);
    let params = onto(rng, src.params(), nk);
    SoftMapping::from_indices(&src, &dst, points, params).expect("tables are total")
}

pub(crate) fn arbitrary_mapping(rng: &mut impl Rng, s: &GeneratorSettings) -> SoftMapping {
    let src = random_context(rng, s, "x", "e");
    let dst = random_context(rng, s, "y", "k");
    let points = any_map(rng, src.points(), dst.points());
    let params = any_map(rng, src.params(), dst.params());
    SoftMapping::from_indices(&src, &dst, points, params).expect("tables are total")
}

/// A source topology making `m` continuous into `codomain`: the preimage
/// topology, optionally refined by one random generator.
pub(crate) fn continuous_source(
    rng: &mut impl Rng,
    m: &SoftMapping,
    codomain: &Topology,
    s: &GeneratorSettings,
) -> Topology {
    let preimages: Vec<FuzzySoftSet> = codomain
        .opens()
        .iter()
        .map(|g| m.preimage(g).expect("codomain lives over the mapping target"))
        .collect();
    let extra = rng.gen_range(0..=1);
    let mut gens = preimages.clone();
    gens.extend(random_sets(rng, m.source(), s.denominator, extra));
    generate_topology(m.source(), &gens, s.topology_cap)
        .or_else(|_| generate_topology(m.source(), &preimages, s.topology_cap))
        .expect("preimages of a topology form a topology no larger than it")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn settings_bounds() {
        assert!(GeneratorSettings::default().validate().is_ok());
        for bad in [
            GeneratorSettings { max_points: 4, ..Default::default() },
            GeneratorSettings { max_params: 0, ..Default::default() },
            GeneratorSettings { denominator: 5, ..Default::default() },
            GeneratorSettings { topology_cap: 7, ..Default::default() },
            GeneratorSettings { max_generators: 4, ..Default::default() },
        ] {
            assert!(matches!(bad.validate(), Err(Error::InvalidGeneratorSettings(_))));
        }
    }

    #[test]
    fn generated_instances_meet_their_contracts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for rule in MembershipRule::ALL {
            let s = GeneratorSettings::default().with_rule(rule);
            for _ in 0..40 {
                let ctx = random_context(&mut rng, &s, "x", "e");
                let t = random_topology(&mut rng, &ctx, &s);
                assert!(t.len() <= s.topology_cap);
                let h = hausdorff_topology(&mut rng, &ctx, &s);
                assert!(is_hausdorff(&h, rule).holds);

                let m = surjective_mapping(&mut rng, &s);
                assert!(m.is_surjective());
                let sigma = random_topology(&mut rng, m.target(), &s);
                let tau = continuous_source(&mut rng, &m, &sigma, &s);
                assert!(m.is_continuous(&tau, &sigma).unwrap().holds);

                let a = arbitrary_mapping(&mut rng, &s);
                let sigma = hausdorff_topology(&mut rng, a.target(), &s);
                let tau = continuous_source(&mut rng, &a, &sigma, &s);
                assert!(a.is_continuous(&tau, &sigma).unwrap().holds);
            }
        }
    }

    #[test]
    fn grades_stay_on_the_lattice() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let ctx = context(3, 2, "x", "e");
        for _ in 0..50 {
            let a = random_set(&mut rng, &ctx, 4);
            assert!(a.grades().iter().all(|g| 4 % g.denominator() == 0));
        }
    }
}
