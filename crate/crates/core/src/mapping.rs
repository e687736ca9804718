//! Fuzzy soft mappings `(φ, ψ)` between contexts, with image and preimage.
//!
//! For a mapping from `(X, E)` to `(Y, K)`:
//!
//! * `preimage(g)(e)(x) = g(ψ(e))(φ(x))`
//! * `image(f)(k)(y) = max { f(e)(x) : ψ(e) = k, φ(x) = y }`, and `0` when no
//!   `(e, x)` maps onto `(k, y)`.
//!
//! Preimage is a lattice homomorphism that commutes with complement and image
//! preserves unions. The pair forms a Galois connection:
//! `image(preimage(g)) ⊆ g` and `f ⊆ preimage(image(f))`, and the first
//! inclusion is an equality whenever both component maps are onto.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::Error;
use crate::fss::{same_context, Context, FuzzySoftSet};
use crate::grade::Grade;
use crate::topology::Topology;

/// A pair of total maps `φ: X → Y` and `ψ: E → K`, stored as index tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftMapping {
    source: Arc<Context>,
    target: Arc<Context>,
    point_map: Vec<usize>,
    param_map: Vec<usize>,
}

/// Result of a continuity / open-map / closed-map check.
///
/// `witness` is the first offending set in canonical order when the property
/// fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapCheck {
    pub holds: bool,
    pub witness: Option<FuzzySoftSet>,
}

impl MapCheck {
    fn from_witness(witness: Option<FuzzySoftSet>) -> MapCheck {
        MapCheck {
            holds: witness.is_none(),
            witness,
        }
    }
}

impl SoftMapping {
    /// Builds a mapping from label tables. Every source label must appear.
    pub fn new<A, B, C, D>(
        source: &Arc<Context>,
        target: &Arc<Context>,
        point_map: impl IntoIterator<Item = (A, B)>,
        param_map: impl IntoIterator<Item = (C, D)>,
    ) -> Result<SoftMapping, Error>
    where
        A: AsRef<str>,
        B: AsRef<str>,
        C: AsRef<str>,
        D: AsRef<str>,
    {
        let mut points = BTreeMap::new();
        for (from, to) in point_map {
            points.insert(source.point_index(from.as_ref())?, target.point_index(to.as_ref())?);
        }
        let mut params = BTreeMap::new();
        for (from, to) in param_map {
            params.insert(source.param_index(from.as_ref())?, target.param_index(to.as_ref())?);
        }
        let point_map = (0..source.points())
            .map(|x| points.get(&x).copied().ok_or_else(|| Error::NonTotalMapping(source.universe()[x].clone())))
            .collect::<Result<Vec<_>, _>>()?;
        let param_map = (0..source.params())
            .map(|e| params.get(&e).copied().ok_or_else(|| Error::NonTotalMapping(source.parameters()[e].clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SoftMapping {
            source: Arc::clone(source),
            target: Arc::clone(target),
            point_map,
            param_map,
        })
    }

    /// Builds a mapping from index tables (`point_map[x]`, `param_map[e]`).
    pub fn from_indices(
        source: &Arc<Context>,
        target: &Arc<Context>,
        point_map: Vec<usize>,
        param_map: Vec<usize>,
    ) -> Result<SoftMapping, Error> {
        if point_map.len() != source.points() {
            let missing = source.universe().get(point_map.len()).cloned().unwrap_or_default();
            return Err(Error::NonTotalMapping(missing));
        }
        if param_map.len() != source.params() {
            let missing = source.parameters().get(param_map.len()).cloned().unwrap_or_default();
            return Err(Error::NonTotalMapping(missing));
        }
        if let Some(&y) = point_map.iter().find(|&&y| y >= target.points()) {
            return Err(Error::UnknownLabel(format!("point #{y}")));
        }
        if let Some(&k) = param_map.iter().find(|&&k| k >= target.params()) {
            return Err(Error::UnknownLabel(format!("parameter #{k}")));
        }
        Ok(SoftMapping {
            source: Arc::clone(source),
            target: Arc::clone(target),
            point_map,
            param_map,
        })
    }

    pub fn identity(ctx: &Arc<Context>) -> SoftMapping {
        SoftMapping {
            source: Arc::clone(ctx),
            target: Arc::clone(ctx),
            point_map: (0..ctx.points()).collect(),
            param_map: (0..ctx.params()).collect(),
        }
    }

    /// The constant mapping onto `(point, param)` of `target`.
    pub fn constant(
        source: &Arc<Context>,
        target: &Arc<Context>,
        point: &str,
        param: &str,
    ) -> Result<SoftMapping, Error> {
        let y = target.point_index(point)?;
        let k = target.param_index(param)?;
        SoftMapping::from_indices(source, target, vec![y; source.points()], vec![k; source.params()])
    }

    pub fn source(&self) -> &Arc<Context> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Context> {
        &self.target
    }

    pub fn point_map(&self) -> &[usize] {
        &self.point_map
    }

    pub fn param_map(&self) -> &[usize] {
        &self.param_map
    }

    /// Both component maps are injective.
    pub fn is_injective(&self) -> bool {
        fn inj(m: &[usize]) -> bool {
            let mut v = m.to_vec();
            v.sort_unstable();
            v.windows(2).all(|w| w[0] != w[1])
        }
        inj(&self.point_map) && inj(&self.param_map)
    }

    /// Both component maps are onto.
    pub fn is_surjective(&self) -> bool {
        let onto = |m: &[usize], n: usize| {
            let mut hit = vec![false; n];
            m.iter().for_each(|&i| hit[i] = true);
            hit.into_iter().all(|b| b)
        };
        onto(&self.point_map, self.target.points()) && onto(&self.param_map, self.target.params())
    }

    /// Both component maps are constant.
    pub fn is_constant(&self) -> bool {
        let cst = |m: &[usize]| m.windows(2).all(|w| w[0] == w[1]);
        cst(&self.point_map) && cst(&self.param_map)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SoftMapping) -> Result<SoftMapping, Error> {
        if !same_context(&self.target, &other.source) {
            return Err(Error::ContextMismatch);
        }
        Ok(SoftMapping {
            source: Arc::clone(&self.source),
            target: Arc::clone(&other.target),
            point_map: self.point_map.iter().map(|&y| other.point_map[y]).collect(),
            param_map: self.param_map.iter().map(|&k| other.param_map[k]).collect(),
        })
    }

    pub fn preimage(&self, g: &FuzzySoftSet) -> Result<FuzzySoftSet, Error> {
        if !same_context(&self.target, g.context()) {
            return Err(Error::ContextMismatch);
        }
        Ok(FuzzySoftSet::from_fn(&self.source, |e, x| {
            g.grade(self.param_map[e], self.point_map[x])
        }))
    }

    pub fn image(&self, f: &FuzzySoftSet) -> Result<FuzzySoftSet, Error> {
        if !same_context(&self.source, f.context()) {
            return Err(Error::ContextMismatch);
        }
        let mut out = FuzzySoftSet::null(&self.target);
        let width = self.target.points();
        let cells = out.grades_mut();
        for (e, &k) in self.param_map.iter().enumerate() {
            for (x, &y) in self.point_map.iter().enumerate() {
                let slot = &mut cells[k * width + y];
                *slot = Grade::join(*slot, f.grade(e, x));
            }
        }
        Ok(out)
    }

    fn check_spaces(&self, src: &Topology, dst: &Topology) -> Result<(), Error> {
        if same_context(&self.source, src.context()) && same_context(&self.target, dst.context()) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Preimage of every open of `dst` is open in `src`.
    pub fn is_continuous(&self, src: &Topology, dst: &Topology) -> Result<MapCheck, Error> {
        self.check_spaces(src, dst)?;
        for g in dst.opens() {
            if !src.is_open(&self.preimage(g)?)? {
                return Ok(MapCheck::from_witness(Some(g.clone())));
            }
        }
        Ok(MapCheck::from_witness(None))
    }

    /// Image of every open of `src` is open in `dst`.
    pub fn is_open_map(&self, src: &Topology, dst: &Topology) -> Result<MapCheck, Error> {
        self.check_spaces(src, dst)?;
        for f in src.opens() {
            if !dst.is_open(&self.image(f)?)? {
                return Ok(MapCheck::from_witness(Some(f.clone())));
            }
        }
        Ok(MapCheck::from_witness(None))
    }

    /// Image of every closed set of `src` is closed in `dst`.
    pub fn is_closed_map(&self, src: &Topology, dst: &Topology) -> Result<MapCheck, Error> {
        self.check_spaces(src, dst)?;
        for f in src.closed_family() {
            if !dst.is_closed(&self.image(&f)?)? {
                return Ok(MapCheck::from_witness(Some(f)));
            }
        }
        Ok(MapCheck::from_witness(None))
    }
}
