//! Independent oracles and random inputs shared by the integration tests.
//!
//! The oracles never call the library's set algebra: grades are rescaled to
//! integers over a common denominator and combined with `min`, `max` and
//! subtraction.
#![allow(dead_code)]

use std::sync::Arc;

use fuzzysoft::{Context, FuzzySoftSet, Grade};
use rand::Rng;

/// Least common multiple of 1..=12; every test denominator divides it.
pub const SCALE: u64 = 27_720;

pub fn scaled(g: Grade) -> u64 {
    assert_eq!(SCALE % g.denominator(), 0, "denominator {} does not divide the scale", g.denominator());
    g.numerator() * (SCALE / g.denominator())
}

pub fn cells(a: &FuzzySoftSet) -> Vec<u64> {
    a.grades().iter().map(|&g| scaled(g)).collect()
}

pub fn max_cells(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn min_cells(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()
}

pub fn flip_cells(a: &[u64]) -> Vec<u64> {
    a.iter().map(|x| SCALE - x).collect()
}

pub fn le_cells(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Integer model of a mapping's preimage on a row-major `|K| x |Y|` matrix.
pub fn preimage_cells(g: &[u64], points: &[usize], params: &[usize], ny: usize) -> Vec<u64> {
    let mut out = Vec::new();
    for &k in params {
        for &y in points {
            out.push(g[k * ny + y]);
        }
    }
    out
}

/// Integer model of a mapping's image; cells nothing maps onto get 0.
pub fn image_cells(f: &[u64], points: &[usize], params: &[usize], ny: usize, nk: usize) -> Vec<u64> {
    let nx = points.len();
    let mut out = vec![0; ny * nk];
    for (e, &k) in params.iter().enumerate() {
        for (x, &y) in points.iter().enumerate() {
            let c = &mut out[k * ny + y];
            *c = (*c).max(f[e * nx + x]);
        }
    }
    out
}

/// A family covers a target when the cellwise maximum dominates it.
pub fn covers_cells(members: &[Vec<u64>], target: &[u64]) -> bool {
    target
        .iter()
        .enumerate()
        .all(|(i, &t)| members.iter().map(|m| m[i]).max().unwrap_or(0) >= t)
}

/// Minimum cover size by trying every subfamily.
pub fn exhaustive_min_cover(members: &[Vec<u64>], target: &[u64]) -> Option<usize> {
    let n = members.len();
    (0u32..1 << n)
        .filter(|mask| {
            let chosen: Vec<Vec<u64>> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| members[i].clone()).collect();
            covers_cells(&chosen, target)
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
}

pub fn context(points: usize, params: usize) -> Arc<Context> {
    Context::new((1..=points).map(|i| format!("x{i}")), (1..=params).map(|i| format!("e{i}"))).unwrap()
}

pub fn random_context(rng: &mut impl Rng, max_points: usize, max_params: usize) -> Arc<Context> {
    context(rng.gen_range(1..=max_points), rng.gen_range(1..=max_params))
}

pub fn random_grade(rng: &mut impl Rng, max_den: u64) -> Grade {
    let d = rng.gen_range(1..=max_den);
    Grade::from_ratio(rng.gen_range(0..=d), d).unwrap()
}

/// Grades with per-cell random denominators up to `max_den`.
pub fn random_set(rng: &mut impl Rng, ctx: &Arc<Context>, max_den: u64) -> FuzzySoftSet {
    FuzzySoftSet::from_fn(ctx, |_, _| random_grade(rng, max_den))
}

pub fn crisp_set(rng: &mut impl Rng, ctx: &Arc<Context>) -> FuzzySoftSet {
    FuzzySoftSet::from_fn(ctx, |_, _| if rng.gen() { Grade::ONE } else { Grade::ZERO })
}
