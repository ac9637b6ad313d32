//! Bounded exhaustive enumeration of Fano polygons up to unimodular
//! equivalence.
//!
//! Every class with at least one representative inside `[-B, B]²` is found;
//! classes whose representatives all need larger coordinates are missing. The
//! bound is recorded in every output.

mod report;
mod store;
mod verify;

use std::collections::BTreeSet;

use rayon::prelude::*;

pub use report::{AutSummary, PolygonReport, SCHEMA};
pub use store::{read_store, store_read, store_write, write_store};
pub use verify::{
    my_family_polygon, VERIFY_SCHEMA,
    verify_theorems, ClaimCheck, ClaimKind, MyFamilyCheck, SpotCheck, VerificationReport,
};

use crate::error::{FanoError, Result};
use crate::kernel::{angle_cmp, ord, LatticePoint};
use crate::polygon::FanoPolygon;

/// Bounds above this need [`CensusConfig::allow_large`].
pub const SOFT_LIMIT: i64 = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusConfig {
    pub bound: i64,
    /// Keep only classes with index at most this.
    pub max_index: Option<i64>,
    pub workers: usize,
    pub allow_large: bool,
}

impl CensusConfig {
    pub fn new(bound: i64) -> Self {
        CensusConfig {
            bound,
            max_index: None,
            workers: 1,
            allow_large: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.bound < 1 {
            return Err(FanoError::Parse(format!("bound must be positive, got {}", self.bound)));
        }
        if self.bound > SOFT_LIMIT && !self.allow_large {
            return Err(FanoError::BoundTooLarge {
                bound: self.bound,
                limit: SOFT_LIMIT,
            });
        }
        if self.workers == 0 {
            return Err(FanoError::Parse("workers must be positive".into()));
        }
        if matches!(self.max_index, Some(i) if i < 1) {
            return Err(FanoError::Parse("max_index must be positive".into()));
        }
        Ok(())
    }
}

/// Primitive points of `[-B, B]²` in counterclockwise angular order from the
/// positive x-axis.
pub fn primitive_points(bound: i64) -> Vec<LatticePoint> {
    let mut pts: Vec<LatticePoint> = (-bound..=bound)
        .flat_map(|x| (-bound..=bound).map(move |y| LatticePoint::new(x, y)))
        .filter(|p| p.is_primitive())
        .collect();
    pts.sort_by(|a, b| angle_cmp(*a, *b));
    pts
}

fn turn(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> i64 {
    ord(b - a, c - b)
}

/// Depth-first search over strictly convex counterclockwise chains starting
/// at `pts[start]`, which is the vertex of least angle in every polygon found.
fn search_from(pts: &[LatticePoint], start: usize, visit: &mut dyn FnMut(&[LatticePoint])) {
    let mut chain = vec![pts[start]];
    extend(pts, start + 1, &mut chain, visit);
}

fn extend(
    pts: &[LatticePoint],
    from: usize,
    chain: &mut Vec<LatticePoint>,
    visit: &mut dyn FnMut(&[LatticePoint]),
) {
    let first = chain[0];
    let last = *chain.last().expect("chain is nonempty");
    for j in from..pts.len() {
        let w = pts[j];
        // angles increase with j; once the gap reaches a half-turn it stays there
        if ord(last, w) <= 0 {
            break;
        }
        if chain.len() >= 2 {
            let prev = chain[chain.len() - 2];
            if turn(prev, last, w) <= 0 || turn(first, chain[1], w) <= 0 {
                continue;
            }
        }
        chain.push(w);
        if chain.len() >= 3
            && ord(w, first) > 0
            && turn(last, w, first) > 0
            && turn(w, first, chain[1]) > 0
        {
            visit(chain);
        }
        extend(pts, j + 1, chain, visit);
        chain.pop();
    }
}

/// Calls `visit` once for every Fano polygon with vertices in `[-B, B]²`
/// (not up to equivalence), vertices counterclockwise.
pub fn visit_raw_polygons(bound: i64, mut visit: impl FnMut(&[LatticePoint])) {
    let pts = primitive_points(bound);
    for start in 0..pts.len() {
        search_from(&pts, start, &mut visit);
    }
}

/// Canonical forms of all classes in the box, sorted.
pub fn canonical_classes(config: &CensusConfig) -> Result<Vec<Vec<LatticePoint>>> {
    config.validate()?;
    let pts = primitive_points(config.bound);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| FanoError::Parse(format!("thread pool: {e}")))?;
    let classes = pool.install(|| {
        (0..pts.len())
            .into_par_iter()
            .map(|start| {
                let mut local = BTreeSet::new();
                search_from(&pts, start, &mut |chain| {
                    let p = FanoPolygon::from_vertex_set(chain.to_vec());
                    local.insert(p.canonical_form());
                });
                local
            })
            .reduce(BTreeSet::new, |mut a, mut b| {
                if a.len() < b.len() {
                    std::mem::swap(&mut a, &mut b);
                }
                a.extend(b);
                a
            })
    });
    Ok(classes.into_iter().collect())
}

/// One report per equivalence class in the box, sorted by canonical form.
/// Output does not depend on the worker count.
pub fn enumerate(config: &CensusConfig) -> Result<Vec<PolygonReport>> {
    let classes = canonical_classes(config)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| FanoError::Parse(format!("thread pool: {e}")))?;
    let reports: Vec<PolygonReport> = pool.install(|| {
        classes
            .into_par_iter()
            .map(|vertices| {
                PolygonReport::build(&FanoPolygon::from_vertex_set(vertices), config.bound)
            })
            .collect()
    });
    Ok(match config.max_index {
        Some(max) => reports.into_iter().filter(|r| r.index <= max).collect(),
        None => reports,
    })
}
