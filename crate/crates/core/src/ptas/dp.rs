//! Cover sets of rooted subtrees.
//!
//! For a vertex `v` with subtree `D(v)`:
//!
//! * `C_0(v)` holds the covers of `D(v)`.
//! * `C_k(v)`, `k >= 1`, holds the covers of `D(v) \ A` where `A` is empty or
//!   a connected set containing `v` whose vertices lie at distance `< k`
//!   from `v`. The excluded part is covered by a component reaching down
//!   from above `v`.
//!
//! The component holding `v` in a cover of `D(v)` has a center `v0` in `D(v)`
//! and a class radius `r >= d(v0, v)`. Every vertex `u` hanging off the
//! `v0`-`v` path contributes `C_k(u)` where the part of the component inside
//! `D(u)` reaches at most `r - d(v0, u)` below `u`.

use serde::Serialize;

use super::cover::{rounded_multiset, CoverSet, CoverVector, RadiusClasses, SetOptions, Trace};
use super::PtasError;
use crate::graph::RootedForest;

/// How far the parent component may reach into a hanging subtree `D(u)`,
/// expressed as the `k` of `C_k(u)` for a component of radius `r` whose
/// center sits at distance `d` from `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Subscript {
    /// `k = r - d + 1`: the excluded part may contain every vertex within
    /// `r - d` of `u`, which is exactly what a radius-`r` ball reaches.
    #[default]
    Reach,
    /// `k = r - d - 1`: two levels shallower than the ball reaches. Sound
    /// but may miss covers; kept for comparison.
    Shallow,
}

impl Subscript {
    fn level(self, radius: usize, distance: usize) -> usize {
        let k = match self {
            Subscript::Reach => radius as isize - distance as isize + 1,
            Subscript::Shallow => radius as isize - distance as isize - 1,
        };
        k.max(0) as usize
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct DpOptions {
    pub subscript: Subscript,
    pub prune: bool,
    /// Drop vectors that fit no budget the class range can express.
    pub bounded: bool,
    /// Fail with [`PtasError::SetTooLarge`] beyond this many vectors per set.
    pub max_set_size: Option<usize>,
}

impl Default for DpOptions {
    fn default() -> Self {
        Self {
            subscript: Subscript::Reach,
            prune: true,
            bounded: true,
            max_set_size: Some(1 << 20),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct DpStats {
    pub sumsets: u64,
    pub largest_set: usize,
}

pub struct CoverTables {
    /// `levels[v][k]` is `C_k(v)` for `k <= cap(v)`; deeper `k` repeat the last entry.
    levels: Vec<Vec<CoverSet>>,
    roots: Vec<usize>,
    pub stats: DpStats,
}

impl CoverTables {
    pub fn get(&self, v: usize, k: usize) -> &CoverSet {
        let row = &self.levels[v];
        &row[k.min(row.len() - 1)]
    }

    /// `C_0` at each root, in root order.
    pub fn root_sets(&self) -> Vec<&CoverSet> {
        self.roots.iter().map(|&r| self.get(r, 0)).collect()
    }
}

struct Builder {
    opts: DpOptions,
    ceiling: Option<CoverVector>,
    subtree_size: Vec<u32>,
    levels: Vec<Vec<CoverSet>>,
    stats: DpStats,
}

impl Builder {
    fn set_opts(&self, cap: u32) -> SetOptions<'_> {
        SetOptions {
            cap,
            prune: self.opts.prune,
            max_size: self.opts.max_set_size,
            ceiling: self.ceiling.as_ref(),
        }
    }

    fn get(&self, v: usize, k: usize) -> &CoverSet {
        let row = &self.levels[v];
        &row[k.min(row.len() - 1)]
    }

    fn sum(&mut self, a: &CoverSet, b: &CoverSet, cap: u32) -> Result<CoverSet, PtasError> {
        self.stats.sumsets += 1;
        let s = a.sumset(b, self.set_opts(cap))?;
        self.stats.largest_set = self.stats.largest_set.max(s.len());
        Ok(s)
    }

    /// `partial + sum of C_{k(u)}(u)` over `hanging`, where `u` sits at
    /// distance `d` from the component center.
    fn hang(
        &mut self,
        mut partial: CoverSet,
        hanging: impl Iterator<Item = usize>,
        radius: usize,
        distance: usize,
        cap: u32,
    ) -> Result<CoverSet, PtasError> {
        for u in hanging {
            if partial.is_empty() {
                break;
            }
            let k = self.opts.subscript.level(radius, distance);
            let child = self.get(u, k).clone();
            partial = self.sum(&partial, &child, cap)?;
        }
        Ok(partial)
    }
}

/// The rounded multiset of the largest horizon whose slots all round into
/// the class range; every budget tested later fits within it.
pub fn ceiling(classes: &RadiusClasses) -> CoverVector {
    let b_max = (classes.class_count() - 1) * classes.granularity() + 1;
    rounded_multiset(classes, b_max).expect("b_max rounds into the class range")
}

/// `C_k(v)` for every vertex, computed children first.
pub fn cover_tables(
    forest: &RootedForest,
    classes: RadiusClasses,
    opts: DpOptions,
) -> Result<CoverTables, PtasError> {
    let n = forest.graph().vertex_count();
    let heights = forest.heights();
    let mut subtree_size = vec![1u32; n];
    for v in forest.bottom_up() {
        if let Some(p) = forest.parent(v) {
            subtree_size[p] += subtree_size[v];
        }
    }
    let k_top = classes.max_radius() + 1;
    let mut b = Builder {
        opts,
        ceiling: opts.bounded.then(|| ceiling(&classes)),
        subtree_size,
        levels: vec![Vec::new(); n],
        stats: DpStats::default(),
    };
    // partials[v]: (center, class, running sumset) for components containing v
    // whose center lies in D(v) and whose ball still reaches v.
    let mut partials: Vec<Vec<(usize, usize, CoverSet)>> = vec![Vec::new(); n];
    let k_count = classes.class_count();

    let order: Vec<usize> = forest.bottom_up().collect();
    for v in order {
        let cap = b.subtree_size[v];
        let children = forest.children(v).to_vec();
        let mut mine = Vec::new();

        // Center at v itself.
        for class in 0..k_count {
            let radius = classes.radius(class);
            let start = CoverSet::singleton(CoverVector::unit(k_count, class), Trace::ball(v, class));
            let s = b.hang(start, children.iter().copied(), radius, 1, cap)?;
            if !s.is_empty() {
                mine.push((v, class, s));
            }
        }
        // Center below v, in the subtree of `via`.
        for &via in &children {
            for (center, class, s) in std::mem::take(&mut partials[via]) {
                let radius = classes.radius(class);
                let d = forest.depth(center) - forest.depth(v);
                if radius < d {
                    continue;
                }
                let siblings = children.iter().copied().filter(|&w| w != via);
                let s = b.hang(s, siblings, radius, d + 1, cap)?;
                if !s.is_empty() {
                    mine.push((center, class, s));
                }
            }
        }

        let mut c0 = CoverSet::empty(k_count);
        for (_, _, s) in &mine {
            c0.absorb(s);
        }
        let c0 = c0.finish(b.set_opts(cap))?;
        b.stats.largest_set = b.stats.largest_set.max(c0.len());

        let k_cap = (heights[v] + 1).min(k_top);
        let mut row = Vec::with_capacity(k_cap + 1);
        row.push(c0);
        for k in 1..=k_cap {
            let mut excluded = CoverSet::zero(k_count);
            for &w in &children {
                let child = b.get(w, k - 1).clone();
                excluded = b.sum(&excluded, &child, cap)?;
            }
            let ck = row[0].union(&excluded, b.set_opts(cap))?;
            b.stats.largest_set = b.stats.largest_set.max(ck.len());
            row.push(ck);
        }
        b.levels[v] = row;
        partials[v] = mine;
    }

    Ok(CoverTables {
        levels: b.levels,
        roots: forest.roots().to_vec(),
        stats: b.stats,
    })
}

/// `C_0` of every root, one set per component.
pub fn cover_sets(
    forest: &RootedForest,
    classes: RadiusClasses,
    opts: DpOptions,
) -> Result<Vec<CoverSet>, PtasError> {
    let tables = cover_tables(forest, classes, opts)?;
    Ok(tables.root_sets().into_iter().cloned().collect())
}

/// Sumset over the roots: the covers of the whole forest.
pub fn forest_covers(
    forest: &RootedForest,
    classes: RadiusClasses,
    opts: DpOptions,
) -> Result<(CoverSet, DpStats), PtasError> {
    let tables = cover_tables(forest, classes, opts)?;
    let cap = forest.graph().vertex_count() as u32;
    let top = opts.bounded.then(|| ceiling(&classes));
    let set_opts = SetOptions {
        cap,
        prune: opts.prune,
        max_size: opts.max_set_size,
        ceiling: top.as_ref(),
    };
    let mut stats = tables.stats;
    let mut total = CoverSet::zero(classes.class_count());
    for root_set in tables.root_sets() {
        total = total.sumset(root_set, set_opts)?;
        stats.sumsets += 1;
        stats.largest_set = stats.largest_set.max(total.len());
    }
    Ok((total, stats))
}
