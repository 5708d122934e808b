use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::PtasError;

/// Radii `0, a, 2a, ..., (K - 1) a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RadiusClasses {
    granularity: usize,
    class_count: usize,
}

impl RadiusClasses {
    pub fn new(granularity: usize, class_count: usize) -> Result<Self, PtasError> {
        if granularity == 0 || class_count == 0 {
            return Err(PtasError::InvalidClasses {
                granularity,
                class_count,
            });
        }
        Ok(Self {
            granularity,
            class_count,
        })
    }

    /// Enough classes to represent every rounded radius below `horizon`.
    pub fn for_horizon(granularity: usize, horizon: usize) -> Result<Self, PtasError> {
        let top = horizon.saturating_sub(1).div_ceil(granularity.max(1));
        Self::new(granularity, top + 1)
    }

    pub fn granularity(&self) -> usize {
        self.granularity
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn radius(&self, class: usize) -> usize {
        class * self.granularity
    }

    pub fn max_radius(&self) -> usize {
        self.radius(self.class_count - 1)
    }

    /// `a * ceil(i / a)`, the rounded value of slot `i`, as a class index.
    pub fn round_up(&self, i: usize) -> usize {
        i.div_ceil(self.granularity)
    }
}

/// Ball counts per radius class: `counts[j]` balls of radius `j * a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CoverVector(Vec<u32>);

impl CoverVector {
    pub fn zeros(class_count: usize) -> Self {
        Self(vec![0; class_count])
    }

    pub fn unit(class_count: usize, class: usize) -> Self {
        let mut v = Self::zeros(class_count);
        v.0[class] = 1;
        v
    }

    pub fn from_counts(counts: Vec<u32>) -> Self {
        Self(counts)
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    pub fn class_count(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }

    /// True iff the balls of `self` inject into those of `budget` without
    /// shrinking: for every class `j`, `self` has no more balls of class
    /// `>= j` than `budget` does. This is the order used for pruning too.
    pub fn fits_within(&self, budget: &Self) -> bool {
        let (mut mine, mut theirs) = (0u32, 0u32);
        for (x, y) in self.0.iter().zip(&budget.0).rev() {
            mine += x;
            theirs += y;
            if mine > theirs {
                return false;
            }
        }
        true
    }

    /// Sum of all suffix sums; strictly increases along the fit order.
    fn rank(&self) -> u64 {
        let mut suffix = 0u64;
        let mut rank = 0u64;
        for &x in self.0.iter().rev() {
            suffix += x as u64;
            rank += suffix;
        }
        rank
    }
}

/// The multiset `{ a * ceil(i / a) : 0 <= i < b }` as a cover vector.
pub fn rounded_multiset(classes: &RadiusClasses, b: usize) -> Result<CoverVector, PtasError> {
    let mut v = CoverVector::zeros(classes.class_count());
    for i in 0..b {
        let class = classes.round_up(i);
        if class >= classes.class_count() {
            return Err(PtasError::OutOfRange {
                b,
                max_radius: classes.max_radius(),
            });
        }
        v.0[class] += 1;
    }
    Ok(v)
}

pub fn fits(cover: &CoverVector, budget: &CoverVector) -> Result<bool, PtasError> {
    if cover.class_count() != budget.class_count() {
        return Err(PtasError::ClassMismatch {
            left: cover.class_count(),
            right: budget.class_count(),
        });
    }
    Ok(cover.fits_within(budget))
}

#[derive(Debug)]
enum TraceNode {
    Ball { center: usize, class: usize },
    Join(Trace, Trace),
}

/// How a cover vector was assembled: the balls (center, class) behind it.
#[derive(Debug, Clone, Default)]
pub struct Trace(Option<Arc<TraceNode>>);

impl Trace {
    pub fn ball(center: usize, class: usize) -> Self {
        Self(Some(Arc::new(TraceNode::Ball { center, class })))
    }

    fn join(&self, other: &Trace) -> Trace {
        match (&self.0, &other.0) {
            (None, _) => other.clone(),
            (_, None) => self.clone(),
            _ => Trace(Some(Arc::new(TraceNode::Join(self.clone(), other.clone())))),
        }
    }

    /// The recorded balls as `(center, class)` pairs.
    pub fn balls(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut stack: Vec<&Trace> = vec![self];
        while let Some(t) = stack.pop() {
            match t.0.as_deref() {
                None => {}
                Some(TraceNode::Ball { center, class }) => out.push((*center, *class)),
                Some(TraceNode::Join(a, b)) => {
                    stack.push(b);
                    stack.push(a);
                }
            }
        }
        out
    }
}

/// Limits applied by [`CoverSet::sumset`] and [`CoverSet::union`].
#[derive(Debug, Clone, Copy)]
pub struct SetOptions<'a> {
    /// Vectors with more balls than this are discarded.
    pub cap: u32,
    /// Keep only vectors minimal under [`CoverVector::fits_within`].
    pub prune: bool,
    pub max_size: Option<usize>,
    /// Vectors that do not fit within this one are discarded. Sums only grow,
    /// so nothing built from them could fit either.
    pub ceiling: Option<&'a CoverVector>,
}

impl SetOptions<'_> {
    pub fn with_cap(cap: u32) -> Self {
        Self {
            cap,
            prune: true,
            max_size: None,
            ceiling: None,
        }
    }

    fn admits(&self, v: &CoverVector) -> bool {
        v.total() <= self.cap && self.ceiling.is_none_or(|c| v.fits_within(c))
    }
}

/// A set of cover vectors over a shared class count, each with one trace.
#[derive(Debug, Clone)]
pub struct CoverSet {
    class_count: usize,
    members: BTreeMap<CoverVector, Trace>,
}

impl PartialEq for CoverSet {
    fn eq(&self, other: &Self) -> bool {
        self.class_count == other.class_count && self.members.keys().eq(other.members.keys())
    }
}

impl CoverSet {
    pub fn empty(class_count: usize) -> Self {
        Self {
            class_count,
            members: BTreeMap::new(),
        }
    }

    /// `{0}`, the identity of the sumset.
    pub fn zero(class_count: usize) -> Self {
        Self::singleton(CoverVector::zeros(class_count), Trace::default())
    }

    pub fn singleton(v: CoverVector, trace: Trace) -> Self {
        let class_count = v.class_count();
        Self {
            class_count,
            members: BTreeMap::from([(v, trace)]),
        }
    }

    pub fn from_vectors(
        class_count: usize,
        vectors: impl IntoIterator<Item = CoverVector>,
    ) -> Result<Self, PtasError> {
        let mut set = Self::empty(class_count);
        for v in vectors {
            set.check(v.class_count())?;
            set.members.entry(v).or_default();
        }
        Ok(set)
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &CoverVector) -> bool {
        self.members.contains_key(v)
    }

    pub fn vectors(&self) -> impl Iterator<Item = &CoverVector> {
        self.members.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CoverVector, &Trace)> {
        self.members.iter()
    }

    fn check(&self, other: usize) -> Result<(), PtasError> {
        if self.class_count == other {
            Ok(())
        } else {
            Err(PtasError::ClassMismatch {
                left: self.class_count,
                right: other,
            })
        }
    }

    /// All sums `u + v`, `u` from `self` and `v` from `other`.
    pub fn sumset(&self, other: &CoverSet, opts: SetOptions) -> Result<CoverSet, PtasError> {
        self.check(other.class_count)?;
        let mut out = CoverSet::empty(self.class_count);
        for (u, tu) in &self.members {
            for (v, tv) in &other.members {
                let sum = u.add(v);
                if opts.admits(&sum) {
                    out.members.entry(sum).or_insert_with(|| tu.join(tv));
                }
            }
        }
        out.finish(opts)
    }

    pub fn union(&self, other: &CoverSet, opts: SetOptions) -> Result<CoverSet, PtasError> {
        self.check(other.class_count)?;
        let mut out = self.clone();
        out.absorb(other);
        out.finish(opts)
    }

    /// In-place union without pruning; call [`CoverSet::finish`] afterwards.
    pub(crate) fn absorb(&mut self, other: &CoverSet) {
        for (v, t) in &other.members {
            self.members.entry(v.clone()).or_insert_with(|| t.clone());
        }
    }

    pub(crate) fn finish(mut self, opts: SetOptions) -> Result<CoverSet, PtasError> {
        self.members.retain(|v, _| opts.admits(v));
        if opts.prune {
            self.prune();
        }
        if let Some(max) = opts.max_size {
            if self.len() > max {
                return Err(PtasError::SetTooLarge { size: self.len(), max });
            }
        }
        Ok(self)
    }

    /// Drops every vector that some other member fits within.
    pub fn prune(&mut self) {
        let k = self.class_count;
        let mut ranked: Vec<(u64, CoverVector)> =
            self.members.keys().map(|v| (v.rank(), v.clone())).collect();
        ranked.sort();
        // Suffix sums of kept vectors, `k` entries each, largest class first.
        let mut kept: Vec<u32> = Vec::new();
        let mut suffix = vec![0u32; k];
        for (_, v) in ranked {
            let mut acc = 0;
            for (slot, &x) in suffix.iter_mut().zip(v.0.iter().rev()) {
                acc += x;
                *slot = acc;
            }
            let dominated = kept
                .chunks_exact(k)
                .any(|other| other.iter().zip(&suffix).all(|(a, b)| a <= b));
            if dominated {
                self.members.remove(&v);
            } else {
                kept.extend_from_slice(&suffix);
            }
        }
    }

    /// A member that fits within `budget`, with its trace.
    pub fn find_fitting(&self, budget: &CoverVector) -> Option<(&CoverVector, &Trace)> {
        self.members.iter().find(|(v, _)| v.fits_within(budget))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(counts: &[u32]) -> CoverVector {
        CoverVector::from_counts(counts.to_vec())
    }

    fn set(vs: &[&[u32]]) -> CoverSet {
        CoverSet::from_vectors(vs[0].len(), vs.iter().map(|c| cv(c))).unwrap()
    }

    #[test]
    fn rounded_multiset_examples() {
        let c = RadiusClasses::new(2, 3).unwrap();
        assert_eq!(rounded_multiset(&c, 5).unwrap(), cv(&[1, 2, 2]));
        let c = RadiusClasses::new(1, 4).unwrap();
        assert_eq!(rounded_multiset(&c, 4).unwrap(), cv(&[1, 1, 1, 1]));
        let c = RadiusClasses::new(3, 2).unwrap();
        assert_eq!(rounded_multiset(&c, 4).unwrap(), cv(&[1, 3]));
        assert!(matches!(
            rounded_multiset(&c, 5),
            Err(PtasError::OutOfRange { b: 5, .. })
        ));
    }

    #[test]
    fn class_sizing() {
        let c = RadiusClasses::for_horizon(2, 5).unwrap();
        assert_eq!((c.class_count(), c.max_radius()), (3, 4));
        let c = RadiusClasses::for_horizon(3, 1).unwrap();
        assert_eq!(c.class_count(), 1);
        assert!(RadiusClasses::new(0, 3).is_err());
    }

    #[test]
    fn fits_examples() {
        // classes {0, 2, 4}; budget {0, 2, 2, 4, 4}
        let budget = cv(&[1, 2, 2]);
        assert!(fits(&cv(&[1, 1, 0]), &budget).unwrap());
        assert!(!fits(&cv(&[0, 0, 3]), &budget).unwrap());
        assert!(fits(&cv(&[0, 3, 0]), &budget).unwrap());
        assert!(fits(&cv(&[1, 0]), &budget).is_err());
    }

    #[test]
    fn sumset_and_union_examples() {
        let opts = SetOptions { cap: 10, prune: false, max_size: None, ceiling: None };
        let a = set(&[&[1, 0]]);
        let b = set(&[&[0, 1]]);
        assert_eq!(a.sumset(&b, opts).unwrap(), set(&[&[1, 1]]));
        let many = set(&[&[1, 0], &[0, 2], &[3, 1]]);
        assert_eq!(many.sumset(&CoverSet::zero(2), opts).unwrap(), many);
        let u = a.union(&set(&[&[1, 0], &[0, 1]]), opts).unwrap();
        assert_eq!(u, set(&[&[1, 0], &[0, 1]]));
        assert!(a.sumset(&CoverSet::zero(3), opts).is_err());
    }

    #[test]
    fn cap_and_prune() {
        let capped = SetOptions { cap: 1, prune: false, max_size: None, ceiling: None };
        let s = set(&[&[1, 0]]).sumset(&set(&[&[0, 1]]), capped).unwrap();
        assert!(s.is_empty());
        let mut s = set(&[&[1, 0], &[0, 1], &[2, 0]]);
        s.prune();
        assert_eq!(s, set(&[&[1, 0]]));
        let tiny = SetOptions { cap: 10, prune: false, max_size: Some(1), ceiling: None };
        assert!(matches!(
            set(&[&[1, 0], &[0, 1]]).union(&CoverSet::empty(2), tiny),
            Err(PtasError::SetTooLarge { size: 2, max: 1 })
        ));
    }

    #[test]
    fn traces_collect_balls() {
        let opts = SetOptions::with_cap(10);
        let a = CoverSet::singleton(CoverVector::unit(2, 1), Trace::ball(4, 1));
        let b = CoverSet::singleton(CoverVector::unit(2, 0), Trace::ball(7, 0));
        let s = a.sumset(&b, opts).unwrap().sumset(&CoverSet::zero(2), opts).unwrap();
        let (v, t) = s.iter().next().unwrap();
        assert_eq!(v, &cv(&[1, 1]));
        assert_eq!(t.balls(), vec![(4, 1), (7, 0)]);
    }
}
