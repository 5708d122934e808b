//! The gadget `G'` built from a graph `G` and a length `d`: every edge of `G`
//! is subdivided into a path of length `2d`, and every vertex `v` gets a
//! pendant copy `v'` joined to it by a path of length `d`.
//!
//! A dominating set `D` of `G` burns `G'` within `|D| + 3d` steps; conversely a
//! burning schedule of `G'` with horizon below `5d` yields a dominating set of
//! `G` of at most twice its size.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Ball, BurningSchedule, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("path length d must be at least 1")]
    InvalidLength,
    #[error("vertex {0} is not in the original graph")]
    InvalidVertex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgePath {
    pub edge: (usize, usize),
    /// Interior vertices of the subdivided edge, from `edge.0` towards `edge.1`.
    pub internal: Vec<usize>,
}

/// Where a vertex of `G'` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetVertex {
    Original(usize),
    Copy(usize),
    /// Strictly inside the path replacing edge `{u, w}`.
    EdgeInterior { u: usize, w: usize },
    /// Strictly inside the path from `v` to its copy.
    CopyPath(usize),
}

#[derive(Debug, Clone)]
pub struct GadgetResult {
    pub gprime: Graph,
    pub d: usize,
    pub original_vertex_map: Vec<usize>,
    pub copy_vertex_map: Vec<usize>,
    pub edge_path_map: Vec<EdgePath>,
    /// Interior of the `v`-to-`v'` path, from `v` towards `v'`.
    pub copy_path_map: Vec<Vec<usize>>,
    origin: Vec<GadgetVertex>,
}

/// The provenance tables, as written next to a generated gadget.
#[derive(Debug, Clone, Serialize)]
pub struct GadgetMaps<'a> {
    pub d: usize,
    pub original_vertex_map: &'a [usize],
    pub copy_vertex_map: &'a [usize],
    pub edge_path_map: &'a [EdgePath],
    pub copy_path_map: &'a [Vec<usize>],
}

impl GadgetResult {
    pub fn origin(&self, x: usize) -> GadgetVertex {
        self.origin[x]
    }

    pub fn maps(&self) -> GadgetMaps<'_> {
        GadgetMaps {
            d: self.d,
            original_vertex_map: &self.original_vertex_map,
            copy_vertex_map: &self.copy_vertex_map,
            edge_path_map: &self.edge_path_map,
            copy_path_map: &self.copy_path_map,
        }
    }
}

/// Numbering: originals `0..n`, copies `n..2n`, then edge-path interiors in
/// edge order, then copy-path interiors in vertex order.
pub fn build_gadget(g: &Graph, d: usize) -> Result<GadgetResult, GadgetError> {
    if g.is_empty() {
        return Err(GadgetError::EmptyGraph);
    }
    if d == 0 {
        return Err(GadgetError::InvalidLength);
    }
    let n = g.vertex_count();
    let mut origin: Vec<GadgetVertex> = (0..n)
        .map(GadgetVertex::Original)
        .chain((0..n).map(GadgetVertex::Copy))
        .collect();
    let mut edges = Vec::new();
    let mut chain = |from: usize, to: usize, interior: usize, kind: GadgetVertex, origin: &mut Vec<GadgetVertex>| {
        let ids: Vec<usize> = (origin.len()..origin.len() + interior).collect();
        origin.extend(std::iter::repeat_n(kind, interior));
        let mut prev = from;
        for &x in &ids {
            edges.push((prev, x));
            prev = x;
        }
        edges.push((prev, to));
        ids
    };

    let mut edge_path_map = Vec::with_capacity(g.edge_count());
    for (u, w) in g.edges() {
        let internal = chain(u, w, 2 * d - 1, GadgetVertex::EdgeInterior { u, w }, &mut origin);
        edge_path_map.push(EdgePath { edge: (u, w), internal });
    }
    let copy_path_map = (0..n)
        .map(|v| chain(v, n + v, d - 1, GadgetVertex::CopyPath(v), &mut origin))
        .collect();
    let gprime = Graph::from_edges(origin.len(), edges).expect("gadget edges are valid");
    Ok(GadgetResult {
        gprime,
        d,
        original_vertex_map: (0..n).collect(),
        copy_vertex_map: (n..2 * n).collect(),
        edge_path_map,
        copy_path_map,
        origin,
    })
}

/// Reads a vertex set of `G` off a schedule of `G'`: a ball centered strictly
/// inside the path of edge `{u, w}` contributes both `u` and `w`; a ball
/// centered at `v`, at `v'`, or between them contributes `v`.
pub fn extract_dominating_set(gadget: &GadgetResult, schedule: &BurningSchedule) -> Vec<usize> {
    let mut set: Vec<usize> = schedule
        .balls()
        .iter()
        .flat_map(|ball| match gadget.origin(ball.center) {
            GadgetVertex::EdgeInterior { u, w } => vec![u, w],
            GadgetVertex::Original(v) | GadgetVertex::Copy(v) | GadgetVertex::CopyPath(v) => vec![v],
        })
        .collect();
    set.sort_unstable();
    set.dedup();
    set
}

/// Lights the members of `dominating` one per step, then waits `3d` steps:
/// radii `3d + |D| - 1` down to `3d`, horizon `|D| + 3d`.
pub fn forward_schedule(
    gadget: &GadgetResult,
    dominating: &[usize],
) -> Result<BurningSchedule, GadgetError> {
    let n = gadget.original_vertex_map.len();
    if let Some(&bad) = dominating.iter().find(|&&v| v >= n) {
        return Err(GadgetError::InvalidVertex(bad));
    }
    let horizon = dominating.len() + 3 * gadget.d;
    let balls = dominating
        .iter()
        .enumerate()
        .map(|(i, &v)| Ball {
            center: gadget.original_vertex_map[v],
            radius: horizon - 1 - i,
        })
        .collect();
    Ok(BurningSchedule::new(horizon, balls).expect("distinct radii below the horizon"))
}
