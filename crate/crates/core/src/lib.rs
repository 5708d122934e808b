//! Computing and approximating the burning number of a graph.
//!
//! The burning number `b(G)` is the smallest `b` such that the vertices of
//! `G` can be covered by balls of radii `0, 1, ..., b - 1`. This crate
//! provides:
//!
//! * [`graph`]: the graph substrate (parsing, BFS, balls, schedules, rooted forests),
//! * [`exact`]: exhaustive solvers for the burning and domination numbers,
//! * [`greedy`]: the deterministic greedy 3-approximation,
//! * [`random`]: greedy random burning with certified upper bounds,
//! * [`ptas`]: a dynamic program over rounded cover multisets for forests,
//! * [`instances`]: benchmark generators and the domination-to-burning gadget.

pub mod exact;
pub mod graph;
pub mod greedy;
pub mod instances;
pub mod ptas;
pub mod random;

pub use graph::{Graph, GraphError, RootedForest, ScheduleCheck, BurningSchedule};
