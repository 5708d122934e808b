//! Benchmark instances and the domination-to-burning gadget.

mod gadget;
mod generators;

pub use gadget::{
    build_gadget, extract_dominating_set, forward_schedule, EdgePath, GadgetError, GadgetMaps,
    GadgetResult, GadgetVertex,
};
pub use generators::{generate, ground_truth, GenError, GeneratedInstance, InstanceSpec};
