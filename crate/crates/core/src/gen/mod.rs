//! Seeded instance generators and the tree hardness construction.

mod adversarial;
mod chains;
mod random;
mod reduction;

pub use adversarial::{adversarial_greedy_search, AdversarialResult, ADVERSARIAL_EDGE_LIMIT};
pub use chains::{chain_from_vertex_chain, normalize_chain_list_instance, ChainListInstance, CHAIN_BOUND};
pub use random::{gen_random, GraphKind, RandomInstance, RandomSpec};
pub use reduction::{build_hardness_instance, verify_yes_certificate, ColorGadget, EdgeGadget, ReductionOutput, Star};
