//! Structural analyses behind the md bounds: blocks, θ-classes, matching
//! cuts and soft-layer reductions.

mod blocks;
mod matching_cut;
mod soft_layer;
mod theta;

pub use blocks::{
    block_decomposition, cut_vertices_naive, is_two_connected, max_edges_with_r_blocks, Block, BlockDecomposition,
};
pub use matching_cut::{
    find_matching_cuts, find_matching_cuts_capped, has_matching_cut, matching_cut_side, MATCHING_CUT_CAP,
};
pub use soft_layer::soft_layer_reduce;
pub use theta::{forced_classes, is_closure, theta_classes, ThetaPartition};
