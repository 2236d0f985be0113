//! Shared inputs for the criterion benchmarks.

use strtree::{encode, RootedOrderedTree, Traversal, TreeString};

pub const SEED: u64 = 0x5eed;

pub fn random_tree(n: usize) -> RootedOrderedTree {
    RootedOrderedTree::random(n, SEED).expect("n >= 1")
}

pub fn random_string(n: usize, traversal: Traversal) -> TreeString {
    encode(&random_tree(n), traversal)
}
