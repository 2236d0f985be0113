//! String trees: rooted ordered trees stored as one letter per node.
//!
//! A tree with `n` nodes becomes a string of `n` letters over `{x, y, X, Y}`
//! (two bits each): `y`/`Y` mark nodes with children and uppercase marks the
//! last child of its parent. The root is always `Y`.
//!
//! ```
//! use strtree::{encode_bfs, RootedOrderedTree, Traversal, TreeString};
//!
//! let tree = RootedOrderedTree::from_parentheses("(()(()))").unwrap();
//! let s = encode_bfs(&tree);
//! assert_eq!(s.to_string(), "YxYX");
//! assert_eq!(TreeString::parse("YxYX", Traversal::Bfs).unwrap().decode(), tree);
//! ```
//!
//! Modules:
//! - [`tree`]: explicit trees, text formats, traversals, random generation
//! - [`codec`]: letter alphabet, level-order and preorder codecs, validation
//! - [`binary`]: the packed 2-bit-per-node file format
//! - [`strops`]: edit distance, regex rewriting, subtree search and grafting,
//!   canonical forms, enumeration

pub mod binary;
pub mod codec;
pub mod strops;
pub mod tree;

pub use binary::{pack, unpack, unpack_bytes, PackedTree, UnpackError};
pub use codec::{
    decode_bfs, decode_dfs, encode, encode_bfs, encode_dfs, validate, validate_bfs, validate_dfs, ErrorKind,
    InvalidString, NodeLetter, Traversal, TreeString, ValidationReport,
};
pub use strops::{
    canonicalize, count_canonical, edit_distance, enumerate_valid, extract_subtree, find_subtrees, graft, rewrite,
    OtterConstants, RewriteMode, RewriteRule, StrOpsError,
};
pub use tree::{all_ordered_trees, EdgeListError, NodeOrder, OrderKind, ParenError, RootedOrderedTree};
