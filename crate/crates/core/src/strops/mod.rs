//! Tree manipulation carried out directly on tree strings.
//!
//! Subtree search, extraction and grafting work on preorder ([`Traversal::Dfs`])
//! strings only: in preorder every subtree is one contiguous substring, while
//! level order scatters it across levels.

mod canon;
mod distance;
mod enumerate;
mod rewrite;
mod subtree;

pub use canon::{canonical_code, canonicalize};
pub use distance::edit_distance;
pub use enumerate::{count_canonical, count_canonical_with_limit, enumerate_valid, COUNT_CANONICAL_MAX, ENUMERATE_MAX};
pub use rewrite::{rewrite, RewriteMode, RewriteRule, RuleError};
pub use subtree::{extract_subtree, find_subtrees, graft, subtree_end};

use thiserror::Error;

use crate::codec::{Traversal, TreeString, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrOpsError {
    #[error("traversal mismatch: expected {expected}, found {found}")]
    TraversalMismatch { expected: Traversal, found: Traversal },
    #[error("position {position} out of range for {len} nodes")]
    IndexOutOfRange { position: usize, len: usize },
    #[error("node at position {0} is not a leaf")]
    NotALeaf(usize),
    #[error("result is not a valid tree string: {0}")]
    InvalidResult(ValidationReport),
    #[error("n = {n} exceeds the enumeration limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error("n must be at least 1")]
    ZeroSize,
}

/// Reference constants for the asymptotic count of unlabelled rooted trees,
/// `A * alpha^n * n^(-5/2)`.
#[derive(Clone, Copy, Debug)]
pub struct OtterConstants;

impl OtterConstants {
    pub const A: f64 = 0.4399;
    pub const ALPHA: f64 = 2.996;

    /// Asymptotic estimate of the number of unlabelled rooted trees with `n` nodes.
    pub fn estimate(n: u32) -> f64 {
        Self::A * Self::ALPHA.powi(n as i32) * (n as f64).powf(-2.5)
    }

    /// Information-theoretic bits per node, `log2(alpha)`.
    pub fn bits_per_node() -> f64 {
        Self::ALPHA.log2()
    }
}

pub(crate) fn require(s: &TreeString, expected: Traversal) -> Result<(), StrOpsError> {
    if s.traversal() == expected {
        Ok(())
    } else {
        Err(StrOpsError::TraversalMismatch {
            expected,
            found: s.traversal(),
        })
    }
}
