//! Explicit rooted ordered trees.
//!
//! Every constructor normalizes node labels to breadth-first indices: the root
//! is `0`, `parent(v) < v` for every other node, and the children of a node
//! occupy a consecutive index range. Because of that layout the children of
//! all nodes fit in a single offset table, so a tree costs two `usize` per
//! node regardless of its shape.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::ops::Range;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

const NO_PARENT: usize = usize::MAX;

/// A rooted tree whose sibling order is significant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootedOrderedTree {
    parent: Vec<usize>,
    /// `children(v) = child_start[v]..child_start[v + 1]`; length `n + 1`.
    child_start: Vec<usize>,
}

/// Which walk produced a [`NodeOrder`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Bfs,
    Preorder,
}

/// A permutation of a tree's nodes, starting at the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeOrder {
    pub nodes: Vec<usize>,
    pub kind: OrderKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParenError {
    #[error("empty input")]
    EmptyInput,
    #[error("unbalanced parenthesis at position {0}")]
    UnbalancedParens(usize),
    #[error("trailing input after the root closes at position {0}")]
    TrailingGarbage(usize),
    #[error("unexpected character at position {0}")]
    InvalidCharacter(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("empty edge list")]
    EmptyInput,
    #[error("edges contain a cycle")]
    CycleDetected,
    #[error("more than one root")]
    MultipleRoots,
    #[error("node {0} is not connected to the root")]
    DisconnectedNode(String),
    #[error("node {0} appears as a child more than once")]
    DuplicateChild(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("tree size must be at least 1")]
pub struct InvalidSize;

impl RootedOrderedTree {
    /// The 1-node tree.
    pub fn singleton() -> Self {
        RootedOrderedTree {
            parent: vec![NO_PARENT],
            child_start: vec![1, 1],
        }
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.parent[v] {
            NO_PARENT => None,
            p => Some(p),
        }
    }

    /// Children of `v` in sibling order. They are always consecutive indices.
    pub fn children(&self, v: usize) -> Range<usize> {
        self.child_start[v]..self.child_start[v + 1]
    }

    pub fn child_count(&self, v: usize) -> usize {
        self.child_start[v + 1] - self.child_start[v]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.child_count(v) == 0
    }

    /// True when `v` is the final child of its parent. The root counts as last.
    pub fn is_last_child(&self, v: usize) -> bool {
        match self.parent(v) {
            None => true,
            Some(p) => self.child_start[p + 1] == v + 1,
        }
    }

    /// Parent array with `None` for the root.
    pub fn parents(&self) -> Vec<Option<usize>> {
        (0..self.node_count()).map(|v| self.parent(v)).collect()
    }

    pub fn leaf_count(&self) -> usize {
        (0..self.node_count()).filter(|&v| self.is_leaf(v)).count()
    }

    /// Longest root-to-leaf path measured in edges; 0 for the 1-node tree.
    pub fn depth(&self) -> usize {
        let mut depth = vec![0usize; self.node_count()];
        let mut max = 0;
        for v in 1..self.node_count() {
            depth[v] = depth[self.parent[v]] + 1;
            max = max.max(depth[v]);
        }
        max
    }

    pub fn bfs_order(&self) -> NodeOrder {
        NodeOrder {
            nodes: (0..self.node_count()).collect(),
            kind: OrderKind::Bfs,
        }
    }

    pub fn preorder(&self) -> NodeOrder {
        let n = self.node_count();
        let mut nodes = Vec::with_capacity(n);
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            nodes.push(v);
            stack.extend(self.children(v).rev());
        }
        NodeOrder {
            nodes,
            kind: OrderKind::Preorder,
        }
    }

    /// Number of nodes in the subtree rooted at each node.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![1usize; self.node_count()];
        for v in (1..self.node_count()).rev() {
            size[self.parent[v]] += size[v];
        }
        size
    }

    /// Parses nested parentheses, one `(...)` pair per node. Whitespace is ignored.
    pub fn from_parentheses(text: &str) -> Result<Self, ParenError> {
        let mut parent: Vec<usize> = Vec::new();
        let mut open: Vec<usize> = Vec::new();
        let mut closed_at: Option<usize> = None;
        for (pos, ch) in text.char_indices() {
            match ch {
                c if c.is_whitespace() => {}
                '(' | ')' if closed_at.is_some() => return Err(ParenError::TrailingGarbage(pos)),
                '(' => {
                    parent.push(open.last().copied().unwrap_or(NO_PARENT));
                    open.push(parent.len() - 1);
                }
                ')' => {
                    if open.pop().is_none() {
                        return Err(ParenError::UnbalancedParens(pos));
                    }
                    if open.is_empty() {
                        closed_at = Some(pos);
                    }
                }
                _ if closed_at.is_some() => return Err(ParenError::TrailingGarbage(pos)),
                _ => return Err(ParenError::InvalidCharacter(pos)),
            }
        }
        if parent.is_empty() {
            return Err(ParenError::EmptyInput);
        }
        if !open.is_empty() {
            return Err(ParenError::UnbalancedParens(text.len()));
        }
        Ok(Self::from_ordered_parents(&parent))
    }

    pub fn to_parentheses(&self) -> String {
        let mut out = String::with_capacity(2 * self.node_count());
        // Entries are (node, entering).
        let mut stack = vec![(0usize, true)];
        while let Some((v, entering)) = stack.pop() {
            if entering {
                out.push('(');
                stack.push((v, false));
                stack.extend(self.children(v).rev().map(|c| (c, true)));
            } else {
                out.push(')');
            }
        }
        out
    }

    /// Builds a tree from `(parent, child)` pairs over arbitrary labels.
    ///
    /// Sibling order is the order in which each child first appears. An
    /// empty edge list is only accepted together with an explicit `root`.
    pub fn from_edge_list<L>(pairs: &[(L, L)], root: Option<&L>) -> Result<Self, EdgeListError>
    where
        L: Eq + Hash + Clone + fmt::Display,
    {
        if pairs.is_empty() {
            return match root {
                Some(_) => Ok(Self::singleton()),
                None => Err(EdgeListError::EmptyInput),
            };
        }

        let mut ids: HashMap<&L, usize> = HashMap::new();
        let mut labels: Vec<&L> = Vec::new();
        let mut edges = Vec::with_capacity(pairs.len());
        for (p, c) in pairs {
            for label in [p, c] {
                if !ids.contains_key(label) {
                    ids.insert(label, labels.len());
                    labels.push(label);
                }
            }
            edges.push((ids[p], ids[c]));
        }
        let n = labels.len();
        let mut parent = vec![NO_PARENT; n];
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(p, c) in &edges {
            if parent[c] != NO_PARENT {
                return Err(EdgeListError::DuplicateChild(labels[c].to_string()));
            }
            parent[c] = p;
            children[p].push(c);
        }

        let roots: Vec<usize> = (0..n).filter(|&v| parent[v] == NO_PARENT).collect();
        let root_id = match (roots.as_slice(), root) {
            ([], _) => return Err(EdgeListError::CycleDetected),
            ([r], None) => *r,
            ([r], Some(declared)) => match ids.get(declared) {
                Some(id) if id == r => *r,
                Some(_) => return Err(EdgeListError::MultipleRoots),
                None => return Err(EdgeListError::DisconnectedNode(declared.to_string())),
            },
            _ => return Err(EdgeListError::MultipleRoots),
        };

        let (tree, reached) = relabel_bfs(n, root_id, |v| children[v].as_slice());
        // Every node has at most one parent and only the root has none, so
        // anything unreachable sits on a cycle.
        if reached.contains(&false) {
            return Err(EdgeListError::CycleDetected);
        }
        Ok(tree)
    }

    /// Parses the edge-list text format: one `parent child` pair per line,
    /// or a lone `root <label>` line for a 1-node tree. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn from_edge_text(text: &str) -> Result<Self, EdgeListError> {
        let mut pairs: Vec<(String, String)> = Vec::new();
        let mut root: Option<String> = None;
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["root", label] => {
                    if root.replace(label.to_string()).is_some() {
                        return Err(EdgeListError::MultipleRoots);
                    }
                }
                [p, c] => pairs.push((p.to_string(), c.to_string())),
                _ => {
                    return Err(EdgeListError::Syntax {
                        line: idx + 1,
                        message: format!("expected `parent child`, got {line:?}"),
                    })
                }
            }
        }
        Self::from_edge_list(&pairs, root.as_ref())
    }

    /// Renders the edge-list text format using BFS indices as labels.
    pub fn to_edge_text(&self) -> String {
        if self.node_count() == 1 {
            return "root 0\n".to_string();
        }
        let mut out = String::new();
        for v in 1..self.node_count() {
            out.push_str(&format!("{} {}\n", self.parent[v], v));
        }
        out
    }

    /// Draws a tree uniformly from the Catalan(n - 1) ordered trees with `n` nodes.
    ///
    /// A uniform shuffle of `n - 1` opening and `n` closing steps is rotated
    /// to the unique position where every proper prefix stays non-negative
    /// (the cycle lemma); dropping the final closing step leaves a uniform
    /// Dyck word for the root's children.
    pub fn random(n: usize, seed: u64) -> Result<Self, InvalidSize> {
        if n == 0 {
            return Err(InvalidSize);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut steps: Vec<bool> = (0..2 * n - 1).map(|i| i < n - 1).collect();
        steps.shuffle(&mut rng);

        let mut height: i64 = 0;
        let mut lowest = 0i64;
        let mut cut = 0usize;
        for (i, &up) in steps.iter().enumerate() {
            height += if up { 1 } else { -1 };
            if height < lowest {
                lowest = height;
                cut = i + 1;
            }
        }
        steps.rotate_left(cut);
        steps.pop();

        let mut parent = Vec::with_capacity(n);
        parent.push(NO_PARENT);
        let mut open = vec![0usize];
        for up in steps {
            if up {
                parent.push(*open.last().expect("Dyck prefix"));
                open.push(parent.len() - 1);
            } else {
                open.pop();
            }
        }
        Ok(Self::from_ordered_parents(&parent))
    }

    /// Builds from a parent array in which every node's parent precedes it
    /// and siblings appear in increasing index order (preorder or BFS
    /// labelling both qualify). `parent[0]` must be the root.
    pub(crate) fn from_ordered_parents(parent: &[usize]) -> Self {
        let n = parent.len();
        if n == 1 {
            return Self::singleton();
        }
        // Counting sort by parent keeps siblings in index order.
        let mut offset = vec![0usize; n + 1];
        for &p in &parent[1..] {
            offset[p + 1] += 1;
        }
        for v in 0..n {
            offset[v + 1] += offset[v];
        }
        let mut fill = offset.clone();
        let mut targets = vec![0usize; n - 1];
        for (v, &p) in parent.iter().enumerate().skip(1) {
            targets[fill[p]] = v;
            fill[p] += 1;
        }
        relabel_bfs(n, 0, |v| &targets[offset[v]..offset[v + 1]]).0
    }

    /// Builds from a parent array that is already BFS-labelled: `parent[0]`
    /// is the root sentinel and `parent` is non-decreasing after it.
    pub(crate) fn from_bfs_parents(parent: Vec<usize>) -> Self {
        let n = parent.len();
        let mut child_start = vec![0usize; n + 1];
        for &p in &parent[1..] {
            debug_assert!(p < n);
            child_start[p + 1] += 1;
        }
        child_start[0] = 1;
        for v in 0..n {
            child_start[v + 1] += child_start[v];
        }
        RootedOrderedTree { parent, child_start }
    }
}

/// Relabels a tree into BFS order. Returns the tree over the reached nodes
/// and a per-input-node reached flag.
fn relabel_bfs<'a, F>(n: usize, root: usize, children: F) -> (RootedOrderedTree, Vec<bool>)
where
    F: Fn(usize) -> &'a [usize],
{
    let mut reached = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut parent = Vec::with_capacity(n);
    let mut child_start = Vec::with_capacity(n + 1);
    reached[root] = true;
    order.push(root);
    parent.push(NO_PARENT);
    let mut head = 0;
    while head < order.len() {
        let old = order[head];
        child_start.push(order.len());
        for &c in children(old) {
            if reached[c] {
                continue;
            }
            reached[c] = true;
            order.push(c);
            parent.push(head);
        }
        head += 1;
    }
    child_start.push(order.len());
    (RootedOrderedTree { parent, child_start }, reached)
}

impl fmt::Debug for RootedOrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootedOrderedTree({})", self.to_parentheses())
    }
}

impl fmt::Display for RootedOrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_parentheses())
    }
}

/// Iterates every ordered tree with `n` nodes, in lexicographic order of
/// their parenthesis text (`(` before `)`).
pub fn all_ordered_trees(n: usize) -> impl Iterator<Item = RootedOrderedTree> {
    let words = if n == 0 {
        DyckWords { word: None }
    } else {
        DyckWords::new(n - 1)
    };
    words.map(|word| {
        let mut parent = Vec::with_capacity(word.len() / 2 + 1);
        parent.push(NO_PARENT);
        let mut open = vec![0usize];
        for up in word {
            if up {
                parent.push(*open.last().unwrap());
                open.push(parent.len() - 1);
            } else {
                open.pop();
            }
        }
        RootedOrderedTree::from_ordered_parents(&parent)
    })
}

/// Dyck words of semilength `k`, `true` = opening step, in lexicographic
/// order with opening before closing.
pub(crate) struct DyckWords {
    word: Option<Vec<bool>>,
}

impl DyckWords {
    pub(crate) fn new(k: usize) -> Self {
        let mut first = vec![true; k];
        first.extend(std::iter::repeat_n(false, k));
        DyckWords { word: Some(first) }
    }
}

impl Iterator for DyckWords {
    type Item = Vec<bool>;

    fn next(&mut self) -> Option<Vec<bool>> {
        let current = self.word.take()?;
        self.word = next_dyck(&current);
        Some(current)
    }
}

/// Lexicographic successor (opening < closing) of a Dyck word.
fn next_dyck(word: &[bool]) -> Option<Vec<bool>> {
    let len = word.len();
    let k = len / 2;
    // Walk back to the rightmost opening step that can become a closing step
    // while the prefix stays non-negative.
    let mut opens = word.iter().filter(|&&u| u).count();
    let mut height: i64 = word.iter().map(|&u| if u { 1 } else { -1 }).sum();
    for i in (0..len).rev() {
        if word[i] {
            opens -= 1;
            height -= 1;
            // Prefix height before position i is `height`; a closing step here needs height >= 1.
            if height >= 1 {
                let mut next = word[..i].to_vec();
                next.push(false);
                let remaining_opens = k - opens;
                next.extend(std::iter::repeat_n(true, remaining_opens));
                let rest = len - next.len();
                next.extend(std::iter::repeat_n(false, rest));
                return Some(next);
            }
        } else {
            height += 1;
        }
    }
    None
}
