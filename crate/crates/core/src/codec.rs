//! Two-bit-per-node string encoding of rooted ordered trees.
//!
//! Each node becomes one letter from `{x, y, X, Y}`: lowercase marks a node
//! that is not its parent's last child, and `y`/`Y` mark nodes that have
//! children. The root is always `Y`, including the 1-node tree. Letters are
//! emitted in level order ([`Traversal::Bfs`]) or preorder
//! ([`Traversal::Dfs`]).
//!
//! In level order the string splits into sibling groups matching
//! `[xy]*[XY]`. The groups of a level belong to the `y`/`Y` nodes of the
//! previous level in order, so decoding only needs a FIFO of pending parents:
//! the front parent adopts each letter and is dropped once an uppercase
//! letter closes its group.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::tree::RootedOrderedTree;

/// One symbol of the tree alphabet.
///
/// The discriminant is the packed 2-bit code: bit 0 is `has_children`,
/// bit 1 is `is_last_child`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum NodeLetter {
    /// `x`: leaf, more siblings follow.
    Leaf = 0b00,
    /// `y`: has children, more siblings follow.
    Branch = 0b01,
    /// `X`: leaf, last of its siblings.
    LastLeaf = 0b10,
    /// `Y`: has children, last of its siblings. Also the root.
    LastBranch = 0b11,
}

impl NodeLetter {
    pub const ALL: [NodeLetter; 4] = [
        NodeLetter::Leaf,
        NodeLetter::Branch,
        NodeLetter::LastLeaf,
        NodeLetter::LastBranch,
    ];

    pub fn from_flags(has_children: bool, is_last_child: bool) -> Self {
        Self::from_code(has_children as u8 | (is_last_child as u8) << 1)
    }

    /// Inverse of [`NodeLetter::code`]; only the low two bits are read.
    pub fn from_code(code: u8) -> Self {
        match code & 0b11 {
            0b00 => NodeLetter::Leaf,
            0b01 => NodeLetter::Branch,
            0b10 => NodeLetter::LastLeaf,
            _ => NodeLetter::LastBranch,
        }
    }

    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn has_children(self) -> bool {
        self.code() & 0b01 != 0
    }

    pub fn is_last_child(self) -> bool {
        self.code() & 0b10 != 0
    }

    pub fn as_char(self) -> char {
        match self {
            NodeLetter::Leaf => 'x',
            NodeLetter::Branch => 'y',
            NodeLetter::LastLeaf => 'X',
            NodeLetter::LastBranch => 'Y',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'x' => Some(NodeLetter::Leaf),
            'y' => Some(NodeLetter::Branch),
            'X' => Some(NodeLetter::LastLeaf),
            'Y' => Some(NodeLetter::LastBranch),
            _ => None,
        }
    }

    /// Same `has_children`, with the given `is_last_child`.
    pub fn with_last(self, is_last_child: bool) -> Self {
        Self::from_flags(self.has_children(), is_last_child)
    }
}

impl fmt::Display for NodeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Traversal {
    /// Level order, the default.
    #[default]
    Bfs,
    /// Preorder.
    Dfs,
}

impl fmt::Display for Traversal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Traversal::Bfs => "bfs",
            Traversal::Dfs => "dfs",
        })
    }
}

impl FromStr for Traversal {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "bfs" | "b" => Ok(Traversal::Bfs),
            "dfs" | "d" => Ok(Traversal::Dfs),
            other => Err(format!("unknown traversal {other:?} (expected bfs or dfs)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    BadAlphabet,
    BadRoot,
    UnterminatedGroup,
    ExtraCharacters,
    TruncatedString,
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ValidationError {
    pub kind: ErrorKind,
    pub position: usize,
}

/// Outcome of validating a candidate tree string. Never an `Err`: an invalid
/// string is an ordinary result here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ValidationReport {
    pub error: Option<ValidationError>,
}

impl ValidationReport {
    pub const VALID: ValidationReport = ValidationReport { error: None };

    fn fail(kind: ErrorKind, position: usize) -> Self {
        ValidationReport {
            error: Some(ValidationError { kind, position }),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.error.is_none()
    }

    pub fn kind(&self) -> Option<ErrorKind> {
        self.error.map(|e| e.kind)
    }

    pub fn position(&self) -> Option<usize> {
        self.error.map(|e| e.position)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.error {
            None => f.write_str("valid"),
            Some(e) => write!(f, "{} at position {}", e.kind, e.position),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("invalid tree string: {0}")]
pub struct InvalidString(pub ValidationReport);

/// A validated tree string together with the traversal that produced it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TreeString {
    letters: Vec<NodeLetter>,
    traversal: Traversal,
}

impl TreeString {
    pub fn parse(text: &str, traversal: Traversal) -> Result<Self, InvalidString> {
        let letters = parse_letters(text).map_err(InvalidString)?;
        Self::from_letters(letters, traversal)
    }

    pub fn from_letters(letters: Vec<NodeLetter>, traversal: Traversal) -> Result<Self, InvalidString> {
        let report = check_letters(&letters, traversal);
        if report.is_valid() {
            Ok(TreeString { letters, traversal })
        } else {
            Err(InvalidString(report))
        }
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<NodeLetter>, traversal: Traversal) -> Self {
        debug_assert!(check_letters(&letters, traversal).is_valid());
        TreeString { letters, traversal }
    }

    /// The 1-node tree, `"Y"`.
    pub fn singleton(traversal: Traversal) -> Self {
        TreeString {
            letters: vec![NodeLetter::LastBranch],
            traversal,
        }
    }

    pub fn letters(&self) -> &[NodeLetter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<NodeLetter> {
        self.letters
    }

    pub fn traversal(&self) -> Traversal {
        self.traversal
    }

    /// Node count; one letter per node.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Always false: the shortest tree string is `"Y"`.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn decode(&self) -> RootedOrderedTree {
        match self.traversal {
            Traversal::Bfs => decode_bfs_letters(&self.letters),
            Traversal::Dfs => decode_dfs_letters(&self.letters),
        }
    }

    /// Re-encodes the same tree under another traversal.
    pub fn to_traversal(&self, traversal: Traversal) -> TreeString {
        if traversal == self.traversal {
            return self.clone();
        }
        encode(&self.decode(), traversal)
    }
}

impl fmt::Display for TreeString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self.letters.iter().map(|l| l.as_char()).collect();
        f.write_str(&text)
    }
}

impl fmt::Debug for TreeString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TreeString({:?}, \"{}\")", self.traversal, self)
    }
}

pub fn encode(tree: &RootedOrderedTree, traversal: Traversal) -> TreeString {
    match traversal {
        Traversal::Bfs => encode_bfs(tree),
        Traversal::Dfs => encode_dfs(tree),
    }
}

fn letter_of(tree: &RootedOrderedTree, v: usize) -> NodeLetter {
    if v == 0 {
        NodeLetter::LastBranch
    } else {
        NodeLetter::from_flags(!tree.is_leaf(v), tree.is_last_child(v))
    }
}

/// Level-order encoding. Nodes are already BFS-indexed, so this is a
/// straight scan.
pub fn encode_bfs(tree: &RootedOrderedTree) -> TreeString {
    let letters = (0..tree.node_count()).map(|v| letter_of(tree, v)).collect();
    TreeString::from_letters_unchecked(letters, Traversal::Bfs)
}

pub fn encode_dfs(tree: &RootedOrderedTree) -> TreeString {
    let letters = tree.preorder().nodes.into_iter().map(|v| letter_of(tree, v)).collect();
    TreeString::from_letters_unchecked(letters, Traversal::Dfs)
}

pub fn decode_bfs(text: &str) -> Result<RootedOrderedTree, InvalidString> {
    TreeString::parse(text, Traversal::Bfs).map(|s| s.decode())
}

pub fn decode_dfs(text: &str) -> Result<RootedOrderedTree, InvalidString> {
    TreeString::parse(text, Traversal::Dfs).map(|s| s.decode())
}

fn decode_bfs_letters(letters: &[NodeLetter]) -> RootedOrderedTree {
    let n = letters.len();
    let mut parent = Vec::with_capacity(n);
    parent.push(usize::MAX);
    // Pending parents are exactly the internal nodes in index order, so the
    // queue is a cursor over the letters rather than a separate container.
    let mut front = 0usize;
    for (i, &letter) in letters.iter().enumerate().skip(1) {
        parent.push(front);
        if letter.is_last_child() {
            front += 1;
            while front <= i && !letters[front].has_children() {
                front += 1;
            }
        }
    }
    RootedOrderedTree::from_bfs_parents(parent)
}

fn decode_dfs_letters(letters: &[NodeLetter]) -> RootedOrderedTree {
    let mut parent = Vec::with_capacity(letters.len());
    parent.push(usize::MAX);
    // Open internal nodes: (index, is_last_child).
    let mut open: Vec<(usize, bool)> = vec![(0, true)];
    for (i, &letter) in letters.iter().enumerate().skip(1) {
        let &(p, _) = open.last().expect("validated string");
        parent.push(p);
        if letter.has_children() {
            open.push((i, letter.is_last_child()));
        } else if letter.is_last_child() {
            close_finished(&mut open);
        }
    }
    RootedOrderedTree::from_ordered_parents(&parent)
}

/// Pops the innermost open node, then every ancestor whose last child just
/// finished.
fn close_finished(open: &mut Vec<(usize, bool)>) {
    while let Some((_, last)) = open.pop() {
        if !last {
            break;
        }
    }
}

/// Converts text to letters, reporting the first character outside the
/// alphabet.
pub fn parse_letters(text: &str) -> Result<Vec<NodeLetter>, ValidationReport> {
    text.char_indices()
        .map(|(pos, c)| NodeLetter::from_char(c).ok_or(ValidationReport::fail(ErrorKind::BadAlphabet, pos)))
        .collect()
}

pub fn validate(text: &str, traversal: Traversal) -> ValidationReport {
    match parse_letters(text) {
        Ok(letters) => check_letters(&letters, traversal),
        Err(report) => report,
    }
}

pub fn validate_bfs(text: &str) -> ValidationReport {
    validate(text, Traversal::Bfs)
}

pub fn validate_dfs(text: &str) -> ValidationReport {
    validate(text, Traversal::Dfs)
}

pub fn check_letters(letters: &[NodeLetter], traversal: Traversal) -> ValidationReport {
    match letters.first() {
        None => return ValidationReport::fail(ErrorKind::TruncatedString, 0),
        Some(NodeLetter::LastBranch) => {}
        Some(_) => return ValidationReport::fail(ErrorKind::BadRoot, 0),
    }
    if letters.len() == 1 {
        return ValidationReport::VALID;
    }
    match traversal {
        Traversal::Bfs => check_bfs(letters),
        Traversal::Dfs => check_dfs(letters),
    }
}

fn check_bfs(letters: &[NodeLetter]) -> ValidationReport {
    // Parents whose sibling group has not been closed yet, root included.
    let mut pending = 1usize;
    let mut group_start: Option<usize> = None;
    for (i, &letter) in letters.iter().enumerate().skip(1) {
        if pending == 0 {
            return ValidationReport::fail(ErrorKind::ExtraCharacters, i);
        }
        group_start.get_or_insert(i);
        if letter.has_children() {
            pending += 1;
        }
        if letter.is_last_child() {
            pending -= 1;
            group_start = None;
        }
    }
    match (pending, group_start) {
        (0, _) => ValidationReport::VALID,
        (_, Some(start)) => ValidationReport::fail(ErrorKind::UnterminatedGroup, start),
        (_, None) => ValidationReport::fail(ErrorKind::TruncatedString, letters.len()),
    }
}

fn check_dfs(letters: &[NodeLetter]) -> ValidationReport {
    let mut open: Vec<(usize, bool)> = vec![(0, true)];
    for (i, &letter) in letters.iter().enumerate().skip(1) {
        if open.is_empty() {
            return ValidationReport::fail(ErrorKind::ExtraCharacters, i);
        }
        if letter.has_children() {
            open.push((i, letter.is_last_child()));
        } else if letter.is_last_child() {
            close_finished(&mut open);
        }
    }
    if open.is_empty() {
        ValidationReport::VALID
    } else {
        ValidationReport::fail(ErrorKind::TruncatedString, letters.len())
    }
}
