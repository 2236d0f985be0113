use std::fs;
use std::io::{self, Read, Write};

use strtree::{RootedOrderedTree, Traversal, TreeString};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or a command/format combination that makes no sense.
    #[error("usage: {0}")]
    Usage(String),
    /// Input data that fails to parse or validate.
    #[error("{0}")]
    Data(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Data(_) | CliError::Io { .. } => 1,
        }
    }

    pub fn data(err: impl std::fmt::Display) -> Self {
        CliError::Data(err.to_string())
    }
}

pub fn read_bytes(path: &str) -> Result<Vec<u8>, CliError> {
    let wrap = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf).map_err(wrap)?;
        Ok(buf)
    } else {
        fs::read(path).map_err(wrap)
    }
}

pub fn read_text(path: &str) -> Result<String, CliError> {
    String::from_utf8(read_bytes(path)?).map_err(|_| CliError::Data(format!("{path}: input is not UTF-8")))
}

pub fn write_bytes(path: &str, bytes: &[u8]) -> Result<(), CliError> {
    let wrap = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut out = io::stdout().lock();
        out.write_all(bytes).and_then(|_| out.flush()).map_err(wrap)
    } else {
        fs::write(path, bytes).map_err(wrap)
    }
}

/// Writes `text` followed by a newline.
pub fn write_line(path: &str, text: &str) -> Result<(), CliError> {
    let mut buf = String::with_capacity(text.len() + 1);
    buf.push_str(text);
    buf.push('\n');
    write_bytes(path, buf.as_bytes())
}

/// Splits an optional `B` / `D` tag line from the letters that follow.
pub fn split_tag(text: &str) -> (Option<Traversal>, &str) {
    let trimmed = text.trim_start();
    let (first, rest) = match trimmed.split_once('\n') {
        Some((first, rest)) => (first.trim(), rest),
        None => (trimmed.trim(), ""),
    };
    match first {
        "B" => (Some(Traversal::Bfs), rest.trim()),
        "D" => (Some(Traversal::Dfs), rest.trim()),
        _ => (None, text.trim()),
    }
}

/// Raw letters of a tree-string file plus the traversal to read them with.
/// Flag beats tag beats the BFS default.
pub fn read_letters(path: &str, flag: Option<Traversal>) -> Result<(String, Traversal), CliError> {
    let text = read_text(path)?;
    let (tag, letters) = split_tag(&text);
    Ok((letters.to_string(), flag.or(tag).unwrap_or_default()))
}

pub fn read_tree_string(path: &str, flag: Option<Traversal>) -> Result<TreeString, CliError> {
    let (letters, traversal) = read_letters(path, flag)?;
    TreeString::parse(&letters, traversal).map_err(|e| CliError::Data(e.0.to_string()))
}

pub fn parse_tree(text: &str, format_is_edges: bool) -> Result<RootedOrderedTree, CliError> {
    if format_is_edges {
        RootedOrderedTree::from_edge_text(text).map_err(CliError::data)
    } else {
        RootedOrderedTree::from_parentheses(text).map_err(CliError::data)
    }
}
