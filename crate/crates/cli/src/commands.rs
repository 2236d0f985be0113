use strtree::strops::{count_canonical_with_limit, StrOpsError};
use strtree::{
    canonicalize, edit_distance, encode, enumerate_valid, find_subtrees, graft, pack, rewrite, unpack_bytes, validate,
    RewriteMode, RewriteRule, RootedOrderedTree, Traversal, TreeString,
};

use crate::io::{parse_tree, read_bytes, read_letters, read_text, read_tree_string, write_bytes, write_line, CliError};
use crate::{Command, Format};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn strops_error(err: StrOpsError) -> CliError {
    match err {
        StrOpsError::TooLarge { .. } | StrOpsError::ZeroSize => CliError::Usage(err.to_string()),
        StrOpsError::InvalidResult(report) => CliError::Data(report.to_string()),
        other => CliError::Data(other.to_string()),
    }
}

fn require_dfs(command: &str, s: &TreeString) -> Result<(), CliError> {
    if s.traversal() == Traversal::Dfs {
        Ok(())
    } else {
        Err(usage(format!(
            "{command} works on preorder strings only; pass --traversal dfs or tag the input with a `D` line"
        )))
    }
}

fn read_tree(path: &str, format: Format, traversal: Option<Traversal>) -> Result<RootedOrderedTree, CliError> {
    match format {
        Format::Paren | Format::Edges => parse_tree(&read_text(path)?, format == Format::Edges),
        Format::String => Ok(read_tree_string(path, traversal)?.decode()),
        Format::Packed => Ok(unpack_bytes(&read_bytes(path)?).map_err(CliError::data)?.decode()),
    }
}

fn write_tree(path: &str, tree: &RootedOrderedTree, format: Format, traversal: Traversal) -> Result<(), CliError> {
    match format {
        Format::Paren => write_line(path, &tree.to_parentheses()),
        Format::Edges => write_bytes(path, tree.to_edge_text().as_bytes()),
        Format::String => write_line(path, &encode(tree, traversal).to_string()),
        Format::Packed => write_bytes(path, &pack(&encode(tree, traversal)).to_bytes()),
    }
}

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Encode {
            io,
            in_format,
            out_format,
        } => {
            if !matches!(in_format, Format::Paren | Format::Edges) {
                return Err(usage("encode reads --in-format paren or edges"));
            }
            if !matches!(out_format, Format::String | Format::Packed) {
                return Err(usage("encode writes --out-format string or packed"));
            }
            let tree = read_tree(&io.input, in_format, None)?;
            let traversal = io.traversal.map(Into::into).unwrap_or_default();
            write_tree(&io.output, &tree, out_format, traversal)
        }
        Command::Decode {
            io,
            in_format,
            out_format,
        } => {
            if !matches!(in_format, Format::String | Format::Packed) {
                return Err(usage("decode reads --in-format string or packed"));
            }
            if !matches!(out_format, Format::Paren | Format::Edges) {
                return Err(usage("decode writes --out-format paren or edges"));
            }
            let tree = read_tree(&io.input, in_format, io.traversal.map(Into::into))?;
            write_tree(&io.output, &tree, out_format, Traversal::Bfs)
        }
        Command::Validate { io } => {
            let (letters, traversal) = read_letters(&io.input, io.traversal.map(Into::into))?;
            let report = validate(&letters, traversal);
            if report.is_valid() {
                write_line(&io.output, "valid")
            } else {
                Err(CliError::Data(report.to_string()))
            }
        }
        Command::Canon { io } => {
            let s = read_tree_string(&io.input, io.traversal.map(Into::into))?;
            write_line(&io.output, &canonicalize(&s).to_string())
        }
        Command::Dist { a, b, traversal } => {
            let flag = traversal.map(Into::into);
            let a = read_tree_string(&a, flag)?;
            let b = read_tree_string(&b, flag)?;
            let d = edit_distance(&a, &b).map_err(strops_error)?;
            write_line("-", &d.to_string())
        }
        Command::Rewrite { io, rule, global } => {
            let (rule, mut mode) = RewriteRule::parse_sed(&rule).map_err(|e| usage(e.to_string()))?;
            if global {
                mode = RewriteMode::Global;
            }
            let s = read_tree_string(&io.input, io.traversal.map(Into::into))?;
            let out = rewrite(&s, &rule, mode).map_err(strops_error)?;
            write_line(&io.output, &out.to_string())
        }
        Command::Search { io, needle } => {
            let hay = read_tree_string(&io.input, io.traversal.map(Into::into))?;
            require_dfs("search", &hay)?;
            let needle =
                TreeString::parse(needle.trim(), Traversal::Dfs).map_err(|e| CliError::Data(e.0.to_string()))?;
            let hits = find_subtrees(&hay, &needle).map_err(strops_error)?;
            let text: String = hits.iter().map(|p| format!("{p}\n")).collect();
            write_bytes(&io.output, text.as_bytes())
        }
        Command::Graft { io, position, scion } => {
            let host = read_tree_string(&io.input, io.traversal.map(Into::into))?;
            require_dfs("graft", &host)?;
            let scion = TreeString::parse(scion.trim(), Traversal::Dfs).map_err(|e| CliError::Data(e.0.to_string()))?;
            let out = graft(&host, position, &scion).map_err(strops_error)?;
            write_line(&io.output, &out.to_string())
        }
        Command::Pack { io } => {
            let s = read_tree_string(&io.input, io.traversal.map(Into::into))?;
            write_bytes(&io.output, &pack(&s).to_bytes())
        }
        Command::Unpack { io } => {
            let s = unpack_bytes(&read_bytes(&io.input)?).map_err(CliError::data)?;
            write_line(&io.output, &s.to_string())
        }
        Command::Gen {
            n,
            seed,
            output,
            out_format,
            traversal,
        } => {
            let tree = RootedOrderedTree::random(n, seed).map_err(|e| usage(e.to_string()))?;
            write_tree(
                &output,
                &tree,
                out_format,
                traversal.map(Into::into).unwrap_or_default(),
            )
        }
        Command::Enum { n, output, traversal } => {
            let all = enumerate_valid(n, traversal.map(Into::into).unwrap_or_default()).map_err(strops_error)?;
            let text: String = all.iter().map(|s| format!("{s}\n")).collect();
            write_bytes(&output, text.as_bytes())
        }
        Command::CountCanon { n, max_n } => {
            let count = count_canonical_with_limit(n, max_n).map_err(strops_error)?;
            write_line("-", &count.to_string())
        }
        Command::Stats { io, in_format } => {
            let tree = read_tree(&io.input, in_format, io.traversal.map(Into::into))?;
            let line = format!(
                "nodes={} depth={} leaves={}",
                tree.node_count(),
                tree.depth(),
                tree.leaf_count()
            );
            write_line(&io.output, &line)
        }
    }
}
