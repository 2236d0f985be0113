//! sed-style substitution over tree strings.

use std::fmt;

use regex::Regex;
use thiserror::Error;

use super::StrOpsError;
use crate::codec::TreeString;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteMode {
    /// Replace the leftmost match only.
    First,
    /// Replace every leftmost, non-overlapping match.
    Global,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("expected s/PATTERN/REPLACEMENT/[g], got {0:?}")]
    Syntax(String),
    #[error("unknown flag {0:?}")]
    UnknownFlag(char),
    #[error("pattern uses {ch:?} at {position}; only x, y, X, Y and regex metacharacters are allowed")]
    PatternAlphabet { ch: char, position: usize },
    #[error("invalid pattern: {0}")]
    Pattern(String),
    #[error("replacement uses {ch:?} at {position}; only x, y, X, Y and group references are allowed")]
    ReplacementAlphabet { ch: char, position: usize },
    #[error("replacement references group {group}, pattern has {available}")]
    UnknownGroup { group: usize, available: usize },
}

/// A compiled pattern plus a replacement over the tree alphabet.
///
/// Replacements may reference capture groups as `\1`, `$1` or `${1}`.
#[derive(Clone, Debug)]
pub struct RewriteRule {
    pattern: Regex,
    replacement: String,
    source: (String, String),
}

const PATTERN_META: &str = r"\.^$|?*+()[]{},-:!=<>0123456789";

impl RewriteRule {
    pub fn new(pattern: &str, replacement: &str) -> Result<Self, RuleError> {
        if let Some((position, ch)) = pattern
            .char_indices()
            .find(|&(_, c)| !matches!(c, 'x' | 'y' | 'X' | 'Y') && !PATTERN_META.contains(c))
        {
            return Err(RuleError::PatternAlphabet { ch, position });
        }
        let compiled = Regex::new(pattern).map_err(|e| RuleError::Pattern(e.to_string()))?;
        let replacement_expanded = expand_replacement(replacement, compiled.captures_len())?;
        Ok(RewriteRule {
            pattern: compiled,
            replacement: replacement_expanded,
            source: (pattern.to_string(), replacement.to_string()),
        })
    }

    /// Parses `s/PATTERN/REPLACEMENT/` with an optional `g` flag. Any
    /// character after the `s` serves as the delimiter; `\` escapes it.
    pub fn parse_sed(text: &str) -> Result<(Self, RewriteMode), RuleError> {
        let syntax = || RuleError::Syntax(text.to_string());
        let rest = text.strip_prefix('s').ok_or_else(syntax)?;
        let mut chars = rest.chars();
        let delim = chars.next().ok_or_else(syntax)?;
        if delim.is_alphanumeric() || delim == '\\' || delim.is_whitespace() {
            return Err(syntax());
        }
        let mut parts = vec![String::new()];
        let mut escaped = false;
        for c in chars {
            if escaped {
                if c != delim {
                    parts.last_mut().unwrap().push('\\');
                }
                parts.last_mut().unwrap().push(c);
                escaped = false;
            } else if c == '\\' {
                escaped = true;
            } else if c == delim && parts.len() < 3 {
                parts.push(String::new());
            } else {
                parts.last_mut().unwrap().push(c);
            }
        }
        if escaped || parts.len() != 3 {
            return Err(syntax());
        }
        let mut mode = RewriteMode::First;
        for flag in parts[2].chars() {
            match flag {
                'g' => mode = RewriteMode::Global,
                other => return Err(RuleError::UnknownFlag(other)),
            }
        }
        Ok((Self::new(&parts[0], &parts[1])?, mode))
    }

    pub fn pattern(&self) -> &str {
        &self.source.0
    }

    pub fn replacement(&self) -> &str {
        &self.source.1
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s/{}/{}/", self.source.0, self.source.1)
    }
}

/// Rewrites group references into the `${N}` form the regex crate expects,
/// rejecting anything else that is not a tree letter.
fn expand_replacement(text: &str, captures_len: usize) -> Result<String, RuleError> {
    let mut out = String::with_capacity(text.len());
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (position, c) = chars[i];
        match c {
            'x' | 'y' | 'X' | 'Y' => {
                out.push(c);
                i += 1;
            }
            '\\' | '$' => {
                let braced = c == '$' && chars.get(i + 1).map(|&(_, c)| c) == Some('{');
                let start = i + 1 + usize::from(braced);
                let mut end = start;
                while end < chars.len() && chars[end].1.is_ascii_digit() {
                    end += 1;
                }
                if end == start {
                    return Err(RuleError::ReplacementAlphabet { ch: c, position });
                }
                let digits: String = chars[start..end].iter().map(|&(_, c)| c).collect();
                if braced {
                    if chars.get(end).map(|&(_, c)| c) != Some('}') {
                        return Err(RuleError::ReplacementAlphabet { ch: c, position });
                    }
                    end += 1;
                }
                let group: usize = digits.parse().map_err(|_| RuleError::UnknownGroup {
                    group: usize::MAX,
                    available: captures_len - 1,
                })?;
                if group >= captures_len {
                    return Err(RuleError::UnknownGroup {
                        group,
                        available: captures_len - 1,
                    });
                }
                out.push_str(&format!("${{{group}}}"));
                i = end;
            }
            ch => return Err(RuleError::ReplacementAlphabet { ch, position }),
        }
    }
    Ok(out)
}

/// Applies `rule` to the text of `s` and re-validates under the same
/// traversal. A malformed result is reported and `s` is left as it was.
pub fn rewrite(s: &TreeString, rule: &RewriteRule, mode: RewriteMode) -> Result<TreeString, StrOpsError> {
    let text = s.to_string();
    let limit = match mode {
        RewriteMode::First => 1,
        RewriteMode::Global => 0,
    };
    let replaced = rule.pattern.replacen(&text, limit, rule.replacement.as_str());
    TreeString::parse(&replaced, s.traversal()).map_err(|e| StrOpsError::InvalidResult(e.0))
}
