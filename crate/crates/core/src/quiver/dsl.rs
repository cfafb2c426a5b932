//! Parser for the line-oriented `.quiver` format:
//!
//! ```text
//! # comment
//! quiver kronecker
//! vertex 1 2
//! arrow a: 1 -> 2
//! arrow b: 1 -> 2
//! ```
//!
//! The `quiver` header comes first. Vertices must be declared before an
//! arrow mentions them. Identifiers are ASCII alphanumeric.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use super::{is_identifier, Quiver};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    MissingHeader,
    DuplicateHeader,
    DuplicateVertex(String),
    DuplicateLabel(String),
    UnknownVertex(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ParseErrorKind::MissingHeader => write!(f, "expected `quiver <name>` header"),
            ParseErrorKind::DuplicateHeader => write!(f, "second `quiver` header"),
            ParseErrorKind::DuplicateVertex(v) => write!(f, "vertex `{v}` declared twice"),
            ParseErrorKind::DuplicateLabel(l) => write!(f, "arrow label `{l}` used twice"),
            ParseErrorKind::UnknownVertex(v) => write!(f, "unknown vertex `{v}`"),
        }
    }
}

/// A parse failure at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, PartialEq, Eq)]
enum Tok<'a> {
    Ident(&'a str),
    Colon,
    Arrow,
}

struct Lexed<'a> {
    tok: Tok<'a>,
    col: usize,
}

fn lex(line: &str, lineno: usize) -> Result<Vec<Lexed<'_>>, ParseError> {
    let code = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut out = Vec::new();
    let bytes = code.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let col = code[..i].chars().count() + 1;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c == b':' {
            out.push(Lexed {
                tok: Tok::Colon,
                col,
            });
            i += 1;
        } else if c == b'-' && bytes.get(i + 1) == Some(&b'>') {
            out.push(Lexed {
                tok: Tok::Arrow,
                col,
            });
            i += 2;
        } else if c.is_ascii_alphanumeric() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Lexed {
                tok: Tok::Ident(&code[start..i]),
                col,
            });
        } else {
            let ch = code[i..]
                .chars()
                .next()
                .expect("index is on a char boundary");
            return Err(ParseError {
                line: lineno,
                column: col,
                kind: ParseErrorKind::Syntax(format!("unexpected character {ch:?}")),
            });
        }
    }
    Ok(out)
}

pub fn parse_quiver(text: &str) -> Result<Quiver, ParseError> {
    let mut name: Option<String> = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut vertex_set: HashSet<String> = HashSet::new();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut labels: HashSet<String> = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let toks = lex(raw, lineno)?;
        let Some(first) = toks.first() else { continue };
        let err = |col: usize, kind: ParseErrorKind| ParseError {
            line: lineno,
            column: col,
            kind,
        };
        let end_col = raw
            .split('#')
            .next()
            .unwrap_or("")
            .trim_end()
            .chars()
            .count()
            + 1;
        let keyword = match first.tok {
            Tok::Ident(k) => k,
            _ => {
                return Err(err(
                    first.col,
                    ParseErrorKind::Syntax("expected a keyword".into()),
                ))
            }
        };
        if keyword != "quiver" && name.is_none() {
            return Err(err(first.col, ParseErrorKind::MissingHeader));
        }
        match keyword {
            "quiver" => {
                if name.is_some() {
                    return Err(err(first.col, ParseErrorKind::DuplicateHeader));
                }
                match toks.as_slice() {
                    [_, Lexed {
                        tok: Tok::Ident(n), ..
                    }] => name = Some(n.to_string()),
                    [_] => {
                        return Err(err(
                            end_col,
                            ParseErrorKind::Syntax("expected a quiver name".into()),
                        ))
                    }
                    [_, second, ..] if !matches!(second.tok, Tok::Ident(_)) => {
                        return Err(err(
                            second.col,
                            ParseErrorKind::Syntax("expected a quiver name".into()),
                        ))
                    }
                    [_, _, extra, ..] => {
                        return Err(err(
                            extra.col,
                            ParseErrorKind::Syntax("unexpected token after quiver name".into()),
                        ))
                    }
                    _ => unreachable!("slice patterns cover every length"),
                }
            }
            "vertex" => {
                if toks.len() == 1 {
                    return Err(err(
                        end_col,
                        ParseErrorKind::Syntax("expected at least one vertex id".into()),
                    ));
                }
                for t in &toks[1..] {
                    let Tok::Ident(v) = t.tok else {
                        return Err(err(
                            t.col,
                            ParseErrorKind::Syntax("expected a vertex id".into()),
                        ));
                    };
                    if !vertex_set.insert(v.to_string()) {
                        return Err(err(t.col, ParseErrorKind::DuplicateVertex(v.to_string())));
                    }
                    vertices.push(v.to_string());
                }
            }
            "arrow" => {
                // arrow <label> : <src> -> <tgt>
                let expect = |i: usize, what: &str| -> ParseError {
                    let col = toks.get(i).map(|t| t.col).unwrap_or(end_col);
                    err(col, ParseErrorKind::Syntax(format!("expected {what}")))
                };
                let label = match toks.get(1).map(|t| &t.tok) {
                    Some(Tok::Ident(l)) => *l,
                    _ => return Err(expect(1, "an arrow label")),
                };
                if !matches!(toks.get(2).map(|t| &t.tok), Some(Tok::Colon)) {
                    return Err(expect(2, "`:` after the arrow label"));
                }
                let src = match toks.get(3).map(|t| &t.tok) {
                    Some(Tok::Ident(s)) => *s,
                    _ => return Err(expect(3, "a source vertex")),
                };
                if !matches!(toks.get(4).map(|t| &t.tok), Some(Tok::Arrow)) {
                    return Err(expect(4, "`->`"));
                }
                let tgt = match toks.get(5).map(|t| &t.tok) {
                    Some(Tok::Ident(t)) => *t,
                    _ => return Err(expect(5, "a target vertex")),
                };
                if toks.len() > 6 {
                    return Err(err(
                        toks[6].col,
                        ParseErrorKind::Syntax("unexpected token after arrow".into()),
                    ));
                }
                if !labels.insert(label.to_string()) {
                    return Err(err(
                        toks[1].col,
                        ParseErrorKind::DuplicateLabel(label.to_string()),
                    ));
                }
                for (tok_idx, v) in [(3, src), (5, tgt)] {
                    if !vertex_set.contains(v) {
                        return Err(err(
                            toks[tok_idx].col,
                            ParseErrorKind::UnknownVertex(v.to_string()),
                        ));
                    }
                }
                arrows.push((label.to_string(), src.to_string(), tgt.to_string()));
            }
            other => {
                return Err(err(
                    first.col,
                    ParseErrorKind::Syntax(format!("unknown keyword `{other}`")),
                ));
            }
        }
    }

    let Some(name) = name else {
        return Err(ParseError {
            line: 1,
            column: 1,
            kind: ParseErrorKind::MissingHeader,
        });
    };
    debug_assert!(is_identifier(&name));
    Ok(Quiver::from_parts(name, vertices, arrows).expect("parser validated every identifier"))
}
