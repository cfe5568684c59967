//! Arc-list text format and DOT export.
//!
//! Arc lists hold one `<tail> <head>` pair per line. Blank lines and lines
//! starting with `#` are skipped, vertices are declared by first appearance,
//! and a `!multigraph` line allows parallel arcs.

use std::fmt::Write as _;

use super::{ArcId, Digraph, DigraphBuilder};
use crate::error::{Error, Result};

pub const MULTIGRAPH_HEADER: &str = "!multigraph";

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut builder = DigraphBuilder::simple();
    let mut arc_lines = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.starts_with('!') {
            if line == MULTIGRAPH_HEADER {
                builder.set_multigraph(true);
                continue;
            }
            return Err(Error::Parse {
                line: line_no,
                message: format!("unknown directive {line:?}"),
            });
        }
        let mut tokens = line.split_whitespace();
        let (Some(tail), Some(head), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected \"<tail> <head>\", got {line:?}"),
            });
        };
        if tail.starts_with('#') || head.starts_with('#') {
            return Err(Error::Parse {
                line: line_no,
                message: "vertex labels may not start with '#'".to_string(),
            });
        }
        if tail == head {
            return Err(Error::Validation(format!("line {line_no}: loop arc at {tail:?}")));
        }
        builder.arc(tail, head);
        arc_lines.push(line_no);
    }

    builder.build().map_err(|err| match err {
        // point at the offending line for parallel arcs in simple mode
        Error::Validation(msg) => {
            let line = first_duplicate_line(text);
            match line {
                Some(line) => Error::Validation(format!("line {line}: {msg}")),
                None => Error::Validation(msg),
            }
        }
        other => other,
    })
}

fn first_duplicate_line(text: &str) -> Option<usize> {
    let mut seen = std::collections::HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('!') {
            continue;
        }
        let key: Vec<&str> = line.split_whitespace().collect();
        if !seen.insert(key) {
            return Some(idx + 1);
        }
    }
    None
}

/// Serializes in arc-list format, optionally preceded by `#` comment lines.
/// Unlabeled vertices are written as their index. Isolated vertices have no
/// line to appear on and are dropped.
pub fn to_arc_list(d: &Digraph, comments: &[&str]) -> String {
    let name = |v| d.label(v).map_or_else(|| v.0.to_string(), str::to_string);
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    if !d.is_simple() {
        out.push_str(MULTIGRAPH_HEADER);
        out.push('\n');
    }
    for arc in d.arcs() {
        let _ = writeln!(out, "{} {}", name(arc.tail), name(arc.head));
    }
    out
}

pub fn to_dot(d: &Digraph, name: &str) -> String {
    to_dot_highlighted(d, name, &[], &[])
}

/// DOT with one edge statement per arc instance. Arcs in `out_arcs` are
/// drawn red and arcs in `in_arcs` green.
pub fn to_dot_highlighted(d: &Digraph, name: &str, out_arcs: &[ArcId], in_arcs: &[ArcId]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", dot_id(name));
    for v in d.vertices() {
        let _ = writeln!(out, "  {} [label={}];", v.0, dot_id(&d.name(v)));
    }
    for arc in d.arcs() {
        let style = if out_arcs.contains(&arc.id) {
            ", color=red, class=\"out\""
        } else if in_arcs.contains(&arc.id) {
            ", color=green, class=\"in\""
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  {} -> {} [id=\"a{}\"{}];",
            arc.tail.0, arc.head.0, arc.id.0, style
        );
    }
    out.push_str("}\n");
    out
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
