//! Plain-text readers and writers for graphs, rotation systems, colorings,
//! and edge orientations.
//!
//! All formats are line based. Blank lines and lines starting with `#` are
//! ignored. Vertices are 0-based.
//!
//! * Edge list: a header `p <n> <m>` followed by `m` lines `e <u> <v>`.
//! * Rotation system: a header `r <n>` followed by one line
//!   `v <id>: <nb> <nb> ...` per vertex giving its clockwise neighbor order.
//! * Coloring: lines `c <vertex> <color>`.
//! * Orientation: lines `o <u> <v> <head>` with `head` one of the endpoints.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::embedding::RotationSystem;
use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::orient::Orientation;

/// A parse failure, with the 1-based line number where it happened.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected header `{0}`")]
    MissingHeader(&'static str),
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("bad integer field `{0}`")]
    BadInt(String),
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge count mismatch: header says {expected}, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("duplicate rotation entry for vertex {0}")]
    DuplicateRotation(usize),
    #[error("missing rotation entry for vertex {0}")]
    MissingRotation(usize),
    #[error("duplicate neighbor {nb} in rotation of vertex {v}")]
    DuplicateNeighbor { v: usize, nb: usize },
    #[error("rotation is not symmetric: {0} lists {1} but not vice versa")]
    AsymmetricRotation(usize, usize),
    #[error("vertex {0} colored twice")]
    DuplicateColor(usize),
    #[error("orientation head {head} is not an endpoint of {u}-{v}")]
    BadHead { u: usize, v: usize, head: usize },
    #[error("edge {0}-{1} oriented twice")]
    DuplicateOrientation(usize, usize),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Content lines with their original 1-based numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(line: usize, field: &str) -> Result<usize, ParseError> {
    field.parse().map_err(|_| err(line, ParseErrorKind::BadInt(field.to_string())))
}

/// Split a line into whitespace fields and check the tag and arity.
fn fields<'a>(
    line_no: usize,
    line: &'a str,
    tag: &str,
    arity: usize,
) -> Result<Vec<&'a str>, ParseError> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.first() != Some(&tag) || parts.len() != arity + 1 {
        return Err(err(line_no, ParseErrorKind::Malformed(line.to_string())));
    }
    Ok(parts[1..].to_vec())
}

/// Parse an edge-list graph.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) =
        lines.next().ok_or_else(|| err(1, ParseErrorKind::MissingHeader("p <n> <m>")))?;
    let h = fields(hline, header, "p", 2)
        .map_err(|_| err(hline, ParseErrorKind::MissingHeader("p <n> <m>")))?;
    let n = parse_usize(hline, h[0])?;
    let m = parse_usize(hline, h[1])?;

    let mut g = Graph::empty(n);
    for (no, line) in lines {
        let f = fields(no, line, "e", 2)?;
        let u = parse_usize(no, f[0])?;
        let v = parse_usize(no, f[1])?;
        for &x in &[u, v] {
            if x >= n {
                return Err(err(no, ParseErrorKind::VertexOutOfRange { v: x, n }));
            }
        }
        if u == v {
            return Err(err(no, ParseErrorKind::SelfLoop(u)));
        }
        if g.has_edge(u, v) {
            return Err(err(no, ParseErrorKind::DuplicateEdge(u.min(v), u.max(v))));
        }
        g.add_edge(u, v).expect("checked above");
    }
    if g.m() != m {
        return Err(err(1, ParseErrorKind::EdgeCountMismatch { expected: m, found: g.m() }));
    }
    Ok(g)
}

/// Render a graph in edge-list format.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// Parse a rotation system. The neighbor lists must be mutually consistent:
/// they define a simple graph and each list mentions exactly the neighbors.
pub fn parse_rotation(text: &str) -> Result<RotationSystem, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) =
        lines.next().ok_or_else(|| err(1, ParseErrorKind::MissingHeader("r <n>")))?;
    let h = fields(hline, header, "r", 1)
        .map_err(|_| err(hline, ParseErrorKind::MissingHeader("r <n>")))?;
    let n = parse_usize(hline, h[0])?;

    let mut rot: Vec<Option<Vec<usize>>> = vec![None; n];
    for (no, line) in lines {
        // `v <id>: <nb...>` has variable arity; split manually.
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() < 2 || parts[0] != "v" || !parts[1].ends_with(':') {
            return Err(err(no, ParseErrorKind::Malformed(line.to_string())));
        }
        let id = parse_usize(no, parts[1].trim_end_matches(':'))?;
        if id >= n {
            return Err(err(no, ParseErrorKind::VertexOutOfRange { v: id, n }));
        }
        if rot[id].is_some() {
            return Err(err(no, ParseErrorKind::DuplicateRotation(id)));
        }
        let mut nbs = Vec::new();
        let mut seen = BTreeSet::new();
        for f in &parts[2..] {
            let nb = parse_usize(no, f)?;
            if nb >= n {
                return Err(err(no, ParseErrorKind::VertexOutOfRange { v: nb, n }));
            }
            if nb == id {
                return Err(err(no, ParseErrorKind::SelfLoop(id)));
            }
            if !seen.insert(nb) {
                return Err(err(no, ParseErrorKind::DuplicateNeighbor { v: id, nb }));
            }
            nbs.push(nb);
        }
        rot[id] = Some(nbs);
    }

    let mut order = Vec::with_capacity(n);
    for (v, entry) in rot.into_iter().enumerate() {
        order.push(entry.ok_or_else(|| err(1, ParseErrorKind::MissingRotation(v)))?);
    }
    // Symmetry: u appears in rot[v] iff v appears in rot[u].
    for v in 0..n {
        for &u in &order[v] {
            if !order[u].contains(&v) {
                return Err(err(1, ParseErrorKind::AsymmetricRotation(v, u)));
            }
        }
    }
    Ok(RotationSystem::new(order).expect("validated above"))
}

/// Render a rotation system.
pub fn write_rotation(r: &RotationSystem) -> String {
    let mut out = String::new();
    writeln!(out, "r {}", r.n()).unwrap();
    for v in 0..r.n() {
        let nbs: Vec<String> = r.order(v).iter().map(|u| u.to_string()).collect();
        writeln!(out, "v {}: {}", v, nbs.join(" ")).unwrap();
    }
    out
}

/// Parse a (possibly partial) coloring of an `n`-vertex graph.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring, ParseError> {
    let mut coloring = Coloring::uncolored(n);
    for (no, line) in content_lines(text) {
        let f = fields(no, line, "c", 2)?;
        let v = parse_usize(no, f[0])?;
        let color = parse_usize(no, f[1])?;
        if v >= n {
            return Err(err(no, ParseErrorKind::VertexOutOfRange { v, n }));
        }
        if coloring.get(v).is_some() {
            return Err(err(no, ParseErrorKind::DuplicateColor(v)));
        }
        coloring.set(v, color);
    }
    Ok(coloring)
}

/// Render a coloring (assigned vertices only, ascending).
pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for v in 0..c.n() {
        if let Some(color) = c.get(v) {
            writeln!(out, "c {v} {color}").unwrap();
        }
    }
    out
}

/// Parse an edge orientation for `g`. Every line must name an edge of `g`;
/// the orientation may be partial.
pub fn parse_orientation(text: &str, g: &Graph) -> Result<Orientation, ParseError> {
    let mut o = Orientation::new(g.n());
    for (no, line) in content_lines(text) {
        let f = fields(no, line, "o", 3)?;
        let u = parse_usize(no, f[0])?;
        let v = parse_usize(no, f[1])?;
        let head = parse_usize(no, f[2])?;
        for &x in &[u, v] {
            if x >= g.n() {
                return Err(err(no, ParseErrorKind::VertexOutOfRange { v: x, n: g.n() }));
            }
        }
        if !g.has_edge(u, v) {
            return Err(err(no, ParseErrorKind::Malformed(format!("{u}-{v} is not an edge"))));
        }
        if head != u && head != v {
            return Err(err(no, ParseErrorKind::BadHead { u, v, head }));
        }
        if o.head(u, v).is_some() {
            return Err(err(no, ParseErrorKind::DuplicateOrientation(u.min(v), u.max(v))));
        }
        let tail = if head == u { v } else { u };
        o.orient(tail, head);
    }
    Ok(o)
}

/// Render an orientation (oriented edges only, tail-sorted).
pub fn write_orientation(o: &Orientation) -> String {
    let mut out = String::new();
    for (u, v) in o.arcs() {
        writeln!(out, "o {} {} {}", u.min(v), u.max(v), v).unwrap();
    }
    out
}
