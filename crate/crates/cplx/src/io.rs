//! Text formats for complexes, collapse certificates, Morse certificates,
//! flip logs, and decision trees.
//!
//! `.cplx`: comment lines start with `#`; one facet per line as
//! whitespace-separated integers. Canonical emission sorts the facets
//! lexicographically. This format is the interchange for every CLI command.

use crate::collapse::{CollapseCertificate, CollapsePair, CollapseTarget};
use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::flips::{FlipKind, FlipLog, FlipMove};
use crate::hierarchy::{ConstructibilityTree, NeTree, VdTree};
use crate::morse::{MorseCertificate, MorseEvent};
use std::fmt::Write as _;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("{0}")]
    Structure(String),
}

fn line_err<T>(line: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::Line {
        line: line + 1,
        msg: msg.into(),
    })
}

fn parse_vertices(s: &str, line: usize) -> Result<Vec<Vertex>, ParseError> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<Vertex>()
                .map_err(|_| ParseError::Line {
                    line: line + 1,
                    msg: format!("not a vertex label: {tok:?}"),
                })
        })
        .collect()
}

fn parse_simplex(s: &str, line: usize) -> Result<Simplex, ParseError> {
    let vs = parse_vertices(s, line)?;
    Simplex::new(vs).map_err(|e| ParseError::Line {
        line: line + 1,
        msg: e.to_string(),
    })
}

/// Parses the `.cplx` text format; an empty file is the void complex.
pub fn parse_cplx(text: &str) -> Result<SimplicialComplex, ParseError> {
    let mut facets: Vec<Vec<Vertex>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let vs = parse_vertices(line, i)?;
        if vs.is_empty() {
            return line_err(i, "empty facet");
        }
        facets.push(vs);
    }
    SimplicialComplex::from_facets(facets).map_err(|e| ParseError::Structure(e.to_string()))
}

/// Canonical `.cplx` emission: facets sorted lexicographically, one per line.
pub fn emit_cplx(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in c.facets() {
        writeln!(out, "{f}").unwrap();
    }
    out
}

/// Parses the `.clps` certificate format: a header line `target point` or
/// `target <facets separated by ','>`, then one `σ -> Σ` pair per line.
pub fn parse_clps(text: &str) -> Result<CollapseCertificate, ParseError> {
    let mut target: Option<CollapseTarget> = None;
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("target") {
            let rest = rest.trim();
            if target.is_some() {
                return line_err(i, "duplicate target header");
            }
            if rest == "point" {
                target = Some(CollapseTarget::Point);
            } else {
                let mut facets = Vec::new();
                for part in rest.split(',') {
                    facets.push(parse_simplex(part, i)?);
                }
                target = Some(CollapseTarget::Subcomplex(
                    SimplicialComplex::from_simplices(facets),
                ));
            }
            continue;
        }
        let Some((lhs, rhs)) = line.split_once("->") else {
            return line_err(i, "expected `free -> coface`");
        };
        pairs.push(CollapsePair {
            free: parse_simplex(lhs, i)?,
            coface: parse_simplex(rhs, i)?,
        });
    }
    let Some(target) = target else {
        return Err(ParseError::Structure(
            "missing `target` header line".into(),
        ));
    };
    Ok(CollapseCertificate { target, pairs })
}

pub fn emit_clps(cert: &CollapseCertificate) -> String {
    let mut out = String::new();
    match &cert.target {
        CollapseTarget::Point => writeln!(out, "target point").unwrap(),
        CollapseTarget::Subcomplex(t) => {
            let facets: Vec<String> = t.facets().iter().map(|f| f.to_string()).collect();
            writeln!(out, "target {}", facets.join(", ")).unwrap();
        }
    }
    for p in &cert.pairs {
        writeln!(out, "{p}").unwrap();
    }
    out
}

/// Parses the `.morse` certificate format: `σ -> Σ` collapse lines mixed with
/// `critical σ` lines, in replay order.
pub fn parse_morse(text: &str) -> Result<MorseCertificate, ParseError> {
    let mut events = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("critical") {
            events.push(MorseEvent::Critical(parse_simplex(rest, i)?));
            continue;
        }
        let Some((lhs, rhs)) = line.split_once("->") else {
            return line_err(i, "expected `free -> coface` or `critical σ`");
        };
        events.push(MorseEvent::Collapse(CollapsePair {
            free: parse_simplex(lhs, i)?,
            coface: parse_simplex(rhs, i)?,
        }));
    }
    Ok(MorseCertificate { events })
}

pub fn emit_morse(cert: &MorseCertificate) -> String {
    let mut out = String::new();
    for ev in &cert.events {
        match ev {
            MorseEvent::Collapse(p) => writeln!(out, "{p}").unwrap(),
            MorseEvent::Critical(s) => writeln!(out, "critical {s}").unwrap(),
        }
    }
    out
}

/// Parses the `.flp` log format: header lines `initial <hash>` and
/// `final <hash>`, then one move per line: `KIND pivot-vertices [new-label]`.
pub fn parse_flp(text: &str) -> Result<FlipLog, ParseError> {
    let mut initial = None;
    let mut fin = None;
    let mut moves = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("initial ") {
            initial = Some(rest.trim().to_string());
            continue;
        }
        if let Some(rest) = line.strip_prefix("final ") {
            fin = Some(rest.trim().to_string());
            continue;
        }
        let mut parts = line.split_whitespace();
        let kind: FlipKind = parts
            .next()
            .unwrap()
            .parse()
            .map_err(|e: String| ParseError::Line { line: i + 1, msg: e })?;
        let nums: Vec<Vertex> = parse_vertices(&parts.collect::<Vec<_>>().join(" "), i)?;
        let (pivot_len, has_new) = match kind {
            FlipKind::OneFour => (4, true),
            FlipKind::TwoThree => (3, false),
            FlipKind::ThreeTwo => (2, false),
            FlipKind::FourOne => (1, false),
        };
        if nums.len() != pivot_len + usize::from(has_new) {
            return line_err(i, format!("expected {pivot_len} pivot vertices", ));
        }
        let pivot = Simplex::new(nums[..pivot_len].to_vec())
            .map_err(|e| ParseError::Line { line: i + 1, msg: e.to_string() })?;
        moves.push(FlipMove {
            kind,
            pivot,
            new_vertex: has_new.then(|| nums[pivot_len]),
        });
    }
    match (initial, fin) {
        (Some(initial_hash), Some(final_hash)) => Ok(FlipLog {
            initial_hash,
            final_hash,
            moves,
        }),
        _ => Err(ParseError::Structure(
            "missing `initial`/`final` hash header".into(),
        )),
    }
}

pub fn emit_flp(log: &FlipLog) -> String {
    let mut out = String::new();
    writeln!(out, "initial {}", log.initial_hash).unwrap();
    writeln!(out, "final {}", log.final_hash).unwrap();
    for m in &log.moves {
        writeln!(out, "{m}").unwrap();
    }
    out
}

/// Decision trees in the `.tree` format: a header line `ne`, `vd`, or
/// `constructible`, then an indented rendering of the recursive structure
/// (two spaces per level).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeFile {
    Ne(NeTree),
    Vd(VdTree),
    Constructible(ConstructibilityTree),
}

pub fn emit_tree(tree: &TreeFile) -> String {
    let mut out = String::new();
    match tree {
        TreeFile::Ne(t) => {
            writeln!(out, "ne").unwrap();
            emit_ne(t, 0, &mut out);
        }
        TreeFile::Vd(t) => {
            writeln!(out, "vd").unwrap();
            emit_vd(t, 0, &mut out);
        }
        TreeFile::Constructible(t) => {
            writeln!(out, "constructible").unwrap();
            emit_con(t, 0, &mut out);
        }
    }
    out
}

fn pad(depth: usize, out: &mut String) {
    for _ in 0..depth {
        out.push_str("  ");
    }
}

fn emit_ne(t: &NeTree, depth: usize, out: &mut String) {
    pad(depth, out);
    match t {
        NeTree::Simplex => out.push_str("simplex\n"),
        NeTree::Node { vertex, link, del } => {
            writeln!(out, "vertex {vertex}").unwrap();
            pad(depth + 1, out);
            out.push_str("link:\n");
            emit_ne(link, depth + 2, out);
            pad(depth + 1, out);
            out.push_str("del:\n");
            emit_ne(del, depth + 2, out);
        }
    }
}

fn emit_vd(t: &VdTree, depth: usize, out: &mut String) {
    pad(depth, out);
    match t {
        VdTree::Simplex => out.push_str("simplex\n"),
        VdTree::Points => out.push_str("points\n"),
        VdTree::Node { vertex, link, del } => {
            writeln!(out, "vertex {vertex}").unwrap();
            pad(depth + 1, out);
            out.push_str("link:\n");
            emit_vd(link, depth + 2, out);
            pad(depth + 1, out);
            out.push_str("del:\n");
            emit_vd(del, depth + 2, out);
        }
    }
}

fn emit_con(t: &ConstructibilityTree, depth: usize, out: &mut String) {
    pad(depth, out);
    match t {
        ConstructibilityTree::Simplex => out.push_str("simplex\n"),
        ConstructibilityTree::Points => out.push_str("points\n"),
        ConstructibilityTree::Split {
            first,
            left,
            right,
            intersection,
        } => {
            let facets: Vec<String> = first.iter().map(|f| f.to_string()).collect();
            writeln!(out, "split {}", facets.join(", ")).unwrap();
            pad(depth + 1, out);
            out.push_str("first:\n");
            emit_con(left, depth + 2, out);
            pad(depth + 1, out);
            out.push_str("second:\n");
            emit_con(right, depth + 2, out);
            pad(depth + 1, out);
            out.push_str("intersection:\n");
            emit_con(intersection, depth + 2, out);
        }
    }
}

struct TreeLines<'a> {
    lines: Vec<(usize, &'a str, usize)>, // (indent, content, line number)
    pos: usize,
}

impl<'a> TreeLines<'a> {
    fn new(text: &'a str, skip_header: bool) -> Self {
        let mut lines = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
                continue;
            }
            if skip_header && lines.is_empty() && i == 0 {
                // header consumed by caller
            }
            let indent = raw.len() - raw.trim_start().len();
            lines.push((indent / 2, raw.trim(), i));
        }
        TreeLines { lines, pos: 0 }
    }

    fn peek(&self) -> Option<(usize, &'a str, usize)> {
        self.lines.get(self.pos).copied()
    }

    fn next(&mut self) -> Option<(usize, &'a str, usize)> {
        let r = self.peek();
        if r.is_some() {
            self.pos += 1;
        }
        r
    }
}

pub fn parse_tree(text: &str) -> Result<TreeFile, ParseError> {
    let mut tl = TreeLines::new(text, false);
    let Some((_, header, hline)) = tl.next() else {
        return Err(ParseError::Structure("empty tree file".into()));
    };
    match header {
        "ne" => Ok(TreeFile::Ne(parse_ne(&mut tl, 0)?)),
        "vd" => Ok(TreeFile::Vd(parse_vd(&mut tl, 0)?)),
        "constructible" => Ok(TreeFile::Constructible(parse_con(&mut tl, 0)?)),
        other => line_err(hline, format!("unknown tree kind {other:?}")),
    }
}

fn expect_line<'a>(
    tl: &mut TreeLines<'a>,
    depth: usize,
) -> Result<(&'a str, usize), ParseError> {
    match tl.next() {
        Some((d, s, i)) if d == depth => Ok((s, i)),
        Some((d, s, i)) => line_err(
            i,
            format!("expected indentation {depth}, found {d} at {s:?}"),
        ),
        None => Err(ParseError::Structure("unexpected end of tree".into())),
    }
}

fn parse_ne(tl: &mut TreeLines, depth: usize) -> Result<NeTree, ParseError> {
    let (s, i) = expect_line(tl, depth)?;
    if s == "simplex" {
        return Ok(NeTree::Simplex);
    }
    let Some(v) = s.strip_prefix("vertex ") else {
        return line_err(i, format!("expected `simplex` or `vertex v`, got {s:?}"));
    };
    let vertex: Vertex = v
        .trim()
        .parse()
        .map_err(|_| ParseError::Line { line: i + 1, msg: "bad vertex".into() })?;
    let (m, j) = expect_line(tl, depth + 1)?;
    if m != "link:" {
        return line_err(j, "expected `link:`");
    }
    let link = parse_ne(tl, depth + 2)?;
    let (m, j) = expect_line(tl, depth + 1)?;
    if m != "del:" {
        return line_err(j, "expected `del:`");
    }
    let del = parse_ne(tl, depth + 2)?;
    Ok(NeTree::Node {
        vertex,
        link: Arc::new(link),
        del: Arc::new(del),
    })
}

fn parse_vd(tl: &mut TreeLines, depth: usize) -> Result<VdTree, ParseError> {
    let (s, i) = expect_line(tl, depth)?;
    match s {
        "simplex" => return Ok(VdTree::Simplex),
        "points" => return Ok(VdTree::Points),
        _ => {}
    }
    let Some(v) = s.strip_prefix("vertex ") else {
        return line_err(i, format!("expected a leaf or `vertex v`, got {s:?}"));
    };
    let vertex: Vertex = v
        .trim()
        .parse()
        .map_err(|_| ParseError::Line { line: i + 1, msg: "bad vertex".into() })?;
    let (m, j) = expect_line(tl, depth + 1)?;
    if m != "link:" {
        return line_err(j, "expected `link:`");
    }
    let link = parse_vd(tl, depth + 2)?;
    let (m, j) = expect_line(tl, depth + 1)?;
    if m != "del:" {
        return line_err(j, "expected `del:`");
    }
    let del = parse_vd(tl, depth + 2)?;
    Ok(VdTree::Node {
        vertex,
        link: Arc::new(link),
        del: Arc::new(del),
    })
}

fn parse_con(tl: &mut TreeLines, depth: usize) -> Result<ConstructibilityTree, ParseError> {
    let (s, i) = expect_line(tl, depth)?;
    match s {
        "simplex" => return Ok(ConstructibilityTree::Simplex),
        "points" => return Ok(ConstructibilityTree::Points),
        _ => {}
    }
    let Some(rest) = s.strip_prefix("split ") else {
        return line_err(i, format!("expected a leaf or `split ...`, got {s:?}"));
    };
    let mut first = Vec::new();
    for part in rest.split(',') {
        first.push(parse_simplex(part, i)?);
    }
    let (m, j) = expect_line(tl, depth + 1)?;
    if m != "first:" {
        return line_err(j, "expected `first:`");
    }
    let left = parse_con(tl, depth + 2)?;
    let (m, j) = expect_line(tl, depth + 1)?;
    if m != "second:" {
        return line_err(j, "expected `second:`");
    }
    let right = parse_con(tl, depth + 2)?;
    let (m, j) = expect_line(tl, depth + 1)?;
    if m != "intersection:" {
        return line_err(j, "expected `intersection:`");
    }
    let intersection = parse_con(tl, depth + 2)?;
    Ok(ConstructibilityTree::Split {
        first,
        left: Box::new(left),
        right: Box::new(right),
        intersection: Box::new(intersection),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cplx_round_trip() {
        let text = "# a comment\n2 3 4 7\n2 3 4 10\n";
        let c = parse_cplx(text).unwrap();
        assert_eq!(c.facet_count(), 2);
        let emitted = emit_cplx(&c);
        assert_eq!(parse_cplx(&emitted).unwrap(), c);
        assert_eq!(emit_cplx(&parse_cplx(&emitted).unwrap()), emitted);
    }

    #[test]
    fn empty_file_is_void() {
        assert!(parse_cplx("").unwrap().is_void());
        assert!(parse_cplx("# nothing\n").unwrap().is_void());
    }

    #[test]
    fn clps_round_trip() {
        let text = "target point\n1 2 -> 1 2 3\n";
        let cert = parse_clps(text).unwrap();
        assert_eq!(cert.pairs.len(), 1);
        assert_eq!(emit_clps(&cert), text);
        let sub = "target 1 9 15, 1 14 15\n3 -> 3 4\n";
        let cert = parse_clps(sub).unwrap();
        assert!(matches!(cert.target, CollapseTarget::Subcomplex(_)));
        assert_eq!(emit_clps(&cert), sub);
    }

    #[test]
    fn flp_round_trip() {
        let text = "initial aaaa\nfinal bbbb\n2-3 1 2 3\n1-4 1 2 3 4 9\n4-1 7\n3-2 2 5\n";
        let log = parse_flp(text).unwrap();
        assert_eq!(log.moves.len(), 4);
        assert_eq!(emit_flp(&log), text);
    }

    #[test]
    fn ne_tree_round_trip() {
        let tree = TreeFile::Ne(NeTree::Node {
            vertex: 3,
            link: Arc::new(NeTree::Simplex),
            del: Arc::new(NeTree::Node {
                vertex: 5,
                link: Arc::new(NeTree::Simplex),
                del: Arc::new(NeTree::Simplex),
            }),
        });
        let text = emit_tree(&tree);
        assert_eq!(parse_tree(&text).unwrap(), tree);
    }

    #[test]
    fn constructibility_tree_round_trip() {
        let tree = TreeFile::Constructible(ConstructibilityTree::Split {
            first: vec![Simplex::new(vec![1, 2, 3]).unwrap()],
            left: Box::new(ConstructibilityTree::Simplex),
            right: Box::new(ConstructibilityTree::Simplex),
            intersection: Box::new(ConstructibilityTree::Points),
        });
        let text = emit_tree(&tree);
        assert_eq!(parse_tree(&text).unwrap(), tree);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_cplx("1 2\nx y\n").unwrap_err();
        assert!(matches!(err, ParseError::Line { line: 2, .. }));
    }
}
