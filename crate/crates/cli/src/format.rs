//! Graph files.
//!
//! ```text
//! plabic 2
//! VERTICES
//! 0 black boundary 1
//! 1 white boundary 2
//! 2 white interior
//! 3 black interior
//! EDGES
//! 0 0 2
//! 1 2 3 3/2
//! 2 3 1
//! ROTATIONS
//! 0 0
//! 1 2
//! 2 1 0
//! 3 2 1
//! SYMMETRY
//! 0 1
//! 2 3
//! ```
//!
//! Rotations list edge ids clockwise. Edge weights are optional but must be
//! given for all edges or none. `SYMMETRY` lists each mirrored pair once and
//! may be omitted. Blank lines and `#` comments are ignored.

use std::fmt::Write;

use positroid::rational::{self, Rational};
use positroid::{Color, EdgeId, Error, PlabicGraph, Result, VertexId, WeightedPlabicGraph};
use positroid::graph::Vertex;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Vertices,
    Edges,
    Rotations,
    Symmetry,
}

fn parse_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

fn number(line: usize, word: &str) -> Result<usize> {
    word.parse().map_err(|_| parse_err(line, format!("expected a number, found `{word}`")))
}

/// A graph with its weights when the file gives them.
pub struct GraphFile {
    pub graph: PlabicGraph,
    pub weights: Option<Vec<Rational>>,
}

impl GraphFile {
    pub fn weighted(&self) -> Result<WeightedPlabicGraph> {
        match &self.weights {
            Some(w) => WeightedPlabicGraph::new(self.graph.clone(), w.clone()),
            None => Ok(WeightedPlabicGraph::unit(self.graph.clone())),
        }
    }
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["plabic", n] => number(first, n)?,
        _ => return Err(parse_err(first, "expected `plabic <n>`")),
    };
    let mut section = None;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut weights: Vec<Option<Rational>> = Vec::new();
    let mut rotation: Vec<Option<Vec<EdgeId>>> = Vec::new();
    let mut pairs = Vec::new();
    for (ln, line) in lines {
        match line {
            "VERTICES" => section = Some(Section::Vertices),
            "EDGES" => section = Some(Section::Edges),
            "ROTATIONS" => section = Some(Section::Rotations),
            "SYMMETRY" => section = Some(Section::Symmetry),
            _ => {
                let words: Vec<&str> = line.split_whitespace().collect();
                match section {
                    None => return Err(parse_err(ln, "record before any section header")),
                    Some(Section::Vertices) => {
                        let id = number(ln, words[0])?;
                        if id != vertices.len() {
                            return Err(parse_err(ln, format!("vertex ids must be consecutive from 0, found {id}")));
                        }
                        let color = match words.get(1) {
                            Some(&"black") => Color::Black,
                            Some(&"white") => Color::White,
                            _ => return Err(parse_err(ln, "colour must be `black` or `white`")),
                        };
                        let vertex = match words[2..] {
                            ["interior"] => Vertex::interior(color),
                            ["boundary", label] => Vertex::boundary(color, number(ln, label)?),
                            _ => return Err(parse_err(ln, "expected `interior` or `boundary <label>`")),
                        };
                        vertices.push(vertex);
                    }
                    Some(Section::Edges) => {
                        let (id, a, b, w) = match words[..] {
                            [id, a, b] => (id, a, b, None),
                            [id, a, b, w] => (id, a, b, Some(rational::parse(w).map_err(|e| parse_err(ln, e))?)),
                            _ => return Err(parse_err(ln, "expected `<id> <u> <v> [weight]`")),
                        };
                        if number(ln, id)? != edges.len() {
                            return Err(parse_err(ln, "edge ids must be consecutive from 0"));
                        }
                        edges.push((VertexId(number(ln, a)?), VertexId(number(ln, b)?)));
                        weights.push(w);
                    }
                    Some(Section::Rotations) => {
                        let v = number(ln, words[0])?;
                        let list = words[1..].iter().map(|w| number(ln, w).map(EdgeId)).collect::<Result<Vec<_>>>()?;
                        if v >= rotation.len() {
                            rotation.resize(v + 1, None);
                        }
                        if rotation[v].replace(list).is_some() {
                            return Err(parse_err(ln, format!("second rotation for vertex {v}")));
                        }
                    }
                    Some(Section::Symmetry) => match words[..] {
                        [a, b] => pairs.push((number(ln, a)?, number(ln, b)?)),
                        _ => return Err(parse_err(ln, "expected `<u> <v>`")),
                    },
                }
            }
        }
    }
    rotation.resize(vertices.len(), None);
    let rotation = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| Error::Parse(format!("no rotation for vertex {v}"))))
        .collect::<Result<Vec<_>>>()?;
    let symmetry = if pairs.is_empty() {
        None
    } else {
        let mut r: Vec<Option<VertexId>> = vec![None; vertices.len()];
        for (a, b) in pairs {
            if a >= r.len() || b >= r.len() || r[a].is_some() || r[b].is_some() {
                return Err(Error::Parse(format!("bad symmetry pair {a} {b}")));
            }
            r[a] = Some(VertexId(b));
            r[b] = Some(VertexId(a));
        }
        Some(
            r.into_iter()
                .enumerate()
                .map(|(v, x)| x.ok_or_else(|| Error::Parse(format!("vertex {v} missing from SYMMETRY"))))
                .collect::<Result<Vec<_>>>()?,
        )
    };
    let weights = match weights.iter().filter(|w| w.is_some()).count() {
        0 => None,
        c if c == weights.len() => Some(weights.into_iter().flatten().collect()),
        _ => return Err(Error::Parse("weights must be given for every edge or none".into())),
    };
    let graph = PlabicGraph::new(n, vertices, edges, rotation, symmetry)?;
    Ok(GraphFile { graph, weights })
}

pub fn write_graph(g: &PlabicGraph, weights: Option<&[Rational]>) -> String {
    let mut out = String::new();
    writeln!(out, "plabic {}", g.boundary_count()).unwrap();
    out.push_str("VERTICES\n");
    for (v, vert) in g.vertices().iter().enumerate() {
        match vert.boundary {
            Some(label) => writeln!(out, "{v} {} boundary {label}", vert.color.name()),
            None => writeln!(out, "{v} {} interior", vert.color.name()),
        }
        .unwrap();
    }
    out.push_str("EDGES\n");
    for (e, (a, b)) in g.edges().iter().enumerate() {
        write!(out, "{e} {} {}", a.0, b.0).unwrap();
        if let Some(w) = weights {
            write!(out, " {}", rational::format(&w[e])).unwrap();
        }
        out.push('\n');
    }
    out.push_str("ROTATIONS\n");
    for v in 0..g.vertex_count() {
        write!(out, "{v}").unwrap();
        for e in g.rotation(VertexId(v)) {
            write!(out, " {}", e.0).unwrap();
        }
        out.push('\n');
    }
    if let Some(r) = g.symmetry() {
        out.push_str("SYMMETRY\n");
        for (v, image) in r.iter().enumerate() {
            if v < image.0 {
                writeln!(out, "{v} {}", image.0).unwrap();
            }
        }
    }
    out
}
