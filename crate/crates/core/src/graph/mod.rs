//! Plabic graphs embedded by a clockwise rotation system.

mod build;
mod matching;
mod symmetry;
mod trips;

use std::fmt;

use crate::error::{Error, Result};

pub use matching::Matching;
pub use trips::{ReducedViolation, Traversal, Trip};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct EdgeId(pub usize);

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Black => "black",
            Color::White => "white",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Vertex {
    pub color: Color,
    /// `Some(i)` for the boundary vertex labelled `i`.
    pub boundary: Option<usize>,
}

impl Vertex {
    pub fn interior(color: Color) -> Self {
        Vertex { color, boundary: None }
    }

    pub fn boundary(color: Color, label: usize) -> Self {
        Vertex { color, boundary: Some(label) }
    }

    pub fn is_boundary(&self) -> bool {
        self.boundary.is_some()
    }
}

/// A single failed structural invariant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    RotationMismatch { vertex: usize },
    NotBipartite { edge: usize },
    BoundaryEdge { edge: usize },
    BoundaryDegree { label: usize, degree: usize },
    BoundaryLabels(String),
    NoMatching,
    SymmetryLength { found: usize },
    SymmetryNotInvolution { vertex: usize },
    SymmetryFixedVertex { vertex: usize },
    SymmetryColor { vertex: usize },
    SymmetryBoundary { label: usize },
    SymmetryAdjacency { edge: usize },
    SymmetryEmbedding { vertex: usize },
    SymmetryOddBoundary { n: usize },
}

impl Violation {
    pub fn code(&self) -> &'static str {
        use Violation::*;
        match self {
            RotationMismatch { .. } => "rotation-mismatch",
            NotBipartite { .. } => "not-bipartite",
            BoundaryEdge { .. } => "boundary-boundary-edge",
            BoundaryDegree { .. } => "boundary-degree",
            BoundaryLabels(_) => "boundary-labels",
            NoMatching => "no-matching",
            SymmetryLength { .. } => "symmetry-length",
            SymmetryNotInvolution { .. } => "symmetry-not-involution",
            SymmetryFixedVertex { .. } => "symmetry-fixed-vertex",
            SymmetryColor { .. } => "symmetry-color",
            SymmetryBoundary { .. } => "symmetry-boundary",
            SymmetryAdjacency { .. } => "symmetry-adjacency",
            SymmetryEmbedding { .. } => "symmetry-embedding",
            SymmetryOddBoundary { .. } => "symmetry-odd-boundary",
        }
    }

    pub fn is_symmetry(&self) -> bool {
        self.code().starts_with("symmetry")
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        write!(f, "{}: ", self.code())?;
        match self {
            RotationMismatch { vertex } => write!(f, "rotation at vertex {vertex} is not its set of incident edges"),
            NotBipartite { edge } => write!(f, "edge {edge} joins two vertices of the same colour"),
            BoundaryEdge { edge } => write!(f, "edge {edge} joins two boundary vertices"),
            BoundaryDegree { label, degree } => write!(f, "boundary vertex {label} has degree {degree}"),
            BoundaryLabels(msg) => write!(f, "{msg}"),
            NoMatching => write!(f, "no almost perfect matching exists"),
            SymmetryLength { found } => write!(f, "involution has {found} entries"),
            SymmetryNotInvolution { vertex } => write!(f, "r(r({vertex})) != {vertex}"),
            SymmetryFixedVertex { vertex } => write!(f, "vertex {vertex} is fixed by r"),
            SymmetryColor { vertex } => write!(f, "vertex {vertex} and its image have the same colour"),
            SymmetryBoundary { label } => write!(f, "boundary vertex {label} is not sent to its mirror label"),
            SymmetryAdjacency { edge } => write!(f, "image of edge {edge} is not an edge"),
            SymmetryEmbedding { vertex } => write!(f, "r does not reverse the rotation at vertex {vertex}"),
            SymmetryOddBoundary { n } => write!(f, "boundary of odd size {n} has no mirror"),
        }
    }
}

/// A planar bipartite graph in a disc, with boundary vertices labelled
/// `1..=n` clockwise.
///
/// `rotation[v]` lists the edges at `v` in clockwise order. The optional
/// `symmetry` is an involution on vertex ids realizing the reflection.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlabicGraph {
    n: usize,
    vertices: Vec<Vertex>,
    edges: Vec<(VertexId, VertexId)>,
    rotation: Vec<Vec<EdgeId>>,
    symmetry: Option<Vec<VertexId>>,
}

impl PlabicGraph {
    /// Checks only that every id is in range; see [`Self::validate`] for
    /// the structural invariants.
    pub fn new(
        n: usize,
        vertices: Vec<Vertex>,
        edges: Vec<(VertexId, VertexId)>,
        rotation: Vec<Vec<EdgeId>>,
        symmetry: Option<Vec<VertexId>>,
    ) -> Result<Self> {
        let nv = vertices.len();
        let bad_vertex = |v: VertexId| v.0 >= nv;
        if let Some((e, _)) = edges.iter().enumerate().find(|(_, (a, b))| bad_vertex(*a) || bad_vertex(*b)) {
            return Err(Error::Parse(format!("edge {e} refers to a missing vertex")));
        }
        if rotation.len() != nv {
            return Err(Error::Parse(format!("{} rotation lists for {nv} vertices", rotation.len())));
        }
        if let Some(v) = rotation.iter().position(|r| r.iter().any(|e| e.0 >= edges.len())) {
            return Err(Error::Parse(format!("rotation at vertex {v} refers to a missing edge")));
        }
        if let Some(s) = &symmetry {
            if s.iter().any(|v| bad_vertex(*v)) {
                return Err(Error::Parse("symmetry refers to a missing vertex".into()));
            }
        }
        Ok(PlabicGraph { n, vertices, edges, rotation, symmetry })
    }

    /// [`Self::new`] followed by [`Self::validate`].
    pub fn checked(
        n: usize,
        vertices: Vec<Vertex>,
        edges: Vec<(VertexId, VertexId)>,
        rotation: Vec<Vec<EdgeId>>,
        symmetry: Option<Vec<VertexId>>,
    ) -> Result<Self> {
        let g = Self::new(n, vertices, edges, rotation, symmetry)?;
        let violations = g.validate();
        if violations.is_empty() {
            Ok(g)
        } else {
            Err(Error::InvalidGraph(violations))
        }
    }

    pub fn boundary_count(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.0]
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.vertices[v.0].color
    }

    pub fn is_boundary(&self, v: VertexId) -> bool {
        self.vertices[v.0].is_boundary()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.0]
    }

    /// The endpoint of `e` other than `v`.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e.0];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        &self.rotation[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v.0].len()
    }

    pub fn symmetry(&self) -> Option<&[VertexId]> {
        self.symmetry.as_deref()
    }

    pub fn with_symmetry(mut self, symmetry: Option<Vec<VertexId>>) -> Self {
        self.symmetry = symmetry;
        self
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId).filter(|&v| !self.is_boundary(v))
    }

    /// The vertex carrying boundary label `label`.
    pub fn boundary_vertex(&self, label: usize) -> Option<VertexId> {
        self.vertices.iter().position(|v| v.boundary == Some(label)).map(VertexId)
    }

    /// The edge at boundary vertex `label`, when it has exactly one.
    pub fn leg(&self, label: usize) -> Option<EdgeId> {
        let b = self.boundary_vertex(label)?;
        match self.rotation(b) {
            [e] => Some(*e),
            _ => None,
        }
    }

    /// Colour of the lollipop at `label`: the boundary vertex's neighbour
    /// is an interior leaf.
    pub fn lollipop_color(&self, label: usize) -> Option<Color> {
        let b = self.boundary_vertex(label)?;
        let leg = self.leg(label)?;
        let u = self.other_end(leg, b);
        (!self.is_boundary(u) && self.degree(u) == 1).then(|| self.color(u))
    }

    /// Incidence and labelling checks that every traversal relies on.
    pub(crate) fn structural_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); self.vertices.len()];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            incident[a.0].push(EdgeId(e));
            if b != a {
                incident[b.0].push(EdgeId(e));
            }
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort();
            if sorted != incident[v] {
                out.push(Violation::RotationMismatch { vertex: v });
            }
        }
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if self.is_boundary(a) && self.is_boundary(b) {
                out.push(Violation::BoundaryEdge { edge: e });
            }
            if self.color(a) == self.color(b) {
                out.push(Violation::NotBipartite { edge: e });
            }
        }
        let mut labels: Vec<usize> = self.vertices.iter().filter_map(|v| v.boundary).collect();
        labels.sort_unstable();
        if labels != (1..=self.n).collect::<Vec<_>>() {
            out.push(Violation::BoundaryLabels(format!(
                "boundary labels {labels:?} are not exactly 1..={}",
                self.n
            )));
        }
        for (v, vert) in self.vertices.iter().enumerate() {
            if let Some(label) = vert.boundary {
                if incident[v].len() != 1 {
                    out.push(Violation::BoundaryDegree { label, degree: incident[v].len() });
                }
            }
        }
        out
    }

    /// Every failed invariant, including matching existence and, when an
    /// involution is stored, the symmetry conditions.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.structural_violations();
        let rotation_ok = !out.iter().any(|v| matches!(v, Violation::RotationMismatch { .. }));
        if rotation_ok && self.find_matching().is_none() {
            out.push(Violation::NoMatching);
        }
        if let Some(r) = &self.symmetry {
            out.extend(self.symmetry_violations(r));
        }
        out
    }

    pub(crate) fn require_structure(&self) -> Result<()> {
        let violations = self.structural_violations();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidGraph(violations))
        }
    }

    fn position_in_rotation(&self, v: VertexId, e: EdgeId) -> usize {
        self.rotation[v.0].iter().position(|&x| x == e).expect("edge is incident")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn square_is_valid() {
        assert!(gallery::square_with_legs().validate().is_empty());
    }

    #[test]
    fn boundary_edge_is_reported() {
        let g = PlabicGraph::new(
            2,
            vec![Vertex::boundary(Color::White, 1), Vertex::boundary(Color::Black, 2)],
            vec![(VertexId(0), VertexId(1))],
            vec![vec![EdgeId(0)], vec![EdgeId(0)]],
            None,
        )
        .unwrap();
        let codes: Vec<&str> = g.validate().iter().map(Violation::code).collect();
        assert!(codes.contains(&"boundary-boundary-edge"), "{codes:?}");
    }

    #[test]
    fn same_colour_neighbours_are_reported() {
        let g = PlabicGraph::new(
            1,
            vec![Vertex::boundary(Color::Black, 1), Vertex::interior(Color::White), Vertex::interior(Color::White)],
            vec![(VertexId(0), VertexId(1)), (VertexId(1), VertexId(2))],
            vec![vec![EdgeId(0)], vec![EdgeId(0), EdgeId(1)], vec![EdgeId(1)]],
            None,
        )
        .unwrap();
        let codes: Vec<&str> = g.validate().iter().map(Violation::code).collect();
        assert_eq!(codes, vec!["not-bipartite"]);
    }

    #[test]
    fn rotation_and_degree_errors() {
        let g = PlabicGraph::new(
            1,
            vec![Vertex::boundary(Color::Black, 1), Vertex::interior(Color::White), Vertex::interior(Color::White)],
            vec![(VertexId(0), VertexId(1))],
            vec![vec![], vec![EdgeId(0)], vec![]],
            None,
        )
        .unwrap();
        let codes: Vec<&str> = g.validate().iter().map(Violation::code).collect();
        assert_eq!(codes, vec!["rotation-mismatch"]);
        let forked = PlabicGraph::new(
            1,
            vec![Vertex::boundary(Color::Black, 1), Vertex::interior(Color::White), Vertex::interior(Color::White)],
            vec![(VertexId(0), VertexId(1)), (VertexId(0), VertexId(2))],
            vec![vec![EdgeId(0), EdgeId(1)], vec![EdgeId(0)], vec![EdgeId(1)]],
            None,
        )
        .unwrap();
        let codes: Vec<&str> = forked.validate().iter().map(Violation::code).collect();
        assert!(codes.contains(&"boundary-degree"), "{codes:?}");
        assert!(PlabicGraph::new(1, vec![], vec![(VertexId(0), VertexId(1))], vec![], None).is_err());
    }

    #[test]
    fn isolated_interior_vertex_has_no_matching() {
        let g = PlabicGraph::new(
            1,
            vec![Vertex::boundary(Color::Black, 1), Vertex::interior(Color::White), Vertex::interior(Color::Black)],
            vec![(VertexId(0), VertexId(1))],
            vec![vec![EdgeId(0)], vec![EdgeId(0)], vec![]],
            None,
        )
        .unwrap();
        let codes: Vec<&str> = g.validate().iter().map(Violation::code).collect();
        assert_eq!(codes, vec!["no-matching"]);
    }
}
