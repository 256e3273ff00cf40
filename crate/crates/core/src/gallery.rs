//! Small named graphs, embedded from integer coordinates.

use std::cmp::Ordering;

use crate::error::Result;
use crate::graph::{Color, EdgeId, PlabicGraph, Vertex, VertexId};
use crate::measurement::WeightedPlabicGraph;
use crate::rational::int;

/// A vertex placed in the plane: colour, boundary label, position.
pub type Placed = (Color, Option<usize>, (i64, i64));

/// Builds a graph whose rotations are read off the drawing: the edges at
/// each vertex are sorted clockwise by direction. Coordinates only need to
/// give the right cyclic orders; nothing else is checked geometrically.
pub fn embed(n: usize, vertices: &[Placed], edges: &[(usize, usize)]) -> Result<PlabicGraph> {
    let verts = vertices
        .iter()
        .map(|&(color, label, _)| Vertex { color, boundary: label })
        .collect();
    let mut rotation: Vec<Vec<EdgeId>> = vec![Vec::new(); vertices.len()];
    for (e, &(a, b)) in edges.iter().enumerate() {
        rotation[a].push(EdgeId(e));
        rotation[b].push(EdgeId(e));
    }
    for (v, rot) in rotation.iter_mut().enumerate() {
        let here = vertices[v].2;
        let direction = |e: &EdgeId| {
            let (a, b) = edges[e.0];
            let there = vertices[if a == v { b } else { a }].2;
            (there.0 - here.0, there.1 - here.1)
        };
        rot.sort_by(|x, y| clockwise(direction(x), direction(y)));
    }
    let edges = edges.iter().map(|&(a, b)| (VertexId(a), VertexId(b))).collect();
    PlabicGraph::new(n, verts, edges, rotation, None)
}

/// Orders directions by decreasing angle, starting just below the positive
/// x-axis.
fn clockwise(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |d: (i64, i64)| d.1 > 0 || (d.1 == 0 && d.0 > 0);
    match (half(a), half(b)) {
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        _ => {
            let cross = a.0 * b.1 - a.1 * b.0;
            cross.cmp(&0)
        }
    }
}

/// A square with one leg at each corner: the top cell of `Gr(2, 4)`.
///
/// Interior vertices 0..4 are the corners `(1,1)` black, `(-1,1)` white,
/// `(-1,-1)` black, `(1,-1)` white; boundary vertices 4..8 carry labels
/// 1..4 clockwise from the top right.
pub fn square_with_legs() -> PlabicGraph {
    use Color::*;
    let vertices: [Placed; 8] = [
        (Black, None, (1, 1)),
        (White, None, (-1, 1)),
        (Black, None, (-1, -1)),
        (White, None, (1, -1)),
        (White, Some(1), (2, 2)),
        (Black, Some(2), (2, -2)),
        (White, Some(3), (-2, -2)),
        (Black, Some(4), (-2, 2)),
    ];
    let edges = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (5, 3), (6, 2), (7, 1)];
    embed(4, &vertices, &edges).expect("fixed layout")
}

/// A symmetric graph on eight boundary vertices: a square whose corners
/// carry the legs at 1, 4, 5, 8, and two trivalent vertices serving 2, 3
/// and 6, 7 respectively. The reflection is stored.
///
/// Edges: 0 top, 1 left side, 2 bottom, 3 right side, then the legs.
pub fn symmetric_octagon() -> PlabicGraph {
    use Color::*;
    let vertices: [Placed; 14] = [
        (Black, None, (1, 2)),
        (White, None, (-1, 2)),
        (Black, None, (-1, -2)),
        (White, None, (1, -2)),
        (White, None, (2, 0)),
        (Black, None, (-2, 0)),
        (White, Some(1), (2, 4)),
        (Black, Some(2), (5, 3)),
        (Black, Some(3), (5, -3)),
        (Black, Some(4), (2, -4)),
        (White, Some(5), (-2, -4)),
        (White, Some(6), (-5, -3)),
        (White, Some(7), (-5, 3)),
        (Black, Some(8), (-2, 4)),
    ];
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 0),
        (0, 6),
        (4, 7),
        (4, 8),
        (3, 9),
        (2, 10),
        (5, 11),
        (5, 12),
        (1, 13),
    ];
    embed(8, &vertices, &edges)
        .and_then(PlabicGraph::with_inferred_symmetry)
        .expect("fixed layout")
}

/// [`symmetric_octagon`] weighted 4 on the top edge, 3 on the bottom edge,
/// 7 on both sides and 1 elsewhere.
pub fn weighted_symmetric_octagon() -> WeightedPlabicGraph {
    let g = symmetric_octagon();
    let mut weights = vec![int(1); g.edge_count()];
    weights[0] = int(4);
    weights[1] = int(7);
    weights[2] = int(3);
    weights[3] = int(7);
    WeightedPlabicGraph::new(g, weights).expect("positive weights")
}

/// A symmetric bridge graph on four boundary vertices: two white
/// lollipops at 1, 2 followed by a centre bridge, a mirror pair of bridges
/// and another centre bridge. The reflection is stored.
///
/// Edge 4 is the first centre bridge, edges 6 and 7 the mirror pair and
/// edge 10 the second centre bridge.
pub fn symmetric_ladder() -> PlabicGraph {
    use Color::*;
    let vertices: [Placed; 12] = [
        (Black, Some(1), (7, 0)),
        (Black, Some(2), (5, 0)),
        (White, Some(3), (3, 0)),
        (White, Some(4), (1, 0)),
        (Black, None, (1, 2)),
        (Black, None, (3, 3)),
        (Black, None, (5, 2)),
        (Black, None, (3, 1)),
        (White, None, (3, 2)),
        (White, None, (5, 3)),
        (White, None, (5, 1)),
        (White, None, (7, 2)),
    ];
    let edges = [
        (2, 7),
        (7, 8),
        (8, 5),
        (3, 4),
        (5, 9),
        (9, 6),
        (4, 8),
        (6, 11),
        (11, 0),
        (6, 10),
        (7, 10),
        (10, 1),
    ];
    embed(4, &vertices, &edges)
        .and_then(PlabicGraph::with_inferred_symmetry)
        .expect("fixed layout")
}
