use std::collections::HashMap;
use std::fmt;

use crate::combinatorics::BoundedAffinePermutation;
use crate::error::{Error, Result};

use super::{Color, EdgeId, PlabicGraph, VertexId};

/// One directed use of an edge.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Traversal {
    pub edge: EdgeId,
    pub from: VertexId,
    pub to: VertexId,
}

/// A trip: either a path between boundary vertices or a closed cycle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Trip {
    pub traversals: Vec<Traversal>,
    /// Boundary labels `(start, end)`; `None` for a cycle.
    pub endpoints: Option<(usize, usize)>,
}

impl Trip {
    pub fn is_cycle(&self) -> bool {
        self.endpoints.is_none()
    }
}

/// The first failed condition of the reducedness criterion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReducedViolation {
    /// A trip closes into a cycle.
    CycleTrip { trip: usize },
    /// An interior leaf not attached to the boundary.
    InteriorLeaf { vertex: usize },
    /// A trip uses an edge in both directions.
    EdgeUsedTwice { trip: usize, edge: usize },
    /// Two trips cross the same pair of edges in the same order.
    SharedEdgesInOrder { trips: (usize, usize), edges: (usize, usize) },
}

impl fmt::Display for ReducedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReducedViolation::CycleTrip { trip } => write!(f, "trip {trip} is a cycle"),
            ReducedViolation::InteriorLeaf { vertex } => {
                write!(f, "vertex {vertex} is a leaf away from the boundary")
            }
            ReducedViolation::EdgeUsedTwice { trip, edge } => {
                write!(f, "trip {trip} uses edge {edge} in both directions")
            }
            ReducedViolation::SharedEdgesInOrder { trips, edges } => write!(
                f,
                "trips {} and {} both use edge {} before edge {}",
                trips.0, trips.1, edges.0, edges.1
            ),
        }
    }
}

impl PlabicGraph {
    /// The traversal following `t`: turn maximally left at a white vertex
    /// (next edge clockwise) and maximally right at a black one.
    fn next_traversal(&self, t: Traversal) -> Traversal {
        let v = t.to;
        let rot = self.rotation(v);
        let d = rot.len();
        let p = self.position_in_rotation(v, t.edge);
        let edge = match self.color(v) {
            Color::White => rot[(p + 1) % d],
            Color::Black => rot[(p + d - 1) % d],
        };
        Traversal { edge, from: v, to: self.other_end(edge, v) }
    }

    /// Boundary trips in order of their starting label, then cycles in order
    /// of the first uncovered `(edge, direction)`.
    pub fn trips(&self) -> Result<Vec<Trip>> {
        self.require_structure()?;
        let mut used: HashMap<(EdgeId, bool), ()> = HashMap::new();
        let key = |g: &PlabicGraph, t: &Traversal| (t.edge, g.endpoints(t.edge).0 == t.from);
        let mut out = Vec::new();
        for label in 1..=self.boundary_count() {
            let b = self.boundary_vertex(label).expect("labels checked");
            let leg = self.rotation(b)[0];
            let mut t = Traversal { edge: leg, from: b, to: self.other_end(leg, b) };
            let mut traversals = vec![t];
            used.insert(key(self, &t), ());
            while !self.is_boundary(t.to) {
                t = self.next_traversal(t);
                used.insert(key(self, &t), ());
                traversals.push(t);
            }
            let end = self.vertex(t.to).boundary.expect("boundary");
            out.push(Trip { traversals, endpoints: Some((label, end)) });
        }
        for e in 0..self.edge_count() {
            let (a, b) = self.endpoints(EdgeId(e));
            for (from, to) in [(a, b), (b, a)] {
                let start = Traversal { edge: EdgeId(e), from, to };
                if used.contains_key(&key(self, &start)) {
                    continue;
                }
                let mut traversals = Vec::new();
                let mut t = start;
                loop {
                    used.insert(key(self, &t), ());
                    traversals.push(t);
                    t = self.next_traversal(t);
                    if t == start {
                        break;
                    }
                }
                out.push(Trip { traversals, endpoints: None });
            }
        }
        Ok(out)
    }

    /// `f̄_G` as a list: entry `a − 1` is the end of the trip from `a`.
    pub fn trip_permutation(&self) -> Result<Vec<usize>> {
        Ok(self.trips()?.iter().filter_map(|t| t.endpoints.map(|(_, end)| end)).collect())
    }

    /// The first failing reducedness condition, or `None` when reduced.
    pub fn reducedness(&self) -> Result<Option<ReducedViolation>> {
        let trips = self.trips()?;
        if let Some(i) = trips.iter().position(Trip::is_cycle) {
            return Ok(Some(ReducedViolation::CycleTrip { trip: i }));
        }
        if let Some(v) = self.interior_vertices().find(|&v| {
            self.degree(v) == 1 && !self.is_boundary(self.other_end(self.rotation(v)[0], v))
        }) {
            return Ok(Some(ReducedViolation::InteriorLeaf { vertex: v.0 }));
        }
        for (i, trip) in trips.iter().enumerate() {
            let (start, _) = trip.endpoints.expect("no cycles remain");
            if self.lollipop_color(start).is_some() {
                continue;
            }
            let mut seen = HashMap::new();
            for t in &trip.traversals {
                if seen.insert(t.edge, ()).is_some() {
                    return Ok(Some(ReducedViolation::EdgeUsedTwice { trip: i, edge: t.edge.0 }));
                }
            }
        }
        let positions: Vec<HashMap<EdgeId, usize>> = trips
            .iter()
            .map(|trip| {
                let mut pos = HashMap::new();
                for (p, t) in trip.traversals.iter().enumerate() {
                    pos.entry(t.edge).or_insert(p);
                }
                pos
            })
            .collect();
        for a in 0..trips.len() {
            for b in (a + 1)..trips.len() {
                let mut shared: Vec<(usize, usize, EdgeId)> = positions[a]
                    .iter()
                    .filter_map(|(e, &pa)| positions[b].get(e).map(|&pb| (pa, pb, *e)))
                    .collect();
                shared.sort();
                for x in 0..shared.len() {
                    for y in (x + 1)..shared.len() {
                        if shared[x].1 < shared[y].1 {
                            return Ok(Some(ReducedViolation::SharedEdgesInOrder {
                                trips: (a, b),
                                edges: (shared[x].2 .0, shared[y].2 .0),
                            }));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_reduced(&self) -> Result<bool> {
        Ok(self.reducedness()?.is_none())
    }

    /// `f_G`: `f̄_G(i)` when it exceeds `i` or at a black lollipop,
    /// `f̄_G(i) + n` when it is below `i` or at a white lollipop.
    pub fn bap(&self) -> Result<BoundedAffinePermutation> {
        if let Some(v) = self.reducedness()? {
            return Err(Error::NotReduced(v.to_string()));
        }
        let bar = self.trip_permutation()?;
        let n = self.boundary_count();
        let mut window = Vec::with_capacity(n);
        for (idx, &target) in bar.iter().enumerate() {
            let i = idx + 1;
            let value = if target > i {
                target
            } else if target < i {
                target + n
            } else {
                match self.lollipop_color(i) {
                    Some(Color::White) => i + n,
                    Some(Color::Black) => i,
                    None => return Err(Error::NotReduced(format!("fixed point {i} without a lollipop"))),
                }
            };
            window.push(value as i64);
        }
        BoundedAffinePermutation::new(window, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::KSubset;
    use crate::gallery;
    use crate::graph::Vertex;

    #[test]
    fn square_trip_from_two() {
        let g = gallery::square_with_legs();
        let trips = g.trips().unwrap();
        let from_two = &trips[1];
        assert_eq!(from_two.endpoints, Some((2, 4)));
        // 2, then (1,-1) white, (-1,-1) black, (-1,1) white, then 4
        let path: Vec<usize> = from_two.traversals.iter().map(|t| t.to.0).collect();
        assert_eq!(path, vec![3, 2, 1, 7]);
        assert_eq!(g.trip_permutation().unwrap(), vec![3, 4, 1, 2]);
        assert!(g.is_reduced().unwrap());
        assert_eq!(g.bap().unwrap().window(), &[3, 4, 5, 6]);
    }

    #[test]
    fn every_edge_is_traversed_once_each_way() {
        for g in [gallery::square_with_legs(), gallery::symmetric_octagon(), gallery::symmetric_ladder()] {
            let trips = g.trips().unwrap();
            let mut count: HashMap<(EdgeId, VertexId), usize> = HashMap::new();
            for t in trips.iter().flat_map(|t| &t.traversals) {
                *count.entry((t.edge, t.from)).or_default() += 1;
            }
            assert_eq!(count.len(), 2 * g.edge_count());
            assert!(count.values().all(|&c| c == 1));
        }
    }

    #[test]
    fn lollipop_trips_return() {
        let s = KSubset::new(3, [2]).unwrap();
        let g = PlabicGraph::lollipop(&s);
        assert_eq!(g.trip_permutation().unwrap(), vec![1, 2, 3]);
        assert!(g.trips().unwrap().iter().all(|t| t.traversals.len() == 2));
        assert_eq!(g.bap().unwrap(), BoundedAffinePermutation::lollipop(&s));
    }

    /// Boundary 1 - white - black - white (leaf).
    fn with_interior_leaf() -> PlabicGraph {
        PlabicGraph::new(
            1,
            vec![
                Vertex::boundary(Color::Black, 1),
                Vertex::interior(Color::White),
                Vertex::interior(Color::Black),
                Vertex::interior(Color::White),
            ],
            vec![(VertexId(0), VertexId(1)), (VertexId(1), VertexId(2)), (VertexId(2), VertexId(3))],
            vec![vec![EdgeId(0)], vec![EdgeId(0), EdgeId(1)], vec![EdgeId(1), EdgeId(2)], vec![EdgeId(2)]],
            None,
        )
        .unwrap()
    }

    #[test]
    fn interior_leaf_is_not_reduced() {
        let g = with_interior_leaf();
        assert_eq!(g.reducedness().unwrap(), Some(ReducedViolation::InteriorLeaf { vertex: 3 }));
        assert!(matches!(g.bap(), Err(Error::NotReduced(_))));
    }

    #[test]
    fn interior_cycle_is_not_reduced() {
        // a lollipop at 1 plus a detached white-black 2-cycle of parallel edges
        let g = PlabicGraph::new(
            1,
            vec![
                Vertex::boundary(Color::Black, 1),
                Vertex::interior(Color::White),
                Vertex::interior(Color::White),
                Vertex::interior(Color::Black),
            ],
            vec![(VertexId(0), VertexId(1)), (VertexId(2), VertexId(3)), (VertexId(2), VertexId(3))],
            vec![vec![EdgeId(0)], vec![EdgeId(0)], vec![EdgeId(1), EdgeId(2)], vec![EdgeId(2), EdgeId(1)]],
            None,
        )
        .unwrap();
        assert!(matches!(g.reducedness().unwrap(), Some(ReducedViolation::CycleTrip { .. })));
    }
}
