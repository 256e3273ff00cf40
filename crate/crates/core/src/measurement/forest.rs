use std::collections::VecDeque;

use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, PlabicGraph, VertexId};
use crate::rational::Rational;

use super::WeightedPlabicGraph;

/// A set of edges forming trees that each contain exactly one boundary
/// vertex and together cover every interior vertex.
///
/// Fixing every forest edge to weight one picks a unique representative
/// in each gauge class: every interior vertex hangs below exactly one
/// forest edge, so the gauge at that vertex is determined.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaugeForest {
    edges: Vec<EdgeId>,
    /// `(edge, child)` in breadth-first order from the roots.
    order: Vec<(EdgeId, VertexId)>,
}

impl GaugeForest {
    /// Validates `edges` as a gauge forest of `graph`.
    pub fn new(graph: &PlabicGraph, edges: Vec<EdgeId>) -> Result<Self> {
        let mut in_forest = vec![false; graph.edge_count()];
        for &e in &edges {
            if e.0 >= graph.edge_count() {
                return Err(Error::InvalidForest(format!("edge {} does not exist", e.0)));
            }
            if std::mem::replace(&mut in_forest[e.0], true) {
                return Err(Error::InvalidForest(format!("edge {} listed twice", e.0)));
            }
        }
        let mut seen = vec![false; graph.vertex_count()];
        let mut order = Vec::new();
        for label in 1..=graph.boundary_count() {
            let root = graph
                .boundary_vertex(label)
                .ok_or_else(|| Error::InvalidForest(format!("no boundary vertex {label}")))?;
            if seen[root.0] {
                continue;
            }
            seen[root.0] = true;
            let mut queue = VecDeque::from([(root, None)]);
            while let Some((v, via)) = queue.pop_front() {
                for &e in graph.rotation(v) {
                    if !in_forest[e.0] || Some(e) == via {
                        continue;
                    }
                    let u = graph.other_end(e, v);
                    if seen[u.0] {
                        return Err(Error::InvalidForest(format!("edge {} closes a cycle", e.0)));
                    }
                    if graph.is_boundary(u) {
                        return Err(Error::InvalidForest(format!(
                            "tree of boundary vertex {label} reaches another boundary vertex"
                        )));
                    }
                    seen[u.0] = true;
                    order.push((e, u));
                    queue.push_back((u, Some(e)));
                }
            }
        }
        if order.len() != edges.len() {
            return Err(Error::InvalidForest("some edges lie in trees without a boundary vertex".into()));
        }
        if let Some(v) = graph.interior_vertices().find(|v| !seen[v.0]) {
            return Err(Error::InvalidForest(format!("interior vertex {} is not covered", v.0)));
        }
        Ok(GaugeForest { edges, order })
    }

    /// Grows trees from the boundary in label order by breadth-first search,
    /// claiming each interior vertex together with its mirror image so that
    /// the forest is invariant under `r`.
    pub fn symmetric(graph: &PlabicGraph, r: &[VertexId]) -> Result<Self> {
        let mut claimed = vec![false; graph.vertex_count()];
        let mut edges = Vec::new();
        for label in 1..=graph.boundary_count() {
            let root = graph
                .boundary_vertex(label)
                .ok_or_else(|| Error::InvalidForest(format!("no boundary vertex {label}")))?;
            if claimed[root.0] {
                continue;
            }
            claimed[root.0] = true;
            claimed[r[root.0].0] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &e in graph.rotation(v) {
                    let u = graph.other_end(e, v);
                    if claimed[u.0] || graph.is_boundary(u) {
                        continue;
                    }
                    let (rv, ru) = (r[v.0], r[u.0]);
                    let mirror = graph
                        .rotation(rv)
                        .iter()
                        .copied()
                        .find(|&f| graph.other_end(f, rv) == ru)
                        .ok_or_else(|| Error::InvalidForest("involution does not preserve adjacency".into()))?;
                    claimed[u.0] = true;
                    claimed[ru.0] = true;
                    edges.push(e);
                    edges.push(mirror);
                    queue.push_back(u);
                }
            }
        }
        edges.sort();
        Self::new(graph, edges)
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Gauges each interior vertex, parents first, so that its forest edge
    /// gets weight one.
    pub fn normalize(&self, w: &WeightedPlabicGraph) -> Result<WeightedPlabicGraph> {
        Self::new(w.graph(), self.edges.clone())?;
        let mut current = w.clone();
        for &(e, child) in &self.order {
            let lambda = Rational::one() / current.weight(e);
            current = current.gauge(child, &lambda)?;
        }
        Ok(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::KSubset;
    use crate::gallery;
    use crate::rational::{int, ratio};

    #[test]
    fn lollipop_forest_is_the_legs() {
        let g = PlabicGraph::lollipop(&KSubset::new(4, [1, 2]).unwrap());
        let r = g.infer_symmetry().unwrap();
        let f = GaugeForest::symmetric(&g, &r).unwrap();
        assert_eq!(f.edges(), &[EdgeId(0), EdgeId(1), EdgeId(2), EdgeId(3)]);
    }

    #[test]
    fn symmetric_forests_are_mirror_closed() {
        for g in [gallery::symmetric_ladder(), gallery::symmetric_octagon()] {
            let r = g.symmetry().unwrap().to_vec();
            let f = GaugeForest::symmetric(&g, &r).unwrap();
            for &e in f.edges() {
                let (a, b) = g.endpoints(e);
                let (ra, rb) = (r[a.0], r[b.0]);
                assert!(f.edges().iter().any(|&x| {
                    let (c, d) = g.endpoints(x);
                    (c, d) == (ra, rb) || (d, c) == (ra, rb)
                }));
            }
        }
    }

    #[test]
    fn invalid_forests_are_rejected() {
        let g = gallery::square_with_legs();
        // missing vertices
        assert!(GaugeForest::new(&g, vec![]).is_err());
        // the whole square is a cycle
        let all: Vec<EdgeId> = (0..g.edge_count()).map(EdgeId).collect();
        assert!(GaugeForest::new(&g, all).is_err());
        // one tree per leg covers all four corners
        assert!(GaugeForest::new(&g, vec![EdgeId(4), EdgeId(5), EdgeId(6), EdgeId(7)]).is_ok());
        // legs 1 and 2 joined through the right side
        assert!(GaugeForest::new(&g, vec![EdgeId(3), EdgeId(4), EdgeId(5), EdgeId(6), EdgeId(7)]).is_err());
    }

    #[test]
    fn normalization_is_unique_per_gauge_class() {
        let w = gallery::weighted_symmetric_octagon();
        let r = w.graph().symmetry().unwrap().to_vec();
        let f = GaugeForest::symmetric(w.graph(), &r).unwrap();
        let scrambled = w.gauge(VertexId(0), &int(3)).unwrap().gauge(VertexId(4), &ratio(2, 7)).unwrap();
        let a = f.normalize(&w).unwrap();
        let b = f.normalize(&scrambled).unwrap();
        assert_eq!(a, b);
        assert_eq!(f.normalize(&a).unwrap(), a);
        assert!(a.is_symmetric_weighting().unwrap());
        assert_eq!(a.boundary_measurement().unwrap(), w.boundary_measurement().unwrap());
    }
}
