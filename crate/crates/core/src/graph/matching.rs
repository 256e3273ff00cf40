use crate::combinatorics::KSubset;
use crate::error::{Error, Result};

use super::{Color, EdgeId, PlabicGraph, VertexId};

/// An almost perfect matching, as an ascending list of edges.
pub type Matching = Vec<EdgeId>;

struct Search<'g> {
    graph: &'g PlabicGraph,
    covered: Vec<bool>,
    chosen: Vec<EdgeId>,
    interior_left: usize,
}

impl Search<'_> {
    fn available(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.graph
            .rotation(v)
            .iter()
            .copied()
            .filter(move |&e| !self.covered[self.graph.other_end(e, v).0] && self.graph.other_end(e, v) != v)
    }

    /// The uncovered interior vertex with the fewest usable edges.
    fn most_constrained(&self) -> Option<(VertexId, Vec<EdgeId>)> {
        let mut best: Option<(VertexId, Vec<EdgeId>)> = None;
        for v in self.graph.interior_vertices() {
            if self.covered[v.0] {
                continue;
            }
            let mut options: Vec<EdgeId> = self.available(v).collect();
            options.sort();
            options.dedup();
            if best.as_ref().is_none_or(|(_, b)| options.len() < b.len()) {
                let empty = options.is_empty();
                best = Some((v, options));
                if empty {
                    break;
                }
            }
        }
        best
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[EdgeId]) -> bool) -> bool {
        if self.interior_left == 0 {
            return visit(&self.chosen);
        }
        let Some((v, options)) = self.most_constrained() else {
            return true;
        };
        for e in options {
            let u = self.graph.other_end(e, v);
            self.covered[v.0] = true;
            self.covered[u.0] = true;
            let interior_used = 1 + usize::from(!self.graph.is_boundary(u));
            self.interior_left -= interior_used;
            self.chosen.push(e);
            let keep_going = self.run(visit);
            self.chosen.pop();
            self.interior_left += interior_used;
            self.covered[v.0] = false;
            self.covered[u.0] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

impl PlabicGraph {
    /// Calls `visit` on each almost perfect matching (edges unsorted) until
    /// it returns `false`.
    pub(crate) fn for_each_matching(&self, visit: &mut dyn FnMut(&[EdgeId]) -> bool) {
        let mut search = Search {
            graph: self,
            covered: vec![false; self.vertex_count()],
            chosen: Vec::new(),
            interior_left: self.interior_vertices().count(),
        };
        search.run(visit);
    }

    pub(crate) fn find_matching(&self) -> Option<Matching> {
        let mut found = None;
        self.for_each_matching(&mut |m| {
            let mut m = m.to_vec();
            m.sort();
            found = Some(m);
            false
        });
        found
    }

    /// Every almost perfect matching, in lexicographic order of sorted
    /// edge lists.
    pub fn matchings(&self) -> Vec<Matching> {
        let mut out = Vec::new();
        self.for_each_matching(&mut |m| {
            let mut m = m.to_vec();
            m.sort();
            out.push(m);
            true
        });
        out.sort();
        out
    }

    /// `∂(P)`: black boundary vertices used by `P` together with white
    /// boundary vertices not used.
    pub fn boundary_subset(&self, matching: &[EdgeId]) -> Result<KSubset> {
        let mut covered = vec![0usize; self.vertex_count()];
        for &e in matching {
            if e.0 >= self.edge_count() {
                return Err(Error::InvalidMatching(format!("edge {} does not exist", e.0)));
            }
            let (a, b) = self.endpoints(e);
            covered[a.0] += 1;
            covered[b.0] += 1;
        }
        if let Some(v) = covered.iter().position(|&c| c > 1) {
            return Err(Error::InvalidMatching(format!("vertex {v} is covered more than once")));
        }
        if let Some(v) = self.interior_vertices().find(|v| covered[v.0] == 0) {
            return Err(Error::InvalidMatching(format!("interior vertex {} is not covered", v.0)));
        }
        let labels = self.vertices().iter().enumerate().filter_map(|(v, vert)| {
            let label = vert.boundary?;
            let used = covered[v] == 1;
            let in_subset = match vert.color {
                Color::Black => used,
                Color::White => !used,
            };
            in_subset.then_some(label)
        });
        KSubset::new(self.boundary_count(), labels)
    }
}
