use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

use super::{EdgeId, PlabicGraph, Vertex, VertexId, Violation};

impl PlabicGraph {
    /// Violations of the symmetry conditions for the involution `r`.
    pub(crate) fn symmetry_violations(&self, r: &[VertexId]) -> Vec<Violation> {
        let n = self.boundary_count();
        let mut out = Vec::new();
        if !n.is_multiple_of(2) {
            out.push(Violation::SymmetryOddBoundary { n });
        }
        if r.len() != self.vertex_count() {
            out.push(Violation::SymmetryLength { found: r.len() });
            return out;
        }
        for v in 0..r.len() {
            let image = r[v];
            if r[image.0].0 != v {
                out.push(Violation::SymmetryNotInvolution { vertex: v });
            }
            if image.0 == v {
                out.push(Violation::SymmetryFixedVertex { vertex: v });
            }
            if self.color(image) == self.color(VertexId(v)) {
                out.push(Violation::SymmetryColor { vertex: v });
            }
            match (self.vertices()[v].boundary, self.vertex(image).boundary) {
                (None, None) => {}
                (Some(label), Some(other)) if n + 1 == label + other => {}
                (Some(label), _) => out.push(Violation::SymmetryBoundary { label }),
                (None, Some(other)) => out.push(Violation::SymmetryBoundary { label: other }),
            }
        }
        let mut multiplicity: HashMap<(usize, usize), usize> = HashMap::new();
        let pair = |a: VertexId, b: VertexId| (a.0.min(b.0), a.0.max(b.0));
        for &(a, b) in self.edges() {
            *multiplicity.entry(pair(a, b)).or_default() += 1;
        }
        for (e, &(a, b)) in self.edges().iter().enumerate() {
            let here = multiplicity[&pair(a, b)];
            let there = multiplicity.get(&pair(r[a.0], r[b.0])).copied().unwrap_or(0);
            if here != there {
                out.push(Violation::SymmetryAdjacency { edge: e });
            }
        }
        for v in 0..r.len() {
            let v = VertexId(v);
            let mut image: Vec<VertexId> =
                self.rotation(v).iter().map(|&e| r[self.other_end(e, v).0]).collect();
            image.reverse();
            let target: Vec<VertexId> = self.rotation(r[v.0]).iter().map(|&e| self.other_end(e, r[v.0])).collect();
            if !is_cyclic_shift(&image, &target) {
                out.push(Violation::SymmetryEmbedding { vertex: v.0 });
            }
        }
        out
    }

    /// Mirror image across the diameter between `n, 1` and `n/2, n/2 + 1`:
    /// labels `i ↦ n + 1 − i`, colours swapped, rotations reversed.
    pub fn reflect(&self) -> Result<PlabicGraph> {
        let n = self.boundary_count();
        if !n.is_multiple_of(2) {
            return Err(Error::OddGroundSet(n));
        }
        let vertices = self
            .vertices()
            .iter()
            .map(|v| Vertex { color: v.color.opposite(), boundary: v.boundary.map(|i| n + 1 - i) })
            .collect();
        let rotation = (0..self.vertex_count())
            .map(|v| self.rotation(VertexId(v)).iter().rev().copied().collect())
            .collect();
        PlabicGraph::new(n, vertices, self.edges().to_vec(), rotation, self.symmetry().map(<[_]>::to_vec))
    }

    /// Vertex map `self → other` preserving boundary labels, colours,
    /// adjacency and clockwise rotations, found by propagating outward from
    /// the boundary legs. Vertices not connected to the boundary are never
    /// reached, so graphs with such components yield `None`.
    pub fn embedded_isomorphism(&self, other: &PlabicGraph) -> Option<Vec<VertexId>> {
        if self.boundary_count() != other.boundary_count()
            || self.vertex_count() != other.vertex_count()
            || self.edge_count() != other.edge_count()
        {
            return None;
        }
        let mut vmap: Vec<Option<VertexId>> = vec![None; self.vertex_count()];
        let mut vback: Vec<Option<VertexId>> = vec![None; other.vertex_count()];
        let mut emap: Vec<Option<EdgeId>> = vec![None; self.edge_count()];
        let mut eback: Vec<Option<EdgeId>> = vec![None; other.edge_count()];
        let mut queue = VecDeque::new();
        for label in 1..=self.boundary_count() {
            let v = self.boundary_vertex(label)?;
            let w = other.boundary_vertex(label)?;
            if self.degree(v) != other.degree(w) || self.degree(v) == 0 {
                return None;
            }
            vmap[v.0] = Some(w);
            vback[w.0] = Some(v);
            queue.push_back((v, w, self.rotation(v)[0], other.rotation(w)[0]));
        }
        while let Some((v, w, e, f)) = queue.pop_front() {
            if self.color(v) != other.color(w)
                || self.degree(v) != other.degree(w)
                || self.vertex(v).boundary != other.vertex(w).boundary
            {
                return None;
            }
            let d = self.degree(v);
            let pv = self.position_in_rotation(v, e);
            let pw = other.position_in_rotation(w, f);
            for step in 0..d {
                let ev = self.rotation(v)[(pv + step) % d];
                let ew = other.rotation(w)[(pw + step) % d];
                match (emap[ev.0], eback[ew.0]) {
                    (None, None) => {
                        emap[ev.0] = Some(ew);
                        eback[ew.0] = Some(ev);
                    }
                    (Some(x), Some(y)) if x == ew && y == ev => {}
                    _ => return None,
                }
                let u = self.other_end(ev, v);
                let x = other.other_end(ew, w);
                match (vmap[u.0], vback[x.0]) {
                    (None, None) => {
                        vmap[u.0] = Some(x);
                        vback[x.0] = Some(u);
                        queue.push_back((u, x, ev, ew));
                    }
                    (Some(a), Some(b)) if a == x && b == u => {}
                    _ => return None,
                }
            }
        }
        vmap.into_iter().collect()
    }

    /// An involution realizing the reflection, found by matching the
    /// reflected graph onto this one; `None` when none exists.
    pub fn infer_symmetry(&self) -> Option<Vec<VertexId>> {
        let mirrored = self.reflect().ok()?;
        let r = mirrored.embedded_isomorphism(self)?;
        self.symmetry_violations(&r).is_empty().then_some(r)
    }

    /// Checks the stored involution, or infers one when absent.
    pub fn is_symmetric(&self) -> bool {
        match self.symmetry() {
            Some(r) => self.symmetry_violations(r).is_empty(),
            None => self.infer_symmetry().is_some(),
        }
    }

    /// The same graph with an inferred involution stored.
    pub fn with_inferred_symmetry(self) -> Result<PlabicGraph> {
        let r = self.infer_symmetry().ok_or(Error::NotSymmetric("graph"))?;
        Ok(self.with_symmetry(Some(r)))
    }
}

fn is_cyclic_shift<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|s| (0..a.len()).all(|i| a[(i + s) % a.len()] == b[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{is_symmetric_bap, mirror, KSubset};
    use crate::gallery;
    use crate::graph::Color;

    #[test]
    fn octagon_is_symmetric() {
        let g = gallery::symmetric_octagon();
        assert!(g.symmetry().is_some());
        assert!(g.validate().is_empty());
        assert!(g.is_symmetric());
        assert!(g.clone().with_symmetry(None).is_symmetric());
        assert!(is_symmetric_bap(&g.bap().unwrap()).unwrap());
    }

    #[test]
    fn square_is_symmetric_about_the_vertical_axis() {
        let g = gallery::square_with_legs();
        let r = g.infer_symmetry().unwrap();
        // (1,1) black <-> (-1,1) white, (-1,-1) black <-> (1,-1) white
        assert_eq!(&r[..4], &[VertexId(1), VertexId(0), VertexId(3), VertexId(2)]);
        assert!(is_symmetric_bap(&g.bap().unwrap()).unwrap());
    }

    #[test]
    fn asymmetric_lollipops() {
        let g = PlabicGraph::lollipop(&KSubset::new(4, [1, 4]).unwrap());
        assert!(!g.is_symmetric());
        assert!(g.infer_symmetry().is_none());
    }

    #[test]
    fn reflecting_a_lollipop() {
        let g = PlabicGraph::lollipop(&KSubset::new(2, [1]).unwrap());
        let h = g.reflect().unwrap();
        assert_eq!(h.lollipop_color(2), Some(Color::Black));
        assert_eq!(h.lollipop_color(1), Some(Color::White));
        assert!(g.is_symmetric());
        let not = PlabicGraph::lollipop(&KSubset::new(2, [1, 2]).unwrap());
        assert!(!not.is_symmetric());
        assert!(PlabicGraph::lollipop(&KSubset::new(3, [1]).unwrap()).reflect().is_err());
    }

    #[test]
    fn reflection_conjugates_the_trip_permutation() {
        for g in [gallery::square_with_legs(), gallery::symmetric_octagon(), gallery::symmetric_ladder()] {
            let n = g.boundary_count();
            let f = g.trip_permutation().unwrap();
            let h = g.reflect().unwrap();
            assert!(h.is_reduced().unwrap());
            let fh = h.trip_permutation().unwrap();
            for a in 1..=n {
                assert_eq!(fh[a - 1], mirror(n, f[mirror(n, a) - 1]));
            }
        }
    }

    #[test]
    fn bad_involutions_are_reported() {
        let g = gallery::symmetric_octagon();
        let identity: Vec<VertexId> = (0..g.vertex_count()).map(VertexId).collect();
        let codes: Vec<&str> = g.symmetry_violations(&identity).iter().map(Violation::code).collect();
        assert!(codes.contains(&"symmetry-fixed-vertex"));
        assert!(codes.contains(&"symmetry-color"));
        assert!(codes.contains(&"symmetry-boundary"));
        assert_eq!(
            g.symmetry_violations(&identity[..3]).iter().map(Violation::code).collect::<Vec<_>>(),
            vec!["symmetry-length"]
        );
    }
}
