use crate::combinatorics::KSubset;
use crate::error::{Error, Result};

use super::{Color, EdgeId, PlabicGraph, Vertex, VertexId};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    /// The lower label; carries the white endpoint.
    Left,
    /// The higher label; carries the black endpoint.
    Right,
}

impl PlabicGraph {
    /// White lollipops at `white`, black lollipops elsewhere. Boundary vertex
    /// `i` has id `i − 1`; its leaf has id `n + i − 1`; leg `i` is edge `i − 1`.
    pub fn lollipop(white: &KSubset) -> PlabicGraph {
        let n = white.n();
        let leaf_color = |i: usize| if white.contains(i) { Color::White } else { Color::Black };
        let mut vertices: Vec<Vertex> = (1..=n).map(|i| Vertex::boundary(leaf_color(i).opposite(), i)).collect();
        vertices.extend((1..=n).map(|i| Vertex::interior(leaf_color(i))));
        let edges = (0..n).map(|i| (VertexId(i), VertexId(n + i))).collect();
        let rotation = (0..2 * n).map(|v| vec![EdgeId(v % n)]).collect();
        PlabicGraph::new(n, vertices, edges, rotation, None).expect("lollipop ids are in range")
    }

    /// Adds a bridge between the legs at `i` and `i + 1`.
    pub fn add_bridge(&self, i: usize) -> Result<(PlabicGraph, EdgeId)> {
        self.add_bridge_between(i, i + 1)
    }

    /// Adds a bridge edge with a white end on the leg at `left` and a black
    /// end on the leg at `right`, running next to the boundary. A leaf or
    /// degree-two vertex of the right colour at the top of a leg becomes the
    /// endpoint; otherwise the leg is subdivided, with degree-two vertices
    /// inserted wherever colours would clash. Returns the new graph and the
    /// bridge edge. Existing vertex and edge ids are preserved; new ones are
    /// appended. The stored involution is dropped.
    pub fn add_bridge_between(&self, left: usize, right: usize) -> Result<(PlabicGraph, EdgeId)> {
        let n = self.boundary_count();
        for label in [left, right] {
            if label == 0 || label > n {
                return Err(Error::IndexOutOfRange { index: label as i64, n });
            }
        }
        if left >= right {
            return Err(Error::NoBridge { left, right });
        }
        self.require_structure()?;
        let mut g = self.clone().with_symmetry(None);
        let top = |label: usize| {
            let b = g.boundary_vertex(label).expect("labels checked");
            let leg = g.rotation(b)[0];
            (b, leg, g.other_end(leg, b))
        };
        let (bl, leg_l, ul) = top(left);
        let (br, leg_r, ur) = top(right);
        let reusable = |u: VertexId, color: Color| g.color(u) == color && g.degree(u) <= 2;
        let mut reuse_l = reusable(ul, Color::White);
        let mut reuse_r = reusable(ur, Color::Black);
        if reuse_l && reuse_r && g.rotation(ul).iter().any(|&e| g.other_end(e, ul) == ur) {
            reuse_l = false;
            reuse_r = false;
        }
        let wl = g.prepare_endpoint(bl, leg_l, ul, Color::White, reuse_l);
        let wr = g.prepare_endpoint(br, leg_r, ur, Color::Black, reuse_r);
        let bridge = EdgeId(g.edges.len());
        g.edges.push((wl.0, wr.0));
        g.place_bridge(wl, bridge, Side::Left);
        g.place_bridge(wr, bridge, Side::Right);
        Ok((g, bridge))
    }

    /// Returns the endpoint vertex and the edge joining it towards the
    /// boundary.
    fn prepare_endpoint(
        &mut self,
        b: VertexId,
        leg: EdgeId,
        u: VertexId,
        color: Color,
        reuse: bool,
    ) -> (VertexId, EdgeId) {
        if reuse {
            return (u, leg);
        }
        let (x, deeper) = self.subdivide(leg, b, color);
        if self.color(b) == color {
            self.subdivide(leg, b, color.opposite());
        }
        if self.color(u) == color {
            self.subdivide(deeper, x, color.opposite());
        }
        let toward_boundary = if self.color(b) == color {
            // the repair vertex took over `leg`; x now reaches it through a new edge
            *self.rotation(x).iter().find(|&&e| e != deeper).expect("degree two")
        } else {
            leg
        };
        (x, toward_boundary)
    }

    /// Inserts the bridge into the endpoint's rotation next to the edge
    /// towards the boundary: after it on the left side, before it on the right.
    fn place_bridge(&mut self, (w, toward_boundary): (VertexId, EdgeId), bridge: EdgeId, side: Side) {
        let rot = &mut self.rotation[w.0];
        let p = rot.iter().position(|&e| e == toward_boundary).expect("incident");
        match side {
            Side::Left => rot.insert(p + 1, bridge),
            Side::Right => rot.insert(p, bridge),
        }
    }

    /// Splits `e` with a new degree-two vertex of `color`. The piece at
    /// `keep` retains the id `e`; the other piece is a new edge. Returns the
    /// new vertex and the new edge.
    fn subdivide(&mut self, e: EdgeId, keep: VertexId, color: Color) -> (VertexId, EdgeId) {
        let far = self.other_end(e, keep);
        let y = VertexId(self.vertices.len());
        let fresh = EdgeId(self.edges.len());
        self.vertices.push(Vertex::interior(color));
        let (a, _) = self.edges[e.0];
        self.edges[e.0] = if a == keep { (keep, y) } else { (y, keep) };
        self.edges.push((y, far));
        for slot in self.rotation[far.0].iter_mut() {
            if *slot == e {
                *slot = fresh;
            }
        }
        self.rotation.push(vec![fresh, e]);
        (y, fresh)
    }
}
