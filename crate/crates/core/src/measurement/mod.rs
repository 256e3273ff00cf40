//! The boundary measurement map, gauge transformations and the
//! gauge-forest normal form of symmetric weightings.

mod forest;

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::combinatorics::KSubset;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, PlabicGraph, VertexId};
use crate::plucker::PluckerVector;
use crate::rational::{self, Rational};

pub use forest::GaugeForest;

/// A plabic graph with a positive rational weight on every edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedPlabicGraph {
    graph: PlabicGraph,
    weights: Vec<Rational>,
}

impl WeightedPlabicGraph {
    pub fn new(graph: PlabicGraph, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != graph.edge_count() {
            return Err(Error::WeightCount { expected: graph.edge_count(), found: weights.len() });
        }
        if let Some(w) = weights.iter().find(|w| !rational::is_positive(w)) {
            return Err(Error::NonPositiveWeight(rational::format(w)));
        }
        Ok(WeightedPlabicGraph { graph, weights })
    }

    /// Every edge weighted one.
    pub fn unit(graph: PlabicGraph) -> Self {
        let weights = vec![Rational::one(); graph.edge_count()];
        WeightedPlabicGraph { graph, weights }
    }

    pub fn graph(&self) -> &PlabicGraph {
        &self.graph
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, e: EdgeId) -> &Rational {
        &self.weights[e.0]
    }

    pub fn into_parts(self) -> (PlabicGraph, Vec<Rational>) {
        (self.graph, self.weights)
    }

    /// `Δ_J = Σ_{∂(P) = J} t^P` over all almost perfect matchings,
    /// canonically scaled.
    pub fn boundary_measurement(&self) -> Result<PluckerVector> {
        self.graph.require_structure()?;
        let mut sums: BTreeMap<KSubset, Rational> = BTreeMap::new();
        let mut failure = None;
        self.graph.for_each_matching(&mut |m| match self.graph.boundary_subset(m) {
            Ok(j) => {
                let product: Rational = m.iter().map(|e| &self.weights[e.0]).product();
                *sums.entry(j).or_insert_with(Rational::zero) += product;
                true
            }
            Err(e) => {
                failure = Some(e);
                false
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        let k = sums.keys().next().ok_or(Error::NoMatching)?.len();
        if let Some(j) = sums.keys().find(|j| j.len() != k) {
            return Err(Error::SizeMismatch { left: k, right: j.len() });
        }
        PluckerVector::new(self.graph.boundary_count(), k, sums)
    }

    /// Multiplies the weight of every edge at the interior vertex `v` by `lambda`.
    pub fn gauge(&self, v: VertexId, lambda: &Rational) -> Result<Self> {
        if !rational::is_positive(lambda) {
            return Err(Error::NonPositiveWeight(rational::format(lambda)));
        }
        if v.0 >= self.graph.vertex_count() || self.graph.is_boundary(v) {
            return Err(Error::NotInterior(v.0));
        }
        let mut weights = self.weights.clone();
        for &e in self.graph.rotation(v) {
            weights[e.0] = &weights[e.0] * lambda;
        }
        Ok(WeightedPlabicGraph { graph: self.graph.clone(), weights })
    }

    fn involution(&self) -> Result<Vec<VertexId>> {
        match self.graph.symmetry() {
            Some(r) => Ok(r.to_vec()),
            None => self.graph.infer_symmetry().ok_or(Error::MissingSymmetry),
        }
    }

    /// Each edge has the weight of its mirror image. Parallel edges are
    /// compared as multisets of weights.
    pub fn is_symmetric_weighting(&self) -> Result<bool> {
        let r = self.involution()?;
        let key = |a: VertexId, b: VertexId| (a.0.min(b.0), a.0.max(b.0));
        let mut by_pair: BTreeMap<(usize, usize), Vec<&Rational>> = BTreeMap::new();
        for (e, &(a, b)) in self.graph.edges().iter().enumerate() {
            by_pair.entry(key(a, b)).or_default().push(&self.weights[e]);
        }
        for list in by_pair.values_mut() {
            list.sort();
        }
        Ok(by_pair
            .iter()
            .all(|(&(a, b), ws)| by_pair.get(&key(r[a], r[b])) == Some(ws)))
    }

    /// The gauge-equivalent weighting normalized on the symmetric forest;
    /// symmetric whenever the image is a symmetric point.
    pub fn symmetrize(&self) -> Result<Self> {
        let r = self.involution()?;
        if !self.boundary_measurement()?.is_symmetric()? {
            return Err(Error::NotSymmetric("point"));
        }
        let forest = GaugeForest::symmetric(&self.graph, &r)?;
        forest.normalize(self)
    }
}
