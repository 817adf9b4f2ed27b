//! Closure order on K-orbits and its Hasse diagram.
//!
//! `closure(O_a) ⊆ closure(O_b)` exactly when the rank matrix of `a`
//! dominates that of `b` entrywise, so the smaller orbit carries the larger
//! rank matrix.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbit::{enumerate_graphs, invariants, rank_matrix, Graph, RankMatrix, Shape};

pub fn closure_leq(a: &Graph, b: &Graph) -> Result<bool> {
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch(a.shape(), b.shape()));
    }
    Ok(rank_matrix(a).dominates(&rank_matrix(b)))
}

/// Orbits in enumeration order with the closure order, its covers and the
/// orbit dimensions. Relations are stored by index.
#[derive(Clone, Debug)]
pub struct OrbitPoset {
    shape: Shape,
    orbits: Vec<Graph>,
    dims: Vec<usize>,
    /// `above[a]` holds every `b` with `a < b` strictly.
    above: Vec<FixedBitSet>,
    covers: Vec<(usize, usize)>,
}

impl OrbitPoset {
    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn orbits(&self) -> &[Graph] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.above[a].contains(b)
    }

    /// `(lower, upper)` pairs, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&a| self.above[a].is_clear())
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&b| (0..self.len()).all(|a| a == b || !self.above[a].contains(b)))
            .collect()
    }

    /// Number of orbits of each dimension.
    pub fn dim_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for &d in &self.dims {
            *h.entry(d).or_insert(0) += 1;
        }
        h
    }

    /// Graphviz rendering: one node per orbit labelled with its JSON record
    /// and dimension, one rank per dimension, covers drawn upward.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph closure {{");
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=box, fontsize=10];");
        for (idx, g) in self.orbits.iter().enumerate() {
            let label = format!(
                "{}\\ndim {}",
                g.to_json().replace('"', "\\\""),
                self.dims[idx]
            );
            let _ = writeln!(out, "  n{idx} [label=\"{label}\"];");
        }
        let mut by_dim: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (idx, &d) in self.dims.iter().enumerate() {
            by_dim.entry(d).or_default().push(idx);
        }
        for (d, nodes) in by_dim {
            let names: Vec<String> = nodes.iter().map(|i| format!("n{i}")).collect();
            let _ = writeln!(
                out,
                "  {{ rank=same; /* dim {d} */ {}; }}",
                names.join("; ")
            );
        }
        for &(lo, hi) in &self.covers {
            let _ = writeln!(out, "  n{lo} -> n{hi} [arrowhead=none];");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_report(&self) -> PosetReport {
        PosetReport {
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
            nodes: self
                .orbits
                .iter()
                .enumerate()
                .map(|(index, g)| PosetNode {
                    dim: self.dims[index],
                    graph: g.clone(),
                    index,
                })
                .collect(),
            shape: self.shape,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PosetNode {
    pub dim: usize,
    pub graph: Graph,
    pub index: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PosetReport {
    pub covers: Vec<[usize; 2]>,
    pub nodes: Vec<PosetNode>,
    pub shape: Shape,
}

/// Builds the closure order from pairwise rank matrix comparisons and
/// extracts covers. Fails if a cover does not raise the dimension by
/// exactly one or if there is not a single dense orbit.
pub fn build_poset(shape: &Shape) -> Result<OrbitPoset> {
    let orbits = enumerate_graphs(shape);
    let n = orbits.len();
    let ranks: Vec<RankMatrix> = orbits.iter().map(rank_matrix).collect();
    let dims: Vec<usize> = orbits.iter().map(|g| invariants(g).dim).collect();

    let mut above = vec![FixedBitSet::with_capacity(n); n];
    let mut below = vec![FixedBitSet::with_capacity(n); n];
    for a in 0..n {
        for b in 0..n {
            if a != b && ranks[a].dominates(&ranks[b]) {
                above[a].insert(b);
                below[b].insert(a);
            }
        }
    }

    // a < b is a cover iff nothing lies strictly between them
    let mut covers = Vec::new();
    for (a, ups) in above.iter().enumerate() {
        for b in ups.ones() {
            if ups.is_disjoint(&below[b]) {
                covers.push((a, b));
            }
        }
    }

    for &(lower, upper) in &covers {
        if dims[upper] != dims[lower] + 1 {
            return Err(Error::GradingViolated {
                lower,
                upper,
                lower_dim: dims[lower],
                upper_dim: dims[upper],
            });
        }
    }

    let poset = OrbitPoset {
        shape: *shape,
        orbits,
        dims,
        above,
        covers,
    };
    let maxima = poset.maximal_elements();
    if maxima.len() != 1 {
        return Err(Error::NoUniqueMaximum(maxima.len()));
    }
    Ok(poset)
}
