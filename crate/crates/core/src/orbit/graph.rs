//! Marked bipartite graphs labelling the K-orbits.
//!
//! A graph has `p` positive vertices `1+..p+` and `q` negative vertices
//! `1-..q-`. Every vertex is either free, the endpoint of exactly one edge
//! joining a `+` vertex to a `-` vertex, or marked. Vertices are 1-based
//! everywhere in the public API.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbit::Shape;

/// What sits at a vertex. `Edge` carries the 1-based label of the partner
/// vertex on the other side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Incidence {
    Free,
    Edge(usize),
    Marked,
}

impl Incidence {
    /// 0 for free, 1 for an edge endpoint, 2 for marked.
    pub fn degree(self) -> u8 {
        match self {
            Incidence::Free => 0,
            Incidence::Edge(_) => 1,
            Incidence::Marked => 2,
        }
    }
}

/// Which block of vertices (and of `K`) an index refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn sign(self) -> char {
        match self {
            Side::Plus => '+',
            Side::Minus => '-',
        }
    }
}

/// `(k, s, t)`: number of edges, of marked `+` vertices, of marked `-`
/// vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub k: usize,
    pub s: usize,
    pub t: usize,
}

impl Triple {
    /// Free `+` vertices, `p - k - s`.
    pub fn s_prime(&self, shape: &Shape) -> usize {
        shape.p() - self.k - self.s
    }

    /// Free `-` vertices, `q - k - t`.
    pub fn t_prime(&self, shape: &Shape) -> usize {
        shape.q() - self.k - self.t
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k, self.s, self.t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "GraphRecord", into = "GraphRecord")]
pub struct Graph {
    shape: Shape,
    plus: Vec<Incidence>,
    minus: Vec<Incidence>,
}

/// JSON interchange form. Field order is alphabetical so serialized keys
/// come out sorted.
#[derive(Serialize, Deserialize)]
struct GraphRecord {
    edges: Vec<[usize; 2]>,
    marked_minus: Vec<usize>,
    marked_plus: Vec<usize>,
    p: usize,
    q: usize,
    r: usize,
}

impl TryFrom<GraphRecord> for Graph {
    type Error = Error;
    fn try_from(rec: GraphRecord) -> Result<Self> {
        let shape = Shape::new(rec.p, rec.q, rec.r)?;
        let edges: Vec<(usize, usize)> = rec.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(shape, &edges, &rec.marked_plus, &rec.marked_minus)
    }
}

impl From<Graph> for GraphRecord {
    fn from(g: Graph) -> Self {
        GraphRecord {
            edges: g.edges().into_iter().map(|(i, j)| [i, j]).collect(),
            marked_minus: g.marked_minus(),
            marked_plus: g.marked_plus(),
            p: g.shape.p(),
            q: g.shape.q(),
            r: g.shape.r(),
        }
    }
}

impl Graph {
    /// Validates and builds a graph. Edges are `(i, j)` pairs joining `i+`
    /// to `j-`; input order is irrelevant.
    pub fn new(
        shape: Shape,
        edges: &[(usize, usize)],
        marked_plus: &[usize],
        marked_minus: &[usize],
    ) -> Result<Self> {
        let mut plus = vec![Incidence::Free; shape.p()];
        let mut minus = vec![Incidence::Free; shape.q()];

        fn claim(slots: &mut [Incidence], v: usize, what: Incidence, sign: char) -> Result<()> {
            let slot = v
                .checked_sub(1)
                .and_then(|idx| slots.get_mut(idx))
                .ok_or_else(|| Error::InvalidGraph(format!("vertex {v}{sign} out of range")))?;
            if *slot != Incidence::Free {
                return Err(Error::InvalidGraph(format!(
                    "vertex {v}{sign} is incident to more than one edge or mark"
                )));
            }
            *slot = what;
            Ok(())
        }

        for &(i, j) in edges {
            claim(&mut plus, i, Incidence::Edge(j), '+')?;
            claim(&mut minus, j, Incidence::Edge(i), '-')?;
        }
        for &i in marked_plus {
            claim(&mut plus, i, Incidence::Marked, '+')?;
        }
        for &j in marked_minus {
            claim(&mut minus, j, Incidence::Marked, '-')?;
        }

        let total = edges.len() + marked_plus.len() + marked_minus.len();
        if total != shape.r() {
            return Err(Error::InvalidGraph(format!(
                "#edges + #marks = {total}, but r = {}",
                shape.r()
            )));
        }
        Ok(Graph { shape, plus, minus })
    }

    /// Builds from incidence vectors, checking that edges pair up.
    pub(crate) fn from_incidences(
        shape: Shape,
        plus: Vec<Incidence>,
        minus: Vec<Incidence>,
    ) -> Self {
        debug_assert_eq!(plus.len(), shape.p());
        debug_assert_eq!(minus.len(), shape.q());
        debug_assert!(plus.iter().enumerate().all(|(i, inc)| match inc {
            Incidence::Edge(j) => minus[j - 1] == Incidence::Edge(i + 1),
            _ => true,
        }));
        Graph { shape, plus, minus }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// Incidence at a 1-based vertex on the given side.
    pub fn incidence(&self, side: Side, v: usize) -> Incidence {
        match side {
            Side::Plus => self.plus[v - 1],
            Side::Minus => self.minus[v - 1],
        }
    }

    pub fn degree(&self, side: Side, v: usize) -> u8 {
        self.incidence(side, v).degree()
    }

    pub(crate) fn incidences(&self, side: Side) -> &[Incidence] {
        match side {
            Side::Plus => &self.plus,
            Side::Minus => &self.minus,
        }
    }

    /// Edges `(i, j)` sorted by `i`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.plus
            .iter()
            .enumerate()
            .filter_map(|(i, inc)| match inc {
                Incidence::Edge(j) => Some((i + 1, *j)),
                _ => None,
            })
            .collect()
    }

    pub fn marked_plus(&self) -> Vec<usize> {
        marked(&self.plus)
    }

    pub fn marked_minus(&self) -> Vec<usize> {
        marked(&self.minus)
    }

    pub fn num_edges(&self) -> usize {
        self.plus
            .iter()
            .filter(|inc| matches!(inc, Incidence::Edge(_)))
            .count()
    }

    pub fn triple(&self) -> Triple {
        let count = |v: &[Incidence]| v.iter().filter(|i| **i == Incidence::Marked).count();
        Triple {
            k: self.num_edges(),
            s: count(&self.plus),
            t: count(&self.minus),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }
}

fn marked(v: &[Incidence]) -> Vec<usize> {
    v.iter()
        .enumerate()
        .filter(|(_, inc)| **inc == Incidence::Marked)
        .map(|(i, _)| i + 1)
        .collect()
}

impl fmt::Display for Graph {
    /// Compact text form, e.g. `E[2-3,4-1] M+[5] M-[2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: Vec<usize>| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        let edges = self
            .edges()
            .iter()
            .map(|(i, j)| format!("{i}-{j}"))
            .collect::<Vec<_>>()
            .join(",");
        write!(
            f,
            "E[{edges}] M+[{}] M-[{}]",
            list(self.marked_plus()),
            list(self.marked_minus())
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Graph {
        let shape = Shape::new(5, 3, 4).unwrap();
        Graph::new(shape, &[(4, 1), (2, 3)], &[5], &[2]).unwrap()
    }

    #[test]
    fn accessors_are_sorted() {
        let g = example();
        assert_eq!(g.edges(), vec![(2, 3), (4, 1)]);
        assert_eq!(g.marked_plus(), vec![5]);
        assert_eq!(g.marked_minus(), vec![2]);
        assert_eq!(g.triple(), Triple { k: 2, s: 1, t: 1 });
        assert_eq!(g.degree(Side::Plus, 1), 0);
        assert_eq!(g.degree(Side::Plus, 2), 1);
        assert_eq!(g.degree(Side::Plus, 5), 2);
        assert_eq!(g.incidence(Side::Minus, 3), Incidence::Edge(2));
    }

    #[test]
    fn rejects_bad_graphs() {
        let shape = Shape::new(2, 2, 2).unwrap();
        // shared vertex
        assert!(Graph::new(shape, &[(1, 1), (1, 2)], &[], &[]).is_err());
        // edge endpoint also marked
        assert!(Graph::new(shape, &[(1, 1)], &[1], &[]).is_err());
        // out of range
        assert!(Graph::new(shape, &[(3, 1)], &[1], &[]).is_err());
        assert!(Graph::new(shape, &[(0, 1)], &[1], &[]).is_err());
        // wrong rank
        assert!(Graph::new(shape, &[(1, 1)], &[], &[]).is_err());
    }

    #[test]
    fn json_keys_sorted_and_round_trip() {
        let g = example();
        let json = g.to_json();
        assert_eq!(
            json,
            r#"{"edges":[[2,3],[4,1]],"marked_minus":[2],"marked_plus":[5],"p":5,"q":3,"r":4}"#
        );
        let back: Graph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn json_rejects_invalid() {
        let bad = r#"{"edges":[[1,1]],"marked_minus":[],"marked_plus":[1],"p":2,"q":2,"r":2}"#;
        assert!(serde_json::from_str::<Graph>(bad).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(example().to_string(), "E[2-3,4-1] M+[5] M-[2]");
    }
}
