//! Orbital invariants `a±`, `b`, `c`, the orbit dimension and the rank
//! matrix.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::orbit::{Graph, Incidence, Shape, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Invariants {
    pub a_plus: usize,
    pub a_minus: usize,
    pub b: usize,
    pub c: usize,
    pub dim: usize,
}

/// Pairs `i < j` on one side with `deg(i) < deg(j)`.
fn degree_ascents(g: &Graph, side: Side) -> usize {
    let degs: Vec<u8> = g.incidences(side).iter().map(|inc| inc.degree()).collect();
    let mut count = 0;
    for i in 0..degs.len() {
        for j in i + 1..degs.len() {
            if degs[i] < degs[j] {
                count += 1;
            }
        }
    }
    count
}

/// Pairs of edges `(i, j)`, `(k, l)` with `i < k` and `j > l`.
fn crossings(g: &Graph) -> usize {
    let edges = g.edges();
    let mut count = 0;
    for (a, &(_, j)) in edges.iter().enumerate() {
        // edges are sorted by + endpoint
        count += edges[a + 1..].iter().filter(|&&(_, l)| j > l).count();
    }
    count
}

/// `p(p-1)/2 + q(q-1)/2 + a+ + a- + b(b+1)/2 + c`.
pub fn orbit_dimension(shape: &Shape, a_plus: usize, a_minus: usize, b: usize, c: usize) -> usize {
    shape.flag_dim() + a_plus + a_minus + b * (b + 1) / 2 + c
}

pub fn invariants(g: &Graph) -> Invariants {
    let a_plus = degree_ascents(g, Side::Plus);
    let a_minus = degree_ascents(g, Side::Minus);
    let b = g.num_edges();
    let c = crossings(g);
    Invariants {
        a_plus,
        a_minus,
        b,
        c,
        dim: orbit_dimension(&g.shape(), a_plus, a_minus, b, c),
    }
}

/// `(p+1) x (q+1)` table indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RankMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl RankMatrix {
    pub fn zeros(p: usize, q: usize) -> Self {
        RankMatrix {
            rows: p + 1,
            cols: q + 1,
            entries: vec![0; (p + 1) * (q + 1)],
        }
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        RankMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.entries[i * self.cols + j] = value;
    }

    /// `(p + 1, q + 1)`.
    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.entries
            .chunks(self.cols)
            .map(<[u32]>::to_vec)
            .collect()
    }

    /// Entrywise `self >= other`.
    pub fn dominates(&self, other: &RankMatrix) -> bool {
        self.dims() == other.dims() && self.entries.iter().zip(&other.entries).all(|(a, b)| a >= b)
    }

    /// Corner values, unit steps along rows and columns, and
    /// `R[i][j] + R[i-1][j-1] >= R[i-1][j] + R[i][j-1]`. Returns the first
    /// violation found.
    pub fn check(&self, r: usize) -> Result<(), String> {
        let (rows, cols) = self.dims();
        if self.get(0, 0) != 0 {
            return Err("R[0][0] != 0".into());
        }
        if self.get(rows - 1, cols - 1) as usize != r {
            return Err(format!("R[p][q] != r = {r}"));
        }
        for i in 0..rows {
            for j in 0..cols {
                let x = self.get(i, j);
                if i > 0 && !matches!(x.checked_sub(self.get(i - 1, j)), Some(0 | 1)) {
                    return Err(format!(
                        "step R[{i}][{j}] - R[{}][{j}] not in {{0,1}}",
                        i - 1
                    ));
                }
                if j > 0 && !matches!(x.checked_sub(self.get(i, j - 1)), Some(0 | 1)) {
                    return Err(format!(
                        "step R[{i}][{j}] - R[{i}][{}] not in {{0,1}}",
                        j - 1
                    ));
                }
                if i > 0
                    && j > 0
                    && x + self.get(i - 1, j - 1) < self.get(i - 1, j) + self.get(i, j - 1)
                {
                    return Err(format!("supermodularity fails at ({i}, {j})"));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for RankMatrix {
    /// Rows separated by `/`, entries by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&rows.join("/"))
    }
}

/// `R[i][j]` = edges inside `{1+..i+} x {1-..j-}` plus marked vertices
/// among `1+..i+` and `1-..j-`.
pub fn rank_matrix(g: &Graph) -> RankMatrix {
    let shape = g.shape();
    let (p, q) = (shape.p(), shape.q());
    // per-cell contribution, then 2D prefix sums
    let mut cell = RankMatrix::zeros(p, q);
    for (i, inc) in g.incidences(Side::Plus).iter().enumerate() {
        match *inc {
            Incidence::Edge(j) => cell.set(i + 1, j, cell.get(i + 1, j) + 1),
            Incidence::Marked => cell.set(i + 1, 0, cell.get(i + 1, 0) + 1),
            Incidence::Free => {}
        }
    }
    for j in g.marked_minus() {
        cell.set(0, j, cell.get(0, j) + 1);
    }
    let mut out = RankMatrix::zeros(p, q);
    for i in 0..=p {
        for j in 0..=q {
            let mut v = cell.get(i, j);
            if i > 0 {
                v += out.get(i - 1, j);
            }
            if j > 0 {
                v += out.get(i, j - 1);
            }
            if i > 0 && j > 0 {
                v -= out.get(i - 1, j - 1);
            }
            out.set(i, j, v);
        }
    }
    out
}
