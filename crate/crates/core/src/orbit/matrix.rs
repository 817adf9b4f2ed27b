//! Pairs of partial permutations and their passage to graphs.

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::orbit::{Graph, Incidence, Permutation, Shape};

/// A `(p+q) x r` 0/1 matrix whose top `p x r` and bottom `q x r` blocks are
/// partial permutations and which has full column rank `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialPermutationPair {
    shape: Shape,
    /// Row-major, `n` rows of length `r`.
    rows: Vec<Vec<u8>>,
}

impl PartialPermutationPair {
    pub fn new(shape: Shape, rows: Vec<Vec<u8>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidMatrix(msg));
        if rows.len() != shape.n() {
            return bad(format!("expected {} rows, got {}", shape.n(), rows.len()));
        }
        if let Some(row) = rows.iter().find(|row| row.len() != shape.r()) {
            return bad(format!("expected {} columns, got {}", shape.r(), row.len()));
        }
        if rows.iter().flatten().any(|&x| x > 1) {
            return bad("entries must be 0 or 1".into());
        }
        for (i, row) in rows.iter().enumerate() {
            if row.iter().filter(|&&x| x == 1).count() > 1 {
                return bad(format!("row {} has more than one 1", i + 1));
            }
        }
        let (top, bottom) = rows.split_at(shape.p());
        for col in 0..shape.r() {
            for (name, block) in [("top", top), ("bottom", bottom)] {
                if block.iter().filter(|row| row[col] == 1).count() > 1 {
                    return bad(format!(
                        "column {} of the {name} block has more than one 1",
                        col + 1
                    ));
                }
            }
        }
        let m = PartialPermutationPair { shape, rows };
        if m.rank_over_rationals() != shape.r() {
            return bad(format!("matrix is not of full rank {}", shape.r()));
        }
        Ok(m)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    fn rank_over_rationals(&self) -> usize {
        let m = Matrix::from_rows(
            self.rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&x| {
                            if x == 1 {
                                Ratio::<i64>::one()
                            } else {
                                Ratio::zero()
                            }
                        })
                        .collect()
                })
                .collect(),
        );
        m.rank()
    }

    /// Right multiplication by the `r x r` permutation matrix of `perm`:
    /// column `c` of the result is column `perm(c)` of `self`.
    pub fn permute_columns(&self, perm: &Permutation) -> Result<Self> {
        if perm.len() != self.shape.r() {
            return Err(Error::InvalidPermutation(format!(
                "column permutation has size {}, expected {}",
                perm.len(),
                self.shape.r()
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| (1..=row.len()).map(|c| row[perm.apply(c) - 1]).collect())
            .collect();
        Ok(PartialPermutationPair {
            shape: self.shape,
            rows,
        })
    }
}

/// Reads off the graph: a column with 1's at rows `i` (top) and `p + j`
/// (bottom) is the edge `(i, j)`; a column with a single 1 marks its vertex.
pub fn graph_from_matrix(m: &PartialPermutationPair) -> Graph {
    let shape = m.shape();
    let p = shape.p();
    let mut plus = vec![Incidence::Free; p];
    let mut minus = vec![Incidence::Free; shape.q()];
    for col in 0..shape.r() {
        let top = (0..p).find(|&i| m.rows[i][col] == 1);
        let bottom = (0..shape.q()).find(|&j| m.rows[p + j][col] == 1);
        match (top, bottom) {
            (Some(i), Some(j)) => {
                plus[i] = Incidence::Edge(j + 1);
                minus[j] = Incidence::Edge(i + 1);
            }
            (Some(i), None) => plus[i] = Incidence::Marked,
            (None, Some(j)) => minus[j] = Incidence::Marked,
            (None, None) => unreachable!("full rank excludes zero columns"),
        }
    }
    Graph::from_incidences(shape, plus, minus)
}

/// Canonical representative: columns for the edges sorted by `+` vertex,
/// then the marked `+` vertices, then the marked `-` vertices.
pub fn matrix_from_graph(g: &Graph) -> PartialPermutationPair {
    let shape = g.shape();
    let p = shape.p();
    let mut columns: Vec<Vec<usize>> = Vec::with_capacity(shape.r());
    for (i, j) in g.edges() {
        columns.push(vec![i - 1, p + j - 1]);
    }
    for i in g.marked_plus() {
        columns.push(vec![i - 1]);
    }
    for j in g.marked_minus() {
        columns.push(vec![p + j - 1]);
    }
    let mut rows = vec![vec![0u8; shape.r()]; shape.n()];
    for (c, support) in columns.iter().enumerate() {
        for &row in support {
            rows[row][c] = 1;
        }
    }
    PartialPermutationPair { shape, rows }
}
