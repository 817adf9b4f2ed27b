//! Points of `Gr_r(F_q^n)` as reduced row echelon bases, and their rank
//! profiles against the standard flags.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::orbit::{Graph, Incidence, RankMatrix, Shape, Side};
use crate::scalar::Fp;

/// Largest Grassmannian the oracle will enumerate.
pub const POINT_BUDGET: u128 = 250_000;

/// `[n choose r]_q`, the number of `r`-dimensional subspaces of `F_q^n`.
/// Saturates at `u128::MAX`.
pub fn gaussian_binomial(n: usize, r: usize, q: u128) -> u128 {
    if r > n {
        return 0;
    }
    // [m, k] = [m-1, k-1] + q^k [m-1, k]
    let mut row = vec![0u128; r + 1];
    row[0] = 1;
    for m in 1..=n {
        for k in (1..=r.min(m)).rev() {
            let qk = q.saturating_pow(k as u32);
            row[k] = row[k - 1].saturating_add(qk.saturating_mul(row[k]));
        }
    }
    row[r]
}

/// An `r`-dimensional subspace `W ⊆ F_P^{p+q}`, stored by its RREF basis.
/// Coordinates `0..p` are `e_1+ .. e_p+`, then `e_1- .. e_q-`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FFSubspace<const P: u32> {
    shape: Shape,
    basis: Vec<Vec<Fp<P>>>,
}

impl<const P: u32> FFSubspace<P> {
    /// Span of `r` vectors of length `n`; fails unless they are independent.
    pub fn from_spanning(shape: Shape, vectors: Vec<Vec<Fp<P>>>) -> Result<Self> {
        if vectors.len() != shape.r() || vectors.iter().any(|v| v.len() != shape.n()) {
            return Err(Error::InvalidMatrix(format!(
                "need {} vectors of length {}",
                shape.r(),
                shape.n()
            )));
        }
        if shape.r() == 0 {
            return Ok(FFSubspace {
                shape,
                basis: vectors,
            });
        }
        let mut m = Matrix::from_rows(vectors);
        let pivots = m.rref();
        if pivots.len() != shape.r() {
            return Err(Error::InvalidMatrix("vectors are dependent".into()));
        }
        let basis = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        Ok(FFSubspace { shape, basis })
    }

    /// The base point `[τ]` of the orbit labelled by `g`: `e_i+ + e_j-` per
    /// edge, `e_i+` and `e_j-` per marked vertex.
    pub fn from_graph(g: &Graph) -> Self {
        let shape = g.shape();
        let p = shape.p();
        let mut vectors = Vec::new();
        for i in 1..=p {
            match g.incidence(Side::Plus, i) {
                Incidence::Free => continue,
                inc => {
                    let mut v = vec![Fp::new(0); shape.n()];
                    v[i - 1] = Fp::new(1);
                    if let Incidence::Edge(j) = inc {
                        v[p + j - 1] = Fp::new(1);
                    }
                    vectors.push(v);
                }
            }
        }
        for j in g.marked_minus() {
            let mut v = vec![Fp::new(0); shape.n()];
            v[p + j - 1] = Fp::new(1);
            vectors.push(v);
        }
        Self::from_spanning(shape, vectors).expect("graph vectors are independent")
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn basis(&self) -> &[Vec<Fp<P>>] {
        &self.basis
    }
}

/// All points of `Gr_r(F_P^n)`, each once, by pivot columns and then the
/// free entries to the right of each pivot.
pub fn enumerate_grassmannian<const P: u32>(shape: &Shape) -> Result<Vec<FFSubspace<P>>> {
    let (n, r) = (shape.n(), shape.r());
    let needed = gaussian_binomial(n, r, P as u128);
    if needed > POINT_BUDGET {
        return Err(Error::BudgetExceeded {
            needed,
            budget: POINT_BUDGET,
        });
    }
    let mut out = Vec::with_capacity(needed as usize);
    for pivots in (0..n).combinations(r) {
        // (row, column) slots that are free in this echelon shape
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(row, &c)| {
                let pivots = &pivots;
                (c + 1..n)
                    .filter(move |j| !pivots.contains(j))
                    .map(move |j| (row, j))
            })
            .collect();
        let choices = (0..free.len())
            .map(|_| Fp::<P>::elements())
            .multi_cartesian_product();
        let mut emit = |values: &[Fp<P>]| {
            let mut basis = vec![vec![Fp::new(0); n]; r];
            for (row, &c) in pivots.iter().enumerate() {
                basis[row][c] = Fp::new(1);
            }
            for (&(row, col), &v) in free.iter().zip(values) {
                basis[row][col] = v;
            }
            out.push(FFSubspace {
                shape: *shape,
                basis,
            });
        };
        if free.is_empty() {
            emit(&[]);
        } else {
            for values in choices {
                emit(&values);
            }
        }
    }
    debug_assert_eq!(out.len() as u128, needed);
    Ok(out)
}

/// `dim(W ∩ U_ij)` for every `i <= p`, `j <= q`, where `U_ij` is spanned by
/// the first `i` plus and first `j` minus coordinates. `rows` must span `W`
/// and be independent; they need not be reduced.
pub(crate) fn profile_of_rows<const P: u32>(shape: &Shape, rows: &[Vec<Fp<P>>]) -> RankMatrix {
    let (p, q, r) = (shape.p(), shape.q(), shape.r());
    let mut out = RankMatrix::zeros(p, q);
    if r == 0 {
        return out;
    }
    let m = Matrix::from_rows(rows.to_vec());
    for i in 0..=p {
        for j in 0..=q {
            // W ∩ U is the kernel of the projection of W onto the remaining
            // coordinates
            let outside: Vec<usize> = (i..p).chain(p + j..p + q).collect();
            let rank = if outside.is_empty() {
                0
            } else {
                m.select_columns(&outside).rank()
            };
            out.set(i, j, (r - rank) as u32);
        }
    }
    out
}

pub fn rank_profile<const P: u32>(w: &FFSubspace<P>) -> RankMatrix {
    profile_of_rows(&w.shape, &w.basis)
}
