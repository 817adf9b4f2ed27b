//! The Weyl group `W_K = S_p x S_q` and its action on graphs by relabelling
//! vertices.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbit::{Graph, Incidence, Side};

/// A permutation of `{1..n}`. Stored 0-based; the API is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// From the 1-based image list `[w(1), .., w(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation(images.iter().map(|x| x - 1).collect()))
    }

    /// The simple transposition `(i, i+1)` in `S_n`.
    pub fn transposition(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidPermutation(format!(
                "simple transposition ({i}, {}) is not in S_{n}",
                i + 1
            )));
        }
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i - 1, i);
        Ok(Permutation(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, x: usize) -> usize {
        self.0[x - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different sizes"
        );
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// All of `S_n` in lexicographic order of image lists.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(Permutation)
    }
}

/// An element `(w+, w-)` of `S_p x S_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    pub plus: Permutation,
    pub minus: Permutation,
}

impl WeylElement {
    pub fn identity(p: usize, q: usize) -> Self {
        WeylElement {
            plus: Permutation::identity(p),
            minus: Permutation::identity(q),
        }
    }

    /// The simple reflection `s_i` on one side, identity on the other.
    pub fn simple(p: usize, q: usize, side: Side, i: usize) -> Result<Self> {
        let mut w = Self::identity(p, q);
        match side {
            Side::Plus => w.plus = Permutation::transposition(p, i)?,
            Side::Minus => w.minus = Permutation::transposition(q, i)?,
        }
        Ok(w)
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            plus: self.plus.compose(&other.plus),
            minus: self.minus.compose(&other.minus),
        }
    }
}

/// Relabels vertices: the edge `(i, j)` goes to `(w+(i), w-(j))`, marks
/// move along.
pub fn weyl_act(w: &WeylElement, g: &Graph) -> Result<Graph> {
    let shape = g.shape();
    if w.plus.len() != shape.p() || w.minus.len() != shape.q() {
        return Err(Error::InvalidPermutation(format!(
            "Weyl element in S_{} x S_{} cannot act on shape {shape}",
            w.plus.len(),
            w.minus.len()
        )));
    }
    let relabel = |src: &[Incidence], own: &Permutation, other: &Permutation| {
        let mut out = vec![Incidence::Free; src.len()];
        for (v, inc) in src.iter().enumerate() {
            out[own.apply(v + 1) - 1] = match *inc {
                Incidence::Edge(partner) => Incidence::Edge(other.apply(partner)),
                x => x,
            };
        }
        out
    };
    let plus = relabel(g.incidences(Side::Plus), &w.plus, &w.minus);
    let minus = relabel(g.incidences(Side::Minus), &w.minus, &w.plus);
    Ok(Graph::from_incidences(shape, plus, minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::{enumerate_graphs, Shape};
    use proptest::prelude::*;

    fn shape222() -> Shape {
        Shape::new(2, 2, 2).unwrap()
    }

    #[test]
    fn identity_acts_trivially() {
        for g in enumerate_graphs(&shape222()) {
            assert_eq!(weyl_act(&WeylElement::identity(2, 2), &g).unwrap(), g);
        }
    }

    #[test]
    fn simple_reflection_relabels_edges() {
        let g = Graph::new(shape222(), &[(1, 1), (2, 2)], &[], &[]).unwrap();
        let s1 = WeylElement::simple(2, 2, Side::Plus, 1).unwrap();
        let h = weyl_act(&s1, &g).unwrap();
        assert_eq!(h.edges(), vec![(1, 2), (2, 1)]);
    }

    #[test]
    fn simple_reflection_moves_marks() {
        let g = Graph::new(Shape::new(2, 2, 1).unwrap(), &[], &[1], &[]).unwrap();
        let s1 = WeylElement::simple(2, 2, Side::Plus, 1).unwrap();
        assert_eq!(weyl_act(&s1, &g).unwrap().marked_plus(), vec![2]);
    }

    #[test]
    fn size_mismatch_is_rejected() {
        let g = Graph::new(shape222(), &[(1, 1), (2, 2)], &[], &[]).unwrap();
        assert!(weyl_act(&WeylElement::identity(3, 2), &g).is_err());
        assert!(WeylElement::simple(2, 2, Side::Minus, 2).is_err());
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
    }

    #[test]
    fn permutation_basics() {
        let w = Permutation::from_images(&[2, 3, 1]).unwrap();
        assert_eq!(w.apply(1), 2);
        assert_eq!(w.compose(&w.inverse()), Permutation::identity(3));
        assert_eq!(Permutation::all(4).count(), 24);
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(&v).unwrap())
    }

    proptest! {
        #[test]
        fn action_is_a_homomorphism(
            v1 in arb_perm(3), v2 in arb_perm(3), w1 in arb_perm(3), w2 in arb_perm(3),
            idx in 0usize..1000,
        ) {
            let shape = Shape::new(3, 3, 3).unwrap();
            let graphs = enumerate_graphs(&shape);
            let g = &graphs[idx % graphs.len()];
            let v = WeylElement { plus: v1, minus: v2 };
            let w = WeylElement { plus: w1, minus: w2 };
            let lhs = weyl_act(&v.compose(&w), g).unwrap();
            let rhs = weyl_act(&v, &weyl_act(&w, g).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
