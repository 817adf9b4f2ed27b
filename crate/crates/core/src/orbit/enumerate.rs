//! Constructive enumeration of all orbit graphs and the closed-form count.

use itertools::Itertools;

use crate::orbit::{Graph, Incidence, Shape, Triple};

/// Triples `(k, s, t)` with `k + s <= p`, `k + t <= q`, `k + s + t = r`,
/// in lexicographic order.
pub fn admissible_triples(shape: &Shape) -> Vec<Triple> {
    let (p, q, r) = (shape.p(), shape.q(), shape.r());
    let mut out = Vec::new();
    for k in 0..=p.min(q).min(r) {
        for s in 0..=(p - k).min(r - k) {
            let t = r - k - s;
            if k + t <= q {
                out.push(Triple { k, s, t });
            }
        }
    }
    out
}

/// All graphs of the given shape.
///
/// Order: by triple, then the edge `+` endpoints `I`, the edge `-` endpoints
/// `J`, the pairing as the word `(σ(j_1), .., σ(j_k))`, the marked `+`
/// vertices and the marked `-` vertices, each lexicographically.
pub fn enumerate_graphs(shape: &Shape) -> Vec<Graph> {
    let (p, q) = (shape.p(), shape.q());
    let mut out = Vec::new();
    for triple in admissible_triples(shape) {
        let Triple { k, s, t } = triple;
        for plus_ends in (1..=p).combinations(k) {
            for minus_ends in (1..=q).combinations(k) {
                let plus_rest: Vec<usize> = (1..=p).filter(|i| !plus_ends.contains(i)).collect();
                let minus_rest: Vec<usize> = (1..=q).filter(|j| !minus_ends.contains(j)).collect();
                for sigma in plus_ends.iter().copied().permutations(k) {
                    for marked_plus in plus_rest.iter().copied().combinations(s) {
                        for marked_minus in minus_rest.iter().copied().combinations(t) {
                            let mut plus = vec![Incidence::Free; p];
                            let mut minus = vec![Incidence::Free; q];
                            for (&j, &i) in minus_ends.iter().zip(&sigma) {
                                plus[i - 1] = Incidence::Edge(j);
                                minus[j - 1] = Incidence::Edge(i);
                            }
                            for &i in &marked_plus {
                                plus[i - 1] = Incidence::Marked;
                            }
                            for &j in &marked_minus {
                                minus[j - 1] = Incidence::Marked;
                            }
                            out.push(Graph::from_incidences(*shape, plus, minus));
                        }
                    }
                }
            }
        }
    }
    out
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `n! / (a! b! c!)` for `a + b + c = n`.
pub fn multinomial3(n: usize, a: usize, b: usize, c: usize) -> u128 {
    debug_assert_eq!(a + b + c, n);
    factorial(n) / (factorial(a) * factorial(b) * factorial(c))
}

/// Number of graphs (equivalently K-orbits) with a given triple:
/// `binom(p; k, s, s') binom(q; k, t, t') k!`.
pub fn orbits_with_triple(shape: &Shape, triple: &Triple) -> u128 {
    let Triple { k, s, t } = *triple;
    multinomial3(shape.p(), k, s, triple.s_prime(shape))
        * multinomial3(shape.q(), k, t, triple.t_prime(shape))
        * factorial(k)
}

/// Order of the stabilizer `ΔS_k x S_s x S_s' x S_t x S_t'`.
pub fn stabilizer_order(shape: &Shape, triple: &Triple) -> u128 {
    factorial(triple.k)
        * factorial(triple.s)
        * factorial(triple.s_prime(shape))
        * factorial(triple.t)
        * factorial(triple.t_prime(shape))
}

/// Closed-form orbit count, summed over admissible triples.
pub fn count_orbits(shape: &Shape) -> u128 {
    admissible_triples(shape)
        .iter()
        .map(|t| orbits_with_triple(shape, t))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn shape_222_has_sixteen_orbits() {
        let shape = Shape::new(2, 2, 2).unwrap();
        assert_eq!(enumerate_graphs(&shape).len(), 16);
        // 1 + 4 + 1 + 4 + 4 + 2 over (0,0,2), (0,1,1), (0,2,0), (1,0,1), (1,1,0), (2,0,0)
        let per_triple: Vec<u128> = admissible_triples(&shape)
            .iter()
            .map(|t| orbits_with_triple(&shape, t))
            .collect();
        assert_eq!(per_triple, vec![1, 4, 1, 4, 4, 2]);
        assert_eq!(count_orbits(&shape), 16);
    }

    #[test]
    fn shape_112_has_one_orbit() {
        let shape = Shape::new(1, 1, 2).unwrap();
        let graphs = enumerate_graphs(&shape);
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].marked_plus(), vec![1]);
        assert_eq!(graphs[0].marked_minus(), vec![1]);
        assert_eq!(
            admissible_triples(&shape),
            vec![Triple { k: 0, s: 1, t: 1 }]
        );
    }

    #[test]
    fn rank_zero_is_a_single_empty_graph() {
        for (p, q) in [(1, 1), (3, 2), (2, 4)] {
            let shape = Shape::new(p, q, 0).unwrap();
            let graphs = enumerate_graphs(&shape);
            assert_eq!(graphs.len(), 1);
            assert!(graphs[0].edges().is_empty());
            assert_eq!(count_orbits(&shape), 1);
        }
    }

    #[test]
    fn full_rank_is_a_single_orbit() {
        let shape = Shape::new(2, 3, 5).unwrap();
        let graphs = enumerate_graphs(&shape);
        assert_eq!(graphs.len(), 1);
        assert_eq!(graphs[0].marked_plus(), vec![1, 2]);
        assert_eq!(graphs[0].marked_minus(), vec![1, 2, 3]);
    }

    #[test]
    fn enumeration_has_no_duplicates_and_is_deterministic() {
        let shape = Shape::new(3, 3, 3).unwrap();
        let a = enumerate_graphs(&shape);
        let set: HashSet<_> = a.iter().collect();
        assert_eq!(set.len(), a.len());
        assert_eq!(a, enumerate_graphs(&shape));
    }

    #[test]
    fn enumeration_order_starts_with_marks_only() {
        let shape = Shape::new(2, 2, 2).unwrap();
        let graphs = enumerate_graphs(&shape);
        // (0,0,2) first, then (0,1,1) with marked_plus {1} and marked_minus {1}
        assert_eq!(graphs[0].marked_minus(), vec![1, 2]);
        assert_eq!(graphs[1].marked_plus(), vec![1]);
        assert_eq!(graphs[1].marked_minus(), vec![1]);
        // last: the two-edge graphs, sigma words (1,2) then (2,1)
        assert_eq!(graphs[14].edges(), vec![(1, 1), (2, 2)]);
        assert_eq!(graphs[15].edges(), vec![(1, 2), (2, 1)]);
    }

    #[test]
    fn example_shape_count() {
        let shape = Shape::new(5, 3, 4).unwrap();
        assert_eq!(count_orbits(&shape), enumerate_graphs(&shape).len() as u128);
        assert_eq!(count_orbits(&shape), 850);
    }
}
