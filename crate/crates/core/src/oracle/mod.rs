//! Finite-field ground truth. Enumerates `Gr_r(F_q^n)`, sorts points into
//! `B_K`-orbits by rank profile and recomputes the action of each generator
//! by counting, for comparison with [`crate::hecke`].
//!
//! Field sizes are chosen at runtime among [`SUPPORTED_FIELDS`] and
//! dispatched to the const-generic [`FieldOracle`].

mod counting;
mod grassmannian;

use std::collections::BTreeMap;

use serde::Serialize;

pub use counting::{Classification, FieldOracle, OrbitClass};
pub use grassmannian::{
    enumerate_grassmannian, gaussian_binomial, rank_profile, FFSubspace, POINT_BUDGET,
};

use crate::error::{Error, Result};
use crate::hecke::Generator;
use crate::orbit::{Graph, Shape};

/// Odd primes accepted as field sizes.
pub const SUPPORTED_FIELDS: [u32; 5] = [3, 5, 7, 11, 13];

pub fn check_field_size(size: u32) -> Result<()> {
    if SUPPORTED_FIELDS.contains(&size) {
        Ok(())
    } else {
        Err(Error::UnsupportedField(size))
    }
}

macro_rules! with_field {
    ($size:expr, $f:ident($($arg:expr),*)) => {
        match $size {
            3 => $f::<3>($($arg),*),
            5 => $f::<5>($($arg),*),
            7 => $f::<7>($($arg),*),
            11 => $f::<11>($($arg),*),
            13 => $f::<13>($($arg),*),
            other => Err(Error::UnsupportedField(other)),
        }
    };
}

fn classify_at<const P: u32>(shape: &Shape) -> Result<Classification> {
    Ok(FieldOracle::<P>::new(shape)?.classification())
}

/// Point counts of all orbits. Fails if the occurring profiles differ from
/// the graph rank matrices.
pub fn classify_orbits(shape: &Shape, field_size: u32) -> Result<Classification> {
    with_field!(field_size, classify_at(shape))
}

fn convolution_at<const P: u32>(
    shape: &Shape,
    generator: Generator,
    g: &Graph,
) -> Result<BTreeMap<usize, u64>> {
    let oracle = FieldOracle::<P>::new(shape)?;
    let tau = oracle
        .module()
        .index_of(g)
        .ok_or_else(|| Error::ShapeMismatch(g.shape(), *shape))?;
    Ok(oracle.convolution_columns(generator)?.swap_remove(tau))
}

/// `T_s ∗ ξ_g` by counting, keyed by orbit index in enumeration order.
pub fn convolution_action(
    shape: &Shape,
    field_size: u32,
    generator: Generator,
    g: &Graph,
) -> Result<BTreeMap<usize, u64>> {
    with_field!(field_size, convolution_at(shape, generator, g))
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificationEntry {
    pub field_size: u32,
    pub generator: Generator,
    pub orbit: usize,
    pub graph: Graph,
    /// Symbolic coefficients at `q = field_size`, as `[orbit, value]`.
    pub expected: Vec<(usize, i64)>,
    /// Counted coefficients, as `[orbit, value]`.
    pub observed: Vec<(usize, i64)>,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificationReport {
    pub shape: Shape,
    pub field_sizes: Vec<u32>,
    pub classifications: Vec<Classification>,
    pub entries: Vec<CertificationEntry>,
    pub mismatches: usize,
}

impl CertificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
            && self
                .classifications
                .iter()
                .all(Classification::sizes_sum_to_grassmannian)
    }
}

fn certify_at<const P: u32>(shape: &Shape) -> Result<(Classification, Vec<CertificationEntry>)> {
    let oracle = FieldOracle::<P>::new(shape)?;
    let module = oracle.module();
    let mut entries = Vec::new();
    for generator in module.generators() {
        let counted = oracle.convolution_columns(generator)?;
        for (tau, observed) in counted.into_iter().enumerate() {
            let expected: Vec<(usize, i64)> = module
                .act_on_basis(generator, tau)?
                .eval_at(i64::from(P))
                .into_iter()
                .collect();
            let observed: Vec<(usize, i64)> =
                observed.into_iter().map(|(i, c)| (i, c as i64)).collect();
            entries.push(CertificationEntry {
                field_size: P,
                generator,
                orbit: tau,
                graph: module.basis()[tau].clone(),
                matches: expected == observed,
                expected,
                observed,
            });
        }
    }
    Ok((oracle.classification(), entries))
}

/// Compares the symbolic action at `q = |F|` with the counted action for
/// every generator, orbit and field size.
pub fn certify_action(shape: &Shape, field_sizes: &[u32]) -> Result<CertificationReport> {
    let mut classifications = Vec::new();
    let mut entries = Vec::new();
    for &size in field_sizes {
        let (c, e) = with_field!(size, certify_at(shape))?;
        classifications.push(c);
        entries.extend(e);
    }
    let mismatches = entries.iter().filter(|e| !e.matches).count();
    Ok(CertificationReport {
        shape: *shape,
        field_sizes: field_sizes.to_vec(),
        classifications,
        entries,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::Side;

    #[test]
    fn unsupported_fields_are_rejected() {
        let s = Shape::new(1, 1, 1).unwrap();
        for bad in [2, 4, 9, 17] {
            assert!(matches!(
                classify_orbits(&s, bad),
                Err(Error::UnsupportedField(_))
            ));
            assert!(check_field_size(bad).is_err());
        }
        check_field_size(7).unwrap();
    }

    #[test]
    fn certification_small_shapes() {
        for (p, q, r, fields) in [
            (2, 2, 2, vec![3, 5]),
            (2, 1, 1, vec![3, 5, 7]),
            (3, 2, 2, vec![3]),
        ] {
            let s = Shape::new(p, q, r).unwrap();
            let rep = certify_action(&s, &fields).unwrap();
            assert!(rep.passed(), "{s}");
            assert!(!rep.entries.is_empty());
        }
        let rep = certify_action(&Shape::new(2, 2, 2).unwrap(), &[3, 5]).unwrap();
        // 16 orbits x 2 generators x 2 fields
        assert_eq!(rep.entries.len(), 64);
    }

    #[test]
    fn certification_covers_minus_side() {
        let s = Shape::new(3, 2, 2).unwrap();
        let rep = certify_action(&s, &[3]).unwrap();
        assert!(rep
            .entries
            .iter()
            .any(|e| e.generator.side == Side::Minus && e.matches));
    }

    #[test]
    fn dispatched_convolution() {
        let s = Shape::new(2, 2, 2).unwrap();
        let g = Graph::new(s, &[], &[1, 2], &[]).unwrap();
        let v = convolution_action(&s, 5, Generator::new(Side::Plus, 1), &g).unwrap();
        assert_eq!(v.values().copied().collect::<Vec<_>>(), vec![5]);
    }

    #[test]
    fn classification_at_several_fields() {
        let s = Shape::new(2, 2, 1).unwrap();
        for f in [3, 5, 7] {
            let c = classify_orbits(&s, f).unwrap();
            assert!(c.sizes_sum_to_grassmannian());
            assert_eq!(c.classes.len(), 8);
        }
    }
}
