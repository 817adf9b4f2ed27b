//! Orbit classification and the convolution action by direct counting over
//! one finite field.
//!
//! For a simple reflection `s` with `B_K s B_K = X s B_K`, where
//! `X = { u(t) = 1 + t E_{a,a+1} : t ∈ F }` is the root subgroup, the
//! convolution with the characteristic function of `B_K s B_K` reads
//!
//! ```text
//! (T_s ∗ ξ_τ)(x) = Σ_{t ∈ F} ξ_τ(s u(t)^{-1} x)
//! ```
//!
//! so each value is a count of `|F|` membership tests. The result is
//! `B_K`-invariant, hence constant on orbits; the constant on `O_τ'` is the
//! coefficient of `ξ_τ'`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::grassmannian::{enumerate_grassmannian, gaussian_binomial, profile_of_rows, FFSubspace};
use crate::error::{Error, Result};
use crate::hecke::{Generator, HeckeModule};
use crate::orbit::{rank_matrix, Graph, RankMatrix, Shape, Side};
use crate::scalar::Fp;

#[derive(Clone, Debug, Serialize)]
pub struct OrbitClass {
    pub index: usize,
    pub graph: Graph,
    /// Number of `F`-points in the orbit.
    pub points: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub shape: Shape,
    pub field_size: u32,
    /// Classes in enumeration order of their graphs.
    pub classes: Vec<OrbitClass>,
    pub total_points: u64,
    pub gaussian_binomial: u128,
}

impl Classification {
    pub fn sizes_sum_to_grassmannian(&self) -> bool {
        self.total_points as u128 == self.gaussian_binomial
    }
}

/// Grassmannian over `F_P` with every point assigned to its orbit.
pub struct FieldOracle<const P: u32> {
    shape: Shape,
    module: HeckeModule,
    points: Vec<FFSubspace<P>>,
    orbit_of: Vec<usize>,
    by_profile: HashMap<RankMatrix, usize>,
}

impl<const P: u32> FieldOracle<P> {
    /// Enumerates and classifies. Fails if some point has a profile that is
    /// not the rank matrix of a graph, or some graph has no points.
    pub fn new(shape: &Shape) -> Result<Self> {
        let module = HeckeModule::new(shape);
        let by_profile: HashMap<RankMatrix, usize> = module
            .basis()
            .iter()
            .enumerate()
            .map(|(i, g)| (rank_matrix(g), i))
            .collect();
        if by_profile.len() != module.dim() {
            return Err(Error::Oracle(format!(
                "rank matrices are not distinct on {shape}"
            )));
        }
        let points = enumerate_grassmannian::<P>(shape)?;
        let orbit_of = points
            .par_iter()
            .map(|w| {
                let prof = profile_of_rows(shape, w.basis());
                by_profile.get(&prof).copied().ok_or_else(|| {
                    Error::Oracle(format!(
                        "point {:?} has unmatched profile {prof}",
                        w.basis()
                    ))
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        let oracle = FieldOracle {
            shape: *shape,
            module,
            points,
            orbit_of,
            by_profile,
        };
        if let Some(empty) = oracle.sizes().iter().position(|&n| n == 0) {
            return Err(Error::Oracle(format!(
                "orbit {} has no points over F_{P}",
                oracle.module.basis()[empty]
            )));
        }
        Ok(oracle)
    }

    pub fn module(&self) -> &HeckeModule {
        &self.module
    }

    pub fn points(&self) -> &[FFSubspace<P>] {
        &self.points
    }

    /// Point count per orbit, in enumeration order.
    pub fn sizes(&self) -> Vec<u64> {
        let mut sizes = vec![0u64; self.module.dim()];
        for &o in &self.orbit_of {
            sizes[o] += 1;
        }
        sizes
    }

    pub fn classification(&self) -> Classification {
        let classes: Vec<OrbitClass> = self
            .sizes()
            .into_iter()
            .enumerate()
            .map(|(index, points)| OrbitClass {
                index,
                graph: self.module.basis()[index].clone(),
                points,
            })
            .collect();
        Classification {
            shape: self.shape,
            field_size: P,
            total_points: classes.iter().map(|c| c.points).sum(),
            gaussian_binomial: gaussian_binomial(self.shape.n(), self.shape.r(), P as u128),
            classes,
        }
    }

    fn orbit_of_rows(&self, rows: &[Vec<Fp<P>>]) -> Result<usize> {
        let prof = profile_of_rows(&self.shape, rows);
        self.by_profile
            .get(&prof)
            .copied()
            .ok_or_else(|| Error::Oracle(format!("image point has unmatched profile {prof}")))
    }

    /// `x ↦ (τ ↦ #{t : s u(t)^{-1} x ∈ O_τ})` at one point.
    fn counts_at(&self, a: usize, rows: &[Vec<Fp<P>>]) -> Result<BTreeMap<usize, u64>> {
        let mut counts = BTreeMap::new();
        for t in Fp::<P>::elements() {
            let moved: Vec<Vec<Fp<P>>> = rows
                .iter()
                .map(|v| {
                    let mut v = v.clone();
                    let shift = t * v[a + 1];
                    v[a] -= shift;
                    v.swap(a, a + 1);
                    v
                })
                .collect();
            *counts.entry(self.orbit_of_rows(&moved)?).or_insert(0) += 1;
        }
        Ok(counts)
    }

    /// Matrix of `T_s` by counting, as sparse columns: `columns[τ][τ']` is
    /// the coefficient of `ξ_τ'` in `T_s ∗ ξ_τ`. Fails if a value is not
    /// constant on some orbit.
    pub fn convolution_columns(&self, generator: Generator) -> Result<Vec<BTreeMap<usize, u64>>> {
        generator.validate(&self.shape)?;
        let a = match generator.side {
            Side::Plus => generator.index - 1,
            Side::Minus => self.shape.p() + generator.index - 1,
        };
        let per_point = self
            .points
            .par_iter()
            .map(|w| self.counts_at(a, w.basis()))
            .collect::<Result<Vec<_>>>()?;

        let n = self.module.dim();
        let mut value_on: Vec<Option<&BTreeMap<usize, u64>>> = vec![None; n];
        for (x, counts) in per_point.iter().enumerate() {
            let orbit = self.orbit_of[x];
            match value_on[orbit] {
                None => value_on[orbit] = Some(counts),
                Some(first) if first != counts => {
                    return Err(Error::Oracle(format!(
                        "T_{generator} ∗ ξ is not constant on orbit {}",
                        self.module.basis()[orbit]
                    )))
                }
                Some(_) => {}
            }
        }
        let mut columns = vec![BTreeMap::new(); n];
        for (target, counts) in value_on.iter().enumerate() {
            for (&tau, &c) in counts.expect("every orbit has points") {
                columns[tau].insert(target, c);
            }
        }
        Ok(columns)
    }
}
