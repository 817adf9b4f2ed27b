//! Hecke algebra `H(K, B_K)` acting on the orbit space.
//!
//! For a simple reflection `s_i` on either side and an orbit `τ`:
//!
//! | case      | condition on vertices `i`, `i+1`                       | `T_i ξ_τ`                  |
//! |-----------|--------------------------------------------------------|----------------------------|
//! | `Fixed`   | equal degree 0 or 2, so `s_i τ = τ`                    | `q ξ_τ`                    |
//! | `Descent` | `deg i < deg i+1`, or two crossing edges               | `(q-1) ξ_τ + q ξ_{s_i τ}`  |
//! | `Ascent`  | `deg i > deg i+1`, or two non-crossing edges           | `ξ_{s_i τ}`                |
//!
//! On the `-` side the edges at `j-`, `(j+1)-` cross when
//! `σ(j) > σ(j+1)`.
//! The rule for the `-` side mirrors the `+` side; the finite-field
//! oracle in [`crate::oracle`] certifies it.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbit::{
    admissible_triples, enumerate_graphs, orbits_with_triple, stabilizer_order, weyl_act, Graph,
    Incidence, Permutation, Shape, Side, Triple, WeylElement,
};
use crate::IntPoly;

/// A simple reflection `s_i = (i, i+1)` of `S_p` (side `+`) or `S_q`
/// (side `-`). Text form `+1`, `-2`, ...
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub side: Side,
    pub index: usize,
}

impl Generator {
    pub fn new(side: Side, index: usize) -> Self {
        Generator { side, index }
    }

    /// `+1..+(p-1)` followed by `-1..-(q-1)`.
    pub fn all(shape: &Shape) -> Vec<Generator> {
        let plus = (1..shape.p()).map(|i| Generator::new(Side::Plus, i));
        let minus = (1..shape.q()).map(|j| Generator::new(Side::Minus, j));
        plus.chain(minus).collect()
    }

    fn block_size(&self, shape: &Shape) -> usize {
        match self.side {
            Side::Plus => shape.p(),
            Side::Minus => shape.q(),
        }
    }

    pub fn validate(&self, shape: &Shape) -> Result<()> {
        if self.index == 0 || self.index >= self.block_size(shape) {
            return Err(Error::GeneratorOutOfRange {
                generator: self.to_string(),
                shape: *shape,
            });
        }
        Ok(())
    }

    pub fn reflection(&self, shape: &Shape) -> Result<WeylElement> {
        self.validate(shape)?;
        WeylElement::simple(shape.p(), shape.q(), self.side, self.index)
    }

    /// Whether the two generators are adjacent nodes of the Dynkin diagram
    /// `A_{p-1} + A_{q-1}`.
    pub fn is_adjacent(&self, other: &Generator) -> bool {
        self.side == other.side && self.index.abs_diff(other.index) == 1
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.side.sign(), self.index)
    }
}

impl FromStr for Generator {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let side = match s.chars().next() {
            Some('+') => Side::Plus,
            Some('-') => Side::Minus,
            _ => return Err(format!("generator {s:?} must look like +1 or -2")),
        };
        let index = s[1..]
            .parse::<usize>()
            .map_err(|_| format!("generator {s:?} must look like +1 or -2"))?;
        Ok(Generator { side, index })
    }
}

impl Serialize for Generator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// How a simple reflection interacts with an orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeneratorCase {
    /// `s_i τ = τ` (case I).
    Fixed,
    /// `s_i τ ≠ τ` and the double coset meets both orbits; `s_i τ` has
    /// one dimension less (case II).
    Descent,
    /// `s_i τ ≠ τ` and the double coset only reaches `s_i τ`, which has one
    /// dimension more (case III).
    Ascent,
}

pub fn classify(g: &Graph, generator: Generator) -> Result<GeneratorCase> {
    generator.validate(&g.shape())?;
    let (a, b) = (
        g.incidence(generator.side, generator.index),
        g.incidence(generator.side, generator.index + 1),
    );
    Ok(match (a, b) {
        // partners live on the other side; crossing iff they come in the
        // opposite order
        (Incidence::Edge(x), Incidence::Edge(y)) => {
            if x > y {
                GeneratorCase::Descent
            } else {
                GeneratorCase::Ascent
            }
        }
        _ if a.degree() == b.degree() => GeneratorCase::Fixed,
        _ if a.degree() < b.degree() => GeneratorCase::Descent,
        _ => GeneratorCase::Ascent,
    })
}

/// `IntPoly`-linear combination of orbit basis vectors `ξ_τ`, keyed by
/// index in enumeration order. Zero coordinates are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ModuleVector {
    coords: BTreeMap<usize, IntPoly>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(index: usize) -> Self {
        let mut v = Self::zero();
        v.add_term(index, &IntPoly::one());
        v
    }

    pub fn add_term(&mut self, index: usize, coef: &IntPoly) {
        if coef.is_zero() {
            return;
        }
        let sum = match self.coords.get(&index) {
            Some(c) => c + coef,
            None => coef.clone(),
        };
        if sum.is_zero() {
            self.coords.remove(&index);
        } else {
            self.coords.insert(index, sum);
        }
    }

    pub fn coord(&self, index: usize) -> IntPoly {
        self.coords
            .get(&index)
            .cloned()
            .unwrap_or_else(IntPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &IntPoly)> {
        self.coords.iter().map(|(&i, c)| (i, c))
    }

    pub fn support(&self) -> Vec<usize> {
        self.coords.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        for (i, c) in other.iter() {
            out.add_term(i, c);
        }
        out
    }

    pub fn scale(&self, c: &IntPoly) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (i, x) in self.iter() {
            out.add_term(i, &(x * c));
        }
        out
    }

    /// Coordinates evaluated at an integer value of `q`, zeros dropped.
    pub fn eval_at(&self, q: i64) -> BTreeMap<usize, i64> {
        self.iter()
            .map(|(i, c)| (i, c.eval(&q)))
            .filter(|&(_, v)| v != 0)
            .collect()
    }
}

/// Matrix of `T_i` on the orbit basis. Columns are stored sparsely; each
/// holds at most two entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMatrix {
    shape: Shape,
    generator: Generator,
    columns: Vec<ModuleVector>,
}

impl OperatorMatrix {
    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn generator(&self) -> Generator {
        self.generator
    }

    pub fn size(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, col: usize) -> &ModuleVector {
        &self.columns[col]
    }

    pub fn entry(&self, row: usize, col: usize) -> IntPoly {
        self.columns[col].coord(row)
    }

    pub fn apply(&self, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (col, c) in v.iter() {
            out = out.add(&self.columns[col].scale(c));
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<IntPoly>> {
        let n = self.size();
        (0..n)
            .map(|row| (0..n).map(|col| self.entry(row, col)).collect())
            .collect()
    }

    /// Dense integer matrix at a value of `q`.
    pub fn specialize(&self, q: i64) -> Vec<Vec<i64>> {
        let n = self.size();
        let mut out = vec![vec![0; n]; n];
        for (col, column) in self.columns.iter().enumerate() {
            for (row, c) in column.iter() {
                out[row][col] = c.eval(&q);
            }
        }
        out
    }

    /// CSV with a header row of column indices and the row index in the
    /// first field; entries are polynomial strings such as `q-1`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let n = self.size();
        let mut header = vec![self.generator.to_string()];
        header.extend((0..n).map(|i| i.to_string()));
        w.write_record(&header).expect("in-memory write");
        for (row, entries) in self.to_dense().iter().enumerate() {
            let mut rec = vec![row.to_string()];
            rec.extend(entries.iter().map(ToString::to_string));
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}

/// The orbit basis of one shape with a reverse index.
#[derive(Clone, Debug)]
pub struct HeckeModule {
    shape: Shape,
    basis: Vec<Graph>,
    index: HashMap<Graph, usize>,
}

impl HeckeModule {
    pub fn new(shape: &Shape) -> Self {
        let basis = enumerate_graphs(shape);
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, g)| (g, i))
            .collect();
        HeckeModule {
            shape: *shape,
            basis,
            index,
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn basis(&self) -> &[Graph] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, g: &Graph) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn generators(&self) -> Vec<Generator> {
        Generator::all(&self.shape)
    }

    /// `T_i ξ_τ` for a single basis element.
    pub fn act_on_basis(&self, generator: Generator, tau: usize) -> Result<ModuleVector> {
        let g = &self.basis[tau];
        let case = classify(g, generator)?;
        let q = IntPoly::q();
        let mut out = ModuleVector::zero();
        if case == GeneratorCase::Fixed {
            out.add_term(tau, &q);
            return Ok(out);
        }
        let moved = weyl_act(&generator.reflection(&self.shape)?, g)?;
        let moved = self.index_of(&moved).expect("W_K preserves the orbit set");
        match case {
            GeneratorCase::Descent => {
                out.add_term(tau, &(&q - &IntPoly::one()));
                out.add_term(moved, &q);
            }
            GeneratorCase::Ascent => out.add_term(moved, &IntPoly::one()),
            GeneratorCase::Fixed => unreachable!(),
        }
        Ok(out)
    }

    pub fn apply_generator(&self, generator: Generator, v: &ModuleVector) -> Result<ModuleVector> {
        generator.validate(&self.shape)?;
        let mut out = ModuleVector::zero();
        for (tau, c) in v.iter() {
            out = out.add(&self.act_on_basis(generator, tau)?.scale(c));
        }
        Ok(out)
    }

    pub fn operator_matrix(&self, generator: Generator) -> Result<OperatorMatrix> {
        if Generator::all(&self.shape).is_empty() {
            return Err(Error::NoGenerators(self.shape));
        }
        generator.validate(&self.shape)?;
        let columns = (0..self.dim())
            .map(|tau| self.act_on_basis(generator, tau))
            .collect::<Result<Vec<_>>>()?;
        Ok(OperatorMatrix {
            shape: self.shape,
            generator,
            columns,
        })
    }

    /// Permutation of basis indices induced by `w ∈ W_K`.
    pub fn weyl_permutation(&self, w: &WeylElement) -> Result<Vec<usize>> {
        self.basis
            .iter()
            .map(|g| {
                Ok(self
                    .index_of(&weyl_act(w, g)?)
                    .expect("W_K preserves the orbit set"))
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `(T + 1)(T - q) = 0`
    Quadratic,
    /// `T_a T_b = T_b T_a`
    Commutation,
    /// `T_a T_b T_a = T_b T_a T_b`
    Braid,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: Relation,
    pub generators: Vec<Generator>,
    pub passed: bool,
    /// Basis columns where the identity fails.
    pub failing_columns: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub shape: Shape,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Checks the quadratic relation for every generator and the braid or
/// commutation relation for every pair, as exact identities on each basis
/// vector (i.e. column by column of the operator matrices).
pub fn verify_relations(shape: &Shape) -> RelationReport {
    let module = HeckeModule::new(shape);
    let gens = module.generators();
    let mats: Vec<OperatorMatrix> = gens
        .iter()
        .map(|&g| module.operator_matrix(g).expect("generator in range"))
        .collect();
    let q = IntPoly::q();
    let n = module.dim();
    let mut checks = Vec::new();

    let run =
        |relation: Relation, generators: Vec<Generator>, f: &dyn Fn(&ModuleVector) -> bool| {
            let failing: Vec<usize> = (0..n).filter(|&c| !f(&ModuleVector::basis(c))).collect();
            RelationCheck {
                relation,
                generators,
                passed: failing.is_empty(),
                failing_columns: failing,
            }
        };

    for (a, t) in mats.iter().enumerate() {
        checks.push(run(Relation::Quadratic, vec![gens[a]], &|v| {
            // (T + 1)(T - q) v
            let w = t.apply(v).add(&v.scale(&-&q));
            t.apply(&w).add(&w).is_zero()
        }));
    }
    for a in 0..mats.len() {
        for b in a + 1..mats.len() {
            let (ta, tb) = (&mats[a], &mats[b]);
            let pair = vec![gens[a], gens[b]];
            if gens[a].is_adjacent(&gens[b]) {
                checks.push(run(Relation::Braid, pair, &|v| {
                    ta.apply(&tb.apply(&ta.apply(v))) == tb.apply(&ta.apply(&tb.apply(v)))
                }));
            } else {
                checks.push(run(Relation::Commutation, pair, &|v| {
                    ta.apply(&tb.apply(v)) == tb.apply(&ta.apply(v))
                }));
            }
        }
    }
    RelationReport {
        shape: *shape,
        checks,
    }
}

/// One `W_K`-orbit on the graph basis at `q = 1`.
#[derive(Clone, Debug, Serialize)]
pub struct WeylBlock {
    pub triple: Triple,
    /// First member in enumeration order.
    pub base: Graph,
    pub orbit_size: usize,
    /// `binom(p; k, s, s') binom(q; k, t, t') k!`
    pub expected_size: u128,
    /// Counted by brute force over `S_p x S_q`.
    pub stabilizer_order: u128,
    /// `k! s! s'! t! t'!`
    pub expected_stabilizer_order: u128,
    /// Every member has this block's triple.
    pub uniform_triple: bool,
}

impl WeylBlock {
    pub fn passed(&self) -> bool {
        self.uniform_triple
            && self.orbit_size as u128 == self.expected_size
            && self.stabilizer_order == self.expected_stabilizer_order
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylDecomposition {
    pub shape: Shape,
    pub blocks: Vec<WeylBlock>,
    pub total: usize,
    /// Each generator's matrix at `q = 1` is the permutation matrix of its
    /// reflection.
    pub permutation_at_q1: bool,
    /// Orbits and admissible triples correspond one to one.
    pub one_block_per_triple: bool,
}

impl WeylDecomposition {
    pub fn passed(&self) -> bool {
        self.permutation_at_q1
            && self.one_block_per_triple
            && self.blocks.iter().all(WeylBlock::passed)
    }
}

fn is_permutation_matrix_of(m: &[Vec<i64>], perm: &[usize]) -> bool {
    m.iter().enumerate().all(|(row, entries)| {
        entries
            .iter()
            .enumerate()
            .all(|(col, &x)| x == i64::from(perm[col] == row))
    })
}

/// Specializes the action at `q = 1`, splits the basis into orbits of the
/// group generated by the resulting permutations and checks each against
/// the induced representation `Ind_{H_{k,s,t}}^{W_K} 1`.
pub fn weyl_decompose(shape: &Shape) -> WeylDecomposition {
    let module = HeckeModule::new(shape);
    let n = module.dim();
    let mut perms = Vec::new();
    let mut permutation_at_q1 = true;
    for generator in module.generators() {
        let at_one = module
            .operator_matrix(generator)
            .expect("generator in range")
            .specialize(1);
        let refl = generator.reflection(shape).expect("generator in range");
        let perm = module.weyl_permutation(&refl).expect("sizes match");
        permutation_at_q1 &= is_permutation_matrix_of(&at_one, &perm);
        // recover the permutation from the matrix itself
        let from_matrix: Vec<usize> = (0..n)
            .map(|col| (0..n).find(|&row| at_one[row][col] != 0).unwrap_or(col))
            .collect();
        perms.push(from_matrix);
    }

    let mut block_of = vec![usize::MAX; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if block_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![start];
        block_of[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for perm in &perms {
                let w = perm[v];
                if block_of[w] == usize::MAX {
                    block_of[w] = id;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }

    let plus_group: Vec<Permutation> = Permutation::all(shape.p()).collect();
    let minus_group: Vec<Permutation> = Permutation::all(shape.q()).collect();
    let blocks: Vec<WeylBlock> = orbits
        .iter()
        .map(|members| {
            let base = module.basis()[members[0]].clone();
            let triple = base.triple();
            let uniform_triple = members
                .iter()
                .all(|&m| module.basis()[m].triple() == triple);
            let mut stab = 0u128;
            for wp in &plus_group {
                for wm in &minus_group {
                    let w = WeylElement {
                        plus: wp.clone(),
                        minus: wm.clone(),
                    };
                    if weyl_act(&w, &base).expect("sizes match") == base {
                        stab += 1;
                    }
                }
            }
            WeylBlock {
                triple,
                orbit_size: members.len(),
                expected_size: orbits_with_triple(shape, &triple),
                stabilizer_order: stab,
                expected_stabilizer_order: stabilizer_order(shape, &triple),
                base,
                uniform_triple,
            }
        })
        .collect();

    let mut block_triples: Vec<Triple> = blocks.iter().map(|b| b.triple).collect();
    block_triples.sort();
    let one_block_per_triple = block_triples == admissible_triples(shape);

    let mut blocks = blocks;
    blocks.sort_by_key(|b| b.triple);
    WeylDecomposition {
        shape: *shape,
        total: n,
        blocks,
        permutation_at_q1,
        one_block_per_triple,
    }
}
