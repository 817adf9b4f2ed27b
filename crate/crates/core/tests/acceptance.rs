//! Acceptance suite. Each criterion prints one PASS/FAIL line with its
//! runtime against the budget; the process fails if any criterion fails.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use dflag_core::hecke::{verify_relations, weyl_decompose, HeckeModule, OperatorMatrix};
use dflag_core::oracle::{certify_action, classify_orbits};
use dflag_core::orbit::{
    count_orbits, enumerate_graphs, invariants, rank_matrix, weyl_act, RankMatrix,
};
use dflag_core::poset::build_poset;
use dflag_core::{Graph, Shape};

type Check = Result<(), String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Counts graphs by assigning each `+` vertex a state (free, marked, or an
/// edge to an unused `-` vertex), then marking `-` vertices among the rest.
fn count_graphs_by_recursion(p: usize, q: usize, r: usize) -> u128 {
    fn binom(n: usize, k: usize) -> u128 {
        if k > n {
            return 0;
        }
        (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
    }
    fn go(v: usize, p: usize, q: usize, used_minus: usize, incidences: usize, r: usize) -> u128 {
        if incidences > r {
            return 0;
        }
        if v == p {
            let free_minus = q - used_minus;
            return binom(free_minus, r - incidences);
        }
        let free = go(v + 1, p, q, used_minus, incidences, r);
        let marked = go(v + 1, p, q, used_minus, incidences + 1, r);
        let edge = if used_minus < q {
            (q - used_minus) as u128 * go(v + 1, p, q, used_minus + 1, incidences + 1, r)
        } else {
            0
        };
        free + marked + edge
    }
    go(0, p, q, 0, 0, r)
}

/// `prod (q^{n-i} - 1) / (q^{i+1} - 1)` over `i < r`.
fn gaussian_binomial_product(n: usize, r: usize, q: u128) -> u128 {
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..r {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

fn example_reproduction() -> Check {
    let shape = Shape::new(5, 3, 4).map_err(|e| e.to_string())?;
    let g = Graph::new(shape, &[(2, 3), (4, 1)], &[5], &[2]).map_err(|e| e.to_string())?;
    let inv = invariants(&g);
    ensure(
        (inv.a_plus, inv.a_minus, inv.b, inv.c) == (7, 1, 2, 1),
        || format!("invariants {inv:?}"),
    )?;
    let expected = RankMatrix::from_rows(&[
        vec![0, 0, 1, 1],
        vec![0, 0, 1, 1],
        vec![0, 0, 1, 2],
        vec![0, 0, 1, 2],
        vec![0, 1, 2, 3],
        vec![1, 2, 3, 4],
    ]);
    let got = rank_matrix(&g);
    ensure(got == expected, || format!("rank matrix {got}"))
}

fn orbit_counts() -> Check {
    let mut shapes = 0;
    for shape in Shape::all_up_to(8) {
        let formula = count_orbits(&shape);
        let listed = enumerate_graphs(&shape).len() as u128;
        let recursive = count_graphs_by_recursion(shape.p(), shape.q(), shape.r());
        ensure(formula == listed && listed == recursive, || {
            format!("{shape}: formula {formula}, enumeration {listed}, recursion {recursive}")
        })?;
        shapes += 1;
    }
    let s = Shape::new(2, 2, 2).unwrap();
    ensure(
        count_orbits(&s) == 16 && enumerate_graphs(&s).len() == 16,
        || "(2,2,2) != 16".into(),
    )?;
    println!("    {shapes} shapes");
    Ok(())
}

fn poset_grading() -> Check {
    let s = Shape::new(2, 2, 2).unwrap();
    let poset = build_poset(&s).map_err(|e| e.to_string())?;
    let expected: BTreeMap<usize, usize> = [(6, 1), (5, 3), (4, 5), (3, 4), (2, 3)]
        .into_iter()
        .collect();
    ensure(poset.dim_histogram() == expected, || {
        format!("histogram {:?}", poset.dim_histogram())
    })?;
    let mut covers = 0;
    for shape in Shape::all_up_to(7) {
        let poset = build_poset(&shape).map_err(|e| format!("{shape}: {e}"))?;
        for &(lo, hi) in poset.covers() {
            let (dlo, dhi) = (
                invariants(&poset.orbits()[lo]).dim,
                invariants(&poset.orbits()[hi]).dim,
            );
            ensure(dhi == dlo + 1, || {
                format!("{shape}: cover {lo} -> {hi} has dims {dlo}, {dhi}")
            })?;
        }
        covers += poset.covers().len();
    }
    println!("    {covers} covers checked");
    Ok(())
}

/// Sparse integer matrix as columns of `(row, value)`.
type SparseCols = Vec<Vec<(usize, i64)>>;

fn specialize_sparse(t: &OperatorMatrix, q: i64) -> SparseCols {
    (0..t.size())
        .map(|c| {
            t.column(c)
                .iter()
                .map(|(r, p)| (r, p.eval(&q)))
                .filter(|&(_, v)| v != 0)
                .collect()
        })
        .collect()
}

fn mul_vec(m: &SparseCols, v: &BTreeMap<usize, i64>) -> BTreeMap<usize, i64> {
    let mut out = BTreeMap::new();
    for (&c, &x) in v {
        for &(r, y) in &m[c] {
            *out.entry(r).or_insert(0) += x * y;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Relations at integer points: all entries of the products have degree at
/// most 3 in `q`, so agreement at five points is a polynomial identity.
fn relations_at_points(module: &HeckeModule) -> Check {
    let gens = module.generators();
    let mats: Vec<OperatorMatrix> = gens
        .iter()
        .map(|&g| module.operator_matrix(g).unwrap())
        .collect();
    for q in [0i64, 1, 2, 3, 5] {
        let sp: Vec<SparseCols> = mats.iter().map(|m| specialize_sparse(m, q)).collect();
        for col in 0..module.dim() {
            let e = BTreeMap::from([(col, 1i64)]);
            for (a, ta) in sp.iter().enumerate() {
                // T^2 = (q-1) T + q
                let lhs = mul_vec(ta, &mul_vec(ta, &e));
                let mut rhs: BTreeMap<usize, i64> = mul_vec(ta, &e)
                    .into_iter()
                    .map(|(r, v)| (r, (q - 1) * v))
                    .collect();
                *rhs.entry(col).or_insert(0) += q;
                rhs.retain(|_, v| *v != 0);
                ensure(lhs == rhs, || {
                    format!("quadratic T{} at q={q}, column {col}", gens[a])
                })?;
                for (b, tb) in sp.iter().enumerate().skip(a + 1) {
                    let (l, r) = if gens[a].is_adjacent(&gens[b]) {
                        (
                            mul_vec(ta, &mul_vec(tb, &mul_vec(ta, &e))),
                            mul_vec(tb, &mul_vec(ta, &mul_vec(tb, &e))),
                        )
                    } else {
                        (mul_vec(ta, &mul_vec(tb, &e)), mul_vec(tb, &mul_vec(ta, &e)))
                    };
                    ensure(l == r, || {
                        format!("T{} T{} at q={q}, column {col}", gens[a], gens[b])
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn hecke_relations() -> Check {
    let mut checks = 0;
    for shape in Shape::all_up_to(7) {
        let report = verify_relations(&shape);
        if let Some(bad) = report.checks.iter().find(|c| !c.passed) {
            return Err(format!(
                "{shape}: {:?} {:?} fails",
                bad.relation, bad.generators
            ));
        }
        checks += report.checks.len();
        relations_at_points(&HeckeModule::new(&shape)).map_err(|e| format!("{shape}: {e}"))?;
    }
    println!("    {checks} relations");
    Ok(())
}

fn oracle_shapes() -> Vec<Shape> {
    [(1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 2)]
        .into_iter()
        .map(|(p, q, r)| Shape::new(p, q, r).unwrap())
        .collect()
}

fn oracle_certification() -> Check {
    let mut coefficients = 0;
    for shape in oracle_shapes() {
        let report = certify_action(&shape, &[3, 5]).map_err(|e| format!("{shape}: {e}"))?;
        if let Some(bad) = report.entries.iter().find(|e| !e.matches) {
            return Err(format!(
                "{shape}: T{} on {} over F_{}: expected {:?}, counted {:?}",
                bad.generator, bad.graph, bad.field_size, bad.expected, bad.observed
            ));
        }
        for e in &report.entries {
            let f = i64::from(e.field_size);
            ensure(
                e.observed
                    .iter()
                    .all(|&(_, v)| v == f || v == f - 1 || v == 1),
                || {
                    format!(
                        "{shape}: coefficient outside {{q, q-1, 1}}: {:?}",
                        e.observed
                    )
                },
            )?;
            coefficients += e.observed.len();
        }
    }
    println!("    {coefficients} counted coefficients");
    Ok(())
}

fn classification_totality() -> Check {
    for shape in oracle_shapes() {
        let n = enumerate_graphs(&shape).len();
        for f in [3u32, 5] {
            let c = classify_orbits(&shape, f).map_err(|e| format!("{shape} over F_{f}: {e}"))?;
            let expected = gaussian_binomial_product(shape.n(), shape.r(), u128::from(f));
            ensure(
                c.classes.len() == n && c.classes.iter().all(|k| k.points > 0),
                || format!("{shape} over F_{f}: classes do not match the graphs"),
            )?;
            ensure(u128::from(c.total_points) == expected, || {
                format!(
                    "{shape} over F_{f}: {} points, expected {expected}",
                    c.total_points
                )
            })?;
        }
    }
    Ok(())
}

fn weyl_decomposition() -> Check {
    for shape in Shape::all_up_to(8) {
        let d = weyl_decompose(&shape);
        ensure(d.passed(), || {
            format!("{shape}: {:?}", d.blocks.iter().find(|b| !b.passed()))
        })?;
        // q = 1 matrices against weyl_act, independently of the library check
        let module = HeckeModule::new(&shape);
        let index: HashMap<&Graph, usize> = module
            .basis()
            .iter()
            .enumerate()
            .map(|(i, g)| (g, i))
            .collect();
        for gen in module.generators() {
            let refl = gen.reflection(&shape).unwrap();
            let t = specialize_sparse(&module.operator_matrix(gen).unwrap(), 1);
            for (col, g) in module.basis().iter().enumerate() {
                let image = index[&weyl_act(&refl, g).unwrap()];
                ensure(t[col] == vec![(image, 1)], || {
                    format!("{shape}: T{gen} at q=1, column {col}")
                })?;
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 7] = [
        (
            "example invariants and rank matrix",
            Duration::from_secs(1),
            example_reproduction,
        ),
        (
            "orbit count, p+q <= 8",
            Duration::from_secs(30),
            orbit_counts,
        ),
        (
            "poset grading, p+q <= 7",
            Duration::from_secs(60),
            poset_grading,
        ),
        (
            "hecke relations, p+q <= 7",
            Duration::from_secs(300),
            hecke_relations,
        ),
        (
            "oracle certification over F_3, F_5",
            Duration::from_secs(300),
            oracle_certification,
        ),
        (
            "orbit classification totality",
            Duration::from_secs(120),
            classification_totality,
        ),
        (
            "weyl decomposition, p+q <= 8",
            Duration::from_secs(60),
            weyl_decomposition,
        ),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let within = elapsed <= budget;
        match (&result, within) {
            (Ok(()), true) => println!("PASS {name} ({elapsed:.2?} / {budget:?})"),
            (Ok(()), false) => {
                failed += 1;
                println!("FAIL {name}: over budget ({elapsed:.2?} / {budget:?})");
            }
            (Err(msg), _) => {
                failed += 1;
                println!("FAIL {name}: {msg} ({elapsed:.2?})");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 7 criteria passed");
}
