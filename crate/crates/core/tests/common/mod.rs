//! Shared generators, fixtures and brute-force oracles for the integration
//! tests. The oracles work from full valuations and possible worlds only; they
//! never call the library's checkers.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use fdlab::io::parse_fds;
use fdlab::model::{AttrSet, DisjunctiveTuple, Schema, StandardTuple, Table, Tuple, VagueTuple, World};
use fdlab::{enumerate_worlds, FunctionalDependency};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// fixtures

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn data(name: &str) -> String {
    std::fs::read_to_string(data_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// A corpus table by file name; the extension picks the model.
pub fn table(name: &str) -> Table {
    fdlab::cli::load_table(&data_path(name)).unwrap()
}

pub fn fds_of(name: &str, t: &Table) -> Vec<FunctionalDependency> {
    fdlab::io::resolve_fds(&parse_fds(&data(name)).unwrap(), t.schema()).unwrap()
}

pub fn fd(schema: &Schema, lhs: &[&str], rhs: &[&str]) -> FunctionalDependency {
    FunctionalDependency::parse_names(schema, lhs, rhs).unwrap()
}

pub const CORPUS_TABLES: &[&str] = &[
    "weak_pair.vtab",
    "fuzzy_exact.vtab",
    "fuzzy_partial.vtab",
    "correlated.dtab",
    "augmentation.dtab",
    "ssn_name.dtab",
    "matching_reduction.vtab",
    "joe_jack.vtab",
    "single_disjunct.dtab",
    "worked_example.vtab",
    "employees.vtab",
];

// ---------------------------------------------------------------------------
// generators

pub fn schema(n: usize) -> Schema {
    Schema::new((0..n).map(|i| ((b'A' + i as u8) as char).to_string())).unwrap()
}

/// Shape of a random table.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub max_tuples: usize,
    pub max_attrs: usize,
    pub max_cell: usize,
    pub domain: usize,
    /// Probability that a vague cell is a singleton.
    pub singleton: f64,
}

impl Shape {
    pub const SMALL: Shape = Shape {
        max_tuples: 4,
        max_attrs: 3,
        max_cell: 3,
        domain: 3,
        singleton: 0.5,
    };
}

fn value(rng: &mut TestRng, attr: usize, domain: usize) -> String {
    format!("{}{}", (b'a' + attr as u8) as char, rng.gen_range(0..domain))
}

fn cell(rng: &mut TestRng, attr: usize, s: &Shape) -> Vec<String> {
    let size = if rng.gen_bool(s.singleton) {
        1
    } else {
        rng.gen_range(1..=s.max_cell.min(s.domain))
    };
    let mut all: Vec<usize> = (0..s.domain).collect();
    all.shuffle(rng);
    all[..size]
        .iter()
        .map(|v| format!("{}{v}", (b'a' + attr as u8) as char))
        .collect()
}

pub fn standard_table(rng: &mut TestRng, s: &Shape) -> Table {
    let n = rng.gen_range(1..=s.max_attrs);
    let rows: Vec<StandardTuple> = (0..rng.gen_range(0..=s.max_tuples))
        .map(|_| StandardTuple::new((0..n).map(|a| value(rng, a, s.domain))))
        .collect();
    Table::standard(schema(n), rows).unwrap()
}

pub fn vague_table(rng: &mut TestRng, s: &Shape) -> Table {
    let n = rng.gen_range(1..=s.max_attrs);
    vague_table_with(rng, s, n)
}

pub fn vague_table_with(rng: &mut TestRng, s: &Shape, n: usize) -> Table {
    let rows: Vec<VagueTuple> = (0..rng.gen_range(0..=s.max_tuples))
        .map(|_| {
            let cells = (0..n).map(|a| cell(rng, a, s).into_iter().map(|v| fdlab::Value::new(&v)).collect());
            VagueTuple::new(cells.collect()).unwrap()
        })
        .collect();
    Table::vague(schema(n), rows).unwrap()
}

/// Disjunctive tables with up to `max_cell` disjuncts per tuple.
pub fn disjunctive_table(rng: &mut TestRng, s: &Shape) -> Table {
    let n = rng.gen_range(1..=s.max_attrs);
    let rows: Vec<DisjunctiveTuple> = (0..rng.gen_range(0..=s.max_tuples))
        .map(|_| {
            let k = rng.gen_range(1..=s.max_cell);
            DisjunctiveTuple::new((0..k).map(|_| StandardTuple::new((0..n).map(|a| value(rng, a, s.domain))))).unwrap()
        })
        .collect();
    Table::disjunctive(schema(n), rows).unwrap()
}

pub fn attr_subset(rng: &mut TestRng, n: usize, p: f64) -> AttrSet {
    AttrSet::from_indices((0..n).filter(|_| rng.gen_bool(p)))
}

/// A random FD over `n` attributes with a non-empty right side.
pub fn random_fd(rng: &mut TestRng, n: usize) -> FunctionalDependency {
    let lhs = attr_subset(rng, n, 0.4);
    let mut rhs = attr_subset(rng, n, 0.4);
    if rhs.is_empty() {
        rhs = AttrSet::from_indices([rng.gen_range(0..n)]);
    }
    FunctionalDependency::new(lhs, rhs)
}

// ---------------------------------------------------------------------------
// oracles

/// Classical FD check by comparing every pair of rows.
pub fn naive_standard<'a>(rows: impl IntoIterator<Item = &'a StandardTuple>, fd: &FunctionalDependency) -> bool {
    let rows: Vec<&StandardTuple> = rows.into_iter().collect();
    rows.iter().all(|r| {
        rows.iter().all(|s| {
            let agree = |x: &AttrSet| x.iter().all(|a| r.0[a.0] == s.0[a.0]);
            !agree(&fd.lhs) || agree(&fd.rhs)
        })
    })
}

pub fn all_worlds(t: &Table) -> BTreeSet<World> {
    enumerate_worlds(t, None).unwrap()
}

pub fn oracle_strong(t: &Table, fd: &FunctionalDependency) -> bool {
    all_worlds(t).iter().all(|w| naive_standard(w.tuples(), fd))
}

pub fn oracle_weak(t: &Table, fd: &FunctionalDependency) -> bool {
    all_worlds(t).iter().any(|w| naive_standard(w.tuples(), fd))
}

pub fn oracle_seamless(t: &Table, fds: &[FunctionalDependency]) -> bool {
    all_worlds(t)
        .iter()
        .any(|w| fds.iter().all(|f| naive_standard(w.tuples(), f)))
}

fn full_valuations(t: &Tuple) -> Vec<StandardTuple> {
    match t {
        Tuple::Standard(s) => vec![s.clone()],
        Tuple::Vague(v) => {
            let mut acc: Vec<Vec<fdlab::Value>> = vec![Vec::new()];
            for c in v.cells() {
                acc = acc
                    .into_iter()
                    .flat_map(|p| {
                        c.iter().map(move |x| {
                            let mut q = p.clone();
                            q.push(x.clone());
                            q
                        })
                    })
                    .collect();
            }
            acc.into_iter().map(StandardTuple).collect()
        }
        Tuple::Disjunctive(d) => d.disjuncts().iter().cloned().collect(),
    }
}

fn restrict(s: &StandardTuple, x: &AttrSet) -> Vec<String> {
    x.iter().map(|a| s.0[a.0].as_str().to_string()).collect()
}

/// `t[X=ā][Y]` straight from the definition.
pub fn naive_select(t: &Tuple, x: &AttrSet, bind: &[String], y: &AttrSet) -> BTreeSet<Vec<String>> {
    full_valuations(t)
        .iter()
        .filter(|v| restrict(v, x) == bind)
        .map(|v| restrict(v, y))
        .collect()
}

/// PFD by definition: every pair of tuples (a tuple with itself included)
/// gives equal answers on every shared binding.
pub fn oracle_pfd(t: &Table, fd: &FunctionalDependency) -> bool {
    let tuples = t.tuples();
    tuples.iter().all(|t1| {
        tuples.iter().all(|t2| {
            let b1: BTreeSet<Vec<String>> = full_valuations(t1).iter().map(|v| restrict(v, &fd.lhs)).collect();
            let b2: BTreeSet<Vec<String>> = full_valuations(t2).iter().map(|v| restrict(v, &fd.lhs)).collect();
            b1.intersection(&b2)
                .all(|b| naive_select(t1, &fd.lhs, b, &fd.rhs) == naive_select(t2, &fd.lhs, b, &fd.rhs))
        })
    })
}

/// Overlap ratio as an exact fraction `(num, den)`.
type Frac = (usize, usize);

fn frac_lt(a: Frac, b: Frac) -> bool {
    a.0 * b.1 < b.0 * a.1
}

fn mu(a: &BTreeSet<fdlab::Value>, b: &BTreeSet<fdlab::Value>, max: bool) -> Frac {
    let common = a.intersection(b).count();
    let den = if max {
        a.len().min(b.len())
    } else {
        a.len().max(b.len())
    };
    (common, den)
}

fn tuple_mu(v1: &VagueTuple, v2: &VagueTuple, z: &AttrSet, max: bool) -> Frac {
    z.iter()
        .map(|a| mu(v1.cell(a), v2.cell(a), max))
        .fold((1, 1), |acc, m| if frac_lt(m, acc) { m } else { acc })
}

/// Raju-Majumdar with `μ = |a∩b| / min(|a|,|b|)` (`max = true`) or
/// `/ max(|a|,|b|)`.
pub fn oracle_rm(t: &Table, fd: &FunctionalDependency, max: bool) -> bool {
    let rows: Vec<VagueTuple> = t.tuples().iter().map(|x| x.as_vague().unwrap()).collect();
    rows.iter().enumerate().all(|(i, r)| {
        rows[i + 1..]
            .iter()
            .all(|s| !frac_lt(tuple_mu(r, s, &fd.rhs, max), tuple_mu(r, s, &fd.lhs, max)))
    })
}

/// Whether `world` arises from `table` by one choice per tuple: some
/// assignment of tuples to world rows hits every row.
pub fn is_world_of(table: &Table, world: &World) -> bool {
    let rows: Vec<&StandardTuple> = world.tuples().collect();
    let cands: Vec<Vec<usize>> = table
        .tuples()
        .iter()
        .map(|t| {
            let vals = full_valuations(t);
            (0..rows.len()).filter(|&k| vals.contains(rows[k])).collect()
        })
        .collect();
    if cands.iter().any(Vec::is_empty) {
        return false;
    }
    fn go(i: usize, cands: &[Vec<usize>], hit: &mut Vec<usize>, total: usize) -> bool {
        if i == cands.len() {
            return hit.iter().all(|&h| h > 0) && hit.len() == total;
        }
        for &k in &cands[i] {
            hit[k] += 1;
            let ok = go(i + 1, cands, hit, total);
            hit[k] -= 1;
            if ok {
                return true;
            }
        }
        false
    }
    let mut hit = vec![0; rows.len()];
    go(0, &cands, &mut hit, rows.len())
}

/// Semantic implication: `fds` implies `fd` iff every two-row relation over
/// the schema (described by the set of columns the rows agree on) that
/// satisfies `fds` satisfies `fd`.
pub fn oracle_implies(n: usize, fds: &[FunctionalDependency], fd: &FunctionalDependency) -> bool {
    let holds = |agree: u32, f: &FunctionalDependency| {
        let inside = |x: &AttrSet| x.iter().all(|a| agree & (1 << a.0) != 0);
        !inside(&f.lhs) || inside(&f.rhs)
    };
    (0u32..1 << n).all(|agree| !fds.iter().all(|f| holds(agree, f)) || holds(agree, fd))
}

/// Exhaustive perfect-matching search over all `n`-subsets of triples.
pub fn oracle_matching(n: usize, triples: &[(usize, usize, usize)]) -> bool {
    fn go(start: usize, left: usize, triples: &[(usize, usize, usize)], used: &mut [u32; 3]) -> bool {
        if left == 0 {
            return true;
        }
        (start..triples.len()).any(|i| {
            let (x, y, z) = triples[i];
            if used[0] & (1 << x) != 0 || used[1] & (1 << y) != 0 || used[2] & (1 << z) != 0 {
                return false;
            }
            let saved = *used;
            used[0] |= 1 << x;
            used[1] |= 1 << y;
            used[2] |= 1 << z;
            let ok = go(i + 1, left - 1, triples, used);
            *used = saved;
            ok
        })
    }
    go(0, n, triples, &mut [0; 3])
}
