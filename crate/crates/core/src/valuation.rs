//! Constructive seamless valuation for PFD-satisfying vague tables, and the
//! 3-dimensional matching reduction showing that seamless satisfaction of
//! plain FDs is hard in general.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::armstrong::FdSet;
use crate::error::{FdError, Result};
use crate::fd::FunctionalDependency;
use crate::model::{AttrId, AttrSet, Cell, Model, Schema, StandardTuple, Table, VagueTuple, Value, World};
use crate::semantics::pfd_violation;

pub const DEFAULT_SEED: u64 = 0;

/// How the set of tuples forced to share a value is grown.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AgreementSweep {
    /// Repeat passes until no tuple joins.
    #[default]
    Fixpoint,
    /// One pass over the tuples, in table order.
    SinglePass,
}

#[derive(Clone, Copy, Debug)]
pub struct ValuationOptions {
    pub seed: u64,
    pub sweep: AgreementSweep,
}

impl Default for ValuationOptions {
    fn default() -> Self {
        ValuationOptions {
            seed: DEFAULT_SEED,
            sweep: AgreementSweep::Fixpoint,
        }
    }
}

/// Produces a possible world of a vague table in which every FD of `fds`
/// holds, given that each holds as a PFD.
pub fn seamless_valuation_pfd(table: &Table, fds: &FdSet) -> Result<World> {
    seamless_valuation_with(table, fds, ValuationOptions::default())
}

pub fn seamless_valuation_with(table: &Table, fds: &FdSet, opts: ValuationOptions) -> Result<World> {
    let table = match table.model() {
        Model::Standard | Model::Vague => table.to_vague()?,
        Model::Disjunctive => {
            return Err(FdError::Inapplicable {
                semantics: "seamless valuation".into(),
                model: table.model().to_string(),
            })
        }
    };
    for fd in fds.iter() {
        fd.check_schema(table.schema())?;
        if pfd_violation(&table, fd)?.is_some() {
            return Err(FdError::PfdViolated {
                fd: fd.display(table.schema()).to_string(),
            });
        }
    }
    let mut rows: Vec<Vec<Cell>> = table
        .tuples()
        .iter()
        .map(|t| t.as_vague().map(|v| v.cells().to_vec()))
        .collect::<Result<_>>()?;
    valuate_rows(&mut rows, table.schema(), fds, opts)?;
    let picked = rows
        .into_iter()
        .map(|cells| StandardTuple(cells.into_iter().map(|c| c.into_iter().next().unwrap()).collect()));
    World::new(table.schema().clone(), picked)
}

fn valuate_rows(rows: &mut [Vec<Cell>], schema: &Schema, fds: &FdSet, opts: ValuationOptions) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    // Normalized dependencies X -> A with A outside X.
    let normalized: Vec<(AttrSet, AttrId)> = fds.iter().flat_map(FunctionalDependency::decompose).collect();
    for a in schema.all().iter() {
        let determinants: Vec<&AttrSet> = normalized.iter().filter(|(_, b)| *b == a).map(|(x, _)| x).collect();
        for i in 0..rows.len() {
            if rows[i][a.0].len() <= 1 {
                continue;
            }
            let value: Value = rows[i][a.0].iter().choose(&mut rng).unwrap().clone();
            let group = agreement_set(rows, i, &determinants, opts.sweep);
            for &j in &group {
                let cell = &mut rows[j][a.0];
                if !cell.contains(&value) {
                    return Err(FdError::Model(format!(
                        "tuple {j} cannot take value `{value}`; the input does not satisfy its PFDs"
                    )));
                }
                *cell = BTreeSet::from([value.clone()]);
            }
        }
    }
    Ok(())
}

/// Tuples that may agree with row `start` on some determinant, directly or
/// through other members.
fn agreement_set(rows: &[Vec<Cell>], start: usize, determinants: &[&AttrSet], sweep: AgreementSweep) -> Vec<usize> {
    let may_agree = |p: usize, q: usize| {
        determinants
            .iter()
            .any(|x| x.iter().all(|b| !rows[p][b.0].is_disjoint(&rows[q][b.0])))
    };
    let mut member = vec![false; rows.len()];
    member[start] = true;
    loop {
        let mut grew = false;
        for j in 0..rows.len() {
            if !member[j] && (0..rows.len()).any(|k| member[k] && may_agree(j, k)) {
                member[j] = true;
                grew = true;
            }
        }
        if !grew || sweep == AgreementSweep::SinglePass {
            break;
        }
    }
    (0..rows.len()).filter(|&j| member[j]).collect()
}

/// A 3-dimensional matching instance over disjoint element sets of size `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeDmInstance {
    xs: Vec<String>,
    ys: Vec<String>,
    zs: Vec<String>,
    triples: Vec<(usize, usize, usize)>,
}

impl ThreeDmInstance {
    pub fn new(xs: Vec<String>, ys: Vec<String>, zs: Vec<String>, triples: Vec<(usize, usize, usize)>) -> Result<Self> {
        let n = xs.len();
        if n == 0 || ys.len() != n || zs.len() != n {
            return Err(FdError::Instance(format!(
                "element sets must share a size n >= 1 (got {}, {}, {})",
                xs.len(),
                ys.len(),
                zs.len()
            )));
        }
        let all: Vec<&String> = xs.iter().chain(&ys).chain(&zs).collect();
        let distinct: BTreeSet<&String> = all.iter().copied().collect();
        if distinct.len() != all.len() {
            return Err(FdError::Instance(
                "element names must be distinct across X, Y and Z".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        for &(x, y, z) in &triples {
            if x >= n || y >= n || z >= n {
                return Err(FdError::Instance("triple refers to an unknown element".into()));
            }
            if !seen.insert((x, y, z)) {
                return Err(FdError::Instance("duplicate triple".into()));
            }
        }
        Ok(ThreeDmInstance { xs, ys, zs, triples })
    }

    /// Builds an instance from named triples; element sets are inferred by
    /// position, in order of first appearance.
    pub fn from_named(n: usize, triples: &[(&str, &str, &str)]) -> Result<Self> {
        fn index(v: &mut Vec<String>, name: &str) -> usize {
            v.iter().position(|e| e == name).unwrap_or_else(|| {
                v.push(name.to_string());
                v.len() - 1
            })
        }
        let (mut xs, mut ys, mut zs) = (Vec::new(), Vec::new(), Vec::new());
        let idx: Vec<_> = triples
            .iter()
            .map(|(x, y, z)| (index(&mut xs, x), index(&mut ys, y), index(&mut zs, z)))
            .collect();
        for (set, label) in [(&xs, "X"), (&ys, "Y"), (&zs, "Z")] {
            if set.len() > n {
                return Err(FdError::Instance(format!("{label} has more than n = {n} elements")));
            }
        }
        // Elements absent from every triple get placeholder names.
        for (set, label) in [(&mut xs, "x"), (&mut ys, "y"), (&mut zs, "z")] {
            let mut k = 0;
            while set.len() < n {
                let name = format!("_{label}{k}");
                if !set.contains(&name) {
                    set.push(name);
                }
                k += 1;
            }
        }
        Self::new(xs, ys, zs, idx)
    }

    pub fn n(&self) -> usize {
        self.xs.len()
    }

    pub fn triples(&self) -> &[(usize, usize, usize)] {
        &self.triples
    }

    pub fn xs(&self) -> &[String] {
        &self.xs
    }

    pub fn ys(&self) -> &[String] {
        &self.ys
    }

    pub fn zs(&self) -> &[String] {
        &self.zs
    }

    /// Identifier of the `i`-th triple: `t1`, `t2`, ...
    pub fn triple_id(i: usize) -> String {
        format!("t{}", i + 1)
    }

    pub fn triple_names(&self, i: usize) -> (&str, &str, &str) {
        let (x, y, z) = self.triples[i];
        (&self.xs[x], &self.ys[y], &self.zs[z])
    }
}

/// The vague table and FDs encoding a 3DM instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    /// One row per element of X, then Y, then Z.
    pub rows: Vec<VagueTuple>,
    /// The rows as a table. For n = 1 the three rows coincide and collapse.
    pub table: Table,
    pub fds: FdSet,
}

/// One tuple per element `e`: `e` in its own column, the full element set in
/// the other two, and the ids of the triples containing `e` in column `T`.
pub fn generate_3dm_reduction(inst: &ThreeDmInstance) -> Result<ReductionOutput> {
    let schema = Schema::new(["X", "Y", "Z", "T"])?;
    let full = |names: &[String]| -> Cell { names.iter().map(|s| Value::new(s)).collect() };
    let sets = [full(&inst.xs), full(&inst.ys), full(&inst.zs)];
    let names = [&inst.xs, &inst.ys, &inst.zs];
    let mut tuples = Vec::with_capacity(3 * inst.n());
    for dim in 0..3 {
        for (e, name) in names[dim].iter().enumerate() {
            let ids: Cell = inst
                .triples
                .iter()
                .enumerate()
                .filter(|(_, t)| [t.0, t.1, t.2][dim] == e)
                .map(|(i, _)| Value::new(&ThreeDmInstance::triple_id(i)))
                .collect();
            if ids.is_empty() {
                return Err(FdError::Uncoverable(name.clone()));
            }
            let mut cells = sets.to_vec();
            cells[dim] = BTreeSet::from([Value::new(name)]);
            cells.push(ids);
            tuples.push(VagueTuple::new(cells)?);
        }
    }
    let table = Table::vague(schema.clone(), tuples.iter().cloned())?;
    let fds = FdSet::new(
        ["X", "Y", "Z"]
            .into_iter()
            .map(|d| FunctionalDependency::parse_names(&schema, [d], ["T"]))
            .collect::<Result<Vec<_>>>()?,
    );
    Ok(ReductionOutput {
        rows: tuples,
        table,
        fds,
    })
}

pub const DEFAULT_3DM_CAP: usize = 6;

/// Exhaustive search for a perfect matching; returns triple indices.
pub fn solve_3dm_bruteforce(inst: &ThreeDmInstance) -> Result<Option<Vec<usize>>> {
    solve_3dm_capped(inst, DEFAULT_3DM_CAP)
}

pub fn solve_3dm_capped(inst: &ThreeDmInstance, cap: usize) -> Result<Option<Vec<usize>>> {
    let n = inst.n();
    if n > cap {
        return Err(FdError::InstanceTooLarge { n, cap });
    }
    // Triples grouped by their X element: a matching picks one per x.
    let mut by_x: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, t) in inst.triples.iter().enumerate() {
        by_x[t.0].push(i);
    }
    fn go(
        x: usize,
        by_x: &[Vec<usize>],
        triples: &[(usize, usize, usize)],
        used_y: &mut [bool],
        used_z: &mut [bool],
        picked: &mut Vec<usize>,
    ) -> bool {
        if x == by_x.len() {
            return true;
        }
        for &i in &by_x[x] {
            let (_, y, z) = triples[i];
            if used_y[y] || used_z[z] {
                continue;
            }
            used_y[y] = true;
            used_z[z] = true;
            picked.push(i);
            if go(x + 1, by_x, triples, used_y, used_z, picked) {
                return true;
            }
            picked.pop();
            used_y[y] = false;
            used_z[z] = false;
        }
        false
    }
    let mut picked = Vec::new();
    let found = go(
        0,
        &by_x,
        &inst.triples,
        &mut vec![false; n],
        &mut vec![false; n],
        &mut picked,
    );
    Ok(found.then_some(picked))
}

/// Reads the matching encoded by a world of a reduction table: the triple id
/// chosen for each `X` element. `None` when the world is not a valid encoding.
pub fn matching_from_world(inst: &ThreeDmInstance, world: &World) -> Option<BTreeSet<usize>> {
    let mut x_to_id: BTreeMap<&str, &str> = BTreeMap::new();
    for t in world.tuples() {
        let x = t.0[0].as_str();
        let id = t.0[3].as_str();
        if let Some(prev) = x_to_id.insert(x, id) {
            if prev != id {
                return None;
            }
        }
    }
    let ids: BTreeSet<usize> = x_to_id
        .values()
        .map(|id| {
            id.strip_prefix('t')
                .and_then(|k| k.parse::<usize>().ok())
                .map(|k| k - 1)
        })
        .collect::<Option<_>>()?;
    // Bijection between the n X-values and the chosen ids.
    (x_to_id.len() == inst.n() && ids.len() == inst.n()).then_some(ids)
}

/// Whether a triple subset is a perfect matching.
pub fn is_matching(inst: &ThreeDmInstance, chosen: &BTreeSet<usize>) -> bool {
    let n = inst.n();
    if chosen.len() != n {
        return false;
    }
    let mut cover = [vec![false; n], vec![false; n], vec![false; n]];
    for &i in chosen {
        let Some(&(x, y, z)) = inst.triples.get(i) else {
            return false;
        };
        for (d, e) in [x, y, z].into_iter().enumerate() {
            if cover[d][e] {
                return false;
            }
            cover[d][e] = true;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::check_standard;

    fn matching() -> ThreeDmInstance {
        ThreeDmInstance::from_named(
            3,
            &[
                ("a", "2", "B"),
                ("b", "1", "A"),
                ("c", "3", "C"),
                ("a", "1", "B"),
                ("b", "3", "B"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn matching_reduction_cells() {
        let out = generate_3dm_reduction(&matching()).unwrap();
        assert_eq!(out.table.len(), 9);
        assert_eq!(out.fds.len(), 3);
        let t_cells: BTreeSet<Vec<String>> = out
            .table
            .tuples()
            .iter()
            .map(|t| {
                let v = t.as_vague().unwrap();
                v.cells()[3].iter().map(|x| x.to_string()).collect()
            })
            .collect();
        for expect in [
            vec!["t1", "t4"],
            vec!["t2", "t5"],
            vec!["t3"],
            vec!["t2", "t4"],
            vec!["t1"],
            vec!["t3", "t5"],
            vec!["t1", "t4", "t5"],
        ] {
            let expect: Vec<String> = expect.into_iter().map(String::from).collect();
            assert!(t_cells.contains(&expect), "{expect:?}");
        }
    }

    #[test]
    fn smallest_instance() {
        let inst = ThreeDmInstance::from_named(1, &[("x", "y", "z")]).unwrap();
        let out = generate_3dm_reduction(&inst).unwrap();
        assert_eq!(out.rows.len(), 3);
        for v in &out.rows {
            assert_eq!(v.cells()[3], BTreeSet::from([Value::new("t1")]));
        }
        assert_eq!(out.table.len(), 1);
        assert_eq!(solve_3dm_bruteforce(&inst).unwrap(), Some(vec![0]));
    }

    #[test]
    fn uncoverable_and_empty() {
        let inst = ThreeDmInstance::new(vec!["x".into()], vec!["y".into()], vec!["z".into()], vec![]).unwrap();
        assert_eq!(solve_3dm_bruteforce(&inst).unwrap(), None);
        assert!(matches!(generate_3dm_reduction(&inst), Err(FdError::Uncoverable(_))));
    }

    #[test]
    fn bruteforce_matching() {
        let sol = solve_3dm_bruteforce(&matching()).unwrap().unwrap();
        assert_eq!(sol.into_iter().collect::<BTreeSet<_>>(), BTreeSet::from([0, 1, 2]));
    }

    #[test]
    fn cap_enforced() {
        let names: Vec<String> = (0..7).map(|i| format!("e{i}")).collect();
        let inst = ThreeDmInstance::new(
            names.iter().map(|s| format!("x{s}")).collect(),
            names.iter().map(|s| format!("y{s}")).collect(),
            names.iter().map(|s| format!("z{s}")).collect(),
            (0..7).map(|i| (i, i, i)).collect(),
        )
        .unwrap();
        assert!(matches!(
            solve_3dm_bruteforce(&inst),
            Err(FdError::InstanceTooLarge { n: 7, cap: 6 })
        ));
    }

    #[test]
    fn instance_validation() {
        assert!(ThreeDmInstance::new(vec![], vec![], vec![], vec![]).is_err());
        assert!(ThreeDmInstance::new(vec!["a".into()], vec!["a".into()], vec!["c".into()], vec![]).is_err());
        assert!(ThreeDmInstance::new(
            vec!["a".into()],
            vec!["b".into()],
            vec!["c".into()],
            vec![(0, 0, 0), (0, 0, 0)]
        )
        .is_err());
    }

    fn worked_example() -> (Table, FdSet) {
        let schema = Schema::new(["A", "B", "C"]).unwrap();
        let t = Table::vague(
            schema.clone(),
            [
                VagueTuple::from_strs(&[&["a1"], &["b1", "b2"], &["c1"]]).unwrap(),
                VagueTuple::from_strs(&[&["a1"], &["b1", "b2"], &["c2"]]).unwrap(),
                VagueTuple::from_strs(&[&["a2"], &["b1", "b2"], &["c2"]]).unwrap(),
            ],
        )
        .unwrap();
        let fds = FdSet::new([
            FunctionalDependency::parse_names(&schema, ["A"], ["B"]).unwrap(),
            FunctionalDependency::parse_names(&schema, ["C"], ["B"]).unwrap(),
        ]);
        (t, fds)
    }

    #[test]
    fn worked_example_collapses_b_uniformly() {
        let (t, fds) = worked_example();
        for seed in 0..8 {
            let w = seamless_valuation_with(
                &t,
                &fds,
                ValuationOptions {
                    seed,
                    ..Default::default()
                },
            )
            .unwrap();
            let bs: BTreeSet<&str> = w.tuples().map(|r| r.0[1].as_str()).collect();
            assert_eq!(bs.len(), 1);
            for fd in fds.iter() {
                assert!(check_standard(w.table(), fd).unwrap());
            }
        }
    }

    #[test]
    fn rejects_violated_precondition() {
        let schema = Schema::new(["A", "B"]).unwrap();
        let t = Table::vague(
            schema.clone(),
            [
                VagueTuple::from_strs(&[&["a"], &["b1", "b2"]]).unwrap(),
                VagueTuple::from_strs(&[&["a"], &["b1"]]).unwrap(),
            ],
        )
        .unwrap();
        let fds = FdSet::new([FunctionalDependency::parse_names(&schema, ["A"], ["B"]).unwrap()]);
        assert!(matches!(
            seamless_valuation_pfd(&t, &fds),
            Err(FdError::PfdViolated { fd }) if fd == "A -> B"
        ));
    }

    #[test]
    fn no_constraints_picks_some_valuation() {
        let schema = Schema::new(["A", "B"]).unwrap();
        let v = VagueTuple::from_strs(&[&["a", "b"], &["c"]]).unwrap();
        let t = Table::vague(schema, [v.clone()]).unwrap();
        let w = seamless_valuation_pfd(&t, &FdSet::default()).unwrap();
        assert_eq!(w.table().len(), 1);
        assert!(v.valuations().contains(w.tuples().next().unwrap()));
    }
}
