//! Satisfaction checkers for functional dependencies over standard, vague and
//! disjunctive tables.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{FdError, Result};
use crate::fd::FunctionalDependency;
use crate::model::{AttrSet, Cell, Model, StandardTuple, Table, Tuple, Value, World};

/// Default cap on search nodes for weak and seamless satisfaction.
pub const DEFAULT_VALUATION_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Semantics {
    Standard,
    Strong,
    Weak,
    /// The whole FD set must hold in one possible world.
    Seamless,
    Pfd,
    Vertical,
    #[serde(rename = "rm")]
    RajuMajumdar,
}

impl Semantics {
    pub const ALL: [Semantics; 7] = [
        Semantics::Standard,
        Semantics::Strong,
        Semantics::Weak,
        Semantics::Seamless,
        Semantics::Pfd,
        Semantics::Vertical,
        Semantics::RajuMajumdar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::Standard => "standard",
            Semantics::Strong => "strong",
            Semantics::Weak => "weak",
            Semantics::Seamless => "seamless",
            Semantics::Pfd => "pfd",
            Semantics::Vertical => "vertical",
            Semantics::RajuMajumdar => "rm",
        }
    }

    pub fn applies_to(self, model: Model) -> bool {
        match self {
            Semantics::Standard => model == Model::Standard,
            Semantics::RajuMajumdar => model != Model::Disjunctive,
            _ => true,
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Semantics::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown semantics `{s}`"))
    }
}

/// `t[X=ā][Y]` together with the binding it was selected by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionResult {
    pub binding: StandardTuple,
    pub answer: BTreeSet<StandardTuple>,
}

/// Selects the valuations of `t` agreeing with `binding` on `x`, projected on `y`.
///
/// For vague tuples only the product over `x ∪ y` is enumerated.
pub fn select(t: &Tuple, x: &AttrSet, binding: &StandardTuple, y: &AttrSet) -> SelectionResult {
    let answer = match t {
        Tuple::Vague(v) => {
            let matches = x.iter().zip(&binding.0).all(|(a, val)| v.cell(a).contains(val));
            if matches {
                let cells: Vec<Cell> = y
                    .iter()
                    .map(|a| match x.position(a) {
                        Some(i) => BTreeSet::from([binding.0[i].clone()]),
                        None => v.cell(a).clone(),
                    })
                    .collect();
                crate::model::VagueTuple::new(cells)
                    .expect("cells are non-empty")
                    .valuations()
            } else {
                BTreeSet::new()
            }
        }
        _ => t
            .valuations()
            .into_iter()
            .filter(|d| d.project(x) == *binding)
            .map(|d| d.project(y))
            .collect(),
    };
    SelectionResult {
        binding: binding.clone(),
        answer,
    }
}

/// Maps every binding `ā ∈ t[X]` to `t[X=ā][Y]`.
pub fn selection_map(t: &Tuple, x: &AttrSet, y: &AttrSet) -> BTreeMap<StandardTuple, BTreeSet<StandardTuple>> {
    let xy = x.union(y);
    let xi: Vec<usize> = x.iter().map(|a| xy.position(a).unwrap()).collect();
    let yi: Vec<usize> = y.iter().map(|a| xy.position(a).unwrap()).collect();
    let mut map: BTreeMap<StandardTuple, BTreeSet<StandardTuple>> = BTreeMap::new();
    for v in t.valuations_on(&xy) {
        let bind = StandardTuple(xi.iter().map(|&i| v.0[i].clone()).collect());
        let ans = StandardTuple(yi.iter().map(|&i| v.0[i].clone()).collect());
        map.entry(bind).or_default().insert(ans);
    }
    map
}

/// A pair of tuples (by canonical position) witnessing a violation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub t1: usize,
    pub t2: usize,
    /// The shared `X`-binding, when the semantics has one.
    pub binding: Option<StandardTuple>,
    pub detail: String,
}

fn check_fd_schema(table: &Table, fd: &FunctionalDependency) -> Result<()> {
    fd.check_schema(table.schema())
}

fn require(semantics: Semantics, table: &Table) -> Result<()> {
    if semantics.applies_to(table.model()) {
        Ok(())
    } else {
        Err(FdError::Inapplicable {
            semantics: semantics.to_string(),
            model: table.model().to_string(),
        })
    }
}

/// Classical satisfaction on a standard table.
pub fn check_standard(table: &Table, fd: &FunctionalDependency) -> Result<bool> {
    standard_violation(table, fd).map(|v| v.is_none())
}

pub fn standard_violation(table: &Table, fd: &FunctionalDependency) -> Result<Option<Violation>> {
    require(Semantics::Standard, table)?;
    check_fd_schema(table, fd)?;
    let tuples = table.standard_tuples()?;
    Ok(standard_pairs(&tuples, fd))
}

fn standard_pairs(tuples: &[&StandardTuple], fd: &FunctionalDependency) -> Option<Violation> {
    let mut seen: BTreeMap<StandardTuple, (usize, StandardTuple)> = BTreeMap::new();
    let mut best: Option<(usize, usize)> = None;
    for (j, t) in tuples.iter().enumerate() {
        let x = t.project(&fd.lhs);
        let y = t.project(&fd.rhs);
        match seen.get(&x) {
            Some((i, y0)) if *y0 != y => {
                if best.is_none_or(|b| (*i, j) < b) {
                    best = Some((*i, j));
                }
            }
            Some(_) => {}
            None => {
                seen.insert(x, (j, y));
            }
        }
    }
    best.map(|(i, j)| Violation {
        t1: i,
        t2: j,
        binding: Some(tuples[i].project(&fd.lhs)),
        detail: format!("{:?} and {:?} agree on the left side only", tuples[i], tuples[j]),
    })
}

/// Whether the FD holds in a standard world.
pub fn world_satisfies(world: &World, fd: &FunctionalDependency) -> bool {
    let tuples: Vec<&StandardTuple> = world.tuples().collect();
    standard_pairs(&tuples, fd).is_none()
}

/// Strong satisfaction: the FD holds in every possible world.
///
/// A world violates the FD exactly when two distinct tuples pick valuations
/// agreeing on `X` but not on `Y`, so the check is done pairwise on the
/// `X ∪ Y` selections without enumerating worlds.
pub fn check_strong(table: &Table, fd: &FunctionalDependency) -> Result<bool> {
    strong_violation(table, fd).map(|v| v.is_none())
}

pub fn strong_violation(table: &Table, fd: &FunctionalDependency) -> Result<Option<Violation>> {
    check_fd_schema(table, fd)?;
    let maps: Vec<_> = table
        .tuples()
        .iter()
        .map(|t| selection_map(t, &fd.lhs, &fd.rhs))
        .collect();
    for i in 0..maps.len() {
        for j in i + 1..maps.len() {
            for (bind, a1) in &maps[i] {
                let Some(a2) = maps[j].get(bind) else { continue };
                let mut all = a1.iter().chain(a2.iter());
                let first = all.next().unwrap();
                if all.any(|y| y != first) {
                    return Ok(Some(Violation {
                        t1: i,
                        t2: j,
                        binding: Some(bind.clone()),
                        detail: "some world picks different right-hand values".into(),
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Weak satisfaction: some possible world satisfies the FD.
pub fn check_weak(table: &Table, fd: &FunctionalDependency, budget: u64) -> Result<bool> {
    Ok(check_seamless(table, std::slice::from_ref(fd), budget)?.is_some())
}

/// Searches for one possible world satisfying every FD in `fds`.
///
/// Exhaustive backtracking over per-tuple valuations, restricted to the
/// attributes mentioned by `fds`. `budget` caps the number of tentative
/// tuple assignments; exceeding it yields [`FdError::Budget`].
pub fn check_seamless(table: &Table, fds: &[FunctionalDependency], budget: u64) -> Result<Option<World>> {
    for fd in fds {
        check_fd_schema(table, fd)?;
    }
    let relevant = fds.iter().fold(AttrSet::empty(), |acc, fd| acc.union(&fd.attrs()));
    let local: Vec<(AttrSet, AttrSet)> = fds
        .iter()
        .map(|fd| {
            let pos = |s: &AttrSet| AttrSet::from_indices(s.iter().map(|a| relevant.position(a).unwrap()));
            (pos(&fd.lhs), pos(&fd.rhs))
        })
        .collect();

    // Candidate relevant-projections per tuple, with one full valuation each.
    let options: Vec<Vec<(StandardTuple, StandardTuple)>> =
        table.tuples().iter().map(|t| relevant_options(t, &relevant)).collect();
    let mut search = Search {
        options: &options,
        fds: &local,
        chosen: vec![None; options.len()],
        domains: options.iter().map(|o| (0..o.len()).collect()).collect(),
        nodes: 0,
        budget,
    };
    if !search.descend()? {
        return Ok(None);
    }
    let picked = search
        .chosen
        .iter()
        .enumerate()
        .map(|(i, c)| options[i][c.unwrap()].1.clone());
    World::new(table.schema().clone(), picked).map(Some)
}

fn relevant_options(t: &Tuple, relevant: &AttrSet) -> Vec<(StandardTuple, StandardTuple)> {
    match t {
        Tuple::Vague(v) => {
            // Attributes outside the FDs take their first value.
            let fill: Vec<Value> = v.cells().iter().map(|c| c.iter().next().unwrap().clone()).collect();
            t.valuations_on(relevant)
                .into_iter()
                .map(|p| {
                    let mut full = fill.clone();
                    for (a, val) in relevant.iter().zip(&p.0) {
                        full[a.0] = val.clone();
                    }
                    (p, StandardTuple(full))
                })
                .collect()
        }
        _ => {
            let mut seen: BTreeMap<StandardTuple, StandardTuple> = BTreeMap::new();
            for d in t.valuations() {
                seen.entry(d.project(relevant)).or_insert(d);
            }
            seen.into_iter().collect()
        }
    }
}

/// Forward-checking search: each unassigned tuple keeps the options still
/// compatible with every assignment so far, and the tuple with the fewest
/// options is assigned next.
struct Search<'a> {
    options: &'a [Vec<(StandardTuple, StandardTuple)>],
    fds: &'a [(AttrSet, AttrSet)],
    chosen: Vec<Option<usize>>,
    domains: Vec<Vec<usize>>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn descend(&mut self) -> Result<bool> {
        let next = (0..self.chosen.len())
            .filter(|&i| self.chosen[i].is_none())
            .min_by_key(|&i| self.domains[i].len());
        let Some(ti) = next else { return Ok(true) };
        for c in self.domains[ti].clone() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(FdError::Budget { budget: self.budget });
            }
            self.chosen[ti] = Some(c);
            let mut saved = Vec::new();
            let mut alive = true;
            for j in 0..self.chosen.len() {
                if self.chosen[j].is_some() {
                    continue;
                }
                let cand = &self.options[ti][c].0;
                let kept: Vec<usize> = self.domains[j]
                    .iter()
                    .copied()
                    .filter(|&d| compatible(self.fds, cand, &self.options[j][d].0))
                    .collect();
                if kept.len() < self.domains[j].len() {
                    alive &= !kept.is_empty();
                    saved.push((j, std::mem::replace(&mut self.domains[j], kept)));
                }
                if !alive {
                    break;
                }
            }
            if alive && self.descend()? {
                return Ok(true);
            }
            for (j, d) in saved {
                self.domains[j] = d;
            }
            self.chosen[ti] = None;
        }
        Ok(false)
    }
}

fn compatible(fds: &[(AttrSet, AttrSet)], p: &StandardTuple, q: &StandardTuple) -> bool {
    fds.iter()
        .all(|(x, y)| !x.iter().all(|a| p.0[a.0] == q.0[a.0]) || y.iter().all(|a| p.0[a.0] == q.0[a.0]))
}

/// PFD satisfaction: for every pair of tuples (including a tuple with itself)
/// and every shared binding `ā ∈ t1[X] ∩ t2[X]`, `t1[X=ā][Y] = t2[X=ā][Y]`.
pub fn check_pfd(table: &Table, fd: &FunctionalDependency) -> Result<bool> {
    pfd_violation(table, fd).map(|v| v.is_none())
}

pub fn pfd_violation(table: &Table, fd: &FunctionalDependency) -> Result<Option<Violation>> {
    check_fd_schema(table, fd)?;
    let maps: Vec<_> = table
        .tuples()
        .iter()
        .map(|t| selection_map(t, &fd.lhs, &fd.rhs))
        .collect();
    Ok(pfd_pairs(&maps))
}

fn pfd_pairs(maps: &[BTreeMap<StandardTuple, BTreeSet<StandardTuple>>]) -> Option<Violation> {
    // Pairs (i, i) agree trivially.
    for i in 0..maps.len() {
        for j in i + 1..maps.len() {
            for (bind, a1) in &maps[i] {
                match maps[j].get(bind) {
                    Some(a2) if a1 != a2 => {
                        return Some(Violation {
                            t1: i,
                            t2: j,
                            binding: Some(bind.clone()),
                            detail: format!("answers {a1:?} and {a2:?} differ"),
                        })
                    }
                    _ => {}
                }
            }
        }
    }
    None
}

/// PFD check on a vague table through decomposition into `X -> A` for
/// `A ∈ Y - X`: tuples whose `X` cells may agree must have equal `Y - X` cells.
pub fn check_pfd_decomposed(table: &Table, fd: &FunctionalDependency) -> Result<bool> {
    check_fd_schema(table, fd)?;
    let vague = match table.model() {
        Model::Disjunctive => {
            return Err(FdError::Inapplicable {
                semantics: "decomposed pfd".into(),
                model: table.model().to_string(),
            })
        }
        _ => table.to_vague()?,
    };
    let rest = fd.rhs.difference(&fd.lhs);
    let tuples: Vec<_> = vague.tuples().iter().map(|t| t.as_vague().unwrap()).collect();
    for (i, t1) in tuples.iter().enumerate() {
        for t2 in &tuples[i + 1..] {
            let overlap = fd.lhs.iter().all(|a| !t1.cell(a).is_disjoint(t2.cell(a)));
            if overlap && rest.iter().any(|a| t1.cell(a) != t2.cell(a)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Vertical FD satisfaction on the disjunctive view of the table.
pub fn check_vertical(table: &Table, fd: &FunctionalDependency) -> Result<bool> {
    vertical_violation(table, fd).map(|v| v.is_none())
}

pub fn vertical_violation(table: &Table, fd: &FunctionalDependency) -> Result<Option<Violation>> {
    check_fd_schema(table, fd)?;
    let table = table.to_disjunctive();
    let maps: Vec<_> = table
        .tuples()
        .iter()
        .map(|t| selection_map(t, &fd.lhs, &fd.rhs))
        .collect();
    // Condition 1: cross-tuple agreement.
    if let Some(v) = pfd_pairs(&maps) {
        return Ok(Some(v));
    }
    let dependent = fd.rhs.difference(&fd.lhs);
    let rest = table.schema().all().difference(&fd.lhs).difference(&dependent);
    for (i, t) in table.tuples().iter().enumerate() {
        // Condition 2: per-binding product form on Y - X.
        for bind in maps[i].keys() {
            let sel = select(t, &fd.lhs, bind, &dependent).answer;
            let product: usize = (0..dependent.len())
                .map(|k| sel.iter().map(|s| &s.0[k]).collect::<BTreeSet<_>>().len())
                .product();
            if product != sel.len() {
                return Ok(Some(Violation {
                    t1: i,
                    t2: i,
                    binding: Some(bind.clone()),
                    detail: "selection is not a Cartesian product".into(),
                }));
            }
        }
        // Condition 3: X ->> Y - X over the tuple's own disjuncts.
        if let Tuple::Disjunctive(d) = t {
            if let Some(bind) = mvd_violation(d.disjuncts(), &fd.lhs, &dependent, &rest) {
                return Ok(Some(Violation {
                    t1: i,
                    t2: i,
                    binding: Some(bind),
                    detail: "multivalued dependency fails within the tuple".into(),
                }));
            }
        }
    }
    Ok(None)
}

/// Checks `X ->> Z` in a relation; returns a binding witnessing failure.
pub fn mvd_violation(
    rows: &BTreeSet<StandardTuple>,
    x: &AttrSet,
    z: &AttrSet,
    rest: &AttrSet,
) -> Option<StandardTuple> {
    let keyed: BTreeSet<(StandardTuple, StandardTuple, StandardTuple)> = rows
        .iter()
        .map(|r| (r.project(x), r.project(z), r.project(rest)))
        .collect();
    for (x1, z1, _) in &keyed {
        for (x2, _, r2) in &keyed {
            if x1 == x2 && !keyed.contains(&(x1.clone(), z1.clone(), r2.clone())) {
                return Some(x1.clone());
            }
        }
    }
    None
}

/// A resemblance score `num / den` in `[0, 1]`, compared exactly.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Resemblance {
    num: usize,
    den: usize,
}

impl Resemblance {
    pub const ONE: Resemblance = Resemblance { num: 1, den: 1 };
    pub const ZERO: Resemblance = Resemblance { num: 0, den: 1 };

    pub fn value(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialEq for Resemblance {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Resemblance {}

impl PartialOrd for Resemblance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Resemblance {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

/// How the two overlap ratios of a resemblance are combined.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ResemblanceKind {
    /// `max(|a∩b|/|a|, |a∩b|/|b|)`
    #[default]
    Max,
    /// `min(|a∩b|/|a|, |a∩b|/|b|)`
    Min,
}

/// `μ_EQ(a, b)`.
pub fn resemblance(a: &Cell, b: &Cell) -> Result<Resemblance> {
    resemblance_with(a, b, ResemblanceKind::Max)
}

pub fn resemblance_with(a: &Cell, b: &Cell, kind: ResemblanceKind) -> Result<Resemblance> {
    if a.is_empty() || b.is_empty() {
        return Err(FdError::Model("resemblance of an empty set".into()));
    }
    let common = a.intersection(b).count();
    let ra = Resemblance {
        num: common,
        den: a.len(),
    };
    let rb = Resemblance {
        num: common,
        den: b.len(),
    };
    Ok(match kind {
        ResemblanceKind::Max => ra.max(rb),
        ResemblanceKind::Min => ra.min(rb),
    })
}

/// Minimum of the per-attribute resemblances on `z`; one when `z` is empty.
pub fn tuple_resemblance(t1: &Tuple, t2: &Tuple, z: &AttrSet) -> Result<Resemblance> {
    tuple_resemblance_with(t1, t2, z, ResemblanceKind::Max)
}

pub fn tuple_resemblance_with(t1: &Tuple, t2: &Tuple, z: &AttrSet, kind: ResemblanceKind) -> Result<Resemblance> {
    let (v1, v2) = (t1.as_vague()?, t2.as_vague()?);
    z.iter().try_fold(Resemblance::ONE, |acc, a| {
        Ok(acc.min(resemblance_with(v1.cell(a), v2.cell(a), kind)?))
    })
}

/// Raju-Majumdar fuzzy FD: `μ(t[Y], t'[Y]) ≥ μ(t[X], t'[X])` for all pairs.
pub fn check_rm(table: &Table, fd: &FunctionalDependency) -> Result<bool> {
    rm_violation(table, fd, ResemblanceKind::Max).map(|v| v.is_none())
}

pub fn check_rm_with(table: &Table, fd: &FunctionalDependency, kind: ResemblanceKind) -> Result<bool> {
    rm_violation(table, fd, kind).map(|v| v.is_none())
}

pub fn rm_violation(table: &Table, fd: &FunctionalDependency, kind: ResemblanceKind) -> Result<Option<Violation>> {
    require(Semantics::RajuMajumdar, table)?;
    check_fd_schema(table, fd)?;
    let tuples = table.tuples();
    for i in 0..tuples.len() {
        for j in i + 1..tuples.len() {
            let rx = tuple_resemblance_with(&tuples[i], &tuples[j], &fd.lhs, kind)?;
            let ry = tuple_resemblance_with(&tuples[i], &tuples[j], &fd.rhs, kind)?;
            if ry < rx {
                return Ok(Some(Violation {
                    t1: i,
                    t2: j,
                    binding: None,
                    detail: format!(
                        "right-side resemblance {:.3} below left-side {:.3}",
                        ry.value(),
                        rx.value()
                    ),
                }));
            }
        }
    }
    Ok(None)
}

/// Verdict for one FD.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FdVerdict {
    pub fd: String,
    pub holds: bool,
    pub violation: Option<Violation>,
}

/// Result of checking a set of FDs under one semantics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub semantics: Semantics,
    pub model: Model,
    pub verdicts: Vec<FdVerdict>,
    /// Seamless only: the world satisfying the whole set, if any.
    pub witness: Option<World>,
    pub satisfied: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub budget: u64,
    pub resemblance: ResemblanceKind,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            budget: DEFAULT_VALUATION_CAP,
            resemblance: ResemblanceKind::Max,
        }
    }
}

/// Checks each FD (or, for seamless, the set as a whole) under `semantics`.
pub fn check(table: &Table, fds: &[FunctionalDependency], semantics: Semantics, opts: CheckOptions) -> Result<Report> {
    require(semantics, table)?;
    let schema = table.schema();
    let mut verdicts = Vec::with_capacity(fds.len());
    let mut witness = None;
    if semantics == Semantics::Seamless {
        witness = check_seamless(table, fds, opts.budget)?;
        for fd in fds {
            verdicts.push(FdVerdict {
                fd: fd.display(schema).to_string(),
                holds: witness.is_some(),
                violation: None,
            });
        }
    } else {
        for fd in fds {
            let violation = match semantics {
                Semantics::Standard => standard_violation(table, fd)?,
                Semantics::Strong => strong_violation(table, fd)?,
                Semantics::Weak => {
                    check_fd_schema(table, fd)?;
                    if check_weak(table, fd, opts.budget)? {
                        None
                    } else {
                        Some(Violation {
                            t1: 0,
                            t2: 0,
                            binding: None,
                            detail: "no possible world satisfies the dependency".into(),
                        })
                    }
                }
                Semantics::Pfd => pfd_violation(table, fd)?,
                Semantics::Vertical => vertical_violation(table, fd)?,
                Semantics::RajuMajumdar => rm_violation(table, fd, opts.resemblance)?,
                Semantics::Seamless => unreachable!(),
            };
            verdicts.push(FdVerdict {
                fd: fd.display(schema).to_string(),
                holds: violation.is_none(),
                violation,
            });
        }
    }
    let satisfied = match semantics {
        Semantics::Seamless => witness.is_some(),
        _ => verdicts.iter().all(|v| v.holds),
    };
    Ok(Report {
        semantics,
        model: table.model(),
        verdicts,
        witness,
        satisfied,
    })
}
