//! Table models for incomplete information: standard, vague and disjunctive
//! tuples, tables built from them, projection, valuations and possible worlds.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{FdError, Result};

/// An atomic domain element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Value(Arc<str>);

impl Value {
    pub fn new(s: &str) -> Self {
        Value(Arc::from(s))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::new(s)
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Position of an attribute within a [`Schema`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AttrId(pub usize);

/// A set of attributes, kept sorted by schema position.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AttrSet(Vec<AttrId>);

impl AttrSet {
    pub fn empty() -> Self {
        AttrSet(Vec::new())
    }

    pub fn new(ids: impl IntoIterator<Item = AttrId>) -> Self {
        let mut v: Vec<AttrId> = ids.into_iter().collect();
        v.sort();
        v.dedup();
        AttrSet(v)
    }

    pub fn from_indices(ids: impl IntoIterator<Item = usize>) -> Self {
        Self::new(ids.into_iter().map(AttrId))
    }

    pub fn iter(&self) -> impl Iterator<Item = AttrId> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: AttrId) -> bool {
        self.0.binary_search(&a).is_ok()
    }

    pub fn is_subset(&self, other: &AttrSet) -> bool {
        self.0.iter().all(|a| other.contains(*a))
    }

    pub fn union(&self, other: &AttrSet) -> AttrSet {
        AttrSet::new(self.iter().chain(other.iter()))
    }

    pub fn intersection(&self, other: &AttrSet) -> AttrSet {
        AttrSet(self.iter().filter(|a| other.contains(*a)).collect())
    }

    pub fn difference(&self, other: &AttrSet) -> AttrSet {
        AttrSet(self.iter().filter(|a| !other.contains(*a)).collect())
    }

    /// Index of `a` within this set, i.e. its column in a tuple projected on the set.
    pub fn position(&self, a: AttrId) -> Option<usize> {
        self.0.binary_search(&a).ok()
    }

    pub fn as_slice(&self) -> &[AttrId] {
        &self.0
    }
}

impl FromIterator<AttrId> for AttrSet {
    fn from_iter<I: IntoIterator<Item = AttrId>>(iter: I) -> Self {
        AttrSet::new(iter)
    }
}

/// Ordered list of uniquely named attributes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Schema {
    names: Vec<Arc<str>>,
}

impl Schema {
    pub fn new<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<Arc<str>> = names.into_iter().map(|s| Arc::from(s.as_ref())).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(FdError::Schema(format!("attribute {i} has an empty name")));
            }
            if names[..i].contains(n) {
                return Err(FdError::Schema(format!("duplicate attribute name `{n}`")));
            }
        }
        Ok(Schema { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, a: AttrId) -> &str {
        &self.names[a.0]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(|n| &**n)
    }

    pub fn all(&self) -> AttrSet {
        AttrSet::from_indices(0..self.len())
    }

    pub fn id(&self, name: &str) -> Result<AttrId> {
        self.names
            .iter()
            .position(|n| &**n == name)
            .map(AttrId)
            .ok_or_else(|| FdError::Schema(format!("unknown attribute `{name}`")))
    }

    /// Resolves attribute names into a set.
    pub fn attrs<S: AsRef<str>>(&self, names: impl IntoIterator<Item = S>) -> Result<AttrSet> {
        names.into_iter().map(|n| self.id(n.as_ref())).collect()
    }

    pub fn check(&self, x: &AttrSet) -> Result<()> {
        match x.iter().find(|a| a.0 >= self.len()) {
            Some(a) => Err(FdError::Schema(format!(
                "attribute #{} is outside a schema of {} attributes",
                a.0,
                self.len()
            ))),
            None => Ok(()),
        }
    }

    /// Sub-schema holding the attributes of `x`, in schema order.
    pub fn project(&self, x: &AttrSet) -> Result<Schema> {
        self.check(x)?;
        Ok(Schema {
            names: x.iter().map(|a| self.names[a.0].clone()).collect(),
        })
    }

    /// Renders an attribute set with its names, e.g. `A B`.
    pub fn display(&self, x: &AttrSet) -> String {
        x.iter().map(|a| self.name(a)).collect::<Vec<_>>().join(" ")
    }
}

/// One known value per attribute.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct StandardTuple(pub Vec<Value>);

impl StandardTuple {
    pub fn new<S: AsRef<str>>(vals: impl IntoIterator<Item = S>) -> Self {
        StandardTuple(vals.into_iter().map(|s| Value::new(s.as_ref())).collect())
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, a: AttrId) -> &Value {
        &self.0[a.0]
    }

    pub fn project(&self, x: &AttrSet) -> StandardTuple {
        StandardTuple(x.iter().map(|a| self.0[a.0].clone()).collect())
    }
}

impl fmt::Debug for StandardTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// A non-empty finite set of possible values.
pub type Cell = BTreeSet<Value>;

/// A tuple whose cells are non-empty sets of possible values.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VagueTuple(Vec<Cell>);

impl VagueTuple {
    pub fn new(cells: Vec<Cell>) -> Result<Self> {
        if let Some(i) = cells.iter().position(|c| c.is_empty()) {
            return Err(FdError::Model(format!("vague cell {i} is empty")));
        }
        Ok(VagueTuple(cells))
    }

    /// Builds a tuple from string cells; each inner slice is one cell.
    pub fn from_strs(cells: &[&[&str]]) -> Result<Self> {
        Self::new(
            cells
                .iter()
                .map(|c| c.iter().map(|s| Value::new(s)).collect())
                .collect(),
        )
    }

    pub fn cells(&self) -> &[Cell] {
        &self.0
    }

    pub fn cell(&self, a: AttrId) -> &Cell {
        &self.0[a.0]
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn is_standard(&self) -> bool {
        self.0.iter().all(|c| c.len() == 1)
    }

    pub fn project(&self, x: &AttrSet) -> VagueTuple {
        VagueTuple(x.iter().map(|a| self.0[a.0].clone()).collect())
    }

    /// Number of valuations, saturating.
    pub fn valuation_count(&self) -> usize {
        self.0.iter().fold(1usize, |n, c| n.saturating_mul(c.len()))
    }

    /// Cartesian product of the cells.
    pub fn valuations(&self) -> BTreeSet<StandardTuple> {
        cartesian(&self.0)
    }
}

impl From<StandardTuple> for VagueTuple {
    fn from(t: StandardTuple) -> Self {
        VagueTuple(t.0.into_iter().map(|v| BTreeSet::from([v])).collect())
    }
}

impl fmt::Debug for VagueTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write_cell(f, c)?;
        }
        f.write_str(")")
    }
}

pub(crate) fn write_cell(f: &mut impl fmt::Write, c: &Cell) -> fmt::Result {
    if c.len() == 1 {
        write!(f, "{}", c.iter().next().unwrap())
    } else {
        f.write_str("{")?;
        for (i, v) in c.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A finite disjunction of standard tuples.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DisjunctiveTuple(BTreeSet<StandardTuple>);

impl DisjunctiveTuple {
    pub fn new(disjuncts: impl IntoIterator<Item = StandardTuple>) -> Result<Self> {
        let set: BTreeSet<StandardTuple> = disjuncts.into_iter().collect();
        let mut arities = set.iter().map(StandardTuple::arity);
        let Some(first) = arities.next() else {
            return Err(FdError::Model("disjunctive tuple without disjuncts".into()));
        };
        if arities.any(|a| a != first) {
            return Err(FdError::Model("disjuncts of differing arity".into()));
        }
        Ok(DisjunctiveTuple(set))
    }

    pub fn from_strs(disjuncts: &[&[&str]]) -> Result<Self> {
        Self::new(disjuncts.iter().map(|d| StandardTuple::new(d.iter())))
    }

    pub fn disjuncts(&self) -> &BTreeSet<StandardTuple> {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.iter().next().map_or(0, StandardTuple::arity)
    }

    pub fn project(&self, x: &AttrSet) -> DisjunctiveTuple {
        DisjunctiveTuple(self.0.iter().map(|d| d.project(x)).collect())
    }

    /// The vague tuple with the same valuations, if the disjuncts form a full
    /// Cartesian product of their per-attribute values.
    pub fn try_to_vague(&self) -> Option<VagueTuple> {
        let cells: Vec<Cell> = (0..self.arity())
            .map(|i| self.0.iter().map(|d| d.0[i].clone()).collect())
            .collect();
        let vague = VagueTuple(cells);
        // The disjuncts are a subset of the product, so equal cardinality suffices.
        (vague.valuation_count() == self.0.len()).then_some(vague)
    }
}

impl From<&VagueTuple> for DisjunctiveTuple {
    fn from(t: &VagueTuple) -> Self {
        DisjunctiveTuple(t.valuations())
    }
}

impl fmt::Debug for DisjunctiveTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("||")?;
            }
            write!(f, "{d:?}")?;
        }
        Ok(())
    }
}

/// The three tuple models.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Standard,
    Vague,
    Disjunctive,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Standard => "standard",
            Model::Vague => "vague",
            Model::Disjunctive => "disjunctive",
        })
    }
}

/// A tuple of any model.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Tuple {
    Standard(StandardTuple),
    Vague(VagueTuple),
    Disjunctive(DisjunctiveTuple),
}

impl From<StandardTuple> for Tuple {
    fn from(t: StandardTuple) -> Self {
        Tuple::Standard(t)
    }
}

impl From<VagueTuple> for Tuple {
    fn from(t: VagueTuple) -> Self {
        Tuple::Vague(t)
    }
}

impl From<DisjunctiveTuple> for Tuple {
    fn from(t: DisjunctiveTuple) -> Self {
        Tuple::Disjunctive(t)
    }
}

impl Tuple {
    pub fn model(&self) -> Model {
        match self {
            Tuple::Standard(_) => Model::Standard,
            Tuple::Vague(_) => Model::Vague,
            Tuple::Disjunctive(_) => Model::Disjunctive,
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            Tuple::Standard(t) => t.arity(),
            Tuple::Vague(t) => t.arity(),
            Tuple::Disjunctive(t) => t.arity(),
        }
    }

    /// `t[X]`, keeping the model.
    pub fn project(&self, x: &AttrSet) -> Tuple {
        match self {
            Tuple::Standard(t) => Tuple::Standard(t.project(x)),
            Tuple::Vague(t) => Tuple::Vague(t.project(x)),
            Tuple::Disjunctive(t) => Tuple::Disjunctive(t.project(x)),
        }
    }

    /// All standard tuples this tuple may stand for.
    pub fn valuations(&self) -> BTreeSet<StandardTuple> {
        match self {
            Tuple::Standard(t) => BTreeSet::from([t.clone()]),
            Tuple::Vague(t) => t.valuations(),
            Tuple::Disjunctive(t) => t.disjuncts().clone(),
        }
    }

    /// Valuations of `t[X]`. For vague tuples only the product over `X` is built.
    pub fn valuations_on(&self, x: &AttrSet) -> BTreeSet<StandardTuple> {
        match self {
            Tuple::Standard(t) => BTreeSet::from([t.project(x)]),
            Tuple::Vague(t) => t.project(x).valuations(),
            Tuple::Disjunctive(t) => t.disjuncts().iter().map(|d| d.project(x)).collect(),
        }
    }

    pub fn valuation_count(&self) -> usize {
        match self {
            Tuple::Standard(_) => 1,
            Tuple::Vague(t) => t.valuation_count(),
            Tuple::Disjunctive(t) => t.disjuncts().len(),
        }
    }

    /// Views the tuple as a vague tuple; fails for disjunctive tuples.
    pub fn as_vague(&self) -> Result<VagueTuple> {
        match self {
            Tuple::Standard(t) => Ok(VagueTuple::from(t.clone())),
            Tuple::Vague(t) => Ok(t.clone()),
            Tuple::Disjunctive(_) => Err(FdError::Model("expected a vague tuple".into())),
        }
    }

    pub fn to_disjunctive(&self) -> DisjunctiveTuple {
        DisjunctiveTuple(self.valuations())
    }

    fn singleton_standard(&self) -> Option<StandardTuple> {
        match self {
            Tuple::Standard(t) => Some(t.clone()),
            Tuple::Vague(t) if t.is_standard() => Some(StandardTuple(
                t.cells().iter().map(|c| c.iter().next().unwrap().clone()).collect(),
            )),
            _ => None,
        }
    }
}

fn same_model(t1: &Tuple, t2: &Tuple) -> Result<()> {
    if t1.model() != t2.model() {
        return Err(FdError::Model(format!(
            "cannot compare a {} tuple with a {} tuple",
            t1.model(),
            t2.model()
        )));
    }
    if t1.arity() != t2.arity() {
        return Err(FdError::Schema(format!(
            "tuple arities differ ({} vs {})",
            t1.arity(),
            t2.arity()
        )));
    }
    Ok(())
}

/// Equality under the tuples' model: same set of valuations.
///
/// Vague tuples compare cell by cell; disjunctive tuples compare their
/// disjunct sets, which is stronger than attribute-wise agreement.
pub fn equal_tuples(t1: &Tuple, t2: &Tuple) -> Result<bool> {
    same_model(t1, t2)?;
    Ok(t1 == t2)
}

/// The tuple whose valuations are the union of both tuples' valuations.
pub fn tuple_union(t1: &Tuple, t2: &Tuple) -> Result<Tuple> {
    same_model(t1, t2)?;
    Ok(match (t1, t2) {
        (Tuple::Standard(a), Tuple::Standard(b)) if a == b => t1.clone(),
        (Tuple::Standard(a), Tuple::Standard(b)) => {
            // Standard tuples are closed under union only when equal; widen to vague.
            Tuple::Vague(VagueTuple(
                a.0.iter()
                    .zip(&b.0)
                    .map(|(x, y)| BTreeSet::from([x.clone(), y.clone()]))
                    .collect(),
            ))
        }
        (Tuple::Vague(a), Tuple::Vague(b)) => {
            Tuple::Vague(VagueTuple(a.0.iter().zip(&b.0).map(|(x, y)| x | y).collect()))
        }
        (Tuple::Disjunctive(a), Tuple::Disjunctive(b)) => Tuple::Disjunctive(DisjunctiveTuple(&a.0 | &b.0)),
        _ => unreachable!(),
    })
}

/// The tuple whose valuations are shared by both tuples, or `None` when no
/// valuation is shared.
pub fn tuple_intersection(t1: &Tuple, t2: &Tuple) -> Result<Option<Tuple>> {
    same_model(t1, t2)?;
    Ok(match (t1, t2) {
        (Tuple::Standard(a), Tuple::Standard(b)) => (a == b).then(|| t1.clone()),
        (Tuple::Vague(a), Tuple::Vague(b)) => {
            let cells: Vec<Cell> = a.0.iter().zip(&b.0).map(|(x, y)| x & y).collect();
            if cells.iter().any(|c| c.is_empty()) {
                None
            } else {
                Some(Tuple::Vague(VagueTuple(cells)))
            }
        }
        (Tuple::Disjunctive(a), Tuple::Disjunctive(b)) => {
            let common: BTreeSet<_> = &a.0 & &b.0;
            (!common.is_empty()).then_some(Tuple::Disjunctive(DisjunctiveTuple(common)))
        }
        _ => unreachable!(),
    })
}

/// True when some valuation of `t1[X]` equals some valuation of `t2[X]`.
pub fn may_agree(t1: &Tuple, t2: &Tuple, x: &AttrSet) -> bool {
    match (t1, t2) {
        (Tuple::Vague(_) | Tuple::Standard(_), Tuple::Vague(_) | Tuple::Standard(_)) => x.iter().all(|a| {
            let c1 = cell_of(t1, a);
            let c2 = cell_of(t2, a);
            c1.iter().any(|v| c2.contains(v))
        }),
        _ => {
            let v1 = t1.valuations_on(x);
            t2.valuations_on(x).iter().any(|v| v1.contains(v))
        }
    }
}

fn cell_of(t: &Tuple, a: AttrId) -> Cell {
    match t {
        Tuple::Standard(s) => BTreeSet::from([s.get(a).clone()]),
        Tuple::Vague(v) => v.cell(a).clone(),
        Tuple::Disjunctive(d) => d.disjuncts().iter().map(|s| s.get(a).clone()).collect(),
    }
}

/// A set of tuples of one model over one schema.
///
/// Tuples are kept in canonical (sorted, deduplicated) order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Table {
    schema: Schema,
    model: Model,
    tuples: Vec<Tuple>,
}

impl Table {
    pub fn new(schema: Schema, model: Model, tuples: impl IntoIterator<Item = Tuple>) -> Result<Self> {
        let mut out = Vec::new();
        for t in tuples {
            if t.arity() != schema.len() {
                return Err(FdError::Schema(format!(
                    "tuple of arity {} in a schema of {} attributes",
                    t.arity(),
                    schema.len()
                )));
            }
            out.push(conform(t, model)?);
        }
        out.sort();
        out.dedup();
        Ok(Table {
            schema,
            model,
            tuples: out,
        })
    }

    pub fn standard(schema: Schema, tuples: impl IntoIterator<Item = StandardTuple>) -> Result<Self> {
        Self::new(schema, Model::Standard, tuples.into_iter().map(Tuple::Standard))
    }

    pub fn vague(schema: Schema, tuples: impl IntoIterator<Item = VagueTuple>) -> Result<Self> {
        Self::new(schema, Model::Vague, tuples.into_iter().map(Tuple::Vague))
    }

    pub fn disjunctive(schema: Schema, tuples: impl IntoIterator<Item = DisjunctiveTuple>) -> Result<Self> {
        Self::new(schema, Model::Disjunctive, tuples.into_iter().map(Tuple::Disjunctive))
    }

    pub fn schema(&self) -> &Schema {
        &self.schema
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn tuples(&self) -> &[Tuple] {
        &self.tuples
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// `π_X(R)`.
    pub fn project(&self, x: &AttrSet) -> Result<Table> {
        let schema = self.schema.project(x)?;
        Table::new(schema, self.model, self.tuples.iter().map(|t| t.project(x)))
    }

    /// Equivalent disjunctive table. Each tuple becomes the disjunction of its valuations.
    pub fn to_disjunctive(&self) -> Table {
        Table {
            schema: self.schema.clone(),
            model: Model::Disjunctive,
            tuples: {
                let mut v: Vec<Tuple> = self
                    .tuples
                    .iter()
                    .map(|t| Tuple::Disjunctive(t.to_disjunctive()))
                    .collect();
                v.sort();
                v.dedup();
                v
            },
        }
    }

    /// Views a standard table as a vague table of singleton cells.
    pub fn to_vague(&self) -> Result<Table> {
        let tuples = self
            .tuples
            .iter()
            .map(|t| t.as_vague().map(Tuple::Vague))
            .collect::<Result<Vec<_>>>()?;
        Table::new(self.schema.clone(), Model::Vague, tuples)
    }

    /// Number of valuations of the whole table, saturating.
    pub fn valuation_count(&self) -> usize {
        self.tuples
            .iter()
            .fold(1usize, |n, t| n.saturating_mul(t.valuation_count()))
    }

    /// Standard tuples of a standard table.
    pub fn standard_tuples(&self) -> Result<Vec<&StandardTuple>> {
        self.tuples
            .iter()
            .map(|t| match t {
                Tuple::Standard(s) => Ok(s),
                _ => Err(FdError::Model(format!(
                    "expected a standard table, found a {} table",
                    self.model
                ))),
            })
            .collect()
    }
}

/// Coerces a tuple into the table's model, rejecting lossy conversions.
fn conform(t: Tuple, model: Model) -> Result<Tuple> {
    match (model, t) {
        (Model::Standard, Tuple::Standard(s)) => Ok(Tuple::Standard(s)),
        (Model::Standard, t) => t
            .singleton_standard()
            .map(Tuple::Standard)
            .ok_or_else(|| FdError::Model(format!("{} tuple in a standard table", t.model()))),
        (Model::Vague, t) => t.as_vague().map(Tuple::Vague),
        (Model::Disjunctive, t) => Ok(Tuple::Disjunctive(t.to_disjunctive())),
    }
}

/// A possible world: the standard table produced by one valuation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct World(Table);

impl World {
    pub fn new(schema: Schema, tuples: impl IntoIterator<Item = StandardTuple>) -> Result<Self> {
        Table::standard(schema, tuples).map(World)
    }

    pub fn table(&self) -> &Table {
        &self.0
    }

    pub fn into_table(self) -> Table {
        self.0
    }

    pub fn tuples(&self) -> impl Iterator<Item = &StandardTuple> {
        self.0.tuples.iter().map(|t| match t {
            Tuple::Standard(s) => s,
            _ => unreachable!("worlds hold standard tuples"),
        })
    }
}

/// Iterates over every valuation of a table (one choice per tuple), yielding
/// the resulting world. Distinct valuations may yield the same world.
pub struct Valuations<'a> {
    table: &'a Table,
    choices: Vec<Vec<StandardTuple>>,
    odometer: Vec<usize>,
    done: bool,
}

impl<'a> Valuations<'a> {
    pub fn new(table: &'a Table) -> Self {
        let choices: Vec<Vec<StandardTuple>> = table
            .tuples
            .iter()
            .map(|t| t.valuations().into_iter().collect())
            .collect();
        Valuations {
            table,
            odometer: vec![0; choices.len()],
            choices,
            done: false,
        }
    }
}

impl Iterator for Valuations<'_> {
    type Item = World;

    fn next(&mut self) -> Option<World> {
        if self.done {
            return None;
        }
        let picked = self.odometer.iter().zip(&self.choices).map(|(&i, c)| c[i].clone());
        let world = World::new(self.table.schema.clone(), picked).expect("valuation conforms");
        // Advance the last position fastest.
        self.done = true;
        for pos in (0..self.odometer.len()).rev() {
            self.odometer[pos] += 1;
            if self.odometer[pos] < self.choices[pos].len() {
                self.done = false;
                break;
            }
            self.odometer[pos] = 0;
        }
        Some(world)
    }
}

/// `val(R)`: all distinct possible worlds. Fails once more than `limit`
/// distinct worlds have been seen.
pub fn enumerate_worlds(table: &Table, limit: Option<usize>) -> Result<BTreeSet<World>> {
    let mut worlds = BTreeSet::new();
    for w in Valuations::new(table) {
        worlds.insert(w);
        if let Some(limit) = limit {
            if worlds.len() > limit {
                return Err(FdError::WorldLimit { limit });
            }
        }
    }
    Ok(worlds)
}

fn cartesian(cells: &[Cell]) -> BTreeSet<StandardTuple> {
    let mut acc: Vec<Vec<Value>> = vec![Vec::with_capacity(cells.len())];
    for cell in cells {
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                cell.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
    }
    acc.into_iter().map(StandardTuple).collect()
}
