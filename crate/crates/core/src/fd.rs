use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::model::{AttrId, AttrSet, Schema};

/// `X -> Y` over one schema. Either side may be empty, and they may overlap.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FunctionalDependency {
    pub lhs: AttrSet,
    pub rhs: AttrSet,
}

impl FunctionalDependency {
    pub fn new(lhs: AttrSet, rhs: AttrSet) -> Self {
        FunctionalDependency { lhs, rhs }
    }

    /// Builds an FD from attribute names.
    pub fn parse_names<S: AsRef<str>>(
        schema: &Schema,
        lhs: impl IntoIterator<Item = S>,
        rhs: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        Ok(FunctionalDependency {
            lhs: schema.attrs(lhs)?,
            rhs: schema.attrs(rhs)?,
        })
    }

    pub fn attrs(&self) -> AttrSet {
        self.lhs.union(&self.rhs)
    }

    pub fn check_schema(&self, schema: &Schema) -> Result<()> {
        schema.check(&self.lhs)?;
        schema.check(&self.rhs)
    }

    /// `X -> A` for every `A` in `Y - X`.
    pub fn decompose(&self) -> Vec<(AttrSet, AttrId)> {
        self.rhs
            .difference(&self.lhs)
            .iter()
            .map(|a| (self.lhs.clone(), a))
            .collect()
    }

    pub fn display<'a>(&'a self, schema: &'a Schema) -> impl fmt::Display + 'a {
        DisplayFd { fd: self, schema }
    }
}

struct DisplayFd<'a> {
    fd: &'a FunctionalDependency,
    schema: &'a Schema,
}

impl fmt::Display for DisplayFd<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lhs = self.schema.display(&self.fd.lhs);
        let rhs = self.schema.display(&self.fd.rhs);
        match (lhs.is_empty(), rhs.is_empty()) {
            (true, true) => f.write_str("->"),
            (true, false) => write!(f, "-> {rhs}"),
            (false, true) => write!(f, "{lhs} ->"),
            (false, false) => write!(f, "{lhs} -> {rhs}"),
        }
    }
}
