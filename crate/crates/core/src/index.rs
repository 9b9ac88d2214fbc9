//! Incremental PFD enforcement: a map from `X`-bindings to their `Y`-answer
//! sets, with support counters so tuples can be removed again.

use std::collections::{BTreeSet, HashMap};

use crate::error::{FdError, Result};
use crate::fd::FunctionalDependency;
use crate::model::{StandardTuple, Tuple};
use crate::semantics::selection_map;

type Answer = BTreeSet<StandardTuple>;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Entry {
    answer: Answer,
    support: usize,
}

/// Why an insert was refused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conflict {
    pub binding: StandardTuple,
    pub stored: Answer,
    pub offered: Answer,
}

/// Counter-backed index for one FD `X -> Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfdIndex {
    fd: FunctionalDependency,
    entries: HashMap<StandardTuple, Entry>,
}

impl PfdIndex {
    pub fn new(fd: FunctionalDependency) -> Self {
        PfdIndex {
            fd,
            entries: HashMap::new(),
        }
    }

    pub fn fd(&self) -> &FunctionalDependency {
        &self.fd
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Stored answer and support for a binding.
    pub fn entry(&self, binding: &StandardTuple) -> Option<(&Answer, usize)> {
        self.entries.get(binding).map(|e| (&e.answer, e.support))
    }

    /// Sorted snapshot of all entries.
    pub fn snapshot(&self) -> Vec<(StandardTuple, Answer, usize)> {
        let mut v: Vec<_> = self
            .entries
            .iter()
            .map(|(k, e)| (k.clone(), e.answer.clone(), e.support))
            .collect();
        v.sort();
        v
    }

    fn answers(&self, t: &Tuple) -> Result<Vec<(StandardTuple, Answer)>> {
        let width = self
            .fd
            .lhs
            .iter()
            .chain(self.fd.rhs.iter())
            .map(|a| a.0 + 1)
            .max()
            .unwrap_or(0);
        if t.arity() < width {
            return Err(FdError::Schema(format!(
                "tuple of arity {} is too narrow for the indexed dependency",
                t.arity()
            )));
        }
        Ok(selection_map(t, &self.fd.lhs, &self.fd.rhs).into_iter().collect())
    }

    /// Dry run of [`insert`](Self::insert).
    pub fn check(&self, t: &Tuple) -> Result<Option<Conflict>> {
        Ok(self.first_conflict(&self.answers(t)?))
    }

    fn first_conflict(&self, answers: &[(StandardTuple, Answer)]) -> Option<Conflict> {
        answers.iter().find_map(|(bind, ans)| match self.entries.get(bind) {
            Some(e) if e.answer != *ans => Some(Conflict {
                binding: bind.clone(),
                stored: e.answer.clone(),
                offered: ans.clone(),
            }),
            _ => None,
        })
    }

    /// Adds a tuple unless one of its bindings already maps to a different
    /// answer set. A rejected insert leaves the index untouched.
    pub fn insert(&mut self, t: &Tuple) -> Result<Option<Conflict>> {
        let answers = self.answers(t)?;
        if let Some(c) = self.first_conflict(&answers) {
            return Ok(Some(c));
        }
        for (bind, answer) in answers {
            self.entries
                .entry(bind)
                .and_modify(|e| e.support += 1)
                .or_insert(Entry { answer, support: 1 });
        }
        Ok(None)
    }

    /// Removes a previously accepted tuple.
    pub fn remove(&mut self, t: &Tuple) -> Result<()> {
        let answers = self.answers(t)?;
        for (bind, ans) in &answers {
            match self.entries.get(bind) {
                Some(e) if e.answer == *ans => {}
                Some(_) => {
                    return Err(FdError::IndexContract(format!(
                        "binding {bind:?} holds a different answer set"
                    )))
                }
                None => return Err(FdError::IndexContract(format!("binding {bind:?} is not indexed"))),
            }
        }
        for (bind, _) in answers {
            let e = self.entries.get_mut(&bind).unwrap();
            e.support -= 1;
            if e.support == 0 {
                self.entries.remove(&bind);
            }
        }
        Ok(())
    }
}
