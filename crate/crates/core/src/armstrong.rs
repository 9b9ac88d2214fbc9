//! Syntactic reasoning with Armstrong's axioms: closure, implication and
//! checkable derivations.

use serde::{Deserialize, Serialize};

use crate::fd::FunctionalDependency;
use crate::model::AttrSet;

/// A duplicate-free set of FDs over one schema.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FdSet(Vec<FunctionalDependency>);

impl FdSet {
    pub fn new(fds: impl IntoIterator<Item = FunctionalDependency>) -> Self {
        let mut v: Vec<_> = fds.into_iter().collect();
        v.sort();
        v.dedup();
        FdSet(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &FunctionalDependency> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&FunctionalDependency> {
        self.0.get(i)
    }

    fn position(&self, fd: &FunctionalDependency) -> Option<usize> {
        self.0.binary_search(fd).ok()
    }
}

impl FromIterator<FunctionalDependency> for FdSet {
    fn from_iter<I: IntoIterator<Item = FunctionalDependency>>(iter: I) -> Self {
        FdSet::new(iter)
    }
}

/// `X⁺` under `fds`.
pub fn attribute_closure(fds: &FdSet, x: &AttrSet) -> AttrSet {
    closure_trace(fds, x).0
}

/// Closure plus the FDs (by index) in the order they fired.
fn closure_trace(fds: &FdSet, x: &AttrSet) -> (AttrSet, Vec<usize>) {
    let mut closure = x.clone();
    let mut fired = Vec::new();
    let mut pending: Vec<usize> = (0..fds.len()).collect();
    loop {
        let before = pending.len();
        pending.retain(|&i| {
            let fd = &fds.0[i];
            if fd.lhs.is_subset(&closure) {
                if !fd.rhs.is_subset(&closure) {
                    closure = closure.union(&fd.rhs);
                    fired.push(i);
                }
                false
            } else {
                true
            }
        });
        if pending.len() == before {
            return (closure, fired);
        }
    }
}

pub fn implies(fds: &FdSet, fd: &FunctionalDependency) -> bool {
    fd.rhs.is_subset(&attribute_closure(fds, &fd.lhs))
}

/// Where a step's premise comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Premise {
    /// Index into the base [`FdSet`].
    Base(usize),
    /// Conclusion of an earlier step.
    Step(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    /// `Y ⊆ X` gives `X -> Y`.
    Reflexivity { conclusion: FunctionalDependency },
    /// `X -> Y` gives `XZ -> YZ`.
    Augmentation {
        premise: Premise,
        by: AttrSet,
        conclusion: FunctionalDependency,
    },
    /// `X -> Y` and `Y -> Z` give `X -> Z`.
    Transitivity {
        first: Premise,
        second: Premise,
        conclusion: FunctionalDependency,
    },
}

impl Step {
    pub fn conclusion(&self) -> &FunctionalDependency {
        match self {
            Step::Reflexivity { conclusion }
            | Step::Augmentation { conclusion, .. }
            | Step::Transitivity { conclusion, .. } => conclusion,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub conclusion: FunctionalDependency,
    pub steps: Vec<Step>,
}

/// Derives `fd` from `fds` with the three axioms, or `None` when not implied.
///
/// Steps come in canonical order: reflexivities, then augmentations, then
/// transitivities.
pub fn derive(fds: &FdSet, fd: &FunctionalDependency) -> Option<Derivation> {
    let conclusion = fd.clone();
    if fds.position(fd).is_some() {
        return Some(Derivation {
            conclusion,
            steps: Vec::new(),
        });
    }
    if fd.rhs.is_subset(&fd.lhs) {
        return Some(Derivation {
            conclusion,
            steps: vec![Step::Reflexivity { conclusion: fd.clone() }],
        });
    }
    // One transitivity between base FDs.
    for (i, f1) in fds.iter().enumerate() {
        if f1.lhs != fd.lhs {
            continue;
        }
        if let Some(j) = fds.position(&FunctionalDependency::new(f1.rhs.clone(), fd.rhs.clone())) {
            return Some(Derivation {
                conclusion,
                steps: vec![Step::Transitivity {
                    first: Premise::Base(i),
                    second: Premise::Base(j),
                    conclusion: fd.clone(),
                }],
            });
        }
    }

    let (closure, fired) = closure_trace(fds, &fd.lhs);
    if !fd.rhs.is_subset(&closure) {
        return None;
    }

    // Grow X -> W one fired FD V -> U at a time: augmenting V -> U by W
    // gives W -> WU, and transitivity extends X -> W to X -> WU.
    let mut refl = Vec::new();
    let mut augs = Vec::new();
    let mut trans = Vec::new();
    let x = &fd.lhs;
    let mut w = x.clone();
    let mut grown: Option<Held> = None;
    for &i in &fired {
        let base = &fds.0[i];
        let next = w.union(&base.rhs);
        augs.push(Step::Augmentation {
            premise: Premise::Base(i),
            by: w.clone(),
            conclusion: FunctionalDependency::new(w.union(&base.lhs), next.clone()),
        });
        let aug = augs.len() - 1;
        match grown {
            // W = X: the augmentation already reads X -> XU.
            None => grown = Some(Held::Aug(aug)),
            Some(prev) => {
                trans.push((prev, aug, FunctionalDependency::new(x.clone(), next.clone())));
                grown = Some(Held::Trans(trans.len() - 1));
            }
        }
        w = next;
    }
    let needs_tail = fd.rhs != w;
    if needs_tail {
        refl.push(Step::Reflexivity {
            conclusion: FunctionalDependency::new(w.clone(), fd.rhs.clone()),
        });
    }

    // Lay out: refl, augs, trans. Resolve symbolic references to step indices.
    let aug_base = refl.len();
    let trans_base = aug_base + augs.len();
    let resolve = |r: Held| match r {
        Held::Aug(i) => Premise::Step(aug_base + i),
        Held::Trans(i) => Premise::Step(trans_base + i),
    };
    let mut steps = refl;
    steps.extend(augs);
    for (prev, aug, c) in trans.iter().cloned() {
        steps.push(Step::Transitivity {
            first: resolve(prev),
            second: Premise::Step(aug_base + aug),
            conclusion: c,
        });
    }
    let holder = grown.map(resolve);
    if needs_tail {
        let first = holder.expect("rhs not inside lhs, so some FD fired");
        steps.push(Step::Transitivity {
            first,
            second: Premise::Step(0),
            conclusion: fd.clone(),
        });
    }
    Some(Derivation { conclusion, steps })
}

/// Which pending step currently proves `X -> W`.
#[derive(Clone, Copy)]
enum Held {
    Aug(usize),
    Trans(usize),
}

/// Replays a derivation, checking every step against the axioms.
pub fn check_derivation(fds: &FdSet, d: &Derivation) -> bool {
    let mut proved: Vec<&FunctionalDependency> = Vec::with_capacity(d.steps.len());
    let lookup = |p: Premise, proved: &[&FunctionalDependency]| -> Option<FunctionalDependency> {
        match p {
            Premise::Base(i) => fds.get(i).cloned(),
            Premise::Step(i) => proved.get(i).map(|f| (*f).clone()),
        }
    };
    for step in &d.steps {
        let ok = match step {
            Step::Reflexivity { conclusion } => conclusion.rhs.is_subset(&conclusion.lhs),
            Step::Augmentation {
                premise,
                by,
                conclusion,
            } => match lookup(*premise, &proved) {
                Some(p) => conclusion.lhs == p.lhs.union(by) && conclusion.rhs == p.rhs.union(by),
                None => false,
            },
            Step::Transitivity {
                first,
                second,
                conclusion,
            } => match (lookup(*first, &proved), lookup(*second, &proved)) {
                (Some(f), Some(s)) => f.rhs == s.lhs && conclusion.lhs == f.lhs && conclusion.rhs == s.rhs,
                _ => false,
            },
        };
        if !ok {
            return false;
        }
        proved.push(step.conclusion());
    }
    match proved.last() {
        Some(last) => **last == d.conclusion,
        None => fds.position(&d.conclusion).is_some(),
    }
}
