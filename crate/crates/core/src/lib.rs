//! Functional dependencies over databases with incomplete information.
//!
//! Tables may be standard, vague (set-valued cells) or disjunctive
//! (disjunctions of standard tuples). The crate checks FDs under several
//! semantics (strong, weak, seamless, PFD, vertical, Raju-Majumdar), reasons
//! with Armstrong's axioms, builds seamless valuations, maintains an
//! incremental PFD index and encodes 3-dimensional matching as seamless
//! satisfaction.

pub mod armstrong;
pub mod cli;
pub mod error;
pub mod fd;
pub mod index;
pub mod io;
pub mod model;
pub mod semantics;
pub mod valuation;

pub use armstrong::{attribute_closure, check_derivation, derive, implies, Derivation, FdSet, Premise, Step};
pub use error::{FdError, Result};
pub use fd::FunctionalDependency;
pub use index::{Conflict, PfdIndex};
pub use model::{
    enumerate_worlds, equal_tuples, tuple_intersection, tuple_union, AttrId, AttrSet, Cell, DisjunctiveTuple, Model,
    Schema, StandardTuple, Table, Tuple, VagueTuple, Value, World,
};
pub use semantics::{
    check, check_pfd, check_rm, check_seamless, check_standard, check_strong, check_vertical, check_weak, CheckOptions,
    Report, Semantics,
};
pub use valuation::{generate_3dm_reduction, seamless_valuation_pfd, solve_3dm_bruteforce, ThreeDmInstance};
