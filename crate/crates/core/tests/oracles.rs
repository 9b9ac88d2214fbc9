//! Checkers against brute force over possible worlds and full valuations.

mod common;

use common::*;
use fdlab::model::{AttrSet, DisjunctiveTuple, Model, StandardTuple, Table, VagueTuple, Value};
use fdlab::semantics::{
    check_pfd, check_rm_with, check_seamless, check_strong, check_weak, ResemblanceKind, DEFAULT_VALUATION_CAP,
};
use fdlab::FunctionalDependency;
use proptest::prelude::*;

fn name(attr: usize, v: usize) -> String {
    format!("{}{v}", (b'a' + attr as u8) as char)
}

/// Vague tables over `n` attributes with values drawn from three per column.
fn vague(n: usize, rows: usize, cell: usize) -> impl Strategy<Value = Table> {
    let cell = prop::collection::btree_set(0..3usize, 1..=cell);
    prop::collection::vec(prop::collection::vec(cell, n), 0..=rows).prop_map(move |rows| {
        let tuples = rows.into_iter().map(|cells| {
            let cells = cells
                .into_iter()
                .enumerate()
                .map(|(a, c)| c.into_iter().map(|v| Value::new(&name(a, v))).collect())
                .collect();
            VagueTuple::new(cells).unwrap()
        });
        Table::vague(schema(n), tuples).unwrap()
    })
}

fn disjunctive(n: usize, rows: usize, disjuncts: usize) -> impl Strategy<Value = Table> {
    let disjunct = prop::collection::vec(0..3usize, n);
    prop::collection::vec(prop::collection::vec(disjunct, 1..=disjuncts), 0..=rows).prop_map(move |rows| {
        let tuples = rows.into_iter().map(|ds| {
            DisjunctiveTuple::new(
                ds.into_iter()
                    .map(|d| StandardTuple::new(d.into_iter().enumerate().map(|(a, v)| name(a, v)))),
            )
            .unwrap()
        });
        Table::disjunctive(schema(n), tuples).unwrap()
    })
}

fn table(n: usize) -> impl Strategy<Value = Table> {
    prop_oneof![vague(n, 4, 2), disjunctive(n, 4, 3)]
}

fn fd(n: usize) -> impl Strategy<Value = FunctionalDependency> {
    (
        prop::collection::vec(any::<bool>(), n),
        prop::collection::vec(any::<bool>(), n),
    )
        .prop_map(|(l, r)| {
            let pick = |m: Vec<bool>| AttrSet::from_indices(m.iter().enumerate().filter(|p| *p.1).map(|p| p.0));
            FunctionalDependency::new(pick(l), pick(r))
        })
}

fn table_and_fds(k: usize) -> impl Strategy<Value = (Table, Vec<FunctionalDependency>)> {
    (1..=3usize).prop_flat_map(move |n| (table(n), prop::collection::vec(fd(n), 1..=k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn strong_matches_every_world((t, fds) in table_and_fds(1)) {
        prop_assert_eq!(check_strong(&t, &fds[0]).unwrap(), oracle_strong(&t, &fds[0]));
    }

    #[test]
    fn weak_matches_some_world((t, fds) in table_and_fds(1)) {
        prop_assert_eq!(check_weak(&t, &fds[0], DEFAULT_VALUATION_CAP).unwrap(), oracle_weak(&t, &fds[0]));
    }

    #[test]
    fn seamless_matches_world_search((t, fds) in table_and_fds(3)) {
        let got = check_seamless(&t, &fds, DEFAULT_VALUATION_CAP).unwrap();
        prop_assert_eq!(got.is_some(), oracle_seamless(&t, &fds));
        if let Some(w) = got {
            prop_assert!(all_worlds(&t).contains(&w));
            for f in &fds {
                prop_assert!(naive_standard(w.tuples(), f));
            }
        }
    }

    #[test]
    fn pfd_matches_definition((t, fds) in table_and_fds(1)) {
        prop_assert_eq!(check_pfd(&t, &fds[0]).unwrap(), oracle_pfd(&t, &fds[0]));
    }

    #[test]
    fn rm_matches_exact_ratios(n in 1..=3usize, seed in any::<u64>()) {
        let mut r = rng(seed);
        let t = vague_table_with(&mut r, &Shape { max_tuples: 5, ..Shape::SMALL }, n);
        let f = random_fd(&mut r, n);
        prop_assert_eq!(check_rm_with(&t, &f, ResemblanceKind::Max).unwrap(), oracle_rm(&t, &f, true));
        prop_assert_eq!(check_rm_with(&t, &f, ResemblanceKind::Min).unwrap(), oracle_rm(&t, &f, false));
    }
}

#[test]
fn example_tables_agree_with_world_enumeration() {
    for (tab, fds) in [
        ("weak_pair.vtab", "weak_pair.fds"),
        ("fuzzy_exact.vtab", "fuzzy_exact.fds"),
        ("fuzzy_partial.vtab", "fuzzy_partial.fds"),
        ("correlated.dtab", "correlated.fds"),
        ("augmentation.dtab", "augmentation.fds"),
        ("joe_jack.vtab", "joe_jack.fds"),
        ("single_disjunct.dtab", "single_disjunct.fds"),
        ("worked_example.vtab", "worked_example.fds"),
    ] {
        let t = common::table(tab);
        let fds = fds_of(fds, &t);
        for f in &fds {
            assert_eq!(check_strong(&t, f).unwrap(), oracle_strong(&t, f), "{tab} strong");
            assert_eq!(
                check_weak(&t, f, DEFAULT_VALUATION_CAP).unwrap(),
                oracle_weak(&t, f),
                "{tab} weak"
            );
            assert_eq!(check_pfd(&t, f).unwrap(), oracle_pfd(&t, f), "{tab} pfd");
        }
        let got = check_seamless(&t, &fds, DEFAULT_VALUATION_CAP).unwrap();
        assert_eq!(got.is_some(), oracle_seamless(&t, &fds), "{tab} seamless");
    }
}

#[test]
fn budget_is_reported() {
    let t = common::table("matching_reduction.vtab");
    let fds = fds_of("matching_reduction.fds", &t);
    assert!(matches!(
        check_seamless(&t, &fds, 1),
        Err(fdlab::FdError::Budget { budget: 1 })
    ));
    assert_eq!(t.model(), Model::Vague);
}
