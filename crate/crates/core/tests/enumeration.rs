mod common;

use std::collections::BTreeSet;

use ordsemi::config::{Limits, Readings};
use ordsemi::enumerate::{
    canonicalize, compatible_orders, enumerate_tables, labeled_form, search, Corpus, CorpusOptions,
    PartialOrder,
};
use ordsemi::predicate::Expr;

fn corpus(n: usize, up_to_iso: bool) -> Corpus {
    Corpus::build(&CorpusOptions {
        n,
        up_to_iso,
        allow_large: false,
        parallel: true,
    })
    .unwrap()
}

#[test]
fn tables_match_brute_force() {
    for n in 1..=3 {
        let got: Vec<Vec<Vec<usize>>> = enumerate_tables(n, false)
            .unwrap()
            .iter()
            .map(|t| t.rows())
            .collect();
        assert_eq!(got, common::brute_force_tables(n), "n = {n}");
    }
}

#[test]
fn table_counts() {
    let counts: Vec<usize> = (1..=4)
        .map(|n| enumerate_tables(n, false).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 8, 113, 3492]);
}

#[test]
fn orders_match_brute_force() {
    for n in 1..=3 {
        for t in enumerate_tables(n, false).unwrap() {
            let got: BTreeSet<Vec<Vec<bool>>> = compatible_orders(&t)
                .iter()
                .map(PartialOrder::matrix)
                .collect();
            let want: BTreeSet<Vec<Vec<bool>>> =
                common::brute_force_orders(&t.rows()).into_iter().collect();
            assert_eq!(got, want, "{:?}", t.rows());
        }
    }
}

#[test]
fn labeled_corpus_matches_brute_force() {
    for n in 1..=3 {
        let got: BTreeSet<_> = corpus(n, false)
            .structures
            .iter()
            .map(labeled_form)
            .collect();
        let want: BTreeSet<_> = common::brute_force_corpus(n)
            .iter()
            .map(labeled_form)
            .collect();
        assert_eq!(got, want, "n = {n}");
    }
}

#[test]
fn frozen_corpus_counts() {
    let counts: Vec<(usize, usize, usize)> = (1..=3)
        .map(|n| {
            let iso = corpus(n, true);
            (iso.tables, iso.labeled, iso.structures.len())
        })
        .collect();
    assert_eq!(counts, vec![(1, 1, 1), (8, 20, 11), (113, 971, 173)]);
}

#[test]
fn iso_counts_match_orbit_oracle() {
    for n in 1..=3 {
        let labeled = corpus(n, false).structures;
        assert_eq!(
            corpus(n, true).structures.len(),
            common::orbit_count(&labeled),
            "n = {n}"
        );
    }
}

#[test]
fn order_four_counts() {
    let iso = corpus(4, true);
    assert_eq!(
        (iso.tables, iso.labeled, iso.structures.len()),
        (3492, 107688, 4753)
    );
}

#[test]
fn canonical_forms_agree_within_orbits() {
    let labeled = corpus(3, false).structures;
    for s in labeled.iter().step_by(7) {
        let c = canonicalize(s);
        for p in common::permutations(3) {
            assert_eq!(canonicalize(&s.relabel(&p)), c);
        }
    }
}

#[test]
fn search_examples() {
    let (r, l) = (Readings::default(), Limits::default());
    let opts = |n| CorpusOptions {
        n,
        up_to_iso: false,
        allow_large: false,
        parallel: true,
    };
    let hits = search(
        &opts(2),
        &Expr::parse("regular and not right_inverse").unwrap(),
        None,
        r,
        l,
    )
    .unwrap();
    let left_zero = ordsemi::constructions::from_plain(&[vec![0, 0], vec![1, 1]]).unwrap();
    assert!(hits.contains(&left_zero));
    assert!(
        search(&opts(1), &Expr::parse("not regular").unwrap(), None, r, l)
            .unwrap()
            .is_empty()
    );
    let frozen = search(
        &opts(3),
        &Expr::parse("right_inverse and not right_clifford").unwrap(),
        None,
        r,
        l,
    )
    .unwrap();
    assert!(frozen.is_empty());
    let limited = search(&opts(3), &Expr::parse("regular").unwrap(), Some(5), r, l).unwrap();
    assert_eq!(limited.len(), 5);
}

#[test]
fn order_five_needs_override() {
    assert!(enumerate_tables(5, false).is_err());
    assert!(Corpus::build(&CorpusOptions {
        n: 5,
        ..Default::default()
    })
    .is_err());
}
