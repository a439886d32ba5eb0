mod common;

use common::*;
use proptest::prelude::*;
use weakbrace::correspond::affine::{affine_from_brace, brace_from_affine};
use weakbrace::correspond::gamma::{brace_from_gamma, gamma_from_brace};
use weakbrace::io::TableFile;
use weakbrace::search::{enumerate_gamma_functions, SearchOptions};
use weakbrace::special::{classify, SpecialClass};
use weakbrace::{CayleyTable, WeakBrace};

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn corpus_brace() -> impl Strategy<Value = WeakBrace> {
    let all = corpus();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn relabelled() -> impl Strategy<Value = (WeakBrace, Vec<usize>)> {
    corpus_brace().prop_flat_map(|b| {
        let n = b.len();
        (Just(b), permutation(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn classification_is_invariant_under_relabelling((b, p) in relabelled()) {
        let c = b.relabel(&p);
        prop_assert_eq!(b.is_dual(), c.is_dual());
        prop_assert_eq!(b.is_skew(), c.is_skew());
        let (x, y) = (classify(&b), classify(&c));
        for class in SpecialClass::ALL {
            prop_assert_eq!(x.verdict(class).holds, y.verdict(class).holds);
        }
        prop_assert!(y.violations.is_empty());
    }

    #[test]
    fn correspondences_commute_with_relabelling((b, p) in relabelled()) {
        let c = b.relabel(&p);
        let g = gamma_from_brace(&c).unwrap();
        prop_assert!(brace_from_gamma(c.add(), &g).unwrap().same_tables(&c));
        let d = affine_from_brace(&c).unwrap();
        prop_assert!(brace_from_affine(c.mul(), &d).unwrap().same_tables(&c));
        let d0 = affine_from_brace(&b).unwrap();
        prop_assert!(d0.table().relabel(&p).same_operation(d.table()));
    }

    #[test]
    fn lambda_recovers_the_product(b in corpus_brace()) {
        for x in 0..b.len() {
            for y in 0..b.len() {
                prop_assert_eq!(b.prod(x, y), b.sum(x, b.lambda(x, y)));
            }
        }
    }

    #[test]
    fn table_files_round_trip(
        n in 1usize..6,
        cells in prop::collection::vec(0usize..6, 36),
        long in any::<bool>(),
    ) {
        let names: Vec<String> =
            (0..n).map(|i| if long && i % 2 == 1 { format!("x{i}long") } else { format!("{i}") }).collect();
        let cells: Vec<usize> = cells[..n * n].iter().map(|c| c % n).collect();
        let t = CayleyTable::from_flat(names.clone(), cells).unwrap();
        let f = TableFile::new(names).with_comment("random").with_block("add", &t).with_block("mul", &t);
        let text = f.emit();
        let back = TableFile::parse(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.emit(), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn search_is_deterministic_across_workers(jobs in 1usize..5) {
        let add = clifford("s3.tbl");
        let one = enumerate_gamma_functions(&add, &SearchOptions { jobs: Some(1), ..Default::default() }).unwrap();
        let many = enumerate_gamma_functions(&add, &SearchOptions { jobs: Some(jobs), ..Default::default() }).unwrap();
        prop_assert_eq!(one.brace_keys(), many.brace_keys());
        prop_assert_eq!(one.stats.nodes, many.stats.nodes);
        prop_assert_eq!(one.stats.pruned, many.stats.pruned);
    }
}
