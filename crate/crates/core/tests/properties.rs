use proptest::prelude::*;

use sbp_core::algebra::{
    apply_permutation, are_equivalent, canonical_form, canonical_form_anti, enumerate_homomorphisms, enumerate_maps,
    FiniteMagma, FiniteMap,
};
use sbp_core::catalog;
use sbp_core::enumeration::{
    action_census_with, canonical_middle_key, enumerate_semibiproducts, enumerate_semibiproducts_with, sbp_isomorphic,
    DedupMode, EnumSpec, Parallelism,
};
use sbp_core::io;
use sbp_core::{MagmaAction, Semibiproduct};

fn magma(max_order: usize) -> impl Strategy<Value = FiniteMagma> {
    (1..=max_order).prop_flat_map(|n| {
        prop::collection::vec(0..n, n * n).prop_map(move |t| FiniteMagma::from_flat(n, t).unwrap())
    })
}

fn magma_with_perm(max_order: usize) -> impl Strategy<Value = (FiniteMagma, Vec<usize>)> {
    magma(max_order).prop_flat_map(|m| {
        let n = m.order();
        (Just(m), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn action_2x2() -> impl Strategy<Value = MagmaAction> {
    (
        prop::collection::vec(0..2usize, 4),
        prop::collection::vec(0..2usize, 16),
        prop::collection::vec(0..2usize, 2),
        prop::collection::vec(0..2usize, 2),
    )
        .prop_map(|(theta, phi, h, t)| {
            MagmaAction::new(
                FiniteMagma::from_flat(2, theta).unwrap(),
                phi,
                FiniteMap::new(2, h).unwrap(),
                FiniteMap::new(2, t).unwrap(),
            )
            .unwrap()
        })
}

/// Every middle-iso solution of the order-3 table, computed once.
fn table_solutions() -> &'static [Semibiproduct] {
    use std::sync::OnceLock;
    static CELL: OnceLock<Vec<Semibiproduct>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for i in 1..=4 {
            for j in 1..=4 {
                let spec = EnumSpec::new(catalog::order_two_semigroup(i), catalog::order_two_semigroup(j), 3);
                out.extend(enumerate_semibiproducts(&spec).unwrap().solutions);
            }
        }
        out
    })
}

proptest! {
    #[test]
    fn canonical_form_ignores_relabelling((m, perm) in magma_with_perm(4)) {
        let moved = apply_permutation(&m, &perm);
        prop_assert_eq!(canonical_form(&m), canonical_form(&moved));
        prop_assert_eq!(canonical_form_anti(&m), canonical_form_anti(&moved.transpose()));
        let e = are_equivalent(&m, &moved, false).unwrap();
        prop_assert_eq!(apply_permutation(&m, &e.permutation), moved);
    }

    #[test]
    fn canonical_forms_decide_equivalence(m1 in magma(3), m2 in magma(3)) {
        prop_assert_eq!(
            canonical_form(&m1) == canonical_form(&m2),
            are_equivalent(&m1, &m2, false).is_some()
        );
        prop_assert_eq!(
            canonical_form_anti(&m1) == canonical_form_anti(&m2),
            are_equivalent(&m1, &m2, true).is_some()
        );
    }

    #[test]
    fn homomorphisms_are_the_filtered_maps(src in magma(3), dst in magma(3)) {
        let filtered: Vec<FiniteMap> = enumerate_maps(src.order(), dst.order())
            .filter(|f| f.is_homomorphism(&src, &dst).unwrap().holds())
            .collect();
        prop_assert_eq!(enumerate_homomorphisms(&src, &dst), filtered);
    }

    #[test]
    fn associativity_witness_is_genuine(m in magma(4)) {
        if let Some(&(a, b, c)) = m.is_associative().witness() {
            prop_assert_ne!(m.op(m.op(a, b), c), m.op(a, m.op(b, c)));
        }
    }

    #[test]
    fn magma_file_round_trip(m in magma(4)) {
        prop_assert_eq!(io::parse_magma(&io::magma_to_json(&m)).unwrap(), m);
    }

    #[test]
    fn relabelled_solutions_are_found(idx in 0usize..14, perm in Just(vec![0usize, 1, 2]).prop_shuffle()) {
        let sols = table_solutions();
        let sb = &sols[idx % sols.len()];
        // transport along perm by hand
        let n = 3;
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let pi = FiniteMap::new(n, perm.clone()).unwrap();
        let pinv = FiniteMap::new(n, inv).unwrap();
        let moved = Semibiproduct::new(
            sb.x.clone(),
            apply_permutation(&sb.a, &perm),
            sb.b.clone(),
            pi.after(&sb.k).unwrap(),
            sb.p.after(&pinv).unwrap(),
            sb.q.after(&pinv).unwrap(),
            pi.after(&sb.s).unwrap(),
        )
        .unwrap();
        prop_assert!(moved.is_valid());
        let iso = sbp_isomorphic(sb, &moved, true).unwrap();
        prop_assert!(iso.f1.is_identity() && iso.f3.is_identity());
        prop_assert_eq!(canonical_middle_key(&moved), sb.clone());
    }

    #[test]
    fn kq_plus_sp_is_the_identity(idx in 0usize..14) {
        let sols = table_solutions();
        let sb = &sols[idx % sols.len()];
        for e in 0..sb.a.order() {
            prop_assert_eq!(sb.a.op(sb.k.apply(sb.q.apply(e)), sb.s.apply(sb.p.apply(e))), e);
        }
        let ab = sb.alpha_beta_iso().unwrap();
        prop_assert!(ab.beta.after(&ab.alpha).unwrap().is_identity());
        prop_assert!(ab.alpha.after(&ab.beta).unwrap().is_identity());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4096))]

    #[test]
    fn random_tuples_respect_the_action_laws(a in action_2x2()) {
        let report = a.verify();
        if let (Some(rep), Some(assoc)) = (&report.representable, &report.associative) {
            // associative implies representable
            prop_assert!(!assoc.holds() || rep.holds());
            let sb = Semibiproduct::from_action(&a).unwrap();
            prop_assert!(sb.is_valid());
            let back = sb.to_action().unwrap();
            let r = a.compute_r().unwrap();
            prop_assert_eq!(back.compute_r().unwrap(), r.clone());
            for &(x, b) in &r.pairs {
                for &(x2, b2) in &r.pairs {
                    prop_assert_eq!(a.phi(x, b, x2, b2), back.phi(x, b, x2, b2));
                }
            }
        } else {
            prop_assert!(!report.is_action);
            prop_assert!(Semibiproduct::from_action(&a).is_err());
        }
    }

    #[test]
    fn action_file_round_trip(a in action_2x2()) {
        prop_assert_eq!(io::parse_action(&io::action_to_json(&a)).unwrap(), a);
    }
}

#[test]
fn parallel_and_sequential_census_agree() {
    let seq = action_census_with(2, 2, Parallelism::Sequential).unwrap();
    let par = action_census_with(2, 2, Parallelism::Parallel).unwrap();
    assert_eq!(seq, par);
}

#[test]
fn parallel_and_sequential_enumeration_agree() {
    for i in 1..=4 {
        for dedup in [DedupMode::Labelled, DedupMode::MiddleIso] {
            let spec = EnumSpec {
                dedup,
                ..EnumSpec::new(catalog::order_two_semigroup(i), catalog::order_two_semigroup(1), 3)
            };
            assert_eq!(
                enumerate_semibiproducts_with(&spec, Parallelism::Sequential).unwrap(),
                enumerate_semibiproducts_with(&spec, Parallelism::Parallel).unwrap()
            );
        }
    }
}
