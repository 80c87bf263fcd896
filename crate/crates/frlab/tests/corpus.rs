//! Catalog, recipes and reports through the library API.

use frlab::analyze::{analyze, load_source};
use frlab::catalog::{default_catalog, Tier};
use frlab::checks::{verify, VerifyOptions, CHECKS};
use frlab::classfile::Registry;
use frlab::recipe::{parse_recipe, Recipe};
use frlab_core::quotient::quotient;
use frlab_core::subgroup::normal_subgroups;
use frlab_core::Caps;
use proptest::prelude::*;

#[test]
fn catalog_tables_are_reproducible() {
    let caps = Caps::default();
    let a = default_catalog(Tier::Small, &caps).unwrap();
    let b = default_catalog(Tier::Small, &caps).unwrap();
    assert_eq!(a.len(), b.len());
    assert!(a.skipped.is_empty());
    for (x, y) in a.entries.iter().zip(&b.entries) {
        assert_eq!(x.label, y.label);
        assert_eq!(*x.table, *y.table, "{}", x.label);
    }
}

#[test]
fn oversize_wreath_has_a_rank_two_factor() {
    let caps = Caps::default();
    let g = load_source("A5wrS2", &caps).unwrap();
    assert_eq!(g.order(), 7200);
    let a = analyze(&g, &[], &caps).unwrap();
    let top: Vec<(usize, u32)> = a.series.iter().map(|f| (f.order, f.rank)).collect();
    assert_eq!(top, [(3600, 2), (2, 1)]);
}

#[test]
fn presets_are_quotient_closed_on_small_insoluble_groups() {
    let caps = Caps::default();
    let reg = Registry::default();
    let classes: Vec<_> = ["u_c", "n_star", "n_ca"].iter().map(|c| reg.resolve(c).unwrap()).collect();
    for label in ["C2xA5", "SL(2,5)", "S5", "A5", "C3xA5"] {
        let g = load_source(label, &caps).unwrap();
        for x in &classes {
            if !x.member(&g, &caps).unwrap() {
                continue;
            }
            for n in normal_subgroups(&g) {
                let (q, _) = quotient(&g, &n).unwrap();
                assert!(x.member(&q, &caps).unwrap(), "{label}/{} leaves {}", n.size(), x.id());
            }
        }
    }
}

#[test]
fn every_check_report_balances_on_tiny() {
    let opts = VerifyOptions::new(Tier::Tiny);
    for check in CHECKS {
        let r = verify(check, &opts).unwrap();
        assert!(r.invariant_holds(), "{check}");
        assert!(r.succeeded(), "{check}: {}", r.to_text());
    }
}

fn recipe() -> impl Strategy<Value = Recipe> {
    let leaf = prop_oneof![
        (1usize..13).prop_map(Recipe::Cyclic),
        (2usize..7).prop_map(|k| Recipe::Dihedral(2 * k)),
        (3usize..5).prop_map(Recipe::Symmetric),
        Just(Recipe::Alternating(4)),
        Just(Recipe::Quaternion(8)),
    ];
    leaf.prop_recursive(2, 6, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..3).prop_map(Recipe::Direct),
            inner.prop_map(|r| Recipe::Wreath(Box::new(r), 2)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recipe_display_parses_back(r in recipe()) {
        let back = parse_recipe(&r.to_string()).unwrap();
        prop_assert_eq!(back.to_string(), r.to_string());
        prop_assert_eq!(back.order(), r.order());
    }
}
