//! Structural invariants over random small groups built from the families
//! and direct products.

use frlab_core::center::{hypercenter, int_x};
use frlab_core::charsub::hypercenter_classical;
use frlab_core::class::{e_closure, np_extend, CentralMode, ClassSpec};
use frlab_core::families::{alternating, cyclic, dicyclic, dihedral, quaternion, symmetric};
use frlab_core::product::direct_product;
use frlab_core::quotient::quotient;
use frlab_core::series::{chief_series, chief_series_through, signature_multiset};
use frlab_core::subgroup::{is_normal, normal_subgroups};
use frlab_core::{Caps, GroupTable};
use proptest::prelude::*;

fn factor(kind: u8, n: usize, caps: &Caps) -> GroupTable {
    match kind % 7 {
        0 => cyclic(n % 12 + 1, caps),
        1 => dihedral(2 * (n % 7 + 2), caps),
        2 => symmetric(3 + n % 2, caps),
        3 => alternating(4, caps),
        4 => quaternion(8, caps),
        5 => dicyclic(12, caps),
        _ => cyclic([2, 3, 5][n % 3], caps),
    }
    .unwrap()
}

/// One factor, or a product of two when the order stays at most 96.
fn group() -> impl Strategy<Value = GroupTable> {
    (any::<u8>(), 0usize..64, any::<u8>(), 0usize..64, any::<bool>()).prop_map(|(k1, n1, k2, n2, prod)| {
        let caps = Caps::default();
        let a = factor(k1, n1, &caps);
        let b = factor(k2, n2, &caps);
        if prod && a.order() * b.order() <= 96 {
            direct_product(&a, &b, &caps).unwrap()
        } else {
            a
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn chief_factor_orders_multiply_to_the_group_order(g in group()) {
        let s = chief_series(&g);
        let factors = s.factors(&g);
        prop_assert_eq!(factors.iter().map(|f| f.factor_order).product::<usize>(), g.order());
        for f in &factors {
            prop_assert!(is_normal(&g, &f.upper) && is_normal(&g, &f.lower));
            prop_assert!(f.lower.is_subgroup_of(&f.upper));
        }
    }

    #[test]
    fn factor_signatures_do_not_depend_on_the_series(g in group(), pick in any::<usize>()) {
        let caps = Caps::default();
        let normals = normal_subgroups(&g);
        let n = &normals[pick % normals.len()];
        let through = chief_series_through(&g, n).unwrap();
        prop_assert_eq!(
            signature_multiset(&g, &chief_series(&g), &caps),
            signature_multiset(&g, &through, &caps)
        );
    }

    #[test]
    fn baer_identity(g in group()) {
        let caps = Caps::default();
        let n = ClassSpec::nilpotent();
        let z = hypercenter(&g, &n, CentralMode::PreferCanonical, &caps).unwrap();
        prop_assert_eq!(&z, &hypercenter_classical(&g));
        prop_assert_eq!(&z, &int_x(&g, &n, &caps).unwrap());
    }

    #[test]
    fn formations_are_quotient_closed(g in group()) {
        let caps = Caps::default();
        for x in [ClassSpec::nilpotent(), ClassSpec::supersoluble()] {
            if !x.member(&g, &caps).unwrap() {
                continue;
            }
            for n in normal_subgroups(&g) {
                let (q, _) = quotient(&g, &n).unwrap();
                prop_assert!(x.member(&q, &caps).unwrap(), "{} not quotient closed", x.id());
            }
        }
    }

    #[test]
    fn composition_closure_of_supersoluble_is_soluble(g in group()) {
        let caps = Caps::default();
        let eu = e_closure(&ClassSpec::supersoluble());
        prop_assert_eq!(eu.member(&g, &caps).unwrap(), ClassSpec::soluble().member(&g, &caps).unwrap());
    }

    #[test]
    fn np_extension_absorbs_itself(g in group(), pi in 0usize..3) {
        let caps = Caps::default();
        let p = [2u64, 3, 5][pi];
        let once = np_extend(p, &ClassSpec::supersoluble());
        let twice = np_extend(p, &once);
        prop_assert_eq!(once.member(&g, &caps).unwrap(), twice.member(&g, &caps).unwrap());
    }
}
