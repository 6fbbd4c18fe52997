//! Randomized properties of twists, intersection numbers and homology.

mod common;

use common::*;
use proptest::prelude::*;
use twistcert::floer::hf_rank;
use twistcert::homology::{intersection_form, pair};
use twistcert::mapping_class::{homology_action, StandardCurveSystem, TwistWord};
use twistcert::{Curve, HomologyClass};

fn power() -> impl Strategy<Value = i64> {
    prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2)]
}

fn word(max: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    proptest::collection::vec((0usize..16, power()), 0..=max)
}

fn systems() -> [StandardCurveSystem; 2] {
    [StandardCurveSystem::new(2).unwrap(), StandardCurveSystem::new(3).unwrap()]
}

fn sys_for(systems: &[StandardCurveSystem; 2], g: u32) -> &StandardCurveSystem {
    &systems[g as usize - 2]
}

/// The image of standard curve `start` under the twist word `w`.
fn curve(sys: &StandardCurveSystem, start: usize, w: &[(usize, i64)]) -> Curve {
    let curves = system_curves(sys);
    word_from(sys, w).apply(&curves[start % curves.len()]).unwrap()
}

fn signed_eq(x: &[i64], y: &[i64]) -> bool {
    x == y || x.iter().zip(y).all(|(a, b)| *a == -*b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn square_identity(g in 2u32..=3, sa in 0usize..16, wa in word(2), sb in 0usize..16, wb in word(2)) {
        let all = systems();
        let sys = sys_for(&all, g);
        let a = curve(sys, sa, &wa);
        let b = curve(sys, sb, &wb);
        let i = a.intersection_number(&b).unwrap();
        let tb = b.dehn_twist(&a, 1).unwrap();
        prop_assert_eq!(tb.intersection_number(&b).unwrap(), i * i);
        let tb = b.dehn_twist(&a, -1).unwrap();
        prop_assert_eq!(tb.intersection_number(&b).unwrap(), i * i);
    }

    #[test]
    fn symmetry_and_naturality(
        g in 2u32..=3,
        sa in 0usize..16, wa in word(2),
        sb in 0usize..16, wb in word(2),
        f in word(3),
    ) {
        let all = systems();
        let sys = sys_for(&all, g);
        let a = curve(sys, sa, &wa);
        let b = curve(sys, sb, &wb);
        let i = a.intersection_number(&b).unwrap();
        prop_assert_eq!(b.intersection_number(&a).unwrap(), i);
        let f = word_from(sys, &f);
        let fa = f.apply(&a).unwrap();
        let fb = f.apply(&b).unwrap();
        prop_assert_eq!(fa.intersection_number(&fb).unwrap(), i);
        prop_assert_eq!(a.is_isotopic(&b).unwrap(), fa.is_isotopic(&fb).unwrap());
    }

    #[test]
    fn hf_rank_symmetric_and_equal_to_iota(
        g in 2u32..=3, sa in 0usize..16, wa in word(3), sb in 0usize..16, wb in word(3),
    ) {
        let all = systems();
        let sys = sys_for(&all, g);
        let a = curve(sys, sa, &wa);
        let b = curve(sys, sb, &wb);
        let r = hf_rank(&a, &b).unwrap();
        prop_assert_eq!(hf_rank(&b, &a).unwrap(), r);
        if a.is_isotopic(&b).unwrap() {
            prop_assert_eq!(r, 2);
        } else {
            prop_assert_eq!(r, a.intersection_number(&b).unwrap() as u64);
        }
    }

    #[test]
    fn disjoint_twists_commute_and_linked_twists_braid(
        g in 2u32..=3, sa in 0usize..16, sb in 0usize..16, conj in word(2), sx in 0usize..16, wx in word(2),
    ) {
        let all = systems();
        let sys = sys_for(&all, g);
        let a = curve(sys, sa, &conj);
        let b = curve(sys, sb, &conj);
        let x = curve(sys, sx, &wx);
        let ta = TwistWord::single("a", a.clone(), 1);
        let tb = TwistWord::single("b", b.clone(), 1);
        let ab = ta.compose(&tb).unwrap();
        let ba = tb.compose(&ta).unwrap();
        match a.intersection_number(&b).unwrap() {
            0 => prop_assert_eq!(ab.apply(&x).unwrap(), ba.apply(&x).unwrap()),
            1 => {
                let aba = ab.compose(&ta).unwrap();
                let bab = ba.compose(&tb).unwrap();
                prop_assert_eq!(aba.apply(&x).unwrap(), bab.apply(&x).unwrap());
            }
            _ => {}
        }
    }

    #[test]
    fn powers_add(
        g in 2u32..=3, sa in 0usize..16, sx in 0usize..16, wx in word(2), p in -3i64..=3, q in -3i64..=3,
    ) {
        let all = systems();
        let sys = sys_for(&all, g);
        let a = curve(sys, sa, &[]);
        let x = curve(sys, sx, &wx);
        let two = x.dehn_twist(&a, q).unwrap().dehn_twist(&a, p).unwrap();
        prop_assert_eq!(&two, &x.dehn_twist(&a, p + q).unwrap());
        prop_assert_eq!(&a.dehn_twist(&a, p).unwrap(), &a);
        // Canonical form is stable.
        let again = twistcert::curve::normalize(two.word(), sys.surface()).unwrap();
        prop_assert_eq!(again.word(), two.word());
    }

    #[test]
    fn twist_acts_on_homology_by_transvection(
        g in 2u32..=3, sa in 0usize..16, wa in word(2), sb in 0usize..16, wb in word(2), p in -2i64..=2,
    ) {
        let all = systems();
        let sys = sys_for(&all, g);
        let a = curve(sys, sa, &wa);
        let b = curve(sys, sb, &wb);
        let form = intersection_form(sys.surface());
        let (ha, hb) = (a.homology_class().coordinates, b.homology_class().coordinates);
        let k = pair(&form, &hb, &ha);
        let want: Vec<i64> = hb.iter().zip(&ha).map(|(y, x)| y + p * k * x).collect();
        let got = b.dehn_twist(&a, p).unwrap().homology_class();
        prop_assert!(signed_eq(&got.coordinates, &want), "{:?} vs {:?}", got.coordinates, want);
        prop_assert_eq!(got, HomologyClass::new(want));
        // Algebraic intersection is the form up to orientation.
        prop_assert_eq!(a.algebraic_intersection(&b).unwrap().abs(), k.abs());
    }

    #[test]
    fn homology_action_matches_apply(g in 2u32..=3, f in word(5), sx in 0usize..16, wx in word(1)) {
        let all = systems();
        let sys = sys_for(&all, g);
        let w = word_from(sys, &f);
        let m = homology_action::<i64>(&w);
        prop_assert!(m.preserves(&intersection_form(sys.surface())));
        let x = curve(sys, sx, &wx);
        let image = m.matrix().mul_vec(&x.homology_class().coordinates);
        let direct = w.apply(&x).unwrap().homology_class();
        prop_assert!(signed_eq(&direct.coordinates, &image));
        // Composition on the left multiplies on the left.
        let inv = homology_action::<i64>(&w.inverse());
        prop_assert_eq!(
            &(m.matrix() * inv.matrix()),
            &twistcert::linalg::Matrix::identity(2 * g as usize)
        );
    }
}
