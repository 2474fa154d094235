use annulus_core::homext::{dim_ext1, dim_hom};
use annulus_core::intersect::{compatible, pos_int};
use annulus_core::model::{phi, phi_inv, tau_curve, tau_sheaf};
use annulus_core::symmetry::{act_curve, McgWord};
use annulus_core::tilting::{tilting_to_vertex, vertex_to_tilting, LambdaVertex};
use annulus_core::{CurveClass, LElement, Lambda, WeightType};
use proptest::prelude::*;

fn weight() -> impl Strategy<Value = WeightType> {
    (1i64..=5, 1i64..=5).prop_map(|(p, q)| WeightType::new(p, q).unwrap())
}

fn element(w: WeightType) -> impl Strategy<Value = LElement> {
    (-20i64..20, -20i64..20, -6i64..6).prop_map(move |(a, b, m)| LElement::normalize(a, b, m, w))
}

fn curve(w: WeightType) -> impl Strategy<Value = CurveClass> {
    let (p, q) = (w.p(), w.q());
    prop_oneof![
        (-9i64..9, -9i64..9).prop_map(|(u, lw)| CurveClass::bridging(u, lw)),
        (-9i64..9, 2i64..=p + 6).prop_map(|(s, len)| CurveClass::peri_upper(s, s + len)),
        (-9i64..9, 2i64..=q + 6).prop_map(|(s, len)| CurveClass::peri_lower(s, s + len)),
        (1i64..6).prop_map(|n| CurveClass::loop_(Lambda::new("t").unwrap(), n)),
    ]
}

fn weight_and_curves() -> impl Strategy<Value = (WeightType, CurveClass, CurveClass)> {
    weight().prop_flat_map(|w| (Just(w), curve(w), curve(w)))
}

fn vertex() -> impl Strategy<Value = (WeightType, LambdaVertex)> {
    weight().prop_flat_map(|w| {
        let (p, q) = (w.p() as usize, w.q());
        (Just(w), -6i64..6, prop::collection::vec(0..=q, p - 1)).prop_map(move |(w, c1, mut rest)| {
            rest.sort();
            let mut c = vec![c1];
            c.extend(rest.into_iter().map(|d| c1 + d));
            (w, LambdaVertex::new(c, w).unwrap())
        })
    })
}

proptest! {
    #[test]
    fn positive_cone_matches_dim_s(w in weight(), seed in any::<u64>()) {
        let x = LElement::normalize((seed % 13) as i64 - 6, (seed / 13 % 13) as i64 - 6, (seed / 169 % 9) as i64 - 4, w);
        prop_assert_eq!(x.dim_s() > 0, w.zero().leq(x).unwrap());
        if x.dim_s() > 0 {
            prop_assert_eq!((x + w.c()).dim_s(), x.dim_s() + 1);
        }
    }

    #[test]
    fn group_laws((x, y, z) in weight().prop_flat_map(|w| (element(w), element(w), element(w)))) {
        prop_assert_eq!((x + y) + z, x + (y + z));
        prop_assert_eq!(x + y, y + x);
        prop_assert_eq!(x - x, x.weight().zero());
    }

    #[test]
    fn phi_round_trip((w, a, _) in weight_and_curves()) {
        let s = phi(&a, w).unwrap();
        prop_assert_eq!(phi_inv(&s, w).unwrap(), a.canonical(w));
        prop_assert_eq!(phi(&tau_curve(&a, w), w).unwrap(), tau_sheaf(&s, w).unwrap());
    }

    #[test]
    fn ext_is_positive_intersection((w, a, b) in weight_and_curves()) {
        let (sa, sb) = (phi(&a, w).unwrap(), phi(&b, w).unwrap());
        prop_assert_eq!(dim_ext1(&sa, &sb, w).unwrap(), pos_int(&a, &b, w));
    }

    #[test]
    fn hom_is_shift_invariant((w, a, b) in weight_and_curves(), k in -3i64..3) {
        let (sa, sb) = (phi(&a, w).unwrap(), phi(&b, w).unwrap());
        let (a2, b2) = (a.deck_shift(k, w), b.deck_shift(k, w));
        prop_assert_eq!(pos_int(&a, &b, w), pos_int(&a2, &b2, w));
        let (ta, tb) = (tau_sheaf(&sa, w).unwrap(), tau_sheaf(&sb, w).unwrap());
        prop_assert_eq!(dim_hom(&sa, &sb, w).unwrap(), dim_hom(&ta, &tb, w).unwrap());
    }

    #[test]
    fn compatibility_is_symmetric((w, a, b) in weight_and_curves()) {
        if let (Ok(x), Ok(y)) = (compatible(&a, &b, w), compatible(&b, &a, w)) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn words_and_inverses_cancel((w, a, _) in weight_and_curves(), letters in prop::collection::vec(0usize..4, 0..8)) {
        let tokens = ["r1", "r1-", "r2", "r2-"];
        let text: Vec<_> = letters.iter().map(|&i| tokens[i]).collect();
        let f: McgWord = text.join(" ").parse().unwrap();
        let g = f.then(&f.inverse());
        prop_assert_eq!(act_curve(&g, &a, w).unwrap(), a.canonical(w));
    }

    #[test]
    fn vertex_encoding_round_trips((w, v) in vertex()) {
        let t = vertex_to_tilting(&v, w).unwrap();
        prop_assert_eq!(tilting_to_vertex(&t), v.clone());
        prop_assert_eq!(t.slots().len(), w.rank());
        prop_assert_eq!(t.n(), 2 * (w.p() as usize - v.cyclic_repeats(w)));
        prop_assert_eq!(t.iota(), t.iota_from_vertex());
        prop_assert_eq!(t.iota(), t.iota_by_flips().unwrap());
    }

    #[test]
    fn flips_are_involutions((w, v) in vertex(), k in any::<prop::sample::Index>()) {
        let t = vertex_to_tilting(&v, w).unwrap().triangulation();
        let arc = k.get(t.arcs()).clone();
        let (next, added) = t.flip(&arc).unwrap();
        prop_assert!(!next.contains(&arc));
        prop_assert_eq!(next.flip(&added).unwrap(), (t, arc));
    }
}
