use proptest::prelude::*;
use stream_kit::*;

fn name() -> impl Strategy<Value = UpName> {
    (prop::collection::vec(0u64..6, 0..6), prop::collection::vec(0u64..6, 1..5)).prop_map(|(a, b)| UpName::new(a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn shifts_invert(p in name()) {
        prop_assert_eq!(shift_minus(&shift_plus(&p)), Shifted::Infinite(p));
    }

    #[test]
    fn completion_decoding_is_total_and_precomplete(p in name()) {
        let baire = Space::baire();
        let _ = decode_completion(&baire, &p);
        prop_assert_eq!(decode_completion(&baire, &shift_plus(&p)), baire.decode(&p));
        prop_assert_eq!(decode_completion(&Space::nat(), &shift_plus(&p)), Space::nat().decode(&p));
    }

    #[test]
    fn pairing_inverts(p in name(), q in name()) {
        let t = interleave(&p, &q);
        prop_assert_eq!(proj_even(&t), p.clone());
        prop_assert_eq!(proj_odd(&t), q.clone());
        for i in 0..40 {
            prop_assert_eq!(t.at(2 * i), p.at(i));
            prop_assert_eq!(t.at(2 * i + 1), q.at(i));
        }
    }

    #[test]
    fn tuple_projections_invert(comps in prop::collection::vec(name(), 0..5), d in name(), i in 0usize..8) {
        let t = CountableTuple::new(comps, d);
        let want = t.proj(i).clone();
        for k in 0..30u64 {
            prop_assert_eq!(t.at(cantor_pair(i as u64, k)), want.at(k as usize));
        }
    }

    #[test]
    fn normal_form_is_unique(pre in prop::collection::vec(0u64..3, 0..5), per in prop::collection::vec(0u64..3, 1..4), extra in 0usize..4, reps in 1usize..4) {
        let p = UpName::new(pre.clone(), per.clone()).unwrap();
        // the same sequence with a longer preamble and a repeated period
        let unrolled: Vec<u64> = (0..pre.len() + extra).map(|i| p.at(i)).collect();
        let period: Vec<u64> = (0..per.len() * reps).map(|i| p.at(pre.len() + extra + i)).collect();
        let q = UpName::new(unrolled, period).unwrap();
        prop_assert_eq!(&p, &q);
        let len = 2 * (p.preamble().len() + p.period().len());
        prop_assert_eq!(p.prefix(len), q.prefix(len));
        prop_assert_eq!(p.to_string().parse::<UpName>().unwrap(), p);
    }

    #[test]
    fn transformer_output_is_monotone(p in prop::collection::vec(0u64..5, 0..20), cut in 0usize..20) {
        let cut = cut.min(p.len());
        for t in [unary_coding_k(), cluster_point_k(), totalize(&completeness_witness(Problem::Acc(Bound::Omega)).1)] {
            let long = t.output_on_prefix(&p);
            let short = t.output_on_prefix(&p[..cut]);
            prop_assert_eq!(&long[..short.len()], &short[..]);
        }
    }
}
