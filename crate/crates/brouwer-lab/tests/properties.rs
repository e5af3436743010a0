use brouwer_lab::gen::{random_brouwer, random_sample};
use brouwer_lab::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop::sample::select(vec!['A', 'B', 'C']).prop_map(Formula::Var);
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn formulas_print_and_parse(f in formula()) {
        prop_assert_eq!(f.to_string().parse::<Formula>().unwrap(), f);
    }

    #[test]
    fn evaluation_commutes_with_relabelling(f in formula(), seed in any::<u64>(), vals in prop::collection::vec(0usize..64, 3)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_brouwer(&mut rng);
        let n = a.len();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.reverse();
        perm.rotate_left(seed as usize % n);
        let b = a.permute(&perm);
        prop_assert_eq!(check_weihrauch_algebra(&b).class, AlgebraClass::Brouwer);
        let v: Valuation = ['A', 'B', 'C'].into_iter().zip(vals.iter().map(|x| x % n)).collect();
        let w: Valuation = v.iter().map(|(k, x)| (*k, perm[*x])).collect();
        prop_assert_eq!(perm[evaluate(&a, &v, &f).unwrap()], evaluate(&b, &w, &f).unwrap());
        prop_assert_eq!(is_valid(&a, &f).unwrap().holds(), is_valid(&b, &f).unwrap().holds());
    }

    #[test]
    fn modes_agree(f in formula(), seed in any::<u64>()) {
        let a = random_brouwer(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(is_valid_with(&a, &f, Mode::Sequential).unwrap(), is_valid_with(&a, &f, Mode::Parallel).unwrap());
    }

    #[test]
    fn algebra_text_round_trips(seed in any::<u64>()) {
        let a = random_brouwer(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(parse_algebra(&write_algebra(&a)).unwrap(), a);
    }

    #[test]
    fn closure_sample_is_sound(seed in any::<u64>()) {
        let s = random_sample(&mut ChaCha8Rng::seed_from_u64(seed), 8);
        prop_assert!(s.order.is_infimum(&s.meet));
        prop_assert!(s.order.is_supremum(&s.join));
        prop_assert_eq!(check_closure_operator(&s.order, &s.closure), Ok(()));
    }
}
