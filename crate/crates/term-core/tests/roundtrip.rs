use proptest::prelude::*;
use term_core::{parse_term, BinOp, MOp, Term, UnOp};

fn leaf() -> impl Strategy<Value = Term> {
    prop_oneof![
        Just(Term::Zero),
        Just(Term::One),
        Just(Term::Inf),
        "[A-Za-z][A-Za-z0-9_]{0,5}'{0,2}"
            .prop_filter("keyword", |s| term_core::is_identifier(s))
            .prop_map(Term::Atom),
        "[A-Z][a-z0-9]{0,3}".prop_map(Term::Medv),
    ]
}

fn term() -> impl Strategy<Value = Term> {
    // recursion depth 5 on top of the leaves gives trees of depth ≤ 6
    leaf().prop_recursive(5, 64, 2, |inner| {
        prop_oneof![
            (0..UnOp::ALL.len(), inner.clone()).prop_map(|(i, c)| Term::unary(UnOp::ALL[i], c)),
            (0..BinOp::ALL.len(), inner.clone(), inner.clone())
                .prop_map(|(i, l, r)| Term::binary(BinOp::ALL[i], l, r)),
            (0..MOp::ALL.len(), inner.clone(), inner)
                .prop_map(|(i, l, r)| Term::medv_op(MOp::ALL[i], l, r)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_then_parse_is_identity(t in term()) {
        prop_assert!(t.depth() <= 6);
        prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn whitespace_insensitive(t in term()) {
        let spaced = t.to_string().replace(',', " , ").replace('(', " ( ");
        prop_assert_eq!(parse_term(&spaced).unwrap(), t);
    }
}
