use deduction_engine::{Closure, KnowledgeBase};
use proptest::prelude::*;

const KINDS: [&str; 6] = ["SW", "W", "STW", "TW", "PW", "PTW"];
const TERMS: [&str; 8] = ["a", "b", "c", "comp(a)", "prod(a,b)", "coprod(b,c)", "par(c)", "meet(a,c)"];

fn statement() -> impl Strategy<Value = String> {
    prop_oneof![
        (any::<bool>(), 0..6usize, 0..8usize, 0..8usize).prop_map(|(p, k, x, y)| {
            format!("fact {} {} {} {}", if p { "le" } else { "nle" }, KINDS[k], TERMS[x], TERMS[y])
        }),
        (0..3usize, 0..3usize).prop_map(|(f, x)| {
            format!("prop {} {}", ["complete", "stronglyComplete", "pointed"][f], ["a", "b", "c"][x])
        }),
    ]
}

fn kb(lines: &[String]) -> KnowledgeBase {
    KnowledgeBase::parse(&format!("atom a\natom b\natom c\n{}", lines.join("\n"))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn every_fact_replays(lines in prop::collection::vec(statement(), 0..6)) {
        let c = Closure::new(&kb(&lines), 0, &[]);
        for i in c.established() {
            prop_assert!(c.replay(i), "{}", c.explain(i));
        }
        for x in c.contradictions() {
            prop_assert!(c.replay(x.positive) && c.replay(x.negative));
        }
    }

    #[test]
    fn closure_is_deterministic(lines in prop::collection::vec(statement(), 0..6)) {
        let k = kb(&lines);
        let (x, y) = (Closure::new(&k, 0, &[]), Closure::new(&k, 0, &[]));
        prop_assert_eq!(x.facts(), y.facts());
    }

    #[test]
    fn derived_facts_hold_premises_earlier(lines in prop::collection::vec(statement(), 0..6)) {
        let c = Closure::new(&kb(&lines), 0, &[]);
        for i in c.established() {
            prop_assert!(c.fact(i).premises().iter().all(|p| *p < i));
        }
    }

    #[test]
    fn consistent_inputs_grow_monotonically(lines in prop::collection::vec(statement(), 0..4)) {
        let k = kb(&lines);
        let d0 = Closure::new(&k, 0, &[]);
        prop_assume!(d0.contradictions().is_empty());
        let d1 = Closure::new(&k, 1, &[]);
        prop_assume!(d1.contradictions().is_empty());
        let (s0, s1) = (d0.fact_set(), d1.fact_set());
        prop_assert!(s0.is_subset(&s1), "{:?}", s0.difference(&s1).collect::<Vec<_>>());
    }
}
