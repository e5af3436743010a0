use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stream_kit::gen::{all_names, random_name, random_stalling};
use stream_kit::*;

#[test]
fn precompletion_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let baire = Space::baire();
    let pre = baire.precompletion();
    for _ in 0..200 {
        let p = random_name(&mut rng, 5, 4, 6);
        assert_eq!(pre.decode(&shift_plus(&p)), baire.decode(&p));
        let expected = match shift_minus(&p) {
            Shifted::Infinite(q) => baire.decode(&q),
            Shifted::Finite(_) => None,
        };
        assert_eq!(pre.decode(&p), expected);
    }
}

#[test]
fn totalized_transformers_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut stalled = 0;
    for _ in 0..100 {
        let f = random_stalling(&mut rng);
        let g = totalize(&f);
        let padded = pad(&f);
        for _ in 0..10 {
            let p = random_name(&mut rng, 4, 3, 5);
            let gp = g.run(&p, DEFAULT_PERIODS).total().expect("totalized run is total");
            let padded_run = padded.run(&p, DEFAULT_PERIODS).total().expect("padded run is total");
            match f.run(&p, DEFAULT_PERIODS) {
                Run::Total(fp) => {
                    assert_eq!(shift_minus(&gp), Shifted::Infinite(fp.clone()));
                    assert_eq!(shift_minus(&padded_run), shift_minus(&fp));
                }
                Run::Stalls(w) => {
                    stalled += 1;
                    assert_eq!(shift_minus(&gp), Shifted::Finite(w));
                    assert_eq!(decode_completion(&Space::baire(), &gp), None);
                }
                Run::Undetermined(_) => panic!("finite-state runs are determined"),
            }
        }
    }
    assert!(stalled > 0);
}

fn exhaustive() -> Vec<UpName> {
    all_names(4, 3, 3)
}

// Sequences periodic from position 4 with periods a, b <= 3 that agree
// on 4 + a + b - gcd(a, b) symbols agree everywhere, so 10 symbols
// separate them.
fn distinct_sequences() -> usize {
    fn words(len: usize) -> Vec<Vec<u64>> {
        (0..len).fold(vec![vec![]], |acc, _| {
            acc.iter().flat_map(|w| (0..4).map(move |s| [w.clone(), vec![s]].concat())).collect()
        })
    }
    let pres: Vec<_> = (0..=4).flat_map(words).collect();
    let pers: Vec<_> = (1..=3).flat_map(words).collect();
    let mut seen = std::collections::BTreeSet::new();
    for a in &pres {
        for b in &pers {
            let seq: Vec<u64> = (0..10).map(|i| if i < a.len() { a[i] } else { b[(i - a.len()) % b.len()] }).collect();
            seen.insert(seq);
        }
    }
    seen.len()
}

#[test]
fn completeness_witnesses_pass() {
    let samples = exhaustive();
    assert_eq!(samples.len(), distinct_sequences());
    for p in [Problem::Lpo, Problem::Sort, Problem::Acc(Bound::Finite(2)), Problem::Acc(Bound::Omega)] {
        let (h, k) = completeness_witness(p);
        let r = check_reduction(Semantics::Completion(p), Semantics::Plain(p), &h, &k, &samples).unwrap();
        assert!(r.passed(), "{p}: {:?}", &r.failures[..r.failures.len().min(3)]);
    }
}

#[test]
fn corrupted_witnesses_fail() {
    let samples = exhaustive();
    for p in [Problem::Lpo, Problem::Sort, Problem::Acc(Bound::Finite(2)), Problem::Acc(Bound::Omega)] {
        let (_, k) = completeness_witness(p);
        let r = check_reduction(Semantics::Completion(p), Semantics::Plain(p), &PrefixTransformer::identity(), &k, &samples).unwrap();
        assert!(!r.passed(), "{p}");
        assert!(r.failures.iter().all(|f| Semantics::Completion(p).input(&f.sample).is_some()));
    }
    // K without the swap of 0 and 1 breaks LPO on names of sequences with zeros
    let k = PrefixTransformer::pointwise("K", |a| vec![u64::from(a == 1)]);
    let r = check_reduction(
        Semantics::Completion(Problem::Lpo),
        Semantics::Plain(Problem::Lpo),
        &PrefixTransformer::plus_one(),
        &k,
        &samples,
    )
    .unwrap();
    assert!(!r.passed());
}
