use brouwer_lab::*;

fn two_chain() -> FinitePreorder {
    FinitePreorder::chain(2)
}

#[test]
fn closure_operator_checks() {
    let l = FiniteLattice::boolean(2);
    let id: Vec<usize> = (0..4).collect();
    assert_eq!(check_closure_operator(l.order(), &id), Ok(()));
    assert_eq!(check_closure_operator(l.order(), &[3, 3, 3, 3]), Ok(()));
    let v = check_closure_operator(&two_chain(), &[0, 0]).unwrap_err();
    assert_eq!((v.axiom, v.x), (Axiom::Extensive, 1));
}

#[test]
fn induced_preorders() {
    let l = FiniteLattice::boolean(2);
    let id: Vec<usize> = (0..4).collect();
    assert_eq!(&induced_preorder(l.order(), &id).unwrap(), l.order());
    assert!(induced_preorder(l.order(), &[3, 3, 3, 3]).unwrap().is_total());
    let q = induced_preorder(&FinitePreorder::chain(3), &[1, 1, 2]).unwrap();
    assert!(q.leq(0, 1) && q.leq(1, 0));
    assert!(matches!(induced_preorder(&two_chain(), &[0, 0]), Err(LabError::NotClosure(_))));
}

#[test]
fn quotients() {
    let l = FiniteLattice::boolean(2);
    let id: Vec<usize> = (0..4).collect();
    let q = quotient_lattice(&l, &id).unwrap();
    assert_eq!(q.lattice.len(), 4);
    assert_eq!(q.lattice.order(), l.order());

    let q = quotient_lattice(&FiniteLattice::chain(4), &[0, 1, 3, 3]).unwrap();
    assert_eq!(q.lattice.len(), 3);
    assert!(q.lattice.order().is_total());
    assert_eq!(q.class_of, [0, 1, 2, 2]);

    let q = quotient_lattice(&l, &[3, 3, 3, 3]).unwrap();
    assert_eq!(q.lattice.len(), 1);
}

#[test]
fn preservation_examples() {
    let l = FiniteLattice::boolean(2);
    for c in [vec![0, 1, 2, 3], vec![3, 3, 3, 3], vec![1, 1, 3, 3]] {
        assert!(check_preservation(l.order(), &c, l.join_table()).co_preserved);
        assert!(check_preservation(l.order(), &c, l.meet_table()).preserved);
    }
    let p = check_preservation(&two_chain(), &[1, 1], &[vec![0, 0], vec![0, 0]]);
    assert!(!p.preserved);
}

#[test]
fn upset_algebra_sizes() {
    assert_eq!(upset_algebra(&FinitePreorder::chain(1)).unwrap().len(), 2);
    let c = upset_algebra(&two_chain()).unwrap();
    assert_eq!(c.len(), 3);
    assert!(c.lattice.order().is_total());
    let v = FinitePreorder::generated(3, &[(0, 1), (0, 2)]);
    assert_eq!(upset_algebra(&v).unwrap().len(), 5);
    assert!(matches!(upset_algebra(&FinitePreorder::chain(7)), Err(LabError::TooLarge { .. })));
}

#[test]
fn co_residual_examples() {
    let l = FiniteLattice::chain(2);
    let imp = co_residual(&l, l.join_table()).unwrap();
    assert_eq!(imp[1][0], 0);
    let l = FiniteLattice::chain(3);
    let imp = co_residual(&l, l.join_table()).unwrap();
    assert_eq!((imp[2][1], imp[1][2]), (0, 2));
    let m3 = FiniteLattice::m3();
    assert!(matches!(co_residual(&m3, m3.join_table()), Err(CoResidualFailure::NoLeast { .. })));
}

#[test]
fn classification_examples() {
    let r = check_weihrauch_algebra(&upset_algebra(&two_chain()).unwrap());
    assert_eq!(r.class, AlgebraClass::Brouwer);
    assert!(r.failures.is_empty());

    // constant bottom implication: the one-way law holds, the converse fails
    let l = FiniteLattice::chain(3);
    let weak = FiniteAlgebra::new(l.clone(), l.join_table().to_vec(), 0, Some(vec![vec![0; 3]; 3]));
    let r = check_weihrauch_algebra(&weak);
    assert_eq!(r.class, AlgebraClass::Weihrauch);
    assert!(r.commutative && !r.deductive);

    // constant top breaks the implication law itself
    let top = FiniteAlgebra::new(l.clone(), l.join_table().to_vec(), 0, Some(vec![vec![2; 3]; 3]));
    let r = check_weihrauch_algebra(&top);
    assert_eq!(r.class, AlgebraClass::NotWeihrauch);
    assert!(r.failures.iter().any(|f| f.starts_with("implication")));

    let m3 = FiniteLattice::m3();
    let imp = co_residual(&m3, m3.join_table()).ok();
    let r = check_weihrauch_algebra(&FiniteAlgebra::new(m3.clone(), m3.join_table().to_vec(), 0, imp));
    assert_eq!(r.class, AlgebraClass::NotWeihrauch);
    assert!(!r.distributive);
}

#[test]
fn evaluation_examples() {
    let a: Formula = "A".parse().unwrap();
    let c3 = FiniteAlgebra::chain(3);
    let v = Valuation::from([('A', 1)]);
    assert_eq!(evaluate(&c3, &v, &a).unwrap(), 1);
    let ev = |s: &str, alg: &FiniteAlgebra, v: &Valuation| evaluate(alg, v, &s.parse().unwrap()).unwrap();
    assert_eq!(ev("~A", &c3, &v), 2);
    assert_eq!(ev("~~A", &c3, &v), 0);
    assert_eq!(ev("~~A | ~A", &c3, &v), 0);

    let c2 = FiniteAlgebra::chain(2);
    let v = Valuation::from([('A', 1)]);
    assert_eq!(ev("~A", &c2, &v), 0);
    assert_eq!(ev("~~A", &c2, &v), 1);
    assert_eq!(ev("~~A | ~A", &c2, &v), 0);
    assert_eq!(evaluate(&c2, &v, &"B".parse().unwrap()), Err(LabError::Unbound('B')));
}

#[test]
fn validity_examples() {
    let id: Formula = "A -> A".parse().unwrap();
    for n in 1..=6 {
        let c = FiniteAlgebra::chain(n);
        assert!(is_valid(&c, &id).unwrap().holds());
        assert!(theory_includes_jankov(&c).unwrap(), "chain {n}");
    }
    let v = upset_algebra(&FinitePreorder::generated(3, &[(0, 1), (0, 2)])).unwrap();
    assert!(!theory_includes_jankov(&v).unwrap());
    let Validity::Invalid(cv) = is_valid(&v, &Formula::jankov()).unwrap() else { panic!() };
    assert_ne!(cv.value, v.lattice.bottom());
    assert_eq!(evaluate(&v, &cv.valuation, &Formula::jankov()).unwrap(), cv.value);

    // one maximal point true: ~A holds at the other, ~~A at this one, and
    // their disjunction misses the root
    let one = v.labels.iter().position(|l| l == "{1}").unwrap();
    let val = evaluate(&v, &Valuation::from([('A', one)]), &Formula::jankov()).unwrap();
    assert_eq!(v.labels[val], "{1,2}");

    let five: Formula = "A | B | C | D | E".parse().unwrap();
    assert!(matches!(is_valid(&FiniteAlgebra::chain(3), &five), Err(LabError::TooLarge { .. })));
}

#[test]
fn sequential_and_parallel_agree() {
    let v = upset_algebra(&FinitePreorder::generated(4, &[(0, 1), (0, 2)])).unwrap();
    for s in ["~~A | ~A", "(A -> B) | (B -> A)", "A | ~A", "((A -> B) -> A) -> A"] {
        let f: Formula = s.parse().unwrap();
        assert_eq!(is_valid_with(&v, &f, Mode::Sequential).unwrap(), is_valid_with(&v, &f, Mode::Parallel).unwrap());
    }
}

#[test]
fn embeddings() {
    // the 2-chain sits in the 3-chain as bottom and top
    let c2 = FiniteAlgebra::chain(2);
    let c3 = FiniteAlgebra::chain(3);
    assert!(is_embedding(&c2, &c3, &[0, 2]));
    assert!(!is_embedding(&c2, &c3, &[0, 1]));
    assert!(is_embedding(&c3, &c3, &[0, 1, 2]));
}
