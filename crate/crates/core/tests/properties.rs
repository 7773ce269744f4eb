use std::collections::BTreeSet;

use proptest::prelude::*;
use schubert_fk::fk::{apply_word_to_basis, FKElement, FKWord, Generator};
use schubert_fk::forest::{is_forest_class, Diagram};
use schubert_fk::poly::schubert_poly;
use schubert_fk::Permutation;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn generator(n: usize) -> impl Strategy<Value = Generator> {
    (1..n).prop_flat_map(move |i| (Just(i), i + 1..=n)).prop_map(|(i, j)| Generator::new(i, j).unwrap())
}

fn word(n: usize, max_len: usize) -> impl Strategy<Value = FKWord> {
    prop::collection::vec(generator(n), 0..=max_len).prop_map(FKWord::new)
}

fn sorted_letters(w: &FKWord) -> Vec<Generator> {
    let mut v = w.letters().to_vec();
    v.sort();
    v
}

proptest! {
    #[test]
    fn canonical_is_idempotent_and_keeps_letters(w in word(6, 7)) {
        let c = w.canonical();
        prop_assert_eq!(c.canonical(), c.clone());
        prop_assert_eq!(sorted_letters(&c), sorted_letters(&w));
        prop_assert!(c.is_canonical());
    }

    #[test]
    fn canonical_is_the_least_word_of_the_class(w in word(5, 5)) {
        let class = w.commutation_class();
        prop_assert_eq!(class.iter().min().unwrap(), &w.canonical());
        for other in &class {
            prop_assert_eq!(other.canonical(), w.canonical());
        }
    }

    #[test]
    fn code_round_trip(w in perm(7)) {
        prop_assert_eq!(Permutation::from_code(&w.code(), 7).unwrap(), w.clone());
        prop_assert_eq!(w.code().iter().sum::<usize>(), w.length());
    }

    #[test]
    fn length_change_matches_length(w in perm(7), i in 1usize..7, d in 1usize..7) {
        let j = (i + d).min(7);
        prop_assume!(i < j);
        let diff = w.swap(i, j).length() as isize - w.length() as isize;
        prop_assert_eq!(w.length_change(i, j), diff);
    }

    #[test]
    fn divided_differences_lower_schubert_polynomials(w in perm(5), i in 1usize..5) {
        let f = schubert_poly(&w).divided_difference(i);
        let ws = w.swap(i, i + 1);
        if w.at(i) > w.at(i + 1) {
            prop_assert_eq!(f, schubert_poly(&ws));
        } else {
            prop_assert!(f.is_zero());
        }
    }

    #[test]
    fn quantum_steps_trade_length_for_degree(w in perm(5), x in word(5, 5)) {
        if let Some((u, q)) = apply_word_to_basis(&x, &w, true) {
            let degree: usize = q.iter().map(|e| 2 * *e as usize).sum();
            prop_assert_eq!(u.length() + degree, w.length() + x.len());
        }
        if let Some((u, q)) = apply_word_to_basis(&x, &w, false) {
            prop_assert!(q.is_empty());
            prop_assert_eq!(u.length(), w.length() + x.len());
        }
    }

    #[test]
    fn element_product_is_associative(a in word(4, 2), b in word(4, 2), c in word(4, 2)) {
        let (a, b, c) = (FKElement::from_word(&a, 1), FKElement::from_word(&b, 2), FKElement::from_word(&c, -1));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn forests_have_acyclic_incidence_graphs(cells in prop::collection::btree_set((1usize..=3, 4usize..=7), 0..=8)) {
        let boxes: Vec<(usize, usize)> = cells.iter().copied().collect();
        let d = Diagram::new(3, 7, &boxes).unwrap();
        // boxes as edges between row vertices and column vertices
        let mut parent: Vec<usize> = (0..=7).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] == x { x } else { let r = find(p, p[x]); p[x] = r; r }
        }
        let mut acyclic = true;
        for &(i, j) in &boxes {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a == b { acyclic = false; break; }
            parent[a] = b;
        }
        prop_assert_eq!(d.is_forest(), acyclic);
    }

    #[test]
    fn forest_class_flag(w in word(5, 4)) {
        let k = 2;
        prop_assume!(w.letters().iter().all(|g| g.i() <= k && g.j() > k));
        let distinct: BTreeSet<_> = w.letters().iter().collect();
        let expected = distinct.len() == w.len() && Diagram::from_word(&w, k, 5).unwrap().is_forest();
        prop_assert_eq!(is_forest_class(&w, k, 5), expected);
    }
}
