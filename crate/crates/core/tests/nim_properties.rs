use normplay::nim::{nim_outcome_closed3, phi, pi, quotient_build, NimPosition, QuotientElement};
use normplay::{GameStore, Outcome, PlayerCount};
use proptest::prelude::*;

fn position(max_heaps: usize, max_size: usize) -> impl Strategy<Value = NimPosition> {
    prop::collection::vec(1..=max_size, 0..=max_heaps).prop_map(NimPosition::new)
}

fn capped() -> impl Strategy<Value = NimPosition> {
    (
        0usize..=5,
        0usize..=4,
        prop::collection::vec(3usize..=7, 0..=3),
    )
        .prop_map(|(n1, n2, big)| {
            let mut heaps = vec![1; n1];
            heaps.extend(std::iter::repeat_n(2, n2));
            heaps.extend(big);
            NimPosition::new(heaps)
        })
}

fn identity_positions() -> Vec<NimPosition> {
    let n = PlayerCount::THREE;
    let op = Outcome::parse("OP", n).unwrap();
    let mut s = GameStore::new();
    NimPosition::enumerate(5, 5)
        .into_iter()
        .filter(|p| p.outcome_engine(&mut s, n).unwrap() == op)
        .collect()
}

proptest! {
    #[test]
    fn closed_form_matches_engine(p in position(5, 6)) {
        let mut s = GameStore::new();
        let n = PlayerCount::THREE;
        prop_assert_eq!(nim_outcome_closed3(&p), p.outcome_engine(&mut s, n).unwrap());
    }

    #[test]
    fn phi_is_a_homomorphism(p in capped(), q in capped()) {
        prop_assert_eq!(phi(&p.join(&q)), phi(&p) * phi(&q));
    }

    #[test]
    fn pi_factors_outcomes(p in capped()) {
        prop_assert_eq!(pi(phi(&p)), nim_outcome_closed3(&p));
    }

    #[test]
    fn identity_classes_act_trivially(g in prop::sample::select(identity_positions()), h in position(4, 4)) {
        let n = PlayerCount::THREE;
        let mut s = GameStore::new();
        let oh = h.outcome_engine(&mut s, n).unwrap();
        prop_assert_eq!(g.join(&h).outcome_engine(&mut s, n).unwrap(), oh);
    }

    #[test]
    fn many_large_heaps_absorb(big in prop::collection::vec(3usize..=5, 3..=4), rest in position(2, 4)) {
        let n = PlayerCount::THREE;
        let mut s = GameStore::new();
        let p = NimPosition::new(big).join(&rest);
        let g = p.game(&mut s).unwrap();
        prop_assert!(s.absorbing_certify(g, n).unwrap());
    }

    #[test]
    fn many_medium_heaps_absorb(mid in prop::collection::vec(2usize..=4, 4..=5)) {
        let n = PlayerCount::THREE;
        let mut s = GameStore::new();
        let g = NimPosition::new(mid).game(&mut s).unwrap();
        prop_assert!(s.absorbing_certify(g, n).unwrap());
    }
}

#[test]
fn identity_class_is_exactly_one() {
    let n = PlayerCount::THREE;
    let mut s = GameStore::new();
    let op = Outcome::parse("OP", n).unwrap();
    for p in NimPosition::enumerate(4, 4) {
        if p.outcome_engine(&mut s, n).unwrap() == op {
            assert_eq!(phi(&p), QuotientElement::ONE, "{p}");
        }
    }
}

#[test]
fn quotient_elements_are_distinct() {
    let q = quotient_build().unwrap();
    let contexts: Vec<NimPosition> = q.elements.iter().map(|e| e.representative()).collect();
    for (i, a) in q.elements.iter().enumerate() {
        for b in &q.elements[i + 1..] {
            let (ra, rb) = (a.representative(), b.representative());
            let separated = contexts
                .iter()
                .any(|x| nim_outcome_closed3(&ra.join(x)) != nim_outcome_closed3(&rb.join(x)));
            assert!(separated, "{a} and {b} not separated");
        }
    }
}

#[test]
fn quotient_table_matches_normal_form() {
    let q = quotient_build().unwrap();
    for &a in &q.elements {
        for &b in &q.elements {
            assert_eq!(q.product(a, b), a * b);
        }
        assert_eq!(q.pi[q.index(a)], pi(a));
    }
}
