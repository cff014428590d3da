use normplay::partizan::{integer_sum_outcome, PGameId, PartizanStore, Player};
use normplay::PlayerCount;
use proptest::prelude::*;

fn setup() -> (PartizanStore, Vec<PGameId>) {
    let mut s = PartizanStore::new(PlayerCount::THREE);
    let pool = s.enumerate_small().unwrap();
    (s, pool)
}

fn player() -> impl Strategy<Value = Player> {
    (0usize..3).prop_map(Player)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn proven_order_survives_translation(i in 0usize..512, j in 0usize..512, k in 0usize..512, p in player()) {
        let (mut s, pool) = setup();
        let (g, h, x) = (pool[i], pool[j], pool[k]);
        prop_assume!(s.leq_sufficient(g, h, p).unwrap().is_some());
        let gx = s.sum(g, x).unwrap();
        let hx = s.sum(h, x).unwrap();
        let mut ctx = pool[..64].to_vec();
        ctx.extend(s.witness_families(gx, hx, p).unwrap());
        prop_assert_eq!(s.leq_refute(gx, hx, p, &ctx).unwrap(), None);
    }

    #[test]
    fn proven_order_is_transitive(i in 0usize..512, j in 0usize..512, k in 0usize..512, p in player()) {
        let (mut s, pool) = setup();
        let (g, h, m) = (pool[i], pool[j], pool[k]);
        let gh = s.leq_sufficient(g, h, p).unwrap().is_some();
        let hm = s.leq_sufficient(h, m, p).unwrap().is_some();
        if gh && hm {
            let v = s.compare(g, m, p, &pool).unwrap();
            prop_assert!(!v.is_refuted(), "{:?}", v);
        }
    }

    #[test]
    fn conjugates_rotate_outcomes(i in 0usize..512) {
        let (mut s, pool) = setup();
        let n = s.players();
        let g = pool[i];
        let c = s.conjugate(g).unwrap();
        prop_assert_eq!(s.conjugate_times(g, n.get()).unwrap(), g);
        let og = s.p_outcome(g).unwrap();
        let oc = s.p_outcome(c).unwrap();
        for p in Player::all(n) {
            prop_assert_eq!(oc.first_mover(p.after(1, n)), og.first_mover(p));
        }
    }

    #[test]
    fn integer_sums_at_five(coeffs in prop::collection::vec(0usize..=2, 5), first in 0usize..5) {
        let n = PlayerCount::new(5).unwrap();
        let mut s = PartizanStore::new(n);
        let parts: Vec<PGameId> = Player::all(n).map(|q| s.integer(coeffs[q.0], q).unwrap()).collect();
        let g = s.sum_all(parts).unwrap();
        let brute = s.p_outcome(g).unwrap().first_mover(Player(first));
        prop_assert_eq!(brute, integer_sum_outcome(&coeffs, Player(first)).unwrap());
    }
}

#[test]
fn only_zero_equals_zero() {
    let (mut s, pool) = setup();
    let z = s.zero();
    for &g in &pool[1..] {
        let mut separated = false;
        for p in Player::all(s.players()) {
            for (a, b) in [(z, g), (g, z)] {
                let mut ctx = pool.clone();
                ctx.extend(s.witness_families(a, b, p).unwrap());
                separated |= s.leq_refute(a, b, p, &ctx).unwrap().is_some();
            }
        }
        assert!(separated, "game {} not separated from 0", g.index());
    }
}

#[test]
fn conjugate_examples() {
    let (mut s, _) = setup();
    let n = s.players();
    let one_l = s.one(Player::LEFT).unwrap();
    let c = s.conjugate(one_l).unwrap();
    assert_eq!(c, s.one(Player(1)).unwrap());
    let r = s.conjugate_times(one_l, n.get() - 1).unwrap();
    assert_eq!(r, s.one(Player::right(n)).unwrap());
    assert_eq!(s.conjugate(s.zero()).unwrap(), s.zero());
}

#[test]
fn mirror_sums_have_no_next() {
    let (mut s, pool) = setup();
    for &g in &pool {
        let cs = s.conj_sum(g).unwrap();
        let m = s.sum(g, cs).unwrap();
        for p in Player::all(s.players()) {
            assert!(!s.p_wins(m, p, 1).unwrap());
        }
    }
}
