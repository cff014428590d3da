//! Interned partizan games with one option set per player.
//!
//! Players are numbered by seat: 0 is Left, `N-1` is Right and the ones in
//! between are the centers. Play passes from seat `i` to seat `i+1 mod N`.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::game::{fresh_store_id, GameId, GameStore, PlayerCount, DEFAULT_NODE_CAP};
use crate::intern::SliceInterner;
use crate::outcome::Outcome;

const NONE: u32 = u32::MAX;

/// A player seat in a partizan game.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Player(pub usize);

impl Player {
    pub const LEFT: Player = Player(0);

    pub fn right(n: PlayerCount) -> Player {
        Player(n.get() - 1)
    }

    pub fn index(self) -> usize {
        self.0
    }

    /// The player `k` turns later.
    pub fn after(self, k: usize, n: PlayerCount) -> Player {
        Player((self.0 + k) % n.get())
    }

    pub fn before(self, k: usize, n: PlayerCount) -> Player {
        let nn = n.get();
        Player((self.0 + nn - k % nn) % nn)
    }

    pub fn all(n: PlayerCount) -> impl Iterator<Item = Player> {
        (0..n.get()).map(Player)
    }

    /// Accepts `L`, `R`, `C1`..`C{N-2}`, and `C0`/`C{N-1}` as aliases.
    pub fn parse(text: &str, n: PlayerCount) -> Result<Player> {
        let t = text.trim();
        let idx = match t {
            "L" | "Left" => 0,
            "R" | "Right" => n.get() - 1,
            _ => {
                let digits = t
                    .strip_prefix('C')
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown player {t:?}")))?;
                digits
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("unknown player {t:?}")))?
            }
        };
        if idx >= n.get() {
            return Err(Error::SeatOutOfRange {
                seat: idx,
                players: n.get(),
            });
        }
        Ok(Player(idx))
    }

    pub fn name(self, n: PlayerCount) -> String {
        if self.0 == 0 {
            "L".into()
        } else if self.0 + 1 == n.get() {
            "R".into()
        } else {
            format!("C{}", self.0)
        }
    }
}

/// Handle to an interned partizan game.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PGameId {
    store: u32,
    index: u32,
}

impl PGameId {
    pub fn index(self) -> u32 {
        self.index
    }
}

impl fmt::Debug for PGameId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}", self.index)
    }
}

/// Impartial outcomes of the restrictions, indexed by first mover.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartizanOutcome(pub Vec<Outcome>);

impl PartizanOutcome {
    pub fn first_mover(&self, p: Player) -> Outcome {
        self.0[p.0]
    }

    pub fn parse(text: &str, n: PlayerCount) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, "expected (o1,...,oN)"))?;
        let parts = inner
            .split(',')
            .map(|s| Outcome::parse(s, n))
            .collect::<Result<Vec<_>>>()?;
        if parts.len() != n.get() {
            return Err(Error::parse(0, format!("expected {n} components")));
        }
        Ok(PartizanOutcome(parts))
    }
}

impl fmt::Display for PartizanOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, o) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{o}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for PartizanOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartizanOutcome{self}")
    }
}

/// Interning table for partizan games of a fixed player count. Owns the
/// impartial store that holds the restrictions.
#[derive(Clone)]
pub struct PartizanStore {
    id: u32,
    n: PlayerCount,
    nodes: SliceInterner,
    node_cap: usize,
    games: GameStore,
    rest_memo: Vec<Vec<u32>>,
    conj_memo: Vec<u32>,
    depth_memo: Vec<u32>,
    sums: FxHashMap<(u32, u32), u32>,
}

impl PartizanStore {
    pub fn new(n: PlayerCount) -> Self {
        Self::with_node_cap(n, DEFAULT_NODE_CAP)
    }

    pub fn with_node_cap(n: PlayerCount, node_cap: usize) -> Self {
        let mut nodes = SliceInterner::new();
        nodes.intern(&vec![0; n.get()], usize::MAX);
        PartizanStore {
            id: fresh_store_id(),
            n,
            nodes,
            node_cap: node_cap.max(1),
            games: GameStore::with_node_cap(node_cap),
            rest_memo: vec![Vec::new(); n.get()],
            conj_memo: Vec::new(),
            depth_memo: Vec::new(),
            sums: FxHashMap::default(),
        }
    }

    pub fn players(&self) -> PlayerCount {
        self.n
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn node_cap(&self) -> usize {
        self.node_cap
    }

    pub fn set_node_cap(&mut self, cap: usize) {
        self.node_cap = cap.max(1);
        self.games.set_node_cap(cap);
    }

    /// The impartial store holding restrictions and embedded games.
    pub fn games(&self) -> &GameStore {
        &self.games
    }

    pub fn games_mut(&mut self) -> &mut GameStore {
        &mut self.games
    }

    fn handle(&self, index: u32) -> PGameId {
        PGameId {
            store: self.id,
            index,
        }
    }

    pub fn check(&self, g: PGameId) -> Result<u32> {
        if g.store == self.id && (g.index as usize) < self.nodes.len() {
            Ok(g.index)
        } else {
            Err(Error::InvalidHandle)
        }
    }

    pub fn check_player(&self, p: Player) -> Result<()> {
        if p.0 < self.n.get() {
            Ok(())
        } else {
            Err(Error::SeatOutOfRange {
                seat: p.0,
                players: self.n.get(),
            })
        }
    }

    pub fn zero(&self) -> PGameId {
        self.handle(0)
    }

    pub fn is_zero(&self, g: PGameId) -> bool {
        g.index == 0
    }

    // Node layout: N slot lengths, then the slots' children back to back.
    fn raw_slot(&self, index: u32, slot: usize) -> &[u32] {
        let data = self.nodes.get(index);
        let n = self.n.get();
        let start: usize = n + data[..slot].iter().map(|&l| l as usize).sum::<usize>();
        &data[start..start + data[slot] as usize]
    }

    fn intern_raw(&mut self, mut slots: Vec<Vec<u32>>) -> Result<u32> {
        let n = self.n.get();
        let mut data = Vec::with_capacity(n + slots.iter().map(Vec::len).sum::<usize>());
        for s in slots.iter_mut() {
            s.sort_unstable();
            s.dedup();
            data.push(s.len() as u32);
        }
        for s in &slots {
            data.extend_from_slice(s);
        }
        self.nodes
            .intern(&data, self.node_cap)
            .ok_or(Error::ResourceLimit { cap: self.node_cap })
    }

    /// Canonical game with the given option set per player.
    pub fn intern(&mut self, slots: Vec<Vec<PGameId>>) -> Result<PGameId> {
        if slots.len() != self.n.get() {
            return Err(Error::InvalidArgument(format!(
                "expected {} option sets, got {}",
                self.n,
                slots.len()
            )));
        }
        let raw = slots
            .into_iter()
            .map(|s| s.into_iter().map(|g| self.check(g)).collect())
            .collect::<Result<Vec<Vec<u32>>>>()?;
        let idx = self.intern_raw(raw)?;
        Ok(self.handle(idx))
    }

    /// Game whose only options belong to `p`.
    pub fn single_slot(&mut self, p: Player, options: Vec<PGameId>) -> Result<PGameId> {
        self.check_player(p)?;
        let mut slots = vec![Vec::new(); self.n.get()];
        slots[p.0] = options;
        self.intern(slots)
    }

    /// Options of `g` for player `p`, ascending.
    pub fn slot(&self, g: PGameId, p: Player) -> Vec<PGameId> {
        self.raw_slot(g.index, p.0)
            .iter()
            .map(|&c| self.handle(c))
            .collect()
    }

    pub fn slots(&self, g: PGameId) -> Vec<Vec<PGameId>> {
        Player::all(self.n).map(|p| self.slot(g, p)).collect()
    }

    pub fn has_options(&self, g: PGameId, p: Player) -> bool {
        !self.raw_slot(g.index, p.0).is_empty()
    }

    /// `1_p`, a single move for `p` to 0.
    pub fn one(&mut self, p: Player) -> Result<PGameId> {
        let z = self.zero();
        self.single_slot(p, vec![z])
    }

    /// `k_p`, whose options for `p` are `0_p, ..., (k-1)_p`.
    pub fn integer(&mut self, k: usize, p: Player) -> Result<PGameId> {
        self.check_player(p)?;
        let mut below = vec![self.zero()];
        for _ in 0..k {
            let next = self.single_slot(p, below.clone())?;
            below.push(next);
        }
        Ok(below[k])
    }

    /// `k·1_p`.
    pub fn ones(&mut self, k: usize, p: Player) -> Result<PGameId> {
        let one = self.one(p)?;
        self.copies(one, k)
    }

    /// An impartial game with the same option set in every slot.
    pub fn embed(&mut self, g: GameId) -> Result<PGameId> {
        let games = self.games.clone_children_topo(g)?;
        let mut map: FxHashMap<u32, u32> = FxHashMap::default();
        for (v, kids) in games {
            let opts: Vec<u32> = kids.iter().map(|c| map[c]).collect();
            let idx = self.intern_raw(vec![opts; self.n.get()])?;
            map.insert(v, idx);
        }
        Ok(self.handle(map[&g.index()]))
    }

    pub fn sum(&mut self, g: PGameId, h: PGameId) -> Result<PGameId> {
        let a = self.check(g)?;
        let b = self.check(h)?;
        let s = self.sum_raw(a, b)?;
        Ok(self.handle(s))
    }

    fn sum_raw(&mut self, a: u32, b: u32) -> Result<u32> {
        if a == 0 {
            return Ok(b);
        }
        if b == 0 {
            return Ok(a);
        }
        let key = if a <= b { (a, b) } else { (b, a) };
        if let Some(&s) = self.sums.get(&key) {
            return Ok(s);
        }
        let n = self.n.get();
        let mut slots = Vec::with_capacity(n);
        for p in 0..n {
            let ga = self.raw_slot(a, p).to_vec();
            let hb = self.raw_slot(b, p).to_vec();
            let mut opts = Vec::with_capacity(ga.len() + hb.len());
            for c in ga {
                opts.push(self.sum_raw(c, b)?);
            }
            for c in hb {
                opts.push(self.sum_raw(a, c)?);
            }
            slots.push(opts);
        }
        let s = self.intern_raw(slots)?;
        self.sums.insert(key, s);
        Ok(s)
    }

    pub fn sum_all<I: IntoIterator<Item = PGameId>>(&mut self, games: I) -> Result<PGameId> {
        let mut acc = self.zero();
        for g in games {
            acc = self.sum(acc, g)?;
        }
        Ok(acc)
    }

    pub fn copies(&mut self, g: PGameId, k: usize) -> Result<PGameId> {
        self.check(g)?;
        let mut acc = self.zero();
        for _ in 0..k {
            acc = self.sum(acc, g)?;
        }
        Ok(acc)
    }

    /// First conjugate: every player's role passes to the next seat.
    pub fn conjugate(&mut self, g: PGameId) -> Result<PGameId> {
        let a = self.check(g)?;
        let c = self.conj_raw(a)?;
        Ok(self.handle(c))
    }

    fn conj_raw(&mut self, a: u32) -> Result<u32> {
        if let Some(&c) = self.conj_memo.get(a as usize) {
            if c != NONE {
                return Ok(c);
            }
        }
        let n = self.n.get();
        let mut slots = vec![Vec::new(); n];
        for (p, slot) in slots.iter_mut().enumerate() {
            let src = self.raw_slot(a, (p + n - 1) % n).to_vec();
            for c in src {
                slot.push(self.conj_raw(c)?);
            }
        }
        let c = self.intern_raw(slots)?;
        if self.conj_memo.len() <= a as usize {
            self.conj_memo.resize(a as usize + 1, NONE);
        }
        self.conj_memo[a as usize] = c;
        Ok(c)
    }

    pub fn conjugate_times(&mut self, mut g: PGameId, k: usize) -> Result<PGameId> {
        for _ in 0..k % self.n.get() {
            g = self.conjugate(g)?;
        }
        Ok(g)
    }

    /// `G⁻`, the sum of the first `N-1` conjugates.
    pub fn conj_sum(&mut self, g: PGameId) -> Result<PGameId> {
        let mut acc = self.zero();
        let mut c = g;
        for _ in 1..self.n.get() {
            c = self.conjugate(c)?;
            acc = self.sum(acc, c)?;
        }
        Ok(acc)
    }

    /// Impartial game of the play sequence that starts with `first`.
    pub fn restriction(&mut self, g: PGameId, first: Player) -> Result<GameId> {
        let a = self.check(g)?;
        self.check_player(first)?;
        let r = self.rest_raw(a, first.0)?;
        Ok(self.games.handle(r))
    }

    fn rest_raw(&mut self, a: u32, first: usize) -> Result<u32> {
        if let Some(&r) = self.rest_memo[first].get(a as usize) {
            if r != NONE {
                return Ok(r);
            }
        }
        let next = (first + 1) % self.n.get();
        let opts = self.raw_slot(a, first).to_vec();
        let mut kids = Vec::with_capacity(opts.len());
        for c in opts {
            kids.push(self.rest_raw(c, next)?);
        }
        let r = self.games.intern_raw(kids)?;
        let memo = &mut self.rest_memo[first];
        if memo.len() <= a as usize {
            memo.resize(a as usize + 1, NONE);
        }
        memo[a as usize] = r;
        Ok(r)
    }

    pub fn p_outcome(&mut self, g: PGameId) -> Result<PartizanOutcome> {
        let n = self.n;
        let mut out = Vec::with_capacity(n.get());
        for p in Player::all(n) {
            let r = self.restriction(g, p)?;
            out.push(self.games.outcome(r, n)?);
        }
        Ok(PartizanOutcome(out))
    }

    /// Whether `p` has a winning strategy in `g` when moving `order`-th.
    pub fn p_wins(&mut self, g: PGameId, p: Player, order: usize) -> Result<bool> {
        self.check_player(p)?;
        let n = self.n;
        if !(1..=n.get()).contains(&order) {
            return Err(Error::SeatOutOfRange {
                seat: order,
                players: n.get(),
            });
        }
        let first = p.before(order - 1, n);
        let r = self.restriction(g, first)?;
        Ok(self.games.outcome(r, n)?.contains(order - 1))
    }

    /// Height of the game tree.
    pub fn depth(&mut self, g: PGameId) -> Result<usize> {
        let a = self.check(g)?;
        Ok(self.depth_raw(a) as usize)
    }

    fn depth_raw(&mut self, a: u32) -> u32 {
        if let Some(&d) = self.depth_memo.get(a as usize) {
            if d != NONE {
                return d;
            }
        }
        let mut best = 0;
        for p in 0..self.n.get() {
            for c in self.raw_slot(a, p).to_vec() {
                best = best.max(self.depth_raw(c) + 1);
            }
        }
        if self.depth_memo.len() <= a as usize {
            self.depth_memo.resize(a as usize + 1, NONE);
        }
        self.depth_memo[a as usize] = best;
        best
    }

    /// A game whose outcome is `target`, one nested chain per first mover.
    pub fn p_outcome_witness(&mut self, target: &PartizanOutcome) -> Result<PGameId> {
        let n = self.n;
        n.require_more_than_two("p_outcome_witness")?;
        if target.0.len() != n.get() {
            return Err(Error::InvalidArgument(format!("expected {n} components")));
        }
        let mut slots = vec![Vec::new(); n.get()];
        for p in Player::all(n) {
            let o = target.first_mover(p);
            let base = self.games.outcome_witness(o, n)?;
            // N-1 single-move layers plus the outer game make N wraps of
            // `base` in the restriction, which leaves the outcome unchanged.
            let mut g = self.embed(base)?;
            for k in (1..n.get()).rev() {
                g = self.single_slot(p.after(k, n), vec![g])?;
            }
            slots[p.0].push(g);
        }
        self.intern(slots)
    }
}

impl GameStore {
    /// Subpositions of `g` with their children, children first.
    pub(crate) fn clone_children_topo(&self, g: GameId) -> Result<Vec<(u32, Vec<u32>)>> {
        self.check(g)?;
        Ok(self
            .subpositions(g)
            .into_iter()
            .map(|s| (s.index(), self.raw_children(s.index()).to_vec()))
            .collect())
    }
}

/// Outcome of `k_0·1_{C_0} + ... + k_{N-1}·1_{C_{N-1}}` with `first` moving
/// first: everyone wins except the first seat to run out of moves.
pub fn integer_sum_outcome(coeffs: &[usize], first: Player) -> Result<Outcome> {
    let n = PlayerCount::new(coeffs.len())?;
    if first.0 >= n.get() {
        return Err(Error::SeatOutOfRange {
            seat: first.0,
            players: n.get(),
        });
    }
    let kmin = *coeffs.iter().min().expect("at least two players");
    let j = (0..n.get())
        .find(|&j| coeffs[(first.0 + j) % n.get()] == kmin)
        .expect("minimum is attained");
    Outcome::all_but(&[j], n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(n: usize) -> (PartizanStore, PlayerCount) {
        let n = PlayerCount::new(n).unwrap();
        (PartizanStore::new(n), n)
    }

    fn three(s: &str) -> Outcome {
        Outcome::parse(s, PlayerCount::THREE).unwrap()
    }

    #[test]
    fn restriction_examples() {
        let (mut s, _) = setup(3);
        let one_l = s.one(Player::LEFT).unwrap();
        let r = s.restriction(one_l, Player::LEFT).unwrap();
        assert_eq!(r, s.games_mut().nim_heap(1).unwrap());
        let r = s.restriction(one_l, Player(1)).unwrap();
        assert_eq!(r, s.games().zero());
        let z = s.zero();
        for p in 0..3 {
            assert_eq!(s.restriction(z, Player(p)).unwrap(), s.games().zero());
        }
    }

    #[test]
    fn outcome_examples() {
        let (mut s, n) = setup(3);
        let z = s.zero();
        assert_eq!(s.p_outcome(z).unwrap().0, vec![three("OP"); 3]);
        let star = s.games_mut().nim_heap(1).unwrap();
        let pstar = s.embed(star).unwrap();
        assert_eq!(s.p_outcome(pstar).unwrap().0, vec![three("PN"); 3]);
        let one_l = s.one(Player::LEFT).unwrap();
        let o = s.p_outcome(one_l).unwrap();
        assert_eq!(o.0, vec![three("PN"), three("OP"), three("OP")]);
        assert_eq!(o.to_string(), "(NP,OP,OP)");
        assert_eq!(PartizanOutcome::parse("(NP,OP,OP)", n).unwrap(), o);
    }

    #[test]
    fn p_wins_examples() {
        let (mut s, _) = setup(3);
        let z = s.zero();
        assert!(s.p_wins(z, Player::LEFT, 2).unwrap());
        let one_l = s.one(Player::LEFT).unwrap();
        assert!(s.p_wins(one_l, Player::LEFT, 1).unwrap());
        assert!(!s.p_wins(one_l, Player(1), 1).unwrap());
        assert!(s.p_wins(one_l, Player(1), 0).is_err());
    }

    #[test]
    fn sum_examples() {
        let (mut s, n) = setup(3);
        let one_l = s.one(Player::LEFT).unwrap();
        let one_r = s.one(Player::right(n)).unwrap();
        let z = s.zero();
        assert_eq!(s.sum(one_l, z).unwrap(), one_l);
        let two = s.sum(one_l, one_l).unwrap();
        assert_eq!(s.slot(two, Player::LEFT), vec![one_l]);
        let g = s.sum(one_l, one_r).unwrap();
        assert_eq!(s.slots(g), vec![vec![one_r], vec![], vec![one_l]]);
    }

    #[test]
    fn conjugate_examples() {
        let (mut s, n) = setup(3);
        let one_l = s.one(Player::LEFT).unwrap();
        let one_c = s.one(Player(1)).unwrap();
        let one_r = s.one(Player::right(n)).unwrap();
        assert_eq!(s.conjugate(one_l).unwrap(), one_c);
        assert_eq!(s.conjugate_times(one_l, 2).unwrap(), one_r);
        let z = s.zero();
        assert_eq!(s.conjugate(z).unwrap(), z);
        assert_eq!(s.conj_sum(z).unwrap(), z);
    }

    #[test]
    fn conj_sum_four_players() {
        let (mut s, n) = setup(4);
        let c2 = s.one(Player(2)).unwrap();
        let got = s.conj_sum(c2).unwrap();
        let parts = [Player::right(n), Player::LEFT, Player(1)]
            .into_iter()
            .map(|p| s.one(p))
            .collect::<Result<Vec<_>>>()
            .unwrap();
        assert_eq!(got, s.sum_all(parts).unwrap());
    }

    #[test]
    fn integers() {
        let (mut s, _) = setup(3);
        assert_eq!(s.integer(0, Player::LEFT).unwrap(), s.zero());
        let one = s.integer(1, Player::LEFT).unwrap();
        assert_eq!(one, s.one(Player::LEFT).unwrap());
        let two = s.integer(2, Player::LEFT).unwrap();
        assert_eq!(s.slot(two, Player::LEFT), vec![s.zero(), one]);
        let ones = s.ones(2, Player::LEFT).unwrap();
        assert_ne!(two, ones);
    }

    #[test]
    fn integer_sum_examples() {
        assert_eq!(
            integer_sum_outcome(&[1, 1, 1], Player::LEFT).unwrap(),
            three("OP")
        );
        assert_eq!(
            integer_sum_outcome(&[2, 1, 1], Player::LEFT).unwrap(),
            three("NP")
        );
    }

    #[test]
    fn embed_restricts_to_itself() {
        let (mut s, _) = setup(4);
        let g = s.games_mut().nim_heap(3).unwrap();
        let w = s.games_mut().wrap(g).unwrap();
        let e = s.embed(w).unwrap();
        for p in 0..4 {
            assert_eq!(s.restriction(e, Player(p)).unwrap(), w);
        }
    }

    #[test]
    fn witness_hits_target() {
        let (mut s, n) = setup(3);
        let target = PartizanOutcome(vec![three("N"), three("P"), three("O")]);
        let g = s.p_outcome_witness(&target).unwrap();
        assert_eq!(s.p_outcome(g).unwrap(), target);
        let empty = PartizanOutcome(vec![Outcome::empty(n); 3]);
        let g = s.p_outcome_witness(&empty).unwrap();
        assert_eq!(s.p_outcome(g).unwrap(), empty);
    }

    #[test]
    fn player_names() {
        let n = PlayerCount::new(4).unwrap();
        assert_eq!(Player::parse("C2", n).unwrap(), Player(2));
        assert_eq!(Player::parse("R", n).unwrap(), Player(3));
        assert!(Player::parse("C4", n).is_err());
        assert!(Player::parse("X", n).is_err());
        assert_eq!(Player(2).name(n), "C2");
        assert_eq!(Player(0).before(1, n), Player(3));
    }
}
