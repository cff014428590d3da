//! Canonical impartial game DAGs.
//!
//! A game is the set of its options. [`GameStore`] interns every game by its
//! sorted, deduplicated list of child ids, so two handles from the same store
//! are equal exactly when the game trees are isomorphic. No game-theoretic
//! simplification happens during interning.

use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::intern::SliceInterner;

pub const DEFAULT_NODE_CAP: usize = 1_000_000;

static NEXT_STORE_ID: AtomicU32 = AtomicU32::new(1);

pub(crate) fn fresh_store_id() -> u32 {
    NEXT_STORE_ID.fetch_add(1, Ordering::Relaxed)
}

/// Handle to an interned impartial game.
///
/// Handles order by creation, and every option of a game is created before
/// the game itself, so ascending order is a topological order of the DAG.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GameId {
    store: u32,
    index: u32,
}

impl GameId {
    pub fn index(self) -> u32 {
        self.index
    }
}

impl fmt::Debug for GameId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.index)
    }
}

/// Number of players, `2..=32`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PlayerCount(u8);

impl PlayerCount {
    pub const TWO: PlayerCount = PlayerCount(2);
    pub const THREE: PlayerCount = PlayerCount(3);
    pub const MAX: usize = 32;

    pub fn new(n: usize) -> Result<Self> {
        if (2..=Self::MAX).contains(&n) {
            Ok(PlayerCount(n as u8))
        } else {
            Err(Error::InvalidPlayerCount(n))
        }
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }

    pub fn require_more_than_two(self, op: &'static str) -> Result<()> {
        if self.0 > 2 {
            Ok(())
        } else {
            Err(Error::NeedsMoreThanTwoPlayers { op })
        }
    }
}

impl fmt::Display for PlayerCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Single-owner interning table plus the per-store memo tables.
#[derive(Clone)]
pub struct GameStore {
    id: u32,
    nodes: SliceInterner,
    node_cap: usize,
    heaps: Vec<u32>,
    sums: FxHashMap<(u32, u32), u32>,
    pub(crate) outcome_memo: Vec<Vec<u64>>,
    pub(crate) depth_memo: Vec<Vec<u32>>,
}

impl Default for GameStore {
    fn default() -> Self {
        Self::new()
    }
}

impl GameStore {
    pub fn new() -> Self {
        Self::with_node_cap(DEFAULT_NODE_CAP)
    }

    pub fn with_node_cap(node_cap: usize) -> Self {
        let mut nodes = SliceInterner::new();
        nodes.intern(&[], usize::MAX);
        GameStore {
            id: fresh_store_id(),
            nodes,
            node_cap: node_cap.max(1),
            heaps: vec![0],
            sums: FxHashMap::default(),
            outcome_memo: vec![Vec::new(); PlayerCount::MAX + 1],
            depth_memo: vec![Vec::new(); PlayerCount::MAX + 1],
        }
    }

    pub fn node_cap(&self) -> usize {
        self.node_cap
    }

    pub fn set_node_cap(&mut self, cap: usize) {
        self.node_cap = cap.max(1);
    }

    /// Number of distinct games interned so far.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub(crate) fn handle(&self, index: u32) -> GameId {
        GameId {
            store: self.id,
            index,
        }
    }

    pub fn zero(&self) -> GameId {
        self.handle(0)
    }

    pub fn is_zero(&self, g: GameId) -> bool {
        g.index == 0 && g.store == self.id
    }

    pub fn check(&self, g: GameId) -> Result<u32> {
        if g.store == self.id && (g.index as usize) < self.nodes.len() {
            Ok(g.index)
        } else {
            Err(Error::InvalidHandle)
        }
    }

    pub(crate) fn raw_children(&self, index: u32) -> &[u32] {
        self.nodes.get(index)
    }

    /// The options of `g`, in ascending handle order.
    pub fn options(&self, g: GameId) -> Vec<GameId> {
        self.raw_children(g.index)
            .iter()
            .map(|&c| self.handle(c))
            .collect()
    }

    pub fn option_count(&self, g: GameId) -> usize {
        self.raw_children(g.index).len()
    }

    pub(crate) fn intern_raw(&mut self, mut children: Vec<u32>) -> Result<u32> {
        children.sort_unstable();
        children.dedup();
        self.nodes
            .intern(&children, self.node_cap)
            .ok_or(Error::ResourceLimit { cap: self.node_cap })
    }

    /// Canonical handle for the game whose options are `options`.
    pub fn intern<I>(&mut self, options: I) -> Result<GameId>
    where
        I: IntoIterator<Item = GameId>,
    {
        let children = options
            .into_iter()
            .map(|g| self.check(g))
            .collect::<Result<Vec<_>>>()?;
        let idx = self.intern_raw(children)?;
        Ok(self.handle(idx))
    }

    /// Looks up a game without inserting it.
    pub fn find<I>(&self, options: I) -> Option<GameId>
    where
        I: IntoIterator<Item = GameId>,
    {
        let mut children = Vec::new();
        for g in options {
            children.push(self.check(g).ok()?);
        }
        children.sort_unstable();
        children.dedup();
        self.nodes.find(&children).map(|i| self.handle(i))
    }

    /// The nim-heap `*n`, whose options are the smaller heaps.
    pub fn nim_heap(&mut self, n: usize) -> Result<GameId> {
        while self.heaps.len() <= n {
            let next = self.heaps.clone();
            let idx = self.intern_raw(next)?;
            self.heaps.push(idx);
        }
        Ok(self.handle(self.heaps[n]))
    }

    /// If `g` is isomorphic to a nim-heap, its size.
    pub fn heap_size(&self, g: GameId) -> Option<usize> {
        let n = self.option_count(g);
        if let Some(&idx) = self.heaps.get(n) {
            return (idx == g.index).then_some(n);
        }
        // Heaps larger than any constructed one can still exist via intern.
        let mut heaps = self.heaps.clone();
        while heaps.len() <= n {
            let idx = self.nodes.find(&heaps)?;
            heaps.push(idx);
        }
        (heaps[n] == g.index).then_some(n)
    }

    /// `{g}`.
    pub fn wrap(&mut self, g: GameId) -> Result<GameId> {
        self.intern([g])
    }

    pub fn wrap_times(&mut self, mut g: GameId, times: usize) -> Result<GameId> {
        for _ in 0..times {
            g = self.wrap(g)?;
        }
        Ok(g)
    }

    /// Disjunctive sum.
    pub fn sum(&mut self, g: GameId, h: GameId) -> Result<GameId> {
        let a = self.check(g)?;
        let b = self.check(h)?;
        let idx = self.sum_raw(a, b)?;
        Ok(self.handle(idx))
    }

    pub(crate) fn sum_raw(&mut self, a: u32, b: u32) -> Result<u32> {
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
        let ga: Vec<u32> = self.raw_children(a).to_vec();
        let hb: Vec<u32> = self.raw_children(b).to_vec();
        let mut children = Vec::with_capacity(ga.len() + hb.len());
        for &c in &ga {
            children.push(self.sum_raw(c, b)?);
        }
        for &c in &hb {
            children.push(self.sum_raw(a, c)?);
        }
        let s = self.intern_raw(children)?;
        self.sums.insert(key, s);
        Ok(s)
    }

    pub fn sum_all<I>(&mut self, games: I) -> Result<GameId>
    where
        I: IntoIterator<Item = GameId>,
    {
        let mut acc = self.zero();
        for g in games {
            acc = self.sum(acc, g)?;
        }
        Ok(acc)
    }

    /// `k·g`, the sum of `k` copies.
    pub fn n_copies(&mut self, g: GameId, k: usize) -> Result<GameId> {
        self.check(g)?;
        let mut acc = self.zero();
        for _ in 0..k {
            acc = self.sum(acc, g)?;
        }
        Ok(acc)
    }

    /// All games reachable from `g` (including `g`), ascending.
    pub fn subpositions(&self, g: GameId) -> Vec<GameId> {
        let mut seen = rustc_hash::FxHashSet::default();
        let mut stack = vec![g.index];
        seen.insert(g.index);
        while let Some(v) = stack.pop() {
            for &c in self.raw_children(v) {
                if seen.insert(c) {
                    stack.push(c);
                }
            }
        }
        let mut out: Vec<u32> = seen.into_iter().collect();
        out.sort_unstable();
        out.into_iter().map(|i| self.handle(i)).collect()
    }

    /// Height of the game tree.
    pub fn birthday(&self, g: GameId) -> usize {
        let subs = self.subpositions(g);
        let mut height: FxHashMap<u32, usize> = FxHashMap::default();
        for s in subs {
            let h = self
                .raw_children(s.index)
                .iter()
                .map(|c| height[c] + 1)
                .max()
                .unwrap_or(0);
            height.insert(s.index, h);
        }
        height[&g.index]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intern_examples() {
        let mut s = GameStore::new();
        let zero = s.intern([]).unwrap();
        assert_eq!(zero, s.zero());
        let star = s.intern([zero]).unwrap();
        assert_eq!(star, s.nim_heap(1).unwrap());
        let wrapped = s.intern([star, star]).unwrap();
        assert_eq!(s.option_count(wrapped), 1);
        assert_eq!(s.options(wrapped), vec![star]);
    }

    #[test]
    fn foreign_handles_are_rejected() {
        let mut a = GameStore::new();
        let mut b = GameStore::new();
        let star_b = b.nim_heap(1).unwrap();
        a.nim_heap(3).unwrap();
        assert_eq!(a.intern([star_b]), Err(Error::InvalidHandle));
        assert_eq!(a.sum(star_b, star_b), Err(Error::InvalidHandle));
    }

    #[test]
    fn nim_heaps() {
        let mut s = GameStore::new();
        assert_eq!(s.nim_heap(0).unwrap(), s.zero());
        let h3 = s.nim_heap(3).unwrap();
        let expect: Vec<_> = (0..3).map(|i| s.nim_heap(i).unwrap()).collect();
        assert_eq!(s.options(h3), expect);
        assert_eq!(s.heap_size(h3), Some(3));
        let w = s.wrap(h3).unwrap();
        assert_eq!(s.heap_size(w), None);
        assert_eq!(s.birthday(h3), 3);
    }

    #[test]
    fn heap_detected_when_built_by_hand() {
        let mut s = GameStore::new();
        let z = s.zero();
        let one = s.intern([z]).unwrap();
        let two = s.intern([z, one]).unwrap();
        let three = s.intern([z, one, two]).unwrap();
        assert_eq!(s.heap_size(three), Some(3));
    }

    #[test]
    fn wrap_examples() {
        let mut s = GameStore::new();
        let z = s.zero();
        assert_eq!(s.wrap(z).unwrap(), s.nim_heap(1).unwrap());
        let h2 = s.nim_heap(2).unwrap();
        let w = s.wrap(h2).unwrap();
        assert_eq!(s.options(w), vec![h2]);
        let ww = s.wrap(w).unwrap();
        assert_eq!(s.options(ww), vec![w]);
    }

    #[test]
    fn sum_examples() {
        let mut s = GameStore::new();
        let z = s.zero();
        let star = s.nim_heap(1).unwrap();
        let h2 = s.nim_heap(2).unwrap();
        assert_eq!(s.sum(h2, z).unwrap(), h2);
        let ss = s.sum(star, star).unwrap();
        assert_eq!(s.options(ss), vec![star]);
        // *2 + * has options *2, *+*, * (hand expansion).
        let g = s.sum(h2, star).unwrap();
        let mut expect = vec![h2, ss, star];
        expect.sort();
        assert_eq!(s.options(g), expect);
        // Sums of heaps are not heaps.
        assert_ne!(ss, s.nim_heap(2).unwrap());
    }

    #[test]
    fn copies() {
        let mut s = GameStore::new();
        let star = s.nim_heap(1).unwrap();
        assert_eq!(s.n_copies(star, 0).unwrap(), s.zero());
        let three = s.n_copies(star, 3).unwrap();
        let two = s.n_copies(star, 2).unwrap();
        assert_eq!(s.options(three), vec![two]);
        let h3 = s.nim_heap(3).unwrap();
        let g = s.n_copies(h3, 3).unwrap();
        assert_eq!(s.birthday(g), 9);
    }

    #[test]
    fn subposition_examples() {
        let mut s = GameStore::new();
        let z = s.zero();
        assert_eq!(s.subpositions(z), vec![z]);
        let h2 = s.nim_heap(2).unwrap();
        let star = s.nim_heap(1).unwrap();
        assert_eq!(s.subpositions(h2), vec![z, star, h2]);
        let ss = s.sum(star, star).unwrap();
        assert_eq!(s.subpositions(ss), vec![z, star, ss]);
    }

    #[test]
    fn node_cap_is_enforced() {
        let mut s = GameStore::with_node_cap(4);
        assert!(s.nim_heap(3).is_ok());
        assert_eq!(s.nim_heap(4), Err(Error::ResourceLimit { cap: 4 }));
        // Existing nodes are still reachable.
        assert!(s.nim_heap(2).is_ok());
    }

    #[test]
    fn player_count_bounds() {
        assert!(PlayerCount::new(1).is_err());
        assert!(PlayerCount::new(33).is_err());
        assert!(PlayerCount::TWO.require_more_than_two("x").is_err());
        assert!(PlayerCount::THREE.require_more_than_two("x").is_ok());
    }
}
