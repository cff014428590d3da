//! Seat-relative impartial outcomes.
//!
//! Seat 0 is Next (the player to move), seat `N-1` is Previous, and seat `i`
//! in between is the player moving `i` turns after Next.

use std::fmt;

use crate::error::{Error, Result};
use crate::game::{GameId, GameStore, PlayerCount};

const UNKNOWN: u64 = u64::MAX;

/// Set of seats holding a winning strategy, as an N-bit mask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Outcome {
    mask: u64,
    players: u8,
}

impl Outcome {
    pub fn empty(n: PlayerCount) -> Self {
        Outcome {
            mask: 0,
            players: n.get() as u8,
        }
    }

    pub fn full(n: PlayerCount) -> Self {
        Outcome {
            mask: full_mask(n.get()),
            players: n.get() as u8,
        }
    }

    pub fn from_mask(mask: u64, n: PlayerCount) -> Self {
        Outcome {
            mask: mask & full_mask(n.get()),
            players: n.get() as u8,
        }
    }

    pub fn from_seats(seats: &[usize], n: PlayerCount) -> Result<Self> {
        let mut o = Outcome::empty(n);
        for &s in seats {
            o = o.with(s)?;
        }
        Ok(o)
    }

    /// Every seat except the listed ones.
    pub fn all_but(seats: &[usize], n: PlayerCount) -> Result<Self> {
        Ok(Outcome::from_seats(seats, n)?.complement())
    }

    pub fn mask(self) -> u64 {
        self.mask
    }

    pub fn players(self) -> PlayerCount {
        PlayerCount::new(self.players as usize).expect("stored player count is valid")
    }

    pub fn contains(self, seat: usize) -> bool {
        seat < self.players as usize && self.mask >> seat & 1 == 1
    }

    pub fn has_next(self) -> bool {
        self.contains(0)
    }

    pub fn has_previous(self) -> bool {
        self.contains(self.players as usize - 1)
    }

    pub fn with(self, seat: usize) -> Result<Self> {
        self.check_seat(seat)?;
        Ok(Outcome {
            mask: self.mask | 1 << seat,
            ..self
        })
    }

    pub fn without(self, seat: usize) -> Result<Self> {
        self.check_seat(seat)?;
        Ok(Outcome {
            mask: self.mask & !(1 << seat),
            ..self
        })
    }

    fn check_seat(self, seat: usize) -> Result<()> {
        if seat < self.players as usize {
            Ok(())
        } else {
            Err(Error::SeatOutOfRange {
                seat,
                players: self.players as usize,
            })
        }
    }

    pub fn complement(self) -> Self {
        Outcome {
            mask: !self.mask & full_mask(self.players as usize),
            ..self
        }
    }

    pub fn intersect(self, other: Self) -> Self {
        Outcome {
            mask: self.mask & other.mask,
            ..self
        }
    }

    pub fn union(self, other: Self) -> Self {
        Outcome {
            mask: self.mask | other.mask,
            ..self
        }
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn len(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_proper(self) -> bool {
        self.mask != full_mask(self.players as usize)
    }

    pub fn seats(self) -> impl Iterator<Item = usize> {
        let mask = self.mask;
        (0..self.players as usize).filter(move |&i| mask >> i & 1 == 1)
    }

    /// Rotates seat `i` to seat `i + 1`, with Previous wrapping to Next.
    /// This is the effect of replacing `G` by `{G}`.
    pub fn rotate_forward(self) -> Self {
        let n = self.players as usize;
        let top = self.mask >> (n - 1) & 1;
        Outcome {
            mask: ((self.mask << 1) | top) & full_mask(n),
            ..self
        }
    }

    pub fn rotate_back(self) -> Self {
        let n = self.players as usize;
        let low = self.mask & 1;
        Outcome {
            mask: (self.mask >> 1) | low << (n - 1),
            ..self
        }
    }

    /// Every subset of the players, in mask order.
    pub fn all(n: PlayerCount) -> impl Iterator<Item = Outcome> {
        (0..=full_mask(n.get())).map(move |m| Outcome::from_mask(m, n))
    }

    /// Every proper subset of the players, in mask order.
    pub fn all_proper(n: PlayerCount) -> impl Iterator<Item = Outcome> {
        (0..full_mask(n.get())).map(move |m| Outcome::from_mask(m, n))
    }

    /// Parses the token form: `N`, `O1`..`O{N-2}`, `P`, or `-` for the empty
    /// set. At three players a bare `O` is `O1`, and tokens may come in any
    /// order, so `PN` and `NP` are the same set.
    pub fn parse(text: &str, n: PlayerCount) -> Result<Self> {
        let text = text.trim();
        let mut o = Outcome::empty(n);
        if text == "-" || text == "∅" {
            return Ok(o);
        }
        if text.is_empty() {
            return Err(Error::parse(0, "empty outcome"));
        }
        let bytes = text.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let start = pos;
            let seat = match bytes[pos] {
                b'N' => {
                    pos += 1;
                    0
                }
                b'P' => {
                    pos += 1;
                    n.get() - 1
                }
                b'O' => {
                    pos += 1;
                    let digits_start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if digits_start == pos {
                        if n.get() != 3 {
                            return Err(Error::parse(start, "bare O needs an index unless N = 3"));
                        }
                        1
                    } else {
                        let i: usize = text[digits_start..pos]
                            .parse()
                            .map_err(|_| Error::parse(digits_start, "bad seat index"))?;
                        if i == 0 || i + 1 >= n.get() {
                            return Err(Error::parse(start, format!("O{i} is not an Other seat")));
                        }
                        i
                    }
                }
                _ => return Err(Error::parse(start, "expected N, O, P or -")),
            };
            if o.contains(seat) {
                return Err(Error::parse(start, "repeated seat"));
            }
            o = o.with(seat)?;
        }
        Ok(o)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return f.write_str("-");
        }
        let n = self.players as usize;
        for seat in self.seats() {
            if seat == 0 {
                f.write_str("N")?;
            } else if seat == n - 1 {
                f.write_str("P")?;
            } else if n == 3 {
                f.write_str("O")?;
            } else {
                write!(f, "O{seat}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Outcome({self})")
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Outcome of a game from the outcomes of its options.
pub(crate) fn combine(option_masks: impl IntoIterator<Item = u64>, n: usize) -> u64 {
    let full = full_mask(n);
    let p_bit = 1u64 << (n - 1);
    let mut all = full;
    let mut any_p = false;
    for m in option_masks {
        all &= m;
        any_p |= m & p_bit != 0;
    }
    (any_p as u64) | ((all << 1) & full & !1)
}

impl GameStore {
    /// Impartial outcome of `g` with `n` players, memoized per player count.
    pub fn outcome(&mut self, g: GameId, n: PlayerCount) -> Result<Outcome> {
        let root = self.check(g)?;
        let mask = self.outcome_raw(root, n.get());
        Ok(Outcome::from_mask(mask, n))
    }

    pub(crate) fn outcome_raw(&mut self, root: u32, n: usize) -> u64 {
        let len = self.len();
        let mut memo = std::mem::take(&mut self.outcome_memo[n]);
        if memo.len() < len {
            memo.resize(len, UNKNOWN);
        }
        if memo[root as usize] == UNKNOWN {
            let mut stack = vec![(root, false)];
            while let Some((v, expanded)) = stack.pop() {
                if memo[v as usize] != UNKNOWN {
                    continue;
                }
                let children = self.raw_children(v);
                if expanded {
                    let m = combine(children.iter().map(|&c| memo[c as usize]), n);
                    memo[v as usize] = m;
                } else {
                    stack.push((v, true));
                    for &c in children {
                        if memo[c as usize] == UNKNOWN {
                            stack.push((c, false));
                        }
                    }
                }
            }
        }
        let result = memo[root as usize];
        self.outcome_memo[n] = memo;
        result
    }

    /// Whether the player moving `i`-th (1-based) has a winning strategy.
    pub fn wins_moving_ith(&mut self, g: GameId, i: usize, n: PlayerCount) -> Result<bool> {
        if !(1..=n.get()).contains(&i) {
            return Err(Error::SeatOutOfRange {
                seat: i,
                players: n.get(),
            });
        }
        Ok(self.outcome(g, n)?.contains(i - 1))
    }

    /// A game whose outcome is `target`.
    pub fn outcome_witness(&mut self, target: Outcome, n: PlayerCount) -> Result<GameId> {
        if target.players() != n {
            return Err(Error::InvalidArgument(format!(
                "outcome has {} players, expected {n}",
                target.players()
            )));
        }
        if !target.is_proper() {
            return Err(Error::ImproperOutcome(target.to_string()));
        }
        let nn = n.get();
        if nn == 2 {
            // Only {N} and {P} occur with two players.
            return match target.mask {
                0b01 => self.nim_heap(1),
                0b10 => Ok(self.zero()),
                _ => Err(Error::UnreachableOutcome {
                    outcome: target.to_string(),
                    players: 2,
                }),
            };
        }
        if target.is_empty() {
            let h_opts = (0..=nn - 2)
                .map(|m| {
                    let star = self.nim_heap(1)?;
                    self.n_copies(star, m)
                })
                .collect::<Result<Vec<_>>>()?;
            let h = self.intern(h_opts)?;
            let wh = self.wrap(h)?;
            return self.intern([h, wh]);
        }
        // Unwind until Next is in the target, then wrap back up.
        let mut t = target;
        let mut wraps = 0;
        while !t.has_next() {
            t = t.rotate_back();
            wraps += 1;
        }
        let star = self.nim_heap(1)?;
        let mut opts = Vec::new();
        for j in 1..nn {
            if !t.contains(j) {
                opts.push(self.n_copies(star, j - 1)?);
            }
        }
        let base = self.intern(opts)?;
        self.wrap_times(base, wraps)
    }
}

/// Plain recursive evaluation without memoization, for cross-checks.
pub fn outcome_unmemoized(store: &GameStore, g: GameId, n: PlayerCount) -> Result<Outcome> {
    fn go(store: &GameStore, v: u32, n: usize) -> u64 {
        let kids: Vec<u64> = store
            .raw_children(v)
            .iter()
            .map(|&c| go(store, c, n))
            .collect();
        combine(kids, n)
    }
    let v = store.check(g)?;
    Ok(Outcome::from_mask(go(store, v, n.get()), n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three(s: &str) -> Outcome {
        Outcome::parse(s, PlayerCount::THREE).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let n = PlayerCount::THREE;
        assert_eq!(three("PN"), three("NP"));
        assert_eq!(three("PN").to_string(), "NP");
        assert_eq!(three("-").to_string(), "-");
        assert_eq!(three("NOP"), Outcome::full(n));
        let four = PlayerCount::new(4).unwrap();
        let o = Outcome::parse("NO2", four).unwrap();
        assert_eq!(o.to_string(), "NO2");
        assert!(Outcome::parse("O", four).is_err());
        assert!(Outcome::parse("O3", four).is_err());
        assert!(Outcome::parse("NN", n).is_err());
        assert!(Outcome::parse("X", n).is_err());
    }

    #[test]
    fn rotation_roundtrip() {
        let n = PlayerCount::new(5).unwrap();
        for o in Outcome::all(n) {
            assert_eq!(o.rotate_forward().rotate_back(), o);
        }
    }

    #[test]
    fn seven_small_outcomes() {
        let mut s = GameStore::new();
        let n = PlayerCount::THREE;
        let z = s.zero();
        assert_eq!(s.outcome(z, n).unwrap(), three("OP"));
        let star = s.nim_heap(1).unwrap();
        assert_eq!(s.outcome(star, n).unwrap(), three("PN"));
        let h2 = s.nim_heap(2).unwrap();
        assert_eq!(s.outcome(h2, n).unwrap(), three("N"));
        let w = s.wrap(h2).unwrap();
        assert_eq!(s.outcome(w, n).unwrap(), three("O"));
        let ww = s.wrap(w).unwrap();
        assert_eq!(s.outcome(ww, n).unwrap(), three("P"));
        let g = s.intern([h2, w]).unwrap();
        assert_eq!(s.outcome(g, n).unwrap(), three("-"));
    }

    #[test]
    fn wins_moving_ith_examples() {
        let mut s = GameStore::new();
        let n = PlayerCount::THREE;
        let z = s.zero();
        let star = s.nim_heap(1).unwrap();
        assert!(!s.wins_moving_ith(z, 1, n).unwrap());
        assert!(s.wins_moving_ith(z, 2, n).unwrap());
        assert!(s.wins_moving_ith(star, 1, n).unwrap());
        assert!(s.wins_moving_ith(z, 0, n).is_err());
        assert!(s.wins_moving_ith(z, 4, n).is_err());
    }

    #[test]
    fn copies_of_star_lose_one_seat() {
        let mut s = GameStore::new();
        for nn in 2..=7 {
            let n = PlayerCount::new(nn).unwrap();
            let star = s.nim_heap(1).unwrap();
            for i in 0..nn {
                let g = s.n_copies(star, i).unwrap();
                let expect = Outcome::all_but(&[i], n).unwrap();
                assert_eq!(s.outcome(g, n).unwrap(), expect, "N={nn} i={i}");
            }
        }
    }

    #[test]
    fn witness_examples_six_players() {
        let mut s = GameStore::new();
        let n = PlayerCount::new(6).unwrap();
        let star = s.nim_heap(1).unwrap();
        let c3 = s.n_copies(star, 3).unwrap();
        let c4 = s.n_copies(star, 4).unwrap();
        let expect = s.intern([star, c3, c4]).unwrap();
        let target = Outcome::all_but(&[2, 4, 5], n).unwrap();
        let w = s.outcome_witness(target, n).unwrap();
        assert_eq!(w, expect);
        assert_eq!(s.outcome(w, n).unwrap(), target);

        let target = Outcome::from_seats(&[1, 2, 4], n).unwrap();
        let w = s.outcome_witness(target, n).unwrap();
        assert_eq!(w, s.wrap(expect).unwrap());
        assert_eq!(s.outcome(w, n).unwrap(), target);
    }

    #[test]
    fn witness_for_empty_target() {
        let mut s = GameStore::new();
        let n = PlayerCount::THREE;
        let w = s.outcome_witness(Outcome::empty(n), n).unwrap();
        let z = s.zero();
        let star = s.nim_heap(1).unwrap();
        let h = s.intern([z, star]).unwrap();
        let wh = s.wrap(h).unwrap();
        assert_eq!(s.options(w), vec![h, wh]);
        assert!(s.outcome(w, n).unwrap().is_empty());
    }

    #[test]
    fn witness_rejects_improper() {
        let mut s = GameStore::new();
        let n = PlayerCount::THREE;
        assert!(s.outcome_witness(Outcome::full(n), n).is_err());
        let two = PlayerCount::TWO;
        assert!(s.outcome_witness(Outcome::empty(two), two).is_err());
    }
}
