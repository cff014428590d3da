//! Undetermined depth, absorbing games and revertibility.

use crate::error::{Error, Result};
use crate::game::{GameId, GameStore, PlayerCount};

const UNKNOWN: u32 = u32::MAX;

/// Result of an absorbing query: certification is sufficient, refutation
/// is by pool search, anything else is unknown.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum AbsorbingVerdict {
    Certified,
    Refuted { witness: GameId },
    Unknown { contexts_tried: usize },
}

impl GameStore {
    /// Length of the longest path of undetermined subpositions from `g`.
    pub fn undetermined_depth(&mut self, g: GameId, n: PlayerCount) -> Result<usize> {
        let root = self.check(g)?;
        let nn = n.get();
        self.outcome_raw(root, nn);
        let len = self.len();
        let mut memo = std::mem::take(&mut self.depth_memo[nn]);
        if memo.len() < len {
            memo.resize(len, UNKNOWN);
        }
        if memo[root as usize] == UNKNOWN {
            // children always have smaller indices than their parents
            for s in self.subpositions(g) {
                let v = s.index() as usize;
                if memo[v] != UNKNOWN {
                    continue;
                }
                memo[v] = if self.outcome_memo[nn][v] != 0 {
                    0
                } else {
                    1 + self
                        .raw_children(v as u32)
                        .iter()
                        .map(|&c| memo[c as usize])
                        .max()
                        .unwrap_or(0)
                };
            }
        }
        let d = memo[root as usize] as usize;
        self.depth_memo[nn] = memo;
        Ok(d)
    }

    /// `g ≇ 0` and every option is `(k-1)`-undetermined.
    pub fn is_strongly_undetermined(
        &mut self,
        g: GameId,
        k: usize,
        n: PlayerCount,
    ) -> Result<bool> {
        if k < 2 {
            return Err(Error::InvalidArgument(
                "strong undeterminedness needs k >= 2".into(),
            ));
        }
        if self.is_zero(g) {
            return Ok(false);
        }
        for c in self.options(g) {
            if self.undetermined_depth(c, n)? < k - 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Sufficient condition: strongly `(N-1)`-undetermined.
    pub fn absorbing_certify(&mut self, g: GameId, n: PlayerCount) -> Result<bool> {
        n.require_more_than_two("absorbing_certify")?;
        self.is_strongly_undetermined(g, n.get() - 1, n)
    }

    /// First context in `pool` whose sum with `g` is not undetermined.
    pub fn absorbing_refute(
        &mut self,
        g: GameId,
        pool: &[GameId],
        n: PlayerCount,
    ) -> Result<Option<GameId>> {
        for &x in pool {
            let s = self.sum(g, x)?;
            if !self.outcome(s, n)?.is_empty() {
                return Ok(Some(x));
            }
        }
        Ok(None)
    }

    pub fn absorbing(
        &mut self,
        g: GameId,
        pool: &[GameId],
        n: PlayerCount,
    ) -> Result<AbsorbingVerdict> {
        if self.absorbing_certify(g, n)? {
            return Ok(AbsorbingVerdict::Certified);
        }
        Ok(match self.absorbing_refute(g, pool, n)? {
            Some(witness) => AbsorbingVerdict::Refuted { witness },
            None => AbsorbingVerdict::Unknown {
                contexts_tried: pool.len(),
            },
        })
    }

    /// The multiple of an undetermined `g` that the corollaries make
    /// absorbing: `⌊N/2+2⌋·g` when `g` is `(N-2)`-undetermined, else
    /// `(N-2)⌊N/2+2⌋·g`.
    pub fn absorbing_from_undetermined(&mut self, g: GameId, n: PlayerCount) -> Result<GameId> {
        n.require_more_than_two("absorbing_from_undetermined")?;
        let depth = self.undetermined_depth(g, n)?;
        if depth == 0 {
            return Err(Error::NotUndetermined);
        }
        let f = n.get() / 2 + 2;
        let k = if depth >= n.get() - 2 {
            f
        } else {
            (n.get() - 2) * f
        };
        self.n_copies(g, k)
    }

    /// `h` is revertible to `g` under structural identity.
    pub fn revertible(&self, h: GameId, g: GameId, n: PlayerCount) -> bool {
        self.revertible_with(h, g, n, |a, b| a == b)
    }

    /// `h` is revertible to `g` with `eq` as the equality oracle.
    pub fn revertible_with(
        &self,
        h: GameId,
        g: GameId,
        n: PlayerCount,
        mut eq: impl FnMut(GameId, GameId) -> bool,
    ) -> bool {
        let g_opts = self.options(g);
        let h_opts = self.options(h);
        if !g_opts.iter().all(|&go| h_opts.iter().any(|&ho| eq(ho, go))) {
            return false;
        }
        for &ho in &h_opts {
            if g_opts.iter().any(|&go| eq(ho, go)) {
                continue;
            }
            let mut layer = vec![ho];
            for _ in 0..n.get() - 1 {
                let mut next: Vec<GameId> = layer.iter().flat_map(|&x| self.options(x)).collect();
                next.sort();
                next.dedup();
                layer = next;
            }
            if !layer.into_iter().any(|x| eq(x, g)) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star2_games(s: &mut GameStore) -> (GameId, GameId) {
        let h2 = s.nim_heap(2).unwrap();
        let w = s.wrap(h2).unwrap();
        let u = s.intern([h2, w]).unwrap();
        (u, s.wrap(u).unwrap())
    }

    #[test]
    fn depth_examples() {
        let n = PlayerCount::THREE;
        let mut s = GameStore::new();
        let (u, wu) = star2_games(&mut s);
        assert_eq!(s.undetermined_depth(u, n).unwrap(), 1);
        assert_eq!(s.undetermined_depth(wu, n).unwrap(), 2);
        let z = s.zero();
        assert_eq!(s.undetermined_depth(z, n).unwrap(), 0);
        assert!(s.is_strongly_undetermined(wu, 2, n).unwrap());
        assert!(!s.is_strongly_undetermined(z, 2, n).unwrap());
        assert!(s.absorbing_certify(wu, n).unwrap());
        assert!(s.absorbing_certify(z, PlayerCount::TWO).is_err());
    }

    #[test]
    fn two_heap_depth_family() {
        let mut s = GameStore::new();
        for nn in 3..=6 {
            let n = PlayerCount::new(nn).unwrap();
            let a = s.nim_heap(nn - 1).unwrap();
            let b = s.nim_heap(2 * nn - 3).unwrap();
            let g = s.sum(a, b).unwrap();
            assert_eq!(s.undetermined_depth(g, n).unwrap(), nn - 2, "N={nn}");
        }
    }

    #[test]
    fn absorbing_multiples() {
        let n = PlayerCount::THREE;
        let mut s = GameStore::new();
        let (u, _) = star2_games(&mut s);
        let a = s.absorbing_from_undetermined(u, n).unwrap();
        assert_eq!(a, s.n_copies(u, 3).unwrap());
        assert!(s.absorbing_certify(a, n).unwrap());
        let star = s.nim_heap(1).unwrap();
        assert!(matches!(
            s.absorbing_from_undetermined(star, n),
            Err(Error::NotUndetermined)
        ));
    }

    #[test]
    fn revertible_examples() {
        let n = PlayerCount::THREE;
        let mut s = GameStore::new();
        let star = s.nim_heap(1).unwrap();
        let three = s.n_copies(star, 3).unwrap();
        let z = s.zero();
        assert!(s.revertible(three, z, n));
        assert!(!s.revertible(star, z, n));
        assert!(s.revertible(three, three, n));
    }
}
