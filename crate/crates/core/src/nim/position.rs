use std::fmt;

use crate::error::{Error, Result};
use crate::game::{GameId, GameStore, PlayerCount};
use crate::outcome::Outcome;

/// Sorted multiset of positive heap sizes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct NimPosition(Vec<usize>);

impl NimPosition {
    /// Zero heaps are dropped.
    pub fn new(heaps: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = heaps.into_iter().filter(|&h| h > 0).collect();
        v.sort_unstable();
        NimPosition(v)
    }

    /// Whitespace- or comma-separated heap sizes.
    pub fn parse(text: &str) -> Result<Self> {
        let heaps = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad heap size {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(heaps))
    }

    pub fn heaps(&self) -> &[usize] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn join(&self, other: &NimPosition) -> NimPosition {
        Self::new(self.0.iter().chain(&other.0).copied())
    }

    pub fn profile(&self) -> NimProfile {
        let mut p = NimProfile::default();
        for &h in &self.0 {
            match h {
                1 => p.n1 += 1,
                2 => p.n2 += 1,
                _ => p.n3 += 1,
            }
        }
        p
    }

    pub fn game(&self, store: &mut GameStore) -> Result<GameId> {
        let heaps = self
            .0
            .iter()
            .map(|&h| store.nim_heap(h))
            .collect::<Result<Vec<_>>>()?;
        store.sum_all(heaps)
    }

    /// Brute-force outcome through the game store.
    pub fn outcome_engine(&self, store: &mut GameStore, n: PlayerCount) -> Result<Outcome> {
        let g = self.game(store)?;
        store.outcome(g, n)
    }

    /// All positions with at most `max_heaps` heaps of size `1..=max_size`.
    pub fn enumerate(max_heaps: usize, max_size: usize) -> Vec<NimPosition> {
        let mut out = vec![NimPosition::default()];
        let mut frontier = vec![NimPosition::default()];
        for _ in 0..max_heaps {
            let mut next = Vec::new();
            for p in &frontier {
                let min = p.0.last().copied().unwrap_or(1);
                for s in min..=max_size {
                    let mut v = p.0.clone();
                    v.push(s);
                    next.push(NimPosition(v));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }
}

impl fmt::Display for NimPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, h) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "*{h}")?;
        }
        Ok(())
    }
}

/// Counts of heaps of size 1, size 2, and size at least 3.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct NimProfile {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
}

impl std::ops::Add for NimProfile {
    type Output = NimProfile;

    fn add(self, o: NimProfile) -> NimProfile {
        NimProfile::new(self.n1 + o.n1, self.n2 + o.n2, self.n3 + o.n3)
    }
}

impl NimProfile {
    pub fn new(n1: usize, n2: usize, n3: usize) -> Self {
        NimProfile { n1, n2, n3 }
    }

    /// Smallest position with this profile, using `*3` for large heaps.
    pub fn position(self) -> NimPosition {
        let heaps = std::iter::repeat_n(1, self.n1)
            .chain(std::iter::repeat_n(2, self.n2))
            .chain(std::iter::repeat_n(3, self.n3));
        NimPosition::new(heaps)
    }

    pub fn heap_count(self) -> usize {
        self.n1 + self.n2 + self.n3
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing_and_profiles() {
        let p = NimPosition::parse("3 1 0 2,5").unwrap();
        assert_eq!(p.heaps(), &[1, 2, 3, 5]);
        assert_eq!(p.profile(), NimProfile::new(1, 1, 2));
        assert_eq!(p.to_string(), "*1+*2+*3+*5");
        assert!(NimPosition::parse("1 x").is_err());
        assert_eq!(NimPosition::parse("").unwrap().to_string(), "0");
        assert_eq!(NimProfile::new(2, 1, 1).position().heaps(), &[1, 1, 2, 3]);
    }

    #[test]
    fn enumeration_count() {
        // multisets of size <= 5 over 6 values: C(11,5) = 462
        assert_eq!(NimPosition::enumerate(5, 6).len(), 462);
    }

    #[test]
    fn engine_matches_store() {
        let mut s = GameStore::new();
        let n = PlayerCount::THREE;
        let p = NimPosition::new([1, 1, 1]);
        assert_eq!(
            p.outcome_engine(&mut s, n).unwrap(),
            Outcome::parse("OP", n).unwrap()
        );
        let p = NimPosition::new([2, 2, 2]);
        assert!(p.outcome_engine(&mut s, n).unwrap().is_empty());
    }
}
