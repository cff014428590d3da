//! Finite checks of the periodicity and stability hypotheses, and bounded
//! searches for the open Nim questions. Results only ever hold up to the
//! horizon that was checked.

use crate::error::{Error, Result};
use crate::game::{GameId, GameStore, PlayerCount};
use crate::nim::position::NimPosition;
use crate::outcome::Outcome;

#[derive(Clone, Debug)]
pub struct PeriodicityReport {
    /// `o(H) = o(N·*+H)` for every subposition `H`.
    pub hypothesis: bool,
    pub failing_subposition: Option<GameId>,
    /// First `k <= prefix` with `o(k·*+g) ≠ o((k mod N)·*+g)`.
    pub first_mismatch: Option<usize>,
    /// `o(k·*+g)` for `k < N`.
    pub sequence: Vec<Outcome>,
}

impl PeriodicityReport {
    pub fn holds(&self) -> bool {
        self.hypothesis && self.first_mismatch.is_none()
    }
}

pub fn check_n_periodicity(
    store: &mut GameStore,
    g: GameId,
    n: PlayerCount,
    prefix: usize,
) -> Result<PeriodicityReport> {
    let nn = n.get();
    if prefix < 2 * nn {
        return Err(Error::InvalidArgument(format!(
            "prefix must be at least {}",
            2 * nn
        )));
    }
    let star = store.nim_heap(1)?;
    let n_stars = store.n_copies(star, nn)?;
    let mut failing = None;
    for h in store.subpositions(g) {
        let shifted = store.sum(h, n_stars)?;
        if store.outcome(h, n)? != store.outcome(shifted, n)? {
            failing = Some(h);
            break;
        }
    }
    let mut seq = Vec::with_capacity(prefix + 1);
    let mut cur = g;
    for _ in 0..=prefix {
        seq.push(store.outcome(cur, n)?);
        cur = store.sum(cur, star)?;
    }
    let first_mismatch = (0..=prefix).find(|&k| seq[k] != seq[k % nn]);
    seq.truncate(nn);
    Ok(PeriodicityReport {
        hypothesis: failing.is_none(),
        failing_subposition: failing,
        first_mismatch,
        sequence: seq,
    })
}

#[derive(Clone, Debug)]
pub struct StabilityReport {
    /// `o(H+*(N+1)) = o(H+*N)` for every subposition `H`.
    pub hypothesis: bool,
    pub failing_subposition: Option<GameId>,
    /// First `m` in `N..=horizon` with `o(g+*m) ≠ o(g+*N)`.
    pub first_mismatch: Option<usize>,
    pub stable: Outcome,
}

impl StabilityReport {
    pub fn holds(&self) -> bool {
        self.hypothesis && self.first_mismatch.is_none()
    }
}

pub fn check_n_stability(
    store: &mut GameStore,
    g: GameId,
    n: PlayerCount,
    horizon: usize,
) -> Result<StabilityReport> {
    let nn = n.get();
    if horizon < nn + 2 {
        return Err(Error::InvalidArgument(format!(
            "horizon must be at least {}",
            nn + 2
        )));
    }
    let hn = store.nim_heap(nn)?;
    let hn1 = store.nim_heap(nn + 1)?;
    let mut failing = None;
    for h in store.subpositions(g) {
        let a = store.sum(h, hn)?;
        let b = store.sum(h, hn1)?;
        if store.outcome(a, n)? != store.outcome(b, n)? {
            failing = Some(h);
            break;
        }
    }
    let base = store.sum(g, hn)?;
    let stable = store.outcome(base, n)?;
    let mut first_mismatch = None;
    for m in nn..=horizon {
        let hm = store.nim_heap(m)?;
        let s = store.sum(g, hm)?;
        if store.outcome(s, n)? != stable {
            first_mismatch = Some(m);
            break;
        }
    }
    Ok(StabilityReport {
        hypothesis: failing.is_none(),
        failing_subposition: failing,
        first_mismatch,
        stable,
    })
}

/// Positions among those with at most `max_heaps` heaps of size at most
/// `max_size` whose periodicity check fails at the given prefix.
pub fn search_nim_periodicity(
    store: &mut GameStore,
    n: PlayerCount,
    max_heaps: usize,
    max_size: usize,
    prefix: usize,
) -> Result<Vec<NimPosition>> {
    let mut bad = Vec::new();
    for p in NimPosition::enumerate(max_heaps, max_size) {
        let g = p.game(store)?;
        if !check_n_periodicity(store, g, n, prefix)?.holds() {
            bad.push(p);
        }
    }
    Ok(bad)
}

/// For `N·*2` and `2·*N`, the capped Nim contexts `X` where `o(G+X) ≠ ∅`.
pub fn search_quotient_absorbing(
    store: &mut GameStore,
    n: PlayerCount,
    max_heaps: usize,
    max_size: usize,
) -> Result<Vec<(NimPosition, Vec<NimPosition>)>> {
    n.require_more_than_two("search_quotient_absorbing")?;
    let nn = n.get();
    let candidates = [
        NimPosition::new(std::iter::repeat_n(2, nn)),
        NimPosition::new([nn, nn]),
    ];
    let contexts = NimPosition::enumerate(max_heaps, max_size);
    let mut out = Vec::new();
    for c in candidates {
        let mut escapes = Vec::new();
        for x in &contexts {
            if !c.join(x).outcome_engine(store, n)?.is_empty() {
                escapes.push(x.clone());
            }
        }
        out.push((c, escapes));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn periodicity_examples() {
        let mut s = GameStore::new();
        let three = PlayerCount::THREE;
        let z = s.zero();
        let r = check_n_periodicity(&mut s, z, three, 9).unwrap();
        assert!(r.holds());
        let names: Vec<String> = r.sequence.iter().map(|o| o.to_string()).collect();
        assert_eq!(names, ["OP", "NP", "NO"]);
        let four = PlayerCount::new(4).unwrap();
        let h2 = s.nim_heap(2).unwrap();
        let r = check_n_periodicity(&mut s, h2, four, 12).unwrap();
        assert!(r.holds());
        let expect = [
            Outcome::all_but(&[1, 2], four).unwrap(),
            Outcome::all_but(&[2, 3], four).unwrap(),
            Outcome::all_but(&[3], four).unwrap(),
            Outcome::all_but(&[1], four).unwrap(),
        ];
        assert_eq!(r.sequence, expect);
        assert!(check_n_periodicity(&mut s, h2, four, 5).is_err());
    }

    #[test]
    fn stability_examples() {
        let mut s = GameStore::new();
        let three = PlayerCount::THREE;
        let z = s.zero();
        let r = check_n_stability(&mut s, z, three, 8).unwrap();
        assert!(r.holds());
        assert_eq!(r.stable.to_string(), "N");
        let h2 = s.nim_heap(2).unwrap();
        assert!(check_n_stability(&mut s, h2, three, 8).unwrap().holds());
        let four = PlayerCount::new(4).unwrap();
        let h3 = s.nim_heap(3).unwrap();
        let r = check_n_stability(&mut s, h3, four, 8).unwrap();
        assert!(r.holds());
        assert!(r.stable.is_empty());
    }
}
