//! Law checkers over game pools. Each returns every counterexample found.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{GameId, GameStore, PlayerCount};
use crate::notation::print_game;
use crate::outcome::Outcome;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Law {
    /// `o(g) ≠` all players.
    ProperSubset,
    /// Outcomes of `{g}` are those of `g` rotated one seat.
    WrapCycle,
    /// `N ∉ o(h)` implies `o(g+h) ⊆ o(g)`.
    NextGeneration,
    /// `O_m ∉ o(g_i)` for all `k` summands implies `O_{km} ∉ o(Σ g_i)`.
    OtherProcreation { k: usize, m: usize },
    /// `N ∉ o(N·g)`.
    Mirror,
    /// Undetermined depths add under sums.
    DepthAdditivity,
    /// `h` revertible to `g` implies `o(h+x) ⊆ o(g+x)`.
    RevertInclusion,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Law::ProperSubset => f.write_str("proper_subset"),
            Law::WrapCycle => f.write_str("wrap_cycle"),
            Law::NextGeneration => f.write_str("next_generation"),
            Law::OtherProcreation { k, m } => write!(f, "other_procreation({k},{m})"),
            Law::Mirror => f.write_str("mirror"),
            Law::DepthAdditivity => f.write_str("depth_additivity"),
            Law::RevertInclusion => f.write_str("revert_inclusion"),
        }
    }
}

impl Law {
    pub fn parse(text: &str) -> Result<Law> {
        let t = text.trim();
        Ok(match t {
            "proper_subset" => Law::ProperSubset,
            "wrap_cycle" => Law::WrapCycle,
            "next_generation" => Law::NextGeneration,
            "mirror" => Law::Mirror,
            "depth_additivity" => Law::DepthAdditivity,
            "revert_inclusion" => Law::RevertInclusion,
            _ => {
                let args = t
                    .strip_prefix("other_procreation(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown law {t:?}")))?;
                let nums: Vec<usize> = args
                    .split(',')
                    .map(|a| a.trim().parse())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::InvalidArgument(format!("bad law arguments {args:?}")))?;
                match nums[..] {
                    [k, m] if k >= 1 => Law::OtherProcreation { k, m },
                    _ => {
                        return Err(Error::InvalidArgument(format!(
                            "bad law arguments {args:?}"
                        )))
                    }
                }
            }
        })
    }
}

/// One counterexample, serialized as a JSON line.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    pub law: String,
    pub tuple: Vec<String>,
    pub expected: String,
    pub got: String,
}

fn violation(
    store: &GameStore,
    law: Law,
    tuple: &[GameId],
    expected: String,
    got: String,
) -> Violation {
    Violation {
        law: law.to_string(),
        tuple: tuple.iter().map(|&g| print_game(store, g)).collect(),
        expected,
        got,
    }
}

/// Runs `law` over tuples drawn from `games` (as multisets). Only
/// `RevertInclusion` uses `contexts`.
pub fn check_law(
    store: &mut GameStore,
    law: Law,
    games: &[GameId],
    contexts: &[GameId],
    n: PlayerCount,
) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    match law {
        Law::ProperSubset => {
            for &g in games {
                let o = store.outcome(g, n)?;
                if !o.is_proper() {
                    out.push(violation(
                        store,
                        law,
                        &[g],
                        "proper subset".into(),
                        o.to_string(),
                    ));
                }
            }
        }
        Law::WrapCycle => {
            for &g in games {
                let o = store.outcome(g, n)?;
                let w = store.wrap(g)?;
                let ow = store.outcome(w, n)?;
                if ow != o.rotate_forward() {
                    out.push(violation(
                        store,
                        law,
                        &[g],
                        o.rotate_forward().to_string(),
                        ow.to_string(),
                    ));
                }
            }
        }
        Law::NextGeneration => {
            for &h in games {
                if store.outcome(h, n)?.has_next() {
                    continue;
                }
                for &g in games {
                    let og = store.outcome(g, n)?;
                    let s = store.sum(g, h)?;
                    let os = store.outcome(s, n)?;
                    if !os.is_subset(og) {
                        out.push(violation(
                            store,
                            law,
                            &[g, h],
                            format!("subset of {og}"),
                            os.to_string(),
                        ));
                    }
                }
            }
        }
        Law::OtherProcreation { k, m } => {
            if k == 0 || n.get() <= k * m {
                return Err(Error::InvalidArgument(format!(
                    "other_procreation({k},{m}) needs k >= 1 and N > km"
                )));
            }
            let mut eligible = Vec::new();
            for &g in games {
                if !store.outcome(g, n)?.contains(m) {
                    eligible.push(g);
                }
            }
            let mut tuple = Vec::with_capacity(k);
            procreation_rec(
                store,
                law,
                &eligible,
                0,
                store.zero(),
                k,
                k * m,
                n,
                &mut tuple,
                &mut out,
            )?;
        }
        Law::Mirror => {
            for &g in games {
                let s = store.n_copies(g, n.get())?;
                let o = store.outcome(s, n)?;
                if o.has_next() {
                    out.push(violation(store, law, &[g], "no N".into(), o.to_string()));
                }
            }
        }
        Law::DepthAdditivity => {
            let mut undet = Vec::new();
            for &g in games {
                let d = store.undetermined_depth(g, n)?;
                if d > 0 {
                    undet.push((g, d));
                }
            }
            for (i, &(g, dg)) in undet.iter().enumerate() {
                for &(h, dh) in &undet[i..] {
                    let s = store.sum(g, h)?;
                    let ds = store.undetermined_depth(s, n)?;
                    if ds < dg + dh {
                        out.push(violation(
                            store,
                            law,
                            &[g, h],
                            format!(">= {}", dg + dh),
                            ds.to_string(),
                        ));
                    }
                }
            }
        }
        Law::RevertInclusion => {
            for &h in games {
                for &g in games {
                    if g == h || !store.revertible(h, g, n) {
                        continue;
                    }
                    for &x in contexts {
                        let hx = store.sum(h, x)?;
                        let gx = store.sum(g, x)?;
                        let oh = store.outcome(hx, n)?;
                        let og = store.outcome(gx, n)?;
                        if !oh.is_subset(og) {
                            out.push(violation(
                                store,
                                law,
                                &[h, g, x],
                                format!("subset of {og}"),
                                oh.to_string(),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn procreation_rec(
    store: &mut GameStore,
    law: Law,
    eligible: &[GameId],
    start: usize,
    acc: GameId,
    left: usize,
    seat: usize,
    n: PlayerCount,
    tuple: &mut Vec<GameId>,
    out: &mut Vec<Violation>,
) -> Result<()> {
    if left == 0 {
        let o = store.outcome(acc, n)?;
        if o.contains(seat) {
            let expected = format!("seat {seat} absent");
            out.push(violation(store, law, tuple, expected, o.to_string()));
        }
        return Ok(());
    }
    for i in start..eligible.len() {
        let next = store.sum(acc, eligible[i])?;
        tuple.push(eligible[i]);
        procreation_rec(store, law, eligible, i, next, left - 1, seat, n, tuple, out)?;
        tuple.pop();
    }
    Ok(())
}

/// First context separating `g` and `h` by full outcome. `None` means only
/// that `contexts` did not refute equality.
pub fn equal_refute(
    store: &mut GameStore,
    g: GameId,
    h: GameId,
    contexts: &[GameId],
    n: PlayerCount,
) -> Result<Option<GameId>> {
    if g == h {
        return Ok(None);
    }
    for &x in contexts {
        let gx = store.sum(g, x)?;
        let hx = store.sum(h, x)?;
        if store.outcome(gx, n)? != store.outcome(hx, n)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Three-player games with outcome exactly `N` whose treble contains `P`.
pub fn search_trebling(store: &mut GameStore, games: &[GameId]) -> Result<Vec<GameId>> {
    let n = PlayerCount::THREE;
    let target = Outcome::from_seats(&[0], n)?;
    let mut found = Vec::new();
    for &g in games {
        if store.outcome(g, n)? != target {
            continue;
        }
        let t = store.n_copies(g, 3)?;
        if store.outcome(t, n)?.has_previous() {
            found.push(g);
        }
    }
    Ok(found)
}

/// Allowed three-player outcomes of `G+H` from the outcomes of the
/// summands, derived from the two sum theorems: `N ∉ o(H)` bounds the sum
/// by `o(G)` (and symmetrically), and `O` missing from both removes `P`.
pub fn sum_bound3(a: Outcome, b: Outcome) -> Result<Outcome> {
    let n = a.players();
    if n != PlayerCount::THREE || b.players() != n {
        return Err(Error::InvalidArgument(
            "sum bounds are three-player only".into(),
        ));
    }
    let mut bound = Outcome::full(n);
    if !b.has_next() {
        bound = bound.intersect(a);
    }
    if !a.has_next() {
        bound = bound.intersect(b);
    }
    if !a.contains(1) && !b.contains(1) {
        bound = bound.without(2)?;
    }
    Ok(bound)
}

/// Whether `s` is a possible outcome of a sum with summand outcomes `a`, `b`.
pub fn sum_allowed3(a: Outcome, b: Outcome, s: Outcome) -> Result<bool> {
    Ok(s.is_proper() && s.is_subset(sum_bound3(a, b)?))
}
