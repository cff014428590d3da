//! Enumerated game pools used as tuple sources and context universes.

use crate::error::{Error, Result};
use crate::game::{GameId, GameStore};

/// Pool games, simplest first (see [`simplest_first`]). `base` holds the
/// generators, `games` adds one wrap of each generator and the pairwise sums.
#[derive(Clone, Debug, Default)]
pub struct GamePool {
    pub base: Vec<GameId>,
    pub games: Vec<GameId>,
    pub truncated: bool,
}

impl GamePool {
    pub fn from_games(store: &GameStore, mut games: Vec<GameId>) -> Self {
        simplest_first(store, &mut games);
        GamePool {
            base: games.clone(),
            games,
            truncated: false,
        }
    }

    pub fn len(&self) -> usize {
        self.games.len()
    }

    pub fn is_empty(&self) -> bool {
        self.games.is_empty()
    }
}

/// Sorts by birthday, then number of subpositions, then id, and drops
/// duplicates. Searches over a pool report the simplest witness first.
pub fn simplest_first(store: &GameStore, games: &mut Vec<GameId>) {
    games.sort();
    games.dedup();
    games.sort_by_cached_key(|&g| (store.birthday(g), store.subpositions(g).len(), g));
}

/// Exactly the games with birthday at most `day`.
pub fn born_by(store: &mut GameStore, day: usize) -> Result<Vec<GameId>> {
    if day > 3 {
        return Err(Error::InvalidArgument(format!(
            "birthday {day} too large to enumerate (max 3)"
        )));
    }
    let mut games = vec![store.zero()];
    for _ in 0..day {
        let prev = games.clone();
        games.clear();
        for mask in 0u32..(1 << prev.len()) {
            let opts = (0..prev.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| prev[i]);
            games.push(store.intern(opts)?);
        }
    }
    games.sort();
    Ok(games)
}

/// Nim positions with at most `max_heaps` heaps, each of size `1..=max_size`.
pub fn nim_positions(
    store: &mut GameStore,
    max_heaps: usize,
    max_size: usize,
) -> Result<Vec<GameId>> {
    let mut out = vec![store.zero()];
    let mut frontier = vec![(store.zero(), 1usize)];
    for _ in 0..max_heaps {
        let mut next = Vec::new();
        for &(g, min) in &frontier {
            for s in min..=max_size {
                let h = store.nim_heap(s)?;
                let sum = store.sum(g, h)?;
                out.push(sum);
                next.push((sum, s));
            }
        }
        frontier = next;
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Birthday-bounded games plus `seeds`, closed under one wrap and one
/// pairwise sum of generators. Stops early once the store holds `budget`
/// nodes, setting the truncation flag.
pub fn enumerate_games(
    store: &mut GameStore,
    max_birthday: usize,
    seeds: &[GameId],
    budget: usize,
) -> Result<GamePool> {
    let mut base = born_by(store, max_birthday)?;
    for &s in seeds {
        store.check(s)?;
        base.push(s);
    }
    base.sort();
    base.dedup();
    let mut games = base.clone();
    let mut truncated = false;
    for &g in &base {
        games.push(store.wrap(g)?);
    }
    'outer: for (i, &a) in base.iter().enumerate() {
        for &b in &base[i..] {
            if store.len() >= budget {
                truncated = true;
                break 'outer;
            }
            match store.sum(a, b) {
                Ok(s) => games.push(s),
                Err(Error::ResourceLimit { .. }) => {
                    truncated = true;
                    break 'outer;
                }
                Err(e) => return Err(e),
            }
        }
    }
    simplest_first(store, &mut base);
    simplest_first(store, &mut games);
    Ok(GamePool {
        base,
        games,
        truncated,
    })
}

/// Node budget for [`default_pool`].
pub const DEFAULT_POOL_BUDGET: usize = 3_000_000;

/// The appendix games, Nim positions with at most four heaps of size at
/// most 4, and `{{m·*, 0}}` for `m` in `1..=5`.
pub fn default_seeds(store: &mut GameStore) -> Result<Vec<GameId>> {
    let mut seeds = crate::tables::appendix_games(store)?;
    seeds.extend(nim_positions(store, 4, 4)?);
    let star = store.nim_heap(1)?;
    let z = store.zero();
    for m in 1..=5 {
        let ms = store.n_copies(star, m)?;
        let inner = store.intern([ms, z])?;
        seeds.push(store.wrap(inner)?);
    }
    Ok(seeds)
}

/// Birthday-3 games and [`default_seeds`], closed as in [`enumerate_games`].
pub fn default_pool(store: &mut GameStore) -> Result<GamePool> {
    let seeds = default_seeds(store)?;
    enumerate_games(store, 3, &seeds, DEFAULT_POOL_BUDGET)
}
