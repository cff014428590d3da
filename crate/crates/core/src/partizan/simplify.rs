//! Option simplifications that preserve `=_p` for one player only. Neither
//! preserves outcomes in general, and the two constructions at the bottom
//! show games where the outcome changes.

use crate::error::{Error, Result};
use crate::partizan::store::{PGameId, PartizanStore, Player};

impl PartizanStore {
    /// Removes `p`'s option at index `drop` given that it is proven
    /// `≤_p` the option at index `keep`. Indices refer to [`Self::slot`].
    pub fn delete_dominated(
        &mut self,
        g: PGameId,
        p: Player,
        keep: usize,
        drop: usize,
    ) -> Result<PGameId> {
        let mut slots = self.slots(g);
        let opts = &slots[p.0];
        if keep >= opts.len() || drop >= opts.len() || keep == drop {
            return Err(Error::InvalidArgument(format!(
                "option indices {keep}, {drop} invalid for {} options",
                opts.len()
            )));
        }
        let (kept, dropped) = (opts[keep], opts[drop]);
        if self.leq_sufficient(dropped, kept, p)?.is_none() {
            return Err(Error::Unproven(
                "dropped option is not proven dominated".into(),
            ));
        }
        slots[p.0].remove(drop);
        self.intern(slots)
    }

    /// Bypasses `p`'s option `chain[0]` through the follower `chain[N-1]`,
    /// where `chain[k]` is an option of `chain[k-1]` for the `k`-th player
    /// after `p`. Requires `follower ≤_p g` to be proven.
    pub fn bypass_reversible(
        &mut self,
        g: PGameId,
        p: Player,
        chain: &[PGameId],
    ) -> Result<PGameId> {
        let n = self.players();
        if chain.len() != n.get() {
            return Err(Error::InvalidArgument(format!(
                "chain must have {n} games, got {}",
                chain.len()
            )));
        }
        if !self.slot(g, p).contains(&chain[0]) {
            return Err(Error::InvalidArgument(
                "chain does not start at an option of g".into(),
            ));
        }
        for k in 1..n.get() {
            if !self.slot(chain[k - 1], p.after(k, n)).contains(&chain[k]) {
                return Err(Error::InvalidArgument(format!("chain breaks at step {k}")));
            }
        }
        let follower = chain[n.get() - 1];
        if self.leq_sufficient(follower, g, p)?.is_none() {
            return Err(Error::Unproven("follower is not proven <= g".into()));
        }
        let mut slots = self.slots(g);
        slots[p.0].retain(|&x| x != chain[0]);
        slots[p.0].extend(self.slot(follower, p));
        self.intern(slots)
    }
}

/// A game where deleting a dominated Left option keeps `=_L` but changes
/// the outcome of the Left restriction.
#[derive(Clone, Debug)]
pub struct DominatedExample {
    pub dominated: PGameId,
    pub dominating: PGameId,
    /// `{dominated, dominating | ⋯ |}`.
    pub full: PGameId,
    /// `{dominating | ⋯ |}`.
    pub reduced: PGameId,
}

/// Each player moves once from Center_1 around to Left; then the dominated
/// line ends with a move for Center_1 and the dominating one with another
/// move for Left.
pub fn dominated_example(store: &mut PartizanStore) -> Result<DominatedExample> {
    let n = store.players();
    n.require_more_than_two("dominated_example")?;
    let l = Player::LEFT;
    let line = |store: &mut PartizanStore, last: Player| -> Result<PGameId> {
        let mut g = store.one(last)?;
        // Built inside out: Left, Right, ..., Center_1.
        for k in 0..n.get() {
            let mover = l.before(k, n);
            g = store.single_slot(mover, vec![g])?;
        }
        Ok(g)
    };
    let dominated = line(store, Player(1))?;
    let dominating = line(store, l)?;
    let full = store.single_slot(l, vec![dominated, dominating])?;
    let reduced = store.single_slot(l, vec![dominating])?;
    Ok(DominatedExample {
        dominated,
        dominating,
        full,
        reduced,
    })
}

/// A game `G = {H|⋯|}` whose Left option reverts through 0.
#[derive(Clone, Debug)]
pub struct ReversibleExample {
    pub game: PGameId,
    /// `[H, 1_{C_2}+⋯+1_R, …, 1_R, 0]`.
    pub chain: Vec<PGameId>,
}

pub fn reversible_example(store: &mut PartizanStore) -> Result<ReversibleExample> {
    let n = store.players();
    n.require_more_than_two("reversible_example")?;
    let nn = n.get();
    // tails[k] = 1_{C_k} + ... + 1_R for k in 2..N, and tails[N] = 0.
    let mut tails = vec![store.zero(); nn + 1];
    for k in (2..nn).rev() {
        let one = store.one(Player(k))?;
        tails[k] = store.sum(one, tails[k + 1])?;
    }
    let z = store.zero();
    let h = store.single_slot(Player(1), vec![z, tails[2]])?;
    let game = store.single_slot(Player::LEFT, vec![h])?;
    let mut chain = vec![h];
    chain.extend_from_slice(&tails[2..=nn]);
    Ok(ReversibleExample { game, chain })
}
