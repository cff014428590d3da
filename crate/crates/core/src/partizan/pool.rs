//! Small partizan games used as refutation contexts.

use crate::error::Result;
use crate::partizan::store::{PGameId, PartizanStore, Player};

impl PartizanStore {
    /// Every game whose option set for each player `q` is a subset of
    /// `{0, *, 1_q}`, in ascending handle order (`8^N` games).
    pub fn enumerate_small(&mut self) -> Result<Vec<PGameId>> {
        let n = self.players();
        let star = self.games_mut().nim_heap(1)?;
        let pstar = self.embed(star)?;
        let z = self.zero();
        let menus = Player::all(n)
            .map(|q| Ok(vec![z, pstar, self.one(q)?]))
            .collect::<Result<Vec<_>>>()?;
        let total = 1usize << (3 * n.get());
        let mut out = Vec::with_capacity(total);
        for code in 0..total {
            let slots = (0..n.get())
                .map(|q| {
                    let bits = code >> (3 * q) & 7;
                    (0..3)
                        .filter(|b| bits >> b & 1 == 1)
                        .map(|b| menus[q][b])
                        .collect()
                })
                .collect();
            out.push(self.intern(slots)?);
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::PlayerCount;

    #[test]
    fn small_pool_size() {
        let mut s = PartizanStore::new(PlayerCount::THREE);
        let pool = s.enumerate_small().unwrap();
        assert_eq!(pool.len(), 512);
        assert_eq!(pool[0], s.zero());
        let mut s = PartizanStore::new(PlayerCount::TWO);
        assert_eq!(s.enumerate_small().unwrap().len(), 64);
    }
}
