//! Verbose printers. Output always parses back with [`super::parse_expr`].

use crate::game::{GameId, GameStore};
use crate::partizan::{PGameId, PartizanStore, Player};

/// `0`, `*`, `*n` for nim-heaps, otherwise `{a,b,...}` with options in
/// descending handle order.
pub fn print_game(store: &GameStore, g: GameId) -> String {
    let mut out = String::new();
    write_game(store, g, &mut out);
    out
}

fn write_game(store: &GameStore, g: GameId, out: &mut String) {
    match store.heap_size(g) {
        Some(0) => out.push('0'),
        Some(1) => out.push('*'),
        Some(n) => {
            out.push('*');
            out.push_str(&n.to_string());
        }
        None => {
            out.push('{');
            for (i, c) in store.options(g).into_iter().rev().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_game(store, c, out);
            }
            out.push('}');
        }
    }
}

/// Bar form `{L-options|C1-options|...|R-options}`. Options that are
/// impartial games embedded in every slot print in impartial form.
pub fn print_pgame(store: &PartizanStore, g: PGameId) -> String {
    let mut out = String::new();
    write_slots(store, g, &mut out);
    out
}

fn write_slots(store: &PartizanStore, g: PGameId, out: &mut String) {
    out.push('{');
    for p in Player::all(store.players()) {
        if p.0 > 0 {
            out.push('|');
        }
        for (i, c) in store.slot(g, p).into_iter().rev().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write_option(store, c, out);
        }
    }
    out.push('}');
}

fn write_option(store: &PartizanStore, g: PGameId, out: &mut String) {
    match store.find_impartial(g) {
        Some(imp) => write_game(store.games(), imp, out),
        None => write_slots(store, g, out),
    }
}

impl PartizanStore {
    /// The impartial game `g` embeds, if every slot of every subposition
    /// holds the same options and the impartial game is already interned.
    pub fn find_impartial(&self, g: PGameId) -> Option<GameId> {
        let slots = self.slots(g);
        if slots.windows(2).any(|w| w[0] != w[1]) {
            return None;
        }
        let kids = slots[0]
            .iter()
            .map(|&c| self.find_impartial(c))
            .collect::<Option<Vec<_>>>()?;
        self.games().find(kids)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::PlayerCount;

    #[test]
    fn impartial_printing() {
        let mut s = GameStore::new();
        let z = s.zero();
        assert_eq!(print_game(&s, z), "0");
        let h3 = s.nim_heap(3).unwrap();
        assert_eq!(print_game(&s, h3), "*3");
        let h2 = s.nim_heap(2).unwrap();
        let w = s.wrap(h2).unwrap();
        let g = s.intern([w, h2]).unwrap();
        assert_eq!(print_game(&s, g), "{{*2},*2}");
        let star = s.nim_heap(1).unwrap();
        let ss = s.sum(star, star).unwrap();
        assert_eq!(print_game(&s, ss), "{*}");
        let h12 = s.nim_heap(12).unwrap();
        assert_eq!(print_game(&s, h12), "*12");
    }

    #[test]
    fn partizan_printing() {
        let n = PlayerCount::THREE;
        let mut s = PartizanStore::new(n);
        assert_eq!(print_pgame(&s, s.zero()), "{||}");
        let one_l = s.one(Player::LEFT).unwrap();
        assert_eq!(print_pgame(&s, one_l), "{0||}");
        let star = s.games_mut().nim_heap(1).unwrap();
        let pstar = s.embed(star).unwrap();
        let g = s.single_slot(Player(1), vec![pstar, one_l]).unwrap();
        let text = print_pgame(&s, g);
        assert!(text == "{|*,{0||}|}" || text == "{|{0||},*|}", "{text}");
    }
}
