//! The compact impartial notation: `*GHJ` is `{*G,*H,*J}`, a `#` subscript
//! wraps, and a digit subscript adds a nim-heap.
//!
//! ```text
//! game    := '0' | '*' elem*
//! elem    := base sub*
//! base    := DIGIT | '(' elem+ ')'
//! sub     := '_' subchar | '_{' subchar+ '}'
//! subchar := '#' | DIGIT
//! ```

use crate::error::{Error, Result};
use crate::game::{GameId, GameStore};

pub fn parse_compact(store: &mut GameStore, text: &str) -> Result<GameId> {
    let text = text.trim();
    if text == "0" {
        return Ok(store.zero());
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        store,
    };
    p.expect(b'*')?;
    if p.at_end() {
        return p.store.nim_heap(1);
    }
    let elems = p.elems()?;
    if !p.at_end() {
        return Err(Error::parse(p.pos, "unexpected character"));
    }
    p.collect(elems)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    store: &'a mut GameStore,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn collect(&mut self, elems: Vec<GameId>) -> Result<GameId> {
        if elems.len() == 1 {
            Ok(elems[0])
        } else {
            self.store.intern(elems)
        }
    }

    fn elems(&mut self) -> Result<Vec<GameId>> {
        let mut out = Vec::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == b'(') {
            out.push(self.elem()?);
        }
        if out.is_empty() {
            return Err(Error::parse(self.pos, "expected a digit or '('"));
        }
        Ok(out)
    }

    fn elem(&mut self) -> Result<GameId> {
        let mut g = self.base()?;
        while self.peek() == Some(b'_') {
            self.pos += 1;
            if self.peek() == Some(b'{') {
                self.pos += 1;
                let start = self.pos;
                while self.peek() != Some(b'}') {
                    if self.at_end() {
                        return Err(Error::parse(self.pos, "unclosed '{'"));
                    }
                    g = self.subchar(g)?;
                }
                if self.pos == start {
                    return Err(Error::parse(self.pos, "empty subscript"));
                }
                self.pos += 1;
            } else {
                g = self.subchar(g)?;
            }
        }
        Ok(g)
    }

    fn subchar(&mut self, g: GameId) -> Result<GameId> {
        match self.peek() {
            Some(b'#') => {
                self.pos += 1;
                self.store.wrap(g)
            }
            Some(c) if c.is_ascii_digit() => {
                self.pos += 1;
                let heap = self.store.nim_heap((c - b'0') as usize)?;
                self.store.sum(g, heap)
            }
            _ => Err(Error::parse(
                self.pos,
                "expected '#' or a digit in subscript",
            )),
        }
    }

    fn base(&mut self) -> Result<GameId> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                self.pos += 1;
                self.store.nim_heap((c - b'0') as usize)
            }
            Some(b'(') => {
                self.pos += 1;
                let elems = self.elems()?;
                self.expect(b')')?;
                self.collect(elems)
            }
            _ => Err(Error::parse(self.pos, "expected a digit or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn appendix_examples() {
        let mut s = GameStore::new();
        let h2 = s.nim_heap(2).unwrap();
        let h3 = s.nim_heap(3).unwrap();
        let z = s.zero();
        let w2 = s.wrap(h2).unwrap();

        let g = parse_compact(&mut s, "*2_#320").unwrap();
        assert_eq!(g, s.intern([w2, h3, h2, z]).unwrap());

        let g = parse_compact(&mut s, "*2_{##2}").unwrap();
        let ww2 = s.wrap(w2).unwrap();
        assert_eq!(g, s.sum(ww2, h2).unwrap());

        let g = parse_compact(&mut s, "*2_{2##}").unwrap();
        let d = s.sum(h2, h2).unwrap();
        let expect = s.wrap_times(d, 2).unwrap();
        assert_eq!(g, expect);

        let g = parse_compact(&mut s, "*2_#2").unwrap();
        assert_eq!(g, s.intern([w2, h2]).unwrap());
    }

    #[test]
    fn digits_are_separate_elems() {
        let mut s = GameStore::new();
        let star = s.nim_heap(1).unwrap();
        let h2 = s.nim_heap(2).unwrap();
        let g = parse_compact(&mut s, "*21").unwrap();
        assert_eq!(g, s.intern([h2, star]).unwrap());
        let g = parse_compact(&mut s, "*2_1").unwrap();
        assert_eq!(g, s.sum(h2, star).unwrap());
    }

    #[test]
    fn grouping_and_sets() {
        let mut s = GameStore::new();
        let star = s.nim_heap(1).unwrap();
        let h2 = s.nim_heap(2).unwrap();
        assert_eq!(parse_compact(&mut s, "*").unwrap(), star);
        assert_eq!(parse_compact(&mut s, "0").unwrap(), s.zero());
        assert_eq!(parse_compact(&mut s, "*(2)").unwrap(), h2);
        let w = parse_compact(&mut s, "*(1_#1)").unwrap();
        let ws = s.wrap(star).unwrap();
        assert_eq!(w, s.intern([ws, star]).unwrap());
        // A one-elem group followed by a subscript applies to the group.
        let g = parse_compact(&mut s, "*(2_1)_#").unwrap();
        let inner = s.sum(h2, star).unwrap();
        assert_eq!(g, s.wrap(inner).unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        let mut s = GameStore::new();
        for (text, pos) in [
            ("2", 0),
            ("*2_", 3),
            ("*(2", 3),
            ("*2_{}", 4),
            ("*2x", 2),
            ("*_1", 1),
        ] {
            match parse_compact(&mut s, text) {
                Err(Error::Parse { pos: p, .. }) => assert_eq!(p, pos, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }
}
