//! The verbose expression language.
//!
//! ```text
//! expr   := '0' | '*' DIGITS? | '{' body '}' | NAME '(' args ')'
//! body   := list ('|' list)*          (partizan when it has N-1 bars)
//! list   := (expr (',' expr)*)?
//! ```
//!
//! Builders: `sum(a,b,...)`, `copies(k,e)`, `wrap(e)`, `one(P)`, `int(k,P)`,
//! `conj(e)`, `negsum(e)`, `embed(e)`, with players `L`, `C1`..`C{N-2}`, `R`.

use crate::error::{Error, Result};
use crate::game::{GameId, GameStore};
use crate::partizan::{PGameId, PartizanStore, Player};

/// Result of evaluating an expression.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Value {
    Impartial(GameId),
    Partizan(PGameId),
}

enum Ctx<'a> {
    Impartial(&'a mut GameStore),
    Partizan(&'a mut PartizanStore),
}

impl Ctx<'_> {
    fn games(&mut self) -> &mut GameStore {
        match self {
            Ctx::Impartial(s) => s,
            Ctx::Partizan(s) => s.games_mut(),
        }
    }

    fn partizan(&mut self, pos: usize) -> Result<&mut PartizanStore> {
        match self {
            Ctx::Partizan(s) => Ok(s),
            Ctx::Impartial(_) => Err(Error::parse(
                pos,
                "partizan expression in impartial context",
            )),
        }
    }
}

/// Parses an impartial-only expression.
pub fn parse_impartial(store: &mut GameStore, text: &str) -> Result<GameId> {
    let mut p = Parser::new(Ctx::Impartial(store), text);
    match p.top()? {
        Value::Impartial(g) => Ok(g),
        Value::Partizan(_) => unreachable!("impartial context yields impartial values"),
    }
}

/// Parses any expression; partizan literals must have `N-1` bars.
pub fn parse_expr(store: &mut PartizanStore, text: &str) -> Result<Value> {
    Parser::new(Ctx::Partizan(store), text).top()
}

/// Parses an expression and embeds impartial results.
pub fn parse_partizan(store: &mut PartizanStore, text: &str) -> Result<PGameId> {
    match parse_expr(store, text)? {
        Value::Partizan(g) => Ok(g),
        Value::Impartial(g) => store.embed(g),
    }
}

struct Parser<'a> {
    ctx: Ctx<'a>,
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ctx: Ctx<'a>, text: &'a str) -> Self {
        Parser {
            ctx,
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn top(&mut self) -> Result<Value> {
        let v = self.expr()?;
        self.skip_ws();
        if self.pos < self.src.len() {
            return Err(Error::parse(self.pos, "trailing input"));
        }
        Ok(v)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
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

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::parse(start, "number too large"))
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn player(&mut self) -> Result<Player> {
        let pos = self.pos;
        let name = self.ident();
        let n = self.ctx.partizan(pos)?.players();
        Player::parse(&name, n).map_err(|_| Error::parse(pos, format!("unknown player {name:?}")))
    }

    fn as_partizan(&mut self, v: Value, pos: usize) -> Result<PGameId> {
        match v {
            Value::Partizan(g) => Ok(g),
            Value::Impartial(g) => self.ctx.partizan(pos)?.embed(g),
        }
    }

    fn impartial(&self, v: Value, pos: usize) -> Result<GameId> {
        match v {
            Value::Impartial(g) => Ok(g),
            Value::Partizan(_) => Err(Error::parse(pos, "expected an impartial game")),
        }
    }

    /// Terms joined by infix `+`, which is shorthand for `sum`.
    fn expr(&mut self) -> Result<Value> {
        self.skip_ws();
        let pos = self.pos;
        let first = self.term()?;
        if self.peek() != Some(b'+') {
            return Ok(first);
        }
        let mut terms = vec![(first, pos)];
        while self.peek() == Some(b'+') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            terms.push((self.term()?, at));
        }
        self.sum_values(terms, pos)
    }

    fn sum_values(&mut self, args: Vec<(Value, usize)>, pos: usize) -> Result<Value> {
        if args.iter().all(|(v, _)| matches!(v, Value::Impartial(_))) {
            let games = args
                .into_iter()
                .map(|(v, p)| self.impartial(v, p))
                .collect::<Result<Vec<_>>>()?;
            Ok(Value::Impartial(self.ctx.games().sum_all(games)?))
        } else {
            let mut games = Vec::new();
            for (v, p) in args {
                games.push(self.as_partizan(v, p)?);
            }
            Ok(Value::Partizan(self.ctx.partizan(pos)?.sum_all(games)?))
        }
    }

    fn term(&mut self) -> Result<Value> {
        let pos = self.pos;
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(Value::Impartial(self.ctx.games().zero()))
            }
            Some(b'*') => {
                self.pos += 1;
                let n = if matches!(self.src.get(self.pos), Some(c) if c.is_ascii_digit()) {
                    self.number()?
                } else {
                    1
                };
                Ok(Value::Impartial(self.ctx.games().nim_heap(n)?))
            }
            Some(b'{') => {
                self.pos += 1;
                self.braces(pos)
            }
            Some(c) if c.is_ascii_alphabetic() => self.call(),
            _ => Err(Error::parse(self.pos, "expected an expression")),
        }
    }

    fn list(&mut self) -> Result<Vec<(Value, usize)>> {
        let mut out = Vec::new();
        if matches!(self.peek(), Some(b'|') | Some(b'}')) {
            return Ok(out);
        }
        loop {
            self.skip_ws();
            let pos = self.pos;
            out.push((self.expr()?, pos));
            if self.peek() == Some(b',') {
                self.pos += 1;
            } else {
                return Ok(out);
            }
        }
    }

    fn braces(&mut self, open: usize) -> Result<Value> {
        let mut slots = vec![self.list()?];
        while self.peek() == Some(b'|') {
            self.pos += 1;
            slots.push(self.list()?);
        }
        self.expect(b'}')?;
        if slots.len() == 1 {
            let opts = slots
                .pop()
                .expect("one slot")
                .into_iter()
                .map(|(v, pos)| self.impartial(v, pos))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Value::Impartial(self.ctx.games().intern(opts)?));
        }
        let n = self.ctx.partizan(open)?.players().get();
        if slots.len() != n {
            return Err(Error::parse(
                open,
                format!(
                    "expected {} bars for {n} players, found {}",
                    n - 1,
                    slots.len() - 1
                ),
            ));
        }
        let mut built = Vec::with_capacity(n);
        for slot in slots {
            let mut opts = Vec::with_capacity(slot.len());
            for (v, pos) in slot {
                opts.push(self.as_partizan(v, pos)?);
            }
            built.push(opts);
        }
        Ok(Value::Partizan(self.ctx.partizan(open)?.intern(built)?))
    }

    fn call(&mut self) -> Result<Value> {
        let pos = self.pos;
        let name = self.ident();
        self.expect(b'(')?;
        let v = match name.as_str() {
            "sum" => {
                let args = self.list()?;
                self.sum_values(args, pos)?
            }
            "copies" => {
                let k = self.number()?;
                self.expect(b',')?;
                match self.expr()? {
                    Value::Impartial(g) => Value::Impartial(self.ctx.games().n_copies(g, k)?),
                    Value::Partizan(g) => Value::Partizan(self.ctx.partizan(pos)?.copies(g, k)?),
                }
            }
            "wrap" => {
                let arg = self.pos;
                let v = self.expr()?;
                let g = self.impartial(v, arg)?;
                Value::Impartial(self.ctx.games().wrap(g)?)
            }
            "one" => {
                let p = self.player()?;
                Value::Partizan(self.ctx.partizan(pos)?.one(p)?)
            }
            "int" => {
                let k = self.number()?;
                self.expect(b',')?;
                let p = self.player()?;
                Value::Partizan(self.ctx.partizan(pos)?.integer(k, p)?)
            }
            "conj" | "negsum" | "embed" => {
                let arg = self.pos;
                let v = self.expr()?;
                let g = self.as_partizan(v, arg)?;
                let store = self.ctx.partizan(pos)?;
                Value::Partizan(match name.as_str() {
                    "conj" => store.conjugate(g)?,
                    "negsum" => store.conj_sum(g)?,
                    _ => g,
                })
            }
            _ => return Err(Error::parse(pos, format!("unknown function {name:?}"))),
        };
        self.expect(b')')?;
        Ok(v)
    }
}
