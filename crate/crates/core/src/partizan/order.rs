//! The per-player preorders `G ≤_p H`: `p` wins `H+X` moving `i`-th whenever
//! `p` wins `G+X` moving `i`-th, for every `X` and `i`.
//!
//! Only comparisons against 0 are decided exactly. Everything else is
//! semidecided: a sound recursive test proves, a context search refutes.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::partizan::store::{PGameId, PartizanStore, Player};

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Rule {
    Identity,
    Nonnegativity,
    Nonpositivity,
    InequalityTest,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Identity => "identity",
            Rule::Nonnegativity => "nonnegativity",
            Rule::Nonpositivity => "nonpositivity",
            Rule::InequalityTest => "inequality-test",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CompareVerdict {
    Proven(Rule),
    /// `p` wins `g + witness` moving `order`-th but not `h + witness`.
    Refuted {
        witness: PGameId,
        order: usize,
    },
    Unknown {
        contexts_tried: usize,
    },
}

impl CompareVerdict {
    pub fn is_proven(&self) -> bool {
        matches!(self, CompareVerdict::Proven(_))
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, CompareVerdict::Refuted { .. })
    }
}

impl PartizanStore {
    /// `0 ≤_p g`, exact when `N > 2`: `g` is 0 or only `p` can move.
    pub fn zero_leq(&self, g: PGameId, p: Player) -> Result<bool> {
        self.players().require_more_than_two("zero_leq")?;
        self.check(g)?;
        self.check_player(p)?;
        Ok(Player::all(self.players()).all(|q| q == p || !self.has_options(g, q)))
    }

    /// `g ≤_p 0`, exact: `p` cannot win `g` moving first.
    pub fn leq_zero(&mut self, g: PGameId, p: Player) -> Result<bool> {
        let r = self.restriction(g, p)?;
        let n = self.players();
        Ok(!self.games_mut().outcome(r, n)?.has_next())
    }

    /// Sound but incomplete test for `g ≤_p h`. Returns the rule that closed
    /// the top-level obligation.
    pub fn leq_sufficient(&mut self, g: PGameId, h: PGameId, p: Player) -> Result<Option<Rule>> {
        self.check(g)?;
        self.check(h)?;
        self.check_player(p)?;
        let mut memo = FxHashMap::default();
        self.leq_rec(g, h, p, &mut memo)
    }

    fn leq_rec(
        &mut self,
        g: PGameId,
        h: PGameId,
        p: Player,
        memo: &mut FxHashMap<(PGameId, PGameId), Option<Rule>>,
    ) -> Result<Option<Rule>> {
        if g == h {
            return Ok(Some(Rule::Identity));
        }
        if let Some(&r) = memo.get(&(g, h)) {
            return Ok(r);
        }
        let n = self.players();
        let verdict = if self.is_zero(g) && n.get() > 2 {
            self.zero_leq(h, p)?.then_some(Rule::Nonnegativity)
        } else if self.is_zero(h) {
            self.leq_zero(g, p)?.then_some(Rule::Nonpositivity)
        } else {
            let mut ok = true;
            'own: for gp in self.slot(g, p) {
                for hp in self.slot(h, p) {
                    if self.leq_rec(gp, hp, p, memo)?.is_some() {
                        continue 'own;
                    }
                }
                ok = false;
                break;
            }
            if ok {
                'others: for q in Player::all(n).filter(|&q| q != p) {
                    let gq_all = self.slot(g, q);
                    'cover: for hq in self.slot(h, q) {
                        for &gq in &gq_all {
                            if self.leq_rec(gq, hq, p, memo)?.is_some() {
                                continue 'cover;
                            }
                        }
                        ok = false;
                        break 'others;
                    }
                }
            }
            ok.then_some(Rule::InequalityTest)
        };
        memo.insert((g, h), verdict);
        Ok(verdict)
    }

    /// Whether `(x, order)` witnesses `g ≰_p h`.
    pub fn refutes(
        &mut self,
        g: PGameId,
        h: PGameId,
        p: Player,
        x: PGameId,
        order: usize,
    ) -> Result<bool> {
        let gx = self.sum(g, x)?;
        if !self.p_wins(gx, p, order)? {
            return Ok(false);
        }
        let hx = self.sum(h, x)?;
        Ok(!self.p_wins(hx, p, order)?)
    }

    /// First `(x, order)` in `pool` order refuting `g ≤_p h`.
    pub fn leq_refute(
        &mut self,
        g: PGameId,
        h: PGameId,
        p: Player,
        pool: &[PGameId],
    ) -> Result<Option<(PGameId, usize)>> {
        let n = self.players().get();
        for &x in pool {
            for order in 1..=n {
                if self.refutes(g, h, p, x, order)? {
                    return Ok(Some((x, order)));
                }
            }
        }
        Ok(None)
    }

    /// Proof rules first, then refutation over `pool` extended by the
    /// constructed witness families for this pair.
    pub fn compare(
        &mut self,
        g: PGameId,
        h: PGameId,
        p: Player,
        pool: &[PGameId],
    ) -> Result<CompareVerdict> {
        if let Some(rule) = self.leq_sufficient(g, h, p)? {
            return Ok(CompareVerdict::Proven(rule));
        }
        let mut contexts = pool.to_vec();
        contexts.extend(self.witness_families(g, h, p)?);
        match self.leq_refute(g, h, p, &contexts)? {
            Some((witness, order)) => Ok(CompareVerdict::Refuted { witness, order }),
            None => Ok(CompareVerdict::Unknown {
                contexts_tried: contexts.len(),
            }),
        }
    }

    /// `Y = m·(1_p)⁻`: every other player gets `m` free moves.
    pub fn overwhelm(&mut self, m: usize, p: Player) -> Result<PGameId> {
        let one = self.one(p)?;
        let neg = self.conj_sum(one)?;
        self.copies(neg, m)
    }

    /// Contexts that separate `0` from games where a player other than `p`
    /// can move, one per such player, with `m` free moves for everyone else.
    pub fn nonnegativity_witnesses(&mut self, m: usize, p: Player) -> Result<Vec<PGameId>> {
        let n = self.players();
        if n.get() <= 2 {
            return Ok(Vec::new());
        }
        let y = self.overwhelm(m, p)?;
        let z = self.zero();
        let one_p = self.one(p)?;
        let mut out = Vec::new();
        for k in 1..n.get() {
            let q = p.after(k, n);
            let mut slots = vec![Vec::new(); n.get()];
            if k + 1 < n.get() {
                slots[q.0].push(z);
                slots[q.after(1, n).0].push(y);
            } else {
                slots[p.after(1, n).0].push(y);
                slots[q.0].push(one_p);
            }
            out.push(self.intern(slots)?);
        }
        Ok(out)
    }

    /// The context separating `{k_q|⋯|}` from `{m_q|⋯|}` for `k < m`, where
    /// `q` is a player other than `p`. The single option belongs to the
    /// player after `p` (or the one after that when `q` is that player).
    pub fn strict_chain_witness(&mut self, q: Player, m: usize, p: Player) -> Result<PGameId> {
        let n = self.players();
        n.require_more_than_two("strict_chain_witness")?;
        if q == p || m == 0 {
            return Err(crate::Error::InvalidArgument(
                "needs another player and m >= 1".into(),
            ));
        }
        let first_center = p.after(1, n);
        let mover = if q == first_center {
            p.after(2, n)
        } else {
            first_center
        };
        let mut parts = Vec::new();
        parts.push(self.ones(m - 1, p)?);
        parts.push(self.ones(m - 1, mover)?);
        for k in 1..n.get() {
            let r = p.after(k, n);
            if r != q && r != mover {
                parts.push(self.ones(m, r)?);
            }
        }
        let target = self.sum_all(parts)?;
        self.single_slot(mover, vec![target])
    }

    /// Constructed contexts for refuting `g ≤_p h`.
    pub fn witness_families(&mut self, g: PGameId, h: PGameId, p: Player) -> Result<Vec<PGameId>> {
        let n = self.players();
        let depth = self.depth(g)?.max(self.depth(h)?);
        let mut out = Vec::new();
        for m in 1..=depth + 1 {
            out.push(self.overwhelm(m, p)?);
            out.extend(self.nonnegativity_witnesses(m, p)?);
            for q in Player::all(n) {
                out.push(self.ones(m, q)?);
                let neg = self.ones(m, q)?;
                out.push(self.conj_sum(neg)?);
            }
        }
        out.push(self.conj_sum(g)?);
        out.push(self.conj_sum(h)?);
        if n.get() > 2 {
            for q in Player::all(n).filter(|&q| q != p) {
                for m in 1..=depth + 1 {
                    out.push(self.strict_chain_witness(q, m, p)?);
                }
            }
        }
        let mut seen = rustc_hash::FxHashSet::default();
        out.retain(|x| seen.insert(*x));
        Ok(out)
    }
}
