//! Golden tables: embedded fixtures with pinned digests, and verifiers that
//! recompute every cell.

use std::fmt;

use rustc_hash::FxHashSet;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::game::{GameId, GameStore, PlayerCount};
use crate::laws::{sum_allowed3, sum_bound3};
use crate::nim::{
    nim_outcome_closed3, quotient_build, two_heap_outcome, NimPosition, QuotientElement,
};
use crate::notation::parse_compact;
use crate::outcome::Outcome;

struct Fixture {
    name: &'static str,
    text: &'static str,
    sha256: &'static str,
}

const FIXTURES: [Fixture; 8] = [
    Fixture {
        name: "table1",
        text: include_str!("../fixtures/table1.txt"),
        sha256: "b1f393a08e0b345d545997e225d9809f0822d708816100e0f5f01e15ed1f0210",
    },
    Fixture {
        name: "table2",
        text: include_str!("../fixtures/table2.txt"),
        sha256: "79e74f26342c8387783d2d1a3702892c8dd00cae1081750f8f60d2eb87f04e80",
    },
    Fixture {
        name: "table3",
        text: include_str!("../fixtures/table3.txt"),
        sha256: "bfb6599c2dedd79d77a93e15c10a0ed189f7dce438785561c70576fcbf6f90c5",
    },
    Fixture {
        name: "table4",
        text: include_str!("../fixtures/table4.txt"),
        sha256: "c6541806b586efb07b045e152fae83161a00c3f3b04164369deea9f8aad19e86",
    },
    Fixture {
        name: "table5",
        text: include_str!("../fixtures/table5.txt"),
        sha256: "797dc957cd45a97daed1e2e6dd888d6310f8c94a7fac4c8898108549a416e666",
    },
    Fixture {
        name: "table6",
        text: include_str!("../fixtures/table6.txt"),
        sha256: "fa9d29d8c8ae02c3ef7f698aa3f4093f84ff5719569cdfa835ae82b7a0feab9a",
    },
    Fixture {
        name: "table7",
        text: include_str!("../fixtures/table7.txt"),
        sha256: "493f8ac7350986e475e73f632708f343f7b0cc3e92ff158944bb883c6b53b4de",
    },
    Fixture {
        name: "table8",
        text: include_str!("../fixtures/table8.txt"),
        sha256: "ae748268262aa8e1d3a92c67669727d26af5011d56ca5ebdd3e84d568f97fe95",
    },
];

/// Fixture text after checking its digest.
pub fn fixture(name: &str) -> Result<&'static str> {
    let f = FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::InvalidArgument(format!("no fixture {name:?}")))?;
    let digest = hex::encode(Sha256::digest(f.text.as_bytes()));
    if digest != f.sha256 {
        return Err(Error::Fixture {
            name: f.name,
            msg: format!("digest {digest} does not match pinned {}", f.sha256),
        });
    }
    Ok(f.text)
}

fn lines(name: &str) -> Result<impl Iterator<Item = Vec<&'static str>>> {
    Ok(fixture(name)?
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().collect()))
}

fn three(text: &str) -> Result<Outcome> {
    Outcome::parse(text, PlayerCount::THREE)
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum TableId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    TwoHeap(PlayerCount),
}

impl TableId {
    /// `T1`..`T8`, or `two-heap` with the given player count.
    pub fn parse(text: &str, n: PlayerCount) -> Result<TableId> {
        Ok(match text.trim().to_ascii_uppercase().as_str() {
            "T1" => TableId::T1,
            "T2" => TableId::T2,
            "T3" => TableId::T3,
            "T4" => TableId::T4,
            "T5" => TableId::T5,
            "T6" => TableId::T6,
            "T7" => TableId::T7,
            "T8" => TableId::T8,
            "TWO-HEAP" => TableId::TwoHeap(n),
            other => return Err(Error::InvalidArgument(format!("unknown table {other:?}"))),
        })
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableId::TwoHeap(n) => write!(f, "two-heap(N={n})"),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct TableReport {
    pub table: String,
    pub checked: usize,
    pub skipped: usize,
    pub mismatches: Vec<String>,
}

impl TableReport {
    fn new(id: TableId) -> Self {
        TableReport {
            table: id.to_string(),
            ..Default::default()
        }
    }

    fn expect<T: PartialEq + fmt::Display>(&mut self, what: impl fmt::Display, want: T, got: T) {
        self.checked += 1;
        if want != got {
            self.mismatches
                .push(format!("{what}: expected {want}, got {got}"));
        }
    }

    fn fail(&mut self, msg: String) {
        self.mismatches.push(msg);
    }

    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn verify_table(store: &mut GameStore, id: TableId) -> Result<TableReport> {
    match id {
        TableId::T1 => verify_t1(store),
        TableId::T2 => verify_t2(store),
        TableId::T3 => verify_t3(store),
        TableId::T4 => verify_t4(),
        TableId::T5 => verify_t5(),
        TableId::T6 => verify_multiple(store, 2),
        TableId::T7 => verify_multiple(store, 3),
        TableId::T8 => verify_t8(store),
        TableId::TwoHeap(n) => verify_two_heap(store, n),
    }
}

/// Row labels like `2,2` or `2,m`, with `m` replaced by the given size.
fn heaps_label(label: &str, m: usize) -> Result<Vec<usize>> {
    if label == "0" {
        return Ok(Vec::new());
    }
    label
        .split(',')
        .map(|t| match t {
            "m" => Ok(m),
            _ => t
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad heap label {label:?}"))),
        })
        .collect()
}

fn verify_t1(store: &mut GameStore) -> Result<TableReport> {
    let mut r = TableReport::new(TableId::T1);
    let mut rows = lines("table1")?;
    let header = rows.next().unwrap_or_default();
    let ks: Vec<usize> = header[1..].iter().map(|k| k.parse().unwrap_or(0)).collect();
    for row in rows {
        let g = heaps_label(row[0], 0)?;
        for (cell, &k) in row[1..].iter().zip(&ks) {
            let p = NimPosition::new(g.iter().copied().chain(std::iter::repeat_n(1, k)));
            let got = p.outcome_engine(store, PlayerCount::THREE)?;
            r.expect(format!("{k}·*+{}", row[0]), three(cell)?, got);
        }
    }
    Ok(r)
}

fn verify_t3(store: &mut GameStore) -> Result<TableReport> {
    let mut r = TableReport::new(TableId::T3);
    let rows: Vec<_> = lines("table3")?.skip(1).collect();
    for row in rows {
        for (residue, cell) in row[1..].iter().enumerate() {
            let want = three(cell)?;
            for m in 3..=5 {
                for k in (residue..=6).step_by(3) {
                    let g = heaps_label(row[0], m)?;
                    let p = NimPosition::new(g.into_iter().chain(std::iter::repeat_n(1, k)));
                    let what = format!("{p}");
                    let got = p.outcome_engine(store, PlayerCount::THREE)?;
                    r.expect(&what, want, got);
                    r.expect(format!("closed form {what}"), want, nim_outcome_closed3(&p));
                }
                if !row[0].contains('m') {
                    break;
                }
            }
        }
    }
    Ok(r)
}

/// Cells of the sum table against the bound derived from the sum theorems,
/// then the observed outcomes over a pool, then Table 8 coverage.
fn verify_t2(store: &mut GameStore) -> Result<TableReport> {
    let mut r = TableReport::new(TableId::T2);
    let mut rows = lines("table2")?;
    let header = rows.next().unwrap_or_default();
    for row in rows {
        let a = three(row[0])?;
        for (cell, col) in row[1..].iter().zip(&header[1..]) {
            let b = three(col)?;
            r.expect(format!("{a}+{b}"), three(cell)?, sum_bound3(a, b)?);
        }
    }
    let mut games = crate::laws::born_by(store, 3)?;
    games.extend(appendix_games(store)?);
    games.sort();
    games.dedup();
    let observed = observed_sum_triples(store, &games)?;
    for &(a, b, s) in &observed {
        r.checked += 1;
        if !table2_allows(a, b, s)? {
            r.fail(format!("observed {a}+{b}={s} outside the table"));
        }
    }
    let witnessed = table8_triples()?;
    for t in allowed_sum_triples()? {
        r.checked += 1;
        if !witnessed.contains(&t) {
            r.fail(format!("no Table 8 witness for {}+{}={}", t.0, t.1, t.2));
        }
    }
    Ok(r)
}

/// Whether the Table 2 fixture permits `a + b = s`.
pub fn table2_allows(a: Outcome, b: Outcome, s: Outcome) -> Result<bool> {
    let mut rows = lines("table2")?;
    let header = rows.next().unwrap_or_default();
    for row in rows {
        if three(row[0])? != a {
            continue;
        }
        for (cell, col) in row[1..].iter().zip(&header[1..]) {
            if three(col)? == b {
                return Ok(s.is_proper() && s.is_subset(three(cell)?));
            }
        }
    }
    Err(Error::Fixture {
        name: "table2",
        msg: format!("no cell for {a}+{b}"),
    })
}

type Triple = (Outcome, Outcome, Outcome);

fn ordered(a: Outcome, b: Outcome, s: Outcome) -> Triple {
    if a.mask() <= b.mask() {
        (a, b, s)
    } else {
        (b, a, s)
    }
}

/// Distinct `(o(G), o(H), o(G+H))` over pairs from `games`.
pub fn observed_sum_triples(store: &mut GameStore, games: &[GameId]) -> Result<Vec<Triple>> {
    let n = PlayerCount::THREE;
    let mut seen = FxHashSet::default();
    for (i, &g) in games.iter().enumerate() {
        let og = store.outcome(g, n)?;
        for &h in &games[i..] {
            let oh = store.outcome(h, n)?;
            let s = store.sum(g, h)?;
            seen.insert(ordered(og, oh, store.outcome(s, n)?));
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by_key(|t| (t.0.mask(), t.1.mask(), t.2.mask()));
    Ok(out)
}

/// Every triple the sum theorems allow, up to swapping the summands.
pub fn allowed_sum_triples() -> Result<Vec<Triple>> {
    let n = PlayerCount::THREE;
    let mut out = Vec::new();
    let all: Vec<Outcome> = Outcome::all_proper(n).collect();
    for (i, &a) in all.iter().enumerate() {
        for &b in &all[i..] {
            for &s in &all {
                if sum_allowed3(a, b, s)? {
                    out.push(ordered(a, b, s));
                }
            }
        }
    }
    Ok(out)
}

fn table8_triples() -> Result<FxHashSet<Triple>> {
    lines("table8")?
        .map(|row| Ok(ordered(three(row[0])?, three(row[1])?, three(row[2])?)))
        .collect()
}

fn verify_t4() -> Result<TableReport> {
    let mut r = TableReport::new(TableId::T4);
    for row in lines("table4")? {
        let k = match row[0] {
            "double" => 2,
            "treble" => 3,
            other => {
                r.fail(format!("unknown multiple {other:?}"));
                continue;
            }
        };
        let o = three(row[1])?;
        let bound = multiple_bound3(o, k)?;
        r.expect(format!("{}·{o}", k), three(row[3])?, bound);
        let exact = row[2] == "=";
        r.expect(format!("{}·{o} is forced", k), exact, bound.is_empty());
    }
    Ok(r)
}

/// Bound on `o(k·G)` for `k` in 2 and 3 from the sum theorems, plus the
/// mirroring argument for three copies.
pub fn multiple_bound3(o: Outcome, k: usize) -> Result<Outcome> {
    let n = PlayerCount::THREE;
    match k {
        2 => sum_bound3(o, o),
        3 => {
            let double = multiple_bound3(o, 2)?;
            let mut acc = Outcome::empty(n);
            for s in Outcome::all_proper(n).filter(|s| s.is_subset(double)) {
                acc = acc.union(sum_bound3(o, s)?);
            }
            acc.without(0)
        }
        _ => Err(Error::InvalidArgument(format!("no bound for {k} copies"))),
    }
}

fn verify_t5() -> Result<TableReport> {
    let mut r = TableReport::new(TableId::T5);
    let q = quotient_build()?;
    r.expect("element count", 16, q.elements.len());
    for row in lines("table5")? {
        let e = QuotientElement::parse(row[0])?;
        r.expect(format!("Π({e})"), three(row[1])?, q.pi[q.index(e)]);
    }
    Ok(r)
}

/// Tables 6 and 7: `o(G)` is the row, `o(k·G)` the column, and the rows
/// cover every cell the bound leaves open.
fn verify_multiple(store: &mut GameStore, k: usize) -> Result<TableReport> {
    let (id, name) = if k == 2 {
        (TableId::T6, "table6")
    } else {
        (TableId::T7, "table7")
    };
    let n = PlayerCount::THREE;
    let mut r = TableReport::new(id);
    let mut listed = FxHashSet::default();
    for row in lines(name)? {
        let (ro, co) = (three(row[0])?, three(row[1])?);
        listed.insert((ro, co));
        if row[2] == "?" {
            r.skipped += 1;
            continue;
        }
        let g = parse_compact(store, row[2])?;
        let kg = store.n_copies(g, k)?;
        r.expect(format!("o({})", row[2]), ro, store.outcome(g, n)?);
        r.expect(format!("o({k}·{})", row[2]), co, store.outcome(kg, n)?);
        r.checked += 1;
        if !co.is_subset(multiple_bound3(ro, k)?) {
            r.fail(format!("{k}·{ro}={co} outside the bound"));
        }
    }
    for o in Outcome::all_proper(n) {
        let bound = multiple_bound3(o, k)?;
        for s in Outcome::all_proper(n).filter(|s| s.is_subset(bound)) {
            r.checked += 1;
            if !listed.contains(&(o, s)) {
                r.fail(format!("cell {k}·{o}={s} has no example"));
            }
        }
    }
    Ok(r)
}

fn verify_t8(store: &mut GameStore) -> Result<TableReport> {
    let n = PlayerCount::THREE;
    let mut r = TableReport::new(TableId::T8);
    for row in lines("table8")? {
        let g = parse_compact(store, row[3])?;
        let h = parse_compact(store, row[4])?;
        let s = store.sum(g, h)?;
        r.expect(
            format!("o({})", row[3]),
            three(row[0])?,
            store.outcome(g, n)?,
        );
        r.expect(
            format!("o({})", row[4]),
            three(row[1])?,
            store.outcome(h, n)?,
        );
        let what = format!("o({}+{})", row[3], row[4]);
        r.expect(what, three(row[2])?, store.outcome(s, n)?);
    }
    Ok(r)
}

fn verify_two_heap(store: &mut GameStore, n: PlayerCount) -> Result<TableReport> {
    let mut r = TableReport::new(TableId::TwoHeap(n));
    let top = n.get() + 3;
    for i in 0..=top {
        for j in i..=top {
            let brute = NimPosition::new([i, j]).outcome_engine(store, n)?;
            r.expect(format!("*{i}+*{j}"), brute, two_heap_outcome(i, j, n)?);
        }
    }
    Ok(r)
}

/// Every game named in the appendix tables, ascending by id.
pub fn appendix_games(store: &mut GameStore) -> Result<Vec<GameId>> {
    let mut out = Vec::new();
    for (name, cols) in [("table6", 2..3), ("table7", 2..3), ("table8", 3..5)] {
        for row in lines(name)? {
            for &text in &row[cols.clone()] {
                if text != "?" {
                    out.push(parse_compact(store, text)?);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}
