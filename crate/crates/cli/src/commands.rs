use normplay::laws::{
    check_law, default_pool, default_seeds, enumerate_games, search_trebling, AbsorbingVerdict,
    Law, DEFAULT_POOL_BUDGET,
};
use normplay::nim::{
    nim_outcome_closed3, one_heap_outcome, quotient_build, search_nim_periodicity,
    search_quotient_absorbing, two_heap_outcome, NimPosition,
};
use normplay::notation::{
    parse_compact, parse_expr, parse_impartial, parse_partizan, print_game, print_pgame, Value,
};
use normplay::partizan::{CompareVerdict, PartizanStore, Player};
use normplay::tables::{verify_table, TableId};
use normplay::{Error, GameId, GameStore, Outcome, PlayerCount};
use serde_json::json;

use crate::{Cli, Command, Format, Question};

pub enum Failure {
    Mismatch(Option<String>),
    Usage(String),
    Budget(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    pub fn message(&self) -> Option<&str> {
        match self {
            Failure::Mismatch(m) => m.as_deref(),
            Failure::Usage(m) | Failure::Budget(m) => Some(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit { .. } => Failure::Budget(e.to_string()),
            Error::Fixture { .. } | Error::Quotient(_) => Failure::Mismatch(Some(e.to_string())),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Out = Result<(), Failure>;

struct Ctx {
    n: PlayerCount,
    format: Format,
    budget: Option<usize>,
}

impl Ctx {
    fn store(&self) -> GameStore {
        match self.budget {
            Some(b) => GameStore::with_node_cap(b),
            None => GameStore::new(),
        }
    }

    fn pstore(&self) -> PartizanStore {
        match self.budget {
            Some(b) => PartizanStore::with_node_cap(self.n, b),
            None => PartizanStore::new(self.n),
        }
    }

    fn no_csv(&self, what: &str) -> Out {
        if self.format == Format::Csv {
            return Err(Failure::Usage(format!("{what} has no csv output")));
        }
        Ok(())
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_row<S: AsRef<str>>(fields: impl IntoIterator<Item = S>) -> String {
    fields
        .into_iter()
        .map(|f| csv_field(f.as_ref()))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn run(cli: Cli) -> Out {
    let ctx = Ctx {
        n: PlayerCount::new(cli.players)?,
        format: cli.format,
        budget: cli.budget,
    };
    match cli.command {
        Command::Outcome { expr, compact } => outcome(&ctx, &expr, compact),
        Command::Nim {
            heaps,
            closed_form,
            cross_check,
        } => nim(&ctx, heaps, closed_form, cross_check),
        Command::NimQuotient => nim_quotient(&ctx),
        Command::Verify { table } => verify(&ctx, &table),
        Command::Compare { player, g, h } => compare(&ctx, &player, &g, &h),
        Command::Absorbing { expr } => absorbing(&ctx, &expr),
        Command::Laws { law, max_birthday } => laws(&ctx, law.as_deref(), max_birthday),
        Command::Search {
            question,
            max_heaps,
            max_size,
            prefix,
        } => search(&ctx, question, max_heaps, max_size, prefix),
    }
}

fn print_outcome(ctx: &Ctx, expr: &str, outcome: &str) {
    match ctx.format {
        Format::Text => println!("{outcome}"),
        Format::Json => println!(
            "{}",
            json!({"expr": expr, "players": ctx.n.get(), "outcome": outcome})
        ),
        Format::Csv => {
            println!("expr,players,outcome");
            println!("{}", csv_row([expr, &ctx.n.to_string(), outcome]));
        }
    }
}

// Verbose first, then the compact notation.
fn parse_game(store: &mut GameStore, text: &str) -> Result<GameId, Failure> {
    match parse_impartial(store, text) {
        Ok(g) => Ok(g),
        Err(e) => parse_compact(store, text).map_err(|_| e.into()),
    }
}

fn outcome(ctx: &Ctx, expr: &str, compact: bool) -> Out {
    let mut ps = ctx.pstore();
    let value = if compact {
        Value::Impartial(parse_compact(ps.games_mut(), expr)?)
    } else {
        match parse_expr(&mut ps, expr) {
            Ok(v) => v,
            Err(e) => match parse_compact(ps.games_mut(), expr) {
                Ok(g) => Value::Impartial(g),
                Err(_) => return Err(e.into()),
            },
        }
    };
    let text = match value {
        Value::Impartial(g) => ps.games_mut().outcome(g, ctx.n)?.to_string(),
        Value::Partizan(g) => ps.p_outcome(g)?.to_string(),
    };
    print_outcome(ctx, expr, &text);
    Ok(())
}

fn closed_form(p: &NimPosition, n: PlayerCount) -> Result<Outcome, Failure> {
    if n.get() == 3 {
        return Ok(nim_outcome_closed3(p));
    }
    match p.heaps() {
        [] => Ok(one_heap_outcome(0, n)),
        [i] => Ok(one_heap_outcome(*i, n)),
        [i, j] => Ok(two_heap_outcome(*i, *j, n)?),
        hs => Err(Failure::Usage(format!(
            "no closed form for {} heaps with {n} players",
            hs.len()
        ))),
    }
}

fn nim(ctx: &Ctx, heaps: Vec<usize>, closed: bool, cross: bool) -> Out {
    let p = NimPosition::new(heaps);
    let expr = p.to_string();
    if closed {
        let o = closed_form(&p, ctx.n)?;
        print_outcome(ctx, &expr, &o.to_string());
        return Ok(());
    }
    let mut store = ctx.store();
    let engine = p.outcome_engine(&mut store, ctx.n)?;
    print_outcome(ctx, &expr, &engine.to_string());
    if cross {
        let c = closed_form(&p, ctx.n)?;
        if c != engine {
            return Err(Failure::Mismatch(Some(format!(
                "closed form gives {c}, search gives {engine}"
            ))));
        }
    }
    Ok(())
}

fn nim_quotient(ctx: &Ctx) -> Out {
    if ctx.n.get() != 3 {
        return Err(Failure::Usage(
            "the Nim quotient is built for 3 players".into(),
        ));
    }
    let q = quotient_build()?;
    let names: Vec<String> = q.elements.iter().map(|e| e.to_string()).collect();
    let cell = |i: usize, j: usize| names[q.mult[i][j]].clone();
    let pis: Vec<String> = q.pi.iter().map(|o| o.to_string()).collect();
    match ctx.format {
        Format::Json => {
            let mult: Vec<Vec<String>> = (0..names.len())
                .map(|i| (0..names.len()).map(|j| cell(i, j)).collect())
                .collect();
            println!("{}", json!({"elements": names, "mult": mult, "pi": pis}));
        }
        Format::Csv => {
            println!(
                "{}",
                csv_row(std::iter::once("*".to_string()).chain(names.iter().cloned()))
            );
            for (i, a) in names.iter().enumerate() {
                let row = std::iter::once(a.clone()).chain((0..names.len()).map(|j| cell(i, j)));
                println!("{}", csv_row(row));
            }
            println!("{}", csv_row(std::iter::once("pi".to_string()).chain(pis)));
        }
        Format::Text => {
            println!("elements: {}", names.join(" "));
            let w = names.iter().map(|s| s.len()).max().unwrap_or(1).max(3);
            print!("{:>w$}", "*");
            for a in &names {
                print!(" {a:>w$}");
            }
            println!();
            for (i, a) in names.iter().enumerate() {
                print!("{a:>w$}");
                for j in 0..names.len() {
                    print!(" {:>w$}", cell(i, j));
                }
                println!();
            }
            print!("{:>w$}", "pi");
            for o in &pis {
                print!(" {o:>w$}");
            }
            println!();
        }
    }
    Ok(())
}

fn verify(ctx: &Ctx, table: &str) -> Out {
    let id = TableId::parse(table, ctx.n)?;
    let mut store = ctx.store();
    let r = verify_table(&mut store, id)?;
    match ctx.format {
        Format::Text => {
            println!(
                "{}: checked {}, skipped {}, mismatches {}",
                r.table,
                r.checked,
                r.skipped,
                r.mismatches.len()
            );
            for m in &r.mismatches {
                println!("  {m}");
            }
        }
        Format::Json => println!(
            "{}",
            json!({"table": r.table, "checked": r.checked, "skipped": r.skipped, "mismatches": r.mismatches})
        ),
        Format::Csv => {
            println!("table,checked,skipped,mismatch");
            if r.mismatches.is_empty() {
                println!(
                    "{}",
                    csv_row([
                        r.table.clone(),
                        r.checked.to_string(),
                        r.skipped.to_string(),
                        String::new()
                    ])
                );
            }
            for m in &r.mismatches {
                println!(
                    "{}",
                    csv_row([
                        r.table.clone(),
                        r.checked.to_string(),
                        r.skipped.to_string(),
                        m.clone()
                    ])
                );
            }
        }
    }
    if r.ok() {
        Ok(())
    } else {
        Err(Failure::Mismatch(None))
    }
}

fn compare(ctx: &Ctx, player: &str, g: &str, h: &str) -> Out {
    ctx.no_csv("compare")?;
    let mut ps = ctx.pstore();
    let p = Player::parse(player, ctx.n)?;
    let gg = parse_partizan(&mut ps, g)?;
    let hh = parse_partizan(&mut ps, h)?;
    // 8^N small games; past four players only the constructed families.
    let pool = if ctx.n.get() <= 4 {
        ps.enumerate_small()?
    } else {
        Vec::new()
    };
    let verdict = ps.compare(gg, hh, p, &pool)?;
    let (text, extra) = match verdict {
        CompareVerdict::Proven(rule) => (
            format!("PROVEN({rule})"),
            json!({"verdict": "PROVEN", "rule": rule.to_string()}),
        ),
        CompareVerdict::Refuted { witness, order } => {
            let w = print_pgame(&ps, witness);
            (
                format!("REFUTED({w},{order})"),
                json!({"verdict": "REFUTED", "witness": w, "order": order}),
            )
        }
        CompareVerdict::Unknown { contexts_tried } => (
            format!("UNKNOWN(not refuted by {contexts_tried} contexts)"),
            json!({"verdict": "UNKNOWN", "contexts_tried": contexts_tried}),
        ),
    };
    match ctx.format {
        Format::Json => {
            let mut obj = json!({"g": g, "h": h, "player": p.name(ctx.n), "players": ctx.n.get()});
            obj.as_object_mut()
                .expect("object")
                .extend(extra.as_object().expect("object").clone());
            println!("{obj}");
        }
        _ => println!("{text}"),
    }
    Ok(())
}

fn absorbing(ctx: &Ctx, expr: &str) -> Out {
    ctx.no_csv("absorbing")?;
    let mut store = ctx.store();
    let g = parse_game(&mut store, expr)?;
    let pool = default_pool(&mut store)?;
    let verdict = store.absorbing(g, &pool.games, ctx.n)?;
    let (text, obj) = match verdict {
        AbsorbingVerdict::Certified => ("CERTIFIED".to_string(), json!({"verdict": "CERTIFIED"})),
        AbsorbingVerdict::Refuted { witness } => {
            let w = print_game(&store, witness);
            (
                format!("REFUTED({w})"),
                json!({"verdict": "REFUTED", "witness": w}),
            )
        }
        AbsorbingVerdict::Unknown { contexts_tried } => (
            format!("UNKNOWN(not refuted by {contexts_tried} contexts)"),
            json!({"verdict": "UNKNOWN", "contexts_tried": contexts_tried}),
        ),
    };
    match ctx.format {
        Format::Json => {
            let mut o = json!({"expr": expr, "players": ctx.n.get()});
            o.as_object_mut()
                .expect("object")
                .extend(obj.as_object().expect("object").clone());
            println!("{o}");
        }
        _ => println!("{text}"),
    }
    if pool.truncated && matches!(verdict, AbsorbingVerdict::Unknown { .. }) {
        return Err(Failure::Budget(
            "context pool truncated by the node budget".into(),
        ));
    }
    Ok(())
}

fn default_laws(n: PlayerCount) -> Vec<Law> {
    let mut out = vec![Law::ProperSubset, Law::WrapCycle, Law::NextGeneration];
    for k in 1..=3 {
        if k < n.get() {
            out.push(Law::OtherProcreation { k, m: 1 });
        }
    }
    out.extend([Law::Mirror, Law::DepthAdditivity, Law::RevertInclusion]);
    out
}

fn laws(ctx: &Ctx, law: Option<&str>, max_birthday: usize) -> Out {
    let selected = match law {
        Some(name) => vec![Law::parse(name)?],
        None => default_laws(ctx.n),
    };
    let mut store = ctx.store();
    let seeds = default_seeds(&mut store)?;
    let pool = enumerate_games(
        &mut store,
        max_birthday,
        &seeds,
        ctx.budget.unwrap_or(DEFAULT_POOL_BUDGET),
    )?;
    if ctx.format == Format::Csv {
        println!("law,tuple,expected,got");
    }
    let mut total = 0;
    for law in selected {
        let games = match law {
            Law::ProperSubset | Law::WrapCycle => &pool.games,
            _ => &pool.base,
        };
        let found = check_law(&mut store, law, games, &pool.games, ctx.n)?;
        total += found.len();
        for v in &found {
            match ctx.format {
                Format::Json => println!("{}", serde_json::to_string(v).expect("serializable")),
                Format::Csv => println!(
                    "{}",
                    csv_row([
                        v.law.clone(),
                        v.tuple.join(" "),
                        v.expected.clone(),
                        v.got.clone()
                    ])
                ),
                Format::Text => println!(
                    "{}: ({}) expected {}, got {}",
                    v.law,
                    v.tuple.join(", "),
                    v.expected,
                    v.got
                ),
            }
        }
        if ctx.format == Format::Text {
            println!(
                "{law}: {} violations over {} games",
                found.len(),
                games.len()
            );
        }
    }
    if total > 0 {
        return Err(Failure::Mismatch(None));
    }
    if pool.truncated {
        return Err(Failure::Budget("pool truncated by the node budget".into()));
    }
    Ok(())
}

fn search(
    ctx: &Ctx,
    q: Question,
    max_heaps: usize,
    max_size: Option<usize>,
    prefix: Option<usize>,
) -> Out {
    ctx.no_csv("search")?;
    let n = ctx.n;
    let mut store = ctx.store();
    match q {
        Question::Trebling => {
            if n.get() != 3 {
                return Err(Failure::Usage(
                    "the trebling search is for 3 players".into(),
                ));
            }
            let pool = default_pool(&mut store)?;
            let found = search_trebling(&mut store, &pool.games)?;
            let names: Vec<String> = found.iter().map(|&g| print_game(&store, g)).collect();
            match ctx.format {
                Format::Json => println!(
                    "{}",
                    json!({"question": "trebling", "searched": pool.games.len(), "truncated": pool.truncated, "found": names})
                ),
                _ => {
                    println!(
                        "searched {} pool games: {} with outcome N and P in o(3·G)",
                        pool.games.len(),
                        names.len()
                    );
                    for s in &names {
                        println!("  {s}");
                    }
                }
            }
        }
        Question::NimPeriodicity => {
            let max_size = max_size.unwrap_or(n.get() + 2);
            let prefix = prefix.unwrap_or(3 * n.get());
            let count = NimPosition::enumerate(max_heaps, max_size).len();
            let bad = search_nim_periodicity(&mut store, n, max_heaps, max_size, prefix)?;
            let names: Vec<String> = bad.iter().map(|p| p.to_string()).collect();
            match ctx.format {
                Format::Json => println!(
                    "{}",
                    json!({"question": "nim-periodicity", "players": n.get(), "positions": count, "horizon": prefix, "failures": names})
                ),
                _ => {
                    println!(
                        "{count} positions (at most {max_heaps} heaps of size at most {max_size}), verified to horizon {prefix}: {} failures",
                        names.len()
                    );
                    for s in &names {
                        println!("  {s}");
                    }
                }
            }
        }
        Question::QuotientAbsorbing => {
            let max_size = max_size.unwrap_or(n.get() + 1);
            let total = NimPosition::enumerate(max_heaps, max_size).len();
            let results = search_quotient_absorbing(&mut store, n, max_heaps, max_size)?;
            match ctx.format {
                Format::Json => {
                    let rows: Vec<_> = results
                        .iter()
                        .map(|(c, esc)| {
                            json!({"candidate": c.to_string(), "escaping": esc.iter().map(|x| x.to_string()).collect::<Vec<_>>()})
                        })
                        .collect();
                    println!(
                        "{}",
                        json!({"question": "quotient-absorbing", "players": n.get(), "contexts": total, "results": rows})
                    );
                }
                _ => {
                    for (c, esc) in &results {
                        println!(
                            "{c}: {} of {total} Nim contexts escape (evidence only)",
                            esc.len()
                        );
                        for x in esc.iter().take(10) {
                            println!("  {x}");
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
