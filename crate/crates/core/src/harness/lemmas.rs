//! One finite-scale check per lemma, remark and theorem, each paired with a mutated
//! instance that the check must reject.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{
    encode, farmand_dfa, free_state_limit, search_c_n, search_z_k, shortest_common_word, verify_witness,
    witness_pair, Assembly, CanonicalTriple, CheckStatus, FreeContext, Side,
};
use crate::dfa::{enumerate_canonical, BoolOp, Dfa};
use crate::error::{Error, Result};
use crate::lang::{
    build_g_k, build_l_k, h_from_g, segmented_closure, segmented_closure_of_word, segmented_closure_unchecked,
    LangHandle,
};
use crate::sep::{check_separates, exact_sep, lsep_lower_check, no_separator_up_to, SearchBudget};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LemmaStatus {
    Pass,
    BudgetBounded,
    Fail,
}

impl LemmaStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            LemmaStatus::Pass => "pass",
            LemmaStatus::BudgetBounded => "budget-bounded",
            LemmaStatus::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaOutcome {
    pub id: &'static str,
    pub scale: &'static str,
    pub status: LemmaStatus,
    pub samples: u64,
    pub counterexample: Option<String>,
    /// What the mutated instance produced; anything but `Fail` means the check is
    /// vacuous and the outcome is downgraded to `Fail`.
    pub control: LemmaStatus,
}

impl LemmaOutcome {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::json!({
            "id": self.id,
            "scale": self.scale,
            "status": self.status.as_str(),
            "samples": self.samples,
            "counterexample": self.counterexample,
            "control": self.control.as_str(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut line = format!(
            "{:<12} {:<14} samples={:<7} control={:<14} {}",
            self.id,
            self.status.as_str(),
            self.samples,
            self.control.as_str(),
            self.scale
        );
        if let Some(c) = &self.counterexample {
            line.push_str(&format!("\n    counterexample: {c}"));
        }
        line
    }
}

pub struct Ctx {
    pub seed: u64,
    pub budget: SearchBudget,
}

impl Ctx {
    fn rng(&self, id: &str) -> ChaCha8Rng {
        // FNV-1a over the id keeps per-check streams independent of registry order
        let h = id
            .bytes()
            .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }
}

#[derive(Default)]
struct Tally {
    samples: u64,
    counterexample: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.samples += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn failed(&self) -> bool {
        self.counterexample.is_some()
    }
}

type CheckFn = fn(&Ctx, bool) -> Result<Tally>;

pub struct LemmaCheck {
    pub id: &'static str,
    pub scale: &'static str,
    run: CheckFn,
}

pub const LEMMA_IDS: [&str; 21] = [
    "fries", "pear", "five", "onep", "peach", "nexus", "icecream", "marshmallow", "snake", "ketchup", "three",
    "jellybean", "two", "spider", "kebab", "four", "candy", "redfish", "farmand", "blueberry", "main",
];

pub fn registry() -> Vec<LemmaCheck> {
    let c = |id, scale, run| LemmaCheck { id, scale, run };
    vec![
        c("fries", "binary pairs |w|,|x|<=5, p<=3, raw tables vs structure search", fries as CheckFn),
        c("pear", "200 random DFAs <=5 states with a state collision, words <=6", pear),
        c("five", "200 binary samples |w|,|x|<=5, |u|,|v|<=3", five),
        c("onep", "200 random DFAs <=6 states, words <=6", onep),
        c("peach", "R in {G_1, {1}}, DFA inclusion plus the 100 shortest nested words each", peach),
        c("nexus", "canonical binary M_3, n=1, all w with |w|<=4", nexus),
        c("icecream", "canonical binary M_3 and M_4, all q, i", icecream),
        c("marshmallow", "canonical binary M_3 and M_4, all q, i<=|Q|+1", marshmallow),
        c("snake", "canonical binary M_3 and M_4, all q, i<=|Q|", snake),
        c("ketchup", "500 samples per k in {1,2}, u,v in {1,2}^<=8", ketchup),
        c("three", "k=1..3, exact minimal DFA", three),
        c("jellybean", "k=1..5, exact minimal DFA of the reversal", jellybean),
        c("two", "k=1 at p=1, k=2 at p=3", two),
        c("spider", "100 random pairs <=5 states, binary and ternary", spider),
        c("kebab", "k=4, 150 sampled canonical pairs <=3 states", kebab),
        c("four", "k=4, 100 sampled pairs <=3 states, 1 word each", four),
        c("candy", "500 random ternary words <=10", candy),
        c("redfish", "100 random ternary pairs <=4", redfish),
        c("farmand", "R=G_k^R, k in {1,2}, n in {1,2}, 100 samples each", farmand),
        c("blueberry", "n=1, w0 in {1, 2, 12}", blueberry),
        c("main", "(k,n) in {(1,1),(2,1)}", main_theorem),
    ]
}

/// Runs the named checks in registry order. Unknown ids are an error listing the
/// valid ones.
pub fn run_lemma_suite(ids: &[String], ctx: &Ctx) -> Result<Vec<LemmaOutcome>> {
    let all = registry();
    for id in ids {
        if !all.iter().any(|c| c.id == id) {
            return Err(Error::OutOfRange(format!(
                "unknown lemma id {id}; valid ids: {}",
                LEMMA_IDS.join(", ")
            )));
        }
    }
    Ok(all
        .iter()
        .filter(|c| ids.iter().any(|id| id == c.id))
        .map(|c| run_check(c, ctx))
        .collect())
}

pub fn run_check(check: &LemmaCheck, ctx: &Ctx) -> LemmaOutcome {
    let grade = |r: Result<Tally>| match r {
        Ok(t) if t.failed() => (LemmaStatus::Fail, t.samples, t.counterexample),
        Ok(t) => (LemmaStatus::Pass, t.samples, None),
        Err(e @ Error::SearchBudget { .. }) => (LemmaStatus::BudgetBounded, 0, Some(e.to_string())),
        Err(Error::Stage { source, stage }) if matches!(*source, Error::SearchBudget { .. }) => {
            (LemmaStatus::BudgetBounded, 0, Some(format!("{stage}: {source}")))
        }
        Err(e) => (LemmaStatus::Fail, 0, Some(format!("error: {e}"))),
    };
    let (mut status, samples, mut counterexample) = grade((check.run)(ctx, false));
    let (control, _, _) = grade((check.run)(ctx, true));
    if control != LemmaStatus::Fail && status == LemmaStatus::Pass {
        status = LemmaStatus::Fail;
        counterexample = Some("the mutated instance was not rejected".into());
    }
    LemmaOutcome {
        id: check.id,
        scale: check.scale,
        status,
        samples,
        counterexample,
        control,
    }
}

/// 0 when everything passed, 1 on any failure, 2 when the worst outcome is a
/// budget-bounded check.
pub fn exit_code(outcomes: &[LemmaOutcome]) -> i32 {
    match outcomes.iter().map(|o| o.status).max() {
        Some(LemmaStatus::Fail) => 1,
        Some(LemmaStatus::BudgetBounded) => 2,
        _ => 0,
    }
}

fn random_word(rng: &mut impl Rng, k: u8, max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    Word::new((0..len).map(|_| rng.random_range(0..k)).collect(), k).expect("symbols below k")
}

fn random_word_over(rng: &mut impl Rng, symbols: &[u8], min_len: usize, max_len: usize) -> Word {
    let len = rng.random_range(min_len..=max_len);
    Word::new(
        (0..len).map(|_| symbols[rng.random_range(0..symbols.len())]).collect(),
        3,
    )
    .expect("ternary symbols")
}

/// A random complete DFA, restricted to the states reachable from the start.
fn random_dfa(rng: &mut impl Rng, k: u8, max_states: usize) -> Dfa {
    let n = rng.random_range(1..=max_states);
    let table = (0..n * k as usize).map(|_| rng.random_range(0..n as u32)).collect();
    let accepting = (0..n).map(|_| rng.random_bool(0.5)).collect();
    Dfa::new(k, table, accepting).expect("valid table").canonical()
}

fn binary_words_up_to(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty(2)];
    for len in 1..=max_len {
        for bits in 0..(1u32 << len) {
            let symbols = (0..len).rev().map(|i| ((bits >> i) & 1) as u8).collect();
            out.push(Word::new(symbols, 2).expect("binary"));
        }
    }
    out
}

fn exact_value(w: &Word, x: &Word, budget: &SearchBudget) -> Result<usize> {
    let cert = exact_sep(w, x, budget)?;
    cert.value().ok_or_else(|| Error::SearchBudget {
        stage: format!("sep({w}, {x})"),
    })
}

/// End states of every word on every raw table with exactly `p` states.
fn raw_end_states(words: &[Word], p: usize) -> Vec<Vec<u8>> {
    let cells = 2 * p;
    let mut table = vec![0u32; cells];
    let mut out = Vec::new();
    loop {
        let d = Dfa::new(2, table.clone(), vec![false; p]).expect("valid table");
        out.push(words.iter().map(|w| d.run_symbols(0, w.symbols()) as u8).collect());
        let mut i = 0;
        while i < cells {
            table[i] += 1;
            if (table[i] as usize) < p {
                break;
            }
            table[i] = 0;
            i += 1;
        }
        if i == cells {
            return out;
        }
    }
}

fn fries(_: &Ctx, mutated: bool) -> Result<Tally> {
    let words = binary_words_up_to(5);
    let mut t = Tally::default();
    for p in 1..=3usize {
        let ends = raw_end_states(&words, p);
        for i in 0..words.len() {
            for j in 0..words.len() {
                if i == j {
                    continue;
                }
                // some (table, accepting set) accepts words[i] and rejects words[j]
                let raw = ends.iter().any(|e| {
                    (0..1u32 << p).any(|acc| (acc >> e[i]) & 1 == 1 && (acc >> e[j]) & 1 == 0)
                });
                let search_p = if mutated { p - 1 } else { p };
                let structural = search_p >= 1 && !no_separator_up_to(&words[i], &words[j], search_p);
                t.check(raw == structural, || {
                    format!("w={} x={} p={p}: raw={raw} structure={structural}", words[i], words[j])
                });
            }
        }
    }
    Ok(t)
}

fn pear(ctx: &Ctx, mutated: bool) -> Result<Tally> {
    let mut rng = ctx.rng("pear");
    let mut t = Tally::default();
    while t.samples < 200 && !t.failed() {
        let k = rng.random_range(2..=3u8);
        let d = random_dfa(&mut rng, k, 5);
        let w = random_word(&mut rng, k, 6);
        let w2 = random_word(&mut rng, k, 6);
        let x = random_word(&mut rng, k, 6);
        let same = d.run(0, &w)? == d.run(0, &w2)?;
        if !same && !mutated {
            continue;
        }
        let ok = d.run(0, &w.concat(&x))? == d.run(0, &w2.concat(&x))?;
        t.check(ok, || format!("d={:?} w={w} w'={w2} x={x}", d.to_text()));
    }
    Ok(t)
}

fn five(ctx: &Ctx, mutated: bool) -> Result<Tally> {
    let mut rng = ctx.rng("five");
    let mut t = Tally::default();
    while t.samples < 200 && !t.failed() {
        let w = random_word(&mut rng, 2, 5);
        let x = random_word(&mut rng, 2, 5);
        if w == x {
            continue;
        }
        let u = random_word(&mut rng, 2, 3);
        let v = random_word(&mut rng, 2, 3);
        let inner = exact_value(&w, &x, &ctx.budget)?;
        let outer = exact_value(&Word::join([&u, &w, &v]), &Word::join([&u, &x, &v]), &ctx.budget)?;
        let ok = if mutated { outer < inner } else { outer >= inner };
        t.check(ok, || format!("u={u} w={w} x={x} v={v}: {outer} vs {inner}"));
    }
    Ok(t)
}

fn onep(ctx: &Ctx, mutated: bool) -> Result<Tally> {
    let mut rng = ctx.rng("onep");
    let mut t = Tally::default();
    for _ in 0..200 {
        let k = rng.random_range(2..=3u8);
        let d = random_dfa(&mut rng, k, 6);
        let w = random_word(&mut rng, k, 6);
        let x = random_word(&mut rng, k, 6);
        let all = d.all_states();
        let a = d.image_under_word(&all, &w)?.len();
        let b = d.image_under_word(&all, &w.concat(&x))?.len();
        let ok = if mutated { b >= a + usize::from(a > 1) } else { a >= b };
        t.check(ok, || format!("d={:?} w={w} x={x}: {a} then {b}", d.to_text()));
    }
    Ok(t)
}

fn peach(_: &Ctx, mutated: bool) -> Result<Tally> {
    let mut t = Tally::default();
    let one = LangHandle::from_words("{1}", [&Word::ternary("1")?])?;
    let eleven = LangHandle::from_words("{11}", [&Word::ternary("11")?])?;
    let cases = [(build_g_k(1)?, build_g_k(1)?), (one.clone(), one)];
    for (r, inner) in cases {
        let s = segmented_closure(&r)?;
        // the mutated instance nests the closure of a different language
        let nested_base = if mutated { segmented_closure(&eleven)? } else { segmented_closure(&inner)? };
        let nested = segmented_closure_unchecked(&nested_base)?;
        let ok = s.dfa().includes(nested.dfa())?;
        t.check(ok, || {
            let extra = nested.dfa().combine(s.dfa(), BoolOp::AndNot).ok().and_then(|d| d.shortest_accepted());
            format!("{} escapes {}: {:?}", nested.provenance(), s.provenance(), extra.map(|w| w.to_string()))
        });
        // the same inclusion word by word, on the shortest 100 nested words
        for w in nested.words_up_to(40).take(100) {
            let ok = s.contains(&w)?;
            t.check(ok, || format!("{w} escapes {}", s.provenance()));
        }
    }
    Ok(t)
}

fn nexus(_: &Ctx, mutated: bool) -> Result<Tally> {
    let triple = CanonicalTriple::new(1)?;
    let h = if mutated { Word::zeros(5, 2) } else { triple.h };
    let words = binary_words_up_to(4);
    let mut t = Tally::default();
    for d in enumerate_canonical(3, 2) {
        for q in 0..d.state_count() {
            if !d.in_zero_cycle(q)? {
                continue;
            }
            for w in &words {
                let ok = d.run(q, &h.concat(w))? == d.run(q, w)?;
                t.check(ok, || format!("d={:?} q={q} w={w}", d.to_text()));
            }
        }
    }
    Ok(t)
}

fn small_machines() -> impl Iterator<Item = Dfa> {
    enumerate_canonical(4, 2)
}

fn icecream(_: &Ctx, mutated: bool) -> Result<Tally> {
    let mut t = Tally::default();
    for d in small_machines() {
        let n = d.state_count();
        for q in 0..n {
            let full = d.zpath_full(q)?.len();
            for i in 1..=n {
                let head = d.zpath(q, if mutated { i } else { i - 1 })?.len();
                let tail = d.zpath_full(d.run(q, &Word::zeros(i, 2))?)?.len();
                t.check(full == head + tail, || {
                    format!("d={:?} q={q} i={i}: {full} != {head} + {tail}", d.to_text())
                });
            }
        }
    }
    Ok(t)
}

fn marshmallow(_: &Ctx, mutated: bool) -> Result<Tally> {
    let mut t = Tally::default();
    for d in small_machines() {
        let n = d.state_count();
        for q in 0..n {
            let full = d.zpath_full(q)?;
            for i in 0..=n + 1 {
                let part = d.zpath(q, i)?;
                let bound = if mutated { i } else { i + 1 };
                let ok = part.len() <= bound && part.is_subset(&full)?;
                t.check(ok, || format!("d={:?} q={q} i={i}: |zpath|={}", d.to_text(), part.len()));
            }
        }
    }
    Ok(t)
}

fn snake(_: &Ctx, mutated: bool) -> Result<Tally> {
    let mut t = Tally::default();
    for d in small_machines() {
        let n = d.state_count();
        for q in 0..n {
            for i in 0..=n {
                let end = d.run(q, &Word::zeros(i, 2))?;
                if d.in_zero_cycle(end)? && !mutated {
                    continue;
                }
                let size = d.zpath(q, i)?.len();
                t.check(size == i + 1 && size <= n, || {
                    format!("d={:?} q={q} i={i}: |zpath|={size}", d.to_text())
                });
            }
        }
    }
    Ok(t)
}

/// A random word of `G_k`: a concatenation of up to three words of `L_k`.
fn random_g_word(rng: &mut impl Rng, l_k: &[Word]) -> Word {
    let parts = rng.random_range(0..=3);
    let mut w = Word::empty(3);
    for _ in 0..parts {
        w = w.concat(&l_k[rng.random_range(0..l_k.len())]);
    }
    w
}

fn ketchup(ctx: &Ctx, mutated: bool) -> Result<Tally> {
    let mut rng = ctx.rng("ketchup");
    let mut t = Tally::default();
    for k in 1..=2usize {
        let g = build_g_k(k)?;
        let (l_k, _) = build_l_k(k)?;
        let ones = if mutated { 2 * k } else { 2 * k + 1 };
        let middle = Word::ternary(&format!("{}2", "1".repeat(ones)))?;
        for _ in 0..500 {
            let pick = |rng: &mut ChaCha8Rng| {
                if rng.random_bool(0.5) {
                    random_g_word(rng, &l_k)
                } else {
                    random_word_over(rng, &[1, 2], 0, 8)
                }
            };
            let u = pick(&mut rng);
            let v = pick(&mut rng);
            let lhs = g.contains(&Word::join([&u, &middle, &v]))?;
            let rhs = g.contains(&u)? && g.contains(&v)?;
            t.check(lhs == rhs, || format!("k={k} u={u} v={v}: {lhs} vs {rhs}"));
        }
    }
    Ok(t)
}

fn three(_: &Ctx, mutated: bool) -> Result<Tally> {
    let mut t = Tally::default();
    for k in 1..=3usize {
        let stc = build_g_k(k)?.state_complexity();
        let bound = if mutated { 1 << (k + 3) } else { 1 << k };
        t.check(stc >= bound, || format!("k={k}: stc(G_k)={stc} < {bound}"));
    }
    Ok(t)
}

fn jellybean(_: &Ctx, mutated: bool) -> Result<Tally> {
    let mut t = Tally::default();
    for k in 1..=5usize {
        let g = build_g_k(k)?;
        // the mutated instance forgets to reverse
        let stc = if mutated { g.state_complexity() } else { g.reversed().state_complexity() };
        t.check(stc <= 5 * k + 3, || format!("k={k}: stc={stc} > {}", 5 * k + 3));
    }
    Ok(t)
}

fn two(ctx: &Ctx, mutated: bool) -> Result<Tally> {
    let mut t = Tally::default();
    for (k, p) in [(1usize, 1usize), (2, 3)] {
        let z = search_z_k(k, &ctx.budget)?;
        let g = build_g_k(k)?;
        let h = if mutated {
            LangHandle::from_words("{1}", [&Word::ternary("1")?])?
        } else {
            h_from_g(&g, k)?
        };
        let ok = z.certified() && !z.word.is_empty() && g.contains(&z.word)? && lsep_lower_check(&z.word, &h, p)?;
        t.check(ok, || format!("k={k} z={} against {} at p={p}", z.word, h.provenance()));
    }
    Ok(t)
}

fn spider(ctx: &Ctx, mutated: bool) -> Result<Tally> {
    let mut rng = ctx.rng("spider");
    let mut t = Tally::default();
    for _ in 0..100 {
        let k = rng.random_range(2..=3u8);
        let a = random_dfa(&mut rng, k, 5);
        let b = random_dfa(&mut rng, k, 5);
        let e = a.combine(&b, BoolOp::And)?;
        let bound = if mutated {
            a.state_count().max(b.state_count()) - 1
        } else {
            a.state_count() * b.state_count()
        };
        let w = random_word(&mut rng, k, 8);
        let ok = e.state_count() <= bound && e.accepts(&w)? == (a.accepts(&w)? && b.accepts(&w)?);
        t.check(ok, || format!("a={:?} b={:?} w={w}: {} states", a.to_text(), b.to_text(), e.state_count()));
    }
    Ok(t)
}

/// A uniformly chosen canonical structure with at most `p` ternary states and a
/// random accepting set. The structures are materialized once by the caller.
fn pick_structure(rng: &mut impl Rng, pool: &[Dfa]) -> Dfa {
    let d = &pool[rng.random_range(0..pool.len())];
    d.with_accepting_mask(rng.random_range(0..1u64 << d.state_count()))
}

const DESK_K: usize = 4;

fn kebab(ctx: &Ctx, mutated: bool) -> Result<Tally> {
    let mut rng = ctx.rng("kebab");
    let z = search_z_k(DESK_K, &ctx.budget)?.word;
    let g = build_g_k(DESK_K)?;
    let h = h_from_g(&g, DESK_K)?;
    let pool: Vec<Dfa> = enumerate_canonical(free_state_limit(DESK_K), 3).collect();
    let mut t = Tally::default();
    for _ in 0..150 {
        let d = pick_structure(&mut rng, &pool);
        // the mutated instance pairs d with G_k itself, far above the size bound
        let d2 = if mutated { g.dfa().clone() } else { pick_structure(&mut rng, &pool) };
        let goal = (d.run(0, &z)?, d2.run(0, &z)?);
        let found = shortest_common_word(&d, &d2, h.dfa(), goal);
        t.check(found.is_some(), || format!("z={z} d={:?} d2={:?}", d.to_text(), d2.to_text()));
        if t.failed() {
            break;
        }
    }
    Ok(t)
}

/// A random word of `H'_k(0^+H'_k)*` with up to three segments.
fn random_free_input(rng: &mut impl Rng, z: &Word, g: &LangHandle) -> Result<Word> {
    let segments = rng.random_range(1..=3);
    let mut parts = Vec::new();
    for i in 0..segments {
        if i > 0 {
            parts.push(Word::zeros(rng.random_range(1..=3), 3));
        }
        let seg = if rng.random_bool(0.4) {
            z.clone()
        } else {
            loop {
                let cand = random_word_over(rng, &[1, 2], 1, 6);
                if !g.contains(&cand)? {
                    break cand;
                }
            }
        };
        parts.push(seg);
    }
    Ok(Word::join(parts.iter()))
}

fn four(ctx: &Ctx, mutated: bool) -> Result<Tally> {
    let mut rng = ctx.rng("four");
    let z = search_z_k(DESK_K, &ctx.budget)?.word;
    let g = build_g_k(DESK_K)?;
    let free = FreeContext::new(DESK_K, &z)?;
    let pool: Vec<Dfa> = enumerate_canonical(free_state_limit(DESK_K), 3).collect();
    let mut t = Tally::default();
    for _ in 0..100 {
        let d = pick_structure(&mut rng, &pool);
        let d2 = pick_structure(&mut rng, &pool);
        let w = random_free_input(&mut rng, &z, &g)?;
        let result = if mutated {
            // a replacement must also fool the minimal DFA of the target language
            let a = free.target().dfa();
            let goal = (d.run(0, &w)?, a.run(0, &w)?);
            shortest_common_word(&d, a, a, goal).ok_or_else(|| Error::Precondition("no replacement".into()))
        } else {
            free.free_word(&d, &d2, &w)
        };
        let ok = match &result {
            Ok(w2) => {
                d.run(0, w2)? == d.run(0, &w)? && d2.run(0, w2)? == d2.run(0, &w)? && free.target().contains(w2)?
            }
            Err(_) => false,
        };
        t.check(ok, || format!("w={w} d={:?} d2={:?}: {result:?}", d.to_text(), d2.to_text()));
        if t.failed() {
            break;
        }
    }
    Ok(t)
}

fn candy(ctx: &Ctx, mutated: bool) -> Result<Tally> {
    let mut rng = ctx.rng("candy");
    let mut t = Tally::default();
    for _ in 0..500 {
        let w = random_word(&mut rng, 3, 10);
        let side = if mutated { Side::Right } else { Side::Left };
        let ok = encode(&w, Side::Right).reversed() == encode(&w.reversed(), side);
        t.check(ok, || format!("w={w}"));
    }
    Ok(t)
}

fn redfish(ctx: &Ctx, mutated: bool) -> Result<Tally> {
    let mut rng = ctx.rng("redfish");
    let mut t = Tally::default();
    while t.samples < 100 && !t.failed() {
        let w = random_word(&mut rng, 3, 4);
        let x = random_word(&mut rng, 3, 4);
        if w == x {
            continue;
        }
        let base = exact_value(&w, &x, &ctx.budget)?;
        let encoded = exact_value(&encode(&w, Side::Left), &encode(&x, Side::Left), &ctx.budget)?;
        let ok = if mutated { encoded < base } else { encoded >= base };
        t.check(ok, || format!("w={w} x={x}: {encoded} vs {base}"));
    }
    Ok(t)
}

/// A random `W ∈ (({1,2}* − R)0^+)*(R − {ε})`; the mutated form ends in a segment
/// outside `R`.
fn random_farmand_prefix(rng: &mut impl Rng, r: &LangHandle, in_r: &[Word], mutated: bool) -> Result<Word> {
    let outside = |rng: &mut _| -> Result<Word> {
        loop {
            let cand = random_word_over(rng, &[1, 2], 0, 6);
            if !r.contains(&cand)? {
                return Ok(cand);
            }
        }
    };
    let mut parts = Vec::new();
    for _ in 0..rng.random_range(0..=2) {
        parts.push(outside(rng)?);
        parts.push(Word::zeros(rng.random_range(1..=4), 3));
    }
    parts.push(if mutated {
        outside(rng)?
    } else {
        in_r[rng.random_range(0..in_r.len())].clone()
    });
    Ok(Word::join(parts.iter()))
}

fn farmand(ctx: &Ctx, mutated: bool) -> Result<Tally> {
    let mut rng = ctx.rng("farmand");
    let mut t = Tally::default();
    for k in 1..=2usize {
        let r = build_g_k(k)?.reversed();
        let in_r: Vec<Word> = r.words_up_to(12).filter(|w| !w.is_empty()).take(40).collect();
        for n in 1..=2usize {
            let triple = CanonicalTriple::new(n)?;
            let d = farmand_dfa(&r, n)?;
            let bound = 2 * r.state_complexity() + n + 4;
            for _ in 0..100 {
                let prefix = encode(&random_farmand_prefix(&mut rng, &r, &in_r, mutated)?, Side::Right);
                let tail = Word::binary("1")?.concat(&random_word(&mut rng, 2, 8));
                let w = Word::join([&prefix, &triple.f, &tail]);
                let x = Word::join([&prefix, &triple.g, &tail]);
                let ok = d.state_count() <= bound && check_separates(&d, &w, &x);
                t.check(ok, || format!("k={k} n={n} prefix={prefix} tail={tail}"));
            }
        }
    }
    Ok(t)
}

fn blueberry(ctx: &Ctx, mutated: bool) -> Result<Tally> {
    let triple = CanonicalTriple::new(1)?;
    let mut t = Tally::default();
    for w0 in ["1", "2", "12"] {
        let w0 = Word::ternary(w0)?;
        // the mutated instance skips the search and uses w0 unpadded
        let w = if mutated { w0.clone() } else { search_c_n(1, &w0, &ctx.budget)? };
        let member = segmented_closure_of_word(&w0)?.contains(&w)?;
        let lhs = Word::join([&w, &triple.f, &w]);
        let rhs = Word::join([&w, &triple.g, &w]);
        let ok = member && no_separator_up_to(&lhs, &rhs, 3);
        t.check(ok, || format!("w0={w0} w={w}"));
    }
    Ok(t)
}

fn main_theorem(ctx: &Ctx, mutated: bool) -> Result<Tally> {
    let mut t = Tally::default();
    for (k, n) in [(1usize, 1usize), (2, 1)] {
        let mut report = witness_pair(k, n, &ctx.budget, Assembly::ReversalReady)?;
        if mutated {
            report = report.with_flipped_bit(report.control_index())?;
        }
        let v = verify_witness(&report, &ctx.budget)?;
        if [v.lower_status, v.blueberry_status].contains(&CheckStatus::BudgetBounded) {
            return Err(Error::SearchBudget {
                stage: format!("witness (k={k}, n={n})"),
            });
        }
        let ok = v.all_certified()
            && v.upper_states().is_some_and(|s| s <= v.upper_claim)
            && v.w_prime != v.x_prime;
        t.check(ok, || v.to_json());
    }
    Ok(t)
}
