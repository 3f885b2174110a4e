//! Acceptance gate: runs each criterion at its stated tolerance and prints one
//! pass/fail line per criterion. Exits nonzero when any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use sepwords::constructions::{search_c_n, search_z_k, verify_witness, witness_pair, Assembly, CanonicalTriple, CheckStatus};
use sepwords::harness::atlas::atlas_csv;
use sepwords::harness::{compute_atlas, run_lemma_suite, Cache, Ctx, LemmaStatus};
use sepwords::lang::{build_g_k, build_h_k};
use sepwords::sep::{check_separates, lsep_by_raw_tables, lsep_lower_check, no_separator_up_to};
use sepwords::{exact_sep, SearchBudget, Word};

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn within(started: Instant, limit: Duration) -> Result<(), String> {
    let spent = started.elapsed();
    ensure(spent < limit, format!("took {spent:?}, limit {limit:?}"))
}

fn criterion_1() -> Check {
    let budget = SearchBudget::default();
    let started = Instant::now();
    let mut found = Vec::new();
    for n in 1..=2 {
        let t = CanonicalTriple::new(n).map_err(err)?;
        let c = exact_sep(&t.f, &t.g, &budget).map_err(err)?;
        ensure(c.exact(), format!("n={n}: only {} <= sep <= {}", c.lower, c.upper))?;
        ensure(c.lower == n + 2, format!("n={n}: sep = {}, expected {}", c.lower, n + 2))?;
        ensure(check_separates(&c.witness, &c.w, &c.x), format!("n={n}: witness does not separate"))?;
        found.push(format!("sep(0^{}, 0^{}) = {}", t.f.len(), t.g.len(), c.lower));
    }
    within(started, Duration::from_secs(10))?;
    Ok(format!("{} in {:?}", found.join(", "), started.elapsed()))
}

fn criterion_2() -> Check {
    let started = Instant::now();
    let c = search_c_n(1, &Word::ternary("1").map_err(err)?, &SearchBudget::default()).map_err(err)?;
    let t = CanonicalTriple::new(1).map_err(err)?;
    let lhs = Word::join([&c, &t.f, &c]);
    let rhs = Word::join([&c, &t.g, &c]);
    ensure(no_separator_up_to(&lhs, &rhs, 3), format!("C = {c}: a 3-state separator exists"))?;
    within(started, Duration::from_secs(600))?;
    Ok(format!("C = {c}, sep(C f C, C g C) >= 4 in {:?}", started.elapsed()))
}

fn criterion_3() -> Check {
    let started = Instant::now();
    let mut forward = Vec::new();
    for k in 1..=3 {
        let s = build_g_k(k).map_err(err)?.state_complexity();
        ensure(s >= 1 << k, format!("stc(G_{k}) = {s} < {}", 1 << k))?;
        forward.push(s.to_string());
    }
    let mut backward = Vec::new();
    for k in 1..=5 {
        let s = build_g_k(k).map_err(err)?.reversed().state_complexity();
        ensure(s <= 5 * k + 3, format!("stc(G_{k}^R) = {s} > {}", 5 * k + 3))?;
        backward.push(s.to_string());
    }
    within(started, Duration::from_secs(300))?;
    Ok(format!(
        "stc(G_1..3) = [{}], stc(G_1..5^R) = [{}] in {:?}",
        forward.join(", "),
        backward.join(", "),
        started.elapsed()
    ))
}

fn criterion_4() -> Check {
    let started = Instant::now();
    let budget = SearchBudget::default();
    let mut found = Vec::new();
    for (k, p) in [(1, 1), (2, 3)] {
        let z = search_z_k(k, &budget).map_err(err)?;
        let h = build_h_k(k).map_err(err)?;
        ensure(z.certified(), format!("z_{k} = {} not certified", z.word))?;
        ensure(
            lsep_lower_check(&z.word, &h, p).map_err(err)?,
            format!("z_{k} = {}: structure search finds an isolating DFA at p = {p}", z.word),
        )?;
        ensure(
            lsep_by_raw_tables(&z.word, h.dfa(), p).map_err(err)?,
            format!("z_{k} = {}: raw tables find an isolating DFA at p = {p}", z.word),
        )?;
        found.push(format!("z_{k} = {} at p = {p}", z.word));
    }
    within(started, Duration::from_secs(1800))?;
    Ok(format!("{} in {:?}", found.join(", "), started.elapsed()))
}

const PROPERTY_SUITES: [&str; 12] = [
    "five", "onep", "pear", "peach", "ketchup", "nexus", "icecream", "marshmallow", "snake", "candy", "redfish",
    "spider",
];

fn criterion_5() -> Check {
    let ids: Vec<String> = PROPERTY_SUITES.iter().map(|s| s.to_string()).collect();
    let ctx = Ctx {
        seed: 0x5eed,
        budget: SearchBudget::default(),
    };
    let outcomes = run_lemma_suite(&ids, &ctx).map_err(err)?;
    for o in &outcomes {
        ensure(
            o.status == LemmaStatus::Pass,
            format!("{}: {} {:?}", o.id, o.status.as_str(), o.counterexample),
        )?;
        ensure(o.samples >= 100, format!("{}: only {} samples", o.id, o.samples))?;
        ensure(o.control == LemmaStatus::Fail, format!("{}: mutated control did not fail", o.id))?;
    }
    let min = outcomes.iter().map(|o| o.samples).min().unwrap_or(0);
    Ok(format!("{} suites pass, min samples {min}, all controls fail", outcomes.len()))
}

fn binary_words_up_to(max_len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        for bits in 0..1u32 << len {
            out.push((0..len).rev().map(|i| ((bits >> i) & 1) as u8).collect());
        }
    }
    out
}

/// End states of every word under every raw binary table with `p` states.
fn raw_ends(words: &[Vec<u8>], p: usize) -> Vec<Vec<usize>> {
    let cells = 2 * p;
    let mut out = Vec::new();
    let mut t = vec![0usize; cells];
    loop {
        out.push(
            words
                .iter()
                .map(|w| w.iter().fold(0, |q, &a| t[q * 2 + a as usize]))
                .collect(),
        );
        let mut i = 0;
        while i < cells {
            t[i] += 1;
            if t[i] < p {
                break;
            }
            t[i] = 0;
            i += 1;
        }
        if i == cells {
            return out;
        }
    }
}

fn criterion_6() -> Check {
    let words = binary_words_up_to(5);
    let mut pairs = 0;
    for p in 1..=3 {
        let ends = raw_ends(&words, p);
        for i in 0..words.len() {
            for j in 0..i {
                // raw: some table plus accepting set accepts words[i] and rejects words[j]
                let raw = ends
                    .iter()
                    .any(|e| (0..1u32 << p).any(|acc| (acc >> e[i]) & 1 == 1 && (acc >> e[j]) & 1 == 0));
                let w = Word::new(words[i].clone(), 2).map_err(err)?;
                let x = Word::new(words[j].clone(), 2).map_err(err)?;
                let structural = !no_separator_up_to(&w, &x, p);
                ensure(raw == structural, format!("({w}, {x}) at p = {p}: raw {raw}, structure {structural}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} (pair, p) cases agree"))
}

fn criterion_7() -> Check {
    let budget = SearchBudget::default();
    let mut found = Vec::new();
    for (k, n) in [(1usize, 1usize), (2, 1)] {
        let r = witness_pair(k, n, &budget, Assembly::ReversalReady).map_err(err)?;
        let v = verify_witness(&r, &budget).map_err(err)?;
        let ceil_half = (1..).find(|c: &usize| c * c >= 1 << k).unwrap();
        let need = (2 * n + 2).min(ceil_half);
        ensure(v.lower_status == CheckStatus::Certified, format!("k={k}: lower {}", v.lower_status))?;
        ensure(v.lower_verified_to >= need, format!("k={k}: lower verified to {} < {need}", v.lower_verified_to))?;
        ensure(
            no_separator_up_to(&v.w_prime, &v.x_prime, need - 1),
            format!("k={k}: a {}-state separator exists", need - 1),
        )?;
        if (k, n) == (1, 1) {
            ensure(v.blueberry_status == CheckStatus::Certified, format!("k=1: blueberry {}", v.blueberry_status))?;
            ensure(v.blueberry_verified_to >= 4, format!("k=1: blueberry verified to {}", v.blueberry_verified_to))?;
        }
        let limit = n + 10 * k + 10;
        let d = v.upper_witness.as_ref().ok_or(format!("k={k}: no upper witness"))?;
        ensure(v.upper_status == CheckStatus::Certified, format!("k={k}: upper {}", v.upper_status))?;
        ensure(d.state_count() <= limit, format!("k={k}: {} states > {limit}", d.state_count()))?;
        ensure(
            check_separates(d, &v.w_prime.reversed(), &v.x_prime.reversed()),
            format!("k={k}: upper witness does not separate the reversed pair"),
        )?;
        let broken = verify_witness(&v.with_flipped_bit(v.control_index()).map_err(err)?, &budget).map_err(err)?;
        ensure(broken.upper_status == CheckStatus::Failed, format!("k={k}: negative control {}", broken.upper_status))?;
        found.push(format!(
            "(k={k}, n={n}) |w'| = {}, lower >= {}, upper {} <= {limit}",
            v.w_prime.len(),
            v.lower_verified_to.max(v.blueberry_verified_to),
            d.state_count()
        ));
    }
    Ok(format!("{}; controls fail", found.join("; ")))
}

fn raw_atlas(max_len: usize) -> Vec<usize> {
    let words = binary_words_up_to(max_len);
    let mut need = vec![0usize; max_len + 1];
    let mut pending: Vec<(usize, usize)> = (0..words.len()).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
    for p in 1..=4 {
        let ends = raw_ends(&words, p);
        pending.retain(|&(i, j)| {
            let separable = ends.iter().any(|e| e[i] != e[j]);
            if separable {
                let n = words[i].len().max(words[j].len());
                need[n] = need[n].max(p);
            }
            !separable
        });
    }
    assert!(pending.is_empty());
    (1..=max_len).map(|n| *need[..=n].iter().max().unwrap()).collect()
}

fn criterion_8() -> Check {
    let budget = SearchBudget::default();
    let dir = tempfile::tempdir().map_err(err)?;
    let path = dir.path().join("atlas.jsonl");
    let (cold_rows, cold_stats) = compute_atlas(6, &budget, &mut Cache::open(&path).map_err(err)?).map_err(err)?;
    let (warm_rows, warm_stats) = compute_atlas(6, &budget, &mut Cache::open(&path).map_err(err)?).map_err(err)?;
    let (cold, warm) = (atlas_csv(&cold_rows), atlas_csv(&warm_rows));
    ensure(cold == warm, "cold and warm tables differ")?;
    ensure(warm_stats.searches == 0, format!("warm run searched {} pairs", warm_stats.searches))?;
    ensure(cold_rows.iter().all(|r| r.exact()), "some S(n) is only bounded")?;
    let values: Vec<usize> = cold_rows.iter().map(|r| r.lower).collect();
    ensure(values.windows(2).all(|p| p[0] <= p[1]), format!("not nondecreasing: {values:?}"))?;
    let oracle = raw_atlas(6);
    ensure(values == oracle, format!("S = {values:?}, raw oracle {oracle:?}"))?;
    Ok(format!(
        "S(1..6) = {values:?}, cold searches {}, warm searches 0, byte-identical",
        cold_stats.searches
    ))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Check); 8] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
    ];
    let mut failed = 0;
    for (n, run) in criteria {
        match run() {
            Ok(detail) => println!("criterion {n}: PASS {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n}: FAIL {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
