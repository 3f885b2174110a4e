//! `S(n)`: the largest `sep(w, x)` over distinct binary words of length at most `n`.

use std::fmt::Write as _;

use crate::harness::cache::Cache;
use crate::sep::{exact_sep, upper_bound_certificate, SearchBudget};
use crate::word::{to_digits, Word};
use crate::error::Result;

/// Largest `max_len` accepted without an explicit override.
pub const DEFAULT_ATLAS_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtlasRow {
    pub n: usize,
    /// Proven lower bound on `S(n)`; equal to `upper` when exact.
    pub lower: usize,
    pub upper: usize,
    /// A pair attaining `lower`.
    pub w: Word,
    pub x: Word,
}

impl AtlasRow {
    pub fn exact(&self) -> bool {
        self.lower == self.upper
    }

    /// `"3"` when exact, `">=3"` otherwise.
    pub fn display_value(&self) -> String {
        if self.exact() {
            self.lower.to_string()
        } else {
            format!(">={}", self.lower)
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AtlasStats {
    pub pairs: u64,
    pub filtered: u64,
    pub cache_hits: u64,
    pub searches: u64,
}

pub fn binary_words_up_to(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty(2)];
    for len in 1..=max_len {
        for bits in 0..(1u32 << len) {
            let symbols = (0..len).rev().map(|i| ((bits >> i) & 1) as u8).collect();
            out.push(Word::new(symbols, 2).expect("binary"));
        }
    }
    out
}

/// Computes `S(1) … S(max_len)`. Pairs are visited in order of their longer word,
/// so row `n` only has to look at pairs whose longer word has length exactly `n`.
/// A pair is skipped when the cheap upper bound (shortest-word acceptor or a
/// length counter) cannot beat the running maximum; every other pair is solved
/// exactly, consulting `cache` first.
pub fn compute_atlas(
    max_len: usize,
    budget: &SearchBudget,
    cache: &mut Cache,
) -> Result<(Vec<AtlasRow>, AtlasStats)> {
    let words = binary_words_up_to(max_len);
    let mut stats = AtlasStats::default();
    let mut rows = Vec::new();
    let mut best: Option<(usize, usize, Word, Word)> = None;
    for n in 1..=max_len {
        for (i, w) in words.iter().enumerate() {
            if w.len() != n {
                continue;
            }
            for x in &words[..i] {
                stats.pairs += 1;
                let floor = best.as_ref().map_or(0, |b| b.0);
                if upper_bound_certificate(w, x, 2).upper <= floor {
                    stats.filtered += 1;
                    continue;
                }
                let cert = match cache.get_certificate(w, x) {
                    Some(c) => {
                        stats.cache_hits += 1;
                        c
                    }
                    None => {
                        stats.searches += 1;
                        let c = exact_sep(w, x, budget)?;
                        cache.store_certificate(&c)?;
                        c
                    }
                };
                let upper_max = best.as_ref().map_or(0, |b| b.1).max(cert.upper);
                if cert.lower > floor {
                    best = Some((cert.lower, upper_max, w.clone(), x.clone()));
                } else if let Some(b) = best.as_mut() {
                    b.1 = upper_max;
                }
            }
        }
        let (lower, upper, w, x) = best.clone().expect("n >= 1 has at least one pair");
        rows.push(AtlasRow { n, lower, upper, w, x });
    }
    Ok((rows, stats))
}

pub fn atlas_csv(rows: &[AtlasRow]) -> String {
    let mut out = String::from("n,S,exact,w,x\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{},{}", r.n, r.display_value(), r.exact(), to_digits(&r.w), to_digits(&r.x));
    }
    out
}

pub fn atlas_json(rows: &[AtlasRow]) -> serde_json::Value {
    serde_json::Value::Array(
        rows.iter()
            .map(|r| {
                serde_json::json!({
                    "n": r.n,
                    "S": r.display_value(),
                    "lower": r.lower,
                    "upper": r.upper,
                    "exact": r.exact(),
                    "w": to_digits(&r.w),
                    "x": to_digits(&r.x),
                })
            })
            .collect(),
    )
}
