//! Length-ordered searches for the existential objects: the word `C_n(w0)` whose
//! padding defeats every DFA with at most `2n+1` states, and the word `z_k ∈ G_k`
//! that no small DFA isolates from `H_k`.
//!
//! Every result is certified by the solver and then re-certified by an independent
//! method before it is returned.

use crate::constructions::CanonicalTriple;
use crate::error::{Error, Result};
use crate::lang::{build_g_k, h_from_g, segmented_closure_of_word, LangHandle};
use crate::sep::{
    lsep_by_raw_tables, no_separator_by_enumeration, no_separator_within, LsepOracle, Meter,
    SearchBudget,
};
use crate::word::Word;

/// Largest `p` for which lsep lower bounds are checked exhaustively.
pub const EXHAUSTIVE_LSEP_STATES: usize = 3;

/// Calls `visit` on every run-length vector `(a_1, …, a_m)`, `1 ≤ a_i ≤ cap`, with
/// `Σ (a_i + unit) = extra`, in lexicographic order. Stops early when `visit`
/// returns `Some`.
pub(crate) fn for_each_runs<T>(
    extra: usize,
    unit: usize,
    cap: usize,
    visit: &mut dyn FnMut(&[usize]) -> Option<T>,
) -> Option<T> {
    fn go<T>(
        left: usize,
        unit: usize,
        cap: usize,
        runs: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> Option<T>,
    ) -> Option<T> {
        if left == 0 {
            return visit(runs);
        }
        for a in 1..=cap {
            if a + unit > left {
                break;
            }
            runs.push(a);
            let found = go(left - a - unit, unit, cap, runs, visit);
            runs.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
    go(extra, unit, cap, &mut Vec::new(), visit)
}

/// `w0 0^{a_1} w0 … 0^{a_m} w0`.
pub(crate) fn pad(w0: &Word, runs: &[usize]) -> Word {
    let mut symbols = w0.symbols().to_vec();
    for &a in runs {
        symbols.extend(std::iter::repeat_n(0, a));
        symbols.extend_from_slice(w0.symbols());
    }
    Word::new(symbols, w0.alphabet_size()).expect("same alphabet")
}

/// Independent confirmation that no DFA with at most `p` states separates the pair:
/// full enumeration when the structure count is small, otherwise the lazy search
/// with the roles of the two words exchanged.
pub(crate) fn recertify_no_separator(w: &Word, x: &Word, p: usize, meter: &mut Meter) -> Option<bool> {
    let k = w.alphabet_size().max(x.alphabet_size());
    let small = (k == 2 && p <= 4) || (k == 3 && p <= 3);
    if small {
        Some(no_separator_by_enumeration(w, x, p))
    } else {
        no_separator_within(x, w, p, meter)
    }
}

/// Finds `w ∈ w0(0^+w0)*` such that no DFA with `2n+1` states separates
/// `w f_n w` from `w g_n w`. Candidates come in length order with every 0-run at
/// most `2n+2` long.
pub fn search_c_n(n: usize, w0: &Word, budget: &SearchBudget) -> Result<Word> {
    let triple = CanonicalTriple::new(n)?;
    if w0.is_empty() {
        return Err(Error::Precondition("w0 must be nonempty".into()));
    }
    let closure = segmented_closure_of_word(w0)?;
    let p = 2 * n + 1;
    let cap = 2 * n + 2;
    let mut meter = Meter::new(budget);

    for extra in 0.. {
        let mut outcome: Option<Result<Word>> = None;
        for_each_runs(extra, w0.len(), cap, &mut |runs| {
            let w = pad(w0, runs);
            let lhs = Word::join([&w, &triple.f, &w]);
            let rhs = Word::join([&w, &triple.g, &w]);
            match no_separator_within(&lhs, &rhs, p, &mut meter) {
                None => Some(Err(Error::SearchBudget {
                    stage: format!("C_n search (n={n}, w0={w0})"),
                })),
                Some(false) => None,
                Some(true) => Some(confirm_c_n(w, &lhs, &rhs, p, &closure, &mut meter)),
            }
            .inspect(|r| outcome = Some(r.clone()))
        });
        if let Some(result) = outcome {
            return result;
        }
        if meter.is_exhausted() {
            return Err(Error::SearchBudget {
                stage: format!("C_n search (n={n}, w0={w0})"),
            });
        }
    }
    unreachable!("the candidate stream is infinite")
}

fn confirm_c_n(w: Word, lhs: &Word, rhs: &Word, p: usize, closure: &LangHandle, meter: &mut Meter) -> Result<Word> {
    match recertify_no_separator(lhs, rhs, p, meter) {
        Some(true) => {}
        Some(false) => {
            return Err(Error::Internal(format!(
                "C_n candidate {w} failed independent re-certification"
            )))
        }
        None => {
            return Err(Error::SearchBudget {
                stage: "C_n re-certification".into(),
            })
        }
    }
    if !closure.contains(&w.with_alphabet(3)?)? {
        return Err(Error::Internal(format!("{w} is not in {}", closure.provenance())));
    }
    Ok(w)
}

/// A candidate for `z_k` together with how far its lsep lower bound is proven.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZWord {
    pub k: usize,
    pub word: Word,
    /// No DFA with at most this many states accepts `word` and rejects all of `H_k`.
    pub checked_states: usize,
    /// `2^k - 1`: the size a complete certificate has to rule out.
    pub target_states: usize,
}

impl ZWord {
    pub fn certified(&self) -> bool {
        self.checked_states >= self.target_states
    }
}

/// Searches `G_k − {ε}` in length-lexicographic order for a word that every DFA
/// with `2^k − 1` states fails to isolate from `H_k`. When `2^k − 1` exceeds the
/// exhaustive range, the first word passing the check at that range is returned
/// with `certified() == false`.
pub fn search_z_k(k: usize, budget: &SearchBudget) -> Result<ZWord> {
    let g = build_g_k(k)?;
    let h = h_from_g(&g, k)?;
    search_z_k_in(k, &g, &h, budget)
}

pub(crate) fn search_z_k_in(k: usize, g: &LangHandle, h: &LangHandle, budget: &SearchBudget) -> Result<ZWord> {
    let target = (1usize << k) - 1;
    let p = target.min(EXHAUSTIVE_LSEP_STATES);
    let oracle = LsepOracle::new(h.dfa(), p);
    let mut meter = Meter::new(budget);
    for len in 1.. {
        for z in g.words_of_length(len) {
            if !meter.tick() {
                return Err(Error::SearchBudget {
                    stage: format!("z_k search (k={k})"),
                });
            }
            if oracle.check(&z)? {
                if !lsep_by_raw_tables(&z, h.dfa(), p)? {
                    return Err(Error::Internal(format!(
                        "z_k candidate {z} failed independent re-certification"
                    )));
                }
                return Ok(ZWord {
                    k,
                    word: z,
                    checked_states: p,
                    target_states: target,
                });
            }
        }
    }
    unreachable!("G_k is infinite")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_vectors_in_order() {
        let mut seen = Vec::new();
        for_each_runs::<()>(5, 1, 3, &mut |r| {
            seen.push(r.to_vec());
            None
        });
        assert_eq!(seen, vec![vec![1, 2], vec![2, 1]]);
        let mut count = 0;
        for_each_runs::<()>(0, 1, 3, &mut |r| {
            assert!(r.is_empty());
            count += 1;
            None
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn pad_builds_segments() {
        let w0 = Word::ternary("12").unwrap();
        assert_eq!(pad(&w0, &[]).to_string(), "12");
        assert_eq!(pad(&w0, &[1, 3]).to_string(), "1201200012");
    }
}
