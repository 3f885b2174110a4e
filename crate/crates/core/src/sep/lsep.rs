//! Lower-bound checks for `lsep(w, L)`: the fewest states of a DFA that accepts `w`
//! and rejects every word of `L`.
//!
//! For a fixed transition structure `D`, such an accepting set exists iff the end
//! state of `w` is not reached by any word of `L`. The set of states reached by `L`
//! only depends on `D`, so it is computed once per structure and reused for every
//! candidate `w`.

use std::collections::VecDeque;

use crate::dfa::{enumerate_canonical, BoolOp, Dfa};
use crate::error::{Error, Result};
use crate::lang::LangHandle;
use crate::word::Word;

/// Precomputed `{ δ_D(u) : u ∈ L }` for every canonical structure `D` with at most
/// `p` states.
pub struct LsepOracle {
    p: usize,
    language: Dfa,
    structures: Vec<(Dfa, Vec<bool>)>,
}

impl LsepOracle {
    pub fn new(language: &Dfa, p: usize) -> Self {
        let structures = enumerate_canonical(p.max(1), language.alphabet_size())
            .map(|d| {
                let reached = states_reached_by_language(&d, language);
                (d, reached)
            })
            .collect();
        LsepOracle {
            p,
            language: language.clone(),
            structures,
        }
    }

    pub fn max_states(&self) -> usize {
        self.p
    }

    pub fn structure_count(&self) -> usize {
        self.structures.len()
    }

    /// `true` iff no DFA with at most `p` states accepts `w` and rejects all of `L`.
    pub fn check(&self, w: &Word) -> Result<bool> {
        if self.language.accepts(w)? {
            return Err(Error::Precondition(format!(
                "{w} belongs to the language, so lsep is undefined"
            )));
        }
        Ok(self.find_separator(w).is_none())
    }

    /// A DFA with at most `p` states accepting `w` and rejecting all of `L`, if any.
    pub fn find_separator(&self, w: &Word) -> Option<Dfa> {
        self.structures.iter().find_map(|(d, reached)| {
            let end = d.run_symbols(0, w.symbols());
            (!reached[end]).then(|| {
                let mut accepting = vec![false; d.state_count()];
                accepting[end] = true;
                d.with_accepting(accepting).expect("same structure")
            })
        })
    }
}

/// Marks the states of `d` reached by some word of `L(language)`, via a breadth-first
/// walk of the product automaton.
fn states_reached_by_language(d: &Dfa, language: &Dfa) -> Vec<bool> {
    let m = language.state_count();
    let mut seen = vec![false; d.state_count() * m];
    let mut reached = vec![false; d.state_count()];
    let mut queue = VecDeque::from([(0usize, 0usize)]);
    seen[0] = true;
    while let Some((q, s)) = queue.pop_front() {
        if language.is_accepting(s) {
            reached[q] = true;
        }
        for a in 0..d.alphabet_size() {
            let next = (d.step(q, a), language.step(s, a));
            let idx = next.0 * m + next.1;
            if !seen[idx] {
                seen[idx] = true;
                queue.push_back(next);
            }
        }
    }
    reached
}

/// `true` iff no DFA with at most `p` states accepts `w` while rejecting every word
/// of `l`. Fails when `w ∈ L(l)`.
pub fn lsep_lower_check(w: &Word, l: &LangHandle, p: usize) -> Result<bool> {
    LsepOracle::new(l.dfa(), p).check(w)
}

/// Same question as [`lsep_lower_check`], answered by running through every raw
/// transition table with at most `p` states (start state 0) and testing the
/// intersection of `L` with the end state of `w` through the product construction.
/// Exponential in `p·k`; meant for re-certifying small cases only.
pub fn lsep_by_raw_tables(w: &Word, language: &Dfa, p: usize) -> Result<bool> {
    if language.accepts(w)? {
        return Err(Error::Precondition(format!(
            "{w} belongs to the language, so lsep is undefined"
        )));
    }
    let k = language.alphabet_size() as usize;
    for size in 1..=p {
        let cells = size * k;
        let mut table = vec![0u32; cells];
        loop {
            let d = Dfa::new(k as u8, table.clone(), vec![false; size])?;
            let end = d.run_symbols(0, w.symbols());
            let mut accepting = vec![false; size];
            accepting[end] = true;
            let isolating = d.with_accepting(accepting)?;
            if isolating.combine(language, BoolOp::And)?.is_empty() {
                return Ok(false);
            }
            // odometer step
            let mut i = 0;
            while i < cells {
                table[i] += 1;
                if (table[i] as usize) < size {
                    break;
                }
                table[i] = 0;
                i += 1;
            }
            if i == cells {
                break;
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sep::check_separates;

    #[test]
    fn one_state_cannot_isolate_a_word_from_a_nonempty_language() {
        let l = LangHandle::from_words("{11}", &[Word::ternary("11").unwrap()]).unwrap();
        assert!(lsep_lower_check(&Word::ternary("1").unwrap(), &l, 1).unwrap());
        assert!(!lsep_lower_check(&Word::ternary("1").unwrap(), &l, 2).unwrap());
    }

    #[test]
    fn raw_tables_agree_with_oracle() {
        let words: Vec<Word> = ["2", "12", "112", "21"].iter().map(|s| Word::ternary(s).unwrap()).collect();
        let l = LangHandle::from_words("finite", &words).unwrap();
        for w in ["1", "11", "22", "121", "1212"] {
            let w = Word::ternary(w).unwrap();
            for p in 1..=3 {
                assert_eq!(
                    lsep_by_raw_tables(&w, l.dfa(), p).unwrap(),
                    lsep_lower_check(&w, &l, p).unwrap(),
                    "{w} at {p}"
                );
            }
        }
    }

    #[test]
    fn member_word_is_an_error() {
        let l = LangHandle::from_words("{11}", &[Word::ternary("11").unwrap()]).unwrap();
        assert!(lsep_lower_check(&Word::ternary("11").unwrap(), &l, 2).is_err());
    }

    #[test]
    fn found_separator_rejects_whole_language() {
        let words: Vec<Word> = ["2", "12", "112"].iter().map(|s| Word::ternary(s).unwrap()).collect();
        let l = LangHandle::from_words("finite", &words).unwrap();
        let w = Word::ternary("1").unwrap();
        let oracle = LsepOracle::new(l.dfa(), 3);
        let d = oracle.find_separator(&w).expect("a small separator exists");
        assert!(d.accepts(&w).unwrap());
        for u in &words {
            assert!(check_separates(&d, &w, u));
        }
        assert!(d.combine(l.dfa(), crate::BoolOp::And).unwrap().is_empty());
    }
}
