//! Replacing a word of `H'_k(0^+H'_k)*` by a word of `H_k(0^+H_k)*` that two small
//! DFAs cannot tell apart from it.

use std::collections::VecDeque;

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::lang::{build_g_k, build_h_prime, h_from_g, segmented_closure, LangHandle};
use crate::word::Word;

/// `floor(2^{k/2}) - 1`, the largest DFA size the replacement is guaranteed for.
pub fn free_state_limit(k: usize) -> usize {
    (1usize << k).isqrt() - 1
}

/// The languages `free_word` needs, built once per `(k, z)`.
pub struct FreeContext {
    k: usize,
    target: LangHandle,
    source: LangHandle,
}

impl FreeContext {
    pub fn new(k: usize, z: &Word) -> Result<Self> {
        let g = build_g_k(k)?;
        let z = z.with_alphabet(3)?;
        if z.is_empty() || !g.contains(&z)? {
            return Err(Error::Precondition(format!("{z} is not in G_k − {{ε}} for k={k}")));
        }
        let h = h_from_g(&g, k)?;
        let target = segmented_closure(&h)?;
        let source = segmented_closure(&build_h_prime(&h, &z, k)?)?;
        Ok(FreeContext { k, target, source })
    }

    /// `H_k(0^+H_k)*`.
    pub fn target(&self) -> &LangHandle {
        &self.target
    }

    /// `H'_k(0^+H'_k)*`.
    pub fn source(&self) -> &LangHandle {
        &self.source
    }

    /// The shortest `w'` in `H_k(0^+H_k)*` (length-lexicographic among equals) with
    /// `δ_d(w') = δ_d(w)` and `δ_d2(w') = δ_d2(w)`.
    pub fn free_word(&self, d: &Dfa, d2: &Dfa, w: &Word) -> Result<Word> {
        let limit = free_state_limit(self.k);
        for (name, m) in [("d", d), ("d2", d2)] {
            if m.alphabet_size() != 3 {
                return Err(Error::AlphabetMismatch {
                    left: m.alphabet_size(),
                    right: 3,
                });
            }
            if m.state_count() > limit {
                return Err(Error::Precondition(format!(
                    "{name} has {} states, more than floor(2^(k/2)) - 1 = {limit}",
                    m.state_count()
                )));
            }
        }
        let w = w.with_alphabet(3)?;
        if !self.source.contains(&w)? {
            return Err(Error::Precondition(format!(
                "{w} is not in {}",
                self.source.provenance()
            )));
        }
        let goal = (d.run(0, &w)?, d2.run(0, &w)?);
        if let Some(found) = shortest_common_word(d, d2, self.target.dfa(), goal) {
            return Ok(found);
        }
        Err(Error::Precondition(format!(
            "no word of {} reaches the end states of {w}; the DFAs or z violate the size precondition",
            self.target.provenance()
        )))
    }
}

/// Breadth-first search over `d × d2 × a` for the shortest word (length-lexicographic
/// among equals) ending in `goal` on `d`, `d2` and in an accepting state of `a`.
pub fn shortest_common_word(d: &Dfa, d2: &Dfa, a: &Dfa, goal: (usize, usize)) -> Option<Word> {
    let k = d.alphabet_size();
    let (n1, n2, na) = (d.state_count(), d2.state_count(), a.state_count());
    let index = |p: usize, q: usize, r: usize| (p * n2 + q) * na + r;
    let mut parent: Vec<Option<(usize, u8)>> = vec![None; n1 * n2 * na];
    let mut seen = vec![false; n1 * n2 * na];
    let mut queue = VecDeque::from([(0usize, 0usize, 0usize)]);
    seen[0] = true;
    while let Some((p, q, r)) = queue.pop_front() {
        if (p, q) == goal && a.is_accepting(r) {
            let mut symbols = Vec::new();
            let mut at = index(p, q, r);
            while let Some((prev, sym)) = parent[at] {
                symbols.push(sym);
                at = prev;
            }
            symbols.reverse();
            return Some(Word::new(symbols, k).expect("symbols of the automata"));
        }
        for sym in 0..k {
            let next = (d.step(p, sym), d2.step(q, sym), a.step(r, sym));
            let idx = index(next.0, next.1, next.2);
            if !seen[idx] {
                seen[idx] = true;
                parent[idx] = Some((index(p, q, r), sym));
                queue.push_back(next);
            }
        }
    }
    None
}

pub fn free_word(k: usize, z: &Word, d: &Dfa, d2: &Dfa, w: &Word) -> Result<Word> {
    FreeContext::new(k, z)?.free_word(d, d2, w)
}
