//! The language families built from blocks `1^i 2`: the finite generator set `L_k`,
//! its star `G_k`, the complement `H_k` inside `{1,2}*`, and the segmented closure
//! `R ↦ R(0^+R)*`.
//!
//! All handles live over the ternary alphabet. Languages over `{1,2}` route the
//! symbol `0` to the dead state.

use crate::dfa::{BoolOp, Dfa};
use crate::error::{Error, Result};
use crate::nfa::Nfa;
use crate::word::Word;

/// Default cap on subsets discovered while determinizing `L_k*`.
pub const DEFAULT_DETERMINIZATION_LIMIT: usize = 1 << 20;

/// Largest `k` the builders accept.
pub const MAX_K: usize = 6;

/// A regular language given by its minimal canonical DFA.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LangHandle {
    dfa: Dfa,
    provenance: String,
    base12: bool,
}

impl LangHandle {
    /// Wraps an automaton, minimizing it first.
    pub fn new(provenance: impl Into<String>, dfa: &Dfa) -> Result<Self> {
        if dfa.alphabet_size() != 3 {
            return Err(Error::AlphabetMismatch {
                left: dfa.alphabet_size(),
                right: 3,
            });
        }
        let dfa = dfa.minimize();
        let base12 = universe12().includes(&dfa)?;
        Ok(LangHandle {
            dfa,
            provenance: provenance.into(),
            base12,
        })
    }

    pub fn from_words<'a>(provenance: impl Into<String>, words: impl IntoIterator<Item = &'a Word>) -> Result<Self> {
        LangHandle::new(provenance, &Dfa::from_words(3, words)?)
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Whether every word of the language avoids the symbol `0`.
    pub fn is_base12(&self) -> bool {
        self.base12
    }

    pub fn contains(&self, w: &Word) -> Result<bool> {
        self.dfa.accepts(w)
    }

    pub fn state_complexity(&self) -> usize {
        self.dfa.state_count()
    }

    pub fn reversed(&self) -> LangHandle {
        LangHandle {
            dfa: self.dfa.reverse(),
            provenance: format!("reverse of {}", self.provenance),
            base12: self.base12,
        }
    }

    pub fn to_text(&self) -> String {
        format!("{}# provenance: {}\n", self.dfa.to_text(), self.provenance)
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let provenance = text
            .lines()
            .find_map(|l| l.trim().strip_prefix("# provenance:"))
            .map(|p| p.trim().to_string())
            .unwrap_or_else(|| "unnamed".to_string());
        LangHandle::new(provenance, &Dfa::parse_text(text)?)
    }

    /// Words of the language with exactly `len` symbols, in lexicographic order.
    pub fn words_of_length(&self, len: usize) -> Vec<Word> {
        words_of_length(&self.dfa, len)
    }

    /// Accepted words in length-lexicographic order, up to `max_len` symbols.
    pub fn words_up_to(&self, max_len: usize) -> impl Iterator<Item = Word> + '_ {
        (0..=max_len).flat_map(move |len| self.words_of_length(len))
    }
}

/// `{1,2}*` over the ternary alphabet.
pub fn universe12() -> Dfa {
    Dfa::universe_over(3, &[1, 2])
}

fn words_of_length(d: &Dfa, len: usize) -> Vec<Word> {
    // live[r][q]: some word of length exactly r leads from q to acceptance
    let n = d.state_count();
    let mut live = vec![vec![false; n]];
    live[0] = (0..n).map(|q| d.is_accepting(q)).collect();
    for r in 1..=len {
        let prev = &live[r - 1];
        let row = (0..n)
            .map(|q| (0..d.alphabet_size()).any(|a| prev[d.step(q, a)]))
            .collect();
        live.push(row);
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(len);
    collect_words(d, &live, 0, len, &mut buf, &mut out);
    out
}

fn collect_words(d: &Dfa, live: &[Vec<bool>], q: usize, remaining: usize, buf: &mut Vec<u8>, out: &mut Vec<Word>) {
    if !live[remaining][q] {
        return;
    }
    if remaining == 0 {
        out.push(Word::new(buf.clone(), d.alphabet_size()).expect("symbols from table"));
        return;
    }
    for a in 0..d.alphabet_size() {
        buf.push(a);
        collect_words(d, live, d.step(q, a), remaining - 1, buf, out);
        buf.pop();
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 || k > MAX_K {
        return Err(Error::OutOfRange(format!("k must be in 1..={MAX_K}, got {k}")));
    }
    Ok(())
}

/// `1^i 2` as a ternary word.
fn block(ones: usize) -> Vec<u8> {
    let mut b = vec![1u8; ones];
    b.push(2);
    b
}

/// The finite set `L_k`: the blocks `1^{2i}2` for `1 ≤ i ≤ k`, and every block
/// sequence `1^{i_1}2 … 1^{i_s}2` with `i_1 + … + i_s = 2k+1` and all but the last
/// exponent even. Words come back sorted length-lexicographically.
pub fn build_l_k(k: usize) -> Result<(Vec<Word>, LangHandle)> {
    check_k(k)?;
    let mut words: Vec<Vec<u8>> = (1..=k).map(|i| block(2 * i)).collect();

    fn extend(prefix: &mut Vec<u8>, remaining: usize, out: &mut Vec<Vec<u8>>) {
        // close with an odd last block
        let mut last = prefix.clone();
        last.extend(block(remaining));
        out.push(last);
        let mut even = 2;
        while even < remaining {
            let len = prefix.len();
            prefix.extend(block(even));
            extend(prefix, remaining - even, out);
            prefix.truncate(len);
            even += 2;
        }
    }
    extend(&mut Vec::new(), 2 * k + 1, &mut words);

    words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let words: Vec<Word> = words
        .into_iter()
        .map(|w| Word::new(w, 3))
        .collect::<Result<_>>()?;
    let handle = LangHandle::from_words(format!("L_k k={k}"), &words)?;
    Ok((words, handle))
}

/// `G_k = L_k*`.
pub fn build_g_k(k: usize) -> Result<LangHandle> {
    build_g_k_with_limit(k, DEFAULT_DETERMINIZATION_LIMIT)
}

pub fn build_g_k_with_limit(k: usize, limit: usize) -> Result<LangHandle> {
    let (words, _) = build_l_k(k)?;
    // trie whose word-final edges also return to the root; the root is the only
    // accepting state
    let mut nfa = Nfa::new(3);
    let root = nfa.add_state(true);
    nfa.add_start(root);
    let mut children: Vec<[Option<usize>; 3]> = vec![[None; 3]];
    for word in &words {
        let (body, last) = word.symbols().split_at(word.len() - 1);
        let mut q = root;
        for &a in body {
            q = match children[q][a as usize] {
                Some(next) => next,
                None => {
                    let next = nfa.add_state(false);
                    children.push([None; 3]);
                    children[q][a as usize] = Some(next);
                    nfa.add_move(q, a, next);
                    next
                }
            };
        }
        nfa.add_move(q, last[0], root);
    }
    let dfa = nfa.determinize(limit)?;
    LangHandle::new(format!("G_k k={k}"), &dfa)
}

/// `H_k = {1,2}* − G_k`.
pub fn build_h_k(k: usize) -> Result<LangHandle> {
    let g = build_g_k(k)?;
    h_from_g(&g, k)
}

pub fn h_from_g(g: &LangHandle, k: usize) -> Result<LangHandle> {
    let h = universe12().combine(g.dfa(), BoolOp::AndNot)?;
    LangHandle::new(format!("H_k k={k}"), &h)
}

/// `H'_k = H_k ∪ {z}`.
pub fn build_h_prime(h: &LangHandle, z: &Word, k: usize) -> Result<LangHandle> {
    let single = Dfa::from_words(3, [z])?;
    let union = h.dfa().combine(&single, BoolOp::Or)?;
    LangHandle::new(format!("H'_k k={k} z={z}"), &union)
}

/// `R(0^+R)*` for a language without the symbol `0`.
pub fn segmented_closure(r: &LangHandle) -> Result<LangHandle> {
    if !r.is_base12() {
        let offender = r
            .dfa()
            .combine(&universe12(), BoolOp::AndNot)?
            .shortest_accepted()
            .map(|w| w.to_string())
            .unwrap_or_default();
        return Err(Error::Precondition(format!(
            "segmented closure needs a language without 0, but {offender} is in {}",
            r.provenance()
        )));
    }
    segmented_closure_unchecked(r)
}

/// `R(0^+R)*` for an arbitrary language over `{0,1,2}`.
pub fn segmented_closure_unchecked(r: &LangHandle) -> Result<LangHandle> {
    let mut nfa = Nfa::new(3);
    let offset = nfa.embed(r.dfa());
    nfa.add_start(offset);
    let zeros = nfa.add_state(false);
    nfa.add_move(zeros, 0, zeros);
    nfa.add_eps(zeros, offset);
    for f in r.dfa().accepting_states() {
        nfa.add_move(offset + f, 0, zeros);
    }
    let dfa = nfa.determinize(DEFAULT_DETERMINIZATION_LIMIT)?;
    LangHandle::new(format!("segclo of {}", r.provenance()), &dfa)
}

/// `w0(0^+w0)*` for a nonempty word without the symbol `0`.
pub fn segmented_closure_of_word(w0: &Word) -> Result<LangHandle> {
    let single = LangHandle::from_words(format!("{{{w0}}}"), [&w0.with_alphabet(3)?])?;
    segmented_closure(&single)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Word {
        Word::ternary(s).unwrap()
    }

    #[test]
    fn l1_words() {
        let (words, handle) = build_l_k(1).unwrap();
        let shown: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, ["112", "1112", "11212"]);
        for w in &words {
            assert!(handle.contains(w).unwrap());
        }
        assert!(!handle.contains(&t("12")).unwrap());
    }

    #[test]
    fn k_zero_is_rejected() {
        assert!(build_l_k(0).is_err());
        assert!(build_g_k(0).is_err());
    }

    #[test]
    fn every_l_k_word_ends_in_2() {
        for k in 1..=4 {
            let (words, _) = build_l_k(k).unwrap();
            assert!(words.iter().all(|w| w.symbols().last() == Some(&2)));
        }
    }

    #[test]
    fn g_and_h_partition_the_12_words() {
        for k in 1..=2 {
            let g = build_g_k(k).unwrap();
            let h = build_h_k(k).unwrap();
            assert!(g.contains(&Word::empty(3)).unwrap());
            assert!(!h.contains(&Word::empty(3)).unwrap());
            assert!(g.dfa().combine(h.dfa(), BoolOp::And).unwrap().is_empty());
            let union = g.dfa().combine(h.dfa(), BoolOp::Or).unwrap();
            assert!(union.equivalent(&universe12()).unwrap());
            assert!(g.is_base12() && h.is_base12());
        }
    }

    #[test]
    fn determinization_budget_is_reported() {
        assert_eq!(
            build_g_k_with_limit(3, 4).unwrap_err(),
            Error::DeterminizationBudget { limit: 4 }
        );
    }

    #[test]
    fn closure_of_single_one() {
        let s = segmented_closure_of_word(&t("1")).unwrap();
        for yes in ["1", "101", "10001", "1001001"] {
            assert!(s.contains(&t(yes)).unwrap(), "{yes}");
        }
        for no in ["11", "", "10", "01", "121"] {
            assert!(!s.contains(&t(no)).unwrap(), "{no}");
        }
    }

    #[test]
    fn closure_requires_zero_free_language() {
        let r = LangHandle::from_words("{10}", [&t("10")]).unwrap();
        assert!(matches!(segmented_closure(&r), Err(Error::Precondition(_))));
        assert!(segmented_closure_unchecked(&r).is_ok());
    }

    #[test]
    fn text_round_trip_keeps_provenance() {
        let g = build_g_k(1).unwrap();
        let back = LangHandle::parse_text(&g.to_text()).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.provenance(), "G_k k=1");
    }

    #[test]
    fn words_in_length_order() {
        let g = build_g_k(1).unwrap();
        let first: Vec<String> = g.words_up_to(6).take(5).map(|w| w.to_string()).collect();
        assert_eq!(first, ["ε", "112", "1112", "11212", "112112"]);
    }
}
