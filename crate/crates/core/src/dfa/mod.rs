//! Complete deterministic finite automata over a 2- or 3-letter alphabet.
//!
//! Every automaton has a total transition table and start state `0`. Values are
//! immutable once built; all algorithms return fresh automata.

mod enumerate;
mod ops;
mod text;
mod zero;

use std::collections::BTreeSet;
use std::hash::{DefaultHasher, Hash, Hasher};

use crate::error::{Error, Result};
use crate::word::Word;

pub use enumerate::{enumerate_canonical, structure_count, CanonicalStructures};
pub use ops::BoolOp;

pub type StateId = usize;

/// A complete DFA. Transitions are stored row-major: `table[q * alphabet_size + a]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet_size: u8,
    table: Vec<u32>,
    accepting: Vec<bool>,
    fingerprint: u64,
}

impl Dfa {
    /// Builds an automaton from a row-major transition table and accepting flags.
    pub fn new(alphabet_size: u8, table: Vec<u32>, accepting: Vec<bool>) -> Result<Self> {
        if !(2..=3).contains(&alphabet_size) {
            return Err(Error::UnsupportedAlphabet(alphabet_size));
        }
        let k = alphabet_size as usize;
        let states = accepting.len();
        if states == 0 {
            return Err(Error::Precondition("an automaton needs at least one state".into()));
        }
        if table.len() != states * k {
            return Err(Error::Precondition(format!(
                "transition table has {} entries, expected {}",
                table.len(),
                states * k
            )));
        }
        if let Some(&t) = table.iter().find(|&&t| t as usize >= states) {
            return Err(Error::StateOutOfRange {
                state: t as usize,
                state_count: states,
            });
        }
        Ok(Self::from_parts(alphabet_size, table, accepting))
    }

    pub(crate) fn from_parts(alphabet_size: u8, table: Vec<u32>, accepting: Vec<bool>) -> Self {
        let mut hasher = DefaultHasher::new();
        alphabet_size.hash(&mut hasher);
        table.hash(&mut hasher);
        accepting.hash(&mut hasher);
        Dfa {
            alphabet_size,
            table,
            accepting,
            fingerprint: hasher.finish(),
        }
    }

    /// One-state automaton accepting everything (`accept = true`) or nothing.
    pub fn trivial(alphabet_size: u8, accept: bool) -> Self {
        Self::from_parts(alphabet_size, vec![0; alphabet_size as usize], vec![accept])
    }

    /// Automaton accepting exactly the given finite set of words, built as a trie.
    pub fn from_words<'a>(alphabet_size: u8, words: impl IntoIterator<Item = &'a Word>) -> Result<Self> {
        let k = alphabet_size as usize;
        // state 0 is the root, state 1 the dead state
        let mut table: Vec<u32> = vec![u32::MAX; 2 * k];
        table[k..2 * k].fill(1);
        let mut accepting = vec![false, false];
        for word in words {
            let mut q = 0usize;
            for &a in word.symbols() {
                if a >= alphabet_size {
                    return Err(Error::SymbolOutOfAlphabet {
                        symbol: a,
                        alphabet_size,
                    });
                }
                let idx = q * k + a as usize;
                if table[idx] == u32::MAX {
                    let fresh = accepting.len();
                    accepting.push(false);
                    table.extend(std::iter::repeat_n(u32::MAX, k));
                    table[idx] = fresh as u32;
                }
                q = table[idx] as usize;
            }
            accepting[q] = true;
        }
        for t in table.iter_mut() {
            if *t == u32::MAX {
                *t = 1;
            }
        }
        Ok(Self::from_parts(alphabet_size, table, accepting).minimize())
    }

    /// Automaton accepting every word whose symbols all lie in `allowed`.
    pub fn universe_over(alphabet_size: u8, allowed: &[u8]) -> Self {
        let k = alphabet_size as usize;
        let mut table = vec![1u32; 2 * k];
        for a in 0..k {
            if allowed.contains(&(a as u8)) {
                table[a] = 0;
            }
        }
        Self::from_parts(alphabet_size, table, vec![true, false]).minimize()
    }

    pub fn alphabet_size(&self) -> u8 {
        self.alphabet_size
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn start(&self) -> StateId {
        0
    }

    /// Structural identity used to tie [`StateSet`]s to their owner.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = StateId> + '_ {
        self.accepting
            .iter()
            .enumerate()
            .filter_map(|(q, &acc)| acc.then_some(q))
    }

    #[inline]
    pub fn step(&self, q: StateId, a: u8) -> StateId {
        self.table[q * self.alphabet_size as usize + a as usize] as usize
    }

    /// Runs raw symbols without validation; callers guarantee `symbols < alphabet_size`.
    #[inline]
    pub fn run_symbols(&self, q: StateId, symbols: &[u8]) -> StateId {
        symbols.iter().fold(q, |q, &a| self.step(q, a))
    }

    /// The state reached by reading `w` from `q`.
    pub fn run(&self, q: StateId, w: &Word) -> Result<StateId> {
        self.check_state(q)?;
        self.check_word(w)?;
        Ok(self.run_symbols(q, w.symbols()))
    }

    pub fn accepts(&self, w: &Word) -> Result<bool> {
        Ok(self.accepting[self.run(0, w)?])
    }

    pub(crate) fn check_word(&self, w: &Word) -> Result<()> {
        match w.symbols().iter().find(|&&a| a >= self.alphabet_size) {
            Some(&symbol) => Err(Error::SymbolOutOfAlphabet {
                symbol,
                alphabet_size: self.alphabet_size,
            }),
            None => Ok(()),
        }
    }

    pub(crate) fn check_state(&self, q: StateId) -> Result<()> {
        if q < self.state_count() {
            Ok(())
        } else {
            Err(Error::StateOutOfRange {
                state: q,
                state_count: self.state_count(),
            })
        }
    }

    /// Same transition structure with a new accepting set given as a bit mask.
    pub fn with_accepting_mask(&self, mask: u64) -> Dfa {
        let accepting = (0..self.state_count()).map(|q| mask >> q & 1 == 1).collect();
        Self::from_parts(self.alphabet_size, self.table.clone(), accepting)
    }

    pub fn with_accepting(&self, accepting: Vec<bool>) -> Result<Dfa> {
        Dfa::new(self.alphabet_size, self.table.clone(), accepting)
    }

    /// All `2^n` accepting-set variants of this transition structure.
    pub fn accepting_variants(&self) -> impl Iterator<Item = Dfa> + '_ {
        assert!(self.state_count() < 64);
        (0..1u64 << self.state_count()).map(|mask| self.with_accepting_mask(mask))
    }

    /// The full state set `Q_D`.
    pub fn all_states(&self) -> StateSet {
        StateSet {
            members: (0..self.state_count()).collect(),
            owner: self.fingerprint,
        }
    }

    pub fn state_set(&self, members: impl IntoIterator<Item = StateId>) -> Result<StateSet> {
        let members: BTreeSet<StateId> = members.into_iter().collect();
        if let Some(&q) = members.iter().find(|&&q| q >= self.state_count()) {
            return Err(Error::StateOutOfRange {
                state: q,
                state_count: self.state_count(),
            });
        }
        Ok(StateSet {
            members,
            owner: self.fingerprint,
        })
    }

    /// `{ run(q, w) : q ∈ s }`.
    pub fn image_under_word(&self, s: &StateSet, w: &Word) -> Result<StateSet> {
        if s.owner != self.fingerprint {
            return Err(Error::ForeignStateSet);
        }
        self.check_word(w)?;
        Ok(StateSet {
            members: s
                .members
                .iter()
                .map(|&q| self.run_symbols(q, w.symbols()))
                .collect(),
            owner: self.fingerprint,
        })
    }
}

impl std::fmt::Debug for Dfa {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A set of states of one particular automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSet {
    members: BTreeSet<StateId>,
    owner: u64,
}

impl StateSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, q: StateId) -> bool {
        self.members.contains(&q)
    }

    pub fn iter(&self) -> impl Iterator<Item = StateId> + '_ {
        self.members.iter().copied()
    }

    pub fn owner(&self) -> u64 {
        self.owner
    }

    pub fn is_subset(&self, other: &StateSet) -> Result<bool> {
        if self.owner != other.owner {
            return Err(Error::ForeignStateSet);
        }
        Ok(self.members.is_subset(&other.members))
    }

    pub fn union(&self, other: &StateSet) -> Result<StateSet> {
        if self.owner != other.owner {
            return Err(Error::ForeignStateSet);
        }
        Ok(StateSet {
            members: self.members.union(&other.members).copied().collect(),
            owner: self.owner,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn parity_counter() -> Dfa {
        // δ(s,0) = 1-s, δ(s,1) = s
        Dfa::new(2, vec![1, 0, 0, 1], vec![true, false]).unwrap()
    }

    #[test]
    fn run_empty_word_is_identity() {
        let d = parity_counter();
        for q in 0..2 {
            assert_eq!(d.run(q, &Word::empty(2)).unwrap(), q);
        }
    }

    #[test]
    fn parity_counter_runs() {
        let d = parity_counter();
        assert_eq!(d.run(0, &Word::binary("00").unwrap()).unwrap(), 0);
        assert_eq!(d.run(0, &Word::binary("010").unwrap()).unwrap(), 0);
        assert_eq!(d.run(0, &Word::binary("0111").unwrap()).unwrap(), 1);
    }

    #[test]
    fn run_rejects_foreign_symbol() {
        let d = parity_counter();
        assert!(matches!(
            d.run(0, &Word::ternary("02").unwrap()),
            Err(Error::SymbolOutOfAlphabet { symbol: 2, .. })
        ));
        assert!(d.run(5, &Word::empty(2)).is_err());
    }

    #[test]
    fn new_rejects_partial_tables() {
        assert!(Dfa::new(2, vec![0, 1, 0], vec![true, false]).is_err());
        assert!(Dfa::new(2, vec![0, 2, 0, 0], vec![true, false]).is_err());
        assert!(Dfa::new(4, vec![0; 4], vec![true]).is_err());
    }

    #[test]
    fn image_of_constant_automaton_collapses() {
        let d = Dfa::new(2, vec![0; 6], vec![false; 3]).unwrap();
        let img = d
            .image_under_word(&d.all_states(), &Word::binary("1").unwrap())
            .unwrap();
        assert_eq!(img.iter().collect::<Vec<_>>(), vec![0]);
        let img = d.image_under_word(&d.all_states(), &Word::empty(2)).unwrap();
        assert_eq!(img, d.all_states());
    }

    #[test]
    fn state_sets_are_tied_to_their_owner() {
        let d = parity_counter();
        let e = d.with_accepting_mask(0b10);
        let s = d.all_states();
        assert_eq!(
            e.image_under_word(&s, &Word::empty(2)),
            Err(Error::ForeignStateSet)
        );
    }

    #[test]
    fn from_words_accepts_exactly_the_set() {
        let words: Vec<Word> = ["01", "011", ""]
            .iter()
            .map(|s| Word::binary(s).unwrap())
            .collect();
        let d = Dfa::from_words(2, &words).unwrap();
        for w in &words {
            assert!(d.accepts(w).unwrap());
        }
        for other in ["0", "1", "010", "0111"] {
            assert!(!d.accepts(&Word::binary(other).unwrap()).unwrap());
        }
    }
}
