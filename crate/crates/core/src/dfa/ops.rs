use std::collections::{HashMap, VecDeque};

use super::{Dfa, StateId};
use crate::error::{Error, Result};
use crate::nfa::Nfa;
use crate::word::Word;

/// Boolean combination used by the product construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoolOp {
    And,
    Or,
    AndNot,
    Xor,
}

impl BoolOp {
    fn apply(self, a: bool, b: bool) -> bool {
        match self {
            BoolOp::And => a && b,
            BoolOp::Or => a || b,
            BoolOp::AndNot => a && !b,
            BoolOp::Xor => a != b,
        }
    }
}

impl Dfa {
    /// Product automaton over the pairs reachable from `(0, 0)`.
    pub fn combine(&self, other: &Dfa, op: BoolOp) -> Result<Dfa> {
        if self.alphabet_size != other.alphabet_size {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet_size,
                right: other.alphabet_size,
            });
        }
        let k = self.alphabet_size;
        let mut index: HashMap<(StateId, StateId), u32> = HashMap::new();
        let mut pairs = vec![(0, 0)];
        let mut table = Vec::new();
        index.insert((0, 0), 0);
        let mut i = 0;
        while i < pairs.len() {
            let (p, q) = pairs[i];
            for a in 0..k {
                let next = (self.step(p, a), other.step(q, a));
                let id = *index.entry(next).or_insert_with(|| {
                    pairs.push(next);
                    (pairs.len() - 1) as u32
                });
                table.push(id);
            }
            i += 1;
        }
        let accepting = pairs
            .iter()
            .map(|&(p, q)| op.apply(self.accepting[p], other.accepting[q]))
            .collect();
        Ok(Dfa::from_parts(k, table, accepting))
    }

    pub fn complement(&self) -> Dfa {
        let accepting = self.accepting.iter().map(|a| !a).collect();
        Dfa::from_parts(self.alphabet_size, self.table.clone(), accepting)
    }

    /// A shortest accepted word (length-lexicographic minimum), or `None` if the
    /// language is empty.
    pub fn shortest_accepted(&self) -> Option<Word> {
        let n = self.state_count();
        let mut parent: Vec<Option<(StateId, u8)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(q) = queue.pop_front() {
            if self.accepting[q] {
                let mut symbols = Vec::new();
                let mut cur = q;
                while let Some((prev, a)) = parent[cur] {
                    symbols.push(a);
                    cur = prev;
                }
                symbols.reverse();
                return Some(Word::new(symbols, self.alphabet_size).expect("symbols from table"));
            }
            for a in 0..self.alphabet_size {
                let r = self.step(q, a);
                if !seen[r] {
                    seen[r] = true;
                    parent[r] = Some((q, a));
                    queue.push_back(r);
                }
            }
        }
        None
    }

    pub fn is_empty(&self) -> bool {
        self.shortest_accepted().is_none()
    }

    /// `L(other) ⊆ L(self)`.
    pub fn includes(&self, other: &Dfa) -> Result<bool> {
        Ok(other.combine(self, BoolOp::AndNot)?.is_empty())
    }

    pub fn equivalent(&self, other: &Dfa) -> Result<bool> {
        Ok(self.combine(other, BoolOp::Xor)?.is_empty())
    }

    /// Renumbers reachable states in breadth-first first-visit order (symbol order
    /// `0 < 1 < 2`) and drops unreachable ones.
    pub fn canonical(&self) -> Dfa {
        let n = self.state_count();
        let mut id = vec![u32::MAX; n];
        let mut order = vec![0usize];
        id[0] = 0;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            for a in 0..self.alphabet_size {
                let r = self.step(q, a);
                if id[r] == u32::MAX {
                    id[r] = order.len() as u32;
                    order.push(r);
                }
            }
            i += 1;
        }
        let table = order
            .iter()
            .flat_map(|&q| (0..self.alphabet_size).map(move |a| (q, a)))
            .map(|(q, a)| id[self.step(q, a)])
            .collect();
        let accepting = order.iter().map(|&q| self.accepting[q]).collect();
        Dfa::from_parts(self.alphabet_size, table, accepting)
    }

    /// Minimal complete automaton for the same language, in canonical numbering.
    /// Language-equal inputs give structurally identical outputs.
    pub fn minimize(&self) -> Dfa {
        let reach = self.canonical();
        let n = reach.state_count();
        let k = reach.alphabet_size as usize;

        // Moore refinement
        let mut class: Vec<u32> = reach.accepting.iter().map(|&a| a as u32).collect();
        let mut classes = if class.iter().all(|&c| c == class[0]) { 1 } else { 2 };
        loop {
            let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
            let mut next = Vec::with_capacity(n);
            for q in 0..n {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(class[q]);
                sig.extend((0..k).map(|a| class[reach.table[q * k + a] as usize]));
                let fresh = index.len() as u32;
                next.push(*index.entry(sig).or_insert(fresh));
            }
            let count = index.len();
            class = next;
            if count == classes {
                break;
            }
            classes = count;
        }

        let mut table = vec![0u32; classes * k];
        let mut accepting = vec![false; classes];
        for q in 0..n {
            let c = class[q] as usize;
            accepting[c] = reach.accepting[q];
            for a in 0..k {
                table[c * k + a] = class[reach.table[q * k + a] as usize];
            }
        }
        // class ids are not in BFS order yet, and the start class may not be 0
        let start = class[0] as usize;
        let mut quotient = Dfa::from_parts(reach.alphabet_size, table, accepting);
        if start != 0 {
            quotient = quotient.restart_at(start);
        }
        quotient.canonical()
    }

    fn restart_at(&self, start: StateId) -> Dfa {
        let n = self.state_count();
        let swap = |q: usize| {
            if q == 0 {
                start
            } else if q == start {
                0
            } else {
                q
            }
        };
        let k = self.alphabet_size;
        let table = (0..n)
            .flat_map(|q| (0..k).map(move |a| (q, a)))
            .map(|(q, a)| swap(self.step(swap(q), a)) as u32)
            .collect();
        let accepting = (0..n).map(|q| self.accepting[swap(q)]).collect();
        Dfa::from_parts(k, table, accepting)
    }

    /// Minimal complete automaton for the reversed language.
    pub fn reverse(&self) -> Dfa {
        Nfa::reversal_of(self)
            .determinize(usize::MAX)
            .expect("unbounded determinization")
            .minimize()
    }

    /// Size of the minimal complete automaton for `L(self)`.
    pub fn state_complexity(&self) -> usize {
        self.minimize().state_count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn singleton(w: &str) -> Dfa {
        Dfa::from_words(2, &[Word::binary(w).unwrap()]).unwrap()
    }

    #[test]
    fn all_words_minimizes_to_one_state() {
        let d = Dfa::new(2, vec![1, 2, 3, 0, 0, 1, 2, 3], vec![true; 4]).unwrap();
        let m = d.minimize();
        assert_eq!(m.state_count(), 1);
        assert!(m.is_accepting(0));
    }

    #[test]
    fn minimize_keeps_dead_state() {
        let d = singleton("01");
        // chain ε -> 0 -> 01 plus dead
        assert_eq!(d.state_count(), 4);
        assert_eq!(d.minimize(), d);
    }

    #[test]
    fn minimize_handles_start_merged_with_later_state() {
        // start and state 2 are equivalent; state 1 is unreachable garbage
        let d = Dfa::new(2, vec![2, 3, 1, 1, 0, 3, 3, 3], vec![true, false, true, false]).unwrap();
        let m = d.minimize();
        assert_eq!(m.state_count(), 2);
        assert!(m.equivalent(&d).unwrap());
        assert_eq!(m.minimize(), m);
    }

    #[test]
    fn combine_identities() {
        let d = singleton("011");
        let and = d.combine(&d, BoolOp::And).unwrap();
        assert!(and.equivalent(&d).unwrap());
        assert!(d.combine(&d, BoolOp::AndNot).unwrap().is_empty());
        let other = Dfa::trivial(3, true);
        assert!(matches!(
            d.combine(&other, BoolOp::Or),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn emptiness_witnesses() {
        assert!(Dfa::trivial(2, false).shortest_accepted().is_none());
        assert_eq!(Dfa::trivial(2, true).shortest_accepted(), Some(Word::empty(2)));
        let w = singleton("0110").shortest_accepted().unwrap();
        assert_eq!(w.to_string(), "0110");
    }

    #[test]
    fn reverse_of_singleton() {
        let r = singleton("01").reverse();
        assert!(r.accepts(&Word::binary("10").unwrap()).unwrap());
        for other in ["01", "", "1", "0", "100", "11"] {
            assert!(!r.accepts(&Word::binary(other).unwrap()).unwrap());
        }
        assert!(r.reverse().equivalent(&singleton("01")).unwrap());
    }

    #[test]
    fn inclusion() {
        let star = Dfa::universe_over(2, &[1]);
        let one = singleton("11");
        assert!(star.includes(&one).unwrap());
        assert!(!one.includes(&star).unwrap());
    }
}
