//! Internal nondeterministic automata with ε-moves, used only as an intermediate
//! step for reversal, Kleene star and segmented closure.

use std::collections::{HashMap, VecDeque};

use crate::dfa::Dfa;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub(crate) struct Nfa {
    alphabet_size: u8,
    /// `moves[q][a]` lists the successors of `q` on symbol `a`.
    moves: Vec<Vec<Vec<usize>>>,
    eps: Vec<Vec<usize>>,
    accepting: Vec<bool>,
    starts: Vec<usize>,
}

impl Nfa {
    pub fn new(alphabet_size: u8) -> Self {
        Nfa {
            alphabet_size,
            moves: Vec::new(),
            eps: Vec::new(),
            accepting: Vec::new(),
            starts: Vec::new(),
        }
    }

    pub fn add_state(&mut self, accepting: bool) -> usize {
        self.moves.push(vec![Vec::new(); self.alphabet_size as usize]);
        self.eps.push(Vec::new());
        self.accepting.push(accepting);
        self.moves.len() - 1
    }

    pub fn add_start(&mut self, q: usize) {
        self.starts.push(q);
    }

    pub fn add_move(&mut self, from: usize, a: u8, to: usize) {
        self.moves[from][a as usize].push(to);
    }

    pub fn add_eps(&mut self, from: usize, to: usize) {
        self.eps[from].push(to);
    }

    /// Copies the transition graph of `d` into this NFA and returns the state offset.
    pub fn embed(&mut self, d: &Dfa) -> usize {
        let offset = self.moves.len();
        for q in 0..d.state_count() {
            self.add_state(d.is_accepting(q));
        }
        for q in 0..d.state_count() {
            for a in 0..d.alphabet_size() {
                self.add_move(offset + q, a, offset + d.step(q, a));
            }
        }
        offset
    }

    /// The reversal of `d`: all edges flipped, starting from `d`'s accepting states.
    pub fn reversal_of(d: &Dfa) -> Self {
        let mut nfa = Nfa::new(d.alphabet_size());
        for q in 0..d.state_count() {
            nfa.add_state(q == d.start());
        }
        for q in 0..d.state_count() {
            for a in 0..d.alphabet_size() {
                nfa.add_move(d.step(q, a), a, q);
            }
            if d.is_accepting(q) {
                nfa.add_start(q);
            }
        }
        nfa
    }

    fn closure(&self, set: &mut Vec<usize>) {
        let mut seen = vec![false; self.moves.len()];
        let mut stack: Vec<usize> = set.clone();
        for &q in set.iter() {
            seen[q] = true;
        }
        while let Some(q) = stack.pop() {
            for &r in &self.eps[q] {
                if !seen[r] {
                    seen[r] = true;
                    set.push(r);
                    stack.push(r);
                }
            }
        }
        set.sort_unstable();
        set.dedup();
    }

    /// Subset construction. The empty subset becomes an explicit dead state, so the
    /// result is complete. Fails once more than `limit` subsets are discovered.
    pub fn determinize(&self, limit: usize) -> Result<Dfa> {
        let k = self.alphabet_size as usize;
        let mut start = self.starts.clone();
        self.closure(&mut start);

        let mut index: HashMap<Vec<usize>, u32> = HashMap::new();
        let mut subsets: Vec<Vec<usize>> = Vec::new();
        let mut table: Vec<u32> = Vec::new();
        let mut queue = VecDeque::new();

        index.insert(start.clone(), 0);
        subsets.push(start);
        queue.push_back(0usize);
        while let Some(id) = queue.pop_front() {
            for a in 0..k {
                let mut next: Vec<usize> = subsets[id]
                    .iter()
                    .flat_map(|&q| self.moves[q][a].iter().copied())
                    .collect();
                next.sort_unstable();
                next.dedup();
                self.closure(&mut next);
                let target = match index.get(&next) {
                    Some(&t) => t,
                    None => {
                        if subsets.len() >= limit {
                            return Err(Error::DeterminizationBudget { limit });
                        }
                        let t = subsets.len() as u32;
                        index.insert(next.clone(), t);
                        subsets.push(next);
                        queue.push_back(t as usize);
                        t
                    }
                };
                table.push(target);
            }
        }
        let accepting = subsets
            .iter()
            .map(|s| s.iter().any(|&q| self.accepting[q]))
            .collect();
        Ok(Dfa::from_parts(self.alphabet_size, table, accepting))
    }
}
