//! Depth-first search for a `p`-state transition structure that sends two words to
//! different states.
//!
//! Transitions are assigned lazily while simulating `w` and then `x` from the start
//! state. A missing entry branches over the states already in use plus one fresh
//! state, so every structure is visited once up to renaming of states in order of
//! first use along the run.

use super::Meter;

const UNSET: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Probe {
    /// A distinguishing structure: the partial table (unused entries `UNSET`),
    /// the number of states in use, and the end state of `w`.
    Found {
        table: Vec<u32>,
        used: usize,
        end_w: usize,
    },
    Exhausted,
    OutOfBudget,
}

struct Distinguisher<'a> {
    w: &'a [u8],
    x: &'a [u8],
    k: usize,
    p: usize,
    table: Vec<u32>,
    used: usize,
    meter: &'a mut Meter,
}

impl Distinguisher<'_> {
    fn symbol_at(&self, pos: usize) -> u8 {
        if pos < self.w.len() {
            self.w[pos]
        } else {
            self.x[pos - self.w.len()]
        }
    }

    fn descend(&mut self, mut pos: usize, mut state: usize, mut end_w: usize) -> Probe {
        let total = self.w.len() + self.x.len();
        loop {
            if pos == self.w.len() && end_w == usize::MAX {
                end_w = state;
                state = 0;
            }
            if pos == total {
                return if state != end_w {
                    Probe::Found {
                        table: self.table.clone(),
                        used: self.used,
                        end_w,
                    }
                } else {
                    Probe::Exhausted
                };
            }
            let idx = state * self.k + self.symbol_at(pos) as usize;
            let target = self.table[idx];
            if target == UNSET {
                break;
            }
            state = target as usize;
            pos += 1;
        }

        if !self.meter.tick() {
            return Probe::OutOfBudget;
        }
        let idx = state * self.k + self.symbol_at(pos) as usize;
        let limit = self.used.min(self.p - 1);
        for t in 0..=limit {
            let fresh = t == self.used;
            if fresh {
                self.used += 1;
            }
            self.table[idx] = t as u32;
            let outcome = self.descend(pos + 1, t, end_w);
            self.table[idx] = UNSET;
            if fresh {
                self.used -= 1;
            }
            if !matches!(outcome, Probe::Exhausted) {
                return outcome;
            }
        }
        Probe::Exhausted
    }
}

/// Searches all structures with at most `p` states over an alphabet of size `k`.
pub(crate) fn distinguish(w: &[u8], x: &[u8], k: usize, p: usize, meter: &mut Meter) -> Probe {
    assert!(p >= 1);
    let mut search = Distinguisher {
        w,
        x,
        k,
        p,
        table: vec![UNSET; p * k],
        used: 1,
        meter,
    };
    search.descend(0, 0, usize::MAX)
}

/// Completes a partial table: unassigned entries loop back to state 0.
pub(crate) fn complete_table(table: &[u32], used: usize, k: usize) -> Vec<u32> {
    table[..used * k]
        .iter()
        .map(|&t| if t == UNSET { 0 } else { t })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sep::SearchBudget;

    fn probe(w: &[u8], x: &[u8], k: usize, p: usize) -> Probe {
        let mut meter = Meter::new(&SearchBudget::unlimited());
        distinguish(w, x, k, p, &mut meter)
    }

    #[test]
    fn one_state_never_distinguishes() {
        assert_eq!(probe(&[0], &[1], 2, 1), Probe::Exhausted);
        assert_eq!(probe(&[], &[0, 1], 2, 1), Probe::Exhausted);
    }

    #[test]
    fn two_states_distinguish_different_first_symbols() {
        match probe(&[0], &[1], 2, 2) {
            Probe::Found { table, used, end_w } => {
                assert_eq!(used, 2);
                let full = complete_table(&table, used, 2);
                let run = |word: &[u8]| word.iter().fold(0usize, |q, &a| full[q * 2 + a as usize] as usize);
                assert_eq!(run(&[0]), end_w);
                assert_ne!(run(&[1]), end_w);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_word_against_nonempty() {
        assert!(matches!(probe(&[], &[0], 2, 2), Probe::Found { .. }));
        assert!(matches!(probe(&[0], &[], 2, 2), Probe::Found { .. }));
    }

    #[test]
    fn unary_lower_bound() {
        // 0 vs 0^7 needs three states
        let x = vec![0u8; 7];
        assert_eq!(probe(&[0], &x, 2, 2), Probe::Exhausted);
        assert!(matches!(probe(&[0], &x, 2, 3), Probe::Found { .. }));
    }
}
