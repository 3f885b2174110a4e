//! Behaviour of states under repeated reading of the symbol `0`.

use super::{Dfa, StateId, StateSet};
use crate::error::Result;

impl Dfa {
    /// Length of the 0-cycle through `q`: the least `i ≥ 1` with `δ(q, 0^i) = q`.
    pub fn zero_cycle_length(&self, q: StateId) -> Result<Option<usize>> {
        self.check_state(q)?;
        let mut cur = q;
        for i in 1..=self.state_count() {
            cur = self.step(cur, 0);
            if cur == q {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn in_zero_cycle(&self, q: StateId) -> Result<bool> {
        Ok(self.zero_cycle_length(q)?.is_some())
    }

    /// States among `δ(q, 0^j)`, `0 ≤ j ≤ i`, that lie on no 0-cycle.
    pub fn zpath(&self, q: StateId, i: usize) -> Result<StateSet> {
        self.check_state(q)?;
        let mut members = Vec::new();
        let mut cur = q;
        // beyond |Q| steps the trajectory is inside its cycle
        for _ in 0..=i.min(self.state_count()) {
            if !self.in_zero_cycle(cur)? {
                members.push(cur);
            }
            cur = self.step(cur, 0);
        }
        self.state_set(members)
    }

    /// `zpath(q, |Q|)`.
    pub fn zpath_full(&self, q: StateId) -> Result<StateSet> {
        self.zpath(q, self.state_count())
    }
}
