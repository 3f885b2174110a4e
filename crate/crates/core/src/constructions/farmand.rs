//! A small DFA over `{0,1}` that separates `tr(W)·0^n·u` from `tr(W)·0^{n+(2n+1)!}·u`
//! whenever `W ∈ (({1,2}* − R)0^+)*(R − {ε})` and `u ∈ 1{0,1}*`.
//!
//! Layout, for a minimal DFA of `R` with `t` states:
//!
//! * `2t` simulation states `(q, complete)` / `(q, mid)` that decode `11 ↦ 1` and
//!   `10 ↦ 2` and feed the decoded symbol to `R`;
//! * one skip state absorbing the 0-run after a segment outside `R`;
//! * counter states `c_1 … c_n` plus a saturated `c_>n` for the 0-run after a
//!   segment in `R`;
//! * an accepting sink, reached by the first `1` after exactly `n` zeros, and a
//!   rejecting sink for every other count.
//!
//! That is `2t + n + 4` states in total.

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::lang::LangHandle;

pub fn farmand_dfa(r: &LangHandle, n: usize) -> Result<Dfa> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    if !r.is_base12() {
        return Err(Error::Precondition(format!(
            "{} contains words with the symbol 0",
            r.provenance()
        )));
    }
    let rd = r.dfa();
    let t = rd.state_count();
    let complete = |q: usize| 2 * q;
    let mid = |q: usize| 2 * q + 1;
    let skip = 2 * t;
    let counter = |i: usize| 2 * t + i; // c_1 ..= c_n
    let over = 2 * t + n + 1;
    let accept = 2 * t + n + 2;
    let reject = 2 * t + n + 3;
    let total = 2 * t + n + 4;

    let mut table = vec![0u32; 2 * total];
    let mut set = |q: usize, zero: usize, one: usize| {
        table[2 * q] = zero as u32;
        table[2 * q + 1] = one as u32;
    };
    for q in 0..t {
        let boundary = if rd.is_accepting(q) { counter(1) } else { skip };
        set(complete(q), boundary, mid(q));
        set(mid(q), complete(rd.step(q, 2)), complete(rd.step(q, 1)));
    }
    set(skip, skip, mid(rd.start()));
    for i in 1..=n {
        let next = if i < n { counter(i + 1) } else { over };
        let on_one = if i == n { accept } else { reject };
        set(counter(i), next, on_one);
    }
    set(over, over, reject);
    set(accept, accept, accept);
    set(reject, reject, reject);

    let mut accepting = vec![false; total];
    accepting[accept] = true;
    Dfa::new(2, table, accepting)
}
