//! Closed form for `sep(c^a, c^b)`.
//!
//! On a one-letter input a DFA is a lasso with a tail of `t` states and a cycle of
//! `c` states; `c^a` and `c^b` end apart iff `min(a, b) < t` or `c ∤ |a - b|`. The
//! cheapest choices are a tail of `min(a, b) + 1` with a one-state cycle, or a pure
//! cycle whose length is the least non-divisor of `|a - b|`.

use super::certificate::{LowerMethod, SepCertificate};
use crate::dfa::Dfa;
use crate::word::Word;

/// `sep(c^a, c^b)` for `a ≠ b`.
pub fn unary_sep(a: usize, b: usize) -> usize {
    assert_ne!(a, b);
    let d = a.abs_diff(b);
    let cycle = (2..).find(|c| d % c != 0).expect("some integer does not divide d");
    (a.min(b) + 2).min(cycle)
}

/// The single symbol used by `w` and `x`, when both are powers of one letter.
fn common_letter(w: &Word, x: &Word) -> Option<u8> {
    let mut letter = None;
    for &s in w.symbols().iter().chain(x.symbols()) {
        match letter {
            None => letter = Some(s),
            Some(l) if l != s => return None,
            _ => {}
        }
    }
    Some(letter.unwrap_or(0))
}

/// Lasso automaton of size `unary_sep(|w|, |x|)` separating the two unary words.
pub(crate) fn unary_certificate(w: &Word, x: &Word, k: u8) -> Option<SepCertificate> {
    let letter = common_letter(w, x)?;
    let (a, b) = (w.len(), x.len());
    let value = unary_sep(a, b);
    let (tail, cycle) = if value == a.min(b) + 2 {
        (a.min(b) + 1, 1)
    } else {
        (0, value)
    };
    let n = tail + cycle;
    debug_assert_eq!(n, value);
    let next = |q: usize| -> usize {
        if q + 1 < n {
            q + 1
        } else {
            tail
        }
    };
    let position = |len: usize| -> usize {
        if len < tail {
            len
        } else {
            tail + (len - tail) % cycle
        }
    };
    let table = (0..n)
        .flat_map(|q| (0..k).map(move |s| if s == letter { next(q) as u32 } else { 0 }))
        .collect();
    let accepting = (0..n).map(|q| q == position(a)).collect();
    let witness = Dfa::from_parts(k, table, accepting);
    Some(SepCertificate {
        w: w.clone(),
        x: x.clone(),
        lower: value,
        upper: value,
        witness,
        lower_method: LowerMethod::UnaryAnalytic,
        nodes: 0,
        millis: 0,
    })
}
