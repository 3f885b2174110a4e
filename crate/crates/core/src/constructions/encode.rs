//! Binary encodings of ternary words: `0 ↦ 0`, `1 ↦ 11`, and `2 ↦ 01` on the left
//! side or `2 ↦ 10` on the right side.

use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

pub fn encode(w: &Word, side: Side) -> Word {
    let mut out = Vec::with_capacity(2 * w.len());
    for &a in w.symbols() {
        match (a, side) {
            (0, _) => out.push(0),
            (1, _) => out.extend([1, 1]),
            (_, Side::Left) => out.extend([0, 1]),
            (_, Side::Right) => out.extend([1, 0]),
        }
    }
    Word::new(out, 2).expect("binary symbols")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitution() {
        let w = Word::ternary("12").unwrap();
        assert_eq!(encode(&w, Side::Left).to_string(), "1101");
        assert_eq!(encode(&w, Side::Right).to_string(), "1110");
        assert!(encode(&Word::empty(3), Side::Left).is_empty());
        assert_eq!(encode(&Word::ternary("0200").unwrap(), Side::Left).to_string(), "00100");
    }
}
