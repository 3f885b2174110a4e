use crate::error::{Error, Result};
use crate::word::Word;

/// Largest `n` for which the triple is materialized; `|g_4| = 4 + 9!`.
pub const MAX_TRIPLE_N: usize = 4;

/// The unary words `f_n = 0^n`, `h_n = 0^{(2n+1)!}` and `g_n = f_n h_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalTriple {
    pub n: usize,
    pub f: Word,
    pub g: Word,
    pub h: Word,
}

pub fn factorial(m: usize) -> usize {
    (1..=m).product()
}

impl CanonicalTriple {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_TRIPLE_N {
            return Err(Error::OutOfRange(format!(
                "n must be in 1..={MAX_TRIPLE_N}, got {n}"
            )));
        }
        let period = factorial(2 * n + 1);
        Ok(CanonicalTriple {
            n,
            f: Word::zeros(n, 2),
            g: Word::zeros(n + period, 2),
            h: Word::zeros(period, 2),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_triples() {
        let t = CanonicalTriple::new(1).unwrap();
        assert_eq!(t.f.to_string(), "0");
        assert_eq!(t.h.len(), 6);
        assert_eq!(t.g.len(), 7);
        let t = CanonicalTriple::new(2).unwrap();
        assert_eq!(t.g.len(), 122);
        for n in 1..=3 {
            let t = CanonicalTriple::new(n).unwrap();
            assert_eq!(t.f.concat(&t.h), t.g);
            assert!(t.g.symbols().iter().all(|&s| s == 0));
        }
    }

    #[test]
    fn range_is_guarded() {
        assert!(CanonicalTriple::new(0).is_err());
        assert!(CanonicalTriple::new(5).is_err());
    }
}
