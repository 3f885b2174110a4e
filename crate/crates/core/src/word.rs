//! Finite words over the ternary alphabet `{0,1,2}` or its binary part `{0,1}`.

use std::fmt;

use crate::error::{Error, Result};

/// A finite sequence of symbols, each smaller than `alphabet_size`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<u8>,
    alphabet_size: u8,
}

impl Word {
    pub fn new(symbols: Vec<u8>, alphabet_size: u8) -> Result<Self> {
        if !(2..=3).contains(&alphabet_size) {
            return Err(Error::UnsupportedAlphabet(alphabet_size));
        }
        if let Some(&symbol) = symbols.iter().find(|&&s| s >= alphabet_size) {
            return Err(Error::SymbolOutOfAlphabet {
                symbol,
                alphabet_size,
            });
        }
        Ok(Word {
            symbols,
            alphabet_size,
        })
    }

    pub fn empty(alphabet_size: u8) -> Self {
        Word {
            symbols: Vec::new(),
            alphabet_size,
        }
    }

    /// `0^n` over the given alphabet.
    pub fn zeros(n: usize, alphabet_size: u8) -> Self {
        Word {
            symbols: vec![0; n],
            alphabet_size,
        }
    }

    /// Parses a string of digits. The empty string and `ε` both denote the empty word.
    pub fn parse(text: &str, alphabet_size: u8) -> Result<Self> {
        let text = text.trim();
        if text == "ε" || text.is_empty() {
            return Ok(Word::empty(alphabet_size));
        }
        let symbols = text
            .chars()
            .map(|c| match c.to_digit(10) {
                Some(d) if d < 3 => Ok(d as u8),
                _ => Err(Error::InvalidWord(text.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(symbols, alphabet_size)
    }

    /// Parses over `{0,1,2}`.
    pub fn ternary(text: &str) -> Result<Self> {
        Word::parse(text, 3)
    }

    /// Parses over `{0,1}`.
    pub fn binary(text: &str) -> Result<Self> {
        Word::parse(text, 2)
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alphabet_size(&self) -> u8 {
        self.alphabet_size
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn reversed(&self) -> Word {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word {
            symbols,
            alphabet_size: self.alphabet_size,
        }
    }

    /// Concatenation; the result lives in the larger of the two alphabets.
    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Word {
            symbols,
            alphabet_size: self.alphabet_size.max(other.alphabet_size),
        }
    }

    /// Concatenation of a sequence of words.
    pub fn join<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
        parts
            .into_iter()
            .fold(Word::empty(2), |acc, part| acc.concat(part))
    }

    /// Same symbols, viewed in a different alphabet.
    pub fn with_alphabet(&self, alphabet_size: u8) -> Result<Word> {
        Word::new(self.symbols.clone(), alphabet_size)
    }

    pub fn contains_symbol(&self, symbol: u8) -> bool {
        self.symbols.contains(&symbol)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.is_empty() {
            return f.write_str("ε");
        }
        for &s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Renders a word as a plain digit string, with the empty word as `""`.
pub fn to_digits(word: &Word) -> String {
    word.symbols().iter().map(|s| char::from(b'0' + s)).collect()
}
