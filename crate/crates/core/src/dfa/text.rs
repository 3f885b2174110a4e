//! Line-oriented text encoding:
//!
//! ```text
//! dfa <alphabet_size> <state_count>
//! accepting <ids...>
//! state <id>: <target_0> <target_1> [<target_2>]
//! ```
//!
//! Lines starting with `#` are comments and are ignored by the parser.

use std::fmt::Write as _;

use super::Dfa;
use crate::error::{Error, Result};

impl Dfa {
    pub fn to_text(&self) -> String {
        let k = self.alphabet_size as usize;
        let mut out = format!("dfa {} {}\naccepting", k, self.state_count());
        for q in self.accepting_states() {
            let _ = write!(out, " {q}");
        }
        out.push('\n');
        for q in 0..self.state_count() {
            let _ = write!(out, "state {q}:");
            for t in &self.table[q * k..(q + 1) * k] {
                let _ = write!(out, " {t}");
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Dfa> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let err = |line: usize, reason: &str| Error::Parse {
            line,
            reason: reason.to_string(),
        };

        let (ln, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
        let header: Vec<&str> = header.split_whitespace().collect();
        if header.len() != 3 || header[0] != "dfa" {
            return Err(err(ln, "expected `dfa <alphabet_size> <state_count>`"));
        }
        let k: u8 = header[1].parse().map_err(|_| err(ln, "bad alphabet size"))?;
        let n: usize = header[2].parse().map_err(|_| err(ln, "bad state count"))?;
        if !(2..=3).contains(&k) {
            return Err(Error::UnsupportedAlphabet(k));
        }
        if n == 0 {
            return Err(err(ln, "state count must be positive"));
        }

        let (ln, acc_line) = lines.next().ok_or_else(|| err(ln + 1, "missing accepting line"))?;
        let mut parts = acc_line.split_whitespace();
        if parts.next() != Some("accepting") {
            return Err(err(ln, "expected `accepting <ids>`"));
        }
        let mut accepting = vec![false; n];
        for p in parts {
            let q: usize = p.parse().map_err(|_| err(ln, "bad accepting id"))?;
            if q >= n {
                return Err(err(ln, "accepting id out of range"));
            }
            accepting[q] = true;
        }

        let ku = k as usize;
        let mut table = vec![u32::MAX; n * ku];
        let mut seen = vec![false; n];
        for (ln, line) in lines {
            let rest = line
                .strip_prefix("state")
                .ok_or_else(|| err(ln, "expected `state <id>: <targets>`"))?;
            let (id, targets) = rest
                .split_once(':')
                .ok_or_else(|| err(ln, "missing `:` after state id"))?;
            let q: usize = id.trim().parse().map_err(|_| err(ln, "bad state id"))?;
            if q >= n {
                return Err(err(ln, "state id out of range"));
            }
            if seen[q] {
                return Err(err(ln, "duplicate state line"));
            }
            seen[q] = true;
            let targets: Vec<&str> = targets.split_whitespace().collect();
            if targets.len() != ku {
                return Err(err(ln, "wrong number of targets (partial table)"));
            }
            for (a, t) in targets.iter().enumerate() {
                let t: usize = t.parse().map_err(|_| err(ln, "bad target"))?;
                if t >= n {
                    return Err(err(ln, "target out of range"));
                }
                table[q * ku + a] = t as u32;
            }
        }
        if let Some(q) = seen.iter().position(|s| !s) {
            return Err(Error::Parse {
                line: 0,
                reason: format!("missing transitions for state {q} (partial table)"),
            });
        }
        Dfa::new(k, table, accepting)
    }
}
