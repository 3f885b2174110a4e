use serde::{Deserialize, Serialize};

use super::Meter;
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::word::{to_digits, Word};

/// How the lower bound of a certificate was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerMethod {
    ExhaustiveCanonical,
    UnaryAnalytic,
    None,
}

impl LowerMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            LowerMethod::ExhaustiveCanonical => "exhaustive-canonical",
            LowerMethod::UnaryAnalytic => "unary-analytic",
            LowerMethod::None => "none",
        }
    }
}

/// Proven value, or proven interval, of `sep(w, x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SepCertificate {
    pub w: Word,
    pub x: Word,
    pub lower: usize,
    pub upper: usize,
    /// Accepts `w`, rejects `x`, and has exactly `upper` states.
    pub witness: Dfa,
    pub lower_method: LowerMethod,
    pub nodes: u64,
    pub millis: u64,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    w: String,
    x: String,
    lower: usize,
    upper: usize,
    exact: bool,
    witness: String,
    lower_method: LowerMethod,
    nodes: u64,
    millis: u64,
}

impl SepCertificate {
    pub fn exact(&self) -> bool {
        self.lower == self.upper && self.lower_method != LowerMethod::None
    }

    pub fn value(&self) -> Option<usize> {
        self.exact().then_some(self.upper)
    }

    pub(crate) fn finish(mut self, meter: &Meter) -> Self {
        self.nodes = meter.nodes();
        self.millis = meter.elapsed().as_millis() as u64;
        self
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(CertificateJson {
            w: to_digits(&self.w),
            x: to_digits(&self.x),
            lower: self.lower,
            upper: self.upper,
            exact: self.exact(),
            witness: self.witness.to_text(),
            lower_method: self.lower_method,
            nodes: self.nodes,
            millis: self.millis,
        })
        .expect("certificate serializes")
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    /// Parses a certificate and re-checks its invariants.
    pub fn from_json_value(value: &serde_json::Value) -> Result<Self> {
        let raw: CertificateJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::Precondition(format!("bad certificate json: {e}")))?;
        let witness = Dfa::parse_text(&raw.witness)?;
        let k = witness.alphabet_size();
        let cert = SepCertificate {
            w: Word::parse(&raw.w, k)?,
            x: Word::parse(&raw.x, k)?,
            lower: raw.lower,
            upper: raw.upper,
            witness,
            lower_method: raw.lower_method,
            nodes: raw.nodes,
            millis: raw.millis,
        };
        if cert.lower > cert.upper
            || cert.witness.state_count() != cert.upper
            || !super::check_separates(&cert.witness, &cert.w, &cert.x)
            || cert.exact() != raw.exact
        {
            return Err(Error::Precondition("certificate invariants do not hold".into()));
        }
        Ok(cert)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| Error::Precondition(format!("bad certificate json: {e}")))?;
        Self::from_json_value(&value)
    }
}

/// Counts the input length modulo `m` and accepts residue `accept`.
pub(crate) fn length_counter(alphabet_size: u8, m: usize, accept: usize) -> Dfa {
    let table = (0..m)
        .flat_map(|q| std::iter::repeat_n(((q + 1) % m) as u32, alphabet_size as usize))
        .collect();
    let accepting = (0..m).map(|q| q == accept).collect();
    Dfa::from_parts(alphabet_size, table, accepting)
}

/// The cheapest constructive separator among: accept exactly the shorter word (or
/// everything but it), and length counters modulo `m ≤ 4`.
pub(crate) fn upper_bound_certificate(w: &Word, x: &Word, k: u8) -> SepCertificate {
    let (chain_word, complement) = if w.len() <= x.len() { (w, false) } else { (x, true) };
    let mut best = Dfa::from_words(k, [chain_word]).expect("word fits alphabet");
    if complement {
        best = best.complement();
    }
    for m in 2..=4 {
        if m < best.state_count() && w.len() % m != x.len() % m {
            best = length_counter(k, m, w.len() % m);
            break;
        }
    }
    SepCertificate {
        w: w.clone(),
        x: x.clone(),
        lower: 1,
        upper: best.state_count(),
        witness: best,
        lower_method: LowerMethod::None,
        nodes: 0,
        millis: 0,
    }
}
