//! The `(k, n)` witness pair: binary words `w' ≠ x'` whose separation needs many
//! states while their reversals are separated by the small counting DFA.
//!
//! Two assemblies are available. `Mirror` is the symmetric `C f_n C` / `C g_n C`.
//! `ReversalReady` (the default) keeps `C` in front and closes with a suffix
//! `V = z_k · 0^{a_1} h_1 ⋯ 0^{a_m} h_m`, `h_i ∈ H_k`, so that after reversal the
//! segment right before the `f_n`/`g_n` block is `z_k^R ∈ G_k^R` and every earlier
//! segment lies outside `G_k^R`. That is the shape the counting DFA needs; with
//! `Mirror` the reversed prefix is `C^R`, whose first segments are already in
//! `G_k^R`, and the upper check fails whenever `C` has more than one segment.

use std::fmt;

use serde_json::{json, Value};

use crate::constructions::search::{recertify_no_separator, search_z_k_in};
use crate::constructions::{encode, farmand_dfa, search_c_n, CanonicalTriple, Side};
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::lang::{build_g_k, h_from_g, LangHandle};
use crate::sep::{check_separates, no_separator_within, Meter, SearchBudget};
use crate::word::{to_digits, Word};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Assembly {
    #[default]
    ReversalReady,
    Mirror,
}

impl Assembly {
    pub fn as_str(self) -> &'static str {
        match self {
            Assembly::ReversalReady => "reversal-ready",
            Assembly::Mirror => "mirror",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pending,
    Certified,
    BudgetBounded,
    Failed,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pending => "pending",
            CheckStatus::Certified => "certified",
            CheckStatus::BudgetBounded => "budget-bounded",
            CheckStatus::Failed => "failed",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub k: usize,
    pub n: usize,
    pub assembly: Assembly,
    /// The word of `G_k` used as the building block, and whether its lsep bound
    /// was proven all the way to `2^k − 1`.
    pub z: Word,
    pub z_certified: bool,
    pub c: Word,
    /// Everything after the `f_n`/`g_n` block.
    pub suffix: Word,
    pub w: Word,
    pub x: Word,
    pub w_prime: Word,
    pub x_prime: Word,
    /// `min(2n+2, ceil(2^{k/2}))`.
    pub lower_claim: usize,
    /// `n + 10k + 10`.
    pub upper_claim: usize,
    /// `2n+2`, the bound the `C_n` construction aims for.
    pub blueberry_claim: usize,
    /// No DFA with fewer states than this separates `w'` from `x'`.
    pub lower_verified_to: usize,
    pub blueberry_verified_to: usize,
    pub lower_status: CheckStatus,
    pub blueberry_status: CheckStatus,
    pub upper_witness: Option<Dfa>,
    pub upper_status: CheckStatus,
}

/// `ceil(2^{k/2})`.
pub fn ceil_half_power(k: usize) -> usize {
    let m = 1usize << k;
    let r = m.isqrt();
    if r * r == m {
        r
    } else {
        r + 1
    }
}

impl WitnessReport {
    pub fn upper_states(&self) -> Option<usize> {
        self.upper_witness.as_ref().map(Dfa::state_count)
    }

    pub fn all_certified(&self) -> bool {
        [self.lower_status, self.blueberry_status, self.upper_status]
            .iter()
            .all(|s| *s == CheckStatus::Certified)
    }

    /// Index of the bit of `x'` that, once set to 1, cuts the reversed zero block
    /// down to exactly `n` zeros so the counting DFA accepts both reversed words.
    pub fn control_index(&self) -> usize {
        let tail = encode(&self.suffix, Side::Left).len();
        self.x_prime.len() - 1 - (tail + self.n)
    }

    /// A copy with bit `index` of `x'` flipped and all statuses reset.
    pub fn with_flipped_bit(&self, index: usize) -> Result<WitnessReport> {
        let mut symbols = self.x_prime.symbols().to_vec();
        let bit = symbols
            .get_mut(index)
            .ok_or_else(|| Error::OutOfRange(format!("bit {index} is outside x'")))?;
        *bit ^= 1;
        let mut out = self.clone();
        out.x_prime = Word::new(symbols, 2)?;
        out.lower_verified_to = 0;
        out.blueberry_verified_to = 0;
        out.lower_status = CheckStatus::Pending;
        out.blueberry_status = CheckStatus::Pending;
        out.upper_status = CheckStatus::Pending;
        out.upper_witness = None;
        Ok(out)
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "k": self.k,
            "n": self.n,
            "assembly": self.assembly.as_str(),
            "z": to_digits(&self.z),
            "z_certified": self.z_certified,
            "c": to_digits(&self.c),
            "suffix": to_digits(&self.suffix),
            "w": to_digits(&self.w),
            "x": to_digits(&self.x),
            "w_prime": to_digits(&self.w_prime),
            "x_prime": to_digits(&self.x_prime),
            "lower_claim": self.lower_claim,
            "upper_claim": self.upper_claim,
            "blueberry_claim": self.blueberry_claim,
            "lower_verified_to": self.lower_verified_to,
            "blueberry_verified_to": self.blueberry_verified_to,
            "lower_status": self.lower_status.as_str(),
            "blueberry_status": self.blueberry_status.as_str(),
            "upper_witness": self.upper_witness.as_ref().map(Dfa::to_text),
            "upper_states": self.upper_states(),
            "upper_status": self.upper_status.as_str(),
        })
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }
}

/// Candidate suffixes `z · 0^{a_1} h_1 ⋯ 0^{a_m} h_m` in order of length, with
/// `1 ≤ a_i ≤ cap` and each `h_i` from `pool`.
fn for_each_suffix<T>(
    z: &Word,
    pool: &[Word],
    cap: usize,
    extra: usize,
    visit: &mut dyn FnMut(&Word) -> Option<T>,
) -> Option<T> {
    fn go<T>(
        current: &mut Vec<u8>,
        pool: &[Word],
        cap: usize,
        left: usize,
        visit: &mut dyn FnMut(&Word) -> Option<T>,
    ) -> Option<T> {
        if left == 0 {
            return visit(&Word::new(current.clone(), 3).expect("ternary"));
        }
        for a in 1..=cap {
            for h in pool {
                if a + h.len() > left {
                    continue;
                }
                let mark = current.len();
                current.extend(std::iter::repeat_n(0, a));
                current.extend_from_slice(h.symbols());
                let found = go(current, pool, cap, left - a - h.len(), visit);
                current.truncate(mark);
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }
    go(&mut z.symbols().to_vec(), pool, cap, extra, visit)
}

/// Shortest `V` for which no DFA with `2n+1` states separates `tl(C f_n V)` from
/// `tl(C g_n V)`.
fn search_suffix(
    c: &Word,
    z: &Word,
    h: &LangHandle,
    triple: &CanonicalTriple,
    meter: &mut Meter,
) -> Result<Word> {
    let p = 2 * triple.n + 1;
    let cap = 2 * triple.n + 2;
    let pool: Vec<Word> = (1..=2).flat_map(|len| h.words_of_length(len)).collect();
    let max_extra = 8 * (cap + 2);
    for extra in 0..=max_extra {
        let mut outcome: Option<Result<Word>> = None;
        for_each_suffix(z, &pool, cap, extra, &mut |v| {
            let (w, x) = assemble(c, triple, v);
            let (wp, xp) = (encode(&w, Side::Left), encode(&x, Side::Left));
            match no_separator_within(&wp, &xp, p, meter) {
                None => Some(Err(Error::SearchBudget {
                    stage: "suffix search".into(),
                })),
                Some(false) => None,
                Some(true) => Some(Ok(v.clone())),
            }
            .inspect(|r| outcome = Some(r.clone()))
        });
        if let Some(result) = outcome {
            return result;
        }
    }
    Err(Error::SearchBudget {
        stage: format!("suffix search (lengths up to |z|+{max_extra})"),
    })
}

fn assemble(c: &Word, triple: &CanonicalTriple, suffix: &Word) -> (Word, Word) {
    (
        Word::join([c, &triple.f, suffix]),
        Word::join([c, &triple.g, suffix]),
    )
}

/// Builds the pair for `(k, n)`. Statuses are left `Pending`; see [`verify_witness`].
pub fn witness_pair(k: usize, n: usize, budget: &SearchBudget, assembly: Assembly) -> Result<WitnessReport> {
    let triple = CanonicalTriple::new(n).map_err(|e| e.in_stage("canonical triple"))?;
    let g = build_g_k(k).map_err(|e| e.in_stage("G_k"))?;
    let h = h_from_g(&g, k).map_err(|e| e.in_stage("H_k"))?;
    let z = search_z_k_in(k, &g, &h, budget).map_err(|e| e.in_stage("z_k search"))?;
    let c = search_c_n(n, &z.word, budget).map_err(|e| e.in_stage("C_n search"))?;
    let suffix = match assembly {
        Assembly::Mirror => c.clone(),
        Assembly::ReversalReady => {
            let mut meter = Meter::new(budget);
            match search_suffix(&c, &z.word, &h, &triple, &mut meter) {
                Ok(v) => v,
                // the pair stays well formed; verify_witness reports the weaker lower side
                Err(Error::SearchBudget { .. }) => z.word.clone(),
                Err(e) => return Err(e.in_stage("suffix search")),
            }
        }
    };
    let (w, x) = assemble(&c, &triple, &suffix);
    let w_prime = encode(&w, Side::Left);
    let x_prime = encode(&x, Side::Left);
    if w_prime == x_prime {
        return Err(Error::Internal("the encoded words coincide".into()));
    }
    Ok(WitnessReport {
        k,
        n,
        assembly,
        z_certified: z.certified(),
        z: z.word,
        c,
        suffix,
        w,
        x,
        w_prime,
        x_prime,
        lower_claim: (2 * n + 2).min(ceil_half_power(k)),
        upper_claim: n + 10 * k + 10,
        blueberry_claim: 2 * n + 2,
        lower_verified_to: 0,
        blueberry_verified_to: 0,
        lower_status: CheckStatus::Pending,
        blueberry_status: CheckStatus::Pending,
        upper_witness: None,
        upper_status: CheckStatus::Pending,
    })
}

/// Raises `p` from 1 until `claim − 1` while no `p`-state DFA separates the pair.
/// Returns the proven bound (`p + 1` for the last exhausted `p`) and a status. The
/// final level is re-certified independently.
fn verify_lower(w: &Word, x: &Word, claim: usize, meter: &mut Meter) -> (usize, CheckStatus) {
    let mut proven = 1;
    for p in 1..claim {
        match no_separator_within(w, x, p, meter) {
            Some(true) => proven = p + 1,
            Some(false) => return (proven, CheckStatus::Failed),
            None => return (proven, CheckStatus::BudgetBounded),
        }
    }
    if proven >= 2 {
        match recertify_no_separator(w, x, proven - 1, meter) {
            Some(true) => {}
            Some(false) => return (1, CheckStatus::Failed),
            None => return (proven, CheckStatus::BudgetBounded),
        }
    }
    let status = if proven >= claim {
        CheckStatus::Certified
    } else {
        CheckStatus::Failed
    };
    (proven, status)
}

/// Runs both bound checks on `report` and fills in the statuses.
///
/// Lower side: exhaustive search on `(w', x')` up to `lower_claim − 1` and up to
/// `blueberry_claim − 1` states. Upper side: the counting DFA for `G_k^R` must
/// accept `w'^R`, reject `x'^R`, and have at most `n + 10k + 10` states.
pub fn verify_witness(report: &WitnessReport, budget: &SearchBudget) -> Result<WitnessReport> {
    let mut out = report.clone();
    let mut meter = Meter::new(budget);
    let (wp, xp) = (&report.w_prime, &report.x_prime);

    (out.lower_verified_to, out.lower_status) = verify_lower(wp, xp, report.lower_claim, &mut meter);
    (out.blueberry_verified_to, out.blueberry_status) =
        verify_lower(wp, xp, report.blueberry_claim, &mut meter);

    let r = build_g_k(report.k)?.reversed();
    let d = farmand_dfa(&r, report.n)?;
    let separates = check_separates(&d, &wp.reversed(), &xp.reversed());
    out.upper_status = if separates && d.state_count() <= report.upper_claim {
        CheckStatus::Certified
    } else {
        CheckStatus::Failed
    };
    out.upper_witness = Some(d);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claims() {
        assert_eq!(ceil_half_power(1), 2);
        assert_eq!(ceil_half_power(2), 2);
        assert_eq!(ceil_half_power(3), 3);
        assert_eq!(ceil_half_power(4), 4);
        let r = witness_pair(2, 1, &SearchBudget::default(), Assembly::ReversalReady).unwrap();
        assert_eq!(r.lower_claim, 2);
        assert_eq!(r.upper_claim, 31);
    }

    #[test]
    fn small_pair_verifies() {
        let budget = SearchBudget::default();
        let r = witness_pair(1, 1, &budget, Assembly::ReversalReady).unwrap();
        let v = verify_witness(&r, &budget).unwrap();
        assert!(v.all_certified(), "{}", v.to_json());
        assert!(v.blueberry_verified_to >= 4);

        let broken = verify_witness(&v.with_flipped_bit(v.control_index()).unwrap(), &budget).unwrap();
        assert_eq!(broken.upper_status, CheckStatus::Failed);
    }

    #[test]
    fn suffixes_come_in_length_order() {
        let z = Word::ternary("2").unwrap();
        let pool = [Word::ternary("1").unwrap()];
        let mut seen = Vec::new();
        for extra in 0..=4 {
            for_each_suffix::<()>(&z, &pool, 2, extra, &mut |v| {
                seen.push(v.to_string());
                None
            });
        }
        assert_eq!(seen, ["2", "201", "2001", "20101"]);
    }
}
