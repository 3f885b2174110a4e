//! Exact computation of `sep(w, x)`, the size of the smallest DFA accepting `w`
//! and rejecting `x`, together with the `lsep` variant against a whole language.
//!
//! Separation and distinguishability need the same number of states: a structure
//! that sends `w` and `x` to different states separates them once the end state of
//! `w` is made the only accepting state. The solver therefore searches transition
//! structures only.

mod certificate;
mod lsep;
mod search;
mod unary;

use std::time::{Duration, Instant};

use crate::dfa::{enumerate_canonical, Dfa};
use crate::error::{Error, Result};
use crate::word::Word;

pub use certificate::{LowerMethod, SepCertificate};
pub use lsep::{lsep_by_raw_tables, lsep_lower_check, LsepOracle};
pub use unary::unary_sep;

pub(crate) use certificate::upper_bound_certificate;
pub(crate) use search::{complete_table, distinguish, Probe};

/// Resource limits for a search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_states: usize,
    pub max_nodes: u64,
    pub wall_limit: Duration,
}

impl SearchBudget {
    pub fn new(max_states: usize, max_nodes: u64, wall_limit: Duration) -> Result<Self> {
        if max_states == 0 || max_nodes == 0 || wall_limit.is_zero() {
            return Err(Error::OutOfRange("budget limits must be positive".into()));
        }
        Ok(SearchBudget {
            max_states,
            max_nodes,
            wall_limit,
        })
    }

    pub fn unlimited() -> Self {
        SearchBudget {
            max_states: usize::MAX,
            max_nodes: u64::MAX,
            wall_limit: Duration::from_secs(u64::MAX / 4),
        }
    }

    pub fn with_max_states(mut self, max_states: usize) -> Self {
        self.max_states = max_states.max(1);
        self
    }

    pub fn with_max_nodes(mut self, max_nodes: u64) -> Self {
        self.max_nodes = max_nodes.max(1);
        self
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_states: 16,
            max_nodes: 200_000_000,
            wall_limit: Duration::from_secs(600),
        }
    }
}

/// Shared node and wall-clock accounting for one or more searches.
#[derive(Debug)]
pub struct Meter {
    nodes: u64,
    max_nodes: u64,
    started: Instant,
    wall_limit: Duration,
    exhausted: bool,
}

impl Meter {
    pub fn new(budget: &SearchBudget) -> Self {
        Meter {
            nodes: 0,
            max_nodes: budget.max_nodes,
            started: Instant::now(),
            wall_limit: budget.wall_limit,
            exhausted: false,
        }
    }

    /// Counts one search node; `false` once the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes
            || (self.nodes & 0xfff == 0 && self.started.elapsed() > self.wall_limit)
        {
            self.exhausted = true;
            return false;
        }
        true
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn elapsed(&self) -> Duration {
        self.started.elapsed()
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }
}

fn alphabet_of(w: &Word, x: &Word) -> usize {
    w.alphabet_size().max(x.alphabet_size()) as usize
}

/// Computes `sep(w, x)` by iterative deepening over the number of states.
///
/// The result is exact unless the budget runs out, in which case the certificate
/// carries a proven interval `[lower, upper]` and a witness of size `upper`.
pub fn exact_sep(w: &Word, x: &Word, budget: &SearchBudget) -> Result<SepCertificate> {
    if w == x {
        return Err(Error::EqualWords);
    }
    let mut meter = Meter::new(budget);
    let k = alphabet_of(w, x);

    if let Some(analytic) = unary::unary_certificate(w, x, k as u8) {
        if analytic.upper > 4 {
            return Ok(analytic.finish(&meter));
        }
        // small analytic values are confirmed by search before use
        let searched = deepen(w, x, k, budget, &mut meter)?;
        if searched.exact() && searched.upper != analytic.upper {
            return Err(Error::Internal(format!(
                "unary formula gives {} but search gives {} for ({w}, {x})",
                analytic.upper, searched.upper
            )));
        }
        return Ok(searched);
    }
    deepen(w, x, k, budget, &mut meter)
}

fn deepen(w: &Word, x: &Word, k: usize, budget: &SearchBudget, meter: &mut Meter) -> Result<SepCertificate> {
    let mut cert = certificate::upper_bound_certificate(w, x, k as u8);
    let mut p = 1;
    while p < cert.upper {
        if p > budget.max_states {
            break;
        }
        match distinguish(w.symbols(), x.symbols(), k, p, meter) {
            Probe::Found { table, used, end_w } => {
                debug_assert_eq!(used, p);
                let table = complete_table(&table, used, k);
                let mut accepting = vec![false; used];
                accepting[end_w] = true;
                cert.upper = used;
                cert.witness = Dfa::new(k as u8, table, accepting)?;
                cert.lower = used;
                cert.lower_method = LowerMethod::ExhaustiveCanonical;
                break;
            }
            Probe::Exhausted => {
                cert.lower = p + 1;
                cert.lower_method = LowerMethod::ExhaustiveCanonical;
            }
            Probe::OutOfBudget => break,
        }
        p += 1;
    }
    cert.nodes = meter.nodes();
    cert.millis = meter.elapsed().as_millis() as u64;
    debug_assert!(check_separates(&cert.witness, w, x));
    Ok(cert)
}

/// `true` iff no DFA with at most `p` states separates `w` from `x`.
pub fn no_separator_up_to(w: &Word, x: &Word, p: usize) -> bool {
    no_separator_within(w, x, p, &mut Meter::new(&SearchBudget::unlimited()))
        .expect("unlimited budget")
}

/// Budgeted form of [`no_separator_up_to`]; `None` when the budget ran out.
pub fn no_separator_within(w: &Word, x: &Word, p: usize, meter: &mut Meter) -> Option<bool> {
    if w == x {
        return Some(true);
    }
    match distinguish(w.symbols(), x.symbols(), alphabet_of(w, x), p.max(1), meter) {
        Probe::Found { .. } => Some(false),
        Probe::Exhausted => Some(true),
        Probe::OutOfBudget => None,
    }
}

/// Same question as [`no_separator_up_to`], answered by running both words through
/// every canonical structure. Independent of the lazy search; used to re-certify.
pub fn no_separator_by_enumeration(w: &Word, x: &Word, p: usize) -> bool {
    let k = alphabet_of(w, x) as u8;
    enumerate_canonical(p.max(1), k)
        .all(|d| d.run_symbols(0, w.symbols()) == d.run_symbols(0, x.symbols()))
}

/// `d` accepts `w` and rejects `x`. Words with symbols outside `d`'s alphabet are
/// neither accepted nor rejected, so the check fails for them.
pub fn check_separates(d: &Dfa, w: &Word, x: &Word) -> bool {
    matches!((d.accepts(w), d.accepts(x)), (Ok(true), Ok(false)))
}
