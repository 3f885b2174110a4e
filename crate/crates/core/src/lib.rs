//! Exact separating-word computations, the `G_k` language family and certified
//! witness constructions for the gap between `sep(w, x)` and `sep(w^R, x^R)`.

pub mod dfa;
pub mod error;
mod nfa;
pub mod word;

pub use dfa::{BoolOp, Dfa, StateId, StateSet};
pub use error::{Error, Result};
pub use word::Word;
pub mod constructions;
pub mod harness;
pub mod lang;
pub mod sep;

pub use lang::LangHandle;
pub use sep::{exact_sep, SearchBudget, SepCertificate};
