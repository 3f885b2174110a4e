//! Witness constructions: the canonical triple, the tl encoding, the counting DFA
//! for reversed words, and the searches that produce the words themselves.

mod encode;
mod farmand;
mod free;
mod search;
mod triple;
mod witness;

pub use encode::{encode, Side};
pub use farmand::farmand_dfa;
pub use free::{free_state_limit, free_word, shortest_common_word, FreeContext};
pub use search::{search_c_n, search_z_k, ZWord, EXHAUSTIVE_LSEP_STATES};
pub use triple::{factorial, CanonicalTriple, MAX_TRIPLE_N};
pub use witness::{ceil_half_power, verify_witness, witness_pair, Assembly, CheckStatus, WitnessReport};
