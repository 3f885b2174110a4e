//! Lemma-check registry, the `S(n)` atlas and the result cache behind the CLI.

pub mod atlas;
pub mod cache;
pub mod lemmas;

pub use atlas::{compute_atlas, AtlasRow, AtlasStats, DEFAULT_ATLAS_CAP};
pub use cache::{Cache, ENGINE_VERSION};
pub use lemmas::{exit_code, registry, run_lemma_suite, Ctx, LemmaOutcome, LemmaStatus, LEMMA_IDS};
