//! Kunz words, gap sets and query descriptions.

mod gaps;
mod query;
mod word;

pub use gaps::GapSet;
pub use query::CountQuery;
pub use word::{KunzWord, SemigroupInvariants};
