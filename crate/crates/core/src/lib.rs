pub mod bounds;
pub mod cli;
pub mod engine;
pub mod error;
pub mod exact;
pub mod graphs;
pub mod kunz;
pub mod refdata;
pub mod stats;

pub use engine::{count, enumerate, Engine};
pub use error::{Error, Result};
pub use exact::{ExactCount, RationalInterval};
pub use kunz::{CountQuery, GapSet, KunzWord, SemigroupInvariants};
