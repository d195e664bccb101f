//! Associated primes, localization, and primary decomposition of
//! submodules of free modules.

mod driver;
mod factor;
mod local;
mod minass;
mod types;
#[cfg(test)]
mod tests;

pub use driver::{
    primary_component, primdec_ehv, primdec_ehv_with, Extraction, PrimdecConfig, DEFAULT_BOUND,
};
pub use factor::{factor, univariate_factor};
pub use local::{localize_module, localize_radical_ideal};
pub use minass::{min_ass, min_ass_seeded, radical_equidim};
pub use types::{Component, DecompositionResult, PrimeIdeal, TraceStep};
