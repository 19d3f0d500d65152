//! Δ-sieve: difference series over `n = p * q` with `q = p + Δ`, their steady
//! states, sieve zones, and the factorization and trapdoor schemes built on them.

pub mod error;
pub mod series;
pub mod steady;
pub mod zones;
pub mod factor;
pub mod equilibrium;
pub mod trapdoor;
pub mod golden;
pub mod plot;
pub mod cli;

pub use error::{Error, Result};
pub use series::{int, DeckId, DialPair, Int, Limit, Parity, SeriesKind, SeriesRow, SeriesSpec};
