//! Exact solver for non-wild video poker (Jacks or Better family and
//! Double Bonus): enumerates suit-equivalence classes of initial hands,
//! computes integer-scaled optimal conditional expected returns for every
//! hold decision, aggregates the exact return distribution, and verifies
//! hand-rank strategy charts by exhaustion.

pub mod canonical;
pub mod cli;
pub mod deck;
pub mod distribution;
pub mod expect;
pub mod strategy;
