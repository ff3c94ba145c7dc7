//! Exact-arithmetic generalized Schur P- and Q-functions.
//!
//! Everything is computed over the rationals (or polynomial/rational-function
//! rings over them); there is no floating point anywhere. Three independent
//! evaluation routes — a Pfaffian over a bordered skew matrix, a
//! Hall–Littlewood specialization at t = -1, and a Schur-style Pfaffian of
//! two-row functions — are implemented separately and cross-checked by the
//! verification suites exposed through the `pfq` binary.

pub mod bcd;
pub mod guide;
pub mod partition;
pub mod pfaffian;
pub mod pfunc;
pub mod pieri;
pub mod poly;
pub mod ratfn;
pub mod ring;
pub mod seq;
pub mod series;
pub mod skew;
pub mod suites;
