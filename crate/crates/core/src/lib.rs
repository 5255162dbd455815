//! Fusion coefficients of type `A_{N-1}` at level `k`.
//!
//! Three independent routes to the same numbers:
//!
//! * [`orbit`]: `S_k`-orbits of `Z_N^k` and the fixed orbit product;
//! * [`fusion`]: the quotient `Λ_N / I^(N,k)` with fusion Pieri rules and
//!   Jacobi-Trudi expansion;
//! * [`affine_weyl`]: tableau Racah-Speiser and Kac-Walton.
//!
//! [`duality`] adds simple currents and rank-level duality.

pub mod affine_weyl;
pub mod combinatorics;
pub mod context;
pub mod duality;
pub mod error;
pub mod expansion;
pub mod fusion;
mod jacobi_trudi;
pub mod orbit;
pub mod parse;

pub use context::FusionContext;
pub use error::{Error, Result};
pub use expansion::Expansion;
