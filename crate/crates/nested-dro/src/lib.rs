//! Multistage distributionally robust linear optimization over
//! adapted-transport (nested-distance) uncertainty sets.
//!
//! The crate provides:
//!
//! - [`tree`]: finite scenario trees, stagewise-independent product trees,
//!   scenario fans, adapted empirical measures and path sampling;
//! - [`transport`]: Wasserstein, causal and nested (bi-causal) transport
//!   distances between scenario trees, plus causality checks on plans;
//! - [`lp`]: a dense two-phase revised simplex solver with dual solutions,
//!   the single numerical kernel used everywhere else;
//! - [`dro`]: robust risk evaluation of fixed policies, tractable
//!   cost-to-go reformulations (objective and right-hand-side uncertainty),
//!   exact desk-scale solvers and the AVaR baseline;
//! - [`sddp`]: cut-based stochastic dual dynamic programming for the robust
//!   reformulation with uncertainty in the technology matrix;
//! - [`portfolio`]: the dynamic portfolio application with return
//!   simulation, out-of-sample testing and experiment sweeps.
//!
//! All randomness is funneled through explicit seeds (see [`rng`]); every
//! operation is deterministic given its inputs and seed.

pub mod dro;
pub mod lp;
pub mod norm;
pub mod portfolio;
pub mod rng;
pub mod sddp;
pub mod transport;
pub mod tree;

pub use norm::{Norm, Order};
