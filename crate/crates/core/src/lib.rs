//! Bidding optimization and ex-post backtesting for a grid-connected
//! electrolyzer that sells hydrogen under a fixed-price purchase agreement
//! while offering FCR and mFRR reserve capacity.
//!
//! The crate is organized along the pipeline:
//!
//! * [`domain`] — physical and market data types, the piecewise hydrogen
//!   production curve, instance validation.
//! * [`model`] — translates one delivery day into a mixed-integer linear
//!   program (variables, sparse rows, objective, integrality marks).
//! * [`solver`] — two-phase primal simplex plus depth-first branch and
//!   bound, and an adapter for external MILP solvers.
//! * [`expost`] — realized-activation rule, re-dispatch under fixed bids,
//!   settlement and profit decomposition.
//! * [`ingest`] — CSV price archives, run configuration, day
//!   materialization.

pub mod domain;
pub mod expost;
pub mod ingest;
pub mod model;
pub mod solver;
