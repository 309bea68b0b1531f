//! Physical and market domain types shared by the whole pipeline.
//!
//! Everything here is plain immutable data: construct, validate once with
//! [`validate_instance`], then share freely across threads.

mod curve;
pub mod curve_fit;
mod types;
mod validate;

pub use curve::{evaluate_curve, CurveError, CurveSegment, ProductionCurve};
pub use types::{
    BidSchedule, DayInstance, ElectrolyzerSpec, HourState, HydrogenContract, MarketStructure,
    TrailerSlot,
};
pub use validate::{validate_instance, ValidationError, ValidationIssue};
