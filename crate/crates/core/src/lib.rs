//! Placement of `k` mutually non-overlapping facilities of maximum common
//! radius on a horizontal segment (or on the boundary of a circle) so that no
//! demand point falls strictly inside any facility.
//!
//! The crate is organised bottom-up:
//!
//! - [`geom`] computes the blocked center positions induced by each demand
//!   point and their feasible complement, on the segment and on the circle.
//! - [`decision`] answers "can `k` facilities of radius `L` be placed?" with a
//!   constructive certificate, and verifies certificates independently.
//! - [`candidates`] enumerates every radius at which the optimum can occur
//!   and binary-searches them with the decision oracle.
//! - [`parametric`] finds the same optimum by simulating the greedy decision
//!   at the unknown optimum, including the round-batched two-facility variant.
//! - [`approx`] provides `(1 - eps)`-approximations by bisection and doubling.
//! - [`oracle`] holds brute-force ground truth and a deterministic instance
//!   generator used by the test suites.
//! - [`io`], [`svg`] and [`cli`] make up the command-line front end.

pub mod approx;
pub mod candidates;
pub mod cli;
pub mod decision;
mod error;
pub mod geom;
pub mod io;
pub mod oracle;
pub mod parametric;
pub mod poly;
pub mod svg;

pub use approx::{solve_fptas_circle, solve_fptas_segment, ApproxResult};
pub use candidates::{
    candidates_l2, candidates_linf, solve_exact, Candidate, CaseTag, OptimalResult, SolveStats,
};
pub use decision::{
    decide_circle, decide_segment, verify_packing, DecisionOutcome, Packing, Verify,
};
pub use error::{Error, Result};
pub use geom::{
    arc_length, blocked_arc, blocked_interval, feasible_arcs, feasible_intervals, ArcInterval,
    ArcSet, CircularInstance, Instance, Interval, IntervalSet, Metric, Point,
};
pub use oracle::{gen_circular_instance, gen_instance, oracle_rmax, GenParams};
pub use parametric::{
    comparison_roots, solve_k2, solve_parametric, ComparisonPoly, SearchInterval,
};

/// Absolute tolerance used for every geometric comparison in the crate
/// (coordinates, radii, distances and arc lengths).
pub const EPS: f64 = 1e-9;

/// Slack absorbed by the decision procedures so that tangency computed with
/// rounding error still counts as contact. Far below [`EPS`], so constructed
/// packings always pass [`verify_packing`].
pub(crate) const SNAP: f64 = 1e-12;
