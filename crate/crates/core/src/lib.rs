//! Chord-shortcut metric on the unit circle.
//!
//! The circle is a metric space under shorter-arc distance; adding chords
//! ("shortcuts") that paths may only traverse end-to-end shrinks its
//! continuous diameter. This crate provides:
//!
//! - the elementary chord geometry (spans, detour gains, umbra arcs),
//! - the exact shortest-path metric for a set of shortcuts and certified
//!   interval bounds on the continuous diameter,
//! - the cylinder-strip picture of near-antipodal pairs, per-shortcut
//!   coverage rectangles, and an exact cover checker,
//! - solvers for the characteristic constants and generators for the
//!   optimal and near-optimal configurations (2 to 8 shortcuts, plus an
//!   asymptotic family),
//! - a mechanical re-check of the reference calculation log that backs the
//!   optimality arguments.

pub mod angle;
pub mod error;
pub mod metric;
pub mod roots;
pub mod shortcut;
pub mod strip;
pub mod synthesis;
pub mod verify;

pub use angle::{Angle, Arc};
pub use error::{Error, Result};
pub use metric::{
    diameter_bounds, distance, single_shortcut_distance, Configuration, DiameterBound, Leg,
    PathWitness,
};
pub use shortcut::{detour_gain, inverse_detour, span_angle, Shortcut, MAX_DETOUR};
pub use strip::{
    area_bound, boundary_cut, covers, midline_cut, pair_to_strip, region_area, region_contains,
    region_rectangles, shortcut_rectangles, strip_to_pair, CoverGap, CoverOutcome, CoverTarget,
    StripCoord, StripRect,
};
pub use synthesis::{
    asymptotic_config, config_rectangles, eight_config, six_config, solve_eight, solve_k_star,
    strip_cover, uniform_config, AsymptoticReport, EightSolution, KStarSolution,
};
pub use verify::{
    all_pass, area_lemma_report, asymptotic_report, fmt_sig, reference_report, render_text, Bound,
    CheckLine,
};
