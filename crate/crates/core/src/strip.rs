//! The cylinder strip of near-antipodal point pairs and per-shortcut
//! coverage regions.
//!
//! A pair at counter-clockwise gap `pi + xi` with `|xi| <= dstar` is encoded
//! as `(theta, xi)` with `p = theta - xi/2`, `q = theta + pi + xi/2`. The
//! strip `[0, 2pi] x [-dstar, dstar]` is a cylinder in `theta`. The set of
//! pairs that a single shortcut brings within distance `pi - dstar` forms two
//! congruent axis-aligned rectangles there; covering the strip with such
//! rectangles certifies a diameter.

use std::f64::consts::{PI, TAU};

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::shortcut::{inverse_detour, Shortcut, MAX_DETOUR};

const GUARD: f64 = 1e-12;

fn check_half_height(dstar: f64) -> Result<()> {
    if !(0.0..=PI - 2.0).contains(&dstar) {
        return Err(Error::StripHalfHeight(dstar));
    }
    Ok(())
}

fn check_chord(a: f64) -> Result<()> {
    if !(a > 0.0 && a <= 2.0) {
        return Err(Error::ChordLength(a));
    }
    Ok(())
}

/// A point of the strip: `theta` on the cylinder, `xi` in
/// `[-half_height, half_height]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StripCoord {
    theta: f64,
    xi: f64,
    half_height: f64,
}

impl StripCoord {
    pub fn new(theta: f64, xi: f64, half_height: f64) -> Result<Self> {
        check_half_height(half_height)?;
        if xi.abs() > half_height + GUARD {
            return Err(Error::StripCoordinate { xi, half_height });
        }
        Ok(StripCoord {
            theta: Angle::new(theta).radians(),
            xi,
            half_height,
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn half_height(&self) -> f64 {
        self.half_height
    }

    /// The equivalent representation of the same unordered pair.
    pub fn twin(&self) -> StripCoord {
        StripCoord {
            theta: Angle::new(self.theta + PI).radians(),
            xi: -self.xi,
            half_height: self.half_height,
        }
    }
}

/// Encodes an unordered pair as a strip coordinate, or `None` when the pair
/// is not near-antipodal enough for the given strip. Of the two equivalent
/// representations the one with the smaller `theta` is returned; both are
/// accepted everywhere on input.
pub fn pair_to_strip(p: Angle, q: Angle, half_height: f64) -> Result<Option<StripCoord>> {
    check_half_height(half_height)?;
    let xi = p.ccw_to(q) - PI; // in [-pi, pi)
    if xi.abs() > half_height + GUARD {
        return Ok(None);
    }
    // theta = p + xi/2 for the (p, q) ordering; the twin comes from (q, p).
    let t1 = Angle::new(p.radians() + xi / 2.0).radians();
    let t2 = Angle::new(t1 + PI).radians();
    let theta = t1.min(t2);
    let xi = if theta == t1 { xi } else { -xi };
    Ok(Some(StripCoord {
        theta,
        xi,
        half_height,
    }))
}

/// Decodes a strip coordinate back to its point pair.
pub fn strip_to_pair(c: &StripCoord) -> (Angle, Angle) {
    (
        Angle::new(c.theta - c.xi / 2.0),
        Angle::new(c.theta + PI + c.xi / 2.0),
    )
}

/// An axis-aligned rectangle on the strip cylinder. The `theta` interval may
/// wrap; `width = 0` encodes an empty rectangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StripRect {
    theta_start: f64,
    width: f64,
    xi_lo: f64,
    xi_hi: f64,
    half_height: f64,
}

impl StripRect {
    pub fn new(theta_start: f64, width: f64, xi_lo: f64, xi_hi: f64, half_height: f64) -> Self {
        debug_assert!((0.0..=TAU + GUARD).contains(&width));
        debug_assert!(xi_lo <= xi_hi + GUARD);
        StripRect {
            theta_start: Angle::new(theta_start).radians(),
            width: width.clamp(0.0, TAU),
            xi_lo,
            xi_hi,
            half_height,
        }
    }

    pub fn empty(half_height: f64) -> Self {
        StripRect {
            theta_start: 0.0,
            width: 0.0,
            xi_lo: 0.0,
            xi_hi: 0.0,
            half_height,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.width <= 0.0
    }

    pub fn theta_start(&self) -> f64 {
        self.theta_start
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn xi_lo(&self) -> f64 {
        self.xi_lo
    }

    pub fn xi_hi(&self) -> f64 {
        self.xi_hi
    }

    pub fn height(&self) -> f64 {
        (self.xi_hi - self.xi_lo).max(0.0)
    }

    pub fn half_height(&self) -> f64 {
        self.half_height
    }

    pub fn area(&self) -> f64 {
        self.width * self.height()
    }

    pub fn translated(&self, by: f64) -> StripRect {
        StripRect {
            theta_start: Angle::new(self.theta_start + by).radians(),
            ..*self
        }
    }

    fn covers_xi(&self, xi: f64) -> bool {
        !self.is_empty() && xi >= self.xi_lo - GUARD && xi <= self.xi_hi + GUARD
    }
}

/// Coverage rectangles of the canonical vertical shortcut (endpoints at
/// `-span/2` and `span/2`) of chord length `a`, at strip half-height
/// `dstar`. Rotating the shortcut by `phi` translates both rectangles by
/// `phi`; see [`shortcut_rectangles`].
///
/// Width is `pi - a - dstar` whenever positive. Height: the full strip when
/// `dstar <= detour(a)`; otherwise `2 * detour(a)` hanging from the top
/// boundary (the twin hangs from the bottom); in the remaining case (only
/// possible for `dstar > pi/2 - 1`) a centered band of height
/// `2 (pi - a - dstar)` touching neither boundary.
pub fn region_rectangles(a: f64, dstar: f64) -> Result<(StripRect, StripRect)> {
    check_chord(a)?;
    check_half_height(dstar)?;
    let width = PI - a - dstar;
    if width <= 0.0 {
        return Ok((StripRect::empty(dstar), StripRect::empty(dstar)));
    }
    let delta = Shortcut::from_rotation(a, 0.0)?.detour();
    let (lo, hi) = if dstar <= delta {
        (-dstar, dstar)
    } else if dstar <= PI - a - delta {
        (dstar - 2.0 * delta, dstar)
    } else {
        debug_assert!(
            dstar > MAX_DETOUR,
            "detached rectangles require dstar above the maximum detour gain"
        );
        (dstar - 2.0 * delta, 2.0 * (PI - a - delta) - dstar)
    };
    let theta_start = a / 2.0 + dstar / 2.0;
    let first = StripRect::new(theta_start, width, lo, hi, dstar);
    let second = StripRect::new(theta_start + PI, width, -hi, -lo, dstar);
    Ok((first, second))
}

/// Coverage rectangles of an arbitrary shortcut: the canonical ones
/// translated by its rotation.
pub fn shortcut_rectangles(s: &Shortcut, dstar: f64) -> Result<(StripRect, StripRect)> {
    let (r1, r2) = region_rectangles(s.chord(), dstar)?;
    let phi = s.rotation().radians();
    Ok((r1.translated(phi), r2.translated(phi)))
}

/// Length of the intersection of the region with the middle line `xi = 0`
/// (antipodal pairs).
pub fn midline_cut(a: f64, dstar: f64) -> Result<f64> {
    let (r1, r2) = region_rectangles(a, dstar)?;
    Ok(line_cut(&[r1, r2], 0.0))
}

/// Length of the intersection of the region with the upper boundary
/// `xi = dstar`.
pub fn boundary_cut(a: f64, dstar: f64) -> Result<f64> {
    let (r1, r2) = region_rectangles(a, dstar)?;
    Ok(line_cut(&[r1, r2], dstar))
}

fn line_cut(rects: &[StripRect], xi: f64) -> f64 {
    rects
        .iter()
        .filter(|r| r.covers_xi(xi))
        .map(StripRect::width)
        .sum()
}

/// Exact total area of the two coverage rectangles.
pub fn region_area(a: f64, dstar: f64) -> Result<f64> {
    let (r1, r2) = region_rectangles(a, dstar)?;
    Ok(r1.area() + r2.area())
}

/// The area profile used by the covering arguments: `4 dstar (pi - a -
/// dstar)` past the critical chord `a* = inverse_detour(dstar)` (clamped to
/// 2) and `4 detour(a) (pi - a - dstar)` before it. Coincides with
/// [`region_area`] for `dstar <= pi/2 - 1`; for larger `dstar` it is an
/// upper bound. Increasing up to `a*` and decreasing after, for any fixed
/// `dstar <= 0.7`.
pub fn area_bound(a: f64, dstar: f64) -> Result<f64> {
    check_chord(a)?;
    check_half_height(dstar)?;
    let width = (PI - a - dstar).max(0.0);
    let a_star = if dstar >= MAX_DETOUR {
        2.0
    } else {
        inverse_detour(dstar)?
    };
    let height = if a > a_star {
        4.0 * dstar
    } else {
        4.0 * Shortcut::from_rotation(a, 0.0)?.detour()
    };
    Ok(height * width)
}

/// Membership test straight from the piecewise route-length formulas (not
/// the rectangles): the pair encoded by `c` is in the region of `s` exactly
/// when the top-to-bottom route is at most `pi - dstar`, after reducing to
/// the canonical half `theta in [0, pi]`.
pub fn region_contains(c: &StripCoord, s: &Shortcut) -> bool {
    let alpha = s.span();
    let delta = s.detour();
    let a = s.chord();
    let dstar = c.half_height;

    let mut theta = (c.theta - s.rotation().radians()).rem_euclid(TAU);
    let mut xi = c.xi;
    if theta > PI {
        theta -= PI;
        xi = -xi;
    }
    let above_first = xi > 2.0 * theta - alpha; // p before the top endpoint
    let above_second = xi > TAU - alpha - 2.0 * theta; // q past the bottom endpoint
    let f = match (above_first, above_second) {
        (true, false) => PI - 2.0 * delta + alpha - 2.0 * theta,
        (false, true) => 2.0 * (theta - PI + alpha / 2.0) + PI - 2.0 * delta,
        (false, false) => PI - 2.0 * delta - xi,
        (true, true) => 2.0 * (a + delta) - PI + xi,
    };
    f <= PI - dstar
}

/// What a set of rectangles is asked to cover.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CoverTarget {
    /// The horizontal line `xi = c` across the whole cylinder.
    Line(f64),
    /// The entire strip.
    Strip,
}

/// An uncovered stretch found by the checker.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoverGap {
    /// Height at which the gap was found.
    pub xi: f64,
    /// Start of the uncovered theta interval.
    pub theta_start: f64,
    /// Length of the uncovered theta interval.
    pub width: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoverOutcome {
    pub covered: bool,
    pub gap: Option<CoverGap>,
}

impl CoverOutcome {
    fn covered() -> Self {
        CoverOutcome {
            covered: true,
            gap: None,
        }
    }

    fn gap(xi: f64, theta_start: f64, width: f64) -> Self {
        CoverOutcome {
            covered: false,
            gap: Some(CoverGap {
                xi,
                theta_start,
                width,
            }),
        }
    }
}

/// Exact cover check on the cylinder. Rectangles are closed; touching
/// counts as covered. For the full strip the checker sweeps every distinct
/// `xi` breakpoint and every midpoint between consecutive breakpoints (the
/// active rectangle set is constant strictly between breakpoints, so this
/// decides coverage exactly).
pub fn covers(rects: &[StripRect], target: CoverTarget) -> Result<CoverOutcome> {
    let live: Vec<&StripRect> = rects.iter().filter(|r| !r.is_empty()).collect();
    if let Some(first) = live.first() {
        let d = first.half_height;
        if live.iter().any(|r| (r.half_height - d).abs() > GUARD) {
            return Err(Error::StripMismatch);
        }
    }
    match target {
        CoverTarget::Line(xi) => Ok(check_line(&live, xi)),
        CoverTarget::Strip => {
            let Some(first) = live.first() else {
                return Ok(CoverOutcome::gap(0.0, 0.0, TAU));
            };
            let d = first.half_height;
            let mut breaks = vec![-d, d];
            for r in &live {
                for v in [r.xi_lo, r.xi_hi] {
                    if v.abs() <= d + GUARD {
                        breaks.push(v.clamp(-d, d));
                    }
                }
            }
            breaks.sort_by(f64::total_cmp);
            breaks.dedup_by(|a, b| (*a - *b).abs() <= GUARD);
            let mut lines = Vec::with_capacity(2 * breaks.len());
            for (i, &b) in breaks.iter().enumerate() {
                lines.push(b);
                if let Some(&next) = breaks.get(i + 1) {
                    lines.push(0.5 * (b + next));
                }
            }
            for xi in lines {
                let out = check_line(&live, xi);
                if !out.covered {
                    return Ok(out);
                }
            }
            Ok(CoverOutcome::covered())
        }
    }
}

fn check_line(live: &[&StripRect], xi: f64) -> CoverOutcome {
    let mut iv: Vec<(f64, f64)> = live
        .iter()
        .filter(|r| r.covers_xi(xi))
        .map(|r| (r.theta_start, r.width))
        .collect();
    if iv.is_empty() {
        return CoverOutcome::gap(xi, 0.0, TAU);
    }
    if iv.iter().any(|&(_, w)| w >= TAU - GUARD) {
        return CoverOutcome::covered();
    }
    iv.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (s0, w0) = iv[0];
    let mut end = s0 + w0;
    for &(s, w) in &iv[1..] {
        if s > end + GUARD {
            return CoverOutcome::gap(xi, Angle::new(end).radians(), s - end);
        }
        end = end.max(s + w);
    }
    if end >= s0 + TAU - GUARD {
        CoverOutcome::covered()
    } else {
        CoverOutcome::gap(xi, Angle::new(end).radians(), s0 + TAU - end)
    }
}
