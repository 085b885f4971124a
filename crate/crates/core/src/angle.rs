//! Angles on the unit circle and counter-clockwise arcs.
//!
//! All angle arithmetic happens on the real line and is reduced into
//! `[0, 2pi)` at the end, so wrap-around never leaks into callers.

use std::f64::consts::TAU;
use std::fmt;

/// Values within this distance of `2pi` normalize to `0`.
pub const WRAP_EPS: f64 = 1e-12;

/// A point on the unit circle, stored as its polar angle in `[0, 2pi)`.
#[derive(Clone, Copy, PartialEq, PartialOrd)]
pub struct Angle(f64);

impl Angle {
    /// Normalizes an arbitrary radian value into `[0, 2pi)`.
    pub fn new(radians: f64) -> Self {
        let mut r = radians.rem_euclid(TAU);
        if r >= TAU || TAU - r < WRAP_EPS {
            r = 0.0;
        }
        Angle(r)
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    /// Length of the counter-clockwise arc from `self` to `other`, in `[0, 2pi)`.
    pub fn ccw_to(self, other: Angle) -> f64 {
        let d = (other.0 - self.0).rem_euclid(TAU);
        if d >= TAU {
            0.0
        } else {
            d
        }
    }

    /// Length of the shorter arc between the two points, in `[0, pi]`.
    pub fn arc_distance(self, other: Angle) -> f64 {
        let d = self.ccw_to(other);
        d.min(TAU - d)
    }

    /// Euclidean (chord) distance between the two points.
    pub fn chord_to(self, other: Angle) -> f64 {
        2.0 * (self.arc_distance(other) / 2.0).sin()
    }

    /// The antipodal point.
    pub fn antipode(self) -> Angle {
        self.offset(std::f64::consts::PI)
    }

    /// The point `radians` further counter-clockwise (negative = clockwise).
    pub fn offset(self, radians: f64) -> Angle {
        Angle::new(self.0 + radians)
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Angle({})", self.0)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl From<f64> for Angle {
    fn from(radians: f64) -> Self {
        Angle::new(radians)
    }
}

/// A counter-clockwise arc: start point plus arc length in `[0, 2pi]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Arc {
    start: Angle,
    length: f64,
}

impl Arc {
    pub fn new(start: Angle, length: f64) -> Self {
        debug_assert!(
            (-WRAP_EPS..=TAU + WRAP_EPS).contains(&length),
            "arc length {length} outside [0, 2pi]"
        );
        Arc {
            start,
            length: length.clamp(0.0, TAU),
        }
    }

    /// Arc running counter-clockwise from `start` to `end`.
    pub fn from_endpoints(start: Angle, end: Angle) -> Self {
        Arc::new(start, start.ccw_to(end))
    }

    pub fn start(&self) -> Angle {
        self.start
    }

    pub fn end(&self) -> Angle {
        self.start.offset(self.length)
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn midpoint(&self) -> Angle {
        self.start.offset(self.length / 2.0)
    }

    pub fn translated(&self, radians: f64) -> Arc {
        Arc::new(self.start.offset(radians), self.length)
    }

    /// Signed depth of `p` relative to the arc: positive inside (arc distance
    /// to the nearer endpoint along the arc), negative outside.
    pub fn interior_depth(&self, p: Angle) -> f64 {
        let t = self.start.ccw_to(p);
        if t <= self.length {
            t.min(self.length - t)
        } else {
            -(t - self.length).min(TAU - t)
        }
    }

    /// Membership with an explicit tolerance: the arc grown by `eps` at both
    /// ends. Boundary semantics stay with the caller.
    pub fn contains(&self, p: Angle, eps: f64) -> bool {
        self.interior_depth(p) >= -eps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn normalization_wraps_into_range() {
        assert_eq!(Angle::new(TAU).radians(), 0.0);
        assert_eq!(Angle::new(-TAU).radians(), 0.0);
        assert_eq!(Angle::new(TAU - 1e-14).radians(), 0.0);
        let a = Angle::new(-PI / 2.0);
        assert!((a.radians() - 3.0 * PI / 2.0).abs() < 1e-15);
        assert!(Angle::new(7.0 * PI).radians() - PI < 1e-12);
    }

    #[test]
    fn ccw_and_arc_distance() {
        let a = Angle::new(0.1);
        let b = Angle::new(TAU - 0.1);
        assert!((a.ccw_to(b) - (TAU - 0.2)).abs() < 1e-15);
        assert!((b.ccw_to(a) - 0.2).abs() < 1e-15);
        assert!((a.arc_distance(b) - 0.2).abs() < 1e-15);
        assert_eq!(a.arc_distance(a), 0.0);
    }

    #[test]
    fn chord_of_antipodal_pair_is_two() {
        let a = Angle::new(1.3);
        assert!((a.chord_to(a.antipode()) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn arc_depth_inside_and_outside() {
        let arc = Arc::new(Angle::new(1.0), 1.0);
        assert!((arc.interior_depth(Angle::new(1.5)) - 0.5).abs() < 1e-15);
        assert!((arc.interior_depth(Angle::new(1.1)) - 0.1).abs() < 1e-15);
        assert!((arc.interior_depth(Angle::new(2.5)) + 0.5).abs() < 1e-15);
        assert!((arc.interior_depth(Angle::new(0.5)) + 0.5).abs() < 1e-15);
        assert!(arc.contains(Angle::new(1.0), 0.0));
        assert!(arc.contains(Angle::new(2.0), 0.0));
        assert!(!arc.contains(Angle::new(2.0 + 1e-9), 1e-12));
        assert!(arc.contains(Angle::new(2.0 + 1e-9), 1e-8));
    }

    #[test]
    fn arc_wrapping_end() {
        let arc = Arc::from_endpoints(Angle::new(6.0), Angle::new(1.0));
        assert!((arc.length() - (1.0 + TAU - 6.0)).abs() < 1e-15);
        assert!(arc.contains(Angle::new(0.2), 0.0));
        assert!(!arc.contains(Angle::new(3.0), 0.0));
    }
}
