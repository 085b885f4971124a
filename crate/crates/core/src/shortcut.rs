//! Chords of the unit circle and the elementary functions attached to them.
//!
//! A chord of length `a` subtends the central angle `span_angle(a) =
//! 2 asin(a/2)`. Walking the subtended arc instead of the chord costs
//! `2 * detour_gain(a)` extra, with `detour_gain(a) = asin(a/2) - a/2`; this
//! per-use saving is the quantity every construction in the crate optimizes.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::angle::{Angle, Arc};
use crate::error::{Error, Result};
use crate::roots::bisect;

/// Largest possible detour gain, reached by a diameter chord: `pi/2 - 1`.
pub const MAX_DETOUR: f64 = FRAC_PI_2 - 1.0;

/// Central angle subtended by a chord of length `a`, in `[0, pi]`.
pub fn span_angle(a: f64) -> Result<f64> {
    if !(0.0..=2.0).contains(&a) {
        return Err(Error::ChordLength(a));
    }
    Ok(2.0 * (a / 2.0).asin())
}

/// Detour gain `asin(a/2) - a/2` of a chord of length `a`.
///
/// Increasing and convex on `[0, 2]`, with range `[0, pi/2 - 1]`.
pub fn detour_gain(a: f64) -> Result<f64> {
    if !(0.0..=2.0).contains(&a) {
        return Err(Error::ChordLength(a));
    }
    Ok((a / 2.0).asin() - a / 2.0)
}

/// Inverse of [`detour_gain`]: the unique chord length with the given gain.
pub fn inverse_detour(d: f64) -> Result<f64> {
    if !(0.0..=MAX_DETOUR).contains(&d) {
        return Err(Error::DetourGain(d));
    }
    Ok(bisect(0.0, 2.0, 1e-13, |a| {
        ((a / 2.0).asin() - a / 2.0) - d
    }))
}

fn span_unchecked(a: f64) -> f64 {
    2.0 * (a / 2.0).asin()
}

fn detour_unchecked(a: f64) -> f64 {
    (a / 2.0).asin() - a / 2.0
}

/// A shortcut: a chord `uv` whose counter-clockwise arc from `u` to `v` is
/// the shorter one. Chord length, span and detour gain are fixed at
/// construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Shortcut {
    u: Angle,
    v: Angle,
    chord: f64,
    span: f64,
    detour: f64,
}

impl Shortcut {
    /// Builds the chord with the given endpoints, swapping them if needed so
    /// that the counter-clockwise arc `u -> v` is the shorter one. For a
    /// diameter (both arcs equal) the endpoints are kept as given.
    pub fn new(u: Angle, v: Angle) -> Result<Self> {
        let d = u.ccw_to(v);
        if d == 0.0 {
            return Err(Error::DegenerateShortcut);
        }
        let (u, v, span) = if d > PI + 1e-12 {
            (v, u, 2.0 * PI - d)
        } else {
            (u, v, d.min(PI))
        };
        let chord = 2.0 * (span / 2.0).sin();
        Ok(Shortcut {
            u,
            v,
            chord,
            span,
            detour: detour_unchecked(chord),
        })
    }

    /// Chord of length `chord` centered (on its shorter arc) at `rotation`.
    /// `rotation = 0` gives the canonical chord with endpoints `-span/2` and
    /// `span/2`. Delegates to [`Shortcut::new`], so a shortcut rebuilt from
    /// its endpoints carries bit-identical derived values.
    pub fn from_rotation(chord: f64, rotation: f64) -> Result<Self> {
        if !(0.0..=2.0).contains(&chord) {
            return Err(Error::ChordLength(chord));
        }
        if chord == 0.0 {
            return Err(Error::DegenerateShortcut);
        }
        let span = span_unchecked(chord);
        Shortcut::new(
            Angle::new(rotation - span / 2.0),
            Angle::new(rotation + span / 2.0),
        )
    }

    pub fn u(&self) -> Angle {
        self.u
    }

    pub fn v(&self) -> Angle {
        self.v
    }

    /// Euclidean length of the chord, in `(0, 2]`.
    pub fn chord(&self) -> f64 {
        self.chord
    }

    /// Central angle subtended by the chord, in `(0, pi]`.
    pub fn span(&self) -> f64 {
        self.span
    }

    /// Detour gain of the chord.
    pub fn detour(&self) -> f64 {
        self.detour
    }

    /// Midpoint of the shorter arc; the shortcut equals the canonical one
    /// rotated here.
    pub fn rotation(&self) -> Angle {
        self.u.offset(self.span / 2.0)
    }

    pub fn rotated(&self, by: f64) -> Shortcut {
        Shortcut::new(self.u.offset(by), self.v.offset(by)).expect("rotation keeps the chord")
    }

    /// Inner umbra: the arc `u + detour -> v - detour` of length `chord`.
    /// Starting a path by traversing the shortcut never pays off from here.
    pub fn inner_umbra(&self) -> Arc {
        Arc::new(self.u.offset(self.detour), self.chord)
    }

    /// Outer umbra: the antipodal copy of the inner umbra.
    pub fn outer_umbra(&self) -> Arc {
        self.inner_umbra().translated(PI)
    }

    pub fn umbra(&self) -> (Arc, Arc) {
        (self.inner_umbra(), self.outer_umbra())
    }

    /// Sub-arc of the inner umbra from which the shortcut is useless even
    /// mid-path: every point `p` in it satisfies
    /// `chord(p, u) + chord >= arc_distance(p, v)` with `u` the nearer
    /// endpoint. Length `span - 2 * span_angle(detour) = chord -
    /// 4 * detour_gain(detour_gain(chord))`.
    pub fn deep_umbra(&self) -> Arc {
        let inset = span_unchecked(self.detour);
        Arc::new(self.u.offset(inset), self.span - 2.0 * inset)
    }

    /// The two arcs `v -> antipode(u)` and `antipode(v) -> u`, each of length
    /// `pi - span`. For a diameter they degenerate to two points.
    pub fn radiance(&self) -> (Arc, Arc) {
        let len = PI - self.span;
        (
            Arc::new(self.v, len),
            Arc::new(self.v.antipode(), len),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::TAU;

    #[test]
    fn span_angle_endpoints() {
        assert_eq!(span_angle(0.0).unwrap(), 0.0);
        assert!((span_angle(2.0).unwrap() - PI).abs() < 1e-15);
        assert!(span_angle(-0.1).is_err());
        assert!(span_angle(2.1).is_err());
    }

    #[test]
    fn span_is_chord_plus_twice_detour() {
        // alpha(a) = a + 2 delta(a); reference row a = 1.4782 spans ~1.6634.
        let a = 1.4782;
        let alpha = span_angle(a).unwrap();
        let delta = detour_gain(a).unwrap();
        assert!((alpha - (a + 2.0 * delta)).abs() < 1e-12);
        assert!((delta - 0.0926).abs() < 5e-4);
        assert!((alpha - 1.6634).abs() < 2e-3);
    }

    #[test]
    fn detour_endpoints_and_iterate() {
        assert_eq!(detour_gain(0.0).unwrap(), 0.0);
        assert!((detour_gain(2.0).unwrap() - MAX_DETOUR).abs() < 1e-15);
        let dd = detour_gain(detour_gain(2.0).unwrap()).unwrap();
        assert!((dd - 0.00402).abs() < 5e-5);
    }

    #[test]
    fn detour_monotone_and_convex_on_grid() {
        let n = 1000;
        let mut prev = 0.0;
        let mut prev_diff = f64::NEG_INFINITY;
        for i in 1..=n {
            let a = 2.0 * i as f64 / n as f64;
            let d = detour_gain(a).unwrap();
            let diff = d - prev;
            assert!(diff > 0.0, "detour gain not increasing at a = {a}");
            assert!(
                diff >= prev_diff - 1e-12,
                "detour gain not convex at a = {a}"
            );
            prev = d;
            prev_diff = diff;
        }
        // Midpoint convexity on random-ish spans of the grid.
        for i in 0..n {
            let a = 2.0 * (i % 977) as f64 / 977.0;
            let b = 2.0 * ((i * 37 + 11) % 977) as f64 / 977.0;
            let mid = detour_gain((a + b) / 2.0).unwrap();
            let avg = (detour_gain(a).unwrap() + detour_gain(b).unwrap()) / 2.0;
            assert!(mid <= avg + 1e-12, "midpoint convexity fails on [{a}, {b}]");
        }
    }

    #[test]
    fn inverse_detour_known_values() {
        assert!(inverse_detour(0.0).unwrap().abs() < 1e-9);
        assert!((inverse_detour(0.0926).unwrap() - 1.4782).abs() < 5e-4);
        assert!((inverse_detour(0.06).unwrap() - 1.3150).abs() < 5e-4);
        assert!(inverse_detour(MAX_DETOUR + 1e-9).is_err());
        assert!(inverse_detour(-1e-12).is_err());
    }

    #[test]
    fn inverse_detour_roundtrip() {
        for i in 0..=200 {
            let a = 2.0 * i as f64 / 200.0;
            let d = detour_gain(a).unwrap();
            let back = inverse_detour(d).unwrap();
            assert!((back - a).abs() < 1e-9, "roundtrip off at a = {a}");
        }
    }

    #[test]
    fn construction_orients_shorter_arc() {
        let s = Shortcut::new(Angle::new(1.0), Angle::new(1.5)).unwrap();
        assert_eq!(s.u().radians(), 1.0);
        let s = Shortcut::new(Angle::new(1.5), Angle::new(1.0)).unwrap();
        assert_eq!(s.u().radians(), 1.0);
        // Diameter: endpoints stay as given.
        let s = Shortcut::new(Angle::new(PI), Angle::new(0.0)).unwrap();
        assert_eq!(s.u().radians(), PI);
        assert!((s.chord() - 2.0).abs() < 1e-12);
        assert!(Shortcut::new(Angle::new(1.0), Angle::new(1.0)).is_err());
        assert!(Shortcut::from_rotation(0.0, 1.0).is_err());
    }

    #[test]
    fn umbra_arcs_have_chord_length() {
        for &a in &[0.3, 1.0, 1.4782, 1.8828, 2.0] {
            let s = Shortcut::from_rotation(a, 0.7).unwrap();
            assert!((s.inner_umbra().length() - a).abs() < 1e-12);
            assert!((s.outer_umbra().length() - a).abs() < 1e-12);
        }
    }

    #[test]
    fn diameter_umbra_centered_on_arc_midpoint() {
        // Canonical diameter: inner umbra is the arc of length 2 centered at 0.
        let s = Shortcut::from_rotation(2.0, 0.0).unwrap();
        let inner = s.inner_umbra();
        assert!((inner.midpoint().radians()).min(TAU - inner.midpoint().radians()) < 1e-12);
        assert!((inner.length() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn deep_umbra_length_and_inclusion() {
        let s = Shortcut::from_rotation(2.0, 0.3).unwrap();
        let expect = 2.0 - 4.0 * detour_gain(detour_gain(2.0).unwrap()).unwrap();
        assert!((s.deep_umbra().length() - expect).abs() < 1e-12);
        assert!((s.deep_umbra().length() - 1.9839).abs() < 1e-3);

        // Shrinks to nothing with the chord (length is a - 4 detour(detour(a)),
        // which collapses to a at f64 resolution for tiny chords).
        let tiny = Shortcut::from_rotation(1e-6, 0.0).unwrap();
        assert!(tiny.deep_umbra().length() < 2e-6);

        for &a in &[0.2, 0.9, 1.0, 1.7, 2.0] {
            let s = Shortcut::from_rotation(a, 1.1).unwrap();
            let deep = s.deep_umbra();
            let inner = s.inner_umbra();
            let expect = a - 4.0 * detour_unchecked(detour_unchecked(a));
            assert!((deep.length() - expect).abs() < 1e-12);
            assert!(inner.contains(deep.start(), 1e-12));
            assert!(inner.contains(deep.end(), 1e-12));
            assert!(deep.length() > a - 0.02);
        }
    }

    #[test]
    fn deep_umbra_defining_inequality_by_scan() {
        // Every point of the returned arc must satisfy
        // chord(p, nearer endpoint) + chord >= arc distance to the far endpoint.
        let s = Shortcut::from_rotation(1.0, 0.0).unwrap();
        let deep = s.deep_umbra();
        let steps = (deep.length() / 1e-4).ceil() as usize;
        for i in 0..=steps {
            let p = deep.start().offset(deep.length() * i as f64 / steps as f64);
            let (near, far) = if p.arc_distance(s.u()) <= p.arc_distance(s.v()) {
                (s.u(), s.v())
            } else {
                (s.v(), s.u())
            };
            assert!(
                p.chord_to(near) + s.chord() >= p.arc_distance(far) - 1e-12,
                "deep umbra inequality fails at {p}"
            );
        }
    }

    #[test]
    fn radiance_lengths() {
        let s = Shortcut::from_rotation(2.0, 0.0).unwrap();
        let (r1, r2) = s.radiance();
        assert!(r1.length().abs() < 1e-12);
        assert!(r2.length().abs() < 1e-12);

        let s = Shortcut::from_rotation(1.0, 0.0).unwrap();
        let expect = PI - PI / 3.0; // span of a unit chord is exactly pi/3
        let (r1, r2) = s.radiance();
        assert!((r1.length() - expect).abs() < 1e-12);
        assert!((r2.length() - expect).abs() < 1e-12);

        let s = Shortcut::from_rotation(1e-9, 0.0).unwrap();
        let (r1, _) = s.radiance();
        assert!((r1.length() - PI).abs() < 1e-8);
    }

    #[test]
    fn umbra_radiance_cover_circle_up_to_four_detour_gaps() {
        // The four arcs are pairwise disjoint and leave exactly four gaps of
        // length detour each, so their total length is 2pi - 4 detour.
        for &a in &[0.4, 1.0, 1.6, 2.0] {
            let s = Shortcut::from_rotation(a, 0.9).unwrap();
            let (inner, outer) = s.umbra();
            let (r1, r2) = s.radiance();
            let total = inner.length() + outer.length() + r1.length() + r2.length();
            assert!((total - (TAU - 4.0 * s.detour())).abs() < 1e-9);
            // Gap between inner umbra end and first radiance start is detour.
            assert!((inner.end().ccw_to(r1.start()) - s.detour()).abs() < 1e-9);
            assert!((r1.end().ccw_to(outer.start()) - s.detour()).abs() < 1e-9);
            assert!((outer.end().ccw_to(r2.start()) - s.detour()).abs() < 1e-9);
            assert!((r2.end().ccw_to(inner.start()) - s.detour()).abs() < 1e-9);
        }
    }
}
