//! Solvers for the characteristic constants and generators for the concrete
//! shortcut configurations.
//!
//! For `k` shortcuts of one length the best achievable diameter is
//! `pi - dstar_k`, where `a*_k + detour(a*_k) = (k-1) pi / k` pins the chord
//! length and `dstar_k = detour(a*_k)`; past `k = 6` the chord saturates at a
//! diameter. The generators place the shortcuts so their strip rectangles
//! tile (or cover) the whole cylinder, which certifies the diameter.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::metric::Configuration;
use crate::roots::bisect;
use crate::shortcut::{inverse_detour, Shortcut, MAX_DETOUR};
use crate::strip::{covers, shortcut_rectangles, CoverTarget, StripRect};

fn gain(a: f64) -> f64 {
    (a / 2.0).asin() - a / 2.0
}

/// Characteristic constants for `k` equal shortcuts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KStarSolution {
    pub k: usize,
    /// Chord length solving `a + detour(a) = (k-1) pi / k`, clamped to 2
    /// from `k = 6` on.
    pub a_star: f64,
    /// `detour(a_star)`; the best diameter is `pi - d_star`.
    pub d_star: f64,
    /// Shortest chord whose region still reaches the midline:
    /// `detour(mu) = d_star / 2`.
    pub mu: f64,
    /// Smaller root of `detour(x) + detour(pi - d_star - x) = d_star / 2`
    /// (present from `k = 4` on).
    pub sigma: Option<f64>,
    /// Larger root of the same equation.
    pub lambda: Option<f64>,
}

impl KStarSolution {
    /// The diameter this solution certifies, `pi - d_star`.
    pub fn diameter(&self) -> f64 {
        PI - self.d_star
    }
}

/// Solves the characteristic equations for `k >= 2`. For `k >= 6` the chord
/// clamps to a full diameter (`a* = 2`).
pub fn solve_k_star(k: usize) -> Result<KStarSolution> {
    if k < 2 {
        return Err(Error::UnsupportedK(k));
    }
    let target = (k as f64 - 1.0) * PI / k as f64;
    let (a_star, d_star) = if k >= 6 {
        (2.0, MAX_DETOUR)
    } else {
        let a = bisect(0.0, 2.0, 1e-13, |a| a + gain(a) - target);
        (a, gain(a))
    };
    let mu = inverse_detour(d_star / 2.0)?;
    let (sigma, lambda) = if k >= 4 {
        let c = PI - d_star;
        let mid = c / 2.0;
        let g = |x: f64| gain(x) + gain(c - x) - d_star / 2.0;
        // g is convex and symmetric about `mid`; one root on each side.
        let sigma = bisect(c - 2.0, mid, 1e-13, |x| -g(x));
        let lambda = bisect(mid, 2.0, 1e-13, g);
        (Some(sigma), Some(lambda))
    } else {
        (None, None)
    };
    Ok(KStarSolution {
        k,
        a_star,
        d_star,
        mu,
        sigma,
        lambda,
    })
}

/// The optimal configuration of `k in {2, 3, 4, 5}` equal shortcuts: chord
/// length `a*_k`, rotated so the strip rectangles tile the cylinder with the
/// rectangle of shortcut `j` starting at `theta = j pi / k`.
pub fn uniform_config(k: usize) -> Result<Configuration> {
    if !(2..=5).contains(&k) {
        return Err(Error::UnsupportedK(k));
    }
    let sol = solve_k_star(k)?;
    let edge_to_rotation = -(sol.a_star / 2.0 + sol.d_star / 2.0);
    let shortcuts = (0..k)
        .map(|j| {
            Shortcut::from_rotation(sol.a_star, j as f64 * PI / k as f64 + edge_to_rotation)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Configuration::new(shortcuts, format!("uniform-{k}")))
}

/// Six diameters rotated in steps of `pi / 6`; diameter `pi/2 + 1`.
pub fn six_config() -> Configuration {
    let shortcuts = (0..6)
        .map(|j| Shortcut::from_rotation(2.0, j as f64 * PI / 6.0).expect("diameter chord"))
        .collect();
    Configuration::new(shortcuts, "six-diameters")
}

/// Constants of the eight-shortcut construction: six long chords `a_long`
/// and two short ones `a_short`, certifying diameter `pi - d_star`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EightSolution {
    pub a_long: f64,
    pub a_short: f64,
    pub d_star: f64,
}

impl EightSolution {
    pub fn diameter(&self) -> f64 {
        PI - self.d_star
    }
}

/// Solves the eight-shortcut constants: `a_short + d_star = pi/2`,
/// `a_long + detour(a_long) = pi - d_star`, and `detour(a_long) +
/// detour(a_short) = d_star`.
pub fn solve_eight() -> Result<EightSolution> {
    let long_for = |d: f64| bisect(0.0, 2.0, 1e-14, |a| a + gain(a) - (PI - d));
    let residual = |d: f64| {
        let a1 = long_for(d);
        gain(a1) + gain(FRAC_PI_2 - d) - d
    };
    let (lo, hi) = (MAX_DETOUR, 0.62);
    if !(residual(lo) > 0.0 && residual(hi) < 0.0) {
        return Err(Error::Numeric(
            "eight-shortcut root is not bracketed".into(),
        ));
    }
    let d_star = bisect(lo, hi, 1e-13, |d| -residual(d));
    let a_long = long_for(d_star);
    let a_short = FRAC_PI_2 - d_star;
    Ok(EightSolution {
        a_long,
        a_short,
        d_star,
    })
}

/// The eight-shortcut configuration. The two short rectangles tile the top
/// of `[0, pi]` exactly (their width is `pi/2`); the six long rectangles
/// cover `[pi, 2pi]` with a little slack; the antipodal twins mirror both,
/// and short-top columns meet long-bottom columns exactly because
/// `detour(a_long) + detour(a_short) = d_star`. The placement is validated
/// with the cover checker before being returned.
pub fn eight_config() -> Result<Configuration> {
    let sol = solve_eight()?;
    let (a1, a2, d) = (sol.a_long, sol.a_short, sol.d_star);
    let long_width = PI - a1 - d;

    let build = |long_edges: &[f64]| -> Result<Configuration> {
        let mut shortcuts = Vec::with_capacity(8);
        for &edge in long_edges {
            shortcuts.push(Shortcut::from_rotation(a1, edge - a1 / 2.0 - d / 2.0)?);
        }
        for j in 0..2 {
            let edge = j as f64 * FRAC_PI_2;
            shortcuts.push(Shortcut::from_rotation(a2, edge - a2 / 2.0 - d / 2.0)?);
        }
        Ok(Configuration::new(shortcuts, "eight"))
    };

    // Long rectangles spread evenly over [pi, 2pi].
    let spread: Vec<f64> = (0..6)
        .map(|j| PI + j as f64 * (PI - long_width) / 5.0)
        .collect();
    // Fallback: chain them edge to edge instead.
    let chained: Vec<f64> = (0..6).map(|j| PI + j as f64 * long_width).collect();

    for edges in [spread, chained] {
        let cfg = build(&edges)?;
        if strip_cover(&cfg, d)?.covered {
            return Ok(cfg);
        }
    }
    Err(Error::Numeric(
        "eight-shortcut placement failed the cover check".into(),
    ))
}

/// Cover check of a whole configuration against the strip of the given
/// half-height.
pub fn strip_cover(config: &Configuration, dstar: f64) -> Result<crate::strip::CoverOutcome> {
    let rects = config_rectangles(config, dstar)?;
    covers(&rects, CoverTarget::Strip)
}

/// All strip rectangles of a configuration.
pub fn config_rectangles(config: &Configuration, dstar: f64) -> Result<Vec<StripRect>> {
    let mut rects = Vec::with_capacity(2 * config.len());
    for s in config.shortcuts() {
        let (r1, r2) = shortcut_rectangles(s, dstar)?;
        rects.push(r1);
        rects.push(r2);
    }
    Ok(rects)
}

/// Shortcut counts of one generated asymptotic configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticReport {
    pub m: usize,
    /// Number of uniformly placed anchor points.
    pub points: usize,
    /// Chords connecting anchor pairs with near-antipodal gaps.
    pub antipodal_count: usize,
    /// Per-band `(t, count)` for the equally spaced chords of arc span
    /// `pi - t/m`.
    pub bands: Vec<(usize, usize)>,
    /// Total size of the banded family.
    pub banded_count: usize,
}

impl AsymptoticReport {
    pub fn total(&self) -> usize {
        self.antipodal_count + self.banded_count
    }
}

/// Generates the asymptotic family for target diameter `2 + 1/m`.
///
/// Anchor family: `ceil(4 pi m)` uniform points, chords between every pair
/// with gap at least `pi - (floor(4 sqrt(m)) + 1)/m` (one step wider than
/// the banded range, which closes the seam the integer band grid leaves).
/// Banded family: for each integer `t` in `(4 sqrt(m), 2m)`, chords of arc
/// span `pi - t/m` repeated every `(t/m)^2 / 12` around the circle.
pub fn asymptotic_config(m: usize) -> Result<(Configuration, AsymptoticReport)> {
    if m < 4 {
        return Err(Error::AsymptoticSize(m));
    }
    let mf = m as f64;
    let points = (4.0 * PI * mf).ceil() as usize;
    let band_start = (4.0 * mf.sqrt()).floor() as usize + 1;
    let reach = band_start as f64 / mf;

    let mut shortcuts = Vec::new();
    let anchor = |i: usize| Angle::new(TAU * i as f64 / points as f64);
    let step_min =
        (((PI - reach) * points as f64 / TAU) - 1e-9).ceil().max(1.0) as usize;
    let step_max = points / 2;
    for i in 0..points {
        for k in step_min..=step_max {
            if 2 * k == points && i >= points / 2 {
                continue; // diameters would otherwise be emitted twice
            }
            shortcuts.push(Shortcut::new(anchor(i), anchor((i + k) % points))?);
        }
    }
    let antipodal_count = shortcuts.len();

    let mut bands = Vec::new();
    for t in band_start..2 * m {
        let ratio = t as f64 / mf;
        let spacing = ratio * ratio / 12.0;
        let count = (TAU / spacing).ceil() as usize;
        let span = PI - ratio;
        for j in 0..count {
            let start = Angle::new(TAU * j as f64 / count as f64);
            shortcuts.push(Shortcut::new(start, start.offset(span))?);
        }
        bands.push((t, count));
    }
    let banded_count = bands.iter().map(|&(_, c)| c).sum();

    Ok((
        Configuration::new(shortcuts, format!("asymptotic-{m}")),
        AsymptoticReport {
            m,
            points,
            antipodal_count,
            bands,
            banded_count,
        },
    ))
}
