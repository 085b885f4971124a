//! SVG emission for circle configurations and strip-cover diagrams.
//!
//! Scenes are built from a small set of primitives and serialized by hand;
//! colors are fixed by shortcut index so the emitted geometry is stable for
//! golden comparisons.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use anyhow::Result;
use shortcut_core::{config_rectangles, strip_cover, Configuration, CoverGap};

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

pub fn color(index: usize) -> &'static str {
    PALETTE[index % PALETTE.len()]
}

#[derive(Clone, Debug)]
enum Item {
    Circle {
        cx: f64,
        cy: f64,
        r: f64,
        stroke: String,
        fill: String,
        width: f64,
    },
    Line {
        x1: f64,
        y1: f64,
        x2: f64,
        y2: f64,
        stroke: String,
        width: f64,
        dash: Option<String>,
    },
    Rect {
        x: f64,
        y: f64,
        w: f64,
        h: f64,
        fill: String,
        opacity: f64,
        stroke: Option<String>,
    },
    Text {
        x: f64,
        y: f64,
        size: f64,
        content: String,
    },
}

/// A standalone SVG 1.1 document in the making.
#[derive(Clone, Debug)]
pub struct SvgScene {
    pub width: f64,
    pub height: f64,
    items: Vec<Item>,
}

impl SvgScene {
    pub fn new(width: f64, height: f64) -> Self {
        SvgScene {
            width,
            height,
            items: Vec::new(),
        }
    }

    pub fn to_svg(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
            w = self.width,
            h = self.height
        );
        for item in &self.items {
            match item {
                Item::Circle {
                    cx,
                    cy,
                    r,
                    stroke,
                    fill,
                    width,
                } => {
                    let _ = writeln!(
                        s,
                        r#"  <circle cx="{cx}" cy="{cy}" r="{r}" stroke="{stroke}" fill="{fill}" stroke-width="{width}"/>"#
                    );
                }
                Item::Line {
                    x1,
                    y1,
                    x2,
                    y2,
                    stroke,
                    width,
                    dash,
                } => {
                    let dash = dash
                        .as_ref()
                        .map(|d| format!(r#" stroke-dasharray="{d}""#))
                        .unwrap_or_default();
                    let _ = writeln!(
                        s,
                        r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{stroke}" stroke-width="{width}"{dash}/>"#
                    );
                }
                Item::Rect {
                    x,
                    y,
                    w,
                    h,
                    fill,
                    opacity,
                    stroke,
                } => {
                    let stroke = stroke
                        .as_ref()
                        .map(|c| format!(r#" stroke="{c}" stroke-width="1""#))
                        .unwrap_or_default();
                    let _ = writeln!(
                        s,
                        r#"  <rect x="{x}" y="{y}" width="{w}" height="{h}" fill="{fill}" fill-opacity="{opacity}"{stroke}/>"#
                    );
                }
                Item::Text {
                    x,
                    y,
                    size,
                    content,
                } => {
                    let _ = writeln!(
                        s,
                        r#"  <text x="{x}" y="{y}" font-size="{size}" font-family="monospace">{content}</text>"#
                    );
                }
            }
        }
        s.push_str("</svg>\n");
        s
    }
}

/// The configuration drawn on the circle: outline plus one colored chord per
/// shortcut.
pub fn render_circle(config: &Configuration) -> SvgScene {
    let mut scene = SvgScene::new(800.0, 800.0);
    let (cx, cy, r) = (400.0, 400.0, 340.0);
    scene.items.push(Item::Circle {
        cx,
        cy,
        r,
        stroke: "#000000".into(),
        fill: "none".into(),
        width: 2.0,
    });
    // SVG y grows downward; flip so angles run counter-clockwise visually.
    let place = |a: f64| (cx + r * a.cos(), cy - r * a.sin());
    for (i, s) in config.shortcuts().iter().enumerate() {
        let (x1, y1) = place(s.u().radians());
        let (x2, y2) = place(s.v().radians());
        scene.items.push(Item::Line {
            x1,
            y1,
            x2,
            y2,
            stroke: color(i).into(),
            width: 2.0,
            dash: None,
        });
    }
    if !config.label().is_empty() {
        scene.items.push(Item::Text {
            x: 20.0,
            y: 30.0,
            size: 16.0,
            content: format!("{} ({} shortcuts)", config.label(), config.len()),
        });
    }
    scene
}

/// The strip-cover diagram: the cylinder strip, one colored pair of
/// rectangles per shortcut, the midline and boundaries, and any uncovered
/// gap highlighted in red.
pub fn render_strip(config: &Configuration, dstar: f64) -> Result<SvgScene> {
    let mut scene = SvgScene::new(1200.0, 300.0);
    let (x0, y0, w, h) = (40.0, 40.0, 1120.0, 220.0);
    let to_x = |theta: f64| x0 + w * theta / TAU;
    let to_y = |xi: f64| y0 + h * (dstar - xi) / (2.0 * dstar);

    // Rectangles, split at the wrap seam.
    let rects = config_rectangles(config, dstar)?;
    for (j, r) in rects.iter().enumerate() {
        if r.is_empty() {
            continue;
        }
        let fill = color(j / 2);
        let (ry, rh) = (to_y(r.xi_hi()), to_y(r.xi_lo()) - to_y(r.xi_hi()));
        let start = r.theta_start();
        let end = start + r.width();
        let mut spans = vec![(start, end.min(TAU))];
        if end > TAU {
            spans.push((0.0, end - TAU));
        }
        for (a, b) in spans {
            scene.items.push(Item::Rect {
                x: to_x(a),
                y: ry,
                w: to_x(b) - to_x(a),
                h: rh,
                fill: fill.into(),
                opacity: 0.45,
                stroke: None,
            });
        }
    }

    // Frame, midline and upper/lower boundaries.
    scene.items.push(Item::Rect {
        x: x0,
        y: y0,
        w,
        h,
        fill: "none".into(),
        opacity: 1.0,
        stroke: Some("#000000".into()),
    });
    for (xi, dash) in [(0.0, Some("6,4")), (dstar, None), (-dstar, None)] {
        scene.items.push(Item::Line {
            x1: x0,
            y1: to_y(xi),
            x2: x0 + w,
            y2: to_y(xi),
            stroke: "#000000".into(),
            width: 1.0,
            dash: dash.map(str::to_string),
        });
    }

    // Uncovered stretch, if any.
    let outcome = strip_cover(config, dstar)?;
    if let Some(CoverGap {
        xi,
        theta_start,
        width,
    }) = outcome.gap
    {
        let end = theta_start + width;
        let mut spans = vec![(theta_start, end.min(TAU))];
        if end > TAU {
            spans.push((0.0, end - TAU));
        }
        for (a, b) in spans {
            scene.items.push(Item::Line {
                x1: to_x(a),
                y1: to_y(xi),
                x2: to_x(b),
                y2: to_y(xi),
                stroke: "#ff0000".into(),
                width: 4.0,
                dash: None,
            });
        }
    }

    scene.items.push(Item::Text {
        x: x0,
        y: 24.0,
        size: 14.0,
        content: format!(
            "{} | half-height {} | {}",
            if config.label().is_empty() {
                "configuration"
            } else {
                config.label()
            },
            shortcut_core::fmt_sig(dstar),
            if outcome.covered {
                "covered".to_string()
            } else {
                "NOT covered".to_string()
            }
        ),
    });
    Ok(scene)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_scene_has_one_line_per_shortcut() {
        let cfg = shortcut_core::uniform_config(4).unwrap();
        let svg = render_circle(&cfg).to_svg();
        assert_eq!(svg.matches("<line").count(), 4);
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn empty_config_strip_is_outline_only() {
        let cfg = Configuration::empty("none");
        let svg = render_strip(&cfg, 0.3).unwrap().to_svg();
        // No colored rectangles, only the frame rect.
        assert_eq!(svg.matches("<rect").count(), 1);
        // The full-circle gap marker is present.
        assert!(svg.contains("#ff0000"));
    }

    #[test]
    fn tiling_has_rects_and_no_gap() {
        let cfg = shortcut_core::uniform_config(2).unwrap();
        let d = shortcut_core::solve_k_star(2).unwrap().d_star;
        let svg = render_strip(&cfg, d).unwrap().to_svg();
        assert!(svg.matches("<rect").count() >= 5); // 4 region rects + frame
        assert!(!svg.contains("#ff0000"));
        assert!(svg.contains("covered"));
    }
}
