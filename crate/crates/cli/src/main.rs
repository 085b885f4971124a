//! `shortcuts` — build, certify and render chord-shortcut configurations on
//! the unit circle.

mod doc;
mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use shortcut_core::{
    all_pass, area_lemma_report, asymptotic_config, asymptotic_report, diameter_bounds, distance,
    eight_config, fmt_sig, reference_report, render_text, six_config, solve_eight, solve_k_star,
    strip_cover, uniform_config, Angle, Bound, CheckLine, Configuration, Leg, PathWitness,
};

use doc::ConfigDocument;

#[derive(Parser)]
#[command(
    name = "shortcuts",
    version,
    about = "Chord shortcuts on the unit circle: solve the characteristic constants, build configurations, certify continuous diameters, check strip covers, and render diagrams"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the characteristic constants for k shortcuts (k = 2..7, or the
    /// two-length solution for k = 8)
    Solve { k: usize },
    /// Build a configuration: a k in {2,3,4,5,6,8}, or `asym <m>`
    Make {
        /// "2".."6", "8", or "asym"
        target: String,
        /// Size parameter m (only with `asym`)
        m: Option<usize>,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Certified diameter bounds for a configuration file
    Diam {
        file: PathBuf,
        /// Grid step of the certificate
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
    },
    /// Distance between two points, with the witness path
    Dist {
        file: PathBuf,
        /// Angle in radians, or a multiple of pi like "0.5pi"
        p: String,
        q: String,
    },
    /// Check whether the strip of the given half-height is covered
    Cover {
        file: PathBuf,
        /// Half-height in radians, or a multiple of pi like "0.1pi"
        dstar: String,
    },
    /// Re-check the reference calculation log (exit 0 iff everything passes)
    Verify {
        /// Machine-readable output
        #[arg(long)]
        json: bool,
        /// Also run the area-profile and asymptotic chord checks
        #[arg(long)]
        extended: bool,
    },
    /// Emit an SVG diagram
    Render {
        /// "circle" or "strip"
        what: String,
        file: PathBuf,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Strip half-height (strip diagrams; defaults to the largest
        /// detour gain in the configuration)
        #[arg(long)]
        dstar: Option<String>,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode> {
    match Cli::parse().cmd {
        Cmd::Solve { k } => solve(k),
        Cmd::Make { target, m, output } => make(&target, m, output.as_deref()),
        Cmd::Diam { file, step } => diam(&file, step),
        Cmd::Dist { file, p, q } => dist(&file, &p, &q),
        Cmd::Cover { file, dstar } => cover(&file, &dstar),
        Cmd::Verify { json, extended } => verify(json, extended),
        Cmd::Render {
            what,
            file,
            output,
            dstar,
        } => render(&what, &file, output.as_deref(), dstar.as_deref()),
    }
}

/// Parses an angle given as decimal radians or as a multiple of pi
/// ("0.5pi", "pi", "-pi").
fn parse_angle(s: &str) -> Result<f64> {
    let t = s.trim();
    if let Some(prefix) = t.strip_suffix("pi") {
        let factor = match prefix.trim() {
            "" | "+" => 1.0,
            "-" => -1.0,
            p => p
                .parse::<f64>()
                .with_context(|| format!("bad multiple of pi: {s:?}"))?,
        };
        Ok(factor * std::f64::consts::PI)
    } else {
        t.parse::<f64>().with_context(|| format!("bad angle: {s:?}"))
    }
}

fn solve(k: usize) -> Result<ExitCode> {
    match k {
        8 => {
            let sol = solve_eight()?;
            println!("k       = 8");
            println!("a_long  = {}", fmt_sig(sol.a_long));
            println!("a_short = {}", fmt_sig(sol.a_short));
            println!("d_star  = {}", fmt_sig(sol.d_star));
            println!("diam    = {}", fmt_sig(sol.diameter()));
        }
        k => {
            let sol = solve_k_star(k)?;
            println!("k       = {k}");
            println!("a_star  = {}", fmt_sig(sol.a_star));
            println!("d_star  = {}", fmt_sig(sol.d_star));
            println!("diam    = {}", fmt_sig(sol.diameter()));
            println!("mu      = {}", fmt_sig(sol.mu));
            if let (Some(sigma), Some(lambda)) = (sol.sigma, sol.lambda) {
                println!("sigma   = {}", fmt_sig(sigma));
                println!("lambda  = {}", fmt_sig(lambda));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn make(target: &str, m: Option<usize>, output: Option<&Path>) -> Result<ExitCode> {
    let config = match target {
        "asym" => {
            let m = m.context("`make asym` needs the size parameter m")?;
            let (config, report) = asymptotic_config(m)?;
            eprintln!(
                "asymptotic family m = {}: {} anchor points, {} anchor chords, {} banded chords in {} bands, {} total",
                report.m,
                report.points,
                report.antipodal_count,
                report.banded_count,
                report.bands.len(),
                report.total()
            );
            config
        }
        _ => {
            let k: usize = target
                .parse()
                .with_context(|| format!("target must be a shortcut count or `asym`, got {target:?}"))?;
            if m.is_some() {
                bail!("the size parameter is only valid with `make asym`");
            }
            match k {
                2..=5 => uniform_config(k)?,
                6 => six_config(),
                7 => bail!("seven shortcuts cannot beat six; use `make 6`"),
                8 => eight_config()?,
                other => bail!("no construction for k = {other}"),
            }
        }
    };
    let json = ConfigDocument::from_config(&config).to_json();
    match output {
        Some(path) => fs::write(path, json).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{json}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn print_witness(witness: &PathWitness) {
    if witness.legs.is_empty() {
        println!("path    = (trivial)");
        return;
    }
    let legs: Vec<String> = witness
        .legs
        .iter()
        .map(|leg| match leg {
            Leg::Arc { from, to, length } => format!(
                "arc {} -> {} (len {})",
                fmt_sig(from.radians()),
                fmt_sig(to.radians()),
                fmt_sig(*length)
            ),
            Leg::Chord {
                index,
                from,
                to,
                length,
            } => format!(
                "chord[{index}] {} -> {} (len {})",
                fmt_sig(from.radians()),
                fmt_sig(to.radians()),
                fmt_sig(*length)
            ),
        })
        .collect();
    println!("path    = {}", legs.join(" | "));
}

fn diam(file: &Path, step: f64) -> Result<ExitCode> {
    let config = doc::load_config(file)?;
    let bound = diameter_bounds(&config, step)?;
    println!("lo      = {}", fmt_sig(bound.lo));
    println!("hi      = {}", fmt_sig(bound.hi));
    println!("step    = {}", fmt_sig(bound.step));
    println!(
        "witness = {} {}",
        fmt_sig(bound.witness.0.radians()),
        fmt_sig(bound.witness.1.radians())
    );
    print_witness(&bound.path);
    Ok(ExitCode::SUCCESS)
}

fn dist(file: &Path, p: &str, q: &str) -> Result<ExitCode> {
    let config = doc::load_config(file)?;
    let p = Angle::new(parse_angle(p)?);
    let q = Angle::new(parse_angle(q)?);
    let (d, witness) = distance(&config, p, q);
    println!("p       = {}", fmt_sig(p.radians()));
    println!("q       = {}", fmt_sig(q.radians()));
    println!("dist    = {}", fmt_sig(d));
    print_witness(&witness);
    Ok(ExitCode::SUCCESS)
}

fn cover(file: &Path, dstar: &str) -> Result<ExitCode> {
    let config = doc::load_config(file)?;
    let dstar = parse_angle(dstar)?;
    let outcome = strip_cover(&config, dstar)?;
    if outcome.covered {
        println!("covered: strip of half-height {} is fully covered", fmt_sig(dstar));
        Ok(ExitCode::SUCCESS)
    } else {
        let gap = outcome.gap.expect("uncovered outcome carries a gap");
        println!(
            "NOT covered: gap at xi = {} from theta = {} width {}",
            fmt_sig(gap.xi),
            fmt_sig(gap.theta_start),
            fmt_sig(gap.width)
        );
        Ok(ExitCode::from(1))
    }
}

fn check_to_json(line: &CheckLine) -> serde_json::Value {
    serde_json::json!({
        "id": line.id,
        "expression": line.expression,
        "computed": line.computed,
        "relation": line.expected.relation(),
        "expected": line.expected.value(),
        "tolerance": if matches!(line.expected, Bound::Equals(_)) {
            serde_json::Value::from(line.tolerance)
        } else {
            serde_json::Value::Null
        },
        "pass": line.pass,
    })
}

fn verify(json: bool, extended: bool) -> Result<ExitCode> {
    let mut lines = reference_report();
    if extended {
        lines.extend(area_lemma_report());
        lines.extend(asymptotic_report(16)?);
    }
    if json {
        let values: Vec<_> = lines.iter().map(check_to_json).collect();
        println!("{}", serde_json::to_string_pretty(&values)?);
    } else {
        print!("{}", render_text(&lines));
    }
    Ok(if all_pass(&lines) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn render(what: &str, file: &Path, output: Option<&Path>, dstar: Option<&str>) -> Result<ExitCode> {
    let config = doc::load_config(file)?;
    let svg = match what {
        "circle" => svg::render_circle(&config).to_svg(),
        "strip" => {
            let dstar = match dstar {
                Some(s) => parse_angle(s)?,
                None => default_half_height(&config)?,
            };
            svg::render_strip(&config, dstar)?.to_svg()
        }
        other => bail!("unknown diagram kind {other:?} (expected `circle` or `strip`)"),
    };
    match output {
        Some(path) => fs::write(path, svg).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{svg}"),
    }
    Ok(ExitCode::SUCCESS)
}

/// Largest detour gain in the configuration; the widest strip whose
/// rectangles still span full height for the longest chord.
fn default_half_height(config: &Configuration) -> Result<f64> {
    config
        .shortcuts()
        .iter()
        .map(|s| s.detour())
        .fold(None, |acc: Option<f64>, d| {
            Some(acc.map_or(d, |a| a.max(d)))
        })
        .context("an empty configuration needs an explicit --dstar")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angle_parsing() {
        assert_eq!(parse_angle("1.5").unwrap(), 1.5);
        assert_eq!(parse_angle("pi").unwrap(), std::f64::consts::PI);
        assert_eq!(parse_angle("-pi").unwrap(), -std::f64::consts::PI);
        assert_eq!(parse_angle("0.5pi").unwrap(), std::f64::consts::FRAC_PI_2);
        assert_eq!(parse_angle(" 2pi ").unwrap(), std::f64::consts::TAU);
        assert!(parse_angle("xpi").is_err());
        assert!(parse_angle("abc").is_err());
    }
}
