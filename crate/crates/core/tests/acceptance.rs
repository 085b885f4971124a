//! Acceptance suite: every release criterion, at its stated tolerance.
//!
//! Each test prints one `acceptance N (<name>): PASS` line (visible with
//! `cargo test -- --nocapture`); a failing criterion fails its test.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use shortcut_core::*;
use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::time::{Duration, Instant};

const TABLE1: [(usize, f64, f64, f64, f64); 5] = [
    (2, 1.4782, 0.0926, 3.0490, 1.2219),
    (3, 1.8435, 0.2509, 2.8907, 1.5943),
    (4, 1.9619, 0.3943, 2.7473, 1.7623),
    (5, 1.9969, 0.5164, 2.6252, 1.8526),
    (6, 2.0000, 0.5708, 2.5708, 1.8828),
];

#[test]
fn acceptance_1_constant_table() {
    let t0 = Instant::now();
    for &(k, a, d, diam, mu) in &TABLE1 {
        let sol = solve_k_star(k).unwrap();
        assert!((sol.a_star - a).abs() < 5e-4, "a*_{k}");
        assert!((sol.d_star - d).abs() < 5e-4, "d*_{k}");
        assert!((sol.diameter() - diam).abs() < 5e-4, "diam_{k}");
        assert!((sol.mu - mu).abs() < 5e-4, "mu_{k}");
    }
    assert!(t0.elapsed() < Duration::from_secs(1), "criterion 1 runtime");
    println!("acceptance 1 (constant table, 4 columns, k = 2..6): PASS");
}

#[test]
fn acceptance_2_root_pair_table() {
    let t0 = Instant::now();
    let rows = [(4usize, 1.0373, 1.7100), (5, 0.7862, 1.8390), (6, 0.6957, 1.8751)];
    for &(k, sigma, lambda) in &rows {
        let sol = solve_k_star(k).unwrap();
        assert!((sol.sigma.unwrap() - sigma).abs() < 5e-4, "sigma_{k}");
        assert!((sol.lambda.unwrap() - lambda).abs() < 5e-4, "lambda_{k}");
    }
    assert!(t0.elapsed() < Duration::from_secs(1), "criterion 2 runtime");
    println!("acceptance 2 (sigma/lambda table, k = 4..6): PASS");
}

fn certify(config: &Configuration, target: f64, h: f64) -> DiameterBound {
    let t0 = Instant::now();
    let b = diameter_bounds(config, h).unwrap();
    assert!(
        t0.elapsed() < Duration::from_secs(60),
        "certification runtime for {}",
        config.label()
    );
    assert!(
        b.lo >= target - 1e-9,
        "{}: lo {} below target {}",
        config.label(),
        b.lo,
        target
    );
    assert!(
        b.hi <= target + 2.0 * h + 1e-9,
        "{}: hi {} above target {}",
        config.label(),
        b.hi,
        target
    );
    b
}

#[test]
fn acceptance_3_construction_certification() {
    let h = 1e-3;
    for k in 2..=5 {
        let sol = solve_k_star(k).unwrap();
        certify(&uniform_config(k).unwrap(), sol.diameter(), h);
    }
    certify(&six_config(), FRAC_PI_2 + 1.0, h);
    let b = certify(&eight_config().unwrap(), 2.559368125, h);
    assert!(b.hi < 2.5708, "eight shortcuts must certifiably beat six");
    println!("acceptance 3 (certified diameters, k = 2..6 and 8): PASS");
}

#[test]
fn acceptance_4_eight_constants() {
    let sol = solve_eight().unwrap();
    assert!((sol.a_long - 1.999870869).abs() < 5e-5);
    assert!((sol.a_short - 0.988571799).abs() < 5e-5);
    assert!((sol.d_star - 0.5822245291).abs() < 5e-5);
    println!("acceptance 4 (eight-shortcut constants): PASS");
}

#[test]
fn acceptance_5_reference_log() {
    let t0 = Instant::now();
    let report = reference_report();
    assert_eq!(report.len(), 58, "one check per printed value/inequality");
    for line in &report {
        assert!(line.pass, "failed check {}: {}", line.id, line.expression);
        if matches!(line.expected, Bound::Equals(_)) {
            assert!(line.tolerance <= 5e-4);
        }
    }
    assert!(all_pass(&report));
    assert!(t0.elapsed() < Duration::from_secs(5), "criterion 5 runtime");
    println!("acceptance 5 (reference log, 58/58): PASS");
}

#[test]
fn acceptance_6_region_metric_equivalence() {
    let mut rng = StdRng::seed_from_u64(0xC0FFEE);
    let mut accepted = 0usize;
    let mut attempts = 0usize;
    while accepted < 100_000 {
        attempts += 1;
        assert!(attempts < 1_000_000, "sampler rejects too much");
        let a = rng.gen_range(0.01..=2.0);
        let rot = rng.gen_range(0.0..TAU);
        let dstar = rng.gen_range(0.0..=(PI - 2.0));
        let theta = rng.gen_range(0.0..TAU);
        let xi = rng.gen_range(-dstar..=dstar);
        let s = Shortcut::from_rotation(a, rot).unwrap();
        let c = StripCoord::new(theta, xi, dstar).unwrap();
        let (p, q) = strip_to_pair(&c);
        let d = single_shortcut_distance(&s, p, q);
        // Keep only samples clear of the region boundary (the level set
        // where the shortcut route meets the target).
        if (d - (PI - dstar)).abs() <= 1e-6 {
            continue;
        }
        accepted += 1;
        assert_eq!(
            region_contains(&c, &s),
            d <= PI - dstar,
            "disagreement at a={a} rot={rot} dstar={dstar} theta={theta} xi={xi}"
        );
    }
    println!("acceptance 6 (region vs metric on {accepted} samples): PASS");
}

/// Structural witness checks: detour lower bound, umbra rule for the path
/// ends, deep-umbra exclusion.
fn check_witness_rules(cfg: &Configuration, p: Angle, q: Angle, total: f64, w: &PathWitness) {
    const EPS: f64 = 1e-9;
    let used = w.shortcut_indices();
    let savings: f64 = used.iter().map(|&i| 2.0 * cfg.shortcuts()[i].detour()).sum();
    assert!(
        total >= p.arc_distance(q) - savings - EPS,
        "detour lower bound violated"
    );
    let depth = |s: &Shortcut, x: Angle| -> f64 {
        let (inner, outer) = s.umbra();
        inner.interior_depth(x).max(outer.interior_depth(x))
    };
    if let Some(&first) = used.first() {
        assert!(
            depth(&cfg.shortcuts()[first], p) <= EPS,
            "first chord used from inside its umbra"
        );
    }
    if let Some(&last) = used.last() {
        assert!(
            depth(&cfg.shortcuts()[last], q) <= EPS,
            "last chord used from inside its umbra"
        );
    }
    for (i, s) in cfg.shortcuts().iter().enumerate() {
        let deep = s.deep_umbra();
        if deep.interior_depth(p) > EPS || deep.interior_depth(q) > EPS {
            assert!(!used.contains(&i), "chord used despite a deep-umbra endpoint");
        }
    }
}

#[test]
fn acceptance_7_metric_property_suite() {
    let mut rng = StdRng::seed_from_u64(0x5EED);
    for _ in 0..10_000 {
        let k = rng.gen_range(0..=8);
        let shortcuts: Vec<Shortcut> = (0..k)
            .map(|_| {
                Shortcut::from_rotation(rng.gen_range(0.05..=2.0), rng.gen_range(0.0..TAU))
                    .unwrap()
            })
            .collect();
        let cfg = Configuration::from(shortcuts);
        let p = Angle::new(rng.gen_range(0.0..TAU));
        let q = Angle::new(rng.gen_range(0.0..TAU));

        let (d, w) = distance(&cfg, p, q);
        let (d_rev, _) = distance(&cfg, q, p);
        assert_eq!(d, d_rev, "symmetry");
        assert!(d <= p.arc_distance(q) + 1e-12, "worse than the circle");
        check_witness_rules(&cfg, p, q, d, &w);

        let p2 = p.offset(rng.gen_range(-0.5..0.5));
        let (d2, _) = distance(&cfg, p2, q);
        assert!(
            (d - d2).abs() <= p.arc_distance(p2) + 1e-9,
            "Lipschitz violated"
        );

        let mut bigger = cfg.clone();
        bigger.push(
            Shortcut::from_rotation(rng.gen_range(0.05..=2.0), rng.gen_range(0.0..TAU)).unwrap(),
        );
        let (d3, _) = distance(&bigger, p, q);
        assert!(d3 <= d + 1e-12, "adding a shortcut increased a distance");
    }
    println!("acceptance 7 (metric properties on 10000 random configurations): PASS");
}

#[test]
fn acceptance_8_asymptotic_family() {
    let t0 = Instant::now();
    let h = 2e-3;
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for m in [4usize, 9, 16, 25] {
        let (cfg, report) = asymptotic_config(m).unwrap();
        counts.push((m, report.total()));
        assert!(
            (report.banded_count as f64) <= 6.0 * PI * (m as f64).powf(1.5),
            "banded family exceeds its bound at m = {m}"
        );
        if m <= 16 {
            let b = diameter_bounds(&cfg, h).unwrap();
            let target = 2.0 + 1.0 / m as f64;
            assert!(
                b.hi <= target + 2.0 * h + 1e-9,
                "m = {m}: certified diameter {} above {}",
                b.hi,
                target
            );
        }
    }
    // Log-log least squares slope of total count against m.
    let n = counts.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(m, c) in &counts {
        let (x, y) = ((m as f64).ln(), (c as f64).ln());
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    assert!(
        (1.3..=1.7).contains(&slope),
        "shortcut-count growth exponent {slope} outside [1.3, 1.7]"
    );
    assert!(t0.elapsed() < Duration::from_secs(300), "criterion 8 runtime");
    println!("acceptance 8 (asymptotic family, growth exponent {slope:.3}): PASS");
}

#[test]
fn acceptance_9_perturbation_floor() {
    let h = 0.02;
    let mut rng = StdRng::seed_from_u64(0xF1007);
    for k in 2..=5 {
        let sol = solve_k_star(k).unwrap();
        let base = uniform_config(k).unwrap();
        for trial in 0..100 {
            let shortcuts: Vec<Shortcut> = base
                .shortcuts()
                .iter()
                .map(|s| {
                    let a = (s.chord() + rng.gen_range(-0.05..=0.05)).clamp(0.05, 2.0);
                    let rot = s.rotation().radians() + rng.gen_range(-0.05..=0.05);
                    Shortcut::from_rotation(a, rot).unwrap()
                })
                .collect();
            let b = diameter_bounds(&Configuration::from(shortcuts), h).unwrap();
            assert!(
                b.hi >= sol.diameter() - 1e-6,
                "k = {k} trial {trial}: certified upper bound {} undercuts the optimum {}",
                b.hi,
                sol.diameter()
            );
        }
    }
    println!("acceptance 9 (perturbations never beat the optimum): PASS");
}
