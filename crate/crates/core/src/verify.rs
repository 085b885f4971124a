//! Mechanical re-check of the reference calculation log.
//!
//! Every printed constant and inequality chain behind the optimality
//! arguments is recomputed from the solvers in this crate and compared
//! against the published rounding. Only the arithmetic is encoded here; the
//! case analyses of the surrounding arguments are not.
//!
//! The log is covered by exactly 58 checks. Scratch quantities that the log
//! prints on the way to an inequality (widths, shifted half-heights, ...)
//! are folded into the check of that inequality: the check recomputes them,
//! compares each against its printed rounding, and fails if any drifts.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::Result;
use crate::shortcut::{inverse_detour, MAX_DETOUR};
use crate::strip::area_bound;
use crate::synthesis::solve_k_star;

/// Default tolerance for values printed with four decimals.
const TOL: f64 = 5e-4;

/// What a computed value is compared against.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Bound {
    /// `|computed - value| <= tolerance`.
    Equals(f64),
    /// `computed < value`, strictly.
    Below(f64),
    /// `computed > value`, strictly.
    Above(f64),
    /// `computed <= value`.
    AtMost(f64),
    /// `computed >= value`.
    AtLeast(f64),
}

impl Bound {
    pub fn value(&self) -> f64 {
        match *self {
            Bound::Equals(v)
            | Bound::Below(v)
            | Bound::Above(v)
            | Bound::AtMost(v)
            | Bound::AtLeast(v) => v,
        }
    }

    pub fn relation(&self) -> &'static str {
        match self {
            Bound::Equals(_) => "==",
            Bound::Below(_) => "<",
            Bound::Above(_) => ">",
            Bound::AtMost(_) => "<=",
            Bound::AtLeast(_) => ">=",
        }
    }

    fn holds(&self, computed: f64, tolerance: f64) -> bool {
        match *self {
            Bound::Equals(v) => (computed - v).abs() <= tolerance,
            Bound::Below(v) => computed < v,
            Bound::Above(v) => computed > v,
            Bound::AtMost(v) => computed <= v,
            Bound::AtLeast(v) => computed >= v,
        }
    }
}

/// One re-checked value or inequality.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckLine {
    /// `block/name`; blocks follow the layout of the log.
    pub id: String,
    /// The formula being recomputed, human-readable.
    pub expression: String,
    pub computed: f64,
    pub expected: Bound,
    pub tolerance: f64,
    pub pass: bool,
}

fn check(id: &str, expression: String, computed: f64, expected: Bound, tolerance: f64) -> CheckLine {
    let pass = expected.holds(computed, tolerance);
    CheckLine {
        id: id.to_string(),
        expression,
        computed,
        expected,
        tolerance,
        pass,
    }
}

/// Equality against a printed rounding, default tolerance.
fn eq(id: &str, expression: &str, computed: f64, printed: f64) -> CheckLine {
    check(id, expression.to_string(), computed, Bound::Equals(printed), TOL)
}

/// Inequality whose scratch quantities are verified as part of the check.
/// `scratch` holds `(recomputed, printed)` pairs.
fn bounded(
    id: &str,
    expression: &str,
    computed: f64,
    expected: Bound,
    scratch: &[(f64, f64)],
) -> CheckLine {
    let mut line = check(id, expression.to_string(), computed, expected, TOL);
    for &(value, printed) in scratch {
        if (value - printed).abs() > TOL {
            line.pass = false;
            line.expression
                .push_str(&format!(" [scratch drift: {value} vs {printed}]"));
        }
    }
    line
}

fn gain(a: f64) -> f64 {
    (a / 2.0).asin() - a / 2.0
}

/// Worst column deviation of a table row; the row passes when every column
/// matches its printed rounding.
fn row(id: &str, expression: &str, pairs: &[(f64, f64)]) -> CheckLine {
    let worst = pairs
        .iter()
        .map(|&(value, printed)| (value - printed).abs())
        .fold(0.0, f64::max);
    check(id, expression.to_string(), worst, Bound::Equals(0.0), TOL)
}

/// Recomputes the whole reference calculation log: 58 checks.
pub fn reference_report() -> Vec<CheckLine> {
    let mut out = Vec::with_capacity(58);

    let sols: Vec<_> = (2..=6).map(|k| solve_k_star(k).expect("k >= 2")).collect();
    let sol = |k: usize| &sols[k - 2];
    let d6 = sol(6).d_star;
    let mu6 = sol(6).mu;
    let sigma6 = sol(6).sigma.unwrap();
    let lambda6 = sol(6).lambda.unwrap();

    // Block: lemma4
    out.push(eq(
        "lemma4/double-gain",
        "detour(detour(2))",
        gain(gain(2.0)),
        0.00402,
    ));

    // Block: table1
    let table1 = [
        (2usize, 1.4782, 0.0926, 3.0490, 1.2219),
        (3, 1.8435, 0.2509, 2.8907, 1.5943),
        (4, 1.9619, 0.3943, 2.7473, 1.7623),
        (5, 1.9969, 0.5164, 2.6252, 1.8526),
        (6, 2.0000, 0.5708, 2.5708, 1.8828),
    ];
    for &(k, a, d, diam, mu) in &table1 {
        let s = sol(k);
        out.push(row(
            &format!("table1/k{k}"),
            "a*, d*, pi - d*, mu",
            &[
                (s.a_star, a),
                (s.d_star, d),
                (s.diameter(), diam),
                (s.mu, mu),
            ],
        ));
    }

    // Block: lemma10-k3
    let d3 = sol(3).d_star;
    out.push(eq(
        "lemma10-k3/half-diameter",
        "(pi - d*_3) / 2",
        (PI - d3) / 2.0,
        1.4454,
    ));
    out.push(eq("lemma10-k3/gain-145", "detour(1.45)", gain(1.45), 0.0860));
    out.push(eq(
        "lemma10-k3/gain-half-pi",
        "detour(pi/2)",
        gain(FRAC_PI_2),
        0.1179,
    ));
    out.push(eq(
        "lemma10-k3/chord-for-006",
        "inverse_detour(0.06)",
        inverse_detour(0.06).unwrap(),
        1.3150,
    ));

    // Block: table2
    let table2 = [(4usize, 1.0373, 1.7100), (5, 0.7862, 1.8390), (6, 0.6957, 1.8751)];
    for &(k, sigma, lambda) in &table2 {
        let s = sol(k);
        out.push(row(
            &format!("table2/k{k}"),
            "sigma, lambda",
            &[(s.sigma.unwrap(), sigma), (s.lambda.unwrap(), lambda)],
        ));
    }
    out.push(eq(
        "table2/k6-dstar-low",
        "d*_6 against the down-rounded print",
        d6,
        0.5707,
    ));

    // Block: lemma10 (midline coverage forces a single short shortcut)
    let printed_mid = [
        (4usize, 0.3411, 1.0906, 2.1811),
        (5, 0.4728, 0.8298, 2.4894),
        (6, 0.5262, 0.7403, 2.9610),
    ];
    for &(k, dhat_p, w_p, chain_p) in &printed_mid {
        let s = sol(k);
        let dhat = s.d_star - 2.0 * (k as f64 - 3.0) * gain(s.sigma.unwrap());
        let w = PI - s.lambda.unwrap() - dhat;
        let chain = (k as f64 - 2.0) * w;
        out.push(eq(
            &format!("lemma10-midline/k{k}-dhat"),
            "d* - 2 (k-3) detour(sigma)",
            dhat,
            dhat_p,
        ));
        out.push(bounded(
            &format!("lemma10-midline/k{k}-coverage"),
            "(k-2) (pi - lambda - dhat) < pi",
            chain,
            Bound::Below(PI),
            &[(w, w_p), (chain, chain_p)],
        ));
    }

    // Block: lemma10 final (area coverage contradiction)
    let printed_area = [
        (4usize, 1.9304, 0.8701, 2.6103),
        (5, 1.9893, 0.6795, 2.7178),
        (6, 1.9979, 0.6174, 3.0872),
    ];
    for &(k, ahat_p, w_p, chain_p) in &printed_area {
        let s = sol(k);
        let dhat = s.d_star - 2.0 * (k as f64 - 3.0) * gain(s.sigma.unwrap());
        let ahat = inverse_detour(dhat).unwrap();
        let w = PI - ahat - dhat;
        let chain = (k as f64 - 1.0) * w;
        out.push(eq(
            &format!("lemma10-area/k{k}-ahat"),
            "inverse_detour(dhat)",
            ahat,
            ahat_p,
        ));
        out.push(bounded(
            &format!("lemma10-area/k{k}-coverage"),
            "(k-1) (pi - ahat - dhat) < pi",
            chain,
            Bound::Below(PI),
            &[(w, w_p), (chain, chain_p)],
        ));
    }

    // Block: lemma12 (all shortcuts reach the midline)
    let printed12 = [(3usize, 1.2964, 2.5928), (4, 0.9850, 2.9549), (5, 0.7726, 3.0902)];
    for &(k, w_p, chain_p) in &printed12 {
        let s = sol(k);
        let w = PI - s.mu - s.d_star;
        let chain = (k as f64 - 1.0) * w;
        out.push(bounded(
            &format!("lemma12/k{k}"),
            "(k-1) (pi - mu - d*) < pi",
            chain,
            Bound::Below(PI),
            &[(w, w_p), (chain, chain_p)],
        ));
    }

    // Block: theorem14 (six shortcuts)
    let w14 = PI - mu6 - d6;
    out.push(bounded(
        "theorem14/midline-four",
        "4 (pi - mu_6 - d*_6) < pi",
        4.0 * w14,
        Bound::Below(PI),
        &[(w14, 0.6880), (4.0 * w14, 2.7518)],
    ));
    out.push(bounded(
        "theorem14/boundary-six",
        "(pi - d*_6) + 5 (pi - mu_6 - d*_6) < 2 pi",
        (PI - d6) + 5.0 * w14,
        Bound::Below(TAU),
        &[((PI - d6) + 5.0 * w14, 6.0106)],
    ));
    out.push(eq(
        "theorem14/combo-gain",
        "detour(pi - d*_6 - mu_6)",
        gain(PI - d6 - mu6),
        0.0072,
    ));
    let dhat14 = d6 - 0.016;
    let ahat14 = inverse_detour(dhat14).unwrap();
    out.push(bounded(
        "theorem14/area-five",
        "5 (pi - ahat - dhat) < pi, dhat = d*_6 - 0.016",
        5.0 * (PI - ahat14 - dhat14),
        Bound::Below(PI),
        &[(dhat14, 0.5548), (ahat14, 1.9997), (5.0 * (PI - ahat14 - dhat14), 2.9353)],
    ));

    // Block: lemma16 (shifted strips for seven shortcuts)
    let dh = |l: f64| d6 - l * 2.0 * gain(sigma6);
    out.push(bounded(
        "lemma16/midline-reach-4",
        "2 detour(1.849) < dhat(4)",
        2.0 * gain(1.849),
        Bound::Below(dh(4.0)),
        &[(2.0 * gain(1.849), 0.5104), (dh(4.0), 0.5114)],
    ));
    let w16a = PI - 1.849 - dh(4.0);
    out.push(bounded(
        "lemma16/width-4",
        "4 (pi - 1.849 - dhat(4)) < pi",
        4.0 * w16a,
        Bound::Below(PI),
        &[(w16a, 0.7812), (4.0 * w16a, 3.1248)],
    ));
    out.push(bounded(
        "lemma16/dhat-2-exceeds-k5",
        "dhat(2) > d*_5",
        dh(2.0),
        Bound::Above(sol(5).d_star),
        &[(dh(2.0), 0.5411)],
    ));
    let w16b = PI - lambda6 - dh(1.0);
    out.push(bounded(
        "lemma16/width-1",
        "4 (pi - lambda_6 - dhat(1)) < pi",
        4.0 * w16b,
        Bound::Below(PI),
        &[(dh(1.0), 0.5559), (w16b, 0.7105), (4.0 * w16b, 2.8422)],
    ));

    // Block: lemma17 (boundary coverage with widths at 0.54)
    out.push(bounded(
        "lemma17/no-combination",
        "1.7 + lambda_6 > pi",
        1.7 + lambda6,
        Bound::Above(PI),
        &[(1.7 + lambda6, 3.5751)],
    ));
    out.push(bounded(
        "lemma17/gain-1999",
        "detour(1.999) < 0.54",
        gain(1.999),
        Bound::Below(0.54),
        &[(gain(1.999), 0.5397)],
    ));
    let w1 = PI - 1.999 - 0.54;
    let w2 = PI - lambda6 - 0.54;
    let w3 = PI - 1.7 - 0.54;
    out.push(bounded(
        "lemma17/boundary-mixed",
        "w3 + 2 w2 + 6 w1 < 2 pi",
        w3 + 2.0 * w2 + 6.0 * w1,
        Bound::Below(TAU),
        &[
            (w1, 0.6026),
            (w2, 0.7265),
            (w3, 0.9016),
            (w3 + 2.0 * w2 + 6.0 * w1, 5.9701),
        ],
    ));
    out.push(bounded(
        "lemma17/boundary-ten",
        "2 w2 + 8 w1 < 2 pi",
        2.0 * w2 + 8.0 * w1,
        Bound::Below(TAU),
        &[(2.0 * w2 + 8.0 * w1, 6.2737)],
    ));

    // Block: lemma18 (area contradiction in the shifted strip)
    let dhat18 = dh(1.0);
    let s3max = 0.8 * PI - dhat18;
    let area_lambda = area_bound(lambda6, dhat18).expect("valid arguments");
    let area_s3 = area_bound(s3max, dhat18).expect("valid arguments");
    out.push(eq(
        "lemma18/area-lambda",
        "area(lambda_6, dhat)",
        area_lambda,
        0.7900,
    ));
    out.push(bounded(
        "lemma18/area-s3",
        "area(0.8 pi - dhat, dhat)",
        area_s3,
        Bound::Equals(0.9681),
        &[(s3max, 1.9573)],
    ));
    out.push(bounded(
        "lemma18/gain-below-dhat",
        "detour(1.999) < dhat",
        gain(1.999),
        Bound::Below(dhat18),
        &[(gain(1.999), 0.53967)],
    ));
    let area_cap = 4.0 * dhat18 * (PI - 1.999 - dhat18);
    let total = area_lambda + area_s3 + 4.0 * area_cap;
    out.push(bounded(
        "lemma18/area-total",
        "area(lambda_6) + area(s3) + 4 cap < 4 dhat pi",
        total,
        Bound::Below(4.0 * dhat18 * PI),
        &[
            (area_cap, 1.3046),
            (total, 6.9765),
            (4.0 * dhat18 * PI, 6.9862),
        ],
    ));

    // Block: lemma19 (deep-umbra pinned pairs)
    out.push(eq(
        "lemma19/inner-offset",
        "0.4 - d*_6 / 2",
        0.4 - d6 / 2.0,
        0.1146,
    ));
    out.push(eq(
        "lemma19/outer-offset",
        "0.4 + d*_6 / 2",
        0.4 + d6 / 2.0,
        0.6854,
    ));

    // Block: contradiction-a (a short shortcut exists)
    let wca = PI - 1.999 - d6;
    out.push(eq(
        "contradiction-a/width",
        "pi - 1.999 - d*_6",
        wca,
        0.5718,
    ));
    out.push(bounded(
        "contradiction-a/interval",
        "pi - 0.8 > 4 (pi - 1.999 - d*_6)",
        PI - 0.8,
        Bound::Above(4.0 * wca),
        &[(PI - 0.8, 2.3416), (4.0 * wca, 2.2872)],
    ));
    out.push(bounded(
        "contradiction-a/isolated-points",
        "0.4 + d*_6 / 2 > pi - 1.999 - d*_6",
        0.4 + d6 / 2.0,
        Bound::Above(wca),
        &[],
    ));

    // Block: lemma20 (gain budget of the two smallest shortcuts)
    let combined = 5.0 * PI - 7.0 * d6 - 5.0 * lambda6;
    out.push(bounded(
        "lemma20/combined-length",
        "5 pi - 7 d*_6 - 5 lambda_6 < 2.34",
        combined,
        Bound::Below(2.34),
        &[(combined, 2.3369)],
    ));
    let split1 = gain(sigma6) + gain(2.34 - sigma6);
    out.push(bounded(
        "lemma20/split-sigma",
        "detour(sigma_6) + detour(2.34 - sigma_6) < 0.2",
        split1,
        Bound::Below(0.2),
        &[(split1, 0.1505)],
    ));
    let split2 = gain(0.83) + gain(FRAC_PI_2 + 1.0 - 0.83);
    out.push(bounded(
        "lemma20/split-083-long",
        "detour(0.83) + detour(pi/2 + 1 - 0.83) < 0.2",
        split2,
        Bound::Below(0.2),
        &[(split2, 0.1986)],
    ));
    let split3 = gain(0.83) + gain(1.7);
    out.push(bounded(
        "lemma20/split-083-17",
        "detour(0.83) + detour(1.7) < 0.2",
        split3,
        Bound::Below(0.2),
        &[(split3, 0.1789)],
    ));
    out.push(bounded(
        "lemma20/no-short-combo",
        "1.999 + sigma_6 > pi - d*_6",
        1.999 + sigma6,
        Bound::Above(PI - d6),
        &[(1.999 + sigma6, 2.6947), (PI - d6, 2.5708)],
    ));

    // Block: contradiction-b (no short shortcut)
    out.push(eq(
        "contradiction-b/width-lambda",
        "pi - lambda_6 - d*_6",
        PI - lambda6 - d6,
        0.6957,
    ));
    let zeta = FRAC_PI_2 - 1.4;
    out.push(bounded(
        "contradiction-b/two-pieces",
        "2 detour(1.949) < d*_6 + zeta",
        2.0 * gain(1.949),
        Bound::Below(d6 + zeta),
        &[
            (zeta, 0.1708),
            (2.0 * gain(1.949), 0.7400),
            (d6 + zeta, 0.7416),
        ],
    ));
    let wcb = PI - 1.949 - d6;
    out.push(bounded(
        "contradiction-b/coverage",
        "5 * 2 * (pi - 1.949 - d*_6) < 2 pi",
        10.0 * wcb,
        Bound::Below(TAU),
        &[(wcb, 0.6218)],
    ));

    debug_assert_eq!(out.len(), 58);
    out
}

/// Checks behind the area-profile monotonicity claim: the auxiliary
/// functions `g` and `h` are positive where needed and the profile is
/// unimodal around the critical chord for representative strip heights.
pub fn area_lemma_report() -> Vec<CheckLine> {
    let g = |x: f64| (1.2 - x) / (1.0 - x * x).sqrt() + 2.0 * x - 1.2 - x.asin();
    let h = |x: f64| x * x + 1.2 * x - 2.0 + 2.0 * (1.0 - x * x).powf(1.5);

    let mut out = Vec::new();
    out.push(bounded(
        "area-profile/h-half",
        "h(1/2) > 0",
        h(0.5),
        Bound::Above(0.0),
        &[(h(0.5), 0.1490)],
    ));
    out.push(check(
        "area-profile/g-zero",
        "g(0) == 0".to_string(),
        g(0.0),
        Bound::Equals(0.0),
        1e-12,
    ));
    let n = 10_000;
    let min_g = (1..n)
        .map(|i| g(i as f64 / n as f64))
        .fold(f64::INFINITY, f64::min);
    out.push(check(
        "area-profile/g-positive",
        format!("min of g on a {n}-point grid of (0, 1) > 0"),
        min_g,
        Bound::Above(0.0),
        0.0,
    ));

    for dstar in [0.1, 0.3, 0.5, 0.7] {
        let a_star = if dstar >= MAX_DETOUR {
            2.0
        } else {
            inverse_detour(dstar).expect("valid gain")
        };
        let grid = 1000;
        let mut worst = f64::NEG_INFINITY;
        let mut prev = 0.0;
        let mut prev_a = 0.0;
        for i in 1..=grid {
            let a = 2.0 * i as f64 / grid as f64;
            let v = area_bound(a, dstar).expect("valid arguments");
            let step = v - prev;
            // Wrong-direction movement: decreasing before a*, increasing
            // after. The step straddling a* itself is unconstrained.
            if a <= a_star {
                worst = worst.max(-step);
            } else if prev_a >= a_star {
                worst = worst.max(step);
            }
            prev = v;
            prev_a = a;
        }
        out.push(check(
            &format!("area-profile/unimodal-{dstar}"),
            format!("profile rises to the critical chord and falls after (dstar = {dstar})"),
            worst,
            Bound::AtMost(1e-12),
            0.0,
        ));
    }
    out
}

/// Numeric spot-checks behind the asymptotic construction: the three chord
/// estimates compared against their polynomial bounds.
pub fn asymptotic_report(m: usize) -> Result<Vec<CheckLine>> {
    if m < 4 {
        return Err(crate::error::Error::AsymptoticSize(m));
    }
    let mf = m as f64;
    let mut out = Vec::new();

    out.push(check(
        &format!("asymptotic-m{m}/near-chord"),
        "2 sin(1/m) > 5 / (3m)".to_string(),
        2.0 * (1.0 / mf).sin(),
        Bound::Above(5.0 / (3.0 * mf)),
        0.0,
    ));

    let t_far = (mf.sqrt().floor() as i64 - 2).max(0) as usize;
    for t in sample_range(0, t_far) {
        out.push(check(
            &format!("asymptotic-m{m}/far-chord-t{t}"),
            "2 cos((t+2) / (2m)) >= 2 - 1/(4m)".to_string(),
            2.0 * ((t as f64 + 2.0) / (2.0 * mf)).cos(),
            Bound::AtLeast(2.0 - 1.0 / (4.0 * mf)),
            0.0,
        ));
    }

    let band_start = (4.0 * mf.sqrt()).floor() as usize + 1;
    if band_start < 2 * m {
        for t in sample_range(band_start, 2 * m - 1) {
            let ratio = t as f64 / mf;
            out.push(check(
                &format!("asymptotic-m{m}/band-chord-t{t}"),
                "2 cos(t / (2m)) <= 2 - (t/m)^2 / 6".to_string(),
                2.0 * (ratio / 2.0).cos(),
                Bound::AtMost(2.0 - ratio * ratio / 6.0),
                0.0,
            ));
        }
    }
    Ok(out)
}

/// Up to 32 integers spanning `[lo, hi]`, always including both ends.
fn sample_range(lo: usize, hi: usize) -> Vec<usize> {
    if lo > hi {
        return Vec::new();
    }
    let count = hi - lo + 1;
    if count <= 32 {
        return (lo..=hi).collect();
    }
    let mut v: Vec<usize> = (0..32)
        .map(|i| lo + i * (count - 1) / 31)
        .collect();
    v.dedup();
    v
}

pub fn all_pass(lines: &[CheckLine]) -> bool {
    lines.iter().all(|l| l.pass)
}

/// Formats a value with 10 significant digits.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (9 - magnitude).clamp(0, 17) as usize;
    format!("{x:.decimals$}")
}

/// Plain-text report mirroring the block layout of the log; byte-stable
/// across runs.
pub fn render_text(lines: &[CheckLine]) -> String {
    let mut s = String::new();
    s.push_str("reference calculation re-check (arithmetic only; the surrounding case analyses are not encoded)\n");
    let mut block = "";
    for l in lines {
        let prefix = l.id.split('/').next().unwrap_or("");
        if prefix != block {
            block = prefix;
            s.push_str(&format!("\n[{block}]\n"));
        }
        let verdict = if l.pass { " ok " } else { "FAIL" };
        s.push_str(&format!(
            "  [{verdict}] {}: {} | computed {} {} {}",
            l.id,
            l.expression,
            fmt_sig(l.computed),
            l.expected.relation(),
            fmt_sig(l.expected.value()),
        ));
        if matches!(l.expected, Bound::Equals(_)) {
            s.push_str(&format!(" (tol {:e})", l.tolerance));
        }
        s.push('\n');
    }
    let passed = lines.iter().filter(|l| l.pass).count();
    s.push_str(&format!("\n{} checks: {} passed, {} failed\n", lines.len(), passed, lines.len() - passed));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_has_58_lines_and_passes() {
        let report = reference_report();
        assert_eq!(report.len(), 58);
        for line in &report {
            assert!(line.pass, "failed: {} ({})", line.id, line.expression);
        }
    }

    #[test]
    fn report_ids_are_unique() {
        let report = reference_report();
        let mut ids: Vec<_> = report.iter().map(|l| l.id.clone()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 58);
    }

    #[test]
    fn report_text_is_byte_stable() {
        let a = render_text(&reference_report());
        let b = render_text(&reference_report());
        assert_eq!(a, b);
        assert!(a.contains("58 checks: 58 passed, 0 failed"));
    }

    #[test]
    fn area_lemma_checks_pass() {
        let report = area_lemma_report();
        assert!(!report.is_empty());
        for line in &report {
            assert!(line.pass, "failed: {} ({})", line.id, line.expression);
        }
        // h(1/2) has the known value.
        let h = report.iter().find(|l| l.id == "area-profile/h-half").unwrap();
        assert!((h.computed - 0.1490).abs() < 5e-4);
    }

    #[test]
    fn asymptotic_checks_pass() {
        for m in [4usize, 9, 16, 100] {
            let report = asymptotic_report(m).unwrap();
            assert!(!report.is_empty());
            for line in &report {
                assert!(line.pass, "failed: {} ({})", line.id, line.expression);
            }
        }
        assert!(asymptotic_report(3).is_err());
    }

    #[test]
    fn failing_value_is_reported() {
        let line = eq("x/y", "z", 1.0, 2.0);
        assert!(!line.pass);
        let rendered = render_text(&[line]);
        assert!(rendered.contains("FAIL"));
    }

    #[test]
    fn sig_formatting() {
        assert_eq!(fmt_sig(3.0490221), "3.049022100");
        assert_eq!(fmt_sig(0.0926), "0.09260000000");
        assert_eq!(fmt_sig(0.0), "0");
    }
}
