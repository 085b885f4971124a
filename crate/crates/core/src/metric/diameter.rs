//! Certified interval bounds on the continuous diameter.
//!
//! The diameter is maximized over sampled point pairs. Because the distance
//! is 1-Lipschitz in each argument (arc metric on each side), a pair grid of
//! step `h` per coordinate misses the true maximum by at most `h`, so
//! `hi = lo + 2h` is a sound upper bound with slack to spare.
//!
//! Pairs with arc distance below 2 never decide the diameter: every path
//! between antipodal points has length at least the Euclidean distance 2, so
//! the maximum over near-antipodal pairs is at least 2, while closer pairs
//! are already within arc distance < 2 of each other. The scan therefore
//! covers counter-clockwise gaps in `[pi - (pi-2) - h, pi]`; wider gaps are
//! seen from the opposite side of the pair.
//!
//! On top of the uniform mesh the scan samples structural candidates where
//! the synthesized configurations attain their maxima exactly: chord
//! endpoints, umbra and deep-umbra boundary points (with antipodes), and
//! pair offsets `pi + xi` with `xi` built from detour gains (`0`, `±d_i`,
//! `±(d_i ± d_j)`).

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::{PI, TAU};

use super::{distance, Configuration, PathWitness};
use crate::angle::Angle;
use crate::error::{Error, Result};

/// Shortcut count up to which structural sample points and pair offsets are
/// generated. Beyond it (the asymptotic families) the uniform mesh alone
/// carries the certificate.
const SPECIAL_LIMIT: usize = 64;

/// Endpoint-ring size up to which the per-target cone evaluation is cheaper
/// than one full-graph search per source.
const SMALL_RING: usize = 256;

/// Near-antipodal window half-width: pairs with arc distance below
/// `pi - DELTA_MAX = 2` cannot decide the diameter.
const DELTA_MAX: f64 = PI - 2.0;

/// A certified two-sided bound on the continuous diameter.
#[derive(Clone, Debug)]
pub struct DiameterBound {
    /// A realized distance, hence a true lower bound.
    pub lo: f64,
    /// Certified upper bound, `lo + 2 * step`.
    pub hi: f64,
    /// Grid step the certificate is based on.
    pub step: f64,
    /// Pair attaining `lo`.
    pub witness: (Angle, Angle),
    /// Shortest path realizing `lo`.
    pub path: PathWitness,
}

struct MinEntry {
    d: f64,
    node: u32,
}

impl PartialEq for MinEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for MinEntry {}
impl PartialOrd for MinEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for MinEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        other.d.total_cmp(&self.d)
    }
}

fn light_dijkstra(adj: &[Vec<(u32, f64)>], seeds: &[(u32, f64)], dist: &mut [f64]) {
    dist.fill(f64::INFINITY);
    let mut heap = BinaryHeap::with_capacity(seeds.len().max(64));
    for &(node, d) in seeds {
        if d < dist[node as usize] {
            dist[node as usize] = d;
            heap.push(MinEntry { d, node });
        }
    }
    while let Some(MinEntry { d, node }) = heap.pop() {
        if d > dist[node as usize] {
            continue;
        }
        for &(next, w) in &adj[node as usize] {
            let nd = d + w;
            if nd < dist[next as usize] {
                dist[next as usize] = nd;
                heap.push(MinEntry { d: nd, node: next });
            }
        }
    }
}

/// Sorted circle positions with binary-search helpers.
fn sorted_positions(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

/// Index ranges of positions whose angle lies in `[lo, hi]` (mod 2pi).
fn window_ranges(positions: &[f64], lo: f64, hi: f64) -> [std::ops::Range<usize>; 2] {
    let lo = lo.rem_euclid(TAU);
    let hi = hi.rem_euclid(TAU);
    let lower = positions.partition_point(|&x| x < lo);
    let upper = positions.partition_point(|&x| x <= hi);
    if lo <= hi {
        [lower..upper, 0..0]
    } else {
        [lower..positions.len(), 0..upper]
    }
}

fn mesh_positions(h: f64) -> Vec<f64> {
    // Even count keeps the mesh closed under the antipodal map, so exact
    // antipodal pairs are always sampled.
    let n = 2 * ((PI / h).ceil() as usize).max(1);
    (0..n).map(|i| TAU * i as f64 / n as f64).collect()
}

fn structural_points(config: &Configuration) -> Vec<f64> {
    let mut pts = Vec::with_capacity(12 * config.len());
    for s in config.shortcuts() {
        let mut add = |a: Angle| {
            pts.push(a.radians());
            pts.push(a.antipode().radians());
        };
        add(s.u());
        add(s.v());
        let inner = s.inner_umbra();
        add(inner.start());
        add(inner.end());
        let deep = s.deep_umbra();
        add(deep.start());
        add(deep.end());
    }
    pts
}

fn pair_offsets(config: &Configuration) -> Vec<f64> {
    let gains: Vec<f64> = config.shortcuts().iter().map(|s| s.detour()).collect();
    let mut offs = vec![0.0];
    for (i, &di) in gains.iter().enumerate() {
        offs.push(di);
        offs.push(-di);
        for &dj in &gains[i..] {
            for v in [di + dj, di - dj, dj - di] {
                offs.push(v);
            }
        }
    }
    offs.retain(|x| x.abs() <= DELTA_MAX);
    sorted_positions(offs)
}

/// Certified diameter bounds for a configuration at grid step `h`.
///
/// `lo` is the maximum distance over all sampled pairs (a realized value);
/// `hi = lo + 2h` is a valid upper bound by the Lipschitz certificate.
pub fn diameter_bounds(config: &Configuration, h: f64) -> Result<DiameterBound> {
    if h <= 0.0 || !h.is_finite() {
        return Err(Error::GridStep(h));
    }

    let with_specials = config.len() <= SPECIAL_LIMIT;

    let mut positions = mesh_positions(h);
    for s in config.shortcuts() {
        positions.push(s.u().radians());
        positions.push(s.v().radians());
    }
    if with_specials {
        positions.extend(structural_points(config));
    }
    let positions = sorted_positions(positions);
    let offsets = if with_specials {
        pair_offsets(config)
    } else {
        Vec::new()
    };

    // Endpoint ring shared by both strategies.
    let ring: Vec<f64> = sorted_positions(
        config
            .shortcuts()
            .iter()
            .flat_map(|s| [s.u().radians(), s.v().radians()])
            .collect(),
    );

    let mut best = (f64::NEG_INFINITY, 0.0f64, 0.0f64);
    let mut track = |d: f64, p: f64, q: f64| {
        if d > best.0 {
            best = (d, p, q);
        }
    };

    // Pairs at ccw gap below pi - DELTA_MAX cannot decide the diameter; the
    // extra h absorbs mesh rounding of pairs just past gap pi (seen from the
    // other side). Clamped for very coarse steps.
    let win_lo = (PI - DELTA_MAX - h).max(0.0);

    if ring.len() <= SMALL_RING {
        // Small ring: per-source search over chord endpoints only, then a
        // cone evaluation per sampled partner.
        let ring_adj = build_ring_adj(config, &ring);
        let w = ring.len();
        let mut dist = vec![0.0f64; w];
        for (i, &p) in positions.iter().enumerate() {
            seed_and_run(&ring_adj, &ring, p, &mut dist);
            let pa = Angle::new(p);
            let cone = |q: Angle| -> f64 {
                let mut bestd = pa.arc_distance(q);
                for (wi, &wd) in dist.iter().enumerate() {
                    let d = wd + Angle::new(ring[wi]).arc_distance(q);
                    if d < bestd {
                        bestd = d;
                    }
                }
                bestd
            };
            for range in window_ranges(&positions, p + win_lo, p + PI) {
                for j in range {
                    if j == i {
                        continue;
                    }
                    let q = positions[j];
                    track(cone(Angle::new(q)), p, q);
                }
            }
            for &xi in &offsets {
                let q = Angle::new(p + PI + xi);
                track(cone(q), p, q.radians());
            }
        }
    } else {
        // Large ring: one full-graph search per source over all positions.
        let graph = super::Graph::build(
            config,
            &positions.iter().map(|&x| Angle::new(x)).collect::<Vec<_>>(),
        );
        let nodes = &graph.nodes;
        let mut adj: Vec<Vec<(u32, f64)>> = vec![Vec::new(); nodes.len()];
        for (i, edges) in graph.adj.iter().enumerate() {
            for &(t, len, _) in edges {
                adj[i].push((t as u32, len));
            }
        }
        let mut dist = vec![0.0f64; nodes.len()];
        for i in 0..nodes.len() {
            let p = nodes[i];
            light_dijkstra(&adj, &[(i as u32, 0.0)], &mut dist);
            for range in window_ranges(nodes, p + win_lo, p + PI) {
                for j in range {
                    if j == i {
                        continue;
                    }
                    track(dist[j], p, nodes[j]);
                }
            }
        }
    }

    let (_, p, q) = best;
    let (lo, path) = distance(config, Angle::new(p), Angle::new(q));
    Ok(DiameterBound {
        lo,
        hi: lo + 2.0 * h,
        step: h,
        witness: (Angle::new(p), Angle::new(q)),
        path,
    })
}

fn build_ring_adj(config: &Configuration, ring: &[f64]) -> Vec<Vec<(u32, f64)>> {
    let w = ring.len();
    let mut adj: Vec<Vec<(u32, f64)>> = vec![Vec::new(); w];
    if w > 1 {
        for i in 0..w {
            let j = (i + 1) % w;
            let gap = if j == 0 {
                ring[0] + TAU - ring[w - 1]
            } else {
                ring[j] - ring[i]
            };
            adj[i].push((j as u32, gap));
            adj[j].push((i as u32, gap));
        }
    }
    let idx = |x: f64| ring.binary_search_by(|a| a.total_cmp(&x)).unwrap() as u32;
    for s in config.shortcuts() {
        let ui = idx(s.u().radians());
        let vi = idx(s.v().radians());
        adj[ui as usize].push((vi, s.chord()));
        adj[vi as usize].push((ui, s.chord()));
    }
    adj
}

/// Runs the endpoint-ring search from a virtual source at angle `p`.
fn seed_and_run(adj: &[Vec<(u32, f64)>], ring: &[f64], p: f64, dist: &mut [f64]) {
    let w = ring.len();
    if w == 0 {
        return;
    }
    let pos = ring.partition_point(|&x| x < p);
    let right = pos % w;
    let left = (pos + w - 1) % w;
    let gap_right = (ring[right] - p).rem_euclid(TAU);
    let gap_left = (p - ring[left]).rem_euclid(TAU);
    let seeds = [(right as u32, gap_right), (left as u32, gap_left)];
    light_dijkstra(adj, &seeds, dist);
}
