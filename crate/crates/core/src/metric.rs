//! Exact shortest-path metric for a set of shortcuts.
//!
//! A path may walk along the circle and traverse whole chords; switching
//! between chords mid-air is forbidden, so direction changes happen only at
//! chord endpoints (or at the two query points). The metric is therefore
//! exactly realized on the finite graph whose nodes are the query points plus
//! all chord endpoints, with arc edges between circularly consecutive nodes
//! and one chord edge per shortcut.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::TAU;

use crate::angle::Angle;
use crate::shortcut::Shortcut;

mod diameter;
pub use diameter::{diameter_bounds, DiameterBound};

/// An ordered multiset of shortcuts. Duplicates and crossings are allowed.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Configuration {
    shortcuts: Vec<Shortcut>,
    label: String,
}

impl Configuration {
    pub fn new(shortcuts: Vec<Shortcut>, label: impl Into<String>) -> Self {
        Configuration {
            shortcuts,
            label: label.into(),
        }
    }

    pub fn empty(label: impl Into<String>) -> Self {
        Configuration::new(Vec::new(), label)
    }

    pub fn shortcuts(&self) -> &[Shortcut] {
        &self.shortcuts
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.shortcuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shortcuts.is_empty()
    }

    pub fn push(&mut self, s: Shortcut) {
        self.shortcuts.push(s);
    }
}

impl From<Vec<Shortcut>> for Configuration {
    fn from(shortcuts: Vec<Shortcut>) -> Self {
        Configuration::new(shortcuts, "")
    }
}

/// One leg of a witness path: an arc walk or a full chord traversal.
#[derive(Clone, Debug, PartialEq)]
pub enum Leg {
    Arc {
        from: Angle,
        to: Angle,
        /// Walk length; the ccw arc `from -> to` or the cw arc, whichever
        /// the path actually takes.
        length: f64,
    },
    Chord {
        /// Index of the shortcut in the configuration.
        index: usize,
        from: Angle,
        to: Angle,
        length: f64,
    },
}

impl Leg {
    pub fn length(&self) -> f64 {
        match self {
            Leg::Arc { length, .. } | Leg::Chord { length, .. } => *length,
        }
    }
}

/// A realized path: total length plus its legs in traversal order.
#[derive(Clone, Debug, PartialEq)]
pub struct PathWitness {
    pub total: f64,
    pub legs: Vec<Leg>,
}

impl PathWitness {
    /// Indices of the shortcuts the path traverses, in order.
    pub fn shortcut_indices(&self) -> Vec<usize> {
        self.legs
            .iter()
            .filter_map(|l| match l {
                Leg::Chord { index, .. } => Some(*index),
                _ => None,
            })
            .collect()
    }
}

#[derive(Clone, Copy)]
pub(crate) enum EdgeKind {
    Arc,
    Chord(usize),
}

pub(crate) struct Graph {
    /// Node angles, sorted ascending in `[0, 2pi)`.
    pub(crate) nodes: Vec<f64>,
    /// Adjacency: (target node, length, kind).
    pub(crate) adj: Vec<Vec<(usize, f64, EdgeKind)>>,
}

impl Graph {
    /// Exact metric graph over `extra` points plus all chord endpoints.
    pub(crate) fn build(config: &Configuration, extra: &[Angle]) -> Graph {
        let mut angles: Vec<f64> = Vec::with_capacity(extra.len() + 2 * config.len());
        angles.extend(extra.iter().map(|a| a.radians()));
        for s in config.shortcuts() {
            angles.push(s.u().radians());
            angles.push(s.v().radians());
        }
        angles.sort_by(f64::total_cmp);
        angles.dedup();

        let n = angles.len();
        let mut adj = vec![Vec::new(); n];
        if n > 1 {
            for i in 0..n {
                let j = (i + 1) % n;
                let gap = if j == 0 {
                    angles[0] + TAU - angles[n - 1]
                } else {
                    angles[j] - angles[i]
                };
                adj[i].push((j, gap, EdgeKind::Arc));
                adj[j].push((i, gap, EdgeKind::Arc));
            }
        }
        let idx = |x: f64| angles.binary_search_by(|a| a.total_cmp(&x)).unwrap();
        for (k, s) in config.shortcuts().iter().enumerate() {
            let ui = idx(s.u().radians());
            let vi = idx(s.v().radians());
            adj[ui].push((vi, s.chord(), EdgeKind::Chord(k)));
            adj[vi].push((ui, s.chord(), EdgeKind::Chord(k)));
        }
        Graph { nodes: angles, adj }
    }

    pub(crate) fn index_of(&self, a: Angle) -> usize {
        self.nodes
            .binary_search_by(|x| x.total_cmp(&a.radians()))
            .unwrap()
    }

    pub(crate) fn angle(&self, i: usize) -> Angle {
        Angle::new(self.nodes[i])
    }
}

/// Per-node search label: length first, then number of chord legs, then the
/// lexicographically earliest node sequence. The secondary keys make the
/// returned witness deterministic when several shortest paths tie exactly.
#[derive(Clone)]
pub(crate) struct Label {
    pub(crate) len: f64,
    pub(crate) chords: u32,
    pub(crate) path: Vec<u32>,
}

struct HeapEntry {
    len: f64,
    chords: u32,
    node: usize,
    stamp: u64,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for HeapEntry {}
impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed so the BinaryHeap pops the smallest label first.
        other
            .len
            .total_cmp(&self.len)
            .then(other.chords.cmp(&self.chords))
    }
}

pub(crate) fn dijkstra(graph: &Graph, src: usize) -> Vec<Option<Label>> {
    let n = graph.nodes.len();
    let mut best: Vec<Option<Label>> = vec![None; n];
    let mut stamps: Vec<u64> = vec![0; n];
    let mut heap = BinaryHeap::new();
    best[src] = Some(Label {
        len: 0.0,
        chords: 0,
        path: vec![src as u32],
    });
    heap.push(HeapEntry {
        len: 0.0,
        chords: 0,
        node: src,
        stamp: 0,
    });
    while let Some(entry) = heap.pop() {
        if stamps[entry.node] != entry.stamp {
            continue;
        }
        let cur = best[entry.node].clone().expect("popped unlabeled node");
        for &(next, w, kind) in &graph.adj[entry.node] {
            let len = cur.len + w;
            let chords = cur.chords + matches!(kind, EdgeKind::Chord(_)) as u32;
            let improves = match &best[next] {
                None => true,
                Some(b) => match len.total_cmp(&b.len).then(chords.cmp(&b.chords)) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    // Exact tie in length and chord count: compare node paths.
                    Ordering::Equal => {
                        let mut cand = Vec::with_capacity(cur.path.len() + 1);
                        cand.extend_from_slice(&cur.path);
                        cand.push(next as u32);
                        cand < b.path
                    }
                },
            };
            if improves {
                let mut path = Vec::with_capacity(cur.path.len() + 1);
                path.extend_from_slice(&cur.path);
                path.push(next as u32);
                stamps[next] += 1;
                heap.push(HeapEntry {
                    len,
                    chords,
                    node: next,
                    stamp: stamps[next],
                });
                best[next] = Some(Label { len, chords, path });
            }
        }
    }
    best
}

/// Shortest-path distance between `p` and `q` under the configuration, with
/// a witness path. Symmetric by construction: the pair is canonically
/// ordered internally and the witness reversed when needed.
pub fn distance(config: &Configuration, p: Angle, q: Angle) -> (f64, PathWitness) {
    if p == q {
        return (
            0.0,
            PathWitness {
                total: 0.0,
                legs: Vec::new(),
            },
        );
    }
    let swapped = q.radians() < p.radians();
    let (src, dst) = if swapped { (q, p) } else { (p, q) };

    let graph = Graph::build(config, &[src, dst]);
    let si = graph.index_of(src);
    let di = graph.index_of(dst);
    let best = dijkstra(&graph, si);
    let label = best[di].as_ref().expect("circle graph is connected");
    let mut legs = legs_from_path(config, &graph, &label.path);
    let total = label.len;
    if swapped {
        legs = reverse_legs(&legs);
    }
    let witness = PathWitness { total, legs };
    #[cfg(debug_assertions)]
    check_witness(config, p, q, total, &witness);
    (total, witness)
}

/// Rebuilds legs from a node path. Each hop is classified as the edge the
/// search must have used (a chord only when strictly shorter than the arc
/// gap, since ties prefer fewer chords); runs of same-direction arc hops are
/// merged into single legs.
fn legs_from_path(config: &Configuration, graph: &Graph, path: &[u32]) -> Vec<Leg> {
    let n = graph.nodes.len();
    let mut legs: Vec<Leg> = Vec::new();
    for w in path.windows(2) {
        let (a, b) = (w[0] as usize, w[1] as usize);
        let from = graph.angle(a);
        let to = graph.angle(b);

        let mut arc_len = f64::INFINITY;
        let mut arc_ccw = true;
        if b == (a + 1) % n {
            arc_len = from.ccw_to(to);
        }
        if a == (b + 1) % n {
            // With only two nodes both ring directions exist; keep the shorter.
            let g = to.ccw_to(from);
            if g < arc_len {
                arc_len = g;
                arc_ccw = false;
            }
        }
        let chord = graph.adj[a].iter().find_map(|&(t, _, kind)| match kind {
            EdgeKind::Chord(k) if t == b => Some(k),
            _ => None,
        });

        let leg = match chord {
            Some(k) if config.shortcuts()[k].chord() < arc_len => Leg::Chord {
                index: k,
                from,
                to,
                length: config.shortcuts()[k].chord(),
            },
            _ => {
                debug_assert!(arc_len.is_finite(), "non-adjacent hop without a chord");
                Leg::Arc {
                    from,
                    to,
                    length: arc_len,
                }
            }
        };

        match (legs.last_mut(), &leg) {
            (
                Some(Leg::Arc {
                    to: prev_to,
                    length: prev_len,
                    from: prev_from,
                }),
                Leg::Arc { from, to, length },
            ) if prev_to == from && arc_direction(*prev_from, *prev_to, *prev_len) == arc_ccw => {
                *prev_len += length;
                *prev_to = *to;
            }
            _ => legs.push(leg),
        }
    }
    legs
}

/// True if the walk `from -> to` of the given length runs counter-clockwise.
fn arc_direction(from: Angle, to: Angle, length: f64) -> bool {
    (from.ccw_to(to) - length).abs() <= 1e-9
}

fn reverse_legs(legs: &[Leg]) -> Vec<Leg> {
    legs.iter()
        .rev()
        .map(|l| match *l {
            Leg::Arc { from, to, length } => Leg::Arc {
                from: to,
                to: from,
                length,
            },
            Leg::Chord {
                index,
                from,
                to,
                length,
            } => Leg::Chord {
                index,
                from: to,
                to: from,
                length,
            },
        })
        .collect()
}

/// Distance using a single shortcut: the better of the direct arc and the
/// two routes through the chord. Agrees with [`distance`] on a one-shortcut
/// configuration.
pub fn single_shortcut_distance(s: &Shortcut, p: Angle, q: Angle) -> f64 {
    let arc = p.arc_distance(q);
    let via_u = p.arc_distance(s.u()) + s.chord() + s.v().arc_distance(q);
    let via_v = p.arc_distance(s.v()) + s.chord() + s.u().arc_distance(q);
    arc.min(via_u).min(via_v)
}

/// Witness sanity checks, active in debug builds (and thus under `cargo
/// test`). These are the structural facts the optimality arguments lean on.
#[cfg(debug_assertions)]
fn check_witness(config: &Configuration, p: Angle, q: Angle, total: f64, witness: &PathWitness) {
    const EPS: f64 = 1e-9;
    let leg_sum: f64 = witness.legs.iter().map(Leg::length).sum();
    debug_assert!(
        (leg_sum - total).abs() <= 1e-9,
        "witness legs sum to {leg_sum}, expected {total}"
    );

    // Never worse than the circle.
    debug_assert!(total <= p.arc_distance(q) + 1e-12);

    // Walking around each used chord costs exactly twice its detour gain, so
    // the realized length is at least the arc distance minus those savings.
    let used = witness.shortcut_indices();
    let savings: f64 = used
        .iter()
        .map(|&k| 2.0 * config.shortcuts()[k].detour())
        .sum();
    debug_assert!(
        total >= p.arc_distance(q) - savings - EPS,
        "witness beats the detour lower bound"
    );

    // Endpoints of the path may not sit strictly inside the umbra of the
    // first/last chord used.
    if let Some(&first) = used.first() {
        let depth = umbra_depth(&config.shortcuts()[first], p);
        debug_assert!(
            depth <= EPS,
            "path starts inside the umbra of its first chord (depth {depth})"
        );
    }
    if let Some(&last) = used.last() {
        let depth = umbra_depth(&config.shortcuts()[last], q);
        debug_assert!(
            depth <= EPS,
            "path ends inside the umbra of its last chord (depth {depth})"
        );
    }

    // A chord is never used at all when either query point sits strictly
    // inside its deep umbra.
    for (k, s) in config.shortcuts().iter().enumerate() {
        let deep = s.deep_umbra();
        if deep.interior_depth(p) > EPS || deep.interior_depth(q) > EPS {
            debug_assert!(
                !used.contains(&k),
                "path uses a chord whose deep umbra contains a query point"
            );
        }
    }
}

/// Positive penetration depth of `p` into the (inner or outer) umbra of `s`.
#[cfg(debug_assertions)]
fn umbra_depth(s: &Shortcut, p: Angle) -> f64 {
    let (inner, outer) = s.umbra();
    inner.interior_depth(p).max(outer.interior_depth(p))
}
