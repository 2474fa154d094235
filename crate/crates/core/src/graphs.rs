//! Finite windows of the exchange graph of triangulations and of the graph
//! `Lambda_{(p,q)}`, plus checks of the local relations between flips.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lgroup::WeightType;
use crate::model::CurveClass;
use crate::tilting::{vertex_to_tilting, LambdaVertex, TiltingBundle, Triangulation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Node {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<usize>,
}

/// Undirected simple graph with sorted nodes and sorted edges `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    pub window: String,
    pub nodes: Vec<Node>,
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    pub fn degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e[0] == i || e[1] == i).count()
    }

    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .filter_map(|e| match (e[0] == i, e[1] == i) {
                (true, _) => Some(e[1]),
                (_, true) => Some(e[0]),
                _ => None,
            })
            .collect();
        out.sort();
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            for j in self.neighbours(i) {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// True iff the graph is a simple path (including a single vertex).
    pub fn is_path(&self) -> bool {
        let n = self.nodes.len();
        n > 0 && self.edges.len() == n - 1 && self.is_connected() && (0..n).all(|i| self.degree(i) <= 2)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "graph \"{name}\" {{").unwrap();
        writeln!(out, "  label=\"{}\";", self.window).unwrap();
        for (i, n) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{i} [label=\"{}\"];", n.label.replace('"', "\\\"")).unwrap();
        }
        for [a, b] in &self.edges {
            writeln!(out, "  n{a} -- n{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn build<K: Ord + Clone>(
    window: String,
    keys: &BTreeMap<K, Option<usize>>,
    label: impl Fn(&K) -> String,
    edges: &BTreeSet<(K, K)>,
) -> Graph {
    let index: BTreeMap<&K, usize> = keys.keys().enumerate().map(|(i, k)| (k, i)).collect();
    let nodes = keys
        .iter()
        .map(|(k, depth)| Node {
            label: label(k),
            depth: *depth,
        })
        .collect();
    let mut es: Vec<[usize; 2]> = edges
        .iter()
        .map(|(a, b)| {
            let (i, j) = (index[a], index[b]);
            [i.min(j), i.max(j)]
        })
        .collect();
    es.sort();
    es.dedup();
    Graph {
        window,
        nodes,
        edges: es,
    }
}

fn triangulation_label(t: &Triangulation) -> String {
    let labels: Vec<_> = t.sheaf_labels().iter().map(|s| s.to_string()).collect();
    labels.join(" + ")
}

/// A window of the exchange graph together with the triangulations at its nodes.
#[derive(Debug, Clone)]
pub struct ExchangeGraph {
    pub graph: Graph,
    pub triangulations: Vec<Triangulation>,
}

/// Breadth-first search over flips, `depth` flips away from `seed`.
pub fn exchange_graph(seed: &Triangulation, depth: usize) -> Result<ExchangeGraph> {
    let mut dist: BTreeMap<Triangulation, Option<usize>> = BTreeMap::from([(seed.clone(), Some(0))]);
    let mut edges = BTreeSet::new();
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(t) = queue.pop_front() {
        let d = dist[&t].expect("every visited node has a depth");
        if d == depth {
            continue;
        }
        for arc in t.arcs() {
            let (next, _) = t.flip(arc)?;
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), Some(d + 1));
                queue.push_back(next.clone());
            }
            let e = if t < next { (t.clone(), next) } else { (next, t.clone()) };
            edges.insert(e);
        }
    }
    let graph = build(format!("depth<={depth}"), &dist, triangulation_label, &edges);
    Ok(ExchangeGraph {
        graph,
        triangulations: dist.into_keys().collect(),
    })
}

/// All vertices of `Lambda^0_{(p,q)}` with `c_1` in `[lo, hi]`, sorted.
pub fn lambda_vertices(w: WeightType, lo: i64, hi: i64) -> Vec<LambdaVertex> {
    let mut out: Vec<Vec<i64>> = (lo..=hi).map(|c1| vec![c1]).collect();
    for _ in 1..w.p() {
        out = out
            .into_iter()
            .flat_map(|c| {
                let last = *c.last().expect("nonempty");
                (last..=c[0] + w.q()).map(move |x| {
                    let mut d = c.clone();
                    d.push(x);
                    d
                })
            })
            .collect();
    }
    let mut vs: Vec<_> = out
        .into_iter()
        .map(|c| LambdaVertex::new(c, w).expect("enumeration stays in Lambda^0"))
        .collect();
    vs.sort();
    vs
}

fn window_check(lo: i64, hi: i64) -> Result<()> {
    if lo > hi {
        Err(Error::InvalidWindow { lo, hi })
    } else {
        Ok(())
    }
}

pub fn lambda_graph(w: WeightType, c1_lo: i64, c1_hi: i64) -> Result<Graph> {
    window_check(c1_lo, c1_hi)?;
    let vs = lambda_vertices(w, c1_lo, c1_hi);
    let keys: BTreeMap<_, _> = vs.iter().map(|v| (v.clone(), None)).collect();
    let mut edges = BTreeSet::new();
    for (k, a) in vs.iter().enumerate() {
        for b in &vs[k + 1..] {
            if a.l1_distance(b) == 1 {
                edges.insert((a.clone(), b.clone()));
            }
        }
    }
    Ok(build(
        format!("c1 in [{c1_lo},{c1_hi}]"),
        &keys,
        |v| v.to_string(),
        &edges,
    ))
}

/// Outcome of comparing the tilting-bundle flip graph with `Lambda_{(p,q)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaIsoReport {
    pub p: i64,
    pub q: i64,
    pub c1_lo: i64,
    pub c1_hi: i64,
    pub vertices: usize,
    pub lambda_edges: usize,
    pub flip_edges: usize,
    pub equal: bool,
    /// Edges present in only one of the two graphs.
    pub only_lambda: Vec<String>,
    pub only_flip: Vec<String>,
    /// Vertices whose number of bundle flips differs from `2(p - r)`.
    pub degree_mismatches: Vec<String>,
}

/// Build the bundle flip graph with generic flips and compare it, through
/// the vertex encoding, to `Lambda_{(p,q)}` on the window.
pub fn verify_lambda_iso(w: WeightType, c1_lo: i64, c1_hi: i64) -> Result<LambdaIsoReport> {
    window_check(c1_lo, c1_hi)?;
    let vs = lambda_vertices(w, c1_lo, c1_hi);
    let inside: BTreeSet<_> = vs.iter().cloned().collect();
    let mut flip_edges = BTreeSet::new();
    let mut degree_mismatches = Vec::new();
    for v in &vs {
        let t = vertex_to_tilting(v, w)?.triangulation();
        let mut bundle_flips = 0;
        for arc in t.arcs() {
            let (next, _) = t.flip(arc)?;
            if !next.is_bundle() {
                continue;
            }
            bundle_flips += 1;
            let u = TiltingBundle::from_triangulation(&next)?.vertex();
            if inside.contains(&u) {
                flip_edges.insert(if *v < u { (v.clone(), u) } else { (u, v.clone()) });
            }
        }
        let expect = 2 * (w.p() as usize - v.cyclic_repeats(w));
        if bundle_flips != expect {
            degree_mismatches.push(format!("{v}: {bundle_flips} flips, 2(p-r) = {expect}"));
        }
    }
    let mut lambda_edges = BTreeSet::new();
    for (k, a) in vs.iter().enumerate() {
        for b in &vs[k + 1..] {
            if a.l1_distance(b) == 1 {
                lambda_edges.insert((a.clone(), b.clone()));
            }
        }
    }
    let show = |e: &(LambdaVertex, LambdaVertex)| format!("{}--{}", e.0, e.1);
    let only_lambda: Vec<_> = lambda_edges.difference(&flip_edges).map(show).collect();
    let only_flip: Vec<_> = flip_edges.difference(&lambda_edges).map(show).collect();
    Ok(LambdaIsoReport {
        p: w.p(),
        q: w.q(),
        c1_lo,
        c1_hi,
        vertices: vs.len(),
        lambda_edges: lambda_edges.len(),
        flip_edges: flip_edges.len(),
        equal: only_lambda.is_empty() && only_flip.is_empty(),
        only_lambda,
        only_flip,
        degree_mismatches,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// The arcs lie in no common triangle and their flips commute.
    Square,
    /// The arcs are two sides of one triangle; alternating flips close up after five steps.
    Pentagon,
    /// The arcs are two sides of both triangles on either side of each, so
    /// they cut out an annulus with one marked point on each boundary.
    /// Alternating flips never close up; neither identity holds.
    Kronecker,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Point {
    Upper(i64),
    Lower(i64),
}

fn endpoints(c: &CurveClass) -> (Point, Point) {
    match c {
        CurveClass::Bridging { u, w } => (Point::Lower(*w), Point::Upper(*u)),
        CurveClass::PeriUpper { s, e } => (Point::Upper(*s), Point::Upper(*e)),
        CurveClass::PeriLower { s, e } => (Point::Lower(*s), Point::Lower(*e)),
        CurveClass::Loop { .. } => unreachable!("triangulations contain no loops"),
    }
}

/// The segment between two marked points of the strip, as a boundary piece
/// (`None`) or an arc class; `Err` if it is degenerate.
fn segment(a: Point, b: Point) -> std::result::Result<Option<CurveClass>, ()> {
    use Point::*;
    match (a.min(b), a.max(b)) {
        (Upper(s), Upper(e)) | (Lower(s), Lower(e)) if e - s == 1 => Ok(None),
        (Upper(s), Upper(e)) if e - s >= 2 => Ok(Some(CurveClass::peri_upper(s, e))),
        (Lower(s), Lower(e)) if e - s >= 2 => Ok(Some(CurveClass::peri_lower(s, e))),
        (Upper(u), Lower(w)) | (Lower(w), Upper(u)) => Ok(Some(CurveClass::bridging(u, w))),
        _ => Err(()),
    }
}

/// Number of triangles of `t` having both `alpha` and `beta` as sides.
///
/// Every cycle of three arcs of a triangulated strip bounds a triangle,
/// so it is enough to look for lifts of `beta` that share an endpoint with a
/// fixed lift of `alpha` and whose third side is in `t` or on the boundary.
/// Sharing an endpoint pins down the deck shift of `beta`.
fn shared_triangles(t: &Triangulation, alpha: &CurveClass, beta: &CurveClass) -> usize {
    let w = t.weight();
    let (a0, a1) = endpoints(alpha);
    let mut shifts = BTreeSet::new();
    let (b0, b1) = endpoints(beta);
    for x in [a0, a1] {
        for y in [b0, b1] {
            match (x, y) {
                (Point::Upper(i), Point::Upper(j)) if (i - j) % w.p() == 0 => shifts.insert((i - j) / w.p()),
                (Point::Lower(i), Point::Lower(j)) if (i - j) % w.q() == 0 => shifts.insert((i - j) / w.q()),
                _ => false,
            };
        }
    }
    let mut apexes = BTreeSet::new();
    for k in shifts {
        let (b0, b1) = endpoints(&beta.deck_shift(k, w));
        for (shared, y, z) in [(a0, a1, b1), (a0, a1, b0), (a1, a0, b1), (a1, a0, b0)] {
            let other_b = if z == b1 { b0 } else { b1 };
            if shared != other_b || z == y {
                continue;
            }
            let closes = match segment(y, z) {
                Ok(None) => true,
                Ok(Some(c)) => t.contains(&c),
                Err(()) => false,
            };
            if closes {
                apexes.insert(z);
            }
        }
    }
    apexes.len()
}

/// Flip the arc held in `slots[k]`, tracking the replacement in that slot.
fn mu(t: &Triangulation, slots: &mut [CurveClass; 2], k: usize) -> Result<Triangulation> {
    let (next, added) = t.flip(&slots[k])?;
    slots[k] = added;
    Ok(next)
}

fn mus(t: &Triangulation, i: &CurveClass, j: &CurveClass, order: &[usize]) -> Result<Triangulation> {
    let mut slots = [i.clone(), j.clone()];
    let mut cur = t.clone();
    for &k in order {
        cur = mu(&cur, &mut slots, k)?;
    }
    Ok(cur)
}

/// Classify the pair of arcs `i != j` (indices into the sorted arcs) and
/// check the flip identity that goes with the class.
pub fn check_relations(t: &Triangulation, i: usize, j: usize) -> Result<Relation> {
    let w = t.weight();
    if w.p() == 1 && w.q() == 1 {
        return Err(Error::Precondition("flip relations are not defined for (1,1)".into()));
    }
    let n = t.arcs().len();
    if i == j || i >= n || j >= n {
        return Err(Error::Precondition(format!(
            "need distinct indices below {n}, got {i} and {j}"
        )));
    }
    let (a, b) = (&t.arcs()[i], &t.arcs()[j]);
    let (first, second) = (0, 1);
    // mu_i mu_j mu_i applies mu_i first
    let iji = mus(t, a, b, &[first, second, first])?;
    let ij = mus(t, a, b, &[second, first])?;
    let ji = mus(t, a, b, &[first, second])?;
    let rel = match shared_triangles(t, a, b) {
        0 => Relation::Square,
        1 => Relation::Pentagon,
        _ => Relation::Kronecker,
    };
    let holds = match rel {
        Relation::Square => ij == ji,
        Relation::Pentagon => iji == ij,
        Relation::Kronecker => iji != ij && ij != ji,
    };
    if !holds {
        return Err(Error::Invariant(format!(
            "{rel:?} relation fails for {a} and {b} in {t}"
        )));
    }
    Ok(rel)
}
