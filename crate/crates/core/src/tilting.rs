//! Triangulations of `A_{p,q}` (tilting sheaves), flips (mutations), and the
//! lattice-path description of tilting bundles.
//!
//! A tilting bundle is a triangulation made of bridging arcs only. Its lifts
//! `(u, w)` to the strip form a bi-infinite lattice path in which every step
//! is either an `a`-step `(u,w) -> (u+1,w)` or a `b`-step `(u,w) -> (u,w+1)`,
//! and the path is invariant under the deck shift `(p, q)`. The `a`-step from
//! `u = i-1` to `u = i` happens at height `c_i`; the tuple `(c_1, ..., c_p)`
//! is the [`LambdaVertex`] of the bundle.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::intersect::pos_int;
use crate::lgroup::WeightType;
use crate::model::{is_arc, phi, CurveClass, SheafLabel};

/// A maximal set of pairwise compatible arcs, stored as sorted canonical classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    w: WeightType,
    arcs: Vec<CurveClass>,
}

fn canonical_set(arcs: &[CurveClass], w: WeightType) -> Vec<CurveClass> {
    let set: BTreeSet<_> = arcs.iter().map(|c| c.canonical(w)).collect();
    set.into_iter().collect()
}

fn first_conflict(arcs: &[CurveClass], w: WeightType) -> Option<String> {
    for c in arcs {
        if let Err(e) = c.validate() {
            return Some(e.to_string());
        }
        if !is_arc(c, w) {
            return Some(format!("{c} is not an arc"));
        }
    }
    for (k, a) in arcs.iter().enumerate() {
        for b in &arcs[k..] {
            if pos_int(a, b, w) != 0 || pos_int(b, a, w) != 0 {
                return Some(format!("{a} and {b} cross"));
            }
        }
    }
    None
}

/// True iff `arcs` are `p+q` distinct, pairwise (and self-) compatible arcs.
pub fn validate_tilting(arcs: &[CurveClass], w: WeightType) -> bool {
    let set = canonical_set(arcs, w);
    set.len() == arcs.len() && set.len() == w.rank() && first_conflict(&set, w).is_none()
}

impl Triangulation {
    pub fn new(w: WeightType, arcs: &[CurveClass]) -> Result<Self> {
        let set = canonical_set(arcs, w);
        if let Some(why) = first_conflict(&set, w) {
            return Err(Error::Precondition(format!("not a triangulation: {why}")));
        }
        if set.len() != arcs.len() {
            return Err(Error::Precondition("not a triangulation: repeated arc".into()));
        }
        if set.len() != w.rank() {
            return Err(Error::Precondition(format!(
                "not a triangulation: {} arcs, expected {}",
                set.len(),
                w.rank()
            )));
        }
        Ok(Triangulation { w, arcs: set })
    }

    pub fn weight(&self) -> WeightType {
        self.w
    }

    /// Sorted canonical arcs.
    pub fn arcs(&self) -> &[CurveClass] {
        &self.arcs
    }

    pub fn contains(&self, c: &CurveClass) -> bool {
        self.arcs.binary_search(&c.canonical(self.w)).is_ok()
    }

    pub fn is_bundle(&self) -> bool {
        self.arcs.iter().all(CurveClass::is_bridging)
    }

    pub fn sheaf_labels(&self) -> Vec<SheafLabel> {
        let mut out: Vec<_> = self
            .arcs
            .iter()
            .map(|c| phi(c, self.w).expect("arcs are valid curves"))
            .collect();
        out.sort();
        out
    }

    /// Flip at `arc`, returning the new triangulation and the arc that came in.
    pub fn flip(&self, arc: &CurveClass) -> Result<(Triangulation, CurveClass)> {
        let arc = arc.canonical(self.w);
        if !self.contains(&arc) {
            return Err(Error::Precondition(format!("{arc} is not in the triangulation")));
        }
        let rest: Vec<_> = self.arcs.iter().filter(|c| **c != arc).cloned().collect();
        let [x, y] = complements(&rest, self.w)?;
        let added = if x == arc {
            y
        } else if y == arc {
            x
        } else {
            return Err(Error::Invariant(format!("{arc} is not a complement of its own flip")));
        };
        let mut arcs = rest;
        arcs.push(added.clone());
        arcs.sort();
        Ok((Triangulation { w: self.w, arcs }, added))
    }

    pub fn flip_at(&self, index: usize) -> Result<(Triangulation, CurveClass)> {
        let arc = self
            .arcs
            .get(index)
            .ok_or_else(|| Error::Precondition(format!("arc index {index} out of range 0..{}", self.arcs.len())))?;
        self.flip(&arc.clone())
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.arcs.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Every arc class that could complete a set of arcs, for a set whose
/// canonical bridging members have lower endpoints in `[lo, hi]`.
///
/// A bridging arc compatible with `B(u0, w0)` has its lower endpoint within
/// `q` of `w0`, so widening by `q` on each side loses nothing.
fn candidate_arcs(members: &[CurveClass], w: WeightType) -> Vec<CurveClass> {
    let (p, q) = (w.p(), w.q());
    let ws: Vec<i64> = members
        .iter()
        .filter_map(|c| match c.canonical(w) {
            CurveClass::Bridging { w, .. } => Some(w),
            _ => None,
        })
        .collect();
    let (lo, hi) = match (ws.iter().min(), ws.iter().max()) {
        (Some(lo), Some(hi)) => (lo - q, hi + q),
        _ => (-q, q),
    };
    let mut out = Vec::new();
    for u in 0..p {
        for lw in lo..=hi {
            out.push(CurveClass::bridging(u, lw));
        }
    }
    for s in 0..p {
        for len in 2..=p {
            out.push(CurveClass::peri_upper(s, s + len));
        }
    }
    for s in 0..q {
        for len in 2..=q {
            out.push(CurveClass::peri_lower(s, s + len));
        }
    }
    out
}

fn compatible_with_all(c: &CurveClass, set: &[CurveClass], w: WeightType) -> bool {
    set.iter().all(|a| pos_int(a, c, w) == 0 && pos_int(c, a, w) == 0)
}

/// The two arcs completing an almost complete set of `p+q-1` compatible arcs.
pub fn complements(almost: &[CurveClass], w: WeightType) -> Result<[CurveClass; 2]> {
    let set = canonical_set(almost, w);
    if set.len() != almost.len() || set.len() + 1 != w.rank() {
        return Err(Error::Precondition(format!(
            "expected {} distinct arcs, got {}",
            w.rank() - 1,
            almost.len()
        )));
    }
    if let Some(why) = first_conflict(&set, w) {
        return Err(Error::Precondition(format!("not almost complete: {why}")));
    }
    let found: Vec<_> = candidate_arcs(&set, w)
        .into_iter()
        .filter(|c| set.binary_search(c).is_err() && compatible_with_all(c, &set, w))
        .collect();
    match <[CurveClass; 2]>::try_from(found) {
        Ok(pair) => Ok(pair),
        Err(found) => Err(Error::Invariant(format!(
            "found {} complements instead of 2: {:?}",
            found.len(),
            found.iter().map(|c| c.to_string()).collect::<Vec<_>>()
        ))),
    }
}

/// Mutation computed from `Ext^1` alone: the unique other indecomposable
/// `Y` with `T / X + Y` tilting, searched among the same candidates as
/// [`complements`] but tested with sheaf labels only.
pub fn mutate_labels(t: &Triangulation, arc: &CurveClass) -> Result<SheafLabel> {
    use crate::homext::dim_ext1;
    let w = t.weight();
    let arc = arc.canonical(w);
    let gone = phi(&arc, w)?;
    let rest: Vec<SheafLabel> = t.sheaf_labels().into_iter().filter(|s| *s != gone).collect();
    let mut found = Vec::new();
    for c in candidate_arcs(t.arcs(), w) {
        let y = phi(&c, w)?;
        if y == gone || rest.contains(&y) || dim_ext1(&y, &y, w)? != 0 {
            continue;
        }
        let mut rigid = true;
        for x in &rest {
            if dim_ext1(x, &y, w)? != 0 || dim_ext1(&y, x, w)? != 0 {
                rigid = false;
                break;
            }
        }
        if rigid {
            found.push(y);
        }
    }
    match found.as_slice() {
        [y] => Ok(y.clone()),
        _ => Err(Error::Invariant(format!(
            "expected one other complement of {gone}, found {}",
            found.len()
        ))),
    }
}

/// `(c_1, ..., c_p)` with `c_1 <= ... <= c_p <= c_1 + q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaVertex(Vec<i64>);

impl LambdaVertex {
    pub fn new(c: Vec<i64>, w: WeightType) -> Result<Self> {
        let bad = |reason: String| Error::InvalidVertex { c: c.clone(), reason };
        if c.len() != w.p() as usize {
            return Err(bad(format!("expected {} coordinates", w.p())));
        }
        if let Some(k) = (1..c.len()).find(|&k| c[k - 1] > c[k]) {
            return Err(bad(format!("c{} > c{}", k, k + 1)));
        }
        if c[c.len() - 1] > c[0] + w.q() {
            return Err(bad(format!("c_p > c_1 + {}", w.q())));
        }
        Ok(LambdaVertex(c))
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// `c_i` for any integer `i`, extended by `c_{i+p} = c_i + q`.
    pub fn c(&self, i: i64, w: WeightType) -> i64 {
        let p = w.p();
        let k = (i - 1).div_euclid(p);
        self.0[(i - 1 - k * p) as usize] + k * w.q()
    }

    /// Number of `i` in `1..=p` with `c_i = c_{i+1}`, cyclically.
    pub fn cyclic_repeats(&self, w: WeightType) -> usize {
        (1..=w.p()).filter(|&i| self.c(i, w) == self.c(i + 1, w)).count()
    }

    pub fn l1_distance(&self, other: &LambdaVertex) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a - b).abs()).sum()
    }
}

impl fmt::Display for LambdaVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Lift of a bridging arc to the strip.
pub type Lift = (i64, i64);

/// A tilting bundle as a cyclic list of lifts ("slots").
///
/// Consecutive slots differ by an `a`- or `b`-step, and so do the last slot
/// and the deck shift of the first. Flips replace a slot in place, so slot
/// numbers stay attached to positions along the path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TiltingBundle {
    w: WeightType,
    slots: Vec<Lift>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    A,
    B,
}

fn step(from: Lift, to: Lift) -> Option<Step> {
    match (to.0 - from.0, to.1 - from.1) {
        (1, 0) => Some(Step::A),
        (0, 1) => Some(Step::B),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

impl TiltingBundle {
    fn from_slots(w: WeightType, slots: Vec<Lift>) -> Result<Self> {
        let t = TiltingBundle { w, slots };
        if t.slots.len() != w.rank() {
            return Err(Error::Precondition(format!(
                "a tilting bundle has {} summands, got {}",
                w.rank(),
                t.slots.len()
            )));
        }
        for k in 0..t.slots.len() {
            let (prev, here) = (t.neighbour(k, -1), t.slots[k]);
            if step(prev, here).is_none() {
                return Err(Error::Precondition(format!(
                    "lifts {prev:?} and {here:?} are not adjacent on a lattice path"
                )));
            }
        }
        Ok(t)
    }

    pub fn weight(&self) -> WeightType {
        self.w
    }

    pub fn slots(&self) -> &[Lift] {
        &self.slots
    }

    /// Slot `k + delta` along the bi-infinite path (`delta` is -1 or +1).
    fn neighbour(&self, k: usize, delta: i64) -> Lift {
        let n = self.slots.len() as i64;
        let j = k as i64 + delta;
        let shift = j.div_euclid(n);
        let (u, lw) = self.slots[j.rem_euclid(n) as usize];
        (u + shift * self.w.p(), lw + shift * self.w.q())
    }

    fn steps_around(&self, k: usize) -> (Step, Step) {
        let here = self.slots[k];
        let into = step(self.neighbour(k, -1), here).expect("path invariant");
        let out = step(here, self.neighbour(k, 1)).expect("path invariant");
        (into, out)
    }

    pub fn arcs(&self) -> Vec<CurveClass> {
        self.slots.iter().map(|&(u, lw)| CurveClass::bridging(u, lw)).collect()
    }

    pub fn triangulation(&self) -> Triangulation {
        let arcs = canonical_set(&self.arcs(), self.w);
        Triangulation { w: self.w, arcs }
    }

    /// Rotate and shift so the path starts at `(0, c_1)`.
    pub fn normal_form(&self) -> TiltingBundle {
        let p = self.w.p();
        let n = self.slots.len();
        let start = (0..n)
            .find(|&k| self.slots[k].0.rem_euclid(p) == 0 && self.steps_around(k).1 == Step::A)
            .expect("a path with p a-steps has one leaving u = 0 mod p");
        let k = self.slots[start].0.div_euclid(p);
        let slots = (0..n)
            .map(|j| {
                let (u, lw) = self.slots[(start + j) % n];
                let wrap = ((start + j) >= n) as i64;
                (u + (wrap - k) * p, lw + (wrap - k) * self.w.q())
            })
            .collect();
        TiltingBundle { w: self.w, slots }
    }

    /// The same bundle with slots rotated and shifted so that slot 1 is `start`.
    pub fn starting_at(&self, start: Lift) -> Result<TiltingBundle> {
        let (p, q) = (self.w.p(), self.w.q());
        let n = self.slots.len();
        let k = (0..n)
            .find(|&k| {
                let (u, lw) = self.slots[k];
                (start.0 - u).rem_euclid(p) == 0 && (start.0 - u) / p * q == start.1 - lw
            })
            .ok_or_else(|| Error::Precondition(format!("{start:?} is not a lift of a summand")))?;
        let m = (start.0 - self.slots[k].0) / p;
        let slots = (0..n)
            .map(|j| {
                let (u, lw) = self.slots[(k + j) % n];
                let wrap = ((k + j) >= n) as i64;
                (u + (wrap + m) * p, lw + (wrap + m) * q)
            })
            .collect();
        Ok(TiltingBundle { w: self.w, slots })
    }

    pub fn vertex(&self) -> LambdaVertex {
        let nf = self.normal_form();
        let mut c = Vec::with_capacity(self.w.p() as usize);
        for k in 0..nf.slots.len() {
            if nf.steps_around(k).1 == Step::A {
                c.push(nf.slots[k].1);
            }
        }
        LambdaVertex(c)
    }

    pub fn from_triangulation(t: &Triangulation) -> Result<Self> {
        if !t.is_bundle() {
            return Err(Error::Precondition("triangulation contains non-bridging arcs".into()));
        }
        let mut lifts: Vec<Lift> = t
            .arcs()
            .iter()
            .map(|c| match c {
                CurveClass::Bridging { u, w } => (*u, *w),
                _ => unreachable!(),
            })
            .collect();
        lifts.sort();
        Ok(TiltingBundle::from_slots(t.weight(), lifts)?.normal_form())
    }

    /// The flip at 1-based slot `i`. `Ok(Some)` when the result is again a
    /// bundle, `Ok(None)` when the new arc is peripheral.
    pub fn flip_slot(&self, i: usize) -> Result<Option<TiltingBundle>> {
        let k = self.slot_index(i)?;
        let (into, out) = self.steps_around(k);
        if into == out {
            return Ok(None);
        }
        let (prev, next, here) = (self.neighbour(k, -1), self.neighbour(k, 1), self.slots[k]);
        let mut slots = self.slots.clone();
        slots[k] = (prev.0 + next.0 - here.0, prev.1 + next.1 - here.1);
        Ok(Some(TiltingBundle { w: self.w, slots }))
    }

    /// The arc a flip at slot `i` brings in, bridging or not.
    pub fn flip_result(&self, i: usize) -> Result<CurveClass> {
        let k = self.slot_index(i)?;
        let (prev, next, here) = (self.neighbour(k, -1), self.neighbour(k, 1), self.slots[k]);
        let c = match self.steps_around(k) {
            (Step::A, Step::A) => CurveClass::peri_upper(prev.0, next.0),
            (Step::B, Step::B) => CurveClass::peri_lower(prev.1, next.1),
            _ => CurveClass::bridging(prev.0 + next.0 - here.0, prev.1 + next.1 - here.1),
        };
        Ok(c.canonical(self.w))
    }

    fn slot_index(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.slots.len() {
            return Err(Error::Precondition(format!(
                "slot {i} out of range 1..={}",
                self.slots.len()
            )));
        }
        Ok(i - 1)
    }

    /// Bit `i` is set iff the flip at slot `i` gives a bundle, read off from the path.
    pub fn iota(&self) -> Vec<bool> {
        (0..self.slots.len())
            .map(|k| {
                let (a, b) = self.steps_around(k);
                a != b
            })
            .collect()
    }

    /// The same bits from the vertex alone: a slot flips to a bundle iff it
    /// is an endpoint of exactly one `a`-step.
    pub fn iota_from_vertex(&self) -> Vec<bool> {
        let v = self.vertex();
        let (p, q) = (self.w.p(), self.w.q());
        self.slots
            .iter()
            .map(|&(u, lw)| {
                let mut hits = 0;
                for i in 1..=p {
                    let ci = v.c(i, self.w);
                    if (lw - ci).rem_euclid(q) != 0 {
                        continue;
                    }
                    let k = (lw - ci) / q;
                    if u == i - 1 + k * p || u == i + k * p {
                        hits += 1;
                    }
                }
                hits == 1
            })
            .collect()
    }

    /// Bits computed by actually flipping the triangulation.
    pub fn iota_by_flips(&self) -> Result<Vec<bool>> {
        let t = self.triangulation();
        self.arcs().iter().map(|c| Ok(t.flip(c)?.1.is_bridging())).collect()
    }

    /// Number of neighbouring tilting bundles.
    pub fn n(&self) -> usize {
        self.iota().iter().filter(|b| **b).count()
    }

    pub fn is_fan(&self) -> bool {
        fan_parameters(&self.vertex(), self.w).is_some()
    }
}

/// The tilting bundle of a vertex, in normal form.
pub fn vertex_to_tilting(v: &LambdaVertex, w: WeightType) -> Result<TiltingBundle> {
    let v = LambdaVertex::new(v.0.clone(), w)?;
    let p = w.p();
    let mut slots = vec![(0, v.c(1, w))];
    for i in 2..=p {
        for lw in v.c(i - 1, w)..=v.c(i, w) {
            slots.push((i - 1, lw));
        }
    }
    for lw in v.c(p, w)..v.c(p + 1, w) {
        slots.push((p, lw));
    }
    TiltingBundle::from_slots(w, slots)
}

pub fn tilting_to_vertex(t: &TiltingBundle) -> LambdaVertex {
    t.vertex()
}

/// `mu_i^+` (`c_i += 1`) or `mu_i^-` (`c_i -= 1`) on the tilting bundle.
pub fn lambda_step(t: &TiltingBundle, i: usize, dir: Direction) -> Result<TiltingBundle> {
    let w = t.weight();
    let v = t.vertex();
    let p = w.p() as usize;
    if i == 0 || i > p {
        return Err(Error::Precondition(format!("index {i} out of range 1..={p}")));
    }
    let mut c = v.coords().to_vec();
    c[i - 1] += match dir {
        Direction::Up => 1,
        Direction::Down => -1,
    };
    let target = LambdaVertex::new(c, w)?;
    let nf = t.normal_form();
    let ci = v.c(i as i64, w);
    let i = i as i64;
    let (gone, came) = match dir {
        Direction::Up => ((i, ci), (i - 1, ci + 1)),
        Direction::Down => ((i - 1, ci), (i, ci - 1)),
    };
    let slot = nf
        .slots
        .iter()
        .position(|&s| CurveClass::bridging(s.0, s.1).same_class(&CurveClass::bridging(gone.0, gone.1), w))
        .ok_or_else(|| Error::Invariant(format!("lift {gone:?} missing from {}", nf.triangulation())))?;
    let flipped = nf
        .flip_slot(slot + 1)?
        .ok_or_else(|| Error::Invariant(format!("slot {} of {v} does not flip to a bundle", slot + 1)))?;
    let out = vertex_to_tilting(&target, w)?;
    if flipped.triangulation() != out.triangulation()
        || !out.triangulation().contains(&CurveClass::bridging(came.0, came.1))
    {
        return Err(Error::Invariant(format!("mu_{i} on {v} does not reach {target}")));
    }
    Ok(out)
}

/// `(c_1 + min(i-1, q-1))_i`, the vertex of the fan `T^0_b` with `b = c_1`.
fn fan_base(b: i64, w: WeightType) -> Vec<i64> {
    (0..w.p()).map(|k| b + k.min(w.q() - 1)).collect()
}

fn rho1_coords(c: &[i64], q: i64) -> Vec<i64> {
    let p = c.len();
    let mut out = Vec::with_capacity(p);
    out.push(c[p - 1] - q);
    out.extend_from_slice(&c[..p - 1]);
    out
}

/// Vertex of the fan bundle `T^a_b`.
pub fn fan_vertex(a: i64, b: i64, w: WeightType) -> LambdaVertex {
    let mut c = fan_base(b, w);
    for _ in 0..a.rem_euclid(w.p()) {
        c = rho1_coords(&c, w.q());
    }
    let shift = a.div_euclid(w.p()) * w.q();
    LambdaVertex(c.into_iter().map(|x| x - shift).collect())
}

/// The fan `T^a_b`, with slots starting at the lift `(a, b)`.
pub fn fan_tilting(a: i64, b: i64, w: WeightType) -> Result<TiltingBundle> {
    vertex_to_tilting(&fan_vertex(a, b, w), w)?.starting_at((a, b))
}

/// `(a, b)` with `a` in `[0, p)` if `v` is the vertex of a fan.
pub fn fan_parameters(v: &LambdaVertex, w: WeightType) -> Option<(i64, i64)> {
    (0..w.p())
        .map(|a| (a, v.coords()[a as usize]))
        .find(|&(a, b)| fan_vertex(a, b, w) == *v)
}

/// A sequence of bundle flips ending at a fan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanReduction {
    /// 1-based slots of the normal form current at each step.
    pub moves: Vec<usize>,
    pub a: i64,
    pub b: i64,
}

/// Walk to `T^0_{c_1}` by raising `c_p, ..., c_2` and then lowering
/// `c_2, ..., c_p` towards `c_1 + min(i-1, q-1)`; `c_1` never moves, so the
/// normal form keeps its starting point throughout.
pub fn reduce_to_fan(t: &TiltingBundle) -> Result<FanReduction> {
    let w = t.weight();
    let v = t.vertex();
    if let Some((a, b)) = fan_parameters(&v, w) {
        return Ok(FanReduction { moves: vec![], a, b });
    }
    let c1 = v.coords()[0];
    let target = fan_base(c1, w);
    let p = w.p() as usize;
    let mut cur = t.normal_form();
    let mut moves = Vec::new();
    let mut go = |cur: &mut TiltingBundle, i: usize, dir: Direction| -> Result<()> {
        let next = lambda_step(cur, i, dir)?;
        let slot = cur
            .slots
            .iter()
            .position(|s| !next.slots.contains(s))
            .ok_or_else(|| Error::Invariant("lambda step changed nothing".into()))?;
        moves.push(slot + 1);
        *cur = next;
        Ok(())
    };
    for i in (2..=p).rev() {
        while cur.vertex().coords()[i - 1] < target[i - 1] {
            go(&mut cur, i, Direction::Up)?;
        }
    }
    for i in 2..=p {
        while cur.vertex().coords()[i - 1] > target[i - 1] {
            go(&mut cur, i, Direction::Down)?;
        }
    }
    if cur.vertex().coords() != target.as_slice() {
        return Err(Error::Invariant(format!(
            "reduction of {v} stopped at {}",
            cur.vertex()
        )));
    }
    Ok(FanReduction { moves, a: 0, b: c1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wt(p: i64, q: i64) -> WeightType {
        WeightType::new(p, q).unwrap()
    }

    fn b(u: i64, w: i64) -> CurveClass {
        CurveClass::bridging(u, w)
    }

    fn vx(c: &[i64], w: WeightType) -> LambdaVertex {
        LambdaVertex::new(c.to_vec(), w).unwrap()
    }

    fn vertices(w: WeightType, lo: i64, hi: i64) -> Vec<LambdaVertex> {
        crate::graphs::lambda_vertices(w, lo, hi)
    }

    #[test]
    fn validate_examples() {
        let w = wt(1, 1);
        assert!(validate_tilting(&[b(0, 0), b(1, 0)], w));
        assert!(validate_tilting(&[b(0, 0), b(0, 1)], w));
        assert!(!validate_tilting(&[b(0, 0), b(0, 2)], w));
        assert!(!validate_tilting(&[b(0, 0)], w));
        assert!(!validate_tilting(&[b(0, 0), b(0, 0)], w));
    }

    #[test]
    fn complements_examples() {
        let w = wt(1, 1);
        let got = complements(&[b(1, 0)], w).unwrap();
        let mut expect = [b(0, 0), b(1, -1).canonical(w)];
        expect.sort();
        assert_eq!(got, expect);

        let w = wt(1, 2);
        let t = vertex_to_tilting(&vx(&[0], w), w).unwrap().triangulation();
        for c in t.arcs() {
            let rest: Vec<_> = t.arcs().iter().filter(|a| *a != c).cloned().collect();
            let pair = complements(&rest, w).unwrap();
            assert!(pair.contains(c));
        }
        assert!(matches!(
            complements(&[b(0, 0), b(0, 3)], w),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(complements(&[b(0, 0)], w), Err(Error::Precondition(_))));
    }

    #[test]
    fn flip_examples() {
        let w = wt(1, 1);
        let t0 = Triangulation::new(w, &[b(0, 0), b(1, 0)]).unwrap();
        let (t1, added) = t0.flip(&b(0, 0)).unwrap();
        assert_eq!(added, b(1, -1).canonical(w));
        assert_eq!(t1.flip(&added).unwrap().0, t0);
        assert!(t0.flip(&b(0, 5)).is_err());
    }

    #[test]
    fn vertex_examples() {
        let w = wt(1, 2);
        let t = vertex_to_tilting(&vx(&[0], w), w).unwrap();
        assert_eq!(t.slots(), &[(0, 0), (1, 0), (1, 1)]);
        assert!(validate_tilting(&t.arcs(), w));
        let labels = t.triangulation().sheaf_labels();
        let mut expect: Vec<_> = [w.zero(), w.x2(), w.c()].into_iter().map(SheafLabel::Line).collect();
        expect.sort();
        assert_eq!(labels, expect);

        let w = wt(2, 2);
        let t = vertex_to_tilting(&vx(&[0, 0], w), w).unwrap();
        assert_eq!(t.slots(), &[(0, 0), (1, 0), (2, 0), (2, 1)]);
        assert!(LambdaVertex::new(vec![0, 3], w).is_err());
        assert!(LambdaVertex::new(vec![1, 0], w).is_err());
    }

    #[test]
    fn vertex_round_trip() {
        for (p, q) in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2), (3, 4)] {
            let w = wt(p, q);
            for v in vertices(w, -1, 1) {
                let t = vertex_to_tilting(&v, w).unwrap();
                assert!(validate_tilting(&t.arcs(), w), "{v}");
                assert_eq!(tilting_to_vertex(&t), v);
                let back = TiltingBundle::from_triangulation(&t.triangulation()).unwrap();
                assert_eq!(back, t);
            }
        }
    }

    #[test]
    fn lambda_step_examples() {
        let w = wt(1, 2);
        let t = vertex_to_tilting(&vx(&[0], w), w).unwrap();
        assert_eq!(lambda_step(&t, 1, Direction::Up).unwrap().vertex(), vx(&[1], w));
        let w = wt(2, 3);
        let t = vertex_to_tilting(&vx(&[0, 1], w), w).unwrap();
        assert_eq!(lambda_step(&t, 2, Direction::Down).unwrap().vertex(), vx(&[0, 0], w));
        let w = wt(2, 2);
        let t = vertex_to_tilting(&vx(&[0, 0], w), w).unwrap();
        assert!(matches!(
            lambda_step(&t, 1, Direction::Up),
            Err(Error::InvalidVertex { .. })
        ));
    }

    #[test]
    fn iota_three_ways() {
        for (p, q) in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 2), (3, 4)] {
            let w = wt(p, q);
            for v in vertices(w, 0, 0) {
                let t = vertex_to_tilting(&v, w).unwrap();
                let iota = t.iota();
                assert_eq!(iota, t.iota_from_vertex(), "{v}");
                assert_eq!(iota, t.iota_by_flips().unwrap(), "{v}");
                assert_eq!(t.n(), 2 * (p as usize - v.cyclic_repeats(w)), "{v}");
                for (k, bit) in iota.iter().enumerate() {
                    let direct = t.flip_result(k + 1).unwrap();
                    let (_, via) = t.triangulation().flip(&b(t.slots()[k].0, t.slots()[k].1)).unwrap();
                    assert_eq!(direct, via);
                    assert_eq!(*bit, direct.is_bridging());
                }
            }
        }
    }

    #[test]
    fn iota_examples() {
        let w = wt(1, 2);
        let t = vertex_to_tilting(&vx(&[0], w), w).unwrap();
        assert_eq!(t.iota(), vec![true, true, false]);
        // the wrap-around case: c_p = c_1 + q
        let w = wt(2, 2);
        let t = vertex_to_tilting(&vx(&[0, 2], w), w).unwrap();
        assert_eq!(t.n(), 2);
    }

    #[test]
    fn fans() {
        for (p, q) in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 2), (3, 5), (4, 2)] {
            let w = wt(p, q);
            for a in -3..3 {
                for bb in -2..2 {
                    let t = fan_tilting(a, bb, w).unwrap();
                    let ones = 2 * p.min(q) as usize;
                    if p <= q {
                        let mut expect = vec![true; ones];
                        expect.resize(w.rank(), false);
                        assert_eq!(t.iota(), expect, "T^{a}_{bb} in {w}");
                    } else {
                        assert_eq!(t.n(), ones);
                    }
                    let (a2, b2) = fan_parameters(&t.vertex(), w).unwrap();
                    assert_eq!(fan_vertex(a2, b2, w), t.vertex());
                    if p <= q {
                        let mut stair = vec![(a, bb)];
                        for k in 1..=p {
                            stair.push((a + k, bb + k - 1));
                            if k < p {
                                stair.push((a + k, bb + k));
                            }
                        }
                        for lw in (bb + p)..(bb + q) {
                            stair.push((a + p, lw));
                        }
                        let stair: Vec<_> = stair.into_iter().map(|(u, lw)| b(u, lw)).collect();
                        assert_eq!(t.triangulation(), Triangulation::new(w, &stair).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn fan_translation() {
        for (p, q) in [(1, 1), (1, 3), (2, 2), (2, 3), (3, 4)] {
            let w = wt(p, q);
            for a in -2..2 {
                let fan = fan_tilting(a, 0, w).unwrap();
                for (first, shift) in [(1usize, -1i64), (2, 1)] {
                    let mut t = fan.clone();
                    for i in (first..=2 * p as usize).step_by(2) {
                        t = t
                            .flip_slot(i)
                            .unwrap()
                            .unwrap_or_else(|| panic!("{w} a={a} slot {i} of {:?}", fan.slots()));
                    }
                    assert_eq!(
                        t.triangulation(),
                        fan_tilting(a, shift, w).unwrap().triangulation(),
                        "{w} a={a} first={first}"
                    );
                }
            }
        }
    }

    #[test]
    fn reduce_examples() {
        let w = wt(2, 3);
        let fan = fan_tilting(0, 0, w).unwrap();
        assert!(reduce_to_fan(&fan).unwrap().moves.is_empty());
        for (p, q) in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 4)] {
            let w = wt(p, q);
            for v in vertices(w, -1, 1) {
                let t = vertex_to_tilting(&v, w).unwrap();
                let r = reduce_to_fan(&t).unwrap();
                let mut cur = t.normal_form();
                for &m in &r.moves {
                    cur = cur
                        .flip_slot(m)
                        .unwrap()
                        .expect("each move is a bundle flip")
                        .normal_form();
                    assert!(validate_tilting(&cur.arcs(), w));
                }
                assert_eq!(cur.triangulation(), fan_tilting(r.a, r.b, w).unwrap().triangulation());
            }
        }
    }

    #[test]
    fn mutation_by_labels_matches_flip() {
        let w = wt(2, 3);
        let t = vertex_to_tilting(&vx(&[0, 1], w), w).unwrap().triangulation();
        for c in t.arcs() {
            let (_, added) = t.flip(c).unwrap();
            assert_eq!(mutate_labels(&t, c).unwrap(), phi(&added, w).unwrap());
        }
    }
}
