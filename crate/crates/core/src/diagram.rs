//! Oriented link diagrams in planar-diagram (PD) notation.
//!
//! A crossing stores the four arcs meeting it in counterclockwise order,
//! starting from the incoming under-strand, so slot 0 is always incoming and
//! slot 2 outgoing. The over-strand occupies slots 1 and 3; `over_in` records
//! which of the two is incoming. The rotation system needed for faces is the
//! slot order itself, so no geometry is stored.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{KnotError, Result};

pub type CrossingId = usize;
pub type ArcId = usize;

/// Position of an arc end: crossing and slot `0..4`.
pub type Slot = (CrossingId, u8);

/// How the tuples of a PD string are to be read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PdConvention {
    /// A crossing is positive when the over-strand enters at slot 1.
    #[default]
    Standard,
    /// Tuples listed clockwise, as in the KnotInfo tables; each tuple is
    /// reflected to `[a,d,c,b]` before use.
    Knotinfo,
}

impl std::str::FromStr for PdConvention {
    type Err = KnotError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "standard" | "" => Ok(PdConvention::Standard),
            "knotinfo" => Ok(PdConvention::Knotinfo),
            other => Err(KnotError::Precondition(format!("unknown PD convention `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ParseOptions {
    pub convention: PdConvention,
    /// Components (in order of first appearance) whose inferred direction is
    /// to be reversed. Only components with no under-pass may be reversed.
    pub reverse_components: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub slots: [ArcId; 4],
    /// 1 or 3.
    pub over_in: u8,
}

impl Crossing {
    pub fn sign(&self) -> i8 {
        if self.over_in == 1 {
            1
        } else {
            -1
        }
    }

    pub fn over_out(&self) -> u8 {
        (self.over_in + 2) % 4
    }

    pub fn is_incoming(&self, slot: u8) -> bool {
        slot == 0 || slot == self.over_in
    }

    /// Corner `k` lies between slots `k` and `k+1`. It is mixed when exactly
    /// one of those slots carries an incoming strand.
    pub fn corner_is_mixed(&self, corner: u8) -> bool {
        self.is_incoming(corner % 4) != self.is_incoming((corner + 1) % 4)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    pub label: i64,
    pub tail: Slot,
    pub head: Slot,
    pub component: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    arcs: Vec<Arc>,
    /// Arcs of each crossing-bearing component, in traversal order.
    components: Vec<Vec<ArcId>>,
    /// Closed components that meet no crossing.
    free_loops: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub id: usize,
    /// `(crossing, corner)` incidences in boundary order.
    pub corners: Vec<(CrossingId, u8)>,
    /// Arcs along the boundary, `arcs[k]` leaving `corners[k]`.
    pub arcs: Vec<ArcId>,
    pub edge_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertCircleSet {
    /// Arc lists of the circles passing through crossings.
    pub circles: Vec<Vec<ArcId>>,
    /// Circles that meet no crossing.
    pub free_circles: usize,
    /// For every crossing, the pair of circles it joins.
    pub adjacency: Vec<(usize, usize)>,
    /// Circle index of every arc.
    #[serde(skip)]
    pub circle_of_arc: Vec<usize>,
}

impl SeifertCircleSet {
    pub fn count(&self) -> usize {
        self.circles.len() + self.free_circles
    }
}

/// Slot pairing applied when a crossing is removed from a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Removal {
    /// Orientation-respecting smoothing.
    Smooth,
    /// Both strands continue straight through (used when a clasp is pulled apart).
    Straight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramStats {
    pub c: usize,
    pub s: usize,
    pub b1: usize,
    pub faces: Option<usize>,
    pub reduced: bool,
}

impl LinkDiagram {
    /// 0-crossing diagram of the unknot.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// `n` disjoint crossingless circles.
    pub fn unlink(n: usize) -> Self {
        LinkDiagram { crossings: Vec::new(), arcs: Vec::new(), components: Vec::new(), free_loops: n }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn crossing(&self, x: CrossingId) -> Result<&Crossing> {
        self.crossings.get(x).ok_or(KnotError::UnknownCrossing(x))
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn component_count(&self) -> usize {
        self.components.len() + self.free_loops
    }

    pub fn component_arcs(&self) -> &[Vec<ArcId>] {
        &self.components
    }

    pub fn crossing_sign(&self, x: CrossingId) -> Result<i8> {
        Ok(self.crossing(x)?.sign())
    }

    pub fn is_positive(&self) -> bool {
        self.crossings.iter().all(|c| c.sign() == 1)
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign() as i64).sum()
    }

    /// Components of the strands passing over and under at `x`.
    pub fn strand_components(&self, x: CrossingId) -> Result<(usize, usize)> {
        let c = self.crossing(x)?;
        Ok((self.arcs[c.slots[0]].component, self.arcs[c.slots[c.over_in as usize]].component))
    }

    /// Arc entering `x` through the given slot, or leaving it.
    pub fn arc_at(&self, x: CrossingId, slot: u8) -> ArcId {
        self.crossings[x].slots[slot as usize]
    }

    fn other_end(&self, (x, s): Slot) -> Slot {
        let a = &self.arcs[self.crossings[x].slots[s as usize]];
        if a.tail == (x, s) {
            a.head
        } else {
            a.tail
        }
    }

    /// Connected pieces of the underlying 4-valent graph, as crossing sets.
    /// Free loops are not included.
    pub fn crossing_pieces(&self) -> Vec<Vec<CrossingId>> {
        let n = self.crossings.len();
        let mut seen = vec![false; n];
        let mut pieces = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            let mut piece = Vec::new();
            while let Some(x) = stack.pop() {
                piece.push(x);
                for s in 0..4u8 {
                    let (y, _) = self.other_end((x, s));
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            piece.sort_unstable();
            pieces.push(piece);
        }
        pieces
    }

    /// Number of connected pieces, each free loop counting as one.
    pub fn piece_count(&self) -> usize {
        self.crossing_pieces().len() + self.free_loops
    }

    pub fn is_split(&self) -> bool {
        self.piece_count() > 1
    }

    /// Splits the diagram into its connected pieces.
    pub fn split_pieces(&self) -> Vec<LinkDiagram> {
        let mut out = Vec::new();
        for piece in self.crossing_pieces() {
            let keep: BTreeMap<CrossingId, CrossingId> = piece.iter().enumerate().map(|(i, &x)| (x, i)).collect();
            let mut arc_ids: Vec<ArcId> = piece.iter().flat_map(|&x| self.crossings[x].slots).collect();
            arc_ids.sort_unstable();
            arc_ids.dedup();
            let arc_new: BTreeMap<ArcId, ArcId> = arc_ids.iter().enumerate().map(|(i, &a)| (a, i)).collect();
            let crossings: Vec<Crossing> = piece
                .iter()
                .map(|&x| {
                    let c = &self.crossings[x];
                    Crossing { slots: c.slots.map(|a| arc_new[&a]), over_in: c.over_in }
                })
                .collect();
            let arcs: Vec<RawArc> = arc_ids
                .iter()
                .map(|&a| {
                    let arc = &self.arcs[a];
                    RawArc { label: arc.label, tail: (keep[&arc.tail.0], arc.tail.1), head: (keep[&arc.head.0], arc.head.1) }
                })
                .collect();
            out.push(assemble(crossings, arcs, 0).expect("a piece of a valid diagram is valid"));
        }
        for _ in 0..self.free_loops {
            out.push(LinkDiagram::unknot());
        }
        out
    }

    /// Faces of the planar embedding. The empty unknot has two faces.
    pub fn faces(&self) -> Result<Vec<Face>> {
        if self.is_split() {
            return Err(KnotError::Precondition("faces are only defined for non-split diagrams".into()));
        }
        Ok(self.faces_unchecked())
    }

    fn faces_unchecked(&self) -> Vec<Face> {
        if self.crossings.is_empty() {
            return (0..2 * self.free_loops)
                .map(|id| Face { id, corners: Vec::new(), arcs: Vec::new(), edge_count: 0 })
                .collect();
        }
        let n = self.crossings.len();
        let mut used = vec![false; 4 * n];
        let mut faces = Vec::new();
        for start in 0..4 * n {
            if used[start] {
                continue;
            }
            let mut corners = Vec::new();
            let mut arcs = Vec::new();
            let mut h = start;
            loop {
                used[h] = true;
                let (x, s) = (h / 4, (h % 4) as u8);
                arcs.push(self.crossings[x].slots[s as usize]);
                let (y, t) = self.other_end((x, s));
                corners.push((y, t));
                h = 4 * y + ((t + 1) % 4) as usize;
                if h == start {
                    break;
                }
            }
            // rotate so that corners[k] precedes arcs[k]
            let last = corners.pop().expect("non-empty face");
            corners.insert(0, last);
            let edge_count = arcs.len();
            faces.push(Face { id: faces.len(), corners, arcs, edge_count });
        }
        faces
    }

    /// Face index of every `(crossing, corner)`.
    pub fn corner_faces(&self, faces: &[Face]) -> Vec<[usize; 4]> {
        let mut out = vec![[usize::MAX; 4]; self.crossings.len()];
        for f in faces {
            for &(x, k) in &f.corners {
                out[x][k as usize] = f.id;
            }
        }
        out
    }

    pub fn seifert_circles(&self) -> SeifertCircleSet {
        let next = |a: ArcId| -> ArcId {
            let (x, s) = self.arcs[a].head;
            let c = &self.crossings[x];
            let out = if s == 0 { c.over_out() } else { 2 };
            c.slots[out as usize]
        };
        let mut circle_of_arc = vec![usize::MAX; self.arcs.len()];
        let mut circles = Vec::new();
        for start in 0..self.arcs.len() {
            if circle_of_arc[start] != usize::MAX {
                continue;
            }
            let id = circles.len();
            let mut circle = Vec::new();
            let mut a = start;
            loop {
                circle_of_arc[a] = id;
                circle.push(a);
                a = next(a);
                if a == start {
                    break;
                }
            }
            circles.push(circle);
        }
        let adjacency = self
            .crossings
            .iter()
            .map(|c| (circle_of_arc[c.slots[0]], circle_of_arc[c.slots[c.over_in as usize]]))
            .collect();
        SeifertCircleSet { circles, free_circles: self.free_loops, adjacency, circle_of_arc }
    }

    /// `c(D) − s(D) + 1`, which is the first Betti number of the link for
    /// positive non-split diagrams.
    pub fn first_betti(&self) -> Result<usize> {
        if !self.is_positive() {
            return Err(KnotError::Precondition("first_betti needs a positive diagram".into()));
        }
        if self.is_split() {
            return Err(KnotError::Precondition("first_betti needs a non-split diagram".into()));
        }
        Ok(self.crossings.len() + 1 - self.seifert_circles().count())
    }

    /// Every orientation-respecting single smoothing leaves a non-split diagram.
    pub fn is_reduced(&self) -> bool {
        if self.is_split() {
            return false;
        }
        (0..self.crossings.len()).all(|x| !self.remove(&[(x, Removal::Smooth)]).is_split())
    }

    pub fn smooth(&self, x: CrossingId) -> Result<LinkDiagram> {
        self.crossing(x)?;
        Ok(self.remove(&[(x, Removal::Smooth)]))
    }

    /// Deletes the listed crossings, reconnecting their strands as requested.
    pub fn remove(&self, removals: &[(CrossingId, Removal)]) -> LinkDiagram {
        let mut how: Vec<Option<Removal>> = vec![None; self.crossings.len()];
        for &(x, r) in removals {
            how[x] = Some(r);
        }
        // outgoing slot that an incoming slot connects to at a removed crossing
        let through = |x: CrossingId, s: u8| -> u8 {
            let c = &self.crossings[x];
            match how[x].expect("removed") {
                Removal::Straight => (s + 2) % 4,
                Removal::Smooth => {
                    if s == 0 {
                        c.over_out()
                    } else {
                        2
                    }
                }
            }
        };
        let kept: Vec<CrossingId> = (0..self.crossings.len()).filter(|&x| how[x].is_none()).collect();
        let mut new_index = vec![usize::MAX; self.crossings.len()];
        for (i, &x) in kept.iter().enumerate() {
            new_index[x] = i;
        }
        let mut visited = vec![false; self.arcs.len()];
        let mut raw = Vec::new();
        for a in 0..self.arcs.len() {
            if visited[a] || how[self.arcs[a].tail.0].is_some() {
                continue;
            }
            let mut cur = a;
            loop {
                visited[cur] = true;
                let (x, s) = self.arcs[cur].head;
                if how[x].is_none() {
                    break;
                }
                cur = self.crossings[x].slots[through(x, s) as usize];
            }
            let tail = self.arcs[a].tail;
            let head = self.arcs[cur].head;
            raw.push(RawArc { label: self.arcs[a].label, tail: (new_index[tail.0], tail.1), head: (new_index[head.0], head.1) });
        }
        let mut loops = self.free_loops;
        for a in 0..self.arcs.len() {
            if visited[a] {
                continue;
            }
            loops += 1;
            let mut cur = a;
            while !visited[cur] {
                visited[cur] = true;
                let (x, s) = self.arcs[cur].head;
                cur = self.crossings[x].slots[through(x, s) as usize];
            }
        }
        let mut crossings: Vec<Crossing> =
            kept.iter().map(|&x| Crossing { slots: [usize::MAX; 4], over_in: self.crossings[x].over_in }).collect();
        for (i, r) in raw.iter().enumerate() {
            crossings[r.tail.0].slots[r.tail.1 as usize] = i;
            crossings[r.head.0].slots[r.head.1 as usize] = i;
        }
        assemble(crossings, raw, loops).expect("removing crossings preserves validity")
    }

    /// Reflect the diagram in the projection plane: every crossing changes sign.
    pub fn mirror(&self) -> LinkDiagram {
        let rot = |c: &Crossing, s: u8| (s + 4 - c.over_in) % 4;
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing {
                slots: [0, 1, 2, 3].map(|k| c.slots[(c.over_in as usize + k) % 4]),
                over_in: if c.over_in == 1 { 3 } else { 1 },
            })
            .collect();
        let arcs = self
            .arcs
            .iter()
            .map(|a| Arc {
                label: a.label,
                tail: (a.tail.0, rot(&self.crossings[a.tail.0], a.tail.1)),
                head: (a.head.0, rot(&self.crossings[a.head.0], a.head.1)),
                component: a.component,
            })
            .collect();
        LinkDiagram { crossings, arcs, components: self.components.clone(), free_loops: self.free_loops }
    }

    /// Changes crossing `x` by swapping its over- and under-strand.
    pub fn crossing_change(&self, x: CrossingId) -> Result<LinkDiagram> {
        self.crossing(x)?;
        let mut d = self.clone();
        let c = &self.crossings[x];
        let rot = |s: u8| (s + 4 - c.over_in) % 4;
        d.crossings[x] = Crossing {
            slots: [0, 1, 2, 3].map(|k| c.slots[(c.over_in as usize + k) % 4]),
            over_in: if c.over_in == 1 { 3 } else { 1 },
        };
        for a in d.arcs.iter_mut() {
            if a.tail.0 == x {
                a.tail.1 = rot(a.tail.1);
            }
            if a.head.0 == x {
                a.head.1 = rot(a.head.1);
            }
        }
        Ok(d)
    }

    /// PD string in the standard convention, labels as stored.
    pub fn to_pd(&self) -> String {
        self.crossings
            .iter()
            .map(|c| {
                let l = c.slots.map(|a| self.arcs[a].label);
                format!("X[{},{},{},{}]", l[0], l[1], l[2], l[3])
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn stats(&self) -> DiagramStats {
        let s = self.seifert_circles().count();
        let c = self.crossings.len();
        DiagramStats {
            c,
            s,
            b1: (c + self.piece_count()).saturating_sub(s),
            faces: if self.is_split() { None } else { Some(self.faces_unchecked().len()) },
            reduced: self.is_reduced(),
        }
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.crossings.is_empty() {
            write!(f, "<{} free loop(s)>", self.free_loops)
        } else {
            f.write_str(&self.to_pd())
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct RawArc {
    pub label: i64,
    pub tail: Slot,
    pub head: Slot,
}

/// Builds a diagram from crossings and oriented arcs, checking incidence,
/// orientation and the Euler relation.
pub(crate) fn assemble(crossings: Vec<Crossing>, raw: Vec<RawArc>, free_loops: usize) -> Result<LinkDiagram> {
    let n = crossings.len();
    if raw.len() != 2 * n {
        return Err(KnotError::NonPlanar(format!("{} arcs for {} crossings", raw.len(), n)));
    }
    for (i, r) in raw.iter().enumerate() {
        let (tx, ts) = r.tail;
        let (hx, hs) = r.head;
        if tx >= n || hx >= n || crossings[tx].slots[ts as usize] != i || crossings[hx].slots[hs as usize] != i {
            return Err(KnotError::NonPlanar(format!("arc {} is not attached where it claims", r.label)));
        }
        if crossings[tx].is_incoming(ts) || !crossings[hx].is_incoming(hs) {
            return Err(KnotError::InconsistentOrientation(r.label));
        }
    }
    let mut component_of = vec![usize::MAX; raw.len()];
    let mut components = Vec::new();
    for start in 0..raw.len() {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut comp = Vec::new();
        let mut a = start;
        loop {
            component_of[a] = id;
            comp.push(a);
            let (x, s) = raw[a].head;
            a = crossings[x].slots[((s + 2) % 4) as usize];
            if a == start {
                break;
            }
        }
        components.push(comp);
    }
    let arcs = raw
        .into_iter()
        .enumerate()
        .map(|(i, r)| Arc { label: r.label, tail: r.tail, head: r.head, component: component_of[i] })
        .collect();
    let d = LinkDiagram { crossings, arcs, components, free_loops };
    let pieces = d.crossing_pieces().len();
    let faces = d.faces_unchecked().len();
    if n > 0 && faces != n + 2 * pieces {
        return Err(KnotError::NonPlanar(format!(
            "{faces} faces for {n} crossings in {pieces} piece(s), expected {}",
            n + 2 * pieces
        )));
    }
    Ok(d)
}

fn parse_tuples(text: &str) -> Result<Vec<[i64; 4]>> {
    let mut body = text.trim();
    if let Some(rest) = body.strip_prefix("PD[") {
        body = rest.strip_suffix(']').ok_or_else(|| KnotError::MalformedTuple(text.to_string()))?;
    }
    let mut tuples = Vec::new();
    let mut rest = body;
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',' || c == ';');
        if rest.is_empty() {
            break;
        }
        let start = rest.strip_prefix("X[").ok_or_else(|| {
            KnotError::MalformedTuple(rest.split_whitespace().next().unwrap_or(rest).to_string())
        })?;
        let close = start.find(']').ok_or_else(|| KnotError::MalformedTuple(rest.to_string()))?;
        let inner = &start[..close];
        let token = format!("X[{inner}]");
        let labels: Vec<i64> = inner
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| KnotError::MalformedTuple(token.clone()))?;
        if labels.len() != 4 {
            return Err(KnotError::MalformedTuple(token));
        }
        tuples.push([labels[0], labels[1], labels[2], labels[3]]);
        rest = &start[close + 1..];
    }
    Ok(tuples)
}

pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    parse_pd_with(text, &ParseOptions::default())
}

pub fn parse_pd_with(text: &str, opts: &ParseOptions) -> Result<LinkDiagram> {
    let mut tuples = parse_tuples(text)?;
    if tuples.is_empty() {
        return Ok(LinkDiagram::unknot());
    }
    if opts.convention == PdConvention::Knotinfo {
        for t in tuples.iter_mut() {
            t.swap(1, 3);
        }
    }
    let n = tuples.len();
    let label_at = |h: usize| tuples[h / 4][h % 4];
    let mut where_: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for h in 0..4 * n {
        where_.entry(label_at(h)).or_default().push(h);
    }
    for (&label, hs) in &where_ {
        if hs.len() != 2 {
            return Err(KnotError::ArcMultiplicity { label, count: hs.len() });
        }
    }
    let partner = |h: usize| {
        let hs = &where_[&label_at(h)];
        if hs[0] == h {
            hs[1]
        } else {
            hs[0]
        }
    };
    let cont = |h: usize| 4 * (h / 4) + (h % 4 + 2) % 4;

    // trace strands as sequences of (tail half-edge, head half-edge)
    let mut seen = vec![false; 4 * n];
    let mut raw: Vec<RawArc> = Vec::new();
    let mut component_index = 0usize;
    for start in 0..4 * n {
        if seen[start] {
            continue;
        }
        let mut edges = Vec::new();
        let mut h = start;
        loop {
            let p = partner(h);
            seen[h] = true;
            seen[p] = true;
            edges.push((h, p));
            h = cont(p);
            if h == start {
                break;
            }
        }
        let mut forward = 0usize;
        let mut backward = 0usize;
        for &(t, hd) in &edges {
            match t % 4 {
                0 => backward += 1,
                2 => forward += 1,
                _ => {}
            }
            match hd % 4 {
                0 => forward += 1,
                2 => backward += 1,
                _ => {}
            }
        }
        let culprit = edges[0].0;
        let mut reverse = match (forward, backward) {
            (_, 0) if forward > 0 => false,
            (0, _) if backward > 0 => true,
            (0, 0) => {
                // no under-pass: follow label succession away from the minimum
                let labels: Vec<i64> = edges.iter().map(|&(t, _)| label_at(t)).collect();
                let k = labels.len();
                let i = (0..k).min_by_key(|&i| labels[i]).expect("non-empty");
                labels[(i + 1) % k] > labels[(i + k - 1) % k]
            }
            _ => return Err(KnotError::InconsistentOrientation(label_at(culprit))),
        };
        if opts.reverse_components.contains(&component_index) {
            if forward + backward > 0 {
                return Err(KnotError::Precondition(format!(
                    "component {component_index} passes under a crossing, its direction is forced"
                )));
            }
            reverse = !reverse;
        }
        if reverse {
            edges = edges.into_iter().rev().map(|(t, hd)| (hd, t)).collect();
        }
        for (t, hd) in edges {
            raw.push(RawArc { label: label_at(t), tail: (t / 4, (t % 4) as u8), head: (hd / 4, (hd % 4) as u8) });
        }
        component_index += 1;
    }

    let mut crossings: Vec<Crossing> = vec![Crossing { slots: [usize::MAX; 4], over_in: 0 }; n];
    for (i, r) in raw.iter().enumerate() {
        crossings[r.tail.0].slots[r.tail.1 as usize] = i;
        crossings[r.head.0].slots[r.head.1 as usize] = i;
        if r.head.1 % 2 == 1 {
            crossings[r.head.0].over_in = r.head.1;
        }
    }
    assemble(crossings, raw, 0)
}
