//! Two-edge faces of a reduced positive diagram and the reduction that pulls
//! apart the clasps whose removal keeps the first Betti number.

use serde::Serialize;

use crate::diagram::{CrossingId, LinkDiagram, Removal};
use crate::error::{KnotError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BigonKind {
    /// The two edges run in parallel; the boundary is not a Seifert circle.
    NotSeifertCircle,
    /// A Seifert circle attached twice to the same other circle.
    SeifertReducing,
    /// A Seifert circle attached to two distinct other circles.
    SeifertNonreducing,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bigon {
    pub face: usize,
    pub crossings: [CrossingId; 2],
    pub kind: BigonKind,
}

fn require_reduced_positive(d: &LinkDiagram) -> Result<()> {
    if !d.is_positive() {
        return Err(KnotError::Precondition("diagram has a negative crossing".into()));
    }
    if d.is_split() {
        return Err(KnotError::Precondition("diagram is split".into()));
    }
    Ok(())
}

pub fn classify_bigons(d: &LinkDiagram) -> Result<Vec<Bigon>> {
    require_reduced_positive(d)?;
    let faces = d.faces()?;
    if let Some(f) = faces.iter().find(|f| f.edge_count == 1) {
        return Err(KnotError::Precondition(format!("face {} is a monogon; the diagram is not reduced", f.id)));
    }
    if !d.is_reduced() {
        return Err(KnotError::Precondition("diagram is not reduced".into()));
    }
    let circles = d.seifert_circles();
    let mut out = Vec::new();
    for f in faces.iter().filter(|f| f.edge_count == 2) {
        let (x, kx) = f.corners[0];
        let (y, ky) = f.corners[1];
        if x == y {
            return Err(KnotError::Invariant(format!("bigon {} meets crossing {x} twice", f.id)));
        }
        let cx = d.crossing(x)?;
        let cy = d.crossing(y)?;
        let kind = if cx.corner_is_mixed(kx) && cy.corner_is_mixed(ky) {
            let own = circles.circle_of_arc[f.arcs[0]];
            let other = |z: CrossingId| {
                let (a, b) = circles.adjacency[z];
                if a == own {
                    b
                } else {
                    a
                }
            };
            if other(x) == other(y) {
                BigonKind::SeifertReducing
            } else {
                BigonKind::SeifertNonreducing
            }
        } else {
            BigonKind::NotSeifertCircle
        };
        out.push(Bigon { face: f.id, crossings: [x, y], kind });
    }
    Ok(out)
}

/// One clasp removal, with crossing ids of the diagram it was applied to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionPass {
    pub face: usize,
    pub crossings: [CrossingId; 2],
    pub c_before: usize,
    pub s_before: usize,
    pub b1_before: usize,
    pub c_after: usize,
    pub s_after: usize,
    pub b1_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reduction {
    #[serde(serialize_with = "pd_string")]
    pub diagram: LinkDiagram,
    pub passes: Vec<ReductionPass>,
}

fn pd_string<S: serde::Serializer>(d: &LinkDiagram, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&d.to_pd())
}

/// Removes non-reducing Seifert-circle bigons one at a time until none is
/// left. Each pass is checked to keep `b₁` and to leave a reduced positive
/// non-split diagram.
pub fn reduce(d: &LinkDiagram) -> Result<Reduction> {
    let mut cur = d.clone();
    let mut passes = Vec::new();
    loop {
        let bigons = classify_bigons(&cur)?;
        let Some(b) = bigons.iter().find(|b| b.kind == BigonKind::SeifertNonreducing) else {
            break;
        };
        let before = cur.stats();
        let next = cur.remove(&[(b.crossings[0], Removal::Straight), (b.crossings[1], Removal::Straight)]);
        if next.is_split() || !next.is_reduced() {
            return Err(KnotError::Invariant(format!("removing the clasp at face {} broke reducedness", b.face)));
        }
        let after = next.stats();
        if after.b1 != before.b1 {
            return Err(KnotError::Invariant(format!(
                "removing the clasp at face {} changed b1 from {} to {}",
                b.face, before.b1, after.b1
            )));
        }
        passes.push(ReductionPass {
            face: b.face,
            crossings: b.crossings,
            c_before: before.c,
            s_before: before.s,
            b1_before: before.b1,
            c_after: after.c,
            s_after: after.s,
            b1_after: after.b1,
        });
        cur = next;
    }
    Ok(Reduction { diagram: cur, passes })
}
