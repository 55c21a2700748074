//! Checkerboard colorings, crossing types, white-face bases and Goeritz forms.

use serde::Serialize;

use crate::diagram::{CrossingId, Face, LinkDiagram};
use crate::error::{KnotError, Result};
use crate::matrix::IntMatrix;
use crate::quadform::signature_symmetric;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CrossingType {
    I,
    II,
}

impl CrossingType {
    /// Contribution of a shared crossing to the intersection count `i(γ, γ′)`.
    fn weight(self) -> i64 {
        match self {
            CrossingType::I => 1,
            CrossingType::II => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckerboardData {
    /// 0 when the face at corner 0 of crossing 0 is black, 1 otherwise.
    pub index: u8,
    #[serde(skip)]
    pub faces: Vec<Face>,
    pub colors: Vec<Color>,
    pub types: Vec<CrossingType>,
    pub white_count: usize,
    pub black_count: usize,
    pub mu: usize,
}

impl CheckerboardData {
    pub fn crossing_type(&self, x: CrossingId) -> Result<CrossingType> {
        self.types.get(x).copied().ok_or(KnotError::UnknownCrossing(x))
    }

    pub fn white_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| self.colors[f.id] == Color::White)
    }
}

/// Curve running once around a white face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub face: usize,
    pub crossings: Vec<CrossingId>,
    /// Type-I crossings on the curve.
    pub m: usize,
    /// Type-II crossings on the curve.
    pub n: usize,
}

impl Generator {
    /// Framing `fr(γ) = m − n`.
    pub fn framing(&self) -> i64 {
        self.m as i64 - self.n as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WhiteBasis {
    pub coloring: u8,
    pub omitted_face: Option<usize>,
    pub generators: Vec<Generator>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoeritzForm {
    pub coloring: u8,
    pub omitted_face: Option<usize>,
    pub matrix: IntMatrix,
}

/// The two proper 2-colorings of the faces of a connected diagram.
pub fn colorings(d: &LinkDiagram) -> Result<(CheckerboardData, CheckerboardData)> {
    let faces = d.faces()?;
    if d.crossing_count() == 0 {
        let make = |index: u8| {
            let colors = if index == 0 { vec![Color::Black, Color::White] } else { vec![Color::White, Color::Black] };
            CheckerboardData { index, faces: faces.clone(), colors, types: Vec::new(), white_count: 1, black_count: 1, mu: 0 }
        };
        return Ok((make(0), make(1)));
    }
    let corner_face = d.corner_faces(&faces);
    let mut black: Vec<Option<bool>> = vec![None; faces.len()];
    black[corner_face[0][0]] = Some(true);
    let mut stack = vec![corner_face[0][0]];
    while let Some(f) = stack.pop() {
        let b = black[f].expect("assigned before push");
        for &(x, k) in &faces[f].corners {
            for step in 1..4u8 {
                let g = corner_face[x][((k + step) % 4) as usize];
                let want = if step == 2 { b } else { !b };
                match black[g] {
                    None => {
                        black[g] = Some(want);
                        stack.push(g);
                    }
                    Some(have) if have != want => {
                        return Err(KnotError::Invariant("face adjacency graph is not bipartite".into()));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let first: Vec<bool> = black.into_iter().map(|b| b.expect("connected diagram")).collect();
    let build = |index: u8| -> CheckerboardData {
        let colors: Vec<Color> = first
            .iter()
            .map(|&b| if b == (index == 0) { Color::Black } else { Color::White })
            .collect();
        let types: Vec<CrossingType> = d
            .crossings()
            .iter()
            .enumerate()
            .map(|(x, c)| {
                let black_corner = if colors[corner_face[x][0]] == Color::Black { 0 } else { 1 };
                if c.corner_is_mixed(black_corner) {
                    CrossingType::I
                } else {
                    CrossingType::II
                }
            })
            .collect();
        let white_count = colors.iter().filter(|&&c| c == Color::White).count();
        let mu = types.iter().filter(|&&t| t == CrossingType::II).count();
        let black_count = colors.len() - white_count;
        CheckerboardData { index, faces: faces.clone(), colors, black_count, white_count, types, mu }
    };
    Ok((build(0), build(1)))
}

/// Picks one coloring of the pair by index.
pub fn coloring(d: &LinkDiagram, index: u8) -> Result<CheckerboardData> {
    let (a, b) = colorings(d)?;
    match index {
        0 => Ok(a),
        1 => Ok(b),
        _ => Err(KnotError::Precondition(format!("coloring index {index} is not 0 or 1"))),
    }
}

pub fn crossing_type(cb: &CheckerboardData, x: CrossingId) -> Result<CrossingType> {
    cb.crossing_type(x)
}

/// Generators for every white face but the largest one (smallest id on ties).
pub fn white_basis(d: &LinkDiagram, cb: &CheckerboardData) -> Result<WhiteBasis> {
    if !d.is_reduced() {
        return Err(KnotError::Precondition("white-face basis needs a reduced diagram".into()));
    }
    let omitted = cb
        .white_faces()
        .fold(None::<&Face>, |best, f| match best {
            Some(b) if b.edge_count >= f.edge_count => Some(b),
            _ => Some(f),
        })
        .map(|f| f.id);
    let mut generators = Vec::new();
    for f in cb.white_faces() {
        if Some(f.id) == omitted {
            continue;
        }
        let crossings: Vec<CrossingId> = f.corners.iter().map(|&(x, _)| x).collect();
        let mut sorted = crossings.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != crossings.len() {
            return Err(KnotError::Invariant(format!("generator of face {} passes a crossing twice", f.id)));
        }
        let m = crossings.iter().filter(|&&x| cb.types[x] == CrossingType::I).count();
        generators.push(Generator { face: f.id, n: crossings.len() - m, m, crossings });
    }
    Ok(WhiteBasis { coloring: cb.index, omitted_face: omitted, generators })
}

/// Goeritz matrix in a white-face basis.
pub fn goeritz_from_basis(cb: &CheckerboardData, basis: &WhiteBasis) -> GoeritzForm {
    let k = basis.generators.len();
    let mut g = IntMatrix::zeros(k);
    for (i, gi) in basis.generators.iter().enumerate() {
        g.set(i, i, gi.framing());
        for (j, gj) in basis.generators.iter().enumerate().skip(i + 1) {
            let shared: i64 = gi
                .crossings
                .iter()
                .filter(|x| gj.crossings.contains(x))
                .map(|&x| cb.types[x].weight())
                .sum();
            g.set(i, j, -shared);
            g.set(j, i, -shared);
        }
    }
    GoeritzForm { coloring: cb.index, omitted_face: basis.omitted_face, matrix: g }
}

pub fn goeritz(d: &LinkDiagram, cb: &CheckerboardData) -> Result<GoeritzForm> {
    let basis = white_basis(d, cb)?;
    Ok(goeritz_from_basis(cb, &basis))
}

/// `sign(G) + μ` for one coloring.
pub fn gl_signature_for(d: &LinkDiagram, cb: &CheckerboardData) -> Result<i64> {
    let g = goeritz(d, cb)?;
    Ok(signature_symmetric(&g.matrix)?.signature() + cb.mu as i64)
}

/// Signature of a positive reduced diagram from both colorings, which must agree.
pub fn gl_signature(d: &LinkDiagram) -> Result<i64> {
    if !d.is_positive() {
        return Err(KnotError::Precondition("signature from the Goeritz form needs a positive diagram".into()));
    }
    if d.is_split() {
        return Err(KnotError::Precondition("signature from the Goeritz form needs a non-split diagram".into()));
    }
    let (a, b) = colorings(d)?;
    let first = gl_signature_for(d, &a)?;
    let second = gl_signature_for(d, &b)?;
    if first != second {
        return Err(KnotError::ColoringDisagreement { first, second });
    }
    Ok(first)
}

/// Signature of any positive diagram. A crossing whose smoothing splits the
/// diagram is a connected-sum neck, and smoothing it leaves the signature
/// unchanged; once none remain, each piece is reduced.
pub fn positive_signature(d: &LinkDiagram) -> Result<i64> {
    if !d.is_positive() {
        return Err(KnotError::Precondition("signature from the Goeritz form needs a positive diagram".into()));
    }
    let mut work = d.clone();
    loop {
        let pieces = work.piece_count();
        let neck = (0..work.crossing_count()).find(|&x| work.smooth(x).map(|e| e.piece_count() > pieces).unwrap_or(false));
        match neck {
            Some(x) => work = work.smooth(x)?,
            None => break,
        }
    }
    let mut total = 0;
    for piece in work.split_pieces() {
        if piece.crossing_count() > 0 {
            total += gl_signature(&piece)?;
        }
    }
    Ok(total)
}
