//! Braid words, their closures, and Seifert matrices of Bennequin surfaces.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::diagram::{assemble, Crossing, LinkDiagram, RawArc};
use crate::error::{KnotError, Result};
use crate::matrix::IntMatrix;
use crate::poly::IntPolynomial;
use crate::quadform::{alexander_raw, conway_from_seifert};

/// Word in the Artin generators; letter `±i` is `σ_i^{±1}`, `1 ≤ i < strands`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(KnotError::BraidParse("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(KnotError::BraidParse(format!("letter {l} out of range for {strands} strands")));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    /// Every generator `σ_1 … σ_{n−1}` occurs, so the closure diagram is connected.
    pub fn uses_all_generators(&self) -> bool {
        (1..self.strands as i32).all(|i| self.letters.iter().any(|l| l.abs() == i))
    }

    /// Same word with every letter made positive.
    pub fn positive_part(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|l| l.abs()).collect() }
    }

    /// Position each strand ends at, indexed by starting position.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        // at[p] = strand now at position p
        let mut perm = vec![0; self.strands];
        for (p, &s) in at.iter().enumerate() {
            perm[s] = p;
        }
        perm
    }

    pub fn component_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut t = s;
            while !seen[t] {
                seen[t] = true;
                t = perm[t];
            }
        }
        count
    }

    pub fn with_letters(&self, letters: Vec<i32>) -> Result<BraidWord> {
        BraidWord::new(self.strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = KnotError;
    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s)
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parses `"N: l1 l2 …"`.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let (head, body) = text
        .split_once(':')
        .ok_or_else(|| KnotError::BraidParse(format!("missing `:` after the strand count in `{text}`")))?;
    let strands: usize = head
        .trim()
        .parse()
        .map_err(|_| KnotError::BraidParse(format!("bad strand count `{}`", head.trim())))?;
    let letters = body
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i32>().map_err(|_| KnotError::BraidParse(format!("bad letter `{t}`"))))
        .collect::<Result<Vec<_>>>()?;
    BraidWord::new(strands, letters)
}

/// PD tuples of the closure, in braid order, with `over_in` for each, and the
/// number of strands that meet no crossing.
pub(crate) fn closure_tuples(beta: &BraidWord) -> (Vec<([i64; 4], u8)>, usize) {
    let n = beta.strands;
    let mut cur: Vec<i64> = (1..=n as i64).collect();
    let mut next = n as i64 + 1;
    let mut tuples: Vec<([i64; 4], u8)> = Vec::new();
    for &l in &beta.letters {
        let i = l.unsigned_abs() as usize - 1;
        let (in_l, in_r) = (cur[i], cur[i + 1]);
        let (out_l, out_r) = (next, next + 1);
        next += 2;
        if l > 0 {
            tuples.push(([in_l, in_r, out_r, out_l], 1));
        } else {
            tuples.push(([in_r, out_r, out_l, in_l], 3));
        }
        cur[i] = out_l;
        cur[i + 1] = out_r;
    }
    let rename: BTreeMap<i64, i64> = cur.iter().enumerate().map(|(p, &l)| (l, p as i64 + 1)).collect();
    let free_loops = cur.iter().enumerate().filter(|&(p, &l)| l == p as i64 + 1).count();
    for (t, _) in tuples.iter_mut() {
        for label in t.iter_mut() {
            if let Some(&r) = rename.get(label) {
                *label = r;
            }
        }
    }
    (tuples, free_loops)
}

/// Builds a diagram from tuples whose slot roles are known, so no
/// orientation has to be inferred.
pub(crate) fn diagram_from_tuples(tuples: &[([i64; 4], u8)], free_loops: usize) -> Result<LinkDiagram> {
    let mut ends: BTreeMap<i64, (Option<(usize, u8)>, Option<(usize, u8)>)> = BTreeMap::new();
    for (x, (t, over_in)) in tuples.iter().enumerate() {
        for (s, label) in t.iter().enumerate() {
            let incoming = s == 0 || s == *over_in as usize;
            let e = ends.entry(*label).or_default();
            let slot = if incoming { &mut e.1 } else { &mut e.0 };
            if slot.replace((x, s as u8)).is_some() {
                return Err(KnotError::ArcMultiplicity { label: *label, count: 3 });
            }
        }
    }
    let index: BTreeMap<i64, usize> = ends.keys().enumerate().map(|(i, &l)| (l, i)).collect();
    let raw = ends
        .iter()
        .map(|(&label, &(tail, head))| match (tail, head) {
            (Some(tail), Some(head)) => Ok(RawArc { label, tail, head }),
            _ => Err(KnotError::InconsistentOrientation(label)),
        })
        .collect::<Result<Vec<_>>>()?;
    let crossings: Vec<Crossing> = tuples
        .iter()
        .map(|(t, over_in)| Crossing { slots: t.map(|l| index[&l]), over_in: *over_in })
        .collect();
    assemble(crossings, raw, free_loops)
}

/// Closure of the braid as an oriented diagram; letter `k` becomes crossing
/// `k` with the sign of the letter.
pub fn closure_diagram(beta: &BraidWord) -> LinkDiagram {
    let (tuples, free_loops) = closure_tuples(beta);
    diagram_from_tuples(&tuples, free_loops).expect("braid closures are planar")
}

/// Pair of consecutive occurrences of the same generator; spans a disk of the
/// Bennequin surface between two Seifert circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Brick {
    pub index: u32,
    pub start: usize,
    pub end: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertMatrixData {
    pub word: BraidWord,
    pub bricks: Vec<Brick>,
    pub matrix: IntMatrix,
}

impl SeifertMatrixData {
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

pub fn bricks(beta: &BraidWord) -> Vec<Brick> {
    let mut out = Vec::new();
    for i in 1..beta.strands as u32 {
        let pos: Vec<usize> =
            beta.letters.iter().enumerate().filter(|(_, l)| l.unsigned_abs() == i).map(|(p, _)| p).collect();
        for w in pos.windows(2) {
            out.push(Brick { index: i, start: w[0], end: w[1] });
        }
    }
    out
}

fn positive_matrix(bricks: &[Brick]) -> IntMatrix {
    let k = bricks.len();
    let mut a = IntMatrix::zeros(k);
    for (x, bx) in bricks.iter().enumerate() {
        a.set(x, x, -1);
        for (y, by) in bricks.iter().enumerate() {
            if x == y {
                continue;
            }
            if by.index == bx.index && bx.end == by.start {
                a.set(x, y, 1);
            } else if by.index == bx.index + 1 {
                let (p, q, r, s) = (bx.start, bx.end, by.start, by.end);
                if p < r && r < q && q < s {
                    a.set(x, y, -1);
                } else if r < p && p < s && s < q {
                    a.set(x, y, 1);
                }
            }
        }
    }
    a
}

/// Seifert matrix of the Bennequin surface of a positive braid whose closure
/// is non-split.
pub fn bennequin_seifert_matrix(beta: &BraidWord) -> Result<SeifertMatrixData> {
    if !beta.is_positive() {
        return Err(KnotError::Precondition("the Bennequin matrix is built for positive words".into()));
    }
    seifert_matrix(beta)
}

/// Seifert matrix of the Bennequin surface of any braid using every
/// generator. Negative letters modify the positive matrix by `u·uᵀ`, with
/// `u` the difference of the two bricks meeting at that letter.
pub fn seifert_matrix(beta: &BraidWord) -> Result<SeifertMatrixData> {
    if !beta.uses_all_generators() {
        return Err(KnotError::Precondition(format!("closure of `{beta}` is split: some generator is unused")));
    }
    let bricks = bricks(beta);
    let mut a = positive_matrix(&bricks);
    for (p, &l) in beta.letters.iter().enumerate() {
        if l > 0 {
            continue;
        }
        let mut u = vec![0i64; bricks.len()];
        for (x, b) in bricks.iter().enumerate() {
            if b.end == p {
                u[x] += 1;
            }
            if b.start == p {
                u[x] -= 1;
            }
        }
        for i in 0..u.len() {
            for j in 0..u.len() {
                if u[i] != 0 && u[j] != 0 {
                    a.add_to(i, j, u[i] * u[j]);
                }
            }
        }
    }
    Ok(SeifertMatrixData { word: beta.clone(), bricks, matrix: a })
}

/// Sub-braids on the maximal strand intervals joined by used generators; the
/// closure of `β` is their split union.
pub fn split_blocks(beta: &BraidWord) -> Vec<BraidWord> {
    let used: Vec<bool> = (1..beta.strands).map(|i| beta.letters.iter().any(|l| l.unsigned_abs() as usize == i)).collect();
    let mut blocks = Vec::new();
    let mut start = 0;
    for end in 0..beta.strands {
        if end + 1 < beta.strands && used[end] {
            continue;
        }
        let shift = start as i32;
        let letters = beta
            .letters
            .iter()
            .filter(|l| (l.unsigned_abs() as usize) > start && (l.unsigned_abs() as usize) <= end)
            .map(|&l| l - shift * l.signum())
            .collect();
        blocks.push(BraidWord { strands: end - start + 1, letters });
        start = end + 1;
    }
    blocks
}

/// Block sum of the Seifert matrices of the split blocks.
pub fn split_seifert_matrix(beta: &BraidWord) -> Result<IntMatrix> {
    let parts = split_blocks(beta).iter().map(|b| seifert_matrix(b).map(|d| d.matrix)).collect::<Result<Vec<_>>>()?;
    let n = parts.iter().map(IntMatrix::dim).sum();
    let mut a = IntMatrix::zeros(n);
    let mut off = 0;
    for p in &parts {
        for i in 0..p.dim() {
            for j in 0..p.dim() {
                a.set(off + i, off + j, p.get(i, j));
            }
        }
        off += p.dim();
    }
    Ok(a)
}

/// Alexander polynomial, symmetrized with positive leading coefficient.
pub fn alexander(data: &SeifertMatrixData) -> IntPolynomial {
    alexander_of(&data.matrix)
}

pub fn alexander_of(a: &IntMatrix) -> IntPolynomial {
    alexander_raw(a).symmetric_normalized()
}

pub fn conway(data: &SeifertMatrixData) -> Result<IntPolynomial> {
    conway_from_seifert(&data.matrix)
}

fn require_two_components(beta: &BraidWord) -> Result<()> {
    let c = beta.component_count();
    if c != 2 {
        return Err(KnotError::Precondition(format!("closure of `{beta}` has {c} components, expected 2")));
    }
    Ok(())
}

/// Half the signed number of crossings between the two components.
pub fn linking_number(beta: &BraidWord) -> Result<i64> {
    require_two_components(beta)?;
    let d = closure_diagram(beta);
    let mut total = 0;
    for x in 0..d.crossing_count() {
        let (a, b) = d.strand_components(x)?;
        if a != b {
            total += d.crossing_sign(x)? as i64;
        }
    }
    Ok(total / 2)
}

/// Coefficient of `z` in the Conway polynomial of a 2-component positive closure.
pub fn conway_linear_coefficient(beta: &BraidWord) -> Result<i64> {
    require_two_components(beta)?;
    if !beta.is_positive() {
        return Err(KnotError::Precondition(format!("`{beta}` is not a positive word")));
    }
    let c = conway(&bennequin_seifert_matrix(beta)?)?;
    let v = c.coeff(1);
    v.to_string().parse().map_err(|_| KnotError::Invariant("linear coefficient overflows".into()))
}
