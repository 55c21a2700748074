//! Census of white-face generators by crossing type.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::checkerboard::{white_basis, CheckerboardData, Generator};
use crate::diagram::LinkDiagram;
use crate::error::{KnotError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TypeCount {
    pub m: usize,
    pub n: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveCensus {
    pub coloring: u8,
    pub mu: usize,
    /// White faces, so the basis has `white_faces − 1` generators.
    pub white_faces: usize,
    pub generators: Vec<Generator>,
    pub types: Vec<TypeCount>,
    pub gamma_neg: usize,
    pub gamma_nonneg: usize,
    /// Pairs of `(0,2)` generators sharing a crossing; each pair is a Hopf
    /// link split from the rest of the diagram.
    pub hopf_pairs: Vec<(usize, usize)>,
}

impl CurveCensus {
    pub fn gamma(&self, m: usize, n: usize) -> usize {
        self.types.iter().find(|t| t.m == m && t.n == n).map_or(0, |t| t.count)
    }

    /// `Σ γ(1, n)` over all `n`.
    pub fn gamma_one_any(&self) -> usize {
        self.types.iter().filter(|t| t.m == 1).map(|t| t.count).sum()
    }

    /// `Σ_{n>m, n>2} γ(m, n)`.
    pub fn gamma_heavy(&self) -> usize {
        self.types.iter().filter(|t| t.n > t.m && t.n > 2).map(|t| t.count).sum()
    }

    /// `Σ_{n>m, n>2} n·γ(m, n)`.
    pub fn gamma_heavy_weighted(&self) -> usize {
        self.types.iter().filter(|t| t.n > t.m && t.n > 2).map(|t| t.n * t.count).sum()
    }
}

pub fn curve_census(d: &LinkDiagram, cb: &CheckerboardData) -> Result<CurveCensus> {
    let basis = white_basis(d, cb)?;
    let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for g in &basis.generators {
        *counts.entry((g.m, g.n)).or_default() += 1;
    }
    let types: Vec<TypeCount> = counts.into_iter().map(|((m, n), count)| TypeCount { m, n, count }).collect();
    let gamma_neg = basis.generators.iter().filter(|g| g.framing() < 0).count();
    let small: Vec<usize> =
        (0..basis.generators.len()).filter(|&i| (basis.generators[i].m, basis.generators[i].n) == (0, 2)).collect();
    let mut hopf_pairs = Vec::new();
    for (k, &i) in small.iter().enumerate() {
        for &j in &small[k + 1..] {
            if basis.generators[i].crossings.iter().any(|x| basis.generators[j].crossings.contains(x)) {
                hopf_pairs.push((i, j));
            }
        }
    }
    let census = CurveCensus {
        coloring: cb.index,
        mu: cb.mu,
        white_faces: cb.white_count,
        gamma_nonneg: basis.generators.len() - gamma_neg,
        generators: basis.generators,
        types,
        gamma_neg,
        hopf_pairs,
    };
    if census.gamma(0, 1) != 0 || census.gamma_one_any() != 0 {
        return Err(KnotError::Invariant(format!(
            "census of coloring {} has a (0,1) or (1,n) generator",
            cb.index
        )));
    }
    if census.gamma_neg != census.gamma(0, 2) + census.gamma_heavy() {
        return Err(KnotError::Invariant("negative-framing generators are not all of type (0,2) or heavy".into()));
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checkerboard::colorings;
    use crate::diagram::parse_pd;

    #[test]
    fn trefoil_census() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        let (a, b) = colorings(&d).unwrap();
        let (ca, cb) = (curve_census(&d, &a).unwrap(), curve_census(&d, &b).unwrap());
        let (three, two) = if ca.mu == 3 { (ca, cb) } else { (cb, ca) };
        assert_eq!(three.gamma(0, 3), 1);
        assert_eq!(three.gamma_neg, 1);
        assert_eq!(two.gamma(2, 0), 2);
        assert_eq!(two.gamma_neg, 0);
    }

    #[test]
    fn unknot_census_is_empty() {
        let d = LinkDiagram::unknot();
        let (a, _) = colorings(&d).unwrap();
        let c = curve_census(&d, &a).unwrap();
        assert!(c.types.is_empty());
        assert_eq!(c.gamma_neg + c.gamma_nonneg, 0);
    }
}
