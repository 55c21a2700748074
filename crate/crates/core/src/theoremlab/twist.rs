//! Twist families obtained from a positive braid by adding positive full
//! twists at one letter.
//!
//! Two families are produced. In the ribbon family `K(N)` the Seifert band of
//! the letter receives `N` extra full twists; its Seifert matrix is the
//! Bennequin matrix of the smoothed link `L` bordered by one ribbon row and
//! column, and only the ribbon's self-linking depends on `N`, so `det(S_N)` is
//! affine in `N` and `b₁` stays fixed. In the letter-power family the letter
//! `σ_i` becomes `σ_i^{2N+1}`; there the genus grows with `N`.

use std::cmp::Ordering;

use num_rational::BigRational;
use serde::Serialize;

use crate::braid::{alexander_of, bricks, closure_tuples, diagram_from_tuples, conway_linear_coefficient, linking_number, seifert_matrix, BraidWord};
use crate::checkerboard::gl_signature;
use crate::diagram::LinkDiagram;
use crate::error::{KnotError, Result};
use crate::matrix::IntMatrix;
use crate::poly::IntPolynomial;
use crate::quadform::cyclotomic::CyclotomicField;
use crate::quadform::{
    alexander_raw, levine_tristram, nonvanishing_at, omega_det, OmegaDeterminant, UnitCirclePoint,
};

/// Search range for ω₀ = exp(iπ/q).
pub const OMEGA0_Q_MIN: u32 = 4;
pub const OMEGA0_Q_MAX: u32 = 1024;

fn check_position(beta: &BraidWord, position: usize) -> Result<()> {
    if position >= beta.len() {
        return Err(KnotError::Precondition(format!("position {position} is outside a word of length {}", beta.len())));
    }
    Ok(())
}

/// Replaces the letter at `position` by its `(2N+1)`-th power.
pub fn twist_insert(beta: &BraidWord, position: usize, n: usize) -> Result<BraidWord> {
    check_position(beta, position)?;
    if !beta.is_positive() {
        return Err(KnotError::Precondition(format!("`{beta}` is not a positive word")));
    }
    let l = beta.letters()[position];
    let mut letters = beta.letters()[..position].to_vec();
    letters.extend(std::iter::repeat(l).take(2 * n + 1));
    letters.extend_from_slice(&beta.letters()[position + 1..]);
    beta.with_letters(letters)
}

/// Deletes the letter at `position`.
pub fn smooth_at(beta: &BraidWord, position: usize) -> Result<BraidWord> {
    check_position(beta, position)?;
    let mut letters = beta.letters().to_vec();
    letters.remove(position);
    beta.with_letters(letters)
}

/// Closure of `β` with the crossing at `position` replaced by a twist region
/// of `2N+1` positive crossings between oppositely oriented strands: the
/// Seifert band of that crossing with `N` extra full twists.
pub fn ribbon_twist_diagram(beta: &BraidWord, position: usize, n: usize) -> Result<LinkDiagram> {
    check_position(beta, position)?;
    if !beta.is_positive() {
        return Err(KnotError::Precondition(format!("`{beta}` is not a positive word")));
    }
    let (mut tuples, free_loops) = closure_tuples(beta);
    let [in_l, in_r, out_r, out_l] = tuples[position].0;
    let mut next = tuples.iter().flat_map(|(t, _)| t.iter().copied()).max().unwrap_or(0) + 1;
    let k = 2 * n + 1;
    // top[j], bottom[j] run between crossings j and j + 1
    let mut fresh = |count: usize| -> Vec<i64> {
        let v: Vec<i64> = (next..next + count as i64).collect();
        next += count as i64;
        v
    };
    let top = fresh(k - 1);
    let bottom = fresh(k - 1);
    let mut region = Vec::with_capacity(k);
    for j in 0..k {
        let sw = if j == 0 { in_l } else { bottom[j - 1] };
        let nw = if j == 0 { out_l } else { top[j - 1] };
        let se = if j == k - 1 { in_r } else { bottom[j] };
        let ne = if j == k - 1 { out_r } else { top[j] };
        region.push(if j % 2 == 0 { ([sw, se, ne, nw], 1) } else { ([ne, nw, sw, se], 1) });
    }
    tuples.splice(position..=position, region);
    diagram_from_tuples(&tuples, free_loops)
}

/// `A = [[x, w], [v, B]]` for `K(0)`, where `B` is the Bennequin matrix of `L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RibbonMatrix {
    pub matrix: IntMatrix,
    /// Coordinates of the basis in the Bennequin brick basis of `K(0)`.
    pub change_of_basis: IntMatrix,
}

impl RibbonMatrix {
    pub fn x(&self) -> i64 {
        self.matrix.get(0, 0)
    }

    pub fn b(&self) -> IntMatrix {
        let n = self.matrix.dim();
        self.matrix.submatrix(&(1..n).collect::<Vec<_>>())
    }

    /// Seifert matrix of `K(N)`: `N` full twists in the ribbon lower `x` by `N`.
    pub fn twisted(&self, n: usize) -> IntMatrix {
        let mut a = self.matrix.clone();
        a.add_to(0, 0, -(n as i64));
        a
    }
}

/// Rewrites the Bennequin matrix of `β` in a basis whose last vectors span
/// the surface of `smooth_at(β, position)`.
pub fn ribbon_matrix(beta: &BraidWord, position: usize) -> Result<RibbonMatrix> {
    let smoothed = smooth_at(beta, position)?;
    let k_bricks = bricks(beta);
    let l_bricks = bricks(&smoothed);
    let a_k = seifert_matrix(beta)?.matrix;
    let a_l = seifert_matrix(&smoothed)?.matrix;
    let index = beta.letters()[position].unsigned_abs();
    let unshift = |p: usize| if p >= position { p + 1 } else { p };
    let find = |i: u32, s: usize, e: usize| {
        k_bricks
            .iter()
            .position(|b| b.index == i && b.start == s && b.end == e)
            .ok_or_else(|| KnotError::Invariant(format!("no brick ({i}; {s}, {e}) in `{beta}`")))
    };
    let dim = k_bricks.len();
    let mut p = IntMatrix::zeros(dim);
    let ribbon = k_bricks
        .iter()
        .position(|b| b.index == index && b.start == position)
        .or_else(|| k_bricks.iter().position(|b| b.index == index && b.end == position))
        .ok_or_else(|| KnotError::Precondition(format!("letter {position} of `{beta}` bounds no brick")))?;
    p.set(ribbon, 0, 1);
    for (col, lb) in l_bricks.iter().enumerate() {
        let (s, e) = (unshift(lb.start), unshift(lb.end));
        if lb.index == index && s < position && position < e {
            p.set(find(index, s, position)?, col + 1, 1);
            p.set(find(index, position, e)?, col + 1, 1);
        } else {
            p.set(find(lb.index, s, e)?, col + 1, 1);
        }
    }
    if p.det().magnitude() != &num_bigint::BigUint::from(1u8) {
        return Err(KnotError::Invariant("ribbon basis is not unimodular".into()));
    }
    let m = a_k.congruent(&p)?;
    let ribbon = RibbonMatrix { matrix: m, change_of_basis: p };
    if ribbon.b() != a_l {
        return Err(KnotError::Invariant("ribbon basis does not restrict to the Seifert matrix of L".into()));
    }
    Ok(ribbon)
}

/// `σ_ω(K) = 0` and `Δ_L(ω) ≠ 0`.
pub fn is_admissible_omega0(a_k: &IntMatrix, delta_l: &IntPolynomial, omega: &UnitCirclePoint) -> Result<bool> {
    Ok(nonvanishing_at(delta_l, omega) && levine_tristram(a_k, omega)?.signature() == 0)
}

/// First `exp(iπ/q)`, `q = 4, 5, …`, admissible for the base knot and `L`.
pub fn choose_omega0(a_k: &IntMatrix, a_l: &IntMatrix) -> Result<UnitCirclePoint> {
    let delta_l = alexander_raw(a_l);
    if delta_l.is_zero() {
        return Err(KnotError::DegenerateAlexander);
    }
    for q in OMEGA0_Q_MIN..=OMEGA0_Q_MAX {
        let omega = UnitCirclePoint::new(1, q)?;
        if is_admissible_omega0(a_k, &delta_l, &omega)? {
            return Ok(omega);
        }
    }
    Err(KnotError::NoAdmissibleAngle(OMEGA0_Q_MAX))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothedLink {
    pub word: BraidWord,
    pub components: usize,
    pub linking_number: i64,
    pub conway_linear: i64,
    pub alexander: IntPolynomial,
    pub sigma_omega0: i64,
}

/// One member of the ribbon family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistPoint {
    pub n: usize,
    /// `σ_{ω₀}` of the ribbon matrix `A_N`.
    pub sigma: i64,
    pub nullity: usize,
    pub b1: usize,
    /// `σ_{−1}` of `A_N`.
    pub sigma_minus_one: i64,
    /// Signature of the explicit twist diagram from its Goeritz form.
    pub diagram_sigma: i64,
    pub diagram_crossings: usize,
    /// `det(S_N)` with `S_N = M_{ω₀}(A_N)`.
    pub det: OmegaDeterminant,
}

/// One member of the letter-power family `σ_i ↦ σ_i^{2N+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LetterPowerPoint {
    pub n: usize,
    pub word: BraidWord,
    pub sigma: i64,
    pub b1: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineFit {
    pub intercept: OmegaDeterminant,
    pub slope: OmegaDeterminant,
    /// `d_N − d_0 − N·slope = 0` for every sampled `N`.
    pub residual_zero: bool,
    /// `slope = −(2 − 2 Re ω₀)·det(B′)`.
    pub slope_matches_border: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistFamilyReport {
    pub base: BraidWord,
    pub position: usize,
    pub nmax: usize,
    pub smoothed: SmoothedLink,
    pub omega0: UnitCirclePoint,
    pub ribbon: RibbonMatrix,
    /// Ribbon self-linking of `K(0)`; `K(N)` has `x − N`.
    pub x: i64,
    pub det_b_prime: OmegaDeterminant,
    pub points: Vec<TwistPoint>,
    pub monotone: bool,
    /// Ribbon matrices and twist diagrams give the same classical signature.
    pub diagram_agrees: bool,
    pub affine: Option<AffineFit>,
    /// Least `N₀` with `σ_{ω₀}(K(N)) > 0` for every sampled `N ≥ N₀`;
    /// absent when `nmax = 0` or the last value is not positive.
    pub n0: Option<usize>,
    pub letter_power: Vec<LetterPowerPoint>,
    pub letter_power_monotone: bool,
    pub letter_power_n0: Option<usize>,
}

impl TwistFamilyReport {
    pub fn summary(&self) -> String {
        let seq = |v: Vec<i64>| v.iter().map(i64::to_string).collect::<Vec<_>>().join(", ");
        let threshold = |n0: Option<usize>| match n0 {
            Some(n) => format!("N0 = {n}"),
            None if self.nmax == 0 => "single point, no threshold".to_string(),
            None => format!("no positive tail up to N = {}", self.nmax),
        };
        format!(
            "twist `{}` at {}: omega0 = {}; ribbon sigma = [{}], {}, monotone = {}, det affine = {}; \
             letter power sigma = [{}], {}, monotone = {}",
            self.base,
            self.position,
            self.omega0,
            seq(self.points.iter().map(|p| p.sigma).collect()),
            threshold(self.n0),
            self.monotone,
            self.affine.as_ref().map_or("n/a".to_string(), |a| a.residual_zero.to_string()),
            seq(self.letter_power.iter().map(|p| p.sigma).collect()),
            threshold(self.letter_power_n0),
            self.letter_power_monotone,
        )
    }
}

fn elem_det(field: &CyclotomicField, coords: Vec<BigRational>, order: u32) -> Result<OmegaDeterminant> {
    let sign = field.real_sign(&coords, 1)?;
    Ok(OmegaDeterminant { order, coords, sign })
}

fn positive_tail(sigmas: &[i64]) -> Option<usize> {
    if sigmas.len() < 2 {
        return None;
    }
    let tail = sigmas.iter().rev().take_while(|&&s| s > 0).count();
    (tail > 0).then(|| sigmas.len() - tail)
}

fn non_decreasing(sigmas: &[i64]) -> bool {
    sigmas.windows(2).all(|w| w[1] >= w[0])
}

pub fn twist_family_experiment(beta: &BraidWord, position: usize, nmax: usize) -> Result<TwistFamilyReport> {
    check_position(beta, position)?;
    if !beta.is_positive() {
        return Err(KnotError::Precondition(format!("`{beta}` is not a positive word")));
    }
    if beta.component_count() != 1 {
        return Err(KnotError::Precondition(format!("closure of `{beta}` is not a knot")));
    }
    let smoothed_word = smooth_at(beta, position)?;
    if !smoothed_word.uses_all_generators() {
        return Err(KnotError::Precondition(format!("smoothing letter {position} of `{beta}` gives a split link")));
    }
    let a_k = seifert_matrix(beta)?.matrix;
    let a_l = seifert_matrix(&smoothed_word)?.matrix;
    let omega0 = choose_omega0(&a_k, &a_l)?;
    let ribbon = ribbon_matrix(beta, position)?;
    let b = ribbon.b();

    let smoothed = SmoothedLink {
        components: smoothed_word.component_count(),
        linking_number: linking_number(&smoothed_word)?,
        conway_linear: conway_linear_coefficient(&smoothed_word)?,
        alexander: alexander_of(&a_l),
        sigma_omega0: levine_tristram(&a_l, &omega0)?.signature(),
        word: smoothed_word,
    };

    let minus_one = UnitCirclePoint::minus_one();
    let mut points = Vec::with_capacity(nmax + 1);
    let mut letter_power = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let a_n = ribbon.twisted(n);
        let t = levine_tristram(&a_n, &omega0)?;
        let d = ribbon_twist_diagram(beta, position, n)?;
        points.push(TwistPoint {
            n,
            sigma: t.signature(),
            nullity: t.nullity,
            b1: a_n.dim(),
            sigma_minus_one: levine_tristram(&a_n, &minus_one)?.signature(),
            diagram_sigma: gl_signature(&d)?,
            diagram_crossings: d.crossing_count(),
            det: omega_det(&a_n, &omega0)?,
        });
        let word = twist_insert(beta, position, n)?;
        let a_w = seifert_matrix(&word)?.matrix;
        letter_power.push(LetterPowerPoint {
            n,
            sigma: levine_tristram(&a_w, &omega0)?.signature(),
            b1: a_w.dim(),
            word,
        });
    }
    let sigmas: Vec<i64> = points.iter().map(|p| p.sigma).collect();
    let letter_sigmas: Vec<i64> = letter_power.iter().map(|p| p.sigma).collect();
    let diagram_agrees = points.iter().all(|p| p.sigma_minus_one == p.diagram_sigma);

    let det_b_prime = omega_det(&b, &omega0)?;
    if det_b_prime.sign == Ordering::Equal {
        return Err(KnotError::Invariant("det(B') vanishes although Δ_L(ω₀) ≠ 0".into()));
    }
    let order = omega0.field_order();
    let field = CyclotomicField::new(order);
    let affine = if nmax == 0 {
        None
    } else {
        let d0 = &points[0].det.coords;
        let slope = field.sub(&points[1].det.coords, d0);
        let residual_zero = points.iter().all(|p| {
            let predicted = field.add(d0, &field.scale(&slope, &BigRational::from_integer(p.n.into())));
            predicted == p.det.coords
        });
        let p = omega0.p() as i64;
        let x_prime_unit = field.sub(&field.from_int(2), &field.add(&field.zeta_pow(p), &field.zeta_pow(-p)));
        let expected_slope = field.neg(&field.mul(&x_prime_unit, &det_b_prime.coords));
        Some(AffineFit {
            intercept: elem_det(&field, d0.clone(), order)?,
            slope_matches_border: expected_slope == slope,
            slope: elem_det(&field, slope, order)?,
            residual_zero,
        })
    };
    Ok(TwistFamilyReport {
        base: beta.clone(),
        position,
        nmax,
        smoothed,
        omega0,
        x: ribbon.x(),
        ribbon,
        det_b_prime,
        monotone: non_decreasing(&sigmas),
        n0: positive_tail(&sigmas),
        points,
        diagram_agrees,
        affine,
        letter_power_monotone: non_decreasing(&letter_sigmas),
        letter_power_n0: positive_tail(&letter_sigmas),
        letter_power,
    })
}
