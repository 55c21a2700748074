//! Exact signatures of symmetric and Hermitian forms.
//!
//! Signature convention: Seifert matrices in this crate are ordinary Seifert
//! matrices, for which the positive trefoil has `sign(A + Aᵀ) = −2`. The
//! Levine–Tristram signature reported by [`levine_tristram`] is negated once,
//! at the end, so that positive links have positive signature. No other
//! function changes signs.

pub mod cyclotomic;
pub(crate) mod interval;
pub(crate) mod roots;
pub mod unit_circle;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{KnotError, Result};
use crate::matrix::IntMatrix;
use crate::poly::{interpolate_integer, IntPolynomial};
use cyclotomic::{cyclotomic_polynomial, div_exact_monic, CyclotomicField, Elem};
pub use unit_circle::UnitCirclePoint;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct SignatureTriple {
    pub positive: usize,
    pub negative: usize,
    pub nullity: usize,
}

impl SignatureTriple {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.nullity
    }

    /// Same form with the opposite sign.
    pub fn negated(&self) -> Self {
        SignatureTriple { positive: self.negative, negative: self.positive, nullity: self.nullity }
    }
}

/// Signature of a symmetric rational matrix by symmetric congruence.
pub fn signature_rational(mut h: Vec<Vec<BigRational>>) -> Result<SignatureTriple> {
    let n = h.len();
    for (i, row) in h.iter().enumerate() {
        if row.len() != n {
            return Err(KnotError::NotSquare { rows: n, cols: row.len() });
        }
        for j in 0..i {
            if h[i][j] != h[j][i] {
                return Err(KnotError::NotSymmetric);
            }
        }
    }
    let mut active: Vec<usize> = (0..n).collect();
    let mut out = SignatureTriple::default();
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !h[i][i].is_zero()) {
            let i = active.remove(pos);
            let d = h[i][i].clone();
            if d.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            for &j in &active {
                if h[j][i].is_zero() {
                    continue;
                }
                let f = &h[j][i] / &d;
                for &k in &active {
                    if !h[i][k].is_zero() {
                        let delta = &f * &h[i][k];
                        h[j][k] -= delta;
                    }
                }
            }
            continue;
        }
        let pair = active
            .iter()
            .flat_map(|&i| active.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| i != j && !h[i][j].is_zero());
        match pair {
            Some((i, j)) => {
                // v_i ← v_i + v_j makes the diagonal entry 2·h_ij
                for &r in &active {
                    let v = h[r][j].clone();
                    h[r][i] += v;
                }
                for &c in &active {
                    let v = h[j][c].clone();
                    h[i][c] += v;
                }
            }
            None => {
                out.nullity = active.len();
                break;
            }
        }
    }
    Ok(out)
}

/// Exact `(p, n, z)` of a symmetric integer matrix.
pub fn signature_symmetric(m: &IntMatrix) -> Result<SignatureTriple> {
    if !m.is_symmetric() {
        return Err(KnotError::NotSymmetric);
    }
    let rows = m.rows().into_iter().map(|r| r.into_iter().map(|v| BigRational::from_integer(v.into())).collect()).collect();
    signature_rational(rows)
}

/// `M_ω = (1 − ω)A + (1 − ω̄)Aᵀ` over `Q(ζ)` with `ω = ζ^p`.
fn omega_matrix(field: &CyclotomicField, a: &IntMatrix, p: i64) -> Vec<Vec<Elem>> {
    let n = a.dim();
    let one = field.one();
    let c1 = field.sub(&one, &field.zeta_pow(p));
    let c2 = field.sub(&one, &field.zeta_pow(-p));
    let scaled = |c: &Elem, v: i64| field.scale(c, &BigRational::from_integer(v.into()));
    (0..n)
        .map(|i| (0..n).map(|j| field.add(&scaled(&c1, a.get(i, j)), &scaled(&c2, a.get(j, i)))).collect())
        .collect()
}

/// Congruence diagonalization of a Hermitian matrix over a cyclotomic field.
/// Returns the real pivots and the nullity.
fn hermitian_pivots(field: &CyclotomicField, mut h: Vec<Vec<Elem>>) -> Result<(Vec<Elem>, usize)> {
    let mut active: Vec<usize> = (0..h.len()).collect();
    let mut pivots = Vec::new();
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !field.is_zero(&h[i][i])) {
            let i = active.remove(pos);
            let d = h[i][i].clone();
            let dinv = field.inv(&d)?;
            for &j in &active {
                if field.is_zero(&h[j][i]) {
                    continue;
                }
                let f = field.mul(&h[j][i], &dinv);
                for &k in &active {
                    if !field.is_zero(&h[i][k]) {
                        let delta = field.mul(&f, &h[i][k]);
                        h[j][k] = field.sub(&h[j][k], &delta);
                    }
                }
            }
            pivots.push(d);
            continue;
        }
        let pair = active
            .iter()
            .flat_map(|&i| active.iter().map(move |&j| (i, j)))
            .find(|&(i, j)| i != j && !field.is_zero(&h[i][j]));
        match pair {
            Some((i, j)) => {
                // P = I + λE_ji with λ = conj(h_ij): the new h_ii is 2|h_ij|²
                let lambda = field.conj(&h[i][j]);
                let lambda_bar = h[i][j].clone();
                for &r in &active {
                    let v = field.mul(&lambda, &h[r][j]);
                    h[r][i] = field.add(&h[r][i], &v);
                }
                for &c in &active {
                    let v = field.mul(&lambda_bar, &h[j][c]);
                    h[i][c] = field.add(&h[i][c], &v);
                }
            }
            None => return Ok((pivots, active.len())),
        }
    }
    Ok((pivots, 0))
}

fn triple_from_pivots(field: &CyclotomicField, pivots: &[Elem], nullity: usize, embedding: u32) -> Result<SignatureTriple> {
    let mut t = SignatureTriple { nullity, ..Default::default() };
    for d in pivots {
        match field.real_sign(d, embedding)? {
            Ordering::Greater => t.positive += 1,
            Ordering::Less => t.negative += 1,
            Ordering::Equal => return Err(KnotError::Invariant("zero pivot survived elimination".into())),
        }
    }
    Ok(t)
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

/// Signature of `M_ω` without the sign convention applied.
fn raw_levine_tristram_many(a: &IntMatrix, omegas: &[UnitCirclePoint]) -> Result<Vec<SignatureTriple>> {
    let mut out: Vec<Option<SignatureTriple>> = vec![None; omegas.len()];
    if a.dim() == 0 {
        return Ok(vec![SignatureTriple::default(); omegas.len()]);
    }
    for i in 0..omegas.len() {
        if out[i].is_some() {
            continue;
        }
        let base = omegas[i];
        let order = base.field_order();
        let field = CyclotomicField::new(order);
        let (pivots, nullity) = hermitian_pivots(&field, omega_matrix(&field, a, base.p() as i64))?;
        // every requested point in the Galois orbit of ω reuses the elimination
        for j in i..omegas.len() {
            if out[j].is_some() || omegas[j].q() != base.q() {
                continue;
            }
            let target = omegas[j].p();
            let unit = (1..order).find(|&u| gcd_u32(u, order) == 1 && (base.p() * u) % order == target);
            if let Some(u) = unit {
                out[j] = Some(triple_from_pivots(&field, &pivots, nullity, u)?);
            }
        }
    }
    Ok(out.into_iter().map(|t| t.expect("every point handled")).collect())
}

/// Levine–Tristram signature at each point, positive links counted positive.
pub fn levine_tristram_many(a: &IntMatrix, omegas: &[UnitCirclePoint]) -> Result<Vec<SignatureTriple>> {
    Ok(raw_levine_tristram_many(a, omegas)?.into_iter().map(|t| t.negated()).collect())
}

pub fn levine_tristram(a: &IntMatrix, omega: &UnitCirclePoint) -> Result<SignatureTriple> {
    Ok(levine_tristram_many(a, std::slice::from_ref(omega))?.remove(0))
}

/// Classical signature, same convention as [`levine_tristram`].
pub fn seifert_signature(a: &IntMatrix) -> Result<SignatureTriple> {
    Ok(signature_symmetric(&a.symmetrize())?.negated())
}

/// `det(tA − Aᵀ)` with no normalization.
pub fn alexander_raw(a: &IntMatrix) -> IntPolynomial {
    let n = a.dim();
    let xs: Vec<i64> = (0..=n as i64).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|&t| {
            let mut m = IntMatrix::zeros(n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, t * a.get(i, j) - a.get(j, i));
                }
            }
            m.det()
        })
        .collect();
    interpolate_integer(&xs, &ys).expect("determinant is an integer polynomial")
}

/// Rewrites a Laurent polynomial `f(s)` with `f(1/s) = ±f(s)` in the
/// variable `z = s − s⁻¹`.
pub fn laurent_to_z(f: &IntPolynomial) -> Result<IntPolynomial> {
    let mut rest = f.clone();
    let mut out: Vec<BigInt> = Vec::new();
    while !rest.is_zero() {
        let d = rest.max_exp();
        if d < 0 {
            return Err(KnotError::Invariant(format!("{} is not symmetric in s", f.render("s"))));
        }
        let c = rest.leading().expect("nonzero").clone();
        // (s − 1/s)^d = Σ C(d,k) (−1)^k s^(d − 2k)
        let du = d as usize;
        let mut binom = BigInt::one();
        let mut coeffs = vec![BigInt::zero(); 2 * du + 1];
        for k in 0..=du {
            let v = if k % 2 == 0 { binom.clone() } else { -binom.clone() };
            coeffs[2 * du - 2 * k] = &c * v;
            binom = binom * BigInt::from(du - k) / BigInt::from(k + 1);
        }
        let term = IntPolynomial::new(-d, coeffs);
        rest = sub(&rest, &term);
        if out.len() <= du {
            out.resize(du + 1, BigInt::zero());
        }
        out[du] += c;
    }
    Ok(IntPolynomial::new(0, out))
}

fn sub(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() {
        return b.neg();
    }
    if b.is_zero() {
        return a.clone();
    }
    let lo = a.min_exp().min(b.min_exp());
    let hi = a.max_exp().max(b.max_exp());
    IntPolynomial::new(lo, (lo..=hi).map(|e| a.coeff(e) - b.coeff(e)).collect())
}

/// Conway polynomial from a Seifert matrix:
/// `∇(s − s⁻¹) = (−1)^n s^(−n) det(s²A − Aᵀ)`.
pub fn conway_from_seifert(a: &IntMatrix) -> Result<IntPolynomial> {
    let raw = alexander_raw(a);
    let n = a.dim() as i64;
    let mut f = IntPolynomial::zero();
    if !raw.is_zero() {
        let mut coeffs = vec![BigInt::zero(); 2 * (raw.max_exp() - raw.min_exp()) as usize + 1];
        for e in raw.min_exp()..=raw.max_exp() {
            coeffs[2 * (e - raw.min_exp()) as usize] = raw.coeff(e);
        }
        f = IntPolynomial::new(2 * raw.min_exp() - n, coeffs);
        if n % 2 == 1 {
            f = f.neg();
        }
    }
    laurent_to_z(&f)
}

fn eval_in_field(field: &CyclotomicField, p: &IntPolynomial, power: i64) -> Elem {
    let mut acc = field.zero();
    for e in p.min_exp()..=p.max_exp() {
        let c = p.coeff(e);
        if c.is_zero() {
            continue;
        }
        let term = field.scale(&field.zeta_pow(power * e), &BigRational::from_integer(c));
        acc = field.add(&acc, &term);
    }
    acc
}

fn field_det(field: &CyclotomicField, mut m: Vec<Vec<Elem>>) -> Result<Elem> {
    let n = m.len();
    let mut det = field.one();
    for k in 0..n {
        let Some(r) = (k..n).find(|&r| !field.is_zero(&m[r][k])) else {
            return Ok(field.zero());
        };
        if r != k {
            m.swap(r, k);
            det = field.neg(&det);
        }
        let inv = field.inv(&m[k][k])?;
        det = field.mul(&det, &m[k][k]);
        for i in k + 1..n {
            if field.is_zero(&m[i][k]) {
                continue;
            }
            let f = field.mul(&m[i][k], &inv);
            for j in k..n {
                let delta = field.mul(&f, &m[k][j]);
                m[i][j] = field.sub(&m[i][j], &delta);
            }
        }
    }
    Ok(det)
}

/// Checks `det(M_ω) = (−(1 − ω̄))^n · Δ(ω)` exactly, where `Δ` is
/// [`alexander_raw`] of the same matrix.
pub fn det_relation_check(a: &IntMatrix, omega: &UnitCirclePoint, delta_raw: &IntPolynomial) -> Result<bool> {
    let n = a.dim();
    if !delta_raw.is_zero() && (delta_raw.min_exp() < 0 || delta_raw.max_exp() > n as i64) {
        return Err(KnotError::DimensionMismatch(delta_raw.max_exp().max(0) as usize, n));
    }
    let field = CyclotomicField::new(omega.field_order());
    let p = omega.p() as i64;
    let lhs = field_det(&field, omega_matrix(&field, a, p))?;
    let factor = field.neg(&field.sub(&field.one(), &field.zeta_pow(-p)));
    let mut rhs = eval_in_field(&field, delta_raw, p);
    for _ in 0..n {
        rhs = field.mul(&rhs, &factor);
    }
    Ok(lhs == rhs)
}

/// `det(M_ω)` as an exact element of `Q(ζ)`, `ζ = exp(iπ/q)`, in power-basis
/// coordinates. The value is real; its sign is certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaDeterminant {
    pub order: u32,
    pub coords: Elem,
    pub sign: Ordering,
}

impl OmegaDeterminant {
    /// Floating-point value, for display only.
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        let n = self.order as f64;
        self.coords
            .iter()
            .enumerate()
            .map(|(k, c)| c.to_f64().unwrap_or(f64::NAN) * (2.0 * std::f64::consts::PI * k as f64 / n).cos())
            .sum()
    }
}

impl Serialize for OmegaDeterminant {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("OmegaDeterminant", 4)?;
        st.serialize_field("field_order", &self.order)?;
        st.serialize_field("coords", &self.coords.iter().map(rational_string).collect::<Vec<_>>())?;
        st.serialize_field("sign", &(self.sign as i8))?;
        st.serialize_field("approx", &self.approx())?;
        st.end()
    }
}

pub fn omega_det(a: &IntMatrix, omega: &UnitCirclePoint) -> Result<OmegaDeterminant> {
    let field = CyclotomicField::new(omega.field_order());
    let coords = field_det(&field, omega_matrix(&field, a, omega.p() as i64))?;
    let sign = field.real_sign(&coords, 1)?;
    Ok(OmegaDeterminant { order: omega.field_order(), coords, sign })
}

/// `det(M_ω)` is nonzero.
pub fn is_nondegenerate(a: &IntMatrix, omega: &UnitCirclePoint) -> Result<bool> {
    let field = CyclotomicField::new(omega.field_order());
    Ok(!field.is_zero(&field_det(&field, omega_matrix(&field, a, omega.p() as i64))?))
}

/// `Δ(ω) ≠ 0` for an integer Laurent polynomial.
pub fn nonvanishing_at(delta: &IntPolynomial, omega: &UnitCirclePoint) -> bool {
    let field = CyclotomicField::new(omega.field_order());
    !field.is_zero(&eval_in_field(&field, delta, omega.p() as i64))
}

/// A root of the Alexander polynomial on the unit circle, located within a
/// closed interval of angles (units of π). Exact roots have `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct JumpPoint {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl JumpPoint {
    pub fn exact(&self) -> Option<UnitCirclePoint> {
        if self.lo != self.hi {
            return None;
        }
        let p = self.lo.numer().to_string().parse().ok()?;
        let q = self.lo.denom().to_string().parse().ok()?;
        UnitCirclePoint::new(p, q).ok()
    }

    pub fn contains(&self, r: &BigRational) -> bool {
        &self.lo <= r && r <= &self.hi
    }
}

pub(crate) fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl Serialize for JumpPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("JumpPoint", 2)?;
        st.serialize_field("lo", &rational_string(&self.lo))?;
        st.serialize_field("hi", &rational_string(&self.hi))?;
        st.end()
    }
}

const ANGLE_BITS: u32 = 30;

/// `sin(π·α/2)` compared against `x`, when certified.
fn sin_half_cmp(alpha: &BigRational, x: &BigRational) -> Option<Ordering> {
    let w = 80;
    let r = (BigRational::one() - alpha) / BigInt::from(2);
    let f = interval::cos_pi(&r, w);
    let scale = BigRational::from_integer(BigInt::one() << w);
    let target = x * &scale;
    let lo = BigRational::from_integer(&f.value - &f.err);
    let hi = BigRational::from_integer(&f.value + &f.err);
    if hi < target {
        Some(Ordering::Less)
    } else if lo > target {
        Some(Ordering::Greater)
    } else {
        None
    }
}

/// Angle interval `[α_lo, α_hi]` in `[0, 1]` with `sin(πα/2)` covering `[x_lo, x_hi]`.
fn arcsin_interval(x_lo: &BigRational, x_hi: &BigRational) -> (BigRational, BigRational) {
    let denom = BigInt::one() << ANGLE_BITS;
    let at = |k: &BigInt| BigRational::new(k.clone(), denom.clone());
    // largest α with sin(πα/2) certified below x_lo
    let (mut a, mut b) = (BigInt::zero(), denom.clone());
    while &b - &a > BigInt::one() {
        let m = (&a + &b) / 2;
        if sin_half_cmp(&at(&m), x_lo) == Some(Ordering::Less) {
            a = m;
        } else {
            b = m;
        }
    }
    let lo = at(&a);
    // smallest α with sin(πα/2) certified above x_hi
    let (mut a, mut b) = (BigInt::zero(), denom.clone());
    while &b - &a > BigInt::one() {
        let m = (&a + &b) / 2;
        if sin_half_cmp(&at(&m), x_hi) == Some(Ordering::Greater) {
            b = m;
        } else {
            a = m;
        }
    }
    (lo, at(&b))
}

/// Unit-circle roots of the Alexander polynomial other than `t = 1`.
/// The Levine–Tristram signature is constant between consecutive points.
pub fn jump_points(a: &IntMatrix) -> Result<Vec<JumpPoint>> {
    let raw = alexander_raw(a);
    if raw.is_zero() {
        return Err(KnotError::DegenerateAlexander);
    }
    let mut p: Vec<BigInt> = raw.coeffs.clone();
    let phi1 = cyclotomic_polynomial(1);
    while let Some(q) = div_exact_monic(&p, &phi1) {
        p = q;
    }
    let mut out = Vec::new();
    let deg = p.len() - 1;
    let max_order = (2 * deg * deg).max(2) as u32;
    for order in 2..=max_order {
        let phi = cyclotomic_polynomial(order);
        if phi.len() > p.len() {
            continue;
        }
        let mut found = false;
        while let Some(q) = div_exact_monic(&p, &phi) {
            p = q;
            found = true;
        }
        if found {
            for k in 1..order {
                if gcd_u32(k, order) == 1 {
                    let angle = BigRational::new(BigInt::from(2 * k), BigInt::from(order));
                    out.push(JumpPoint { lo: angle.clone(), hi: angle });
                }
            }
        }
    }
    let d = p.len() as i64 - 1;
    if d > 0 {
        // f(s) = s^(−d) P(s²) is symmetric; write it in z = s − 1/s = 2i·x
        let mut coeffs = vec![BigInt::zero(); 2 * d as usize + 1];
        for (e, c) in p.iter().enumerate() {
            coeffs[2 * e] = c.clone();
        }
        let z = laurent_to_z(&IntPolynomial::new(-d, coeffs))?;
        let mut g = vec![BigInt::zero(); z.max_exp().max(0) as usize + 1];
        for k in z.min_exp()..=z.max_exp() {
            let c = z.coeff(k);
            if c.is_zero() {
                continue;
            }
            let sign = if ((k - d) / 2).rem_euclid(2) == 0 { 1 } else { -1 };
            g[k as usize] = c * (BigInt::one() << k as usize) * sign;
        }
        let g = roots::from_ints(&g);
        let width = BigRational::new(BigInt::one(), BigInt::one() << ANGLE_BITS);
        for (x_lo, x_hi) in roots::isolate(&g, &BigRational::zero(), &BigRational::one(), &width) {
            let (lo, hi) = arcsin_interval(&x_lo, &x_hi);
            let two = BigRational::from_integer(BigInt::from(2));
            out.push(JumpPoint { lo: &two - &hi, hi: &two - &lo });
            out.push(JumpPoint { lo, hi });
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}
