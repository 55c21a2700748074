//! Certified fixed-point enclosures of π and cos(π·r) for rational r.
//!
//! A value is carried as `(v, e)` meaning the true number lies in
//! `[(v − e)/2^w, (v + e)/2^w]`. Every truncation is accounted for in `e`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

#[derive(Clone, Debug)]
pub(crate) struct Fixed {
    pub value: BigInt,
    pub err: BigInt,
}

static PI_CACHE: Lazy<Mutex<HashMap<u32, Fixed>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// `arctan(1/m)` scaled by `2^w`, and the number of ulps of error.
fn arctan_recip(m: u32, w: u32) -> (BigInt, u64) {
    let m2 = BigInt::from(m) * BigInt::from(m);
    // floor(floor(a/b)/c) = floor(a/(bc)), so every term is a single floor
    let mut p = (BigInt::one() << w) / BigInt::from(m);
    let mut sum = BigInt::zero();
    let mut j: u64 = 0;
    while !p.is_zero() {
        let term = &p / BigInt::from(2 * j + 1);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        p /= &m2;
        j += 1;
    }
    (sum, j + 1)
}

/// π by Machin's formula.
pub(crate) fn pi_fixed(w: u32) -> Fixed {
    if let Some(f) = PI_CACHE.lock().expect("pi cache").get(&w) {
        return f.clone();
    }
    let (a5, e5) = arctan_recip(5, w);
    let (a239, e239) = arctan_recip(239, w);
    let f = Fixed { value: a5 * 16 - a239 * 4, err: BigInt::from(16 * e5 + 4 * e239) };
    PI_CACHE.lock().expect("pi cache").insert(w, f.clone());
    f
}

/// Enclosure of `cos(π·r)`.
pub(crate) fn cos_pi(r: &BigRational, w: u32) -> Fixed {
    let two = BigRational::from_integer(BigInt::from(2));
    let mut r = r.clone() % &two;
    if r.is_negative() {
        r += &two;
    }
    if r > BigRational::one() {
        r = &two - r;
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let (r, negate) = if r > half { (BigRational::one() - r, true) } else { (r, false) };
    let f = cos_small(&r, w);
    if negate {
        Fixed { value: -f.value, err: f.err }
    } else {
        f
    }
}

/// `cos(π·r)` for `0 ≤ r ≤ 1/2`, so the argument lies in `[0, π/2]`.
fn cos_small(r: &BigRational, w: u32) -> Fixed {
    let pi = pi_fixed(w);
    let one = BigInt::one() << w;
    // x = floor(P·r); the angle itself is within err_π·r + 1 ulps of it
    let x = (&pi.value * r.numer()).div_floor(r.denom());
    let x_err = &pi.err + BigInt::one();
    let x2 = (&x * &x) >> w;
    let mut term = one.clone();
    let mut sum = one;
    let mut err_term = BigInt::zero();
    let mut err_total = BigInt::zero();
    let mut j: u64 = 1;
    loop {
        let d = BigInt::from((2 * j - 1) * (2 * j));
        term = (&term * &x2 >> w) / &d;
        // x² ≤ 2.5 here; the propagated error is scaled by x²/d
        err_term = (&err_term * 5 + &d * 2 - 1) / (&d * 2) + 3;
        err_total += &err_term;
        if term.is_zero() {
            // alternating series with decreasing terms: tail below the next term
            err_total += &err_term + 1;
            break;
        }
        if j % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        j += 1;
    }
    Fixed { value: sum, err: err_total + x_err }
}

static COS_TABLES: Lazy<Mutex<HashMap<(u32, u32), Arc<Vec<Fixed>>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// `cos(2πk/order)` for `k = 0..order`, memoized.
pub(crate) fn cos_table(order: u32, w: u32) -> Arc<Vec<Fixed>> {
    if let Some(t) = COS_TABLES.lock().expect("cos cache").get(&(order, w)) {
        return t.clone();
    }
    let table: Vec<Fixed> = (0..order)
        .map(|k| cos_pi(&BigRational::new(BigInt::from(2 * k), BigInt::from(order)), w))
        .collect();
    let table = Arc::new(table);
    COS_TABLES.lock().expect("cos cache").insert((order, w), table.clone());
    table
}

/// Certified sign of `Σ coeffs[k]·vals[k]`, or `None` if the enclosure
/// still contains zero.
pub(crate) fn certified_sign(coeffs: &[(BigRational, &Fixed)]) -> Option<std::cmp::Ordering> {
    let mut center = BigRational::zero();
    let mut radius = BigRational::zero();
    for (c, f) in coeffs {
        center += c * BigRational::from_integer(f.value.clone());
        radius += c.abs() * BigRational::from_integer(f.err.clone());
    }
    if center.abs() > radius {
        Some(if center.is_positive() { std::cmp::Ordering::Greater } else { std::cmp::Ordering::Less })
    } else {
        None
    }
}
