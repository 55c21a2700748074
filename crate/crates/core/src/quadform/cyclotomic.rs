//! Exact arithmetic in the cyclotomic field `Q(ζ)`, `ζ = exp(2πi/order)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::{Lazy, OnceCell};

use super::interval::{certified_sign, cos_table};
use crate::error::{KnotError, Result};

/// Field element: coefficients of `1, ζ, …, ζ^(deg−1)`.
pub type Elem = Vec<BigRational>;

const START_BITS: u32 = 64;
const MAX_BITS: u32 = 1 << 14;

#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    /// Monic cyclotomic polynomial, lowest coefficient first.
    modulus: Vec<BigInt>,
    powers: OnceCell<Vec<Elem>>,
}

static FIELDS: Lazy<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = Lazy::new(|| Mutex::new(HashMap::new()));
static CYCLOTOMIC: Lazy<Mutex<HashMap<u32, Vec<BigInt>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Integer polynomial division by a monic divisor; `None` unless exact.
pub(crate) fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    let dn = den.len() - 1;
    if num.len() < den.len() {
        return if num.iter().all(Zero::is_zero) { Some(Vec::new()) } else { None };
    }
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    if rem.iter().all(Zero::is_zero) {
        Some(quot)
    } else {
        None
    }
}

/// `Φ_n` with the lowest coefficient first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1);
    if let Some(p) = CYCLOTOMIC.lock().expect("cyclotomic cache").get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = div_exact_monic(&num, &cyclotomic_polynomial(d)).expect("Φ_d divides x^n − 1");
        }
    }
    CYCLOTOMIC.lock().expect("cyclotomic cache").insert(n, num.clone());
    num
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

impl CyclotomicField {
    pub fn new(order: u32) -> Arc<CyclotomicField> {
        let mut cache = FIELDS.lock().expect("field cache");
        cache
            .entry(order)
            .or_insert_with(|| Arc::new(CyclotomicField { order, modulus: cyclotomic_polynomial(order), powers: OnceCell::new() }))
            .clone()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> Elem {
        vec![BigRational::zero(); self.degree()]
    }

    pub fn from_rational(&self, r: BigRational) -> Elem {
        let mut e = self.zero();
        e[0] = r;
        e
    }

    pub fn from_int(&self, v: i64) -> Elem {
        self.from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn one(&self) -> Elem {
        self.from_int(1)
    }

    fn reduce(&self, mut p: Vec<BigRational>) -> Elem {
        let deg = self.degree();
        for k in (deg..p.len()).rev() {
            let c = std::mem::take(&mut p[k]);
            if c.is_zero() {
                continue;
            }
            for (i, m) in self.modulus.iter().enumerate().take(deg) {
                p[k - deg + i] -= &c * BigRational::from_integer(m.clone());
            }
        }
        p.truncate(deg);
        p.resize(deg, BigRational::zero());
        p
    }

    fn powers(&self) -> &[Elem] {
        self.powers.get_or_init(|| {
            let mut out = Vec::with_capacity(self.order as usize);
            let mut cur = self.one();
            for _ in 0..self.order {
                out.push(cur.clone());
                let mut shifted = vec![BigRational::zero()];
                shifted.extend(cur);
                cur = self.reduce(shifted);
            }
            out
        })
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> Elem {
        let n = self.order as i64;
        self.powers()[k.rem_euclid(n) as usize].clone()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        a.iter().map(|x| -x).collect()
    }

    pub fn scale(&self, a: &Elem, r: &BigRational) -> Elem {
        a.iter().map(|x| x * r).collect()
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let deg = self.degree();
        let mut prod = vec![BigRational::zero(); 2 * deg];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        a.iter().all(Zero::is_zero)
    }

    /// Complex conjugation, `ζ ↦ ζ^(−1)`.
    pub fn conj(&self, a: &Elem) -> Elem {
        let mut out = self.zero();
        for (k, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &self.powers()[(self.order as usize - k) % self.order as usize];
            for (o, pc) in out.iter_mut().zip(p) {
                *o += c * pc;
            }
        }
        out
    }

    /// Galois automorphism `ζ ↦ ζ^u` with `gcd(u, order) = 1`.
    pub fn galois(&self, a: &Elem, u: u32) -> Elem {
        let mut out = self.zero();
        for (k, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &self.powers()[(k * u as usize) % self.order as usize];
            for (o, pc) in out.iter_mut().zip(p) {
                *o += c * pc;
            }
        }
        out
    }

    /// Multiplicative inverse by the extended Euclidean algorithm in `Q[x]`.
    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        if self.is_zero(a) {
            return Err(KnotError::Invariant("inverse of zero in a cyclotomic field".into()));
        }
        let trim = |mut p: Vec<BigRational>| {
            while p.last().map_or(false, Zero::is_zero) {
                p.pop();
            }
            p
        };
        let mut r0: Vec<BigRational> = self.modulus.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let mut r1 = trim(a.clone());
        let mut t0: Vec<BigRational> = Vec::new();
        let mut t1: Vec<BigRational> = vec![BigRational::one()];
        while r1.len() > 1 {
            // r0 = q·r1 + r
            let mut rem = r0.clone();
            let lead = r1.last().expect("non-empty").clone();
            let mut q = vec![BigRational::zero(); rem.len() + 1 - r1.len()];
            while rem.len() >= r1.len() {
                let shift = rem.len() - r1.len();
                let c = rem.last().expect("non-empty").clone() / &lead;
                for (i, x) in r1.iter().enumerate() {
                    rem[shift + i] -= &c * x;
                }
                q[shift] = c;
                rem.pop();
                rem = trim(rem);
            }
            // t_new = t0 − q·t1
            let mut qt = vec![BigRational::zero(); q.len() + t1.len()];
            for (i, x) in q.iter().enumerate() {
                for (j, y) in t1.iter().enumerate() {
                    qt[i + j] += x * y;
                }
            }
            let len = qt.len().max(t0.len());
            let mut t2 = vec![BigRational::zero(); len];
            for (i, x) in t0.iter().enumerate() {
                t2[i] += x;
            }
            for (i, x) in qt.iter().enumerate() {
                t2[i] -= x;
            }
            r0 = std::mem::replace(&mut r1, rem);
            t0 = std::mem::replace(&mut t1, trim(t2));
        }
        let c = r1.first().cloned().ok_or_else(|| KnotError::Invariant("element shares a factor with Φ".into()))?;
        let inv_c = BigRational::one() / c;
        let mut t: Vec<BigRational> = t1.into_iter().map(|x| x * &inv_c).collect();
        t.resize(t.len().max(2 * self.degree()), BigRational::zero());
        Ok(self.reduce(t))
    }

    /// Sign of a real element under the embedding `ζ ↦ exp(2πiu/order)`.
    pub fn real_sign(&self, a: &Elem, u: u32) -> Result<Ordering> {
        if self.is_zero(a) {
            return Ok(Ordering::Equal);
        }
        let n = self.order as usize;
        let mut bits = START_BITS;
        while bits <= MAX_BITS {
            let table = cos_table(self.order, bits);
            let terms: Vec<(BigRational, &super::interval::Fixed)> = a
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (c.clone(), &table[(k * u as usize) % n]))
                .collect();
            if let Some(s) = certified_sign(&terms) {
                return Ok(s);
            }
            bits *= 2;
        }
        Err(KnotError::Uncertified(MAX_BITS))
    }

    /// `true` when the element is fixed by conjugation.
    pub fn is_real(&self, a: &Elem) -> bool {
        &self.conj(a) == a
    }
}
