//! Real root isolation for rational polynomials by Sturm sequences.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense polynomial over Q, lowest coefficient first, no trailing zeros.
pub(crate) type QPoly = Vec<BigRational>;

fn trim(mut p: QPoly) -> QPoly {
    while p.last().map_or(false, Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn from_ints(c: &[BigInt]) -> QPoly {
    trim(c.iter().map(|x| BigRational::from_integer(x.clone())).collect())
}

pub(crate) fn eval(p: &QPoly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn derivative(p: &QPoly) -> QPoly {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * BigRational::from_integer(BigInt::from(k))).collect())
}

fn rem(a: &QPoly, b: &QPoly) -> QPoly {
    let mut r = a.clone();
    let lead = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().expect("non-empty").clone() / &lead;
        for (i, x) in b.iter().enumerate() {
            r[shift + i] -= &c * x;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn quot(a: &QPoly, b: &QPoly) -> QPoly {
    let mut r = a.clone();
    let lead = b.last().expect("nonzero divisor").clone();
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().expect("non-empty").clone() / &lead;
        for (i, x) in b.iter().enumerate() {
            r[shift + i] -= &c * x;
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    trim(q)
}

fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = std::mem::replace(&mut y, r);
    }
    x
}

/// `p / gcd(p, p′)`.
pub(crate) fn squarefree(p: &QPoly) -> QPoly {
    let g = gcd(p, &derivative(p));
    if g.len() <= 1 {
        p.clone()
    } else {
        quot(p, &g)
    }
}

pub(crate) struct Sturm {
    seq: Vec<QPoly>,
}

impl Sturm {
    pub fn new(p: &QPoly) -> Self {
        let mut seq = vec![p.clone(), derivative(p)];
        while seq.last().map_or(false, |q| !q.is_empty()) {
            let n = seq.len();
            let r = rem(&seq[n - 2], &seq[n - 1]);
            if r.is_empty() {
                break;
            }
            seq.push(r.into_iter().map(|c| -c).collect());
        }
        seq.retain(|q| !q.is_empty());
        Sturm { seq }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut prev = 0i8;
        for q in &self.seq {
            let v = eval(q, x);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    }

    /// Distinct roots in `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

/// Isolating intervals `(lo, hi]` of width at most `width`, one per distinct
/// root of `p` in `(a, b]`. Requires `p(a) ≠ 0`.
pub(crate) fn isolate(p: &QPoly, a: &BigRational, b: &BigRational, width: &BigRational) -> Vec<(BigRational, BigRational)> {
    let sf = squarefree(p);
    if sf.len() <= 1 {
        return Vec::new();
    }
    let sturm = Sturm::new(&sf);
    let mut out = Vec::new();
    let mut stack = vec![(a.clone(), b.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let n = sturm.count(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 && &hi - &lo <= *width {
            out.push((lo, hi));
            continue;
        }
        let mid = split_point(&sf, &lo, &hi);
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort();
    out
}

/// A point strictly inside `(lo, hi)` that is not a root, close to the middle.
fn split_point(p: &QPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let mut k = 2i64;
    loop {
        let t = BigRational::new(BigInt::one(), BigInt::from(k));
        let mid = lo + (hi - lo) * (BigRational::one() / &two + &t / BigInt::from(1000));
        if !eval(p, &mid).is_zero() {
            return mid;
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> QPoly {
        from_ints(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
    }

    #[test]
    fn isolates_quadratic_roots() {
        // x² − 2 has one root in (0, 2]
        let p = q(&[-2, 0, 1]);
        let w = BigRational::new(1.into(), 1024.into());
        let roots = isolate(&p, &BigRational::zero(), &BigRational::from_integer(2.into()), &w);
        assert_eq!(roots.len(), 1);
        let (lo, hi) = &roots[0];
        assert!(lo * lo < BigRational::from_integer(2.into()));
        assert!(hi * hi >= BigRational::from_integer(2.into()));
    }

    #[test]
    fn squarefree_counts_distinct() {
        // (x − 1/2)²(x − 3/4) scaled: roots at 1/2 and 3/4
        let p = q(&[-3, 16, -28, 16]);
        let w = BigRational::new(1.into(), (1 << 20).into());
        let roots = isolate(&p, &BigRational::zero(), &BigRational::one(), &w);
        assert_eq!(roots.len(), 2);
    }
}
