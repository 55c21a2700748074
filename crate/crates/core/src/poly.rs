//! Integer Laurent polynomials in one variable.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// `Σ coeffs[k] · x^(offset + k)`. Canonical form has no zero coefficient at
/// either end; the zero polynomial is the empty vector with offset 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    pub offset: i64,
    pub coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { offset: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { offset: 0, coeffs: vec![BigInt::one()] }
    }

    pub fn new(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { offset, coeffs };
        p.trim();
        p
    }

    pub fn from_i64(offset: i64, coeffs: &[i64]) -> Self {
        Self::new(offset, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.offset = 0;
            return;
        }
        self.coeffs.drain(..lead);
        self.offset += lead as i64;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exp(&self) -> i64 {
        self.offset
    }

    pub fn max_exp(&self) -> i64 {
        self.offset + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.offset;
        if k < 0 || k as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> Self {
        IntPolynomial { offset: self.offset, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn shift(&self, by: i64) -> Self {
        IntPolynomial { offset: self.offset + by, coeffs: self.coeffs.clone() }
    }

    /// `p(1/x)`.
    pub fn invert_variable(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPolynomial { offset: -self.max_exp(), coeffs }
    }

    /// Equality up to multiplication by `±x^k`.
    pub fn equal_up_to_units(&self, other: &Self) -> bool {
        if self.coeffs.len() != other.coeffs.len() {
            return false;
        }
        self.coeffs == other.coeffs || self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| *a == -b)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        if self.offset >= 0 {
            acc * num_traits::pow(x.clone(), self.offset as usize)
        } else {
            acc / num_traits::pow(x.clone(), (-self.offset) as usize)
        }
    }

    pub fn eval_i64(&self, x: i64) -> BigRational {
        self.eval_rational(&BigRational::from_integer(BigInt::from(x)))
    }

    /// Shift so that the exponent range is centred on zero (rounded down for an
    /// odd span) and make the leading coefficient positive.
    pub fn symmetric_normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let span = self.coeffs.len() as i64 - 1;
        let mut p = IntPolynomial { offset: -(span / 2), coeffs: self.coeffs.clone() };
        if p.leading().map_or(false, |c| c.is_negative()) {
            p = p.neg();
        }
        p
    }

    /// Human-readable rendering in variable `var`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.offset + k as i64;
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let show_coeff = e == 0 || !mag.is_one();
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            match e {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&e.to_string());
                }
            }
        }
        out
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<serde_json::Value> = self.coeffs.iter().map(bigint_json).collect();
        let mut st = s.serialize_struct("IntPolynomial", 2)?;
        st.serialize_field("offset", &self.offset)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

/// Interpolate the integer polynomial of degree `< xs.len()` through
/// `(xs[i], ys[i])`. Fails if the interpolant has non-integral coefficients.
pub(crate) fn interpolate_integer(xs: &[i64], ys: &[BigInt]) -> Option<IntPolynomial> {
    let n = xs.len();
    let mut result = vec![BigRational::zero(); n];
    for i in 0..n {
        // basis polynomial l_i(x) = Π_{j≠i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in 0..n {
            if i == j {
                continue;
            }
            let xj = BigRational::from_integer(BigInt::from(xs[j]));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b.clone();
                next[k] -= b * &xj;
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(xs[i] - xs[j]));
        }
        let scale = BigRational::from_integer(ys[i].clone()) / denom;
        for (k, b) in basis.into_iter().enumerate() {
            result[k] += b * &scale;
        }
    }
    let mut coeffs = Vec::with_capacity(n);
    for c in result {
        if !c.is_integer() {
            return None;
        }
        coeffs.push(c.to_integer());
    }
    Some(IntPolynomial::new(0, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trimming_and_offsets() {
        let p = IntPolynomial::from_i64(-2, &[0, 0, 1, -1, 1, 0]);
        assert_eq!(p.offset, 0);
        assert_eq!(p.coeffs.len(), 3);
        assert_eq!(p.render("t"), "t^2 - t + 1");
        assert!(IntPolynomial::from_i64(3, &[0, 0]).is_zero());
    }

    #[test]
    fn symmetric_normalization_of_trefoil() {
        let p = IntPolynomial::from_i64(0, &[-1, 1, -1]);
        let q = p.symmetric_normalized();
        assert_eq!(q.offset, -1);
        assert_eq!(q.coeffs, vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
        assert!(q.equal_up_to_units(&q.invert_variable()));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let xs = [0, 1, 2, 3];
        let ys: Vec<BigInt> = xs.iter().map(|&x| BigInt::from(x * x * x - 2 * x + 5)).collect();
        let p = interpolate_integer(&xs, &ys).unwrap();
        assert_eq!(p, IntPolynomial::from_i64(0, &[5, -2, 0, 1]));
    }
}
