use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Polynomial in one variable with arbitrary-precision integer coefficients,
/// stored in ascending degree order without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Number of zero roots: the index of the lowest nonzero coefficient.
    pub fn zero_root_multiplicity(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::Domain("zero polynomial has no root multiplicity".into()))
    }

    /// Divide by `x^k`. The lowest `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(self.coeffs.iter().take(k).all(Zero::is_zero));
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Exact square root with non-negative leading coefficient, if one exists.
    pub fn sqrt(&self) -> Option<IntPolynomial> {
        let Some(deg) = self.degree() else {
            return Some(Self::zero());
        };
        if deg % 2 == 1 {
            return None;
        }
        let lead = &self.coeffs[deg];
        if lead.is_negative() {
            return None;
        }
        let m = deg / 2;
        let root_lead = num_integer::Roots::sqrt(lead);
        if &(&root_lead * &root_lead) != lead {
            return None;
        }
        let mut q = vec![BigInt::zero(); m + 1];
        q[m] = root_lead;
        let two_lead = &q[m] * 2;
        // Coefficient of x^(m+k) in q^2 is 2 q_m q_k plus products of
        // coefficients above k.
        for k in (0..m).rev() {
            let mut rest = self.coeffs[m + k].clone();
            for i in k + 1..m {
                let j = m + k - i;
                if j > k && j <= m && j != m {
                    rest -= &q[i] * &q[j];
                }
            }
            let (quo, rem) = num_integer::Integer::div_rem(&rest, &two_lead);
            if !rem.is_zero() {
                return None;
            }
            q[k] = quo;
        }
        let root = IntPolynomial::new(q);
        (&root * &root == *self).then_some(root)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, o: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, o: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, o: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || o.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "E")?,
                _ => write!(f, "E^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn zero_root_multiplicity() {
        assert_eq!(p(&[0, -3, 0, 1]).zero_root_multiplicity().unwrap(), 1);
        // E^2 (E - 1)^2 = E^4 - 2E^3 + E^2
        assert_eq!(p(&[0, 0, 1, -2, 1]).zero_root_multiplicity().unwrap(), 2);
        assert_eq!(p(&[5]).zero_root_multiplicity().unwrap(), 0);
        assert!(IntPolynomial::zero().zero_root_multiplicity().is_err());
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        assert_eq!(&a * &b, p(&[-1, -1, 1, 1]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!(&a + &b, p(&[0, 1, 1]));
        assert_eq!(a.eval(&BigInt::from(3)), BigInt::from(8));
        assert_eq!(format!("{a}"), "E^2 - 1");
        assert_eq!(format!("{}", p(&[-2, -3, 0, 1])), "E^3 - 3E - 2");
    }

    #[test]
    fn exact_square_roots() {
        let q = p(&[3, -2, 0, 5]);
        let sq = &q * &q;
        let r = sq.sqrt().unwrap();
        assert_eq!(&r * &r, sq);
        assert_eq!(r.leading_coefficient(), Some(&BigInt::from(5)));
        assert_eq!(p(&[0, 0, 1]).sqrt(), Some(p(&[0, 1])));
        assert_eq!(p(&[1, 0, 1]).sqrt(), None);
        assert_eq!(p(&[0, 1]).sqrt(), None);
        assert_eq!(p(&[-1]).sqrt(), None);
        assert_eq!(IntPolynomial::zero().sqrt(), Some(IntPolynomial::zero()));
    }
}
