//! Truncated power series in one indeterminate with exact rational coefficients.

use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::arith::{factorial, rational_from_int, rational_from_uint};
use crate::error::{Error, Result};
use crate::Rational;

/// `c_0 + c_1 z + … + c_K z^K + O(z^{K+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Pads with zeros or truncates `coeffs` to exactly `order + 1` terms.
    pub fn from_coefficients(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        PowerSeries { coeffs }
    }

    /// `1 / (1 − c z) = Σ c^j z^j`.
    pub fn geometric(c: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = Rational::one();
        for _ in 0..=order {
            coeffs.push(power.clone());
            power *= c;
        }
        PowerSeries { coeffs }
    }

    /// `sinh(z/2) / (z/2) = Σ z^{2j} / (4^j (2j+1)!)`.
    pub fn sinh_half_ratio(order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|i| {
                if i % 2 == 1 {
                    return Rational::zero();
                }
                let j = i / 2;
                let den = rational_from_uint(&factorial(2 * j + 1))
                    * num_traits::pow(rational_from_int(4), j);
                den.recip()
            })
            .collect();
        PowerSeries { coeffs }
    }

    /// The truncation order `K`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^k`; zero beyond the stored terms is *not* implied, so `k` must
    /// not exceed the order.
    pub fn coefficient(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut result = PowerSeries::one(self.order());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::OutOfRange(
                "series with zero constant term has no inverse".into(),
            ));
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for k in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out.push(-acc * &inv0);
        }
        Ok(PowerSeries { coeffs: out })
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs }
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn sinh_series_terms() {
        let s = PowerSeries::sinh_half_ratio(4);
        assert_eq!(
            s.coefficients(),
            &[q(1, 1), q(0, 1), q(1, 24), q(0, 1), q(1, 1920)]
        );
        let sq = s.pow(2);
        assert_eq!(sq.coefficient(2), &q(1, 12));
        assert_eq!(s.pow(4).coefficient(2), &q(1, 6));
        assert_eq!(s.pow(0), PowerSeries::one(4));
    }

    #[test]
    fn geometric_inverse() {
        let g = PowerSeries::geometric(&q(3, 1), 6);
        let inv = g.inverse().unwrap();
        assert_eq!(inv.coefficients()[..2], [q(1, 1), q(-3, 1)]);
        assert!(inv.coefficients()[2..].iter().all(Zero::is_zero));
        assert_eq!(&g * &inv, PowerSeries::one(6));
        assert!(PowerSeries::zero(3).inverse().is_err());
    }

    #[test]
    fn truncation_follows_shorter_operand() {
        let a = PowerSeries::one(5);
        let b = PowerSeries::one(2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
    }
}
