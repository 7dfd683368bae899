//! Univariate polynomials and rational functions over the rationals.
//!
//! Rational functions are stored reduced: numerator and denominator share no polynomial
//! factor, and the lowest-degree nonzero coefficient of the denominator is 1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::lcm_of_denominators;
use crate::error::{Error, Result};
use crate::series::PowerSeries;
use crate::Rational;

/// Coefficients in ascending degree, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c · z^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Polynomial::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let d_deg = divisor.degree().expect("division by the zero polynomial");
        let d_lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(n_deg) = self.degree() else {
            return (Polynomial::zero(), Polynomial::zero());
        };
        if n_deg < d_deg {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); n_deg - d_deg + 1];
        for shift in (0..=n_deg - d_deg).rev() {
            let c = &rem[shift + d_deg] / &d_lead;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * d;
            }
            quot[shift] = c;
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    fn make_monic(&self) -> Polynomial {
        match self.leading() {
            Some(lead) => self.scale(&lead.recip()),
            None => Polynomial::zero(),
        }
    }

    /// Monic greatest common divisor; zero only if both inputs are zero.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.make_monic();
        }
        a.make_monic()
    }

    /// Truncated power series of the polynomial.
    pub fn to_series(&self, order: usize) -> PowerSeries {
        PowerSeries::from_coefficients(self.coeffs.clone(), order)
    }

    fn write_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mag = crate::arith::format_rational(&magnitude);
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }

    fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new(
            (0..len)
                .map(|i| self.coefficient(i) + rhs.coefficient(i))
                .collect(),
        )
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

/// A reduced quotient of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::OutOfRange("zero denominator".into()));
        }
        Ok(RationalFunction::normalized(numerator, denominator))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction::normalized(p, Polynomial::constant(Rational::one()))
    }

    pub fn zero() -> Self {
        RationalFunction::from_polynomial(Polynomial::zero())
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return RationalFunction {
                numerator: num,
                denominator: Polynomial::constant(Rational::one()),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let low = den.lowest_degree().expect("denominator is nonzero");
        let unit = den.coefficients()[low].recip();
        RationalFunction {
            numerator: num.scale(&unit),
            denominator: den.scale(&unit),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    /// Value at a point; `None` at a pole.
    pub fn eval(&self, at: &Rational) -> Option<Rational> {
        let den = self.denominator.eval(at);
        if den.is_zero() {
            None
        } else {
            Some(self.numerator.eval(at) / den)
        }
    }

    /// Taylor expansion at `z = 0`; fails if the function has a pole there.
    pub fn to_series(&self, order: usize) -> Result<PowerSeries> {
        let inv = self
            .denominator
            .to_series(order)
            .inverse()
            .map_err(|_| Error::OutOfRange("rational function has a pole at z = 0".into()))?;
        Ok(&self.numerator.to_series(order) * &inv)
    }

    /// Numerator and denominator scaled by a common factor so that every coefficient is
    /// an integer and their joint content is 1.
    pub fn integer_form(&self) -> (Polynomial, Polynomial) {
        let all = self
            .numerator
            .coefficients()
            .iter()
            .chain(self.denominator.coefficients());
        let lcm = lcm_of_denominators(all.clone());
        let content = all
            .map(|c| (c * &lcm).to_integer())
            .fold(BigInt::zero(), |acc, c| acc.gcd(&c));
        let factor = Rational::new(lcm, content);
        (
            self.numerator.scale(&factor),
            self.denominator.scale(&factor),
        )
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.numerator * &rhs.denominator) + &(&rhs.numerator * &self.denominator);
        let den = &self.denominator * &rhs.denominator;
        RationalFunction::normalized(num, den)
    }
}

/// `"num / den"` with integer coefficients, for example `2*z^2 / (1 - 5*z^2 + 4*z^4)`.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.integer_form();
        let is_one = den.degree() == Some(0) && den.coefficient(0).is_one();
        if num.term_count() > 1 && !is_one {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        if is_one {
            return Ok(());
        }
        if den.term_count() > 1 {
            write!(f, " / ({den})")
        } else {
            write!(f, " / {den}")
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
    fn division_and_gcd() {
        // (z − 1)(z + 2) and (z − 1)(z − 3)
        let a = Polynomial::from_integers(&[-2, 1, 1]);
        let b = Polynomial::from_integers(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), Polynomial::from_integers(&[-1, 1]));
        let (quot, rem) = a.div_rem(&Polynomial::from_integers(&[-1, 1]));
        assert_eq!(quot, Polynomial::from_integers(&[2, 1]));
        assert!(rem.is_zero());
        assert_eq!(a.gcd(&Polynomial::zero()), a.scale(&q(1, 1)));
    }

    #[test]
    fn reduction_and_display() {
        // (2z^2 − 2z^3) / (1 − z − 4z^2 + 4z^3) = 2z^2 / (1 − 4z^2) after cancelling (1 − z)
        let num = Polynomial::from_integers(&[0, 0, 2, -2]);
        let den = Polynomial::from_integers(&[1, -1, -4, 4]);
        let r = RationalFunction::new(num, den).unwrap();
        assert_eq!(r.to_string(), "2*z^2 / (1 - 4*z^2)");
        let half = RationalFunction::from_polynomial(Polynomial::constant(q(1, 2)));
        assert_eq!(half.to_string(), "1 / 2");
        let z = RationalFunction::new(
            Polynomial::from_integers(&[0, 1]),
            Polynomial::from_integers(&[1, 0, -1]),
        )
        .unwrap();
        assert_eq!(z.to_string(), "z / (1 - z^2)");
        assert!(RationalFunction::new(Polynomial::zero(), Polynomial::zero()).is_err());
    }

    #[test]
    fn addition_and_evaluation() {
        // 1/(1−z) + 1/(1+z) = 2/(1−z^2)
        let a = RationalFunction::new(
            Polynomial::from_integers(&[1]),
            Polynomial::from_integers(&[1, -1]),
        )
        .unwrap();
        let b = RationalFunction::new(
            Polynomial::from_integers(&[1]),
            Polynomial::from_integers(&[1, 1]),
        )
        .unwrap();
        let s = &a + &b;
        assert_eq!(s.to_string(), "2 / (1 - z^2)");
        assert_eq!(s.eval(&q(1, 2)), Some(q(8, 3)));
        assert_eq!(s.eval(&q(1, 1)), None);
        let series = s.to_series(4).unwrap();
        assert_eq!(
            series.coefficients(),
            &[q(2, 1), q(0, 1), q(2, 1), q(0, 1), q(2, 1)]
        );
    }
}
