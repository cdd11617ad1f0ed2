//! Dense univariate power series with exact rational coefficients, truncated
//! at a fixed order. These are the defining data of multiplicative sequences
//! and of the per-root factors fed to the Chern-root expander.

use crate::error::{Error, Result};
use crate::rational::{factorial, int, Rational};
use num_traits::{One, Zero};

/// Truncated power series `c[0] + c[1] x + ... + c[ord] x^ord`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty());
        PowerSeries { coeffs }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[0] = c;
        PowerSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Rational::zero());
        PowerSeries { coeffs }
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let ord = self.order().max(other.order());
        let coeffs = (0..=ord).map(|k| self.coeff(k) + other.coeff(k)).collect();
        PowerSeries { coeffs }
    }

    pub fn scale(&self, c: &Rational) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Product truncated at the larger of the two orders.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let ord = self.order().max(other.order());
        let mut coeffs = vec![Rational::zero(); ord + 1];
        for i in 0..=self.order().min(ord) {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(ord - i).min(other.order()) {
                let c = &self.coeffs[i] * &other.coeffs[j];
                coeffs[i + j] += c;
            }
        }
        PowerSeries { coeffs }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn recip(&self) -> Result<PowerSeries> {
        if self.coeffs[0].is_zero() {
            return Err(Error::BadSeriesConstant("0".into()));
        }
        let ord = self.order();
        let inv0 = Rational::one() / self.coeffs[0].clone();
        let mut out = vec![Rational::zero(); ord + 1];
        out[0] = inv0.clone();
        for n in 1..=ord {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out[n] = -acc * &inv0;
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<PowerSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadSeriesConstant(self.coeffs[0].to_string()));
        }
        let ord = self.order();
        // l' = f'/f gives n l_n = n f_n - sum_{k=1}^{n-1} k l_k f_{n-k}.
        let mut l = vec![Rational::zero(); ord + 1];
        for n in 1..=ord {
            let mut acc = int(n as i64) * &self.coeffs[n];
            for k in 1..n {
                acc -= int(k as i64) * &l[k] * &self.coeffs[n - k];
            }
            l[n] = acc / int(n as i64);
        }
        Ok(PowerSeries { coeffs: l })
    }

    /// Exponential of a series with constant term 0.
    pub fn exp(&self) -> Result<PowerSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadSeriesConstant(self.coeffs[0].to_string()));
        }
        let ord = self.order();
        // e' = g' e gives n e_n = sum_{k=1}^{n} k g_k e_{n-k}.
        let mut e = vec![Rational::zero(); ord + 1];
        e[0] = Rational::one();
        for n in 1..=ord {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += int(k as i64) * &self.coeffs[k] * &e[n - k];
            }
            e[n] = acc / int(n as i64);
        }
        Ok(PowerSeries { coeffs: e })
    }
}

/// `sinh(sqrt(y) a) / (sqrt(y) a)` as a series in `y`, i.e.
/// `sum_k (a^2 y)^k / (2k+1)!`.
pub fn sinh_over_arg(a_squared: Rational, order: usize) -> PowerSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut pw = Rational::one();
    for k in 0..=order {
        coeffs.push(&pw / factorial(2 * k + 1));
        pw *= &a_squared;
    }
    PowerSeries::from_coeffs(coeffs)
}

/// `2 cosh(sqrt(y))` as a series in `y`: `sum_k 2 y^k / (2k)!`.
pub fn two_cosh(order: usize) -> PowerSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order {
        coeffs.push(int(2) / factorial(2 * k));
    }
    PowerSeries::from_coeffs(coeffs)
}

/// The A-roof defining series `(sqrt(y)/2) / sinh(sqrt(y)/2)` in `y = x^2`.
pub fn a_hat_series(order: usize) -> PowerSeries {
    sinh_over_arg(crate::rational::rat(1, 4), order)
        .recip()
        .expect("constant term is 1")
}

/// The L-genus defining series `sqrt(y) / tanh(sqrt(y))` in `y = x^2`.
pub fn l_series(order: usize) -> PowerSeries {
    let cosh: Vec<Rational> = (0..=order).map(|k| Rational::one() / factorial(2 * k)).collect();
    let cosh = PowerSeries::from_coeffs(cosh);
    let sinh_over = sinh_over_arg(Rational::one(), order);
    cosh.mul(&sinh_over.recip().expect("constant term is 1"))
}

/// `2 sinh(sqrt(y)/2) / sqrt(y)` in `y = x^2`; the reciprocal of the A-roof factor.
pub fn two_sinh_half_over_x(order: usize) -> PowerSeries {
    sinh_over_arg(crate::rational::rat(1, 4), order)
}

/// `2 sinh(sqrt(y)) / sqrt(y)` in `y = x^2`.
pub fn two_sinh_over_x(order: usize) -> PowerSeries {
    sinh_over_arg(Rational::one(), order).scale(&int(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn a_hat_series_values() {
        let f = a_hat_series(3);
        assert_eq!(f.coeff(0), int(1));
        assert_eq!(f.coeff(1), rat(-1, 24));
        assert_eq!(f.coeff(2), rat(7, 5760));
        assert_eq!(f.coeff(3), rat(-31, 967680));
    }

    #[test]
    fn l_series_values() {
        let f = l_series(3);
        assert_eq!(f.coeff(0), int(1));
        assert_eq!(f.coeff(1), rat(1, 3));
        assert_eq!(f.coeff(2), rat(-1, 45));
        assert_eq!(f.coeff(3), rat(2, 945));
    }

    #[test]
    fn recip_mul_is_one() {
        let f = a_hat_series(6);
        let g = f.recip().unwrap();
        let prod = f.mul(&g);
        assert_eq!(prod, PowerSeries::one(6));
    }

    #[test]
    fn exp_log_round_trip() {
        let f = l_series(5);
        let back = f.log().unwrap().exp().unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn log_rejects_bad_constant() {
        let f = PowerSeries::constant(int(2), 3);
        assert!(f.log().is_err());
        assert!(PowerSeries::constant(int(0), 3).recip().is_err());
    }

    #[test]
    fn reciprocal_pair_of_a_hat() {
        let f = a_hat_series(5);
        let g = two_sinh_half_over_x(5);
        assert_eq!(f.mul(&g), PowerSeries::one(5));
    }
}
