//! Sparse multivariate polynomials with exact coefficients, truncated at a
//! total degree. Shared by the Chern-root expander and the jet calculus.

use crate::rational::Rational;
use num_traits::Zero;
use std::collections::BTreeMap;

/// A polynomial in `vars` variables, truncated above total degree `trunc`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    vars: usize,
    trunc: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: usize, trunc: usize) -> Self {
        MultiPoly {
            vars,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, trunc: usize, c: Rational) -> Self {
        let mut p = Self::zero(vars, trunc);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    pub fn one(vars: usize, trunc: usize) -> Self {
        Self::constant(vars, trunc, Rational::from_integer(1.into()))
    }

    /// The monomial `x_var^exp`.
    pub fn monomial(vars: usize, trunc: usize, var: usize, exp: u32) -> Self {
        let mut key = vec![0u32; vars];
        key[var] = exp;
        let mut p = Self::zero(vars, trunc);
        if (exp as usize) <= trunc {
            p.terms.insert(key, Rational::from_integer(1.into()));
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn insert(&mut self, key: Vec<u32>, c: Rational) {
        assert_eq!(key.len(), self.vars);
        if degree(&key) > self.trunc || c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            let dead: Vec<Vec<u32>> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in dead {
                self.terms.remove(&k);
            }
        }
    }

    pub fn coeff(&self, key: &[u32]) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        out.trunc = self.trunc.min(other.trunc);
        out.terms.retain(|k, _| degree(k) <= out.trunc);
        for (k, c) in &other.terms {
            if degree(k) <= out.trunc {
                out.insert(k.clone(), c.clone());
            }
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars,
            trunc: self.trunc,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars, self.trunc);
        }
        MultiPoly {
            vars: self.vars,
            trunc: self.trunc,
            terms: self.terms.iter().map(|(k, a)| (k.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, other.vars);
        let trunc = self.trunc.min(other.trunc);
        let mut out = MultiPoly::zero(self.vars, trunc);
        for (k1, c1) in &self.terms {
            let d1 = degree(k1);
            if d1 > trunc {
                continue;
            }
            for (k2, c2) in &other.terms {
                if d1 + degree(k2) > trunc {
                    continue;
                }
                let key: Vec<u32> = k1.iter().zip(k2.iter()).map(|(a, b)| a + b).collect();
                out.insert(key, c1 * c2);
            }
        }
        out
    }

    /// Applies a permutation of the variables: `out(x_{perm[0]}, ...) = self`.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.vars);
        let mut out = MultiPoly::zero(self.vars, self.trunc);
        for (k, c) in &self.terms {
            let mut key = vec![0u32; self.vars];
            for (i, &e) in k.iter().enumerate() {
                key[perm[i]] = e;
            }
            out.insert(key, c.clone());
        }
        out
    }

    /// Negates the named variable.
    pub fn flip_var(&self, var: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars, self.trunc);
        for (k, c) in &self.terms {
            let sign = if k[var] % 2 == 0 { c.clone() } else { -c };
            out.insert(k.clone(), sign);
        }
        out
    }

    /// Partial derivative in the named variable.
    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars, self.trunc);
        for (k, c) in &self.terms {
            if k[var] == 0 {
                continue;
            }
            let mut key = k.clone();
            key[var] -= 1;
            out.insert(key, c * Rational::from_integer((k[var] as i64).into()));
        }
        out
    }

    /// The homogeneous part of the given total degree.
    pub fn homogeneous_part(&self, d: usize) -> MultiPoly {
        MultiPoly {
            vars: self.vars,
            trunc: self.trunc,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| degree(k) == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn eval_zero(&self) -> Rational {
        self.coeff(&vec![0; self.vars])
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.vars);
        let mut acc = Rational::zero();
        for (k, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in k.iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        acc
    }
}

pub fn degree(key: &[u32]) -> usize {
    key.iter().map(|&e| e as usize).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn ring_basics() {
        let x = MultiPoly::monomial(2, 4, 0, 1);
        let y = MultiPoly::monomial(2, 4, 1, 1);
        let s = x.add(&y);
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(&[2, 0]), int(1));
        assert_eq!(sq.coeff(&[1, 1]), int(2));
        assert_eq!(sq.coeff(&[0, 2]), int(1));
        let d = sq.derivative(0);
        assert_eq!(d.coeff(&[1, 0]), int(2));
        assert_eq!(d.coeff(&[0, 1]), int(2));
    }

    #[test]
    fn truncation_applies() {
        let x = MultiPoly::monomial(1, 3, 0, 1);
        let x2 = x.mul(&x);
        let x4 = x2.mul(&x2);
        assert!(x4.is_zero());
    }

    #[test]
    fn symmetry_helpers() {
        let x = MultiPoly::monomial(2, 4, 0, 1);
        let y = MultiPoly::monomial(2, 4, 1, 1);
        let a = x.sub(&y);
        assert_eq!(a.permute_vars(&[1, 0]), a.neg());
        assert_eq!(a.flip_var(0), x.neg().sub(&y));
    }
}
