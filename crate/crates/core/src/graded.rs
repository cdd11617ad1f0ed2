//! The truncated graded-commutative ring of characteristic classes for an
//! even ambient dimension `n = 2l`.
//!
//! Generators and degrees:
//!
//! * `p_i` for `1 <= i <= l`, of degree `4i` (Pontryagin classes);
//! * `e`, of degree `n` (Euler class), subject to the rewrite `e^2 = p_l`;
//! * `ch_k` for `0 <= k <= l`, of degree `2k` (Chern-character slots of an
//!   abstract twist bundle).
//!
//! Products are truncated above total degree `n`. The rewrite `e^2 -> p_l`
//! preserves degree, and since `deg p_l = 2n > n` any monomial produced by it
//! is immediately truncated away; the ring therefore never stores more than
//! one Euler factor per monomial.

use crate::rational::{format_rational, Rational};
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

/// A monomial in the generators. Exponent vectors are kept with trailing
/// zeros trimmed so that structurally equal monomials compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Monomial {
    /// `p[i]` is the exponent of `p_{i+1}`.
    p: Vec<u32>,
    /// Exponent of the Euler generator (0 or 1 after rewriting).
    e: u32,
    /// `ch[k]` is the exponent of `ch_k`.
    ch: Vec<u32>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial {
            p: Vec::new(),
            e: 0,
            ch: Vec::new(),
        }
    }

    pub fn p_power(i: usize, exp: u32) -> Self {
        assert!(i >= 1, "Pontryagin indices start at 1");
        let mut p = vec![0; i];
        p[i - 1] = exp;
        let mut m = Monomial { p, e: 0, ch: Vec::new() };
        m.trim();
        m
    }

    pub fn euler() -> Self {
        Monomial {
            p: Vec::new(),
            e: 1,
            ch: Vec::new(),
        }
    }

    pub fn ch(k: usize) -> Self {
        let mut ch = vec![0; k + 1];
        ch[k] = 1;
        Monomial { p: Vec::new(), e: 0, ch }
    }

    /// Monomial `p_{I}` for a partition `I` (one `p_i` factor per part `i`).
    pub fn from_partition(i: &crate::partition::Partition) -> Self {
        let mut m = Monomial::unit();
        for &part in i.parts() {
            let max = part as usize;
            if m.p.len() < max {
                m.p.resize(max, 0);
            }
            m.p[max - 1] += 1;
        }
        m
    }

    fn trim(&mut self) {
        while self.p.last() == Some(&0) {
            self.p.pop();
        }
        while self.ch.last() == Some(&0) {
            self.ch.pop();
        }
    }

    pub fn degree(&self, n: usize) -> usize {
        let p_deg: usize = self
            .p
            .iter()
            .enumerate()
            .map(|(i, &a)| 4 * (i + 1) * a as usize)
            .sum();
        let ch_deg: usize = self
            .ch
            .iter()
            .enumerate()
            .map(|(k, &a)| 2 * k * a as usize)
            .sum();
        p_deg + n * self.e as usize + ch_deg
    }

    /// Total number of Chern-character factors (including `ch_0`).
    pub fn ch_factor_count(&self) -> u32 {
        self.ch.iter().sum()
    }

    /// Index of the single `ch` factor, if the monomial carries exactly one.
    pub fn single_ch_index(&self) -> Option<usize> {
        if self.ch_factor_count() == 1 {
            self.ch.iter().position(|&a| a == 1)
        } else {
            None
        }
    }

    pub fn euler_exponent(&self) -> u32 {
        self.e
    }

    pub fn p_exponents(&self) -> &[u32] {
        &self.p
    }

    pub fn is_unit(&self) -> bool {
        self.p.is_empty() && self.e == 0 && self.ch.is_empty()
    }

    /// Public monomial product in ambient degree `n`; `None` on truncation.
    pub fn try_mul(&self, other: &Monomial, n: usize) -> Option<Monomial> {
        self.mul(other, n)
    }

    /// Product with the `e^2 -> p_l` rewrite applied; `None` when the result
    /// exceeds the ambient degree `n`.
    fn mul(&self, other: &Monomial, n: usize) -> Option<Monomial> {
        let l = n / 2;
        let mut p = vec![0u32; self.p.len().max(other.p.len())];
        for (i, &a) in self.p.iter().enumerate() {
            p[i] += a;
        }
        for (i, &a) in other.p.iter().enumerate() {
            p[i] += a;
        }
        let mut e = self.e + other.e;
        // e^2 = p_l rewrite; degree-neutral.
        if e >= 2 && l >= 1 {
            if p.len() < l {
                p.resize(l, 0);
            }
            p[l - 1] += e / 2;
            e %= 2;
        }
        let mut ch = vec![0u32; self.ch.len().max(other.ch.len())];
        for (k, &a) in self.ch.iter().enumerate() {
            ch[k] += a;
        }
        for (k, &a) in other.ch.iter().enumerate() {
            ch[k] += a;
        }
        let mut m = Monomial { p, e, ch };
        m.trim();
        if m.degree(n) > n {
            None
        } else {
            Some(m)
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (k, &a) in self.ch.iter().enumerate() {
            if a == 1 {
                factors.push(format!("ch{k}"));
            } else if a > 1 {
                factors.push(format!("ch{k}^{a}"));
            }
        }
        for (i, &a) in self.p.iter().enumerate() {
            if a == 1 {
                factors.push(format!("p{}", i + 1));
            } else if a > 1 {
                factors.push(format!("p{}^{}", i + 1, a));
            }
        }
        if self.e == 1 {
            factors.push("e".into());
        } else if self.e > 1 {
            factors.push(format!("e^{}", self.e));
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// An element of the truncated ring: a finite rational combination of
/// monomials of degree at most `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedClass {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedClass {
    pub fn zero(n: usize) -> Self {
        assert!(n % 2 == 0, "ambient dimension must be even");
        GradedClass {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::from_integer(1.into()))
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut g = Self::zero(n);
        if !c.is_zero() {
            g.terms.insert(Monomial::unit(), c);
        }
        g
    }

    /// The generator `p_i`; zero when its degree `4i` exceeds `n`.
    pub fn p(n: usize, i: usize) -> Self {
        Self::from_monomial(n, Monomial::p_power(i, 1), Rational::from_integer(1.into()))
    }

    /// The Euler generator `e` (degree `n`).
    pub fn euler(n: usize) -> Self {
        Self::from_monomial(n, Monomial::euler(), Rational::from_integer(1.into()))
    }

    /// The twist-slot generator `ch_k` (degree `2k`).
    pub fn ch(n: usize, k: usize) -> Self {
        Self::from_monomial(n, Monomial::ch(k), Rational::from_integer(1.into()))
    }

    /// The formal total Chern character of an abstract twist bundle:
    /// `ch_0 + ch_1 + ... + ch_{n/2}`.
    pub fn ch_total(n: usize) -> Self {
        let mut g = Self::zero(n);
        for k in 0..=n / 2 {
            g = g.add(&Self::ch(n, k));
        }
        g
    }

    pub fn from_monomial(n: usize, m: Monomial, c: Rational) -> Self {
        let mut g = Self::zero(n);
        if !c.is_zero() && m.degree(n) <= n {
            g.terms.insert(m, c);
        }
        g
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &GradedClass) -> GradedClass {
        assert_eq!(self.n, other.n, "ambient dimension mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        GradedClass { n: self.n, terms }
    }

    pub fn neg(&self) -> GradedClass {
        GradedClass {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &GradedClass) -> GradedClass {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> GradedClass {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        GradedClass {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &GradedClass) -> GradedClass {
        assert_eq!(self.n, other.n, "ambient dimension mismatch");
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some(m) = m1.mul(m2, self.n) {
                    let entry = terms.entry(m).or_insert_with(Rational::zero);
                    *entry += c1 * c2;
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        GradedClass { n: self.n, terms }
    }

    pub fn pow(&self, k: u32) -> GradedClass {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The homogeneous part of the given degree.
    pub fn degree_part(&self, d: usize) -> GradedClass {
        GradedClass {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree(self.n) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn top_part(&self) -> GradedClass {
        self.degree_part(self.n)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::unit())
    }

    pub fn is_euler_free(&self) -> bool {
        self.terms.keys().all(|m| m.euler_exponent() == 0)
    }

    /// Strips one Euler factor from every monomial. Errors when some monomial
    /// carries none.
    pub fn divide_by_euler(&self) -> crate::error::Result<GradedClass> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.euler_exponent() == 0 {
                return Err(crate::error::Error::NotEulerDivisible(m.to_string()));
            }
            let mut stripped = m.clone();
            stripped.e -= 1;
            terms.insert(stripped, c.clone());
        }
        Ok(GradedClass { n: self.n, terms })
    }

    /// Terms in a deterministic display order: by degree, then by the
    /// structural monomial order.
    pub fn ordered_terms(&self) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<(Monomial, Rational)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| {
            a.0.degree(self.n)
                .cmp(&b.0.degree(self.n))
                .then_with(|| a.0.cmp(&b.0))
        });
        v
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .ordered_terms()
            .iter()
            .map(|(m, c)| {
                if m.is_unit() {
                    format_rational(c)
                } else {
                    format!("{}*{}", format_rational(c), m)
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}
