//! Chern-root expansion and multiplicative sequences.
//!
//! Two independent routes into the Pontryagin ring live here:
//!
//! * [`multiplicative_sequence`] converts a defining power series `f` into
//!   the genus polynomials `K_d(p_1, ..)` through Newton's identities and the
//!   exp/log of power sums — no multivariate expansion ever happens;
//! * [`chern_root_expression`] brute-forces a symmetric expression in the
//!   formal roots `x_1, .., x_l` as a multivariate polynomial and rewrites it
//!   in elementary symmetric functions of the `x_j^2`.
//!
//! The two routes are cross-checked against each other in the test suites.

use crate::error::{Error, Result};
use crate::graded::GradedClass;
use crate::multipoly::{degree, MultiPoly};
use crate::rational::{int, Rational};
use crate::series::{two_cosh, PowerSeries};
use num_traits::{One, Zero};

/// A symmetric formal expression in the Chern roots `{e^{+-x_j}}` of the
/// ambient tangent bundle. Constructors guarantee permutation symmetry;
/// sign-flip symmetry is checked at expansion time.
#[derive(Clone, Debug)]
pub enum RootExpr {
    /// `prod_j f(x_j^2)` for a series `f` in `y = x^2`.
    ProductEven(PowerSeries),
    /// `c + sum_j g(x_j^2)` for a series `g` in `y = x^2`.
    SumEven(PowerSeries, Rational),
    /// The `j`-th elementary symmetric function of the `2l` exponentials
    /// `{e^{x_1}, e^{-x_1}, .., e^{x_l}, e^{-x_l}}`; this is `ch` of the
    /// `j`-th exterior power of the complexified tangent bundle.
    ElemSymExp(usize),
    Add(Box<RootExpr>, Box<RootExpr>),
    Mul(Box<RootExpr>, Box<RootExpr>),
    Scale(Rational, Box<RootExpr>),
    /// Raw multivariate input (tests and generic callers); symmetry is
    /// verified, not assumed.
    Raw(MultiPoly),
}

impl RootExpr {
    /// Expands to a truncated polynomial in the roots `x_1..x_l`, where total
    /// degree `d` in the `x_j` corresponds to cohomological degree `2d`.
    fn expand(&self, l: usize) -> MultiPoly {
        let trunc = l;
        match self {
            RootExpr::ProductEven(f) => {
                let mut acc = MultiPoly::one(l, trunc);
                for j in 0..l {
                    acc = acc.mul(&even_univariate(f, l, trunc, j));
                }
                acc
            }
            RootExpr::SumEven(g, c) => {
                let mut acc = MultiPoly::constant(l, trunc, c.clone());
                for j in 0..l {
                    acc = acc.add(&even_univariate(g, l, trunc, j));
                }
                acc
            }
            RootExpr::ElemSymExp(j) => elem_sym_exponentials(l, trunc, *j),
            RootExpr::Add(a, b) => a.expand(l).add(&b.expand(l)),
            RootExpr::Mul(a, b) => a.expand(l).mul(&b.expand(l)),
            RootExpr::Scale(c, a) => a.expand(l).scale(c),
            RootExpr::Raw(p) => {
                assert_eq!(p.vars(), l, "raw expression has wrong number of roots");
                p.clone()
            }
        }
    }
}

/// `f(x_j^2)` as a polynomial in the j-th variable.
fn even_univariate(f: &PowerSeries, vars: usize, trunc: usize, j: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(vars, trunc);
    for k in 0..=trunc / 2 {
        let c = f.coeff(k);
        if c.is_zero() {
            continue;
        }
        let mut key = vec![0u32; vars];
        key[j] = (2 * k) as u32;
        out.insert(key, c);
    }
    out
}

/// Elementary symmetric function of the `2l` exponentials, via the generating
/// product `prod_j (1 + z e^{x_j})(1 + z e^{-x_j}) = prod_j (1 + z 2cosh(x_j) + z^2)`.
fn elem_sym_exponentials(l: usize, trunc: usize, j: usize) -> MultiPoly {
    let cosh = two_cosh(trunc / 2 + 1);
    // coefficients of z^0..z^{2l}, each a MultiPoly
    let mut z: Vec<MultiPoly> = vec![MultiPoly::zero(l, trunc); 2 * l + 1];
    z[0] = MultiPoly::one(l, trunc);
    let mut top = 0usize;
    for v in 0..l {
        let c = even_univariate(&cosh, l, trunc, v);
        let mut next: Vec<MultiPoly> = vec![MultiPoly::zero(l, trunc); 2 * l + 1];
        for d in 0..=top {
            if z[d].is_zero() {
                continue;
            }
            next[d] = next[d].add(&z[d]);
            next[d + 1] = next[d + 1].add(&z[d].mul(&c));
            next[d + 2] = next[d + 2].add(&z[d]);
        }
        z = next;
        top += 2;
    }
    if j <= 2 * l {
        z[j].clone()
    } else {
        MultiPoly::zero(l, trunc)
    }
}

fn is_permutation_symmetric(p: &MultiPoly, l: usize) -> bool {
    // Adjacent transpositions generate the symmetric group.
    for i in 0..l.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..l).collect();
        perm.swap(i, i + 1);
        if p.permute_vars(&perm) != *p {
            return false;
        }
    }
    true
}

fn is_even_in_every_var(p: &MultiPoly) -> bool {
    p.terms().all(|(k, _)| k.iter().all(|&e| e % 2 == 0))
}

fn every_var_odd(p: &MultiPoly) -> bool {
    p.terms().all(|(k, _)| k.iter().all(|&e| e % 2 == 1))
}

/// Expands a symmetric root expression into the graded ring of `n = 2l`.
///
/// Expressions even in every root land in the Pontryagin subring through the
/// substitution `y_j = x_j^2`, `p_i = e_i(y)`. Expressions carrying exactly
/// one factor of `prod_j x_j` are returned as `e` times the Pontryagin
/// expansion of the quotient. Anything else is rejected.
pub fn chern_root_expression(expr: &RootExpr, n: usize) -> Result<GradedClass> {
    assert!(n % 2 == 0 && n >= 2, "ambient dimension must be even and positive");
    let l = n / 2;
    let poly = expr.expand(l);
    if !is_permutation_symmetric(&poly, l) {
        return Err(Error::NonSymmetric);
    }
    if is_even_in_every_var(&poly) {
        return Ok(pontryagin_expansion(&poly, n));
    }
    // Try the Euler branch: one explicit factor prod_j x_j.
    if every_var_odd(&poly) {
        let mut quotient = MultiPoly::zero(l, l);
        for (k, c) in poly.terms() {
            let key: Vec<u32> = k.iter().map(|&e| e - 1).collect();
            quotient.insert(key, c.clone());
        }
        if is_even_in_every_var(&quotient) {
            let p_part = pontryagin_expansion(&quotient, n);
            return Ok(GradedClass::euler(n).mul(&p_part));
        }
    }
    Err(Error::NotPontryagin)
}

/// Rewrites an even symmetric polynomial in the roots as a polynomial in the
/// Pontryagin generators, by the classical leading-term subtraction in the
/// elementary symmetric functions of `y_j = x_j^2`.
fn pontryagin_expansion(poly: &MultiPoly, n: usize) -> GradedClass {
    let l = n / 2;
    let w_max = l / 2; // y-weight w corresponds to cohomological degree 4w <= n
    // Substitute y_j = x_j^2.
    let mut y_poly = MultiPoly::zero(l, w_max);
    for (k, c) in poly.terms() {
        let key: Vec<u32> = k.iter().map(|&e| e / 2).collect();
        if degree(&key) <= w_max {
            y_poly.insert(key, c.clone());
        }
    }
    // Precompute e_1..e_{w_max} in the y variables.
    let elem: Vec<MultiPoly> = (0..=w_max).map(|i| elementary_symmetric(l, w_max, i)).collect();

    let mut out = GradedClass::zero(n);
    let mut work = y_poly;
    while let Some((lead_key, lead_coeff)) = leading_term(&work) {
        // For a symmetric polynomial the lex-leading exponent vector is
        // non-increasing; it corresponds to prod_i e_i^{a_i - a_{i+1}}.
        let mut exps = vec![0u32; w_max.max(lead_key.len())];
        let mut class_term = GradedClass::one(n);
        let mut sub = MultiPoly::one(l, w_max);
        for i in 0..lead_key.len() {
            let next = if i + 1 < lead_key.len() { lead_key[i + 1] } else { 0 };
            let mult = lead_key[i] - next;
            if mult == 0 {
                continue;
            }
            exps[i] = mult;
            for _ in 0..mult {
                class_term = class_term.mul(&GradedClass::p(n, i + 1));
                sub = sub.mul(&elem[i + 1]);
            }
        }
        out = out.add(&class_term.scale(&lead_coeff));
        work = work.sub(&sub.scale(&lead_coeff));
    }
    out
}

/// Lexicographically greatest monomial (by exponent vector) with its coefficient.
fn leading_term(p: &MultiPoly) -> Option<(Vec<u32>, Rational)> {
    p.terms()
        .max_by(|a, b| a.0.cmp(b.0))
        .map(|(k, c)| (k.clone(), c.clone()))
}

/// The elementary symmetric polynomial `e_i(y_1..y_l)` truncated at weight
/// `trunc`, read off the generating product `prod_j (1 + z y_j)`.
fn elementary_symmetric(l: usize, trunc: usize, i: usize) -> MultiPoly {
    if i > l {
        return MultiPoly::zero(l, trunc);
    }
    let mut z: Vec<MultiPoly> = vec![MultiPoly::zero(l, trunc); l + 1];
    z[0] = MultiPoly::one(l, trunc);
    for v in 0..l {
        let y_v = MultiPoly::monomial(l, trunc, v, 1);
        for d in (0..=v).rev() {
            let bump = z[d].mul(&y_v);
            z[d + 1] = z[d + 1].add(&bump);
        }
    }
    z[i].clone()
}

/// The multiplicative sequence (genus polynomial) of a defining power series
/// `f` with `f(0) = 1`, truncated at ambient degree `n`: for formal Chern
/// roots with `p_i` the elementary symmetric functions of the `x_j^2`, this
/// is `prod_j f(x_j^2)` expressed in the `p_i` via Newton's identities.
pub fn multiplicative_sequence(f: &PowerSeries, n: usize) -> Result<GradedClass> {
    if !f.coeff(0).is_one() {
        return Err(Error::BadSeriesConstant(f.coeff(0).to_string()));
    }
    assert!(n % 2 == 0, "ambient dimension must be even");
    let m = n / 4; // top Pontryagin weight
    let logf = f.truncate(m).log()?;
    // power sums s_r(y) in terms of p_i via Newton's identities:
    // s_r = p_1 s_{r-1} - p_2 s_{r-2} + ... + (-1)^{r-1} r p_r
    let mut power_sums: Vec<GradedClass> = vec![GradedClass::zero(n)]; // s_0 unused
    for r in 1..=m {
        let mut s_r = GradedClass::zero(n);
        for i in 1..r {
            let sign = if i % 2 == 1 { int(1) } else { int(-1) };
            s_r = s_r.add(&GradedClass::p(n, i).mul(&power_sums[r - i]).scale(&sign));
        }
        let sign = if r % 2 == 1 { int(r as i64) } else { int(-(r as i64)) };
        s_r = s_r.add(&GradedClass::p(n, r).scale(&sign));
        power_sums.push(s_r);
    }
    // K = exp( sum_r logf_r * s_r )
    let mut arg = GradedClass::zero(n);
    for r in 1..=m {
        arg = arg.add(&power_sums[r].scale(&logf.coeff(r)));
    }
    let mut acc = GradedClass::one(n);
    let mut pow = GradedClass::one(n);
    for k in 1..=m.max(1) {
        pow = pow.mul(&arg);
        if pow.is_zero() {
            break;
        }
        acc = acc.add(&pow.scale(&(Rational::one() / crate::rational::factorial(k))));
    }
    Ok(acc)
}

/// The A-roof class through degree `n`.
pub fn a_hat_class(n: usize) -> GradedClass {
    multiplicative_sequence(&crate::series::a_hat_series(n / 4 + 1), n)
        .expect("A-roof series has constant term 1")
}

/// The L class (signature genus) through degree `n`.
pub fn l_class(n: usize) -> GradedClass {
    multiplicative_sequence(&crate::series::l_series(n / 4 + 1), n)
        .expect("L series has constant term 1")
}

/// The Chern character of the complexified tangent bundle through degree `n`,
/// with roots `{+-x_1, .., +-x_l}`: `sum_j (e^{x_j} + e^{-x_j})`.
pub fn ch_tangent(n: usize) -> GradedClass {
    chern_root_expression(
        &RootExpr::SumEven(two_cosh(n / 2 + 1), Rational::zero()),
        n,
    )
    .expect("tangent character is symmetric")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::series::{a_hat_series, l_series};

    #[test]
    fn identity_genus() {
        let one = multiplicative_sequence(&PowerSeries::one(3), 8).unwrap();
        assert_eq!(one, GradedClass::one(8));
    }

    #[test]
    fn a_hat_degrees() {
        let n = 8;
        let a = a_hat_class(n);
        assert_eq!(a.constant_term(), int(1));
        let p1 = GradedClass::p(n, 1);
        let p2 = GradedClass::p(n, 2);
        assert_eq!(a.degree_part(4), p1.scale(&rat(-1, 24)));
        let expected8 = p1.pow(2).scale(&rat(7, 5760)).add(&p2.scale(&rat(-4, 5760)));
        assert_eq!(a.degree_part(8), expected8);
    }

    #[test]
    fn l_class_degree_8() {
        let n = 8;
        let l = l_class(n);
        let p1 = GradedClass::p(n, 1);
        let p2 = GradedClass::p(n, 2);
        let expected = p2.scale(&rat(7, 45)).add(&p1.pow(2).scale(&rat(-1, 45)));
        assert_eq!(l.degree_part(8), expected);
    }

    #[test]
    fn l_class_degree_12() {
        let n = 12;
        let l = l_class(n);
        let p1 = GradedClass::p(n, 1);
        let p2 = GradedClass::p(n, 2);
        let p3 = GradedClass::p(n, 3);
        let expected = p3
            .scale(&rat(62, 945))
            .add(&p1.mul(&p2).scale(&rat(-13, 945)))
            .add(&p1.pow(3).scale(&rat(2, 945)));
        assert_eq!(l.degree_part(12), expected);
    }

    #[test]
    fn root_route_matches_genus_route_for_a_hat() {
        for n in [4usize, 8, 12] {
            let via_roots = chern_root_expression(
                &RootExpr::ProductEven(a_hat_series(n / 2 + 1)),
                n,
            )
            .unwrap();
            let via_newton = a_hat_class(n);
            assert_eq!(via_roots, via_newton, "n = {n}");
        }
    }

    #[test]
    fn tangent_character_degree_4_is_p1() {
        let n = 4;
        let ch = ch_tangent(n);
        assert_eq!(ch.constant_term(), int(4));
        assert_eq!(ch.degree_part(4), GradedClass::p(n, 1));
        // Independent oracle: c(T_C) with roots {+-x_j} has c_1 = 0,
        // c_2 = -p_1, so ch_2 = (c_1^2 - 2 c_2)/2 = p_1.
    }

    #[test]
    fn exterior_power_ranks() {
        let n = 6;
        for j in 0..=3usize {
            let cls = chern_root_expression(&RootExpr::ElemSymExp(j), n).unwrap();
            assert_eq!(
                cls.constant_term(),
                crate::rational::binomial(n, j),
                "rank of exterior power {j}"
            );
        }
    }

    #[test]
    fn non_symmetric_rejected() {
        let raw = MultiPoly::monomial(2, 2, 0, 2); // x_1^2 alone
        let res = chern_root_expression(&RootExpr::Raw(raw), 4);
        assert!(matches!(res, Err(Error::NonSymmetric)));
    }

    #[test]
    fn euler_branch() {
        // x_1 x_2 is permutation symmetric, odd in each variable: maps to e.
        let x1 = MultiPoly::monomial(2, 2, 0, 1);
        let x2 = MultiPoly::monomial(2, 2, 1, 1);
        let cls = chern_root_expression(&RootExpr::Raw(x1.mul(&x2)), 4).unwrap();
        assert_eq!(cls, GradedClass::euler(4));
    }

    #[test]
    fn mixed_parity_rejected() {
        // x_1 + x_2 is symmetric but neither even nor Euler-divisible
        // once degree-0 terms are present.
        let x1 = MultiPoly::monomial(2, 2, 0, 1);
        let x2 = MultiPoly::monomial(2, 2, 1, 1);
        let sum = x1.add(&x2).add(&MultiPoly::one(2, 2));
        let res = chern_root_expression(&RootExpr::Raw(sum), 4);
        assert!(matches!(res, Err(Error::NotPontryagin)));
    }
}
