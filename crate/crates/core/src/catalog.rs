//! The catalogue of chiral geometric operators and their index integrands.
//!
//! Each family carries its closed-form Atiyah-Singer data:
//!
//! * Dirac and the higher Dirac operators `D_j` (Rarita-Schwinger is `D_1`):
//!   `(ch Lambda^j T_C + ch Lambda^{j-1} T_C) * A-roof`;
//! * the dimension-four higher signature operators `P_mu`, whose density is
//!   assembled from the Chern-character recurrences of the `V_{(mu,+-mu)}`
//!   family and the universal quotient `prod_j 2 sinh(x_j) / x_j`.

use crate::error::{Error, Result};
use crate::graded::GradedClass;
use crate::rational::{int, rat, Rational};
use crate::roots::{a_hat_class, chern_root_expression, ch_tangent, RootExpr};
use crate::series::{two_sinh_half_over_x, two_sinh_over_x};
use crate::spin::DominantWeight;
use num_traits::Zero;
use std::fmt;

/// Families of cataloged operators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OperatorFamily {
    Dirac,
    HigherDirac(usize),
    RaritaSchwinger,
    HigherSignature(u32),
}

impl fmt::Display for OperatorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorFamily::Dirac => write!(f, "dirac"),
            OperatorFamily::HigherDirac(j) => write!(f, "higher-dirac(j={j})"),
            OperatorFamily::RaritaSchwinger => write!(f, "rarita-schwinger"),
            OperatorFamily::HigherSignature(mu) => write!(f, "higher-signature(mu={mu})"),
        }
    }
}

/// A cataloged operator on an even-dimensional manifold.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OperatorSpec {
    pub family: OperatorFamily,
    pub n: usize,
}

impl OperatorSpec {
    pub fn new(family: OperatorFamily, n: usize) -> Result<Self> {
        if n % 2 != 0 || n < 2 {
            return Err(Error::InvalidOperator(format!(
                "ambient dimension must be even and positive, got {n}"
            )));
        }
        let l = n / 2;
        match family {
            OperatorFamily::Dirac => {}
            OperatorFamily::RaritaSchwinger => {
                if l < 2 {
                    return Err(Error::InvalidOperator(
                        "Rarita-Schwinger needs n >= 4".into(),
                    ));
                }
            }
            OperatorFamily::HigherDirac(j) => {
                if j + 1 > l {
                    return Err(Error::InvalidOperator(format!(
                        "higher Dirac requires j <= l-1 = {}, got j = {j}",
                        l - 1
                    )));
                }
            }
            OperatorFamily::HigherSignature(_) => {
                if n != 4 {
                    return Err(Error::InvalidOperator(
                        "higher signature operators exist only for n = 4".into(),
                    ));
                }
            }
        }
        Ok(OperatorSpec { family, n })
    }

    /// Spin-structure requirement: the Dirac family needs spin; the higher
    /// signature operators only need an orientation.
    pub fn requires_spin(&self) -> bool {
        !matches!(self.family, OperatorFamily::HigherSignature(_))
    }

    /// The untwisted index integrand of this operator.
    pub fn integrand(&self) -> GradedClass {
        match self.family {
            OperatorFamily::Dirac => higher_dirac_integrand(0, self.n).expect("j = 0 valid"),
            OperatorFamily::RaritaSchwinger => rarita_schwinger_integrand(self.n),
            OperatorFamily::HigherDirac(j) => {
                higher_dirac_integrand(j, self.n).expect("validated at construction")
            }
            OperatorFamily::HigherSignature(mu) => higher_signature_integrand(mu),
        }
    }

    /// The chirality data: positive/negative weights of the grading.
    pub fn chiral_data(&self) -> ChiralData {
        let m = self.n / 2;
        let weight_for = |threes: usize| {
            let mut halves = vec![3i64; threes];
            halves.resize(m, 1);
            DominantWeight::from_halves(&halves, self.n).expect("catalog weights are dominant")
        };
        let lambda = match self.family {
            OperatorFamily::Dirac => weight_for(0),
            OperatorFamily::RaritaSchwinger => weight_for(1),
            OperatorFamily::HigherDirac(j) => weight_for(j),
            OperatorFamily::HigherSignature(mu) => {
                let mu = mu as i64;
                DominantWeight::from_i64(&[mu + 1, mu], 4).expect("dominant")
            }
        };
        ChiralData {
            negative: lambda.conjugate(),
            positive: lambda,
        }
    }
}

/// Positive/negative chirality weights; orientation reversal swaps them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChiralData {
    pub positive: DominantWeight,
    pub negative: DominantWeight,
}

/// Index integrand of the higher Dirac operator `D_j`:
/// `(ch Lambda^j T_C + ch Lambda^{j-1} T_C) * A-roof`, with `Lambda^{-1} = 0`.
pub fn higher_dirac_integrand(j: usize, n: usize) -> Result<GradedClass> {
    let l = n / 2;
    if j + 1 > l {
        return Err(Error::InvalidOperator(format!(
            "higher Dirac requires j <= l-1 = {}, got j = {j}",
            l.saturating_sub(1)
        )));
    }
    let mut expr = RootExpr::ElemSymExp(j);
    if j >= 1 {
        expr = RootExpr::Add(Box::new(expr), Box::new(RootExpr::ElemSymExp(j - 1)));
    }
    let twist_part = chern_root_expression(&expr, n)?;
    Ok(twist_part.mul(&a_hat_class(n)))
}

/// Rarita-Schwinger integrand `A-roof * (ch T_C + 1)`; equals `D_1`.
pub fn rarita_schwinger_integrand(n: usize) -> GradedClass {
    let direct = ch_tangent(n)
        .add(&GradedClass::one(n))
        .mul(&a_hat_class(n));
    direct
}

/// Chirality branch of the `V_{(mu,+-mu)}` family in dimension four.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Branch {
    Plus,
    Minus,
}

/// `c_1^{+-} = p_1 +- 2e`, the degree-4 part of `ch V_{(1,+-1)}`.
pub fn c1_branch(branch: Branch) -> GradedClass {
    let n = 4;
    let sign = match branch {
        Branch::Plus => int(2),
        Branch::Minus => int(-2),
    };
    GradedClass::p(n, 1).add(&GradedClass::euler(n).scale(&sign))
}

/// Closed form `ch V_{(mu,+-mu)} = 1 + 2mu + (mu/6 + mu^2/2 + mu^3/3) c_1^{+-}`.
pub fn signature_ch_closed_form(mu: u32, branch: Branch) -> GradedClass {
    let n = 4;
    let mu_r = int(mu as i64);
    let coeff = &mu_r * rat(1, 6) + &mu_r * &mu_r * rat(1, 2) + &mu_r * &mu_r * &mu_r * rat(1, 3);
    GradedClass::constant(n, int(1) + int(2) * &mu_r).add(&c1_branch(branch).scale(&coeff))
}

/// Both intertwined Chern-character sequences of the dimension-four family:
/// `diag[mu] = ch V_{(mu,+-mu)}` and `off[mu] = ch V_{(mu+1,+-mu)}`,
/// generated by
///
/// `diag[mu+1] = diag[mu] (diag[1] - 1) - diag[mu-1]`
/// `off[mu]    = diag[mu] ch V_{(1,0)} - off[mu-1]`
#[derive(Clone, Debug)]
pub struct SignatureChSequences {
    pub diag: Vec<GradedClass>,
    pub off: Vec<GradedClass>,
}

pub fn signature_ch_recurrence(mu_max: u32, branch: Branch) -> SignatureChSequences {
    let n = 4;
    let one = GradedClass::one(n);
    let ch_vector = ch_tangent(n); // ch V_{(1,0)} = ch of the complexified vector rep
    let a1 = GradedClass::constant(n, int(3)).add(&c1_branch(branch));
    let mut diag = vec![one.clone(), a1.clone()];
    let mut off = vec![ch_vector.clone()];
    for mu in 1..=mu_max as usize {
        if diag.len() <= mu + 1 {
            let next = diag[mu]
                .mul(&a1.sub(&one))
                .sub(&diag[mu - 1]);
            diag.push(next);
        }
        let next_off = diag[mu].mul(&ch_vector).sub(&off[mu - 1]);
        off.push(next_off);
    }
    diag.truncate(mu_max as usize + 1);
    off.truncate(mu_max as usize + 1);
    SignatureChSequences { diag, off }
}

/// The universal chirality quotient of the signature family,
/// `prod_j 2 sinh(x_j) / x_j`, expanded through degree `n`.
pub fn signature_quotient(n: usize) -> GradedClass {
    chern_root_expression(&RootExpr::ProductEven(two_sinh_over_x(n / 2 + 1)), n)
        .expect("even symmetric product")
}

/// Index density of the higher signature operator `P_mu` in dimension four.
///
/// The chirality difference `ch W_mu^+ - ch W_mu^-` is assembled from the
/// recurrence sequences; it collapses to a multiple of the Euler generator,
/// whose coefficient `4(mu+1)` feeds the Atiyah-Singer recipe through the
/// universal quotient. The returned class is the resulting degree-4 density,
/// `(1+mu) p_1 / 3`.
pub fn higher_signature_integrand(mu: u32) -> GradedClass {
    let n = 4;
    let plus = signature_ch_recurrence(mu + 1, Branch::Plus);
    let minus = signature_ch_recurrence(mu + 1, Branch::Minus);
    let m = mu as usize;
    // W^+ = V_{(mu,mu)} + V_{(mu+1,-mu)} + V_{(mu+1,mu+1)}
    // W^- = V_{(mu,-mu)} + V_{(mu+1,mu)} + V_{(mu+1,-(mu+1))}
    let diff = plus.diag[m]
        .sub(&minus.diag[m])
        .add(&minus.off[m].sub(&plus.off[m]))
        .add(&plus.diag[m + 1].sub(&minus.diag[m + 1]));
    let multiple = diff
        .divide_by_euler()
        .expect("chirality difference is a pure Euler multiple");
    debug_assert!(multiple.sub(&multiple.degree_part(0)).is_zero());
    let scalar = multiple.constant_term() / int(4);
    let full = signature_quotient(n)
        .mul(&a_hat_class(n).pow(2))
        .scale(&scalar);
    full.top_part()
}

/// The chirality quotient `(ch V_+ - ch V_-)/chi` of the Dirac family: the
/// expansion of `prod_j 2 sinh(x_j/2) / x_j` with the overall sign pinned by
/// the requirement `(-1)^l * quotient * A-roof^2 = A-roof`.
pub fn dirac_euler_quotient(n: usize) -> GradedClass {
    let l = n / 2;
    let raw = chern_root_expression(
        &RootExpr::ProductEven(two_sinh_half_over_x(n / 2 + 1)),
        n,
    )
    .expect("even symmetric product");
    if l % 2 == 0 {
        raw
    } else {
        raw.neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::l_class;

    #[test]
    fn dirac_is_a_roof() {
        for n in [4usize, 8] {
            let d = higher_dirac_integrand(0, n).unwrap();
            assert_eq!(d, a_hat_class(n));
        }
    }

    #[test]
    fn rarita_schwinger_matches_higher_dirac_one() {
        for n in [4usize, 6, 8] {
            assert_eq!(
                rarita_schwinger_integrand(n),
                higher_dirac_integrand(1, n).unwrap()
            );
        }
    }

    #[test]
    fn rs_degree_four_part() {
        let n = 4;
        let rs = rarita_schwinger_integrand(n);
        assert_eq!(rs.degree_part(4), GradedClass::p(n, 1).scale(&rat(19, 24)));
        assert_eq!(rs.constant_term(), int(5));
    }

    #[test]
    fn higher_dirac_rank_identity() {
        for n in [4usize, 6, 8] {
            for j in 0..n / 2 {
                let d = higher_dirac_integrand(j, n).unwrap();
                let expected = crate::rational::binomial(n, j)
                    + if j >= 1 {
                        crate::rational::binomial(n, j - 1)
                    } else {
                        Rational::zero()
                    };
                assert_eq!(d.constant_term(), expected, "n = {n}, j = {j}");
            }
        }
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(higher_dirac_integrand(2, 4).is_err());
        assert!(OperatorSpec::new(OperatorFamily::HigherSignature(1), 8).is_err());
        assert!(OperatorSpec::new(OperatorFamily::RaritaSchwinger, 2).is_err());
    }

    #[test]
    fn signature_closed_forms() {
        let one = signature_ch_closed_form(0, Branch::Plus);
        assert_eq!(one, GradedClass::one(4));
        let three = signature_ch_closed_form(1, Branch::Plus);
        assert_eq!(
            three,
            GradedClass::constant(4, int(3)).add(&c1_branch(Branch::Plus))
        );
        let five = signature_ch_closed_form(2, Branch::Minus);
        assert_eq!(
            five,
            GradedClass::constant(4, int(5)).add(&c1_branch(Branch::Minus).scale(&int(5)))
        );
    }

    #[test]
    fn recurrence_matches_closed_form() {
        for branch in [Branch::Plus, Branch::Minus] {
            let seq = signature_ch_recurrence(10, branch);
            for mu in 0..=10u32 {
                assert_eq!(
                    seq.diag[mu as usize],
                    signature_ch_closed_form(mu, branch),
                    "mu = {mu}"
                );
            }
        }
    }

    #[test]
    fn off_diagonal_dimensions() {
        let seq = signature_ch_recurrence(6, Branch::Plus);
        for mu in 0..=6usize {
            let dim = seq.off[mu].constant_term();
            // dim V_{(mu+1, mu)} = (2 + 2mu) * 2
            assert_eq!(dim, int(4 * (mu as i64 + 1)), "mu = {mu}");
            let weight =
                DominantWeight::from_i64(&[mu as i64 + 1, mu as i64], 4).unwrap();
            assert_eq!(
                dim,
                Rational::from_integer(crate::spin::weyl_dim(&weight))
            );
        }
    }

    #[test]
    fn higher_signature_is_l_multiple() {
        for mu in 0..=8u32 {
            let got = higher_signature_integrand(mu);
            let expected = l_class(4)
                .degree_part(4)
                .scale(&int(mu as i64 + 1));
            assert_eq!(got, expected, "mu = {mu}");
        }
    }

    #[test]
    fn dirac_quotient_inverts_a_roof() {
        for n in [4usize, 8] {
            let q = dirac_euler_quotient(n);
            assert_eq!(q.mul(&a_hat_class(n)), GradedClass::one(n));
            // the Dirac reduction with the (-1)^l sign
            let sign = if (n / 2) % 2 == 0 { int(1) } else { int(-1) };
            let reduced = q.mul(&a_hat_class(n).pow(2)).scale(&sign);
            assert_eq!(reduced, a_hat_class(n));
        }
    }

    #[test]
    fn chiral_data_conjugates() {
        let spec = OperatorSpec::new(OperatorFamily::RaritaSchwinger, 4).unwrap();
        let data = spec.chiral_data();
        assert_eq!(data.positive.to_string(), "(3/2,1/2)");
        assert_eq!(data.negative.to_string(), "(3/2,-1/2)");
        assert_eq!(
            crate::spin::weyl_dim(&data.positive),
            crate::spin::weyl_dim(&data.negative)
        );
    }
}
