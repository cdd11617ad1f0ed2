//! Exact linear algebra over the rationals: fraction-free (Bareiss)
//! elimination on a denominator-cleared integer matrix, used for the
//! coefficient-matching solves and the Thom-matrix determinants.

use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Clears denominators row by row, returning integer rows.
fn clear_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for r in row {
                lcm = num_integer::lcm(lcm, r.denom().clone());
            }
            row.iter()
                .map(|r| r.numer() * (&lcm / r.denom()))
                .collect()
        })
        .collect()
}

/// Exact determinant via Bareiss' fraction-free elimination.
pub fn determinant(matrix: &[Vec<Rational>]) -> Rational {
    let n = matrix.len();
    if n == 0 {
        return Rational::one();
    }
    assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
    // Track the denominator scale introduced by clearing each row.
    let mut scale = Rational::one();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in matrix {
        let mut lcm = BigInt::one();
        for r in row {
            lcm = num_integer::lcm(lcm, r.denom().clone());
        }
        scale *= Rational::from_integer(lcm.clone());
        m.push(row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect());
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    Rational::from_integer(sign * m[n - 1][n - 1].clone()) / scale
}

/// Failure mode of the exact solve: the first column without a pivot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Singular {
    pub column: usize,
}

/// Solves `A x = b` exactly by fraction-free forward elimination and exact
/// back substitution. `A` must be square.
pub fn solve(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>, Singular> {
    let n = matrix.len();
    assert_eq!(rhs.len(), n);
    if n == 0 {
        return Ok(Vec::new());
    }
    assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
    // Augment, clear denominators, run Bareiss.
    let rows: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs.iter())
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let mut m = clear_rows(&rows);
    let cols = n + 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => m.swap(k, i),
                None => return Err(Singular { column: k }),
            }
        }
        for i in k + 1..n {
            for j in k + 1..cols {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    // Back substitution in exact rationals.
    let mut x = vec![Rational::zero(); n];
    for k in (0..n).rev() {
        if m[k][k].is_zero() {
            return Err(Singular { column: k });
        }
        let mut acc = Rational::from_integer(m[k][cols - 1].clone());
        for j in k + 1..n {
            acc -= Rational::from_integer(m[k][j].clone()) * &x[j];
        }
        x[k] = acc / Rational::from_integer(m[k][k].clone());
    }
    Ok(x)
}

/// Least-squares fit of `sum_j c_j basis_j(t) ~ values` in f64, by normal
/// equations with partial pivoting. Used only by the heat-lab fits.
pub fn lstsq_f64(design: &[Vec<f64>], values: &[f64]) -> Vec<f64> {
    let rows = design.len();
    assert_eq!(rows, values.len());
    let cols = design.first().map(|r| r.len()).unwrap_or(0);
    let mut ata = vec![vec![0.0; cols]; cols];
    let mut atb = vec![0.0; cols];
    for (row, &v) in design.iter().zip(values.iter()) {
        for i in 0..cols {
            atb[i] += row[i] * v;
            for j in 0..cols {
                ata[i][j] += row[i] * row[j];
            }
        }
    }
    // Gaussian elimination with partial pivoting.
    for k in 0..cols {
        let pivot = (k..cols)
            .max_by(|&a, &b| ata[a][k].abs().partial_cmp(&ata[b][k].abs()).unwrap())
            .unwrap();
        ata.swap(k, pivot);
        atb.swap(k, pivot);
        let d = ata[k][k];
        assert!(d.abs() > 0.0, "degenerate design matrix");
        for i in k + 1..cols {
            let f = ata[i][k] / d;
            for j in k..cols {
                ata[i][j] -= f * ata[k][j];
            }
            atb[i] -= f * atb[k];
        }
    }
    let mut x = vec![0.0; cols];
    for k in (0..cols).rev() {
        let mut acc = atb[k];
        for j in k + 1..cols {
            acc -= ata[k][j] * x[j];
        }
        x[k] = acc / ata[k][k];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn determinant_values() {
        let m = vec![vec![int(7), int(4)], vec![int(2304), int(4608)]];
        assert_eq!(determinant(&m), int(23040));
        let singular = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(determinant(&singular), int(0));
        let with_fractions = vec![vec![rat(1, 2), int(0)], vec![int(5), rat(2, 3)]];
        assert_eq!(determinant(&with_fractions), rat(1, 3));
    }

    #[test]
    fn solve_exact_system() {
        let a = vec![
            vec![int(2), int(1), int(-1)],
            vec![int(-3), int(-1), int(2)],
            vec![int(-2), int(1), int(2)],
        ];
        let b = vec![int(8), int(-11), int(-3)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![int(2), int(3), int(-1)]);
    }

    #[test]
    fn solve_reports_singularity() {
        let a = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        let b = vec![int(1), int(2)];
        assert_eq!(solve(&a, &b).unwrap_err(), Singular { column: 1 });
    }

    #[test]
    fn solve_with_rationals() {
        let a = vec![vec![rat(1, 3), rat(1, 2)], vec![rat(2, 5), rat(-1, 7)]];
        let b = vec![rat(5, 6), rat(9, 35)];
        let x = solve(&a, &b).unwrap();
        // verify by substitution
        for (row, want) in a.iter().zip(b.iter()) {
            let got: Rational = row.iter().zip(x.iter()).map(|(c, v)| c * v).sum();
            assert_eq!(&got, want);
        }
    }

    #[test]
    fn lstsq_recovers_polynomial() {
        let ts: Vec<f64> = (1..=20).map(|i| i as f64 / 100.0).collect();
        let design: Vec<Vec<f64>> = ts.iter().map(|&t| vec![1.0, t, t * t]).collect();
        let values: Vec<f64> = ts.iter().map(|&t| 3.0 - 2.0 * t + 0.5 * t * t).collect();
        let c = lstsq_f64(&design, &values);
        assert!((c[0] - 3.0).abs() < 1e-10);
        assert!((c[1] + 2.0).abs() < 1e-8);
        assert!((c[2] - 0.5).abs() < 1e-7);
    }
}
