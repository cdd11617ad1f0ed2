//! Exact rational scalars.
//!
//! Every algebraic computation in this crate runs over arbitrary-precision
//! fractions; nothing is ever rounded. `num_rational::BigRational` already
//! keeps values reduced with a positive denominator, which is exactly the
//! invariant we need, so it is used directly as the scalar type.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders `p/q` as `"p"` when `q == 1` and `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"`. Whitespace around the tokens is ignored.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((num, den)) => {
            let n = num.trim().parse::<BigInt>().ok()?;
            let d = den.trim().parse::<BigInt>().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
    }
}

/// True when the rational is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Factorial as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

/// Double factorial `n!! = n (n-2) (n-4) ...` with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> Rational {
    if n <= 0 {
        return int(1);
    }
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= BigInt::from(k);
        k -= 2;
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient as a rational.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= Rational::new(BigInt::from(n - i), BigInt::from(i + 1));
    }
    acc
}

/// Approximate value; used only by the numerical heat-lab fits.
pub fn to_f64(r: &Rational) -> f64 {
    let num = r.numer();
    let den = r.denom();
    // Exact conversion would overflow for large numerators; go through a
    // scaled division instead.
    let scale = BigInt::from(1u64 << 53);
    let q = (num * &scale) / den;
    let qf = q.to_string().parse::<f64>().unwrap_or(if q.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    });
    qf / (1u64 << 53) as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_round_trips() {
        for s in ["-48", "19/24", "0", "-1/1440"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(-1), int(1));
        assert_eq!(double_factorial(0), int(1));
        assert_eq!(double_factorial(5), int(15));
        assert_eq!(double_factorial(6), int(48));
    }

    #[test]
    fn to_f64_is_close() {
        let r = rat(19, 24);
        assert!((to_f64(&r) - 19.0 / 24.0).abs() < 1e-15);
        assert!((to_f64(&rat(-48, 1)) + 48.0).abs() < 1e-12);
    }
}
