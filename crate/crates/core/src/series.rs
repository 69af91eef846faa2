//! Truncated integer power series.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `c_0 + c_1 t + … + c_N t^N`, exact modulo `t^{N+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Series {
    #[serde(serialize_with = "crate::report::bigints")]
    pub coeffs: Vec<BigInt>,
}

impl Series {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least a constant term");
        Series { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Series::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one(order: usize) -> Self {
        let mut c = vec![BigInt::zero(); order + 1];
        c[0] = BigInt::one();
        Series { coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| i64::try_from(c).ok()).collect()
    }

    /// First index where the two series differ.
    pub fn first_difference(&self, other: &Series) -> Option<usize> {
        (0..=self.order().max(other.order())).find(|&k| self.coeffs.get(k) != other.coeffs.get(k))
    }
}

fn check_orders(a: &Series, b: &Series) -> Result<()> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    Ok(())
}

pub fn series_add(a: &Series, b: &Series) -> Result<Series> {
    check_orders(a, b)?;
    Ok(Series::new(a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect()))
}

pub fn series_mul(a: &Series, b: &Series) -> Result<Series> {
    check_orders(a, b)?;
    let n = a.order();
    let mut c = vec![BigInt::zero(); n + 1];
    for i in 0..=n {
        if a.coeffs[i].is_zero() {
            continue;
        }
        for j in 0..=n - i {
            c[i + j] += &a.coeffs[i] * &b.coeffs[j];
        }
    }
    Ok(Series::new(c))
}

/// Inverse of a series with constant term `±1`.
pub fn series_inv(a: &Series) -> Result<Series> {
    let c0 = &a.coeffs[0];
    if !c0.abs().is_one() {
        return Err(Error::NonUnit(c0.to_string()));
    }
    let n = a.order();
    let mut b = vec![BigInt::zero(); n + 1];
    b[0] = c0.clone();
    for k in 1..=n {
        let mut s = BigInt::zero();
        for j in 1..=k {
            s += &a.coeffs[j] * &b[k - j];
        }
        // c0 = ±1 is its own inverse.
        b[k] = -(s * c0);
    }
    Ok(Series::new(b))
}

/// `(1 - t)^{-c}` to order `N`: `c_k = c (c+1) ⋯ (c+k-1) / k!`.
pub fn binomial_neg(c: i64, order: usize) -> Series {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut cur = BigInt::one();
    coeffs.push(cur.clone());
    for k in 1..=order {
        cur = cur * BigInt::from(c + k as i64 - 1) / BigInt::from(k);
        coeffs.push(cur.clone());
    }
    Series::new(coeffs)
}

impl fmt::Display for Series {
    /// Polynomial notation, e.g. `1 - 2t + t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coeff = if mag.is_one() && k > 0 { String::new() } else { mag.to_string() };
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{coeff}t")?,
                _ => write!(f, "{coeff}t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn closed_forms() {
        assert_eq!(binomial_neg(1, 4), Series::from_i64(&[1, 1, 1, 1, 1]));
        assert_eq!(binomial_neg(2, 4), Series::from_i64(&[1, 2, 3, 4, 5]));
        assert_eq!(binomial_neg(-2, 3), Series::from_i64(&[1, -2, 1, 0]));
        assert_eq!(binomial_neg(0, 3), Series::one(3));
        assert_eq!(series_inv(&Series::from_i64(&[1, -1, 0, 0, 0])).unwrap(), binomial_neg(1, 4));
        assert!(matches!(series_inv(&Series::from_i64(&[2, 1])), Err(Error::NonUnit(_))));
        assert!(series_mul(&Series::one(2), &Series::one(3)).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(Series::from_i64(&[1, -2, 1, 0]).to_string(), "1 - 2t + t^2 + O(t^4)");
        assert_eq!(Series::from_i64(&[0, 0]).to_string(), "0 + O(t^2)");
        assert_eq!(Series::from_i64(&[-1, 3]).to_string(), "-1 + 3t + O(t^2)");
    }

    fn series(order: usize) -> impl Strategy<Value = Series> {
        prop::collection::vec(-10i64..=10, order + 1).prop_map(|c| Series::from_i64(&c))
    }

    fn unit(order: usize) -> impl Strategy<Value = Series> {
        (prop::bool::ANY, prop::collection::vec(-10i64..=10, order)).prop_map(|(neg, rest)| {
            let mut c = vec![if neg { -1 } else { 1 }];
            c.extend(rest);
            Series::from_i64(&c)
        })
    }

    fn triple() -> impl Strategy<Value = (Series, Series, Series)> {
        (0usize..=8).prop_flat_map(|n| (series(n), series(n), series(n)))
    }

    proptest! {
        #[test]
        fn mul_is_associative((a, b, c) in triple()) {
            let l = series_mul(&series_mul(&a, &b).unwrap(), &c).unwrap();
            let r = series_mul(&a, &series_mul(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn mul_is_commutative((a, b, _c) in triple()) {
            prop_assert_eq!(series_mul(&a, &b).unwrap(), series_mul(&b, &a).unwrap());
        }

        #[test]
        fn mul_distributes((a, b, c) in triple()) {
            let l = series_mul(&a, &series_add(&b, &c).unwrap()).unwrap();
            let r = series_add(&series_mul(&a, &b).unwrap(), &series_mul(&a, &c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn inverse_laws(a in (0usize..=8).prop_flat_map(unit)) {
            let inv = series_inv(&a).unwrap();
            prop_assert_eq!(series_mul(&a, &inv).unwrap(), Series::one(a.order()));
            prop_assert_eq!(series_inv(&inv).unwrap(), a);
        }

        #[test]
        fn binomial_exponents_add(c in -6i64..=6, d in -6i64..=6, n in 0usize..=8) {
            prop_assert_eq!(series_mul(&binomial_neg(c, n), &binomial_neg(d, n)).unwrap(), binomial_neg(c + d, n));
        }
    }
}
