use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Polynomial;
use crate::error::{Error, Result};

/// Formal power series `c_0 + c_1 z + ... + c_M z^M` with exact rational
/// coefficients, truncated at order `M`.
///
/// Binary operations return a series whose order is the smaller of the two
/// operand orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    /// Pads with zeros or drops terms so the result has exactly order `order`.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![BigRational::one()], order)
    }

    pub fn from_integers<I>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = BigInt>,
    {
        Self::new(
            coeffs.into_iter().map(BigRational::from_integer).collect(),
            order,
        )
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::from_integers(p.coeffs().iter().take(order + 1).cloned(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(
            self.coeffs[..=order.min(self.order())].to_vec(),
            order.min(self.order()),
        )
    }

    /// Coefficients as integers; fails on the first non-integral one.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegral(format!("series coefficient {i} = {c}")))
                }
            })
            .collect()
    }

    pub fn div(&self, rhs: &PowerSeries) -> Result<PowerSeries> {
        let b0 = rhs.coeff(0);
        if b0.is_zero() {
            return Err(Error::Series("divisor has zero constant term"));
        }
        let order = self.order().min(rhs.order());
        let inv_b0 = b0.recip();
        let mut q: Vec<BigRational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                let b = &rhs.coeffs[k];
                if !b.is_zero() {
                    acc -= b * &q[n - k];
                }
            }
            q.push(acc * &inv_b0);
        }
        Ok(PowerSeries { coeffs: q })
    }

    /// `exp(self)`; requires a zero constant term.
    ///
    /// Uses `n b_n = sum_{k=1}^{n} k a_k b_{n-k}`, from `B' = A' B`.
    pub fn exp(&self) -> Result<PowerSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("exp needs a zero constant term"));
        }
        let order = self.order();
        let mut b: Vec<BigRational> = Vec::with_capacity(order + 1);
        b.push(BigRational::one());
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc += a * BigRational::from_integer(k.into()) * &b[n - k];
                }
            }
            b.push(acc / BigRational::from_integer(n.into()));
        }
        Ok(PowerSeries { coeffs: b })
    }

    /// `log(self)`; requires a constant term of one.
    pub fn log(&self) -> Result<PowerSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Series("log needs a constant term of one"));
        }
        let order = self.order();
        let mut a: Vec<BigRational> = Vec::with_capacity(order + 1);
        a.push(BigRational::zero());
        for n in 1..=order {
            let nr = BigRational::from_integer(n.into());
            let mut acc = &self.coeffs[n] * &nr;
            for k in 1..n {
                let b = &self.coeffs[n - k];
                if !b.is_zero() {
                    acc -= BigRational::from_integer(k.into()) * &a[k] * b;
                }
            }
            a.push(acc / nr);
        }
        Ok(PowerSeries { coeffs: a })
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PowerSeries { coeffs: out }
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
            .collect();
        PowerSeries { coeffs }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        self + &(-rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64], order: usize) -> PowerSeries {
        PowerSeries::from_integers(v.iter().map(|&x| BigInt::from(x)), order)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn multiplying_by_one_is_identity() {
        let a = ints(&[3, -1, 4, 1, -5], 6);
        assert_eq!(&a * &PowerSeries::one(6), a);
    }

    #[test]
    fn geometric_series() {
        let m = 9;
        let geometric = ints(&[1; 10], m);
        let one_minus_z = ints(&[1, -1], m);
        assert_eq!(&one_minus_z * &geometric, PowerSeries::one(m));
    }

    #[test]
    fn product_order_is_the_minimum() {
        let a = ints(&[1, 2], 3);
        let b = ints(&[1, 1], 7);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!(a.div(&b).unwrap().order(), 3);
    }

    #[test]
    fn quotient_of_rose_two_product() {
        // (1 - 2z - 3z^2) / (1 - z)^2 = 1 - sum 4(n-1) z^n
        let m = 12;
        let num = ints(&[1, -2, -3], m);
        let den = ints(&[1, -2, 1], m);
        let quot = num.div(&den).unwrap().integer_coeffs().unwrap();
        assert_eq!(quot[0], BigInt::one());
        for (n, c) in quot.iter().enumerate().skip(1) {
            assert_eq!(*c, BigInt::from(-4 * (n as i64 - 1)), "z^{n}");
        }
    }

    #[test]
    fn division_by_zero_constant_term_fails() {
        let a = ints(&[1], 3);
        let b = ints(&[0, 1], 3);
        assert!(matches!(a.div(&b), Err(Error::Series(_))));
    }

    #[test]
    fn exp_of_zero_is_one() {
        assert_eq!(PowerSeries::zero(5).exp().unwrap(), PowerSeries::one(5));
    }

    #[test]
    fn log_of_one_minus_z() {
        let m = 8;
        let l = ints(&[1, -1], m).log().unwrap();
        assert!(l.coeff(0).is_zero());
        for n in 1..=m {
            assert_eq!(*l.coeff(n), q(-1, n as i64));
        }
    }

    #[test]
    fn exp_and_log_reject_bad_constant_terms() {
        assert!(ints(&[1, 1], 3).exp().is_err());
        assert!(ints(&[2, 1], 3).log().is_err());
    }

    proptest! {
        #[test]
        fn log_inverts_exp(tail in prop::collection::vec((-20i64..20, 1i64..6), 1..8)) {
            let order = tail.len();
            let mut coeffs = vec![BigRational::zero()];
            coeffs.extend(tail.iter().map(|&(n, d)| q(n, d)));
            let a = PowerSeries::new(coeffs, order);
            let back = a.exp().unwrap().log().unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn division_undoes_multiplication(
            a in prop::collection::vec(-9i64..9, 1..8),
            mut b in prop::collection::vec(-9i64..9, 1..8),
        ) {
            b[0] = 1 + b[0].abs();
            let order = 7;
            let (a, b) = (ints(&a, order), ints(&b, order));
            prop_assert_eq!((&a * &b).div(&b).unwrap(), a);
        }
    }
}
