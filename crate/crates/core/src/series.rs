//! Truncated formal power series with exact rational coefficients.
//!
//! Every series carries its truncation order explicitly; operations on
//! mismatched orders truncate to the smaller one. The coefficient list always
//! has length `order + 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::KernelError;
use crate::poly::IntPoly;

#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigRational>,
}

impl PowerSeries {
    /// Builds a series from coefficients, padding or truncating to `order`.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::new(vec![BigRational::one()], order)
    }

    pub fn from_int_poly(p: &IntPoly, order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|k| BigRational::from_integer(p.coeff(k)))
            .collect();
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        PowerSeries::new(self.coeffs[..=order.min(self.order())].to_vec(), order.min(self.order()))
    }

    fn joint_order(&self, other: &PowerSeries) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.joint_order(other);
        PowerSeries::new((0..=n).map(|k| self.coeff(k) + other.coeff(k)).collect(), n)
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.joint_order(other);
        PowerSeries::new((0..=n).map(|k| self.coeff(k) - other.coeff(k)).collect(), n)
    }

    pub fn scale(&self, c: &BigRational) -> PowerSeries {
        PowerSeries::new(self.coeffs.iter().map(|x| x * c).collect(), self.order())
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let n = self.joint_order(other);
        let mut out = vec![BigRational::zero(); n + 1];
        for i in 0..=n {
            let a = self.coeff(i);
            if a.is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                let b = other.coeff(j);
                if !b.is_zero() {
                    out[i + j] += &a * b;
                }
            }
        }
        PowerSeries::new(out, n)
    }

    /// Series division; the divisor must have a nonzero constant term.
    pub fn div(&self, other: &PowerSeries) -> Result<PowerSeries, KernelError> {
        if other.coeff(0).is_zero() {
            return Err(KernelError::ZeroDenominator);
        }
        let n = self.joint_order(other);
        let b0 = other.coeff(0);
        let mut out = vec![BigRational::zero(); n + 1];
        for k in 0..=n {
            let mut s = self.coeff(k);
            for j in 1..=k {
                s -= other.coeff(j) * &out[k - j];
            }
            out[k] = s / &b0;
        }
        Ok(PowerSeries::new(out, n))
    }

    /// exp of a series with zero constant term, exact to the carried order.
    pub fn exp(&self) -> Result<PowerSeries, KernelError> {
        if !self.coeff(0).is_zero() {
            return Err(KernelError::ConstantTermMustBe {
                op: "exp",
                expected: 0,
            });
        }
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        out[0] = BigRational::one();
        // k e_k = sum_{j=1..k} j s_j e_{k-j}
        for k in 1..=n {
            let mut s = BigRational::zero();
            for j in 1..=k {
                let sj = self.coeff(j);
                if !sj.is_zero() {
                    s += BigRational::from_integer(BigInt::from(j as i64)) * sj * &out[k - j];
                }
            }
            out[k] = s / BigRational::from_integer(BigInt::from(k as i64));
        }
        Ok(PowerSeries::new(out, n))
    }

    /// log of a series with constant term one, exact to the carried order.
    pub fn log(&self) -> Result<PowerSeries, KernelError> {
        if !self.coeff(0).is_one() {
            return Err(KernelError::ConstantTermMustBe {
                op: "log",
                expected: 1,
            });
        }
        let n = self.order();
        // l' = s'/s, integrated term by term
        let mut out = vec![BigRational::zero(); n + 1];
        // d[k] = coefficient of t^k in s' / s, k = 0..n-1
        let mut d = vec![BigRational::zero(); n.max(1)];
        for k in 0..n {
            let mut s = BigRational::from_integer(BigInt::from((k + 1) as i64)) * self.coeff(k + 1);
            for j in 1..=k {
                s -= self.coeff(j) * &d[k - j];
            }
            d[k] = s;
        }
        for k in 1..=n {
            out[k] = d[k - 1].clone() / BigRational::from_integer(BigInt::from(k as i64));
        }
        Ok(PowerSeries::new(out, n))
    }

    /// The unique s-th root with constant term one, via exp(log(S)/s).
    pub fn nth_root(&self, s: u64) -> Result<PowerSeries, KernelError> {
        assert!(s >= 1, "root index must be positive");
        if !self.coeff(0).is_one() {
            return Err(KernelError::ConstantTermMustBe {
                op: "nth_root",
                expected: 1,
            });
        }
        let scaled = self
            .log()?
            .scale(&BigRational::new(BigInt::one(), BigInt::from(s)));
        scaled.exp()
    }

    /// Integer power by repeated multiplication (within the carried order).
    pub fn pow(&self, mut e: u64) -> PowerSeries {
        let mut result = PowerSeries::one(self.order());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Substitutes t -> t^s, truncating to the same order.
    pub fn inflate(&self, s: usize) -> PowerSeries {
        assert!(s >= 1);
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            if k * s > n {
                break;
            }
            out[k * s] = c.clone();
        }
        PowerSeries::new(out, n)
    }
}

impl std::fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| format!("{c} t^{k}"))
            .collect();
        write!(f, "Series[{}; O(t^{})]", parts.join(" + "), self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn from_i64(cs: &[i64], order: usize) -> PowerSeries {
        PowerSeries::new(cs.iter().map(|&c| rat(c, 1)).collect(), order)
    }

    #[test]
    fn exp_of_zero_is_one() {
        assert_eq!(PowerSeries::zero(5).exp().unwrap(), PowerSeries::one(5));
    }

    #[test]
    fn exp_of_harmonic_sum_is_geometric_series() {
        // exp(sum_{m>=1} t^m/m) = 1/(1-t)
        let order = 5;
        let mut coeffs = vec![BigRational::zero()];
        for m in 1..=order as i64 {
            coeffs.push(rat(1, m));
        }
        let s = PowerSeries::new(coeffs, order);
        let e = s.exp().unwrap();
        assert_eq!(e, from_i64(&[1, 1, 1, 1, 1, 1], order));
    }

    #[test]
    fn log_exp_round_trip() {
        let s = PowerSeries::new(vec![rat(0, 1), rat(1, 1), rat(-3, 2), rat(5, 7), rat(0, 1), rat(2, 3)], 5);
        assert_eq!(s.exp().unwrap().log().unwrap(), s);
        let u = PowerSeries::new(vec![rat(1, 1), rat(2, 1), rat(1, 3), rat(-4, 5), rat(1, 1)], 4);
        assert_eq!(u.log().unwrap().exp().unwrap(), u);
    }

    #[test]
    fn exp_requires_zero_constant_term() {
        assert!(PowerSeries::one(3).exp().is_err());
        assert!(PowerSeries::zero(3).log().is_err());
    }

    #[test]
    fn nth_root_of_one_is_one() {
        for s in 1..=6 {
            assert_eq!(PowerSeries::one(6).nth_root(s).unwrap(), PowerSeries::one(6));
        }
    }

    #[test]
    fn square_root_of_perfect_square() {
        // (1 - t^2)^2 = 1 - 2t^2 + t^4, expanded to order 6
        let sq = from_i64(&[1, 0, -2, 0, 1, 0, 0], 6);
        let root = sq.nth_root(2).unwrap();
        assert_eq!(root, from_i64(&[1, 0, -1, 0, 0, 0, 0], 6));
    }

    #[test]
    fn nth_root_power_round_trip() {
        let s = PowerSeries::new(vec![rat(1, 1), rat(1, 2), rat(-2, 3), rat(4, 1), rat(-1, 5)], 4);
        for e in 2..=5u64 {
            let r = s.nth_root(e).unwrap();
            assert_eq!(r.pow(e), s);
        }
    }

    #[test]
    fn mismatched_orders_truncate_to_min() {
        let a = from_i64(&[1, 1, 1, 1, 1], 4);
        let b = from_i64(&[1, 2], 1);
        assert_eq!(a.mul(&b).order(), 1);
        assert_eq!(a.add(&b).order(), 1);
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = from_i64(&[1, -1, 3, 0, 2], 4);
        let b = from_i64(&[2, 5, -1, 1, 0], 4);
        let q = a.div(&b).unwrap();
        assert_eq!(q.mul(&b), a);
        assert!(a.div(&PowerSeries::zero(4)).is_err());
    }

    #[test]
    fn inflate_spreads_coefficients() {
        let a = from_i64(&[1, 2, 3], 2).truncate(2);
        let spread = PowerSeries::new(a.coeffs().to_vec(), 6).inflate(2);
        assert_eq!(spread, from_i64(&[1, 0, 2, 0, 3, 0, 0], 6));
    }
}
