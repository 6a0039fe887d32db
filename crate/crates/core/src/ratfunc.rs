//! Rational functions as canonical quotients of integer polynomials.
//!
//! Canonical form: denominator nonzero with positive leading coefficient, no
//! nonconstant common factor between numerator and denominator, and no common
//! integer content. Equality of values is then structural equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::KernelError;
use crate::poly::IntPoly;
use crate::series::PowerSeries;

#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    /// Cancels the polynomial gcd and the common integer content and fixes
    /// the denominator sign. Idempotent and independent of the input
    /// representative.
    pub fn normalize(num: IntPoly, den: IntPoly) -> Result<Self, KernelError> {
        if den.is_zero() {
            return Err(KernelError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let mut n = num.exact_div(&g).expect("gcd divides numerator");
        let mut d = den.exact_div(&g).expect("gcd divides denominator");
        let c = n.content().gcd(&d.content());
        if !c.is_one() {
            let cp = IntPoly::constant(c);
            n = n.exact_div(&cp).unwrap();
            d = d.exact_div(&cp).unwrap();
        }
        if d.leading().is_negative() {
            n = n.neg();
            d = d.neg();
        }
        Ok(RationalFunction { num: n, den: d })
    }

    pub fn one() -> Self {
        RationalFunction {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RationalFunction {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Numerator degree minus denominator degree; `None` for the zero
    /// function.
    pub fn degree(&self) -> Option<i64> {
        let n = self.num.degree()? as i64;
        Some(n - self.den.degree().unwrap() as i64)
    }

    /// Value at t = 0; `None` when 0 is a pole.
    pub fn eval0(&self) -> Option<BigRational> {
        let d = self.den.eval0();
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(self.num.eval0(), d))
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction::normalize(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominators")
    }

    pub fn div(&self, other: &RationalFunction) -> Result<RationalFunction, KernelError> {
        if other.num.is_zero() {
            return Err(KernelError::ZeroDenominator);
        }
        RationalFunction::normalize(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, e: i64) -> Result<RationalFunction, KernelError> {
        let mag = e.unsigned_abs() as usize;
        let (n, d) = if e >= 0 {
            (self.num.pow(mag), self.den.pow(mag))
        } else {
            if self.num.is_zero() {
                return Err(KernelError::ZeroDenominator);
            }
            (self.den.pow(mag), self.num.pow(mag))
        };
        RationalFunction::normalize(n, d)
    }

    /// Substitutes t -> t^s.
    pub fn inflate(&self, s: usize) -> RationalFunction {
        RationalFunction::normalize(self.num.inflate(s), self.den.inflate(s))
            .expect("inflation keeps the denominator nonzero")
    }

    /// Exact power-series expansion to the given order. Requires that 0 is
    /// not a pole.
    pub fn series(&self, order: usize) -> Result<PowerSeries, KernelError> {
        let n = PowerSeries::from_int_poly(&self.num, order);
        let d = PowerSeries::from_int_poly(&self.den, order);
        n.div(&d)
    }

    /// The unique s-th root with value 1 at t = 0, when it exists as a
    /// rational function. In canonical form a perfect s-th power has
    /// numerator and denominator that are themselves perfect s-th powers, so
    /// both are rooted separately (via an exact series root) and the result
    /// is verified by powering back.
    pub fn nth_root(&self, s: u64) -> Result<RationalFunction, KernelError> {
        assert!(s >= 1, "root index must be positive");
        if self.eval0() != Some(BigRational::one()) {
            return Err(KernelError::ConstantTermMustBe {
                op: "nth_root",
                expected: 1,
            });
        }
        if s == 1 {
            return Ok(self.clone());
        }
        let fail = KernelError::NotAPerfectPower { index: s };
        let mut p = poly_nth_root(&self.num, s).ok_or_else(|| fail.clone())?;
        let q = poly_nth_root(&self.den, s).ok_or_else(|| fail.clone())?;
        // pick the numerator sign that gives value 1 at t = 0
        if p.eval0() != q.eval0() {
            if s % 2 == 0 && p.eval0() == -q.eval0() {
                p = p.neg();
            } else {
                return Err(fail);
            }
        }
        let root = RationalFunction::normalize(p, q)?;
        if &root.powi(s as i64)? != self {
            return Err(fail);
        }
        Ok(root)
    }
}

/// Exact s-th root of an integer polynomial, or `None` when it is not a
/// perfect power. The candidate is recovered from the series root of the
/// constant-normalized polynomial and verified by powering back.
pub fn poly_nth_root(p: &IntPoly, s: u64) -> Option<IntPoly> {
    if p.is_zero() || s == 0 {
        return None;
    }
    if s == 1 {
        return Some(p.clone());
    }
    // split off the power of t
    let shift = p.coeffs().iter().position(|c| !c.is_zero()).unwrap();
    if shift % (s as usize) != 0 {
        return None;
    }
    let q = IntPoly::new(p.coeffs()[shift..].to_vec());
    let deg = q.degree().unwrap();
    if deg % (s as usize) != 0 {
        return None;
    }
    let target_deg = deg / s as usize;
    let a0 = q.eval0();
    let r0 = integer_nth_root(&a0, s)?;
    // series root of q / a0, rescaled by r0
    let scaled = PowerSeries::from_int_poly(&q, target_deg)
        .scale(&BigRational::new(BigInt::one(), a0.clone()));
    let root_series = scaled.nth_root(s).ok()?;
    let mut coeffs = Vec::with_capacity(target_deg + 1);
    for k in 0..=target_deg {
        let c = root_series.coeff(k) * BigRational::from_integer(r0.clone());
        if !c.is_integer() {
            return None;
        }
        coeffs.push(c.to_integer());
    }
    let candidate = IntPoly::new(coeffs);
    if candidate.pow(s as usize) != q {
        return None;
    }
    let mut with_shift = vec![BigInt::zero(); shift / s as usize];
    with_shift.extend_from_slice(candidate.coeffs());
    Some(IntPoly::new(with_shift))
}

/// Exact integer s-th root, respecting sign; `None` when `a` is not a
/// perfect s-th power.
fn integer_nth_root(a: &BigInt, s: u64) -> Option<BigInt> {

    if a.is_zero() {
        return Some(BigInt::zero());
    }
    if a.is_negative() && s % 2 == 0 {
        return None;
    }
    let mag = a.abs().nth_root(s as u32);
    let candidate = if a.is_negative() { -mag } else { mag };
    if num_traits::pow::pow(candidate.clone(), s as usize) == *a {
        Some(candidate)
    } else {
        None
    }
}

impl std::fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        // canonical form fixes the leading sign of the denominator; for
        // reading, the representative with positive constant term is nicer
        if self.den.eval0().is_negative() {
            write!(f, "({}) / ({})", self.num.neg(), self.den.neg())
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl std::fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}
