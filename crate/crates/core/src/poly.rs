//! Integer-coefficient polynomials in one variable.
//!
//! Coefficients are stored in ascending degree with no trailing zeros; the
//! zero polynomial has an empty coefficient list.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::KernelError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial c * t^k.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly::new(coeffs)
    }

    /// 1 - t^k.
    pub fn one_minus_t_pow(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::one();
        coeffs[k] -= BigInt::one();
        IntPoly::new(coeffs)
    }

    /// Clears denominators of an exact rational coefficient list and divides
    /// by the content, preserving the sign of the leading coefficient. A
    /// monic integral input comes back unchanged.
    pub fn from_rational_coeffs_primitive(coeffs: &[BigRational]) -> Self {
        let mut lcm = BigInt::one();
        for c in coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| {
                let scaled = c * BigRational::from_integer(lcm.clone());
                debug_assert!(scaled.is_integer());
                scaled.to_integer()
            })
            .collect();
        IntPoly::new(ints).primitive_part()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval0(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, mut e: usize) -> IntPoly {
        let mut result = IntPoly::one();
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

    /// Substitutes t -> t^s.
    pub fn inflate(&self, s: usize) -> IntPoly {
        assert!(s >= 1);
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); (self.coeffs.len() - 1) * s + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * s] = c.clone();
        }
        IntPoly::new(out)
    }

    /// Gcd of the coefficient magnitudes; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divides out the content, keeping the sign of the leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Reversal t^n * p(1/t), padding with zeros up to length n + 1. This is
    /// what turns det(tI - M) into det(I - tM).
    pub fn reversed(&self, n: usize) -> IntPoly {
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            assert!(i <= n, "reversal degree too small");
            out[n - i] = c.clone();
        }
        IntPoly::new(out)
    }

    /// Quotient and remainder over the rationals.
    pub fn div_rem_rational(&self, divisor: &IntPoly) -> Result<(Vec<BigRational>, Vec<BigRational>), KernelError> {
        if divisor.is_zero() {
            return Err(KernelError::ZeroDenominator);
        }
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let dd = divisor.degree().unwrap();
        let lead = BigRational::from_integer(divisor.leading());
        let mut quot: Vec<BigRational> = Vec::new();
        if rem.len() > dd {
            quot = vec![BigRational::zero(); rem.len() - dd];
        }
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let f = rem.last().unwrap() / &lead;
            quot[k] = f.clone();
            for i in 0..=dd {
                let v = rem[k + i].clone() - &f * BigRational::from_integer(divisor.coeff(i));
                rem[k + i] = v;
            }
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        Ok((quot, rem))
    }

    /// Tests whether `divisor` divides `self` exactly over the rationals.
    pub fn divides_exactly(&self, divisor: &IntPoly) -> bool {
        match self.div_rem_rational(divisor) {
            Ok((_, rem)) => rem.is_empty(),
            Err(_) => false,
        }
    }

    /// Exact division; `None` when the division leaves a remainder or a
    /// non-integral quotient.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem_rational(divisor).ok()?;
        if !r.is_empty() {
            return None;
        }
        if q.iter().any(|c| !c.is_integer()) {
            return None;
        }
        Some(IntPoly::new(q.into_iter().map(|c| c.to_integer()).collect()))
    }

    /// Primitive gcd with positive leading coefficient (contents are ignored;
    /// callers that care about contents handle them separately).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b.positive_leading();
        }
        while !b.is_zero() {
            // pseudo-remainder keeps everything in integers
            let rem = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = rem;
        }
        a.positive_leading()
    }

    fn positive_leading(&self) -> IntPoly {
        if self.leading().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("pseudo_rem by zero");
        let mut rem = self.clone();
        let lead = divisor.leading();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            // rem = lead * rem - lc(rem) t^(rd-dd) * divisor
            let lc = rem.leading();
            let scaled: Vec<BigInt> = rem.coeffs.iter().map(|c| c * &lead).collect();
            let mut rem2 = IntPoly::new(scaled);
            let shift = IntPoly::monomial(lc, rd - dd).mul(divisor);
            rem2 = rem2.sub(&shift);
            rem = rem2;
        }
        rem
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }
}

impl std::fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                }
                if k == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{k}")?;
                }
            }
        }
        Ok(())
    }
}
