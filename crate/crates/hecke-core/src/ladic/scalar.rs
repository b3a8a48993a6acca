//! Scalars `n / l^v` with arbitrary-precision numerator.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of `Z[1/l]`, kept normalized: `l` never divides the numerator
/// while the denominator exponent is positive, and zero has exponent zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactScalar {
    num: BigInt,
    vexp: u32,
    ell: u64,
}

impl ExactScalar {
    pub fn new(num: BigInt, vexp: u32, ell: u64) -> Self {
        let mut s = ExactScalar { num, vexp, ell };
        s.normalize();
        s
    }

    pub fn from_int<T: Into<BigInt>>(n: T, ell: u64) -> Self {
        ExactScalar { num: n.into(), vexp: 0, ell }
    }

    pub fn zero(ell: u64) -> Self {
        Self::from_int(0, ell)
    }

    pub fn one(ell: u64) -> Self {
        Self::from_int(1, ell)
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator_exponent(&self) -> u32 {
        self.vexp
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.vexp = 0;
            return;
        }
        let ell = BigInt::from(self.ell);
        while self.vexp > 0 {
            let (q, r) = self.num.div_rem(&ell);
            if r.is_zero() {
                self.num = q;
                self.vexp -= 1;
            } else {
                break;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.vexp == 0 && self.num.is_one()
    }

    /// `l`-adic valuation; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        if self.num.is_zero() {
            return None;
        }
        if self.vexp > 0 {
            return Some(-(self.vexp as i64));
        }
        let ell = BigInt::from(self.ell);
        let mut v = 0i64;
        let mut n = self.num.clone();
        loop {
            let (q, r) = n.div_rem(&ell);
            if r.is_zero() {
                v += 1;
                n = q;
            } else {
                return Some(v);
            }
        }
    }

    pub fn is_integral(&self) -> bool {
        self.vexp == 0
    }

    /// Unit test in `Z_l`: valuation zero.
    pub fn is_unit(&self) -> bool {
        self.valuation() == Some(0)
    }

    /// Exact inverse, defined only for units of `Z[1/l]`, i.e. `±l^k`.
    pub fn invert(&self) -> Result<ExactScalar> {
        let v = self.valuation().ok_or_else(|| Error::Invalid("inverting zero".into()))?;
        let unit = &self.num / BigInt::from(self.ell).pow(v.max(0) as u32);
        if !(unit.clone().abs()).is_one() {
            return Err(Error::Invalid(format!("{self} is not invertible in Z[1/l]")));
        }
        // value = unit * l^v; inverse = unit * l^{-v}
        let inv = if v >= 0 {
            ExactScalar::new(unit, v as u32, self.ell)
        } else {
            ExactScalar::new(unit * BigInt::from(self.ell).pow((-v) as u32), 0, self.ell)
        };
        Ok(inv)
    }

    /// Residue of an integral scalar mod `l^m`, in `[0, l^m)`.
    pub fn residue(&self, m: u32) -> Option<u64> {
        if !self.is_integral() {
            return None;
        }
        let modulus = BigInt::from(super::ell_pow(self.ell, m));
        let r = self.num.mod_floor(&modulus);
        Some(u64::try_from(r).expect("residue fits u64"))
    }

    /// Multiply by `l^k` (k may be negative).
    pub fn shift(&self, k: i64) -> ExactScalar {
        if self.num.is_zero() {
            return self.clone();
        }
        if k >= 0 {
            ExactScalar::new(&self.num * BigInt::from(self.ell).pow(k as u32), self.vexp, self.ell)
        } else {
            ExactScalar::new(self.num.clone(), self.vexp + (-k) as u32, self.ell)
        }
    }

    fn check(&self, other: &ExactScalar) {
        assert_eq!(self.ell, other.ell, "mixed primes in scalar arithmetic");
    }

    /// Parse the serialization format `num` or `num/l^v`.
    pub fn parse(s: &str, ell: u64) -> Result<ExactScalar> {
        let bad = || Error::Invalid(format!("bad scalar literal {s:?}"));
        match s.split_once('/') {
            None => {
                let n: BigInt = s.trim().parse().map_err(|_| bad())?;
                Ok(ExactScalar::from_int(n, ell))
            }
            Some((num, den)) => {
                let n: BigInt = num.trim().parse().map_err(|_| bad())?;
                let den = den.trim();
                let v = match den.split_once('^') {
                    None => {
                        if den.parse::<u64>().map_err(|_| bad())? != ell {
                            return Err(bad());
                        }
                        1
                    }
                    Some((base, exp)) => {
                        if base.parse::<u64>().map_err(|_| bad())? != ell {
                            return Err(bad());
                        }
                        exp.parse::<u32>().map_err(|_| bad())?
                    }
                };
                Ok(ExactScalar::new(n, v, ell))
            }
        }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vexp == 0 {
            write!(f, "{}", self.num)
        } else if self.vexp == 1 {
            write!(f, "{}/{}", self.num, self.ell)
        } else {
            write!(f, "{}/{}^{}", self.num, self.ell, self.vexp)
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        self.check(rhs);
        let v = self.vexp.max(rhs.vexp);
        let ell = BigInt::from(self.ell);
        let a = &self.num * ell.pow(v - self.vexp);
        let b = &rhs.num * ell.pow(v - rhs.vexp);
        ExactScalar::new(a + b, v, self.ell)
    }
}

impl Sub for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        self + &(-rhs)
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        self.check(rhs);
        ExactScalar::new(&self.num * &rhs.num, self.vexp + rhs.vexp, self.ell)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar { num: -&self.num, vexp: self.vexp, ell: self.ell }
    }
}
