//! Norm-one units of the imaginary quadratic field, in the rational
//! parametrization `x + y sqrt(-d)` with
//! `x = (1 - d m^2 l^2) / (1 + d m^2 l^2)` and `y = 2 m l / (1 + d m^2 l^2)`.

use crate::error::{Error, Result};
use crate::ladic::{ell_pow, inv_mod};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiUnit {
    pub x: BigRational,
    pub y: BigRational,
    pub d: u64,
    pub m_index: u32,
    pub is_ell_invertible: bool,
}

/// Build the norm-one unit for the given index and verify `x^2 + d y^2 = 1`
/// exactly. The `l`-invertibility flag is the computed verdict of whether
/// the image under the fixed embedding is `1 mod l`, not an assumption.
pub fn xi_generator(d: u64, m_index: u32, ell: u64, precision: u32) -> Result<XiUnit> {
    if ell == 2 || d % ell == 0 {
        return Err(Error::Invalid(format!("prime {ell} must not divide 2*{d}")));
    }
    if m_index == 0 {
        return Err(Error::Invalid("unit index must be positive".into()));
    }
    let dm2l2 = BigInt::from(d) * BigInt::from(m_index).pow(2) * BigInt::from(ell).pow(2);
    let den = BigInt::one() + &dm2l2;
    let x = BigRational::new(BigInt::one() - &dm2l2, den.clone());
    let y = BigRational::new(BigInt::from(2u64 * ell) * BigInt::from(m_index), den);
    let norm = &x * &x + BigRational::from(BigInt::from(d)) * &y * &y;
    if !norm.is_one() {
        return Err(Error::OracleMismatch(format!("norm of xi is {norm}, expected 1")));
    }
    let alpha = crate::ladic::hensel_sqrt(&BigInt::from(-(d as i64)), ell, precision)?
        .ok_or_else(|| Error::Invalid(format!("-{d} is a non-residue mod {ell}")))?;
    let xi = XiUnit { x, y, d, m_index, is_ell_invertible: false };
    let j1 = xi.embed(alpha, ell, 1);
    Ok(XiUnit { is_ell_invertible: j1 == 1, ..xi })
}

impl XiUnit {
    /// Residue of `x + y alpha` mod `l^m`; the denominators are units at `l`.
    pub fn embed(&self, alpha: u64, ell: u64, m: u32) -> u64 {
        let modulus = ell_pow(ell, m);
        let md = BigInt::from(modulus);
        let red = |r: &BigRational| -> u64 {
            let num = r.numer().mod_floor(&md);
            let den = r.denom().mod_floor(&md);
            let num = u64::try_from(num).unwrap();
            let den = u64::try_from(den).unwrap();
            let inv = inv_mod(den, modulus).expect("denominator is a unit at l");
            (num as u128 * inv as u128 % modulus as u128) as u64
        };
        let x = red(&self.x);
        let y = red(&self.y);
        ((x as u128 + y as u128 * (alpha as u128 % modulus as u128)) % modulus as u128) as u64
    }

    /// Exact norm check, re-runnable by callers.
    pub fn norm_is_one(&self) -> bool {
        (&self.x * &self.x + BigRational::from(BigInt::from(self.d)) * &self.y * &self.y).is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_example_values() {
        // d=1, m=1, l=5: x = -12/13, y = 5/13
        let xi = xi_generator(1, 1, 5, 2).unwrap();
        assert_eq!(xi.x, BigRational::new(BigInt::from(-12), BigInt::from(13)));
        assert_eq!(xi.y, BigRational::new(BigInt::from(5), BigInt::from(13)));
        assert!(xi.norm_is_one());
        assert!(xi.is_ell_invertible);
    }

    #[test]
    fn norm_is_always_one() {
        for (d, m, ell) in [(1, 1, 5), (1, 2, 5), (3, 1, 7), (3, 5, 7), (11, 4, 3)] {
            let xi = xi_generator(d, m, ell, 3).unwrap();
            assert!(xi.norm_is_one(), "norm failed for d={d} m={m} l={ell}");
        }
    }

    #[test]
    fn invertibility_verdict_stable_under_precision() {
        for (d, m, ell) in [(1u64, 1u32, 5u64), (1, 2, 5), (3, 1, 7)] {
            let mut verdicts = Vec::new();
            for prec in 1..=4 {
                let xi = xi_generator(d, m, ell, prec).unwrap();
                verdicts.push(xi.is_ell_invertible);
            }
            assert!(verdicts.windows(2).all(|w| w[0] == w[1]), "unstable verdict");
            assert!(verdicts[0]);
        }
    }

    #[test]
    fn embedding_image_is_one_mod_ell() {
        let prec = 3;
        let xi = xi_generator(1, 1, 5, prec).unwrap();
        let alpha = crate::ladic::hensel_sqrt(&BigInt::from(-1), 5, prec).unwrap().unwrap();
        let j = xi.embed(alpha, 5, prec);
        assert_eq!(j % 5, 1);
        // and the conjugate x - y*alpha is its inverse mod 5^prec
        let xi_conj = XiUnit { y: -xi.y.clone(), ..xi.clone() };
        let jc = xi_conj.embed(alpha, 5, prec);
        let modulus = ell_pow(5, prec);
        assert_eq!(j as u128 * jc as u128 % modulus as u128, 1);
    }

    #[test]
    fn inert_prime_is_rejected() {
        assert!(xi_generator(1, 1, 7, 2).is_err());
    }
}
