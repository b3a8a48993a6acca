//! Square roots of units modulo `l^m` at odd primes, lifted from the residue
//! field one power at a time.

use super::{ell_pow, inv_mod};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;

/// Smallest square root of `a` modulo `l^m`, or `None` when `a` is a
/// non-residue mod `l`. Requires an odd prime and a unit `a`.
pub fn hensel_sqrt(a: &BigInt, ell: u64, m: u32) -> Result<Option<u64>> {
    if ell == 2 {
        return Err(Error::EvenPrime);
    }
    if m == 0 || m > 20 {
        return Err(Error::Invalid(format!("precision {m} out of range")));
    }
    let modulus = ell_pow(ell, m);
    let target = u64::try_from(a.mod_floor(&BigInt::from(modulus))).expect("reduced residue");
    if target % ell == 0 {
        return Err(Error::Invalid("square root of a non-unit".into()));
    }
    // root in the residue field by direct search
    let a0 = target % ell;
    let mut root = None;
    for r in 1..ell {
        if r * r % ell == a0 {
            root = Some(r);
            break;
        }
    }
    let Some(mut r) = root else { return Ok(None) };
    // lift: if r^2 = a mod l^k, correct by t*l^k with t = (a - r^2)/l^k * (2r)^{-1}
    let mut step = ell;
    for _ in 1..m {
        let cur = (r as u128 * r as u128 % modulus as u128) as u64;
        let diff = (target + modulus - cur) % modulus;
        debug_assert_eq!(diff % step, 0);
        let t = (diff / step) % ell;
        let inv2r = inv_mod(2 * r % ell, ell).expect("2r is a unit");
        let t = t * inv2r % ell;
        r = (r + (t as u128 * step as u128 % modulus as u128) as u64) % modulus;
        step *= ell;
    }
    debug_assert_eq!((r as u128 * r as u128) % modulus as u128, target as u128 % modulus as u128);
    Ok(Some(r.min(modulus - r)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_minus_one_mod_five() {
        assert_eq!(hensel_sqrt(&BigInt::from(-1), 5, 1).unwrap(), Some(2));
        assert_eq!(hensel_sqrt(&BigInt::from(-1), 5, 2).unwrap(), Some(7));
    }

    #[test]
    fn two_is_a_nonresidue_mod_five() {
        assert_eq!(hensel_sqrt(&BigInt::from(2), 5, 1).unwrap(), None);
    }

    #[test]
    fn even_prime_rejected() {
        assert!(matches!(hensel_sqrt(&BigInt::from(7), 2, 3), Err(Error::EvenPrime)));
    }

    #[test]
    fn roots_square_back() {
        for (a, ell, m) in [(-1i64, 5u64, 3u32), (-3, 7, 4), (2, 7, 5), (-11, 3, 6)] {
            if let Some(r) = hensel_sqrt(&BigInt::from(a), ell, m).unwrap() {
                let modulus = ell_pow(ell, m);
                let want = BigInt::from(a).mod_floor(&BigInt::from(modulus));
                assert_eq!(BigInt::from(r) * r % modulus, want);
            }
        }
    }
}
