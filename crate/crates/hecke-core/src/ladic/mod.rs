//! Exact arithmetic over the localization `Z[1/l]`.
//!
//! Everything downstream (coset enumeration, membership tests, degree
//! computations) reduces to exact scalar and matrix arithmetic here plus the
//! canonical lattice form of `lattice`, so no rounding can occur anywhere.

mod hensel;
mod lattice;
mod linalg;
mod matrix;
mod scalar;

pub use hensel::hensel_sqrt;
pub use lattice::{lattice_key, LatticeKey};
pub use linalg::{col_hnf_with_transform, intersect_lattices, kernel_basis, saturated_basis};
pub use matrix::ExactMatrix;
pub use scalar::ExactScalar;

/// `ell^e` as u64, panicking on overflow (exponents stay tiny here).
pub fn ell_pow(ell: u64, e: u32) -> u64 {
    ell.checked_pow(e).expect("ell^e overflows u64")
}

/// Modular inverse of `a` mod `n` for `gcd(a, n) = 1`.
pub fn inv_mod(a: u64, n: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (n as i128, (a % n) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(n as i128) as u64)
}

/// `a^k` mod `n`.
pub fn pow_mod(a: u64, mut k: u64, n: u64) -> u64 {
    let mut base = (a % n) as u128;
    let mut acc = 1u128;
    let n = n as u128;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * base % n;
        }
        base = base * base % n;
        k >>= 1;
    }
    acc as u64
}
