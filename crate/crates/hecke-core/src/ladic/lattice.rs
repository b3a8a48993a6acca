//! Canonical representatives of `Z_l`-lattices.
//!
//! A coset `gK` for `K` the stabilizer of the standard lattice is determined
//! by the lattice spanned by the columns of `g`. The canonical key rescales
//! the lattice to a primitive integral one and takes the column Hermite form
//! of its generators together with `l^e I`, which pins a unique
//! representative independent of basis and of the working window.

use super::matrix::ExactMatrix;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeKey {
    /// The lattice is `l^{-scale}` times the integral lattice `hnf` spans.
    pub scale: i32,
    /// Hermite form entries, row-major, lower triangular, `l`-power pivots.
    pub hnf: Vec<u128>,
    /// Exponent `e` with `l^e Z^n` inside the rescaled lattice.
    pub window_exponent: u32,
    pub ell: u64,
    pub dim: usize,
}

impl LatticeKey {
    /// The lattice of the standard basis.
    pub fn standard(dim: usize, ell: u64) -> Self {
        let mut hnf = vec![0u128; dim * dim];
        for i in 0..dim {
            hnf[i * dim + i] = 1;
        }
        LatticeKey { scale: 0, hnf, window_exponent: 0, ell, dim }
    }

    /// A canonical basis matrix for the lattice this key names.
    pub fn basis_matrix(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zero(self.dim, self.ell);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = BigInt::from(self.hnf[i * self.dim + j]);
                m.set(i, j, super::ExactScalar::new(v, 0, self.ell).shift(-(self.scale as i64)));
            }
        }
        m
    }
}

impl fmt::Display for LatticeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.hnf.iter().map(|x| x.to_string()).collect();
        write!(f, "{}|{}", self.scale, entries.join(","))
    }
}

impl fmt::Debug for LatticeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical key of the column lattice of `basis`.
///
/// Fails with `WindowEscape` when an elementary divisor exponent of `basis`
/// lands outside `[-window, window]`; the caller is expected to retry with a
/// larger window (and re-verify at the next precision).
pub fn lattice_key(basis: &ExactMatrix, window: u32) -> Result<LatticeKey> {
    let dim = basis.dim();
    let ell = basis.ell();
    let v = basis
        .valuation()
        .ok_or_else(|| Error::Invalid("lattice key of zero matrix".into()))?;
    // rescale to a primitive integral matrix
    let shift = -v;
    let mut n = ExactMatrix::zero(dim, ell);
    for i in 0..dim {
        for j in 0..dim {
            n.set(i, j, basis.get(i, j).shift(shift));
        }
    }
    let det = n.det();
    if det.is_zero() {
        return Err(Error::Invalid("lattice basis is singular".into()));
    }
    let kdet = det.valuation().expect("nonzero det") as u32;
    // elementary divisor exponents of `basis` live in [-shift, kdet - shift]
    let lo = -shift;
    let hi = kdet as i64 - shift;
    let needed = lo.unsigned_abs().max(hi.unsigned_abs()) as u32;
    if needed > window {
        return Err(Error::WindowEscape { needed, window });
    }

    let modulus = BigInt::from(ell).pow(kdet);
    let mut work: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            let mut row: Vec<BigInt> =
                (0..dim).map(|j| n.get(i, j).numerator().mod_floor(&modulus)).collect();
            for j in 0..dim {
                row.push(if i == j { modulus.clone() } else { BigInt::zero() });
            }
            row
        })
        .collect();
    col_hnf_mod(&mut work, &modulus);

    let mut hnf = vec![0u128; dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            hnf[i * dim + j] = u128::try_from(&work[i][j])
                .map_err(|_| Error::Invalid("hnf entry out of range".into()))?;
        }
    }
    Ok(LatticeKey { scale: shift as i32, hnf, window_exponent: kdet, ell, dim })
}

/// In-place column Hermite form of an `n x 2n` generator matrix whose lattice
/// contains `modulus * Z^n`; entries are reduced mod `modulus` throughout.
fn col_hnf_mod(a: &mut [Vec<BigInt>], modulus: &BigInt) {
    let rows = a.len();
    let cols = a[0].len();
    let reduce = |x: &BigInt| -> BigInt {
        if modulus.is_zero() {
            x.clone()
        } else {
            x.mod_floor(modulus)
        }
    };
    for r in 0..rows {
        let next = r;
        loop {
            let mut min_col = None;
            for j in next..cols {
                if !a[r][j].is_zero() {
                    let better = match min_col {
                        None => true,
                        Some(mc) => a[r][j] < a[r][mc],
                    };
                    if better {
                        min_col = Some(j);
                    }
                }
            }
            let Some(mc) = min_col else { break };
            if mc != next {
                for row in a.iter_mut() {
                    row.swap(next, mc);
                }
            }
            let mut again = false;
            for j in next + 1..cols {
                if a[r][j].is_zero() {
                    continue;
                }
                let q = &a[r][j] / &a[r][next];
                for row in a.iter_mut() {
                    let t = &row[next] * &q;
                    row[j] = reduce(&(&row[j] - t));
                }
                if !a[r][j].is_zero() {
                    again = true;
                }
            }
            if !again {
                break;
            }
        }
        // pivot may be zero only if the whole row vanished, which cannot
        // happen with the modulus block present
        debug_assert!(!a[r][next].is_zero(), "rank defect in lattice hnf");
        for j in 0..next {
            let q = a[r][j].div_floor(&a[r][next]);
            for row in a.iter_mut() {
                let t = &row[next] * &q;
                row[j] = &row[j] - t;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladic::ExactScalar;

    #[test]
    fn identity_key_is_standard() {
        let key = lattice_key(&ExactMatrix::identity(4, 2), 4).unwrap();
        assert_eq!(key, LatticeKey::standard(4, 2));
        assert_eq!(key.scale, 0);
        assert_eq!(key.window_exponent, 0);
    }

    #[test]
    fn diagonal_basis_is_its_own_key() {
        let m = ExactMatrix::diag_ell_powers(&[1, 1, 0, 0], 3);
        let key = lattice_key(&m, 4).unwrap();
        assert_eq!(key.scale, 0);
        let d = key.dim;
        assert_eq!(key.hnf[0], 3);
        assert_eq!(key.hnf[d + 1], 3);
        assert_eq!(key.hnf[2 * d + 2], 1);
        assert_eq!(key.hnf[3 * d + 3], 1);
    }

    #[test]
    fn column_operations_do_not_change_key() {
        let ell = 2;
        let m = ExactMatrix::diag_ell_powers(&[1, 1, 0, 0], ell);
        // m * u for a unimodular integral u
        let u = ExactMatrix::from_rows(
            &[vec![1, 3, 0, 2], vec![0, 1, 5, 0], vec![0, 0, 1, 7], vec![0, 0, 0, 1]],
            ell,
        );
        let mu = m.mul(&u).unwrap();
        assert_eq!(lattice_key(&m, 4).unwrap(), lattice_key(&mu, 4).unwrap());
    }

    #[test]
    fn scaling_shifts_only_the_scale() {
        let ell = 5;
        let m = ExactMatrix::diag_ell_powers(&[1, 0, 0, -1], ell);
        let key = lattice_key(&m, 4).unwrap();
        assert_eq!(key.scale, 1);
        let scaled = m.scale(&ExactScalar::one(ell).shift(2));
        let key2 = lattice_key(&scaled, 6).unwrap();
        assert_eq!(key2.scale, -1);
        assert_eq!(key.hnf, key2.hnf);
    }

    #[test]
    fn window_escape_is_reported() {
        let m = ExactMatrix::diag_ell_powers(&[3, 0, 0, 0], 2);
        match lattice_key(&m, 2) {
            Err(crate::error::Error::WindowEscape { needed, window }) => {
                assert_eq!(needed, 3);
                assert_eq!(window, 2);
            }
            other => panic!("expected window escape, got {other:?}"),
        }
    }

    #[test]
    fn basis_matrix_reproduces_key() {
        let ell = 2;
        let m = ExactMatrix::from_rows(
            &[vec![2, 1, 0, 1], vec![0, 1, 1, 0], vec![0, 0, 2, 1], vec![0, 0, 0, 1]],
            ell,
        );
        let key = lattice_key(&m, 4).unwrap();
        let again = lattice_key(&key.basis_matrix(), 4).unwrap();
        assert_eq!(key, again);
    }
}
