//! Square matrices over `Z[1/l]` with exact arithmetic.

use super::scalar::ExactScalar;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    dim: usize,
    ell: u64,
    entries: Vec<ExactScalar>,
}

impl ExactMatrix {
    pub fn identity(dim: usize, ell: u64) -> Self {
        let mut m = Self::zero(dim, ell);
        for i in 0..dim {
            m.set(i, i, ExactScalar::one(ell));
        }
        m
    }

    pub fn zero(dim: usize, ell: u64) -> Self {
        ExactMatrix { dim, ell, entries: vec![ExactScalar::zero(ell); dim * dim] }
    }

    pub fn from_rows(rows: &[Vec<i64>], ell: u64) -> Self {
        let dim = rows.len();
        let mut m = Self::zero(dim, ell);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, ExactScalar::from_int(x, ell));
            }
        }
        m
    }

    pub fn from_entries(dim: usize, ell: u64, entries: Vec<ExactScalar>) -> Self {
        assert_eq!(entries.len(), dim * dim);
        ExactMatrix { dim, ell, entries }
    }

    /// Diagonal matrix with the given `l`-power exponents.
    pub fn diag_ell_powers(exps: &[i64], ell: u64) -> Self {
        let dim = exps.len();
        let mut m = Self::zero(dim, ell);
        for (i, &e) in exps.iter().enumerate() {
            m.set(i, i, ExactScalar::one(ell).shift(e));
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactScalar {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExactScalar) {
        assert_eq!(v.ell(), self.ell);
        self.entries[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[ExactScalar] {
        &self.entries
    }

    fn check(&self, other: &ExactMatrix) -> Result<()> {
        if self.dim != other.dim || self.ell != other.ell {
            return Err(Error::Shape(format!(
                "dim {}x{} ell {} vs dim {}x{} ell {}",
                self.dim, self.dim, self.ell, other.dim, other.dim, other.ell
            )));
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.check(rhs)?;
        let n = self.dim;
        let mut out = ExactMatrix::zero(n, self.ell);
        for i in 0..n {
            for j in 0..n {
                let mut acc = ExactScalar::zero(self.ell);
                for k in 0..n {
                    acc = &acc + &(self.get(i, k) * rhs.get(k, j));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.check(rhs)?;
        let entries =
            self.entries.iter().zip(rhs.entries.iter()).map(|(a, b)| a + b).collect();
        Ok(ExactMatrix { dim: self.dim, ell: self.ell, entries })
    }

    pub fn neg(&self) -> ExactMatrix {
        let entries = self.entries.iter().map(|a| -a).collect();
        ExactMatrix { dim: self.dim, ell: self.ell, entries }
    }

    pub fn scale(&self, c: &ExactScalar) -> ExactMatrix {
        let entries = self.entries.iter().map(|a| a * c).collect();
        ExactMatrix { dim: self.dim, ell: self.ell, entries }
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut out = ExactMatrix::zero(self.dim, self.ell);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn det(&self) -> ExactScalar {
        let idx: Vec<usize> = (0..self.dim).collect();
        self.det_rec(0, &idx)
    }

    fn det_rec(&self, row: usize, cols: &[usize]) -> ExactScalar {
        if cols.len() == 1 {
            return self.get(row, cols[0]).clone();
        }
        let mut acc = ExactScalar::zero(self.ell);
        for (pos, &c) in cols.iter().enumerate() {
            let e = self.get(row, c);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = self.det_rec(row + 1, &rest);
            let term = e * &minor;
            acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Exact inverse; requires the determinant to be a unit of `Z[1/l]`.
    pub fn inverse(&self) -> Result<ExactMatrix> {
        let det = self.det();
        let det_inv = det.invert()?;
        let n = self.dim;
        let mut out = ExactMatrix::zero(n, self.ell);
        for i in 0..n {
            for j in 0..n {
                // A^{-1}[i][j] = (-1)^{i+j} * minor(del row j, del col i) / det
                let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
                let minor = self.minor_det(&rows, &cols);
                let sign_pos = (i + j) % 2 == 0;
                let term = &minor * &det_inv;
                out.set(i, j, if sign_pos { term } else { -&term });
            }
        }
        Ok(out)
    }

    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> ExactScalar {
        if rows.len() == 1 {
            return self.get(rows[0], cols[0]).clone();
        }
        let mut acc = ExactScalar::zero(self.ell);
        for (pos, &c) in cols.iter().enumerate() {
            let e = self.get(rows[0], c);
            if e.is_zero() {
                continue;
            }
            let rest_rows = &rows[1..];
            let rest_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = self.minor_det(rest_rows, &rest_cols);
            let term = e * &minor;
            acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Minimum entry valuation; `None` for the zero matrix.
    pub fn valuation(&self) -> Option<i64> {
        self.entries.iter().filter_map(|e| e.valuation()).min()
    }

    /// Integral flag together with the minimum valuation (0 for zero matrix).
    pub fn integrality(&self) -> (bool, i64) {
        let v = self.valuation().unwrap_or(0);
        (v >= 0, v)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integral())
    }

    pub fn is_identity(&self) -> bool {
        self == &ExactMatrix::identity(self.dim, self.ell)
    }

    /// `g * self * g^{-1}`.
    pub fn conjugate_by(&self, g: &ExactMatrix) -> Result<ExactMatrix> {
        g.mul(self)?.mul(&g.inverse()?)
    }

    /// Entry residues mod `l^m`, provided the matrix is integral.
    pub fn residues(&self, m: u32) -> Option<Vec<u64>> {
        self.entries.iter().map(|e| e.residue(m)).collect()
    }

    /// Lift of a residue matrix (row-major, mod `l^m`) to small integers.
    pub fn from_residues(dim: usize, ell: u64, vals: &[u64]) -> Self {
        let entries = vals.iter().map(|&v| ExactScalar::from_int(BigInt::from(v), ell)).collect();
        ExactMatrix { dim, ell, entries }
    }

    /// Similitude factor `c` with `g^T J g = c J`, if one exists.
    pub fn similitude(&self, form: &ExactMatrix) -> Option<ExactScalar> {
        let s = self.transpose().mul(form).ok()?.mul(self).ok()?;
        // pick the first nonzero entry of the form to solve for c
        let mut c = None;
        for i in 0..self.dim {
            for j in 0..self.dim {
                let f = form.get(i, j);
                if !f.is_zero() {
                    let cand = &(s.get(i, j).clone()) * &f.invert().ok()?;
                    c = Some(cand);
                    break;
                }
            }
            if c.is_some() {
                break;
            }
        }
        let c = c?;
        if s == form.scale(&c) {
            Some(c)
        } else {
            None
        }
    }

    /// Row-major serialization as `num/l^v` strings.
    pub fn entry_strings(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.to_string()).collect()
    }

    pub fn parse_entries(dim: usize, ell: u64, strings: &[String]) -> Result<ExactMatrix> {
        if strings.len() != dim * dim {
            return Err(Error::Invalid("wrong entry count".into()));
        }
        let entries: Result<Vec<_>> =
            strings.iter().map(|s| ExactScalar::parse(s, ell)).collect();
        Ok(ExactMatrix { dim, ell, entries: entries? })
    }

    /// True when every entry outside the listed positions is zero.
    pub fn supported_on(&self, positions: &[(usize, usize)]) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !self.get(i, j).is_zero() && !positions.contains(&(i, j)) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladic::ExactScalar;

    fn tau(ell: u64) -> ExactMatrix {
        // identity plus 1/l at (0,3) and (1,2)
        let mut t = ExactMatrix::identity(4, ell);
        t.set(0, 3, ExactScalar::one(ell).shift(-1));
        t.set(1, 2, ExactScalar::one(ell).shift(-1));
        t
    }

    fn symplectic_form(ell: u64) -> ExactMatrix {
        ExactMatrix::from_rows(
            &[vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![-1, 0, 0, 0], vec![0, -1, 0, 0]],
            ell,
        )
    }

    #[test]
    fn identity_times_identity() {
        let i = ExactMatrix::identity(4, 2);
        assert_eq!(i.mul(&i).unwrap(), i);
    }

    #[test]
    fn tau_times_inverse_is_identity() {
        let t = tau(2);
        let ti = t.inverse().unwrap();
        assert!(t.mul(&ti).unwrap().is_identity());
    }

    #[test]
    fn sigma_times_tau_has_unit_corner() {
        // diag(2,2,1,1) * tau at l = 2: entry 2 * (1/2) = 1 at position (0,3)
        let sigma = ExactMatrix::diag_ell_powers(&[1, 1, 0, 0], 2);
        let prod = sigma.mul(&tau(2)).unwrap();
        assert_eq!(prod.get(0, 3), &ExactScalar::one(2));
        assert_eq!(prod.get(1, 2), &ExactScalar::one(2));
        assert_eq!(prod.get(0, 0), &ExactScalar::from_int(2, 2));
        assert!(prod.is_integral());
    }

    #[test]
    fn integrality_flags() {
        let i = ExactMatrix::identity(4, 3);
        assert_eq!(i.integrality(), (true, 0));
        let t = tau(3);
        assert_eq!(t.integrality(), (false, -1));
    }

    #[test]
    fn conjugated_involution_integral_only_at_two() {
        // gamma = tau^{-1} w tau where w = diag(1,-1,1,-1)
        for ell in [2u64, 3] {
            let w = ExactMatrix::from_rows(
                &[vec![1, 0, 0, 0], vec![0, -1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, -1]],
                ell,
            );
            let t = tau(ell);
            let gamma = t.inverse().unwrap().mul(&w).unwrap().mul(&t).unwrap();
            let (integral, val) = gamma.integrality();
            if ell == 2 {
                assert!(integral, "gamma must be integral at 2:\n{gamma}");
                assert_eq!(val, 0);
                // entries 2/l = 1 at (0,3) and -2/l = -1 at (1,2)
                assert_eq!(gamma.get(0, 3), &ExactScalar::one(2));
                assert_eq!(gamma.get(1, 2), &(-&ExactScalar::one(2)));
            } else {
                assert!(!integral);
                assert_eq!(val, -1);
                assert_eq!(gamma.get(0, 3), &ExactScalar::new(2.into(), 1, 3));
                assert_eq!(gamma.get(1, 2), &ExactScalar::new((-2).into(), 1, 3));
            }
            // gamma is an involution either way
            assert!(gamma.mul(&gamma).unwrap().is_identity());
        }
    }

    #[test]
    fn similitude_of_symplectic_elements() {
        let j = symplectic_form(2);
        let w = ExactMatrix::from_rows(
            &[vec![1, 0, 0, 0], vec![0, -1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, -1]],
            2,
        );
        assert_eq!(w.similitude(&j), Some(ExactScalar::one(2)));
        let sigma = ExactMatrix::diag_ell_powers(&[1, 1, 0, 0], 2);
        assert_eq!(sigma.similitude(&j), Some(ExactScalar::from_int(2, 2)));
        let bad = ExactMatrix::from_rows(
            &[vec![1, 1, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
            2,
        );
        assert_eq!(bad.similitude(&j), None);
    }

    #[test]
    fn serialization_round_trip() {
        let t = tau(5);
        let strings = t.entry_strings();
        let back = ExactMatrix::parse_entries(4, 5, &strings).unwrap();
        assert_eq!(t, back);
    }
}
