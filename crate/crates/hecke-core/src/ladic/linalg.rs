//! Integer linear algebra helpers: column HNF with transform, kernels,
//! saturation, lattice intersections.
//!
//! These run on tiny matrices (at most 16 x 32 here), so the plain
//! big-integer algorithms are more than fast enough.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type IMat = Vec<Vec<BigInt>>;

fn swap_cols(a: &mut IMat, i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

fn addmul_col(a: &mut IMat, dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in a.iter_mut() {
        let t = &row[src] * q;
        row[dst] += t;
    }
}

fn negate_col(a: &mut IMat, j: usize) {
    for row in a.iter_mut() {
        let v = -&row[j];
        row[j] = v;
    }
}

/// Column Hermite form: returns `(h, u)` with `a * u = h` and `u` unimodular.
/// `h` is lower-echelon: pivot of each processed row sits in the leftmost
/// unused column, is positive, and entries left of it in its row are reduced
/// into `[0, pivot)`. Columns past the rank are zero.
pub fn col_hnf_with_transform(a: &IMat) -> (IMat, IMat) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut h = a.clone();
    let mut u: IMat = (0..cols)
        .map(|i| (0..cols).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let mut next = 0usize;
    for r in 0..rows {
        if next >= cols {
            break;
        }
        // euclid all nonzero entries of row r (columns >= next) into one
        loop {
            let mut min_col = None;
            for j in next..cols {
                if !h[r][j].is_zero() {
                    min_col = match min_col {
                        None => Some(j),
                        Some(mc) => {
                            if h[r][j].abs() < h[r][mc].abs() {
                                Some(j)
                            } else {
                                Some(mc)
                            }
                        }
                    };
                }
            }
            let Some(mc) = min_col else { break };
            if mc != next {
                swap_cols(&mut h, next, mc);
                swap_cols(&mut u, next, mc);
            }
            let mut done = true;
            for j in next + 1..cols {
                if h[r][j].is_zero() {
                    continue;
                }
                let q = -(&h[r][j] / &h[r][next]);
                addmul_col(&mut h, j, next, &q);
                addmul_col(&mut u, j, next, &q);
                if !h[r][j].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[r][next].is_zero() {
            continue;
        }
        if h[r][next].is_negative() {
            negate_col(&mut h, next);
            negate_col(&mut u, next);
        }
        // reduce the entries to the left of the pivot in this row
        for j in 0..next {
            let q = -h[r][j].div_floor(&h[r][next]);
            addmul_col(&mut h, j, next, &q);
            addmul_col(&mut u, j, next, &q);
        }
        next += 1;
    }
    (h, u)
}

/// Basis of the integer kernel `{x : a x = 0}`; automatically saturated.
pub fn kernel_basis(a: &IMat) -> Vec<Vec<BigInt>> {
    let cols = if a.is_empty() { 0 } else { a[0].len() };
    let (h, u) = col_hnf_with_transform(a);
    let mut out = Vec::new();
    for j in 0..cols {
        if h.iter().all(|row| row[j].is_zero()) {
            out.push(u.iter().map(|row| row[j].clone()).collect());
        }
    }
    out
}

/// Basis of the saturation `span_Q(rows) ∩ Z^m` given spanning rows.
pub fn saturated_basis(rows: &IMat) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return Vec::new();
    }
    // orthogonal complement of the row span
    let perp = kernel_basis(rows);
    if perp.is_empty() {
        // full row span: saturation is all of Z^m
        let m = rows[0].len();
        return (0..m)
            .map(|i| (0..m).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect();
    }
    // saturation = vectors orthogonal to the complement
    let perp_rows: IMat = perp;
    kernel_basis(&perp_rows)
}

/// Basis of `L1 ∩ L2` where each lattice is given by basis vectors in `Z^m`.
pub fn intersect_lattices(b1: &[Vec<BigInt>], b2: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if b1.is_empty() || b2.is_empty() {
        return Vec::new();
    }
    let m = b1[0].len();
    let k1 = b1.len();
    let k2 = b2.len();
    // columns: [B1 | -B2], kernel vectors (x, y) give B1 x = B2 y in L1 ∩ L2
    let stacked: IMat = (0..m)
        .map(|row| {
            let mut r: Vec<BigInt> = Vec::with_capacity(k1 + k2);
            for v in b1 {
                r.push(v[row].clone());
            }
            for v in b2 {
                r.push(-&v[row]);
            }
            r
        })
        .collect();
    let ker = kernel_basis(&stacked);
    ker.iter()
        .map(|k| {
            (0..m)
                .map(|row| {
                    let mut acc = BigInt::zero();
                    for (i, v) in b1.iter().enumerate() {
                        acc += &v[row] * &k[i];
                    }
                    acc
                })
                .collect()
        })
        .collect()
}
