//! Generation certificates: the order of the subgroup that a generator set
//! reaches in `G(Z/l^m)`, computed exactly for `m <= 2`.
//!
//! For `m = 1` this is a plain closure. For `m = 2` the reduction-mod-`l`
//! closure is run with section representatives carried mod `l^2`; the
//! intersection with the congruence kernel is generated by the Schreier
//! elements of that section (Schreier's lemma), and the kernel is elementary
//! abelian, so its order is `l^rank` of the logarithm vectors.

use super::Element;
use crate::error::{Error, Result};
use crate::ladic::{ell_pow, inv_mod};
use std::collections::HashMap;

/// Residue representation: 16 matrix entries then the scalar coordinate.
type Res = [u16; 17];

fn res_of(e: &Element, ell: u64, m: u32) -> Result<Res> {
    let vals = e
        .residue_key(m)
        .ok_or_else(|| Error::Invalid("non-integral generator in closure".into()))?;
    let modulus = ell_pow(ell, m);
    let mut out = [0u16; 17];
    for (i, v) in vals.iter().enumerate() {
        out[i] = (*v % modulus) as u16;
    }
    Ok(out)
}

fn mul(a: &Res, b: &Res, modulus: u64) -> Res {
    let mut out = [0u16; 17];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = 0u64;
            for k in 0..4 {
                acc += a[i * 4 + k] as u64 * b[k * 4 + j] as u64;
            }
            out[i * 4 + j] = (acc % modulus) as u16;
        }
    }
    out[16] = (a[16] as u64 * b[16] as u64 % modulus) as u16;
    out
}

fn identity_res() -> Res {
    let mut out = [0u16; 17];
    for i in 0..4 {
        out[i * 4 + i] = 1;
    }
    out[16] = 1;
    out
}

fn reduce(a: &Res, modulus: u64) -> Res {
    let mut out = *a;
    for v in out.iter_mut() {
        *v %= modulus as u16;
    }
    out
}

fn det3(rows: &[usize; 3], cols: &[usize; 3], a: &Res, m: i128) -> i128 {
    let e = |r: usize, c: usize| a[rows[r] * 4 + cols[c]] as i128;
    let d = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
        - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
    ((d % m) + m) % m
}

fn det4(a: &Res, modulus: u64) -> u64 {
    let m = modulus as i128;
    let mut acc = 0i128;
    for c in 0..4 {
        let mut cols = [0usize; 3];
        let mut k = 0;
        for x in 0..4 {
            if x != c {
                cols[k] = x;
                k += 1;
            }
        }
        let minor = det3(&[1, 2, 3], &cols, a, m);
        let term = a[c] as i128 * minor % m;
        acc = if c % 2 == 0 { acc + term } else { acc - term };
    }
    (((acc % m) + m) % m) as u64
}

/// Inverse mod `l^m` via the adjugate; the determinant must be a unit.
fn inverse_res(a: &Res, modulus: u64) -> Res {
    let det = det4(a, modulus);
    let det_inv = inv_mod(det, modulus).expect("unit determinant") as i128;
    let m = modulus as i128;
    let mut out = [0u16; 17];
    for i in 0..4 {
        for j in 0..4 {
            let mut rows = [0usize; 3];
            let mut cols = [0usize; 3];
            let (mut r, mut c) = (0, 0);
            for x in 0..4 {
                if x != j {
                    rows[r] = x;
                    r += 1;
                }
                if x != i {
                    cols[c] = x;
                    c += 1;
                }
            }
            let d3 = det3(&rows, &cols, a, m);
            let sign = if (i + j) % 2 == 0 { 1i128 } else { -1 };
            out[i * 4 + j] = ((sign * d3 % m * det_inv % m + m) % m) as u16;
        }
    }
    out[16] = inv_mod(a[16] as u64, modulus).expect("unit scalar") as u16;
    out
}

/// Order of the closure of `gens` in `G(Z/l^m)`, for `m <= 2`.
pub fn closure_order(gens: &[Element], ell: u64, m: u32) -> Result<u128> {
    if m == 0 || m > 2 {
        return Err(Error::Invalid("closure certificates run at m <= 2".into()));
    }
    let modulus = ell_pow(ell, m);
    let gens_res: Result<Vec<Res>> = gens.iter().map(|g| res_of(g, ell, m)).collect();
    let gens_res = gens_res?;
    if m == 1 {
        let mut seen: HashMap<Res, ()> = HashMap::new();
        let mut frontier = vec![identity_res()];
        seen.insert(frontier[0], ());
        while let Some(x) = frontier.pop() {
            for g in &gens_res {
                let y = mul(&x, g, modulus);
                if seen.insert(y, ()).is_none() {
                    frontier.push(y);
                }
            }
        }
        return Ok(seen.len() as u128);
    }

    // m = 2: closure of the mod-l image with section elements mod l^2
    let mut section: HashMap<Res, Res> = HashMap::new();
    let id = identity_res();
    section.insert(reduce(&id, ell), id);
    let mut frontier = vec![id];
    let mut basis: Vec<Vec<u8>> = Vec::new();
    while let Some(x) = frontier.pop() {
        for g in &gens_res {
            let y = mul(&x, g, modulus);
            let key = reduce(&y, ell);
            match section.get(&key) {
                None => {
                    section.insert(key, y);
                    frontier.push(y);
                }
                Some(s) => {
                    // Schreier element s^{-1} y is trivial mod l
                    let u = mul(&inverse_res(s, modulus), &y, modulus);
                    let idm = identity_res();
                    let mut log = vec![0u8; 17];
                    for i in 0..17 {
                        let diff = (u[i] as u64 + modulus - idm[i] as u64) % modulus;
                        debug_assert_eq!(diff % ell, 0, "schreier element not in the kernel");
                        log[i] = (diff / ell % ell) as u8;
                    }
                    add_to_basis(&mut basis, log, ell);
                }
            }
        }
    }
    Ok(section.len() as u128 * (ell as u128).pow(basis.len() as u32))
}

/// Echelon insertion over `F_l`; true when the vector enlarged the span.
fn add_to_basis(basis: &mut Vec<Vec<u8>>, mut v: Vec<u8>, ell: u64) -> bool {
    loop {
        let Some(p) = v.iter().position(|&x| x != 0) else { return false };
        match basis.iter().find(|b| b.iter().position(|&x| x != 0) == Some(p)) {
            None => {
                basis.push(v);
                return true;
            }
            Some(b) => {
                let factor = v[p] as u64 * inv_mod(b[p] as u64, ell).unwrap() % ell;
                for i in 0..v.len() {
                    let t = (v[i] as u64 + ell * ell - factor * b[i] as u64 % ell) % ell;
                    v[i] = t as u8;
                }
                debug_assert_eq!(v[p], 0);
            }
        }
    }
}

/// Rank over `F_l` of a set of logarithm vectors (exposed for tests).
pub fn kernel_log_rank(vectors: &[Vec<u8>], ell: u64) -> usize {
    let mut basis = Vec::new();
    for v in vectors {
        add_to_basis(&mut basis, v.clone(), ell);
    }
    basis.len()
}
