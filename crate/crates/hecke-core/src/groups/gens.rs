//! Generator sets for the hyperspecial subgroups and the block subgroup.
//!
//! Every generator is an exact element of its group (unipotent root
//! elements, exact-similitude torus elements), so membership tests stay
//! exact. Inverses are only matched modulo `l^m`, which is all the finite
//! closures and orbits ever see; completeness is certified by the closure
//! order checks in `verify`, not assumed.

use super::{BlockEmbedding, Element, GroupKind};
use crate::ladic::{ell_pow, inv_mod, ExactMatrix, ExactScalar};

/// Generators of `(Z/l^m)^x`: `{-1, 5}` at the even prime, a primitive root
/// otherwise (adjusted so it stays primitive at every precision).
pub fn unit_generators(ell: u64, m: u32) -> Vec<u64> {
    let modulus = ell_pow(ell, m);
    if ell == 2 {
        return match m {
            1 => vec![],
            2 => vec![3],
            _ => vec![modulus - 1, 5],
        };
    }
    let mut root = primitive_root(ell);
    if m >= 2 {
        // ensure order (l-1)l mod l^2, hence primitive at all precisions
        let l2 = ell * ell;
        if crate::ladic::pow_mod(root, ell - 1, l2) == 1 {
            root += ell;
        }
    }
    vec![root % modulus]
}

fn primitive_root(ell: u64) -> u64 {
    let phi = ell - 1;
    let mut prime_factors = Vec::new();
    let mut n = phi;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            prime_factors.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        prime_factors.push(n);
    }
    'cand: for g in 2..ell {
        for &q in &prime_factors {
            if crate::ladic::pow_mod(g, phi / q, ell) == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("every prime has a primitive root")
}

/// Units together with lifts of their inverses mod `l^m`.
fn units_with_inverses(ell: u64, m: u32) -> Vec<u64> {
    let modulus = ell_pow(ell, m);
    let mut out = Vec::new();
    for u in unit_generators(ell, m) {
        out.push(u);
        let inv = inv_mod(u, modulus).expect("unit");
        if inv != u {
            out.push(inv);
        }
    }
    out.dedup();
    out
}

fn e2x(t: i64) -> [[i64; 2]; 2] {
    [[1, t], [0, 1]]
}

fn e2y(t: i64) -> [[i64; 2]; 2] {
    [[1, 0], [t, 1]]
}

/// Generators of the rank-two symplectic similitude group over `Z_l`, seen
/// through precision `m`: Siegel unipotents, Levi unipotents and Weyl
/// elements, the long-root Weyl element, and exact similitude scalings.
pub fn gsp4_k_generators(ell: u64, m: u32) -> Vec<Element> {
    let mut out = Vec::new();
    let sym = [[[1, 0], [0, 0]], [[0, 0], [0, 1]], [[0, 1], [1, 0]]];
    for s in sym {
        for sign in [1i64, -1] {
            // upper [[I, sS], [0, I]]
            let mut u = ExactMatrix::identity(4, ell);
            let mut l = ExactMatrix::identity(4, ell);
            for i in 0..2 {
                for j in 0..2 {
                    u.set(i, 2 + j, ExactScalar::from_int(sign * s[i][j], ell));
                    l.set(2 + i, j, ExactScalar::from_int(sign * s[i][j], ell));
                }
            }
            out.push(Element::from_mat(u));
            out.push(Element::from_mat(l));
        }
    }
    // Levi block [[A, 0], [0, (A^T)^{-1}]] for integral A of determinant ±1
    let levis: Vec<([[i64; 2]; 2], [[i64; 2]; 2])> = vec![
        (e2x(1), e2y(-1)),
        (e2x(-1), e2y(1)),
        (e2y(1), e2x(-1)),
        (e2y(-1), e2x(1)),
        ([[0, 1], [1, 0]], [[0, 1], [1, 0]]),
    ];
    for (a, at_inv) in levis {
        let mut g = ExactMatrix::zero(4, ell);
        for i in 0..2 {
            for j in 0..2 {
                g.set(i, j, ExactScalar::from_int(a[i][j], ell));
                g.set(2 + i, 2 + j, ExactScalar::from_int(at_inv[i][j], ell));
            }
        }
        out.push(Element::from_mat(g));
    }
    // long-root Weyl element and its inverse
    let w_long = ExactMatrix::from_rows(
        &[vec![0, 0, 1, 0], vec![0, 1, 0, 0], vec![-1, 0, 0, 0], vec![0, 0, 0, 1]],
        ell,
    );
    out.push(Element::from_mat(w_long.inverse().unwrap()));
    out.push(Element::from_mat(w_long));
    // exact similitude scalings diag(1,1,c,c)
    for c in units_with_inverses(ell, m) {
        out.push(Element::from_mat(ExactMatrix::from_rows(
            &[
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, c as i64, 0],
                vec![0, 0, 0, c as i64],
            ],
            ell,
        )));
    }
    out
}

/// Generators of `Z_l^x x GL_4(Z_l)` seen through precision `m`.
pub fn gl4_k_generators(ell: u64, m: u32) -> Vec<Element> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i == j {
                continue;
            }
            for sign in [1i64, -1] {
                let mut g = ExactMatrix::identity(4, ell);
                g.set(i, j, ExactScalar::from_int(sign, ell));
                out.push(Element::from_mat(g));
            }
        }
    }
    for u in units_with_inverses(ell, m) {
        let mut g = ExactMatrix::identity(4, ell);
        g.set(0, 0, ExactScalar::from_int(u as i64, ell));
        out.push(Element::from_mat(g));
        out.push(Element {
            scalar: ExactScalar::from_int(u as i64, ell),
            mat: ExactMatrix::identity(4, ell),
        });
    }
    out
}

/// Generators of `U = H(Z_l)` for either block subgroup. All are exact
/// members of `H`: unipotents have unit block determinants, torus elements
/// repeat the same unit in both blocks where the similitude ties them.
pub fn h_generators(emb: &BlockEmbedding, kind: GroupKind, ell: u64, m: u32) -> Vec<Element> {
    let mut out = Vec::new();
    let id = [[1, 0], [0, 1]];
    for t in [1i64, -1] {
        out.push(Element::from_mat(emb.embed(&e2x(t), &id, ell)));
        out.push(Element::from_mat(emb.embed(&e2y(t), &id, ell)));
        out.push(Element::from_mat(emb.embed(&id, &e2x(t), ell)));
        out.push(Element::from_mat(emb.embed(&id, &e2y(t), ell)));
    }
    let anti = [[0, 1], [1, 0]];
    match kind {
        GroupKind::GSp4 => {
            for u in units_with_inverses(ell, m) {
                let du = [[u as i64, 0], [0, 1]];
                let du2 = [[1, 0], [0, u as i64]];
                out.push(Element::from_mat(emb.embed(&du, &du, ell)));
                out.push(Element::from_mat(emb.embed(&du, &du2, ell)));
            }
            // paired Weyl elements keep the block determinants equal
            out.push(Element::from_mat(emb.embed(&anti, &anti, ell)));
            out.push(Element::from_mat(emb.embed(&anti, &[[-1, 0], [0, 1]], ell)));
        }
        GroupKind::Gl1Gl4 => {
            for u in units_with_inverses(ell, m) {
                let du = [[u as i64, 0], [0, 1]];
                out.push(Element::from_mat(emb.embed(&du, &id, ell)));
                out.push(Element::from_mat(emb.embed(&id, &du, ell)));
                out.push(Element {
                    scalar: ExactScalar::from_int(u as i64, ell),
                    mat: ExactMatrix::identity(4, ell),
                });
            }
            out.push(Element::from_mat(emb.embed(&anti, &id, ell)));
            out.push(Element::from_mat(emb.embed(&id, &anti, ell)));
        }
    }
    out
}
