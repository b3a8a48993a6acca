//! Concrete group data for the two scenarios: the rank-two symplectic
//! similitude group and the split quaternary unitary model `GL_1 x GL_4`,
//! together with the block subgroup `H`, its unit map `nu`, and the scenario
//! elements `sigma`, `tau`, `w`.

mod gens;
mod verify;
mod xi;

pub use gens::{gl4_k_generators, gsp4_k_generators, h_generators, unit_generators};
pub use verify::{closure_order, kernel_log_rank};
pub use xi::{xi_generator, XiUnit};

use crate::error::{Error, Result};
use crate::ladic::{ell_pow, inv_mod, lattice_key, ExactMatrix, ExactScalar, LatticeKey};
use num_bigint::BigInt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GroupKind {
    /// Symplectic similitudes of rank two, standard antidiagonal form.
    GSp4,
    /// Split model `GL_1 x GL_4` of the quaternary unitary similitude group.
    Gl1Gl4,
}

/// A group element. For `GSp4` the scalar is always 1; for `Gl1Gl4` it is
/// the similitude coordinate.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Element {
    pub scalar: ExactScalar,
    pub mat: ExactMatrix,
}

impl Element {
    pub fn identity(ell: u64) -> Self {
        Element { scalar: ExactScalar::one(ell), mat: ExactMatrix::identity(4, ell) }
    }

    pub fn from_mat(mat: ExactMatrix) -> Self {
        Element { scalar: ExactScalar::one(mat.ell()), mat }
    }

    pub fn mul(&self, rhs: &Element) -> Result<Element> {
        Ok(Element { scalar: &self.scalar * &rhs.scalar, mat: self.mat.mul(&rhs.mat)? })
    }

    /// Exact inverse; requires determinant and scalar to be `Z[1/l]` units.
    pub fn inverse(&self) -> Result<Element> {
        Ok(Element { scalar: self.scalar.invert()?, mat: self.mat.inverse()? })
    }

    pub fn ell(&self) -> u64 {
        self.mat.ell()
    }

    /// Residues mod `l^m` as a flat key, provided the element is integral.
    pub fn residue_key(&self, m: u32) -> Option<Vec<u64>> {
        let mut v = self.mat.residues(m)?;
        v.push(self.scalar.residue(m)?);
        Some(v)
    }
}

/// Canonical key of the coset `gK` for `K` the stabilizer of the standard
/// lattice (together with the scalar valuation in the `GL_1` factor).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CosetKey {
    pub scalar_val: i64,
    pub lattice: LatticeKey,
}

impl CosetKey {
    pub fn of(elem: &Element, window: u32) -> Result<CosetKey> {
        let scalar_val = elem
            .scalar
            .valuation()
            .ok_or_else(|| Error::Invalid("zero scalar coordinate".into()))?;
        Ok(CosetKey { scalar_val, lattice: lattice_key(&elem.mat, window)? })
    }

    /// A canonical representative element of this coset.
    pub fn representative(&self) -> Element {
        Element {
            scalar: ExactScalar::one(self.lattice.ell).shift(self.scalar_val),
            mat: self.lattice.basis_matrix(),
        }
    }

    pub fn to_compact_string(&self) -> String {
        format!("{}~{}", self.scalar_val, self.lattice)
    }
}

/// The two coordinate pairs on which the block subgroup `H` is supported.
/// Derived from the centralizer of `w`: coordinates sharing an eigenvalue
/// of `w` belong to the same block.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BlockEmbedding {
    pub blocks: [[usize; 2]; 2],
}

impl BlockEmbedding {
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for b in &self.blocks {
            for &i in b {
                for &j in b {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Assemble the 4x4 matrix with `a`, `b` as the two 2x2 blocks.
    pub fn embed(&self, a: &[[i64; 2]; 2], b: &[[i64; 2]; 2], ell: u64) -> ExactMatrix {
        let mut m = ExactMatrix::zero(4, ell);
        for (blk, data) in self.blocks.iter().zip([a, b]) {
            for r in 0..2 {
                for c in 0..2 {
                    m.set(blk[r], blk[c], ExactScalar::from_int(data[r][c], ell));
                }
            }
        }
        m
    }

    /// Extract the 2x2 block `which` of `m`.
    pub fn block(&self, m: &ExactMatrix, which: usize) -> [[ExactScalar; 2]; 2] {
        let b = self.blocks[which];
        [
            [m.get(b[0], b[0]).clone(), m.get(b[0], b[1]).clone()],
            [m.get(b[1], b[0]).clone(), m.get(b[1], b[1]).clone()],
        ]
    }

    pub fn block_det(&self, m: &ExactMatrix, which: usize) -> ExactScalar {
        let bl = self.block(m, which);
        &(&bl[0][0] * &bl[1][1]) - &(&bl[0][1] * &bl[1][0])
    }
}

/// Scenario kind plus everything membership tests need.
#[derive(Clone, Debug)]
pub struct GroupModel {
    pub kind: GroupKind,
    pub ell: u64,
    pub form: Option<ExactMatrix>,
}

impl GroupModel {
    pub fn gsp4(ell: u64) -> Self {
        let form = ExactMatrix::from_rows(
            &[vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![-1, 0, 0, 0], vec![0, -1, 0, 0]],
            ell,
        );
        GroupModel { kind: GroupKind::GSp4, ell, form: Some(form) }
    }

    pub fn gl1gl4(ell: u64) -> Self {
        GroupModel { kind: GroupKind::Gl1Gl4, ell, form: None }
    }

    /// Similitude factor of an ambient group element.
    pub fn similitude(&self, g: &Element) -> Option<ExactScalar> {
        match self.kind {
            GroupKind::GSp4 => g.mat.similitude(self.form.as_ref().unwrap()),
            GroupKind::Gl1Gl4 => Some(g.scalar.clone()),
        }
    }

    /// Membership in the ambient `l`-adic group (no integrality).
    pub fn is_ambient(&self, g: &Element) -> bool {
        match self.kind {
            GroupKind::GSp4 => {
                g.scalar.is_one() && g.mat.similitude(self.form.as_ref().unwrap()).is_some()
            }
            GroupKind::Gl1Gl4 => !g.scalar.is_zero() && !g.mat.det().is_zero(),
        }
    }

    /// Membership in the hyperspecial subgroup `K`: integral with unit
    /// similitude (and unit determinant in the linear model).
    pub fn is_in_k(&self, g: &Element) -> bool {
        if !g.mat.is_integral() {
            return false;
        }
        match self.kind {
            GroupKind::GSp4 => {
                if !g.scalar.is_one() {
                    return false;
                }
                match g.mat.similitude(self.form.as_ref().unwrap()) {
                    Some(c) => c.is_unit(),
                    None => false,
                }
            }
            GroupKind::Gl1Gl4 => g.scalar.is_unit() && g.mat.det().is_unit(),
        }
    }
}

/// A compact-open subgroup described by a membership rule plus generators.
#[derive(Clone, Debug)]
pub struct SubgroupSpec {
    pub tag: String,
    pub rule: MembershipRule,
    pub gens: Vec<Element>,
}

#[derive(Clone, Debug)]
pub enum MembershipRule {
    /// The hyperspecial subgroup `K`.
    K,
    /// The block subgroup `H` (ambient, not compact).
    H,
    /// `U = H ∩ K`.
    U,
    /// `K ∩ sigma K sigma^{-1}`.
    KConj(Box<Element>),
    /// `H ∩ sigma K sigma^{-1}`.
    HConj(Box<Element>),
}

/// A complete scenario: group, block subgroup, scenario elements, and
/// precision-tagged generator sets.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: &'static str,
    pub group: GroupModel,
    pub embedding: BlockEmbedding,
    pub ell: u64,
    pub precision: u32,
    pub max_precision: u32,
    pub sigma: Element,
    /// Second seed coset representative (linear model only).
    pub sigma_prime: Option<Element>,
    pub tau: Element,
    pub w: Element,
    pub k: SubgroupSpec,
    pub u: SubgroupSpec,
    /// Quadratic-field data for the unitary scenario.
    pub d_field: Option<u64>,
    pub m_index: u32,
    pub alpha: Option<u64>,
    pub xi: Option<XiUnit>,
}

impl Scenario {
    /// Membership in the block subgroup `H` of the ambient group: supported
    /// on the two blocks, invertible, and (symplectic case) the two block
    /// determinants agree so the element is a similitude.
    pub fn is_in_h(&self, g: &Element) -> bool {
        if !g.mat.supported_on(&self.embedding.positions()) {
            return false;
        }
        let d0 = self.embedding.block_det(&g.mat, 0);
        let d1 = self.embedding.block_det(&g.mat, 1);
        if d0.is_zero() || d1.is_zero() {
            return false;
        }
        match self.group.kind {
            GroupKind::GSp4 => g.scalar.is_one() && d0 == d1,
            GroupKind::Gl1Gl4 => !g.scalar.is_zero(),
        }
    }

    pub fn is_in_u(&self, g: &Element) -> bool {
        self.is_in_h(g) && self.group.is_in_k(g)
    }

    pub fn membership(&self, rule: &MembershipRule, g: &Element) -> Result<bool> {
        Ok(match rule {
            MembershipRule::K => self.group.is_in_k(g),
            MembershipRule::H => self.is_in_h(g),
            MembershipRule::U => self.is_in_u(g),
            MembershipRule::KConj(s) => {
                self.group.is_in_k(g) && self.group.is_in_k(&s.inverse()?.mul(g)?.mul(s)?)
            }
            MembershipRule::HConj(s) => {
                self.is_in_h(g) && self.group.is_in_k(&s.inverse()?.mul(g)?.mul(s)?)
            }
        })
    }

    /// The unit map `nu` into `(Z/l^m)^x` (one factor for the symplectic
    /// scenario, three for the unitary one), for `H`-members only.
    pub fn nu(&self, h: &Element, m: u32) -> Result<Vec<u64>> {
        if !self.is_in_h(h) {
            return Err(Error::Invalid("nu applied outside the block subgroup".into()));
        }
        let modulus = ell_pow(self.ell, m);
        let res = |s: &ExactScalar| -> Result<u64> {
            // value = num / l^v with v = 0 for units; reduce numerator
            if !s.is_unit() {
                return Err(Error::Invalid(format!("nu needs a unit, got {s}")));
            }
            Ok(s.residue(m).expect("unit is integral"))
        };
        match self.group.kind {
            GroupKind::GSp4 => {
                let c = self.embedding.block_det(&h.mat, 0);
                Ok(vec![res(&c)?])
            }
            GroupKind::Gl1Gl4 => {
                let c = res(&h.scalar)?;
                let d0 = res(&self.embedding.block_det(&h.mat, 0))?;
                let d1 = res(&self.embedding.block_det(&h.mat, 1))?;
                let i0 = inv_mod(d0, modulus).expect("unit");
                let i1 = inv_mod(d1, modulus).expect("unit");
                Ok(vec![
                    (c as u128 * i0 as u128 % modulus as u128) as u64,
                    c,
                    (c as u128 * i1 as u128 % modulus as u128) as u64,
                ])
            }
        }
    }

    /// Number of unit-group factors in the local component model.
    pub fn nu_arity(&self) -> usize {
        match self.group.kind {
            GroupKind::GSp4 => 1,
            GroupKind::Gl1Gl4 => 3,
        }
    }

    /// Valuation spread of an element: `max(-v(g), -v(g^{-1}))`, the amount
    /// by which conjugation by `g` can move valuations.
    pub fn spread(&self, g: &Element) -> Result<u32> {
        let vg = g.mat.valuation().ok_or_else(|| Error::Invalid("zero matrix".into()))?;
        let vi = g.mat.inverse()?.valuation().unwrap();
        Ok(((-vg).max(0) as u32).max((-vi).max(0) as u32))
    }

    /// Window cap for lattice keys appearing in `K sigma K / K`.
    pub fn window(&self) -> u32 {
        self.precision + 2
    }
}

/// Build one of the two scenarios.
///
/// `gsp4` needs any prime; `gu22` needs `l` odd, coprime to `2d`, and split,
/// i.e. `-d` a square mod `l`.
pub fn build_scenario(
    name: &str,
    ell: u64,
    precision: u32,
    d_field: u64,
    m_index: u32,
    max_precision: u32,
) -> Result<Scenario> {
    if !is_small_prime(ell) {
        return Err(Error::Invalid(format!("{ell} is not a supported prime")));
    }
    match name {
        "gsp4" => build_gsp4(ell, precision, max_precision),
        "gu22" => build_gu22(ell, precision, d_field, m_index, max_precision),
        _ => Err(Error::Invalid(format!("unknown scenario {name:?}"))),
    }
}

fn is_small_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn build_gsp4(ell: u64, precision: u32, max_precision: u32) -> Result<Scenario> {
    let group = GroupModel::gsp4(ell);
    let embedding = BlockEmbedding { blocks: [[0, 2], [1, 3]] };
    let sigma = Element::from_mat(ExactMatrix::diag_ell_powers(&[1, 1, 0, 0], ell));
    let mut tau_m = ExactMatrix::identity(4, ell);
    tau_m.set(0, 3, ExactScalar::one(ell).shift(-1));
    tau_m.set(1, 2, ExactScalar::one(ell).shift(-1));
    let tau = Element::from_mat(tau_m);
    let w = Element::from_mat(ExactMatrix::from_rows(
        &[vec![1, 0, 0, 0], vec![0, -1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, -1]],
        ell,
    ));
    let k_gens = gsp4_k_generators(ell, precision);
    let u_gens = h_generators(&embedding, GroupKind::GSp4, ell, precision);
    let scenario = Scenario {
        name: "gsp4",
        group,
        embedding,
        ell,
        precision,
        max_precision,
        sigma,
        sigma_prime: None,
        tau,
        w,
        k: SubgroupSpec { tag: "K = G(Z_l)".into(), rule: MembershipRule::K, gens: k_gens },
        u: SubgroupSpec { tag: "U = H ∩ K".into(), rule: MembershipRule::U, gens: u_gens },
        d_field: None,
        m_index: 0,
        alpha: None,
        xi: None,
    };
    scenario.validate()?;
    Ok(scenario)
}

fn build_gu22(
    ell: u64,
    precision: u32,
    d_field: u64,
    m_index: u32,
    max_precision: u32,
) -> Result<Scenario> {
    if ell == 2 || d_field % ell == 0 {
        return Err(Error::Invalid(format!("prime {ell} must not divide 2*{d_field}")));
    }
    let alpha = crate::ladic::hensel_sqrt(&BigInt::from(-(d_field as i64)), ell, precision)?
        .ok_or_else(|| {
            Error::Invalid(format!("{ell} is not split: -{d_field} is a non-residue"))
        })?;
    let group = GroupModel::gl1gl4(ell);
    let embedding = BlockEmbedding { blocks: [[0, 1], [2, 3]] };
    let sigma = Element::from_mat(ExactMatrix::diag_ell_powers(&[1, 0, 0, 0], ell));
    let sigma_prime = Element::from_mat(ExactMatrix::diag_ell_powers(&[0, 0, 1, 0], ell));
    let mut tau_m = ExactMatrix::identity(4, ell);
    tau_m.set(0, 2, ExactScalar::one(ell).shift(-1));
    let tau = Element::from_mat(tau_m);

    let xi = xi_generator(d_field, m_index.max(1), ell, precision)?;
    // w = diag(1, 1, j(xi), j(xi)) via the fixed embedding sqrt(-d) -> alpha
    let jxi = xi.embed(alpha, ell, precision);
    let mut w_m = ExactMatrix::identity(4, ell);
    let jx = ExactScalar::from_int(BigInt::from(jxi), ell);
    w_m.set(2, 2, jx.clone());
    w_m.set(3, 3, jx);
    let w = Element { scalar: ExactScalar::one(ell), mat: w_m };

    let k_gens = gl4_k_generators(ell, precision);
    let u_gens = h_generators(&embedding, GroupKind::Gl1Gl4, ell, precision);
    let scenario = Scenario {
        name: "gu22",
        group,
        embedding,
        ell,
        precision,
        max_precision,
        sigma,
        sigma_prime: Some(sigma_prime),
        tau,
        w,
        k: SubgroupSpec { tag: "K = G(Z_l)".into(), rule: MembershipRule::K, gens: k_gens },
        u: SubgroupSpec { tag: "U = H ∩ K".into(), rule: MembershipRule::U, gens: u_gens },
        d_field: Some(d_field),
        m_index: m_index.max(1),
        alpha: Some(alpha),
        xi: Some(xi),
    };
    scenario.validate()?;
    Ok(scenario)
}

impl Scenario {
    /// Construction-time checks: generators satisfy their membership rules,
    /// scenario elements are ambient, and `w` is a `K`-unit of the centre of
    /// `H` (for the unitary case, once `xi` is `l`-invertible).
    fn validate(&self) -> Result<()> {
        for g in &self.k.gens {
            if !self.group.is_in_k(g) {
                return Err(Error::Invalid(format!("K generator outside K:\n{}", g.mat)));
            }
        }
        for g in &self.u.gens {
            if !self.is_in_u(g) {
                return Err(Error::Invalid(format!("U generator outside U:\n{}", g.mat)));
            }
        }
        for g in [&self.sigma, &self.tau, &self.w] {
            if !self.group.is_ambient(g) {
                return Err(Error::Invalid("scenario element outside ambient group".into()));
            }
        }
        if let Some(sp) = &self.sigma_prime {
            if !self.group.is_ambient(sp) {
                return Err(Error::Invalid("sigma' outside ambient group".into()));
            }
        }
        if !self.is_in_h(&self.w) {
            return Err(Error::Invalid("w is not in the block subgroup".into()));
        }
        Ok(())
    }

    /// Key of the coset `gK` at the scenario window, growing on escape.
    pub fn coset_key(&self, g: &Element) -> Result<CosetKey> {
        let mut window = self.window();
        loop {
            match CosetKey::of(g, window) {
                Err(Error::WindowEscape { needed, .. }) if needed <= self.window() + 8 => {
                    window = needed;
                }
                other => return other,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scenario_construction_validates() {
        build_scenario("gsp4", 2, 3, 0, 0, 8).unwrap();
        build_scenario("gsp4", 3, 3, 0, 0, 8).unwrap();
        build_scenario("gu22", 5, 3, 1, 1, 8).unwrap();
    }

    #[test]
    fn inert_prime_fails_unitary_scenario() {
        // -1 is a non-residue mod 7
        assert!(build_scenario("gu22", 7, 3, 1, 1, 8).is_err());
    }

    #[test]
    fn k_closure_order_mod_2_is_720() {
        let sc = build_scenario("gsp4", 2, 3, 0, 0, 8).unwrap();
        assert_eq!(closure_order(&sc.k.gens, 2, 1).unwrap(), 720);
    }

    #[test]
    fn u_closure_order_mod_2_is_36() {
        let sc = build_scenario("gsp4", 2, 3, 0, 0, 8).unwrap();
        assert_eq!(closure_order(&sc.u.gens, 2, 1).unwrap(), 36);
    }

    #[test]
    fn k_closure_order_mod_4_matches_dimension_11() {
        let sc = build_scenario("gsp4", 2, 3, 0, 0, 8).unwrap();
        assert_eq!(closure_order(&sc.k.gens, 2, 2).unwrap(), 720 << 11);
    }

    #[test]
    fn u_closure_order_mod_4_matches_dimension_7() {
        let sc = build_scenario("gsp4", 2, 3, 0, 0, 8).unwrap();
        assert_eq!(closure_order(&sc.u.gens, 2, 2).unwrap(), 36 << 7);
    }

    #[test]
    fn linear_model_closure_orders_at_two() {
        // the linear model group exists at any prime; certify at l = 2
        let gens = gl4_k_generators(2, 3);
        // |GL_4(F_2)| = 20160, scalar factor trivial mod 2
        assert_eq!(closure_order(&gens, 2, 1).unwrap(), 20160);
        // dimension 16 + 1
        assert_eq!(closure_order(&gens, 2, 2).unwrap(), 20160 << 17);
    }

    #[test]
    fn gsp4_closure_order_mod_3() {
        let sc = build_scenario("gsp4", 3, 3, 0, 0, 8).unwrap();
        // |Sp_4(F_3)| * |F_3^x| = 51840 * 2
        assert_eq!(closure_order(&sc.k.gens, 3, 1).unwrap(), 103_680);
        assert_eq!(closure_order(&sc.u.gens, 3, 1).unwrap(), 48 * 48 / 2);
    }

    #[test]
    fn unitary_u_closure_order_mod_5() {
        let sc = build_scenario("gu22", 5, 3, 1, 1, 8).unwrap();
        // |Z/5^x| * |GL_2(F_5)|^2
        assert_eq!(closure_order(&sc.u.gens, 5, 1).unwrap(), 4 * 480 * 480);
    }

    #[test]
    fn centralizer_of_w_pins_the_block_pattern() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (name, ell) in [("gsp4", 2u64), ("gu22", 5)] {
            let sc = build_scenario(name, ell, 3, 1, 1, 8).unwrap();
            let positions = sc.embedding.positions();
            for _ in 0..300 {
                let rows: Vec<Vec<i64>> =
                    (0..4).map(|_| (0..4).map(|_| rng.gen_range(-6..=6)).collect()).collect();
                let g = ExactMatrix::from_rows(&rows, ell);
                let commutes = g.mul(&sc.w.mat).unwrap() == sc.w.mat.mul(&g).unwrap();
                assert_eq!(commutes, g.supported_on(&positions), "w centralizer mismatch:\n{g}");
            }
        }
    }

    #[test]
    fn embedded_h_lies_in_the_similitude_group() {
        let sc = build_scenario("gsp4", 2, 3, 0, 0, 8).unwrap();
        let form = sc.group.form.as_ref().unwrap();
        let mut g = Element::identity(2);
        for gen in sc.u.gens.iter().cycle().take(40) {
            g = g.mul(gen).unwrap();
            let c = g.mat.similitude(form).expect("H members are similitudes");
            assert_eq!(c, sc.embedding.block_det(&g.mat, 0));
            assert_eq!(c, sc.embedding.block_det(&g.mat, 1));
        }
    }

    #[test]
    fn nu_is_multiplicative_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for (name, ell) in [("gsp4", 2u64), ("gu22", 5)] {
            let sc = build_scenario(name, ell, 3, 1, 1, 8).unwrap();
            let m = sc.precision;
            let modulus = ell_pow(ell, m);
            let random_u = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut g = Element::identity(ell);
                for _ in 0..6 {
                    let i = rng.gen_range(0..sc.u.gens.len());
                    g = g.mul(&sc.u.gens[i]).unwrap();
                }
                g
            };
            for _ in 0..1000 {
                let x = random_u(&mut rng);
                let y = random_u(&mut rng);
                let nx = sc.nu(&x, m).unwrap();
                let ny = sc.nu(&y, m).unwrap();
                let nxy = sc.nu(&x.mul(&y).unwrap(), m).unwrap();
                for k in 0..nx.len() {
                    assert_eq!(nxy[k], (nx[k] as u128 * ny[k] as u128 % modulus as u128) as u64);
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        let sc = build_scenario("gsp4", 2, 3, 0, 0, 8).unwrap();
        assert!(sc.group.is_in_k(&sc.w));
        assert!(!sc.group.is_in_k(&sc.tau));
        // gamma = tau^{-1} w tau lies in K at l = 2
        let gamma = sc.tau.inverse().unwrap().mul(&sc.w).unwrap().mul(&sc.tau).unwrap();
        assert!(sc.group.is_in_k(&gamma));
        let sc3 = build_scenario("gsp4", 3, 3, 0, 0, 8).unwrap();
        let gamma3 = sc3.tau.inverse().unwrap().mul(&sc3.w).unwrap().mul(&sc3.tau).unwrap();
        assert!(!sc3.group.is_in_k(&gamma3));
    }

    #[test]
    fn membership_verdicts_stable_across_precision() {
        // exact arithmetic: the same element is classified identically when
        // the scenario is rebuilt one precision higher
        for prec in [3u32, 4] {
            let sc = build_scenario("gsp4", 2, prec, 0, 0, 8).unwrap();
            let gamma = sc.tau.inverse().unwrap().mul(&sc.w).unwrap().mul(&sc.tau).unwrap();
            assert!(sc.group.is_in_k(&gamma));
            assert!(!sc.group.is_in_k(&sc.tau));
            assert!(sc.is_in_u(&sc.w));
        }
    }
}
