//! Finite-rank right modules: rank-one representations and their
//! classification, induced and reflection modules, reduction mod p,
//! supersingularity and discreteness tests, and the census report.
//!
//! Matrices act on row vectors, so a word of generators multiplies
//! left-to-right in word order.

use crate::algebra::{char_theta_inverse_value, Algebra, AlgebraError, HeckeElt};
use crate::cartan::{Bond, Family};
use crate::coeff::{CoeffError, HalfLaurent, SpecTarget, Verdict};
use crate::weyl::ExtWeylElt;
use nalgebra::DMatrix;
use num::bigint::BigInt;
use num::traits::Zero;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModuleError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Weyl(#[from] crate::weyl::WeylError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("representation is invariant under the diagram action; extend it as a rank-one module instead")]
    CharacterIsInvariant,
    #[error("datum does not support this construction: {0}")]
    WrongDatum(String),
    #[error("module relation violated: {0}")]
    RelationViolated(String),
    #[error("rank {rank} exceeds the configured bound {bound}")]
    RankBound { rank: usize, bound: usize },
    #[error("matrix entry is not integral for the reduction: {0}")]
    NotIntegral(String),
}

// ---------------------------------------------------------------------------
// Rank-one representations
// ---------------------------------------------------------------------------

/// Rank-one representation of the affine part, determined by one sign per
/// reflection class: `true` sends the class to q^{d}, `false` to -1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenericCharacter {
    pub class_is_q: Vec<bool>,
}

impl GenericCharacter {
    pub fn value_at(&self, alg: &Algebra, s: usize) -> HalfLaurent {
        if self.class_is_q[alg.w.dynkin.component_of[s]] {
            alg.q_s(s)
        } else {
            HalfLaurent::int(-1)
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.class_is_q.iter().all(|&b| b)
    }

    pub fn is_special(&self) -> bool {
        self.class_is_q.iter().all(|&b| !b)
    }

    pub fn label(&self, alg: &Algebra) -> String {
        let parts: Vec<String> = self
            .class_is_q
            .iter()
            .enumerate()
            .map(|(ci, &b)| {
                if b {
                    let d = alg.w.dynkin.params[alg.w.dynkin.components[ci][0]];
                    if d == 1 {
                        "q".to_string()
                    } else {
                        format!("q^{}", d)
                    }
                } else {
                    "-1".to_string()
                }
            })
            .collect();
        format!("({})", parts.join(","))
    }

    /// Whether the representation extends across the full length-zero action:
    /// the value must be constant on diagram orbits of nodes.
    pub fn extends(&self, alg: &Algebra) -> bool {
        alg.w.omega.iter().all(|u| {
            (0..alg.w.node_count()).all(|s| {
                self.class_is_q[alg.w.dynkin.component_of[s]]
                    == self.class_is_q[alg.w.dynkin.component_of[u.action.apply(s)]]
            })
        })
    }

    /// Canonical length-zero values of the extension (all 1) when it exists.
    pub fn omega_values(&self, alg: &Algebra) -> Option<Vec<i64>> {
        if self.extends(alg) {
            Some(vec![1; alg.w.omega.len()])
        } else {
            None
        }
    }

    /// Exact discreteness: the value on the normalized Bernstein element at
    /// the inverse of every dominant generator of the affine-part monoid
    /// must have modulus uniformly below one.
    pub fn is_discrete(&self, alg: &Algebra) -> Result<bool, ModuleError> {
        for mu in alg.w.sc_dominant_monoid_generators() {
            let vals = |s: usize| self.value_at(alg, s);
            let v = char_theta_inverse_value(alg, &vals, &mu)?;
            if v.abs_lt_one() != Verdict::Always {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Value on the central orbit sum of an affine-part dominant element,
    /// computed through the product form of the Bernstein elements.
    pub fn central_value(&self, alg: &Algebra, mu: &[i64]) -> Result<HalfLaurent, ModuleError> {
        let m = rank_one_module(self, alg);
        let mat = central_action(alg, &m, mu)?;
        Ok(mat[0].clone())
    }

    /// Reduction through q^{1/2} -> 0.
    pub fn reduce_mod_p(&self, alg: &Algebra) -> ModPCharacter {
        ModPCharacter {
            node_is_minus_one: (0..alg.w.node_count())
                .map(|s| !self.class_is_q[alg.w.dynkin.component_of[s]])
                .collect(),
        }
    }
}

/// Rank-one representation over F_p: each node acts by 0 or -1.
#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct ModPCharacter {
    pub node_is_minus_one: Vec<bool>,
}

impl ModPCharacter {
    pub fn is_trivial(&self) -> bool {
        self.node_is_minus_one.iter().all(|&b| !b)
    }

    pub fn is_special(&self) -> bool {
        self.node_is_minus_one.iter().all(|&b| b)
    }

    /// Classification rule: supersingular exactly when neither special nor
    /// trivial. Cross-checked against the nilpotency computation on small
    /// data in the test suite.
    pub fn is_supersingular_flag(&self) -> bool {
        !self.is_trivial() && !self.is_special()
    }

    pub fn label(&self) -> String {
        let parts: Vec<&str> =
            self.node_is_minus_one.iter().map(|&b| if b { "-1" } else { "0" }).collect();
        format!("({})", parts.join(","))
    }

    pub fn value(&self, s: usize, p: u64) -> u64 {
        if self.node_is_minus_one[s] {
            p - 1
        } else {
            0
        }
    }

    /// Promote to a rank-one module over F_p with the trivial length-zero
    /// action (valid when the values are constant on diagram orbits).
    pub fn as_module(&self, alg: &Algebra, p: u64) -> ModPModule {
        ModPModule {
            p,
            rank: 1,
            s_mats: (0..alg.w.node_count()).map(|s| vec![self.value(s, p)]).collect(),
            omega_mats: alg.w.omega.iter().map(|_| vec![1]).collect(),
        }
    }
}

/// All rank-one representations of the affine part: one sign per class.
pub fn enumerate_characters_generic(alg: &Algebra) -> Vec<GenericCharacter> {
    let m = alg.w.dynkin.class_count();
    (0..(1usize << m))
        .map(|mask| GenericCharacter { class_is_q: (0..m).map(|i| mask & (1 << i) != 0).collect() })
        .collect()
}

/// All rank-one representations over F_p: one value in {0, -1} per node.
pub fn enumerate_characters_mod_p(alg: &Algebra) -> Vec<ModPCharacter> {
    let n = alg.w.node_count();
    (0..(1usize << n))
        .map(|mask| ModPCharacter {
            node_is_minus_one: (0..n).map(|i| mask & (1 << i) != 0).collect(),
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Matrix modules
// ---------------------------------------------------------------------------

/// Finite free right module over the Laurent coefficient ring, given by the
/// action matrices of the node generators and the length-zero generators
/// (aligned with the datum's length-zero subgroup).
#[derive(Clone, Debug)]
pub struct GenericModule {
    pub rank: usize,
    pub s_mats: Vec<Vec<HalfLaurent>>,
    pub omega_mats: Vec<Vec<HalfLaurent>>,
}

/// The same data over F_p.
#[derive(Clone, Debug)]
pub struct ModPModule {
    pub p: u64,
    pub rank: usize,
    pub s_mats: Vec<Vec<u64>>,
    pub omega_mats: Vec<Vec<u64>>,
}

fn gmat_identity(rank: usize) -> Vec<HalfLaurent> {
    let mut m = vec![HalfLaurent::zero(); rank * rank];
    for i in 0..rank {
        m[i * rank + i] = HalfLaurent::one();
    }
    m
}

fn gmat_mul(rank: usize, a: &[HalfLaurent], b: &[HalfLaurent]) -> Vec<HalfLaurent> {
    let mut out = vec![HalfLaurent::zero(); rank * rank];
    for i in 0..rank {
        for k in 0..rank {
            let aik = &a[i * rank + k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..rank {
                let prod = aik.mul(&b[k * rank + j]);
                out[i * rank + j] = out[i * rank + j].add(&prod);
            }
        }
    }
    out
}

fn gmat_add_scaled_identity(rank: usize, a: &[HalfLaurent], c: &HalfLaurent) -> Vec<HalfLaurent> {
    let mut out = a.to_vec();
    for i in 0..rank {
        out[i * rank + i] = out[i * rank + i].add(c);
    }
    out
}

fn gmat_scale(a: &[HalfLaurent], c: &HalfLaurent) -> Vec<HalfLaurent> {
    a.iter().map(|x| x.mul(c)).collect()
}

fn gmat_is_zero(a: &[HalfLaurent]) -> bool {
    a.iter().all(|x| x.is_zero())
}

fn pmat_mul(rank: usize, a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; rank * rank];
    for i in 0..rank {
        for k in 0..rank {
            let aik = a[i * rank + k];
            if aik == 0 {
                continue;
            }
            for j in 0..rank {
                out[i * rank + j] = (out[i * rank + j] + aik * b[k * rank + j]) % p;
            }
        }
    }
    out
}

impl GenericModule {
    /// Matrix of a standard basis element along its canonical word.
    pub fn word_matrix(&self, alg: &Algebra, w: &ExtWeylElt) -> Vec<HalfLaurent> {
        let (u, word) = alg.w.reduced_word(w);
        let mut acc = self.omega_mats[u].clone();
        for &s in &word {
            acc = gmat_mul(self.rank, &acc, &self.s_mats[s]);
        }
        acc
    }

    /// Matrix of the star element of a translation.
    fn star_translation_matrix(&self, alg: &Algebra, t: &ExtWeylElt) -> Vec<HalfLaurent> {
        let (u, word) = alg.w.reduced_word(t);
        let mut acc = self.omega_mats[u].clone();
        for &s in &word {
            let qm1 = alg.q_s(s).sub(&HalfLaurent::one()).neg();
            let star_mat = gmat_add_scaled_identity(self.rank, &self.s_mats[s], &qm1);
            acc = gmat_mul(self.rank, &acc, &star_mat);
        }
        acc
    }

    /// Numeric matrices of the generators at a real point.
    pub fn f64_mats(&self, q0: f64) -> (Vec<DMatrix<f64>>, Vec<DMatrix<f64>>) {
        let conv = |m: &Vec<HalfLaurent>| {
            DMatrix::from_fn(self.rank, self.rank, |i, j| m[i * self.rank + j].eval_f64(q0))
        };
        (self.s_mats.iter().map(conv).collect(), self.omega_mats.iter().map(conv).collect())
    }
}

/// Action matrix of a Bernstein basis element through its product form: the
/// star matrix of a dominant part times the plain matrix of an anti-dominant
/// part, with the exact monomial correction. Avoids any standard-basis
/// expansion, so it stays cheap on large orbits.
pub fn bernstein_action(
    alg: &Algebra,
    m: &GenericModule,
    lambda: &[i64],
) -> Result<Vec<HalfLaurent>, ModuleError> {
    let plus_try: Vec<i64> = lambda.iter().map(|&x| x.max(0)).collect();
    let (plus, minus) = if alg.w.in_lattice(&plus_try) {
        let minus: Vec<i64> = lambda.iter().zip(&plus_try).map(|(l, p)| l - p).collect();
        (plus_try, minus)
    } else {
        let two_rho = alg.w.rs.two_rho_check();
        let k = lambda.iter().map(|&x| (-x + 1).div_euclid(2).max(0)).max().unwrap_or(0);
        let plus: Vec<i64> = lambda.iter().zip(&two_rho).map(|(x, t)| x + k * t).collect();
        let minus: Vec<i64> = two_rho.iter().map(|t| -k * t).collect();
        (plus, minus)
    };
    let t_plus = alg.w.translation(&plus)?;
    let t_minus = alg.w.translation(&minus)?;
    let t_full = alg.w.translation(lambda)?;
    let star = m.star_translation_matrix(alg, &t_plus);
    let plain = m.word_matrix(alg, &t_minus);
    let prod = gmat_mul(m.rank, &star, &plain);
    let corr = alg.w.weighted_length(&t_plus) as i64 + alg.w.weighted_length(&t_minus) as i64
        - alg.w.weighted_length(&t_full) as i64;
    Ok(gmat_scale(&prod, &HalfLaurent::q_half_pow(-corr)))
}

/// Action matrix of the central orbit sum.
pub fn central_action(
    alg: &Algebra,
    m: &GenericModule,
    mu: &[i64],
) -> Result<Vec<HalfLaurent>, ModuleError> {
    let mut acc = vec![HalfLaurent::zero(); m.rank * m.rank];
    for lam in alg.w.rs.weyl_orbit(mu) {
        let b = bernstein_action(alg, m, &lam)?;
        for (slot, x) in acc.iter_mut().zip(&b) {
            *slot = slot.add(x);
        }
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Module builders
// ---------------------------------------------------------------------------

/// Rank-one module extending a representation across the length-zero part
/// (canonical extension: every length-zero generator acts by 1).
pub fn extend_character(
    alg: &Algebra,
    chi: &GenericCharacter,
) -> Result<GenericModule, ModuleError> {
    if !chi.extends(alg) {
        return Err(ModuleError::CharacterIsInvariant);
    }
    Ok(rank_one_module(chi, alg))
}

fn rank_one_module(chi: &GenericCharacter, alg: &Algebra) -> GenericModule {
    GenericModule {
        rank: 1,
        s_mats: (0..alg.w.node_count()).map(|s| vec![chi.value_at(alg, s)]).collect(),
        omega_mats: alg.w.omega.iter().map(|_| vec![HalfLaurent::one()]).collect(),
    }
}

/// Rank-two module induced from a representation that is not invariant under
/// the nontrivial diagram action. Its affine-part restriction is the direct
/// sum of the representation and its twist by that action.
pub fn induce_character(
    alg: &Algebra,
    chi: &GenericCharacter,
) -> Result<GenericModule, ModuleError> {
    if alg.w.omega.len() != 2 {
        return Err(ModuleError::WrongDatum(
            "induction needs a length-zero subgroup of order two".into(),
        ));
    }
    if chi.extends(alg) {
        return Err(ModuleError::CharacterIsInvariant);
    }
    let u = &alg.w.omega[1];
    let rank = 2;
    let mut s_mats = Vec::new();
    for s in 0..alg.w.node_count() {
        let mut mat = vec![HalfLaurent::zero(); 4];
        mat[0] = chi.value_at(alg, s);
        mat[3] = chi.value_at(alg, u.action.apply(s));
        s_mats.push(mat);
    }
    let mut swap = vec![HalfLaurent::zero(); 4];
    swap[1] = HalfLaurent::one();
    swap[2] = HalfLaurent::one();
    let omega_mats = vec![gmat_identity(rank), swap];
    Ok(GenericModule { rank, s_mats, omega_mats })
}

/// The rank-|S| reflection module for the simply-laced types D and E with
/// equal parameters, already twisted so every node generator has eigenvalues
/// {q, -1}, converted to a right module.
pub fn reflection_module(alg: &Algebra) -> Result<GenericModule, ModuleError> {
    let fam = alg.w.rs.cartan.family;
    if !matches!(fam, Family::D | Family::E) {
        return Err(ModuleError::WrongDatum("reflection module needs type D or E".into()));
    }
    if alg.w.dynkin.params.iter().any(|&d| d != 1) {
        return Err(ModuleError::WrongDatum("reflection module needs equal parameters 1".into()));
    }
    let n = alg.w.node_count();
    let q = HalfLaurent::q();
    let qh = HalfLaurent::q_half_pow(1);
    let mut s_mats = Vec::new();
    for s in 0..n {
        // row t: image of the basis vector e_t under the node generator s
        let mut mat = vec![HalfLaurent::zero(); n * n];
        for t in 0..n {
            if t == s {
                mat[t * n + t] = q.clone();
            } else {
                mat[t * n + t] = HalfLaurent::int(-1);
                if alg.w.dynkin.bond(s, t) == Bond::Order(3) {
                    mat[t * n + s] = qh.neg();
                }
            }
        }
        s_mats.push(mat);
    }
    let omega_mats = alg
        .w
        .omega
        .iter()
        .map(|u| {
            let inv = u.action.inverse();
            let mut mat = vec![HalfLaurent::zero(); n * n];
            for t in 0..n {
                mat[t * n + inv.apply(t)] = HalfLaurent::one();
            }
            mat
        })
        .collect();
    Ok(GenericModule { rank: n, s_mats, omega_mats })
}

/// The rank-three module for the B3 datum with parameters (1, 2): basis
/// indexed by the long nodes; the short node acts by -1 after the twist.
pub fn b3_reflection_module(alg: &Algebra) -> Result<GenericModule, ModuleError> {
    let ct = alg.w.rs.cartan;
    if !(ct.family == Family::B && ct.rank == 3) {
        return Err(ModuleError::WrongDatum("construction needs type B3".into()));
    }
    let classes: Vec<u64> =
        alg.w.dynkin.components.iter().map(|c| alg.w.dynkin.params[c[0]]).collect();
    if classes != vec![1, 2] {
        return Err(ModuleError::WrongDatum("construction needs parameters (1,2)".into()));
    }
    let long_nodes: Vec<usize> = alg.w.dynkin.components[0].clone();
    let rank = long_nodes.len();
    debug_assert_eq!(rank, 3);
    let pos_of = |node: usize| long_nodes.iter().position(|&x| x == node);
    let q = HalfLaurent::q();
    let qh = HalfLaurent::q_half_pow(1);
    let mut s_mats = Vec::new();
    for s in 0..alg.w.node_count() {
        let mut mat = vec![HalfLaurent::zero(); rank * rank];
        match pos_of(s) {
            Some(si) => {
                for (ti, &t) in long_nodes.iter().enumerate() {
                    if ti == si {
                        mat[ti * rank + ti] = q.clone();
                    } else {
                        mat[ti * rank + ti] = HalfLaurent::int(-1);
                        if alg.w.dynkin.bond(s, t) == Bond::Order(3) {
                            mat[ti * rank + si] = qh.neg();
                        }
                    }
                }
            }
            None => {
                for ti in 0..rank {
                    mat[ti * rank + ti] = HalfLaurent::int(-1);
                }
            }
        }
        s_mats.push(mat);
    }
    let omega_mats = alg
        .w
        .omega
        .iter()
        .map(|u| {
            let inv = u.action.inverse();
            let mut mat = vec![HalfLaurent::zero(); rank * rank];
            for (ti, &t) in long_nodes.iter().enumerate() {
                let image = pos_of(inv.apply(t)).expect("diagram action preserves long nodes");
                mat[ti * rank + image] = HalfLaurent::one();
            }
            mat
        })
        .collect();
    Ok(GenericModule { rank, s_mats, omega_mats })
}

// ---------------------------------------------------------------------------
// Relations, reduction, decomposition
// ---------------------------------------------------------------------------

/// Verify the quadratic, braid, and length-zero relations as exact matrix
/// identities. On failure the violated relation is named.
pub fn verify_module_relations(alg: &Algebra, m: &GenericModule) -> Result<(), ModuleError> {
    let n = alg.w.node_count();
    let rank = m.rank;
    for s in 0..n {
        let lhs = gmat_mul(
            rank,
            &gmat_add_scaled_identity(rank, &m.s_mats[s], &alg.q_s(s).neg()),
            &gmat_add_scaled_identity(rank, &m.s_mats[s], &HalfLaurent::one()),
        );
        if !gmat_is_zero(&lhs) {
            return Err(ModuleError::RelationViolated(format!(
                "quadratic relation at node {}",
                alg.w.dynkin.node_name(s)
            )));
        }
    }
    for s in 0..n {
        for t in s + 1..n {
            if let Bond::Order(ord) = alg.w.dynkin.bond(s, t) {
                let mut left = gmat_identity(rank);
                let mut right = gmat_identity(rank);
                for k in 0..ord as usize {
                    let (ls, rs) = if k % 2 == 0 { (s, t) } else { (t, s) };
                    left = gmat_mul(rank, &left, &m.s_mats[ls]);
                    right = gmat_mul(rank, &right, &m.s_mats[rs]);
                }
                if left != right {
                    return Err(ModuleError::RelationViolated(format!(
                        "braid relation between {} and {}",
                        alg.w.dynkin.node_name(s),
                        alg.w.dynkin.node_name(t)
                    )));
                }
            }
        }
    }
    for (ui, u) in alg.w.omega.iter().enumerate() {
        for (vi, v) in alg.w.omega.iter().enumerate() {
            let uv = alg.w.mul(&u.elt, &v.elt);
            let uv_idx =
                alg.w.omega.iter().position(|o| o.elt == uv).expect("length-zero subgroup closed");
            let prod = gmat_mul(rank, &m.omega_mats[ui], &m.omega_mats[vi]);
            if prod != m.omega_mats[uv_idx] {
                return Err(ModuleError::RelationViolated(format!(
                    "length-zero product relation u{} u{}",
                    ui, vi
                )));
            }
        }
        for s in 0..n {
            let lhs = gmat_mul(rank, &m.omega_mats[ui], &m.s_mats[s]);
            let rhs = gmat_mul(rank, &m.s_mats[u.action.apply(s)], &m.omega_mats[ui]);
            if lhs != rhs {
                return Err(ModuleError::RelationViolated(format!(
                    "length-zero twist relation at u{} and {}",
                    ui,
                    alg.w.dynkin.node_name(s)
                )));
            }
        }
    }
    Ok(())
}

/// The same relations over F_p (with each q_s reduced to zero).
pub fn verify_module_relations_mod_p(alg: &Algebra, m: &ModPModule) -> Result<(), ModuleError> {
    let n = alg.w.node_count();
    let rank = m.rank;
    let p = m.p;
    for s in 0..n {
        let a = &m.s_mats[s];
        let mut b = a.clone();
        for i in 0..rank {
            b[i * rank + i] = (b[i * rank + i] + 1) % p;
        }
        if pmat_mul(rank, a, &b, p).iter().any(|&x| x != 0) {
            return Err(ModuleError::RelationViolated(format!(
                "quadratic relation mod p at node {}",
                alg.w.dynkin.node_name(s)
            )));
        }
    }
    for s in 0..n {
        for t in s + 1..n {
            if let Bond::Order(ord) = alg.w.dynkin.bond(s, t) {
                let mut left = vec![0u64; rank * rank];
                let mut right = left.clone();
                for i in 0..rank {
                    left[i * rank + i] = 1;
                    right[i * rank + i] = 1;
                }
                for k in 0..ord as usize {
                    let (ls, rs) = if k % 2 == 0 { (s, t) } else { (t, s) };
                    left = pmat_mul(rank, &left, &m.s_mats[ls], p);
                    right = pmat_mul(rank, &right, &m.s_mats[rs], p);
                }
                if left != right {
                    return Err(ModuleError::RelationViolated(format!(
                        "braid relation mod p between {} and {}",
                        alg.w.dynkin.node_name(s),
                        alg.w.dynkin.node_name(t)
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Entrywise reduction through q^{1/2} -> 0 and integers mod p.
pub fn reduce_mod_p(m: &GenericModule, p: u64) -> Result<ModPModule, ModuleError> {
    let conv = |mat: &Vec<HalfLaurent>| -> Result<Vec<u64>, ModuleError> {
        mat.iter()
            .map(|x| {
                x.specialize(&SpecTarget::ModP { p })
                    .map(|v| v.as_fp().unwrap())
                    .map_err(|_| ModuleError::NotIntegral(x.to_string()))
            })
            .collect()
    };
    let s_mats = m.s_mats.iter().map(conv).collect::<Result<_, _>>()?;
    let omega_mats = m.omega_mats.iter().map(conv).collect::<Result<_, _>>()?;
    Ok(ModPModule { p, rank: m.rank, s_mats, omega_mats })
}

/// When every node matrix is diagonal over F_p, the affine-part restriction
/// splits into rank-one representations read off the diagonals.
pub fn modp_diagonal_characters(alg: &Algebra, m: &ModPModule) -> Option<Vec<ModPCharacter>> {
    let rank = m.rank;
    let n = alg.w.node_count();
    for mat in &m.s_mats {
        for i in 0..rank {
            for j in 0..rank {
                if i != j && mat[i * rank + j] != 0 {
                    return None;
                }
            }
        }
    }
    let mut out = Vec::new();
    for i in 0..rank {
        let mut node_is_minus_one = Vec::with_capacity(n);
        for s in 0..n {
            let v = m.s_mats[s][i * rank + i];
            if v == 0 {
                node_is_minus_one.push(false);
            } else if v == m.p - 1 {
                node_is_minus_one.push(true);
            } else {
                return None;
            }
        }
        out.push(ModPCharacter { node_is_minus_one });
    }
    Some(out)
}

// ---------------------------------------------------------------------------
// Supersingularity and discreteness
// ---------------------------------------------------------------------------

/// Supersingularity of the mod-p reduction of a module given over the
/// Laurent ring: the central orbit sum of every non-invertible dominant
/// generator must act nilpotently after reduction. Uses the product form of
/// the Bernstein elements, so no standard-basis expansion is needed.
pub fn is_supersingular_reduction(
    alg: &Algebra,
    m: &GenericModule,
    p: u64,
) -> Result<bool, ModuleError> {
    for mu in alg.w.dominant_monoid_generators() {
        let z = central_action(alg, m, &mu)?;
        let zp: Vec<u64> = z
            .iter()
            .map(|x| {
                x.specialize(&SpecTarget::ModP { p })
                    .map(|v| v.as_fp().unwrap())
                    .map_err(|_| ModuleError::NotIntegral(x.to_string()))
            })
            .collect::<Result<_, _>>()?;
        if !nilpotent_mod_p(m.rank, &zp, p) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Honest supersingularity test for a module handed over F_p directly: the
/// central elements are expanded in the standard basis, their coefficients
/// reduced, and the word matrices multiplied out. Intended for small data.
pub fn is_supersingular_mod_p(alg: &Algebra, m: &ModPModule) -> Result<bool, ModuleError> {
    for mu in alg.w.dominant_monoid_generators() {
        let z = alg.central_z(&mu)?;
        let zp = modp_action_of(alg, m, &z)?;
        if !nilpotent_mod_p(m.rank, &zp, m.p) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn modp_action_of(alg: &Algebra, m: &ModPModule, h: &HeckeElt) -> Result<Vec<u64>, ModuleError> {
    let rank = m.rank;
    let p = m.p;
    let mut acc = vec![0u64; rank * rank];
    for (w, c) in &h.terms {
        let cp = c
            .specialize(&SpecTarget::ModP { p })
            .map_err(|_| ModuleError::NotIntegral(c.to_string()))?
            .as_fp()
            .unwrap();
        if cp == 0 {
            continue;
        }
        let (u, word) = alg.w.reduced_word(w);
        let mut mat = m.omega_mats[u].clone();
        for &s in &word {
            mat = pmat_mul(rank, &mat, &m.s_mats[s], p);
        }
        for (slot, x) in acc.iter_mut().zip(&mat) {
            *slot = (*slot + cp * x) % p;
        }
    }
    Ok(acc)
}

fn nilpotent_mod_p(rank: usize, mat: &[u64], p: u64) -> bool {
    let mut acc = mat.to_vec();
    for _ in 1..rank {
        if acc.iter().all(|&x| x == 0) {
            return true;
        }
        acc = pmat_mul(rank, &acc, mat, p);
    }
    acc.iter().all(|&x| x == 0)
}

/// Discreteness of a module over the Laurent ring. Rank-one modules are
/// decided exactly through the monomial criterion; higher ranks are
/// certified numerically: at every listed evaluation point, all eigenvalues
/// of the action of the normalized Bernstein element at the inverse of each
/// non-invertible dominant generator must have modulus below 1 - tol.
pub fn is_discrete(
    alg: &Algebra,
    m: &GenericModule,
    q0_list: &[(u64, u64)],
    tol: f64,
) -> Result<bool, ModuleError> {
    let gens = alg.w.dominant_monoid_generators();
    if m.rank == 1 {
        for mu in &gens {
            let theta = bernstein_theta_value_rank1(alg, m, mu)?;
            if theta.abs_lt_one() != Verdict::Always {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    for &(num, den) in q0_list {
        let q0 = num as f64 / den as f64;
        let (s_f, o_f) = m.f64_mats(q0);
        for mu in &gens {
            let minus: Vec<i64> = mu.iter().map(|x| -x).collect();
            let t = alg.w.translation(&minus)?;
            let (u, word) = alg.w.reduced_word(&t);
            let mut mat = o_f[u].clone();
            for &s in &word {
                mat = &mat * &s_f[s];
            }
            let t_plus = alg.w.translation(mu)?;
            let scale = q0.powf(-(alg.w.weighted_length(&t_plus) as f64) / 2.0);
            mat *= scale;
            for e in mat.complex_eigenvalues().iter() {
                if e.norm() >= 1.0 - tol {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Exact rank-one value of the normalized Bernstein element at the inverse
/// of a dominant element.
pub fn bernstein_theta_value_rank1(
    alg: &Algebra,
    m: &GenericModule,
    mu: &[i64],
) -> Result<HalfLaurent, ModuleError> {
    debug_assert_eq!(m.rank, 1);
    let minus: Vec<i64> = mu.iter().map(|x| -x).collect();
    let e = bernstein_action(alg, m, &minus)?;
    let t = alg.w.translation(mu)?;
    Ok(e[0].shift(-(alg.w.weighted_length(&t) as i64)))
}

/// Simplicity over the fraction field, decided by spinning each basis
/// vector: a basis vector generating a proper invariant subspace witnesses
/// reducibility. Elimination is fraction-free over the Laurent ring.
pub fn is_simple_over_fraction_field(
    _alg: &Algebra,
    m: &GenericModule,
) -> Result<bool, ModuleError> {
    const BOUND: usize = 12;
    if m.rank > BOUND {
        return Err(ModuleError::RankBound { rank: m.rank, bound: BOUND });
    }
    let gens: Vec<&Vec<HalfLaurent>> = m.s_mats.iter().chain(m.omega_mats.iter()).collect();
    for start in 0..m.rank {
        let mut v = vec![HalfLaurent::zero(); m.rank];
        v[start] = HalfLaurent::one();
        if spin_dimension(m.rank, &v, &gens) < m.rank {
            return Ok(false);
        }
    }
    Ok(true)
}

fn row_primitive(v: Vec<HalfLaurent>) -> Vec<HalfLaurent> {
    let mut content = BigInt::zero();
    let mut min_half: Option<i64> = None;
    for x in &v {
        for (h, c) in x.terms() {
            content = num::Integer::gcd(&content, c);
            min_half = Some(min_half.map_or(h, |m: i64| m.min(h)));
        }
    }
    if content.is_zero() {
        return v;
    }
    let shift = min_half.unwrap();
    v.into_iter().map(|x| x.div_monomial(&content, shift).expect("content divides")).collect()
}

fn spin_dimension(rank: usize, seed: &[HalfLaurent], gens: &[&Vec<HalfLaurent>]) -> usize {
    // rows kept in echelon form keyed by pivot column
    let mut rows: Vec<(usize, Vec<HalfLaurent>)> = Vec::new();
    let mut queue: Vec<Vec<HalfLaurent>> = vec![seed.to_vec()];
    while let Some(v) = queue.pop() {
        let mut v = v;
        for (piv, row) in &rows {
            if !v[*piv].is_zero() {
                let a = row[*piv].clone();
                let b = v[*piv].clone();
                for j in 0..rank {
                    v[j] = v[j].mul(&a).sub(&row[j].mul(&b));
                }
            }
        }
        if v.iter().all(|x| x.is_zero()) {
            continue;
        }
        let v = row_primitive(v);
        let piv = v.iter().position(|x| !x.is_zero()).unwrap();
        for g in gens {
            let mut img = vec![HalfLaurent::zero(); rank];
            for i in 0..rank {
                if v[i].is_zero() {
                    continue;
                }
                for j in 0..rank {
                    let prod = v[i].mul(&g[i * rank + j]);
                    img[j] = img[j].add(&prod);
                }
            }
            queue.push(img);
        }
        rows.push((piv, v));
        if rows.len() == rank {
            return rank;
        }
    }
    rows.len()
}

// ---------------------------------------------------------------------------
// Census
// ---------------------------------------------------------------------------

/// One row of the character census.
#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub values: String,
    pub omega_values: Option<String>,
    pub trivial: bool,
    pub special: bool,
    pub discrete: bool,
    pub extends: bool,
    pub ss_reduction: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub datum: String,
    pub untabulated: bool,
    pub rows: Vec<CensusRow>,
    /// Whether some discrete non-special row exists at all.
    pub some_discrete_nonspecial: bool,
    /// Whether some discrete non-special row extends.
    pub some_discrete_nonspecial_extends: bool,
}

/// Full classification census over the rank-one representations, with the
/// supersingularity of each reduction computed honestly from the central
/// elements at the given prime.
pub fn discrete_nonspecial_census(alg: &Algebra, p: u64) -> Result<CensusReport, ModuleError> {
    let mut rows = Vec::new();
    let sc_gens = alg.w.sc_dominant_monoid_generators();
    for chi in enumerate_characters_generic(alg) {
        let discrete = chi.is_discrete(alg)?;
        let extends = chi.extends(alg);
        let mut ss = true;
        for mu in &sc_gens {
            let v = chi.central_value(alg, mu)?;
            let vp = v
                .specialize(&SpecTarget::ModP { p })
                .map_err(|_| ModuleError::NotIntegral(v.to_string()))?
                .as_fp()
                .unwrap();
            if vp != 0 {
                ss = false;
                break;
            }
        }
        rows.push(CensusRow {
            values: chi.label(alg),
            omega_values: chi.omega_values(alg).map(|v| {
                format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            }),
            trivial: chi.is_trivial(),
            special: chi.is_special(),
            discrete,
            extends,
            ss_reduction: ss,
        });
    }
    let some_discrete_nonspecial = rows.iter().any(|r| r.discrete && !r.special);
    let some_discrete_nonspecial_extends =
        rows.iter().any(|r| r.discrete && !r.special && r.extends);
    Ok(CensusReport {
        datum: alg.w.describe(),
        untabulated: !is_tabulated(alg),
        rows,
        some_discrete_nonspecial,
        some_discrete_nonspecial_extends,
    })
}

fn is_tabulated(alg: &Algebra) -> bool {
    let ct = alg.w.rs.cartan;
    match ct.family {
        Family::A => ct.rank == 1,
        Family::B => ct.rank >= 3,
        Family::C => ct.rank >= 2,
        Family::F | Family::G => true,
        _ => false,
    }
}
