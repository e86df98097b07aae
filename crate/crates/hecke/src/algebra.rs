//! The generalized affine Hecke algebra over Z[q^{1/2}, q^{-1/2}]:
//! standard-basis arithmetic, star elements, Bernstein elements, the
//! commutative-subring embedding, and central orbit sums.

use crate::cartan::dot;
use crate::coeff::HalfLaurent;
use crate::weyl::{display_element, ExtWeylElt, WeylData, WeylError};
use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error("element does not lie in the commutative subring: term {0} has a nontrivial finite part")]
    NotInCommutativeSubring(String),
    #[error("orbit-sum argument {0:?} must be dominant")]
    NotDominant(Vec<i64>),
}

/// Finite linear combination of standard basis elements.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HeckeElt {
    pub terms: BTreeMap<ExtWeylElt, HalfLaurent>,
}

impl HeckeElt {
    pub fn zero() -> Self {
        HeckeElt { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn basis(w: ExtWeylElt) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, HalfLaurent::one());
        HeckeElt { terms }
    }

    pub fn add_term(&mut self, w: ExtWeylElt, c: HalfLaurent) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &HalfLaurent) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HeckeElt { terms: self.terms.iter().map(|(w, a)| (w.clone(), a.mul(c))).collect() }
    }

    pub fn coeff(&self, w: &ExtWeylElt) -> HalfLaurent {
        self.terms.get(w).cloned().unwrap_or_else(HalfLaurent::zero)
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }
}

/// The algebra attached to one affine datum. Immutable apart from memo
/// caches for the Bernstein and central elements, which sit behind locks and
/// always return identical values, so sharing across threads is safe.
pub struct Algebra {
    pub w: WeylData,
    e_cache: RwLock<HashMap<Vec<i64>, HeckeElt>>,
    z_cache: RwLock<HashMap<Vec<i64>, HeckeElt>>,
}

impl Algebra {
    pub fn new(w: WeylData) -> Self {
        Algebra { w, e_cache: RwLock::new(HashMap::new()), z_cache: RwLock::new(HashMap::new()) }
    }

    pub fn one(&self) -> HeckeElt {
        HeckeElt::basis(self.w.identity())
    }

    pub fn t(&self, w: &ExtWeylElt) -> HeckeElt {
        HeckeElt::basis(w.clone())
    }

    /// q_s as a coefficient: q^{d_s}.
    pub fn q_s(&self, s: usize) -> HalfLaurent {
        HalfLaurent::q_half_pow(2 * self.w.dynkin.d(s) as i64)
    }

    /// q_w: the product of the q_s along any reduced word, as a monomial.
    pub fn q_w(&self, w: &ExtWeylElt) -> HalfLaurent {
        HalfLaurent::q_half_pow(2 * self.w.weighted_length(w) as i64)
    }

    /// Right multiplication by T_s with the quadratic rule.
    pub fn mul_t_s(&self, a: &HeckeElt, s: usize) -> HeckeElt {
        let mut out = HeckeElt::zero();
        let qs = self.q_s(s);
        let qs_minus_one = qs.sub(&HalfLaurent::one());
        for (w, c) in &a.terms {
            let (ws, lengthened) = self.w.right_mul_simple(w, s);
            if lengthened {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(ws, c.mul(&qs));
                out.add_term(w.clone(), c.mul(&qs_minus_one));
            }
        }
        out
    }

    /// Right multiplication by T_u for a length-zero element (index into the
    /// length-zero subgroup).
    pub fn mul_t_omega(&self, a: &HeckeElt, u_idx: usize) -> HeckeElt {
        let u = &self.w.omega[u_idx].elt;
        HeckeElt { terms: a.terms.iter().map(|(w, c)| (self.w.mul(w, u), c.clone())).collect() }
    }

    /// Right multiplication by the star generator T_s - (q_s - 1).
    pub fn mul_t_s_star(&self, a: &HeckeElt, s: usize) -> HeckeElt {
        let qs_minus_one = self.q_s(s).sub(&HalfLaurent::one());
        self.mul_t_s(a, s).sub(&a.scale(&qs_minus_one))
    }

    /// Right multiplication by T_{w'}, decomposed along a reduced word.
    pub fn mul_t(&self, a: &HeckeElt, w: &ExtWeylElt) -> HeckeElt {
        let (u, word) = self.w.reduced_word(w);
        let mut acc = self.mul_t_omega(a, u);
        for &s in &word {
            acc = self.mul_t_s(&acc, s);
        }
        acc
    }

    /// Product in the algebra.
    pub fn multiply(&self, a: &HeckeElt, b: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (w, c) in &b.terms {
            let part = self.mul_t(a, w).scale(c);
            out = out.add(&part);
        }
        out
    }

    /// The star basis element: T_u T*_{s_1} ... T*_{s_n} along the canonical
    /// reduced word; independent of the word.
    pub fn star(&self, w: &ExtWeylElt) -> HeckeElt {
        let (u, word) = self.w.reduced_word(w);
        let mut acc = self.mul_t_omega(&self.one(), u);
        for &s in &word {
            acc = self.mul_t_s_star(&acc, s);
        }
        acc
    }

    /// Inverse of a standard basis element: q_w^{-1} T*_{w^{-1}}.
    pub fn t_inverse(&self, w: &ExtWeylElt) -> HeckeElt {
        let winv = self.w.inv(w);
        let star = self.star(&winv);
        let shift = -2 * (self.w.weighted_length(w) as i64);
        star.scale(&HalfLaurent::q_half_pow(shift))
    }

    /// Dominant/anti-dominant splitting of a lattice element: the smallest
    /// componentwise-dominant lift when it stays in the lattice, otherwise a
    /// shift along the sum of the positive coroots.
    fn dominant_split(&self, lambda: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let plus: Vec<i64> = lambda.iter().map(|&x| x.max(0)).collect();
        if self.w.in_lattice(&plus) {
            let minus: Vec<i64> = lambda.iter().zip(&plus).map(|(l, p)| l - p).collect();
            return (plus, minus);
        }
        let two_rho = self.w.rs.two_rho_check();
        // pairings of the positive-coroot sum with simple roots are all 2
        let k = lambda.iter().map(|&m| (-m + 1).div_euclid(2).max(0)).max().unwrap_or(0);
        let plus: Vec<i64> = lambda.iter().zip(&two_rho).map(|(m, t)| m + k * t).collect();
        let minus: Vec<i64> = two_rho.iter().map(|t| -k * t).collect();
        debug_assert!(plus.iter().all(|&x| x >= 0));
        (plus, minus)
    }

    /// Bernstein basis element for a lattice translation, normalized so the
    /// anti-dominant case is the plain standard basis element and the
    /// dominant case is the star element.
    pub fn bernstein_e(&self, lambda: &[i64]) -> Result<HeckeElt, AlgebraError> {
        if let Some(hit) = self.e_cache.read().unwrap().get(lambda) {
            return Ok(hit.clone());
        }
        let (plus, minus) = self.dominant_split(lambda);
        let e = self.bernstein_e_split(lambda, &plus, &minus)?;
        self.e_cache.write().unwrap().insert(lambda.to_vec(), e.clone());
        Ok(e)
    }

    /// Bernstein element from an explicit decomposition `lambda = plus + minus`
    /// with `plus` dominant and `minus` anti-dominant. The result does not
    /// depend on the decomposition; the test suite checks this.
    pub fn bernstein_e_split(
        &self,
        lambda: &[i64],
        plus: &[i64],
        minus: &[i64],
    ) -> Result<HeckeElt, AlgebraError> {
        debug_assert!(plus.iter().all(|&x| x >= 0) && minus.iter().all(|&x| x <= 0));
        debug_assert!(lambda.iter().zip(plus.iter().zip(minus)).all(|(l, (p, m))| *l == p + m));
        let t_plus = self.w.translation(plus)?;
        let t_minus = self.w.translation(minus)?;
        let t_full = self.w.translation(lambda)?;
        let mut prod = self.star(&t_plus);
        {
            let (u, word) = self.w.reduced_word(&t_minus);
            prod = self.mul_t_omega(&prod, u);
            for &s in &word {
                prod = self.mul_t_s(&prod, s);
            }
        }
        let correction = self.w.weighted_length(&t_plus) as i64
            + self.w.weighted_length(&t_minus) as i64
            - self.w.weighted_length(&t_full) as i64;
        assert!(correction >= 0, "translation lengths are subadditive");
        Ok(prod.scale(&HalfLaurent::q_half_pow(-correction)))
    }

    /// Normalized Bernstein element: q_lambda^{-1/2} E_lambda. Multiplicative
    /// in the lattice argument.
    pub fn theta(&self, lambda: &[i64]) -> Result<HeckeElt, AlgebraError> {
        let t = self.w.translation(lambda)?;
        let e = self.bernstein_e(lambda)?;
        let shift = -(self.w.weighted_length(&t) as i64);
        Ok(e.scale(&HalfLaurent::q_half_pow(shift)))
    }

    /// Central element: the sum of the Bernstein elements over the full
    /// finite-Weyl orbit of a dominant lattice element.
    pub fn central_z(&self, mu: &[i64]) -> Result<HeckeElt, AlgebraError> {
        if !self.w.rs.is_dominant(mu) {
            return Err(AlgebraError::NotDominant(mu.to_vec()));
        }
        if let Some(hit) = self.z_cache.read().unwrap().get(mu) {
            return Ok(hit.clone());
        }
        let mut out = HeckeElt::zero();
        for lam in self.w.rs.weyl_orbit(mu) {
            out = out.add(&self.bernstein_e(&lam)?);
        }
        self.z_cache.write().unwrap().insert(mu.to_vec(), out.clone());
        Ok(out)
    }

    /// Expansion of an element of the commutative subring in the Bernstein
    /// basis: a map from lattice points to coefficients.
    pub fn e_expand(&self, a: &HeckeElt) -> Result<BTreeMap<Vec<i64>, HalfLaurent>, AlgebraError> {
        let mut rest = a.clone();
        let mut out: BTreeMap<Vec<i64>, HalfLaurent> = BTreeMap::new();
        while !rest.is_zero() {
            let (w, _) = rest
                .terms
                .iter()
                .max_by_key(|(w, _)| (self.w.length(w), (*w).clone()))
                .map(|(w, c)| (w.clone(), c.clone()))
                .unwrap();
            let id_fin = self.w.identity().fin;
            if w.fin != id_fin {
                return Err(AlgebraError::NotInCommutativeSubring(display_element(&self.w, &w)));
            }
            let lam = w.trans.clone();
            let e = self.bernstein_e(&lam)?;
            let lead = e.coeff(&w);
            let (lc, lh) = lead
                .as_monomial()
                .map(|(c, h)| (c.clone(), h))
                .expect("Bernstein element has monomial leading coefficient");
            let coeff = rest
                .coeff(&w)
                .div_monomial(&lc, lh)
                .expect("leading coefficient divides exactly");
            rest = rest.sub(&e.scale(&coeff));
            out.insert(lam, coeff);
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// The linear automorphism sending each basis element to its signed star
    /// element.
    pub fn sign_star(&self, a: &HeckeElt) -> HeckeElt {
        let mut out = HeckeElt::zero();
        for (w, c) in &a.terms {
            let sign = if self.w.length(w) % 2 == 0 { 1 } else { -1 };
            let star = self.star(w).scale(&HalfLaurent::int(sign));
            out = out.add(&star.scale(c));
        }
        out
    }

    /// Serialize an element as deterministic (element, coefficient) pairs,
    /// ordered by length then canonical word.
    pub fn dump(&self, a: &HeckeElt) -> Vec<(String, String)> {
        let mut rows: Vec<(u64, String, String)> = a
            .terms
            .iter()
            .map(|(w, c)| (self.w.length(w), display_element(&self.w, w), c.to_string()))
            .collect();
        rows.sort();
        rows.into_iter().map(|(_, e, c)| (e, c)).collect()
    }
}

/// Exact value of a rank-one representation on the normalized Bernstein
/// element indexed by the inverse of a dominant lattice element. The
/// representation sends node `s` to `values(s)` (either -1 or q^{d_s}) and
/// every length-zero generator to 1. The result is a signed monomial.
pub fn char_theta_inverse_value(
    alg: &Algebra,
    values: &dyn Fn(usize) -> HalfLaurent,
    lambda: &[i64],
) -> Result<HalfLaurent, AlgebraError> {
    let t_inv = alg.w.translation(&lambda.iter().map(|x| -x).collect::<Vec<_>>())?;
    let (_u, word) = alg.w.reduced_word(&t_inv);
    let mut acc = HalfLaurent::one();
    for &s in &word {
        acc = acc.mul(&values(s));
    }
    let t = alg.w.translation(lambda)?;
    let shift = -(alg.w.weighted_length(&t) as i64);
    Ok(acc.mul(&HalfLaurent::q_half_pow(shift)))
}

/// Pairing of a coweight with the sum of positive roots; equals the
/// translation length for dominant arguments.
pub fn dominant_translation_length(w: &WeylData, mu: &[i64]) -> u64 {
    w.rs.positive_roots.iter().map(|r| dot(&r.root, mu).unsigned_abs()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{AffineDynkin, CartanType, Family, RootSystem};
    use crate::weyl::LatticeChoice;

    pub(crate) fn alg(fam: Family, rank: usize, class_params: &[u64], lat: LatticeChoice) -> Algebra {
        let ct = CartanType::new(fam, rank).unwrap();
        let rs = RootSystem::new(ct);
        let params = AffineDynkin::params_from_classes(&rs, class_params).unwrap();
        Algebra::new(WeylData::new(ct, params, lat).unwrap())
    }

    #[test]
    fn quadratic_relation() {
        let a = alg(Family::A, 1, &[1, 1], LatticeChoice::Sc);
        for s in 0..2 {
            let ts = a.t(&a.w.simple(s));
            let sq = a.multiply(&ts, &ts);
            let expect =
                a.one().scale(&a.q_s(s)).add(&ts.scale(&a.q_s(s).sub(&HalfLaurent::one())));
            assert_eq!(sq, expect);
        }
    }

    #[test]
    fn braid_relation_c2() {
        // (T_s T_t)^2 = (T_t T_s)^2 for a bond of order four
        let a = alg(Family::C, 2, &[3, 2, 2], LatticeChoice::Sc);
        let s = a.t(&a.w.simple(0));
        let t = a.t(&a.w.simple(1));
        let st = a.multiply(&s, &t);
        let ts = a.multiply(&t, &s);
        assert_eq!(a.multiply(&st, &st), a.multiply(&ts, &ts));
    }

    #[test]
    fn omega_relations() {
        let a = alg(Family::A, 2, &[1], LatticeChoice::Ad);
        for u in 0..3 {
            for v in 0..3 {
                let tu = a.t(&a.w.omega[u].elt);
                let tv = a.t(&a.w.omega[v].elt);
                let prod = a.multiply(&tu, &tv);
                let uv = a.w.mul(&a.w.omega[u].elt, &a.w.omega[v].elt);
                assert_eq!(prod, a.t(&uv));
            }
        }
        for u in &a.w.omega {
            for s in 0..a.w.node_count() {
                let lhs = a.multiply(&a.t(&u.elt), &a.t(&a.w.simple(s)));
                let rhs = a.multiply(&a.t(&a.w.simple(u.action.apply(s))), &a.t(&u.elt));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn lengths_add_implies_product_of_basis() {
        let a = alg(Family::C, 2, &[1, 1, 1], LatticeChoice::Sc);
        let ball = a.w.enumerate_ball(4).unwrap();
        for (w1, l1) in &ball {
            for (w2, l2) in &ball {
                let prod = a.w.mul(w1, w2);
                if a.w.length(&prod) == l1 + l2 {
                    assert_eq!(a.multiply(&a.t(w1), &a.t(w2)), a.t(&prod));
                }
            }
        }
    }

    #[test]
    fn star_examples() {
        let a = alg(Family::A, 1, &[1, 2], LatticeChoice::Sc);
        for s in 0..2 {
            let star = a.star(&a.w.simple(s));
            let expect =
                a.t(&a.w.simple(s)).sub(&a.one().scale(&a.q_s(s).sub(&HalfLaurent::one())));
            assert_eq!(star, expect);
        }
        assert_eq!(a.star(&a.w.identity()), a.one());
    }

    #[test]
    fn star_gives_inverse_on_ball() {
        let a = alg(Family::A, 1, &[1, 2], LatticeChoice::Sc);
        for (w, _) in a.w.enumerate_ball(4).unwrap() {
            let lhs = a.multiply(&a.t(&w), &a.star(&a.w.inv(&w)));
            assert_eq!(lhs, a.one().scale(&a.q_w(&w)), "w = {:?}", w);
        }
    }

    #[test]
    fn t_inverse_examples() {
        let a = alg(Family::C, 2, &[2, 1, 1], LatticeChoice::Ad);
        assert_eq!(a.t_inverse(&a.w.identity()), a.one());
        for s in 0..a.w.node_count() {
            let inv = a.t_inverse(&a.w.simple(s));
            assert_eq!(a.multiply(&a.t(&a.w.simple(s)), &inv), a.one());
        }
        for u in &a.w.omega {
            let inv = a.t_inverse(&u.elt);
            assert_eq!(inv, a.t(&a.w.inv(&u.elt)));
        }
    }

    #[test]
    fn q_w_examples() {
        let a = alg(Family::A, 1, &[1, 1], LatticeChoice::Sc);
        assert_eq!(a.q_w(&a.w.identity()), HalfLaurent::one());
        let t = a.w.translation(&[2]).unwrap();
        assert_eq!(a.q_w(&t), HalfLaurent::q_half_pow(4));
        let b = alg(Family::A, 1, &[2, 2], LatticeChoice::Sc);
        assert_eq!(b.q_s(0), HalfLaurent::q_half_pow(4));
    }

    #[test]
    fn bernstein_extremes() {
        let a = alg(Family::A, 1, &[1, 1], LatticeChoice::Sc);
        assert_eq!(a.bernstein_e(&[0]).unwrap(), a.one());
        let dom = a.bernstein_e(&[2]).unwrap();
        assert_eq!(dom, a.star(&a.w.translation(&[2]).unwrap()));
        let anti = a.bernstein_e(&[-2]).unwrap();
        assert_eq!(anti, a.t(&a.w.translation(&[-2]).unwrap()));
    }

    #[test]
    fn bernstein_split_independence() {
        let a = alg(Family::C, 2, &[1, 1, 1], LatticeChoice::Ad);
        let two_rho = a.w.rs.two_rho_check();
        for lam in [vec![1i64, -1], vec![-2, 1], vec![0, 1], vec![2, -3]] {
            let base = a.bernstein_e(&lam).unwrap();
            let (p, m) = a.dominant_split(&lam);
            let p2: Vec<i64> = p.iter().zip(&two_rho).map(|(x, t)| x + t).collect();
            let m2: Vec<i64> = m.iter().zip(&two_rho).map(|(x, t)| x - t).collect();
            let other = a.bernstein_e_split(&lam, &p2, &m2).unwrap();
            assert_eq!(base, other, "lambda = {:?}", lam);
        }
    }

    #[test]
    fn theta_multiplicative() {
        let a = alg(Family::A, 2, &[1], LatticeChoice::Ad);
        let pairs = [
            (vec![1i64, 0], vec![0i64, 1]),
            (vec![1, -1], vec![-1, 0]),
            (vec![2, 1], vec![-1, -1]),
        ];
        for (x, y) in pairs {
            let tx = a.theta(&x).unwrap();
            let ty = a.theta(&y).unwrap();
            let sum: Vec<i64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
            assert_eq!(a.multiply(&tx, &ty), a.theta(&sum).unwrap());
        }
        let lam = vec![1i64, 1];
        let inv: Vec<i64> = lam.iter().map(|x| -x).collect();
        let prod = a.multiply(&a.theta(&lam).unwrap(), &a.theta(&inv).unwrap());
        assert_eq!(prod, a.one());
    }

    #[test]
    fn central_element_a1() {
        let a = alg(Family::A, 1, &[1, 1], LatticeChoice::Sc);
        let z = a.central_z(&[2]).unwrap();
        // generically the dominant summand is the star element
        let expect = a
            .star(&a.w.translation(&[2]).unwrap())
            .add(&a.t(&a.w.translation(&[-2]).unwrap()));
        assert_eq!(z, expect);
        assert_eq!(a.central_z(&[0]).unwrap(), a.one());
        // over a characteristic-two field with q odd the star corrections
        // vanish and the orbit sum collapses to T_{s1}T_{s0} + T_{s0}T_{s1}
        let s1 = a.t(&a.w.simple(0));
        let s0 = a.t(&a.w.simple(1));
        let products = a.multiply(&s1, &s0).add(&a.multiply(&s0, &s1));
        let diff = z.sub(&products);
        let two = crate::coeff::SpecTarget::ModC { c: 2, r: 1 };
        for (_, c) in &diff.terms {
            assert_eq!(c.specialize(&two).unwrap().as_fp(), Some(0));
        }
    }

    #[test]
    fn central_elements_commute_with_generators() {
        for (fam, rank, params, lat) in [
            (Family::A, 1usize, vec![1u64, 1], LatticeChoice::Sc),
            (Family::A, 1, vec![1, 2], LatticeChoice::Sc),
            (Family::A, 2, vec![1], LatticeChoice::Ad),
            (Family::C, 2, vec![1, 1, 1], LatticeChoice::Ad),
            (Family::C, 2, vec![3, 2, 2], LatticeChoice::Sc),
        ] {
            let a = alg(fam, rank, &params, lat);
            for mu in a.w.dominant_monoid_generators() {
                let z = a.central_z(&mu).unwrap();
                for s in 0..a.w.node_count() {
                    let ts = a.t(&a.w.simple(s));
                    assert_eq!(
                        a.multiply(&z, &ts),
                        a.multiply(&ts, &z),
                        "{} mu={:?}",
                        a.w.describe(),
                        mu
                    );
                }
                for u in &a.w.omega {
                    let tu = a.t(&u.elt);
                    assert_eq!(a.multiply(&z, &tu), a.multiply(&tu, &z));
                }
            }
        }
    }

    #[test]
    fn e_expand_basics() {
        let a = alg(Family::A, 1, &[1, 1], LatticeChoice::Sc);
        for lam in [vec![2i64], vec![-2i64], vec![4i64]] {
            let e = a.bernstein_e(&lam).unwrap();
            let exp = a.e_expand(&e).unwrap();
            assert_eq!(exp.len(), 1);
            assert!(exp[&lam].is_one());
        }
        let z = a.central_z(&[2]).unwrap();
        let exp = a.e_expand(&z).unwrap();
        assert_eq!(exp.len(), 2);
        assert!(exp[&vec![2]].is_one() && exp[&vec![-2]].is_one());
        let err = a.e_expand(&a.t(&a.w.simple(0)));
        assert!(matches!(err, Err(AlgebraError::NotInCommutativeSubring(_))));
    }

    #[test]
    fn sign_star_involution_on_generators() {
        let a = alg(Family::C, 2, &[1, 1, 1], LatticeChoice::Sc);
        for s in 0..a.w.node_count() {
            let ts = a.t(&a.w.simple(s));
            let img = a.sign_star(&ts);
            let expect = ts
                .scale(&HalfLaurent::int(-1))
                .add(&a.one().scale(&a.q_s(s).sub(&HalfLaurent::one())));
            assert_eq!(img, expect);
            assert_eq!(a.sign_star(&img), ts);
        }
        assert_eq!(a.sign_star(&a.one()), a.one());
    }

    #[test]
    fn sign_star_multiplicative_samples() {
        let a = alg(Family::A, 1, &[1, 2], LatticeChoice::Sc);
        let ball = a.w.enumerate_ball(3).unwrap();
        for (w1, _) in ball.iter().take(5) {
            for (w2, _) in ball.iter().take(5) {
                let lhs = a.sign_star(&a.multiply(&a.t(w1), &a.t(w2)));
                let rhs = a.multiply(&a.sign_star(&a.t(w1)), &a.sign_star(&a.t(w2)));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn char_theta_value_is_monomial() {
        let a = alg(Family::A, 1, &[1, 1], LatticeChoice::Sc);
        // both nodes act by -1
        let special = |_s: usize| HalfLaurent::int(-1);
        let v = char_theta_inverse_value(&a, &special, &[2]).unwrap();
        assert_eq!(v, HalfLaurent::q_half_pow(-2));
        // both nodes act by q^{d_s}
        let q_s: Vec<HalfLaurent> = (0..2).map(|s| a.q_s(s)).collect();
        let trivial = move |s: usize| q_s[s].clone();
        let v = char_theta_inverse_value(&a, &trivial, &[2]).unwrap();
        assert_eq!(v, HalfLaurent::q_half_pow(2));
    }
}
