//! The extended affine Weyl group: semidirect product of a coweight-type
//! lattice with the finite Weyl group, its length function and reduced
//! words, the length-zero subgroup with its diagram action, and the
//! dominant monoid.

use crate::cartan::{
    dot, identity_matrix, mat_apply, mat_inverse, mat_mul, mat_t_apply, AffineDynkin, CartanType,
    DiagramAut, RootDataError, RootSystem,
};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::RwLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error("coweight {0:?} does not lie in the chosen lattice")]
    NotInLattice(Vec<i64>),
    #[error("ball radius {got} exceeds the configured bound {bound}")]
    BallTooLarge { got: u64, bound: u64 },
    #[error("coweight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("the length-zero action does not preserve the parameters; they must be constant on diagram-automorphism orbits for this lattice")]
    ParamsNotOmegaInvariant,
}

/// Translation lattice choice: the coroot lattice or the coweight lattice.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum LatticeChoice {
    Sc,
    Ad,
}

impl LatticeChoice {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "sc" => Some(LatticeChoice::Sc),
            "ad" => Some(LatticeChoice::Ad),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LatticeChoice::Sc => "sc",
            LatticeChoice::Ad => "ad",
        }
    }
}

/// Element of the extended affine Weyl group in canonical
/// (translation, finite part) form. The finite part is stored as the matrix
/// of its action on coweight coordinates (row-major, rank x rank).
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ExtWeylElt {
    pub trans: Vec<i64>,
    pub fin: Vec<i64>,
}

/// A length-zero element together with its action on the diagram nodes.
#[derive(Clone, Debug)]
pub struct OmegaElt {
    pub elt: ExtWeylElt,
    pub action: DiagramAut,
    pub class_key: Vec<i64>,
}

/// One extended affine Weyl group, fixed type, parameters, and lattice.
#[derive(Debug)]
pub struct WeylData {
    pub rs: RootSystem,
    pub dynkin: AffineDynkin,
    pub lattice: LatticeChoice,
    /// Length-zero subgroup; index 0 is the identity.
    pub omega: Vec<OmegaElt>,
    simple_fin: Vec<Vec<i64>>,
    theta_fin: Vec<i64>,
    theta_coroot_cw: Vec<i64>,
    omega_by_key: BTreeMap<Vec<i64>, usize>,
    omega_inverse: Vec<usize>,
    words: RwLock<HashMap<ExtWeylElt, (usize, Vec<usize>)>>,
    pub ball_bound: u64,
}

impl WeylData {
    pub fn new(
        cartan: CartanType,
        params: Vec<u64>,
        lattice: LatticeChoice,
    ) -> Result<Self, WeylError> {
        let rs = RootSystem::new(cartan);
        let dynkin = AffineDynkin::new(&rs, params)?;
        let l = rs.rank();
        let simple_fin: Vec<Vec<i64>> = (0..l).map(|i| rs.simple_reflection_matrix(i)).collect();
        let theta = &rs.positive_roots[rs.theta];
        let theta_fin = rs.root_reflection_matrix(theta);
        let theta_coroot_cw = rs.coroot_coweight_coords(&theta.coroot);
        let mut data = WeylData {
            rs,
            dynkin,
            lattice,
            omega: Vec::new(),
            simple_fin,
            theta_fin,
            theta_coroot_cw,
            omega_by_key: BTreeMap::new(),
            omega_inverse: Vec::new(),
            words: RwLock::new(HashMap::new()),
            ball_bound: 10,
        };
        data.build_omega()?;
        Ok(data)
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Nodes of the affine diagram, in word order (finite nodes first, affine last).
    pub fn node_count(&self) -> usize {
        self.rank() + 1
    }

    pub fn affine_node(&self) -> usize {
        self.rank()
    }

    pub fn identity(&self) -> ExtWeylElt {
        ExtWeylElt { trans: vec![0; self.rank()], fin: identity_matrix(self.rank()) }
    }

    /// The simple reflection for a diagram node, as a group element.
    pub fn simple(&self, s: usize) -> ExtWeylElt {
        if s == self.affine_node() {
            ExtWeylElt { trans: self.theta_coroot_cw.clone(), fin: self.theta_fin.clone() }
        } else {
            ExtWeylElt { trans: vec![0; self.rank()], fin: self.simple_fin[s].clone() }
        }
    }

    pub fn in_lattice(&self, coweight: &[i64]) -> bool {
        match self.lattice {
            LatticeChoice::Ad => true,
            LatticeChoice::Sc => self.rs.in_coroot_lattice(coweight),
        }
    }

    pub fn translation(&self, coweight: &[i64]) -> Result<ExtWeylElt, WeylError> {
        if !self.in_lattice(coweight) {
            return Err(WeylError::NotInLattice(coweight.to_vec()));
        }
        Ok(ExtWeylElt { trans: coweight.to_vec(), fin: identity_matrix(self.rank()) })
    }

    pub fn mul(&self, a: &ExtWeylElt, b: &ExtWeylElt) -> ExtWeylElt {
        let l = self.rank();
        let moved = mat_apply(l, &a.fin, &b.trans);
        let trans = a.trans.iter().zip(&moved).map(|(x, y)| x + y).collect();
        ExtWeylElt { trans, fin: mat_mul(l, &a.fin, &b.fin) }
    }

    pub fn inv(&self, a: &ExtWeylElt) -> ExtWeylElt {
        let l = self.rank();
        let fin_inv = mat_inverse(l, &a.fin);
        let trans = mat_apply(l, &fin_inv, &a.trans).iter().map(|x| -x).collect();
        ExtWeylElt { trans, fin: fin_inv }
    }

    pub fn is_identity(&self, a: &ExtWeylElt) -> bool {
        a.trans.iter().all(|&x| x == 0) && a.fin == identity_matrix(self.rank())
    }

    /// Closed-form length of `t_lambda * v`: each positive root contributes
    /// |<lambda, alpha>|, shifted by one when the finite part pulls the root
    /// negative. Validated against the Cayley-graph oracle in the test suite.
    pub fn length(&self, w: &ExtWeylElt) -> u64 {
        let l = self.rank();
        let mut total: i64 = 0;
        for r in &self.rs.positive_roots {
            let pair = dot(&r.root, &w.trans);
            let pulled = mat_t_apply(l, &w.fin, &r.root);
            let positive = root_coords_positive(&pulled);
            total += if positive { pair.abs() } else { (pair - 1).abs() };
        }
        total as u64
    }

    /// Right multiplication by a simple reflection, reporting whether the
    /// length went up.
    pub fn right_mul_simple(&self, w: &ExtWeylElt, s: usize) -> (ExtWeylElt, bool) {
        let ws = self.mul(w, &self.simple(s));
        let lengthened = self.length(&ws) > self.length(w);
        (ws, lengthened)
    }

    /// The class of a coweight modulo the coroot lattice, as an index into
    /// the length-zero subgroup.
    pub fn omega_class(&self, coweight: &[i64]) -> usize {
        let key = self.rs.coroot_class_key(coweight);
        *self.omega_by_key.get(&key).expect("every lattice class carries a length-zero element")
    }

    pub fn omega_index_of_inverse(&self, idx: usize) -> usize {
        self.omega_inverse[idx]
    }

    /// Canonical factorization `w = u * s_1 ... s_n` with `u` length-zero and
    /// the word lexicographically smallest (node order: finite nodes in
    /// Bourbaki order, affine node last). Memoized.
    pub fn reduced_word(&self, w: &ExtWeylElt) -> (usize, Vec<usize>) {
        if let Some(hit) = self.words.read().unwrap().get(w) {
            return hit.clone();
        }
        let u_idx = match self.lattice {
            LatticeChoice::Sc => 0,
            LatticeChoice::Ad => self.omega_class(&w.trans),
        };
        let u_inv = &self.omega[self.omega_inverse[u_idx]].elt;
        let mut x = self.mul(u_inv, w);
        let mut len = self.length(&x);
        debug_assert_eq!(len, self.length(w), "length-zero factor must not change length");
        let mut word = Vec::with_capacity(len as usize);
        'outer: while len > 0 {
            for s in 0..self.node_count() {
                let sx = self.mul(&self.simple(s), &x);
                let sl = self.length(&sx);
                if sl < len {
                    word.push(s);
                    x = sx;
                    len = sl;
                    continue 'outer;
                }
            }
            unreachable!("no descent found for a positive-length element");
        }
        debug_assert!(self.is_identity(&x));
        let entry = (u_idx, word);
        self.words.write().unwrap().insert(w.clone(), entry.clone());
        entry
    }

    /// Sum of the parameters along a reduced word; the q-exponent of q_w.
    pub fn weighted_length(&self, w: &ExtWeylElt) -> u64 {
        let (_, word) = self.reduced_word(w);
        word.iter().map(|&s| self.dynkin.d(s)).sum()
    }

    /// All elements of length at most `radius`, with their lengths, by
    /// breadth-first search from the length-zero subgroup.
    pub fn enumerate_ball(&self, radius: u64) -> Result<Vec<(ExtWeylElt, u64)>, WeylError> {
        if radius > self.ball_bound {
            return Err(WeylError::BallTooLarge { got: radius, bound: self.ball_bound });
        }
        let mut depth: BTreeMap<ExtWeylElt, u64> = BTreeMap::new();
        let mut frontier: Vec<ExtWeylElt> = Vec::new();
        for u in &self.omega {
            depth.insert(u.elt.clone(), 0);
            frontier.push(u.elt.clone());
        }
        for d in 1..=radius {
            let mut next = Vec::new();
            for w in &frontier {
                for s in 0..self.node_count() {
                    let ws = self.mul(w, &self.simple(s));
                    if !depth.contains_key(&ws) {
                        depth.insert(ws.clone(), d);
                        next.push(ws);
                    }
                }
            }
            frontier = next;
        }
        Ok(depth.into_iter().collect())
    }

    /// Finite generating set of the dominant monoid of the lattice, modulo
    /// invertibles, by enumeration inside the generator box.
    pub fn dominant_monoid_generators(&self) -> Vec<Vec<i64>> {
        self.monoid_generators(self.lattice)
    }

    /// Generators of the dominant monoid of the coroot lattice, independent
    /// of the datum lattice. These index the affine-part central elements.
    pub fn sc_dominant_monoid_generators(&self) -> Vec<Vec<i64>> {
        self.monoid_generators(LatticeChoice::Sc)
    }

    fn member(&self, lattice: LatticeChoice, coweight: &[i64]) -> bool {
        match lattice {
            LatticeChoice::Ad => true,
            LatticeChoice::Sc => self.rs.in_coroot_lattice(coweight),
        }
    }

    fn monoid_generators(&self, lattice: LatticeChoice) -> Vec<Vec<i64>> {
        let l = self.rank();
        // primitive generator along each extreme ray
        let mut ray_mult = vec![1i64; l];
        for (i, slot) in ray_mult.iter_mut().enumerate() {
            let mut k = 1i64;
            loop {
                let mut v = vec![0i64; l];
                v[i] = k;
                if self.member(lattice, &v) {
                    break;
                }
                k += 1;
                assert!(k <= 64, "ray generator search exceeded bound");
            }
            *slot = k;
        }
        // candidates: lattice points in the box spanned by the ray generators
        let mut candidates: Vec<Vec<i64>> = Vec::new();
        let mut cur = vec![0i64; l];
        loop {
            if cur.iter().any(|&x| x > 0) && self.member(lattice, &cur) {
                candidates.push(cur.clone());
            }
            // odometer
            let mut i = 0;
            loop {
                if i == l {
                    let set: BTreeSet<Vec<i64>> = candidates.iter().cloned().collect();
                    let mut basis: Vec<Vec<i64>> = Vec::new();
                    'cand: for m in &candidates {
                        for h in &candidates {
                            if h != m && h.iter().zip(m).all(|(a, b)| a <= b) {
                                let rest: Vec<i64> = m.iter().zip(h).map(|(a, b)| a - b).collect();
                                if rest.iter().any(|&x| x != 0)
                                    && rest.iter().all(|&x| x >= 0)
                                    && set.contains(&rest)
                                {
                                    continue 'cand;
                                }
                                if rest.iter().all(|&x| x == 0) {
                                    continue;
                                }
                            }
                        }
                        basis.push(m.clone());
                    }
                    basis.sort();
                    return basis;
                }
                cur[i] += 1;
                if cur[i] <= ray_mult[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    /// Strictly dominant lattice element minimizing the translation length.
    pub fn minimal_strictly_dominant(&self) -> Vec<i64> {
        let l = self.rank();
        let bound = 4i64;
        let mut best: Option<(u64, Vec<i64>)> = None;
        let mut cur = vec![1i64; l];
        loop {
            if self.in_lattice(&cur) {
                let t = self.translation(&cur).unwrap();
                let len = self.length(&t);
                if best.as_ref().map_or(true, |(bl, bv)| (len, &cur) < (*bl, bv)) {
                    best = Some((len, cur.clone()));
                }
            }
            let mut i = 0;
            loop {
                if i == l {
                    return best.expect("strictly dominant element exists in the box").1;
                }
                cur[i] += 1;
                if cur[i] <= bound {
                    break;
                }
                cur[i] = 1;
                i += 1;
            }
        }
    }

    fn build_omega(&mut self) -> Result<(), WeylError> {
        let n = self.node_count();
        let id = OmegaElt {
            elt: self.identity(),
            action: DiagramAut::identity(n),
            class_key: self.rs.coroot_class_key(&vec![0; self.rank()]),
        };
        let mut omega = vec![id];
        if self.lattice == LatticeChoice::Ad {
            let theta_coords = self.rs.positive_roots[self.rs.theta].root.clone();
            for i in 0..self.rank() {
                if theta_coords[i] != 1 {
                    continue;
                }
                let lambda = self.rs.fundamental_coweight(i);
                let elt = self.length_zero_for(&lambda);
                assert_eq!(self.length(&elt), 0, "constructed element must have length zero");
                let action = self.conjugation_action(&elt);
                if !action.preserves(&self.dynkin) {
                    return Err(WeylError::ParamsNotOmegaInvariant);
                }
                omega.push(OmegaElt {
                    class_key: self.rs.coroot_class_key(&lambda),
                    elt,
                    action,
                });
            }
            // close under products (covers fundamental groups like Z/4)
            loop {
                let mut added = false;
                let keys: BTreeSet<Vec<i64>> = omega.iter().map(|o| o.class_key.clone()).collect();
                let mut new_elts = Vec::new();
                for a in &omega {
                    for b in &omega {
                        let prod = self.mul(&a.elt, &b.elt);
                        let key = self.rs.coroot_class_key(&prod.trans);
                        if !keys.contains(&key)
                            && !new_elts.iter().any(|(k, _): &(Vec<i64>, ExtWeylElt)| *k == key)
                        {
                            assert_eq!(self.length(&prod), 0);
                            new_elts.push((key, prod));
                        }
                    }
                }
                for (key, elt) in new_elts {
                    let action = self.conjugation_action(&elt);
                    if !action.preserves(&self.dynkin) {
                        return Err(WeylError::ParamsNotOmegaInvariant);
                    }
                    omega.push(OmegaElt { elt, action, class_key: key });
                    added = true;
                }
                if !added {
                    break;
                }
            }
            assert_eq!(
                omega.len() as u64,
                self.rs.fundamental_group_order(),
                "length-zero subgroup must have the fundamental-group order"
            );
        }
        omega.sort_by(|a, b| a.class_key.cmp(&b.class_key).then(a.elt.cmp(&b.elt)));
        // the identity has the zero class key, which sorts first only if keys
        // are nonnegative; re-anchor explicitly
        let id_pos = omega.iter().position(|o| self.is_identity(&o.elt)).unwrap();
        omega.swap(0, id_pos);
        self.omega_by_key = omega.iter().enumerate().map(|(i, o)| (o.class_key.clone(), i)).collect();
        self.omega_inverse = omega
            .iter()
            .map(|o| {
                let inv = self.inv(&o.elt);
                omega
                    .iter()
                    .position(|c| c.elt == inv)
                    .expect("length-zero subgroup closed under inverse")
            })
            .collect();
        self.omega = omega;
        Ok(())
    }

    /// The unique length-zero element in the coset of `t_lambda` for a
    /// minuscule dominant coweight: `t_lambda * v` where the inverse of `v`
    /// has inversion set exactly the roots pairing to 1 with lambda.
    fn length_zero_for(&self, lambda: &[i64]) -> ExtWeylElt {
        let l = self.rank();
        let mut target: BTreeSet<Vec<i64>> = self
            .rs
            .positive_roots
            .iter()
            .filter(|r| dot(&r.root, lambda) == 1)
            .map(|r| r.root.clone())
            .collect();
        debug_assert!(self
            .rs
            .positive_roots
            .iter()
            .all(|r| (0..=1).contains(&dot(&r.root, lambda))));
        let mut letters: Vec<usize> = Vec::new();
        while !target.is_empty() {
            let mut simple = None;
            for i in 0..l {
                let mut e = vec![0i64; l];
                e[i] = 1;
                if target.contains(&e) {
                    simple = Some(i);
                    break;
                }
            }
            let i = simple.expect("nonempty inversion set contains a simple root");
            letters.push(i);
            let mut e = vec![0i64; l];
            e[i] = 1;
            target.remove(&e);
            target = target
                .into_iter()
                .map(|c| {
                    let p: i64 = (0..l).map(|j| self.rs.a[i][j] * c[j]).sum();
                    let mut nc = c;
                    nc[i] -= p;
                    nc
                })
                .collect();
        }
        // the peeling writes u = s_{ik} ... s_{i1} with the first-extracted
        // letter rightmost, so v = u^{-1} multiplies in extraction order
        let mut v_fin = identity_matrix(l);
        for &i in &letters {
            v_fin = mat_mul(l, &v_fin, &self.simple_fin[i]);
        }
        ExtWeylElt { trans: lambda.to_vec(), fin: v_fin }
    }

    /// The permutation of the diagram nodes induced by conjugation.
    fn conjugation_action(&self, u: &ExtWeylElt) -> DiagramAut {
        let n = self.node_count();
        let u_inv = self.inv(u);
        let mut perm = vec![usize::MAX; n];
        for s in 0..n {
            let conj = self.mul(&self.mul(u, &self.simple(s)), &u_inv);
            let image = (0..n).find(|&t| self.simple(t) == conj);
            perm[s] = image.expect("conjugation by a length-zero element permutes the nodes");
        }
        DiagramAut { perm }
    }

    /// The longest element of the finite Weyl group.
    pub fn longest_finite(&self) -> Vec<i64> {
        let l = self.rank();
        let mut target: BTreeSet<Vec<i64>> =
            self.rs.positive_roots.iter().map(|r| r.root.clone()).collect();
        let mut letters = Vec::new();
        while !target.is_empty() {
            let mut found = None;
            for i in 0..l {
                let mut e = vec![0i64; l];
                e[i] = 1;
                if target.contains(&e) {
                    found = Some(i);
                    break;
                }
            }
            let i = found.expect("simple root in inversion set");
            letters.push(i);
            let mut e = vec![0i64; l];
            e[i] = 1;
            target.remove(&e);
            target = target
                .into_iter()
                .map(|c| {
                    let p: i64 = (0..l).map(|j| self.rs.a[i][j] * c[j]).sum();
                    let mut nc = c;
                    nc[i] -= p;
                    nc
                })
                .collect();
        }
        let mut m = identity_matrix(l);
        for &i in &letters {
            m = mat_mul(l, &self.simple_fin[i], &m);
        }
        m
    }

    /// Image of a coweight under the longest element, negated:
    /// `-w0(mu)`, the dominant partner appearing in the central identity.
    pub fn minus_w0(&self, mu: &[i64]) -> Vec<i64> {
        let w0 = self.longest_finite();
        mat_apply(self.rank(), &w0, mu).iter().map(|x| -x).collect()
    }

    /// Datum id string, used by reports.
    pub fn describe(&self) -> String {
        let class_params: Vec<String> = self
            .dynkin
            .components
            .iter()
            .map(|c| self.dynkin.params[c[0]].to_string())
            .collect();
        format!("{}[{}] {}", self.rs.cartan, class_params.join(","), self.lattice.name())
    }
}

fn root_coords_positive(coords: &[i64]) -> bool {
    for &c in coords {
        if c > 0 {
            return true;
        }
        if c < 0 {
            return false;
        }
    }
    panic!("zero vector is not a root");
}

/// Render an element as `u | s_i1 s_i2 ...` using its canonical word.
pub fn display_element(w: &WeylData, elt: &ExtWeylElt) -> String {
    let (u, word) = w.reduced_word(elt);
    let u_part = if u == 0 { "e".to_string() } else { format!("u{}", u) };
    if word.is_empty() {
        u_part
    } else {
        let letters: Vec<String> = word.iter().map(|&s| w.dynkin.node_name(s)).collect();
        format!("{} | {}", u_part, letters.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Family;

    fn wd(fam: Family, rank: usize, class_params: &[u64], lat: LatticeChoice) -> WeylData {
        let ct = CartanType::new(fam, rank).unwrap();
        let rs = RootSystem::new(ct);
        let params = AffineDynkin::params_from_classes(&rs, class_params).unwrap();
        WeylData::new(ct, params, lat).unwrap()
    }

    #[test]
    fn identity_and_simple_lengths() {
        let w = wd(Family::A, 1, &[1, 1], LatticeChoice::Sc);
        assert_eq!(w.length(&w.identity()), 0);
        for s in 0..w.node_count() {
            assert_eq!(w.length(&w.simple(s)), 1);
        }
    }

    #[test]
    fn a1_translation_length_two() {
        let w = wd(Family::A, 1, &[1, 1], LatticeChoice::Sc);
        let t = w.translation(&[2]).unwrap();
        assert_eq!(w.length(&t), 2);
        let (u, word) = w.reduced_word(&t);
        assert_eq!(u, 0);
        assert_eq!(word.len(), 2);
        // the unique dihedral word starts with the affine reflection
        assert_eq!(word, vec![1, 0]);
    }

    #[test]
    fn type_a_translation_length_matches_pairwise_distance() {
        // lengths of diagonal translations in type A match the pairwise sums
        for n in 2..=4usize {
            let params: Vec<u64> = if n == 2 { vec![1, 1] } else { vec![1] };
            let w = wd(Family::A, n - 1, &params, LatticeChoice::Ad);
            for vals in [[1i64, 0, 0, 0], [2, 0, -1, 1], [3, 1, 1, -2]] {
                let v = &vals[..n];
                let m: Vec<i64> = (0..n - 1).map(|i| v[i] - v[i + 1]).collect();
                let t = w.translation(&m).unwrap();
                let mut expect = 0i64;
                for i in 0..n {
                    for j in i + 1..n {
                        expect += (v[i] - v[j]).abs();
                    }
                }
                assert_eq!(w.length(&t), expect as u64);
            }
        }
    }

    #[test]
    fn length_equals_bfs_depth_small() {
        for (fam, rank, params) in [
            (Family::A, 1, vec![1u64, 1]),
            (Family::A, 2, vec![1]),
            (Family::C, 2, vec![1, 1, 1]),
        ] {
            for lat in [LatticeChoice::Sc, LatticeChoice::Ad] {
                let w = wd(fam, rank, &params, lat);
                for (elt, depth) in w.enumerate_ball(5).unwrap() {
                    assert_eq!(w.length(&elt), depth, "{} {:?}", w.describe(), elt);
                }
            }
        }
    }

    #[test]
    fn ball_sizes_frozen() {
        // infinite dihedral: two elements per positive length
        let w = wd(Family::A, 1, &[1, 1], LatticeChoice::Sc);
        assert_eq!(w.enumerate_ball(3).unwrap().len(), 7);
        assert_eq!(w.enumerate_ball(0).unwrap().len(), 1);
        // affine C2: frozen from independent word enumeration
        let c2 = wd(Family::C, 2, &[1, 1, 1], LatticeChoice::Sc);
        assert_eq!(c2.enumerate_ball(2).unwrap().len(), 9);
        let ad = wd(Family::A, 1, &[1, 1], LatticeChoice::Ad);
        assert_eq!(
            ad.enumerate_ball(0).unwrap().len(),
            2,
            "length-zero elements seed the ball"
        );
    }

    #[test]
    fn word_enumeration_oracle_c2() {
        // independent oracle: collect distinct products of words of length <= 2
        let w = wd(Family::C, 2, &[1, 1, 1], LatticeChoice::Sc);
        let mut seen = BTreeSet::new();
        seen.insert(w.identity());
        for a in 0..3 {
            seen.insert(w.simple(a));
            for b in 0..3 {
                seen.insert(w.mul(&w.simple(a), &w.simple(b)));
            }
        }
        // elements of length <= 2 among those words
        let count = seen.iter().filter(|e| w.length(e) <= 2).count();
        assert_eq!(count, 9);
    }

    #[test]
    fn right_mul_simple_examples() {
        let w = wd(Family::A, 1, &[1, 1], LatticeChoice::Sc);
        let (s, up) = w.right_mul_simple(&w.identity(), 0);
        assert_eq!(s, w.simple(0));
        assert!(up);
        let (e, up2) = w.right_mul_simple(&w.simple(0), 0);
        assert!(w.is_identity(&e));
        assert!(!up2);
        // dihedral: (s1 s0) * s0 = s1
        let s1s0 = w.mul(&w.simple(0), &w.simple(1));
        let (r, down) = w.right_mul_simple(&s1s0, 1);
        assert_eq!(r, w.simple(0));
        assert!(!down);
    }

    #[test]
    fn omega_groups() {
        let sc = wd(Family::A, 1, &[1, 1], LatticeChoice::Sc);
        assert_eq!(sc.omega.len(), 1);
        let ad = wd(Family::A, 1, &[1, 1], LatticeChoice::Ad);
        assert_eq!(ad.omega.len(), 2);
        let nt = ad.omega.iter().find(|o| !o.action.is_identity()).unwrap();
        assert_eq!(nt.action.perm, vec![1, 0]);
        let d4 = wd(Family::D, 4, &[1], LatticeChoice::Ad);
        assert_eq!(d4.omega.len(), 4);
        let a2 = wd(Family::A, 2, &[1], LatticeChoice::Ad);
        assert_eq!(a2.omega.len(), 3);
        let c2 = wd(Family::C, 2, &[1, 1, 1], LatticeChoice::Ad);
        assert_eq!(c2.omega.len(), 2);
        let swap = c2.omega.iter().find(|o| !o.action.is_identity()).unwrap();
        // endpoints of the affine diagram are the last finite node and the affine node
        assert_eq!(swap.action.apply(1), 2);
        assert_eq!(swap.action.apply(2), 1);
    }

    #[test]
    fn omega_invariance_of_length() {
        let ad = wd(Family::A, 2, &[1], LatticeChoice::Ad);
        let ball = ad.enumerate_ball(4).unwrap();
        for u in &ad.omega {
            for (w, len) in &ball {
                assert_eq!(ad.length(&ad.mul(&u.elt, w)), *len);
                assert_eq!(ad.length(&ad.mul(w, &u.elt)), *len);
            }
        }
    }

    #[test]
    fn conjugation_matches_diagram_action_on_ball() {
        for (fam, rank, params) in [(Family::A, 1usize, vec![1u64, 1]), (Family::C, 2, vec![1, 1, 1])] {
            let ad = wd(fam, rank, &params, LatticeChoice::Ad);
            for u in &ad.omega {
                for s in 0..ad.node_count() {
                    let conj = ad.mul(&ad.mul(&u.elt, &ad.simple(s)), &ad.inv(&u.elt));
                    assert_eq!(conj, ad.simple(u.action.apply(s)));
                }
            }
        }
    }

    #[test]
    fn params_must_be_omega_invariant_for_ad() {
        let ct = CartanType::new(Family::C, 2).unwrap();
        let rs = RootSystem::new(ct);
        let params = AffineDynkin::params_from_classes(&rs, &[2, 1, 3]).unwrap();
        assert!(matches!(
            WeylData::new(ct, params, LatticeChoice::Ad),
            Err(WeylError::ParamsNotOmegaInvariant)
        ));
    }

    #[test]
    fn dominant_monoid_generators_examples() {
        let a1 = wd(Family::A, 1, &[1, 1], LatticeChoice::Sc);
        assert_eq!(a1.dominant_monoid_generators(), vec![vec![2]]);
        let a2 = wd(Family::A, 2, &[1], LatticeChoice::Ad);
        assert_eq!(a2.dominant_monoid_generators(), vec![vec![0, 1], vec![1, 0]]);
        let c2 = wd(Family::C, 2, &[1, 1, 1], LatticeChoice::Sc);
        let gens = c2.dominant_monoid_generators();
        assert!(!gens.is_empty());
        for g in &gens {
            assert!(c2.rs.is_dominant(g));
            assert!(c2.in_lattice(g));
        }
        // frozen from direct enumeration of the even-sum dominant cone;
        // the doubled spin coweight (0,0,2) is irreducible
        let b3 = wd(Family::B, 3, &[1, 2], LatticeChoice::Sc);
        let gens = b3.dominant_monoid_generators();
        assert_eq!(gens, vec![vec![0, 0, 2], vec![0, 1, 0], vec![1, 0, 1], vec![2, 0, 0]]);
    }

    #[test]
    fn translations_add() {
        let c2 = wd(Family::C, 2, &[1, 1, 1], LatticeChoice::Ad);
        let a = c2.translation(&[1, 0]).unwrap();
        let b = c2.translation(&[0, 1]).unwrap();
        assert_eq!(c2.mul(&a, &b), c2.translation(&[1, 1]).unwrap());
    }

    #[test]
    fn minimal_strictly_dominant_c2_sc() {
        let c2 = wd(Family::C, 2, &[1, 1, 1], LatticeChoice::Sc);
        assert_eq!(c2.minimal_strictly_dominant(), vec![1, 2]);
        let a1 = wd(Family::A, 1, &[1, 1], LatticeChoice::Sc);
        assert_eq!(a1.minimal_strictly_dominant(), vec![2]);
    }

    #[test]
    fn length_of_inverse() {
        let b3 = wd(Family::B, 3, &[1, 2], LatticeChoice::Sc);
        for (w, len) in b3.enumerate_ball(4).unwrap() {
            assert_eq!(b3.length(&b3.inv(&w)), len);
        }
    }

    #[test]
    fn neighbor_lengths_differ_by_one() {
        let c2 = wd(Family::C, 2, &[2, 1, 1], LatticeChoice::Sc);
        for (w, len) in c2.enumerate_ball(4).unwrap() {
            for s in 0..c2.node_count() {
                let (ws, up) = c2.right_mul_simple(&w, s);
                let l2 = c2.length(&ws);
                assert_eq!(l2, if up { len + 1 } else { len - 1 });
            }
        }
    }

    #[test]
    fn display_form() {
        let w = wd(Family::A, 1, &[1, 1], LatticeChoice::Ad);
        assert_eq!(display_element(&w, &w.identity()), "e");
        let s0 = w.simple(w.affine_node());
        assert_eq!(display_element(&w, &s0), "e | s0");
        let u = &w.omega[1].elt;
        assert_eq!(display_element(&w, u), "u1");
    }
}
