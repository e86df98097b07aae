//! Irreducible root systems of types A-G, their Weyl group actions on
//! coweights, and the extended (affine) Dynkin diagram with parameter
//! decorations.
//!
//! Conventions used throughout the crate:
//! - roots are stored by their coordinates in the simple-root basis;
//! - coweights are stored by their pairings with the simple roots, i.e. in
//!   the fundamental-coweight basis, so the coweight lattice is exactly
//!   `Z^rank` and the coroot lattice is the row span of the Cartan matrix;
//! - the Cartan matrix entry `a[i][j]` is the pairing of the i-th simple
//!   coroot with the j-th simple root.

use std::collections::{BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDataError {
    #[error("rank {rank} is not valid for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("unknown type string `{0}`")]
    UnknownType(String),
    #[error("parameter list has {got} entries, diagram has {want} nodes or {comps} components")]
    BadParamCount { got: usize, want: usize, comps: usize },
    #[error("parameters are not constant on component {component}")]
    ParamsNotConstant { component: usize },
    #[error("parameters must be positive")]
    NonPositiveParam,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootDataError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(RootDataError::InvalidRank { family: family.letter(), rank })
        }
    }

    pub fn parse(s: &str) -> Result<Self, RootDataError> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(RootDataError::UnknownType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootDataError::UnknownType(s.to_string()))?;
        CartanType::new(fam, rank)
    }

    /// Cartan matrix; `a[i][j]` pairs the i-th simple coroot with the j-th
    /// simple root.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut a = vec![vec![0i64; l]; l];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let chain = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A => {
                for i in 0..l - 1 {
                    chain(&mut a, i, i + 1);
                }
            }
            Family::B => {
                for i in 0..l - 1 {
                    chain(&mut a, i, i + 1);
                }
                // last simple root short
                a[l - 2][l - 1] = -1;
                a[l - 1][l - 2] = -2;
            }
            Family::C => {
                for i in 0..l - 1 {
                    chain(&mut a, i, i + 1);
                }
                // last simple root long
                a[l - 2][l - 1] = -2;
                a[l - 1][l - 2] = -1;
            }
            Family::D => {
                for i in 0..l - 2 {
                    chain(&mut a, i, i + 1);
                }
                chain(&mut a, l - 3, l - 1);
            }
            Family::E => {
                // Bourbaki numbering (1-indexed): chain 1-3-4-5-..., branch 2-4.
                let edges: &[(usize, usize)] = match l {
                    6 => &[(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
                    7 => &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
                    8 => &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)],
                    _ => unreachable!(),
                };
                for &(i, j) in edges {
                    chain(&mut a, i - 1, j - 1);
                }
            }
            Family::F => {
                chain(&mut a, 0, 1);
                chain(&mut a, 2, 3);
                a[1][2] = -1;
                a[2][1] = -2;
            }
            Family::G => {
                // first simple root short
                a[0][1] = -3;
                a[1][0] = -1;
            }
        }
        a
    }

    pub fn weyl_group_order(&self) -> u128 {
        fn fact(n: u128) -> u128 {
            (1..=n).product()
        }
        let l = self.rank as u128;
        match self.family {
            Family::A => fact(l + 1),
            Family::B | Family::C => (1u128 << l) * fact(l),
            Family::D => (1u128 << (l - 1)) * fact(l),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                8 => 696_729_600,
                _ => unreachable!(),
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }
}

impl std::fmt::Display for CartanType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A positive root together with its coroot, both in simple-basis coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Root {
    /// Coordinates in the simple-root basis.
    pub root: Vec<i64>,
    /// Coordinates of the coroot in the simple-coroot basis.
    pub coroot: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan: CartanType,
    pub a: Vec<Vec<i64>>,
    /// All positive roots, sorted by height then lexicographically.
    pub positive_roots: Vec<Root>,
    /// Index of the highest root in `positive_roots`.
    pub theta: usize,
    /// Coroot-lattice membership data (Smith form of the transposed Cartan matrix).
    snf: Snf,
}

impl RootSystem {
    pub fn new(cartan: CartanType) -> Self {
        let a = cartan.cartan_matrix();
        let l = cartan.rank;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 0..l {
            let mut root = vec![0i64; l];
            root[i] = 1;
            let coroot = root.clone();
            seen.insert(root.clone());
            queue.push_back(Root { root, coroot });
        }
        let mut all: Vec<Root> = Vec::new();
        while let Some(r) = queue.pop_front() {
            all.push(r.clone());
            for i in 0..l {
                // pairing of the i-th simple coroot with r.root
                let p: i64 = (0..l).map(|j| a[i][j] * r.root[j]).sum();
                let mut nr = r.root.clone();
                nr[i] -= p;
                if nr.iter().all(|&c| c >= 0) && nr.iter().any(|&c| c > 0) && !seen.contains(&nr) {
                    // coroot transforms through the transposed pairing
                    let pc: i64 = (0..l).map(|k| r.coroot[k] * a[k][i]).sum();
                    let mut nc = r.coroot.clone();
                    nc[i] -= pc;
                    seen.insert(nr.clone());
                    queue.push_back(Root { root: nr, coroot: nc });
                }
            }
        }
        all.sort_by_key(|r| (r.root.iter().sum::<i64>(), r.root.clone()));
        all.dedup_by(|x, y| x.root == y.root);
        let theta = all.len() - 1;
        let snf = Snf::new(&transpose(&a));
        RootSystem { cartan, a, positive_roots: all, theta, snf }
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    /// Pairing of a coweight (fundamental-coweight coordinates) with a root
    /// given by simple-basis coordinates.
    pub fn pair(&self, coweight: &[i64], root_coords: &[i64]) -> i64 {
        dot(root_coords, coweight)
    }

    /// Coordinates of a coroot (simple-coroot basis) in the coweight basis.
    pub fn coroot_coweight_coords(&self, coroot: &[i64]) -> Vec<i64> {
        let l = self.rank();
        (0..l).map(|j| (0..l).map(|i| coroot[i] * self.a[i][j]).sum()).collect()
    }

    /// The matrix of the i-th simple reflection acting on coweight coordinates.
    pub fn simple_reflection_matrix(&self, i: usize) -> Vec<i64> {
        let l = self.rank();
        let mut m = identity_matrix(l);
        for j in 0..l {
            m[j * l + i] -= self.a[i][j];
        }
        m
    }

    /// Reflection in an arbitrary root, acting on coweight coordinates.
    pub fn root_reflection_matrix(&self, r: &Root) -> Vec<i64> {
        let l = self.rank();
        let cw = self.coroot_coweight_coords(&r.coroot);
        let mut m = identity_matrix(l);
        for j in 0..l {
            for k in 0..l {
                m[j * l + k] -= cw[j] * r.root[k];
            }
        }
        m
    }

    pub fn is_dominant(&self, coweight: &[i64]) -> bool {
        coweight.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self, coweight: &[i64]) -> bool {
        coweight.iter().all(|&c| c > 0)
    }

    /// Full Weyl-group orbit of a coweight, sorted for determinism.
    pub fn weyl_orbit(&self, coweight: &[i64]) -> Vec<Vec<i64>> {
        let l = self.rank();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(coweight.to_vec());
        queue.push_back(coweight.to_vec());
        while let Some(m) = queue.pop_front() {
            for i in 0..l {
                let mut next = m.clone();
                let mi = m[i];
                for (j, x) in next.iter_mut().enumerate() {
                    *x -= mi * self.a[i][j];
                }
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Membership of a coweight in the coroot lattice.
    pub fn in_coroot_lattice(&self, coweight: &[i64]) -> bool {
        self.snf.in_image(coweight)
    }

    /// Invariant identifying the class of a coweight modulo the coroot lattice.
    pub fn coroot_class_key(&self, coweight: &[i64]) -> Vec<i64> {
        self.snf.class_key(coweight)
    }

    /// Order of the coweight/coroot quotient (the fundamental group).
    pub fn fundamental_group_order(&self) -> u64 {
        self.snf.diag.iter().map(|&d| d.unsigned_abs()).product()
    }

    /// Sum of all positive coroots, in coweight coordinates (pairs to 2 with
    /// every simple root).
    pub fn two_rho_check(&self) -> Vec<i64> {
        let l = self.rank();
        let mut acc = vec![0i64; l];
        for r in &self.positive_roots {
            let cw = self.coroot_coweight_coords(&r.coroot);
            for j in 0..l {
                acc[j] += cw[j];
            }
        }
        acc
    }

    /// Fundamental coweights in this coordinate system are the unit vectors.
    pub fn fundamental_coweight(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        v
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn identity_matrix(l: usize) -> Vec<i64> {
    let mut m = vec![0i64; l * l];
    for i in 0..l {
        m[i * l + i] = 1;
    }
    m
}

pub fn mat_mul(l: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; l * l];
    for i in 0..l {
        for k in 0..l {
            let aik = a[i * l + k];
            if aik == 0 {
                continue;
            }
            for j in 0..l {
                out[i * l + j] += aik * b[k * l + j];
            }
        }
    }
    out
}

pub fn mat_apply(l: usize, m: &[i64], v: &[i64]) -> Vec<i64> {
    (0..l).map(|i| (0..l).map(|j| m[i * l + j] * v[j]).sum()).collect()
}

/// Apply the transpose of `m` to a vector (used for the root-side action).
pub fn mat_t_apply(l: usize, m: &[i64], v: &[i64]) -> Vec<i64> {
    (0..l).map(|j| (0..l).map(|i| m[i * l + j] * v[i]).sum()).collect()
}

/// Exact inverse of an integer matrix with determinant +-1.
pub fn mat_inverse(l: usize, m: &[i64]) -> Vec<i64> {
    // Gauss-Jordan over rationals with i128 arithmetic; entries stay tiny.
    #[derive(Clone, Copy)]
    struct Q(i128, i128);
    impl Q {
        fn norm(self) -> Q {
            let g = gcd_i128(self.0.abs(), self.1.abs()).max(1);
            let s = if self.1 < 0 { -1 } else { 1 };
            Q(s * self.0 / g, s * self.1 / g)
        }
        fn sub(self, o: Q) -> Q {
            Q(self.0 * o.1 - o.0 * self.1, self.1 * o.1).norm()
        }
        fn mul(self, o: Q) -> Q {
            Q(self.0 * o.0, self.1 * o.1).norm()
        }
        fn div(self, o: Q) -> Q {
            Q(self.0 * o.1, self.1 * o.0).norm()
        }
    }
    fn gcd_i128(a: i128, b: i128) -> i128 {
        if b == 0 {
            a
        } else {
            gcd_i128(b, a % b)
        }
    }
    let mut aug: Vec<Vec<Q>> = (0..l)
        .map(|i| {
            (0..2 * l)
                .map(|j| {
                    if j < l {
                        Q(m[i * l + j] as i128, 1)
                    } else if j - l == i {
                        Q(1, 1)
                    } else {
                        Q(0, 1)
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..l {
        let piv = (col..l).find(|&r| aug[r][col].0 != 0).expect("invertible");
        aug.swap(col, piv);
        let pv = aug[col][col];
        for j in 0..2 * l {
            aug[col][j] = aug[col][j].div(pv);
        }
        for r in 0..l {
            if r != col && aug[r][col].0 != 0 {
                let f = aug[r][col];
                for j in 0..2 * l {
                    let s = aug[col][j].mul(f);
                    aug[r][j] = aug[r][j].sub(s);
                }
            }
        }
    }
    let mut out = vec![0i64; l * l];
    for i in 0..l {
        for j in 0..l {
            let q = aug[i][l + j];
            assert_eq!(q.1, 1, "inverse of unimodular matrix must be integral");
            out[i * l + j] = q.0 as i64;
        }
    }
    out
}

fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

/// Smith-form data for deciding membership in the image of an integer matrix.
#[derive(Clone, Debug)]
struct Snf {
    l: usize,
    /// Left transform: u * m * v = diag.
    u: Vec<i64>,
    diag: Vec<i64>,
}

impl Snf {
    fn new(m: &[Vec<i64>]) -> Self {
        let l = m.len();
        let mut a: Vec<i64> = m.iter().flatten().copied().collect();
        let mut u = identity_matrix(l);
        for t in 0..l {
            loop {
                // find the smallest nonzero entry in the remaining block
                let mut best: Option<(usize, usize)> = None;
                for i in t..l {
                    for j in t..l {
                        let v = a[i * l + j];
                        if v != 0 && best.map_or(true, |(bi, bj)| v.abs() < a[bi * l + bj].abs()) {
                            best = Some((i, j));
                        }
                    }
                }
                let (bi, bj) = best.expect("nonsingular Cartan matrix");
                // move pivot to (t, t)
                if bi != t {
                    for j in 0..l {
                        a.swap(t * l + j, bi * l + j);
                        u.swap(t * l + j, bi * l + j);
                    }
                }
                if bj != t {
                    for i in 0..l {
                        a.swap(i * l + t, i * l + bj);
                    }
                }
                let piv = a[t * l + t];
                let mut clean = true;
                for i in t + 1..l {
                    let f = a[i * l + t].div_euclid(piv);
                    if f != 0 {
                        for j in 0..l {
                            a[i * l + j] -= f * a[t * l + j];
                            u[i * l + j] -= f * u[t * l + j];
                        }
                    }
                    if a[i * l + t] != 0 {
                        clean = false;
                    }
                }
                for j in t + 1..l {
                    let f = a[t * l + j].div_euclid(piv);
                    if f != 0 {
                        for i in 0..l {
                            a[i * l + j] -= f * a[i * l + t];
                        }
                    }
                    if a[t * l + j] != 0 {
                        clean = false;
                    }
                }
                if clean {
                    break;
                }
            }
        }
        let diag = (0..l).map(|i| a[i * l + i].abs()).collect();
        Snf { l, u, diag }
    }

    fn reduced(&self, v: &[i64]) -> Vec<i64> {
        let uv = mat_apply(self.l, &self.u, v);
        uv.iter()
            .zip(&self.diag)
            .map(|(x, d)| if *d == 0 { *x } else { x.rem_euclid(*d) })
            .collect()
    }

    fn in_image(&self, v: &[i64]) -> bool {
        self.reduced(v).iter().all(|&x| x == 0)
    }

    fn class_key(&self, v: &[i64]) -> Vec<i64> {
        self.reduced(v)
    }
}

// ---------------------------------------------------------------------------
// Affine diagram
// ---------------------------------------------------------------------------

/// Bond order between two nodes of the affine diagram.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Bond {
    Order(u8),
    Infinite,
}

impl Bond {
    pub fn is_multiple(self) -> bool {
        match self {
            Bond::Order(n) => n >= 4,
            Bond::Infinite => true,
        }
    }
}

/// The extended Dynkin diagram with parameter decorations.
///
/// Nodes are indexed `0..rank` for the finite simple reflections (Bourbaki
/// order) and `rank` for the affine node; that index order is also the word
/// order used for lexicographic tie-breaks.
#[derive(Clone, Debug)]
pub struct AffineDynkin {
    pub cartan: CartanType,
    /// Generalized Cartan matrix of size (rank+1)^2.
    pub gcm: Vec<i64>,
    pub bonds: Vec<Bond>,
    /// Parameter d_s per node.
    pub params: Vec<u64>,
    /// Partition of the nodes into reflection classes, canonically labeled:
    /// sorted by decreasing size, ties by smallest node index.
    pub components: Vec<Vec<usize>>,
    /// components index per node.
    pub component_of: Vec<usize>,
}

impl AffineDynkin {
    pub fn new(rs: &RootSystem, params: Vec<u64>) -> Result<Self, RootDataError> {
        let l = rs.rank();
        let n = l + 1;
        if params.len() != n {
            return Err(RootDataError::BadParamCount { got: params.len(), want: n, comps: 0 });
        }
        if params.iter().any(|&d| d == 0) {
            return Err(RootDataError::NonPositiveParam);
        }
        let theta = &rs.positive_roots[rs.theta];
        let theta_cw = rs.coroot_coweight_coords(&theta.coroot);
        let mut gcm = vec![0i64; n * n];
        for i in 0..l {
            for j in 0..l {
                gcm[i * n + j] = rs.a[i][j];
            }
        }
        gcm[l * n + l] = 2;
        for j in 0..l {
            // affine node row: pairing of -theta^vee with alpha_j
            gcm[l * n + j] = -theta_cw[j];
            // affine node column: pairing of alpha_j^vee with -theta
            gcm[j * n + l] = -(0..l).map(|k| rs.a[j][k] * theta.root[k]).sum::<i64>();
        }
        let mut bonds = vec![Bond::Order(2); n * n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let prod = gcm[i * n + j] * gcm[j * n + i];
                bonds[i * n + j] = match prod {
                    0 => Bond::Order(2),
                    1 => Bond::Order(3),
                    2 => Bond::Order(4),
                    3 => Bond::Order(6),
                    _ => Bond::Infinite,
                };
            }
        }
        // components: connected parts after deleting every multiple edge
        let mut comp_of = vec![usize::MAX; n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut stack = vec![start];
            let mut nodes = Vec::new();
            comp_of[start] = id;
            while let Some(x) = stack.pop() {
                nodes.push(x);
                for y in 0..n {
                    if y != x
                        && comp_of[y] == usize::MAX
                        && gcm[x * n + y] != 0
                        && !bonds[x * n + y].is_multiple()
                    {
                        comp_of[y] = id;
                        stack.push(y);
                    }
                }
            }
            nodes.sort_unstable();
            comps.push(nodes);
        }
        let mut order: Vec<usize> = (0..comps.len()).collect();
        order.sort_by_key(|&i| (usize::MAX - comps[i].len(), comps[i][0]));
        let components: Vec<Vec<usize>> = order.iter().map(|&i| comps[i].clone()).collect();
        let mut component_of = vec![0usize; n];
        for (ci, c) in components.iter().enumerate() {
            for &x in c {
                component_of[x] = ci;
            }
        }
        // parameters must be constant on each class
        for (ci, c) in components.iter().enumerate() {
            if c.iter().any(|&x| params[x] != params[c[0]]) {
                return Err(RootDataError::ParamsNotConstant { component: ci });
            }
        }
        Ok(AffineDynkin { cartan: rs.cartan, gcm, bonds, params, components, component_of })
    }

    pub fn node_count(&self) -> usize {
        self.cartan.rank + 1
    }

    pub fn affine_node(&self) -> usize {
        self.cartan.rank
    }

    /// Number of reflection classes.
    pub fn class_count(&self) -> usize {
        self.components.len()
    }

    pub fn bond(&self, s: usize, t: usize) -> Bond {
        self.bonds[s * self.node_count() + t]
    }

    /// Parameter of the class containing node `s`.
    pub fn d(&self, s: usize) -> u64 {
        self.params[s]
    }

    pub fn node_name(&self, s: usize) -> String {
        if s == self.affine_node() {
            "s0".to_string()
        } else {
            format!("s{}", s + 1)
        }
    }

    /// Expand per-class parameters (d_1, ..., d_m) into per-node parameters.
    pub fn params_from_classes(rs: &RootSystem, class_params: &[u64]) -> Result<Vec<u64>, RootDataError> {
        let probe = AffineDynkin::new(rs, vec![1; rs.rank() + 1])?;
        if class_params.len() != probe.class_count() {
            return Err(RootDataError::BadParamCount {
                got: class_params.len(),
                want: rs.rank() + 1,
                comps: probe.class_count(),
            });
        }
        let mut params = vec![0u64; rs.rank() + 1];
        for (ci, c) in probe.components.iter().enumerate() {
            for &x in c {
                params[x] = class_params[ci];
            }
        }
        Ok(params)
    }
}

/// A permutation of the affine diagram nodes preserving bonds and parameters.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DiagramAut {
    pub perm: Vec<usize>,
}

impl DiagramAut {
    pub fn identity(n: usize) -> Self {
        DiagramAut { perm: (0..n).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn apply(&self, s: usize) -> usize {
        self.perm[s]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        DiagramAut { perm: inv }
    }

    pub fn compose(&self, other: &Self) -> Self {
        // (self . other)(s) = self(other(s))
        DiagramAut { perm: other.perm.iter().map(|&s| self.perm[s]).collect() }
    }

    pub fn preserves(&self, dynkin: &AffineDynkin) -> bool {
        let n = dynkin.node_count();
        for i in 0..n {
            if dynkin.params[self.perm[i]] != dynkin.params[i] {
                return false;
            }
            for j in 0..n {
                if dynkin.bond(self.perm[i], self.perm[j]) != dynkin.bond(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

/// All bond- and parameter-preserving permutations of the affine diagram.
pub fn diagram_automorphisms(dynkin: &AffineDynkin) -> Vec<DiagramAut> {
    let n = dynkin.node_count();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        dynkin: &AffineDynkin,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
        out: &mut Vec<DiagramAut>,
    ) {
        let n = dynkin.node_count();
        if depth == n {
            out.push(DiagramAut { perm: perm.clone() });
            return;
        }
        for img in 0..n {
            if used[img] || dynkin.params[img] != dynkin.params[depth] {
                continue;
            }
            let ok = (0..depth).all(|j| dynkin.bond(img, perm[j]) == dynkin.bond(depth, j));
            if ok {
                perm[depth] = img;
                used[img] = true;
                rec(dynkin, perm, used, depth + 1, out);
                used[img] = false;
            }
        }
    }
    rec(dynkin, &mut perm, &mut used, 0, &mut out);
    out.sort_by(|x, y| x.perm.cmp(&y.perm));
    out
}
