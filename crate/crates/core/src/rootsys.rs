//! Reduced irreducible root systems and their finite Weyl groups.
//!
//! Everything is integral: roots are stored by their expansion in simple
//! roots, coroots by their expansion in simple coroots, and coweights by
//! their coordinates in the fundamental-coweight basis. The pairing between
//! a coweight `mu` and a root `alpha` is the plain dot product of the two
//! coordinate vectors.
//!
//! Simple roots are numbered as in the Bourbaki plates. In particular for
//! `G2` the first simple root is short and `theta = 3*alpha_1 + 2*alpha_2`;
//! for `B_n` the last simple root is short, for `C_n` it is long, and for
//! `F4` the roots `alpha_1, alpha_2` are long.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Default cap on `|W_0|` for operations that enumerate the whole group.
pub const DEFAULT_MAX_WEYL_ORDER: u64 = 51_840;
/// Default cap on the number of letters in a walk type.
pub const DEFAULT_MAX_LETTERS: usize = 24;

/// Resource guards shared by everything built on a root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_letters: usize,
    pub max_weyl_order: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_letters: DEFAULT_MAX_LETTERS,
            max_weyl_order: DEFAULT_MAX_WEYL_ORDER,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
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
    fn letter(self) -> char {
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

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    /// Parses labels such as `A2`, `a_3`, `E8`, `G2`.
    pub fn parse(label: &str) -> Result<Self> {
        let trimmed = label.trim();
        let mut chars = trimmed.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnknownType(label.to_string())),
        };
        let digits = chars.as_str().trim_start_matches('_');
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::UnknownType(label.to_string()))?;
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::RankOutOfRange {
                family: family.letter(),
                rank,
            });
        }
        Ok(CartanType { family, rank })
    }

    /// Order of the finite Weyl group.
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Cartan matrix with `a[i][j] = <alpha_i^vee, alpha_j>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        match self.family {
            Family::B => a[n - 1][n - 2] = -2,
            Family::C => a[n - 2][n - 1] = -2,
            Family::F => a[2][1] = -2,
            Family::G => a[0][1] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A coweight in fundamental-coweight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn zero(n: usize) -> Self {
        Coweight(vec![0; n])
    }

    pub fn new(coords: Vec<i64>) -> Self {
        Coweight(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scaled(&self, k: i64) -> Coweight {
        Coweight(self.0.iter().map(|c| c * k).collect())
    }
}

impl Add for &Coweight {
    type Output = Coweight;
    fn add(self, rhs: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Coweight {
    type Output = Coweight;
    fn sub(self, rhs: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Coweight {
    type Output = Coweight;
    fn neg(self) -> Coweight {
        Coweight(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A root together with its coroot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    /// Expansion in the simple roots.
    pub root_coords: Vec<i64>,
    /// Expansion of the coroot in the simple coroots.
    pub coroot_coords: Vec<i64>,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.root_coords.iter().all(|&c| c >= 0)
    }

    pub fn negated(&self) -> Root {
        Root {
            root_coords: self.root_coords.iter().map(|c| -c).collect(),
            coroot_coords: self.coroot_coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn height(&self) -> i64 {
        self.root_coords.iter().sum()
    }
}

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct IntMat {
    n: usize,
    data: Vec<i64>,
}

impl IntMat {
    fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMat { n, data }
    }

    #[inline]
    fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.n + c]
    }

    #[inline]
    fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.n + c] = v;
    }

    fn mul(&self, rhs: &IntMat) -> IntMat {
        let n = self.n;
        let mut data = vec![0; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    data[r * n + c] += a * rhs.get(k, c);
                }
            }
        }
        IntMat { n, data }
    }

    fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    fn transpose(&self) -> IntMat {
        let mut t = IntMat::identity(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.n..(r + 1) * self.n]
    }
}

/// An element of the finite Weyl group.
///
/// Stored as its matrix on coweight coordinates together with its matrix on
/// root coordinates (the columns of the latter are `w(alpha_1), ..., w(alpha_n)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinWeylElem {
    on_coweights: IntMat,
    on_roots: IntMat,
    len: u32,
}

impl FinWeylElem {
    pub fn length(&self) -> u32 {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    /// `w(mu)` for a coweight `mu`.
    pub fn act_coweight(&self, mu: &Coweight) -> Coweight {
        Coweight(self.on_coweights.apply(&mu.0))
    }

    /// `w(alpha)` for a root (or any vector) in simple-root coordinates.
    pub fn act_root_coords(&self, alpha: &[i64]) -> Vec<i64> {
        self.on_roots.apply(alpha)
    }

    /// `w^{-1}(alpha_i)` in simple-root coordinates.
    fn inverse_image_of_simple(&self, i: usize) -> &[i64] {
        // N_{w^{-1}} = M_w^T, so its i-th column is the i-th row of M_w.
        self.on_coweights.row(i)
    }

    /// The images `w(alpha_1), ..., w(alpha_n)`.
    pub fn simple_root_images(&self) -> Vec<Vec<i64>> {
        let t = self.on_roots.transpose();
        (0..t.n).map(|i| t.row(i).to_vec()).collect()
    }
}

fn is_negative_vec(v: &[i64]) -> bool {
    v.iter().any(|&c| c < 0)
}

/// A reduced irreducible root system with its Weyl group machinery.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ctype: CartanType,
    cartan: Vec<Vec<i64>>,
    /// `d_i = (alpha_i^vee, alpha_i^vee) / 2`, scaled so the minimum is 1.
    coroot_norms: Vec<i64>,
    positive_roots: Vec<Root>,
    root_index: HashMap<Vec<i64>, usize>,
    two_rho: Vec<i64>,
    theta: usize,
    weyl_order: u64,
    /// Inverse of the transposed Cartan matrix, for coweight -> coroot coordinates.
    inv_cartan_t: Vec<Vec<Ratio<i64>>>,
    pub(crate) limits: Limits,
    simple: Vec<FinWeylElem>,
    s_theta: Option<FinWeylElem>,
}

/// Builds a root system from a type label such as `"A2"` or `"G2"`.
pub fn build_root_system(type_label: &str) -> Result<RootSystem> {
    RootSystem::new(CartanType::parse(type_label)?)
}

impl RootSystem {
    pub fn new(ctype: CartanType) -> Result<Self> {
        let n = ctype.rank;
        let cartan = ctype.cartan_matrix();
        let coroot_norms = symmetrizer(&cartan);

        // Reflection closure on positive roots, tracking coroots in parallel.
        let unit = |i: usize| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        };
        let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            seen.insert(unit(i), unit(i));
            queue.push_back(unit(i));
        }
        while let Some(r) = queue.pop_front() {
            let c = seen[&r].clone();
            for i in 0..n {
                let pair_ri: i64 = (0..n).map(|j| cartan[i][j] * r[j]).sum();
                let pair_ci: i64 = (0..n).map(|j| c[j] * cartan[j][i]).sum();
                let mut r2 = r.clone();
                r2[i] -= pair_ri;
                let mut c2 = c.clone();
                c2[i] -= pair_ci;
                if r2.iter().all(|&x| x >= 0) && !seen.contains_key(&r2) {
                    seen.insert(r2.clone(), c2);
                    queue.push_back(r2);
                }
            }
        }
        let mut positive_roots: Vec<Root> = seen
            .into_iter()
            .map(|(root_coords, coroot_coords)| Root {
                root_coords,
                coroot_coords,
            })
            .collect();
        positive_roots.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| b.root_coords.cmp(&a.root_coords))
        });
        let mut root_index = HashMap::new();
        for (k, r) in positive_roots.iter().enumerate() {
            root_index.insert(r.root_coords.clone(), k);
        }
        let mut two_rho = vec![0i64; n];
        for r in &positive_roots {
            for j in 0..n {
                two_rho[j] += r.root_coords[j];
            }
        }
        let theta = positive_roots.len() - 1;
        let inv_cartan_t = invert_transpose(&cartan);

        let mut rs = RootSystem {
            ctype,
            cartan,
            coroot_norms,
            positive_roots,
            root_index,
            two_rho,
            theta,
            weyl_order: ctype.weyl_order(),
            inv_cartan_t,
            limits: Limits::default(),
            simple: Vec::new(),
            s_theta: None,
        };
        rs.simple = (0..n).map(|i| rs.build_simple(i)).collect();
        rs.s_theta = Some(rs.reflection(rs.theta()));
        Ok(rs)
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.ctype.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// `2 rho` in simple-root coordinates.
    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    pub fn theta(&self) -> &Root {
        &self.positive_roots[self.theta]
    }

    pub fn weyl_order(&self) -> u64 {
        self.weyl_order
    }

    /// `(alpha_i^vee, alpha_i^vee) / 2` for an invariant form normalised so
    /// that the shortest coroots have squared length 2.
    pub fn coroot_norms(&self) -> &[i64] {
        &self.coroot_norms
    }

    /// Number of positive roots, i.e. `l(w_0)`.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub(crate) fn check_coweight(&self, mu: &Coweight) -> Result<()> {
        if mu.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: mu.rank(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_dominant(&self, mu: &Coweight) -> Result<()> {
        self.check_coweight(mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.to_string()));
        }
        Ok(())
    }

    pub(crate) fn guard_group(&self) -> Result<()> {
        if self.weyl_order > self.limits.max_weyl_order {
            return Err(Error::GroupTooLarge {
                order: self.weyl_order,
                limit: self.limits.max_weyl_order,
            });
        }
        Ok(())
    }

    /// Looks up a (positive or negative) root by its simple-root coordinates.
    pub fn root(&self, coords: &[i64]) -> Option<Root> {
        if let Some(&k) = self.root_index.get(coords) {
            return Some(self.positive_roots[k].clone());
        }
        let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
        self.root_index
            .get(&neg)
            .map(|&k| self.positive_roots[k].negated())
    }

    pub fn simple_root(&self, i: usize) -> &Root {
        &self.positive_roots[self.root_index[&unit_vec(self.rank(), i)]]
    }

    /// The coroot of `alpha` written in fundamental-coweight coordinates.
    pub fn coroot_as_coweight(&self, alpha: &Root) -> Coweight {
        let n = self.rank();
        Coweight(
            (0..n)
                .map(|j| (0..n).map(|i| alpha.coroot_coords[i] * self.cartan[i][j]).sum())
                .collect(),
        )
    }

    /// `alpha_i^vee` (1-based `i`) in fundamental-coweight coordinates, i.e. row `i` of the Cartan matrix.
    pub fn simple_coroot(&self, i: usize) -> Coweight {
        Coweight(self.cartan[i - 1].clone())
    }

    /// `<mu, alpha>`.
    pub fn pair(&self, mu: &Coweight, alpha: &Root) -> i64 {
        pair_coords(mu, &alpha.root_coords)
    }

    /// `<mu, 2 rho>`.
    pub fn pair_two_rho(&self, mu: &Coweight) -> i64 {
        pair_coords(mu, &self.two_rho)
    }

    /// Expresses a coweight in simple-coroot coordinates, if it lies in the coroot lattice.
    pub fn coroot_coords(&self, mu: &Coweight) -> Option<Vec<i64>> {
        let n = self.rank();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = Ratio::from_integer(0i64);
            for j in 0..n {
                acc += self.inv_cartan_t[i][j] * mu.0[j];
            }
            if !acc.is_integer() {
                return None;
            }
            out.push(acc.to_integer());
        }
        Some(out)
    }

    /// `mu <= lambda` in dominance order: `lambda - mu` is a nonnegative
    /// integer combination of simple coroots.
    pub fn dominance_le(&self, mu: &Coweight, lambda: &Coweight) -> bool {
        match self.coroot_coords(&(lambda - mu)) {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    // ---- finite Weyl group -------------------------------------------------

    pub fn fin_identity(&self) -> FinWeylElem {
        let n = self.rank();
        FinWeylElem {
            on_coweights: IntMat::identity(n),
            on_roots: IntMat::identity(n),
            len: 0,
        }
    }

    fn build_simple(&self, i: usize) -> FinWeylElem {
        let n = self.rank();
        let mut m = IntMat::identity(n);
        let mut r = IntMat::identity(n);
        for k in 0..n {
            m.set(k, i, m.get(k, i) - self.cartan[i][k]);
            r.set(i, k, r.get(i, k) - self.cartan[i][k]);
        }
        FinWeylElem {
            on_coweights: m,
            on_roots: r,
            len: 1,
        }
    }

    /// The simple reflection `s_i`, with `i` 1-based.
    pub fn fin_simple(&self, i: usize) -> Result<FinWeylElem> {
        self.check_index(i)?;
        Ok(self.simple[i - 1].clone())
    }

    pub(crate) fn simple_unchecked(&self, i: usize) -> &FinWeylElem {
        &self.simple[i - 1]
    }

    /// The reflection in the highest root.
    pub fn theta_reflection(&self) -> &FinWeylElem {
        self.s_theta.as_ref().expect("initialised in constructor")
    }

    pub(crate) fn check_simple_index(&self, i: usize) -> Result<()> {
        self.check_index(i)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                lo: 1,
                hi: self.rank(),
            });
        }
        Ok(())
    }

    /// The reflection `s_alpha`.
    pub fn reflection(&self, alpha: &Root) -> FinWeylElem {
        let n = self.rank();
        let c = self.coroot_as_coweight(alpha).0;
        let r = &alpha.root_coords;
        let mut m = IntMat::identity(n);
        let mut nm = IntMat::identity(n);
        for k in 0..n {
            for l in 0..n {
                m.set(k, l, m.get(k, l) - c[k] * r[l]);
                nm.set(k, l, nm.get(k, l) - r[k] * c[l]);
            }
        }
        self.fin_from_mats(m, nm)
    }

    fn fin_from_mats(&self, on_coweights: IntMat, on_roots: IntMat) -> FinWeylElem {
        let len = self
            .positive_roots
            .iter()
            .filter(|a| is_negative_vec(&on_roots.apply(&a.root_coords)))
            .count() as u32;
        FinWeylElem {
            on_coweights,
            on_roots,
            len,
        }
    }

    pub fn fin_mul(&self, a: &FinWeylElem, b: &FinWeylElem) -> FinWeylElem {
        if b.is_identity() {
            return a.clone();
        }
        if a.is_identity() {
            return b.clone();
        }
        self.fin_from_mats(
            a.on_coweights.mul(&b.on_coweights),
            a.on_roots.mul(&b.on_roots),
        )
    }

    pub fn fin_inverse(&self, w: &FinWeylElem) -> FinWeylElem {
        FinWeylElem {
            on_coweights: w.on_roots.transpose(),
            on_roots: w.on_coweights.transpose(),
            len: w.len,
        }
    }

    /// Whether `l(s_i w) < l(w)`.
    pub fn is_left_descent(&self, w: &FinWeylElem, i: usize) -> bool {
        is_negative_vec(w.inverse_image_of_simple(i - 1))
    }

    /// Whether `l(w s_i) < l(w)`.
    pub fn is_right_descent(&self, w: &FinWeylElem, i: usize) -> bool {
        let col: Vec<i64> = (0..self.rank()).map(|r| w.on_roots.get(r, i - 1)).collect();
        is_negative_vec(&col)
    }

    /// Multiplies out a word in the simple reflections (1-based letters).
    pub fn fin_from_word(&self, word: &[usize]) -> Result<FinWeylElem> {
        let mut w = self.fin_identity();
        for &i in word {
            self.check_index(i)?;
            w = self.fin_mul(&w, self.simple_unchecked(i));
        }
        Ok(w)
    }

    /// Canonical reduced word: greedy left descents, smallest index first.
    /// This is the lexicographically smallest reduced word of `w`.
    pub fn canonical_word(&self, w: &FinWeylElem) -> Vec<usize> {
        let mut word = Vec::with_capacity(w.len as usize);
        let mut cur = w.clone();
        while !cur.is_identity() {
            let i = (1..=self.rank())
                .find(|&i| self.is_left_descent(&cur, i))
                .expect("nonidentity element has a left descent");
            word.push(i);
            cur = self.fin_mul(self.simple_unchecked(i), &cur);
        }
        word
    }

    /// `s_i(mu) = mu - <mu, alpha_i> alpha_i^vee`.
    pub fn simple_reflect(&self, i: usize, mu: &Coweight) -> Result<Coweight> {
        self.check_index(i)?;
        self.check_coweight(mu)?;
        let k = mu.0[i - 1];
        Ok(Coweight(
            mu.0.iter()
                .zip(&self.cartan[i - 1])
                .map(|(m, a)| m - k * a)
                .collect(),
        ))
    }

    /// Dominant representative of the orbit of `mu` together with the
    /// minimal-length `w` with `w(mu)` dominant.
    pub fn dominant_rep(&self, mu: &Coweight) -> Result<(Coweight, FinWeylElem)> {
        let (dom, word) = self.dominant_rep_word(mu)?;
        let mut w = self.fin_identity();
        for &i in &word {
            w = self.fin_mul(self.simple_unchecked(i), &w);
        }
        Ok((dom, w))
    }

    /// As [`dominant_rep`](Self::dominant_rep), returning the sequence of
    /// simple reflections applied (first applied first).
    pub fn dominant_rep_word(&self, mu: &Coweight) -> Result<(Coweight, Vec<usize>)> {
        self.check_coweight(mu)?;
        let mut cur = mu.clone();
        let mut applied = Vec::new();
        while let Some(i) = cur.0.iter().position(|&c| c < 0) {
            cur = self.simple_reflect(i + 1, &cur)?;
            applied.push(i + 1);
        }
        Ok((cur, applied))
    }

    /// The orbit `W_0 lambda` of a dominant coweight.
    pub fn weyl_orbit(&self, lambda: &Coweight) -> Result<BTreeSet<Coweight>> {
        self.check_dominant(lambda)?;
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.clone());
        queue.push_back(lambda.clone());
        while let Some(mu) = queue.pop_front() {
            for i in 1..=self.rank() {
                if mu.0[i - 1] == 0 {
                    continue;
                }
                let nu = self.simple_reflect(i, &mu)?;
                if seen.insert(nu.clone()) {
                    queue.push_back(nu);
                }
            }
        }
        Ok(seen)
    }

    /// Longest element of the parabolic subgroup generated by `s_j`, `j` in `subset`.
    pub fn longest_in_parabolic(&self, subset: &[usize]) -> FinWeylElem {
        let mut w = self.fin_identity();
        loop {
            let next = subset
                .iter()
                .copied()
                .find(|&j| !self.is_right_descent(&w, j));
            match next {
                Some(j) => w = self.fin_mul(&w, self.simple_unchecked(j)),
                None => return w,
            }
        }
    }

    /// The longest element `w_0` and its canonical reduced word.
    pub fn longest_element(&self) -> (FinWeylElem, Vec<usize>) {
        let all: Vec<usize> = (1..=self.rank()).collect();
        let w0 = self.longest_in_parabolic(&all);
        let word = self.canonical_word(&w0);
        (w0, word)
    }

    /// The indices `j` with `s_j lambda = lambda` for dominant `lambda`.
    pub fn stabilizer_generators(&self, lambda: &Coweight) -> Vec<usize> {
        (1..=self.rank()).filter(|&j| lambda.0[j - 1] == 0).collect()
    }

    /// Longest element `w_{0 lambda}` of the stabilizer of a dominant coweight.
    pub fn stabilizer_longest(&self, lambda: &Coweight) -> Result<FinWeylElem> {
        self.check_dominant(lambda)?;
        Ok(self.longest_in_parabolic(&self.stabilizer_generators(lambda)))
    }

    /// Minimal length representatives of `W_0 / W_{0 lambda}` with their
    /// canonical reduced words, sorted by length and then by word.
    pub fn coset_min_reps(&self, lambda: &Coweight) -> Result<Vec<(FinWeylElem, Vec<usize>)>> {
        let orbit = self.weyl_orbit(lambda)?;
        let mut reps = Vec::with_capacity(orbit.len());
        for mu in &orbit {
            let (_, w) = self.dominant_rep(mu)?;
            let u = self.fin_inverse(&w);
            let word = self.canonical_word(&u);
            reps.push((u, word));
        }
        reps.sort_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| a.1.cmp(&b.1)));
        Ok(reps)
    }

    /// All elements of `W_0`, sorted by length then canonical word.
    pub fn weyl_group_elements(&self) -> Result<Vec<FinWeylElem>> {
        self.guard_group()?;
        let mut seen: BTreeSet<FinWeylElem> = BTreeSet::new();
        let mut queue = VecDeque::new();
        let id = self.fin_identity();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(w) = queue.pop_front() {
            for i in 1..=self.rank() {
                let x = self.fin_mul(&w, self.simple_unchecked(i));
                if !seen.contains(&x) {
                    seen.insert(x.clone());
                    queue.push_back(x);
                }
            }
        }
        let mut elems: Vec<(Vec<usize>, FinWeylElem)> = seen
            .into_iter()
            .map(|w| (self.canonical_word(&w), w))
            .collect();
        elems.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        Ok(elems.into_iter().map(|(_, w)| w).collect())
    }
}

pub(crate) fn pair_coords(mu: &Coweight, alpha: &[i64]) -> i64 {
    mu.0.iter().zip(alpha).map(|(a, b)| a * b).sum()
}

fn unit_vec(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Integers `d_j > 0` with `a[i][j] d_j = a[j][i] d_i`, minimum 1.
fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    d[0] = Some(Ratio::from_integer(1));
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                if let (Some(di), None) = (d[i], d[j]) {
                    d[j] = Some(di * a[j][i] / a[i][j]);
                    changed = true;
                }
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let lcm_den = d.iter().fold(1i64, |acc, x| lcm(acc, *x.denom()));
    let ints: Vec<i64> = d.iter().map(|x| (x * lcm_den).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| gcd(acc, x));
    ints.into_iter().map(|x| x / g).collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

fn invert_transpose(a: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = a.len();
    // Gauss-Jordan on [A^T | I].
    let mut m: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|r| {
            let mut row: Vec<Ratio<i64>> = (0..n).map(|c| Ratio::from_integer(a[c][r])).collect();
            row.extend((0..n).map(|c| Ratio::from_integer(i64::from(c == r))));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| m[r][col] != Ratio::from_integer(0))
            .expect("Cartan matrix is invertible");
        m.swap(col, piv);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col {
                let f = m[r][col];
                if f != Ratio::from_integer(0) {
                    for c in 0..2 * n {
                        let sub = f * m[col][c];
                        m[r][c] -= sub;
                    }
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    #[test]
    fn a2_basic_data() {
        let rs = build_root_system("A2").unwrap();
        assert_eq!(rs.rank(), 2);
        assert_eq!(rs.num_positive_roots(), 3);
        assert_eq!(rs.weyl_order(), 6);
        assert_eq!(rs.theta().root_coords, vec![1, 1]);
        assert_eq!(rs.two_rho(), &[2, 2]);
    }

    #[test]
    fn a1_basic_data() {
        let rs = build_root_system("A1").unwrap();
        assert_eq!(rs.num_positive_roots(), 1);
        assert_eq!(rs.two_rho(), &[1]);
        assert_eq!(rs.weyl_order(), 2);
    }

    #[test]
    fn g2_highest_root_bourbaki() {
        let rs = build_root_system("G2").unwrap();
        assert_eq!(rs.num_positive_roots(), 6);
        assert_eq!(rs.weyl_order(), 12);
        // alpha_1 short, alpha_2 long.
        assert_eq!(rs.theta().root_coords, vec![3, 2]);
        assert_eq!(rs.coroot_norms(), &[3, 1]);
        assert_eq!(rs.weyl_group_elements().unwrap().len(), 12);
    }

    #[test]
    fn bad_labels() {
        assert!(matches!(build_root_system("Q3"), Err(Error::UnknownType(_))));
        assert!(matches!(build_root_system("A"), Err(Error::UnknownType(_))));
        assert!(matches!(
            build_root_system("D3"),
            Err(Error::RankOutOfRange { .. })
        ));
        assert!(matches!(
            build_root_system("E9"),
            Err(Error::RankOutOfRange { .. })
        ));
        assert!(build_root_system("b_3").is_ok());
    }

    #[test]
    fn root_counts_and_theta_all_types() {
        let cases = [
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("D5", 20),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
        ];
        for (label, count) in cases {
            let rs = build_root_system(label).unwrap();
            assert_eq!(rs.num_positive_roots(), count, "{label}");
            let theta = rs.theta();
            for a in rs.positive_roots() {
                for j in 0..rs.rank() {
                    assert!(theta.root_coords[j] >= a.root_coords[j], "{label}");
                }
            }
            // <alpha_i^vee, rho> = 1.
            for i in 0..rs.rank() {
                let s: i64 = (0..rs.rank()).map(|j| rs.cartan()[i][j] * rs.two_rho()[j]).sum();
                assert_eq!(s, 2, "{label}");
            }
        }
        let e8 = build_root_system("E8").unwrap();
        assert_eq!(
            e8.theta().root_coords,
            vec![2, 3, 4, 6, 5, 4, 3, 2]
        );
        let f4 = build_root_system("F4").unwrap();
        assert_eq!(f4.theta().root_coords, vec![2, 3, 4, 2]);
        assert_eq!(build_root_system("B2").unwrap().theta().root_coords, vec![1, 2]);
        assert_eq!(build_root_system("C2").unwrap().theta().root_coords, vec![2, 1]);
    }

    #[test]
    fn coroot_consistency() {
        // alpha^vee = 2 alpha / (alpha, alpha): with alpha_j^vee = d_j alpha_j as
        // vectors, the coroot expansion is proportional to (c_j d_j).
        for label in ["A3", "B3", "C3", "D4", "F4", "G2"] {
            let rs = build_root_system(label).unwrap();
            for a in rs.positive_roots() {
                let scaled: Vec<i64> = (0..rs.rank())
                    .map(|j| a.coroot_coords[j] * rs.coroot_norms()[j])
                    .collect();
                // scaled must be a positive multiple of root_coords
                let k = a
                    .root_coords
                    .iter()
                    .zip(&scaled)
                    .find(|(r, _)| **r != 0)
                    .map(|(r, s)| Ratio::new(*s, *r))
                    .unwrap();
                for j in 0..rs.rank() {
                    assert_eq!(Ratio::from_integer(scaled[j]), k * a.root_coords[j], "{label}");
                }
            }
        }
    }

    #[test]
    fn pair_examples() {
        let rs = build_root_system("A2").unwrap();
        let theta = rs.theta().clone();
        assert_eq!(rs.pair(&cw(&[1, 1]), &theta), 2);
        assert_eq!(rs.pair(&cw(&[1, 0]), rs.simple_root(1)), 0);
        assert_eq!(rs.pair_two_rho(&cw(&[1, 1])), 4);
    }

    #[test]
    fn simple_reflect_examples() {
        let rs = build_root_system("A2").unwrap();
        assert_eq!(rs.simple_reflect(1, &cw(&[1, 0])).unwrap(), cw(&[-1, 1]));
        assert_eq!(rs.simple_reflect(1, &cw(&[0, 1])).unwrap(), cw(&[0, 1]));
        let a1 = build_root_system("A1").unwrap();
        assert_eq!(a1.simple_reflect(1, &cw(&[1])).unwrap(), cw(&[-1]));
        assert!(matches!(
            rs.simple_reflect(3, &cw(&[1, 0])),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn dominant_rep_examples() {
        let rs = build_root_system("A2").unwrap();
        let (d, w) = rs.dominant_rep(&cw(&[-1, 1])).unwrap();
        assert_eq!(d, cw(&[1, 0]));
        assert_eq!(w, rs.fin_simple(1).unwrap());
        let (d, w) = rs.dominant_rep(&cw(&[1, 1])).unwrap();
        assert_eq!(d, cw(&[1, 1]));
        assert!(w.is_identity());
        let (d, w) = rs.dominant_rep(&cw(&[0, -3])).unwrap();
        assert_eq!(d, cw(&[3, 0]));
        assert_eq!(w.length(), 2);
        assert_eq!(w.act_coweight(&cw(&[0, -3])), cw(&[3, 0]));
    }

    #[test]
    fn orbit_examples() {
        let rs = build_root_system("A2").unwrap();
        assert_eq!(rs.weyl_orbit(&cw(&[1, 1])).unwrap().len(), 6);
        assert_eq!(rs.weyl_orbit(&cw(&[1, 0])).unwrap().len(), 3);
        assert_eq!(rs.weyl_orbit(&cw(&[0, 0])).unwrap().len(), 1);
        assert!(matches!(
            rs.weyl_orbit(&cw(&[-1, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn coset_rep_examples() {
        let rs = build_root_system("A2").unwrap();
        assert_eq!(rs.coset_min_reps(&cw(&[1, 1])).unwrap().len(), 6);
        let words: Vec<Vec<usize>> = rs
            .coset_min_reps(&cw(&[1, 0]))
            .unwrap()
            .into_iter()
            .map(|(_, w)| w)
            .collect();
        assert_eq!(words, vec![vec![], vec![1], vec![2, 1]]);
        let zero = rs.coset_min_reps(&cw(&[0, 0])).unwrap();
        assert_eq!(zero.len(), 1);
        assert!(zero[0].0.is_identity());
    }

    #[test]
    fn longest_element_examples() {
        let a1 = build_root_system("A1").unwrap();
        assert_eq!(a1.longest_element().1, vec![1]);
        let a2 = build_root_system("A2").unwrap();
        let (w0, word) = a2.longest_element();
        assert_eq!(word, vec![1, 2, 1]);
        assert_eq!(w0.length(), 3);
        let g2 = build_root_system("G2").unwrap();
        assert_eq!(g2.longest_element().0.length(), 6);
    }

    #[test]
    fn simple_reflections_permute_other_positive_roots() {
        for label in ["A3", "B3", "C3", "D4", "F4", "G2", "E6"] {
            let rs = build_root_system(label).unwrap();
            for i in 1..=rs.rank() {
                let s = rs.fin_simple(i).unwrap();
                let mut images = BTreeSet::new();
                for a in rs.positive_roots() {
                    let img = s.act_root_coords(&a.root_coords);
                    let r = rs.root(&img).expect("image is a root");
                    if a.root_coords == unit_vec(rs.rank(), i - 1) {
                        assert!(!r.is_positive());
                    } else {
                        assert!(r.is_positive());
                        images.insert(img);
                    }
                }
                assert_eq!(images.len(), rs.num_positive_roots() - 1);
            }
        }
    }

    #[test]
    fn group_orders_by_enumeration() {
        for label in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"] {
            let rs = build_root_system(label).unwrap();
            assert_eq!(
                rs.weyl_group_elements().unwrap().len() as u64,
                rs.weyl_order(),
                "{label}"
            );
        }
        let e7 = build_root_system("E7").unwrap();
        assert!(matches!(
            e7.weyl_group_elements(),
            Err(Error::GroupTooLarge { .. })
        ));
    }

    #[test]
    fn words_are_reduced() {
        for label in ["A3", "B3", "G2"] {
            let rs = build_root_system(label).unwrap();
            for w in rs.weyl_group_elements().unwrap() {
                let word = rs.canonical_word(&w);
                assert_eq!(word.len() as u32, w.length());
                assert_eq!(rs.fin_from_word(&word).unwrap(), w);
            }
            let (w0, word) = rs.longest_element();
            assert_eq!(word.len(), rs.num_positive_roots());
            assert_eq!(rs.fin_from_word(&word).unwrap(), w0);
        }
    }

    #[test]
    fn orbit_stabilizer() {
        for label in ["A2", "B2", "C2", "G2", "A3"] {
            let rs = build_root_system(label).unwrap();
            let elems = rs.weyl_group_elements().unwrap();
            let n = rs.rank();
            let mut coords = vec![0i64; n];
            loop {
                let lambda = Coweight(coords.clone());
                let orbit = rs.weyl_orbit(&lambda).unwrap();
                let stab = elems.iter().filter(|w| w.act_coweight(&lambda) == lambda).count();
                assert_eq!(orbit.len() * stab, elems.len());
                let reps = rs.coset_min_reps(&lambda).unwrap();
                assert_eq!(reps.len(), orbit.len());
                for (u, word) in &reps {
                    assert_eq!(word.len() as u32, u.length());
                    for j in rs.stabilizer_generators(&lambda) {
                        assert!(!rs.is_right_descent(u, j));
                    }
                }
                // next coordinate vector in [0,3]^n
                let mut k = 0;
                loop {
                    if k == n {
                        break;
                    }
                    coords[k] += 1;
                    if coords[k] <= 3 {
                        break;
                    }
                    coords[k] = 0;
                    k += 1;
                }
                if k == n {
                    break;
                }
            }
        }
    }

    #[test]
    fn coroot_coords_roundtrip() {
        let rs = build_root_system("A2").unwrap();
        assert_eq!(rs.coroot_coords(&cw(&[1, 1])), Some(vec![1, 1]));
        assert_eq!(rs.coroot_coords(&cw(&[1, 0])), None);
        assert!(rs.dominance_le(&cw(&[0, 0]), &cw(&[1, 1])));
        assert!(!rs.dominance_le(&cw(&[3, 0]), &cw(&[1, 1])));
    }

    #[test]
    fn inverse_and_descents() {
        let rs = build_root_system("B3").unwrap();
        for w in rs.weyl_group_elements().unwrap() {
            let wi = rs.fin_inverse(&w);
            assert!(rs.fin_mul(&w, &wi).is_identity());
            assert_eq!(wi.length(), w.length());
            for i in 1..=3 {
                let sw = rs.fin_mul(rs.simple_unchecked(i), &w);
                assert_eq!(rs.is_left_descent(&w, i), sw.length() < w.length());
                let ws = rs.fin_mul(&w, rs.simple_unchecked(i));
                assert_eq!(rs.is_right_descent(&w, i), ws.length() < w.length());
            }
        }
    }
}
