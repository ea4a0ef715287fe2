//! The extended affine Weyl group `P ⋊ W_0`.
//!
//! An element `t_mu w` is identified with the alcove `mu + w(c_0)`, where
//! `c_0` is the fundamental alcove. Affine roots `alpha + k delta` are stored
//! as a gradient (simple-root coordinates) plus a level; the hyperplane
//! `H_{alpha + k delta}` is `{x : <x, alpha> = -k}`.
//!
//! The positive side of a hyperplane is the side containing a translate of
//! the dominant chamber. The affine simple root is `alpha_0 = -theta + delta`
//! and `s_0 = t_{theta^vee} s_theta`.

use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::{pair_coords, Coweight, FinWeylElem, Root, RootSystem};

/// The element `t_trans * fin`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffElem {
    pub trans: Coweight,
    pub fin: FinWeylElem,
}

/// A signed affine root `grad + level * delta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedAffRoot {
    pub grad: Vec<i64>,
    pub level: i64,
}

/// An affine hyperplane `H_{grad + level delta}` with `grad` a positive root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffRoot {
    pub grad: Root,
    pub level: i64,
}

impl fmt::Display for AffRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H[")?;
        let mut first = true;
        for (j, &c) in self.grad.root_coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "a{}", j + 1)?;
        }
        match self.level {
            0 => {}
            k if k > 0 => write!(f, "+{k}d")?,
            k => write!(f, "{k}d")?,
        }
        write!(f, "]")
    }
}

/// Direction of a step across a wall.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Crossing {
    Positive,
    Negative,
}

/// A word `s_{i_1} ... s_{i_l} gamma` with `gamma` of length zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWord {
    pub letters: Vec<usize>,
    pub omega: AffElem,
}

impl RootSystem {
    pub fn aff_identity(&self) -> AffElem {
        AffElem {
            trans: Coweight::zero(self.rank()),
            fin: self.fin_identity(),
        }
    }

    pub fn aff_translation(&self, mu: &Coweight) -> AffElem {
        AffElem {
            trans: mu.clone(),
            fin: self.fin_identity(),
        }
    }

    pub fn aff_from_parts(&self, mu: &Coweight, w: &FinWeylElem) -> AffElem {
        AffElem {
            trans: mu.clone(),
            fin: w.clone(),
        }
    }

    /// `(t_mu u)(t_nu v) = t_{mu + u(nu)} uv`.
    pub fn aff_mul(&self, a: &AffElem, b: &AffElem) -> AffElem {
        AffElem {
            trans: &a.trans + &a.fin.act_coweight(&b.trans),
            fin: self.fin_mul(&a.fin, &b.fin),
        }
    }

    pub fn aff_inverse(&self, a: &AffElem) -> AffElem {
        let winv = self.fin_inverse(&a.fin);
        AffElem {
            trans: -&winv.act_coweight(&a.trans),
            fin: winv,
        }
    }

    /// The affine simple reflection `s_i`, `0 <= i <= n`.
    pub fn aff_simple(&self, i: usize) -> Result<AffElem> {
        if i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                lo: 0,
                hi: self.rank(),
            });
        }
        Ok(self.aff_simple_unchecked(i))
    }

    pub(crate) fn aff_simple_unchecked(&self, i: usize) -> AffElem {
        if i == 0 {
            AffElem {
                trans: self.coroot_as_coweight(self.theta()),
                fin: self.theta_reflection().clone(),
            }
        } else {
            AffElem {
                trans: Coweight::zero(self.rank()),
                fin: self.simple_unchecked(i).clone(),
            }
        }
    }

    /// `x * s_i` without materialising `s_i` for finite letters.
    pub(crate) fn aff_mul_simple(&self, x: &AffElem, i: usize) -> AffElem {
        if i == 0 {
            self.aff_mul(x, &self.aff_simple_unchecked(0))
        } else {
            AffElem {
                trans: x.trans.clone(),
                fin: self.fin_mul(&x.fin, self.simple_unchecked(i)),
            }
        }
    }

    /// The affine simple root `alpha_i` (with `alpha_0 = -theta + delta`).
    pub fn affine_simple_root(&self, i: usize) -> SignedAffRoot {
        if i == 0 {
            SignedAffRoot {
                grad: self.theta().root_coords.iter().map(|c| -c).collect(),
                level: 1,
            }
        } else {
            let mut grad = vec![0; self.rank()];
            grad[i - 1] = 1;
            SignedAffRoot { grad, level: 0 }
        }
    }

    /// `(t_mu w)(alpha + k delta) = w(alpha) + (k - <mu, w(alpha)>) delta`.
    pub fn aff_act_on_affroot(&self, x: &AffElem, beta: &SignedAffRoot) -> SignedAffRoot {
        let grad = x.fin.act_root_coords(&beta.grad);
        let level = beta.level - pair_coords(&x.trans, &grad);
        SignedAffRoot { grad, level }
    }

    /// Normalises a signed affine root to its hyperplane, reporting whether
    /// the gradient had to be negated.
    pub fn normalize_affroot(&self, beta: &SignedAffRoot) -> (AffRoot, bool) {
        let neg = beta.grad.iter().any(|&c| c < 0);
        let (grad, level) = if neg {
            (beta.grad.iter().map(|c| -c).collect::<Vec<_>>(), -beta.level)
        } else {
            (beta.grad.clone(), beta.level)
        };
        let grad = self.root(&grad).expect("gradient of an affine root is a root");
        (AffRoot { grad, level }, neg)
    }

    /// Length: the number of hyperplanes separating `c_0` from `x c_0`.
    pub fn aff_length(&self, x: &AffElem) -> u32 {
        let winv = self.fin_inverse(&x.fin);
        self.positive_roots()
            .iter()
            .map(|a| {
                let m = self.pair(&x.trans, a);
                let flip = i64::from(winv.act_root_coords(&a.root_coords).iter().any(|&c| c < 0));
                (m - flip).unsigned_abs() as u32
            })
            .sum()
    }

    /// Signed length: separating hyperplanes with `x c_0` on the positive
    /// side, minus those with `x c_0` on the negative side.
    pub fn signed_length(&self, x: &AffElem) -> i64 {
        let winv = self.fin_inverse(&x.fin);
        self.positive_roots()
            .iter()
            .map(|a| {
                let m = self.pair(&x.trans, a);
                let flip = i64::from(winv.act_root_coords(&a.root_coords).iter().any(|&c| c < 0));
                m - flip
            })
            .sum()
    }

    /// The wall between alcoves `x` and `x s_i`, and the direction of the
    /// step `x -> x s_i` across it.
    pub fn classify_step(&self, x: &AffElem, i: usize) -> (AffRoot, Crossing) {
        let beta = self.aff_act_on_affroot(x, &self.affine_simple_root(i));
        let (wall, negated) = self.normalize_affroot(&beta);
        let sign = if negated {
            Crossing::Positive
        } else {
            Crossing::Negative
        };
        (wall, sign)
    }

    /// Canonical word: repeatedly strip the smallest left descent in `0..=n`.
    pub fn reduced_word(&self, x: &AffElem) -> AffineWord {
        let mut cur = x.clone();
        let mut len = self.aff_length(&cur);
        let mut letters = Vec::with_capacity(len as usize);
        while len > 0 {
            let mut found = false;
            for i in 0..=self.rank() {
                let y = self.aff_mul(&self.aff_simple_unchecked(i), &cur);
                let ly = self.aff_length(&y);
                if ly < len {
                    letters.push(i);
                    cur = y;
                    len = ly;
                    found = true;
                    break;
                }
            }
            assert!(found, "element of positive length has a left descent");
        }
        AffineWord {
            letters,
            omega: cur,
        }
    }

    /// Multiplies out `s_{i_1} ... s_{i_l} omega`.
    pub fn aff_from_word(&self, letters: &[usize], omega: &AffElem) -> Result<AffElem> {
        let mut x = self.aff_identity();
        for &i in letters {
            x = self.aff_mul(&x, &self.aff_simple(i)?);
        }
        Ok(self.aff_mul(&x, omega))
    }

    /// The minimal length element `m_lambda = t_lambda w_{0 lambda} w_0` of
    /// the double coset `W_0 t_lambda W_0`, with its canonical word.
    pub fn min_double_coset_rep(&self, lambda: &Coweight) -> Result<(AffElem, AffineWord)> {
        self.check_dominant(lambda)?;
        let (w0, _) = self.longest_element();
        let w0l = self.stabilizer_longest(lambda)?;
        let m = AffElem {
            trans: lambda.clone(),
            fin: self.fin_mul(&w0l, &w0),
        };
        let word = self.reduced_word(&m);
        Ok((m, word))
    }

    /// Every element of length at most `max_length`, sorted.
    pub fn aff_elements_up_to_length(&self, max_length: u32) -> Vec<AffElem> {
        let mut seen: std::collections::BTreeSet<AffElem> =
            self.omega_elements().into_iter().map(|(_, g)| g).collect();
        let mut frontier: Vec<AffElem> = seen.iter().cloned().collect();
        for _ in 0..max_length {
            let mut next = Vec::new();
            for x in &frontier {
                let lx = self.aff_length(x);
                for i in 0..=self.rank() {
                    let y = self.aff_mul_simple(x, i);
                    if self.aff_length(&y) > lx && seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        seen.into_iter().collect()
    }

    /// If `gamma` has length zero, the index `j` with `gamma(alpha_0) = alpha_j`.
    pub fn omega_index(&self, gamma: &AffElem) -> Option<usize> {
        if self.aff_length(gamma) != 0 {
            return None;
        }
        let img = self.aff_act_on_affroot(gamma, &self.affine_simple_root(0));
        (0..=self.rank()).find(|&j| self.affine_simple_root(j) == img)
    }

    /// The length-zero elements, indexed by `gamma(alpha_0) = alpha_j`.
    /// Index 0 is the identity; the others are `m_{omega_j}` for minuscule `omega_j`.
    pub fn omega_elements(&self) -> Vec<(usize, AffElem)> {
        let mut out = vec![(0, self.aff_identity())];
        for j in 1..=self.rank() {
            if self.theta().root_coords[j - 1] == 1 {
                let mut w = vec![0; self.rank()];
                w[j - 1] = 1;
                let (m, _) = self
                    .min_double_coset_rep(&Coweight(w))
                    .expect("fundamental coweight is dominant");
                if let Some(k) = self.omega_index(&m) {
                    out.push((k, m));
                }
            }
        }
        out.sort_by_key(|(k, _)| *k);
        out
    }

    /// The length-zero element with `gamma(alpha_0) = alpha_j`.
    pub fn omega_element(&self, j: usize) -> Result<AffElem> {
        self.omega_elements()
            .into_iter()
            .find(|(k, _)| *k == j)
            .map(|(_, g)| g)
            .ok_or_else(|| Error::InvalidWalk(format!("no length-zero element sends alpha_0 to alpha_{j}")))
    }

    /// Text label of a length-zero element: `e` or `g<j>`.
    pub fn omega_label(&self, gamma: &AffElem) -> String {
        match self.omega_index(gamma) {
            Some(0) => "e".to_string(),
            Some(j) => format!("g{j}"),
            None => "?".to_string(),
        }
    }

    /// Parses `e` or `g<j>`.
    pub fn parse_omega_label(&self, label: &str) -> Result<AffElem> {
        let label = label.trim();
        if label == "e" || label.is_empty() {
            return Ok(self.aff_identity());
        }
        let j: usize = label
            .strip_prefix('g')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::InvalidWalk(format!("bad length-zero label {label:?}")))?;
        self.omega_element(j)
    }
}
