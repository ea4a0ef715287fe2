//! The affine Hecke algebra in the `T`-basis, with parameter `v = q^{1/2}`.
//!
//! Relations: `T_u T_v = T_{uv}` when lengths add, and
//! `T_w T_s = T_{ws} + (v - v^{-1}) T_w` when `l(ws) < l(w)`.

use std::collections::BTreeMap;

use crate::affine::{AffElem, Crossing};
use crate::error::Result;
use crate::laurent::LaurentV;
use crate::rootsys::{Coweight, RootSystem};
use crate::walks::WalkType;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HeckeElem {
    terms: BTreeMap<AffElem, LaurentV>,
}

impl HeckeElem {
    pub fn zero() -> Self {
        HeckeElem::default()
    }

    /// `c T_w`.
    pub fn basis(w: AffElem, c: LaurentV) -> Self {
        let mut out = HeckeElem::zero();
        out.add_term(w, &c);
        out
    }

    pub fn add_term(&mut self, w: AffElem, c: &LaurentV) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &HeckeElem) -> HeckeElem {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &LaurentV) -> HeckeElem {
        let mut out = HeckeElem::zero();
        for (w, d) in &self.terms {
            out.add_term(w.clone(), &(c * d));
        }
        out
    }

    pub fn coeff(&self, w: &AffElem) -> LaurentV {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffElem, &LaurentV)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Outcome of checking `T_w = sum_p (v - v^{-1})^{f(p)} x_{end(p)}` over many `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeReport {
    pub checked: usize,
    pub failures: Vec<AffElem>,
}

impl HeckeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl RootSystem {
    pub fn hecke_one(&self) -> HeckeElem {
        HeckeElem::basis(self.aff_identity(), LaurentV::one())
    }

    /// `T_w`.
    pub fn hecke_t(&self, w: &AffElem) -> HeckeElem {
        HeckeElem::basis(w.clone(), LaurentV::one())
    }

    /// `h T_{s_i}`.
    pub fn hecke_mul_simple(&self, h: &HeckeElem, i: usize) -> HeckeElem {
        let mut out = HeckeElem::zero();
        for (x, c) in h.terms() {
            let xs = self.aff_mul_simple(x, i);
            if self.aff_length(&xs) > self.aff_length(x) {
                out.add_term(xs, c);
            } else {
                out.add_term(xs, c);
                out.add_term(x.clone(), &(c * &LaurentV::v_minus_vinv()));
            }
        }
        out
    }

    /// `h T_{s_i}^{-1} = h T_{s_i} - (v - v^{-1}) h`.
    pub fn hecke_mul_simple_inv(&self, h: &HeckeElem, i: usize) -> HeckeElem {
        let a = self.hecke_mul_simple(h, i);
        a.add(&h.scale(&-&LaurentV::v_minus_vinv()))
    }

    /// `h T_gamma` for `gamma` of length zero.
    pub fn hecke_mul_omega(&self, h: &HeckeElem, gamma: &AffElem) -> HeckeElem {
        let mut out = HeckeElem::zero();
        for (x, c) in h.terms() {
            out.add_term(self.aff_mul(x, gamma), c);
        }
        out
    }

    /// `h T_w`, expanding `T_w` along the canonical word of `w`.
    pub fn hecke_mul_basis(&self, h: &HeckeElem, w: &AffElem) -> HeckeElem {
        let word = self.reduced_word(w);
        let mut out = h.clone();
        for &i in &word.letters {
            out = self.hecke_mul_simple(&out, i);
        }
        self.hecke_mul_omega(&out, &word.omega)
    }

    pub fn hecke_mul(&self, a: &HeckeElem, b: &HeckeElem) -> HeckeElem {
        let mut out = HeckeElem::zero();
        for (w, c) in b.terms() {
            out = out.add(&self.hecke_mul_basis(a, w).scale(c));
        }
        out
    }

    /// `x_v` along an arbitrary expression `s_{i_1} ... s_{i_l} gamma` of `v`:
    /// `T_{s_{i_k}}^{+1}` for positive crossings and `^{-1}` for negative ones.
    pub fn x_elem_word(&self, letters: &[usize], omega: &AffElem) -> HeckeElem {
        let mut h = self.hecke_one();
        let mut cur = self.aff_identity();
        for &i in letters {
            let (_, sign) = self.classify_step(&cur, i);
            h = match sign {
                Crossing::Positive => self.hecke_mul_simple(&h, i),
                Crossing::Negative => self.hecke_mul_simple_inv(&h, i),
            };
            cur = self.aff_mul_simple(&cur, i);
        }
        self.hecke_mul_omega(&h, omega)
    }

    /// `x_v` using the canonical word of `v`.
    pub fn x_elem(&self, v: &AffElem) -> HeckeElem {
        let word = self.reduced_word(v);
        self.x_elem_word(&word.letters, &word.omega)
    }

    /// `x^mu = x_{t_mu}`.
    pub fn x_translation(&self, mu: &Coweight) -> HeckeElem {
        self.x_elem(&self.aff_translation(mu))
    }

    /// The right side of the walk expansion of `T_w`.
    pub fn walk_expansion(&self, w: &AffElem) -> Result<HeckeElem> {
        let word = self.reduced_word(w);
        let wtype = WalkType {
            letters: word.letters,
            omega: word.omega,
        };
        let mut out = HeckeElem::zero();
        for p in self.enumerate(&wtype)? {
            let c = LaurentV::v_minus_vinv().pow(p.stats().folds);
            out = out.add(&self.x_elem(p.end()).scale(&c));
        }
        Ok(out)
    }

    /// Whether `T_w` equals its walk expansion.
    pub fn verify_walk_expansion(&self, w: &AffElem) -> Result<bool> {
        Ok(self.walk_expansion(w)? == self.hecke_t(w))
    }

    /// Checks the walk expansion for every element of length at most `max_length`.
    pub fn verify_walk_expansion_upto(&self, max_length: u32) -> Result<HeckeReport> {
        let elems = self.aff_elements_up_to_length(max_length);
        let mut failures = Vec::new();
        for w in &elems {
            if !self.verify_walk_expansion(w)? {
                failures.push(w.clone());
            }
        }
        Ok(HeckeReport {
            checked: elems.len(),
            failures,
        })
    }

    /// `1_0 = sum_{w in W_0} v^{l(w)} T_w`.
    pub fn one_zero(&self) -> Result<HeckeElem> {
        let mut out = HeckeElem::zero();
        for w in self.weyl_group_elements()? {
            let len = w.length() as i32;
            out.add_term(
                self.aff_from_parts(&Coweight::zero(self.rank()), &w),
                &LaurentV::monomial(1, len),
            );
        }
        Ok(out)
    }

    /// `T_w 1_0 = 1_0 T_w = v^{l(w)} 1_0` for every `w` in `W_0`.
    pub fn check_idempotent_laws(&self) -> Result<bool> {
        let one = self.one_zero()?;
        for w in self.weyl_group_elements()? {
            let tw = self.hecke_t(&self.aff_from_parts(&Coweight::zero(self.rank()), &w));
            let expected = one.scale(&LaurentV::monomial(1, w.length() as i32));
            if self.hecke_mul(&tw, &one) != expected || self.hecke_mul(&one, &tw) != expected {
                return Ok(false);
            }
        }
        // 1_0 is idempotent up to the Poincare polynomial W_0(q).
        let poincare = self
            .weyl_group_elements()?
            .iter()
            .fold(LaurentV::zero(), |acc, w| &acc + &LaurentV::monomial(1, 2 * w.length() as i32));
        Ok(self.hecke_mul(&one, &one) == one.scale(&poincare))
    }

    /// `x^lambda 1_0 = v^{l(t_lambda) - l(m_lambda)} T_{m_lambda} 1_0` for dominant `lambda`.
    pub fn check_translation_law(&self, lambda: &Coweight) -> Result<bool> {
        let (m, _) = self.min_double_coset_rep(lambda)?;
        let one = self.one_zero()?;
        let lhs = self.hecke_mul(&self.x_translation(lambda), &one);
        let shift = self.aff_length(&self.aff_translation(lambda)) as i32 - self.aff_length(&m) as i32;
        let rhs = self
            .hecke_mul(&self.hecke_t(&m), &one)
            .scale(&LaurentV::monomial(1, shift));
        Ok(lhs == rhs)
    }
}
