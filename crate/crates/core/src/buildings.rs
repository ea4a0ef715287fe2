//! Counting galleries in regular affine buildings through their retractions.
//!
//! A positively folded walk lifts to `q_i` galleries at each positive
//! crossing of an `i`-panel, `q_i - 1` at each fold, and exactly one at each
//! negative crossing. Summing over `P(lambda)_mu` counts the vertices `x`
//! with `rho_1(x)` in `W_0 lambda` and `rho_{-infinity}(x) = mu`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rootsys::{Coweight, RootSystem};
use crate::walks::{StepKind, Walk};

/// Thickness parameters `q_0, ..., q_n`, one per panel cotype.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thickness {
    pub q: Vec<u64>,
}

impl Thickness {
    pub fn uniform(rank: usize, q: u64) -> Self {
        Thickness { q: vec![q; rank + 1] }
    }

    pub fn new(q: Vec<u64>) -> Result<Self> {
        if q.contains(&0) {
            return Err(Error::InvalidWalk("thickness parameters must be at least 1".into()));
        }
        Ok(Thickness { q })
    }
}

impl RootSystem {
    fn check_thickness(&self, th: &Thickness) -> Result<()> {
        if th.q.len() != self.rank() + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.rank() + 1,
                got: th.q.len(),
            });
        }
        Ok(())
    }

    /// Number of labellings of `p`, i.e. of galleries retracting onto it.
    pub fn labelled_count(&self, p: &Walk, th: &Thickness) -> Result<u128> {
        self.check_thickness(th)?;
        let mut n: u128 = 1;
        for s in p.steps() {
            let qi = u128::from(th.q[s.letter]);
            let factor = match s.kind {
                StepKind::PosCross => qi,
                StepKind::PosFold => qi - 1,
                StepKind::NegCross => 1,
            };
            n = n
                .checked_mul(factor)
                .ok_or_else(|| Error::InvalidWalk("labelled count overflows u128".into()))?;
        }
        Ok(n)
    }

    /// `|{x : rho_1(x) in W_0 lambda, rho_{-inf}(x) = mu}|` for a building of thickness `th`.
    pub fn retraction_fiber_count(&self, lambda: &Coweight, mu: &Coweight, th: &Thickness) -> Result<u128> {
        self.check_thickness(th)?;
        self.check_coweight(mu)?;
        let map = self.enumerate_p_lambda(lambda)?;
        let mut total: u128 = 0;
        if let Some(walks) = map.get(mu) {
            for p in walks {
                total += self.labelled_count(p, th)?;
            }
        }
        Ok(total)
    }

    /// For uniform thickness the fiber count is `sum_p q^{e+(p)} (q-1)^{f(p)}`;
    /// returns the multiplicity of each exponent pair `(e+, f)`.
    pub fn fiber_polynomial(&self, lambda: &Coweight, mu: &Coweight) -> Result<BTreeMap<(u32, u32), u64>> {
        self.check_coweight(mu)?;
        let map = self.enumerate_p_lambda(lambda)?;
        let mut out = BTreeMap::new();
        for p in map.get(mu).into_iter().flatten() {
            *out.entry((p.stats().pos_cross, p.stats().folds)).or_insert(0) += 1;
        }
        Ok(out)
    }

    /// Checks `count >= (q-1)^{<lambda+mu, rho>}` at uniform thickness `q`,
    /// and that the maximal-dimension walk alone already reaches the bound.
    pub fn check_lower_bound(&self, lambda: &Coweight, mu: &Coweight, q: u64) -> Result<bool> {
        if !self.contains(lambda, mu)? {
            return Err(Error::NotInSaturatedSet {
                lambda: lambda.to_string(),
                mu: mu.to_string(),
            });
        }
        let th = Thickness::uniform(self.rank(), q);
        let exp = self.rho_pairing(lambda, mu) as u32;
        let bound = u128::from(q - 1).pow(exp);
        let count = self.retraction_fiber_count(lambda, mu, &th)?;
        let p = self.build_path(lambda, mu, &self.default_w0_word())?;
        let single = self.labelled_count(&p, &th)?;
        Ok(count >= bound && single >= bound && count >= single)
    }
}
