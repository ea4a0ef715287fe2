//! Saturated sets `Pi_lambda`, string parameters, and the construction of a
//! walk of maximal dimension `<lambda + mu, rho>` ending at any `mu` in `Pi_lambda`.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::rootsys::{Coweight, RootSystem};
use crate::walks::Walk;

/// The sequence `mu_0 = mu, mu_k = mu_{k-1} - m_k alpha_{i_k}^vee` along a
/// reduced word `(i_1, ..., i_N)` for `w_0`, with each `m_k` maximal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringData {
    pub word: Vec<usize>,
    pub mus: Vec<Coweight>,
    pub ms: Vec<u32>,
}

impl RootSystem {
    /// Whether `mu` lies in `Pi_lambda`: its dominant representative is `<= lambda`.
    pub fn contains(&self, lambda: &Coweight, mu: &Coweight) -> Result<bool> {
        self.check_dominant(lambda)?;
        let (dom, _) = self.dominant_rep(mu)?;
        Ok(self.dominance_le(&dom, lambda))
    }

    /// Dominant coweights `nu <= lambda`, found by subtracting positive
    /// coroots while staying dominant.
    pub fn dominant_below(&self, lambda: &Coweight) -> Result<BTreeSet<Coweight>> {
        self.check_dominant(lambda)?;
        let coroots: Vec<Coweight> = self
            .positive_roots()
            .iter()
            .map(|a| self.coroot_as_coweight(a))
            .collect();
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.clone());
        queue.push_back(lambda.clone());
        while let Some(nu) = queue.pop_front() {
            for c in &coroots {
                let next = &nu - c;
                if next.is_dominant() && !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(seen)
    }

    /// `Pi_lambda = { w nu : nu dominant, nu <= lambda, w in W_0 }`.
    pub fn saturated_set(&self, lambda: &Coweight) -> Result<BTreeSet<Coweight>> {
        self.guard_group()?;
        let mut out = BTreeSet::new();
        for nu in self.dominant_below(lambda)? {
            out.extend(self.weyl_orbit(&nu)?);
        }
        Ok(out)
    }

    /// The canonical reduced word of `w_0` (smallest index first).
    pub fn default_w0_word(&self) -> Vec<usize> {
        self.longest_element().1
    }

    /// Another reduced word of `w_0`, found by taking the largest left descent first.
    pub fn alternate_w0_word(&self) -> Vec<usize> {
        let (mut cur, _) = self.longest_element();
        let mut word = Vec::new();
        while !cur.is_identity() {
            let i = (1..=self.rank())
                .rev()
                .find(|&i| self.is_left_descent(&cur, i))
                .expect("nonidentity element has a left descent");
            word.push(i);
            cur = self.fin_mul(self.simple_unchecked(i), &cur);
        }
        word
    }

    fn check_w0_word(&self, word: &[usize]) -> Result<()> {
        let w = self
            .fin_from_word(word)
            .map_err(|_| Error::NotReducedWord(word.to_vec()))?;
        if word.len() != self.num_positive_roots() || w.length() as usize != word.len() {
            return Err(Error::NotReducedWord(word.to_vec()));
        }
        Ok(())
    }

    /// String parameters of `mu` along a reduced word for `w_0`.
    pub fn string_parameters(
        &self,
        lambda: &Coweight,
        mu: &Coweight,
        word: &[usize],
    ) -> Result<StringData> {
        self.check_dominant(lambda)?;
        self.check_coweight(mu)?;
        self.check_w0_word(word)?;
        if !self.contains(lambda, mu)? {
            return Err(Error::NotInSaturatedSet {
                lambda: lambda.to_string(),
                mu: mu.to_string(),
            });
        }
        let mut mus = vec![mu.clone()];
        let mut ms = Vec::with_capacity(word.len());
        for &i in word {
            let cor = self.simple_coroot(i);
            let mut cur = mus.last().expect("nonempty").clone();
            let mut m = 0u32;
            loop {
                let next = &cur - &cor;
                if !self.contains(lambda, &next)? {
                    break;
                }
                cur = next;
                m += 1;
            }
            ms.push(m);
            mus.push(cur);
        }
        let (w0, _) = self.longest_element();
        let sink = w0.act_coweight(lambda);
        assert_eq!(
            mus.last(),
            Some(&sink),
            "string sequence must end at w0(lambda)"
        );
        Ok(StringData {
            word: word.to_vec(),
            mus,
            ms,
        })
    }

    /// The walk `e_{i_1}^{m_1} ... e_{i_N}^{m_N}(p_{w_0 lambda})` ending at `mu`
    /// with dimension `<lambda + mu, rho>`.
    pub fn build_path(&self, lambda: &Coweight, mu: &Coweight, word: &[usize]) -> Result<Walk> {
        Ok(self.build_path_with_data(lambda, mu, word)?.0)
    }

    pub fn build_path_with_data(
        &self,
        lambda: &Coweight,
        mu: &Coweight,
        word: &[usize],
    ) -> Result<(Walk, StringData)> {
        let data = self.string_parameters(lambda, mu, word)?;
        let mut p = self.antidominant_walk(lambda)?;
        for (k, (&i, &m)) in data.word.iter().zip(&data.ms).enumerate().rev() {
            p = self.raise_power(&p, i, m)?.ok_or_else(|| {
                Error::InternalOperatorDeath(format!(
                    "e_{i}^{m} returned zero at position {} for lambda={lambda}, mu={mu}",
                    k + 1
                ))
            })?;
        }
        if p.weight() != mu {
            return Err(Error::InternalOperatorDeath(format!(
                "constructed walk has weight {} instead of {mu}",
                p.weight()
            )));
        }
        let target = self.rho_pairing(lambda, mu);
        if i64::from(p.dim()) != target {
            return Err(Error::InternalOperatorDeath(format!(
                "constructed walk has dimension {} instead of {target}",
                p.dim()
            )));
        }
        if !self.lambda_types(lambda)?.contains(p.wtype()) {
            return Err(Error::InternalOperatorDeath(
                "constructed walk has a type outside u m_lambda".into(),
            ));
        }
        Ok((p, data))
    }
}
