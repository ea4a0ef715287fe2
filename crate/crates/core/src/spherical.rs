//! Macdonald spherical functions from alcove walks, the symmetrised
//! definition evaluated at rational points, and weight multiplicities.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laurent::{rational_pow, GroupAlgebraElem, LaurentV};
use crate::rootsys::{Coweight, RootSystem};
use crate::walks::Walk;

/// One comparison of the walk formula against the symmetrised definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectCheck {
    pub point: Vec<BigRational>,
    pub q: BigRational,
    pub direct: BigRational,
    pub from_paths: BigRational,
}

impl DirectCheck {
    pub fn agrees(&self) -> bool {
        self.direct == self.from_paths
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RootSystem {
    /// The contribution `q^{-(<lambda+mu,rho> - dim p)} (1 - q^{-1})^{f(p)}` of one walk.
    pub fn path_weight(&self, lambda: &Coweight, p: &Walk) -> LaurentV {
        let excess = self.rho_pairing(lambda, p.weight()) - i64::from(p.dim());
        &LaurentV::monomial(1, -2 * excess as i32) * &LaurentV::one_minus_qinv().pow(p.stats().folds)
    }

    /// `P_lambda(x, q^{-1})` as a sum over `P(lambda)`.
    pub fn spherical_via_paths(&self, lambda: &Coweight) -> Result<GroupAlgebraElem> {
        let walks = self.enumerate_lambda_walks(lambda)?;
        let mut out = GroupAlgebraElem::zero();
        for p in &walks {
            out.add_term(p.weight().clone(), &self.path_weight(lambda, p));
        }
        Ok(out)
    }

    /// The walks of type `m_lambda` starting at each `u` in `W_0^lambda`.
    pub fn prime_walks(&self, lambda: &Coweight) -> Result<Vec<Walk>> {
        self.check_dominant(lambda)?;
        let (_, mword) = self.min_double_coset_rep(lambda)?;
        let wtype = crate::walks::WalkType {
            letters: mword.letters.clone(),
            omega: mword.omega.clone(),
        };
        let reps = self.coset_min_reps(lambda)?;
        let chunks: Vec<Result<Vec<Walk>>> = reps
            .par_iter()
            .map(|(u, _)| {
                let start = self.aff_from_parts(&Coweight::zero(self.rank()), u);
                self.enumerate_from(&start, &wtype)
            })
            .collect();
        let mut out = Vec::new();
        for c in chunks {
            out.extend(c?);
        }
        Ok(out)
    }

    /// `P_lambda(x, q^{-1})` from walks of type `m_lambda` with varying start.
    pub fn spherical_via_paths_prime(&self, lambda: &Coweight) -> Result<GroupAlgebraElem> {
        let (m, _) = self.min_double_coset_rep(lambda)?;
        let prefactor = self.aff_length(&self.aff_translation(lambda)) as i32
            - self.aff_length(&m) as i32;
        let mut out = GroupAlgebraElem::zero();
        for p in self.prime_walks(lambda)? {
            let shift = prefactor
                - p.start().fin.length() as i32
                - p.stats().final_dir.length() as i32;
            let c = LaurentV::v_minus_vinv().pow(p.stats().folds).shift(shift);
            out.add_term(p.weight().clone(), &c);
        }
        Ok(out)
    }

    /// The symmetrised definition
    /// `W_{0 lambda}(q^{-1})^{-1} sum_w w( x^lambda prod_{a>0} (1 - q^{-1} x^{-a^vee}) / (1 - x^{-a^vee}) )`
    /// evaluated exactly at a rational point.
    pub fn eval_direct(
        &self,
        lambda: &Coweight,
        point: &[BigRational],
        q: &BigRational,
    ) -> Result<BigRational> {
        self.check_dominant(lambda)?;
        if point.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: point.len(),
            });
        }
        if point.iter().any(Zero::is_zero) {
            return Err(Error::SingularPoint("a coordinate is zero".into()));
        }
        if q.is_zero() || q.is_one() {
            return Err(Error::SingularPoint("q must differ from 0 and 1".into()));
        }
        let elems = self.weyl_group_elements()?;
        let qinv = q.recip();
        let xpow = |mu: &Coweight| -> BigRational {
            let mut acc = BigRational::one();
            for (xi, &e) in point.iter().zip(&mu.0) {
                acc *= rational_pow(xi, e as i32);
            }
            acc
        };
        let coroots: Vec<Coweight> = self
            .positive_roots()
            .iter()
            .map(|a| self.coroot_as_coweight(a))
            .collect();
        let mut total = BigRational::zero();
        let mut stab = BigRational::zero();
        for w in &elems {
            let wl = w.act_coweight(lambda);
            if wl == *lambda {
                stab += rational_pow(&qinv, w.length() as i32);
            }
            let mut term = xpow(&wl);
            for c in &coroots {
                let y = xpow(&-&w.act_coweight(c));
                let den = BigRational::one() - &y;
                if den.is_zero() {
                    return Err(Error::SingularPoint(format!(
                        "x^(w a^vee) = 1 for w a^vee = {}",
                        w.act_coweight(c)
                    )));
                }
                term *= (BigRational::one() - &qinv * &y) / den;
            }
            total += term;
        }
        Ok(total / stab)
    }

    /// Compares the walk formula with [`eval_direct`](Self::eval_direct) at
    /// `trials` seeded random points; singular draws are redrawn.
    pub fn compare_direct(&self, lambda: &Coweight, trials: usize, seed: u64) -> Result<Vec<DirectCheck>> {
        let poly = self.spherical_via_paths(lambda)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(trials);
        let mut attempts = 0usize;
        while out.len() < trials {
            attempts += 1;
            if attempts > 1000 * (trials + 1) {
                return Err(Error::SingularPoint("could not find a generic point".into()));
            }
            let point: Vec<BigRational> = (0..self.rank())
                .map(|_| {
                    let num = rng.gen_range(1..=29i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
                    let den = rng.gen_range(1..=11i64);
                    BigRational::new(BigInt::from(num), BigInt::from(den))
                })
                .collect();
            let q = BigRational::new(
                BigInt::from(rng.gen_range(2..=40i64)),
                BigInt::from(rng.gen_range(1..=3i64)),
            );
            if q.is_one() {
                continue;
            }
            let direct = match self.eval_direct(lambda, &point, &q) {
                Ok(v) => v,
                Err(Error::SingularPoint(_)) => continue,
                Err(e) => return Err(e),
            };
            let from_paths = poly
                .eval(&point, &q)
                .expect("spherical coefficients are polynomials in q^-1");
            out.push(DirectCheck {
                point,
                q,
                direct,
                from_paths,
            });
        }
        Ok(out)
    }

    /// `K_{lambda mu}`: the number of walks at `mu` with dimension `<lambda + mu, rho>`.
    pub fn weight_multiplicities(&self, lambda: &Coweight) -> Result<BTreeMap<Coweight, u64>> {
        let mut out = BTreeMap::new();
        for p in self.enumerate_lambda_walks(lambda)? {
            if i64::from(p.dim()) == self.rho_pairing(lambda, p.weight()) {
                *out.entry(p.weight().clone()).or_insert(0) += 1;
            }
        }
        Ok(out)
    }

    /// The invariant form `(x, b)` for `x` in coweight coordinates and `b`
    /// in simple-coroot coordinates, scaled so short coroots have norm 2.
    fn form_with_coroot(&self, x: &Coweight, b: &[i64]) -> i64 {
        let d = self.coroot_norms();
        (0..self.rank()).map(|j| x.0[j] * b[j] * d[j]).sum()
    }

    /// Weight multiplicities by Freudenthal's recursion, working in the
    /// coweight lattice with the coroots as roots.
    pub fn freudenthal(&self, lambda: &Coweight) -> Result<BTreeMap<Coweight, u64>> {
        self.check_dominant(lambda)?;
        let n = self.rank();
        let rho = Coweight(vec![1; n]);
        let mut dominant: Vec<(i64, Coweight)> = self
            .dominant_below(lambda)?
            .into_iter()
            .map(|mu| {
                let h: i64 = self
                    .coroot_coords(&(lambda - &mu))
                    .expect("dominated weights differ by coroots")
                    .iter()
                    .sum();
                (h, mu)
            })
            .collect();
        dominant.sort();
        let mut mult: BTreeMap<Coweight, u64> = BTreeMap::new();
        for (h, mu) in &dominant {
            if *h == 0 {
                mult.insert(mu.clone(), 1);
                continue;
            }
            // (lambda + rho, lambda + rho) - (mu + rho, mu + rho) = (lambda - mu, lambda + mu + 2 rho).
            let diff = self.coroot_coords(&(lambda - mu)).expect("in coroot lattice");
            let s = &(lambda + mu) + &rho.scaled(2);
            let lhs = self.form_with_coroot(&s, &diff);
            let mut rhs = 0i64;
            for a in self.positive_roots() {
                let c = self.coroot_as_coweight(a);
                let mut k = 1;
                loop {
                    let nu = &(mu.clone()) + &c.scaled(k);
                    if !self.contains(lambda, &nu)? {
                        break;
                    }
                    let (dom, _) = self.dominant_rep(&nu)?;
                    let m = *mult.get(&dom).expect("higher weights computed first") as i64;
                    rhs += 2 * m * self.form_with_coroot(&nu, &a.coroot_coords);
                    k += 1;
                }
            }
            assert!(lhs > 0 && rhs % lhs == 0, "Freudenthal quotient must be integral");
            mult.insert(mu.clone(), (rhs / lhs) as u64);
        }
        let mut out = BTreeMap::new();
        for (mu, m) in mult {
            if m == 0 {
                continue;
            }
            for nu in self.weyl_orbit(&mu)? {
                out.insert(nu, m);
            }
        }
        Ok(out)
    }

    /// The Weyl character `sum_mu K_{lambda mu} x^mu` as a group algebra element.
    pub fn character(&self, mult: &BTreeMap<Coweight, u64>) -> GroupAlgebraElem {
        let mut out = GroupAlgebraElem::zero();
        for (mu, &m) in mult {
            out.add_term(mu.clone(), &LaurentV::monomial(m as i64, 0));
        }
        out
    }

    /// Evaluates `c(q^{-1})` at an integer `q`.
    pub fn eval_coefficient(&self, c: &LaurentV, q: i64) -> BigRational {
        c.eval_q(&rat(q)).expect("polynomial in q^-1")
    }
}
