//! Laurent polynomials in `v = q^{1/2}` and the group algebra of the coweight lattice.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rootsys::Coweight;

/// `sum c_k v^k` with integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentV {
    coeffs: BTreeMap<i32, i64>,
}

impl LaurentV {
    pub fn zero() -> Self {
        LaurentV::default()
    }

    pub fn one() -> Self {
        LaurentV::monomial(1, 0)
    }

    /// `c v^k`.
    pub fn monomial(c: i64, k: i32) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(k, c);
        }
        LaurentV { coeffs }
    }

    /// `v - v^{-1}`.
    pub fn v_minus_vinv() -> Self {
        &LaurentV::monomial(1, 1) - &LaurentV::monomial(1, -1)
    }

    /// `1 - q^{-1} = 1 - v^{-2}`.
    pub fn one_minus_qinv() -> Self {
        &LaurentV::one() - &LaurentV::monomial(1, -2)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i32) -> i64 {
        self.coeffs.get(&k).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = LaurentV::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = LaurentV::zero();
        for (&k, &a) in &self.coeffs {
            out.add_term(k, a * c);
        }
        out
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentV {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    pub fn add_term(&mut self, k: i32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&k);
        }
    }

    /// Whether the polynomial lies in `Z[q^{-1}]`: only even, nonpositive `v`-exponents.
    pub fn is_poly_in_qinv(&self) -> bool {
        self.coeffs.keys().all(|&k| k <= 0 && k % 2 == 0)
    }

    /// Value at `v = q^{1/2}`; `None` if an odd power of `v` occurs.
    pub fn eval_q(&self, q: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (&k, &c) in &self.coeffs {
            if k % 2 != 0 {
                return None;
            }
            acc += BigRational::from_integer(BigInt::from(c)) * rational_pow(q, k / 2);
        }
        Some(acc)
    }

    /// Value at `v = q^{1/2}` in floating point.
    pub fn eval_q_f64(&self, q: f64) -> f64 {
        self.coeffs
            .iter()
            .map(|(&k, &c)| c as f64 * q.powf(f64::from(k) / 2.0))
            .sum()
    }
}

pub(crate) fn rational_pow(x: &BigRational, k: i32) -> BigRational {
    if k >= 0 {
        num_traits::pow(x.clone(), k as usize)
    } else {
        num_traits::pow(x.recip(), (-k) as usize)
    }
}

impl Add for &LaurentV {
    type Output = LaurentV;
    fn add(self, rhs: &LaurentV) -> LaurentV {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentV> for LaurentV {
    fn add_assign(&mut self, rhs: &LaurentV) {
        for (&k, &c) in &rhs.coeffs {
            self.add_term(k, c);
        }
    }
}

impl Sub for &LaurentV {
    type Output = LaurentV;
    fn sub(self, rhs: &LaurentV) -> LaurentV {
        self + &(-rhs)
    }
}

impl Neg for &LaurentV {
    type Output = LaurentV;
    fn neg(self) -> LaurentV {
        self.scale(-1)
    }
}

impl Mul for &LaurentV {
    type Output = LaurentV;
    fn mul(self, rhs: &LaurentV) -> LaurentV {
        let mut out = LaurentV::zero();
        for (&a, &c) in &self.coeffs {
            for (&b, &d) in &rhs.coeffs {
                out.add_term(a + b, c * d);
            }
        }
        out
    }
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: &[(i64, String)],
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (c, mono)) in terms.iter().enumerate() {
        let mag = c.abs();
        if idx == 0 {
            if *c < 0 {
                write!(f, "-")?;
            }
        } else if *c < 0 {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else if mag == 1 {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{mag}{mono}")?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentV {
    /// Written in `q^-1` when possible, otherwise in `v`; highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let in_q = self.is_poly_in_qinv();
        let terms: Vec<(i64, String)> = self
            .coeffs
            .iter()
            .rev()
            .map(|(&k, &c)| {
                let mono = if in_q {
                    match k / 2 {
                        0 => String::new(),
                        -1 => "q^-1".to_string(),
                        e => format!("q^{e}"),
                    }
                } else {
                    match k {
                        0 => String::new(),
                        1 => "v".to_string(),
                        e => format!("v^{e}"),
                    }
                };
                (c, mono)
            })
            .collect();
        write_terms(f, &terms)
    }
}

/// A finitely supported sum `sum_mu c_mu x^mu` with `c_mu` in `Z[v, v^{-1}]`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupAlgebraElem {
    terms: BTreeMap<Coweight, LaurentV>,
}

impl GroupAlgebraElem {
    pub fn zero() -> Self {
        GroupAlgebraElem::default()
    }

    /// `c x^mu`.
    pub fn monomial(mu: Coweight, c: LaurentV) -> Self {
        let mut out = GroupAlgebraElem::zero();
        out.add_term(mu, &c);
        out
    }

    pub fn add_term(&mut self, mu: Coweight, c: &LaurentV) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(mu.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&mu);
        }
    }

    pub fn coeff(&self, mu: &Coweight) -> LaurentV {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coweight, &LaurentV)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Coweight> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluates at `x_i` (so `x^mu = prod x_i^{mu_i}`) and `v = q^{1/2}`.
    pub fn eval(&self, x: &[BigRational], q: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (mu, c) in &self.terms {
            let mut mono = BigRational::one();
            for (xi, &e) in x.iter().zip(&mu.0) {
                mono *= rational_pow(xi, e as i32);
            }
            acc += c.eval_q(q)? * mono;
        }
        Some(acc)
    }
}

impl Add for &GroupAlgebraElem {
    type Output = GroupAlgebraElem;
    fn add(self, rhs: &GroupAlgebraElem) -> GroupAlgebraElem {
        let mut out = self.clone();
        for (mu, c) in &rhs.terms {
            out.add_term(mu.clone(), c);
        }
        out
    }
}

impl Mul for &GroupAlgebraElem {
    type Output = GroupAlgebraElem;
    fn mul(self, rhs: &GroupAlgebraElem) -> GroupAlgebraElem {
        let mut out = GroupAlgebraElem::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a + b, &(c * d));
            }
        }
        out
    }
}

impl fmt::Display for GroupAlgebraElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (mu, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if *c == LaurentV::one() {
                write!(f, "x^{mu}")?;
            } else {
                write!(f, "({c})x^{mu}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = LaurentV::v_minus_vinv();
        let sq = &a * &a;
        assert_eq!(sq.coeff(2), 1);
        assert_eq!(sq.coeff(0), -2);
        assert_eq!(sq.coeff(-2), 1);
        assert!((&a - &a).is_zero());
        assert_eq!(a.pow(0), LaurentV::one());
    }

    #[test]
    fn display_in_q() {
        let two_plus = &LaurentV::monomial(2, 0) + &LaurentV::monomial(1, -2);
        let p = &two_plus * &LaurentV::one_minus_qinv();
        assert_eq!(p.to_string(), "2 - q^-1 - q^-2");
        assert_eq!(LaurentV::v_minus_vinv().to_string(), "v - v^-1");
        assert_eq!(LaurentV::zero().to_string(), "0");
        assert_eq!(LaurentV::monomial(-3, 3).to_string(), "-3v^3");
    }

    #[test]
    fn evaluation() {
        let p = &LaurentV::monomial(2, 0) - &LaurentV::monomial(1, -2);
        let q = BigRational::from_integer(4.into());
        assert_eq!(p.eval_q(&q), Some(BigRational::new(7.into(), 4.into())));
        assert_eq!(LaurentV::monomial(1, 1).eval_q(&q), None);
        let g = &GroupAlgebraElem::monomial(Coweight(vec![1]), LaurentV::one())
            + &GroupAlgebraElem::monomial(Coweight(vec![-1]), LaurentV::one());
        let x = [BigRational::from_integer(3.into())];
        assert_eq!(g.eval(&x, &q), Some(BigRational::new(10.into(), 3.into())));
        let sq = &g * &g;
        assert_eq!(sq.coeff(&Coweight(vec![0])), LaurentV::monomial(2, 0));
    }
}
