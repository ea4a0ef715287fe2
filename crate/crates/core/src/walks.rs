//! Positively folded alcove walks.
//!
//! A walk of type `s_{i_1} ... s_{i_l} gamma` starting at alcove `x_0` is a
//! sequence `x_0, ..., x_l` where each step either crosses the wall into
//! `x_{k-1} s_{i_k}` or folds back and stays at `x_{k-1}`. A fold is allowed
//! only when `x_{k-1}` lies on the positive side of that wall. The end of the
//! walk is `x_l gamma`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::affine::{AffElem, AffRoot, Crossing};
use crate::error::{Error, Result};
use crate::rootsys::{Coweight, FinWeylElem, RootSystem};

/// The type of a walk: letters in `0..=n` followed by a length-zero element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WalkType {
    pub letters: Vec<usize>,
    pub omega: AffElem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    PosCross,
    NegCross,
    PosFold,
}

impl StepKind {
    pub fn symbol(self) -> char {
        match self {
            StepKind::PosCross => '+',
            StepKind::NegCross => '-',
            StepKind::PosFold => 'f',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub letter: usize,
    pub wall: AffRoot,
    pub kind: StepKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkStats {
    pub pos_cross: u32,
    pub neg_cross: u32,
    pub folds: u32,
    pub length: u32,
    pub signed: i64,
    pub dim: u32,
    pub weight: Coweight,
    pub final_dir: FinWeylElem,
}

/// A positively folded alcove walk with its alcove sequence.
#[derive(Debug, Clone)]
pub struct Walk {
    wtype: WalkType,
    start: AffElem,
    mask: Vec<bool>,
    alcoves: Vec<AffElem>,
    steps: Vec<Step>,
    end: AffElem,
    stats: WalkStats,
}

impl PartialEq for Walk {
    fn eq(&self, other: &Self) -> bool {
        self.wtype == other.wtype && self.start == other.start && self.mask == other.mask
    }
}

impl Eq for Walk {}

impl Walk {
    /// Builds the walk of type `wtype` from the identity alcove with folds
    /// at the given 1-based positions.
    pub fn new(rs: &RootSystem, wtype: WalkType, folds: &[usize]) -> Result<Walk> {
        Walk::from_start(rs, rs.aff_identity(), wtype, folds)
    }

    pub fn from_start(
        rs: &RootSystem,
        start: AffElem,
        wtype: WalkType,
        folds: &[usize],
    ) -> Result<Walk> {
        let l = wtype.letters.len();
        let mut mask = vec![false; l];
        for &k in folds {
            if k == 0 || k > l {
                return Err(Error::InvalidWalk(format!("fold position {k} outside 1..={l}")));
            }
            mask[k - 1] = true;
        }
        Walk::from_mask(rs, start, wtype, mask)
    }

    pub(crate) fn from_mask(
        rs: &RootSystem,
        start: AffElem,
        wtype: WalkType,
        mask: Vec<bool>,
    ) -> Result<Walk> {
        for &i in &wtype.letters {
            if i > rs.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    lo: 0,
                    hi: rs.rank(),
                });
            }
        }
        if mask.len() != wtype.letters.len() {
            return Err(Error::InvalidWalk("fold mask length differs from type length".into()));
        }
        if rs.aff_length(&wtype.omega) != 0 {
            return Err(Error::InvalidWalk("type tail has nonzero length".into()));
        }
        let mut alcoves = Vec::with_capacity(mask.len() + 1);
        let mut steps = Vec::with_capacity(mask.len());
        let mut cur = start.clone();
        alcoves.push(cur.clone());
        for (k, &i) in wtype.letters.iter().enumerate() {
            let (wall, sign) = rs.classify_step(&cur, i);
            let kind = if mask[k] {
                if sign == Crossing::Positive {
                    return Err(Error::InvalidWalk(format!(
                        "fold at step {} is on the negative side of {}",
                        k + 1,
                        wall
                    )));
                }
                StepKind::PosFold
            } else {
                cur = rs.aff_mul_simple(&cur, i);
                match sign {
                    Crossing::Positive => StepKind::PosCross,
                    Crossing::Negative => StepKind::NegCross,
                }
            };
            steps.push(Step { letter: i, wall, kind });
            alcoves.push(cur.clone());
        }
        Ok(Walk::assemble(rs, wtype, start, mask, alcoves, steps))
    }

    fn assemble(
        rs: &RootSystem,
        wtype: WalkType,
        start: AffElem,
        mask: Vec<bool>,
        alcoves: Vec<AffElem>,
        steps: Vec<Step>,
    ) -> Walk {
        let end = rs.aff_mul(alcoves.last().expect("nonempty"), &wtype.omega);
        let count = |k: StepKind| steps.iter().filter(|s| s.kind == k).count() as u32;
        let pos = count(StepKind::PosCross);
        let neg = count(StepKind::NegCross);
        let f = count(StepKind::PosFold);
        let stats = WalkStats {
            pos_cross: pos,
            neg_cross: neg,
            folds: f,
            length: pos + neg + f,
            signed: pos as i64 - neg as i64,
            dim: pos + f,
            weight: end.trans.clone(),
            final_dir: end.fin.clone(),
        };
        Walk {
            wtype,
            start,
            mask,
            alcoves,
            steps,
            end,
            stats,
        }
    }

    pub fn wtype(&self) -> &WalkType {
        &self.wtype
    }

    pub fn start(&self) -> &AffElem {
        &self.start
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    /// 1-based positions of the folds.
    pub fn folds(&self) -> Vec<usize> {
        (1..=self.mask.len()).filter(|&k| self.mask[k - 1]).collect()
    }

    /// The alcoves `x_0, ..., x_l` (before the length-zero tail).
    pub fn alcoves(&self) -> &[AffElem] {
        &self.alcoves
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn end(&self) -> &AffElem {
        &self.end
    }

    pub fn stats(&self) -> &WalkStats {
        &self.stats
    }

    pub fn weight(&self) -> &Coweight {
        &self.stats.weight
    }

    pub fn dim(&self) -> u32 {
        self.stats.dim
    }

    /// One character per step followed by the tail label, e.g. `--f-@w=e`.
    pub fn to_text(&self, rs: &RootSystem) -> String {
        format!("{}@w={}", self.step_string(), rs.omega_label(&self.wtype.omega))
    }

    pub fn step_string(&self) -> String {
        self.steps.iter().map(|s| s.kind.symbol()).collect()
    }
}

impl fmt::Display for WalkStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pos={} neg={} folds={} len={} eps={} dim={} weight={}",
            self.pos_cross, self.neg_cross, self.folds, self.length, self.signed, self.dim, self.weight
        )
    }
}

impl RootSystem {
    fn check_type_len(&self, len: usize) -> Result<()> {
        if len > self.limits.max_letters {
            return Err(Error::TypeTooLong {
                len,
                limit: self.limits.max_letters,
            });
        }
        Ok(())
    }

    /// All positively folded walks of the given type from the identity alcove.
    pub fn enumerate(&self, wtype: &WalkType) -> Result<Vec<Walk>> {
        self.enumerate_from(&self.aff_identity(), wtype)
    }

    /// All positively folded walks of the given type from alcove `start`, in
    /// depth-first order with crossings explored before folds.
    pub fn enumerate_from(&self, start: &AffElem, wtype: &WalkType) -> Result<Vec<Walk>> {
        self.check_type_len(wtype.letters.len())?;
        for &i in &wtype.letters {
            if i > self.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    lo: 0,
                    hi: self.rank(),
                });
            }
        }
        let mut out = Vec::new();
        let mut state = Dfs {
            rs: self,
            wtype,
            start,
            alcoves: vec![start.clone()],
            steps: Vec::new(),
            mask: Vec::new(),
            out: &mut out,
        };
        state.run(start.clone());
        Ok(out)
    }

    /// The type `u m_lambda` for a minimal coset representative `u` given by its word.
    pub fn walk_type_for(&self, u_word: &[usize], m_word: &crate::affine::AffineWord) -> WalkType {
        let mut letters = u_word.to_vec();
        letters.extend_from_slice(&m_word.letters);
        WalkType {
            letters,
            omega: m_word.omega.clone(),
        }
    }

    /// The types `u m_lambda`, one per `u` in `W_0^lambda`, in canonical order.
    pub fn lambda_types(&self, lambda: &Coweight) -> Result<Vec<WalkType>> {
        self.check_dominant(lambda)?;
        let total = self.pair_two_rho(lambda);
        self.check_type_len(total as usize)?;
        let (_, mword) = self.min_double_coset_rep(lambda)?;
        Ok(self
            .coset_min_reps(lambda)?
            .iter()
            .map(|(_, w)| self.walk_type_for(w, &mword))
            .collect())
    }

    /// All walks of types `u m_lambda`, `u` in `W_0^lambda`, in canonical order.
    pub fn enumerate_lambda_walks(&self, lambda: &Coweight) -> Result<Vec<Walk>> {
        let types = self.lambda_types(lambda)?;
        let chunks: Vec<Result<Vec<Walk>>> = types.par_iter().map(|t| self.enumerate(t)).collect();
        let mut out = Vec::new();
        for c in chunks {
            out.extend(c?);
        }
        Ok(out)
    }

    /// The walks of `P(lambda)` grouped by weight.
    pub fn enumerate_p_lambda(&self, lambda: &Coweight) -> Result<BTreeMap<Coweight, Vec<Walk>>> {
        let mut map: BTreeMap<Coweight, Vec<Walk>> = BTreeMap::new();
        for p in self.enumerate_lambda_walks(lambda)? {
            map.entry(p.weight().clone()).or_default().push(p);
        }
        Ok(map)
    }

    /// The unique fold-free walk with all crossings negative, ending at `t_{w_0 lambda}`.
    pub fn antidominant_walk(&self, lambda: &Coweight) -> Result<Walk> {
        self.check_dominant(lambda)?;
        self.check_type_len(self.pair_two_rho(lambda) as usize)?;
        let (w0, _) = self.longest_element();
        let w0l = self.stabilizer_longest(lambda)?;
        let u = self.fin_mul(&w0, &w0l);
        let (_, mword) = self.min_double_coset_rep(lambda)?;
        let wtype = self.walk_type_for(&self.canonical_word(&u), &mword);
        Walk::new(self, wtype, &[])
    }

    /// `p_0, ..., p_f`: `p_i` keeps the first `i` folds of `p` and crosses afterwards.
    pub fn unfold_sequence(&self, p: &Walk) -> Result<Vec<Walk>> {
        let folds = p.folds();
        (0..=folds.len())
            .map(|i| Walk::from_start(self, p.start.clone(), p.wtype.clone(), &folds[..i]))
            .collect()
    }

    /// Half of `<lambda + mu, 2 rho>`, which is an integer when `mu` lies in `lambda + Q`.
    pub fn rho_pairing(&self, lambda: &Coweight, mu: &Coweight) -> i64 {
        let two = self.pair_two_rho(&(lambda + mu));
        debug_assert!(two % 2 == 0, "<lambda+mu, 2rho> must be even");
        two / 2
    }
}

struct Dfs<'a> {
    rs: &'a RootSystem,
    wtype: &'a WalkType,
    start: &'a AffElem,
    alcoves: Vec<AffElem>,
    steps: Vec<Step>,
    mask: Vec<bool>,
    out: &'a mut Vec<Walk>,
}

impl Dfs<'_> {
    fn run(&mut self, cur: AffElem) {
        let pos = self.steps.len();
        if pos == self.wtype.letters.len() {
            let w = Walk::assemble(
                self.rs,
                self.wtype.clone(),
                self.start.clone(),
                self.mask.clone(),
                self.alcoves.clone(),
                self.steps.clone(),
            );
            self.out.push(w);
            return;
        }
        let i = self.wtype.letters[pos];
        let (wall, sign) = self.rs.classify_step(&cur, i);
        let next = self.rs.aff_mul_simple(&cur, i);
        let kind = match sign {
            Crossing::Positive => StepKind::PosCross,
            Crossing::Negative => StepKind::NegCross,
        };
        self.push(i, wall.clone(), kind, false, next.clone());
        self.run(next);
        self.pop();
        if sign == Crossing::Negative {
            self.push(i, wall, StepKind::PosFold, true, cur.clone());
            self.run(cur);
            self.pop();
        }
    }

    fn push(&mut self, letter: usize, wall: AffRoot, kind: StepKind, fold: bool, alcove: AffElem) {
        self.steps.push(Step { letter, wall, kind });
        self.mask.push(fold);
        self.alcoves.push(alcove);
    }

    fn pop(&mut self) {
        self.steps.pop();
        self.mask.pop();
        self.alcoves.pop();
    }
}
