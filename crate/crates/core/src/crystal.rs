//! Raising root operators on positively folded walks.
//!
//! `e_i` turns the `i`-critical crossing into a fold. Because a walk is
//! stored as a type plus a fold mask, the reflection of the middle segment
//! is automatic: changing the mask and recomputing the alcoves produces the
//! reflected walk.

use crate::affine::{AffElem, AffRoot};
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::walks::{StepKind, Walk};

/// The first interaction with an `alpha_i + Z delta` hyperplane after the critical crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NextEvent {
    /// A fold on `H_{gamma + delta}` at this 1-based step (case a).
    FoldOnLevelPlusOne(usize),
    /// A positive crossing of `H_gamma` at this 1-based step (case b).
    PositiveCrossSame(usize),
    /// No further interaction (case c).
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RaiseCase {
    A,
    B,
    C,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalData {
    /// The `i`-critical hyperplane `H_{alpha_i + k delta}`.
    pub hyperplane: AffRoot,
    /// 1-based index of the first negative crossing of that hyperplane.
    pub crossing_index: usize,
    pub next_event: NextEvent,
}

impl CriticalData {
    pub fn case(&self) -> RaiseCase {
        match self.next_event {
            NextEvent::FoldOnLevelPlusOne(_) => RaiseCase::A,
            NextEvent::PositiveCrossSame(_) => RaiseCase::B,
            NextEvent::None => RaiseCase::C,
        }
    }
}

impl RootSystem {
    fn is_simple_grad(&self, wall: &AffRoot, i: usize) -> bool {
        wall.grad
            .root_coords
            .iter()
            .enumerate()
            .all(|(j, &c)| c == i64::from(j + 1 == i))
    }

    /// The `i`-critical data of `p`, or `None` when `e_i(p) = 0`.
    pub fn critical(&self, p: &Walk, i: usize) -> Result<Option<CriticalData>> {
        self.check_simple_index(i)?;
        let steps = p.steps();
        let mut best: Option<(i64, usize)> = None;
        for (k, s) in steps.iter().enumerate() {
            if s.kind == StepKind::NegCross && self.is_simple_grad(&s.wall, i) {
                let lvl = s.wall.level;
                if best.is_none_or(|(b, _)| lvl > b) {
                    best = Some((lvl, k));
                }
            }
        }
        let Some((level, c)) = best else {
            return Ok(None);
        };
        let hyperplane = steps[c].wall.clone();
        let mut next_event = NextEvent::None;
        for (k, s) in steps.iter().enumerate().skip(c + 1) {
            if !self.is_simple_grad(&s.wall, i) {
                continue;
            }
            next_event = match (s.kind, s.wall.level - level) {
                (StepKind::PosFold, 1) => NextEvent::FoldOnLevelPlusOne(k + 1),
                (StepKind::PosCross, 0) => NextEvent::PositiveCrossSame(k + 1),
                (kind, d) => {
                    return Err(Error::CaseConflict(format!(
                        "step {} after the critical crossing at step {} is {:?} at relative level {}",
                        k + 1,
                        c + 1,
                        kind,
                        d
                    )))
                }
            };
            break;
        }
        Ok(Some(CriticalData {
            hyperplane,
            crossing_index: c + 1,
            next_event,
        }))
    }

    /// `e_i(p)`, or `None` when the operator kills `p`.
    pub fn raise(&self, p: &Walk, i: usize) -> Result<Option<Walk>> {
        Ok(self.raise_with_case(p, i)?.map(|(q, _)| q))
    }

    /// As [`raise`](Self::raise), also reporting which case applied. The
    /// dimension and end-alcove laws are checked on every application.
    pub fn raise_with_case(&self, p: &Walk, i: usize) -> Result<Option<(Walk, RaiseCase)>> {
        let Some(crit) = self.critical(p, i)? else {
            return Ok(None);
        };
        let mut mask = p.mask().to_vec();
        mask[crit.crossing_index - 1] = true;
        match crit.next_event {
            NextEvent::FoldOnLevelPlusOne(e) => mask[e - 1] = false,
            NextEvent::PositiveCrossSame(e) => mask[e - 1] = true,
            NextEvent::None => {}
        }
        let q = Walk::from_mask(self, p.start().clone(), p.wtype().clone(), mask)?;
        let case = crit.case();
        let expected_end = match case {
            RaiseCase::A => {
                let t = self.aff_translation(&self.simple_coroot(i));
                self.aff_mul(&t, p.end())
            }
            RaiseCase::B => p.end().clone(),
            RaiseCase::C => {
                // s_gamma = t_{-k alpha_i^vee} s_i for gamma = alpha_i + k delta.
                let k = crit.hyperplane.level;
                let sg = AffElem {
                    trans: self.simple_coroot(i).scaled(-k),
                    fin: self.simple_unchecked(i).clone(),
                };
                self.aff_mul(&sg, p.end())
            }
        };
        if q.dim() != p.dim() + 1 {
            return Err(Error::InvalidWalk(format!(
                "raising changed dimension from {} to {}",
                p.dim(),
                q.dim()
            )));
        }
        if *q.end() != expected_end {
            return Err(Error::InvalidWalk(format!(
                "raising in case {case:?} violated the end-alcove law"
            )));
        }
        Ok(Some((q, case)))
    }

    /// `e_i^m(p)`; `m = 0` returns `p`.
    pub fn raise_power(&self, p: &Walk, i: usize, m: u32) -> Result<Option<Walk>> {
        let mut cur = p.clone();
        for _ in 0..m {
            match self.raise(&cur, i)? {
                Some(q) => cur = q,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, Coweight};
    use crate::walks::WalkType;

    fn example_walk(rs: &RootSystem) -> Walk {
        let letters = vec![1, 2, 0, 1, 0, 2, 0, 1, 0, 2, 1, 0, 2, 1, 0, 2, 1, 0, 2, 1];
        Walk::new(rs, WalkType { letters, omega: rs.aff_identity() }, &[5, 7, 15]).unwrap()
    }

    #[test]
    fn example_walk_statistics() {
        let rs = build_root_system("A2").unwrap();
        let p = example_walk(&rs);
        let s = p.stats();
        assert_eq!((s.pos_cross, s.neg_cross, s.folds), (9, 8, 3));
        assert_eq!((s.length, s.signed, s.dim), (20, 1, 12));
        assert_eq!(s.signed, rs.signed_length(p.end()));
    }

    #[test]
    fn example_walk_root_operators() {
        let rs = build_root_system("A2").unwrap();
        let p = example_walk(&rs);
        assert!(rs.critical(&p, 2).unwrap().is_none());
        assert!(rs.raise(&p, 2).unwrap().is_none());
        let c = rs.critical(&p, 1).unwrap().unwrap();
        assert_eq!(c.hyperplane.grad.root_coords, vec![1, 0]);
        assert_eq!(c.hyperplane.level, 5);
        assert_eq!(c.crossing_index, 13);
        let mut cur = p;
        let mut count = 0;
        while let Some(q) = rs.raise(&cur, 1).unwrap() {
            cur = q;
            count += 1;
        }
        assert_eq!(count, 6);
    }

    #[test]
    fn a1_case_c() {
        let rs = build_root_system("A1").unwrap();
        let p = rs.antidominant_walk(&Coweight(vec![1])).unwrap();
        let c = rs.critical(&p, 1).unwrap().unwrap();
        assert_eq!(c.hyperplane.level, 0);
        assert_eq!(c.crossing_index, 1);
        assert_eq!(c.next_event, NextEvent::None);
        let (q, case) = rs.raise_with_case(&p, 1).unwrap().unwrap();
        assert_eq!(case, RaiseCase::C);
        assert_eq!(q.step_string(), "f");
        assert_eq!(q.dim(), 1);
        assert_eq!(q.end(), &rs.omega_element(1).unwrap());
        assert!(rs.raise(&q, 1).unwrap().is_none());
        assert!(rs.critical(&q, 1).unwrap().is_none());
    }

    #[test]
    fn powers() {
        let rs = build_root_system("A1").unwrap();
        let p = rs.antidominant_walk(&Coweight(vec![1])).unwrap();
        assert_eq!(rs.raise_power(&p, 1, 0).unwrap().unwrap(), p);
        assert_eq!(
            rs.raise_power(&p, 1, 1).unwrap(),
            rs.raise(&p, 1).unwrap()
        );
        assert!(rs.raise_power(&p, 1, 2).unwrap().is_none());
    }

    #[test]
    fn bad_index() {
        let rs = build_root_system("A2").unwrap();
        let p = rs.antidominant_walk(&Coweight(vec![1, 1])).unwrap();
        assert!(rs.critical(&p, 0).is_err());
        assert!(rs.critical(&p, 3).is_err());
    }
}
