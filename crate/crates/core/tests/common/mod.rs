#![allow(dead_code)]

use std::collections::BTreeSet;

use alcovia_core::{build_root_system, Coweight, RootSystem};

pub fn cw(v: &[i64]) -> Coweight {
    Coweight(v.to_vec())
}

/// All dominant `lambda` with `<lambda, 2 rho> <= bound`.
pub fn dominant_upto(rs: &RootSystem, bound: i64) -> Vec<Coweight> {
    let n = rs.rank();
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    loop {
        let lambda = Coweight(cur.clone());
        if rs.pair_two_rho(&lambda) <= bound {
            out.push(lambda);
        }
        let mut k = 0;
        while k < n {
            cur[k] += 1;
            if rs.pair_two_rho(&Coweight(cur.clone())) <= bound {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    out
}

/// The `(type, lambda)` sweep: A1, A2, C2, G2 with `<lambda, 2 rho> <= 10`.
pub fn sweep() -> Vec<(RootSystem, Vec<Coweight>)> {
    ["A1", "A2", "C2", "G2"]
        .iter()
        .map(|t| {
            let rs = build_root_system(t).unwrap();
            let ls = dominant_upto(&rs, 10);
            (rs, ls)
        })
        .collect()
}

fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| *v).collect())
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * det(&minor)
        })
        .sum()
}

/// Coroot coordinates by Cramer's rule on `A^T c = mu` (independent of the
/// library's rational elimination).
pub fn coroot_coords_cramer(rs: &RootSystem, mu: &Coweight) -> Option<Vec<i64>> {
    let n = rs.rank();
    let at: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| rs.cartan()[c][r]).collect()).collect();
    let d = det(&at);
    (0..n)
        .map(|k| {
            let mut m = at.clone();
            for r in 0..n {
                m[r][k] = mu.0[r];
            }
            let num = det(&m);
            if num % d == 0 {
                Some(num / d)
            } else {
                None
            }
        })
        .collect()
}

/// `Pi_lambda` as the intersection `bigcap_w w(lambda - Q^+)` restricted to a
/// box containing the orbit hull.
pub fn saturated_oracle(rs: &RootSystem, lambda: &Coweight) -> BTreeSet<Coweight> {
    let elems = rs.weyl_group_elements().unwrap();
    let orbit: Vec<Coweight> = elems.iter().map(|w| w.act_coweight(lambda)).collect();
    let bound = orbit
        .iter()
        .flat_map(|m| m.0.iter().map(|c| c.abs()))
        .max()
        .unwrap_or(0);
    let n = rs.rank();
    let mut out = BTreeSet::new();
    let mut c = vec![-bound; n];
    loop {
        let mu = Coweight(c.clone());
        let ok = elems.iter().all(|w| {
            let diff = lambda - &w.act_coweight(&mu);
            match coroot_coords_cramer(rs, &diff) {
                Some(cc) => cc.iter().all(|&x| x >= 0),
                None => false,
            }
        });
        if ok {
            out.insert(mu);
        }
        let mut k = 0;
        while k < n {
            c[k] += 1;
            if c[k] <= bound {
                break;
            }
            c[k] = -bound;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    out
}

/// `<lambda + mu, rho>`, computed from the list of positive roots.
pub fn rho_pair(rs: &RootSystem, lambda: &Coweight, mu: &Coweight) -> i64 {
    let s = lambda + mu;
    let two: i64 = rs.positive_roots().iter().map(|a| rs.pair(&s, a)).sum();
    assert_eq!(two % 2, 0);
    two / 2
}
