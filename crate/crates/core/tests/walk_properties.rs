mod common;

use std::collections::{BTreeMap, BTreeSet};

use alcovia_core::{
    build_root_system, AffElem, AffineWord, Coweight, GroupAlgebraElem, RaiseCase, RootSystem, StepKind, Walk,
    WalkType,
};
use common::{cw, rho_pair, saturated_oracle, sweep};

#[test]
fn dimension_bound_and_equality_case() {
    for (rs, lambdas) in sweep() {
        for lambda in &lambdas {
            let lt = rs.aff_length(&rs.aff_translation(lambda));
            for p in rs.enumerate_lambda_walks(lambda).unwrap() {
                let s = p.stats();
                let bound = rho_pair(&rs, lambda, &s.weight);
                assert!(i64::from(s.dim) <= bound);
                let equality = s.final_dir.length() == s.folds && s.length == lt;
                assert_eq!(i64::from(s.dim) == bound, equality);
                assert_eq!(s.signed, rs.signed_length(p.end()));
                assert_eq!(s.length, s.pos_cross + s.neg_cross + s.folds);
                assert_eq!(2 * s.dim as i64, s.length as i64 + s.signed + s.folds as i64);
                assert_eq!(*p.end(), rs.aff_from_parts(&s.weight, &s.final_dir));
            }
        }
    }
}

#[test]
fn unfolding_jumps_are_odd() {
    for (rs, lambdas) in sweep() {
        for lambda in &lambdas {
            for p in rs.enumerate_lambda_walks(lambda).unwrap() {
                let seq = rs.unfold_sequence(&p).unwrap();
                assert_eq!(seq.len(), p.stats().folds as usize + 1);
                assert_eq!(seq.last().unwrap(), &p);
                assert_eq!(seq[0].stats().folds, 0);
                for w in seq.windows(2) {
                    let d = w[1].stats().final_dir.length() as i64 - w[0].stats().final_dir.length() as i64 - 1;
                    assert!(d >= 0 && d % 2 == 0, "jump {d}");
                }
            }
        }
    }
}

#[test]
fn keys_are_the_saturated_set() {
    for (rs, lambdas) in sweep() {
        for lambda in &lambdas {
            let keys: BTreeSet<Coweight> = rs.enumerate_p_lambda(lambda).unwrap().into_keys().collect();
            assert_eq!(keys, saturated_oracle(&rs, lambda), "{} {lambda}", rs.cartan_type());
            assert_eq!(keys, rs.saturated_set(lambda).unwrap());
        }
    }
    let a3 = build_root_system("A3").unwrap();
    for lambda in [cw(&[1, 0, 1]), cw(&[0, 1, 0]), cw(&[2, 0, 0]), cw(&[1, 1, 0])] {
        let keys: BTreeSet<Coweight> = a3.enumerate_p_lambda(&lambda).unwrap().into_keys().collect();
        assert_eq!(keys, saturated_oracle(&a3, &lambda));
    }
}

#[test]
fn antidominant_walk_is_unique_at_its_weight() {
    for (rs, lambdas) in sweep() {
        let (w0, _) = rs.longest_element();
        for lambda in &lambdas {
            let sink = w0.act_coweight(lambda);
            let map = rs.enumerate_p_lambda(lambda).unwrap();
            let at = &map[&sink];
            assert_eq!(at.len(), 1);
            let p = rs.antidominant_walk(lambda).unwrap();
            assert_eq!(at[0], p);
            assert_eq!(p.dim(), 0);
            assert!(p.steps().iter().all(|s| s.kind == StepKind::NegCross));
            assert_eq!(*p.end(), rs.aff_translation(&sink));
            assert_eq!(p.len() as u32, rs.aff_length(&rs.aff_translation(lambda)));
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let rs = build_root_system("C2").unwrap();
    let lambda = cw(&[1, 1]);
    let a: Vec<String> = rs.enumerate_lambda_walks(&lambda).unwrap().iter().map(|p| p.to_text(&rs)).collect();
    let b: Vec<String> = rs.enumerate_lambda_walks(&lambda).unwrap().iter().map(|p| p.to_text(&rs)).collect();
    assert_eq!(a, b);
}

/// A reduced word found by taking the largest left descent first.
fn largest_first_word(rs: &RootSystem, x: &AffElem) -> AffineWord {
    let mut cur = x.clone();
    let mut letters = Vec::new();
    while rs.aff_length(&cur) > 0 {
        let l = rs.aff_length(&cur);
        let i = (0..=rs.rank())
            .rev()
            .find(|&i| rs.aff_length(&rs.aff_mul(&rs.aff_simple(i).unwrap(), &cur)) < l)
            .unwrap();
        letters.push(i);
        cur = rs.aff_mul(&rs.aff_simple(i).unwrap(), &cur);
    }
    AffineWord { letters, omega: cur }
}

#[test]
fn grouped_polynomial_does_not_depend_on_word_choice() {
    for (rs, lambdas) in sweep() {
        for lambda in &lambdas {
            let (m, _) = rs.min_double_coset_rep(lambda).unwrap();
            let alt_m = largest_first_word(&rs, &m);
            let mut alt = GroupAlgebraElem::zero();
            let mut counts: BTreeMap<Coweight, usize> = BTreeMap::new();
            for (u, _) in rs.coset_min_reps(lambda).unwrap() {
                let uw = largest_first_word(&rs, &rs.aff_from_parts(&Coweight::zero(rs.rank()), &u));
                let mut letters = uw.letters.clone();
                letters.extend(&alt_m.letters);
                let wtype = WalkType { letters, omega: alt_m.omega.clone() };
                for p in rs.enumerate(&wtype).unwrap() {
                    alt.add_term(p.weight().clone(), &rs.path_weight(lambda, &p));
                    *counts.entry(p.weight().clone()).or_default() += 1;
                }
            }
            assert_eq!(alt, rs.spherical_via_paths(lambda).unwrap());
            let canon: BTreeMap<Coweight, usize> = rs
                .enumerate_p_lambda(lambda)
                .unwrap()
                .into_iter()
                .map(|(k, v)| (k, v.len()))
                .collect();
            assert_eq!(counts, canon, "{} {lambda}", rs.cartan_type());
        }
    }
}

#[test]
fn raising_operators_on_the_sweep() {
    for (rs, lambdas) in sweep() {
        for lambda in &lambdas {
            let types = rs.lambda_types(lambda).unwrap();
            for p in rs.enumerate_lambda_walks(lambda).unwrap() {
                let mu = p.weight().clone();
                let maximal = i64::from(p.dim()) == rho_pair(&rs, lambda, &mu);
                for i in 1..=rs.rank() {
                    let crit = rs.critical(&p, i).unwrap();
                    let raised = rs.raise_with_case(&p, i).unwrap();
                    assert_eq!(crit.is_some(), raised.is_some());
                    let Some((q, case)) = raised else { continue };
                    let crit = crit.unwrap();
                    assert_eq!(case, crit.case());
                    assert_eq!(q.wtype(), p.wtype());
                    assert!(types.contains(q.wtype()));
                    // Revalidate from scratch: every fold positive.
                    let again = Walk::new(&rs, q.wtype().clone(), &q.folds()).unwrap();
                    assert_eq!(again, q);
                    assert_eq!(q.dim(), p.dim() + 1);
                    let cor = rs.simple_coroot(i);
                    let expected = match case {
                        RaiseCase::A => rs.aff_mul(&rs.aff_translation(&cor), p.end()),
                        RaiseCase::B => p.end().clone(),
                        RaiseCase::C => {
                            let k = crit.hyperplane.level;
                            let s = rs.aff_from_parts(&cor.scaled(-k), &rs.fin_simple(i).unwrap());
                            rs.aff_mul(&s, p.end())
                        }
                    };
                    assert_eq!(*q.end(), expected);
                    let up = &mu + &cor;
                    assert!(q.weight() == &mu || q.weight() == &up);
                    if maximal {
                        assert_eq!(q.weight(), &up);
                    }
                }
            }
        }
    }
}

#[test]
fn optimal_paths_for_every_weight() {
    for (rs, lambdas) in sweep() {
        let words = [rs.default_w0_word(), rs.alternate_w0_word()];
        for lambda in &lambdas {
            let map = rs.enumerate_p_lambda(lambda).unwrap();
            for mu in rs.saturated_set(lambda).unwrap() {
                for word in &words {
                    let (p, data) = rs.build_path_with_data(lambda, &mu, word).unwrap();
                    assert_eq!(p.weight(), &mu);
                    assert_eq!(i64::from(p.dim()), rho_pair(&rs, lambda, &mu));
                    assert!(map[&mu].contains(&p));
                    for (k, &i) in word.iter().enumerate() {
                        let expect = &data.mus[k] - &rs.simple_coroot(i).scaled(data.ms[k] as i64);
                        assert_eq!(data.mus[k + 1], expect);
                        assert!(rs.contains(lambda, &data.mus[k + 1]).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn saturation_axiom_and_invariance() {
    for (rs, lambdas) in sweep() {
        let elems = rs.weyl_group_elements().unwrap();
        for lambda in &lambdas {
            let pi = rs.saturated_set(lambda).unwrap();
            for mu in &pi {
                for w in &elems {
                    assert!(pi.contains(&w.act_coweight(mu)));
                }
                for a in rs.positive_roots() {
                    let c = rs.coroot_as_coweight(a);
                    let m = rs.pair(mu, a);
                    let (lo, hi) = (m.min(0), m.max(0));
                    for k in lo..=hi {
                        assert!(pi.contains(&(mu - &c.scaled(k))));
                    }
                }
                assert!(rs.contains(lambda, mu).unwrap());
            }
            // Weights just outside the polytope are excluded everywhere.
            let keys = rs.enumerate_p_lambda(lambda).unwrap();
            for mu in &pi {
                for i in 1..=rs.rank() {
                    let out = mu + &rs.simple_coroot(i).scaled(3 + lambda.0.iter().sum::<i64>());
                    if !pi.contains(&out) {
                        assert!(!rs.contains(lambda, &out).unwrap());
                        assert!(!keys.contains_key(&out));
                    }
                }
            }
        }
    }
}

#[test]
fn bound_and_raising_on_small_coordinates() {
    // Every lambda with coordinates <= 2 whose walk types fit the default
    // letter limit.
    for label in ["A2", "C2", "G2"] {
        let rs = build_root_system(label).unwrap();
        for a in 0..=2 {
            for b in 0..=2 {
                let lambda = cw(&[a, b]);
                let lt = rs.aff_length(&rs.aff_translation(&lambda));
                if rs.lambda_types(&lambda).is_err() {
                    assert!(lt as usize + rs.num_positive_roots() > rs.limits().max_letters);
                    continue;
                }
                for p in rs.enumerate_lambda_walks(&lambda).unwrap() {
                    let s = p.stats();
                    let bound = rho_pair(&rs, &lambda, &s.weight);
                    assert!(i64::from(s.dim) <= bound);
                    assert_eq!(i64::from(s.dim) == bound, s.final_dir.length() == s.folds && s.length == lt);
                    for i in 1..=rs.rank() {
                        if let Some(q) = rs.raise(&p, i).unwrap() {
                            assert_eq!(q.wtype(), p.wtype());
                            assert_eq!(Walk::new(&rs, q.wtype().clone(), &q.folds()).unwrap(), q);
                            assert_eq!(q.dim(), p.dim() + 1);
                        }
                    }
                }
            }
        }
    }
}
